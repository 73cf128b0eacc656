#pragma once

#include <string>
#include <vector>

#include "bihom/linalg.hpp"

namespace bihom {

struct CheckOptions {
  int witness_cap = 10;
};

// A single counterexample: the basis index tuple that was substituted into
// an identity, plus the nonzero residual in coordinates.
struct Witness {
  std::vector<Index> where;
  VectorQ residual;
};

struct CheckItem {
  std::string name;
  bool pass = true;
  long fail_count = 0; // total failures seen, even past the witness cap
  std::vector<Witness> witnesses;
};

struct Report {
  std::string subject;
  std::vector<CheckItem> items;
  std::vector<std::string> notes;

  bool pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  const CheckItem* find(std::string_view name) const;
};

// Accumulates witnesses for one identity, capped.
class ItemRecorder {
public:
  ItemRecorder(std::string name, int cap) : cap_(cap) { item_.name = std::move(name); }

  void record(std::vector<Index> where, const VectorQ& residual) {
    if (is_zero(residual)) return;
    item_.pass = false;
    ++item_.fail_count;
    if (static_cast<int>(item_.witnesses.size()) < cap_)
      item_.witnesses.push_back(Witness{std::move(where), residual});
  }

  CheckItem take() { return std::move(item_); }

private:
  CheckItem item_;
  int cap_;
};

std::string to_text(const Report& report);
std::string to_json(const Report& report);

} // namespace bihom
