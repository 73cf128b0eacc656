#include "bihom/report.hpp"

#include <sstream>

#include <json.hpp>

#include "bihom/rational.hpp"

namespace bihom {

const CheckItem* Report::find(std::string_view name) const {
  for (const auto& it : items)
    if (it.name == name) return &it;
  return nullptr;
}

namespace {

std::string residual_str(const VectorQ& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v(i));
  }
  return s + ")";
}

std::string tuple_str(const std::vector<Index>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

} // namespace

std::string to_text(const Report& report) {
  std::ostringstream os;
  os << (report.pass() ? "PASS" : "FAIL") << "  " << report.subject << "\n";
  for (const auto& item : report.items) {
    os << "  [" << (item.pass ? "ok" : "FAIL") << "] " << item.name;
    if (!item.pass) os << "  (" << item.fail_count << " failing tuple(s))";
    os << "\n";
    for (const auto& w : item.witnesses)
      os << "       at " << tuple_str(w.where) << " residual " << residual_str(w.residual) << "\n";
  }
  for (const auto& note : report.notes) os << "  note: " << note << "\n";
  return os.str();
}

std::string to_json(const Report& report) {
  nlohmann::json j;
  j["subject"] = report.subject;
  j["pass"] = report.pass();
  j["items"] = nlohmann::json::array();
  for (const auto& item : report.items) {
    nlohmann::json ji;
    ji["name"] = item.name;
    ji["pass"] = item.pass;
    ji["fail_count"] = item.fail_count;
    ji["witnesses"] = nlohmann::json::array();
    for (const auto& w : item.witnesses) {
      nlohmann::json jw;
      jw["indices"] = w.where;
      std::vector<std::string> res;
      for (Index i = 0; i < w.residual.size(); ++i) res.push_back(to_string(w.residual(i)));
      jw["residual"] = res;
      ji["witnesses"].push_back(jw);
    }
    j["items"].push_back(ji);
  }
  j["notes"] = report.notes;
  return j.dump(2);
}

} // namespace bihom
