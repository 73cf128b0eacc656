#pragma once

#include "bihom/report.hpp"
#include "bihom/structure.hpp"

namespace bihom {

// Every checker quantifies the defining identities over tuples of basis
// elements, which is complete by multilinearity, and reports each failing
// tuple together with the residual vector.

Report check_even(const EvenMap& map, const CheckOptions& opt = {});

// alpha beta = beta alpha, plus multiplicativity of alpha and beta over
// every product of the structure.
Report check_structure_compat(const Structure& s, const CheckOptions& opt = {});

// mu(alpha(a), mu(b, c)) = mu(mu(a, b), beta(c)); includes compat.
Report check_bihom_associative(const Structure& s, const CheckOptions& opt = {});

// BiHom super skew-symmetry and the BiHom super-Jacobi identity.
Report check_bihom_lie(const Structure& s, const CheckOptions& opt = {});

// (beta(x) o alpha(y)) o beta(z) - alphabeta(x) o (alpha(y) o z), super-
// symmetrized in x, y.
Report check_bihom_prelie(const Structure& s, const CheckOptions& opt = {});

// The two L-dendriform identities; includes compat for both products.
Report check_bihom_ldendriform(const Structure& s, const CheckOptions& opt = {});

// Builds the twisted supercommutator bracket and checks the BiHom
// super-Jacobi identity for it. Needs alpha, beta invertible.
Report check_lie_admissible(const Structure& s, const CheckOptions& opt = {});

// Dispatch on s.variety.
Report check_variety(const Structure& s, const CheckOptions& opt = {});

// c'(x, y) = op(x, y) - (-1)^{|x||y|} op(twist_left(y), twist_right(x)).
// With both twists the identity this is the plain supercommutator; with
// alpha^{-1}beta and alpha beta^{-1} it is the twisted one.
BilinearOp commutator_bilinear(const BilinearOp& op, const MatrixQ& twist_left,
                               const MatrixQ& twist_right, const std::string& name);

} // namespace bihom
