#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "supergrade/algebra.hpp"

namespace supergrade {

/// Label of index i in I = {1..m, 1'..n'} ("3" or "2'").
std::string index_label(std::size_t i, std::size_t m);
/// Label of the matrix unit e_ij of gl(m,n), e.g. "e[1,2']".
std::string unit_label(std::size_t i, std::size_t j, std::size_t m);

/// gl(m,n) on the lexicographically ordered matrix units. Provenance holds
/// "z" (identity), "cartan.k" (diagonal units) and, when m = n, the cover
/// images "cover.e[i,j]" and the Cartan bases "h.k" / "hprime.k".
LieSuperalgebra construct_gl(std::size_t m, std::size_t n);

/// Supertrace-zero subalgebra of gl(m,n) on its echelon basis.
LieSuperalgebra construct_sl(std::size_t m, std::size_t n);

/// psl(n+1,n+1) = sl(n+1,n+1)/<z> with the projection from sl.
Quotient construct_psl(std::size_t n);

/// kind: "field", "dual_numbers", "grassmann" (params {k}),
/// "matrix_super" (params {p,q}).
AssocSuperalgebra construct_assoc(const std::string& kind, const std::vector<std::size_t>& params = {});

/// [gl(m,n) (x) A, gl(m,n) (x) A] as a standalone algebra.
LieSuperalgebra construct_sl_A(std::size_t m, std::size_t n, const AssocSuperalgebra& a);

/// kind: "mplus", "jp", "jq" (n >= 1) or "m11".
JordanSuperalgebra construct_jordan(const std::string& kind, std::size_t n = 1);

/// Supertrace of an element of gl(m,n).
Rational supertrace(const LieSuperalgebra& gl, const Vector& x);

}  // namespace supergrade
