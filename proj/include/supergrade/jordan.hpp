#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supergrade/algebra.hpp"
#include "supergrade/roots.hpp"

namespace supergrade {

/// Same space with X.Y = 1/2 (XY + (-1)^{|X||Y|} YX).
JordanSuperalgebra symmetrized(const AssocSuperalgebra& a);
StructureTable symmetrized_table(const StructureTable& assoc);

struct PeirceDecomposition {
    Vector e1;
    std::vector<Vector> j0;
    std::vector<Vector> j1;
    std::vector<Vector> j2;
};

PeirceDecomposition peirce(const JordanSuperalgebra& j, const Vector& e1);
/// J2.J0 = 0 and (J2, J, J0) = 0; returns the first violation.
std::optional<std::string> check_peirce_laws(const JordanSuperalgebra& j, const PeirceDecomposition& p);

/// T = Jbar + T(0) + J with basis order T(-1), T(0), T(1).
struct TKKAlgebra {
    LieSuperalgebra lie;
    std::size_t jdim = 0;
    std::size_t inner_dim = 0;
    /// Echelon basis of T(0) as flattened operator pairs (action on J, then
    /// action on Jbar), each block row-major.
    std::vector<Vector> inner_part;
    ThreeGrading parts;
    Vector e;
    Vector f;
    Vector h;

    [[nodiscard]] Vector plus(const Vector& a) const;   // a in T(1)
    [[nodiscard]] Vector minus(const Vector& a) const;  // abar in T(-1)
};

TKKAlgebra tkk(const JordanSuperalgebra& j);

/// J = L(1) for ad [e,f] with x.y = 1/2 [[x,f],y] and unit e.
JordanSuperalgebra jordan_from_3grading(const LieSuperalgebra& l, const Vector& e, const Vector& f);

struct M11Certificate {
    Vector e1;
    Vector e2;
    Vector x;
    Vector y;
    std::vector<std::pair<std::string, bool>> relations;
    [[nodiscard]] bool pass() const;
};

M11Certificate certify_m11(const JordanSuperalgebra& j, const Vector& e1, const Vector& e2, const Vector& x,
                           const Vector& y);

/// Images of the off-diagonal units of psl(2,2) in tkk(J) determined by a
/// copy {e1,e2,x,y} of M_{1,1}^+ in J (x -> e_{1 2'}, y -> 2 e_{1' 2}).
CoverEmbedding tkk_m11_embedding(const TKKAlgebra& t, const M11Certificate& cert);

}  // namespace supergrade
