#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supergrade/algebra.hpp"

namespace supergrade {

/// Values alpha(h_i) on a chosen Cartan basis.
using Weight = std::vector<Rational>;

std::string format_weight(const Weight& w);

struct WeightComponent {
    Weight weight;
    std::size_t even_dim = 0;
    std::size_t odd_dim = 0;
    std::vector<Vector> basis;  // echelon basis, homogeneous vectors
};

struct RootDatum {
    std::vector<Vector> cartan;
    std::vector<WeightComponent> components;  // nonzero weights, lexicographic
    WeightComponent zero;

    [[nodiscard]] const WeightComponent* find(const Weight& w) const;
    [[nodiscard]] std::size_t total_dim() const;
};

/// Simultaneous rational eigenspace decomposition of ad(h_1), ..., ad(h_r).
RootDatum weight_decomposition(const LieSuperalgebra& l, const std::vector<Vector>& cartan);

struct RootMultiplicity {
    std::size_t even = 0;
    std::size_t odd = 0;
    friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

/// Nonzero weights of psl(n+1,n+1) against its canonical Cartan basis
/// h_k = e_kk - e_{k+1,k+1} (unbarred k, then barred k), with the dimension
/// of each root space.
std::map<Weight, RootMultiplicity> expected_ann_roots(std::size_t n);

/// Images in L of the off-diagonal matrix units e_ij (i != j, indices
/// 0..2n+1 with n+1.. barred) of psl(n+1,n+1).
struct CoverEmbedding {
    std::size_t n = 0;
    std::map<std::pair<std::size_t, std::size_t>, Vector> images;

    [[nodiscard]] const Vector& image(std::size_t i, std::size_t j) const;
    /// [phi(e_{k,k+1}), phi(e_{k+1,k})] for unbarred k < n and barred k.
    [[nodiscard]] std::vector<Vector> cartan(const LieSuperalgebra& l) const;
    /// Image of the identity matrix z, expressed through consecutive brackets.
    [[nodiscard]] Vector z_image(const LieSuperalgebra& l) const;
};

/// Reads "cover.e[i,j]" provenance elements. Throws BadParams when missing.
CoverEmbedding cover_from_provenance(const LieSuperalgebra& l, std::size_t n);

struct ConditionResult {
    bool pass = false;
    std::string detail;
};

struct GradingReport {
    bool graded = false;
    ConditionResult condition1;
    ConditionResult condition2;
    ConditionResult condition3;
    std::optional<std::size_t> matched_n;  // A(n,n)
    std::size_t cover_dim = 0;
    std::size_t cover_kernel_dim = 0;
    RootDatum datum;
};

GradingReport verify_delta_graded(const LieSuperalgebra& l, const CoverEmbedding& cover);

struct ZCheck {
    bool pass = false;
    Vector z_image;
    std::optional<std::size_t> witness_index;  // basis element b with [z,b] != 0
    Vector witness_value;
};

ZCheck check_z_trivial(const LieSuperalgebra& l, const CoverEmbedding& cover);
/// Same check for an explicitly given image of z.
ZCheck check_z_trivial(const LieSuperalgebra& l, const Vector& z_image);

struct ThreeGrading {
    std::vector<Vector> minus;  // L(-1)
    std::vector<Vector> zero;   // L(0)
    std::vector<Vector> plus;   // L(1)
};

std::pair<std::size_t, std::size_t> graded_dims(const SuperSpace& s, const std::vector<Vector>& basis);

/// Height grading: L(1) collects the root spaces of eps_i - eps_jbar,
/// L(-1) those of eps_ibar - eps_j. The datum must be taken against the
/// canonical Cartan of A(n,n) with n >= 2.
ThreeGrading three_grading_height(const LieSuperalgebra& l, const RootDatum& datum);
/// Eigenspaces of ad h for eigenvalues -2, 0, 2.
ThreeGrading three_grading_sl2(const LieSuperalgebra& l, const Vector& h);
/// Throws NotThreeGraded unless [L(i),L(j)] lies in L(i+j) (zero outside -1..1).
void check_three_grading(const LieSuperalgebra& l, const ThreeGrading& g);

/// Exhaustive check [L_a, L_b] in L_{a+b}; returns a description of the
/// first violation.
std::optional<std::string> check_grading_closure(const LieSuperalgebra& l, const RootDatum& datum);

}  // namespace supergrade
