#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supergrade/algebra.hpp"
#include "supergrade/roots.hpp"

namespace supergrade {

/// Bilinear form phi(b_i, b_j) with values in the trivial module.
struct Cocycle2 {
    int parity = 0;
    Matrix form;
};

/// Basis of Z^2 in the given parity: super-skew, parity-homogeneous forms
/// satisfying the cyclic cocycle identity.
std::vector<Cocycle2> cocycle_space(const LieSuperalgebra& l, int parity);
/// Echelon basis of B^2: forms f([x,y]) for f of the given parity.
std::vector<Cocycle2> coboundary_space(const LieSuperalgebra& l, int parity);
/// Cocycles completing B^2 to Z^2, chosen in Z^2 basis order.
std::vector<Cocycle2> h2_basis(const LieSuperalgebra& l, int parity);
std::pair<std::size_t, std::size_t> h2_dims(const LieSuperalgebra& l);

/// Checks super-skewness, parity and the cocycle identity of one form.
std::optional<std::string> check_cocycle(const LieSuperalgebra& l, const Cocycle2& c);

struct CentralExtension {
    LieSuperalgebra base;
    std::vector<Cocycle2> cocycles;  // relative to the section chosen for the kernel basis
    LieSuperalgebra extended;
    Matrix projection;  // base dim x extended dim
};

/// L + sum c_s with [x,y]^ = [x,y] + sum phi_s(x,y) c_s, even cocycles first.
CentralExtension uce(const LieSuperalgebra& l);

/// Wraps a surjection with central kernel, e.g. sl(3,3) -> psl(3,3). The
/// cocycles are read off a section given by least-index preimages.
CentralExtension central_extension(const LieSuperalgebra& extended, const LieSuperalgebra& base,
                                   const Matrix& projection);

/// Homomorphism and central kernel on all basis pairs.
std::optional<std::string> check_central_extension(const CentralExtension& e);

struct KernelCheck {
    bool pass = false;
    std::size_t kernel_dim = 0;
    std::size_t roots_checked = 0;
    std::string detail;
};

/// Decomposes the extension against preimages of `cartan` and checks that
/// the kernel sits in weight 0 and each root space maps isomorphically.
KernelCheck cover_kernel_check(const CentralExtension& e, const std::vector<Vector>& cartan);

struct Fingerprint {
    std::size_t even_dim = 0;
    std::size_t odd_dim = 0;
    std::vector<std::size_t> derived_series;  // dims of L, [L,L], ... until stable
    std::size_t center_dim = 0;
    std::size_t h2_even = 0;
    std::size_t h2_odd = 0;
    /// Sorted (even, odd) dims of the nonzero root spaces, when a Cartan is given.
    std::optional<std::vector<std::pair<std::size_t, std::size_t>>> root_dims;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const LieSuperalgebra& l, const std::vector<Vector>* cartan = nullptr);

enum class Isogeny { equal, different, inconclusive };
std::string to_string(Isogeny v);

struct IsogenyResult {
    Isogeny verdict = Isogeny::inconclusive;
    Fingerprint first;   // of l1 / Z(l1)
    Fingerprint second;  // of l2 / Z(l2)
    std::string detail;
};

/// Compares fingerprints of the central quotients. Only perfect inputs get
/// a verdict other than inconclusive.
IsogenyResult isogenous(const LieSuperalgebra& l1, const LieSuperalgebra& l2);

}  // namespace supergrade
