#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supergrade/linalg.hpp"

namespace supergrade {

/// Z2-graded vector space with a fixed basis.
struct SuperSpace {
    std::vector<std::uint8_t> parity;
    std::vector<std::string> labels;  // empty, or one distinct label per basis index

    [[nodiscard]] std::size_t dim() const { return parity.size(); }
    [[nodiscard]] std::size_t even_dim() const;
    [[nodiscard]] std::size_t odd_dim() const;
    [[nodiscard]] std::string label(std::size_t i) const;
};

enum class Kind { lie, assoc, jordan };

std::string to_string(Kind k);
Kind kind_from_string(const std::string& s);

struct Term {
    std::uint32_t k;
    Rational c;
};

/// Construction metadata: a name, ordered parameters and named elements
/// (central element, Cartan bases, embedding images...).
struct Provenance {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::pair<std::string, Vector>> elements;

    [[nodiscard]] std::optional<std::string> param(const std::string& key) const;
    [[nodiscard]] const Vector* element(const std::string& key) const;
    /// Elements whose name starts with `prefix`, in insertion order.
    [[nodiscard]] std::vector<Vector> elements_with_prefix(const std::string& prefix) const;
    void set_element(const std::string& key, Vector v);
};

/// Sparse structure constants b_i * b_j = sum_k c_ij^k b_k.
class StructureTable {
public:
    StructureTable() = default;
    StructureTable(SuperSpace space, Kind kind);

    [[nodiscard]] const SuperSpace& space() const { return space_; }
    [[nodiscard]] SuperSpace& space() { return space_; }
    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] std::size_t dim() const { return space_.dim(); }
    [[nodiscard]] int parity(std::size_t i) const { return space_.parity[i]; }

    /// Adds c to c_ij^k; entries that cancel are removed.
    void add(std::size_t i, std::size_t j, std::size_t k, const Rational& c);
    /// Sets the full product b_i * b_j from a dense vector.
    void set_product(std::size_t i, std::size_t j, const Vector& v);
    [[nodiscard]] const std::vector<Term>& product(std::size_t i, std::size_t j) const { return entries_[i * dim() + j]; }
    [[nodiscard]] Vector product_vector(std::size_t i, std::size_t j) const;

    [[nodiscard]] Vector multiply(const Vector& x, const Vector& y) const;
    /// b_i * y
    [[nodiscard]] Vector left_basis(std::size_t i, const Vector& y) const;
    /// x * b_j
    [[nodiscard]] Vector right_basis(const Vector& x, std::size_t j) const;

    [[nodiscard]] const std::optional<Vector>& unit() const { return unit_; }
    void set_unit(std::optional<Vector> u) { unit_ = std::move(u); }

    [[nodiscard]] const Provenance& provenance() const { return prov_; }
    [[nodiscard]] Provenance& provenance() { return prov_; }

    /// Number of nonzero structure constants.
    [[nodiscard]] std::size_t nnz() const;
    /// Checks index ranges and parity homogeneity of every entry.
    void check_invariants() const;

    friend bool operator==(const StructureTable& a, const StructureTable& b);

private:
    SuperSpace space_;
    Kind kind_ = Kind::lie;
    std::vector<std::vector<Term>> entries_;
    std::optional<Vector> unit_;
    Provenance prov_;
};

/// Wrapper holding a table that passed the validator for its kind.
template <Kind K>
class Validated {
public:
    [[nodiscard]] const StructureTable& table() const { return table_; }
    [[nodiscard]] const Provenance& provenance() const { return table_.provenance(); }
    [[nodiscard]] const SuperSpace& space() const { return table_.space(); }
    [[nodiscard]] std::size_t dim() const { return table_.dim(); }
    [[nodiscard]] Vector product(const Vector& x, const Vector& y) const { return table_.multiply(x, y); }

    /// Only for tables that already passed the validator.
    static Validated trusted(StructureTable t) { return Validated(std::move(t)); }

private:
    explicit Validated(StructureTable t) : table_(std::move(t)) {}
    StructureTable table_;
};

using LieSuperalgebra = Validated<Kind::lie>;
using AssocSuperalgebra = Validated<Kind::assoc>;
using JordanSuperalgebra = Validated<Kind::jordan>;

/// (-1)^(a*b) for parities a, b.
inline int koszul(int a, int b) { return (a & b & 1) ? -1 : 1; }

/// Parity of a homogeneous vector (0 for the zero vector), nullopt if mixed.
std::optional<int> homogeneous_parity(const SuperSpace& s, const Vector& v);
/// Human-readable linear combination of labelled basis vectors.
std::string format_combination(const SuperSpace& s, const Vector& v);

LieSuperalgebra validate_lie(StructureTable t);
AssocSuperalgebra validate_assoc(StructureTable t);
JordanSuperalgebra validate_jordan(StructureTable t);

Vector bracket(const LieSuperalgebra& l, const Vector& x, const Vector& y);
Matrix ad_matrix(const LieSuperalgebra& l, const Vector& x);
/// Matrix of y -> x*y (left multiplication).
Matrix left_multiplication(const StructureTable& t, const Vector& x);

std::vector<Vector> center(const StructureTable& t);
std::vector<Vector> derived_subalgebra(const LieSuperalgebra& l);
bool is_perfect(const LieSuperalgebra& l);

struct Quotient {
    LieSuperalgebra algebra;
    Matrix projection;  // new dim x old dim
};

/// Quotient by a central graded subspace; complement spanned by the basis
/// vectors that are not pivots of the subspace's echelon form.
Quotient quotient_central(const LieSuperalgebra& l, const std::vector<Vector>& z);

/// Standalone table of the subalgebra spanned by `basis` (linearly
/// independent, homogeneous, closed). Provenance elements lying in the span
/// are carried over in the new coordinates.
StructureTable induced_table(const StructureTable& t, const std::vector<Vector>& basis);

/// Lie superalgebra gl(m,n) (x) A with the supercommutator bracket of
/// M_{m,n} (x) A. Basis index (i*(m+n)+j)*dim A + s.
LieSuperalgebra tensor_lie_assoc(const LieSuperalgebra& gl, const AssocSuperalgebra& a);

std::vector<Vector> subalgebra_from_generators(const LieSuperalgebra& l, const std::vector<Vector>& gens);

/// Echelon basis of span(vs).
std::vector<Vector> echelon_basis(const std::vector<Vector>& vs, std::size_t dim);

}  // namespace supergrade
