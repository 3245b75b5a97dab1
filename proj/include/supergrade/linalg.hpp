#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "supergrade/rational.hpp"

namespace supergrade {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] Vector row(std::size_t r) const;
    [[nodiscard]] Vector column(std::size_t c) const;
    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Vector helpers.
[[nodiscard]] bool is_zero(const Vector& v);
[[nodiscard]] Vector zero_vector(std::size_t n);
[[nodiscard]] Vector unit_vector(std::size_t n, std::size_t i);
void axpy(Vector& y, const Rational& a, const Vector& x);  // y += a*x
[[nodiscard]] Vector scaled(const Vector& x, const Rational& a);
[[nodiscard]] Vector add(const Vector& a, const Vector& b);
[[nodiscard]] Vector sub(const Vector& a, const Vector& b);

/// Incrementally maintained, fully reduced row-echelon basis of a subspace
/// of Q^cols. Rows are stored sparsely; each has leading entry 1 and zeros
/// in every other pivot column.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t cols);

    /// Adds v to the span. Returns true when the rank grew.
    bool insert(Vector v);
    /// Residual of v after elimination against the current rows.
    [[nodiscard]] Vector reduce(Vector v) const;
    [[nodiscard]] bool contains(const Vector& v) const;

    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] std::size_t rank() const { return rows_.size(); }
    /// Pivot columns in increasing order.
    [[nodiscard]] std::vector<std::size_t> pivots() const;
    /// Dense rows ordered by pivot column.
    [[nodiscard]] std::vector<Vector> basis() const;
    /// Null space of the row span: one vector per free column (free entry 1).
    [[nodiscard]] std::vector<Vector> null_space() const;

private:
    struct SparseRow {
        std::vector<std::uint32_t> idx;
        std::vector<Rational> val;
        [[nodiscard]] const Rational* find(std::size_t col) const;
    };
    static void subtract_multiple(Vector& v, const Rational& c, const SparseRow& row);
    static SparseRow combine(const SparseRow& a, const Rational& c, const SparseRow& b);  // a - c*b
    [[nodiscard]] Vector densify(const SparseRow& r) const;

    std::size_t cols_;
    std::vector<SparseRow> rows_;
    std::vector<std::size_t> row_pivot_;
    std::vector<std::int64_t> pivot_row_;
};

/// Coordinates with respect to a fixed list of linearly independent vectors.
class Coordinatizer {
public:
    explicit Coordinatizer(const std::vector<Vector>& basis, std::size_t ambient_dim);
    /// Coordinates of v, or nullopt when v is outside the span.
    [[nodiscard]] std::optional<Vector> coords(const Vector& v) const;
    [[nodiscard]] std::size_t size() const { return k_; }

private:
    std::size_t n_;
    std::size_t k_;
    RowEchelon ech_;
};

struct RrefResult {
    Matrix form;
    std::vector<std::size_t> pivots;
    [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

RrefResult rref(const Matrix& m);
std::vector<Vector> kernel(const Matrix& m);
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

/// Characteristic polynomial det(tI - m), coefficients from t^0 upward.
std::vector<Rational> charpoly(const Matrix& m);
/// Evaluates a polynomial given by ascending coefficients.
Rational poly_eval(const std::vector<Rational>& coeffs, const Rational& x);

struct Eigenvalue {
    Rational value;
    std::size_t multiplicity;
    friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

/// All eigenvalues of m (descending) with algebraic multiplicities.
/// Throws NonSplitSpectrum when some eigenvalue is not rational.
std::vector<Eigenvalue> rational_eigenvalues(const Matrix& m);

using BilinearMap = std::function<Vector(const Vector&, const Vector&)>;

/// Smallest subspace of Q^dim containing `seed` and closed under `product`,
/// returned as its reduced row-echelon basis.
std::vector<Vector> span_closure(const std::vector<Vector>& seed, const BilinearMap& product, std::size_t dim);

}  // namespace supergrade
