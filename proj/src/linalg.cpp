#include "supergrade/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "supergrade/errors.hpp"

namespace supergrade {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("Matrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows)
{
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw DimensionMismatch("Matrix::from_columns: ragged columns");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

Vector operator*(const Matrix& a, const Vector& v)
{
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector product: size mismatch");
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (!v[k].is_zero() && !a(i, k).is_zero()) out[i] += a(i, k) * v[k];
        }
    }
    return out;
}

bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v(n);
    v.at(i) = 1;
    return v;
}

void axpy(Vector& y, const Rational& a, const Vector& x)
{
    if (y.size() != x.size()) throw DimensionMismatch("axpy: size mismatch");
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero()) y[i] += a * x[i];
    }
}

Vector scaled(const Vector& x, const Rational& a)
{
    Vector out(x.size());
    if (a.is_zero()) return out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero()) out[i] = a * x[i];
    }
    return out;
}

Vector add(const Vector& a, const Vector& b)
{
    Vector out = a;
    axpy(out, 1, b);
    return out;
}

Vector sub(const Vector& a, const Vector& b)
{
    Vector out = a;
    axpy(out, -1, b);
    return out;
}

// ---------------------------------------------------------------------------
// RowEchelon

RowEchelon::RowEchelon(std::size_t cols) : cols_(cols), pivot_row_(cols, -1) {}

const Rational* RowEchelon::SparseRow::find(std::size_t col) const
{
    auto it = std::lower_bound(idx.begin(), idx.end(), static_cast<std::uint32_t>(col));
    if (it == idx.end() || *it != col) return nullptr;
    return &val[static_cast<std::size_t>(it - idx.begin())];
}

void RowEchelon::subtract_multiple(Vector& v, const Rational& c, const SparseRow& row)
{
    for (std::size_t t = 0; t < row.idx.size(); ++t) v[row.idx[t]] -= c * row.val[t];
}

RowEchelon::SparseRow RowEchelon::combine(const SparseRow& a, const Rational& c, const SparseRow& b)
{
    SparseRow out;
    out.idx.reserve(a.idx.size() + b.idx.size());
    out.val.reserve(a.idx.size() + b.idx.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.idx.size() || j < b.idx.size()) {
        if (j == b.idx.size() || (i < a.idx.size() && a.idx[i] < b.idx[j])) {
            out.idx.push_back(a.idx[i]);
            out.val.push_back(a.val[i]);
            ++i;
        } else if (i == a.idx.size() || b.idx[j] < a.idx[i]) {
            out.idx.push_back(b.idx[j]);
            out.val.push_back(-(c * b.val[j]));
            ++j;
        } else {
            Rational x = a.val[i] - c * b.val[j];
            if (!x.is_zero()) {
                out.idx.push_back(a.idx[i]);
                out.val.push_back(std::move(x));
            }
            ++i;
            ++j;
        }
    }
    return out;
}

Vector RowEchelon::densify(const SparseRow& r) const
{
    Vector v(cols_);
    for (std::size_t t = 0; t < r.idx.size(); ++t) v[r.idx[t]] = r.val[t];
    return v;
}

Vector RowEchelon::reduce(Vector v) const
{
    if (v.size() != cols_) throw DimensionMismatch("RowEchelon::reduce: size mismatch");
    // Rows are fully reduced, so one sweep over the pivot columns suffices.
    for (std::size_t c = 0; c < cols_; ++c) {
        if (pivot_row_[c] < 0 || v[c].is_zero()) continue;
        Rational coeff = v[c];
        subtract_multiple(v, coeff, rows_[static_cast<std::size_t>(pivot_row_[c])]);
    }
    return v;
}

bool RowEchelon::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool RowEchelon::insert(Vector v)
{
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < cols_ && v[p].is_zero()) ++p;
    if (p == cols_) return false;
    Rational inv = Rational(1) / v[p];
    SparseRow row;
    for (std::size_t c = p; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        row.idx.push_back(static_cast<std::uint32_t>(c));
        row.val.push_back(v[c] * inv);
    }
    for (auto& other : rows_) {
        const Rational* hit = other.find(p);
        if (hit != nullptr) {
            Rational c = *hit;
            other = combine(other, c, row);
        }
    }
    pivot_row_[p] = static_cast<std::int64_t>(rows_.size());
    row_pivot_.push_back(p);
    rows_.push_back(std::move(row));
    return true;
}

std::vector<std::size_t> RowEchelon::pivots() const
{
    std::vector<std::size_t> out = row_pivot_;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vector> RowEchelon::basis() const
{
    std::vector<Vector> out;
    out.reserve(rows_.size());
    for (std::size_t c = 0; c < cols_; ++c) {
        if (pivot_row_[c] >= 0) out.push_back(densify(rows_[static_cast<std::size_t>(pivot_row_[c])]));
    }
    return out;
}

std::vector<Vector> RowEchelon::null_space() const
{
    std::vector<Vector> out;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (pivot_row_[f] >= 0) continue;
        Vector v(cols_);
        v[f] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational* hit = rows_[r].find(f);
            if (hit != nullptr) v[row_pivot_[r]] = -*hit;
        }
        out.push_back(std::move(v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coordinatizer: rows [b_i | e_i]; reducing [v | 0] leaves [0 | -coords].

Coordinatizer::Coordinatizer(const std::vector<Vector>& basis, std::size_t ambient_dim)
    : n_(ambient_dim), k_(basis.size()), ech_(ambient_dim + basis.size())
{
    for (std::size_t i = 0; i < k_; ++i) {
        if (basis[i].size() != n_) throw DimensionMismatch("Coordinatizer: basis vector has wrong length");
        Vector row(n_ + k_);
        std::copy(basis[i].begin(), basis[i].end(), row.begin());
        row[n_ + i] = 1;
        if (!ech_.insert(std::move(row))) throw DimensionMismatch("Coordinatizer: basis is linearly dependent");
    }
}

std::optional<Vector> Coordinatizer::coords(const Vector& v) const
{
    if (v.size() != n_) throw DimensionMismatch("Coordinatizer: vector has wrong length");
    Vector row(n_ + k_);
    std::copy(v.begin(), v.end(), row.begin());
    row = ech_.reduce(std::move(row));
    for (std::size_t c = 0; c < n_; ++c) {
        if (!row[c].is_zero()) return std::nullopt;
    }
    Vector out(k_);
    for (std::size_t i = 0; i < k_; ++i) out[i] = -row[n_ + i];
    return out;
}

// ---------------------------------------------------------------------------

RrefResult rref(const Matrix& m)
{
    RowEchelon ech(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r));
    RrefResult out{Matrix(m.rows(), m.cols()), ech.pivots()};
    auto rows = ech.basis();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out.form(r, c) = rows[r][c];
    }
    return out;
}

std::vector<Vector> kernel(const Matrix& m)
{
    RowEchelon ech(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r));
    return ech.null_space();
}

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b)
{
    if (b.size() != a.rows()) throw DimensionMismatch("solve_linear: rhs length differs from row count");
    const std::size_t n = a.cols();
    RowEchelon ech(n + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Vector row = a.row(r);
        row.push_back(b[r]);
        ech.insert(std::move(row));
    }
    Vector x(n);
    for (const auto& row : ech.basis()) {
        std::size_t p = 0;
        while (row[p].is_zero()) ++p;
        if (p == n) return std::nullopt;
        x[p] = row[n];
    }
    return x;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial: Hessenberg reduction followed by the standard
// three-term recurrence on leading principal minors.

std::vector<Rational> charpoly(const Matrix& m)
{
    if (m.rows() != m.cols()) throw DimensionMismatch("charpoly: matrix is not square");
    const std::size_t n = m.rows();
    Matrix h = m;
    for (std::size_t col = 0; col + 2 < n; ++col) {
        std::size_t piv = col + 1;
        while (piv < n && h(piv, col).is_zero()) ++piv;
        if (piv == n) continue;
        if (piv != col + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(col + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, col + 1));
        }
        const Rational pivot = h(col + 1, col);
        for (std::size_t j = col + 2; j < n; ++j) {
            if (h(j, col).is_zero()) continue;
            Rational u = h(j, col) / pivot;
            for (std::size_t c = 0; c < n; ++c) {
                if (!h(col + 1, c).is_zero()) h(j, c) -= u * h(col + 1, c);
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (!h(r, j).is_zero()) h(r, col + 1) += u * h(r, j);
            }
        }
    }

    // p[k] = char poly of the leading k x k block, ascending coefficients.
    std::vector<std::vector<Rational>> p(n + 1);
    p[0] = {Rational(1)};
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t mm = k - 1;  // 0-based index of the new row/column
        std::vector<Rational> next(k + 1);
        for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
            next[d + 1] += p[k - 1][d];
            next[d] -= h(mm, mm) * p[k - 1][d];
        }
        Rational t = 1;
        for (std::size_t i = 1; i < k; ++i) {
            t *= h(mm - i + 1, mm - i);
            if (t.is_zero()) break;
            Rational coeff = t * h(mm - i, mm);
            if (coeff.is_zero()) continue;
            const auto& prev = p[k - i - 1];
            for (std::size_t d = 0; d < prev.size(); ++d) next[d] -= coeff * prev[d];
        }
        p[k] = std::move(next);
    }
    return p[n];
}

Rational poly_eval(const std::vector<Rational>& coeffs, const Rational& x)
{
    Rational acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

// Largest integer search window for eigenvalues of the scaled matrix.
constexpr long kEigenSearchLimit = 4'000'000;

mpz_class eval_int(const std::vector<mpz_class>& q, const mpz_class& x)
{
    mpz_class acc = 0;
    for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Divides q by (t - r) in place; q(r) must be 0.
void deflate(std::vector<mpz_class>& q, const mpz_class& r)
{
    const std::size_t deg = q.size() - 1;
    std::vector<mpz_class> out(deg);
    mpz_class carry = 0;
    for (std::size_t d = deg; d-- > 0;) {
        carry = q[d + 1] + carry * r;
        out[d] = carry;
    }
    q = std::move(out);
}

}  // namespace

std::vector<Eigenvalue> rational_eigenvalues(const Matrix& m)
{
    if (m.rows() != m.cols()) throw DimensionMismatch("rational_eigenvalues: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return {};

    // Scale to an integer matrix: its rational eigenvalues are integers.
    mpz_class scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            mpz_class d = m(r, c).denominator();
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
        }
    }
    const Rational scale_q{mpq_class(scale)};
    Matrix ms(n, n);
    mpz_class bound = 0;
    for (std::size_t r = 0; r < n; ++r) {
        mpz_class row_sum = 0;
        for (std::size_t c = 0; c < n; ++c) {
            ms(r, c) = m(r, c) * scale_q;
            mpz_class a = ms(r, c).numerator();
            row_sum += abs(a);
        }
        if (row_sum > bound) bound = row_sum;
    }

    auto coeffs = charpoly(ms);
    std::vector<mpz_class> q;
    q.reserve(coeffs.size());
    for (const auto& c : coeffs) q.push_back(c.numerator());

    std::vector<std::pair<mpz_class, std::size_t>> roots;
    std::size_t zero_mult = 0;
    while (q.size() > 1 && q.front() == 0) {
        q.erase(q.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) roots.emplace_back(mpz_class(0), zero_mult);

    if (q.size() > 1) {
        if (bound > kEigenSearchLimit) {
            throw NonSplitSpectrum("rational_eigenvalues: eigenvalue search window exceeds " +
                                   std::to_string(kEigenSearchLimit) + " after scaling");
        }
        const long limit = bound.get_si();
        for (long k = 1; k <= limit && q.size() > 1; ++k) {
            if (!mpz_divisible_ui_p(q.front().get_mpz_t(), static_cast<unsigned long>(k))) continue;
            for (long s : {k, -k}) {
                mpz_class r(s);
                std::size_t mult = 0;
                while (q.size() > 1 && eval_int(q, r) == 0) {
                    deflate(q, r);
                    ++mult;
                }
                if (mult > 0) roots.emplace_back(r, mult);
            }
        }
    }
    if (q.size() > 1) {
        throw NonSplitSpectrum("characteristic polynomial has " + std::to_string(q.size() - 1) +
                               " non-rational roots");
    }

    std::vector<Eigenvalue> out;
    out.reserve(roots.size());
    for (auto& [r, mult] : roots) out.push_back({Rational(mpq_class(r, scale)), mult});
    std::sort(out.begin(), out.end(), [](const Eigenvalue& a, const Eigenvalue& b) { return a.value > b.value; });
    return out;
}

std::vector<Vector> span_closure(const std::vector<Vector>& seed, const BilinearMap& product, std::size_t dim)
{
    RowEchelon ech(dim);
    std::vector<Vector> gens;
    for (const auto& s : seed) {
        if (ech.insert(s)) gens.push_back(s);
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Vector a = product(gens[i], gens[j]);
            if (ech.insert(a)) gens.push_back(std::move(a));
            if (i != j) {
                Vector b = product(gens[j], gens[i]);
                if (ech.insert(b)) gens.push_back(std::move(b));
            }
        }
    }
    return ech.basis();
}

}  // namespace supergrade
