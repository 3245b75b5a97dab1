#include "supergrade/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "supergrade/errors.hpp"

namespace supergrade {

std::size_t SuperSpace::even_dim() const
{
    return static_cast<std::size_t>(std::count(parity.begin(), parity.end(), 0));
}

std::size_t SuperSpace::odd_dim() const { return dim() - even_dim(); }

std::string SuperSpace::label(std::size_t i) const
{
    if (i < labels.size()) return labels[i];
    return "b" + std::to_string(i + 1);
}

std::string to_string(Kind k)
{
    switch (k) {
        case Kind::lie: return "lie";
        case Kind::assoc: return "assoc";
        case Kind::jordan: return "jordan";
    }
    return "lie";
}

Kind kind_from_string(const std::string& s)
{
    if (s == "lie") return Kind::lie;
    if (s == "assoc") return Kind::assoc;
    if (s == "jordan") return Kind::jordan;
    throw BadParams("unknown algebra kind '" + s + "'");
}

std::optional<std::string> Provenance::param(const std::string& key) const
{
    for (const auto& [k, v] : params) {
        if (k == key) return v;
    }
    return std::nullopt;
}

const Vector* Provenance::element(const std::string& key) const
{
    for (const auto& [k, v] : elements) {
        if (k == key) return &v;
    }
    return nullptr;
}

std::vector<Vector> Provenance::elements_with_prefix(const std::string& prefix) const
{
    std::vector<Vector> out;
    for (const auto& [k, v] : elements) {
        if (k.rfind(prefix, 0) == 0) out.push_back(v);
    }
    return out;
}

void Provenance::set_element(const std::string& key, Vector v)
{
    for (auto& [k, existing] : elements) {
        if (k == key) {
            existing = std::move(v);
            return;
        }
    }
    elements.emplace_back(key, std::move(v));
}

// ---------------------------------------------------------------------------

StructureTable::StructureTable(SuperSpace space, Kind kind)
    : space_(std::move(space)), kind_(kind), entries_(space_.dim() * space_.dim())
{
}

void StructureTable::add(std::size_t i, std::size_t j, std::size_t k, const Rational& c)
{
    if (i >= dim() || j >= dim() || k >= dim()) throw DimensionMismatch("structure constant index out of range");
    if (c.is_zero()) return;
    auto& terms = entries_[i * dim() + j];
    auto it = std::lower_bound(terms.begin(), terms.end(), k, [](const Term& t, std::size_t key) { return t.k < key; });
    if (it != terms.end() && it->k == k) {
        it->c += c;
        if (it->c.is_zero()) terms.erase(it);
    } else {
        terms.insert(it, Term{static_cast<std::uint32_t>(k), c});
    }
}

void StructureTable::set_product(std::size_t i, std::size_t j, const Vector& v)
{
    if (v.size() != dim()) throw DimensionMismatch("set_product: vector has wrong length");
    auto& terms = entries_[i * dim() + j];
    terms.clear();
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v[k].is_zero()) terms.push_back(Term{static_cast<std::uint32_t>(k), v[k]});
    }
}

Vector StructureTable::product_vector(std::size_t i, std::size_t j) const
{
    Vector out(dim());
    for (const auto& t : product(i, j)) out[t.k] = t.c;
    return out;
}

Vector StructureTable::multiply(const Vector& x, const Vector& y) const
{
    if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("product: vector length differs from dim");
    Vector out(dim());
    std::vector<std::size_t> ny;
    for (std::size_t j = 0; j < dim(); ++j) {
        if (!y[j].is_zero()) ny.push_back(j);
    }
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j : ny) {
            const auto& terms = product(i, j);
            if (terms.empty()) continue;
            Rational xy = x[i] * y[j];
            for (const auto& t : terms) out[t.k] += xy * t.c;
        }
    }
    return out;
}

Vector StructureTable::left_basis(std::size_t i, const Vector& y) const
{
    Vector out(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j].is_zero()) continue;
        for (const auto& t : product(i, j)) out[t.k] += y[j] * t.c;
    }
    return out;
}

Vector StructureTable::right_basis(const Vector& x, std::size_t j) const
{
    Vector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (const auto& t : product(i, j)) out[t.k] += x[i] * t.c;
    }
    return out;
}

std::size_t StructureTable::nnz() const
{
    std::size_t n = 0;
    for (const auto& e : entries_) n += e.size();
    return n;
}

void StructureTable::check_invariants() const
{
    const std::size_t n = dim();
    if (!space_.labels.empty()) {
        if (space_.labels.size() != n) throw DimensionMismatch("label count differs from dim");
        auto sorted = space_.labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw BadParams("basis labels are not distinct");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& t : product(i, j)) {
                if (t.k >= n) throw DimensionMismatch("structure constant index out of range");
                if (((parity(i) + parity(j)) & 1) != parity(t.k)) {
                    throw AxiomViolation({i, j, t.k}, "parity homogeneity");
                }
            }
        }
    }
    if (unit_) {
        if (unit_->size() != n) throw DimensionMismatch("unit vector has wrong length");
        for (std::size_t i = 0; i < n; ++i) {
            if (parity(i) == 1 && !(*unit_)[i].is_zero()) throw MissingUnit("unit is not even");
        }
    }
}

bool operator==(const StructureTable& a, const StructureTable& b)
{
    if (a.kind_ != b.kind_ || a.space_.parity != b.space_.parity || a.unit_ != b.unit_) return false;
    for (std::size_t e = 0; e < a.entries_.size(); ++e) {
        const auto& x = a.entries_[e];
        const auto& y = b.entries_[e];
        if (x.size() != y.size()) return false;
        for (std::size_t t = 0; t < x.size(); ++t) {
            if (x[t].k != y[t].k || x[t].c != y[t].c) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

std::optional<int> homogeneous_parity(const SuperSpace& s, const Vector& v)
{
    bool even = false;
    bool odd = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        (s.parity[i] ? odd : even) = true;
    }
    if (even && odd) return std::nullopt;
    return odd ? 1 : 0;
}

std::string format_combination(const SuperSpace& s, const Vector& v)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        Rational c = v[i];
        if (c.sign() < 0) {
            os << "-";
            c = -c;
        } else if (!first) {
            os << "+";
        }
        if (!c.is_one()) os << c << "*";
        os << s.label(i);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

// Dense accumulator that remembers touched slots so it can be cleared cheaply.
class Scratch {
public:
    explicit Scratch(std::size_t n) : v_(n), mark_(n, 0) {}
    void add(std::size_t k, const Rational& c)
    {
        if (!mark_[k]) {
            mark_[k] = 1;
            touched_.push_back(k);
        }
        v_[k] += c;
    }
    [[nodiscard]] std::optional<std::size_t> first_nonzero() const
    {
        for (std::size_t k : touched_) {
            if (!v_[k].is_zero()) return k;
        }
        return std::nullopt;
    }
    void clear()
    {
        for (std::size_t k : touched_) {
            v_[k] = Rational();
            mark_[k] = 0;
        }
        touched_.clear();
    }

private:
    Vector v_;
    std::vector<std::uint8_t> mark_;
    std::vector<std::size_t> touched_;
};

// acc += sign * (b_i b_j) b_k
void add_left_nested(const StructureTable& t, Scratch& acc, int sign, std::size_t i, std::size_t j, std::size_t k)
{
    for (const auto& a : t.product(i, j)) {
        for (const auto& b : t.product(a.k, k)) acc.add(b.k, sign > 0 ? a.c * b.c : -(a.c * b.c));
    }
}

// acc += sign * b_i (b_j b_k)
void add_right_nested(const StructureTable& t, Scratch& acc, int sign, std::size_t i, std::size_t j, std::size_t k)
{
    for (const auto& a : t.product(j, k)) {
        for (const auto& b : t.product(i, a.k)) acc.add(b.k, sign > 0 ? a.c * b.c : -(a.c * b.c));
    }
}

void check_unit(const StructureTable& t)
{
    if (!t.unit()) throw MissingUnit("algebra has no unit");
    const Vector& u = *t.unit();
    for (std::size_t i = 0; i < t.dim(); ++i) {
        Vector bi = unit_vector(t.dim(), i);
        if (t.multiply(u, bi) != bi || t.multiply(bi, u) != bi) {
            throw MissingUnit("unit fails on basis element " + std::to_string(i + 1));
        }
    }
}

// Koszul sign of listing the leaves in `order` (positions into the reference
// order) given their parities.
int leaf_sign(const int (&order)[4], const int (&par)[4])
{
    int s = 1;
    for (int x = 0; x < 4; ++x) {
        for (int y = x + 1; y < 4; ++y) {
            if (order[x] > order[y] && par[order[x]] && par[order[y]]) s = -s;
        }
    }
    return s;
}

}  // namespace

LieSuperalgebra validate_lie(StructureTable t)
{
    if (t.kind() != Kind::lie) throw WrongAlgebra("validate_lie: table kind is " + to_string(t.kind()));
    t.check_invariants();
    const std::size_t n = t.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Scratch acc(n);
            for (const auto& a : t.product(i, j)) acc.add(a.k, a.c);
            int s = koszul(t.parity(i), t.parity(j));
            for (const auto& a : t.product(j, i)) acc.add(a.k, s > 0 ? a.c : -a.c);
            if (acc.first_nonzero()) throw AxiomViolation({i, j}, "super-anticommutativity");
        }
    }
    Scratch acc(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            for (std::size_t k = j; k < n; ++k) {
                const int pi = t.parity(i);
                const int pj = t.parity(j);
                const int pk = t.parity(k);
                add_left_nested(t, acc, koszul(pi, pk), i, j, k);
                add_left_nested(t, acc, koszul(pj, pi), j, k, i);
                add_left_nested(t, acc, koszul(pk, pj), k, i, j);
                if (acc.first_nonzero()) throw AxiomViolation({i, j, k}, "super Jacobi identity");
                acc.clear();
            }
        }
    }
    return LieSuperalgebra::trusted(std::move(t));
}

AssocSuperalgebra validate_assoc(StructureTable t)
{
    if (t.kind() != Kind::assoc) throw WrongAlgebra("validate_assoc: table kind is " + to_string(t.kind()));
    t.check_invariants();
    const std::size_t n = t.dim();
    Scratch acc(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                add_left_nested(t, acc, 1, i, j, k);
                add_right_nested(t, acc, -1, i, j, k);
                if (acc.first_nonzero()) throw AxiomViolation({i, j, k}, "associativity");
                acc.clear();
            }
        }
    }
    check_unit(t);
    return AssocSuperalgebra::trusted(std::move(t));
}

JordanSuperalgebra validate_jordan(StructureTable t)
{
    if (t.kind() != Kind::jordan) throw WrongAlgebra("validate_jordan: table kind is " + to_string(t.kind()));
    t.check_invariants();
    const std::size_t n = t.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Scratch acc(n);
            for (const auto& a : t.product(i, j)) acc.add(a.k, a.c);
            int s = koszul(t.parity(i), t.parity(j));
            for (const auto& a : t.product(j, i)) acc.add(a.k, s > 0 ? -a.c : a.c);
            if (acc.first_nonzero()) throw AxiomViolation({i, j}, "super-commutativity");
        }
    }
    check_unit(t);

    // Linearized Jordan identity, symmetric in (a, c, d):
    //   sum over {x,y} subset {a,c,d}, w the remaining one, of
    //   sign * ( ((xy)b)w - (xy)(bw) ) = 0
    // where sign is the Koszul sign of the leaf order x y b w.
    static constexpr int kOrders[3][4] = {{0, 2, 1, 3}, {0, 3, 1, 2}, {2, 3, 1, 0}};
    std::vector<Vector> basis(n);
    for (std::size_t i = 0; i < n; ++i) basis[i] = unit_vector(n, i);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t c = a; c < n; ++c) {
            for (std::size_t d = c; d < n; ++d) {
                for (std::size_t b = 0; b < n; ++b) {
                    const std::size_t leaf[4] = {a, b, c, d};
                    const int par[4] = {t.parity(a), t.parity(b), t.parity(c), t.parity(d)};
                    Vector total(n);
                    for (const auto& order : kOrders) {
                        const std::size_t x = leaf[order[0]];
                        const std::size_t y = leaf[order[1]];
                        const std::size_t w = leaf[order[3]];
                        Vector xy = t.product_vector(x, y);
                        if (is_zero(xy)) continue;
                        Vector lhs = t.right_basis(t.right_basis(xy, b), w);
                        Vector bw = t.product_vector(b, w);
                        Vector rhs = t.multiply(xy, bw);
                        axpy(total, leaf_sign(order, par), sub(lhs, rhs));
                    }
                    if (!is_zero(total)) throw AxiomViolation({a, b, c, d}, "linearized super Jordan identity");
                }
            }
        }
    }
    return JordanSuperalgebra::trusted(std::move(t));
}

// ---------------------------------------------------------------------------

Vector bracket(const LieSuperalgebra& l, const Vector& x, const Vector& y) { return l.table().multiply(x, y); }

Matrix left_multiplication(const StructureTable& t, const Vector& x)
{
    if (x.size() != t.dim()) throw DimensionMismatch("left_multiplication: vector length differs from dim");
    const std::size_t n = t.dim();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& term : t.product(i, j)) m(term.k, j) += x[i] * term.c;
        }
    }
    return m;
}

Matrix ad_matrix(const LieSuperalgebra& l, const Vector& x) { return left_multiplication(l.table(), x); }

std::vector<Vector> echelon_basis(const std::vector<Vector>& vs, std::size_t dim)
{
    RowEchelon ech(dim);
    for (const auto& v : vs) ech.insert(v);
    return ech.basis();
}

std::vector<Vector> center(const StructureTable& t)
{
    const std::size_t n = t.dim();
    // Unknown x; equations (x b_j)_k = sum_i x_i c_ij^k = 0 for all j, k.
    RowEchelon ech(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Vector> rows(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& term : t.product(i, j)) {
                if (rows[term.k].empty()) rows[term.k].assign(n, Rational());
                rows[term.k][i] += term.c;
            }
        }
        for (auto& r : rows) {
            if (!r.empty()) ech.insert(std::move(r));
        }
    }
    return echelon_basis(ech.null_space(), n);
}

std::vector<Vector> derived_subalgebra(const LieSuperalgebra& l)
{
    const std::size_t n = l.dim();
    RowEchelon ech(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (!l.table().product(i, j).empty()) ech.insert(l.table().product_vector(i, j));
        }
    }
    return ech.basis();
}

bool is_perfect(const LieSuperalgebra& l) { return derived_subalgebra(l).size() == l.dim(); }

Quotient quotient_central(const LieSuperalgebra& l, const std::vector<Vector>& z)
{
    const StructureTable& t = l.table();
    const std::size_t n = t.dim();
    RowEchelon ech(n);
    for (const auto& v : z) {
        if (v.size() != n) throw DimensionMismatch("quotient_central: vector has wrong length");
        ech.insert(v);
    }
    auto zb = ech.basis();
    for (const auto& v : zb) {
        if (!homogeneous_parity(t.space(), v)) throw NotCentral("quotient_central: subspace is not graded");
        for (std::size_t i = 0; i < n; ++i) {
            if (!is_zero(t.right_basis(v, i))) {
                throw NotCentral("quotient_central: " + format_combination(t.space(), v) +
                                 " does not commute with basis element " + std::to_string(i + 1));
            }
        }
    }
    auto piv = ech.pivots();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0, p = 0; i < n; ++i) {
        if (p < piv.size() && piv[p] == i) {
            ++p;
        } else {
            keep.push_back(i);
        }
    }
    const std::size_t m = keep.size();
    Matrix proj(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector r = ech.reduce(unit_vector(n, j));
        for (std::size_t a = 0; a < m; ++a) proj(a, j) = r[keep[a]];
    }

    SuperSpace space;
    for (std::size_t a = 0; a < m; ++a) {
        space.parity.push_back(t.space().parity[keep[a]]);
        if (!t.space().labels.empty()) space.labels.push_back(t.space().labels[keep[a]]);
    }
    StructureTable q(space, Kind::lie);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            const auto& terms = t.product(keep[a], keep[b]);
            if (terms.empty()) continue;
            q.set_product(a, b, proj * t.product_vector(keep[a], keep[b]));
        }
    }
    q.provenance().name = t.provenance().name;
    q.provenance().params = t.provenance().params;
    for (const auto& [name, v] : t.provenance().elements) q.provenance().set_element(name, proj * v);
    return Quotient{validate_lie(std::move(q)), std::move(proj)};
}

StructureTable induced_table(const StructureTable& t, const std::vector<Vector>& basis)
{
    const std::size_t n = t.dim();
    const std::size_t m = basis.size();
    Coordinatizer coord(basis, n);
    SuperSpace space;
    for (const auto& v : basis) {
        auto p = homogeneous_parity(t.space(), v);
        if (!p) throw BadParams("induced_table: basis vector is not homogeneous");
        space.parity.push_back(static_cast<std::uint8_t>(*p));
        space.labels.push_back(format_combination(t.space(), v));
    }
    StructureTable out(space, t.kind());
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            Vector prod = t.multiply(basis[a], basis[b]);
            if (is_zero(prod)) continue;
            auto c = coord.coords(prod);
            if (!c) throw BadParams("induced_table: span is not closed under the product");
            out.set_product(a, b, *c);
        }
    }
    if (t.unit()) {
        if (auto c = coord.coords(*t.unit())) out.set_unit(*c);
    }
    out.provenance().name = t.provenance().name;
    out.provenance().params = t.provenance().params;
    for (const auto& [name, v] : t.provenance().elements) {
        if (auto c = coord.coords(v)) out.provenance().set_element(name, *c);
    }
    return out;
}

LieSuperalgebra tensor_lie_assoc(const LieSuperalgebra& gl, const AssocSuperalgebra& a)
{
    const auto& prov = gl.provenance();
    if (prov.name != "gl" || !prov.param("m") || !prov.param("n")) {
        throw WrongAlgebra("tensor_lie_assoc: first factor must be gl(m,n) from construct_gl");
    }
    const std::size_t m = std::stoul(*prov.param("m"));
    const std::size_t nn = std::stoul(*prov.param("n"));
    const std::size_t N = m + nn;
    const std::size_t da = a.dim();
    const StructureTable& at = a.table();
    auto idx_par = [&](std::size_t i) { return i < m ? 0 : 1; };

    SuperSpace space;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            for (std::size_t s = 0; s < da; ++s) {
                space.parity.push_back(static_cast<std::uint8_t>((idx_par(i) + idx_par(j) + at.parity(s)) & 1));
                space.labels.push_back(gl.space().label(i * N + j) + "(x)" + a.space().label(s));
            }
        }
    }
    StructureTable t(space, Kind::lie);
    auto index = [&](std::size_t i, std::size_t j, std::size_t s) { return (i * N + j) * da + s; };
    // (E_ij (x) a)(E_kl (x) b) = (-1)^{|a||E_kl|} delta_jk E_il (x) ab
    auto assoc_product = [&](std::size_t i, std::size_t j, std::size_t s, std::size_t k, std::size_t l, std::size_t u,
                             int sign, std::size_t row, std::size_t col) {
        if (j != k) return;
        int e_kl = (idx_par(k) + idx_par(l)) & 1;
        int sg = sign * koszul(at.parity(s), e_kl);
        for (const auto& term : at.product(s, u)) {
            t.add(row, col, index(i, l, term.k), sg > 0 ? term.c : -term.c);
        }
    };
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            for (std::size_t s = 0; s < da; ++s) {
                const std::size_t x = index(i, j, s);
                for (std::size_t k = 0; k < N; ++k) {
                    for (std::size_t l = 0; l < N; ++l) {
                        for (std::size_t u = 0; u < da; ++u) {
                            const std::size_t y = index(k, l, u);
                            assoc_product(i, j, s, k, l, u, 1, x, y);
                            int sw = -koszul(space.parity[x], space.parity[y]);
                            assoc_product(k, l, u, i, j, s, sw, x, y);
                        }
                    }
                }
            }
        }
    }
    t.provenance().name = "gl_tensor";
    t.provenance().params = {{"m", std::to_string(m)}, {"n", std::to_string(nn)}, {"A", a.provenance().name}};
    // Elements of gl carried over as X (x) 1 when A has a unit.
    if (at.unit()) {
        const Vector& u1 = *at.unit();
        for (const auto& [name, v] : prov.elements) {
            Vector w(t.dim());
            for (std::size_t g = 0; g < v.size(); ++g) {
                if (v[g].is_zero()) continue;
                for (std::size_t s = 0; s < da; ++s) {
                    if (!u1[s].is_zero()) w[g * da + s] += v[g] * u1[s];
                }
            }
            t.provenance().set_element(name, std::move(w));
        }
    }
    return validate_lie(std::move(t));
}

std::vector<Vector> subalgebra_from_generators(const LieSuperalgebra& l, const std::vector<Vector>& gens)
{
    const StructureTable& t = l.table();
    return span_closure(gens, [&t](const Vector& x, const Vector& y) { return t.multiply(x, y); }, l.dim());
}

}  // namespace supergrade
