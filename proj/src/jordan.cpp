#include "supergrade/jordan.hpp"

#include <algorithm>
#include <sstream>

#include "supergrade/errors.hpp"

namespace supergrade {

StructureTable symmetrized_table(const StructureTable& a)
{
    StructureTable t(a.space(), Kind::jordan);
    const std::size_t dim = a.dim();
    const Rational half(1, 2);
    for (std::size_t x = 0; x < dim; ++x) {
        for (std::size_t y = 0; y < dim; ++y) {
            for (const auto& term : a.product(x, y)) t.add(x, y, term.k, half * term.c);
            const int s = koszul(a.parity(x), a.parity(y));
            for (const auto& term : a.product(y, x)) t.add(x, y, term.k, s > 0 ? half * term.c : -(half * term.c));
        }
    }
    t.set_unit(a.unit());
    t.provenance() = a.provenance();
    return t;
}

JordanSuperalgebra symmetrized(const AssocSuperalgebra& a) { return validate_jordan(symmetrized_table(a.table())); }

// ---------------------------------------------------------------------------

PeirceDecomposition peirce(const JordanSuperalgebra& j, const Vector& e1)
{
    const std::size_t n = j.dim();
    if (e1.size() != n) throw DimensionMismatch("peirce: idempotent has wrong length");
    auto p = homogeneous_parity(j.space(), e1);
    if (!p || *p != 0) throw NotIdempotent("peirce: e1 is not even");
    if (j.product(e1, e1) != e1) throw NotIdempotent("peirce: e1.e1 != e1");
    Matrix m = left_multiplication(j.table(), e1);
    PeirceDecomposition out;
    out.e1 = e1;
    std::size_t found = 0;
    for (const auto& ev : rational_eigenvalues(m)) {
        std::vector<Vector>* dst = nullptr;
        if (ev.value == Rational(0)) dst = &out.j0;
        if (ev.value == Rational(1, 2)) dst = &out.j1;
        if (ev.value == Rational(1)) dst = &out.j2;
        if (dst == nullptr) throw UnexpectedEigenvalue("multiplication by e1 has eigenvalue " + ev.value.to_string());
        Matrix shifted = m;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= ev.value;
        *dst = echelon_basis(kernel(shifted), n);
        found += dst->size();
    }
    if (found != n) throw NotDiagonalizable("multiplication by e1 is not diagonalizable");
    return out;
}

std::optional<std::string> check_peirce_laws(const JordanSuperalgebra& j, const PeirceDecomposition& p)
{
    const std::size_t n = j.dim();
    for (const auto& a : p.j2) {
        for (const auto& c : p.j0) {
            Vector ac = j.product(a, c);
            if (!is_zero(ac)) return "J2.J0 != 0: " + format_combination(j.space(), ac);
            for (std::size_t b = 0; b < n; ++b) {
                Vector bv = unit_vector(n, b);
                Vector assoc = sub(j.product(j.product(a, bv), c), j.product(a, j.product(bv, c)));
                if (!is_zero(assoc)) return "(J2,J,J0) != 0 at basis element " + std::to_string(b + 1);
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

Vector TKKAlgebra::plus(const Vector& a) const
{
    if (a.size() != jdim) throw DimensionMismatch("tkk: element of J has wrong length");
    Vector v(lie.dim());
    std::copy(a.begin(), a.end(), v.begin() + static_cast<std::ptrdiff_t>(jdim + inner_dim));
    return v;
}

Vector TKKAlgebra::minus(const Vector& a) const
{
    if (a.size() != jdim) throw DimensionMismatch("tkk: element of J has wrong length");
    Vector v(lie.dim());
    std::copy(a.begin(), a.end(), v.begin());
    return v;
}

namespace {

// Operator pair (A on J, B on Jbar) flattened as A row-major then B.
struct OpPair {
    Matrix a;
    Matrix b;
};

Vector flatten(const OpPair& p)
{
    const std::size_t d = p.a.rows();
    Vector v(2 * d * d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            v[r * d + c] = p.a(r, c);
            v[d * d + r * d + c] = p.b(r, c);
        }
    }
    return v;
}

OpPair unflatten(const Vector& v, std::size_t d)
{
    OpPair p{Matrix(d, d), Matrix(d, d)};
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            p.a(r, c) = v[r * d + c];
            p.b(r, c) = v[d * d + r * d + c];
        }
    }
    return p;
}

Matrix lin(const Matrix& x, const Rational& a, const Matrix& y)  // x + a*y
{
    Matrix out = x;
    for (std::size_t r = 0; r < x.rows(); ++r) {
        for (std::size_t c = 0; c < x.cols(); ++c) {
            if (!y(r, c).is_zero()) out(r, c) += a * y(r, c);
        }
    }
    return out;
}

// Parity of an operator on J from its first nonzero entry (r,c): p_r + p_c.
int operator_parity(const Vector& flat, const SuperSpace& s)
{
    const std::size_t d = s.dim();
    for (std::size_t t = 0; t < flat.size(); ++t) {
        if (flat[t].is_zero()) continue;
        std::size_t rc = t % (d * d);
        return (s.parity[rc / d] + s.parity[rc % d]) & 1;
    }
    return 0;
}

OpPair supercommutator(const OpPair& x, const OpPair& y, int sign)
{
    return {lin(x.a * y.a, -sign, y.a * x.a), lin(x.b * y.b, -sign, y.b * x.b)};
}

}  // namespace

TKKAlgebra tkk(const JordanSuperalgebra& j)
{
    const StructureTable& jt = j.table();
    const std::size_t d = j.dim();
    if (!jt.unit()) throw MissingUnit("tkk needs a unital Jordan superalgebra");
    const SuperSpace& js = j.space();

    std::vector<Matrix> left(d);
    for (std::size_t i = 0; i < d; ++i) left[i] = left_multiplication(jt, unit_vector(d, i));
    auto left_of = [&](const Vector& v) {
        Matrix m(d, d);
        for (std::size_t k = 0; k < d; ++k) {
            if (!v[k].is_zero()) m = lin(m, v[k], left[k]);
        }
        return m;
    };

    // D(a,b) on J:    2((ab)c + a(bc) - s b(ac))
    //        on Jbar: 2(-(ab)c + a(bc) - s b(ac))
    std::vector<Vector> dflat(d * d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            const int s = koszul(js.parity[a], js.parity[b]);
            Matrix lab = left_of(jt.product_vector(a, b));
            Matrix common = lin(left[a] * left[b], -s, left[b] * left[a]);
            OpPair p{lin(Matrix(d, d), 2, lin(common, 1, lab)), lin(Matrix(d, d), 2, lin(common, -1, lab))};
            dflat[a * d + b] = flatten(p);
        }
    }
    auto inner = span_closure(
        dflat,
        [&](const Vector& x, const Vector& y) {
            const int s = koszul(operator_parity(x, js), operator_parity(y, js));
            return flatten(supercommutator(unflatten(x, d), unflatten(y, d), s));
        },
        2 * d * d);
    const std::size_t t0 = inner.size();
    const std::size_t dim = 2 * d + t0;
    const std::size_t off0 = d;
    const std::size_t off1 = d + t0;

    std::vector<int> inner_par(t0);
    SuperSpace space;
    space.parity.resize(dim);
    space.labels.resize(dim);
    for (std::size_t i = 0; i < d; ++i) {
        space.parity[i] = js.parity[i];
        space.parity[off1 + i] = js.parity[i];
        space.labels[i] = "bar(" + js.label(i) + ")";
        space.labels[off1 + i] = js.label(i);
    }
    for (std::size_t k = 0; k < t0; ++k) {
        inner_par[k] = operator_parity(inner[k], js);
        space.parity[off0 + k] = static_cast<std::uint8_t>(inner_par[k]);
        space.labels[off0 + k] = "t0." + std::to_string(k + 1);
    }
    Coordinatizer coord(inner, 2 * d * d);
    auto inner_coords = [&](const Vector& flat) {
        auto c = coord.coords(flat);
        if (!c) throw JacobiFailure("tkk: T(0) is not closed");
        return *c;
    };
    std::vector<OpPair> ops;
    ops.reserve(t0);
    for (const auto& v : inner) ops.push_back(unflatten(v, d));

    StructureTable t(space, Kind::lie);
    auto set_inner = [&](std::size_t x, std::size_t y, const Vector& c, int sign) {
        for (std::size_t k = 0; k < t0; ++k) {
            if (!c[k].is_zero()) t.add(x, y, off0 + k, sign > 0 ? c[k] : -c[k]);
        }
    };
    // [b_i, abar_j] = D(b_i, b_j); [abar_j, b_i] = -(-1)^{|i||j|} D(b_i, b_j)
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t jj = 0; jj < d; ++jj) {
            Vector c = inner_coords(dflat[i * d + jj]);
            set_inner(off1 + i, jj, c, 1);
            set_inner(jj, off1 + i, c, -koszul(js.parity[i], js.parity[jj]));
        }
    }
    for (std::size_t k = 0; k < t0; ++k) {
        const OpPair& s = ops[k];
        for (std::size_t c = 0; c < d; ++c) {
            const int sg = -koszul(inner_par[k], js.parity[c]);
            for (std::size_t r = 0; r < d; ++r) {
                if (!s.a(r, c).is_zero()) {
                    t.add(off0 + k, off1 + c, off1 + r, s.a(r, c));
                    t.add(off1 + c, off0 + k, off1 + r, sg > 0 ? s.a(r, c) : -s.a(r, c));
                }
                if (!s.b(r, c).is_zero()) {
                    t.add(off0 + k, c, r, s.b(r, c));
                    t.add(c, off0 + k, r, sg > 0 ? s.b(r, c) : -s.b(r, c));
                }
            }
        }
        for (std::size_t l = 0; l < t0; ++l) {
            const int sg = koszul(inner_par[k], inner_par[l]);
            Vector c = inner_coords(flatten(supercommutator(s, ops[l], sg)));
            set_inner(off0 + k, off0 + l, c, 1);
        }
    }
    t.provenance().name = "tkk";
    t.provenance().params = {{"J", j.provenance().name}};
    for (const auto& [k, v] : j.provenance().params) t.provenance().params.emplace_back("J." + k, v);

    TKKAlgebra out{LieSuperalgebra::trusted(StructureTable()), d, t0, inner, {}, {}, {}, {}};
    Vector e(dim);
    Vector f(dim);
    for (std::size_t i = 0; i < d; ++i) {
        e[off1 + i] = (*jt.unit())[i];
        f[i] = (*jt.unit())[i];
    }
    t.provenance().set_element("tkk.e", e);
    t.provenance().set_element("tkk.f", f);
    try {
        out.lie = validate_lie(std::move(t));
    } catch (const AxiomViolation& ex) {
        throw JacobiFailure(std::string("tkk: ") + ex.what());
    }
    out.e = e;
    out.f = f;
    out.h = bracket(out.lie, e, f);
    for (std::size_t i = 0; i < d; ++i) {
        out.parts.minus.push_back(unit_vector(dim, i));
        out.parts.plus.push_back(unit_vector(dim, off1 + i));
    }
    for (std::size_t k = 0; k < t0; ++k) out.parts.zero.push_back(unit_vector(dim, off0 + k));
    check_three_grading(out.lie, out.parts);
    return out;
}

JordanSuperalgebra jordan_from_3grading(const LieSuperalgebra& l, const Vector& e, const Vector& f)
{
    const std::size_t n = l.dim();
    if (e.size() != n || f.size() != n) throw DimensionMismatch("jordan_from_3grading: element has wrong length");
    Vector h = bracket(l, e, f);
    ThreeGrading g = three_grading_sl2(l, h);
    RowEchelon plus(n);
    RowEchelon minus(n);
    for (const auto& v : g.plus) plus.insert(v);
    for (const auto& v : g.minus) minus.insert(v);
    if (!plus.contains(e)) throw NotThreeGraded("e does not lie in L(1)");
    if (!minus.contains(f)) throw NotThreeGraded("f does not lie in L(-1)");

    const auto& basis = g.plus;
    const std::size_t d = basis.size();
    Coordinatizer coord(basis, n);
    SuperSpace space;
    for (const auto& v : basis) {
        space.parity.push_back(static_cast<std::uint8_t>(*homogeneous_parity(l.space(), v)));
        space.labels.push_back(format_combination(l.space(), v));
    }
    StructureTable t(space, Kind::jordan);
    const Rational half(1, 2);
    std::vector<Vector> xf(d);
    for (std::size_t a = 0; a < d; ++a) xf[a] = bracket(l, basis[a], f);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            Vector p = scaled(bracket(l, xf[a], basis[b]), half);
            if (is_zero(p)) continue;
            auto c = coord.coords(p);
            if (!c) throw NotThreeGraded("[[x,f],y] leaves L(1)");
            t.set_product(a, b, *c);
        }
    }
    Vector unit = *coord.coords(e);
    for (std::size_t a = 0; a < d; ++a) {
        Vector ea = t.multiply(unit, unit_vector(d, a));
        if (ea != unit_vector(d, a)) {
            throw UnitFailure("e.x != x for x = " + format_combination(l.space(), basis[a]));
        }
    }
    t.set_unit(unit);
    t.provenance().name = "jordan_from_grading";
    try {
        return validate_jordan(std::move(t));
    } catch (const MissingUnit& ex) {
        throw UnitFailure(ex.what());
    }
}

// ---------------------------------------------------------------------------

bool M11Certificate::pass() const
{
    return std::all_of(relations.begin(), relations.end(), [](const auto& r) { return r.second; });
}

M11Certificate certify_m11(const JordanSuperalgebra& j, const Vector& e1, const Vector& e2, const Vector& x,
                           const Vector& y)
{
    const std::size_t n = j.dim();
    for (const Vector* v : {&e1, &e2, &x, &y}) {
        if (v->size() != n) throw DimensionMismatch("certify_m11: element has wrong length");
    }
    M11Certificate c{e1, e2, x, y, {}};
    auto par = [&](const Vector& v, int want) {
        auto p = homogeneous_parity(j.space(), v);
        return p && *p == want && !is_zero(v);
    };
    auto mul = [&](const Vector& a, const Vector& b) { return j.product(a, b); };
    const Rational half(1, 2);
    const Vector zero(n);
    const Vector diff = sub(e1, e2);
    c.relations = {
        {"e1 even", par(e1, 0)},
        {"e2 even", par(e2, 0)},
        {"x odd", par(x, 1)},
        {"y odd", par(y, 1)},
        {"e1.e1 = e1", mul(e1, e1) == e1},
        {"e2.e2 = e2", mul(e2, e2) == e2},
        {"e1.e2 = 0", mul(e1, e2) == zero},
        {"x.y = e1-e2", mul(x, y) == diff},
        {"y.x = e2-e1", mul(y, x) == scaled(diff, -1)},
        {"e1.x = x/2", mul(e1, x) == scaled(x, half)},
        {"e2.x = x/2", mul(e2, x) == scaled(x, half)},
        {"e1.y = y/2", mul(e1, y) == scaled(y, half)},
        {"e2.y = y/2", mul(e2, y) == scaled(y, half)},
        {"x.x = 0", mul(x, x) == zero},
        {"y.y = 0", mul(y, y) == zero},
        {"e1+e2 = 1", j.table().unit() && add(e1, e2) == *j.table().unit()},
    };
    return c;
}

CoverEmbedding tkk_m11_embedding(const TKKAlgebra& t, const M11Certificate& cert)
{
    if (!cert.pass()) throw BadParams("tkk_m11_embedding: certificate does not pass");
    const Rational half(1, 2);
    const Vector y2 = scaled(cert.y, half);
    CoverEmbedding cov;
    cov.n = 1;
    // Index order 1, 2, 1', 2'.
    cov.images[{0, 1}] = t.plus(cert.e1);
    cov.images[{2, 3}] = t.plus(cert.e2);
    cov.images[{0, 3}] = t.plus(cert.x);
    cov.images[{2, 1}] = t.plus(y2);
    cov.images[{1, 0}] = t.minus(cert.e1);
    cov.images[{3, 2}] = t.minus(cert.e2);
    cov.images[{1, 2}] = t.minus(cert.x);
    cov.images[{3, 0}] = t.minus(y2);
    cov.images[{0, 2}] = bracket(t.lie, t.plus(cert.e1), t.minus(cert.x));
    cov.images[{1, 3}] = bracket(t.lie, t.minus(cert.e1), t.plus(cert.x));
    cov.images[{2, 0}] = bracket(t.lie, t.plus(y2), t.minus(cert.e1));
    cov.images[{3, 1}] = bracket(t.lie, t.minus(y2), t.plus(cert.e1));
    return cov;
}

}  // namespace supergrade
