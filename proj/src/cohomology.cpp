#include "supergrade/cohomology.hpp"

#include <algorithm>

#include "supergrade/errors.hpp"

namespace supergrade {

namespace {

// Unknowns phi(i,j), i <= j, of the requested parity. The other half follows
// from phi(x,y) = -(-1)^{|x||y|} phi(y,x); even diagonals vanish.
class FormVariables {
public:
    FormVariables(const SuperSpace& s, int parity) : d_(s.dim()), index_(d_ * d_, -1)
    {
        for (std::size_t i = 0; i < d_; ++i) {
            for (std::size_t j = i; j < d_; ++j) {
                if (((s.parity[i] + s.parity[j]) & 1) != parity) continue;
                if (i == j && s.parity[i] == 0) continue;
                index_[i * d_ + j] = static_cast<long>(pairs_.size());
                pairs_.emplace_back(i, j);
            }
        }
        parity_ = s.parity;
    }

    [[nodiscard]] std::size_t size() const { return pairs_.size(); }
    [[nodiscard]] const std::pair<std::size_t, std::size_t>& pair(std::size_t v) const { return pairs_[v]; }

    // Variable and sign with phi(a,b) = sign * var.
    [[nodiscard]] std::optional<std::pair<std::size_t, int>> lookup(std::size_t a, std::size_t b) const
    {
        if (a <= b) {
            long v = index_[a * d_ + b];
            if (v < 0) return std::nullopt;
            return std::make_pair(static_cast<std::size_t>(v), 1);
        }
        long v = index_[b * d_ + a];
        if (v < 0) return std::nullopt;
        return std::make_pair(static_cast<std::size_t>(v), -koszul(parity_[a], parity_[b]));
    }

    [[nodiscard]] Matrix form(const Vector& x) const
    {
        Matrix m(d_, d_);
        for (std::size_t a = 0; a < d_; ++a) {
            for (std::size_t b = 0; b < d_; ++b) {
                auto v = lookup(a, b);
                if (!v) continue;
                const Rational& c = x[v->first];
                if (c.is_zero()) continue;
                m(a, b) = v->second > 0 ? c : -c;
            }
        }
        return m;
    }

    [[nodiscard]] Vector flatten(const Matrix& m) const
    {
        Vector x(pairs_.size());
        for (std::size_t v = 0; v < pairs_.size(); ++v) x[v] = m(pairs_[v].first, pairs_[v].second);
        return x;
    }

private:
    std::size_t d_;
    std::vector<long> index_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<std::uint8_t> parity_;
};

// Row of the identity (-1)^{|x||z|} phi([x,y],z) + (-1)^{|y||x|} phi([y,z],x)
// + (-1)^{|z||y|} phi([z,x],y) = 0 for basis x, y, z.
void cocycle_row(const StructureTable& t, const FormVariables& vars, std::size_t x, std::size_t y, std::size_t z,
                 Vector& row)
{
    auto term = [&](std::size_t a, std::size_t b, std::size_t c, int sign) {
        for (const auto& e : t.product(a, b)) {
            auto v = vars.lookup(e.k, c);
            if (!v) continue;
            if (sign * v->second > 0) {
                row[v->first] += e.c;
            } else {
                row[v->first] -= e.c;
            }
        }
    };
    term(x, y, z, koszul(t.parity(x), t.parity(z)));
    term(y, z, x, koszul(t.parity(y), t.parity(x)));
    term(z, x, y, koszul(t.parity(z), t.parity(y)));
}

std::vector<Vector> cocycle_vectors(const LieSuperalgebra& l, const FormVariables& vars, int parity)
{
    const StructureTable& t = l.table();
    const std::size_t d = l.dim();
    RowEchelon ech(vars.size());
    Vector row(vars.size());
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            for (std::size_t k = j; k < d; ++k) {
                if (((t.parity(i) + t.parity(j) + t.parity(k)) & 1) != parity) continue;
                std::fill(row.begin(), row.end(), Rational(0));
                cocycle_row(t, vars, i, j, k, row);
                if (!is_zero(row)) ech.insert(row);
            }
        }
    }
    return ech.null_space();
}

std::vector<Vector> coboundary_vectors(const LieSuperalgebra& l, const FormVariables& vars, int parity)
{
    const StructureTable& t = l.table();
    const std::size_t d = l.dim();
    std::vector<Vector> rows(d, Vector(vars.size()));
    for (std::size_t v = 0; v < vars.size(); ++v) {
        auto [i, j] = vars.pair(v);
        for (const auto& e : t.product(i, j)) rows[e.k][v] = e.c;
    }
    std::vector<Vector> out;
    for (std::size_t m = 0; m < d; ++m) {
        if (t.parity(m) == parity) out.push_back(std::move(rows[m]));
    }
    return echelon_basis(out, vars.size());
}

std::vector<Cocycle2> to_cocycles(const FormVariables& vars, const std::vector<Vector>& xs, int parity)
{
    std::vector<Cocycle2> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back({parity, vars.form(x)});
    return out;
}

// Span of [u,v] over a basis of a subspace.
std::vector<Vector> bracket_span(const LieSuperalgebra& l, const std::vector<Vector>& basis)
{
    RowEchelon ech(l.dim());
    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = a; b < basis.size(); ++b) {
            ech.insert(bracket(l, basis[a], basis[b]));
            if (ech.rank() == basis.size()) return ech.basis();
        }
    }
    return ech.basis();
}

std::string join_labels(const std::string& base, std::size_t k, const SuperSpace& s)
{
    std::string name = base + std::to_string(k + 1);
    for (const auto& l : s.labels) {
        if (l == name) return "central." + std::to_string(k + 1);
    }
    return name;
}

}  // namespace

std::vector<Cocycle2> cocycle_space(const LieSuperalgebra& l, int parity)
{
    FormVariables vars(l.space(), parity);
    return to_cocycles(vars, cocycle_vectors(l, vars, parity), parity);
}

std::vector<Cocycle2> coboundary_space(const LieSuperalgebra& l, int parity)
{
    FormVariables vars(l.space(), parity);
    return to_cocycles(vars, coboundary_vectors(l, vars, parity), parity);
}

std::vector<Cocycle2> h2_basis(const LieSuperalgebra& l, int parity)
{
    FormVariables vars(l.space(), parity);
    RowEchelon ech(vars.size());
    for (auto& b : coboundary_vectors(l, vars, parity)) ech.insert(std::move(b));
    std::vector<Vector> reps;
    for (auto& z : cocycle_vectors(l, vars, parity)) {
        if (ech.insert(z)) reps.push_back(std::move(z));
    }
    return to_cocycles(vars, reps, parity);
}

std::pair<std::size_t, std::size_t> h2_dims(const LieSuperalgebra& l)
{
    std::size_t dims[2];
    for (int p = 0; p < 2; ++p) {
        FormVariables vars(l.space(), p);
        dims[p] = cocycle_vectors(l, vars, p).size() - coboundary_vectors(l, vars, p).size();
    }
    return {dims[0], dims[1]};
}

std::optional<std::string> check_cocycle(const LieSuperalgebra& l, const Cocycle2& c)
{
    const StructureTable& t = l.table();
    const std::size_t d = l.dim();
    if (c.form.rows() != d || c.form.cols() != d) return "form has wrong size";
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Rational& v = c.form(i, j);
            if (v.is_zero()) continue;
            if (((t.parity(i) + t.parity(j)) & 1) != c.parity) {
                return "nonzero value on (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") of wrong parity";
            }
            if (v != -Rational(koszul(t.parity(i), t.parity(j))) * c.form(j, i)) {
                return "not super-skew on (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            }
        }
    }
    auto phi = [&](const Vector& u, std::size_t z) {
        Rational s;
        for (std::size_t m = 0; m < d; ++m) {
            if (!u[m].is_zero()) s += u[m] * c.form(m, z);
        }
        return s;
    };
    for (std::size_t x = 0; x < d; ++x) {
        for (std::size_t y = 0; y < d; ++y) {
            for (std::size_t z = 0; z < d; ++z) {
                Rational s = Rational(koszul(t.parity(x), t.parity(z))) * phi(t.product_vector(x, y), z) +
                             Rational(koszul(t.parity(y), t.parity(x))) * phi(t.product_vector(y, z), x) +
                             Rational(koszul(t.parity(z), t.parity(y))) * phi(t.product_vector(z, x), y);
                if (!s.is_zero()) {
                    return "cocycle identity fails on (" + std::to_string(x + 1) + "," + std::to_string(y + 1) + "," +
                           std::to_string(z + 1) + ")";
                }
            }
        }
    }
    return std::nullopt;
}

CentralExtension uce(const LieSuperalgebra& l)
{
    if (!is_perfect(l)) throw NotPerfect("uce needs a perfect algebra");
    std::vector<Cocycle2> cocycles = h2_basis(l, 0);
    for (auto& c : h2_basis(l, 1)) cocycles.push_back(std::move(c));

    const std::size_t d = l.dim();
    const std::size_t h = cocycles.size();
    SuperSpace space = l.space();
    for (std::size_t s = 0; s < h; ++s) {
        space.parity.push_back(static_cast<std::uint8_t>(cocycles[s].parity));
        if (!l.space().labels.empty()) space.labels.push_back(join_labels("c", s, l.space()));
    }
    StructureTable t(space, Kind::lie);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (const auto& e : l.table().product(i, j)) t.add(i, j, e.k, e.c);
            for (std::size_t s = 0; s < h; ++s) {
                const Rational& v = cocycles[s].form(i, j);
                if (!v.is_zero()) t.add(i, j, d + s, v);
            }
        }
    }
    Provenance prov;
    prov.name = "uce";
    if (!l.provenance().name.empty()) prov.params.emplace_back("base", l.provenance().name);
    for (const auto& [key, v] : l.provenance().elements) {
        Vector lifted = v;
        lifted.resize(d + h);
        prov.elements.emplace_back(key, std::move(lifted));
    }
    for (std::size_t s = 0; s < h; ++s) prov.set_element("central." + std::to_string(s + 1), unit_vector(d + h, d + s));
    t.provenance() = std::move(prov);

    LieSuperalgebra ext = validate_lie(std::move(t));
    if (!is_perfect(ext)) throw Error("extension by H^2 is not perfect");
    Matrix proj(d, d + h);
    for (std::size_t i = 0; i < d; ++i) proj(i, i) = 1;
    return CentralExtension{l, std::move(cocycles), std::move(ext), std::move(proj)};
}

CentralExtension central_extension(const LieSuperalgebra& extended, const LieSuperalgebra& base,
                                   const Matrix& projection)
{
    const std::size_t d = base.dim();
    const std::size_t n = extended.dim();
    if (projection.rows() != d || projection.cols() != n) throw DimensionMismatch("projection has wrong shape");

    // Least-index section: pivot columns of the projection.
    RrefResult r = rref(projection);
    if (r.rank() != d) throw NotHomomorphism("projection is not surjective");
    std::vector<Vector> section;
    for (std::size_t i = 0; i < d; ++i) {
        auto pre = solve_linear(projection, unit_vector(d, i));
        section.push_back(std::move(*pre));
    }
    std::vector<Vector> ker = kernel(projection);
    Coordinatizer kc(ker, n);

    std::vector<Cocycle2> cocycles;
    for (const auto& k : ker) {
        auto p = homogeneous_parity(extended.space(), k);
        if (!p) throw NotCentral("kernel basis vector is not homogeneous");
        cocycles.push_back({*p, Matrix(d, d)});
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Vector lifted = zero_vector(n);
            for (const auto& e : base.table().product(i, j)) axpy(lifted, e.c, section[e.k]);
            Vector diff = sub(bracket(extended, section[i], section[j]), lifted);
            if (is_zero(diff)) continue;
            auto c = kc.coords(diff);
            if (!c) throw NotHomomorphism("projection is not a homomorphism");
            for (std::size_t s = 0; s < ker.size(); ++s) cocycles[s].form(i, j) = (*c)[s];
        }
    }
    return CentralExtension{base, std::move(cocycles), extended, projection};
}

std::optional<std::string> check_central_extension(const CentralExtension& e)
{
    const std::size_t n = e.extended.dim();
    const Matrix& p = e.projection;
    if (p.rows() != e.base.dim() || p.cols() != n) return "projection has wrong shape";
    std::vector<Vector> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) images.push_back(p.column(i));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Vector lhs = p * e.extended.table().product_vector(i, j);
            Vector rhs = bracket(e.base, images[i], images[j]);
            if (lhs != rhs) {
                return "projection is not a homomorphism on (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            }
        }
    }
    for (const auto& k : kernel(p)) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!is_zero(e.extended.table().right_basis(k, i))) return "kernel is not central";
        }
    }
    return std::nullopt;
}

KernelCheck cover_kernel_check(const CentralExtension& e, const std::vector<Vector>& cartan)
{
    KernelCheck out;
    std::vector<Vector> ker = kernel(e.projection);
    out.kernel_dim = ker.size();
    if (ker.empty()) {
        out.pass = true;
        out.detail = "trivial extension";
        return out;
    }
    std::vector<Vector> lifts;
    for (const auto& h : cartan) {
        auto pre = solve_linear(e.projection, h);
        if (!pre) throw NotHomomorphism("Cartan element has no preimage");
        lifts.push_back(std::move(*pre));
    }
    RootDatum down = weight_decomposition(e.base, cartan);
    RootDatum up = weight_decomposition(e.extended, lifts);

    Coordinatizer zero(up.zero.basis, e.extended.dim());
    for (std::size_t s = 0; s < ker.size(); ++s) {
        if (!zero.coords(ker[s])) {
            out.detail = "kernel vector " + std::to_string(s + 1) + " has nonzero weight";
            return out;
        }
    }
    if (up.zero.basis.size() != down.zero.basis.size() + ker.size()) {
        out.detail = "weight 0 component has dim " + std::to_string(up.zero.basis.size()) + ", expected " +
                     std::to_string(down.zero.basis.size() + ker.size());
        return out;
    }
    if (up.components.size() != down.components.size()) {
        out.detail = std::to_string(up.components.size()) + " roots upstairs, " + std::to_string(down.components.size()) +
                     " downstairs";
        return out;
    }
    for (const auto& c : up.components) {
        const WeightComponent* b = down.find(c.weight);
        if (!b) {
            out.detail = "root " + format_weight(c.weight) + " has no counterpart in the base";
            return out;
        }
        std::vector<Vector> images;
        for (const auto& v : c.basis) images.push_back(e.projection * v);
        if (c.even_dim != b->even_dim || c.odd_dim != b->odd_dim ||
            echelon_basis(images, e.base.dim()).size() != c.basis.size()) {
            out.detail = "root " + format_weight(c.weight) + " does not map isomorphically";
            return out;
        }
        ++out.roots_checked;
    }
    out.pass = true;
    out.detail = std::to_string(ker.size()) + "-dim kernel at weight 0, " + std::to_string(out.roots_checked) +
                 " root spaces map isomorphically";
    return out;
}

Fingerprint fingerprint(const LieSuperalgebra& l, const std::vector<Vector>* cartan)
{
    Fingerprint f;
    f.even_dim = l.space().even_dim();
    f.odd_dim = l.space().odd_dim();
    std::vector<Vector> term;
    for (std::size_t i = 0; i < l.dim(); ++i) term.push_back(unit_vector(l.dim(), i));
    f.derived_series.push_back(term.size());
    while (!term.empty()) {
        std::vector<Vector> next = bracket_span(l, term);
        if (next.size() == term.size()) break;
        f.derived_series.push_back(next.size());
        term = std::move(next);
    }
    f.center_dim = center(l.table()).size();
    std::tie(f.h2_even, f.h2_odd) = h2_dims(l);
    if (cartan) {
        RootDatum datum = weight_decomposition(l, *cartan);
        std::vector<std::pair<std::size_t, std::size_t>> dims;
        for (const auto& c : datum.components) dims.emplace_back(c.even_dim, c.odd_dim);
        std::sort(dims.begin(), dims.end());
        f.root_dims = std::move(dims);
    }
    return f;
}

std::string to_string(Isogeny v)
{
    switch (v) {
        case Isogeny::equal: return "equal";
        case Isogeny::different: return "different";
        case Isogeny::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

IsogenyResult isogenous(const LieSuperalgebra& l1, const LieSuperalgebra& l2)
{
    IsogenyResult r;
    auto reduced = [](const LieSuperalgebra& l) {
        std::vector<Vector> z = center(l.table());
        if (z.empty()) return l;
        return quotient_central(l, z).algebra;
    };
    LieSuperalgebra q1 = reduced(l1);
    LieSuperalgebra q2 = reduced(l2);
    r.first = fingerprint(q1);
    r.second = fingerprint(q2);
    if (!is_perfect(l1) || !is_perfect(l2)) {
        r.verdict = Isogeny::inconclusive;
        r.detail = "central isogeny is defined for perfect algebras only";
    } else if (r.first == r.second) {
        r.verdict = Isogeny::equal;
        r.detail = "fingerprints of the central quotients agree";
    } else {
        r.verdict = Isogeny::different;
        r.detail = "fingerprints of the central quotients differ";
    }
    return r;
}

}  // namespace supergrade
