#include "supergrade/roots.hpp"

#include <algorithm>
#include <sstream>

#include "supergrade/constructors.hpp"
#include "supergrade/errors.hpp"

namespace supergrade {

std::string format_weight(const Weight& w)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

const WeightComponent* RootDatum::find(const Weight& w) const
{
    if (std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_zero(); })) return &zero;
    for (const auto& c : components) {
        if (c.weight == w) return &c;
    }
    return nullptr;
}

std::size_t RootDatum::total_dim() const
{
    std::size_t n = zero.basis.size();
    for (const auto& c : components) n += c.basis.size();
    return n;
}

std::pair<std::size_t, std::size_t> graded_dims(const SuperSpace& s, const std::vector<Vector>& basis)
{
    std::size_t even = 0;
    std::size_t odd = 0;
    for (const auto& v : basis) {
        auto p = homogeneous_parity(s, v);
        if (!p) throw BadParams("basis vector " + format_combination(s, v) + " is not homogeneous");
        (*p ? odd : even) += 1;
    }
    return {even, odd};
}

RootDatum weight_decomposition(const LieSuperalgebra& l, const std::vector<Vector>& cartan)
{
    const std::size_t n = l.dim();
    for (std::size_t a = 0; a < cartan.size(); ++a) {
        if (cartan[a].size() != n) throw DimensionMismatch("Cartan element has wrong length");
        auto p = homogeneous_parity(l.space(), cartan[a]);
        if (!p || *p != 0) throw BadParams("Cartan element " + std::to_string(a + 1) + " is not even");
        for (std::size_t b = a + 1; b < cartan.size(); ++b) {
            // Only ad(h) matters, so a central bracket is enough.
            if (!ad_matrix(l, bracket(l, cartan[a], cartan[b])).is_zero()) {
                throw BadParams("Cartan elements " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                " do not commute");
            }
        }
    }

    struct Part {
        Weight weight;
        std::vector<Vector> basis;
    };
    std::vector<Part> parts;
    {
        Part all;
        for (std::size_t i = 0; i < n; ++i) all.basis.push_back(unit_vector(n, i));
        if (n > 0) parts.push_back(std::move(all));
    }
    for (std::size_t a = 0; a < cartan.size(); ++a) {
        Matrix ad = ad_matrix(l, cartan[a]);
        std::vector<Part> next;
        for (auto& part : parts) {
            const std::size_t k = part.basis.size();
            Coordinatizer coord(part.basis, n);
            Matrix r(k, k);
            for (std::size_t j = 0; j < k; ++j) {
                auto c = coord.coords(ad * part.basis[j]);
                if (!c) throw NotDiagonalizable("ad of Cartan element " + std::to_string(a + 1) + " leaves a weight space");
                for (std::size_t i = 0; i < k; ++i) r(i, j) = (*c)[i];
            }
            auto eig = rational_eigenvalues(r);
            std::size_t found = 0;
            for (const auto& ev : eig) {
                Matrix shifted = r;
                for (std::size_t i = 0; i < k; ++i) shifted(i, i) -= ev.value;
                auto ker = kernel(shifted);
                if (ker.size() != ev.multiplicity) {
                    throw NotDiagonalizable("ad of Cartan element " + std::to_string(a + 1) + " has a Jordan block for eigenvalue " +
                                            ev.value.to_string());
                }
                Part p;
                p.weight = part.weight;
                p.weight.push_back(ev.value);
                for (const auto& c : ker) {
                    Vector v(n);
                    for (std::size_t j = 0; j < k; ++j) {
                        if (!c[j].is_zero()) axpy(v, c[j], part.basis[j]);
                    }
                    p.basis.push_back(std::move(v));
                }
                found += ker.size();
                next.push_back(std::move(p));
            }
            if (found != k) throw NotDiagonalizable("ad of Cartan element " + std::to_string(a + 1) + " is not diagonalizable");
        }
        parts = std::move(next);
    }

    RootDatum out;
    out.cartan = cartan;
    out.zero.weight = Weight(cartan.size());
    for (auto& p : parts) {
        WeightComponent c;
        c.weight = p.weight;
        c.basis = echelon_basis(p.basis, n);
        std::tie(c.even_dim, c.odd_dim) = graded_dims(l.space(), c.basis);
        bool is_zero_weight = std::all_of(c.weight.begin(), c.weight.end(), [](const Rational& x) { return x.is_zero(); });
        if (is_zero_weight) {
            out.zero = std::move(c);
        } else {
            out.components.push_back(std::move(c));
        }
    }
    std::sort(out.components.begin(), out.components.end(),
              [](const WeightComponent& a, const WeightComponent& b) { return a.weight < b.weight; });
    return out;
}

namespace {

// Diagonal entries of h_k for psl(n+1,n+1), as functions of the index.
std::vector<std::vector<int>> canonical_cartan_diagonals(std::size_t n)
{
    const std::size_t N = 2 * n + 2;
    std::vector<std::vector<int>> hs;
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (k == n) continue;
        std::vector<int> d(N, 0);
        d[k] = 1;
        d[k + 1] = -1;
        hs.push_back(d);
    }
    return hs;
}

Weight root_of_unit(const std::vector<std::vector<int>>& hs, std::size_t i, std::size_t j)
{
    Weight w;
    for (const auto& d : hs) w.emplace_back(d[i] - d[j]);
    return w;
}

}  // namespace

std::map<Weight, RootMultiplicity> expected_ann_roots(std::size_t n)
{
    if (n < 1) throw BadParams("A(n,n) needs n >= 1");
    const std::size_t N = 2 * n + 2;
    auto hs = canonical_cartan_diagonals(n);
    std::map<Weight, RootMultiplicity> out;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            if (i == j) continue;
            bool odd = (i > n) != (j > n);
            auto& m = out[root_of_unit(hs, i, j)];
            (odd ? m.odd : m.even) += 1;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

const Vector& CoverEmbedding::image(std::size_t i, std::size_t j) const
{
    auto it = images.find({i, j});
    if (it == images.end()) throw BadParams("cover embedding lacks the image of " + unit_label(i, j, n + 1));
    return it->second;
}

std::vector<Vector> CoverEmbedding::cartan(const LieSuperalgebra& l) const
{
    const std::size_t N = 2 * n + 2;
    std::vector<Vector> out;
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (k == n) continue;
        out.push_back(bracket(l, image(k, k + 1), image(k + 1, k)));
    }
    return out;
}

Vector CoverEmbedding::z_image(const LieSuperalgebra& l) const
{
    // [e_{k,k+1}, e_{k+1,k}] has diagonal e_kk - e_{k+1,k+1}, except across the
    // block boundary where both units are odd and the sign is +.
    const std::size_t N = 2 * n + 2;
    std::vector<Vector> diag;
    for (std::size_t k = 0; k + 1 < N; ++k) {
        Vector d(N);
        d[k] = 1;
        d[k + 1] = (k == n) ? 1 : -1;
        diag.push_back(d);
    }
    Coordinatizer coord(diag, N);
    auto c = coord.coords(Vector(N, Rational(1)));
    Vector z(l.dim());
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if ((*c)[k].is_zero()) continue;
        axpy(z, (*c)[k], bracket(l, image(k, k + 1), image(k + 1, k)));
    }
    return z;
}

CoverEmbedding cover_from_provenance(const LieSuperalgebra& l, std::size_t n)
{
    CoverEmbedding cov;
    cov.n = n;
    const std::size_t N = 2 * n + 2;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            if (i == j) continue;
            const std::string name = "cover." + unit_label(i, j, n + 1);
            const Vector* v = l.provenance().element(name);
            if (v == nullptr) throw BadParams("algebra does not record the cover element '" + name + "'");
            if (v->size() != l.dim()) throw DimensionMismatch("cover element '" + name + "' has wrong length");
            cov.images[{i, j}] = *v;
        }
    }
    return cov;
}

namespace {

std::string describe_vector(const SuperSpace& s, const Vector& v) { return format_combination(s, v); }

}  // namespace

GradingReport verify_delta_graded(const LieSuperalgebra& l, const CoverEmbedding& cover)
{
    const std::size_t n = cover.n;
    if (n < 1) throw BadParams("cover embedding needs n >= 1");
    Quotient psl = construct_psl(n);
    const LieSuperalgebra& g = psl.algebra;
    const std::size_t dl = l.dim();
    const std::size_t dg = g.dim();
    const std::size_t N = 2 * n + 2;

    GradingReport rep;

    // Gamma: subalgebra of L + psl generated by the pairs (phi(u), u).
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            if (i == j) continue;
            const Vector& img = cover.image(i, j);
            if (img.size() != dl) throw DimensionMismatch("cover image has wrong length");
            if (auto p = homogeneous_parity(l.space(), img); !p || *p != static_cast<int>((i > n) != (j > n))) {
                throw NotHomomorphism("image of " + unit_label(i, j, n + 1) + " has the wrong parity");
            }
            const Vector* u = g.provenance().element("cover." + unit_label(i, j, n + 1));
            Vector v = img;
            v.insert(v.end(), u->begin(), u->end());
            gens.push_back(std::move(v));
        }
    }
    const StructureTable& lt = l.table();
    const StructureTable& gt = g.table();
    auto pair_bracket = [&](const Vector& a, const Vector& b) {
        Vector al(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(dl));
        Vector ag(a.begin() + static_cast<std::ptrdiff_t>(dl), a.end());
        Vector bl(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(dl));
        Vector bg(b.begin() + static_cast<std::ptrdiff_t>(dl), b.end());
        Vector out = lt.multiply(al, bl);
        Vector og = gt.multiply(ag, bg);
        out.insert(out.end(), og.begin(), og.end());
        return out;
    };
    auto gamma = span_closure(gens, pair_bracket, dl + dg);

    auto l_part = [&](const Vector& v) { return Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(dl)); };
    auto g_part = [&](const Vector& v) { return Vector(v.begin() + static_cast<std::ptrdiff_t>(dl), v.end()); };

    auto tilde = echelon_basis([&] {
        std::vector<Vector> vs;
        for (const auto& v : gamma) vs.push_back(l_part(v));
        return vs;
    }(), dl);
    if (tilde.size() != gamma.size()) {
        throw NotHomomorphism("the images do not satisfy the relations of any central cover: "
                              "some nonzero element of psl maps to 0");
    }
    rep.cover_dim = tilde.size();

    // Kernel of the induced map onto psl: combinations with zero psl part.
    std::vector<Vector> gcols;
    for (const auto& v : gamma) gcols.push_back(g_part(v));
    Matrix gm = Matrix::from_columns(gcols, dg);
    std::vector<Vector> ker;
    for (const auto& c : kernel(gm)) {
        Vector v(dl);
        for (std::size_t t = 0; t < gamma.size(); ++t) {
            if (!c[t].is_zero()) axpy(v, c[t], l_part(gamma[t]));
        }
        ker.push_back(std::move(v));
    }
    rep.cover_kernel_dim = ker.size();
    const std::size_t image_rank = gamma.size() - ker.size();

    std::vector<std::string> failures;
    for (const auto& k : ker) {
        for (const auto& t : tilde) {
            if (!is_zero(bracket(l, k, t))) {
                failures.push_back("kernel element " + describe_vector(l.space(), k) + " is not central in the cover");
                break;
            }
        }
        if (!failures.empty()) break;
    }
    {
        RowEchelon d(dl);
        for (std::size_t a = 0; a < tilde.size(); ++a) {
            for (std::size_t b = a; b < tilde.size(); ++b) d.insert(bracket(l, tilde[a], tilde[b]));
        }
        if (d.rank() != tilde.size()) {
            failures.push_back("cover subalgebra is not perfect (derived dim " + std::to_string(d.rank()) + " of " +
                               std::to_string(tilde.size()) + ")");
        }
    }
    if (image_rank != dg) failures.push_back("map onto psl is not surjective (rank " + std::to_string(image_rank) + ")");
    rep.condition1.pass = failures.empty();
    {
        std::ostringstream os;
        if (failures.empty()) {
            os << "central cover of psl(" << n + 1 << "," << n + 1 << ") of dim " << tilde.size() << " with kernel dim "
               << ker.size();
        } else {
            for (std::size_t i = 0; i < failures.size(); ++i) os << (i ? "; " : "") << failures[i];
        }
        rep.condition1.detail = os.str();
    }

    // Condition 2: root decomposition relative to the image of the Cartan.
    rep.datum = weight_decomposition(l, cover.cartan(l));
    auto expected = expected_ann_roots(n);
    std::vector<std::string> unexpected;
    for (const auto& c : rep.datum.components) {
        if (!expected.count(c.weight)) unexpected.push_back(format_weight(c.weight));
    }
    rep.condition2.pass = unexpected.empty();
    if (unexpected.empty()) {
        rep.condition2.detail = std::to_string(rep.datum.components.size()) + " nonzero weights, all roots of A(" +
                                std::to_string(n) + "," + std::to_string(n) + ")";
    } else {
        std::ostringstream os;
        os << "weights outside A(" << n << "," << n << "):";
        for (const auto& w : unexpected) os << " " << w;
        rep.condition2.detail = os.str();
    }

    // Condition 3: L_0 = sum_alpha [L_alpha, L_-alpha].
    RowEchelon sum(dl);
    for (const auto& c : rep.datum.components) {
        Weight neg;
        for (const auto& x : c.weight) neg.push_back(-x);
        const WeightComponent* opp = rep.datum.find(neg);
        if (opp == nullptr) continue;
        for (const auto& x : c.basis) {
            for (const auto& y : opp->basis) sum.insert(bracket(l, x, y));
        }
    }
    const auto& l0 = rep.datum.zero.basis;
    std::optional<Vector> missing;
    for (const auto& v : l0) {
        if (!sum.contains(v)) {
            missing = v;
            break;
        }
    }
    rep.condition3.pass = !missing && sum.rank() == l0.size();
    {
        std::ostringstream os;
        os << "dim L_0 = " << l0.size() << ", dim sum [L_a,L_-a] = " << sum.rank();
        if (missing) os << "; not reached: " << describe_vector(l.space(), *missing);
        rep.condition3.detail = os.str();
    }

    rep.graded = rep.condition1.pass && rep.condition2.pass && rep.condition3.pass;
    if (rep.condition2.pass) rep.matched_n = n;
    return rep;
}

ZCheck check_z_trivial(const LieSuperalgebra& l, const Vector& z_image)
{
    if (z_image.size() != l.dim()) throw DimensionMismatch("image of z has wrong length");
    ZCheck out;
    out.z_image = z_image;
    for (std::size_t i = 0; i < l.dim(); ++i) {
        Vector v = l.table().right_basis(z_image, i);
        if (!is_zero(v)) {
            out.witness_index = i;
            out.witness_value = std::move(v);
            return out;
        }
    }
    out.pass = true;
    return out;
}

ZCheck check_z_trivial(const LieSuperalgebra& l, const CoverEmbedding& cover)
{
    return check_z_trivial(l, cover.z_image(l));
}

// ---------------------------------------------------------------------------

namespace {

int height_type(std::size_t i, std::size_t j, std::size_t n)
{
    const bool bi = i > n;
    const bool bj = j > n;
    if (!bi && bj) return 1;
    if (bi && !bj) return -1;
    return 0;
}

void check_membership(const LieSuperalgebra& l, const std::vector<Vector>& a, const std::vector<Vector>& b,
                      const RowEchelon* target, const char* what)
{
    for (const auto& x : a) {
        for (const auto& y : b) {
            Vector v = bracket(l, x, y);
            if (is_zero(v)) continue;
            if (target == nullptr || !target->contains(v)) {
                throw NotThreeGraded(std::string(what) + ": [" + format_combination(l.space(), x) + ", " +
                                     format_combination(l.space(), y) + "] = " + format_combination(l.space(), v));
            }
        }
    }
}

}  // namespace

void check_three_grading(const LieSuperalgebra& l, const ThreeGrading& g)
{
    const std::size_t n = l.dim();
    if (g.minus.size() + g.zero.size() + g.plus.size() != n) {
        throw NotThreeGraded("parts do not add up to the whole algebra");
    }
    const std::vector<Vector>* parts[3] = {&g.minus, &g.zero, &g.plus};
    std::vector<RowEchelon> ech;
    for (const auto* p : parts) {
        RowEchelon e(n);
        for (const auto& v : *p) e.insert(v);
        ech.push_back(std::move(e));
    }
    {
        RowEchelon all(n);
        for (const auto* p : parts) {
            for (const auto& v : *p) all.insert(v);
        }
        if (all.rank() != n) throw NotThreeGraded("parts are not independent");
    }
    static const char* names[3] = {"-1", "0", "1"};
    for (int a = -1; a <= 1; ++a) {
        for (int b = a; b <= 1; ++b) {
            const int s = a + b;
            const RowEchelon* target = (s >= -1 && s <= 1) ? &ech[static_cast<std::size_t>(s + 1)] : nullptr;
            std::string what = std::string("[L(") + names[a + 1] + "),L(" + names[b + 1] + ")] not in L(" + std::to_string(s) + ")";
            check_membership(l, *parts[a + 1], *parts[b + 1], target, what.c_str());
        }
    }
}

ThreeGrading three_grading_height(const LieSuperalgebra& l, const RootDatum& datum)
{
    const std::size_t rank = datum.cartan.size();
    if (rank == 0 || rank % 2 != 0) throw BadParams("height grading needs the rank-2n Cartan of A(n,n)");
    const std::size_t n = rank / 2;
    const std::size_t N = 2 * n + 2;
    auto hs = canonical_cartan_diagonals(n);
    std::map<Weight, std::vector<int>> types;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            if (i == j) continue;
            auto& t = types[root_of_unit(hs, i, j)];
            int h = height_type(i, j, n);
            if (std::find(t.begin(), t.end(), h) == t.end()) t.push_back(h);
        }
    }
    ThreeGrading g;
    g.zero = datum.zero.basis;
    for (const auto& c : datum.components) {
        auto it = types.find(c.weight);
        if (it == types.end()) throw NotThreeGraded("weight " + format_weight(c.weight) + " is not a root of A(n,n)");
        if (it->second.size() != 1) {
            throw BadParams("weight " + format_weight(c.weight) + " is shared by roots of different heights (A(1,1))");
        }
        auto& dst = it->second[0] > 0 ? g.plus : (it->second[0] < 0 ? g.minus : g.zero);
        dst.insert(dst.end(), c.basis.begin(), c.basis.end());
    }
    const std::size_t dim = l.dim();
    g.minus = echelon_basis(g.minus, dim);
    g.zero = echelon_basis(g.zero, dim);
    g.plus = echelon_basis(g.plus, dim);
    check_three_grading(l, g);
    return g;
}

ThreeGrading three_grading_sl2(const LieSuperalgebra& l, const Vector& h)
{
    const std::size_t n = l.dim();
    Matrix ad = ad_matrix(l, h);
    auto eig = rational_eigenvalues(ad);
    ThreeGrading g;
    for (const auto& ev : eig) {
        std::vector<Vector>* dst = nullptr;
        if (ev.value == Rational(2)) dst = &g.plus;
        if (ev.value == Rational(0)) dst = &g.zero;
        if (ev.value == Rational(-2)) dst = &g.minus;
        if (dst == nullptr) throw NotThreeGraded("ad h has eigenvalue " + ev.value.to_string() + " outside {-2,0,2}");
        Matrix shifted = ad;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= ev.value;
        auto ker = kernel(shifted);
        if (ker.size() != ev.multiplicity) throw NotThreeGraded("ad h is not diagonalizable");
        *dst = echelon_basis(ker, n);
    }
    check_three_grading(l, g);
    return g;
}

std::optional<std::string> check_grading_closure(const LieSuperalgebra& l, const RootDatum& datum)
{
    std::vector<const WeightComponent*> comps;
    comps.push_back(&datum.zero);
    for (const auto& c : datum.components) comps.push_back(&c);
    std::map<Weight, RowEchelon> ech;
    for (const auto* c : comps) {
        RowEchelon e(l.dim());
        for (const auto& v : c->basis) e.insert(v);
        ech.emplace(c->weight, std::move(e));
    }
    for (const auto* a : comps) {
        for (const auto* b : comps) {
            Weight s;
            for (std::size_t i = 0; i < a->weight.size(); ++i) s.push_back(a->weight[i] + b->weight[i]);
            auto it = ech.find(s);
            for (const auto& x : a->basis) {
                for (const auto& y : b->basis) {
                    Vector v = bracket(l, x, y);
                    if (is_zero(v)) continue;
                    if (it == ech.end() || !it->second.contains(v)) {
                        return "[L" + format_weight(a->weight) + ", L" + format_weight(b->weight) + "] leaves L" +
                               format_weight(s);
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace supergrade
