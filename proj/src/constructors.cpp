#include "supergrade/constructors.hpp"

#include <bit>

#include "supergrade/errors.hpp"
#include "supergrade/jordan.hpp"

namespace supergrade {

std::string index_label(std::size_t i, std::size_t m)
{
    return i < m ? std::to_string(i + 1) : std::to_string(i - m + 1) + "'";
}

std::string unit_label(std::size_t i, std::size_t j, std::size_t m)
{
    return "e[" + index_label(i, m) + "," + index_label(j, m) + "]";
}

namespace {

std::size_t param_of(const Provenance& p, const std::string& key)
{
    auto v = p.param(key);
    if (!v) throw WrongAlgebra("provenance lacks parameter '" + key + "'");
    return std::stoul(*v);
}

// Matrix unit algebra on indices 0..N-1 with parity(i) = (i >= m).
StructureTable matrix_units_table(std::size_t m, std::size_t n, Kind kind, bool plain_labels)
{
    const std::size_t N = m + n;
    SuperSpace space;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            space.parity.push_back(static_cast<std::uint8_t>(((i >= m) + (j >= m)) & 1));
            space.labels.push_back(plain_labels ? "E[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]"
                                                : unit_label(i, j, m));
        }
    }
    return StructureTable(space, kind);
}

}  // namespace

LieSuperalgebra construct_gl(std::size_t m, std::size_t n)
{
    const std::size_t N = m + n;
    if (N < 1) throw BadParams("gl(m,n) needs m+n >= 1");
    StructureTable t = matrix_units_table(m, n, Kind::lie, false);
    auto idx = [N](std::size_t i, std::size_t j) { return i * N + j; };
    // [e_ij, e_kl] = delta_jk e_il - (-1)^{|e_ij||e_kl|} delta_li e_kj
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            for (std::size_t k = 0; k < N; ++k) {
                for (std::size_t l = 0; l < N; ++l) {
                    const std::size_t x = idx(i, j);
                    const std::size_t y = idx(k, l);
                    if (j == k) t.add(x, y, idx(i, l), 1);
                    if (l == i) t.add(x, y, idx(k, j), -koszul(t.parity(x), t.parity(y)));
                }
            }
        }
    }
    auto& prov = t.provenance();
    prov.name = "gl";
    prov.params = {{"m", std::to_string(m)}, {"n", std::to_string(n)}};
    Vector z(N * N);
    for (std::size_t i = 0; i < N; ++i) z[idx(i, i)] = 1;
    prov.set_element("z", z);
    for (std::size_t i = 0; i < N; ++i) prov.set_element("cartan." + std::to_string(i + 1), unit_vector(N * N, idx(i, i)));
    if (m == n && m >= 2) {
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                if (i != j) prov.set_element("cover." + unit_label(i, j, m), unit_vector(N * N, idx(i, j)));
            }
        }
        // h_k = e_kk - e_{k+1,k+1} inside each block; h' = F z + h.
        std::vector<Vector> h;
        for (std::size_t k = 0; k + 1 < N; ++k) {
            if (k + 1 == m) continue;
            Vector v(N * N);
            v[idx(k, k)] = 1;
            v[idx(k + 1, k + 1)] = -1;
            h.push_back(v);
        }
        for (std::size_t a = 0; a < h.size(); ++a) prov.set_element("h." + std::to_string(a + 1), h[a]);
        prov.set_element("hprime.1", z);
        for (std::size_t a = 0; a < h.size(); ++a) prov.set_element("hprime." + std::to_string(a + 2), h[a]);
    }
    return validate_lie(std::move(t));
}

Rational supertrace(const LieSuperalgebra& gl, const Vector& x)
{
    const auto& prov = gl.provenance();
    if (prov.name != "gl") throw WrongAlgebra("supertrace: algebra is not gl(m,n)");
    const std::size_t m = param_of(prov, "m");
    const std::size_t N = m + param_of(prov, "n");
    if (x.size() != N * N) throw DimensionMismatch("supertrace: vector length differs from dim");
    Rational s;
    for (std::size_t i = 0; i < N; ++i) {
        if (i < m) {
            s += x[i * N + i];
        } else {
            s -= x[i * N + i];
        }
    }
    return s;
}

LieSuperalgebra construct_sl(std::size_t m, std::size_t n)
{
    const std::size_t N = m + n;
    if (N < 2) throw BadParams("sl(m,n) needs m+n >= 2");
    LieSuperalgebra gl = construct_gl(m, n);
    const std::size_t dim = N * N;
    const std::size_t last = N - 1;
    auto str_of = [m](std::size_t k) { return Rational(k < m ? 1 : -1); };
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            if (i != j) {
                basis.push_back(unit_vector(dim, i * N + j));
            } else if (i != last) {
                Vector v = unit_vector(dim, i * N + i);
                v[last * N + last] = -str_of(i) / str_of(last);
                basis.push_back(v);
            }
        }
    }
    StructureTable gt = gl.table();
    // Diagonal Cartan of sl: consecutive differences, with e_mm + e_{m+1,m+1}
    // across the block boundary.
    for (std::size_t k = 0; k + 1 < N; ++k) {
        Vector v(dim);
        v[k * N + k] = 1;
        v[(k + 1) * N + k + 1] = -str_of(k) / str_of(k + 1);
        gt.provenance().set_element("cartan." + std::to_string(k + 1), v);
    }
    StructureTable st = induced_table(gt, echelon_basis(basis, dim));
    st.provenance().name = "sl";
    return validate_lie(std::move(st));
}

Quotient construct_psl(std::size_t n)
{
    if (n < 1) throw BadParams("psl(n+1,n+1) needs n >= 1");
    LieSuperalgebra sl = construct_sl(n + 1, n + 1);
    const Vector* z = sl.provenance().element("z");
    Quotient q = quotient_central(sl, {*z});
    StructureTable t = q.algebra.table();
    t.provenance().name = "psl";
    t.provenance().params = {{"n", std::to_string(n)}};
    std::erase_if(t.provenance().elements, [](const auto& e) { return e.first.rfind("cartan.", 0) == 0; });
    return Quotient{LieSuperalgebra::trusted(std::move(t)), std::move(q.projection)};
}

AssocSuperalgebra construct_assoc(const std::string& kind, const std::vector<std::size_t>& params)
{
    auto expect = [&](std::size_t count) {
        if (params.size() != count) {
            throw BadParams(kind + " expects " + std::to_string(count) + " parameter(s)");
        }
    };
    if (kind == "field") {
        expect(0);
        StructureTable t(SuperSpace{{0}, {"1"}}, Kind::assoc);
        t.add(0, 0, 0, 1);
        t.set_unit(Vector{1});
        t.provenance().name = "field";
        return validate_assoc(std::move(t));
    }
    if (kind == "dual_numbers") {
        expect(0);
        StructureTable t(SuperSpace{{0, 0}, {"1", "t"}}, Kind::assoc);
        t.add(0, 0, 0, 1);
        t.add(0, 1, 1, 1);
        t.add(1, 0, 1, 1);
        t.set_unit(Vector{1, 0});
        t.provenance().name = "dual_numbers";
        return validate_assoc(std::move(t));
    }
    if (kind == "grassmann") {
        expect(1);
        const std::size_t k = params[0];
        if (k > 8) throw BadParams("grassmann(k) supports k <= 8");
        const std::size_t dim = std::size_t{1} << k;
        SuperSpace space;
        for (std::size_t s = 0; s < dim; ++s) {
            space.parity.push_back(static_cast<std::uint8_t>(std::popcount(s) & 1));
            std::string label;
            for (std::size_t g = 0; g < k; ++g) {
                if (s & (std::size_t{1} << g)) label += "xi" + std::to_string(g + 1);
            }
            space.labels.push_back(label.empty() ? "1" : label);
        }
        StructureTable t(space, Kind::assoc);
        for (std::size_t s = 0; s < dim; ++s) {
            for (std::size_t u = 0; u < dim; ++u) {
                if (s & u) continue;
                // Sign of sorting xi_S xi_U: pairs (a in S, b in U) with a > b.
                int inversions = 0;
                for (std::size_t b = 0; b < k; ++b) {
                    if (u & (std::size_t{1} << b)) inversions += std::popcount(s >> (b + 1));
                }
                t.add(s, u, s | u, (inversions & 1) ? -1 : 1);
            }
        }
        t.set_unit(unit_vector(dim, 0));
        t.provenance().name = "grassmann";
        t.provenance().params = {{"k", std::to_string(k)}};
        return validate_assoc(std::move(t));
    }
    if (kind == "matrix_super") {
        expect(2);
        const std::size_t p = params[0];
        const std::size_t q = params[1];
        const std::size_t N = p + q;
        if (N < 1) throw BadParams("matrix_super(p,q) needs p+q >= 1");
        StructureTable t = matrix_units_table(p, q, Kind::assoc, true);
        Vector unit(N * N);
        for (std::size_t i = 0; i < N; ++i) {
            unit[i * N + i] = 1;
            for (std::size_t j = 0; j < N; ++j) {
                for (std::size_t l = 0; l < N; ++l) t.add(i * N + j, j * N + l, i * N + l, 1);
            }
        }
        t.set_unit(unit);
        t.provenance().name = "matrix_super";
        t.provenance().params = {{"p", std::to_string(p)}, {"q", std::to_string(q)}};
        return validate_assoc(std::move(t));
    }
    throw BadParams("unknown associative superalgebra kind '" + kind + "'");
}

LieSuperalgebra construct_sl_A(std::size_t m, std::size_t n, const AssocSuperalgebra& a)
{
    if (m < 1 || n < 1) throw BadParams("sl_{m,n}(A) needs m,n >= 1");
    LieSuperalgebra g = tensor_lie_assoc(construct_gl(m, n), a);
    StructureTable t = induced_table(g.table(), derived_subalgebra(g));
    auto& prov = t.provenance();
    prov.name = "slA";
    prov.params = {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"A", a.provenance().name}};
    for (const auto& [k, v] : a.provenance().params) prov.params.emplace_back("A." + k, v);
    return validate_lie(std::move(t));
}

namespace {

StructureTable mplus_table(std::size_t n)
{
    StructureTable t = symmetrized_table(construct_assoc("matrix_super", {n, n}).table());
    t.provenance() = Provenance{};
    return t;
}

// M_{1,1}^+ copies: generic block pattern for Mplus, the JP / JQ assignments
// generalised from 4x4 blocks to n x n blocks with n even.
void add_m11_elements(StructureTable& t, const std::string& kind, std::size_t n)
{
    const std::size_t N = 2 * n;
    auto E = [&](Vector& v, std::size_t r, std::size_t c, const Rational& val) { v[(r - 1) * N + (c - 1)] += val; };
    Vector e1(N * N), e2(N * N), x(N * N), y(N * N);
    if (kind == "mplus") {
        for (std::size_t i = 1; i <= n; ++i) {
            E(e1, i, i, 1);
            E(e2, n + i, n + i, 1);
            E(x, i, n + i, 1);
            E(y, n + i, i, 2);
        }
    } else {
        if (n % 2 != 0) return;
        const std::size_t k = n / 2;
        for (std::size_t i = 1; i <= k; ++i) {
            E(e1, i, i, 1);
            E(e1, n + i, n + i, 1);
            E(e2, k + i, k + i, 1);
            E(e2, n + k + i, n + k + i, 1);
            E(x, i, n + k + i, 1);
            E(y, n + k + i, i, 2);
            if (kind == "jp") {
                E(x, k + i, n + i, -1);
                E(y, n + i, k + i, 2);
            } else {
                E(x, n + i, k + i, 1);
                E(y, k + i, n + i, 2);
            }
        }
    }
    t.provenance().set_element("m11.e1", e1);
    t.provenance().set_element("m11.e2", e2);
    t.provenance().set_element("m11.x", x);
    t.provenance().set_element("m11.y", y);
}

}  // namespace

JordanSuperalgebra construct_jordan(const std::string& kind, std::size_t n)
{
    if (kind == "m11") {
        StructureTable amb = mplus_table(1);
        Vector e1 = unit_vector(4, 0), e2 = unit_vector(4, 3), x = unit_vector(4, 1), y = scaled(unit_vector(4, 2), 2);
        StructureTable t = induced_table(amb, {e1, e2, x, y});
        t.space().labels = {"e1", "e2", "x", "y"};
        t.provenance().name = "m11";
        t.provenance().params.clear();
        t.provenance().elements.clear();
        t.provenance().set_element("m11.e1", unit_vector(4, 0));
        t.provenance().set_element("m11.e2", unit_vector(4, 1));
        t.provenance().set_element("m11.x", unit_vector(4, 2));
        t.provenance().set_element("m11.y", unit_vector(4, 3));
        return validate_jordan(std::move(t));
    }
    if (n < 1) throw BadParams("Jordan family needs n >= 1");
    StructureTable amb = mplus_table(n);
    amb.space().labels.clear();
    for (std::size_t i = 0; i < 2 * n; ++i) {
        for (std::size_t j = 0; j < 2 * n; ++j) {
            amb.space().labels.push_back("E[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]");
        }
    }
    if (kind == "mplus") {
        amb.provenance().name = "mplus";
        amb.provenance().params = {{"n", std::to_string(n)}};
        add_m11_elements(amb, kind, n);
        return validate_jordan(std::move(amb));
    }
    if (kind != "jp" && kind != "jq") throw BadParams("unknown Jordan family '" + kind + "'");

    const std::size_t N = 2 * n;
    const std::size_t dim = N * N;
    auto at = [&](std::size_t r, std::size_t c) { return r * N + c; };  // 0-based
    std::vector<Vector> basis;
    std::vector<std::string> labels;
    auto lbl = [](const char* part, std::size_t r, std::size_t c) {
        return std::string(part) + "[" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "]";
    };
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Vector v(dim);
            v[at(r, c)] += 1;
            if (kind == "jp") {
                v[at(n + c, n + r)] += 1;
            } else {
                v[at(n + r, n + c)] += 1;
            }
            basis.push_back(v);
            labels.push_back(lbl("a", r, c));
        }
    }
    if (kind == "jp") {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = r + 1; c < n; ++c) {
                Vector v(dim);
                v[at(r, n + c)] = 1;
                v[at(c, n + r)] = -1;
                basis.push_back(v);
                labels.push_back(lbl("b", r, c));
            }
        }
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = r; c < n; ++c) {
                Vector v(dim);
                v[at(n + r, c)] += 1;
                if (c != r) v[at(n + c, r)] += 1;
                basis.push_back(v);
                labels.push_back(lbl("c", r, c));
            }
        }
    } else {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                Vector v(dim);
                v[at(r, n + c)] = 1;
                v[at(n + r, c)] = 1;
                basis.push_back(v);
                labels.push_back(lbl("b", r, c));
            }
        }
    }
    add_m11_elements(amb, kind, n);
    StructureTable t = induced_table(amb, basis);  // throws if the span is not closed
    t.space().labels = labels;
    t.provenance().name = kind;
    t.provenance().params = {{"n", std::to_string(n)}};
    if (!t.unit()) throw BadParams(kind + ": identity matrix is not in the subspace");
    return validate_jordan(std::move(t));
}

}  // namespace supergrade
