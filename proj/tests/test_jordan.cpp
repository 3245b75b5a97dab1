#include <doctest.h>

#include "supergrade/cohomology.hpp"
#include "supergrade/constructors.hpp"
#include "supergrade/errors.hpp"
#include "supergrade/jordan.hpp"

using namespace supergrade;

namespace {

// Coordinates in JP(n)/JQ(n) of an 2n x 2n matrix given as (row, col, value)
// triples with 1-based indices, read through the basis labels.
Vector from_matrix(const JordanSuperalgebra& j, std::size_t n,
                   const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& entries)
{
    std::vector<std::vector<Rational>> m(2 * n, std::vector<Rational>(2 * n));
    for (const auto& [r, c, v] : entries) m[r - 1][c - 1] += v;
    Vector out(j.dim());
    for (std::size_t i = 0; i < j.dim(); ++i) {
        std::string lbl = j.space().label(i);
        char part = lbl[0];
        std::size_t comma = lbl.find(',');
        std::size_t r = std::stoul(lbl.substr(2, comma - 2)) - 1;
        std::size_t c = std::stoul(lbl.substr(comma + 1)) - 1;
        if (part == 'a') out[i] = m[r][c];
        if (part == 'b') out[i] = m[r][n + c];
        if (part == 'c') out[i] = m[n + r][c];
    }
    return out;
}

using Entries = std::vector<std::tuple<std::size_t, std::size_t, Rational>>;

const Entries kE1 = {{1, 1, 1}, {2, 2, 1}, {5, 5, 1}, {6, 6, 1}};
const Entries kE2 = {{3, 3, 1}, {4, 4, 1}, {7, 7, 1}, {8, 8, 1}};
const Entries kXP = {{1, 7, 1}, {2, 8, 1}, {3, 5, -1}, {4, 6, -1}};
const Entries kYP = {{7, 1, 2}, {8, 2, 2}, {5, 3, 2}, {6, 4, 2}};
const Entries kXQ = {{1, 7, 1}, {2, 8, 1}, {5, 3, 1}, {6, 4, 1}};
const Entries kYQ = {{7, 1, 2}, {8, 2, 2}, {3, 5, 2}, {4, 6, 2}};

}  // namespace

TEST_CASE("symmetrized algebras")
{
    JordanSuperalgebra m = symmetrized(construct_assoc("matrix_super", {1, 1}));
    CHECK(m.dim() == 4);
    JordanSuperalgebra f = symmetrized(construct_assoc("field"));
    CHECK(f.dim() == 1);
    CHECK(f.table().product_vector(0, 0) == unit_vector(1, 0));
    // In Lambda(2): xi1.xi2 = 1/2 (xi1 xi2 - xi2 xi1) = xi1 xi2.
    AssocSuperalgebra g = construct_assoc("grassmann", {2});
    JordanSuperalgebra gj = symmetrized(g);
    CHECK(gj.table().product_vector(1, 2) == g.table().product_vector(1, 2));
    CHECK_FALSE(is_zero(gj.table().product_vector(1, 2)));
}

TEST_CASE("Peirce decomposition")
{
    JordanSuperalgebra m11 = construct_jordan("m11");
    PeirceDecomposition p = peirce(m11, unit_vector(4, 0));
    CHECK(p.j0.size() == 1);
    CHECK(p.j1.size() == 2);
    CHECK(p.j2.size() == 1);
    CHECK(echelon_basis({p.j1[0], p.j1[1], unit_vector(4, 2), unit_vector(4, 3)}, 4).size() == 2);
    CHECK_FALSE(check_peirce_laws(m11, p));

    PeirceDecomposition u = peirce(m11, *m11.table().unit());
    CHECK(u.j2.size() == 4);
    CHECK(u.j0.empty());
    CHECK(u.j1.empty());

    JordanSuperalgebra jp = construct_jordan("jp", 4);
    PeirceDecomposition q = peirce(jp, from_matrix(jp, 4, kE1));
    CHECK(q.j0.size() + q.j1.size() + q.j2.size() == 32);
    CHECK_FALSE(check_peirce_laws(jp, q));
    auto [e2, o2] = graded_dims(jp.space(), q.j2);
    auto [e1, o1] = graded_dims(jp.space(), q.j1);
    auto [e0, o0] = graded_dims(jp.space(), q.j0);
    CHECK(e0 + e1 + e2 == 16);
    CHECK(o0 + o1 + o2 == 16);

    CHECK_THROWS_AS(peirce(m11, unit_vector(4, 2)), NotIdempotent);
    CHECK_THROWS_AS(peirce(m11, scaled(unit_vector(4, 0), 2)), NotIdempotent);
}

TEST_CASE("Peirce laws on Mplus and JQ")
{
    JordanSuperalgebra mp = construct_jordan("mplus", 2);
    PeirceDecomposition p = peirce(mp, *mp.provenance().element("m11.e1"));
    CHECK_FALSE(check_peirce_laws(mp, p));
    JordanSuperalgebra jq = construct_jordan("jq", 4);
    PeirceDecomposition q = peirce(jq, from_matrix(jq, 4, kE1));
    CHECK_FALSE(check_peirce_laws(jq, q));
}

TEST_CASE("tkk of small Jordan algebras")
{
    StructureTable q(SuperSpace{{0}, {}}, Kind::jordan);
    q.add(0, 0, 0, 1);
    q.set_unit(unit_vector(1, 0));
    TKKAlgebra t1 = tkk(validate_jordan(q));
    CHECK(t1.lie.dim() == 3);

    JordanSuperalgebra m11 = construct_jordan("m11");
    TKKAlgebra t = tkk(m11);
    CHECK(t.lie.space().even_dim() == 6);
    CHECK(t.lie.space().odd_dim() == 8);
    CHECK(graded_dims(t.lie.space(), t.parts.zero) == std::pair<std::size_t, std::size_t>{2, 4});
    CHECK(center(t.lie.table()).empty());
    CHECK(bracket(t.lie, t.h, t.e) == scaled(t.e, 2));
    CHECK(bracket(t.lie, t.h, t.f) == scaled(t.f, -2));
    for (const auto& a : t.parts.plus)
        for (const auto& b : t.parts.plus) CHECK(is_zero(bracket(t.lie, a, b)));
    for (const auto& a : t.parts.minus)
        for (const auto& b : t.parts.minus) CHECK(is_zero(bracket(t.lie, a, b)));
    // ad h has exactly the eigenvalues 2, 0, -2.
    auto ev = rational_eigenvalues(ad_matrix(t.lie, t.h));
    REQUIRE(ev.size() == 3);
    CHECK(ev[0].value == 2);
    CHECK(ev[1].value == 0);
    CHECK(ev[2].value == -2);
    // T(0) = [T(1), T(-1)].
    RowEchelon inner(t.lie.dim());
    for (const auto& a : t.parts.plus)
        for (const auto& b : t.parts.minus) inner.insert(bracket(t.lie, a, b));
    CHECK(inner.rank() == t.parts.zero.size());

    TKKAlgebra tm = tkk(construct_jordan("mplus", 2));
    CHECK(graded_dims(tm.lie.space(), tm.parts.plus) == std::pair<std::size_t, std::size_t>{8, 8});
    // M_{2,2}^+ sits in gl(4,4) as the off-diagonal block; its TKK is psl(4,4).
    const std::size_t k = 4;
    CHECK(tm.lie.dim() == 2 * k * k + 2 * k * k - 2);
    CHECK(tm.lie.space().odd_dim() == 2 * k * k);
    CHECK(is_perfect(tm.lie));
    CHECK(center(tm.lie.table()).empty());
}

TEST_CASE("Jordan algebra from a 3-grading")
{
    // psl(2,2) with the diagonal sl2.
    LieSuperalgebra p = construct_psl(1).algebra;
    const Provenance& pr = p.provenance();
    Vector e = add(*pr.element("cover.e[1,2]"), *pr.element("cover.e[1',2']"));
    Vector f = add(*pr.element("cover.e[2,1]"), *pr.element("cover.e[2',1']"));
    JordanSuperalgebra j = jordan_from_3grading(p, e, f);
    CHECK(j.dim() == 4);
    JordanSuperalgebra m11 = construct_jordan("m11");
    // L(1) keeps the labels of psl(2,2); e1 = e_12, e2 = e_1'2', x = e_12', y = 2 e_1'2.
    auto coord = [&](const std::string& label) {
        for (std::size_t i = 0; i < j.dim(); ++i)
            if (j.space().label(i) == label) return unit_vector(4, i);
        FAIL("missing label " << label);
        return Vector(4);
    };
    Vector je1 = coord("e[1,2]"), je2 = coord("e[1',2']"), jx = coord("e[1,2']"), jy = scaled(coord("e[1',2]"), 2);
    M11Certificate cert = certify_m11(j, je1, je2, jx, jy);
    CHECK(cert.pass());
    StructureTable ind = induced_table(j.table(), {je1, je2, jx, jy});
    CHECK(ind == m11.table());

    // sl2 with its standard triple gives the field.
    StructureTable sl2(SuperSpace{{0, 0, 0}, {}}, Kind::lie);
    sl2.add(0, 2, 1, 1);
    sl2.add(2, 0, 1, -1);
    sl2.add(1, 0, 0, 2);
    sl2.add(0, 1, 0, -2);
    sl2.add(1, 2, 2, -2);
    sl2.add(2, 1, 2, 2);
    JordanSuperalgebra q = jordan_from_3grading(validate_lie(sl2), unit_vector(3, 0), unit_vector(3, 2));
    CHECK(q.dim() == 1);
    CHECK(q.table().product_vector(0, 0) == unit_vector(1, 0));

    // f outside L(-1).
    CHECK_THROWS_AS(jordan_from_3grading(p, e, e), NotThreeGraded);
}

TEST_CASE("round trip through tkk")
{
    for (const auto& jd : {construct_jordan("m11"), construct_jordan("mplus", 2), construct_jordan("jq", 2),
                           construct_jordan("jp", 2)}) {
        TKKAlgebra t = tkk(jd);
        JordanSuperalgebra back = jordan_from_3grading(t.lie, t.e, t.f);
        CHECK(back.table() == jd.table());
    }
}

TEST_CASE("M11 certificates")
{
    JordanSuperalgebra jp = construct_jordan("jp", 4);
    Vector e1 = from_matrix(jp, 4, kE1), e2 = from_matrix(jp, 4, kE2);
    Vector x = from_matrix(jp, 4, kXP), y = from_matrix(jp, 4, kYP);
    M11Certificate cp = certify_m11(jp, e1, e2, x, y);
    CHECK(cp.pass());
    CHECK(cp.relations.size() >= 12);
    CHECK(*jp.provenance().element("m11.x") == x);
    CHECK(*jp.provenance().element("m11.y") == y);

    JordanSuperalgebra jq = construct_jordan("jq", 4);
    M11Certificate cq = certify_m11(jq, from_matrix(jq, 4, kE1), from_matrix(jq, 4, kE2), from_matrix(jq, 4, kXQ),
                                    from_matrix(jq, 4, kYQ));
    CHECK(cq.pass());

    JordanSuperalgebra mp = construct_jordan("mplus", 3);
    const Provenance& p = mp.provenance();
    CHECK(certify_m11(mp, *p.element("m11.e1"), *p.element("m11.e2"), *p.element("m11.x"), *p.element("m11.y")).pass());

    // y without the factor 2 breaks x.y = e1 - e2.
    M11Certificate bad = certify_m11(jp, e1, e2, x, scaled(y, Rational(1, 2)));
    CHECK_FALSE(bad.pass());
}

TEST_CASE("certified copies give A(1,1)-graded TKK algebras")
{
    JordanSuperalgebra m11 = construct_jordan("m11");
    TKKAlgebra t = tkk(m11);
    const Provenance& p = m11.provenance();
    M11Certificate c = certify_m11(m11, *p.element("m11.e1"), *p.element("m11.e2"), *p.element("m11.x"),
                                   *p.element("m11.y"));
    GradingReport r = verify_delta_graded(t.lie, tkk_m11_embedding(t, c));
    CHECK(r.graded);
    CHECK(r.matched_n == std::size_t(1));

    IsogenyResult iso = isogenous(t.lie, construct_psl(1).algebra);
    CHECK(iso.verdict == Isogeny::equal);

    JordanSuperalgebra jq = construct_jordan("jq", 2);
    const Provenance& q = jq.provenance();
    TKKAlgebra tq = tkk(jq);
    M11Certificate cq =
        certify_m11(jq, *q.element("m11.e1"), *q.element("m11.e2"), *q.element("m11.x"), *q.element("m11.y"));
    REQUIRE(cq.pass());
    CHECK(verify_delta_graded(tq.lie, tkk_m11_embedding(tq, cq)).graded);
}
