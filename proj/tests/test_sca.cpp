#include <doctest.h>

#include <fstream>
#include <sstream>

#include "supergrade/constructors.hpp"
#include "supergrade/errors.hpp"
#include "supergrade/sca.hpp"

using namespace supergrade;

namespace {

std::string fixture(const std::string& name)
{
    std::ifstream in(std::string(SUPERGRADE_FIXTURES) + "/" + name, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t parse_error_line(const std::string& text)
{
    try {
        parse_sca(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("minimal document")
{
    StructureTable t = parse_sca("SCA/1\nkind lie\ndim 1\nparity 0\nend\n");
    CHECK(t.dim() == 1);
    CHECK(t.nnz() == 0);
    CHECK_NOTHROW(validate_lie(t));
}

TEST_CASE("sl2 fixture validates and round-trips")
{
    std::string text = fixture("sl2.sca");
    LieSuperalgebra l = read_lie(text);
    CHECK(l.dim() == 3);
    CHECK(l.table().nnz() == 6);
    std::string canon = write_sca(l.table());
    CHECK(write_sca(parse_sca(canon)) == canon);
    CHECK(parse_sca(canon) == l.table());
}

TEST_CASE("canonical output")
{
    StructureTable ab(SuperSpace{{0, 1}, {}}, Kind::lie);
    CHECK(write_sca(ab) == "SCA/1\nkind lie\ndim 2\nparity 0 1\nend\n");

    // Comments, blank lines and unordered sc lines normalize away.
    std::string messy = "# a comment\nSCA/1\nkind lie\ndim 3\nparity 0 0 0\n\nsc 1 3 2 1\nsc 3 1 2 -1  # [f,e]\n"
                        "sc 2 1 1 2\nsc 1 2 1 -2\nsc 2 3 3 -2\nsc 3 2 3 2\nend\n";
    std::string canon = write_sca(parse_sca(messy));
    CHECK(canon.find("#") == std::string::npos);
    CHECK(canon.find("sc 1 2 1 -2\nsc 1 3 2 1\n") != std::string::npos);
    CHECK(write_sca(parse_sca(canon)) == canon);
}

TEST_CASE("constructed algebras round-trip byte for byte")
{
    std::string a = write_sca(construct_sl(2, 1).table());
    std::string b = write_sca(construct_sl(2, 1).table());
    CHECK(a == b);
    for (const StructureTable& t : {construct_sl(2, 1).table(), construct_psl(1).algebra.table(),
                                    construct_jordan("m11").table(), construct_assoc("grassmann", {2}).table(),
                                    construct_sl_A(2, 2, construct_assoc("dual_numbers")).table()}) {
        std::string s = write_sca(t);
        StructureTable back = parse_sca(s);
        CHECK(back == t);
        CHECK(back.provenance().elements.size() == t.provenance().elements.size());
        CHECK(back.space().labels == t.space().labels);
        CHECK(write_sca(back) == s);
    }
    CHECK_NOTHROW(read_jordan(write_sca(construct_jordan("jq", 2).table())));
    CHECK_NOTHROW(read_assoc(write_sca(construct_assoc("matrix_super", {1, 1}).table())));
}

TEST_CASE("committed fixtures are canonical")
{
    for (const char* name : {"minimal.sca", "psl22.sca", "psl33.sca", "sl33.sca", "sl21.sca", "m11.sca", "jp4.sca",
                             "jq4.sca", "slA_grassmann.sca"}) {
        CAPTURE(name);
        std::string text = fixture(name);
        CHECK(write_sca(parse_sca(text)) == text);
    }
    CHECK(fixture("psl22.sca") == write_sca(construct_psl(1).algebra.table()));
    CHECK(fixture("m11.sca") == write_sca(construct_jordan("m11").table()));
}

TEST_CASE("strict parse errors carry line numbers")
{
    const std::string head = "SCA/1\nkind lie\ndim 1\nparity 0\n";
    CHECK(parse_error_line(head + "sc 1 1 1 2/4\nend\n") == 5);
    CHECK(parse_error_line(fixture("bad_reducible.sca")) > 0);
    CHECK(parse_error_line(head + "sc 1 1 1 1\nsc 1 1 1 1\nend\n") == 6);
    CHECK(parse_error_line(head + "sc 1 1 2 1\nend\n") == 5);
    CHECK(parse_error_line(head + "sc 0 1 1 1\nend\n") == 5);
    CHECK(parse_error_line(head + "sc 1 1 1 0\nend\n") == 5);
    CHECK(parse_error_line(head + "sc 1 1 1 +1\nend\n") == 5);
    CHECK(parse_error_line(head + "bogus\nend\n") == 5);
    CHECK(parse_error_line(head) == 5);  // end of input
    CHECK(parse_error_line(head + "end\nsc 1 1 1 1\n") == 6);
    CHECK(parse_error_line("SCA/2\n") == 1);
    CHECK(parse_error_line("SCA/1\nkind group\n") == 2);
    CHECK(parse_error_line("SCA/1\nkind lie\ndim 2\nparity 0\nend\n") == 4);
    CHECK(parse_error_line("SCA/1\nkind lie\ndim 2\nparity 0 2\nend\n") == 4);
    CHECK(parse_error_line("SCA/1\nkind lie\ndim 2\nparity 0 0\nlabel 1 a\nlabel 2 a\nend\n") == 6);
    CHECK(parse_error_line("SCA/1\nkind lie\ndim 2\nparity 0 0\nlabel 1 a\nend\n") == 6);
    CHECK(parse_error_line("SCA/1\nkind assoc\ndim 1\nparity 0\nunit 1\nunit 1\nend\n") == 6);
    CHECK(parse_error_line("SCA/1\nkind lie\ndim 1\nparity 0\nelem z 1:1\nelem z 1:2\nend\n") == 6);
}

TEST_CASE("validation errors are separate from parse errors")
{
    CHECK_THROWS_AS(read_lie(fixture("bad_jacobi.sca")), AxiomViolation);
    CHECK_THROWS_AS(parse_sca("SCA/1\nkind lie\ndim 2\nparity 0 1\nsc 1 1 2 1\nend\n"), AxiomViolation);
    CHECK_THROWS_AS(read_assoc("SCA/1\nkind assoc\ndim 1\nparity 0\nsc 1 1 1 1\nend\n"), MissingUnit);
    CHECK_THROWS_AS(read_lie("SCA/1\nkind jordan\ndim 1\nparity 0\nend\n"), WrongAlgebra);
}

TEST_CASE("units and elements")
{
    StructureTable t = parse_sca("SCA/1\nkind assoc\ndim 2\nparity 0 0\nunit 1:1 2:-1/2\nname demo\nparam k 3\n"
                                 "elem v 2:3\nelem zero\nend\n");
    REQUIRE(t.unit());
    CHECK(*t.unit() == Vector{1, Rational(-1, 2)});
    CHECK(t.provenance().name == "demo");
    CHECK(t.provenance().param("k") == std::optional<std::string>("3"));
    CHECK(*t.provenance().element("v") == Vector{0, 3});
    CHECK(is_zero(*t.provenance().element("zero")));
    std::string out = write_sca(t);
    CHECK(out.find("unit 1:1 2:-1/2\n") != std::string::npos);
    CHECK(parse_sca(out) == t);
}
