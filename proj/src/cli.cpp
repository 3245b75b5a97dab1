#include "supergrade/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "supergrade/cohomology.hpp"
#include "supergrade/constructors.hpp"
#include "supergrade/errors.hpp"
#include "supergrade/jordan.hpp"
#include "supergrade/report.hpp"
#include "supergrade/roots.hpp"
#include "supergrade/sca.hpp"

namespace supergrade {

namespace {

// Outcome of a subcommand that finished without an exception.
struct Outcome {
    std::string text;
    int code = 0;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t to_size(const std::string& s)
{
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 6) {
        throw UsageError("expected a small non-negative integer, got '" + s + "'");
    }
    return static_cast<std::size_t>(std::stoul(s));
}

std::size_t cover_rank(const std::string& name)
{
    if (name == "sl22" || name == "psl22") return 1;
    if (name == "sl33" || name == "psl33") return 2;
    throw UsageError("unknown cover '" + name + "' (sl22, psl22, sl33, psl33)");
}

class Session {
public:
    explicit Session(std::vector<std::string> command) : command_(std::move(command)) {}

    StructureTable load(const std::string& path)
    {
        std::string text = read_file(path);
        inputs_.push_back({path, fnv1a64(text)});
        return parse_sca(text);
    }

    LieSuperalgebra load_lie(const std::string& path) { return validate_lie(load(path)); }
    JordanSuperalgebra load_jordan(const std::string& path) { return validate_jordan(load(path)); }

    Json report() const { return report_header(command_, inputs_); }

private:
    std::vector<std::string> command_;
    std::vector<InputDigest> inputs_;
};

/// Comma or whitespace separated rationals, "@file", or the name of an
/// element stored in the input.
Vector parse_vector(const std::string& spec, const StructureTable& t)
{
    if (const Vector* v = t.provenance().element(spec)) return *v;
    std::string text = spec;
    if (!text.empty() && text[0] == '@') text = read_file(text.substr(1));
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream ss(text);
    Vector v;
    std::string tok;
    while (ss >> tok) {
        try {
            v.push_back(Rational::parse(tok));
        } catch (const std::exception&) {
            throw UsageError("bad vector entry '" + tok + "'");
        }
    }
    if (v.size() != t.dim()) {
        throw UsageError("vector has " + std::to_string(v.size()) + " entries, algebra has dim " + std::to_string(t.dim()));
    }
    return v;
}

Vector vector_or_element(const std::string& spec, const StructureTable& t, const std::string& fallback)
{
    if (!spec.empty()) return parse_vector(spec, t);
    if (const Vector* v = t.provenance().element(fallback)) return *v;
    throw UsageError("no vector given and the input has no element '" + fallback + "'");
}

std::vector<Vector> cartan_or_default(const std::vector<std::string>& specs, const StructureTable& t)
{
    std::vector<Vector> out;
    for (const auto& s : specs) out.push_back(parse_vector(s, t));
    if (!out.empty()) return out;
    for (const char* prefix : {"h.", "cartan."}) {
        out = t.provenance().elements_with_prefix(prefix);
        if (!out.empty()) return out;
    }
    throw UsageError("no --cartan given and the input has no h.* or cartan.* elements");
}

Json dims_json(const SuperSpace& s, const std::vector<Vector>& basis)
{
    auto [e, o] = graded_dims(s, basis);
    return Json{{"even_dim", e}, {"odd_dim", o}};
}

Json grading_json(const LieSuperalgebra& l, const ThreeGrading& g)
{
    Json j;
    j["minus"] = dims_json(l.space(), g.minus);
    j["zero"] = dims_json(l.space(), g.zero);
    j["plus"] = dims_json(l.space(), g.plus);
    try {
        check_three_grading(l, g);
        j["closed"] = true;
    } catch (const NotThreeGraded& e) {
        j["closed"] = false;
        j["violation"] = e.what();
    }
    return j;
}

Outcome construct(const std::string& family, const std::vector<std::string>& p)
{
    auto need = [&](std::size_t k) {
        if (p.size() != k) throw UsageError("construct " + family + " takes " + std::to_string(k) + " parameter(s)");
    };
    auto assoc_from = [&](std::size_t from) {
        if (p.size() <= from) throw UsageError("missing associative algebra kind");
        std::vector<std::size_t> params;
        for (std::size_t i = from + 1; i < p.size(); ++i) params.push_back(to_size(p[i]));
        return construct_assoc(p[from], params);
    };
    if (family == "gl") {
        need(2);
        return {write_sca(construct_gl(to_size(p[0]), to_size(p[1])).table())};
    }
    if (family == "sl") {
        need(2);
        return {write_sca(construct_sl(to_size(p[0]), to_size(p[1])).table())};
    }
    if (family == "psl") {
        need(1);
        return {write_sca(construct_psl(to_size(p[0])).algebra.table())};
    }
    if (family == "slA") {
        if (p.size() < 3) throw UsageError("construct slA m n KIND [params]");
        return {write_sca(construct_sl_A(to_size(p[0]), to_size(p[1]), assoc_from(2)).table())};
    }
    if (family == "mplus" || family == "jp" || family == "jq") {
        need(1);
        return {write_sca(construct_jordan(family, to_size(p[0])).table())};
    }
    if (family == "m11") {
        need(0);
        return {write_sca(construct_jordan("m11").table())};
    }
    if (family == "assoc") return {write_sca(assoc_from(0).table())};
    throw UsageError("unknown family '" + family + "'");
}

Outcome check(Session& s, const std::string& path)
{
    StructureTable t = s.load(path);
    Json j = s.report();
    j["kind"] = to_string(t.kind());
    j["dim"] = t.dim();
    j["even_dim"] = t.space().even_dim();
    j["odd_dim"] = t.space().odd_dim();
    j["nnz"] = t.nnz();
    try {
        switch (t.kind()) {
            case Kind::lie: validate_lie(t); break;
            case Kind::assoc: validate_assoc(t); break;
            case Kind::jordan: validate_jordan(t); break;
        }
        j["valid"] = true;
        return {dump_report(j), 0};
    } catch (const AxiomViolation& e) {
        j["valid"] = false;
        j["axiom"] = e.axiom();
        std::vector<std::size_t> idx;
        for (auto i : e.indices()) idx.push_back(i + 1);
        j["indices"] = idx;
        return {dump_report(j), 1};
    } catch (const MissingUnit& e) {
        j["valid"] = false;
        j["axiom"] = std::string("unit: ") + e.what();
        return {dump_report(j), 1};
    }
}

Outcome decompose(Session& s, const std::string& path, const std::vector<std::string>& cartan)
{
    LieSuperalgebra l = s.load_lie(path);
    RootDatum d = weight_decomposition(l, cartan_or_default(cartan, l.table()));
    Json j = s.report();
    j["root_datum"] = to_json(d);
    auto v = check_grading_closure(l, d);
    j["grading_closure"] = Json{{"pass", !v}, {"detail", v.value_or("[L_a,L_b] lies in L_(a+b) for all weights")}};
    return {dump_report(j), v ? 1 : 0};
}

Outcome verify_grading(Session& s, const std::string& path, const std::string& cover_name)
{
    LieSuperalgebra l = s.load_lie(path);
    const std::size_t n = cover_rank(cover_name);
    CoverEmbedding cover = cover_from_provenance(l, n);
    GradingReport r = verify_delta_graded(l, cover);
    Json j = s.report();
    j["cover"] = cover_name;
    j["grading"] = to_json(r);
    j["z_check"] = to_json(check_z_trivial(l, cover));
    if (r.graded && n >= 2) j["three_grading"] = grading_json(l, three_grading_height(l, r.datum));
    return {dump_report(j), r.graded ? 0 : 1};
}

Outcome three_grading(Session& s, const std::string& path, const std::string& h_spec, const std::string& cover_name)
{
    LieSuperalgebra l = s.load_lie(path);
    Json j = s.report();
    ThreeGrading g;
    if (!cover_name.empty()) {
        if (!h_spec.empty()) throw UsageError("give either --grading-element or --cover");
        const std::size_t n = cover_rank(cover_name);
        CoverEmbedding cover = cover_from_provenance(l, n);
        g = three_grading_height(l, weight_decomposition(l, cover.cartan(l)));
        j["style"] = "height";
    } else {
        Vector h;
        if (!h_spec.empty()) {
            h = parse_vector(h_spec, l.table());
        } else {
            const Vector* e = l.provenance().element("tkk.e");
            const Vector* f = l.provenance().element("tkk.f");
            if (!e || !f) throw UsageError("no --grading-element given and the input has no tkk.e/tkk.f elements");
            h = bracket(l, *e, *f);
        }
        g = three_grading_sl2(l, h);
        j["style"] = "sl2";
    }
    Json gj = grading_json(l, g);
    const bool closed = gj["closed"].get<bool>();
    j["three_grading"] = std::move(gj);
    return {dump_report(j), closed ? 0 : 1};
}

Outcome run_tkk(Session& s, const std::string& path)
{
    JordanSuperalgebra jd = s.load_jordan(path);
    TKKAlgebra t = tkk(jd);
    StructureTable out = t.lie.table();
    const Provenance& p = jd.provenance();
    const Vector *e1 = p.element("m11.e1"), *e2 = p.element("m11.e2"), *x = p.element("m11.x"), *y = p.element("m11.y");
    if (e1 && e2 && x && y) {
        M11Certificate cert = certify_m11(jd, *e1, *e2, *x, *y);
        if (cert.pass()) {
            CoverEmbedding cover = tkk_m11_embedding(t, cert);
            for (const auto& [ij, v] : cover.images) {
                out.provenance().set_element("cover." + unit_label(ij.first, ij.second, 2), v);
            }
        }
    }
    return {write_sca(out)};
}

Outcome run_jordan_from_grading(Session& s, const std::string& path, const std::string& e_spec,
                                const std::string& f_spec)
{
    LieSuperalgebra l = s.load_lie(path);
    Vector e = vector_or_element(e_spec, l.table(), "tkk.e");
    Vector f = vector_or_element(f_spec, l.table(), "tkk.f");
    return {write_sca(jordan_from_3grading(l, e, f).table())};
}

Outcome run_peirce(Session& s, const std::string& path, const std::string& idem)
{
    JordanSuperalgebra jd = s.load_jordan(path);
    Vector e = vector_or_element(idem, jd.table(), "m11.e1");
    PeirceDecomposition pd = peirce(jd, e);
    auto v = check_peirce_laws(jd, pd);
    Json j = s.report();
    j["idempotent"] = to_json(e);
    j["j0"] = dims_json(jd.space(), pd.j0);
    j["j1"] = dims_json(jd.space(), pd.j1);
    j["j2"] = dims_json(jd.space(), pd.j2);
    j["laws"] = Json{{"pass", !v}, {"detail", v.value_or("J2.J0 = 0 and (J2,J,J0) = 0")}};
    return {dump_report(j), v ? 1 : 0};
}

Outcome run_certify(Session& s, const std::string& path, const std::array<std::string, 4>& specs)
{
    JordanSuperalgebra jd = s.load_jordan(path);
    const char* names[4] = {"m11.e1", "m11.e2", "m11.x", "m11.y"};
    std::array<Vector, 4> v;
    for (int i = 0; i < 4; ++i) v[i] = vector_or_element(specs[i], jd.table(), names[i]);
    M11Certificate c = certify_m11(jd, v[0], v[1], v[2], v[3]);
    Json j = s.report();
    j["certificate"] = to_json(c);
    return {dump_report(j), c.pass() ? 0 : 1};
}

Outcome run_h2(Session& s, const std::string& path)
{
    LieSuperalgebra l = s.load_lie(path);
    auto [e, o] = h2_dims(l);
    Json j = s.report();
    j["h2_even"] = e;
    j["h2_odd"] = o;
    return {dump_report(j)};
}

Outcome run_uce(Session& s, const std::string& path)
{
    return {write_sca(uce(s.load_lie(path)).extended.table())};
}

Outcome run_fingerprint(Session& s, const std::string& path, const std::vector<std::string>& cartan)
{
    LieSuperalgebra l = s.load_lie(path);
    std::vector<Vector> c;
    for (const auto& spec : cartan) c.push_back(parse_vector(spec, l.table()));
    Json j = s.report();
    j["fingerprint"] = to_json(fingerprint(l, c.empty() ? nullptr : &c));
    return {dump_report(j)};
}

Outcome run_isogenous(Session& s, const std::string& a, const std::string& b)
{
    LieSuperalgebra l1 = s.load_lie(a);
    LieSuperalgebra l2 = s.load_lie(b);
    IsogenyResult r = isogenous(l1, l2);
    Json j = s.report();
    j["verdict"] = to_string(r.verdict);
    j["detail"] = r.detail;
    j["first"] = to_json(r.first);
    j["second"] = to_json(r.second);
    return {dump_report(j), r.verdict == Isogeny::equal ? 0 : 1};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations with Lie and Jordan superalgebras", "supergrade"};
    app.require_subcommand(1);

    std::string out_path;
    std::string file, file2, family, cover, h_spec, e_spec, f_spec, idem;
    std::vector<std::string> params, cartan;
    std::array<std::string, 4> m11_specs;

    auto sub = [&](const char* name, const char* desc) {
        CLI::App* c = app.add_subcommand(name, desc);
        c->add_option("--out", out_path, "Write the result to this file instead of stdout");
        return c;
    };
    auto with_file = [&](CLI::App* c) { c->add_option("file", file, "SCA input")->required(); };

    CLI::App* c_construct = sub("construct", "Build an algebra and print it as SCA");
    c_construct->add_option("family", family, "gl|sl|psl|slA|mplus|jp|jq|m11|assoc")->required();
    c_construct->add_option("params", params, "Family parameters");

    CLI::App* c_check = sub("check", "Validate an SCA file against its kind");
    with_file(c_check);
    CLI::App* c_decompose = sub("decompose", "Root space decomposition");
    with_file(c_decompose);
    c_decompose->add_option("--cartan", cartan, "Cartan element (repeatable)");
    CLI::App* c_verify = sub("verify-grading", "Check the three conditions of a root grading");
    with_file(c_verify);
    c_verify->add_option("--cover", cover, "sl22|psl22|sl33|psl33")->required();
    CLI::App* c_three = sub("three-grading", "Eigenspace 3-grading and its closure");
    with_file(c_three);
    c_three->add_option("--grading-element", h_spec, "Element h with eigenvalues -2, 0, 2");
    c_three->add_option("--cover", cover, "Use the height grading of this cover");
    CLI::App* c_tkk = sub("tkk", "TKK algebra of a unital Jordan superalgebra");
    with_file(c_tkk);
    CLI::App* c_jfg = sub("jordan-from-grading", "Jordan superalgebra on L(1)");
    with_file(c_jfg);
    c_jfg->add_option("--e", e_spec, "Element e of L(1)");
    c_jfg->add_option("--f", f_spec, "Element f of L(-1)");
    CLI::App* c_peirce = sub("peirce", "Peirce decomposition");
    with_file(c_peirce);
    c_peirce->add_option("--idempotent", idem, "Idempotent element");
    CLI::App* c_cert = sub("certify-m11", "Check the M11 relations on four elements");
    with_file(c_cert);
    c_cert->add_option("--e1", m11_specs[0]);
    c_cert->add_option("--e2", m11_specs[1]);
    c_cert->add_option("--x", m11_specs[2]);
    c_cert->add_option("--y", m11_specs[3]);
    CLI::App* c_h2 = sub("h2", "Dimensions of H^2 with trivial coefficients");
    with_file(c_h2);
    CLI::App* c_uce = sub("uce", "Universal central extension as SCA");
    with_file(c_uce);
    CLI::App* c_fp = sub("fingerprint", "Isogeny invariants");
    with_file(c_fp);
    c_fp->add_option("--cartan", cartan, "Cartan element (repeatable)");
    CLI::App* c_iso = sub("isogenous", "Compare the central quotients of two algebras");
    c_iso->add_option("first", file, "SCA input")->required();
    c_iso->add_option("second", file2, "SCA input")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Session s(args);
    Outcome o;
    try {
        if (*c_construct) o = construct(family, params);
        else if (*c_check) o = check(s, file);
        else if (*c_decompose) o = decompose(s, file, cartan);
        else if (*c_verify) o = verify_grading(s, file, cover);
        else if (*c_three) o = three_grading(s, file, h_spec, cover);
        else if (*c_tkk) o = run_tkk(s, file);
        else if (*c_jfg) o = run_jordan_from_grading(s, file, e_spec, f_spec);
        else if (*c_peirce) o = run_peirce(s, file, idem);
        else if (*c_cert) o = run_certify(s, file, m11_specs);
        else if (*c_h2) o = run_h2(s, file);
        else if (*c_uce) o = run_uce(s, file);
        else if (*c_fp) o = run_fingerprint(s, file, cartan);
        else if (*c_iso) o = run_isogenous(s, file, file2);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (out_path.empty()) {
        out << o.text;
    } else {
        std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
        if (!f || !(f << o.text) || !f.flush()) {
            err << "error: cannot write '" << out_path << "'\n";
            return 2;
        }
    }
    return o.code;
}

}  // namespace supergrade
