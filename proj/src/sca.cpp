#include "supergrade/sca.hpp"

#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "supergrade/errors.hpp"

namespace supergrade {

namespace {

std::vector<std::string> split_words(std::string_view line)
{
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    StructureTable run()
    {
        enum class Stage { header, kind, dim, parity, body, done } stage = Stage::header;
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            std::size_t nl = text_.find('\n', pos);
            std::string_view line = text_.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            pos = nl == std::string_view::npos ? text_.size() + 1 : nl + 1;
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
            auto w = split_words(line);
            if (w.empty()) continue;
            if (stage == Stage::done) fail("content after end");
            switch (stage) {
                case Stage::header:
                    if (w.size() != 1 || w[0] != "SCA/1") fail("expected SCA/1");
                    stage = Stage::kind;
                    break;
                case Stage::kind:
                    expect(w, "kind", 2);
                    if (w[1] != "lie" && w[1] != "assoc" && w[1] != "jordan") fail("unknown kind '" + w[1] + "'");
                    kind_ = kind_from_string(w[1]);
                    stage = Stage::dim;
                    break;
                case Stage::dim:
                    expect(w, "dim", 2);
                    dim_ = index(w[1], false);
                    stage = Stage::parity;
                    break;
                case Stage::parity:
                    if (w.empty() || w[0] != "parity") fail("expected parity");
                    if (w.size() != dim_ + 1) fail("parity needs " + std::to_string(dim_) + " entries");
                    for (std::size_t i = 1; i < w.size(); ++i) {
                        if (w[i] != "0" && w[i] != "1") fail("parity entries are 0 or 1");
                        space_.parity.push_back(static_cast<std::uint8_t>(w[i][0] - '0'));
                    }
                    stage = Stage::body;
                    break;
                case Stage::body:
                    if (w[0] == "end") {
                        if (w.size() != 1) fail("malformed end");
                        stage = Stage::done;
                        end_line_ = line_no_;
                    } else {
                        body(w);
                    }
                    break;
                case Stage::done: break;
            }
        }
        if (stage != Stage::done) fail("missing end");
        line_no_ = end_line_;
        return finish();
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_no_, msg); }

    void expect(const std::vector<std::string>& w, const char* key, std::size_t n) const
    {
        if (w[0] != key) fail(std::string("expected ") + key);
        if (w.size() != n) fail(std::string("malformed ") + key + " line");
    }

    std::size_t index(const std::string& s, bool one_based) const
    {
        if (s.empty() || s.size() > 9 || (s.size() > 1 && s[0] == '0')) fail("bad index '" + s + "'");
        std::size_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') fail("bad index '" + s + "'");
            v = v * 10 + static_cast<std::size_t>(c - '0');
        }
        if (one_based) {
            if (v < 1 || v > dim_) fail("index " + s + " out of range");
            return v - 1;
        }
        return v;
    }

    Rational coefficient(const std::string& s) const
    {
        Rational c;
        try {
            c = Rational::parse(s, true);
        } catch (const std::exception&) {
            fail("non-normalized or malformed rational '" + s + "'");
        }
        if (c.is_zero()) fail("zero coefficient");
        return c;
    }

    Vector combination(const std::vector<std::string>& w, std::size_t from) const
    {
        Vector v(dim_);
        std::set<std::size_t> seen;
        for (std::size_t a = from; a < w.size(); ++a) {
            auto colon = w[a].find(':');
            if (colon == std::string::npos) fail("expected i:c, got '" + w[a] + "'");
            std::size_t i = index(w[a].substr(0, colon), true);
            if (!seen.insert(i).second) fail("index repeated in combination");
            v[i] = coefficient(w[a].substr(colon + 1));
        }
        return v;
    }

    void body(const std::vector<std::string>& w)
    {
        const std::string& key = w[0];
        if (key == "sc") {
            if (w.size() != 5) fail("malformed sc line");
            std::size_t i = index(w[1], true), j = index(w[2], true), k = index(w[3], true);
            if (!sc_.emplace(std::make_tuple(i, j, k), coefficient(w[4])).second) fail("duplicate sc entry");
        } else if (key == "unit") {
            if (unit_) fail("duplicate unit");
            if (w.size() < 2) fail("malformed unit line");
            if (w.size() == 2 && w[1].find(':') == std::string::npos) {
                unit_ = unit_vector(dim_, index(w[1], true));
            } else {
                unit_ = combination(w, 1);
            }
        } else if (key == "label") {
            if (w.size() != 3) fail("malformed label line");
            std::size_t i = index(w[1], true);
            if (!labels_.emplace(i, w[2]).second) fail("duplicate label for index " + w[1]);
            if (!label_names_.insert(w[2]).second) fail("duplicate label '" + w[2] + "'");
        } else if (key == "name") {
            if (w.size() != 2) fail("malformed name line");
            if (!prov_.name.empty()) fail("duplicate name");
            prov_.name = w[1];
        } else if (key == "param") {
            if (w.size() != 3) fail("malformed param line");
            if (prov_.param(w[1])) fail("duplicate param '" + w[1] + "'");
            prov_.params.emplace_back(w[1], w[2]);
        } else if (key == "elem") {
            if (w.size() < 2) fail("malformed elem line");
            if (prov_.element(w[1])) fail("duplicate elem '" + w[1] + "'");
            prov_.elements.emplace_back(w[1], combination(w, 2));
        } else {
            fail("unknown directive '" + key + "'");
        }
    }

    StructureTable finish()
    {
        if (!labels_.empty()) {
            if (labels_.size() != dim_) fail("labels must cover every basis index");
            for (const auto& [i, name] : labels_) space_.labels.push_back(name);
        }
        StructureTable t(space_, kind_);
        for (const auto& [key, c] : sc_) {
            auto [i, j, k] = key;
            if (((t.parity(i) + t.parity(j)) & 1) != t.parity(k)) {
                throw AxiomViolation({i, j, k}, "parity homogeneity");
            }
            t.add(i, j, k, c);
        }
        t.set_unit(unit_);
        t.provenance() = prov_;
        return t;
    }

    std::string_view text_;
    std::size_t line_no_ = 0;
    std::size_t end_line_ = 0;
    Kind kind_ = Kind::lie;
    std::size_t dim_ = 0;
    SuperSpace space_;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> sc_;
    std::optional<Vector> unit_;
    std::map<std::size_t, std::string> labels_;
    std::set<std::string> label_names_;
    Provenance prov_;
};

void write_combination(std::ostringstream& os, const Vector& v)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) os << ' ' << i + 1 << ':' << v[i].to_string();
    }
}

}  // namespace

StructureTable parse_sca(std::string_view text)
{
    return Parser(text).run();
}

std::string write_sca(const StructureTable& t)
{
    std::ostringstream os;
    const std::size_t n = t.dim();
    os << "SCA/1\nkind " << to_string(t.kind()) << "\ndim " << n << "\nparity";
    for (std::size_t i = 0; i < n; ++i) os << ' ' << int(t.parity(i));
    os << '\n';
    if (const auto& u = t.unit()) {
        std::size_t nz = 0, at = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(*u)[i].is_zero()) ++nz, at = i;
        }
        if (nz == 1 && (*u)[at].is_one()) {
            os << "unit " << at + 1 << '\n';
        } else {
            os << "unit";
            write_combination(os, *u);
            os << '\n';
        }
    }
    const Provenance& p = t.provenance();
    if (!p.name.empty()) os << "name " << p.name << '\n';
    for (const auto& [k, v] : p.params) {
        if (!v.empty()) os << "param " << k << ' ' << v << '\n';
    }
    if (!t.space().labels.empty()) {
        for (std::size_t i = 0; i < n; ++i) os << "label " << i + 1 << ' ' << t.space().labels[i] << '\n';
    }
    for (const auto& [k, v] : p.elements) {
        os << "elem " << k;
        write_combination(os, v);
        os << '\n';
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto terms = t.product(i, j);
            std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.k < b.k; });
            for (const auto& e : terms) os << "sc " << i + 1 << ' ' << j + 1 << ' ' << e.k + 1 << ' ' << e.c.to_string() << '\n';
        }
    }
    os << "end\n";
    return os.str();
}

LieSuperalgebra read_lie(std::string_view text)
{
    return validate_lie(parse_sca(text));
}

AssocSuperalgebra read_assoc(std::string_view text)
{
    return validate_assoc(parse_sca(text));
}

JordanSuperalgebra read_jordan(std::string_view text)
{
    return validate_jordan(parse_sca(text));
}

}  // namespace supergrade
