#include "rootfun/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace rootfun {

using json = nlohmann::ordered_json;

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& message)
    : Error(line == 0 ? "syntax error: " + message
                      : "syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

// ---------------------------------------------------------------- expressions

struct Token {
    enum class Kind { integer, ident, symbol, end } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s, std::size_t line, std::size_t col0) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Token::Kind::integer, std::string(s.substr(start, i - start)), start});
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Token::Kind::ident, std::string(s.substr(start, i - start)), start});
        } else if (std::string_view("+-*^()").find(c) != std::string_view::npos) {
            out.push_back({Token::Kind::symbol, std::string(1, c), i});
            ++i;
        } else {
            throw SyntaxError(line, col0 + i, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::Kind::end, "", s.size()});
    return out;
}

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const std::vector<std::string>& vars, const Field& field,
                     std::size_t line, std::size_t col0)
        : tokens_(tokenize(text, line, col0)), vars_(vars), field_(field), line_(line), col0_(col0) {}

    Poly parse() {
        if (peek().kind == Token::Kind::end) fail(peek(), "empty expression");
        Poly p = expr();
        const Token& t = peek();
        if (t.kind != Token::Kind::end) {
            if (t.kind == Token::Kind::symbol && t.text == ")") fail(t, "unbalanced ')'");
            if (t.kind == Token::Kind::symbol && t.text == "^") fail(t, "exponent must follow a variable, number or group");
            fail(t, "implicit multiplication is not allowed (use '*')");
        }
        return p;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    bool accept(const char* sym) {
        if (peek().kind == Token::Kind::symbol && peek().text == sym) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const Token& t, const std::string& msg) const {
        throw SyntaxError(line_, col0_ + t.pos, msg + (t.kind == Token::Kind::end ? " (at end of input)" : ""));
    }

    Poly expr() {
        Poly acc = term();
        while (true) {
            if (accept("+"))
                acc += term();
            else if (accept("-"))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = unary();
        while (accept("*")) acc = acc * unary();
        return acc;
    }

    Poly unary() {
        if (accept("-")) return -unary();
        if (accept("+")) return unary();
        return power();
    }

    Poly power() {
        Poly base = atom();
        if (!accept("^")) return base;
        const Token& t = peek();
        if (t.kind != Token::Kind::integer) fail(t, "exponent must be a non-negative integer");
        ++pos_;
        if (t.text.size() > 6) fail(t, "exponent too large");
        const auto k = static_cast<std::uint32_t>(std::stoul(t.text));
        if (k == 0) return Poly::constant(vars_.size(), field_.one());
        return pow(base, k);
    }

    Poly atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::integer:
                ++pos_;
                return Poly::constant(vars_.size(), field_.parse(t.text));
            case Token::Kind::ident: {
                const auto it = std::find(vars_.begin(), vars_.end(), t.text);
                if (it == vars_.end()) fail(t, "undeclared variable '" + t.text + "'");
                ++pos_;
                return Poly::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()), field_);
            }
            case Token::Kind::symbol:
                if (t.text == "(") {
                    ++pos_;
                    Poly inner = expr();
                    if (!accept(")")) fail(peek(), "expected ')'");
                    return inner;
                }
                fail(t, "unexpected '" + t.text + "'");
            case Token::Kind::end:
                break;
        }
        fail(t, "expected a number, variable or '('");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const std::vector<std::string>& vars_;
    const Field& field_;
    std::size_t line_;
    std::size_t col0_;
};

// ---------------------------------------------------------------- file lines

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Field parse_field(std::string_view value, std::size_t line, std::size_t col) {
    const auto words = split_ws(value);
    if (words.size() == 1 && words[0] == "Q") return Field::rationals();
    if (words.size() == 2 && words[0] == "Fp") {
        const auto& p = words[1];
        if (p.empty() || p.size() > 12 || !std::all_of(p.begin(), p.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw SyntaxError(line, col, "field modulus must be a positive integer");
        return Field::prime_field(std::stoull(p));
    }
    throw SyntaxError(line, col, "field must be 'Q' or 'Fp <prime>'");
}

FixtureRoot parse_root(std::string_view value, const Field& field, std::size_t nvars, std::size_t line,
                       std::size_t col) {
    FixtureRoot root;
    const auto at = value.find('@');
    const auto coords = split_ws(value.substr(0, at));
    if (coords.size() != nvars)
        throw SyntaxError(line, col, "root has " + std::to_string(coords.size()) + " coordinates, expected " +
                                         std::to_string(nvars));
    for (const auto& c : coords) {
        try {
            root.point.push_back(field.parse(c));
        } catch (const SyntaxError&) {
            throw;
        } catch (const Error& e) {
            throw SyntaxError(line, col, e.what());
        }
    }
    if (at == std::string_view::npos) {
        root.derivatives.emplace_back(nvars, 0);
        return root;
    }
    std::string rest(value.substr(at + 1));
    std::istringstream groups(rest);
    for (std::string group; std::getline(groups, group, ';');) {
        const auto words = split_ws(group);
        if (words.size() != nvars) throw SyntaxError(line, col, "derivative exponent vector needs " + std::to_string(nvars) + " entries");
        std::vector<std::uint32_t> beta;
        for (const auto& w : words) {
            if (w.empty() || w.size() > 6 || !std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw SyntaxError(line, col, "derivative exponents must be non-negative integers");
            beta.push_back(static_cast<std::uint32_t>(std::stoul(w)));
        }
        root.derivatives.push_back(std::move(beta));
    }
    if (root.derivatives.empty()) throw SyntaxError(line, col, "empty derivative list after '@'");
    return root;
}

// ---------------------------------------------------------------- certificates

const char* const kFormat = "rootfun-certificate";
constexpr int kVersion = 1;
const char* const kOrder =
    "graded lexicographic, x1 > x2 > ... > xn; bases list monomials by ascending degree, lex-descending within a degree";

json functional_to_json(std::span<const Scalar> values, const MonomialBasis& basis,
                        const std::vector<std::string>& names) {
    json j = json::object();
    for (std::size_t i = 0; i < basis.size(); ++i) j[basis[i].to_string(names)] = values[i].to_string();
    return j;
}

json poly_to_json(const Poly& p, const std::vector<std::string>& names) {
    // Ascending basis order so maps read like functionals.
    std::vector<std::pair<Monomial, Scalar>> terms(p.terms().begin(), p.terms().end());
    std::reverse(terms.begin(), terms.end());
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& a, const auto& b) { return a.first.degree() < b.first.degree(); });
    json j = json::object();
    for (const auto& [m, c] : terms) j[m.to_string(names)] = c.to_string();
    return j;
}

json scalars_to_json(std::span<const Scalar> v) {
    json j = json::array();
    for (const auto& s : v) j.push_back(s.to_string());
    return j;
}

Monomial parse_monomial(const std::string& text, const std::vector<std::string>& names) {
    std::vector<std::uint32_t> e(names.size(), 0);
    if (text == "1") return Monomial(e);
    std::istringstream in(text);
    for (std::string factor; std::getline(in, factor, '*');) {
        const auto caret = factor.find('^');
        const std::string name = factor.substr(0, caret);
        const auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw Error("certificate: unknown variable '" + name + "' in monomial '" + text + "'");
        std::uint32_t k = 1;
        if (caret != std::string::npos) {
            const std::string power = factor.substr(caret + 1);
            if (power.empty() || !std::all_of(power.begin(), power.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw Error("certificate: bad exponent in monomial '" + text + "'");
            k = static_cast<std::uint32_t>(std::stoul(power));
        }
        e[static_cast<std::size_t>(it - names.begin())] += k;
    }
    return Monomial(std::move(e));
}

Poly poly_from_json(const json& j, const std::vector<std::string>& names, const Field& field) {
    if (!j.is_object()) throw Error("certificate: polynomial must be an object");
    Poly p(names.size());
    for (const auto& [mono, coeff] : j.items()) p.add_term(parse_monomial(mono, names), field.parse(coeff.get<std::string>()));
    return p;
}

KVector functional_from_json(const json& j, const MonomialBasis& basis, const std::vector<std::string>& names,
                             const Field& field) {
    if (!j.is_object()) throw Error("certificate: functional must be an object");
    KVector v(basis.size(), field.zero());
    for (const auto& [mono, value] : j.items()) {
        const auto i = basis.index(parse_monomial(mono, names));
        if (i == MonomialBasis::npos) throw Error("certificate: functional monomial '" + mono + "' exceeds delta_f");
        v[i] = field.parse(value.get<std::string>());
    }
    return v;
}

KVector scalars_from_json(const json& j, const Field& field) {
    KVector v;
    for (const auto& s : j) v.push_back(field.parse(s.get<std::string>()));
    return v;
}

}  // namespace

Poly parse_polynomial(std::string_view text, const std::vector<std::string>& variables, const Field& field,
                      std::size_t line) {
    return ExpressionParser(text, variables, field, line, 1).parse();
}

ParsedSystem parse_system(std::string_view text) {
    std::optional<Field> field;
    std::optional<std::vector<std::string>> vars;
    std::vector<std::pair<std::string, std::size_t>> poly_lines;  // text, line number
    std::vector<std::tuple<std::string, std::size_t, std::size_t>> root_lines;
    std::vector<std::size_t> poly_cols;

    std::istringstream in{std::string(text)};
    std::size_t lineno = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++lineno;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string_view line = trim(raw);
        if (line.empty()) continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) throw SyntaxError(lineno, 1, "expected 'key: value'");
        const std::string key(trim(line.substr(0, colon)));
        const std::string_view value = trim(line.substr(colon + 1));
        const std::size_t value_col = static_cast<std::size_t>(value.data() - raw.data()) + 1;
        if (key == "field") {
            if (field) throw SyntaxError(lineno, 1, "duplicate 'field:' line");
            field = parse_field(value, lineno, value_col);
        } else if (key == "vars") {
            if (vars) throw SyntaxError(lineno, 1, "duplicate 'vars:' line");
            auto names = split_ws(value);
            if (names.empty()) throw SyntaxError(lineno, value_col, "no variables declared");
            std::set<std::string> seen;
            for (const auto& nm : names) {
                if (!is_identifier(nm)) throw SyntaxError(lineno, value_col, "invalid variable name '" + nm + "'");
                if (!seen.insert(nm).second) throw SyntaxError(lineno, value_col, "duplicate variable '" + nm + "'");
            }
            vars = std::move(names);
        } else if (key == "poly") {
            poly_lines.emplace_back(std::string(value), lineno);
            poly_cols.push_back(value_col);
        } else if (key == "root") {
            root_lines.emplace_back(std::string(value), lineno, value_col);
        } else {
            throw SyntaxError(lineno, 1, "unknown key '" + key + "'");
        }
    }
    if (!field) throw SyntaxError(0, 0, "missing 'field:' line");
    if (!vars) throw SyntaxError(0, 0, "missing 'vars:' line");
    if (poly_lines.size() != vars->size())
        throw ArityMismatch("system has " + std::to_string(poly_lines.size()) + " polynomials but " +
                            std::to_string(vars->size()) + " variables");

    SystemFile file{*field, *vars, {}, {}};
    std::vector<Poly> polys;
    for (std::size_t k = 0; k < poly_lines.size(); ++k) {
        const auto& [expr, ln] = poly_lines[k];
        polys.push_back(ExpressionParser(expr, *vars, *field, ln, poly_cols[k]).parse());
        file.polynomials.push_back(expr);
    }
    for (const auto& [value, ln, col] : root_lines) file.roots.push_back(parse_root(value, *field, vars->size(), ln, col));
    PolySystem sys(*field, std::move(polys));
    return ParsedSystem{std::move(file), std::move(sys)};
}

std::string print_system(const SystemFile& file, const PolySystem& sys) {
    std::ostringstream out;
    out << "field: " << file.field.name() << '\n';
    out << "vars:";
    for (const auto& v : file.variables) out << ' ' << v;
    out << '\n';
    for (const auto& p : sys.polys()) out << "poly: " << p.to_string(file.variables) << '\n';
    for (const auto& r : file.roots) {
        out << "root:";
        for (const auto& c : r.point) out << ' ' << c;
        const bool simple = r.derivatives.size() == 1 &&
                            std::all_of(r.derivatives[0].begin(), r.derivatives[0].end(), [](auto e) { return e == 0; });
        if (!simple) {
            out << " @";
            for (std::size_t k = 0; k < r.derivatives.size(); ++k) {
                if (k > 0) out << ';';
                for (auto e : r.derivatives[k]) out << ' ' << e;
            }
        }
        out << '\n';
    }
    return out.str();
}

RootFixture to_fixture(const ParsedSystem& parsed) { return RootFixture{parsed.system, parsed.file.roots}; }

Certificate make_certificate(const std::vector<std::string>& variables, const PolySystem& sys,
                             const SolveResult& result, bool include_verification) {
    Certificate c;
    c.field = sys.field();
    c.variables = variables;
    c.system = sys.polys();
    c.delta_f = result.delta_f;
    c.dimension = result.dimension;
    c.ann_dim = result.ann_dim;
    for (const auto& l : result.root_basis) c.root_basis.push_back(l.values);
    c.ideal_slice = result.ideal_slice;
    c.unit = result.unit.unit.values;
    c.unit_a = result.unit.a;
    c.unit_b = result.unit.b;
    c.no_roots = result.no_roots;
    if (include_verification) c.verification = result.verification;
    return c;
}

std::string write_certificate_json(const Certificate& cert) {
    const MonomialBasis basis(cert.variables.size(), cert.delta_f);
    const auto& names = cert.variables;
    json j;
    j["format"] = kFormat;
    j["version"] = kVersion;
    j["field"] = cert.field.name();
    j["monomial_order"] = kOrder;
    j["vars"] = names;
    json sys = json::array();
    for (const auto& p : cert.system) sys.push_back(poly_to_json(p, names));
    j["system"] = sys;
    j["delta_f"] = cert.delta_f;
    j["D"] = cert.dimension;
    j["ann_dim"] = cert.ann_dim;
    j["root_dim"] = cert.root_basis.size();
    j["ideal_dim"] = cert.ideal_slice.size();
    j["no_roots"] = cert.no_roots;
    json roots = json::array();
    for (const auto& v : cert.root_basis) roots.push_back(functional_to_json(v, basis, names));
    j["root_basis"] = roots;
    json slice = json::array();
    for (const auto& h : cert.ideal_slice) slice.push_back(poly_to_json(h, names));
    j["ideal_slice"] = slice;
    j["unit"] = functional_to_json(cert.unit, basis, names);
    j["unit_coeffs"] = {{"a", scalars_to_json(cert.unit_a)}, {"b", scalars_to_json(cert.unit_b)}};
    if (cert.verification) {
        json checks = json::array();
        for (const auto& c : cert.verification->checks) {
            json entry = {{"name", c.name}, {"passed", c.passed}};
            if (!c.detail.empty()) entry["detail"] = c.detail;
            checks.push_back(entry);
        }
        j["verification"] = {{"all_passed", cert.verification->all_passed()}, {"checks", checks}};
    }
    return j.dump(2) + "\n";
}

Certificate read_certificate_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("certificate: ") + e.what());
    }
    try {
        if (j.at("format") != kFormat) throw Error("certificate: unexpected format tag");
        if (j.at("version") != kVersion) throw Error("certificate: unsupported version");
        Certificate c;
        const auto field_words = split_ws(j.at("field").get<std::string>());
        c.field = parse_field(j.at("field").get<std::string>(), 0, 0);
        c.variables = j.at("vars").get<std::vector<std::string>>();
        if (c.variables.empty()) throw Error("certificate: no variables");
        for (const auto& p : j.at("system")) c.system.push_back(poly_from_json(p, c.variables, c.field));
        c.delta_f = j.at("delta_f").get<std::uint32_t>();
        c.dimension = j.at("D").get<std::size_t>();
        c.ann_dim = j.at("ann_dim").get<std::size_t>();
        c.no_roots = j.at("no_roots").get<bool>();
        const MonomialBasis basis(c.variables.size(), c.delta_f);
        for (const auto& l : j.at("root_basis")) c.root_basis.push_back(functional_from_json(l, basis, c.variables, c.field));
        for (const auto& h : j.at("ideal_slice")) c.ideal_slice.push_back(poly_from_json(h, c.variables, c.field));
        c.unit = functional_from_json(j.at("unit"), basis, c.variables, c.field);
        c.unit_a = scalars_from_json(j.at("unit_coeffs").at("a"), c.field);
        c.unit_b = scalars_from_json(j.at("unit_coeffs").at("b"), c.field);
        if (j.contains("verification")) {
            VerificationReport report;
            for (const auto& e : j["verification"].at("checks"))
                report.checks.push_back({e.at("name").get<std::string>(), e.at("passed").get<bool>(),
                                         e.value("detail", std::string{})});
            c.verification = std::move(report);
        }
        return c;
    } catch (const json::exception& e) {
        throw Error(std::string("certificate: ") + e.what());
    } catch (const SyntaxError& e) {
        throw Error(std::string("certificate: ") + e.what());
    }
}

VerificationReport recheck_certificate(const Certificate& cert) {
    VerificationReport report;
    const PolySystem sys(cert.field, cert.system);
    const auto& basis = sys.basis();
    report.checks.push_back({"delta_f_matches", sys.delta_f() == cert.delta_f && sys.dimension() == cert.dimension, {}});
    report.checks.push_back(
        {"duality_dimension", cert.root_basis.size() + cert.ideal_slice.size() == sys.dimension(), {}});
    bool annihilates = true;
    for (const auto& v : cert.root_basis)
        for (const auto& h : cert.ideal_slice) annihilates = annihilates && apply({basis, v}, h).is_zero();
    report.checks.push_back({"root_basis_annihilates_ideal_slice", annihilates, {}});
    report.checks.push_back({"unit_certificate", unit_certificate_holds(sys, {basis, cert.unit}, cert.ideal_slice), {}});
    return report;
}

std::string write_text_report(const Certificate& cert) {
    const MonomialBasis basis(cert.variables.size(), cert.delta_f);
    const auto& names = cert.variables;
    auto functional_line = [&](const KVector& v) {
        std::string s;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (i > 0) s += ", ";
            s += basis[i].to_string(names) + " -> " + v[i].to_string();
        }
        return s;
    };
    auto list = [](const KVector& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
        return s + "]";
    };
    std::ostringstream out;
    out << "field " << cert.field.name() << ", vars";
    for (const auto& v : names) out << ' ' << v;
    out << '\n';
    for (std::size_t i = 0; i < cert.system.size(); ++i)
        out << "  f" << i + 1 << " = " << cert.system[i].to_string(names) << '\n';
    out << "delta_f = " << cert.delta_f << ", D = " << cert.dimension << ", ann_dim = " << cert.ann_dim << '\n';
    out << "root functionals (" << cert.root_basis.size() << "):\n";
    for (std::size_t p = 0; p < cert.root_basis.size(); ++p)
        out << "  l" << p + 1 << ": " << functional_line(cert.root_basis[p]) << '\n';
    out << "ideal slice (" << cert.ideal_slice.size() << "):\n";
    for (std::size_t q = 0; q < cert.ideal_slice.size(); ++q)
        out << "  h" << q + 1 << " = " << cert.ideal_slice[q].to_string(names) << '\n';
    out << "unit functional E': " << functional_line(cert.unit) << '\n';
    out << "unit coefficients: a = " << list(cert.unit_a) << ", b = " << list(cert.unit_b) << '\n';
    if (cert.no_roots) out << "no roots: 1 lies in the ideal\n";
    if (cert.verification) {
        out << "verification: " << (cert.verification->all_passed() ? "all passed" : "FAILED") << '\n';
        for (const auto& c : cert.verification->checks)
            out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")")
                << '\n';
    }
    return out.str();
}

}  // namespace rootfun
