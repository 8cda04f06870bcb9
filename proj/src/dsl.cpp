#include "liepi/dsl.hpp"

#include <algorithm>
#include <cctype>

namespace liepi {

ParseError::ParseError(const std::string& msg, SourceSpan s, std::string h)
    : std::runtime_error(msg), span(s), hint(std::move(h)) {}

namespace {

constexpr long max_literal = 1'000'000'000'000'000;
constexpr int max_depth = 64;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

struct Parser {
    std::string text;
    std::size_t pos = 0;
    std::size_t base = 0;  // added to every span, for multi-line sources

    [[noreturn]] void fail(const std::string& msg, std::size_t from,
                           const std::string& hint = "") const {
        std::size_t to = std::max(pos, from + 1);
        throw ParseError(msg, {base + from, base + to}, hint);
    }

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    void expect(char c, const std::string& what) {
        skip_ws();
        if (peek() != c) fail("expected " + what, pos);
        ++pos;
    }
    // keyword with a word boundary behind it
    bool eat_word(const char* w) {
        skip_ws();
        std::size_t len = std::char_traits<char>::length(w);
        if (text.compare(pos, len, w) != 0) return false;
        if (pos + len < text.size() && is_ident_char(text[pos + len])) return false;
        pos += len;
        return true;
    }

    long integer() {
        skip_ws();
        std::size_t from = pos;
        if (!is_digit(peek())) fail("expected a number", pos);
        long v = 0;
        while (is_digit(peek())) {
            v = v * 10 + (text[pos] - '0');
            if (v > max_literal) fail("number too large", from);
            ++pos;
        }
        return v;
    }

    std::string name_token() {
        skip_ws();
        std::size_t from = pos;
        if (peek() == '1' && !(pos + 1 < text.size() && is_ident_char(text[pos + 1]))) {
            ++pos;
            return "1";
        }
        if (!is_ident_start(peek())) fail("expected a generator name", pos);
        std::string out;
        while (is_ident_char(peek())) out.push_back(text[pos++]);
        (void)from;
        return out;
    }

    // signed sum of degree atoms; stops before any unconsumable character
    GroupElement degree_expr(const GroupPtr& group) {
        skip_ws();
        std::size_t from = pos;
        GroupElement acc = GroupElement::identity(group);
        long sign = 1;
        if (eat('-')) sign = -1;
        for (;;) {
            acc = acc.combine(degree_atom(group, sign, from));
            skip_ws();
            if (eat('+'))
                sign = 1;
            else if (eat('-'))
                sign = -1;
            else
                break;
        }
        return acc;
    }

    GroupElement degree_atom(const GroupPtr& group, long sign, std::size_t exprfrom) {
        skip_ws();
        std::size_t from = pos;
        long k = 1;
        bool have_k = false;
        if (is_digit(peek())) {
            k = integer();
            have_k = true;
        }
        skip_ws();
        if (is_ident_start(peek())) {
            std::string nm = name_token();
            auto idx = group->factor_named(nm);
            if (!idx)
                fail("unknown generator '" + nm + "'", from,
                     "the group is " + group->to_string());
            return GroupElement::generator(group, *idx, sign * k);
        }
        if (!have_k) fail("expected a degree", exprfrom);
        if (k == 0) return GroupElement::identity(group);
        auto idx = group->factor_named("1");
        if (!idx)
            fail("numeral degrees need a generator named 1", from,
                 "the group is " + group->to_string());
        return GroupElement::generator(group, *idx, sign * k);
    }
};

GroupPtr group_from_parser(Parser& p) {
    std::vector<long> moduli;
    p.skip_ws();
    std::size_t from = p.pos;
    for (;;) {
        p.expect('Z', "a cyclic factor 'Z'");
        if (p.peek() == '^') {
            ++p.pos;
            long r = p.integer();
            if (r < 1 || r > 16) p.fail("free rank out of range", from);
            for (long i = 0; i < r; ++i) moduli.push_back(0);
        } else if (is_digit(p.peek())) {
            std::size_t mfrom = p.pos;
            long k = p.integer();
            if (k < 2)
                p.fail("modulus must be at least 2", mfrom,
                       "write plain Z for an infinite factor");
            moduli.push_back(k);
        } else {
            moduli.push_back(0);
        }
        if (moduli.size() > 16) p.fail("too many factors", from);
        p.skip_ws();
        if (p.peek() == 'x') {
            ++p.pos;
            continue;
        }
        break;
    }
    std::vector<std::string> names;
    if (p.eat('{')) {
        for (;;) {
            names.push_back(p.name_token());
            if (p.eat(',')) continue;
            p.expect('}', "'}'");
            break;
        }
        if (names.size() != moduli.size())
            p.fail("expected " + std::to_string(moduli.size()) + " generator names", from);
    }
    try {
        return names.empty() ? make_group(std::move(moduli))
                             : make_group(std::move(moduli), std::move(names));
    } catch (const std::exception& e) {
        p.fail(e.what(), from);
    }
}

struct PolyParser {
    Parser& p;
    const GroupPtr& group;
    const AliasTable& aliases;
    int notation = 0;  // 1 once an x variable appeared, 2 for y/z

    MultilinearPolynomial poly() {
        MultilinearPolynomial out = MultilinearPolynomial::zero();
        long sign = 1;
        p.skip_ws();
        if (p.eat('-'))
            sign = -1;
        else
            p.eat('+');
        for (;;) {
            term(out, sign);
            p.skip_ws();
            if (p.eat('+'))
                sign = 1;
            else if (p.eat('-'))
                sign = -1;
            else
                break;
        }
        return out;
    }

    void term(MultilinearPolynomial& out, long sign) {
        p.skip_ws();
        Rational coeff(1);
        if (is_digit(p.peek())) {
            std::size_t from = p.pos;
            long num = p.integer();
            long den = 1;
            if (p.eat('/')) {
                std::size_t dfrom = p.pos;
                den = p.integer();
                if (den == 0) p.fail("zero denominator", dfrom);
            }
            coeff = Rational(num, den);
            coeff.canonicalize();
            p.skip_ws();
            if (!p.eat('*'))
                p.fail("expected '*' after the coefficient", from,
                       "write terms as 2*[...]");
        }
        out.add(mono(0), sign * coeff);
    }

    LieMonomial mono(int depth) {
        if (depth > max_depth) p.fail("brackets nested too deeply", p.pos);
        p.skip_ws();
        if (p.eat('[')) {
            std::vector<LieMonomial> parts;
            parts.push_back(mono(depth + 1));
            p.expect(',', "',' inside the bracket");
            parts.push_back(mono(depth + 1));
            while (p.eat(',')) parts.push_back(mono(depth + 1));
            p.expect(']', "']'");
            return left_normed(parts);
        }
        return variable();
    }

    LieMonomial variable() {
        p.skip_ws();
        std::size_t from = p.pos;
        char c = p.peek();
        if (c == 'x') {
            ++p.pos;
            long idx = p.integer();
            if (idx < 1 || idx > 1'000'000) p.fail("variable index out of range", from);
            p.expect('^', "'^' with the variable degree");
            p.expect('(', "'('");
            GroupElement d = p.degree_expr(group);
            p.expect(')', "')'");
            use_notation(1, from);
            return LieMonomial::var(GradedVariable(static_cast<int>(idx), d));
        }
        if (c == 'y' || c == 'z') {
            ++p.pos;
            long idx = p.integer();
            if (idx < 1 || idx > 500'000) p.fail("variable index out of range", from);
            use_notation(2, from);
            if (c == 'y')
                return LieMonomial::var(
                    GradedVariable(static_cast<int>(2 * idx - 1), aliases.y_degree));
            if (!aliases.z_degree)
                p.fail("this grading binds no z letter", from,
                       "use explicit x variables with degrees");
            return LieMonomial::var(
                GradedVariable(static_cast<int>(2 * idx), *aliases.z_degree));
        }
        p.fail("expected a variable or bracket", from,
               "variables are x<i>^(degree), y<i> or z<i>");
    }

    void use_notation(int kind, std::size_t from) {
        if (notation == 0) notation = kind;
        else if (notation != kind)
            p.fail("cannot mix x notation with y/z shorthand", from);
    }
};

MultilinearPolynomial parse_poly_text(const std::string& text, std::size_t base,
                                      const GroupPtr& group, const AliasTable& aliases) {
    Parser p{text, 0, base};
    PolyParser pp{p, group, aliases};
    MultilinearPolynomial f = pp.poly();
    if (!p.at_end()) p.fail("unexpected trailing input", p.pos);
    try {
        if (!f.is_zero()) f.variables();
    } catch (const std::exception& e) {
        throw ParseError(e.what(), {base, base + text.size()},
                         "every variable must occur exactly once per monomial");
    }
    return f;
}

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// position of the first depth-0 occurrence of ch outside parentheses
std::size_t toplevel_find(const std::string& s, char ch) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(' || s[i] == '[' || s[i] == '{') ++depth;
        else if (s[i] == ')' || s[i] == ']' || s[i] == '}') --depth;
        else if (s[i] == ch && depth == 0) return i;
    }
    return std::string::npos;
}

bool has_toplevel_word(const std::string& s, const char* w) {
    int depth = 0;
    std::size_t len = std::char_traits<char>::length(w);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(' || s[i] == '[' || s[i] == '{') ++depth;
        else if (s[i] == ')' || s[i] == ']' || s[i] == '}') --depth;
        else if (depth == 0 && s.compare(i, len, w) == 0 &&
                 (i == 0 || !is_ident_char(s[i - 1])) &&
                 (i + len >= s.size() || !is_ident_char(s[i + len])))
            return true;
    }
    return false;
}

} // namespace

GroupPtr parse_group(const std::string& text) {
    Parser p{text, 0, 0};
    GroupPtr g = group_from_parser(p);
    if (!p.at_end()) p.fail("unexpected trailing input", p.pos);
    return g;
}

GroupElement parse_degree(const std::string& text, const GroupPtr& group) {
    Parser p{text, 0, 0};
    GroupElement d = p.degree_expr(group);
    if (!p.at_end()) p.fail("unexpected trailing input", p.pos);
    return d;
}

ElementaryGrading parse_elementary(const std::string& text) {
    Parser p{text, 0, 0};
    p.skip_ws();
    std::size_t from = p.pos;
    if (!p.eat_word("ut")) p.fail("expected 'ut(n; degrees) over GROUP'", from);
    p.expect('(', "'('");
    std::size_t nfrom = p.pos;
    long n = p.integer();
    if (n < 2 || n > 12) p.fail("matrix size out of range", nfrom);
    p.expect(';', "';' before the degrees");
    std::size_t degfrom = p.pos;
    std::size_t close = text.find(')', p.pos);
    if (close == std::string::npos) p.fail("missing ')'", from);
    std::string degrees = text.substr(degfrom, close - degfrom);
    p.pos = close + 1;
    if (!p.eat_word("over")) p.fail("expected 'over' and the group", p.pos);
    GroupPtr group = group_from_parser(p);
    if (!p.at_end()) p.fail("unexpected trailing input", p.pos);

    std::vector<GroupElement> eta;
    Parser dp{degrees, 0, degfrom};
    for (;;) {
        eta.push_back(dp.degree_expr(group));
        if (dp.eat(',')) continue;
        if (!dp.at_end()) dp.fail("expected ',' or ')'", dp.pos);
        break;
    }
    if (static_cast<long>(eta.size()) != n - 1)
        p.fail("expected " + std::to_string(n - 1) + " degrees for ut(" + std::to_string(n) + ")",
               degfrom);
    try {
        return ElementaryGrading(static_cast<int>(n), group, std::move(eta));
    } catch (const std::exception& e) {
        throw ParseError(e.what(), {0, text.size()});
    }
}

MultilinearPolynomial parse_polynomial(const std::string& text, const GroupPtr& group,
                                       const AliasTable& aliases) {
    return parse_poly_text(text, 0, group, aliases);
}

GeneratorSet parse_generator_file(const std::string& text, const GroupPtr& group,
                                  const AliasTable& aliases) {
    GeneratorSet out;
    out.group = group;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::size_t len = (nl == std::string::npos ? text.size() : nl) - start;
        std::string raw = text.substr(start, len);
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string line = strip(raw);
        std::size_t lbase = start + raw.find_first_not_of(" \t\r");

        if (!line.empty()) {
            if (has_toplevel_word(raw, "for")) {
                // x^(l) = 0 for l not in {d_1, ..., d_k}
                Parser p{raw, 0, start};
                p.expect('x', "'x'");
                p.expect('^', "'^'");
                p.expect('(', "'('");
                std::string placeholder = p.name_token();
                if (group->factor_named(placeholder))
                    p.fail("placeholder '" + placeholder + "' is a generator name", p.pos,
                           "pick a letter that is not a generator of the group");
                p.expect(')', "')'");
                p.expect('=', "'='");
                std::size_t zfrom = p.pos;
                if (p.integer() != 0) p.fail("the right side must be 0", zfrom);
                if (!p.eat_word("for")) p.fail("expected 'for'", p.pos);
                std::string again = p.name_token();
                if (again != placeholder)
                    p.fail("placeholder '" + again + "' does not match '" + placeholder + "'",
                           p.pos);
                if (!p.eat_word("not")) p.fail("expected 'not in'", p.pos);
                if (!p.eat_word("in")) p.fail("expected 'in'", p.pos);
                p.expect('{', "'{'");
                std::vector<GroupElement> allowed;
                for (;;) {
                    allowed.push_back(p.degree_expr(group));
                    if (p.eat(',')) continue;
                    p.expect('}', "'}'");
                    break;
                }
                if (!p.at_end()) p.fail("unexpected trailing input", p.pos);
                if (out.has_support_rule)
                    p.fail("a file can hold only one support rule", 0);
                out.has_support_rule = true;
                out.allowed_support = std::move(allowed);
            } else {
                std::size_t eq = toplevel_find(raw, '=');
                MultilinearPolynomial f = MultilinearPolynomial::zero();
                if (eq == std::string::npos) {
                    f = parse_poly_text(raw, start, group, aliases);
                } else {
                    std::string lhs = raw.substr(0, eq);
                    std::string rhs = raw.substr(eq + 1);
                    f = parse_poly_text(lhs, start, group, aliases);
                    if (strip(rhs) != "0")
                        f -= parse_poly_text(rhs, start + eq + 1, group, aliases);
                }
                if (!f.is_zero()) {
                    const auto& terms = f.terms();
                    if (terms.size() == 1 && terms.begin()->first.is_leaf())
                        out.zero_degrees.push_back(terms.begin()->first.leaf().degree);
                    else
                        out.generators.push_back(std::move(f));
                }
            }
        }
        (void)lbase;
        if (nl == std::string::npos) break;
        start = nl + 1;
    }
    return out;
}

} // namespace liepi
