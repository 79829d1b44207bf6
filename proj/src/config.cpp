#include "linf/config.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace linf {

namespace {

struct Token {
    enum Kind { name, number, symbol, end } kind = end;
    std::string text;
    int line = 0, col = 0;
};

class Lexer {
public:
    Lexer(const std::string& s, int line) : s_(s), line_(line) {}

    Token peek() {
        if (!look_) look_ = lex();
        return *look_;
    }
    Token next() {
        Token t = peek();
        look_.reset();
        return t;
    }
    bool at_end() { return peek().kind == Token::end; }

private:
    Token lex() {
        while (pos_ < s_.size() &&
               isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        Token t;
        t.line = line_;
        t.col = static_cast<int>(pos_) + 1;
        if (pos_ >= s_.size() || s_[pos_] == '#') {
            t.kind = Token::end;
            return t;
        }
        char c = s_[pos_];
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (isalnum(static_cast<unsigned char>(s_[pos_])) ||
                    s_[pos_] == '_'))
                ++pos_;
            t.kind = Token::name;
            t.text = s_.substr(start, pos_ - start);
            return t;
        }
        if (isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            t.kind = Token::number;
            t.text = s_.substr(start, pos_ - start);
            return t;
        }
        if (c == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
            pos_ += 2;
            t.kind = Token::symbol;
            t.text = "->";
            return t;
        }
        if (c == '.' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '.') {
            pos_ += 2;
            t.kind = Token::symbol;
            t.text = "..";
            return t;
        }
        ++pos_;
        t.kind = Token::symbol;
        t.text = std::string(1, c);
        return t;
    }

    std::string s_;
    int line_;
    size_t pos_ = 0;
    std::optional<Token> look_;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(msg, t.line, t.col);
}

/// coeff-expr := term (('+'|'-') term)*
/// term  := unary (('*'|'/') unary)*
/// unary := '-' unary | atom ('^' number)?
/// atom  := number | param | '(' coeff-expr ')'
class ExprParser {
public:
    ExprParser(Lexer& lex, RingPtr ring, int trunc)
        : lex_(lex), ring_(std::move(ring)), trunc_(trunc) {}

    ParamPoly parse() { return sum(); }

private:
    ParamPoly sum() {
        ParamPoly acc = term();
        while (true) {
            Token t = lex_.peek();
            if (t.kind == Token::symbol && (t.text == "+" || t.text == "-")) {
                lex_.next();
                ParamPoly rhs = term();
                if (t.text == "+")
                    acc += rhs;
                else
                    acc -= rhs;
            } else {
                return acc;
            }
        }
    }

    ParamPoly term() {
        ParamPoly acc = unary();
        while (true) {
            Token t = lex_.peek();
            if (t.kind == Token::symbol && (t.text == "*" || t.text == "/")) {
                lex_.next();
                ParamPoly rhs = unary();
                if (t.text == "*") {
                    acc = truncate(poly_mul(acc, rhs), trunc_);
                } else {
                    if (augment(rhs) == 0)
                        fail(t, "division by a non-unit (zero constant term)");
                    acc = truncate(poly_mul(acc, invert_unit(rhs, trunc_)),
                                   trunc_);
                }
            } else {
                return acc;
            }
        }
    }

    ParamPoly unary() {
        Token t = lex_.peek();
        if (t.kind == Token::symbol && t.text == "-") {
            lex_.next();
            ParamPoly v = unary();
            v *= Rat(-1);
            return v;
        }
        ParamPoly v = atom();
        Token p = lex_.peek();
        if (p.kind == Token::symbol && p.text == "^") {
            lex_.next();
            Token e = lex_.next();
            if (e.kind != Token::number) fail(e, "expected an integer exponent");
            int n = std::stoi(e.text);
            ParamPoly acc = ParamPoly::constant(ring_, 1);
            for (int i = 0; i < n; ++i)
                acc = truncate(poly_mul(acc, v), trunc_);
            return acc;
        }
        return v;
    }

    ParamPoly atom() {
        Token t = lex_.next();
        if (t.kind == Token::number)
            return ParamPoly::constant(ring_, Rat(BigInt(t.text)));
        if (t.kind == Token::name) {
            if (!ring_->has_generator(t.text))
                fail(t, "unknown parameter '" + t.text +
                            "' (declare it with 'params even/odd: ...')");
            return ParamPoly::gen(ring_, t.text);
        }
        if (t.kind == Token::symbol && t.text == "(") {
            ParamPoly v = sum();
            Token close = lex_.next();
            if (!(close.kind == Token::symbol && close.text == ")"))
                fail(close, "expected ')'");
            return v;
        }
        fail(t, "expected a number, parameter or '('");
    }

    Lexer& lex_;
    RingPtr ring_;
    int trunc_;
};

/// A monomial: names with optional ^exponent, up to a terminator symbol.
Monomial parse_monomial(Lexer& lex, const GradedSpace& space) {
    std::vector<std::pair<int, int>> parts;
    while (true) {
        Token t = lex.peek();
        if (t.kind != Token::name) break;
        lex.next();
        if (!space.has_name(t.text))
            fail(t, "unknown basis name '" + t.text + "'");
        int idx = space.index_of(t.text);
        int e = 1;
        Token c = lex.peek();
        if (c.kind == Token::symbol && c.text == "^") {
            lex.next();
            Token n = lex.next();
            if (n.kind != Token::number) fail(n, "expected an exponent");
            e = std::stoi(n.text);
        }
        parts.emplace_back(idx, e);
    }
    if (parts.empty()) fail(lex.peek(), "expected a monomial");
    Token at = lex.peek();
    try {
        return make_monomial(space, parts);
    } catch (const DegreeError& err) {
        fail(at, err.what());
    }
}

/// vector-expr := vterm (('+'|'-') vterm)*
/// vterm := factors joined by '*' or '/', exactly one being a basis
/// name; the rest are scalar factors (number, parameter, parenthesized
/// coefficient expression, each with an optional ^int).
/// Returns basis-index -> coefficient.
std::map<int, ParamPoly> parse_vector(Lexer& lex, const GradedSpace& space,
                                      RingPtr ring, int trunc) {
    std::map<int, ParamPoly> out;
    bool first = true;
    while (true) {
        Rat sign = 1;
        Token t = lex.peek();
        if (t.kind == Token::symbol && (t.text == "+" || t.text == "-")) {
            lex.next();
            if (t.text == "-") sign = -1;
        } else if (!first) {
            break;
        }
        first = false;
        ParamPoly coeff = ParamPoly::constant(ring, sign);
        int basis = -1;
        bool want_factor = true;
        bool dividing = false;
        while (want_factor) {
            Token a = lex.peek();
            ParamPoly factor(ring);
            bool got_scalar = false;
            if (a.kind == Token::name && space.has_name(a.text) &&
                basis < 0) {
                lex.next();
                basis = space.index_of(a.text);
                if (dividing) fail(a, "cannot divide by a basis vector");
            } else if (a.kind == Token::number ||
                       (a.kind == Token::name &&
                        ring->has_generator(a.text)) ||
                       (a.kind == Token::symbol && a.text == "(")) {
                if (a.kind == Token::number) {
                    lex.next();
                    factor = ParamPoly::constant(ring, Rat(BigInt(a.text)));
                } else if (a.kind == Token::name) {
                    lex.next();
                    factor = ParamPoly::gen(ring, a.text);
                } else {
                    lex.next();  // '('
                    ExprParser ep(lex, ring, trunc);
                    factor = ep.parse();
                    Token close = lex.next();
                    if (!(close.kind == Token::symbol && close.text == ")"))
                        fail(close, "expected ')'");
                }
                Token caret = lex.peek();
                if (caret.kind == Token::symbol && caret.text == "^") {
                    lex.next();
                    Token e = lex.next();
                    if (e.kind != Token::number)
                        fail(e, "expected an integer exponent");
                    ParamPoly acc = ParamPoly::constant(ring, 1);
                    for (int i = 0; i < std::stoi(e.text); ++i)
                        acc = truncate(poly_mul(acc, factor), trunc);
                    factor = acc;
                }
                got_scalar = true;
            } else if (a.kind == Token::name) {
                fail(a, "unknown name '" + a.text + "'");
            } else {
                fail(a, "expected a factor");
            }
            if (got_scalar) {
                if (dividing) {
                    if (augment(factor) == 0)
                        fail(a, "division by a non-unit (zero constant term)");
                    factor = invert_unit(factor, trunc);
                }
                coeff = truncate(poly_mul(coeff, factor), trunc);
            }
            // continue the factor chain?
            Token op = lex.peek();
            if (op.kind == Token::symbol && (op.text == "*" || op.text == "/")) {
                lex.next();
                dividing = op.text == "/";
                want_factor = true;
            } else {
                want_factor = false;
            }
        }
        if (basis < 0) fail(lex.peek(), "expected a basis vector name");
        if (!coeff.is_zero()) {
            auto it = out.find(basis);
            if (it == out.end())
                out.emplace(basis, coeff);
            else
                it->second += coeff;
        }
        if (lex.at_end()) break;
    }
    return out;
}

std::vector<std::string> parse_names(Lexer& lex) {
    std::vector<std::string> names;
    while (lex.peek().kind == Token::name) names.push_back(lex.next().text);
    return names;
}

void expect_arrow(Lexer& lex) {
    Token t = lex.next();
    if (!(t.kind == Token::symbol && t.text == "->")) fail(t, "expected '->'");
}

void expect_done(Lexer& lex) {
    if (!lex.at_end()) fail(lex.peek(), "unexpected trailing input");
}

}  // namespace

JobConfig parse_config(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    std::vector<std::string> even_basis, odd_basis;
    std::vector<std::string> even_params, odd_params;
    struct Pending {
        std::string kind;
        std::string rest;
        int line;
    };
    std::vector<Pending> body;

    // first pass: gather declarations so the space and ring exist before
    // any expression is parsed
    auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t");
        size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string()
                                      : s.substr(a, b - a + 1);
    };
    while (std::getline(in, raw)) {
        ++lineno;
        Lexer probe(raw, lineno);
        if (probe.at_end()) continue;
        size_t colon = raw.find(':');
        if (colon == std::string::npos)
            fail(probe.peek(), "expected 'key: value'");
        std::string kind = trim(raw.substr(0, colon));
        std::string rest = raw.substr(colon + 1);
        if (kind == "space even" || kind == "space odd" ||
            kind == "params even" || kind == "params odd") {
            Lexer lex(rest, lineno);
            auto names = parse_names(lex);
            expect_done(lex);
            auto& dst = kind == "space even"    ? even_basis
                        : kind == "space odd"   ? odd_basis
                        : kind == "params even" ? even_params
                                                : odd_params;
            dst.insert(dst.end(), names.begin(), names.end());
        } else {
            body.push_back({kind, rest, lineno});
        }
    }

    if (even_basis.empty() && odd_basis.empty())
        throw ParseError("configuration declares no space", lineno, 1);
    GradedSpace space(even_basis, odd_basis);
    for (const auto& lst : {even_params, odd_params})
        for (const auto& n : lst)
            if (space.has_name(n))
                throw ParseError("parameter '" + n +
                                     "' collides with a basis name",
                                 1, 1);
    RingPtr ring = std::make_shared<ParamRing>(even_params, odd_params);
    JobConfig cfg(space, ring);

    // settings first: the truncation degree feeds expression parsing
    for (const Pending& p : body) {
        Lexer lex(p.rest, p.line);
        if (p.kind == "window") {
            Token a = lex.next();
            if (a.kind != Token::number) fail(a, "expected window lower bound");
            Token dots = lex.next();
            if (!(dots.kind == Token::symbol && dots.text == ".."))
                fail(dots, "expected '..'");
            Token b = lex.next();
            if (b.kind != Token::number) fail(b, "expected window upper bound");
            expect_done(lex);
            cfg.window = ArityWindow(std::stoi(a.text), std::stoi(b.text));
        } else if (p.kind == "max-order" || p.kind == "order") {
            Token a = lex.next();
            if (a.kind != Token::number) fail(a, "expected an order");
            expect_done(lex);
            cfg.max_order = std::stoi(a.text);
        } else if (p.kind == "truncation-degree") {
            Token a = lex.next();
            if (a.kind != Token::number)
                fail(a, "expected a truncation degree");
            expect_done(lex);
            cfg.truncation_degree = std::stoi(a.text);
        } else if (p.kind == "format") {
            Token a = lex.next();
            if (a.kind != Token::name) fail(a, "expected a format name");
            expect_done(lex);
            try {
                cfg.format = format_from_string(a.text);
            } catch (const Error& e) {
                fail(a, e.what());
            }
        }
    }
    int trunc = cfg.effective_truncation();

    std::map<CochainKey, ParamPoly, KeyOrder> morph_terms;
    bool has_morphism = false;

    for (const Pending& p : body) {
        Lexer lex(p.rest, p.line);
        if (p.kind == "diff") {
            Token at = lex.peek();
            Monomial m = parse_monomial(lex, space);
            expect_arrow(lex);
            auto vec = parse_vector(lex, space, ring, trunc);
            expect_done(lex);
            for (const auto& [basis, coeff] : vec) {
                try {
                    cfg.differential.add_term({m, basis}, coeff);
                } catch (const ParityError& e) {
                    fail(at, std::string(e.what()) +
                                 " (the codifferential must be odd overall)");
                }
            }
        } else if (p.kind == "morphism") {
            has_morphism = true;
            Token at = lex.peek();
            Monomial m = parse_monomial(lex, space);
            expect_arrow(lex);
            auto vec = parse_vector(lex, space, ring, trunc);
            expect_done(lex);
            for (const auto& [basis, coeff] : vec) {
                CochainKey key{m, basis};
                auto it = morph_terms.find(key);
                if (it == morph_terms.end())
                    morph_terms.emplace(key, coeff);
                else
                    it->second += coeff;
                (void)at;
            }
        } else if (p.kind == "ring-map") {
            Token name = lex.next();
            if (name.kind != Token::name || !ring->has_generator(name.text))
                fail(name, "expected a declared parameter");
            expect_arrow(lex);
            ExprParser ep(lex, ring, trunc);
            ParamPoly img = ep.parse();
            expect_done(lex);
            cfg.ring_map.emplace(name.text, img);
        } else if (p.kind == "window" || p.kind == "max-order" ||
                   p.kind == "order" || p.kind == "truncation-degree" ||
                   p.kind == "format") {
            // handled above
        } else {
            Lexer l2(p.kind, p.line);
            fail(l2.peek(), "unknown directive '" + p.kind + "'");
        }
    }

    if (!cfg.differential.is_zero() &&
        cfg.differential.total_parity() != Parity::odd)
        throw ParseError("the configured differential is even; "
                         "codifferentials are odd",
                         lineno, 1);

    if (has_morphism) {
        MorphismData g(space, ring);
        for (const auto& [k, coeff] : morph_terms) {
            // morphism images are given as raw values; convert to the
            // normalized basis-cochain coefficient
            ParamPoly adj = coeff;
            adj *= Rat(1) / even_factorial_norm(space, k.input);
            try {
                g.add_component(k, adj);
            } catch (const ParityError& e) {
                throw ParseError(std::string(e.what()), lineno, 1);
            }
        }
        g.validate();
        cfg.morphism = g;
    }
    return cfg;
}

}  // namespace linf
