#include "pdnf/problem.hpp"

#include "pdnf/errors.hpp"

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <optional>
#include <set>

namespace pdnf {

const char* to_string(Mode mode) {
    switch (mode) {
    case Mode::Normalize: return "normalize";
    case Mode::ResonanceOnly: return "resonance-only";
    case Mode::Integrability: return "integrability";
    case Mode::Isochore: return "isochore";
    case Mode::Simultaneous: return "simultaneous";
    }
    return "normalize";
}

std::optional<Mode> parse_mode(std::string_view text) {
    for (Mode m : {Mode::Normalize, Mode::ResonanceOnly, Mode::Integrability, Mode::Isochore, Mode::Simultaneous}) {
        if (text == to_string(m)) return m;
    }
    return std::nullopt;
}

namespace {

constexpr int kMaxExponent = 256;

enum class Tok { Ident, Number, Symbol, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1;
    int column = 1;
    std::size_t offset = 0;  // byte offset just past the token
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            Token t;
            t.line = line_;
            t.column = col_;
            if (pos_ >= src_.size()) {
                t.kind = Tok::End;
                t.offset = pos_;
                out.push_back(t);
                return out;
            }
            const char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                t.kind = Tok::Ident;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                    t.text += advance();
                }
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                t.kind = Tok::Number;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) t.text += advance();
            } else if (std::string_view("+-*/^()[],;=").find(c) != std::string_view::npos) {
                t.kind = Tok::Symbol;
                t.text = advance();
            } else {
                throw ParseError(ErrorKind::SyntaxError, line_, col_, std::string("unexpected character '") + c + "'");
            }
            t.offset = pos_;
            out.push_back(std::move(t));
        }
    }

private:
    char advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(std::vector<Token> toks, std::vector<std::string> vars) : toks_(std::move(toks)), vars_(std::move(vars)) {}

    ProblemSpec document() {
        ProblemSpec spec;
        bool have_vars = false;
        std::set<std::string> names;
        while (peek().kind != Tok::End) {
            const Token kw = expect_ident("a statement keyword");
            if (kw.text == "vars") {
                if (have_vars) fail(kw, "variables declared twice");
                while (peek().kind == Tok::Ident) {
                    const Token v = next();
                    if (v.text == "i") fail(v, "'i' is the imaginary unit and cannot be a variable");
                    if (std::find(vars_.begin(), vars_.end(), v.text) != vars_.end()) {
                        fail(v, "variable '" + v.text + "' declared twice");
                    }
                    vars_.push_back(v.text);
                }
                if (vars_.empty()) fail(peek(), "expected at least one variable name");
                have_vars = true;
                spec.variables = vars_;
            } else if (kw.text == "field") {
                require_vars(kw, have_vars);
                const Token name = expect_ident("a field name");
                if (!names.insert(name.text).second) fail(name, "name '" + name.text + "' defined twice");
                expect_symbol("=");
                const Token open = expect_symbol("[");
                std::vector<Poly> comps;
                comps.push_back(expr());
                while (accept_symbol(",")) comps.push_back(expr());
                expect_symbol("]");
                if (comps.size() != vars_.size()) {
                    throw ParseError(ErrorKind::DimensionMismatch, open.line, open.column,
                                     "field '" + name.text + "' has " + std::to_string(comps.size()) +
                                         " components but " + std::to_string(vars_.size()) +
                                         " variables are declared");
                }
                spec.fields.push_back({name.text, VectorField(std::move(comps))});
            } else if (kw.text == "integral") {
                require_vars(kw, have_vars);
                const Token name = expect_ident("an integral name");
                if (!names.insert(name.text).second) fail(name, "name '" + name.text + "' defined twice");
                expect_symbol("=");
                spec.integrals.push_back({name.text, expr()});
            } else if (kw.text == "order") {
                const Token t = peek();
                spec.order = natural();
                if (spec.order < 2) fail(t, "order must be at least 2");
            } else if (kw.text == "resbound") {
                const Token t = peek();
                spec.res_bound = natural();
                if (spec.res_bound < 1) fail(t, "resbound must be at least 1");
            } else if (kw.text == "mode") {
                const Token t = expect_ident("a mode name");
                std::string word = t.text;
                // Mode names may contain '-' (resonance-only).
                while (peek().kind == Tok::Symbol && peek().text == "-" && toks_[pos_ + 1].kind == Tok::Ident) {
                    next();
                    word += "-" + next().text;
                }
                auto m = parse_mode(word);
                if (!m) fail(t, "unknown mode '" + word + "'");
                spec.mode = *m;
            } else if (kw.text == "isochore") {
                spec.isochore = true;
            } else {
                fail(kw, "unknown statement '" + kw.text + "'");
            }
            expect_symbol(";");
        }
        if (!have_vars) fail(peek(), "missing 'vars' declaration");
        return spec;
    }

    Poly single_expression() {
        Poly p = expr();
        if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "' after expression");
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }

    Token next() {
        Token t = toks_[pos_];
        if (t.kind != Tok::End) ++pos_;
        return t;
    }

    [[noreturn]] void fail(const Token& at, const std::string& msg) const {
        throw ParseError(ErrorKind::SyntaxError, at.line, at.column, msg);
    }

    static std::string describe(const Token& t) {
        return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    }

    void require_vars(const Token& at, bool have_vars) const {
        if (!have_vars) fail(at, "'vars' must come before fields and integrals");
    }

    Token expect_ident(const std::string& what) {
        if (peek().kind != Tok::Ident) fail(peek(), "expected " + what + ", found " + describe(peek()));
        return next();
    }

    Token expect_symbol(const std::string& sym) {
        if (peek().kind != Tok::Symbol || peek().text != sym) {
            fail(peek(), "expected '" + sym + "', found " + describe(peek()));
        }
        return next();
    }

    bool accept_symbol(const std::string& sym) {
        if (peek().kind == Tok::Symbol && peek().text == sym) {
            next();
            return true;
        }
        return false;
    }

    int natural() {
        if (peek().kind != Tok::Number) fail(peek(), "expected a natural number, found " + describe(peek()));
        const Token t = next();
        if (t.text.size() > 9) fail(t, "number too large");
        return std::stoi(t.text);
    }

    std::size_t dim() const { return vars_.size(); }

    bool starts_operand() const {
        const Token& t = peek();
        if (t.kind == Tok::Number || t.kind == Tok::Ident) return true;
        return t.kind == Tok::Symbol && (t.text == "(" || t.text == "-");
    }

    // Consumes a binary operator and points the error at it when no operand follows.
    std::optional<Token> binary_operator(std::initializer_list<const char*> ops) {
        if (peek().kind != Tok::Symbol) return std::nullopt;
        for (const char* op : ops) {
            if (peek().text == op) {
                const Token t = next();
                if (!starts_operand()) fail(t, "dangling operator '" + t.text + "' before " + describe(peek()));
                return t;
            }
        }
        return std::nullopt;
    }

    Poly expr() {
        Poly acc(dim());
        if (auto op = binary_operator({"-", "+"})) {
            acc += op->text == "-" ? -term() : term();
        } else {
            acc += term();
        }
        while (auto op = binary_operator({"+", "-"})) {
            if (op->text == "+") {
                acc += term();
            } else {
                acc -= term();
            }
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (auto op = binary_operator({"*", "/"})) {
            if (op->text == "*") {
                acc = acc * factor();
                continue;
            }
            const Poly d = factor();
            if (d.degree() > 0) fail(*op, "division by a non-constant expression");
            if (d.is_zero()) fail(*op, "division by zero");
            acc *= d.constant_term().inverse();
        }
        return acc;
    }

    Poly factor() {
        if (accept_symbol("-")) return -factor();
        Poly base = atom();
        if (peek().kind == Tok::Symbol && peek().text == "^") {
            const Token caret = next();
            const int e = natural();
            if (e > kMaxExponent) fail(caret, "exponent exceeds " + std::to_string(kMaxExponent));
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Poly atom() {
        const Token t = peek();
        switch (t.kind) {
        case Tok::Number: {
            next();
            return Poly::constant(dim(), Scalar(Rational(Integer(t.text))));
        }
        case Tok::Ident: {
            next();
            if (t.text == "i") return Poly::constant(dim(), Scalar::imag_unit());
            auto it = std::find(vars_.begin(), vars_.end(), t.text);
            if (it == vars_.end()) {
                throw ParseError(ErrorKind::UnknownIdentifier, t.line, t.column, "unknown identifier '" + t.text + "'");
            }
            return Poly::variable(dim(), static_cast<std::size_t>(it - vars_.begin()));
        }
        case Tok::Symbol:
            if (t.text == "(") {
                next();
                Poly inner = expr();
                expect_symbol(")");
                return inner;
            }
            break;
        case Tok::End:
            break;
        }
        fail(t, "expected an expression, found " + describe(t));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<std::string> vars_;
};

}  // namespace

ProblemSpec parse_problem(std::string_view text) {
    return Parser(Lexer(text).run(), {}).document();
}

Poly parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
    return Parser(Lexer(text).run(), variables).single_expression();
}

std::string format_problem(const ProblemSpec& spec) {
    std::string out = "vars";
    for (const auto& v : spec.variables) out += " " + v;
    out += ";\n";
    for (const auto& f : spec.fields) out += "field " + f.name + " = " + f.field.to_string(spec.variables) + ";\n";
    for (const auto& g : spec.integrals) out += "integral " + g.name + " = " + g.poly.to_string(spec.variables) + ";\n";
    out += "order " + std::to_string(spec.order) + ";\n";
    out += "resbound " + std::to_string(spec.res_bound) + ";\n";
    out += std::string("mode ") + to_string(spec.mode) + ";\n";
    if (spec.isochore) out += "isochore;\n";
    return out;
}

}  // namespace pdnf
