#include "pt/parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "pt/errors.hpp"

namespace pt {

namespace {

struct Token {
    enum class Kind { Ident, Integer, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
    int column = 1;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    int line = 1, column = 1;
    std::size_t pos = 0;
    auto step = [&](char c) {
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    };
    while (pos < src.size()) {
        char c = src[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            step(c);
            continue;
        }
        if (c == '#') {
            while (pos < src.size() && src[pos] != '\n') step(src[pos]);
            continue;
        }
        Token t;
        t.line = line;
        t.column = column;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Kind::Ident;
            while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
                t.text += src[pos];
                step(src[pos]);
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Kind::Integer;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                t.text += src[pos];
                step(src[pos]);
            }
        } else if (std::string("{}(),;:=+-*/").find(c) != std::string::npos) {
            t.kind = Token::Kind::Punct;
            t.text = c;
            step(c);
        } else {
            throw ParseError(line, column, std::string("unexpected character '") + c + "'");
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.column = column;
    out.push_back(end);
    return out;
}

class Parser {
  public:
    explicit Parser(const std::string& src) : toks_(lex(src)) {}

    PDESystem parse() {
        expect_kw("pde");
        std::string name = expect_ident("model name");
        expect_punct('{');
        parse_decls();
        const Token& eq = peek();
        expect_kw("equation");
        expect_punct(':');
        auto terms = parse_sum();
        expect_punct('=');
        for (EqTerm& t : parse_sum()) {
            t.coeff = -t.coeff;
            terms.push_back(std::move(t));
        }
        expect_punct('}');
        if (peek().kind != Token::Kind::End) fail(peek(), "trailing input after the definition");
        if (field_.empty()) throw ParseError(eq.line, eq.column, "no field declared");
        try {
            return PDESystem(std::move(name), field_, std::move(params_), std::move(terms));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            // Shape violations surface at the equation, located there.
            throw ParseError(eq.line, eq.column, e.what());
        }
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& get() { return toks_[pos_++]; }

    [[noreturn]] static void fail(const Token& t, const std::string& msg) {
        throw ParseError(t.line, t.column, msg);
    }

    bool at_kw(const char* word) const {
        return peek().kind == Token::Kind::Ident && peek().text == word;
    }

    void expect_kw(const char* word) {
        if (!at_kw(word)) fail(peek(), std::string("expected '") + word + "'");
        ++pos_;
    }

    std::string expect_ident(const char* what) {
        if (peek().kind != Token::Kind::Ident) fail(peek(), std::string("expected ") + what);
        return get().text;
    }

    void expect_punct(char c) {
        if (peek().kind != Token::Kind::Punct || peek().text[0] != c)
            fail(peek(), std::string("expected '") + c + "'");
        ++pos_;
    }

    bool eat_punct(char c) {
        if (peek().kind == Token::Kind::Punct && peek().text[0] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void parse_decls() {
        while (true) {
            if (at_kw("field")) {
                const Token& tok = get();
                if (!field_.empty()) fail(tok, "duplicate field declaration");
                field_ = expect_ident("field name");
                expect_punct('(');
                expect_ident("space variable");
                expect_punct(',');
                expect_ident("time variable");
                expect_punct(')');
            } else if (at_kw("param")) {
                get();
                ParamDecl decl;
                decl.name = expect_ident("parameter name");
                if (eat_punct(':')) {
                    const Token& t = peek();
                    std::string dom = expect_ident("parameter domain");
                    if (dom == "real")
                        decl.type = ParamDecl::Type::Real;
                    else if (dom == "int")
                        decl.type = ParamDecl::Type::Integer;
                    else if (dom == "complex")
                        decl.type = ParamDecl::Type::Complex;
                    else
                        fail(t, "unknown parameter domain '" + dom + "'");
                }
                params_.push_back(std::move(decl));
            } else {
                return;
            }
        }
    }

    std::vector<EqTerm> parse_sum() {
        std::vector<EqTerm> terms;
        bool negate = false;
        if (eat_punct('-'))
            negate = true;
        else
            eat_punct('+');
        while (true) {
            EqTerm t = parse_product();
            if (negate) t.coeff = -t.coeff;
            if (!t.coeff.is_zero()) terms.push_back(std::move(t));
            if (eat_punct('+'))
                negate = false;
            else if (eat_punct('-'))
                negate = true;
            else
                return terms;
        }
    }

    EqTerm parse_product() {
        EqTerm t;
        do {
            parse_atom(t);
        } while (eat_punct('*'));
        return t;
    }

    void parse_atom(EqTerm& t) {
        const Token& tok = peek();
        if (tok.kind == Token::Kind::Integer) {
            std::string num = get().text;
            if (eat_punct('/')) {
                if (peek().kind != Token::Kind::Integer) fail(peek(), "expected a denominator");
                const Token& den = peek();
                std::string d = get().text;
                if (d.find_first_not_of('0') == std::string::npos)
                    fail(den, "zero denominator");
                num += "/" + d;
            }
            t.coeff *= GaussRational(rational_from_string(num));
            return;
        }
        if (tok.kind != Token::Kind::Ident) fail(tok, "expected a term atom");
        std::string word = get().text;
        if (word == "i") {
            t.coeff *= GaussRational::i();
            return;
        }
        if (word == "dt" && eat_punct('(')) {
            field_ref(tok);
            expect_punct(')');
            t.ut_power += 1;
            return;
        }
        int slot_order = word == "D" ? 1 : word == "D2" ? 2 : word == "D3" ? 3 : 0;
        if (slot_order > 0 && eat_punct('(')) {
            field_ref(tok);
            expect_punct(';');
            add_slot(t, slot_order, parse_exponent());
            expect_punct(')');
            return;
        }
        if (word == field_) {
            t.u_power += 1;
            return;
        }
        for (const ParamDecl& p : params_) {
            if (p.name == word) {
                t.params[word] += 1;
                return;
            }
        }
        fail(tok, "undeclared symbol '" + word + "'");
    }

    void field_ref(const Token& at) {
        const Token& t = peek();
        std::string name = expect_ident("the field");
        if (name != field_) fail(t, "expected the declared field, got '" + name + "'");
        (void)at;
    }

    DeformExponent parse_exponent() {
        const Token& t = peek();
        if (t.kind == Token::Kind::Integer) {
            long long value = 0;
            try {
                value = std::stoll(get().text);
            } catch (const std::exception&) {
                fail(t, "deformation exponent out of range");
            }
            return DeformExponent::concrete(value);
        }
        std::string word = expect_ident("a deformation exponent");
        if (word == "eps") return DeformExponent::symbolic(ExpVar::Eps);
        if (word == "mu") return DeformExponent::symbolic(ExpVar::Mu);
        fail(t, "unknown deformation exponent '" + word + "' (use an integer, eps, or mu)");
    }

    static void add_slot(EqTerm& t, int order, const DeformExponent& e) {
        for (SlotUse& s : t.slots) {
            if (s.order == order && s.exponent == e) {
                s.power += 1;
                return;
            }
        }
        t.slots.push_back(SlotUse{order, e, 1});
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::string field_;
    std::vector<ParamDecl> params_;
};

std::string coeff_magnitude(const GaussRational& c, bool lead_factor) {
    Rational re = c.re(), im = c.im();
    if (!(re == 0) && !(im == 0))
        throw InternalInvariantViolation("mixed complex coefficient has no definition syntax");
    std::ostringstream os;
    if (im == 0) {
        Rational a = re < 0 ? Rational(-re) : re;
        if (a == 1 && !lead_factor) return "";
        os << a;
    } else {
        Rational a = im < 0 ? Rational(-im) : im;
        if (a != 1) os << a << "*";
        os << "i";
    }
    return os.str();
}

bool coeff_negative(const GaussRational& c) {
    return c.im() == 0 ? c.re() < 0 : c.im() < 0;
}

std::string term_text(const EqTerm& t, const std::string& field) {
    std::vector<std::string> factors;
    bool bare = t.params.empty() && t.u_power == 0 && t.ut_power == 0 && t.slots.empty();
    std::string mag = coeff_magnitude(t.coeff, bare);
    if (!mag.empty()) factors.push_back(mag);
    for (const auto& [name, power] : t.params)
        for (int j = 0; j < power; ++j) factors.push_back(name);
    for (int j = 0; j < t.ut_power; ++j) factors.push_back("dt(" + field + ")");
    for (int j = 0; j < t.u_power; ++j) factors.push_back(field);
    for (const SlotUse& s : t.slots) {
        if (s.order > 3)
            throw InternalInvariantViolation("derivative order beyond 3 has no definition syntax");
        std::string head = s.order == 1 ? "D" : s.order == 2 ? "D2" : "D3";
        std::string slot = head + "(" + field + "; " + s.exponent.to_string() + ")";
        for (int j = 0; j < s.power; ++j) factors.push_back(slot);
    }
    std::string out;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        if (j) out += "*";
        out += factors[j];
    }
    return out;
}

}  // namespace

PDESystem parse_system(const std::string& text) { return Parser(text).parse(); }

std::string print_system(const PDESystem& sys) {
    std::ostringstream os;
    os << "pde " << sys.name() << " {\n";
    os << "  field " << sys.field() << "(x, t)\n";
    for (const ParamDecl& p : sys.params()) {
        const char* dom = p.type == ParamDecl::Type::Real      ? "real"
                          : p.type == ParamDecl::Type::Integer ? "int"
                                                               : "complex";
        os << "  param " << p.name << " : " << dom << "\n";
    }
    os << "  equation :";
    for (std::size_t k = 0; k < sys.terms().size(); ++k) {
        const EqTerm& t = sys.terms()[k];
        bool neg = coeff_negative(t.coeff);
        if (k == 0)
            os << (neg ? " -" : " ");
        else
            os << (neg ? " - " : " + ");
        os << term_text(t, sys.field());
    }
    os << " = 0\n}\n";
    return os.str();
}

}  // namespace pt
