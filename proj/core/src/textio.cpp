#include "boro/textio.hpp"

#include <cctype>
#include <sstream>

namespace boro {

std::string monomial_to_text(const Ring& ring, const Monomial& m) {
    std::string out;
    for (unsigned i = 0; i < ring.nvars(); ++i) {
        if (m.e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.vars[i];
        if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
    }
    return out;
}

RingPtr xyz_ring() {
    static RingPtr ring = make_ring({"x", "y", "z"});
    return ring;
}

namespace {

// inner rational-coefficient body like "1 - 1/2*w^3" with symbol w
std::string rational_combo_text(const std::vector<Rational>& coeffs, const std::string& symbol) {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Rational& c = coeffs[i];
        if (sgn(c) == 0) continue;
        const Rational a = abs(c);
        std::string body;
        if (i == 0) {
            body = to_string(a);
        } else {
            std::string mono = symbol + (i > 1 ? "^" + std::to_string(i) : "");
            body = is_one(a) ? mono : to_string(a) + "*" + mono;
        }
        if (first) {
            out += (sgn(c) < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += (sgn(c) < 0 ? " - " : " + ") + body;
        }
    }
    return first ? "0" : out;
}

}  // namespace

std::string cyc_to_text(const CycElem& e) { return "(" + rational_combo_text(e.coeffs(), "w") + ")"; }

std::string to_text(const Polynomial<Rational>& f) {
    if (f.is_zero()) return "0";
    const Ring& ring = *f.ring();
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        const Rational a = abs(t.coeff);
        const std::string mono = monomial_to_text(ring, t.mono);
        std::string body;
        if (mono.empty())
            body = to_string(a);
        else
            body = is_one(a) ? mono : to_string(a) + "*" + mono;
        if (first) {
            out += (sgn(t.coeff) < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += (sgn(t.coeff) < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

std::string to_text(const Polynomial<CycElem>& f) {
    if (f.is_zero()) return "0";
    const Ring& ring = *f.ring();
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        const std::string mono = monomial_to_text(ring, t.mono);
        std::string body = cyc_to_text(t.coeff);
        if (!mono.empty()) body += "*" + mono;
        out += first ? body : " + " + body;
        first = false;
    }
    return out;
}

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos));
    }

    std::string integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer at offset " + std::to_string(pos));
        return std::string(text.substr(start, pos - start));
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            if (std::isdigit(static_cast<unsigned char>(text[pos])) && pos == start) break;
            ++pos;
        }
        if (pos == start) throw ParseError("expected identifier at offset " + std::to_string(pos));
        return std::string(text.substr(start, pos - start));
    }

    Rational rational() {
        std::string num = integer();
        if (accept('/')) {
            std::string den = integer();
            return parse_rational(num + "/" + den);
        }
        return parse_rational(num);
    }

    unsigned exponent() {
        if (accept('^')) return static_cast<unsigned>(std::stoul(integer()));
        return 1;
    }
};

// "c0 + c1*w + ..." up to the matching ')' (already consumed '(')
CycElem parse_cyc_body(Lexer& lex, const CycFieldPtr& field) {
    CycElem acc = CycElem::zero(field);
    bool first = true;
    while (true) {
        int sign = 1;
        if (lex.accept('-'))
            sign = -1;
        else if (lex.accept('+'))
            sign = 1;
        else if (!first)
            break;
        first = false;
        Rational coeff(1);
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
            coeff = lex.rational();
            saw_coeff = true;
        }
        long zexp = 0;
        if (!saw_coeff || lex.accept('*')) {
            if (lex.peek() == 'w') {
                lex.expect('w');
                zexp = static_cast<long>(lex.exponent());
            } else if (!saw_coeff) {
                throw ParseError("expected coefficient or w at offset " + std::to_string(lex.pos));
            }
        }
        if (sign < 0) coeff = -coeff;
        acc += CycElem::zeta_power(field, zexp).scale(coeff);
        if (lex.peek() != '+' && lex.peek() != '-') break;
    }
    return acc;
}

template <class K, class CoeffParser>
Polynomial<K> parse_poly_impl(std::string_view text, const RingPtr& ring, const K& one,
                              CoeffParser&& parse_coeff) {
    Lexer lex{text};
    std::vector<Term<K>> terms;
    if (lex.eof()) throw ParseError("empty polynomial");
    // special-case bare zero
    bool first = true;
    while (!lex.eof()) {
        int sign = 1;
        if (lex.accept('-'))
            sign = -1;
        else if (lex.accept('+'))
            sign = 1;
        else if (!first)
            throw ParseError("expected '+' or '-' at offset " + std::to_string(lex.pos));
        first = false;

        K coeff = one;
        Monomial mono = Monomial::one();
        bool any_factor = false;
        while (true) {
            const char c = lex.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff = coeff * parse_coeff(lex, false);
                any_factor = true;
            } else if (c == '(') {
                coeff = coeff * parse_coeff(lex, true);
                any_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string name = lex.ident();
                const int vi = ring->var_index(name);
                if (vi < 0) throw ParseError("unknown variable '" + name + "'");
                const unsigned e = lex.exponent();
                for (unsigned k = 0; k < e; ++k) mono = mono * Monomial::var(static_cast<unsigned>(vi));
                any_factor = true;
            } else {
                break;
            }
            if (!lex.accept('*')) break;
        }
        if (!any_factor) throw ParseError("empty term at offset " + std::to_string(lex.pos));
        if (sign < 0) coeff = -coeff;
        terms.push_back({mono, std::move(coeff)});
    }
    return Polynomial<K>(ring, std::move(terms));
}

}  // namespace

Polynomial<Rational> parse_poly_rational(std::string_view text, const RingPtr& ring) {
    return parse_poly_impl<Rational>(text, ring, Rational(1), [](Lexer& lex, bool paren) -> Rational {
        if (paren) throw ParseError("parenthesized coefficient in rational polynomial");
        return lex.rational();
    });
}

Polynomial<CycElem> parse_poly_cyc(std::string_view text, const RingPtr& ring, const CycFieldPtr& field) {
    return parse_poly_impl<CycElem>(
        text, ring, CycElem::one(field), [&field](Lexer& lex, bool paren) -> CycElem {
            if (paren) {
                lex.expect('(');
                CycElem v = parse_cyc_body(lex, field);
                lex.expect(')');
                return v;
            }
            return CycElem::from_rational(field, lex.rational());
        });
}

CycElem parse_cyc(std::string_view text, const CycFieldPtr& field) {
    Lexer lex{text};
    const bool paren = lex.accept('(');
    CycElem v = parse_cyc_body(lex, field);
    if (paren) lex.expect(')');
    if (!lex.eof()) throw ParseError("trailing characters in cyclotomic literal");
    return v;
}

}  // namespace boro
