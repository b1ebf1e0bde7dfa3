#include "binform/poly_io.hpp"

#include <cctype>
#include <sstream>

#include "binform/errors.hpp"

namespace binform {

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int column = 1;

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
    }

    bool eof() {
        skip_space();
        return pos >= text.size();
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, column); }

    Integer read_integer() {
        skip_space();
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits.push_back(text[pos]);
            advance();
        }
        if (digits.empty()) fail("expected an integer");
        return Integer(digits);
    }
};

class Parser {
public:
    Parser(std::string_view text, std::optional<unsigned> max_index) : lx_{text}, max_index_(max_index) {}

    Polynomial run() {
        Polynomial p = expression();
        if (!lx_.eof()) lx_.fail(std::string("unexpected character '") + lx_.peek() + "'");
        return p;
    }

private:
    Lexer lx_;
    std::optional<unsigned> max_index_;

    Polynomial expression() {
        Polynomial acc = term();
        while (!lx_.eof()) {
            char c = lx_.peek();
            if (c == '+') {
                lx_.advance();
                acc += term();
            } else if (c == '-') {
                lx_.advance();
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (!lx_.eof() && lx_.peek() == '*') {
            lx_.advance();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        bool negate = false;
        while (!lx_.eof() && (lx_.peek() == '-' || lx_.peek() == '+')) {
            if (lx_.peek() == '-') negate = !negate;
            lx_.advance();
        }
        Polynomial base = atom();
        if (!lx_.eof() && lx_.peek() == '^') {
            lx_.advance();
            if (lx_.peek() == '-') lx_.fail("exponent must be a non-negative integer");
            Integer e = lx_.read_integer();
            if (!e.fits_uint_p()) lx_.fail("exponent too large");
            base = base.pow(static_cast<std::uint32_t>(e.get_ui()));
        }
        return negate ? -base : base;
    }

    Polynomial atom() {
        char c = lx_.peek();
        if (c == '(') {
            lx_.advance();
            Polynomial inner = expression();
            if (lx_.peek() != ')') lx_.fail("expected ')'");
            lx_.advance();
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return variable();
        if (c == '\0') lx_.fail("unexpected end of input");
        lx_.fail(std::string("unexpected character '") + c + "'");
    }

    Polynomial number() {
        Integer num = lx_.read_integer();
        if (!lx_.eof() && lx_.peek() == '/') {
            lx_.advance();
            int l = lx_.line, col = lx_.column;
            Integer den = lx_.read_integer();
            if (den == 0) throw ParseError("zero denominator", l, col);
            return Polynomial(make_rational(num, den));
        }
        return Polynomial(Rational(num));
    }

    Polynomial variable() {
        int l = lx_.line, col = lx_.column;
        char c = lx_.peek();
        lx_.advance();
        if (c == 'x') return Polynomial::variable(Variable::x());
        if (c == 'X') return Polynomial::variable(Variable::X());
        if (c == 'Y') return Polynomial::variable(Variable::Y());
        auto series = series_from_letter(c);
        if (!series) throw ParseError(std::string("unknown variable name '") + c + "'", l, col);
        Integer index;
        if (lx_.peek() == '{') {
            lx_.advance();
            index = lx_.read_integer();
            if (lx_.peek() != '}') lx_.fail("expected '}' after coefficient index");
            lx_.advance();
        } else if (std::isdigit(static_cast<unsigned char>(lx_.peek()))) {
            char d = lx_.peek();
            lx_.advance();
            index = d - '0';
        } else {
            lx_.fail(std::string("expected an index after series letter '") + c + "'");
        }
        if (!index.fits_uint_p() || index.get_ui() > 0xffff)
            throw ParseError("coefficient index too large", l, col);
        unsigned idx = static_cast<unsigned>(index.get_ui());
        if (max_index_ && idx > *max_index_)
            throw ParseError("index " + std::to_string(idx) + " out of range (order " +
                                 std::to_string(*max_index_) + ")",
                             l, col);
        return Polynomial::variable(Variable::coefficient(*series, idx));
    }
};

std::string variable_latex(const Variable& v) {
    if (!v.is_coefficient()) return v.name();
    return std::string(1, series_letter(v.series())) + "_{" + std::to_string(v.index()) + "}";
}

void append_monomial(std::ostringstream& out, const Monomial& m, PolyStyle style) {
    bool first = true;
    for (const auto& [v, e] : m.factors()) {
        if (style == PolyStyle::plain) {
            if (!first) out << "*";
            out << v.name();
            if (e > 1) out << "^" << e;
        } else {
            if (!first) out << " ";
            out << variable_latex(v);
            if (e > 1) out << "^{" << e << "}";
        }
        first = false;
    }
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::optional<unsigned> max_index) {
    return Parser(text, max_index).run();
}

std::string format_polynomial(const Polynomial& p, PolyStyle style) {
    if (style == PolyStyle::json) return polynomial_to_json(p).dump();
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit_coeff = (a == 1);
        if (m.is_unit()) {
            out << (style == PolyStyle::plain ? to_string(a) : to_latex(a));
        } else {
            if (!unit_coeff) {
                out << (style == PolyStyle::plain ? to_string(a) : to_latex(a));
                out << (style == PolyStyle::plain ? "*" : " ");
            }
            append_monomial(out, m, style);
        }
        first = false;
    }
    return out.str();
}

nlohmann::ordered_json polynomial_to_json(const Polynomial& p) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::ordered_json powers = nlohmann::ordered_json::object();
        for (const auto& [v, e] : m.factors()) powers[v.name()] = e;
        terms.push_back({{"coeff", to_string(c)}, {"powers", std::move(powers)}});
    }
    return nlohmann::ordered_json{{"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j, std::optional<unsigned> max_index) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw DomainError("polynomial JSON must be an object with a 'terms' array");
    Polynomial out;
    for (const auto& t : j["terms"]) {
        Rational coeff = parse_rational(t.at("coeff").get<std::string>());
        Polynomial term(coeff);
        for (const auto& [name, e] : t.at("powers").items()) {
            Polynomial v = parse_polynomial(name, max_index);
            term = term * v.pow(e.get<std::uint32_t>());
        }
        out += term;
    }
    return out;
}

}  // namespace binform
