#include "binform/rational.hpp"

#include <cctype>

#include "binform/errors.hpp"

namespace binform {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw DomainError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed rational literal '" + std::string(text) + "'");
    }
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_latex(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    std::string num = Integer(abs(q.get_num())).get_str();
    std::string body = "\\frac{" + num + "}{" + q.get_den().get_str() + "}";
    return q < 0 ? "-" + body : body;
}

Integer binomial_coefficient(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer falling_factorial(long m, unsigned long i) {
    Integer r = 1;
    for (unsigned long t = 0; t < i; ++t) r *= Integer(m - static_cast<long>(t));
    return r;
}

Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace binform
