#pragma once

#include <functional>
#include <map>
#include <vector>

#include "binform/monomial.hpp"
#include "binform/rational.hpp"

namespace binform {

// Sparse multivariate polynomial over the exact rationals.  The term map is
// canonical: no zero coefficients are stored, equal polynomials have identical
// representations, and iteration starts at the leading term.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialDescending>;

    Polynomial() = default;
    Polynomial(const Rational& constant);
    Polynomial(const Integer& constant);
    Polynomial(long constant);
    Polynomial(int constant) : Polynomial(static_cast<long>(constant)) {}

    static Polynomial variable(Variable v, std::uint32_t exponent = 1);
    static Polynomial term(const Rational& coeff, const Monomial& m);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;      // coefficient of the unit monomial
    std::size_t term_count() const { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;

    std::uint32_t total_degree() const;   // max total degree over all terms
    std::uint32_t degree_in(Variable v) const;
    bool has_kind(Variable::Kind k) const;
    std::vector<Variable> variables() const;  // sorted, unique

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scalar);
    Polynomial pow(std::uint32_t e) const;

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(Polynomial lhs, const Rational& s) { return lhs *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial rhs) { return rhs *= s; }

    bool operator==(const Polynomial&) const = default;

    // Total substitution: every variable occurring in *this must be bound.
    Polynomial substituted(const std::map<Variable, Polynomial>& bindings) const;

    Polynomial derivative(Variable v) const;  // formal partial derivative

    // Internal constructor from an already-canonical map.
    static Polynomial from_terms(TermMap terms) {
        Polynomial p;
        p.terms_ = std::move(terms);
        return p;
    }

private:
    TermMap terms_;
};

// Formal d/dx; rejects covariant variables X, Y.
Polynomial diff_x(const Polynomial& p);

// Exact quotient num/den; throws InternalError when the division is not exact.
Polynomial exact_quotient(Polynomial num, const Polynomial& den);

namespace kernels {

// Multiplication kernels.  operator* dispatches to the threaded kernel for
// large products; both produce the identical canonical term map.
Polynomial multiply_serial(const Polynomial& lhs, const Polynomial& rhs);
Polynomial multiply_parallel(const Polynomial& lhs, const Polynomial& rhs);

bool parallel_enabled();
void set_parallel(bool enabled);

}  // namespace kernels

}  // namespace binform
