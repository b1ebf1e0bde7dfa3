#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "binform/variable.hpp"

namespace binform {

// A power product of variables: sorted (variable, exponent) pairs, all
// exponents positive.  The empty product is the unit monomial.
class Monomial {
public:
    using Factor = std::pair<Variable, std::uint32_t>;

    Monomial() = default;
    static Monomial of(Variable v, std::uint32_t exponent = 1);
    static Monomial from_factors(std::vector<Factor> sorted_factors);  // trusted input

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    std::uint32_t exponent_of(Variable v) const;
    std::uint32_t total_degree() const;

    Monomial operator*(const Monomial& rhs) const;
    std::optional<Monomial> divided_by(const Monomial& rhs) const;

    // The monomial with the exponent of v lowered by one (v must occur).
    Monomial lowered(Variable v) const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<Factor> factors_;
};

// Lexicographic monomial order with earlier variables more significant; a
// genuine monomial order (multiplicative, unit minimal), which exact division
// and canonical printing both rely on.
std::strong_ordering monomial_order(const Monomial& lhs, const Monomial& rhs);

// Leading term first: term maps iterate from the largest monomial down.
struct MonomialDescending {
    bool operator()(const Monomial& lhs, const Monomial& rhs) const {
        return monomial_order(lhs, rhs) == std::strong_ordering::greater;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

}  // namespace binform
