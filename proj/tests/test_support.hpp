#pragma once

#include <random>
#include <vector>

#include "binform/poly_io.hpp"

namespace binform::test {

inline Polynomial P(const std::string& text) { return parse_polynomial(text); }

inline Rational Q(const std::string& text) { return parse_rational(text); }

// Small random polynomials over a fixed variable pool; deterministic seed.
class RandomPolys {
public:
    explicit RandomPolys(std::uint64_t seed, std::vector<Variable> pool)
        : rng_(seed), pool_(std::move(pool)) {}

    Polynomial next(unsigned max_terms = 4, unsigned max_exp = 3) {
        std::uniform_int_distribution<unsigned> terms(1, max_terms);
        std::uniform_int_distribution<unsigned> exp(0, max_exp);
        std::uniform_int_distribution<int> coeff(-9, 9);
        std::uniform_int_distribution<int> den(1, 3);
        std::uniform_int_distribution<std::size_t> var(0, pool_.size() - 1);
        Polynomial out;
        unsigned t = terms(rng_);
        for (unsigned i = 0; i < t; ++i) {
            int c = coeff(rng_);
            if (c == 0) c = 1;
            Monomial m;
            unsigned nvars = 1 + exp(rng_) % 3;
            for (unsigned v = 0; v < nvars; ++v) {
                unsigned e = exp(rng_);
                if (e > 0) m = m * Monomial::of(pool_[var(rng_)], e);
            }
            out += Polynomial::term(make_rational(c, den(rng_)), m);
        }
        return out;
    }

private:
    std::mt19937_64 rng_;
    std::vector<Variable> pool_;
};

inline std::vector<Variable> coeff_pool(Series s, unsigned n) {
    std::vector<Variable> pool;
    for (unsigned i = 0; i <= n; ++i) pool.push_back(Variable::coefficient(s, i));
    return pool;
}

}  // namespace binform::test
