#include "binform/polynomial.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "binform/errors.hpp"

namespace binform {

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) terms_.emplace(Monomial(), constant);
}

Polynomial::Polynomial(const Integer& constant) : Polynomial(Rational(constant)) {}
Polynomial::Polynomial(long constant) : Polynomial(Rational(constant)) {}

Polynomial Polynomial::variable(Variable v, std::uint32_t exponent) {
    Polynomial p;
    p.terms_.emplace(Monomial::of(v, exponent), Rational(1));
    return p;
}

Polynomial Polynomial::term(const Rational& coeff, const Monomial& m) {
    Polynomial p;
    if (coeff != 0) p.terms_.emplace(m, coeff);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Polynomial::constant_value() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t Polynomial::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

std::uint32_t Polynomial::degree_in(Variable v) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent_of(v));
    return d;
}

bool Polynomial::has_kind(Variable::Kind k) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors())
            if (v.kind() == k) return true;
    return false;
}

std::vector<Variable> Polynomial::variables() const {
    std::vector<Variable> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (this == &rhs) return *this *= Rational(2);
    for (const auto& [m, c] : rhs.terms_) {
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (this == &rhs) {
        terms_.clear();
        return *this;
    }
    for (const auto& [m, c] : rhs.terms_) {
        auto [it, inserted] = terms_.emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial result(1);
    Polynomial base(*this);
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::substituted(const std::map<Variable, Polynomial>& bindings) const {
    // Per-variable power cache; substitution images are reused heavily.
    std::map<Variable, std::vector<Polynomial>> powers;
    auto power_of = [&](Variable v, std::uint32_t e) -> const Polynomial& {
        auto it = bindings.find(v);
        if (it == bindings.end()) throw MissingBindingError(v.name());
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Polynomial(1));
        while (cache.size() <= e) cache.push_back(cache.back() * it->second);
        return cache[e];
    };
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Polynomial t(c);
        for (const auto& [v, e] : m.factors()) t = t * power_of(v, e);
        out += t;
    }
    return out;
}

Polynomial Polynomial::derivative(Variable v) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.exponent_of(v);
        if (e == 0) continue;
        out += Polynomial::term(c * Rational(static_cast<long>(e)), m.lowered(v));
    }
    return out;
}

Polynomial diff_x(const Polynomial& p) {
    if (p.has_kind(Variable::Kind::covariant_x) || p.has_kind(Variable::Kind::covariant_y))
        throw DomainError("diff_x is defined for polynomials without covariant variables");
    return p.derivative(Variable::x());
}

Polynomial exact_quotient(Polynomial num, const Polynomial& den) {
    if (den.is_zero()) throw InternalError("exact division by the zero polynomial");
    Polynomial quotient;
    const auto& lead = *den.terms().begin();
    while (!num.is_zero()) {
        const auto& top = *num.terms().begin();
        auto m = top.first.divided_by(lead.first);
        if (!m) throw InternalError("non-exact polynomial division");
        Polynomial t = Polynomial::term(top.second / lead.second, *m);
        quotient += t;
        num -= t * den;
    }
    return quotient;
}

namespace kernels {

namespace {
std::atomic<bool> g_parallel{true};
constexpr std::size_t kParallelWork = 16384;  // term-pair count before threading pays off

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

void accumulate_block(Accumulator& acc, Polynomial::TermMap::const_iterator first,
                      Polynomial::TermMap::const_iterator last, const Polynomial::TermMap& rhs) {
    for (auto i = first; i != last; ++i)
        for (const auto& [m, c] : rhs) {
            Rational prod = i->second * c;
            auto [it, inserted] = acc.try_emplace(i->first * m, prod);
            if (!inserted) it->second += prod;
        }
}

Polynomial from_accumulator(Accumulator&& acc) {
    std::vector<std::pair<Monomial, Rational>> items;
    items.reserve(acc.size());
    while (!acc.empty()) {
        auto node = acc.extract(acc.begin());
        if (node.mapped() != 0) items.emplace_back(std::move(node.key()), std::move(node.mapped()));
    }
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        return MonomialDescending{}(a.first, b.first);
    });
    Polynomial::TermMap map(std::make_move_iterator(items.begin()), std::make_move_iterator(items.end()));
    return Polynomial::from_terms(std::move(map));
}
}  // namespace

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }
void set_parallel(bool enabled) { g_parallel.store(enabled, std::memory_order_relaxed); }

Polynomial multiply_serial(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
    std::size_t work = lhs.term_count() * rhs.term_count();
    if (work <= 64) {
        Polynomial out;
        for (const auto& [ml, cl] : lhs.terms())
            for (const auto& [mr, cr] : rhs.terms()) out += Polynomial::term(cl * cr, ml * mr);
        return out;
    }
    Accumulator acc;
    acc.reserve(lhs.term_count() + rhs.term_count());
    accumulate_block(acc, lhs.terms().begin(), lhs.terms().end(), rhs.terms());
    return from_accumulator(std::move(acc));
}

Polynomial multiply_parallel(const Polynomial& lhs, const Polynomial& rhs) {
#ifdef _OPENMP
    if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
    if (omp_in_parallel()) return multiply_serial(lhs, rhs);  // no nested teams
    const auto& big = lhs.term_count() >= rhs.term_count() ? lhs : rhs;
    const auto& small = lhs.term_count() >= rhs.term_count() ? rhs : lhs;

    std::vector<Polynomial::TermMap::const_iterator> pos;
    for (auto it = big.terms().begin(); it != big.terms().end(); ++it) pos.push_back(it);

    int threads = std::min<std::size_t>(omp_get_max_threads(), (pos.size() + 63) / 64);
    if (threads <= 1) return multiply_serial(lhs, rhs);

    std::vector<Accumulator> partial(threads);
#pragma omp parallel num_threads(threads)
    {
        // chunk by the team size actually granted, not the one requested
        int team = omp_get_num_threads();
        int t = omp_get_thread_num();
        std::size_t chunk = (pos.size() + team - 1) / team;
        std::size_t lo = std::min(pos.size(), static_cast<std::size_t>(t) * chunk);
        std::size_t hi = std::min(pos.size(), lo + chunk);
        if (lo < hi)
            accumulate_block(partial[t], pos[lo], hi == pos.size() ? big.terms().end() : pos[hi],
                             small.terms());
    }
    Accumulator total = std::move(partial[0]);
    for (int t = 1; t < threads; ++t)
        while (!partial[t].empty()) {
            auto node = partial[t].extract(partial[t].begin());
            auto it = total.find(node.key());
            if (it == total.end())
                total.insert(std::move(node));
            else
                it->second += node.mapped();
        }
    return from_accumulator(std::move(total));
#else
    return multiply_serial(lhs, rhs);
#endif
}

}  // namespace kernels

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    std::size_t work = lhs.term_count() * rhs.term_count();
    if (kernels::parallel_enabled() && work >= kernels::kParallelWork)
        return kernels::multiply_parallel(lhs, rhs);
    return kernels::multiply_serial(lhs, rhs);
}

}  // namespace binform
