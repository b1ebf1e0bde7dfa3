#include "binform/monomial.hpp"

#include <algorithm>

#include "binform/errors.hpp"

namespace binform {

Monomial Monomial::of(Variable v, std::uint32_t exponent) {
    Monomial m;
    if (exponent > 0) m.factors_.emplace_back(v, exponent);
    return m;
}

Monomial Monomial::from_factors(std::vector<Factor> sorted_factors) {
    Monomial m;
    m.factors_ = std::move(sorted_factors);
    return m;
}

std::uint32_t Monomial::exponent_of(Variable v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, const Variable& w) { return f.first < w; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + rhs.factors_.size());
    auto i = factors_.begin();
    auto j = rhs.factors_.begin();
    while (i != factors_.end() && j != rhs.factors_.end()) {
        if (i->first < j->first) {
            out.factors_.push_back(*i++);
        } else if (j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.factors_.insert(out.factors_.end(), i, factors_.end());
    out.factors_.insert(out.factors_.end(), j, rhs.factors_.end());
    return out;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& rhs) const {
    Monomial out;
    auto i = factors_.begin();
    for (const auto& [v, e] : rhs.factors_) {
        while (i != factors_.end() && i->first < v) out.factors_.push_back(*i++);
        if (i == factors_.end() || i->first != v || i->second < e) return std::nullopt;
        if (i->second > e) out.factors_.emplace_back(v, i->second - e);
        ++i;
    }
    out.factors_.insert(out.factors_.end(), i, factors_.end());
    return out;
}

Monomial Monomial::lowered(Variable v) const {
    Monomial out;
    bool seen = false;
    for (const auto& f : factors_) {
        if (f.first == v) {
            seen = true;
            if (f.second > 1) out.factors_.emplace_back(f.first, f.second - 1);
        } else {
            out.factors_.push_back(f);
        }
    }
    if (!seen) throw InternalError("lowered(): variable not present in monomial");
    return out;
}

std::strong_ordering monomial_order(const Monomial& lhs, const Monomial& rhs) {
    auto i = lhs.factors().begin();
    auto j = rhs.factors().begin();
    const auto ie = lhs.factors().end();
    const auto je = rhs.factors().end();
    while (i != ie && j != je) {
        if (i->first != j->first) {
            // A positive power on a more significant (smaller) variable wins.
            return (i->first < j->first) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        if (i->second != j->second)
            return (i->second > j->second) ? std::strong_ordering::greater : std::strong_ordering::less;
        ++i;
        ++j;
    }
    if (i != ie) return std::strong_ordering::greater;
    if (j != je) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::size_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::size_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (const auto& [v, e] : m.factors()) {
        mix((static_cast<std::size_t>(v.kind()) << 24) ^ (static_cast<std::size_t>(v.series()) << 20) ^
            v.index());
        mix(e);
    }
    return h;
}

}  // namespace binform
