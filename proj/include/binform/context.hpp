#pragma once

#include <initializer_list>
#include <set>

#include "binform/polynomial.hpp"

namespace binform {

// The order n of the generic binary forms plus the set of coefficient series
// in play.  All active series share the same order.
class FormContext {
public:
    FormContext(unsigned order, std::set<Series> active_series);
    FormContext(unsigned order, std::initializer_list<Series> active_series)
        : FormContext(order, std::set<Series>(active_series)) {}

    unsigned order() const { return order_; }
    const std::set<Series>& active_series() const { return active_; }
    bool is_active(Series s) const { return active_.count(s) > 0; }

    // Throws ContextError for coefficient variables outside this context.
    void require_legal(const Variable& v) const;
    void require_legal(const Polynomial& p) const;

    bool operator==(const FormContext&) const = default;

private:
    unsigned order_;
    std::set<Series> active_;
};

// Context covering the series that actually occur in p (all four when p has
// no coefficient variables).
FormContext context_for(const Polynomial& p, unsigned order);

}  // namespace binform
