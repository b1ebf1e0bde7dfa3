#include "binform/context.hpp"

#include "binform/errors.hpp"

namespace binform {

FormContext::FormContext(unsigned order, std::set<Series> active_series)
    : order_(order), active_(std::move(active_series)) {
    if (order_ == 0) throw DomainError("form order must be positive");
    if (active_.empty()) throw DomainError("a form context needs at least one active series");
}

void FormContext::require_legal(const Variable& v) const {
    if (!v.is_coefficient()) return;
    if (!is_active(v.series()))
        throw ContextError("series '" + std::string(1, series_letter(v.series())) +
                           "' is not active in this context");
    if (v.index() > order_)
        throw ContextError("coefficient " + v.name() + " exceeds the form order " +
                           std::to_string(order_));
}

void FormContext::require_legal(const Polynomial& p) const {
    for (const auto& v : p.variables()) require_legal(v);
}

FormContext context_for(const Polynomial& p, unsigned order) {
    std::set<Series> active;
    for (const auto& v : p.variables())
        if (v.is_coefficient()) active.insert(v.series());
    if (active.empty()) active = {Series::a};
    return FormContext(order, std::move(active));
}

}  // namespace binform
