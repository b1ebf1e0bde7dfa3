#include "binform/variable.hpp"

#include <limits>

#include "binform/errors.hpp"

namespace binform {

char series_letter(Series s) {
    static constexpr char letters[] = {'a', 'b', 'c', 'd'};
    return letters[static_cast<int>(s)];
}

std::optional<Series> series_from_letter(char c) {
    switch (c) {
        case 'a': return Series::a;
        case 'b': return Series::b;
        case 'c': return Series::c;
        case 'd': return Series::d;
        default: return std::nullopt;
    }
}

Variable Variable::coefficient(Series s, unsigned index) {
    if (index > std::numeric_limits<std::uint16_t>::max())
        throw DomainError("coefficient index too large");
    return Variable(Kind::coefficient, s, static_cast<std::uint16_t>(index));
}

Variable Variable::x() { return Variable(Kind::appell_x, Series::a, 0); }
Variable Variable::X() { return Variable(Kind::covariant_x, Series::a, 0); }
Variable Variable::Y() { return Variable(Kind::covariant_y, Series::a, 0); }

std::string Variable::name() const {
    switch (kind_) {
        case Kind::appell_x: return "x";
        case Kind::covariant_x: return "X";
        case Kind::covariant_y: return "Y";
        case Kind::coefficient: break;
    }
    std::string s(1, series_letter(series_));
    if (index_ < 10) return s + std::to_string(index_);
    return s + "{" + std::to_string(index_) + "}";
}

}  // namespace binform
