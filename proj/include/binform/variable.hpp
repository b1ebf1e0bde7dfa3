#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace binform {

// Coefficient series of the four generic binary forms.
enum class Series : std::uint8_t { a = 0, b = 1, c = 2, d = 3 };

char series_letter(Series s);
std::optional<Series> series_from_letter(char c);

// A variable of the ambient polynomial ring: an indexed series coefficient
// (a0, b3, ...), the Appell argument x, or one of the covariant variables
// X, Y.  The total order is fixed: a < b < c < d by series, then by index,
// then x, then X < Y.  Canonical printing and golden files depend on it.
class Variable {
public:
    enum class Kind : std::uint8_t { coefficient = 0, appell_x = 1, covariant_x = 2, covariant_y = 3 };

    static Variable coefficient(Series s, unsigned index);
    static Variable x();
    static Variable X();
    static Variable Y();

    Kind kind() const { return kind_; }
    bool is_coefficient() const { return kind_ == Kind::coefficient; }
    bool is_covariant() const { return kind_ == Kind::covariant_x || kind_ == Kind::covariant_y; }
    Series series() const { return series_; }
    unsigned index() const { return index_; }

    // "a0", "a{12}", "x", "X", "Y" — the same spelling the expression grammar
    // and the JSON format use.
    std::string name() const;

    auto operator<=>(const Variable&) const = default;

private:
    Variable(Kind k, Series s, std::uint16_t i) : kind_(k), series_(s), index_(i) {}
    Kind kind_;
    Series series_;
    std::uint16_t index_;
};

}  // namespace binform
