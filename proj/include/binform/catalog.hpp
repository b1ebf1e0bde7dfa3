#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binform/forms.hpp"
#include "binform/matrix.hpp"

namespace binform::catalog {

struct VariantCheck {
    std::string label;
    bool equals_bracket = false;
    bool equals_reversed = false;
};

// Comparison of a double-sum closed expansion against the falling-factorial
// bracket route, in both argument orders (the two differ by (-1)^r).
struct CrossCheck {
    Polynomial closed_form;
    Polynomial bracket;           // [first, second]^n
    Polynomial bracket_reversed;  // [second, first]^n
    bool closed_equals_bracket = false;
    bool closed_equals_reversed = false;
    std::string first_difference;  // vs bracket, when both comparisons fail
    std::vector<VariantCheck> variants;
};

struct Built {
    std::string construction;
    unsigned order = 0;
    std::vector<Series> series;
    Polynomial poly;
    bool semi_invariant = false;
    Polynomial d_image;  // nonzero exactly when semi_invariant is false
    std::optional<forms::SemiInvariant> certified;
    std::optional<CrossCheck> crosscheck;
    std::optional<Polynomial> raw_determinant;  // discr only: plain Sylvester determinant
    bool degenerate = false;                    // delta3 with a repeated series
};

// "" when equal, otherwise the leading differing monomial with both
// coefficients spelled out.
std::string first_difference(const Polynomial& lhs, const Polynomial& rhs);

Built dv(unsigned n, Series s1, Series s2);
Built w_poly(unsigned n, Series s = Series::a);
Built semi_hessian(unsigned n, Series s);
Built semi_jacobian(unsigned n, Series s1, Series s2);
Built tr_single(unsigned n, Series s = Series::a);
Built ch_single(unsigned n, Series s = Series::a);
Built discr(unsigned n, Series s);
Built sres(unsigned n, Series s1, Series s2);
Built tr_joint2(unsigned n, Series s1 = Series::a, Series s2 = Series::b);
Built tr_bar_joint2(unsigned n, Series s1 = Series::a, Series s2 = Series::b);
Built tr_joint3(unsigned n, Series s1 = Series::a, Series s2 = Series::b, Series s3 = Series::c);
Built delta3x3(unsigned n, Series s1, Series s2, Series s3);
Built ch_joint4(unsigned n, Series s1 = Series::a, Series s2 = Series::b, Series s3 = Series::c,
                Series s4 = Series::d);
// The alternative pairing [d0, delta]^n; a different, also valid, joint
// semi-invariant kept alongside the normative one.
Built ch_joint4_alt(unsigned n);

// Matrices behind discr/sres, exposed so tests can pin them entry by entry.
PolyMatrix discr_matrix(unsigned n, Series s);
PolyMatrix sres_matrix(unsigned n, Series s1, Series s2);

struct ConstructionInfo {
    std::string id;       // stable CLI identifier
    std::string summary;
    unsigned arity;       // number of series consumed
    unsigned min_order;
    std::vector<Series> default_series;
    bool expected_semi_invariant;
    std::function<Built(unsigned, const std::vector<Series>&)> build;
};

const std::vector<ConstructionInfo>& constructions();
const ConstructionInfo* find_construction(std::string_view id);
Built build_construction(std::string_view id, unsigned n,
                         const std::optional<std::vector<Series>>& series = std::nullopt);

}  // namespace binform::catalog
