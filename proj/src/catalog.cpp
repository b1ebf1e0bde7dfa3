#include "binform/catalog.hpp"

#include <map>

#include "binform/errors.hpp"
#include "binform/poly_io.hpp"

namespace binform::catalog {

namespace {

using forms::SemiInvariant;

Polynomial cvar(Series s, unsigned i) {
    return Polynomial::variable(Variable::coefficient(s, i));
}

// factor * s_index, skipping the variable entirely when the factor vanishes.
// A zero falling factorial always accompanies an out-of-range index in the
// closed expansions, so a nonzero factor with index > n is a bug.
Polynomial scaled_coeff(Series s, const Integer& factor, long index, unsigned n) {
    if (factor == 0) return Polynomial();
    if (index < 0 || index > static_cast<long>(n))
        throw InternalError("closed expansion produced an out-of-range coefficient index");
    return Polynomial::term(Rational(factor),
                            Monomial::of(Variable::coefficient(s, static_cast<unsigned>(index))));
}

Polynomial det2(const Polynomial& a, const Polynomial& b, const Polynomial& c, const Polynomial& d) {
    return a * d - b * c;
}

SemiInvariant seed(Series s, const FormContext& ctx) {
    return SemiInvariant::certify(cvar(s, 0), ctx);
}

Built finalize(std::string id, unsigned n, std::vector<Series> series, Polynomial poly,
               const FormContext& ctx) {
    Built b;
    b.construction = std::move(id);
    b.order = n;
    b.series = std::move(series);
    b.poly = std::move(poly);
    b.d_image = forms::derive_D(b.poly, ctx);
    b.semi_invariant = b.d_image.is_zero();
    if (b.semi_invariant) b.certified = SemiInvariant::certify(b.poly, ctx);
    return b;
}

Built finalize(std::string id, const SemiInvariant& s, std::vector<Series> series) {
    Built b;
    b.construction = std::move(id);
    b.order = s.context().order();
    b.series = std::move(series);
    b.poly = s.poly();
    b.semi_invariant = true;
    b.certified = s;
    return b;
}

void attach_crosscheck(Built& b, Polynomial closed, const SemiInvariant& first,
                       const SemiInvariant& second, unsigned r) {
    CrossCheck cc;
    cc.closed_form = std::move(closed);
    cc.bracket = forms::semi_transvectant(first, second, r).poly();
    cc.bracket_reversed = forms::semi_transvectant(second, first, r).poly();
    cc.closed_equals_bracket = (cc.closed_form == cc.bracket);
    cc.closed_equals_reversed = (cc.closed_form == cc.bracket_reversed);
    if (!cc.closed_equals_bracket && !cc.closed_equals_reversed)
        cc.first_difference = first_difference(cc.closed_form, cc.bracket);
    b.crosscheck = std::move(cc);
}

void require_order(std::string_view id, unsigned n, unsigned min_order) {
    if (n < min_order)
        throw RangeError(std::string(id) + " requires order >= " + std::to_string(min_order) +
                         " (got " + std::to_string(n) + ")");
}

// ---- closed expansions -----------------------------------------------------
//
// Each term divides by a falling factorial that can vanish where the summand
// dies; those terms are skipped after checking the numerator really is zero.

void accumulate_term(Polynomial& acc, Polynomial numerator, const Integer& denominator) {
    if (denominator == 0) {
        if (!numerator.is_zero())
            throw RangeError("closed expansion hit a zero falling factorial against a nonzero term");
        return;
    }
    acc += numerator * Polynomial(make_rational(1, denominator));
}

Polynomial tr_closed_form(unsigned n, Series s) {
    Polynomial acc;
    for (unsigned i = 0; i <= n; ++i) {
        Integer den = falling_factorial(2L * n - 4, i);
        for (unsigned j = 0; j <= i; ++j) {
            Polynomial det = det2(scaled_coeff(s, falling_factorial(n, j), j, n),
                                  scaled_coeff(s, falling_factorial(n - 1L, i - j), i - j + 1, n),
                                  scaled_coeff(s, falling_factorial(n - 1L, j), j + 1, n),
                                  scaled_coeff(s, falling_factorial(n - 2L, i - j), i - j + 2, n));
            Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
            Polynomial num = Polynomial(sign * Rational(binomial_coefficient(n, i) *
                                                        binomial_coefficient(i, j))) *
                             cvar(s, n - i) * det;
            accumulate_term(acc, std::move(num), den);
        }
    }
    return acc;
}

Polynomial ch_closed_form(unsigned n, Series s) {
    Polynomial acc;
    for (unsigned i = 0; i <= n; ++i) {
        Integer den = falling_factorial(2L * n - 4, i) * falling_factorial(2L * n - 4, n - i);
        for (unsigned j = 0; j <= i; ++j) {
            Polynomial det_j = det2(scaled_coeff(s, falling_factorial(n, j), j, n),
                                    scaled_coeff(s, falling_factorial(n - 1L, i - j), i - j + 1, n),
                                    scaled_coeff(s, falling_factorial(n - 1L, j), j + 1, n),
                                    scaled_coeff(s, falling_factorial(n - 2L, i - j), i - j + 2, n));
            if (det_j.is_zero()) continue;
            for (unsigned k = 0; k <= n - i; ++k) {
                Polynomial det_k =
                    det2(scaled_coeff(s, falling_factorial(n, k), k, n),
                         scaled_coeff(s, falling_factorial(n - 1L, n - i - k), n - i - k + 1, n),
                         scaled_coeff(s, falling_factorial(n - 1L, k), k + 1, n),
                         scaled_coeff(s, falling_factorial(n - 2L, n - i - k), n - i - k + 2, n));
                Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
                Polynomial num =
                    Polynomial(sign * Rational(binomial_coefficient(n, i) * binomial_coefficient(i, j) *
                                               binomial_coefficient(n - i, k))) *
                    det_k * det_j;
                accumulate_term(acc, std::move(num), den);
            }
        }
    }
    return acc;
}

Polynomial tr2_closed_form(unsigned n, Series sa, Series sb) {
    Polynomial acc;
    for (unsigned i = 0; i <= n; ++i) {
        Integer den = falling_factorial(2L * n - 2, i);
        for (unsigned j = 0; j <= i; ++j) {
            Polynomial det = det2(scaled_coeff(sa, falling_factorial(n, j), j, n),
                                  scaled_coeff(sb, falling_factorial(n, i - j), i - j, n),
                                  scaled_coeff(sa, falling_factorial(n - 1L, j), j + 1, n),
                                  scaled_coeff(sb, falling_factorial(n - 1L, i - j), i - j + 1, n));
            Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
            Polynomial num = Polynomial(sign * Rational(binomial_coefficient(n, i) *
                                                        binomial_coefficient(i, j))) *
                             cvar(sa, n - i) * det;
            accumulate_term(acc, std::move(num), den);
        }
    }
    return acc;
}

// The stated double sum indexes the inner falling factorials with i and
// divides by [2n-2]_i.  The two repairs (derivative index j, denominator
// [2n-4]_i) are evaluated as labeled variants.
Polynomial trbar2_closed_form(unsigned n, Series sa, Series sb, bool denominator_2n_minus_4,
                              bool derivative_index_j) {
    Polynomial acc;
    for (unsigned i = 0; i <= n; ++i) {
        Integer den = falling_factorial(2L * n - (denominator_2n_minus_4 ? 4 : 2), i);
        for (unsigned j = 0; j <= i; ++j) {
            unsigned t = derivative_index_j ? j : i;
            Polynomial inner;
            {
                Integer f1 = falling_factorial(n, t) * falling_factorial(n - 2L, i - j);
                Integer f2 = falling_factorial(n - 1L, t) * falling_factorial(n - 1L, i - j);
                Integer f3 = falling_factorial(n - 2L, t) * falling_factorial(n, i - j);
                if (f1 != 0) inner += Polynomial(Rational(f1)) * cvar(sa, t) * cvar(sb, i - j + 2);
                if (f2 != 0) inner -= Polynomial(Rational(2 * f2)) * cvar(sa, t + 1) * cvar(sb, i - j + 1);
                if (f3 != 0) inner += Polynomial(Rational(f3)) * cvar(sa, t + 2) * cvar(sb, i - j);
            }
            Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
            Polynomial num = Polynomial(sign * Rational(binomial_coefficient(n, i) *
                                                        binomial_coefficient(i, j))) *
                             cvar(sa, n - i) * inner;
            accumulate_term(acc, std::move(num), den);
        }
    }
    return acc;
}

Polynomial tr3_closed_form(unsigned n, Series sa, Series sb, Series sc) {
    Polynomial acc;
    for (unsigned i = 0; i <= n; ++i) {
        Integer den = falling_factorial(2L * n - 2, i);
        for (unsigned j = 0; j <= i; ++j) {
            Integer factor = falling_factorial(n, j) * falling_factorial(n - 1L, i - j);
            if (factor == 0) continue;
            Polynomial det = det2(cvar(sb, j), cvar(sc, j), cvar(sb, i - j + 1), cvar(sc, i - j + 1));
            Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
            Polynomial num = Polynomial(sign * Rational(factor * binomial_coefficient(n, i) *
                                                        binomial_coefficient(i, j))) *
                             cvar(sa, n - i) * det;
            accumulate_term(acc, std::move(num), den);
        }
    }
    return acc;
}

Polynomial ch4_closed_form(unsigned n, Series sa, Series sb, Series sc, Series sd) {
    Polynomial acc;
    for (unsigned i = 0; i <= n; ++i) {
        Integer den = falling_factorial(3L * n - 6, i);
        for (unsigned i1 = 0; i1 <= i; ++i1)
            for (unsigned i2 = 0; i2 + i1 <= i; ++i2) {
                unsigned i3 = i - i1 - i2;
                PolyMatrix m(3, 3);
                const Series cols[3] = {sb, sc, sd};
                const unsigned shifts[3] = {i1, i2, i3};
                for (int col = 0; col < 3; ++col)
                    for (int row = 0; row < 3; ++row)
                        m.at(row, col) = scaled_coeff(cols[col], falling_factorial(n - row, shifts[col]),
                                                      shifts[col] + row, n);
                Polynomial det = determinant_cofactor(m);
                if (det.is_zero()) continue;
                Integer multi = factorial(i) / (factorial(i1) * factorial(i2) * factorial(i3));
                Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
                Polynomial num = Polynomial(sign * Rational(multi * binomial_coefficient(n, i))) *
                                 cvar(sa, n - i) * det;
                accumulate_term(acc, std::move(num), den);
            }
    }
    return acc;
}

}  // namespace

std::string first_difference(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial diff = lhs - rhs;
    if (diff.is_zero()) return "";
    const Monomial& m = diff.terms().begin()->first;
    Polynomial mono = Polynomial::term(Rational(1), m);
    return "monomial " + format_polynomial(mono) + ": " + to_string(lhs.coefficient(m)) + " vs " +
           to_string(rhs.coefficient(m));
}

Built dv(unsigned n, Series s1, Series s2) {
    require_order("dv", n, 1);
    FormContext ctx(n, std::set<Series>{s1, s2});
    Polynomial closed;
    for (unsigned i = 0; i <= n; ++i) {
        Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
        closed += Polynomial(sign * Rational(binomial_coefficient(n, i))) * cvar(s1, i) * cvar(s2, n - i);
    }
    SemiInvariant bracket = forms::semi_transvectant(seed(s1, ctx), seed(s2, ctx), n);
    Built b = finalize(s1 == s2 ? "dv" : "dv2", bracket, {s1, s2});
    attach_crosscheck(b, std::move(closed), seed(s1, ctx), seed(s2, ctx), n);
    return b;
}

Built w_poly(unsigned n, Series s) {
    require_order("w", n, 2);
    FormContext ctx(n, {s});
    Polynomial w;
    for (unsigned i = 1; i <= n; ++i) {
        Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
        w += Polynomial(sign * Rational(binomial_coefficient(n, i))) * cvar(s, n - i) *
             cvar(s, 1).pow(i);
    }
    // Shipped exactly as stated; the checker's verdict travels with the result.
    return finalize("w", n, {s}, std::move(w), ctx);
}

Built semi_hessian(unsigned n, Series s) {
    require_order("hess", n, 2);
    FormContext ctx(n, {s});
    Polynomial h = cvar(s, 0) * cvar(s, 2) - cvar(s, 1) * cvar(s, 1);
    return finalize("hess", n, {s}, std::move(h), ctx);
}

Built semi_jacobian(unsigned n, Series s1, Series s2) {
    require_order("jac", n, 1);
    FormContext ctx(n, std::set<Series>{s1, s2});
    SemiInvariant j = forms::semi_transvectant(seed(s1, ctx), seed(s2, ctx), 1);
    return finalize("jac", j, {s1, s2});
}

Built tr_single(unsigned n, Series s) {
    require_order("tr", n, 4);
    FormContext ctx(n, {s});
    SemiInvariant hess = SemiInvariant::certify(cvar(s, 0) * cvar(s, 2) - cvar(s, 1) * cvar(s, 1), ctx);
    SemiInvariant value = forms::semi_transvectant(seed(s, ctx), hess, n);
    Built b = finalize("tr", value, {s});
    attach_crosscheck(b, tr_closed_form(n, s), seed(s, ctx), hess, n);
    return b;
}

Built ch_single(unsigned n, Series s) {
    require_order("ch", n, 4);
    FormContext ctx(n, {s});
    SemiInvariant hess = SemiInvariant::certify(cvar(s, 0) * cvar(s, 2) - cvar(s, 1) * cvar(s, 1), ctx);
    SemiInvariant value = forms::semi_transvectant(hess, hess, n);
    Built b = finalize("ch", value, {s});
    attach_crosscheck(b, ch_closed_form(n, s), hess, hess, n);
    return b;
}

PolyMatrix discr_matrix(unsigned n, Series s) {
    // Rows 0..n-2: the form's coefficients C(n,i) s_i, shifted.  Rows
    // n-1..2n-2: the X-derivative's coefficients (n-i) C(n,i) s_i, shifted.
    PolyMatrix m(2 * n - 1, 2 * n - 1);
    for (unsigned r = 0; r + 1 < n; ++r)
        for (unsigned i = 0; i <= n; ++i)
            m.at(r, r + i) = Polynomial(Rational(binomial_coefficient(n, i))) * cvar(s, i);
    for (unsigned r = 0; r < n; ++r)
        for (unsigned i = 0; i < n; ++i)
            m.at(n - 1 + r, r + i) =
                Polynomial(Rational(Integer(n - i) * binomial_coefficient(n, i))) * cvar(s, i);
    return m;
}

Built discr(unsigned n, Series s) {
    require_order("discr", n, 2);
    FormContext ctx(n, {s});
    Polynomial raw = determinant(discr_matrix(n, s));
    // The determinant equals the classical discriminant only after dividing
    // out the leading coefficient and fixing the resultant sign.
    Polynomial normalized = exact_quotient(raw, cvar(s, 0));
    if ((n * (n - 1) / 2) % 2 == 1) normalized = -normalized;
    Built b = finalize("discr", n, {s}, std::move(normalized), ctx);
    b.raw_determinant = std::move(raw);
    return b;
}

PolyMatrix sres_matrix(unsigned n, Series s1, Series s2) {
    PolyMatrix m(2 * n, 2 * n);
    for (unsigned r = 0; r < n; ++r)
        for (unsigned i = 0; i <= n; ++i) {
            Polynomial entry = Polynomial(Rational(binomial_coefficient(n, i)));
            m.at(r, r + i) = entry * cvar(s1, i);
            m.at(n + r, r + i) = entry * cvar(s2, i);
        }
    return m;
}

Built sres(unsigned n, Series s1, Series s2) {
    require_order("sres", n, 1);
    FormContext ctx(n, std::set<Series>{s1, s2});
    // Two stacked shifted-coefficient blocks: expanding along the first block
    // keeps every minor inside one band, where elimination entries swell.
    Polynomial det = determinant_block_laplace(sres_matrix(n, s1, s2), n);
    return finalize("sres", n, {s1, s2}, std::move(det), ctx);
}

Built tr_joint2(unsigned n, Series s1, Series s2) {
    require_order("tr2", n, 2);
    FormContext ctx(n, std::set<Series>{s1, s2});
    SemiInvariant jac = forms::semi_transvectant(seed(s1, ctx), seed(s2, ctx), 1);
    SemiInvariant value = forms::semi_transvectant(seed(s1, ctx), jac, n);
    Built b = finalize("tr2", value, {s1, s2});
    attach_crosscheck(b, tr2_closed_form(n, s1, s2), seed(s1, ctx), jac, n);
    return b;
}

Built tr_bar_joint2(unsigned n, Series s1, Series s2) {
    require_order("trbar2", n, 4);
    FormContext ctx(n, std::set<Series>{s1, s2});
    SemiInvariant pair2 = forms::semi_transvectant(seed(s1, ctx), seed(s2, ctx), 2);
    SemiInvariant value = forms::semi_transvectant(seed(s1, ctx), pair2, n);
    Built b = finalize("trbar2", value, {s1, s2});
    attach_crosscheck(b, trbar2_closed_form(n, s1, s2, false, false), seed(s1, ctx), pair2, n);
    auto& cc = *b.crosscheck;
    for (auto [den4, idxj, label] :
         {std::tuple{true, false, "denominator-2n-4"}, std::tuple{false, true, "derivative-index-j"},
          std::tuple{true, true, "denominator-2n-4+derivative-index-j"}}) {
        Polynomial v = trbar2_closed_form(n, s1, s2, den4, idxj);
        cc.variants.push_back({label, v == cc.bracket, v == cc.bracket_reversed});
    }
    return b;
}

Built tr_joint3(unsigned n, Series s1, Series s2, Series s3) {
    require_order("tr3", n, 2);
    FormContext ctx(n, std::set<Series>{s1, s2, s3});
    SemiInvariant jac_bc = forms::semi_transvectant(seed(s2, ctx), seed(s3, ctx), 1);
    SemiInvariant value = forms::semi_transvectant(seed(s1, ctx), jac_bc, n);
    Built b = finalize("tr3", value, {s1, s2, s3});
    attach_crosscheck(b, tr3_closed_form(n, s1, s2, s3), seed(s1, ctx), jac_bc, n);
    return b;
}

Built delta3x3(unsigned n, Series s1, Series s2, Series s3) {
    require_order("delta3", n, 2);
    FormContext ctx(n, std::set<Series>{s1, s2, s3});
    PolyMatrix m(3, 3);
    const Series cols[3] = {s1, s2, s3};
    for (int col = 0; col < 3; ++col)
        for (int row = 0; row < 3; ++row) m.at(row, col) = cvar(cols[col], row);
    Built b = finalize("delta3", n, {s1, s2, s3}, determinant_cofactor(m), ctx);
    b.degenerate = (s1 == s2 || s1 == s3 || s2 == s3);
    return b;
}

Built ch_joint4(unsigned n, Series s1, Series s2, Series s3, Series s4) {
    require_order("ch4", n, 3);
    FormContext ctx(n, std::set<Series>{s1, s2, s3, s4});
    PolyMatrix m(3, 3);
    const Series cols[3] = {s2, s3, s4};
    for (int col = 0; col < 3; ++col)
        for (int row = 0; row < 3; ++row) m.at(row, col) = cvar(cols[col], row);
    SemiInvariant delta = SemiInvariant::certify(determinant_cofactor(m), ctx);
    SemiInvariant a0 = seed(s1, ctx);
    // The expanded closed form (the one consuming all four series) is the
    // normative value; it pairs s1_(n-i) with the i-th raise of delta.
    SemiInvariant value = forms::semi_transvectant(delta, a0, n);
    Built b = finalize("ch4", value, {s1, s2, s3, s4});
    attach_crosscheck(b, ch4_closed_form(n, s1, s2, s3, s4), a0, delta, n);
    return b;
}

Built ch_joint4_alt(unsigned n) {
    require_order("ch4", n, 3);
    FormContext ctx(n, {Series::a, Series::b, Series::c, Series::d});
    PolyMatrix m(3, 3);
    const Series cols[3] = {Series::b, Series::c, Series::d};
    for (int col = 0; col < 3; ++col)
        for (int row = 0; row < 3; ++row) m.at(row, col) = cvar(cols[col], row);
    SemiInvariant delta = SemiInvariant::certify(determinant_cofactor(m), ctx);
    SemiInvariant value = forms::semi_transvectant(seed(Series::d, ctx), delta, n);
    return finalize("ch4-alt", value, {Series::b, Series::c, Series::d});
}

namespace {

std::vector<Series> expect_series(const ConstructionInfo& info,
                                  const std::optional<std::vector<Series>>& series) {
    if (!series) return info.default_series;
    if (series->size() != info.arity)
        throw DomainError(info.id + " consumes " + std::to_string(info.arity) + " series, got " +
                          std::to_string(series->size()));
    return *series;
}

const std::vector<ConstructionInfo>& registry() {
    static const std::vector<ConstructionInfo> table = [] {
        using S = std::vector<Series>;
        std::vector<ConstructionInfo> t;
        auto add = [&t](std::string id, std::string summary, unsigned arity, unsigned min_order,
                        S default_series, bool expect_si,
                        std::function<Built(unsigned, const std::vector<Series>&)> fn) {
            t.push_back({std::move(id), std::move(summary), arity, min_order,
                         std::move(default_series), expect_si, std::move(fn)});
        };
        add("dv", "degree-2 alternating pairing of one series with itself", 2, 1, S{Series::a, Series::a},
            true, [](unsigned n, const S& s) { return dv(n, s[0], s[1]); });
        add("dv2", "degree-2 alternating pairing of two series", 2, 1, S{Series::a, Series::b}, true,
            [](unsigned n, const S& s) { return dv(n, s[0], s[1]); });
        add("w", "degree-2 sum over powers of the second coefficient, as stated", 1, 2, S{Series::a},
            false, [](unsigned n, const S& s) { return w_poly(n, s[0]); });
        add("hess", "semi-hessian s0 s2 - s1^2", 1, 2, S{Series::a}, true,
            [](unsigned n, const S& s) { return semi_hessian(n, s[0]); });
        add("jac", "semi-jacobian of two leading coefficients", 2, 1, S{Series::a, Series::b}, true,
            [](unsigned n, const S& s) { return semi_jacobian(n, s[0], s[1]); });
        add("tr", "degree-3 bracket of a0 with its semi-hessian", 1, 4, S{Series::a}, true,
            [](unsigned n, const S& s) { return tr_single(n, s[0]); });
        add("ch", "degree-4 bracket of the semi-hessian with itself", 1, 4, S{Series::a}, true,
            [](unsigned n, const S& s) { return ch_single(n, s[0]); });
        add("discr", "discriminant via the Sylvester matrix, classically normalized", 1, 2, S{Series::a},
            true, [](unsigned n, const S& s) { return discr(n, s[0]); });
        add("sres", "resultant of two forms via the coefficient-row determinant", 2, 1,
            S{Series::a, Series::b}, true, [](unsigned n, const S& s) { return sres(n, s[0], s[1]); });
        add("tr2", "degree-3 joint bracket [s0, [s0,t0]^1]^n", 2, 2, S{Series::a, Series::b}, true,
            [](unsigned n, const S& s) { return tr_joint2(n, s[0], s[1]); });
        add("trbar2", "degree-3 joint bracket [s0, [s0,t0]^2]^n", 2, 4, S{Series::a, Series::b}, true,
            [](unsigned n, const S& s) { return tr_bar_joint2(n, s[0], s[1]); });
        add("tr3", "three-series bracket [s0, [t0,u0]^1]^n", 3, 2, S{Series::a, Series::b, Series::c},
            true, [](unsigned n, const S& s) { return tr_joint3(n, s[0], s[1], s[2]); });
        add("delta3", "3x3 determinant of the first three coefficients of three series", 3, 2,
            S{Series::b, Series::c, Series::d}, true,
            [](unsigned n, const S& s) { return delta3x3(n, s[0], s[1], s[2]); });
        add("ch4", "four-series bracket against the 3x3 determinant", 4, 3,
            S{Series::a, Series::b, Series::c, Series::d}, true,
            [](unsigned n, const S& s) { return ch_joint4(n, s[0], s[1], s[2], s[3]); });
        return t;
    }();
    return table;
}

}  // namespace

const std::vector<ConstructionInfo>& constructions() { return registry(); }

const ConstructionInfo* find_construction(std::string_view id) {
    for (const auto& info : registry())
        if (info.id == id) return &info;
    return nullptr;
}

Built build_construction(std::string_view id, unsigned n,
                         const std::optional<std::vector<Series>>& series) {
    const ConstructionInfo* info = find_construction(id);
    if (!info) throw DomainError("unknown construction '" + std::string(id) + "'");
    Built b = info->build(n, expect_series(*info, series));
    b.construction = info->id;
    return b;
}

}  // namespace binform::catalog
