#include "binform/forms.hpp"

#include <functional>

#include "binform/errors.hpp"
#include "binform/poly_io.hpp"

namespace binform::forms {

namespace {

void require_plain(const Polynomial& p) {
    if (p.has_kind(Variable::Kind::covariant_x) || p.has_kind(Variable::Kind::covariant_y))
        throw ContextError("operation is defined for polynomials without covariant variables");
}

// Extends a rule on single variables to a derivation via the Leibniz rule.
// The rule returns the image of one variable (zero polynomial when the
// variable is annihilated).
Polynomial apply_derivation(const Polynomial& p, const std::function<Polynomial(const Variable&)>& rule) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [v, e] : m.factors()) {
            Polynomial image = rule(v);
            if (image.is_zero()) continue;
            out += Polynomial::term(c * Rational(static_cast<long>(e)), m.lowered(v)) * image;
        }
    }
    return out;
}

Polynomial rule_D(const Variable& v, const FormContext& ctx) {
    ctx.require_legal(v);
    if (!v.is_coefficient() || v.index() == 0) return Polynomial();
    return Polynomial::term(Rational(static_cast<long>(v.index())),
                            Monomial::of(Variable::coefficient(v.series(), v.index() - 1)));
}

Polynomial rule_Dstar(const Variable& v, const FormContext& ctx) {
    ctx.require_legal(v);
    if (!v.is_coefficient() || v.index() >= ctx.order()) return Polynomial();
    long factor = static_cast<long>(ctx.order()) - static_cast<long>(v.index());
    return Polynomial::term(Rational(factor),
                            Monomial::of(Variable::coefficient(v.series(), v.index() + 1)));
}

long e_eigen(const Variable& v, unsigned order) {
    return static_cast<long>(order) - 2 * static_cast<long>(v.index());
}

}  // namespace

Polynomial derive_D(const Polynomial& p, const FormContext& ctx) {
    require_plain(p);
    return apply_derivation(p, [&ctx](const Variable& v) { return rule_D(v, ctx); });
}

Polynomial derive_Dstar(const Polynomial& p, const FormContext& ctx) {
    require_plain(p);
    return apply_derivation(p, [&ctx](const Variable& v) { return rule_Dstar(v, ctx); });
}

Polynomial derive_E(const Polynomial& p, const FormContext& ctx) {
    require_plain(p);
    return apply_derivation(p, [&ctx](const Variable& v) -> Polynomial {
        ctx.require_legal(v);
        if (!v.is_coefficient()) return Polynomial();
        return Polynomial::term(Rational(e_eigen(v, ctx.order())), Monomial::of(v));
    });
}

Polynomial derive_D_twisted(const Polynomial& p, const FormContext& ctx) {
    Polynomial core = apply_derivation(p, [&ctx](const Variable& v) -> Polynomial {
        if (v.is_covariant()) return Polynomial();
        return rule_D(v, ctx);
    });
    return core - Polynomial::variable(Variable::Y()) * p.derivative(Variable::X());
}

Polynomial derive_Dstar_twisted(const Polynomial& p, const FormContext& ctx) {
    Polynomial core = apply_derivation(p, [&ctx](const Variable& v) -> Polynomial {
        if (v.is_covariant()) return Polynomial();
        return rule_Dstar(v, ctx);
    });
    return core - Polynomial::variable(Variable::X()) * p.derivative(Variable::Y());
}

std::optional<long> weight(const Polynomial& p, const FormContext& ctx) {
    require_plain(p);
    if (p.is_zero()) return std::nullopt;
    std::optional<long> w;
    for (const auto& [m, c] : p.terms()) {
        long mono_weight = 0;
        for (const auto& [v, e] : m.factors()) {
            ctx.require_legal(v);
            if (v.is_coefficient()) mono_weight += static_cast<long>(e) * e_eigen(v, ctx.order());
        }
        if (!w) {
            w = mono_weight;
        } else if (*w != mono_weight) {
            return std::nullopt;
        }
    }
    return w;
}

bool is_isobaric(const Polynomial& p, const FormContext& ctx) {
    return !p.is_zero() && weight(p, ctx).has_value();
}

std::optional<long> weight_by_index_count(const Polynomial& p, const FormContext& ctx) {
    require_plain(p);
    if (p.is_zero()) return std::nullopt;
    std::optional<long> w;
    for (const auto& [m, c] : p.terms()) {
        long deg = 0, positive = 0;
        for (const auto& [v, e] : m.factors()) {
            if (!v.is_coefficient()) continue;
            deg += static_cast<long>(e);
            if (v.index() >= 1) positive += static_cast<long>(e);
        }
        long mono = static_cast<long>(ctx.order()) * deg - 2 * positive;
        if (!w) {
            w = mono;
        } else if (*w != mono) {
            return std::nullopt;
        }
    }
    return w;
}

std::optional<unsigned> homogeneous_degree(const Polynomial& p) {
    if (p.is_zero()) return 0;
    std::optional<unsigned> deg;
    for (const auto& [m, c] : p.terms()) {
        unsigned d = 0;
        for (const auto& [v, e] : m.factors())
            if (v.is_coefficient()) d += e;
        if (!deg) {
            deg = d;
        } else if (*deg != d) {
            return std::nullopt;
        }
    }
    return deg;
}

bool is_semi_invariant(const Polynomial& p, const FormContext& ctx) {
    return derive_D(p, ctx).is_zero();
}

bool is_invariant(const Polynomial& p, const FormContext& ctx) {
    return derive_D(p, ctx).is_zero() && derive_Dstar(p, ctx).is_zero();
}

bool is_covariant(const Polynomial& p, const FormContext& ctx) {
    return derive_D_twisted(p, ctx).is_zero() && derive_Dstar_twisted(p, ctx).is_zero();
}

unsigned ord_by_iteration(const Polynomial& p, const FormContext& ctx) {
    if (p.is_zero()) return 0;
    if (!is_semi_invariant(p, ctx))
        throw CertificationError("ord is defined for semi-invariants only");
    unsigned k = 0;
    Polynomial q = p;
    // Raising the index drains out at n * degree applications.
    const unsigned cap = ctx.order() * (p.total_degree() + 1) + 1;
    while (true) {
        Polynomial next = derive_Dstar(q, ctx);
        if (next.is_zero()) return k;
        q = std::move(next);
        if (++k > cap) throw InternalError("ord iteration failed to terminate");
    }
}

SemiInvariant SemiInvariant::certify(Polynomial poly, FormContext ctx) {
    ctx.require_legal(poly);
    SemiInvariant s(std::move(poly), std::move(ctx));
    if (s.poly_.is_zero()) return s;
    Polynomial d = derive_D(s.poly_, s.ctx_);
    if (!d.is_zero())
        throw CertificationError("not a semi-invariant; D image = " + format_polynomial(d));
    auto deg = homogeneous_degree(s.poly_);
    if (!deg) throw CertificationError("semi-invariant is not homogeneous");
    auto w = binform::forms::weight(s.poly_, s.ctx_);
    if (!w) throw CertificationError("semi-invariant is not isobaric");
    if (*w < 0) throw CertificationError("homogeneous isobaric semi-invariant with negative weight");
    s.degree_ = *deg;
    s.weight_ = *w;
    s.ord_ = static_cast<unsigned>(*w);  // ord = weight for homogeneous isobaric semi-invariants
    s.proper_ = false;
    for (Series ser : s.ctx_.active_series()) {
        Variable last = Variable::coefficient(ser, s.ctx_.order());
        if (!s.poly_.derivative(last).is_zero()) {
            s.proper_ = true;
            break;
        }
    }
    return s;
}

Polynomial kappa(const Polynomial& covariant, const FormContext& ctx) {
    ctx.require_legal(covariant);
    if (covariant.is_zero()) return covariant;
    std::optional<unsigned> order;
    for (const auto& [m, c] : covariant.terms()) {
        unsigned d = m.exponent_of(Variable::X()) + m.exponent_of(Variable::Y());
        if (!order) {
            order = d;
        } else if (*order != d) {
            throw ShapeError("kappa requires a covariant homogeneous in X, Y");
        }
    }
    Polynomial lead;
    for (const auto& [m, c] : covariant.terms())
        if (m.exponent_of(Variable::X()) == *order)
            lead += Polynomial::term(c, *m.divided_by(Monomial::of(Variable::X(), *order)));
    return lead;
}

Polynomial kappa_inv(const SemiInvariant& s) {
    Polynomial out;
    Polynomial d = s.poly();
    for (unsigned i = 0; i <= s.ord(); ++i) {
        Monomial xy = Monomial::of(Variable::X(), s.ord() - i) * Monomial::of(Variable::Y(), i);
        out += d * Polynomial(make_rational(1, factorial(i))) * Polynomial::term(Rational(1), xy);
        if (i < s.ord()) d = derive_Dstar(d, s.context());
    }
    return out;
}

Polynomial transvectant(const Polynomial& f, const Polynomial& g, unsigned r, const FormContext& ctx) {
    auto xy_order = [](const Polynomial& p) -> unsigned {
        std::optional<unsigned> order;
        for (const auto& [m, c] : p.terms()) {
            unsigned d = m.exponent_of(Variable::X()) + m.exponent_of(Variable::Y());
            if (!order) {
                order = d;
            } else if (*order != d) {
                throw ShapeError("transvectant arguments must be homogeneous in X, Y");
            }
        }
        return order.value_or(0);
    };
    if (r > xy_order(f) || r > xy_order(g))
        throw RangeError("transvectant index exceeds an argument's order");
    auto partials = [r](const Polynomial& p) {
        // partials[i] = d^r p / dX^(r-i) dY^i
        std::vector<Polynomial> out;
        Polynomial base = p;
        for (unsigned k = 0; k < r; ++k) base = base.derivative(Variable::X());
        out.push_back(base);
        for (unsigned i = 1; i <= r; ++i) {
            base = p;
            for (unsigned k = 0; k < r - i; ++k) base = base.derivative(Variable::X());
            for (unsigned k = 0; k < i; ++k) base = base.derivative(Variable::Y());
            out.push_back(base);
        }
        return out;
    };
    std::vector<Polynomial> df = partials(f);
    std::vector<Polynomial> dg = partials(g);
    Polynomial acc;
    for (unsigned i = 0; i <= r; ++i) {
        Polynomial term = df[i] * dg[r - i] * Polynomial(Rational(binomial_coefficient(r, i)));
        if (i % 2 == 1) term = -term;
        acc += term;
    }
    (void)ctx;
    return acc;
}

SemiInvariant semi_transvectant(const SemiInvariant& p, const SemiInvariant& q, unsigned r) {
    if (p.context() != q.context())
        throw ContextError("semi-transvectant arguments must share a context");
    if (r > p.ord() || r > q.ord())
        throw RangeError("semi-transvectant index " + std::to_string(r) + " exceeds ord (" +
                         std::to_string(p.ord()) + ", " + std::to_string(q.ord()) + ")");
    std::vector<Polynomial> dp{p.poly()}, dq{q.poly()};
    for (unsigned i = 0; i < r; ++i) {
        dp.push_back(derive_Dstar(dp.back(), p.context()));
        dq.push_back(derive_Dstar(dq.back(), q.context()));
    }
    Polynomial acc;
    for (unsigned i = 0; i <= r; ++i) {
        Integer den = falling_factorial(p.ord(), i) * falling_factorial(q.ord(), r - i);
        Rational coeff = make_rational(binomial_coefficient(r, i), den);
        if (i % 2 == 1) coeff = -coeff;
        acc += dp[i] * dq[r - i] * Polynomial(coeff);
    }
    return SemiInvariant::certify(std::move(acc), p.context());
}

Polynomial generic_form(const FormContext& ctx, Series s) {
    if (!ctx.is_active(s)) throw ContextError("series is not active in this context");
    Polynomial out;
    const unsigned n = ctx.order();
    for (unsigned i = 0; i <= n; ++i) {
        Monomial m = Monomial::of(Variable::coefficient(s, i)) * Monomial::of(Variable::X(), n - i) *
                     Monomial::of(Variable::Y(), i);
        out += Polynomial::term(Rational(binomial_coefficient(n, i)), m);
    }
    return out;
}

}  // namespace binform::forms
