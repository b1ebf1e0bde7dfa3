#pragma once

#include <optional>

#include "binform/context.hpp"
#include "binform/polynomial.hpp"

namespace binform::forms {

// The lowering / raising / weight derivations on coefficient variables:
// D(s_i) = i s_{i-1},  D*(s_i) = (n-i) s_{i+1},  E(s_i) = (n-2i) s_i,
// acting diagonally across all active series.  The plain variants reject
// covariant variables X, Y.
Polynomial derive_D(const Polynomial& p, const FormContext& ctx);
Polynomial derive_Dstar(const Polynomial& p, const FormContext& ctx);
Polynomial derive_E(const Polynomial& p, const FormContext& ctx);

// Twisted derivations D - Y d/dX and D* - X d/dY on K[coeffs, X, Y].
Polynomial derive_D_twisted(const Polynomial& p, const FormContext& ctx);
Polynomial derive_Dstar_twisted(const Polynomial& p, const FormContext& ctx);

// E-eigenvalue when p is isobaric (all monomials share sum k_i (n - 2 i)).
std::optional<long> weight(const Polynomial& p, const FormContext& ctx);
bool is_isobaric(const Polynomial& p, const FormContext& ctx);

// Alternate per-monomial weight reading n*deg - 2*(count of indices >= 1);
// kept for diagnostics, the E-eigenvalue above is normative.
std::optional<long> weight_by_index_count(const Polynomial& p, const FormContext& ctx);

// Total degree in coefficient variables when homogeneous.
std::optional<unsigned> homogeneous_degree(const Polynomial& p);

bool is_semi_invariant(const Polynomial& p, const FormContext& ctx);
bool is_invariant(const Polynomial& p, const FormContext& ctx);
bool is_covariant(const Polynomial& p, const FormContext& ctx);

// max { k : (D*)^k(p) != 0 } by direct iteration; the definitional route,
// used as a cross-check of the weight shortcut.
unsigned ord_by_iteration(const Polynomial& p, const FormContext& ctx);

// A certified semi-invariant: D-kernel membership, homogeneity and
// isobaricity are verified on construction, never assumed.
class SemiInvariant {
public:
    static SemiInvariant certify(Polynomial poly, FormContext ctx);

    const Polynomial& poly() const { return poly_; }
    const FormContext& context() const { return ctx_; }
    unsigned degree() const { return degree_; }
    long weight() const { return weight_; }
    unsigned ord() const { return ord_; }
    bool proper() const { return proper_; }
    bool is_zero() const { return poly_.is_zero(); }

private:
    SemiInvariant(Polynomial poly, FormContext ctx) : poly_(std::move(poly)), ctx_(std::move(ctx)) {}
    Polynomial poly_;
    FormContext ctx_;
    unsigned degree_ = 0;
    long weight_ = 0;
    unsigned ord_ = 0;
    bool proper_ = false;
};

// Leading coefficient of a covariant homogeneous in X, Y (the coefficient of
// the highest X power), and its inverse.
Polynomial kappa(const Polynomial& covariant, const FormContext& ctx);
Polynomial kappa_inv(const SemiInvariant& s);

// (f,g)^r as the alternating sum of mixed X,Y partials; f, g must be
// homogeneous in X, Y of orders >= r.
Polynomial transvectant(const Polynomial& f, const Polynomial& g, unsigned r, const FormContext& ctx);

// [p,q]^r by the falling-factorial formula
//   sum_i (-1)^i C(r,i) (D*)^i(p)/[ord p]_i (D*)^(r-i)(q)/[ord q]_(r-i).
// Requires r <= min(ord p, ord q); the result is certified.
SemiInvariant semi_transvectant(const SemiInvariant& p, const SemiInvariant& q, unsigned r);

// sum_i C(n,i) s_i X^(n-i) Y^i.
Polynomial generic_form(const FormContext& ctx, Series s);

}  // namespace binform::forms
