#pragma once

#include <vector>

#include "kmk/cartan.hpp"
#include "kmk/poly.hpp"
#include "kmk/report.hpp"
#include "kmk/series.hpp"

namespace kmk {

/* t-string function along the delta-string through mu: the coefficient of
 * q^k is K_{lambda, mu - k delta}(t). */
struct StringFunction {
    Weight lambda;
    Weight mu;
    int order = 0;
    QSeries series;
};

// Dominant mu <= lambda with mu + delta not <= lambda, found by walking the
// Q+ cone up to the given height bound. Deterministic cone-walk order.
std::vector<Weight> max_set(const CartanDatum& d, const Weight& lambda, long long height_bound);

// a^lambda_mu(t) = ct(e^{-mu} * delta_tilde * ch L(lambda)) to q-order N.
StringFunction t_string(const CartanDatum& d, const Weight& lambda, const Weight& mu, int order);

// The level-0 string a^0_0(t) = ct(delta_tilde).
QSeries level0_string(const CartanDatum& d, int order);

// prod_{k>=1} ((1-q^k)/(1-t q^k))^l, the pure-delta part of delta_tilde.
QSeries delta_tilde_im(const CartanDatum& d, int order);

// Constant-term product over the finite positive roots indexed by coroot
// heights j with counts p_j:
//   ct(mu_hat) = prod_j [ (t^j q;q)^2 / ((t^{j+1} q;q)(t^{j-1} q;q)) ]^{p_j}.
QSeries cherednik_ct_mu(const CartanDatum& d, int order);

// Macdonald-Mehta variant: ct(mu_hat * Theta) = prod_j [ (t^j q;q) / (t^{j+1} q;q) ]^{p_j}.
QSeries cherednik_ct_mu_theta(const CartanDatum& d, int order);

/* Theta series of the finite root lattice, as a formal series anchored at 0:
 * the term for alpha sits at offset (alpha,alpha)/2 * delta - alpha. Points
 * are enumerated up to (alpha,alpha)/2 <= norm_bound; the depth records the
 * exact offset height up to which the enumeration is complete. Requires all
 * (alpha,alpha)/2 within the bound to be integers (simply-laced lattices). */
FormalSeries theta_series(const CartanDatum& d, long long norm_bound);

// ct(delta_tilde) against the product route: the identity
// ct(delta_tilde) = delta_tilde_im * ct(mu_hat) with ct(mu_hat) given by the
// Cherednik product.
Report level0_check(const CartanDatum& d, int order);

/* Level-1 string identities at q-order N: the degree-product form of
 * a^{L0}_{L0}(t) / a^{L0}_{L0}(1), the simply-laced closed forms, the
 * constant-term route through delta_tilde_im * ct(mu_hat Theta), and the
 * q^1 coefficient sum-of-degrees identity. */
Report level1_check(const CartanDatum& d, int order);

/* Truncated Macdonald identity:
 *   W(t)^{-1} sum_w prod_{alpha in S(w)} (t-e^{-alpha})/(1-t e^{-alpha})
 *     = mu_hat / ct(mu_hat),
 * checked coefficientwise for t-degree <= t_cap and offset height <=
 * weight_depth. Elements with len(w) <= t_cap + weight_depth suffice: every
 * S(w)-factor term carries at least one t or one unit of height, so deeper
 * elements cannot reach the truncation window. W(t) is the length generating
 * function of the enumerated ball, inverted as a t-series. */
Report macdonald_identity_check(const CartanDatum& d, int t_cap, long long weight_depth,
                                long long length_slack = 0, long long ball_cap = 1u << 20);

// Truncated inverse of a polynomial viewed as a t-power series; the constant
// term must be +1 or -1.
Poly poly_inverse_series(const Poly& p, int cap);

} // namespace kmk
