#pragma once

#include <map>
#include <vector>

#include "kmk/cartan.hpp"
#include "kmk/kostka.hpp"
#include "kmk/poly.hpp"
#include "kmk/report.hpp"
#include "kmk/series.hpp"

namespace kmk {

/* Expansion coefficients c_{lambda,mu}(t) of the Hall-Littlewood function in
 * characters, keyed by the offset lambda - mu; the inverse of the Kostka
 * matrix on the depth cone. */
struct HLExpansion {
    Weight lambda;
    long long depth = 0;
    std::map<std::vector<long long>, Poly> c;
};

struct SpecializeResult {
    // c_{lambda,mu}(a), keyed by the offset lambda - mu.
    std::map<std::vector<long long>, long long> values;
    bool has_tensor_report = false;
    Report tensor_report;
};

// ch L(lambda) as a formal series anchored at lambda, complete to `depth`.
FormalSeries character(const CartanDatum& d, const Weight& lambda, long long depth);

// prod_alpha [(1 - e^{-alpha}) / (1 - t e^{-alpha})]^{m_alpha} over the slice.
FormalSeries delta_tilde(const CartanDatum& d, long long depth, const RootSlice& slice);

// The Hall-Littlewood function P_lambda(t), assembled as
// sum_mu c_{lambda,mu}(t) ch L(mu) from the inverted Kostka matrix.
FormalSeries hl_function(const CartanDatum& d, const Weight& lambda, long long depth,
                         const RootSlice& slice);

HLExpansion c_expansion(const CartanDatum& d, const Weight& lambda, long long depth,
                        const RootSlice& slice);

/* c_{lambda,mu}(t) by the signed multiset expansion: the sum over orbit
 * points y of mu+rho and admissible multisets A with |A| = lambda+rho-y of
 * (-1)^{len} (-t)^{#A}, where the parts of A satisfy (lambda, alpha) > 0,
 * real roots enter at most once and k*delta at most l times.
 *
 * With t_cap < 0 (finite type only) the result is the exact polynomial; for
 * affine data a nonnegative t_cap bounds the computed t-degree, and parts are
 * drawn from the given slice. */
Poly c_stembridge(const CartanDatum& d, const Weight& lambda, const Weight& mu,
                  const RootSlice& slice, int t_cap = -1);

// Checks that the coefficient of e^mu in delta_tilde * P_lambda is
// delta_{lambda,mu} for every dominant mu in the depth cone.
Report verify_dellm(const CartanDatum& d, const Weight& lambda, long long depth,
                    const RootSlice& slice);

// c_stembridge against the matrix-inversion route for every dominant mu in
// the depth cone (affine comparisons are truncated at t_cap).
Report verify_stembridge(const CartanDatum& d, const Weight& lambda, long long depth,
                         const RootSlice& slice, int t_cap = -1);

// Evaluates every c_{lambda,mu} at an integer a. For a = -1 on a finite
// datum, lambda must be regular dominant and the values are checked against
// the multiplicities of L(mu) in L(lambda-rho) (x) L(rho).
SpecializeResult specialize_hl(const CartanDatum& d, const Weight& lambda, long long a,
                               long long depth, const RootSlice& slice);

} // namespace kmk
