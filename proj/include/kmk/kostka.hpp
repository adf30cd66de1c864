#pragma once

#include <map>
#include <vector>

#include "kmk/cartan.hpp"
#include "kmk/kostant.hpp"
#include "kmk/poly.hpp"
#include "kmk/report.hpp"

namespace kmk {

/* Kostka-Foulkes polynomials K_{lambda,mu}(t) for all dominant mu with
 * lambda - mu in the depth cone, keyed by the offset lambda - mu in
 * simple-root coordinates. */
struct KostkaTable {
    Weight lambda;
    long long depth = 0;
    std::map<std::vector<long long>, Poly> entries;
};

/* One irreducible constituent of a tensor product. */
struct TensorComponent {
    Weight highest_weight;
    long long multiplicity = 0;
};

// Lusztig's t-analog of weight multiplicity, the alternating sum of
// K_t(w(lambda+rho) - (mu+rho)) over the orbit points that stay above mu+rho.
Poly lusztig(const CartanDatum& d, const Weight& lambda, const Weight& mu, const RootSlice& slice);
Poly lusztig(const CartanDatum& d, const Weight& lambda, const Weight& mu,
             const PartitionTable& table);

KostkaTable kostka_table(const CartanDatum& d, const Weight& lambda, long long depth,
                         const RootSlice& slice);

// Weight multiplicities dim L(lambda)_{lambda-beta} for every beta in the
// depth cone, by the Freudenthal recursion run at dominant points and spread
// over orbits. The independent t=1 oracle for the Lusztig route.
std::map<std::vector<long long>, long long> freudenthal_cone(const CartanDatum& d,
                                                             const Weight& lambda, long long depth);

long long freudenthal_multiplicity(const CartanDatum& d, const Weight& lambda, const Weight& mu,
                                   long long depth);

// Finite type: decompose L(a) (x) L(b) by iterated highest-weight peeling of
// the product character. Exact; multiplicities are asserted nonnegative.
std::vector<TensorComponent> tensor_decompose(const CartanDatum& d, const Weight& a,
                                              const Weight& b);

// K_{V,gamma}(t) = sum over constituents of mult * K_{pi,gamma}(t).
Poly classical_kostka_for_module(const CartanDatum& d, const std::vector<TensorComponent>& decomp,
                                 const Weight& gamma);

/* Checks K_{lambda,lambda-delta}(t) = t * K_{V,lambda_bar}(t) with
 * V = g_fin (x) L(lambda_bar), for an affine datum and a node p with mark 1
 * and <lambda, alpha_p^vee> >= 1 (default p = 0). The report carries both
 * sides; nonnegativity of the left side is recorded as well. */
Report verify_prop61(const CartanDatum& d, const Weight& lambda, int node = 0);

} // namespace kmk
