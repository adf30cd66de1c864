#pragma once

#include <vector>

#include "kmk/cartan.hpp"
#include "kmk/poly.hpp"

namespace kmk {

/* Orbit point of a Weyl-group orbit: the weight w(start) together with
 * (-1)^len(w) and len(w); the length is meaningful when the orbit start is
 * regular dominant, which makes the orbit free. */
struct OrbitPoint {
    Weight weight;
    int parity = 1;
    long long length = 0;
};

struct DominantResult {
    Weight dominant;
    // (-1)^steps, or 0 when the dominant representative has a nontrivial
    // stabilizer (some label vanishes), matching the alternating-sum use.
    int sign = 1;
    bool finite_stabilizer = true;
    long long steps = 0;
};

Weight reflect(const CartanDatum& d, int i, const Weight& w);
RootVector reflect(const CartanDatum& d, int i, const RootVector& r);

// Normalizes a weight into the dominant chamber by simple reflections.
// step_cap = 0 chooses a generous bound from the label sizes; exceeding the
// bound throws NotInTitsCone.
DominantResult to_dominant(const CartanDatum& d, const Weight& w, long long step_cap = 0);

// Poincare polynomial of the stabilizer of a dominant weight (the parabolic
// generated by the reflections fixing it). Throws InfiniteStabilizer when
// that parabolic is infinite (affine weights proportional to delta).
Poly stabilizer_poincare(const CartanDatum& d, const Weight& lambda);

// All orbit points v of `top` with v - floor in Q+, with parity and length.
// `top` must be regular dominant; the BFS applies a reflection only on strict
// descent and prunes as soon as a simple-root coordinate of v - floor goes
// negative (descent can never bring it back).
std::vector<OrbitPoint> orbit_interval(const CartanDatum& d, const Weight& top, const Weight& floor);

} // namespace kmk
