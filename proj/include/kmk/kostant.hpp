#pragma once

#include <map>
#include <vector>

#include "kmk/cartan.hpp"
#include "kmk/poly.hpp"

namespace kmk {

/* Table of the t-analog K_t of the generalized Kostant partition function on
 * the Q+ slice of height <= depth: K_t(gamma) is the coefficient of
 * e^{-gamma} in prod_alpha (1 - t e^{-alpha})^{-m_alpha}. Built once by a
 * per-root convolution pass; immutable afterwards. */
class PartitionTable {
public:
    PartitionTable(const CartanDatum& d, long long depth, const RootSlice& slice);

    long long depth() const { return depth_; }

    // K_t(gamma); zero polynomial when gamma is not in Q+.
    const Poly& at(const RootVector& gamma) const;

private:
    long long depth_;
    std::map<std::vector<long long>, Poly> k_;
    Poly zero_;
};

// Single value K_t(gamma) over the given slice. Throws HeightBoundExceeded
// when ht(gamma) exceeds the slice bound.
Poly t_partition(const CartanDatum& d, const RootVector& gamma, const RootSlice& slice);

// Batched table for all gamma with ht <= depth (depth must not exceed the
// slice bound).
PartitionTable t_partition_table(const CartanDatum& d, long long depth, const RootSlice& slice);

} // namespace kmk
