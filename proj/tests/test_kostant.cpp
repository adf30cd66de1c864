#include <doctest.h>

#include <functional>
#include <map>

#include "kmk/errors.hpp"
#include "kmk/kostant.hpp"
#include "kmk/series.hpp"

using namespace kmk;

namespace {

// Independent oracle: count root multisets summing to gamma by explicit
// enumeration, weighting each multiset by t^{#parts}. Real roots may repeat
// freely; a root of multiplicity m counts as m distinguishable colors, so a
// part used j times in one color block contributes binom(j+m-1, j) ways --
// enumerated here directly by recursing over colors.
Poly brute_force_kt(const CartanDatum& d, const RootVector& gamma, const RootSlice& slice) {
    std::vector<std::pair<RootVector, long long>> roots;
    slice.for_each([&](const RootVector& r, long long m) { roots.emplace_back(r, m); });
    Poly total;
    std::function<void(size_t, RootVector, int)> rec = [&](size_t idx, RootVector rest, int parts) {
        if (rest.is_zero()) {
            // still allowed to stop early; remaining roots contribute nothing
        }
        if (idx == roots.size()) {
            if (rest.is_zero()) total += Poly::monomial(1, parts);
            return;
        }
        const auto& [alpha, mult] = roots[idx];
        // choose how many copies of alpha from each of its `mult` colors
        std::function<void(long long, RootVector, int)> colors = [&](long long color, RootVector r,
                                                                     int p) {
            if (color == mult) {
                rec(idx + 1, r, p);
                return;
            }
            for (long long k = 0;; ++k) {
                RootVector next = r - k * alpha;
                if (!next.nonnegative()) break;
                colors(color + 1, next, p + static_cast<int>(k));
            }
        };
        colors(0, rest, parts);
    };
    rec(0, gamma, 0);
    return total;
}

} // namespace

TEST_CASE("t-partition basics") {
    CartanDatum a2 = CartanDatum::from_name("A2");
    RootSlice slice = a2.roots_up_to(4);
    CHECK(t_partition(a2, RootVector({0, 0}), slice) == Poly::one());
    CHECK(t_partition(a2, RootVector({1, 0}), slice) == Poly::t());
    CHECK(t_partition(a2, RootVector({0, 1}), slice) == Poly::t());
    // theta = alpha1 + alpha2: either theta itself or {alpha1, alpha2}
    CHECK(t_partition(a2, RootVector({1, 1}), slice) == Poly({0, 1, 1}));
    // negative coordinates: zero
    CHECK(t_partition(a2, RootVector({-1, 1}), slice).is_zero());
    CHECK_THROWS_AS(t_partition(a2, RootVector({3, 3}), slice), HeightBoundExceeded);
}

TEST_CASE("A1~ slice: K_t(delta) = t^2 + t") {
    CartanDatum d = CartanDatum::from_name("A1~");
    RootSlice slice = d.roots_up_to(2);
    CHECK(t_partition(d, d.delta_vector(), slice) == Poly({0, 1, 1}));
}

TEST_CASE("table at depth 0 and against pointwise values") {
    CartanDatum a2 = CartanDatum::from_name("A2");
    RootSlice slice = a2.roots_up_to(4);
    PartitionTable table = t_partition_table(a2, 0, slice);
    CHECK(table.at(RootVector({0, 0})) == Poly::one());

    PartitionTable t2 = t_partition_table(a2, 2, slice);
    CHECK(t2.at(RootVector({1, 1})) == Poly({0, 1, 1}));
    CHECK(t2.at(RootVector({2, 0})) == Poly({0, 0, 1}));
    CHECK(t2.at(RootVector({0, 2})) == Poly({0, 0, 1}));
}

TEST_CASE("brute-force oracle agreement on small slices") {
    for (const auto& name : {"A2", "B2", "A1~", "A2~"}) {
        CartanDatum d = CartanDatum::from_name(name);
        long long D = 4;
        RootSlice slice = d.roots_up_to(D);
        PartitionTable table = t_partition_table(d, D, slice);
        for (const auto& gamma : cone_points(d.rank(), D)) {
            Poly want = brute_force_kt(d, gamma, slice);
            CHECK(table.at(gamma) == want);
        }
    }
}

TEST_CASE("t=1 specialization equals the plain partition count") {
    CartanDatum d = CartanDatum::from_name("A1~");
    long long D = 4;
    RootSlice slice = d.roots_up_to(D);
    PartitionTable table = t_partition_table(d, D, slice);
    for (const auto& gamma : cone_points(d.rank(), D)) {
        Poly brute = brute_force_kt(d, gamma, slice);
        CHECK(table.at(gamma).evaluate_at(1) == brute.evaluate_at(1));
    }
}

TEST_CASE("degree bound and unit leading coefficient") {
    for (const auto& name : {"A2", "A1~"}) {
        CartanDatum d = CartanDatum::from_name(name);
        long long D = 5;
        RootSlice slice = d.roots_up_to(D);
        PartitionTable table = t_partition_table(d, D, slice);
        for (const auto& gamma : cone_points(d.rank(), D)) {
            const Poly& k = table.at(gamma);
            CHECK(k.degree() <= gamma.height());
            CHECK(k.coeff(static_cast<int>(gamma.height())) == 1); // unique all-simple multiset
            for (long long c : k.coeffs()) CHECK(c >= 0);
        }
    }
}

TEST_CASE("truncation coherence in depth and slice height") {
    CartanDatum d = CartanDatum::from_name("A2~");
    RootSlice deep = d.roots_up_to(6);
    RootSlice shallow = d.roots_up_to(3);
    PartitionTable big = t_partition_table(d, 6, deep);
    PartitionTable small = t_partition_table(d, 3, shallow);
    for (const auto& gamma : cone_points(d.rank(), 3)) CHECK(big.at(gamma) == small.at(gamma));
}

TEST_CASE("imaginary multiplicity: closed form equals repeated geometric convolution") {
    // A2~ has l = 2: each k*delta carries multiplicity 2. Check the table
    // against a slice where the imaginary root is applied as two separate
    // multiplicity-1 convolutions.
    CartanDatum d = CartanDatum::from_name("A2~");
    long long D = 6;
    RootSlice slice = d.roots_up_to(D);
    PartitionTable table = t_partition_table(d, D, slice);

    RootSlice split = slice;
    split.imaginary_multiplicity = 1;
    split.imaginary_roots.clear();
    for (const auto& r : slice.imaginary_roots) {
        split.real_roots.push_back(r); // one copy as a pseudo-real root
        split.imaginary_roots.push_back(r);
    }
    PartitionTable doubled = t_partition_table(d, D, split);
    for (const auto& gamma : cone_points(d.rank(), D)) CHECK(table.at(gamma) == doubled.at(gamma));
}
