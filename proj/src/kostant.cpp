#include "kmk/kostant.hpp"

#include "kmk/errors.hpp"
#include "kmk/series.hpp"

namespace kmk {

namespace {

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

PartitionTable::PartitionTable(const CartanDatum& d, long long depth, const RootSlice& slice)
    : depth_(depth) {
    if (depth > slice.height_bound)
        throw HeightBoundExceeded("partition table depth exceeds the root slice");
    auto cone = cone_points(d.rank(), depth);
    k_[std::vector<long long>(static_cast<size_t>(d.rank()), 0)] = Poly::one();

    // Real roots contribute a geometric factor: ascending by height,
    // new[beta] = old[beta] + t * new[beta - alpha] accumulates all powers.
    for (const auto& alpha : slice.real_roots) {
        if (alpha.height() > depth) continue;
        for (const auto& beta : cone) {
            bool fits = true;
            std::vector<long long> rest(beta.c.size());
            for (size_t i = 0; i < beta.c.size(); ++i) {
                rest[i] = beta.c[i] - alpha.c[i];
                if (rest[i] < 0) fits = false;
            }
            if (!fits) continue;
            auto it = k_.find(rest);
            if (it == k_.end()) continue;
            Poly add = it->second.shifted(1);
            auto [dst, inserted] = k_.try_emplace(beta.c, add);
            if (!inserted) dst->second += add;
        }
    }

    // Imaginary roots k*delta with multiplicity m contribute
    // (1 - t e^{-kdelta})^{-m}; the j-fold part carries binom(j+m-1, m-1) t^j.
    for (const auto& alpha : slice.imaginary_roots) {
        if (alpha.height() > depth) continue;
        long long m = slice.imaginary_multiplicity;
        auto old = k_;
        for (const auto& beta : cone) {
            Poly acc;
            for (long long j = 1;; ++j) {
                std::vector<long long> rest(beta.c.size());
                bool fits = true;
                for (size_t i = 0; i < beta.c.size(); ++i) {
                    rest[i] = beta.c[i] - j * alpha.c[i];
                    if (rest[i] < 0) fits = false;
                }
                if (!fits) break;
                auto it = old.find(rest);
                if (it != old.end())
                    acc += binom(j + m - 1, m - 1) * it->second.shifted(static_cast<int>(j));
            }
            if (acc.is_zero()) continue;
            auto [dst, inserted] = k_.try_emplace(beta.c, acc);
            if (!inserted) dst->second += acc;
        }
    }
}

const Poly& PartitionTable::at(const RootVector& gamma) const {
    if (!gamma.nonnegative()) return zero_;
    if (gamma.height() > depth_) throw HeightBoundExceeded("K_t lookup beyond table depth");
    auto it = k_.find(gamma.c);
    return it == k_.end() ? zero_ : it->second;
}

Poly t_partition(const CartanDatum& d, const RootVector& gamma, const RootSlice& slice) {
    if (!gamma.nonnegative()) return Poly();
    if (gamma.height() > slice.height_bound)
        throw HeightBoundExceeded("ht(gamma) exceeds the root slice");
    return PartitionTable(d, gamma.height(), slice).at(gamma);
}

PartitionTable t_partition_table(const CartanDatum& d, long long depth, const RootSlice& slice) {
    return PartitionTable(d, depth, slice);
}

} // namespace kmk
