#include "kmk/hall_littlewood.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "kmk/errors.hpp"
#include "kmk/weyl.hpp"

namespace kmk {

FormalSeries character(const CartanDatum& d, const Weight& lambda, long long depth) {
    FormalSeries f(lambda, depth);
    for (const auto& [key, m] : freudenthal_cone(d, lambda, depth))
        f.add_term(RootVector(key), Poly::constant(m));
    return f;
}

FormalSeries delta_tilde(const CartanDatum& d, long long depth, const RootSlice& slice) {
    if (depth > slice.height_bound)
        throw HeightBoundExceeded("delta_tilde depth exceeds the root slice");
    FormalSeries f = FormalSeries::unit(d.zero_weight(), depth);
    // Per root: (1-e^{-a})/(1-t e^{-a}) = 1 + sum_{k>=1} (t^k - t^{k-1}) e^{-ka},
    // applied m_alpha times.
    auto apply = [&](const RootVector& alpha, long long mult) {
        long long ha = alpha.height();
        if (ha > depth) return;
        FormalSeries factor(d.zero_weight(), depth);
        factor.add_term(RootVector(std::vector<long long>(alpha.c.size(), 0)), Poly::one());
        for (long long k = 1; k * ha <= depth; ++k)
            factor.add_term(k * alpha, Poly::monomial(1, static_cast<int>(k)) -
                                           Poly::monomial(1, static_cast<int>(k - 1)));
        for (long long i = 0; i < mult; ++i) f = f.mul(factor);
    };
    slice.for_each(apply);
    return f;
}

HLExpansion c_expansion(const CartanDatum& d, const Weight& lambda, long long depth,
                        const RootSlice& slice) {
    if (!d.is_dominant(lambda)) throw NotDominant("c_expansion: lambda not dominant");
    HLExpansion out;
    out.lambda = lambda;
    out.depth = depth;

    // Dominant weights of the cone, shallow to deep; the Kostka matrix is
    // unitriangular along this order.
    std::vector<RootVector> doms;
    for (const auto& beta : cone_points(d.rank(), depth))
        if (d.is_dominant(lambda - d.root_to_weight(beta))) doms.push_back(beta);

    PartitionTable table = t_partition_table(d, depth, slice);
    for (size_t j = 0; j < doms.size(); ++j) {
        if (doms[j].is_zero()) {
            out.c[doms[j].c] = Poly::one();
            continue;
        }
        Weight mu = lambda - d.root_to_weight(doms[j]);
        Poly acc;
        for (size_t i = 0; i < j; ++i) {
            auto it = out.c.find(doms[i].c);
            if (it == out.c.end() || it->second.is_zero()) continue;
            Weight nu = lambda - d.root_to_weight(doms[i]);
            Poly k = lusztig(d, nu, mu, table);
            if (!k.is_zero()) acc += it->second * k;
        }
        Poly cj = -acc;
        if (!cj.is_zero()) out.c[doms[j].c] = std::move(cj);
    }
    return out;
}

FormalSeries hl_function(const CartanDatum& d, const Weight& lambda, long long depth,
                         const RootSlice& slice) {
    if (!d.is_dominant(lambda)) throw NotDominant("hl_function: lambda not dominant");
    if (d.affine()) {
        bool labels_zero = true;
        for (const Rat& l : lambda.labels)
            if (!l.is_zero()) labels_zero = false;
        if (labels_zero)
            throw InfiniteStabilizer("hl_function: affine lambda proportional to delta");
    }
    HLExpansion exp = c_expansion(d, lambda, depth, slice);
    FormalSeries out(lambda, depth);
    for (const auto& [key, c] : exp.c) {
        RootVector beta(key);
        Weight mu = lambda - d.root_to_weight(beta);
        FormalSeries chi = character(d, mu, depth - beta.height());
        for (const auto& [k2, p] : chi.terms()) {
            RootVector off = RootVector(k2) + beta;
            out.add_term(off, c * p);
        }
    }
    return out;
}

Poly c_stembridge(const CartanDatum& d, const Weight& lambda, const Weight& mu,
                  const RootSlice& slice, int t_cap) {
    if (!d.is_dominant(lambda)) throw NotDominant("c_stembridge: lambda not dominant");
    if (!d.is_dominant(mu)) throw NotDominant("c_stembridge: mu not dominant");
    if (d.affine()) {
        bool labels_zero = true;
        for (const Rat& l : lambda.labels)
            if (!l.is_zero()) labels_zero = false;
        if (labels_zero) throw InfiniteStabilizer("c_stembridge needs #W_lambda finite");
        if (t_cap < 0) throw Error("c_stembridge: affine data need an explicit t_cap");
    }
    auto diff = d.weight_to_root(lambda - mu);
    if (!diff || !diff->nonnegative()) return Poly();

    long long cap = t_cap;
    if (cap < 0) {
        cap = static_cast<long long>(slice.real_roots.size()); // finite: #A <= #Delta+
    }

    // Admissible parts: (lambda, alpha) > 0; real roots once, k*delta up to l.
    std::vector<std::pair<RootVector, long long>> parts;
    auto admit = [&](const RootVector& alpha, long long mult) {
        if (d.bilinear(lambda, alpha) > Rat(0)) parts.emplace_back(alpha, mult);
    };
    slice.for_each(admit);

    // Signed counting series N(gamma) = sum over admissible A with |A| =
    // gamma of (-t)^{#A}, truncated at t^cap. Parts have height at most the
    // slice bound and #A <= cap bounds the reachable offsets.
    long long dmax = std::max(slice.height_bound * cap, diff->height());
    auto cone = cone_points(d.rank(), dmax);
    std::map<std::vector<long long>, Poly> dp;
    dp[std::vector<long long>(static_cast<size_t>(d.rank()), 0)] = Poly::one();
    for (const auto& [alpha, mult] : parts) {
        auto old = dp;
        for (const auto& beta : cone) {
            Poly acc;
            bool touched = false;
            for (long long j = 1; j <= mult; ++j) {
                RootVector rest = beta - j * alpha;
                if (!rest.nonnegative()) break;
                auto it = old.find(rest.c);
                if (it == old.end()) continue;
                Poly add = Poly::monomial(j % 2 == 0 ? 1 : -1, static_cast<int>(j)) * it->second;
                acc += add.truncated(static_cast<int>(cap));
                touched = true;
            }
            if (!touched || acc.is_zero()) continue;
            auto [dst, inserted] = dp.try_emplace(beta.c, acc);
            if (!inserted) {
                dst->second += acc;
                if (dst->second.is_zero()) dp.erase(dst);
            }
        }
    }

    // Orbit of mu+rho: each point y contributes sign * N(lambda+rho-y). The
    // offset gamma starts at lambda-mu and only grows under descent, and
    // len(w) <= #A + ht(lambda-mu) bounds the useful ball.
    Weight rho = d.weyl_vector();
    Weight start = mu + rho;
    long long len_cap = cap + diff->height();

    struct Node {
        Weight w;
        RootVector gamma;
        long long len;
    };
    Poly total;
    std::set<Weight> seen;
    std::deque<Node> queue;
    queue.push_back({start, *diff, 0});
    seen.insert(start);
    while (!queue.empty()) {
        Node node = queue.front();
        queue.pop_front();
        auto it = dp.find(node.gamma.c);
        if (it != dp.end()) total += (node.len % 2 == 0 ? 1 : -1) * it->second;
        if (node.len == len_cap) continue;
        for (int i = 0; i < d.rank(); ++i) {
            const Rat& p = node.w.labels[static_cast<size_t>(i)];
            if (!(p > Rat(0))) continue;
            long long pi = p.to_integer();
            RootVector g = node.gamma;
            g.c[static_cast<size_t>(i)] += pi;
            if (g.height() > dmax) continue;
            Weight y = reflect(d, i, node.w);
            if (seen.count(y)) continue;
            seen.insert(y);
            queue.push_back({y, g, node.len + 1});
        }
    }
    return total.truncated(static_cast<int>(cap));
}

Report verify_dellm(const CartanDatum& d, const Weight& lambda, long long depth,
                    const RootSlice& slice) {
    Report rep;
    rep.identity = "dellm";
    FormalSeries prod = delta_tilde(d, depth, slice).mul(hl_function(d, lambda, depth, slice));
    long long checked = 0;
    for (const auto& beta : cone_points(d.rank(), depth)) {
        Weight mu = lambda - d.root_to_weight(beta);
        if (!d.is_dominant(mu)) continue;
        Poly got = prod.coeff(beta);
        Poly want = beta.is_zero() ? Poly::one() : Poly();
        ++checked;
        if (got != want)
            rep.fail("coefficient at offset " + beta.str() + ": got " + got.str() + ", want " +
                     want.str());
    }
    rep.lines.push_back("checked " + std::to_string(checked) + " dominant coefficients to depth " +
                        std::to_string(depth));
    return rep;
}

Report verify_stembridge(const CartanDatum& d, const Weight& lambda, long long depth,
                         const RootSlice& slice, int t_cap) {
    Report rep;
    rep.identity = "stembridge";
    HLExpansion exp = c_expansion(d, lambda, depth, slice);
    long long checked = 0;
    for (const auto& beta : cone_points(d.rank(), depth)) {
        Weight mu = lambda - d.root_to_weight(beta);
        if (!d.is_dominant(mu)) continue;
        Poly via_sum = c_stembridge(d, lambda, mu, slice, t_cap);
        Poly via_inv = exp.c.count(beta.c) ? exp.c.at(beta.c) : Poly();
        if (t_cap >= 0) via_inv = via_inv.truncated(t_cap);
        ++checked;
        if (via_sum != via_inv)
            rep.fail("offset " + beta.str() + ": multiset sum " + via_sum.str() +
                     ", matrix inversion " + via_inv.str());
    }
    rep.lines.push_back("compared " + std::to_string(checked) + " coefficients to depth " +
                        std::to_string(depth));
    return rep;
}

SpecializeResult specialize_hl(const CartanDatum& d, const Weight& lambda, long long a,
                               long long depth, const RootSlice& slice) {
    SpecializeResult out;
    HLExpansion exp = c_expansion(d, lambda, depth, slice);
    for (const auto& [key, c] : exp.c) out.values[key] = c.evaluate_at(a);

    if (a != -1) return out;
    if (d.affine()) return out; // the tensor oracle is finite-type
    if (!d.is_regular_dominant(lambda))
        throw NotRegularDominant("specialize_hl at t=-1 needs a regular dominant lambda");

    out.has_tensor_report = true;
    out.tensor_report.identity = "tensor-minus-one";
    Weight rho = d.weyl_vector();
    auto decomp = tensor_decompose(d, lambda - rho, rho);
    std::map<std::vector<long long>, long long> tensor_mult;
    for (const auto& comp : decomp) {
        auto off = d.weight_to_root(lambda - comp.highest_weight);
        if (!off) throw Error("internal: tensor component not below lambda");
        if (off->nonnegative() && off->height() <= depth) tensor_mult[off->c] = comp.multiplicity;
    }
    for (const auto& beta : cone_points(d.rank(), depth)) {
        if (!d.is_dominant(lambda - d.root_to_weight(beta))) continue;
        long long got = out.values.count(beta.c) ? out.values.at(beta.c) : 0;
        long long want = tensor_mult.count(beta.c) ? tensor_mult.at(beta.c) : 0;
        if (got < 0)
            out.tensor_report.fail("negative c(-1) at offset " + beta.str());
        if (got != want)
            out.tensor_report.fail("offset " + beta.str() + ": c(-1) = " + std::to_string(got) +
                                   " but tensor multiplicity = " + std::to_string(want));
    }
    out.tensor_report.lines.push_back("compared against L(lambda-rho) (x) L(rho) on the depth cone");
    return out;
}

} // namespace kmk
