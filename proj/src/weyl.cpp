#include "kmk/weyl.hpp"

#include <deque>
#include <map>
#include <set>

#include "kmk/errors.hpp"

namespace kmk {

Weight reflect(const CartanDatum& d, int i, const Weight& w) {
    if (i < 0 || i >= d.rank()) throw Error("reflection index out of range");
    Rat p = w.labels[static_cast<size_t>(i)];
    if (p.is_zero()) return w;
    Weight r = w;
    for (int j = 0; j < d.rank(); ++j) r.labels[static_cast<size_t>(j)] -= p * Rat(d.cartan(j, i));
    if (d.affine() && i == d.affine_node()) r.delta -= p;
    return r;
}

RootVector reflect(const CartanDatum& d, int i, const RootVector& r) {
    if (i < 0 || i >= d.rank()) throw Error("reflection index out of range");
    long long p = 0;
    for (int j = 0; j < d.rank(); ++j) p += d.cartan(i, j) * r.c[static_cast<size_t>(j)];
    RootVector out = r;
    out.c[static_cast<size_t>(i)] -= p;
    return out;
}

DominantResult to_dominant(const CartanDatum& d, const Weight& w, long long step_cap) {
    if (step_cap <= 0) {
        // Ascent count is bounded for Tits-cone inputs; derive a generous cap
        // from the label magnitudes.
        long long size = 1;
        for (const Rat& l : w.labels) size += (l.num() < 0 ? -l.num() : l.num()) / l.den() + 1;
        step_cap = 10 * size * d.rank() + 64;
    }
    DominantResult res;
    res.dominant = w;
    while (true) {
        int neg = -1;
        for (int i = 0; i < d.rank(); ++i)
            if (res.dominant.labels[static_cast<size_t>(i)] < Rat(0)) {
                neg = i;
                break;
            }
        if (neg < 0) break;
        res.dominant = reflect(d, neg, res.dominant);
        ++res.steps;
        if (res.steps > step_cap)
            throw NotInTitsCone("dominance ascent did not terminate within " +
                                std::to_string(step_cap) + " steps");
    }
    bool singular = false;
    for (const Rat& l : res.dominant.labels)
        if (l.is_zero()) singular = true;
    res.sign = singular ? 0 : (res.steps % 2 == 0 ? 1 : -1);
    if (d.affine()) {
        bool all_zero = true;
        for (const Rat& l : res.dominant.labels)
            if (!l.is_zero()) all_zero = false;
        res.finite_stabilizer = !all_zero;
    } else {
        res.finite_stabilizer = true;
    }
    return res;
}

Poly stabilizer_poincare(const CartanDatum& d, const Weight& lambda) {
    for (const Rat& l : lambda.labels)
        if (l < Rat(0)) throw NotDominant("stabilizer_poincare needs a dominant weight");
    std::vector<int> fixed;
    for (int i = 0; i < d.rank(); ++i)
        if (lambda.labels[static_cast<size_t>(i)].is_zero()) fixed.push_back(i);
    if (fixed.empty()) return Poly::one();
    if (d.affine() && static_cast<int>(fixed.size()) == d.rank())
        throw InfiniteStabilizer("all labels vanish; the stabilizer is the full affine Weyl group");

    // The parabolic on `fixed` acts freely on a weight that is regular within
    // it; BFS depth is then the element length.
    Weight v = d.zero_weight();
    for (int i : fixed) v.labels[static_cast<size_t>(i)] = Rat(1);
    std::map<Weight, long long> length;
    std::deque<Weight> queue;
    length[v] = 0;
    queue.push_back(v);
    std::vector<long long> count{1};
    while (!queue.empty()) {
        Weight x = queue.front();
        queue.pop_front();
        long long len = length[x];
        for (int i : fixed) {
            if (!(x.labels[static_cast<size_t>(i)] > Rat(0))) continue;
            Weight y = reflect(d, i, x);
            if (length.count(y)) continue;
            length[y] = len + 1;
            if (static_cast<long long>(count.size()) <= len + 1) count.resize(static_cast<size_t>(len) + 2, 0);
            ++count[static_cast<size_t>(len) + 1];
            queue.push_back(y);
        }
    }
    return Poly(std::move(count));
}

std::vector<OrbitPoint> orbit_interval(const CartanDatum& d, const Weight& top, const Weight& floor) {
    if (!d.is_regular_dominant(top))
        throw NotRegularDominant("orbit_interval needs a regular dominant top");
    auto diff = d.weight_to_root(top - floor);
    if (!diff || !diff->nonnegative()) return {};

    struct Node {
        Weight w;
        RootVector offset; // w(top) - floor in root coordinates
        long long len;
    };
    std::vector<OrbitPoint> out;
    std::set<Weight> seen;
    std::deque<Node> queue;
    queue.push_back({top, *diff, 0});
    seen.insert(top);
    while (!queue.empty()) {
        Node node = queue.front();
        queue.pop_front();
        out.push_back({node.w, node.len % 2 == 0 ? 1 : -1, node.len});
        for (int i = 0; i < d.rank(); ++i) {
            const Rat& p = node.w.labels[static_cast<size_t>(i)];
            if (!(p > Rat(0))) continue; // strict descent only
            long long pi = p.to_integer();
            if (node.offset.c[static_cast<size_t>(i)] < pi) continue; // would leave Q+
            Weight y = reflect(d, i, node.w);
            if (seen.count(y)) continue;
            seen.insert(y);
            RootVector off = node.offset;
            off.c[static_cast<size_t>(i)] -= pi;
            queue.push_back({y, off, node.len + 1});
        }
    }
    return out;
}

} // namespace kmk
