#include "kmk/kostka.hpp"

#include <algorithm>

#include "kmk/errors.hpp"
#include "kmk/series.hpp"
#include "kmk/weyl.hpp"

namespace kmk {

Poly lusztig(const CartanDatum& d, const Weight& lambda, const Weight& mu,
             const PartitionTable& table) {
    if (!d.is_dominant(lambda)) throw NotDominant("lusztig: lambda not dominant");
    if (!d.is_dominant(mu)) throw NotDominant("lusztig: mu not dominant");
    auto diff = d.weight_to_root(lambda - mu);
    if (!diff || !diff->nonnegative()) return Poly();
    if (diff->height() > table.depth())
        throw HeightBoundExceeded("lusztig: ht(lambda-mu) exceeds the table depth");

    Weight rho = d.weyl_vector();
    Weight floor = mu + rho;
    Poly acc;
    for (const auto& pt : orbit_interval(d, lambda + rho, floor)) {
        auto gamma = d.weight_to_root(pt.weight - floor);
        if (!gamma) throw Error("internal: orbit offset not in the root lattice");
        acc += pt.parity * table.at(*gamma);
    }
    return acc;
}

Poly lusztig(const CartanDatum& d, const Weight& lambda, const Weight& mu, const RootSlice& slice) {
    if (!d.is_dominant(lambda)) throw NotDominant("lusztig: lambda not dominant");
    if (!d.is_dominant(mu)) throw NotDominant("lusztig: mu not dominant");
    auto diff = d.weight_to_root(lambda - mu);
    if (!diff || !diff->nonnegative()) return Poly();
    return lusztig(d, lambda, mu, t_partition_table(d, diff->height(), slice));
}

KostkaTable kostka_table(const CartanDatum& d, const Weight& lambda, long long depth,
                         const RootSlice& slice) {
    if (!d.is_dominant(lambda)) throw NotDominant("kostka_table: lambda not dominant");
    KostkaTable out;
    out.lambda = lambda;
    out.depth = depth;
    PartitionTable table = t_partition_table(d, depth, slice);
    for (const auto& beta : cone_points(d.rank(), depth)) {
        Weight mu = lambda - d.root_to_weight(beta);
        if (!d.is_dominant(mu)) continue;
        Poly k = lusztig(d, lambda, mu, table);
        if (!k.is_zero()) out.entries[beta.c] = std::move(k);
    }
    return out;
}

namespace {

// Freudenthal recursion evaluated at the dominant points of the cone only;
// everything else is recovered through W-invariance.
std::map<std::vector<long long>, long long> dominant_multiplicities(const CartanDatum& d,
                                                                    const Weight& lambda,
                                                                    long long depth) {
    if (!d.is_dominant(lambda)) throw NotDominant("freudenthal: lambda not dominant");
    std::map<std::vector<long long>, long long> mult;
    std::vector<long long> zero(static_cast<size_t>(d.rank()), 0);
    mult[zero] = 1;

    bool labels_zero = true;
    for (const Rat& l : lambda.labels)
        if (!l.is_zero()) labels_zero = false;
    // lambda in C*delta (or zero): the module is one dimensional.
    if (labels_zero || depth == 0) return mult;

    RootSlice slice = d.roots_up_to(depth);
    Weight rho = d.weyl_vector();

    auto lookup = [&](const Weight& nu) -> long long {
        DominantResult dom = to_dominant(d, nu);
        auto off = d.weight_to_root(lambda - dom.dominant);
        if (!off || !off->nonnegative()) return 0;
        auto it = mult.find(off->c);
        return it == mult.end() ? 0 : it->second;
    };

    for (const auto& beta : cone_points(d.rank(), depth)) {
        if (beta.is_zero()) continue;
        Weight mu = lambda - d.root_to_weight(beta);
        bool dominant = true;
        for (const Rat& l : mu.labels)
            if (l < Rat(0)) dominant = false;
        if (!dominant) continue;

        Rat num(0);
        auto add_root = [&](const RootVector& alpha, long long m_alpha) {
            for (long long k = 1;; ++k) {
                RootVector rest = beta - k * alpha;
                if (!rest.nonnegative()) break;
                Weight nu = lambda - d.root_to_weight(rest); // mu + k*alpha
                long long m = lookup(nu);
                if (m == 0) continue;
                num += Rat(m_alpha * m) * d.bilinear(nu, alpha);
            }
        };
        slice.for_each(add_root);

        Rat den = d.bilinear(lambda + mu + Rat(2) * rho, beta);
        if (den.is_zero())
            throw ZeroDenominator("Freudenthal denominator vanished at a dominant point");
        Rat value = Rat(2) * num / den;
        if (!value.is_integer() || value < Rat(0))
            throw Error("internal: Freudenthal produced a non-integer multiplicity");
        if (value.to_integer() != 0) mult[beta.c] = value.to_integer();
    }
    return mult;
}

} // namespace

std::map<std::vector<long long>, long long> freudenthal_cone(const CartanDatum& d,
                                                             const Weight& lambda,
                                                             long long depth) {
    auto dominant = dominant_multiplicities(d, lambda, depth);
    std::map<std::vector<long long>, long long> mult;
    for (const auto& beta : cone_points(d.rank(), depth)) {
        Weight nu = lambda - d.root_to_weight(beta);
        DominantResult dom = to_dominant(d, nu);
        auto off = d.weight_to_root(lambda - dom.dominant);
        if (!off || !off->nonnegative()) continue;
        auto it = dominant.find(off->c);
        if (it != dominant.end() && it->second != 0) mult[beta.c] = it->second;
    }
    return mult;
}

long long freudenthal_multiplicity(const CartanDatum& d, const Weight& lambda, const Weight& mu,
                                   long long depth) {
    auto direct = d.weight_to_root(lambda - mu);
    if (!direct || !direct->nonnegative()) return 0;
    if (direct->height() > depth) throw HeightBoundExceeded("freudenthal: mu outside the depth cone");
    Weight dom = to_dominant(d, mu).dominant;
    auto off = d.weight_to_root(lambda - dom);
    if (!off || !off->nonnegative()) return 0;
    auto table = dominant_multiplicities(d, lambda, off->height());
    auto it = table.find(off->c);
    return it == table.end() ? 0 : it->second;
}

namespace {

// Full character depth of a finite-type module: ht(lambda - w0(lambda)).
long long full_character_depth(const CartanDatum& d, const Weight& lambda) {
    Weight dual = to_dominant(d, Rat(-1) * lambda).dominant;
    auto diff = d.weight_to_root(lambda + dual);
    if (!diff || !diff->nonnegative()) throw Error("internal: lambda + lambda* not in Q+");
    return diff->height();
}

// Character as a formal series anchored at lambda, complete to `depth`.
FormalSeries character_series(const CartanDatum& d, const Weight& lambda, long long depth) {
    FormalSeries f(lambda, depth);
    for (const auto& [key, m] : freudenthal_cone(d, lambda, depth))
        f.add_term(RootVector(key), Poly::constant(m));
    return f;
}

} // namespace

std::vector<TensorComponent> tensor_decompose(const CartanDatum& d, const Weight& a,
                                              const Weight& b) {
    if (d.affine()) throw UnsupportedType("tensor_decompose is finite-type only");
    if (!d.is_dominant(a) || !d.is_dominant(b))
        throw NotDominant("tensor_decompose needs dominant weights");

    long long depth = full_character_depth(d, a) + full_character_depth(d, b);
    FormalSeries remaining = character_series(d, a, depth).mul(character_series(d, b, depth));

    std::vector<TensorComponent> out;
    while (!remaining.terms().empty()) {
        // The lowest-height surviving offset is a maximal weight of what is
        // left, hence a dominant highest weight of a constituent.
        auto it = std::min_element(remaining.terms().begin(), remaining.terms().end(),
                                   [](const auto& x, const auto& y) {
                                       long long hx = RootVector(x.first).height();
                                       long long hy = RootVector(y.first).height();
                                       if (hx != hy) return hx < hy;
                                       return x.first < y.first;
                                   });
        RootVector beta(it->first);
        Weight pi = remaining.anchor() - d.root_to_weight(beta);
        if (!d.is_dominant(pi)) throw Error("internal: maximal leftover weight not dominant");
        if (it->second.degree() != 0)
            throw Error("internal: non-constant multiplicity in tensor peeling");
        long long c = it->second.coeff(0);
        if (c <= 0) throw Error("internal: negative multiplicity in tensor peeling");
        out.push_back({pi, c});
        FormalSeries chi = character_series(d, pi, depth - beta.height()).anchor_raised(d, beta);
        remaining = remaining - chi.scaled(Poly::constant(c));
    }
    return out;
}

Poly classical_kostka_for_module(const CartanDatum& d, const std::vector<TensorComponent>& decomp,
                                 const Weight& gamma) {
    long long depth = 1;
    for (const auto& comp : decomp) {
        auto off = d.weight_to_root(comp.highest_weight - gamma);
        if (off && off->nonnegative()) depth = std::max(depth, off->height());
    }
    RootSlice slice = d.roots_up_to(depth);
    Poly acc;
    for (const auto& comp : decomp)
        acc += comp.multiplicity * lusztig(d, comp.highest_weight, gamma, slice);
    return acc;
}

Report verify_prop61(const CartanDatum& d, const Weight& lambda, int node) {
    Report rep;
    rep.identity = "prop61";
    if (!d.affine()) throw UnsupportedType("verify_prop61 needs an untwisted affine datum");
    if (!d.is_dominant(lambda)) throw NotDominant("verify_prop61: lambda not dominant");
    if (node < 0 || node >= d.rank() || d.marks()[static_cast<size_t>(node)] != 1)
        throw PreconditionViolated("node must carry mark 1");
    if (lambda.labels[static_cast<size_t>(node)] < Rat(1))
        throw PreconditionViolated("<lambda, alpha_node^vee> >= 1 is required");

    long long dh = d.delta_height();
    RootSlice slice = d.roots_up_to(dh);
    Weight lam_minus_delta = lambda;
    lam_minus_delta.delta -= Rat(1);
    Poly lhs = lusztig(d, lambda, lam_minus_delta, slice);

    // Finite subalgebra at the chosen node; theta there is delta - alpha_node.
    std::vector<std::vector<long long>> block;
    std::vector<int> keep;
    for (int i = 0; i < d.rank(); ++i)
        if (i != node) keep.push_back(i);
    for (int i : keep) {
        std::vector<long long> row;
        for (int j : keep) row.push_back(d.cartan(i, j));
        block.push_back(std::move(row));
    }
    CartanDatum fin = CartanDatum::validate(block, "finite");

    std::vector<long long> theta_coords, bar_labels;
    for (int j : keep) theta_coords.push_back(d.marks()[static_cast<size_t>(j)]);
    for (int j : keep) bar_labels.push_back(lambda.labels[static_cast<size_t>(j)].to_integer());
    Weight theta_w = fin.root_to_weight(RootVector(theta_coords));
    Weight bar = fin.weight_from_labels(bar_labels);

    auto decomp = tensor_decompose(fin, theta_w, bar);
    Poly rhs = Poly::t() * classical_kostka_for_module(fin, decomp, bar);

    rep.lines.push_back("lhs K_{lambda,lambda-delta} = " + lhs.str());
    rep.lines.push_back("rhs t*K_{V,lambda_bar}      = " + rhs.str());
    if (lhs != rhs) rep.fail("lhs != rhs");
    for (long long c : lhs.coeffs())
        if (c < 0) rep.fail("negative coefficient in K_{lambda,lambda-delta}");
    return rep;
}

} // namespace kmk
