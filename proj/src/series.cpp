#include "kmk/series.hpp"

#include <algorithm>

#include "kmk/errors.hpp"

namespace kmk {

std::vector<RootVector> cone_points(int rank, long long H) {
    std::vector<RootVector> out;
    std::vector<long long> cur(static_cast<size_t>(rank), 0);
    // Recursive lex walk, then stable sort by height.
    struct Walker {
        int rank;
        long long H;
        std::vector<long long>& cur;
        std::vector<RootVector>& out;
        void go(int pos, long long left) {
            if (pos == rank) {
                out.emplace_back(cur);
                return;
            }
            for (long long v = 0; v <= left; ++v) {
                cur[static_cast<size_t>(pos)] = v;
                go(pos + 1, left - v);
            }
            cur[static_cast<size_t>(pos)] = 0;
        }
    } w{rank, H, cur, out};
    w.go(0, H);
    std::stable_sort(out.begin(), out.end(), [](const RootVector& a, const RootVector& b) {
        long long ha = a.height(), hb = b.height();
        if (ha != hb) return ha < hb;
        return a.c < b.c;
    });
    return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    int n = std::min(a.order_, b.order_);
    QSeries r(n);
    for (int k = 0; k <= n; ++k) r.set(k, a.at(k) + b.at(k));
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    int n = std::min(a.order_, b.order_);
    QSeries r(n);
    for (int k = 0; k <= n; ++k) r.set(k, a.at(k) - b.at(k));
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    int n = std::min(a.order_, b.order_);
    QSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.at(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.at(j).is_zero()) continue;
            r.c_[static_cast<size_t>(i + j)] += a.at(i) * b.at(j);
        }
    }
    return r;
}

QSeries operator*(const Poly& p, const QSeries& a) {
    QSeries r(a.order_);
    for (int k = 0; k <= a.order_; ++k) r.set(k, p * a.at(k));
    return r;
}

QSeries QSeries::reciprocal() const {
    if (order_ < 0) throw Error("reciprocal of an empty series");
    const Poly& lead = c_[0];
    if (!(lead == Poly::one() || lead == Poly::constant(-1)))
        throw NotInvertible("q-series constant coefficient is not a unit of Z[t]");
    long long u = lead.coeff(0); // +1 or -1
    QSeries r(order_);
    r.set(0, Poly::constant(u));
    for (int n = 1; n <= order_; ++n) {
        Poly acc;
        for (int k = 1; k <= n; ++k) acc += c_[static_cast<size_t>(k)] * r.at(n - k);
        r.set(n, Poly::constant(-u) * acc);
    }
    return r;
}

QSeries QSeries::truncated(int order) const {
    if (order >= order_) return *this;
    QSeries r(order);
    for (int k = 0; k <= order; ++k) r.set(k, at(k));
    return r;
}

QSeries QSeries::t_truncated(int cap) const {
    QSeries r(order_);
    for (int k = 0; k <= order_; ++k) r.set(k, at(k).truncated(cap));
    return r;
}

QSeries QSeries::evaluate_t(long long a) const {
    QSeries r(order_);
    for (int k = 0; k <= order_; ++k) r.set(k, Poly::constant(at(k).evaluate_at(a)));
    return r;
}

std::string QSeries::str() const {
    std::string s;
    for (int k = 0; k <= order_; ++k) {
        if (at(k).is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + at(k).str() + ")q^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

QSeries pochhammer(long long a_t, int N) {
    if (N < 0) throw Error("pochhammer needs N >= 0");
    if (a_t < 0) throw Error("pochhammer needs a_t >= 0");
    QSeries r = QSeries::one(N);
    Poly ta = Poly::monomial(1, static_cast<int>(a_t));
    for (int n = 1; n <= N; ++n) {
        // multiply by (1 - t^{a_t} q^n), descending so the update is in place
        for (int k = N; k >= n; --k) {
            Poly v = r.at(k) - ta * r.at(k - n);
            r.set(k, std::move(v));
        }
    }
    return r;
}

void FormalSeries::add_term(const RootVector& beta, const Poly& p) {
    if (!beta.nonnegative() || beta.height() > depth_)
        throw Error("formal-series term outside the depth cone");
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(beta.c, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
    if (a.anchor_ != b.anchor_) throw Error("adding formal series with different anchors");
    FormalSeries r(a.anchor_, std::min(a.depth_, b.depth_));
    for (const auto& [k, p] : a.terms_)
        if (RootVector(k).height() <= r.depth_) r.terms_[k] = p;
    for (const auto& [k, p] : b.terms_) {
        if (RootVector(k).height() > r.depth_) continue;
        auto [it, inserted] = r.terms_.try_emplace(k, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
    FormalSeries neg = b;
    for (auto& [k, p] : neg.terms_) p = -p;
    return a + neg;
}

FormalSeries FormalSeries::mul(const FormalSeries& other, int t_cap) const {
    FormalSeries r(anchor_ + other.anchor_, std::min(depth_, other.depth_));
    std::vector<long long> key(anchor_.labels.size());
    for (const auto& [ka, pa] : terms_) {
        long long ha = RootVector(ka).height();
        if (ha > r.depth_) continue;
        for (const auto& [kb, pb] : other.terms_) {
            long long hb = RootVector(kb).height();
            if (ha + hb > r.depth_) continue;
            for (size_t i = 0; i < key.size(); ++i) key[i] = ka[i] + kb[i];
            Poly prod = pa * pb;
            if (t_cap >= 0) prod = prod.truncated(t_cap);
            if (prod.is_zero()) continue;
            auto [it, inserted] = r.terms_.try_emplace(key, prod);
            if (!inserted) {
                it->second += prod;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

FormalSeries FormalSeries::inverse(int t_cap) const {
    std::vector<long long> zero(anchor_.labels.size(), 0);
    auto it0 = terms_.find(zero);
    Poly lead = it0 == terms_.end() ? Poly() : it0->second;
    if (!(lead == Poly::one() || lead == Poly::constant(-1)))
        throw NotInvertible("leading coefficient is not a unit of Z[t]");
    long long u = lead.coeff(0);

    Weight neg_anchor = Rat(-1) * anchor_;
    FormalSeries r(neg_anchor, depth_);
    r.terms_[zero] = Poly::constant(u);
    for (const auto& beta : cone_points(rank(), depth_)) {
        if (beta.is_zero()) continue;
        Poly acc;
        for (const auto& [kg, pg] : terms_) {
            if (kg == zero) continue;
            bool fits = true;
            std::vector<long long> rest(zero.size());
            for (size_t i = 0; i < zero.size(); ++i) {
                rest[i] = beta.c[i] - kg[i];
                if (rest[i] < 0) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            auto itr = r.terms_.find(rest);
            if (itr == r.terms_.end()) continue;
            acc += pg * itr->second;
        }
        if (acc.is_zero()) continue;
        Poly v = Poly::constant(-u) * acc;
        if (t_cap >= 0) v = v.truncated(t_cap);
        if (!v.is_zero()) r.terms_[beta.c] = std::move(v);
    }
    return r;
}

FormalSeries FormalSeries::truncated(long long new_depth) const {
    if (new_depth >= depth_) return *this;
    FormalSeries r(anchor_, new_depth);
    for (const auto& [k, p] : terms_)
        if (RootVector(k).height() <= new_depth) r.terms_[k] = p;
    return r;
}

FormalSeries FormalSeries::t_truncated(int cap) const {
    FormalSeries r(anchor_, depth_);
    for (const auto& [k, p] : terms_) {
        Poly q = p.truncated(cap);
        if (!q.is_zero()) r.terms_[k] = std::move(q);
    }
    return r;
}

FormalSeries FormalSeries::evaluate_t(long long a) const {
    FormalSeries r(anchor_, depth_);
    for (const auto& [k, p] : terms_) {
        long long v = p.evaluate_at(a);
        if (v != 0) r.terms_[k] = Poly::constant(v);
    }
    return r;
}

FormalSeries FormalSeries::scaled(const Poly& s, int t_cap) const {
    FormalSeries r(anchor_, depth_);
    for (const auto& [k, p] : terms_) {
        Poly q = s * p;
        if (t_cap >= 0) q = q.truncated(t_cap);
        if (!q.is_zero()) r.terms_[k] = std::move(q);
    }
    return r;
}

FormalSeries FormalSeries::anchor_raised(const CartanDatum& d, const RootVector& up) const {
    if (!up.nonnegative()) throw Error("anchor_raised needs a Q+ shift");
    FormalSeries r(anchor_ + d.root_to_weight(up), depth_ + up.height());
    for (const auto& [k, p] : terms_) {
        std::vector<long long> nk(k);
        for (size_t i = 0; i < nk.size(); ++i) nk[i] += up.c[i];
        r.terms_[nk] = p;
    }
    return r;
}

FormalSeries FormalSeries::anchor_translated(const Weight& by) const {
    FormalSeries r(anchor_ + by, depth_);
    r.terms_ = terms_;
    return r;
}

QSeries constant_term(const CartanDatum& d, const FormalSeries& f) {
    if (!d.affine()) throw Error("constant_term needs an affine datum");
    auto coords = d.weight_root_coords(f.anchor());
    if (!coords) throw AnchorNotLatticeCompatible("anchor has nonzero level");
    std::vector<long long> base(coords->size());
    for (size_t i = 0; i < coords->size(); ++i) {
        if (!(*coords)[i].is_integer())
            throw AnchorNotLatticeCompatible("anchor not in the root lattice");
        base[i] = (*coords)[i].to_integer();
    }
    long long base_ht = 0;
    for (long long x : base) base_ht += x;
    long long dh = d.delta_height();
    long long N = (f.depth() - base_ht) / dh;
    if (N < 0) throw HeightBoundExceeded("series too shallow for any constant-term coefficient");

    QSeries out(static_cast<int>(N));
    const auto& marks = d.marks();
    for (long long k = 0; k <= N; ++k) {
        std::vector<long long> key(base);
        bool ok = true;
        for (size_t i = 0; i < key.size(); ++i) {
            key[i] += k * marks[i];
            if (key[i] < 0) ok = false;
        }
        if (!ok) continue; // outside the support cone: genuinely zero
        auto it = f.terms().find(key);
        if (it != f.terms().end()) out.set(static_cast<int>(k), it->second);
    }
    return out;
}

} // namespace kmk
