#pragma once

#include <map>
#include <vector>

#include "kmk/cartan.hpp"
#include "kmk/poly.hpp"

namespace kmk {

// All lattice points of Q+ in the given rank with height <= H, sorted by
// (height, lex). The zero vector comes first.
std::vector<RootVector> cone_points(int rank, long long H);

/* Power series in q = e^{-delta} truncated at q^order, with coefficients in
 * Z[t]. Arithmetic aligns to the smaller order of the operands, which is
 * exactly the range where the product coefficients are complete. */
class QSeries {
public:
    QSeries() : order_(-1) {}
    explicit QSeries(int order) : order_(order), c_(static_cast<size_t>(order) + 1) {}

    static QSeries one(int order) {
        QSeries s(order);
        s.c_[0] = Poly::one();
        return s;
    }

    int order() const { return order_; }
    const Poly& at(int k) const { return c_[static_cast<size_t>(k)]; }
    void set(int k, Poly p) { c_[static_cast<size_t>(k)] = std::move(p); }

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const Poly& p, const QSeries& a);
    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    // Multiplicative inverse; the constant coefficient must be +1 or -1.
    QSeries reciprocal() const;

    QSeries truncated(int order) const;
    // Drop t-degrees above cap in every coefficient.
    QSeries t_truncated(int cap) const;
    // Substitute an integer for t (coefficients become constants).
    QSeries evaluate_t(long long a) const;

    std::string str() const;

private:
    int order_;
    std::vector<Poly> c_;
};

// Truncation of (t^{a_t} q; q)_infty, the product over n >= 1 of
// (1 - t^{a_t} q^n), to order N.
QSeries pochhammer(long long a_t, int N);

/* Truncated element of the formal-exponential ring: anchor lambda_0, a depth
 * bound D, and a sparse map from Q+ offsets beta (0 <= ht(beta) <= D) to
 * polynomial coefficients, representing sum_beta c_beta(t) e^{lambda_0-beta}.
 * Absent keys are zero; every operation keeps the support complete up to the
 * stated depth. */
class FormalSeries {
public:
    using Terms = std::map<std::vector<long long>, Poly>;

    FormalSeries(Weight anchor, long long depth) : anchor_(std::move(anchor)), depth_(depth) {}

    // e^{anchor} as a series of the given depth.
    static FormalSeries unit(Weight anchor, long long depth) {
        FormalSeries f(std::move(anchor), depth);
        f.terms_[std::vector<long long>(f.anchor_.labels.size(), 0)] = Poly::one();
        return f;
    }

    const Weight& anchor() const { return anchor_; }
    long long depth() const { return depth_; }
    const Terms& terms() const { return terms_; }
    int rank() const { return static_cast<int>(anchor_.labels.size()); }

    Poly coeff(const RootVector& beta) const {
        auto it = terms_.find(beta.c);
        return it == terms_.end() ? Poly() : it->second;
    }
    void add_term(const RootVector& beta, const Poly& p);

    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b);
    friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b);
    friend bool operator==(const FormalSeries& a, const FormalSeries& b) {
        return a.anchor_ == b.anchor_ && a.depth_ == b.depth_ && a.terms_ == b.terms_;
    }

    // Product; anchors add, the depth is the smaller of the two. A
    // nonnegative t_cap truncates every coefficient to that t-degree.
    FormalSeries mul(const FormalSeries& other, int t_cap = -1) const;

    // Inverse with respect to mul; requires the coefficient at beta = 0 to be
    // the constant +1 or -1 (the units of Z[t]), else throws NotInvertible.
    FormalSeries inverse(int t_cap = -1) const;

    FormalSeries truncated(long long new_depth) const;
    FormalSeries t_truncated(int cap) const;
    // Evaluate every coefficient at an integer t.
    FormalSeries evaluate_t(long long a) const;
    // Multiply by a scalar polynomial.
    FormalSeries scaled(const Poly& p, int t_cap = -1) const;

    // Reinterpret with the anchor raised by a Q+ vector: same series, offsets
    // shifted by `up`, depth extended accordingly.
    FormalSeries anchor_raised(const CartanDatum& d, const RootVector& up) const;
    // Translate the anchor without touching offsets (multiplication by
    // e^{by} for `by` orthogonal to the support bookkeeping, e.g. c*delta).
    FormalSeries anchor_translated(const Weight& by) const;

private:
    Weight anchor_;
    long long depth_;
    Terms terms_;
};

// Constant-term map for an affine datum: keeps the terms with
// anchor - beta in Q*delta and returns them as a q-series, q = e^{-delta}.
// The anchor must lie in the root-lattice span (level zero, integral
// coordinates), else AnchorNotLatticeCompatible.
QSeries constant_term(const CartanDatum& d, const FormalSeries& f);

} // namespace kmk
