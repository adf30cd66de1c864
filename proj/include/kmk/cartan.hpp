#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kmk/rational.hpp"

namespace kmk {

enum class AlgebraKind { Finite, UntwistedAffine };

/* Element of the root lattice Q in simple-root coordinates. For an untwisted
 * affine datum the coordinate at index 0 belongs to alpha_0. */
struct RootVector {
    std::vector<long long> c;

    RootVector() = default;
    explicit RootVector(std::vector<long long> coords) : c(std::move(coords)) {}

    long long height() const {
        long long h = 0;
        for (long long x : c) h += x;
        return h;
    }
    bool nonnegative() const {
        for (long long x : c)
            if (x < 0) return false;
        return true;
    }
    bool is_zero() const {
        for (long long x : c)
            if (x != 0) return false;
        return true;
    }

    friend RootVector operator+(const RootVector& a, const RootVector& b) {
        RootVector r = a;
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
        return r;
    }
    friend RootVector operator-(const RootVector& a, const RootVector& b) {
        RootVector r = a;
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
        return r;
    }
    friend RootVector operator*(long long s, const RootVector& a) {
        RootVector r = a;
        for (auto& x : r.c) x *= s;
        return r;
    }
    friend bool operator==(const RootVector& a, const RootVector& b) { return a.c == b.c; }
    friend bool operator!=(const RootVector& a, const RootVector& b) { return !(a == b); }
    friend bool operator<(const RootVector& a, const RootVector& b) { return a.c < b.c; }

    std::string str() const;
};

/* Exact point of the weight space in label coordinates: labels[i] is the
 * pairing with the i-th simple coroot, delta is the coefficient of the null
 * root in the basis {Lambda_0, ..., Lambda_l, delta} (affine only; always 0
 * for finite type). */
struct Weight {
    std::vector<Rat> labels;
    Rat delta;

    Weight() = default;
    Weight(std::vector<Rat> l, Rat d) : labels(std::move(l)), delta(d) {}

    friend Weight operator+(const Weight& a, const Weight& b) {
        Weight r = a;
        for (size_t i = 0; i < r.labels.size(); ++i) r.labels[i] += b.labels[i];
        r.delta += b.delta;
        return r;
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        Weight r = a;
        for (size_t i = 0; i < r.labels.size(); ++i) r.labels[i] -= b.labels[i];
        r.delta -= b.delta;
        return r;
    }
    friend Weight operator*(const Rat& s, const Weight& a) {
        Weight r = a;
        for (auto& x : r.labels) x *= s;
        r.delta *= s;
        return r;
    }
    friend bool operator==(const Weight& a, const Weight& b) {
        return a.labels == b.labels && a.delta == b.delta;
    }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) {
        if (a.labels != b.labels) return a.labels < b.labels;
        return a.delta < b.delta;
    }

    std::string str() const;
};

/* Positive roots of height at most height_bound, with multiplicities. Real
 * roots all have multiplicity 1; for untwisted affine type every multiple of
 * delta is a root of multiplicity l (the rank of the underlying finite
 * algebra). */
struct RootSlice {
    long long height_bound = 0;
    std::vector<RootVector> real_roots;
    long long imaginary_multiplicity = 0;
    std::vector<RootVector> imaginary_roots;

    // Visits every positive root beta with ht(beta) <= height_bound as
    // (beta, multiplicity), reals first, in a fixed deterministic order.
    template <typename F>
    void for_each(F&& f) const {
        for (const auto& r : real_roots) f(r, 1LL);
        for (const auto& r : imaginary_roots) f(r, imaginary_multiplicity);
    }
};

/* Validated generalized Cartan matrix together with everything derived from
 * it: minimal integer symmetrizer, finite/untwisted-affine classification,
 * marks and dual marks, and the normalized invariant bilinear form with
 * (alpha, alpha) = 2 for long roots. Immutable after construction. */
class CartanDatum {
public:
    // Validates an explicit square integer matrix. kind_hint may be "finite",
    // "affine" or empty; it is cross-checked, never trusted.
    static CartanDatum validate(const std::vector<std::vector<long long>>& matrix,
                                const std::string& kind_hint = "");

    // Named construction: "A2", "G2", "B3", ... for finite type, with a "~"
    // suffix ("A1~", "D4~") for the untwisted affine extension.
    static CartanDatum from_name(const std::string& name);

    // Untwisted affine extension of a finite datum (new node 0 carries the
    // negative of the highest root).
    CartanDatum affinize() const;

    int rank() const { return n_; }
    AlgebraKind kind() const { return kind_; }
    bool affine() const { return kind_ == AlgebraKind::UntwistedAffine; }
    const std::string& name() const { return name_; }

    long long cartan(int i, int j) const { return A_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    long long symmetrizer(int i) const { return sym_[static_cast<size_t>(i)]; }
    // (alpha_i, alpha_i) under the long-root normalization.
    Rat simple_norm2(int i) const { return Rat(2 * sym_[static_cast<size_t>(i)], sym_max_); }

    // Affine data; marks are the coefficients of delta in the simple roots.
    const std::vector<long long>& marks() const { return marks_; }
    const std::vector<long long>& dual_marks() const { return dual_marks_; }
    int affine_node() const { return 0; }
    const CartanDatum& finite() const;
    long long delta_height() const;
    RootVector delta_vector() const { return RootVector(marks_); }

    Weight zero_weight() const { return Weight(std::vector<Rat>(static_cast<size_t>(n_)), Rat(0)); }
    Weight fundamental_weight(int i) const;
    Weight weyl_vector() const;
    Weight weight_from_labels(const std::vector<long long>& labels, Rat delta = Rat(0)) const;

    Weight root_to_weight(const RootVector& r) const;
    // Coordinates in the simple-root basis; nullopt when the weight is not in
    // the rational span of the roots (affine: nonzero level).
    std::optional<std::vector<Rat>> weight_root_coords(const Weight& w) const;
    // Same, restricted to integral coordinates.
    std::optional<RootVector> weight_to_root(const Weight& w) const;

    Rat level(const Weight& w) const;
    bool is_integral(const Weight& w) const;
    bool is_dominant(const Weight& w) const;
    bool is_regular_dominant(const Weight& w) const;
    // lambda - mu in Q+ (the dominance order).
    bool dominance_leq(const Weight& mu, const Weight& lambda) const;

    Rat bilinear(const Weight& x, const Weight& y) const;
    Rat bilinear(const RootVector& x, const RootVector& y) const;
    Rat bilinear(const Weight& x, const RootVector& y) const;
    // <w, alpha^vee> for a real root alpha.
    Rat coroot_pairing(const Weight& w, const RootVector& alpha) const;

    RootSlice roots_up_to(long long H) const;

    // Finite type only: p_j = #{alpha in positive roots : (rho, alpha^vee) = j},
    // and the exponents/degrees recovered from the differences p_j - p_{j+1}.
    std::map<long long, long long> coroot_height_counts() const;
    std::vector<long long> exponents() const;
    std::vector<long long> degrees() const;
    RootVector highest_root() const;

    std::string weight_str(const Weight& w) const;

private:
    CartanDatum() = default;
    void finish_construction();
    std::vector<RootVector> finite_positive_roots() const;

    int n_ = 0;
    AlgebraKind kind_ = AlgebraKind::Finite;
    std::string name_;
    std::vector<std::vector<long long>> A_;
    std::vector<long long> sym_;
    long long sym_max_ = 1;
    std::vector<long long> marks_;
    std::vector<long long> dual_marks_;
    // Inverse of A (finite) or of the block with row/col 0 removed (affine).
    std::vector<std::vector<Rat>> block_inv_;
    std::shared_ptr<const CartanDatum> finite_part_;
};

} // namespace kmk
