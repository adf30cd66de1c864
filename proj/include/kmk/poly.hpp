#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace kmk {

/* Univariate polynomial in t with exact integer coefficients. Stored as an
 * ascending coefficient vector with no trailing zeros; the zero polynomial is
 * the empty vector. */
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(long long v) { return v == 0 ? Poly() : Poly({v}); }
    static Poly one() { return constant(1); }
    // c * t^k
    static Poly monomial(long long c, int k) {
        if (c == 0) return Poly();
        std::vector<long long> v(static_cast<size_t>(k) + 1, 0);
        v.back() = c;
        return Poly(std::move(v));
    }
    static Poly t() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    long long coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
        return c_[static_cast<size_t>(k)];
    }

    const std::vector<long long>& coeffs() const { return c_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<long long> v(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<long long> v(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
        return Poly(std::move(v));
    }
    Poly operator-() const {
        std::vector<long long> v(c_);
        for (auto& x : v) x = -x;
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<long long> v(a.c_.size() + b.c_.size() - 1, 0);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }
    friend Poly operator*(long long s, const Poly& p) {
        if (s == 0) return Poly();
        std::vector<long long> v(p.c_);
        for (auto& x : v) x *= s;
        return Poly(std::move(v));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Multiplication by t^k.
    Poly shifted(int k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<long long> v(c_.size() + static_cast<size_t>(k), 0);
        for (size_t i = 0; i < c_.size(); ++i) v[i + static_cast<size_t>(k)] = c_[i];
        return Poly(std::move(v));
    }

    // Drop all terms of degree > cap (cap < 0 leaves the polynomial unchanged).
    Poly truncated(int cap) const {
        if (cap < 0 || degree() <= cap) return *this;
        std::vector<long long> v(c_.begin(), c_.begin() + cap + 1);
        return Poly(std::move(v));
    }

    long long evaluate_at(long long x) const {
        long long acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // P(t) -> P(-t)
    Poly negate_t() const {
        std::vector<long long> v(c_);
        for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
        return Poly(std::move(v));
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            long long a = coeff(k);
            if (a == 0) continue;
            if (!out.empty()) out += a > 0 ? " + " : " - ";
            else if (a < 0) out += "-";
            long long m = a < 0 ? -a : a;
            if (m != 1 || k == 0) out += std::to_string(m);
            if (k >= 1) {
                if (m != 1) out += "*";
                out += "t";
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<long long> c_;
};

} // namespace kmk
