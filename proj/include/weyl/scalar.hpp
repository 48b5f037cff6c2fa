#pragma once

/**
 * @file scalar.hpp
 * @brief Exact scalars of the form (root of unity) x (monomial in formal parameters).
 *
 * A Scalar is u(p/r) * t_1^e_1 * ... * t_k^e_k where u(p/r) = exp(2 pi i p/r)
 * and the t_k are named parameters treated as algebraically independent
 * transcendentals. Under that assumption the set of scalars is the abelian
 * group Q/Z x Z^(names), and equality is componentwise.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weyl/errors.hpp"

namespace weyl {

/// Multiplicative order; std::nullopt means infinite.
using Order = std::optional<std::int64_t>;

namespace detail {

inline std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
    const std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
    const __int128 prod = static_cast<__int128>(a) * static_cast<__int128>(b);
    __int128 r = prod % n;
    if (r < 0) r += n;
    return static_cast<std::int64_t>(r);
}

} // namespace detail

class Scalar {
public:
    using Exponents = std::vector<std::pair<std::string, std::int64_t>>;

    /// The identity.
    Scalar() = default;

    /// u(p/r); p may be any integer, r must be positive.
    static Scalar root(std::int64_t p, std::int64_t r) {
        Scalar s;
        s.set_root(p, r);
        return s;
    }

    static Scalar minus_one() { return root(1, 2); }

    static Scalar parameter(std::string name, std::int64_t exponent = 1) {
        Scalar s;
        if (exponent != 0) s.params_.emplace_back(std::move(name), exponent);
        return s;
    }

    /// Numerator p of the reduced root fraction p/r, 0 <= p < r.
    std::int64_t root_numerator() const noexcept { return num_; }
    /// Denominator r of the reduced root fraction.
    std::int64_t root_denominator() const noexcept { return den_; }
    /// Parameter exponents sorted by name; no zero exponents.
    const Exponents& exponents() const noexcept { return params_; }

    std::int64_t exponent_of(std::string_view name) const {
        for (const auto& [n, e] : params_)
            if (n == name) return e;
        return 0;
    }

    bool is_identity() const noexcept { return num_ == 0 && params_.empty(); }
    bool is_root_of_unity() const noexcept { return params_.empty(); }

    /// Root-of-unity factor of this scalar.
    Scalar root_part() const { return root(num_, den_); }

    Scalar& operator*=(const Scalar& other) {
        // p1/r1 + p2/r2 over the common denominator lcm(r1, r2)
        const std::int64_t l = std::lcm(den_, other.den_);
        const std::int64_t p = detail::floor_mod(num_ * (l / den_) + other.num_ * (l / other.den_), l);
        set_root(p, l);

        Exponents merged;
        merged.reserve(params_.size() + other.params_.size());
        auto a = params_.begin();
        auto b = other.params_.begin();
        while (a != params_.end() || b != other.params_.end()) {
            if (b == other.params_.end() || (a != params_.end() && a->first < b->first)) {
                merged.push_back(*a++);
            } else if (a == params_.end() || b->first < a->first) {
                merged.push_back(*b++);
            } else {
                std::int64_t e = 0;
                if (__builtin_add_overflow(a->second, b->second, &e)) throw arithmetic_overflow("parameter exponent");
                if (e != 0) merged.emplace_back(a->first, e);
                ++a;
                ++b;
            }
        }
        params_ = std::move(merged);
        return *this;
    }

    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    Scalar pow(std::int64_t k) const {
        Scalar s;
        if (k == 0) return s;
        s.set_root(detail::mul_mod(num_, k, den_), den_);
        s.params_ = params_;
        for (auto& [name, e] : s.params_)
            if (__builtin_mul_overflow(e, k, &e)) throw arithmetic_overflow("parameter exponent");
        return s;
    }

    Scalar inverse() const { return pow(-1); }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    /// Infinite iff a formal parameter occurs; otherwise the root denominator.
    Order order() const {
        if (!params_.empty()) return std::nullopt;
        return den_;
    }

    friend bool operator==(const Scalar&, const Scalar&) = default;

    /// Root parts compared as (r, p), then the sorted parameter lists lexicographically.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        if (auto c = a.den_ <=> b.den_; c != 0) return c;
        if (auto c = a.num_ <=> b.num_; c != 0) return c;
        return a.params_ <=> b.params_;
    }

    std::string to_string() const {
        std::string out;
        if (num_ != 0 || params_.empty()) {
            out = num_ == 0 ? "1" : "u(" + std::to_string(num_) + "/" + std::to_string(den_) + ")";
        }
        for (const auto& [name, e] : params_) {
            if (!out.empty()) out += '*';
            out += name;
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    void set_root(std::int64_t p, std::int64_t r) {
        p = detail::floor_mod(p, r);
        if (p == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        const std::int64_t g = std::gcd(p, r);
        num_ = p / g;
        den_ = r / g;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    Exponents params_;
};

inline Scalar pow(const Scalar& a, std::int64_t k) { return a.pow(k); }

inline Order multiplicative_order(const Scalar& a) { return a.order(); }

/// Three-way comparison under the total order used for canonical forms.
inline std::strong_ordering compare(const Scalar& a, const Scalar& b) { return a <=> b; }

/// Decides [m]_q = 1 + q + ... + q^(m-1) = 0 in characteristic zero.
/// The empty sum [0]_q counts as zero.
inline bool qint_is_zero(const Scalar& q, std::int64_t m) {
    if (m == 0) return true;
    return !q.is_identity() && q.pow(m).is_identity();
}

/// Replaces every parameter named in `values` by the given scalar.
template <typename Map>
Scalar substitute(const Scalar& expr, const Map& values) {
    Scalar out = expr.root_part();
    for (const auto& [name, e] : expr.exponents()) {
        if (auto it = values.find(name); it != values.end())
            out *= it->second.pow(e);
        else
            out *= Scalar::parameter(name, e);
    }
    return out;
}

} // namespace weyl

template <>
struct std::hash<weyl::Scalar> {
    std::size_t operator()(const weyl::Scalar& s) const noexcept {
        std::size_t h = std::hash<std::int64_t>{}(s.root_numerator() * 1000003 + s.root_denominator());
        for (const auto& [name, e] : s.exponents()) {
            h ^= std::hash<std::string>{}(name) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h ^= std::hash<std::int64_t>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};
