#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "weyl/errors.hpp"

namespace weyl {

/// Small dense square integer matrix, row-major. Used for reflections s_i
/// and for ordered bases of Z^n (columns are the basis vectors).
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
        IntMatrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) throw dimension_mismatch("integer matrix is not square");
            for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    std::vector<std::int64_t> column(std::size_t j) const {
        std::vector<std::int64_t> c(n_);
        for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.n_ != b.n_) throw dimension_mismatch("integer matrix sizes differ");
        IntMatrix c(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const std::int64_t x = a(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < a.n_; ++j) {
                    std::int64_t t = 0;
                    if (__builtin_mul_overflow(x, b(k, j), &t) || __builtin_add_overflow(c(i, j), t, &c(i, j)))
                        throw arithmetic_overflow("integer matrix entry");
                }
            }
        return c;
    }

    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix c = a;
        if (a.n_ != b.n_) throw dimension_mismatch("integer matrix sizes differ");
        for (std::size_t k = 0; k < c.a_.size(); ++k)
            if (__builtin_sub_overflow(c.a_[k], b.a_[k], &c.a_[k])) throw arithmetic_overflow("integer matrix entry");
        return c;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

    /// Bareiss fraction-free elimination; exact for the small entries used here.
    std::int64_t determinant() const {
        if (n_ == 0) return 1;
        std::vector<std::int64_t> m = a_;
        std::int64_t sign = 1;
        std::int64_t prev = 1;
        for (std::size_t k = 0; k + 1 < n_; ++k) {
            if (m[k * n_ + k] == 0) {
                std::size_t p = k + 1;
                while (p < n_ && m[p * n_ + k] == 0) ++p;
                if (p == n_) return 0;
                for (std::size_t j = 0; j < n_; ++j) std::swap(m[k * n_ + j], m[p * n_ + j]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n_; ++i)
                for (std::size_t j = k + 1; j < n_; ++j)
                    m[i * n_ + j] = (m[i * n_ + j] * m[k * n_ + k] - m[i * n_ + k] * m[k * n_ + j]) / prev;
            prev = m[k * n_ + k];
        }
        return sign * m[(n_ - 1) * n_ + (n_ - 1)];
    }

    /// Rank over Q by fraction-free row reduction.
    std::size_t rank() const {
        std::vector<std::int64_t> m = a_;
        std::size_t r = 0;
        for (std::size_t c = 0; c < n_ && r < n_; ++c) {
            std::size_t p = r;
            while (p < n_ && m[p * n_ + c] == 0) ++p;
            if (p == n_) continue;
            for (std::size_t j = 0; j < n_; ++j) std::swap(m[r * n_ + j], m[p * n_ + j]);
            for (std::size_t i = r + 1; i < n_; ++i) {
                const std::int64_t f = m[i * n_ + c];
                if (f == 0) continue;
                const std::int64_t piv = m[r * n_ + c];
                for (std::size_t j = 0; j < n_; ++j) m[i * n_ + j] = m[i * n_ + j] * piv - f * m[r * n_ + j];
            }
            ++r;
        }
        return r;
    }

    /// Renders as [[a,b],[c,d]].
    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < n_; ++i) {
            out += i ? ",[" : "[";
            for (std::size_t j = 0; j < n_; ++j) {
                if (j) out += ',';
                out += std::to_string((*this)(i, j));
            }
            out += ']';
        }
        return out + "]";
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_string(); }

private:
    std::size_t n_ = 0;
    std::vector<std::int64_t> a_;
};

} // namespace weyl
