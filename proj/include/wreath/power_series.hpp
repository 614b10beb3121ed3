#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace wreath {

/// Formal power series truncated after u^order, over any exact field-like T.
template <class T>
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order) : coeffs_(order + 1, T(0)) {}
    PowerSeries(std::size_t order, std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { coeffs_.resize(order + 1, T(0)); }

    static PowerSeries constant(std::size_t order, T c) {
        PowerSeries s(order);
        s.coeffs_[0] = std::move(c);
        return s;
    }

    /// exp(a u) = sum a^n u^n / n!
    static PowerSeries exponential(std::size_t order, const T& a) {
        PowerSeries s(order);
        T term(1);
        for (std::size_t n = 0; n <= order; ++n) {
            s.coeffs_[n] = term;
            term = term * a / T(static_cast<long long>(n + 1));
        }
        return s;
    }

    /// 1 / (1 - r u) = sum r^n u^n
    static PowerSeries geometric(std::size_t order, const T& r) {
        PowerSeries s(order);
        T term(1);
        for (std::size_t n = 0; n <= order; ++n) {
            s.coeffs_[n] = term;
            term *= r;
        }
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const T& operator[](std::size_t n) const { return coeffs_[n]; }
    const std::vector<T>& coefficients() const noexcept { return coeffs_; }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        const std::size_t order = std::min(a.order(), b.order());
        PowerSeries out(order);
        for (std::size_t i = 0; i <= order; ++i) {
            if (a.coeffs_[i] == T(0)) continue;
            for (std::size_t j = 0; i + j <= order; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return out;
    }

    friend PowerSeries operator*(const T& c, PowerSeries s) {
        for (auto& x : s.coeffs_) x *= c;
        return s;
    }

    PowerSeries pow(unsigned k) const {
        PowerSeries out = constant(order(), T(1));
        for (unsigned i = 0; i < k; ++i) out = out * *this;
        return out;
    }

private:
    std::vector<T> coeffs_;
};

}  // namespace wreath
