#ifndef VIZING_EPS_HPP
#define VIZING_EPS_HPP

#include <numeric>
#include <stdexcept>
#include <string>

namespace vizing {

/// Exact rational slack parameter. Colour ranges of the form
/// ceil((1+eps)*d) are computed in integer arithmetic so that range
/// boundaries never depend on floating-point rounding.
struct Eps {
    long long num = 1;
    long long den = 2;

    Eps() = default;
    Eps(long long n, long long d) : num(n), den(d) {
        if (d <= 0 || n <= 0) throw std::invalid_argument("eps must be positive");
        if (n > d) throw std::invalid_argument("eps must lie in (0, 1]");
        long long g = std::gcd(num, den);
        num /= g;
        den /= g;
    }

    /// ceil((1+eps) * d)
    long long ceil_scaled(long long d) const {
        if (d <= 0) return 0;
        return ((den + num) * d + den - 1) / den;
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    /// Parses a plain decimal such as "0.1", "0.25" or "1".
    static Eps parse(const std::string& text);

    std::string str() const;
};

}  // namespace vizing

#endif
