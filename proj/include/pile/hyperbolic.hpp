#pragma once

#include <cmath>
#include <stdexcept>

// Overflow-safe evaluation of the hyperbolic ratios that appear in the
// closed-form pile response. Arguments up to ~700 must stay finite, so
// every ratio is rewritten in terms of exp() of non-positive arguments.

namespace pile {

// atanh via its log form. The domain check is explicit and strict: callers
// decide existence questions with inequalities before calling, never by
// clamping the argument.
inline double checked_atanh(double a) {
    if (!(std::abs(a) < 1.0)) {
        throw std::domain_error("atanh argument out of (-1, 1)");
    }
    return 0.5 * std::log((1.0 + a) / (1.0 - a));
}

// sinh(a)/cosh(b) for b >= 0 and |a| <= b (up to rounding slack).
inline double sinh_over_cosh(double a, double b) {
    return (std::exp(a - b) - std::exp(-a - b)) / (1.0 + std::exp(-2.0 * b));
}

// cosh(a)/cosh(b) for b >= 0 and |a| <= b.
inline double cosh_over_cosh(double a, double b) {
    return (std::exp(a - b) + std::exp(-a - b)) / (1.0 + std::exp(-2.0 * b));
}

// cosh(a)/sinh(b) for b > 0 and 0 <= a <= b.
inline double cosh_over_sinh(double a, double b) {
    return (std::exp(a - b) + std::exp(-a - b)) / (1.0 - std::exp(-2.0 * b));
}

// sinh(a)/sinh(b) for b > 0 and 0 <= a <= b.
inline double sinh_over_sinh(double a, double b) {
    return (std::exp(a - b) - std::exp(-a - b)) / (1.0 - std::exp(-2.0 * b));
}

// 1/sinh(t) for t > 0.
inline double inv_sinh(double t) {
    return 2.0 * std::exp(-t) / (1.0 - std::exp(-2.0 * t));
}

// 1 - tanh(t) without cancellation for large t.
inline double one_minus_tanh(double t) {
    const double e = std::exp(-2.0 * t);
    return 2.0 * e / (1.0 + e);
}

}  // namespace pile
