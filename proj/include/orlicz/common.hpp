#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace orlicz {

// Points in R^n, n <= 3; unused trailing components stay zero.
using Point = std::array<double, 3>;

inline double euclid_norm(const Point& x, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += x[i] * x[i];
    return std::sqrt(s);
}

// Tolerance policy: pointwise inequality checks carry a relative slack of
// 1e-9 to absorb rounding; verification reports pass at 1e-6; bisections
// run to relative bracket width 1e-12.
inline constexpr double k_ineq_slack = 1e-9;
inline constexpr double k_report_slack = 1e-6;
inline constexpr double k_bisect_rel = 1e-12;

// Thrown when an operation's mathematical precondition fails, as opposed to
// the checked conclusion being false.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orlicz
