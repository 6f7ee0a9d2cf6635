#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orlicz/common.hpp"

namespace orlicz {

// Convex gauges. The catalog admits only gauges that are continuous and
// strictly increasing on (0, inf), so the generalized inverse satisfies
// inv(0) = 0 and the round-trip sandwich exactly. Piecewise-linear tables
// with a flat leading segment are constructible but rejected by
// validate_young.
struct PowerGauge {
    double p;  // t^p, p >= 1
};
struct ScaledPowerGauge {
    double c;  // c * t^p, c > 0, p >= 1
    double p;
};
struct ExpMinusOneGauge {};  // e^t - 1
struct PowerSumGauge {
    double c1, p1;  // c1 * t^p1 + c2 * t^p2
    double c2, p2;
};
struct TabulatedGauge {
    // Strictly increasing abscissae starting at (0, 0); linear interpolation,
    // with the last segment's slope extrapolated beyond the final node.
    std::vector<std::array<double, 2>> nodes;
};

class YoungFunction {
public:
    using Variant =
        std::variant<PowerGauge, ScaledPowerGauge, ExpMinusOneGauge, PowerSumGauge, TabulatedGauge>;

    static YoungFunction power(double p);
    static YoungFunction scaled_power(double c, double p);
    static YoungFunction exp_minus_one();
    static YoungFunction power_sum(double c1, double p1, double c2, double p2);
    static YoungFunction tabulated(std::vector<std::array<double, 2>> nodes);

    // Pointwise evaluation; throws std::domain_error for negative or NaN t.
    // +inf is accepted and maps to the limit value.
    double operator()(double t) const;

    const Variant& variant() const { return v_; }
    std::string describe() const;

private:
    explicit YoungFunction(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

// Probe grid shared by all "for all t > 0" certifications: geometric,
// 2^-20 .. 2^20 with four points per octave (161 points). The constant
// ladder for the ordering search uses the same grid.
std::vector<double> geometric_probe_grid();

struct YoungValidation {
    bool passed = true;
    std::string failure;  // "origin", "monotone", "strict", "convexity", "growth", "nan"
    double witness_t = 0.0;
};

// Checks gauge(0) = 0, positivity and monotonicity on the probe grid,
// midpoint convexity over all probe pairs (plus node slopes for tables),
// and growth beyond 1 at the top of the grid.
YoungValidation validate_young(const YoungFunction& phi);

// inf{ r >= 0 : phi(r) > s }. Closed form for power/scaled-power/exp
// variants; otherwise bracket doubling from 1 and bisection to relative
// width 1e-12, returning the lower bracket endpoint (phi(lo) <= s holds
// exactly).
double generalized_inverse(const YoungFunction& phi, double s);

// The bracket-and-bisect route, exposed so the closed forms can be checked
// against it.
double generalized_inverse_numeric(const YoungFunction& phi, double s);

struct Delta2Report {
    bool holds = false;
    std::optional<double> K;  // smallest bound observed on the probe grid
    double witness_t = 0.0;   // maximizer of phi(2t)/phi(t)
};

// Doubling condition phi(2t) <= K phi(t), certified on the probe grid.
// The ratio is declared unbounded when it is still rising monotonically
// across the top four octaves where it stays finite.
Delta2Report check_delta2(const YoungFunction& phi);

struct PrecedesResult {
    enum class Status { found, undetermined };
    Status status = Status::undetermined;
    std::optional<double> constant;                    // smallest ladder C that works
    std::vector<std::array<double, 2>> frontier;       // (t, needed C) samples
    std::string note;
    bool found() const { return status == Status::found; }
};

// Ordering phi1(t) <= phi2(C t): returns the smallest ladder C valid at
// every probe. When the needed constant is attained at a grid edge and has
// grown by two or more ladder steps across the adjacent decade, or when no
// ladder constant works at all, the result is undetermined (never "false")
// and the frontier records the needed constant near the offending edge.
PrecedesResult check_precedes(const YoungFunction& phi1, const YoungFunction& phi2);

struct InverseProductResult {
    bool holds = false;
    double max_ratio = 0.0;  // max over probes of inv1(s)*inv2(s)/inv3(s)
    double argmax_s = 0.0;
};

// inv1(s) * inv2(s) <= inv3(s) on the probe grid.
InverseProductResult check_inverse_product(const YoungFunction& phi1, const YoungFunction& phi2,
                                           const YoungFunction& phi3);

// Transfers an inverse-side bound to the direct side: given that
// inv2(s) <= C1 * inv1(C2 s) holds at this s (checked; PreconditionError
// otherwise), sets t = inv2(s) and reports whether phi1(t/C1) <= C2 phi2(t).
bool check_inverse_transfer(const YoungFunction& phi1, const YoungFunction& phi2, double c1,
                            double c2, double s);

}  // namespace orlicz
