#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orlicz/common.hpp"

namespace orlicz {

struct OneWeight {};  // u == 1
struct ExpNormWeight {
    double a;  // e^{a |x|}, a >= 0
};
struct PolyNormWeight {
    double a;  // (1 + |x|)^a, a >= 0
};
struct GaussExpWeight {
    double a;  // e^{a |x|^2}, a > 0; not submultiplicative
};
class Weight;
struct ProductWeight {
    std::shared_ptr<const Weight> lhs, rhs;
};

// Positive weight on R^n, n in {1,2,3}. Everything here is radial, which
// the domination sweep exploits with dense radial probes.
class Weight {
public:
    using Variant =
        std::variant<OneWeight, ExpNormWeight, PolyNormWeight, GaussExpWeight, ProductWeight>;

    static Weight one(int n);
    static Weight exp_norm(double a, int n);
    static Weight poly_norm(double a, int n);
    static Weight gauss_exp(double a, int n);
    static Weight product(Weight w1, Weight w2);

    // u(x); throws std::domain_error on non-finite coordinates.
    double operator()(const Point& x) const;

    int dimension() const { return n_; }
    const Variant& variant() const { return v_; }
    std::string describe() const;

private:
    Weight(Variant v, int n) : v_(std::move(v)), n_(n) {}
    Variant v_;
    int n_;
};

struct SubmultiplicativityReport {
    bool passed = true;
    std::optional<std::pair<Point, Point>> counterexample;  // first violating (x, y)
    int samples = 0;
    double box_half_width = 16.0;
    std::uint64_t seed = 0;
};

// Seeded pairs (x, y) in [-16, 16]^n checked against u(x+y) <= u(x) u(y).
SubmultiplicativityReport check_submultiplicative(const Weight& u, int samples,
                                                  std::uint64_t seed = 0);

struct DominationResult {
    enum class Status { holds, growth, undetermined };
    Status status = Status::undetermined;
    std::optional<double> constant;  // max ratio over probes when it stabilized
    Point witness{};                 // where u1/u2 peaked
    std::vector<std::array<double, 2>> trace;  // (escalation radius, running max)
    std::string probe_note;
    bool holds() const { return status == Status::holds; }
};

// Sweeps u1/u2 over a deterministic radial-and-lattice probe set in
// [-R, R]^n, R escalating through {1, 4, 16, 64}. Stabilized running max
// (relative change < 1e-3 across the last escalation) certifies the
// constant; a max still growing at every escalation is reported as growth,
// anything else as undetermined.
DominationResult check_dominates(const Weight& u1, const Weight& u2);

}  // namespace orlicz
