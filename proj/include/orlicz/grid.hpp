#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "orlicz/common.hpp"
#include "orlicz/weight.hpp"

namespace orlicz {

// Regular grid over the box [-R, R]^n; cells are indexed lexicographically
// by their integer multi-index, axis 0 slowest. Cell centers sit at
// -R + (i + 1/2) * (2R/m).
struct GridSpec {
    int n;
    double half_width;
    std::int64_t cells_per_axis;

    GridSpec(int n_, double half_width_, std::int64_t cells_per_axis_);

    double cell_width() const { return 2.0 * half_width / double(cells_per_axis); }
    double cell_volume() const;
    std::int64_t total_cells() const;
    Point center(std::int64_t flat) const;

    friend bool operator==(const GridSpec& a, const GridSpec& b) {
        return a.n == b.n && a.half_width == b.half_width && a.cells_per_axis == b.cells_per_axis;
    }
};

struct Ball {
    Point center{};
    double radius = 1.0;
    int n = 1;

    Ball(Point center_, double radius_, int n_);
    bool contains(const Point& x) const;  // open ball, strict
    double volume() const;
    std::string describe() const;
};

// |B(a, r)| in R^n: 2r, pi r^2, (4/3) pi r^3.
double ball_volume(int n, double r);

// Sampled function: one value per cell, all finite.
class GridFunction {
public:
    GridFunction(GridSpec spec, std::vector<double> values);

    const GridSpec& spec() const { return spec_; }
    const std::vector<double>& values() const { return values_; }

private:
    GridSpec spec_;
    std::vector<double> values_;
};

// Expression catalog for sampling.
struct IndicatorExpr {
    Ball ball;
};
struct PowerDecayExpr {
    double alpha;  // |x|^{-alpha}; the singularity is capped at radius = half cell width
};
struct GaussianExpr {
    double sigma;  // exp(-|x|^2 / (2 sigma^2))
};
struct ScaleExpr;
struct SumExpr;
using FuncExpr = std::variant<IndicatorExpr, PowerDecayExpr, GaussianExpr, ScaleExpr, SumExpr>;
struct ScaleExpr {
    double factor;
    std::shared_ptr<const FuncExpr> inner;
};
struct SumExpr {
    std::vector<std::shared_ptr<const FuncExpr>> terms;
};

FuncExpr make_indicator(Ball ball);
FuncExpr make_power_decay(double alpha);
FuncExpr make_gaussian(double sigma);
FuncExpr make_scale(double factor, FuncExpr inner);
FuncExpr make_sum(std::vector<FuncExpr> terms);
std::string describe_expr(const FuncExpr& e);

// Pointwise evaluation; clamp_radius is the power-decay cap (the sampler
// passes half the cell width, and reports it through powerdecay_clamp).
double eval_expr(const FuncExpr& e, const Point& x, int n, double clamp_radius);

// The cap radius used when sampling power decays on this grid.
inline double powerdecay_clamp(const GridSpec& spec) { return 0.5 * spec.cell_width(); }

GridFunction sample(const FuncExpr& expr, const GridSpec& spec);

// Pointwise u(center) * f and f / u(center).
GridFunction apply_weight(const GridFunction& f, const Weight& u);
GridFunction divide_by_weight(const GridFunction& f, const Weight& u);

GridFunction pointwise_product(const GridFunction& f, const GridFunction& g);
GridFunction pointwise_sum(const GridFunction& f, const GridFunction& g);
GridFunction scale_values(const GridFunction& f, double c);

// Zeroes every cell whose center lies outside the (open) ball.
GridFunction restrict_to_ball(const GridFunction& f, const Ball& ball);

// g(y) = f(y - shift), shift given in whole cells per axis. Nonzero cells
// pushed past the box raise std::invalid_argument naming the clipped mass.
GridFunction translate(const GridFunction& f, const std::array<std::int64_t, 3>& shift_cells);

// Physical offset corresponding to a lattice shift.
Point shift_point(const GridSpec& spec, const std::array<std::int64_t, 3>& shift_cells);

struct DistributionProfile {
    struct Level {
        double value;    // v_k, strictly increasing
        double measure;  // |{ |g| >= v_k }|, strictly decreasing
    };
    std::vector<Level> levels;
    bool empty() const { return levels.empty(); }
};

// Superlevel profile of |g| over the distinct nonzero sampled values.
DistributionProfile distribution_profile(const GridFunction& g);

// |{ |g| > t }| (strict), as cell count times cell volume.
double superlevel_measure(const GridFunction& g, double t);

// Deterministic batch of sums of scaled bumps and gaussians, for seeded
// verification sweeps.
std::vector<GridFunction> seeded_sample_batch(const GridSpec& spec, int count, std::uint64_t seed);
std::vector<FuncExpr> seeded_expression_batch(const GridSpec& spec, int count, std::uint64_t seed);

}  // namespace orlicz
