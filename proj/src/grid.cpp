#include "orlicz/grid.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace orlicz {

GridSpec::GridSpec(int n_, double half_width_, std::int64_t cells_per_axis_)
    : n(n_), half_width(half_width_), cells_per_axis(cells_per_axis_) {
    if (n < 1 || n > 3) throw std::invalid_argument("grid dimension must be 1, 2 or 3");
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw std::invalid_argument("grid half width must be positive and finite");
    if (cells_per_axis < 2 || cells_per_axis % 2 != 0)
        throw std::invalid_argument("cells per axis must be an even integer >= 2");
}

double GridSpec::cell_volume() const {
    double v = 1.0;
    for (int i = 0; i < n; ++i) v *= cell_width();
    return v;
}

std::int64_t GridSpec::total_cells() const {
    std::int64_t t = 1;
    for (int i = 0; i < n; ++i) t *= cells_per_axis;
    return t;
}

Point GridSpec::center(std::int64_t flat) const {
    Point x{};
    const double h = cell_width();
    for (int axis = n - 1; axis >= 0; --axis) {
        const std::int64_t i = flat % cells_per_axis;
        flat /= cells_per_axis;
        x[axis] = -half_width + (double(i) + 0.5) * h;
    }
    return x;
}

Ball::Ball(Point center_, double radius_, int n_) : center(center_), radius(radius_), n(n_) {
    if (n < 1 || n > 3) throw std::invalid_argument("ball dimension must be 1, 2 or 3");
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("ball radius must be positive and finite");
    for (int i = 0; i < n; ++i)
        if (!std::isfinite(center[i])) throw std::invalid_argument("ball center must be finite");
}

bool Ball::contains(const Point& x) const {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double d = x[i] - center[i];
        s += d * d;
    }
    return s < radius * radius;
}

double Ball::volume() const { return ball_volume(n, radius); }

std::string Ball::describe() const {
    std::ostringstream os;
    os << "B((";
    for (int i = 0; i < n; ++i) os << (i ? "," : "") << center[i];
    os << ")," << radius << ")";
    return os.str();
}

double ball_volume(int n, double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw std::domain_error("ball volume needs r > 0");
    switch (n) {
        case 1:
            return 2.0 * r;
        case 2:
            return M_PI * r * r;
        case 3:
            return 4.0 * M_PI * r * r * r / 3.0;
        default:
            throw std::domain_error("ball volume supports n in {1,2,3}");
    }
}

GridFunction::GridFunction(GridSpec spec, std::vector<double> values)
    : spec_(spec), values_(std::move(values)) {
    if (std::int64_t(values_.size()) != spec_.total_cells())
        throw std::invalid_argument("grid function value count must equal the cell count");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("grid function values must be finite");
}

FuncExpr make_indicator(Ball ball) { return IndicatorExpr{ball}; }

FuncExpr make_power_decay(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("power decay requires alpha > 0");
    return PowerDecayExpr{alpha};
}

FuncExpr make_gaussian(double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("gaussian requires sigma > 0");
    return GaussianExpr{sigma};
}

FuncExpr make_scale(double factor, FuncExpr inner) {
    if (!std::isfinite(factor)) throw std::invalid_argument("scale factor must be finite");
    return ScaleExpr{factor, std::make_shared<const FuncExpr>(std::move(inner))};
}

FuncExpr make_sum(std::vector<FuncExpr> terms) {
    SumExpr s;
    s.terms.reserve(terms.size());
    for (auto& t : terms) s.terms.push_back(std::make_shared<const FuncExpr>(std::move(t)));
    return s;
}

std::string describe_expr(const FuncExpr& e) {
    std::ostringstream os;
    std::visit(
        [&](const auto& x) {
            using E = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<E, IndicatorExpr>) {
                os << "indicator(" << x.ball.describe() << ")";
            } else if constexpr (std::is_same_v<E, PowerDecayExpr>) {
                os << "powerdecay(alpha=" << x.alpha << ")";
            } else if constexpr (std::is_same_v<E, GaussianExpr>) {
                os << "gaussian(sigma=" << x.sigma << ")";
            } else if constexpr (std::is_same_v<E, ScaleExpr>) {
                os << x.factor << "*" << describe_expr(*x.inner);
            } else {
                os << "sum(";
                for (std::size_t i = 0; i < x.terms.size(); ++i)
                    os << (i ? "+" : "") << describe_expr(*x.terms[i]);
                os << ")";
            }
        },
        e);
    return os.str();
}

double eval_expr(const FuncExpr& e, const Point& x, int n, double clamp_radius) {
    return std::visit(
        [&](const auto& g) -> double {
            using E = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<E, IndicatorExpr>) {
                if (g.ball.n != n) throw std::invalid_argument("indicator ball dimension mismatch");
                return g.ball.contains(x) ? 1.0 : 0.0;
            } else if constexpr (std::is_same_v<E, PowerDecayExpr>) {
                const double r = std::max(euclid_norm(x, n), clamp_radius);
                return std::pow(r, -g.alpha);
            } else if constexpr (std::is_same_v<E, GaussianExpr>) {
                const double r = euclid_norm(x, n);
                return std::exp(-r * r / (2.0 * g.sigma * g.sigma));
            } else if constexpr (std::is_same_v<E, ScaleExpr>) {
                return g.factor * eval_expr(*g.inner, x, n, clamp_radius);
            } else {
                double s = 0.0;
                for (const auto& t : g.terms) s += eval_expr(*t, x, n, clamp_radius);
                return s;
            }
        },
        e);
}

GridFunction sample(const FuncExpr& expr, const GridSpec& spec) {
    const std::int64_t total = spec.total_cells();
    const double clamp = powerdecay_clamp(spec);
    std::vector<double> vals(total);
    for (std::int64_t i = 0; i < total; ++i)
        vals[std::size_t(i)] = eval_expr(expr, spec.center(i), spec.n, clamp);
    return GridFunction(spec, std::move(vals));
}

namespace {

void require_same_spec(const GridSpec& a, const GridSpec& b, const char* what) {
    if (!(a == b)) throw std::invalid_argument(std::string(what) + ": grid specs differ");
}

}  // namespace

GridFunction apply_weight(const GridFunction& f, const Weight& u) {
    if (u.dimension() != f.spec().n)
        throw std::invalid_argument("apply_weight: weight dimension mismatch");
    std::vector<double> vals(f.values());
    for (std::int64_t i = 0; i < std::int64_t(vals.size()); ++i)
        vals[std::size_t(i)] *= u(f.spec().center(i));
    return GridFunction(f.spec(), std::move(vals));
}

GridFunction divide_by_weight(const GridFunction& f, const Weight& u) {
    if (u.dimension() != f.spec().n)
        throw std::invalid_argument("divide_by_weight: weight dimension mismatch");
    std::vector<double> vals(f.values());
    for (std::int64_t i = 0; i < std::int64_t(vals.size()); ++i)
        vals[std::size_t(i)] /= u(f.spec().center(i));
    return GridFunction(f.spec(), std::move(vals));
}

GridFunction pointwise_product(const GridFunction& f, const GridFunction& g) {
    require_same_spec(f.spec(), g.spec(), "pointwise_product");
    std::vector<double> vals(f.values());
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] *= g.values()[i];
    return GridFunction(f.spec(), std::move(vals));
}

GridFunction pointwise_sum(const GridFunction& f, const GridFunction& g) {
    require_same_spec(f.spec(), g.spec(), "pointwise_sum");
    std::vector<double> vals(f.values());
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] += g.values()[i];
    return GridFunction(f.spec(), std::move(vals));
}

GridFunction scale_values(const GridFunction& f, double c) {
    std::vector<double> vals(f.values());
    for (auto& v : vals) v *= c;
    return GridFunction(f.spec(), std::move(vals));
}

GridFunction restrict_to_ball(const GridFunction& f, const Ball& ball) {
    if (ball.n != f.spec().n)
        throw std::invalid_argument("restrict_to_ball: dimension mismatch");
    std::vector<double> vals(f.values());
    for (std::int64_t i = 0; i < std::int64_t(vals.size()); ++i)
        if (!ball.contains(f.spec().center(i))) vals[std::size_t(i)] = 0.0;
    return GridFunction(f.spec(), std::move(vals));
}

GridFunction translate(const GridFunction& f, const std::array<std::int64_t, 3>& shift_cells) {
    const GridSpec& spec = f.spec();
    const std::int64_t m = spec.cells_per_axis;

    auto decompose = [&](std::int64_t flat, std::int64_t idx[3]) {
        for (int axis = spec.n - 1; axis >= 0; --axis) {
            idx[axis] = flat % m;
            flat /= m;
        }
    };
    auto compose = [&](const std::int64_t idx[3]) {
        std::int64_t flat = 0;
        for (int axis = 0; axis < spec.n; ++axis) flat = flat * m + idx[axis];
        return flat;
    };

    std::vector<double> out(f.values().size(), 0.0);
    double clipped_mass = 0.0;
    for (std::int64_t i = 0; i < std::int64_t(f.values().size()); ++i) {
        const double v = f.values()[std::size_t(i)];
        if (v == 0.0) continue;
        std::int64_t idx[3] = {0, 0, 0};
        decompose(i, idx);
        bool inside = true;
        for (int axis = 0; axis < spec.n; ++axis) {
            idx[axis] += shift_cells[std::size_t(axis)];
            if (idx[axis] < 0 || idx[axis] >= m) inside = false;
        }
        if (!inside) {
            clipped_mass += std::abs(v) * spec.cell_volume();
            continue;
        }
        out[std::size_t(compose(idx))] = v;
    }
    if (clipped_mass > 0.0) {
        std::ostringstream os;
        os << "translate: support leaves the box, clipped mass " << clipped_mass;
        throw std::invalid_argument(os.str());
    }
    return GridFunction(spec, std::move(out));
}

Point shift_point(const GridSpec& spec, const std::array<std::int64_t, 3>& shift_cells) {
    Point x{};
    for (int axis = 0; axis < spec.n; ++axis)
        x[axis] = double(shift_cells[std::size_t(axis)]) * spec.cell_width();
    return x;
}

DistributionProfile distribution_profile(const GridFunction& g) {
    std::vector<double> mags;
    mags.reserve(g.values().size());
    for (double v : g.values())
        if (v != 0.0) mags.push_back(std::abs(v));
    DistributionProfile prof;
    if (mags.empty()) return prof;
    std::sort(mags.begin(), mags.end());
    const double volume = g.spec().cell_volume();
    const std::size_t total = mags.size();
    for (std::size_t i = 0; i < total;) {
        const double v = mags[i];
        std::size_t j = i;
        while (j < total && mags[j] == v) ++j;
        prof.levels.push_back({v, double(total - i) * volume});  // count of |g| >= v
        i = j;
    }
    return prof;
}

double superlevel_measure(const GridFunction& g, double t) {
    if (std::isnan(t) || t < 0.0) throw std::domain_error("superlevel threshold must be >= 0");
    std::int64_t count = 0;
    for (double v : g.values())
        if (std::abs(v) > t) ++count;
    return double(count) * g.spec().cell_volume();
}

std::vector<FuncExpr> seeded_expression_batch(const GridSpec& spec, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> nterms(1, 3);
    const double R = spec.half_width;

    std::vector<FuncExpr> out;
    out.reserve(std::size_t(count));
    for (int k = 0; k < count; ++k) {
        std::vector<FuncExpr> terms;
        const int nt = nterms(rng);
        for (int t = 0; t < nt; ++t) {
            const double amp = std::exp2(4.0 * unit(rng) - 2.0);  // log-uniform in [1/4, 4]
            if (unit(rng) < 0.6) {
                const double r = (0.05 + 0.4 * unit(rng)) * R;
                Point c{};
                for (int i = 0; i < spec.n; ++i) c[i] = (2.0 * unit(rng) - 1.0) * 0.5 * R;
                terms.push_back(make_scale(amp, make_indicator(Ball(c, r, spec.n))));
            } else {
                const double sigma = (0.1 + 0.4 * unit(rng)) * R;
                terms.push_back(make_scale(amp, make_gaussian(sigma)));
            }
        }
        out.push_back(make_sum(std::move(terms)));
    }
    return out;
}

std::vector<GridFunction> seeded_sample_batch(const GridSpec& spec, int count, std::uint64_t seed) {
    std::vector<GridFunction> out;
    out.reserve(std::size_t(count));
    for (auto& e : seeded_expression_batch(spec, count, seed)) out.push_back(sample(e, spec));
    return out;
}

}  // namespace orlicz
