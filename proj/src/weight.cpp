#include "orlicz/weight.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace orlicz {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_dim(int n) {
    if (n < 1 || n > 3) throw std::invalid_argument("weight dimension must be 1, 2 or 3");
}

}  // namespace

Weight Weight::one(int n) {
    require_dim(n);
    return Weight(OneWeight{}, n);
}

Weight Weight::exp_norm(double a, int n) {
    require_dim(n);
    if (!(a >= 0.0) || !std::isfinite(a))
        throw std::invalid_argument("expnorm weight requires a >= 0");
    return Weight(ExpNormWeight{a}, n);
}

Weight Weight::poly_norm(double a, int n) {
    require_dim(n);
    if (!(a >= 0.0) || !std::isfinite(a))
        throw std::invalid_argument("polynorm weight requires a >= 0");
    return Weight(PolyNormWeight{a}, n);
}

Weight Weight::gauss_exp(double a, int n) {
    require_dim(n);
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::invalid_argument("gaussexp weight requires a > 0");
    return Weight(GaussExpWeight{a}, n);
}

Weight Weight::product(Weight w1, Weight w2) {
    if (w1.dimension() != w2.dimension())
        throw std::invalid_argument("product weight factors must share the dimension");
    const int n = w1.dimension();
    return Weight(ProductWeight{std::make_shared<const Weight>(std::move(w1)),
                                std::make_shared<const Weight>(std::move(w2))},
                  n);
}

double Weight::operator()(const Point& x) const {
    for (int i = 0; i < n_; ++i)
        if (!std::isfinite(x[i])) throw std::domain_error("weight argument must be finite");
    const double r = euclid_norm(x, n_);
    return std::visit(
        [&](const auto& w) -> double {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, OneWeight>) {
                return 1.0;
            } else if constexpr (std::is_same_v<W, ExpNormWeight>) {
                return std::exp(w.a * r);
            } else if constexpr (std::is_same_v<W, PolyNormWeight>) {
                return std::pow(1.0 + r, w.a);
            } else if constexpr (std::is_same_v<W, GaussExpWeight>) {
                return std::exp(w.a * r * r);
            } else {
                return (*w.lhs)(x) * (*w.rhs)(x);
            }
        },
        v_);
}

std::string Weight::describe() const {
    std::ostringstream os;
    std::visit(
        [&](const auto& w) {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, OneWeight>) {
                os << "one";
            } else if constexpr (std::is_same_v<W, ExpNormWeight>) {
                os << "expnorm(a=" << w.a << ")";
            } else if constexpr (std::is_same_v<W, PolyNormWeight>) {
                os << "polynorm(a=" << w.a << ")";
            } else if constexpr (std::is_same_v<W, GaussExpWeight>) {
                os << "gaussexp(a=" << w.a << ")";
            } else {
                os << "product(" << w.lhs->describe() << "," << w.rhs->describe() << ")";
            }
        },
        v_);
    os << "/n=" << n_;
    return os.str();
}

SubmultiplicativityReport check_submultiplicative(const Weight& u, int samples,
                                                  std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("check_submultiplicative needs samples >= 1");
    SubmultiplicativityReport rep;
    rep.samples = samples;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-rep.box_half_width, rep.box_half_width);
    const int n = u.dimension();
    for (int k = 0; k < samples; ++k) {
        Point x{}, y{}, sum{};
        for (int i = 0; i < n; ++i) {
            x[i] = coord(rng);
            y[i] = coord(rng);
            sum[i] = x[i] + y[i];
        }
        if (u(sum) > u(x) * u(y) * (1.0 + k_ineq_slack)) {
            rep.passed = false;
            rep.counterexample = {x, y};
            return rep;
        }
    }
    return rep;
}

namespace {

std::vector<Point> probe_directions(int n) {
    std::vector<Point> dirs;
    if (n == 1) {
        dirs.push_back({1.0, 0.0, 0.0});
        dirs.push_back({-1.0, 0.0, 0.0});
        return dirs;
    }
    if (n == 2) {
        for (int k = 0; k < 16; ++k) {
            const double a = 2.0 * M_PI * k / 16.0;
            dirs.push_back({std::cos(a), std::sin(a), 0.0});
        }
        return dirs;
    }
    for (int sx = -1; sx <= 1; ++sx)
        for (int sy = -1; sy <= 1; ++sy)
            for (int sz = -1; sz <= 1; ++sz) {
                if (sx == 0 && sy == 0 && sz == 0) continue;
                Point d{double(sx), double(sy), double(sz)};
                const double len = euclid_norm(d, 3);
                for (auto& c : d) c /= len;
                dirs.push_back(d);
            }
    return dirs;
}

}  // namespace

DominationResult check_dominates(const Weight& u1, const Weight& u2) {
    if (u1.dimension() != u2.dimension())
        throw std::invalid_argument("check_dominates requires matching dimensions");
    const int n = u1.dimension();
    DominationResult out;
    out.probe_note = "radial (2048 radii per direction) + 13^n lattice, R in {1,4,16,64}";

    const auto dirs = probe_directions(n);
    double cum_max = -kInf;
    auto visit = [&](const Point& x) {
        const double r = u1(x) / u2(x);
        if (r > cum_max) {
            cum_max = r;
            out.witness = x;
        }
    };

    visit(Point{0.0, 0.0, 0.0});
    const double radii[] = {1.0, 4.0, 16.0, 64.0};
    for (double R : radii) {
        for (const auto& d : dirs) {
            for (int k = 1; k <= 2048; ++k) {
                const double r = R * k / 2048.0;
                visit(Point{d[0] * r, d[1] * r, d[2] * r});
            }
        }
        const int half = 6;
        Point x{};
        for (int i = -half; i <= half; ++i) {
            x[0] = R * i / half;
            if (n == 1) {
                visit(x);
                continue;
            }
            for (int j = -half; j <= half; ++j) {
                x[1] = R * j / half;
                if (n == 2) {
                    visit(x);
                    continue;
                }
                for (int k = -half; k <= half; ++k) {
                    x[2] = R * k / half;
                    visit(x);
                }
            }
        }
        out.trace.push_back({R, cum_max});
    }

    if (std::isinf(cum_max)) {
        out.status = DominationResult::Status::growth;
        return out;
    }
    const double last = out.trace[3][1];
    const double prev = out.trace[2][1];
    if (last - prev < 1e-3 * last) {
        out.status = DominationResult::Status::holds;
        out.constant = last;
        return out;
    }
    bool monotone = true;
    for (int i = 0; i + 1 < 4; ++i) {
        if (!(out.trace[i + 1][1] - out.trace[i][1] > 1e-3 * out.trace[i + 1][1])) {
            monotone = false;
            break;
        }
    }
    out.status = monotone ? DominationResult::Status::growth : DominationResult::Status::undetermined;
    return out;
}

}  // namespace orlicz
