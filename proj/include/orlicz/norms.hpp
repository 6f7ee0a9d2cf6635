#pragma once

#include <cstdint>

#include "orlicz/grid.hpp"
#include "orlicz/weight.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

// Quasi-norm value with its bisection bracket. The reported value is the
// upper endpoint, so the modular constraint is satisfied at it; finite is
// false only when the modular stays above 1 for every scale up to 2^64.
struct NormResult {
    double value = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    std::int64_t evaluations = 0;
    bool finite = true;
};

// sup_t phi(t) |{ |g| / b > t }| evaluated exactly on the profile levels:
// the measure is constant between levels and phi is left-continuous, so the
// supremum is max_k phi(v_k / b) * M_k. Empty profile gives 0.
double weak_modular(const DistributionProfile& profile, const YoungFunction& phi, double b);

// Luxemburg-type scale: inf { b > 0 : weak_modular(...) <= 1 } of the
// weighted samples u(x) f(x), located by doubling/halving bracket expansion
// (caps 2^±64) and bisection to relative width 1e-12.
NormResult weak_orlicz_norm(const YoungFunction& phi, const Weight& u, const GridFunction& f);

// sup_t t |{ |u f| > t }|^{1/p} = max_k v_k M_k^{1/p}; exact on profiles,
// no bisection.
NormResult weak_lebesgue_norm(double p, const Weight& u, const GridFunction& f);

// Whether the modular at scale (norm + eps) stays <= 1; holds for every
// eps > 0 when the norm is finite.
bool modular_bound_check(const YoungFunction& phi, const Weight& u, const GridFunction& f,
                         double eps);

}  // namespace orlicz
