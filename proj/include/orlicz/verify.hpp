#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orlicz/norms.hpp"

namespace orlicz {

// Outcome of one claim check. The violation ratio is normalized so passing
// always means ratio <= 1 + 1e-6: for norm inequalities it is
// lhs / (constant * rhs); for closed-form agreement it is
// relative error / tolerance.
struct VerificationReport {
    enum class Status { verified, failed, precondition_unmet };

    struct Witness {
        std::string input;
        double lhs = 0.0;
        double rhs = 0.0;
    };

    std::string claim;
    Status status = Status::failed;
    double constant_used = 0.0;
    double max_violation_ratio = 0.0;
    std::vector<Witness> witnesses;
    std::vector<std::pair<std::string, double>> constants;  // named pieces, e.g. C1, C2
    std::vector<std::string> notes;

    bool passed() const { return status == Status::verified; }
};

// Closed-form quasi-norm of a ball indicator: 1 / inv_phi(1 / |B|).
double char_norm_oracle(const YoungFunction& phi, const Ball& ball);

// Samples the indicator divided by u, runs it through the weighted norm
// machinery (where the weight cancels pointwise) and compares against the
// closed form; passes within max(2%, 4n/m). Claim "lem2.2".
VerificationReport verify_char_norm(const YoungFunction& phi, const Weight& u, const Ball& ball,
                                    const GridSpec& spec);

// Same-exponent inclusion between weighted weak Lebesgue spaces: requires
// u1 dominated by u2 (constant C from the sweep) and checks
// ||f||_{p,u1} <= C ||f||_{p,u2} per test. Claim "thm2.1".
VerificationReport verify_inclusion_lebesgue(double p, const Weight& u1, const Weight& u2,
                                             const std::vector<GridFunction>& tests,
                                             const std::vector<std::string>& test_names = {});

// Weighted weak Orlicz inclusion: requires phi1 preceding phi2 (C1) and u1
// dominated by u2 (C2), then checks ||f||_{phi1,u1} <= C1 C2 ||f||_{phi2,u2}.
// Equal weights recover the single-weight statement (C2 = 1); the claim is
// "thm2.3" in that case and "thm2.5" otherwise.
VerificationReport verify_inclusion_orlicz(const YoungFunction& phi1, const YoungFunction& phi2,
                                           const Weight& u1, const Weight& u2,
                                           const std::vector<GridFunction>& tests,
                                           const std::vector<std::string>& test_names = {});

// Translation bound ||L_x f|| <= u(x) ||f|| for each lattice shift; needs a
// submultiplicative weight and a doubling gauge. Also reports, without
// asserting, the empirical two-sided constant max(u(x)/||L_x f||,
// ||L_x f||/u(x)). Claim "lem2.6".
VerificationReport verify_translation_bounds(const YoungFunction& phi, const Weight& u,
                                             const GridFunction& f,
                                             const std::vector<std::array<std::int64_t, 3>>& shifts);

// Two-function product bound on a ball: ||f1 f2||_{phi3,u3} <=
// 2 ||f1||_{phi1,u1} ||f2||_{phi2,u2}, all functions restricted to X.
// Preconditions: the inverse-product bound on the gauges and u3 <= u1 u2 on
// the cell centers inside X. Claim "holder3.1".
VerificationReport verify_holder(const YoungFunction& phi1, const YoungFunction& phi2,
                                 const YoungFunction& phi3, const Weight& u1, const Weight& u2,
                                 const Weight& u3, const GridFunction& f1, const GridFunction& f2,
                                 const Ball& X);

// Finite-ball inclusion with constant 2 / inv_phiH(1 / |X|): checks
// ||f||_{phi2,u2,X} <= const * ||f||_{phi1,u1,X}. Preconditions:
// inv_phi1 * inv_phiH <= inv_phi2, uQ <= 1 on X, u1 <= uQ u2 on X.
// Claim "cor3.2".
VerificationReport verify_ball_inclusion(const YoungFunction& phi1, const YoungFunction& phi2,
                                         const YoungFunction& phiH, const Weight& u1,
                                         const Weight& u2, const Weight& uQ, const Ball& X,
                                         const GridSpec& spec,
                                         const std::vector<GridFunction>& tests,
                                         const std::vector<std::string>& test_names = {});

// Exponent form: p1 > p2 >= 1 and u1 <= u2 on X derive the auxiliary gauge
// t^{p1 p2 / (p1 - p2)} and the quotient weight u1/u2 automatically.
// Claim "cor3.3".
VerificationReport verify_ball_inclusion_lebesgue(double p1, double p2, const Weight& u1,
                                                  const Weight& u2, const Ball& X,
                                                  const GridSpec& spec,
                                                  const std::vector<GridFunction>& tests,
                                                  const std::vector<std::string>& test_names = {});

// Ball-indicator norm ratios ||chi_B||_{p2,u} / ||chi_B||_{p1,u} =
// |B|^{1/p2 - 1/p1} over radii 2^-10 .. 2^10. Certifies that no constant
// works in either direction once the ratios exceed 20 and drop below 0.05.
// Claim "remark2.5".
VerificationReport probe_no_global_inclusion(double p1, double p2, const Weight& u);

}  // namespace orlicz
