// Acceptance suite: one check per shipped criterion, each printing a
// [PASS]/[FAIL] line with the measured numbers. Run all criteria with no
// arguments or a single one with --criterion N. Exit code is the number of
// failing criteria (capped at 1 for ctest).

#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "orlicz/config.hpp"

using namespace orlicz;
namespace fs = std::filesystem;

namespace {

const fs::path kSourceDir = ORLICZ_SOURCE_DIR;

struct Outcome {
    bool passed;
    std::string detail;
};

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    if (!f) throw std::runtime_error("cannot read " + p.string());
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

// C1: ball-indicator norms against the closed form 1/inv(1/|B|), 2%.
Outcome criterion1() {
    const std::vector<YoungFunction> gauges = {
        YoungFunction::power(1), YoungFunction::power(2), YoungFunction::power(3),
        YoungFunction::exp_minus_one()};
    std::ostringstream os;
    bool ok = true;
    double worst = 0.0;
    for (int n : {1, 2}) {
        const GridSpec spec(n, 2.0, n == 1 ? 4096 : 1024);
        const Ball ball(Point{0, 0, 0}, 1.0, n);
        const GridFunction chi = sample(make_indicator(ball), spec);
        for (const auto& phi : gauges) {
            const double grid = weak_orlicz_norm(phi, Weight::one(n), chi).value;
            const double oracle = char_norm_oracle(phi, ball);
            const double err = rel_err(grid, oracle);
            worst = std::max(worst, err);
            if (err > 0.02) {
                ok = false;
                os << " " << phi.describe() << "/n=" << n << " err=" << err;
            }
        }
    }
    std::ostringstream detail;
    detail << "8 gauge/ball combos, worst rel. error " << worst << " (limit 0.02)" << os.str();
    return {ok, detail.str()};
}

// C2: inverse round-trip sandwich over 10^4 seeded draws.
Outcome criterion2() {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> logs(-20.0, 20.0);
    std::uniform_real_distribution<double> ps(1.0, 6.0);
    std::uniform_real_distribution<double> cs(-3.0, 3.0);
    std::uniform_int_distribution<int> pick(0, 4);

    int violations = 0;
    for (int k = 0; k < 10000; ++k) {
        YoungFunction phi = [&]() -> YoungFunction {
            switch (pick(rng)) {
                case 0:
                    return YoungFunction::power(ps(rng));
                case 1:
                    return YoungFunction::scaled_power(std::exp2(cs(rng)), ps(rng));
                case 2:
                    return YoungFunction::exp_minus_one();
                case 3:
                    return YoungFunction::power_sum(std::exp2(cs(rng)), ps(rng),
                                                    std::exp2(cs(rng)), ps(rng));
                default:
                    return YoungFunction::tabulated({{0, 0}, {0.5, 0.25}, {1, 1}, {2, 3}, {4, 9}});
            }
        }();
        const double s = std::exp2(logs(rng));
        if (!(phi(generalized_inverse(phi, s)) <= s * (1.0 + 1e-9))) ++violations;
        if (!(s <= generalized_inverse(phi, phi(s)) * (1.0 + 1e-9))) ++violations;
    }
    std::ostringstream detail;
    detail << "10000 draws, " << violations << " violations";
    return {violations == 0, detail.str()};
}

// C3: weak Orlicz with a power gauge equals weak Lebesgue to 1e-9.
Outcome criterion3() {
    const GridSpec spec(1, 2.0, 512);
    const std::vector<Weight> weights = {Weight::one(1), Weight::exp_norm(1, 1),
                                         Weight::poly_norm(2, 1)};
    const auto batch = seeded_sample_batch(spec, 100, 3);
    double worst = 0.0;
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
        const auto phi = YoungFunction::power(p);
        for (std::size_t i = 0; i < batch.size(); ++i) {
            const auto& u = weights[i % weights.size()];
            const double a = weak_orlicz_norm(phi, u, batch[i]).value;
            const double b = weak_lebesgue_norm(p, u, batch[i]).value;
            if (b > 0.0) worst = std::max(worst, std::abs(a - b) / b);
        }
    }
    std::ostringstream detail;
    detail << "400 norm pairs, worst rel. difference " << worst << " (limit 1e-9)";
    return {worst <= 1e-9, detail.str()};
}

// C4: product bound with constant 2 on 50 seeded pairs.
Outcome criterion4() {
    const GridSpec spec(1, 2.0, 2048);
    const Ball X(Point{0, 0, 0}, 1.0, 1);
    const auto p1 = YoungFunction::power(1);
    const auto p2 = YoungFunction::power(2);
    const auto one = Weight::one(1);
    const auto e1 = Weight::exp_norm(1, 1);
    const auto q1 = Weight::poly_norm(1, 1);
    const auto q2 = Weight::poly_norm(2, 1);
    const std::vector<std::array<Weight, 3>> triples = {
        {one, one, one},
        {e1, one, one},
        {e1, q2, Weight::product(e1, q2)},
        {q1, q1, q2},
    };

    const auto batch = seeded_sample_batch(spec, 100, 4);
    int violations = 0;
    double worst = 0.0;
    for (int pair = 0; pair < 50; ++pair) {
        const auto& tr = triples[std::size_t(pair) % triples.size()];
        const auto rep = verify_holder(p2, p2, p1, tr[0], tr[1], tr[2],
                                       batch[std::size_t(2 * pair)],
                                       batch[std::size_t(2 * pair + 1)], X);
        if (rep.status != VerificationReport::Status::verified ||
            rep.max_violation_ratio > 1.0)
            ++violations;
        worst = std::max(worst, rep.max_violation_ratio);
    }
    std::ostringstream detail;
    detail << "50 seeded pairs, worst ratio lhs/(2*n1*n2) = " << worst << ", " << violations
           << " violations";
    return {violations == 0, detail.str()};
}

// C5: every shipped inclusion config verifies, including the sharp
// scaled-power pair with constant 2.
Outcome criterion5() {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(kSourceDir / "configs" / "inclusion"))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());

    if (files.size() < 12) return {false, "expected at least 12 configs, found " +
                                              std::to_string(files.size())};
    bool ok = true;
    bool saw_sharp_pair = false;
    double worst = 0.0;
    std::ostringstream os;
    for (const auto& path : files) {
        const auto parsed = parse_config(slurp(path));
        if (!parsed.ok()) {
            ok = false;
            os << " " << path.filename().string() << " failed to parse;";
            continue;
        }
        const auto outcome = run_command(*parsed.config, 0);
        const double ratio = outcome.report["max_violation_ratio"].is_null()
                                 ? std::numeric_limits<double>::quiet_NaN()
                                 : outcome.report["max_violation_ratio"].get<double>();
        worst = std::max(worst, ratio);
        if (outcome.exit_code != 0 || !(ratio <= 1.0 + 1e-6)) {
            ok = false;
            os << " " << path.filename().string() << " ratio=" << ratio << ";";
        }
        if (path.filename() == "07_orlicz_power2_scaledpower.json") {
            const double c1 = outcome.report["constants"]["C1"].get<double>();
            if (std::abs(c1 - 2.0) > 1e-9) {
                ok = false;
                os << " sharp pair C1=" << c1 << " (expected 2);";
            } else {
                saw_sharp_pair = true;
            }
        }
    }
    if (!saw_sharp_pair) ok = false;
    std::ostringstream detail;
    detail << files.size() << " configs, worst max_violation_ratio " << worst
           << ", sharp scaled-power pair " << (saw_sharp_pair ? "present" : "MISSING")
           << os.str();
    return {ok, detail.str()};
}

// C6: indicator-norm ratios over the radius ladder kill both inclusion
// directions for exponents 1 and 2.
Outcome criterion6() {
    const auto rep = probe_no_global_inclusion(1.0, 2.0, Weight::one(1));
    const double first = rep.witnesses.front().lhs / rep.witnesses.front().rhs;
    const double last = rep.witnesses.back().lhs / rep.witnesses.back().rhs;
    const double want_first = std::pow(std::exp2(-10.0) * 2.0, -0.5);
    const double want_last = std::pow(std::exp2(10.0) * 2.0, -0.5);
    const bool ok = rep.passed() && first > 20.0 && last < 0.05 &&
                    rel_err(first, want_first) < 1e-9 && rel_err(last, want_last) < 1e-9;
    std::ostringstream detail;
    detail << "ratio " << first << " at r=2^-10 (need > 20), " << last
           << " at r=2^10 (need < 0.05), closed form (2r)^{-1/2}";
    return {ok, detail.str()};
}

// C7: finite-ball inclusion for exponents (2, 1) with constant 2*sqrt(2).
Outcome criterion7() {
    const GridSpec spec(1, 2.0, 4096);
    const Ball X(Point{0, 0, 0}, 1.0, 1);
    const auto tests = seeded_sample_batch(spec, 20, 7);
    const auto rep = verify_ball_inclusion_lebesgue(2.0, 1.0, Weight::one(1), Weight::one(1), X,
                                                    spec, tests);
    const bool constant_ok = rel_err(rep.constant_used, 2.0 * std::sqrt(2.0)) < 1e-12;
    std::ostringstream detail;
    detail << "constant " << rep.constant_used << " (2*sqrt(2)), 20 seeded tests, worst ratio "
           << rep.max_violation_ratio << " (limit 1+1e-6)";
    return {rep.passed() && constant_ok && rep.max_violation_ratio <= 1.0 + 1e-6, detail.str()};
}

// C8: translation upper bound under e^{|x|}, plus exact invariance for u=1.
Outcome criterion8() {
    const GridSpec spec(1, 4.0, 1024);
    const auto chi = sample(make_indicator(Ball(Point{0, 0, 0}, 1.0, 1)), spec);
    const auto phi = YoungFunction::power(2);
    const std::vector<std::array<std::int64_t, 3>> shifts = {
        {64, 0, 0}, {-64, 0, 0}, {128, 0, 0}, {-128, 0, 0},
        {192, 0, 0}, {-192, 0, 0}, {256, 0, 0}, {-256, 0, 0}};

    const auto weighted = verify_translation_bounds(phi, Weight::exp_norm(1, 1), chi, shifts);
    const auto invariant = verify_translation_bounds(phi, Weight::one(1), chi, shifts);
    bool exact = invariant.passed();
    for (const auto& w : invariant.witnesses)
        if (w.lhs != invariant.constant_used) exact = false;

    std::ostringstream detail;
    detail << "8 shifts, worst ratio ||L_x f||/(u(x)||f||) = " << weighted.max_violation_ratio
           << " (limit 1+1e-6); u=1 invariance " << (exact ? "exact" : "BROKEN");
    return {weighted.passed() && exact, detail.str()};
}

// C9: |x|^{-1/2} on the line should land on the continuum weak-L2 value
// sqrt(2) within 2% at m = 4096.
Outcome criterion9() {
    const GridSpec spec(1, 2.0, 4096);
    const auto pd = sample(make_power_decay(0.5), spec);
    const double norm = weak_lebesgue_norm(2.0, Weight::one(1), pd).value;
    const double want = std::sqrt(2.0);
    const double err = rel_err(norm, want);
    std::ostringstream detail;
    detail << "measured " << norm << ", continuum value " << want << ", rel. error " << err
           << " (limit 0.02)";
    if (err > 0.02) {
        const auto prof = distribution_profile(pd);
        const auto& top = prof.levels.back();
        detail << "; center sampling puts the cap value " << top.value << " on measure "
               << top.measure << ", whose level contributes v*sqrt(M) = "
               << top.value * std::sqrt(top.measure) << " independent of m";
    }
    return {err <= 0.02, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::strcmp(argv[i], "--criterion") == 0) only = std::atoi(argv[i + 1]);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"C1 ball-indicator norms match the closed form", criterion1},
        {"C2 inverse round-trip sandwich, 10^4 draws", criterion2},
        {"C3 power-gauge Orlicz/Lebesgue agreement", criterion3},
        {"C4 product bound with constant 2", criterion4},
        {"C5 shipped inclusion configs verify", criterion5},
        {"C6 no global inclusion across exponents", criterion6},
        {"C7 finite-ball inclusion, constant 2*sqrt(2)", criterion7},
        {"C8 translation upper bound u(x)||f||", criterion8},
        {"C9 power-decay weak-L2 norm at m=4096", criterion9},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && int(i) + 1 != only) continue;
        Outcome out{false, ""};
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (out.passed ? "[PASS] " : "[FAIL] ") << criteria[i].first << " — "
                  << out.detail << "\n";
        if (!out.passed) ++failures;
    }
    return failures > 0 ? 1 : 0;
}
