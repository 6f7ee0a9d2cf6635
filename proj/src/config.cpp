#include "orlicz/config.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace orlicz {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Collects field-level problems while walking the document; every message
// carries the path of the offending key.
struct Parser {
    std::vector<std::string> errors;

    void fail(const std::string& path, const std::string& msg) {
        errors.push_back(path + ": " + msg);
    }

    const json* field(const json& j, const std::string& path, const char* key, bool required) {
        if (!j.is_object()) {
            fail(path, "expected an object");
            return nullptr;
        }
        auto it = j.find(key);
        if (it == j.end()) {
            if (required) fail(path.empty() ? key : path + "." + key, "missing field");
            return nullptr;
        }
        return &*it;
    }

    std::optional<double> number(const json& j, const std::string& path) {
        if (!j.is_number()) {
            fail(path, "expected a number");
            return std::nullopt;
        }
        return j.get<double>();
    }

    std::optional<std::string> text(const json& j, const std::string& path) {
        if (!j.is_string()) {
            fail(path, "expected a string");
            return std::nullopt;
        }
        return j.get<std::string>();
    }

    template <typename F>
    auto guarded(const std::string& path, F&& make) -> std::optional<decltype(make())> {
        try {
            return make();
        } catch (const std::exception& e) {
            fail(path, e.what());
            return std::nullopt;
        }
    }

    std::optional<YoungFunction> young(const json& j, const std::string& path) {
        const json* v = field(j, path, "variant", true);
        if (!v) return std::nullopt;
        auto name = text(*v, path + ".variant");
        if (!name) return std::nullopt;
        if (*name == "power") {
            const json* p = field(j, path, "p", true);
            if (!p) return std::nullopt;
            auto pv = number(*p, path + ".p");
            if (!pv) return std::nullopt;
            return guarded(path + ".p", [&] { return YoungFunction::power(*pv); });
        }
        if (*name == "scaledpower") {
            const json* c = field(j, path, "c", true);
            const json* p = field(j, path, "p", true);
            if (!c || !p) return std::nullopt;
            auto cv = number(*c, path + ".c");
            auto pv = number(*p, path + ".p");
            if (!cv || !pv) return std::nullopt;
            return guarded(path, [&] { return YoungFunction::scaled_power(*cv, *pv); });
        }
        if (*name == "expminusone") return YoungFunction::exp_minus_one();
        if (*name == "powersum") {
            const json* c1 = field(j, path, "c1", true);
            const json* p1 = field(j, path, "p1", true);
            const json* c2 = field(j, path, "c2", true);
            const json* p2 = field(j, path, "p2", true);
            if (!c1 || !p1 || !c2 || !p2) return std::nullopt;
            auto a = number(*c1, path + ".c1"), b = number(*p1, path + ".p1");
            auto c = number(*c2, path + ".c2"), d = number(*p2, path + ".p2");
            if (!a || !b || !c || !d) return std::nullopt;
            return guarded(path, [&] { return YoungFunction::power_sum(*a, *b, *c, *d); });
        }
        if (*name == "tabulated") {
            const json* nodes = field(j, path, "nodes", true);
            if (!nodes) return std::nullopt;
            if (!nodes->is_array()) {
                fail(path + ".nodes", "expected an array of [t, value] pairs");
                return std::nullopt;
            }
            std::vector<std::array<double, 2>> pts;
            for (std::size_t i = 0; i < nodes->size(); ++i) {
                const json& row = (*nodes)[i];
                const std::string rp = path + ".nodes[" + std::to_string(i) + "]";
                if (!row.is_array() || row.size() != 2) {
                    fail(rp, "expected [t, value]");
                    return std::nullopt;
                }
                auto t = number(row[0], rp + "[0]");
                auto y = number(row[1], rp + "[1]");
                if (!t || !y) return std::nullopt;
                pts.push_back({*t, *y});
            }
            return guarded(path + ".nodes", [&] { return YoungFunction::tabulated(pts); });
        }
        fail(path + ".variant", "unknown Young function variant '" + *name + "'");
        return std::nullopt;
    }

    std::optional<Weight> weight(const json& j, const std::string& path) {
        const json* v = field(j, path, "variant", true);
        if (!v) return std::nullopt;
        auto name = text(*v, path + ".variant");
        if (!name) return std::nullopt;
        if (*name == "product") {
            const json* w1 = field(j, path, "w1", true);
            const json* w2 = field(j, path, "w2", true);
            if (!w1 || !w2) return std::nullopt;
            auto a = weight(*w1, path + ".w1");
            auto b = weight(*w2, path + ".w2");
            if (!a || !b) return std::nullopt;
            return guarded(path, [&] { return Weight::product(*a, *b); });
        }
        const json* nv = field(j, path, "n", true);
        if (!nv) return std::nullopt;
        if (!nv->is_number_integer()) {
            fail(path + ".n", "expected an integer dimension");
            return std::nullopt;
        }
        const int n = nv->get<int>();
        if (*name == "one") return guarded(path, [&] { return Weight::one(n); });
        auto param = [&](const char* key) -> std::optional<double> {
            const json* a = field(j, path, key, true);
            if (!a) return std::nullopt;
            return number(*a, path + "." + key);
        };
        if (*name == "expnorm") {
            auto a = param("a");
            if (!a) return std::nullopt;
            return guarded(path, [&] { return Weight::exp_norm(*a, n); });
        }
        if (*name == "polynorm") {
            auto a = param("a");
            if (!a) return std::nullopt;
            return guarded(path, [&] { return Weight::poly_norm(*a, n); });
        }
        if (*name == "gaussexp") {
            auto a = param("a");
            if (!a) return std::nullopt;
            return guarded(path, [&] { return Weight::gauss_exp(*a, n); });
        }
        fail(path + ".variant", "unknown weight variant '" + *name + "'");
        return std::nullopt;
    }

    std::optional<GridSpec> grid(const json& j, const std::string& path) {
        const json* n = field(j, path, "n", true);
        const json* r = field(j, path, "R", true);
        const json* m = field(j, path, "m", true);
        if (!n || !r || !m) return std::nullopt;
        if (!n->is_number_integer()) {
            fail(path + ".n", "expected an integer dimension");
            return std::nullopt;
        }
        auto rv = number(*r, path + ".R");
        if (!m->is_number_integer()) {
            fail(path + ".m", "expected an integer cell count");
            return std::nullopt;
        }
        if (!rv) return std::nullopt;
        return guarded(path,
                       [&] { return GridSpec(n->get<int>(), *rv, m->get<std::int64_t>()); });
    }

    std::optional<Ball> ball(const json& j, const std::string& path) {
        const json* a = field(j, path, "a", true);
        const json* r = field(j, path, "r", true);
        if (!a || !r) return std::nullopt;
        if (!a->is_array() || a->empty() || a->size() > 3) {
            fail(path + ".a", "expected a center array of length 1..3");
            return std::nullopt;
        }
        Point c{};
        for (std::size_t i = 0; i < a->size(); ++i) {
            auto v = number((*a)[i], path + ".a[" + std::to_string(i) + "]");
            if (!v) return std::nullopt;
            c[i] = *v;
        }
        auto rv = number(*r, path + ".r");
        if (!rv) return std::nullopt;
        int n = int(a->size());
        if (const json* nv = field(j, path, "n", false)) {
            if (!nv->is_number_integer() || nv->get<int>() != n) {
                fail(path + ".n", "dimension disagrees with the center array length");
                return std::nullopt;
            }
        }
        return guarded(path, [&] { return Ball(c, *rv, n); });
    }

    std::optional<FuncExpr> expr(const json& j, const std::string& path) {
        const json* k = field(j, path, "kind", true);
        if (!k) return std::nullopt;
        auto name = text(*k, path + ".kind");
        if (!name) return std::nullopt;
        if (*name == "indicator") {
            const json* b = field(j, path, "ball", true);
            if (!b) return std::nullopt;
            auto bl = ball(*b, path + ".ball");
            if (!bl) return std::nullopt;
            return make_indicator(*bl);
        }
        if (*name == "powerdecay") {
            const json* a = field(j, path, "alpha", true);
            if (!a) return std::nullopt;
            auto av = number(*a, path + ".alpha");
            if (!av) return std::nullopt;
            return guarded(path + ".alpha", [&] { return make_power_decay(*av); });
        }
        if (*name == "gaussian") {
            const json* s = field(j, path, "sigma", true);
            if (!s) return std::nullopt;
            auto sv = number(*s, path + ".sigma");
            if (!sv) return std::nullopt;
            return guarded(path + ".sigma", [&] { return make_gaussian(*sv); });
        }
        if (*name == "scale") {
            const json* c = field(j, path, "c", true);
            const json* of = field(j, path, "of", true);
            if (!c || !of) return std::nullopt;
            auto cv = number(*c, path + ".c");
            auto inner = expr(*of, path + ".of");
            if (!cv || !inner) return std::nullopt;
            return guarded(path, [&] { return make_scale(*cv, *inner); });
        }
        if (*name == "sum") {
            const json* terms = field(j, path, "terms", true);
            if (!terms) return std::nullopt;
            if (!terms->is_array() || terms->empty()) {
                fail(path + ".terms", "expected a non-empty array");
                return std::nullopt;
            }
            std::vector<FuncExpr> parts;
            for (std::size_t i = 0; i < terms->size(); ++i) {
                auto t = expr((*terms)[i], path + ".terms[" + std::to_string(i) + "]");
                if (!t) return std::nullopt;
                parts.push_back(std::move(*t));
            }
            return make_sum(std::move(parts));
        }
        fail(path + ".kind", "unknown function kind '" + *name + "'");
        return std::nullopt;
    }
};

int expr_dimension(const FuncExpr& e) {
    // Dimension implied by indicator balls; 0 when the expression is radial.
    return std::visit(
        [](const auto& g) -> int {
            using E = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<E, IndicatorExpr>) {
                return g.ball.n;
            } else if constexpr (std::is_same_v<E, ScaleExpr>) {
                return expr_dimension(*g.inner);
            } else if constexpr (std::is_same_v<E, SumExpr>) {
                for (const auto& t : g.terms)
                    if (int d = expr_dimension(*t)) return d;
                return 0;
            } else {
                return 0;
            }
        },
        e);
}

const std::set<std::string> kCommands = {
    "norm",           "oracle",         "validate-young",        "validate-weight",
    "check-precede",  "check-dominate", "verify-inclusion",      "verify-holder",
    "verify-ball-inclusion", "verify-translation", "probe-no-inclusion"};

}  // namespace

ParseOutcome parse_config(const std::string& text) {
    ParseOutcome out;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        out.errors.push_back(std::string("document: ") + e.what());
        return out;
    }
    if (!doc.is_object()) {
        out.errors.push_back("document: expected a JSON object");
        return out;
    }

    Parser P;
    ExperimentConfig cfg;

    if (const json* c = P.field(doc, "", "command", true)) {
        if (auto name = P.text(*c, "command")) {
            if (!kCommands.count(*name))
                P.fail("command", "unknown command '" + *name + "'");
            else
                cfg.command = *name;
        }
    }
    if (!P.errors.empty()) {
        out.errors = std::move(P.errors);
        return out;
    }

    auto get_young = [&](const char* key, bool required) -> std::optional<YoungFunction> {
        const json* j = P.field(doc, "", key, required);
        if (!j) return std::nullopt;
        return P.young(*j, key);
    };
    auto get_weight = [&](const char* key, bool required) -> std::optional<Weight> {
        const json* j = P.field(doc, "", key, required);
        if (!j) return std::nullopt;
        return P.weight(*j, key);
    };
    auto get_number = [&](const char* key, bool required) -> std::optional<double> {
        const json* j = P.field(doc, "", key, required);
        return j ? P.number(*j, key) : std::nullopt;
    };

    auto get_tests = [&](bool required) {
        const json* j = P.field(doc, "", "tests", required);
        if (!j) return;
        if (j->is_array()) {
            for (std::size_t i = 0; i < j->size(); ++i) {
                auto e = P.expr((*j)[i], "tests[" + std::to_string(i) + "]");
                if (e) cfg.tests.push_back(std::move(*e));
            }
            if (j->empty()) P.fail("tests", "expected at least one test function");
            return;
        }
        if (j->is_object() && j->contains("seeded")) {
            const json& s = (*j)["seeded"];
            const json* cnt = P.field(s, "tests.seeded", "count", true);
            if (cnt && cnt->is_number_integer() && cnt->get<int>() >= 1)
                cfg.seeded_tests = cnt->get<int>();
            else if (cnt)
                P.fail("tests.seeded.count", "expected a positive integer");
            return;
        }
        P.fail("tests", "expected an array of functions or {\"seeded\":{\"count\":N}}");
    };

    auto get_mode = [&](bool required) {
        const json* j = P.field(doc, "", "mode", required);
        if (!j) return;
        auto m = P.text(*j, "mode");
        if (m && *m != "lebesgue" && *m != "orlicz")
            P.fail("mode", "expected \"lebesgue\" or \"orlicz\"");
        else if (m)
            cfg.mode = *m;
    };

    const std::string& cmd = cfg.command;
    if (cmd == "norm") {
        if (const json* j = P.field(doc, "", "grid", true)) cfg.grid = P.grid(*j, "grid");
        cfg.weight = get_weight("weight", true);
        if (const json* j = P.field(doc, "", "function", true))
            cfg.function = P.expr(*j, "function");
        const bool has_phi = doc.contains("phi"), has_p = doc.contains("p");
        if (has_phi == has_p) {
            P.fail("phi", "provide exactly one of \"phi\" (Orlicz) or \"p\" (Lebesgue)");
        } else if (has_phi) {
            cfg.phi = get_young("phi", true);
        } else {
            cfg.p = get_number("p", true);
            if (cfg.p && !(*cfg.p >= 1.0)) P.fail("p", "p >= 1 required");
        }
    } else if (cmd == "oracle") {
        cfg.phi = get_young("phi", true);
        if (const json* j = P.field(doc, "", "ball", true)) cfg.ball = P.ball(*j, "ball");
    } else if (cmd == "validate-young") {
        cfg.phi = get_young("phi", true);
    } else if (cmd == "validate-weight") {
        cfg.weight = get_weight("weight", true);
        if (doc.contains("samples")) {
            const json& s = doc["samples"];
            if (!s.is_number_integer() || s.get<int>() < 1)
                P.fail("samples", "expected a positive integer");
            else
                cfg.samples = s.get<int>();
        }
    } else if (cmd == "check-precede") {
        cfg.phi1 = get_young("phi1", true);
        cfg.phi2 = get_young("phi2", true);
    } else if (cmd == "check-dominate") {
        cfg.u1 = get_weight("u1", true);
        cfg.u2 = get_weight("u2", true);
    } else if (cmd == "verify-inclusion") {
        get_mode(true);
        cfg.u1 = get_weight("u1", true);
        cfg.u2 = get_weight("u2", true);
        if (const json* j = P.field(doc, "", "grid", true)) cfg.grid = P.grid(*j, "grid");
        get_tests(true);
        if (cfg.mode == "lebesgue") {
            cfg.p = get_number("p", true);
            if (cfg.p && !(*cfg.p >= 1.0)) P.fail("p", "p >= 1 required");
        } else if (cfg.mode == "orlicz") {
            cfg.phi1 = get_young("phi1", true);
            cfg.phi2 = get_young("phi2", true);
        }
    } else if (cmd == "verify-holder") {
        cfg.phi1 = get_young("phi1", true);
        cfg.phi2 = get_young("phi2", true);
        cfg.phi3 = get_young("phi3", true);
        cfg.u1 = get_weight("u1", true);
        cfg.u2 = get_weight("u2", true);
        cfg.u3 = get_weight("u3", true);
        if (const json* j = P.field(doc, "", "f1", true)) cfg.f1 = P.expr(*j, "f1");
        if (const json* j = P.field(doc, "", "f2", true)) cfg.f2 = P.expr(*j, "f2");
        if (const json* j = P.field(doc, "", "ball", true)) cfg.ball = P.ball(*j, "ball");
        if (const json* j = P.field(doc, "", "grid", true)) cfg.grid = P.grid(*j, "grid");
    } else if (cmd == "verify-ball-inclusion") {
        get_mode(true);
        cfg.u1 = get_weight("u1", true);
        cfg.u2 = get_weight("u2", true);
        if (const json* j = P.field(doc, "", "ball", true)) cfg.ball = P.ball(*j, "ball");
        if (const json* j = P.field(doc, "", "grid", true)) cfg.grid = P.grid(*j, "grid");
        get_tests(true);
        if (cfg.mode == "lebesgue") {
            cfg.p1 = get_number("p1", true);
            cfg.p2 = get_number("p2", true);
            if (cfg.p1 && cfg.p2 && !(*cfg.p1 > *cfg.p2 && *cfg.p2 >= 1.0))
                P.fail("p1", "p1 > p2 >= 1 required");
        } else if (cfg.mode == "orlicz") {
            cfg.phi1 = get_young("phi1", true);
            cfg.phi2 = get_young("phi2", true);
            cfg.phiH = get_young("phiH", true);
            cfg.uQ = get_weight("uQ", true);
        }
    } else if (cmd == "verify-translation") {
        cfg.phi = get_young("phi", true);
        cfg.weight = get_weight("weight", true);
        if (const json* j = P.field(doc, "", "function", true))
            cfg.function = P.expr(*j, "function");
        if (const json* j = P.field(doc, "", "grid", true)) cfg.grid = P.grid(*j, "grid");
        if (const json* j = P.field(doc, "", "shifts", true)) {
            if (!j->is_array() || j->empty()) {
                P.fail("shifts", "expected a non-empty array of lattice vectors");
            } else {
                for (std::size_t i = 0; i < j->size(); ++i) {
                    const json& row = (*j)[i];
                    const std::string rp = "shifts[" + std::to_string(i) + "]";
                    if (!row.is_array() || row.empty() || row.size() > 3) {
                        P.fail(rp, "expected an integer vector of length 1..3");
                        continue;
                    }
                    std::array<std::int64_t, 3> s{0, 0, 0};
                    bool ok = true;
                    for (std::size_t k = 0; k < row.size(); ++k) {
                        if (!row[k].is_number_integer()) {
                            P.fail(rp + "[" + std::to_string(k) + "]", "expected an integer");
                            ok = false;
                        } else {
                            s[k] = row[k].get<std::int64_t>();
                        }
                    }
                    if (ok) cfg.shifts.push_back(s);
                }
            }
        }
    } else if (cmd == "probe-no-inclusion") {
        cfg.p1 = get_number("p1", true);
        cfg.p2 = get_number("p2", true);
        cfg.weight = get_weight("weight", true);
        if (cfg.p1 && !(*cfg.p1 >= 1.0)) P.fail("p1", "p1 >= 1 required");
        if (cfg.p2 && !(*cfg.p2 >= 1.0)) P.fail("p2", "p2 >= 1 required");
        if (cfg.p1 && cfg.p2 && *cfg.p1 == *cfg.p2) P.fail("p2", "p1 and p2 must differ");
    }

    // Cross-field dimension consistency.
    auto check_dim = [&](int have, const char* key, int want, const char* against) {
        if (have != 0 && want != 0 && have != want) {
            std::ostringstream os;
            os << "dimension " << have << " does not match " << against << " = " << want;
            P.fail(key, os.str());
        }
    };
    const int grid_n = cfg.grid ? cfg.grid->n : 0;
    if (cfg.weight) check_dim(cfg.weight->dimension(), "weight", grid_n, "grid.n");
    if (cfg.u1) check_dim(cfg.u1->dimension(), "u1", grid_n, "grid.n");
    if (cfg.u2) check_dim(cfg.u2->dimension(), "u2", grid_n, "grid.n");
    if (cfg.u3) check_dim(cfg.u3->dimension(), "u3", grid_n, "grid.n");
    if (cfg.uQ) check_dim(cfg.uQ->dimension(), "uQ", grid_n, "grid.n");
    if (cfg.u1 && cfg.u2)
        check_dim(cfg.u1->dimension(), "u1", cfg.u2->dimension(), "u2 dimension");
    if (cfg.ball && grid_n) check_dim(cfg.ball->n, "ball", grid_n, "grid.n");
    if (cfg.function && grid_n) check_dim(expr_dimension(*cfg.function), "function", grid_n, "grid.n");
    if (cfg.f1 && grid_n) check_dim(expr_dimension(*cfg.f1), "f1", grid_n, "grid.n");
    if (cfg.f2 && grid_n) check_dim(expr_dimension(*cfg.f2), "f2", grid_n, "grid.n");
    for (std::size_t i = 0; i < cfg.tests.size(); ++i)
        check_dim(expr_dimension(cfg.tests[i]), ("tests[" + std::to_string(i) + "]").c_str(),
                  grid_n, "grid.n");

    out.errors = std::move(P.errors);
    if (out.errors.empty()) out.config = std::move(cfg);
    return out;
}

ordered_json young_to_json(const YoungFunction& phi) {
    ordered_json j;
    std::visit(
        [&](const auto& g) {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, PowerGauge>) {
                j["variant"] = "power";
                j["p"] = g.p;
            } else if constexpr (std::is_same_v<G, ScaledPowerGauge>) {
                j["variant"] = "scaledpower";
                j["c"] = g.c;
                j["p"] = g.p;
            } else if constexpr (std::is_same_v<G, ExpMinusOneGauge>) {
                j["variant"] = "expminusone";
            } else if constexpr (std::is_same_v<G, PowerSumGauge>) {
                j["variant"] = "powersum";
                j["c1"] = g.c1;
                j["p1"] = g.p1;
                j["c2"] = g.c2;
                j["p2"] = g.p2;
            } else {
                j["variant"] = "tabulated";
                auto rows = ordered_json::array();
                for (const auto& n : g.nodes) rows.push_back({n[0], n[1]});
                j["nodes"] = rows;
            }
        },
        phi.variant());
    return j;
}

ordered_json weight_to_json(const Weight& u) {
    ordered_json j;
    std::visit(
        [&](const auto& w) {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, OneWeight>) {
                j["variant"] = "one";
                j["n"] = u.dimension();
            } else if constexpr (std::is_same_v<W, ExpNormWeight>) {
                j["variant"] = "expnorm";
                j["a"] = w.a;
                j["n"] = u.dimension();
            } else if constexpr (std::is_same_v<W, PolyNormWeight>) {
                j["variant"] = "polynorm";
                j["a"] = w.a;
                j["n"] = u.dimension();
            } else if constexpr (std::is_same_v<W, GaussExpWeight>) {
                j["variant"] = "gaussexp";
                j["a"] = w.a;
                j["n"] = u.dimension();
            } else {
                j["variant"] = "product";
                j["w1"] = weight_to_json(*w.lhs);
                j["w2"] = weight_to_json(*w.rhs);
            }
        },
        u.variant());
    return j;
}

ordered_json grid_to_json(const GridSpec& spec) {
    return ordered_json{{"n", spec.n}, {"R", spec.half_width}, {"m", spec.cells_per_axis}};
}

ordered_json ball_to_json(const Ball& ball) {
    auto center = ordered_json::array();
    for (int i = 0; i < ball.n; ++i) center.push_back(ball.center[i]);
    return ordered_json{{"a", center}, {"r", ball.radius}, {"n", ball.n}};
}

ordered_json expr_to_json(const FuncExpr& e) {
    ordered_json j;
    std::visit(
        [&](const auto& g) {
            using E = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<E, IndicatorExpr>) {
                j["kind"] = "indicator";
                j["ball"] = ball_to_json(g.ball);
            } else if constexpr (std::is_same_v<E, PowerDecayExpr>) {
                j["kind"] = "powerdecay";
                j["alpha"] = g.alpha;
            } else if constexpr (std::is_same_v<E, GaussianExpr>) {
                j["kind"] = "gaussian";
                j["sigma"] = g.sigma;
            } else if constexpr (std::is_same_v<E, ScaleExpr>) {
                j["kind"] = "scale";
                j["c"] = g.factor;
                j["of"] = expr_to_json(*g.inner);
            } else {
                j["kind"] = "sum";
                auto rows = ordered_json::array();
                for (const auto& t : g.terms) rows.push_back(expr_to_json(*t));
                j["terms"] = rows;
            }
        },
        e);
    return j;
}

ordered_json serialize_config(const ExperimentConfig& cfg) {
    ordered_json j;
    j["command"] = cfg.command;
    if (!cfg.mode.empty()) j["mode"] = cfg.mode;
    if (cfg.p) j["p"] = *cfg.p;
    if (cfg.p1) j["p1"] = *cfg.p1;
    if (cfg.p2) j["p2"] = *cfg.p2;
    if (cfg.phi) j["phi"] = young_to_json(*cfg.phi);
    if (cfg.phi1) j["phi1"] = young_to_json(*cfg.phi1);
    if (cfg.phi2) j["phi2"] = young_to_json(*cfg.phi2);
    if (cfg.phi3) j["phi3"] = young_to_json(*cfg.phi3);
    if (cfg.phiH) j["phiH"] = young_to_json(*cfg.phiH);
    if (cfg.weight) j["weight"] = weight_to_json(*cfg.weight);
    if (cfg.u1) j["u1"] = weight_to_json(*cfg.u1);
    if (cfg.u2) j["u2"] = weight_to_json(*cfg.u2);
    if (cfg.u3) j["u3"] = weight_to_json(*cfg.u3);
    if (cfg.uQ) j["uQ"] = weight_to_json(*cfg.uQ);
    if (cfg.grid) j["grid"] = grid_to_json(*cfg.grid);
    if (cfg.ball) j["ball"] = ball_to_json(*cfg.ball);
    if (cfg.function) j["function"] = expr_to_json(*cfg.function);
    if (cfg.f1) j["f1"] = expr_to_json(*cfg.f1);
    if (cfg.f2) j["f2"] = expr_to_json(*cfg.f2);
    if (!cfg.tests.empty()) {
        auto rows = ordered_json::array();
        for (const auto& t : cfg.tests) rows.push_back(expr_to_json(t));
        j["tests"] = rows;
    } else if (cfg.seeded_tests) {
        j["tests"] = ordered_json{{"seeded", ordered_json{{"count", *cfg.seeded_tests}}}};
    }
    if (cfg.samples) j["samples"] = *cfg.samples;
    if (!cfg.shifts.empty()) {
        auto rows = ordered_json::array();
        for (const auto& s : cfg.shifts) {
            auto row = ordered_json::array();
            // length recovered from the grid when present, else emit all 3
            const int len = cfg.grid ? cfg.grid->n : 3;
            for (int i = 0; i < len; ++i) row.push_back(s[std::size_t(i)]);
            rows.push_back(row);
        }
        j["shifts"] = rows;
    }
    return j;
}

ordered_json report_to_json(const VerificationReport& rep) {
    ordered_json j;
    j["claim"] = rep.claim;
    switch (rep.status) {
        case VerificationReport::Status::verified:
            j["status"] = "verified";
            break;
        case VerificationReport::Status::failed:
            j["status"] = "failed";
            break;
        case VerificationReport::Status::precondition_unmet:
            j["status"] = "precondition_unmet";
            break;
    }
    j["passed"] = rep.passed();
    j["constant_used"] = rep.constant_used;
    if (std::isnan(rep.max_violation_ratio))
        j["max_violation_ratio"] = nullptr;
    else
        j["max_violation_ratio"] = rep.max_violation_ratio;
    auto consts = ordered_json::object();
    for (const auto& [name, value] : rep.constants) consts[name] = value;
    j["constants"] = consts;
    auto wit = ordered_json::array();
    for (const auto& w : rep.witnesses)
        wit.push_back(ordered_json{{"input", w.input}, {"lhs", w.lhs}, {"rhs", w.rhs}});
    j["witnesses"] = wit;
    j["notes"] = rep.notes;
    return j;
}

namespace {

ordered_json norm_result_to_json(const NormResult& r) {
    ordered_json j;
    j["value"] = r.finite ? ordered_json(r.value) : ordered_json(nullptr);
    j["bracket"] = {r.finite ? ordered_json(r.lo) : ordered_json(nullptr),
                    r.finite ? ordered_json(r.hi) : ordered_json(nullptr)};
    j["finite"] = r.finite;
    j["evaluations"] = r.evaluations;
    return j;
}

std::vector<GridFunction> resolve_tests(const ExperimentConfig& cfg, std::uint64_t seed,
                                        std::vector<std::string>& names) {
    std::vector<GridFunction> tests;
    if (!cfg.tests.empty()) {
        for (const auto& e : cfg.tests) {
            tests.push_back(sample(e, *cfg.grid));
            names.push_back(describe_expr(e));
        }
    } else if (cfg.seeded_tests) {
        const auto exprs = seeded_expression_batch(*cfg.grid, *cfg.seeded_tests, seed);
        for (const auto& e : exprs) {
            tests.push_back(sample(e, *cfg.grid));
            names.push_back(describe_expr(e));
        }
    }
    return tests;
}

}  // namespace

RunOutcome run_command(const ExperimentConfig& cfg, std::uint64_t seed) {
    RunOutcome out;
    ordered_json& j = out.report;
    j["command"] = cfg.command;
    j["seed"] = seed;
    j["config"] = serialize_config(cfg);
    out.report_stem = cfg.command;

    if (cfg.command == "norm") {
        const GridFunction f = sample(*cfg.function, *cfg.grid);
        NormResult r = cfg.phi ? weak_orlicz_norm(*cfg.phi, *cfg.weight, f)
                               : weak_lebesgue_norm(*cfg.p, *cfg.weight, f);
        j["result"] = norm_result_to_json(r);
        out.profile = distribution_profile(apply_weight(f, *cfg.weight));
        return out;
    }
    if (cfg.command == "oracle") {
        j["value"] = char_norm_oracle(*cfg.phi, *cfg.ball);
        return out;
    }
    if (cfg.command == "validate-young") {
        const YoungValidation v = validate_young(*cfg.phi);
        j["passed"] = v.passed;
        j["probe_grid"] = "geometric 2^-20..2^20, 4 points per octave";
        if (!v.passed) j["violation"] = ordered_json{{"kind", v.failure}, {"witness_t", v.witness_t}};
        out.exit_code = v.passed ? 0 : 1;
        return out;
    }
    if (cfg.command == "validate-weight") {
        const int samples = cfg.samples ? *cfg.samples : 512;
        const SubmultiplicativityReport rep = check_submultiplicative(*cfg.weight, samples, seed);
        j["passed"] = rep.passed;
        j["samples"] = rep.samples;
        j["box_half_width"] = rep.box_half_width;
        if (rep.counterexample) {
            const int n = cfg.weight->dimension();
            auto pt = [&](const Point& p) {
                auto a = ordered_json::array();
                for (int i = 0; i < n; ++i) a.push_back(p[i]);
                return a;
            };
            j["counterexample"] = ordered_json{{"x", pt(rep.counterexample->first)},
                                               {"y", pt(rep.counterexample->second)}};
        }
        out.exit_code = rep.passed ? 0 : 1;
        return out;
    }
    if (cfg.command == "check-precede") {
        const PrecedesResult r = check_precedes(*cfg.phi1, *cfg.phi2);
        j["status"] = r.found() ? "found" : "undetermined";
        j["C"] = r.constant ? ordered_json(*r.constant) : ordered_json(nullptr);
        j["ladder"] = "geometric 2^-20..2^20, 4 points per octave";
        if (!r.note.empty()) j["note"] = r.note;
        auto fr = ordered_json::array();
        for (const auto& f : r.frontier) fr.push_back({f[0], f[1]});
        j["frontier"] = fr;
        out.exit_code = r.found() ? 0 : 1;
        return out;
    }
    if (cfg.command == "check-dominate") {
        const DominationResult r = check_dominates(*cfg.u1, *cfg.u2);
        j["status"] = r.status == DominationResult::Status::holds
                          ? "holds"
                          : (r.status == DominationResult::Status::growth ? "growth"
                                                                          : "undetermined");
        j["C"] = r.constant ? ordered_json(*r.constant) : ordered_json(nullptr);
        auto wx = ordered_json::array();
        for (int i = 0; i < cfg.u1->dimension(); ++i) wx.push_back(r.witness[i]);
        j["witness_x"] = wx;
        auto tr = ordered_json::array();
        for (const auto& t : r.trace) tr.push_back({t[0], t[1]});
        j["trace"] = tr;
        j["probes"] = r.probe_note;
        out.exit_code = r.holds() ? 0 : 1;
        return out;
    }

    // The claim verifiers.
    VerificationReport rep;
    std::vector<std::string> names;
    if (cfg.command == "verify-inclusion") {
        const auto tests = resolve_tests(cfg, seed, names);
        rep = cfg.mode == "lebesgue"
                  ? verify_inclusion_lebesgue(*cfg.p, *cfg.u1, *cfg.u2, tests, names)
                  : verify_inclusion_orlicz(*cfg.phi1, *cfg.phi2, *cfg.u1, *cfg.u2, tests, names);
    } else if (cfg.command == "verify-holder") {
        const GridFunction a = sample(*cfg.f1, *cfg.grid);
        const GridFunction b = sample(*cfg.f2, *cfg.grid);
        rep = verify_holder(*cfg.phi1, *cfg.phi2, *cfg.phi3, *cfg.u1, *cfg.u2, *cfg.u3, a, b,
                            *cfg.ball);
    } else if (cfg.command == "verify-ball-inclusion") {
        const auto tests = resolve_tests(cfg, seed, names);
        rep = cfg.mode == "lebesgue"
                  ? verify_ball_inclusion_lebesgue(*cfg.p1, *cfg.p2, *cfg.u1, *cfg.u2, *cfg.ball,
                                                   *cfg.grid, tests, names)
                  : verify_ball_inclusion(*cfg.phi1, *cfg.phi2, *cfg.phiH, *cfg.u1, *cfg.u2,
                                          *cfg.uQ, *cfg.ball, *cfg.grid, tests, names);
    } else if (cfg.command == "verify-translation") {
        const GridFunction f = sample(*cfg.function, *cfg.grid);
        rep = verify_translation_bounds(*cfg.phi, *cfg.weight, f, cfg.shifts);
    } else if (cfg.command == "probe-no-inclusion") {
        rep = probe_no_global_inclusion(*cfg.p1, *cfg.p2, *cfg.weight);
    } else {
        throw std::logic_error("run_command: unhandled command " + cfg.command);
    }

    const ordered_json rj = report_to_json(rep);
    for (auto it = rj.begin(); it != rj.end(); ++it) j[it.key()] = it.value();
    out.report_stem = rep.claim;
    out.exit_code = rep.passed() ? 0 : 1;
    return out;
}

int emit_report(const RunOutcome& outcome, const std::filesystem::path& out_dir, bool write_csv) {
    namespace fs = std::filesystem;
    try {
        fs::create_directories(out_dir);

        ordered_json doc = outcome.report;
        {
            const auto now = std::chrono::system_clock::now();
            const std::time_t tt = std::chrono::system_clock::to_time_t(now);
            std::tm tm{};
            gmtime_r(&tt, &tm);
            std::ostringstream os;
            os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
            doc["timestamp"] = os.str();
        }

        auto write_atomic = [&](const fs::path& target, const std::string& payload) {
            const fs::path tmp = target.string() + ".tmp";
            {
                std::ofstream f(tmp, std::ios::trunc);
                if (!f) throw std::runtime_error("cannot open " + tmp.string());
                f << payload;
                if (!f) throw std::runtime_error("short write to " + tmp.string());
            }
            fs::rename(tmp, target);
        };

        write_atomic(out_dir / (outcome.report_stem + ".json"), doc.dump(2) + "\n");

        if (write_csv && outcome.profile) {
            std::ostringstream csv;
            csv << "value,measure\n";
            csv.precision(17);
            for (const auto& lvl : outcome.profile->levels)
                csv << lvl.value << "," << lvl.measure << "\n";
            write_atomic(out_dir / (outcome.report_stem + "_profile.csv"), csv.str());
        }
    } catch (const std::exception& e) {
        std::ostringstream os;
        os << "i/o error: " << e.what();
        // Report through stderr; the caller turns this into exit code 2.
        std::fputs((os.str() + "\n").c_str(), stderr);
        return 2;
    }
    return outcome.exit_code;
}

}  // namespace orlicz
