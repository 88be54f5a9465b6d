#ifndef SUMPROD_SWEEP_HPP
#define SUMPROD_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "bounds.hpp"
#include "error.hpp"
#include "ext_field.hpp"
#include "parse.hpp"
#include "report.hpp"
#include "subgroup.hpp"

namespace sumprod {

/// Seeded generator with a platform-independent bounded draw (the standard
/// distributions are implementation-defined).
class SweepRng {
public:
    explicit SweepRng(u64 seed) : engine_(seed) {}

    u64 below(u64 n) {
        const u64 threshold = (0 - n) % n;
        for (;;) {
            const u64 r = engine_();
            if (r >= threshold) return r % n;
        }
    }
    /// k distinct values from [0, n), ascending (Floyd's algorithm).
    std::vector<u64> distinct(u64 n, u64 k) {
        std::set<u64> chosen;
        for (u64 j = n - k; j < n; ++j) {
            const u64 t = below(j + 1);
            if (!chosen.insert(t).second) chosen.insert(j);
        }
        return {chosen.begin(), chosen.end()};
    }

private:
    std::mt19937_64 engine_;
};

struct SweepConfig {
    struct Primes {
        enum class Kind { list, range, admitted_search };
        Kind kind = Kind::list;
        std::vector<u64> list;
        u64 lo = 0, hi = 0;              // range, or searched orders
        u64 n = 1;                       // admitted_search degree
    };
    struct Orders {
        enum class Kind { all, divisors, admitted };
        Kind kind = Kind::all;
        std::vector<u64> divisors;
        u64 n = 1;
    };
    struct Family {
        int degree = 1;
        std::vector<u64> a{1}, b{1};
    };
    struct Probe {
        u64 p = 0, order = 0;
        std::string poly;
        std::vector<u64> A, B;
        ProbeConfig cfg;
    };

    Primes primes;
    Orders orders;
    std::vector<std::string> polys;
    std::vector<Family> families;
    std::vector<std::string> inequalities;
    u64 seed = 0;
    u64 max_pairs = default_pair_budget;
    u64 max_ext_elements = ExtField::default_element_budget;
    std::optional<u64> gv_mu_samples;  // nullopt: every mu in F_p^*
    std::vector<u64> vm_h{1};
    u64 vm_trials = 1;
    unsigned thmap_n = 2;
    u64 thmap_trials = 50;
    bool thmap_random_cosets = true;
    std::vector<Probe> probes;
    bool record_timing = false;

    /// Explicit expressions followed by expanded families a*x^n+b*y^n.
    std::vector<std::string> polynomial_texts() const {
        std::vector<std::string> out(polys);
        for (const auto& f : families)
            for (u64 a : f.a)
                for (u64 b : f.b)
                    out.push_back(std::to_string(a) + "*x^" + std::to_string(f.degree) + "+" + std::to_string(b) + "*y^" +
                                  std::to_string(f.degree));
        return out;
    }
    bool wants(std::string_view kind) const {
        return std::find(inequalities.begin(), inequalities.end(), kind) != inequalities.end();
    }
};

namespace detail {

inline const std::vector<std::string>& known_inequalities() {
    static const std::vector<std::string> v = {"t2", "vm", "gv", "thmap", "growth", "probe"};
    return v;
}

[[noreturn]] inline void config_fail(const std::string& path, const std::string& what) {
    fail(ErrorCode::config_error, path + ": " + what);
}

inline u64 get_uint(const Json& j, const std::string& path) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<i64>() >= 0)) config_fail(path, "expected a nonnegative integer");
    return j.get<u64>();
}

inline std::vector<u64> get_uint_list(const Json& j, const std::string& path) {
    if (!j.is_array()) config_fail(path, "expected an array of integers");
    std::vector<u64> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_uint(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

inline double get_real(const Json& j, const std::string& path) {
    if (!j.is_number()) config_fail(path, "expected a number");
    return j.get<double>();
}

inline void check_keys(const Json& j, const std::string& path, std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) config_fail(path, "expected an object");
    for (const auto& [key, value] : j.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) config_fail(path + "." + key, "unknown field");
}

inline void check_expression(const std::string& text, const std::string& path) {
    try {
        (void)parse_bipoly(text, make_prime(3));
    } catch (const Error& e) {
        config_fail(path, "bad polynomial '" + text + "': " + e.what());
    }
}

}  // namespace detail

inline SweepConfig parse_sweep_config(const Json& j) {
    using detail::config_fail;
    detail::check_keys(j, "$", {"primes", "orders", "polys", "families", "inequalities", "seed", "budgets", "gv", "vm", "thmap",
                                "probes", "record_timing"});
    SweepConfig cfg;

    if (!j.contains("primes")) config_fail("$.primes", "missing");
    const auto& pj = j.at("primes");
    detail::check_keys(pj, "$.primes", {"list", "range", "admitted_search"});
    if (pj.size() != 1) config_fail("$.primes", "expected exactly one of list, range, admitted_search");
    if (pj.contains("list")) {
        cfg.primes.kind = SweepConfig::Primes::Kind::list;
        cfg.primes.list = detail::get_uint_list(pj.at("list"), "$.primes.list");
        if (cfg.primes.list.empty()) config_fail("$.primes.list", "must not be empty");
        for (std::size_t i = 0; i < cfg.primes.list.size(); ++i) {
            try {
                (void)make_prime(cfg.primes.list[i]);
            } catch (const Error& e) {
                config_fail("$.primes.list[" + std::to_string(i) + "]", e.what());
            }
        }
    } else if (pj.contains("range")) {
        cfg.primes.kind = SweepConfig::Primes::Kind::range;
        const auto r = detail::get_uint_list(pj.at("range"), "$.primes.range");
        if (r.size() != 2 || r[0] > r[1]) config_fail("$.primes.range", "expected [lo, hi] with lo <= hi");
        cfg.primes.lo = std::max<u64>(r[0], 3);
        cfg.primes.hi = r[1];
        bool any = false;
        for (u64 p = cfg.primes.lo; p <= cfg.primes.hi && !any; ++p) any = nt::is_prime(p);
        if (!any) config_fail("$.primes.range", "contains no odd prime");
    } else {
        cfg.primes.kind = SweepConfig::Primes::Kind::admitted_search;
        const auto& aj = pj.at("admitted_search");
        detail::check_keys(aj, "$.primes.admitted_search", {"orders", "n"});
        const auto r = detail::get_uint_list(aj.at("orders"), "$.primes.admitted_search.orders");
        if (r.size() != 2 || r[0] > r[1] || r[0] < 1) config_fail("$.primes.admitted_search.orders", "expected [lo, hi] with 1 <= lo <= hi");
        cfg.primes.lo = r[0];
        cfg.primes.hi = r[1];
        if (aj.contains("n")) cfg.primes.n = detail::get_uint(aj.at("n"), "$.primes.admitted_search.n");
    }

    if (j.contains("orders")) {
        const auto& oj = j.at("orders");
        if (oj.is_string()) {
            if (oj.get<std::string>() != "all") config_fail("$.orders", "expected \"all\" or an object");
        } else {
            detail::check_keys(oj, "$.orders", {"divisors", "admitted_for_n"});
            if (oj.size() != 1) config_fail("$.orders", "expected exactly one of divisors, admitted_for_n");
            if (oj.contains("divisors")) {
                cfg.orders.kind = SweepConfig::Orders::Kind::divisors;
                cfg.orders.divisors = detail::get_uint_list(oj.at("divisors"), "$.orders.divisors");
            } else {
                cfg.orders.kind = SweepConfig::Orders::Kind::admitted;
                cfg.orders.n = detail::get_uint(oj.at("admitted_for_n"), "$.orders.admitted_for_n");
                if (cfg.orders.n < 1) config_fail("$.orders.admitted_for_n", "must be >= 1");
            }
        }
    }

    if (j.contains("polys")) {
        const auto& arr = j.at("polys");
        if (!arr.is_array()) config_fail("$.polys", "expected an array of strings");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string path = "$.polys[" + std::to_string(i) + "]";
            if (!arr[i].is_string()) config_fail(path, "expected a string");
            detail::check_expression(arr[i].get<std::string>(), path);
            cfg.polys.push_back(arr[i].get<std::string>());
        }
    }
    if (j.contains("families")) {
        const auto& arr = j.at("families");
        if (!arr.is_array()) config_fail("$.families", "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string path = "$.families[" + std::to_string(i) + "]";
            detail::check_keys(arr[i], path, {"degree", "a", "b"});
            SweepConfig::Family f;
            f.degree = static_cast<int>(detail::get_uint(arr[i].at("degree"), path + ".degree"));
            if (f.degree < 1 || f.degree > max_parse_degree) config_fail(path + ".degree", "must lie in [1, 16]");
            if (arr[i].contains("a")) f.a = detail::get_uint_list(arr[i].at("a"), path + ".a");
            if (arr[i].contains("b")) f.b = detail::get_uint_list(arr[i].at("b"), path + ".b");
            cfg.families.push_back(std::move(f));
        }
    }

    if (!j.contains("inequalities")) config_fail("$.inequalities", "missing");
    const auto& ij = j.at("inequalities");
    if (!ij.is_array() || ij.empty()) config_fail("$.inequalities", "expected a nonempty array");
    for (std::size_t i = 0; i < ij.size(); ++i) {
        const std::string path = "$.inequalities[" + std::to_string(i) + "]";
        if (!ij[i].is_string()) config_fail(path, "expected a string");
        const auto name = ij[i].get<std::string>();
        const auto& known = detail::known_inequalities();
        if (std::find(known.begin(), known.end(), name) == known.end()) config_fail(path, "unknown inequality '" + name + "'");
        cfg.inequalities.push_back(name);
    }
    if ((cfg.wants("t2") || cfg.wants("vm")) && cfg.polynomial_texts().empty())
        config_fail("$.polys", "t2/vm need at least one polynomial");

    if (j.contains("seed")) cfg.seed = detail::get_uint(j.at("seed"), "$.seed");
    if (j.contains("record_timing")) {
        if (!j.at("record_timing").is_boolean()) config_fail("$.record_timing", "expected a boolean");
        cfg.record_timing = j.at("record_timing").get<bool>();
    }
    if (j.contains("budgets")) {
        const auto& bj = j.at("budgets");
        detail::check_keys(bj, "$.budgets", {"max_pairs", "max_ext_elements"});
        if (bj.contains("max_pairs")) cfg.max_pairs = detail::get_uint(bj.at("max_pairs"), "$.budgets.max_pairs");
        if (bj.contains("max_ext_elements"))
            cfg.max_ext_elements = detail::get_uint(bj.at("max_ext_elements"), "$.budgets.max_ext_elements");
        if (cfg.max_pairs == 0 || cfg.max_ext_elements == 0) config_fail("$.budgets", "budgets must be positive");
    }
    if (j.contains("gv")) {
        const auto& gj = j.at("gv");
        detail::check_keys(gj, "$.gv", {"mu"});
        if (gj.contains("mu")) {
            const auto& mj = gj.at("mu");
            if (mj.is_string()) {
                if (mj.get<std::string>() != "all") config_fail("$.gv.mu", "expected \"all\" or {\"samples\": k}");
            } else {
                detail::check_keys(mj, "$.gv.mu", {"samples"});
                cfg.gv_mu_samples = detail::get_uint(mj.at("samples"), "$.gv.mu.samples");
            }
        }
    }
    if (j.contains("vm")) {
        const auto& vj = j.at("vm");
        detail::check_keys(vj, "$.vm", {"h", "trials"});
        if (vj.contains("h")) cfg.vm_h = detail::get_uint_list(vj.at("h"), "$.vm.h");
        if (vj.contains("trials")) cfg.vm_trials = detail::get_uint(vj.at("trials"), "$.vm.trials");
    }
    if (j.contains("thmap")) {
        const auto& tj = j.at("thmap");
        detail::check_keys(tj, "$.thmap", {"n", "trials", "cosets"});
        if (tj.contains("n")) cfg.thmap_n = static_cast<unsigned>(detail::get_uint(tj.at("n"), "$.thmap.n"));
        if (cfg.thmap_n < 2 || cfg.thmap_n > 16) config_fail("$.thmap.n", "must lie in [2, 16]");
        if (tj.contains("trials")) cfg.thmap_trials = detail::get_uint(tj.at("trials"), "$.thmap.trials");
        if (tj.contains("cosets")) {
            const auto& cj = tj.at("cosets");
            if (!cj.is_string() || (cj.get<std::string>() != "random" && cj.get<std::string>() != "subgroup"))
                config_fail("$.thmap.cosets", "expected \"random\" or \"subgroup\"");
            cfg.thmap_random_cosets = cj.get<std::string>() == "random";
        }
    }
    if (j.contains("probes")) {
        const auto& arr = j.at("probes");
        if (!arr.is_array()) config_fail("$.probes", "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string path = "$.probes[" + std::to_string(i) + "]";
            detail::check_keys(arr[i], path, {"p", "order", "poly", "A", "B", "delta", "epsilon"});
            SweepConfig::Probe pr;
            pr.p = detail::get_uint(arr[i].at("p"), path + ".p");
            if (!nt::is_prime(pr.p) || pr.p < 3) config_fail(path + ".p", "expected an odd prime");
            pr.order = detail::get_uint(arr[i].at("order"), path + ".order");
            if (pr.order == 0 || (pr.p - 1) % pr.order != 0) config_fail(path + ".order", "must divide p - 1");
            if (!arr[i].at("poly").is_string()) config_fail(path + ".poly", "expected a string");
            pr.poly = arr[i].at("poly").get<std::string>();
            detail::check_expression(pr.poly, path + ".poly");
            pr.A = detail::get_uint_list(arr[i].at("A"), path + ".A");
            pr.B = detail::get_uint_list(arr[i].at("B"), path + ".B");
            if (arr[i].contains("delta")) pr.cfg.delta = detail::get_real(arr[i].at("delta"), path + ".delta");
            if (arr[i].contains("epsilon")) pr.cfg.epsilon = detail::get_real(arr[i].at("epsilon"), path + ".epsilon");
            if (!(pr.cfg.delta > 0 && pr.cfg.delta < 1)) config_fail(path + ".delta", "must lie in (0, 1)");
            if (!(pr.cfg.epsilon > 0 && pr.cfg.epsilon < 1)) config_fail(path + ".epsilon", "must lie in (0, 1)");
            cfg.probes.push_back(std::move(pr));
        }
    }
    if (cfg.wants("probe") && cfg.probes.empty()) config_fail("$.probes", "probe needs at least one entry");
    return cfg;
}

inline SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::io_error, "cannot open config " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        fail(ErrorCode::config_error, "$: invalid JSON: " + std::string(e.what()));
    }
    return parse_sweep_config(j);
}

/// Smallest prime p = 1 (mod d) with 9 d^2 < p; the subgroup of order d of F_p^*
/// then satisfies the upper admissibility bound.
inline Prime admitted_prime_for_order(u64 d) {
    if (d < 1) fail(ErrorCode::invalid_argument, "order must be >= 1");
    const u128 floor_value = static_cast<u128>(9) * d * d;
    u128 k = floor_value / d + 1;
    for (;; ++k) {
        const u128 cand = k * d + 1;
        if (cand > floor_value && cand >= 3 && nt::is_prime(static_cast<u64>(cand))) return make_prime(static_cast<u64>(cand));
    }
}

namespace detail {

struct InstancePlan {
    std::string kind;
    std::string poly;
    std::vector<u64> values;  // mu, levels, or thmap shifts
    std::vector<u64> reps;    // thmap coset multipliers
    const SweepConfig::Probe* probe = nullptr;
};

struct GroupTask {
    u64 p = 0;
    u64 order = 0;
    std::vector<InstancePlan> instances;
};

struct KeyedRecord {
    std::tuple<u64, u64, std::string, u64> key;  // (p, |G|, poly text, sequence)
    ReportRecord record;
};

inline std::vector<std::pair<u64, u64>> selected_groups(const SweepConfig& cfg) {
    std::vector<std::pair<u64, u64>> out;
    using PK = SweepConfig::Primes::Kind;
    if (cfg.primes.kind == PK::admitted_search) {
        for (u64 d = cfg.primes.lo; d <= cfg.primes.hi; ++d) out.emplace_back(admitted_prime_for_order(d).value(), d);
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<u64> primes;
    if (cfg.primes.kind == PK::list) {
        primes = cfg.primes.list;
    } else {
        for (u64 p = cfg.primes.lo; p <= cfg.primes.hi; ++p)
            if (nt::is_prime(p)) primes.push_back(p);
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (u64 p : primes) {
        for (u64 d : nt::divisors(p - 1)) {
            using OK = SweepConfig::Orders::Kind;
            bool keep = true;
            if (cfg.orders.kind == OK::divisors)
                keep = std::find(cfg.orders.divisors.begin(), cfg.orders.divisors.end(), d) != cfg.orders.divisors.end();
            else if (cfg.orders.kind == OK::admitted) {
                const u128 n = cfg.orders.n;
                keep = 100 * n * n * n < d && static_cast<u128>(9) * d * d < p;
            }
            if (keep) out.emplace_back(p, d);
        }
    }
    return out;
}

inline std::vector<GroupTask> plan_tasks(const SweepConfig& cfg) {
    SweepRng rng(cfg.seed);
    const auto texts = cfg.polynomial_texts();
    std::vector<GroupTask> tasks;
    for (auto [p, order] : selected_groups(cfg)) {
        GroupTask task{p, order, {}};
        const u64 cofactor = (p - 1) / order;
        const u64 g = primitive_root(make_prime(p));
        if (cfg.wants("t2"))
            for (const auto& t : texts) task.instances.push_back({"t2", t, {}, {}, nullptr});
        if (cfg.wants("vm"))
            for (const auto& t : texts)
                for (u64 h : cfg.vm_h)
                    for (u64 trial = 0; trial < cfg.vm_trials; ++trial) {
                        InstancePlan inst{"vm", t, {}, {}, nullptr};
                        if (h <= cofactor) {
                            for (u64 c : rng.distinct(cofactor, h))
                                inst.values.push_back(nt::pow_mod(g, c + cofactor * rng.below(order), p));
                        } else {
                            inst.reps.push_back(h);  // marks an impossible level count
                        }
                        task.instances.push_back(std::move(inst));
                    }
        if (cfg.wants("gv")) {
            if (cfg.gv_mu_samples) {
                const u64 k = std::min(*cfg.gv_mu_samples, p - 1);
                for (u64 mu : rng.distinct(p - 1, k)) task.instances.push_back({"gv", "", {mu + 1}, {}, nullptr});
            } else {
                for (u64 mu = 1; mu < p; ++mu) task.instances.push_back({"gv", "", {mu}, {}, nullptr});
            }
        }
        if (cfg.wants("thmap") && p - 1 >= cfg.thmap_n)
            for (u64 trial = 0; trial < cfg.thmap_trials; ++trial) {
                InstancePlan inst{"thmap", "", {}, {}, nullptr};
                auto shifts = rng.distinct(p - 1, cfg.thmap_n);
                for (u64 k = shifts.size(); k > 1; --k) std::swap(shifts[k - 1], shifts[rng.below(k)]);
                for (u64 s : shifts) inst.values.push_back(s + 1);
                for (unsigned i = 0; i < cfg.thmap_n; ++i) inst.reps.push_back(cfg.thmap_random_cosets ? rng.below(p - 1) + 1 : 1);
                task.instances.push_back(std::move(inst));
            }
        if (cfg.wants("growth")) task.instances.push_back({"growth", "", {}, {}, nullptr});
        if (!task.instances.empty()) tasks.push_back(std::move(task));
    }
    if (cfg.wants("probe"))
        for (const auto& pr : cfg.probes) tasks.push_back({pr.p, pr.order, {{"probe", pr.poly, {}, {}, &pr}}});
    return tasks;
}

inline std::string linear_text(u64 shift) { return "x+" + std::to_string(shift); }

inline ReportRecord run_instance(const SweepConfig& cfg, const Subgroup& G, const InstancePlan& inst,
                                 std::map<std::string, FpPoly>& parsed) {
    const Prime p = G.prime();
    ReportRecord r = base_record(inst.kind, p, G.order(), G.generator(), inst.poly, cfg.seed);
    const auto started = std::chrono::steady_clock::now();
    try {
        auto poly = [&]() -> const FpPoly& {
            auto it = parsed.find(inst.poly);
            if (it == parsed.end()) it = parsed.emplace(inst.poly, parse_bipoly(inst.poly, p)).first;
            return it->second;
        };
        if (inst.kind == "t2") {
            apply_verdict(r, verify_theorem2(poly(), G, cfg.max_pairs));
        } else if (inst.kind == "vm") {
            if (!inst.reps.empty()) fail(ErrorCode::invalid_argument, "h = " + std::to_string(inst.reps[0]) + " exceeds the number of cosets");
            r["params"] = Json{{"alphas", inst.values}, {"h", inst.values.size()}};
            apply_verdict(r, verify_vm(poly(), G, ValueSet(p, inst.values), cfg.max_pairs));
        } else if (inst.kind == "gv") {
            r["params"] = Json{{"mu", inst.values.at(0)}};
            apply_verdict(r, verify_gv(G, inst.values.at(0)));
        } else if (inst.kind == "thmap") {
            const PrimeField F(p);
            std::vector<FpUniPoly> fs;
            std::vector<Coset> cosets;
            std::vector<std::string> texts;
            std::vector<u64> reps;
            for (std::size_t i = 0; i < inst.values.size(); ++i) {
                fs.emplace_back(F, std::vector<u64>{inst.values[i], 1});
                texts.push_back(linear_text(inst.values[i]));
                cosets.push_back(coset_of(inst.reps[i], G));
                reps.push_back(cosets.back().representative);
            }
            r["params"] = Json{{"fs", texts}, {"coset_reps", reps}};
            apply_verdict(r, verify_thmap(fs, cosets, G, cfg.max_pairs));
        } else if (inst.kind == "growth") {
            const auto g = probe_growth(G, cfg.max_pairs);
            r["metrics"] = to_json(g);
            r["outcome"] = "reported";
        } else if (inst.kind == "probe") {
            const auto& pr = *inst.probe;
            r["params"] = Json{{"A", pr.A}, {"B", pr.B}, {"delta", pr.cfg.delta}, {"epsilon", pr.cfg.epsilon}};
            try {
                const auto f = probe_factorization(poly(), ValueSet(p, pr.A), ValueSet(p, pr.B), G, pr.cfg, cfg.max_pairs);
                r["metrics"] = to_json(f);
                r["outcome"] = "reported";
            } catch (const std::logic_error& e) {
                r["outcome"] = "fails";
                r["error"] = e.what();
            }
        }
    } catch (const Error& e) {
        r["outcome"] = "error";
        r["error"] = e.what();
    }
    if (cfg.record_timing)
        r["wall_time_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return r;
}

inline std::vector<KeyedRecord> run_task(const SweepConfig& cfg, const GroupTask& task, u64 first_seq) {
    std::vector<KeyedRecord> out;
    out.reserve(task.instances.size());
    std::optional<Subgroup> G;
    try {
        G.emplace(make_prime(task.p), task.order);
    } catch (const Error& e) {
        for (std::size_t i = 0; i < task.instances.size(); ++i) {
            ReportRecord r = base_record(task.instances[i].kind, task.p, task.order, 0, task.instances[i].poly, cfg.seed);
            r["outcome"] = "error";
            r["error"] = e.what();
            out.push_back({{task.p, task.order, task.instances[i].poly, first_seq + i}, std::move(r)});
        }
        return out;
    }
    std::map<std::string, FpPoly> parsed;
    for (std::size_t i = 0; i < task.instances.size(); ++i) {
        const auto& inst = task.instances[i];
        out.push_back({{task.p, task.order, inst.poly, first_seq + i}, run_instance(cfg, *G, inst, parsed)});
    }
    return out;
}

}  // namespace detail

struct SweepResult {
    std::vector<ReportRecord> records;
    u64 failures = 0;
    u64 borderline = 0;
    u64 errors = 0;
    int exit_code = 0;  // 0 clean, 2 when a premise-met inequality failed
};

/// Expands the configuration into instances, evaluates them on `jobs` workers
/// and returns the records sorted by (p, |G|, polynomial text, instance index).
/// The output never depends on the worker count.
inline SweepResult run_sweep(const SweepConfig& cfg, unsigned jobs = 1) {
    const auto tasks = detail::plan_tasks(cfg);
    std::vector<u64> first_seq(tasks.size(), 0);
    for (std::size_t t = 1; t < tasks.size(); ++t) first_seq[t] = first_seq[t - 1] + tasks[t - 1].instances.size();

    std::vector<std::vector<detail::KeyedRecord>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++) results[t] = detail::run_task(cfg, tasks[t], first_seq[t]);
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1 || tasks.size() <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < std::min<std::size_t>(jobs, tasks.size()); ++k) pool.emplace_back(worker);
    }

    std::vector<detail::KeyedRecord> all;
    for (auto& chunk : results)
        for (auto& kr : chunk) all.push_back(std::move(kr));
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.key < b.key; });

    SweepResult out;
    out.records.reserve(all.size());
    for (auto& kr : all) {
        const auto& outcome = kr.record["outcome"];
        if (outcome == "fails") ++out.failures;
        if (outcome == "borderline") ++out.borderline;
        if (outcome == "error") ++out.errors;
        out.records.push_back(std::move(kr.record));
    }
    out.exit_code = out.failures > 0 ? 2 : 0;
    return out;
}

}  // namespace sumprod

#endif  // SUMPROD_SWEEP_HPP
