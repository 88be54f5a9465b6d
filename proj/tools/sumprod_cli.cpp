// Command-line front end: one-shot checks and verifiers print JSON lines,
// `sweep` runs a configuration file.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <sumprod/sumprod.hpp>

using namespace sumprod;

namespace {

struct Common {
    u64 p = 0;
    u64 order = 0;
    std::string poly;
    u64 seed = 0;
    std::string format = "jsonl";
    std::string out = "-";
    u64 max_pairs = default_pair_budget;
};

void add_p(CLI::App* app, Common& c) { app->add_option("--p", c.p, "odd prime")->required(); }
void add_order(CLI::App* app, Common& c) { app->add_option("--order", c.order, "subgroup order, divides p - 1")->required(); }
void add_poly(CLI::App* app, Common& c) { app->add_option("--poly", c.poly, "polynomial in x, y")->required(); }
void add_output(CLI::App* app, Common& c) {
    app->add_option("--format", c.format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
    app->add_option("--out", c.out, "output path, - for stdout");
    app->add_option("--seed", c.seed, "seed recorded in the report");
    app->add_option("--max-pairs", c.max_pairs, "pair enumeration budget");
}

void print_line(const Json& j) { std::cout << j.dump() << '\n'; }

Json poly_json(const FpPoly& P, const std::string& text) { return Json{{"poly", text}, {"canonical", P.to_string()}}; }

void write_records(const std::vector<ReportRecord>& records, const Common& c) {
    if (c.out == "-")
        write_report(std::cout, records, parse_format(c.format));
    else
        emit_report(records, parse_format(c.format), c.out);
}

int emit(const std::vector<ReportRecord>& records, const Common& c) {
    write_records(records, c);
    for (const auto& r : records)
        if (r["outcome"] == "fails") return 2;
    return 0;
}

std::vector<FpUniPoly> parse_univariate_list(const std::vector<std::string>& texts, Prime p) {
    std::vector<FpUniPoly> out;
    for (const auto& t : texts) {
        const auto P = parse_bipoly(t, p);
        if (P.deg_y() > 0) fail(ErrorCode::invalid_argument, "'" + t + "' must not involve y");
        out.push_back(P.is_zero() ? FpUniPoly(PrimeField(p)) : P.coeffs_in_y().at(0));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sum-product bounds for polynomial images of multiplicative subgroups"};
    app.require_subcommand(1);
    Common c;

    auto* subgroups = app.add_subcommand("subgroups", "list the subgroups of F_p^*");
    add_p(subgroups, c);
    std::optional<u64> admitted_n;
    subgroups->add_option("--admitted-n", admitted_n, "only subgroups admitted for this degree");

    auto* check_good = app.add_subcommand("check-good", "test whether P is good");
    add_p(check_good, c);
    add_poly(check_good, c);
    std::optional<unsigned> oracle_degree;
    u64 max_ext = ExtField::default_element_budget;
    check_good->add_option("--oracle", oracle_degree, "also search factors of P - 1 over F_{p^d}, d <= this");
    check_good->add_option("--max-ext", max_ext, "largest extension field size for --oracle");

    auto* check_required = app.add_subcommand("check-required", "test whether P is required");
    add_p(check_required, c);
    add_poly(check_required, c);

    std::vector<u64> a_set, b_set;
    auto* image_cmd = app.add_subcommand("image", "compute P(A, B)");
    add_p(image_cmd, c);
    add_poly(image_cmd, c);
    image_cmd->add_option("--a-set", a_set, "comma-separated values")->delimiter(',')->required();
    image_cmd->add_option("--b-set", b_set, "comma-separated values")->delimiter(',')->required();

    u64 mu = 0;
    auto* intersect = app.add_subcommand("intersect-shift", "|G intersect (G + mu)|");
    add_p(intersect, c);
    add_order(intersect, c);
    intersect->add_option("--mu", mu, "nonzero shift")->required();

    std::vector<u64> ys;
    auto* extract = app.add_subcommand("extract-permissible", "greedy permissible subset of P(x, y_i)");
    add_p(extract, c);
    add_poly(extract, c);
    extract->add_option("--ys", ys, "comma-separated distinct y values")->delimiter(',')->required();

    auto* verify = app.add_subcommand("verify", "check one inequality instance");
    verify->require_subcommand(1);
    auto* v_t2 = verify->add_subcommand("t2", "|P(G, G)| > c |G|^(3/2)");
    add_p(v_t2, c);
    add_order(v_t2, c);
    add_poly(v_t2, c);
    add_output(v_t2, c);
    std::vector<u64> alphas;
    auto* v_vm = verify->add_subcommand("vm", "level-set pair count");
    add_p(v_vm, c);
    add_order(v_vm, c);
    add_poly(v_vm, c);
    v_vm->add_option("--alphas", alphas, "comma-separated levels, one per coset")->delimiter(',')->required();
    add_output(v_vm, c);
    auto* v_gv = verify->add_subcommand("gv", "|G intersect (G + mu)| <= 4 |G|^(2/3)");
    add_p(v_gv, c);
    add_order(v_gv, c);
    v_gv->add_option("--mu", mu, "nonzero shift")->required();
    add_output(v_gv, c);
    std::vector<std::string> fs_text;
    std::vector<u64> coset_reps;
    auto* v_thmap = verify->add_subcommand("thmap", "fiber set bound for permissible f_i");
    add_p(v_thmap, c);
    add_order(v_thmap, c);
    v_thmap->add_option("--fs", fs_text, "semicolon-separated polynomials in x")->delimiter(';')->required();
    v_thmap->add_option("--coset-reps", coset_reps, "comma-separated coset representatives")->delimiter(',')->required();
    add_output(v_thmap, c);

    auto* probe = app.add_subcommand("probe", "report exploratory metrics");
    probe->require_subcommand(1);
    auto* p_growth = probe->add_subcommand("growth", "|G + G| and |G - G| against |G|^(4/3), |G|^(3/2)");
    add_p(p_growth, c);
    add_order(p_growth, c);
    add_output(p_growth, c);
    ProbeConfig probe_cfg;
    auto* p_fact = probe->add_subcommand("factorization", "test a representation G = P(A, B)");
    add_p(p_fact, c);
    add_order(p_fact, c);
    add_poly(p_fact, c);
    p_fact->add_option("--a-set", a_set, "comma-separated values")->delimiter(',')->required();
    p_fact->add_option("--b-set", b_set, "comma-separated values")->delimiter(',')->required();
    p_fact->add_option("--delta", probe_cfg.delta, "|G| < p^(1 - delta)");
    p_fact->add_option("--epsilon", probe_cfg.epsilon, "exponent window half-width");
    add_output(p_fact, c);

    std::string config_path;
    unsigned jobs = 1;
    auto* sweep = app.add_subcommand("sweep", "run a JSON sweep configuration");
    sweep->add_option("--config", config_path, "configuration file")->required();
    sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 1024u));
    sweep->add_option("--format", c.format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
    sweep->add_option("--out", c.out, "output path, - for stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*subgroups) {
            const Prime p = make_prime(c.p);
            for (const auto& G : enumerate_subgroups(p)) {
                if (admitted_n && !is_admitted(G, *admitted_n)) continue;
                Json j{{"p", c.p}, {"order", G.order()}, {"generator", G.generator()}, {"cofactor", G.cofactor()}};
                if (admitted_n) j["admitted_for_n"] = *admitted_n;
                print_line(j);
            }
            return 0;
        }
        if (*check_good) {
            const Prime p = make_prime(c.p);
            const auto P = parse_bipoly(c.poly, p);
            const auto v = is_good(P);
            Json j = poly_json(P, c.poly);
            j["p"] = c.p;
            j["good"] = v.good;
            j["reason"] = to_string(v.reason);
            if (oracle_degree) {
                const auto w = FactorOracle(p, *oracle_degree, max_ext).find_factor(P.shifted(PrimeField(p).one()));
                j["oracle_factor"] = w ? Json(w->factor.to_string()) : Json(nullptr);
                j["oracle_extension"] = w ? Json(w->extension_degree) : Json(nullptr);
            }
            print_line(j);
            return 0;
        }
        if (*check_required) {
            const auto P = parse_bipoly(c.poly, make_prime(c.p));
            Json j = poly_json(P, c.poly);
            j["p"] = c.p;
            j["required"] = is_required(P);
            print_line(j);
            return 0;
        }
        if (*image_cmd) {
            const Prime p = make_prime(c.p);
            const auto P = parse_bipoly(c.poly, p);
            const auto img = image(P, ValueSet(p, a_set), ValueSet(p, b_set));
            Json j = poly_json(P, c.poly);
            j["p"] = c.p;
            j["size"] = img.size();
            j["values"] = img.members();
            print_line(j);
            return 0;
        }
        if (*intersect) {
            const Subgroup G(make_prime(c.p), c.order);
            print_line(Json{{"p", c.p}, {"order", c.order}, {"mu", mu}, {"count", shift_intersection(G, mu)}});
            return 0;
        }
        if (*extract) {
            const Prime p = make_prime(c.p);
            const auto P = parse_bipoly(c.poly, p);
            const auto e = extract_permissible(P, ys);
            std::vector<u64> kept;
            for (auto i : e.kept) kept.push_back(ys[i]);
            std::vector<u64> degenerate;
            for (auto i : e.dropped_degenerate) degenerate.push_back(ys[i]);
            Json j = poly_json(P, c.poly);
            j["p"] = c.p;
            j["kept_ys"] = kept;
            j["dropped_degenerate_ys"] = degenerate;
            j["guarantee"] = e.guarantee;
            j["permissible"] = e.permissible;
            j["meets_guarantee"] = e.meets_guarantee;
            print_line(j);
            return 0;
        }
        if (*verify) {
            const Prime p = make_prime(c.p);
            const Subgroup G(p, c.order);
            if (*v_t2 || *v_vm) {
                const auto P = parse_bipoly(c.poly, p);
                ReportRecord r = base_record(*v_t2 ? "t2" : "vm", p, G.order(), G.generator(), c.poly, c.seed);
                if (*v_t2) {
                    apply_verdict(r, verify_theorem2(P, G, c.max_pairs));
                } else {
                    r["params"] = Json{{"alphas", alphas}, {"h", alphas.size()}};
                    apply_verdict(r, verify_vm(P, G, ValueSet(p, alphas), c.max_pairs));
                }
                return emit({r}, c);
            }
            if (*v_gv) {
                ReportRecord r = base_record("gv", p, G.order(), G.generator(), "", c.seed);
                r["params"] = Json{{"mu", mu}};
                apply_verdict(r, verify_gv(G, mu));
                return emit({r}, c);
            }
            const auto fs = parse_univariate_list(fs_text, p);
            if (coset_reps.size() != fs.size())
                fail(ErrorCode::length_mismatch, std::to_string(fs.size()) + " polynomials vs " + std::to_string(coset_reps.size()) + " cosets");
            std::vector<Coset> cosets;
            for (u64 v : coset_reps) cosets.push_back(coset_of(v, G));
            ReportRecord r = base_record("thmap", p, G.order(), G.generator(), "", c.seed);
            r["params"] = Json{{"fs", fs_text}, {"coset_reps", coset_reps}};
            apply_verdict(r, verify_thmap(fs, cosets, G, c.max_pairs));
            return emit({r}, c);
        }
        if (*probe) {
            const Prime p = make_prime(c.p);
            const Subgroup G(p, c.order);
            if (*p_growth) {
                ReportRecord r = base_record("growth", p, G.order(), G.generator(), "", c.seed);
                r["metrics"] = to_json(probe_growth(G, c.max_pairs));
                r["outcome"] = "reported";
                return emit({r}, c);
            }
            const auto P = parse_bipoly(c.poly, p);
            ReportRecord r = base_record("probe", p, G.order(), G.generator(), c.poly, c.seed);
            r["params"] = Json{{"A", a_set}, {"B", b_set}, {"delta", probe_cfg.delta}, {"epsilon", probe_cfg.epsilon}};
            try {
                r["metrics"] = to_json(probe_factorization(P, ValueSet(p, a_set), ValueSet(p, b_set), G, probe_cfg, c.max_pairs));
                r["outcome"] = "reported";
            } catch (const std::logic_error& e) {
                r["outcome"] = "fails";
                r["error"] = e.what();
            }
            return emit({r}, c);
        }
        if (*sweep) {
            const auto cfg = load_sweep_config(config_path);
            const auto result = run_sweep(cfg, jobs);
            write_records(result.records, c);
            std::cerr << result.records.size() << " records, " << result.failures << " fails, " << result.borderline
                      << " borderline, " << result.errors << " errors\n";
            return result.exit_code;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
