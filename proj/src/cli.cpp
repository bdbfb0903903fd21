#include "loyd/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "loyd/ruin_walks.hpp"
#include "loyd/comparison.hpp"
#include "loyd/coupling.hpp"
#include "loyd/errors.hpp"
#include "loyd/group_chains.hpp"
#include "loyd/lower_bound.hpp"
#include "loyd/representations.hpp"
#include "loyd/suites.hpp"
#include "loyd/tilde_graph.hpp"

namespace loyd::cli {

using nlohmann::json;

namespace {

// --- manifest access --------------------------------------------------------

const json& field(const json& m, const std::string& key) {
    auto it = m.find(key);
    if (it == m.end()) throw SchemaError("missing field '" + key + "'");
    return *it;
}

template <class T>
T get(const json& m, const std::string& key) {
    const json& v = field(m, key);
    try {
        return v.get<T>();
    } catch (const json::exception&) {
        throw SchemaError("field '" + key + "' has the wrong type");
    }
}

template <class T>
T get_or(const json& m, const std::string& key, T fallback) {
    return m.contains(key) ? get<T>(m, key) : fallback;
}

std::uint64_t get_u64(const json& m, const std::string& key) {
    const json& v = field(m, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        throw SchemaError("field '" + key + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
}

// "seeds": [..] or {"master": u64, "count": k}
std::vector<std::uint64_t> seeds_of(const json& m) {
    const json& s = field(m, "seeds");
    if (s.is_array()) {
        std::vector<std::uint64_t> out;
        for (const auto& v : s) {
            if (!v.is_number_unsigned() && !v.is_number_integer()) throw SchemaError("seed list must hold integers");
            out.push_back(v.get<std::uint64_t>());
        }
        if (out.empty()) throw SchemaError("seed list is empty");
        return out;
    }
    if (s.is_object()) {
        const int count = get<int>(s, "count");
        if (count < 1) throw SchemaError("seeds.count must be >= 1");
        return seed_list(get_u64(s, "master"), count);
    }
    throw SchemaError("field 'seeds' must be a list or {master, count}");
}

std::string csv_number(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

json interval_json(const Interval& iv) { return {{"estimate", iv.estimate}, {"lo", iv.lo}, {"hi", iv.hi}}; }

json params_json(const ExperimentParams& p) {
    return {{"n", p.n},
            {"mu", p.mu},
            {"eps", p.eps},
            {"c_user", p.c_user},
            {"t_hat", p.t_hat},
            {"horizon", p.horizon},
            {"start_shift", p.start_shift},
            {"tiles", p.tiles}};
}

// --- params / simulate ------------------------------------------------------

Outputs cmd_params(const json& m) {
    Outputs o;
    ExperimentParams p = choose_parameters(get<int>(m, "n"), get_or<double>(m, "c_user", 1.0),
                                           get_or<bool>(m, "allow_small", false));
    o.report = params_json(p);
    return o;
}

Outputs simulate_wilson(const json& m, int workers) {
    Outputs o;
    const auto seeds = seeds_of(m);
    ExperimentParams p = choose_parameters(get<int>(m, "n"), get_or<double>(m, "c_user", 1.0));
    auto rows = wilson_experiment(p, seeds, workers);
    std::string csv = "seed,w_dist,w_ref,z,n_total\n";
    std::vector<double> a, b;
    for (const auto& r : rows) {
        csv += std::to_string(r.seed) + "," + csv_number(r.w_dist) + "," + csv_number(r.w_ref) + "," +
               (r.z ? csv_number(*r.z) : std::string()) + "," + std::to_string(r.n_total) + "\n";
        a.push_back(r.w_dist);
        b.push_back(r.w_ref);
    }
    o.files["wilson.csv"] = csv;
    Rng boot(derive_seed(seeds.front(), 0xb0075), "bootstrap");
    o.report = {{"job", "wilson"},
                {"params", params_json(p)},
                {"runs", rows.size()},
                {"mean_w_dist", mean_var(a).mean},
                {"mean_w_ref", mean_var(b).mean},
                {"tv_separation", interval_json(tv_separation(a, b, boot))}};
    return o;
}

Outputs simulate_counts(const json& m, int workers) {
    Outputs o;
    const int n = get<int>(m, "n");
    auto r = count_concentration(n, get<std::vector<std::int64_t>>(m, "checkpoints"), seeds_of(m), workers);
    o.report = {{"job", "counts"},       {"n", n},
                {"checkpoints", r.checkpoints}, {"max_mean_deviation", r.mean_dev},
                {"max_variance", r.max_var},    {"a_hat", r.a_hat},
                {"c_hat", r.c_hat},             {"partition_identity", r.partition_ok}};
    o.passed = r.partition_ok;
    return o;
}

Outputs simulate_symmetry(const json& m) {
    Outputs o;
    const int n = get<int>(m, "n");
    const auto horizon = get<std::int64_t>(m, "horizon");
    ExperimentParams p = choose_parameters(n, 1.0);
    std::vector<TileTrace> traces;
    for (auto s : seeds_of(m)) {
        Rng rng(s, "symmetry");
        auto run = run_traced_loyd(p, horizon, rng);
        traces.insert(traces.end(), run.traces.begin(), run.traces.end());
    }
    auto w = walk_symmetry(n, traces);
    const double level = get_or<double>(m, "level", 1e-3);
    o.report = {{"job", "symmetry"}, {"n", n},          {"horizon", horizon},  {"up", w.up},
                {"down", w.down},    {"hold", w.hold},  {"p_value", w.p_value}, {"slope", w.slope},
                {"slope_se", w.slope_se}, {"cos_2pi_over_n", cos_feature(n, 1)}};
    o.passed = w.p_value > level && w.hold > 0;
    return o;
}

Outputs simulate_coupling(const json& m) {
    Outputs o;
    const int n = get_or<int>(m, "n", 64);
    const auto variant_s = get_or<std::string>(m, "variant", "horizontal");
    CouplingVariant variant;
    if (variant_s == "horizontal") variant = CouplingVariant::horizontal;
    else if (variant_s == "vertical") variant = CouplingVariant::vertical;
    else throw SchemaError("variant must be horizontal or vertical");
    const int trials = get_or<int>(m, "trials", 100000);
    Rng rng(get_u64(m, "seed"), "coupling");
    json table = json::array();
    for (int d : get_or<std::vector<int>>(m, "distances", {1, 2, 4, 8, 16})) {
        std::int64_t e = 0;
        for (int i = 0; i < trials; ++i) e += coupled_holes(n, 0, d, variant, rng).event_e;
        const double pe = static_cast<double>(e) / trials;
        table.push_back({{"d", d}, {"p_event", pe}, {"scaled", pe * (d + 1)}});
    }
    auto marg = coupling_marginals(n, variant, get_or<std::int64_t>(m, "marginal_steps", 1'000'000), rng);
    const std::vector<double> law{0.125, 0.125, 0.125, 0.125, 0.5};
    auto c1 = chi_square({marg.primary.begin(), marg.primary.end()}, law);
    auto c2 = chi_square({marg.secondary.begin(), marg.secondary.end()}, law);
    o.report = {{"job", "coupling"}, {"n", n}, {"variant", variant_s}, {"trials", trials}, {"events", table},
                {"marginal_p_primary", c1.p_value}, {"marginal_p_secondary", c2.p_value}};
    o.passed = c1.p_value > 1e-3 && c2.p_value > 1e-3;
    return o;
}

Outputs simulate_trace(const json& m) {
    Outputs o;
    ExperimentParams p = choose_parameters(get<int>(m, "n"), get_or<double>(m, "c_user", 1.0));
    const auto horizon = get_or<std::int64_t>(m, "horizon", p.horizon);
    Rng rng(seeds_of(m).front(), "trace");
    auto run = run_traced_loyd(p, horizon, rng);
    std::string lines;
    for (const auto& tr : run.traces)
        lines += json{{"tile", tr.tile}, {"times", tr.times}, {"xs", tr.xs}}.dump() + "\n";
    o.files["traces.jsonl"] = lines;
    o.files["final.json"] = run.final_state.to_json() + "\n";
    o.report = {{"job", "trace"}, {"params", params_json(p)}, {"horizon", horizon},
                {"w_dist", wilson_statistic(p, run.final_state)}};
    return o;
}

Outputs cmd_simulate(const json& m, int workers) {
    const auto job = get<std::string>(m, "job");
    if (job == "wilson") return simulate_wilson(m, workers);
    if (job == "counts") return simulate_counts(m, workers);
    if (job == "symmetry") return simulate_symmetry(m);
    if (job == "coupling") return simulate_coupling(m);
    if (job == "trace") return simulate_trace(m);
    throw SchemaError("unknown simulate job '" + job + "'");
}

// --- represent --------------------------------------------------------------

Outputs cmd_represent(const json& m) {
    Outputs o;
    const auto layer_s = get<std::string>(m, "layer");
    Layer layer;
    try {
        layer = layer_from_string(layer_s);
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
    const int n = get<int>(m, "n");
    const int count = get_or<int>(m, "count", 10000);
    ChainOptions opts;
    opts.or_holding = or_holding_from_string(get_or<std::string>(m, "or_holding", "counted"));
    Rng rng(get_u64(m, "seed"), "represent");
    std::map<std::size_t, std::uint64_t> lengths;
    std::uint64_t failures = 0;
    json witness;
    for (int i = 0; i < count; ++i) {
        LayerSample s = sample_and_check(layer, n, rng, opts);
        ++lengths[s.length];
        if (!s.ok) {
            ++failures;
            if (witness.is_null()) witness = {{"source", s.source}, {"target", s.target}};
        }
    }
    json hist = json::array();
    std::size_t max_len = 0;
    for (auto [len, c] : lengths) {
        hist.push_back({{"length", len}, {"count", c}});
        max_len = std::max(max_len, len);
    }
    o.report = {{"layer", layer_s}, {"n", n}, {"samples", count}, {"failures", failures},
                {"max_length", max_len}, {"lengths", hist}};
    if (!witness.is_null()) o.report["witness"] = witness;
    if (get_or<bool>(m, "compare", false)) {
        ComparisonReport c;
        if (layer_s == "rt-hc") c = compare_rt_hc(n);
        else if (layer_s == "or-bgb") c = compare_or_bgb_series(n, opts);
        else if (layer_s == "bgb-pc") c = compare_bgb_pc(n);
        else c = compare_deterministic(layer_s, n);
        o.report["comparison"] = json::parse(to_json(c));
    }
    o.passed = failures == 0;
    return o;
}

// --- spectral ---------------------------------------------------------------

json spectral_json(const SpectralReport& r) {
    return {{"gap", r.gap},
            {"alpha_estimate", r.alpha_estimate},
            {"alpha_method", r.alpha_method},
            {"restarts", r.restarts},
            {"functional_value", r.functional_value},
            {"converged", r.converged},
            {"argmin", std::vector<double>(r.argmin.begin(), r.argmin.end())}};
}

Outputs spectral_n2(const json& m) {
    Outputs o;
    Rng rng(get_u64(m, "seed"), "spectral");
    const int functions = get_or<int>(m, "functions", 1000);
    json gt = json::array(), ls = json::array();
    bool ok = true;
    for (const auto& pair : n2_layer_pairs()) {
        auto g = gt_check(pair, functions, rng);
        gt.push_back({{"layer", g.layer}, {"A", g.A}, {"functions", g.functions}, {"violations", g.violations},
                      {"worst_ratio", g.worst_ratio}});
        auto l = lscomp_check(pair, rng);
        ls.push_back({{"layer", l.layer}, {"A", l.A}, {"alpha_source", l.alpha_source},
                      {"alpha_target", l.alpha_target}, {"ok", l.ok}});
        ok = ok && g.violations == 0 && l.ok;
    }
    auto h = hcor_check(rng);
    auto mix = loyd_n2_mixing(rng);
    const bool mix_ok = mix.dense_t == mix.group_t && mix.bound >= static_cast<double>(mix.dense_t);
    ok = ok && h.ok && mix_ok;
    o.report = {{"job", "n2-suite"},
                {"gt", gt},
                {"lscomp", ls},
                {"hcor", {{"alpha_or", h.alpha_or}, {"alpha_hc", h.alpha_hc}, {"kernel_difference", h.kernel_difference}, {"ok", h.ok}}},
                {"mixing", {{"dense_t", mix.dense_t}, {"group_t", mix.group_t}, {"alpha", mix.alpha}, {"bound", mix.bound}}}};
    o.passed = ok;
    return o;
}

Outputs spectral_n3(const json& m, int workers) {
    Outputs o;
    const double eps = get_or<double>(m, "eps", std::exp(-1.0));
    SparseGroupWalk w(3, MoveDistribution(ChainTag::loyd, 3).support(), workers);
    auto r = mixing_time_sparse(w, eps, get_or<std::int64_t>(m, "t_max", 100000));
    std::string csv = "t,tv\n";
    bool monotone = true;
    for (std::size_t t = 0; t < r.curve.size(); ++t) {
        csv += std::to_string(t) + "," + csv_number(r.curve[t]) + "\n";
        if (t > 0 && r.curve[t] > r.curve[t - 1] + 1e-15) monotone = false;
    }
    o.files["tv_curve.csv"] = csv;
    o.report = {{"job", "n3-mixing"}, {"states", w.size()}, {"eps", eps}, {"t_mix", r.t},
                {"converged", r.converged}, {"non_increasing", monotone}};
    o.passed = r.converged && monotone;
    return o;
}

Outputs spectral_fflemma(const json& m) {
    Outputs o;
    Rng rng(get_u64(m, "seed"), "fflemma");
    auto r = verify_fflemma(get_or<int>(m, "trials", 500), rng);
    o.report = {{"job", "fflemma"}, {"trials", r.trials}, {"violations", r.violations}, {"worst_margin", r.worst_margin}};
    if (!r.counterexample.empty()) o.report["counterexample"] = json::parse(r.counterexample);
    o.passed = r.violations == 0;
    return o;
}

Outputs spectral_chain(const json& m) {
    Outputs o;
    const auto tag = chain_from_string(get<std::string>(m, "chain"));
    ChainOptions opts;
    opts.or_holding = or_holding_from_string(get_or<std::string>(m, "or_holding", "counted"));
    const int n = get_or<int>(m, "n", 2);
    if (n != 2) throw CapacityError("dense spectral work is limited to the 2x2 puzzle");
    PuzzleStates omega(2, true);
    FiniteChain c = tag == ChainTag::or_chain ? or_chain_direct(omega, opts)
                    : tag == ChainTag::rt     ? label_chain(4, rt_moves(4, opts.holding))
                    : tag == ChainTag::hc     ? puzzle_chain(PuzzleStates(2, false), MoveDistribution(tag, 2, opts).support())
                                              : puzzle_chain(omega, MoveDistribution(tag, 2, opts).support());
    Rng rng(get_u64(m, "seed"), "spectral");
    o.report = spectral_json(log_sobolev_estimate(c, rng, get_or<int>(m, "restarts", 64)));
    o.report["chain"] = to_string(tag);
    o.report["states"] = c.size();
    return o;
}

Outputs cmd_spectral(const json& m, int workers) {
    const auto job = get<std::string>(m, "job");
    if (job == "n2-suite") return spectral_n2(m);
    if (job == "n3-mixing") return spectral_n3(m, workers);
    if (job == "fflemma") return spectral_fflemma(m);
    if (job == "chain") return spectral_chain(m);
    throw SchemaError("unknown spectral job '" + job + "'");
}

// --- oracle -----------------------------------------------------------------

Outputs oracle_heat_kernel(const json& m) {
    Outputs o;
    std::string csv = "n,start_x,start_y,a_hat,final_m\n";
    json rows = json::array();
    const int factor = get_or<int>(m, "t_factor", 50);
    for (int n : get_or<std::vector<int>>(m, "ns", {5, 8, 16, 32})) {
        TildeGraph g(n);
        for (Point x : {Point{1, 0}, Point{n / 2, n / 2}}) {
            auto h = heat_kernel_curve(g, x, static_cast<std::int64_t>(factor) * n * n);
            csv += std::to_string(n) + "," + std::to_string(x.x) + "," + std::to_string(x.y) + "," + csv_number(h.a_hat) +
                   "," + csv_number(h.m.back()) + "\n";
            rows.push_back({{"n", n}, {"start", {x.x, x.y}}, {"a_hat", h.a_hat}, {"final_m", h.m.back()},
                            {"max_mass_error", h.max_mass_error}});
        }
    }
    o.files["heat_kernel.csv"] = csv;
    o.report = {{"job", "heat-kernel"}, {"rows", rows}};
    return o;
}

Outputs oracle_conductance(const json& m) {
    Outputs o;
    const int n = get_or<int>(m, "n", 4);
    TildeGraph g(n);
    ConductanceProfile prof;
    if (n <= 4 && !get_or<bool>(m, "annealed", false)) {
        prof = conductance_exhaustive(g);
    } else {
        Rng rng(get_u64(m, "seed"), "conductance");
        prof = conductance_annealed(g, rng, get_or<int>(m, "restarts", 8), get_or<int>(m, "sweeps", 4000));
    }
    std::string csv = "r,phi\n";
    for (std::size_t i = 0; i < prof.r.size(); ++i) csv += csv_number(prof.r[i]) + "," + csv_number(prof.phi[i]) + "\n";
    o.files["conductance.csv"] = csv;
    o.report = {{"job", "conductance"}, {"n", n}, {"exact", prof.exact}, {"c_tilde", prof.c_tilde},
                {"r", prof.r}, {"phi", prof.phi}};
    if (m.contains("eps")) {
        json hk = json::array();
        for (double eps : get<std::vector<double>>(m, "eps")) {
            auto t = hk2_sufficient_time(prof, 1.0 / g.size(), eps);
            double dev = uniform_ratio_deviation(g, t);
            hk.push_back({{"eps", eps}, {"t", t}, {"deviation", dev}, {"holds", dev <= eps}});
            o.passed = o.passed && dev <= eps;
        }
        o.report["hk2"] = hk;
    }
    return o;
}

Outputs oracle_gambler(const json& m) {
    Outputs o;
    std::string csv = "k,exact,strip\n";
    bool ok = true;
    for (int k = 1; k <= get_or<int>(m, "k_max", 30); ++k) {
        Rational r = gambler_ruin_exact(k);
        double strip = gambler_ruin_strip(k, get_or<int>(m, "width", 16));
        ok = ok && r == Rational(1, k) && std::abs(strip - 1.0 / k) <= 1e-10;
        csv += std::to_string(k) + "," + std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()) + "," +
               csv_number(strip) + "\n";
    }
    o.files["gambler.csv"] = csv;
    o.report = {{"job", "gambler"}, {"all_match", ok}};
    o.passed = ok;
    return o;
}

Outputs oracle_exit_side(const json& m) {
    Outputs o;
    std::string csv = "k,lower,upper,ceiling\n";
    bool ok = true;
    for (int k = 1; k <= get_or<int>(m, "k_max", 20); ++k) {
        auto e = exit_side_exact(k);
        ok = ok && e.converged && e.upper <= 2.0 / k;
        csv += std::to_string(k) + "," + csv_number(e.lower) + "," + csv_number(e.upper) + "," + std::to_string(e.ceiling) + "\n";
    }
    o.files["exit_side.csv"] = csv;
    o.report = {{"job", "exit-side"}, {"within_bound", ok}};
    o.passed = ok;
    return o;
}

Outputs oracle_relative(const json& m) {
    Outputs o;
    Rng rng(get_u64(m, "seed"), "relative");
    const int n = get_or<int>(m, "n", 5);
    auto r = relative_walk_equivalence(n, get_or<std::uint64_t>(m, "steps", 1'000'000), rng);
    o.report = {{"job", "relative-walk"}, {"n", n}, {"steps", r.steps}, {"illegal", r.illegal},
                {"hit_origin", r.hit_origin}, {"chi_square", r.chi.statistic}, {"dof", r.chi.dof},
                {"p_value", r.chi.p_value}, {"occupation_tv", r.occupation_tv}};
    o.passed = r.illegal == 0 && r.hit_origin == 0 && r.chi.p_value > 1e-3;
    return o;
}

Outputs cmd_oracle(const json& m) {
    const auto job = get<std::string>(m, "job");
    if (job == "heat-kernel") return oracle_heat_kernel(m);
    if (job == "conductance") return oracle_conductance(m);
    if (job == "gambler") return oracle_gambler(m);
    if (job == "exit-side") return oracle_exit_side(m);
    if (job == "relative-walk") return oracle_relative(m);
    throw SchemaError("unknown oracle job '" + job + "'");
}

void emit_error(std::ostream& err, const std::string& code, int exit_code, const std::string& message) {
    err << json{{"error", {{"code", code}, {"exit", exit_code}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

Outputs run_manifest(const json& manifest, int workers) {
    if (!manifest.is_object()) throw SchemaError("manifest must be a JSON object");
    const int version = get<int>(manifest, "schema_version");
    if (version != schema_version) throw SchemaError("unsupported schema_version " + std::to_string(version));
    const auto cmd = get<std::string>(manifest, "subcommand");
    Outputs o;
    if (cmd == "params") o = cmd_params(manifest);
    else if (cmd == "simulate") o = cmd_simulate(manifest, workers);
    else if (cmd == "represent") o = cmd_represent(manifest);
    else if (cmd == "spectral") o = cmd_spectral(manifest, workers);
    else if (cmd == "oracle") o = cmd_oracle(manifest);
    else throw SchemaError("unknown subcommand '" + cmd + "'");
    o.report["schema_version"] = schema_version;
    o.report["subcommand"] = cmd;
    o.report["passed"] = o.passed;
    return o;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Loyd puzzle mixing experiments"};
    app.require_subcommand(1);
    std::string manifest_path, out_dir;
    std::optional<std::uint64_t> seed;
    int workers = 1;
    app.add_option("--manifest", manifest_path, "JSON manifest");
    app.add_option("--seed", seed, "seed (overrides the manifest)");
    app.add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--out", out_dir, "directory for output files");

    // quick one-off flags; anything richer goes through a manifest
    json flags = json::object();
    std::string job, layer, chain;
    int n = 0, count = 0;
    double c_user = 0.0;
    bool compare = false;
    for (const char* name : {"simulate", "represent", "spectral", "oracle", "params"}) {
        auto* sub = app.add_subcommand(name);
        sub->fallthrough();
        sub->add_option("--job", job);
        sub->add_option("--n", n);
        if (std::string(name) == "represent") {
            sub->add_option("--layer", layer);
            sub->add_option("--count", count);
            sub->add_flag("--compare", compare);
        }
        if (std::string(name) == "params" || std::string(name) == "simulate") sub->add_option("--c-user", c_user);
        if (std::string(name) == "spectral") sub->add_option("--chain", chain);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        emit_error(err, "usage", usage, e.what());
        return usage;
    }

    try {
        json m = json::object();
        if (!manifest_path.empty()) {
            std::ifstream in(manifest_path);
            if (!in) throw SchemaError("cannot read manifest " + manifest_path);
            try {
                in >> m;
            } catch (const json::parse_error& e) {
                throw SchemaError(std::string("manifest is not valid JSON: ") + e.what());
            }
        } else {
            m["schema_version"] = schema_version;
        }
        const std::string cmd = app.get_subcommands().front()->get_name();
        if (m.contains("subcommand") && m["subcommand"] != cmd)
            throw SchemaError("manifest is for '" + m["subcommand"].get<std::string>() + "', not '" + cmd + "'");
        m["subcommand"] = cmd;
        if (!job.empty()) m["job"] = job;
        if (n != 0) m["n"] = n;
        if (!layer.empty()) m["layer"] = layer;
        if (!chain.empty()) m["chain"] = chain;
        if (count != 0) m["count"] = count;
        if (compare) m["compare"] = true;
        if (c_user != 0.0) m["c_user"] = c_user;
        if (seed) {
            m["seed"] = *seed;
            if (!m.contains("seeds")) m["seeds"] = {{"master", *seed}, {"count", 1}};
        }

        Outputs o = run_manifest(m, workers);
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            for (const auto& [name, content] : o.files) {
                std::ofstream f(std::filesystem::path(out_dir) / name, std::ios::binary);
                f << content;
            }
            std::ofstream f(std::filesystem::path(out_dir) / "report.json", std::ios::binary);
            f << o.report.dump(2) << "\n";
        }
        out << o.report.dump(2) << "\n";
        if (!o.passed) {
            emit_error(err, "verification", verification, "one or more checks failed; see report");
            return verification;
        }
        return ok;
    } catch (const SchemaError& e) {
        emit_error(err, "schema", schema, e.what());
        return schema;
    } catch (const CapacityError& e) {
        emit_error(err, "capacity", capacity, e.what());
        return capacity;
    } catch (const CappedSampleError& e) {
        emit_error(err, "capacity", capacity, e.what());
        return capacity;
    } catch (const VerificationError& e) {
        emit_error(err, "verification", verification, e.what());
        return verification;
    } catch (const std::invalid_argument& e) {
        emit_error(err, "usage", usage, e.what());
        return usage;
    } catch (const std::exception& e) {
        emit_error(err, "internal", internal, e.what());
        return internal;
    }
}

}  // namespace loyd::cli
