// Command-line front end: formula series, oracle counts, Dirichlet prefixes and
// verification suites, reported as JSON or TSV.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clzeta/dirichlet.hpp"
#include "clzeta/errors.hpp"
#include "clzeta/formulas.hpp"
#include "clzeta/framing.hpp"
#include "clzeta/matrix_points.hpp"
#include "clzeta/partition.hpp"
#include "clzeta/permutations.hpp"
#include "clzeta/pgroup.hpp"
#include "clzeta/relations.hpp"
#include "clzeta/series.hpp"
#include "clzeta/verify.hpp"

using namespace clzeta;
using nlohmann::json;

namespace {

using Row = std::vector<std::string>;

struct Output {
    json params = json::object();
    json result = json::object();
    std::vector<Row> rows;
    bool passed = true;
};

struct Common {
    std::string format = "json";
    bool no_timing = false;
    int shards = 1;
    std::optional<std::uint64_t> budget;
};

std::uint64_t env_budget(std::uint64_t fallback)
{
    if (const char* env = std::getenv("CLZETA_BUDGET")) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used == std::string(env).size() && v > 0)
                return v;
        } catch (const std::exception&) {
        }
        throw InvalidArgumentError("CLZETA_BUDGET must be a positive integer");
    }
    return fallback;
}

std::uint64_t resolve_budget(const Common& c, std::uint64_t fallback)
{
    return c.budget ? *c.budget : env_budget(fallback);
}

std::string num(const Rational& r) { return r.get_num().get_str(); }
std::string den(const Rational& r) { return r.get_den().get_str(); }

std::vector<Row> series_rows(const TruncSeries& s)
{
    std::vector<Row> rows;
    for (const auto& [exps, c] : s.terms()) {
        Row row;
        for (int e : exps)
            row.push_back(std::to_string(e));
        row.push_back(num(c));
        row.push_back(den(c));
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit(const std::string& command, const Common& c, const Output& out, double elapsed_ms)
{
    if (c.format == "tsv") {
        for (const auto& row : out.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                std::cout << (i ? "\t" : "") << row[i];
            std::cout << '\n';
        }
        return;
    }
    json report = {{"command", command}, {"params", out.params}, {"result", out.result}};
    if (!c.no_timing)
        report["elapsed_ms"] = elapsed_ms;
    std::cout << report.dump(2) << '\n';
}

// ---- series -------------------------------------------------------------------------

struct SeriesArgs {
    std::string id;
    int b = 1;
    std::optional<std::string> q;
    int trunc = 6;
    int trunc_u = 6;
    int trunc_q = 20;
};

Output run_series(const SeriesArgs& a)
{
    CurveDescriptor curve;
    curve.family = parse_formula_id(a.id);
    curve.b = a.b;
    curve.trunc_t = a.trunc;
    curve.trunc_u = a.trunc_u;
    curve.trunc_q = a.trunc_q;
    Output out;
    out.params = {{"id", a.id}, {"trunc", a.trunc}};
    if (uses_b(curve.family))
        out.params["b"] = a.b;
    if (is_formal(curve.family)) {
        if (a.q)
            throw InvalidArgumentError("formula '" + a.id + "' is formal in q; drop --q");
        out.params["trunc_u"] = a.trunc_u;
        out.params["trunc_q"] = a.trunc_q;
    } else {
        if (!a.q)
            throw InvalidArgumentError("formula '" + a.id + "' needs --q");
        curve.q = parse_rational(*a.q);
        out.params["q"] = to_string(*curve.q);
    }
    const TruncSeries s = build_formula(curve);
    out.result = to_json(s);
    out.rows = series_rows(s);
    return out;
}

// ---- oracle -------------------------------------------------------------------------

struct OracleArgs {
    std::string op = "count";
    std::string relations = "A*B - B*A";
    long q = 2;
    int n = 2;
    int nmax = 3;
    std::string lambda;
    std::string mode = "all";
    int b = 1;
    int d = 1;
    int r = 2;
    int k = 2;
    std::string strategy = "auto";
};

Output run_oracle(const OracleArgs& a, const Common& c)
{
    Output out;
    out.params = {{"op", a.op}};
    auto value = [&](const std::string& v) {
        out.result["value"] = v;
        out.rows.push_back({"value", v});
    };

    if (a.op == "count" || a.op == "series") {
        const RelationSystem system = parse_relations(a.relations);
        OracleOptions opts;
        opts.budget = resolve_budget(c, opts.budget);
        opts.shards = c.shards;
        opts.strategy = parse_strategy(a.strategy);
        out.params["relations"] = to_string(system);
        out.params["q"] = a.q;
        out.params["strategy"] = a.strategy;
        out.params["budget"] = opts.budget;
        if (a.op == "count") {
            out.params["n"] = a.n;
            const CountResult r = count_matrix_points(system, a.n, a.q, opts);
            value(to_string(r.value));
            out.result["strategy"] = to_string(r.used);
            out.rows.push_back({"strategy", to_string(r.used)});
        } else {
            out.params["nmax"] = a.nmax;
            const TruncSeries s = oracle_cl_series(system, a.q, a.nmax, opts);
            out.result = to_json(s);
            out.rows = series_rows(s);
        }
        return out;
    }
    if (a.op == "perms") {
        out.params["n"] = a.n;
        out.params["r"] = a.r;
        value(to_string(commuting_perm_count(a.n, a.r)));
        return out;
    }
    if (a.op == "groupoid") {
        const std::uint64_t budget = resolve_budget(c, kEndoBudget);
        out.params["p"] = a.q;
        out.params["k"] = a.k;
        value(to_string(module_groupoid_count(a.q, a.k, budget)));
        return out;
    }

    const PGroupModule m(a.q, parse_partition(a.lambda));
    out.params["p"] = a.q;
    out.params["lambda"] = to_json(m.type());
    if (a.op == "endo") {
        EndoMode mode;
        if (a.mode == "all")
            mode = EndoMode::all();
        else if (a.mode == "invertible")
            mode = EndoMode::invertible();
        else if (a.mode == "torsion")
            mode = EndoMode::torsion(a.b);
        else
            throw InvalidArgumentError("--mode must be all, invertible or torsion");
        const std::uint64_t budget = resolve_budget(c, kEndoBudget);
        out.params["mode"] = a.mode;
        if (a.mode == "torsion")
            out.params["b"] = a.b;
        value(to_string(enumerate_endomorphisms(m, mode, budget)));
    } else if (a.op == "surj") {
        const std::uint64_t budget = resolve_budget(c, kEndoBudget);
        out.params["d"] = a.d;
        const SurjProb sp = surj_prob(m, a.d, budget);
        out.result["closed_form"] = to_string(sp.closed_form);
        out.rows.push_back({"closed_form", to_string(sp.closed_form)});
        if (sp.enumerated) {
            out.result["enumerated"] = to_string(*sp.enumerated);
            out.rows.push_back({"enumerated", to_string(*sp.enumerated)});
            out.passed = *sp.enumerated == sp.closed_form;
        } else {
            out.result["enumerated"] = nullptr;
        }
    } else if (a.op == "framing") {
        const RelationSystem system = parse_relations(a.relations);
        FramingOptions opts;
        opts.budget = resolve_budget(c, opts.budget);
        opts.shards = c.shards;
        out.params["relations"] = to_string(system);
        out.params["d"] = a.d;
        const FramingStats st = stable_framing_stats({system, m, a.d}, opts);
        const std::vector<std::pair<std::string, std::string>> fields{
            {"matrix_points", to_string(st.matrix_points)}, {"total", to_string(st.total)},
            {"stable", to_string(st.stable)},               {"aut_order", to_string(st.aut_order)},
            {"quot_count", to_string(st.quot_count)}};
        for (const auto& [k, v] : fields) {
            out.result[k] = v;
            out.rows.push_back({k, v});
        }
        out.result["divisible"] = st.divisible;
        out.rows.push_back({"divisible", st.divisible ? "true" : "false"});
        out.passed = st.divisible;
    } else if (a.op == "conj") {
        value(std::to_string(conj_classes_aut(m, resolve_budget(c, kAutBudget))));
    } else {
        throw InvalidArgumentError("unknown --op '" + a.op + "'");
    }
    return out;
}

// ---- dirichlet ----------------------------------------------------------------------

struct DirichletArgs {
    std::string kind = "clzeta";
    std::string ring = "Z";
    long param = 0;
    long length = 32;
};

BaseRing parse_ring(const std::string& ring, long param)
{
    if (ring == "Z")
        return BaseRing::integers();
    if (ring == "Zp")
        return BaseRing::padic(param);
    if (ring == "FqT")
        return BaseRing::poly(param);
    if (ring == "FqTT")
        return BaseRing::power_series(param);
    throw InvalidArgumentError("--ring must be Z, Zp, FqT or FqTT");
}

Output run_dirichlet(const DirichletArgs& a)
{
    const BaseRing ring = parse_ring(a.ring, a.param);
    Output out;
    out.params = {{"kind", a.kind}, {"ring", a.ring}, {"N", a.length}};
    if (ring.kind != RingKind::Z)
        out.params["param"] = a.param;
    DirichletSeries f(1);
    if (a.kind == "zeta")
        f = dedekind_zeta(ring, a.length);
    else if (a.kind == "clzeta")
        f = ring.is_local() ? clzeta_base(ring, a.length) : clzeta_ZT(ring, a.length);
    else
        throw InvalidArgumentError("--kind must be zeta or clzeta");
    out.result = to_json(f);
    for (long n = 1; n <= f.length(); ++n)
        if (f[n] != 0)
            out.rows.push_back({std::to_string(n), num(f[n]), den(f[n])});
    return out;
}

// ---- verify -------------------------------------------------------------------------

struct VerifyArgs {
    std::string suite;
    std::optional<long> q;
    std::optional<int> nmax;
    std::optional<int> b;
};

Output run_verify(const VerifyArgs& a, const Common& c)
{
    SuiteOptions opts;
    opts.q = a.q;
    opts.nmax = a.nmax;
    opts.b = a.b;
    opts.shards = c.shards;
    if (c.budget || std::getenv("CLZETA_BUDGET"))
        opts.budget = resolve_budget(c, 0);

    std::vector<std::string> names;
    if (a.suite == "all")
        names = suite_names();
    else
        names.push_back(a.suite);

    Output out;
    out.params = {{"suite", a.suite}, {"shards", c.shards}};
    if (a.q)
        out.params["q"] = *a.q;
    if (a.nmax)
        out.params["nmax"] = *a.nmax;
    if (a.b)
        out.params["b"] = *a.b;
    json suites = json::array();
    for (const auto& name : names) {
        const SuiteReport rep = run_suite(name, opts);
        suites.push_back(to_json(rep));
        for (const auto& check : rep.checks)
            out.rows.push_back({rep.suite, check.name, check.pass ? "PASS" : "FAIL", check.lhs, check.rhs});
        out.passed = out.passed && rep.passed();
    }
    out.result = {{"suites", suites}, {"passed", out.passed}};
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cohen-Lenstra zeta functions: closed forms, exact oracles and cross-checks"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
        sub->add_flag("--no-timing", common.no_timing, "Omit elapsed_ms from JSON reports");
        sub->add_option("--shards", common.shards, "Worker threads for enumeration")->check(CLI::PositiveNumber);
        sub->add_option("--budget", common.budget, "Enumeration budget (overrides CLZETA_BUDGET)");
    };

    SeriesArgs sa;
    auto* series = app.add_subcommand("series", "Closed-form generating function");
    series->add_option("--id", sa.id, "Formula id")->required()->check(CLI::IsMember(formula_ids()));
    series->add_option("--b", sa.b, "Nilpotency exponent b")->check(CLI::PositiveNumber);
    series->add_option("--q", sa.q, "Residue field size (rational > 1)");
    series->add_option("--trunc", sa.trunc, "Exclusive bound on the t-degree")->check(CLI::PositiveNumber);
    series->add_option("--trunc-u", sa.trunc_u, "Exclusive bound on the u-degree (formal ids)")->check(CLI::PositiveNumber);
    series->add_option("--trunc-q", sa.trunc_q, "Exclusive bound on the q-degree (formal ids)")->check(CLI::PositiveNumber);
    add_common(series);

    OracleArgs oa;
    auto* oracle = app.add_subcommand("oracle", "Exhaustive counts");
    oracle->add_option("--op", oa.op, "count, series, endo, groupoid, conj, surj, framing or perms")
        ->check(CLI::IsMember({"count", "series", "endo", "groupoid", "conj", "surj", "framing", "perms"}));
    oracle->add_option("--relations", oa.relations, "Relations in A and B, comma separated");
    oracle->add_option("--q,--p", oa.q, "Prime field size");
    oracle->add_option("--n", oa.n, "Matrix size (count) or number of letters (perms)");
    oracle->add_option("--nmax", oa.nmax, "Largest matrix size (series)");
    oracle->add_option("--lambda", oa.lambda, "Module type, e.g. 2,1");
    oracle->add_option("--mode", oa.mode, "all, invertible or torsion (endo)");
    oracle->add_option("--b", oa.b, "Torsion exponent (endo --mode torsion)");
    oracle->add_option("--d", oa.d, "Number of elements (surj) or framing rank (framing)");
    oracle->add_option("--r", oa.r, "Tuple length (perms)");
    oracle->add_option("--k", oa.k, "Module length (groupoid)");
    oracle->add_option("--strategy", oa.strategy, "auto, linear-in-B or full")
        ->check(CLI::IsMember({"auto", "linear-in-B", "full"}));
    add_common(oracle);

    DirichletArgs da;
    auto* dirichlet = app.add_subcommand("dirichlet", "Dirichlet series prefix");
    dirichlet->add_option("--kind", da.kind, "zeta or clzeta")->check(CLI::IsMember({"zeta", "clzeta"}));
    dirichlet->add_option("--ring", da.ring, "Z, Zp, FqT or FqTT")->check(CLI::IsMember({"Z", "Zp", "FqT", "FqTT"}));
    dirichlet->add_option("--param", da.param, "p or q for the non-integer rings");
    dirichlet->add_option("--N", da.length, "Prefix length")->check(CLI::PositiveNumber);
    add_common(dirichlet);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run a named verification suite");
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.push_back("all");
    verify->add_option("--suite", va.suite, "Suite name or 'all'")->required()->check(CLI::IsMember(suite_choices));
    verify->add_option("--q", va.q, "Restrict to one field size");
    verify->add_option("--nmax", va.nmax, "Largest matrix size");
    verify->add_option("--b", va.b, "Restrict to one b");
    add_common(verify);

    OracleArgs ca;
    ca.op = "conj";
    auto* conj = app.add_subcommand("conj", "Conjugacy classes of Aut(N)");
    conj->add_option("--p,--q", ca.q, "Prime")->required();
    conj->add_option("--lambda", ca.lambda, "Module type, e.g. 1,1")->required();
    add_common(conj);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        Output out;
        std::string command;
        if (*series) {
            command = "series";
            out = run_series(sa);
        } else if (*oracle) {
            command = "oracle";
            out = run_oracle(oa, common);
        } else if (*dirichlet) {
            command = "dirichlet";
            out = run_dirichlet(da);
        } else if (*verify) {
            command = "verify";
            out = run_verify(va, common);
        } else {
            command = "conj";
            out = run_oracle(ca, common);
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        emit(command, common, out, ms);
        return out.passed ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
