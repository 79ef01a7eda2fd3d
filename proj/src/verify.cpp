#include "clzeta/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "clzeta/dirichlet.hpp"
#include "clzeta/errors.hpp"
#include "clzeta/formulas.hpp"
#include "clzeta/framing.hpp"
#include "clzeta/matrix_points.hpp"
#include "clzeta/partition.hpp"
#include "clzeta/permutations.hpp"
#include "clzeta/pgroup.hpp"
#include "clzeta/relations.hpp"

namespace clzeta {

bool SuiteReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

nlohmann::json to_json(const Check& check)
{
    return {{"name", check.name}, {"pass", check.pass}, {"lhs", check.lhs}, {"rhs", check.rhs}};
}

nlohmann::json to_json(const SuiteReport& report)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks)
        checks.push_back(to_json(c));
    return {{"suite", report.suite}, {"params", report.params}, {"checks", checks}, {"passed", report.passed()}};
}

namespace {

std::string show(const Rational& r) { return to_string(r); }
std::string show(const BigInt& z) { return to_string(z); }
std::string show(const TruncSeries& s) { return to_string(s); }
std::string show(long v) { return std::to_string(v); }
std::string show(double v)
{
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

template <class L, class R>
void expect_eq(SuiteReport& rep, std::string name, const L& lhs, const R& rhs)
{
    rep.checks.push_back({std::move(name), lhs == rhs, show(lhs), show(rhs)});
}

void expect(SuiteReport& rep, std::string name, bool pass, std::string lhs, std::string rhs)
{
    rep.checks.push_back({std::move(name), pass, std::move(lhs), std::move(rhs)});
}

OracleOptions oracle_options(const SuiteOptions& o)
{
    OracleOptions out;
    out.shards = o.shards;
    if (o.budget)
        out.budget = *o.budget;
    return out;
}

std::vector<long> field_sizes(const SuiteOptions& o)
{
    return o.q ? std::vector<long>{*o.q} : std::vector<long>{2, 3};
}

std::vector<int> b_values(const SuiteOptions& o)
{
    return o.b ? std::vector<int>{*o.b} : std::vector<int>{1, 2, 3};
}

std::string qname(long q) { return "q=" + std::to_string(q); }

// Coefficients t^0..t^nmax of a formula against the matrix-point oracle.
void compare_with_oracle(SuiteReport& rep, const std::string& label, const TruncSeries& formula,
                         const RelationSystem& system, long q, int nmax, const OracleOptions& opts)
{
    const TruncSeries oracle = oracle_cl_series(system, q, nmax, opts);
    for (int n = 0; n <= nmax; ++n)
        expect_eq(rep, label + " t^" + std::to_string(n), formula.coeff({n}), oracle.coeff({n}));
}

SuiteReport feit_fine(const SuiteOptions& o)
{
    SuiteReport rep{"feit-fine", {}, {}};
    const int nmax = o.nmax.value_or(3);
    const auto qs = field_sizes(o);
    rep.params = {{"relations", "A*B - B*A"}, {"q", qs}, {"nmax", nmax}, {"shards", o.shards}};
    const auto system = parse_relations("A*B - B*A");
    const auto opts = oracle_options(o);
    for (long q : qs)
        compare_with_oracle(rep, qname(q), feit_fine_plane(q, nmax + 1), system, q, nmax, opts);
    if (!o.q && !o.nmax) {
        OracleOptions lin = opts;
        lin.strategy = Strategy::LinearInB;
        const auto count = count_matrix_points(system, 4, 2, lin);
        expect_eq(rep, "q=2 t^4 (linear-in-B)", feit_fine_plane(2, 5).coeff({4}),
                  Rational(make_rational(count.value, gl_order(4, 2))));
    }
    return rep;
}

SuiteReport curve_suite(const SuiteOptions& o, const std::string& suite, const std::string& extra,
                        const std::function<TruncSeries(int, long, int)>& formula)
{
    SuiteReport rep{suite, {}, {}};
    const int nmax = o.nmax.value_or(3);
    const auto qs = field_sizes(o);
    const auto bs = b_values(o);
    rep.params = {{"q", qs}, {"b", bs}, {"nmax", nmax}, {"shards", o.shards}};
    const auto opts = oracle_options(o);
    for (long q : qs)
        for (int b : bs) {
            std::string rel = "A*B - B*A, A^" + std::to_string(b) + extra;
            const auto system = parse_relations(rel);
            compare_with_oracle(rep, qname(q) + " b=" + std::to_string(b), formula(b, q, nmax + 1), system, q,
                                nmax, opts);
        }
    return rep;
}

SuiteReport zhat(const SuiteOptions&)
{
    SuiteReport rep{"zhat", {{"trunc", {{"t", 8}, {"u", 8}, {"q", 20}}}}, {}};
    expect_eq(rep, "partition sum = hypergeometric sum", zhat_partition_sum(8, 8, 20), zhat_hypergeometric(8, 8, 20));
    return rep;
}

VarSpec tq_spec(int trunc_t, int trunc_q) { return VarSpec({Var::t, Var::q}, {trunc_t, trunc_q}); }

TruncSeries tq_monomial(const VarSpec& spec, int a, int b)
{
    const std::array<int, 2> e{a, b};
    return TruncSeries::monomial(spec, 1, e);
}

SuiteReport u_collapse(const SuiteOptions&)
{
    SuiteReport rep{"u-collapse", {{"trunc", {{"t", 10}, {"q", 20}}}}, {}};
    const VarSpec spec = tq_spec(10, 20);
    const TruncSeries rhs = series_inv(pochhammer(tq_monomial(spec, 1, 1), Var::q, INF));
    expect_eq(rep, "partition sum at u=1", specialize(zhat_partition_sum(10, 10, 20), Var::u, 1), rhs);
    expect_eq(rep, "hypergeometric sum at u=1", specialize(zhat_hypergeometric(10, 10, 20), Var::u, 1), rhs);
    expect_eq(rep, "H at u=1", specialize(hfunc(10, 10, 20), Var::u, 1), TruncSeries::constant(spec, 1));
    return rep;
}

SuiteReport euler(const SuiteOptions&)
{
    SuiteReport rep{"euler", {{"trunc", {{"t", 12}, {"q", 20}}}}, {}};
    const VarSpec spec = tq_spec(12, 20);
    TruncSeries lhs(spec);
    for (int n = 0; n < 12; ++n) {
        TruncSeries term = tq_monomial(spec, n, 0);
        for (int r = 1; r <= n; ++r) {
            const std::array<int, 2> qr{0, r};
            term = divide_by_one_minus(term, 1, qr);
        }
        lhs += term;
    }
    expect_eq(rep, "sum t^n/(q;q)_n = 1/(t;q)_inf", lhs,
              series_inv(pochhammer(tq_monomial(spec, 1, 0), Var::q, INF)));
    return rep;
}

SuiteReport durfee(const SuiteOptions&)
{
    constexpr int W = 20;
    SuiteReport rep{"durfee", {{"window", W}, {"k_max", 5}, {"l_max", 5}}, {}};
    const VarSpec qs = VarSpec::single(Var::q, W);
    const VarSpec tq = tq_spec(W, W);
    const TruncSeries q_var = TruncSeries::variable(qs, Var::q);
    const TruncSeries tq_mono = tq_monomial(tq, 1, 1);

    auto sum_q = [&](PartitionBounds bounds) {
        TruncSeries out(qs);
        for (int n = 0; n < W; ++n)
            for_each_partition(n, bounds, [&](const Partition&) {
                const int e[1] = {n};
                out.add_term(e, 1);
            });
        return out;
    };
    auto sum_tq = [&](int k) {
        TruncSeries out(tq);
        for (int n = 0; n < W; ++n)
            for_each_partition(n, {k, std::nullopt}, [&](const Partition& lambda) {
                const std::array<int, 2> e{lambda.length(), n};
                out.add_term(e, 1);
            });
        return out;
    };
    auto qpoch = [&](long n) { return pochhammer(q_var, Var::q, n); };

    for (int k = 1; k <= 5; ++k) {
        const std::string ks = "k=" + std::to_string(k);
        expect_eq(rep, "length <= k: " + ks, sum_q({std::nullopt, k}), series_inv(qpoch(k)));
        expect_eq(rep, "largest part <= k, with t: " + ks, sum_tq(k),
                  series_inv(pochhammer(tq_mono, Var::q, k)));
        for (int l = 1; l <= 5; ++l)
            expect_eq(rep, "box k x l: " + ks + " l=" + std::to_string(l), sum_q({k, l}),
                      series_mul(qpoch(k + l), series_inv(series_mul(qpoch(k), qpoch(l)))));
    }
    // Every partition inside the window has largest part below W.
    expect_eq(rep, "largest part <= k, with t: k=" + std::to_string(W) + " (infinite product)", sum_tq(W),
              series_inv(pochhammer(tq_mono, Var::q, INF)));
    return rep;
}

SuiteReport aut_end(const SuiteOptions& o)
{
    SuiteReport rep{"aut-end", {}, {}};
    const std::uint64_t budget = o.budget.value_or(kEndoBudget);
    nlohmann::json skipped = nlohmann::json::array();
    for (long p : {2L, 3L})
        for (int k = 0; k <= 4; ++k)
            for (const auto& lambda : gen_partitions(k)) {
                const PGroupModule m(p, lambda);
                const std::string label = "p=" + std::to_string(p) + " " + to_string(lambda);
                try {
                    expect_eq(rep, label + " End", Rational(enumerate_endomorphisms(m, EndoMode::all(), budget)),
                              end_order(lambda, p));
                    expect_eq(rep, label + " Aut",
                              Rational(enumerate_endomorphisms(m, EndoMode::invertible(), budget)),
                              aut_order(lambda, p));
                    for (int b = 1; b <= 3; ++b)
                        expect_eq(rep, label + " End[p^" + std::to_string(b) + "]",
                                  Rational(enumerate_endomorphisms(m, EndoMode::torsion(b), budget)),
                                  end_torsion_order(lambda, b, p));
                } catch (const BudgetExceededError&) {
                    skipped.push_back(label);
                }
            }
    rep.params = {{"p", {2, 3}}, {"max_size", 4}, {"budget", budget}, {"skipped", skipped}};
    return rep;
}

SuiteReport zt_dirichlet(const SuiteOptions&)
{
    constexpr long N = 64;
    SuiteReport rep{"zt-dirichlet", {{"N", N}}, {}};
    const DirichletSeries z = clzeta_ZT(BaseRing::integers(), N);
    long pairs = 0;
    long agree = 0;
    for (long m = 2; m <= N; ++m)
        for (long n = m + 1; m * n <= N; ++n)
            if (std::gcd(m, n) == 1) {
                ++pairs;
                if (z[m * n] == z[m] * z[n])
                    ++agree;
            }
    expect_eq(rep, "multiplicative on coprime pairs", agree, pairs);
    for (long p : primes_up_to(N)) {
        long pk = p;
        for (int k = 1; pk <= N; ++k, pk *= p)
            expect_eq(rep, "a_" + std::to_string(pk) + " = local coefficient", z[pk], an_local(p, k));
    }
    for (long p : {2L, 3L}) {
        expect_eq(rep, "a_" + std::to_string(p) + " = p/(p-1)", z[p], make_rational(p, p - 1));
        expect_eq(rep, "a_" + std::to_string(p * p) + " = groupoid count", z[p * p], module_groupoid_count(p, 2));
    }
    expect_eq(rep, "a_8 = groupoid count", z[8], module_groupoid_count(2, 3));
    return rep;
}

SuiteReport surjectivity(const SuiteOptions& o)
{
    SuiteReport rep{"surjectivity", {}, {}};
    const std::uint64_t budget = o.budget.value_or(kEndoBudget);
    long enumerated = 0;
    for (long p : {2L, 3L})
        for (int k = 0; k <= 4; ++k)
            for (const auto& lambda : gen_partitions(k)) {
                const PGroupModule m(p, lambda);
                for (int d = 0; d <= 4; ++d) {
                    const std::string label =
                        "p=" + std::to_string(p) + " " + to_string(lambda) + " d=" + std::to_string(d);
                    const SurjProb sp = surj_prob(m, d, budget);
                    if (sp.enumerated) {
                        ++enumerated;
                        expect_eq(rep, label + " enumerated = closed form", *sp.enumerated, sp.closed_form);
                    }
                    const double miss = Rational(Rational(1) - sp.closed_form).get_d();
                    const double bound = nonsurjection_bound(m, d);
                    expect(rep, label + " 1 - P <= 2|N|ln|N| 2^-d", miss <= bound, show(miss), show(bound));
                }
            }
    rep.params = {{"p", {2, 3}}, {"max_size", 4}, {"d_max", 4}, {"budget", budget}, {"enumerated", enumerated}};
    return rep;
}

SuiteReport framing(const SuiteOptions& o)
{
    SuiteReport rep{"framing", {{"relations", "A*B - B*A"}, {"module", "F_2^2"}, {"d", {1, 8}}, {"shards", o.shards}}, {}};
    const auto system = parse_relations("A*B - B*A");
    const PGroupModule n(2, Partition({1, 1}));
    FramingOptions opts;
    opts.shards = o.shards;
    Rational previous = 0;
    for (int d = 1; d <= 8; ++d) {
        const std::string label = "d=" + std::to_string(d);
        const FramingStats st = stable_framing_stats({system, n, d}, opts);
        const Rational coh = make_rational(st.matrix_points, st.aut_order);
        const Rational ratio = make_rational(st.quot_count, pow(n.order(), static_cast<unsigned long>(d)));
        const Rational gap = coh - ratio;
        expect(rep, label + " |Aut| divides stable", st.divisible, show(st.stable), show(st.aut_order));
        expect(rep, label + " quot/|N|^d <= |Coh|", ratio <= coh, show(ratio), show(coh));
        expect(rep, label + " quot/|N|^d non-decreasing", ratio >= previous, show(ratio), show(previous));
        const double bound = nonsurjection_bound(n, d) * coh.get_d();
        expect(rep, label + " |Coh| - quot/|N|^d <= 2|N|ln|N| |Coh| 2^-d", gap.get_d() <= bound, show(gap),
               show(bound));
        if (d == 8)
            expect(rep, label + " gap < |Coh|/8", gap < coh / 8, show(gap), show(Rational(coh / 8)));
        previous = ratio;
    }
    return rep;
}

SuiteReport conj(const SuiteOptions&)
{
    SuiteReport rep{"conj", {{"p", {2, 3, 5}}}, {}};
    for (long p : {2L, 3L, 5L}) {
        const std::string ps = "p=" + std::to_string(p);
        expect_eq(rep, ps + " (1)", conj_classes_aut(PGroupModule(p, Partition({1}))), p - 1);
        expect_eq(rep, ps + " (2)", conj_classes_aut(PGroupModule(p, Partition({2}))), p * p - p);
    }
    expect_eq(rep, "q=2 (1,1)", conj_classes_aut(PGroupModule(2, Partition({1, 1}))), 3L);

    // Quadratic through the (1,1) values at q = 2, 3, 5, in Lagrange form.
    const std::array<long, 3> xs{2, 3, 5};
    std::array<Rational, 3> ys;
    for (std::size_t i = 0; i < 3; ++i)
        ys[i] = conj_classes_aut(PGroupModule(xs[i], Partition({1, 1})));
    std::array<Rational, 3> coeffs{0, 0, 0}; // c0 + c1 q + c2 q^2
    for (std::size_t i = 0; i < 3; ++i) {
        const long a = xs[(i + 1) % 3];
        const long b = xs[(i + 2) % 3];
        const Rational w = ys[i] / Rational((xs[i] - a) * (xs[i] - b));
        coeffs[0] += w * Rational(a * b);
        coeffs[1] -= w * Rational(a + b);
        coeffs[2] += w;
    }
    const std::string poly = show(coeffs[2]) + " q^2 + " + show(coeffs[1]) + " q + " + show(coeffs[0]);
    expect(rep, "(1,1) interpolant at q=2,3,5", coeffs[0] == -1 && coeffs[1] == 0 && coeffs[2] == 1, poly,
           "1/1 q^2 + 0/1 q + -1/1");
    const Rational at7 = coeffs[0] + coeffs[1] * 7 + coeffs[2] * 49;
    expect_eq(rep, "(1,1) interpolant predicts q=7", at7, Rational(conj_classes_aut(PGroupModule(7, Partition({1, 1})))));
    return rep;
}

SuiteReport perms(const SuiteOptions&)
{
    SuiteReport rep{"perms", {{"n_max", 5}, {"r", 2}}, {}};
    BigInt factorial = 1;
    for (int n = 1; n <= 5; ++n) {
        factorial *= n;
        const BigInt classes = static_cast<unsigned long>(gen_partitions(n).size());
        expect_eq(rep, "n=" + std::to_string(n) + " r=2 = p(n) n!", commuting_perm_count(n, 2), BigInt(classes * factorial));
    }
    return rep;
}

SuiteReport strategy(const SuiteOptions& o)
{
    SuiteReport rep{"strategy", {}, {}};
    const std::vector<std::string> systems{"A*B - B*A", "A*B - B*A, A", "A*B - B*A, A^2", "A*B - B*A, A*B",
                                           "A*B - B*A, A^2*B"};
    const std::uint64_t both_limit = std::uint64_t{1} << 20;
    long instances = 0;
    for (const auto& text : systems) {
        const auto system = parse_relations(text);
        for (long q : {2L, 3L, 5L})
            for (int n = 0; n <= 3; ++n) {
                OracleOptions lin;
                lin.strategy = Strategy::LinearInB;
                OracleOptions full;
                full.strategy = Strategy::Full;
                full.budget = both_limit;
                BigInt reference;
                try {
                    reference = count_matrix_points(system, n, q, full).value;
                } catch (const BudgetExceededError&) {
                    continue;
                }
                ++instances;
                const std::string label = "{" + text + "} n=" + std::to_string(n) + " " + qname(q);
                expect_eq(rep, label + " linear-in-B = full", count_matrix_points(system, n, q, lin).value, reference);
                for (int shards : {2, 8}) {
                    lin.shards = full.shards = shards;
                    const std::string sl = " shards=" + std::to_string(shards);
                    expect_eq(rep, label + " linear-in-B" + sl, count_matrix_points(system, n, q, lin).value, reference);
                    expect_eq(rep, label + " full" + sl, count_matrix_points(system, n, q, full).value, reference);
                }
            }
    }
    // Larger linear-only instances still have to be shard independent.
    const auto comm = parse_relations("A*B - B*A");
    for (long q : {2L, 3L}) {
        OracleOptions lin;
        lin.strategy = Strategy::LinearInB;
        const int n = q == 2 ? 4 : 3;
        const BigInt reference = count_matrix_points(comm, n, q, lin).value;
        for (int shards : {2, 8}) {
            lin.shards = shards;
            expect_eq(rep, "{A*B - B*A} n=" + std::to_string(n) + " " + qname(q) + " shards=" + std::to_string(shards),
                      count_matrix_points(comm, n, q, lin).value, reference);
        }
    }
    const PGroupModule n2(2, Partition({1, 1}));
    const auto base = stable_framing_stats({comm, n2, 3});
    for (int shards : {2, 8}) {
        FramingOptions fo;
        fo.shards = shards;
        expect_eq(rep, "framing F_2^2 d=3 shards=" + std::to_string(shards), stable_framing_stats({comm, n2, 3}, fo).stable,
                  base.stable);
    }
    rep.params = {{"systems", systems}, {"q", {2, 3, 5}}, {"pair_limit", both_limit}, {"shards", {1, 2, 8}},
                  {"instances", instances}};
    (void)o;
    return rep;
}

using SuiteFn = std::function<SuiteReport(const SuiteOptions&)>;

const std::map<std::string, SuiteFn>& registry()
{
    static const std::map<std::string, SuiteFn> suites{
        {"feit-fine", feit_fine},
        {"fat-line",
         [](const SuiteOptions& o) {
             return curve_suite(o, "fat-line", "", [](int b, long q, int tr) { return clzeta_fat_line(b, q, tr); });
         }},
        {"nonred-node",
         [](const SuiteOptions& o) {
             return curve_suite(o, "nonred-node", "*B",
                                [](int b, long q, int tr) { return clzeta_nonred_node_plane(b, q, tr); });
         }},
        {"zhat", zhat},
        {"u-collapse", u_collapse},
        {"euler", euler},
        {"durfee", durfee},
        {"aut-end", aut_end},
        {"zt-dirichlet", zt_dirichlet},
        {"surjectivity", surjectivity},
        {"framing", framing},
        {"conj", conj},
        {"perms", perms},
        {"strategy", strategy},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"feit-fine", "fat-line", "nonred-node", "zhat", "u-collapse",
                                                "euler", "durfee", "aut-end", "zt-dirichlet", "surjectivity",
                                                "framing", "conj", "perms", "strategy"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options)
{
    const auto& suites = registry();
    const auto it = suites.find(name);
    if (it == suites.end())
        throw InvalidArgumentError("unknown suite '" + name + "'");
    if (options.shards < 1)
        throw InvalidArgumentError("shard count must be at least 1");
    return it->second(options);
}

} // namespace clzeta
