#include <doctest.h>

#include <array>

#include "clzeta/dirichlet.hpp"
#include "clzeta/errors.hpp"
#include "clzeta/formulas.hpp"
#include "clzeta/matrix_points.hpp"
#include "clzeta/partition.hpp"

using namespace clzeta;

namespace {

// Commuting pairs of 2x2 matrices over F_p by straight nested loops.
long commuting_pairs_2x2(long p)
{
    long count = 0;
    for (long a = 0; a < p * p * p * p; ++a)
        for (long b = 0; b < p * p * p * p; ++b) {
            const long A[4] = {a % p, a / p % p, a / (p * p) % p, a / (p * p * p)};
            const long B[4] = {b % p, b / p % p, b / (p * p) % p, b / (p * p * p)};
            bool ok = true;
            for (int i = 0; i < 2 && ok; ++i)
                for (int j = 0; j < 2 && ok; ++j) {
                    long ab = 0;
                    long ba = 0;
                    for (int k = 0; k < 2; ++k) {
                        ab += A[i * 2 + k] * B[k * 2 + j];
                        ba += B[i * 2 + k] * A[k * 2 + j];
                    }
                    ok = (ab - ba) % p == 0;
                }
            if (ok)
                ++count;
        }
    return count;
}

Rational oracle_coeff(const std::string& relations, int n, long q)
{
    const auto c = count_matrix_points(parse_relations(relations), n, q).value;
    return make_rational(c, gl_order(n, q));
}

// f(t) -> f(t^d), truncated at t^trunc.
TruncSeries substitute_power(const TruncSeries& f, int d, int trunc)
{
    TruncSeries out(VarSpec::single(Var::t, trunc));
    for (const auto& [e, c] : f.terms()) {
        const int k[1] = {e[0] * d};
        out.add_term(k, c);
    }
    return out;
}

void check_positive_with_unit_constant(const TruncSeries& s)
{
    CHECK(s.coeff({0}) == 1);
    for (const auto& [e, c] : s.terms())
        CHECK(c > 0);
}

} // namespace

TEST_CASE("independent 2x2 commuting-pair count")
{
    CHECK(commuting_pairs_2x2(2) == 88);
    CHECK(count_matrix_points(parse_relations("A*B - B*A"), 2, 2).value == 88);
    CHECK(feit_fine_plane(2, 3).coeff({2}) == make_rational(88, 6));
    CHECK(feit_fine_plane(3, 3).coeff({2}) == make_rational(commuting_pairs_2x2(3), 48));
}

TEST_CASE("clzeta_dvr_poly")
{
    for (long q : {2L, 3L, 5L}) {
        const auto s = clzeta_dvr_poly(q, 5);
        CHECK(s.coeff({0}) == 1);
        CHECK(s.coeff({1}) == make_rational(q, q - 1));
        check_positive_with_unit_constant(s);
        // Modules over F_q[[x]][T]: a nilpotent A and any B commuting with it.
        CHECK(clzeta_fat_line(5, q, 5) == s);
    }
    CHECK(clzeta_dvr_poly(2, 3).coeff({2}) == oracle_coeff("A*B - B*A, A^2", 2, 2));
    CHECK(clzeta_dvr_poly(3, 4).coeff({3}) == oracle_coeff("A*B - B*A, A^3", 3, 3));
}

TEST_CASE("feit_fine_plane")
{
    CHECK(feit_fine_plane(3, 4).coeff({1}) == make_rational(9, 2));
    CHECK(feit_fine_plane(2, 4).coeff({1}) == 4);
    for (long q : {2L, 3L, 5L})
        check_positive_with_unit_constant(feit_fine_plane(q, 6));
}

TEST_CASE("feit_fine_plane is the product of dvr_poly over the places of F_q[x]")
{
    constexpr int T = 5;
    for (long q : {2L, 3L}) {
        long bound = 1;
        for (int i = 1; i < T; ++i)
            bound *= q;
        TruncSeries product = TruncSeries::constant(VarSpec::single(Var::t, T), 1);
        for (long norm : maximal_ideal_norms(BaseRing::poly(q), bound)) {
            int d = 0;
            for (long n = norm; n > 1; n /= q)
                ++d;
            product = series_mul(product, substitute_power(clzeta_dvr_poly(norm, (T - 1) / d + 1), d, T));
        }
        CHECK(product == feit_fine_plane(q, T));
    }
}

TEST_CASE("clzeta_line and clzeta_dedekind_local")
{
    for (long q : {2L, 3L}) {
        CHECK(clzeta_line(q, 6) == clzeta_fat_line(1, q, 6));
        const auto d = clzeta_dedekind_local(q, 5);
        const auto base = clzeta_base(BaseRing::padic(q), q * q * q * q);
        long n = 1;
        for (int k = 0; k < 5; ++k, n *= q)
            CHECK(d.coeff({k}) == base[n]);
    }
}

TEST_CASE("clzeta_fat_line")
{
    for (long q : {2L, 3L})
        for (int b = 1; b <= 4; ++b) {
            const auto s = clzeta_fat_line(b, q, 6);
            CHECK(s.coeff({1}) == make_rational(q, q - 1));
            check_positive_with_unit_constant(s);
        }
    CHECK(clzeta_fat_line(2, 2, 4).coeff({2}) == oracle_coeff("A*B - B*A, A^2", 2, 2));
    // Parts bounded by b is no constraint once b reaches the truncation.
    for (int b = 6; b <= 9; ++b)
        CHECK(clzeta_fat_line(b, 3, 6) == clzeta_fat_line(5, 3, 6));
    CHECK_THROWS_AS(clzeta_fat_line(0, 2, 4), InvalidArgumentError);
    CHECK_THROWS_AS(clzeta_fat_line(1, 1, 4), InvalidArgumentError);
    CHECK_THROWS_AS(clzeta_fat_line(1, 2, 0), InvalidArgumentError);
}

TEST_CASE("zhat partition sum and hypergeometric sum")
{
    const auto z = zhat_partition_sum(5, 5, 12);
    CHECK(z.coeff({0, 0, 0}) == 1);
    CHECK(z.coeff({1, 1, 0}) == 0);
    for (int k = 1; k < 12; ++k)
        CHECK(z.coeff({1, 1, k}) == 1);
    CHECK(z == zhat_hypergeometric(5, 5, 12));
    CHECK(zhat_hypergeometric(4, 4, 9).coeff({0, 0, 0}) == 1);
    for (const auto& [e, c] : z.terms())
        CHECK(c > 0);
}

TEST_CASE("hfunc")
{
    const VarSpec s = formal_spec(6, 6, 14);
    const auto h = hfunc(6, 6, 14);
    CHECK(h.coeff({0, 0, 0}) == 1);
    const std::array<int, 3> tq{1, 0, 1};
    CHECK(h == series_mul(pochhammer(TruncSeries::monomial(s, 1, tq), Var::q, INF), zhat_partition_sum(6, 6, 14)));
    CHECK(specialize(h, Var::u, 1) == TruncSeries::constant(VarSpec({Var::t, Var::q}, {6, 14}), 1));
}

TEST_CASE("specialized Z-hat and H")
{
    for (long q : {2L, 3L})
        for (int b = 1; b <= 3; ++b) {
            const Rational x = make_rational(1, q);
            CHECK(hfunc_specialized(b, x, 6) ==
                  series_mul(pochhammer_inf_t(x, 1, x, 6), zhat_specialized(b, x, 6)));
        }
    CHECK_THROWS_AS(zhat_specialized(1, 2, 4), InvalidArgumentError);
}

TEST_CASE("clzeta_nonred_node_local")
{
    constexpr int T = 6;
    for (long q : {2L, 3L})
        for (int b = 1; b <= 3; ++b) {
            const auto s = clzeta_nonred_node_local(b, q, T);
            CHECK(s.coeff({0}) == 1);
            CHECK(s.coeff({1}) == make_rational(q, q - 1));
            CHECK(s == series_mul(clzeta_fat_line(b, q, T), zhat_specialized(b, make_rational(1, q), T)));

            // sum over types of |End[pi^b]| / |Aut|
            TruncSeries direct(VarSpec::single(Var::t, T));
            for (int n = 0; n < T; ++n)
                for (const auto& lambda : gen_partitions(n)) {
                    const int e[1] = {n};
                    direct.add_term(e, end_torsion_order(lambda, b, q) / aut_order(lambda, q));
                }
            CHECK(s == direct);
        }
    // Nilpotent A, A^b B = 0, [A, B] = 0 for n <= 3.
    for (int b = 1; b <= 2; ++b)
        for (int n = 0; n <= 3; ++n)
            CHECK(clzeta_nonred_node_local(b, 2, 4).coeff({n}) ==
                  oracle_coeff("A*B - B*A, A^3, A^" + std::to_string(b) + "*B", n, 2));
}

TEST_CASE("clzeta_nonred_node_plane")
{
    for (long q : {2L, 3L, 5L}) {
        const auto s = clzeta_nonred_node_plane(1, q, 4);
        CHECK(s.coeff({1}) == make_rational(2 * q - 1, q - 1));
        check_positive_with_unit_constant(s);
    }
    for (long q : {2L, 3L})
        for (int n = 0; n <= 3; ++n)
            CHECK(clzeta_nonred_node_plane(1, q, 4).coeff({n}) == oracle_coeff("A*B - B*A, A*B", n, q));

    // The plane series divided by the line and the fat line is H(t, t^b, 1/q).
    for (long q : {2L, 3L, 5L})
        for (int b = 1; b <= 3; ++b) {
            const auto lhs = series_mul(clzeta_nonred_node_plane(b, q, 7),
                                        series_inv(series_mul(clzeta_line(q, 7), clzeta_fat_line(b, q, 7))));
            CHECK(lhs == hfunc_specialized(b, make_rational(1, q), 7));
        }
}

TEST_CASE("formula ids")
{
    for (const auto& id : formula_ids())
        CHECK(formula_id(parse_formula_id(id)) == id);
    CHECK(formula_ids().size() == 10);
    CHECK_THROWS_AS(parse_formula_id("cusp"), InvalidArgumentError);
    CHECK(is_formal(CurveFamily::HFunc));
    CHECK_FALSE(is_formal(CurveFamily::FatLine));
    CHECK(uses_b(CurveFamily::NonredNodePlane));
    CHECK_FALSE(uses_b(CurveFamily::FeitFinePlane));

    CurveDescriptor fat;
    fat.family = CurveFamily::FatLine;
    fat.b = 2;
    fat.q = Rational(2);
    fat.trunc_t = 5;
    CHECK(build_formula(fat) == clzeta_fat_line(2, 2, 5));
    fat.q.reset();
    CHECK_THROWS_AS(build_formula(fat), InvalidArgumentError);

    CurveDescriptor z;
    z.family = CurveFamily::ZhatHypergeometric;
    z.trunc_t = 3;
    z.trunc_u = 3;
    z.trunc_q = 5;
    CHECK(build_formula(z) == zhat_hypergeometric(3, 3, 5));
}
