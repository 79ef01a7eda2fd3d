#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "clzeta/errors.hpp"
#include "clzeta/partition.hpp"
#include "clzeta/series.hpp"
#include "generators.hpp"

using namespace clzeta;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// Conjugate by counting cells column by column.
Partition transpose_by_cells(const Partition& lambda)
{
    std::vector<int> cols;
    for (int j = 1; j <= lambda.largest(); ++j) {
        int count = 0;
        for (int part : lambda.parts())
            if (part >= j)
                ++count;
        cols.push_back(count);
    }
    return Partition(cols);
}

} // namespace

TEST_CASE("construction rejects malformed parts")
{
    CHECK_THROWS_AS(P({1, 2}), InvalidArgumentError);
    CHECK_THROWS_AS(P({2, 0}), InvalidArgumentError);
    CHECK_THROWS_AS(P({-1}), InvalidArgumentError);
    CHECK(P({}).empty());
    CHECK(P({3, 1}).part(1) == 3);
    CHECK(P({3, 1}).part(3) == 0);
}

TEST_CASE("gen_partitions examples")
{
    CHECK(gen_partitions(4).size() == 5);
    CHECK(gen_partitions(4, {2, std::nullopt}) == std::vector<Partition>{P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})});
    CHECK(gen_partitions(0) == std::vector<Partition>{P({})});
    CHECK(gen_partitions(5, {std::nullopt, 2}).size() == 3);
    CHECK(gen_partitions(3, {0, std::nullopt}).empty());
}

TEST_CASE("gen_partitions is exhaustive, duplicate free and reverse lexicographic")
{
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) {
        const auto all = gen_partitions(n);
        CHECK(all.size() == counts[static_cast<std::size_t>(n)]);
        CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
        CHECK(std::is_sorted(all.rbegin(), all.rend()));
        for (const auto& p : all)
            CHECK(p.size() == n);
    }
}

TEST_CASE("transpose examples")
{
    CHECK(transpose(P({4, 3, 1})) == P({3, 2, 2, 1}));
    CHECK(transpose(P({1, 1, 1, 1, 1})) == P({5}));
    CHECK(transpose(P({})) == P({}));
}

TEST_CASE("multiplicities examples")
{
    CHECK(multiplicities(P({2, 2, 1})) == std::map<int, int>{{1, 1}, {2, 2}});
    CHECK(multiplicities(P({})).empty());
    CHECK(multiplicities(P({5})) == std::map<int, int>{{5, 1}});
}

TEST_CASE("durfee_partition examples")
{
    CHECK(durfee_partition(P({4, 3, 1})) == P({2, 1}));
    CHECK(durfee_partition(P({3, 3, 3})) == P({3}));
    CHECK(durfee_partition(P({6})) == P({1}));
    CHECK(durfee_partition(P({})) == P({}));
}

TEST_CASE("square_type examples")
{
    CHECK(square_type(P({2, 1})) == P({2, 1, 1, 1}));
    CHECK(square_type(P({1})) == P({1}));
    CHECK(square_type(P({3})) == P({3}));
}

TEST_CASE("aut_order, end_order and end_torsion_order examples")
{
    for (long q : {2L, 3L, 5L}) {
        const Rational Q = q;
        CHECK(aut_order(P({1}), Q) == q - 1);
        CHECK(aut_order(P({1, 1}), Q) == Rational((q * q - 1) * (q * q - q)));
        CHECK(end_order(P({2, 1}), Q) == pow(Q, 5));
        CHECK(end_order(P({1, 1, 1}), Q) == pow(Q, 9));
        CHECK(end_order(P({4}), Q) == pow(Q, 4));
        CHECK(end_torsion_order(P({2, 1}), 1, Q) == pow(Q, 4));
        CHECK(end_torsion_order(P({1, 1}), 1, Q) == pow(Q, 4));
        CHECK(end_torsion_order(P({3, 1}), 3, Q) == end_order(P({3, 1}), Q));
        CHECK(end_torsion_order(P({3, 1}), 7, Q) == end_order(P({3, 1}), Q));
    }
    // Invertible endomorphisms of Z/4 + Z/2: frozen from an exhaustive count.
    CHECK(aut_order(P({2, 1}), 2) == 8);
    CHECK(aut_order(P({}), 2) == 1);
    CHECK_THROWS_AS(aut_order(P({1}), 1), InvalidArgumentError);
    CHECK_THROWS_AS(end_torsion_order(P({1}), 0, 2), InvalidArgumentError);
}

TEST_CASE("JSON and text forms")
{
    CHECK(to_json(P({4, 3, 1})).dump() == "[4,3,1]");
    CHECK(partition_from_json(nlohmann::json::parse("[2,2]")) == P({2, 2}));
    CHECK(parse_partition("4,3,1") == P({4, 3, 1}));
    CHECK(parse_partition("") == P({}));
    CHECK(to_string(P({4, 3, 1})) == "(4,3,1)");
    CHECK(to_string(P({})) == "()");
    CHECK_THROWS_AS(parse_partition("1,3"), InvalidArgumentError);
    CHECK_THROWS_AS(parse_partition("a"), InvalidArgumentError);
}

// ---- properties ----------------------------------------------------------------------

TEST_CASE("property: transpose is an involution and matches the cell count")
{
    gen::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Partition lambda = gen::partition(rng, 25);
        CHECK(transpose(transpose(lambda)) == lambda);
        CHECK(transpose(lambda) == transpose_by_cells(lambda));
    }
}

TEST_CASE("property: statistics on every partition of size <= 12")
{
    for (int n = 0; n <= 12; ++n)
        for (const auto& lambda : gen_partitions(n)) {
            CHECK(durfee_partition(lambda).size() == lambda.length());
            const Partition sq = transpose(square_type(lambda));
            const Partition tr = transpose(lambda);
            REQUIRE(sq.length() == tr.length());
            for (int i = 1; i <= tr.length(); ++i)
                CHECK(sq.part(i) == tr.part(i) * tr.part(i));
            int weighted = 0;
            int count = 0;
            for (const auto& [part, mult] : multiplicities(lambda)) {
                weighted += part * mult;
                count += mult;
            }
            CHECK(weighted == lambda.size());
            CHECK(count == lambda.length());
            for (long q : {2L, 3L}) {
                const Rational ratio = aut_order(lambda, q) / end_order(lambda, q);
                CHECK(ratio > 0);
                CHECK(ratio <= 1);
            }
        }
}

TEST_CASE("property: grouping partitions by Durfee partition")
{
    // sum over Lambda with sigma(Lambda) = lambda' of q^|Lambda| equals
    // q^{sum lambda'_i^2} / prod_i (q;q)_{m_i(lambda)}, compared inside a q-window.
    constexpr int W = 14;
    const VarSpec qs = VarSpec::single(Var::q, W);
    std::map<Partition, TruncSeries> grouped;
    for (int n = 0; n < W; ++n)
        for (const auto& big : gen_partitions(n)) {
            auto it = grouped.try_emplace(durfee_partition(big), qs).first;
            const int e[1] = {n};
            it->second.add_term(e, 1);
        }
    const TruncSeries q = TruncSeries::variable(qs, Var::q);
    for (int n = 0; n <= 6; ++n)
        for (const auto& lambda : gen_partitions(n)) {
            const Partition sigma = transpose(lambda);
            const int e[1] = {static_cast<int>(std::min<long>(transpose_square_sum(lambda), W))};
            TruncSeries expected(qs);
            expected.add_term(e, 1);
            for (const auto& [part, mult] : multiplicities(lambda))
                expected = series_mul(expected, series_inv(pochhammer(q, Var::q, mult)));
            const auto it = grouped.find(sigma);
            CHECK((it == grouped.end() ? TruncSeries(qs) : it->second) == expected);
        }
}

TEST_CASE("transpose_square_sum over leading columns")
{
    CHECK(transpose_square_sum(P({2, 1})) == 5);
    CHECK(transpose_square_sum(P({2, 1}), 1) == 4);
    CHECK(transpose_square_sum(P({2, 1}), 0) == 0);
    CHECK(transpose_square_sum(P({}), 3) == 0);
}
