#include <doctest.h>

#include <set>

#include "clzeta/dirichlet.hpp"
#include "clzeta/errors.hpp"
#include "clzeta/partition.hpp"
#include "clzeta/pgroup.hpp"

using namespace clzeta;

namespace {

PGroupModule M(long p, std::vector<int> parts) { return PGroupModule(p, Partition(std::move(parts))); }

struct HomCounts {
    long all = 0;
    long bijective = 0;
    long killed_by_pb = 0;
};

// Group homomorphisms N -> N by choosing the image of each cyclic generator among the
// elements whose order divides that generator's order.
HomCounts brute_homs(const PGroupModule& m, int b)
{
    const auto size = m.element_count();
    const int r = m.rank();
    auto times = [&](std::uint64_t x, long k) {
        std::uint64_t acc = 0;
        for (long i = 0; i < k; ++i)
            acc = m.add(acc, x);
        return acc;
    };
    long pb = 1;
    for (int i = 0; i < b; ++i)
        pb *= m.p();
    HomCounts out;
    std::vector<std::uint64_t> images(static_cast<std::size_t>(r), 0);
    while (true) {
        bool ok = true;
        for (int j = 0; j < r && ok; ++j)
            ok = times(images[static_cast<std::size_t>(j)], m.modulus(j)) == 0;
        if (ok) {
            ++out.all;
            std::set<std::uint64_t> seen;
            bool torsion = true;
            for (std::uint64_t x = 0; x < size; ++x) {
                const auto coords = m.decode(x);
                std::uint64_t y = 0;
                for (int j = 0; j < r; ++j)
                    y = m.add(y, times(images[static_cast<std::size_t>(j)], coords[static_cast<std::size_t>(j)]));
                seen.insert(y);
                torsion = torsion && times(y, pb) == 0;
            }
            if (seen.size() == size)
                ++out.bijective;
            if (torsion)
                ++out.killed_by_pb;
        }
        int k = r - 1;
        while (k >= 0 && ++images[static_cast<std::size_t>(k)] == size)
            images[static_cast<std::size_t>(k--)] = 0;
        if (k < 0)
            return out;
    }
}

// d-tuples generating N, by closing each tuple under addition.
Rational brute_surj(const PGroupModule& m, int d)
{
    const auto size = m.element_count();
    std::vector<std::uint64_t> tuple(static_cast<std::size_t>(d), 0);
    long good = 0;
    long total = 0;
    while (true) {
        std::set<std::uint64_t> span{0};
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::uint64_t g : tuple)
                for (std::uint64_t x : std::set<std::uint64_t>(span))
                    grew = span.insert(m.add(x, g)).second || grew;
        }
        ++total;
        if (span.size() == size)
            ++good;
        int k = d - 1;
        while (k >= 0 && ++tuple[static_cast<std::size_t>(k)] == size)
            tuple[static_cast<std::size_t>(k--)] = 0;
        if (k < 0)
            return make_rational(good, total);
    }
}

} // namespace

TEST_CASE("module arithmetic")
{
    const auto m = M(2, {2, 1});
    CHECK(m.order() == 8);
    CHECK(m.element_count() == 8);
    CHECK(m.modulus(0) == 4);
    CHECK(m.decode(m.encode({3, 1})) == std::vector<long>{3, 1});
    CHECK(m.encode({-1, 3}) == m.encode({3, 1}));
    CHECK(m.add(m.encode({3, 1}), m.encode({2, 1})) == m.encode({1, 0}));
    CHECK(m.is_endomorphism(m.identity()));
    Endo bad = m.zero();
    bad(1, 0) = 1; // Z/4 -> Z/2 is fine
    CHECK(m.is_endomorphism(bad));
    bad = m.zero();
    bad(0, 1) = 1; // Z/2 -> Z/4 must land in 2Z/4
    CHECK_FALSE(m.is_endomorphism(bad));
    CHECK_THROWS_AS(M(4, {1}), InvalidArgumentError);
    CHECK_THROWS_AS(M(2, {40}), InvalidArgumentError);
    CHECK_THROWS_AS(M(2, {30}).element_count(), BudgetExceededError);
}

TEST_CASE("enumerate_endomorphisms examples")
{
    CHECK(enumerate_endomorphisms(M(2, {2, 1}), EndoMode::all()) == 32);
    CHECK(enumerate_endomorphisms(M(5, {1}), EndoMode::invertible()) == 4);
    CHECK(enumerate_endomorphisms(M(2, {2, 1}), EndoMode::invertible()) == 8);
    CHECK(Rational(enumerate_endomorphisms(M(2, {2, 1}), EndoMode::invertible())) == aut_order(Partition({2, 1}), 2));
    CHECK(enumerate_endomorphisms(M(3, {}), EndoMode::all()) == 1);
    CHECK(enumerate_endomorphisms(M(3, {}), EndoMode::invertible()) == 1);
    CHECK_THROWS_AS(enumerate_endomorphisms(M(2, {1}), EndoMode::torsion(0)), InvalidArgumentError);
    CHECK_THROWS_AS(enumerate_endomorphisms(M(3, {1, 1, 1, 1}), EndoMode::all()), BudgetExceededError);
    CHECK(enumerate_endomorphisms(M(3, {1, 1, 1, 1}), EndoMode::all(), std::uint64_t{1} << 26) == 43046721);
}

TEST_CASE("enumerated endomorphisms are endomorphisms, all distinct")
{
    const auto m = M(3, {2, 1});
    const auto all = all_endomorphisms(m);
    CHECK(std::set<Endo>(all.begin(), all.end()).size() == all.size());
    for (const auto& e : all)
        CHECK(m.is_endomorphism(e));
}

TEST_CASE("endomorphism counts agree with homomorphism brute force")
{
    for (long p : {2L, 3L})
        for (int k = 0; k <= 3; ++k)
            for (const auto& lambda : gen_partitions(k)) {
                if (p == 3 && lambda.length() == 3)
                    continue;
                const PGroupModule m(p, lambda);
                for (int b = 1; b <= 2; ++b) {
                    const HomCounts brute = brute_homs(m, b);
                    CAPTURE(to_string(lambda));
                    CHECK(enumerate_endomorphisms(m, EndoMode::all()) == brute.all);
                    CHECK(enumerate_endomorphisms(m, EndoMode::invertible()) == brute.bijective);
                    CHECK(enumerate_endomorphisms(m, EndoMode::torsion(b)) == brute.killed_by_pb);
                }
            }
}

TEST_CASE("enumerated counts match the closed forms for |lambda| <= 4")
{
    for (long p : {2L, 3L})
        for (int k = 0; k <= 4; ++k)
            for (const auto& lambda : gen_partitions(k)) {
                if (p == 3 && lambda == Partition({1, 1, 1, 1}))
                    continue;
                const PGroupModule m(p, lambda);
                CAPTURE(to_string(lambda));
                CHECK(Rational(enumerate_endomorphisms(m, EndoMode::all())) == end_order(lambda, p));
                CHECK(Rational(enumerate_endomorphisms(m, EndoMode::invertible())) == aut_order(lambda, p));
                for (int b = 1; b <= 3; ++b)
                    CHECK(Rational(enumerate_endomorphisms(m, EndoMode::torsion(b))) == end_torsion_order(lambda, b, p));
            }
}

TEST_CASE("composition is associative and compatible with evaluation")
{
    const auto m = M(2, {2, 1});
    const auto all = all_endomorphisms(m);
    for (std::size_t i = 0; i < all.size(); i += 5)
        for (std::size_t j = 0; j < all.size(); j += 7)
            for (std::uint64_t x = 0; x < m.element_count(); ++x)
                CHECK(m.apply(m.compose(all[i], all[j]), x) == m.apply(all[i], m.apply(all[j], x)));
}

TEST_CASE("module_groupoid_count examples")
{
    for (long p : {2L, 3L}) {
        CHECK(module_groupoid_count(p, 0) == 1);
        CHECK(module_groupoid_count(p, 1) == make_rational(p, p - 1));
        CHECK(module_groupoid_count(p, 2) == an_local(p, 2));
    }
    CHECK(module_groupoid_count(2, 3) == an_local(2, 3));
    CHECK(module_groupoid_count(2, 4) == an_local(2, 4));
}

TEST_CASE("conj_classes_aut examples")
{
    for (long p : {2L, 3L, 5L}) {
        CHECK(conj_classes_aut(M(p, {1})) == p - 1);
        CHECK(conj_classes_aut(M(p, {2})) == p * p - p);
    }
    CHECK(conj_classes_aut(M(2, {1, 1})) == 3);
    CHECK(conj_classes_aut(M(3, {1, 1})) == 8);
    CHECK(conj_classes_aut(M(2, {1, 1, 1})) == 6); // GL_3(F_2)
    CHECK_THROWS_AS(conj_classes_aut(M(2, {1, 1, 1}), 100), BudgetExceededError);
}

TEST_CASE("class count equals the Burnside average of centralizer sizes")
{
    const auto m = M(2, {2, 1});
    std::vector<Endo> group;
    for (const auto& e : all_endomorphisms(m))
        if (m.is_invertible(e))
            group.push_back(e);
    long fixed = 0;
    for (const auto& g : group)
        for (const auto& h : group)
            if (m.compose(g, h) == m.compose(h, g))
                ++fixed;
    CHECK(fixed % static_cast<long>(group.size()) == 0);
    CHECK(conj_classes_aut(m) == fixed / static_cast<long>(group.size()));
}

TEST_CASE("surj_prob examples")
{
    for (long p : {2L, 3L, 5L}) {
        const auto s = surj_prob(M(p, {1}), 1);
        REQUIRE(s.enumerated);
        CHECK(*s.enumerated == make_rational(p - 1, p));
        CHECK(s.closed_form == make_rational(p - 1, p));
    }
    const auto v = surj_prob(M(2, {1, 1}), 2);
    CHECK(*v.enumerated == make_rational(3, 8));
    CHECK(v.closed_form == make_rational(3, 8));
    const auto w = surj_prob(M(2, {2, 1}), 2);
    CHECK(*w.enumerated == make_rational(3, 8));
    CHECK(w.closed_form == make_rational(3, 8));
    CHECK(brute_surj(M(2, {2, 1}), 2) == make_rational(3, 8));
    CHECK(surj_prob(M(3, {1, 1, 1}), 2).closed_form == 0);
    CHECK(*surj_prob(M(3, {1, 1, 1}), 2).enumerated == 0);
    CHECK(*surj_prob(M(2, {}), 0).enumerated == 1);
    CHECK_FALSE(surj_prob(M(3, {2, 2}), 4, 1000).enumerated);
    CHECK_THROWS_AS(surj_prob(M(2, {1}), -1), InvalidArgumentError);
}

TEST_CASE("surj_prob enumeration agrees with closure brute force and the closed form")
{
    for (long p : {2L, 3L})
        for (int k = 0; k <= 3; ++k)
            for (const auto& lambda : gen_partitions(k))
                for (int d = 0; d <= 3; ++d) {
                    const PGroupModule m(p, lambda);
                    if (m.order() > 27 || (d == 3 && m.order() > 8))
                        continue;
                    CAPTURE(to_string(lambda));
                    CAPTURE(d);
                    const auto s = surj_prob(m, d);
                    REQUIRE(s.enumerated);
                    CHECK(*s.enumerated == brute_surj(m, d));
                    CHECK(*s.enumerated == s.closed_form);
                    CHECK(Rational(1 - s.closed_form).get_d() <= nonsurjection_bound(m, d));
                }
}
