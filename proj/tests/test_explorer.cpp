#include <doctest.h>

#include <set>

#include "postnikov/explorer.hpp"

using namespace postnikov;

namespace {

IceQuiver three_cycle() {
    return IceQuiver::make({{"1", false}, {"2", false}, {"3", false}},
                           {{"1", "2", 1}, {"2", "3", 1}, {"3", "1", 1}});
}

}  // namespace

TEST_CASE("laurent arithmetic") {
    const int ar = 2;
    const auto x = LaurentPoly::variable(ar, 0);
    const auto y = LaurentPoly::variable(ar, 1);
    const auto one = LaurentPoly::constant(ar, 1);

    const auto p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK((x - x).is_zero());

    // (x^2 - y^2) / (x + y) = x - y
    const auto q = p.divide_exact(x + y);
    REQUIRE(q.has_value());
    CHECK(*q == x - y);

    // Laurent quotients with negative exponents are fine; dividing by a
    // monomial always succeeds.
    const auto inv = one.divide_exact(x);
    REQUIRE(inv.has_value());
    CHECK(*inv == LaurentPoly::variable(ar, 0, -1));
    const auto shifted = (x + one).divide_exact(y);
    REQUIRE(shifted.has_value());
    CHECK(*shifted * y == x + one);

    // Inexact division fails rather than looping.
    CHECK_FALSE((x + one + y).divide_exact(x + y).has_value());
    CHECK_FALSE((x * x + one).divide_exact(x + one).has_value());

    CHECK(p.key() == (x * x - y * y).key());
}

TEST_CASE("A1: single vertex mutation gives 2/x") {
    const auto q = IceQuiver::make({{"x", false}}, {});
    const auto s = Seed::initial(q);
    const auto m = mutate_seed(s, "x");
    CHECK(m.vars[0] == LaurentPoly::monomial(1, {-1}, 2));
    // Involution.
    const auto back = mutate_seed(m, "x");
    CHECK(back.vars[0] == s.vars[0]);
    CHECK(back.quiver == s.quiver);
}

TEST_CASE("A2: pentagon recurrence") {
    const auto q = IceQuiver::make({{"1", false}, {"2", false}}, {{"1", "2", 1}});
    const auto s0 = Seed::initial(q);

    // x1' = (1 + x2)/x1.
    const auto s1 = mutate_seed(s0, "1");
    const auto expect = (LaurentPoly::constant(2, 1) + LaurentPoly::variable(2, 1))
                            .divide_exact(LaurentPoly::variable(2, 0));
    REQUIRE(expect.has_value());
    CHECK(s1.vars[0] == *expect);

    // Five alternating mutations close the pentagon up to relabeling: the
    // cluster {x1, x2} returns as a set.
    Seed s = s0;
    const char* order[5] = {"1", "2", "1", "2", "1"};
    for (const char* v : order) s = mutate_seed(s, v);
    std::multiset<std::string> start{s0.vars[0].key(), s0.vars[1].key()};
    std::multiset<std::string> end{s.vars[0].key(), s.vars[1].key()};
    CHECK(start == end);

    const auto counts = enumerate_seeds(s0, 100);
    CHECK(counts.seeds == 5);
    CHECK(counts.variables == 5);
    CHECK(counts.acyclic_seeds == 5);
}

TEST_CASE("mutation of seeds is an involution") {
    const auto s0 = Seed::initial(three_cycle());
    for (const char* v : {"1", "2", "3"}) {
        const auto once = mutate_seed(s0, v);
        const auto twice = mutate_seed(once, v);
        CHECK(twice.quiver == s0.quiver);
        CHECK(twice.vars == s0.vars);
    }
}

TEST_CASE("three-cycle: 9 variables, 14 seeds, 12 acyclic") {
    const auto counts = enumerate_seeds(Seed::initial(three_cycle()), 1000);
    CHECK(counts.variables == 9);
    CHECK(counts.seeds == 14);
    CHECK(counts.acyclic_seeds == 12);
}

TEST_CASE("seed counts do not depend on the starting labels") {
    // Same quiver with permuted vertex names: identical counts.
    const auto relabeled = IceQuiver::make({{"b", false}, {"c", false}, {"a", false}},
                                           {{"b", "c", 1}, {"c", "a", 1}, {"a", "b", 1}});
    const auto c1 = enumerate_seeds(Seed::initial(three_cycle()), 1000);
    const auto c2 = enumerate_seeds(Seed::initial(relabeled), 1000);
    CHECK(c1.variables == c2.variables);
    CHECK(c1.seeds == c2.seeds);
    CHECK(c1.acyclic_seeds == c2.acyclic_seeds);
}

TEST_CASE("frozen variables ride along") {
    // A2 with one frozen coefficient vertex.
    const auto q = IceQuiver::make({{"1", false}, {"2", false}, {"f", true}},
                                   {{"1", "2", 1}, {"f", "1", 1}});
    const auto counts = enumerate_seeds(Seed::initial(q), 100);
    CHECK(counts.seeds == 5);
    CHECK(counts.variables == 5);
    CHECK_THROWS_AS(mutate_seed(Seed::initial(q), "f"), FrozenVertex);
}

TEST_CASE("markov quiver exceeds any seed limit") {
    const auto markov = IceQuiver::make({{"a", false}, {"b", false}, {"c", false}},
                                        {{"a", "b", 2}, {"b", "c", 2}, {"c", "a", 2}});
    CHECK_THROWS_AS(enumerate_seeds(Seed::initial(markov), 100), LimitExceeded);
}
