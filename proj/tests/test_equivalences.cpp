#include "doctest.h"

#include <random>

#include "coalg/equivalences.hpp"
#include "coalg/fixtures.hpp"
#include "coalg/format.hpp"
#include "coalg/generate.hpp"
#include "coalg/transforms.hpp"

using namespace coalg;

TEST_CASE("the branching lts pair is bisimilar under the three-pair relation") {
    const System a = fixtures::sx(), b = fixtures::sy();
    const Relation r = fixtures::rel_main(a, b);
    CHECK(is_simulation(a, b, r, OrderSpec::equality()).holds);
    CHECK(is_bisimulation(a, b, r).holds);
}

TEST_CASE("canonical multiset readings are not bisimilar but kernel-similar") {
    const System a = fixtures::sx_ms(1), b = fixtures::sy_ms();
    const Relation r = fixtures::rel_main(a, b);
    const Verdict v = is_simulation(a, b, r, OrderSpec::equality());
    CHECK(!v.holds);
    REQUIRE(v.counterexample.has_value());
    CHECK(*v.counterexample == std::make_pair(std::string("x"), std::string("y")));
    CHECK(is_simulation(a, b, r, OrderSpec::kernel_of(AlphaKind::Support)).holds);
}

TEST_CASE("doubled multiplicity restores the multiset bisimulation") {
    const System a = fixtures::sx_ms(2), b = fixtures::sy_ms();
    const Relation r = fixtures::rel_main(a, b);
    CHECK(is_simulation(a, b, r, OrderSpec::equality()).holds);
}

TEST_CASE("the weight-splitting counterexample pair under kernel-dm") {
    const System a = fixtures::pa(), b = fixtures::pb();
    Relation r;
    r.left_carrier = a.state_set();
    r.right_carrier = b.state_set();
    r.pairs = {{"x", "y"}};
    CHECK(!is_simulation(a, b, r, OrderSpec::equality()).holds);
    CHECK(is_simulation(a, b, r, OrderSpec::kernel_of(AlphaKind::Dm)).holds);
}

TEST_CASE("the 1/6 splittings form a plain m1 bisimulation") {
    const System a = fixtures::sxp3(), b = fixtures::syp2();
    const Relation r = fixtures::rel_branching(a, b);
    CHECK(is_simulation(a, b, r, OrderSpec::equality()).holds);
}

TEST_CASE("largest bisimulation contains and excludes the right pairs") {
    const Relation r1 = largest_simulation(fixtures::sx(), fixtures::sy(), OrderSpec::equality());
    CHECK(r1.contains("x", "y"));

    const Relation r2 = largest_simulation(fixtures::pa(), fixtures::pb(), OrderSpec::equality());
    CHECK(!r2.contains("x", "y"));

    const Relation r3 =
        largest_simulation(fixtures::pa(), fixtures::pb(), OrderSpec::kernel_of(AlphaKind::Dm));
    CHECK(r3.contains("x", "y"));
}

TEST_CASE("largest simulation is the greatest: holds, and deleted pairs break it") {
    const System a = fixtures::sx_ms(2), b = fixtures::sy_ms();
    const Relation best = largest_simulation(a, b, OrderSpec::equality());
    CHECK(is_simulation(a, b, best, OrderSpec::equality()).holds);
    const Relation full = full_relation(a, b);
    for (const auto& p : full.pairs) {
        if (best.contains(p.first, p.second)) continue;
        Relation bigger = best;
        bigger.pairs.insert(p);
        CHECK(!is_simulation(a, b, bigger, OrderSpec::equality()).holds);
    }
}

TEST_CASE("errors: kind and carrier mismatches") {
    CHECK_THROWS_AS(is_simulation(fixtures::sx(), fixtures::sy_ms(), Relation{},
                                  OrderSpec::equality()),
                    mismatch_error);
    Relation bad;  // empty carriers don't match the systems
    CHECK_THROWS_AS(is_simulation(fixtures::sx(), fixtures::sy(), bad, OrderSpec::equality()),
                    mismatch_error);
    CHECK_THROWS_AS(largest_simulation(fixtures::sx(), fixtures::sy_ms(), OrderSpec::equality()),
                    mismatch_error);
}

TEST_CASE("probabilistic bisimulation on the union of the branching systems") {
    const System u = disjoint_union(fixtures::sxp(), fixtures::syp());
    Partition good;
    good.carrier = u.state_set();
    good.classes = {{"left:x", "right:y"},
                    {"left:x1", "left:x2", "right:y1", "right:y2", "right:y3"}};
    CHECK(is_prob_bisimulation(u, good).holds);

    // splitting left:x1 off with right:y1 breaks it: 1/2 vs 1/3 into that class
    Partition bad;
    bad.carrier = u.state_set();
    bad.classes = {{"left:x", "right:y"},
                   {"left:x1", "right:y1"},
                   {"left:x2", "right:y2", "right:y3"}};
    const Verdict v = is_prob_bisimulation(u, bad);
    CHECK(!v.holds);
    REQUIRE(v.counterexample.has_value());
    CHECK(v.detail.find("1/2") != std::string::npos);
    CHECK(v.detail.find("1/3") != std::string::npos);
}

TEST_CASE("all-singletons pass on a transition-free system") {
    System s;
    s.name = "quiet";
    s.kind = Kind::Pmts;
    s.states = {"a", "b"};
    s.step.emplace("a", M1Bundle{});
    s.step.emplace("b", M1Bundle{});
    Partition p;
    p.carrier = s.state_set();
    p.classes = {{"a"}, {"b"}};
    CHECK(is_prob_bisimulation(s, p).holds);
}

TEST_CASE("probabilistic bisimilarity groups the branching initial states") {
    const System u = disjoint_union(fixtures::sxp(), fixtures::syp());
    const Partition p = prob_bisimilarity(u);
    REQUIRE(p.classes.size() == 2);
    const int cx = p.class_of("left:x");
    CHECK(cx == p.class_of("right:y"));
    CHECK(p.class_of("left:x1") != cx);
    CHECK(is_prob_bisimulation(u, p).holds);
}

TEST_CASE("probabilistic bisimilarity groups the weight-splitting pair") {
    const System u = disjoint_union(fixtures::pa(), fixtures::pb());
    const Partition p = prob_bisimilarity(u);
    CHECK(p.class_of("left:x") == p.class_of("right:y"));
}

TEST_CASE("states with different bundle alphabets are separated") {
    System s;
    s.name = "two";
    s.kind = Kind::Pmts;
    s.states = {"u", "v", "t"};
    s.labels = {"a", "b"};
    M1Bundle bu, bv;
    bu.ms.add({Rat(1), "a", "t"}, 1);
    bv.ms.add({Rat(1), "b", "t"}, 1);
    s.step.emplace("u", bu);
    s.step.emplace("v", bv);
    s.step.emplace("t", M1Bundle{});
    const Partition p = prob_bisimilarity(s);
    CHECK(p.class_of("u") != p.class_of("v"));
}

TEST_CASE("self-bisimilarity is an equivalence on random systems") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        for (Kind kind : {Kind::Lts, Kind::Mts, Kind::Pmts, Kind::Dts, Kind::AltMts, Kind::AltGts}) {
            GenParams gp;
            gp.seed = mix_seed(777, seed * 6 + static_cast<int>(kind));
            gp.kind = kind;
            gp.max_states = 5;
            const System s = gen_system(gp);
            const Relation r = largest_simulation(s, s, OrderSpec::equality());
            // partition_from_equivalence throws unless r is an equivalence
            const Partition p = partition_from_equivalence(r);
            CHECK(p.validate().empty());
        }
    }
}

TEST_CASE("kernel self-similarity is an equivalence on random systems") {
    struct Case { Kind kind; AlphaKind alpha; };
    for (std::uint64_t seed = 0; seed < 67; ++seed) {
        for (const Case c : {Case{Kind::Mts, AlphaKind::Support}, Case{Kind::Pmts, AlphaKind::Dm},
                             Case{Kind::AltMts, AlphaKind::Dma}}) {
            GenParams gp;
            gp.seed = mix_seed(778, seed * 3 + static_cast<int>(c.alpha));
            gp.kind = c.kind;
            gp.max_states = 5;
            const System s = gen_system(gp);
            const Relation r = largest_simulation(s, s, OrderSpec::kernel_of(c.alpha));
            const Partition p = partition_from_equivalence(r);
            CHECK(p.validate().empty());
        }
    }
}
