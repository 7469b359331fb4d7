#include "doctest.h"

#include "coalg/format.hpp"
#include "coalg/generate.hpp"

using namespace coalg;

TEST_CASE("generation is deterministic in the seed") {
    for (Kind kind : {Kind::Lts, Kind::Mts, Kind::Pmts, Kind::Dts, Kind::AltMts, Kind::AltGts}) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            GenParams p;
            p.seed = mix_seed(1, seed);
            p.kind = kind;
            CHECK(render_system(gen_system(p)) == render_system(gen_system(p)));
        }
    }
}

TEST_CASE("1000 generated pmts all validate") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        GenParams p;
        p.seed = mix_seed(2, seed);
        p.kind = Kind::Pmts;
        p.max_states = 5;
        CHECK(validate_system(gen_system(p)).empty());
    }
}

TEST_CASE("all kinds generate valid systems within bounds") {
    for (Kind kind : {Kind::Lts, Kind::Mts, Kind::Dts, Kind::AltMts, Kind::AltGts}) {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            GenParams p;
            p.seed = mix_seed(3, seed);
            p.kind = kind;
            const System s = gen_system(p);
            CHECK(validate_system(s).empty());
            CHECK(s.states.size() <= 6);
            CHECK(s.labels.size() <= 3);
        }
    }
}

TEST_CASE("alternating systems never mix polarities at a state") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GenParams p;
        p.seed = mix_seed(4, seed);
        p.kind = Kind::AltMts;
        const System s = gen_system(p);
        for (const auto& st : s.states) {
            const Bundle& b = s.bundle_of(st);
            // one bundle per state, and it is exclusively one variant
            CHECK((std::holds_alternative<MsBundle>(b) || std::holds_alternative<M1Bundle>(b)));
        }
    }
}

TEST_CASE("generation bounds are enforced") {
    GenParams p;
    p.max_states = 9;
    CHECK_THROWS_AS(gen_system(p), std::invalid_argument);
    p = GenParams{};
    p.max_denominator = 7;
    CHECK_THROWS_AS(gen_system(p), std::invalid_argument);
}
