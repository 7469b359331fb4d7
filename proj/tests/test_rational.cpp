#include "doctest.h"

#include "coalg/rational.hpp"

using coalg::Rat;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(6, 3).den() == 1);
    CHECK(Rat(6, 3).num() == 2);
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("arithmetic and comparisons are exact") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
    CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(0));
    CHECK(Rat(1, 6) + Rat(1, 6) + Rat(1, 6) + Rat(1, 6) + Rat(1, 6) + Rat(1, 6) == Rat(1));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

// Cross-check reduced sums against a gcd-free reference on the stated grid.
TEST_CASE("sum then reduce equals reduced sum for |a|,|c| <= 1000, b,d <= 1000") {
    // sampled sweep over the bound box; products stay within 64 bits
    for (std::int64_t a = -1000; a <= 1000; a += 271) {
        for (std::int64_t b = 1; b <= 1000; b += 173) {
            for (std::int64_t c = -1000; c <= 1000; c += 233) {
                for (std::int64_t d = 1; d <= 1000; d += 149) {
                    const Rat sum = Rat(a, b) + Rat(c, d);
                    // reference: compare via cross-multiplication, no reduction
                    const __int128 n = static_cast<__int128>(a) * d + static_cast<__int128>(c) * b;
                    const __int128 den = static_cast<__int128>(b) * d;
                    CHECK(static_cast<__int128>(sum.num()) * den ==
                          n * static_cast<__int128>(sum.den()));
                }
            }
        }
    }
    // exhaustive corner: denominators and numerators at the bound
    CHECK(Rat(1000, 999) + Rat(-1000, 1000) == Rat(1000 * 1000 - 1000 * 999, 999 * 1000));
}

TEST_CASE("rendering") {
    CHECK(Rat(3, 4).str() == "3/4");
    CHECK(Rat(2).str() == "2");
    CHECK(Rat(-1, 2).str() == "-1/2");
    CHECK(Rat(4, 2).str() == "2");
}
