#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lmck/rng.hpp"

using namespace lmck;

TEST_CASE("philox4x32-10 known answers") {
    // Reference vectors from the Random123 distribution (kat_vectors): the
    // all-zero input and the pi-digits counter/key pair.
    CHECK(Philox::block({0, 0, 0, 0}, {0, 0}) ==
          std::array<std::uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    CHECK(Philox::block({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                        {0xa4093822u, 0x299f31d0u}) ==
          std::array<std::uint32_t, 4>{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("streams are deterministic and distinct") {
    Philox a({123, 0}), b({123, 0}), c({123, 1}), d({124, 0});
    bool all_equal = true, c_differs = false, d_differs = false;
    for (int i = 0; i < 64; ++i) {
        const auto va = a.next_u64();
        all_equal = all_equal && (va == b.next_u64());
        c_differs = c_differs || (va != c.next_u64());
        d_differs = d_differs || (va != d.next_u64());
    }
    CHECK(all_equal);
    CHECK(c_differs);
    CHECK(d_differs);
}

TEST_CASE("next_below stays in range and hits all residues") {
    Philox rng({7, 7});
    std::array<int, 7> counts{};
    for (int i = 0; i < 7000; ++i) {
        const auto v = rng.next_below(7);
        REQUIRE(v < 7);
        ++counts[static_cast<std::size_t>(v)];
    }
    for (int c : counts) CHECK(c > 800);  // crude uniformity floor
}

TEST_CASE("next_double in [0,1)") {
    Philox rng({9, 0});
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.next_double();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
}
