#include "doctest.h"

#include <algorithm>
#include <random>

#include "ktlift/errors.hpp"
#include "ktlift/weights.hpp"

using namespace ktlift;

namespace {
HalfIntVec halves(std::vector<int> twice) {
    HalfIntVec h;
    h.twice = std::move(twice);
    return h;
}
} // namespace

TEST_CASE("rho vectors") {
    CHECK(rho(4).twice == std::vector<int>{2, 0});   // (1, 0)
    CHECK(rho(5).twice == std::vector<int>{3, 1});   // (3/2, 1/2)
    CHECK(rho(8).twice == std::vector<int>{6, 4, 2, 0});
    CHECK_THROWS_AS(rho(1), Error);
    CHECK_THROWS_AS(rho(0), Error);
}

TEST_CASE("canonical_infchar sorts absolute values") {
    InfChar c = canonical_infchar(HalfIntVec::from_ints({-1, 2, 0}), 6);
    CHECK(c.entries.twice == std::vector<int>{4, 2, 0});
    CHECK(c.algebra_type == AlgType::D);
    CHECK(c.algebra_rank == 3);

    InfChar z = canonical_infchar(HalfIntVec::from_ints({0, 0}), 4);
    CHECK(z.entries.twice == std::vector<int>{0, 0});

    InfChar b = canonical_infchar(halves({1, -3}), 5); // (1/2, -3/2)
    CHECK(b.entries.twice == std::vector<int>{3, 1});
    CHECK(b.algebra_type == AlgType::B);
}

TEST_CASE("canonical_infchar rejects bad input") {
    CHECK_THROWS_AS(canonical_infchar(halves({2, 1}), 4), Error); // mixed
    CHECK_THROWS_AS(canonical_infchar(HalfIntVec::from_ints({1}), 6), Error);
    try {
        canonical_infchar(halves({2, 1}), 4);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrKind::MixedParity);
    }
}

TEST_CASE("is_regular conventions") {
    InfChar d = canonical_infchar(HalfIntVec::from_ints({2, 1, 0}), 6);
    CHECK(is_regular(d)); // type D allows one zero

    InfChar rep = canonical_infchar(HalfIntVec::from_ints({2, 1, 1}), 6);
    CHECK_FALSE(is_regular(rep));

    InfChar b = canonical_infchar(halves({3, 1}), 5);
    CHECK(is_regular(b));

    InfChar b0 = canonical_infchar(HalfIntVec::from_ints({1, 0}), 5);
    CHECK_FALSE(is_regular(b0)); // type B forbids zero

    InfChar d00 = canonical_infchar(HalfIntVec::from_ints({0, 0}), 4);
    CHECK_FALSE(is_regular(d00)); // repeated zero
}

TEST_CASE("canonicalization is idempotent and signed-permutation invariant") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int k = 1 + static_cast<int>(rng() % 4);
        int N = 2 * k + static_cast<int>(rng() % 2);
        std::vector<int> v(k);
        int parity = static_cast<int>(rng() % 2);
        for (int& x : v)
            x = 2 * (static_cast<int>(rng() % 9) - 4) + parity;
        HalfIntVec h = halves(v);
        InfChar c = canonical_infchar(h, N);
        CHECK(canonical_infchar(c.entries, N) == c);
        // random signed permutation of the input
        std::shuffle(v.begin(), v.end(), rng);
        for (int& x : v)
            if (rng() % 2) x = -x;
        CHECK(canonical_infchar(halves(v), N) == c);
    }
}

TEST_CASE("trivial D-type infinitesimal character is rho and regular") {
    for (int k = 2; k <= 6; k += 2) {
        InfChar c = canonical_infchar(rho(2 * k), 2 * k);
        CHECK(c.entries == rho(2 * k));
        CHECK(is_regular(c));
    }
}

TEST_CASE("HalfIntVec arithmetic") {
    HalfIntVec a = HalfIntVec::from_ints({3, 1});
    CHECK(a.plus(HalfIntVec::from_ints({1, 1})).twice ==
          std::vector<int>{8, 4});
    CHECK(a.shifted(-2).twice == std::vector<int>{4, 0}); // subtract 1
    CHECK(a.concat(HalfIntVec::from_ints({0})).twice ==
          std::vector<int>{6, 2, 0});
    CHECK(a.uniform_integral());
    CHECK_FALSE(halves({3, 1}).uniform_integral() == true);
    CHECK_THROWS_AS(a.plus(HalfIntVec::from_ints({1})), Error);
    CHECK(HalfIntVec::from_partition({2, 1}, 4).twice ==
          std::vector<int>{4, 2, 0, 0});
    CHECK(halves({3, 1}).to_string() == "(3/2, 1/2)");
    CHECK(a.to_string() == "(3, 1)");
}
