#include "doctest.h"

#include <algorithm>

#include "ktlift/errors.hpp"
#include "ktlift/olabel.hpp"

using namespace ktlift;

TEST_CASE("full arrays of both label forms") {
    CHECK(to_full_array(OLabel::make(3, {1}, 0)) == std::vector<int>{1, 0, 0});
    CHECK(to_full_array(OLabel::make(3, {1}, 1)) == std::vector<int>{1, 1, 0});
    CHECK(to_full_array(OLabel::make(4, {2, 2}, 0)) ==
          std::vector<int>{2, 2, 0, 0});
}

TEST_CASE("label validation and normalization") {
    CHECK(OLabel::make(4, {2, 2}, 1).eps == 0); // self-associate depth n/2
    CHECK_THROWS_AS(OLabel::make(3, {1, 1}, 0), Error); // depth > floor(n/2)
    CHECK_THROWS_AS(OLabel::make(4, {1, 2}, 0), Error); // not a partition
    CHECK(OLabel::trivial(0).rank == 0);
    CHECK(OLabel::det(0) == OLabel::trivial(0)); // O(0) has only one irrep
}

TEST_CASE("full-array parsing round-trips") {
    for (int n = 0; n <= 7; ++n)
        for (const Part& lam : partitions_up_to(4, n / 2))
            for (int eps : {0, 1}) {
                OLabel x = OLabel::make(n, lam, eps);
                if (x.eps != eps) continue;
                auto back = parse_full_array(to_full_array(x));
                REQUIRE(back.has_value());
                CHECK(*back == x);
            }
    CHECK_FALSE(parse_full_array({1, 2}).has_value());    // increasing
    CHECK_FALSE(parse_full_array({2, 2, 2}).has_value()); // neither form
    CHECK_FALSE(parse_full_array({-1}).has_value());
}

TEST_CASE("det twist") {
    CHECK(det_twist(OLabel::trivial(5)) == OLabel::det(5));
    OLabel sa = OLabel::make(4, {2, 2}, 0);
    CHECK(det_twist(sa) == sa); // self-associate
    OLabel d3 = OLabel::det(3);
    CHECK(det_twist(d3) == OLabel::trivial(3)); // involution
    CHECK(det_power_twist(OLabel::trivial(3), 2) == OLabel::trivial(3));
    CHECK(det_power_twist(OLabel::trivial(3), 3) == d3);
}

TEST_CASE("dimensions") {
    CHECK(o_dim(OLabel::make(3, {1}, 0)) == 3); // standard representation
    CHECK(o_dim(OLabel::make(5, {2}, 0)) == 14); // harmonics: 15 - 1
    CHECK(o_dim(OLabel::make(4, {2, 1}, 0)) == 16); // doubled D2 value
    CHECK(o_dim(OLabel::trivial(6)) == 1);
    CHECK(o_dim(OLabel::make(2, {3}, 0)) == 2);
    CHECK(o_dim(OLabel::trivial(1)) == 1);
    CHECK(o_dim(OLabel::trivial(0)) == 1);
    for (int n = 2; n <= 8; ++n)
        for (const Part& lam : partitions_up_to(3, n / 2))
            CHECK(o_dim(OLabel::make(n, lam, 0)) ==
                  o_dim(det_twist(OLabel::make(n, lam, 0))));
}

TEST_CASE("one-step interlacing branching") {
    auto b1 = branch_one_step(OLabel::make(3, {1}, 0));
    CHECK(b1 == std::vector<OLabel>{OLabel::trivial(2),
                                    OLabel::make(2, {1}, 0)});

    auto b2 = branch_one_step(OLabel::make(4, {2, 1}, 0));
    std::vector<OLabel> expect = {
        OLabel::trivial(3), OLabel::make(3, {1}, 0), OLabel::make(3, {2}, 0),
        OLabel::make(3, {1}, 1), OLabel::make(3, {2}, 1)};
    // expected set: (2), (1), d(2), d(1) -- the trivial does NOT occur
    CHECK(b2.size() == 4);
    for (const OLabel& y :
         {OLabel::make(3, {2}, 0), OLabel::make(3, {1}, 0),
          OLabel::make(3, {2}, 1), OLabel::make(3, {1}, 1)})
        CHECK(std::count(b2.begin(), b2.end(), y) == 1);

    auto b3 = branch_one_step(OLabel::trivial(6));
    CHECK(b3 == std::vector<OLabel>{OLabel::trivial(5)});
}

TEST_CASE("branching conserves dimension") {
    for (int n = 2; n <= 9; ++n)
        for (const Part& lam : partitions_up_to(4, n / 2))
            for (int eps : {0, 1}) {
                OLabel x = OLabel::make(n, lam, eps);
                if (x.eps != eps) continue;
                std::int64_t sum = 0;
                for (const OLabel& y : branch_one_step(x)) sum += o_dim(y);
                CHECK(sum == o_dim(x));
            }
    // pinned instances 3 = 2 + 1 and 16 = 5 + 3 + 5 + 3
    CHECK(o_dim(OLabel::make(3, {1}, 0)) == 3);
    std::int64_t s = 0;
    for (const OLabel& y : branch_one_step(OLabel::make(4, {2, 1}, 0)))
        s += o_dim(y);
    CHECK(s == 16);
}

TEST_CASE("branching commutes with det twist") {
    for (int n = 2; n <= 7; ++n)
        for (const Part& lam : partitions_up_to(3, n / 2)) {
            OLabel x = OLabel::make(n, lam, 0);
            OLabel xt = det_twist(x);
            if (x == xt) continue;
            auto plain = branch_one_step(x);
            auto twisted = branch_one_step(xt);
            std::vector<OLabel> retwisted;
            for (const OLabel& y : plain) retwisted.push_back(det_twist(y));
            std::sort(retwisted.begin(), retwisted.end());
            CHECK(retwisted == twisted);
        }
}

TEST_CASE("infinitesimal characters of labels") {
    CHECK(infchar_of(OLabel::trivial(7)).entries.twice ==
          std::vector<int>{5, 3, 1}); // (5/2, 3/2, 1/2)
    CHECK(infchar_of(OLabel::make(4, {1}, 0)).entries.twice ==
          std::vector<int>{4, 0}); // (2, 0)
    CHECK(infchar_of(OLabel::make(5, {2}, 0)).entries.twice ==
          std::vector<int>{7, 1}); // (7/2, 1/2)
    CHECK(infchar_of(OLabel::make(5, {2}, 1)) ==
          infchar_of(OLabel::make(5, {2}, 0))); // eps-independent
}

TEST_CASE("label text syntax") {
    CHECK(OLabel::make(5, {2, 1}, 1).to_string() == "d*[2,1]");
    CHECK(olabel_from_string("d*[2,1]", 5) == OLabel::make(5, {2, 1}, 1));
    CHECK(olabel_from_string("[]", 4) == OLabel::trivial(4));
}
