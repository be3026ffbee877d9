#include "doctest.h"

#include "ktlift/errors.hpp"
#include "ktlift/theta.hpp"

using namespace ktlift;

TEST_CASE("stable range predicate") {
    CHECK(in_stable_range({1, 2, 4}));
    CHECK(in_stable_range({2, 4, 6}));
    CHECK_FALSE(in_stable_range({1, 2, 2})); // n = m = 2p excluded
    CHECK_FALSE(in_stable_range({2, 4, 4}));
    CHECK_FALSE(in_stable_range({2, 3, 5}));
}

TEST_CASE("theta of the trivial character, n < m") {
    KTypeSum t = theta_one_ktypes({1, 2, 4}, 2);
    CHECK(t.terms.size() == 3); // l = 0, 1, 2
    // O(2) labels at full depth absorb the det twist
    CHECK(t.mult_of(KTuple{{OLabel::make(2, {1}, 0), OLabel::trivial(4)}}) ==
          1);
    CHECK(t.mult_of(KTuple{{OLabel::make(2, {2}, 0),
                            OLabel::make(4, {1}, 0)}}) == 1);
    CHECK(t.mult_of(KTuple{{OLabel::make(2, {3}, 0),
                            OLabel::make(4, {2}, 0)}}) == 1);
    for (const auto& [tuple, mult] : t.terms) CHECK(mult == 1);

    KTypeSum u = theta_one_ktypes({1, 3, 5}, 1);
    CHECK(u.mult_of(KTuple{{OLabel::make(3, {1}, 1), OLabel::trivial(5)}}) ==
          1); // the det twist survives on O(3)
    CHECK(u.mult_of(KTuple{{OLabel::make(3, {2}, 1),
                            OLabel::make(5, {1}, 0)}}) == 1);
    CHECK(u.terms.size() == 2);
}

TEST_CASE("theta of the trivial character, n > m raises the floor") {
    KTypeSum t = theta_one_ktypes({1, 4, 2}, 2);
    // l starts at (n - m)/2 = 1
    CHECK(t.mult_of(KTuple{{OLabel::det(4), OLabel::make(2, {1}, 0)}}) == 1);
    CHECK(t.mult_of(KTuple{{OLabel::make(4, {1}, 1),
                            OLabel::make(2, {2}, 0)}}) == 1);
    CHECK(t.terms.size() == 2);
    CHECK_THROWS_AS(theta_one_ktypes({1, 2, 3}, 2), Error); // n + m odd
}

TEST_CASE("lowest U(p)-type of L(mu)") {
    CHECK(lowest_type_L({}, 1, 2).entries.twice == std::vector<int>{2});
    CHECK(lowest_type_L({3, 1}, 2, 2).entries.twice ==
          std::vector<int>{8, 4}); // (4, 2)
    CHECK(lowest_type_L({}, 1, 3).entries.twice ==
          std::vector<int>{3}); // (3/2)
    CHECK_THROWS_AS(lowest_type_L({1, 1}, 1, 4), Error);
}

TEST_CASE("Omega K-types keep the mu-isotypic slice") {
    OLabel mu = OLabel::make(3, {1}, 0);
    KTypeSum w = omega_ktypes(1, 2, 3, 3, mu, 2);
    CHECK(w.terms.size() == 2);
    CHECK(w.mult_of(KTuple{{OLabel::make(2, {3}, 0), OLabel::trivial(3)}}) ==
          1); // from l = 1
    CHECK(w.mult_of(KTuple{{OLabel::make(2, {4}, 0),
                            OLabel::make(3, {1}, 0)}}) == 1); // from l = 2

    // deep mu kills the lift
    CHECK(omega_ktypes(1, 2, 2, 4, OLabel::make(4, {1, 1}, 0), 3).empty());

    // r' = 0 degenerates to the lift of the trivial character
    KTypeSum base = theta_one_ktypes({1, 2, 4}, 3);
    KTypeSum deg = omega_ktypes(1, 2, 4, 0, OLabel::trivial(0), 3);
    CHECK(deg == base);
}

TEST_CASE("Omega conserves dimension against the unsliced lift") {
    // summing the O(r)-slices over all mu recovers each (l)-layer
    int p = 1, n = 2, r = 2, rprime = 2, cutoff = 3;
    KTypeSum whole = theta_one_ktypes({p, n, r + rprime}, cutoff);
    std::int64_t whole_dim = 0;
    for (const auto& [tuple, mult] : whole.terms)
        whole_dim += mult * o_dim(tuple.labels[1]);
    std::int64_t sliced = 0;
    for (const Part& lam : partitions_up_to(cutoff, 1))
        for (int eps : {0, 1}) {
            OLabel mu = OLabel::make(rprime, lam, eps);
            if (mu.eps != eps) continue;
            for (const auto& [tuple, mult] :
                 omega_ktypes(p, n, r, rprime, mu, cutoff).terms)
                sliced += mult * o_dim(tuple.labels[1]) * o_dim(mu);
        }
    CHECK(sliced == whole_dim);
}

TEST_CASE("infinitesimal characters of lifts") {
    auto [reg2, ok2] = infchar_theta_lift(1, 2, 2, 2, OLabel::make(2, {2}, 0));
    CHECK(reg2.entries.twice == std::vector<int>{4, 0}); // (2, 0)
    CHECK(ok2);

    auto [sing, oks] = infchar_theta_lift(1, 2, 2, 2, OLabel::trivial(2));
    CHECK(sing.entries.twice == std::vector<int>{0, 0});
    CHECK_FALSE(oks);

    // r' = 0 branch: rho_{n+r} minus p on the leading delta block
    auto [c0, ok0] = infchar_theta_lift(1, 2, 4, 0, OLabel::trivial(0));
    CHECK(c0 == canonical_infchar(rho(6).shifted(-2), 6));
    (void)ok0;
}

TEST_CASE("infinitesimal character correspondence") {
    InfChar src = infchar_of(OLabel::trivial(5));
    InfChar dst = thm11_infchar_corr(src, 5, 7, 1);
    // strip rho(3) = (1/2), attach rho(5) = (3/2, 1/2)
    CHECK(dst.entries.twice == std::vector<int>{3, 3, 1});
    CHECK_THROWS_AS(thm11_infchar_corr(src, 5, 6, 1), Error); // a + b odd
}

TEST_CASE("reductions from outside the stable range") {
    auto r1 = outside_stable_reduce({2, 3, 5});
    REQUIRE(r1.has_value());
    CHECK(r1->label == OutsideCase::CaseI);
    CHECK(r1->equivalent == ThetaParams{1, 3, 5});
    CHECK(r1->det_twisted);

    auto r2 = outside_stable_reduce({2, 3, 3});
    REQUIRE(r2.has_value());
    CHECK(r2->label == OutsideCase::CaseII);
    CHECK(r2->equivalent == ThetaParams{0, 3, 3});
    CHECK_FALSE(r2->det_twisted);

    CHECK_FALSE(outside_stable_reduce({3, 2, 4}).has_value());
    CHECK_THROWS_AS(outside_stable_reduce({1, 2, 4}), Error); // already stable
}

TEST_CASE("extended theta matches the reductions") {
    CHECK(theta_ktypes_extended({1, 2, 4}, 3) == theta_one_ktypes({1, 2, 4}, 3));
    CHECK(theta_ktypes_extended({2, 3, 5}, 3) ==
          theta_one_ktypes({1, 3, 5}, 3).twist_slot(0));
    KTypeSum c2 = theta_ktypes_extended({2, 3, 3}, 3);
    CHECK(c2.terms.size() == 1);
    CHECK(c2.mult_of(KTuple{{OLabel::trivial(3), OLabel::trivial(3)}}) == 1);
    CHECK_THROWS_AS(theta_ktypes_extended({3, 2, 4}, 3), Error); // zero lift
}
