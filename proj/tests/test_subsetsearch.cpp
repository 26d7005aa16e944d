#include <doctest.h>

#include "subsyz/subsetsearch.hpp"
#include "test_util.hpp"

using namespace subsyz;

TEST_CASE("greedy subsets have truncated hilbert function at every prefix") {
    Field F(31991);
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
        PointSet X = testutil::special_config(F, 8, seed);
        for (long e : {1L, 3L, 5L, 7L}) {
            std::vector<std::size_t> order = greedy_truncated_subset(X, e);
            CHECK(long(order.size()) == e);
            CHECK(prefix_truncated(X, order));
        }
    }
}

TEST_CASE("the five-point configuration accepts the published addition order") {
    Field F(31991);
    PointSet X = testutil::five_point_config(F);
    // points labeled 3, 1, 4, 2, 5 in 1-based labels
    CHECK(prefix_truncated(X, {2, 0, 3, 1, 4}));
    // starting with the two collinear triples at once fails early:
    // {3, 1, 2} spans only a line, so h(1) = 2 < min{h_X(1), 3}
    CHECK_FALSE(prefix_truncated(X, {2, 0, 1, 3, 4}));
}

TEST_CASE("greedy truncation in higher-dimensional space") {
    Field F(31991);
    PointSet X = random_points(6, 22, F, 42).points;
    std::vector<std::size_t> order = greedy_truncated_subset(X, 11);
    HilbertTable hy = hilbert(subset(X, order));
    CHECK(hy.values == std::vector<long>{1, 7, 11, 11});
}

TEST_CASE("critical degree") {
    Field F(31991);
    CHECK(critical_degree(random_points(2, 3, F, 5).points) == 1);
    CHECK(critical_degree(testutil::five_point_config(F)) == 2);
    CHECK(critical_degree(random_points(6, 22, F, 42).points) == 2);
}

TEST_CASE("minimal generator counts") {
    Field F(31991);

    SUBCASE("five-point configuration has two cubic generators") {
        PointSet X = testutil::five_point_config(F);
        CHECK(min_gens(X, 3) == 2);  // dim I_3 = 5, mu-rank = 3
        CHECK(min_gens(X, 2) == 1);  // the conic; I_1 = 0 so mu contributes 0
    }

    SUBCASE("initial degree: all of I_t is new") {
        PointSet X = random_points(2, 4, F, 9).points;
        IdealCache cache(X);
        CHECK(min_gens(X, 2) == cache.dim(2));
    }

    SUBCASE("11 generic points in P^6 have 17 quadric generators") {
        PointSet X = random_points(6, 11, F, 42).points;
        CHECK(min_gens(X, 2) == 17);
    }
}

TEST_CASE("case classification") {
    Field F(31991);

    SUBCASE("four generic points: complete intersection of conics, case 1") {
        CaseLabel c = classify_case(random_points(2, 4, F, 2).points);
        CHECK(c.l == 2);
        CHECK(c.gens_at_lplus1 == 0);
        CHECK(c.case_number == 1);
    }

    SUBCASE("five-point configuration: case 3") {
        CaseLabel c = classify_case(testutil::five_point_config(F));
        CHECK(c.l == 2);
        CHECK(c.gens_at_lplus1 == 2);
        CHECK(c.case_number == 3);
    }

    SUBCASE("binomial counts give case 4") {
        for (long k = 1; k <= 3; ++k) {
            long d = long(binomial(k + 2, 2));
            CaseLabel c = classify_case(random_points(2, d, F, 7 + std::uint64_t(k)).points);
            CHECK(c.gens_at_lplus1 == k + 2);
            CHECK(c.case_number == (k + 2 >= 3 ? 4 : 2));
        }
    }

    SUBCASE("rejects other ambient spaces") {
        CHECK_THROWS_AS(classify_case(random_points(3, 5, F, 1).points), ValidationError);
    }
}

TEST_CASE("find_subset on the five-point configuration removes the shared point") {
    Field F(31991);
    PointSet X = testutil::five_point_config(F);
    SubsetChain chain = find_subset(X, 4);
    REQUIRE(chain.success);
    REQUIRE(chain.steps.size() == 1);
    CHECK(chain.steps[0].removed_index == 2);
    CHECK(chain.final_indices == std::vector<std::size_t>{0, 1, 3, 4});
    for (const auto& r : chain.final_ranks) CHECK(r.predicted == r.actual);
}

TEST_CASE("find_subset succeeds on seeded mixtures for every target size") {
    Field F(31991);
    for (std::uint64_t seed : {11ull, 12ull, 13ull}) {
        PointSet X = testutil::special_config(F, 7, seed);
        for (long m = 1; m < 7; ++m) {
            SubsetChain chain = find_subset(X, m);
            CHECK(chain.success);
            CHECK(long(chain.final_indices.size()) == m);
        }
    }
}

TEST_CASE("find_subset handles collinear point sets") {
    // every subset of a collinear set is a complete intersection
    Field F(31991);
    PointSet X = make_point_set(2, F, {{0, 1, 1}, {0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 1, 5}});
    for (long m = 1; m < 5; ++m) {
        SubsetChain chain = find_subset(X, m);
        CHECK(chain.success);
    }
}

TEST_CASE("find_subset validates preconditions") {
    Field F(31991);
    PointSet X = testutil::five_point_config(F);
    CHECK_THROWS_AS(find_subset(X, 0), ValidationError);
    CHECK_THROWS_AS(find_subset(X, 5), ValidationError);
    CHECK_THROWS_AS(find_subset(random_points(3, 5, F, 1).points, 3), ValidationError);
}

TEST_CASE("enumeration of four-point subsets finds the unique generator-free one") {
    Field F(31991);
    PointSet X = testutil::five_point_config(F);
    auto recs = enumerate_subsets(X, 4);
    REQUIRE(recs.size() == 5);
    std::vector<std::vector<std::size_t>> cubic_free;
    for (const auto& r : recs) {
        PointSet Z = subset(X, r.indices);
        if (min_gens(Z, 3) == 0) cubic_free.push_back(r.indices);
    }
    REQUIRE(cubic_free.size() == 1);
    CHECK(cubic_free[0] == std::vector<std::size_t>{0, 1, 3, 4});
}

TEST_CASE("every 3-subset of four generic points achieves the prediction") {
    // generator-free in the top degree, so any removal works
    Field F(31991);
    PointSet X = random_points(2, 4, F, 2).points;
    IdealCache xc(X);
    REQUIRE(classify_case(X).case_number == 1);
    auto recs = enumerate_subsets(X, 3);
    REQUIRE(recs.size() == 4);
    for (const auto& r : recs) {
        CHECK(r.truncated);
        for (auto [s, rk] : r.mu_ranks) CHECK(rk == predicted_mu_rank(xc, 3, s));
    }
}

TEST_CASE("enumeration refuses when the budget is exceeded") {
    Field F(31991);
    PointSet X = random_points(2, 9, F, 3).points;
    CHECK_THROWS_AS(enumerate_subsets(X, 4, 10), ValidationError);
    CHECK_NOTHROW(enumerate_subsets(X, 1, 10));
}

TEST_CASE("singleton subsets all share the same invariants") {
    Field F(31991);
    PointSet X = testutil::five_point_config(F);
    auto recs = enumerate_subsets(X, 1);
    REQUIRE(recs.size() == 5);
    for (const auto& r : recs) {
        CHECK(r.truncated);
        CHECK(r.mu_ranks == recs[0].mu_ranks);
    }
}

TEST_CASE("case-1 law: removing any point keeps the multiplication map surjective") {
    Field F(31991);
    int tested = 0;
    for (std::uint64_t seed = 40; seed < 60 && tested < 4; ++seed) {
        PointSet X = testutil::special_config(F, 6, seed);
        CaseLabel c = classify_case(X);
        if (c.case_number != 1) continue;
        ++tested;
        auto recs = enumerate_subsets(X, long(X.size()) - 1);
        for (const auto& r : recs) {
            PointSet Z = subset(X, r.indices);
            IdealCache zc(Z);
            CHECK(long(mu_rank(zc, c.l)) == zc.dim(c.l + 1));  // surjective
        }
    }
    CHECK(tested > 0);
}

TEST_CASE("one-point removals that keep the h-vector tail keep a top-degree generator") {
    // When Z_i = X - P_i does not have truncated Hilbert function, its
    // Artinian reduction agrees with X's in degrees >= l, so Z_i cannot lose
    // more than the forced minimal generator in degree l+1.
    Field F(31991);
    for (std::uint64_t seed : {70ull, 71ull, 72ull}) {
        PointSet X = testutil::special_config(F, 7, seed);
        IdealCache xc(X);
        HilbertTable hx = xc.hf();
        int l = hx.stabilization;
        long gx = min_gens(xc, l + 1);
        for (std::size_t drop = 0; drop < X.size(); ++drop) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < X.size(); ++i)
                if (i != drop) idx.push_back(i);
            PointSet Z = subset(X, idx);
            HilbertTable hz = hilbert(Z);
            bool truncated = true;
            for (int t = 0; t <= hx.stabilization + 1; ++t)
                truncated = truncated &&
                            hz.value_at(t) == std::min<long>(hx.value_at(t), long(X.size()) - 1);
            if (truncated) continue;
            CHECK(min_gens(Z, l + 1) >= gx - 1);
        }
    }
}
