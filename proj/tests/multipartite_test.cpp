#include <random>

#include <gtest/gtest.h>

#include "liftspace/lifting.hpp"
#include "liftspace/multipartite.hpp"
#include "support/generators.hpp"

using namespace liftspace;
namespace ts = liftspace::testsupport;

TEST(Reshape, Examples) {
    const BipartiteShape shape(2, 2);
    EXPECT_EQ(reshape(RationalVector{1, 0, 0, 0}, shape), (RationalMatrix{{1, 0}, {0, 0}}));
    EXPECT_EQ(reshape(RationalVector{1, 0, 0, 1}, shape), (RationalMatrix{{1, 0}, {0, 1}}));
    EXPECT_THROW(reshape(RationalVector{1, 0, 0}, shape), DimensionMismatch);
}

TEST(Reshape, DeterminantConditionGivesRankOne) {
    // (a,b,c,d) with ad = bc reshapes to a rank-1 matrix
    std::mt19937 rng(404);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational a = ts::random_nonzero_rational(rng);
        const Rational b = ts::random_rational(rng);
        const Rational c = ts::random_rational(rng);
        const Rational d = b * c / a;
        const RationalMatrix m = reshape(RationalVector{a, b, c, d}, BipartiteShape(2, 2));
        EXPECT_EQ(rank(m), 1u);
    }
}

TEST(SchmidtRank, Examples) {
    const BipartiteShape shape(2, 2);
    EXPECT_EQ(schmidt_rank(RationalVector{1, 0, 0, 1}, shape), 2u);
    EXPECT_EQ(schmidt_rank(RationalVector{1, 1, 1, 1}, shape), 1u);
    EXPECT_THROW(schmidt_rank(RationalVector::zero(4), shape), ZeroState);
}

TEST(SchmidtRank, ProductStatesAlwaysRankOne) {
    std::mt19937 rng(112358);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t da = 2 + trial % 3, db = 2 + (trial / 3) % 3;
        const RationalVector v = ts::random_nonzero_vector(rng, da);
        const RationalVector w = ts::random_nonzero_vector(rng, db);
        EXPECT_EQ(schmidt_rank(tensor_product(v, w), BipartiteShape(da, db)), 1u);
    }
}

TEST(SchmidtRank, InvariantUnderScaling) {
    std::mt19937 rng(9);
    const BipartiteShape shape(2, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const RationalVector state = ts::random_nonzero_vector(rng, 6);
        const Rational scale = ts::random_nonzero_rational(rng);
        EXPECT_EQ(schmidt_rank(state, shape), schmidt_rank(scale * state, shape));
    }
}

TEST(ProductFactors, RecoversExactFactors) {
    const BipartiteShape shape(2, 2);
    const RationalVector state{2, 4, 3, 6};
    const auto factors = product_factors(state, shape);
    ASSERT_TRUE(factors.has_value());
    // factors reproduce the state exactly and are proportional to (2,3)⊗(1,2)
    EXPECT_EQ(tensor_product(factors->first, factors->second), state);
    EXPECT_EQ(factors->first[1] * Rational(2), factors->first[0] * Rational(3));
    EXPECT_EQ(factors->second[1], factors->second[0] * Rational(2));

    EXPECT_FALSE(product_factors(RationalVector{1, 0, 0, 1}, shape).has_value());
    EXPECT_FALSE(is_product(RationalVector{1, 0, 0, 1}, shape));
    EXPECT_TRUE(is_product(state, shape));
    EXPECT_THROW(product_factors(RationalVector::zero(4), shape), ZeroState);
}

TEST(ProductFactors, RoundTripOnRandomProducts) {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 100; ++trial) {
        const RationalVector v = ts::random_nonzero_vector(rng, 3);
        const RationalVector w = ts::random_nonzero_vector(rng, 2);
        const RationalVector state = tensor_product(v, w);
        const auto factors = product_factors(state, BipartiteShape(3, 2));
        ASSERT_TRUE(factors.has_value());
        EXPECT_EQ(tensor_product(factors->first, factors->second), state);
    }
}

TEST(PartialTrace, Examples) {
    const BipartiteShape shape(2, 2);
    const DensityMatrix rho = partial_trace(RationalVector{1, 0, 0, 1}, shape, Side::A);
    EXPECT_EQ(rho.matrix,
              (RationalMatrix{{Rational(1, 2), 0}, {0, Rational(1, 2)}}));
    EXPECT_EQ(purity(rho), Rational(1, 2));

    const DensityMatrix product = partial_trace(RationalVector{1, 1, 1, 1}, shape, Side::A);
    EXPECT_EQ(product.matrix, (RationalMatrix{{Rational(1, 2), Rational(1, 2)},
                                              {Rational(1, 2), Rational(1, 2)}}));
    EXPECT_EQ(rank(product.matrix), 1u);
    EXPECT_EQ(purity(product), 1);

    EXPECT_THROW(partial_trace(RationalVector::zero(4), shape, Side::A), ZeroState);
}

TEST(PartialTrace, BothSidesShareTraceAndPurity) {
    std::mt19937 rng(55);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t da = 2 + trial % 2, db = 2 + (trial / 2) % 3;
        const RationalVector state = ts::random_nonzero_vector(rng, da * db);
        const BipartiteShape shape(da, db);
        const DensityMatrix rho_a = partial_trace(state, shape, Side::A);
        const DensityMatrix rho_b = partial_trace(state, shape, Side::B);
        EXPECT_EQ(trace(rho_a.matrix), 1);
        EXPECT_EQ(trace(rho_b.matrix), 1);
        EXPECT_TRUE(is_symmetric(rho_a.matrix));
        EXPECT_TRUE(is_symmetric(rho_b.matrix));
        // M Mᵀ and Mᵀ M share their nonzero spectrum
        EXPECT_EQ(purity(rho_a), purity(rho_b));
    }
}

TEST(Purity, PureProjectorExample) {
    const DensityMatrix rho(RationalMatrix{{1, 0}, {0, 0}});
    EXPECT_EQ(purity(rho), 1);
}

TEST(Purity, OneExactlyForProductStatesOnly) {
    std::mt19937 rng(16180);
    const BipartiteShape shape(2, 2);
    int product_count = 0, entangled_count = 0;
    for (int trial = 0; trial < 200; ++trial) {
        RationalVector state = ts::random_nonzero_vector(rng, 4);
        if (trial % 2 == 0)
            state = tensor_product(ts::random_nonzero_vector(rng, 2),
                                   ts::random_nonzero_vector(rng, 2));
        const bool product = is_product(state, shape);
        const Rational p = purity(partial_trace(state, shape, Side::A));
        EXPECT_EQ(p == 1, product);
        if (product) {
            ++product_count;
        } else {
            EXPECT_LT(p, 1);
            ++entangled_count;
        }
    }
    EXPECT_GE(product_count, 100);
    EXPECT_GT(entangled_count, 0);
}

TEST(DensityMatrix, RejectsNonDensityInputs) {
    EXPECT_THROW(DensityMatrix(RationalMatrix{{1, 0}, {0, 1}}), std::invalid_argument);
    EXPECT_THROW(DensityMatrix(RationalMatrix{{Rational(1, 2), 1}, {0, Rational(1, 2)}}),
                 std::invalid_argument);
    EXPECT_THROW(DensityMatrix(RationalMatrix{{2, 0}, {0, -1}}), std::invalid_argument);
    EXPECT_THROW(DensityMatrix(RationalMatrix::zero(2, 3)), DimensionMismatch);
}

TEST(CoordinateView, PrefixOfLiftedVector) {
    const LiftedBasis basis = lift_function_family(2);
    const auto view = coordinate_view(basis.at_index(16), {1, 2, 3, 4});
    RationalVector expected(20);
    for (std::size_t k = 0; k < 4; ++k) expected[k] = 1;
    EXPECT_EQ(view.state, expected);
    EXPECT_EQ(view.retained_fraction, Rational(4) / norm_squared(basis.at_index(16)));
}

TEST(CoordinateView, AllCoordinatesIsIdentity) {
    std::mt19937 rng(21);
    const RationalVector v = ts::random_vector(rng, 5);
    std::set<std::size_t> all{1, 2, 3, 4, 5};
    const auto view = coordinate_view(v, all);
    EXPECT_EQ(view.state, v);
    if (!v.is_zero()) {
        EXPECT_EQ(view.retained_fraction, 1);
    }
}

TEST(CoordinateView, RetainedFractionMatchesBruteForce) {
    std::mt19937 rng(333);
    for (int trial = 0; trial < 50; ++trial) {
        const RationalVector v = ts::random_nonzero_vector(rng, 6);
        std::set<std::size_t> coords;
        std::uniform_int_distribution<int> keep(0, 1);
        for (std::size_t k = 1; k <= 6; ++k)
            if (keep(rng)) coords.insert(k);
        const auto view = coordinate_view(v, coords);
        Rational expected = 0;
        for (std::size_t k : coords) expected += v[k - 1] * v[k - 1];
        expected /= norm_squared(v);
        EXPECT_EQ(view.retained_fraction, expected);

        // idempotent
        const auto twice = coordinate_view(view.state, coords);
        EXPECT_EQ(twice.state, view.state);
    }
}

TEST(CoordinateView, EmptyCoordsAllowed) {
    const RationalVector v{1, 2, 3};
    const auto view = coordinate_view(v, {});
    EXPECT_TRUE(view.state.is_zero());
    EXPECT_EQ(view.retained_fraction, 0);
    EXPECT_THROW(coordinate_view(v, {4}), DimensionMismatch);
}
