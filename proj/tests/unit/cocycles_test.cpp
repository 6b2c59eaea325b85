#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hrz/axioms.hpp"
#include "hrz/catalog.hpp"
#include "hrz/cocycles.hpp"
#include "hrz/errors.hpp"
#include "hrz/oracle.hpp"

using namespace hrz;

namespace {

HomAlgebra sum_of(const char *id) { return sum_algebra(load_entry(id, {{"eta", Rational(1)}})); }

} // namespace

TEST(ScalarCocycles, ZeroProductGivesEveryInvariantForm)
{
	const auto basis = scalar_cocycle_space(make_mono(BilinearOp(3), LinearMap::identity(3)));
	EXPECT_EQ(basis.size(), 9u);
}

// e1 * e1 = 2 e2 only: the triple (1,1,1) forces B(e2,e1) = 0 and the
// triples containing one e2 force B(e2,e2) = 0.
TEST(ScalarCocycles, SumOfA7)
{
	const auto s = sum_of("d2.A7");
	const auto basis = scalar_cocycle_space(s);
	ASSERT_EQ(basis.size(), 2u);
	for (const auto &b : basis) {
		EXPECT_EQ(b.matrix(1, 0), 0);
		EXPECT_EQ(b.matrix(1, 1), 0);
		EXPECT_TRUE(check_scalar_cocycle(s, b).passed());
	}
	EXPECT_EQ(oracle::scalar_cocycle_dimension(s), 2u);
}

TEST(ScalarCocycles, SumOfA1MatchesOracle)
{
	const auto s = sum_of("d2.A1");
	EXPECT_EQ(scalar_cocycle_space(s).size(), oracle::scalar_cocycle_dimension(s));
}

TEST(ScalarCocycles, StrictModeNeedsAntiAssociativity)
{
	BilinearOp op(1);
	op(0, 0, 0) = 1;
	const auto a = make_mono(op, LinearMap::identity(1));
	EXPECT_THROW(scalar_cocycle_space(a), PreconditionFailed);
	EXPECT_NO_THROW(scalar_cocycle_space(a, {false}));
}

TEST(ScalarCocycles, CheckerFlagsBothConditions)
{
	const auto s = sum_of("d2.A7");
	const auto rep = check_scalar_cocycle(s, {Matrix{{0, 0}, {1, 0}}});
	EXPECT_TRUE(rep.failed_identity("cocycle"));
	const auto a = make_mono(BilinearOp(2), LinearMap{Matrix{{2, 0}, {0, 1}}});
	EXPECT_TRUE(check_scalar_cocycle(a, {Matrix::identity(2)}).failed_identity("invariance"));
}

TEST(VectorCocycles, TableAnchors)
{
	EXPECT_EQ(vector_cocycle_space(sum_of("d2.A1")).size(), 2u);
	EXPECT_EQ(vector_cocycle_space(sum_of("d2.A7")).size(), 4u);
}

// The basis reproduces the listed layout: w(e2,e2) = c e1 + c' e2 with
// w(e2,e1) = c' e1.
TEST(VectorCocycles, A1Layout)
{
	const auto basis = vector_cocycle_space(sum_of("d2.A1"));
	ASSERT_EQ(basis.size(), 2u);
	BilinearOp w1(2), w2(2);
	w1(1, 1, 0) = 1;
	w2(1, 0, 0) = 1;
	w2(1, 1, 1) = 1;
	EXPECT_EQ(basis[0].coeffs, w1);
	EXPECT_EQ(basis[1].coeffs, w2);
}

// The 3-dimensional A7 and A8 tables list only the zero cocycle; the
// linear system has a larger kernel.
TEST(VectorCocycles, ThreeDimensionalA7A8)
{
	const auto s7 = sum_of("d3.A7");
	const auto s8 = sum_of("d3.A8");
	EXPECT_EQ(vector_cocycle_space(s7).size(), oracle::vector_cocycle_dimension(s7));
	EXPECT_EQ(vector_cocycle_space(s8).size(), oracle::vector_cocycle_dimension(s8));
	EXPECT_EQ(vector_cocycle_space(s7).size(), 8u);
	EXPECT_EQ(vector_cocycle_space(s8).size(), 3u);
}

TEST(VectorCocycles, BasisVectorsSolveTheSystem)
{
	fixtures::Rng rng(12);
	for (int t = 0; t < 40; ++t) {
		const auto a = fixtures::random_mono(2 + t % 2, rng);
		const auto sys = vector_cocycle_system(a);
		const auto basis = vector_cocycle_space(a);
		EXPECT_EQ(basis.size(), oracle::vector_cocycle_dimension(a));
		for (const auto &w : basis) {
			Vector x;
			const std::size_t n = a.dim;
			for (std::size_t i = 0; i < n; ++i)
				for (std::size_t j = 0; j < n; ++j)
					for (std::size_t k = 0; k < n; ++k)
						x.push_back(w.coeffs(i, j, k));
			EXPECT_TRUE(is_zero(sys * x));
		}
	}
}

TEST(Nondegenerate, Examples)
{
	EXPECT_TRUE(is_nondegenerate({Matrix::identity(2)}));
	EXPECT_FALSE(is_nondegenerate({Matrix(2, 2)}));
	EXPECT_TRUE(is_nondegenerate({Matrix{{0, 1}, {-1, 0}}}));
}

TEST(CocycleConstruction, Examples)
{
	const auto zero = make_mono(BilinearOp(2), LinearMap::identity(2));
	const auto r = rhizaform_from_cocycle(zero, {Matrix{{0, 1}, {-1, 0}}});
	EXPECT_TRUE(r.succ().is_zero() && r.prec().is_zero());
	EXPECT_THROW(rhizaform_from_cocycle(zero, {Matrix(2, 2)}), Singular);
	const auto s7 = sum_of("d2.A7");
	EXPECT_THROW(rhizaform_from_cocycle(s7, {Matrix::identity(2)}), NotACocycle);
}

// Skew-symmetric nondegenerate cocycles on two-step nilpotent algebras
// always split the product.
TEST(CocycleConstruction, SkewFormsSplitTheProduct)
{
	std::size_t tried = 0;
	for (const auto &a : fixtures::two_step_fixtures(40, 5)) {
		const auto basis = scalar_cocycle_space(a);
		for (std::size_t i = 0; i < basis.size(); ++i)
			for (std::size_t j = i; j < basis.size(); ++j) {
				const auto m = basis[i].matrix + basis[j].matrix;
				const Matrix skew = Rational(1, 2) * (m - m.transpose());
				if (!is_nondegenerate({skew}) || !check_scalar_cocycle(a, {skew}).passed())
					continue;
				++tried;
				const auto r = rhizaform_from_cocycle(a, {skew});
				EXPECT_TRUE(check_rhizaform(r).passed());
				EXPECT_EQ(sum_product(r), a.mul());
			}
	}
	EXPECT_GT(tried, 0u);
}

TEST(CocycleJson, Shapes)
{
	const auto basis = vector_cocycle_space(sum_of("d2.A1"));
	const auto j = cocycle_basis_to_json(basis);
	ASSERT_EQ(j.size(), 2u);
	EXPECT_EQ(j[0]["index"], 1);
	EXPECT_EQ(j[0]["components"][0]["pair"], Json::array({2, 2}));
}
