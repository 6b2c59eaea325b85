#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hrz/axioms.hpp"
#include "hrz/catalog.hpp"
#include "hrz/errors.hpp"
#include "hrz/operators.hpp"
#include "hrz/oracle.hpp"

using namespace hrz;

namespace {

HomAlgebra entry(const char *id) { return load_entry(id, {{"eta", Rational(1)}}); }

Bimodule zero_bimodule(std::size_t n, std::size_t m, const Matrix &beta)
{
	return {n, m, std::vector<Matrix>(n, Matrix(m, m)), std::vector<Matrix>(n, Matrix(m, m)), beta};
}

std::vector<HomAlgebra> rhizaform_entries()
{
	std::vector<HomAlgebra> out;
	for (const auto &e : catalog_entries()) {
		auto a = load_entry(e.id, {{"eta", Rational(1)}});
		if (check_rhizaform(a).passed())
			out.push_back(std::move(a));
	}
	return out;
}

} // namespace

TEST(Bimodule, ZeroActionsPass)
{
	const auto s = sum_algebra(entry("d2.A1"));
	EXPECT_TRUE(check_bimodule(s, zero_bimodule(2, 3, Matrix{{1, 2, 0}, {0, 0, 1}, {5, 0, 0}})).passed());
}

TEST(Bimodule, RegularOfA1)
{
	const auto s = sum_algebra(entry("d2.A1"));
	const auto reg = regular_bimodule(s);
	EXPECT_TRUE(check_bimodule(s, reg).passed());
	EXPECT_EQ(reg.left[1], (Matrix{{0, 2}, {0, 0}}));
	EXPECT_TRUE(reg.left[0].is_zero());
	EXPECT_EQ(regular_bimodule(sum_algebra(entry("d2.A7"))).left[0], (Matrix{{0, 0}, {2, 0}}));
	EXPECT_TRUE(regular_bimodule(make_mono(BilinearOp(2), LinearMap::identity(2))).left[1].is_zero());
}

TEST(Bimodule, AssociativeProductFailsFirstIdentity)
{
	BilinearOp op(1);
	op(0, 0, 0) = 1;
	const auto a = make_mono(op, LinearMap::identity(1));
	EXPECT_TRUE(check_bimodule(a, regular_bimodule(a)).failed_identity("bm1"));
}

TEST(Bimodule, RhizaformActionsOfA1)
{
	const auto a1 = entry("d2.A1");
	const auto m = rhizaform_bimodule(a1);
	EXPECT_EQ(m.left[1], (Matrix{{0, 1}, {0, 0}}));
	EXPECT_EQ(m.right[1], (Matrix{{0, 1}, {0, 0}}));
	EXPECT_TRUE(check_bimodule(sum_algebra(a1), m).passed());
}

TEST(Bimodule, DualOfA1)
{
	const auto s = sum_algebra(entry("d2.A1"));
	const auto reg = regular_bimodule(s);
	EXPECT_EQ(dual_bimodule(dual_bimodule(reg)), reg);
	EXPECT_TRUE(check_bimodule(s, dual_bimodule(reg)).passed());
	const auto z = zero_bimodule(2, 2, Matrix(2, 2));
	EXPECT_EQ(dual_bimodule(z), z);
}

// A singular alpha breaks the dual's compatibility identities.
TEST(Bimodule, DualOfA2Fails)
{
	const auto s = sum_algebra(entry("d2.A2"));
	ASSERT_TRUE(check_hom_anti_associative(s.mul(), s.alpha).passed());
	const auto rep = check_bimodule(s, dual_bimodule(regular_bimodule(s)));
	EXPECT_FALSE(rep.passed());
	EXPECT_TRUE(oracle::agrees(rep, oracle::bimodule(s, dual_bimodule(regular_bimodule(s)))));
}

TEST(Bimodule, ValidateShapes)
{
	auto m = zero_bimodule(2, 2, Matrix(2, 2));
	m.left.pop_back();
	EXPECT_THROW(validate(m), DimensionMismatch);
}

TEST(OOperator, Examples)
{
	const auto s = sum_algebra(entry("d2.A1"));
	EXPECT_TRUE(check_o_operator({Matrix(2, 2)}, s, regular_bimodule(s)).passed());
	for (const auto &a : rhizaform_entries()) {
		const auto sa = sum_algebra(a);
		EXPECT_TRUE(check_o_operator({Matrix::identity(a.dim)}, sa, rhizaform_bimodule(a)).passed());
	}
	const auto rep = check_o_operator({Matrix::identity(2)}, s, regular_bimodule(s));
	ASSERT_FALSE(rep.passed());
	EXPECT_TRUE(rep.failed_identity("oop"));
	EXPECT_FALSE(rep.failed_identity("oop_comm"));
}

TEST(RotaBaxter, Examples)
{
	const auto s = sum_algebra(entry("d2.A7"));
	EXPECT_TRUE(check_rota_baxter({Matrix(2, 2)}, s).passed());
	EXPECT_FALSE(check_rota_baxter({Matrix::identity(2)}, s).passed());
	// Operators that kill e1 and move e2 within span{e2}.
	for (const auto &c : fixtures::half_grid()) {
		Matrix r(2, 2);
		r(1, 1) = c;
		EXPECT_TRUE(check_rota_baxter({r}, s).passed());
	}
}

TEST(RotaBaxter, GridAgreesWithOracle)
{
	const auto grid = fixtures::matrix_grid(2, fixtures::half_grid());
	for (const auto &s : fixtures::passing_d2_sums())
		for (std::size_t i = 0; i < grid.size(); i += 7)
			EXPECT_TRUE(oracle::agrees(check_rota_baxter({grid[i]}, s), oracle::rota_baxter({grid[i]}, s)));
}

TEST(InducedFromRB, Examples)
{
	const auto s = sum_algebra(entry("d2.A7"));
	const auto z = induced_rhizaform_from_rb({Matrix(2, 2)}, s);
	EXPECT_TRUE(z.succ().is_zero());
	EXPECT_TRUE(z.prec().is_zero());
	for (const auto &[a, r] : fixtures::rb_grid_fixtures()) {
		const auto induced = induced_rhizaform_from_rb(r, a);
		EXPECT_TRUE(check_rhizaform(induced).passed());
		EXPECT_TRUE(check_homomorphism(r, sum_algebra(induced), a).passed());
		const LinearOperator r2{Rational(2) * r.matrix};
		if (check_rota_baxter(r2, a).passed()) {
			const auto twice = induced_rhizaform_from_rb(r2, a);
			EXPECT_EQ(twice.succ(), Rational(2) * induced.succ());
			EXPECT_EQ(twice.prec(), Rational(2) * induced.prec());
		}
	}
	EXPECT_THROW(induced_rhizaform_from_rb({Matrix::identity(2)}, s), PreconditionFailed);
	EXPECT_NO_THROW(induced_rhizaform_from_rb({Matrix::identity(2)}, s, {false}));
}

TEST(InducedFromOOperator, Examples)
{
	const auto a1 = entry("d2.A1");
	const auto s = sum_algebra(a1);
	const auto z = induced_rhizaform_from_o_operator({Matrix(2, 2)}, s, regular_bimodule(s));
	EXPECT_TRUE(z.succ().is_zero() && z.prec().is_zero());
	const auto same = induced_rhizaform_from_o_operator({Matrix::identity(2)}, s, rhizaform_bimodule(a1));
	EXPECT_EQ(same.succ(), a1.succ());
	EXPECT_EQ(same.prec(), a1.prec());
	EXPECT_THROW(induced_rhizaform_from_o_operator({Matrix::identity(2)}, s, regular_bimodule(s)), NotAnOOperator);
}

TEST(Homomorphism, Examples)
{
	fixtures::Rng rng(9);
	const auto a = fixtures::random_rhizaform(3, rng);
	EXPECT_TRUE(check_homomorphism({Matrix::identity(3)}, a, a).passed());
	EXPECT_TRUE(check_homomorphism({Matrix(3, 3)}, a, a).passed());
	EXPECT_THROW(check_homomorphism({Matrix::identity(3)}, a, sum_algebra(a)), MissingProduct);
}

TEST(Compatible, Examples)
{
	for (const auto &a : rhizaform_entries()) {
		const auto s = sum_algebra(a);
		const auto back = compatible_from_invertible_o_operator({Matrix::identity(a.dim)}, s, rhizaform_bimodule(a));
		EXPECT_EQ(back.succ(), a.succ());
		EXPECT_EQ(back.prec(), a.prec());
	}
	const auto a7 = entry("d2.A7");
	const auto s7 = sum_algebra(a7);
	EXPECT_THROW(compatible_from_invertible_o_operator({Matrix(2, 2)}, s7, rhizaform_bimodule(a7)), Singular);

	// Invertible O-operators on the rhizaform bimodule. Every nonzero
	// multiple of the identity qualifies, so each algebra contributes.
	const auto grid = fixtures::matrix_grid(2, {Rational(-1), Rational(0), Rational(1)});
	for (const auto &a : rhizaform_entries()) {
		if (a.dim != 2)
			continue;
		const auto sa = sum_algebra(a);
		const auto bm = rhizaform_bimodule(a);
		std::size_t found = 0;
		for (const auto &m : grid) {
			if (determinant(m) == 0 || !check_o_operator({m}, sa, bm).passed())
				continue;
			++found;
			const auto c = compatible_from_invertible_o_operator({m}, sa, bm);
			EXPECT_EQ(sum_product(c), sa.mul());
			EXPECT_TRUE(check_rhizaform(c).passed());
		}
		EXPECT_GE(found, 2u);
	}
}
