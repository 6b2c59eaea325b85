#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "hrz/algebra.hpp"
#include "hrz/catalog.hpp"
#include "hrz/errors.hpp"
#include "hrz/io.hpp"

using namespace hrz;

namespace {

HomAlgebra d2(const char *id) { return load_entry(id); }

} // namespace

TEST(Eval, BasisProductsAndBilinearity)
{
	const auto a = d2("d2.A1");
	EXPECT_EQ(eval(a.succ(), unit_vector(2, 1), unit_vector(2, 1)), (Vector{1, 0}));
	EXPECT_EQ(eval(a.succ(), Vector{1, 1}, unit_vector(2, 1)), (Vector{1, 0}));
	EXPECT_EQ(eval(a.prec(), zero_vector(2), Vector{3, -1}), zero_vector(2));
}

TEST(SumProduct, CatalogExamples)
{
	const auto s1 = sum_product(d2("d2.A1"));
	EXPECT_EQ(s1.basis_product(1, 1), (Vector{2, 0}));
	EXPECT_EQ(s1.basis_product(0, 1), zero_vector(2));
	const auto s7 = sum_product(d2("d2.A7"));
	EXPECT_EQ(s7.basis_product(0, 0), (Vector{0, 2}));
}

TEST(SumProduct, NegatedPrecCancels)
{
	fixtures::Rng rng(3);
	const auto s = fixtures::random_op(3, fixtures::Shape::Dense, rng);
	EXPECT_TRUE(sum_product(make_rhizaform(s, Rational(-1) * s, LinearMap::identity(3))).is_zero());
}

TEST(ParseAlgebra, CatalogEntryA7)
{
	const auto a = d2("d2.A7");
	EXPECT_EQ(a.kind, AlgebraKind::Rhizaform);
	EXPECT_EQ(a.products.size(), 2u);
	EXPECT_EQ(a.alpha, LinearMap::identity(2));
	EXPECT_EQ(a.succ().basis_product(0, 0), (Vector{0, 1}));
	EXPECT_EQ(a.prec().basis_product(0, 0), (Vector{0, 1}));
}

TEST(ParseAlgebra, EmptyProductsAreZero)
{
	const auto a = parse_algebra(R"({"dim": 2, "kind": "rhizaform", "alpha": [[1,0],[0,1]], "succ": [], "prec": []})");
	EXPECT_TRUE(a.succ().is_zero());
	EXPECT_TRUE(a.prec().is_zero());
	const auto b = parse_algebra(R"({"dim": 2, "kind": "rhizaform", "alpha": [[1,0],[0,1]]})");
	EXPECT_TRUE(b.succ().is_zero());
}

TEST(ParseAlgebra, ParameterBindings)
{
	const char *text = R"({"dim": 2, "alpha": [["1","0"],["0","1"]], "mul": [[2, 2, 1, "eta"], [1, 2, 2, "-2*eta"]]})";
	const auto a = parse_algebra(text, {{"eta", Rational(1, 4)}});
	EXPECT_EQ(a.mul()(1, 1, 0), Rational(1, 4));
	EXPECT_EQ(a.mul()(0, 1, 1), Rational(-1, 2));
	EXPECT_EQ(a.params.at("eta"), Rational(1, 4));
	EXPECT_THROW(parse_algebra(text), UnboundParameter);

	// Bindings from the command line take precedence over the file.
	const char *with_params =
	    R"({"dim": 1, "alpha": [["1"]], "mul": [[1, 1, 1, "t"]], "params": {"t": "3/2"}})";
	EXPECT_EQ(parse_algebra(with_params).mul()(0, 0, 0), Rational(3, 2));
	EXPECT_EQ(parse_algebra(with_params, {{"t", Rational(5)}}).mul()(0, 0, 0), 5);
}

TEST(ParseAlgebra, CatalogEtaBinding)
{
	const auto a = load_entry("d3.A4", {{"eta", Rational(1)}});
	EXPECT_EQ(a.prec().basis_product(0, 1), (Vector{0, 0, 1}));
	EXPECT_EQ(a.succ()(1, 1, 2), Rational(1, 4));
	try {
		load_entry("d3.A4");
		FAIL() << "expected UnboundParameter";
	} catch (const UnboundParameter &e) {
		EXPECT_NE(std::string(e.what()).find("eta"), std::string::npos);
	}
}

TEST(ParseAlgebra, Rejections)
{
	EXPECT_THROW(parse_algebra("{"), ParseError);
	EXPECT_THROW(parse_algebra(R"({"dim": 2, "alpha": [[1,0],[0,1]], "mul": [[1,1,1,0.5]]})"), ParseError);
	EXPECT_THROW(parse_algebra(R"({"dim": 2, "alpha": [[1,0],[0,1]], "mul": [[1,1,1,"1"],[1,1,1,"2"]]})"), ParseError);
	EXPECT_THROW(parse_algebra(R"({"dim": 2, "alpha": [[1,0],[0,1]], "mul": [[3,1,1,"1"]]})"), Error);
	EXPECT_THROW(parse_algebra(R"({"dim": 2, "alpha": [[1,0]], "mul": []})"), ParseError);
	EXPECT_THROW(parse_algebra(R"({"dim": 2, "mul": []})"), ParseError);
	EXPECT_THROW(parse_algebra(R"({"dim": 2, "kind": "mono", "alpha": [[1,0],[0,1]], "succ": []})"), Error);
	EXPECT_THROW(parse_coefficient("1/0", {}), ParseError);
	EXPECT_THROW(parse_binding("eta"), ParseError);
	EXPECT_EQ(parse_binding("eta=-3/6").second, Rational(-1, 2));
}

TEST(Serialize, CatalogRoundTrip)
{
	for (const auto &e : catalog_entries()) {
		const auto a = load_entry(e.id, {{"eta", Rational(1, 4)}});
		const auto text = serialize_algebra(a);
		EXPECT_EQ(parse_algebra(text), a) << e.id;
		EXPECT_EQ(serialize_algebra(parse_algebra(text)), text) << e.id;
	}
}

TEST(Serialize, RandomRoundTrip)
{
	fixtures::Rng rng(11);
	for (int t = 0; t < 100; ++t) {
		auto a = t % 2 ? fixtures::random_rhizaform(2 + t % 3, rng) : fixtures::random_mono(2 + t % 3, rng);
		a.alpha.matrix(0, 0) = Rational(t, 7);
		a.alpha.matrix(0, 0).canonicalize();
		EXPECT_EQ(parse_algebra(serialize_algebra(a)), a);
	}
}

TEST(Validate, ShapeErrors)
{
	EXPECT_THROW(make_mono(BilinearOp(2), LinearMap::identity(3)), DimensionMismatch);
	auto a = make_mono(BilinearOp(2), LinearMap::identity(2));
	a.alpha = LinearMap::identity(3);
	EXPECT_THROW(validate(a), DimensionMismatch);
	HomAlgebra b;
	b.dim = 2;
	b.kind = AlgebraKind::Rhizaform;
	b.alpha = LinearMap::identity(2);
	b.products[kSucc] = BilinearOp(2);
	EXPECT_THROW(validate(b), MissingProduct);
	EXPECT_THROW(b.prec(), MissingProduct);
}
