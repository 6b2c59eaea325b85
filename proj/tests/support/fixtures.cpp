#include "fixtures.hpp"

#include "hrz/axioms.hpp"
#include "hrz/catalog.hpp"

namespace hrz::fixtures {

namespace {

int draw(Rng &rng, Shape shape)
{
	std::uniform_int_distribution<int> three(-1, 1);
	if (shape == Shape::Sparse) {
		std::uniform_int_distribution<int> six(0, 5);
		if (six(rng) != 0)
			return 0;
		return std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
	}
	return three(rng);
}

Matrix random_matrix(std::size_t rows, std::size_t cols, Shape shape, Rng &rng)
{
	Matrix m(rows, cols);
	for (std::size_t r = 0; r < rows; ++r)
		for (std::size_t c = 0; c < cols; ++c)
			m(r, c) = draw(rng, shape);
	return m;
}

} // namespace

BilinearOp random_op(std::size_t n, Shape shape, Rng &rng)
{
	BilinearOp op(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				if (shape == Shape::Triangular && k <= std::max(i, j))
					continue;
				op(i, j, k) = draw(rng, shape == Shape::Triangular ? Shape::Dense : shape);
			}
	return op;
}

LinearMap random_alpha(std::size_t n, AlphaKind kind, Rng &rng)
{
	switch (kind) {
	case AlphaKind::Identity:
		return LinearMap::identity(n);
	case AlphaKind::Zero:
		return LinearMap::zero(n);
	case AlphaKind::Random:
		break;
	}
	return {random_matrix(n, n, Shape::Dense, rng)};
}

namespace {

Shape pick_shape(Rng &rng)
{
	switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
	case 0:
		return Shape::Dense;
	case 1:
		return Shape::Sparse;
	default:
		return Shape::Triangular;
	}
}

AlphaKind pick_alpha(Rng &rng)
{
	switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
	case 0:
		return AlphaKind::Identity;
	case 1:
		return AlphaKind::Zero;
	default:
		return AlphaKind::Random;
	}
}

} // namespace

HomAlgebra random_mono(std::size_t n, Rng &rng)
{
	const auto shape = pick_shape(rng);
	auto op = random_op(n, shape, rng);
	return make_mono(std::move(op), random_alpha(n, pick_alpha(rng), rng));
}

HomAlgebra random_rhizaform(std::size_t n, Rng &rng)
{
	const auto shape = pick_shape(rng);
	auto s = random_op(n, shape, rng);
	auto p = random_op(n, shape, rng);
	return make_rhizaform(std::move(s), std::move(p), random_alpha(n, pick_alpha(rng), rng));
}

std::vector<Matrix> matrix_grid(std::size_t n, const std::vector<Rational> &values)
{
	std::vector<Matrix> out;
	const std::size_t cells = n * n;
	std::vector<std::size_t> idx(cells, 0);
	for (;;) {
		Matrix m(n, n);
		for (std::size_t c = 0; c < cells; ++c)
			m(c / n, c % n) = values[idx[c]];
		out.push_back(std::move(m));
		std::size_t pos = cells;
		while (pos > 0) {
			--pos;
			if (++idx[pos] < values.size())
				break;
			idx[pos] = 0;
			if (pos == 0)
				return out;
		}
		if (cells == 0)
			return out;
	}
}

std::vector<Rational> half_grid()
{
	return {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)};
}

std::vector<HomAlgebra> passing_d2_sums()
{
	std::vector<HomAlgebra> out;
	for (const auto &e : catalog_entries()) {
		if (e.dim != 2)
			continue;
		const auto a = load_entry(e.id, {{"eta", Rational(1)}});
		if (check_rhizaform(a).passed())
			out.push_back(sum_algebra(a));
	}
	return out;
}

std::vector<std::pair<HomAlgebra, LinearOperator>> rb_grid_fixtures()
{
	std::vector<std::pair<HomAlgebra, LinearOperator>> out;
	const auto grid = matrix_grid(2, half_grid());
	for (const auto &a : passing_d2_sums())
		for (const auto &m : grid) {
			LinearOperator r{m};
			if (check_rota_baxter(r, a).passed())
				out.emplace_back(a, r);
		}
	return out;
}

std::vector<HomAlgebra> two_step_fixtures(std::size_t count, std::uint64_t seed)
{
	Rng rng(seed);
	std::vector<HomAlgebra> out;
	std::uniform_int_distribution<int> three(-1, 1);
	std::uniform_int_distribution<std::size_t> dim(2, 3);
	while (out.size() < count) {
		const std::size_t n = dim(rng);
		BilinearOp op(n);
		for (std::size_t i = 0; i + 1 < n; ++i)
			for (std::size_t j = 0; j + 1 < n; ++j)
				op(i, j, n - 1) = three(rng);
		out.push_back(make_mono(std::move(op), LinearMap::identity(n)));
	}
	return out;
}

std::vector<HomAlgebra> negated_prec_fixtures(std::size_t count, std::uint64_t seed)
{
	Rng rng(seed);
	std::vector<HomAlgebra> out;
	std::uniform_int_distribution<std::size_t> dim(2, 3);
	for (std::size_t attempt = 0; attempt < 200000 && out.size() < count; ++attempt) {
		const std::size_t n = dim(rng);
		auto s = random_op(n, attempt % 2 == 0 ? Shape::Sparse : Shape::Triangular, rng);
		if (s.is_zero() && !out.empty())
			continue;
		auto a = make_rhizaform(s, Rational(-1) * s, random_alpha(n, pick_alpha(rng), rng));
		if (check_rhizaform(a).passed())
			out.push_back(std::move(a));
	}
	return out;
}

std::vector<std::pair<HomAlgebra, RBFamily>> rb_family_fixtures(std::size_t per_algebra)
{
	std::vector<std::pair<HomAlgebra, RBFamily>> out;
	const auto grid = matrix_grid(2, {Rational(-1), Rational(0), Rational(1)});
	const auto z2 = Semigroup::cyclic(2);
	for (const auto &a : passing_d2_sums()) {
		// With l = w = 0 the family condition is the plain Rota-Baxter
		// condition for R_0, so R_0 is drawn from the passing operators.
		std::vector<Matrix> r0s;
		for (const auto &m : grid)
			if (check_rota_baxter({m}, a).passed())
				r0s.push_back(m);
		std::size_t found = 0;
		for (const auto &r0 : r0s) {
			for (const auto &r1 : grid) {
				if (r1 == r0 || (r0 == Matrix::zero(2, 2) && r1 == Matrix::zero(2, 2)))
					continue;
				RBFamily rf{z2, {{r0}, {r1}}};
				if (check_rb_family(rf, a).passed()) {
					out.emplace_back(a, std::move(rf));
					if (++found == per_algebra)
						break;
				}
			}
			if (found == per_algebra)
				break;
		}
	}
	return out;
}

FamilyAlgebra random_family(std::size_t n, const Semigroup &omega, AlphaKind alpha, Rng &rng)
{
	FamilyAlgebra f;
	f.dim = n;
	f.omega = omega;
	const auto shape = pick_shape(rng);
	for (std::size_t l = 0; l < omega.size; ++l) {
		f.succ.push_back(random_op(n, shape, rng));
		f.prec.push_back(random_op(n, shape, rng));
	}
	f.alpha = random_alpha(n, alpha, rng);
	return f;
}

Bimodule random_bimodule(std::size_t n, std::size_t m, Rng &rng)
{
	Bimodule b;
	b.alg_dim = n;
	b.mod_dim = m;
	const auto shape = pick_shape(rng);
	for (std::size_t i = 0; i < n; ++i) {
		b.left.push_back(random_matrix(m, m, shape, rng));
		b.right.push_back(random_matrix(m, m, shape, rng));
	}
	b.beta = std::bernoulli_distribution(0.5)(rng) ? Matrix::identity(m) : random_matrix(m, m, Shape::Dense, rng);
	return b;
}

LinearOperator random_operator(std::size_t rows, std::size_t cols, Shape shape, Rng &rng)
{
	return {random_matrix(rows, cols, shape == Shape::Triangular ? Shape::Sparse : shape, rng)};
}

} // namespace hrz::fixtures
