#include "hrz/cocycles.hpp"

#include "hrz/axioms.hpp"
#include "hrz/errors.hpp"

namespace hrz {

Rational ScalarForm::operator()(const Vector &x, const Vector &y) const
{
	if (x.size() != dim() || y.size() != dim())
		throw DimensionMismatch("scalar form: vector length mismatch");
	Rational s = 0;
	for (std::size_t i = 0; i < dim(); ++i) {
		if (x[i] == 0)
			continue;
		for (std::size_t j = 0; j < dim(); ++j)
			s += x[i] * matrix(i, j) * y[j];
	}
	return s;
}

namespace {

/// Adds the coefficients of B(x, y) (as a row over the n^2 unknowns).
void add_form_row(std::vector<Rational> &row, const Vector &x, const Vector &y)
{
	const auto n = x.size();
	for (std::size_t p = 0; p < n; ++p) {
		if (x[p] == 0)
			continue;
		for (std::size_t q = 0; q < n; ++q)
			row[p * n + q] += x[p] * y[q];
	}
}

/// Adds the coefficients of component r of w(x, y) over the n^3 unknowns.
void add_vform_row(std::vector<Rational> &row, const Vector &x, const Vector &y, std::size_t r, const Rational &s)
{
	const auto n = x.size();
	for (std::size_t p = 0; p < n; ++p) {
		if (x[p] == 0)
			continue;
		for (std::size_t q = 0; q < n; ++q)
			if (y[q] != 0)
				row[(p * n + q) * n + r] += s * x[p] * y[q];
	}
}

Matrix stack(const std::vector<std::vector<Rational>> &rows, std::size_t cols)
{
	std::vector<Rational> flat;
	flat.reserve(rows.size() * cols);
	for (const auto &r : rows)
		flat.insert(flat.end(), r.begin(), r.end());
	return Matrix(rows.size(), cols, std::move(flat));
}

} // namespace

Matrix scalar_cocycle_system(const HomAlgebra &a)
{
	const auto &mul = a.mul();
	const auto n = a.dim;
	std::vector<std::vector<Rational>> rows;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				std::vector<Rational> row(n * n, Rational(0));
				add_form_row(row, mul.basis_product(i, j), a.alpha.image(k));
				add_form_row(row, mul.basis_product(j, k), a.alpha.image(i));
				add_form_row(row, mul.basis_product(k, i), a.alpha.image(j));
				rows.push_back(std::move(row));
			}
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			std::vector<Rational> row(n * n, Rational(0));
			add_form_row(row, a.alpha.image(i), a.alpha.image(j));
			row[i * n + j] -= 1;
			rows.push_back(std::move(row));
		}
	return stack(rows, n * n);
}

Matrix vector_cocycle_system(const HomAlgebra &a)
{
	const auto &mul = a.mul();
	const auto n = a.dim;
	const Matrix &A = a.alpha.matrix;
	std::vector<std::vector<Rational>> rows;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				for (std::size_t r = 0; r < n; ++r) {
					std::vector<Rational> row(n * n * n, Rational(0));
					add_vform_row(row, mul.basis_product(i, j), a.alpha.image(k), r, 1);
					add_vform_row(row, mul.basis_product(j, k), a.alpha.image(i), r, 1);
					add_vform_row(row, mul.basis_product(k, i), a.alpha.image(j), r, 1);
					rows.push_back(std::move(row));
				}
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t r = 0; r < n; ++r) {
				std::vector<Rational> row(n * n * n, Rational(0));
				// alpha(w(e_i, e_j))_r = sum_s A(r, s) w(i, j, s)
				for (std::size_t s = 0; s < n; ++s)
					row[(i * n + j) * n + s] += A(r, s);
				add_vform_row(row, a.alpha.image(i), a.alpha.image(j), r, -1);
				rows.push_back(std::move(row));
			}
	return stack(rows, n * n * n);
}

std::vector<ScalarForm> scalar_cocycle_space(const HomAlgebra &a, ConstructionOptions opts)
{
	if (opts.strict && !check_hom_anti_associative(a.mul(), a.alpha).passed())
		throw PreconditionFailed("scalar_cocycle_space: algebra is not Hom-anti-associative");
	const auto n = a.dim;
	std::vector<ScalarForm> out;
	for (const auto &v : nullspace_basis(scalar_cocycle_system(a)))
		out.push_back({Matrix(n, n, v)});
	return out;
}

std::vector<VectorForm> vector_cocycle_space(const HomAlgebra &a)
{
	const auto n = a.dim;
	std::vector<VectorForm> out;
	for (const auto &v : nullspace_basis(vector_cocycle_system(a))) {
		BilinearOp w(n);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				for (std::size_t k = 0; k < n; ++k)
					w(i, j, k) = v[(i * n + j) * n + k];
		out.push_back({std::move(w)});
	}
	return out;
}

bool is_nondegenerate(const ScalarForm &b)
{
	if (!b.matrix.square())
		throw DimensionMismatch("is_nondegenerate: form matrix is not square");
	return rank(b.matrix) == b.dim();
}

CheckReport check_scalar_cocycle(const HomAlgebra &a, const ScalarForm &b)
{
	const auto &mul = a.mul();
	const auto n = a.dim;
	if (b.dim() != n || !b.matrix.square())
		throw DimensionMismatch("check_scalar_cocycle: form dimension does not match algebra");
	CheckReport rep("scalar_cocycle");
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				const Rational v = b(mul.basis_product(i, j), a.alpha.image(k)) +
				                   b(mul.basis_product(j, k), a.alpha.image(i)) +
				                   b(mul.basis_product(k, i), a.alpha.image(j));
				rep.expect_zero("cocycle", {i, j, k}, {v});
			}
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			rep.expect_zero("invariance", {i, j}, {b(a.alpha.image(i), a.alpha.image(j)) - b.matrix(i, j)});
	return rep;
}

HomAlgebra rhizaform_from_cocycle(const HomAlgebra &a, const ScalarForm &b, ConstructionOptions opts)
{
	const auto &mul = a.mul();
	const auto n = a.dim;
	if (b.dim() != n || !b.matrix.square())
		throw DimensionMismatch("rhizaform_from_cocycle: form dimension does not match algebra");
	if (opts.strict) {
		const Matrix sys = scalar_cocycle_system(a);
		if (!is_zero(sys * b.matrix.entries()))
			throw NotACocycle("bilinear form is not a Connes cocycle of the algebra");
	}
	// B(v, e_k) = (B^T v)_k, so v = B^{-T} rhs.
	const Matrix solve = invert(b.matrix.transpose());
	BilinearOp succ(n), prec(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			Vector rs(n), rp(n);
			for (std::size_t k = 0; k < n; ++k) {
				rs[k] = b(unit_vector(n, j), mul.basis_product(k, i));
				rp[k] = b(unit_vector(n, i), mul.basis_product(j, k));
			}
			const auto s = solve * rs;
			const auto p = solve * rp;
			for (std::size_t k = 0; k < n; ++k) {
				succ(i, j, k) = s[k];
				prec(i, j, k) = p[k];
			}
		}
	return make_rhizaform(std::move(succ), std::move(prec), a.alpha);
}

Json cocycle_basis_to_json(const std::vector<VectorForm> &basis)
{
	Json out = Json::array();
	for (std::size_t b = 0; b < basis.size(); ++b) {
		const auto &w = basis[b].coeffs;
		const auto n = w.dim();
		Json comps = Json::array();
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j) {
				Json terms = Json::array();
				for (std::size_t k = 0; k < n; ++k)
					if (w(i, j, k) != 0)
						terms.push_back(Json::array({k + 1, to_string(w(i, j, k))}));
				if (terms.empty())
					continue;
				Json c;
				c["pair"] = Json::array({i + 1, j + 1});
				c["terms"] = std::move(terms);
				comps.push_back(std::move(c));
			}
		Json e;
		e["index"] = b + 1;
		e["components"] = std::move(comps);
		out.push_back(std::move(e));
	}
	return out;
}

Json scalar_basis_to_json(const std::vector<ScalarForm> &basis)
{
	Json out = Json::array();
	for (const auto &f : basis)
		out.push_back(matrix_to_json(f.matrix));
	return out;
}

} // namespace hrz
