#include "hrz/axioms.hpp"

#include "hrz/errors.hpp"

namespace hrz {

namespace {

void require_dim(const BilinearOp &op, const LinearMap &alpha, const char *what)
{
	if (alpha.matrix.rows() != op.dim() || alpha.matrix.cols() != op.dim())
		throw DimensionMismatch(std::string(what) + ": structure map does not match product dimension");
}

template <class F>
void for_triples(std::size_t n, F f)
{
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				f(i, j, k);
}

} // namespace

Vector TripleTable::residual(std::size_t i, std::size_t j, std::size_t k) const
{
	Vector v(n_);
	for (std::size_t r = 0; r < n_; ++r)
		v[r] = at(i, j, k, r);
	return v;
}

TripleTable &TripleTable::operator+=(const TripleTable &o)
{
	for (std::size_t i = 0; i < data_.size(); ++i)
		data_[i] += o.data_[i];
	return *this;
}

TripleTable &TripleTable::operator-=(const TripleTable &o)
{
	for (std::size_t i = 0; i < data_.size(); ++i)
		data_[i] -= o.data_[i];
	return *this;
}

TripleTable nested_left(const BilinearOp &inner, const BilinearOp &outer, const LinearMap &alpha)
{
	const auto n = inner.dim();
	const Matrix &A = alpha.matrix;
	TripleTable t(n);
	for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) {
		for (std::size_t p = 0; p < n; ++p) {
			if (inner(i, j, p) == 0)
				continue;
			for (std::size_t q = 0; q < n; ++q) {
				if (A(q, k) == 0)
					continue;
				Rational w = inner(i, j, p) * A(q, k);
				for (std::size_t r = 0; r < n; ++r)
					t.at(i, j, k, r) += w * outer(p, q, r);
			}
		}
	});
	return t;
}

TripleTable nested_right(const BilinearOp &inner, const BilinearOp &outer, const LinearMap &alpha)
{
	const auto n = inner.dim();
	const Matrix &A = alpha.matrix;
	TripleTable t(n);
	for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) {
		for (std::size_t p = 0; p < n; ++p) {
			if (A(p, i) == 0)
				continue;
			for (std::size_t q = 0; q < n; ++q) {
				if (inner(j, k, q) == 0)
					continue;
				Rational w = A(p, i) * inner(j, k, q);
				for (std::size_t r = 0; r < n; ++r)
					t.at(i, j, k, r) += w * outer(p, q, r);
			}
		}
	});
	return t;
}

TripleTable swap_first_two(const TripleTable &t)
{
	const auto n = t.dim();
	TripleTable out(n);
	for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) {
		for (std::size_t r = 0; r < n; ++r)
			out.at(i, j, k, r) = t.at(j, i, k, r);
	});
	return out;
}

BilinearOp opposite(const BilinearOp &op)
{
	const auto n = op.dim();
	BilinearOp out(n);
	for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) { out(i, j, k) = op(j, i, k); });
	return out;
}

namespace {

void report_table(CheckReport &rep, const std::string &id, const TripleTable &t)
{
	const auto n = t.dim();
	for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) {
		rep.expect_zero(id, {i, j, k}, t.residual(i, j, k));
	});
}

} // namespace

CheckReport check_hom_anti_associative(const BilinearOp &mul, const LinearMap &alpha)
{
	require_dim(mul, alpha, "check_hom_anti_associative");
	CheckReport rep("hom_anti_associative");
	auto t = nested_right(mul, mul, alpha);
	t += nested_left(mul, mul, alpha);
	report_table(rep, "anti_assoc", t);
	return rep;
}

CheckReport check_multiplicativity(const BilinearOp &op, const LinearMap &alpha, const std::string &identity)
{
	require_dim(op, alpha, "check_multiplicativity");
	const auto n = op.dim();
	const Matrix &A = alpha.matrix;
	CheckReport rep("multiplicativity");
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			Vector res = zero_vector(n);
			for (std::size_t r = 0; r < n; ++r) {
				for (std::size_t p = 0; p < n; ++p)
					res[r] += A(r, p) * op(i, j, p);
				for (std::size_t p = 0; p < n; ++p) {
					if (A(p, i) == 0)
						continue;
					for (std::size_t q = 0; q < n; ++q)
						res[r] -= A(p, i) * A(q, j) * op(p, q, r);
				}
			}
			rep.expect_zero(identity, {i, j}, std::move(res));
		}
	return rep;
}

CheckReport check_rhizaform(const HomAlgebra &a)
{
	const auto &succ = a.succ();
	const auto &prec = a.prec();
	require_dim(succ, a.alpha, "check_rhizaform");
	const auto sum = succ + prec;
	CheckReport rep("rhizaform");

	auto req1 = nested_left(sum, succ, a.alpha);
	req1 += nested_right(succ, succ, a.alpha);
	report_table(rep, "req1", req1);

	auto req2 = nested_right(sum, prec, a.alpha);
	req2 += nested_left(prec, prec, a.alpha);
	report_table(rep, "req2", req2);

	auto req3 = nested_right(prec, succ, a.alpha);
	req3 += nested_left(succ, prec, a.alpha);
	report_table(rep, "req3", req3);

	rep.merge(check_multiplicativity(succ, a.alpha, "mult_succ"));
	rep.merge(check_multiplicativity(prec, a.alpha, "mult_prec"));
	return rep;
}

CheckReport check_dendriform(const HomAlgebra &a)
{
	const auto &succ = a.succ();
	const auto &prec = a.prec();
	require_dim(succ, a.alpha, "check_dendriform");
	const auto sum = succ + prec;
	CheckReport rep("dendriform");

	auto den1 = nested_left(prec, prec, a.alpha);
	den1 -= nested_right(sum, prec, a.alpha);
	report_table(rep, "den1", den1);

	auto den2 = nested_left(succ, prec, a.alpha);
	den2 -= nested_right(prec, succ, a.alpha);
	report_table(rep, "den2", den2);

	auto den3 = nested_left(sum, succ, a.alpha);
	den3 -= nested_right(succ, succ, a.alpha);
	report_table(rep, "den3", den3);

	rep.merge(check_multiplicativity(succ, a.alpha, "mult_succ"));
	rep.merge(check_multiplicativity(prec, a.alpha, "mult_prec"));
	return rep;
}

CheckReport check_jacobi_jordan(const BilinearOp &mul, const LinearMap &alpha)
{
	require_dim(mul, alpha, "check_jacobi_jordan");
	const auto n = mul.dim();
	CheckReport rep("jacobi_jordan");
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			rep.expect_zero("comm", {i, j}, mul.basis_product(i, j) - mul.basis_product(j, i));
	const auto right = nested_right(mul, mul, alpha);
	for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) {
		Vector res(n);
		for (std::size_t r = 0; r < n; ++r)
			res[r] = right.at(i, j, k, r) + right.at(j, k, i, r) + right.at(k, i, j, r);
		rep.expect_zero("cyclic", {i, j, k}, std::move(res));
	});
	return rep;
}

CheckReport check_pre_jacobi_jordan(const BilinearOp &mul, const LinearMap &alpha)
{
	require_dim(mul, alpha, "check_pre_jacobi_jordan");
	CheckReport rep("pre_jacobi_jordan");
	auto t = nested_left(mul, mul, alpha);
	t += nested_right(mul, mul, alpha);
	t += swap_first_two(t);
	report_table(rep, "pre_jj", t);
	return rep;
}

BilinearOp pre_jacobi_jordan_product(const HomAlgebra &a)
{
	return a.succ() - opposite(a.prec());
}

BilinearOp subadjacent_bracket(const HomAlgebra &a)
{
	const auto sum = sum_product(a);
	return sum + opposite(sum);
}

CheckReport check_alpha_derivation(const LinearMap &d, const HomAlgebra &a, const std::string &product)
{
	const auto &op = a.product(product);
	require_dim(op, a.alpha, "check_alpha_derivation");
	require_dim(op, d, "check_alpha_derivation");
	const auto n = op.dim();
	const Matrix &A = a.alpha.matrix;
	const Matrix &D = d.matrix;
	CheckReport rep("alpha_derivation");
	const std::string id = "deriv_" + product;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			Vector res = zero_vector(n);
			for (std::size_t r = 0; r < n; ++r) {
				for (std::size_t p = 0; p < n; ++p)
					res[r] += D(r, p) * op(i, j, p);
				for (std::size_t p = 0; p < n; ++p)
					for (std::size_t q = 0; q < n; ++q)
						res[r] -= (D(p, i) * A(q, j) + A(p, i) * D(q, j)) * op(p, q, r);
			}
			rep.expect_zero(id, {i, j}, std::move(res));
		}
	return rep;
}

LinearMap inner_derivation(const Vector &z, const HomAlgebra &a, AdConvention convention)
{
	const auto n = a.dim;
	if (z.size() != n)
		throw DimensionMismatch("inner_derivation: z has wrong length");
	std::vector<Vector> cols;
	cols.reserve(n);
	if (convention == AdConvention::Star) {
		const BilinearOp star = a.kind == AlgebraKind::Rhizaform ? sum_product(a) : a.mul();
		for (std::size_t i = 0; i < n; ++i) {
			auto e = unit_vector(n, i);
			cols.push_back(eval(star, z, e) - eval(star, e, z));
		}
	} else {
		for (std::size_t i = 0; i < n; ++i) {
			auto e = unit_vector(n, i);
			cols.push_back(eval(a.prec(), z, e) - eval(a.succ(), e, z));
		}
	}
	return {Matrix::from_columns(cols, n)};
}

} // namespace hrz
