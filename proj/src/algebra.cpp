#include "hrz/algebra.hpp"

#include "hrz/errors.hpp"

namespace hrz {

BilinearOp::BilinearOp(std::size_t dim) : dim_(dim), coeffs_(dim * dim * dim, Rational(0)) {}

Vector BilinearOp::basis_product(std::size_t i, std::size_t j) const
{
	Vector v(dim_);
	for (std::size_t k = 0; k < dim_; ++k)
		v[k] = (*this)(i, j, k);
	return v;
}

bool BilinearOp::is_zero() const
{
	for (const auto &c : coeffs_)
		if (c != 0)
			return false;
	return true;
}

namespace {

template <class F>
BilinearOp combine(const BilinearOp &a, const BilinearOp &b, F f)
{
	if (a.dim() != b.dim())
		throw DimensionMismatch("bilinear op: dimension mismatch");
	const auto n = a.dim();
	BilinearOp r(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				r(i, j, k) = f(a(i, j, k), b(i, j, k));
	return r;
}

} // namespace

BilinearOp operator+(const BilinearOp &a, const BilinearOp &b)
{
	return combine(a, b, [](const Rational &x, const Rational &y) { return Rational(x + y); });
}

BilinearOp operator-(const BilinearOp &a, const BilinearOp &b)
{
	return combine(a, b, [](const Rational &x, const Rational &y) { return Rational(x - y); });
}

BilinearOp operator*(const Rational &s, const BilinearOp &op)
{
	BilinearOp r = op;
	const auto n = op.dim();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				r(i, j, k) *= s;
	return r;
}

Vector eval(const BilinearOp &op, const Vector &x, const Vector &y)
{
	const auto n = op.dim();
	if (x.size() != n || y.size() != n)
		throw DimensionMismatch("eval: vector length does not match product dimension");
	Vector out = zero_vector(n);
	for (std::size_t i = 0; i < n; ++i) {
		if (x[i] == 0)
			continue;
		for (std::size_t j = 0; j < n; ++j) {
			if (y[j] == 0)
				continue;
			Rational w = x[i] * y[j];
			for (std::size_t k = 0; k < n; ++k)
				out[k] += w * op(i, j, k);
		}
	}
	return out;
}

const BilinearOp &HomAlgebra::product(const std::string &name) const
{
	auto it = products.find(name);
	if (it == products.end())
		throw MissingProduct(name);
	return it->second;
}

void validate(const HomAlgebra &a)
{
	if (a.alpha.matrix.rows() != a.dim || a.alpha.matrix.cols() != a.dim)
		throw DimensionMismatch("alpha must be " + std::to_string(a.dim) + "x" + std::to_string(a.dim));
	if (a.beta && (a.beta->matrix.rows() != a.dim || a.beta->matrix.cols() != a.dim))
		throw DimensionMismatch("beta must be " + std::to_string(a.dim) + "x" + std::to_string(a.dim));
	for (const auto &[name, op] : a.products)
		if (op.dim() != a.dim)
			throw DimensionMismatch("product '" + name + "' has dimension " + std::to_string(op.dim()));
	if (a.kind == AlgebraKind::Mono) {
		if (!a.has(kMul))
			throw MissingProduct(kMul);
		if (a.products.size() != 1)
			throw DimensionMismatch("a mono algebra carries exactly one product 'mul'");
	} else {
		if (!a.has(kSucc))
			throw MissingProduct(kSucc);
		if (!a.has(kPrec))
			throw MissingProduct(kPrec);
		if (a.products.size() != 2)
			throw DimensionMismatch("a rhizaform algebra carries exactly 'succ' and 'prec'");
	}
}

HomAlgebra make_mono(BilinearOp mul, LinearMap alpha)
{
	HomAlgebra a;
	a.dim = mul.dim();
	a.kind = AlgebraKind::Mono;
	a.products.emplace(kMul, std::move(mul));
	a.alpha = std::move(alpha);
	validate(a);
	return a;
}

HomAlgebra make_rhizaform(BilinearOp succ, BilinearOp prec, LinearMap alpha)
{
	HomAlgebra a;
	a.dim = succ.dim();
	a.kind = AlgebraKind::Rhizaform;
	a.products.emplace(kSucc, std::move(succ));
	a.products.emplace(kPrec, std::move(prec));
	a.alpha = std::move(alpha);
	validate(a);
	return a;
}

BilinearOp sum_product(const HomAlgebra &a) { return a.succ() + a.prec(); }

HomAlgebra sum_algebra(const HomAlgebra &a)
{
	HomAlgebra s = make_mono(sum_product(a), a.alpha);
	s.params = a.params;
	return s;
}

} // namespace hrz
