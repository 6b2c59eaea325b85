#pragma once

// Structure-constant model of finite-dimensional Hom-algebras.
//
// Basis indices are 0-based in memory and 1-based in every text format.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hrz/exactlin.hpp"

namespace hrz {

/// A bilinear product e_i o e_j = sum_k c[i][j][k] e_k, stored densely.
class BilinearOp {
public:
	BilinearOp() = default;
	explicit BilinearOp(std::size_t dim);

	std::size_t dim() const noexcept { return dim_; }
	const Rational &operator()(std::size_t i, std::size_t j, std::size_t k) const
	{
		return coeffs_[(i * dim_ + j) * dim_ + k];
	}
	Rational &operator()(std::size_t i, std::size_t j, std::size_t k)
	{
		return coeffs_[(i * dim_ + j) * dim_ + k];
	}
	/// Product of two basis vectors as a coordinate vector.
	Vector basis_product(std::size_t i, std::size_t j) const;
	bool is_zero() const;

	friend bool operator==(const BilinearOp &a, const BilinearOp &b)
	{
		return a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
	}

private:
	std::size_t dim_ = 0;
	std::vector<Rational> coeffs_;
};

BilinearOp operator+(const BilinearOp &a, const BilinearOp &b);
BilinearOp operator-(const BilinearOp &a, const BilinearOp &b);
BilinearOp operator*(const Rational &s, const BilinearOp &op);

/// Bilinear extension of the basis products.
Vector eval(const BilinearOp &op, const Vector &x, const Vector &y);

/// Square matrix acting on coordinates: column i is the image of e_i.
struct LinearMap {
	Matrix matrix;

	static LinearMap identity(std::size_t n) { return {Matrix::identity(n)}; }
	static LinearMap zero(std::size_t n) { return {Matrix::zero(n, n)}; }

	std::size_t dim() const noexcept { return matrix.rows(); }
	Vector apply(const Vector &v) const { return matrix * v; }
	Vector image(std::size_t i) const { return matrix.column(i); }

	friend bool operator==(const LinearMap &, const LinearMap &) = default;
};

enum class AlgebraKind { Mono, Rhizaform };

inline constexpr const char *kMul = "mul";
inline constexpr const char *kSucc = "succ";
inline constexpr const char *kPrec = "prec";

struct HomAlgebra {
	std::size_t dim = 0;
	AlgebraKind kind = AlgebraKind::Mono;
	std::map<std::string, BilinearOp> products;
	LinearMap alpha;
	std::optional<LinearMap> beta;
	/// Parameter bindings used when the algebra was loaded. Kept for
	/// provenance; coefficients are already fully resolved.
	std::map<std::string, Rational> params;

	const BilinearOp &product(const std::string &name) const;
	bool has(const std::string &name) const { return products.count(name) != 0; }
	const BilinearOp &succ() const { return product(kSucc); }
	const BilinearOp &prec() const { return product(kPrec); }
	const BilinearOp &mul() const { return product(kMul); }

	friend bool operator==(const HomAlgebra &, const HomAlgebra &) = default;
};

/// Throws DimensionMismatch unless every product and alpha share `dim`,
/// and MissingProduct unless the product names match `kind`.
void validate(const HomAlgebra &a);

HomAlgebra make_mono(BilinearOp mul, LinearMap alpha);
HomAlgebra make_rhizaform(BilinearOp succ, BilinearOp prec, LinearMap alpha);

/// x * y = x > y + x < y.
BilinearOp sum_product(const HomAlgebra &a);
/// The mono algebra (A, *, alpha) carried by a two-product algebra.
HomAlgebra sum_algebra(const HomAlgebra &a);

} // namespace hrz
