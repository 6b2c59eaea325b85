#pragma once

// Identity checkers for the twisted (Hom) structures. Every identity is
// evaluated on all basis tuples, which suffices by multilinearity. The
// checks contract structure constants directly (see nested_left /
// nested_right); the oracle library re-derives the same verdicts from
// eval() alone.

#include <string>

#include "hrz/algebra.hpp"
#include "hrz/report.hpp"

namespace hrz {

/// alpha(x)(yz) = -(xy)alpha(z). Identity id "anti_assoc".
CheckReport check_hom_anti_associative(const BilinearOp &mul, const LinearMap &alpha);

/// alpha(x o y) = alpha(x) o alpha(y) on all basis pairs.
CheckReport check_multiplicativity(const BilinearOp &op, const LinearMap &alpha,
                                   const std::string &identity = "mult");

/// Ids "req1", "req2", "req3", "mult_succ", "mult_prec".
CheckReport check_rhizaform(const HomAlgebra &a);

/// Sign-free splitting of an associative product. Ids "den1" ((x<y)<a(z)),
/// "den2" ((x>y)<a(z)), "den3" ((x<y+x>y)>a(z)), "mult_succ", "mult_prec".
CheckReport check_dendriform(const HomAlgebra &a);

/// Ids "comm" (pairs) and "cyclic" (triples).
CheckReport check_jacobi_jordan(const BilinearOp &mul, const LinearMap &alpha);

/// (xy)a(z) + a(x)(yz) + (yx)a(z) + a(y)(xz) = 0. Id "pre_jj".
CheckReport check_pre_jacobi_jordan(const BilinearOp &mul, const LinearMap &alpha);

/// x o y = x > y - y < x.
BilinearOp pre_jacobi_jordan_product(const HomAlgebra &a);

/// [x, y] = x > y + x < y + y > x + y < x.
BilinearOp subadjacent_bracket(const HomAlgebra &a);

/// D(x o y) = D(x) o alpha(y) + alpha(x) o D(y) for the named product.
/// Id "deriv_<product>".
CheckReport check_alpha_derivation(const LinearMap &d, const HomAlgebra &a, const std::string &product);

enum class AdConvention {
	Star,  ///< ad_z(x) = z * x - x * z with * the sum (or the single) product
	Mixed, ///< ad_z(x) = z < x - x > z
};

LinearMap inner_derivation(const Vector &z, const HomAlgebra &a, AdConvention convention);

/// Operation tensor with alpha folded into the third slot:
///   left[i][j][k]  = (e_i inner e_j) outer alpha(e_k)
///   right[i][j][k] = alpha(e_i) outer (e_j inner e_k)
/// Each is returned as an n^4 table indexed ((i*n+j)*n+k)*n+r.
class TripleTable {
public:
	explicit TripleTable(std::size_t n) : n_(n), data_(n * n * n * n, Rational(0)) {}
	std::size_t dim() const noexcept { return n_; }
	Rational &at(std::size_t i, std::size_t j, std::size_t k, std::size_t r)
	{
		return data_[((i * n_ + j) * n_ + k) * n_ + r];
	}
	const Rational &at(std::size_t i, std::size_t j, std::size_t k, std::size_t r) const
	{
		return data_[((i * n_ + j) * n_ + k) * n_ + r];
	}
	Vector residual(std::size_t i, std::size_t j, std::size_t k) const;
	TripleTable &operator+=(const TripleTable &o);
	TripleTable &operator-=(const TripleTable &o);

private:
	std::size_t n_;
	std::vector<Rational> data_;
};

TripleTable nested_left(const BilinearOp &inner, const BilinearOp &outer, const LinearMap &alpha);
TripleTable nested_right(const BilinearOp &inner, const BilinearOp &outer, const LinearMap &alpha);

/// Swaps the first two slots: out[i][j][k] = t[j][i][k].
TripleTable swap_first_two(const TripleTable &t);

/// Transposed product: out(i,j) = op(j,i).
BilinearOp opposite(const BilinearOp &op);

} // namespace hrz
