#pragma once

// Bimodules over Hom-anti-associative algebras, O-operators, Rota-Baxter
// operators of weight zero, and the rhizaform structures they induce.

#include <cstddef>
#include <vector>

#include "hrz/algebra.hpp"
#include "hrz/report.hpp"

namespace hrz {

/// Left/right actions of an n-dimensional algebra on an m-dimensional
/// space. left[i] is the m x m matrix of l(e_i); beta is m x m.
struct Bimodule {
	std::size_t alg_dim = 0;
	std::size_t mod_dim = 0;
	std::vector<Matrix> left;
	std::vector<Matrix> right;
	Matrix beta;

	/// l(x) for an arbitrary algebra vector x, by linearity.
	Matrix left_of(const Vector &x) const;
	Matrix right_of(const Vector &x) const;

	friend bool operator==(const Bimodule &, const Bimodule &) = default;
};

/// Throws DimensionMismatch on inconsistent shapes.
void validate(const Bimodule &m);

/// A linear map between spaces of possibly different dimension; the
/// matrix is target x source, column u is the image of basis vector u.
struct LinearOperator {
	Matrix matrix;

	std::size_t source_dim() const noexcept { return matrix.cols(); }
	std::size_t target_dim() const noexcept { return matrix.rows(); }
	Vector apply(const Vector &v) const { return matrix * v; }

	friend bool operator==(const LinearOperator &, const LinearOperator &) = default;
};

struct ConstructionOptions {
	/// Verify hypotheses before building; throw PreconditionFailed subtypes
	/// when they fail.
	bool strict = true;
};

/// Ids "bm1" .. "bm5"; tuples are (a, b, u) or (a, u) with u a module
/// basis index and the residual the corresponding column.
CheckReport check_bimodule(const HomAlgebra &a, const Bimodule &m);

/// l(x)(y) = x * y, r(x)(y) = y * x, beta = alpha.
Bimodule regular_bimodule(const HomAlgebra &a);
/// l(x)(y) = x > y, r(x)(y) = y < x, beta = alpha.
Bimodule rhizaform_bimodule(const HomAlgebra &a);
/// Actions swapped and transposed, beta transposed.
Bimodule dual_bimodule(const Bimodule &m);

/// Ids "oop_comm" (T beta = alpha T) and "oop" (the O-operator identity).
CheckReport check_o_operator(const LinearOperator &t, const HomAlgebra &a, const Bimodule &m);
/// Ids "rb_comm" and "rb".
CheckReport check_rota_baxter(const LinearOperator &r, const HomAlgebra &a);

/// u > v = L(T u) v, u < v = R(T v) u on the module, structure map beta.
HomAlgebra induced_rhizaform_from_o_operator(const LinearOperator &t, const HomAlgebra &a, const Bimodule &m,
                                             ConstructionOptions opts = {});
/// x > y = R(x) * y, x < y = x * R(y).
HomAlgebra induced_rhizaform_from_rb(const LinearOperator &r, const HomAlgebra &a, ConstructionOptions opts = {});

/// Ids "hom_alpha" and "hom_<product>" for every product of a1 (which a2
/// must also carry).
CheckReport check_homomorphism(const LinearOperator &f, const HomAlgebra &a1, const HomAlgebra &a2);

/// Transports the rhizaform structure induced on the module back to the
/// algebra through an invertible T. Throws Singular when T is not
/// invertible.
HomAlgebra compatible_from_invertible_o_operator(const LinearOperator &t, const HomAlgebra &a, const Bimodule &m,
                                                 ConstructionOptions opts = {});

} // namespace hrz
