#pragma once

// Connes-cocycle spaces of a Hom-anti-associative algebra (A, *, alpha),
// in two readings: scalar-valued bilinear forms and algebra-valued ones.

#include <cstddef>
#include <vector>

#include "hrz/algebra.hpp"
#include "hrz/operators.hpp"
#include "hrz/report.hpp"

namespace hrz {

/// B(e_i, e_j) = matrix(i, j).
struct ScalarForm {
	Matrix matrix;
	std::size_t dim() const noexcept { return matrix.rows(); }
	Rational operator()(const Vector &x, const Vector &y) const;
	friend bool operator==(const ScalarForm &, const ScalarForm &) = default;
};

/// omega(e_i, e_j) = sum_k coeffs(i, j, k) e_k; stored as a BilinearOp.
struct VectorForm {
	BilinearOp coeffs;
	std::size_t dim() const noexcept { return coeffs.dim(); }
	friend bool operator==(const VectorForm &, const VectorForm &) = default;
};

/// Basis of scalar forms with
///   B(a*b, alpha c) + B(b*c, alpha a) + B(c*a, alpha b) = 0 and
///   B(alpha x, alpha y) = B(x, y).
/// In strict mode the algebra must be Hom-anti-associative.
std::vector<ScalarForm> scalar_cocycle_space(const HomAlgebra &a, ConstructionOptions opts = {});

/// Basis of algebra-valued forms with
///   w(e_i*e_j, alpha e_k) + w(e_j*e_k, alpha e_i) + w(e_k*e_i, alpha e_j) = 0
///   and alpha(w(x, y)) = w(alpha x, alpha y).
std::vector<VectorForm> vector_cocycle_space(const HomAlgebra &a);

/// The stacked linear systems themselves, rows in lexicographic (i,j,k)
/// order followed by the invariance rows. Unknown (i,j) of the scalar
/// system has column i*n+j; unknown (i,j,k) of the vector one (i*n+j)*n+k.
Matrix scalar_cocycle_system(const HomAlgebra &a);
Matrix vector_cocycle_system(const HomAlgebra &a);

bool is_nondegenerate(const ScalarForm &b);

/// Ids "cocycle" (tuple (a, b, c)) and "invariance" (tuple (a, b)); the
/// residuals are one-entry vectors.
CheckReport check_scalar_cocycle(const HomAlgebra &a, const ScalarForm &b);

/// x > y and x < y defined through B(x > y, z) = B(y, z * x) and
/// B(x < y, z) = B(x, y * z). Throws Singular for degenerate B and, in
/// strict mode, NotACocycle if B is not in the scalar cocycle space.
HomAlgebra rhizaform_from_cocycle(const HomAlgebra &a, const ScalarForm &b, ConstructionOptions opts = {});

/// Nonzero omega(e_i, e_j) components of each basis form, 1-based.
Json cocycle_basis_to_json(const std::vector<VectorForm> &basis);
Json scalar_basis_to_json(const std::vector<ScalarForm> &basis);

} // namespace hrz
