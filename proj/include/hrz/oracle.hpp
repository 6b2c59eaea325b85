#pragma once

// Brute-force reference evaluator. Every identity is re-evaluated from
// eval() on basis vectors and explicit structure-map applications, with
// no shared tables; verdicts are the sets of failing identity ids, named
// exactly as in the main checkers.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hrz/algebra.hpp"
#include "hrz/family.hpp"
#include "hrz/operators.hpp"
#include "hrz/report.hpp"

namespace hrz::oracle {

using Failures = std::set<std::string>;

Failures anti_associative(const BilinearOp &mul, const LinearMap &alpha);
Failures multiplicativity(const BilinearOp &op, const LinearMap &alpha, const std::string &id = "mult");
Failures rhizaform(const HomAlgebra &a);
Failures dendriform(const HomAlgebra &a);
Failures jacobi_jordan(const BilinearOp &mul, const LinearMap &alpha);
Failures pre_jacobi_jordan(const BilinearOp &mul, const LinearMap &alpha);
Failures alpha_derivation(const LinearMap &d, const HomAlgebra &a, const std::string &product);

Failures bimodule(const HomAlgebra &a, const Bimodule &m);
Failures o_operator(const LinearOperator &t, const HomAlgebra &a, const Bimodule &m);
Failures rota_baxter(const LinearOperator &r, const HomAlgebra &a);
Failures homomorphism(const LinearOperator &f, const HomAlgebra &a1, const HomAlgebra &a2);

Failures two_nilpotent(const HomAlgebra &a);

Failures rhizaform_family(const FamilyAlgebra &f);
Failures anti_associative_family(const FamilyProducts &p, const LinearMap &alpha);
Failures rb_family(const RBFamily &rf, const HomAlgebra &a);
/// The family axioms with every structure map removed (no multiplicativity
/// conditions); ids "f1", "f2", "f3".
Failures plain_rhizaform_family(const FamilyAlgebra &f);

/// Whether the scalar form (matrix B(e_i, e_j)) satisfies the cocycle
/// conditions; ids "cocycle" and "invariance".
Failures scalar_cocycle(const HomAlgebra &a, const Matrix &b);

/// Dimension of each cocycle space, from the defining conditions applied
/// to every elementary form.
std::size_t scalar_cocycle_dimension(const HomAlgebra &a);
std::size_t vector_cocycle_dimension(const HomAlgebra &a);

/// Smallest k with A^k = 0 for the full, right and left series, computed
/// from spanning sets of iterated products.
struct NilpotencyVerdict {
	std::optional<std::size_t> full;
	std::optional<std::size_t> right;
	std::optional<std::size_t> left;
};
NilpotencyVerdict nilpotency(const HomAlgebra &a);

/// Rank by fraction-free elimination, independent of exactlin.
std::size_t rank_of(const std::vector<Vector> &rows);

/// True when a checker report fails exactly the identities in `expected`.
bool agrees(const CheckReport &report, const Failures &expected);

} // namespace hrz::oracle
