#pragma once

// Seeded fixture generators shared by the unit tests and the acceptance
// runner. Everything here is deterministic for a given seed.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "hrz/algebra.hpp"
#include "hrz/family.hpp"
#include "hrz/operators.hpp"

namespace hrz::fixtures {

using Rng = std::mt19937_64;

/// How a random tensor is shaped.
enum class Shape {
	Dense,      ///< any coefficient may be nonzero
	Sparse,     ///< about one coefficient in six is nonzero
	Triangular, ///< e_i e_j only reaches e_k with k > max(i, j)
};

enum class AlphaKind { Identity, Zero, Random };

BilinearOp random_op(std::size_t n, Shape shape, Rng &rng);
LinearMap random_alpha(std::size_t n, AlphaKind kind, Rng &rng);

/// A single-product algebra with coefficients in {-1, 0, 1}.
HomAlgebra random_mono(std::size_t n, Rng &rng);
/// A two-product algebra with coefficients in {-1, 0, 1}; shape and
/// structure map vary with the draw.
HomAlgebra random_rhizaform(std::size_t n, Rng &rng);

/// Every matrix with entries in `values`, in lexicographic order.
std::vector<Matrix> matrix_grid(std::size_t n, const std::vector<Rational> &values);

/// {-1, -1/2, 0, 1/2, 1}.
std::vector<Rational> half_grid();

/// Sum algebras of the two-dimensional catalog entries that pass the
/// rhizaform check.
std::vector<HomAlgebra> passing_d2_sums();

/// Every (algebra, R) with R from the half grid that passes the
/// Rota-Baxter check, over passing_d2_sums().
std::vector<std::pair<HomAlgebra, LinearOperator>> rb_grid_fixtures();

/// Algebras with e_i e_j in span{e_n} for i, j < n and e_n annihilating
/// everything, alpha = id. Such algebras are anti-associative.
std::vector<HomAlgebra> two_step_fixtures(std::size_t count, std::uint64_t seed);

/// Rhizaform algebras with prec = -succ found by seeded search.
std::vector<HomAlgebra> negated_prec_fixtures(std::size_t count, std::uint64_t seed);

/// Rota-Baxter families over Z/2 with entries in {-1, 0, 1} that pass
/// check_rb_family, with R_1 != R_0 and at least one of them nonzero.
/// At most `per_algebra` per source algebra.
std::vector<std::pair<HomAlgebra, RBFamily>> rb_family_fixtures(std::size_t per_algebra);

/// Random family algebra over `omega` with entries in {-1, 0, 1}.
FamilyAlgebra random_family(std::size_t n, const Semigroup &omega, AlphaKind alpha, Rng &rng);

/// Bimodule with random actions on an m-dimensional space.
Bimodule random_bimodule(std::size_t n, std::size_t m, Rng &rng);

/// Random n x m operator with entries in {-1, 0, 1}.
LinearOperator random_operator(std::size_t rows, std::size_t cols, Shape shape, Rng &rng);

} // namespace hrz::fixtures
