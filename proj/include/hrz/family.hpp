#pragma once

// Structures indexed by a finite semigroup: rhizaform and anti-associative
// family algebras, Rota-Baxter families, and the collapse onto A (x) K[Omega].

#include <cstddef>
#include <utility>
#include <vector>

#include "hrz/algebra.hpp"
#include "hrz/operators.hpp"
#include "hrz/report.hpp"

namespace hrz {

/// table[l][w] = l . w, elements are 0 .. size-1.
struct Semigroup {
	std::size_t size = 0;
	std::vector<std::vector<std::size_t>> table;

	std::size_t mul(std::size_t l, std::size_t w) const { return table[l][w]; }
	static Semigroup trivial() { return {1, {{0}}}; }
	/// Addition modulo m.
	static Semigroup cyclic(std::size_t m);

	friend bool operator==(const Semigroup &, const Semigroup &) = default;
};

/// Ids "range" and "assoc" (labels are the offending elements). Residuals
/// are empty; the detail names the two sides.
CheckReport check_semigroup(const Semigroup &s);

struct FamilyAlgebra {
	std::size_t dim = 0;
	Semigroup omega;
	std::vector<BilinearOp> succ; ///< one per element
	std::vector<BilinearOp> prec;
	LinearMap alpha;

	friend bool operator==(const FamilyAlgebra &, const FamilyAlgebra &) = default;
};

void validate(const FamilyAlgebra &f);

/// Products *_{l,w} for every ordered pair of elements.
struct FamilyProducts {
	Semigroup omega;
	std::vector<BilinearOp> ops; ///< index l * size + w

	const BilinearOp &at(std::size_t l, std::size_t w) const { return ops[l * omega.size + w]; }
	BilinearOp &at(std::size_t l, std::size_t w) { return ops[l * omega.size + w]; }

	friend bool operator==(const FamilyProducts &, const FamilyProducts &) = default;
};

struct RBFamily {
	Semigroup omega;
	std::vector<LinearOperator> ops; ///< R_l, each n x n

	friend bool operator==(const RBFamily &, const RBFamily &) = default;
};

/// Ids "fmult_succ", "fmult_prec" (labels (l)), and "f1", "f2", "f3"
/// (labels (l, w)) over every basis triple:
///   f1: (x <_l y) <_w a(z) + a(x) <_{lw} (y <_w z + y >_l z)
///   f2: (x >_l y) <_w a(z) + a(x) >_l (y <_w z)
///   f3: (x <_w y + x >_l y) >_{lw} a(z) + a(x) >_l (y >_w z)
CheckReport check_rhizaform_family(const FamilyAlgebra &f);

/// Id "fanti_assoc", labels (l, w, g):
///   (x *_{l,w} y) *_{lw,g} a(z) + a(x) *_{l,wg} (y *_{w,g} z)
CheckReport check_anti_associative_family(const FamilyProducts &p, const LinearMap &alpha);

/// *_{l,w} = <_w + >_l.
FamilyProducts associated_family(const FamilyAlgebra &f);

/// Ids "frb_comm" (labels (l)) and "frb" (labels (l, w)).
CheckReport check_rb_family(const RBFamily &rf, const HomAlgebra &a);

/// x <_l y = x * R_l(y), x >_l y = R_l(x) * y. Strict mode requires a
/// Hom-anti-associative algebra and a passing Rota-Baxter family.
FamilyAlgebra induced_family_rhizaform(const RBFamily &rf, const HomAlgebra &a, ConstructionOptions opts = {});

/// The algebra on A (x) K[Omega] with basis e_i (x) l at index i * s + l,
/// product (a (x) l)(b (x) w) = ab (x) lw, structure map alpha (x) id, and
/// the operator x (x) l -> R_l(x) (x) l.
std::pair<HomAlgebra, LinearOperator> tensor_collapse(const HomAlgebra &a, const RBFamily &rf);

/// Single-element family carrying the products of a two-product algebra.
FamilyAlgebra as_trivial_family(const HomAlgebra &a);

} // namespace hrz
