#pragma once

// Subspace arithmetic and nilpotency series of Hom-algebras.

#include <cstddef>
#include <optional>
#include <vector>

#include "hrz/algebra.hpp"
#include "hrz/report.hpp"

namespace hrz {

/// A subspace of Q^n stored as a reduced row echelon basis without zero
/// rows, so two subspaces are equal exactly when their bases are.
class Subspace {
public:
	Subspace() = default;
	static Subspace zero(std::size_t n);
	static Subspace whole(std::size_t n);
	static Subspace span(const std::vector<Vector> &vectors, std::size_t n);

	std::size_t ambient_dim() const noexcept { return n_; }
	std::size_t dim() const noexcept { return basis_.rows(); }
	bool is_zero() const noexcept { return dim() == 0; }
	const Matrix &basis() const noexcept { return basis_; }
	std::vector<Vector> vectors() const;

	bool contains(const Vector &v) const;
	bool contains(const Subspace &other) const;

	friend Subspace operator+(const Subspace &a, const Subspace &b);
	friend bool operator==(const Subspace &a, const Subspace &b)
	{
		return a.n_ == b.n_ && a.basis_ == b.basis_;
	}

private:
	std::size_t n_ = 0;
	Matrix basis_;
};

/// Span of every product of the algebra applied to (basis of m, basis of n).
/// For a two-product algebra that is m > n + m < n.
Subspace diamond(const Subspace &m, const Subspace &n, const HomAlgebra &a);

enum class SeriesKind {
	Right, ///< A<k+1> = A<k> o A
	Left,  ///< A{{k+1}} = A o A{{k}}
	Full   ///< A^{k+1} = sum over i of A^i o A^{k+1-i}
};

/// Terms A^1 = A, A^2, ... until a zero term or stabilization. When the
/// series stabilizes the repeated term is included once more, so the last
/// two entries are equal.
std::vector<Subspace> series(const HomAlgebra &a, SeriesKind kind);
std::vector<Subspace> right_series(const HomAlgebra &a);
std::vector<Subspace> left_series(const HomAlgebra &a);
std::vector<Subspace> full_series(const HomAlgebra &a);

/// Exactly `length` terms, continuing past zero or stabilization.
std::vector<Subspace> series_prefix(const HomAlgebra &a, SeriesKind kind, std::size_t length);

struct NilpotencyResult {
	bool nilpotent = false;
	/// Smallest k with A^k = 0.
	std::optional<std::size_t> index;
};

NilpotencyResult is_nilpotent(const HomAlgebra &a);
NilpotencyResult is_right_nilpotent(const HomAlgebra &a);
NilpotencyResult is_left_nilpotent(const HomAlgebra &a);

/// The algebra with only the named product kept, as a mono algebra.
HomAlgebra single_product_algebra(const HomAlgebra &a, const std::string &product);

/// Id "series_eq": right, left and full series compared term by term; the
/// tuple holds the (0-based) term index.
CheckReport check_series_equality(const HomAlgebra &a);

/// Id "inclusion": A<g> o A<h> inside A<g+h> for 1 <= g, h <= max_power.
CheckReport check_lemma_inclusions(const HomAlgebra &a, std::size_t max_power = 4);

/// Ids "nil2_left_<p>_<q>" for (x p y) q alpha(z) and "nil2_right_<p>_<q>"
/// for alpha(x) q (y p z), over every pair of products.
CheckReport check_2_nilpotent(const HomAlgebra &a);

/// Id "onesided": nilpotent iff both single-product algebras are.
CheckReport check_onesided_nilpotency_theorem(const HomAlgebra &a);

/// Id "alpha_invariant": alpha(A^k) inside A^k for every term of the full
/// series. Only evaluated when every product is multiplicative; otherwise
/// the report carries a note and no violations.
CheckReport check_alpha_invariance(const HomAlgebra &a);

Json series_to_json(const std::vector<Subspace> &s);
Json nilpotency_to_json(const NilpotencyResult &r);

} // namespace hrz
