#pragma once

// Exact rational linear algebra over Q. Everything here is value-typed and
// immutable once built; nothing touches floating point.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hrz {

/// Arbitrary precision rational; always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading sign). Decimal notation, empty
/// strings and zero denominators are rejected with ParseError.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational &q);

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector &v);
Vector operator+(const Vector &a, const Vector &b);
Vector operator-(const Vector &a, const Vector &b);
Vector operator-(const Vector &a);
Vector operator*(const Rational &s, const Vector &v);
Vector &operator+=(Vector &a, const Vector &b);

/// Dense row-major matrix of rationals.
class Matrix {
public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols);
	Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
	Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

	static Matrix identity(std::size_t n);
	static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
	/// Matrix whose rows are the given vectors (all the same length).
	static Matrix from_rows(const std::vector<Vector> &rows, std::size_t cols);
	/// Matrix whose columns are the given vectors.
	static Matrix from_columns(const std::vector<Vector> &cols, std::size_t rows);

	std::size_t rows() const noexcept { return rows_; }
	std::size_t cols() const noexcept { return cols_; }
	bool square() const noexcept { return rows_ == cols_; }

	const Rational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
	Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

	const std::vector<Rational> &entries() const noexcept { return data_; }
	Vector row(std::size_t r) const;
	Vector column(std::size_t c) const;

	Matrix transpose() const;
	bool is_zero() const;

	friend bool operator==(const Matrix &a, const Matrix &b)
	{
		return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
	}

private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<Rational> data_;
};

Matrix operator+(const Matrix &a, const Matrix &b);
Matrix operator-(const Matrix &a, const Matrix &b);
Matrix operator*(const Matrix &a, const Matrix &b);
Matrix operator*(const Rational &s, const Matrix &m);
Vector operator*(const Matrix &m, const Vector &v);

struct RrefResult {
	Matrix matrix;
	std::size_t rank = 0;
	std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
};

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry
/// scanning columns left to right, so output is deterministic.
RrefResult rref(const Matrix &m);
std::size_t rank(const Matrix &m);

/// Basis of {v : m v = 0}, one vector per free column, in free-column
/// order. Each basis vector has a 1 in its free column.
std::vector<Vector> nullspace_basis(const Matrix &m);

/// Throws Singular if m is not invertible, DimensionMismatch if not square.
Matrix invert(const Matrix &m);
Rational determinant(const Matrix &m);

} // namespace hrz
