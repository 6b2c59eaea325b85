#include "hrz/exactlin.hpp"

#include <cctype>
#include <utility>

#include "hrz/errors.hpp"

namespace hrz {

namespace {

bool valid_integer(std::string_view s)
{
	if (!s.empty() && (s.front() == '-' || s.front() == '+'))
		s.remove_prefix(1);
	if (s.empty())
		return false;
	for (char c : s)
		if (!std::isdigit(static_cast<unsigned char>(c)))
			return false;
	return true;
}

void require_same_shape(const Matrix &a, const Matrix &b, const char *what)
{
	if (a.rows() != b.rows() || a.cols() != b.cols())
		throw DimensionMismatch(std::string(what) + ": shape mismatch");
}

} // namespace

Rational parse_rational(std::string_view text)
{
	auto slash = text.find('/');
	std::string_view num = text.substr(0, slash);
	std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
	if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
		throw ParseError("invalid rational '" + std::string(text) + "'");
	std::string n(num);
	if (n.front() == '+')
		n.erase(0, 1);
	mpz_class p(n, 10), q(std::string(den), 10);
	if (q == 0)
		throw ParseError("zero denominator in '" + std::string(text) + "'");
	Rational r(p, q);
	r.canonicalize();
	return r;
}

std::string to_string(const Rational &q)
{
	if (q.get_den() == 1)
		return q.get_num().get_str();
	return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i)
{
	Vector v(n, Rational(0));
	v.at(i) = 1;
	return v;
}

bool is_zero(const Vector &v)
{
	for (const auto &x : v)
		if (x != 0)
			return false;
	return true;
}

Vector operator+(const Vector &a, const Vector &b)
{
	Vector r = a;
	r += b;
	return r;
}

Vector &operator+=(Vector &a, const Vector &b)
{
	if (a.size() != b.size())
		throw DimensionMismatch("vector add: length mismatch");
	for (std::size_t i = 0; i < a.size(); ++i)
		a[i] += b[i];
	return a;
}

Vector operator-(const Vector &a, const Vector &b)
{
	if (a.size() != b.size())
		throw DimensionMismatch("vector subtract: length mismatch");
	Vector r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = a[i] - b[i];
	return r;
}

Vector operator-(const Vector &a)
{
	Vector r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = -a[i];
	return r;
}

Vector operator*(const Rational &s, const Vector &v)
{
	Vector r(v.size());
	for (std::size_t i = 0; i < v.size(); ++i)
		r[i] = s * v[i];
	return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0))
{
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
	if (data_.size() != rows * cols)
		throw DimensionMismatch("matrix: entry count does not match shape");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
	rows_ = rows.size();
	cols_ = rows_ == 0 ? 0 : rows.begin()->size();
	data_.reserve(rows_ * cols_);
	for (const auto &r : rows) {
		if (r.size() != cols_)
			throw DimensionMismatch("matrix: ragged initializer");
		data_.insert(data_.end(), r.begin(), r.end());
	}
}

Matrix Matrix::identity(std::size_t n)
{
	Matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

Matrix Matrix::from_rows(const std::vector<Vector> &rows, std::size_t cols)
{
	Matrix m(rows.size(), cols);
	for (std::size_t r = 0; r < rows.size(); ++r) {
		if (rows[r].size() != cols)
			throw DimensionMismatch("from_rows: row length mismatch");
		for (std::size_t c = 0; c < cols; ++c)
			m(r, c) = rows[r][c];
	}
	return m;
}

Matrix Matrix::from_columns(const std::vector<Vector> &cols, std::size_t rows)
{
	Matrix m(rows, cols.size());
	for (std::size_t c = 0; c < cols.size(); ++c) {
		if (cols[c].size() != rows)
			throw DimensionMismatch("from_columns: column length mismatch");
		for (std::size_t r = 0; r < rows; ++r)
			m(r, c) = cols[c][r];
	}
	return m;
}

Vector Matrix::row(std::size_t r) const
{
	return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
	              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
	Vector v(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		v[r] = (*this)(r, c);
	return v;
}

Matrix Matrix::transpose() const
{
	Matrix t(cols_, rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			t(c, r) = (*this)(r, c);
	return t;
}

bool Matrix::is_zero() const
{
	for (const auto &x : data_)
		if (x != 0)
			return false;
	return true;
}

Matrix operator+(const Matrix &a, const Matrix &b)
{
	require_same_shape(a, b, "matrix add");
	Matrix r = a;
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t j = 0; j < a.cols(); ++j)
			r(i, j) += b(i, j);
	return r;
}

Matrix operator-(const Matrix &a, const Matrix &b)
{
	require_same_shape(a, b, "matrix subtract");
	Matrix r = a;
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t j = 0; j < a.cols(); ++j)
			r(i, j) -= b(i, j);
	return r;
}

Matrix operator*(const Matrix &a, const Matrix &b)
{
	if (a.cols() != b.rows())
		throw DimensionMismatch("matrix multiply: inner dimension mismatch");
	Matrix r(a.rows(), b.cols());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t k = 0; k < a.cols(); ++k) {
			if (a(i, k) == 0)
				continue;
			for (std::size_t j = 0; j < b.cols(); ++j)
				r(i, j) += a(i, k) * b(k, j);
		}
	return r;
}

Matrix operator*(const Rational &s, const Matrix &m)
{
	Matrix r = m;
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
			r(i, j) *= s;
	return r;
}

Vector operator*(const Matrix &m, const Vector &v)
{
	if (m.cols() != v.size())
		throw DimensionMismatch("matrix-vector multiply: length mismatch");
	Vector r(m.rows(), Rational(0));
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
			if (v[j] != 0)
				r[i] += m(i, j) * v[j];
	return r;
}

RrefResult rref(const Matrix &m)
{
	RrefResult out;
	out.matrix = m;
	Matrix &a = out.matrix;
	std::size_t lead = 0;
	for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
		std::size_t piv = lead;
		while (piv < a.rows() && a(piv, col) == 0)
			++piv;
		if (piv == a.rows())
			continue;
		if (piv != lead)
			for (std::size_t c = 0; c < a.cols(); ++c)
				std::swap(a(piv, c), a(lead, c));
		Rational inv = 1 / a(lead, col);
		for (std::size_t c = col; c < a.cols(); ++c)
			a(lead, c) *= inv;
		for (std::size_t r = 0; r < a.rows(); ++r) {
			if (r == lead || a(r, col) == 0)
				continue;
			Rational f = a(r, col);
			for (std::size_t c = col; c < a.cols(); ++c)
				a(r, c) -= f * a(lead, c);
		}
		out.pivots.push_back(col);
		++lead;
	}
	out.rank = lead;
	return out;
}

std::size_t rank(const Matrix &m) { return rref(m).rank; }

std::vector<Vector> nullspace_basis(const Matrix &m)
{
	auto red = rref(m);
	std::vector<bool> is_pivot(m.cols(), false);
	for (auto p : red.pivots)
		is_pivot[p] = true;
	std::vector<Vector> basis;
	for (std::size_t free = 0; free < m.cols(); ++free) {
		if (is_pivot[free])
			continue;
		Vector v = zero_vector(m.cols());
		v[free] = 1;
		for (std::size_t r = 0; r < red.rank; ++r)
			v[red.pivots[r]] = -red.matrix(r, free);
		basis.push_back(std::move(v));
	}
	return basis;
}

Matrix invert(const Matrix &m)
{
	if (!m.square())
		throw DimensionMismatch("invert: matrix is not square");
	const std::size_t n = m.rows();
	Matrix aug(n, 2 * n);
	for (std::size_t i = 0; i < n; ++i) {
		for (std::size_t j = 0; j < n; ++j)
			aug(i, j) = m(i, j);
		aug(i, n + i) = 1;
	}
	auto red = rref(aug);
	if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1))
		throw Singular("invert: matrix is singular");
	Matrix inv(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			inv(i, j) = red.matrix(i, n + j);
	return inv;
}

Rational determinant(const Matrix &m)
{
	if (!m.square())
		throw DimensionMismatch("determinant: matrix is not square");
	Matrix a = m;
	const std::size_t n = a.rows();
	Rational det = 1;
	for (std::size_t col = 0; col < n; ++col) {
		std::size_t piv = col;
		while (piv < n && a(piv, col) == 0)
			++piv;
		if (piv == n)
			return 0;
		if (piv != col) {
			for (std::size_t c = 0; c < n; ++c)
				std::swap(a(piv, c), a(col, c));
			det = -det;
		}
		det *= a(col, col);
		for (std::size_t r = col + 1; r < n; ++r) {
			if (a(r, col) == 0)
				continue;
			Rational f = a(r, col) / a(col, col);
			for (std::size_t c = col; c < n; ++c)
				a(r, c) -= f * a(col, c);
		}
	}
	return det;
}

} // namespace hrz
