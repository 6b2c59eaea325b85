#include "hrz/nilpotency.hpp"

#include "hrz/axioms.hpp"
#include "hrz/errors.hpp"

namespace hrz {

Subspace Subspace::zero(std::size_t n)
{
	Subspace s;
	s.n_ = n;
	s.basis_ = Matrix(0, n);
	return s;
}

Subspace Subspace::whole(std::size_t n)
{
	Subspace s;
	s.n_ = n;
	s.basis_ = Matrix::identity(n);
	return s;
}

Subspace Subspace::span(const std::vector<Vector> &vectors, std::size_t n)
{
	for (const auto &v : vectors)
		if (v.size() != n)
			throw DimensionMismatch("Subspace::span: vector has wrong length");
	if (vectors.empty())
		return zero(n);
	const auto r = rref(Matrix::from_rows(vectors, n));
	std::vector<Vector> rows;
	for (std::size_t i = 0; i < r.rank; ++i)
		rows.push_back(r.matrix.row(i));
	Subspace s;
	s.n_ = n;
	s.basis_ = rows.empty() ? Matrix(0, n) : Matrix::from_rows(rows, n);
	return s;
}

std::vector<Vector> Subspace::vectors() const
{
	std::vector<Vector> out;
	for (std::size_t i = 0; i < dim(); ++i)
		out.push_back(basis_.row(i));
	return out;
}

bool Subspace::contains(const Vector &v) const
{
	if (v.size() != n_)
		throw DimensionMismatch("Subspace::contains: vector has wrong length");
	auto rows = vectors();
	rows.push_back(v);
	return rank(Matrix::from_rows(rows, n_)) == dim();
}

bool Subspace::contains(const Subspace &other) const
{
	if (other.n_ != n_)
		throw DimensionMismatch("Subspace::contains: ambient dimensions differ");
	return (*this + other).dim() == dim();
}

Subspace operator+(const Subspace &a, const Subspace &b)
{
	if (a.n_ != b.n_)
		throw DimensionMismatch("Subspace sum: ambient dimensions differ");
	auto rows = a.vectors();
	for (auto &v : b.vectors())
		rows.push_back(std::move(v));
	return Subspace::span(rows, a.n_);
}

Subspace diamond(const Subspace &m, const Subspace &n, const HomAlgebra &a)
{
	if (m.ambient_dim() != a.dim || n.ambient_dim() != a.dim)
		throw DimensionMismatch("diamond: subspace ambient dimension differs from algebra");
	std::vector<Vector> out;
	const auto mv = m.vectors();
	const auto nv = n.vectors();
	for (const auto &[name, op] : a.products)
		for (const auto &x : mv)
			for (const auto &y : nv) {
				auto v = eval(op, x, y);
				if (!is_zero(v))
					out.push_back(std::move(v));
			}
	return Subspace::span(out, a.dim);
}

namespace {

Subspace next_term(const HomAlgebra &a, SeriesKind kind, const std::vector<Subspace> &terms)
{
	const auto &whole = terms.front();
	switch (kind) {
	case SeriesKind::Right:
		return diamond(terms.back(), whole, a);
	case SeriesKind::Left:
		return diamond(whole, terms.back(), a);
	case SeriesKind::Full: {
		// terms holds A^1 .. A^k; A^{k+1} = sum_{i=1..k} A^i o A^{k+1-i}.
		const auto k = terms.size();
		Subspace acc = Subspace::zero(a.dim);
		for (std::size_t i = 1; i <= k; ++i)
			acc = acc + diamond(terms[i - 1], terms[k - i], a);
		return acc;
	}
	}
	return Subspace::zero(a.dim);
}

/// A repeated full-series term W is stable once W lies in A o W + W o A:
/// every later term then contains W and is contained in it.
bool full_repeat_is_stable(const HomAlgebra &a, const Subspace &whole, const Subspace &w)
{
	return (diamond(whole, w, a) + diamond(w, whole, a)).contains(w);
}

/// Hard bound for the full series when a repeat cannot be certified.
std::size_t full_cap(std::size_t n) { return 4 * n + 4; }

} // namespace

std::vector<Subspace> series_prefix(const HomAlgebra &a, SeriesKind kind, std::size_t length)
{
	validate(a);
	std::vector<Subspace> terms;
	if (length == 0)
		return terms;
	terms.push_back(Subspace::whole(a.dim));
	while (terms.size() < length)
		terms.push_back(next_term(a, kind, terms));
	return terms;
}

std::vector<Subspace> series(const HomAlgebra &a, SeriesKind kind)
{
	validate(a);
	std::vector<Subspace> terms{Subspace::whole(a.dim)};
	const std::size_t cap = kind == SeriesKind::Full ? full_cap(a.dim) : a.dim + 2;
	while (terms.size() < cap) {
		if (terms.back().is_zero())
			break;
		auto next = next_term(a, kind, terms);
		const bool repeat = next == terms.back();
		terms.push_back(std::move(next));
		if (repeat && (kind != SeriesKind::Full || full_repeat_is_stable(a, terms.front(), terms.back())))
			break;
	}
	return terms;
}

std::vector<Subspace> right_series(const HomAlgebra &a) { return series(a, SeriesKind::Right); }
std::vector<Subspace> left_series(const HomAlgebra &a) { return series(a, SeriesKind::Left); }
std::vector<Subspace> full_series(const HomAlgebra &a) { return series(a, SeriesKind::Full); }

namespace {

NilpotencyResult from_series(const std::vector<Subspace> &s)
{
	if (s.back().is_zero())
		return {true, s.size()};
	return {false, std::nullopt};
}

} // namespace

NilpotencyResult is_nilpotent(const HomAlgebra &a) { return from_series(full_series(a)); }
NilpotencyResult is_right_nilpotent(const HomAlgebra &a) { return from_series(right_series(a)); }
NilpotencyResult is_left_nilpotent(const HomAlgebra &a) { return from_series(left_series(a)); }

HomAlgebra single_product_algebra(const HomAlgebra &a, const std::string &product)
{
	return make_mono(a.product(product), a.alpha);
}

CheckReport check_series_equality(const HomAlgebra &a)
{
	CheckReport rep("series_equality");
	rep.note("left series uses A{k+1} = A o A{k}");
	std::size_t len = 0;
	for (auto kind : {SeriesKind::Right, SeriesKind::Left, SeriesKind::Full})
		len = std::max(len, series(a, kind).size());
	const auto r = series_prefix(a, SeriesKind::Right, len);
	const auto l = series_prefix(a, SeriesKind::Left, len);
	const auto f = series_prefix(a, SeriesKind::Full, len);
	for (std::size_t g = 0; g < len; ++g) {
		if (r[g] == l[g] && l[g] == f[g])
			continue;
		Violation v;
		v.identity = "series_eq";
		v.basis = {g};
		v.detail = "term " + std::to_string(g + 1) + ": dims right=" + std::to_string(r[g].dim()) +
		           " left=" + std::to_string(l[g].dim()) + " full=" + std::to_string(f[g].dim());
		rep.add(std::move(v));
	}
	return rep;
}

CheckReport check_lemma_inclusions(const HomAlgebra &a, std::size_t max_power)
{
	CheckReport rep("lemma_inclusions");
	const auto r = series_prefix(a, SeriesKind::Right, 2 * max_power);
	for (std::size_t g = 1; g <= max_power; ++g)
		for (std::size_t h = 1; h <= max_power; ++h) {
			const auto d = diamond(r[g - 1], r[h - 1], a);
			if (r[g + h - 1].contains(d))
				continue;
			Violation v;
			v.identity = "inclusion";
			v.basis = {g - 1, h - 1};
			v.detail = "A<" + std::to_string(g) + "> o A<" + std::to_string(h) + "> not inside A<" +
			           std::to_string(g + h) + ">";
			rep.add(std::move(v));
		}
	return rep;
}

CheckReport check_2_nilpotent(const HomAlgebra &a)
{
	validate(a);
	CheckReport rep("two_nilpotent");
	const auto n = a.dim;
	for (const auto &[p, inner] : a.products)
		for (const auto &[q, outer] : a.products) {
			const auto left = nested_left(inner, outer, a.alpha);
			const auto right = nested_right(inner, outer, a.alpha);
			for (std::size_t i = 0; i < n; ++i)
				for (std::size_t j = 0; j < n; ++j)
					for (std::size_t k = 0; k < n; ++k) {
						rep.expect_zero("nil2_left_" + p + "_" + q, {i, j, k}, left.residual(i, j, k));
						rep.expect_zero("nil2_right_" + p + "_" + q, {i, j, k}, right.residual(i, j, k));
					}
		}
	return rep;
}

CheckReport check_onesided_nilpotency_theorem(const HomAlgebra &a)
{
	validate(a);
	CheckReport rep("onesided_nilpotency");
	const auto full = is_nilpotent(a);
	bool all_parts = true;
	std::string parts;
	for (const auto &[name, op] : a.products) {
		const auto r = is_nilpotent(single_product_algebra(a, name));
		all_parts = all_parts && r.nilpotent;
		parts += " " + name + "=" + (r.nilpotent ? "nilpotent" : "not nilpotent");
	}
	const std::string summary = std::string("full=") + (full.nilpotent ? "nilpotent" : "not nilpotent") + parts;
	rep.note(summary);
	if (full.nilpotent != all_parts) {
		Violation v;
		v.identity = "onesided";
		v.detail = summary;
		rep.add(std::move(v));
	}
	return rep;
}

CheckReport check_alpha_invariance(const HomAlgebra &a)
{
	validate(a);
	CheckReport rep("alpha_invariance");
	for (const auto &[name, op] : a.products)
		if (!check_multiplicativity(op, a.alpha).passed()) {
			rep.note("skipped: product '" + name + "' is not multiplicative");
			return rep;
		}
	const auto terms = full_series(a);
	for (std::size_t k = 0; k < terms.size(); ++k)
		for (const auto &v : terms[k].vectors()) {
			const auto img = a.alpha.apply(v);
			if (terms[k].contains(img))
				continue;
			Violation viol;
			viol.identity = "alpha_invariant";
			viol.basis = {k};
			viol.residual = img;
			viol.detail = "alpha maps a basis vector of A^" + std::to_string(k + 1) + " outside it";
			rep.add(std::move(viol));
		}
	return rep;
}

Json series_to_json(const std::vector<Subspace> &s)
{
	Json out = Json::array();
	for (const auto &t : s)
		out.push_back(matrix_to_json(t.basis()));
	return out;
}

Json nilpotency_to_json(const NilpotencyResult &r)
{
	Json j;
	j["nilpotent"] = r.nilpotent;
	j["index"] = r.index ? Json(*r.index) : Json(nullptr);
	return j;
}

} // namespace hrz
