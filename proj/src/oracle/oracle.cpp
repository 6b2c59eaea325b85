#include "hrz/oracle.hpp"

#include <algorithm>
#include <functional>

namespace hrz::oracle {

namespace {

using Op = std::function<Vector(const Vector &, const Vector &)>;
using Map = std::function<Vector(const Vector &)>;

Op op_of(const BilinearOp &b)
{
	return [&b](const Vector &x, const Vector &y) { return eval(b, x, y); };
}

Map map_of(const Matrix &m)
{
	return [&m](const Vector &x) { return m * x; };
}

Vector e(std::size_t n, std::size_t i)
{
	Vector v(n, Rational(0));
	v[i] = 1;
	return v;
}

bool zero(const Vector &v)
{
	return std::all_of(v.begin(), v.end(), [](const Rational &q) { return q == 0; });
}

Vector add(Vector a, const Vector &b)
{
	for (std::size_t i = 0; i < a.size(); ++i)
		a[i] += b[i];
	return a;
}

Vector sub(Vector a, const Vector &b)
{
	for (std::size_t i = 0; i < a.size(); ++i)
		a[i] -= b[i];
	return a;
}

/// Calls f(x, y, z) on every basis triple; stops early once it returns true.
template <class F>
bool any_triple(std::size_t n, F f)
{
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				if (f(e(n, i), e(n, j), e(n, k)))
					return true;
	return false;
}

template <class F>
bool any_pair(std::size_t n, F f)
{
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			if (f(e(n, i), e(n, j)))
				return true;
	return false;
}

bool mult_fails(const Op &o, const Map &al, std::size_t n)
{
	return any_pair(n, [&](const Vector &x, const Vector &y) { return !zero(sub(al(o(x, y)), o(al(x), al(y)))); });
}

bool matrices_equal(const Matrix &a, const Matrix &b) { return a == b; }

Matrix act(const std::vector<Matrix> &actions, const Vector &x, std::size_t m)
{
	Matrix out(m, m);
	for (std::size_t i = 0; i < x.size(); ++i)
		if (x[i] != 0)
			out = out + x[i] * actions[i];
	return out;
}

} // namespace

std::size_t rank_of(const std::vector<Vector> &rows_in)
{
	// Bareiss-style fraction-free elimination after clearing denominators.
	if (rows_in.empty())
		return 0;
	const auto cols = rows_in.front().size();
	std::vector<std::vector<mpz_class>> rows;
	for (const auto &r : rows_in) {
		mpz_class l = 1;
		for (const auto &q : r)
			mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
		std::vector<mpz_class> zr;
		for (const auto &q : r)
			zr.push_back(mpz_class(q * l));
		rows.push_back(std::move(zr));
	}
	std::size_t rank = 0;
	for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
		std::size_t p = rank;
		while (p < rows.size() && rows[p][c] == 0)
			++p;
		if (p == rows.size())
			continue;
		std::swap(rows[p], rows[rank]);
		for (std::size_t r = rank + 1; r < rows.size(); ++r) {
			if (rows[r][c] == 0)
				continue;
			const mpz_class a = rows[rank][c];
			const mpz_class b = rows[r][c];
			mpz_class g = 0;
			for (std::size_t k = 0; k < cols; ++k) {
				rows[r][k] = a * rows[r][k] - b * rows[rank][k];
				mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), rows[r][k].get_mpz_t());
			}
			if (g > 1)
				for (auto &v : rows[r])
					v /= g;
		}
		++rank;
	}
	return rank;
}

Failures anti_associative(const BilinearOp &mul, const LinearMap &alpha)
{
	const auto n = mul.dim();
	const auto m = op_of(mul);
	const auto al = map_of(alpha.matrix);
	Failures f;
	if (any_triple(n, [&](const Vector &x, const Vector &y, const Vector &z) {
		    return !zero(add(m(m(x, y), al(z)), m(al(x), m(y, z))));
	    }))
		f.insert("anti_assoc");
	return f;
}

Failures multiplicativity(const BilinearOp &op, const LinearMap &alpha, const std::string &id)
{
	Failures f;
	if (mult_fails(op_of(op), map_of(alpha.matrix), op.dim()))
		f.insert(id);
	return f;
}

Failures rhizaform(const HomAlgebra &a)
{
	const auto n = a.dim;
	const auto S = op_of(a.succ());
	const auto P = op_of(a.prec());
	const auto al = map_of(a.alpha.matrix);
	Failures f;
	// (x * y) > a(z) = -a(x) > (y > z)
	if (any_triple(n, [&](const Vector &x, const Vector &y, const Vector &z) {
		    return !zero(add(S(add(S(x, y), P(x, y)), al(z)), S(al(x), S(y, z))));
	    }))
		f.insert("req1");
	// a(x) < (y * z) = -(x < y) < a(z)
	if (any_triple(n, [&](const Vector &x, const Vector &y, const Vector &z) {
		    return !zero(add(P(al(x), add(S(y, z), P(y, z))), P(P(x, y), al(z))));
	    }))
		f.insert("req2");
	// a(x) > (y < z) = -(x > y) < a(z)
	if (any_triple(n, [&](const Vector &x, const Vector &y, const Vector &z) {
		    return !zero(add(S(al(x), P(y, z)), P(S(x, y), al(z))));
	    }))
		f.insert("req3");
	if (mult_fails(S, al, n))
		f.insert("mult_succ");
	if (mult_fails(P, al, n))
		f.insert("mult_prec");
	return f;
}

Failures dendriform(const HomAlgebra &a)
{
	const auto n = a.dim;
	const auto S = op_of(a.succ());
	const auto P = op_of(a.prec());
	const auto al = map_of(a.alpha.matrix);
	Failures f;
	if (any_triple(n, [&](const Vector &x, const Vector &y, const Vector &z) {
		    return !zero(sub(P(P(x, y), al(z)), P(al(x), add(S(y, z), P(y, z)))));
	    }))
		f.insert("den1");
	if (any_triple(n, [&](const Vector &x, const Vector &y, const Vector &z) {
		    return !zero(sub(P(S(x, y), al(z)), S(al(x), P(y, z))));
	    }))
		f.insert("den2");
	if (any_triple(n, [&](const Vector &x, const Vector &y, const Vector &z) {
		    return !zero(sub(S(add(S(x, y), P(x, y)), al(z)), S(al(x), S(y, z))));
	    }))
		f.insert("den3");
	if (mult_fails(S, al, n))
		f.insert("mult_succ");
	if (mult_fails(P, al, n))
		f.insert("mult_prec");
	return f;
}

Failures jacobi_jordan(const BilinearOp &mul, const LinearMap &alpha)
{
	const auto n = mul.dim();
	const auto m = op_of(mul);
	const auto al = map_of(alpha.matrix);
	Failures f;
	if (any_pair(n, [&](const Vector &x, const Vector &y) { return !zero(sub(m(x, y), m(y, x))); }))
		f.insert("comm");
	if (any_triple(n, [&](const Vector &x, const Vector &y, const Vector &z) {
		    return !zero(add(add(m(al(x), m(y, z)), m(al(y), m(z, x))), m(al(z), m(x, y))));
	    }))
		f.insert("cyclic");
	return f;
}

Failures pre_jacobi_jordan(const BilinearOp &mul, const LinearMap &alpha)
{
	const auto n = mul.dim();
	const auto m = op_of(mul);
	const auto al = map_of(alpha.matrix);
	Failures f;
	if (any_triple(n, [&](const Vector &x, const Vector &y, const Vector &z) {
		    const auto t1 = add(m(m(x, y), al(z)), m(al(x), m(y, z)));
		    const auto t2 = add(m(m(y, x), al(z)), m(al(y), m(x, z)));
		    return !zero(add(t1, t2));
	    }))
		f.insert("pre_jj");
	return f;
}

Failures alpha_derivation(const LinearMap &d, const HomAlgebra &a, const std::string &product)
{
	const auto n = a.dim;
	const auto o = op_of(a.product(product));
	const auto al = map_of(a.alpha.matrix);
	const auto D = map_of(d.matrix);
	Failures f;
	if (any_pair(n, [&](const Vector &x, const Vector &y) {
		    return !zero(sub(D(o(x, y)), add(o(D(x), al(y)), o(al(x), D(y)))));
	    }))
		f.insert("deriv_" + product);
	return f;
}

Failures bimodule(const HomAlgebra &a, const Bimodule &m)
{
	const auto n = a.dim;
	const auto md = m.mod_dim;
	const auto mul = op_of(a.mul());
	const auto al = map_of(a.alpha.matrix);
	const auto be = map_of(m.beta);
	auto l = [&](const Vector &x, const Vector &u) { return act(m.left, x, md) * u; };
	auto r = [&](const Vector &x, const Vector &u) { return act(m.right, x, md) * u; };
	Failures f;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t u = 0; u < md; ++u) {
				const auto x = e(n, i), y = e(n, j), v = e(md, u);
				if (!zero(add(l(al(x), l(y, v)), l(mul(x, y), be(v)))))
					f.insert("bm1");
				if (!zero(add(r(al(y), r(x, v)), r(mul(x, y), be(v)))))
					f.insert("bm2");
				if (!zero(add(l(al(x), r(y, v)), r(al(y), l(x, v)))))
					f.insert("bm3");
			}
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t u = 0; u < md; ++u) {
			const auto x = e(n, i), v = e(md, u);
			if (!zero(sub(be(l(x, v)), l(al(x), be(v)))))
				f.insert("bm4");
			if (!zero(sub(be(r(x, v)), r(al(x), be(v)))))
				f.insert("bm5");
		}
	return f;
}

Failures o_operator(const LinearOperator &t, const HomAlgebra &a, const Bimodule &m)
{
	const auto md = m.mod_dim;
	const auto mul = op_of(a.mul());
	const auto T = map_of(t.matrix);
	Failures f;
	if (!matrices_equal(t.matrix * m.beta, a.alpha.matrix * t.matrix))
		f.insert("oop_comm");
	for (std::size_t i = 0; i < md; ++i)
		for (std::size_t j = 0; j < md; ++j) {
			const auto u = e(md, i), v = e(md, j);
			const auto rhs = T(add(act(m.left, T(u), md) * v, act(m.right, T(v), md) * u));
			if (!zero(sub(mul(T(u), T(v)), rhs)))
				f.insert("oop");
		}
	return f;
}

Failures rota_baxter(const LinearOperator &r, const HomAlgebra &a)
{
	const auto n = a.dim;
	const auto mul = op_of(a.mul());
	const auto R = map_of(r.matrix);
	const auto al = map_of(a.alpha.matrix);
	Failures f;
	for (std::size_t i = 0; i < n; ++i)
		if (!zero(sub(R(al(e(n, i))), al(R(e(n, i))))))
			f.insert("rb_comm");
	if (any_pair(n, [&](const Vector &x, const Vector &y) {
		    return !zero(sub(mul(R(x), R(y)), R(add(mul(R(x), y), mul(x, R(y))))));
	    }))
		f.insert("rb");
	return f;
}

Failures homomorphism(const LinearOperator &fm, const HomAlgebra &a1, const HomAlgebra &a2)
{
	const auto F = map_of(fm.matrix);
	const auto a1m = map_of(a1.alpha.matrix);
	const auto a2m = map_of(a2.alpha.matrix);
	Failures f;
	for (std::size_t i = 0; i < a1.dim; ++i)
		if (!zero(sub(a2m(F(e(a1.dim, i))), F(a1m(e(a1.dim, i))))))
			f.insert("hom_alpha");
	for (const auto &[name, op1] : a1.products) {
		const auto o1 = op_of(op1);
		const auto o2 = op_of(a2.product(name));
		if (any_pair(a1.dim, [&](const Vector &x, const Vector &y) { return !zero(sub(F(o1(x, y)), o2(F(x), F(y)))); }))
			f.insert("hom_" + name);
	}
	return f;
}

Failures two_nilpotent(const HomAlgebra &a)
{
	const auto n = a.dim;
	const auto al = map_of(a.alpha.matrix);
	Failures f;
	for (const auto &[p, bp] : a.products)
		for (const auto &[q, bq] : a.products) {
			const auto P = op_of(bp);
			const auto Q = op_of(bq);
			if (any_triple(n, [&](const Vector &x, const Vector &y, const Vector &z) { return !zero(Q(P(x, y), al(z))); }))
				f.insert("nil2_left_" + p + "_" + q);
			if (any_triple(n, [&](const Vector &x, const Vector &y, const Vector &z) { return !zero(Q(al(x), P(y, z))); }))
				f.insert("nil2_right_" + p + "_" + q);
		}
	return f;
}

namespace {

Failures family_axioms(const FamilyAlgebra &fa, bool hom)
{
	const auto n = fa.dim;
	const auto s = fa.omega.size;
	const Matrix id = Matrix::identity(n);
	const auto al = map_of(hom ? fa.alpha.matrix : id);
	Failures f;
	if (hom)
		for (std::size_t l = 0; l < s; ++l) {
			if (mult_fails(op_of(fa.succ[l]), al, n))
				f.insert("fmult_succ");
			if (mult_fails(op_of(fa.prec[l]), al, n))
				f.insert("fmult_prec");
		}
	for (std::size_t l = 0; l < s; ++l)
		for (std::size_t w = 0; w < s; ++w) {
			const auto lw = fa.omega.table[l][w];
			const auto Sl = op_of(fa.succ[l]), Sw = op_of(fa.succ[w]), Slw = op_of(fa.succ[lw]);
			const auto Pl = op_of(fa.prec[l]), Pw = op_of(fa.prec[w]), Plw = op_of(fa.prec[lw]);
			if (any_triple(n, [&](const Vector &x, const Vector &y, const Vector &z) {
				    return !zero(add(Pw(Pl(x, y), al(z)), Plw(al(x), add(Pw(y, z), Sl(y, z)))));
			    }))
				f.insert("f1");
			if (any_triple(n, [&](const Vector &x, const Vector &y, const Vector &z) {
				    return !zero(add(Pw(Sl(x, y), al(z)), Sl(al(x), Pw(y, z))));
			    }))
				f.insert("f2");
			if (any_triple(n, [&](const Vector &x, const Vector &y, const Vector &z) {
				    return !zero(add(Slw(add(Pw(x, y), Sl(x, y)), al(z)), Sl(al(x), Sw(y, z))));
			    }))
				f.insert("f3");
		}
	return f;
}

} // namespace

Failures rhizaform_family(const FamilyAlgebra &f) { return family_axioms(f, true); }
Failures plain_rhizaform_family(const FamilyAlgebra &f) { return family_axioms(f, false); }

Failures anti_associative_family(const FamilyProducts &p, const LinearMap &alpha)
{
	const auto n = alpha.dim();
	const auto s = p.omega.size;
	const auto al = map_of(alpha.matrix);
	Failures f;
	for (std::size_t l = 0; l < s; ++l)
		for (std::size_t w = 0; w < s; ++w)
			for (std::size_t g = 0; g < s; ++g) {
				const auto lw = p.omega.table[l][w];
				const auto wg = p.omega.table[w][g];
				const auto A = op_of(p.at(l, w)), B = op_of(p.at(lw, g));
				const auto C = op_of(p.at(l, wg)), D = op_of(p.at(w, g));
				if (any_triple(n, [&](const Vector &x, const Vector &y, const Vector &z) {
					    return !zero(add(B(A(x, y), al(z)), C(al(x), D(y, z))));
				    }))
					f.insert("fanti_assoc");
			}
	return f;
}

Failures rb_family(const RBFamily &rf, const HomAlgebra &a)
{
	const auto n = a.dim;
	const auto s = rf.omega.size;
	const auto mul = op_of(a.mul());
	const auto al = map_of(a.alpha.matrix);
	Failures f;
	for (std::size_t l = 0; l < s; ++l) {
		const auto R = map_of(rf.ops[l].matrix);
		for (std::size_t i = 0; i < n; ++i)
			if (!zero(sub(al(R(e(n, i))), R(al(e(n, i))))))
				f.insert("frb_comm");
	}
	for (std::size_t l = 0; l < s; ++l)
		for (std::size_t w = 0; w < s; ++w) {
			const auto Rl = map_of(rf.ops[l].matrix);
			const auto Rw = map_of(rf.ops[w].matrix);
			const auto Rlw = map_of(rf.ops[rf.omega.table[l][w]].matrix);
			if (any_pair(n, [&](const Vector &x, const Vector &y) {
				    return !zero(sub(mul(Rl(x), Rw(y)), Rlw(add(mul(Rl(x), y), mul(x, Rw(y))))));
			    }))
				f.insert("frb");
		}
	return f;
}

Failures scalar_cocycle(const HomAlgebra &a, const Matrix &b)
{
	const auto n = a.dim;
	const auto mul = op_of(a.mul());
	const auto al = map_of(a.alpha.matrix);
	auto B = [&](const Vector &x, const Vector &y) {
		Rational s = 0;
		const auto by = b * y;
		for (std::size_t i = 0; i < n; ++i)
			s += x[i] * by[i];
		return s;
	};
	Failures f;
	if (any_triple(n, [&](const Vector &x, const Vector &y, const Vector &z) {
		    return B(mul(x, y), al(z)) + B(mul(y, z), al(x)) + B(mul(z, x), al(y)) != 0;
	    }))
		f.insert("cocycle");
	if (any_pair(n, [&](const Vector &x, const Vector &y) { return B(al(x), al(y)) != B(x, y); }))
		f.insert("invariance");
	return f;
}

std::size_t scalar_cocycle_dimension(const HomAlgebra &a)
{
	const auto n = a.dim;
	const auto mul = op_of(a.mul());
	const auto al = map_of(a.alpha.matrix);
	// Column (p, q): every condition evaluated on the form with B(e_p, e_q) = 1.
	std::vector<Vector> cols;
	for (std::size_t p = 0; p < n; ++p)
		for (std::size_t q = 0; q < n; ++q) {
			auto B = [&](const Vector &x, const Vector &y) { return x[p] * y[q]; };
			Vector col;
			any_triple(n, [&](const Vector &x, const Vector &y, const Vector &z) {
				col.push_back(B(mul(x, y), al(z)) + B(mul(y, z), al(x)) + B(mul(z, x), al(y)));
				return false;
			});
			any_pair(n, [&](const Vector &x, const Vector &y) {
				col.push_back(B(al(x), al(y)) - B(x, y));
				return false;
			});
			cols.push_back(std::move(col));
		}
	return n * n - rank_of(cols);
}

std::size_t vector_cocycle_dimension(const HomAlgebra &a)
{
	const auto n = a.dim;
	const auto mul = op_of(a.mul());
	const auto al = map_of(a.alpha.matrix);
	std::vector<Vector> cols;
	for (std::size_t p = 0; p < n; ++p)
		for (std::size_t q = 0; q < n; ++q)
			for (std::size_t k = 0; k < n; ++k) {
				// w(x, y) = x_p y_q e_k
				auto W = [&](const Vector &x, const Vector &y) {
					Vector v(n, Rational(0));
					v[k] = x[p] * y[q];
					return v;
				};
				Vector col;
				any_triple(n, [&](const Vector &x, const Vector &y, const Vector &z) {
					const auto r = add(add(W(mul(x, y), al(z)), W(mul(y, z), al(x))), W(mul(z, x), al(y)));
					col.insert(col.end(), r.begin(), r.end());
					return false;
				});
				any_pair(n, [&](const Vector &x, const Vector &y) {
					const auto r = sub(al(W(x, y)), W(al(x), al(y)));
					col.insert(col.end(), r.begin(), r.end());
					return false;
				});
				cols.push_back(std::move(col));
			}
	return n * n * n - rank_of(cols);
}

namespace {

/// Row-reduced spanning set: keeps a vector only if it raises the rank.
std::vector<Vector> prune(const std::vector<Vector> &vs)
{
	std::vector<Vector> kept;
	for (const auto &v : vs) {
		if (zero(v))
			continue;
		kept.push_back(v);
		if (rank_of(kept) < kept.size())
			kept.pop_back();
	}
	return kept;
}

std::vector<Vector> products(const HomAlgebra &a, const std::vector<Vector> &xs, const std::vector<Vector> &ys)
{
	std::vector<Vector> out;
	for (const auto &[name, op] : a.products)
		for (const auto &x : xs)
			for (const auto &y : ys)
				out.push_back(eval(op, x, y));
	return prune(out);
}

} // namespace

NilpotencyVerdict nilpotency(const HomAlgebra &a)
{
	const auto n = a.dim;
	const std::size_t cap = 4 * n + 4;
	std::vector<Vector> basis;
	for (std::size_t i = 0; i < n; ++i)
		basis.push_back(e(n, i));
	NilpotencyVerdict v;

	std::vector<Vector> right = basis, left = basis;
	std::vector<std::vector<Vector>> full{basis};
	for (std::size_t k = 2; k <= cap; ++k) {
		if (!v.right) {
			right = products(a, right, basis);
			if (right.empty())
				v.right = k;
		}
		if (!v.left) {
			left = products(a, basis, left);
			if (left.empty())
				v.left = k;
		}
		if (!v.full) {
			std::vector<Vector> acc;
			for (std::size_t i = 1; i < k; ++i)
				for (auto &x : products(a, full[i - 1], full[k - i - 1]))
					acc.push_back(std::move(x));
			full.push_back(prune(acc));
			if (full.back().empty())
				v.full = k;
		}
	}
	return v;
}

bool agrees(const CheckReport &report, const Failures &expected)
{
	const auto got = report.failed_identities();
	return Failures(got.begin(), got.end()) == expected;
}

} // namespace hrz::oracle
