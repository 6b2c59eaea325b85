#include "hrz/family.hpp"

#include "hrz/axioms.hpp"
#include "hrz/errors.hpp"

namespace hrz {

Semigroup Semigroup::cyclic(std::size_t m)
{
	Semigroup s;
	s.size = m;
	s.table.assign(m, std::vector<std::size_t>(m));
	for (std::size_t l = 0; l < m; ++l)
		for (std::size_t w = 0; w < m; ++w)
			s.table[l][w] = (l + w) % m;
	return s;
}

namespace {

bool table_in_range(const Semigroup &s)
{
	if (s.table.size() != s.size)
		return false;
	for (const auto &row : s.table) {
		if (row.size() != s.size)
			return false;
		for (auto v : row)
			if (v >= s.size)
				return false;
	}
	return true;
}

void require_semigroup(const Semigroup &s, const char *what)
{
	if (s.size == 0 || !table_in_range(s))
		throw DimensionMismatch(std::string(what) + ": semigroup table is not a size x size table over 0..size-1");
}

void require_square(const Matrix &m, std::size_t n, const char *what)
{
	if (m.rows() != n || m.cols() != n)
		throw DimensionMismatch(std::string(what) + ": expected " + std::to_string(n) + "x" + std::to_string(n));
}

template <class F>
void for_triples(std::size_t n, F f)
{
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				f(i, j, k);
}

} // namespace

CheckReport check_semigroup(const Semigroup &s)
{
	CheckReport rep("semigroup");
	if (!table_in_range(s)) {
		Violation v;
		v.identity = "range";
		v.detail = "table must be size x size with entries in 0.." + std::to_string(s.size == 0 ? 0 : s.size - 1);
		rep.add(std::move(v));
		return rep;
	}
	for (std::size_t a = 0; a < s.size; ++a)
		for (std::size_t b = 0; b < s.size; ++b)
			for (std::size_t c = 0; c < s.size; ++c) {
				const auto lhs = s.mul(s.mul(a, b), c);
				const auto rhs = s.mul(a, s.mul(b, c));
				if (lhs == rhs)
					continue;
				Violation v;
				v.identity = "assoc";
				v.labels = {a, b, c};
				v.detail = "(ab)c = " + std::to_string(lhs) + ", a(bc) = " + std::to_string(rhs);
				rep.add(std::move(v));
			}
	return rep;
}

void validate(const FamilyAlgebra &f)
{
	require_semigroup(f.omega, "family algebra");
	if (f.succ.size() != f.omega.size || f.prec.size() != f.omega.size)
		throw DimensionMismatch("family algebra: need one succ and one prec product per semigroup element");
	for (const auto &op : f.succ)
		if (op.dim() != f.dim)
			throw DimensionMismatch("family algebra: succ product has wrong dimension");
	for (const auto &op : f.prec)
		if (op.dim() != f.dim)
			throw DimensionMismatch("family algebra: prec product has wrong dimension");
	require_square(f.alpha.matrix, f.dim, "family algebra alpha");
}

CheckReport check_rhizaform_family(const FamilyAlgebra &f)
{
	validate(f);
	const auto n = f.dim;
	const auto s = f.omega.size;
	CheckReport rep("rhizaform_family");
	for (std::size_t l = 0; l < s; ++l) {
		const auto ms = check_multiplicativity(f.succ[l], f.alpha, "fmult_succ");
		const auto mp = check_multiplicativity(f.prec[l], f.alpha, "fmult_prec");
		for (const auto *m : {&ms, &mp})
			for (auto v : m->violations()) {
				v.labels = {l};
				rep.add(std::move(v));
			}
	}
	for (std::size_t l = 0; l < s; ++l)
		for (std::size_t w = 0; w < s; ++w) {
			const auto lw = f.omega.mul(l, w);
			const auto &sl = f.succ[l];
			const auto &sw = f.succ[w];
			const auto &pl = f.prec[l];
			const auto &pw = f.prec[w];

			auto f1 = nested_left(pl, pw, f.alpha);
			f1 += nested_right(pw + sl, f.prec[lw], f.alpha);

			auto f2 = nested_left(sl, pw, f.alpha);
			f2 += nested_right(pw, sl, f.alpha);

			auto f3 = nested_left(pw + sl, f.succ[lw], f.alpha);
			f3 += nested_right(sw, sl, f.alpha);

			for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) {
				rep.expect_zero("f1", {i, j, k}, f1.residual(i, j, k), {l, w});
				rep.expect_zero("f2", {i, j, k}, f2.residual(i, j, k), {l, w});
				rep.expect_zero("f3", {i, j, k}, f3.residual(i, j, k), {l, w});
			});
		}
	return rep;
}

CheckReport check_anti_associative_family(const FamilyProducts &p, const LinearMap &alpha)
{
	require_semigroup(p.omega, "anti-associative family");
	const auto s = p.omega.size;
	if (p.ops.size() != s * s)
		throw DimensionMismatch("anti-associative family: need one product per ordered pair of elements");
	const auto n = alpha.dim();
	for (const auto &op : p.ops)
		if (op.dim() != n)
			throw DimensionMismatch("anti-associative family: product has wrong dimension");
	CheckReport rep("anti_associative_family");
	for (std::size_t l = 0; l < s; ++l)
		for (std::size_t w = 0; w < s; ++w)
			for (std::size_t g = 0; g < s; ++g) {
				auto t = nested_left(p.at(l, w), p.at(p.omega.mul(l, w), g), alpha);
				t += nested_right(p.at(w, g), p.at(l, p.omega.mul(w, g)), alpha);
				for_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) {
					rep.expect_zero("fanti_assoc", {i, j, k}, t.residual(i, j, k), {l, w, g});
				});
			}
	return rep;
}

FamilyProducts associated_family(const FamilyAlgebra &f)
{
	validate(f);
	FamilyProducts p;
	p.omega = f.omega;
	const auto s = f.omega.size;
	p.ops.reserve(s * s);
	for (std::size_t l = 0; l < s; ++l)
		for (std::size_t w = 0; w < s; ++w)
			p.ops.push_back(f.prec[w] + f.succ[l]);
	return p;
}

namespace {

void validate_rb_family(const RBFamily &rf, const HomAlgebra &a, const char *what)
{
	require_semigroup(rf.omega, what);
	if (rf.ops.size() != rf.omega.size)
		throw DimensionMismatch(std::string(what) + ": need one operator per semigroup element");
	for (const auto &r : rf.ops)
		require_square(r.matrix, a.dim, what);
}

} // namespace

CheckReport check_rb_family(const RBFamily &rf, const HomAlgebra &a)
{
	validate_rb_family(rf, a, "check_rb_family");
	const auto &mul = a.mul();
	const auto n = a.dim;
	const auto s = rf.omega.size;
	CheckReport rep("rb_family");
	for (std::size_t l = 0; l < s; ++l) {
		const Matrix comm = a.alpha.matrix * rf.ops[l].matrix - rf.ops[l].matrix * a.alpha.matrix;
		for (std::size_t u = 0; u < n; ++u)
			rep.expect_zero("frb_comm", {u}, comm.column(u), {l});
	}
	for (std::size_t l = 0; l < s; ++l)
		for (std::size_t w = 0; w < s; ++w) {
			const auto &rl = rf.ops[l];
			const auto &rw = rf.ops[w];
			const auto &rlw = rf.ops[rf.omega.mul(l, w)];
			for (std::size_t i = 0; i < n; ++i)
				for (std::size_t j = 0; j < n; ++j) {
					const auto ei = unit_vector(n, i);
					const auto ej = unit_vector(n, j);
					const auto ri = rl.matrix.column(i);
					const auto rj = rw.matrix.column(j);
					rep.expect_zero("frb", {i, j},
					                eval(mul, ri, rj) - rlw.apply(eval(mul, ri, ej) + eval(mul, ei, rj)), {l, w});
				}
		}
	return rep;
}

FamilyAlgebra induced_family_rhizaform(const RBFamily &rf, const HomAlgebra &a, ConstructionOptions opts)
{
	validate_rb_family(rf, a, "induced_family_rhizaform");
	const auto &mul = a.mul();
	if (opts.strict) {
		if (!check_hom_anti_associative(mul, a.alpha).passed())
			throw PreconditionFailed("algebra is not Hom-anti-associative");
		if (!check_rb_family(rf, a).passed())
			throw PreconditionFailed("operators do not form a Rota-Baxter family of weight 0");
	}
	const auto n = a.dim;
	FamilyAlgebra f;
	f.dim = n;
	f.omega = rf.omega;
	f.alpha = a.alpha;
	for (const auto &r : rf.ops) {
		BilinearOp succ(n), prec(n);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j) {
				const auto sv = eval(mul, r.matrix.column(i), unit_vector(n, j));
				const auto pv = eval(mul, unit_vector(n, i), r.matrix.column(j));
				for (std::size_t k = 0; k < n; ++k) {
					succ(i, j, k) = sv[k];
					prec(i, j, k) = pv[k];
				}
			}
		f.succ.push_back(std::move(succ));
		f.prec.push_back(std::move(prec));
	}
	return f;
}

std::pair<HomAlgebra, LinearOperator> tensor_collapse(const HomAlgebra &a, const RBFamily &rf)
{
	validate_rb_family(rf, a, "tensor_collapse");
	const auto &mul = a.mul();
	const auto n = a.dim;
	const auto s = rf.omega.size;
	const auto N = n * s;
	auto idx = [s](std::size_t i, std::size_t l) { return i * s + l; };

	BilinearOp prod(N);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t l = 0; l < s; ++l)
			for (std::size_t j = 0; j < n; ++j)
				for (std::size_t w = 0; w < s; ++w) {
					const auto lw = rf.omega.mul(l, w);
					for (std::size_t k = 0; k < n; ++k)
						prod(idx(i, l), idx(j, w), idx(k, lw)) = mul(i, j, k);
				}
	Matrix alpha(N, N), r(N, N);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t l = 0; l < s; ++l)
			for (std::size_t k = 0; k < n; ++k) {
				alpha(idx(k, l), idx(i, l)) = a.alpha.matrix(k, i);
				r(idx(k, l), idx(i, l)) = rf.ops[l].matrix(k, i);
			}
	return {make_mono(std::move(prod), LinearMap{std::move(alpha)}), LinearOperator{std::move(r)}};
}

FamilyAlgebra as_trivial_family(const HomAlgebra &a)
{
	return {a.dim, Semigroup::trivial(), {a.succ()}, {a.prec()}, a.alpha};
}

} // namespace hrz
