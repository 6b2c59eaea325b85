#include "hrz/operators.hpp"

#include "hrz/axioms.hpp"
#include "hrz/errors.hpp"

namespace hrz {

namespace {

Matrix combine_actions(const std::vector<Matrix> &actions, const Vector &x, std::size_t m)
{
	if (x.size() != actions.size())
		throw DimensionMismatch("bimodule action: algebra vector has wrong length");
	Matrix out(m, m);
	for (std::size_t i = 0; i < x.size(); ++i)
		if (x[i] != 0)
			out = out + x[i] * actions[i];
	return out;
}

void report_columns(CheckReport &rep, const std::string &id, std::vector<std::size_t> prefix, const Matrix &res)
{
	for (std::size_t u = 0; u < res.cols(); ++u) {
		auto tuple = prefix;
		tuple.push_back(u);
		rep.expect_zero(id, std::move(tuple), res.column(u));
	}
}

/// Matrix of y -> e_i o y (left) or y -> y o e_i (right).
std::vector<Matrix> multiplication_matrices(const BilinearOp &op, bool left)
{
	const auto n = op.dim();
	std::vector<Matrix> out;
	out.reserve(n);
	for (std::size_t i = 0; i < n; ++i) {
		Matrix m(n, n);
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				m(k, j) = left ? op(i, j, k) : op(j, i, k);
		out.push_back(std::move(m));
	}
	return out;
}

void require_operator_shape(const LinearOperator &t, std::size_t target, std::size_t source, const char *what)
{
	if (t.target_dim() != target || t.source_dim() != source)
		throw DimensionMismatch(std::string(what) + ": operator must be " + std::to_string(target) + "x" +
		                        std::to_string(source));
}

} // namespace

Matrix Bimodule::left_of(const Vector &x) const { return combine_actions(left, x, mod_dim); }
Matrix Bimodule::right_of(const Vector &x) const { return combine_actions(right, x, mod_dim); }

void validate(const Bimodule &m)
{
	if (m.left.size() != m.alg_dim || m.right.size() != m.alg_dim)
		throw DimensionMismatch("bimodule: need one left and one right matrix per algebra basis vector");
	auto check = [&](const Matrix &x, const char *what) {
		if (x.rows() != m.mod_dim || x.cols() != m.mod_dim)
			throw DimensionMismatch(std::string("bimodule: ") + what + " must be " + std::to_string(m.mod_dim) +
			                        "x" + std::to_string(m.mod_dim));
	};
	for (const auto &x : m.left)
		check(x, "left action");
	for (const auto &x : m.right)
		check(x, "right action");
	check(m.beta, "beta");
}

CheckReport check_bimodule(const HomAlgebra &a, const Bimodule &m)
{
	validate(m);
	const auto &mul = a.mul();
	if (m.alg_dim != a.dim)
		throw DimensionMismatch("check_bimodule: bimodule is over an algebra of different dimension");
	const auto n = a.dim;
	CheckReport rep("bimodule");
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			const auto ai = a.alpha.image(i);
			const auto aj = a.alpha.image(j);
			const auto ij = mul.basis_product(i, j);
			report_columns(rep, "bm1", {i, j}, m.left_of(ai) * m.left[j] + m.left_of(ij) * m.beta);
			report_columns(rep, "bm2", {i, j}, m.right_of(aj) * m.right[i] + m.right_of(ij) * m.beta);
			report_columns(rep, "bm3", {i, j}, m.left_of(ai) * m.right[j] + m.right_of(aj) * m.left[i]);
		}
	for (std::size_t i = 0; i < n; ++i) {
		const auto ai = a.alpha.image(i);
		report_columns(rep, "bm4", {i}, m.beta * m.left[i] - m.left_of(ai) * m.beta);
		report_columns(rep, "bm5", {i}, m.beta * m.right[i] - m.right_of(ai) * m.beta);
	}
	return rep;
}

Bimodule regular_bimodule(const HomAlgebra &a)
{
	const auto &mul = a.mul();
	return {a.dim, a.dim, multiplication_matrices(mul, true), multiplication_matrices(mul, false), a.alpha.matrix};
}

Bimodule rhizaform_bimodule(const HomAlgebra &a)
{
	return {a.dim, a.dim, multiplication_matrices(a.succ(), true), multiplication_matrices(a.prec(), false),
	        a.alpha.matrix};
}

Bimodule dual_bimodule(const Bimodule &m)
{
	validate(m);
	Bimodule d;
	d.alg_dim = m.alg_dim;
	d.mod_dim = m.mod_dim;
	for (const auto &r : m.right)
		d.left.push_back(r.transpose());
	for (const auto &l : m.left)
		d.right.push_back(l.transpose());
	d.beta = m.beta.transpose();
	return d;
}

CheckReport check_o_operator(const LinearOperator &t, const HomAlgebra &a, const Bimodule &m)
{
	validate(m);
	const auto &mul = a.mul();
	require_operator_shape(t, a.dim, m.mod_dim, "check_o_operator");
	if (m.alg_dim != a.dim)
		throw DimensionMismatch("check_o_operator: bimodule is over an algebra of different dimension");
	CheckReport rep("o_operator");
	report_columns(rep, "oop_comm", {}, t.matrix * m.beta - a.alpha.matrix * t.matrix);
	const auto md = m.mod_dim;
	for (std::size_t u = 0; u < md; ++u)
		for (std::size_t v = 0; v < md; ++v) {
			const auto tu = t.matrix.column(u);
			const auto tv = t.matrix.column(v);
			const auto inner = m.left_of(tu).column(v) + m.right_of(tv).column(u);
			rep.expect_zero("oop", {u, v}, eval(mul, tu, tv) - t.apply(inner));
		}
	return rep;
}

CheckReport check_rota_baxter(const LinearOperator &r, const HomAlgebra &a)
{
	const auto &mul = a.mul();
	require_operator_shape(r, a.dim, a.dim, "check_rota_baxter");
	CheckReport rep("rota_baxter");
	report_columns(rep, "rb_comm", {}, r.matrix * a.alpha.matrix - a.alpha.matrix * r.matrix);
	const auto n = a.dim;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			const auto ei = unit_vector(n, i);
			const auto ej = unit_vector(n, j);
			const auto ri = r.matrix.column(i);
			const auto rj = r.matrix.column(j);
			rep.expect_zero("rb", {i, j}, eval(mul, ri, rj) - r.apply(eval(mul, ri, ej) + eval(mul, ei, rj)));
		}
	return rep;
}

HomAlgebra induced_rhizaform_from_o_operator(const LinearOperator &t, const HomAlgebra &a, const Bimodule &m,
                                             ConstructionOptions opts)
{
	validate(m);
	require_operator_shape(t, a.dim, m.mod_dim, "induced_rhizaform_from_o_operator");
	if (opts.strict) {
		if (!check_bimodule(a, m).passed())
			throw NotAnOOperator("module is not a bimodule over the algebra");
		if (!check_o_operator(t, a, m).passed())
			throw NotAnOOperator("T is not an O-operator");
	}
	const auto md = m.mod_dim;
	BilinearOp succ(md), prec(md);
	for (std::size_t u = 0; u < md; ++u)
		for (std::size_t v = 0; v < md; ++v) {
			const auto s = m.left_of(t.matrix.column(u)).column(v);
			const auto p = m.right_of(t.matrix.column(v)).column(u);
			for (std::size_t k = 0; k < md; ++k) {
				succ(u, v, k) = s[k];
				prec(u, v, k) = p[k];
			}
		}
	return make_rhizaform(std::move(succ), std::move(prec), LinearMap{m.beta});
}

HomAlgebra induced_rhizaform_from_rb(const LinearOperator &r, const HomAlgebra &a, ConstructionOptions opts)
{
	const auto &mul = a.mul();
	require_operator_shape(r, a.dim, a.dim, "induced_rhizaform_from_rb");
	if (opts.strict) {
		if (!check_hom_anti_associative(mul, a.alpha).passed())
			throw PreconditionFailed("algebra is not Hom-anti-associative");
		if (!check_rota_baxter(r, a).passed())
			throw PreconditionFailed("R is not a Rota-Baxter operator of weight 0");
	}
	const auto n = a.dim;
	BilinearOp succ(n), prec(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			const auto ei = unit_vector(n, i);
			const auto ej = unit_vector(n, j);
			const auto s = eval(mul, r.matrix.column(i), ej);
			const auto p = eval(mul, ei, r.matrix.column(j));
			for (std::size_t k = 0; k < n; ++k) {
				succ(i, j, k) = s[k];
				prec(i, j, k) = p[k];
			}
		}
	return make_rhizaform(std::move(succ), std::move(prec), a.alpha);
}

CheckReport check_homomorphism(const LinearOperator &f, const HomAlgebra &a1, const HomAlgebra &a2)
{
	require_operator_shape(f, a2.dim, a1.dim, "check_homomorphism");
	CheckReport rep("homomorphism");
	report_columns(rep, "hom_alpha", {}, a2.alpha.matrix * f.matrix - f.matrix * a1.alpha.matrix);
	for (const auto &[name, op1] : a1.products) {
		const auto &op2 = a2.product(name);
		for (std::size_t i = 0; i < a1.dim; ++i)
			for (std::size_t j = 0; j < a1.dim; ++j)
				rep.expect_zero("hom_" + name, {i, j},
				                f.apply(op1.basis_product(i, j)) -
				                    eval(op2, f.matrix.column(i), f.matrix.column(j)));
	}
	return rep;
}

HomAlgebra compatible_from_invertible_o_operator(const LinearOperator &t, const HomAlgebra &a, const Bimodule &m,
                                                 ConstructionOptions opts)
{
	if (!t.matrix.square())
		throw Singular("O-operator is not square, hence not invertible");
	const Matrix tinv = invert(t.matrix);
	const auto on_module = induced_rhizaform_from_o_operator(t, a, m, opts);
	const auto n = a.dim;
	BilinearOp succ(n), prec(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			const auto ui = tinv.column(i);
			const auto uj = tinv.column(j);
			const auto s = t.apply(eval(on_module.succ(), ui, uj));
			const auto p = t.apply(eval(on_module.prec(), ui, uj));
			for (std::size_t k = 0; k < n; ++k) {
				succ(i, j, k) = s[k];
				prec(i, j, k) = p[k];
			}
		}
	return make_rhizaform(std::move(succ), std::move(prec), a.alpha);
}

} // namespace hrz
