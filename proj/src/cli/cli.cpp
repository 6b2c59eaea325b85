#include "hrz/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hrz/axioms.hpp"
#include "hrz/catalog.hpp"
#include "hrz/cocycles.hpp"
#include "hrz/errors.hpp"
#include "hrz/family.hpp"
#include "hrz/io.hpp"
#include "hrz/nilpotency.hpp"
#include "hrz/operators.hpp"
#include "hrz/oracle.hpp"

namespace hrz::cli {

namespace {

class InputError : public Error {
public:
	using Error::Error;
};

struct Common {
	std::vector<std::string> params;
	std::string format = "text";
	bool strict = true;
	bool oracle = false;

	bool structured() const { return format == "structured"; }
};

struct Io {
	std::ostream &out;
	std::ostream &err;
	const Common &common;
};

std::string read_file(const std::string &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw InputError("cannot open '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

Bindings bindings_of(const Common &c)
{
	Bindings b;
	for (const auto &p : c.params) {
		auto [k, v] = parse_binding(p);
		b[k] = v;
	}
	return b;
}

/// The mono algebra a single-product checker should look at.
HomAlgebra mono_view(const HomAlgebra &a)
{
	return a.kind == AlgebraKind::Mono ? a : sum_algebra(a);
}

void emit(const Io &io, const Json &structured, const std::string &text)
{
	if (io.common.structured())
		io.out << format_json(structured);
	else
		io.out << text;
}

/// Adds the oracle comparison to a report; false on disagreement.
bool attach_oracle(Json &j, std::string &text, const CheckReport &rep, const oracle::Failures &expected)
{
	const bool ok = oracle::agrees(rep, expected);
	j["oracle"] = ok ? "agrees" : "disagrees";
	if (!ok)
		j["oracle_failures"] = std::vector<std::string>(expected.begin(), expected.end());
	text += std::string("oracle: ") + (ok ? "agrees" : "DISAGREES") + "\n";
	return ok;
}

int finish_check(const Io &io, const CheckReport &rep, const std::optional<oracle::Failures> &expected)
{
	Json j = to_json(rep);
	std::string text = to_text(rep);
	bool oracle_ok = true;
	if (expected)
		oracle_ok = attach_oracle(j, text, rep, *expected);
	emit(io, j, text);
	if (!oracle_ok)
		return kCheckFailed;
	return rep.passed() || !io.common.strict ? kOk : kCheckFailed;
}

Bimodule module_for(const std::string &choice, const Json &doc, const HomAlgebra &m, const Bindings &b)
{
	if (choice == "regular")
		return regular_bimodule(m);
	if (choice == "dual-regular")
		return dual_bimodule(regular_bimodule(m));
	if (choice == "file" || choice.empty()) {
		if (auto bm = bimodule_from_json(doc, m.dim, b))
			return *bm;
		if (choice == "file")
			throw InputError("input has no \"bimodule\" section");
		return regular_bimodule(m);
	}
	throw InputError("unknown module '" + choice + "' (regular, dual-regular, file)");
}

Bimodule module_for_rhizaform(const std::string &choice, const Json &doc, const HomAlgebra &a, const Bindings &b)
{
	if (choice == "rhizaform") {
		if (a.kind != AlgebraKind::Rhizaform)
			throw InputError("--module=rhizaform needs a rhizaform algebra");
		return rhizaform_bimodule(a);
	}
	if (choice == "dual-rhizaform") {
		if (a.kind != AlgebraKind::Rhizaform)
			throw InputError("--module=dual-rhizaform needs a rhizaform algebra");
		return dual_bimodule(rhizaform_bimodule(a));
	}
	return module_for(choice, doc, mono_view(a), b);
}

LinearOperator require_operator(const Json &doc, const char *key, const Bindings &b)
{
	auto op = operator_from_json(doc, key, b);
	if (!op)
		throw InputError(std::string("input has no \"") + key + "\" section");
	return *op;
}

// ---- check ----------------------------------------------------------------

struct CheckArgs {
	std::string file;
	std::string kind;
	std::string module;
	std::string product;
	std::string inner;
	std::string target;
};

int cmd_check(const Io &io, const CheckArgs &args)
{
	const auto b = bindings_of(io.common);
	const auto doc = load_json(read_file(args.file));
	const auto a = algebra_from_json(doc, b);
	const auto kind = !args.kind.empty() ? args.kind : a.kind == AlgebraKind::Rhizaform ? "rhizaform" : "anti-associative";
	const bool orc = io.common.oracle;
	std::optional<oracle::Failures> expected;

	auto need_rhizaform = [&] {
		if (a.kind != AlgebraKind::Rhizaform)
			throw InputError("--kind=" + kind + " needs a rhizaform (succ/prec) algebra");
	};

	if (kind == "rhizaform") {
		need_rhizaform();
		if (orc)
			expected = oracle::rhizaform(a);
		return finish_check(io, check_rhizaform(a), expected);
	}
	if (kind == "dendriform") {
		need_rhizaform();
		if (orc)
			expected = oracle::dendriform(a);
		return finish_check(io, check_dendriform(a), expected);
	}
	if (kind == "anti-associative") {
		const auto m = mono_view(a);
		if (orc)
			expected = oracle::anti_associative(m.mul(), m.alpha);
		return finish_check(io, check_hom_anti_associative(m.mul(), m.alpha), expected);
	}
	if (kind == "multiplicativity") {
		CheckReport rep("multiplicativity");
		oracle::Failures f;
		for (const auto &[name, op] : a.products) {
			rep.merge(check_multiplicativity(op, a.alpha, "mult_" + name));
			if (orc)
				f.merge(oracle::multiplicativity(op, a.alpha, "mult_" + name));
		}
		if (orc)
			expected = f;
		return finish_check(io, rep, expected);
	}
	if (kind == "jacobi-jordan" || kind == "pre-jacobi-jordan") {
		const bool jj = kind == "jacobi-jordan";
		const BilinearOp op = a.kind == AlgebraKind::Mono ? a.mul()
		                      : jj                         ? subadjacent_bracket(a)
		                                                   : pre_jacobi_jordan_product(a);
		if (orc)
			expected = jj ? oracle::jacobi_jordan(op, a.alpha) : oracle::pre_jacobi_jordan(op, a.alpha);
		return finish_check(io, jj ? check_jacobi_jordan(op, a.alpha) : check_pre_jacobi_jordan(op, a.alpha),
		                    expected);
	}
	if (kind == "bimodule") {
		const auto m = mono_view(a);
		const auto bm = module_for_rhizaform(args.module, doc, a, b);
		if (orc)
			expected = oracle::bimodule(m, bm);
		return finish_check(io, check_bimodule(m, bm), expected);
	}
	if (kind == "o-operator") {
		const auto m = mono_view(a);
		const auto bm = module_for_rhizaform(args.module.empty() ? "file" : args.module, doc, a, b);
		const auto t = require_operator(doc, "T", b);
		if (orc)
			expected = oracle::o_operator(t, m, bm);
		return finish_check(io, check_o_operator(t, m, bm), expected);
	}
	if (kind == "rota-baxter") {
		const auto m = mono_view(a);
		const auto r = require_operator(doc, "R", b);
		if (orc)
			expected = oracle::rota_baxter(r, m);
		return finish_check(io, check_rota_baxter(r, m), expected);
	}
	if (kind == "homomorphism") {
		if (args.target.empty())
			throw InputError("--kind=homomorphism needs --target=FILE");
		const auto target = parse_algebra(read_file(args.target), b);
		const auto f = require_operator(doc, "F", b);
		if (orc)
			expected = oracle::homomorphism(f, a, target);
		return finish_check(io, check_homomorphism(f, a, target), expected);
	}
	if (kind == "derivation") {
		LinearMap d;
		if (!args.inner.empty()) {
			auto it = doc.find("z");
			if (it == doc.end())
				throw InputError("--inner needs a \"z\" vector in the input");
			const auto z = vector_from_json(*it, effective_bindings(doc, b), "z");
			if (args.inner != "star" && args.inner != "mixed")
				throw InputError("--inner must be star or mixed");
			if (args.inner == "mixed")
				need_rhizaform();
			d = inner_derivation(z, a, args.inner == "star" ? AdConvention::Star : AdConvention::Mixed);
		} else {
			d = {require_operator(doc, "D", b).matrix};
		}
		std::vector<std::string> names;
		if (!args.product.empty())
			names.push_back(args.product);
		else
			for (const auto &[name, op] : a.products)
				names.push_back(name);
		CheckReport rep("alpha_derivation");
		oracle::Failures f;
		for (const auto &name : names) {
			rep.merge(check_alpha_derivation(d, a, name));
			if (orc)
				f.merge(oracle::alpha_derivation(d, a, name));
		}
		if (orc)
			expected = f;
		return finish_check(io, rep, expected);
	}
	if (kind == "two-nilpotent") {
		if (orc)
			expected = oracle::two_nilpotent(a);
		return finish_check(io, check_2_nilpotent(a), expected);
	}
	if (kind == "scalar-cocycle") {
		const auto m = mono_view(a);
		const ScalarForm form{require_operator(doc, "B", b).matrix};
		if (orc)
			expected = oracle::scalar_cocycle(m, form.matrix);
		return finish_check(io, check_scalar_cocycle(m, form), expected);
	}
	throw InputError("unknown --kind '" + kind + "'");
}

// ---- cocycles ---------------------------------------------------------------

std::string term_text(const Rational &c, std::size_t k)
{
	const std::string e = "e" + std::to_string(k + 1);
	if (c == 1)
		return e;
	if (c == -1)
		return "-" + e;
	return to_string(c) + " " + e;
}

int cmd_cocycles(const Io &io, const std::string &file, bool scalar)
{
	const auto b = bindings_of(io.common);
	const auto a = mono_view(parse_algebra(read_file(file), b));
	Json j;
	std::ostringstream os;
	std::size_t dim = 0;
	if (scalar) {
		const auto basis = scalar_cocycle_space(a, {io.common.strict});
		dim = basis.size();
		j["space"] = "scalar";
		j["dimension"] = dim;
		j["basis"] = scalar_basis_to_json(basis);
		Json nd = Json::array();
		for (const auto &f : basis)
			nd.push_back(is_nondegenerate(f));
		j["nondegenerate"] = std::move(nd);
		os << "scalar cocycle space: dimension " << dim << "\n";
		for (std::size_t i = 0; i < basis.size(); ++i) {
			os << "  B" << i + 1 << (is_nondegenerate(basis[i]) ? " (nondegenerate)" : "") << ":\n";
			for (std::size_t r = 0; r < basis[i].dim(); ++r) {
				os << "   ";
				for (std::size_t c = 0; c < basis[i].dim(); ++c)
					os << " " << to_string(basis[i].matrix(r, c));
				os << "\n";
			}
		}
	} else {
		const auto basis = vector_cocycle_space(a);
		dim = basis.size();
		j["space"] = "vector";
		j["dimension"] = dim;
		j["basis"] = cocycle_basis_to_json(basis);
		os << "vector cocycle space: dimension " << dim << "\n";
		for (std::size_t i = 0; i < basis.size(); ++i) {
			os << "  w" << i + 1 << ":";
			const auto &w = basis[i].coeffs;
			for (std::size_t p = 0; p < a.dim; ++p)
				for (std::size_t q = 0; q < a.dim; ++q) {
					std::string terms;
					for (std::size_t k = 0; k < a.dim; ++k)
						if (w(p, q, k) != 0)
							terms += (terms.empty() ? "" : " + ") + term_text(w(p, q, k), k);
					if (!terms.empty())
						os << "  w(e" << p + 1 << ",e" << q + 1 << ") = " << terms << ";";
				}
			os << "\n";
		}
	}
	bool oracle_ok = true;
	if (io.common.oracle) {
		const auto od = scalar ? oracle::scalar_cocycle_dimension(a) : oracle::vector_cocycle_dimension(a);
		oracle_ok = od == dim;
		j["oracle_dimension"] = od;
		os << "oracle: " << (oracle_ok ? "agrees" : "DISAGREES (" + std::to_string(od) + ")") << "\n";
	}
	emit(io, j, os.str());
	return oracle_ok ? kOk : kCheckFailed;
}

// ---- nilpotency -------------------------------------------------------------

std::string series_text(const std::vector<Subspace> &s)
{
	std::string out;
	for (const auto &t : s)
		out += (out.empty() ? "" : ", ") + std::to_string(t.dim());
	return "dims " + out;
}

std::string nil_text(const NilpotencyResult &r)
{
	return r.nilpotent ? "nilpotent, index " + std::to_string(*r.index) : "not nilpotent";
}

int cmd_nilpotency(const Io &io, const std::string &file)
{
	const auto a = parse_algebra(read_file(file), bindings_of(io.common));
	const auto rs = right_series(a), ls = left_series(a), fs = full_series(a);
	const auto full = is_nilpotent(a), right = is_right_nilpotent(a), left = is_left_nilpotent(a);
	const auto eq = check_series_equality(a);
	const auto incl = check_lemma_inclusions(a);
	const auto two = check_2_nilpotent(a);
	const auto one = check_onesided_nilpotency_theorem(a);
	const auto inv = check_alpha_invariance(a);

	Json j;
	j["right_series"] = series_to_json(rs);
	j["left_series"] = series_to_json(ls);
	j["full_series"] = series_to_json(fs);
	j["nilpotent"] = nilpotency_to_json(full);
	j["right_nilpotent"] = nilpotency_to_json(right);
	j["left_nilpotent"] = nilpotency_to_json(left);
	Json parts = Json::object();
	for (const auto &[name, op] : a.products)
		parts[name] = nilpotency_to_json(is_nilpotent(single_product_algebra(a, name)));
	j["single_product"] = std::move(parts);
	j["series_equality"] = to_json(eq);
	j["inclusions"] = to_json(incl);
	j["two_nilpotent"] = to_json(two);
	j["onesided_theorem"] = to_json(one);
	j["alpha_invariance"] = to_json(inv);

	std::ostringstream os;
	os << "right series: " << series_text(rs) << " (" << nil_text(right) << ")\n";
	os << "left series:  " << series_text(ls) << " (" << nil_text(left) << ")\n";
	os << "full series:  " << series_text(fs) << " (" << nil_text(full) << ")\n";
	os << to_text(eq) << to_text(incl) << to_text(two, 5) << to_text(one) << to_text(inv);

	bool oracle_ok = true;
	if (io.common.oracle) {
		const auto v = oracle::nilpotency(a);
		oracle_ok = v.full == full.index && v.right == right.index && v.left == left.index &&
		            oracle::agrees(two, oracle::two_nilpotent(a));
		j["oracle"] = oracle_ok ? "agrees" : "disagrees";
		os << "oracle: " << (oracle_ok ? "agrees" : "DISAGREES") << "\n";
	}
	emit(io, j, os.str());
	return oracle_ok ? kOk : kCheckFailed;
}

// ---- induce -----------------------------------------------------------------

struct InduceArgs {
	std::string file;
	std::string from;
	std::string module;
};

int cmd_induce(const Io &io, const InduceArgs &args)
{
	const auto b = bindings_of(io.common);
	const auto doc = load_json(read_file(args.file));
	const auto a = algebra_from_json(doc, b);
	const auto m = mono_view(a);
	const ConstructionOptions opts{io.common.strict};
	HomAlgebra out;
	std::optional<CheckReport> hom;
	if (args.from == "rb") {
		const auto r = require_operator(doc, "R", b);
		out = induced_rhizaform_from_rb(r, m, opts);
		hom = check_homomorphism(r, sum_algebra(out), m);
	} else if (args.from == "o-operator") {
		const auto t = require_operator(doc, "T", b);
		out = induced_rhizaform_from_o_operator(t, m, module_for_rhizaform(args.module.empty() ? "file" : args.module, doc, a, b), opts);
		hom = check_homomorphism(t, sum_algebra(out), m);
	} else if (args.from == "compatible") {
		const auto t = require_operator(doc, "T", b);
		out = compatible_from_invertible_o_operator(t, m, module_for_rhizaform(args.module.empty() ? "file" : args.module, doc, a, b), opts);
	} else if (args.from == "cocycle") {
		out = rhizaform_from_cocycle(m, {require_operator(doc, "B", b).matrix}, opts);
	} else {
		throw InputError("--from must be rb, o-operator, compatible or cocycle");
	}
	const auto rep = check_rhizaform(out);
	// These two constructions promise a splitting of the source product.
	const bool transports = args.from == "compatible" || args.from == "cocycle";
	const bool splits = !transports || sum_product(out) == m.mul();
	Json j;
	j["algebra"] = algebra_to_json(out);
	j["rhizaform"] = to_json(rep);
	if (hom)
		j["homomorphism"] = to_json(*hom);
	if (transports)
		j["sum_equals_source"] = splits;
	std::string text = serialize_algebra(out) + to_text(rep);
	if (hom)
		text += to_text(*hom);
	if (transports)
		text += std::string("sum equals source product: ") + (splits ? "yes" : "no") + "\n";
	emit(io, j, text);
	const bool hom_ok = !hom || hom->passed();
	return (rep.passed() && splits && hom_ok) || !io.common.strict ? kOk : kCheckFailed;
}

// ---- family -----------------------------------------------------------------

// Family files carry "omega" and optionally "dim"; these read them with
// the same error style as the rest of the tool.
const Json &require_omega(const Json &doc)
{
	auto it = doc.find("omega");
	if (it == doc.end())
		throw InputError("family input has no \"omega\" section");
	return *it;
}

std::size_t require_dim(const Json &doc)
{
	auto it = doc.find("dim");
	if (it == doc.end() || !it->is_number_unsigned())
		throw InputError("input needs a positive integer \"dim\"");
	return it->get<std::size_t>();
}

struct FamilyArgs {
	std::string file;
	std::string check;
	bool induce = false;
	bool collapse = false;
	bool associated = false;
};

int cmd_family(const Io &io, const FamilyArgs &args)
{
	const auto b = bindings_of(io.common);
	const auto doc = load_json(read_file(args.file));
	const bool orc = io.common.oracle;
	Json j;
	std::string text;
	bool ok = true;
	bool oracle_ok = true;
	auto add = [&](const char *key, const CheckReport &rep, const std::optional<oracle::Failures> &expected) {
		Json r = to_json(rep);
		std::string t = to_text(rep);
		if (expected)
			oracle_ok = attach_oracle(r, t, rep, *expected) && oracle_ok;
		j[key] = std::move(r);
		text += t;
		ok = ok && rep.passed();
	};

	auto which = args.check;
	if (which.empty() || which == "auto")
		which = doc.contains("R") ? "rb" : doc.contains("star") ? "anti-associative" : "rhizaform";

	const auto omega = semigroup_from_json(require_omega(doc));
	add("semigroup", check_semigroup(omega), std::nullopt);

	if (which == "semigroup") {
		// nothing further
	} else if (which == "rb") {
		const auto a = mono_view(algebra_from_json(doc, b));
		const auto rf = rb_family_from_json(doc, a.dim, b);
		add("rb_family", check_rb_family(rf, a), orc ? std::optional(oracle::rb_family(rf, a)) : std::nullopt);
		if (args.induce) {
			const auto f = induced_family_rhizaform(rf, a, {io.common.strict});
			j["induced"] = family_algebra_to_json(f);
			add("induced_check", check_rhizaform_family(f),
			    orc ? std::optional(oracle::rhizaform_family(f)) : std::nullopt);
		}
		if (args.collapse) {
			const auto [big, r] = tensor_collapse(a, rf);
			j["collapsed"] = algebra_to_json(big);
			j["collapsed_R"] = matrix_to_json(r.matrix);
			add("collapsed_rota_baxter", check_rota_baxter(r, big),
			    orc ? std::optional(oracle::rota_baxter(r, big)) : std::nullopt);
		}
	} else if (which == "anti-associative") {
		const auto n = require_dim(doc);
		const auto env = effective_bindings(doc, b);
		const LinearMap alpha{matrix_from_json(doc.at("alpha"), env, "alpha")};
		const auto p = family_products_from_json(doc, n, b);
		add("anti_associative_family", check_anti_associative_family(p, alpha),
		    orc ? std::optional(oracle::anti_associative_family(p, alpha)) : std::nullopt);
	} else if (which == "rhizaform" || which == "plain") {
		const auto f = family_algebra_from_json(doc, b);
		if (which == "plain") {
			// Structure map dropped: the plain family axioms.
			auto g = f;
			g.alpha = LinearMap::identity(f.dim);
			add("plain_rhizaform_family", check_rhizaform_family(g),
			    orc ? std::optional(oracle::plain_rhizaform_family(f)) : std::nullopt);
		} else {
			add("rhizaform_family", check_rhizaform_family(f),
			    orc ? std::optional(oracle::rhizaform_family(f)) : std::nullopt);
		}
		if (args.associated) {
			const auto p = associated_family(f);
			Json star = Json::object();
			for (std::size_t l = 0; l < p.omega.size; ++l)
				for (std::size_t w = 0; w < p.omega.size; ++w)
					star[std::to_string(l) + "," + std::to_string(w)] = bilinear_to_json(p.at(l, w));
			j["associated"] = std::move(star);
			add("associated_check", check_anti_associative_family(p, f.alpha),
			    orc ? std::optional(oracle::anti_associative_family(p, f.alpha)) : std::nullopt);
		}
	} else {
		throw InputError("--check must be auto, semigroup, rb, rhizaform, plain or anti-associative");
	}
	if (orc)
		j["oracle"] = oracle_ok ? "agrees" : "disagrees";
	emit(io, j, text);
	if (!oracle_ok)
		return kCheckFailed;
	return ok || !io.common.strict ? kOk : kCheckFailed;
}

// ---- catalog ----------------------------------------------------------------

int cmd_catalog_list(const Io &io)
{
	Json j = Json::array();
	std::ostringstream os;
	for (const auto &e : catalog_entries()) {
		Json x;
		x["id"] = e.id;
		x["dim"] = e.dim;
		x["tag"] = e.tag;
		x["notes"] = e.notes;
		j.push_back(std::move(x));
		os << e.id << "  (" << e.tag << ")\n";
	}
	emit(io, j, os.str());
	return kOk;
}

int cmd_catalog_show(const Io &io, const std::string &id)
{
	const auto a = load_entry(id, bindings_of(io.common));
	emit(io, algebra_to_json(a), serialize_algebra(a));
	return kOk;
}

int cmd_catalog_verify(const Io &io, std::optional<std::size_t> dim, const std::string &filter)
{
	VerifyOptions opts;
	opts.oracle = io.common.oracle;
	opts.dim = dim;
	opts.filter = filter;
	const auto s = verify_all(bindings_of(io.common), opts);
	emit(io, to_json(s), to_text(s));
	return s.oracle_agreement() ? kOk : kCheckFailed;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Exact checker for Hom-rhizaform algebras and related structures", "hrz"};
	app.require_subcommand(1);
	app.fallthrough();

	Common common;
	app.add_option("--param", common.params, "Parameter binding name=p/q (repeatable)")->allow_extra_args(false);
	app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
	app.add_flag("--strict,!--no-strict", common.strict, "Fail on violated hypotheses and failed checks");
	app.add_flag("--oracle", common.oracle, "Cross-check verdicts with the brute-force evaluator");

	std::function<int(const Io &)> action;

	CheckArgs check;
	auto *c = app.add_subcommand("check", "Check the identities of one structure");
	c->add_option("file", check.file, "Algebra file")->required();
	c->add_option("--kind", check.kind,
	              "rhizaform, dendriform, anti-associative, multiplicativity, jacobi-jordan, "
	              "pre-jacobi-jordan, bimodule, o-operator, rota-baxter, homomorphism, derivation, "
	              "two-nilpotent, scalar-cocycle");
	c->add_option("--module", check.module, "regular, dual-regular, rhizaform, dual-rhizaform or file");
	c->add_option("--product", check.product, "Product for --kind=derivation");
	c->add_option("--inner", check.inner, "Build the derivation from the \"z\" vector: star or mixed");
	c->add_option("--target", check.target, "Target algebra file for --kind=homomorphism");
	c->callback([&] { action = [&](const Io &io) { return cmd_check(io, check); }; });

	std::string coc_file;
	bool coc_scalar = false;
	auto *co = app.add_subcommand("cocycles", "Basis of the cocycle space");
	co->add_option("file", coc_file, "Algebra file")->required();
	co->add_flag("--scalar", coc_scalar, "Scalar-valued forms");
	co->add_flag("--vector", "Algebra-valued forms (default)");
	co->callback([&] { action = [&](const Io &io) { return cmd_cocycles(io, coc_file, coc_scalar); }; });

	std::string nil_file;
	auto *ni = app.add_subcommand("nilpotency", "Power series and nilpotency");
	ni->add_option("file", nil_file, "Algebra file")->required();
	ni->callback([&] { action = [&](const Io &io) { return cmd_nilpotency(io, nil_file); }; });

	InduceArgs induce;
	auto *in = app.add_subcommand("induce", "Build a rhizaform algebra from an operator or a form");
	in->add_option("file", induce.file, "Algebra file with R, T (+ bimodule) or B")->required();
	in->add_option("--from", induce.from, "rb, o-operator, compatible or cocycle")->required();
	in->add_option("--module", induce.module, "regular, dual-regular, rhizaform, dual-rhizaform or file");
	in->callback([&] { action = [&](const Io &io) { return cmd_induce(io, induce); }; });

	FamilyArgs family;
	auto *fa = app.add_subcommand("family", "Semigroup-indexed structures");
	fa->add_option("file", family.file, "Family file")->required();
	fa->add_option("--check", family.check, "auto, semigroup, rb, rhizaform, plain or anti-associative");
	fa->add_flag("--induce", family.induce, "Induce the rhizaform family from a Rota-Baxter family");
	fa->add_flag("--collapse", family.collapse, "Collapse a Rota-Baxter family onto A (x) K[Omega]");
	fa->add_flag("--associated", family.associated, "Associated anti-associative family");
	fa->callback([&] { action = [&](const Io &io) { return cmd_family(io, family); }; });

	auto *ca = app.add_subcommand("catalog", "Embedded classification entries");
	ca->require_subcommand(1);
	auto *cl = ca->add_subcommand("list", "List entries");
	cl->callback([&] { action = [&](const Io &io) { return cmd_catalog_list(io); }; });
	std::string show_id;
	auto *cs = ca->add_subcommand("show", "Print one entry in the algebra format");
	cs->add_option("id", show_id, "Entry id, e.g. d2.A1")->required();
	cs->callback([&] { action = [&](const Io &io) { return cmd_catalog_show(io, show_id); }; });
	std::optional<std::size_t> verify_dim;
	std::string verify_filter;
	auto *cv = ca->add_subcommand("verify", "Check every entry");
	cv->add_option("--dim", verify_dim, "Only entries of this dimension");
	cv->add_option("--filter", verify_filter, "Only ids containing this text");
	cv->callback([&] { action = [&](const Io &io) { return cmd_catalog_verify(io, verify_dim, verify_filter); }; });
	for (auto *sub : {cl, cs, cv})
		sub->fallthrough();
	ca->fallthrough();

	try {
		std::vector<std::string> rev(args.rbegin(), args.rend());
		app.parse(rev);
	} catch (const CLI::CallForHelp &) {
		out << app.help();
		return kOk;
	} catch (const CLI::CallForAllHelp &) {
		out << app.help("", CLI::AppFormatMode::All);
		return kOk;
	} catch (const CLI::ParseError &e) {
		err << "hrz: " << e.what() << "\n";
		return kInputError;
	}

	const Io io{out, err, common};
	try {
		return action(io);
	} catch (const PreconditionFailed &e) {
		err << "hrz: " << e.what() << "\n";
		return kCheckFailed;
	} catch (const Singular &e) {
		err << "hrz: " << e.what() << "\n";
		return kCheckFailed;
	} catch (const Error &e) {
		err << "hrz: " << e.what() << "\n";
		return kInputError;
	} catch (const nlohmann::json::exception &e) {
		err << "hrz: malformed input: " << e.what() << "\n";
		return kInputError;
	}
}

} // namespace hrz::cli
