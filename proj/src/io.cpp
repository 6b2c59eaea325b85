#include "hrz/io.hpp"

#include <cctype>
#include <set>
#include <tuple>

#include "hrz/errors.hpp"

namespace hrz {

Json load_json(std::string_view text)
{
	try {
		return Json::parse(text.begin(), text.end());
	} catch (const nlohmann::json::parse_error &e) {
		throw ParseError(e.byte, e.what());
	}
}

namespace {

bool is_identifier(std::string_view s)
{
	if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
		return false;
	for (char c : s)
		if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
			return false;
	return true;
}

std::string_view trim(std::string_view s)
{
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
		s.remove_prefix(1);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.remove_suffix(1);
	return s;
}

Rational lookup(std::string_view name, const Bindings &bindings)
{
	auto it = bindings.find(std::string(name));
	if (it == bindings.end())
		throw UnboundParameter(std::string(name));
	return it->second;
}

[[noreturn]] void fail(const std::string &path, const std::string &msg)
{
	throw ParseError(path + ": " + msg);
}

Rational coefficient(const Json &j, const Bindings &bindings, const std::string &path)
{
	if (j.is_string()) {
		try {
			return parse_coefficient(j.get<std::string>(), bindings);
		} catch (const ParseError &e) {
			fail(path, e.what());
		}
	}
	if (j.is_number_integer())
		return j.is_number_unsigned() ? Rational(std::to_string(j.get<std::uint64_t>()))
		                              : Rational(std::to_string(j.get<std::int64_t>()));
	if (j.is_number_float())
		fail(path, "decimal numbers are not accepted; write \"p/q\"");
	fail(path, "expected a rational string or integer");
}

std::size_t index_value(const Json &j, std::size_t n, const std::string &path)
{
	if (!j.is_number_integer())
		fail(path, "expected an integer basis index");
	const auto v = j.get<std::int64_t>();
	if (v < 1 || static_cast<std::size_t>(v) > n)
		fail(path, "basis index " + std::to_string(v) + " outside 1.." + std::to_string(n));
	return static_cast<std::size_t>(v - 1);
}

std::size_t count_value(const Json &j, const std::string &path)
{
	if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
		fail(path, "expected a non-negative integer");
	return static_cast<std::size_t>(j.get<std::int64_t>());
}

const Json &require(const Json &doc, const char *key, const std::string &path)
{
	if (!doc.is_object())
		fail(path, "expected an object");
	auto it = doc.find(key);
	if (it == doc.end())
		fail(path, std::string("missing field \"") + key + "\"");
	return *it;
}

BilinearOp product_from_json(const Json &j, std::size_t n, const Bindings &bindings, const std::string &path)
{
	if (!j.is_array())
		fail(path, "expected an array of [i, j, k, coefficient] entries");
	BilinearOp op(n);
	std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
	for (std::size_t e = 0; e < j.size(); ++e) {
		const auto p = path + "[" + std::to_string(e) + "]";
		const auto &t = j[e];
		if (!t.is_array() || t.size() != 4)
			fail(p, "expected [i, j, k, coefficient]");
		const auto i = index_value(t[0], n, p);
		const auto jj = index_value(t[1], n, p);
		const auto k = index_value(t[2], n, p);
		if (!seen.insert({i, jj, k}).second)
			fail(p, "duplicate entry for (" + std::to_string(i + 1) + ", " + std::to_string(jj + 1) + ", " +
			            std::to_string(k + 1) + ")");
		op(i, jj, k) = coefficient(t[3], bindings, p);
	}
	return op;
}

Matrix square_matrix(const Json &j, std::size_t n, const Bindings &bindings, const std::string &path)
{
	auto m = matrix_from_json(j, bindings, path);
	if (m.rows() != n || m.cols() != n)
		fail(path, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
	return m;
}

} // namespace

std::pair<std::string, Rational> parse_binding(std::string_view text)
{
	const auto eq = text.find('=');
	if (eq == std::string_view::npos)
		throw ParseError("binding must look like name=p/q, got '" + std::string(text) + "'");
	const auto name = trim(text.substr(0, eq));
	if (!is_identifier(name))
		throw ParseError("invalid parameter name '" + std::string(name) + "'");
	return {std::string(name), parse_rational(trim(text.substr(eq + 1)))};
}

Rational parse_coefficient(std::string_view text, const Bindings &bindings)
{
	const auto s = trim(text);
	if (s.empty())
		throw ParseError("empty coefficient");
	if (const auto star = s.find('*'); star != std::string_view::npos) {
		const auto sym = trim(s.substr(star + 1));
		if (!is_identifier(sym))
			throw ParseError("expected a parameter name after '*' in '" + std::string(s) + "'");
		return parse_rational(trim(s.substr(0, star))) * lookup(sym, bindings);
	}
	if (s.front() == '-' && is_identifier(s.substr(1)))
		return -lookup(s.substr(1), bindings);
	if (is_identifier(s))
		return lookup(s, bindings);
	return parse_rational(s);
}

Matrix matrix_from_json(const Json &j, const Bindings &bindings, const std::string &path)
{
	if (!j.is_array())
		fail(path, "expected a matrix (array of rows)");
	if (j.empty())
		return Matrix(0, 0);
	std::size_t cols = 0;
	std::vector<Rational> entries;
	for (std::size_t r = 0; r < j.size(); ++r) {
		const auto p = path + "[" + std::to_string(r) + "]";
		if (!j[r].is_array())
			fail(p, "expected a row array");
		if (r == 0)
			cols = j[r].size();
		else if (j[r].size() != cols)
			fail(p, "ragged matrix rows");
		for (std::size_t c = 0; c < cols; ++c)
			entries.push_back(coefficient(j[r][c], bindings, p + "[" + std::to_string(c) + "]"));
	}
	return Matrix(j.size(), cols, std::move(entries));
}

Vector vector_from_json(const Json &j, const Bindings &bindings, const std::string &path)
{
	if (!j.is_array())
		fail(path, "expected a vector");
	Vector v;
	for (std::size_t i = 0; i < j.size(); ++i)
		v.push_back(coefficient(j[i], bindings, path + "[" + std::to_string(i) + "]"));
	return v;
}

Bindings effective_bindings(const Json &doc, const Bindings &bindings)
{
	Bindings out;
	if (doc.is_object()) {
		if (auto it = doc.find("params"); it != doc.end()) {
			if (!it->is_object())
				fail("params", "expected an object of name: rational");
			for (const auto &[name, val] : it->items()) {
				if (!is_identifier(name))
					fail("params", "invalid parameter name '" + name + "'");
				out[name] = coefficient(val, {}, "params." + name);
			}
		}
	}
	for (const auto &[k, v] : bindings)
		out[k] = v;
	return out;
}

HomAlgebra algebra_from_json(const Json &doc, const Bindings &bindings)
{
	if (!doc.is_object())
		fail("$", "expected an object");
	const auto env = effective_bindings(doc, bindings);
	const auto n = count_value(require(doc, "dim", "$"), "dim");
	if (n == 0)
		fail("dim", "dimension must be positive");

	AlgebraKind kind;
	if (auto it = doc.find("kind"); it != doc.end()) {
		if (*it == "rhizaform")
			kind = AlgebraKind::Rhizaform;
		else if (*it == "mono")
			kind = AlgebraKind::Mono;
		else
			fail("kind", "expected \"rhizaform\" or \"mono\"");
	} else {
		kind = doc.contains("mul") ? AlgebraKind::Mono : AlgebraKind::Rhizaform;
	}
	if (kind == AlgebraKind::Mono && (doc.contains("succ") || doc.contains("prec")))
		fail("$", "a mono algebra carries only \"mul\"");
	if (kind == AlgebraKind::Rhizaform && doc.contains("mul"))
		fail("$", "a rhizaform algebra carries \"succ\" and \"prec\", not \"mul\"");

	HomAlgebra a;
	a.dim = n;
	a.kind = kind;
	a.alpha = {square_matrix(require(doc, "alpha", "$"), n, env, "alpha")};
	if (auto it = doc.find("beta"); it != doc.end())
		a.beta = LinearMap{square_matrix(*it, n, env, "beta")};
	auto product = [&](const char *name) {
		auto it = doc.find(name);
		a.products[name] = it == doc.end() ? BilinearOp(n) : product_from_json(*it, n, env, name);
	};
	if (kind == AlgebraKind::Mono) {
		product(kMul);
	} else {
		product(kSucc);
		product(kPrec);
	}
	a.params = env;
	validate(a);
	return a;
}

HomAlgebra parse_algebra(std::string_view text, const Bindings &bindings)
{
	return algebra_from_json(load_json(text), bindings);
}

Json bilinear_to_json(const BilinearOp &op)
{
	Json out = Json::array();
	const auto n = op.dim();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				if (op(i, j, k) != 0)
					out.push_back(Json::array({i + 1, j + 1, k + 1, to_string(op(i, j, k))}));
	return out;
}

Json algebra_to_json(const HomAlgebra &a)
{
	Json j;
	j["dim"] = a.dim;
	j["kind"] = a.kind == AlgebraKind::Mono ? "mono" : "rhizaform";
	j["alpha"] = matrix_to_json(a.alpha.matrix);
	if (a.beta)
		j["beta"] = matrix_to_json(a.beta->matrix);
	for (const auto &[name, op] : a.products)
		j[name] = bilinear_to_json(op);
	if (!a.params.empty()) {
		Json params = Json::object();
		for (const auto &[k, v] : a.params)
			params[k] = to_string(v);
		j["params"] = std::move(params);
	}
	return j;
}

namespace {

bool is_flat(const Json &j)
{
	for (const auto &x : j)
		if (x.is_structured())
			return false;
	return true;
}

void format_into(std::string &out, const Json &j, std::size_t depth)
{
	const std::string pad(2 * (depth + 1), ' ');
	if (j.is_object() && !j.empty()) {
		out += "{\n";
		std::size_t i = 0;
		for (const auto &[k, v] : j.items()) {
			out += pad + Json(k).dump() + ": ";
			format_into(out, v, depth + 1);
			out += ++i < j.size() ? ",\n" : "\n";
		}
		out += std::string(2 * depth, ' ') + "}";
	} else if (j.is_array() && !j.empty() && !is_flat(j)) {
		out += "[\n";
		for (std::size_t i = 0; i < j.size(); ++i) {
			out += pad;
			format_into(out, j[i], depth + 1);
			out += i + 1 < j.size() ? ",\n" : "\n";
		}
		out += std::string(2 * depth, ' ') + "]";
	} else if (j.is_array()) {
		out += "[";
		for (std::size_t i = 0; i < j.size(); ++i)
			out += (i ? ", " : "") + j[i].dump();
		out += "]";
	} else {
		out += j.dump();
	}
}

} // namespace

std::string format_json(const Json &j)
{
	std::string out;
	format_into(out, j, 0);
	return out + "\n";
}

std::string serialize_algebra(const HomAlgebra &a) { return format_json(algebra_to_json(a)); }

std::optional<Bimodule> bimodule_from_json(const Json &doc, std::size_t alg_dim, const Bindings &bindings)
{
	auto it = doc.find("bimodule");
	if (it == doc.end())
		return std::nullopt;
	const auto &b = *it;
	const auto env = effective_bindings(doc, bindings);
	Bimodule m;
	m.alg_dim = alg_dim;
	m.mod_dim = count_value(require(b, "dim", "bimodule"), "bimodule.dim");
	auto actions = [&](const char *key) {
		const auto path = std::string("bimodule.") + key;
		const auto &arr = require(b, key, "bimodule");
		if (!arr.is_array() || arr.size() != alg_dim)
			fail(path, "expected one matrix per algebra basis vector (" + std::to_string(alg_dim) + ")");
		std::vector<Matrix> out;
		for (std::size_t i = 0; i < arr.size(); ++i)
			out.push_back(square_matrix(arr[i], m.mod_dim, env, path + "[" + std::to_string(i) + "]"));
		return out;
	};
	m.left = actions("left");
	m.right = actions("right");
	m.beta = square_matrix(require(b, "beta", "bimodule"), m.mod_dim, env, "bimodule.beta");
	return m;
}

std::optional<LinearOperator> operator_from_json(const Json &doc, const std::string &key, const Bindings &bindings)
{
	auto it = doc.find(key);
	if (it == doc.end())
		return std::nullopt;
	return LinearOperator{matrix_from_json(*it, effective_bindings(doc, bindings), key)};
}

Semigroup semigroup_from_json(const Json &j)
{
	Semigroup s;
	s.size = count_value(require(j, "size", "omega"), "omega.size");
	if (s.size == 0)
		fail("omega.size", "semigroup must be nonempty");
	const auto &t = require(j, "table", "omega");
	if (!t.is_array() || t.size() != s.size)
		fail("omega.table", "expected " + std::to_string(s.size) + " rows");
	for (std::size_t r = 0; r < s.size; ++r) {
		const auto p = "omega.table[" + std::to_string(r) + "]";
		if (!t[r].is_array() || t[r].size() != s.size)
			fail(p, "expected " + std::to_string(s.size) + " entries");
		std::vector<std::size_t> row;
		for (const auto &v : t[r]) {
			const auto x = count_value(v, p);
			if (x >= s.size)
				fail(p, "element " + std::to_string(x) + " outside 0.." + std::to_string(s.size - 1));
			row.push_back(x);
		}
		s.table.push_back(std::move(row));
	}
	return s;
}

Json semigroup_to_json(const Semigroup &s)
{
	Json j;
	j["size"] = s.size;
	j["table"] = s.table;
	return j;
}

namespace {

const Json &keyed(const Json &section, const std::string &key, const std::string &path)
{
	if (!section.is_object())
		fail(path, "expected an object keyed by semigroup element");
	auto it = section.find(key);
	if (it == section.end())
		fail(path, "missing entry \"" + key + "\"");
	return *it;
}

} // namespace

FamilyAlgebra family_algebra_from_json(const Json &doc, const Bindings &bindings)
{
	const auto env = effective_bindings(doc, bindings);
	FamilyAlgebra f;
	f.dim = count_value(require(doc, "dim", "$"), "dim");
	f.omega = semigroup_from_json(require(doc, "omega", "$"));
	f.alpha = {square_matrix(require(doc, "alpha", "$"), f.dim, env, "alpha")};
	for (std::size_t l = 0; l < f.omega.size; ++l) {
		const auto key = std::to_string(l);
		for (const char *name : {kSucc, kPrec}) {
			const auto path = std::string(name) + "." + key;
			auto it = doc.find(name);
			auto op = it == doc.end() ? BilinearOp(f.dim)
			                          : product_from_json(keyed(*it, key, name), f.dim, env, path);
			(std::string(name) == kSucc ? f.succ : f.prec).push_back(std::move(op));
		}
	}
	validate(f);
	return f;
}

Json family_algebra_to_json(const FamilyAlgebra &f)
{
	Json j;
	j["dim"] = f.dim;
	j["omega"] = semigroup_to_json(f.omega);
	j["alpha"] = matrix_to_json(f.alpha.matrix);
	Json succ = Json::object(), prec = Json::object();
	for (std::size_t l = 0; l < f.omega.size; ++l) {
		succ[std::to_string(l)] = bilinear_to_json(f.succ[l]);
		prec[std::to_string(l)] = bilinear_to_json(f.prec[l]);
	}
	j["succ"] = std::move(succ);
	j["prec"] = std::move(prec);
	return j;
}

RBFamily rb_family_from_json(const Json &doc, std::size_t dim, const Bindings &bindings)
{
	const auto env = effective_bindings(doc, bindings);
	RBFamily rf;
	rf.omega = semigroup_from_json(require(doc, "omega", "$"));
	const auto &sec = require(doc, "R", "$");
	for (std::size_t l = 0; l < rf.omega.size; ++l) {
		const auto key = std::to_string(l);
		rf.ops.push_back({square_matrix(keyed(sec, key, "R"), dim, env, "R." + key)});
	}
	return rf;
}

FamilyProducts family_products_from_json(const Json &doc, std::size_t dim, const Bindings &bindings)
{
	const auto env = effective_bindings(doc, bindings);
	FamilyProducts p;
	p.omega = semigroup_from_json(require(doc, "omega", "$"));
	const auto &sec = require(doc, "star", "$");
	for (std::size_t l = 0; l < p.omega.size; ++l)
		for (std::size_t w = 0; w < p.omega.size; ++w) {
			const auto key = std::to_string(l) + "," + std::to_string(w);
			auto it = sec.is_object() ? sec.find(key) : sec.end();
			p.ops.push_back(it == sec.end() ? BilinearOp(dim) : product_from_json(*it, dim, env, "star." + key));
		}
	return p;
}

} // namespace hrz
