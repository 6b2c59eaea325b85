#include "hrz/catalog.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>

#include "hrz/axioms.hpp"
#include "hrz/cocycles.hpp"
#include "hrz/errors.hpp"
#include "hrz/oracle.hpp"

namespace hrz {

namespace detail {
struct EmbeddedFile {
	const char *id;
	const char *text;
};
extern const EmbeddedFile kCatalogFiles[];
extern const std::size_t kCatalogFileCount;
} // namespace detail

namespace {

CatalogEntry read_entry(const detail::EmbeddedFile &f)
{
	const auto doc = load_json(f.text);
	CatalogEntry e;
	e.id = doc.at("id").get<std::string>();
	if (e.id != f.id)
		throw ParseError("catalog file " + std::string(f.id) + " declares id " + e.id);
	e.dim = doc.at("dim").get<std::size_t>();
	e.number = std::stoul(e.id.substr(e.id.find(".A") + 2));
	e.tag = doc.at("tag").get<std::string>();
	for (const auto &n : doc.value("notes", Json::array()))
		e.notes.push_back(n.get<std::string>());
	for (const auto &t : doc.value("expected_cocycle", Json::array()))
		e.expected_cocycle.emplace_back(t.at(0).get<std::size_t>(), t.at(1).get<std::size_t>(),
		                                t.at(2).get<std::size_t>(), t.at(3).get<std::string>());
	e.text = f.text;
	return e;
}

std::vector<CatalogEntry> read_all()
{
	std::vector<CatalogEntry> out;
	for (std::size_t i = 0; i < detail::kCatalogFileCount; ++i)
		out.push_back(read_entry(detail::kCatalogFiles[i]));
	std::sort(out.begin(), out.end(),
	          [](const auto &a, const auto &b) { return std::tie(a.dim, a.number) < std::tie(b.dim, b.number); });
	return out;
}

std::string verdict(const NilpotencyResult &r)
{
	return r.nilpotent ? "nilpotent (index " + std::to_string(*r.index) + ")" : "not nilpotent";
}

std::string join(const std::vector<std::string> &xs, const char *sep = ", ")
{
	std::string out;
	for (const auto &x : xs)
		out += (out.empty() ? "" : sep) + x;
	return out;
}

std::string first_residual(const CheckReport &r, const std::string &id)
{
	for (const auto &v : r.violations())
		if (v.identity == id) {
			std::string tuple;
			for (auto b : v.basis)
				tuple += (tuple.empty() ? "" : ",") + std::to_string(b + 1);
			std::string res;
			for (const auto &q : v.residual)
				res += (res.empty() ? "" : ", ") + to_string(q);
			return "(" + tuple + ") residual [" + res + "]";
		}
	return {};
}

} // namespace

const std::vector<CatalogEntry> &catalog_entries()
{
	static const std::vector<CatalogEntry> entries = read_all();
	return entries;
}

const CatalogEntry &find_entry(const std::string &id)
{
	for (const auto &e : catalog_entries())
		if (e.id == id)
			return e;
	throw UnknownEntry(id);
}

HomAlgebra load_entry(const std::string &id, const Bindings &params)
{
	return parse_algebra(find_entry(id).text, params);
}

std::size_t expected_free_parameters(const CatalogEntry &e)
{
	std::set<std::string> symbols;
	for (const auto &t : e.expected_cocycle)
		symbols.insert(std::get<3>(t));
	return symbols.size();
}

EntryReport verify_entry(const std::string &id, const Bindings &params, bool oracle)
{
	const auto &entry = find_entry(id);
	const auto a = load_entry(id, params);

	EntryReport r;
	r.id = entry.id;
	r.dim = entry.dim;
	r.tag = entry.tag;
	r.params = a.params;
	r.notes = entry.notes;

	r.rhizaform = check_rhizaform(a);
	const auto mult_s = check_multiplicativity(a.succ(), a.alpha, "mult_succ");
	const auto mult_p = check_multiplicativity(a.prec(), a.alpha, "mult_prec");
	r.mult_succ = mult_s.passed();
	r.mult_prec = mult_p.passed();
	r.tag_agrees = (entry.tag == "m") == r.multiplicative();

	const auto sum = sum_algebra(a);
	const auto anti = check_hom_anti_associative(sum.mul(), sum.alpha);
	r.sum_anti_associative = anti.passed();

	r.cocycle_dim = vector_cocycle_space(sum).size();
	r.expected_cocycle_dim = expected_free_parameters(entry);

	r.nilpotency = is_nilpotent(a);
	r.right_nilpotency = is_right_nilpotent(a);
	r.left_nilpotency = is_left_nilpotent(a);
	r.series_equality = check_series_equality(a);
	r.lemma_inclusions = check_lemma_inclusions(a);
	r.onesided = check_onesided_nilpotency_theorem(a);

	r.round_trip = parse_algebra(serialize_algebra(a)) == a;

	if (!r.rhizaform.passed())
		for (const auto &idn : r.rhizaform.failed_identities())
			r.findings.push_back("fails " + idn + " at " + first_residual(r.rhizaform, idn));
	if (!r.tag_agrees)
		r.findings.push_back("tagged (" + entry.tag + ") but the products are " +
		                     (r.multiplicative() ? "multiplicative" : "not multiplicative"));
	if (!r.cocycle_agrees())
		r.findings.push_back("cocycle space has dimension " + std::to_string(r.cocycle_dim) + ", table lists " +
		                     std::to_string(r.expected_cocycle_dim) + " free constants");
	if (!r.series_equality.passed())
		r.findings.push_back("right, left and full series differ");
	if (!r.lemma_inclusions.passed())
		r.findings.push_back("power inclusions fail: " + r.lemma_inclusions.violations().front().detail);
	if (!r.onesided.passed())
		r.findings.push_back("one-sided nilpotency biconditional fails");
	if (!r.round_trip)
		r.findings.push_back("serialization does not round-trip");

	if (oracle) {
		r.oracle_checked = true;
		auto expect = [&](bool ok, const std::string &what) {
			if (!ok)
				r.oracle_mismatches.push_back(what);
		};
		expect(oracle::agrees(r.rhizaform, oracle::rhizaform(a)), "rhizaform verdict");
		expect(oracle::agrees(mult_s, oracle::multiplicativity(a.succ(), a.alpha, "mult_succ")), "mult_succ verdict");
		expect(oracle::agrees(mult_p, oracle::multiplicativity(a.prec(), a.alpha, "mult_prec")), "mult_prec verdict");
		expect(oracle::agrees(anti, oracle::anti_associative(sum.mul(), sum.alpha)), "anti-associativity verdict");
		expect(oracle::vector_cocycle_dimension(sum) == r.cocycle_dim, "cocycle dimension");
		const auto nv = oracle::nilpotency(a);
		expect(nv.full == r.nilpotency.index, "nilpotency index");
		expect(nv.right == r.right_nilpotency.index, "right nilpotency index");
		expect(nv.left == r.left_nilpotency.index, "left nilpotency index");
	}
	return r;
}

bool CatalogSummary::oracle_agreement() const
{
	return std::all_of(entries.begin(), entries.end(), [](const auto &e) { return e.oracle_agrees(); });
}

CatalogSummary verify_all(const Bindings &params, const VerifyOptions &opts)
{
	std::vector<std::future<EntryReport>> jobs;
	for (const auto &e : catalog_entries()) {
		if (opts.dim && e.dim != *opts.dim)
			continue;
		if (!opts.filter.empty() && e.id.find(opts.filter) == std::string::npos)
			continue;
		jobs.push_back(std::async(std::launch::async, [id = e.id, &params, o = opts.oracle] {
			return verify_entry(id, params, o);
		}));
	}
	CatalogSummary s;
	for (auto &j : jobs)
		s.entries.push_back(j.get());
	return s;
}

namespace {

Json nil_json(const NilpotencyResult &r) { return nilpotency_to_json(r); }

Json params_json(const Bindings &b)
{
	Json j = Json::object();
	for (const auto &[k, v] : b)
		j[k] = to_string(v);
	return j;
}

} // namespace

Json to_json(const EntryReport &r)
{
	Json j;
	j["id"] = r.id;
	j["dim"] = r.dim;
	j["tag"] = r.tag;
	j["params"] = params_json(r.params);
	j["rhizaform"] = r.rhizaform.passed();
	j["failed_identities"] = r.rhizaform.failed_identities();
	j["mult_succ"] = r.mult_succ;
	j["mult_prec"] = r.mult_prec;
	j["tag_agrees"] = r.tag_agrees;
	j["sum_anti_associative"] = r.sum_anti_associative;
	j["cocycle_dim"] = r.cocycle_dim;
	j["expected_cocycle_dim"] = r.expected_cocycle_dim;
	j["nilpotency"] = nil_json(r.nilpotency);
	j["right_nilpotency"] = nil_json(r.right_nilpotency);
	j["left_nilpotency"] = nil_json(r.left_nilpotency);
	j["series_equality"] = r.series_equality.passed();
	j["lemma_inclusions"] = r.lemma_inclusions.passed();
	j["onesided_theorem"] = r.onesided.passed();
	j["round_trip"] = r.round_trip;
	if (r.oracle_checked) {
		j["oracle_agrees"] = r.oracle_agrees();
		j["oracle_mismatches"] = r.oracle_mismatches;
	}
	j["findings"] = r.findings;
	j["notes"] = r.notes;
	j["rhizaform_report"] = to_json(r.rhizaform);
	return j;
}

Json to_json(const CatalogSummary &s)
{
	Json j;
	j["count"] = s.entries.size();
	j["oracle_agreement"] = s.oracle_agreement();
	Json entries = Json::array();
	for (const auto &e : s.entries)
		entries.push_back(to_json(e));
	j["entries"] = std::move(entries);
	return j;
}

std::string to_text(const EntryReport &r)
{
	std::ostringstream os;
	os << r.id << " (" << r.tag << ")\n";
	os << "  rhizaform:   " << (r.rhizaform.passed() ? "pass" : "FAIL " + join(r.rhizaform.failed_identities()))
	   << "\n";
	os << "  multiplic.:  succ " << (r.mult_succ ? "yes" : "no") << ", prec " << (r.mult_prec ? "yes" : "no")
	   << (r.tag_agrees ? "" : "  [tag disagrees]") << "\n";
	os << "  cocycles:    " << r.cocycle_dim << " (table " << r.expected_cocycle_dim << ")\n";
	os << "  nilpotency:  " << verdict(r.nilpotency) << "; right " << verdict(r.right_nilpotency) << "; left "
	   << verdict(r.left_nilpotency) << "\n";
	if (r.oracle_checked)
		os << "  oracle:      " << (r.oracle_agrees() ? "agrees" : "DISAGREES on " + join(r.oracle_mismatches))
		   << "\n";
	for (const auto &f : r.findings)
		os << "  finding: " << f << "\n";
	for (const auto &n : r.notes)
		os << "  note: " << n << "\n";
	return os.str();
}

std::string to_text(const CatalogSummary &s)
{
	std::ostringstream os;
	os << "id        tag  rhiz  mult  tag=  cocyc  table  nilp   series  incl  1side  oracle\n";
	auto yn = [](bool b) { return b ? "yes" : "no"; };
	for (const auto &e : s.entries) {
		char line[160];
		std::snprintf(line, sizeof line, "%-9s %-4s %-5s %-5s %-5s %-6zu %-6zu %-6s %-7s %-5s %-6s %s\n",
		              e.id.c_str(), e.tag.c_str(), e.rhizaform.passed() ? "pass" : "FAIL", yn(e.multiplicative()),
		              yn(e.tag_agrees), e.cocycle_dim, e.expected_cocycle_dim,
		              e.nilpotency.nilpotent ? std::to_string(*e.nilpotency.index).c_str() : "-",
		              yn(e.series_equality.passed()), yn(e.lemma_inclusions.passed()), yn(e.onesided.passed()),
		              e.oracle_checked ? yn(e.oracle_agrees()) : "skip");
		os << line;
	}
	os << "\n";
	for (const auto &e : s.entries)
		if (!e.findings.empty()) {
			os << e.id << ":\n";
			for (const auto &f : e.findings)
				os << "  " << f << "\n";
		}
	const bool checked = std::any_of(s.entries.begin(), s.entries.end(), [](const auto &e) { return e.oracle_checked; });
	os << s.entries.size() << " entries";
	if (checked)
		os << ", oracle " << (s.oracle_agreement() ? "agrees" : "DISAGREES");
	os << "\n";
	return os.str();
}

} // namespace hrz
