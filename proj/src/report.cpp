#include "hrz/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hrz {

void CheckReport::expect_zero(const std::string &identity, std::vector<std::size_t> basis, Vector residual,
                              std::vector<std::size_t> labels)
{
	if (is_zero(residual))
		return;
	violations_.push_back({identity, std::move(basis), std::move(labels), std::move(residual), {}});
}

void CheckReport::merge(const CheckReport &other)
{
	violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
	notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

bool CheckReport::failed_identity(const std::string &identity) const
{
	return std::any_of(violations_.begin(), violations_.end(),
	                   [&](const Violation &v) { return v.identity == identity; });
}

std::vector<std::string> CheckReport::failed_identities() const
{
	std::vector<std::string> out;
	std::set<std::string> seen;
	for (const auto &v : violations_)
		if (seen.insert(v.identity).second)
			out.push_back(v.identity);
	return out;
}

Json vector_to_json(const Vector &v)
{
	Json a = Json::array();
	for (const auto &x : v)
		a.push_back(to_string(x));
	return a;
}

Json matrix_to_json(const Matrix &m)
{
	Json a = Json::array();
	for (std::size_t r = 0; r < m.rows(); ++r)
		a.push_back(vector_to_json(m.row(r)));
	return a;
}

Json to_json(const CheckReport &r)
{
	Json j;
	j["structure"] = r.structure();
	j["passed"] = r.passed();
	Json vs = Json::array();
	for (const auto &v : r.violations()) {
		Json e;
		e["identity"] = v.identity;
		Json t = Json::array();
		for (auto b : v.basis)
			t.push_back(b + 1);
		e["tuple"] = t;
		if (!v.labels.empty())
			e["omega"] = v.labels;
		e["residual"] = vector_to_json(v.residual);
		if (!v.detail.empty())
			e["detail"] = v.detail;
		vs.push_back(std::move(e));
	}
	j["violations"] = std::move(vs);
	j["notes"] = r.notes();
	return j;
}

std::string to_text(const CheckReport &r, std::size_t max_violations)
{
	std::ostringstream os;
	os << r.structure() << ": " << (r.passed() ? "pass" : "FAIL");
	if (!r.passed())
		os << " (" << r.violations().size() << (r.violations().size() == 1 ? " violation)" : " violations)");
	os << '\n';
	std::size_t shown = 0;
	for (const auto &v : r.violations()) {
		if (shown++ == max_violations) {
			os << "  ... " << (r.violations().size() - max_violations) << " more\n";
			break;
		}
		os << "  " << v.identity;
		if (!v.basis.empty()) {
			os << " (";
			for (std::size_t i = 0; i < v.basis.size(); ++i)
				os << (i ? "," : "") << v.basis[i] + 1;
			os << ")";
		}
		if (!v.labels.empty()) {
			os << " omega(";
			for (std::size_t i = 0; i < v.labels.size(); ++i)
				os << (i ? "," : "") << v.labels[i];
			os << ")";
		}
		if (!v.residual.empty()) {
			os << ": [";
			for (std::size_t i = 0; i < v.residual.size(); ++i)
				os << (i ? ", " : "") << to_string(v.residual[i]);
			os << "]";
		}
		if (!v.detail.empty())
			os << " " << v.detail;
		os << '\n';
	}
	for (const auto &n : r.notes())
		os << "  note: " << n << '\n';
	return os.str();
}

} // namespace hrz
