#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "hrz/exactlin.hpp"

namespace hrz {

using Json = nlohmann::ordered_json;

/// One failing instance of an identity. `basis` holds 0-based basis
/// indices (algebra or module); `labels` holds semigroup element indices
/// for family identities. `residual` is the exact LHS - RHS.
struct Violation {
	std::string identity;
	std::vector<std::size_t> basis;
	std::vector<std::size_t> labels;
	Vector residual;
	std::string detail;
};

class CheckReport {
public:
	CheckReport() = default;
	explicit CheckReport(std::string structure) : structure_(std::move(structure)) {}

	const std::string &structure() const noexcept { return structure_; }
	bool passed() const noexcept { return violations_.empty(); }
	const std::vector<Violation> &violations() const noexcept { return violations_; }
	const std::vector<std::string> &notes() const noexcept { return notes_; }

	void add(Violation v) { violations_.push_back(std::move(v)); }
	/// Records a violation when the residual is nonzero.
	void expect_zero(const std::string &identity, std::vector<std::size_t> basis, Vector residual,
	                 std::vector<std::size_t> labels = {});
	void note(std::string text) { notes_.push_back(std::move(text)); }
	/// Appends every violation and note of `other`.
	void merge(const CheckReport &other);

	bool failed_identity(const std::string &identity) const;
	std::vector<std::string> failed_identities() const;

private:
	std::string structure_;
	std::vector<Violation> violations_;
	std::vector<std::string> notes_;
};

Json vector_to_json(const Vector &v);
Json matrix_to_json(const Matrix &m);
/// Stable field order: structure, passed, violations, notes.
Json to_json(const CheckReport &r);
/// Human-readable rendering; one header line then one line per violation.
std::string to_text(const CheckReport &r, std::size_t max_violations = 20);

} // namespace hrz
