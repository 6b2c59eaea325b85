#pragma once

// Embedded classification entries of dimension 2 and 3 ("d2.A1" ..
// "d3.A16") and the harness that checks each one.

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hrz/algebra.hpp"
#include "hrz/io.hpp"
#include "hrz/nilpotency.hpp"
#include "hrz/report.hpp"

namespace hrz {

struct CatalogEntry {
	std::string id;
	std::size_t dim = 0;
	std::size_t number = 0; ///< the k in "Ak"
	std::string tag;        ///< "m" or "nm"
	std::vector<std::string> notes;
	/// Listed cocycle components (i, j, k, symbol), 1-based.
	std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::string>> expected_cocycle;
	std::string text; ///< the raw embedded file
};

/// All entries ordered by (dim, number).
const std::vector<CatalogEntry> &catalog_entries();
/// Throws UnknownEntry.
const CatalogEntry &find_entry(const std::string &id);
/// Throws UnknownEntry or UnboundParameter.
HomAlgebra load_entry(const std::string &id, const Bindings &params = {});

/// Number of distinct free constants in the listed cocycle.
std::size_t expected_free_parameters(const CatalogEntry &e);

struct EntryReport {
	std::string id;
	std::size_t dim = 0;
	std::string tag;
	Bindings params;
	std::vector<std::string> notes;

	CheckReport rhizaform;
	bool mult_succ = false;
	bool mult_prec = false;
	bool tag_agrees = false;
	bool sum_anti_associative = false;

	std::size_t cocycle_dim = 0;
	std::size_t expected_cocycle_dim = 0;

	NilpotencyResult nilpotency;
	NilpotencyResult right_nilpotency;
	NilpotencyResult left_nilpotency;
	CheckReport series_equality;
	CheckReport lemma_inclusions;
	CheckReport onesided;

	bool round_trip = false;

	bool oracle_checked = false;
	std::vector<std::string> oracle_mismatches;

	/// Every disagreement with the table data, one line each.
	std::vector<std::string> findings;

	bool multiplicative() const { return mult_succ && mult_prec; }
	bool cocycle_agrees() const { return cocycle_dim == expected_cocycle_dim; }
	bool oracle_agrees() const { return oracle_mismatches.empty(); }
};

struct VerifyOptions {
	bool oracle = true;
	std::optional<std::size_t> dim;
	/// Substring of the entry id; empty selects everything.
	std::string filter;
};

EntryReport verify_entry(const std::string &id, const Bindings &params = {}, bool oracle = true);

struct CatalogSummary {
	std::vector<EntryReport> entries;
	bool oracle_agreement() const;
};

/// Runs verify_entry on every selected entry concurrently; results keep
/// catalog order.
CatalogSummary verify_all(const Bindings &params, const VerifyOptions &opts = {});

Json to_json(const EntryReport &r);
Json to_json(const CatalogSummary &s);
std::string to_text(const EntryReport &r);
std::string to_text(const CatalogSummary &s);

} // namespace hrz
