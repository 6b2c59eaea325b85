#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <map>
#include <fstream>
#include <regex>
#include <sstream>

#include "hrz/cli.hpp"
#include "hrz/io.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kSource = HRZ_SOURCE_DIR;

struct Result {
	int rc = -1;
	std::string out;
	std::string err;
};

Result run(std::vector<std::string> args)
{
	std::ostringstream out, err;
	Result r;
	r.rc = hrz::cli::run(args, out, err);
	r.out = out.str();
	r.err = err.str();
	return r;
}

std::string data(const std::string &name) { return (kSource / "tests" / "data" / name).string(); }
std::string entry(const std::string &id) { return (kSource / "data" / "catalog" / "v1" / (id + ".json")).string(); }

std::string slurp(const fs::path &p)
{
	std::ifstream in(p, std::ios::binary);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

} // namespace

// ---- documented examples ----------------------------------------------------

TEST(Cli, CheckA7Passes)
{
	const auto r = run({"check", "--kind=rhizaform", entry("d2.A7")});
	EXPECT_EQ(r.rc, hrz::cli::kOk);
	EXPECT_NE(r.out.find("pass"), std::string::npos);
	EXPECT_TRUE(r.err.empty());
}

TEST(Cli, CatalogVerifyDimTwo)
{
	const auto r = run({"catalog", "verify", "--dim=2", "--param", "eta=1", "--format=structured"});
	ASSERT_EQ(r.rc, hrz::cli::kOk) << r.err;
	const auto j = hrz::load_json(r.out);
	EXPECT_EQ(j["count"], 7);
	EXPECT_EQ(j["entries"].size(), 7u);
}

TEST(Cli, VectorCocyclesOfA1)
{
	const auto r = run({"cocycles", "--vector", entry("d2.A1"), "--format=structured"});
	ASSERT_EQ(r.rc, hrz::cli::kOk) << r.err;
	const auto j = hrz::load_json(r.out);
	EXPECT_EQ(j["dimension"], 2);
	EXPECT_EQ(j["basis"].size(), 2u);
}

// ---- exit statuses ------------------------------------------------------------

TEST(Cli, UsageErrors)
{
	EXPECT_EQ(run({}).rc, hrz::cli::kInputError);
	EXPECT_EQ(run({"frobnicate"}).rc, hrz::cli::kInputError);
	EXPECT_EQ(run({"check"}).rc, hrz::cli::kInputError);
	EXPECT_EQ(run({"check", entry("d2.A7"), "--format=yaml"}).rc, hrz::cli::kInputError);
	const auto r = run({"check", entry("d2.A7"), "--kind=nonsense"});
	EXPECT_EQ(r.rc, hrz::cli::kInputError);
	EXPECT_FALSE(r.err.empty());
	EXPECT_TRUE(r.out.empty());
}

TEST(Cli, HelpGoesToOutput)
{
	const auto r = run({"--help"});
	EXPECT_EQ(r.rc, hrz::cli::kOk);
	EXPECT_NE(r.out.find("catalog"), std::string::npos);
}

TEST(Cli, InputErrors)
{
	EXPECT_EQ(run({"check", data("missing.json")}).rc, hrz::cli::kInputError);
	EXPECT_EQ(run({"check", entry("d3.A4")}).rc, hrz::cli::kInputError);
	EXPECT_EQ(run({"check", entry("d3.A4"), "--param", "eta=oops"}).rc, hrz::cli::kInputError);
	EXPECT_EQ(run({"catalog", "show", "d9.A1"}).rc, hrz::cli::kInputError);
	EXPECT_EQ(run({"check", entry("d2.A7"), "--kind=rota-baxter"}).rc, hrz::cli::kInputError);
	EXPECT_EQ(run({"check", data("rb_a7.json"), "--kind=rhizaform"}).rc, hrz::cli::kInputError);
}

TEST(Cli, StrictFailures)
{
	EXPECT_EQ(run({"check", data("rb_identity_a7.json"), "--kind=rota-baxter"}).rc, hrz::cli::kCheckFailed);
	EXPECT_EQ(run({"check", data("rb_identity_a7.json"), "--kind=rota-baxter", "--no-strict"}).rc, hrz::cli::kOk);
	// Induction refuses an operator that is not Rota-Baxter.
	const auto r = run({"induce", data("rb_identity_a7.json"), "--from=rb"});
	EXPECT_EQ(r.rc, hrz::cli::kCheckFailed);
	EXPECT_FALSE(r.err.empty());
	EXPECT_EQ(run({"induce", data("cocycle_symmetric.json"), "--from=cocycle"}).rc, hrz::cli::kCheckFailed);
	EXPECT_EQ(run({"induce", data("cocycle_ok.json"), "--from=cocycle"}).rc, hrz::cli::kOk);
}

TEST(Cli, CatalogVerifyIgnoresTableDiscrepancies)
{
	const auto r = run({"catalog", "verify", "--param", "eta=1", "--oracle"});
	EXPECT_EQ(r.rc, hrz::cli::kOk);
	EXPECT_NE(r.out.find("d3.A7"), std::string::npos);
	const auto none = run({"catalog", "verify", "--filter=nothing-matches", "--format=structured"});
	EXPECT_EQ(none.rc, hrz::cli::kOk);
	EXPECT_EQ(hrz::load_json(none.out)["count"], 0);
}

TEST(Cli, StructuredOutputIsJsonAndDeterministic)
{
	const std::vector<std::string> args{"nilpotency", entry("d2.A5"), "--format=structured", "--oracle"};
	const auto a = run(args);
	const auto b = run(args);
	ASSERT_EQ(a.rc, hrz::cli::kOk);
	EXPECT_EQ(a.out, b.out);
	EXPECT_TRUE(a.err.empty());
	EXPECT_NO_THROW(hrz::load_json(a.out));
}

// ---- golden files -------------------------------------------------------------

struct Golden {
	const char *name;
	std::vector<std::string> args;
	int rc;
};

std::vector<Golden> goldens()
{
	return {
	    {"check_a7", {"check", entry("d2.A7")}, 0},
	    {"check_a5", {"check", entry("d2.A5"), "--oracle"}, 1},
	    {"check_d3a1_dendriform", {"check", entry("d3.A1"), "--kind=dendriform"}, 1},
	    {"check_a1_jacobi_jordan", {"check", entry("d2.A1"), "--kind=jacobi-jordan", "--oracle"}, 0},
	    {"check_a1_pre_jj", {"check", entry("d2.A1"), "--kind=pre-jacobi-jordan"}, 0},
	    {"check_a2_dual", {"check", entry("d2.A2"), "--kind=bimodule", "--module=dual-regular"}, 1},
	    {"check_rb_identity", {"check", data("rb_identity_a7.json"), "--kind=rota-baxter"}, 1},
	    {"check_oop", {"check", data("a1_sum_bimodule.json"), "--kind=o-operator", "--format=structured"}, 0},
	    {"cocycles_a1", {"cocycles", entry("d2.A1")}, 0},
	    {"cocycles_heisenberg_scalar", {"cocycles", data("cocycle_ok.json"), "--scalar"}, 0},
	    {"nilpotency_a5", {"nilpotency", entry("d2.A5")}, 0},
	    {"induce_rb", {"induce", data("rb_a7.json"), "--from=rb"}, 0},
	    {"induce_cocycle_symmetric", {"induce", data("cocycle_symmetric.json"), "--from=cocycle"}, 1},
	    {"family_rb", {"family", data("rb_family.json"), "--induce", "--collapse", "--format=structured"}, 0},
	    {"family_semigroup", {"family", data("bad_semigroup.json"), "--check=semigroup"}, 1},
	    {"catalog_show_d3a4", {"catalog", "show", "d3.A4", "--param", "eta=1/4"}, 0},
	    {"catalog_verify_d2", {"catalog", "verify", "--dim=2"}, 0},
	};
}

// Set HRZ_UPDATE_GOLDEN=1 to rewrite the expected files.
TEST(CliGolden, OutputsMatch)
{
	const bool update = std::getenv("HRZ_UPDATE_GOLDEN") != nullptr;
	for (const auto &g : goldens()) {
		const auto r = run(g.args);
		EXPECT_EQ(r.rc, g.rc) << g.name << ": " << r.err;
		const auto path = kSource / "tests" / "golden" / (std::string(g.name) + ".out");
		if (update) {
			std::ofstream(path, std::ios::binary) << r.out;
			continue;
		}
		ASSERT_TRUE(fs::exists(path)) << path;
		EXPECT_EQ(r.out, slurp(path)) << g.name;
	}
}

// ---- coverage audit ------------------------------------------------------------

// Every public operation and one invocation that reaches it.
std::map<std::string, std::vector<std::string>> reachability()
{
	const auto a1 = entry("d2.A1");
	const auto ops = data("a1_operators.json");
	return {
	    {"rref", {"cocycles", a1}},
	    {"nullspace_basis", {"cocycles", a1}},
	    {"invert", {"induce", data("cocycle_ok.json"), "--from=cocycle"}},
	    {"eval", {"check", a1, "--oracle"}},
	    {"sum_product", {"check", a1, "--kind=anti-associative"}},
	    {"parse_algebra", {"check", a1}},
	    {"serialize_algebra", {"catalog", "show", "d2.A1"}},
	    {"check_hom_anti_associative", {"check", a1, "--kind=anti-associative"}},
	    {"check_multiplicativity", {"check", a1, "--kind=multiplicativity"}},
	    {"check_rhizaform", {"check", a1}},
	    {"check_dendriform", {"check", a1, "--kind=dendriform"}},
	    {"check_jacobi_jordan", {"check", a1, "--kind=jacobi-jordan"}},
	    {"check_pre_jacobi_jordan", {"check", a1, "--kind=pre-jacobi-jordan"}},
	    {"pre_jacobi_jordan_product", {"check", a1, "--kind=pre-jacobi-jordan"}},
	    {"subadjacent_bracket", {"check", a1, "--kind=jacobi-jordan"}},
	    {"check_alpha_derivation", {"check", ops, "--kind=derivation"}},
	    {"inner_derivation", {"check", ops, "--kind=derivation", "--inner=star"}},
	    {"check_bimodule", {"check", a1, "--kind=bimodule", "--module=rhizaform"}},
	    {"regular_bimodule", {"check", a1, "--kind=bimodule", "--module=regular"}},
	    {"rhizaform_bimodule", {"check", a1, "--kind=bimodule", "--module=rhizaform"}},
	    {"dual_bimodule", {"check", a1, "--kind=bimodule", "--module=dual-regular"}},
	    {"check_o_operator", {"check", ops, "--kind=o-operator", "--module=rhizaform"}},
	    {"check_rota_baxter", {"check", data("rb_a7.json"), "--kind=rota-baxter"}},
	    {"induced_rhizaform_from_o_operator", {"induce", ops, "--from=o-operator", "--module=rhizaform"}},
	    {"induced_rhizaform_from_rb", {"induce", data("rb_a7.json"), "--from=rb"}},
	    {"check_homomorphism", {"check", ops, "--kind=homomorphism", "--target=" + ops}},
	    {"compatible_from_invertible_o_operator", {"induce", ops, "--from=compatible", "--module=rhizaform"}},
	    {"scalar_cocycle_space", {"cocycles", data("cocycle_ok.json"), "--scalar"}},
	    {"vector_cocycle_space", {"cocycles", a1, "--vector"}},
	    {"is_nondegenerate", {"cocycles", data("cocycle_ok.json"), "--scalar"}},
	    {"check_scalar_cocycle", {"check", data("cocycle_ok.json"), "--kind=scalar-cocycle"}},
	    {"rhizaform_from_cocycle", {"induce", data("cocycle_ok.json"), "--from=cocycle"}},
	    {"diamond", {"nilpotency", a1}},
	    {"right_series", {"nilpotency", a1}},
	    {"left_series", {"nilpotency", a1}},
	    {"full_series", {"nilpotency", a1}},
	    {"is_nilpotent", {"nilpotency", a1}},
	    {"is_right_nilpotent", {"nilpotency", a1}},
	    {"is_left_nilpotent", {"nilpotency", a1}},
	    {"check_series_equality", {"nilpotency", a1}},
	    {"check_lemma_inclusions", {"nilpotency", a1}},
	    {"check_2_nilpotent", {"check", a1, "--kind=two-nilpotent"}},
	    {"check_onesided_nilpotency_theorem", {"nilpotency", a1}},
	    {"check_alpha_invariance", {"nilpotency", a1}},
	    {"check_semigroup", {"family", data("bad_semigroup.json"), "--check=semigroup"}},
	    {"check_rhizaform_family", {"family", data("rhizaform_family.json")}},
	    {"check_anti_associative_family", {"family", data("anti_associative_family.json")}},
	    {"associated_family", {"family", data("rhizaform_family.json"), "--associated"}},
	    {"check_rb_family", {"family", data("rb_family.json")}},
	    {"induced_family_rhizaform", {"family", data("rb_family.json"), "--induce"}},
	    {"tensor_collapse", {"family", data("rb_family.json"), "--collapse"}},
	    {"load_entry", {"catalog", "show", "d2.A7"}},
	    {"verify_entry", {"catalog", "verify", "--filter=d2.A7"}},
	    {"verify_all", {"catalog", "verify", "--dim=2"}},
	};
}

TEST(CliCoverage, EveryOperationIsDeclaredAndReachable)
{
	std::string headers;
	for (const auto &f : fs::directory_iterator(kSource / "include" / "hrz"))
		headers += slurp(f.path());
	for (const auto &[op, args] : reachability()) {
		const std::regex decl("\\b" + op + "\\(");
		EXPECT_TRUE(std::regex_search(headers, decl)) << op << " is not declared in a public header";
		const auto r = run(args);
		EXPECT_TRUE(r.rc == hrz::cli::kOk || r.rc == hrz::cli::kCheckFailed) << op << ": " << r.err;
		EXPECT_FALSE(r.out.empty()) << op;
	}
}

// The reverse direction: every check_* function in the headers has an entry.
TEST(CliCoverage, NoCheckerIsLeftOut)
{
	std::string headers;
	for (const auto &f : fs::directory_iterator(kSource / "include" / "hrz"))
		if (f.path().filename() != "oracle.hpp")
			headers += slurp(f.path());
	const auto table = reachability();
	const std::regex checker("\\b(check_[a-z0-9_]+)\\(");
	for (auto it = std::sregex_iterator(headers.begin(), headers.end(), checker); it != std::sregex_iterator(); ++it)
		EXPECT_TRUE(table.count((*it)[1].str())) << (*it)[1].str() << " has no CLI route";
}
