#pragma once

// The verification suites behind the CLI: each returns a ReportRecord
// with one entry per assertion (computed value, expected value, pass).
// JSON serialization is timing-free and byte-stable across runs.

#include "json.hpp"

#include "polyrep/chartab.hpp"
#include "polyrep/constructions.hpp"
#include "polyrep/lattice.hpp"

namespace polyrep {

struct Assertion {
  std::string name;
  std::string computed;
  std::string expected;
  bool pass = false;
};

struct ReportRecord {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json values = nlohmann::json::object();
  std::vector<Assertion> assertions;
  double wall_seconds = 0;  // console only, never serialized

  bool pass() const {
    for (const auto& a : assertions)
      if (!a.pass) return false;
    return true;
  }
  void check(const std::string& name, const std::string& computed, const std::string& expected);
  void check_eq(const std::string& name, long long computed, long long expected);
  void check_le(const std::string& name, long long computed, long long bound);
  void check_true(const std::string& name, bool ok);
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  std::string cache_dir = ".polyrep-cache";
  int jobs = 1;
  bool with_b8 = true;
};

// Character table through the on-disk cache (atomic writes, fingerprint
// keyed); corrupt or stale entries are recomputed and overwritten.
CharacterTable character_table_cached(const GroupPtr& g, const std::string& cache_dir,
                                      bool* cache_hit = nullptr);

struct RdimAudit {
  long long rdim_split = -1;
  long long rdim_rational_lower = -1;
  std::vector<std::vector<int>> witness;
  long long classes = 0;
  long long exponent = 0;
};
RdimAudit rdim_audit(const GroupPtr& g, const VerifyOptions& opt);

// ---- per-command reports -------------------------------------------------

ReportRecord run_symrank(const std::string& lattice, int rank, int modulus);
ReportRecord run_heisenberg(int p, bool allow_large, const VerifyOptions& opt);
ReportRecord run_extensions(const std::string& n_filter, const std::string& p_filter,
                            const VerifyOptions& opt);
ReportRecord run_rdim_recipe(const std::string& recipe, const VerifyOptions& opt);

// ---- acceptance suites ----------------------------------------------------

ReportRecord suite_constants();
ReportRecord suite_table1();
ReportRecord suite_bn(bool with_b8);
ReportRecord suite_heisenberg(const VerifyOptions& opt);
ReportRecord suite_gl2z4();
ReportRecord suite_table2(const VerifyOptions& opt, std::vector<ExtensionRecord>* out = nullptr);
ReportRecord suite_chartab_validity(const VerifyOptions& opt);
ReportRecord suite_rdim_oracle(const VerifyOptions& opt);
ReportRecord suite_generation_oracle();
ReportRecord suite_homomorphisms();
ReportRecord suite_bound_audit(const std::vector<ExtensionRecord>& records);

// Runs every suite in deterministic order; the JSON aggregate is what
// verify-all emits.  Cache statistics go to stderr, never into the JSON.
ReportRecord run_verify_all(const VerifyOptions& opt);

// CSV emitters (exact column sets documented in the README).
std::string extensions_csv(const std::vector<ExtensionRecord>& records);
std::string table1_csv();
std::string table2_csv(const std::vector<ExtensionRecord>& records);

// Group recipe mini-language: named atoms combined with "x".
GroupPtr build_recipe_group(const std::string& recipe);

}  // namespace polyrep
