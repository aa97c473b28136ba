#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lexntf/decomp.hpp"
#include "lexntf/depth.hpp"
#include "lexntf/ideal.hpp"
#include "lexntf/lexseg.hpp"
#include "lexntf/var_prime.hpp"

namespace lexntf {

struct ResourceLimits {
  /// Ceiling on |G(I^k)|.
  std::size_t max_generators = 5000;
  /// Ceiling on polarized variables for the Hochster route.
  std::size_t max_polarized_vars = 20;
};

/// [I, I^2, ..., I^kmax]; ResourceLimitError once a power exceeds the generator ceiling.
std::vector<MonomialIdeal> powers_up_to(const MonomialIdeal& ideal, unsigned kmax, const ResourceLimits& limits = {});

/// [Ass(S/I), ..., Ass(S/I^kmax)] via irreducible decomposition. kmax >= 2.
std::vector<std::vector<VarPrime>> ass_of_powers(const MonomialIdeal& ideal, unsigned kmax,
                                                 const ResourceLimits& limits = {});

struct NtfBruteforce {
  /// Ass(S/I^k) = Ass(S/I) for 2 <= k <= kmax.
  bool ntf_up_to_kmax = true;
  std::optional<unsigned> first_failing_k;
  unsigned kmax = 0;
};

NtfBruteforce is_ntf_bruteforce(const LexSpec& spec, unsigned kmax, const ResourceLimits& limits = {});

/// [depth(S/I^k)]_{k=1..kmax}.
std::vector<unsigned> depth_profile_bruteforce(const LexSpec& spec, unsigned kmax, const ResourceLimits& limits = {});

/// m not in I^k and I^k : (m) = (x1, ..., xn).
bool is_depth_zero_witness(const MonomialIdeal& power, const Monomial& m);

// ---------------------------------------------------------------------------

enum class SurveyMode { ass, depth };

struct SurveyOptions {
  /// 0 selects 2d + 1.
  unsigned kmax = 0;
  SurveyMode mode = SurveyMode::ass;
  ResourceLimits limits;
  /// 0 reads LEXNTF_THREADS, falling back to the hardware concurrency.
  unsigned threads = 0;
  bool check_witnesses = true;
  /// Compare decomposition-based Ass with the colon-witness oracle on every power.
  bool cross_check_ass = true;
  /// Compare the Hochster and colon-radical depth routes where both fit the caps.
  bool cross_check_depth = true;
};

struct WitnessCheck {
  WitnessCase which;
  unsigned k = 0;
  bool ok = false;
};

struct SpecRecord {
  LexSpec spec;
  Classification classification;
  bool skipped = false;
  std::string skip_reason;

  /// Ass(S/I^k) for k = 1..kmax.
  std::vector<std::vector<VarPrime>> ass;
  /// (x1..xn) in Ass(S/I^k), k = 1..kmax.
  std::vector<bool> maximal_associated;
  /// depth(S/I^k), k = 1..kmax (depth mode only).
  std::vector<unsigned> depths;
  std::optional<unsigned> observed_onset;
  NtfBruteforce bruteforce;

  bool verdict_match = true;
  bool literal_match = true;
  std::optional<bool> ass_match;
  std::optional<bool> depth_match;
  bool onset_ok = true;
  bool monotone_ok = true;
  bool min_contained_ok = true;
  bool oracle_ok = true;
  bool depth_routes_ok = true;
  std::optional<bool> constant_iff_ntf;
  std::vector<WitnessCheck> witnesses;
  bool witnesses_ok = true;

  std::vector<std::string> disagreements;
  bool agrees() const { return disagreements.empty(); }
};

struct SurveyReport {
  std::size_t n = 0;
  unsigned d = 0;
  unsigned kmax = 0;
  SurveyMode mode = SurveyMode::ass;
  std::vector<SpecRecord> records;

  std::size_t total = 0;
  std::size_t ntf = 0;
  std::size_t not_ntf = 0;
  std::size_t skipped = 0;
  std::size_t disagreements = 0;
  /// Specs where the literal three-condition characterization disagrees with brute force.
  std::size_t literal_exceptions = 0;
  std::size_t witness_checks = 0;
  std::size_t witness_failures = 0;
  std::size_t monotonicity_violations = 0;
  double seconds = 0.0;
};

/// Check every spec of `specs` (normally normalized_specs(n, d)).
SurveyReport survey_specs(std::size_t n, unsigned d, const std::vector<LexSpec>& specs,
                          const SurveyOptions& options = {});
/// Every normalized pair at (n, d); n >= 3, d >= 2.
SurveyReport survey(std::size_t n, unsigned d, const SurveyOptions& options = {});

/// Check one spec (the per-spec pipeline of a survey).
SpecRecord check_spec(const LexSpec& spec, unsigned kmax, const SurveyOptions& options);

std::string_view name(SurveyMode mode);

nlohmann::json to_json(const VarPrime& p);
nlohmann::json to_json(const std::vector<VarPrime>& primes);
/// Exponent vector.
nlohmann::json to_json(const Monomial& m);
/// Array of exponent vectors of G(I).
nlohmann::json to_json(const MonomialIdeal& ideal);
/// {"bounds": {"i": e_i}}.
nlohmann::json to_json(const IrreducibleComponent& q);
/// {"n", "d", "u", "v"} with exponent-vector ends.
nlohmann::json to_json(const LexSpec& spec);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const SpecRecord& record);
nlohmann::json to_json(const SurveyReport& report);

/// Aligned text table: spec, rule, onset bound, observed onset, Ass match, depth match.
std::string format_table(const SurveyReport& report);

}  // namespace lexntf
