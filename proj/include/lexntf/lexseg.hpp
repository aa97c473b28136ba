#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexntf/ideal.hpp"
#include "lexntf/monomial.hpp"
#include "lexntf/var_prime.hpp"

namespace lexntf {

/// The ends of a lexsegment L(u, v) = { m in M_d : u >=lex m >=lex v }.
struct LexSpec {
  std::size_t n = 0;
  unsigned d = 0;
  Monomial u;
  Monomial v;

  /// Throws DimensionError / DomainError / EmptySegmentError when the tuple is
  /// not a valid segment (n >= 1, d >= 1, deg u = deg v = d, u >=lex v).
  void validate() const;
  /// x1 | u and x1 !| v.
  bool is_normalized() const;
  bool is_principal() const { return u == v; }

  friend bool operator==(const LexSpec&, const LexSpec&) = default;
};

std::string to_string(const LexSpec& spec);

/// Greatest degree-d monomial strictly below m (d = deg m). Throws
/// NoPredecessorError for x_n^d.
Monomial lex_pred(const Monomial& m);

/// All monomials of the segment, descending lex, u first and v last.
std::vector<Monomial> enumerate_lexsegment(const LexSpec& spec);
MonomialIdeal lexsegment_ideal(const LexSpec& spec);

// ---------------------------------------------------------------------------
// Normalization of the segment ends.

enum class ReductionKind {
  divide_x1,   // a1 > b1 > 0: divide u and v by x1^b1
  drop_x1,     // a1 = b1 > 0: divide by x1^a1 and drop x1
  drop_unused  // a1 = b1 = 0: x1 divides no generator, drop it
};

struct ReductionStep {
  ReductionKind kind;
  /// Variable being reduced, in the numbering of the original spec.
  std::size_t original_var;
  Exponent power;
};

enum class Degeneracy { none, principal, linear };

struct NormalizationReport {
  std::vector<ReductionStep> steps;
  /// Reduced x_i corresponds to original x_{i + variable_offset}.
  std::size_t variable_offset = 0;
  /// Original variables x_i with (x_i) in Ass(S/I) contributed by an x1
  /// reduction step; Ass(S/I) = {(x_i) : i here} ∪ Ass(S/I_reduced) (primes
  /// of the reduced ideal shifted by variable_offset).
  std::vector<std::size_t> principal_primes;
  /// Reduced spec degenerates: d' = 0 or u' = v' (principal), or d' = 1 (linear).
  Degeneracy degeneracy = Degeneracy::none;
  /// Variables (reduced numbering) dividing no generator of the reduced segment.
  std::vector<std::size_t> unused_variables;
};

struct Normalized {
  LexSpec spec;
  NormalizationReport report;
};

/// Reduce to x1 | u, x1 !| v, iterating to a fixed point. When the result
/// degenerates (d' < 2) the returned spec still carries the reduced ends and
/// `report.degeneracy` says which case applies.
Normalized normalize_ends(const LexSpec& spec);

// ---------------------------------------------------------------------------
// Classification.

enum class Verdict { ntf, not_ntf };

enum class Rule {
  principal,
  depth_zero,     // (i)   x_n u >=lex x1 v
  segment_shape,  // (ii)  x2^{d-1} x_M <lex v <=lex x2^d and w >lex x2 u / x1
  d2_special,     // (iii) d = 2, u <=lex x1 x3, v = x2^2
  d2_split,       // d = 2, u = x1 x_M, v = x2 x_{M-1}, M >= 4
  linear,         // the ends reduce to degree 1: a prime ideal
  none
};

/// Which depth-zero statement bounds the onset for a non-NTF segment.
enum class OnsetCase {
  d2_a,         // u >=lex x1x2                               k >= 2
  d2_b,         // u = x1x3, x2^2 >lex v >=lex x2x_{n-1}        k >= 3
  d2_c,         // u <lex x1x3, x2x_max(u) >=lex v >=lex x2x_{n-1} k >= 3
  d2_d,         // u <=lex x1x3, v <=lex x2x_n                  k >= 2
  d3_below,     // v <=lex x2 u / x1                            k >= 2
  d3_equal,     // w = x2 u / x1                                k >= d
  d3_above_a,   // w >lex x2u/x1, v <=lex x2^{d-1}x_n           k >= d
  d3_above_b,   // w >lex x2u/x1, x2^{d-1}x_n <lex v <=lex x2^{d-1}x_M  k >= 2d
  d3_above_c    // w >lex x2u/x1, x2 | u, v = x2^d              k >= d
};

std::string_view name(Rule rule);
std::string_view name(Verdict verdict);
std::string_view name(OnsetCase c);

struct DepthProfile {
  enum class Kind { constant, eventually_zero, unknown };
  Kind kind = Kind::unknown;
  /// depth(S/I^k) for every k when kind == constant.
  std::optional<unsigned> value;
  /// depth(S/I^k) = 0 for every k >= onset_bound when kind == eventually_zero.
  std::optional<unsigned> onset_bound;
  /// Once depth vanishes it stays 0 for all larger powers.
  bool monotone_vanishing = true;
  /// M = min(u / x1) and l with v = x2^{d-1} x_l, when they determine the value.
  std::optional<std::size_t> M;
  std::optional<std::size_t> ell;

  friend bool operator==(const DepthProfile&, const DepthProfile&) = default;
};

struct Classification {
  Verdict verdict = Verdict::not_ntf;
  Rule rule = Rule::none;
  /// Verdict of the literal three-condition characterization (i)-(iii) with
  /// (iii) read as u = x1x3; differs from `verdict` only for Rule::d2_split.
  Verdict literal_verdict = Verdict::not_ntf;
  std::optional<std::vector<VarPrime>> predicted_ass;
  DepthProfile depth_profile;
  std::optional<unsigned> onset_bound;
  std::optional<OnsetCase> onset_case;
  std::vector<std::string> notes;
};

/// Requires a normalized (or principal) spec; throws NormalizationRequiredError otherwise.
Classification classify_ntf(const LexSpec& spec);

/// Classification of any valid spec through normalize_ends. `reduced`
/// describes the reduced ideal I'; `ass` maps its predicted Ass back to the
/// original variables, adding the primes of the reduction steps.
struct FullClassification {
  Normalized normalized;
  Classification reduced;
  std::optional<std::vector<VarPrime>> ass;
};

FullClassification classify_any(const LexSpec& spec);

/// Closed-form Ass(S/I) when one is known for this segment, else nullopt.
std::optional<std::vector<VarPrime>> predicted_ass(const LexSpec& spec);

DepthProfile predicted_depth_profile(const LexSpec& spec);

/// x_n u >=lex x1 v (depth(S/I) = 0 for a normalized segment).
bool depth_zero_condition(const LexSpec& spec);

// ---------------------------------------------------------------------------
// Witness monomials m with m not in I^k and I^k : (m) = (x1, ..., xn).

enum class WitnessCase {
  depth0_high,      // nu1(u) > 1:  m = u^k / x1
  depth0_low,       // nu1(u) = 1:  m = u (x2^{d-1} x_n)^{k-1} / x1
  d2_a,             // m = x1 (x2^2)^{k-1}
  d2_b,             // m = x2^2 u^{k-1} / x1
  d2_c,             // m = x2^2 u^{k-1} / x1
  d2_d,             // m = (x2^2)^{k-1} x_n
  d3_below,         // m = x2^d u^{k-1} / x1              (v <=lex x2^{d-1}x_n)
  d3_below_alt,     // m = (x1 x2 x_n^{d-2})^{k-1} u / x1  (v >lex x2^{d-1}x_n)
  d3_equal_high,    // m = x1 x_n^{d-2} (x2^d)^{k-1}      (v >lex x2^{d-1}x_n, u >=lex x1x2^2x_n^{d-3})
  d3_equal_low,     // m = (x2^{d-1} x_n)^k / x_n         (v <=lex x2^{d-1}x_n)
  d3_above_a,       // m = x_n^{d-1} (x2^d)^{k-1}
  d3_above_b,       // m = (x2^d)^{k-d} u^d / x1
  d3_above_c,       // m = u^k / x1
  linres_noncomplete  // m = x_l^d u / x1, k = 2
};

inline constexpr WitnessCase kAllWitnessCases[] = {
    WitnessCase::depth0_high,   WitnessCase::depth0_low,    WitnessCase::d2_a,
    WitnessCase::d2_b,          WitnessCase::d2_c,          WitnessCase::d2_d,
    WitnessCase::d3_below,      WitnessCase::d3_below_alt,  WitnessCase::d3_equal_high,
    WitnessCase::d3_equal_low,  WitnessCase::d3_above_a,    WitnessCase::d3_above_b,
    WitnessCase::d3_above_c,    WitnessCase::linres_noncomplete};

std::string_view name(WitnessCase c);
/// Inverse of name(); throws InapplicableCaseError for unknown names.
WitnessCase witness_case_from_name(std::string_view text);

/// Smallest k for which the case's statement asserts depth(S/I^k) = 0.
unsigned witness_threshold(WitnessCase c, const LexSpec& spec);
/// Largest admissible k (only linres_noncomplete is bounded).
std::optional<unsigned> witness_max_k(WitnessCase c);

/// Whether the hypotheses of the case hold for a normalized spec.
bool witness_applies(WitnessCase c, const LexSpec& spec);
std::vector<WitnessCase> applicable_witness_cases(const LexSpec& spec);

/// The witness monomial of degree dk - 1. Throws InapplicableCaseError when the
/// hypotheses fail and RangeError when k is outside the validity range.
Monomial proof_witness(const LexSpec& spec, WitnessCase c, unsigned k);

// ---------------------------------------------------------------------------
// Shapes of segments with a linear resolution (used by property tests).

/// u = x1^a x2^{d-a}, v = x1^a x_n^{d-a}, 0 < a <= d.
bool linres_shape_a(const LexSpec& spec);
/// nu1(v) < nu1(u) - 1.
bool linres_shape_b(const LexSpec& spec);
/// nu1(v) = nu1(u) - 1 and x1 w / x_max(w) <=lex u.
bool linres_shape_c(const LexSpec& spec);
/// u = x1 x_{l+1}^{a_{l+1}} ... x_n^{a_n}, v = x_l x_n^{d-1}, 2 <= l <= n-1.
std::optional<std::size_t> linres_noncomplete_index(const LexSpec& spec);

/// Every normalized (u, v) pair at (n, d): x1 | u, x1 !| v, u >=lex v, ordered
/// by descending u, then descending v.
std::vector<LexSpec> normalized_specs(std::size_t n, unsigned d);

}  // namespace lexntf
