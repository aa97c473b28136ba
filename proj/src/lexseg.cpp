#include "lexntf/lexseg.hpp"

#include <algorithm>
#include <stdexcept>

#include "lexntf/errors.hpp"

namespace lexntf {

namespace {

Monomial x(std::size_t n, std::size_t var, unsigned e = 1) {
  return Monomial::variable(n, var, static_cast<Exponent>(e));
}

Monomial x1_times(const Monomial& m) { return multiply(m, x(m.n(), 1)); }

}  // namespace

// ---------------------------------------------------------------------------

void LexSpec::validate() const {
  if (n < 1) throw DomainError("a lexsegment needs at least one variable");
  if (d < 1) throw DomainError("a lexsegment needs degree d >= 1");
  if (u.n() != n || v.n() != n) {
    throw DimensionError("segment ends must live in " + std::to_string(n) + " variables");
  }
  if (u.degree() != d || v.degree() != d) {
    throw DomainError("segment ends " + to_string(u) + ", " + to_string(v) + " must have degree " +
                      std::to_string(d));
  }
  if (u < v) throw EmptySegmentError("u = " + to_string(u) + " <lex v = " + to_string(v));
}

bool LexSpec::is_normalized() const { return u.exponent(1) > 0 && v.exponent(1) == 0; }

std::string to_string(const LexSpec& spec) {
  return "L(" + to_string(spec.u) + ", " + to_string(spec.v) + ") n=" + std::to_string(spec.n) +
         " d=" + std::to_string(spec.d);
}

Monomial lex_pred(const Monomial& m) {
  const std::size_t n = m.n();
  auto e = m.exponents();
  std::array<Exponent, kMaxVars> out{};
  std::copy(e.begin(), e.end(), out.begin());
  // Rightmost position before the last one carrying mass moves one unit to
  // the right; everything to its right collapses onto the next variable.
  for (std::size_t i = n >= 2 ? n - 1 : 0; i-- > 0;) {
    if (out[i] == 0) continue;
    unsigned tail = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      tail += out[j];
      out[j] = 0;
    }
    --out[i];
    out[i + 1] = static_cast<Exponent>(tail);
    return Monomial(n, std::span<const Exponent>(out.data(), n));
  }
  throw NoPredecessorError(to_string(m) + " is the lex-smallest monomial of its degree");
}

std::vector<Monomial> enumerate_lexsegment(const LexSpec& spec) {
  spec.validate();
  std::vector<Monomial> out{spec.u};
  while (out.back() != spec.v) out.push_back(lex_pred(out.back()));
  return out;
}

MonomialIdeal lexsegment_ideal(const LexSpec& spec) {
  return minimalize(spec.n, enumerate_lexsegment(spec));
}

// ---------------------------------------------------------------------------

namespace {

Monomial drop_first(const Monomial& m) {
  auto e = m.exponents();
  return Monomial(m.n() - 1, e.subspan(1));
}

}  // namespace

Normalized normalize_ends(const LexSpec& input) {
  input.validate();
  Normalized out{input, {}};
  LexSpec& cur = out.spec;
  NormalizationReport& report = out.report;

  while (true) {
    const Exponent a1 = cur.u.exponent(1);
    const Exponent b1 = cur.v.exponent(1);
    const std::size_t original = report.variable_offset + 1;
    if (a1 > 0 && b1 == 0) break;
    if (a1 == 0) {
      // u >=lex v in one degree forces b1 = 0 as well.
      report.steps.push_back({ReductionKind::drop_unused, original, 0});
      cur = LexSpec{cur.n - 1, cur.d, drop_first(cur.u), drop_first(cur.v)};
      ++report.variable_offset;
    } else if (a1 == b1) {
      report.steps.push_back({ReductionKind::drop_x1, original, a1});
      report.principal_primes.push_back(original);
      const Monomial p = x(cur.n, 1, a1);
      cur = LexSpec{cur.n - 1, cur.d - a1, drop_first(divide(cur.u, p)), drop_first(divide(cur.v, p))};
      ++report.variable_offset;
    } else {
      report.steps.push_back({ReductionKind::divide_x1, original, b1});
      report.principal_primes.push_back(original);
      const Monomial p = x(cur.n, 1, b1);
      cur = LexSpec{cur.n, cur.d - b1, divide(cur.u, p), divide(cur.v, p)};
    }
    if (cur.d == 0) {
      report.degeneracy = Degeneracy::principal;
      return out;
    }
    if (cur.d == 1) {
      report.degeneracy = Degeneracy::linear;
      return out;
    }
  }
  if (cur.u == cur.v) {
    report.degeneracy = Degeneracy::principal;
    return out;
  }
  std::uint32_t used = 0;
  for (const auto& m : enumerate_lexsegment(cur)) used |= m.support_mask();
  for (std::size_t i = 1; i <= cur.n; ++i) {
    if ((used >> (i - 1) & 1u) == 0) report.unused_variables.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string_view name(Rule rule) {
  switch (rule) {
    case Rule::principal: return "principal";
    case Rule::depth_zero: return "(i)";
    case Rule::segment_shape: return "(ii)";
    case Rule::d2_special: return "(iii)";
    case Rule::d2_split: return "d2-split";
    case Rule::linear: return "linear";
    case Rule::none: return "none";
  }
  return "?";
}

std::string_view name(Verdict verdict) { return verdict == Verdict::ntf ? "NTF" : "notNTF"; }

std::string_view name(OnsetCase c) {
  switch (c) {
    case OnsetCase::d2_a: return "d2-a";
    case OnsetCase::d2_b: return "d2-b";
    case OnsetCase::d2_c: return "d2-c";
    case OnsetCase::d2_d: return "d2-d";
    case OnsetCase::d3_below: return "d3-below";
    case OnsetCase::d3_equal: return "d3-equal";
    case OnsetCase::d3_above_a: return "d3-above-a";
    case OnsetCase::d3_above_b: return "d3-above-b";
    case OnsetCase::d3_above_c: return "d3-above-c";
  }
  return "?";
}

bool depth_zero_condition(const LexSpec& spec) {
  return multiply(spec.u, x(spec.n, spec.n)) >= x1_times(spec.v);
}

namespace {

/// Quantities shared by the classifier and the witness constructions. Only
/// meaningful for a normalized, non-principal spec with d >= 2.
struct SegmentShape {
  std::size_t n;
  unsigned d;
  const Monomial& u;
  const Monomial& v;
  Exponent a1;
  std::size_t M;                 // min(u / x1)
  std::optional<Monomial> w;     // lex_pred(v), absent for v = x_n^d
  Monomial t;                    // x2 u / x1
  Monomial x2_d;                 // x2^d
  Monomial x2_d1_xn;             // x2^{d-1} x_n
  Monomial x2_d1_xM;             // x2^{d-1} x_M
  bool depth_zero;

  explicit SegmentShape(const LexSpec& s)
      : n(s.n),
        d(s.d),
        u(s.u),
        v(s.v),
        a1(s.u.exponent(1)),
        M(divide(s.u, x(s.n, 1)).min_var()),
        t(multiply(divide(s.u, x(s.n, 1)), x(s.n, 2))),
        x2_d(x(s.n, 2, s.d)),
        x2_d1_xn(multiply(x(s.n, 2, s.d - 1), x(s.n, s.n))),
        x2_d1_xM(multiply(x(s.n, 2, s.d - 1), x(s.n, M))),
        depth_zero(depth_zero_condition(s)) {
    if (s.v != x(s.n, s.n, s.d)) w = lex_pred(s.v);
  }

  Monomial var(std::size_t i, unsigned e = 1) const { return x(n, i, e); }
  Monomial x1x(std::size_t i) const { return multiply(var(1), var(i)); }
  Monomial x2x(std::size_t i) const { return multiply(var(2), var(i)); }
};

void check_classifiable(const LexSpec& spec) {
  spec.validate();
  if (spec.is_principal()) return;
  if (!spec.is_normalized()) {
    throw NormalizationRequiredError("classification needs x1 | u and x1 !| v; got " + to_string(spec) +
                                     " (run normalize_ends first)");
  }
  if (spec.n < 2) throw NormalizationRequiredError("a normalized segment needs n >= 2");
}

bool d2_special_holds(const SegmentShape& s) {
  return s.d == 2 && s.n >= 3 && s.u <= s.x1x(3) && s.v == s.x2_d;
}

bool segment_shape_holds(const SegmentShape& s) {
  return s.w && s.x2_d1_xM < s.v && s.v <= s.x2_d && *s.w > s.t;
}

bool d2_split_holds(const SegmentShape& s) {
  return s.d == 2 && s.a1 == 1 && s.M >= 4 && s.u == s.x1x(s.M) && s.v == s.x2x(s.M - 1);
}

std::optional<OnsetCase> onset_case_for(const SegmentShape& s) {
  if (s.d == 2) {
    if (s.u >= s.x1x(2)) return OnsetCase::d2_a;
    if (s.n < 3) return std::nullopt;
    const Monomial x1x3 = s.x1x(3);
    if (s.u <= x1x3 && s.v <= s.x2x(s.n)) return OnsetCase::d2_d;
    const Monomial lower = s.x2x(s.n - 1);
    if (s.u == x1x3 && s.v < s.x2_d && s.v >= lower) return OnsetCase::d2_b;
    if (s.u < x1x3 && s.v <= s.x2x(s.u.max_var()) && s.v >= lower) return OnsetCase::d2_c;
    return std::nullopt;
  }
  if (s.v <= s.t) return OnsetCase::d3_below;
  if (!s.w) return std::nullopt;
  if (*s.w == s.t) return OnsetCase::d3_equal;
  if (s.u.exponent(2) > 0 && s.v == s.x2_d) return OnsetCase::d3_above_c;
  if (s.v <= s.x2_d1_xn) return OnsetCase::d3_above_a;
  if (s.v <= s.x2_d1_xM) return OnsetCase::d3_above_b;
  return std::nullopt;
}

unsigned onset_bound_for(OnsetCase c, unsigned d) {
  switch (c) {
    case OnsetCase::d2_a:
    case OnsetCase::d2_d:
    case OnsetCase::d3_below: return 2;
    case OnsetCase::d2_b:
    case OnsetCase::d2_c: return 3;
    case OnsetCase::d3_equal:
    case OnsetCase::d3_above_a:
    case OnsetCase::d3_above_c: return d;
    case OnsetCase::d3_above_b: return 2 * d;
  }
  return 0;
}

std::vector<VarPrime> initial_chain_primes(const LexSpec& spec) {
  std::vector<VarPrime> out;
  auto js = spec.v.support();
  js.push_back(spec.n);
  for (std::size_t j : js) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 1; i <= j; ++i) vars.push_back(i);
    out.emplace_back(spec.n, vars);
  }
  canonicalize(out);
  return out;
}

}  // namespace

std::optional<std::vector<VarPrime>> predicted_ass(const LexSpec& spec) {
  check_classifiable(spec);
  const std::size_t n = spec.n;
  if (spec.is_principal()) {
    std::vector<VarPrime> out;
    for (std::size_t i : spec.u.support()) out.emplace_back(n, std::vector<std::size_t>{i});
    canonicalize(out);
    return out;
  }
  if (spec.d < 2) return std::nullopt;
  const SegmentShape s(spec);
  if (s.depth_zero) {
    auto out = initial_chain_primes(spec);
    if (spec.u != x(n, 1, spec.d)) {
      std::vector<std::size_t> tail;
      for (std::size_t i = 2; i <= n; ++i) tail.push_back(i);
      out.emplace_back(n, tail);
      canonicalize(out);
    }
    return out;
  }
  if (d2_special_holds(s)) {
    std::vector<std::size_t> tail{2};
    for (std::size_t i = spec.u.max_var(); i <= n; ++i) tail.push_back(i);
    std::vector<VarPrime> out{VarPrime(n, {1, 2}), VarPrime(n, tail)};
    canonicalize(out);
    return out;
  }
  return std::nullopt;
}

Classification classify_ntf(const LexSpec& spec) {
  check_classifiable(spec);
  Classification c;
  if (spec.is_principal()) {
    c.verdict = c.literal_verdict = Verdict::ntf;
    c.rule = Rule::principal;
    c.predicted_ass = predicted_ass(spec);
    c.depth_profile.kind = DepthProfile::Kind::constant;
    c.depth_profile.value = static_cast<unsigned>(spec.n - 1);
    return c;
  }
  if (spec.d < 2 || depth_zero_condition(spec)) {
    c.verdict = c.literal_verdict = Verdict::ntf;
    c.rule = Rule::depth_zero;
    c.predicted_ass = predicted_ass(spec);
    c.depth_profile.kind = DepthProfile::Kind::constant;
    c.depth_profile.value = 0;
    return c;
  }

  const SegmentShape s(spec);
  if (segment_shape_holds(s)) {
    if (s.a1 != 1 || s.M < 3 || spec.u.exponent(2) != 0) {
      throw std::logic_error("rule (ii) fired with nu1(u) != 1, M < 3 or x2 | u for " + to_string(spec));
    }
    c.verdict = c.literal_verdict = Verdict::ntf;
    c.rule = Rule::segment_shape;
    // Every v strictly between x2^{d-1}x_M and x2^d has the form x2^{d-1}x_l.
    const std::size_t ell = spec.v == s.x2_d ? 2 : spec.v.max_var();
    if (spec.v != multiply(x(spec.n, 2, spec.d - 1), x(spec.n, ell))) {
      throw std::logic_error("rule (ii) segment end is not x2^{d-1}x_l: " + to_string(spec));
    }
    c.depth_profile.kind = DepthProfile::Kind::constant;
    c.depth_profile.value = static_cast<unsigned>(s.M - ell);
    c.depth_profile.M = s.M;
    c.depth_profile.ell = ell;
    c.predicted_ass = predicted_ass(spec);
    return c;
  }
  if (d2_special_holds(s)) {
    c.verdict = c.literal_verdict = Verdict::ntf;
    c.rule = Rule::d2_special;
    if (spec.u < s.x1x(3)) {
      c.literal_verdict = Verdict::not_ntf;
      c.notes.push_back("u <lex x1x3: rule (iii) applied in its u <=lex x1x3 form");
    }
    c.depth_profile.kind = DepthProfile::Kind::constant;
    c.depth_profile.value = static_cast<unsigned>(spec.u.max_var() - 2);
    c.predicted_ass = predicted_ass(spec);
    return c;
  }
  if (d2_split_holds(s)) {
    c.verdict = Verdict::ntf;
    c.literal_verdict = Verdict::not_ntf;
    c.rule = Rule::d2_split;
    c.notes.push_back("I = x1(x_M..x_n) + x2(x2..x_{M-1}) splits into disjoint-variable NTF parts");
    c.depth_profile.kind = DepthProfile::Kind::constant;
    c.depth_profile.value = 1;
    c.depth_profile.M = s.M;
    c.depth_profile.ell = s.M - 1;
    return c;
  }

  c.verdict = c.literal_verdict = Verdict::not_ntf;
  c.rule = Rule::none;
  c.depth_profile.kind = DepthProfile::Kind::eventually_zero;
  if (auto oc = onset_case_for(s)) {
    c.onset_case = *oc;
    c.onset_bound = onset_bound_for(*oc, spec.d);
    c.depth_profile.onset_bound = c.onset_bound;
  } else {
    c.notes.push_back("no depth-zero statement covers this segment; onset bound unknown");
  }
  return c;
}

DepthProfile predicted_depth_profile(const LexSpec& spec) { return classify_ntf(spec).depth_profile; }

FullClassification classify_any(const LexSpec& spec) {
  FullClassification out{normalize_ends(spec), {}, std::nullopt};
  const LexSpec& r = out.normalized.spec;
  const NormalizationReport& rep = out.normalized.report;
  Classification& c = out.reduced;
  std::optional<std::vector<VarPrime>> reduced_ass;
  if (rep.degeneracy == Degeneracy::principal) {
    c.verdict = c.literal_verdict = Verdict::ntf;
    c.rule = Rule::principal;
    c.depth_profile.kind = DepthProfile::Kind::constant;
    // A single-generator segment: I itself is principal.
    c.depth_profile.value = static_cast<unsigned>(spec.n - 1);
    std::vector<VarPrime> primes;
    if (r.d > 0) {
      for (std::size_t i : r.u.support()) primes.emplace_back(r.n, std::vector<std::size_t>{i});
    }
    reduced_ass = primes;
  } else if (rep.degeneracy == Degeneracy::linear) {
    c.verdict = c.literal_verdict = Verdict::ntf;
    c.rule = Rule::linear;
    std::vector<std::size_t> vars;
    for (std::size_t i = r.u.min_var(); i <= r.v.min_var(); ++i) vars.push_back(i);
    reduced_ass = std::vector<VarPrime>{VarPrime(r.n, vars)};
  } else {
    c = classify_ntf(r);
    reduced_ass = c.predicted_ass;
  }
  if (rep.degeneracy != Degeneracy::none) c.predicted_ass = reduced_ass;
  if (reduced_ass) {
    std::vector<VarPrime> primes;
    for (std::size_t i : rep.principal_primes) primes.emplace_back(spec.n, std::vector<std::size_t>{i});
    for (const auto& p : *reduced_ass) {
      std::vector<std::size_t> vars;
      for (std::size_t i : p.vars()) vars.push_back(i + rep.variable_offset);
      primes.emplace_back(spec.n, vars);
    }
    canonicalize(primes);
    out.ass = primes;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string_view name(WitnessCase c) {
  switch (c) {
    case WitnessCase::depth0_high: return "depth0-high";
    case WitnessCase::depth0_low: return "depth0-low";
    case WitnessCase::d2_a: return "d2-a";
    case WitnessCase::d2_b: return "d2-b";
    case WitnessCase::d2_c: return "d2-c";
    case WitnessCase::d2_d: return "d2-d";
    case WitnessCase::d3_below: return "d3-below";
    case WitnessCase::d3_below_alt: return "d3-below-alt";
    case WitnessCase::d3_equal_high: return "d3-equal-high";
    case WitnessCase::d3_equal_low: return "d3-equal-low";
    case WitnessCase::d3_above_a: return "d3-above-a";
    case WitnessCase::d3_above_b: return "d3-above-b";
    case WitnessCase::d3_above_c: return "d3-above-c";
    case WitnessCase::linres_noncomplete: return "linres-noncomplete";
  }
  return "?";
}

WitnessCase witness_case_from_name(std::string_view text) {
  for (auto c : kAllWitnessCases) {
    if (name(c) == text) return c;
  }
  throw InapplicableCaseError("unknown witness case '" + std::string(text) + "'");
}

unsigned witness_threshold(WitnessCase c, const LexSpec& spec) {
  switch (c) {
    case WitnessCase::depth0_high:
    case WitnessCase::depth0_low: return 1;
    case WitnessCase::d2_a:
    case WitnessCase::d2_d:
    case WitnessCase::d3_below:
    case WitnessCase::d3_below_alt:
    case WitnessCase::linres_noncomplete: return 2;
    case WitnessCase::d2_b:
    case WitnessCase::d2_c: return 3;
    case WitnessCase::d3_equal_high:
    case WitnessCase::d3_equal_low:
    case WitnessCase::d3_above_a:
    case WitnessCase::d3_above_c: return spec.d;
    case WitnessCase::d3_above_b: return 2 * spec.d;
  }
  return 1;
}

std::optional<unsigned> witness_max_k(WitnessCase c) {
  if (c == WitnessCase::linres_noncomplete) return 2u;
  return std::nullopt;
}

std::optional<std::size_t> linres_noncomplete_index(const LexSpec& spec) {
  const std::size_t n = spec.n;
  if (spec.d < 2 || n < 3 || spec.u.exponent(1) != 1) return std::nullopt;
  const Monomial rest = divide(spec.u, x(n, 1));
  for (std::size_t l = 2; l + 1 <= n; ++l) {
    if (spec.v != multiply(x(n, l), x(n, n, spec.d - 1))) continue;
    if (rest.min_var() >= l + 1) return l;
  }
  return std::nullopt;
}

bool linres_shape_a(const LexSpec& spec) {
  const Exponent a = spec.u.exponent(1);
  if (a == 0 || a > spec.d || spec.n < 2) return false;
  const Monomial head = x(spec.n, 1, a);
  return spec.u == multiply(head, x(spec.n, 2, spec.d - a)) &&
         spec.v == multiply(head, x(spec.n, spec.n, spec.d - a));
}

bool linres_shape_b(const LexSpec& spec) {
  return static_cast<int>(spec.v.exponent(1)) < static_cast<int>(spec.u.exponent(1)) - 1;
}

bool linres_shape_c(const LexSpec& spec) {
  if (static_cast<int>(spec.v.exponent(1)) != static_cast<int>(spec.u.exponent(1)) - 1) return false;
  if (spec.v == x(spec.n, spec.n, spec.d)) return false;
  const Monomial w = lex_pred(spec.v);
  const Monomial shifted = multiply(divide(w, x(spec.n, w.max_var())), x(spec.n, 1));
  return shifted <= spec.u;
}

bool witness_applies(WitnessCase c, const LexSpec& spec) {
  spec.validate();
  if (!spec.is_normalized() || spec.is_principal() || spec.d < 2 || spec.n < 2) return false;
  const SegmentShape s(spec);
  const unsigned d = spec.d;
  const std::size_t n = spec.n;
  switch (c) {
    case WitnessCase::depth0_high: return s.depth_zero && s.a1 > 1;
    case WitnessCase::depth0_low: return s.depth_zero && s.a1 == 1;
    case WitnessCase::d2_a: return d == 2 && s.u >= s.x1x(2);
    case WitnessCase::d2_b:
      return d == 2 && n >= 3 && s.u == s.x1x(3) && s.v < s.x2_d && s.v >= s.x2x(n - 1);
    case WitnessCase::d2_c:
      return d == 2 && n >= 3 && s.u < s.x1x(3) && s.v <= s.x2x(s.u.max_var()) && s.v >= s.x2x(n - 1);
    case WitnessCase::d2_d: return d == 2 && n >= 3 && s.u <= s.x1x(3) && s.v <= s.x2x(n);
    case WitnessCase::d3_below: return d >= 3 && s.a1 == 1 && s.v <= s.t && s.v <= s.x2_d1_xn;
    case WitnessCase::d3_below_alt: return d >= 3 && s.a1 == 1 && s.v <= s.t && s.v > s.x2_d1_xn;
    case WitnessCase::d3_equal_high:
      // x1 m factors through x1 x2^2 x_n^{d-3}, which lies in I only when u reaches it.
      return d >= 3 && s.w && *s.w == s.t && s.v > s.x2_d1_xn &&
             s.u >= multiply(multiply(s.var(1), s.var(2, 2)), s.var(n, d - 3));
    case WitnessCase::d3_equal_low: return d >= 3 && s.w && *s.w == s.t && s.v <= s.x2_d1_xn;
    case WitnessCase::d3_above_a: return d >= 3 && s.w && *s.w > s.t && s.v <= s.x2_d1_xn;
    case WitnessCase::d3_above_b:
      return d >= 3 && s.w && *s.w > s.t && s.x2_d1_xn < s.v && s.v <= s.x2_d1_xM;
    case WitnessCase::d3_above_c:
      return d >= 3 && s.w && *s.w > s.t && s.u.exponent(2) > 0 && s.v == s.x2_d;
    case WitnessCase::linres_noncomplete: return linres_noncomplete_index(spec).has_value();
  }
  return false;
}

std::vector<WitnessCase> applicable_witness_cases(const LexSpec& spec) {
  std::vector<WitnessCase> out;
  for (auto c : kAllWitnessCases) {
    if (witness_applies(c, spec)) out.push_back(c);
  }
  return out;
}

Monomial proof_witness(const LexSpec& spec, WitnessCase c, unsigned k) {
  if (!witness_applies(c, spec)) {
    throw InapplicableCaseError("witness case " + std::string(name(c)) + " does not apply to " +
                                to_string(spec));
  }
  const unsigned lo = witness_threshold(c, spec);
  const auto hi = witness_max_k(c);
  if (k < lo || (hi && k > *hi)) {
    throw RangeError("witness case " + std::string(name(c)) + " needs k >= " + std::to_string(lo) +
                     (hi ? " and k <= " + std::to_string(*hi) : std::string()) + ", got k = " +
                     std::to_string(k));
  }
  const SegmentShape s(spec);
  const std::size_t n = spec.n;
  const unsigned d = spec.d;
  const Monomial x1 = s.var(1);
  const Monomial u_over_x1 = divide(spec.u, x1);
  switch (c) {
    case WitnessCase::depth0_high:
    case WitnessCase::d3_above_c: return divide(power(spec.u, k), x1);
    case WitnessCase::depth0_low: return multiply(u_over_x1, power(s.x2_d1_xn, k - 1));
    case WitnessCase::d2_a: return multiply(x1, power(s.var(2, 2), k - 1));
    case WitnessCase::d2_b:
    case WitnessCase::d2_c: return divide(multiply(s.var(2, 2), power(spec.u, k - 1)), x1);
    case WitnessCase::d2_d: return multiply(power(s.var(2, 2), k - 1), s.var(n));
    case WitnessCase::d3_below: return divide(multiply(s.x2_d, power(spec.u, k - 1)), x1);
    case WitnessCase::d3_below_alt: {
      const Monomial base = multiply(multiply(x1, s.var(2)), s.var(n, d - 2));
      return multiply(power(base, k - 1), u_over_x1);
    }
    case WitnessCase::d3_equal_high:
      return multiply(multiply(x1, s.var(n, d - 2)), power(s.x2_d, k - 1));
    case WitnessCase::d3_equal_low: return divide(power(s.x2_d1_xn, k), s.var(n));
    case WitnessCase::d3_above_a: return multiply(s.var(n, d - 1), power(s.x2_d, k - 1));
    case WitnessCase::d3_above_b:
      return divide(multiply(power(s.x2_d, k - d), power(spec.u, d)), x1);
    case WitnessCase::linres_noncomplete: {
      const std::size_t l = *linres_noncomplete_index(spec);
      return multiply(s.var(l, d), u_over_x1);
    }
  }
  throw InapplicableCaseError("unknown witness case");
}

// ---------------------------------------------------------------------------

std::vector<LexSpec> normalized_specs(std::size_t n, unsigned d) {
  std::vector<LexSpec> out;
  const auto all = monomials_of_degree(n, d);
  for (const auto& u : all) {
    if (u.exponent(1) == 0) continue;
    for (const auto& v : all) {
      if (v.exponent(1) != 0 || v > u) continue;
      out.push_back(LexSpec{n, d, u, v});
    }
  }
  return out;
}

}  // namespace lexntf
