#include "lexntf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <array>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "lexntf/errors.hpp"

namespace lexntf {

std::vector<MonomialIdeal> powers_up_to(const MonomialIdeal& ideal, unsigned kmax, const ResourceLimits& limits) {
  if (kmax < 1) throw DomainError("kmax must be at least 1");
  std::vector<MonomialIdeal> out{minimalize(ideal)};
  while (out.size() < kmax) {
    out.push_back(ideal_product(out.back(), out.front()));
    if (out.back().size() > limits.max_generators) {
      throw ResourceLimitError("|G(I^" + std::to_string(out.size()) + ")| = " + std::to_string(out.back().size()) +
                               " exceeds the generator ceiling " + std::to_string(limits.max_generators));
    }
  }
  return out;
}

std::vector<std::vector<VarPrime>> ass_of_powers(const MonomialIdeal& ideal, unsigned kmax,
                                                 const ResourceLimits& limits) {
  if (kmax < 2) throw DomainError("ass_of_powers needs kmax >= 2");
  std::vector<std::vector<VarPrime>> out;
  for (const auto& p : powers_up_to(ideal, kmax, limits)) out.push_back(associated_primes(p));
  return out;
}

NtfBruteforce is_ntf_bruteforce(const LexSpec& spec, unsigned kmax, const ResourceLimits& limits) {
  const auto ass = ass_of_powers(lexsegment_ideal(spec), kmax, limits);
  NtfBruteforce out;
  out.kmax = kmax;
  for (unsigned k = 2; k <= kmax; ++k) {
    if (ass[k - 1] != ass[0]) {
      out.ntf_up_to_kmax = false;
      out.first_failing_k = k;
      break;
    }
  }
  return out;
}

std::vector<unsigned> depth_profile_bruteforce(const LexSpec& spec, unsigned kmax, const ResourceLimits& limits) {
  DepthOptions opts;
  opts.max_polarized_vars = limits.max_polarized_vars;
  std::vector<unsigned> out;
  for (const auto& p : powers_up_to(lexsegment_ideal(spec), kmax, limits)) out.push_back(depth(p, opts));
  return out;
}

bool is_depth_zero_witness(const MonomialIdeal& power, const Monomial& m) {
  if (ideal_member(power, m)) return false;
  const std::size_t n = power.n();
  std::vector<Monomial> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back(Monomial::variable(n, i));
  return ideal_colon(power, m) == minimalize(n, std::move(vars));
}

// ---------------------------------------------------------------------------

std::string_view name(SurveyMode mode) { return mode == SurveyMode::ass ? "ass" : "depth"; }

namespace {

bool contains_maximal(const std::vector<VarPrime>& primes) {
  return std::any_of(primes.begin(), primes.end(), [](const VarPrime& p) { return p.is_maximal(); });
}

bool subset(const std::vector<VarPrime>& a, const std::vector<VarPrime>& b) {
  return std::all_of(a.begin(), a.end(), [&](const VarPrime& p) { return std::find(b.begin(), b.end(), p) != b.end(); });
}

std::string kstr(unsigned k) { return "k=" + std::to_string(k); }

}  // namespace

SpecRecord check_spec(const LexSpec& spec, unsigned kmax, const SurveyOptions& options) {
  SpecRecord rec;
  rec.spec = spec;
  rec.classification = classify_ntf(spec);
  const Classification& c = rec.classification;
  const bool predicted_ntf = c.verdict == Verdict::ntf;

  std::vector<MonomialIdeal> powers;
  try {
    powers = powers_up_to(lexsegment_ideal(spec), kmax, options.limits);
  } catch (const ResourceLimitError& e) {
    rec.skipped = true;
    rec.skip_reason = e.what();
    return rec;
  }

  for (unsigned k = 1; k <= kmax; ++k) {
    const MonomialIdeal& p = powers[k - 1];
    rec.ass.push_back(associated_primes(p));
    if (options.cross_check_ass && ass_bruteforce(p) != rec.ass.back()) {
      rec.oracle_ok = false;
      rec.disagreements.push_back("decomposition and colon-witness Ass differ at " + kstr(k));
    }
    rec.maximal_associated.push_back(contains_maximal(rec.ass.back()));
    if (rec.maximal_associated.back() && !rec.observed_onset) rec.observed_onset = k;
  }

  rec.bruteforce.kmax = kmax;
  for (unsigned k = 2; k <= kmax; ++k) {
    if (rec.ass[k - 1] != rec.ass[0]) {
      rec.bruteforce.ntf_up_to_kmax = false;
      rec.bruteforce.first_failing_k = k;
      break;
    }
  }
  rec.verdict_match = predicted_ntf == rec.bruteforce.ntf_up_to_kmax;
  rec.literal_match = (c.literal_verdict == Verdict::ntf) == rec.bruteforce.ntf_up_to_kmax;
  if (!rec.verdict_match) {
    rec.disagreements.push_back(std::string("classifier says ") + std::string(name(c.verdict)) +
                                ", brute force says " + (rec.bruteforce.ntf_up_to_kmax ? "NTF" : "notNTF"));
  }

  if (c.predicted_ass) {
    rec.ass_match = *c.predicted_ass == rec.ass[0];
    if (!*rec.ass_match) {
      rec.disagreements.push_back("predicted Ass " + to_string(*c.predicted_ass) + " but computed " +
                                  to_string(rec.ass[0]));
    }
  }

  const auto min_primes = minimal_elements(rec.ass[0]);
  for (unsigned k = 1; k <= kmax; ++k) {
    if (!subset(min_primes, rec.ass[k - 1])) {
      rec.min_contained_ok = false;
      rec.disagreements.push_back("Min(S/I) not contained in Ass(S/I^k) at " + kstr(k));
    }
  }

  if (rec.observed_onset) {
    for (unsigned k = *rec.observed_onset; k <= kmax; ++k) {
      if (!rec.maximal_associated[k - 1]) {
        rec.monotone_ok = false;
        rec.disagreements.push_back("depth vanishing not monotone: nonzero again at " + kstr(k));
        break;
      }
    }
  }

  if (!predicted_ntf) {
    if (!c.onset_bound) {
      rec.onset_ok = false;
      rec.disagreements.push_back("notNTF verdict without an onset bound");
    } else if (*c.onset_bound <= kmax) {
      rec.onset_ok = rec.observed_onset && *rec.observed_onset <= *c.onset_bound;
      if (!rec.onset_ok) {
        rec.disagreements.push_back("depth not zero by the onset bound " + std::to_string(*c.onset_bound));
      }
    } else {
      rec.onset_ok = rec.observed_onset.has_value();
    }
  }

  // Depth-zero pattern implied by the predicted profile.
  auto pattern_ok = [&](auto&& is_zero) {
    const DepthProfile& dp = c.depth_profile;
    for (unsigned k = 1; k <= kmax; ++k) {
      if (dp.kind == DepthProfile::Kind::constant && is_zero(k) != (*dp.value == 0)) return false;
      if (dp.kind == DepthProfile::Kind::eventually_zero && dp.onset_bound && k >= *dp.onset_bound && !is_zero(k)) {
        return false;
      }
    }
    return true;
  };

  if (options.mode == SurveyMode::depth) {
    DepthOptions fast;
    fast.max_polarized_vars = options.limits.max_polarized_vars;
    for (unsigned k = 1; k <= kmax; ++k) {
      const MonomialIdeal& p = powers[k - 1];
      const DepthReport r = depth_report(p, fast);
      rec.depths.push_back(r.depth);
      if ((r.depth == 0) != rec.maximal_associated[k - 1]) {
        rec.depth_routes_ok = false;
        rec.disagreements.push_back("depth 0 and maximal prime in Ass disagree at " + kstr(k));
      }
      if (options.cross_check_depth) {
        DepthOptions full = fast;
        full.fast_path = false;
        full.route = DepthRoute::colon;
        const unsigned by_colon = depth(p, full);
        std::optional<unsigned> by_hochster;
        if (r.added + spec.n <= options.limits.max_polarized_vars) {
          full.route = DepthRoute::hochster;
          by_hochster = depth(p, full);
        }
        if (by_colon != r.depth || (by_hochster && *by_hochster != r.depth)) {
          rec.depth_routes_ok = false;
          rec.disagreements.push_back("depth routes disagree at " + kstr(k));
        }
      }
    }
    const DepthProfile& dp = c.depth_profile;
    bool match = true;
    for (unsigned k = 1; k <= kmax; ++k) {
      const unsigned value = rec.depths[k - 1];
      if (dp.kind == DepthProfile::Kind::constant && value != *dp.value) match = false;
      if (dp.kind == DepthProfile::Kind::eventually_zero && dp.onset_bound && k >= *dp.onset_bound && value != 0) {
        match = false;
      }
    }
    rec.depth_match = match;
    if (!match) rec.disagreements.push_back("computed depth profile does not match the prediction");
    const bool constant = std::all_of(rec.depths.begin(), rec.depths.end(),
                                      [&](unsigned v) { return v == rec.depths.front(); });
    rec.constant_iff_ntf = constant == rec.bruteforce.ntf_up_to_kmax;
    if (!*rec.constant_iff_ntf) {
      rec.disagreements.push_back("NTF does not match a constant depth profile up to kmax");
    }
  } else {
    rec.depth_match = pattern_ok([&](unsigned k) { return rec.maximal_associated[k - 1]; });
    if (!*rec.depth_match) rec.disagreements.push_back("depth-zero pattern does not match the predicted profile");
  }

  if (options.check_witnesses) {
    for (WitnessCase wc : applicable_witness_cases(spec)) {
      const unsigned lo = witness_threshold(wc, spec);
      unsigned hi = kmax;
      if (auto cap = witness_max_k(wc)) hi = std::min(hi, *cap);
      for (unsigned k = lo; k <= hi; ++k) {
        const Monomial m = proof_witness(spec, wc, k);
        const bool ok = is_depth_zero_witness(powers[k - 1], m);
        rec.witnesses.push_back({wc, k, ok});
        if (!ok) {
          rec.witnesses_ok = false;
          rec.disagreements.push_back("witness " + std::string(name(wc)) + " fails at " + kstr(k) + ": " +
                                      to_string(m));
        }
      }
    }
  }
  return rec;
}

namespace {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LEXNTF_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

SurveyReport survey_specs(std::size_t n, unsigned d, const std::vector<LexSpec>& specs,
                          const SurveyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SurveyReport report;
  report.n = n;
  report.d = d;
  report.kmax = options.kmax == 0 ? 2 * d + 1 : options.kmax;
  if (report.kmax < 2) throw DomainError("survey needs kmax >= 2");
  report.mode = options.mode;
  report.records.resize(specs.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        report.records[i] = check_spec(specs[i], report.kmax, options);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::min<std::size_t>(resolve_threads(options.threads), std::max<std::size_t>(1, specs.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& r : report.records) {
    ++report.total;
    if (r.skipped) {
      ++report.skipped;
      continue;
    }
    if (r.classification.verdict == Verdict::ntf) {
      ++report.ntf;
    } else {
      ++report.not_ntf;
    }
    if (!r.agrees()) ++report.disagreements;
    if (!r.literal_match) ++report.literal_exceptions;
    if (!r.monotone_ok) ++report.monotonicity_violations;
    report.witness_checks += r.witnesses.size();
    for (const auto& w : r.witnesses) {
      if (!w.ok) ++report.witness_failures;
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SurveyReport survey(std::size_t n, unsigned d, const SurveyOptions& options) {
  if (n < 3) throw DomainError("survey needs n >= 3");
  if (d < 2) throw DomainError("survey needs d >= 2");
  return survey_specs(n, d, normalized_specs(n, d), options);
}

// ---------------------------------------------------------------------------

using nlohmann::json;

json to_json(const VarPrime& p) { return p.vars(); }

json to_json(const std::vector<VarPrime>& primes) {
  json out = json::array();
  for (const auto& p : primes) out.push_back(to_json(p));
  return out;
}

json to_json(const Monomial& m) {
  json out = json::array();
  for (Exponent e : m.exponents()) out.push_back(e);
  return out;
}

json to_json(const MonomialIdeal& ideal) {
  json out = json::array();
  for (const auto& g : ideal.generators()) out.push_back(to_json(g));
  return out;
}

json to_json(const IrreducibleComponent& q) {
  json bounds = json::object();
  for (const auto& [var, e] : q.bounds()) bounds[std::to_string(var)] = e;
  return {{"bounds", bounds}};
}

json to_json(const LexSpec& spec) {
  return {{"n", spec.n}, {"d", spec.d}, {"u", to_json(spec.u)}, {"v", to_json(spec.v)}};
}

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string_view name(DepthProfile::Kind kind) {
  switch (kind) {
    case DepthProfile::Kind::constant: return "constant";
    case DepthProfile::Kind::eventually_zero: return "eventually_zero";
    case DepthProfile::Kind::unknown: return "unknown";
  }
  return "?";
}

}  // namespace

json to_json(const Classification& c) {
  json profile = {{"kind", name(c.depth_profile.kind)},
                  {"value", opt(c.depth_profile.value)},
                  {"onset_bound", opt(c.depth_profile.onset_bound)},
                  {"M", opt(c.depth_profile.M)},
                  {"ell", opt(c.depth_profile.ell)}};
  return {{"verdict", name(c.verdict)},
          {"rule", name(c.rule)},
          {"literal_verdict", name(c.literal_verdict)},
          {"predicted_ass", c.predicted_ass ? to_json(*c.predicted_ass) : json(nullptr)},
          {"depth_profile", profile},
          {"onset_bound", opt(c.onset_bound)},
          {"onset_case", c.onset_case ? json(name(*c.onset_case)) : json(nullptr)},
          {"notes", c.notes}};
}

json to_json(const SpecRecord& r) {
  json out = {{"spec", to_json(r.spec)}, {"classification", to_json(r.classification)}, {"skipped", r.skipped}};
  if (r.skipped) {
    out["skip_reason"] = r.skip_reason;
    return out;
  }
  json ass = json::array();
  for (const auto& a : r.ass) ass.push_back(to_json(a));
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back({{"case", name(w.which)}, {"k", w.k}, {"ok", w.ok}});
  out["ass"] = ass;
  out["maximal_associated"] = r.maximal_associated;
  out["depths"] = r.depths;
  out["observed_onset"] = opt(r.observed_onset);
  out["bruteforce"] = {{"ntf_up_to_kmax", r.bruteforce.ntf_up_to_kmax},
                       {"first_failing_k", opt(r.bruteforce.first_failing_k)}};
  out["checks"] = {{"verdict_match", r.verdict_match},  {"literal_match", r.literal_match},
                   {"ass_match", opt(r.ass_match)},     {"depth_match", opt(r.depth_match)},
                   {"onset_ok", r.onset_ok},            {"monotone_ok", r.monotone_ok},
                   {"min_contained_ok", r.min_contained_ok}, {"oracle_ok", r.oracle_ok},
                   {"depth_routes_ok", r.depth_routes_ok}, {"constant_iff_ntf", opt(r.constant_iff_ntf)},
                   {"witnesses_ok", r.witnesses_ok}};
  out["witnesses"] = witnesses;
  out["disagreements"] = r.disagreements;
  return out;
}

json to_json(const SurveyReport& report) {
  json records = json::array();
  for (const auto& r : report.records) records.push_back(to_json(r));
  return {{"kind", "survey"},
          {"parameters", {{"n", report.n}, {"d", report.d}, {"kmax", report.kmax}, {"mode", name(report.mode)}}},
          {"summary",
           {{"total", report.total},
            {"ntf", report.ntf},
            {"not_ntf", report.not_ntf},
            {"skipped", report.skipped},
            {"disagreements", report.disagreements},
            {"literal_exceptions", report.literal_exceptions},
            {"witness_checks", report.witness_checks},
            {"witness_failures", report.witness_failures},
            {"monotonicity_violations", report.monotonicity_violations},
            {"seconds", report.seconds}}},
          {"records", records}};
}

std::string format_table(const SurveyReport& report) {
  std::vector<std::array<std::string, 7>> rows;
  rows.push_back({"u", "v", "rule", "onset_bound", "observed_onset", "ass_match", "depth_match"});
  auto flag = [](const std::optional<bool>& b) { return b ? std::string(*b ? "yes" : "NO") : std::string("-"); };
  for (const auto& r : report.records) {
    const auto& c = r.classification;
    std::string rule = std::string(name(c.verdict)) + " " + std::string(name(c.rule));
    if (r.skipped) {
      rows.push_back({to_string(r.spec.u), to_string(r.spec.v), rule, "-", "skipped", "-", "-"});
      continue;
    }
    rows.push_back({to_string(r.spec.u), to_string(r.spec.v), rule,
                    c.onset_bound ? std::to_string(*c.onset_bound) : "-",
                    r.observed_onset ? std::to_string(*r.observed_onset) : "-", flag(r.ass_match),
                    flag(r.depth_match) + (r.agrees() ? "" : "  DISAGREE")});
  }
  std::array<std::size_t, 7> width{};
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  out << "survey n=" << report.n << " d=" << report.d << " kmax=" << report.kmax << " mode=" << name(report.mode)
      << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << std::left << std::setw(static_cast<int>(width[i]) + 2) << row[i];
    }
    out << "\n";
  }
  out << "total " << report.total << ", NTF " << report.ntf << ", notNTF " << report.not_ntf << ", skipped "
      << report.skipped << ", disagreements " << report.disagreements << ", literal-theorem exceptions "
      << report.literal_exceptions << ", witness checks " << report.witness_checks << " (" << report.witness_failures
      << " failed), " << std::fixed << std::setprecision(2) << report.seconds << " s\n";
  return out.str();
}

}  // namespace lexntf
