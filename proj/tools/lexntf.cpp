#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexntf/decomp.hpp"
#include "lexntf/depth.hpp"
#include "lexntf/errors.hpp"
#include "lexntf/ideal.hpp"
#include "lexntf/lexseg.hpp"
#include "lexntf/monomial.hpp"
#include "lexntf/verify.hpp"

using nlohmann::json;
using namespace lexntf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Config {
  std::size_t n = 0;
  std::optional<unsigned> d;
  std::string u, v, gens, monomial, spec_file, witness_case;
  std::optional<unsigned> k;
  std::optional<unsigned> kmax;
  bool json = false;
  bool strict = false;
  std::size_t max_generators = 5000;
  std::size_t max_polarized = 20;
  unsigned threads = 0;
  std::string route = "auto";
  std::string method = "auto";
  std::string mode = "ass";
  bool no_fast_path = false;
  bool oracle = false;
  bool no_witnesses = false;
};

/// Thrown for malformed input that CLI11 cannot detect.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ResourceLimits limits(const Config& c) { return {c.max_generators, c.max_polarized}; }

LexSpec read_spec(const Config& c) {
  std::size_t n = c.n;
  std::optional<unsigned> d = c.d;
  std::string u = c.u, v = c.v;
  if (!c.spec_file.empty()) {
    std::ifstream in(c.spec_file);
    if (!in) throw UsageError("cannot open spec file " + c.spec_file);
    json j;
    try {
      j = json::parse(in);
      n = j.at("n").get<std::size_t>();
      if (j.contains("d")) d = j.at("d").get<unsigned>();
      u = j.at("u").is_string() ? j.at("u").get<std::string>() : j.at("u").dump();
      v = j.at("v").is_string() ? j.at("v").get<std::string>() : j.at("v").dump();
    } catch (const json::exception& e) {
      throw UsageError("bad spec file: " + std::string(e.what()));
    }
  }
  if (n == 0) throw UsageError("-n is required");
  if (u.empty() || v.empty()) throw UsageError("-u and -v (or --spec-file) are required");
  LexSpec spec{n, 0, parse_monomial(u, n), parse_monomial(v, n)};
  spec.d = d ? *d : spec.u.degree();
  spec.validate();
  return spec;
}

MonomialIdeal read_ideal(const Config& c) {
  if (c.n == 0) throw UsageError("-n is required");
  if (c.gens.empty()) throw UsageError("-g is required");
  return minimalize(c.n, parse_monomial_list(c.gens, c.n));
}

json monomials_json(std::span<const Monomial> ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

std::string_view name(ReductionKind k) {
  switch (k) {
    case ReductionKind::divide_x1: return "divide_x1";
    case ReductionKind::drop_x1: return "drop_x1";
    case ReductionKind::drop_unused: return "drop_unused";
  }
  return "?";
}

std::string_view name(Degeneracy d) {
  switch (d) {
    case Degeneracy::none: return "none";
    case Degeneracy::principal: return "principal";
    case Degeneracy::linear: return "linear";
  }
  return "?";
}

json normalization_json(const Normalized& nz) {
  json steps = json::array();
  for (const auto& s : nz.report.steps) {
    steps.push_back({{"kind", name(s.kind)}, {"variable", s.original_var}, {"power", s.power}});
  }
  json reduced = nz.spec.d > 0 ? to_json(nz.spec) : json{{"n", nz.spec.n}, {"d", 0}, {"u", to_json(Monomial(nz.spec.n))}, {"v", to_json(Monomial(nz.spec.n))}};
  return {{"steps", steps},
          {"variable_offset", nz.report.variable_offset},
          {"principal_primes", nz.report.principal_primes},
          {"degeneracy", name(nz.report.degeneracy)},
          {"unused_variables", nz.report.unused_variables},
          {"reduced", reduced}};
}

void emit(const Config& c, const json& j, const std::string& text) {
  if (c.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  }
}

std::string join(std::span<const Monomial> ms, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) out += sep;
    out += to_string(ms[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_lexseg(const Config& c) {
  const LexSpec spec = read_spec(c);
  const auto ms = enumerate_lexsegment(spec);
  const auto nz = normalize_ends(spec);
  json j = {{"kind", "lexseg"},
            {"spec", to_json(spec)},
            {"monomials", monomials_json(ms)},
            {"size", ms.size()},
            {"normalization", normalization_json(nz)}};
  emit(c, j, to_string(spec) + ": " + std::to_string(ms.size()) + " monomials\n" + join(ms, ", "));
  return kExitOk;
}

std::string describe(const Classification& cl) {
  std::string out;
  if (cl.verdict == Verdict::ntf) {
    out = "NTF via rule " + std::string(name(cl.rule));
  } else {
    out = "notNTF";
    if (cl.onset_bound) {
      out += " (depth(S/I^k) = 0 for k >= " + std::to_string(*cl.onset_bound) + ", case " +
             std::string(name(*cl.onset_case)) + ")";
    }
  }
  if (cl.depth_profile.kind == DepthProfile::Kind::constant) {
    out += "\ndepth(S/I^k) = " + std::to_string(*cl.depth_profile.value) + " for all k";
  }
  for (const auto& note : cl.notes) out += "\nnote: " + note;
  return out;
}

int cmd_classify(const Config& c) {
  const LexSpec spec = read_spec(c);
  const FullClassification fc = classify_any(spec);
  std::string text;
  if (!fc.normalized.report.steps.empty()) {
    text += "reduced to " + (fc.normalized.spec.d > 0 ? to_string(fc.normalized.spec) : std::string("the unit ideal")) +
            "\n";
  }
  text += describe(fc.reduced);
  if (fc.ass) text += "\nAss(S/I) = " + to_string(*fc.ass);
  json j = {{"kind", "classify"},
            {"spec", to_json(spec)},
            {"normalization", normalization_json(fc.normalized)},
            {"classification", to_json(fc.reduced)},
            {"ass", fc.ass ? to_json(*fc.ass) : json(nullptr)}};
  emit(c, j, text);
  return kExitOk;
}

int cmd_power(const Config& c) {
  const MonomialIdeal ideal = read_ideal(c);
  if (!c.k) throw UsageError("-k is required");
  const MonomialIdeal p = ideal_power(ideal, *c.k);
  if (p.size() > c.max_generators) {
    throw ResourceLimitError("|G(I^k)| = " + std::to_string(p.size()) + " exceeds --max-generators");
  }
  json j = {{"kind", "power"}, {"n", c.n}, {"k", *c.k}, {"generators", monomials_json(p.generators())},
            {"count", p.size()}};
  emit(c, j, to_string(p));
  return kExitOk;
}

int cmd_colon(const Config& c) {
  const MonomialIdeal ideal = read_ideal(c);
  if (c.monomial.empty()) throw UsageError("-m is required");
  const Monomial m = parse_monomial(c.monomial, c.n);
  const MonomialIdeal q = ideal_colon(ideal, m);
  json j = {{"kind", "colon"}, {"n", c.n}, {"m", to_json(m)}, {"generators", monomials_json(q.generators())}};
  emit(c, j, to_string(q));
  return kExitOk;
}

DecompositionMethod parse_method(const std::string& s) {
  if (s == "splitting") return DecompositionMethod::splitting;
  if (s == "socle") return DecompositionMethod::socle;
  return DecompositionMethod::automatic;
}

int cmd_decompose(const Config& c) {
  const MonomialIdeal ideal = read_ideal(c);
  const auto comps = irreducible_decomposition(ideal, parse_method(c.method));
  json list = json::array();
  std::string text;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    list.push_back(to_json(comps[i]));
    if (i) text += " ∩ ";
    text += to_string(comps[i]);
  }
  emit(c, {{"kind", "decompose"}, {"n", c.n}, {"components", list}}, text);
  return kExitOk;
}

int cmd_assprimes(const Config& c) {
  const MonomialIdeal ideal = read_ideal(c);
  const auto primes = associated_primes(ideal, parse_method(c.method));
  json j = {{"kind", "assprimes"}, {"n", c.n}, {"primes", to_json(primes)}};
  std::string text = to_string(primes);
  int code = kExitOk;
  if (c.oracle) {
    const auto brute = ass_bruteforce(ideal);
    j["oracle"] = to_json(brute);
    j["agree"] = brute == primes;
    text += "\noracle: " + to_string(brute) + (brute == primes ? " (agree)" : " (DISAGREE)");
    if (brute != primes) code = kExitDisagreement;
  }
  emit(c, j, text);
  return code;
}

int cmd_depth(const Config& c) {
  const MonomialIdeal ideal = read_ideal(c);
  DepthOptions opts;
  opts.fast_path = !c.no_fast_path;
  opts.max_polarized_vars = c.max_polarized;
  if (c.route == "hochster") opts.route = DepthRoute::hochster;
  if (c.route == "colon") opts.route = DepthRoute::colon;
  const DepthReport r = depth_report(ideal, opts);
  json j = {{"kind", "depth"}, {"n", c.n},           {"depth", r.depth},
            {"pd", r.pd},      {"added", r.added},   {"route", name(r.route)},
            {"fast_path_hit", r.fast_path_hit}};
  emit(c, j,
       "depth(S/I) = " + std::to_string(r.depth) + "  (pd " + std::to_string(r.pd) + ", polarization adds " +
           std::to_string(r.added) + ", route " + std::string(name(r.route)) +
           (r.fast_path_hit ? ", maximal ideal associated" : "") + ")");
  return kExitOk;
}

int cmd_ntf_check(const Config& c) {
  const LexSpec spec = read_spec(c);
  const unsigned kmax = c.kmax ? *c.kmax : 2 * spec.d + 1;
  const NtfBruteforce bf = is_ntf_bruteforce(spec, kmax, limits(c));
  const FullClassification fc = classify_any(spec);
  const bool agree = (fc.reduced.verdict == Verdict::ntf) == bf.ntf_up_to_kmax;
  json j = {{"kind", "ntf-check"},
            {"spec", to_json(spec)},
            {"kmax", kmax},
            {"ntf_up_to_kmax", bf.ntf_up_to_kmax},
            {"first_failing_k", bf.first_failing_k ? json(*bf.first_failing_k) : json(nullptr)},
            {"classifier", name(fc.reduced.verdict)},
            {"agree", agree}};
  std::string text = bf.ntf_up_to_kmax ? "NTF up to k = " + std::to_string(kmax)
                                       : "notNTF (Ass changes at k = " + std::to_string(*bf.first_failing_k) + ")";
  text += "\nclassifier: " + std::string(name(fc.reduced.verdict)) + (agree ? " (agree)" : " (DISAGREE)");
  emit(c, j, text);
  return agree ? kExitOk : kExitDisagreement;
}

int cmd_witness(const Config& c) {
  const LexSpec spec = read_spec(c);
  std::vector<WitnessCase> cases;
  if (!c.witness_case.empty()) {
    cases.push_back(witness_case_from_name(c.witness_case));
  } else {
    cases = applicable_witness_cases(spec);
  }
  json checks = json::array();
  std::string text;
  bool all_ok = true;
  const MonomialIdeal ideal = lexsegment_ideal(spec);
  for (WitnessCase wc : cases) {
    const unsigned lo = c.k ? *c.k : witness_threshold(wc, spec);
    const unsigned hi = c.k ? *c.k : (c.kmax ? *c.kmax : lo);
    for (unsigned k = lo; k <= hi; ++k) {
      const Monomial m = proof_witness(spec, wc, k);
      const MonomialIdeal p = ideal_power(ideal, k);
      if (p.size() > c.max_generators) throw ResourceLimitError("|G(I^k)| exceeds --max-generators");
      const bool ok = is_depth_zero_witness(p, m);
      all_ok = all_ok && ok;
      checks.push_back({{"case", name(wc)}, {"k", k}, {"m", to_json(m)}, {"ok", ok}});
      text += std::string(name(wc)) + " k=" + std::to_string(k) + ": m = " + to_string(m) +
              (ok ? "  ok\n" : "  FAILED\n");
    }
  }
  if (cases.empty()) text = "no witness case applies to " + to_string(spec);
  emit(c, {{"kind", "witness"}, {"spec", to_json(spec)}, {"checks", checks}, {"all_ok", all_ok}}, text);
  return all_ok ? kExitOk : kExitDisagreement;
}

int cmd_survey(const Config& c) {
  if (c.n == 0 || !c.d) throw UsageError("survey needs -n and -d");
  SurveyOptions opts;
  opts.kmax = c.kmax.value_or(0);
  opts.mode = c.mode == "depth" ? SurveyMode::depth : SurveyMode::ass;
  opts.limits = limits(c);
  opts.threads = c.threads;
  opts.check_witnesses = !c.no_witnesses;
  const SurveyReport report = survey(c.n, *c.d, opts);
  emit(c, to_json(report), format_table(report));
  if (report.disagreements > 0) return kExitDisagreement;
  if (c.strict && report.skipped > 0) return kExitResource;
  return kExitOk;
}

void add_spec_options(CLI::App* sub, Config& c) {
  sub->add_option("-n", c.n, "number of variables");
  sub->add_option("-d", c.d, "degree (defaults to deg u)");
  sub->add_option("-u", c.u, "upper end, e.g. x1*x3 or [1,0,1,0]");
  sub->add_option("-v", c.v, "lower end");
  sub->add_option("--spec-file", c.spec_file, "JSON file with n, d, u, v");
}

void add_ideal_options(CLI::App* sub, Config& c) {
  sub->add_option("-n", c.n, "number of variables")->required();
  sub->add_option("-g", c.gens, "comma-separated generators")->required();
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Monomial ideal engine and lexsegment NTF classifier"};
  app.require_subcommand(1);
  app.add_flag("--json", c.json, "emit JSON");
  app.add_flag("--strict", c.strict, "nonzero exit when a resource guard skips work");
  app.add_option("--max-generators", c.max_generators, "ceiling on |G(I^k)|");
  app.add_option("--max-polarized", c.max_polarized, "ceiling on polarized variables for Hochster");
  if (const char* env = std::getenv("LEXNTF_THREADS")) c.threads = static_cast<unsigned>(std::atoi(env));
  app.add_option("--threads", c.threads, "worker threads for surveys (default: LEXNTF_THREADS or all cores)");
  app.fallthrough();

  std::map<std::string, std::function<int(const Config&)>> handlers;
  auto add = [&](const std::string& name, const std::string& help, auto handler) {
    handlers[name] = handler;
    return app.add_subcommand(name, help);
  };

  auto* lexseg = add("lexseg", "enumerate a lexsegment and its normalization", cmd_lexseg);
  add_spec_options(lexseg, c);
  auto* classify = add("classify", "classify L(u, v) as normally torsion-free or not", cmd_classify);
  add_spec_options(classify, c);
  auto* power = add("power", "minimal generators of I^k", cmd_power);
  add_ideal_options(power, c);
  power->add_option("-k", c.k, "exponent")->required();
  auto* colon = add("colon", "I : (m)", cmd_colon);
  add_ideal_options(colon, c);
  colon->add_option("-m", c.monomial, "monomial")->required();
  auto* decompose = add("decompose", "irredundant irreducible decomposition", cmd_decompose);
  add_ideal_options(decompose, c);
  decompose->add_option("--method", c.method, "auto | splitting | socle")
      ->check(CLI::IsMember({"auto", "splitting", "socle"}));
  auto* ass = add("assprimes", "associated primes", cmd_assprimes);
  add_ideal_options(ass, c);
  ass->add_option("--method", c.method, "auto | splitting | socle")->check(CLI::IsMember({"auto", "splitting", "socle"}));
  ass->add_flag("--oracle", c.oracle, "also run the colon-witness oracle and compare");
  auto* dep = add("depth", "depth of S/I", cmd_depth);
  add_ideal_options(dep, c);
  dep->add_option("--route", c.route, "auto | hochster | colon")->check(CLI::IsMember({"auto", "hochster", "colon"}));
  dep->add_flag("--no-fast-path", c.no_fast_path, "skip the associated-maximal-ideal shortcut");
  auto* ntf = add("ntf-check", "brute-force NTF check of L(u, v) up to kmax", cmd_ntf_check);
  add_spec_options(ntf, c);
  ntf->add_option("--kmax", c.kmax, "largest power (default 2d + 1)");
  auto* wit = add("witness", "validate depth-zero witness monomials", cmd_witness);
  add_spec_options(wit, c);
  wit->add_option("--case", c.witness_case, "witness case name (default: all applicable)");
  wit->add_option("-k", c.k, "power (default: the case threshold)");
  wit->add_option("--kmax", c.kmax, "check every k from the threshold up to kmax");
  auto* sur = add("survey", "check every normalized segment at (n, d)", cmd_survey);
  sur->add_option("-n", c.n, "number of variables")->required();
  sur->add_option("-d", c.d, "degree")->required();
  sur->add_option("--kmax", c.kmax, "largest power (default 2d + 1)");
  sur->add_option("--mode", c.mode, "ass | depth")->check(CLI::IsMember({"ass", "depth"}));
  sur->add_flag("--no-witnesses", c.no_witnesses, "skip proof-witness validation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return handlers.at(command)(c);
  } catch (const lexntf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const lexntf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
