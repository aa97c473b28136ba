#include "lexntf/ideal.hpp"

#include <algorithm>
#include <unordered_set>

#include "lexntf/errors.hpp"
#include "staircase.hpp"

namespace lexntf {

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Monomial> generators)
    : gens_(std::move(generators)), n_(n) {
  for (const auto& g : gens_) {
    if (g.n() != n) {
      throw DimensionError("generator " + to_string(g) + " has " + std::to_string(g.n()) +
                           " variables, ideal has " + std::to_string(n));
    }
  }
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) { return minimalize(n, {Monomial(n)}); }

bool MonomialIdeal::is_unit() const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_one(); });
}

Monomial MonomialIdeal::generator_lcm() const {
  Monomial out(n_);
  for (const auto& g : gens_) out = monomial_lcm(out, g);
  return out;
}

std::uint32_t MonomialIdeal::used_variables() const noexcept {
  std::uint32_t mask = 0;
  for (const auto& g : gens_) mask |= g.support_mask();
  return mask;
}

unsigned MonomialIdeal::max_generator_degree() const noexcept {
  unsigned d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

void check_same_n(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n() != b.n()) {
    throw DimensionError("ideals live in " + std::to_string(a.n()) + " and " +
                         std::to_string(b.n()) + " variables");
  }
}

void check_same_n(const MonomialIdeal& a, const Monomial& m) {
  if (a.n() != m.n()) {
    throw DimensionError("ideal lives in " + std::to_string(a.n()) + " variables, monomial " +
                         to_string(m) + " in " + std::to_string(m.n()));
  }
}

namespace {

bool divides_raw(const Monomial& a, const Monomial& b) noexcept {
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] > eb[i]) return false;
  }
  return true;
}

}  // namespace

MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens) {
  for (const auto& g : gens) {
    if (g.n() != n) throw DimensionError("generator " + to_string(g) + " has the wrong variable count");
  }
  // Ascending degree: a divisor always has degree <= its multiple, and a
  // same-degree divisor is the monomial itself.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a < b; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  std::size_t lower_degree_end = 0;  // kept[0, lower_degree_end) have degree < current
  unsigned current_degree = 0;
  for (const auto& g : gens) {
    const unsigned deg = g.degree();
    if (kept.empty() || deg != current_degree) {
      lower_degree_end = kept.size();
      current_degree = deg;
    }
    bool redundant = false;
    for (std::size_t i = 0; i < lower_degree_end; ++i) {
      if (divides_raw(kept[i], g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), [](const Monomial& a, const Monomial& b) { return a > b; });

  MonomialIdeal out(n);
  out.gens_ = std::move(kept);
  out.minimal_ = true;
  return out;
}

MonomialIdeal minimalize(const MonomialIdeal& ideal) {
  if (ideal.minimal()) return ideal;
  return minimalize(ideal.n(), {ideal.generators().begin(), ideal.generators().end()});
}

bool ideal_member(const MonomialIdeal& ideal, const Monomial& m) {
  check_same_n(ideal, m);
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Monomial& g) { return divides_raw(g, m); });
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_n(a, b);
  std::vector<Monomial> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) prods.push_back(multiply(g, h));
  }
  return minimalize(a.n(), std::move(prods));
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, unsigned k) {
  if (k == 0) throw DomainError("I^0 is the unit ideal, which is not modeled; need k >= 1");
  const MonomialIdeal base = minimalize(ideal);
  MonomialIdeal acc = base;
  for (unsigned j = 1; j < k; ++j) acc = ideal_product(acc, base);
  return acc;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_n(a, b);
  std::vector<Monomial> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.n(), std::move(gens));
}

MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_n(a, b);
  std::vector<Monomial> lcms;
  lcms.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) lcms.push_back(monomial_lcm(g, h));
  }
  return minimalize(a.n(), std::move(lcms));
}

MonomialIdeal ideal_colon(const MonomialIdeal& ideal, const Monomial& m) {
  check_same_n(ideal, m);
  std::vector<Monomial> quotients;
  quotients.reserve(ideal.size());
  for (const auto& g : ideal.generators()) quotients.push_back(divide(g, monomial_gcd(g, m)));
  return minimalize(ideal.n(), std::move(quotients));
}

MonomialIdeal ideal_radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> supports;
  supports.reserve(ideal.size());
  for (const auto& g : ideal.generators()) {
    Monomial s(ideal.n());
    for (std::size_t v : g.support()) s = multiply(s, Monomial::variable(ideal.n(), v));
    supports.push_back(s);
  }
  return minimalize(ideal.n(), std::move(supports));
}

bool is_irreducible(const MonomialIdeal& ideal) {
  const MonomialIdeal min = minimalize(ideal);
  if (min.is_zero() || min.is_unit()) return false;
  std::uint32_t seen = 0;
  for (const auto& g : min.generators()) {
    const auto s = g.support_mask();
    if ((s & (s - 1)) != 0 || (seen & s) != 0) return false;
    seen |= s;
  }
  return true;
}

std::string to_string(const MonomialIdeal& ideal) {
  std::string out = "(";
  bool first = true;
  for (const auto& g : ideal.generators()) {
    if (!first) out += ", ";
    out += to_string(g);
    first = false;
  }
  return out + ")";
}

void for_each_standard_divisor(const MonomialIdeal& ideal,
                               const std::function<bool(const Monomial&)>& visit) {
  if (ideal.is_zero()) throw DomainError("the zero ideal has infinitely many standard monomials");
  detail::Staircase stairs(minimalize(ideal));
  stairs.walk([&](const Monomial& u, std::span<const std::uint32_t>) { return visit(u); });
}

namespace detail {

Staircase::Staircase(const MonomialIdeal& ideal) : n_(ideal.n()) {
  const auto gens = ideal.generators();
  flat_.reserve(gens.size() * n_);
  bound_.assign(n_, 0);
  for (const auto& g : gens) {
    const auto e = g.exponents();
    for (std::size_t i = 0; i < n_; ++i) {
      flat_.push_back(e[i]);
      bound_[i] = std::max(bound_[i], e[i]);
    }
  }
  by_level_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) by_level_[i].resize(static_cast<std::size_t>(bound_[i]) + 1);
  deficit_.assign(gens.size(), 0);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::size_t i = 0; i < n_; ++i) {
      const Exponent e = flat_[g * n_ + i];
      if (e > 0) {
        deficit_[g] |= 1u << i;
        by_level_[i][e].push_back(static_cast<std::uint32_t>(g));
      }
    }
    if (deficit_[g] == 0) ++zero_deficit_;
  }
}

bool Staircase::raise(std::size_t var) {
  const Exponent e = ++u_[var];
  const std::uint32_t bit = 1u << var;
  for (std::uint32_t g : by_level_[var][e]) {
    deficit_[g] &= ~bit;
    if (deficit_[g] == 0) ++zero_deficit_;
  }
  return zero_deficit_ > 0;
}

void Staircase::lower(std::size_t var) {
  const Exponent e = u_[var];
  const std::uint32_t bit = 1u << var;
  for (std::uint32_t g : by_level_[var][e]) {
    if (deficit_[g] == 0) --zero_deficit_;
    deficit_[g] |= bit;
  }
  --u_[var];
}

}  // namespace detail

}  // namespace lexntf
