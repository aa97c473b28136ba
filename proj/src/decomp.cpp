#include "lexntf/decomp.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "lexntf/errors.hpp"
#include "staircase.hpp"

namespace lexntf {

IrreducibleComponent::IrreducibleComponent(std::size_t n, std::span<const Exponent> bounds) : n_(n) {
  if (n > kMaxVars || bounds.size() != n) throw DimensionError("bound vector length must equal n");
  std::copy(bounds.begin(), bounds.end(), bounds_.begin());
  if (std::all_of(bounds.begin(), bounds.end(), [](Exponent e) { return e == 0; })) {
    throw DomainError("an irreducible component needs at least one pure power");
  }
}

IrreducibleComponent::IrreducibleComponent(std::size_t n,
                                           std::initializer_list<std::pair<std::size_t, Exponent>> bounds)
    : n_(n) {
  if (n > kMaxVars) throw DimensionError("too many variables");
  for (const auto& [var, e] : bounds) {
    if (var < 1 || var > n || e == 0) throw DomainError("invalid component bound");
    bounds_[var - 1] = e;
  }
  if (bounds.size() == 0) throw DomainError("an irreducible component needs at least one pure power");
}

Exponent IrreducibleComponent::bound(std::size_t var) const {
  if (var < 1 || var > n_) throw DomainError("variable outside 1..n");
  return bounds_[var - 1];
}

std::vector<std::pair<std::size_t, Exponent>> IrreducibleComponent::bounds() const {
  std::vector<std::pair<std::size_t, Exponent>> out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (bounds_[i] > 0) out.emplace_back(i + 1, bounds_[i]);
  }
  return out;
}

VarPrime IrreducibleComponent::radical() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (bounds_[i] > 0) mask |= 1u << i;
  }
  return VarPrime(n_, mask);
}

MonomialIdeal IrreducibleComponent::to_ideal() const {
  std::vector<Monomial> gens;
  for (const auto& [var, e] : bounds()) gens.push_back(Monomial::variable(n_, var, e));
  return minimalize(n_, std::move(gens));
}

bool IrreducibleComponent::contains(const IrreducibleComponent& other) const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    if (other.bounds_[i] == 0) continue;
    if (bounds_[i] == 0 || bounds_[i] > other.bounds_[i]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const IrreducibleComponent& a, const IrreducibleComponent& b) {
  if (auto c = a.radical() <=> b.radical(); c != 0) return c;
  for (std::size_t i = 0; i < a.n_; ++i) {
    if (auto c = a.bounds_[i] <=> b.bounds_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const IrreducibleComponent& q) { return to_string(q.to_ideal()); }

namespace {

void check_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("operation undefined for the zero ideal");
  if (ideal.is_unit()) throw DomainError("operation undefined for the unit ideal");
}

struct GensHash {
  std::size_t operator()(const std::vector<Monomial>& gens) const noexcept {
    std::size_t h = gens.size();
    for (const auto& g : gens) h = h * 0x9e3779b97f4a7c15ull ^ g.hash();
    return h;
  }
};

using Components = std::vector<IrreducibleComponent>;

void drop_redundant(Components& comps) {
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  std::vector<bool> redundant(comps.size(), false);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = 0; j < comps.size() && !redundant[i]; ++j) {
      if (i != j && !redundant[j] && comps[i].contains(comps[j])) redundant[i] = true;
    }
  }
  Components kept;
  kept.reserve(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!redundant[i]) kept.push_back(comps[i]);
  }
  comps = std::move(kept);
}

class Splitter {
 public:
  explicit Splitter(std::size_t n) : n_(n) {}

  // `gens` is minimal and sorted in descending lex order.
  const Components& run(const std::vector<Monomial>& gens) {
    if (auto it = memo_.find(gens); it != memo_.end()) return it->second;

    const Monomial* pivot = nullptr;
    for (const auto& g : gens) {
      const auto s = g.support_mask();
      if ((s & (s - 1)) != 0) {
        pivot = &g;
        break;
      }
    }

    Components result;
    if (pivot == nullptr) {
      std::array<Exponent, kMaxVars> bounds{};
      for (const auto& g : gens) {
        const std::size_t var = g.min_var();
        bounds[var - 1] = g.exponent(var);
      }
      result.emplace_back(n_, std::span<const Exponent>(bounds.data(), n_));
    } else {
      const std::size_t var = pivot->max_var();
      const Monomial pure = Monomial::variable(n_, var, pivot->exponent(var));
      const Monomial rest = divide(*pivot, pure);
      const auto left = with_generator(gens, pure);
      const auto right = with_generator(gens, rest);
      result = run(left);
      const Components& other = run(right);
      result.insert(result.end(), other.begin(), other.end());
      drop_redundant(result);
    }
    return memo_.emplace(gens, std::move(result)).first->second;
  }

 private:
  // h properly divides a minimal generator, so no other generator divides h.
  static std::vector<Monomial> with_generator(const std::vector<Monomial>& gens, const Monomial& h) {
    std::vector<Monomial> out;
    out.reserve(gens.size() + 1);
    bool placed = false;
    for (const auto& g : gens) {
      if (divides(h, g)) continue;
      if (!placed && g < h) {
        out.push_back(h);
        placed = true;
      }
      out.push_back(g);
    }
    if (!placed) out.push_back(h);
    return out;
  }

  std::size_t n_;
  std::unordered_map<std::vector<Monomial>, Components, GensHash> memo_;
};

}  // namespace

namespace {

Components socle_components(const MonomialIdeal& min) {
  const std::size_t n = min.n();
  const Monomial lcm = min.generator_lcm();
  const std::uint32_t full = (1u << n) - 1u;
  detail::Staircase stairs(min);
  Components out;
  stairs.walk([&](const Monomial& u, std::span<const std::uint32_t> deficit) {
    const auto e = u.exponents();
    std::uint32_t closed = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == lcm.exponents()[i]) closed |= 1u << i;
    }
    for (std::size_t g = 0; g < deficit.size() && closed != full; ++g) {
      const std::uint32_t d = deficit[g];
      if (d != 0 && (d & (d - 1)) == 0 && (closed & d) == 0) {
        const auto i = static_cast<std::size_t>(std::countr_zero(d));
        if (stairs.gen_exponent(g, i) == e[i] + 1) closed |= d;
      }
    }
    if (closed != full) return true;
    std::array<Exponent, kMaxVars> bounds{};
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] < lcm.exponents()[i]) bounds[i] = static_cast<Exponent>(e[i] + 1);
    }
    out.emplace_back(n, std::span<const Exponent>(bounds.data(), n));
    return true;
  });
  drop_redundant(out);
  return out;
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal, DecompositionMethod method) {
  check_proper_nonzero(ideal);
  const MonomialIdeal min = minimalize(ideal);
  if (method == DecompositionMethod::automatic) {
    method = min.size() <= kSplittingGeneratorLimit ? DecompositionMethod::splitting : DecompositionMethod::socle;
  }
  if (method == DecompositionMethod::socle) return socle_components(min);
  Splitter splitter(min.n());
  return splitter.run({min.generators().begin(), min.generators().end()});
}

std::vector<VarPrime> associated_primes(const MonomialIdeal& ideal, DecompositionMethod method) {
  std::vector<VarPrime> out;
  for (const auto& q : irreducible_decomposition(ideal, method)) out.push_back(q.radical());
  canonicalize(out);
  return out;
}

std::vector<VarPrime> minimal_elements(std::vector<VarPrime> primes) {
  canonicalize(primes);
  std::vector<VarPrime> out;
  for (const auto& p : primes) {
    const bool has_smaller = std::any_of(primes.begin(), primes.end(), [&](const VarPrime& q) {
      return q != p && q.is_subset_of(p);
    });
    if (!has_smaller) out.push_back(p);
  }
  return out;
}

std::vector<VarPrime> minimal_primes(const MonomialIdeal& ideal) {
  return minimal_elements(associated_primes(ideal));
}

std::vector<VarPrime> ass_bruteforce(const MonomialIdeal& ideal) {
  check_proper_nonzero(ideal);
  const MonomialIdeal min = minimalize(ideal);
  const std::size_t n = min.n();
  detail::Staircase stairs(min);
  std::vector<bool> found(std::size_t{1} << n, false);
  stairs.walk([&](const Monomial& u, std::span<const std::uint32_t> deficit) {
    // Variables x_i lying in I : (u): some generator exceeds u only in x_i, by one.
    std::uint32_t linear = 0;
    for (std::size_t g = 0; g < deficit.size(); ++g) {
      const std::uint32_t d = deficit[g];
      if (d != 0 && (d & (d - 1)) == 0) {
        const auto i = static_cast<std::size_t>(std::countr_zero(d));
        if (stairs.gen_exponent(g, i) == u.exponents()[i] + 1) linear |= d;
      }
    }
    if (linear == 0) return true;
    for (const std::uint32_t d : deficit) {
      if ((d & linear) == 0) return true;
    }
    found[linear] = true;
    return true;
  });
  std::vector<VarPrime> out;
  for (std::uint32_t mask = 1; mask < found.size(); ++mask) {
    if (found[mask]) out.emplace_back(n, mask);
  }
  canonicalize(out);
  return out;
}

}  // namespace lexntf
