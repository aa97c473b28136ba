#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "lexntf/decomp.hpp"
#include "lexntf/ideal.hpp"
#include "lexntf/lexseg.hpp"
#include "lexntf/monomial.hpp"
#include "lexntf/var_prime.hpp"

namespace lexntf::testing {

inline Monomial mono(std::size_t n, const char* text) { return parse_monomial(text, n); }

inline MonomialIdeal ideal(std::size_t n, const char* gens) { return minimalize(n, parse_monomial_list(gens, n)); }

inline LexSpec spec(std::size_t n, const char* u, const char* v) {
  LexSpec s{n, 0, parse_monomial(u, n), parse_monomial(v, n)};
  s.d = s.u.degree();
  s.validate();
  return s;
}

inline std::vector<VarPrime> primes(std::size_t n, std::initializer_list<std::initializer_list<std::size_t>> sets) {
  std::vector<VarPrime> out;
  for (const auto& s : sets) out.emplace_back(n, s);
  canonicalize(out);
  return out;
}

/// Membership by definition: some generator divides m. Independent of ideal_member.
inline bool member_naive(const MonomialIdeal& I, const Monomial& m) {
  for (const auto& g : I.generators()) {
    bool div = true;
    for (std::size_t i = 1; i <= m.n(); ++i) div = div && g.exponent(i) <= m.exponent(i);
    if (div) return true;
  }
  return false;
}

/// A random nonzero proper ideal with 1..max_gens generators and exponents in 0..max_exp.
inline MonomialIdeal random_ideal(std::mt19937& rng, std::size_t n, std::size_t max_gens, Exponent max_exp) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::uniform_int_distribution<int> expo(0, max_exp);
  std::vector<Monomial> gens;
  const std::size_t k = count(rng);
  while (gens.size() < k) {
    std::vector<Exponent> e(n);
    for (auto& x : e) x = static_cast<Exponent>(expo(rng));
    Monomial m(n, e);
    if (!m.is_one()) gens.push_back(m);
  }
  return minimalize(n, std::move(gens));
}

/// A random valid lexsegment spec at (n, d).
inline LexSpec random_spec(std::mt19937& rng, std::size_t n, unsigned d) {
  const auto all = monomials_of_degree(n, d);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::size_t a = pick(rng), b = pick(rng);
  if (a > b) std::swap(a, b);
  return LexSpec{n, d, all[a], all[b]};
}

/// Ass(S/I) straight from the definition: primes I:(m) for m | lcm(G(I)) with m not in I.
/// Written without any library helper beyond the ideal type, as a second oracle.
inline std::vector<VarPrime> ass_by_colons(const MonomialIdeal& I) {
  const std::size_t n = I.n();
  const Monomial top = I.generator_lcm();
  std::set<std::uint32_t> found;
  std::vector<Exponent> e(n, 0);
  while (true) {
    Monomial m(n, e);
    if (!member_naive(I, m)) {
      bool prime = true;
      std::uint32_t mask = 0;
      // I:(m) is generated by g / gcd(g, m); it is prime iff all minimal ones are variables.
      std::vector<Monomial> quotients;
      for (const auto& g : I.generators()) quotients.push_back(divide(g, monomial_gcd(g, m)));
      for (const auto& q : quotients) {
        bool redundant = false;
        for (const auto& r : quotients) {
          if (!(r == q) && divides(r, q)) redundant = true;
        }
        if (redundant) continue;
        if (q.degree() != 1) {
          prime = false;
          break;
        }
        mask |= q.support_mask();
      }
      if (prime && mask) found.insert(mask);
    }
    std::size_t i = 0;
    while (i < n && e[i] == top.exponent(i + 1)) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  std::vector<VarPrime> out;
  for (auto mask : found) out.emplace_back(n, mask);
  canonicalize(out);
  return out;
}

/// One instance of the disjoint-variable law: J in x1..xa, K in x_{a+1}..xn,
/// Ass(S/(J+K)) = { p1 + p2 : p1 in Ass(J), p2 in Ass(K) }.
inline bool disjoint_sum_law_instance(std::mt19937& rng) {
  const std::size_t a = 1 + rng() % 3, b = 1 + rng() % 3, n = a + b;
  auto lift = [n](const MonomialIdeal& I, std::size_t shift) {
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
      std::vector<Exponent> e(n, 0);
      for (std::size_t i = 0; i < I.n(); ++i) e[i + shift] = g.exponents()[i];
      gens.emplace_back(n, e);
    }
    return minimalize(n, gens);
  };
  MonomialIdeal J, K;
  do J = random_ideal(rng, a, 3, 3); while (J.is_unit());
  do K = random_ideal(rng, b, 3, 3); while (K.is_unit());
  std::set<std::uint32_t> expected;
  for (const auto& p : associated_primes(J)) {
    for (const auto& q : associated_primes(K)) expected.insert(p.mask() | q.mask() << a);
  }
  std::set<std::uint32_t> got;
  for (const auto& p : associated_primes(ideal_sum(lift(J, 0), lift(K, a)))) got.insert(p.mask());
  return got == expected;
}

/// One instance of the x1 reduction: with b = nu1(v) > 0,
/// Ass(S/L(u, v)) = {(x1)} + Ass(S/L(u/x1^b, v/x1^b)).
inline bool x1_reduction_law_instance(std::mt19937& rng) {
  while (true) {
    const std::size_t n = 2 + rng() % 4;
    const unsigned d = 2 + rng() % 3;
    const LexSpec s = random_spec(rng, n, d);
    const Exponent b = s.v.exponent(1);
    if (b == 0 || b == d) continue;
    const Monomial x1b = Monomial::variable(n, 1, b);
    const LexSpec r{n, d - b, divide(s.u, x1b), divide(s.v, x1b)};
    std::vector<VarPrime> expected = associated_primes(lexsegment_ideal(r));
    expected.push_back(VarPrime(n, {1}));
    canonicalize(expected);
    return associated_primes(lexsegment_ideal(s)) == expected;
  }
}

}  // namespace lexntf::testing
