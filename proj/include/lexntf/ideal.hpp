#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lexntf/monomial.hpp"

namespace lexntf {

/// A monomial ideal given by a finite set of generators.
///
/// Ideals built by `minimalize` (and by every operation below) hold G(I)
/// sorted in descending lex order, so two minimal ideals are equal iff their
/// generator lists are equal. The zero ideal has no generators; the unit
/// ideal is represented by the single generator 1 (`is_unit()`).
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// The zero ideal in n variables.
  explicit MonomialIdeal(std::size_t n) : n_(n) {}
  /// Generators as given; `minimal` stays false until minimalized.
  MonomialIdeal(std::size_t n, std::vector<Monomial> generators);

  static MonomialIdeal unit(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::span<const Monomial> generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool minimal() const noexcept { return minimal_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;

  /// Per-variable maximum exponent over the generators, i.e. lcm(G(I)).
  Monomial generator_lcm() const;
  /// Bit (i-1) set iff x_i divides some generator.
  std::uint32_t used_variables() const noexcept;
  unsigned max_generator_degree() const noexcept;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) = default;

 private:
  friend MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens);
  std::vector<Monomial> gens_;
  std::size_t n_ = 0;
  bool minimal_ = false;
};

/// Keep exactly the generators not divisible by another kept generator;
/// duplicates collapse. Result is minimal and canonically ordered.
MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens);
MonomialIdeal minimalize(const MonomialIdeal& ideal);

bool ideal_member(const MonomialIdeal& ideal, const Monomial& m);

/// G(I^k); k = 0 raises DomainError.
MonomialIdeal ideal_power(const MonomialIdeal& ideal, unsigned k);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// I : (m). Returns the unit ideal when m is in I.
MonomialIdeal ideal_colon(const MonomialIdeal& ideal, const Monomial& m);
/// The ideal generated by the supports of G(I) (squarefree part).
MonomialIdeal ideal_radical(const MonomialIdeal& ideal);

/// Minimal generators are all pure powers of distinct variables.
bool is_irreducible(const MonomialIdeal& ideal);

std::string to_string(const MonomialIdeal& ideal);

/// Visit every monomial u with u | lcm(G(I)) and u not in I, in depth-first
/// order over exponent vectors. Multiples of members are pruned, so the cost
/// is proportional to the staircase, not the full box. Throws DomainError for
/// the zero ideal (the staircase is infinite).
void for_each_standard_divisor(const MonomialIdeal& ideal,
                               const std::function<bool(const Monomial&)>& visit);

void check_same_n(const MonomialIdeal& a, const MonomialIdeal& b);
void check_same_n(const MonomialIdeal& a, const Monomial& m);

}  // namespace lexntf
