#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lexntf/ideal.hpp"
#include "lexntf/monomial.hpp"
#include "lexntf/var_prime.hpp"

namespace lexntf {

/// An irreducible monomial ideal (x_i^{e_i} : i in keys), e_i >= 1.
class IrreducibleComponent {
 public:
  IrreducibleComponent() = default;
  /// `bounds[i-1]` is e_i, or 0 when x_i does not occur. At least one entry must be positive.
  IrreducibleComponent(std::size_t n, std::span<const Exponent> bounds);
  IrreducibleComponent(std::size_t n, std::initializer_list<std::pair<std::size_t, Exponent>> bounds);

  std::size_t n() const noexcept { return n_; }
  /// e_var, or 0 when x_var is not a generator's variable.
  Exponent bound(std::size_t var) const;
  std::vector<std::pair<std::size_t, Exponent>> bounds() const;
  VarPrime radical() const;
  MonomialIdeal to_ideal() const;
  /// Ideal containment: every pure power of `other` lies in *this.
  bool contains(const IrreducibleComponent& other) const noexcept;

  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
  /// Canonical order: by radical, then by the bound vector.
  friend std::strong_ordering operator<=>(const IrreducibleComponent& a, const IrreducibleComponent& b);

 private:
  std::array<Exponent, kMaxVars> bounds_{};
  std::size_t n_ = 0;
};

std::string to_string(const IrreducibleComponent& q);

enum class DecompositionMethod {
  /// Splitting up to kSplittingGeneratorLimit generators, socle corners above.
  automatic,
  /// A generator g = g1*g2 with coprime non-trivial parts gives I = (I + g1) ∩ (I + g2).
  splitting,
  /// Corners of the artinian closure I + (x_i^{a_i + 1}), a = lcm(G(I)): each
  /// u with u not in I and x_i u in I or u_i = a_i for every i gives the
  /// component (x_i^{u_i + 1} : u_i < a_i).
  socle
};

inline constexpr std::size_t kSplittingGeneratorLimit = 32;

/// Irredundant irreducible decomposition, components in canonical order.
/// Zero or unit ideal: DomainError.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal,
                                                            DecompositionMethod method = DecompositionMethod::automatic);

/// Radicals of the irredundant irreducible components, canonical order.
std::vector<VarPrime> associated_primes(const MonomialIdeal& ideal,
                                        DecompositionMethod method = DecompositionMethod::automatic);

/// Inclusion-minimal associated primes.
std::vector<VarPrime> minimal_primes(const MonomialIdeal& ideal);

/// Independent oracle: every prime of the form I : (m) with m | lcm(G(I)),
/// m not in I. Does not use the decomposition.
std::vector<VarPrime> ass_bruteforce(const MonomialIdeal& ideal);

/// Inclusion-minimal elements of a prime set, canonical order.
std::vector<VarPrime> minimal_elements(std::vector<VarPrime> primes);

}  // namespace lexntf
