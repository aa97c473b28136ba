#pragma once

// Depth-first walk over the standard monomials of a monomial ideal inside
// the box [0, lcm(G(I))]. Shared by the colon-witness Ass oracle, the
// colon-radical depth route and the public for_each_standard_divisor.

#include <cstdint>
#include <span>
#include <vector>

#include "lexntf/ideal.hpp"
#include "lexntf/monomial.hpp"

namespace lexntf::detail {

class Staircase {
 public:
  explicit Staircase(const MonomialIdeal& ideal);

  std::size_t n() const noexcept { return n_; }
  std::size_t generator_count() const noexcept { return deficit_.size(); }
  /// Exponent of variable i (0-based) in generator g.
  Exponent gen_exponent(std::size_t g, std::size_t i) const noexcept { return flat_[g * n_ + i]; }

  /// Visitor signature: bool(const Monomial& u, std::span<const std::uint32_t> deficit)
  /// where deficit[g] has bit i set iff gen_g has a larger x_{i+1} exponent
  /// than u. Return false to stop the walk.
  template <class Visitor>
  void walk(Visitor&& visit);

 private:
  template <class Visitor>
  bool descend(std::size_t first_var, Visitor& visit);

  bool raise(std::size_t var);
  void lower(std::size_t var);

  std::size_t n_;
  std::vector<Exponent> flat_;
  std::vector<Exponent> bound_;
  // by_level_[var][e]: generators whose exponent of var equals e.
  std::vector<std::vector<std::vector<std::uint32_t>>> by_level_;
  std::vector<std::uint32_t> deficit_;
  std::array<Exponent, kMaxVars> u_{};
  std::size_t zero_deficit_ = 0;
};

template <class Visitor>
void Staircase::walk(Visitor&& visit) {
  if (zero_deficit_ > 0) return;  // 1 is in I
  descend(0, visit);
}

template <class Visitor>
bool Staircase::descend(std::size_t first_var, Visitor& visit) {
  const Monomial u(n_, std::span<const Exponent>(u_.data(), n_));
  if (!visit(u, std::span<const std::uint32_t>(deficit_))) return false;
  for (std::size_t var = first_var; var < n_; ++var) {
    if (u_[var] >= bound_[var]) continue;
    const bool inside = raise(var);
    bool keep_going = true;
    if (!inside) keep_going = descend(var, visit);
    lower(var);
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace lexntf::detail
