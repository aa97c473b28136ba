#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexntf/ideal.hpp"
#include "lexntf/monomial.hpp"

namespace lexntf {

/// A squarefree monomial ideal in up to 64 variables, generators stored as
/// support bitmasks (bit i = variable i+1). It is also the Stanley-Reisner
/// presentation of a simplicial complex: generators are the minimal non-faces.
class SquarefreeIdeal {
 public:
  SquarefreeIdeal() = default;
  /// Minimalizes `generators`; a zero mask is the unit ideal.
  SquarefreeIdeal(std::size_t nvars, std::vector<std::uint64_t> generators);
  /// Throws DomainError when `ideal` is not squarefree.
  static SquarefreeIdeal from_ideal(const MonomialIdeal& ideal);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<std::uint64_t>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;
  /// Needs nvars() <= kMaxVars.
  MonomialIdeal to_ideal() const;

  friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<std::uint64_t> gens_;  // ascending
};

using SimplicialComplex = SquarefreeIdeal;

struct Polarization {
  SquarefreeIdeal ideal;
  std::size_t added = 0;
  /// Variable names, original variables first ("x1".."xn"), then "y{i}_{j}"
  /// for the j-th polarizing copy of x_i, grouped by i.
  std::vector<std::string> labels;
};

/// x_i^e becomes x_i y_{i,1} ... y_{i,e-1}. Zero or unit ideal: DomainError.
Polarization polarize(const MonomialIdeal& ideal);
Polarization polarize(const SquarefreeIdeal& ideal);

/// Rank over Q of H~_degree of the complex with the given face predicate on
/// the ground set `ground`; exact (fraction-free elimination, big integers on overflow).
std::size_t reduced_homology_rank(std::uint64_t ground, int degree,
                                  const std::function<bool(std::uint64_t)>& is_face);

/// Rank over Q of an integer matrix given as sparse rows of (column, value).
std::size_t rational_rank(const std::vector<std::vector<std::pair<std::size_t, std::int64_t>>>& rows);

/// pd(S/I) by Hochster's formula, scanning the lcm lattice from the largest
/// homological degree down. `upper_bound` caps the scan when a bound is known.
/// Throws ResourceLimitError above `max_vars` variables, DomainError for zero/unit.
unsigned projective_dimension(const SquarefreeIdeal& ideal, std::optional<unsigned> upper_bound = std::nullopt,
                              std::size_t max_vars = 64);
/// nvars - pd.
unsigned depth_squarefree(const SquarefreeIdeal& ideal);

/// Some u with u not in I and x_i u in I for all i, i.e. (x1..xn) = I : (u).
std::optional<Monomial> socle_witness(const MonomialIdeal& ideal);

enum class DepthRoute {
  automatic,  // Hochster on the polarization within the variable cap, else colon radicals
  hochster,   // always polarize + Hochster (ResourceLimitError above the cap)
  colon       // min over u not in I of depth S / sqrt(I : u)
};

std::string_view name(DepthRoute route);

struct DepthOptions {
  DepthRoute route = DepthRoute::automatic;
  /// Return 0 as soon as (x1..xn) is associated.
  bool fast_path = true;
  std::size_t max_polarized_vars = 20;
};

struct DepthReport {
  unsigned depth = 0;
  /// pd(S/I) = n - depth.
  unsigned pd = 0;
  /// Polarizing variables (reported even when the Hochster route is not used).
  std::size_t added = 0;
  DepthRoute route = DepthRoute::automatic;
  bool fast_path_hit = false;
};

DepthReport depth_report(const MonomialIdeal& ideal, const DepthOptions& options = {});
unsigned depth(const MonomialIdeal& ideal, const DepthOptions& options = {});

}  // namespace lexntf
