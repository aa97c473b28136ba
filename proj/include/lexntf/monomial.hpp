#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lexntf {

using Exponent = std::uint16_t;

/// Largest supported number of variables for a dense monomial.
inline constexpr std::size_t kMaxVars = 16;

/// A monomial x_1^{a_1} ... x_n^{a_n} stored as a dense exponent vector.
///
/// Variables are 1-indexed in the public API (`exponent(1)` is the exponent
/// of x_1); `exponents()` exposes the raw 0-indexed storage. Values are
/// immutable in spirit: every arithmetic helper returns a new Monomial.
class Monomial {
 public:
  Monomial() = default;

  /// The constant monomial 1 in n variables.
  explicit Monomial(std::size_t n);

  Monomial(std::size_t n, std::span<const Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  /// x_var in n variables.
  static Monomial variable(std::size_t n, std::size_t var, Exponent power = 1);

  std::size_t n() const noexcept { return n_; }
  std::span<const Exponent> exponents() const noexcept { return {exps_.data(), n_}; }

  /// Exponent of x_var, var in 1..n.
  Exponent exponent(std::size_t var) const;

  unsigned degree() const noexcept;
  bool is_one() const noexcept { return degree() == 0; }

  /// supp(m) as 1-based variable indices, increasing.
  std::vector<std::size_t> support() const;
  /// Bit (i-1) set iff x_i divides m.
  std::uint32_t support_mask() const noexcept;
  /// Smallest / largest index in the support. Throw DomainError for m = 1.
  std::size_t min_var() const;
  std::size_t max_var() const;

  bool is_squarefree() const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.n_ == b.n_ && a.exps_ == b.exps_;
  }

  /// Graded lexicographic order (lex_cmp). Throws DimensionError on mismatched n.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::size_t hash() const noexcept;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint8_t n_ = 0;
};

/// Graded lex: lower degree is smaller; within a degree, the first differing
/// exponent (x_1 most significant) decides.
std::strong_ordering lex_cmp(const Monomial& a, const Monomial& b);

bool divides(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_gcd(const Monomial& a, const Monomial& b);
Monomial multiply(const Monomial& a, const Monomial& b);
/// a / b; throws DomainError when b does not divide a.
Monomial divide(const Monomial& a, const Monomial& b);
/// a^k.
Monomial power(const Monomial& a, unsigned k);

/// Render as `x1*x2^3`; the constant monomial renders as `1`.
std::string to_string(const Monomial& m);

/// Parse `x1*x2^3`, `x1 x2^3`, `1`, or a bracketed exponent vector `[1,3,0]`.
/// `n` fixes the ambient variable count; for the bracket form it may be 0,
/// in which case the vector length is used.
Monomial parse_monomial(std::string_view text, std::size_t n);

/// Split a comma separated list of monomials (commas inside brackets do not
/// split) and parse each.
std::vector<Monomial> parse_monomial_list(std::string_view text, std::size_t n);

/// Every monomial of degree d in n variables, in descending lex order.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d);

/// Every monomial of degree <= d in n variables (ascending degree, then
/// descending lex within a degree).
std::vector<Monomial> monomials_up_to_degree(std::size_t n, unsigned d);

void check_same_n(const Monomial& a, const Monomial& b);

}  // namespace lexntf

template <>
struct std::hash<lexntf::Monomial> {
  std::size_t operator()(const lexntf::Monomial& m) const noexcept { return m.hash(); }
};
