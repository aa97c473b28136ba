#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace lexntf {

/// A monomial prime ideal (x_i : i in vars), vars a non-empty subset of 1..n.
class VarPrime {
 public:
  VarPrime() = default;
  /// Bit (i-1) of `mask` selects x_i.
  VarPrime(std::size_t n, std::uint32_t mask);
  VarPrime(std::size_t n, std::initializer_list<std::size_t> vars);
  VarPrime(std::size_t n, const std::vector<std::size_t>& vars);

  /// (x_1, ..., x_n).
  static VarPrime maximal(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::uint32_t mask() const noexcept { return mask_; }
  std::vector<std::size_t> vars() const;
  std::size_t height() const noexcept;
  bool contains(std::size_t var) const noexcept { return var >= 1 && var <= n_ && (mask_ >> (var - 1) & 1u); }
  bool is_maximal() const noexcept { return height() == n_; }
  bool is_subset_of(const VarPrime& other) const noexcept { return (mask_ & ~other.mask_) == 0; }

  friend bool operator==(const VarPrime&, const VarPrime&) = default;
  /// Canonical order: by the sorted index list, lexicographically.
  friend std::strong_ordering operator<=>(const VarPrime& a, const VarPrime& b);

 private:
  std::uint32_t mask_ = 0;
  std::size_t n_ = 0;
};

/// Renders as `(x1,x2)`.
std::string to_string(const VarPrime& p);
/// Renders a set as `{(x1,x2), (x2,x3,x4)}`.
std::string to_string(const std::vector<VarPrime>& primes);

/// Sort and deduplicate in canonical order.
void canonicalize(std::vector<VarPrime>& primes);

}  // namespace lexntf
