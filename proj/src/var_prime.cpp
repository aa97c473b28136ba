#include "lexntf/var_prime.hpp"

#include <algorithm>
#include <bit>

#include "lexntf/errors.hpp"
#include "lexntf/monomial.hpp"

namespace lexntf {

VarPrime::VarPrime(std::size_t n, std::uint32_t mask) : mask_(mask), n_(n) {
  if (n > kMaxVars) throw DomainError("too many variables for a VarPrime");
  if (mask == 0) throw DomainError("a VarPrime needs at least one variable");
  if (n < 32 && (mask >> n) != 0) throw DomainError("VarPrime variable outside 1..n");
}

namespace {

std::uint32_t mask_of(std::size_t n, const std::vector<std::size_t>& vars) {
  std::uint32_t mask = 0;
  for (std::size_t v : vars) {
    if (v < 1 || v > n) throw DomainError("variable x" + std::to_string(v) + " outside 1.." + std::to_string(n));
    mask |= 1u << (v - 1);
  }
  return mask;
}

}  // namespace

VarPrime::VarPrime(std::size_t n, std::initializer_list<std::size_t> vars)
    : VarPrime(n, std::vector<std::size_t>(vars)) {}

VarPrime::VarPrime(std::size_t n, const std::vector<std::size_t>& vars) : VarPrime(n, mask_of(n, vars)) {}

VarPrime VarPrime::maximal(std::size_t n) {
  return VarPrime(n, n >= 32 ? ~0u : ((1u << n) - 1u));
}

std::vector<std::size_t> VarPrime::vars() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (mask_ >> i & 1u) out.push_back(i + 1);
  }
  return out;
}

std::size_t VarPrime::height() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::strong_ordering operator<=>(const VarPrime& a, const VarPrime& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  const auto va = a.vars();
  const auto vb = b.vars();
  return std::lexicographical_compare_three_way(va.begin(), va.end(), vb.begin(), vb.end());
}

std::string to_string(const VarPrime& p) {
  std::string out = "(";
  bool first = true;
  for (std::size_t v : p.vars()) {
    if (!first) out += ',';
    out += 'x' + std::to_string(v);
    first = false;
  }
  return out + ")";
}

std::string to_string(const std::vector<VarPrime>& primes) {
  std::string out = "{";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) out += ", ";
    out += to_string(primes[i]);
  }
  return out + "}";
}

void canonicalize(std::vector<VarPrime>& primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
}

}  // namespace lexntf
