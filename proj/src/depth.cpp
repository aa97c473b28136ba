#include "lexntf/depth.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "lexntf/errors.hpp"
#include "staircase.hpp"

namespace lexntf {

namespace {

std::vector<std::uint64_t> minimal_masks(std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint64_t> out;
  for (std::uint64_t m : masks) {
    const bool covered = std::any_of(out.begin(), out.end(), [m](std::uint64_t g) { return (g & ~m) == 0; });
    if (!covered) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("depth is undefined for the zero ideal");
  if (ideal.is_unit()) throw DomainError("depth is undefined for the unit ideal");
}

void check_proper_nonzero(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("operation undefined for the zero ideal");
  if (ideal.is_unit()) throw DomainError("operation undefined for the unit ideal");
}

}  // namespace

// ---------------------------------------------------------------------------

SquarefreeIdeal::SquarefreeIdeal(std::size_t nvars, std::vector<std::uint64_t> generators) : nvars_(nvars) {
  if (nvars > 64) throw DimensionError("a squarefree ideal holds at most 64 variables");
  for (std::uint64_t g : generators) {
    if (nvars < 64 && (g >> nvars) != 0) throw DomainError("generator uses a variable outside 1..n");
  }
  gens_ = minimal_masks(std::move(generators));
}

SquarefreeIdeal SquarefreeIdeal::from_ideal(const MonomialIdeal& ideal) {
  const MonomialIdeal min = minimalize(ideal);
  std::vector<std::uint64_t> masks;
  for (const auto& g : min.generators()) {
    if (!g.is_squarefree()) throw DomainError("generator " + to_string(g) + " is not squarefree");
    masks.push_back(g.support_mask());
  }
  return SquarefreeIdeal(ideal.n(), std::move(masks));
}

bool SquarefreeIdeal::is_unit() const noexcept { return gens_.size() == 1 && gens_.front() == 0; }

MonomialIdeal SquarefreeIdeal::to_ideal() const {
  if (nvars_ > kMaxVars) throw DimensionError("too many variables for a MonomialIdeal");
  std::vector<Monomial> gens;
  for (std::uint64_t g : gens_) {
    std::array<Exponent, kMaxVars> e{};
    for (std::size_t i = 0; i < nvars_; ++i) e[i] = (g >> i) & 1u;
    gens.emplace_back(nvars_, std::span<const Exponent>(e.data(), nvars_));
  }
  return minimalize(nvars_, std::move(gens));
}

// ---------------------------------------------------------------------------

Polarization polarize(const MonomialIdeal& ideal) {
  check_proper_nonzero(ideal);
  const MonomialIdeal min = minimalize(ideal);
  const std::size_t n = min.n();
  const Monomial lcm = min.generator_lcm();

  Polarization out;
  std::vector<std::size_t> first_copy(n, 0);
  std::size_t next = n;
  for (std::size_t i = 1; i <= n; ++i) out.labels.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) {
    first_copy[i - 1] = next;
    for (Exponent j = 1; j < lcm.exponent(i); ++j) {
      out.labels.push_back("y" + std::to_string(i) + "_" + std::to_string(j));
      ++next;
    }
  }
  out.added = next - n;
  if (next > 64) throw ResourceLimitError("polarization needs " + std::to_string(next) + " > 64 variables");

  std::vector<std::uint64_t> masks;
  for (const auto& g : min.generators()) {
    std::uint64_t m = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      const Exponent e = g.exponent(i);
      if (e == 0) continue;
      m |= std::uint64_t{1} << (i - 1);
      for (Exponent j = 1; j < e; ++j) m |= std::uint64_t{1} << (first_copy[i - 1] + j - 1);
    }
    masks.push_back(m);
  }
  out.ideal = SquarefreeIdeal(next, std::move(masks));
  return out;
}

Polarization polarize(const SquarefreeIdeal& ideal) {
  check_proper_nonzero(ideal);
  Polarization out{ideal, 0, {}};
  for (std::size_t i = 1; i <= ideal.nvars(); ++i) out.labels.push_back("x" + std::to_string(i));
  return out;
}

// ---------------------------------------------------------------------------
// Exact rank over Q.

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

template <class T>
struct Ops;

template <>
struct Ops<std::int64_t> {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
  static std::int64_t abs(std::int64_t a) {
    if (a == INT64_MIN) throw Overflow{};
    return a < 0 ? -a : a;
  }
};

template <>
struct Ops<BigInt> {
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
  static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
  static BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
  static BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }
};

template <class T>
using SparseRow = std::vector<std::pair<std::size_t, T>>;

template <class T>
std::size_t rank_impl(const std::vector<std::vector<std::pair<std::size_t, std::int64_t>>>& input) {
  using O = Ops<T>;
  std::unordered_map<std::size_t, SparseRow<T>> pivots;
  std::size_t rank = 0;
  for (const auto& raw : input) {
    SparseRow<T> row;
    for (const auto& [c, v] : raw) {
      if (v != 0) row.emplace_back(c, T(v));
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, std::move(row));
        ++rank;
        break;
      }
      const SparseRow<T>& p = it->second;
      const T a = p.front().second;
      const T b = row.front().second;
      // row <- a * row - b * p, then strip the content.
      SparseRow<T> next;
      next.reserve(row.size() + p.size());
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < p.size()) {
        if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
          next.emplace_back(row[i].first, O::mul(a, row[i].second));
          ++i;
        } else if (i == row.size() || p[j].first < row[i].first) {
          next.emplace_back(p[j].first, O::sub(T(0), O::mul(b, p[j].second)));
          ++j;
        } else {
          T value = O::sub(O::mul(a, row[i].second), O::mul(b, p[j].second));
          if (value != 0) next.emplace_back(row[i].first, std::move(value));
          ++i;
          ++j;
        }
      }
      if (!next.empty()) {
        T g = O::abs(next.front().second);
        for (const auto& e : next) {
          if (g == 1) break;
          g = O::gcd(g, O::abs(e.second));
        }
        if (g > 1) {
          for (auto& e : next) e.second /= g;
        }
      }
      row = std::move(next);
    }
  }
  return rank;
}

}  // namespace

std::size_t rational_rank(const std::vector<std::vector<std::pair<std::size_t, std::int64_t>>>& rows) {
  try {
    return rank_impl<std::int64_t>(rows);
  } catch (const Overflow&) {
    return rank_impl<BigInt>(rows);
  }
}

// ---------------------------------------------------------------------------
// Reduced homology.

namespace {

template <class F>
void for_each_subset_of_size(std::uint64_t ground, int size, F&& f) {
  if (size < 0) return;
  std::vector<int> bits;
  for (std::uint64_t g = ground; g != 0; g &= g - 1) bits.push_back(std::countr_zero(g));
  const int m = static_cast<int>(bits.size());
  if (size > m) return;
  std::vector<int> idx(static_cast<std::size_t>(size));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::uint64_t mask = 0;
    for (int i : idx) mask |= std::uint64_t{1} << bits[static_cast<std::size_t>(i)];
    f(mask);
    int pos = size - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - size + pos) --pos;
    if (pos < 0) return;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < size; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
}

template <class IsFace>
std::vector<std::uint64_t> faces_of_size(std::uint64_t ground, int size, IsFace& is_face) {
  std::vector<std::uint64_t> out;
  for_each_subset_of_size(ground, size, [&](std::uint64_t m) {
    if (is_face(m)) out.push_back(m);
  });
  return out;
}

/// Rank of the boundary map from `upper` (faces of size s) to `lower` (size s-1).
std::size_t boundary_rank(const std::vector<std::uint64_t>& upper, const std::vector<std::uint64_t>& lower) {
  if (upper.empty() || lower.empty()) return 0;
  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(lower.size() * 2);
  for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], i);
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> rows;
  rows.reserve(upper.size());
  for (std::uint64_t face : upper) {
    std::vector<std::pair<std::size_t, std::int64_t>> row;
    std::int64_t sign = 1;
    for (std::uint64_t rest = face; rest != 0; rest &= rest - 1) {
      const std::uint64_t bit = rest & (~rest + 1);
      row.emplace_back(index.at(face & ~bit), sign);
      sign = -sign;
    }
    rows.push_back(std::move(row));
  }
  return rational_rank(rows);
}

struct FaceLayers {
  // Faces of sizes degree, degree + 1, degree + 2.
  std::vector<std::uint64_t> below, middle, above;
  std::size_t total() const { return below.size() + middle.size() + above.size(); }
};

template <class IsFace>
FaceLayers collect_layers(std::uint64_t ground, int degree, IsFace& is_face) {
  FaceLayers l;
  l.middle = faces_of_size(ground, degree + 1, is_face);
  if (l.middle.empty()) return l;
  l.below = faces_of_size(ground, degree, is_face);
  l.above = faces_of_size(ground, degree + 2, is_face);
  return l;
}

std::size_t homology_from_layers(const FaceLayers& l) {
  if (l.middle.empty()) return 0;
  return l.middle.size() - boundary_rank(l.middle, l.below) - boundary_rank(l.above, l.middle);
}

}  // namespace

std::size_t reduced_homology_rank(std::uint64_t ground, int degree,
                                  const std::function<bool(std::uint64_t)>& is_face) {
  if (degree < -1) return 0;
  auto pred = [&](std::uint64_t m) { return is_face(m); };
  return homology_from_layers(collect_layers(ground, degree, pred));
}

// ---------------------------------------------------------------------------
// Projective dimension by Hochster's formula.

namespace {

std::vector<std::uint64_t> lcm_lattice(const std::vector<std::uint64_t>& gens) {
  std::unordered_set<std::uint64_t> seen(gens.begin(), gens.end());
  std::vector<std::uint64_t> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t s : frontier) {
      for (std::uint64_t g : gens) {
        const std::uint64_t t = s | g;
        if (seen.insert(t).second) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  return out;
}

/// beta_{i,sigma}(S/I) != 0, via the restriction Delta|_sigma (degree |sigma|-i-1)
/// or the upper Koszul complex K^sigma (degree i-2), whichever has fewer faces.
bool betti_nonzero(const std::vector<std::uint64_t>& all_gens, std::uint64_t sigma, int i) {
  std::vector<std::uint64_t> gens;
  for (std::uint64_t g : all_gens) {
    if ((g & ~sigma) == 0) gens.push_back(g);
  }
  const int size = std::popcount(sigma);
  auto in_restriction = [&](std::uint64_t tau) {
    for (std::uint64_t g : gens) {
      if ((g & ~tau) == 0) return false;
    }
    return true;
  };
  auto in_koszul = [&](std::uint64_t tau) {
    const std::uint64_t rest = sigma & ~tau;
    for (std::uint64_t g : gens) {
      if ((g & ~rest) == 0) return true;
    }
    return false;
  };
  const FaceLayers a = collect_layers(sigma, size - i - 1, in_restriction);
  const FaceLayers b = collect_layers(sigma, i - 2, in_koszul);
  if (a.middle.empty() || b.middle.empty()) return false;
  return homology_from_layers(a.total() <= b.total() ? a : b) != 0;
}

}  // namespace

unsigned projective_dimension(const SquarefreeIdeal& ideal, std::optional<unsigned> upper_bound,
                              std::size_t max_vars) {
  check_proper_nonzero(ideal);
  if (ideal.nvars() > max_vars) {
    throw ResourceLimitError("Hochster scan over " + std::to_string(ideal.nvars()) + " variables exceeds the cap of " +
                             std::to_string(max_vars));
  }
  const auto& gens = ideal.generators();
  const auto lattice = lcm_lattice(gens);
  unsigned bound = static_cast<unsigned>(std::min(ideal.nvars(), gens.size()));
  bound = std::min(bound, static_cast<unsigned>(std::popcount(lattice.front())));
  if (upper_bound) bound = std::min(bound, *upper_bound);
  for (unsigned i = bound; i >= 1; --i) {
    for (std::uint64_t sigma : lattice) {
      if (static_cast<unsigned>(std::popcount(sigma)) < i) break;
      if (betti_nonzero(gens, sigma, static_cast<int>(i))) return i;
    }
  }
  throw std::logic_error("no nonzero Betti number found for a proper nonzero ideal");
}

unsigned depth_squarefree(const SquarefreeIdeal& ideal) {
  return static_cast<unsigned>(ideal.nvars()) - projective_dimension(ideal);
}

// ---------------------------------------------------------------------------

std::optional<Monomial> socle_witness(const MonomialIdeal& ideal) {
  check_proper_nonzero(ideal);
  const MonomialIdeal min = minimalize(ideal);
  const std::size_t n = min.n();
  const std::uint32_t full = n >= 32 ? ~0u : (1u << n) - 1u;
  detail::Staircase stairs(min);
  std::optional<Monomial> found;
  stairs.walk([&](const Monomial& u, std::span<const std::uint32_t> deficit) {
    std::uint32_t linear = 0;
    for (std::size_t g = 0; g < deficit.size(); ++g) {
      const std::uint32_t d = deficit[g];
      if (d != 0 && (d & (d - 1)) == 0) {
        const auto i = static_cast<std::size_t>(std::countr_zero(d));
        if (stairs.gen_exponent(g, i) == u.exponents()[i] + 1) linear |= d;
      }
    }
    if (linear != full) return true;
    found = u;
    return false;
  });
  return found;
}

std::string_view name(DepthRoute route) {
  switch (route) {
    case DepthRoute::automatic: return "automatic";
    case DepthRoute::hochster: return "hochster";
    case DepthRoute::colon: return "colon";
  }
  return "?";
}

namespace {

struct MaskVectorHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::size_t h = v.size();
    for (std::uint64_t x : v) h = h * 0x9e3779b97f4a7c15ull ^ std::hash<std::uint64_t>{}(x);
    return h;
  }
};

unsigned depth_by_colon_radicals(const MonomialIdeal& min, unsigned floor) {
  const std::size_t n = min.n();
  detail::Staircase stairs(min);
  std::unordered_map<std::vector<std::uint64_t>, unsigned, MaskVectorHash> cache;
  unsigned best = static_cast<unsigned>(n);
  std::vector<std::uint64_t> masks;
  stairs.walk([&](const Monomial&, std::span<const std::uint32_t> deficit) {
    masks.assign(deficit.begin(), deficit.end());
    auto key = minimal_masks(std::move(masks));
    auto it = cache.find(key);
    if (it == cache.end()) {
      const unsigned value = depth_squarefree(SquarefreeIdeal(n, key));
      it = cache.emplace(std::move(key), value).first;
    }
    best = std::min(best, it->second);
    return best > floor;
  });
  return best;
}

}  // namespace

DepthReport depth_report(const MonomialIdeal& ideal, const DepthOptions& options) {
  check_proper_nonzero(ideal);
  const MonomialIdeal min = minimalize(ideal);
  const unsigned n = static_cast<unsigned>(min.n());

  DepthReport report;
  std::size_t polarized_vars = n;
  {
    const Monomial lcm = min.generator_lcm();
    for (std::size_t i = 1; i <= n; ++i) {
      if (lcm.exponent(i) > 1) polarized_vars += lcm.exponent(i) - 1u;
    }
    report.added = polarized_vars - n;
  }
  report.route = options.route;
  if (report.route == DepthRoute::automatic) {
    report.route = polarized_vars <= options.max_polarized_vars ? DepthRoute::hochster : DepthRoute::colon;
  }

  if (options.fast_path && socle_witness(min)) {
    report.depth = 0;
    report.pd = n;
    report.fast_path_hit = true;
    return report;
  }

  if (report.route == DepthRoute::hochster) {
    if (polarized_vars > options.max_polarized_vars) {
      throw ResourceLimitError("polarization has " + std::to_string(polarized_vars) +
                               " variables, above the cap of " + std::to_string(options.max_polarized_vars));
    }
    const Polarization p = polarize(min);
    report.pd = projective_dimension(p.ideal, n);
    report.depth = n - report.pd;
  } else {
    // Without the fast path the scan may still reach 0; with it, 1 is the floor.
    report.depth = depth_by_colon_radicals(min, options.fast_path ? 1u : 0u);
    report.pd = n - report.depth;
  }
  return report;
}

unsigned depth(const MonomialIdeal& ideal, const DepthOptions& options) {
  return depth_report(ideal, options).depth;
}

}  // namespace lexntf
