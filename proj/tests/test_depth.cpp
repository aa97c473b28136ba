#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "lexntf/depth.hpp"
#include "lexntf/errors.hpp"
#include "support.hpp"

using namespace lexntf;
using lexntf::testing::ideal;
using lexntf::testing::random_ideal;

namespace {

constexpr std::int64_t kPrime = 1000003;

std::int64_t inv_mod(std::int64_t a) {
  std::int64_t r = 1, e = kPrime - 2;
  a %= kPrime;
  while (e) {
    if (e & 1) r = r * a % kPrime;
    a = a * a % kPrime;
    e >>= 1;
  }
  return r;
}

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t inv = inv_mod(a[rank][c]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::int64_t f = a[r][c] * inv % kPrime;
      for (std::size_t k = c; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % kPrime + kPrime) % kPrime;
    }
    ++rank;
  }
  return rank;
}

/// pd(S/I) for squarefree I from Hochster's formula over every vertex subset, homology mod a large prime.
unsigned pd_oracle(const SquarefreeIdeal& I) {
  const std::size_t n = I.nvars();
  auto is_face = [&](std::uint64_t f) {
    for (auto g : I.generators()) {
      if ((g & f) == g) return false;
    }
    return true;
  };
  unsigned pd = 0;
  for (std::uint64_t sigma = 0; sigma < (std::uint64_t{1} << n); ++sigma) {
    // Faces of the restriction, bucketed by dimension (the empty face has dimension -1).
    std::vector<std::vector<std::uint64_t>> faces(n + 2);
    for (std::uint64_t f = sigma;; f = (f - 1) & sigma) {
      if (is_face(f)) faces[std::popcount(f)].push_back(f);
      if (f == 0) break;
    }
    auto boundary_rank = [&](std::size_t size) -> std::size_t {
      // Boundary map from faces with `size` vertices to faces with size - 1 vertices.
      if (size == 0 || size > n || faces[size].empty() || faces[size - 1].empty()) return 0;
      std::vector<std::vector<std::int64_t>> m(faces[size].size(), std::vector<std::int64_t>(faces[size - 1].size(), 0));
      for (std::size_t r = 0; r < faces[size].size(); ++r) {
        const auto f = faces[size][r];
        int sign = 1;
        for (std::size_t v = 0; v < n; ++v) {
          if (!(f >> v & 1)) continue;
          const auto g = f & ~(std::uint64_t{1} << v);
          const auto it = std::find(faces[size - 1].begin(), faces[size - 1].end(), g);
          m[r][static_cast<std::size_t>(it - faces[size - 1].begin())] = sign > 0 ? 1 : kPrime - 1;
          sign = -sign;
        }
      }
      return rank_mod_p(m);
    };
    const std::size_t k = static_cast<std::size_t>(std::popcount(sigma));
    for (std::size_t size = 0; size <= k; ++size) {
      // Reduced homology in dimension size - 1.
      const std::size_t betti = faces[size].size() - boundary_rank(size) - boundary_rank(size + 1);
      if (betti > 0) pd = std::max<unsigned>(pd, static_cast<unsigned>(k - size));
    }
  }
  return pd;
}

SquarefreeIdeal random_squarefree(std::mt19937& rng, std::size_t n, std::size_t gens) {
  std::vector<std::uint64_t> g;
  while (g.size() < gens) {
    const std::uint64_t m = rng() & ((std::uint64_t{1} << n) - 1);
    if (std::popcount(m) >= 2) g.push_back(m);
  }
  return SquarefreeIdeal(n, g);
}

}  // namespace

TEST(Polarize, Examples) {
  const auto a = polarize(ideal(2, "x2^2"));
  EXPECT_EQ(a.added, 1u);
  EXPECT_EQ(a.ideal, SquarefreeIdeal(3, {0b110}));
  EXPECT_EQ(a.labels, (std::vector<std::string>{"x1", "x2", "y2_1"}));

  const auto b = polarize(ideal(2, "x1^2,x1*x2"));
  EXPECT_EQ(b.added, 1u);
  EXPECT_EQ(b.ideal, SquarefreeIdeal(3, {0b101, 0b011}));
  EXPECT_EQ(depth(ideal(2, "x1^2,x1*x2")), depth_squarefree(b.ideal) - b.added);

  const auto sq = ideal(3, "x1*x2,x2*x3");
  const auto c = polarize(sq);
  EXPECT_EQ(c.added, 0u);
  EXPECT_EQ(c.ideal, SquarefreeIdeal::from_ideal(sq));
  EXPECT_THROW((void)polarize(MonomialIdeal(2)), DomainError);
}

TEST(ProjectiveDimension, Examples) {
  EXPECT_EQ(projective_dimension(SquarefreeIdeal::from_ideal(ideal(2, "x1*x2"))), 1u);
  EXPECT_EQ(projective_dimension(SquarefreeIdeal::from_ideal(ideal(3, "x1*x2,x2*x3,x1*x3"))), 2u);
  EXPECT_EQ(projective_dimension(SquarefreeIdeal::from_ideal(ideal(3, "x1*x2,x1*x3"))), 2u);
  EXPECT_THROW((void)projective_dimension(SquarefreeIdeal::from_ideal(ideal(3, "x1*x2,x1*x3")), std::nullopt, 2),
               ResourceLimitError);
  EXPECT_THROW(SquarefreeIdeal(70, {3}), DimensionError);
}

TEST(Depth, Examples) {
  EXPECT_EQ(depth(ideal(4, "x1*x3,x1*x4,x2^2")), 1u);
  EXPECT_EQ(depth(ideal(3, "x1*x2*x3")), 2u);
  EXPECT_EQ(depth(ideal(3, "x1*x2,x1*x3,x2^2,x2*x3")), 0u);
}

TEST(Homology, SmallComplexes) {
  auto nothing_but_empty = [](std::uint64_t f) { return f == 0; };
  EXPECT_EQ(reduced_homology_rank(0b111, -1, nothing_but_empty), 1u);
  auto circle = [](std::uint64_t f) { return std::popcount(f) <= 2; };
  EXPECT_EQ(reduced_homology_rank(0b111, 1, circle), 1u);
  EXPECT_EQ(reduced_homology_rank(0b111, 0, circle), 0u);
  auto points = [](std::uint64_t f) { return std::popcount(f) <= 1; };
  EXPECT_EQ(reduced_homology_rank(0b1111, 0, points), 3u);
}

TEST(Homology, RationalRankSurvivesOverflow) {
  const std::int64_t big = std::int64_t{1} << 40;
  // Rows (big, 1), (1, big), (big+1, big+1): rank 2; elimination products exceed 64 bits.
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> rows = {
      {{0, big}, {1, 1}}, {{0, 1}, {1, big}}, {{0, big + 1}, {1, big + 1}}};
  EXPECT_EQ(rational_rank(rows), 2u);
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> dependent = {{{0, big}, {1, big}}, {{0, 3}, {1, 3}}};
  EXPECT_EQ(rational_rank(dependent), 1u);
}

TEST(ProjectiveDimension, MatchesExhaustiveHochsterOracle) {
  std::mt19937 rng(41);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 2 + rng() % 6;
    const auto I = random_squarefree(rng, n, 1 + rng() % 5);
    EXPECT_EQ(projective_dimension(I), pd_oracle(I)) << to_string(I.to_ideal());
  }
}

TEST(Depth, RoutesAgreeAndStayInRange) {
  std::mt19937 rng(42);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const auto I = random_ideal(rng, n, 5, 3);
    if (I.is_unit()) continue;
    const auto h = depth_report(I, {DepthRoute::hochster, false, 64});
    const auto c = depth_report(I, {DepthRoute::colon, false, 64});
    const auto fast = depth_report(I);
    EXPECT_EQ(h.depth, c.depth) << to_string(I);
    EXPECT_EQ(h.depth, fast.depth) << to_string(I);
    EXPECT_EQ(h.depth + h.pd, n);
    EXPECT_LE(h.depth, n - 1);
    const auto ass = associated_primes(I);
    const bool maximal = std::any_of(ass.begin(), ass.end(), [](const VarPrime& p) { return p.is_maximal(); });
    EXPECT_EQ(h.depth == 0, maximal) << to_string(I);
    EXPECT_EQ(socle_witness(I).has_value(), maximal) << to_string(I);
  }
}

TEST(Depth, PolarizationInvariance) {
  std::mt19937 rng(43);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const auto I = random_ideal(rng, n, 4, 3);
    if (I.is_unit()) continue;
    const auto p = polarize(I);
    if (p.ideal.nvars() > kMaxVars) continue;
    const auto once = p.ideal.to_ideal();
    EXPECT_EQ(depth(I), depth(once, {DepthRoute::hochster, false, 64}) - p.added) << to_string(I);
    const auto twice = polarize(once);
    EXPECT_EQ(twice.added, 0u);
    EXPECT_EQ(twice.ideal, p.ideal);
    EXPECT_EQ(depth_squarefree(twice.ideal), depth_squarefree(p.ideal));
  }
}

TEST(Depth, HochsterRespectsVariableCap) {
  const auto I = ideal(3, "x1^8,x2^8,x3^8");
  EXPECT_THROW((void)depth(I, {DepthRoute::hochster, false, 20}), ResourceLimitError);
  EXPECT_EQ(depth(I, {DepthRoute::automatic, false, 20}), 0u);
}
