#include "lexntf/monomial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>

#include "lexntf/errors.hpp"

namespace lexntf {

namespace {

void check_n(std::size_t n) {
  if (n > kMaxVars) {
    throw DomainError("at most " + std::to_string(kMaxVars) + " variables are supported, got " +
                      std::to_string(n));
  }
}

Exponent checked_exponent(unsigned long value) {
  if (value > std::numeric_limits<Exponent>::max()) {
    throw DomainError("exponent " + std::to_string(value) + " does not fit in 16 bits");
  }
  return static_cast<Exponent>(value);
}

}  // namespace

Monomial::Monomial(std::size_t n) {
  check_n(n);
  n_ = static_cast<std::uint8_t>(n);
}

Monomial::Monomial(std::size_t n, std::span<const Exponent> exponents) : Monomial(n) {
  if (exponents.size() != n) {
    throw DimensionError("exponent vector has length " + std::to_string(exponents.size()) +
                         ", expected " + std::to_string(n));
  }
  std::copy(exponents.begin(), exponents.end(), exps_.begin());
}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(exponents.size(), std::span<const Exponent>(exponents.begin(), exponents.size())) {}

Monomial Monomial::variable(std::size_t n, std::size_t var, Exponent power) {
  if (var < 1 || var > n) {
    throw DomainError("variable x" + std::to_string(var) + " outside 1.." + std::to_string(n));
  }
  Monomial m(n);
  m.exps_[var - 1] = power;
  return m;
}

Exponent Monomial::exponent(std::size_t var) const {
  if (var < 1 || var > n_) {
    throw DomainError("variable x" + std::to_string(var) + " outside 1.." + std::to_string(n_));
  }
  return exps_[var - 1];
}

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += exps_[i];
  return d;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (exps_[i] > 0) out.push_back(i + 1);
  }
  return out;
}

std::uint32_t Monomial::support_mask() const noexcept {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (exps_[i] > 0) mask |= 1u << i;
  }
  return mask;
}

std::size_t Monomial::min_var() const {
  const auto mask = support_mask();
  if (mask == 0) throw DomainError("min(m) is undefined for m = 1");
  return static_cast<std::size_t>(std::countr_zero(mask)) + 1;
}

std::size_t Monomial::max_var() const {
  const auto mask = support_mask();
  if (mask == 0) throw DomainError("max(m) is undefined for m = 1");
  return 32 - static_cast<std::size_t>(std::countl_zero(mask));
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.begin() + n_, [](Exponent e) { return e <= 1; });
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = n_;
  for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ exps_[i];
  return h;
}

void check_same_n(const Monomial& a, const Monomial& b) {
  if (a.n() != b.n()) {
    throw DimensionError("monomials live in " + std::to_string(a.n()) + " and " +
                         std::to_string(b.n()) + " variables");
  }
}

std::strong_ordering lex_cmp(const Monomial& a, const Monomial& b) {
  check_same_n(a, b);
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (auto c = ea[i] <=> eb[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) { return lex_cmp(a, b); }

bool divides(const Monomial& a, const Monomial& b) {
  check_same_n(a, b);
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] > eb[i]) return false;
  }
  return true;
}

namespace {

template <class Op>
Monomial combine(const Monomial& a, const Monomial& b, Op op) {
  check_same_n(a, b);
  std::array<Exponent, kMaxVars> out{};
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) out[i] = op(ea[i], eb[i]);
  return Monomial(a.n(), std::span<const Exponent>(out.data(), a.n()));
}

}  // namespace

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return std::max(x, y); });
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return std::min(x, y); });
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](Exponent x, Exponent y) {
    return checked_exponent(static_cast<unsigned long>(x) + y);
  });
}

Monomial divide(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) {
    throw DomainError(to_string(b) + " does not divide " + to_string(a));
  }
  return combine(a, b, [](Exponent x, Exponent y) { return static_cast<Exponent>(x - y); });
}

Monomial power(const Monomial& a, unsigned k) {
  std::array<Exponent, kMaxVars> out{};
  const auto ea = a.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    out[i] = checked_exponent(static_cast<unsigned long>(ea[i]) * k);
  }
  return Monomial(a.n(), std::span<const Exponent>(out.data(), a.n()));
}

std::string to_string(const Monomial& m) {
  std::string out;
  const auto e = m.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (e[i] > 1) {
      out += '^';
      out += std::to_string(e[i]);
    }
  }
  return out.empty() ? "1" : out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  unsigned long number(const char* what) {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    unsigned long value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) {
      throw ParseError(std::string("expected ") + what, pos_);
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Monomial parse_bracket(Cursor& cur, std::size_t n) {
  cur.advance();  // '['
  std::vector<Exponent> exps;
  cur.skip_spaces();
  if (cur.peek() != ']') {
    while (true) {
      cur.skip_spaces();
      exps.push_back(checked_exponent(cur.number("exponent")));
      cur.skip_spaces();
      if (cur.peek() == ',') {
        cur.advance();
        continue;
      }
      if (cur.peek() == ']') break;
      throw ParseError("expected ',' or ']'", cur.pos());
    }
  }
  const std::size_t close = cur.pos();
  cur.advance();
  cur.skip_spaces();
  if (!cur.done()) throw ParseError("trailing characters after exponent vector", cur.pos());
  if (n != 0 && exps.size() != n) {
    throw ParseError("exponent vector has length " + std::to_string(exps.size()) + ", expected " +
                         std::to_string(n),
                     close);
  }
  if (exps.size() > kMaxVars) throw ParseError("too many variables", close);
  return Monomial(exps.size(), exps);
}

}  // namespace

Monomial parse_monomial(std::string_view text, std::size_t n) {
  Cursor cur(text);
  cur.skip_spaces();
  if (cur.peek() == '[') return parse_bracket(cur, n);
  if (n == 0) throw ParseError("variable count required for factor notation", 0);
  check_n(n);

  std::array<Exponent, kMaxVars> exps{};
  if (cur.done()) throw ParseError("empty monomial", cur.pos());
  if (cur.peek() == '1') {
    cur.advance();
    cur.skip_spaces();
    if (!cur.done()) throw ParseError("unexpected text after constant 1", cur.pos());
    return Monomial(n);
  }
  bool expect_factor = true;
  while (true) {
    cur.skip_spaces();
    if (cur.done()) {
      if (expect_factor) throw ParseError("expected factor", cur.pos());
      break;
    }
    const char c = cur.peek();
    if (c == '*') {
      if (expect_factor) throw ParseError("unexpected '*'", cur.pos());
      cur.advance();
      expect_factor = true;
      continue;
    }
    if (c != 'x' && c != 'X') throw ParseError(std::string("unexpected character '") + c + "'", cur.pos());
    const std::size_t at = cur.pos();
    cur.advance();
    const auto var = cur.number("variable index");
    if (var < 1 || var > n) {
      throw ParseError("variable x" + std::to_string(var) + " outside x1..x" + std::to_string(n), at);
    }
    unsigned long e = 1;
    if (cur.peek() == '^') {
      cur.advance();
      e = cur.number("exponent");
    }
    exps[var - 1] = checked_exponent(static_cast<unsigned long>(exps[var - 1]) + e);
    expect_factor = false;
  }
  return Monomial(n, std::span<const Exponent>(exps.data(), n));
}

std::vector<Monomial> parse_monomial_list(std::string_view text, std::size_t n) {
  std::vector<Monomial> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : ',';
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      try {
        out.push_back(parse_monomial(text.substr(start, i - start), n));
      } catch (const ParseError& e) {
        throw ParseError(std::string("in item '") + std::string(text.substr(start, i - start)) + "'",
                         start + e.position());
      }
      start = i + 1;
    }
  }
  return out;
}

namespace {

void fill_degree(std::size_t n, unsigned d, std::size_t i, std::array<Exponent, kMaxVars>& cur,
                 std::vector<Monomial>& out) {
  if (i + 1 == n) {
    cur[i] = static_cast<Exponent>(d);
    out.emplace_back(n, std::span<const Exponent>(cur.data(), n));
    return;
  }
  for (int e = static_cast<int>(d); e >= 0; --e) {
    cur[i] = static_cast<Exponent>(e);
    fill_degree(n, d - static_cast<unsigned>(e), i + 1, cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  check_n(n);
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::array<Exponent, kMaxVars> cur{};
  fill_degree(n, d, 0, cur, out);
  return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  for (unsigned k = 0; k <= d; ++k) {
    auto layer = monomials_of_degree(n, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace lexntf
