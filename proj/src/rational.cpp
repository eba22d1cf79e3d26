#include "pacres/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace pacres {

Rational Rational::of(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  if (num == 0) return {0, 1};
  const std::uint64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

Rational Rational::dyadic(unsigned k) {
  if (k >= 64) throw std::invalid_argument("rational: dyadic exponent too large");
  return {1, 1ull << k};
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const auto digits_value = [](std::string_view s,
                               std::uint64_t& out) -> bool {
    if (s.empty()) return false;
    out = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
      if (out > (UINT64_MAX - 9) / 10) return false;
      out = out * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return true;
  };

  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::uint64_t n = 0, d = 0;
    if (!digits_value(text.substr(0, slash), n)) return std::nullopt;
    if (!digits_value(text.substr(slash + 1), d)) return std::nullopt;
    if (d == 0) return std::nullopt;
    return of(n, d);
  }

  const auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    std::uint64_t n = 0;
    if (!digits_value(text, n)) return std::nullopt;
    return of(n, 1);
  }
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = text.substr(dot + 1);
  if (whole.empty() && frac.empty()) return std::nullopt;
  std::uint64_t w = 0;
  if (!whole.empty() && !digits_value(whole, w)) return std::nullopt;
  std::uint64_t f = 0;
  std::uint64_t scale = 1;
  for (char c : frac) {
    if (c < '0' || c > '9') return std::nullopt;
    if (scale > UINT64_MAX / 10) return std::nullopt;
    scale *= 10;
    f = f * 10 + static_cast<std::uint64_t>(c - '0');
  }
  // w + f/scale
  if (w > (UINT64_MAX - f) / scale) return std::nullopt;
  return of(w * scale + f, scale);
}

namespace {

std::optional<std::uint64_t> mul_u64(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > UINT64_MAX) return std::nullopt;
  return static_cast<std::uint64_t>(p);
}

}  // namespace

std::optional<Rational> Rational::checked_mul(const Rational& o) const {
  // Cross-reduce before multiplying to keep products small.
  const std::uint64_t g1 = std::gcd(num, o.den);
  const std::uint64_t g2 = std::gcd(o.num, den);
  const auto n = mul_u64(num / g1, o.num / g2);
  const auto d = mul_u64(den / g2, o.den / g1);
  if (!n || !d) return std::nullopt;
  return Rational{*n, *d};
}

std::optional<Rational> Rational::checked_add(const Rational& o) const {
  const std::uint64_t g = std::gcd(den, o.den);
  const auto d = mul_u64(den / g, o.den);
  if (!d) return std::nullopt;
  const auto t1 = mul_u64(num, o.den / g);
  const auto t2 = mul_u64(o.num, den / g);
  if (!t1 || !t2) return std::nullopt;
  if (*t1 > UINT64_MAX - *t2) return std::nullopt;
  return of(*t1 + *t2, *d);
}

Rational Rational::complement() const {
  if (num > den) throw std::invalid_argument("rational: complement of value > 1");
  return of(den - num, den);
}

std::optional<Rational> Rational::checked_pow(unsigned e) const {
  Rational acc = one();
  Rational base = *this;
  while (e > 0) {
    if (e & 1u) {
      const auto next = acc.checked_mul(base);
      if (!next) return std::nullopt;
      acc = *next;
    }
    e >>= 1u;
    if (e == 0) break;
    const auto sq = base.checked_mul(base);
    if (!sq) return std::nullopt;
    base = *sq;
  }
  return acc;
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::uint64_t floor_scale(const Rational& r, std::uint64_t m) {
  const unsigned __int128 p = static_cast<unsigned __int128>(r.num) * m;
  return static_cast<std::uint64_t>(p / r.den);
}

bool count_exceeds_fraction(std::uint64_t count, const Rational& r,
                            std::uint64_t m) {
  return static_cast<unsigned __int128>(count) * r.den >
         static_cast<unsigned __int128>(r.num) * m;
}

bool count_within_fraction(std::uint64_t count, const Rational& r,
                           std::uint64_t m) {
  return !count_exceeds_fraction(count, r, m);
}

}  // namespace pacres
