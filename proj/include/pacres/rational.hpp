#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

// Exact nonnegative rationals on 64-bit numerator/denominator.
//
// Probabilities are kept exact wherever the source allows it: affine and
// uniform sources produce dyadic values, decision thresholds are compared
// by 128-bit cross multiplication, and command-line probabilities are
// parsed from decimal text without a float round trip.  Arithmetic that
// could leave 64 bits returns nullopt instead of overflowing silently.

namespace pacres {

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;  // > 0, gcd(num, den) == 1

  static Rational of(std::uint64_t num, std::uint64_t den);
  static Rational zero() { return {0, 1}; }
  static Rational one() { return {1, 1}; }
  // 2^-k
  static Rational dyadic(unsigned k);

  // Accepts "0.25", ".5", "3/4", "1", "0"; value must be finite and >= 0.
  static std::optional<Rational> parse(std::string_view text);

  bool is_zero() const { return num == 0; }
  bool is_one() const { return num == den; }

  std::optional<Rational> checked_mul(const Rational& o) const;
  std::optional<Rational> checked_add(const Rational& o) const;
  // 1 - *this; requires *this <= 1.
  Rational complement() const;
  // Reciprocal; requires num > 0.
  Rational inverse() const { return of(den, num); }
  std::optional<Rational> checked_pow(unsigned e) const;

  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  // "3/5", or "2" when integral.
  std::string to_string() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<unsigned __int128>(a.num) * b.den <
           static_cast<unsigned __int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }
};

// floor(r * m), exact.
std::uint64_t floor_scale(const Rational& r, std::uint64_t m);

// count > r * m, exact (the strict-threshold comparison used by the
// deciders; for integer count this coincides with count > floor(r * m)).
bool count_exceeds_fraction(std::uint64_t count, const Rational& r,
                            std::uint64_t m);

// count <= r * m, exact (the learner's keep test).
bool count_within_fraction(std::uint64_t count, const Rational& r,
                           std::uint64_t m);

}  // namespace pacres
