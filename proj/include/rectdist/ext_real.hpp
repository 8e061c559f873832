#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "rectdist/errors.hpp"

namespace rectdist {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;

/// An element of the extended real line: a finite rational, -inf or +inf.
///
/// Arithmetic follows the extended conventions used throughout the library:
///
///   a + (+-inf) = (+-inf) + a = +-inf      (a finite)
///   (+-inf) + (+-inf) = +-inf              (same sign)
///   (+-inf) - (+-inf) = 0                  (same sign)
///   |+-inf| = +inf
///   -inf < a < +inf
///
/// A sum of opposite infinities is undefined and raises UndefinedArithmetic.
class ExtReal {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  ExtReal() = default;
  ExtReal(const Rational& value) : kind_(Kind::Finite), value_(value) {}  // NOLINT(google-explicit-constructor)
  ExtReal(long long value) : kind_(Kind::Finite), value_(value) {}        // NOLINT(google-explicit-constructor)
  ExtReal(int value) : ExtReal(static_cast<long long>(value)) {}          // NOLINT(google-explicit-constructor)

  /// Exact p/q. Throws std::domain_error when q == 0.
  static ExtReal fraction(long long numerator, long long denominator);
  static ExtReal pos_inf() { return ExtReal(Kind::PosInf); }
  static ExtReal neg_inf() { return ExtReal(Kind::NegInf); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }

  /// The finite value. Throws std::logic_error on an infinity.
  const Rational& value() const;

  friend ExtReal operator+(const ExtReal& x, const ExtReal& y);
  friend ExtReal operator-(const ExtReal& x, const ExtReal& y);
  ExtReal operator-() const;

  friend bool operator==(const ExtReal& x, const ExtReal& y);
  friend std::strong_ordering operator<=>(const ExtReal& x, const ExtReal& y);

  /// Canonical rendering: `p/q`, `p` when q == 1, `inf`, `-inf`.
  std::string to_string() const;

  /// Accepts integers, finite decimals (`0.25`), fractions (`-3/4`), `inf`,
  /// `+inf` and `-inf`. Decimals are converted exactly.
  static std::optional<ExtReal> try_parse(std::string_view text);
  /// Like try_parse, but throws ParseError (without position) on failure.
  static ExtReal parse(std::string_view text);

 private:
  explicit ExtReal(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Finite;
  Rational value_{0};
};

ExtReal add(const ExtReal& x, const ExtReal& y);
ExtReal sub(const ExtReal& x, const ExtReal& y);
ExtReal abs(const ExtReal& x);
/// x / 2, with +-inf / 2 = +-inf.
ExtReal halve(const ExtReal& x);

const ExtReal& min(const ExtReal& x, const ExtReal& y);
const ExtReal& max(const ExtReal& x, const ExtReal& y);

/// max_i |u_i - v_i| under the extended conventions; the result lies in
/// [0, +inf]. Throws DimensionMismatch unless both have the same length >= 1.
ExtReal max_norm_dist(std::span<const ExtReal> u, std::span<const ExtReal> v);

std::ostream& operator<<(std::ostream& os, const ExtReal& x);

}  // namespace rectdist
