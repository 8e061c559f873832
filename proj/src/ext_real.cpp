#include "rectdist/ext_real.hpp"

#include <cctype>
#include <stdexcept>

namespace rectdist {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// cpp_int's string constructor reads a leading 0 as an octal prefix.
boost::multiprecision::cpp_int decimal_integer(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return boost::multiprecision::cpp_int{std::string(digits.substr(first))};
}

// The backend rejects a negative denominator, so move the sign up.
Rational make_rational(boost::multiprecision::cpp_int num, boost::multiprecision::cpp_int den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

// [+-]?digits
std::optional<boost::multiprecision::cpp_int> parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) return std::nullopt;
  boost::multiprecision::cpp_int value = decimal_integer(s);
  return negative ? boost::multiprecision::cpp_int(-value) : value;
}

}  // namespace

ExtReal ExtReal::fraction(long long numerator, long long denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  return ExtReal(make_rational(numerator, denominator));
}

const Rational& ExtReal::value() const {
  if (!is_finite()) throw std::logic_error("value() of an infinite ExtReal");
  return value_;
}

ExtReal operator+(const ExtReal& x, const ExtReal& y) {
  using K = ExtReal::Kind;
  if (x.is_finite() && y.is_finite()) return ExtReal(Rational(x.value_ + y.value_));
  if ((x.kind_ == K::PosInf && y.kind_ == K::NegInf) || (x.kind_ == K::NegInf && y.kind_ == K::PosInf)) {
    throw UndefinedArithmetic("sum of opposite infinities: " + x.to_string() + " + " + y.to_string());
  }
  return ExtReal(x.is_finite() ? y.kind_ : x.kind_);
}

ExtReal operator-(const ExtReal& x, const ExtReal& y) {
  if (x.is_finite() && y.is_finite()) return ExtReal(Rational(x.value_ - y.value_));
  if (!x.is_finite() && x.kind_ == y.kind_) return ExtReal(0);
  if (!x.is_finite()) return x;
  return -y;
}

ExtReal ExtReal::operator-() const {
  switch (kind_) {
    case Kind::NegInf:
      return pos_inf();
    case Kind::PosInf:
      return neg_inf();
    case Kind::Finite:
      break;
  }
  return ExtReal(Rational(-value_));
}

bool operator==(const ExtReal& x, const ExtReal& y) {
  if (x.kind_ != y.kind_) return false;
  return !x.is_finite() || x.value_ == y.value_;
}

std::strong_ordering operator<=>(const ExtReal& x, const ExtReal& y) {
  if (x.kind_ != y.kind_) return x.kind_ <=> y.kind_;
  if (!x.is_finite()) return std::strong_ordering::equal;
  if (x.value_ < y.value_) return std::strong_ordering::less;
  if (y.value_ < x.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtReal::to_string() const {
  switch (kind_) {
    case Kind::NegInf:
      return "-inf";
    case Kind::PosInf:
      return "inf";
    case Kind::Finite:
      break;
  }
  const auto num = boost::multiprecision::numerator(value_);
  const auto den = boost::multiprecision::denominator(value_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<ExtReal> ExtReal::try_parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_integer(text.substr(0, slash));
    auto den = parse_integer(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return ExtReal(make_rational(*num, *den));
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '+' || int_part.front() == '-')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    // At least one digit on some side of the point; "1." and ".5" are accepted.
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;
    if (!frac_part.empty() && !all_digits(frac_part)) return std::nullopt;
    std::string digits = std::string(int_part) + std::string(frac_part);
    boost::multiprecision::cpp_int num = decimal_integer(digits);
    boost::multiprecision::cpp_int den = boost::multiprecision::pow(boost::multiprecision::cpp_int(10),
                                                                    static_cast<unsigned>(frac_part.size()));
    Rational r(num, den);
    return ExtReal(negative ? Rational(-r) : r);
  }

  auto integer = parse_integer(text);
  if (!integer) return std::nullopt;
  return ExtReal(Rational(*integer));
}

ExtReal ExtReal::parse(std::string_view text) {
  auto parsed = try_parse(text);
  if (!parsed) throw ParseError(0, 0, "not an extended real: '" + std::string(text) + "'");
  return *parsed;
}

ExtReal add(const ExtReal& x, const ExtReal& y) { return x + y; }

ExtReal sub(const ExtReal& x, const ExtReal& y) { return x - y; }

ExtReal abs(const ExtReal& x) {
  if (!x.is_finite()) return ExtReal::pos_inf();
  return x.value() < 0 ? -x : x;
}

ExtReal halve(const ExtReal& x) {
  if (!x.is_finite()) return x;
  return ExtReal(Rational(x.value() / 2));
}

const ExtReal& min(const ExtReal& x, const ExtReal& y) { return y < x ? y : x; }

const ExtReal& max(const ExtReal& x, const ExtReal& y) { return x < y ? y : x; }

ExtReal max_norm_dist(std::span<const ExtReal> u, std::span<const ExtReal> v) {
  if (u.size() != v.size() || u.empty()) {
    throw DimensionMismatch("max_norm_dist: lengths " + std::to_string(u.size()) + " and " +
                            std::to_string(v.size()));
  }
  ExtReal result(0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    ExtReal d = abs(u[i] - v[i]);
    if (result < d) result = std::move(d);
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const ExtReal& x) { return os << x.to_string(); }

}  // namespace rectdist
