#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rectdist/ext_real.hpp"

namespace rectdist {

enum class Bracket : std::uint8_t { Open, Closed };

/// Brackets as written by the user on one axis. Only used to echo input back;
/// every distance is computed on the open rectangle.
struct AxisBrackets {
  Bracket lower = Bracket::Open;
  Bracket upper = Bracket::Open;

  friend bool operator==(const AxisBrackets&, const AxisBrackets&) = default;
};

/// An n-parameter rectangle (a_1, b_1) x ... x (a_n, b_n), the support of a
/// rectangle persistence module.
///
/// Invariants, checked on construction:
///   - n >= 1 and both corner vectors have length n;
///   - a_i is finite or -inf, b_i is finite or +inf;
///   - a_i < b_i on every axis.
///
/// Equality compares the corners only; bracket records never matter.
class Rectangle {
 public:
  /// Throws DimensionMismatch on inconsistent lengths and InvalidRectangle on a
  /// violated endpoint invariant.
  Rectangle(std::vector<ExtReal> lower, std::vector<ExtReal> upper);
  Rectangle(std::vector<ExtReal> lower, std::vector<ExtReal> upper, std::vector<AxisBrackets> brackets);

  std::size_t dim() const noexcept { return lower_.size(); }
  const std::vector<ExtReal>& lower() const noexcept { return lower_; }
  const std::vector<ExtReal>& upper() const noexcept { return upper_; }
  const ExtReal& lower(std::size_t axis) const { return lower_.at(axis); }
  const ExtReal& upper(std::size_t axis) const { return upper_.at(axis); }
  const std::vector<AxisBrackets>& display_brackets() const noexcept { return brackets_; }

  /// Same corners, all brackets open.
  Rectangle normalized() const { return Rectangle(lower_, upper_); }

  /// Strict membership a < u < b; coordinates are finite.
  bool contains(std::span<const Rational> point) const;

  friend bool operator==(const Rectangle& r, const Rectangle& q) {
    return r.lower_ == q.lower_ && r.upper_ == q.upper_;
  }

 private:
  std::vector<ExtReal> lower_;
  std::vector<ExtReal> upper_;
  std::vector<AxisBrackets> brackets_;
};

/// Lexicographic order on (lower, upper).
bool lex_less(const Rectangle& r, const Rectangle& q);

/// min_i (b_i - a_i). The module is eps-trivial exactly when eps >= this.
ExtReal triviality_threshold(const Rectangle& r);

/// Interleaving distance to the zero module: triviality_threshold / 2.
ExtReal zero_distance(const Rectangle& r);

/// Support of the eps-shifted module: every corner moved by -eps. Infinite
/// corners stay put. Throws std::invalid_argument when eps < 0.
Rectangle shift(const Rectangle& r, const Rational& eps);

/// Whether a non-trivial morphism from the module on `r` to the eps-shift of
/// the module on `q` exists, i.e. with r = (a, b), q = (c, d):
///
///   max{ max_i (c_i - a_i), max_i (d_i - b_i) } <= eps < min_i (d_i - a_i).
bool admits_nontrivial_morphism(const Rectangle& r, const Rectangle& q, const Rational& eps);

/// Closed-form interleaving distance between two rectangle modules,
/// r = (a, b), q = (c, d):
///
///   min{ max{ min_i (b_i - a_i)/2, min_i (d_i - c_i)/2 },
///        max{ |c - a|_inf, |d - b|_inf } }
///
/// The first term is realised by the pair of zero morphisms, the second by
/// the pair of canonical (identity-on-overlap) morphisms.
ExtReal interleaving_distance(const Rectangle& r, const Rectangle& q);

}  // namespace rectdist
