#include "rectdist/rectangle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rectdist {

namespace {

void require_same_dim(const Rectangle& r, const Rectangle& q, const char* what) {
  if (r.dim() != q.dim()) {
    throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(r.dim()) + " and " +
                            std::to_string(q.dim()));
  }
}

}  // namespace

Rectangle::Rectangle(std::vector<ExtReal> lower, std::vector<ExtReal> upper)
    : Rectangle(lower, upper, std::vector<AxisBrackets>(lower.size())) {}

Rectangle::Rectangle(std::vector<ExtReal> lower, std::vector<ExtReal> upper, std::vector<AxisBrackets> brackets)
    : lower_(std::move(lower)), upper_(std::move(upper)), brackets_(std::move(brackets)) {
  if (lower_.empty()) throw DimensionMismatch("rectangle must have dimension >= 1");
  if (lower_.size() != upper_.size() || lower_.size() != brackets_.size()) {
    throw DimensionMismatch("rectangle corners have lengths " + std::to_string(lower_.size()) + " and " +
                            std::to_string(upper_.size()));
  }
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (lower_[i].is_pos_inf()) throw InvalidRectangle("lower endpoint +inf on axis " + std::to_string(i));
    if (upper_[i].is_neg_inf()) throw InvalidRectangle("upper endpoint -inf on axis " + std::to_string(i));
    if (!(lower_[i] < upper_[i])) {
      throw InvalidRectangle("empty interval (" + lower_[i].to_string() + "," + upper_[i].to_string() +
                             ") on axis " + std::to_string(i));
    }
  }
}

bool Rectangle::contains(std::span<const Rational> point) const {
  if (point.size() != dim()) throw DimensionMismatch("point dimension differs from rectangle");
  for (std::size_t i = 0; i < dim(); ++i) {
    ExtReal x(point[i]);
    if (!(lower_[i] < x && x < upper_[i])) return false;
  }
  return true;
}

bool lex_less(const Rectangle& r, const Rectangle& q) {
  if (r.lower() != q.lower()) {
    return std::lexicographical_compare(r.lower().begin(), r.lower().end(), q.lower().begin(), q.lower().end());
  }
  return std::lexicographical_compare(r.upper().begin(), r.upper().end(), q.upper().begin(), q.upper().end());
}

ExtReal triviality_threshold(const Rectangle& r) {
  ExtReal result = ExtReal::pos_inf();
  for (std::size_t i = 0; i < r.dim(); ++i) result = min(result, r.upper(i) - r.lower(i));
  return result;
}

ExtReal zero_distance(const Rectangle& r) { return halve(triviality_threshold(r)); }

Rectangle shift(const Rectangle& r, const Rational& eps) {
  if (eps < 0) throw std::invalid_argument("shift amount must be non-negative");
  std::vector<ExtReal> lower;
  std::vector<ExtReal> upper;
  lower.reserve(r.dim());
  upper.reserve(r.dim());
  for (std::size_t i = 0; i < r.dim(); ++i) {
    lower.push_back(r.lower(i) - ExtReal(eps));
    upper.push_back(r.upper(i) - ExtReal(eps));
  }
  return Rectangle(std::move(lower), std::move(upper), r.display_brackets());
}

bool admits_nontrivial_morphism(const Rectangle& r, const Rectangle& q, const Rational& eps) {
  require_same_dim(r, q, "admits_nontrivial_morphism");
  ExtReal lower_bound = ExtReal::neg_inf();
  ExtReal upper_bound = ExtReal::pos_inf();
  for (std::size_t i = 0; i < r.dim(); ++i) {
    lower_bound = max(lower_bound, q.lower(i) - r.lower(i));
    lower_bound = max(lower_bound, q.upper(i) - r.upper(i));
    upper_bound = min(upper_bound, q.upper(i) - r.lower(i));
  }
  const ExtReal e(eps);
  return lower_bound <= e && e < upper_bound;
}

ExtReal interleaving_distance(const Rectangle& r, const Rectangle& q) {
  require_same_dim(r, q, "interleaving_distance");
  const ExtReal via_zero = max(zero_distance(r), zero_distance(q));
  const ExtReal via_overlap = max(max_norm_dist(q.lower(), r.lower()), max_norm_dist(q.upper(), r.upper()));
  return min(via_zero, via_overlap);
}

}  // namespace rectdist
