#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rectdist/rectangle.hpp"

namespace rectdist {

/// A finite multiset of same-dimension rectangles: the barcode of a
/// rectangle-decomposable module. Bar order is storage order only.
///
/// The empty barcode is the zero module. An empty barcode read from a format
/// that carries no dimension has dim() == 0, which is compatible with every
/// dimension.
class Barcode {
 public:
  Barcode() = default;
  explicit Barcode(std::size_t dim) : dim_(dim) {}
  /// Dimension is taken from the first bar. Throws DimensionMismatch if the
  /// bars disagree.
  explicit Barcode(std::vector<Rectangle> bars);
  /// Throws DimensionMismatch if some bar has a dimension other than `dim`.
  Barcode(std::size_t dim, std::vector<Rectangle> bars);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return bars_.size(); }
  bool empty() const noexcept { return bars_.empty(); }
  const std::vector<Rectangle>& bars() const noexcept { return bars_; }
  const Rectangle& operator[](std::size_t i) const { return bars_.at(i); }

  void push_back(Rectangle bar);

 private:
  std::size_t dim_ = 0;
  std::vector<Rectangle> bars_;
};

/// Whether two barcodes may be compared. Throws DimensionMismatch otherwise.
void require_compatible(const Barcode& left, const Barcode& right);

/// Multiset equality: equal after sorting bars by (lower, upper).
bool same_multiset(const Barcode& a, const Barcode& b);

enum class Format { Text, Json };

/// Parses "text" or "json". Throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

/// TEXT: one bar per line, axes separated by `x`, each axis an interval such as
/// `(0,1/2)`, `[1,inf)` or `(-inf,3]`. `#` starts a comment; blank lines are
/// ignored.
///
/// JSON: {"dim": 2, "bars": [{"lower": ["0", "-inf"], "upper": ["1/2", "3"]}]}
/// with endpoints as exact-rational strings (integers are also accepted).
///
/// Throws ParseError, DimensionMismatch or InvalidRectangle.
Barcode parse_barcode(std::string_view input, Format format);
Barcode parse_barcode(std::istream& input, Format format);

/// A single TEXT bar, e.g. "(0,2) x [1,inf)".
Rectangle parse_rectangle(std::string_view literal);

/// Canonical serialization. TEXT renders open brackets, lowest-terms
/// rationals, one bar per line terminated by '\n'.
std::string serialize_barcode(const Barcode& barcode, Format format);
std::string format_rectangle(const Rectangle& r);

}  // namespace rectdist
