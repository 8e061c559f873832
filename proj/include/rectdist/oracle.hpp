#pragma once

// Definition-level reference implementations used to cross-check the
// closed-form distances. Nothing here calls interleaving_distance's formula
// to decide an interleaving; the bottleneck enumeration does use it for the
// per-pair costs, but not the assignment search.

#include <cstddef>
#include <optional>
#include <vector>

#include "rectdist/barcode.hpp"

namespace rectdist::oracle {

/// Support of a rectangle module, or std::nullopt for the zero module.
using ModuleSupport = std::optional<Rectangle>;

/// Per-axis sorted coordinate lists; the grid is their product.
using Axes = std::vector<std::vector<Rational>>;

/// Per axis: every finite endpoint of `m` and `n` translated by 0, +-eps and
/// +-2eps, one sentinel below and one above all of them, and the midpoint of
/// every adjacent pair. Every cell of the arrangement cut out by the module
/// boundaries and their eps- and 2eps-translates then holds a grid point.
///
/// At least one of the supports must be a rectangle; both must agree on the
/// dimension.
Axes critical_grid(const ModuleSupport& m, const ModuleSupport& n, const Rational& eps);

/// A rectangle module (or the zero module) shifted by `offset` and restricted
/// to a finite grid. The value space at u is k when lower < u + offset < upper
/// componentwise and 0 otherwise; transitions between comparable points are
/// the identity when both ends are k and zero otherwise.
class GridModule {
 public:
  GridModule(const ModuleSupport& support, const Axes& axes, const Rational& offset = 0);

  std::size_t dim() const noexcept { return strides_.size(); }
  std::size_t size() const noexcept { return dims_.size(); }
  const std::vector<std::size_t>& strides() const noexcept { return strides_; }
  const std::vector<std::size_t>& extents() const noexcept { return extents_; }

  /// Dimension (0 or 1) of the value space at a grid point.
  bool dim_at(std::size_t point) const { return dims_[point]; }
  /// Transition map for points u <= v: true for the identity, false for zero.
  bool transition(std::size_t u, std::size_t v) const { return dims_[u] && dims_[v]; }

 private:
  std::vector<std::size_t> extents_;
  std::vector<std::size_t> strides_;
  std::vector<bool> dims_;
};

/// Whether the modules on `m` and `n` are eps-interleaved.
///
/// Morphisms between rectangle modules are scalar multiples of the canonical
/// one (identity wherever source and target are both k), so each of f and g
/// is searched over {zero, canonical}; a canonical candidate that fails the
/// naturality squares is discarded. The four interleaving diagrams are then
/// checked at every grid point. Naturality is checked on covering pairs of
/// the grid, which generate the order.
bool grid_interleaving_check(const ModuleSupport& m, const ModuleSupport& n, const Rational& eps);
bool grid_interleaving_check(const Rectangle& r, const Rectangle& q, const Rational& eps);
/// Same, on caller-supplied axes (must refine critical_grid to be exact).
bool grid_interleaving_check(const ModuleSupport& m, const ModuleSupport& n, const Rational& eps,
                             const Axes& axes);

/// Whether the canonical map from `m` to the eps-shift of `n` is a morphism
/// that is non-zero somewhere.
bool grid_nontrivial_morphism(const Rectangle& m, const Rectangle& n, const Rational& eps);

/// Candidate values for the interleaving distance: 0 and |x - y|, |x - y|/2
/// over all finite endpoint coordinates x, y of both supports. Sorted,
/// distinct.
std::vector<Rational> distance_candidates(const ModuleSupport& m, const ModuleSupport& n);

/// Smallest candidate eps at which grid_interleaving_check holds, or +inf.
/// Every candidate is evaluated and feasibility is required to be monotone;
/// a violation throws std::logic_error.
ExtReal oracle_interleaving_distance(const ModuleSupport& m, const ModuleSupport& n);
ExtReal oracle_interleaving_distance(const Rectangle& r, const Rectangle& q);

inline constexpr std::size_t kEnumerationLimit = 8;

/// Minimum matching cost over every partial multibijection, by exhaustive
/// enumeration. Throws TooLarge above kEnumerationLimit bars per side.
ExtReal enumerate_bottleneck(const Barcode& left, const Barcode& right);

}  // namespace rectdist::oracle
