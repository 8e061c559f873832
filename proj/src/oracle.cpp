#include "rectdist/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace rectdist::oracle {

namespace {

std::size_t support_dim(const ModuleSupport& m, const ModuleSupport& n) {
  if (m && n && m->dim() != n->dim()) {
    throw DimensionMismatch("modules have dimensions " + std::to_string(m->dim()) + " and " +
                            std::to_string(n->dim()));
  }
  if (m) return m->dim();
  if (n) return n->dim();
  return 0;
}

void collect_finite(const ExtReal& x, std::vector<Rational>& out) {
  if (x.is_finite()) out.push_back(x.value());
}

void sort_unique(std::vector<Rational>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

enum class MapChoice : std::uint8_t { Zero, Canonical };

// A candidate morphism src -> dst between grid modules: the zero map, or the
// identity at every point where both value spaces are k.
struct GridMap {
  const GridModule& src;
  const GridModule& dst;
  MapChoice choice;

  bool nonzero_at(std::size_t p) const { return choice == MapChoice::Canonical && src.dim_at(p) && dst.dim_at(p); }
};

// Naturality square  src_u -> src_v -> dst_v  ==  src_u -> dst_u -> dst_v
// on every covering pair u < v of the grid.
bool is_natural(const GridMap& f) {
  const auto& extents = f.src.extents();
  const auto& strides = f.src.strides();
  for (std::size_t u = 0; u < f.src.size(); ++u) {
    if (!f.src.dim_at(u)) continue;
    for (std::size_t axis = 0; axis < extents.size(); ++axis) {
      if ((u / strides[axis]) % extents[axis] + 1 == extents[axis]) continue;
      const std::size_t v = u + strides[axis];
      if (!f.dst.dim_at(v)) continue;
      const bool via_src = f.src.transition(u, v) && f.nonzero_at(v);
      const bool via_dst = f.nonzero_at(u) && f.dst.transition(u, v);
      if (via_src != via_dst) return false;
    }
  }
  return true;
}

// Triangle  M_u -> N_{u+eps} -> M_{u+2eps}  ==  M_u -> M_{u+2eps}  at every
// grid point u. `there` is the map M -> N(eps) at u, `back` the map
// N -> M(eps) at u + eps; `m0` and `m2` are M and M(2eps).
bool triangle_commutes(const GridMap& there, const GridMap& back, const GridModule& m0, const GridModule& m2) {
  for (std::size_t u = 0; u < m0.size(); ++u) {
    if (!(m0.dim_at(u) && m2.dim_at(u))) continue;  // both sides are maps into or out of 0
    const bool composite = there.nonzero_at(u) && back.nonzero_at(u);
    if (!composite) return false;  // the transition is the identity
  }
  return true;
}

}  // namespace

Axes critical_grid(const ModuleSupport& m, const ModuleSupport& n, const Rational& eps) {
  const std::size_t dim = support_dim(m, n);
  if (dim == 0) throw std::invalid_argument("critical_grid needs at least one rectangle");
  if (eps < 0) throw std::invalid_argument("eps must be non-negative");

  Axes axes(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Rational> endpoints;
    for (const auto* r : {m ? &*m : nullptr, n ? &*n : nullptr}) {
      if (r == nullptr) continue;
      collect_finite(r->lower(i), endpoints);
      collect_finite(r->upper(i), endpoints);
    }
    std::vector<Rational> values;
    for (const auto& x : endpoints) {
      for (int t = -2; t <= 2; ++t) values.push_back(x + t * eps);
    }
    sort_unique(values);
    if (values.empty()) values.emplace_back(0);

    std::vector<Rational> axis;
    axis.reserve(2 * values.size() + 3);
    axis.push_back(values.front() - 1);
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (j > 0) axis.push_back((values[j - 1] + values[j]) / 2);
      axis.push_back(values[j]);
    }
    axis.push_back(values.back() + 1);
    axes[i] = std::move(axis);
  }
  return axes;
}

GridModule::GridModule(const ModuleSupport& support, const Axes& axes, const Rational& offset) {
  const std::size_t n = axes.size();
  if (n == 0) throw std::invalid_argument("GridModule needs at least one axis");
  if (support && support->dim() != n) throw DimensionMismatch("grid and rectangle dimensions differ");

  extents_.resize(n);
  strides_.resize(n);
  std::size_t total = 1;
  for (std::size_t i = n; i-- > 0;) {
    extents_[i] = axes[i].size();
    strides_[i] = total;
    total *= extents_[i];
  }

  // Membership factors over the axes.
  std::vector<std::vector<bool>> inside(n);
  for (std::size_t i = 0; i < n; ++i) {
    inside[i].resize(axes[i].size(), false);
    if (!support) continue;
    for (std::size_t j = 0; j < axes[i].size(); ++j) {
      const ExtReal x(axes[i][j] + offset);
      inside[i][j] = support->lower(i) < x && x < support->upper(i);
    }
  }

  dims_.assign(total, false);
  if (!support) return;
  for (std::size_t p = 0; p < total; ++p) {
    bool in = true;
    for (std::size_t i = 0; i < n && in; ++i) in = inside[i][(p / strides_[i]) % extents_[i]];
    dims_[p] = in;
  }
}

bool grid_interleaving_check(const ModuleSupport& m, const ModuleSupport& n, const Rational& eps,
                             const Axes& axes) {
  if (eps < 0) throw std::invalid_argument("eps must be non-negative");
  const std::size_t dim = support_dim(m, n);
  if (dim == 0) return true;  // zero vs zero
  if (axes.size() != dim) throw DimensionMismatch("axes do not match the module dimension");

  const GridModule m0(m, axes, 0);
  const GridModule m1(m, axes, eps);
  const GridModule m2(m, axes, 2 * eps);
  const GridModule n0(n, axes, 0);
  const GridModule n1(n, axes, eps);
  const GridModule n2(n, axes, 2 * eps);

  std::vector<MapChoice> f_choices{MapChoice::Zero};
  std::vector<MapChoice> g_choices{MapChoice::Zero};
  if (is_natural(GridMap{m0, n1, MapChoice::Canonical})) f_choices.push_back(MapChoice::Canonical);
  if (is_natural(GridMap{n0, m1, MapChoice::Canonical})) g_choices.push_back(MapChoice::Canonical);

  for (MapChoice fc : f_choices) {
    for (MapChoice gc : g_choices) {
      // f_u : M_u -> N_{u+eps}, g_u : N_u -> M_{u+eps}, and the same maps
      // one eps further up.
      const GridMap f{m0, n1, fc};
      const GridMap g{n0, m1, gc};
      const GridMap f_up{m1, n2, fc};
      const GridMap g_up{n1, m2, gc};
      if (triangle_commutes(f, g_up, m0, m2) && triangle_commutes(g, f_up, n0, n2)) return true;
    }
  }
  return false;
}

bool grid_interleaving_check(const ModuleSupport& m, const ModuleSupport& n, const Rational& eps) {
  if (support_dim(m, n) == 0) return true;
  return grid_interleaving_check(m, n, eps, critical_grid(m, n, eps));
}

bool grid_interleaving_check(const Rectangle& r, const Rectangle& q, const Rational& eps) {
  return grid_interleaving_check(ModuleSupport(r), ModuleSupport(q), eps);
}

bool grid_nontrivial_morphism(const Rectangle& m, const Rectangle& n, const Rational& eps) {
  const Axes axes = critical_grid(m, n, eps);
  const GridModule src(m, axes, 0);
  const GridModule dst(n, axes, eps);
  const GridMap f{src, dst, MapChoice::Canonical};
  if (!is_natural(f)) return false;
  for (std::size_t p = 0; p < src.size(); ++p) {
    if (f.nonzero_at(p)) return true;
  }
  return false;
}

std::vector<Rational> distance_candidates(const ModuleSupport& m, const ModuleSupport& n) {
  std::vector<Rational> coords;
  for (const auto* r : {m ? &*m : nullptr, n ? &*n : nullptr}) {
    if (r == nullptr) continue;
    for (std::size_t i = 0; i < r->dim(); ++i) {
      collect_finite(r->lower(i), coords);
      collect_finite(r->upper(i), coords);
    }
  }
  std::vector<Rational> out{Rational(0)};
  for (std::size_t s = 0; s < coords.size(); ++s) {
    for (std::size_t t = s + 1; t < coords.size(); ++t) {
      Rational d = coords[s] - coords[t];
      if (d < 0) d = -d;
      out.push_back(d);
      out.push_back(d / 2);
    }
  }
  sort_unique(out);
  return out;
}

ExtReal oracle_interleaving_distance(const ModuleSupport& m, const ModuleSupport& n) {
  if (support_dim(m, n) == 0) return ExtReal(0);
  std::optional<Rational> first;
  for (const auto& eps : distance_candidates(m, n)) {
    const bool ok = grid_interleaving_check(m, n, eps);
    if (ok && !first) first = eps;
    if (!ok && first) {
      throw std::logic_error("interleaving feasibility not monotone: holds at " + ExtReal(*first).to_string() +
                             " but not at " + ExtReal(eps).to_string());
    }
  }
  return first ? ExtReal(*first) : ExtReal::pos_inf();
}

ExtReal oracle_interleaving_distance(const Rectangle& r, const Rectangle& q) {
  return oracle_interleaving_distance(ModuleSupport(r), ModuleSupport(q));
}

ExtReal enumerate_bottleneck(const Barcode& left, const Barcode& right) {
  require_compatible(left, right);
  if (left.size() > kEnumerationLimit || right.size() > kEnumerationLimit) {
    throw TooLarge("enumeration is limited to " + std::to_string(kEnumerationLimit) + " bars per side, got " +
                   std::to_string(left.size()) + " and " + std::to_string(right.size()));
  }
  const std::size_t m = left.size();
  const std::size_t k = right.size();

  std::vector<ExtReal> pair(m * k);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) pair[i * k + j] = interleaving_distance(left[i], right[j]);
  }
  std::vector<ExtReal> left_zero;
  std::vector<ExtReal> right_zero;
  for (const auto& r : left.bars()) left_zero.push_back(zero_distance(r));
  for (const auto& q : right.bars()) right_zero.push_back(zero_distance(q));

  // Assign each left bar in turn to nothing or to an unused right bar.
  ExtReal best = ExtReal::pos_inf();
  bool seen = false;
  std::vector<bool> used(k, false);
  std::function<void(std::size_t, const ExtReal&)> visit = [&](std::size_t i, const ExtReal& cost) {
    if (i == m) {
      ExtReal total = cost;
      for (std::size_t j = 0; j < k; ++j) {
        if (!used[j]) total = max(total, right_zero[j]);
      }
      if (!seen || total < best) best = total;
      seen = true;
      return;
    }
    visit(i + 1, max(cost, left_zero[i]));
    for (std::size_t j = 0; j < k; ++j) {
      if (used[j]) continue;
      used[j] = true;
      visit(i + 1, max(cost, pair[i * k + j]));
      used[j] = false;
    }
  };
  visit(0, ExtReal(0));
  return best;
}

}  // namespace rectdist::oracle
