#pragma once

#include <cstddef>
#include <random>

#include "rectdist/barcode.hpp"

namespace rectdist {

/// Parameters of the random bar generator: integer endpoints in [lo, hi],
/// each lower endpoint replaced by -inf (and each upper by +inf)
/// independently with probability inf_prob.
struct RandomBarParams {
  std::size_t dim = 2;
  long long lo = -5;
  long long hi = 5;
  double inf_prob = 0.1;

  /// Throws std::invalid_argument on dim == 0, hi <= lo or inf_prob outside [0, 1].
  void validate() const;
};

Rectangle random_rectangle(std::mt19937_64& rng, const RandomBarParams& params);
Barcode random_barcode(std::mt19937_64& rng, std::size_t count, const RandomBarParams& params);

}  // namespace rectdist
