#include "rectdist/random.hpp"

#include <stdexcept>
#include <utility>

namespace rectdist {

void RandomBarParams::validate() const {
  if (dim == 0) throw std::invalid_argument("dim must be >= 1");
  if (hi <= lo) throw std::invalid_argument("range must contain at least two integers");
  if (!(inf_prob >= 0.0 && inf_prob <= 1.0)) throw std::invalid_argument("inf-prob must lie in [0, 1]");
}

Rectangle random_rectangle(std::mt19937_64& rng, const RandomBarParams& params) {
  params.validate();
  std::uniform_int_distribution<long long> coord(params.lo, params.hi);
  std::bernoulli_distribution unbounded(params.inf_prob);
  std::vector<ExtReal> lower;
  std::vector<ExtReal> upper;
  for (std::size_t i = 0; i < params.dim; ++i) {
    long long a = coord(rng);
    long long b = coord(rng);
    while (a == b) b = coord(rng);
    if (b < a) std::swap(a, b);
    lower.push_back(unbounded(rng) ? ExtReal::neg_inf() : ExtReal(a));
    upper.push_back(unbounded(rng) ? ExtReal::pos_inf() : ExtReal(b));
  }
  return Rectangle(std::move(lower), std::move(upper));
}

Barcode random_barcode(std::mt19937_64& rng, std::size_t count, const RandomBarParams& params) {
  params.validate();
  Barcode barcode(params.dim);
  for (std::size_t i = 0; i < count; ++i) barcode.push_back(random_rectangle(rng, params));
  return barcode;
}

}  // namespace rectdist
