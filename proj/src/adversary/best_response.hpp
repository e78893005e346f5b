#pragma once

#include <vector>

#include "core/types.hpp"

namespace secrecy::adversary {

inline constexpr double kDefaultTieTol = 1e-9;

// The eavesdropper's best response to a source distribution: the minimum
// expected distortion and every reconstruction within tie tolerance of it.
struct BestResponse {
  double value = 0.0;
  std::vector<std::size_t> argmin_set;  // ascending

  // Deterministic representative for downstream use.
  std::size_t representative() const { return argmin_set.front(); }
};

// Tie tolerance is absolute; distortion tables of magnitude >> 1 should be
// rescaled by the caller.
BestResponse best_response(const Pmf& p, const DistortionMatrix& d, double tie_tol = kDefaultTieTol);

double min_distortion(const Pmf& p, const DistortionMatrix& d);

}  // namespace secrecy::adversary
