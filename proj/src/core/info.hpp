#pragma once

#include <vector>

#include "core/types.hpp"

namespace secrecy {

/// Shannon entropy in bits, with 0 log 0 = 0.
double entropy(const Pmf& p);

/// Entropy of a raw probability vector (validated like a Pmf).
double entropy(const std::vector<double>& probs);

/// H(X|U) in bits from a joint matrix indexed [u][x]; entries must be a
/// normalized joint distribution.
double conditional_entropy(const std::vector<std::vector<double>>& joint_ux);

/// E_p d(X, z) for one reconstruction column.
double expected_distortion(const Pmf& p, const DistortionMatrix& d, std::size_t z);

}  // namespace secrecy
