#include "core/info.hpp"

#include <cmath>
#include <string>

namespace secrecy {

namespace {

double entropy_terms(const std::vector<double>& probs) {
  double h = 0.0;
  for (double p : probs)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

}  // namespace

double entropy(const Pmf& p) { return entropy_terms(p.probs()); }

double entropy(const std::vector<double>& probs) {
  Pmf p(probs);  // validates
  return entropy_terms(p.probs());
}

double conditional_entropy(const std::vector<std::vector<double>>& joint_ux) {
  if (joint_ux.empty() || joint_ux[0].empty())
    throw ValidationError("conditional_entropy: empty joint matrix");
  double sum = 0.0;
  for (const auto& row : joint_ux) {
    if (row.size() != joint_ux[0].size())
      throw ValidationError("conditional_entropy: ragged joint matrix");
    for (double v : row) {
      if (!std::isfinite(v) || v < -kPmfNegativeTol)
        throw ValidationError("conditional_entropy: invalid joint entry " + std::to_string(v));
      sum += v;
    }
  }
  if (std::abs(sum - 1.0) > kPmfSumTol)
    throw ValidationError("conditional_entropy: joint sums to " + std::to_string(sum));

  // H(X|U) = sum_u p(u) H(X | U=u)
  double h = 0.0;
  for (const auto& row : joint_ux) {
    double pu = 0.0;
    for (double v : row) pu += std::max(v, 0.0);
    if (pu <= 0.0) continue;
    for (double v : row)
      if (v > 0.0) h -= v * std::log2(v / pu);
  }
  return h;
}

double expected_distortion(const Pmf& p, const DistortionMatrix& d, std::size_t z) {
  if (p.size() != d.source_size())
    throw ValidationError("expected_distortion: pmf/distortion dimension mismatch");
  if (z >= d.recon_size())
    throw ValidationError("expected_distortion: reconstruction index " + std::to_string(z) +
                          " out of range");
  double e = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) e += p[x] * d(x, z);
  return e;
}

}  // namespace secrecy
