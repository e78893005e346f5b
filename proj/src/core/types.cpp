#include "core/types.hpp"

#include <cmath>
#include <string>

namespace secrecy {

namespace {

void check_entries(const std::vector<double>& probs) {
  if (probs.empty()) throw ValidationError("pmf: empty alphabet");
  double sum = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double p = probs[i];
    if (!std::isfinite(p)) throw ValidationError("pmf: non-finite entry at index " + std::to_string(i));
    if (p < -kPmfNegativeTol)
      throw ValidationError("pmf: negative mass " + std::to_string(p) + " at index " + std::to_string(i));
    sum += p;
  }
  if (std::abs(sum - 1.0) > kPmfSumTol)
    throw ValidationError("pmf: entries sum to " + std::to_string(sum) + ", expected 1");
}

}  // namespace

Pmf::Pmf(std::vector<double> probs) : probs_(std::move(probs)) {
  check_entries(probs_);
  for (double& p : probs_)
    if (p < 0.0) p = 0.0;
}

Pmf Pmf::normalized(std::vector<double> probs) {
  if (probs.empty()) throw ValidationError("pmf: empty alphabet");
  double sum = 0.0;
  for (double p : probs) {
    if (!std::isfinite(p)) throw ValidationError("pmf: non-finite entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kNormalizeTol)
    throw ValidationError("pmf: sum " + std::to_string(sum) + " is off by more than " +
                          std::to_string(kNormalizeTol) + "; refusing to rescale");
  for (double& p : probs) p /= sum;
  return Pmf(std::move(probs));
}

Pmf Pmf::point_mass(std::size_t x, std::size_t size) {
  if (x >= size) throw ValidationError("pmf: point mass index out of range");
  std::vector<double> probs(size, 0.0);
  probs[x] = 1.0;
  return Pmf(std::move(probs));
}

std::vector<std::size_t> Pmf::support() const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < probs_.size(); ++i)
    if (probs_[i] > kSupportThreshold) idx.push_back(i);
  return idx;
}

DistortionMatrix::DistortionMatrix(std::vector<std::vector<double>> values)
    : values_(std::move(values)) {
  if (values_.empty() || values_[0].empty())
    throw ValidationError("distortion: matrix must be non-empty");
  const std::size_t cols = values_[0].size();
  for (const auto& row : values_) {
    if (row.size() != cols) throw ValidationError("distortion: ragged rows");
    for (double v : row)
      if (!std::isfinite(v)) throw ValidationError("distortion: non-finite entry");
  }
  // Redundant columns are rejected rather than deduplicated; silent mutation
  // of user input would hide modeling mistakes.
  for (std::size_t z1 = 0; z1 < cols; ++z1) {
    for (std::size_t z2 = z1 + 1; z2 < cols; ++z2) {
      bool equal = true;
      for (const auto& row : values_) {
        if (std::abs(row[z1] - row[z2]) > kColumnDupTol) {
          equal = false;
          break;
        }
      }
      if (equal)
        throw ValidationError("distortion: redundant columns " + std::to_string(z1) + " and " +
                              std::to_string(z2) + " are identical");
    }
  }
}

double DistortionMatrix::min_entry() const {
  double m = values_[0][0];
  for (const auto& row : values_)
    for (double v : row) m = std::min(m, v);
  return m;
}

double DistortionMatrix::max_entry() const {
  double m = values_[0][0];
  for (const auto& row : values_)
    for (double v : row) m = std::max(m, v);
  return m;
}

ProblemInstance::ProblemInstance(Pmf src, DistortionMatrix d)
    : source(std::move(src)), distortion(std::move(d)) {
  if (source.size() != distortion.source_size())
    throw ValidationError("instance: source pmf has " + std::to_string(source.size()) +
                          " symbols but distortion has " +
                          std::to_string(distortion.source_size()) + " rows");
}

}  // namespace secrecy
