#pragma once

#include <cstddef>
#include <vector>

#include "core/error.hpp"

namespace secrecy {

inline constexpr double kPmfNegativeTol = 1e-12;   // entries >= -1e-12 accepted, clamped to 0
inline constexpr double kPmfSumTol = 1e-9;         // |sum - 1| tolerance on construction
inline constexpr double kNormalizeTol = 1e-6;      // normalize() rejects worse inputs
inline constexpr double kSupportThreshold = 1e-12; // entries above this count as support
inline constexpr double kColumnDupTol = 1e-12;     // distortion column redundancy test

// Probability distribution over a finite alphabet. Immutable after construction;
// zero-probability symbols are kept so indices stay stable.
class Pmf {
 public:
  explicit Pmf(std::vector<double> probs);

  // Rescales a near-normalized vector (|sum-1| <= 1e-6) and validates.
  static Pmf normalized(std::vector<double> probs);

  // Point mass on symbol x out of `size` symbols.
  static Pmf point_mass(std::size_t x, std::size_t size);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

  std::vector<std::size_t> support() const;

 private:
  std::vector<double> probs_;
};

// Distortion table d(x, z); rows are source symbols, columns reconstructions.
// Columns must be pairwise distinct (non-redundant).
class DistortionMatrix {
 public:
  explicit DistortionMatrix(std::vector<std::vector<double>> values);

  std::size_t source_size() const { return values_.size(); }
  std::size_t recon_size() const { return values_.empty() ? 0 : values_[0].size(); }
  double operator()(std::size_t x, std::size_t z) const { return values_[x][z]; }
  const std::vector<std::vector<double>>& values() const { return values_; }

  double min_entry() const;
  double max_entry() const;

 private:
  std::vector<std::vector<double>> values_;
};

struct ProblemInstance {
  Pmf source;
  DistortionMatrix distortion;

  ProblemInstance(Pmf src, DistortionMatrix d);
};

}  // namespace secrecy
