#pragma once

#include <cstddef>
#include <vector>

#include "adversary/best_response.hpp"
#include "core/types.hpp"

namespace secrecy::corners {

inline constexpr double kDedupTol = 1e-7;        // L-infinity dedup between points
inline constexpr std::size_t kMaxAlphabet = 12;  // subset enumeration is exponential

// A distribution at which the eavesdropper's optimal reconstructions tie with
// multiplicity at least the support size, together with its entropy and
// minimum distortion.
struct CornerPoint {
  Pmf p;
  double alpha;                     // entropy(p), bits
  double beta;                      // min expected distortion
  std::vector<std::size_t> ties;    // full argmin set at p, ascending
  std::vector<std::size_t> support; // support of p, ascending
};

struct CornerSet {
  std::vector<CornerPoint> points;      // canonical order: by (|support|, support, ties)
  std::size_t skipped_singular = 0;     // diagnostic: singular/inconsistent candidate systems
};

// Enumerates every distribution whose best-response tie count is at least its
// support size. For each support set T and tie set S with |S| = |T|, solves the
// square system {mass on T sums to 1; expectations equal across S} and keeps
// solutions that are strictly positive on T and whose tie set covers S.
// A consistent singular system with two accepting solutions means the matrix
// admits a continuum of such points and raises DegenerateError.
CornerSet enumerate_corner_points(const DistortionMatrix& d, double dedup_tol = kDedupTol);

}  // namespace secrecy::corners
