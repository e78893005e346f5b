#include "adversary/best_response.hpp"

#include <limits>

#include "core/info.hpp"

namespace secrecy::adversary {

BestResponse best_response(const Pmf& p, const DistortionMatrix& d, double tie_tol) {
  if (d.recon_size() == 0) throw ValidationError("best_response: empty reconstruction alphabet");
  if (tie_tol <= 0.0) throw ValidationError("best_response: tie tolerance must be positive");

  std::vector<double> expectations(d.recon_size());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t z = 0; z < d.recon_size(); ++z) {
    expectations[z] = expected_distortion(p, d, z);
    if (expectations[z] < best) best = expectations[z];
  }

  BestResponse r;
  r.value = best;
  for (std::size_t z = 0; z < d.recon_size(); ++z)
    if (expectations[z] <= best + tie_tol) r.argmin_set.push_back(z);
  return r;
}

double min_distortion(const Pmf& p, const DistortionMatrix& d) {
  return best_response(p, d).value;
}

}  // namespace secrecy::adversary
