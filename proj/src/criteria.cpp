#include "motifmap/criteria.hpp"

#include <cmath>

namespace motifmap {

double kli(const Pwm& pwm, const Eigen::Ref<const Vec>& theta0) {
  if (theta0.size() != pwm.depth())
    throw DimensionMismatch("theta0 length must equal pwm depth");
  if ((theta0.array() <= 0.0).any()) throw ZeroBackgroundProbability();
  double acc = 0.0;
  for (int j = 0; j < pwm.width(); ++j)
    for (int i = 0; i < pwm.depth(); ++i) {
      double p = pwm.columns(i, j);
      if (p > 0.0) acc += p * std::log(p / theta0[i]);
    }
  return acc;
}

double composition_kl(const Eigen::Ref<const Vec>& p,
                      const Eigen::Ref<const Vec>& q) {
  if (p.size() != q.size()) throw DimensionMismatch("p and q must share length");
  double acc = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) throw SupportMismatch("q vanishes where p > 0");
    acc += p[i] * std::log(p[i] / q[i]);
  }
  return acc;
}

double aic(double loglik, int n_params) { return -2.0 * loglik + 2.0 * n_params; }

double bic(double loglik, int n_params, long n) {
  if (n < 1) throw InvalidArgument("sample size must be at least 1");
  return -2.0 * loglik + n_params * std::log(static_cast<double>(n));
}

int motif_param_count(int d, const std::vector<int>& widths) {
  int params = static_cast<int>(widths.size()) + d - 1;  // rho: D - 1
  for (int w : widths) params += (d - 1) * w;
  return params;
}

}  // namespace motifmap
