#ifndef MOTIFMAP_CRITERIA_HPP
#define MOTIFMAP_CRITERIA_HPP

#include <vector>

#include "motifmap/core.hpp"

namespace motifmap {

// Kullback-Leibler information content of a motif against the background:
// sum over columns of KL(theta_j || theta0), natural log.
double kli(const Pwm& pwm, const Eigen::Ref<const Vec>& theta0);

// KL(p || q) between two letter composition vectors, natural log.
double composition_kl(const Eigen::Ref<const Vec>& p,
                      const Eigen::Ref<const Vec>& q);

double aic(double loglik, int n_params);
double bic(double loglik, int n_params, long n);

// Free parameters of the motif model: (d-1) per PWM column plus D-1 for rho.
int motif_param_count(int d, const std::vector<int>& widths);

}  // namespace motifmap

#endif
