#include "motifmap/asymptotics.hpp"

#include <cmath>
#include <limits>

#include "motifmap/parallel.hpp"

namespace motifmap {

namespace {

constexpr double kDomainTol = 1e-12;

// x log x with the 0 log 0 := 0 convention; negative arguments are domain
// violations of the divergence-factor logs.
double xlogx(double x) {
  if (x < -kDomainTol) throw DomainViolation("negative argument to x log x");
  if (x <= 0.0) return 0.0;
  return x * std::log(x);
}

}  // namespace

void MotifProfile::validate() const {
  if (w < 1) throw InvalidArgument("width must be positive");
  if (c < 0.0 || c * w >= 1.0) throw DomainViolation("need 0 <= c < 1/w");
  if (theta0.size() < 2 || k.size() != theta0.size())
    throw DimensionMismatch("theta0 and k must share length d >= 2");
  if (std::abs(theta0.sum() - 1.0) > 1e-9)
    throw InvalidArgument("theta0 does not sum to 1");
  if ((theta0.array() - k.array() * (c * w) < -kDomainTol).any())
    throw DomainViolation("theta0_i - k_i c w must be nonnegative");
}

double map_df(const MotifProfile& profile) {
  profile.validate();
  const double cw = profile.c * profile.w;
  double r = xlogx(profile.c);
  for (int i = 0; i < profile.d(); ++i) {
    r += xlogx(profile.theta0[i] - profile.k[i] * cw);
    r -= xlogx(profile.theta0[i]);
  }
  r -= xlogx(1.0 - profile.c * (profile.w - 1));
  return r;
}

double map_df_symmetric(double c, int w, int d) {
  if (w < 1 || d < 2) throw InvalidArgument("need w >= 1 and d >= 2");
  const double cw = c * w;
  if (c < 0.0 || cw >= 1.0) throw DomainViolation("need 0 <= c w < 1");
  return xlogx(c) + xlogx(1.0 - cw) + cw * std::log(static_cast<double>(d)) -
         xlogx(1.0 - c * (w - 1));
}

MotifProfile repeat_profile(double c, int w, int d) {
  const double cw = c * w;
  MotifProfile profile;
  profile.c = c;
  profile.w = w;
  profile.theta0 = Vec::Constant(d, (1.0 - cw) / d);
  profile.theta0[0] = (1.0 + (d - 1) * cw) / d;
  profile.k = Vec::Zero(d);
  profile.k[0] = 1.0;
  return profile;
}

double map_df_repeat(double c, int w, int d) {
  if (w < 1 || d < 2) throw InvalidArgument("need w >= 1 and d >= 2");
  const double cw = c * w;
  if (c < 0.0 || cw * d * d >= 1.0)
    throw DomainViolation("repeat regime needs c w < 1/d^2");
  return xlogx(c) + xlogx((1.0 - cw) / d) - xlogx((1.0 + (d - 1) * cw) / d) -
         xlogx(1.0 - c * (w - 1));
}

double map_df_max(double c, int w, int d) { return map_df_symmetric(c, w, d); }

double multi_motif_df(const Eigen::Ref<const Vec>& rho,
                      const Eigen::Ref<const Vec>& kappa, int w,
                      double rho_next) {
  if (rho.size() != kappa.size() || rho.size() < 2)
    throw DimensionMismatch("rho and kappa must share length d >= 2");
  if (w < 1) throw InvalidArgument("width must be positive");
  if (std::abs(kappa.sum() - 1.0) > 1e-9)
    throw InvalidArgument("kappa does not sum to 1");
  if (rho_next < 0.0 || rho_next * (w - 1) >= 1.0)
    throw DomainViolation("need 0 <= rho_next (w-1) < 1");
  double r = xlogx(rho_next) - xlogx(1.0 - (w - 1) * rho_next);
  for (int i = 0; i < rho.size(); ++i) {
    r += xlogx(rho[i] - kappa[i] * w * rho_next);
    r -= xlogx(rho[i]);
  }
  return r;
}

std::vector<DfGridRow> df_grid(const std::vector<double>& c_values,
                               const std::vector<int>& w_values,
                               const DfGridSpec& spec) {
  if (c_values.empty() || w_values.empty())
    throw InvalidArgument("grid ranges must be non-empty");
  if (spec.kind == ProfileKind::Custom &&
      (spec.theta0.size() != spec.d || spec.k.size() != spec.d))
    throw DimensionMismatch("custom grid needs theta0 and k of length d");

  const int nc = static_cast<int>(c_values.size());
  std::vector<DfGridRow> rows(w_values.size() * c_values.size());
  parallel_for(static_cast<int>(rows.size()), [&](int idx) {
    DfGridRow& row = rows[static_cast<size_t>(idx)];
    row.w = w_values[static_cast<size_t>(idx / nc)];
    row.c = c_values[static_cast<size_t>(idx % nc)];
    try {
      switch (spec.kind) {
        case ProfileKind::Symmetric:
          row.r = map_df_symmetric(row.c, row.w, spec.d);
          break;
        case ProfileKind::Repeat:
          row.r = map_df_repeat(row.c, row.w, spec.d);
          break;
        case ProfileKind::Custom: {
          MotifProfile profile{row.c, row.w, spec.theta0, spec.k};
          row.r = map_df(profile);
          break;
        }
      }
    } catch (const DomainViolation&) {
      row.valid = false;
      row.r = std::numeric_limits<double>::quiet_NaN();
    }
  });
  return rows;
}

double empirical_rate(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw TooFewPoints();
  for (size_t i = 1; i < points.size(); ++i)
    if (points[i].first <= points[i - 1].first)
      throw InvalidArgument("points must have strictly increasing N");
  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& [x, y] : points) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= static_cast<double>(points.size());
  mean_y /= static_cast<double>(points.size());
  double sxy = 0.0, sxx = 0.0;
  for (const auto& [x, y] : points) {
    sxy += (x - mean_x) * (y - mean_y);
    sxx += (x - mean_x) * (x - mean_x);
  }
  return sxy / sxx;
}

}  // namespace motifmap
