#ifndef MOTIFMAP_ASYMPTOTICS_HPP
#define MOTIFMAP_ASYMPTOTICS_HPP

#include <utility>
#include <vector>

#include "motifmap/core.hpp"

namespace motifmap {

// Asymptotic regime of a single planted motif: c the limiting site density,
// w the width, theta0 the limiting total letter proportions, k the motif
// letter contribution fractions.
struct MotifProfile {
  double c = 0.0;
  int w = 1;
  Vec theta0;
  Vec k;

  int d() const { return static_cast<int>(theta0.size()); }
  void validate() const;
};

// MAP divergence factor r: logMAP(A0) grows like r * N, and r > 0 is
// necessary and sufficient for divergence.
double map_df(const MotifProfile& profile);

// Closed form of r for theta0 = k = 1/d.
double map_df_symmetric(double c, int w, int d);

// r for a single-letter repeat motif planted in a background that keeps the
// total letter proportions uniform.
double map_df_repeat(double c, int w, int d);

// The MotifProfile that map_df_repeat specializes.
MotifProfile repeat_profile(double c, int w, int d);

// Largest r over matched-composition profiles (theta0 = k); equals the
// symmetric closed form, attained at the uniform point.
double map_df_max(double c, int w, int d);

// Divergence factor of the MAP difference when word type q+1 enters an
// established dictionary: rho holds the d letter-word proportions, kappa the
// new motif's composition, rho_next its usage proportion. All proportions
// are relative to the word total under the current model.
double multi_motif_df(const Eigen::Ref<const Vec>& rho,
                      const Eigen::Ref<const Vec>& kappa, int w,
                      double rho_next);

enum class ProfileKind { Symmetric, Repeat, Custom };

struct DfGridSpec {
  ProfileKind kind = ProfileKind::Symmetric;
  int d = 4;
  Vec theta0;  // Custom only
  Vec k;       // Custom only
};

struct DfGridRow {
  double c = 0.0;
  int w = 0;
  double r = 0.0;
  bool valid = true;  // false marks DomainViolation cells
};

// Dense (c, w, r) grid, w-major then c; domain violations become missing
// cells rather than errors.
std::vector<DfGridRow> df_grid(const std::vector<double>& c_values,
                               const std::vector<int>& w_values,
                               const DfGridSpec& spec);

// Least-squares slope of logMAP against N over (N, logMAP) pairs with
// strictly increasing N; needs at least 3 points.
double empirical_rate(const std::vector<std::pair<double, double>>& points);

}  // namespace motifmap

#endif
