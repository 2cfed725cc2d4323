#pragma once

#include <string>
#include <vector>

namespace vecfield {

inline constexpr int kDefaultTimesteps = 1000;
inline constexpr double kDefaultCosineOffset = 0.008;
inline constexpr double kBetaMin = 1e-8;
inline constexpr double kBetaMax = 0.999;

// Closed-form cosine signal level cos^2((t/T + s)/(1 + s) * pi/2) divided by
// its t = 0 value. Throws std::domain_error unless 0 <= t <= T.
double cosine_alpha_bar(int t, int T, double s = kDefaultCosineOffset);

// beta_t = 1 - abar(t)/abar(t-1) clipped to [kBetaMin, kBetaMax]. The stored
// alpha_bar is the running product of (1 - beta), so it equals the closed
// form wherever no clipping happened and stays consistent with alpha and
// beta everywhere.
class DiffusionSchedule {
 public:
  explicit DiffusionSchedule(int T = kDefaultTimesteps, double s = kDefaultCosineOffset);

  int steps() const { return T_; }
  double offset() const { return s_; }

  // Index 1..T (beta, alpha, sigma) or 0..T (alpha_bar); out of range throws
  // std::domain_error.
  double beta(int t) const;
  double alpha(int t) const;
  double alpha_bar(int t) const;
  double sigma(int t) const;  // sqrt((1 - abar_{t-1}) / (1 - abar_t) * beta_t)

  // Columns t,beta,alpha,alpha_bar,sigma; row t = 0 carries beta 0, alpha 1.
  std::string csv() const;

 private:
  void check(int t, int lo) const;

  int T_;
  double s_;
  std::vector<double> beta_, alpha_, alpha_bar_, sigma_;
};

}  // namespace vecfield
