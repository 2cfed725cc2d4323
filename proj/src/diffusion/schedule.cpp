#include "vecfield/diffusion/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace vecfield {

double cosine_alpha_bar(int t, int T, double s) {
  if (T < 1) throw std::domain_error("cosine_alpha_bar: T must be >= 1");
  if (t < 0 || t > T) throw std::domain_error("cosine_alpha_bar: t outside [0, T]");
  if (!(s >= 0.0)) throw std::domain_error("cosine_alpha_bar: offset must be >= 0");
  auto f = [&](double u) {
    const double c = std::cos((u + s) / (1.0 + s) * std::numbers::pi / 2.0);
    return c * c;
  };
  if (t == 0) return 1.0;
  if (t == T) return 0.0;  // cos(pi/2)^2; avoid the 1e-33 rounding residue
  return f(static_cast<double>(t) / T) / f(0.0);
}

DiffusionSchedule::DiffusionSchedule(int T, double s) : T_(T), s_(s) {
  if (T < 1) throw std::invalid_argument("diffusion schedule: T must be >= 1");
  if (!(s >= 0.0)) throw std::invalid_argument("diffusion schedule: s must be >= 0");
  beta_.assign(T + 1, 0.0);
  alpha_.assign(T + 1, 1.0);
  alpha_bar_.assign(T + 1, 1.0);
  sigma_.assign(T + 1, 0.0);
  for (int t = 1; t <= T; ++t) {
    const double raw = 1.0 - cosine_alpha_bar(t, T, s) / cosine_alpha_bar(t - 1, T, s);
    beta_[t] = std::clamp(raw, kBetaMin, kBetaMax);
    alpha_[t] = 1.0 - beta_[t];
    alpha_bar_[t] = alpha_bar_[t - 1] * alpha_[t];
    sigma_[t] = std::sqrt((1.0 - alpha_bar_[t - 1]) / (1.0 - alpha_bar_[t]) * beta_[t]);
  }
}

void DiffusionSchedule::check(int t, int lo) const {
  if (t < lo || t > T_) throw std::domain_error("diffusion schedule: timestep out of range");
}

double DiffusionSchedule::beta(int t) const {
  check(t, 1);
  return beta_[t];
}

double DiffusionSchedule::alpha(int t) const {
  check(t, 1);
  return alpha_[t];
}

double DiffusionSchedule::alpha_bar(int t) const {
  check(t, 0);
  return alpha_bar_[t];
}

double DiffusionSchedule::sigma(int t) const {
  check(t, 1);
  return sigma_[t];
}

std::string DiffusionSchedule::csv() const {
  std::string out = "t,beta,alpha,alpha_bar,sigma\n";
  char buf[160];
  for (int t = 0; t <= T_; ++t) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g\n", t, beta_[t], alpha_[t], alpha_bar_[t],
                  sigma_[t]);
    out += buf;
  }
  return out;
}

}  // namespace vecfield
