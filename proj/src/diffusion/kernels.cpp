#include "vecfield/diffusion/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "vecfield/core/rng.hpp"

namespace vecfield {

namespace {

void require_same_shape(const LatentTensor& a, const LatentTensor& b, const char* what) {
  if (a.shape != b.shape || a.values.size() != b.values.size()) {
    throw std::domain_error(std::string(what) + ": shape mismatch");
  }
}

}  // namespace

LatentTensor::LatentTensor(std::vector<double> v, std::vector<std::size_t> s)
    : values(std::move(v)), shape(std::move(s)) {
  const std::size_t n = std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
  if (n != values.size()) throw std::invalid_argument("latent tensor: shape does not match value count");
}

LatentTensor LatentTensor::zeros(std::vector<std::size_t> shape) {
  const std::size_t n = std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
  return LatentTensor(std::vector<double>(n, 0.0), std::move(shape));
}

LatentTensor LatentTensor::gaussian(std::vector<std::size_t> shape, std::uint64_t seed) {
  LatentTensor out = zeros(std::move(shape));
  Rng rng(seed);
  for (double& v : out.values) v = rng.normal();
  return out;
}

bool LatentTensor::finite() const {
  return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

double max_abs_difference(const LatentTensor& a, const LatentTensor& b) {
  require_same_shape(a, b, "max_abs_difference");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

LatentTensor forward_sample(const LatentTensor& z0, int t, const DiffusionSchedule& schedule,
                            const LatentTensor& noise) {
  require_same_shape(z0, noise, "forward_sample");
  const double ab = schedule.alpha_bar(t);
  const double a = std::sqrt(ab);
  const double b = std::sqrt(1.0 - ab);
  LatentTensor out = z0;
  for (std::size_t i = 0; i < out.size(); ++i) out.values[i] = a * z0.values[i] + b * noise.values[i];
  return out;
}

LatentTensor reverse_step(const LatentTensor& z_t, int t, const LatentTensor& eps_pred,
                          const DiffusionSchedule& schedule, const LatentTensor& noise,
                          std::optional<double> sigma_override) {
  require_same_shape(z_t, eps_pred, "reverse_step");
  const bool use_noise = t > 1 && !noise.values.empty();
  if (use_noise) require_same_shape(z_t, noise, "reverse_step");
  const double inv_sqrt_alpha = 1.0 / std::sqrt(schedule.alpha(t));
  const double coef = schedule.beta(t) / std::sqrt(1.0 - schedule.alpha_bar(t));
  const double sigma = use_noise ? sigma_override.value_or(schedule.sigma(t)) : 0.0;
  LatentTensor out = z_t;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.values[i] = (z_t.values[i] - coef * eps_pred.values[i]) * inv_sqrt_alpha;
    if (use_noise) out.values[i] += sigma * noise.values[i];
  }
  return out;
}

LatentTensor x0_to_eps(const LatentTensor& z_t, const LatentTensor& x0_pred, double alpha_bar) {
  require_same_shape(z_t, x0_pred, "x0_to_eps");
  if (!(alpha_bar < 1.0)) throw std::domain_error("x0_to_eps: alpha_bar must be < 1");
  const double a = std::sqrt(alpha_bar);
  const double inv_b = 1.0 / std::sqrt(1.0 - alpha_bar);
  LatentTensor out = z_t;
  for (std::size_t i = 0; i < out.size(); ++i) out.values[i] = (z_t.values[i] - a * x0_pred.values[i]) * inv_b;
  return out;
}

LatentTensor x0_to_eps(const LatentTensor& z_t, const LatentTensor& x0_pred, int t,
                       const DiffusionSchedule& schedule) {
  return x0_to_eps(z_t, x0_pred, schedule.alpha_bar(t));
}

LatentTensor eps_to_x0(const LatentTensor& z_t, const LatentTensor& eps, double alpha_bar) {
  require_same_shape(z_t, eps, "eps_to_x0");
  if (!(alpha_bar > 0.0)) throw std::domain_error("eps_to_x0: alpha_bar must be > 0");
  const double inv_a = 1.0 / std::sqrt(alpha_bar);
  const double b = std::sqrt(1.0 - alpha_bar);
  LatentTensor out = z_t;
  for (std::size_t i = 0; i < out.size(); ++i) out.values[i] = (z_t.values[i] - b * eps.values[i]) * inv_a;
  return out;
}

LatentTensor eps_to_x0(const LatentTensor& z_t, const LatentTensor& eps, int t, const DiffusionSchedule& schedule) {
  return eps_to_x0(z_t, eps, schedule.alpha_bar(t));
}

LatentTensor run_reverse_chain(const Denoiser& denoiser, LatentTensor z, const DiffusionSchedule& schedule,
                               const ChainOptions& options) {
  const LatentTensor none;
  for (int t = schedule.steps(); t >= 1; --t) {
    const LatentTensor eps = denoiser.predict_eps(z, t);
    if (options.inject_noise && t > 1) {
      const LatentTensor noise = LatentTensor::gaussian(z.shape, hash_combine(options.seed, t));
      z = reverse_step(z, t, eps, schedule, noise);
    } else {
      z = reverse_step(z, t, eps, schedule, none);
    }
    if (options.observer) options.observer(t - 1, z);
  }
  return z;
}

}  // namespace vecfield
