#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "vecfield/diffusion/schedule.hpp"

namespace vecfield {

// Flat payload with shape metadata only (e.g. {L, L, L, d}).
struct LatentTensor {
  std::vector<double> values;
  std::vector<std::size_t> shape;

  LatentTensor() = default;
  // Throws std::invalid_argument if the shape product differs from values.size().
  LatentTensor(std::vector<double> values, std::vector<std::size_t> shape);

  static LatentTensor zeros(std::vector<std::size_t> shape);
  static LatentTensor gaussian(std::vector<std::size_t> shape, std::uint64_t seed);

  std::size_t size() const { return values.size(); }
  bool finite() const;
};

double max_abs_difference(const LatentTensor& a, const LatentTensor& b);

// z_t = sqrt(abar_t) z0 + sqrt(1 - abar_t) noise, 0 <= t <= T.
LatentTensor forward_sample(const LatentTensor& z0, int t, const DiffusionSchedule& schedule,
                            const LatentTensor& noise);

// z_{t-1} = (z_t - beta_t / sqrt(1 - abar_t) eps_pred) / sqrt(alpha_t) + sigma noise
// with sigma = schedule.sigma(t) unless overridden. The noise term is dropped
// at t = 1; an empty `noise` tensor means no injected noise.
LatentTensor reverse_step(const LatentTensor& z_t, int t, const LatentTensor& eps_pred,
                          const DiffusionSchedule& schedule, const LatentTensor& noise,
                          std::optional<double> sigma_override = std::nullopt);

// eps = (z_t - sqrt(abar) x0) / sqrt(1 - abar). Throws std::domain_error when abar == 1.
LatentTensor x0_to_eps(const LatentTensor& z_t, const LatentTensor& x0_pred, double alpha_bar);
LatentTensor x0_to_eps(const LatentTensor& z_t, const LatentTensor& x0_pred, int t,
                       const DiffusionSchedule& schedule);

// x0 = (z_t - sqrt(1 - abar) eps) / sqrt(abar). Throws std::domain_error when abar == 0.
LatentTensor eps_to_x0(const LatentTensor& z_t, const LatentTensor& eps, double alpha_bar);
LatentTensor eps_to_x0(const LatentTensor& z_t, const LatentTensor& eps, int t, const DiffusionSchedule& schedule);

class Denoiser {
 public:
  virtual ~Denoiser() = default;
  virtual LatentTensor predict_eps(const LatentTensor& z_t, int t) const = 0;
};

// Knows the clean sample and returns the exact noise under the x0
// parameterization. Test stand-in for a trained network.
class OracleDenoiser final : public Denoiser {
 public:
  OracleDenoiser(LatentTensor z0, const DiffusionSchedule& schedule) : z0_(std::move(z0)), schedule_(schedule) {}

  LatentTensor predict_eps(const LatentTensor& z_t, int t) const override {
    return x0_to_eps(z_t, z0_, t, schedule_);
  }

 private:
  LatentTensor z0_;
  const DiffusionSchedule& schedule_;
};

struct ChainOptions {
  bool inject_noise = false;
  std::uint64_t seed = 0;
  // Called with (t - 1, z_{t-1}) after every step.
  std::function<void(int, const LatentTensor&)> observer;
};

// Runs z_T -> z_0 through `denoiser`.
LatentTensor run_reverse_chain(const Denoiser& denoiser, LatentTensor z_T, const DiffusionSchedule& schedule,
                               const ChainOptions& options = {});

}  // namespace vecfield
