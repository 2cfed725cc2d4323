#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace vecfield {

enum class FieldVariant { GaussianClip, Gaussian, Tanh };

std::string_view variant_name(FieldVariant v);
std::optional<FieldVariant> parse_variant(std::string_view name);

struct FieldParams {
  FieldVariant variant = FieldVariant::GaussianClip;
  double sigma_sf = 0.1;    // softmax temperature, Angstrom
  double sigma_mag = 0.45;  // magnitude width, Angstrom
  double d_clip = 0.8;      // clip distance, Angstrom
  double eps_num = 1e-8;    // direction normalisation guard
  bool exclusive = false;   // repel particles of element types absent from the molecule

  // Throws std::invalid_argument if any width or guard is not positive.
  void validate() const;
};

}  // namespace vecfield
