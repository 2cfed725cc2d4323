#include "vecfield/field/field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vecfield {

std::string_view variant_name(FieldVariant v) {
  switch (v) {
    case FieldVariant::GaussianClip:
      return "GaussianClip";
    case FieldVariant::Gaussian:
      return "Gaussian";
    case FieldVariant::Tanh:
      return "Tanh";
  }
  return "?";
}

std::optional<FieldVariant> parse_variant(std::string_view name) {
  for (FieldVariant v : {FieldVariant::GaussianClip, FieldVariant::Gaussian, FieldVariant::Tanh}) {
    if (variant_name(v) == name) return v;
  }
  return std::nullopt;
}

void FieldParams::validate() const {
  if (!(sigma_sf > 0.0)) throw std::invalid_argument("sigma_sf must be positive");
  if (!(sigma_mag > 0.0)) throw std::invalid_argument("sigma_mag must be positive");
  if (!(d_clip > 0.0)) throw std::invalid_argument("d_clip must be positive");
  if (!(eps_num > 0.0)) throw std::invalid_argument("eps_num must be positive");
}

std::vector<double> softmax_weights(std::span<const double> distances, double sigma_sf) {
  if (distances.empty()) throw std::domain_error("softmax_weights: empty distance list");
  if (!(sigma_sf > 0.0)) throw std::invalid_argument("softmax_weights: sigma_sf must be positive");
  const double dmin = *std::min_element(distances.begin(), distances.end());
  std::vector<double> w(distances.size());
  double sum = 0.0;
  for (std::size_t j = 0; j < distances.size(); ++j) {
    w[j] = std::exp(-(distances[j] - dmin) / sigma_sf);
    sum += w[j];
  }
  for (double& x : w) x /= sum;
  return w;
}

double magnitude_weight(double d, const FieldParams& params) {
  if (d < 0.0) throw std::domain_error("magnitude_weight: negative distance");
  const double dc = std::min(d, params.d_clip);
  return std::exp(-dc * dc / (2.0 * params.sigma_mag * params.sigma_mag)) * dc;
}

namespace {

inline double magnitude_unchecked(double d, const FieldParams& p) {
  const double s2 = p.sigma_mag * p.sigma_mag;
  switch (p.variant) {
    case FieldVariant::GaussianClip: {
      const double dc = std::min(d, p.d_clip);
      return std::exp(-dc * dc / (2.0 * s2)) * dc;
    }
    case FieldVariant::Gaussian:
      return std::exp(-d * d / (2.0 * s2)) * d;
    case FieldVariant::Tanh:
      // Wider Gaussian envelope (2 sigma_mag) so the tanh plateau reaches further out.
      return std::tanh(d / p.sigma_mag) * std::exp(-d * d / (8.0 * s2));
  }
  return 0.0;
}

}  // namespace

double variant_magnitude(double d, const FieldParams& params) {
  if (d < 0.0) throw std::domain_error("variant_magnitude: negative distance");
  return magnitude_unchecked(d, params);
}

double magnitude_bound(const FieldParams& params) {
  // The magnitude terms are unimodal on [0, inf); a dense scan plus golden
  // section refinement pins the maximum well below 1e-12.
  const double hi = 10.0 * std::max({params.sigma_mag, params.d_clip, 1.0});
  const int n = 4000;
  double best_d = 0.0;
  double best = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double d = hi * i / n;
    const double m = magnitude_unchecked(d, params);
    if (m > best) {
      best = m;
      best_d = d;
    }
  }
  double a = std::max(0.0, best_d - hi / n);
  double b = best_d + hi / n;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 200; ++it) {
    const double c = b - g * (b - a);
    const double d = a + g * (b - a);
    if (magnitude_unchecked(c, params) > magnitude_unchecked(d, params)) {
      b = d;
    } else {
      a = c;
    }
  }
  return std::max(best, magnitude_unchecked(0.5 * (a + b), params));
}

Vec3 attraction(const Vec3& q, std::span<const Vec3> atoms, const FieldParams& params) {
  const std::size_t n = atoms.size();
  if (n == 0) return {};
  if (n == 1) {
    const Vec3 diff = atoms[0] - q;
    const double d = norm(diff);
    return diff * (magnitude_unchecked(d, params) / (d + params.eps_num));
  }

  // Small molecules dominate; keep squared distances on the stack when possible.
  constexpr std::size_t kStack = 64;
  double stack_buf[kStack];
  std::vector<double> heap_buf;
  double* dist2 = stack_buf;
  if (n > kStack) {
    heap_buf.resize(n);
    dist2 = heap_buf.data();
  }
  double d2min = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    dist2[j] = norm2(atoms[j] - q);
    d2min = std::min(d2min, dist2[j]);
  }
  const double dmin = std::sqrt(d2min);
  const double reach = dmin + kSoftmaxCutoff * params.sigma_sf;
  const double reach2 = reach * reach;

  // Beyond d_clip the Gaussian-Clip magnitude is a constant.
  const bool clipped = params.variant == FieldVariant::GaussianClip;
  double plateau = -1.0;

  Vec3 acc;
  double wsum = 0.0;
  const double inv_sf = 1.0 / params.sigma_sf;
  for (std::size_t j = 0; j < n; ++j) {
    if (dist2[j] > reach2) continue;
    const double d = std::sqrt(dist2[j]);
    const double x = (d - dmin) * inv_sf;
    if (x > kSoftmaxCutoff) continue;
    const double w = std::exp(-x);
    wsum += w;
    double mag;
    if (clipped && d >= params.d_clip) {
      if (plateau < 0.0) plateau = magnitude_unchecked(params.d_clip, params);
      mag = plateau;
    } else {
      mag = magnitude_unchecked(d, params);
    }
    acc += (atoms[j] - q) * (w * mag / (d + params.eps_num));
  }
  return acc * (1.0 / wsum);
}

namespace {

std::vector<Vec3> positions_of(const Molecule& mol, std::optional<Element> only) {
  std::vector<Vec3> out;
  for (const Atom& a : mol.atoms()) {
    if (!only || a.element == *only) out.push_back(a.position);
  }
  return out;
}

FieldValue field_for(const Vec3& q, const Molecule& mol, Element k, const FieldParams& params) {
  params.validate();
  const auto atoms = positions_of(mol, k);
  if (!atoms.empty()) return {attraction(q, atoms, params), false};
  if (!params.exclusive) return {{}, true};
  const auto all = positions_of(mol, std::nullopt);
  return {-attraction(q, all, params), true};
}

}  // namespace

FieldValue ground_truth_field(const Vec3& q, const Molecule& mol, Element k, const FieldParams& params) {
  FieldParams p = params;
  p.variant = FieldVariant::GaussianClip;
  return field_for(q, mol, k, p);
}

FieldValue variant_field(const Vec3& q, const Molecule& mol, Element k, const FieldParams& params) {
  return field_for(q, mol, k, params);
}

Vec3 exclusive_field(const Vec3& q, const Molecule& mol, Element k_absent, const FieldParams& params) {
  params.validate();
  if (mol.contains(k_absent)) {
    throw std::invalid_argument("exclusive_field: element " + std::string(symbol(k_absent)) +
                                " is present in the molecule");
  }
  const auto all = positions_of(mol, std::nullopt);
  return -attraction(q, all, params);
}

MoleculeField::MoleculeField(const Molecule& mol, const FieldParams& params)
    : params_(params), all_(positions_of(mol, std::nullopt)), by_element_(kMaxElements) {
  params_.validate();
  for (const Atom& a : mol.atoms()) by_element_[index_of(a.element)].push_back(a.position);
}

Vec3 MoleculeField::evaluate(const Vec3& q, Element k) const {
  const auto& atoms = by_element_[index_of(k)];
  if (!atoms.empty()) return attraction(q, atoms, params_);
  if (!params_.exclusive) return {};
  return -attraction(q, all_, params_);
}

FieldSample MoleculeField::sample(const Vec3& q, std::span<const Element> elements) const {
  FieldSample s{q, std::vector<Vec3>(elements.size())};
  for (std::size_t k = 0; k < elements.size(); ++k) s.vectors[k] = evaluate(q, elements[k]);
  return s;
}

std::vector<FieldSample> field_batch(std::span<const Vec3> queries, const Molecule& mol,
                                     const FieldParams& params, std::size_t element_count) {
  if (queries.empty()) throw std::invalid_argument("field_batch: empty query list");
  const auto elements = element_set(element_count);
  const MoleculeField field(mol, params);
  std::vector<FieldSample> out(queries.size());
  const auto n = static_cast<std::ptrdiff_t>(queries.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = field.sample(queries[i], elements);
  return out;
}

}  // namespace vecfield
