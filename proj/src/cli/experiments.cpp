#include "vecfield/cli/experiments.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "vecfield/core/rng.hpp"
#include "vecfield/provider/ghost.hpp"
#include "vecfield/provider/grid.hpp"
#include "vecfield/provider/noise.hpp"

namespace vecfield {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  if (s.empty()) return false;
  if constexpr (std::is_floating_point_v<T>) {
    // from_chars for double is available in libstdc++ 11.
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
  } else {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  }
}

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '-' || c == '_') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

[[noreturn]] void bad_provider(std::string_view text) {
  throw std::invalid_argument("unknown provider '" + std::string(text) +
                              "'; expected analytic, grid:L:spacing, noisy:sigma or spurious:strength");
}

}  // namespace

ProviderKind ProviderKind::parse(std::string_view text) {
  const auto parts = split(text, ':');
  ProviderKind kind;
  if (parts[0] == "analytic" && parts.size() == 1) return kind;
  if (parts[0] == "grid" && parts.size() == 3) {
    kind.type = Type::Grid;
    if (!parse_number(parts[1], kind.grid_size) || kind.grid_size < 2 ||
        !parse_number(parts[2], kind.grid_spacing) || !(kind.grid_spacing > 0.0)) {
      bad_provider(text);
    }
    return kind;
  }
  if (parts[0] == "noisy" && parts.size() == 2) {
    kind.type = Type::Noisy;
    if (!parse_number(parts[1], kind.sigma) || kind.sigma < 0.0) bad_provider(text);
    return kind;
  }
  if (parts[0] == "spurious" && parts.size() == 2) {
    kind.type = Type::Spurious;
    if (!parse_number(parts[1], kind.strength) || kind.strength < 0.0) bad_provider(text);
    return kind;
  }
  bad_provider(text);
}

std::string ProviderKind::str() const {
  char buf[64];
  switch (type) {
    case Type::Analytic:
      return "analytic";
    case Type::Grid:
      std::snprintf(buf, sizeof buf, "grid:%d:%g", grid_size, grid_spacing);
      return buf;
    case Type::Noisy:
      std::snprintf(buf, sizeof buf, "noisy:%g", sigma);
      return buf;
    case Type::Spurious:
      std::snprintf(buf, sizeof buf, "spurious:%g", strength);
      return buf;
  }
  return "?";
}

ProviderPtr make_provider(const Molecule& mol, const ProviderKind& kind, const FieldParams& params,
                          std::size_t element_count, std::uint64_t seed) {
  auto analytic = std::make_shared<const AnalyticProvider>(mol, params);
  switch (kind.type) {
    case ProviderKind::Type::Analytic:
      return analytic;
    case ProviderKind::Type::Grid:
      return std::make_shared<const GridProvider>(
          build_grid(mol, kind.grid_size, kind.grid_spacing, params, element_count));
    case ProviderKind::Type::Noisy:
      return wrap_noise(analytic, NoiseSpec{kind.sigma, seed});
    case ProviderKind::Type::Spurious:
      return std::make_shared<const GhostAttractorProvider>(
          analytic, make_ghost_sites(mol, element_count, kGhostSitesPerElement, kGhostOffset, seed), kind.strength,
          params);
  }
  return analytic;
}

FieldParams parse_variant_spec(std::string_view text, FieldParams base) {
  std::string_view name = text;
  base.exclusive = false;
  constexpr std::string_view kSuffix = "+exclusive";
  if (name.size() > kSuffix.size() && lower(name.substr(name.size() - kSuffix.size())) == lower(kSuffix)) {
    base.exclusive = true;
    name.remove_suffix(kSuffix.size());
  }
  for (FieldVariant v : {FieldVariant::GaussianClip, FieldVariant::Gaussian, FieldVariant::Tanh}) {
    if (lower(variant_name(v)) == lower(name)) {
      base.variant = v;
      return base;
    }
  }
  throw std::invalid_argument("unknown field variant '" + std::string(text) +
                              "'; valid names: GaussianClip, Gaussian, Tanh (optionally with +exclusive)");
}

std::string variant_spec(const FieldParams& params) {
  return std::string(variant_name(params.variant)) + (params.exclusive ? "+exclusive" : "");
}

RoundTripSummary run_roundtrip(std::span<const Molecule> corpus, const ProviderKind& kind,
                               const FieldParams& params, const ReconstructionConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  params.validate();
  const std::size_t n = corpus.size();
  RoundTripSummary summary;
  summary.reports.resize(n);
  summary.recovered.resize(n);
  std::vector<std::string> errors(n);

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      const std::uint64_t s = hash_combine(seed, static_cast<std::uint64_t>(i));
      const ProviderPtr provider = make_provider(corpus[i], kind, params, cfg.element_count, s);
      const Reconstruction rec = reconstruct_detailed(*provider, cfg, Box::around(corpus[i], cfg.padding), s);
      summary.reports[i] = score_reconstruction("molecule " + std::to_string(i), rec, corpus[i]);
      summary.recovered[i] = rec.molecule;
    } catch (const std::exception& e) {
      errors[i] = "molecule " + std::to_string(i) + ": " + e.what();
    }
  }
  for (const std::string& e : errors) {
    if (!e.empty()) throw std::runtime_error(e);
  }

  std::size_t ok = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const ReconstructionReport& r = summary.reports[i];
    if (r.success()) {
      ++ok;
      sum += r.score.rmsd;
    }
    for (const Atom& a : summary.recovered[i].atoms()) {
      if (!corpus[i].contains(a.element)) ++summary.spurious_atoms;
    }
  }
  summary.success_rate = n == 0 ? 0.0 : 100.0 * static_cast<double>(ok) / static_cast<double>(n);
  summary.mean_rmsd = ok == 0 ? std::numeric_limits<double>::quiet_NaN() : sum / static_cast<double>(ok);
  return summary;
}

}  // namespace vecfield
