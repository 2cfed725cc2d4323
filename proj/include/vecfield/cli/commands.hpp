#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "vecfield/corpus/generator.hpp"
#include "vecfield/field/params.hpp"
#include "vecfield/field/slice.hpp"
#include "vecfield/reconstruct/config.hpp"

namespace vecfield::cli {

inline constexpr std::uint64_t kDefaultSeed = 1;

// An empty output path means standard output throughout.

struct FieldSliceOptions {
  std::filesystem::path molecule;
  PlaneSpec plane;
  FieldParams params;
  std::size_t element_count = kQm9Elements;
  std::filesystem::path output;
};

struct RoundTripOptions {
  std::filesystem::path corpus;
  std::string provider = "analytic";
  FieldParams params;
  ReconstructionConfig cfg;
  std::uint64_t seed = kDefaultSeed;
  bool omit_timing = false;
  std::filesystem::path output;
  std::filesystem::path trajectory_dir;  // one CSV per molecule when set
  int trajectory_stride = 10;
};

struct FieldCompareOptions {
  std::filesystem::path corpus;
  std::vector<std::string> variants{"GaussianClip", "Gaussian", "Tanh"};
  std::vector<std::string> providers{"analytic"};
  FieldParams params;
  ReconstructionConfig cfg;
  std::uint64_t seed = kDefaultSeed;
  int repeats = 1;  // seeds per (variant, provider) cell
  std::filesystem::path output;
};

struct SweepOptions {
  std::filesystem::path corpus;
  std::string parameter;  // eps_db, t_max or sigma_noise
  std::vector<double> values;
  std::string provider = "analytic";
  FieldParams params;
  ReconstructionConfig cfg;
  std::uint64_t seed = kDefaultSeed;
  std::filesystem::path output;
};

struct DiffusionDemoOptions {
  int steps = 1000;
  double offset = 0.008;
  std::vector<std::size_t> dims{4, 4, 4, 8};
  std::uint64_t seed = kDefaultSeed;
  std::filesystem::path schedule_csv;
  std::filesystem::path output;
};

struct MetricsOptions {
  std::filesystem::path generated;
  std::filesystem::path reference;
  bool csv = false;
  std::filesystem::path output;
};

struct GenCorpusOptions {
  std::filesystem::path output;  // directory, created if missing
  std::size_t count = 100;
  CorpusSpec spec;
  std::uint64_t seed = kDefaultSeed;
};

// Each command writes its data to the output file or `out` and throws on
// failure; the caller maps exceptions to a non-zero exit status.
void cmd_field_slice(const FieldSliceOptions& opts, std::ostream& out);
void cmd_roundtrip(const RoundTripOptions& opts, std::ostream& out);
void cmd_field_compare(const FieldCompareOptions& opts, std::ostream& out);
void cmd_sweep(const SweepOptions& opts, std::ostream& out);
void cmd_diffusion_demo(const DiffusionDemoOptions& opts, std::ostream& out);
void cmd_metrics(const MetricsOptions& opts, std::ostream& out);
void cmd_gen_corpus(const GenCorpusOptions& opts, std::ostream& out);

// Reads every *.xyz file of a directory; throws on an empty directory.
std::vector<Molecule> load_corpus(const std::filesystem::path& dir, std::vector<std::string>* names = nullptr);

}  // namespace vecfield::cli
