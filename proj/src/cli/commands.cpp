#include "vecfield/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "vecfield/chem/xyz.hpp"
#include "vecfield/cli/experiments.hpp"
#include "vecfield/core/rng.hpp"
#include "vecfield/diffusion/kernels.hpp"
#include "vecfield/metrics/report.hpp"
#include "vecfield/reconstruct/evolve.hpp"

namespace vecfield::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

void emit(const std::filesystem::path& path, const std::string& data, std::ostream& out) {
  if (path.empty()) {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  file << data;
  if (!file) throw std::runtime_error("failed writing " + path.string());
}

ordered_json number_or_null(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

std::string fmt(double v) {
  if (!std::isfinite(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

std::vector<Molecule> load_corpus(const std::filesystem::path& dir, std::vector<std::string>* names) {
  const auto files = list_xyz_files(dir);
  if (files.empty()) throw std::runtime_error("no .xyz files in " + dir.string());
  std::vector<Molecule> corpus;
  for (const auto& f : files) {
    corpus.push_back(read_xyz_file(f));
    if (names) names->push_back(f.filename().string());
  }
  return corpus;
}

void cmd_field_slice(const FieldSliceOptions& opts, std::ostream& out) {
  opts.params.validate();
  opts.plane.validate();
  const Molecule mol = read_xyz_file(opts.molecule);
  const auto rows = field_slice(mol, opts.plane, opts.params, element_set(opts.element_count));
  emit(opts.output, slice_csv(rows), out);
}

void cmd_roundtrip(const RoundTripOptions& opts, std::ostream& out) {
  std::vector<std::string> names;
  const std::vector<Molecule> corpus = load_corpus(opts.corpus, &names);
  const ProviderKind kind = ProviderKind::parse(opts.provider);
  RoundTripSummary summary = run_roundtrip(corpus, kind, opts.params, opts.cfg, opts.seed);

  ordered_json j;
  j["field"] = variant_spec(opts.params);
  j["provider"] = kind.str();
  j["molecules"] = corpus.size();
  j["success_rate"] = summary.success_rate;
  j["mean_rmsd"] = number_or_null(summary.mean_rmsd);
  j["spurious_atoms"] = summary.spurious_atoms;
  ordered_json reports = ordered_json::array();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    summary.reports[i].name = names[i];
    reports.push_back(ordered_json::parse(to_json(summary.reports[i], !opts.omit_timing)));
  }
  j["reports"] = std::move(reports);
  emit(opts.output, j.dump(2) + "\n", out);

  if (!opts.trajectory_dir.empty()) {
    // Replays each reconstruction with recording on; identical seeds give
    // identical trajectories.
    std::filesystem::create_directories(opts.trajectory_dir);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const std::uint64_t s = hash_combine(opts.seed, i);
      const ProviderPtr provider = make_provider(corpus[i], kind, opts.params, opts.cfg.element_count, s);
      TrajectoryRecord record;
      record.stride = opts.trajectory_stride;
      const Reconstruction rec =
          reconstruct_detailed(*provider, opts.cfg, Box::around(corpus[i], opts.cfg.padding), s, &record);
      const auto stem = std::filesystem::path(names[i]).stem().string();
      emit(opts.trajectory_dir / (stem + ".trajectory.csv"), record.csv(rec.batch), out);
    }
  }
}

void cmd_field_compare(const FieldCompareOptions& opts, std::ostream& out) {
  if (opts.variants.empty()) throw std::invalid_argument("field-compare: at least one variant is required");
  if (opts.repeats < 1) throw std::invalid_argument("field-compare: repeats must be >= 1");
  std::vector<FieldParams> variants;
  for (const auto& v : opts.variants) variants.push_back(parse_variant_spec(v, opts.params));
  std::vector<ProviderKind> providers;
  for (const auto& p : opts.providers) providers.push_back(ProviderKind::parse(p));
  const std::vector<Molecule> corpus = load_corpus(opts.corpus);

  std::string csv = "variant,provider,repeats,success_rate,rmsd,spurious_atoms\n";
  for (const FieldParams& params : variants) {
    for (const ProviderKind& kind : providers) {
      double success = 0.0, rmsd_sum = 0.0;
      int rmsd_n = 0;
      std::size_t spurious = 0;
      for (int r = 0; r < opts.repeats; ++r) {
        const auto s = run_roundtrip(corpus, kind, params, opts.cfg, hash_combine(opts.seed, r));
        success += s.success_rate;
        if (std::isfinite(s.mean_rmsd)) {
          rmsd_sum += s.mean_rmsd;
          ++rmsd_n;
        }
        spurious += s.spurious_atoms;
      }
      csv += variant_spec(params) + "," + kind.str() + "," + std::to_string(opts.repeats) + "," +
             fmt(success / opts.repeats) + "," +
             fmt(rmsd_n ? rmsd_sum / rmsd_n : std::numeric_limits<double>::quiet_NaN()) + "," +
             std::to_string(spurious) + "\n";
    }
  }
  emit(opts.output, csv, out);
}

void cmd_sweep(const SweepOptions& opts, std::ostream& out) {
  if (opts.parameter != "eps_db" && opts.parameter != "t_max" && opts.parameter != "sigma_noise") {
    throw std::invalid_argument("sweep: unknown parameter '" + opts.parameter +
                                "'; expected eps_db, t_max or sigma_noise");
  }
  if (opts.values.empty()) throw std::invalid_argument("sweep: value list is empty");
  const ProviderKind base = ProviderKind::parse(opts.provider);
  const std::vector<Molecule> corpus = load_corpus(opts.corpus);

  std::string csv = "parameter,value,success_rate,rmsd,valid_pct,bond_len_w1,bond_ang_w1\n";
  for (double value : opts.values) {
    ReconstructionConfig cfg = opts.cfg;
    ProviderKind kind = base;
    if (opts.parameter == "eps_db") {
      cfg.eps_db = value;
    } else if (opts.parameter == "t_max") {
      if (value != std::floor(value)) throw std::invalid_argument("sweep: t_max values must be integers");
      cfg.t_max = static_cast<int>(value);
    } else {
      kind.type = ProviderKind::Type::Noisy;
      kind.sigma = value;
    }
    const auto s = run_roundtrip(corpus, kind, opts.params, cfg, opts.seed);
    const MetricsReport m = evaluate_corpus(s.recovered, corpus);
    csv += opts.parameter + "," + fmt(value) + "," + fmt(s.success_rate) + "," + fmt(s.mean_rmsd) + "," +
           fmt(m.valid_pct) + "," + fmt(m.bond_len_w1) + "," + fmt(m.bond_ang_w1) + "\n";
  }
  emit(opts.output, csv, out);
}

void cmd_diffusion_demo(const DiffusionDemoOptions& opts, std::ostream& out) {
  if (opts.steps < 2) throw std::invalid_argument("diffusion-demo: T must be >= 2");
  if (opts.dims.empty()) throw std::invalid_argument("diffusion-demo: dims must be non-empty");
  const DiffusionSchedule schedule(opts.steps, opts.offset);
  if (!opts.schedule_csv.empty()) emit(opts.schedule_csv, schedule.csv(), out);

  const LatentTensor z0 = LatentTensor::gaussian(opts.dims, hash_combine(opts.seed, 0));
  const LatentTensor z_T = LatentTensor::gaussian(opts.dims, hash_combine(opts.seed, 1));
  const OracleDenoiser oracle(z0, schedule);
  const LatentTensor recovered = run_reverse_chain(oracle, z_T, schedule);

  bool decreasing = true;
  for (int t = 1; t <= opts.steps; ++t) decreasing = decreasing && schedule.alpha_bar(t) < schedule.alpha_bar(t - 1);

  ordered_json j;
  j["T"] = opts.steps;
  j["s"] = opts.offset;
  j["dims"] = opts.dims;
  j["alpha_bar_0"] = schedule.alpha_bar(0);
  j["alpha_bar_mid"] = cosine_alpha_bar(opts.steps / 2, opts.steps, opts.offset);
  j["alpha_bar_T"] = schedule.alpha_bar(opts.steps);
  j["alpha_bar_strictly_decreasing"] = decreasing;
  j["oracle_chain_max_error"] = max_abs_difference(recovered, z0);
  emit(opts.output, j.dump(2) + "\n", out);
}

void cmd_metrics(const MetricsOptions& opts, std::ostream& out) {
  const std::vector<Molecule> generated = load_corpus(opts.generated);
  const std::vector<Molecule> reference = load_corpus(opts.reference);
  const MetricsReport report = evaluate_corpus(generated, reference);
  if (opts.csv) {
    emit(opts.output, csv_header(report) + "\n" + csv_row(report) + "\n", out);
  } else {
    emit(opts.output, to_json(report) + "\n", out);
  }
}

void cmd_gen_corpus(const GenCorpusOptions& opts, std::ostream&) {
  if (opts.output.empty()) throw std::invalid_argument("gen-corpus: output directory is required");
  const std::vector<Molecule> corpus = generate_corpus(opts.count, opts.spec, opts.seed);
  std::filesystem::create_directories(opts.output);
  char name[32];
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::snprintf(name, sizeof name, "mol_%05zu.xyz", i);
    write_xyz_file(opts.output / name, corpus[i], "synthetic seed=" + std::to_string(opts.seed) + " index=" +
                                                      std::to_string(i));
  }
}

}  // namespace vecfield::cli
