// Command-line front end for the vecfield library.

#include <algorithm>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vecfield/cli/commands.hpp"
#include "vecfield/cli/experiments.hpp"

using namespace vecfield;
using namespace vecfield::cli;

namespace {

void add_seed(CLI::App* cmd, std::uint64_t& seed) {
  cmd->add_option("--seed", seed, "Random seed")->envname("VECFIELD_SEED")->capture_default_str();
}

void add_field_options(CLI::App* cmd, FieldParams& p, std::string& variant) {
  cmd->add_option("--variant", variant,
                  "Field construction: GaussianClip, Gaussian or Tanh, optionally suffixed with +exclusive")
      ->capture_default_str();
  cmd->add_option("--sigma-sf", p.sigma_sf, "Softmax temperature in Angstrom (reference setting 0.1)")
      ->capture_default_str();
  cmd->add_option("--sigma-mag", p.sigma_mag, "Magnitude width in Angstrom (reference setting 0.45)")
      ->capture_default_str();
  cmd->add_option("--d-clip", p.d_clip, "Clip distance in Angstrom (reference setting 0.8)")->capture_default_str();
  cmd->add_option("--eps-num", p.eps_num, "Direction normalisation guard")->capture_default_str();
}

void add_reconstruction_options(CLI::App* cmd, ReconstructionConfig& c) {
  cmd->add_option("--eta", c.eta, "Euler step size (reference setting 0.1)")->capture_default_str();
  cmd->add_option("--tau", c.tau, "Convergence threshold on the field norm")->capture_default_str();
  cmd->add_option("--t-max", c.t_max, "Maximum Euler steps per particle (reference setting 500)")
      ->capture_default_str();
  cmd->add_option("--eps-db", c.eps_db, "DBSCAN radius in Angstrom (reference setting 0.1)")->capture_default_str();
  cmd->add_option("--n-min", c.n_min, "DBSCAN minimum samples (reference setting 3)")->capture_default_str();
  cmd->add_option_function<std::vector<int>>(
         "--budget",
         [&c](const std::vector<int>& v) {
           c.budget.fill(0);
           std::copy(v.begin(), v.end(), c.budget.begin());
         },
         "Particles per element in C,H,O,N,F,S,Cl,Br order (reference setting 200,200,30,30,15)")
      ->delimiter(',')
      ->expected(1, static_cast<int>(kMaxElements));
  cmd->add_option("--elements", c.element_count, "Size of the element set: 5 (C,H,O,N,F) up to 8")
      ->capture_default_str();
  cmd->add_flag("--adaptive", c.adaptive, "Draw particles from an oversampled pool by local field variability");
  cmd->add_option("--pool-multiplier", c.pool_multiplier, "Adaptive pool size relative to the budget")
      ->capture_default_str();
  cmd->add_option("--knn-k", c.knn_k, "Adaptive neighbourhood size")->capture_default_str();
  cmd->add_option("--softmax-temp", c.softmax_temp, "Adaptive softmax temperature; <= 0 uses the mean score")
      ->capture_default_str();
  cmd->add_option("--rho", c.rho, "Bond tolerance on summed covalent radii (reference setting 1.5)")
      ->capture_default_str();
  cmd->add_option("--padding", c.padding, "Bounding-box margin in Angstrom")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vector-field molecular representation toolkit"};
  app.set_config("--config", "", "TOML-style key=value file; command-line flags take precedence");
  app.require_subcommand(1);

  // field-slice
  FieldSliceOptions slice;
  std::string slice_variant = "GaussianClip";
  std::vector<double> point{0, 0, 0}, normal{0, 0, 1};
  auto* fs = app.add_subcommand("field-slice", "Sample every element channel on a planar patch (CSV)");
  fs->add_option("molecule", slice.molecule, "Input XYZ file")->required()->check(CLI::ExistingFile);
  fs->add_option("--point", point, "Plane centre x,y,z")->delimiter(',')->expected(3);
  fs->add_option("--normal", normal, "Plane normal x,y,z")->delimiter(',')->expected(3);
  fs->add_option("--half-extent", slice.plane.half_extent, "Half side length in Angstrom")->capture_default_str();
  fs->add_option("--resolution", slice.plane.resolution, "Samples per side")->capture_default_str();
  fs->add_option("--elements", slice.element_count, "Size of the element set")->capture_default_str();
  fs->add_option("-o,--output", slice.output, "Output CSV (default: standard output)");
  add_field_options(fs, slice.params, slice_variant);

  // roundtrip
  RoundTripOptions rt;
  std::string rt_variant = "GaussianClip";
  auto* rtc = app.add_subcommand("roundtrip", "Reconstruct every molecule of a corpus from its field (JSON)");
  rtc->add_option("corpus", rt.corpus, "Directory of XYZ files")->required()->check(CLI::ExistingDirectory);
  rtc->add_option("--provider", rt.provider, "analytic, grid:L:spacing, noisy:sigma or spurious:strength")
      ->capture_default_str();
  rtc->add_flag("--omit-timing", rt.omit_timing, "Leave wall times out so reports are byte-reproducible");
  rtc->add_option("--trajectory-dir", rt.trajectory_dir, "Write per-molecule particle trajectories (CSV) here");
  rtc->add_option("--trajectory-stride", rt.trajectory_stride, "Steps between recorded positions")
      ->capture_default_str();
  rtc->add_option("-o,--output", rt.output, "Output JSON (default: standard output)");
  add_seed(rtc, rt.seed);
  add_field_options(rtc, rt.params, rt_variant);
  add_reconstruction_options(rtc, rt.cfg);

  // field-compare
  FieldCompareOptions fc;
  std::string fc_variant = "GaussianClip";
  auto* fcc = app.add_subcommand("field-compare", "Success rate and RMSD per field variant and provider (CSV)");
  fcc->add_option("corpus", fc.corpus, "Directory of XYZ files")->required()->check(CLI::ExistingDirectory);
  fcc->add_option("--variants", fc.variants, "Variants to compare, e.g. GaussianClip,Tanh+exclusive")
      ->delimiter(',')
      ->capture_default_str();
  fcc->add_option("--providers", fc.providers, "Provider kinds to compare")->delimiter(',')->capture_default_str();
  fcc->add_option("--repeats", fc.repeats, "Seeds averaged per cell")->capture_default_str();
  fcc->add_option("-o,--output", fc.output, "Output CSV (default: standard output)");
  add_seed(fcc, fc.seed);
  add_field_options(fcc, fc.params, fc_variant);
  add_reconstruction_options(fcc, fc.cfg);

  // sweep
  SweepOptions sw;
  std::string sw_variant = "GaussianClip";
  auto* swc = app.add_subcommand("sweep", "Vary one parameter and score reconstruction quality (CSV)");
  swc->add_option("corpus", sw.corpus, "Directory of XYZ files")->required()->check(CLI::ExistingDirectory);
  swc->add_option("--parameter", sw.parameter, "eps_db, t_max or sigma_noise")->required();
  swc->add_option("--values", sw.values, "Comma-separated values")->delimiter(',')->required();
  swc->add_option("--provider", sw.provider, "Provider kind for eps_db and t_max sweeps")->capture_default_str();
  swc->add_option("-o,--output", sw.output, "Output CSV (default: standard output)");
  add_seed(swc, sw.seed);
  add_field_options(swc, sw.params, sw_variant);
  add_reconstruction_options(swc, sw.cfg);

  // diffusion-demo
  DiffusionDemoOptions dd;
  auto* ddc = app.add_subcommand("diffusion-demo", "Dump the cosine schedule and run the oracle reverse chain");
  ddc->add_option("--steps,-T", dd.steps, "Timesteps (reference setting 1000)")->capture_default_str();
  ddc->add_option("--offset,-s", dd.offset, "Cosine offset (reference setting 0.008)")->capture_default_str();
  ddc->add_option("--dims", dd.dims, "Latent shape, e.g. 4,4,4,8")->delimiter(',')->capture_default_str();
  ddc->add_option("--schedule-csv", dd.schedule_csv, "Write t,beta,alpha,alpha_bar,sigma here");
  ddc->add_option("-o,--output", dd.output, "Output JSON (default: standard output)");
  add_seed(ddc, dd.seed);

  // metrics
  MetricsOptions mt;
  auto* mtc = app.add_subcommand("metrics", "Distributional quality report of one corpus against another");
  mtc->add_option("generated", mt.generated, "Directory of generated XYZ files")
      ->required()
      ->check(CLI::ExistingDirectory);
  mtc->add_option("reference", mt.reference, "Directory of reference XYZ files")
      ->required()
      ->check(CLI::ExistingDirectory);
  mtc->add_flag("--csv", mt.csv, "Emit a header and one CSV row instead of JSON");
  mtc->add_option("-o,--output", mt.output, "Output file (default: standard output)");

  // gen-corpus
  GenCorpusOptions gc;
  auto* gcc = app.add_subcommand("gen-corpus", "Write a synthetic corpus of small organic-like molecules");
  gcc->add_option("output", gc.output, "Output directory")->required();
  gcc->add_option("--count", gc.count, "Number of molecules")->capture_default_str();
  gcc->add_option("--min-atoms", gc.spec.min_atoms, "Minimum atoms per molecule")->capture_default_str();
  gcc->add_option("--max-atoms", gc.spec.max_atoms, "Maximum atoms per molecule")->capture_default_str();
  gcc->add_option("--max-heavy", gc.spec.max_heavy, "Maximum heavy atoms per molecule")->capture_default_str();
  gcc->add_option("--min-distance", gc.spec.min_distance, "Minimum pairwise distance in Angstrom")
      ->capture_default_str();
  gcc->add_option("--max-radius", gc.spec.max_radius, "Maximum distance from the centroid in Angstrom")
      ->capture_default_str();
  gcc->add_option("--elements", gc.spec.element_count, "Size of the element set")->capture_default_str();
  add_seed(gcc, gc.seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fs) {
      slice.params = parse_variant_spec(slice_variant, slice.params);
      slice.plane.point = {point[0], point[1], point[2]};
      slice.plane.normal = {normal[0], normal[1], normal[2]};
      cmd_field_slice(slice, std::cout);
    } else if (*rtc) {
      rt.params = parse_variant_spec(rt_variant, rt.params);
      cmd_roundtrip(rt, std::cout);
    } else if (*fcc) {
      fc.params = parse_variant_spec(fc_variant, fc.params);
      cmd_field_compare(fc, std::cout);
    } else if (*swc) {
      sw.params = parse_variant_spec(sw_variant, sw.params);
      cmd_sweep(sw, std::cout);
    } else if (*ddc) {
      cmd_diffusion_demo(dd, std::cout);
    } else if (*mtc) {
      cmd_metrics(mt, std::cout);
    } else if (*gcc) {
      cmd_gen_corpus(gc, std::cout);
      std::cerr << "wrote " << gc.count << " molecules to " << gc.output.string() << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "vecfield: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
