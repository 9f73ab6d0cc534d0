// Command-line front end: parameter estimation on CSV samples, Cauchy noise
// synthesis, noise-level estimation, denoising, Monte Carlo studies, and
// image quality metrics.
//
// Exit codes: 0 success (and convergence where applicable), 1 estimator did
// not converge, 2 usage error, 3 estimation/statistical failure, 4 I/O
// error, 5 dimension mismatch.

#include <cinttypes>
#include <cstdio>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "myriad/denoise.hpp"
#include "myriad/errors.hpp"
#include "myriad/io.hpp"
#include "myriad/metrics.hpp"
#include "myriad/montecarlo.hpp"
#include "myriad/noise_level.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitEstimation = 3;
constexpr int kExitIo = 4;
constexpr int kExitDimension = 5;

struct EstimateArgs {
  std::string input;
  std::string algo = "gmf";
  std::optional<double> fix_a;
  std::optional<double> fix_gamma;
  double tol = 1e-6;
  int max_iter = 1000;
};

int run_estimate(const EstimateArgs& args) {
  const myriad::SamplesFile file = myriad::read_samples_csv(args.input);
  const myriad::WeightedSample sample =
      file.weights.empty() ? myriad::WeightedSample::from_values(file.values)
                           : myriad::WeightedSample::from_weighted(file.values, file.weights);
  const myriad::SolverConfig cfg{args.tol, args.max_iter};

  myriad::EstimateResult result;
  if (args.algo == "gmf") {
    result = myriad::estimate_joint_gmf(sample, cfg);
  } else if (args.algo == "fast") {
    result = myriad::estimate_joint_fast(sample, cfg);
  } else if (args.algo == "mf") {
    if (!args.fix_gamma) throw CLI::ValidationError("--algo mf requires --fix-gamma");
    result = myriad::estimate_location_mf(sample, *args.fix_gamma, cfg);
  } else {
    if (!args.fix_a) throw CLI::ValidationError("--algo scale requires --fix-a");
    result = myriad::estimate_scale(sample, *args.fix_a, cfg);
  }

  std::printf("location (a_hat)   : %.10g\n", result.params.location);
  std::printf("scale (gamma_hat)  : %.10g\n", result.params.scale);
  std::printf("iterations         : %d\n", result.iterations);
  std::printf("converged          : %s\n", result.converged ? "yes" : "no");
  std::printf("objective          : %.10g\n", result.final_objective);
  std::printf("RESULT algo=%s a_hat=%.17g gamma_hat=%.17g iterations=%d converged=%d "
              "objective=%.17g\n",
              args.algo.c_str(), result.params.location, result.params.scale,
              result.iterations, result.converged ? 1 : 0, result.final_objective);
  return result.converged ? 0 : 1;
}

struct AddNoiseArgs {
  std::string image;
  double gamma = 0.0;
  std::uint64_t seed = 0;
  std::string out;
  std::string preview;
};

int run_add_noise(const AddNoiseArgs& args) {
  const myriad::ImageGrid img = myriad::read_image(args.image);
  myriad::Rng rng(args.seed);
  const myriad::ImageGrid noisy = myriad::add_noise(img, args.gamma, rng);
  myriad::write_pfm(args.out, noisy);
  if (!args.preview.empty()) myriad::write_png_preview(args.preview, noisy);
  std::printf("RESULT wrote=%s\n", args.out.c_str());
  return 0;
}

struct NoiseLevelArgs {
  std::string image;
  double alpha = 0.05;
  int min_regions = 5;
};

int run_noise_level(const NoiseLevelArgs& args) {
  const myriad::ImageGrid img = myriad::read_image(args.image);
  myriad::RegionTestConfig cfg;
  cfg.alpha = args.alpha;
  cfg.min_regions = args.min_regions;
  const myriad::ConstantRegionReport report = myriad::estimate_global_gamma(img, cfg);
  std::printf("estimated noise level: %.6g (from %zu constant regions)\n",
              report.global_gamma, report.per_block_gamma.size());
  std::printf("RESULT gamma_hat=%.17g regions=%zu\n", report.global_gamma,
              report.per_block_gamma.size());
  return 0;
}

struct DenoiseArgs {
  std::string image;
  std::string out;
  std::string preview;
  std::string gamma_map;
  std::string mode = "nonlocal";
  std::string estimator = "generalized";
  std::string algo = "fast";
  std::optional<double> gamma;
  bool auto_gamma = false;
  int patch = 0;
  int window = 31;
  int samples = 40;
  int local_radius = 1;
  bool weighted = false;
  double kernel_h = 0.0;
  int threads = 1;
};

int run_denoise(const DenoiseArgs& args) {
  myriad::DenoiseConfig cfg;
  cfg.mode = args.mode == "local" ? myriad::DenoiseMode::local : myriad::DenoiseMode::nonlocal;
  cfg.estimator = args.estimator == "classical" ? myriad::EstimatorKind::classical
                                                : myriad::EstimatorKind::generalized;
  cfg.algorithm =
      args.algo == "gmf" ? myriad::JointAlgorithm::gmf : myriad::JointAlgorithm::fast;
  cfg.local_radius = args.local_radius;
  cfg.patch_side = args.patch;
  cfg.window = args.window;
  cfg.samples = args.samples;
  cfg.weighted = args.weighted;
  cfg.kernel_h = args.kernel_h;
  cfg.gamma = args.gamma;

  const bool needs_gamma =
      cfg.mode == myriad::DenoiseMode::nonlocal || cfg.estimator == myriad::EstimatorKind::classical;
  if (needs_gamma && !cfg.gamma && !args.auto_gamma)
    throw CLI::ValidationError("this configuration needs --gamma or --auto-gamma");

  const myriad::ImageGrid img = myriad::read_image(args.image);
  const myriad::DenoiseOutput out = myriad::denoise(img, cfg, {}, args.threads);
  myriad::write_pfm(args.out, out.image);
  if (!args.preview.empty()) myriad::write_png_preview(args.preview, out.image);
  if (!args.gamma_map.empty()) {
    if (!out.gamma_map)
      throw CLI::ValidationError("--gamma-map is only available with --estimator generalized");
    myriad::write_pfm(args.gamma_map, *out.gamma_map);
  }
  std::printf("RESULT wrote=%s gamma_used=%.17g unconverged=%lld\n", args.out.c_str(),
              out.gamma_used, out.unconverged_pixels);
  return 0;
}

struct SimulateArgs {
  double a = 0.0;
  double gamma = 1.0;
  int n = 100;
  int trials = 10000;
  std::uint64_t seed = 0;
  std::string out;
  std::string summary;
};

int run_simulate(const SimulateArgs& args) {
  const myriad::StudyResult study =
      myriad::run_study(args.a, args.gamma, args.n, args.trials, args.seed);
  if (!args.out.empty()) myriad::write_trials_csv(args.out, study.records);
  if (!args.summary.empty()) myriad::write_summary_csv(args.summary, study.summary);
  const myriad::StudySummary& s = study.summary;
  std::printf("iterations gmf : %.4f +- %.4f\n", s.mean_iter_gmf, s.sd_iter_gmf);
  std::printf("iterations fast: %.4f +- %.4f\n", s.mean_iter_fast, s.sd_iter_fast);
  std::printf("a_hat          : %.4f +- %.4f (MSE %.6g)\n", s.mean_a, s.sd_a, s.mse_a);
  std::printf("gamma_hat      : %.4f +- %.4f (MSE %.6g)\n", s.mean_gamma, s.sd_gamma,
              s.mse_gamma);
  std::printf("RESULT mean_iter_gmf=%.17g mean_iter_fast=%.17g mse_a=%.17g mse_gamma=%.17g\n",
              s.mean_iter_gmf, s.mean_iter_fast, s.mse_a, s.mse_gamma);
  return 0;
}

struct MetricsArgs {
  std::string ref;
  std::string test;
  bool clamp = false;
};

int run_metrics(const MetricsArgs& args) {
  const myriad::ImageGrid ref = myriad::read_image(args.ref);
  myriad::ImageGrid test = myriad::read_image(args.test);
  if (args.clamp)
    for (double& v : test.pixels()) v = std::clamp(v, 0.0, 255.0);
  const double psnr_db = myriad::psnr(test, ref);
  const double ssim_val = myriad::ssim(test, ref);
  std::printf("PSNR: %.4f dB\nSSIM: %.4f\n", psnr_db, ssim_val);
  std::printf("RESULT psnr_db=%.17g ssim=%.17g\n", psnr_db, ssim_val);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized myriad filtering: Cauchy parameter estimation and denoising"};
  app.require_subcommand(1);

  EstimateArgs est;
  CLI::App* cmd_est = app.add_subcommand("estimate", "Fit Cauchy parameters to CSV samples");
  cmd_est->add_option("input", est.input, "CSV file with header value[,weight]")->required();
  cmd_est->add_option("--algo", est.algo, "gmf|fast|mf|scale")
      ->check(CLI::IsMember({"gmf", "fast", "mf", "scale"}));
  cmd_est->add_option("--fix-a", est.fix_a, "fixed location (scale mode)");
  cmd_est->add_option("--fix-gamma", est.fix_gamma, "fixed scale (mf mode)");
  cmd_est->add_option("--tol", est.tol, "relative stopping tolerance");
  cmd_est->add_option("--max-iter", est.max_iter, "iteration cap");

  AddNoiseArgs noise;
  CLI::App* cmd_noise = app.add_subcommand("add-noise", "Add Cauchy noise to an image");
  cmd_noise->add_option("--image", noise.image, "input image (.png or .pfm)")->required();
  cmd_noise->add_option("--gamma", noise.gamma, "noise scale")->required();
  cmd_noise->add_option("--seed", noise.seed, "random seed")->required();
  cmd_noise->add_option("--out", noise.out, "output PFM")->required();
  cmd_noise->add_option("--preview", noise.preview, "optional clamped 8-bit PNG preview");

  NoiseLevelArgs nl;
  CLI::App* cmd_nl = app.add_subcommand("noise-level", "Estimate the global noise level");
  cmd_nl->add_option("--image", nl.image, "input image (.png or .pfm)")->required();
  cmd_nl->add_option("--alpha", nl.alpha, "per-test significance level");
  cmd_nl->add_option("--min-regions", nl.min_regions, "blocks needed before stopping");

  DenoiseArgs dn;
  CLI::App* cmd_dn = app.add_subcommand("denoise", "Myriad-filter an image");
  cmd_dn->set_help_flag("--help", "print help");  // frees -h / --h for the bandwidth flag
  cmd_dn->add_option("--image", dn.image, "input image (.png or .pfm)")->required();
  cmd_dn->add_option("--out", dn.out, "output PFM")->required();
  cmd_dn->add_option("--preview", dn.preview, "optional clamped 8-bit PNG preview");
  cmd_dn->add_option("--gamma-map", dn.gamma_map, "optional per-pixel scale PFM");
  cmd_dn->add_option("--mode", dn.mode, "local|nonlocal")
      ->check(CLI::IsMember({"local", "nonlocal"}));
  cmd_dn->add_option("--estimator", dn.estimator, "generalized|classical")
      ->check(CLI::IsMember({"generalized", "classical"}));
  cmd_dn->add_option("--algo", dn.algo, "gmf|fast")->check(CLI::IsMember({"gmf", "fast"}));
  cmd_dn->add_option("--gamma", dn.gamma, "noise scale");
  cmd_dn->add_flag("--auto-gamma", dn.auto_gamma, "estimate the noise scale first");
  cmd_dn->add_option("--patch", dn.patch, "patch side (0 = auto)");
  cmd_dn->add_option("--window", dn.window, "search window side");
  cmd_dn->add_option("--samples", dn.samples, "nonlocal sample count");
  cmd_dn->add_option("--local-radius", dn.local_radius, "local neighborhood radius");
  cmd_dn->add_flag("--weighted", dn.weighted, "similarity-kernel sample weights");
  cmd_dn->add_option("--h", dn.kernel_h, "kernel bandwidth for --weighted");
  cmd_dn->add_option("--threads", dn.threads, "worker count");

  SimulateArgs sim;
  CLI::App* cmd_sim = app.add_subcommand("simulate", "Monte Carlo estimation study");
  cmd_sim->add_option("--a", sim.a, "true location");
  cmd_sim->add_option("--gamma", sim.gamma, "true scale");
  cmd_sim->add_option("--n", sim.n, "sample size per trial");
  cmd_sim->add_option("--trials", sim.trials, "number of trials");
  cmd_sim->add_option("--seed", sim.seed, "master seed");
  cmd_sim->add_option("--out", sim.out, "per-trial CSV");
  cmd_sim->add_option("--summary", sim.summary, "summary CSV");

  MetricsArgs met;
  CLI::App* cmd_met = app.add_subcommand("metrics", "PSNR / SSIM between two images");
  cmd_met->add_option("--ref", met.ref, "reference image")->required();
  cmd_met->add_option("--test", met.test, "image under test")->required();
  cmd_met->add_flag("--clamp", met.clamp, "clamp the test image into [0,255] first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_est->parsed()) return run_estimate(est);
    if (cmd_noise->parsed()) return run_add_noise(noise);
    if (cmd_nl->parsed()) return run_noise_level(nl);
    if (cmd_dn->parsed()) return run_denoise(dn);
    if (cmd_sim->parsed()) return run_simulate(sim);
    if (cmd_met->parsed()) return run_metrics(met);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const myriad::DimensionMismatchError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDimension;
  } catch (const myriad::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const myriad::NoConstantRegionsError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitEstimation;
  } catch (const myriad::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitEstimation;
  }
  return kExitUsage;
}
