#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgao/generator.hpp"
#include "sgao/tensor.hpp"

namespace sgao {

struct LangevinConfig {
  real delta = 0.1;
  int steps = 20;
  bool noise_enabled = true;
  std::uint64_t seed = 0;
  /// When a step would push ||z|| past the divergence bound, retry it once
  /// with delta halved before giving up. Off for oracle tests.
  bool step_halving = true;
  real divergence_bound = 1e3;
};

using LatentGradFn = std::function<Tensor(const Tensor& z)>;

/// z <- z + (delta^2/2) grad_log_joint(z) + delta * eps for `steps`
/// iterations, eps ~ N(0, I) when noise is enabled. Throws DivergenceError
/// (naming the step) when ||z|| exceeds the bound.
Tensor langevin_run(const LatentGradFn& grad_log_joint, Tensor z, const LangevinConfig& lcfg);

/// Posterior sampling of the generator latent given an image.
Tensor langevin_infer(const GeneratorParams& params, const Tensor& y, const Tensor& z_init,
                      const LangevinConfig& lcfg, const GeneratorConfig& config);

// ---------------------------------------------------------------------------
// Linear-Gaussian oracle model: y = A z + eps. The posterior is Gaussian in
// closed form, which makes it the reference target for validating the
// Langevin iteration.
// ---------------------------------------------------------------------------

struct LinearGaussianModel {
  Tensor matrix;  // {obs_dim, latent_dim}
  real sigma = 1.0;

  int latent_dim() const { return matrix.extent(1); }
  int obs_dim() const { return matrix.extent(0); }
  Tensor generate(const Tensor& z) const;
  Tensor grad_log_joint(const Tensor& z, const Tensor& y) const;
  /// (AᵀA/σ² + I)⁻¹ Aᵀy/σ²
  Tensor posterior_mean(const Tensor& y) const;
  /// (AᵀA/σ² + I)⁻¹, row-major {d, d}
  Tensor posterior_cov() const;
};

struct MomentCheckResult {
  Tensor chain_mean;
  Tensor chain_var;      // diagonal
  Tensor analytic_mean;
  Tensor analytic_var;   // diagonal
  Tensor mean_se;        // batch-means standard error per coordinate
  real max_mean_sigmas = 0;   // max |mean error| / se
  real max_var_rel_err = 0;   // max relative diagonal variance error
  bool mean_ok = false;       // within 4 standard errors
  bool var_ok = false;        // within 25% relative
  int samples = 0;
};

/// Runs one noisy chain for burn_in + n_samples steps and compares the
/// post-burn-in moments against the analytic Gaussian posterior.
MomentCheckResult posterior_moment_check(const LinearGaussianModel& model, const Tensor& y,
                                         const LangevinConfig& lcfg, int burn_in, int n_samples);

// ---------------------------------------------------------------------------
// Training: maximum-likelihood ascent with per-example persistent latents.
// ---------------------------------------------------------------------------

struct AdamConfig {
  real beta1 = 0.9;
  real beta2 = 0.999;
  real eps = 1e-8;
};

enum class OptimizerKind { sgd, adam };

struct TrainConfig {
  int epochs = 100;
  int batch_size = 16;
  real learning_rate = 1e-3;
  OptimizerKind optimizer = OptimizerKind::adam;
  AdamConfig adam;
  LangevinConfig langevin;
  bool warm_start = true;
  real sigma = 0.3;  // mirrors GeneratorConfig::sigma

  bool operator==(const TrainConfig&) const = default;
};

inline bool operator==(const AdamConfig& a, const AdamConfig& b) {
  return a.beta1 == b.beta1 && a.beta2 == b.beta2 && a.eps == b.eps;
}
inline bool operator==(const LangevinConfig& a, const LangevinConfig& b) {
  return a.delta == b.delta && a.steps == b.steps && a.noise_enabled == b.noise_enabled &&
         a.seed == b.seed && a.step_halving == b.step_halving &&
         a.divergence_bound == b.divergence_bound;
}

/// Named view of a model's parameter tensors, in a stable order.
struct ParamRef {
  std::string name;
  Tensor* tensor;
};

/// A latent-variable model the Langevin-EM loop can train. The generator is
/// the production implementation; tests plug in closed-form toys.
class LatentModel {
 public:
  virtual ~LatentModel() = default;
  virtual int latent_dim() const = 0;
  virtual real sigma() const = 0;
  virtual Tensor generate(const Tensor& z) const = 0;
  virtual Tensor grad_z_log_joint(const Tensor& z, const Tensor& y) const = 0;
  /// Ascent gradients of the data term, aligned with params().
  virtual std::vector<Tensor> grad_params(const Tensor& z, const Tensor& y_target) const = 0;
  virtual std::vector<ParamRef> params() = 0;
};

/// LatentModel over (GeneratorConfig, GeneratorParams). Holds a reference;
/// the caller owns the parameters.
class GeneratorModel final : public LatentModel {
 public:
  GeneratorModel(GeneratorParams& params, const GeneratorConfig& config)
      : params_(&params), config_(config) {}

  int latent_dim() const override { return config_.latent_dim; }
  real sigma() const override { return config_.sigma; }
  Tensor generate(const Tensor& z) const override;
  Tensor grad_z_log_joint(const Tensor& z, const Tensor& y) const override;
  std::vector<Tensor> grad_params(const Tensor& z, const Tensor& y_target) const override;
  std::vector<ParamRef> params() override;

  const GeneratorConfig& config() const { return config_; }
  GeneratorParams& generator_params() { return *params_; }

 private:
  GeneratorParams* params_;
  GeneratorConfig config_;
};

std::vector<ParamRef> generator_param_refs(GeneratorParams& params);

struct OptimizerState {
  long step = 0;
  std::map<std::string, Tensor> m;
  std::map<std::string, Tensor> v;
};

/// One optimizer step in the ASCENT direction of `grads` (aligned with
/// `refs`). sgd: p += lr*g. adam: bias-corrected moments, p += lr*m̂/(√v̂+ε).
void apply_update(std::vector<ParamRef>& refs, const std::vector<Tensor>& grads,
                  const TrainConfig& tcfg, OptimizerState& state);

/// Per-example persistent latent vectors (rows of an {n, d} tensor).
struct LatentBank {
  Tensor rows;

  static LatentBank init_gaussian(int n, int d, std::uint64_t seed);
  int size() const { return rows.empty() ? 0 : rows.extent(0); }
  int dim() const { return rows.empty() ? 0 : rows.extent(1); }
  Tensor row(int i) const;
  void set_row(int i, const Tensor& z);
};

struct MleStepStats {
  real mean_mse = 0;       // ||y - g(z)||^2 / D, mean over the batch
  real mean_z_norm2 = 0;   // ||z||^2, mean over the batch
};

/// One Monte-Carlo MLE update: infer each example's latent by Langevin
/// (warm-started from the bank when configured), write it back, average the
/// ascent gradients over the batch, and apply one optimizer step.
/// Divergence errors propagate with the example index attached.
MleStepStats mle_step(LatentModel& model, const std::vector<Tensor>& images,
                      std::span<const int> indices, LatentBank& bank, const TrainConfig& tcfg,
                      OptimizerState& opt, std::uint64_t step_seed);

struct EpochMetrics {
  int epoch = 0;
  real mse = 0;
  real mean_z_norm2 = 0;
  double wall_ms = 0;
  std::optional<real> mean_f_data;   // cooperative runs only
  std::optional<real> mean_f_synth;
};

/// Mutable state of a training run; everything needed to resume.
struct TrainingRun {
  LatentBank bank;
  OptimizerState opt;
  int next_epoch = 0;
  std::uint64_t seed = 0;
  std::vector<EpochMetrics> metrics;
};

std::uint64_t epoch_seed(std::uint64_t master_seed, int epoch);

/// Fresh bank + optimizer state, then epochs of shuffled minibatch
/// mle_steps. The (seed, config, dataset) triple fully determines the
/// trajectory.
TrainingRun train(LatentModel& model, const std::vector<Tensor>& images, const TrainConfig& tcfg,
                  std::uint64_t seed);

/// Continues `run` (possibly restored from a checkpoint) up to tcfg.epochs.
void train_epochs(LatentModel& model, const std::vector<Tensor>& images, const TrainConfig& tcfg,
                  TrainingRun& run);

/// g(z) for n i.i.d. standard-normal latents; deterministic per seed and a
/// prefix of any longer run with the same seed.
std::vector<Tensor> sample_prior(const GeneratorParams& params, int n, std::uint64_t seed,
                                 const GeneratorConfig& config);

}  // namespace sgao
