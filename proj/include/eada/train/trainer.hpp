#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eada/ad/optim.hpp"
#include "eada/core/rng.hpp"
#include "eada/core/tensor.hpp"
#include "eada/data/dataset.hpp"
#include "eada/eval/eval.hpp"
#include "eada/losses/losses.hpp"
#include "eada/nets/nets.hpp"

namespace eada::train {

enum class Ablation { full, no_disentanglement, no_entropy_max };
enum class C0Mode { joint, pretrained_frozen };

const char* ablation_name(Ablation a);
Ablation ablation_from_name(const std::string& name);
const char* c0_mode_name(C0Mode m);
C0Mode c0_mode_from_name(const std::string& name);

/// Cheaper protocol: train on the first `train_subset` rows for `epochs`.
struct ReducedScale {
    int64_t train_subset = 10000;
    int epochs = 30;
};

struct TrainingConfig {
    nets::NetDims dims = nets::NetDims::small_scale();
    losses::LossWeights weights;
    losses::HybridTarget hybrid_target = losses::HybridTarget::recon_hybrid;
    int epochs = 100;
    int64_t batch_size = 128;
    double lr = 1e-4;  // adaptive-moment optimizer, default decay parameters
    uint64_t seed = 0;
    Ablation ablation = Ablation::full;
    C0Mode c0_mode = C0Mode::joint;
    std::optional<ReducedScale> reduced_scale;
    std::string method_tag;  // empty: derived from the ablation
    bool plateau_stop = false;  // opt-in early stop once the entropy curve flattens
    int entropy_window = 5;
    int divergence_patience = 100;  // consecutive high-CE iterations before aborting

    std::string effective_method_tag() const;
    int effective_epochs() const;
};

/// Loss weights and matching target actually in force under the ablation:
/// no_disentanglement drops the reconstruction terms and matches the input
/// image at weight 1; no_entropy_max zeroes the adversarial and latent terms
/// and fixes the remaining four weights to 1.
std::pair<losses::LossWeights, losses::HybridTarget> effective_weights(const TrainingConfig& cfg);

struct IterationMetrics {
    int64_t iter = 0;
    int epoch = 0;
    losses::TermBreakdown terms;
    double ce_c0 = 0, ce_cf_orig = 0, ce_cf_entropic = 0, entropy = 0;

    std::string to_json_line() const;
};

/// Mutable state of one run; checkpoints restore it bit-exactly.
struct TrainState {
    nets::MethodNets<float> nets;
    ad::Adam<float> opt_c0, opt_cf, opt_gen;
    int64_t iteration = 0;
    int epochs_done = 0;
    Rng stream;  // epoch shuffles and per-iteration donor permutations
    std::vector<double> entropy_log;  // per-epoch mean entropy of Cf on entropic images
    std::vector<eval::EpochRecord> epoch_records;
    int high_ce_streak = 0;

    explicit TrainState(const TrainingConfig& cfg);
};

/// One iteration: update the shortcut probe, then encoder+decoder jointly,
/// then the final classifier on originals plus stop-gradient entropic images.
/// Throws on a non-finite loss.
IterationMetrics train_step(TrainState& st, const Tensor<float>& batch,
                            const std::vector<int64_t>& labels, const TrainingConfig& cfg);

enum class EntropyTrend { increasing, plateaued, decreasing };

/// Compares the mean of the last `window` entries against the window before;
/// relative moves within `rel_threshold` count as a plateau.
EntropyTrend entropy_monitor(const std::vector<double>& log, int window,
                             double rel_threshold = 0.01);

void save_checkpoint(TrainState& st, const TrainingConfig& cfg, const std::string& path);
/// Restores a checkpoint written under the same topology and optimizer layout.
void load_checkpoint(TrainState& st, const std::string& path);

/// Full run: seeded epoch shuffles, per-epoch validation, entropy logging,
/// checkpoint-per-epoch with resume, and final-epoch model selection. When
/// `run_dir` is nonempty it receives metrics.jsonl, checkpoint.tns and
/// report.json; an existing checkpoint there is resumed.
eval::RunReport train(const TrainingConfig& cfg, const data::BiasedDataset& ds,
                      const std::string& run_dir = "",
                      const nets::ClassifierBundle<float>* pretrained_c0 = nullptr);

/// Trains the shortcut probe alone to a validation plateau; the result can be
/// frozen into train() via c0_mode=pretrained_frozen.
nets::ClassifierBundle<float> pretrain_c0(const TrainingConfig& cfg,
                                          const data::BiasedDataset& ds);

}  // namespace eada::train
