#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eada/ad/ops.hpp"
#include "eada/ad/optim.hpp"
#include "eada/core/rng.hpp"
#include "eada/core/tensor.hpp"
#include "eada/data/dataset.hpp"
#include "eada/eval/eval.hpp"
#include "eada/nets/nets.hpp"
#include "eada/train/trainer.hpp"

namespace eada::baselines {

enum class Method {
    standard,
    dropout,
    orthogonality,
    covariance,
    jigsaw,
    spectral_decoupling,
    rsc,
    lff,
    jtt,
};

const char* method_name(Method m);
Method method_from_name(const std::string& name);

enum class Optimizer { sgd_momentum, adam };

struct BaselineConfig {
    nets::NetDims dims = nets::NetDims::small_scale();
    Method method = Method::standard;
    double penalty_weight = 0.0;
    Optimizer optimizer = Optimizer::sgd_momentum;
    double lr = 1e-3;
    double momentum = 0.9;
    int epochs = 100;
    int64_t batch_size = 128;
    uint64_t seed = 0;
    std::optional<train::ReducedScale> reduced_scale;
    double early_stop_val = 0.0;  // >0: stop once val accuracy (percent) reaches it
    double gce_q = 0.7;           // biased-twin amplification
    int jtt_lambda_up = 10;       // stage-2 repeat factor for stage-1 errors
    int jtt_batch_acc_hits = 10;  // stage 1 stops the nth time batch accuracy hits 99%
    int divergence_patience = 100;

    int effective_epochs() const;
};

/// Per-method small-scale hyperparameters: SGD momentum 0.9 at 1e-3 for the
/// penalty family, the adaptive-moment optimizer at 1e-4 for the two-network
/// schemes; penalty weights and early-stop rules filled in per method.
BaselineConfig default_config(Method m);

// Reusable primitives behind the trainers, exposed for direct testing.

/// Elementwise dropout on activations: zeroed with probability `rate`,
/// survivors scaled by 1/(1-rate); identity when not training or rate == 0.
template <typename T>
ad::Var<T> dropout_head(const ad::Var<T>& features, double rate, Rng& rng, bool training);

/// Mean over layers of the off-diagonal Gram energy of each weight matrix,
/// rows = output units (fc weights stored (in, out) are transposed first).
template <typename T>
ad::Var<T> orthogonality_penalty(const std::vector<nets::Param<T>*>& weights);

/// Off-diagonal squared Frobenius norm of the batch covariance of the
/// spatially pooled feature map (N, C, H, W); needs N >= 2.
template <typename T>
ad::Var<T> covariance_penalty(const ad::Var<T>& features);

/// Mean over the batch of the squared L2 norm of each logit row.
template <typename T>
ad::Var<T> spectral_decoupling_penalty(const ad::Var<T>& logits);

inline constexpr int kJigsawPerms = 24;  // 4! tile arrangements

/// All permutations of the four 2x2 tiles in lexicographic order; index 0 is
/// the identity. perm[slot] = source tile placed at `slot`.
const std::array<std::array<int, 4>, kJigsawPerms>& jigsaw_permutations();
int jigsaw_inverse(int id);
/// Index of a.b (apply b first, then a).
int jigsaw_compose(int a, int b);

/// Per-sample tile shuffle of an (N, C, H, W) batch with even H == W.
template <typename T>
Tensor<T> apply_jigsaw(const Tensor<T>& batch, const std::vector<int>& perm_ids);

/// Per-sample channel mask from saliency (N, C): the ceil-free top
/// floor(drop_fraction * C) channels are zeroed across all of (H, W), ties
/// broken by lower channel index; survivors keep weight 1 (no rescale).
template <typename T>
Tensor<T> rsc_mask(const Tensor<T>& saliency, double drop_fraction, int64_t h, int64_t w);

/// w_i = ce_biased_i / (ce_biased_i + ce_debiased_i), 0.5 when both are 0.
std::vector<float> lff_weights(const std::vector<float>& ce_biased,
                               const std::vector<float>& ce_debiased);

/// Train-set index list with stage-1 errors repeated lambda_up times in total.
std::vector<int64_t> oversample_indices(int64_t n, const std::vector<int64_t>& errors,
                                        int lambda_up);

/// Runs one comparison method to a RunReport (best-val model selection, first
/// epoch to reach the best kept). A nonempty run_dir receives metrics.jsonl,
/// checkpoint.tns and report.json; an existing checkpoint there is resumed.
eval::RunReport train_baseline(const BaselineConfig& cfg, const data::BiasedDataset& ds,
                               const std::string& run_dir = "");

}  // namespace eada::baselines
