#pragma once

#include <string>
#include <vector>

#include "eada/data/dataset.hpp"
#include "eada/eval/eval.hpp"
#include "eada/train/trainer.hpp"

namespace eada::eval {

struct AblationJob {
    std::string tag;
    train::TrainingConfig cfg;
};

/// The seven-row study grid derived from a base configuration: the adversarial
/// weight swept over {1e-4, 1e-3, 1e-2, 1e-1, 1} with disentanglement off,
/// the variant without entropy maximization, and the full method.
std::vector<AblationJob> ablation_grid(const train::TrainingConfig& base);

/// Runs every grid row on every dataset at the base config's single seed.
/// When out_dir is nonempty each run gets a resumable directory
/// `<out_dir>/<tag>_<benchmark>_s<seed>`. A run that throws becomes a
/// zero-run NaN cell instead of aborting the campaign.
AggregateTable run_ablation(const train::TrainingConfig& base,
                            const std::vector<data::DatasetSpec>& datasets,
                            const std::string& out_dir = "");

}  // namespace eada::eval
