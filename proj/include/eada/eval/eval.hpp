#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eada/core/tensor.hpp"
#include "eada/data/dataset.hpp"
#include "eada/nets/nets.hpp"

namespace eada::eval {

struct EpochRecord {
    int epoch = 0;
    double val_acc = 0, entropy_mean = 0;
};

/// Everything one training run reports; serialized to JSON in the run dir.
struct RunReport {
    std::string method;
    std::string dataset;       // benchmark name
    std::string dataset_hash;  // fingerprint of the generating spec
    uint64_t seed = 0;
    std::vector<EpochRecord> epochs;
    double final_val_acc = 0, final_test_acc = 0;
    std::string selection = "final_epoch";
    double wall_seconds = 0;
};

/// Stable hex fingerprint of a dataset spec; aggregation refuses to mix runs
/// whose fingerprints differ under one (method, dataset) key.
std::string dataset_fingerprint(const data::DatasetSpec& spec);

void save_run_report(const RunReport& report, const std::string& path);
RunReport load_run_report(const std::string& path);

// Batch assembly: split rows packed as (n, 3, h, w) floats scaled to [-1, 1].
Tensor<float> batch_images(const std::vector<data::BiasedSample>& split,
                           const std::vector<int64_t>& idx);
std::vector<int64_t> batch_labels(const std::vector<data::BiasedSample>& split,
                                  const std::vector<int64_t>& idx);
std::vector<int64_t> argmax_rows(const Tensor<float>& logits);

/// Percent of argmax-correct predictions over the whole split; deterministic
/// and invariant to the batch partition.
double evaluate(const nets::ClassifierBundle<float>& model, const data::BiasedDataset& ds,
                data::Split split, int64_t batch_size = 256);

struct AggregateCell {
    std::string method, dataset, dataset_hash;
    int runs = 0;
    double val_mean = 0, val_std = 0, test_mean = 0, test_std = 0;
};

struct AggregateTable {
    std::vector<AggregateCell> rows;  // sorted by (method, dataset)
    std::string to_csv() const;       // header: method,dataset,val_mean,val_std,test_mean,test_std
    std::string to_text() const;      // aligned columns, std printed as n/a for single runs
};

AggregateTable aggregate_runs(const std::vector<RunReport>& reports);

/// Writes a 5-row grid PNG: originals x1; donors x2 (x1 rotated by one);
/// hybrids carrying x2's shortcut; hybrids the other way; entropic images.
/// Inputs are [-1, 1] batches; at most 8 columns. Read-only on the nets.
void dump_samples(const nets::MethodNets<float>& n, const Tensor<float>& batch,
                  const std::string& out_path);

/// Mean softmax entropy of the final classifier on generated entropic images
/// minus that on the originals, over up to max_samples split rows.
double entropy_gap(const nets::MethodNets<float>& n, const data::BiasedDataset& ds,
                   data::Split split, int64_t max_samples = 2048, int64_t batch_size = 128);

/// Fraction of random (x1, x2) pairs whose hybrid is assigned x2's class by
/// the shortcut probe: argmax C0(D_R(E(x1),F0(x2))) == argmax C0(x2).
double shortcut_transfer_rate(const nets::MethodNets<float>& n, const data::BiasedDataset& ds,
                              data::Split split, int64_t pairs = 1000, uint64_t seed = 0);

}  // namespace eada::eval
