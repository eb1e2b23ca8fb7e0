#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "diskemb/dag.hpp"
#include "diskemb/disks.hpp"
#include "diskemb/rng.hpp"

namespace diskemb {

// Dense node-indexed embedding store.
struct EmbeddingTable {
  Space space;
  std::vector<FormalDisk> disks;
  std::vector<std::string> node_names;
};

struct TrainConfig {
  double margin = 0.1;
  double learning_rate = 0.01;
  double center_scale = 1.0;   // lambda in the update rule
  double radius_scale = 1.0;   // nu in the update rule
  int negatives_per_positive = 10;
  int epochs = 300;
  int batch_size = 512;
  double init_center_scale = 0.1;
  double init_radius = 0.1;
  std::uint64_t seed = 0;

  void validate() const;
};

struct EpochRecord {
  int epoch = 0;
  double mean_loss = 0.0;
  bool has_valid = false;  // validation needs both label classes
  double valid_f1 = 0.0;
  double tau = 0.0;
};

struct TrainReport {
  std::vector<EpochRecord> epochs;
  double wall_seconds = 0.0;
};

EmbeddingTable init_embeddings(const Space& space, int n_nodes,
                               const TrainConfig& config, Rng& rng);

// Energy of the ordered pair (i, j), where (i, j) reads "i is-a j": the
// protrusion of the ancestor disk j over the descendant disk i.
double energy(const EmbeddingTable& table, int i, int j);

// h+(E) for positives, h+(margin - E) for negatives.
double pair_loss(double e, bool is_positive, double margin);

// k corrupted pairs per positive; each attempt replaces one side (coin flip)
// with a uniform node and rejects closure members and self-pairs, up to 100
// attempts. `flagged`, if given, records samples that exhausted the attempts.
std::vector<Pair> sample_negatives(const std::vector<Pair>& positives,
                                   const std::set<Pair>& closure, int n_nodes,
                                   int k, Rng& rng,
                                   std::vector<char>* flagged = nullptr);

// One RSGD update on a sampled pair: centers step along the scaled distance
// gradients through the exponential map, radii take plain gradient steps.
void rsgd_step(EmbeddingTable& table, const Pair& pair, bool is_positive,
               const TrainConfig& config);

std::pair<EmbeddingTable, TrainReport> train(const DagDataset& dataset,
                                             const Space& space,
                                             const TrainConfig& config);

}  // namespace diskemb
