#include "diskemb/model.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "diskemb/eval.hpp"
#include "diskemb/tolerances.hpp"

namespace diskemb {

void TrainConfig::validate() const {
  if (margin <= 0.0) throw config_error("margin must be positive");
  if (learning_rate <= 0.0) throw config_error("learning rate must be positive");
  if (center_scale <= 0.0 || radius_scale <= 0.0) {
    throw config_error("center/radius scales must be positive");
  }
  if (negatives_per_positive < 1) throw config_error("negatives per positive must be >= 1");
  if (epochs < 0) throw config_error("epochs must be >= 0");
  if (batch_size < 1) throw config_error("batch size must be >= 1");
  if (init_center_scale < 0.0) throw config_error("init center scale must be >= 0");
}

EmbeddingTable init_embeddings(const Space& space, int n_nodes,
                               const TrainConfig& config, Rng& rng) {
  if (n_nodes < 1) throw std::invalid_argument("init_embeddings: need at least one node");
  EmbeddingTable table{space, {}, {}};
  table.disks.reserve(n_nodes);
  const int dim = space.dim();
  for (int i = 0; i < n_nodes; ++i) {
    Vec center(dim, 0.0);
    switch (space.kind()) {
      case Geometry::euclidean:
      case Geometry::polyhedral:
        for (double& c : center) {
          c = rng.uniform(-config.init_center_scale, config.init_center_scale);
        }
        break;
      case Geometry::sphere:
        for (double& c : center) c = rng.normal();
        center = project_to_manifold(space, center);
        break;
      case Geometry::lorentz: {
        Vec base(dim, 0.0);
        base[0] = 1.0;
        Vec v(dim, 0.0);
        for (int k = 1; k < dim; ++k) v[k] = config.init_center_scale * rng.normal();
        center = project_to_manifold(space, exp_map(space, base, v));
        break;
      }
    }
    const double radius =
        config.init_radius +
        rng.uniform(-config.init_radius / 2.0, config.init_radius / 2.0);
    table.disks.push_back({std::move(center), radius});
  }
  return table;
}

double energy(const EmbeddingTable& table, int i, int j) {
  const int n = static_cast<int>(table.disks.size());
  if (i < 0 || i >= n || j < 0 || j >= n) {
    throw std::out_of_range("energy: node id out of range");
  }
  return protrusion(table.space, table.disks[j], table.disks[i]);
}

double pair_loss(double e, bool is_positive, double margin) {
  const double v = is_positive ? e : margin - e;
  return v > 0.0 ? v : 0.0;
}

std::vector<Pair> sample_negatives(const std::vector<Pair>& positives,
                                   const std::set<Pair>& closure, int n_nodes,
                                   int k, Rng& rng, std::vector<char>* flagged) {
  if (k < 1) throw std::invalid_argument("sample_negatives: k must be >= 1");
  if (n_nodes < 2) throw std::invalid_argument("sample_negatives: need at least 2 nodes");
  std::vector<Pair> out;
  out.reserve(positives.size() * static_cast<std::size_t>(k));
  if (flagged) flagged->assign(positives.size() * static_cast<std::size_t>(k), 0);
  std::size_t idx = 0;
  for (const Pair& pos : positives) {
    for (int c = 0; c < k; ++c, ++idx) {
      Pair candidate = pos;
      bool ok = false;
      for (int attempt = 0; attempt < 100; ++attempt) {
        candidate = pos;
        const int node = static_cast<int>(rng.uniform_index(n_nodes));
        (rng.coin() ? candidate.first : candidate.second) = node;
        if (candidate.first != candidate.second && !closure.count(candidate)) {
          ok = true;
          break;
        }
      }
      if (!ok && flagged) (*flagged)[idx] = 1;
      out.push_back(candidate);
    }
  }
  return out;
}

void rsgd_step(EmbeddingTable& table, const Pair& pair, bool is_positive,
               const TrainConfig& config) {
  const int i = pair.first, j = pair.second;
  const double e = energy(table, i, j);
  if (i == j) return;  // E(i,i) is identically 0: every parameter gradient cancels
  // subgradient of the margin loss in the energy: 0 at the kinks
  double g = 0.0;
  if (is_positive && e > 0.0) g = 1.0;
  if (!is_positive && e < config.margin) g = -1.0;
  if (g == 0.0) return;

  FormalDisk& ancestor = table.disks[j];
  FormalDisk& descendant = table.disks[i];
  const Space& space = table.space;
  const double eta = config.learning_rate;

  if (distance(space, ancestor.center, descendant.center) > 0.0) {
    bool degenerate = false;
    Vec ga, gd;
    try {
      ga = distance_grad(space, ancestor.center, descendant.center, Wrt::first);
      gd = distance_grad(space, ancestor.center, descendant.center, Wrt::second);
    } catch (const degenerate_gradient&) {
      degenerate = true;  // antipodal or numerically coincident: radii only
    }
    if (!degenerate) {
      const double step = -eta * config.center_scale * g;
      for (double& c : ga) c *= step;
      for (double& c : gd) c *= step;
      // analytic gradients are tangent only up to rounding, and the noise is
      // amplified near antipodal pairs; re-project so exp_map's tangency
      // check cannot trip mid-training
      ga = tangent_project(space, ancestor.center, ga);
      gd = tangent_project(space, descendant.center, gd);
      ancestor.center = project_to_manifold(space, exp_map(space, ancestor.center, ga));
      descendant.center = project_to_manifold(space, exp_map(space, descendant.center, gd));
    }
  }
  // dE/dr_j = -1 for the ancestor, +1 for the descendant
  ancestor.radius += eta * config.radius_scale * g;
  descendant.radius -= eta * config.radius_scale * g;
}

std::pair<EmbeddingTable, TrainReport> train(const DagDataset& dataset,
                                             const Space& space,
                                             const TrainConfig& config) {
  config.validate();
  if (dataset.train_pos.empty()) {
    throw std::invalid_argument("train: no training positives");
  }
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(config.seed);
  EmbeddingTable table =
      init_embeddings(space, dataset.dag.node_count(), config, rng);
  table.node_names = dataset.dag.node_names;

  const std::set<Pair> closure(dataset.closure.begin(), dataset.closure.end());
  std::vector<Pair> valid_pairs = dataset.valid_pos;
  valid_pairs.insert(valid_pairs.end(), dataset.valid_neg.begin(),
                     dataset.valid_neg.end());
  std::vector<char> valid_labels(dataset.valid_pos.size(), 1);
  valid_labels.resize(valid_pairs.size(), 0);
  const bool has_valid = !dataset.valid_pos.empty() && !dataset.valid_neg.empty();

  TrainReport report;
  std::vector<Pair> positives = dataset.train_pos;
  const int k = config.negatives_per_positive;
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    rng.shuffle(positives);
    std::vector<char> flagged;
    std::vector<Pair> negatives = sample_negatives(
        positives, closure, dataset.dag.node_count(), k, rng, &flagged);
    double loss_sum = 0.0;
    std::size_t used = 0;
    for (std::size_t p = 0; p < positives.size(); ++p) {
      loss_sum += pair_loss(energy(table, positives[p].first, positives[p].second),
                            true, config.margin);
      ++used;
      rsgd_step(table, positives[p], true, config);
      for (int c = 0; c < k; ++c) {
        const std::size_t s = p * k + c;
        if (flagged[s]) continue;  // closure member or self-pair: not a negative
        loss_sum += pair_loss(energy(table, negatives[s].first,
                                     negatives[s].second),
                              false, config.margin);
        ++used;
        rsgd_step(table, negatives[s], false, config);
      }
    }
    EpochRecord rec;
    rec.epoch = epoch;
    rec.mean_loss = loss_sum / static_cast<double>(used);
    if (has_valid) {
      const std::vector<double> scores = score_pairs(table, valid_pairs);
      rec.tau = tune_threshold(scores, valid_labels);
      rec.valid_f1 = f1_at(scores, valid_labels, rec.tau).f1;
      rec.has_valid = true;
    }
    report.epochs.push_back(rec);
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {std::move(table), std::move(report)};
}

}  // namespace diskemb
