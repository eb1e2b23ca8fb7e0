#include "diskemb/eval.hpp"

#include <algorithm>
#include <stdexcept>

namespace diskemb {

std::vector<double> score_pairs(const EmbeddingTable& table,
                                const std::vector<Pair>& pairs) {
  const int n = static_cast<int>(table.disks.size());
  std::vector<double> scores;
  scores.reserve(pairs.size());
  for (const Pair& p : pairs) {
    if (p.first < 0 || p.first >= n || p.second < 0 || p.second >= n) {
      throw std::out_of_range("score_pairs: node id out of range");
    }
    scores.push_back(energy(table, p.first, p.second));
  }
  return scores;
}

EvalReport f1_at(const std::vector<double>& scores,
                 const std::vector<char>& labels, double tau) {
  if (scores.size() != labels.size()) {
    throw std::invalid_argument("f1_at: scores and labels differ in length");
  }
  EvalReport r;
  r.tau = tau;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const bool predicted = scores[i] <= tau;
    const bool actual = labels[i] != 0;
    if (predicted && actual) ++r.tp;
    else if (predicted && !actual) ++r.fp;
    else if (!predicted && actual) ++r.fn;
    else ++r.tn;
  }
  r.precision = (r.tp + r.fp) > 0 ? static_cast<double>(r.tp) / (r.tp + r.fp) : 0.0;
  r.recall = (r.tp + r.fn) > 0 ? static_cast<double>(r.tp) / (r.tp + r.fn) : 0.0;
  r.f1 = (r.precision + r.recall) > 0.0
             ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
             : 0.0;
  return r;
}

double tune_threshold(const std::vector<double>& scores,
                      const std::vector<char>& labels) {
  if (scores.size() != labels.size()) {
    throw std::invalid_argument("tune_threshold: scores and labels differ in length");
  }
  bool any_pos = false, any_neg = false;
  for (char l : labels) (l ? any_pos : any_neg) = true;
  if (!any_pos || !any_neg) {
    throw config_error("tune_threshold: need at least one positive and one negative label");
  }
  std::vector<double> distinct(scores);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<double> candidates;
  for (std::size_t i = 0; i + 1 < distinct.size(); ++i) {
    candidates.push_back(0.5 * (distinct[i] + distinct[i + 1]));
  }
  candidates.push_back(distinct.back());
  double best_tau = candidates.front();
  double best_f1 = -1.0;
  for (double tau : candidates) {
    const double f1 = f1_at(scores, labels, tau).f1;
    if (f1 > best_f1) {  // strict: ties keep the smallest tau
      best_f1 = f1;
      best_tau = tau;
    }
  }
  return best_tau;
}

}  // namespace diskemb
