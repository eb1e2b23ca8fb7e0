#pragma once

#include <string>
#include <vector>

#include "diskemb/model.hpp"

namespace diskemb {

struct EvalReport {
  std::string split;
  double tau = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  long tp = 0, fp = 0, tn = 0, fn = 0;
};

// Scores are raw protrusions; lower means a stronger predicted relation.
std::vector<double> score_pairs(const EmbeddingTable& table,
                                const std::vector<Pair>& pairs);

// Threshold for the rule "positive iff score <= tau" that maximizes F1 on the
// given labeled scores: the best midpoint between consecutive distinct
// scores (the top score itself covers the predict-everything case), ties
// resolved toward the smallest tau.
double tune_threshold(const std::vector<double>& scores,
                      const std::vector<char>& labels);

EvalReport f1_at(const std::vector<double>& scores,
                 const std::vector<char>& labels, double tau);

}  // namespace diskemb
