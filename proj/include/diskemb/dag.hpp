#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace diskemb {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct cycle_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Pair = std::pair<int, int>;

// Directed acyclic graph over densely numbered named nodes. An edge (u, v)
// reads "u is-a v": v is the more general concept.
struct Dag {
  std::vector<std::string> node_names;
  std::vector<Pair> edges;  // sorted, unique, no self-loops

  int node_count() const { return static_cast<int>(node_names.size()); }
  std::unordered_map<std::string, int> name_index() const;
};

// Parses "child<TAB>parent" lines; '#' starts a comment line; duplicates are
// dropped. Throws parse_error with a line number on malformed input, and
// cycle_error naming a back edge when the graph is not acyclic.
Dag parse_edge_list(std::string_view text);

// Renders edges back to the TSV format of parse_edge_list.
std::string format_edge_list(const Dag& dag);

// All ordered pairs (u, w), u != w, connected by a directed path; sorted.
std::vector<Pair> transitive_closure(const Dag& dag);

// The unique minimal edge subset with the same closure: an edge survives iff
// no intermediate node w has both (u, w) and (w, v) in the closure.
std::vector<Pair> transitive_reduction(const Dag& dag);

Dag reverse(const Dag& dag);

struct SplitParams {
  double percent_nonbasic = 0.0;
  int valid_count = 0;
  int test_count = 0;
  int neg_ratio = 10;
  std::uint64_t seed = 0;
};

struct DagDataset {
  Dag dag;
  std::vector<Pair> closure;
  std::vector<Pair> reduction;
  std::vector<Pair> train_pos;
  std::vector<Pair> valid_pos, valid_neg;
  std::vector<Pair> test_pos, test_neg;
  SplitParams params;
};

// Table-2-style split: train on the reduction plus a seeded sample of
// percent_nonbasic of the non-basic closure pairs; validation/test positives
// come from the remaining non-basic pairs; negatives are uniform draws from
// ordered non-closure, non-self pairs, fixed at split time.
DagDataset split_dataset(const Dag& dag, double percent_nonbasic,
                         int valid_count, int test_count, int neg_ratio,
                         std::uint64_t seed);

}  // namespace diskemb
