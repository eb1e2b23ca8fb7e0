#include "diskemb/dag.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "diskemb/rng.hpp"

namespace diskemb {

namespace {

std::vector<std::vector<int>> adjacency(const Dag& dag) {
  std::vector<std::vector<int>> adj(dag.node_count());
  for (const Pair& e : dag.edges) adj[e.first].push_back(e.second);
  return adj;
}

// Kahn topological order; throws cycle_error naming a back edge if cyclic.
std::vector<int> topological_order(int n, const std::vector<std::vector<int>>& adj,
                                   const std::vector<std::string>& names) {
  std::vector<int> indeg(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v : adj[u]) ++indeg[v];
  }
  std::vector<int> queue, order;
  for (int u = 0; u < n; ++u) {
    if (indeg[u] == 0) queue.push_back(u);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    order.push_back(u);
    for (int v : adj[u]) {
      if (--indeg[v] == 0) queue.push_back(v);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    for (int u = 0; u < n; ++u) {
      if (indeg[u] <= 0) continue;
      for (int v : adj[u]) {
        if (indeg[v] > 0) {
          throw cycle_error("cycle detected through edge " + names[u] + " -> " +
                            names[v]);
        }
      }
    }
    throw cycle_error("cycle detected");
  }
  return order;
}

// Reachability bitsets, reach[u] = all nodes strictly below ... i.e. all w
// with a directed path u -> ... -> w.
std::vector<std::vector<std::uint64_t>> reach_bitsets(const Dag& dag) {
  const int n = dag.node_count();
  const int words = (n + 63) / 64;
  auto adj = adjacency(dag);
  auto order = topological_order(n, adj, dag.node_names);
  std::vector<std::vector<std::uint64_t>> reach(n, std::vector<std::uint64_t>(words, 0));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int u = *it;
    for (int v : adj[u]) {
      reach[u][v >> 6] |= 1ULL << (v & 63);
      for (int w = 0; w < words; ++w) reach[u][w] |= reach[v][w];
    }
  }
  return reach;
}

bool reach_test(const std::vector<std::vector<std::uint64_t>>& reach, int u, int v) {
  return (reach[u][v >> 6] >> (v & 63)) & 1ULL;
}

}  // namespace

std::unordered_map<std::string, int> Dag::name_index() const {
  std::unordered_map<std::string, int> idx;
  idx.reserve(node_names.size());
  for (int i = 0; i < node_count(); ++i) idx.emplace(node_names[i], i);
  return idx;
}

Dag parse_edge_list(std::string_view text) {
  Dag dag;
  std::unordered_map<std::string, int> ids;
  std::set<Pair> seen;
  auto intern = [&](std::string name) {
    auto [it, inserted] = ids.emplace(std::move(name), dag.node_count());
    if (inserted) dag.node_names.push_back(it->first);
    return it->second;
  };

  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos ||
        line.find('\t', tab + 1) != std::string_view::npos || tab == 0 ||
        tab + 1 == line.size()) {
      throw parse_error("line " + std::to_string(line_no) +
                        ": expected exactly two tab-separated fields");
    }
    std::string child(line.substr(0, tab)), parent(line.substr(tab + 1));
    if (child == parent) {
      throw parse_error("line " + std::to_string(line_no) + ": self-loop on '" +
                        child + "'");
    }
    const int u = intern(std::move(child));
    const int v = intern(std::move(parent));
    if (seen.insert({u, v}).second) dag.edges.push_back({u, v});
  }
  std::sort(dag.edges.begin(), dag.edges.end());
  topological_order(dag.node_count(), adjacency(dag), dag.node_names);  // acyclicity
  return dag;
}

std::string format_edge_list(const Dag& dag) {
  std::string out;
  for (const Pair& e : dag.edges) {
    out += dag.node_names[e.first];
    out += '\t';
    out += dag.node_names[e.second];
    out += '\n';
  }
  return out;
}

std::vector<Pair> transitive_closure(const Dag& dag) {
  const auto reach = reach_bitsets(dag);
  const int n = dag.node_count();
  std::vector<Pair> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (reach_test(reach, u, v)) pairs.push_back({u, v});
    }
  }
  return pairs;
}

std::vector<Pair> transitive_reduction(const Dag& dag) {
  const auto reach = reach_bitsets(dag);
  std::vector<Pair> kept;
  for (const Pair& e : dag.edges) {
    bool redundant = false;
    const auto& row = reach[e.first];
    for (std::size_t w = 0; w < row.size() && !redundant; ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        const int mid = static_cast<int>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        if (mid != e.second && reach_test(reach, mid, e.second)) {
          redundant = true;
          break;
        }
      }
    }
    if (!redundant) kept.push_back(e);
  }
  return kept;
}

Dag reverse(const Dag& dag) {
  Dag out;
  out.node_names = dag.node_names;
  out.edges.reserve(dag.edges.size());
  for (const Pair& e : dag.edges) out.edges.push_back({e.second, e.first});
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

DagDataset split_dataset(const Dag& dag, double percent_nonbasic,
                         int valid_count, int test_count, int neg_ratio,
                         std::uint64_t seed) {
  if (percent_nonbasic < 0.0 || percent_nonbasic > 1.0) {
    throw config_error("percent_nonbasic must lie in [0, 1]");
  }
  if (valid_count < 0 || test_count < 0 || neg_ratio < 0) {
    throw config_error("split counts must be nonnegative");
  }
  DagDataset ds;
  ds.dag = dag;
  ds.params = {percent_nonbasic, valid_count, test_count, neg_ratio, seed};
  ds.closure = transitive_closure(dag);
  ds.reduction = transitive_reduction(dag);

  std::set<Pair> basic(ds.reduction.begin(), ds.reduction.end());
  std::vector<Pair> nonbasic;
  for (const Pair& p : ds.closure) {
    if (!basic.count(p)) nonbasic.push_back(p);
  }

  Rng rng(seed);
  rng.shuffle(nonbasic);
  const int take = static_cast<int>(
      std::floor(percent_nonbasic * static_cast<double>(nonbasic.size())));
  const int remaining = static_cast<int>(nonbasic.size()) - take;
  if (valid_count + test_count > remaining) {
    throw config_error(
        "not enough non-basic pairs for the requested validation/test sizes: "
        "need " + std::to_string(valid_count + test_count) + ", have " +
        std::to_string(remaining));
  }

  ds.train_pos = ds.reduction;
  ds.train_pos.insert(ds.train_pos.end(), nonbasic.begin(), nonbasic.begin() + take);
  ds.valid_pos.assign(nonbasic.begin() + take, nonbasic.begin() + take + valid_count);
  ds.test_pos.assign(nonbasic.begin() + take + valid_count,
                     nonbasic.begin() + take + valid_count + test_count);

  const int n = dag.node_count();
  std::set<Pair> closure_set(ds.closure.begin(), ds.closure.end());
  auto draw_negatives = [&](int count) {
    std::vector<Pair> out;
    if (count == 0) return out;
    if (n < 2) throw config_error("negative sampling needs at least 2 nodes");
    const long long limit = 1000LL * count + 1000;
    long long attempts = 0;
    while (static_cast<int>(out.size()) < count) {
      if (++attempts > limit) {
        throw config_error("could not find enough non-closure pairs for negatives");
      }
      const int i = static_cast<int>(rng.uniform_index(n));
      const int j = static_cast<int>(rng.uniform_index(n));
      if (i == j || closure_set.count({i, j})) continue;
      out.push_back({i, j});
    }
    return out;
  };
  ds.valid_neg = draw_negatives(neg_ratio * valid_count);
  ds.test_neg = draw_negatives(neg_ratio * test_count);
  return ds;
}

}  // namespace diskemb
