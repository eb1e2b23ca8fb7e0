#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "diskemb/dag.hpp"
#include "diskemb/eval.hpp"
#include "diskemb/model.hpp"

namespace diskemb {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Whole file as bytes; io_error("cannot open ...") when unreadable.
std::string read_file(const std::string& path);

// Write-temp-then-rename: readers never observe a partial file.
void atomic_write_file(const std::string& path, const std::string& content);

// Shortest decimal that parses back to the identical double.
std::string format_double(double v);

// Checkpoint: line 1 is the header
//   {"format_version":1,"geometry":...,"dim":...,"node_count":...}
// (polyhedral headers also carry "generators"; nothing else pins the
// quasi-metric), then one {"name","radius","center"} object per node.
std::string format_checkpoint(const EmbeddingTable& table);
EmbeddingTable parse_checkpoint(const std::string& text);

// "child<TAB>parent" lines via node names; parse skips blank/'#' lines.
std::string format_pairs_tsv(const std::vector<Pair>& pairs,
                             const std::vector<std::string>& names);
std::vector<Pair> parse_pairs_tsv(
    const std::string& text,
    const std::unordered_map<std::string, int>& ids);

// Split manifest: train.tsv, {valid,test}_{pos,neg}.tsv, split.json.
void write_split_dir(const std::string& dir, const DagDataset& dataset);
DagDataset read_split_dir(const std::string& dir);

// epoch,mean_loss,valid_f1,tau — the last two stay empty without validation.
std::string format_metrics_csv(const TrainReport& report);

std::string format_report_csv(const std::vector<EvalReport>& reports);
std::string format_report_json(const EvalReport& report);

}  // namespace diskemb
