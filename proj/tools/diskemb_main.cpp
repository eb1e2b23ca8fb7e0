#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diskemb/dag.hpp"
#include "diskemb/eval.hpp"
#include "diskemb/io.hpp"
#include "diskemb/model.hpp"
#include "diskemb/verify.hpp"

namespace {

using namespace diskemb;
using nlohmann::json;
using nlohmann::ordered_json;

// Config-file keys mirror the flag names, so an echoed config.json can be
// replayed with --config; flags passed explicitly always win.
class ConfigMerge {
 public:
  template <class T>
  void bind(CLI::Option* opt, std::string key, T* target) {
    items_.push_back({std::move(key), opt, [target](const json& v, const std::string& k) {
                        try {
                          *target = v.get<T>();
                        } catch (const std::exception&) {
                          throw config_error("config key \"" + k +
                                             "\" has the wrong type");
                        }
                      }});
  }

  void apply(const std::string& path, const std::string& command) const {
    const json cfg = json::parse(read_file(path), nullptr, false);
    if (cfg.is_discarded() || !cfg.is_object()) {
      throw config_error("config file " + path + " is not a JSON object");
    }
    for (const auto& [key, value] : cfg.items()) {
      if (key == "command") {
        if (value != command) {
          throw config_error("config file " + path + " is for subcommand \"" +
                             value.dump() + "\", not \"" + command + "\"");
        }
        continue;
      }
      const Item* item = nullptr;
      for (const Item& it : items_) {
        if (it.key == key) {
          item = &it;
          break;
        }
      }
      if (item == nullptr) {
        throw config_error("config key \"" + key +
                           "\" is not a flag of subcommand \"" + command +
                           "\"");
      }
      if (item->opt->count() > 0) continue;
      item->set(value, key);
    }
  }

 private:
  struct Item {
    std::string key;
    CLI::Option* opt;
    std::function<void(const json&, const std::string&)> set;
  };
  std::vector<Item> items_;
};

struct SplitArgs {
  std::string edges, out, config;
  double percent_nonbasic = 0.0;
  int valid_count = 0;
  int test_count = 0;
  int neg_ratio = 10;
  std::uint64_t seed = 0;
};

struct TrainArgs {
  std::string split, out, config;
  std::string geometry = "euclidean";
  int dim = 5;
  double margin = 0.1;
  double lr = 0.01;
  double lambda = 1.0;
  double nu = 1.0;
  int negatives = 10;
  int epochs = 300;
  std::uint64_t seed = 0;
};

struct EvalArgs {
  std::string checkpoint, split, out, config;
  int threads = 1;
};

struct ReverseArgs {
  std::string edges, out, config;
};

struct VerifyArgs {
  std::string config;
  int trials = 1000;
  std::uint64_t seed = 0;
  double cone_constant = 0.1;
  int threads = 1;
};

void require_path(const std::string& value, const char* flag) {
  if (value.empty()) {
    throw config_error(std::string(flag) + " is required");
  }
}

// --dim counts manifold dimensions: the Lorentz sheet of dimension d lives
// in d+1 ambient coordinates, the other spaces use dim coordinates directly.
Space make_space(const std::string& geometry, int dim) {
  if (dim < 1) throw config_error("--dim must be at least 1");
  switch (geometry_from_name(geometry)) {
    case Geometry::euclidean:
      return Space::euclidean(dim);
    case Geometry::polyhedral: {
      std::vector<Vec> gens;
      gens.reserve(2 * static_cast<std::size_t>(dim));
      for (int k = 0; k < dim; ++k) {
        Vec w(dim, 0.0);
        w[k] = 1.0;
        gens.push_back(w);
        w[k] = -1.0;
        gens.push_back(w);
      }
      return Space::polyhedral(dim, std::move(gens));
    }
    case Geometry::sphere:
      if (dim < 2) throw config_error("--dim must be at least 2 for sphere");
      return Space::sphere(dim);
    case Geometry::lorentz:
      return Space::lorentz(dim + 1);
  }
  throw config_error("unreachable geometry");
}

std::vector<double> scores_threaded(const EmbeddingTable& table,
                                    const std::vector<Pair>& pairs,
                                    int threads) {
  if (threads <= 1 || pairs.size() < 64) return score_pairs(table, pairs);
  std::vector<double> out(pairs.size());
  const int n_threads =
      std::min<int>(threads, static_cast<int>(pairs.size()));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n_threads));
  for (int w = 0; w < n_threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < pairs.size();
           i += static_cast<std::size_t>(n_threads)) {
        out[i] = energy(table, pairs[i].first, pairs[i].second);
      }
    });
  }
  for (std::thread& th : pool) th.join();
  return out;
}

void write_config_echo(const std::string& out_dir, const ordered_json& cfg) {
  atomic_write_file(out_dir + "/config.json", cfg.dump(2) + "\n");
}

int run_split(const SplitArgs& a) {
  require_path(a.edges, "--edges");
  require_path(a.out, "--out");
  const Dag dag = parse_edge_list(read_file(a.edges));
  const DagDataset ds = split_dataset(dag, a.percent_nonbasic, a.valid_count,
                                      a.test_count, a.neg_ratio, a.seed);
  write_split_dir(a.out, ds);
  write_config_echo(a.out, ordered_json{{"command", "split"},
                                        {"edges", a.edges},
                                        {"out", a.out},
                                        {"percent-nonbasic", a.percent_nonbasic},
                                        {"valid-count", a.valid_count},
                                        {"test-count", a.test_count},
                                        {"neg-ratio", a.neg_ratio},
                                        {"seed", a.seed}});
  std::cout << "nodes: " << ds.dag.node_count() << "\n"
            << "edges: " << ds.dag.edges.size() << "\n"
            << "closure: " << ds.closure.size() << "\n"
            << "reduction: " << ds.reduction.size() << "\n"
            << "train_pos: " << ds.train_pos.size() << "\n"
            << "valid_pos: " << ds.valid_pos.size() << "\n"
            << "valid_neg: " << ds.valid_neg.size() << "\n"
            << "test_pos: " << ds.test_pos.size() << "\n"
            << "test_neg: " << ds.test_neg.size() << "\n";
  return 0;
}

int run_train(const TrainArgs& a) {
  require_path(a.split, "--split");
  require_path(a.out, "--out");
  const Space space = make_space(a.geometry, a.dim);
  TrainConfig config;
  config.margin = a.margin;
  config.learning_rate = a.lr;
  config.center_scale = a.lambda;
  config.radius_scale = a.nu;
  config.negatives_per_positive = a.negatives;
  config.epochs = a.epochs;
  config.seed = a.seed;
  config.validate();  // fail before touching any output
  const DagDataset ds = read_split_dir(a.split);
  const auto [table, report] = train(ds, space, config);
  std::error_code ec;
  std::filesystem::create_directories(a.out, ec);
  if (ec) {
    throw io_error("cannot create directory " + a.out + ": " + ec.message());
  }
  atomic_write_file(a.out + "/checkpoint.jsonl", format_checkpoint(table));
  atomic_write_file(a.out + "/metrics.csv", format_metrics_csv(report));
  write_config_echo(a.out, ordered_json{{"command", "train"},
                                        {"split", a.split},
                                        {"out", a.out},
                                        {"geometry", a.geometry},
                                        {"dim", a.dim},
                                        {"margin", a.margin},
                                        {"lr", a.lr},
                                        {"lambda", a.lambda},
                                        {"nu", a.nu},
                                        {"negatives", a.negatives},
                                        {"epochs", a.epochs},
                                        {"seed", a.seed}});
  std::cout << "nodes: " << table.disks.size() << "\n"
            << "epochs: " << report.epochs.size() << "\n";
  if (!report.epochs.empty()) {
    const EpochRecord& last = report.epochs.back();
    std::cout << "final_mean_loss: " << format_double(last.mean_loss) << "\n";
    if (last.has_valid) {
      std::cout << "final_valid_f1: " << format_double(last.valid_f1) << "\n"
                << "tau: " << format_double(last.tau) << "\n";
    }
  }
  return 0;
}

int run_eval(const EvalArgs& a) {
  require_path(a.checkpoint, "--checkpoint");
  require_path(a.split, "--split");
  require_path(a.out, "--out");
  const EmbeddingTable table = parse_checkpoint(read_file(a.checkpoint));
  std::unordered_map<std::string, int> ids;
  for (std::size_t i = 0; i < table.node_names.size(); ++i) {
    ids.emplace(table.node_names[i], static_cast<int>(i));
  }
  const auto read_pairs = [&](const char* name) {
    return parse_pairs_tsv(read_file(a.split + "/" + name), ids);
  };
  std::vector<Pair> valid = read_pairs("valid_pos.tsv");
  const std::size_t n_valid_pos = valid.size();
  {
    const std::vector<Pair> neg = read_pairs("valid_neg.tsv");
    valid.insert(valid.end(), neg.begin(), neg.end());
  }
  if (n_valid_pos == 0 || n_valid_pos == valid.size()) {
    throw config_error(
        "cannot tune a threshold: validation needs positives and negatives");
  }
  std::vector<char> valid_labels(n_valid_pos, 1);
  valid_labels.resize(valid.size(), 0);

  std::vector<Pair> test = read_pairs("test_pos.tsv");
  const std::size_t n_test_pos = test.size();
  {
    const std::vector<Pair> neg = read_pairs("test_neg.tsv");
    test.insert(test.end(), neg.begin(), neg.end());
  }
  std::vector<char> test_labels(n_test_pos, 1);
  test_labels.resize(test.size(), 0);

  const double tau =
      tune_threshold(scores_threaded(table, valid, a.threads), valid_labels);
  const std::vector<double> test_scores =
      scores_threaded(table, test, a.threads);
  EvalReport tuned = f1_at(test_scores, test_labels, tau);
  tuned.split = "test";
  EvalReport at_zero = f1_at(test_scores, test_labels, 0.0);
  at_zero.split = "test_tau0";

  std::cout << format_report_json(tuned) << "\n"
            << format_report_json(at_zero) << "\n";
  std::error_code ec;
  std::filesystem::create_directories(a.out, ec);
  if (ec) {
    throw io_error("cannot create directory " + a.out + ": " + ec.message());
  }
  atomic_write_file(a.out + "/report.csv",
                    format_report_csv({tuned, at_zero}));
  write_config_echo(a.out, ordered_json{{"command", "eval"},
                                        {"checkpoint", a.checkpoint},
                                        {"split", a.split},
                                        {"out", a.out},
                                        {"threads", a.threads}});
  return 0;
}

int run_reverse(const ReverseArgs& a) {
  require_path(a.edges, "--edges");
  require_path(a.out, "--out");
  const Dag dag = parse_edge_list(read_file(a.edges));
  atomic_write_file(a.out, format_edge_list(reverse(dag)));
  return 0;
}

int run_verify(const VerifyArgs& a) {
  if (a.trials < 1) throw config_error("--trials must be at least 1");
  if (a.cone_constant <= 0.0 || a.cone_constant > 1.0) {
    throw config_error("--cone-constant must lie in (0, 1]");
  }
  if (a.threads < 1) throw config_error("--threads must be at least 1");
  const VerifyOptions options{a.trials, a.seed, a.cone_constant, a.threads};
  const std::vector<CheckResult> results = run_all_checks(options);
  std::vector<std::string> failed;
  for (const CheckResult& r : results) {
    char line[160];
    std::snprintf(line, sizeof(line),
                  "%-4s %-52s max residual %.3e (tol %.1e)",
                  r.pass ? "PASS" : "FAIL", r.name.c_str(), r.max_residual,
                  r.tolerance);
    std::cout << line << "\n";
    if (!r.pass) failed.push_back(r.name);
  }
  if (!failed.empty()) {
    std::cout << "failed properties:";
    for (const std::string& name : failed) std::cout << " [" << name << "]";
    std::cout << "\n";
    return 3;
  }
  std::cout << "all " << results.size() << " properties passed ("
            << a.trials << " trials, seed " << a.seed << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"formal-disk embeddings of DAGs: dataset preparation, "
               "training, evaluation, and theorem verification"};
  app.require_subcommand(1);

  SplitArgs split_args;
  ConfigMerge split_merge;
  CLI::App* split = app.add_subcommand(
      "split", "cut an edge list into train/valid/test pair files");
  split_merge.bind(split->add_option("--edges", split_args.edges,
                                     "input edge TSV (child<TAB>parent)"),
                   "edges", &split_args.edges);
  split_merge.bind(
      split->add_option("--out", split_args.out, "output manifest directory"),
      "out", &split_args.out);
  split_merge.bind(
      split->add_option("--percent-nonbasic", split_args.percent_nonbasic,
                        "share of non-basic closure pairs trained on"),
      "percent-nonbasic", &split_args.percent_nonbasic);
  split_merge.bind(split->add_option("--valid-count", split_args.valid_count,
                                     "validation positives"),
                   "valid-count", &split_args.valid_count);
  split_merge.bind(split->add_option("--test-count", split_args.test_count,
                                     "test positives"),
                   "test-count", &split_args.test_count);
  split_merge.bind(split->add_option("--neg-ratio", split_args.neg_ratio,
                                     "negatives per positive"),
                   "neg-ratio", &split_args.neg_ratio);
  split_merge.bind(split->add_option("--seed", split_args.seed, "split seed"),
                   "seed", &split_args.seed);
  split->add_option("--config", split_args.config,
                    "JSON config file; explicit flags override it");

  TrainArgs train_args;
  ConfigMerge train_merge;
  CLI::App* train_cmd =
      app.add_subcommand("train", "fit disk embeddings on a split directory");
  train_merge.bind(train_cmd->add_option("--split", train_args.split,
                                         "split manifest directory"),
                   "split", &train_args.split);
  train_merge.bind(
      train_cmd->add_option("--out", train_args.out, "output directory"),
      "out", &train_args.out);
  train_merge.bind(
      train_cmd->add_option(
          "--geometry", train_args.geometry,
          "euclidean | polyhedral | sphere | lorentz (default euclidean)"),
      "geometry", &train_args.geometry);
  train_merge.bind(
      train_cmd->add_option("--dim", train_args.dim,
                            "manifold dimensions (default 5)"),
      "dim", &train_args.dim);
  train_merge.bind(train_cmd->add_option("--margin", train_args.margin,
                                         "negative-pair margin"),
                   "margin", &train_args.margin);
  train_merge.bind(
      train_cmd->add_option("--lr", train_args.lr, "learning rate"), "lr",
      &train_args.lr);
  train_merge.bind(train_cmd->add_option("--lambda", train_args.lambda,
                                         "center gradient scale"),
                   "lambda", &train_args.lambda);
  train_merge.bind(
      train_cmd->add_option("--nu", train_args.nu, "radius gradient scale"),
      "nu", &train_args.nu);
  train_merge.bind(train_cmd->add_option("--negatives", train_args.negatives,
                                         "corrupted samples per positive"),
                   "negatives", &train_args.negatives);
  train_merge.bind(
      train_cmd->add_option("--epochs", train_args.epochs, "training epochs"),
      "epochs", &train_args.epochs);
  train_merge.bind(
      train_cmd->add_option("--seed", train_args.seed, "training seed"),
      "seed", &train_args.seed);
  train_cmd->add_option("--config", train_args.config,
                        "JSON config file; explicit flags override it");

  EvalArgs eval_args;
  ConfigMerge eval_merge;
  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "tune tau on validation pairs and score the test pairs");
  eval_merge.bind(eval_cmd->add_option("--checkpoint", eval_args.checkpoint,
                                       "checkpoint file"),
                  "checkpoint", &eval_args.checkpoint);
  eval_merge.bind(eval_cmd->add_option("--split", eval_args.split,
                                       "split manifest directory"),
                  "split", &eval_args.split);
  eval_merge.bind(
      eval_cmd->add_option("--out", eval_args.out, "output directory"), "out",
      &eval_args.out);
  eval_merge.bind(eval_cmd->add_option("--threads", eval_args.threads,
                                       "scoring worker threads"),
                  "threads", &eval_args.threads);
  eval_cmd->add_option("--config", eval_args.config,
                       "JSON config file; explicit flags override it");

  ReverseArgs reverse_args;
  ConfigMerge reverse_merge;
  CLI::App* reverse_cmd =
      app.add_subcommand("reverse", "invert every edge of an edge list");
  reverse_merge.bind(reverse_cmd->add_option("--edges", reverse_args.edges,
                                             "input edge TSV"),
                     "edges", &reverse_args.edges);
  reverse_merge.bind(
      reverse_cmd->add_option("--out", reverse_args.out, "output edge TSV"),
      "out", &reverse_args.out);
  reverse_cmd->add_option("--config", reverse_args.config,
                          "JSON config file; explicit flags override it");

  VerifyArgs verify_args;
  ConfigMerge verify_merge;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run the randomized property suites and report residuals");
  verify_merge.bind(verify_cmd->add_option("--trials", verify_args.trials,
                                           "trials per property"),
                    "trials", &verify_args.trials);
  verify_merge.bind(
      verify_cmd->add_option("--seed", verify_args.seed, "base seed"), "seed",
      &verify_args.seed);
  verify_merge.bind(
      verify_cmd->add_option("--cone-constant", verify_args.cone_constant,
                             "cone constant K for the hyperbolic checks"),
      "cone-constant", &verify_args.cone_constant);
  verify_merge.bind(verify_cmd->add_option("--threads", verify_args.threads,
                                           "trial worker threads"),
                    "threads", &verify_args.threads);
  verify_cmd->add_option("--config", verify_args.config,
                         "JSON config file; explicit flags override it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (split->parsed()) {
      if (!split_args.config.empty()) {
        split_merge.apply(split_args.config, "split");
      }
      return run_split(split_args);
    }
    if (train_cmd->parsed()) {
      if (!train_args.config.empty()) {
        train_merge.apply(train_args.config, "train");
      }
      return run_train(train_args);
    }
    if (eval_cmd->parsed()) {
      if (!eval_args.config.empty()) {
        eval_merge.apply(eval_args.config, "eval");
      }
      return run_eval(eval_args);
    }
    if (reverse_cmd->parsed()) {
      if (!reverse_args.config.empty()) {
        reverse_merge.apply(reverse_args.config, "reverse");
      }
      return run_reverse(reverse_args);
    }
    if (verify_cmd->parsed()) {
      if (!verify_args.config.empty()) {
        verify_merge.apply(verify_args.config, "verify");
      }
      return run_verify(verify_args);
    }
  } catch (const io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
