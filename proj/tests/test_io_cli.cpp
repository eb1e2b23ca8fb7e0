#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "diskemb/equivalence.hpp"
#include "diskemb/io.hpp"
#include "diskemb/rng.hpp"

using namespace diskemb;
namespace fs = std::filesystem;

namespace {

fs::path make_temp_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("diskemb_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

double reparse(const std::string& text) { return std::strtod(text.c_str(), nullptr); }

EmbeddingTable random_table(const Space& space, int n, Rng& rng) {
  EmbeddingTable t{space, {}, {}};
  for (int i = 0; i < n; ++i) {
    Vec c(space.dim());
    for (double& v : c) v = rng.uniform(-1.0, 1.0);
    if (space.kind() == Geometry::sphere ||
        space.kind() == Geometry::lorentz) {
      if (space.kind() == Geometry::lorentz) c[0] = 1.0;
      c = project_to_manifold(space, c);
    }
    t.disks.push_back({c, rng.uniform(-2.0, 2.0)});
    t.node_names.push_back("node_" + std::to_string(i));
  }
  return t;
}

std::set<std::pair<std::string, std::string>> name_pairs(
    const std::vector<Pair>& pairs, const std::vector<std::string>& names) {
  std::set<std::pair<std::string, std::string>> out;
  for (const Pair& p : pairs) out.insert({names[p.first], names[p.second]});
  return out;
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cmd(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kCli = DISKEMB_CLI_PATH;
const std::string kCliFaulted = DISKEMB_CLI_FAULTED_PATH;

// Every regular file under dir, keyed by relative path.
std::map<std::string, std::string> collect_dir(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    files[fs::relative(entry.path(), dir).string()] =
        read_file(entry.path().string());
  }
  return files;
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("format_double is a shortest exact round trip") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 1e300, 0.0, 4097.0 / 4096.0,
                   1.7976931348623157e308, 5e-324, -123456.75, 2.5e-7}) {
    CAPTURE(v);
    const std::string s = format_double(v);
    CHECK(reparse(s) == v);
    const std::string neg = format_double(-v);
    CHECK(reparse(neg) == -v);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-0.25) == "-0.25");
  CHECK(format_double(1e300) == "1e+300");
}

TEST_CASE("checkpoint round trip preserves every bit") {
  Rng rng(41);
  std::vector<Space> spaces = {
      Space::euclidean(3),
      Space::polyhedral(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}),
      OrderEmbeddingMap(3, 2.0).disk_space(),
      Space::sphere(3),
      Space::lorentz(3),
  };
  for (const Space& s : spaces) {
    CAPTURE(geometry_name(s.kind()));
    EmbeddingTable t = random_table(s, 7, rng);
    t.node_names[3] = "quoted \"name\" with \\slashes\\";
    const std::string text = format_checkpoint(t);
    const EmbeddingTable back = parse_checkpoint(text);
    CHECK(back.space.kind() == s.kind());
    CHECK(back.space.dim() == s.dim());
    REQUIRE(back.disks.size() == t.disks.size());
    for (std::size_t i = 0; i < t.disks.size(); ++i) {
      CHECK(back.node_names[i] == t.node_names[i]);
      CHECK(back.disks[i].radius == t.disks[i].radius);
      REQUIRE(back.disks[i].center.size() == t.disks[i].center.size());
      for (std::size_t k = 0; k < t.disks[i].center.size(); ++k) {
        CHECK(back.disks[i].center[k] == t.disks[i].center[k]);
      }
    }
    REQUIRE(back.space.generators().size() == s.generators().size());
    for (std::size_t g = 0; g < s.generators().size(); ++g) {
      for (std::size_t k = 0; k < s.generators()[g].size(); ++k) {
        CHECK(back.space.generators()[g][k] == s.generators()[g][k]);
      }
    }
    // formatting the parse is byte-stable
    CHECK(format_checkpoint(back) == text);
  }
}

TEST_CASE("checkpoint rejects malformed input with pointed diagnostics") {
  Rng rng(43);
  const EmbeddingTable t = random_table(Space::sphere(3), 3, rng);
  const std::string good = format_checkpoint(t);

  CHECK_THROWS_WITH_AS(parse_checkpoint(""),
                       doctest::Contains("format_version"), io_error);
  CHECK_THROWS_WITH_AS(parse_checkpoint("not json\n"),
                       doctest::Contains("format_version"), io_error);
  CHECK_THROWS_WITH_AS(
      parse_checkpoint("{\"format_version\":2,\"geometry\":\"sphere\","
                       "\"dim\":3,\"node_count\":0}\n"),
      doctest::Contains("format_version"), io_error);

  // header promises more records than the file holds
  const std::string truncated = good.substr(0, good.rfind("{\"name\""));
  CHECK_THROWS_AS(parse_checkpoint(truncated), io_error);

  // duplicate node name
  std::string dup = good;
  const std::size_t pos = dup.find("node_1");
  dup.replace(pos, 6, "node_0");
  CHECK_THROWS_WITH_AS(parse_checkpoint(dup), doctest::Contains("duplicate"),
                       io_error);

  // center off the manifold
  CHECK_THROWS_AS(
      parse_checkpoint("{\"format_version\":1,\"geometry\":\"sphere\","
                       "\"dim\":3,\"node_count\":1}\n"
                       "{\"name\":\"a\",\"radius\":0,\"center\":[2,0,0]}\n"),
      io_error);
  // wrong center arity
  CHECK_THROWS_AS(
      parse_checkpoint("{\"format_version\":1,\"geometry\":\"euclidean\","
                       "\"dim\":3,\"node_count\":1}\n"
                       "{\"name\":\"a\",\"radius\":0,\"center\":[1,2]}\n"),
      io_error);
  // non-finite radius
  CHECK_THROWS_AS(
      parse_checkpoint("{\"format_version\":1,\"geometry\":\"euclidean\","
                       "\"dim\":2,\"node_count\":1}\n"
                       "{\"name\":\"a\",\"radius\":1e999,\"center\":[0,0]}\n"),
      io_error);
  // polyhedral header must carry its generators
  CHECK_THROWS_WITH_AS(
      parse_checkpoint("{\"format_version\":1,\"geometry\":\"polyhedral\","
                       "\"dim\":2,\"node_count\":0}\n"),
      doctest::Contains("generators"), io_error);
  // unknown geometry
  CHECK_THROWS_AS(
      parse_checkpoint("{\"format_version\":1,\"geometry\":\"taxicab\","
                       "\"dim\":2,\"node_count\":0}\n"),
      io_error);
}

TEST_CASE("pair TSV round trip, comments, and errors") {
  const std::vector<std::string> names = {"a", "b", "c"};
  const std::vector<Pair> pairs = {{0, 1}, {2, 0}, {1, 1}};
  const std::string text = format_pairs_tsv(pairs, names);
  CHECK(text == "a\tb\nc\ta\nb\tb\n");
  std::unordered_map<std::string, int> ids{{"a", 0}, {"b", 1}, {"c", 2}};
  CHECK(parse_pairs_tsv(text, ids) == pairs);
  CHECK(parse_pairs_tsv("# comment\n\na\tc\n", ids) ==
        std::vector<Pair>{{0, 2}});
  CHECK(parse_pairs_tsv("", ids).empty());
  CHECK_THROWS_WITH_AS(parse_pairs_tsv("a\n", ids),
                       doctest::Contains("line 1"), io_error);
  CHECK_THROWS_AS(parse_pairs_tsv("a\tb\tc\n", ids), io_error);
  CHECK_THROWS_WITH_AS(parse_pairs_tsv("a\tz\n", ids),
                       doctest::Contains("unknown node"), io_error);
}

TEST_CASE("split manifest directory round trips through disk") {
  // random 30-node DAG, edges only from lower to higher index
  Rng rng(47);
  std::string edges;
  for (int i = 0; i < 30; ++i) {
    for (int j = i + 1; j < 30; ++j) {
      if (rng.uniform() < 0.12) {
        edges += "v" + std::to_string(i) + "\tv" + std::to_string(j) + "\n";
      }
    }
  }
  const Dag dag = parse_edge_list(edges);
  const DagDataset ds = split_dataset(dag, 0.3, 10, 10, 3, 5);
  const fs::path dir = make_temp_dir("split_roundtrip");
  write_split_dir(dir.string(), ds);
  const DagDataset back = read_split_dir(dir.string());

  CHECK(name_pairs(back.train_pos, back.dag.node_names) ==
        name_pairs(ds.train_pos, ds.dag.node_names));
  CHECK(name_pairs(back.closure, back.dag.node_names) ==
        name_pairs(ds.closure, ds.dag.node_names));
  CHECK(name_pairs(back.reduction, back.dag.node_names) ==
        name_pairs(ds.reduction, ds.dag.node_names));
  // ordered lists survive in file order
  for (auto [got, want] :
       {std::pair{&back.valid_pos, &ds.valid_pos},
        std::pair{&back.valid_neg, &ds.valid_neg},
        std::pair{&back.test_pos, &ds.test_pos},
        std::pair{&back.test_neg, &ds.test_neg}}) {
    REQUIRE(got->size() == want->size());
    for (std::size_t i = 0; i < got->size(); ++i) {
      CHECK(back.dag.node_names[(*got)[i].first] ==
            ds.dag.node_names[(*want)[i].first]);
      CHECK(back.dag.node_names[(*got)[i].second] ==
            ds.dag.node_names[(*want)[i].second]);
    }
  }
  CHECK(back.params.percent_nonbasic == ds.params.percent_nonbasic);
  CHECK(back.params.valid_count == ds.params.valid_count);
  CHECK(back.params.test_count == ds.params.test_count);
  CHECK(back.params.neg_ratio == ds.params.neg_ratio);
  CHECK(back.params.seed == ds.params.seed);
  fs::remove_all(dir);
}

TEST_CASE("metrics and report serialization") {
  TrainReport report;
  report.epochs.push_back({1, 0.5, false, 0.0, 0.0});
  report.epochs.push_back({2, 0.25, true, 0.75, -0.125});
  CHECK(format_metrics_csv(report) ==
        "epoch,mean_loss,valid_f1,tau\n"
        "1,0.5,,\n"
        "2,0.25,0.75,-0.125\n");

  EvalReport r;
  r.split = "test";
  r.tau = 0.5;
  r.precision = 1.0;
  r.recall = 0.25;
  r.f1 = 0.4;
  r.tp = 1;
  r.fp = 0;
  r.tn = 9;
  r.fn = 3;
  CHECK(format_report_csv({r}) ==
        "split,tau,precision,recall,f1,tp,fp,tn,fn\n"
        "test,0.5,1,0.25,0.4,1,0,9,3\n");
  CHECK(format_report_json(r) ==
        "{\"split\":\"test\",\"tau\":0.5,\"precision\":1,\"recall\":0.25,"
        "\"f1\":0.4,\"tp\":1,\"fp\":0,\"tn\":9,\"fn\":3}");
}

TEST_CASE("file primitives") {
  const fs::path dir = make_temp_dir("file_primitives");
  const std::string path = (dir / "data.txt").string();
  atomic_write_file(path, "first\n");
  CHECK(read_file(path) == "first\n");
  atomic_write_file(path, "second\n");
  CHECK(read_file(path) == "second\n");
  CHECK_FALSE(fs::exists(path + ".tmp"));
  CHECK_THROWS_WITH_AS(read_file((dir / "absent").string()),
                       doctest::Contains("cannot open"), io_error);
  fs::remove_all(dir);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("cli");

TEST_CASE("split, train, and eval chain into a perfect toy report") {
  const fs::path dir = make_temp_dir("cli_pipeline");
  std::string tree;
  for (int i = 1; i < 15; ++i) {
    tree += "n" + std::to_string(i) + "\tn" + std::to_string((i - 1) / 2) +
            "\n";
  }
  atomic_write_file((dir / "tree.tsv").string(), tree);

  const RunResult split = run_cmd(
      kCli + " split --edges " + (dir / "tree.tsv").string() + " --out " +
      (dir / "sp").string() +
      " --percent-nonbasic 0.5 --valid-count 4 --test-count 4"
      " --neg-ratio 5 --seed 11");
  CHECK(split.code == 0);
  CHECK(split.out.find("nodes: 15\n") != std::string::npos);
  CHECK(split.out.find("closure: 34\n") != std::string::npos);
  CHECK(split.out.find("reduction: 14\n") != std::string::npos);

  const RunResult train = run_cmd(
      kCli + " train --split " + (dir / "sp").string() + " --out " +
      (dir / "run").string() +
      " --geometry lorentz --dim 3 --epochs 120 --seed 5");
  CHECK(train.code == 0);

  const RunResult eval = run_cmd(
      kCli + " eval --checkpoint " + (dir / "run/checkpoint.jsonl").string() +
      " --split " + (dir / "sp").string() + " --out " +
      (dir / "ev").string());
  CHECK(eval.code == 0);
  const auto line_end = eval.out.find('\n');
  REQUIRE(line_end != std::string::npos);
  const nlohmann::json report =
      nlohmann::json::parse(eval.out.substr(0, line_end));
  CHECK(report["split"] == "test");
  CHECK(report["f1"] == 1.0);
  CHECK(report["tp"] == 4);
  CHECK(report["tn"] == 20);
  const std::string csv = read_file((dir / "ev/report.csv").string());
  CHECK(csv.find("split,tau,precision,recall,f1,tp,fp,tn,fn\n") == 0);
  CHECK(csv.find("\ntest_tau0,") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("chain checkpoint evaluates to f1 1.0 including at tau 0") {
  const fs::path dir = make_temp_dir("cli_chain");
  atomic_write_file((dir / "chain.tsv").string(), "a\tb\nb\tc\n");
  REQUIRE(run_cmd(kCli + " split --edges " + (dir / "chain.tsv").string() +
                  " --out " + (dir / "sp").string() +
                  " --percent-nonbasic 1 --seed 1")
              .code == 0);
  // 3 nodes cannot supply held-out positives; score the closure itself
  // against the three non-related ordered pairs instead
  atomic_write_file((dir / "sp/valid_pos.tsv").string(), "a\tb\nb\tc\na\tc\n");
  atomic_write_file((dir / "sp/valid_neg.tsv").string(), "b\ta\nc\tb\nc\ta\n");
  atomic_write_file((dir / "sp/test_pos.tsv").string(), "a\tb\nb\tc\na\tc\n");
  atomic_write_file((dir / "sp/test_neg.tsv").string(), "b\ta\nc\tb\nc\ta\n");
  for (const char* geometry : {"euclidean", "lorentz"}) {
    CAPTURE(geometry);
    const RunResult train = run_cmd(
        kCli + " train --split " + (dir / "sp").string() + " --out " +
        (dir / "run").string() + " --geometry " + geometry +
        " --dim 2 --epochs 200 --seed 3");
    REQUIRE(train.code == 0);
    const RunResult eval = run_cmd(
        kCli + " eval --checkpoint " +
        (dir / "run/checkpoint.jsonl").string() + " --split " +
        (dir / "sp").string() + " --out " + (dir / "ev").string());
    REQUIRE(eval.code == 0);
    const auto first_end = eval.out.find('\n');
    const auto second_end = eval.out.find('\n', first_end + 1);
    const nlohmann::json tuned =
        nlohmann::json::parse(eval.out.substr(0, first_end));
    const nlohmann::json at_zero = nlohmann::json::parse(
        eval.out.substr(first_end + 1, second_end - first_end - 1));
    CHECK(tuned["f1"] == 1.0);
    CHECK(at_zero["split"] == "test_tau0");
    CHECK(at_zero["f1"] == 1.0);
  }
  fs::remove_all(dir);
}

TEST_CASE("reverse inverts edges and rejects cycles") {
  const fs::path dir = make_temp_dir("cli_reverse");
  atomic_write_file((dir / "in.tsv").string(), "a\tb\nb\tc\na\tc\n");
  REQUIRE(run_cmd(kCli + " reverse --edges " + (dir / "in.tsv").string() +
                  " --out " + (dir / "rev.tsv").string())
              .code == 0);
  CHECK(read_file((dir / "rev.tsv").string()) == "b\ta\nc\ta\nc\tb\n");
  REQUIRE(run_cmd(kCli + " reverse --edges " + (dir / "rev.tsv").string() +
                  " --out " + (dir / "rev2.tsv").string())
              .code == 0);
  // double reversal reproduces the input up to line order
  auto sorted_lines = [](std::string text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
      const std::size_t end = text.find('\n', start);
      lines.push_back(text.substr(start, end - start));
      start = end + 1;
    }
    std::sort(lines.begin(), lines.end());
    return lines;
  };
  CHECK(sorted_lines(read_file((dir / "rev2.tsv").string())) ==
        sorted_lines(read_file((dir / "in.tsv").string())));

  atomic_write_file((dir / "cycle.tsv").string(), "a\tb\nb\ta\n");
  const RunResult bad = run_cmd(kCli + " reverse --edges " +
                                (dir / "cycle.tsv").string() + " --out " +
                                (dir / "x.tsv").string());
  CHECK(bad.code == 1);
  fs::remove_all(dir);
}

TEST_CASE("exit codes follow the 0/1/2/3 contract") {
  const fs::path dir = make_temp_dir("cli_codes");
  CHECK(run_cmd(kCli + " --help").code == 0);
  CHECK(run_cmd(kCli + " split --edges /nonexistent.tsv --out " +
                (dir / "o").string())
            .code == 2);
  CHECK(run_cmd(kCli + " split --bogus-flag 1").code == 1);
  CHECK(run_cmd(kCli + " verify --trials 0").code == 1);
  CHECK(run_cmd(kCli + " verify --trials 2 --cone-constant 1.5").code == 1);
  CHECK(run_cmd(kCli + " train --split nowhere --out " + (dir / "o").string() +
                " --epochs -3")
            .code == 1);

  const RunResult ok = run_cmd(kCli + " verify --trials 25 --seed 2");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  const RunResult faulted =
      run_cmd(kCliFaulted + " verify --trials 25 --seed 2");
  CHECK(faulted.code == 3);
  CHECK(faulted.out.find("FAIL distance gradient finite-difference match") !=
        std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("identical seeds reproduce every output byte") {
  const fs::path dir = make_temp_dir("cli_determinism");
  std::string tree;
  for (int i = 1; i < 15; ++i) {
    tree += "n" + std::to_string(i) + "\tn" + std::to_string((i - 1) / 2) +
            "\n";
  }
  atomic_write_file((dir / "tree.tsv").string(), tree);
  const std::string split_cmd =
      kCli + " split --edges " + (dir / "tree.tsv").string() + " --out " +
      (dir / "sp").string() +
      " --percent-nonbasic 0.25 --valid-count 3 --test-count 3"
      " --neg-ratio 4 --seed 21";
  const std::string train_cmd =
      kCli + " train --split " + (dir / "sp").string() + " --out " +
      (dir / "run").string() + " --geometry sphere --dim 3 --epochs 30"
      " --seed 8";
  const std::string eval_cmd =
      kCli + " eval --checkpoint " + (dir / "run/checkpoint.jsonl").string() +
      " --split " + (dir / "sp").string() + " --out " + (dir / "ev").string();

  REQUIRE(run_cmd(split_cmd).code == 0);
  REQUIRE(run_cmd(train_cmd).code == 0);
  REQUIRE(run_cmd(eval_cmd).code == 0);
  const auto sp1 = collect_dir(dir / "sp");
  const auto run1 = collect_dir(dir / "run");
  const auto ev1 = collect_dir(dir / "ev");

  REQUIRE(run_cmd(split_cmd).code == 0);
  REQUIRE(run_cmd(train_cmd).code == 0);
  REQUIRE(run_cmd(eval_cmd).code == 0);
  CHECK(collect_dir(dir / "sp") == sp1);
  CHECK(collect_dir(dir / "run") == run1);
  CHECK(collect_dir(dir / "ev") == ev1);
  CHECK(sp1.size() == 7);
  CHECK(run1.size() == 3);
  CHECK(ev1.size() == 2);
  fs::remove_all(dir);
}

TEST_CASE("epochs 0 writes the untouched seeded initialization") {
  const fs::path dir = make_temp_dir("cli_epoch0");
  atomic_write_file((dir / "chain.tsv").string(), "a\tb\nb\tc\n");
  REQUIRE(run_cmd(kCli + " split --edges " + (dir / "chain.tsv").string() +
                  " --out " + (dir / "sp").string() + " --seed 1")
              .code == 0);
  REQUIRE(run_cmd(kCli + " train --split " + (dir / "sp").string() +
                  " --out " + (dir / "run").string() +
                  " --geometry sphere --dim 4 --epochs 0 --seed 99")
              .code == 0);
  const EmbeddingTable got =
      parse_checkpoint(read_file((dir / "run/checkpoint.jsonl").string()));
  TrainConfig config;
  config.seed = 99;
  Rng rng(config.seed);
  const EmbeddingTable want =
      init_embeddings(Space::sphere(4), 3, config, rng);
  REQUIRE(got.disks.size() == want.disks.size());
  for (std::size_t i = 0; i < want.disks.size(); ++i) {
    CHECK(got.disks[i].radius == want.disks[i].radius);
    for (std::size_t k = 0; k < want.disks[i].center.size(); ++k) {
      CHECK(got.disks[i].center[k] == want.disks[i].center[k]);
    }
  }
  fs::remove_all(dir);
}

TEST_CASE("config file fills flags and explicit flags win") {
  const fs::path dir = make_temp_dir("cli_config");
  atomic_write_file((dir / "chain.tsv").string(), "a\tb\nb\tc\n");
  REQUIRE(run_cmd(kCli + " split --edges " + (dir / "chain.tsv").string() +
                  " --out " + (dir / "sp").string() + " --seed 1")
              .code == 0);
  atomic_write_file(
      (dir / "cfg.json").string(),
      "{\"command\":\"train\",\"geometry\":\"sphere\",\"dim\":3,"
      "\"epochs\":15,\"seed\":5,\"split\":\"" + (dir / "sp").string() +
      "\"}");
  REQUIRE(run_cmd(kCli + " train --config " + (dir / "cfg.json").string() +
                  " --out " + (dir / "run").string() + " --epochs 4")
              .code == 0);
  const nlohmann::json echoed = nlohmann::json::parse(
      read_file((dir / "run/config.json").string()));
  CHECK(echoed["geometry"] == "sphere");
  CHECK(echoed["dim"] == 3);
  CHECK(echoed["epochs"] == 4);  // the explicit flag beat the file
  CHECK(echoed["seed"] == 5);

  // echoed configs replay
  REQUIRE(run_cmd(kCli + " train --config " +
                  (dir / "run/config.json").string())
              .code == 0);

  atomic_write_file((dir / "wrong.json").string(), "{\"command\":\"eval\"}");
  CHECK(run_cmd(kCli + " train --config " + (dir / "wrong.json").string() +
                " --split " + (dir / "sp").string() + " --out " +
                (dir / "x").string())
            .code == 1);
  atomic_write_file((dir / "unknown.json").string(), "{\"trials\":3}");
  CHECK(run_cmd(kCli + " train --config " + (dir / "unknown.json").string() +
                " --split " + (dir / "sp").string() + " --out " +
                (dir / "x").string())
            .code == 1);
  fs::remove_all(dir);
}

TEST_SUITE_END();
