#include "diskemb/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace diskemb {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::string json_string(const std::string& s) { return json(s).dump(); }

void append_vec(std::string& out, const Vec& v) {
  out += '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_double(v[i]);
  }
  out += ']';
}

// Rebuilds the space a checkpoint was written against. The subspace variant
// of the polyhedral constructor accepts every generator set the library can
// produce (full-dimensional cones included).
Space space_from_header(const json& header) {
  const Geometry kind =
      geometry_from_name(header.at("geometry").get<std::string>());
  const int dim = header.at("dim").get<int>();
  switch (kind) {
    case Geometry::euclidean:
      return Space::euclidean(dim);
    case Geometry::sphere:
      return Space::sphere(dim);
    case Geometry::lorentz:
      return Space::lorentz(dim);
    case Geometry::polyhedral: {
      if (!header.contains("generators")) {
        throw std::invalid_argument("polyhedral header lacks generators");
      }
      return Space::polyhedral_subspace(
          dim, header.at("generators").get<std::vector<Vec>>());
    }
  }
  throw std::invalid_argument("unreachable geometry tag");
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void atomic_write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open " + tmp + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw io_error("cannot write " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw io_error("cannot rename " + tmp + " to " + path + ": " +
                   ec.message());
  }
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_checkpoint(const EmbeddingTable& table) {
  if (table.node_names.size() != table.disks.size()) {
    throw std::invalid_argument("checkpoint: table has " +
                                std::to_string(table.disks.size()) +
                                " disks but " +
                                std::to_string(table.node_names.size()) +
                                " names");
  }
  const Space& space = table.space;
  std::string out = "{\"format_version\":1,\"geometry\":";
  out += json_string(geometry_name(space.kind()));
  out += ",\"dim\":" + std::to_string(space.dim());
  out += ",\"node_count\":" + std::to_string(table.disks.size());
  if (space.kind() == Geometry::polyhedral) {
    out += ",\"generators\":[";
    for (std::size_t i = 0; i < space.generators().size(); ++i) {
      if (i) out += ',';
      append_vec(out, space.generators()[i]);
    }
    out += ']';
  }
  out += "}\n";
  for (std::size_t i = 0; i < table.disks.size(); ++i) {
    out += "{\"name\":" + json_string(table.node_names[i]);
    out += ",\"radius\":" + format_double(table.disks[i].radius);
    out += ",\"center\":";
    append_vec(out, table.disks[i].center);
    out += "}\n";
  }
  return out;
}

EmbeddingTable parse_checkpoint(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) {
    throw io_error("checkpoint: empty file (no format_version header)");
  }
  const json header = json::parse(lines[0], nullptr, false);
  if (header.is_discarded() || !header.is_object() ||
      !header.contains("format_version")) {
    throw io_error("checkpoint: corrupt header (missing format_version)");
  }
  if (header["format_version"] != 1) {
    throw io_error("checkpoint: unsupported format_version " +
                   header["format_version"].dump());
  }
  std::size_t node_count = 0;
  EmbeddingTable table{Space::euclidean(1), {}, {}};
  try {
    table.space = space_from_header(header);
    node_count = header.at("node_count").get<std::size_t>();
  } catch (const std::exception& e) {
    throw io_error(std::string("checkpoint: bad header: ") + e.what());
  }
  if (lines.size() != node_count + 1) {
    throw io_error("checkpoint: header says " + std::to_string(node_count) +
                   " nodes but file has " + std::to_string(lines.size() - 1) +
                   " records");
  }
  table.disks.reserve(node_count);
  table.node_names.reserve(node_count);
  std::unordered_map<std::string, int> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const json rec = json::parse(lines[i], nullptr, false);
    if (rec.is_discarded() || !rec.is_object()) {
      throw io_error("checkpoint line " + std::to_string(i + 1) +
                     ": not a JSON object");
    }
    try {
      std::string name = rec.at("name").get<std::string>();
      const double radius = rec.at("radius").get<double>();
      Vec center = rec.at("center").get<Vec>();
      table.space.check_point(center);
      if (!std::isfinite(radius)) {
        throw std::invalid_argument("non-finite radius");
      }
      if (!seen.emplace(name, 1).second) {
        throw std::invalid_argument("duplicate node name \"" + name + "\"");
      }
      table.node_names.push_back(std::move(name));
      table.disks.push_back({std::move(center), radius});
    } catch (const std::exception& e) {
      throw io_error("checkpoint line " + std::to_string(i + 1) + ": " +
                     e.what());
    }
  }
  return table;
}

std::string format_pairs_tsv(const std::vector<Pair>& pairs,
                             const std::vector<std::string>& names) {
  std::string out;
  for (const Pair& p : pairs) {
    out += names.at(static_cast<std::size_t>(p.first));
    out += '\t';
    out += names.at(static_cast<std::size_t>(p.second));
    out += '\n';
  }
  return out;
}

std::vector<Pair> parse_pairs_tsv(
    const std::string& text,
    const std::unordered_map<std::string, int>& ids) {
  std::vector<Pair> pairs;
  std::size_t lineno = 0;
  for (const std::string& line : split_lines(text)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw io_error("pair list line " + std::to_string(lineno) +
                     ": expected exactly two tab-separated fields");
    }
    const std::string a = line.substr(0, tab);
    const std::string b = line.substr(tab + 1);
    const auto ia = ids.find(a);
    const auto ib = ids.find(b);
    if (ia == ids.end()) {
      throw io_error("pair list line " + std::to_string(lineno) +
                     ": unknown node \"" + a + "\"");
    }
    if (ib == ids.end()) {
      throw io_error("pair list line " + std::to_string(lineno) +
                     ": unknown node \"" + b + "\"");
    }
    pairs.emplace_back(ia->second, ib->second);
  }
  return pairs;
}

void write_split_dir(const std::string& dir, const DagDataset& ds) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw io_error("cannot create directory " + dir + ": " + ec.message());
  }
  const auto& names = ds.dag.node_names;
  atomic_write_file(dir + "/train.tsv", format_pairs_tsv(ds.train_pos, names));
  atomic_write_file(dir + "/valid_pos.tsv",
                    format_pairs_tsv(ds.valid_pos, names));
  atomic_write_file(dir + "/valid_neg.tsv",
                    format_pairs_tsv(ds.valid_neg, names));
  atomic_write_file(dir + "/test_pos.tsv", format_pairs_tsv(ds.test_pos, names));
  atomic_write_file(dir + "/test_neg.tsv", format_pairs_tsv(ds.test_neg, names));
  const ordered_json meta{
      {"percent_nonbasic", ds.params.percent_nonbasic},
      {"valid_count", ds.params.valid_count},
      {"test_count", ds.params.test_count},
      {"neg_ratio", ds.params.neg_ratio},
      {"seed", ds.params.seed},
      {"counts",
       ordered_json{{"nodes", ds.dag.node_count()},
                    {"edges", ds.dag.edges.size()},
                    {"closure", ds.closure.size()},
                    {"reduction", ds.reduction.size()},
                    {"train_pos", ds.train_pos.size()},
                    {"valid_pos", ds.valid_pos.size()},
                    {"valid_neg", ds.valid_neg.size()},
                    {"test_pos", ds.test_pos.size()},
                    {"test_neg", ds.test_neg.size()}}}};
  atomic_write_file(dir + "/split.json", meta.dump(2) + "\n");
}

DagDataset read_split_dir(const std::string& dir) {
  DagDataset ds;
  ds.dag = parse_edge_list(read_file(dir + "/train.tsv"));
  ds.train_pos = ds.dag.edges;
  // train_pos contains the reduction, so its closure (and therefore the
  // reduction) matches the graph the split was cut from; negative sampling
  // keeps rejecting against the full closure.
  ds.closure = transitive_closure(ds.dag);
  ds.reduction = transitive_reduction(ds.dag);
  const auto ids = ds.dag.name_index();
  ds.valid_pos = parse_pairs_tsv(read_file(dir + "/valid_pos.tsv"), ids);
  ds.valid_neg = parse_pairs_tsv(read_file(dir + "/valid_neg.tsv"), ids);
  ds.test_pos = parse_pairs_tsv(read_file(dir + "/test_pos.tsv"), ids);
  ds.test_neg = parse_pairs_tsv(read_file(dir + "/test_neg.tsv"), ids);
  const json meta = json::parse(read_file(dir + "/split.json"), nullptr, false);
  if (meta.is_discarded() || !meta.is_object()) {
    throw io_error(dir + "/split.json is not a JSON object");
  }
  ds.params.percent_nonbasic = meta.value("percent_nonbasic", 0.0);
  ds.params.valid_count = meta.value("valid_count", 0);
  ds.params.test_count = meta.value("test_count", 0);
  ds.params.neg_ratio = meta.value("neg_ratio", 10);
  ds.params.seed = meta.value("seed", std::uint64_t{0});
  return ds;
}

std::string format_metrics_csv(const TrainReport& report) {
  std::string out = "epoch,mean_loss,valid_f1,tau\n";
  for (const EpochRecord& rec : report.epochs) {
    out += std::to_string(rec.epoch);
    out += ',';
    out += format_double(rec.mean_loss);
    out += ',';
    if (rec.has_valid) {
      out += format_double(rec.valid_f1);
      out += ',';
      out += format_double(rec.tau);
    } else {
      out += ',';
    }
    out += '\n';
  }
  return out;
}

std::string format_report_csv(const std::vector<EvalReport>& reports) {
  std::string out = "split,tau,precision,recall,f1,tp,fp,tn,fn\n";
  for (const EvalReport& r : reports) {
    out += r.split;
    out += ',' ;
    out += format_double(r.tau);
    out += ',';
    out += format_double(r.precision);
    out += ',';
    out += format_double(r.recall);
    out += ',';
    out += format_double(r.f1);
    out += ',';
    out += std::to_string(r.tp);
    out += ',';
    out += std::to_string(r.fp);
    out += ',';
    out += std::to_string(r.tn);
    out += ',';
    out += std::to_string(r.fn);
    out += '\n';
  }
  return out;
}

std::string format_report_json(const EvalReport& r) {
  std::string out = "{\"split\":" + json_string(r.split);
  out += ",\"tau\":" + format_double(r.tau);
  out += ",\"precision\":" + format_double(r.precision);
  out += ",\"recall\":" + format_double(r.recall);
  out += ",\"f1\":" + format_double(r.f1);
  out += ",\"tp\":" + std::to_string(r.tp);
  out += ",\"fp\":" + std::to_string(r.fp);
  out += ",\"tn\":" + std::to_string(r.tn);
  out += ",\"fn\":" + std::to_string(r.fn);
  out += '}';
  return out;
}

}  // namespace diskemb
