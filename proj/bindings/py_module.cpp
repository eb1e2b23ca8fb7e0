#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diskemb/dag.hpp"
#include "diskemb/disks.hpp"
#include "diskemb/equivalence.hpp"
#include "diskemb/eval.hpp"
#include "diskemb/geometry.hpp"
#include "diskemb/io.hpp"
#include "diskemb/model.hpp"
#include "diskemb/rng.hpp"
#include "diskemb/verify.hpp"

namespace py = pybind11;
using namespace diskemb;

PYBIND11_MODULE(_diskemb, m) {
  m.doc() = "Formal disk embeddings of DAGs in quasi-metric spaces";

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<cycle_error>(m, "CycleError", PyExc_ValueError);
  py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<io_error>(m, "IoError", PyExc_OSError);
  py::register_exception<degenerate_gradient>(m, "DegenerateGradient",
                                              PyExc_ArithmeticError);
  py::register_exception<numeric_degeneracy>(m, "NumericDegeneracy",
                                             PyExc_ArithmeticError);
  py::register_exception<undefined_angle>(m, "UndefinedAngle",
                                          PyExc_ValueError);

  py::enum_<Geometry>(m, "Geometry")
      .value("euclidean", Geometry::euclidean)
      .value("polyhedral", Geometry::polyhedral)
      .value("sphere", Geometry::sphere)
      .value("lorentz", Geometry::lorentz);

  py::enum_<Wrt>(m, "Wrt")
      .value("first", Wrt::first)
      .value("second", Wrt::second);

  py::class_<Space>(m, "Space")
      .def_static("euclidean", &Space::euclidean, py::arg("dim"))
      .def_static("polyhedral", &Space::polyhedral, py::arg("dim"),
                  py::arg("generators"))
      .def_static("polyhedral_subspace", &Space::polyhedral_subspace,
                  py::arg("dim"), py::arg("generators"))
      .def_static("sphere", &Space::sphere, py::arg("dim"))
      .def_static("lorentz", &Space::lorentz, py::arg("dim"))
      .def_property_readonly("kind", &Space::kind)
      .def_property_readonly("dim", &Space::dim)
      .def_property_readonly("generators", &Space::generators)
      .def_property_readonly("is_metric", &Space::is_metric)
      .def("__repr__", [](const Space& s) {
        return "Space(" + std::string(geometry_name(s.kind())) + ", dim=" +
               std::to_string(s.dim()) + ")";
      });

  m.def("geometry_name", &geometry_name);
  m.def("geometry_from_name", &geometry_from_name);
  m.def("distance", &distance, py::arg("space"), py::arg("x"), py::arg("y"));
  m.def("distance_grad", &distance_grad, py::arg("space"), py::arg("x"),
        py::arg("y"), py::arg("wrt"));
  m.def("exp_map", &exp_map, py::arg("space"), py::arg("x"), py::arg("v"));
  m.def("project_to_manifold", &project_to_manifold);
  m.def("tangent_project", &tangent_project);

  py::class_<FormalDisk>(m, "FormalDisk")
      .def(py::init([](Vec center, double radius) {
             return FormalDisk{std::move(center), radius};
           }),
           py::arg("center"), py::arg("radius"))
      .def_readwrite("center", &FormalDisk::center)
      .def_readwrite("radius", &FormalDisk::radius)
      .def("__repr__", [](const FormalDisk& d) {
        return "FormalDisk(dim=" + std::to_string(d.center.size()) +
               ", radius=" + std::to_string(d.radius) + ")";
      });

  m.def("protrusion", &protrusion, py::arg("space"), py::arg("a"),
        py::arg("b"));
  m.def("contains", &contains, py::arg("space"), py::arg("a"), py::arg("b"));

  py::class_<Dag>(m, "Dag")
      .def(py::init<>())
      .def_readwrite("node_names", &Dag::node_names)
      .def_readwrite("edges", &Dag::edges)
      .def("node_count", &Dag::node_count)
      .def("name_index", &Dag::name_index);

  m.def("parse_edge_list",
        [](const std::string& text) { return parse_edge_list(text); });
  m.def("format_edge_list", &format_edge_list);
  m.def("transitive_closure", &transitive_closure);
  m.def("transitive_reduction", &transitive_reduction);
  m.def("reverse", &reverse);

  py::class_<SplitParams>(m, "SplitParams")
      .def(py::init<>())
      .def_readwrite("percent_nonbasic", &SplitParams::percent_nonbasic)
      .def_readwrite("valid_count", &SplitParams::valid_count)
      .def_readwrite("test_count", &SplitParams::test_count)
      .def_readwrite("neg_ratio", &SplitParams::neg_ratio)
      .def_readwrite("seed", &SplitParams::seed);

  py::class_<DagDataset>(m, "DagDataset")
      .def(py::init<>())
      .def_readwrite("dag", &DagDataset::dag)
      .def_readwrite("closure", &DagDataset::closure)
      .def_readwrite("reduction", &DagDataset::reduction)
      .def_readwrite("train_pos", &DagDataset::train_pos)
      .def_readwrite("valid_pos", &DagDataset::valid_pos)
      .def_readwrite("valid_neg", &DagDataset::valid_neg)
      .def_readwrite("test_pos", &DagDataset::test_pos)
      .def_readwrite("test_neg", &DagDataset::test_neg)
      .def_readwrite("params", &DagDataset::params);

  m.def("split_dataset", &split_dataset, py::arg("dag"),
        py::arg("percent_nonbasic"), py::arg("valid_count"),
        py::arg("test_count"), py::arg("neg_ratio"), py::arg("seed"));

  py::class_<TrainConfig>(m, "TrainConfig")
      .def(py::init<>())
      .def_readwrite("margin", &TrainConfig::margin)
      .def_readwrite("learning_rate", &TrainConfig::learning_rate)
      .def_readwrite("center_scale", &TrainConfig::center_scale)
      .def_readwrite("radius_scale", &TrainConfig::radius_scale)
      .def_readwrite("negatives_per_positive",
                     &TrainConfig::negatives_per_positive)
      .def_readwrite("epochs", &TrainConfig::epochs)
      .def_readwrite("batch_size", &TrainConfig::batch_size)
      .def_readwrite("init_center_scale", &TrainConfig::init_center_scale)
      .def_readwrite("init_radius", &TrainConfig::init_radius)
      .def_readwrite("seed", &TrainConfig::seed)
      .def("validate", &TrainConfig::validate);

  py::class_<EpochRecord>(m, "EpochRecord")
      .def_readonly("epoch", &EpochRecord::epoch)
      .def_readonly("mean_loss", &EpochRecord::mean_loss)
      .def_readonly("has_valid", &EpochRecord::has_valid)
      .def_readonly("valid_f1", &EpochRecord::valid_f1)
      .def_readonly("tau", &EpochRecord::tau);

  py::class_<TrainReport>(m, "TrainReport")
      .def_readonly("epochs", &TrainReport::epochs)
      .def_readonly("wall_seconds", &TrainReport::wall_seconds);

  py::class_<EmbeddingTable>(m, "EmbeddingTable")
      .def(py::init([](const Space& space, std::vector<FormalDisk> disks,
                       std::vector<std::string> names) {
             return EmbeddingTable{space, std::move(disks), std::move(names)};
           }),
           py::arg("space"), py::arg("disks"), py::arg("node_names"))
      .def_readwrite("space", &EmbeddingTable::space)
      .def_readwrite("disks", &EmbeddingTable::disks)
      .def_readwrite("node_names", &EmbeddingTable::node_names);

  m.def("energy", &energy, py::arg("table"), py::arg("i"), py::arg("j"));
  m.def("pair_loss", &pair_loss, py::arg("e"), py::arg("is_positive"),
        py::arg("margin"));
  m.def("rsgd_step", &rsgd_step, py::arg("table"), py::arg("pair"),
        py::arg("is_positive"), py::arg("config"));
  m.def(
      "train",
      [](const DagDataset& dataset, const Space& space,
         const TrainConfig& config) { return train(dataset, space, config); },
      py::arg("dataset"), py::arg("space"), py::arg("config"),
      py::call_guard<py::gil_scoped_release>());

  py::class_<EvalReport>(m, "EvalReport")
      .def_readonly("split", &EvalReport::split)
      .def_readonly("tau", &EvalReport::tau)
      .def_readonly("precision", &EvalReport::precision)
      .def_readonly("recall", &EvalReport::recall)
      .def_readonly("f1", &EvalReport::f1)
      .def_readonly("tp", &EvalReport::tp)
      .def_readonly("fp", &EvalReport::fp)
      .def_readonly("tn", &EvalReport::tn)
      .def_readonly("fn", &EvalReport::fn);

  m.def("score_pairs", &score_pairs, py::arg("table"), py::arg("pairs"));
  m.def(
      "tune_threshold",
      [](const std::vector<double>& scores, const std::vector<bool>& labels) {
        return tune_threshold(scores, {labels.begin(), labels.end()});
      },
      py::arg("scores"), py::arg("labels"));
  m.def(
      "f1_at",
      [](const std::vector<double>& scores, const std::vector<bool>& labels,
         double tau) {
        return f1_at(scores, {labels.begin(), labels.end()}, tau);
      },
      py::arg("scores"), py::arg("labels"), py::arg("tau"));

  py::class_<OrderEmbeddingMap>(m, "OrderEmbeddingMap")
      .def(py::init<int, double>(), py::arg("n"), py::arg("a"))
      .def_readonly("n", &OrderEmbeddingMap::n)
      .def_readonly("a", &OrderEmbeddingMap::a)
      .def("generators", &OrderEmbeddingMap::generators)
      .def("disk_space", &OrderEmbeddingMap::disk_space);

  m.def("order_relation", &order_relation);
  m.def("phi_ord", &phi_ord, py::arg("map"), py::arg("x"));
  m.def("energy_order", &energy_order, py::arg("x"), py::arg("y"));

  py::class_<ConeParams>(m, "ConeParams")
      .def(py::init<double>(), py::arg("K"))
      .def_readonly("K", &ConeParams::K)
      .def_readonly("theta0", &ConeParams::theta0)
      .def_readonly("r_min", &ConeParams::r_min);

  m.def("cone_angles", &cone_angles, py::arg("x"), py::arg("y"),
        py::arg("params"));
  m.def("phi_hyp", &phi_hyp, py::arg("x"), py::arg("params"));
  m.def("energy_hyp_closed_form", &energy_hyp_closed_form, py::arg("a"),
        py::arg("b"), py::arg("params"));
  m.def("euclidean_cone_angle_diff", &euclidean_cone_angle_diff,
        py::arg("r_x"), py::arg("r_y"), py::arg("d"), py::arg("k"));

  m.def("format_checkpoint", &format_checkpoint);
  m.def("parse_checkpoint", &parse_checkpoint);
  m.def("format_pairs_tsv", &format_pairs_tsv, py::arg("pairs"),
        py::arg("names"));
  m.def("parse_pairs_tsv", &parse_pairs_tsv, py::arg("text"), py::arg("ids"));
  m.def("format_double", &format_double);
  m.def("write_split_dir", &write_split_dir, py::arg("dir"),
        py::arg("dataset"));
  m.def("read_split_dir", &read_split_dir, py::arg("dir"));

  py::class_<VerifyOptions>(m, "VerifyOptions")
      .def(py::init<>())
      .def_readwrite("trials", &VerifyOptions::trials)
      .def_readwrite("seed", &VerifyOptions::seed)
      .def_readwrite("cone_constant", &VerifyOptions::cone_constant)
      .def_readwrite("threads", &VerifyOptions::threads);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("max_residual", &CheckResult::max_residual)
      .def_readonly("tolerance", &CheckResult::tolerance)
      .def_readonly("passed", &CheckResult::pass)
      .def("__repr__", [](const CheckResult& r) {
        return "CheckResult(" + r.name + ", " +
               (r.pass ? "pass" : "FAIL") + ")";
      });

  m.def("run_all_checks", &run_all_checks, py::arg("options"),
        py::call_guard<py::gil_scoped_release>());
}
