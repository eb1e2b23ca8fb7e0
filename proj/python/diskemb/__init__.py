"""Formal disk embeddings of DAGs in quasi-metric spaces."""

from ._diskemb import (
    CheckResult,
    ConeParams,
    ConfigError,
    CycleError,
    Dag,
    DagDataset,
    DegenerateGradient,
    EmbeddingTable,
    EpochRecord,
    EvalReport,
    FormalDisk,
    Geometry,
    IoError,
    NumericDegeneracy,
    OrderEmbeddingMap,
    ParseError,
    Space,
    SplitParams,
    TrainConfig,
    TrainReport,
    UndefinedAngle,
    VerifyOptions,
    Wrt,
    cone_angles,
    contains,
    distance,
    distance_grad,
    energy,
    energy_hyp_closed_form,
    energy_order,
    euclidean_cone_angle_diff,
    exp_map,
    f1_at,
    format_checkpoint,
    format_double,
    format_edge_list,
    format_pairs_tsv,
    geometry_from_name,
    geometry_name,
    order_relation,
    pair_loss,
    parse_checkpoint,
    parse_edge_list,
    parse_pairs_tsv,
    phi_hyp,
    phi_ord,
    project_to_manifold,
    protrusion,
    read_split_dir,
    reverse,
    rsgd_step,
    run_all_checks,
    score_pairs,
    split_dataset,
    tangent_project,
    train,
    transitive_closure,
    transitive_reduction,
    tune_threshold,
    write_split_dir,
)

__all__ = [name for name in dir() if not name.startswith("_")]
