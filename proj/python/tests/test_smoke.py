import math

import pytest

import diskemb as de


def chain_dag():
    return de.parse_edge_list("a\tb\nb\tc\nc\td\n")


def name_pairs(dag, pairs):
    names = dag.node_names
    return sorted((names[i], names[j]) for i, j in pairs)


def test_chain_trains_to_perfect_f1_at_tau_zero():
    dag = chain_dag()
    closure = de.transitive_closure(dag)
    assert len(closure) == 6

    ds = de.split_dataset(dag, 1.0, 0, 0, 10, 0)
    assert sorted(ds.train_pos) == sorted(closure)

    cfg = de.TrainConfig()
    cfg.epochs = 200
    cfg.seed = 3
    table, report = de.train(ds, de.Space.euclidean(2), cfg)
    assert len(report.epochs) == 200

    pairs = closure + [(j, i) for i, j in closure]
    scores = de.score_pairs(table, pairs)
    labels = [True] * 6 + [False] * 6
    assert de.f1_at(scores, labels, 0.0).f1 == 1.0


def test_checkpoint_round_trip_is_bitwise():
    space = de.Space.lorentz(3)
    centers = [
        de.project_to_manifold(space, [1.0, 0.3, -0.2]),
        de.project_to_manifold(space, [2.0, -1.1, 0.7]),
    ]
    table = de.EmbeddingTable(
        space,
        [de.FormalDisk(centers[0], 0.125), de.FormalDisk(centers[1], -0.3)],
        ["leaf", "root"],
    )
    text = de.format_checkpoint(table)
    back = de.parse_checkpoint(text)
    assert de.format_checkpoint(back) == text
    assert back.node_names == ["leaf", "root"]
    assert [d.center for d in back.disks] == centers
    assert [d.radius for d in back.disks] == [0.125, -0.3]


def test_split_dir_round_trip(tmp_path):
    edges = "".join(f"n{i}\tn{(i - 1) // 2}\n" for i in range(1, 15))
    dag = de.parse_edge_list(edges)
    ds = de.split_dataset(dag, 0.5, 4, 4, 5, 11)

    out = str(tmp_path / "split")
    de.write_split_dir(out, ds)
    back = de.read_split_dir(out)

    for field in ("train_pos", "closure", "reduction"):
        assert name_pairs(back.dag, getattr(back, field)) == name_pairs(
            ds.dag, getattr(ds, field)
        )
    for field in ("valid_pos", "valid_neg", "test_pos", "test_neg"):
        got = [
            (back.dag.node_names[i], back.dag.node_names[j])
            for i, j in getattr(back, field)
        ]
        want = [
            (ds.dag.node_names[i], ds.dag.node_names[j])
            for i, j in getattr(ds, field)
        ]
        assert got == want
    assert back.params.seed == ds.params.seed
    assert back.params.percent_nonbasic == ds.params.percent_nonbasic


def test_order_embedding_spot_checks():
    m = de.OrderEmbeddingMap(3, 2.0)
    space = m.disk_space()
    x = [0.2, 0.5, 0.1]
    y = [0.3, 0.9, 0.4]
    assert de.order_relation(x, y)
    assert de.contains(space, de.phi_ord(m, x), de.phi_ord(m, y))
    assert de.energy_order(x, y) == 0.0

    z = [0.25, 0.4, 0.2]
    assert not de.order_relation(x, z)
    assert not de.contains(space, de.phi_ord(m, x), de.phi_ord(m, z))
    assert de.energy_order(x, z) == pytest.approx((0.5 - 0.4) ** 2)


def test_hyperbolic_cone_spot_checks():
    params = de.ConeParams(0.1)
    assert 0.0 < params.r_min < 0.95
    x = [0.6, 0.0]
    inside = [0.8, 0.0]
    psi, xi = de.cone_angles(x, inside, params)
    assert xi == pytest.approx(0.0, abs=1e-12)
    assert xi <= psi
    assert de.energy_hyp_closed_form(
        de.phi_hyp(x, params), de.phi_hyp(inside, params), params
    ) == pytest.approx(0.0, abs=1e-12)

    outside = [-0.8, 0.0]
    psi, xi = de.cone_angles(x, outside, params)
    assert xi > psi
    assert (
        de.energy_hyp_closed_form(
            de.phi_hyp(x, params), de.phi_hyp(outside, params), params
        )
        > 0.0
    )


def test_distance_and_disks():
    sphere = de.Space.sphere(3)
    p = de.project_to_manifold(sphere, [1.0, 1.0, 0.0])
    q = de.project_to_manifold(sphere, [1.0, 0.0, 0.0])
    assert de.distance(sphere, p, q) == pytest.approx(math.pi / 4)

    flat = de.Space.euclidean(2)
    a = de.FormalDisk([0.0, 0.0], 2.0)
    b = de.FormalDisk([1.0, 0.0], 0.5)
    assert de.protrusion(flat, a, b) == pytest.approx(-0.5)
    assert de.contains(flat, a, b)
    assert not de.contains(flat, b, a)


def test_verify_checks_all_pass():
    opt = de.VerifyOptions()
    opt.trials = 25
    results = de.run_all_checks(opt)
    assert len(results) == 25
    failed = [r.name for r in results if not r.passed]
    assert failed == []


def test_exception_mapping():
    with pytest.raises(de.CycleError):
        de.transitive_closure(de.parse_edge_list("a\tb\nb\ta\n"))
    with pytest.raises(de.ParseError):
        de.parse_edge_list("justonefield\n")
    with pytest.raises(de.IoError):
        de.parse_checkpoint("")
    cfg = de.TrainConfig()
    cfg.epochs = -1
    with pytest.raises(de.ConfigError):
        cfg.validate()
