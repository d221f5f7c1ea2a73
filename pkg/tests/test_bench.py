from disjoint_paths.bench import bench_one, format_human, format_tsv, parse_tsv, run_bench


def test_tsv_round_trip():
    rows = run_bench(range(6, 9), k=2, seed=1)
    assert parse_tsv(format_tsv(rows)) == rows


def test_tsv_without_timings_is_stable():
    assert format_tsv(run_bench(range(6, 8)), timings=False) == format_tsv(run_bench(range(6, 8)), timings=False)


def test_states_roughly_double():
    a = bench_one("dp_paths", 10, 2, 0)
    b = bench_one("dp_paths", 11, 2, 0)
    assert 1.5 <= b.states / a.states <= 2.6


def test_envelopes():
    for row in run_bench(range(4, 12), k=2, seed=2):
        assert row.within
        if row.solver == "dp_dcs":
            assert row.submask_iterations <= 3 ** row.n * row.k
        else:
            assert row.states <= 2 ** row.n * row.n * row.k


def test_human_table():
    text = format_human(run_bench(range(5, 6)))
    assert text.splitlines()[0].split()[0] == "solver"
    assert "BAD" not in text
