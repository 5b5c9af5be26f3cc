import pytest

from phisystems.sweep import (
    CSV_HEADER,
    RangeReport,
    SweepOptions,
    emit_counts,
    emit_report,
    run_sweep,
)


def test_binary_sweep_example(table):
    report = run_sweep("binary", 2, 1000, table=table)
    assert report.failures == ()
    assert report.checked == 999
    assert report.per_n[0] == (2, 1, 0)


def test_bertrand_single_n_example(table):
    report = run_sweep("bertrand", 4, 4, table=table)
    assert report.per_n == ((4, 1, 1),)
    assert report.failures == ()


def test_ternary_single_n_example(table):
    report = run_sweep("ternary", 7, 7, table=table)
    assert report.per_n == ((7, 1, (5, 0)),)


def test_csv_header_and_row(table):
    report = run_sweep("binary", 2, 10, table=table)
    lines = emit_report(report, "csv").decode().splitlines()
    assert lines[0] == CSV_HEADER
    assert lines[4] == "5,2,0"  # n=5: two splits, first at x=0


def test_ternary_csv_pair_cell(table):
    report = run_sweep("ternary", 7, 9, table=table)
    lines = emit_report(report, "csv").decode().splitlines()
    assert lines[1] == "7,1,5:0"


def test_json_round_trip(table):
    report = run_sweep("ternary", 7, 99, table=table)
    again = RangeReport.from_json(emit_report(report, "json"))
    assert again == report


def test_json_excludes_timing(table):
    report = run_sweep("binary", 2, 50, table=table)
    assert report.elapsed > 0
    assert b"elapsed" not in emit_report(report, "json")
    assert b"elapsed" not in emit_report(report, "csv")


def test_counts_identical_across_formats(table):
    report = run_sweep("binary", 2, 60, table=table)
    csv_counts = [
        int(line.split(",")[1])
        for line in emit_report(report, "csv").decode().splitlines()[1:]
    ]
    json_counts = [c for _, c, _ in RangeReport.from_json(emit_report(report, "json")).per_n]
    assert csv_counts == json_counts == [c for _, c, _ in report.per_n]


def test_emit_counts(table):
    report = run_sweep("binary", 2, 6, table=table)
    assert emit_counts(report).decode().splitlines() == [
        "n,witness_count",
        "2,1",
        "3,1",
        "4,1",
        "5,2",
        "6,1",
    ]


def test_deterministic_across_worker_counts(table):
    lo, hi = 2, 2000
    serial = run_sweep("binary", lo, hi, SweepOptions(threads=1), table=table)
    pooled = run_sweep(
        "binary", lo, hi, SweepOptions(threads=4, chunk_size=128), table=table
    )
    assert emit_report(serial, "json") == emit_report(pooled, "json")
    assert emit_report(serial, "csv") == emit_report(pooled, "csv")


def test_domain_filtering(table):
    report = run_sweep("ternary", 2, 11, table=table)
    assert [n for n, _, _ in report.per_n] == [7, 9, 11]
    report = run_sweep("bertrand", 0, 5, table=table)
    assert [n for n, _, _ in report.per_n] == [4, 5]
    # via-fermat needs n > 3
    report = run_sweep("binary", 2, 6, SweepOptions(via_fermat=True), table=table)
    assert [n for n, _, _ in report.per_n] == [4, 5, 6]


def test_via_fermat_matches_sieve_route(table):
    direct = run_sweep("binary", 4, 300, table=table)
    fermat = run_sweep("binary", 4, 300, SweepOptions(via_fermat=True), table=table)
    assert [r for r in fermat.per_n] == [r for r in direct.per_n]


def test_first_witness_mode(table):
    full = run_sweep("peculiar", 7, 301, table=table)
    quick = run_sweep("peculiar", 7, 301, SweepOptions(first_witness_only=True), table=table)
    assert quick.failures == full.failures == ()
    assert all(c == 1 for _, c, _ in quick.per_n)
    assert [(n, fw) for n, _, fw in quick.per_n] == [(n, fw) for n, _, fw in full.per_n]


@pytest.mark.parametrize(
    "task,lo,hi",
    [
        ("certify", 2, 120),
        ("bertrand", 4, 80),
        ("binary", 2, 80),
        ("ternary", 7, 81),
        ("peculiar", 7, 81),
        ("proposition", 7, 81),
    ],
)
def test_verify_against_oracle_smoke(task, lo, hi):
    options = SweepOptions(verify_against_oracle=True)
    report = run_sweep(task, lo, hi, options)
    assert report.failures == ()
    assert all(c >= 1 for _, c, _ in report.per_n)


def test_certify_rows(table):
    report = run_sweep("certify", 2, 12, table=table)
    fws = {n: fw for n, _, fw in report.per_n}
    assert fws[7] == "Prime" and fws[12] == "Composite"
    assert report.failures == ()


def test_rejects_bad_arguments(table):
    with pytest.raises(ValueError):
        run_sweep("unknown", 2, 10, table=table)
    with pytest.raises(ValueError):
        run_sweep("binary", 10, 2, table=table)
    with pytest.raises(ValueError):
        run_sweep("binary", -3, 10, table=table)
    with pytest.raises(ValueError):
        run_sweep("binary", 2, table.limit, table=table)  # table too small
    with pytest.raises(ValueError):
        emit_report(run_sweep("binary", 2, 4, table=table), "xml")


def test_failure_invariants(table):
    report = run_sweep("binary", 2, 400, table=table)
    assert all(lo_n >= 1 for _, lo_n, _ in report.per_n)
    assert set(report.failures) <= {n for n, _, _ in report.per_n}
