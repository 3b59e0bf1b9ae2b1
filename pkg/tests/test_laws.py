import pytest

from qarrow.basis import Basis, bool_basis
from qarrow.laws import (
    LawReport,
    SeededGenerator,
    check_arrow_laws,
    check_monad_laws,
    default_bases,
    default_pool,
    first_without_dual,
    run_all,
    skipping_bind,
)
from qarrow.superop import measure


def test_monad_suite_passes_at_defaults():
    reports = check_monad_laws(SeededGenerator(42), n_cases=50, tol=1e-9)
    assert len(reports) == 3
    assert all(r.passed for r in reports)
    assert [r.name for r in reports] == [
        "monad/left-identity",
        "monad/right-identity",
        "monad/associativity",
    ]


def test_arrow_suite_passes_at_defaults():
    reports = check_arrow_laws(SeededGenerator(42), tol=1e-9)
    assert len(reports) == 9
    assert all(r.passed for r in reports)


def test_run_all_yields_twelve_reports():
    reports = run_all(seed=42, tol=1e-9)
    assert len(reports) == 12
    assert all(r.passed for r in reports)


def test_monad_cases_cover_each_basis():
    reports = check_monad_laws(SeededGenerator(1), n_cases=50, tol=1e-9)
    for report in reports:
        assert report.cases >= 50 * len(default_bases())


def test_left_identity_on_the_singleton_basis_is_exact():
    singleton = Basis(("unit",))
    reports = check_monad_laws(SeededGenerator(5), bases=[singleton], n_cases=5, tol=1e-9)
    assert reports[0].max_residual == 0.0


def test_reports_are_deterministic_in_the_seed():
    a = check_monad_laws(SeededGenerator(9), n_cases=10, tol=1e-9)
    b = check_monad_laws(SeededGenerator(9), n_cases=10, tol=1e-9)
    assert a == b
    c = check_arrow_laws(SeededGenerator(9), tol=1e-9)
    d = check_arrow_laws(SeededGenerator(9), tol=1e-9)
    assert c == d


def test_pass_flag_matches_the_residual_and_tolerance():
    for report in run_all(seed=3, tol=1e-9):
        assert report.passed == (report.max_residual <= report.tolerance)


def test_broken_bind_fails_the_identity_laws():
    reports = check_monad_laws(SeededGenerator(42), n_cases=10, tol=1e-9, bind_fn=skipping_bind)
    by_name = {r.name: r for r in reports}
    assert not by_name["monad/right-identity"].passed
    assert by_name["monad/right-identity"].max_residual > 1e-3
    assert by_name["monad/right-identity"].worst_case != "none"


def test_broken_first_fails_the_first_arr_law():
    reports = check_arrow_laws(SeededGenerator(42), tol=1e-9, first_fn=first_without_dual)
    by_name = {r.name: r for r in reports}
    assert not by_name["arrow/first-arr"].passed
    assert by_name["arrow/first-arr"].max_residual > 0.5


def test_identity_only_pool_has_exactly_zero_residuals():
    from qarrow.superop import identity_arr

    reports = check_arrow_laws(SeededGenerator(2), pool=[identity_arr(bool_basis())])
    by_name = {r.name: r for r in reports}
    assert by_name["arrow/left-identity"].max_residual == 0.0
    assert all(r.passed for r in reports)


def test_incompatible_pool_is_reported_with_the_law_name():
    with pytest.raises(ValueError, match="arrow/associativity"):
        check_arrow_laws(SeededGenerator(1), pool=[measure(bool_basis())])


def test_empty_pool_rejected():
    with pytest.raises(ValueError):
        check_arrow_laws(SeededGenerator(1), pool=[])


def test_n_cases_must_be_positive():
    with pytest.raises(ValueError):
        check_monad_laws(SeededGenerator(1), n_cases=0)


def test_default_pool_shapes():
    pool = default_pool()
    assert len(pool) == 6
    names = {op.name for op in pool}
    assert "measure(2)" in names
    assert any(name.startswith("trace_left") for name in names)


def test_generator_is_platform_stable():
    gen = SeededGenerator(1234)
    first_draw = gen.amplitudes(2)
    again = SeededGenerator(1234).amplitudes(2)
    assert (first_draw == again).all()


def test_generator_qubit_is_normalized():
    gen = SeededGenerator(7)
    from qarrow.vector import dot

    for _ in range(5):
        q = gen.qubit()
        assert abs(dot(q, q) - 1) < 1e-12


def test_report_string_mentions_status():
    report = LawReport("demo", 1, 0.0, True, 1e-9, "none")
    assert "PASS" in str(report)
