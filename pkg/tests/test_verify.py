from hyperkcut.instances import mixed_corpus
from hyperkcut.verify import Limits, run_suites


def test_all_suites_pass_on_small_corpus():
    summary = run_suites(mixed_corpus(12, 21), limits=Limits(uncross_cases=40))
    assert summary["ok"]
    for checks in summary["suites"].values():
        for name, tally in checks.items():
            assert tally["mined"] > 0, name


def test_threads_give_identical_summary():
    graphs = mixed_corpus(8, 4)
    limits = Limits(uncross_cases=30)
    assert run_suites(graphs, limits=limits, threads=3) == run_suites(graphs, limits=limits)


def test_unknown_suite_rejected():
    import pytest

    with pytest.raises(ValueError):
        run_suites([], suites=("bogus",))
