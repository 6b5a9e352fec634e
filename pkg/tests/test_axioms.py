from pgeo.axioms import DUAL, PRIMAL, run_axiom_suite


def test_suite_small_run():
    r = run_axiom_suite(trials=100, seed=3, bound=6)
    assert r.ok
    assert sum(r.failed.values()) == 0
    names = set(r.passed)
    for base in ("C1 join incident", "C2 meet incident", "C3 unique join", "C4 three elements per carrier",
                 "C5", "C6 tightness", "C7 witness", "apartness: elements"):
        assert base in names and base + " (dual)" in names


def test_suite_is_deterministic():
    a = run_axiom_suite(trials=30, seed=7).to_dict()
    b = run_axiom_suite(trials=30, seed=7).to_dict()
    a.pop("seconds", None), b.pop("seconds", None)
    assert a == b


def test_dual_operations_swap_roles():
    assert PRIMAL.name == "primal" and DUAL.name == "dual"
