"""Smoke test for the pytransversal extension module."""

import json
from pathlib import Path

import pytransversal as pt

FIXTURES = Path(__file__).resolve().parents[3] / "fixtures"


def load(name):
    return (FIXTURES / name).read_text()


def main():
    p = pt.Presentation(["a", "b", "c"], [["a", "b"], ["b", "c"]])
    m = pt.TransversalMatroid(p)
    assert m.rank() == 2
    assert m.rank(["a", "c"]) == 2
    assert m.dual_rank(["b"]) == 1
    assert sorted(m.closure(["a"])) == ["a"]
    assert pt.Presentation.from_json(p.to_json()) == p

    cyc = pt.TransversalMatroid(pt.Presentation.from_json(load("petals.json")))
    transversal, kind, edges = cyc.contract_check("e")
    assert not transversal and kind == "ordinary" and len(edges) == 3
    try:
        cyc.contract("e")
    except pt.NotTransversalError:
        pass
    else:
        raise AssertionError("contraction by e should not be transversal")

    tree = pt.TransversalMatroid(pt.Presentation.from_json(load("chain.json")))
    assert tree.contract_check("e")[0]
    minor = tree.contract("e")
    assert pt.TransversalMatroid(minor).rank() == tree.rank() - 1
    assert tree.minimal_graph_dot("e").startswith("graph presenting {")
    assert tree.is_cotransversal(dual=True)

    inst = pt.PathCircular.from_json(load("path_graph.json"))
    assert inst.is_valid() and inst.violations() == []
    contracted = inst.contract("p")
    assert contracted.is_valid()
    assert contracted.labels == ["q1", "q2", "q3", "q4", "n"]
    assert len(inst.delete("q2").labels) == 5

    k4 = pt.PathCircular.bicircular(
        ["1", "2", "3", "4"],
        [("1", "2"), ("1", "3"), ("1", "4"), ("2", "3"), ("2", "4"), ("3", "4")],
    )
    assert len(k4.labels) == 6
    assert pt.PathCircular.multipath(6, [(0, 2), (1, 4)]).is_valid()
    assert pt.PathCircular.random(3).is_valid()

    report = json.loads(pt.run_selftest(seed=1, cases=20))
    assert report["failures"] == 0
    print("smoke test passed")


if __name__ == "__main__":
    main()
