"""Smoke test for the compiled `monobrick` extension.

Build and install first:
    maturin build --release -m crates/python/Cargo.toml
    pip install target/wheels/monobrick-*.whl
"""

import json

import monobrick as mb


def main():
    assert [mb.count("A", n) for n in range(1, 6)] == [2, 6, 22, 90, 394]
    assert [mb.count("B", n, workers=2) for n in range(1, 5)] == [2, 8, 38, 192]
    assert mb.schroder_count(10) == 1037718
    assert mb.b_count(6) == 5336
    assert all(mb.recurrence_check(n) for n in range(1, 10))

    diagrams = mb.enumerate("A", 3)
    assert len(diagrams) == 22 and all(d.is_monobrick() for d in diagrams)
    semis = mb.enumerate("B", 2, kind="semibrick")
    assert len(semis) == mb.central_binomial(2)

    top = mb.Diagram("A", 3, [(1, 4)])
    chain = top.cofinal_closure()
    assert chain.arcs == [(1, 2), (1, 3), (1, 4)]
    assert chain.mmax() == top
    assert chain.hasse() == [((1, 2), (1, 3)), ((1, 3), (1, 4))]
    assert chain.is_cofinally_closed() and not top.is_cofinally_closed()
    assert mb.Diagram.from_json(chain.to_json()) == chain
    assert json.loads(chain.to_json()) == {"n": 3, "algebra": "A", "arcs": [[1, 2], [1, 3], [1, 4]]}

    bad = mb.Diagram("A", 3, [(1, 3), (2, 4)])
    assert bad.monobrick_violation() == ((1, 3), (2, 4), "strictly crossing")
    try:
        bad.mmax()
    except ValueError as e:
        assert "not a monobrick" in str(e)
    else:
        raise AssertionError("expected ValueError")

    assert mb.hom_kind((1, 2), (1, 3), "A", 2) == "Injection"
    assert mb.crossing_kind((1, 3), (2, 4), 4) == "strictly crossing"

    p = mb.LinkedPartition(4, [[1, 2, 4], [2, 3]])
    d = p.to_diagram()
    assert d.arcs == [(1, 2), (1, 4), (2, 3)]
    assert mb.LinkedPartition.from_diagram(d) == p
    assert mb.LinkedPartition(4, [[1, 3], [2, 4]]).violation() == "NCL2"
    assert len(mb.enumerate_ncl(5)) == mb.schroder_count(4)

    print(mb.Diagram("A", 3, [(1, 2), (1, 4), (3, 4)]).render(), end="")

    try:
        mb.count("B", 12)
    except mb.BudgetError:
        pass
    else:
        raise AssertionError("expected BudgetError")

    for preset in ("a3_linear", "a3_source", "nak2"):
        report = mb.verify(preset)
        failed = [c for c in report["checks"] if not c[1]]
        assert report["passed"] and not failed, failed
        print(f"{preset}: {report['monobricks']} monobricks, {len(report['checks'])} checks passed")

    print("smoke test ok")


if __name__ == "__main__":
    main()
