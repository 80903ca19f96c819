"""Smoke test for the specgraph extension module.

Build and install first:
    pip install maturin
    maturin build --release -m crates/python/Cargo.toml
    pip install target/wheels/specgraph-*.whl
"""

import json

import specgraph


def main() -> None:
    cone = specgraph.Ideal(["x", "y", "z", "w"], "(x*z, x*w, y*z, y*w)")
    assert cone.minimal_primes() == [["x", "y"], ["z", "w"]]
    assert (cone.height(), cone.dim()) == (2, 2)
    assert cone.hc_verdict() == ("H^2_I(R) is decomposable", "false")
    assert [str(p) for p in cone.split_hc()] == ["(x, y)", "(z, w)"]
    assert specgraph.prime_graph("def61", cone)["status"] == "disconnected"
    assert specgraph.prime_graph("punctured", cone)["status"] == "disconnected"

    bridge = specgraph.Ideal(["x", "y", "z"], "(y, x*z)")
    graph = specgraph.prime_graph("def61", bridge)
    assert graph["edges"] == [(0, 1)] and graph["status"] == "connected"

    j = specgraph.Ideal(["x", "y"], "(x*y)")
    i = specgraph.Ideal(["x", "y"], "(x, y)")
    off = specgraph.prime_graph("def51", i, quotient=j)
    assert off["status"] == "disconnected"
    assert str(specgraph.Ideal(["x", "y"], "(x)").u_ideal(j)) == "(x)"
    assert str(i & j) == "(x*y)" and (i + j) == i

    sr = specgraph.stanley_reisner(["a", "b", "c", "d"], [["a", "b", "c"], ["b", "c", "d"]])
    assert str(sr) == "(a*d)"

    doc = json.dumps({"variables": ["x", "y"], "J": "(x*y)", "I": "(x, y)"})
    report = json.loads(specgraph.analyze(doc))
    assert report["schema"] == specgraph.SCHEMA
    assert all(agree for _, agree, _ in specgraph.verify(doc))

    try:
        specgraph.Ideal(["x"], "(x*q)")
    except specgraph.InputError as e:
        assert "position" in str(e)
    else:
        raise AssertionError("undeclared variable accepted")
    try:
        specgraph.Ideal([f"v{k}" for k in range(65)], "(v0)")
    except specgraph.CapacityError:
        pass
    else:
        raise AssertionError("65 variables accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
