"""Smoke test for the Python bindings. Build and install first:

    pip install maturin
    cd crates/py && maturin build --release -o ../../target/wheels
    pip install ../../target/wheels/evoalg-*.whl
"""

import evoalg


def anharmonic(a):
    rows = [[0, 0, 0, 1, a], [0, 0, 0, 1, 0], [0, 0, 0, 1, 1], [0, 0, 0, 0, 1], [0] * 5]
    return evoalg.Algebra("GF 13", rows)


def main():
    chain = evoalg.Algebra("Qi", [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0]])
    assert chain.dim == 4
    assert chain.is_nilpotent()
    assert chain.type_vector() == [1, 1, 1, 1]
    assert chain.classify().startswith("d4:[1,1,1,1]")
    assert "1 -> 2;" in chain.dot()
    assert evoalg.Algebra.from_text(chain.to_text()) == chain

    a, b = anharmonic(4), anharmonic(10)
    assert a.classify() == b.classify() == "d5:[1,1,3]:v3(4)"
    w = evoalg.isomorphism(a, b)
    assert w is not None and len(w) == 5

    fan = evoalg.Algebra("Q", [[0, 0, 1], [0, 0, 1], [0, 0, 0]])
    line = evoalg.Algebra("Q", [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert fan.classify() != line.classify()
    assert evoalg.isomorphism(fan, line) is None

    f3 = evoalg.Algebra("GF 3", [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    g3 = evoalg.Algebra("GF 3", [[0, 2, 0], [0, 0, 1], [0, 0, 0]])
    assert evoalg.search_isomorphism(f3, g3) is not None

    idem = evoalg.Algebra("Q", [[1]])
    assert not idem.is_nilpotent() and idem.type_vector() is None

    assert len(evoalg.canonical_table(3, "Q")) > 0
    t = evoalg.template([1, 1, 1, 1], 1)
    assert t.type_vector() == [1, 1, 1, 1]

    try:
        evoalg.Algebra("Q", [[0, 1], [0]])
    except ValueError:
        pass
    else:
        raise AssertionError("ragged rows accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
