"""Smoke test for the Python bindings. Run after `pip install --no-build-isolation -e crates/py`."""

from pathlib import Path

import pytriassoc as t

DATA = Path(__file__).resolve().parents[1] / "crates" / "core" / "tests" / "data"


def main():
    assert [len(t.trees(n)) for n in range(5)] == [1, 1, 3, 11, 45]
    assert t.circ_row(3, 0) == ["⊣", "⊣", "⊢", "⊢", "⊢", "⊣", "⊥", "⊥", "⊢", "⊢", "⊥"]

    ab = t.Algebra.abelian(2)
    assert ab.is_triassociative()
    assert ab.uea_gr_dims() == [1, 12, 28] and ab.pbw_holds()

    # Unital associative algebra K viewed with all three products equal.
    scalar = t.Algebra.from_products(1, [(0, 0, 0, 1)], [(0, 0, 0, 1)], [(0, 0, 0, 1)])
    assert scalar.homology(0) == 1
    assert scalar.rigidity().rigid

    broken = t.Algebra.from_products(1, [(0, 0, 0, 1)], [], [])
    assert broken.axiom_failures(), "one-sided product should fail an axiom"

    phi2 = t.Algebra.from_text((DATA / "phi2.trias").read_text())
    assert phi2.uea_gr_dims() == [1, 10, 17] and not phi2.pbw_holds()
    assert phi2.deformation_failures("t2") == []
    assert phi2.infinitesimal("t2")[1]
    q = [phi2.cohomology(n, "chi") for n in range(3)]
    fp = t.Algebra.from_text((DATA / "phi2.trias").read_text(), field="p:1009")
    assert [fp.cohomology(n, "chi") for n in range(3)] == q

    assert t.free_slice_dims(1, 4) == [1, 3, 7, 15]
    assert all(t.free_homology(1, 4, n, w) == 0 for n in (2, 3) for w in range(n, 5))

    try:
        phi2.cohomology(9)
    except RuntimeError:
        pass
    else:
        raise AssertionError("degree beyond the limit should raise")

    print("smoke test passed:", phi2, phi2.rigidity())


if __name__ == "__main__":
    main()
