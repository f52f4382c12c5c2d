"""Smoke tests for the python extension module.

Locates the built module via CIRCPOW_CORE_DIR (set by ctest) or falls back to
an installed `circpow` package.
"""

import json
import os
import sys
from fractions import Fraction


def load_module():
    core_dir = os.environ.get("CIRCPOW_CORE_DIR")
    if core_dir:
        sys.path.insert(0, core_dir)
        import _core

        return _core
    import circpow

    return circpow


def main():
    cp = load_module()

    pet = cp.petersen()
    assert pet.order == 10 and pet.size == 15
    assert cp.are_isomorphic(cp.walk_power(pet, 3), cp.complete_graph(10))
    assert cp.are_isomorphic(cp.kneser(5, 2, 1), cp.complete_graph(10))

    c9 = cp.cycle_graph(9)
    assert cp.odd_girth(c9) == 9
    assert cp.odd_girth(cp.cycle_graph(6)) is None

    value, witness = cp.circular_chromatic_number(c9)
    assert str(value) == "9/4"
    assert cp.check_homomorphism(witness, c9, cp.circular_complete(9, 4))

    chif, cover, clique = cp.fractional_chromatic_number(c9)
    assert str(chif) == "9/4"
    assert sum(Fraction(w.num, w.den) for _, w in cover) == Fraction(9, 4)
    assert sum(Fraction(w.num, w.den) for w in clique) == Fraction(9, 4)

    assert cp.chromatic_number(cp.hajos_chain(2, 4)) == 4
    assert cp.independence_number(cp.hajos_chain(2, 4)) == 2
    assert cp.zeta(cp.hajos_chain(2, 4)) == 1
    assert str(cp.lower_parent(12, 5)) == "7/3"
    assert str(cp.mu(cp.complete_graph(4))) == "2/3"
    assert cp.multichromatic_number(c9, 2) == 5

    # Homomorphism results: map / None / Timeout exception.
    assert cp.find_homomorphism(cp.complete_graph(4), cp.complete_graph(3)) is None
    found = cp.find_homomorphism(c9, cp.circular_complete(9, 4))
    assert found is not None and len(found) == 9
    try:
        cp.find_homomorphism(
            cp.subdivide(cp.complete_graph(4), 3), cp.circular_complete(12, 5), budget=1e-9
        )
        raise AssertionError("expected Timeout")
    except cp.Timeout:
        pass

    # Walk powers that would create loops raise.
    try:
        cp.walk_power(cp.complete_graph(3), 2)
        raise AssertionError("expected LoopCreated")
    except cp.LoopCreated:
        pass

    # Graph documents round-trip through JSON.
    doc = cp.graph_to_json(pet)
    parsed = json.loads(doc)
    assert parsed["order"] == 10 and len(parsed["edges"]) == 15
    back = cp.graph_from_json(doc)
    assert back == pet

    dot = cp.to_dot(cp.hajos_chain(2, 4))
    assert "v1" in dot and "w2" in dot

    report = cp.verify_circular_power(7)
    assert report.failed() == 0 and report.inconclusive() == 0
    report = cp.verify_kneser_walk(5, 2, 5)
    assert report.all_pass()
    parsed = json.loads(cp.report_to_json(report, suite="kneser-walk"))
    assert parsed["summary"]["failed"] == 0
    assert len(parsed["records"]) == len(report.records)

    print("python smoke: ok")


if __name__ == "__main__":
    main()
