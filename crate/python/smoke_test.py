"""Smoke test for the ordkit Python module.

Build and install it first:

    pip install --no-build-isolation -e crates/python
"""

import ordkit


def main():
    x = ordkit.StrictRel(["a", "b", "c"], [("a", "b")])
    profile = x.classify()
    assert profile["cotransitivity"] == ["a", "b", "c"], profile
    assert profile["positive antisymmetry"] is None
    assert x.is_generalized_ordered() and not x.is_ordered_set()
    assert x.compare_weak_orders()["leq_n_within_leq_p"] == ["b", "c"]
    assert x.leq_p()[1][2] is False

    assert ordkit.StrictRel.from_json(x.to_json()) == x
    assert x.dual().dual() == x
    assert x.to_poset().matrix()[0] == [True, True, True]

    try:
        ordkit.StrictRel(["a", "b", "c"], [("a", "c")], equal=[("a", "b")])
    except ValueError as e:
        assert "not well defined" in str(e)
    else:
        raise AssertionError("ill-defined relation accepted")

    two = ordkit.StrictRel.chain(2)
    four = ordkit.lex_product(two, two)
    assert len(four) == 4 and four.is_ordered_set()
    assert four.elements == ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]
    assert ordkit.lex_product_n([two, two, two]).elements[-1] == "(1,1,1)"
    assert ordkit.weak_lex_product(two, two) == four
    assert ordkit.coarse(two, x, side="left").is_ordered_set()

    diamond = ordkit.PosetRel(["0", "1"], [("0", "0"), ("1", "1")])
    assert diamond.star_condition() == ["0", "1"]
    assert diamond.to_strict().classify()["positive antisymmetry"] == ["0", "1"]
    assert isinstance(ordkit.parse_relation(diamond.to_json()), ordkit.PosetRel)

    f = ordkit.Sequence(two, [], "0")
    g = ordkit.Sequence(two, ["0", "0", "1"], "1")
    assert f.compare(g) == ("less", 2)
    assert str(ordkit.Sequence(two, ["0", "1", "1"], "1").normalized()) == "[0](1)"

    summary = ordkit.enumerate(2)
    assert summary["total_relations"] == 16
    assert summary["generalized_ordered_count"] == 2
    assert summary["ordered_set_count"] == 2
    assert summary["theorem_violations"] == []

    reports = ordkit.gallery()
    assert len(reports) == 11 and all(r["consistent"] for r in reports)
    assert set(ordkit.GALLERY_NAMES) == {r["instance_name"] for r in reports}
    assert ordkit.setoid_classes(["a", "b", "c"], [("c", "a")]) == [["a", "c"], ["b"]]

    print("ok")


if __name__ == "__main__":
    main()
