import json
import random

import pytest

from steinberg.builders import (
    all_groupoids_up_to,
    cyclic_group,
    disjoint_union,
    one_object_groupoid,
    pair_groupoid,
    random_groupoid,
    symmetric_group_3,
    transitive_groupoid,
    trivial_groupoid,
)
from steinberg.groupoid import (
    GroupoidValidationError,
    from_json_obj,
    to_json_obj,
    validate,
)
from steinberg.limits import SizeCapExceeded


def test_trivial_groupoid():
    g = trivial_groupoid("u")
    assert g.elements == ("u",)
    assert g.units() == ("u",)
    assert g.mul("u", "u") == "u"
    assert g.inv("u") == "u"


def test_pair_groupoid_structure():
    g = pair_groupoid(["a", "b", "c"])
    assert len(g) == 9
    assert set(g.units()) == {"a", "b", "c"}
    # arrows y<x run from source x to range y
    arrow = next(e for e in g.elements if g.s(e) == "a" and g.r(e) == "b")
    assert g.inv(arrow) != arrow
    assert g.s(g.inv(arrow)) == "b"
    assert g.r(g.inv(arrow)) == "a"
    assert g.mul(g.inv(arrow), arrow) == "a"
    assert g.mul(arrow, g.inv(arrow)) == "b"
    for x in g.units():
        assert g.isotropy(x).is_trivial
    assert len(g.orbit_classes()) == 1
    assert g.orbit_of("a").members == ("a", "b", "c")


def test_one_object_groupoid_is_the_group():
    g = one_object_groupoid(cyclic_group(4))
    assert len(g) == 4
    assert g.units() == ("e",)
    iso = g.isotropy("e")
    assert iso.order == 4
    assert not iso.is_trivial


def test_composability_matches_source_range():
    g = transitive_groupoid(["p", "q"], cyclic_group(2))
    for a in g.elements:
        for b in g.elements:
            assert g.composable(a, b) == (g.s(a) == g.r(b))
            if g.composable(a, b):
                ab = g.mul(a, b)
                assert g.s(ab) == g.s(b)
                assert g.r(ab) == g.r(a)
            else:
                with pytest.raises(ValueError):
                    g.mul(a, b)


def test_associativity_on_all_small_groupoids():
    for g in all_groupoids_up_to(6):
        for a in g.elements:
            for b in g.elements:
                if not g.composable(a, b):
                    continue
                for c in g.elements:
                    if not g.composable(b, c):
                        continue
                    assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))


def test_transporter_size_dichotomy():
    # |yGx| is 0 or |xGx| for every pair of units
    rng = random.Random(7)
    groupoids = [random_groupoid(rng, 14) for _ in range(30)]
    groupoids.append(transitive_groupoid(["p", "q", "r"], symmetric_group_3()))
    for g in groupoids:
        for x in g.units():
            n = g.isotropy(x).order
            for y in g.units():
                assert len(g.transporter(y, x)) in (0, n)


def test_transporter_contents():
    g = transitive_groupoid(["p", "q"], cyclic_group(2))
    cross = g.transporter("q", "p")
    assert all(g.s(a) == "p" and g.r(a) == "q" for a in cross)
    assert len(cross) == 2
    assert g.transporter("p", "p") == g.isotropy("p").members


def test_validate_rejects_bad_inverse():
    g = pair_groupoid(["a", "b"])
    inverse = dict(g.inverse_of)
    arrow = next(e for e in g.elements if g.s(e) != g.r(e))
    inverse[arrow] = arrow  # wrong: breaks gg^-1 = r(g)
    with pytest.raises(GroupoidValidationError) as exc_info:
        validate(list(g.elements), dict(g.source_of), dict(g.range_of), inverse, dict(g.compose))
    assert exc_info.value.violations


def test_validate_rejects_partial_compose():
    g = pair_groupoid(["a", "b"])
    compose = dict(g.compose)
    compose.pop(next(iter(compose)))
    with pytest.raises(GroupoidValidationError):
        validate(list(g.elements), dict(g.source_of), dict(g.range_of), dict(g.inverse_of), compose)


def test_validate_rejects_extra_compose_pair():
    g = disjoint_union(trivial_groupoid("a"), trivial_groupoid("b"))
    compose = dict(g.compose)
    compose[("a", "b")] = "a"  # not composable
    with pytest.raises(GroupoidValidationError):
        validate(list(g.elements), dict(g.source_of), dict(g.range_of), dict(g.inverse_of), compose)


def test_validate_collects_multiple_violations():
    with pytest.raises(GroupoidValidationError) as exc_info:
        validate(["x", "x"], {"x": "y"}, {"x": "x"}, {"x": "x"}, {})
    assert len(exc_info.value.violations) >= 2


def test_validate_rejects_associativity_break():
    # mangle one product of Z/3 so (g g) g2 differs from g (g g2)
    g = one_object_groupoid(cyclic_group(3))
    compose = dict(g.compose)
    compose[("g", "g")] = "g"
    with pytest.raises(GroupoidValidationError) as exc_info:
        validate(list(g.elements), dict(g.source_of), dict(g.range_of), dict(g.inverse_of), compose)
    assert any("associativity" in v for v in exc_info.value.violations)


def test_validate_empty_rejected():
    with pytest.raises(GroupoidValidationError):
        validate([], {}, {}, {}, {})


def test_size_cap():
    points = [f"p{i}" for i in range(23)]  # 23^2 = 529 > 512
    with pytest.raises(SizeCapExceeded):
        pair_groupoid(points)


def test_json_round_trip_bit_exact():
    g = transitive_groupoid(["p", "q"], cyclic_group(3))
    obj = to_json_obj(g)
    text = json.dumps(obj, sort_keys=True)
    g2 = from_json_obj(json.loads(text))
    assert to_json_obj(g2) == obj
    assert g2.elements == g.elements
    assert g2.compose == g.compose


def test_from_json_rejects_malformed():
    with pytest.raises(ValueError):
        from_json_obj({"elements": ["u"]})
    with pytest.raises(ValueError):
        from_json_obj([1, 2, 3])
    with pytest.raises(ValueError):
        from_json_obj(
            {
                "elements": ["u"],
                "source": {"u": "u"},
                "range": {"u": "u"},
                "inverse": {"u": "u"},
                "compose": [["u", "u"]],  # triple expected
            }
        )


def test_orbit_classes_of_disjoint_union():
    g = disjoint_union(pair_groupoid(["a", "b"]), trivial_groupoid("z"))
    classes = g.orbit_classes()
    assert [c.members for c in classes] == [("a", "b"), ("z",)]
    assert g.orbit_of("z").representative == "z"


def test_units_are_idempotents():
    for g in all_groupoids_up_to(6):
        for e in g.elements:
            is_idem = g.composable(e, e) and g.mul(e, e) == e
            assert is_idem == g.is_unit(e)
