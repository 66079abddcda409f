"""Finite discrete groupoids presented by explicit composition tables.

A groupoid here is a finite set of elements with source, range and inverse
maps and a partial composition, defined for (a, b) exactly when
source(a) = range(b).  Units are the elements fixed by source and range;
every subset of a finite discrete groupoid is compact open, so no topology
is carried around.

The canonical order on elements is their declaration order.  All operations
that return lists of elements follow it, which makes every downstream
computation deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .limits import MAX_GROUPOID_ELEMENTS, SizeCapExceeded


class GroupoidValidationError(ValueError):
    """Raised with the full list of violated axioms."""

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        preview = "; ".join(self.violations[:5])
        more = "" if len(self.violations) <= 5 else f" (+{len(self.violations) - 5} more)"
        super().__init__(f"invalid groupoid: {preview}{more}")


@dataclass(frozen=True)
class IsotropyGroup:
    """The group xGx of arrows with source and range both x."""

    base_unit: str
    members: tuple[str, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def is_trivial(self) -> bool:
        return len(self.members) == 1


@dataclass(frozen=True)
class OrbitClass:
    """A class of the orbit relation: x ~ y iff some arrow runs from x to y."""

    representative: str  # least member in canonical order
    members: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.members)


class FiniteGroupoid:
    """A validated finite groupoid.  Treat instances as immutable.

    Construct through validate() or from_json_obj(); the constructor itself
    performs no axiom checking.
    """

    def __init__(
        self,
        elements: Iterable[str],
        source_of: Mapping[str, str],
        range_of: Mapping[str, str],
        inverse_of: Mapping[str, str],
        compose: Mapping[tuple[str, str], str],
    ):
        self.elements: tuple[str, ...] = tuple(elements)
        self.index: dict[str, int] = {g: i for i, g in enumerate(self.elements)}
        self.source_of = dict(source_of)
        self.range_of = dict(range_of)
        self.inverse_of = dict(inverse_of)
        self.compose = dict(compose)
        self._units: tuple[str, ...] | None = None
        self._orbits: tuple[OrbitClass, ...] | None = None

    # -- basic maps ---------------------------------------------------------

    def s(self, g: str) -> str:
        return self.source_of[g]

    def r(self, g: str) -> str:
        return self.range_of[g]

    def inv(self, g: str) -> str:
        return self.inverse_of[g]

    def composable(self, a: str, b: str) -> bool:
        return self.source_of[a] == self.range_of[b]

    def mul(self, a: str, b: str) -> str:
        try:
            return self.compose[(a, b)]
        except KeyError:
            raise ValueError(f"elements are not composable: {a!r} * {b!r}") from None

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g: str) -> bool:
        return g in self.index

    def __repr__(self):
        return f"FiniteGroupoid({len(self.elements)} elements, {len(self.units())} units)"

    # -- derived structure --------------------------------------------------

    def units(self) -> tuple[str, ...]:
        """The unit space, exactly the elements with g * inverse(g) = g."""
        if self._units is None:
            self._units = tuple(g for g in self.elements if self.range_of[g] == g)
        return self._units

    def is_unit(self, x: str) -> bool:
        if x not in self.index:
            raise KeyError(f"not an element: {x!r}")
        return self.range_of[x] == x

    def isotropy(self, x: str) -> IsotropyGroup:
        """The isotropy group at a unit x."""
        if not self.is_unit(x):
            raise ValueError(f"isotropy is defined at units only, got {x!r}")
        members = tuple(
            g for g in self.elements if self.source_of[g] == x and self.range_of[g] == x
        )
        return IsotropyGroup(base_unit=x, members=members)

    def transporter(self, y: str, x: str) -> tuple[str, ...]:
        """All arrows from x to y, i.e. {g : range(g) = y and source(g) = x}.

        Either empty or of the same size as the isotropy group at x: any
        member b identifies it with xGx via g -> b * g.
        """
        if not self.is_unit(y) or not self.is_unit(x):
            raise ValueError("transporter expects two units")
        return tuple(
            g for g in self.elements if self.range_of[g] == y and self.source_of[g] == x
        )

    def orbit_classes(self) -> tuple[OrbitClass, ...]:
        """The partition of the unit space by the orbit relation."""
        if self._orbits is not None:
            return self._orbits
        units = self.units()
        parent = {u: u for u in units}

        def find(u: str) -> str:
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        for g in self.elements:
            a, b = find(self.range_of[g]), find(self.source_of[g])
            if a != b:
                parent[a] = b
        groups: dict[str, list[str]] = {}
        for u in units:  # canonical order
            groups.setdefault(find(u), []).append(u)
        classes = [
            OrbitClass(representative=members[0], members=tuple(members))
            for members in groups.values()
        ]
        classes.sort(key=lambda c: self.index[c.representative])
        self._orbits = tuple(classes)
        return self._orbits

    def orbit_of(self, x: str) -> OrbitClass:
        for cls in self.orbit_classes():
            if x in cls.members:
                return cls
        raise ValueError(f"not a unit: {x!r}")


def validate(
    elements: Iterable[str],
    source_of: Mapping[str, str],
    range_of: Mapping[str, str],
    inverse_of: Mapping[str, str],
    compose: Mapping[tuple[str, str], str],
) -> FiniteGroupoid:
    """Check every groupoid axiom and return the validated groupoid.

    Collects all violations (with witnesses) into a single
    GroupoidValidationError rather than stopping at the first.
    """
    elements = list(elements)
    violations: list[str] = []

    if not elements:
        raise GroupoidValidationError(["the element list is empty"])
    if len(elements) > MAX_GROUPOID_ELEMENTS:
        raise SizeCapExceeded(
            f"{len(elements)} elements exceeds the cap of {MAX_GROUPOID_ELEMENTS}"
        )
    seen = set()
    for g in elements:
        if g in seen:
            violations.append(f"duplicate element id {g!r}")
        seen.add(g)

    # Structural totality first; the algebraic checks assume complete maps.
    for name, mapping in (("source", source_of), ("range", range_of), ("inverse", inverse_of)):
        for g in elements:
            if g not in mapping:
                violations.append(f"{name} map is missing element {g!r}")
        for g, v in mapping.items():
            if g not in seen:
                violations.append(f"{name} map mentions undeclared element {g!r}")
            elif v not in seen:
                violations.append(f"{name}({g!r}) = {v!r} is not a declared element")
    for (a, b), c in compose.items():
        for g in (a, b, c):
            if g not in seen:
                violations.append(f"composition entry ({a!r}, {b!r}) -> {c!r} mentions undeclared {g!r}")
                break
    if violations:
        raise GroupoidValidationError(violations)

    s, r, inv = dict(source_of), dict(range_of), dict(inverse_of)
    comp = dict(compose)

    # Composition is defined exactly on the composable pairs.
    for (a, b) in comp:
        if s[a] != r[b]:
            violations.append(f"composition declared on the non-composable pair ({a!r}, {b!r})")
    for a in elements:
        for b in elements:
            if s[a] == r[b] and (a, b) not in comp:
                violations.append(f"missing composition for the composable pair ({a!r}, {b!r})")
    if violations:
        raise GroupoidValidationError(violations)

    units_s = {g for g in elements if s[g] == g}
    units_r = {g for g in elements if r[g] == g}
    if units_s != units_r:
        for g in sorted(units_s ^ units_r, key=elements.index):
            violations.append(f"{g!r} is fixed by exactly one of source and range")
    idempotents = {g for g in elements if comp.get((g, g)) == g}
    if idempotents != units_s:
        for g in sorted(idempotents ^ units_s, key=elements.index):
            violations.append(f"{g!r} is an idempotent or a unit but not both")
    for u in units_s & units_r:
        if inv[u] != u:
            violations.append(f"unit {u!r} is not its own inverse")

    for g in elements:
        gi = inv[g]
        if inv[gi] != g:
            violations.append(f"inverse is not involutive at {g!r}")
        if comp.get((g, gi)) != r[g]:
            violations.append(f"{g!r} * inverse({g!r}) is not range({g!r})")
        if comp.get((gi, g)) != s[g]:
            violations.append(f"inverse({g!r}) * {g!r} is not source({g!r})")
        if comp.get((r[g], g)) != g:
            violations.append(f"range({g!r}) * {g!r} is not {g!r}")
        if comp.get((g, s[g])) != g:
            violations.append(f"{g!r} * source({g!r}) is not {g!r}")

    for (a, b), c in comp.items():
        if s[c] != s[b] or r[c] != r[a]:
            violations.append(f"source/range of the product ({a!r}, {b!r}) -> {c!r} are wrong")

    # Associativity over all composable triples, with witnesses.
    by_range: dict[str, list[str]] = {}
    for c in elements:
        by_range.setdefault(r[c], []).append(c)
    for (a, b), ab in comp.items():
        for c in by_range.get(s[b], ()):
            left = comp.get((ab, c))
            bc = comp[(b, c)]
            right = comp.get((a, bc))
            if left != right or left is None:
                violations.append(f"associativity fails on the triple ({a!r}, {b!r}, {c!r})")

    if violations:
        raise GroupoidValidationError(violations)
    return FiniteGroupoid(elements, s, r, inv, comp)


# -- JSON interchange -------------------------------------------------------
#
# {"elements": [...], "source": {...}, "range": {...}, "inverse": {...},
#  "compose": [[a, b, ab], ...]}
#
# Dumping a loaded groupoid reproduces the canonical document byte for byte.


def from_json_obj(obj) -> FiniteGroupoid:
    if not isinstance(obj, dict):
        raise ValueError("groupoid document must be a JSON object")
    missing = {"elements", "source", "range", "inverse", "compose"} - obj.keys()
    if missing:
        raise ValueError(f"groupoid document is missing keys: {sorted(missing)}")
    elements = obj["elements"]
    if not isinstance(elements, list) or not all(isinstance(g, str) for g in elements):
        raise ValueError("'elements' must be a list of strings")
    for key in ("source", "range", "inverse"):
        m = obj[key]
        if not isinstance(m, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in m.items()
        ):
            raise ValueError(f"'{key}' must be an object mapping ids to ids")
    compose_rows = obj["compose"]
    if not isinstance(compose_rows, list):
        raise ValueError("'compose' must be a list of [a, b, ab] triples")
    compose: dict[tuple[str, str], str] = {}
    for row in compose_rows:
        if not (isinstance(row, list) and len(row) == 3 and all(isinstance(x, str) for x in row)):
            raise ValueError(f"bad composition triple: {row!r}")
        a, b, c = row
        if (a, b) in compose:
            raise ValueError(f"duplicate composition entry for ({a!r}, {b!r})")
        compose[(a, b)] = c
    return validate(elements, obj["source"], obj["range"], obj["inverse"], compose)


def to_json_obj(g: FiniteGroupoid) -> dict:
    order = g.index
    triples = sorted(g.compose.items(), key=lambda kv: (order[kv[0][0]], order[kv[0][1]]))
    return {
        "elements": list(g.elements),
        "source": {x: g.source_of[x] for x in g.elements},
        "range": {x: g.range_of[x] for x in g.elements},
        "inverse": {x: g.inverse_of[x] for x in g.elements},
        "compose": [[a, b, c] for (a, b), c in triples],
    }
