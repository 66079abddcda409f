"""Minimal left ideals and the socle of a finite groupoid convolution algebra.

The engine is built on one dichotomy.  Fix a unit x with isotropy group
xGx = {a_1, ..., a_n}.  The left ideal generated by t = 1_{a_1} + ... + 1_{a_n}
is minimal, and the character of the generator splits by the field:

* char(K) does not divide n: e = (1/n) t is an idempotent and the corner
  e A e is a division algebra ("division_idempotent" flavour);
* char(K) divides n: t * t = n t = 0, t is an absolute zero divisor
  (t A t = 0) and the ideal squares to zero ("absolute_zero_divisor" flavour).

Socle assembly only sees the semisimple part.  A unit x contributes 1_x to
the socle exactly when its isotropy is trivial, and then the two-sided ideal
(1_x) splits as the direct sum of the left ideals A 1_y over the orbit of x,
each of dimension equal to the orbit size, so the component is a full matrix
algebra of that size.  The engine refuses to assemble a socle unless every
unit has trivial isotropy (condition (LP) specialised to finite groupoids);
one violator is enough to make the refusal explicit rather than silent.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .algebra import AlgebraElement, SteinbergAlgebra, element_to_obj
from .fields import PrimeField, Rationals
from .groupoid import FiniteGroupoid, OrbitClass
from .limits import SizeCapExceeded, check_enum_size
from .linalg import EchelonBasis

DIVISION_IDEMPOTENT = "division_idempotent"
ABSOLUTE_ZERO_DIVISOR = "absolute_zero_divisor"


@dataclass
class LeftIdeal:
    """A subspace of the algebra closed under left multiplication.

    The basis is the canonical reduced echelon basis of the subspace, so two
    ideals are equal as subspaces iff their canonical matrices coincide.
    """

    algebra: SteinbergAlgebra
    generators: tuple[AlgebraElement, ...]
    basis: tuple[AlgebraElement, ...]
    dimension: int
    two_sided: bool = False

    def basis_vectors(self) -> list[list]:
        return [b.to_vector() for b in self.basis]

    def canonical_matrix(self) -> tuple[tuple, ...]:
        return tuple(tuple(v) for v in self.basis_vectors())

    def echelon(self) -> EchelonBasis:
        basis = EchelonBasis(self.algebra.field, self.algebra.dim)
        basis.extend(self.basis_vectors())
        return basis

    def contains(self, f: AlgebraElement) -> bool:
        return self.echelon().contains(f.to_vector())

    def same_subspace(self, other: "LeftIdeal") -> bool:
        return self.canonical_matrix() == other.canonical_matrix()

    def __repr__(self):
        kind = "TwoSidedIdeal" if self.two_sided else "LeftIdeal"
        return f"{kind}(dim {self.dimension} of {self.algebra.dim})"


def _closure(
    algebra: SteinbergAlgebra, seeds: Iterable[list], two_sided: bool
) -> EchelonBasis:
    """Saturate the span of the seeds under multiplication by all basis
    indicators (left only, or both sides).  Rows already in the span reduce
    to zero and are dropped, so the loop adds at most dim(A) rows."""
    basis = EchelonBasis(algebra.field, algebra.dim)
    pending = [list(v) for v in seeds if basis.insert(v)]
    n = algebra.dim
    while pending:
        vec = pending.pop()
        for g in range(n):
            image = algebra.left_action(g, vec)
            if basis.insert(image):
                pending.append(image)
            if two_sided:
                image = algebra.right_action(g, vec)
                if basis.insert(image):
                    pending.append(image)
    return basis


def _ideal_from_echelon(
    algebra: SteinbergAlgebra,
    generators: tuple[AlgebraElement, ...],
    basis: EchelonBasis,
    two_sided: bool,
) -> LeftIdeal:
    return LeftIdeal(
        algebra=algebra,
        generators=generators,
        basis=tuple(algebra.from_vector(row) for row in basis.rows),
        dimension=basis.dim,
        two_sided=two_sided,
    )


def left_ideal(algebra: SteinbergAlgebra, generators: list[AlgebraElement]) -> LeftIdeal:
    """The left ideal generated by the given elements.

    Local units put every generator inside A * generator, so the span of the
    products 1_g * generator already contains the generators themselves.
    """
    if not generators:
        raise ValueError("empty generator list")
    if all(f.is_zero() for f in generators):
        raise ValueError("all generators are zero")
    basis = _closure(algebra, (f.to_vector() for f in generators), two_sided=False)
    return _ideal_from_echelon(algebra, tuple(generators), basis, two_sided=False)


def two_sided_ideal(algebra: SteinbergAlgebra, generators: list[AlgebraElement]) -> LeftIdeal:
    if not generators:
        raise ValueError("empty generator list")
    if all(f.is_zero() for f in generators):
        raise ValueError("all generators are zero")
    basis = _closure(algebra, (f.to_vector() for f in generators), two_sided=True)
    return _ideal_from_echelon(algebra, tuple(generators), basis, two_sided=True)


# -- minimal ideal certificates ------------------------------------------------


@dataclass
class MinimalIdealCertificate:
    """A generator of a minimal left ideal attached to a unit.

    The generator is the isotropy sum (scaled to an idempotent when the
    characteristic allows), and `flavour` records which side of the
    dichotomy applies.  Verification is by direct convolution.
    """

    unit: str
    isotropy_order: int
    flavour: str
    generator: AlgebraElement

    def to_json_obj(self) -> dict:
        return {
            "schema": 1,
            "unit": self.unit,
            "isotropy_order": self.isotropy_order,
            "flavour": self.flavour,
            "generator": element_to_obj(self.generator),
        }


def minimal_ideal_generator(algebra: SteinbergAlgebra, x: str) -> MinimalIdealCertificate:
    gpd = algebra.groupoid
    if not gpd.is_unit(x):
        raise ValueError(f"minimal ideal generators are attached to units, got {x!r}")
    field = algebra.field
    members = gpd.isotropy(x).members
    n = len(members)
    isotropy_sum = algebra.element({g: field.one for g in members})
    n_in_field = field.from_integer(n)
    if not field.is_zero(n_in_field):
        generator = isotropy_sum.scale(field.invert(n_in_field))
        flavour = DIVISION_IDEMPOTENT
        if generator * generator != generator:
            raise RuntimeError(f"idempotency check failed at unit {x!r}")
    else:
        generator = isotropy_sum
        flavour = ABSOLUTE_ZERO_DIVISOR
        if not (generator * generator).is_zero():
            raise RuntimeError(f"square-zero check failed at unit {x!r}")
    return MinimalIdealCertificate(
        unit=x, isotropy_order=n, flavour=flavour, generator=generator
    )


def normalize_generator(b: AlgebraElement) -> AlgebraElement:
    """Left-translate b so that a unit carries a nonzero coefficient.

    With g0 the least support element, a = 1_{inverse(g0)} * b satisfies
    a(source(g0)) = b(g0) != 0, and a stays inside every left ideal
    containing b.
    """
    if b.is_zero():
        raise ValueError("cannot normalise the zero element")
    algebra = b.algebra
    g0 = b.support()[0]
    return algebra.basis_element(algebra.groupoid.inv(g0)) * b


def corner_compress(a: AlgebraElement, x: str) -> AlgebraElement:
    """1_x * a * 1_x for a unit x in the support of a.

    Compression by the local unit is a module isomorphism onto the corner
    ideal, so minimality questions can be answered inside 1_x A 1_x.  A zero
    result means x was not usable and is reported as an error.
    """
    algebra = a.algebra
    compressed = algebra.corner(a, x)
    if compressed.is_zero():
        raise ValueError(f"corner compression at {x!r} is zero")
    return compressed


# -- minimality tests -----------------------------------------------------------


@dataclass
class MinimalityReport:
    minimal: bool
    method: str
    dimension: int
    witness: AlgebraElement | None = None
    shadow_prime: int | None = None

    def __bool__(self) -> bool:
        return self.minimal


def _spin_dim(algebra: SteinbergAlgebra, vec: list) -> int:
    """dim A*v.  The products 1_g * v span the whole of A*v + K*v."""
    basis = EchelonBasis(algebra.field, algebra.dim)
    for g in range(algebra.dim):
        basis.insert(algebra.left_action(g, vec))
    return basis.dim


def _combo(field, basis_vectors: list[list], coeffs: tuple[int, ...]) -> list:
    width = len(basis_vectors[0])
    out = [field.zero] * width
    for c, row in zip(coeffs, basis_vectors):
        if c:
            scalar = field.from_integer(c)
            out = [field.add(a, field.mul(scalar, b)) for a, b in zip(out, row)]
    return out


def is_minimal_left_ideal(
    ideal: LeftIdeal,
    certificate: MinimalIdealCertificate | None = None,
    max_enum: int | None = None,
) -> MinimalityReport:
    """Decide whether a left ideal is minimal.

    Over GF(q) the test is assumption free: every one of the q^dim - 1
    nonzero vectors of the ideal must generate the whole ideal (subject to
    the enumeration cap).  Over the rationals the decision is restricted to
    certificate-generated ideals; it checks that every vector of the
    multiplicative spanning set generates the full ideal and then repeats
    the exhaustive test on a prime-field shadow of the same groupoid, with
    the shadow prime chosen not to divide the groupoid order.  The report
    records which route decided and the shadow prime used.
    """
    algebra = ideal.algebra
    if ideal.dimension == 0:
        raise ValueError("the zero ideal is not eligible for the minimality test")
    field = algebra.field

    if isinstance(field, PrimeField):
        q = field.p
        check_enum_size(q, ideal.dimension, max_enum)
        rows = ideal.basis_vectors()
        for coeffs in product(range(q), repeat=ideal.dimension):
            if not any(coeffs):
                continue
            vec = _combo(field, rows, coeffs)
            if _spin_dim(algebra, vec) != ideal.dimension:
                return MinimalityReport(
                    minimal=False,
                    method=f"exhaustive over GF({q})",
                    dimension=ideal.dimension,
                    witness=algebra.from_vector(vec),
                )
        return MinimalityReport(
            minimal=True, method=f"exhaustive over GF({q})", dimension=ideal.dimension
        )

    if certificate is None:
        raise ValueError(
            "over the rationals minimality is decided only for certificate-generated ideals"
        )
    if not ideal.contains(certificate.generator):
        raise ValueError("the certificate generator does not lie in the ideal")
    if ideal.dimension > 12:
        raise SizeCapExceeded(
            f"characteristic-zero minimality test is capped at dimension 12, got {ideal.dimension}"
        )

    # Spanning set closed under left multiplication by basis indicators.
    gen_vec = certificate.generator.to_vector()
    spanning = [gen_vec] + [
        algebra.left_action(g, gen_vec) for g in range(algebra.dim)
    ]
    for vec in spanning:
        if all(field.is_zero(c) for c in vec):
            continue
        if _spin_dim(algebra, vec) != ideal.dimension:
            return MinimalityReport(
                minimal=False,
                method="certified construction",
                dimension=ideal.dimension,
                witness=algebra.from_vector(vec),
            )

    shadow_prime = _shadow_prime(algebra.groupoid, ideal.dimension, max_enum)
    shadow_algebra = SteinbergAlgebra(algebra.groupoid, PrimeField(shadow_prime))
    members = algebra.groupoid.isotropy(certificate.unit).members
    shadow_gen = shadow_algebra.element({g: 1 for g in members})
    shadow_ideal = left_ideal(shadow_algebra, [shadow_gen])
    shadow = is_minimal_left_ideal(shadow_ideal, max_enum=max_enum)
    witness = None
    if not shadow.minimal and shadow.witness is not None:
        witness = algebra.element(
            {g: c for g, c in shadow.witness.coeffs.items()}
        )
    return MinimalityReport(
        minimal=shadow.minimal,
        method=f"certified construction with GF({shadow_prime}) shadow",
        dimension=ideal.dimension,
        witness=witness,
        shadow_prime=shadow_prime,
    )


def _shadow_prime(gpd: FiniteGroupoid, dimension: int, max_enum: int | None) -> int:
    from .fields import is_prime

    order = len(gpd.elements)
    p = 2
    while p < 2**31:
        if is_prime(p) and order % p != 0:
            try:
                check_enum_size(p, dimension, max_enum)
                return p
            except SizeCapExceeded:
                pass
        p += 1
    raise SizeCapExceeded("no workable shadow prime under the enumeration cap")


# -- condition (LP) and the socle ------------------------------------------------


@dataclass
class LPReport:
    holds: bool
    violators: tuple[str, ...]
    explanation: str


class LPViolationError(RuntimeError):
    """The socle construction refuses groupoids with nontrivial isotropy."""

    def __init__(self, report: LPReport):
        self.report = report
        super().__init__(report.explanation)


def check_condition_LP(gpd: FiniteGroupoid) -> LPReport:
    """For finite discrete groupoids condition (LP) is exactly principality:
    every unit must have trivial isotropy.  Violators are listed in canonical
    order with their isotropy sizes."""
    violators = tuple(u for u in gpd.units() if gpd.isotropy(u).order > 1)
    if violators:
        sizes = ", ".join(f"{u!r} (isotropy order {gpd.isotropy(u).order})" for u in violators)
        explanation = (
            "condition (LP) fails: units with nontrivial isotropy contribute no "
            f"minimal singleton ideals: {sizes}"
        )
    else:
        explanation = "every unit has trivial isotropy"
    return LPReport(holds=not violators, violators=violators, explanation=explanation)


@dataclass
class ComponentDecomposition:
    """The two-sided ideal (1_x) together with its split into left ideals."""

    orbit: OrbitClass
    ideal: LeftIdeal
    summands: tuple[LeftIdeal, ...]


def homogeneous_component(algebra: SteinbergAlgebra, x: str) -> ComponentDecomposition:
    """(1_x) = direct sum of A 1_y over the orbit of x, for trivial isotropy x.

    Verifies the direct sum: the summand dimensions add up across the join
    and the join equals the two-sided ideal generated by 1_x.
    """
    gpd = algebra.groupoid
    if not gpd.is_unit(x):
        raise ValueError(f"expected a unit, got {x!r}")
    if gpd.isotropy(x).order != 1:
        raise ValueError(f"unit {x!r} has nontrivial isotropy")
    orbit = gpd.orbit_of(x)
    summands = tuple(left_ideal(algebra, [algebra.basis_element(y)]) for y in orbit.members)

    joint = EchelonBasis(algebra.field, algebra.dim)
    for summand in summands:
        added = joint.extend(summand.basis_vectors())
        if added != summand.dimension:
            raise RuntimeError(f"summands of the component at {x!r} are not independent")
    ideal = two_sided_ideal(algebra, [algebra.basis_element(x)])
    if joint.canonical() != ideal.echelon().canonical():
        raise RuntimeError(f"component at {x!r} does not exhaust the two-sided ideal")
    return ComponentDecomposition(orbit=orbit, ideal=ideal, summands=summands)


@dataclass
class SocleComponent:
    orbit: OrbitClass
    dimension: int
    matrix_size: int


@dataclass
class SocleReport:
    """The socle with its decomposition into matrix-algebra components."""

    algebra: SteinbergAlgebra
    lp_holds: bool
    generating_units: tuple[str, ...]
    components: tuple[SocleComponent, ...]
    socle_basis: tuple[AlgebraElement, ...]
    socle_dimension: int

    def to_json_obj(self) -> dict:
        return {
            "schema": 1,
            "lp_holds": self.lp_holds,
            "field": self.algebra.field.designator,
            "generating_units": list(self.generating_units),
            "components": [
                {
                    "representative": c.orbit.representative,
                    "orbit": list(c.orbit.members),
                    "dimension": c.dimension,
                    "matrix_size": c.matrix_size,
                }
                for c in self.components
            ],
            "socle_dimension": self.socle_dimension,
            "basis": [element_to_obj(b) for b in self.socle_basis],
        }


def socle(algebra: SteinbergAlgebra) -> SocleReport:
    """The socle as the sum of the two-sided ideals (1_x) over orbit
    representatives; refuses with an explanation unless condition (LP) holds."""
    report = check_condition_LP(algebra.groupoid)
    if not report.holds:
        raise LPViolationError(report)
    gpd = algebra.groupoid
    components = []
    basis = EchelonBasis(algebra.field, algebra.dim)
    reps = []
    for orbit in gpd.orbit_classes():
        rep = orbit.representative
        reps.append(rep)
        decomposition = homogeneous_component(algebra, rep)
        components.append(
            SocleComponent(
                orbit=orbit,
                dimension=decomposition.ideal.dimension,
                matrix_size=len(orbit),
            )
        )
        basis.extend(decomposition.ideal.basis_vectors())
    return SocleReport(
        algebra=algebra,
        lp_holds=True,
        generating_units=tuple(reps),
        components=tuple(components),
        socle_basis=tuple(algebra.from_vector(row) for row in basis.rows),
        socle_dimension=basis.dim,
    )


# -- corner transfer --------------------------------------------------------------


def corner_minimality_transfer(
    e: AlgebraElement,
    a: AlgebraElement,
    certificate: MinimalIdealCertificate | None = None,
    max_enum: int | None = None,
) -> MinimalityReport:
    """Check that e A a is minimal as a left ideal of the corner e A e.

    Preconditions: e is an idempotent, a = e a e, and A a is a minimal left
    ideal (pass the certificate over the rationals).  Minimality inside the
    corner is tested exhaustively over prime fields and on the corner
    spanning set over the rationals.
    """
    algebra = e.algebra
    field = algebra.field
    if e * e != e:
        raise ValueError("e is not idempotent")
    if e * a * e != a:
        raise ValueError("a does not lie in the corner e A e")
    ambient = is_minimal_left_ideal(left_ideal(algebra, [a]), certificate, max_enum)
    if not ambient.minimal:
        raise ValueError("A a is not a minimal left ideal")

    corner_ops = []
    for g in algebra.groupoid.elements:
        op = e * algebra.basis_element(g) * e
        if not op.is_zero():
            corner_ops.append(op)

    corner_ideal = EchelonBasis(field, algebra.dim)
    for op in corner_ops:
        corner_ideal.insert((op * a).to_vector())
    corner_ideal.insert(a.to_vector())  # a = e * e * a lies in e A a
    dim = corner_ideal.dim

    def generates(vec: list) -> bool:
        v = algebra.from_vector(vec)
        spun = EchelonBasis(field, algebra.dim)
        for op in corner_ops:
            spun.insert((op * v).to_vector())
        return spun.dim == dim

    if isinstance(field, PrimeField):
        q = field.p
        check_enum_size(q, dim, max_enum)
        rows = [list(r) for r in corner_ideal.rows]
        for coeffs in product(range(q), repeat=dim):
            if not any(coeffs):
                continue
            vec = _combo(field, rows, coeffs)
            if not generates(vec):
                return MinimalityReport(
                    minimal=False,
                    method=f"corner exhaustive over GF({q})",
                    dimension=dim,
                    witness=algebra.from_vector(vec),
                )
        return MinimalityReport(
            minimal=True, method=f"corner exhaustive over GF({q})", dimension=dim
        )

    for row in [a.to_vector()] + [(op * a).to_vector() for op in corner_ops]:
        if all(field.is_zero(c) for c in row):
            continue
        if not generates(row):
            return MinimalityReport(
                minimal=False,
                method="corner spanning set",
                dimension=dim,
                witness=algebra.from_vector(row),
            )
    return MinimalityReport(minimal=True, method="corner spanning set", dimension=dim)
