"""Operator closure: the smallest subspace containing given generators and
closed under declared unary and bilinear operators.

This is the executable meaning of "smallest Q-subalgebra stable under ..."
Classes are flattened to exact rational coordinate vectors; the fixed-point
iteration terminates because the ambient space is finite-dimensional.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ShapeError
from .gpb import GpbClass
from .jacobian import JacClass
from .rational import Subspace


class JacAmbient:
    """Flattening of JacClass into Q^(2^2g)."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.dim = 1 << ctx.n

    def flatten(self, cls):
        if not isinstance(cls, JacClass) or cls.ctx is not self.ctx:
            raise ShapeError("class not in this ambient")
        return [cls.value.coefficient(m) for m in range(self.dim)]

    def unit(self):
        return self.ctx.one()

    def coordinate_degree(self, i):
        return i.bit_count()

    def degree_part(self, cls, k):
        return JacClass(self.ctx, cls.value.degree_part(k))


class GpbAmbient:
    """Flattening of GpbClass into Q^(2 . 2^2g): base block then H block."""

    def __init__(self, ctx):
        self.ctx = ctx
        self._half = 1 << ctx.jac.n
        self.dim = 2 * self._half

    def flatten(self, cls):
        if not isinstance(cls, GpbClass) or cls.ctx is not self.ctx:
            raise ShapeError("class not in this ambient")
        return [cls.base.value.coefficient(m) for m in range(self._half)] + [
            cls.hpart.value.coefficient(m) for m in range(self._half)
        ]

    def unit(self):
        return self.ctx.one()

    def coordinate_degree(self, i):
        if i < self._half:
            return i.bit_count()
        return (i - self._half).bit_count() + 2

    def degree_part(self, cls, k):
        return cls.degree_part(k)


@dataclass(frozen=True)
class OperatorSpec:
    """A named pure operator: linear (arity 1) or bilinear (arity 2)."""

    name: str
    arity: int
    evaluator: object
    generating: bool = True

    def __post_init__(self):
        if self.arity not in (1, 2):
            raise ShapeError("arity must be 1 or 2")


@dataclass
class ClosureResult:
    ambient: object
    basis: list
    dim: int
    iterations: int
    saturated: bool
    degree_dims: dict = field(default_factory=dict)
    graded: bool = True
    _space: Subspace = None

    def contains(self, cls):
        return self._space.contains(self.ambient.flatten(cls))


def compute_closure(generators, ops, ambient):
    """Fixed-point iteration: seed with the unit and the generators, apply all
    generating operators to all basis tuples, extend the span, repeat until
    the dimension stabilizes."""
    space = Subspace(ambient.dim)
    basis = []

    def absorb(cls):
        if space.add(ambient.flatten(cls)):
            basis.append(cls)
            return True
        return False

    absorb(ambient.unit())
    for gcls in generators:
        absorb(gcls)

    active = [op for op in ops if op.generating]
    unary = [op for op in active if op.arity == 1]
    binary = [op for op in active if op.arity == 2]
    iterations = 0
    grew = True
    while grew:
        iterations += 1
        grew = False
        for op in unary:
            for b in list(basis):
                if absorb(op.evaluator(b)):
                    grew = True
        for op in binary:
            for x in list(basis):
                for y in list(basis):
                    if absorb(op.evaluator(x, y)):
                        grew = True

    saturated = _verify_saturation(basis, active, space, ambient)
    degree_dims, graded = _graded_report(basis, space, ambient)
    return ClosureResult(
        ambient=ambient,
        basis=basis,
        dim=space.dim,
        iterations=iterations,
        saturated=saturated,
        degree_dims=degree_dims,
        graded=graded,
        _space=space,
    )


def _verify_saturation(basis, ops, space, ambient):
    """Independent recheck: no operator application leaves the span."""
    for op in ops:
        if op.arity == 1:
            tuples = ((b,) for b in basis)
        else:
            tuples = ((x, y) for x in basis for y in basis)
        for args in tuples:
            if not space.contains(ambient.flatten(op.evaluator(*args))):
                return False
    return True


def _graded_report(basis, space, ambient):
    """Per-exterior-degree dimensions of the span.

    If the span is graded (each degree component of each basis vector is a
    member, which holds whenever the generators and operators are graded) the
    table is exact; otherwise it reports projection dimensions and flags it.
    """
    degrees = sorted({ambient.coordinate_degree(i) for i in range(ambient.dim)})
    graded = True
    per_degree = {}
    for k in degrees:
        sub = Subspace(ambient.dim)
        for b in basis:
            part = ambient.degree_part(b, k)
            vec = ambient.flatten(part)
            if any(vec):
                if not space.contains(vec):
                    graded = False
                sub.add(vec)
        if sub.dim:
            per_degree[k] = sub.dim
    return per_degree, graded


def compare_subalgebras(a, b):
    """Mutual membership test of two closure results in one ambient.

    Returns (relation, table) with relation in {"equal", "A<B", "B<A",
    "incomparable"} and table mapping degree -> (dim in A, dim in B).
    """
    if a.ambient.dim != b.ambient.dim or a.ambient.ctx is not b.ambient.ctx:
        raise ShapeError("closure results live in different ambients")
    a_in_b = all(b._space.contains(a.ambient.flatten(x)) for x in a.basis)
    b_in_a = all(a._space.contains(b.ambient.flatten(x)) for x in b.basis)
    if a_in_b and b_in_a:
        relation = "equal"
    elif a_in_b:
        relation = "A<B"
    elif b_in_a:
        relation = "B<A"
    else:
        relation = "incomparable"
    degrees = sorted(set(a.degree_dims) | set(b.degree_dims))
    table = {k: (a.degree_dims.get(k, 0), b.degree_dims.get(k, 0)) for k in degrees}
    return relation, table


# -- standard operator families ---------------------------------------------


def jac_operator_family(names=("wedge", "pontryagin", "fourier", "nstar", "nlow"), ns=(2, 3)):
    """Operators on the Jacobian model, by name; nstar/nlow expand to one
    OperatorSpec per n in ns."""
    from . import jacobian as J

    ops = []
    for name in names:
        if name == "wedge":
            ops.append(OperatorSpec("wedge", 2, lambda x, y: x * y))
        elif name == "pontryagin":
            ops.append(OperatorSpec("pontryagin", 2, J.pontryagin))
        elif name == "fourier":
            ops.append(OperatorSpec("fourier", 1, J.fourier))
        elif name == "nstar":
            for n in ns:
                ops.append(OperatorSpec(f"nstar[{n}]", 1, lambda x, n=n: J.mult_pullback(n, x)))
        elif name == "nlow":
            for n in ns:
                ops.append(OperatorSpec(f"nlow[{n}]", 1, lambda x, n=n: J.mult_pushforward(n, x)))
        else:
            raise ShapeError(f"unknown operator name {name!r}")
    return ops


def gpb_operator_family(preset, names=("wedge", "pontryagin", "fourier", "nstar", "nlow"), ns=(2, 3)):
    """Extended operators on the P1-bundle model for one preset."""
    from . import gpb as G

    ops = []
    for name in names:
        if name == "wedge":
            ops.append(OperatorSpec("wedge", 2, G.gpb_mul))
        elif name == "pontryagin":
            ops.append(
                OperatorSpec(
                    f"pontryagin[{preset}]", 2, lambda x, y, p=preset: G.ext_pontryagin(x, y, p)
                )
            )
        elif name == "fourier":
            ops.append(OperatorSpec("ext_fourier", 1, G.ext_fourier))
        elif name == "nstar":
            for n in ns:
                ops.append(
                    OperatorSpec(
                        f"nstar[{n},{preset}]", 1, lambda x, n=n, p=preset: G.ext_mult_pullback(n, x, p)
                    )
                )
        elif name == "nlow":
            for n in ns:
                ops.append(
                    OperatorSpec(
                        f"nlow[{n},{preset}]", 1, lambda x, n=n, p=preset: G.ext_mult_pushforward(n, x, p)
                    )
                )
        else:
            raise ShapeError(f"unknown operator name {name!r}")
    return ops
