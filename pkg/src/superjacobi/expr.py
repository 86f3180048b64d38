"""Expression trees for bracket identities.

An expression is built from generator leaves with word products,
graded commutators ``[a, b]``, graded anticommutators ``{a, b}``, scalar
multiples, Koszul phases and sums.  A :class:`Phase` node multiplies its
child by ``(-1)**sum(eps(Xa) * eps(Xb))`` over its generator pairs, so the
same tree describes an identity for every parity assignment.

    >>> X, Y, Z = gens(3)
    >>> fun2 = comm(X, Y * Z) + anti(Y, Z * X) - anti(Z, X * Y)
    >>> render(fun2)
    '[X,YZ] + {Y,ZX} - {Z,XY}'
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Sequence, Tuple

from superjacobi.core import coeff_to_json, format_coeff, parse_coeff


class Expr:
    """Base class; gives every node arithmetic operators."""

    def __add__(self, other: "Expr") -> "Expr":
        return Sum(_terms(self) + _terms(other))

    def __sub__(self, other: "Expr") -> "Expr":
        return self + (-other)

    def __neg__(self) -> "Expr":
        if isinstance(self, Scale):
            return Scale(-self.coeff, self.expr)
        return Scale(Fraction(-1), self)

    def __rmul__(self, c) -> "Expr":
        return Scale(Fraction(c), self)

    def __mul__(self, other: "Expr") -> "Expr":
        if not isinstance(other, Expr):
            return Scale(Fraction(other), self)
        return Prod(_factors(self) + _factors(other))


@dataclass(frozen=True)
class Gen(Expr):
    index: int


@dataclass(frozen=True)
class Prod(Expr):
    factors: Tuple[Expr, ...]


@dataclass(frozen=True)
class Comm(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Anti(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Scale(Expr):
    coeff: Fraction
    expr: Expr


@dataclass(frozen=True)
class Phase(Expr):
    pairs: Tuple[Tuple[int, int], ...]
    expr: Expr


@dataclass(frozen=True)
class Sum(Expr):
    terms: Tuple[Expr, ...]


@dataclass(frozen=True)
class Identity:
    """A named expression claimed to vanish identically.

    ``graded`` identities are checked for every parity assignment of the
    generators; ordinary ones only with all generators even.
    """

    name: str
    arity: int
    expr: Expr
    graded: bool = False

    def __post_init__(self):
        bad = [i for i in leaves(self.expr) if not 0 <= i < self.arity]
        if bad:
            raise ValueError(f"{self.name}: leaf indices {bad} outside arity {self.arity}")


def _terms(e: Expr) -> Tuple[Expr, ...]:
    return e.terms if isinstance(e, Sum) else (e,)


def _factors(e: Expr) -> Tuple[Expr, ...]:
    return e.factors if isinstance(e, Prod) else (e,)


def gens(n: int) -> Tuple[Gen, ...]:
    return tuple(Gen(i) for i in range(n))


def word(*indices: int) -> Expr:
    if not indices:
        raise ValueError("empty word")
    if len(indices) == 1:
        return Gen(indices[0])
    return Prod(tuple(Gen(i) for i in indices))


def comm(a: Expr, b: Expr) -> Comm:
    return Comm(a, b)


def anti(a: Expr, b: Expr) -> Anti:
    return Anti(a, b)


def phase(e: Expr, *pairs: Tuple[Gen, Gen]) -> Expr:
    """Attach the factor (-1)**(sum eps(a)eps(b)) for the given generator pairs."""
    return Phase(tuple((a.index, b.index) for a, b in pairs), e)


def add(terms: Sequence[Expr]) -> Expr:
    out: Tuple[Expr, ...] = ()
    for t in terms:
        out += _terms(t)
    if len(out) == 1:
        return out[0]
    return Sum(out)


def leaves(e: Expr) -> Iterator[int]:
    if isinstance(e, Gen):
        yield e.index
    elif isinstance(e, Prod):
        for f in e.factors:
            yield from leaves(f)
    elif isinstance(e, (Comm, Anti)):
        yield from leaves(e.left)
        yield from leaves(e.right)
    elif isinstance(e, (Scale, Phase)):
        yield from leaves(e.expr)
    elif isinstance(e, Sum):
        for t in e.terms:
            yield from leaves(t)
    else:
        raise TypeError(f"not an expression node: {e!r}")


def depth(e: Expr) -> int:
    if isinstance(e, Gen):
        return 1
    if isinstance(e, (Scale, Phase)):
        return depth(e.expr)
    if isinstance(e, (Comm, Anti)):
        return 1 + max(depth(e.left), depth(e.right))
    children = e.factors if isinstance(e, Prod) else e.terms
    return 1 + max(depth(c) for c in children)


def relabel(e: Expr, mapping: Mapping[int, int]) -> Expr:
    """Substitute generator ``i`` by ``mapping[i]`` everywhere, phases included."""
    m = lambda i: mapping.get(i, i)  # noqa: E731
    if isinstance(e, Gen):
        return Gen(m(e.index))
    if isinstance(e, Prod):
        return Prod(tuple(relabel(f, mapping) for f in e.factors))
    if isinstance(e, Comm):
        return Comm(relabel(e.left, mapping), relabel(e.right, mapping))
    if isinstance(e, Anti):
        return Anti(relabel(e.left, mapping), relabel(e.right, mapping))
    if isinstance(e, Scale):
        return Scale(e.coeff, relabel(e.expr, mapping))
    if isinstance(e, Phase):
        return Phase(tuple((m(a), m(b)) for a, b in e.pairs), relabel(e.expr, mapping))
    if isinstance(e, Sum):
        return Sum(tuple(relabel(t, mapping) for t in e.terms))
    raise TypeError(f"not an expression node: {e!r}")


def cyclic_sum(e: Expr, n: int) -> Expr:
    """Sum of ``e`` over the cyclic relabelings X1 -> X2 -> ... -> Xn -> X1."""
    return add([relabel(e, {i: (i + k) % n for i in range(n)}) for k in range(n)])


def orbit_sum(e: Expr, perms: Sequence[Sequence[int]]) -> Expr:
    """Sum of ``e`` over the relabelings ``i -> perm[i]``."""
    return add([relabel(e, dict(enumerate(p))) for p in perms])


# -- rendering ---------------------------------------------------------------

def default_names(arity: int) -> Tuple[str, ...]:
    if arity <= 3:
        return ("X", "Y", "Z")[:arity]
    return tuple(f"X{i + 1}" for i in range(arity))


def _name(names: Sequence[str], i: int) -> str:
    return names[i] if i < len(names) else f"X{i + 1}"


def render(e: Expr, names: Sequence[str] | None = None) -> str:
    if names is None:
        names = default_names(max(leaves(e), default=-1) + 1)
    return _render(e, names)


def _render(e: Expr, names: Sequence[str]) -> str:
    if isinstance(e, Gen):
        return _name(names, e.index)
    if isinstance(e, Prod):
        parts = []
        for f in e.factors:
            s = _render(f, names)
            parts.append(f"({s})" if isinstance(f, (Sum, Scale)) else s)
        return "".join(parts)
    if isinstance(e, Comm):
        return f"[{_render(e.left, names)},{_render(e.right, names)}]"
    if isinstance(e, Anti):
        return "{" + _render(e.left, names) + "," + _render(e.right, names) + "}"
    if isinstance(e, Phase):
        exps = " + ".join(f"e({_name(names, a)})e({_name(names, b)})" for a, b in e.pairs)
        return f"{_render(e.expr, names)}(-1)^({exps})"
    if isinstance(e, Scale):
        inner = _render(e.expr, names)
        if isinstance(e.expr, Sum):
            inner = f"({inner})"
        if e.coeff == 1:
            return inner
        if e.coeff == -1:
            return f"-{inner}"
        return f"{format_coeff(e.coeff)}*{inner}"
    if isinstance(e, Sum):
        out = ""
        for k, t in enumerate(e.terms):
            s = _render(t, names)
            if k == 0:
                out = s
            elif s.startswith("-"):
                out += f" - {s[1:]}"
            else:
                out += f" + {s}"
        return out
    raise TypeError(f"not an expression node: {e!r}")


# -- JSON ----------------------------------------------------------------------

def to_json(e: Expr) -> Dict:
    if isinstance(e, Gen):
        return {"op": "gen", "index": e.index}
    if isinstance(e, Prod):
        return {"op": "prod", "args": [to_json(f) for f in e.factors]}
    if isinstance(e, Comm):
        return {"op": "comm", "args": [to_json(e.left), to_json(e.right)]}
    if isinstance(e, Anti):
        return {"op": "anti", "args": [to_json(e.left), to_json(e.right)]}
    if isinstance(e, Scale):
        return {"op": "scale", "coeff": coeff_to_json(e.coeff), "arg": to_json(e.expr)}
    if isinstance(e, Phase):
        return {"op": "phase", "pairs": [list(p) for p in e.pairs], "arg": to_json(e.expr)}
    if isinstance(e, Sum):
        return {"op": "sum", "args": [to_json(t) for t in e.terms]}
    raise TypeError(f"not an expression node: {e!r}")


def from_json(d: Mapping) -> Expr:
    op = d["op"]
    if op == "gen":
        return Gen(int(d["index"]))
    if op == "prod":
        return Prod(tuple(from_json(a) for a in d["args"]))
    if op in ("comm", "anti"):
        left, right = (from_json(a) for a in d["args"])
        return Comm(left, right) if op == "comm" else Anti(left, right)
    if op == "scale":
        return Scale(parse_coeff(d["coeff"]), from_json(d["arg"]))
    if op == "phase":
        return Phase(tuple((int(a), int(b)) for a, b in d["pairs"]), from_json(d["arg"]))
    if op == "sum":
        return Sum(tuple(from_json(a) for a in d["args"]))
    raise ValueError(f"unknown expression op {op!r}")


def identity_to_json(ident: Identity) -> Dict:
    return {
        "name": ident.name,
        "arity": ident.arity,
        "graded": ident.graded,
        "text": render(ident.expr, default_names(ident.arity)),
        "tree": to_json(ident.expr),
    }
