"""Finite-dimensional (super)algebras given by structure constants.

A :class:`StructureTensor` stores ``F[i, j, k]`` with ``T_i T_j = F[i, j, k] T_k``
and the parity of every basis element.  Identities are checked on every
basis tuple along two independent routes:

* evaluating the catalog expression trees with basis elements plugged in
  (products via :func:`multiply`, brackets via graded commutators), and
* explicit index contractions of ``F`` and its graded symmetric /
  antisymmetric parts ``c`` and ``f``.

Both routes produce residual tensors which must agree exactly.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from superjacobi.catalog import CATALOG
from superjacobi.core import coeff_to_json, parity, parse_coeff, sign
from superjacobi.expr import Anti, Comm, Expr, Gen, Identity, Phase, Prod, Scale, Sum
from superjacobi.reports import VerificationResult

Index3 = Tuple[int, int, int]
Table = Dict[Index3, Fraction]
Rows = Dict[Tuple[int, int], Dict[int, Fraction]]


class InvariantError(ValueError):
    """Input violates a type invariant (parity consistency, symmetry, ...)."""


class DimensionMismatch(ValueError):
    pass


def _clean_table(table: Mapping, dim: int, par: Sequence[int], what: str) -> Table:
    out: Table = {}
    for key, c in table.items():
        i, j, k = (int(x) for x in key)
        for x in (i, j, k):
            if not 0 <= x < dim:
                raise InvariantError(f"{what}: index {x} out of range for dim {dim}")
        c = parse_coeff(c) if not isinstance(c, Fraction) else c
        if not c:
            continue
        if (par[i] + par[j] + par[k]) % 2:
            raise InvariantError(
                f"{what}[{i},{j},{k}] = {c} breaks parity consistency "
                f"(parities {par[i]},{par[j]},{par[k]})"
            )
        out[(i, j, k)] = out.get((i, j, k), Fraction(0)) + c
    return {key: c for key, c in sorted(out.items()) if c}


def _rows(table: Table) -> Rows:
    rows: Rows = {}
    for (i, j, k), c in table.items():
        rows.setdefault((i, j), {})[k] = c
    return rows


def _check_dims(dim: int, par: Sequence[int]) -> Tuple[int, ...]:
    if dim < 1:
        raise InvariantError(f"dimension must be positive, got {dim}")
    if len(par) != dim:
        raise InvariantError(f"parity vector has length {len(par)}, expected {dim}")
    try:
        return tuple(parity(int(p)) for p in par)
    except ValueError as exc:
        raise InvariantError(str(exc)) from exc


@dataclass(eq=False)
class StructureTensor:
    """Sparse structure constants of a finite-dimensional superalgebra."""

    dim: int
    parity: Tuple[int, ...]
    F: Table
    name: str = ""
    basis: Optional[Tuple[str, ...]] = None
    rows: Rows = field(init=False, repr=False)

    def __post_init__(self):
        self.parity = _check_dims(self.dim, self.parity)
        self.F = _clean_table(self.F, self.dim, self.parity, "F")
        if self.basis is not None:
            self.basis = tuple(self.basis)
            if len(self.basis) != self.dim:
                raise InvariantError("basis label count differs from dim")
        self.rows = _rows(self.F)

    def __eq__(self, other):
        if not isinstance(other, StructureTensor):
            return NotImplemented
        return (self.dim, self.parity, self.F) == (other.dim, other.parity, other.F)

    def labels(self) -> Tuple[str, ...]:
        return self.basis or tuple(f"T{i}" for i in range(self.dim))


@dataclass(eq=False)
class BracketTables:
    """Structure constants of a bracket ``f`` and an antibracket ``c``."""

    dim: int
    parity: Tuple[int, ...]
    f: Table
    c: Table
    name: str = ""
    basis: Optional[Tuple[str, ...]] = None
    f_rows: Rows = field(init=False, repr=False)
    c_rows: Rows = field(init=False, repr=False)

    def __post_init__(self):
        self.parity = _check_dims(self.dim, self.parity)
        self.f = _clean_table(self.f, self.dim, self.parity, "f")
        self.c = _clean_table(self.c, self.dim, self.parity, "c")
        if self.basis is not None:
            self.basis = tuple(self.basis)
        self.f_rows = _rows(self.f)
        self.c_rows = _rows(self.c)

    def __eq__(self, other):
        if not isinstance(other, BracketTables):
            return NotImplemented
        return (self.dim, self.parity, self.f, self.c) == (other.dim, other.parity, other.f, other.c)

    def labels(self) -> Tuple[str, ...]:
        return self.basis or tuple(f"T{i}" for i in range(self.dim))

    def symmetry_violations(self) -> List[str]:
        """f_ij^k = -(-1)^(e_i e_j) f_ji^k and c_ij^k = (-1)^(e_i e_j) c_ji^k."""
        bad = []
        e = self.parity
        for (i, j, k), v in self.f.items():
            if self.f.get((j, i, k), 0) != -sign(e[i] * e[j]) * v:
                bad.append(f"f[{i},{j},{k}]")
        for (i, j, k), v in self.c.items():
            if self.c.get((j, i, k), 0) != sign(e[i] * e[j]) * v:
                bad.append(f"c[{i},{j},{k}]")
        return bad

    def validate_symmetry(self):
        bad = self.symmetry_violations()
        if bad:
            raise InvariantError("graded symmetry violated at " + ", ".join(bad[:5]))


# -- elements ----------------------------------------------------------------

@dataclass(frozen=True)
class FDElement:
    """Dense coefficient vector ``x^i`` of ``X = x^i T_i``."""

    coeffs: Tuple[Fraction, ...]

    @classmethod
    def zero(cls, dim: int) -> "FDElement":
        return cls((Fraction(0),) * dim)

    @classmethod
    def basis(cls, dim: int, i: int) -> "FDElement":
        v = [Fraction(0)] * dim
        v[i] = Fraction(1)
        return cls(tuple(v))

    @classmethod
    def of(cls, values: Iterable) -> "FDElement":
        return cls(tuple(parse_coeff(v) if not isinstance(v, Fraction) else v for v in values))

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "FDElement") -> "FDElement":
        if other.dim != self.dim:
            raise DimensionMismatch(f"{self.dim} vs {other.dim}")
        return FDElement(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FDElement":
        return FDElement(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "FDElement") -> "FDElement":
        return self + (-other)

    def scale(self, c) -> "FDElement":
        c = Fraction(c)
        return FDElement(tuple(c * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> List[int]:
        return [i for i, a in enumerate(self.coeffs) if a]

    def parity(self, basis_parity: Sequence[int]) -> Optional[int]:
        ps = {basis_parity[i] for i in self.support()}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    def parts(self, basis_parity: Sequence[int]) -> Dict[int, "FDElement"]:
        out = {}
        for p in (0, 1):
            v = tuple(a if basis_parity[i] == p else Fraction(0) for i, a in enumerate(self.coeffs))
            if any(v):
                out[p] = FDElement(v)
        return out

    def labelled(self, labels: Sequence[str]) -> List[Tuple[str, Fraction]]:
        return [(labels[i], a) for i, a in enumerate(self.coeffs) if a]


def _bilinear(rows: Rows, dim: int, x: FDElement, y: FDElement) -> FDElement:
    if x.dim != dim or y.dim != dim:
        raise DimensionMismatch(f"element dims {x.dim}, {y.dim} vs algebra dim {dim}")
    out = [Fraction(0)] * dim
    xs = [(i, a) for i, a in enumerate(x.coeffs) if a]
    ys = [(j, b) for j, b in enumerate(y.coeffs) if b]
    for i, a in xs:
        for j, b in ys:
            row = rows.get((i, j))
            if row:
                ab = a * b
                for k, v in row.items():
                    out[k] += ab * v
    return FDElement(tuple(out))


def multiply(A: StructureTensor, x: FDElement, y: FDElement) -> FDElement:
    """(xy)^k = x^i y^j F_ij^k; no signs beyond those in F."""
    return _bilinear(A.rows, A.dim, x, y)


def basis_element(A, i: int) -> FDElement:
    return FDElement.basis(A.dim, i)


def _graded_bracket(mul, par, x: FDElement, y: FDElement, anti: bool) -> FDElement:
    out = FDElement.zero(len(par))
    for px, hx in x.parts(par).items():
        for py, hy in y.parts(par).items():
            s = sign(px * py)
            out = out + mul(hx, hy) + mul(hy, hx).scale(s if anti else -s)
    return out


@dataclass
class AlgebraOps:
    """Product and brackets on FDElements.

    Built either from a product table (brackets are graded commutators of
    the product) or from bracket tables alone (no product available).
    """

    dim: int
    parity: Tuple[int, ...]
    mul: Optional[Callable[[FDElement, FDElement], FDElement]]
    comm: Callable[[FDElement, FDElement], FDElement]
    anti: Callable[[FDElement, FDElement], FDElement]
    labels: Tuple[str, ...]


def ops_from_tensor(A: StructureTensor) -> AlgebraOps:
    mul = lambda x, y: multiply(A, x, y)  # noqa: E731
    return AlgebraOps(
        A.dim,
        A.parity,
        mul,
        lambda x, y: _graded_bracket(mul, A.parity, x, y, anti=False),
        lambda x, y: _graded_bracket(mul, A.parity, x, y, anti=True),
        A.labels(),
    )


def ops_from_tables(B: BracketTables) -> AlgebraOps:
    return AlgebraOps(
        B.dim,
        B.parity,
        None,
        lambda x, y: _bilinear(B.f_rows, B.dim, x, y),
        lambda x, y: _bilinear(B.c_rows, B.dim, x, y),
        B.labels(),
    )


def evaluate(e: Expr, ops: AlgebraOps, assignment: Sequence[int]) -> FDElement:
    """Value of ``e`` with generator ``g`` replaced by basis element ``assignment[g]``."""
    if isinstance(e, Gen):
        return FDElement.basis(ops.dim, assignment[e.index])
    if isinstance(e, Prod):
        if ops.mul is None:
            raise ValueError("expression needs a product but only brackets are available")
        out = evaluate(e.factors[0], ops, assignment)
        for f in e.factors[1:]:
            out = ops.mul(out, evaluate(f, ops, assignment))
        return out
    if isinstance(e, Comm):
        return ops.comm(evaluate(e.left, ops, assignment), evaluate(e.right, ops, assignment))
    if isinstance(e, Anti):
        return ops.anti(evaluate(e.left, ops, assignment), evaluate(e.right, ops, assignment))
    if isinstance(e, Scale):
        return evaluate(e.expr, ops, assignment).scale(e.coeff)
    if isinstance(e, Phase):
        s = sign(sum(ops.parity[assignment[a]] * ops.parity[assignment[b]] for a, b in e.pairs))
        return evaluate(e.expr, ops, assignment).scale(s)
    if isinstance(e, Sum):
        out = FDElement.zero(ops.dim)
        for t in e.terms:
            out = out + evaluate(t, ops, assignment)
        return out
    raise TypeError(f"not an expression node: {e!r}")


Residuals = Dict[Tuple[int, ...], Tuple[Fraction, ...]]


def _result_from_residuals(name: str, res: Residuals, labels: Sequence[str], checked: int) -> VerificationResult:
    if not res:
        return VerificationResult(name, True, checked=checked)
    first = min(res)
    vec = FDElement(res[first])
    return VerificationResult(name, False, residual=vec.labelled(labels), witness=first, checked=checked)


def identity_residuals(ident: Identity, ops: AlgebraOps) -> Residuals:
    """Nonzero values of ``ident`` over all basis tuples (route 1)."""
    out: Residuals = {}
    for tup in itertools.product(range(ops.dim), repeat=ident.arity):
        v = evaluate(ident.expr, ops, tup)
        if not v.is_zero():
            out[tup] = v.coeffs
    return out


def check_identity_on_basis(ident: Identity, ops: AlgebraOps) -> VerificationResult:
    res = identity_residuals(ident, ops)
    return _result_from_residuals(ident.name, res, ops.labels, ops.dim ** ident.arity)


# -- explicit contractions (route 2) -------------------------------------------

def _contract(outer: Rows, inner: Rows, dim: int, a: int, b: int, c: int, inner_left: bool) -> List[Fraction]:
    """Components of outer(inner(T_a, T_b), T_c) or outer(T_a, inner(T_b, T_c))."""
    out = [Fraction(0)] * dim
    if inner_left:
        for n, u in inner.get((a, b), {}).items():
            for m, v in outer.get((n, c), {}).items():
                out[m] += u * v
    else:
        for n, u in inner.get((b, c), {}).items():
            for m, v in outer.get((a, n), {}).items():
                out[m] += u * v
    return out


def decompose(A: StructureTensor) -> BracketTables:
    """c_ij^k = F_ij^k + (-1)^(e_i e_j) F_ji^k,  f_ij^k = F_ij^k - (-1)^(e_i e_j) F_ji^k."""
    e = A.parity
    f: Table = {}
    c: Table = {}
    for (i, j, k), v in A.F.items():
        s = sign(e[i] * e[j])
        for tab, t in ((c, s), (f, -s)):
            tab[(i, j, k)] = tab.get((i, j, k), Fraction(0)) + v
            tab[(j, i, k)] = tab.get((j, i, k), Fraction(0)) + t * v
    return BracketTables(A.dim, A.parity, f, c, name=A.name, basis=A.basis)


def _super_terms(name: str, e, F: Rows, f: Rows, c: Rows):
    """Terms (phase, outer, inner, (a, b, c), inner_left) for one basis triple
    (i, j, k) = positions (0, 1, 2); phase is a function of the triple."""
    s = lambda p, q: (lambda t: sign(e[t[p]] * e[t[q]]))  # noqa: E731
    neg = lambda g: (lambda t: -g(t))  # noqa: E731
    i, j, k = 0, 1, 2
    if name == "FunI":
        return [(s(i, k), f, F, (i, j, k), False), (s(k, j), f, F, (k, i, j), False),
                (s(j, i), f, F, (j, k, i), False)]
    if name == "FunII":
        return [(s(i, k), f, F, (i, j, k), False), (s(j, i), c, F, (j, k, i), False),
                (neg(s(k, j)), c, F, (k, i, j), False)]
    if name == "JI":
        return [(s(i, k), f, f, (i, j, k), False), (s(k, j), f, f, (k, i, j), False),
                (s(j, i), f, f, (j, k, i), False)]
    if name == "JIab":
        return [(s(i, k), f, c, (i, j, k), False), (s(k, j), f, c, (k, i, j), False),
                (s(j, i), f, c, (j, k, i), False)]
    if name == "JIantiI":
        return [(s(i, k), f, c, (i, j, k), False), (neg(s(k, j)), c, f, (k, i, j), False),
                (s(j, i), c, f, (j, k, i), False)]
    if name == "JIantiII":
        return [(s(i, k), f, f, (i, j, k), False), (s(i, j), c, c, (j, k, i), False),
                (neg(s(k, j)), c, c, (k, i, j), False)]
    raise KeyError(name)


FUZZ_IDENTITIES = ("FFas", "FunI", "FunII", "JI", "JIab", "JIantiI", "JIantiII")

# catalog entry evaluated on basis tuples for each contraction identity
ROUTE1_IDENTITY = {
    "FunI": "FunIs",
    "FunII": "FunIIs",
    "JI": "JIs",
    "JIab": "JIsI",
    "JIantiI": "JIantis",
    "JIantiII": "JIantiIs",
}


def contraction_residuals(name: str, A: StructureTensor, tables: Optional[BracketTables] = None) -> Residuals:
    """Nonzero residual vectors of a graded identity over basis triples,
    computed purely from index contractions of F, f, c."""
    B = tables if tables is not None else decompose(A)
    e = A.parity
    terms = _super_terms(name, e, A.rows, B.f_rows, B.c_rows)
    out: Residuals = {}
    for t in itertools.product(range(A.dim), repeat=3):
        acc = [Fraction(0)] * A.dim
        for ph, outer, inner, pos, inner_left in terms:
            a, b, c = (t[p] for p in pos)
            vec = _contract(outer, inner, A.dim, a, b, c, inner_left)
            sg = ph(t)
            for m, v in enumerate(vec):
                if v:
                    acc[m] += sg * v
        if any(acc):
            out[t] = tuple(acc)
    return out


def associativity_residuals(A: StructureTensor) -> Residuals:
    """(T_i T_j) T_k - T_i (T_j T_k) via the sign-carrying associativity condition."""
    e = A.parity
    out: Residuals = {}
    for i, j, k in itertools.product(range(A.dim), repeat=3):
        acc = [Fraction(0)] * A.dim
        for n, u in A.rows.get((i, j), {}).items():
            for m, v in A.rows.get((n, k), {}).items():
                acc[m] += u * v
        for n, u in A.rows.get((j, k), {}).items():
            s = sign(e[i] * (e[j] + e[k] + e[n]))
            for m, v in A.rows.get((i, n), {}).items():
                acc[m] -= s * u * v
        if any(acc):
            out[(i, j, k)] = tuple(acc)
    return out


def check_associativity(A: StructureTensor) -> VerificationResult:
    res = associativity_residuals(A)
    return _result_from_residuals("FFas", res, A.labels(), A.dim ** 3)


def check_fundamental_identity(A: StructureTensor) -> VerificationResult:
    """FunIIs on every basis triple, products and brackets from the algebra."""
    r = check_identity_on_basis(CATALOG["FunIIs"], ops_from_tensor(A))
    r.name = "FunIIs"
    return r


def associativity_residuals_by_multiply(A: StructureTensor) -> Residuals:
    """Associator on basis triples using only :func:`multiply`."""
    out: Residuals = {}
    T = [FDElement.basis(A.dim, i) for i in range(A.dim)]
    for i, j, k in itertools.product(range(A.dim), repeat=3):
        v = multiply(A, multiply(A, T[i], T[j]), T[k]) - multiply(A, T[i], multiply(A, T[j], T[k]))
        if not v.is_zero():
            out[(i, j, k)] = v.coeffs
    return out


def dual_path_report(A: StructureTensor) -> Dict[str, bool]:
    """For each identity, whether route 1 (basis evaluation through
    multiply/brackets) and route 2 (index contraction) give identical
    residual tensors."""
    ops = ops_from_tensor(A)
    B = decompose(A)
    out = {"FFas": associativity_residuals(A) == associativity_residuals_by_multiply(A)}
    for name, cat in ROUTE1_IDENTITY.items():
        out[name] = identity_residuals(CATALOG[cat], ops) == contraction_residuals(name, A, B)
    tb_ops = ops_from_tables(B)
    for name, cat in SC_CATALOG_FORM.items():
        via_brackets = identity_residuals(CATALOG[cat], tb_ops)
        out[name] = sc_identity_residuals(name, B) == {
            t: tuple(-v for v in vec) for t, vec in via_brackets.items()
        }
    return out


# -- identities in terms of f and c ------------------------------------------

SC_IDENTITIES = ("JIf", "JIfc-1", "JIfc-2", "JIfc-3")

# each contracted identity at (i, j, k) is minus the catalog identity
# evaluated at (X, Y, Z) = (T_i, T_j, T_k)
SC_CATALOG_FORM = {
    "JIf": "JIs",
    "JIfc-1": "JIsI",
    "JIfc-2": "JIantis",
    "JIfc-3": "JIantiIs",
}


def sc_identity_residuals(name: str, B: BracketTables) -> Residuals:
    """Graded identities in terms of f and c, per basis triple (i, j, k):

    JIf     f_ij^n f_nk^m (-1)^(e_i e_k) + f_ki^n f_nj^m (-1)^(e_k e_j) + f_jk^n f_ni^m (-1)^(e_j e_i)
    JIfc-1  c_ij^n f_nk^m (-1)^(e_i e_k) + c_ki^n f_nj^m (-1)^(e_j e_k) + c_jk^n f_ni^m (-1)^(e_i e_j)
    JIfc-2  f_ij^n c_nk^m (-1)^(e_i e_k) - f_ki^n c_nj^m (-1)^(e_k e_j) + c_jk^n f_ni^m (-1)^(e_i e_j)
    JIfc-3  c_ij^n c_nk^m (-1)^(e_i e_k) - c_ki^n c_nj^m (-1)^(e_j e_k) + f_jk^n f_ni^m (-1)^(e_i e_j)
    """
    e = B.parity
    f, c = B.f_rows, B.c_rows
    pattern = {
        "JIf": [(1, f, f), (1, f, f), (1, f, f)],
        "JIfc-1": [(1, f, c), (1, f, c), (1, f, c)],
        "JIfc-2": [(1, c, f), (-1, c, f), (1, f, c)],
        "JIfc-3": [(1, c, c), (-1, c, c), (1, f, f)],
    }[name]
    out: Residuals = {}
    for i, j, k in itertools.product(range(B.dim), repeat=3):
        acc = [Fraction(0)] * B.dim
        # (outer, inner) applied as outer(inner(T_a, T_b), T_d) with (a, b, d)
        for (sg, outer, inner), (a, b, d), ph in zip(
            pattern,
            ((i, j, k), (k, i, j), (j, k, i)),
            (e[i] * e[k], e[k] * e[j], e[j] * e[i]),
        ):
            s = sg * sign(ph)
            for n, u in inner.get((a, b), {}).items():
                for m, v in outer.get((n, d), {}).items():
                    acc[m] += s * u * v
        if any(acc):
            out[(i, j, k)] = tuple(acc)
    return out


def check_sc_identities(B: BracketTables) -> Dict[str, VerificationResult]:
    B.validate_symmetry()
    out = {}
    for name in SC_IDENTITIES:
        res = sc_identity_residuals(name, B)
        out[name] = _result_from_residuals(name, res, B.labels(), B.dim ** 3)
    return out


# -- file format ---------------------------------------------------------------

def _table_from_json(rows, dim) -> Table:
    out: Table = {}
    for entry in rows:
        if len(entry) != 4:
            raise InvariantError(f"table entry {entry!r} must be [i, j, k, coeff]")
        i, j, k, v = entry
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (i, j, k)):
            raise InvariantError(f"table entry {entry!r} has non-integer index")
        key = (i, j, k)
        out[key] = out.get(key, Fraction(0)) + parse_coeff(v)
    return out


def _table_to_json(table: Table) -> List[list]:
    return [[i, j, k, coeff_to_json(v)] for (i, j, k), v in sorted(table.items())]


def algebra_from_dict(d: Mapping) -> Union[StructureTensor, BracketTables]:
    try:
        dim = int(d["dim"])
        par = list(d.get("parity", [0] * dim))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvariantError(f"malformed algebra record: {exc}") from exc
    basis = d.get("basis")
    name = str(d.get("name", ""))
    try:
        if "F" in d:
            return StructureTensor(dim, tuple(par), _table_from_json(d["F"], dim), name=name, basis=basis)
        if "f" in d or "c" in d:
            return BracketTables(
                dim, tuple(par), _table_from_json(d.get("f", []), dim),
                _table_from_json(d.get("c", []), dim), name=name, basis=basis,
            )
    except ValueError as exc:
        raise InvariantError(str(exc)) from exc
    raise InvariantError("algebra record needs an 'F' table or 'f'/'c' tables")


def algebra_to_dict(A: Union[StructureTensor, BracketTables]) -> Dict:
    d: Dict = {"name": A.name, "dim": A.dim, "parity": list(A.parity)}
    if A.basis is not None:
        d["basis"] = list(A.basis)
    if isinstance(A, StructureTensor):
        d["F"] = _table_to_json(A.F)
    else:
        d["f"] = _table_to_json(A.f)
        d["c"] = _table_to_json(A.c)
    return d


def load_algebra(path: Union[str, Path]) -> Union[StructureTensor, BracketTables]:
    with open(path) as fh:
        return algebra_from_dict(json.load(fh))


def compact_json(d: Mapping) -> str:
    """JSON object with one key per line and one table row per line."""
    items = []
    for k, v in d.items():
        if isinstance(v, list) and v and all(isinstance(r, list) for r in v):
            body = "[\n    " + ",\n    ".join(json.dumps(r) for r in v) + "\n  ]"
        else:
            body = json.dumps(v)
        items.append(f"  {json.dumps(k)}: {body}")
    return "{\n" + ",\n".join(items) + "\n}"


def dump_algebra(A: Union[StructureTensor, BracketTables]) -> str:
    return compact_json(algebra_to_dict(A))


# -- fuzzing -------------------------------------------------------------------

def random_tensor(rng: random.Random, dim: int, par: Sequence[int], density: float) -> StructureTensor:
    """Random sparse table with entries in {-2..2}; parity-forbidden slots stay zero."""
    F: Table = {}
    for i, j, k in itertools.product(range(dim), repeat=3):
        if (par[i] + par[j] + par[k]) % 2:
            continue
        if rng.random() < density:
            v = rng.randint(-2, 2)
            if v:
                F[(i, j, k)] = Fraction(v)
    return StructureTensor(dim, tuple(par), F)


def identity_verdicts(A: StructureTensor) -> Dict[str, bool]:
    """Which of the fuzzed identities hold on all basis triples of ``A``."""
    B = decompose(A)
    out = {"FFas": not associativity_residuals(A)}
    for name in FUZZ_IDENTITIES[1:]:
        out[name] = not contraction_residuals(name, A, B)
    return out


@dataclass
class ImplicationReport:
    dims: Tuple[int, ...]
    trials: int
    seed: int
    graded: bool
    holds: Dict[str, int]
    # violations[a][b]: samples where a holds and b fails
    violations: Dict[str, Dict[str, int]]
    theorem1_violations: int
    # samples satisfying JIantiI and JIantiII but not FFas
    theorem2_violations: int
    examples: Dict[str, Dict]

    def to_record(self) -> Dict:
        return {
            "dims": list(self.dims),
            "trials": self.trials,
            "seed": self.seed,
            "graded": self.graded,
            "holds": self.holds,
            "violations": self.violations,
            "theorem1_violations": self.theorem1_violations,
            "theorem2_violations": self.theorem2_violations,
            "examples": self.examples,
        }

    def implies(self, a: str, b: str) -> bool:
        return self.violations[a][b] == 0

    def lines(self) -> List[str]:
        names = list(FUZZ_IDENTITIES)
        out = [
            f"fuzz: dims={list(self.dims)} trials={self.trials} seed={self.seed} graded={self.graded}",
            "identity satisfaction counts:",
        ]
        out += [f"  {n:<9} {self.holds[n]}" for n in names]
        out.append("counterexamples to 'row holds => column holds':")
        out.append("  " + " " * 9 + "".join(f"{n:>9}" for n in names))
        for a in names:
            out.append(f"  {a:<9}" + "".join(f"{self.violations[a][b]:>9}" for b in names))
        out.append(f"FFas <=> FunII violations: {self.theorem1_violations}")
        out.append(f"JIantiI & JIantiII => FFas violations: {self.theorem2_violations}")
        for key, ex in self.examples.items():
            out.append(f"example {key}: dim={ex['dim']} parity={ex['parity']} F={ex['F']}")
        return out


def fuzz_implications(dims: Sequence[int], trials: int, seed: int, graded: bool = True) -> ImplicationReport:
    """Sample random tensors and tabulate which identities imply which.

    Deterministic in ``seed``.  With ``graded`` set, every sample gets a
    random parity vector and the graded forms of the identities are used.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    dims = tuple(dims)
    rng = random.Random(seed)
    names = FUZZ_IDENTITIES
    holds = {n: 0 for n in names}
    violations = {a: {b: 0 for b in names} for a in names}
    thm1 = thm2 = 0
    examples: Dict[str, Dict] = {}
    for _ in range(trials):
        dim = rng.choice(dims)
        par = tuple(rng.randint(0, 1) for _ in range(dim)) if graded else (0,) * dim
        A = random_tensor(rng, dim, par, rng.uniform(0.05, 0.5))
        v = identity_verdicts(A)
        for a in names:
            holds[a] += v[a]
            for b in names:
                if v[a] and not v[b]:
                    violations[a][b] += 1
        if v["FFas"] != v["FunII"]:
            thm1 += 1
            examples.setdefault("theorem1_violation", _example(A))
        if v["JIantiI"] and v["JIantiII"] and not v["FFas"]:
            thm2 += 1
            examples.setdefault("theorem2_violation", _example(A))
        if v["JI"] and not v["FunII"]:
            examples.setdefault("JI_without_FunII", _example(A))
        if v["FFas"] and A.F:
            examples.setdefault("nonzero_associative", _example(A))
    return ImplicationReport(dims, trials, seed, graded, holds, violations, thm1, thm2, examples)


def _example(A: StructureTensor) -> Dict:
    return {"dim": A.dim, "parity": list(A.parity), "F": _table_to_json(A.F)}
