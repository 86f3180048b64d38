"""n-ary identity families for associative algebras.

Generators are 0-based indices rendered as X1..Xn.  All families are
ordinary (all generators even); no graded versions are generated.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from superjacobi.catalog import CATALOG
from superjacobi.expr import Expr, Identity, add, anti, comm, cyclic_sum, gens, render, word
from superjacobi.formal import FormalElement, formal, formal_difference, generator_commutator_form, labelled
from superjacobi.free import FreeAlgebra, check_identity, expand, expand_raw
from superjacobi.reports import DerivationReport, render_residual

MAX_N = 9


def names(n: int) -> Tuple[str, ...]:
    return tuple(f"X{i + 1}" for i in range(n))


def _check_n(n: int, lo: int, family: str, cap: int):
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("n must be an integer")
    if n < lo:
        raise ValueError(f"{family} family needs n >= {lo}, got {n}")
    if n > cap:
        raise ValueError(f"n = {n} exceeds the cap {cap}")


def _rot(start: int, n: int, length: int) -> Expr:
    """The word X_start X_start+1 ... (indices mod n) of the given length."""
    return word(*[(start + t) % n for t in range(length)])


def _c(k: int, n: int) -> Expr:
    """[X_k, X_k+1 ... X_k-1]: generator k against the rest in cyclic order."""
    return comm(word(k), _rot(k + 1, n, n - 1))


def _a(k: int, n: int) -> Expr:
    return anti(word(k), _rot(k + 1, n, n - 1))


def gen_fundamental_n(n: int, cap: int = MAX_N) -> Identity:
    """[X1, X2...Xn] + cycle(X1..Xn)."""
    _check_n(n, 3, "fundamental", cap)
    return Identity(f"GenId{n}", n, add([_c(k, n) for k in range(n)]))


def gen_mixed_n(n: int, cap: int = MAX_N) -> Identity:
    """[X1, X2...Xn] - {Xn, X1...Xn-1} + {Xn-1, XnX1...Xn-2}
    + [Xn-2, ...] + ... + [X2, X3...XnX1]."""
    _check_n(n, 4, "mixed", cap)
    terms = [_c(0, n), -_a(n - 1, n), _a(n - 2, n)]
    terms += [_c(k, n) for k in range(n - 3, 0, -1)]
    return Identity(f"FunmII{n}", n, add(terms))


def gen_helper_n(n: int, cap: int = MAX_N) -> Identity:
    """[Xn, X1...Xn-1] + [Xn-1, XnX1...Xn-2] + {Xn, X1...Xn-1} - {Xn-1, XnX1...Xn-2}."""
    _check_n(n, 2, "helper", cap)
    terms = [_c(n - 1, n), _c(n - 2, n), _a(n - 1, n), -_a(n - 2, n)]
    return Identity(f"FunmuII{n}", n, add(terms))


def gen_jacobi3() -> Identity:
    """[X1, X2X3] - [X2, X1X3] + cycle(X1, X2, X3)."""
    block = comm(word(0), word(1, 2)) - comm(word(1), word(0, 2))
    return Identity("GenJI3our", 3, cyclic_sum(block, 3))


def jacobi_nested() -> Identity:
    """[[X1,X2],X3] + [[X3,X1],X2] + [[X2,X3],X1]."""
    x1, x2, x3 = gens(3)
    return Identity("JI-nested", 3, comm(comm(x1, x2), x3) + comm(comm(x3, x1), x2) + comm(comm(x2, x3), x1))


def wever4() -> Identity:
    x1, x2, x3, x4 = gens(4)
    e = (
        comm(comm(comm(x1, x2), x3), x4)
        + comm(comm(comm(x2, x1), x4), x3)
        + comm(comm(comm(x3, x4), x1), x2)
        + comm(comm(comm(x4, x3), x2), x1)
    )
    return Identity("GenJI4", 4, e)


def fundamental_on(seq: Sequence[int]) -> Expr:
    """[a1, a2...am] + [a2, a3...am a1] + ...: the fundamental form on an
    argument sequence, rotating positions rather than labels."""
    m = len(seq)
    return add([comm(word(seq[k]), word(*[seq[(k + t) % m] for t in range(1, m)])) for k in range(m)])


# heads of the four terms of the n = 4 word form, with their signs
GENJI4_TERMS = ((1, (0, 1, 2, 3)), (-1, (1, 0, 2, 3)), (1, (3, 2, 1, 0)), (-1, (3, 2, 0, 1)))


def genji4_word_form() -> Identity:
    """[X1,X2X3X4] - [X2,X1X3X4] + [X4,X3X2X1] - [X4,X3X1X2] + cycle.

    "cycle" rotates the argument sequence of each term, so every term
    stands for one instance of the fundamental form on four arguments.
    For three arguments this agrees with cycling the labels; for four it
    does not, and the label reading is not an identity
    (see :func:`genji4_label_cycle`).
    """
    return Identity("GenJI4our1", 4, add([s * fundamental_on(seq) for s, seq in GENJI4_TERMS]))


def genji4_label_cycle() -> Expr:
    """The same four terms summed over X_i -> X_i+1 (mod 4)."""
    block = add([s * comm(word(seq[0]), word(*seq[1:])) for s, seq in GENJI4_TERMS])
    return cyclic_sum(block, 4)


def proportional(a: FormalElement, b: FormalElement) -> Optional[Fraction]:
    """The scalar r with a = r * b, or None."""
    if not a and not b:
        return Fraction(1)
    if set(a) != set(b):
        return None
    t0 = next(iter(b))
    r = a[t0] / b[t0]
    return r if all(a[t] == r * b[t] for t in b) else None


def _zero(n: int) -> Tuple[int, ...]:
    return (0,) * n


def verify(ident: Identity):
    return check_identity(ident, _zero(ident.arity))


def raw_term_count(ident: Identity) -> int:
    return len(expand_raw(ident.expr, _zero(ident.arity)))


def wever_check() -> DerivationReport:
    par = _zero(4)
    alg = FreeAlgebra(par)
    report = DerivationReport("generalized Jacobi identity, n = 4")
    w, k = wever4(), genji4_word_form()

    r = verify(w)
    report.add("GenJI4 expands to zero", r.holds, r.describe())
    r = verify(k)
    literal = expand(genji4_label_cycle(), alg)
    report.add(
        "GenJI4our1 expands to zero",
        r.holds,
        f"{r.describe()}; cycling labels instead of argument positions "
        f"leaves {len(literal.terms)} nonzero words",
    )

    wf = formal(generator_commutator_form(w.expr, par), par)
    kf = formal(k.expr, par)
    factor = proportional(wf, kf)
    detail = f"{len(wf)} formal [Xa, word] terms"
    if factor is None:
        diff = formal_difference(wf, kf)
        detail += f"; residual {render_residual(labelled(diff, 4))}"
    else:
        detail += f"; GenJI4 = {factor} * GenJI4our1"
    report.add("GenJI4 rewritten as [Xa, word] terms matches GenJI4our1", factor in (1, -1), detail)

    same = expand(w.expr, alg) == expand(k.expr, alg)
    raw_w = sorted(expand_raw(w.expr, par))
    raw_k = sorted((-c, t) for c, t in expand_raw(k.expr, par))
    report.add(
        "expansions coincide",
        same,
        ("both are the zero element" if same else "expansions differ")
        + f"; raw word lists {'agree' if raw_w == raw_k else 'differ'} up to the overall sign",
    )
    return report


def jacobi3_check() -> DerivationReport:
    par = _zero(3)
    report = DerivationReport("Jacobi identity from the n = 3 word form")
    g = gen_jacobi3()
    r = verify(g)
    report.add("GenJI3our expands to zero", r.holds, r.describe())
    gf = formal(g.expr, par)
    for other in (jacobi_nested(), CATALOG["JI"]):
        of = formal(generator_commutator_form(other.expr, par), par)
        factor = proportional(of, gf)
        report.add(
            f"{other.name} rewritten as [Xa, word] terms matches GenJI3our",
            factor in (1, -1),
            "not proportional" if factor is None else f"{other.name} = {factor} * GenJI3our",
        )
    positional = formal(fundamental_on((0, 1, 2)) - fundamental_on((1, 0, 2)), par)
    report.add("cycling positions gives the same form", positional == gf, "GenId(X1,X2,X3) - GenId(X2,X1,X3)")
    raw_g = sorted(expand_raw(g.expr, par))
    raw_j = sorted(expand_raw(jacobi_nested().expr, par))
    report.add("raw word expansions coincide", raw_g == raw_j, f"{len(raw_g)} words each")
    return report


def chain_check(ns: Sequence[int] = (4, 5, 6)) -> DerivationReport:
    """FunmII = GenId - FunmuII, and cyclic-sum(FunmII) = (n-2) GenId, on
    formal brackets."""
    report = DerivationReport("mixed-family derivation chain")
    for n in ns:
        par = _zero(n)
        fund, mixed, helper = gen_fundamental_n(n), gen_mixed_n(n), gen_helper_n(n)
        diff = formal(mixed.expr + helper.expr - fund.expr, par)
        report.add(f"n={n}: FunmII + FunmuII = GenId", not diff,
                   render_residual(labelled(diff, n)) if diff else "formal terms agree")
        anti_part = cyclic_sum(_a(n - 1, n) - _a(n - 2, n), n)
        diff = formal(anti_part, par)
        report.add(f"n={n}: anticommutator terms cancel over cycles", not diff,
                   render_residual(labelled(diff, n)) if diff else "")
        diff = formal(cyclic_sum(mixed.expr, n) - (n - 2) * fund.expr, par)
        report.add(f"n={n}: cyclic-sum(FunmII) = {n - 2} * GenId", not diff,
                   render_residual(labelled(diff, n)) if diff else "formal terms agree")
    return report


FAMILIES = {
    "fundamental": gen_fundamental_n,
    "mixed": gen_mixed_n,
    "helper": gen_helper_n,
}


def family_report(family: str, n: int) -> Dict:
    """Expression, rendering and verdict for one family member."""
    ident = FAMILIES[family](n)
    r = verify(ident)
    return {
        "family": family,
        "n": n,
        "identity": ident,
        "text": render(ident.expr, names(n)),
        "result": r,
        "raw_terms": raw_term_count(ident),
    }
