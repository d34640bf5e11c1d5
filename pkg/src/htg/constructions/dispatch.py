"""Choosing a construction for a pair and turning it into a checked certificate.

Every builder works on the canonical parameters (l <= n/2).  A pair is moved to
``(u_{0,0}, w)``, the builder's family is searched for a factor and a group
element separating it, and the result is carried back to the original pair and
graph, then re-verified from scratch.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .. import symmetry
from ..core import HtgParams, Vertex, build_graph, canonicalize, flip_levels, validate
from ..errors import (
    HtgError,
    InternalVerificationFailed,
    NoDecomposition,
    SameVertex,
    TooLarge,
    Unsupported,
)
from ..factor import SeparationCertificate, TwoFactor, from_edges_unchecked, separates, verify_factor
from . import even, odd, one_column, two_columns
from .family import Candidate, coverage, grown_family, normalize_pair
from .frobenius import bound_even, bound_odd


@dataclass(frozen=True)
class Builder:
    name: str
    statement: str
    hypothesis: Callable[[HtgParams], bool]
    family: Callable[[HtgParams], Iterable[Candidate]] | None


def _odd(m: int) -> bool:
    return m % 2 == 1


def _alpha_ok(p: HtgParams) -> bool:
    return p.m == 1 and _odd(p.ell) and p.ell > 3 and p.n > 2 * p.ell


def _beta_ok(p: HtgParams) -> bool:
    return p.m == 2 and p.ell % 2 == 0 and p.ell > 2 and p.n >= 2 * p.ell


def _oddgen_ok(p: HtgParams) -> bool:
    return _odd(p.m) and _odd(p.ell) and p.ell > 3 and p.n > bound_odd(p.ell)


def _evengen_ok(p: HtgParams) -> bool:
    return p.m % 2 == 0 and p.ell % 2 == 0 and p.ell >= 4 and p.n > bound_even(p.ell)


def _l3_ok(p: HtgParams) -> bool:
    return _odd(p.m) and p.ell == 3 and ((p.m >= 3 and p.n >= 8) or (p.m >= 5 and p.n == 6))


BUILDERS: dict[str, Builder] = {
    b.name: b
    for b in [
        Builder(
            "O3",
            "HTG(1,n,3) with n = 0 mod 4 and n > 6",
            lambda p: p.m == 1 and p.ell == 3 and p.n % 4 == 0 and p.n > 6,
            one_column.o3_candidates,
        ),
        Builder(
            "alpha",
            "HTG(1,n,l) with odd l > 3 and n - 2l a positive combination of l+1 and 3l+1",
            _alpha_ok,
            one_column.alpha_candidates,
        ),
        Builder("zero", "HTG(2,n,0) for every even n >= 4", lambda p: p.m == 2 and p.ell == 0, None),
        Builder(
            "beta",
            "HTG(2,n,l) with even l > 2 and n - 2l a nonnegative combination of l+2 and l",
            _beta_ok,
            two_columns.beta_candidates,
        ),
        Builder(
            "L1",
            "HTG(m,n,1) with odd m >= 3 and n > 4",
            lambda p: _odd(p.m) and p.m >= 3 and p.ell == 1 and p.n > 4,
            lambda p: grown_family(p, 3, odd.l1_candidates),
        ),
        Builder(
            "L3",
            "HTG(m,n,3) with odd m >= 3 and n >= 8, or odd m >= 5 and n = 6",
            _l3_ok,
            lambda p: grown_family(p, 3 if p.n >= 8 else 5, odd.l3_candidates),
        ),
        Builder(
            "oddgen",
            "HTG(m,n,l) with odd m, odd l > 3 and n > (3l^2 - 4l - 3)/2",
            _oddgen_ok,
            lambda p: grown_family(p, 1, lambda q: one_column.alpha_candidates(q, allow_search=True)),
        ),
        Builder(
            "L0",
            "HTG(m,n,0) with even m >= 4 and n > 4",
            lambda p: p.m % 2 == 0 and p.m >= 4 and p.ell == 0 and p.n > 4,
            lambda p: grown_family(p, 4, even.l0_candidates),
        ),
        Builder(
            "L2",
            "HTG(m,n,2) with even m >= 4 and n >= 6",
            lambda p: p.m % 2 == 0 and p.m >= 4 and p.ell == 2 and p.n >= 6,
            lambda p: grown_family(p, 4, even.l2_candidates),
        ),
        Builder(
            "evengen",
            "HTG(m,n,l) with even m, even l >= 4 and n > (l^2 + 2l - 4)/2",
            _evengen_ok,
            lambda p: grown_family(p, 2, two_columns.beta_candidates),
        ),
    ]
}

THEOREMS = ("auto", *BUILDERS, "oracle")


def choose(params: HtgParams) -> str | None:
    """The builder ``auto`` uses for canonical params, or None when no construction applies."""
    p = params
    if p.m == 2 and p.ell == 0:
        return "zero"
    order = ["O3", "alpha", "beta", "L1", "L3", "L0", "L2", "oddgen", "evengen"]
    for name in order:
        b = BUILDERS[name]
        if not b.hypothesis(p):
            continue
        if name == "alpha" and one_column.alpha_decomposition(p.n, p.ell) is None:
            continue
        if name == "beta" and two_columns.beta_decomposition(p.n, p.ell) is None:
            continue
        return name
    return None


@functools.lru_cache(maxsize=32)
def _coverage(name: str, params: HtgParams) -> tuple[np.ndarray, list[Candidate], np.ndarray]:
    return coverage(params, BUILDERS[name].family(params))


def _require(name: str, params: HtgParams) -> None:
    b = BUILDERS[name]
    if not b.hypothesis(params):
        raise Unsupported(f"{name} needs {b.statement}; {params} is outside it", name)
    if name == "alpha" and one_column.alpha_decomposition(params.n, params.ell) is None:
        raise NoDecomposition(
            f"alpha needs {b.statement}; {params.n} - {2 * params.ell} has no such decomposition", name
        )
    if name == "beta" and two_columns.beta_decomposition(params.n, params.ell) is None:
        raise NoDecomposition(
            f"beta needs {b.statement}; {params.n} - {2 * params.ell} has no such decomposition", name
        )


def _canonical_factor(name: str, canon: HtgParams, x: Vertex, y: Vertex) -> tuple[TwoFactor, str]:
    if name == "zero":
        return two_columns.zero_factor(canon.n, x, y)
    norm = normalize_pair(canon, x, y)
    cand_index, used, g_index = _coverage(name, canon)
    w = norm.w.i * canon.n + norm.w.j
    if cand_index[w] < 0:
        raise Unsupported(f"{name} family does not separate u_{{0,0}} from {norm.w} in {canon}", name)
    cand = used[cand_index[w]]
    g = symmetry.element_at(canon, int(g_index[w]))
    # g maps (u00, w) into a pair the candidate separates; undo g, then the normalization
    back = norm.inverse()[g.inverse().permutation()]
    factor = symmetry.apply_to_factor(back, cand.factor)
    steps = [cand.label]
    if not g.is_identity:
        steps.append(f"g={g}")
    if norm.steps:
        steps.append(f"pair moved by {norm.steps}")
    return factor, "; ".join(steps)


def _oracle_factor(params: HtgParams, x: Vertex, y: Vertex, max_order: int) -> TwoFactor:
    from ..oracle import decide_pair

    decision = decide_pair(build_graph(params), x, y, max_order=max_order)
    if not decision.separable:
        raise Unsupported(f"no 2-factor of {params} separates {x} and {y}", "oracle")
    return decision.witness


def separate(
    params: HtgParams,
    x: Vertex | tuple[int, int],
    y: Vertex | tuple[int, int],
    theorem: str = "auto",
    max_order: int = 48,
) -> SeparationCertificate:
    """A verified certificate that some 2-factor of HTG(params) separates x and y."""
    params = validate(params.m, params.n, params.ell)
    graph = build_graph(params)
    x, y = Vertex(*x), Vertex(*y)
    graph.index(x)
    graph.index(y)
    if x == y:
        raise SameVertex(f"cannot separate {x} from itself")
    if theorem not in THEOREMS:
        raise Unsupported(f"unknown construction {theorem!r}; choose from {', '.join(THEOREMS)}")

    canon = canonicalize(params)
    flipped = canon != params
    cx, cy = (flip_levels(params, x), flip_levels(params, y)) if flipped else (x, y)

    name = theorem
    if name == "auto":
        name = choose(canon) or "oracle"
        if name == "oracle" and canon.order > max_order:
            raise Unsupported(
                f"no construction covers {canon} and it exceeds the oracle cap of {max_order} vertices", "auto"
            )

    if name == "oracle":
        try:
            factor = _oracle_factor(params, x, y, max_order)
        except TooLarge as exc:
            raise Unsupported(str(exc), "oracle") from exc
        provenance = "oracle | first witness in matching order"
        return _finish(params, x, y, factor.edges, provenance)

    _require(name, canon)
    factor, detail = _canonical_factor(name, canon, cx, cy)
    edges = factor.edges
    if flipped:
        n = params.n
        flip = np.array([(k // n) * n + (-(k % n)) % n for k in range(params.order)])
        edges = frozenset(tuple(sorted((int(flip[a]), int(flip[b])))) for a, b in edges)
        detail += "; levels negated from " + str(canon)
    return _finish(params, x, y, edges, f"{name} | {detail}")


def _finish(params: HtgParams, x: Vertex, y: Vertex, edges, provenance: str) -> SeparationCertificate:
    try:
        factor = verify_factor(build_graph(params), edges)
    except HtgError as exc:
        raise InternalVerificationFailed(f"{provenance}: {exc}") from exc
    if not separates(factor, x, y):
        raise InternalVerificationFailed(f"{provenance}: factor does not separate {x} and {y}")
    return SeparationCertificate(params, (x, y), factor, provenance)


def _named(name: str) -> Callable[..., SeparationCertificate]:
    def build(params: HtgParams, pair: tuple) -> SeparationCertificate:
        return separate(params, pair[0], pair[1], theorem=name)

    build.__name__ = f"build_{name}"
    build.__doc__ = f"Certificate from the {name} construction ({BUILDERS[name].statement})."
    return build


def build_O3(n: int, pair: tuple) -> SeparationCertificate:
    return separate(validate(1, n, 3), pair[0], pair[1], theorem="O3")


def build_alpha(ell: int, n: int, pair: tuple) -> SeparationCertificate:
    return separate(validate(1, n, ell), pair[0], pair[1], theorem="alpha")


def build_zero(n: int, pair: tuple) -> SeparationCertificate:
    return separate(validate(2, n, 0), pair[0], pair[1], theorem="zero")


def build_beta(ell: int, n: int, pair: tuple) -> SeparationCertificate:
    return separate(validate(2, n, ell), pair[0], pair[1], theorem="beta")


build_L1 = _named("L1")
build_L3 = _named("L3")
build_oddgen = _named("oddgen")
build_L0 = _named("L0")
build_L2 = _named("L2")
build_evengen = _named("evengen")
