"""Graph-diagonal intersection route to the TQFT trace.

The trace of kappa_n can be recast as an intersection number in the product
of two copies of Sym^{n+N}: a diagonal-type class built from the handle
curves and a graph-type class built from the monodromy.  Evaluating their
cup product on the fundamental class must reproduce the trace exactly; that
agreement pins every duality and Kunneth sign convention in the library.

The diagonal class is stored in the converted form

    D* = sum_beta (c_0 ^ .. ^ c_{N-1} ^ beta) x (d_0 ^ .. ^ d_{N-1} ^ beta)*

with the dual taken in the ambient symmetric power.  For N = 0 this is the
classical diagonal sum_b b x b*.  The graph class twists the diagonal by
the inverse of the homology pushforward, which for a stored pullback matrix
A is A itself.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .sympower import (Monomial, SymClass, SymSpace, apply_induced,
                       basis_index, dual_basis, enumerate_basis, gram_matrix)
from .tqft import Presentation


@dataclass(frozen=True)
class ProductClass:
    """Integer combination of monomial pairs in Sym^m x Sym^m."""

    space: SymSpace
    terms: Tuple[Tuple[Monomial, Monomial, int], ...]

    def __init__(self, space: SymSpace, terms: Dict[Tuple[Monomial, Monomial], int]):
        object.__setattr__(self, "space", space)
        cleaned = []
        for (a, b), c in terms.items():
            if c == 0:
                continue
            if not (space.contains(a) and space.contains(b)):
                raise ValueError("monomial exceeds the space bound")
            cleaned.append((a, b, c))
        cleaned.sort(key=lambda t: (t[0].indices, t[0].q, t[1].indices, t[1].q))
        object.__setattr__(self, "terms", tuple(cleaned))

    def __len__(self) -> int:
        return len(self.terms)


def _handle_wedge(P: Presentation, beta: Monomial, use_d: bool) -> Monomial:
    """c_0^..^c_{N-1}^beta or d_0^..^d_{N-1}^beta as a split-basis monomial.

    The handle indices precede every shifted x index, so the concatenation
    is already ascending and the wedge sign is +1.
    """
    N = P.handles
    shifted = tuple(i + 2 * N for i in beta.indices)
    handles = tuple(range(N)) if not use_d else tuple(range(N, 2 * N))
    return Monomial(handles + shifted, beta.q)


def diagonal_class(P: Presentation, n: int) -> ProductClass:
    """Dual of the handle-torus diagonal in Sym^{n+N} x Sym^{n+N}.

    Sums over the middle-surface monomial basis.  Extending the sum over
    every split-basis monomial of power n would change nothing: a monomial
    containing a handle class kills either the c wedge or the d wedge by a
    repeated factor.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    N = P.handles
    space = SymSpace(P.surface, n + N)
    duals = dual_basis(space)
    terms: Dict[Tuple[Monomial, Monomial], int] = {}
    for beta in enumerate_basis(SymSpace(P.small_surface, n)):
        left = _handle_wedge(P, beta, use_d=False)
        right_src = _handle_wedge(P, beta, use_d=True)
        for m, c in duals[right_src].terms.items():
            key = (left, m)
            terms[key] = terms.get(key, 0) + c
    return ProductClass(space, terms)


def graph_class(P: Presentation, n: int) -> ProductClass:
    """Dual of the monodromy graph in Sym^{n+N} x Sym^{n+N}.

    The diagonal dual sum_a (-1)^{deg a} a* x a pushed through the inverse
    of the homology pushforward; with the monodromy stored as the pullback
    on H^1 that twist is the induced action of the stored matrix.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    space = SymSpace(P.surface, n + P.handles)
    duals = dual_basis(space)
    A = P.monodromy
    terms: Dict[Tuple[Monomial, Monomial], int] = {}
    for a in enumerate_basis(space):
        sign = -1 if a.degree & 1 else 1
        twisted = apply_induced(A, SymClass.monomial(space, a))
        for lm, lc in duals[a].terms.items():
            for rm, rc in twisted.terms.items():
                key = (lm, rm)
                terms[key] = terms.get(key, 0) + sign * lc * rc
    return ProductClass(space, terms)


def product_evaluate(u: ProductClass, v: ProductClass) -> int:
    """Evaluate the cup product of two product classes on the fundamental class.

    Bilinear in the monomial pairs: ((a x b), (c x d)) contributes the
    Kunneth sign (-1)^{deg b deg c} times the duality pairings <a, c> and
    <b, d>.  Assembled through the Gram matrix so the double sum stays
    quadratic in the space dimension.
    """
    if u.space != v.space:
        raise ValueError("product classes live over different powers")
    space = u.space
    index = basis_index(space)
    gram = gram_matrix(space)
    basis = enumerate_basis(space)
    d = len(basis)
    # M1[b][c] = sum over u-terms (a x b) of coeff * <a, c>
    M1: Dict[Tuple[int, int], int] = {}
    for a, b, cu in u.terms:
        ia = index[a]
        ib = index[b]
        row = gram[ia]
        for ic in range(d):
            if row[ic]:
                key = (ib, ic)
                M1[key] = M1.get(key, 0) + cu * row[ic]
    # M2[c][b] = sum over v-terms (c x e) of coeff * <b, e>
    M2: Dict[Tuple[int, int], int] = {}
    for c, e, cv in v.terms:
        ic = index[c]
        ie = index[e]
        for ib in range(d):
            g = gram[ib][ie]
            if g:
                key = (ic, ib)
                M2[key] = M2.get(key, 0) + cv * g
    total = 0
    for (ib, ic), m1 in M1.items():
        m2 = M2.get((ic, ib))
        if m2:
            sign = -1 if (basis[ib].degree * basis[ic].degree) & 1 else 1
            total += sign * m1 * m2
    return total


def intersection_number(P: Presentation, n: int) -> int:
    """D . Gamma for the presentation, equal to the graded trace of kappa_n."""
    return product_evaluate(diagonal_class(P, n), graph_class(P, n))
