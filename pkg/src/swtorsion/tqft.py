"""Compression-body presentations M(g, N, h) and their trace invariants.

A presentation is a pair of mirrored compression bodies over a genus g + N
surface glued by a monodromy h, recorded by its pullback matrix on H^1 in
the split basis (c_0..c_{N-1}, d_0..d_{N-1}, x_0..x_{2g-1}).  The endomorphism
kappa_n of H^*(Sym^{n+N}) composes a contraction by the handle curves, the
wedge back in, and the monodromy action; its graded trace is the averaged
Seiberg-Witten invariant in the matching spin-c degree.  The same numbers
come out of the zeta function of the monodromy times the Morse-complex
torsion, and verifying that identity is the library's purpose.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .linalg import rank_rational
from .series import TruncSeries, geometric_inverse_square
from .surface import (MappingClass, SurfaceModel, char_series,
                      exterior_power_trace, is_symplectic)
from .sympower import (Monomial, SymClass, SymEndo, SymSpace, apply_induced,
                       contract_class, enumerate_basis, graded_trace,
                       wedge_class)
from .torsion import torsion_representative


@dataclass(frozen=True)
class Presentation:
    """The data (g, N, monodromy) of a standardized 3-manifold M(g, N, h)."""

    genus: int
    handles: int
    monodromy: MappingClass
    name: Optional[str] = None

    def __post_init__(self):
        if self.genus < 0 or self.handles < 0:
            raise ValueError("genus and handle count must be nonnegative")
        expected = SurfaceModel(self.genus + self.handles,
                                (self.handles, self.genus))
        if self.monodromy.surface != expected:
            raise ValueError("monodromy must act on the split surface "
                             f"of genus {self.genus + self.handles}")

    @property
    def surface(self) -> SurfaceModel:
        return self.monodromy.surface

    @property
    def small_surface(self) -> SurfaceModel:
        """The middle slice: unsplit surface of the core genus."""
        return SurfaceModel(self.genus)

    @classmethod
    def from_matrix(cls, genus: int, handles: int, rows,
                    name: Optional[str] = None) -> "Presentation":
        surface = SurfaceModel(genus + handles, (handles, genus))
        return cls(genus, handles, MappingClass(surface, rows), name)


def validate_presentation(genus, handles, rows) -> List[str]:
    """Diagnostics for raw presentation data; an empty list means valid.

    Checks the field types, the 2(g+N) matrix size, integrality, and the
    symplectic condition for the split intersection form.  Returns named
    violations instead of raising so callers can report all of them.
    """
    problems: List[str] = []
    if not isinstance(genus, int) or genus < 0:
        problems.append("genus: must be a nonnegative integer")
    if not isinstance(handles, int) or handles < 0:
        problems.append("handles: must be a nonnegative integer")
    if problems:
        return problems
    size = 2 * (genus + handles)
    if not isinstance(rows, (list, tuple)) or len(rows) != size or any(
            not isinstance(r, (list, tuple)) or len(r) != size for r in rows):
        problems.append(f"dimension: monodromy must be a {size}x{size} matrix")
        return problems
    for r in rows:
        for x in r:
            if not isinstance(x, int) or isinstance(x, bool):
                problems.append("integrality: matrix entries must be integers")
                return problems
    surface = SurfaceModel(genus + handles, (handles, genus))
    if not is_symplectic(rows, surface):
        problems.append("symplectic: matrix does not preserve the "
                        "intersection form (A^T J A = J fails)")
    return problems


def descend_map(P: Presentation, n: int, alpha: SymClass) -> SymClass:
    """First compression body: contract by c_0, then c_1, .. then c_{N-1},
    kill monomials still meeting the handle classes, and read the result in
    the basis of the middle surface."""
    big = SymSpace(P.surface, n + P.handles)
    if alpha.space != big:
        raise ValueError("class is not in the expected symmetric power")
    N = P.handles
    cur = alpha
    for i in range(N):
        cur = contract_class(P.surface.c_class(i), cur)
    small = SymSpace(P.small_surface, n)
    out = {}
    for m, c in cur.terms.items():
        if any(i < 2 * N for i in m.indices):
            continue
        key = Monomial(tuple(i - 2 * N for i in m.indices), m.q)
        out[key] = c
    return SymClass(small, out)


def ascend_map(P: Presentation, n: int, beta: SymClass) -> SymClass:
    """Second compression body: include into the split basis and wedge the
    handle classes so the result reads c_0 ^ .. ^ c_{N-1} ^ beta."""
    small = SymSpace(P.small_surface, n)
    if beta.space != small:
        raise ValueError("class is not in the expected symmetric power")
    N = P.handles
    mid = SymSpace(P.surface, n)
    lifted = SymClass(mid, {Monomial(tuple(i + 2 * N for i in m.indices), m.q): c
                            for m, c in beta.terms.items()})
    cur = lifted
    for i in reversed(range(N)):
        cur = wedge_class(P.surface.c_class(i), cur)
    return cur


def kappa_matrix(P: Presentation, n: int) -> SymEndo:
    """The TQFT endomorphism of H^*(Sym^{n+N}): monodromy after wedge after
    contraction, assembled column by column over the monomial basis."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    big = SymSpace(P.surface, n + P.handles)
    A = P.monodromy

    def column(m: Monomial) -> SymClass:
        down = descend_map(P, n, SymClass.monomial(big, m))
        if down.is_zero():
            return SymClass.zero(big)
        up = ascend_map(P, n, down)
        return apply_induced(A, up)

    return SymEndo.from_function(big, column)


def trace_kappa_coefficient(P: Presentation, n: int) -> int:
    """Graded trace of kappa_n by direct coefficient extraction.

    For each monomial beta of the middle surface, reads the coefficient of
    d_0 ^ .. ^ d_{N-1} ^ beta in the monodromy image of
    c_0 ^ .. ^ c_{N-1} ^ beta, weighted by (-1)^{|beta| + N}.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    N = P.handles
    A = P.monodromy
    big = SymSpace(P.surface, n + N)
    total = 0
    for beta in enumerate_basis(SymSpace(P.small_surface, n)):
        src = tuple(range(N)) + tuple(i + 2 * N for i in beta.indices)
        dst = Monomial(tuple(range(N, 2 * N)) + tuple(i + 2 * N for i in beta.indices),
                       beta.q)
        image = apply_induced(A, SymClass.monomial(big, Monomial(src, beta.q)))
        coeff = image.coefficient(dst)
        if coeff:
            sign = -1 if (beta.odd_part + N) & 1 else 1
            total += sign * coeff
    return total


def _zeta_of_mapping_class(A: MappingClass, kmax: int) -> TruncSeries:
    """Zeta function of the monodromy flow, cross-checked three ways.

    (a) exp of sum (2 - tr A^k) t^k / k, the signed fixed point count of
        the iterates;
    (b) the Lefschetz sum over exterior powers with multiplicity k - j + 1;
    (c) det(1 - tA) / (1 - t)^2.
    All three must agree with integer coefficients.
    """
    n = A.surface.rank
    # (a)
    traces = []
    power = A
    for k in range(1, kmax + 1):
        traces.append(power.trace())
        power = power.compose(A)
    log_term = TruncSeries(kmax, [0] + [Fraction(2 - traces[k - 1], k)
                                        for k in range(1, kmax + 1)])
    via_exp = log_term.exp()
    # (b)
    ext = [exterior_power_trace(A, j) for j in range(n + 1)]
    via_lefschetz = TruncSeries(kmax, [
        sum((-1) ** j * (k - j + 1) * ext[j] for j in range(min(k, n) + 1))
        for k in range(kmax + 1)])
    # (c)
    via_det = char_series(A, kmax) * geometric_inverse_square(kmax)
    if not (via_exp == via_lefschetz == via_det and via_det.is_integral()):
        raise RuntimeError("zeta cross-check failed: the three expansions "
                           "of the fixed point series disagree")
    return via_det


def zeta_series(P, kmax: int) -> TruncSeries:
    """Zeta function of a presentation's monodromy (or a bare mapping class)."""
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    A = P.monodromy if isinstance(P, Presentation) else P
    return _zeta_of_mapping_class(A, kmax)


def rhs_series(P: Presentation, nmax: int) -> TruncSeries:
    """Torsion-times-zeta side of the trace identity, indexed by n.

    The Morse matrix carries one factor of t per handle, so the product
    zeta * det starts at t^N; coefficient n of the trace identity is
    coefficient n + N of that product.  The shift is exact: the low
    coefficients vanish identically.
    """
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    N = P.handles
    order = nmax + N
    product = zeta_series(P, order) * torsion_representative(P, order)
    return product.shift_down(N)


@dataclass(frozen=True)
class VerificationRow:
    n: int
    lhs: int
    lhs_matrix: int
    rhs: int

    @property
    def match(self) -> bool:
        return self.lhs == self.lhs_matrix == self.rhs


@dataclass(frozen=True)
class VerificationReport:
    presentation: Presentation
    rows: Tuple[VerificationRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.match for r in self.rows)


def verify_main_identity(P: Presentation, nmax: int) -> VerificationReport:
    """Compare both trace routes against the torsion-times-zeta series.

    For each n up to nmax the direct coefficient trace, the graded trace of
    the assembled kappa matrix, and the series coefficient must agree
    exactly; mismatches are recorded, not raised.
    """
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    rhs = rhs_series(P, nmax)
    rows = []
    for n in range(nmax + 1):
        direct = trace_kappa_coefficient(P, n)
        via_matrix = graded_trace(kappa_matrix(P, n))
        coeff = rhs[n]
        rows.append(VerificationRow(n, direct, via_matrix,
                                    int(coeff) if coeff.denominator == 1 else coeff))
    return VerificationReport(P, tuple(rows))


def compute_b1(P: Presentation) -> int:
    """First Betti number of M(g, N, h).

    Mayer-Vietoris for the two compression bodies gives
    b_1 = 1 + (2G - N) - rank_Q(Q (1 - A^{-1})) where Q deletes the c rows
    and A^{-1} is the homology pushforward of the stored pullback.
    """
    G = P.genus + P.handles
    N = P.handles
    if G == 0:
        return 1
    Ainv = P.monodromy.inverse().mat
    M = tuple(tuple((1 if i == j else 0) - Ainv[i][j] for j in range(2 * G))
              for i in range(2 * G))
    dropped = tuple(M[i] for i in range(N, 2 * G))
    return 1 + (2 * G - N) - rank_rational(dropped)


@dataclass(frozen=True)
class SWRow:
    n: int
    m: int
    value: int


@dataclass(frozen=True)
class SWTable:
    """Averaged Seiberg-Witten invariants indexed by spin-c degree.

    ``mode`` records which degree map applied: for b_1 = 1 the degree is
    m = 2(n - g(S) + 1); for b_1 > 1 only |m| = 2(g(S) - 1 - n) is
    determined and rows list the nonnegative representative.  Negative
    symmetric power degrees carry vanishing invariants and are omitted.
    """

    presentation: Presentation
    b1: int
    mode: str
    rows: Tuple[SWRow, ...]
    note: str


def sw_table(P: Presentation, nmax: int) -> SWTable:
    """Tabulate Tr kappa_n with its spin-c degree label for n = 0..nmax."""
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    b1 = compute_b1(P)
    gS = P.genus + P.handles
    rows = []
    for n in range(nmax + 1):
        value = trace_kappa_coefficient(P, n)
        if b1 == 1:
            m = 2 * (n - gS + 1)
        else:
            m = 2 * (gS - 1 - n)
        rows.append(SWRow(n, m, value))
    mode = "b1=1" if b1 == 1 else "b1>1"
    note = ("negative symmetric power degrees have vanishing invariant sums; "
            "for b1>1 the degree column lists |m| and the invariant is "
            "symmetric under m -> -m only as far as the degree map states")
    return SWTable(P, b1, mode, tuple(rows), note)
