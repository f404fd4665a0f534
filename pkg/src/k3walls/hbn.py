"""Classical and pencil-adapted Brill-Noether numerics.

Covers the expected-dimension counts: rho, its gonality-adjusted maximum
rho_k, the decomposition of an index ell into balanced multiplicities, the
degeneracy-locus dimension bookkeeping, section counts of pencil powers, and
splitting types of pushforwards to the projective line.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, OracleViolation


def rho(g: int, r: int, d: int) -> int:
    """Brill-Noether number g - (r+1)(g-d+r).  Accepts any integers."""
    return g - (r + 1) * (g - d + r)


def rho_k(g: int, k: int, r: int, d: int) -> tuple[int, list[int]]:
    """max over 0 <= ell <= r of rho(g, r-ell, d) - ell*k, with all maximizers."""
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r}", code="bad_rank")
    values = [rho(g, r - ell, d) - ell * k for ell in range(r + 1)]
    best = max(values)
    return best, [ell for ell, v in enumerate(values) if v == best]


@dataclass(frozen=True)
class EllDecomposition:
    """Balanced data (e, m1, m2) attached to an index ell.

    Satisfies r+1 = m1(e+2) + m2(e+1) and ell = e(r+1-ell) + m1.
    """

    ell: int
    e: int
    m1: int
    m2: int


def ell_decompose(r: int, ell: int) -> EllDecomposition:
    """Split ell as e(r+1-ell) + m1 with e = floor(ell/(r+1-ell))."""
    if not 0 <= ell <= r:
        raise DomainError(f"need 0 <= ell <= r, got ell={ell}, r={r}", code="ell_out_of_range")
    width = r + 1 - ell
    e, m1 = divmod(ell, width)
    return EllDecomposition(ell=ell, e=e, m1=m1, m2=width - m1)


@dataclass(frozen=True)
class DegeneracyDims:
    """Numerics of the multiplication-map degeneracy locus at index ell."""

    s: int
    rk_e: int
    rk_f: int
    expected_dim: int


def degeneracy_dims(g: int, k: int, d: int, r: int, ell: int) -> DegeneracyDims:
    """Ranks and expected dimension of the degeneracy-locus model.

    The result is cross-checked against the closed form rho(g, r-ell, d) - ell*k;
    a mismatch would be an implementation bug and raises OracleViolation.
    """
    if d > g - 1:
        raise DomainError(f"need d <= g-1, got d={d}, g={g}", code="degree_out_of_range")
    if not max(0, r + 2 - k) <= ell <= r:
        raise DomainError(
            f"need max(0, r+2-k) <= ell <= r, got ell={ell} for r={r}, k={k}",
            code="ell_out_of_range",
        )
    dec = ell_decompose(r, ell)
    e, m1 = dec.e, dec.m1
    s = g - d + r + e * (k - r - 1 + ell)
    rk_e = g + m1 - 1 + (e + 1) * k - d
    rk_f = g + (e + 2) * k - d - 1
    expected = rho(g, m1 - 1, d - (e + 1) * k) - s * (rk_f - 2 * rk_e + s)
    closed_form = rho(g, r - ell, d) - ell * k
    if expected != closed_form:
        raise OracleViolation(
            f"degeneracy dimension {expected} != {closed_form} "
            f"at (g,k,d,r,ell)=({g},{k},{d},{r},{ell})"
        )
    return DegeneracyDims(s=s, rk_e=rk_e, rk_f=rk_f, expected_dim=expected)


def pencil_power_h0(g: int, k: int, a: int) -> int:
    """Sections of the a-th power of a degree-k pencil: max(ak+1-g, a+1)."""
    if a < 0:
        raise DomainError(f"pencil power must be >= 0, got {a}", code="bad_pencil_power")
    return max(a * k + 1 - g, a + 1)


@dataclass(frozen=True)
class SplittingType:
    """Multidegree {(f_i, n_i)} of a pushforward to the line, f_1 > ... > f_q."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        fs = [f for f, _ in self.pairs]
        if any(n <= 0 for _, n in self.pairs):
            raise DomainError("splitting multiplicities must be positive", code="ill_formed_splitting")
        if any(a <= b for a, b in zip(fs, fs[1:])):
            raise DomainError("splitting degrees must strictly decrease", code="ill_formed_splitting")

    def values(self) -> list[int]:
        """Degrees expanded with multiplicity, descending."""
        return [f for f, n in self.pairs for _ in range(n)]

    def rank(self) -> int:
        return sum(n for _, n in self.pairs)

    def degree(self) -> int:
        return sum(f * n for f, n in self.pairs)

    def to_list(self) -> list[list[int]]:
        return [[f, n] for f, n in self.pairs]


def splitting_to_json(g: int, k: int, d: int, st: SplittingType) -> dict:
    """Wire format: the [[f, n], ...] pairs with their declared context."""
    return {"context": {"g": g, "k": k, "d": d}, "pairs": st.to_list()}


def splitting_from_json(payload: dict) -> tuple[int, int, int, SplittingType]:
    try:
        ctx = payload["context"]
        g, k, d = int(ctx["g"]), int(ctx["k"]), int(ctx["d"])
        st = SplittingType(tuple((int(f), int(n)) for f, n in payload["pairs"]))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(f"malformed splitting payload: {payload!r}", code="bad_splitting") from exc
    return g, k, d, st


def splitting_nonneg_part(g: int, k: int, d: int, st: SplittingType) -> SplittingType:
    """Validate a splitting type against (g, k, d) and return its f >= 0 part."""
    if d > g - 1:
        raise DomainError(f"need d <= g-1, got d={d}, g={g}", code="degree_out_of_range")
    if st.rank() != k:
        raise DomainError(
            f"rank mismatch: multiplicities sum to {st.rank()}, expected k={k}", code="rank_mismatch"
        )
    if st.pairs[-1][0] >= 0:
        raise DomainError("no negative summand", code="no_negative_summand")
    want = d + 1 - g - k
    if st.degree() != want:
        raise DomainError(
            f"degree mismatch: degrees sum to {st.degree()}, expected {want}", code="degree_mismatch"
        )
    return SplittingType(tuple((f, n) for f, n in st.pairs if f >= 0))


def balanced_correspondence(nonneg: Iterable[int] | Sequence[int]) -> tuple[int, int, int]:
    """Read balanced data (e, m1, m2) off the nonnegative degrees.

    The degrees must occupy at most two consecutive levels {e+1, e}; a single
    level f with multiplicity n maps to (f, 0, n).
    """
    values = sorted(nonneg, reverse=True)
    if not values or any(v < 0 for v in values):
        raise DomainError("not balanced", code="not_balanced")
    levels = sorted(set(values), reverse=True)
    if len(levels) == 1:
        return levels[0], 0, len(values)
    if len(levels) == 2 and levels[0] == levels[1] + 1:
        m1 = values.count(levels[0])
        return levels[1], m1, len(values) - m1
    raise DomainError("not balanced", code="not_balanced")
