"""Stabilized common divisors of P1^k - 1 and P2^k - 1.

For multiplicatively independent polynomials the gcds gcd(P1^k-1, P2^k-1)
all divide one fixed polynomial F; this module tabulates the gcds up to a
horizon, reports the squarefree lcm as the canonical F, and certifies
multiplicative (in)dependence via a gcd-free basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .arith import GaussianRational, GR_ONE
from .config import RunConfig
from .errors import (
    ConstantInput,
    DependentInputs,
    HorizonTooSmall,
    ZeroInput,
    ZeroPolynomial,
)
from .polynomials import UniPoly, certified_roots, squarefree_decomposition, uni_gcd

INDEPENDENT = "INDEPENDENT"
DEPENDENT = "DEPENDENT"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class ARReport:
    table: List[Tuple[int, UniPoly]]
    stabilized_F: UniPoly
    stabilized_at: Optional[int]
    consistency: bool


@dataclass
class DependenceCertificate:
    kind: str
    m1: Optional[int] = None
    m2: Optional[int] = None


def gcd_power_shift(P1: UniPoly, P2: UniPoly, k: int) -> UniPoly:
    """Exact monic gcd(P1^k - 1, P2^k - 1)."""
    if P1.is_constant() or P2.is_constant():
        raise ConstantInput("power-shift gcd needs nonconstant polynomials")
    if k < 1:
        raise ValueError("k must be positive")
    one = UniPoly.one()
    return uni_gcd(P1 ** k - one, P2 ** k - one)


def multiplicity_profile(p: UniPoly) -> Dict[int, int]:
    """Total degree carried by each factor multiplicity of p."""
    if p.is_zero():
        raise ZeroPolynomial("multiplicity profile of the zero polynomial")
    out: Dict[int, int] = {}
    for f, mult in squarefree_decomposition(p):
        if f.degree > 0:
            out[mult] = out.get(mult, 0) + f.degree
    return out


# ---------------------------------------------------------------------------
# multiplicative independence
# ---------------------------------------------------------------------------


def _gcd_free_basis(polys: List[UniPoly]) -> List[UniPoly]:
    """Pairwise coprime monic polynomials generating the inputs as products."""
    basis: List[UniPoly] = []
    queue = [p.monic() for p in polys if p.degree > 0]
    while queue:
        q = queue.pop()
        if q.degree < 1:
            continue
        for idx, b in enumerate(basis):
            g = uni_gcd(q, b)
            if g.degree > 0:
                basis.pop(idx)
                queue.extend([b.exact_div(g).monic(), g, q.exact_div(g).monic()])
                break
        else:
            basis.append(q)
    return basis


def _exponents(p: UniPoly, basis: List[UniPoly]) -> List[int]:
    out = []
    rem = p.monic()
    for b in basis:
        e = 0
        while b.divides(rem):
            rem = rem.exact_div(b).monic()
            e += 1
        out.append(e)
    if rem.degree > 0:
        raise AssertionError("gcd-free basis failed to reconstruct an input")
    return out


def _constant_relation(c1: GaussianRational, c2: GaussianRational,
                       bound: int = 64) -> Optional[Tuple[int, int]]:
    """Small relation c1^m1 * c2^m2 = 1, searched over |m1| <= bound."""
    for m1 in range(0, bound + 1):
        for s1 in ((1,) if m1 == 0 else (1, -1)):
            lhs = c1 ** (s1 * m1)
            for m2 in range(0, bound + 1):
                if m1 == 0 and m2 == 0:
                    continue
                for s2 in ((1,) if m2 == 0 else (1, -1)):
                    if lhs * c2 ** (s2 * m2) == GR_ONE:
                        return s1 * m1, s2 * m2
    return None


def mult_independence(P1: UniPoly, P2: UniPoly) -> DependenceCertificate:
    """Decide whether P1^m1 * P2^m2 = 1 has a nontrivial integer solution.

    Works through a gcd-free basis, so no irreducible factorization is
    needed; the leading-constant relation is verified exactly.
    """
    if P1.is_zero() or P2.is_zero():
        raise ZeroInput("multiplicative independence of zero")
    c1, c2 = P1.lead(), P2.lead()
    if P1.is_constant() and P2.is_constant():
        rel = _constant_relation(c1, c2)
        if rel is not None:
            return DependenceCertificate(kind=DEPENDENT, m1=rel[0], m2=rel[1])
        if c1.norm() != 1 or c2.norm() != 1:
            # any relation forces both norms to be roots of unity in Q>0
            return DependenceCertificate(kind=INDEPENDENT)
        return DependenceCertificate(kind=INCONCLUSIVE)
    if P1.is_constant() or P2.is_constant():
        const = c1 if P1.is_constant() else c2
        for m in range(1, 5):
            if const ** m == GR_ONE:
                m1, m2 = (m, 0) if P1.is_constant() else (0, m)
                return DependenceCertificate(kind=DEPENDENT, m1=m1, m2=m2)
        return DependenceCertificate(kind=INDEPENDENT)

    basis = _gcd_free_basis([P1, P2])
    e1 = _exponents(P1, basis)
    e2 = _exponents(P2, basis)
    # kernel of the 2 x B exponent matrix: nontrivial iff e1 and e2 parallel
    j0 = next(i for i in range(len(basis)) if e1[i] or e2[i])
    m1, m2 = e2[j0], -e1[j0]
    if all(m1 * a + m2 * b == 0 for a, b in zip(e1, e2)):
        from math import gcd as igcd

        g = igcd(abs(m1), abs(m2))
        m1, m2 = m1 // g, m2 // g
        if m1 < 0 or (m1 == 0 and m2 < 0):
            m1, m2 = -m1, -m2
        if c1 ** m1 * c2 ** m2 == GR_ONE:
            return DependenceCertificate(kind=DEPENDENT, m1=m1, m2=m2)
    return DependenceCertificate(kind=INDEPENDENT)


# ---------------------------------------------------------------------------
# gcd tables and stabilization
# ---------------------------------------------------------------------------


def _squarefree_part(p: UniPoly) -> UniPoly:
    acc = UniPoly.one()
    for f, _ in squarefree_decomposition(p):
        if f.degree > 0:
            acc = acc * f
    return acc.monic()


def _squarefree_lcm(a: UniPoly, b: UniPoly) -> UniPoly:
    if a.degree < 1:
        return b.monic()
    if b.degree < 1:
        return a.monic()
    return (a * b.exact_div(uni_gcd(a, b))).monic()


def ar_accumulate(P1: UniPoly, P2: UniPoly, K: int,
                  config: Optional[RunConfig] = None) -> ARReport:
    """Tabulate gcd(P1^k-1, P2^k-1) for k = 1..K and stabilize.

    stabilized_F is the squarefree lcm of all observed gcds; consistency
    cross-checks its roots against the unimodular solver on the same pair.
    """
    config = config or RunConfig()
    cert = mult_independence(P1, P2)
    if cert.kind != INDEPENDENT:
        raise DependentInputs(
            f"gcd table needs multiplicatively independent inputs ({cert.kind})"
        )
    table: List[Tuple[int, UniPoly]] = []
    running: List[UniPoly] = []
    F = UniPoly.one()
    for k in range(1, K + 1):
        g = gcd_power_shift(P1, P2, k)
        table.append((k, g))
        F = _squarefree_lcm(F, _squarefree_part(g)) if g.degree > 0 else F
        running.append(F)
    if K >= 2 and running[-1] != running[-2]:
        raise HorizonTooSmall(
            f"common-divisor lcm still growing at the horizon K={K}"
        )
    stabilized_at = next(
        (k for k in range(1, K + 1) if running[k - 1] == F), None
    )
    consistency = _roots_consistent(P1, P2, F, config)
    return ARReport(
        table=table, stabilized_F=F, stabilized_at=stabilized_at,
        consistency=consistency,
    )


def _roots_consistent(P1: UniPoly, P2: UniPoly, F: UniPoly,
                      config: RunConfig) -> bool:
    if F.degree < 1:
        return True
    from .levelsolver import solve_unimodular_pair
    from .ratfun import rf_from_poly

    report = solve_unimodular_pair(rf_from_poly(P1), rf_from_poly(P2), config)
    roots = certified_roots(F, config.precision_bits, config.max_precision_bits)
    if report.status == "FINITE":
        return all(
            any(pt.z.contains_ball(rb.location) for pt in report.points)
            for rb in roots
        )
    shared = report.shared_component
    if shared is None:
        return True
    for rb in roots:
        if rb.exact is not None:
            if not shared.eval_gr(rb.exact, rb.exact.conjugate()).is_zero():
                return False
        else:
            conj = rb.location.conjugate()
            if not shared.eval_ball(rb.location, conj).contains_zero():
                return False
    return True
