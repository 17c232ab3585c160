"""
Polynomial and Coefficient Generation

Builds P_n and the associated P^(1)_n from the three-term recurrence and
iterates C_n, D_n from their own recurrences,

    C_{n+1} = -C_n + 2(x - beta_n) D_n
    gamma_{n+1} D_{n+1} = -Phi + gamma_n D_{n-1} - (x - beta_n) C_n + (x - beta_n)^2 D_n

with C_0 = C, D_0 = D, D_{-1} = B and gamma_0 = 1. Iterated values are
compared with the family's declared closed forms.
"""

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from families import LHFamily

from .context import NumericContext
from .models import CDIteration, CDMismatch, Witnesses
from .qpoly import QPoly


logger = logging.getLogger(__name__)


def recurrence_coefficients(f: LHFamily, ctx: NumericContext, top: int) -> Tuple[List[Fraction], List[Fraction]]:
    """beta_0..beta_top and gamma_0..gamma_top, gamma_0 = 1."""
    betas = [ctx.number(f.beta, k) for k in range(top + 1)]
    gammas = [Fraction(1)] + [ctx.number(f.gamma, k) for k in range(1, top + 1)]
    return betas, gammas


def ttrr(beta: Sequence[Fraction], gamma: Sequence[Fraction], n_max: int) -> List[QPoly]:
    """
    P_0..P_n_max from P_0 = 1, P_1 = x - beta_0 and
    P_{n+2} = (x - beta_{n+1}) P_{n+1} - gamma_{n+1} P_n.

    gamma is indexed from 0; gamma[0] is never read.
    """
    x = QPoly.x()
    polys = [QPoly.one()]
    if n_max >= 1:
        polys.append(x - beta[0])
    for k in range(2, n_max + 1):
        polys.append((x - beta[k - 1]) * polys[k - 1] - polys[k - 2].scale(gamma[k - 1]))
    return polys


def associated1(beta: Sequence[Fraction], gamma: Sequence[Fraction], n_max: int) -> List[QPoly]:
    """P^(1)_0..P^(1)_n_max: the recurrence with beta_{n+1} and gamma_{n+1}."""
    return ttrr(beta[1:], gamma[1:], n_max)


def iterate_CD(f: LHFamily, ctx: NumericContext) -> CDIteration:
    """C_0..C_{n_max+1} and D_-1..D_{n_max+1}, with mismatches against the closed forms."""
    top = ctx.n_max + 1
    betas, gammas = recurrence_coefficients(f, ctx, top)
    x = QPoly.x()
    phi = ctx.qpoly(f.phi)

    result = CDIteration()
    result.C[0] = ctx.qpoly(f.C)
    result.D[-1] = ctx.qpoly(f.B)
    result.D[0] = ctx.qpoly(f.D)
    for n in range(top):
        t = x - betas[n]
        c, d = result.C[n], result.D[n]
        result.C[n + 1] = -c + (t * d).scale(2)
        numerator = -phi + result.D[n - 1].scale(gammas[n]) - t * c + t * t * d
        result.D[n + 1] = numerator.scale(1 / gammas[n + 1])

    for n in range(1, top + 1):
        for name, seq, iterated in (('C', f.c_full, result.C[n]), ('D', f.d_full, result.D[n])):
            declared = ctx.seq(seq, n)
            if declared != iterated:
                result.mismatches.append(CDMismatch(name, n, iterated, declared))
                logger.warning(f"{name}_{n} of '{f.name}' iterates to {iterated}, closed form gives {declared}")
    return result


def witness_polynomials(f: LHFamily, ctx: NumericContext) -> Witnesses:
    """P_0..P_{n_max+1} and P^(1)_0..P^(1)_n_max."""
    top = ctx.n_max + 1
    betas, gammas = recurrence_coefficients(f, ctx, top)
    return Witnesses(P=ttrr(betas, gammas, top), P1=associated1(betas, gammas, ctx.n_max))
