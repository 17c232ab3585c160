"""
Family Transformations

This module provides the background operations on family data: psi and the
class degrees, the affine change of variable, r-perturbation and association
of the recurrence coefficients, and specialization of parameters.
"""

import logging
from typing import Mapping, Sequence, Tuple

from algebra import InvalidAffineError, XPoly, as_ratfun, as_rational

from .errors import FamilyError, FamilySchemaError
from .models import ClassReport, LHFamily
from .sequences import ParamSeq


logger = logging.getLogger(__name__)


def psi_of(f: LHFamily) -> XPoly:
    """psi = -Phi' - C."""
    return -f.phi.d_dx() - f.C


def class_degrees(f: LHFamily) -> ClassReport:
    return ClassReport.of(f.phi, psi_of(f), f.B)


def affine_shift_family(f: LHFamily, a, b) -> LHFamily:
    """
    Change of variable x -> a*x + b on (Phi, psi, B).

    Phi~ = a^-t Phi(ax+b), psi~ = a^(1-t) psi(ax+b), B~ = a^-t B(ax+b) with
    t = deg Phi, and C~ = -Phi~' - psi~. D and every sequence are carried over
    untransformed and the result is marked stale.

    Raises:
        InvalidAffineError: If a = 0
    """
    a, b = as_rational(a), as_rational(b)
    if a == 0:
        raise InvalidAffineError("Affine shift needs a != 0")
    if a == 1 and b == 0:
        return f

    t = f.phi.degree
    phi = f.phi.subst_affine(a, b).scale(a ** -t)
    psi = psi_of(f).subst_affine(a, b).scale(a ** (1 - t))
    B = f.B.subst_affine(a, b).scale(a ** -t)
    C = -phi.d_dx() - psi
    logger.warning(f"Affine shift of '{f.name}' by ({a}, {b}): D and sequence data are left untransformed")
    return f.with_changes(
        name=f"{f.name}[x->{a}*x+{b}]",
        phi=phi, B=B, C=C,
        stale_sequences=True,
    )


def perturb_recurrence(beta: ParamSeq, gamma: ParamSeq, mu0,
                       mus: Sequence, lambdas: Sequence, r: int) -> Tuple[ParamSeq, ParamSeq]:
    """
    Perturbation of order r of the recurrence coefficients.

    beta~_0 = beta_0 + mu0 and, for 1 <= i <= r, beta~_i = beta_i + mu_i and
    gamma~_i = lambda_i * gamma_i. Unchanged values add no entries.

    Raises:
        FamilyError: If a lambda vanishes or the lists do not have length r
    """
    if r < 0 or len(mus) != r or len(lambdas) != r:
        raise FamilyError(f"Perturbation of order {r} needs {r} mu and {r} lambda values")
    ring = beta.ring

    def lift(value) -> XPoly:
        return XPoly(as_ratfun(ring, value))

    beta_entries, gamma_entries = {}, {}
    shift = lift(mu0)
    if not shift.is_zero:
        beta_entries[0] = beta.at(0) + shift
    for i, (mu, lam) in enumerate(zip(mus, lambdas), start=1):
        mu, lam = lift(mu), lift(lam)
        if lam.is_zero:
            raise FamilyError(f"Perturbation factor lambda_{i} must be nonzero")
        if not mu.is_zero:
            beta_entries[i] = beta.at(i) + mu
        if lam != XPoly.one(ring):
            gamma_entries[i] = gamma.at(i) * lam
    logger.debug(f"Perturbation of order {r}: beta entries {sorted(beta_entries)}, "
                 f"gamma entries {sorted(gamma_entries)}")
    return beta.with_entries(beta_entries), gamma.with_entries(gamma_entries)


def associated_shift(beta: ParamSeq, gamma: ParamSeq, r: int) -> Tuple[ParamSeq, ParamSeq]:
    """Coefficients of the associated sequence of order r: beta_n+r and gamma_n+r."""
    return beta.shifted(r), gamma.shifted(r)


def specialize_family(f: LHFamily, assignment: Mapping[str, object]) -> LHFamily:
    """
    Substitute rationals for some parameters and drop them from the ring.

    Raises:
        FamilySchemaError: If a name is not a declared parameter
    """
    values = {name: as_rational(value) for name, value in assignment.items()}
    unknown = set(values) - set(f.params)
    if unknown:
        raise FamilySchemaError(f"Cannot specialize undeclared parameters {sorted(unknown)}")
    if not values:
        return f

    ring = f.ring.without(values)

    def move(p: XPoly) -> XPoly:
        return p.evaluate(values).change_ring(ring)

    def move_seq(seq: ParamSeq) -> ParamSeq:
        return seq.transform(move)

    remaining = {k: v for k, v in f.assignments.items() if k not in values}
    label = ", ".join(f"{k}={v}" for k, v in sorted(values.items()))
    logger.info(f"Specialized '{f.name}' at {label}")
    return LHFamily(
        name=f"{f.name}[{label}]",
        params=ring.params,
        ring=ring,
        phi=move(f.phi),
        B=move(f.B),
        C=move(f.C),
        D=move(f.D),
        beta=move_seq(f.beta),
        gamma=move_seq(f.gamma),
        c_seq=move_seq(f.c_seq),
        d_seq=move_seq(f.d_seq),
        assignments=remaining,
        regularity_notes=f.regularity_notes,
        stale_sequences=f.stale_sequences,
    )
