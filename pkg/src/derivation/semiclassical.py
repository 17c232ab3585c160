"""
Semiclassical and Classical Reductions

When B = 0 every G coefficient vanishes and the structure relations read
H_k P_n = F_k. Eliminating P_n between levels 1 and k gives equations of
order k in P_{n+1}; the second-order one also has a form free of the
structure-relation coefficients, a Wronskian form, and, for classical data,
the hypergeometric-type form.
"""

import logging
from fractions import Fraction
from typing import Optional, Sequence

from typing_extensions import Literal

from algebra import DivisibilityError, XPoly, wronskian
from families import LHFamily, RelationBranch, psi_of

from .errors import ClassicalRequiredError, RSimpViolationError, SemiclassicalRequiredError
from .models import OdeResult, RelationInputs, StructureRelation
from .relations import build_relations_from_inputs, relation_inputs


SecondOrderForm = Literal["I", "II"]

_QUARTER = Fraction(1, 4)

logger = logging.getLogger(__name__)


def _require_semiclassical(f: LHFamily, what: str) -> None:
    if not f.is_semiclassical:
        raise SemiclassicalRequiredError(f"{what} needs semiclassical data (B = 0); '{f.name}' has B != 0")


def _relations(f: LHFamily, branch: RelationBranch,
               relations: Optional[Sequence[StructureRelation]]) -> Sequence[StructureRelation]:
    return relations if relations is not None else build_relations_from_inputs(relation_inputs(f, branch))


def eliminate_pn(relations: Sequence[StructureRelation], order: int) -> tuple:
    """
    Coefficients of H_1 F_k - H_k F_1 for k = order, highest derivative first.
    """
    first, rel = relations[0], relations[order - 1]
    h1, hk = first.H, rel.H
    coeffs = [rel.m(j) * h1 for j in range(order, 1, -1)]
    coeffs.append(rel.m(1) * h1 - first.phi_power * hk)
    coeffs.append(rel.m(0) * h1 - first.m(0) * hk)
    return tuple(coeffs)


def build_semiclassical_ode2(f: LHFamily, branch: RelationBranch, form: SecondOrderForm = 'I',
                             relations: Optional[Sequence[StructureRelation]] = None) -> OdeResult:
    """
    Second-order equation of a semiclassical family.

    Form I eliminates P_n between the first two relations. Form II is form I
    divided by -gamma_{n+1}, written with Phi, C_0, C_{n+1}, D_n and D_{n+1}.

    Raises:
        SemiclassicalRequiredError: If B != 0
    """
    _require_semiclassical(f, "The second-order equation")
    if form == 'I':
        coeffs = eliminate_pn(_relations(f, branch, relations), 2)
    elif form == 'II':
        coeffs = _form_two(relation_inputs(f, branch))
    else:
        raise ValueError(f"Unknown second-order form: {form!r}")
    return OdeResult(order=2, coeffs=coeffs, branch=branch, kind=f"semiclassical_{form}", family=f.name)


def _form_two(inputs: RelationInputs) -> tuple:
    phi, d_next = inputs.phi, inputs.d_next
    gap = inputs.c_gap
    bracket = (inputs.g_next * inputs.d_n * d_next
               - (inputs.c_next * inputs.c_next - inputs.C0 * inputs.C0).scale(_QUARTER)
               - phi * gap.d_dx())
    return (
        phi * phi * d_next,
        phi * ((phi.d_dx() + inputs.C0) * d_next - phi * d_next.d_dx()),
        d_next * bracket + gap * phi * d_next.d_dx(),
    )


def build_semiclassical_ode34(f: LHFamily, branch: RelationBranch, order: int,
                              relations: Optional[Sequence[StructureRelation]] = None) -> OdeResult:
    """
    Third- or fourth-order equation of a semiclassical family.

    Raises:
        SemiclassicalRequiredError: If B != 0
    """
    if order not in (3, 4):
        raise ValueError(f"Order must be 3 or 4, got {order}")
    _require_semiclassical(f, f"The order-{order} equation")
    coeffs = eliminate_pn(_relations(f, branch, relations), order)
    return OdeResult(order=order, coeffs=coeffs, branch=branch, kind='semiclassical', family=f.name)


def rsimp_bracket(inputs: RelationInputs) -> XPoly:
    """gamma_{n+1} D_n D_{n+1} - (C_{n+1}^2 - C_0^2)/4 - B D_0, equal to -Phi times sum D_nu."""
    return (inputs.g_next * inputs.d_n * inputs.d_next
            - (inputs.c_next * inputs.c_next - inputs.C0 * inputs.C0).scale(_QUARTER)
            - inputs.B0 * inputs.D0)


def sum_D_from_inputs(inputs: RelationInputs) -> XPoly:
    bracket = rsimp_bracket(inputs)
    try:
        return -bracket.divide_exact(inputs.phi)
    except DivisibilityError as e:
        raise RSimpViolationError(
            f"Phi does not divide the partial-sum identity on {inputs.branch.label}; "
            f"the family data violate the C/D recurrences", remainder=e.remainder) from e


def sum_D_via_identity(f: LHFamily, branch: RelationBranch) -> XPoly:
    """
    Closed form of D_0 + D_1 + ... + D_n.

    Raises:
        RSimpViolationError: If Phi does not divide the identity exactly
    """
    return sum_D_from_inputs(relation_inputs(f, branch))


def build_wronskian_form(f: LHFamily, branch: RelationBranch) -> OdeResult:
    """
    J P'' + K P' + L P = 0 with J = Phi D_{n+1}, K = C_0 D_{n+1} - W(Phi, D_{n+1}),
    L = W((C_{n+1} - C_0)/2, D_{n+1}) - D_{n+1} sum D_nu.

    Raises:
        SemiclassicalRequiredError: If B != 0
    """
    _require_semiclassical(f, "The Wronskian form")
    inputs = relation_inputs(f, branch)
    d_next = inputs.d_next
    J = inputs.phi * d_next
    K = inputs.C0 * d_next - wronskian(inputs.phi, d_next)
    L = wronskian(inputs.c_gap, d_next) - d_next * sum_D_from_inputs(inputs)
    return OdeResult(order=2, coeffs=(J, K, L), branch=branch, kind='wronskian', family=f.name)


def build_classical_ode(f: LHFamily, branch: RelationBranch) -> OdeResult:
    """
    Phi P'' - psi P' - (sum D_nu + (C'_{n+1} - C'_0)/2) P = 0.

    Raises:
        ClassicalRequiredError: Unless B = 0, deg Phi <= 2, deg psi = 1 and D_{n+1} is free of x
    """
    if not f.is_semiclassical:
        raise ClassicalRequiredError(f"'{f.name}' is not semiclassical (B != 0)")
    psi = psi_of(f)
    if f.phi.degree > 2:
        raise ClassicalRequiredError(f"'{f.name}' has deg Phi = {f.phi.degree} > 2")
    if psi.degree != 1:
        raise ClassicalRequiredError(f"'{f.name}' has deg psi = {psi.degree}, not 1")
    inputs = relation_inputs(f, branch)
    if not inputs.d_next.is_free_of_x():
        raise ClassicalRequiredError(f"D_(n+1) of '{f.name}' depends on x on {branch.label}")
    constant = -(sum_D_from_inputs(inputs) + inputs.c_gap.d_dx())
    logger.debug(f"Classical equation of '{f.name}' on {branch.label}")
    return OdeResult(order=2, coeffs=(f.phi, -psi, constant), branch=branch, kind='classical', family=f.name)
