"""
Structure Relation and Differential Equation Derivation Package

Builds the four structure relations of a Laguerre-Hahn family on each
branch, the fourth-order linear differential equation they imply, and the
semiclassical and classical reductions.

## Usage

```python
from families import FamilyLoader
from derivation import BranchDeriver

family = FamilyLoader().load_family("hermite_classical")
deriver = BranchDeriver(family)
branch = deriver.branches()[-1]
result = deriver.derive(branch)
result.ode4.degenerate                       # True: B = 0
result.reduction("semiclassical_II", 2)      # second-order equation
```
"""

from .errors import (
    DerivationError,
    SemiclassicalRequiredError,
    ClassicalRequiredError,
    RSimpViolationError,
    BranchCoverageError,
)
from .models import RelationInputs, StructureRelation, OdeResult
from .relations import (
    build_relations,
    build_relations_from_inputs,
    first_relation,
    raise_level,
    relation_inputs,
)
from .ode import assemble_ode, build_ode4, deltas, det3
from .semiclassical import (
    build_classical_ode,
    build_semiclassical_ode2,
    build_semiclassical_ode34,
    build_wronskian_form,
    eliminate_pn,
    rsimp_bracket,
    sum_D_via_identity,
)
from .deriver import BranchDerivation, BranchDeriver

__all__ = [
    # Errors
    'DerivationError',
    'SemiclassicalRequiredError',
    'ClassicalRequiredError',
    'RSimpViolationError',
    'BranchCoverageError',

    # Models
    'RelationInputs',
    'StructureRelation',
    'OdeResult',
    'BranchDerivation',

    # Structure relations
    'relation_inputs',
    'first_relation',
    'raise_level',
    'build_relations',
    'build_relations_from_inputs',

    # Equations
    'det3',
    'deltas',
    'assemble_ode',
    'build_ode4',
    'eliminate_pn',
    'build_semiclassical_ode2',
    'build_semiclassical_ode34',
    'rsimp_bracket',
    'sum_D_via_identity',
    'build_wronskian_form',
    'build_classical_ode',

    # Service
    'BranchDeriver',
]
