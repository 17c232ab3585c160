"""
Laguerre-Hahn Family Model Package

Defining data of Laguerre-Hahn families, piecewise-in-n sequences, the
background transformations on that data and symbolic verification of the
C/D recurrences.

## Usage

```python
from families import FamilyLoader, class_degrees, verify_sr_recurrences

loader = FamilyLoader("config/families")
family = loader.load_family("hermite_case1")
class_degrees(family).s                 # 0
verify_sr_recurrences(family).passed    # True
family.gamma.at(4)                      # (tau + 4)/2
```
"""

from .errors import (
    FamilyError,
    FamilySchemaError,
    CoverageError,
    OverlapError,
    IndexDomainError,
)
from .sequences import ParamSeq, SeqBranch, seq_at, seq_branch
from .branches import RelationBranch, plan_branches
from .models import LHFamily, ClassReport
from .loader import FamilyLoader, load_family
from .transforms import (
    psi_of,
    class_degrees,
    affine_shift_family,
    perturb_recurrence,
    associated_shift,
    specialize_family,
)
from .recurrences import RecurrenceCheck, RecurrenceVerifier, SRReport, verify_sr_recurrences

__all__ = [
    # Errors
    'FamilyError',
    'FamilySchemaError',
    'CoverageError',
    'OverlapError',
    'IndexDomainError',

    # Models
    'ParamSeq',
    'SeqBranch',
    'RelationBranch',
    'LHFamily',
    'ClassReport',
    'SRReport',
    'RecurrenceCheck',

    # Loading
    'FamilyLoader',
    'load_family',

    # Operations
    'seq_at',
    'seq_branch',
    'plan_branches',
    'psi_of',
    'class_degrees',
    'affine_shift_family',
    'perturb_recurrence',
    'associated_shift',
    'specialize_family',
    'RecurrenceVerifier',
    'verify_sr_recurrences',
]
