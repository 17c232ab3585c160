"""
Exact Numeric Oracle Package

Generates P_n, P^(1)_n, C_n and D_n from their recurrences at concrete
parameter values and certifies structure relations, the partial-sum
identity and derived differential equations by exact evaluation.

## Usage

```python
from oracle import NumericContext, OracleVerifier

ctx = NumericContext.for_family(family)            # default assignments, n_max = 8
report = OracleVerifier(family, ctx).verify(equations)
report.passed
print(report.summary())
```
"""

from .errors import OracleError, RegularityError, BranchMismatchError
from .qpoly import QPoly
from .context import DEFAULT_N_MAX, NumericContext
from .models import CDIteration, CDMismatch, OracleReport, ResidualEntry, Witnesses
from .generators import associated1, iterate_CD, ttrr, witness_polynomials
from .checks import OracleData, check_ode, check_relations, check_rsimp, prepare_data
from .verifier import OracleVerifier, verify_family

__all__ = [
    # Errors
    'OracleError',
    'RegularityError',
    'BranchMismatchError',

    # Values
    'QPoly',
    'NumericContext',
    'DEFAULT_N_MAX',
    'OracleData',

    # Reports
    'ResidualEntry',
    'CDMismatch',
    'CDIteration',
    'Witnesses',
    'OracleReport',

    # Generation
    'ttrr',
    'associated1',
    'iterate_CD',
    'witness_polynomials',
    'prepare_data',

    # Checks
    'check_relations',
    'check_ode',
    'check_rsimp',
    'OracleVerifier',
    'verify_family',
]
