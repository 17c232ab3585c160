"""
Coefficient Reduction and Emission Package

Divides a derived equation by the greatest common factor of its
coefficients and renders equations, structure relations and factors as
plain text or LaTeX.

## Usage

```python
from derivation import BranchDeriver
from reduction import emit, reduce_ode

result = BranchDeriver(family).derive(branch)
reduced = reduce_ode(result.ode4)
print(emit(reduced.common))          # 4*(n^2+2*n*tau+...)/rho^2
print(emit(reduced, fmt='latex'))
```
"""

from .errors import ReductionError, DegenerateOdeError
from .reducer import ReducedOde, OdeReducer, joint_content, leading_sign, reduce_ode
from .emit import (
    FORMATS,
    Renderer,
    TextRenderer,
    LatexRenderer,
    emit,
    format_coefficient,
    get_renderer,
)

__all__ = [
    # Errors
    'ReductionError',
    'DegenerateOdeError',

    # Reduction
    'ReducedOde',
    'OdeReducer',
    'reduce_ode',
    'joint_content',
    'leading_sign',

    # Emission
    'FORMATS',
    'Renderer',
    'TextRenderer',
    'LatexRenderer',
    'get_renderer',
    'emit',
    'format_coefficient',
]
