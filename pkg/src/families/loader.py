"""
Family Definition Loader

This module loads family-definition JSON documents, parses every expression
over the ring {x, n} plus the declared parameters and builds LHFamily values.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Union

from algebra import IndeterminateRing, XPoly, as_rational
from expressions import ExpressionError, evaluate_source

from .errors import FamilyError, FamilySchemaError
from .models import LHFamily
from .sequences import ParamSeq, SeqBranch


DEFAULT_FAMILY_DIR = "config/families"

REQUIRED_FIELDS = ('name', 'parameters', 'phi', 'B', 'C', 'D', 'beta', 'gamma', 'C_seq', 'D_seq')
SEQUENCE_FIELDS = {
    # document field -> (sequence name, first index)
    'beta': ('beta', 0),
    'gamma': ('gamma', 1),
    'C_seq': ('C_seq', 1),
    'D_seq': ('D_seq', 1),
}
BRANCH_FIELDS = ('residue', 'modulus', 'min_index', 'expr')


def _expression(source: Any, ring: IndeterminateRing, where: str) -> XPoly:
    if not isinstance(source, str):
        raise FamilySchemaError(f"{where}: expression must be a string, got {type(source).__name__}")
    try:
        return evaluate_source(source, ring)
    except ExpressionError as e:
        raise FamilySchemaError(f"{where}: {e}") from e


def _int_field(entry: Mapping[str, Any], key: str, where: str) -> int:
    value = entry.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise FamilySchemaError(f"{where}: '{key}' must be an integer, got {value!r}")
    return value


def _sequence(entry: Any, ring: IndeterminateRing, name: str, start: int) -> ParamSeq:
    if not isinstance(entry, dict):
        raise FamilySchemaError(f"Sequence '{name}' must be an object")
    unknown = set(entry) - {'exceptional', 'branches'}
    if unknown:
        raise FamilySchemaError(f"Sequence '{name}' has unknown keys {sorted(unknown)}")

    exceptional = {}
    for key, source in (entry.get('exceptional') or {}).items():
        try:
            index = int(key)
        except ValueError:
            raise FamilySchemaError(f"Sequence '{name}': exceptional index {key!r} is not an integer") from None
        exceptional[index] = _expression(source, ring, f"{name}[{index}]")

    branches = []
    raw_branches = entry.get('branches')
    if not isinstance(raw_branches, list):
        raise FamilySchemaError(f"Sequence '{name}': 'branches' must be a list")
    for i, raw in enumerate(raw_branches):
        where = f"{name}.branches[{i}]"
        if not isinstance(raw, dict) or any(k not in raw for k in BRANCH_FIELDS):
            raise FamilySchemaError(f"{where}: branch needs keys {list(BRANCH_FIELDS)}")
        branches.append(SeqBranch(
            residue=_int_field(raw, 'residue', where),
            modulus=_int_field(raw, 'modulus', where),
            min_index=_int_field(raw, 'min_index', where),
            body=_expression(raw['expr'], ring, where),
        ))
    return ParamSeq(name, start, tuple(branches), exceptional)


def load_family(document: Mapping[str, Any]) -> LHFamily:
    """
    Build an LHFamily from a parsed family document.

    Args:
        document: Family definition (see docs/family_format.md)

    Returns:
        The validated family

    Raises:
        FamilySchemaError: For schema violations and unparsable expressions
        CoverageError: If a sequence leaves an index uncovered
        OverlapError: If two branches of a sequence share a residue
    """
    if not isinstance(document, dict):
        raise FamilySchemaError("Family document must be a JSON object")
    missing = [key for key in REQUIRED_FIELDS if key not in document]
    if missing:
        raise FamilySchemaError(f"Family document missing required fields: {missing}")

    params = document['parameters']
    if not isinstance(params, list) or not all(isinstance(p, str) for p in params):
        raise FamilySchemaError("'parameters' must be a list of names")
    try:
        ring = IndeterminateRing(params)
    except ValueError as e:
        raise FamilySchemaError(str(e)) from e

    assignments = {}
    for name, value in (document.get('assignments') or {}).items():
        try:
            assignments[name] = as_rational(value)
        except ValueError as e:
            raise FamilySchemaError(f"Assignment {name}: {e}") from e

    sequences = {field: _sequence(document[field], ring, seq_name, start)
                 for field, (seq_name, start) in SEQUENCE_FIELDS.items()}

    return LHFamily(
        name=str(document['name']),
        params=ring.params,
        ring=ring,
        phi=_expression(document['phi'], ring, 'phi'),
        B=_expression(document['B'], ring, 'B'),
        C=_expression(document['C'], ring, 'C'),
        D=_expression(document['D'], ring, 'D'),
        beta=sequences['beta'],
        gamma=sequences['gamma'],
        c_seq=sequences['C_seq'],
        d_seq=sequences['D_seq'],
        assignments=assignments,
        regularity_notes=str(document.get('regularity_notes', '')),
    )


class FamilyLoader:
    """
    Loads family documents from JSON files and the bundled family directory.
    """

    def __init__(self, family_dir: Optional[str] = None):
        """
        Initialize the family loader.

        Args:
            family_dir: Directory holding bundled family files
        """
        self.family_dir = Path(family_dir or DEFAULT_FAMILY_DIR)
        self.logger = logging.getLogger(self.__class__.__name__)
        self._documents: Dict[Path, Dict[str, Any]] = {}

    def resolve(self, name_or_path: Union[str, Path]) -> Path:
        """Map a bundled family name or a file path to a path."""
        path = Path(name_or_path)
        if path.suffix == '.json' or path.exists():
            return path
        return self.family_dir / f"{name_or_path}.json"

    def load_document(self, name_or_path: Union[str, Path]) -> Dict[str, Any]:
        """
        Load and cache a family document.

        Raises:
            FileNotFoundError: If the file does not exist
            FamilySchemaError: If the file is not valid JSON
        """
        path = self.resolve(name_or_path)
        if path not in self._documents:
            if not path.exists():
                raise FileNotFoundError(f"Family file not found: {path}")
            try:
                with open(path, 'r', encoding='utf-8') as f:
                    self._documents[path] = json.load(f)
            except json.JSONDecodeError as e:
                raise FamilySchemaError(f"Invalid JSON in family file {path}: {e}") from e
            self.logger.info(f"Family document loaded from {path}")
        return self._documents[path]

    def load_family(self, name_or_path: Union[str, Path]) -> LHFamily:
        family = load_family(self.load_document(name_or_path))
        self.logger.info(f"Family '{family.name}' ready: parameters {list(family.params)}, "
                         f"modulus {family.modulus}")
        return family

    def list_available_families(self) -> List[str]:
        if not self.family_dir.is_dir():
            return []
        return sorted(p.stem for p in self.family_dir.glob('*.json'))

    def validate_document(self, name_or_path: Union[str, Path]) -> bool:
        """
        Validate a family file.

        Returns:
            True if the file loads into a family, False otherwise
        """
        try:
            self.load_family(name_or_path)
        except (FamilyError, FileNotFoundError) as e:
            self.logger.error(f"Family validation failed for {name_or_path}: {e}")
            return False
        self.logger.info(f"Family validation successful: {name_or_path}")
        return True
