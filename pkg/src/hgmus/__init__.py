"""Group-MUS enumeration for Horn formulae."""

from .core import GroupedFormula, HornClause, SelectorMap, build_grouped, validate_horn
from .enumerator import (
    EnumConfig,
    EnumerationStats,
    Enumerator,
    block_mcs,
    block_mus,
    enumerate_groups,
)
from .extract import deletion_mus, insertion_mus
from .gcnf import load_gcnf, parse_gcnf, write_gcnf
from .ltur import Checkpoint, LturEngine
from .mapsolver import MapSolver
from .mxm import maximal_model

__version__ = "0.1.0"
