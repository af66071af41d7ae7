"""Exact refined enumeration of alternating sign matrices.

Generating functions come from brute-force enumeration and are cross-checked
against recursive, closed-form and six-vertex routes.  Submodules:

- ``exactmath``: rationals, cyclotomic numbers, sparse polynomials, determinants
- ``asmcore``: enumeration, statistics, symmetries, six-vertex bijection
- ``genfun``: generating functions by enumeration
- ``recursion``: recursive construction from sizes 0 and 1
- ``closedform``: explicit formulas in special regimes
- ``sixvertex``: partition functions and special points
- ``catalog`` and ``cli``: the identity registry and its command-line runner
"""

from .asmcore import Asm, AsmStats, asm_stats, count_asms, enumerate_asms
from .catalog import REGISTRY, load_all, run_check
from .genfun import GenFunTable, brute_specialized
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["Asm", "AsmStats", "BACKEND", "GenFunTable", "REGISTRY", "asm_stats",
           "brute_specialized", "count_asms", "enumerate_asms", "load_all", "run_check"]
