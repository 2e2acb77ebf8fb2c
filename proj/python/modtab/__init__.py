"""Modular multiplication tables, unit groups and the divisors of 24.

The heavy lifting lives in the compiled extension ``modtab._core``; this
package re-exports its public surface.
"""

from modtab._core import (
    CrtIsomorphism,
    Inconclusive,
    PrimeTable,
    ResidueRing,
    SizeLimitError,
    TheoremViolation,
    check_diagonal,
    cube_check,
    cube_scan,
    euler_phi,
    factorize,
    inverse,
    is_f2_vector_space,
    mul,
    render_table,
    table_text,
    unit_group_structure,
    units,
    verify_bertrand,
    verify_crt,
    verify_dirichlet,
    verify_erdos,
    verify_proposition,
    verify_units,
)

__all__ = [
    "CrtIsomorphism",
    "Inconclusive",
    "PrimeTable",
    "ResidueRing",
    "SizeLimitError",
    "TheoremViolation",
    "check_diagonal",
    "cube_check",
    "cube_scan",
    "euler_phi",
    "factorize",
    "inverse",
    "is_f2_vector_space",
    "mul",
    "render_table",
    "table_text",
    "unit_group_structure",
    "units",
    "verify_bertrand",
    "verify_crt",
    "verify_dirichlet",
    "verify_erdos",
    "verify_proposition",
    "verify_units",
]

__version__ = "0.1.0"
