from .formulas import (
    cc_count_stirling,
    i_count_formula,
    i_count_from_trees,
    jackson_symmetric,
    theorem1_factor,
)
from .mtable import MTable, genus_distribution, m_bruteforce, m_from_factorizations
from .theorem import (
    TRI_RING,
    X1,
    X2,
    X3,
    TheoremCheck,
    bridge_polynomial,
    table_polynomial,
    theorem1_check,
    theorem1_polynomial,
)

__all__: list[str] = [
    "TRI_RING",
    "X1",
    "X2",
    "X3",
    "MTable",
    "TheoremCheck",
    "bridge_polynomial",
    "cc_count_stirling",
    "genus_distribution",
    "i_count_formula",
    "i_count_from_trees",
    "jackson_symmetric",
    "m_bruteforce",
    "m_from_factorizations",
    "table_polynomial",
    "theorem1_check",
    "theorem1_factor",
    "theorem1_polynomial",
]
