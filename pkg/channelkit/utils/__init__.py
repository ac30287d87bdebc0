"""
Utility modules for channelkit.

Bitset enumeration kernels, report rendering, canonical fixtures and
seeded random generators for the randomized suites.
"""

from .bitsets import (
    require_types, popcount, all_states, row_satisfies, model_states,
    sequent_pairs, satisfied_pairs, image_table
)
from .reporting import log, mark, incidence_table, render_human

__all__ = [
    # Bitsets
    'require_types', 'popcount', 'all_states', 'row_satisfies', 'model_states',
    'sequent_pairs', 'satisfied_pairs', 'image_table',

    # Reporting
    'log', 'mark', 'incidence_table', 'render_human',
]
