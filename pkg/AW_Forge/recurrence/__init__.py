"""
Recurrence package - three-term recurrences, spectra and eigenvector checks
"""

from AW_Forge.recurrence.engine import (
    Recurrence,
    characteristic_roots,
    eigen_residual,
    extract,
    reassemble,
    run,
    spectrum_float,
)

__all__ = [
    "Recurrence",
    "characteristic_roots",
    "eigen_residual",
    "extract",
    "reassemble",
    "run",
    "spectrum_float",
]
