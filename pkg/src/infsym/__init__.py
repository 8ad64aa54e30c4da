"""Exact-arithmetic toolkit for characters of the infinite symmetric
group: partitions and Young distributions, finite character tables,
spectral measures and their coefficient series, wiring-diagram
semigroups, signed double cosets, and the admissibility calculus."""

from .partitions import Partition, Permutation, YoungDistribution
from .series import PowerSeries
from .thoma import ThomaMeasure, ThomaParams

__version__ = "1.0.0"

__all__ = [
    "Partition",
    "Permutation",
    "YoungDistribution",
    "PowerSeries",
    "ThomaMeasure",
    "ThomaParams",
    "__version__",
]
