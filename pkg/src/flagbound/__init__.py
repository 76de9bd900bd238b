"""Root-combinatoric pseudoconcavity bounds for flag domains of SU(p, p') and Sp(2n, R)."""

from .concavity import ConcavityReport, attractiveness, d_ma, paper_bound, report, spot_codims_su
from .domains import InvalidSpecError, RootPartition, SpSpec, SUSpec, partition, validate
from .roots import Family, Root, RootSystem, add_root, build_root_system, negate

__version__ = "0.1.0"
