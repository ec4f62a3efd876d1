from .arrows import (
    AmalgamResult,
    Arrow,
    ArrowError,
    CategoryInstance,
    EnumeratedArrow,
    MuBound,
    SquareCheck,
    compose,
    eps_commutes,
    rho,
)
from .approx import (
    ApproxArrow,
    ApproxRhoEstimate,
    SeqMuReport,
    approx_defect,
    approx_equivalent,
    approx_rho,
    seq_mu,
)
from .towers import Tower, check_coherence, constant_tower, restrict_cofinal

__all__ = [
    "AmalgamResult",
    "ApproxArrow",
    "ApproxRhoEstimate",
    "Arrow",
    "ArrowError",
    "CategoryInstance",
    "EnumeratedArrow",
    "MuBound",
    "SeqMuReport",
    "SquareCheck",
    "Tower",
    "approx_defect",
    "approx_equivalent",
    "approx_rho",
    "check_coherence",
    "compose",
    "constant_tower",
    "eps_commutes",
    "restrict_cofinal",
    "rho",
    "seq_mu",
]
