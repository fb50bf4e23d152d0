"""Graph-encoded manifolds: dipole moves, ρ-pair switching and rigid
crystallizations."""

from .errors import GemError
from .gem import (
    CanonicalCode,
    Edge,
    Gem,
    bipartition,
    canonical_code,
    colour_isomorphic,
    euler_characteristic,
    f_vector,
    is_contracted,
    new_gem,
    residue_of,
    residues,
    standard_crystallization,
)
from .gemio import format_gem, parse_gem, read_gem, write_gem
from .kernels import BACKEND
from .moves import (
    Dipole,
    add_blob,
    add_dipole,
    cancel_dipole,
    classify_dipole,
    completely_separated,
    find_dipoles,
    fuse,
)
from .reduce import ReductionReport, blow_up, crystallize, reduce_gem, rigidify
from .rho import (
    Kind,
    RhoPair,
    SwitchVariant,
    classify_pair,
    find_rho_pairs,
    induced_head,
    is_rigid,
    is_rigid_via_residues,
    switch_generic,
    switch_preferred,
)
from .trace import MoveTrace, parse_trace, verify_trace
from .verify import Answer, Verdict, is_crystallization, is_gem, is_orientable, is_sphere

__version__ = "0.1.0"
