"""Wall-crossing combinatorics on integer partitions.

The package computes orbits of partitions under compositions of Mullineux
involutions taken across Farey fractions ("walls"), together with the
chamber diagrams, ladder regularization, and good-box crystal machinery
needed to cross-validate them.
"""

from wallcross.partitions import Box, Partition, box_residue, enumerate_partitions
from wallcross.farey import Wall, WallSequence, farey_walls, neighbor_check, parse_wall
from wallcross.crystal import good_addable, good_removable, reduced_signature, signature
from wallcross.mullineux import (
    MullineuxSymbol,
    e_rim,
    mullineux,
    mullineux_restricted,
    mullineux_symbol,
    symbol_certificate,
)
from wallcross.ladders import (
    NotAYoungDiagramError,
    box_cmp,
    chamber_partition,
    f_value,
    find_order_reversal,
    ladder_positions,
    rc_regularize,
)
from wallcross.orbits import (
    OrbitTrace,
    StepRecord,
    compose_orbit,
    cross_wall,
    plain_orbit,
    sign_orbit,
)

__version__ = "0.1.0"
