"""Representation theory of finite semigroups given by multiplication tables.

Green's relations and brute-force oracles, Rees coordinatization of regular
J-classes, Schützenberger representations, and decision procedures for
inverse semigroups and star-representability.
"""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .catalog import builtin  # noqa: F401
from .semigroup import (  # noqa: F401
    GreenStructure,
    GroupData,
    PrincipalSeries,
    SemigroupTable,
    brute_force_is_inverse,
    green_structure,
    is_semisimple_algebra,
    maximal_subgroup,
    principal_series,
    validate_table,
)
from .linalg import is_preunitary, polar_decompose, positive_factor, solve_intertwiners  # noqa: F401
from .matrixrep import MatrixRep  # noqa: F401
from .grouprep import (  # noqa: F401
    GroupIrrep,
    check_group_star_condition,
    irreducible_unitary_reps,
    star_representation_form,
    unitarize,
    unitary_intertwiner,
)
from .rees import (  # noqa: F401
    ReesCoordinatization,
    ReesSemigroup,
    build_rees,
    coordinatize_jclass,
    normalize_to_identity,
    rees_is_inverse,
    standard_reps,
)
from .involution import (  # noqa: F401
    InvolutionMap,
    SSData,
    decompose_rees_involution,
    enumerate_involutions,
    inverse_inducing_involution,
    is_inverse_inducing,
    reconstruct_involution,
    semiunitary_star_conditions,
    verify_involution,
)
from .schutz import (  # noqa: F401
    InverseVerdict,
    StarVerdict,
    apex,
    contragredient,
    irreducible_reps,
    is_completely_reducible,
    is_inverse_via_reps,
    is_inverse_with_involution,
    schutzenberger_rep,
    star_representable_all,
)
from .sgt import dump_sgt, load_sgt, parse_sgt  # noqa: F401
