"""Exact independence-complex invariants of circulant graphs.

Modules
-------
graph
    circulant graphs, complements, multiplier action, class enumeration
counting
    f-vectors (three engines), rooted counts, clique numbers and counts
invariants
    h-vector, reduced Euler characteristic, independence polynomial,
    Hilbert-Poincare numerics
checks
    exhaustive verification sweeps returning certificates
search
    sweep of multiplier classes for vanishing reduced Euler characteristic
cli
    command-line front end (``circchi``)
"""

__version__ = "0.1.0"

from .counting import (  # noqa: E402
    FVector,
    RootedCounts,
    clique_number,
    cliques_of_size,
    fvector,
    fvector_oracle,
    is_independent,
    maximum_cliques,
    rooted_counts,
)
from .graph import (  # noqa: E402
    CanonicalClass,
    CirculantGraph,
    adjacent,
    canonical_form,
    complement,
    construct,
    distance_norm,
    enumerate_classes,
    multiplier_image,
)
from .invariants import (  # noqa: E402
    algebraic_summary,
    hvector,
    independence_polynomial,
    reduced_euler,
)
