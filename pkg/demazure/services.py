import itertools
import logging
from functools import lru_cache
from typing import Sequence

from cone.models import Cone
from cone.services import contains, dual_cone, dual_rays, is_full_dimensional
from linalg.models import IntegerMatrix, Sublattice, Vector
from linalg.services import add, pairing, primitive, scale
from shared.errors import ConsistencyError, DimensionError, DomainError

from .models import Box, DemazureRoot, RootOracle

logger = logging.getLogger(__name__)


@lru_cache(maxsize=1024)
def root_oracle(g_cone: Cone, m_basis: IntegerMatrix) -> RootOracle:
    if g_cone.ambient_rank != m_basis.col_count:
        raise DimensionError(
            f"Cone lives in rank {g_cone.ambient_rank} but the basis of M in rank {m_basis.col_count}"
        )

    lattice = Sublattice(m_basis)
    local_generators = []
    for generator in g_cone.generators:
        coords = lattice.coordinates(generator)
        if coords is None:
            raise DomainError(f"Generator {generator!r} does not lie in the span of M")
        local_generators.append(coords)

    local_cone = Cone.generated_by(lattice.rank, local_generators)

    return RootOracle(lattice=lattice, local_cone=local_cone, rays=dual_rays(local_cone))


def classify_root(g_cone: Cone, m_basis: IntegerMatrix, e: Sequence[int]) -> DemazureRoot | None:
    return root_oracle(g_cone, m_basis).classify(e)


def root_pairings(g_cone: Cone, m_basis: IntegerMatrix, e: Sequence[int]) -> dict[Vector, int] | None:
    """Pairings of e with every dual ray; None when e is outside M."""

    oracle = root_oracle(g_cone, m_basis)
    values = oracle.pairings(e)
    if values is None:
        return None

    return dict(zip(oracle.rays, values))


def enumerate_roots(g_cone: Cone, m_basis: IntegerMatrix, box: Box) -> dict[Vector, list[Vector]]:
    """Demazure roots inside the box, grouped by their ray.

    Complete only within the box: every root set is infinite once rk M >= 2.
    """

    oracle = root_oracle(g_cone, m_basis)
    groups: dict[Vector, list[Vector]] = {rho: [] for rho in oracle.rays}

    for point in box.points(oracle.ambient_rank):
        root = oracle.classify(point)
        if root is not None:
            groups[root.rho].append(root.e)

    logger.debug(
        "Enumerated %d roots in box %d over %d rays", sum(map(len, groups.values())), box.bound, len(groups)
    )

    return groups


def replicate(g_cone: Cone, m_basis: IntegerMatrix, root: DemazureRoot, lam: Sequence[int]) -> DemazureRoot:
    """Replica e + λ of a root by a lattice point λ of its facet."""

    oracle = root_oracle(g_cone, m_basis)
    if oracle.classify(root.e) != root:
        raise DomainError(f"{root!r} is not a Demazure root of this cone")

    x = oracle.lattice.lattice_coordinates(lam)
    if x is None or not contains(g_cone, lam) or pairing(root.rho, x) != 0:
        raise DomainError(f"{tuple(lam)!r} is not a lattice point of the facet of {root.rho!r}")

    replica = oracle.classify(add(root.e, lam))
    if replica is None or replica.rho != root.rho:
        logger.error("Replica of %r by %r left the root set", root, lam)
        raise ConsistencyError(f"Replica of {root!r} by {tuple(lam)!r} is not a root of the same ray")

    return replica


def subcone_witness(g: Cone, g_tilde: Cone, rho: Sequence[int], e0: DemazureRoot) -> tuple[Vector, int]:
    """Direction v in the facet of rho and least k0 with e0 + k·v ∈ g_tilde ∩ roots of rho for k >= k0.

    Both cones are taken in the same coordinates, with lattice Z^n.
    """

    rho = tuple(rho)
    n = g.ambient_rank
    if g_tilde.ambient_rank != n:
        raise DimensionError(f"Cones live in ranks {n} and {g_tilde.ambient_rank}")
    if not (is_full_dimensional(g) and is_full_dimensional(g_tilde)):
        raise DomainError("Both cones must be full-dimensional")
    if not all(contains(g_tilde, x) for x in g.generators):
        raise DomainError(f"Cone {g.generators!r} is not contained in {g_tilde.generators!r}")
    if rho not in dual_rays(g):
        raise DomainError(f"{rho!r} is not a ray of the dual of {g.generators!r}")
    if contains(dual_cone(g_tilde), rho):
        raise DomainError(f"{rho!r} lies in the dual of the larger cone")

    oracle = root_oracle(g, IntegerMatrix.identity(n))
    if oracle.classify(e0.e) != DemazureRoot(e=tuple(e0.e), rho=rho):
        raise DomainError(f"{e0.e!r} is not a Demazure root of ray {rho!r}")

    facet = [x for x in g.generators if pairing(rho, x) == 0]
    total = tuple(map(sum, zip(*facet))) if facet else (0,) * n
    v = primitive(total) if any(total) else total

    for q in dual_cone(g_tilde).generators:
        if pairing(q, v) <= 0 and pairing(q, e0.e) < 0:
            raise ConsistencyError(f"Direction {v!r} never enters the larger cone along {q!r}")

    def accepted(k: int) -> bool:
        candidate = add(e0.e, scale(k, v))
        root = oracle.classify(candidate)
        return contains(g_tilde, candidate) and root is not None and root.rho == rho

    k0 = next(k for k in itertools.count() if accepted(k))
    if not accepted(k0 + 1):
        raise ConsistencyError(f"Witness {e0.e!r} + k·{v!r} fails at k = {k0 + 1}")

    logger.info("Subcone witness for ray %r: v=%r, k0=%d", rho, v, k0)

    return v, k0
