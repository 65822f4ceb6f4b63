"""The bijection between fusion subcategories and unitary subalgebras.

A unitary subalgebra of the adjoint algebra is encoded by block-row selections
relative to an adapted block structure: the subcategory's cointegral is an
idempotent of CF(C), the blocks are re-based so it becomes a diagonal 0/1
pattern, and the rows carrying 1 name the simple summands of the subalgebra.
Restriction of class functions, the central subspace with its class-sum basis,
the induced partition of the simples, and the lattice operations all live
here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .char_theory import (
    CentralElement,
    ClassFunction,
    chi,
    subcategory_cointegral,
    unit_central_element,
)
from .fusion_ring import (
    FusionRingData,
    FusionSubcategory,
    enumerate_subcategories,
    subcategory_closure,
    subcategory_join,
    subcategory_meet,
    subcategory_product,
)
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    orthonormal_basis,
    subspace_contains,
    subspace_intersection,
)
from .wedderburn import BlockStructure, adapt_to_idempotent

__all__ = [
    "ClosureViolation",
    "PartitionMismatch",
    "ClosureFailure",
    "CEIntersectionMismatch",
    "RoundTripFailure",
    "MonotonicityFailure",
    "InequalityViolation",
    "SubalgebraIndex",
    "LatticeEntry",
    "LatticeTable",
    "subalgebra_from_subcategory",
    "epsilon_L",
    "restrict",
    "subcategory_from_subalgebra",
    "block_partition",
    "ce_basis",
    "pi_down",
    "product_subalgebra",
    "intersect_subalgebra",
    "verify_dim_inequality",
    "verify_cointegral_trace_sum",
    "build_lattice",
]

# Comparison of restriction vectors divides by dimensions, which amplifies
# noise; partition-level comparisons therefore run at a looser tolerance.
PARTITION_TOL = 1e-7


class ClosureViolation(Exception):
    """The computed simple-object set is not closed under fusion."""


class PartitionMismatch(Exception):
    """Character-side and central-side partitions of the simples disagree."""


class ClosureFailure(Exception):
    """The class-sum span of a subalgebra is not multiplicatively closed."""


class CEIntersectionMismatch(Exception):
    """Central subspaces do not intersect in the predicted dimension."""


class RoundTripFailure(Exception):
    """A subcategory does not survive the round trip through its subalgebra."""


class MonotonicityFailure(Exception):
    """The correspondence failed to reverse an inclusion."""


class InequalityViolation(Exception):
    """The product-dimension bound failed."""


@dataclass(frozen=True, eq=False)
class SubalgebraIndex:
    """A unitary subalgebra of the adjoint algebra, as block-row data.

    ``rows[j]`` lists the selected rows of block j in the adapted structure
    ``blocks``; ``dim_l`` is the subalgebra dimension (a sum of summand
    dimensions) and ``ce_dim`` the dimension of its central subspace.
    """

    base: BlockStructure
    blocks: BlockStructure
    rows: tuple[tuple[int, ...], ...]
    dim_l: float
    ce_dim: int

    @property
    def ring(self) -> FusionRingData:
        return self.blocks.ring

    @property
    def block_indices(self) -> tuple[int, ...]:
        return tuple(j for j, r in enumerate(self.rows) if r)

    def selected_pairs(self) -> list[tuple[int, int]]:
        return [(j, s) for j, r in enumerate(self.rows) for s in r]

    @cached_property
    def _ce_span(self) -> np.ndarray:
        vecs = [b.coeffs for b in ce_basis(self, check=False)]
        return orthonormal_basis(vecs)

    def __repr__(self) -> str:
        return f"SubalgebraIndex(rows={self.rows}, dim={self.dim_l:.6g})"


def subalgebra_from_subcategory(
    D: FusionSubcategory, B: BlockStructure, tol: Tolerance = DEFAULT_TOL
) -> SubalgebraIndex:
    """The unitary subalgebra whose trivial-restriction subcategory is D.

    Adapts the block structure to the subcategory's cointegral and reads off
    the diagonal 0/1 pattern as the block-row selection.
    """
    if D.ring is not B.ring:
        raise ValueError("subcategory and block structure belong to different rings")
    lam = subcategory_cointegral(D)
    adapted = adapt_to_idempotent(B, lam, tol)
    comps = adapted.expand(lam.coeffs)
    rows = []
    for blk, P in zip(adapted.blocks, comps):
        selected = []
        for s in range(blk.m):
            val = complex(P[s, s])
            if abs(val - 1) <= tol.snap_tol:
                selected.append(s)
            elif abs(val) > tol.snap_tol:
                raise ClosureViolation(f"diagonal coefficient {val!r} is not 0 or 1")
        off = P - np.diag(np.diag(P))
        if np.max(np.abs(off)) > tol.snap_tol:
            raise ClosureViolation("adapted cointegral has off-diagonal coefficients")
        rows.append(tuple(selected))
    if not rows or 0 not in rows[0]:
        raise ClosureViolation("unit summand is missing from the subalgebra")
    dim_l = float(
        sum(adapted.blocks[j].summand_dim * len(r) for j, r in enumerate(rows))
    )
    ce_dim = int(sum(len(r) * adapted.blocks[j].m for j, r in enumerate(rows)))
    return SubalgebraIndex(B, adapted, tuple(rows), dim_l, ce_dim)


def epsilon_L(L: SubalgebraIndex) -> ClassFunction:
    """Restriction of the unit class function: the sum of selected diagonal units."""
    total = np.zeros(L.ring.rank, dtype=complex)
    for j, r in enumerate(L.rows):
        for t in r:
            total += L.blocks.blocks[j].units[t, t]
    return ClassFunction(L.ring, total)


def restrict(f: ClassFunction, L: SubalgebraIndex) -> ClassFunction:
    """Component of f in the subalgebra's character space, embedded in CF(C).

    Expands f in the adapted matrix units and keeps exactly the coefficients
    whose column index is a selected row.
    """
    comps = L.blocks.expand(f.coeffs)
    total = np.zeros(L.ring.rank, dtype=complex)
    for j, (blk, P) in enumerate(zip(L.blocks.blocks, comps)):
        keep = L.rows[j]
        for t in keep:
            for s in range(blk.m):
                total += P[s, t] * blk.units[s, t]
    return ClassFunction(L.ring, total)


def subcategory_from_subalgebra(
    L: SubalgebraIndex, tol: Tolerance = DEFAULT_TOL
) -> FusionSubcategory:
    """Simples whose characters restrict to dimension multiples of epsilon_L."""
    ring = L.ring
    eps = epsilon_L(L).coeffs
    members = []
    for i in range(ring.rank):
        res = restrict(chi(ring, i), L).coeffs
        if np.max(np.abs(res - ring.dims[i] * eps)) <= PARTITION_TOL * max(1.0, ring.dims[i]):
            members.append(i)
    indices = tuple(members)
    closed = subcategory_closure(ring, indices)
    if closed.indices != indices:
        raise ClosureViolation(
            f"computed simple set {indices} is not fusion closed (closure {closed.indices})"
        )
    return closed


def block_partition(
    L: SubalgebraIndex, tol: Tolerance = DEFAULT_TOL
) -> tuple[tuple[int, ...], ...]:
    """Partition of the simples by normalized restriction, unit class first.

    Cross-checked against the partition induced by the central subspace: the
    indicator idempotents of both partitions must agree and lie in the span of
    the class-sum basis.
    """
    ring = L.ring
    vecs = [restrict(chi(ring, i), L).coeffs / ring.dims[i] for i in range(ring.rank)]
    classes: list[list[int]] = []
    for i, v in enumerate(vecs):
        for cls in classes:
            if np.max(np.abs(v - vecs[cls[0]])) <= PARTITION_TOL:
                cls.append(i)
                break
        else:
            classes.append([i])
    classes.sort(key=lambda cls: (0 not in cls, cls[0]))

    # Central-side partition: coordinates i, i' are equivalent when every
    # element of the central subspace has equal i and i' coordinates.
    span = L._ce_span
    profiles = [span[i, :] for i in range(ring.rank)]
    scale = max(1.0, float(np.max(np.abs(span)))) if span.size else 1.0
    ce_classes: list[list[int]] = []
    for i, prof in enumerate(profiles):
        for cls in ce_classes:
            if np.max(np.abs(prof - profiles[cls[0]])) <= PARTITION_TOL * scale:
                cls.append(i)
                break
        else:
            ce_classes.append([i])
    ce_classes.sort(key=lambda cls: (0 not in cls, cls[0]))
    if [sorted(c) for c in classes] != [sorted(c) for c in ce_classes]:
        raise PartitionMismatch(
            f"character partition {classes} differs from central partition {ce_classes}"
        )

    for cls in classes:
        ell = np.zeros(ring.rank, dtype=complex)
        ell[cls] = 1.0
        if not subspace_contains(span, [ell], tol):
            raise PartitionMismatch(
                f"indicator idempotent of class {cls} is outside the central subspace"
            )
    return tuple(tuple(sorted(c)) for c in classes)


def ce_basis(
    L: SubalgebraIndex, tol: Tolerance = DEFAULT_TOL, check: bool = True
) -> list[CentralElement]:
    """Class-sum basis of the subalgebra's central subspace.

    The listed class sums are C^j_st with j selected, s a selected row, and t
    arbitrary.  When ``check`` is set, verifies that the span contains the
    unit and is closed under multiplication.
    """
    ring = L.ring
    out = []
    for j, r in enumerate(L.rows):
        blk = L.blocks.blocks[j]
        for s in r:
            for t in range(blk.m):
                out.append(CentralElement(ring, blk.class_sums[s, t]))
    if check:
        vecs = [b.coeffs for b in out]
        span = orthonormal_basis(vecs)
        if span.shape[1] != L.ce_dim:
            raise ClosureFailure(
                f"class-sum span has dimension {span.shape[1]}, expected {L.ce_dim}"
            )
        if not subspace_contains(span, [unit_central_element(ring).coeffs], tol):
            raise ClosureFailure("central subspace does not contain the unit")
        for a in vecs:
            for b in vecs:
                if not subspace_contains(span, [a * b], tol):
                    raise ClosureFailure("central subspace is not closed under product")
    return out


def pi_down(z: CentralElement, L: SubalgebraIndex, tol: Tolerance = DEFAULT_TOL) -> CentralElement:
    """Projection of a central element onto the subalgebra's central subspace.

    Expands z in the full class-sum basis of the adapted structure and zeroes
    every coefficient outside the subalgebra's index set.
    """
    if z.ring is not L.ring:
        raise ValueError("central element and subalgebra belong to different rings")
    ring = L.ring
    B = L.blocks
    index = B.unit_index()
    cols = np.column_stack([B.blocks[j].class_sums[s, t] for j, s, t in index])
    coeffs = np.linalg.solve(cols, z.coeffs)
    keep = np.zeros(len(index), dtype=bool)
    for pos, (j, s, _t) in enumerate(index):
        keep[pos] = s in L.rows[j]
    return CentralElement(ring, cols[:, keep] @ coeffs[keep])


def product_subalgebra(
    L: SubalgebraIndex, M: SubalgebraIndex, tol: Tolerance = DEFAULT_TOL
) -> SubalgebraIndex:
    """Smallest unitary subalgebra containing both, via the correspondence.

    Realized as the subalgebra of the meet of the two subcategories.
    """
    _check_same_base(L, M)
    SL = subcategory_from_subalgebra(L, tol)
    SM = subcategory_from_subalgebra(M, tol)
    return subalgebra_from_subcategory(subcategory_meet(SL, SM), L.base, tol)


def intersect_subalgebra(
    L: SubalgebraIndex, M: SubalgebraIndex, tol: Tolerance = DEFAULT_TOL
) -> SubalgebraIndex:
    """Intersection of two subalgebras, via the correspondence.

    Realized as the subalgebra of the join of the two subcategories; the
    result's central dimension is cross-checked against the actual subspace
    intersection of the two class-sum spans.
    """
    _check_same_base(L, M)
    SL = subcategory_from_subalgebra(L, tol)
    SM = subcategory_from_subalgebra(M, tol)
    result = subalgebra_from_subcategory(subcategory_join(SL, SM), L.base, tol)
    meet_dim = len(subspace_intersection(L._ce_span, M._ce_span, tol))
    if meet_dim != result.ce_dim:
        raise CEIntersectionMismatch(
            f"central subspaces intersect in dimension {meet_dim}, expected {result.ce_dim}"
        )
    return result


def _check_same_base(L: SubalgebraIndex, M: SubalgebraIndex) -> None:
    if L.ring is not M.ring:
        raise ValueError("subalgebras belong to different rings")


def verify_dim_inequality(
    L: SubalgebraIndex, M: SubalgebraIndex, tol: Tolerance = DEFAULT_TOL
) -> tuple[float, float, bool]:
    """Check dim(LM) <= dim(L) dim(M) / dim(L n M), with equality diagnostics.

    Returns (lhs, rhs, orders_agree) where orders_agree reports whether the
    two raw subcategory products coincide.  On a commutative ring the two
    sides must agree within tolerance.
    """
    _check_same_base(L, M)
    SL = subcategory_from_subalgebra(L, tol)
    SM = subcategory_from_subalgebra(M, tol)
    lhs = product_subalgebra(L, M, tol).dim_l
    inter = intersect_subalgebra(L, M, tol)
    rhs = L.dim_l * M.dim_l / inter.dim_l
    bound = 1e-8 * max(1.0, rhs)
    if lhs > rhs + bound:
        raise InequalityViolation(f"dim(LM) = {lhs} exceeds bound {rhs}")
    prod_lm, _ = subcategory_product(SL, SM)
    prod_ml, _ = subcategory_product(SM, SL)
    equal = prod_lm == prod_ml
    if L.ring.commutative and abs(lhs - rhs) > bound:
        raise InequalityViolation(
            f"commutative ring but dim(LM) = {lhs} differs from {rhs}"
        )
    return lhs, rhs, equal


def verify_cointegral_trace_sum(
    D: FusionSubcategory, B: BlockStructure, tol: Tolerance = DEFAULT_TOL
) -> float:
    """Residual of dim(C)/fpdim(D) = weighted diagonal sum of the cointegral.

    Expands the subcategory cointegral in the (not necessarily adapted) unit
    basis and sums diagonal coefficients weighted by summand dimension; also
    asserts that after adaptation all coefficients on unselected rows vanish.
    """
    lam = subcategory_cointegral(D)
    comps = B.expand(lam.coeffs)
    total = 0.0 + 0.0j
    for blk, P in zip(B.blocks, comps):
        total += np.trace(P) * blk.summand_dim
    residual = abs(total - D.ring.global_dim / D.fpdim)

    L = subalgebra_from_subcategory(D, B, tol)
    comps_ad = L.blocks.expand(lam.coeffs)
    for j, P in enumerate(comps_ad):
        selected = set(L.rows[j])
        for s in range(P.shape[0]):
            if s not in selected:
                residual = max(residual, float(np.max(np.abs(P[s, :]))))
    return float(residual)


@dataclass(frozen=True, eq=False)
class LatticeEntry:
    subcategory: FusionSubcategory
    subalgebra: SubalgebraIndex
    partition: tuple[tuple[int, ...], ...]


@dataclass(frozen=True, eq=False)
class LatticeTable:
    ring: FusionRingData
    entries: tuple[LatticeEntry, ...]
    hasse_edges: tuple[tuple[int, int], ...]


def build_lattice(
    ring: FusionRingData, B: BlockStructure, tol: Tolerance = DEFAULT_TOL
) -> LatticeTable:
    """Full correspondence table between subcategories and subalgebras.

    Verifies, for every enumerated subcategory: the round trip through its
    subalgebra, injectivity of the central subspaces, and anti-monotonicity of
    the correspondence.  Emits Hasse edges of the subcategory inclusion order.
    """
    subcats = enumerate_subcategories(ring)
    entries = []
    for D in subcats:
        L = subalgebra_from_subcategory(D, B, tol)
        back = subcategory_from_subalgebra(L, tol)
        if back.indices != D.indices:
            raise RoundTripFailure(f"{D.indices} round-tripped to {back.indices}")
        entries.append(LatticeEntry(D, L, block_partition(L, tol)))

    for a in range(len(entries)):
        for b in range(a + 1, len(entries)):
            La, Lb = entries[a].subalgebra, entries[b].subalgebra
            same_dim = La._ce_span.shape[1] == Lb._ce_span.shape[1]
            if same_dim and subspace_contains(La._ce_span, Lb._ce_span, tol):
                raise RoundTripFailure(
                    "distinct subcategories produced identical central subspaces: "
                    f"{entries[a].subcategory.indices} vs {entries[b].subcategory.indices}"
                )

    for a, ea in enumerate(entries):
        for b, eb in enumerate(entries):
            if a == b:
                continue
            if set(ea.subcategory.indices) <= set(eb.subcategory.indices):
                inner = eb.subalgebra._ce_span
                outer = ea.subalgebra._ce_span
                if not subspace_contains(outer, inner, tol):
                    raise MonotonicityFailure(
                        f"inclusion {ea.subcategory.indices} <= {eb.subcategory.indices} "
                        "was not reversed by the central subspaces"
                    )

    edges = []
    sets = [set(e.subcategory.indices) for e in entries]
    for a in range(len(entries)):
        for b in range(len(entries)):
            if a == b or not sets[a] < sets[b]:
                continue
            if any(sets[a] < sets[c] < sets[b] for c in range(len(entries))):
                continue
            edges.append((a, b))
    return LatticeTable(ring, tuple(entries), tuple(sorted(edges)))
