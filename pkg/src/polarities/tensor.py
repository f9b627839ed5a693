"""Stable relations, the tensor product and the internal hom.

Pairs ``(a, b)`` of ``A- x B-`` are indexed ``a * |B-| + b``; with that
convention ``(A x B) x C`` and ``A x (B x C)`` index their lower carriers
identically.  Upper carriers of tensors are powersets of the lower carrier,
column ``T`` being the subset with bitset value ``T``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ._config import check_cap
from .category import IsoWitness, dual_morphism, dual_object, standardize, try_invert
from .core import Polarity, Relation
from .errors import DimensionError
from .morphism import Morphism, compatibilize, compose, hom_enumerate

UNIT = Polarity(Relation.empty(1, 1), ("*",), ("*",))


@dataclass(frozen=True)
class StableRelation:
    left: Polarity
    right: Polarity
    rel: Relation

    @property
    def bits(self) -> int:
        return self.rel.bits


def is_stable(A: Polarity, B: Polarity, T: Relation) -> bool:
    """Compatible from ``A`` to the dual of ``B``: rows closed in ``B``, columns in ``A``."""
    if T.shape != (A.lower_size, B.lower_size):
        raise DimensionError(f"stable relations on {A.lower_size}x{B.lower_size}, got {T.shape}")
    return all(A.cl_lower(c) == c for c in T.cols) and all(B.cl_lower(r) == r for r in T.rows)


def stable_closure(A: Polarity, B: Polarity, T: Relation) -> StableRelation:
    """The least stable relation containing ``T``."""
    return StableRelation(A, B, compatibilize(A, dual_object(B), T).rel)


def _stable_family(A: Polarity, B: Polarity) -> list[int]:
    return [m.rel.bits for m in hom_enumerate(A, dual_object(B))]


def _pair_closure_table(A: Polarity, B: Polarity) -> list[int]:
    """``s(T)`` as a bitset, for every subset ``T`` of ``A- x B-``.

    Stable sets are closed under intersection, so ``s(T)`` is the
    intersection of the stable sets containing ``T``.  Small hom-sets are
    enumerated; otherwise each ``T`` is compatibilized directly.
    """
    n = A.lower_size * B.lower_size
    full = (1 << n) - 1
    if n <= 8:
        family = _stable_family(A, B)
        out = []
        for t in range(1 << n):
            s = full
            for f in family:
                if t & ~f == 0:
                    s &= f
            out.append(s)
        return out
    dB = dual_object(B)
    return [compatibilize(A, dB, Relation.from_bits(A.lower_size, B.lower_size, t)).rel.bits for t in range(1 << n)]


def tensor_object(A: Polarity, B: Polarity) -> Polarity:
    """The standard polarity of the stable closure on ``A- x B-``."""
    check_cap("tensor", A.lower_size * B.lower_size, "|A-| * |B-|")
    return _tensor_object(A, B)


@lru_cache(maxsize=256)
def _tensor_object(A: Polarity, B: Polarity) -> Polarity:
    n = A.lower_size * B.lower_size
    cols = _pair_closure_table(A, B)
    lower = tuple(f"({a},{b})" for a in A.lower_names for b in B.lower_names)
    upper = tuple(f"T{t}" for t in range(1 << n))
    return Polarity(Relation.from_columns(n, cols), lower, upper)


def tensor_morphism(Q: Morphism, S: Morphism) -> Morphism:
    """``(a, c) ~ R`` iff ``a (Q ; s(R) ; S^dual) c``, a morphism ``A x C -> B x D``."""
    A, B, C, D = Q.dom, Q.cod, S.dom, S.cod
    src, dst = tensor_object(A, C), tensor_object(B, D)
    dD = dual_object(D)
    s_dual = dual_morphism(S)
    nb, nd = B.lower_size, D.lower_size
    closures = dst.incidence.cols
    cols = []
    for t in range(1 << (nb * nd)):
        sR = Morphism._trusted(B, dD, Relation.from_bits(nb, nd, closures[t]))
        composite = compose(compose(Q, sR), s_dual).rel
        cols.append(composite.bits)
    return Morphism(src, dst, Relation.from_columns(A.lower_size * C.lower_size, cols))


def _pull_back(src: Polarity, dst: Polarity, perm: list[int]) -> Relation:
    """Row ``i`` of the result is row ``perm[i]`` of ``dst``'s incidence."""
    return Relation(src.lower_size, dst.upper_size, tuple(dst.incidence.rows[p] for p in perm))


def _swap_perm(m: int, n: int) -> list[int]:
    # (a, b) in A x B  ->  index of (b, a) in B x A
    return [b * m + a for a in range(m) for b in range(n)]


def symmetry(A: Polarity, B: Polarity) -> IsoWitness:
    """``(a, b) ~ T`` iff ``(b, a)`` is incident to ``T`` in ``B x A``."""
    AB, BA = tensor_object(A, B), tensor_object(B, A)
    forward = Morphism(AB, BA, _pull_back(AB, BA, _swap_perm(A.lower_size, B.lower_size)))
    return _invert_or_fail(forward, "symmetry")


def associator(A: Polarity, B: Polarity, C: Polarity) -> IsoWitness:
    """``((a, b), c) ~ T`` iff ``(a, (b, c))`` is incident to ``T`` in ``A x (B x C)``."""
    left = tensor_object(tensor_object(A, B), C)
    right = tensor_object(A, tensor_object(B, C))
    forward = Morphism(left, right, _pull_back(left, right, list(range(left.lower_size))))
    return _invert_or_fail(forward, "associator")


def left_unitor(A: Polarity) -> IsoWitness:
    """``I x A`` onto the standardization of ``A``."""
    IxA = tensor_object(UNIT, A)
    std, _ = standardize(A)
    return _invert_or_fail(Morphism(IxA, std, std.incidence), "left unitor")


def right_unitor(A: Polarity) -> IsoWitness:
    AxI = tensor_object(A, UNIT)
    std, _ = standardize(A)
    return _invert_or_fail(Morphism(AxI, std, std.incidence), "right unitor")


def _invert_or_fail(forward: Morphism, what: str) -> IsoWitness:
    witness = try_invert(forward)
    if witness is None:
        raise AssertionError(f"{what} is not an isomorphism")
    return witness


def internal_hom(A: Polarity, B: Polarity) -> Polarity:
    return dual_object(tensor_object(A, dual_object(B)))


def linear_curry(R: Morphism, A: Polarity, B: Polarity, C: Polarity) -> Morphism:
    """``A x B -> C^dual`` to ``A -> (B x C)^dual`` by re-bracketing ``((a, b), c)``."""
    src = tensor_object(A, B)
    if R.dom != src or R.cod != dual_object(C):
        raise DimensionError("morphism is not A x B -> C^dual")
    nb, nc = B.lower_size, C.lower_size
    rows = []
    for a in range(A.lower_size):
        row = 0
        for b in range(nb):
            row |= R.rel.rows[a * nb + b] << (b * nc)
        rows.append(row)
    target = dual_object(tensor_object(B, C))
    return Morphism(A, target, Relation(A.lower_size, nb * nc, tuple(rows)))


def linear_uncurry(R: Morphism, A: Polarity, B: Polarity, C: Polarity) -> Morphism:
    target = dual_object(tensor_object(B, C))
    if R.dom != A or R.cod != target:
        raise DimensionError("morphism is not A -> (B x C)^dual")
    nb, nc = B.lower_size, C.lower_size
    mask = (1 << nc) - 1
    rows = [(R.rel.rows[a] >> (b * nc)) & mask for a in range(A.lower_size) for b in range(nb)]
    return Morphism(tensor_object(A, B), dual_object(C), Relation(A.lower_size * nb, nc, tuple(rows)))


def stable_sets(A: Polarity, B: Polarity) -> list[int]:
    """All stable relations on ``A- x B-`` as bitsets, increasing."""
    return sorted(_stable_family(A, B))


__all__ = [
    "UNIT",
    "StableRelation",
    "associator",
    "internal_hom",
    "is_stable",
    "left_unitor",
    "linear_curry",
    "linear_uncurry",
    "right_unitor",
    "stable_closure",
    "stable_sets",
    "symmetry",
    "tensor_morphism",
    "tensor_object",
]
