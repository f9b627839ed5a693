"""A registry of laws checked on random instances by ``verify``.

Each law draws its own instances from a seeded generator and returns a
:class:`Counterexample` or ``None``.  Seeds are derived from the run seed,
the case number and the law name, so any failure can be replayed alone.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable

from . import oracles
from .category import (
    dual_morphism,
    dual_object,
    factor,
    is_epi,
    is_mono,
    separate,
    standardize,
    try_invert,
)
from .core import Polarity, Relation
from .generators import random_morphism, random_polarity, random_relation
from .io import context_to_obj
from .lattice import (
    c_morphism,
    epsilon,
    g_minus_lower_adjoint,
    g_minus_morphism,
    g_minus_object,
    lattice_unit,
    preserves_joins,
)
from .limits import equalizer, is_reduced, product, tuple_morphism
from .morphism import compatibilize, compose, hom_enumerate, identity, is_compatible_left, is_compatible_right
from .tensor import UNIT, left_unitor, right_unitor, symmetry


@dataclass
class Counterexample:
    law: str
    message: str
    contexts: dict[str, Polarity] = field(default_factory=dict)
    relations: dict[str, tuple[str, str, Relation]] = field(default_factory=dict)
    seed: str = ""

    def reproducer(self) -> str:
        """One line of JSON holding the failing contexts and relations."""
        return json.dumps(
            {
                "law": self.law,
                "seed": self.seed,
                "message": self.message,
                "contexts": {k: context_to_obj(P) for k, P in self.contexts.items()},
                "relations": {
                    k: {"dom": d, "cod": c, "relation": r.to_matrix()} for k, (d, c, r) in self.relations.items()
                },
            },
            separators=(",", ":"),
        )


@dataclass(frozen=True)
class Law:
    name: str
    description: str
    check: Callable[[random.Random, int], Counterexample | None]


REGISTRY: list[Law] = []


def law(name: str, description: str):
    def register(fn):
        REGISTRY.append(Law(name, description, fn))
        return fn

    return register


def _fail(name, message, contexts, **morphisms):
    rels = {}
    names = {id(P): k for k, P in contexts.items()}
    for k, m in morphisms.items():
        for P in (m.dom, m.cod):
            if id(P) not in names:
                key = f"{k}_{'dom' if P is m.dom else 'cod'}"
                contexts[key] = P
                names[id(P)] = key
        rels[k] = (names[id(m.dom)], names[id(m.cod)], m.rel)
    return Counterexample(name, message, contexts, rels)


def _chain(rng, size, n):
    objs = [random_polarity(rng, size) for _ in range(n + 1)]
    return objs, [random_morphism(rng, objs[i], objs[i + 1]) for i in range(n)]


@law("identity", "identity morphisms are units for composition")
def _identity(rng, size):
    (A, B), (R,) = _chain(rng, size, 1)
    if compose(identity(A), R) != R or compose(R, identity(B)) != R:
        return _fail("identity", "identity is not a unit", {"A": A, "B": B}, R=R)


@law("associativity", "(R;S);T equals R;(S;T)")
def _assoc(rng, size):
    (A, B, C, D), (R, S, T) = _chain(rng, size, 3)
    if compose(compose(R, S), T) != compose(R, compose(S, T)):
        return _fail("associativity", "composition is not associative", {"A": A, "B": B, "C": C, "D": D}, R=R, S=S, T=T)


@law("compatibility", "the six left and six right compatibility conditions agree with each other and the production test")
def _hexad(rng, size):
    A, B = random_polarity(rng, min(size, 3)), random_polarity(rng, min(size, 3))
    rel = random_relation(rng, A.lower_size, B.upper_size)
    left, right = oracles.left_conditions(A, rel), oracles.right_conditions(B, rel)
    if len(set(left)) > 1 or left[0] != is_compatible_left(A, rel):
        return Counterexample("compatibility", f"left conditions {left}", {"A": A, "B": B}, {"R": ("A", "B", rel)})
    if len(set(right)) > 1 or right[0] != is_compatible_right(B, rel):
        return Counterexample("compatibility", f"right conditions {right}", {"A": A, "B": B}, {"R": ("A", "B", rel)})


@law("compatibilize", "compatibilize gives the least compatible relation containing its input")
def _compat(rng, size):
    A, B = random_polarity(rng, min(size, 3)), random_polarity(rng, min(size, 3))
    rel = random_relation(rng, A.lower_size, B.upper_size, 0.2)
    got = compatibilize(A, B, rel).rel
    if got != oracles.least_compatible_superset(A, B, rel):
        return Counterexample("compatibilize", "not the least compatible superset", {"A": A, "B": B}, {"R": ("A", "B", rel)})


@law("duality", "dual is an involution and reverses composition")
def _duality(rng, size):
    (A, B, C), (R, S) = _chain(rng, size, 2)
    ctx = {"A": A, "B": B, "C": C}
    if dual_object(dual_object(A)) != A or dual_morphism(dual_morphism(R)) != R:
        return _fail("duality", "dual is not an involution", ctx, R=R)
    if dual_morphism(compose(R, S)) != compose(dual_morphism(S), dual_morphism(R)):
        return _fail("duality", "dual does not reverse composition", ctx, R=R, S=S)


@law("mono-epi", "mono and epi tests agree with the closure characterizations")
def _mono_epi(rng, size):
    (A, B), (R,) = _chain(rng, size, 1)
    if is_mono(R) != oracles.is_mono_by_closure(R.rel, A) or is_epi(R) != oracles.is_epi_by_closure(R.rel, B):
        return _fail("mono-epi", "mono/epi disagrees with the closure criterion", {"A": A, "B": B}, R=R)


@law("factorization", "factor(R) is epi then mono and recomposes to R; iso exactly when mono and epi")
def _factor(rng, size):
    (A, B), (R,) = _chain(rng, size, 1)
    f = factor(R)
    if compose(f.epi, f.mono) != R or not is_epi(f.epi) or not is_mono(f.mono):
        return _fail("factorization", "bad epi-mono factorization", {"A": A, "B": B}, R=R)
    w = try_invert(R)
    if (w is not None) != (is_mono(R) and is_epi(R)) or (w is not None and not w.check()):
        return _fail("factorization", "try_invert disagrees with mono and epi", {"A": A, "B": B}, R=R)


@law("separate-standardize", "separation and standardization come with working isomorphisms")
def _normal_forms(rng, size):
    A = random_polarity(rng, size)
    for what, (_, w) in (("separate", separate(A)), ("standardize", standardize(A))):
        if not w.check():
            return Counterexample("separate-standardize", f"{what} witness fails", {"A": A})


@law("product", "tupling then projecting recovers each leg")
def _product(rng, size):
    B, A1, A2 = (random_polarity(rng, min(size, 3)) for _ in range(3))
    R1, R2 = random_morphism(rng, B, A1), random_morphism(rng, B, A2)
    P = product([A1, A2])
    T = tuple_morphism(B, [R1, R2], P)
    if compose(T, P.projections[0]) != R1 or compose(T, P.projections[1]) != R2:
        return _fail("product", "projections do not recover the legs", {"B": B, "A1": A1, "A2": A2}, R1=R1, R2=R2)


@law("equalizer", "the equalizer inclusion equalizes, and equalizing maps from the unit factor through it once")
def _equalizer(rng, size):
    (A, B), (R,) = _chain(rng, size, 1)
    S = random_morphism(rng, A, B)
    E, incl = equalizer(R, S)
    if compose(incl, R) != compose(incl, S):
        return _fail("equalizer", "inclusion does not equalize", {"A": A, "B": B}, R=R, S=S)
    for T in hom_enumerate(UNIT, A):
        if compose(T, R) == compose(T, S):
            through = [U for U in hom_enumerate(UNIT, E) if compose(U, incl) == T]
            if len(through) != 1:
                return _fail("equalizer", f"an equalizing map factors {len(through)} times", {"A": A, "B": B}, R=R, S=S, T=T)


@law("g-minus", "G- preserves identities, reverses composition and yields meet-preserving maps")
def _g_minus(rng, size):
    (A, B, C), (R, S) = _chain(rng, size, 2)
    ctx = {"A": A, "B": B, "C": C}
    g = g_minus_morphism(R)
    if g_minus_morphism(identity(A)).table != tuple(range(g.cod.size)):
        return Counterexample("g-minus", "identity not preserved", {"A": A})
    if not g.preserves_meets():
        return _fail("g-minus", "G-(R) does not preserve meets", ctx, R=R)
    if g_minus_morphism(compose(R, S)).table != g_minus_morphism(S).then(g).table:
        return _fail("g-minus", "G-(R;S) differs from G-(R) after G-(S)", ctx, R=R, S=S)


@law("epsilon", "membership A -> C(G-(A)) is a natural isomorphism")
def _epsilon(rng, size):
    (A, B), (R,) = _chain(rng, size, 1)
    eA, eB = epsilon(A), epsilon(B)
    if not eA.check():
        return Counterexample("epsilon", "membership is not an iso", {"A": A})
    if compose(R, eB.forward) != compose(eA.forward, c_morphism(g_minus_morphism(R))):
        return _fail("epsilon", "naturality square fails", {"A": A, "B": B}, R=R)
    if not lattice_unit(g_minus_object(A)).check():
        return Counterexample("epsilon", "lattice unit fails", {"A": A})


@law("adjoints", "the adjoint characterizations agree; preserves_joins matches a meet-preserving lower adjoint")
def _adjoints(rng, size):
    (A, B), (R,) = _chain(rng, min(size, 3), 1)
    conds = oracles.adjoint_conditions(R)[1:]
    if len(set(conds)) > 1 or conds[-1] != preserves_joins(R):
        return _fail("adjoints", f"adjoint characterizations disagree: {conds}", {"A": A, "B": B}, R=R)
    if preserves_joins(R) != g_minus_lower_adjoint(R).preserves_meets(exhaustive=True):
        return _fail("adjoints", "preserves_joins differs from the lower adjoint preserving meets", {"A": A, "B": B}, R=R)


@law("reduction", "is_reduced agrees with the closed-set counting criterion")
def _reduction(rng, size):
    A = random_polarity(rng, size)
    if is_reduced(A) != oracles.is_reduced_by_counting(A):
        return Counterexample("reduction", "is_reduced disagrees with counting", {"A": A})


@law("tensor", "symmetry and unitors invert")
def _tensor(rng, size):
    A, B = random_polarity(rng, min(size, 3)), random_polarity(rng, min(size, 2))
    for what, make in (("symmetry", lambda: symmetry(A, B)), ("left unitor", lambda: left_unitor(A)), ("right unitor", lambda: right_unitor(A))):
        try:
            ok = make().check()
        except AssertionError:
            ok = False
        if not ok:
            return Counterexample("tensor", f"{what} is not an iso", {"A": A, "B": B})


@dataclass
class VerifyReport:
    seed: int
    cases: int
    max_size: int
    checked: dict[str, int]
    failure: Counterexample | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def to_obj(self) -> dict:
        out = {"seed": self.seed, "cases": self.cases, "max_size": self.max_size, "checked": self.checked, "ok": self.ok}
        if self.failure:
            out["failure"] = json.loads(self.failure.reproducer())
        return out


def case_seed(seed: int, case: int, name: str) -> str:
    return f"{seed}:{case}:{name}"


def verify(seed: int = 0, cases: int = 100, max_size: int = 4, laws: list[Law] | None = None) -> VerifyReport:
    """Run every law on ``cases`` instances; stop at the first counterexample."""
    laws = REGISTRY if laws is None else laws
    checked = {lw.name: 0 for lw in laws}
    for case in range(cases):
        for lw in laws:
            s = case_seed(seed, case, lw.name)
            result = lw.check(random.Random(s), max_size)
            checked[lw.name] += 1
            if result is not None:
                result.seed = s
                return VerifyReport(seed, cases, max_size, checked, result)
    return VerifyReport(seed, cases, max_size, checked)


