"""Descriptive and strong proximity relations with an axiom-checking harness.

A finite descriptive space is a universe of points plus a feature map Phi
sending each point to a k-vector. Descriptions are compared component-wise
within a match tolerance tau; tau = 0 is exact equality. On top of that sit
three relations between labeled regions:

* dnear      descriptive nearness, nonempty descriptive intersection
* sn         strong nearness, overlapping interiors (spatial, Phi-free)
* snd        descriptive strong nearness, descriptively overlapping interiors

Singleton arguments follow the singleton axioms: {x} is strongly near A iff
x lies in the interior of A, {x} and {y} are strongly near iff x = y, and the
descriptive versions replace point identity with description matching.
When a `universe` region is supplied, either argument whose point set equals
the whole universe is near everything nonempty; plain two-argument calls do
not apply that clause.

check_axioms stress-tests the relations: it samples labeled subregions of a
space with a seeded generator and asserts every axiom of the requested
family, reporting violations with witnesses. Universal-premise axioms that
need exhaustive quantification (the descriptive transitivity and
point-equality axioms) are additionally verified over every subset pair or
triple when the universe has at most EXHAUSTIVE_LIMIT points. The harness
runs on an internal bitmask representation for speed; a unit test pins the
bitmask relations to the public ones.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable

import numpy as np

from .geometry import POINT_TOL, Region, as_point, as_points, lexsorted

EXHAUSTIVE_LIMIT = 6

FAMILY_DESCRIPTIVE = "Lodato-descriptive"
FAMILY_STRONG = "strong"
FAMILY_DESCRIPTIVE_STRONG = "descriptive-strong"
FAMILIES = (FAMILY_DESCRIPTIVE, FAMILY_STRONG, FAMILY_DESCRIPTIVE_STRONG)

__all__ = [
    "EXHAUSTIVE_LIMIT",
    "FAMILIES",
    "FAMILY_DESCRIPTIVE",
    "FAMILY_STRONG",
    "FAMILY_DESCRIPTIVE_STRONG",
    "FeatureMap",
    "DescriptiveSpace",
    "AxiomReport",
    "SpcReport",
    "feature_map_from_config",
    "describe_region",
    "descriptive_intersection",
    "dnear",
    "sn",
    "snd",
    "region_union",
    "map_region",
    "check_axioms",
    "spc_check",
    "sample_region_pairs",
    "random_space",
]


# ---------------------------------------------------------------------------
# feature maps and spaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FeatureMap:
    """Total feature map Phi: point -> R^arity with a component-wise match tolerance."""

    arity: int
    evaluator: Callable[[np.ndarray], np.ndarray]
    match_tolerance: float = 0.0
    name: str = "custom"

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError("feature arity must be at least 1")
        if self.match_tolerance < 0:
            raise ValueError("match tolerance must be nonnegative")

    def __call__(self, p) -> np.ndarray:
        v = np.atleast_1d(np.asarray(self.evaluator(as_point(p)), dtype=float))
        if v.shape != (self.arity,):
            raise ValueError(
                f"feature map {self.name!r} returned shape {v.shape}, expected ({self.arity},)"
            )
        if not np.all(np.isfinite(v)):
            raise ValueError(f"feature map {self.name!r} returned non-finite values")
        return v


def _grid_neighbor_count(width: int, height: int, cell) -> float:
    i, j = int(round(cell[0])), int(round(cell[1]))
    if not (0 <= i < width and 0 <= j < height):
        raise ValueError(f"cell ({i}, {j}) outside {width}x{height} grid")
    return float((i > 0) + (i < width - 1) + (j > 0) + (j < height - 1))


def feature_map_from_config(config: dict, dim: int | None = None) -> FeatureMap:
    """Build a named feature map from a JSON-style config dict.

    Recognized names: "coords", "norm", "even-coords", "adjacency-count"
    (params width, height), "constant" (param value). "coords" and
    "even-coords" need the point dimension, either as a "dim" entry or via
    the dim argument. Optional "tolerance" sets the match tolerance.
    """
    cfg = dict(config)
    name = cfg.pop("name", None)
    tol = float(cfg.pop("tolerance", 0.0))
    if name == "coords":
        d = int(cfg.pop("dim", dim or 0))
        if d < 1:
            raise ValueError("coords feature map needs a dimension")
        fm = FeatureMap(d, lambda p: p, tol, "coords")
    elif name == "even-coords":
        d = int(cfg.pop("dim", dim or 0))
        if d < 1:
            raise ValueError("even-coords feature map needs a dimension")
        fm = FeatureMap(d, lambda p: np.abs(p), tol, "even-coords")
    elif name == "norm":
        fm = FeatureMap(1, lambda p: np.array([np.linalg.norm(p)]), tol, "norm")
    elif name == "adjacency-count":
        w, h = int(cfg.pop("width")), int(cfg.pop("height"))
        if w < 1 or h < 1:
            raise ValueError("adjacency-count needs positive grid dimensions")
        fm = FeatureMap(1, lambda p: np.array([_grid_neighbor_count(w, h, p)]), tol, "adjacency-count")
    elif name == "constant":
        value = np.atleast_1d(np.asarray(cfg.pop("value"), dtype=float))
        fm = FeatureMap(value.size, lambda p, v=value: v, tol, "constant")
    else:
        raise ValueError(f"unknown feature map name: {name!r}")
    cfg.pop("dim", None)
    if cfg:
        raise ValueError(f"unrecognized feature map parameters: {sorted(cfg)}")
    return fm


@dataclass(frozen=True)
class DescriptiveSpace:
    """Finite universe of points with a feature map."""

    universe: np.ndarray
    features: FeatureMap

    def __post_init__(self):
        object.__setattr__(self, "universe", as_points(self.universe))

    @property
    def size(self) -> int:
        return self.universe.shape[0]

    @property
    def dimension(self) -> int:
        return self.universe.shape[1]

    @cached_property
    def feature_matrix(self) -> np.ndarray:
        return np.array([self.features(p) for p in self.universe])

    @cached_property
    def match_matrix(self) -> np.ndarray:
        """Boolean (m, m) matrix of description matches within tolerance."""
        F = self.feature_matrix
        d = np.max(np.abs(F[:, None, :] - F[None, :, :]), axis=2)
        return d <= self.features.match_tolerance

    def region(self, indices, interior=None) -> Region:
        """Region on universe points; ``interior`` lists the interior indices.

        ``interior=None`` marks every selected point interior. Interior
        indices must be a subset of ``indices``.
        """
        idx = np.asarray(indices, dtype=int)
        if interior is None:
            mask = np.full(idx.size, True)
        else:
            want = set(int(i) for i in np.asarray(interior, dtype=int).ravel())
            leftover = want - set(int(i) for i in idx)
            if leftover:
                raise ValueError(f"interior indices {sorted(leftover)} are not in the region")
            mask = np.array([int(i) in want for i in idx])
        return Region(self.universe[idx], mask)


# ---------------------------------------------------------------------------
# core relations
# ---------------------------------------------------------------------------


def _feature_rows(points: np.ndarray, fm: FeatureMap) -> np.ndarray:
    return np.array([fm(p) for p in points])


def _matches_image(vec: np.ndarray, image: np.ndarray, tol: float) -> bool:
    # membership of a description in a raw image, component-wise within tol
    return bool(np.any(np.max(np.abs(image - vec), axis=1) <= tol))


def describe_region(region: Region, features: FeatureMap) -> np.ndarray:
    """The description set Phi(A): feature vectors of the region's points.

    Duplicates within the match tolerance are removed (greedy, in canonical
    lexicographic order) so the result is a set, deterministically ordered.
    """
    rows = lexsorted(_feature_rows(region.points, features))
    tol = features.match_tolerance
    kept: list[np.ndarray] = []
    for r in rows:
        if not kept or not _matches_image(r, np.array(kept), tol):
            kept.append(r)
    return np.array(kept)


def _dedupe_points(points: np.ndarray) -> np.ndarray:
    out: list[np.ndarray] = []
    for p in points:
        if not out or not np.any(
            np.linalg.norm(np.array(out) - p, axis=1) <= POINT_TOL
        ):
            out.append(p)
    return np.array(out)


def descriptive_intersection(a: Region, b: Region, features: FeatureMap) -> np.ndarray:
    """Points of A union B whose description matches both Phi(A) and Phi(B).

    Matching is against the raw images (every point's description, before
    dedup), component-wise within the match tolerance. The result is in
    canonical lexicographic order; tau = 0 gives the exact textbook set.
    """
    if a.dimension != b.dimension:
        raise ValueError("regions must share a dimension")
    fa = _feature_rows(a.points, features)
    fb = _feature_rows(b.points, features)
    union = _dedupe_points(np.concatenate([a.points, b.points]))
    tol = features.match_tolerance
    hits = []
    for p in union:
        v = features(p)
        if _matches_image(v, fa, tol) and _matches_image(v, fb, tol):
            hits.append(p)
    if not hits:
        return np.empty((0, a.dimension))
    return lexsorted(np.array(hits))


def dnear(a: Region, b: Region, features: FeatureMap) -> bool:
    """Descriptive nearness: the descriptive intersection is nonempty."""
    return descriptive_intersection(a, b, features).shape[0] > 0


def _point_in_set(p: np.ndarray, pts: np.ndarray) -> bool:
    if pts.shape[0] == 0:
        return False
    return bool(np.any(np.linalg.norm(pts - p, axis=1) <= POINT_TOL))


def _same_point_set(a: np.ndarray, b: np.ndarray) -> bool:
    return all(_point_in_set(p, b) for p in a) and all(_point_in_set(p, a) for p in b)


def _is_universe(r: Region, universe: Region | None) -> bool:
    return universe is not None and _same_point_set(r.points, universe.points)


def sn(a: Region, b: Region, universe: Region | None = None) -> bool:
    """Strong nearness.

    Non-singleton regions are strongly near iff their interiors share a
    point (within 1e-9). A singleton {x} is strongly near B iff x lies in
    the interior of B; two singletons iff they are the same point. With a
    `universe` argument, a side whose point set is the whole universe is
    strongly near every nonempty region; the whole space is open, so this
    outranks the singleton conventions.
    """
    if _is_universe(a, universe) or _is_universe(b, universe):
        return True
    if a.size == 1 and b.size == 1:
        return bool(np.linalg.norm(a.points[0] - b.points[0]) <= POINT_TOL)
    if a.size == 1:
        return _point_in_set(a.points[0], b.interior_points())
    if b.size == 1:
        return _point_in_set(b.points[0], a.interior_points())
    ia, ib = a.interior_points(), b.interior_points()
    if ia.shape[0] and ib.shape[0]:
        if any(_point_in_set(p, ib) for p in ia):
            return True
    return False


def snd(
    a: Region,
    b: Region,
    features: FeatureMap,
    universe: Region | None = None,
) -> bool:
    """Descriptive strong nearness.

    Non-singleton regions qualify iff the descriptive intersection of their
    interiors is nonempty. A singleton {x} qualifies against B iff the
    description of x matches some interior description of B; two singletons
    iff their descriptions match. The optional universe clause works as in
    sn.
    """
    tol = features.match_tolerance
    if _is_universe(a, universe) or _is_universe(b, universe):
        return True
    if a.size == 1 and b.size == 1:
        return bool(
            np.max(np.abs(features(a.points[0]) - features(b.points[0]))) <= tol
        )
    if a.size == 1 or b.size == 1:
        x, other = (a.points[0], b) if a.size == 1 else (b.points[0], a)
        ip = other.interior_points()
        if ip.shape[0] == 0:
            return False
        return _matches_image(features(x), _feature_rows(ip, features), tol)
    ia, ib = a.interior_points(), b.interior_points()
    if ia.shape[0] and ib.shape[0]:
        ra, rb = Region.from_points(ia), Region.from_points(ib)
        if descriptive_intersection(ra, rb, features).shape[0] > 0:
            return True
    return False


def region_union(a: Region, b: Region) -> Region:
    """Union of labeled regions; a merged point is interior if either copy is."""
    if a.dimension != b.dimension:
        raise ValueError("regions must share a dimension")
    pts = np.concatenate([a.points, b.points])
    flags = np.concatenate([a.interior, b.interior])
    out_pts: list[np.ndarray] = []
    out_int: list[bool] = []
    for p, f in zip(pts, flags):
        placed = False
        for k, q in enumerate(out_pts):
            if np.linalg.norm(q - p) <= POINT_TOL:
                out_int[k] = out_int[k] or bool(f)
                placed = True
                break
        if not placed:
            out_pts.append(p)
            out_int.append(bool(f))
    arr = np.array(out_pts)
    order = np.lexsort(arr.T[::-1])
    return Region(arr[order], np.array(out_int, dtype=bool)[order])


def map_region(f: Callable[[np.ndarray], np.ndarray], region: Region) -> Region:
    """Image of a labeled region under a point map.

    Image points are merged within 1e-9; a merged image point is interior
    only if every preimage in the region is interior (conservative rule, so
    a map can genuinely destroy interior overlap).
    """
    images = [as_point(f(p)) for p in region.points]
    out_pts: list[np.ndarray] = []
    out_int: list[bool] = []
    for q, flag in zip(images, region.interior):
        placed = False
        for k, r in enumerate(out_pts):
            if np.linalg.norm(r - q) <= POINT_TOL:
                out_int[k] = out_int[k] and bool(flag)
                placed = True
                break
        if not placed:
            out_pts.append(q)
            out_int.append(bool(flag))
    arr = np.array(out_pts)
    order = np.lexsort(arr.T[::-1])
    return Region(arr[order], np.array(out_int, dtype=bool)[order])


# ---------------------------------------------------------------------------
# axiom harness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AxiomReport:
    """Result of an axiom-family check: zero violations means all passed."""

    family: str
    trials: int
    violations: tuple = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "trials": self.trials,
            "passed": self.passed,
            "violations": [dict(v) for v in self.violations],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


class _MaskEngine:
    """Bitmask evaluation of the relations over one space's subsets.

    Subsets of the universe are ints; bit x is point x. Labeled regions are
    (mask, interior_mask) pairs. Relations here mirror dnear/sn/snd exactly
    (a dedicated test pins the agreement); the empty set is representable
    and is far from everything.
    """

    def __init__(self, space: DescriptiveSpace):
        self.space = space
        self.m = space.size
        self.full = (1 << self.m) - 1
        mm = space.match_matrix
        self.match_rows = [
            int(sum(1 << j for j in range(self.m) if mm[i, j])) for i in range(self.m)
        ]

    def dnear(self, A: int, B: int) -> bool:
        if A == 0 or B == 0:
            return False
        u = A | B
        rows = self.match_rows
        while u:
            x = (u & -u).bit_length() - 1
            r = rows[x]
            if (r & A) and (r & B):
                return True
            u &= u - 1
        return False

    def dinter_nonempty(self, A: int, B: int) -> bool:
        return self.dnear(A, B)

    def sn(self, A: int, iA: int, B: int, iB: int) -> bool:
        if A == 0 or B == 0:
            return False
        if A == self.full or B == self.full:
            return True
        if A & (A - 1) == 0 and B & (B - 1) == 0:
            return A == B
        if A & (A - 1) == 0:
            return bool(A & iB)
        if B & (B - 1) == 0:
            return bool(B & iA)
        return bool(iA & iB)

    def snd(self, A: int, iA: int, B: int, iB: int) -> bool:
        if A == 0 or B == 0:
            return False
        if A == self.full or B == self.full:
            return True
        rows = self.match_rows
        if A & (A - 1) == 0 and B & (B - 1) == 0:
            x = A.bit_length() - 1
            return bool(rows[x] & B)
        if A & (A - 1) == 0:
            x = A.bit_length() - 1
            return bool(rows[x] & iB)
        if B & (B - 1) == 0:
            y = B.bit_length() - 1
            return bool(rows[y] & iA)
        return self.dnear(iA, iB)

    def match(self, x: int, y: int) -> bool:
        return bool(self.match_rows[x] & (1 << y))

    def region(self, mask: int, imask: int = None) -> Region | None:
        if mask == 0:
            return None
        idx = [i for i in range(self.m) if mask & (1 << i)]
        if imask is None:
            flags = [True] * len(idx)
        else:
            flags = [bool(imask & (1 << i)) for i in idx]
        return Region(self.space.universe[idx], np.array(flags, dtype=bool))


def _witness(engine: _MaskEngine, **masks) -> dict:
    out = {}
    for k, v in masks.items():
        if isinstance(v, tuple):
            mask, imask = v
            out[k] = {
                "points": [i for i in range(engine.m) if mask & (1 << i)],
                "interior": [i for i in range(engine.m) if imask & (1 << i)],
            }
        else:
            out[k] = int(v)
    return out


def _relation_adapter(engine: _MaskEngine, relation, family: str):
    """Wrap an injected Region-level relation (None stands for the empty set)."""
    cache: dict = {}

    def reg(mask, imask):
        key = (mask, imask)
        if key not in cache:
            cache[key] = engine.region(mask, imask)
        return cache[key]

    if family == FAMILY_DESCRIPTIVE:
        return lambda A, B: bool(relation(reg(A, A), reg(B, B)))
    return lambda A, iA, B, iB: bool(relation(reg(A, iA), reg(B, iB)))


def _sample_labeled(rng, m: int):
    mask = 0
    imask = 0
    for i in range(m):
        if rng.random() < 0.55:
            mask |= 1 << i
            if rng.random() < 0.6:
                imask |= 1 << i
    return mask, imask


def check_axioms(
    space: DescriptiveSpace,
    family: str,
    trials: int = 1000,
    seed: int = 0,
    relation=None,
) -> AxiomReport:
    """Assert every axiom of a family against the implemented relations.

    Runs `trials` seeded random draws of labeled subregions (including empty
    and singleton cases) and asserts each axiom on them; for the
    Lodato-descriptive family on universes of at most EXHAUSTIVE_LIMIT
    points, the union, transitivity, and point-equality axioms are also
    verified exhaustively over all subset pairs and triples. Violations are
    reported in draw order with witnesses.

    `relation` optionally replaces the implemented relation of the family
    (for deliberately broken variants); it receives Region arguments, or
    None for the empty set, and is evaluated on a slower path.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown axiom family: {family!r}")
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    eng = _MaskEngine(space)
    m = eng.m
    rng = np.random.default_rng(seed)
    bad: list[dict] = []

    def flag(axiom, trial, **masks):
        w = _witness(eng, **masks)
        w.update(axiom=axiom, trial=trial)
        bad.append(w)

    if family == FAMILY_DESCRIPTIVE:
        near = eng.dnear if relation is None else _relation_adapter(eng, relation, family)
        for t in range(trials):
            A, _ = _sample_labeled(rng, m)
            B, _ = _sample_labeled(rng, m)
            C, _ = _sample_labeled(rng, m)
            x = int(rng.integers(m))
            y = int(rng.integers(m))
            if near(0, A) or near(A, 0):
                flag("dP0", t, a=(A, 0))
            if near(A, B) != near(B, A):
                flag("dP1", t, a=(A, A), b=(B, B))
            if eng.dinter_nonempty(A, B) and not near(A, B):
                flag("dP2", t, a=(A, A), b=(B, B))
            if near(A, B | C) != (near(A, B) or near(A, C)):
                flag("dP3", t, a=(A, A), b=(B, B), c=(C, C))
            if near(A, B) and B and all(
                near(1 << b, C) for b in range(m) if B & (1 << b)
            ):
                if not near(A, C):
                    flag("dP4", t, a=(A, A), b=(B, B), c=(C, C))
            if near(1 << x, 1 << y) and not eng.match(x, y):
                flag("dP5", t, x=x, y=y)
        if m <= EXHAUSTIVE_LIMIT and trials > 0:
            _exhaustive_descriptive(eng, near, bad)
    elif family == FAMILY_STRONG:
        rel = eng.sn if relation is None else _relation_adapter(eng, relation, family)
        _strong_family_trials(eng, rel, rng, trials, flag, descriptive=False)
    else:
        rel = eng.snd if relation is None else _relation_adapter(eng, relation, family)
        _strong_family_trials(eng, rel, rng, trials, flag, descriptive=True)

    return AxiomReport(family, trials, tuple(bad))


def _exhaustive_descriptive(eng: _MaskEngine, near, bad: list):
    m, S = eng.m, 1 << eng.m
    dn = [[near(A, B) for B in range(S)] for A in range(S)]
    rows = eng.match_rows
    # dP3 over all triples
    for A in range(S):
        dnA = dn[A]
        for B in range(S):
            dAB = dnA[B]
            for C in range(S):
                if dnA[B | C] != (dAB or dnA[C]):
                    bad.append(
                        dict(axiom="dP3", trial=None, phase="exhaustive", a=A, b=B, c=C)
                    )
                    return
    # dP4: A dnear B and every {b} dnear C force A dnear C
    for C in range(1, S):
        ok = 0
        for b in range(m):
            if dn[1 << b][C]:
                ok |= 1 << b
        for B in range(1, S):
            if B & ~ok:
                continue
            for A in range(1, S):
                if dn[A][B] and not dn[A][C]:
                    bad.append(
                        dict(axiom="dP4", trial=None, phase="exhaustive", a=A, b=B, c=C)
                    )
                    return
    # dP5 over all point pairs
    for x in range(m):
        for y in range(m):
            if dn[1 << x][1 << y] and not (rows[x] & (1 << y)):
                bad.append(
                    dict(axiom="dP5", trial=None, phase="exhaustive", x=x, y=y)
                )
                return


def _strong_family_trials(eng, rel, rng, trials, flag, descriptive: bool):
    """Shared trial loop for the strong and descriptive-strong families.

    Axiom ids are snN* or dsnP* depending on the flavor; the descriptive
    flavor swaps point identity for description matching in the singleton
    axioms and has no counterpart of the union axiom beyond the shared one.
    """
    m = eng.m
    full = eng.full
    names = (
        {"n0": "dsnP0", "n1": "dsnP1", "n2": "dsnP2", "n3": None,
         "n4": "dsnP4", "n5": "dsnP5", "n6": "dsnP6"}
        if descriptive
        else {"n0": "snN0", "n1": "snN1", "n2": "snN2", "n3": "snN3",
              "n4": "snN4", "n5": "snN5", "n6": "snN6"}
    )
    for t in range(trials):
        A, iA = _sample_labeled(rng, m)
        B, iB = _sample_labeled(rng, m)
        x = int(rng.integers(m))
        y = int(rng.integers(m))
        # n0: the empty set is far from everything; the whole space is near
        # every nonempty region
        if rel(0, 0, A, iA) or rel(A, iA, 0, 0):
            flag(names["n0"], t, a=(A, iA))
        if A and not rel(full, full, A, iA):
            flag(names["n0"], t, a=(A, iA))
        if rel(A, iA, B, iB) != rel(B, iB, A, iA):
            flag(names["n1"], t, a=(A, iA), b=(B, iB))
        if descriptive:
            if rel(A, iA, B, iB) and not eng.dnear(A, B):
                flag(names["n2"], t, a=(A, iA), b=(B, iB))
        else:
            if rel(A, iA, B, iB) and not (A & B):
                flag(names["n2"], t, a=(A, iA), b=(B, iB))
        if not descriptive:
            # n3: nearness to one member with nonempty interior extends to
            # the union of the family
            k = int(rng.integers(2, 4))
            fam = [_sample_labeled(rng, m) for _ in range(k)]
            UB = 0
            UiB = 0
            for Bm, iBm in fam:
                UB |= Bm
                UiB |= iBm
            hit = any(iBm and rel(A, iA, Bm, iBm) for Bm, iBm in fam)
            if hit and not rel(A, iA, UB, UiB):
                flag(names["n3"], t, a=(A, iA), union=(UB, UiB))
        if descriptive:
            if eng.dnear(iA, iB) and not rel(A, iA, B, iB):
                flag(names["n4"], t, a=(A, iA), b=(B, iB))
        else:
            if (iA & iB) and not rel(A, iA, B, iB):
                flag(names["n4"], t, a=(A, iA), b=(B, iB))
        if descriptive:
            if A and (eng.match_rows[x] & iA) and not rel(1 << x, 1 << x, A, iA):
                flag(names["n5"], t, x=x, a=(A, iA))
        else:
            if (iA & (1 << x)) and not rel(1 << x, 1 << x, A, iA):
                flag(names["n5"], t, x=x, a=(A, iA))
        got = rel(1 << x, 1 << x, 1 << y, 1 << y)
        want = eng.match(x, y) if descriptive else (x == y)
        if got != want:
            flag(names["n6"], t, x=x, y=y)


# ---------------------------------------------------------------------------
# strong proximal continuity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpcReport:
    """Continuity check result: counterexamples are near pairs whose images are not."""

    mode: str
    pairs_checked: int
    near_pairs: int
    counterexamples: tuple = ()

    @property
    def preserved(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "pairs_checked": self.pairs_checked,
            "near_pairs": self.near_pairs,
            "counterexamples": [dict(c) for c in self.counterexamples],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _region_payload(r: Region) -> dict:
    return {
        "points": [list(map(float, p)) for p in r.points],
        "interior": [bool(f) for f in r.interior],
    }


def spc_check(
    space: DescriptiveSpace,
    f: Callable[[np.ndarray], np.ndarray],
    pairs: Iterable[tuple],
    mode: str = "strong",
) -> SpcReport:
    """Check that a point map preserves nearness on the given region pairs.

    mode selects the relation: "strong" (sn), "descriptive" (dnear), or
    "descriptive-strong" (snd). For every pair (A, B) that is near, the
    image pair (f(A), f(B)) must be near as well; failures are reported as
    counterexamples with both the source and image regions.
    """
    modes = {
        "strong": lambda a, b: sn(a, b),
        "descriptive": lambda a, b: dnear(a, b, space.features),
        "descriptive-strong": lambda a, b: snd(a, b, space.features),
    }
    if mode not in modes:
        raise ValueError(f"unknown continuity mode: {mode!r}")
    near = modes[mode]
    checked = 0
    hits = 0
    cexs: list[dict] = []
    for a, b in pairs:
        checked += 1
        if not near(a, b):
            continue
        hits += 1
        fa, fb = map_region(f, a), map_region(f, b)
        if not near(fa, fb):
            cexs.append(
                {
                    "source_a": _region_payload(a),
                    "source_b": _region_payload(b),
                    "image_a": _region_payload(fa),
                    "image_b": _region_payload(fb),
                }
            )
    return SpcReport(mode, checked, hits, tuple(cexs))


def sample_region_pairs(
    space: DescriptiveSpace, count: int, seed: int = 0
) -> list[tuple]:
    """Seeded nonempty labeled region pairs from a space, for checks and demos."""
    rng = np.random.default_rng(seed)
    m = space.size
    out = []
    while len(out) < count:
        A, iA = _sample_labeled(rng, m)
        B, iB = _sample_labeled(rng, m)
        if A == 0 or B == 0:
            continue
        idx_a = [i for i in range(m) if A & (1 << i)]
        idx_b = [i for i in range(m) if B & (1 << i)]
        out.append(
            (
                space.region(idx_a, [i for i in idx_a if iA & (1 << i)]),
                space.region(idx_b, [i for i in idx_b if iB & (1 << i)]),
            )
        )
    return out


# ---------------------------------------------------------------------------
# space generator
# ---------------------------------------------------------------------------


def random_space(seed: int, size: int | None = None, kind: str | None = None) -> DescriptiveSpace:
    """Seeded random finite space for harness runs and demos.

    Universe points are distinct 2D grid points. Feature values are either
    exact-tolerance maps (tau = 0) or lattice-valued features with spacing
    comfortably above 2*tau, so description matching is an equivalence
    relation and the proximity axioms are satisfiable. kind picks the
    feature flavor ("coords", "norm", "even-coords", "constant", "lattice");
    default is a seeded choice.
    """
    rng = np.random.default_rng(seed)
    m = int(size) if size is not None else int(rng.integers(4, 13))
    cells = rng.choice(36, size=m, replace=False)
    pts = np.stack([cells // 6, cells % 6], axis=1).astype(float) * 0.5
    kinds = ("coords", "norm", "even-coords", "constant", "lattice", "lattice")
    k = kind if kind is not None else kinds[int(rng.integers(len(kinds)))]
    if k == "lattice":
        arity = int(rng.integers(1, 4))
        values = rng.integers(0, 4, size=(m, arity)).astype(float)
        tol = float(rng.choice([0.0, 0.25]))
        table = {tuple(np.round(p, 9)): values[i] for i, p in enumerate(pts)}

        def look(p, table=table):
            key = tuple(np.round(p, 9))
            if key not in table:
                raise ValueError("point outside the space's universe")
            return table[key]

        fm = FeatureMap(arity, look, tol, "lattice")
    elif k == "constant":
        fm = feature_map_from_config({"name": "constant", "value": [1.0, 2.0]})
    else:
        fm = feature_map_from_config({"name": k, "dim": 2})
    return DescriptiveSpace(pts, fm)
