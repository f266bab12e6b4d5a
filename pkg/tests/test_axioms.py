"""Axiom family checker: clean runs, injected defects, engine consistency."""

import numpy as np
import pytest

from proxitop import (
    FAMILIES,
    FAMILY_DESCRIPTIVE,
    FAMILY_DESCRIPTIVE_STRONG,
    FAMILY_STRONG,
    check_axioms,
    dnear,
    sn,
    snd,
)
from proxitop.proximity import _MaskEngine, random_space


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("seed", [0, 3, 7, 12])
def test_clean_relations_have_no_violations(family, seed):
    sp = random_space(seed)
    rep = check_axioms(sp, family, trials=300, seed=seed)
    assert rep.passed, rep.violations[:2]
    assert rep.family == family
    assert rep.trials == 300


def test_exhaustive_path_runs_on_small_spaces():
    sp = random_space(1, size=4)
    rep = check_axioms(sp, FAMILY_DESCRIPTIVE, trials=50, seed=1)
    assert rep.passed


def test_unknown_family_rejected():
    sp = random_space(0, size=4)
    with pytest.raises(ValueError):
        check_axioms(sp, "bogus")


def test_asymmetric_relation_flagged_as_dP1():
    sp = random_space(2, size=5)

    def lopsided(a, b):
        if a is None or b is None:
            return False
        # compare by leading point, so arguments do not commute
        return tuple(a.points[0]) < tuple(b.points[0])

    rep = check_axioms(sp, FAMILY_DESCRIPTIVE, trials=120, seed=4, relation=lopsided)
    assert not rep.passed
    assert any(v["axiom"] == "dP1" for v in rep.violations)


def test_never_near_relation_flagged_as_dP2():
    sp = random_space(2, size=5)
    rep = check_axioms(
        sp, FAMILY_DESCRIPTIVE, trials=120, seed=4, relation=lambda a, b: False
    )
    assert any(v["axiom"] == "dP2" for v in rep.violations)


def test_always_near_relation_breaks_emptiness_and_points():
    sp = random_space(5, size=5)
    rep = check_axioms(
        sp, FAMILY_STRONG, trials=120, seed=4, relation=lambda a, b: True
    )
    axioms = {v["axiom"] for v in rep.violations}
    assert "snN0" in axioms
    assert "snN6" in axioms


def test_closure_overlap_relation_breaks_descriptive_strong_points():
    # constant features make every description match, so a relation that
    # demands geometric contact fails the singleton matching axiom
    sp = random_space(6, size=5, kind="constant")

    def touching(a, b):
        if a is None or b is None:
            return False
        d = np.min(
            np.linalg.norm(a.points[:, None, :] - b.points[None, :, :], axis=2)
        )
        return bool(d <= 1e-9)

    rep = check_axioms(
        sp, FAMILY_DESCRIPTIVE_STRONG, trials=200, seed=9, relation=touching
    )
    assert not rep.passed
    assert any(v["axiom"] in {"dsnP4", "dsnP5", "dsnP6"} for v in rep.violations)


def test_violation_witnesses_carry_masks_and_trial():
    sp = random_space(2, size=5)
    rep = check_axioms(
        sp, FAMILY_DESCRIPTIVE, trials=60, seed=4, relation=lambda a, b: False
    )
    v = rep.violations[0]
    assert "axiom" in v and "trial" in v
    report = rep.to_dict()
    assert report["passed"] is False
    assert report["violations"]


def test_mask_engine_matches_public_relations():
    # the bitmask fast path and the public Region relations must agree
    rng = np.random.default_rng(77)
    for seed in range(6):
        sp = random_space(seed + 30)
        eng = _MaskEngine(sp)
        m = sp.size
        universe = sp.region(range(m), interior=range(m))
        for _ in range(60):
            A = int(rng.integers(1, 1 << m))
            B = int(rng.integers(1, 1 << m))
            iA = A & int(rng.integers(0, 1 << m))
            iB = B & int(rng.integers(0, 1 << m))
            idx_a = [i for i in range(m) if A & (1 << i)]
            idx_b = [i for i in range(m) if B & (1 << i)]
            ra = sp.region(idx_a, [i for i in idx_a if iA & (1 << i)])
            rb = sp.region(idx_b, [i for i in idx_b if iB & (1 << i)])
            assert eng.dnear(A, B) == dnear(ra, rb, sp.features)
            assert eng.sn(A, iA, B, iB) == sn(ra, rb, universe=universe)
            assert eng.snd(A, iA, B, iB) == snd(
                ra, rb, sp.features, universe=universe
            )
