"""Acceptance criteria 1-8, all exact.

Each criterion records one PASS/FAIL line; conftest prints them at the end of
the run.  ``python3 tests/test_acceptance.py`` runs the same checks directly.
"""
import json
import pathlib
import sys
import time

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from cli_cases import CASES  # noqa: E402
from make_goldens import GOLDEN, render  # noqa: E402

from virfusion.braiding import is_transparent, nondegeneracy_scan  # noqa: E402
from virfusion.coset import conformal_weight, verify_coset  # noqa: E402
from virfusion.exactalg import ONE, T, Scalar, parse_scalar, root_multiplicity  # noqa: E402
from virfusion.fusion import FusionDecomp, fuse, fz_candidates, row_roots_at, verify_ring  # noqa: E402
from virfusion.structure import c1_quotient_dim, kac_labels_of  # noqa: E402
from virfusion.verma import (  # noqa: E402
    SYMBOLIC,
    CentralCharge,
    KacLabel,
    detect_singular_levels,
    gram_determinant_in_h,
    kac_h,
    kac_weight,
    partition_count,
    raise_action,
    singular_vector,
)

RESULTS: list[str] = []


def _record(number: int, title: str, ok: bool, detail: str, started: float) -> None:
    mark = "PASS" if ok else "FAIL"
    RESULTS.append(f"[{mark}] criterion {number}: {title} ({detail}; {time.perf_counter() - started:.1f}s)")


def criterion_1():
    """Singular vectors for every rs <= 8."""
    labels = [(r, s) for r in range(1, 9) for s in range(1, 9) if r * s <= 8]
    bad = []
    for label in labels:
        r, s = label
        levels = detect_singular_levels(kac_h(label), SYMBOLIC, r * s)
        if levels != [(n, 1 if n == r * s else 0) for n in range(1, r * s + 1)]:
            bad.append((label, "detect", levels))
            continue
        v = singular_vector(label)
        if v.coefficient((1,) * (r * s)) != ONE:
            bad.append((label, "normalisation"))
        for m in (1, 2):
            if m <= r * s and not raise_action(m, v, kac_h(label)).is_zero():
                bad.append((label, f"L_{m}"))
    return not bad, f"{len(labels)} labels, failures {bad}"


def criterion_2():
    """Kac determinant root multiplicities p(N - rs) for N <= 4."""
    checked, bad = 0, []
    for level in range(1, 5):
        det = gram_determinant_in_h(level)
        for r in range(1, level + 1):
            for s in range(1, level // r + 1):
                got = root_multiplicity(det, kac_weight(r, s, T))
                checked += 1
                if got != partition_count(level - r * s):
                    bad.append((level, r, s, got))
    return not bad, f"{checked} (N, r, s) triples, failures {bad}"


def criterion_3():
    """Frenkel-Zhu uniqueness on an 8x8 window for r, s <= 5."""
    bad = []
    for r in range(1, 6):
        for s in range(1, 6):
            if fz_candidates(r, s, 8) != [KacLabel(r, s)]:
                bad.append((r, s, "candidates"))
            for rejected in row_roots_at(r, s)[1:]:
                if kac_labels_of(rejected, SYMBOLIC, 8, 8).matches:
                    bad.append((r, s, "rejected root in H_c"))
    return not bad, f"25 pairs, failures {bad}"


def criterion_4():
    """Fusion ring on r, s <= 4."""
    rep = verify_ring(4)
    labels = [KacLabel(r, s) for r in range(1, 5) for s in range(1, 5)]
    bad = [] if rep.ok else [rep.failure]
    for a in labels:
        for b in labels:
            prod = fuse(a, b)
            if prod.total() != min(a.r, b.r) * min(a.s, b.s):
                bad.append((a, b, "count"))
    for s1 in range(1, 5):
        for s2 in range(1, 5):
            want = FusionDecomp([(1, s3) for s3 in range(abs(s1 - s2) + 1, s1 + s2, 2)])
            if fuse((1, s1), (1, s2)) != want:
                bad.append(((1, s1), (1, s2), "(1,.) x (1,.)"))
    for r in range(1, 5):
        for s in range(1, 5):
            if fuse((r, 1), (1, s)) != FusionDecomp([(r, s)]):
                bad.append(((r, 1), (1, s), "(.,1) x (1,.)"))
    return not bad, f"{sum(rep.checked.values())} ring checks, failures {bad}"


def criterion_5():
    """Only L_{1,1} transparent on the 6x6 window; ratio s/t - r against L_{1,2}."""
    rep = nondegeneracy_scan(6)
    bad = [] if rep.transparent == [KacLabel(1, 1)] else [("transparent", rep.transparent)]
    for r in range(1, 7):
        for s in range(2, 7):
            w = is_transparent((r, s)).witness
            if w is None or w.X != KacLabel(1, 2) or w.ratio.value != s / T - r or w.ratio.is_trivial():
                bad.append((r, s))
    return not bad, f"transparent {[str(x) for x in rep.transparent]}, failures {bad}"


def criterion_6():
    """Coset branching for lam in {0, 1}, mu <= 2, order 8."""
    bad = []
    sectors = 0
    for lam in (0, 1):
        for mu in (0, 1, 2):
            rep = verify_coset(lam, mu, 8)
            sectors += len(rep.verdicts)
            if not rep.ok:
                bad.append((lam, mu, [v.nu for v in rep.verdicts if not v.passed(8)]))
    # the worked base exponent: Delta_2(l+1) + h_{1,3} = 1
    ell = T
    h13 = kac_weight(1, 3, (ell + 3) / (ell + 2))
    if conformal_weight(2, ell + 1) + h13 != Scalar(1):
        bad.append("Delta_2(l+1) + h_{1,3} != 1")
    return not bad, f"{sectors} sector verdicts, failures {bad}"


def criterion_7():
    """C_1-quotient dimension rs for rs <= 6."""
    labels = [(r, s) for r in range(1, 7) for s in range(1, 7) if r * s <= 6]
    bad = [(label, d) for label in labels if (d := c1_quotient_dim(label)) != label[0] * label[1]]
    return not bad, f"{len(labels)} labels, failures {bad}"


def _scalar_nodes(node):
    if isinstance(node, dict):
        if set(node) == {"num", "den", "text"}:
            yield node
        for v in node.values():
            yield from _scalar_nodes(v)
    elif isinstance(node, list):
        for v in node:
            yield from _scalar_nodes(v)


def criterion_8():
    """Byte-exact CLI goldens and lossless JSON scalars."""
    bad = []
    for stem, argv, code in CASES:
        got_code, text = render(argv)
        if got_code != code or text != (GOLDEN / f"{stem}.txt").read_text():
            bad.append(stem)
            continue
        if "--json" in argv:
            env = json.loads(text.split("--- stderr ---")[0])
            var = "l" if argv[0] == "coset" else "t"
            for node in _scalar_nodes(env["payload"]):
                s = Scalar.from_json(node)
                if s.to_json() != {"num": node["num"], "den": node["den"]} or s.format(var) != node["text"]:
                    bad.append(f"{stem}: scalar")
                if parse_scalar(node["text"], names={"l": T}) != s:
                    bad.append(f"{stem}: reparse")
    return not bad, f"{len(CASES)} goldens, failures {bad}"


CRITERIA = [
    (1, "singular vectors, rs <= 8", criterion_1),
    (2, "Kac determinant multiplicities, N <= 4", criterion_2),
    (3, "Frenkel-Zhu uniqueness, r, s <= 5", criterion_3),
    (4, "fusion ring, r, s <= 4", criterion_4),
    (5, "non-degeneracy, window 6", criterion_5),
    (6, "coset branching, order 8", criterion_6),
    (7, "C_1-quotient dimensions, rs <= 6", criterion_7),
    (8, "CLI goldens and JSON round trip", criterion_8),
]


@pytest.mark.parametrize("number, title, check", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check):
    started = time.perf_counter()
    ok, detail = check()
    _record(number, title, ok, detail, started)
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for number, title, check in CRITERIA:
        started = time.perf_counter()
        ok, detail = check()
        _record(number, title, ok, detail, started)
        print(RESULTS[-1])
        failures += not ok
    sys.exit(1 if failures else 0)
