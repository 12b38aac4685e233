"""Exhaustive per-theorem verification over every orientation of given sizes.

Each checker evaluates the theorem's conclusion with the brute-force oracle
and, where a constructive operation exists, also checks its witness: the
certificate arc by arc, and membership in the oracle's duke sets.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import constructive as cs
from .dukes import duke_levels, king_levels, oracle_classification
from .enumeration import DEFAULT_EDGE_CAP, _check_sizes, edge_count, enumerate_orientations
from .errors import TooLarge, UnknownTheorem
from .graph import MultiFlockGraph, dominates, flock_relation, non_eclipsed, prominent_chickens
from .textio import serialize


@dataclass(frozen=True)
class Counterexample:
    orientation_index: int
    graph: str
    reason: str


@dataclass
class VerificationReport:
    theorem_id: str
    sizes: tuple[int, ...]
    instances_checked: int = 0
    qualifying: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    elapsed: float = 0.0
    fallbacks: int = 0

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def summary(self) -> str:
        sizes = ",".join(map(str, self.sizes))
        return (
            f"{self.theorem_id} sizes={sizes}: {self.instances_checked} checked, "
            f"{len(self.counterexamples)} counterexamples "
            f"({self.qualifying} met the hypotheses, {self.fallbacks} fallbacks)"
        )

    def merge(self, other: "VerificationReport") -> None:
        self.instances_checked += other.instances_checked
        self.qualifying += other.qualifying
        self.counterexamples.extend(other.counterexamples)
        self.counterexamples.sort(key=lambda c: c.orientation_index)
        self.fallbacks += other.fallbacks


class _Instance:
    """A graph plus its oracle duke/king levels, computed once."""

    def __init__(self, g: MultiFlockGraph):
        self.g = g
        self.dl = duke_levels(g)
        self._kl = None
        self.fallbacks = 0

    def dukes(self, m: int) -> frozenset[int]:
        return frozenset(c for c, lv in enumerate(self.dl) if 0 <= lv <= m)

    def kings(self, m: int) -> frozenset[int]:
        if self._kl is None:
            self._kl = king_levels(self.g)
        return frozenset(c for c, lv in enumerate(self._kl) if 0 <= lv <= m)


# A checker returns None when the graph does not meet the hypotheses, else a
# list of problems (empty on success).
Checker = Callable[[_Instance], "list[str] | None"]


def _cert_problems(g, cert, oracle_set, what) -> list[str]:
    errs = [f"{what}: {e}" for e in cert.problems(g)]
    if cert.duke not in oracle_set:
        errs.append(f"{what}: {cert.duke} not in oracle set {sorted(oracle_set)}")
    return errs


def _check_lemma1(inst: _Instance):
    g = inst.g
    if g.num_flocks != 2:
        return None
    three = inst.dukes(3)
    errs = []
    for f in (0, 1):
        proms = prominent_chickens(g, 1 - f)
        for d in g.chickens(f):
            if any(g.pecks(d, k) for k in proms):
                if d not in three:
                    errs.append(f"oracle: {d} pecks a prominent chicken but is not a 3-Duke")
                errs += _cert_problems(g, cs.lemma1_duke(g, d), three, f"lemma1({d})")
    return errs


def _check_cor2(inst: _Instance):
    g = inst.g
    if g.num_flocks != 2 or not flock_relation(g, 0, 1).balanced:
        return None
    three = inst.dukes(3)
    errs = []
    for f in (0, 1):
        if not any(g.flock_of[c] == f for c in three):
            errs.append(f"oracle: flock {f} has no 3-Duke")
    certs = cs.corollary2_dukes(g)
    for f, cert in enumerate(certs):
        if g.flock_of[cert.duke] != f:
            errs.append(f"corollary2: certificate {f} is for {cert.duke}, outside flock {f}")
        errs += _cert_problems(g, cert, three, f"corollary2[{f}]")
    return errs


def _check_lemma3(inst: _Instance):
    g = inst.g
    if g.num_flocks != 2:
        return None
    three = inst.dukes(3)
    errs = []
    for f in (0, 1):
        if dominates(g, 1 - f, f):
            continue
        proms = prominent_chickens(g, f)
        errs += [f"oracle: prominent {k} of undominated flock {f} is not a 3-Duke" for k in proms if k not in three]
        cert = cs.lemma3_duke(g, f)
        if cert.duke not in proms:
            errs.append(f"lemma3({f}): {cert.duke} is not prominent")
        errs += _cert_problems(g, cert, three, f"lemma3({f})")
    return errs


def _classification_problems(inst: _Instance, cl) -> list[str]:
    g = inst.g
    errs = [f"classification: {e}" for e in cl.problems(g)]
    oracle = inst.dukes(cl.kind.bound)
    stray = set(cl.witnesses) - oracle
    if stray:
        errs.append(f"classification: witnesses {sorted(stray)} not {cl.kind.bound}-Dukes per oracle")
    if cl.fallback:
        inst.fallbacks += 1
    return errs


def _check_thm4(inst: _Instance):
    g = inst.g
    if g.num_flocks != 2:
        return None
    one, three = inst.dukes(1), inst.dukes(3)
    errs = []
    if not one and len(three) < 4:
        errs.append(f"oracle: no 1-Duke and only {len(three)} 3-Dukes")
    cl = cs.theorem4_classify(g)
    if (cl.kind is cs.ClassKind.ONE_DUKE) != bool(one):
        errs.append(f"theorem4 returned {cl.kind.label} but oracle transmitters are {sorted(one)}")
    return errs + _classification_problems(inst, cl)


def _check_thm5(inst: _Instance):
    g = inst.g
    if g.num_flocks < 2:
        return None
    three = inst.dukes(3)
    errs = [] if three else ["oracle: no 3-Duke"]
    return errs + _cert_problems(g, cs.theorem5_find_3duke(g), three, "theorem5")


def _check_thm6(inst: _Instance):
    g = inst.g
    pecked = [c for c in range(g.n) if g.in_rows[c]]
    if not pecked:
        return None
    two, three = inst.dukes(2), inst.dukes(3)
    errs = []
    for c in pecked:
        mates = [b for b in g.chickens(g.flock_of[c]) if b != c]
        if not (any(p in three for p in g.peckers(c)) or any(b in two for b in mates)):
            errs.append(f"oracle: {c} has no 3-Duke pecker and no 2-Duke flock-mate")
        w = cs.theorem6_pecked_witness(g, c)
        errs += [f"theorem6({c}): {e}" for e in w.problems(g, c)]
        oracle = three if w.kind is cs.PeckedKind.PECKED_BY_3DUKE else two
        if w.chicken not in oracle:
            errs.append(f"theorem6({c}): witness {w.chicken} not confirmed by oracle")
        if w.fallback:
            inst.fallbacks += 1
    return errs


def _check_cor7(inst: _Instance):
    g = inst.g
    if g.num_flocks < 2 or inst.dukes(2):
        return None
    three = inst.dukes(3)
    errs = [] if len(three) >= 3 else [f"oracle: only {len(three)} 3-Dukes without a 2-Duke"]
    c1, c2, c3 = cs.corollary7_three_3dukes(g)
    d1, d2, d3 = c1.duke, c2.duke, c3.duke
    if len({d1, d2, d3}) != 3:
        errs.append(f"corollary7: {d1, d2, d3} not distinct")
    if not (g.pecks(d2, d1) and g.pecks(d3, d2)):
        errs.append(f"corollary7: {d3}->{d2}->{d1} is not a peck chain")
    for i, cert in enumerate((c1, c2, c3)):
        errs += _cert_problems(g, cert, three, f"corollary7[{i}]")
    return errs


def _check_thm8(inst: _Instance):
    g = inst.g
    if g.num_flocks < 2 or inst.dukes(2):
        return None
    three = inst.dukes(3)
    errs = [] if len(three) >= 4 else [f"oracle: only {len(three)} 3-Dukes without a 2-Duke"]
    for a, b, c in itertools.permutations(sorted(three), 3):
        if a != min(a, b, c) or not (g.pecks(a, b) and g.pecks(b, c) and g.pecks(c, a)):
            continue
        cert = cs.theorem8_fourth_3duke(g, a, b, c)
        if cert.duke in (a, b, c):
            errs.append(f"theorem8({a},{b},{c}): returned a member of the cycle")
        errs += _cert_problems(g, cert, three, f"theorem8({a},{b},{c})")
    return errs


def _check_lemma8(inst: _Instance):
    g = inst.g
    if not inst.dukes(3):
        return None
    errs = []
    for m in (1, 2, 3):
        dm = inst.dukes(m)
        for d in sorted(dm):
            e = cs.lemma8_non_eclipsed_duke(g, d, m)
            if g.flock_of[e] != g.flock_of[d]:
                errs.append(f"lemma8({d},{m}): {e} is in another flock")
            if not non_eclipsed(g, e):
                errs.append(f"lemma8({d},{m}): {e} is eclipsed")
            if e not in dm:
                errs.append(f"lemma8({d},{m}): {e} is not an {m}-Duke per oracle")
            else:
                errs += [f"lemma8({d},{m}): {p}" for p in cs.certify_duke(g, e, m).problems(g)]
    return errs


def _check_lemma9(inst: _Instance):
    g = inst.g
    if inst.dukes(1):
        return None
    two, three = inst.dukes(2), inst.dukes(3)
    ds = [d for d in sorted(two) if non_eclipsed(g, d)]
    if not ds:
        return None
    errs = []
    for d in ds:
        if not (any(p in two for p in g.peckers(d)) or len(two) >= 3 or len(three) >= 4):
            errs.append(f"oracle: none of the outcomes holds around 2-Duke {d}")
        o = cs.lemma9_outcome(g, d)
        errs += [f"lemma9({d}) case {o.case}: {e}" for e in o.problems(g, d)]
        oracle = three if o.kind is cs.Lemma9Kind.FOUR_THREE_DUKES else two
        stray = set(o.witnesses) - oracle
        if stray:
            errs.append(f"lemma9({d}) case {o.case}: {sorted(stray)} not confirmed by oracle")
    return errs


def _check_thm10(inst: _Instance):
    g = inst.g
    if g.num_flocks < 2:
        return None
    oracle = oracle_classification(g)
    cl = cs.theorem10_classify(g)
    errs = _classification_problems(inst, cl)
    if not oracle.holds(cl.kind.value):
        errs.append(f"theorem10 returned {cl.kind.label} but the oracle does not confirm it")
    return errs


def _check_bridge(inst: _Instance):
    if inst.dukes(1):
        return None
    errs = []
    for m in (1, 2, 3):
        stray = inst.dukes(m) - inst.kings(m + 1)
        if stray:
            errs.append(f"{m}-Dukes {sorted(stray)} are not {m + 1}-Kings")
    return errs


def _check_antisym(inst: _Instance):
    g = inst.g
    if g.num_flocks < 2:
        return None
    errs = []
    for i, j in itertools.combinations(range(g.num_flocks), 2):
        if dominates(g, i, j) and dominates(g, j, i):
            errs.append(f"flocks {i} and {j} dominate each other")
    return errs


CHECKERS: dict[str, Checker] = {
    "LEMMA1": _check_lemma1,
    "COR2": _check_cor2,
    "LEMMA3": _check_lemma3,
    "THM4": _check_thm4,
    "THM5": _check_thm5,
    "THM6": _check_thm6,
    "COR7": _check_cor7,
    "THM8": _check_thm8,
    "LEMMA8": _check_lemma8,
    "LEMMA9": _check_lemma9,
    "THM10": _check_thm10,
    "DUKE_KING_BRIDGE": _check_bridge,
    "DOMINATION_ANTISYM": _check_antisym,
}
THEOREM_IDS = tuple(CHECKERS)


def check_graph(theorem_id: str, g: MultiFlockGraph) -> tuple[bool, list[str], int]:
    """Run one checker on one graph: (met hypotheses, problems, fallbacks)."""
    checker = _lookup(theorem_id)
    inst = _Instance(g)
    try:
        errs = checker(inst)
    except Exception as exc:  # noqa: BLE001 -- any failure is a counterexample
        return True, [f"{type(exc).__name__}: {exc}"], inst.fallbacks
    if errs is None:
        return False, [], inst.fallbacks
    return True, errs, inst.fallbacks


def _lookup(theorem_id: str) -> Checker:
    try:
        return CHECKERS[theorem_id.upper()]
    except KeyError:
        raise UnknownTheorem(f"unknown theorem {theorem_id!r}; expected one of {', '.join(THEOREM_IDS)}") from None


def _sweep(theorem_id: str, sizes: tuple[int, ...], cap: int, start: int, stop: int) -> VerificationReport:
    report = VerificationReport(theorem_id, sizes)
    for k, g in enumerate(enumerate_orientations(sizes, cap=cap, start=start, stop=stop), start):
        met, errs, fb = check_graph(theorem_id, g)
        report.instances_checked += 1
        report.qualifying += met
        report.fallbacks += fb
        if errs:
            report.counterexamples.append(Counterexample(k, serialize(g), "; ".join(errs)))
    return report


def verify(
    theorem_id: str,
    sizes: Sequence[int],
    *,
    parallel: int = 1,
    cap: int = DEFAULT_EDGE_CAP,
) -> VerificationReport:
    """Check ``theorem_id`` on every orientation of ``sizes``.

    With ``parallel > 1`` the index range is split across worker processes;
    the merged report is identical to a single-process run apart from
    ``elapsed``.
    """
    theorem_id = theorem_id.upper()
    _lookup(theorem_id)
    sizes = _check_sizes(sizes)
    m = edge_count(sizes)
    if m > cap:
        raise TooLarge(f"sizes {list(sizes)} have {m} cross-flock pairs, above the cap of {cap}")
    total = 1 << m
    t0 = time.perf_counter()
    workers = max(1, min(int(parallel), total))
    if workers == 1:
        report = _sweep(theorem_id, sizes, cap, 0, total)
    else:
        bounds = [total * w // workers for w in range(workers + 1)]
        report = VerificationReport(theorem_id, sizes)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                _sweep,
                [theorem_id] * workers,
                [sizes] * workers,
                [cap] * workers,
                bounds[:-1],
                bounds[1:],
            )
            for part in parts:
                report.merge(part)
    report.elapsed = time.perf_counter() - t0
    return report
