"""Case analysis around a non-eclipsed 2-Duke ``d`` in a graph with no 1-Duke.

The outcome is one of: ``d`` is pecked by another 2-Duke, three 2-Dukes
exist, or four 3-Dukes exist. Which branch fired is reported as a case label
(``"1"``, ``"1a"``, ..., ``"3c-ii"``).

With ``d`` non-eclipsed, a flock-mate pecking everything ``d`` pecks has
exactly ``d``'s out-set, so it shares ``d``'s peckers; branch ``1b`` is kept
for completeness but cannot fire.
"""

from __future__ import annotations

from ..dukes import is_m_duke
from ..errors import HasTransmitter, NotNonEclipsedTwoDuke, TheoremViolation
from ..graph import MultiFlockGraph, non_eclipsed
from .multiflock import find_transmitter, theorem6_pecked_witness
from .witnesses import Lemma9Kind, Lemma9Outcome, PeckedKind, certify_duke


def _outcome(g: MultiFlockGraph, kind: Lemma9Kind, witnesses, case: str) -> Lemma9Outcome:
    bound = {Lemma9Kind.PECKED_BY_TWO_DUKE: 2, Lemma9Kind.THREE_TWO_DUKES: 2, Lemma9Kind.FOUR_THREE_DUKES: 3}[kind]
    witnesses = tuple(witnesses)
    if len(set(witnesses)) != len(witnesses):
        raise TheoremViolation(f"case {case}: witnesses {witnesses} are not distinct", g)
    certs = tuple(certify_duke(g, w, bound) for w in witnesses)
    return Lemma9Outcome(kind, witnesses, case, certs)


def _pecked_by(g, w, case):
    return _outcome(g, Lemma9Kind.PECKED_BY_TWO_DUKE, (w,), case)


def _three(g, ws, case):
    return _outcome(g, Lemma9Kind.THREE_TWO_DUKES, ws, case)


def _four(g, ws, case):
    return _outcome(g, Lemma9Kind.FOUR_THREE_DUKES, ws, case)


def _covers(g: MultiFlockGraph, x: int, d: int) -> bool:
    """x pecks every chicken d pecks."""
    return g.rows[d] & ~g.rows[x] == 0


def lemma9_outcome(g: MultiFlockGraph, d: int) -> Lemma9Outcome:
    g._check_chicken(d)
    t = find_transmitter(g)
    if t is not None:
        raise HasTransmitter(f"chicken {t} is a 1-Duke")
    if not (is_m_duke(g, d, 2) and non_eclipsed(g, d)):
        raise NotNonEclipsedTwoDuke(f"chicken {d} is not a non-eclipsed 2-Duke")
    peckers = g.peckers(d)
    if len(peckers) >= 3:
        return _case1(g, d, peckers)
    if len(peckers) == 2:
        return _case2(g, d, *peckers)
    return _case3(g, d, peckers[0])


def _case1(g: MultiFlockGraph, d: int, peckers: list[int]) -> Lemma9Outcome:
    flock = g.chickens(g.flock_of[d])
    ks = [x for x in flock if x != d and _covers(g, x, d)]
    if not ks:
        return _four(g, (d, *peckers[:3]), "1")
    if len(ks) >= 2:
        return _three(g, (d, ks[0], ks[1]), "1")
    k = ks[0]
    ps = g.peckers(k)
    if len(ps) >= 2:
        return _four(g, (d, k, ps[0], ps[1]), "1a")
    p = ps[0]
    # k pecks everything outside its flock except p
    cs = [x for x in flock if g.pecks(x, p)]
    if cs:
        return _four(g, (k, d, p, cs[0]), "1b")
    return _three(g, (k, d, p), "1b")


def _case2(g: MultiFlockGraph, d: int, i: int, j: int) -> Lemma9Outcome:
    flock = g.chickens(g.flock_of[d])
    if g.flock_of[i] != g.flock_of[j]:
        if g.pecks(j, i):
            i, j = j, i
        es = [e for e in flock if g.pecks(e, i) and g.pecks(e, j)]
        if not es:
            return _pecked_by(g, i, "2a-i")
        return _four(g, (d, es[0], i, j), "2a-ii")

    fs = [f for f in flock if f != d and _covers(g, f, d) and (g.pecks(f, i) or g.pecks(f, j))]
    if not fs:
        # i and j are both 3-Dukes
        wi = theorem6_pecked_witness(g, i)
        if wi.kind is PeckedKind.PECKED_BY_3DUKE:
            return _four(g, (d, i, j, wi.chicken), "2b-i")
        wj = theorem6_pecked_witness(g, j)
        if wj.kind is PeckedKind.PECKED_BY_3DUKE:
            return _four(g, (d, i, j, wj.chicken), "2b-i")
        if wi.chicken != j:
            return _four(g, (d, i, j, wi.chicken), "2b-i")
        if wj.chicken != i:
            return _four(g, (d, i, j, wj.chicken), "2b-i")
        return _three(g, (d, i, j), "2b-i")

    f = fs[0]
    if g.pecks(f, i) and g.pecks(f, j):
        raise TheoremViolation(f"{f} pecks both peckers of {d} and would be a 1-Duke", g)
    if g.pecks(f, i):
        i, j = j, i
    # now i -> f -> j
    others = [x for x in flock if x not in (d, f) and is_m_duke(g, x, 2)]
    if others:
        return _three(g, (d, f, others[0]), "2b-ii")
    w = theorem6_pecked_witness(g, i)
    if w.kind is PeckedKind.PECKED_BY_3DUKE:
        return _four(g, (d, f, i, w.chicken), "2b-ii")
    return _three(g, (d, f, w.chicken), "2b-ii")


def _case3(g: MultiFlockGraph, d: int, t: int) -> Lemma9Outcome:
    rs = [x for x in g.chickens(g.flock_of[d]) if g.pecks(x, t)]
    if len(rs) >= 2:
        return _four(g, (d, t, rs[0], rs[1]), "3a")
    if not rs:
        return _pecked_by(g, t, "3b")
    r = rs[0]
    us = [u for u in g.peckers(r) if g.flock_of[u] != g.flock_of[t]]
    if us:
        u = us[0]
        if g.pecks(t, u):
            return _pecked_by(g, t, "3c-i")
        return _four(g, (t, d, u, r), "3c-i")
    # r pecks everything outside its own flock and t's flock
    v = g.peckers(r)[0]
    return _four(g, (d, t, r, v), "3c-ii")
