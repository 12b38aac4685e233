"""Witness extraction for graphs with any number of flocks.

Tie-breaks: lowest chicken index, and lowest flock index for "dominates the
most flocks".
"""

from __future__ import annotations

from .. import kernels
from ..dukes import is_m_duke, m_dukes
from ..errors import (
    BadTriple,
    NotADuke,
    NotPecked,
    SingleFlock,
    TheoremViolation,
    TwoDukeExists,
)
from ..graph import (
    MultiFlockGraph,
    RelationKind,
    dominates,
    dominating_chickens,
    eclipsers,
    flock_relation,
    iter_bits,
    non_eclipsed,
)
from .biflock import corollary2_dukes
from .witnesses import (
    ClassKind,
    Classification,
    DukeCertificate,
    Lemma9Kind,
    PeckedKind,
    PeckedWitness,
    certify_duke,
    classification,
    proof_certificate,
)


def _require_multiflock(g: MultiFlockGraph) -> None:
    if g.num_flocks < 2:
        raise SingleFlock("operation needs at least two flocks")


def find_transmitter(g: MultiFlockGraph) -> int | None:
    """Lowest-index chicken pecking everything outside its flock."""
    for c in range(g.n):
        out = g.outside_mask(c)
        if g.rows[c] & out == out:
            return c
    return None


# -- a 3-Duke always exists ----------------------------------------------------

def theorem5_find_3duke(g: MultiFlockGraph) -> DukeCertificate:
    """Bound-3 certificate for a chicken found by the existence proof."""
    _require_multiflock(g)
    flocks = range(g.num_flocks)
    undominated = [i for i in flocks if not any(dominates(g, j, i) for j in flocks if j != i)]
    if undominated:
        return _undominated_flock_duke(g, undominated[0])
    return _dominated_everywhere_duke(g)


def _undominated_flock_duke(g: MultiFlockGraph, i: int) -> DukeCertificate:
    # collapse everything outside V_i into one flock
    bi, old_of_new = g.merged(i)
    rel = flock_relation(bi, 0, 1)
    if rel.kind is RelationKind.BALANCED:
        cert = corollary2_dukes(bi)[0].relabel(old_of_new)
    elif rel.kind is RelationKind.FIRST_DOMINATES_SECOND:
        d = old_of_new[rel.dominating_witnesses[0]]
        cert = DukeCertificate(d, 3, {t: (d, t) for t in iter_bits(g.outside_mask(d))})
    else:
        raise TheoremViolation(f"flock {i} is dominated although no single flock dominates it", g)
    return cert.validate(g)


def _dominated_everywhere_duke(g: MultiFlockGraph) -> DukeCertificate:
    flocks = range(g.num_flocks)
    dominated_by = {i: [j for j in flocks if j != i and dominates(g, i, j)] for i in flocks}
    vi = max(flocks, key=lambda i: (len(dominated_by[i]), -i))
    d = min(c for c in range(g.n) if g.flock_of[c] != vi and g.rows[c] & g.flock_masks[vi] == g.flock_masks[vi])
    cs = dominated_by[vi]
    # a chicken of V_i dominating each flock of C
    via = {cf: dominating_chickens(g, vi, cf)[0] for cf in cs}
    chains: dict[int, tuple[int, ...]] = {}
    for x in g.chickens(vi):
        chains[x] = (d, x)
    for cf in cs:
        for x in g.chickens(cf):
            chains[x] = (d, via[cf], x)
    for xf in flocks:
        if xf == vi or xf in cs or xf == g.flock_of[d]:
            continue
        undominated_c = [cf for cf in cs if not dominates(g, xf, cf)]
        if undominated_c:
            # flock in A: each chicken is pecked from some flock of C
            cf = undominated_c[0]
            for a in g.chickens(xf):
                c = next(c for c in g.chickens(cf) if g.pecks(c, a))
                chains[a] = (d, via[cf], c, a)
        else:
            # flock in B: must be balanced with V_i
            if dominates(g, xf, vi):
                raise TheoremViolation(f"flock {xf} dominates more flocks than flock {vi}", g)
            for b in g.chickens(xf):
                k = next(k for k in g.chickens(vi) if g.pecks(k, b))
                chains[b] = (d, k, b)
    return proof_certificate(g, d, 3, chains)


# -- every pecked chicken ------------------------------------------------------

def theorem6_pecked_witness(g: MultiFlockGraph, c: int) -> PeckedWitness:
    """A 3-Duke pecking ``c``, or a 2-Duke flock-mate of ``c``."""
    g._check_chicken(c)
    peckers = g.peckers(c)
    if not peckers:
        raise NotPecked(f"chicken {c} is pecked by nobody")
    sub, old_of_new = g.induced(peckers)
    if sub.num_flocks >= 2:
        local = m_dukes(sub, 3)
        if not local:
            raise TheoremViolation(f"peckers of {c} contain no 3-Duke", g)
        candidates = [old_of_new[x] for x in sorted(local)]
    else:
        candidates = list(peckers)
    d = max(candidates, key=lambda x: (g.out_degree(x), -x))
    try:
        return PeckedWitness(PeckedKind.PECKED_BY_3DUKE, d, certify_duke(g, d, 3))
    except NotADuke:
        pass

    # d misses some flock-mate of c: that flock-mate pecks all of K and all of
    # A within two pecks of d, and is a 2-Duke
    dist = _distances(g, d)
    near = 0
    for a in peckers:
        if 0 <= dist[a] <= 2:
            near |= 1 << a
    need = g.rows[c] | near
    for b in g.chickens(g.flock_of[c]):
        if b != c and g.rows[b] & need == need:
            try:
                return PeckedWitness(PeckedKind.FLOCKMATE_2DUKE, b, certify_duke(g, b, 2))
            except NotADuke:
                continue
    return _pecked_fallback(g, c)


def _pecked_fallback(g: MultiFlockGraph, c: int) -> PeckedWitness:
    # only reached if the proof's construction does not produce a witness
    for p in g.peckers(c):
        if is_m_duke(g, p, 3):
            return PeckedWitness(PeckedKind.PECKED_BY_3DUKE, p, certify_duke(g, p, 3), fallback=True)
    for b in g.chickens(g.flock_of[c]):
        if b != c and is_m_duke(g, b, 2):
            return PeckedWitness(PeckedKind.FLOCKMATE_2DUKE, b, certify_duke(g, b, 2), fallback=True)
    raise TheoremViolation(f"chicken {c} is neither pecked by a 3-Duke nor next to a 2-Duke", g)


def _distances(g: MultiFlockGraph, src: int) -> list[int]:
    return kernels.bfs_distances(g.rows, src)


# -- no 2-Duke: three, then four, 3-Dukes --------------------------------------

def _require_no_two_duke(g: MultiFlockGraph) -> None:
    twos = m_dukes(g, 2)
    if twos:
        raise TwoDukeExists(f"graph has 2-Dukes {sorted(twos)}")


def _pecked_by_3duke(g: MultiFlockGraph, c: int) -> PeckedWitness:
    w = theorem6_pecked_witness(g, c)
    if w.kind is not PeckedKind.PECKED_BY_3DUKE:
        raise TheoremViolation(f"found 2-Duke {w.chicken} in a graph assumed to have none", g)
    return w


def corollary7_three_3dukes(g: MultiFlockGraph) -> tuple[DukeCertificate, DukeCertificate, DukeCertificate]:
    """Three 3-Dukes d1, d2, d3 with d2 pecking d1 and d3 pecking d2."""
    _require_no_two_duke(g)
    first = theorem5_find_3duke(g)
    second = _pecked_by_3duke(g, first.duke)
    third = _pecked_by_3duke(g, second.chicken)
    return first, second.certificate, third.certificate


def theorem8_fourth_3duke(g: MultiFlockGraph, d1: int, d2: int, d3: int) -> DukeCertificate:
    """A fourth 3-Duke, given a 3-cycle d1 -> d2 -> d3 -> d1 of 3-Dukes."""
    for x in (d1, d2, d3):
        g._check_chicken(x)
    _require_no_two_duke(g)
    if len({d1, d2, d3}) != 3:
        raise BadTriple(f"chickens {d1}, {d2}, {d3} are not distinct")
    if not (g.pecks(d1, d2) and g.pecks(d2, d3) and g.pecks(d3, d1)):
        raise BadTriple(f"{d1} -> {d2} -> {d3} -> {d1} is not a peck cycle")
    for x in (d1, d2, d3):
        if not is_m_duke(g, x, 3):
            raise BadTriple(f"chicken {x} is not a 3-Duke")

    reduced, old_of_new = g.induced(x for x in range(g.n) if x != d3)
    new_d1 = old_of_new.index(d1)
    if not reduced.peckers(new_d1):
        raise TheoremViolation(f"{d1} is pecked only by {d3}, so it would be a 2-Duke", g)
    w = theorem6_pecked_witness(reduced, new_d1)
    base = w.certificate.relabel(old_of_new)
    chains = dict(base.chains)
    if w.kind is PeckedKind.PECKED_BY_3DUKE:
        # c -> d1 -> d2 -> d3
        if g.flock_of[d3] != g.flock_of[base.duke]:
            chains[d3] = (base.duke, d1, d2, d3)
    else:
        # the flock-mate reaches d2 within two pecks
        chains[d3] = chains[d2] + (d3,)
    return proof_certificate(g, base.duke, 3, chains)


def _four_without_two_dukes(g: MultiFlockGraph) -> Classification:
    c1, c2, c3 = corollary7_three_3dukes(g)
    e1, e2, e3 = c1.duke, c2.duke, c3.duke
    # e3 is pecked by a 3-Duke too; either it is new, or it is e1 and closes a cycle
    w = _pecked_by_3duke(g, e3)
    if w.chicken not in (e1, e2, e3):
        witnesses = (e1, e2, e3, w.chicken)
        certs = (c1, c2, c3, w.certificate)
        route = ("no 2-Duke", "three 3-Dukes", "new pecker of the third")
    else:
        fourth = theorem8_fourth_3duke(g, e1, e3, e2)
        witnesses = (e1, e3, e2, fourth.duke)
        certs = (c1, c3, c2, fourth)
        route = ("no 2-Duke", "three 3-Dukes", "fourth from the 3-cycle")
    return Classification(ClassKind.FOUR_THREE_DUKES, witnesses, certs, route)


# -- eclipses ------------------------------------------------------------------

def lemma8_non_eclipsed_duke(g: MultiFlockGraph, d: int, m: int) -> int:
    """A non-eclipsed m-Duke in ``d``'s flock: ``d`` itself, or the eclipser of
    ``d`` with the largest out-degree.
    """
    if not is_m_duke(g, d, m):
        raise NotADuke(f"chicken {d} is not a {m}-Duke", chicken=d)
    if non_eclipsed(g, d):
        return d
    e = max(eclipsers(g, d), key=lambda x: (g.out_degree(x), -x))
    if not non_eclipsed(g, e):
        raise TheoremViolation(f"eclipser {e} of {d} is itself eclipsed", g)
    return e


# -- the full classification ---------------------------------------------------

def theorem10_classify(g: MultiFlockGraph) -> Classification:
    """A 1-Duke, three 2-Dukes, or four 3-Dukes, each with a certificate."""
    from .cases import lemma9_outcome  # cases imports this module

    _require_multiflock(g)
    t = find_transmitter(g)
    if t is not None:
        return classification(g, ClassKind.ONE_DUKE, (t,), ("transmitter",))

    twos = sorted(m_dukes(g, 2))
    if not twos:
        return _four_without_two_dukes(g)

    d = lemma8_non_eclipsed_duke(g, twos[0], 2)
    first = lemma9_outcome(g, d)
    route = [f"lemma9({d}): {first.case}"]
    if first.kind is not Lemma9Kind.PECKED_BY_TWO_DUKE:
        return _from_lemma9(first, route)

    d2 = lemma8_non_eclipsed_duke(g, first.witnesses[0], 2)
    second = lemma9_outcome(g, d2)
    route.append(f"lemma9({d2}): {second.case}")
    if second.kind is not Lemma9Kind.PECKED_BY_TWO_DUKE:
        return _from_lemma9(second, route)

    d3 = second.witnesses[0]
    witnesses = (d, d2, d3)
    if len(set(witnesses)) == 3:
        route.append("pecked twice by 2-Dukes")
        return classification(g, ClassKind.THREE_TWO_DUKES, witnesses, route)
    # proof does not construct distinct chickens here; read them off directly
    route.append("fallback scan of 2-Dukes")
    return classification(g, ClassKind.THREE_TWO_DUKES, twos[:3], route, fallback=True)


def _from_lemma9(outcome, route) -> Classification:
    kind = ClassKind.THREE_TWO_DUKES if outcome.kind is Lemma9Kind.THREE_TWO_DUKES else ClassKind.FOUR_THREE_DUKES
    return Classification(kind, outcome.witnesses, outcome.certificates, tuple(route))
