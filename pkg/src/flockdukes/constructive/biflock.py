"""Witness extraction for two-flock graphs.

Every "pick a chicken" step takes the lowest index among the candidates.
"""

from __future__ import annotations

from ..errors import CertificateError, FlockDominated, NotBalanced, NotBiflock, PreconditionFailed
from ..graph import MultiFlockGraph, dominates, iter_bits, prominent_chickens
from .witnesses import ClassKind, Classification, DukeCertificate, certify_duke, proof_certificate


def _require_biflock(g: MultiFlockGraph) -> None:
    if g.num_flocks != 2:
        raise NotBiflock(f"expected exactly 2 flocks, got {g.num_flocks}")


def _pecker_of_prominent_chains(g: MultiFlockGraph, d: int, k: int) -> DukeCertificate:
    # d pecks the prominent k; every c of k's flock is hit directly or via d->k->f->c
    chains = {}
    for c in g.chickens(g.flock_of[k]):
        if g.pecks(d, c):
            chains[c] = (d, c)
            continue
        f = next((f for f in iter_bits(g.rows[k]) if g.pecks(f, c)), None)
        if f is None:
            raise CertificateError(f"no f with {k}->f->{c}; is {k} really prominent?")
        chains[c] = (d, k, f, c)
    return proof_certificate(g, d, 3, chains)


def lemma1_duke(g: MultiFlockGraph, d: int) -> DukeCertificate:
    """Bound-3 certificate for a chicken that pecks a prominent chicken of the
    other flock.
    """
    _require_biflock(g)
    g._check_chicken(d)
    other = 1 - g.flock_of[d]
    ks = [k for k in prominent_chickens(g, other) if g.pecks(d, k)]
    if not ks:
        raise PreconditionFailed(f"chicken {d} pecks no prominent chicken of flock {other}")
    return _pecker_of_prominent_chains(g, d, ks[0])


def corollary2_dukes(g: MultiFlockGraph) -> tuple[DukeCertificate, DukeCertificate]:
    """One 3-Duke per flock of a balanced two-flock graph, flock 0 first."""
    _require_biflock(g)
    if dominates(g, 0, 1) or dominates(g, 1, 0):
        raise NotBalanced("the two flocks are not balanced")
    certs = []
    for f in (0, 1):
        k = prominent_chickens(g, 1 - f)[0]
        # balanced, so k cannot peck all of flock f
        d = g.peckers(k)[0]
        certs.append(_pecker_of_prominent_chains(g, d, k))
    return certs[0], certs[1]


def lemma3_duke(g: MultiFlockGraph, f: int) -> DukeCertificate:
    """Bound-3 certificate for the lowest prominent chicken of flock ``f``,
    which must not be dominated by the other flock.
    """
    _require_biflock(g)
    g._check_flock(f)
    other = 1 - f
    if dominates(g, other, f):
        raise FlockDominated(f"flock {f} is dominated by flock {other}")
    d = prominent_chickens(g, f)[0]
    chains = {}
    for k in g.chickens(other):
        if g.pecks(d, k):
            chains[k] = (d, k)
            continue
        fk = next(x for x in g.chickens(f) if g.pecks(x, k))
        c = next((c for c in iter_bits(g.rows[d]) if g.pecks(c, fk)), None)
        if c is None:
            raise CertificateError(f"{fk} pecks everything {d} pecks; {d} is not prominent")
        chains[k] = (d, c, fk, k)
    return proof_certificate(g, d, 3, chains)


def theorem4_classify(g: MultiFlockGraph) -> Classification:
    """A 1-Duke, or four 3-Dukes, in a two-flock graph."""
    _require_biflock(g)
    for c in range(g.n):
        other = 1 - g.flock_of[c]
        mask = g.flock_masks[other]
        if g.rows[c] & mask == mask:
            cert = certify_duke(g, c, 1)
            return Classification(ClassKind.ONE_DUKE, (c,), (cert,), ("dominating chicken",))

    # no 1-Duke: balanced, and every chicken is pecked
    k1 = prominent_chickens(g, 0)[0]
    k2 = prominent_chickens(g, 1)[0]
    p1, p2 = g.peckers(k1), g.peckers(k2)
    if len(p1) >= 2 and len(p2) >= 2:
        witnesses = (p1[0], p1[1], p2[0], p2[1])
        certs = tuple(
            _pecker_of_prominent_chains(g, w, k1 if w in p1 else k2) for w in witnesses
        )
        return Classification(ClassKind.FOUR_THREE_DUKES, witnesses, certs, ("prominent pecked twice",))

    k, d = (k1, p1[0]) if len(p1) == 1 else (k2, p2[0])
    k_cert = lemma3_duke(g, g.flock_of[k])
    if k_cert.duke != k:
        raise CertificateError(f"lemma3_duke certified {k_cert.duke}, expected {k}")
    d_cert = _pecker_of_prominent_chains(g, d, k)
    on_d = g.peckers(d)
    if len(on_d) >= 2:
        f1, f2 = on_d[0], on_d[1]
        witnesses = (f1, f2, k, d)
        certs = (certify_duke(g, f1, 3), certify_duke(g, f2, 3), k_cert, d_cert)
        route = ("sole pecker of prominent", "pecked at least twice")
    else:
        f = on_d[0]
        g_ = g.peckers(f)[0]
        witnesses = (d, k, f, g_)
        certs = (d_cert, k_cert, certify_duke(g, f, 3), certify_duke(g, g_, 3))
        route = ("sole pecker of prominent", "pecked once")
    return Classification(ClassKind.FOUR_THREE_DUKES, witnesses, certs, route)
