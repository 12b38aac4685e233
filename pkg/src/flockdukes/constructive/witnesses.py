"""Certificates and the result types returned by the constructive operations."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from ..errors import CertificateError, NonPositiveM, NotADuke
from ..graph import MultiFlockGraph, iter_bits


@dataclass(frozen=True)
class DukeCertificate:
    """Explicit peck chains proving ``duke`` is a ``bound``-Duke.

    ``chains[t]`` is the full path ``(duke, ..., t)`` for every chicken ``t``
    outside the duke's flock.
    """

    duke: int
    bound: int
    chains: Mapping[int, tuple[int, ...]]

    def problems(self, g: MultiFlockGraph) -> list[str]:
        """Everything wrong with this certificate for ``g``; empty if valid.

        Checks arcs one by one and never consults reachability code.
        """
        errs = []
        if not 0 <= self.duke < g.n:
            return [f"duke {self.duke} is not a chicken of the graph"]
        outside = set(iter_bits(g.outside_mask(self.duke)))
        if set(self.chains) != outside:
            missing = sorted(outside - set(self.chains))
            extra = sorted(set(self.chains) - outside)
            if missing:
                errs.append(f"no chain to {missing}")
            if extra:
                errs.append(f"chains to non-targets {extra}")
        for t, path in sorted(self.chains.items()):
            if not path or path[0] != self.duke or path[-1] != t:
                errs.append(f"chain to {t} does not run from {self.duke} to {t}: {path}")
                continue
            if len(path) - 1 > self.bound:
                errs.append(f"chain to {t} has length {len(path) - 1} > {self.bound}")
            for u, v in zip(path, path[1:]):
                if not (0 <= u < g.n and 0 <= v < g.n and g.pecks(u, v)):
                    errs.append(f"chain to {t} uses missing arc {u}->{v}")
                    break
        return errs

    def is_valid(self, g: MultiFlockGraph) -> bool:
        return not self.problems(g)

    def validate(self, g: MultiFlockGraph) -> "DukeCertificate":
        errs = self.problems(g)
        if errs:
            raise CertificateError(f"certificate for {self.duke} (bound {self.bound}): " + "; ".join(errs))
        return self

    def relabel(self, old_of_new: Sequence[int]) -> "DukeCertificate":
        """Translate a certificate built on a derived graph back to the original."""
        chains = {old_of_new[t]: tuple(old_of_new[c] for c in p) for t, p in self.chains.items()}
        return DukeCertificate(old_of_new[self.duke], self.bound, chains)


def shortest_chains(g: MultiFlockGraph, src: int) -> dict[int, tuple[int, ...]]:
    """BFS parent links from ``src`` unrolled into shortest paths.

    Parents are the lowest-index chicken of the previous layer, so the result
    is deterministic.
    """
    parent = {src: src}
    seen = 1 << src
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for v in iter_bits(g.rows[u] & ~seen):
                seen |= 1 << v
                parent[v] = u
                nxt.append(v)
        frontier = sorted(nxt)
    paths: dict[int, tuple[int, ...]] = {}
    for t in parent:
        path = [t]
        while path[-1] != src:
            path.append(parent[path[-1]])
        paths[t] = tuple(reversed(path))
    return paths


def certify_duke(g: MultiFlockGraph, c: int, m: int) -> DukeCertificate:
    """Shortest-chain certificate that ``c`` is an ``m``-Duke.

    Raises NotADuke naming the first chicken that is unreachable or too far.
    """
    g._check_chicken(c)
    if not isinstance(m, int) or m < 1:
        raise NonPositiveM(f"m must be a positive integer, got {m!r}")
    paths = shortest_chains(g, c)
    chains = {}
    for t in iter_bits(g.outside_mask(c)):
        p = paths.get(t)
        if p is None:
            raise NotADuke(f"chicken {c} has no peck chain to {t}", chicken=c, target=t)
        if len(p) - 1 > m:
            raise NotADuke(
                f"chicken {c} needs {len(p) - 1} pecks to reach {t}, more than {m}", chicken=c, target=t
            )
        chains[t] = p
    return DukeCertificate(c, m, chains)


def proof_certificate(g: MultiFlockGraph, duke: int, bound: int, chains: dict[int, tuple[int, ...]]) -> DukeCertificate:
    """Wrap chains assembled by a proof and check them arc by arc."""
    return DukeCertificate(duke, bound, chains).validate(g)


# -- outcome types -------------------------------------------------------------

class ClassKind(str, enum.Enum):
    ONE_DUKE = "one_duke"
    THREE_TWO_DUKES = "three_two_dukes"
    FOUR_THREE_DUKES = "four_three_dukes"

    @property
    def witness_count(self) -> int:
        return {"one_duke": 1, "three_two_dukes": 3, "four_three_dukes": 4}[self.value]

    @property
    def bound(self) -> int:
        return {"one_duke": 1, "three_two_dukes": 2, "four_three_dukes": 3}[self.value]

    @property
    def label(self) -> str:
        return {"one_duke": "OneDuke", "three_two_dukes": "ThreeTwoDukes", "four_three_dukes": "FourThreeDukes"}[
            self.value
        ]


@dataclass(frozen=True)
class Classification:
    kind: ClassKind
    witnesses: tuple[int, ...]
    certificates: tuple[DukeCertificate, ...]
    route: tuple[str, ...] = ()
    fallback: bool = False

    def problems(self, g: MultiFlockGraph) -> list[str]:
        errs = []
        if len(self.witnesses) != self.kind.witness_count:
            errs.append(f"{self.kind.label} needs {self.kind.witness_count} witnesses, got {len(self.witnesses)}")
        if len(set(self.witnesses)) != len(self.witnesses):
            errs.append(f"witnesses not distinct: {self.witnesses}")
        if tuple(c.duke for c in self.certificates) != self.witnesses:
            errs.append("certificates do not match witnesses")
        for cert in self.certificates:
            if cert.bound != self.kind.bound:
                errs.append(f"certificate for {cert.duke} has bound {cert.bound}, expected {self.kind.bound}")
            errs.extend(cert.problems(g))
        return errs


def classification(g: MultiFlockGraph, kind: ClassKind, witnesses, route=(), fallback=False) -> Classification:
    witnesses = tuple(witnesses)
    certs = tuple(certify_duke(g, w, kind.bound) for w in witnesses)
    return Classification(kind, witnesses, certs, tuple(route), fallback)


class PeckedKind(str, enum.Enum):
    PECKED_BY_3DUKE = "pecked_by_3duke"
    FLOCKMATE_2DUKE = "flockmate_2duke"


@dataclass(frozen=True)
class PeckedWitness:
    kind: PeckedKind
    chicken: int
    certificate: DukeCertificate
    fallback: bool = False

    def problems(self, g: MultiFlockGraph, pecked: int) -> list[str]:
        errs = list(self.certificate.problems(g))
        if self.certificate.duke != self.chicken:
            errs.append("certificate is for a different chicken")
        if self.kind is PeckedKind.PECKED_BY_3DUKE:
            if self.certificate.bound != 3:
                errs.append("pecker certificate must have bound 3")
            if not g.pecks(self.chicken, pecked):
                errs.append(f"{self.chicken} does not peck {pecked}")
        else:
            if self.certificate.bound != 2:
                errs.append("flock-mate certificate must have bound 2")
            if self.chicken == pecked or g.flock_of[self.chicken] != g.flock_of[pecked]:
                errs.append(f"{self.chicken} is not a flock-mate of {pecked}")
        return errs


class Lemma9Kind(str, enum.Enum):
    PECKED_BY_TWO_DUKE = "pecked_by_two_duke"
    THREE_TWO_DUKES = "three_two_dukes"
    FOUR_THREE_DUKES = "four_three_dukes"


CASE_LABELS = ("1", "1a", "1b", "2a-i", "2a-ii", "2b-i", "2b-ii", "3a", "3b", "3c-i", "3c-ii")


@dataclass(frozen=True)
class Lemma9Outcome:
    kind: Lemma9Kind
    witnesses: tuple[int, ...]
    case: str
    certificates: tuple[DukeCertificate, ...] = field(default=())

    def problems(self, g: MultiFlockGraph, d: int) -> list[str]:
        errs = []
        if self.case not in CASE_LABELS:
            errs.append(f"unknown case label {self.case!r}")
        want = {
            Lemma9Kind.PECKED_BY_TWO_DUKE: (1, 2),
            Lemma9Kind.THREE_TWO_DUKES: (3, 2),
            Lemma9Kind.FOUR_THREE_DUKES: (4, 3),
        }[self.kind]
        if len(self.witnesses) != want[0] or len(set(self.witnesses)) != want[0]:
            errs.append(f"{self.kind.value} needs {want[0]} distinct witnesses, got {self.witnesses}")
        if tuple(c.duke for c in self.certificates) != self.witnesses:
            errs.append("certificates do not match witnesses")
        for cert in self.certificates:
            if cert.bound != want[1]:
                errs.append(f"certificate for {cert.duke} has bound {cert.bound}, expected {want[1]}")
            errs.extend(cert.problems(g))
        if self.kind is Lemma9Kind.PECKED_BY_TWO_DUKE and self.witnesses and not g.pecks(self.witnesses[0], d):
            errs.append(f"{self.witnesses[0]} does not peck {d}")
        return errs
