"""Verification suites: each one sweeps an enumeration and emits one record
per (instance, claim) comparing two verdicts that must agree.

Records are JSON lines; a final ``summary`` record closes the stream.
"""
from __future__ import annotations

import json
import os
import random
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional

from . import enumeration as en
from .core import Quasigroup, associates, loop_profile
from .holomorph import holomorph_associativity, holomorph_interchange
from .identities import (EvansWitness, equality_vs_associativity, evans_check,
                         khalil_parastrophes, khalil_suite)
from .isotopy import (BoundExceeded, FAMILIES, apply_isotopism, associativity_families,
                      find_isotopism, isotopy_isomorphy, nucleus_criterion,
                      sample_nucleus_triple)
from .parastrophe import Kind, check_translation_identities, parastrophe, parastrophe_loop_profile


@dataclass
class Record:
    suite: str
    instance: str
    claim: str
    lhs: bool
    rhs: bool
    ok: bool = field(init=False)

    def __post_init__(self):
        self.ok = self.lhs == self.rhs

    def to_json(self) -> str:
        return json.dumps(asdict(self))


@dataclass
class Summary:
    suite: str
    instances: int = 0
    cases: int = 0
    failures: int = 0
    skipped: int = 0
    first_failure: Optional[dict] = None
    probe: bool = False
    params: dict = field(default_factory=dict)

    @property
    def exit_status(self) -> int:
        return 0 if self.probe or self.failures == 0 else 1

    def to_json(self) -> str:
        d = asdict(self)
        d["exit_status"] = self.exit_status
        return json.dumps({"summary": d})


@dataclass(frozen=True)
class Params:
    max_order: int
    seed: int = 0
    sample: int = 0
    triples: int = 100


@dataclass(frozen=True)
class Suite:
    name: str
    about: str
    bound: int
    default_order: int
    instances: Callable[[Params], Iterator[tuple[str, Quasigroup]]]
    check: Callable[[str, Quasigroup, Params], list]
    probe: bool = False


# -- instance streams ----------------------------------------------------------

def _latin(lo: int, hi: int):
    for n in range(lo, hi + 1):
        for i, q in enumerate(en.latin_squares(n)):
            yield f"latin{n}#{i}", q


def _loops(lo: int, hi: int):
    for n in range(lo, hi + 1):
        for i, q in enumerate(en.loops(n)):
            yield f"loop{n}#{i}", q


def _groups(lo: int, hi: int):
    for n in range(lo, hi + 1):
        for i, q in enumerate(en.groups(n)):
            yield f"group{n}#{i}", q


def _samples(p: Params):
    if p.sample:
        n = p.max_order + 1
        for i, q in enumerate(en.sample_quasigroups(n, p.sample, p.seed)):
            yield f"random{n}@{p.seed}#{i}", q


def latin_then_samples(p: Params):
    yield from _latin(2, p.max_order)
    yield from _samples(p)


@lru_cache(maxsize=None)
def _group_tables(n: int) -> tuple:
    return tuple(en.groups(n))


# -- per-instance checks -------------------------------------------------------

def _translations(suite, iid, Q, p):
    return [Record(suite, iid, f"{suite}/{r.name}", r.ok, True)
            for r in check_translation_identities(Q)]


def _assoc_isotopy(suite, iid, Q, p):
    rep = associativity_families(Q)
    out = [Record(suite, iid, f"{suite}/{f.family}", f.all_isotopisms, rep.associative)
           for f in rep.families]
    out.append(Record(suite, iid, f"{suite}/all", rep.all_families, rep.associative))
    out.append(Record(suite, iid, f"{suite}/shape",
                      all(f.shapes_ok for f in rep.families), True))
    return out


def _khalil_parastrophes(suite, iid, G, p):
    rep = khalil_parastrophes(G)
    return [Record(suite, iid, f"{suite}/{k.label}", all(v), True)
            for k, v in rep.results.items()]


def _khalil_isotopy(suite, iid, Q, p):
    iso = any(find_isotopism(Q, G) is not None for G in _group_tables(Q.n))
    return [Record(suite, iid, f"{suite}/all-six", all(khalil_suite(Q)), iso)]


def _equality(suite, iid, G, p):
    return [Record(suite, iid, f"{suite}/part{r.part}", r.equal, r.associative)
            for r in equality_vs_associativity(G).parts]


def _isomorphy(suite, iid, G, p):
    out = []
    for part in isotopy_isomorphy(G).parts:
        out.append(Record(suite, iid, f"{suite}/{part.family}", part.equal, part.associative))
        out.append(Record(suite, iid, f"{suite}/{part.family}/nucleus",
                          part.equal, part.all_nuclear))
        out.append(Record(suite, iid, f"{suite}/{part.family}/criterion",
                          part.criterion_ok, True))
    return out


def _nucleus(suite, iid, G, p):
    rng = random.Random(f"{p.seed}:{iid}")
    out = []
    for case in ("C=B", "C=A"):
        for t in range(p.triples):
            T = sample_nucleus_triple(G, case, rng)
            H = apply_isotopism(G, T)
            rep = nucleus_criterion(G, H, T)
            c = next(c for c in rep.cases if c.case == case)
            out.append(Record(suite, f"{iid}/{case}#{t}", f"{suite}/{case}",
                              c.isomorphism, c.in_nucleus))
    return out


def _group_isotope(suite, iid, Q, p):
    G = next((G for G in _group_tables(Q.n) if find_isotopism(Q, G) is not None), None)
    if G is None:
        return []
    return [Record(suite, iid, f"{suite}/{k.label}",
                   find_isotopism(parastrophe(Q, k), G) is not None, True) for k in Kind]


def _interchange(suite, iid, Q, p):
    rep = holomorph_interchange(Q)
    if rep.error:
        return []
    out = [Record(suite, iid, f"{suite}/{c.kind.label}", c.lhs, c.rhs) for c in rep.cases]
    out.append(Record(suite, iid, f"{suite}/same-aut", all(c.same_aut for c in rep.cases), True))
    return out


def _holomorph_assoc(suite, iid, G, p):
    rep = holomorph_associativity(G)
    if rep.error:
        return []
    return [Record(suite, iid, f"{suite}/{c.kind.label}", c.lhs, c.rhs) for c in rep.cases]


def _parastrophe_loops(suite, iid, Q, p):
    return [Record(suite, iid, f"{suite}/{claim}", v, True)
            for claim, v in parastrophe_loop_profile(Q).claims.items()]


def _evans(suite, iid, Q, p):
    return [Record(suite, iid, f"{suite}/identity-witness",
                   evans_check(Q, EvansWitness.trivial(Q.n)), associates(Q))]


def _probe(suite, iid, Q, p):
    assoc = associates(Q)
    out = []
    for name, _, _, src, dst in FAMILIES:
        iso = find_isotopism(parastrophe(Q, src), parastrophe(Q, dst)) is not None
        out.append(Record(suite, iid, f"{suite}/{src.label}-{dst.label}", iso, assoc))
    return out


def _holomorph_instances(p: Params):
    yield from _latin(1, min(p.max_order, 3))
    yield from _loops(4, p.max_order)


SUITES = {s.name: s for s in (
    Suite("translations", "ten translation identities on every parastrophe",
          5, 4, latin_then_samples, _translations),
    Suite("assoc-isotopy", "four triple families are isotopisms iff associative",
          5, 4, latin_then_samples, _assoc_isotopy),
    Suite("khalil-parastrophes", "division parastrophes of groups obey the Khalil conditions",
          6, 6, lambda p: _groups(1, p.max_order), _khalil_parastrophes),
    Suite("khalil-isotopy", "all six Khalil conditions iff isotopic to a group",
          5, 4, lambda p: _latin(1, p.max_order), _khalil_isotopy),
    Suite("assoc-equality", "parastrophes of a group coincide iff associative",
          6, 6, lambda p: _groups(1, p.max_order), _equality),
    Suite("isotopy-isomorphy", "family members through the nucleus criterion on groups",
          6, 6, lambda p: _groups(1, p.max_order), _isomorphy),
    Suite("nucleus", "isomorphism iff identity image in the nucleus, loop isotopes",
          6, 5, lambda p: _loops(1, p.max_order), _nucleus),
    Suite("group-isotope-parastrophes", "parastrophes of a group isotope stay isotopic to it",
          5, 4, lambda p: _latin(1, p.max_order), _group_isotope),
    Suite("holomorph-parastrophes", "parastrophes of holomorphs vs holomorphs of parastrophes",
          5, 4, _holomorph_instances, _interchange),
    Suite("holomorph-assoc", "holomorph comparisons iff associative parastrophe, groups",
          6, 6, lambda p: _groups(1, p.max_order), _holomorph_assoc),
    Suite("parastrophe-loops", "which parastrophes of a loop are (left/right) loops",
          6, 6, lambda p: _loops(1, p.max_order), _parastrophe_loops),
    Suite("evans", "identity-permutation generalized associativity iff associative",
          5, 4, lambda p: _latin(1, p.max_order), _evans),
    Suite("probe-isotopy-converse",
          "broad isotopy between the family endpoints vs associativity (report only)",
          4, 4, lambda p: _latin(1, p.max_order), _probe, probe=True),
)}


def _run_one(args):
    name, iid, rows, p = args
    s = SUITES[name]
    return s.check(name, iid, Quasigroup(rows), p)


def workers_from_env() -> int:
    try:
        return max(1, int(os.environ.get("QPL_WORKERS", "1")))
    except ValueError:
        return 1


def run_suite(name: str, max_order: Optional[int] = None, seed: int = 0, sample: int = 0,
              triples: int = 100, workers: int = 1) -> Iterator[Record | Summary]:
    """Yield every record of the suite in canonical order, then the summary."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    s = SUITES[name]
    p = Params(s.default_order if max_order is None else max_order, seed, sample, triples)
    if p.max_order > s.bound:
        raise BoundExceeded(f"suite {name} supports --max-order <= {s.bound}")
    summary = Summary(name, probe=s.probe, params=asdict(p))
    jobs = ((name, iid, q.rows, p) for iid, q in s.instances(p))
    if workers > 1:
        import multiprocessing as mp

        with mp.Pool(workers) as pool:
            yield from _collect(pool.imap(_run_one, jobs, chunksize=64), summary)
    else:
        yield from _collect(map(_run_one, jobs), summary)


def _collect(results: Iterable[list], summary: Summary):
    for records in results:
        summary.instances += 1
        if not records:
            summary.skipped += 1
        for r in records:
            summary.cases += 1
            if not r.ok:
                summary.failures += 1
                if summary.first_failure is None:
                    summary.first_failure = {"instance": r.instance, "claim": r.claim}
            yield r
    yield summary


def summarize(name: str, **kw) -> Summary:
    """Run a suite and return only its summary."""
    for item in run_suite(name, **kw):
        pass
    return item
