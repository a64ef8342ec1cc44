"""Fixture ideals for additive structures on P^1..P^4, Hirzebruch surfaces and
the finite-orbit family, plus the machinery that certifies them distinct.

Two printed ideals are repaired because, as printed, they have infinite
colength: P3/I_2 gains S3^2 and the fixed-fiber Hirzebruch ideal gains S2^2.
The P^4 list prints I_2 twice; it is kept once.  P4/I_3 and P4/I_4 are kept
exactly as printed even though both quotients have length 4 (S4 = S1*S2^2 = 0
there); verify_catalog reports them as failing rather than silently fixing
them, since no repair produces new isomorphism classes.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import linalg as la
from .artinian import (
    ArtinianAlgebra,
    Fingerprint,
    build_algebra,
    fingerprint,
    hilbert_samuel,
    linear_substitution,
    quadratic_form_data,
    substitute_ideal,
)
from .groebner import AlgebraError, Ideal, buchberger, normal_form
from .inverse_system import roundtrip_check
from .polynomial import OPERATOR, Polynomial, parse_polynomial
from .representation import is_faithful


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    group: str
    n: int
    generators: tuple
    expected_length: int
    citation: str
    printed: tuple | None = None
    note: str = ""
    expected_chi: tuple | None = None
    expected_quadratic_rank: int | None = None
    auxiliary: bool = False

    @property
    def ideal(self) -> Ideal:
        return Ideal.parse(self.generators, self.n)

    def algebra(self) -> ArtinianAlgebra:
        return build_algebra(self.ideal)


def _gens(text: str) -> tuple:
    return tuple(g.strip() for g in text.split(","))


_P4 = [
    ("I_1", "S1^2 - S2, S1*S2 - S3, S1*S3 - S4, S2*S3, S1*S4", (1, 1, 1, 1, 1), None),
    ("I_2", "S1^2 - S3, S1*S2, S2^2, S1*S3 - S4, S1*S4", (1, 2, 1, 1), None),
    ("I_3", "S1^2 - S3, S1*S2, S2^2 - S3, S1*S3 - S4, S1*S4", None, None),
    ("I_4", "S1^2 - S3, S1*S2 - S3, S2^2, S1*S3 - S4, S1*S4", None, None),
    ("I_5", "S1^2 - S3, S1*S2 - S4, S2^2, S1*S3, S1*S4, S2*S3", (1, 2, 2), None),
    ("I_6", "S1^2 - S3, S2^2 - S4, S1*S2, S1*S3, S2*S4", (1, 2, 2), None),
    ("I_7", "S1^2 - S4, S2*S3 - S4, S1*S2, S1*S3, S2^2, S3^2, S1*S4", (1, 3, 1), 3),
    ("I_8", "S1^2, S2^2, S3^2, S1*S2 - S4, S1*S3, S2*S3", (1, 3, 1), 2),
    ("I_9", "S1^2 - S4, S2^2, S3^2, S1*S2, S1*S3, S1*S4, S2*S3", (1, 3, 1), 1),
    ("I_10", ", ".join(f"S{i}*S{j}" for i in range(1, 5) for j in range(i, 5)), (1, 4), None),
]

_P4_NOTES = {
    "I_2": "printed twice in the source list; kept once",
    "I_3": "as printed S4 = S1*S3 = S1*S2^2 = 0, so the quotient has length 4",
    "I_4": "as printed S4 = S1*S3 = S1*S2^2 = 0, so the quotient has length 4",
    "I_7": "quadratic form m/m^2 x m/m^2 -> m^2/m^3 has rank 3",
    "I_8": "quadratic form m/m^2 x m/m^2 -> m^2/m^3 has rank 2",
    "I_9": "quadratic form m/m^2 x m/m^2 -> m^2/m^3 has rank 1",
}


def projective_entries() -> list:
    out = [
        CatalogEntry("P1", "P1", 1, ("S1^2",), 2, "Prop. unique G_a^1-structure on P^1",
                     expected_chi=(1, 1)),
        CatalogEntry("P2/I_1", "P2", 2, _gens("S1*S2, S2^2, S1^2"), 3,
                     "Prop. two distinct G_a^2-structures on P^2", expected_chi=(1, 2),
                     note="the translation structure tau_2"),
        CatalogEntry("P2/I_2", "P2", 2, _gens("S1*S2, S2 - S1^2"), 3,
                     "Prop. two distinct G_a^2-structures on P^2", expected_chi=(1, 1, 1)),
        CatalogEntry("P3/I_1", "P3", 3, _gens("S1^2 - S2, S1*S2 - S3, S1*S3"), 4,
                     "Prop. four distinct G_a^3-structures on P^3", expected_chi=(1, 1, 1, 1)),
        CatalogEntry("P3/I_2", "P3", 3, _gens("S1^2 - S2, S1*S2, S1*S3, S3^2"), 4,
                     "Prop. four distinct G_a^3-structures on P^3",
                     printed=_gens("S1^2 - S2, S1*S2, S1*S3"),
                     note="printed ideal has no pure power of S3 (infinite colength); S3^2 added",
                     expected_chi=(1, 2, 1), expected_quadratic_rank=1),
        CatalogEntry("P3/I_3", "P3", 3, _gens("S1^2, S1*S2 - S3, S2^2"), 4,
                     "Prop. four distinct G_a^3-structures on P^3",
                     expected_chi=(1, 2, 1), expected_quadratic_rank=2),
        CatalogEntry("P3/I_4", "P3", 3, _gens("S1^2, S1*S2, S2^2, S2*S3, S3^2, S1*S3"), 4,
                     "Prop. four distinct G_a^3-structures on P^3", expected_chi=(1, 3),
                     note="the translation structure tau_3"),
    ]
    for name, gens, chi, rank in _P4:
        out.append(CatalogEntry(f"P4/{name}", "P4", 4, _gens(gens), 5,
                                "Prop. ten distinct G_a^4-structures on P^4",
                                note=_P4_NOTES.get(name, ""), expected_chi=chi,
                                expected_quadratic_rank=rank))
    return out


def tau_ideal(n: int) -> Ideal:
    """The translation structure: all products S_i S_j."""
    gens = [f"S{i}*S{j}" for i in range(1, n + 1) for j in range(i, n + 1)]
    return Ideal.parse(gens, n)


def finite_orbit_generators(n: int) -> tuple:
    if n < 1:
        raise ValueError("n must be at least 1")
    gens = [f"S1^{i} - S{i}" for i in range(2, n + 1)]
    gens += [f"S{i}*S{j}" for i in range(1, n + 1) for j in range(i, n + 1) if i + j > n]
    return tuple(gens)


def finite_orbit_ideal(n: int) -> Ideal:
    """[S1^i - S_i for i = 2..n, S_i S_j for i + j > n]."""
    return Ideal.parse(finite_orbit_generators(n), n)


def finite_orbit_entries(max_n: int = 6) -> list:
    return [
        CatalogEntry(f"orbit/P{n}", f"orbit/P{n}", n, finite_orbit_generators(n), n + 1,
                     "Prop. unique structure on P^n with finitely many orbits",
                     expected_chi=(1,) * (n + 1))
        for n in range(1, max_n + 1)
    ]


def hirzebruch_representations(n: int) -> tuple:
    """The two length-(n+2) algebras attached to F_n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    cite = "Prop. F_n has two distinct G_a^2-structures"
    first = CatalogEntry(f"F{n}/nontrivial-fiber", f"F{n}", 2, ("S1*S2", f"S2 - S1^{n + 1}"), n + 2,
                         cite, note="S1^(n+1) = S2 != 0: nontrivial action on the distinguished fiber",
                         expected_chi=(1,) * (n + 2))
    second = CatalogEntry(f"F{n}/fixed-fiber", f"F{n}", 2, ("S1*S2", f"S1^{n + 1}", "S2^2"), n + 2,
                          cite, printed=("S1*S2", f"S1^{n + 1}"),
                          note="printed ideal has no pure power of S2 (infinite colength); S2^2 added",
                          expected_chi=(1, 2) + (1,) * (n - 1))
    return first, second


def hirzebruch_entries(max_n: int = 4) -> list:
    return [e for n in range(1, max_n + 1) for e in hirzebruch_representations(n)]


def auxiliary_entries() -> list:
    return [
        CatalogEntry("P4/aux-gorenstein-1211", "P4-aux", 4,
                     _gens("S1^2 - S3, S1*S3 - S4, S1*S2, S2^2 - S4"), 5,
                     "length-5 algebra F[x,y]/(xy, y^2 - x^3), absent from the printed P^4 list",
                     note="the Gorenstein algebra with Hilbert function (1,2,1,1)",
                     expected_chi=(1, 2, 1, 1), auxiliary=True),
    ]


def catalog_entries() -> list:
    return projective_entries() + hirzebruch_entries() + finite_orbit_entries() + auxiliary_entries()


def entry(label: str) -> CatalogEntry:
    for e in catalog_entries():
        if e.label == label:
            return e
    raise KeyError(f"unknown catalog label {label!r}")


PROJECTIVE_COUNTS = {"P1": 1, "P2": 2, "P3": 4, "P4": 10}


def hilbert_samuel_shapes(n: int) -> list:
    """Reference Hilbert-Samuel shapes for algebras of length n + 1."""
    shapes = [(1, n), (1,) * (n + 1)]
    for head in ((1, 2), (1, 3), (1, 2, 2)):
        tail = n + 1 - sum(head)
        if tail >= 0:
            shapes.append(head + (1,) * tail)
    out = []
    for s in shapes:
        if s not in out and sum(s) == n + 1:
            out.append(s)
    return out


# --------------------------------------------------------------------------
# isomorphisms and distinctness

class SubstitutionError(ValueError):
    pass


def _linear_part(images: list) -> list:
    n = images[0].n
    return [[img.coefficient(tuple(int(k == j) for k in range(n))) for j in range(n)] for img in images]


def verify_isomorphism(a: Ideal, b: Ideal, substitution: list) -> bool:
    """Does S_i -> substitution[i] induce an isomorphism F[S]/a -> F[S]/b?"""
    if a.n != b.n or len(substitution) != a.n:
        raise SubstitutionError("substitution must have one image per variable of matching arity")
    for i, img in enumerate(substitution):
        if img.constant_term():
            raise SubstitutionError(f"image of S{i + 1} has a constant term")
    if la.det(_linear_part(substitution)) == 0:
        raise SubstitutionError("linear part of the substitution is not invertible")
    G = buchberger(b)
    if not all(normal_form(g.substitute(substitution), G).is_zero() for g in a.generators):
        return False
    try:
        return build_algebra(a).length == build_algebra(b).length
    except AlgebraError:
        return False


def identity_substitution(n: int) -> list:
    return [Polynomial.variable(i, n, OPERATOR) for i in range(n)]


@dataclass(frozen=True)
class Verdict:
    kind: str  # "distinct", "isomorphic" or "unknown"
    witness: object = None


def distinguish(a: ArtinianAlgebra, b: ArtinianAlgebra, substitution: list | None = None,
                fa: Fingerprint | None = None, fb: Fingerprint | None = None) -> Verdict:
    """Certify two algebras distinct by an invariant, or isomorphic by a verified map."""
    if a.n != b.n:
        raise ValueError(f"arity mismatch: {a.n} vs {b.n}")
    fa = fa or fingerprint(a)
    fb = fb or fingerprint(b)
    diff = fa.differences(fb)
    if diff:
        k = diff[0]
        return Verdict("distinct", (k, getattr(fa, k), getattr(fb, k)))
    candidates = [substitution] if substitution is not None else []
    candidates.append(identity_substitution(a.n))
    for sub in candidates:
        try:
            if verify_isomorphism(a.ideal, b.ideal, sub):
                return Verdict("isomorphic", [str(p) for p in sub])
        except SubstitutionError:
            continue
    return Verdict("unknown")


def random_invertible_matrix(n: int, rng: random.Random, bound: int = 3) -> list:
    while True:
        A = [[Fraction(rng.randint(-bound, bound)) for _ in range(n)] for _ in range(n)]
        if la.det(A):
            return A


def random_linear_change(ideal: Ideal, rng: random.Random) -> Ideal:
    return substitute_ideal(ideal, linear_substitution(random_invertible_matrix(ideal.n, rng)))


# --------------------------------------------------------------------------
# verification report

@dataclass
class EntryResult:
    label: str
    group: str
    checks: dict
    length: int | None = None
    chi: tuple | None = None
    fingerprint: dict | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and all(self.checks.values())


@dataclass
class PairResult:
    group: str
    a: str
    b: str
    verdict: str
    witness: object


@dataclass
class CatalogReport:
    entries: list = field(default_factory=list)
    pairs: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    @property
    def failures(self) -> list:
        out = [f"{e.label}: {e.error or ', '.join(k for k, v in e.checks.items() if not v)}"
               for e in self.entries if not e.ok]
        out += [f"{p.a} vs {p.b}: {p.verdict}" for p in self.pairs if p.verdict != "distinct"]
        out += [f"{g}: expected {PROJECTIVE_COUNTS[g]} entries, found {c}"
                for g, c in self.counts.items() if c != PROJECTIVE_COUNTS[g]]
        return out

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "counts": self.counts,
            "entries": [asdict(e) | {"ok": e.ok} for e in self.entries],
            "pairs": [asdict(p) for p in self.pairs],
            "failures": self.failures,
        }


def check_entry(e: CatalogEntry) -> EntryResult:
    try:
        R = e.algebra()
    except AlgebraError as exc:
        return EntryResult(e.label, e.group, {"valid_algebra": False}, error=str(exc))
    chi = hilbert_samuel(R)
    checks = {
        "valid_algebra": True,
        "length": R.length == e.expected_length,
        "faithful": is_faithful(R),
        "roundtrip": roundtrip_check(e.ideal),
    }
    if e.expected_chi is not None:
        checks["hilbert_samuel"] = chi == e.expected_chi
    if e.expected_quadratic_rank is not None:
        checks["quadratic_rank"] = quadratic_form_data(R).single_form_rank == e.expected_quadratic_rank
    if e.group in PROJECTIVE_COUNTS:
        checks["shape_table"] = chi in hilbert_samuel_shapes(e.n)
    fp = fingerprint(R)
    return EntryResult(e.label, e.group, checks, R.length, chi, _jsonable(fp.as_dict()))


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def verify_catalog(entries: list | None = None, workers: int = 1) -> CatalogReport:
    """Validate every entry and separate every same-group pair by an invariant."""
    entries = sorted(entries or catalog_entries(), key=lambda e: e.label)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(check_entry, entries))
    else:
        results = [check_entry(e) for e in entries]
    report = CatalogReport(entries=results)
    by_label = {r.label: r for r in results}
    groups: dict = {}
    for e in entries:
        groups.setdefault(e.group, []).append(e)
    for g, members in sorted(groups.items()):
        if g in PROJECTIVE_COUNTS:
            report.counts[g] = len(members)
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                a, b = by_label[members[i].label], by_label[members[j].label]
                if a.fingerprint is None or b.fingerprint is None:
                    report.pairs.append(PairResult(g, a.label, b.label, "unknown", "invalid algebra"))
                    continue
                diff = [k for k in a.fingerprint if a.fingerprint[k] != b.fingerprint[k]]
                if diff:
                    k = diff[0]
                    report.pairs.append(PairResult(g, a.label, b.label, "distinct",
                                                   [k, a.fingerprint[k], b.fingerprint[k]]))
                else:
                    v = distinguish(members[i].algebra(), members[j].algebra())
                    report.pairs.append(PairResult(g, a.label, b.label, v.kind, v.witness))
    return report


# --------------------------------------------------------------------------
# export

def export_records(entries: list | None = None) -> list:
    records = []
    for e in entries or catalog_entries():
        try:
            chi = list(hilbert_samuel(e.algebra()))
        except AlgebraError:
            chi = None
        records.append({
            "label": e.label,
            "group": e.group,
            "arity": e.n,
            "generators": list(e.generators),
            "printed_generators": list(e.printed) if e.printed else None,
            "expected_length": e.expected_length,
            "chi": chi,
            "citation": e.citation,
            "note": e.note,
            "auxiliary": e.auxiliary or e.group not in PROJECTIVE_COUNTS,
        })
    return records


def exact_json(x):
    """JSON-ready copy of ``x`` with every number as an exact "p/q" string."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, dict):
        return {str(k): exact_json(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [exact_json(v) for v in x]
    return str(x)


def export_catalog(path) -> int:
    records = export_records()
    with open(path, "w") as fh:
        json.dump({"entries": exact_json(records)}, fh, indent=2)
        fh.write("\n")
    return len(records)


def parse_generators(e: CatalogEntry) -> list:
    return [parse_polynomial(g, e.n) for g in e.generators]
