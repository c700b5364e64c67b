"""Streaming generation of ASM(n), the per-ASM analysis pipeline, census
tabulation with a resumable shard cache, and theorem-verification sweeps.

ASMs are generated through their column-sum matrices: row i of the partial
column sums is a 0/1 vector with i ones whose one-positions interlace the
previous row's (the monotone-triangle condition).  The stream order is
lexicographic on the successive one-position tuples, so shard boundaries
and cache keys are stable across runs.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import random
import time
from dataclasses import dataclass, field as dc_field

from .asm import (
    Asm,
    Permutation,
    badblock_match,
    check_containment_constraints,
    direct_sum,
    insert_unit,
    iter_pattern_witnesses,
    one_plus,
    perm_direct_sum,
    validate_asm,
)
from .complexes import (
    face_subcomplex,
    km_vertex_decomposable,
    sr_complex_from_ideal,
    stanley_reisner_ideal,
)
from .errors import AsmlabError, SizeBoundExceededError, UnknownStatementError
from .homology import _all_faces, cm_conjecture_scan, is_cohen_macaulay
from .ideals import (
    SquarefreeIdeal,
    ideal_colon,
    ideal_intersection,
    init_ideal,
    is_minimal_prime,
    perm_set_via_primes,
)

ASM_COUNTS = (1, 2, 7, 42, 429, 7436, 218348, 10850216)
MAX_STREAM_N = 8
SHARD_SIZE = 128
ALL_CHECKS = ("codim", "equidim", "cm", "km_vd")
CENSUS_COLUMNS = (
    "n",
    "total",
    "cm",
    "not_cm",
    "km_vd_fail",
    "km_vd_fail_a11",
    "equidim",
    "runtime_s",
)


# -- the stream ----------------------------------------------------------------


def _extensions(prev: tuple[int, ...], n: int):
    """One-position tuples of length len(prev)+1 interlacing prev, in
    lexicographic order."""
    k = len(prev)
    out: list[tuple[int, ...]] = []

    def rec(acc: list[int], idx: int):
        if idx == k + 1:
            out.append(tuple(acc))
            return
        lo = max(prev[idx - 1] if idx > 0 else 1, acc[-1] + 1 if acc else 1)
        hi = prev[idx] if idx < k else n
        for m in range(lo, hi + 1):
            acc.append(m)
            rec(acc, idx + 1)
            acc.pop()

    rec([], 0)
    return out


def enumerate_asms(n: int):
    """Yield every element of ASM(n) exactly once, in a fixed order."""
    if not (1 <= n <= MAX_STREAM_N):
        raise SizeBoundExceededError(f"stream size n={n} outside [1, {MAX_STREAM_N}]")

    def rec(rows: list[tuple[int, ...]]):
        if len(rows) == n:
            yield _asm_from_positions(rows, n)
            return
        for ext in _extensions(rows[-1] if rows else (), n):
            rows.append(ext)
            yield from rec(rows)
            rows.pop()

    yield from rec([])


def _asm_from_positions(rows, n: int) -> Asm:
    entries = []
    prev = [0] * n
    for pos in rows:
        cur = [0] * n
        for j in pos:
            cur[j - 1] = 1
        entries.append(tuple(cur[j] - prev[j] for j in range(n)))
        prev = cur
    return Asm(tuple(entries))


# -- per-ASM analysis ----------------------------------------------------------


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the census needs to know about one ASM."""

    asm: Asm
    codim: int | None = None
    perm_count: int | None = None
    equidimensional: bool | None = None
    cm: bool | None = None
    km_vd: bool | None = None
    a11_is_one: bool = False
    timings: tuple = ()  # tuple[(stage, seconds), ...]

    def to_json_dict(self) -> dict:
        return {
            "matrix": [list(r) for r in self.asm.entries],
            "codim": self.codim,
            "perm_count": self.perm_count,
            "equidimensional": self.equidimensional,
            "cm": self.cm,
            "km_vd": self.km_vd,
            "a11_is_one": self.a11_is_one,
            "timings": [[stage, t] for stage, t in self.timings],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "AnalysisReport":
        return cls(
            asm=Asm(tuple(tuple(r) for r in d["matrix"])),
            codim=d["codim"],
            perm_count=d["perm_count"],
            equidimensional=d["equidimensional"],
            cm=d["cm"],
            km_vd=d["km_vd"],
            a11_is_one=d["a11_is_one"],
            timings=tuple((s, t) for s, t in d["timings"]),
        )


def analyze_asm(
    A: Asm, checks=ALL_CHECKS, field="rational", backend: str = "reisner"
) -> AnalysisReport:
    checks = frozenset(checks)
    timings = []
    codim = perm_count = equidim = cm = km_vd = None
    if checks & {"codim", "equidim"}:
        t0 = time.perf_counter()
        pa = perm_set_via_primes(A)
        timings.append(("primes", time.perf_counter() - t0))
        codim = pa.codim if "codim" in checks else None
        perm_count = len(pa.perms)
        equidim = pa.equidimensional if "equidim" in checks else None
    if "cm" in checks:
        t0 = time.perf_counter()
        cm = is_cohen_macaulay(A, field=field, backend=backend, bound=A.n)
        timings.append(("cm", time.perf_counter() - t0))
    if "km_vd" in checks:
        t0 = time.perf_counter()
        I = init_ideal(A)
        if I.is_zero:
            km_vd = True
        else:
            km_vd = km_vertex_decomposable(sr_complex_from_ideal(I)).result
        timings.append(("km_vd", time.perf_counter() - t0))
    return AnalysisReport(
        asm=A,
        codim=codim,
        perm_count=perm_count,
        equidimensional=equidim,
        cm=cm,
        km_vd=km_vd,
        a11_is_one=A.a11_is_one,
        timings=tuple(timings),
    )


# -- census tabulation ---------------------------------------------------------


@dataclass(frozen=True)
class CensusTable:
    n: int
    total: int
    cm: int | None
    not_cm: int | None
    km_vd_fail: int | None
    km_vd_fail_a11: int | None
    equidim: int | None
    runtime_s: float

    def row(self) -> tuple:
        def cell(v):
            return "" if v is None else v

        return (
            self.n,
            self.total,
            cell(self.cm),
            cell(self.not_cm),
            cell(self.km_vd_fail),
            cell(self.km_vd_fail_a11),
            cell(self.equidim),
            self.runtime_s,
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CENSUS_COLUMNS)
        writer.writerow(self.row())
        return buf.getvalue()

    def to_json_dict(self) -> dict:
        return dict(zip(CENSUS_COLUMNS, self.row()))


_FILTERS = {
    None: lambda A: True,
    "a11=1": lambda A: A.a11_is_one,
}


def _cache_key(n: int, checks, field, filter_spec) -> str:
    payload = json.dumps(
        {"n": n, "checks": sorted(checks), "field": str(field), "filter": filter_spec},
        sort_keys=True,
    )
    return hashlib.sha1(payload.encode()).hexdigest()[:16]


def _shard_worker(args):
    n, start, stop, checks, field, filter_spec = args
    keep = _FILTERS[filter_spec]
    reports = []
    for idx, A in enumerate(enumerate_asms(n)):
        if idx < start:
            continue
        if idx >= stop:
            break
        if keep(A):
            reports.append(analyze_asm(A, checks=checks, field=field).to_json_dict())
    return start, reports


def tabulate(
    n: int,
    checks=ALL_CHECKS,
    filter_spec: str | None = None,
    jobs: int = 1,
    cache_dir=None,
    field="rational",
) -> CensusTable:
    """Aggregate per-ASM analyses into one census row.

    Per-shard results are cached as JSON-lines files in a content-addressed
    subdirectory of cache_dir, so interrupted runs resume and warm reruns
    recompute nothing.
    """
    checks = tuple(sorted(frozenset(checks)))
    if ("cm" in checks or "km_vd" in checks) and n > 7:
        raise SizeBoundExceededError(f"cm/km_vd censuses are limited to n <= 7")
    if filter_spec not in _FILTERS:
        raise AsmlabError(f"unknown filter {filter_spec!r}")
    total_stream = ASM_COUNTS[n - 1]
    shards = [
        (start, min(start + SHARD_SIZE, total_stream))
        for start in range(0, total_stream, SHARD_SIZE)
    ]
    key_dir = None
    if cache_dir is not None:
        from pathlib import Path

        key_dir = Path(cache_dir) / _cache_key(n, checks, field, filter_spec)
        key_dir.mkdir(parents=True, exist_ok=True)

    def shard_path(start):
        return key_dir / f"shard_{start:08d}.jsonl"

    results: dict[int, list[dict]] = {}
    todo = []
    for start, stop in shards:
        if key_dir is not None and shard_path(start).exists():
            lines = shard_path(start).read_text().splitlines()
            results[start] = [json.loads(line) for line in lines]
        else:
            todo.append((n, start, stop, checks, field, filter_spec))
    if todo:
        if jobs > 1:
            from multiprocessing import Pool

            with Pool(jobs) as pool:
                computed = pool.map(_shard_worker, todo)
        else:
            computed = [_shard_worker(a) for a in todo]
        for start, reports in computed:
            results[start] = reports
            if key_dir is not None:
                tmp = shard_path(start).with_suffix(".tmp")
                tmp.write_text(
                    "".join(json.dumps(r, sort_keys=True) + "\n" for r in reports)
                )
                tmp.replace(shard_path(start))

    reports = [
        AnalysisReport.from_json_dict(d)
        for start, _ in shards
        for d in results[start]
    ]
    total = len(reports)
    runtime = round(sum(t for r in reports for _, t in r.timings), 3)
    cm_count = not_cm = km_fail = km_fail_a11 = equidim = None
    if "cm" in checks:
        cm_count = sum(1 for r in reports if r.cm)
        not_cm = total - cm_count
    if "km_vd" in checks:
        # the headline count is CM complexes missed by the fixed-order test
        def misses(r):
            return not r.km_vd and (r.cm if "cm" in checks else True)

        km_fail = sum(1 for r in reports if misses(r))
        km_fail_a11 = sum(1 for r in reports if misses(r) and r.a11_is_one)
    if "equidim" in checks:
        equidim = sum(1 for r in reports if r.equidimensional)
    return CensusTable(
        n=n,
        total=total,
        cm=cm_count,
        not_cm=not_cm,
        km_vd_fail=km_fail,
        km_vd_fail_a11=km_fail_a11,
        equidim=equidim,
        runtime_s=runtime,
    )


# -- theorem sweeps ------------------------------------------------------------


@dataclass
class VerificationReport:
    statement: str
    n: int
    cases: int = 0
    failures: list = dc_field(default_factory=list)
    detail: dict = dc_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "statement": self.statement,
            "n": self.n,
            "cases": self.cases,
            "passed": self.passed,
            "failures": self.failures[:10],
            "detail": self.detail,
        }


def _sampled_asms(n: int, rng: random.Random | None, target: int):
    pool = list(enumerate_asms(n))
    if rng is None or len(pool) <= target:
        return pool
    return rng.sample(pool, target)


def _verify_perm_bijection(n, rng, report):
    for A in _sampled_asms(n, rng, 600):
        report.cases += 1
        pa = perm_set_via_primes(A)
        pb = perm_set_via_primes(one_plus(A))
        expected = frozenset(
            perm_direct_sum(Permutation.identity(1), w) for w in pa.perms
        )
        if pb.perms != expected or pb.codim != pa.codim:
            report.failures.append(A.to_json_dict())


def _verify_direct_sum(n, rng, report):
    for m in range(1, n):
        for A1 in enumerate_asms(m):
            p1 = perm_set_via_primes(A1)
            for A2 in enumerate_asms(n - m):
                report.cases += 1
                p2 = perm_set_via_primes(A2)
                pa = perm_set_via_primes(direct_sum(A1, A2))
                expected = frozenset(
                    perm_direct_sum(u, v) for u in p1.perms for v in p2.perms
                )
                ok = (
                    pa.perms == expected
                    and pa.codim == p1.codim + p2.codim
                    and pa.equidimensional
                    == (p1.equidimensional and p2.equidimensional)
                )
                if not ok:
                    report.failures.append(
                        {"a1": A1.to_json_dict(), "a2": A2.to_json_dict()}
                    )


def _verify_init_split(n, rng, report):
    for A in _sampled_asms(n, rng, 600):
        report.cases += 1
        I = init_ideal(A)
        perms = perm_set_via_primes(A).perms
        parts = [init_ideal(w.to_asm()) for w in perms]
        meet = parts[0]
        for part in parts[1:]:
            meet = ideal_intersection(meet, part)
        if meet.gens != I.gens:
            report.failures.append(A.to_json_dict())


def _verify_link_colon(n, rng, report):
    for A in _sampled_asms(n, rng, 80):
        I = init_ideal(A)
        if I.is_zero:
            report.cases += 1
            continue
        delta = sr_complex_from_ideal(I)
        I_delta = stanley_reisner_ideal(delta)
        faces = sorted(
            _all_faces(delta.facets), key=lambda f: (len(f), tuple(sorted(f)))
        )
        if rng is not None and len(faces) > 8:
            faces = rng.sample(faces, 8)
        for sigma in faces:
            report.cases += 1
            link = face_subcomplex(delta, sigma, "link")
            lhs = stanley_reisner_ideal(link)
            rhs = ideal_colon(I_delta, sigma)
            if lhs.gens != rhs.gens:
                report.failures.append(
                    {"asm": A.to_json_dict(), "face": sorted(sigma)}
                )


def _verify_tilde_identity(n, rng, report):
    cases = [(A, j) for A in enumerate_asms(n) for j in range(1, n + 1)]
    if rng is not None and len(cases) > 600:
        cases = rng.sample(cases, 600)
    for A, j in cases:
        report.cases += 1
        At = insert_unit(A, 1, j)
        shifted = {frozenset((a + 1, b) for (a, b) in g) for g in init_ideal(A).gens}
        row_vars = {frozenset([(1, b)]) for b in range(1, n + 2) if b != j}
        lhs = SquarefreeIdeal.make(n + 1, shifted | row_vars)
        tail = frozenset((1, k) for k in range(j + 1, n + 2))
        tail_vars = {frozenset([c]) for c in tail}
        rhs = SquarefreeIdeal.make(
            n + 1, set(ideal_colon(init_ideal(At), tail).gens) | tail_vars
        )
        if lhs.gens != rhs.gens:
            report.failures.append({"asm": A.to_json_dict(), "j": j})


def _try_asm(entries) -> Asm | None:
    try:
        return validate_asm([list(r) for r in entries])
    except AsmlabError:
        return None


def _antidiagonal_blocks(A: Asm):
    """Splits A = [[0, A1], [A2, 0]] with both blocks valid ASMs."""
    n = A.n
    for m in range(1, n):
        k = n - m
        if any(A[(i, j)] != 0 for i in range(1, m + 1) for j in range(1, k + 1)):
            continue
        if any(
            A[(i, j)] != 0 for i in range(m + 1, n + 1) for j in range(k + 1, n + 1)
        ):
            continue
        A1 = _try_asm(
            tuple(A.entries[i][k:] for i in range(m))
        )
        A2 = _try_asm(tuple(A.entries[i][:k] for i in range(m, n)))
        if A1 is not None and A2 is not None:
            yield m, A1, A2


def _verify_block_antidiagonal(n, rng, report):
    for A in enumerate_asms(n):
        for m, A1, A2 in _antidiagonal_blocks(A):
            report.cases += 1
            eq = perm_set_via_primes(A).equidimensional
            eq_blocks = (
                perm_set_via_primes(A1).equidimensional
                and perm_set_via_primes(A2).equidimensional
            )
            cm = is_cohen_macaulay(A, bound=A.n)
            cm_blocks = is_cohen_macaulay(A1, bound=A1.n) and is_cohen_macaulay(
                A2, bound=A2.n
            )
            if eq != eq_blocks or cm != cm_blocks:
                report.failures.append({"asm": A.to_json_dict(), "m": m})


def _verify_badblock(n, rng, report):
    matches = 0
    for A in enumerate_asms(n):
        cell = badblock_match(A)
        if cell is None:
            continue
        matches += 1
        report.cases += 1
        from .ideals import construct_yo_primes

        pa = perm_set_via_primes(A)
        Y, O = construct_yo_primes(A, *cell)
        I = init_ideal(A)
        ok = (
            not pa.equidimensional
            and len(Y) != len(O)
            and is_minimal_prime(I, Y)
            and is_minimal_prime(I, O)
        )
        if not ok:
            report.failures.append({"asm": A.to_json_dict(), "cell": list(cell)})
    report.detail["matches"] = matches


def _verify_cm_conjecture(n, rng, report):
    scan = cm_conjecture_scan(n)
    report.cases = scan.total
    report.detail["cm_count"] = scan.cm_count
    for entries in scan.forward_violations:
        report.failures.append({"kind": "forward", "matrix": [list(r) for r in entries]})
    for entries in scan.converse_counterexamples:
        report.failures.append(
            {"kind": "converse", "matrix": [list(r) for r in entries]}
        )


def _verify_containment_restrictions(n, rng, report):
    patterns = [B for k in range(1, n) for B in enumerate_asms(k)]
    targets = _sampled_asms(n, rng, 30)
    for A in targets:
        for B in patterns:
            for witness in iter_pattern_witnesses(A, B):
                report.cases += 1
                cr = check_containment_constraints(A, B, witness)
                if not cr.ok:
                    report.failures.append(
                        {
                            "target": A.to_json_dict(),
                            "pattern": B.to_json_dict(),
                            "rows": list(witness.kept_rows),
                            "cols": list(witness.kept_cols),
                        }
                    )


_STATEMENTS = {
    "perm-bijection": _verify_perm_bijection,
    "direct-sum": _verify_direct_sum,
    "init-split": _verify_init_split,
    "link-colon": _verify_link_colon,
    "tilde-identity": _verify_tilde_identity,
    "block-antidiagonal": _verify_block_antidiagonal,
    "badblock": _verify_badblock,
    "cm-conjecture": _verify_cm_conjecture,
    "containment-restrictions": _verify_containment_restrictions,
}

STATEMENT_NAMES = tuple(sorted(_STATEMENTS))


def verify_statement(name: str, n: int, seed: int = 0) -> VerificationReport:
    """Run one theorem sweep: exhaustive for n <= 4, seeded sampling above."""
    if name not in _STATEMENTS:
        raise UnknownStatementError(f"unknown statement {name!r}")
    rng = random.Random(seed) if n >= 5 else None
    report = VerificationReport(statement=name, n=n)
    _STATEMENTS[name](n, rng, report)
    return report
