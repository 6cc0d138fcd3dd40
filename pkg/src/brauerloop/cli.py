"""Command line entry point: tables, degrees, verification suites.

Three subcommands:

* ``table``   computes the multidegree table for one size and persists
  it as JSON with a content hash; an existing file with a different
  hash is only overwritten under ``--force``.
* ``degrees`` prints exact degree numbers: the pattern-sum against the
  closed determinant form (scheme E), the two closed forms for the
  doubled scheme at a seeded sample point (scheme D1), or the commuting
  degree sequence.
* ``verify``  runs a named check suite (or ``all``) and reports one
  line per check, sorted by check id; the exit status is 0 iff every
  check passed.

Reports are byte-stable for fixed inputs and seed: all randomness is
derived from the seed, and timing goes to stderr, never into the
report itself.  Failures never escape as tracebacks; each becomes a
failed check whose witness carries the offending instance.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable, Sequence

from . import commvar, escheme, loopchain, pfdet, psitable
from .circlealg import ExactMatrix, cp_inv, cp_mul, cycle, s_mul, s_scale, strip_embed
from .errors import BrauerLoopError, IdentityViolation
from .exactpoly import Rational
from .linkpat import LinkPattern, enumerate_patterns
from .psitable import MdegTable, compute_table

TABLE_LIMIT = 8
SYMBOLIC_LIMIT = 6  # larger sizes fall back to the stationary chain for z=0 values


def _slug(pi: LinkPattern) -> str:
    return "".join(str(pi).split())


def _int_seed(seed: int, label: str) -> int:
    digest = hashlib.sha256(f"{seed}:{label}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def _rng(seed: int, label: str) -> random.Random:
    return random.Random(_int_seed(seed, label))


# ------------------------------------------------------------------ persistence


class TableStore:
    """Per-size table cache, optionally backed by a directory of JSON files."""

    def __init__(self, directory: Path | None):
        self.directory = directory
        self._cache: dict[int, MdegTable] = {}

    def path(self, n: int) -> Path:
        if self.directory is None:
            raise ValueError("no table directory configured")
        return self.directory / f"mdeg-{n}.json"

    def load(self, n: int) -> MdegTable | None:
        """A previously persisted table, or None if absent or unusable."""
        if self.directory is None:
            return None
        path = self.path(n)
        if not path.is_file():
            return None
        try:
            obj = json.loads(path.read_text())
            table = MdegTable.from_obj(obj["table"])
            if table.n != n or table.content_hash() != obj["hash"]:
                return None
            table.validate()
        except (BrauerLoopError, KeyError, TypeError, ValueError, OSError):
            return None
        return table

    def get(self, n: int) -> MdegTable:
        if n not in self._cache:
            table = self.load(n)
            if table is None:
                table = compute_table(n)
            self._cache[n] = table
        return self._cache[n]


def table_payload(table: MdegTable) -> dict:
    return {"n": table.n, "hash": table.content_hash(), "table": table.to_obj()}


def write_table(table: MdegTable, path: Path, force: bool = False) -> bool:
    """Persist a table; returns False when an identical file already exists."""
    payload = table_payload(table)
    if path.is_file():
        try:
            existing = json.loads(path.read_text())
        except (OSError, ValueError):
            existing = None
        if existing is not None and existing.get("hash") == payload["hash"]:
            return False
        if not force:
            raise SystemExit(
                f"error: {path} holds a different table "
                f"(hash {existing.get('hash') if existing else 'unreadable'}); "
                "pass --force to overwrite")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")
    return True


# ------------------------------------------------------------------ suite plumbing


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    passed: bool
    witness: str = ""
    note: str = ""


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    checks: tuple[CheckResult, ...]
    wall_time: float

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_obj(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [
                {"id": c.check_id, "status": "pass" if c.passed else "fail",
                 **({"witness": c.witness} if c.witness else {}),
                 **({"note": c.note} if c.note else {})}
                for c in self.checks
            ],
        }


Job = tuple[str, Callable[[], str | None]]


def run_suite(suite: str, jobs: Iterable[Job]) -> SuiteReport:
    start = time.perf_counter()
    results = []
    for check_id, fn in sorted(jobs, key=lambda j: j[0]):
        try:
            note = fn()
            results.append(CheckResult(check_id, True, note=note or ""))
        except Exception as exc:
            results.append(CheckResult(check_id, False,
                                       witness=f"{type(exc).__name__}: {exc}"))
    return SuiteReport(suite, tuple(results), time.perf_counter() - start)


# ------------------------------------------------------------------ algebra suite


def _random_entry(rng: random.Random) -> Rational:
    kind = rng.randrange(6)
    if kind == 0:
        return Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    if kind <= 2:
        return 0
    return rng.randint(-4, 4)


def _random_matrix(n: int, rng: random.Random) -> ExactMatrix:
    return ExactMatrix([[_random_entry(rng) for _ in range(n)] for _ in range(n)])


def _check_assoc(n: int, rng: random.Random, count: int) -> str:
    for k in range(count):
        p, q, r = (_random_matrix(n, rng) for _ in range(3))
        if cp_mul(cp_mul(p, q), r) != cp_mul(p, cp_mul(q, r)):
            raise IdentityViolation(f"instance {k}: P={p!r}, Q={q!r}, R={r!r}")
    return f"{count} instances"


def _check_inverse(n: int, rng: random.Random, count: int) -> str:
    ident = ExactMatrix.identity(n)
    for k in range(count):
        p = escheme.random_conjugator(n, rng)
        unit_diag = k % 2 == 0
        if not unit_diag:
            d = [rng.choice((-3, -2, -1, 1, 2, 3)) for _ in range(n)]
            rows = [[d[i] if i == j else p.rows[i][j] for j in range(n)]
                    for i in range(n)]
            p = ExactMatrix(rows)
        q = cp_inv(p)
        if cp_mul(p, q) != ident or cp_mul(q, p) != ident:
            raise IdentityViolation(f"instance {k}: P={p!r}")
        if unit_diag and any(not isinstance(x, int) for row in q.rows for x in row):
            raise IdentityViolation(f"instance {k}: non-integer inverse for P={p!r}")
    return f"{count} instances"


def _check_strip(n: int, rng: random.Random, count: int) -> str:
    for k in range(count):
        p, q = _random_matrix(n, rng), _random_matrix(n, rng)
        sp, sq = strip_embed(p), strip_embed(q)
        product = strip_embed(cp_mul(p, q))
        for i in range(1, 2 * n + 1):
            for d in range(n):
                if sp.band_product_entry(sq, i, i + d) != product.entry(i, i + d):
                    raise IdentityViolation(
                        f"instance {k} at ({i}, {i + d}): P={p!r}, Q={q!r}")
    return f"{count} instances"


def _check_sfamily(n: int, rng: random.Random, count: int) -> str:
    for k in range(count):
        p, q = _random_matrix(n, rng), _random_matrix(n, rng)
        if s_mul(p, q, 0) != cp_mul(p, q):
            raise IdentityViolation(f"instance {k}, s=0: P={p!r}, Q={q!r}")
        if s_mul(p, q, 1) != p @ q:
            raise IdentityViolation(f"instance {k}, s=1: P={p!r}, Q={q!r}")
        s = Fraction(rng.choice((-3, -2, -1, 1, 2, 3)), rng.randint(1, 3))
        if s_scale(p, s) @ s_scale(q, s) != s_scale(s_mul(p, q, s), s):
            raise IdentityViolation(f"instance {k}, s={s}: P={p!r}, Q={q!r}")
    return f"{count} instances"


def _check_cycling(n: int, rng: random.Random, count: int) -> str:
    for k in range(count):
        p, q = _random_matrix(n, rng), _random_matrix(n, rng)
        shift = rng.randrange(n)
        if cycle(cp_mul(p, q), shift) != cp_mul(cycle(p, shift), cycle(q, shift)):
            raise IdentityViolation(
                f"instance {k}, shift {shift}: P={p!r}, Q={q!r}")
        if cycle(p, n) != p:
            raise IdentityViolation(f"instance {k}: full cycle moved P={p!r}")
    return f"{count} instances"


def _check_semidirect(n: int, rng: random.Random, count: int) -> str:
    from .circlealg import from_semidirect, semidirect_mul, to_semidirect

    for k in range(count):
        p, q = _random_matrix(n, rng), _random_matrix(n, rng)
        r, low = semidirect_mul(to_semidirect(p), to_semidirect(q))
        if from_semidirect(r, low) != cp_mul(p, q):
            raise IdentityViolation(f"instance {k}: P={p!r}, Q={q!r}")
    return f"{count} instances"


_ALGEBRA_CHECKS = {
    "assoc": _check_assoc,
    "cycling": _check_cycling,
    "inverse": _check_inverse,
    "semidirect": _check_semidirect,
    "sfamily": _check_sfamily,
    "strip": _check_strip,
}


def algebra_jobs(ns: Sequence[int], seed: int, count: int) -> list[Job]:
    jobs: list[Job] = []
    for n in ns:
        for name, fn in _ALGEBRA_CHECKS.items():
            jobs.append((
                f"algebra/{name}/N{n}",
                lambda fn=fn, n=n, name=name: fn(n, _rng(seed, f"{name}/{n}"), count),
            ))
    return jobs


# ------------------------------------------------------------------ geometry suite


def _check_samples(pi: LinkPattern, rng: random.Random, count: int) -> str:
    for k in range(count):
        sp = escheme.random_sample(pi, rng)
        m = sp.matrix
        if not escheme.is_in_E(m):
            raise IdentityViolation(f"sample {k} left the scheme: {sp.to_obj()}")
        found = escheme.identify_pattern(m)
        if found != pi:
            raise IdentityViolation(
                f"sample {k} identified as {found}, not {pi}: {sp.to_obj()}")
        if not escheme.check_rank_bounds(m, pi):
            raise IdentityViolation(f"sample {k} breaks a rank bound: {sp.to_obj()}")
    return f"{count} samples"


def _check_tangent(pi: LinkPattern, rng: random.Random) -> str:
    n = pi.n
    sp = escheme.random_sample(pi, rng)
    dim = escheme.tangent_dimension(sp.matrix)
    want = n * n // 2
    if dim != want:
        raise IdentityViolation(
            f"tangent dimension {dim}, want {want}: {sp.to_obj()}")
    return f"dimension {dim}"


def _check_stabilizer(pi: LinkPattern, rng: random.Random) -> str:
    n = pi.n
    half, odd = n // 2, n % 2
    t = escheme.random_t(pi, rng)
    codim = escheme.stabilizer_codim(pi, t)
    want = 2 * half * (half + odd - 1)
    if codim != want:
        raise IdentityViolation(f"stabilizer codimension {codim}, want {want}, t={t}")
    return f"codimension {codim}"


def geometry_jobs(ns: Sequence[int], seed: int, samples: int) -> list[Job]:
    jobs: list[Job] = []
    for n in ns:
        for pi in enumerate_patterns(n):
            tag = f"geometry/N{n}/{_slug(pi)}"
            label = f"geo/{n}/{pi.pairing}"
            jobs.append((f"{tag}/samples",
                         lambda pi=pi, label=label: _check_samples(
                             pi, _rng(seed, label), samples)))
            jobs.append((f"{tag}/tangent",
                         lambda pi=pi, label=label: _check_tangent(
                             pi, _rng(seed, label + "/t"))))
            jobs.append((f"{tag}/stabilizer",
                         lambda pi=pi, label=label: _check_stabilizer(
                             pi, _rng(seed, label + "/s"))))
    return jobs


# ------------------------------------------------------------------ table suites


def exchange_jobs(ns: Sequence[int], store: TableStore) -> list[Job]:
    return [(f"exchange/N{n}",
             lambda n=n: f"{psitable.verify_exchange(store.get(n))['identities']}"
                         " identities")
            for n in ns]


def sumrule_jobs(ns: Sequence[int], seed: int, points: int,
                 store: TableStore) -> list[Job]:
    jobs: list[Job] = []
    for n in ns:
        if n % 2 == 0:
            jobs.append((f"sumrules/sector/N{n}",
                         lambda n=n: f"{psitable.sum_rule_sector(store.get(n))['patterns']}"
                                     " sector patterns"))
        jobs.append((f"sumrules/total/N{n}",
                     lambda n=n: _note_total(store.get(n), points,
                                             _int_seed(seed, f"total/{n}"))))
    return jobs


def _note_total(table: MdegTable, points: int, seed: int) -> str:
    result = psitable.sum_rule_total(table, points=points, seed=seed)
    return f"degree sum {result['degree_sum']}, {result['points']} points"


def markov_jobs(ns: Sequence[int], store: TableStore) -> list[Job]:
    def check(n: int) -> str:
        sol = loopchain.stationary(n)
        loopchain.match_psi(store.get(n), sol)
        return f"{len(sol.normalized)} patterns"

    return [(f"markov/N{n}", lambda n=n: check(n)) for n in ns]


def d1_jobs(ns: Sequence[int], seed: int, points: int,
            store: TableStore) -> list[Job]:
    return [(f"d1/N{n}",
             lambda n=n: f"{pfdet.d0_multiplicity_check(store.get(n), points=points, seed=_int_seed(seed, f'd1/{n}'))['points']}"
                         " points")
            for n in ns]


def commuting_jobs(max_n: int, store: TableStore) -> list[Job]:
    jobs: list[Job] = [
        ("commuting/sequence",
         lambda: " ".join(str(d) for d in commvar.degree_sequence(max_n))),
    ]

    def check_alt(k: int) -> str:
        primary = commvar.delta(k)
        alt = commvar.delta_alt_order(k)
        spec = alt.delta
        for i in range(2, k + 1):
            spec = spec.subs_z(i, 0)
        if spec != primary.delta or alt.degree != primary.degree:
            raise IdentityViolation(f"operator orderings disagree at n={k}")
        return f"degree {primary.degree}"

    for k in range(1, min(max_n, 4) + 1):
        jobs.append((f"commuting/alt/n{k}", lambda k=k: check_alt(k)))
    for k in range(1, min(max_n, 3) + 1):
        jobs.append((
            f"commuting/table/N{2 * k}",
            lambda k=k: f"degree {commvar.crosscheck_with_table(store.get(2 * k))['degree']}",
        ))
    return jobs


# ------------------------------------------------------------------ orchestration


SUITES = ("algebra", "geometry", "exchange", "sumrules", "markov", "d1", "commuting")


def _span(args, lo: int, hi: int) -> list[int]:
    if args.n is not None:
        if not lo <= args.n <= hi:
            raise SystemExit(f"error: --n must lie in {lo}..{hi} for this suite")
        return [args.n]
    top = min(hi, args.max_n) if args.max_n is not None else hi
    return list(range(lo, top + 1))


def suite_jobs(suite: str, args, store: TableStore) -> list[Job]:
    seed = args.seed
    if suite == "algebra":
        return algebra_jobs(_span(args, 2, 8), seed, args.points or 1000)
    if suite == "geometry":
        return geometry_jobs(_span(args, 3, 6), seed, args.points or 200)
    if suite == "exchange":
        return exchange_jobs(_span(args, 2, 6), store)
    if suite == "sumrules":
        return sumrule_jobs(_span(args, 2, 6), seed, args.points or 20, store)
    if suite == "markov":
        return markov_jobs(_span(args, 2, 6), store)
    if suite == "d1":
        return d1_jobs(_span(args, 2, 6), seed, args.points or 20, store)
    if suite == "commuting":
        max_n = args.n if args.n is not None else (args.max_n or 6)
        return commuting_jobs(max_n, store)
    raise SystemExit(f"error: unknown suite {suite!r}")


def print_report(report: SuiteReport, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report.to_obj(), indent=2, sort_keys=True))
    else:
        for c in report.checks:
            line = f"{'PASS' if c.passed else 'FAIL'} {c.check_id}"
            if c.note:
                line += f" [{c.note}]"
            if c.witness:
                line += f" :: {c.witness}"
            print(line)
        good = sum(1 for c in report.checks if c.passed)
        print(f"suite {report.suite}: {good}/{len(report.checks)} checks passed")
    print(f"suite {report.suite} took {report.wall_time:.1f}s", file=sys.stderr)


# ------------------------------------------------------------------ subcommands


def _store(args) -> TableStore:
    return TableStore(Path(args.table_dir))


def cmd_table(args) -> int:
    if not 2 <= args.n <= TABLE_LIMIT:
        raise SystemExit(f"error: --n must lie in 2..{TABLE_LIMIT}")
    store = _store(args)
    table = store.get(args.n)
    path = Path(args.out) if args.out else store.path(args.n)
    wrote = write_table(table, path, force=args.force)
    degrees = {str(pi): table.degree(pi) for pi in table.patterns()}
    if args.format == "json":
        print(json.dumps({"n": table.n, "patterns": len(degrees),
                          "degrees": degrees, "hash": table.content_hash(),
                          "path": str(path), "wrote": wrote},
                         indent=2, sort_keys=True))
    else:
        print(f"table N={table.n}: {len(degrees)} patterns")
        for name in sorted(degrees):
            print(f"  {name}  {degrees[name]}")
        print(f"hash {table.content_hash()}")
        print(f"{'wrote' if wrote else 'kept'} {path}")
    return 0


def cmd_degrees(args) -> int:
    store = _store(args)
    if args.scheme == "commuting":
        top = args.max_n or args.n
        if top is None:
            raise SystemExit("error: --scheme commuting needs --n or --max-n")
        seq = commvar.degree_sequence(top)
        if args.format == "json":
            print(json.dumps({"scheme": "commuting", "degrees": seq}))
        else:
            print(" ".join(str(d) for d in seq))
        return 0
    if args.scheme == "E":
        ns = [args.n] if args.n is not None else list(range(2, (args.max_n or 6) + 1))
        rows = []
        for n in ns:
            det = pfdet.degree_determinant(n)
            if n <= SYMBOLIC_LIMIT:
                total, source = store.get(n).degree_sum(), "table"
            else:
                sol = loopchain.stationary(n)
                total, source = sum(sol.normalized.values()), "chain"
            rows.append({"n": n, "determinant": det, "sum": total, "source": source})
        if args.format == "json":
            print(json.dumps({"scheme": "E", "results": rows}, sort_keys=True))
        else:
            for row in rows:
                print(f"E N={row['n']}: determinant {row['determinant']}, "
                      f"{row['source']} sum {row['sum']}")
        return 0 if all(r["determinant"] == r["sum"] for r in rows) else 1
    # scheme D1: both closed forms at one admissible seeded point
    if args.n is None:
        raise SystemExit("error: --scheme D1 needs --n")
    n = args.n
    rng = _rng(args.seed, f"d1point/{n}")
    a, z = psitable.random_point(n, rng)
    local = pfdet.d1_mdeg_localization(n, a, z)
    pf = pfdet.d1_mdeg_pfaffian_form(n, a, z)
    if args.format == "json":
        print(json.dumps({
            "scheme": "D1", "n": n, "a": str(a), "z": [str(v) for v in z],
            "localization": str(local), "pfaffian_form": str(pf),
        }, sort_keys=True))
    else:
        print(f"D1 N={n} at A={a}, z={[str(v) for v in z]}")
        print(f"  localization form  {local}")
        print(f"  pfaffian form      {pf}")
    return 0 if local == pf else 1


def cmd_verify(args) -> int:
    store = _store(args)
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for suite in suites:
        report = run_suite(suite, suite_jobs(suite, args, store))
        print_report(report, args.format)
        ok = ok and report.passed
    return 0 if ok else 1


# ------------------------------------------------------------------ entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="single size")
    common.add_argument("--max-n", type=int, default=None, dest="max_n",
                        help="size range upper bound")
    common.add_argument("--seed", type=int, default=0, help="master random seed")
    common.add_argument("--points", type=int, default=None,
                        help="instances / sample points per check")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--table-dir", dest="table_dir",
                        default=os.environ.get("BRAUERLOOP_TABLE_DIR", "tables"),
                        help="table persistence directory")

    parser = argparse.ArgumentParser(
        prog="brauerloop",
        description="Exact degree tables and checks for the circular-product loop scheme.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", parents=[common],
                             help="compute and persist a multidegree table")
    p_table.add_argument("--out", default=None, help="explicit output path")
    p_table.add_argument("--force", action="store_true",
                         help="overwrite a file holding a different table")
    p_table.set_defaults(fn=cmd_table)

    p_deg = sub.add_parser("degrees", parents=[common],
                           help="print exact degrees from the closed forms")
    p_deg.add_argument("--scheme", choices=("E", "D1", "commuting"), required=True)
    p_deg.set_defaults(fn=cmd_degrees)

    p_ver = sub.add_parser("verify", parents=[common],
                           help="run a verification suite")
    p_ver.add_argument("suite", choices=SUITES + ("all",))
    p_ver.set_defaults(fn=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "table" and args.n is None:
        raise SystemExit("error: table needs --n")
    try:
        return args.fn(args)
    except BrauerLoopError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
