"""Command-line front end: ``srgsep {gen,bounds,solve,classify,table}``.

Exit codes: 0 on success, 2 when a classification is Unresolved (or a
search ends without proof), 1 on error.  ``--json`` prints a versioned run
record instead of the human-readable summary.
"""

from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import logging
import os
import sys
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .bounds import bound_report
from .catalog import params_for
from .classify import Status, Verdict, classify_family, classify_graph, reproduce_table
from .errors import CorruptCacheEntry, SrgSepError
from .families import DEFAULT_MAX_NU, FamilySpec, generate
from .families.spec import coerce_param
from .graph import DenseGraph, SrgParams, verify_srg
from .solver import Budget, SolveStatus, max_clique, max_coclique

SCHEMA = "srg-separator/1"
CACHE_ENV = "SRGSEP_CACHE_DIR"

log = logging.getLogger("srgsep")

EXIT_OK, EXIT_ERROR, EXIT_UNRESOLVED = 0, 1, 2


# ---------------------------------------------------------------------------
# run records and cache

@dataclass
class RunRecord:
    command: str
    spec: str | None = None
    input_file: str | None = None
    params: list[int] | None = None
    verdict: dict | None = None
    bounds: dict | None = None
    solver: list[dict] = field(default_factory=list)
    result: dict = field(default_factory=dict)
    budget: dict | None = None
    version: str = __version__
    timestamp: str = ""
    schema: str = SCHEMA

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> RunRecord:
        if d.get("schema") != SCHEMA:
            raise CorruptCacheEntry(f"unexpected schema {d.get('schema')!r}")
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = set(d) - names
        if unknown:
            raise CorruptCacheEntry(f"unexpected fields {sorted(unknown)}")
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> RunRecord:
        try:
            d = json.loads(text)
        except json.JSONDecodeError as e:
            raise CorruptCacheEntry(f"not JSON: {e}") from e
        if not isinstance(d, dict):
            raise CorruptCacheEntry("record must be a JSON object")
        return cls.from_dict(d)


def cache_key(kind: str, ident: dict) -> str:
    """Stable key from the input identity and the tool's major version."""
    major = __version__.split(".")[0]
    blob = json.dumps({"kind": kind, "id": ident, "major": major}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()[:24]


class ResultCache:
    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)

    def _path(self, key: str) -> Path:
        return self.root / f"{key}.json"

    def get(self, key: str, budget: dict) -> RunRecord | None:
        path = self._path(key)
        if not path.exists():
            return None
        try:
            rec = RunRecord.from_json(path.read_text())
        except CorruptCacheEntry as e:
            log.warning("ignoring corrupt cache entry %s: %s", path, e)
            return None
        if not _is_final(rec) and rec.budget != budget:
            return None  # an unproven result may improve with a different budget
        return rec

    def put(self, key: str, rec: RunRecord) -> None:
        self.root.mkdir(parents=True, exist_ok=True)
        tmp = self._path(key).with_suffix(".tmp")
        tmp.write_text(rec.to_json())
        tmp.replace(self._path(key))


def _is_final(rec: RunRecord) -> bool:
    if rec.verdict is not None and rec.verdict.get("reason") == "BudgetExhausted":
        return False
    return all(s.get("status") != SolveStatus.LowerBoundOnly.value for s in rec.solver)


# ---------------------------------------------------------------------------
# argument handling

SPEC_FLAGS = ("n", "q", "p", "e", "t", "m", "epsilon", "polar_type", "dual", "row")


def _add_spec_flags(ap: argparse.ArgumentParser) -> None:
    g = ap.add_argument_group("family selection")
    g.add_argument("--family", help="family name, e.g. paley, vls, polar, no, bvls, row")
    for name in ("n", "q", "p", "e", "t", "m"):
        g.add_argument(f"--{name}", type=int)
    g.add_argument("--epsilon", help="+1 or -1 (also + / -)")
    g.add_argument("--polar-type", dest="polar_type", choices=("W", "Q", "Qplus", "Qminus", "H"))
    g.add_argument("--dual", action="store_true", help="dual polar space (rank 2 only)")
    g.add_argument("--row", type=int, help="sporadic table row (with --family row)")


def _add_budget_flags(ap: argparse.ArgumentParser) -> None:
    g = ap.add_argument_group("search budget")
    g.add_argument("--max-nodes", type=int, default=10**8)
    g.add_argument("--max-time", type=float, default=600.0, help="seconds")
    g.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    g.add_argument("--seed", type=int, default=0)


def _common(ap: argparse.ArgumentParser) -> None:
    ap.add_argument("--json", action="store_true", help="print a JSON run record")


def _spec_from_args(args) -> FamilySpec | None:
    if not args.family:
        return None
    kw = {}
    for name in SPEC_FLAGS:
        val = getattr(args, name, None)
        if val is None or val is False:
            continue
        key = "table_row" if name == "row" else name
        kw[key] = coerce_param(key, val)
    return FamilySpec.make(args.family, **kw)


def _budget(args) -> Budget:
    return Budget(args.max_nodes, args.max_time, args.threads, args.seed)


def _budget_dict(b: Budget) -> dict:
    return {"max_nodes": b.max_nodes, "max_time": b.max_time, "seed": b.seed}


def _load_graph(args):
    """Graph, hint and identity from --file or the family flags."""
    if getattr(args, "file", None):
        g = DenseGraph.from_dimacs(args.file)
        return g, None, None, {"file_checksum": g.checksum()}
    spec = _spec_from_args(args)
    if spec is None:
        raise SystemExit("give --family (with parameters) or --file")
    g, hint = generate(spec, max_nu=getattr(args, "max_nu", DEFAULT_MAX_NU))
    return g, hint, spec, {"spec": str(spec)}


def _stamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


# ---------------------------------------------------------------------------
# commands

def cmd_gen(args) -> int:
    spec = _spec_from_args(args)
    if spec is None:
        raise SystemExit("gen needs --family")
    gen = generate(spec, max_nu=args.max_nu)
    g = gen.graph
    params = verify_srg(g)
    meta = {
        "schema": SCHEMA,
        "spec": str(spec),
        "params": list(params.astuple()),
        "vertices": g.nu,
        "edges": g.edge_count,
        "checksum": g.checksum(),
        "vertex_order": gen.order,
        "hints": gen.hint.as_dict(),
    }
    if args.out:
        out = Path(args.out)
        if args.format == "dimacs":
            g.to_dimacs(out, comment=f"{spec}\nparameters {params}")
            Path(str(out) + ".meta.json").write_text(json.dumps(meta, indent=2))
        else:
            doc = dict(meta, edge_list=[list(e) for e in g.edges()])
            out.write_text(json.dumps(doc))
        meta["path"] = str(out)
    elif args.format == "dimacs" and not args.json:
        sys.stdout.write(g.to_dimacs(comment=f"{spec}\nparameters {params}"))
        return EXIT_OK
    rec = RunRecord("gen", str(spec), None, list(params.astuple()), result=meta, timestamp=_stamp())
    if args.json:
        print(rec.to_json())
    else:
        print(f"{spec}: {g.nu} vertices, {g.edge_count} edges, parameters {params}, checksum {g.checksum()}")
        if args.out:
            print(f"written to {args.out}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    spec = None
    if args.nu is not None:
        p = SrgParams(args.nu, args.k, args.lam, args.mu)
    elif args.file:
        p = verify_srg(DenseGraph.from_dimacs(args.file))
    else:
        spec = _spec_from_args(args)
        if spec is None:
            raise SystemExit("bounds needs --nu/--k/--lambda/--mu, --file or --family")
        p = params_for(spec)
    rep = bound_report(p)
    rec = RunRecord("bounds", str(spec) if spec else None, args.file, list(p.astuple()),
                    bounds=rep.as_dict(), timestamp=_stamp())
    if args.json:
        print(rec.to_json())
    else:
        print(f"parameters {p}")
        print(f"  eigenvalues r = {rep.r}, s = {rep.s}")
        print(f"  delsarte (clique) bound  {rep.delsarte}")
        print(f"  hoffman (coclique) bound {rep.hoffman}")
    return EXIT_OK


def _spectral_cap(g: DenseGraph, mode: str, cap_arg: str) -> int | None:
    if cap_arg == "none":
        return None
    if cap_arg != "auto":
        return int(cap_arg)
    try:
        rep = bound_report(verify_srg(g))
    except SrgSepError:
        return None
    # only an integral bound certifies optimality when it is reached
    if mode == "clique":
        return rep.clique_target if rep.delsarte_integral else None
    return rep.coclique_target if rep.hoffman_integral else None


def cmd_solve(args) -> int:
    g, hint, spec, ident = _load_graph(args)
    budget = _budget(args)
    cap = _spectral_cap(g, args.mode, args.cap)
    solve = max_clique if args.mode == "clique" else max_coclique
    res = solve(g, cap, budget)
    if args.witness_out:
        Path(args.witness_out).write_text(" ".join(map(str, res.witness)) + "\n")
    rec = RunRecord("solve", str(spec) if spec else None, args.file, None,
                    solver=[res.as_dict()], result={"spectral_cap": cap, **ident},
                    budget=_budget_dict(budget), timestamp=_stamp())
    if args.json:
        print(rec.to_json())
    else:
        print(f"{args.mode} number {'>=' if res.status is SolveStatus.LowerBoundOnly else '='} {res.value} "
              f"({res.status.value}; cap {cap}; {res.nodes_explored} nodes; {res.elapsed:.2f}s)")
        print("witness:", " ".join(map(str, res.witness)))
    return EXIT_UNRESOLVED if res.status is SolveStatus.LowerBoundOnly else EXIT_OK


def cmd_classify(args) -> int:
    budget = _budget(args)
    spec = _spec_from_args(args)
    if spec is not None:
        ident = {"family": spec.family.value, "params": spec.params()}
    elif args.file:
        ident = {"file_checksum": DenseGraph.from_dimacs(args.file).checksum()}
    else:
        raise SystemExit("classify needs --family or --file")
    cache_dir = args.cache_dir or os.environ.get(CACHE_ENV)
    cache = ResultCache(cache_dir) if cache_dir else None
    key = cache_key("classify", ident)
    rec = cache.get(key, _budget_dict(budget)) if cache else None
    if rec is not None:
        print(f"(served from cache {cache.root})", file=sys.stderr)
    else:
        t0 = time.monotonic()
        if spec is not None:
            v = classify_family(spec, budget)
        else:
            v = classify_graph(DenseGraph.from_dimacs(args.file), budget)
        rep = bound_report(v.params) if v.params else None
        rec = RunRecord(
            "classify", str(spec) if spec else None, args.file,
            list(v.params.astuple()) if v.params else None,
            verdict=v.as_dict(), bounds=rep.as_dict() if rep else None,
            result={"elapsed": round(time.monotonic() - t0, 3), **ident},
            budget=_budget_dict(budget), timestamp=_stamp(),
        )
        if cache:
            cache.put(key, rec)
    v = Verdict.from_dict(rec.verdict)
    if args.json:
        print(rec.to_json())
    else:
        print(f"{rec.spec or rec.input_file}: {v.status.value} ({v.reason.value})")
        print(f"  {v.provenance}")
        if v.witnesses:
            c, a = v.witnesses
            print(f"  witnesses: clique {len(c)} x coclique {len(a)} = {len(c) * len(a)}")
        for note in v.notes:
            print(f"  note: {note}")
    return EXIT_UNRESOLVED if v.status is Status.Unresolved else EXIT_OK


def cmd_table(args) -> int:
    rep = reproduce_table(args.which, _budget(args))
    if args.json:
        rec = RunRecord("table", result=rep.as_dict(), budget=_budget_dict(_budget(args)), timestamp=_stamp())
        print(rec.to_json())
        return EXIT_OK
    cols = [c for c in ("row_id", "params", "delsarte", "hoffman", "omega", "alpha", "expected",
                        "verdict", "reason", "omega_status", "alpha_status", "match") if c in rep.rows[0]]
    print("  ".join(cols))
    for row in rep.rows:
        print("  ".join(str(row.get(c)) for c in cols))
    print(f"{rep.which}: {len(rep.rows)} rows, {len(rep.mismatches)} mismatches")
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="srgsep", description="Clique/coclique separation of strongly regular graphs")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a family graph as DIMACS or JSON")
    _add_spec_flags(p)
    p.add_argument("--out", help="output path (stdout if omitted)")
    p.add_argument("--format", choices=("dimacs", "json"), default="dimacs")
    p.add_argument("--max-nu", type=int, default=DEFAULT_MAX_NU)
    _common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bounds", help="eigenvalues and spectral bounds")
    p.add_argument("--nu", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--lambda", dest="lam", type=int)
    p.add_argument("--mu", type=int)
    p.add_argument("--file", help="DIMACS graph")
    _add_spec_flags(p)
    _common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("solve", help="maximum clique or coclique")
    p.add_argument("--file", help="DIMACS graph")
    p.add_argument("--mode", choices=("clique", "coclique"), default="clique")
    p.add_argument("--cap", default="auto", help="spectral cap: auto (the bound when integral), none, or an integer")
    p.add_argument("--witness-out", help="write the witness as a sorted index list")
    p.add_argument("--max-nu", type=int, default=DEFAULT_MAX_NU)
    _add_spec_flags(p)
    _add_budget_flags(p)
    _common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("classify", help="separating / non-separating verdict")
    p.add_argument("--file", help="DIMACS graph")
    p.add_argument("--cache-dir", help=f"result cache directory (default ${CACHE_ENV})")
    _add_spec_flags(p)
    _add_budget_flags(p)
    _common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", help="reproduce a table")
    p.add_argument("--which", choices=("1", "2", "5", "6"), required=True)
    _add_budget_flags(p)
    _common(p)
    p.set_defaults(func=cmd_table)
    return ap


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SrgSepError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
