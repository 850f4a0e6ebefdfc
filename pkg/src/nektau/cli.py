"""Command-line driver: select identities, orders, samples; emit reports.

Subcommands
-----------
list    print the identity catalog (id, status, anchor formula).
verify  run catalog checks and write a deterministic JSON/CSV report.
        Exit code 0 iff every theorem-status check passed, 1 on a theorem
        failure, 2 on a configuration error.  Conjecture-status outcomes
        are recorded in the report but never affect the exit code.
dump    print an exact truncated series (tau function, partition function,
        or closed-form fixture) as JSON.  Byte-identical across runs with
        the same arguments; a higher-order dump extends a lower-order one
        per sector.
oracle  run the two-route coefficient recursion cross-check.

Determinism: the seed fully determines the sample sequence; timing data is
quarantined in a separate report section so residual sections are diffable.
Environment overrides: NEKTAU_SEED (seed), NEKTAU_WORKERS (thread count for
verify; default 1, sequential).
"""

from __future__ import annotations

import argparse
import concurrent.futures
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction as Frac

from . import identities as idmod
from .nekrasov import Theory4d, Theory5d, inst_series_4d, inst_series_5d
from .qseries import algebraic_fixture
from .tau import TauSystem4d, TauSystemQ, build_tau

SCHEMA_VERSION = 1

# ids accepted by `verify`: the catalog plus the assembled m=1 chain check
_EXTRA_IDS = {"m1chain": "q-painleve"}


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    identities: list = field(default_factory=list)
    order: Frac | None = None
    samples: int = 1
    seed: int = 0
    report: str | None = None
    format: str = "json"
    fail_fast: bool = False
    corrupt: Frac | None = None  # debug: perturb one coefficient at this exponent
    workers: int = 1

    def to_dict(self):
        return {
            "identities": list(self.identities),
            "order": None if self.order is None
            else [self.order.numerator, self.order.denominator],
            "samples": self.samples,
            "seed": self.seed,
            "format": self.format,
            "fail_fast": self.fail_fast,
            "corrupt": None if self.corrupt is None
            else [self.corrupt.numerator, self.corrupt.denominator],
        }


def _parse_order(text: str) -> Frac:
    try:
        v = Frac(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad order {text!r}: {exc}") from exc
    if v <= 0:
        raise ConfigError(f"order must be positive, got {text!r}")
    return v


def _known_ids():
    return list(idmod.CATALOG) + list(_EXTRA_IDS)


def _domain_of(id: str) -> str:
    if id in idmod.CATALOG:
        return idmod.CATALOG[id].domain
    return _EXTRA_IDS[id]


def build_config(args, known=None) -> RunConfig:
    """Merge config file, flags, and env overrides; reject unknown ids."""
    data = {}
    if getattr(args, "config", None):
        try:
            with open(args.config) as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config file: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config file must hold a JSON object")
    cfg = RunConfig()
    ids = data.get("identities", "all")
    if args.id:
        ids = args.id
    if ids == "all" or ids == ["all"]:
        ids = _known_ids()
    if isinstance(ids, str):
        ids = [ids]
    known = set(_known_ids()) if known is None else known
    unknown = [i for i in ids if i not in known]
    if unknown:
        raise ConfigError(f"unknown identity id(s): {', '.join(unknown)}")
    cfg.identities = list(ids)
    order = data.get("order")
    if args.order is not None:
        order = args.order
    if order is not None:
        if isinstance(order, list):
            order = f"{order[0]}/{order[1]}"
        cfg.order = _parse_order(str(order))
    cfg.samples = int(args.samples if args.samples is not None
                      else data.get("samples", 1))
    if cfg.samples < 1:
        raise ConfigError("--samples must be >= 1")
    seed = args.seed if args.seed is not None else data.get("seed", 0)
    if os.environ.get("NEKTAU_SEED"):
        seed = os.environ["NEKTAU_SEED"]
    try:
        cfg.seed = int(seed)
    except ValueError as exc:
        raise ConfigError(f"bad seed {seed!r}") from exc
    cfg.report = args.report if args.report else data.get("report")
    fmt = args.format if args.format else data.get("format", "json")
    if fmt not in ("json", "csv"):
        raise ConfigError(f"unknown report format {fmt!r}")
    cfg.format = fmt
    cfg.fail_fast = bool(args.fail_fast or data.get("failFast", False))
    if getattr(args, "corrupt_coefficient", None) is not None:
        cfg.corrupt = _parse_order(args.corrupt_coefficient)
    workers = os.environ.get("NEKTAU_WORKERS", "1")
    try:
        cfg.workers = max(1, int(workers))
    except ValueError as exc:
        raise ConfigError(f"bad NEKTAU_WORKERS {workers!r}") from exc
    return cfg


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _run_one(id: str, sample, order):
    if id == "m1chain":
        return idmod.m1_identity_check(sample=sample, E=order or Frac(2))
    return idmod.verify(id, sample=sample, E=order)


def run_verify(cfg: RunConfig):
    """Execute the configured checks; returns (exit_code, report_dict)."""
    jobs = []
    for id in cfg.identities:
        domain = _domain_of(id)
        samples = idmod.default_samples(domain, cfg.samples, seed=cfg.seed)
        for k, sample in enumerate(samples):
            jobs.append((id, k, sample))

    def work(job):
        id, k, sample = job
        if cfg.corrupt is not None:
            with idmod.mutation(cfg.corrupt):
                return _run_one(id, sample, cfg.order)
        return _run_one(id, sample, cfg.order)

    results = [None] * len(jobs)
    if cfg.workers > 1 and not cfg.fail_fast:
        with concurrent.futures.ThreadPoolExecutor(cfg.workers) as pool:
            for i, rep in enumerate(pool.map(work, jobs)):
                results[i] = rep
    else:
        for i, job in enumerate(jobs):
            results[i] = work(job)
            rep = results[i]
            if cfg.fail_fast and rep.status == "theorem" and not rep.ok:
                results = results[: i + 1]
                jobs = jobs[: i + 1]
                break

    theorem_fail = any(
        r.status in ("theorem", "derived") and not r.ok for r in results
    )
    report = {
        "schema_version": SCHEMA_VERSION,
        "config": cfg.to_dict(),
        "results": [
            dict(r.to_dict(), sample_index=jobs[i][1])
            for i, r in enumerate(results)
        ],
        "timing": {
            "elapsed_seconds": {
                f"{jobs[i][0]}#{jobs[i][1]}": results[i].elapsed
                for i in range(len(results))
            }
        },
    }
    return (1 if theorem_fail else 0), report, results


def _report_csv(report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["id", "status", "sample_index", "order_num", "order_den",
                "ok", "failed_parts", "note"])
    for r in report["results"]:
        failed = ";".join(p["name"] for p in r["parts"] if not p["ok"])
        w.writerow([r["id"], r["status"], r["sample_index"],
                    r["order"][0], r["order"][1],
                    int(r["ok"]), failed, r["note"]])
    return buf.getvalue()


def _emit_report(report, cfg: RunConfig):
    if cfg.format == "csv":
        text = _report_csv(report)
    else:
        text = json.dumps(report, indent=2) + "\n"
    if cfg.report:
        with open(cfg.report, "w") as f:
            f.write(text)
    return text


def cmd_verify(args) -> int:
    try:
        cfg = build_config(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    code, report, results = run_verify(cfg)
    _emit_report(report, cfg)
    for r in results:
        print(r.summary())
        if not r.ok:
            for name, part in r.parts:
                if not part.ok:
                    print(f"  {name}: {part.summary()}")
            if r.note:
                print(f"  note: {r.note}")
    n_fail = sum(1 for r in results if not r.ok)
    print(f"{len(results)} check(s), {n_fail} failure(s); exit {code}")
    return code


# ---------------------------------------------------------------------------
# list
# ---------------------------------------------------------------------------


def cmd_list(args) -> int:
    entries = idmod.manifest()
    for e in entries:
        n, d = e["default_order"]
        order = f"{n}" if d == 1 else f"{n}/{d}"
        print(f"{e['id']:<14} {e['status']:<10} order {order:<4} {e['anchor']}")
    print(f"{len(entries)} catalog entries")
    return 0


# ---------------------------------------------------------------------------
# dump
# ---------------------------------------------------------------------------

DUMP_SELECTORS = [
    "tau4d:kiev", "tau4d:plus", "tau4d:minus", "tau4d:long0", "tau4d:long1",
    "tauq:kiev0", "tauq:kiev1", "tauq:plus", "tauq:minus",
    "Z4d", "Z5d",
    "fixture:P3_tau_minus", "fixture:P3_tau_plus_branch", "fixture:P3_taupm",
    "fixture:qP3_tau", "fixture:qP3_taupm",
]


def _resolve_dump(selector: str, order: Frac, seed: int):
    """Build the requested series; returns (sample_descriptor, dump_rows)."""
    if selector.startswith("tau4d:"):
        sigma = idmod.default_samples("4d-tau", 1, seed=seed)[0]
        sys4 = TauSystem4d(sigma)
        spec = {
            "kiev": sys4.kiev, "plus": lambda: sys4.short(+1),
            "minus": lambda: sys4.short(-1), "long0": lambda: sys4.long(0),
            "long1": lambda: sys4.long(1, kappa_sign=-1),
        }[selector.split(":", 1)[1]]()
        fs = build_tau(spec, order)
        return idmod.describe_sample("4d-tau", sigma), fs.dump()
    if selector.startswith("tauq:"):
        smp = idmod.default_samples("q-painleve", 1, seed=seed)[0]
        sysq = TauSystemQ(smp)
        spec = {
            "kiev0": lambda: sysq.kiev(0), "kiev1": lambda: sysq.kiev(1),
            "plus": lambda: sysq.short(+1), "minus": lambda: sysq.short(-1),
        }[selector.split(":", 1)[1]]()
        fs = build_tau(spec, order)
        return idmod.describe_sample("q-painleve", smp), fs.dump()
    if selector == "Z4d":
        e1, e2, a = idmod.default_samples("4d-eps", 1, seed=seed)[0]
        ps = inst_series_4d(Theory4d(e1, e2), a, order)
        return idmod.describe_sample("4d-eps", (e1, e2, a)), ps.dump()
    if selector == "Z5d":
        t, E1, E2, Lu = idmod.default_samples("5d-generic", 1, seed=seed)[0]
        smp = idmod.ParameterSample(t=t, dq=4)
        ps = inst_series_5d(Theory5d(E1, E2), Lu, smp, order)
        return idmod.describe_sample("5d-generic", (t, E1, E2, Lu)), ps.dump()
    if selector.startswith("fixture:"):
        name = selector.split(":", 1)[1]
        if name.startswith("qP3"):
            smp = idmod.default_samples("q-painleve", 1, seed=seed)[0]
            ps = algebraic_fixture(name, order, sample=smp)
            return idmod.describe_sample("q-painleve", smp), ps.dump()
        ps = algebraic_fixture(name, order)
        return {}, ps.dump()
    raise ConfigError(f"unknown dump selector {selector!r}; "
                      f"choose from: {', '.join(DUMP_SELECTORS)}")


def cmd_dump(args) -> int:
    try:
        order = _parse_order(args.order) if args.order else Frac(2)
        seed = int(os.environ.get("NEKTAU_SEED", args.seed or 0))
        sample, rows = _resolve_dump(args.selector, order, seed)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    doc = {
        "schema_version": SCHEMA_VERSION,
        "selector": args.selector,
        "order": [order.numerator, order.denominator],
        "seed": seed,
        "sample": sample,
        "series": rows,
    }
    text = json.dumps(doc, indent=2) + "\n"
    if args.report:
        with open(args.report, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------


def cmd_oracle(args) -> int:
    try:
        kmax = int(args.order) if args.order else 2
        if kmax < 0:
            raise ConfigError("oracle depth must be >= 0")
        seed = int(os.environ.get("NEKTAU_SEED", args.seed or 0))
    except (ValueError, ConfigError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    sample = idmod.default_samples("5d-generic", 1, seed=seed)[0]
    try:
        rep = idmod.determ_recursion(kmax, sample=sample)
    except idmod.SingularSystem as exc:
        print(f"configuration error: singular sample: {exc}", file=sys.stderr)
        return 2
    print(rep.summary())
    for name, part in rep.parts:
        print(f"  {name}: {part.summary()}")
    if args.report:
        with open(args.report, "w") as f:
            json.dump({"schema_version": SCHEMA_VERSION,
                       "result": rep.to_dict()}, f, indent=2)
            f.write("\n")
    return 0 if rep.ok else 1


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="nektau",
        description="Exact order-by-order verification of bilinear "
                    "tau-function identities.")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="print the identity catalog")

    pv = sub.add_parser("verify", help="run catalog checks")
    pv.add_argument("--id", action="append",
                    help="catalog id (repeatable); default: all")
    pv.add_argument("--order", help="truncation order N or N/D")
    pv.add_argument("--samples", type=int, help="samples per identity")
    pv.add_argument("--seed", type=int, help="sample-sequence seed")
    pv.add_argument("--report", help="write the report to this path")
    pv.add_argument("--format", choices=["json", "csv"])
    pv.add_argument("--fail-fast", action="store_true")
    pv.add_argument("--config", help="JSON run-config file")
    pv.add_argument("--corrupt-coefficient", nargs="?", const="1",
                    metavar="N[/D]",
                    help="debug: perturb one instanton coefficient at this "
                         "z-exponent before checking")

    pd = sub.add_parser("dump", help="dump an exact truncated series")
    pd.add_argument("selector", help=f"one of: {', '.join(DUMP_SELECTORS)}")
    pd.add_argument("--order", help="truncation order N or N/D (default 2)")
    pd.add_argument("--seed", type=int, help="sample choice seed")
    pd.add_argument("--report", help="write the dump to this path")

    po = sub.add_parser("oracle", help="run the coefficient-recursion "
                                       "cross-check")
    po.add_argument("--order", help="maximum recursion depth k (default 2)")
    po.add_argument("--seed", type=int, help="sample choice seed")
    po.add_argument("--report", help="write the result to this path")
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    handler = {
        "list": cmd_list,
        "verify": cmd_verify,
        "dump": cmd_dump,
        "oracle": cmd_oracle,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
