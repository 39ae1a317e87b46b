"""Command-line front end.

Exit status: 0 when every check in scope passes, 1 when a verification
fails (a diff report is printed), 2 for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

SCHEMA = "qschur/1"
CACHE_ENV = "QSCHUR_CACHE_DIR"
CSV_COMMANDS = {"dims", "simples"}


class RunConfig:
    """Validated parameters for one invocation."""

    def __init__(self, command, n=2, r=3, lprime=3, field="cyclotomic", p=None, fmt="json",
                 suite="all", output=None, **extra):
        self.command = command
        self.n = n
        self.r = r
        self.lprime = lprime
        self.field = field
        self.p = p
        self.fmt = fmt
        self.suite = suite
        self.output = output
        self.extra = extra

    def validate(self):
        """Return an error message, or None when the configuration is usable."""
        if self.n < 1:
            return "--n must be at least 1"
        if self.r < 0:
            return "--r must be nonnegative"
        if self.lprime < 3:
            return "--lprime must be at least 3"
        if self.field == "prime":
            if self.p is not None and not _is_prime(self.p):
                return "--p must be a prime"
            if self.p is not None and (self.p - 1) % self.lprime:
                return "--p must satisfy p = 1 mod l' so that GF(p) has a primitive l'-th root"
            if self.command not in ("dims",):
                return f"{self.command} needs a characteristic-zero field"
        if self.fmt == "csv" and self.command not in CSV_COMMANDS:
            return f"csv output is only available for {sorted(CSV_COMMANDS)}"
        return None

    def field_spec(self):
        from .schuralg import field
        return field(self.lprime, self.field, self.p)


def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


# structure-constant cache

def _cache_path(n, r):
    root = os.environ.get(CACHE_ENV)
    return Path(root) / f"U_{n}_{r}.json" if root else None


def load_cached(n, r):
    """Seed the generic U(n, r) from the cache directory when a dump is present."""
    from .schuralg import load_json, schur_algebra
    path = _cache_path(n, r)
    if path is None or not path.exists():
        return False
    alg = schur_algebra(n, r)
    if alg._table is None:
        alg._table = load_json(path.read_text()).table
    return True


def store_cached(n, r):
    from .schuralg import schur_algebra
    path = _cache_path(n, r)
    if path is None or path.exists():
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(schur_algebra(n, r).dumps())
    tmp.replace(path)


# commands

def cmd_dims(cfg):
    from .littlealg import little_zero_basis, sandwich_check
    from .weightcomb import derived_l, pr_count, residues
    f = cfg.field_spec()
    rep = sandwich_check(cfg.n, cfg.r, f)
    out = {
        "n": cfg.n, "r": cfg.r, "lprime": cfg.lprime,
        "dim_u1": rep["dim_u1"],
        "dim_little": rep["dim_little"],
        "dim_infinitesimal": rep["dim_infinitesimal"],
        "dim_little_zero": little_zero_basis(cfg.n, cfg.r, f).dim(),
    }
    l = derived_l(cfg.lprime)
    ok = (out["dim_little"] == pr_count(cfg.n, cfg.r, l, cfg.lprime)
          and out["dim_u1"] == pr_count(cfg.n, cfg.r, l, l)
          and out["dim_little_zero"] == len(residues(cfg.n, cfg.r, cfg.lprime)))
    return out, ok


def cmd_simples(cfg):
    from .weightcomb import derived_l, simple_index_set
    labels = sorted(simple_index_set(cfg.n, cfg.r, derived_l(cfg.lprime), cfg.lprime))
    if not cfg.extra.get("computed"):
        return {"n": cfg.n, "r": cfg.r, "lprime": cfg.lprime,
                "simples": [{"label": list(x)} for x in labels]}, True
    from .repanalysis import algebra, blocks, simples
    S = algebra(cfg.extra.get("algebra", "little"), cfg.n, cfg.r, cfg.lprime)
    blocks(S)
    rows = [s.to_json() for s in simples(S)]
    ok = cfg.extra.get("algebra", "little") != "little" or sorted(
        tuple(x["label"]) for x in rows) == labels
    return {"n": cfg.n, "r": cfg.r, "lprime": cfg.lprime, "simples": rows}, ok


def cmd_blocks(cfg):
    from .repanalysis import algebra, blocks
    S = algebra(cfg.extra.get("algebra", "little"), cfg.n, cfg.r, cfg.lprime)
    got = sorted(sorted(c) for c in blocks(S).classes)
    out = {"n": cfg.n, "r": cfg.r, "lprime": cfg.lprime,
           "blocks": [[list(x) for x in c] for c in got]}
    ok = True
    if cfg.n == 2 and cfg.lprime % 2 and cfg.extra.get("algebra", "little") == "little":
        from .verify import predicted_blocks_n2
        pred = predicted_blocks_n2(cfg.r, cfg.lprime)
        out["predicted"] = [[list(x) for x in c] for c in pred]
        ok = pred == got
    return out, ok


def cmd_semisimple(cfg):
    from .repanalysis import algebra, radical
    from .weightcomb import derived_l, semisimple_predicate
    rad = radical(algebra("little", cfg.n, cfg.r, cfg.lprime)).dim()
    pred = semisimple_predicate(cfg.n, cfg.r, derived_l(cfg.lprime))
    out = {"n": cfg.n, "r": cfg.r, "lprime": cfg.lprime, "semisimple": rad == 0,
           "rad_dim": rad, "predicted": pred}
    return out, (rad == 0) == pred


def cmd_analyze(cfg):
    from .repanalysis import analyze
    return analyze(cfg.extra.get("algebra", "little"), cfg.n, cfg.r, cfg.lprime), True


def cmd_transfer(cfg):
    from . import transfermaps as tm
    if cfg.extra.get("kind", "rho") == "rho":
        rep = tm.rho_report(cfg.n, cfg.r, cfg.lprime)
        rep["homomorphism"] = tm.rho_is_homomorphism(cfg.n, cfg.r, cfg.lprime)
        keys = ("surjective", "displayed_action", "generators", "p_images", "unital",
                "homomorphism")
    else:
        rep = tm.psi_report(cfg.n, cfg.r, cfg.lprime)
        rep["homomorphism"] = tm.psi_is_homomorphism(cfg.n, cfg.r, cfg.lprime)
        keys = ("e_f_images", "k_images", "unital", "surjective", "little_to_little",
                "homomorphism")
    rep["kind"] = cfg.extra.get("kind", "rho")
    return rep, all(rep[k] for k in keys)


def cmd_appendix(cfg):
    from .appendixalg import certificate_lines
    lam = cfg.extra.get("lam")
    if lam is not None and (len(lam) != cfg.n or sum(lam) != cfg.r or min(lam) < 0):
        raise UsageError(f"--lambda must be a composition of {cfg.r} into {cfg.n} parts")
    lines = certificate_lines(cfg.n, cfg.r, lam)
    out = {"n": cfg.n, "r": cfg.r, "certificates": lines}
    return out, all(x["verified"] for x in lines)


def _run_check(check):
    return check()


def cmd_verify(cfg):
    from .verify import SUITES
    checks = SUITES[cfg.suite]
    jobs = cfg.extra.get("jobs") or 1
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_check, checks))
    else:
        results = [c() for c in checks]
    out = {"suite": cfg.suite, "checks": [r.to_json() for r in results]}
    return out, all(r.passed for r in results)


COMMANDS = {
    "dims": cmd_dims,
    "simples": cmd_simples,
    "blocks": cmd_blocks,
    "semisimple": cmd_semisimple,
    "analyze": cmd_analyze,
    "transfer-check": cmd_transfer,
    "appendix-klambda": cmd_appendix,
    "verify": cmd_verify,
}


class UsageError(ValueError):
    pass


# rendering

def _text(command, payload, ok):
    lines = []
    if command == "verify":
        for chk in payload["checks"]:
            status = "PASS" if chk["passed"] else "FAIL"
            lines.append(f"{status} {chk['name']} ({chk['seconds']:.1f}s)")
            lines.extend(f"    {msg}" for msg in chk["failures"])
    elif command == "appendix-klambda":
        for cert in payload["certificates"]:
            lines.append(f"k_{tuple(cert['lambda'])} = {cert['expression']}")
            for name, expr in cert["definitions"].items():
                lines.append(f"  {name} := {expr}")
            lines.append(f"  verified: {str(cert['verified']).lower()}")
    elif command == "semisimple":
        lines.append(str(payload["semisimple"]).lower())
    else:
        for key in sorted(payload):
            lines.append(f"{key}: {json.dumps(payload[key], sort_keys=True)}")
    if command != "semisimple":
        lines.append("ok" if ok else "FAILED")
    return "\n".join(lines) + "\n"


def _csv(command, payload):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if command == "dims":
        keys = ["n", "r", "lprime", "dim_u1", "dim_little", "dim_infinitesimal",
                "dim_little_zero"]
        w.writerow(keys)
        w.writerow([payload[k] for k in keys])
    else:
        keys = ["label", "dim", "weight", "block"]
        w.writerow(keys)
        for row in payload["simples"]:
            w.writerow([" ".join(map(str, row["label"])),
                        row.get("dim", ""),
                        " ".join(map(str, row["weight"])) if "weight" in row else "",
                        "" if row.get("block") is None else row["block"]])
    return buf.getvalue()


def render_output(cfg, payload, ok):
    if cfg.fmt == "json":
        doc = {"schema": SCHEMA, "command": cfg.command, "ok": ok, "result": payload}
        return json.dumps(doc, sort_keys=True, indent=2, default=list) + "\n"
    if cfg.fmt == "csv":
        return _csv(cfg.command, payload)
    return _text(cfg.command, payload, ok)


def run(cfg):
    """Execute a validated configuration; returns (exit status, rendered report)."""
    err = cfg.validate()
    if err:
        raise UsageError(err)
    cached = cfg.command != "verify" and load_cached(cfg.n, cfg.r)
    payload, ok = COMMANDS[cfg.command](cfg)
    if cfg.command != "verify" and not cached:
        store_cached(cfg.n, cfg.r)
    return (0 if ok else 1), render_output(cfg, payload, ok)


def _lambda(text):
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a weight: {text!r}")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2)
    common.add_argument("--r", type=int, default=3)
    common.add_argument("--lprime", type=int, default=3)
    common.add_argument("--field", choices=["cyclotomic", "prime"], default="cyclotomic")
    common.add_argument("--p", type=int, default=None, help="characteristic for --field prime "
                        "(default: the least prime p = 1 mod l')")
    common.add_argument("--format", dest="fmt", choices=["json", "csv", "text"], default="json")
    common.add_argument("--output", default=None, help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="qschur", description="Exact computations with "
                                     "q-Schur algebras and their little subalgebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("dims", parents=[common], help="dimensions of u_1, little, s and the zero part")
    p = sub.add_parser("simples", parents=[common], help="simple-module index set")
    p.add_argument("--computed", action="store_true", help="compute the simples and their dims")
    p.add_argument("--algebra", choices=["little", "infinitesimal", "schur"], default="little")
    p = sub.add_parser("blocks", parents=[common], help="block partition of the simples")
    p.add_argument("--algebra", choices=["little", "infinitesimal", "schur"], default="little")
    sub.add_parser("semisimple", parents=[common], help="whether the little algebra is semisimple")
    p = sub.add_parser("analyze", parents=[common], help="radical, simples, Cartan and Ext data")
    p.add_argument("--algebra", choices=["little", "infinitesimal", "schur"], default="little")
    p = sub.add_parser("transfer-check", parents=[common], help="checks on psi or rho")
    p.add_argument("--kind", choices=["psi", "rho"], default="rho")
    p = sub.add_parser("appendix-klambda", parents=[common], help="certificates for k_lambda")
    p.add_argument("--lambda", dest="lam", type=_lambda, default=None)
    p = sub.add_parser("verify", parents=[common], help="run an acceptance suite")
    p.add_argument("--suite", default="all",
                   choices=["combinatorics", "schur-core", "little", "representation",
                            "transfer", "appendix", "all"])
    p.add_argument("--jobs", type=int, default=1, help="run checks in parallel processes")
    return parser


def main(argv=None):
    parser = build_parser()
    args = vars(parser.parse_args(argv))
    command = args.pop("command")
    cfg = RunConfig(command, **args)
    try:
        status, text = run(cfg)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qschur: error: {exc}", file=sys.stderr)
        return 2
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
