"""
Command-line interface for cyclorep.

Usage:
    cyclorep repr 13 --format json      # all (n, x, y) with Phi_n(x, y) = 13
    cyclorep cn 35                      # c_35, t_35 and lower bounds
    cyclorep table1 --max-m 20          # nonzero a_m
    cyclorep count 100000 --form both --variant tilde
    cyclorep constants --prime-bound 10000000

Exit codes: 0 success, 1 usage error, 2 domain error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import __version__
from .arith import totient
from .density import FORMS, VARIANTS, average_multiplicity, constants, sieve_representable
from .errors import DomainError, ResourceBudgetError
from .minima import cn, cn_lower_bounds
from .represent import (
    enumerate_representations,
    m_h,
    m_h_bruteforce,
    representation_tables,
    small_value_triples,
    unbounded_family,
)

__all__ = ["run", "main", "TABLE3_INDICES", "render"]

TABLE3_INDICES = (3, 5, 7, 11, 13, 15, 17, 19, 21, 23, 29, 31, 33, 35, 37, 39, 41, 43, 47, 51, 53)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _fmt(v, paper_precision: bool = False) -> str:
    if isinstance(v, float):
        if paper_precision:
            return _truncate3(v)
        return f"{v:.12g}"
    if v is None:
        return ""
    return str(v)


def _truncate3(v: float) -> str:
    t = math.trunc(v * 1000) / 1000
    return f"{t:.3f}..."


def _json_value(v):
    if isinstance(v, float):
        return float(f"{v:.12g}")
    if isinstance(v, int) and not isinstance(v, bool) and v.bit_length() > 53:
        return str(v)
    return v


def render(envelope: dict, fmt: str, paper_precision: bool = False) -> str:
    """Serialize {command, params, summary, rows} as text, json or csv."""
    rows = envelope["rows"]
    if fmt == "json":
        doc = {
            "command": envelope["command"],
            "version": __version__,
            "params": {k: _json_value(v) for k, v in envelope["params"].items()},
            "summary": {k: _json_value(v) for k, v in envelope.get("summary", {}).items()},
            "rows": [{k: _json_value(v) for k, v in r.items()} for r in rows],
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        header = list(rows[0]) if rows else list(envelope.get("columns", []))
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([_fmt(r[k], paper_precision) for k in header])
        return buf.getvalue()
    lines = [f"# {envelope['command']}"]
    for k, v in envelope.get("summary", {}).items():
        lines.append(f"{k}: {_fmt(v)}")
    if rows:
        header = list(rows[0])
        cells = [[_fmt(r[k], paper_precision) for k in header] for r in rows]
        widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(header)]
        lines.append("  ".join(h.rjust(w) for h, w in zip(header, widths)))
        for c in cells:
            lines.append("  ".join(s.rjust(w) for s, w in zip(c, widths)))
    return "\n".join(lines) + "\n"


def _cmd_repr(a):
    indices = None
    if a.indices:
        indices = [int(s) for s in a.indices.split(",")]
    rep = enumerate_representations(a.m, a.min_height, indices=indices, workers=a.threads)
    rows = [{"n": r.n, "x": r.x, "y": r.y, "height": r.height, "value": r.value} for r in rep.reps]
    return {
        "command": "repr",
        "params": {"m": a.m, "min_height": a.min_height},
        "summary": {"a_m": rep.a_m, "b_m": rep.b_m},
        "rows": rows,
        "columns": ["n", "x", "y", "height", "value"],
    }


def _cn_row(n: int) -> dict:
    fm = cn(n)
    b1, b2 = cn_lower_bounds(n)
    return {
        "n": n,
        "core": fm.core,
        "c_n": fm.c_n,
        "t_n": fm.t_n,
        "abs_error": fm.abs_error,
        "bound_p1": b1,
        "bound_sqrt3": b2,
    }


def _cmd_cn(a):
    if a.n < 3:
        raise DomainError(f"n must be >= 3, got {a.n}")
    fm = cn(a.n)
    return {
        "command": "cn",
        "params": {"n": a.n},
        "summary": {"substitution": fm.substitution, "t_original": fm.t_original},
        "rows": [_cn_row(a.n)],
    }


def _cmd_table(which):
    def cmd(a):
        t = representation_tables(a.max_m, workers=a.threads)
        key = "a_m" if which == "a" else "b_m"
        return {
            "command": "table1" if which == "a" else "table2",
            "params": {"max_m": a.max_m},
            "rows": [{"m": m, key: v} for m, v in t[which]],
            "columns": ["m", key],
        }

    return cmd


def _cmd_table3(a):
    return {"command": "table3", "params": {}, "rows": [_cn_row(n) for n in TABLE3_INDICES]}


def _cmd_table4(a):
    rows = []
    for m in range(1, a.max_m + 1):
        for r in enumerate_representations(m, workers=a.threads).reps:
            rows.append({"m": m, "n": r.n, "x": r.x, "y": r.y})
    return {"command": "table4", "params": {"max_m": a.max_m}, "rows": rows, "columns": ["m", "n", "x", "y"]}


def _cmd_count(a):
    _, c = sieve_representable(a.N, a.form, a.variant, method=a.method, workers=a.threads)
    row = {
        "N": c.N,
        "variant": c.variant,
        "count_phi3": c.count_phi3,
        "count_phi4": c.count_phi4,
        "count_both": c.count_both,
        "count_union34": c.count_union34,
        "count_all": c.count_all,
    }
    return {
        "command": "count",
        "params": {"N": a.N, "form": a.form, "variant": a.variant, "method": a.method},
        "rows": [row],
    }


def _cmd_constants(a):
    c = constants(a.prime_bound)
    rows = [
        {"name": name, "value": getattr(c, name), "tail_error": c.tail_error[name]}
        for name in ("alpha0_3", "alpha0_4", "beta0", "kappa1", "kappa1_lattice")
    ]
    return {"command": "constants", "params": {"prime_bound": a.prime_bound}, "rows": rows}


def _cmd_multiplicity(a):
    r = average_multiplicity(a.N, workers=a.threads)
    return {
        "command": "multiplicity",
        "params": {"N": a.N},
        "rows": [
            {
                "N": r.N,
                "S_N": r.S_N,
                "A_N": r.A_N,
                "M_N": r.M_N,
                "ratio": r.ratio,
                "kappa1": r.kappa1,
                "kappa1_lattice": r.kappa1_lattice,
            }
        ],
    }


def _cmd_mh(a):
    closed = m_h(a.h)
    brute = m_h_bruteforce(a.h)
    return {
        "command": "mh",
        "params": {"h": a.h},
        "rows": [{"h": a.h, "m_h": closed, "bruteforce": brute, "verified": str(closed == brute).lower()}],
    }


def _cmd_small(a):
    reps = small_value_triples(a.n_max, a.theta)
    rows = [{"n": r.n, "x": r.x, "y": r.y, "height": r.height, "value": r.value} for r in reps]
    params = {"n_max": a.n_max, "mode": "seven_threshold" if a.theta is None else "theta"}
    if a.theta is not None:
        params["theta"] = a.theta
    return {
        "command": "small-values",
        "params": params,
        "summary": {"count": len(rows), "max_height": max((r.height for r in reps), default=0)},
        "rows": rows,
        "columns": ["n", "x", "y", "height", "value"],
    }


def _cmd_family(a):
    fam = unbounded_family(a.s)
    rows = [{"n": w.n, "x": w.x, "y": w.y, "phi_n": totient(w.n)} for w in fam.witnesses]
    return {
        "command": "family",
        "params": {"s": a.s},
        "summary": {"k_s": fam.k, "m_s": f"2^{fam.k}", "b_lower_bound": fam.b_lower_bound},
        "rows": rows,
    }


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--threads", type=int, default=1, help="worker count")
    common.add_argument("--paper-precision", action="store_true", help="truncate floats to 3 decimals")

    p = _Parser(prog="cyclorep", description="Representations of integers by cyclotomic binary forms.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("repr", parents=[common], help="all representations of m")
    s.add_argument("m", type=int)
    s.add_argument("--min-height", type=int, default=2)
    s.add_argument("--indices", help="comma-separated n list (required when --min-height < 2)")
    s.set_defaults(func=_cmd_repr)

    s = sub.add_parser("cn", parents=[common], help="minimum c_n of phi_n")
    s.add_argument("n", type=int)
    s.set_defaults(func=_cmd_cn)

    for name, which, default in (("table1", "a", 20), ("table2", "b", 100)):
        s = sub.add_parser(name, parents=[common], help=f"nonzero {which}_m for m <= --max-m")
        s.add_argument("--max-m", type=int, default=default)
        s.set_defaults(func=_cmd_table(which))

    s = sub.add_parser("table3", parents=[common], help="c_n and t_n for odd squarefree n <= 53")
    s.set_defaults(func=_cmd_table3)

    s = sub.add_parser("table4", parents=[common], help="every triple for m <= --max-m")
    s.add_argument("--max-m", type=int, default=10)
    s.set_defaults(func=_cmd_table4)

    s = sub.add_parser("count", parents=[common], help="count representable integers up to N")
    s.add_argument("N", type=int)
    s.add_argument("--form", choices=FORMS, default="all")
    s.add_argument("--variant", choices=VARIANTS, default="restricted")
    s.add_argument("--method", choices=("lattice", "factor"), default="lattice")
    s.set_defaults(func=_cmd_count)

    s = sub.add_parser("constants", parents=[common], help="leading density constants")
    s.add_argument("--prime-bound", type=int, default=10**7)
    s.set_defaults(func=_cmd_constants)

    s = sub.add_parser("multiplicity", parents=[common], help="average number of representations M_N")
    s.add_argument("N", type=int)
    s.set_defaults(func=_cmd_multiplicity)

    s = sub.add_parser("mh", parents=[common], help="least value at height >= h")
    s.add_argument("h", type=int)
    s.set_defaults(func=_cmd_mh)

    s = sub.add_parser("small-values", parents=[common], help="triples below 7^(phi/2) or 2^(theta*phi)")
    s.add_argument("--n-max", type=int, default=15)
    s.add_argument("--theta", type=str, default=None)
    s.set_defaults(func=_cmd_small)

    s = sub.add_parser("family", parents=[common], help="m = 2^k_s and its witnesses")
    s.add_argument("s", type=int)
    s.set_defaults(func=_cmd_family)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if args.threads < 1:
            raise UsageError("--threads must be >= 1")
        env = args.func(args)
    except UsageError as e:
        print(e, file=err)
        return 1
    except DomainError as e:
        print(f"domain error: {e}", file=err)
        return 2
    except ResourceBudgetError as e:
        print(f"resource budget exceeded: {e}", file=err)
        return 3
    out.write(render(env, args.format, args.paper_precision))
    return 0


def main():
    sys.exit(run())
