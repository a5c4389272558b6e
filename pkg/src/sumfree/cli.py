"""Command-line front end.

One subcommand per library operation; results are emitted as JSON-lines
records (default), an aligned table, or CSV.  Big integers are rendered
as decimal strings and exact rationals as "p/q" so records stay
language-neutral and diff-able.  With --cache DIR, deterministic queries
are fingerprinted over (op, params) and replayed byte-identically.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
exceeded.  A plain key=value config file (--config) can preset budget,
threads, format, seed and cache; flags always win.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import math
import os
import sys
import tempfile
import time
from dataclasses import asdict, is_dataclass
from datetime import datetime, timezone
from fractions import Fraction

from . import __version__
from .bounds import (
    LogValue,
    build_pair_graph,
    check_binom_inequalities,
    check_gamma_sum,
    empirical_constant,
    janson_quantities,
    theorem_rhs,
)
from .enumeration import (
    DEFAULT_NODE_BUDGET,
    DEFAULT_STREAM_BUDGET,
    count_in_window,
    count_oracle,
    count_sum_free,
    enumerate_sum_free,
    stratified_counts,
)
from .errors import BudgetError
from .intset import IntSet
from .partitions import DEFAULT_BUDGET, count_restricted, count_small_sumset_sets, p, p_star
from .sampling import sample_uniform, structure_trend
from .sumsets import b_set, doubling, freiman_cover, span, sumset
from .verify import restricted_ratio_table, run_all

SCHEMA_VERSION = 1

CONFIG_KEYS = ("budget", "threads", "format", "seed", "cache")


def _parse_values(text: str) -> list[int]:
    """Parse "1,2,3" or "5:12" (inclusive range) into a list of integers."""
    text = text.strip()
    if ":" in text:
        lo, hi = text.split(":", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(t) for t in text.split(",") if t]


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= 2**53 else obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, LogValue):
        return {"log": obj.log}
    if isinstance(obj, IntSet):
        return list(obj)
    if is_dataclass(obj):
        return {k: _jsonable(v) for k, v in asdict(obj).items()}
    if isinstance(obj, dict):
        return {_key(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in obj]
    return str(obj)


def _key(k):
    if isinstance(k, tuple):
        return ",".join(str(part) for part in k)
    return str(k)


class Emitter:
    def __init__(self, fmt: str, out):
        self.fmt = fmt
        self.out = out

    def emit_record(self, record: dict):
        if self.fmt == "records":
            self.out.write(json.dumps(record, sort_keys=True) + "\n")
        elif self.fmt == "csv":
            self._emit_csv(record)
        else:
            self._emit_table(record)

    def _rows(self, record):
        result = record["result"]
        if isinstance(result, list) and result and isinstance(result[0], dict):
            return result
        if isinstance(result, dict):
            return [result]
        return [{"result": result}]

    def _emit_csv(self, record):
        rows = self._rows(record)
        fields = sorted({k for row in rows for k in row})
        writer = csv.DictWriter(self.out, fieldnames=fields)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _flat(row.get(k)) for k in fields})

    def _emit_table(self, record):
        rows = self._rows(record)
        fields = sorted({k for row in rows for k in row})
        table = [fields] + [[_flat(row.get(k)) for k in fields] for row in rows]
        widths = [max(len(str(r[i])) for r in table) for i in range(len(fields))]
        for r in table:
            self.out.write("  ".join(str(v).ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")


def _flat(v):
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    return v


# ----------------------------------------------------------------------
# Command handlers: each returns (params, result) of JSON-able values


def _cmd_count(ns):
    params = {
        "n": ns.n,
        "m": ns.m,
        "allow_equal": not ns.distinct_only,
        "oracle": ns.oracle,
        "universe": ns.universe,
    }
    universe = _parse_values(ns.universe) if ns.universe else None
    if ns.oracle:
        res = count_oracle(ns.n, ns.m, universe=universe, allow_equal=not ns.distinct_only)
    else:
        res = count_sum_free(
            ns.n,
            ns.m,
            universe=universe,
            allow_equal=not ns.distinct_only,
            threads=ns.threads,
            node_budget=ns.budget or DEFAULT_NODE_BUDGET,
        )
    result = {
        "total": res.total,
        "by_size": {str(k): v for k, v in res.by_size.items()},
        "method": res.method,
        "nodes": res.nodes,
    }
    return params, result


def _cmd_enumerate(ns):
    params = {"n": ns.n, "m": ns.m, "allow_equal": not ns.distinct_only}
    sets = [
        list(s)
        for s in enumerate_sum_free(
            ns.n, ns.m, allow_equal=not ns.distinct_only, stream_budget=ns.budget or DEFAULT_STREAM_BUDGET
        )
    ]
    return params, {"count": len(sets), "sets": sets}


def _cmd_strata(ns):
    params = {"n": ns.n, "m": ns.m, "allow_equal": not ns.distinct_only}
    table = stratified_counts(ns.n, ns.m, allow_equal=not ns.distinct_only, threads=ns.threads)
    rows = [
        {"ell": ell, "k": str(k), "count": c, "odd_only": table.odd_joint.get((ell, k), 0)}
        for (ell, k), c in sorted(table.joint.items())
    ]
    return params, rows


def _cmd_window(ns):
    params = {"n": ns.n, "a": ns.a, "m": ns.m, "allow_equal": not ns.distinct_only}
    w = count_in_window(ns.n, ns.a, ns.m, allow_equal=not ns.distinct_only, threads=ns.threads)
    return params, {
        "count": w.count,
        "window_lo": w.window_lo,
        "window_size": w.window_size,
        "probability": str(w.probability),
        "probability_float": float(w.probability),
    }


def _cmd_partitions(ns):
    if ns.ell is None:
        params = {"k": ns.k}
        return params, {"p": p(ns.k)}
    params = {"k": ns.k, "ell": ns.ell}
    return params, {"p_star": p_star(ns.k, ns.ell)}


def _cmd_restricted(ns):
    if ns.ratio_table:
        rows = restricted_ratio_table(kmax=ns.k, ellmax=ns.ell or 12)
        out = [
            {
                "k": k,
                "ell": ell,
                "family": family,
                "parameter": param,
                "cap": cap,
                "count": count,
                "rhs_log": round(rhs_log, 6),
                "log_ratio": None if ratio is None else round(ratio, 6),
            }
            for k, ell, family, param, cap, count, rhs_log, ratio in rows
        ]
        return {"kmax": ns.k, "ellmax": ns.ell or 12, "ratio_table": True}, out
    params = {
        "k": ns.k,
        "ell": ns.ell,
        "sumset_cap": ns.sumset_cap,
        "universe_cap": ns.universe_cap,
    }
    count = count_restricted(
        ns.k, ns.ell, sumset_cap=ns.sumset_cap, universe_cap=ns.universe_cap, budget=ns.budget or DEFAULT_BUDGET
    )
    return params, {"count": count}


def _cmd_smallsumset(ns):
    params = {"n": ns.n, "m": ns.m, "cap": ns.cap, "delta": ns.delta}
    count = count_small_sumset_sets(ns.n, ns.m, ns.cap, budget=ns.budget or DEFAULT_BUDGET)
    rhs = theorem_rhs("conj", N=ns.cap, m=ns.m, delta=ns.delta)
    ratio = None if count == 0 else LogValue.of(count).log - rhs.log
    return params, {"count": count, "rhs_log": rhs.log, "log_ratio": ratio}


def _cmd_sumset(ns):
    a = _parse_values(ns.a)
    b = _parse_values(ns.b) if ns.b else None
    params = {"a": a, "b": b}
    ss = sumset(a, b)
    result = {"sumset": list(ss), "size": len(ss)}
    if b is None:
        result["span"] = span(a)
        result["sumset_span"] = span(ss)
        result["doubling"] = str(doubling(a))
    return params, result


def _cmd_freiman(ns):
    s = _parse_values(ns.s)
    params = {"s": s}
    cover = freiman_cover(s)
    ss_size = len(sumset(s))
    if cover is None:
        return params, {
            "applicable": False,
            "sumset_size": ss_size,
            "threshold": 3 * len(s) - 4,
        }
    return params, {
        "applicable": True,
        "sumset_size": ss_size,
        "first": cover.first,
        "difference": cover.difference,
        "length": cover.length,
        "length_bound": ss_size - len(s) + 1,
    }


def _cmd_bset(ns):
    s = _parse_values(ns.s)
    delta = _parse_fraction(ns.delta)
    params = {"s": s, "delta": str(delta)}
    members = b_set(s, delta)
    ss_size = len(sumset(s))
    return params, {
        "members": list(members),
        "size": len(members),
        "bound": float(Fraction(ss_size) / (1 - delta)),
    }


def _cmd_janson(ns):
    family = [_parse_values(part) for part in ns.family.split("|")]
    params = {"family": family, "ground": ns.ground, "draw": ns.draw}
    jq = janson_quantities(family, ns.ground, ns.draw)
    return params, {
        "mu": jq.mu.value(),
        "delta": jq.delta.value(),
        "bound_log": jq.bound.log,
        "bound": jq.bound.value(),
    }


def _cmd_pairgraph(ns):
    s = _parse_values(ns.s)
    excluded = _parse_values(ns.excluded) if ns.excluded else ()
    params = {"n": ns.n, "s": s, "excluded": list(excluded)}
    g = build_pair_graph(ns.n, s, excluded)
    return params, {
        "edge_count": g.edge_count,
        "max_degree": g.max_degree,
        "vertex_count": len(g.vertices),
        "edges": [list(e) for e in g.edges],
    }


def _cmd_bounds(ns):
    supplied = {
        key: getattr(ns, attr)
        for key, attr in (
            ("n", "n"),
            ("m", "m"),
            ("C", "bigc"),
            ("k", "k"),
            ("ell", "ell"),
            ("c", "c"),
            ("delta", "delta"),
            ("lam", "lam"),
            ("N", "cap"),
        )
        if getattr(ns, attr) is not None
    }
    params = {"name": ns.name, **supplied}
    lv = theorem_rhs(ns.name, **supplied)
    result = {"log": lv.log, "log2": lv.log / math.log(2)}
    if lv.log < 700:
        result["value"] = lv.value()
    if ns.count is not None:
        result["count"] = ns.count
        result["count_leq_rhs"] = LogValue.of(ns.count).leq(lv)
    return params, result


def _cmd_constant(ns):
    params = {"n": ns.n, "m": ns.m, "count": ns.count}
    return params, {"c_star": empirical_constant(ns.n, ns.m, ns.count)}


def _cmd_inequalities(ns):
    if ns.kind == "binom":
        if ns.a is None or ns.b is None or ns.c is None:
            raise ValueError("binom needs --a --b --c (and optional --d)")
        params = {"kind": "binom", "a": ns.a, "b": ns.b, "c": ns.c, "d": ns.d or 0}
        checks = check_binom_inequalities(ns.a, ns.b, ns.c, ns.d or 0)
        return params, [
            {"name": c.name, "lhs_log": c.lhs.log, "rhs_log": c.rhs.log, "passed": c.passed}
            for c in checks
        ]
    if ns.a is None or ns.gamma_b is None:
        raise ValueError("gamma needs --a and --gamma-b")
    params = {"kind": "gamma", "a": ns.a, "b": ns.gamma_b}
    chk = check_gamma_sum(ns.a, ns.gamma_b)
    return params, {
        "tail_sum": chk.tail_sum,
        "gamma_bound": chk.gamma_bound,
        "constant": chk.constant,
        "passed": chk.passed,
    }


def _cmd_sample(ns):
    params = {
        "n": ns.n,
        "m": ns.m,
        "count": ns.count,
        "seed": ns.seed,
        "workers": ns.threads,
        "allow_equal": not ns.distinct_only,
    }
    rep = sample_uniform(
        ns.n,
        ns.m,
        ns.count,
        seed=ns.seed,
        allow_equal=not ns.distinct_only,
        workers=ns.threads,
    )
    hist = {f"{ell},{k},{int(odd)}": c for (ell, k, odd), c in sorted(rep.histogram.items())}
    return params, {
        "histogram": hist,
        "ell_quantiles": list(rep.ell_quantiles),
        "k_quantiles": [str(q) for q in rep.k_quantiles],
        "acceptance": rep.acceptance,
    }


def _cmd_trend(ns):
    params = {"n_list": _parse_values(ns.n_list), "m_rule": ns.m_rule, "count": ns.count, "seed": ns.seed}
    rows = structure_trend(_parse_values(ns.n_list), ns.m_rule, ns.count, ns.seed)
    return params, [
        {
            "n": r.n,
            "m": r.m,
            "method": r.method,
            "ell_median": str(r.ell_median),
            "k_median": str(r.k_median),
            "ell_scaled": round(r.ell_scaled, 6),
            "k_scaled": round(r.k_scaled, 6),
            "stable": r.stable,
        }
        for r in rows
    ]


HANDLERS = {
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "strata": _cmd_strata,
    "window": _cmd_window,
    "partitions": _cmd_partitions,
    "restricted": _cmd_restricted,
    "smallsumset": _cmd_smallsumset,
    "sumset": _cmd_sumset,
    "freiman": _cmd_freiman,
    "bset": _cmd_bset,
    "janson": _cmd_janson,
    "pairgraph": _cmd_pairgraph,
    "bounds": _cmd_bounds,
    "constant": _cmd_constant,
    "inequalities": _cmd_inequalities,
    "sample": _cmd_sample,
    "trend": _cmd_trend,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("records", "table", "csv"), default=None)
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--budget", type=int, default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--cache", default=None, help="cache directory for result replay")
    common.add_argument("--config", default=None, help="key=value config file")

    parser = argparse.ArgumentParser(
        prog="sumfree", description="Exact enumeration and bounds for sum-free integer sets"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, **kwargs):
        return sub.add_parser(name, help=help_text, parents=[common], **kwargs)

    sp = add("count", "count sum-free m-subsets of {1..n}")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, default=None)
    sp.add_argument("--universe", default=None, help="restrict to these values, e.g. 5:10")
    sp.add_argument("--distinct-only", action="store_true", help="do not count x + x = z")
    sp.add_argument("--oracle", action="store_true", help="use the subset oracle")

    sp = add("enumerate", "list sum-free sets")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, default=None)
    sp.add_argument("--distinct-only", action="store_true")

    sp = add("strata", "joint (ell, k) distribution of sum-free m-sets")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--distinct-only", action="store_true")

    sp = add("window", "sum-free count in the window {ceil(n/2)-a, ..., n}")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--distinct-only", action="store_true")

    sp = add("partitions", "p(k), or p*(k, ell) when --ell is given")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--ell", type=int, default=None)

    sp = add("restricted", "count ell-sets summing to k with a sumset cap")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--ell", type=int, default=None)
    sp.add_argument("--sumset-cap", type=int, default=None)
    sp.add_argument("--universe-cap", type=int, default=None)
    sp.add_argument("--ratio-table", action="store_true", help="full cap/bound ratio table")

    sp = add("smallsumset", "count m-subsets of {1..n} with |S+S| <= cap, vs 2^(dm) C(cap/2, m)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--cap", type=int, required=True)
    sp.add_argument("--delta", type=float, default=1.0)

    sp = add("sumset", "sumset of two sets (span and doubling when B omitted)")
    sp.add_argument("--a", required=True, help="e.g. 1,2,4 or 3:9")
    sp.add_argument("--b", default=None)

    sp = add("freiman", "progression cover in the small-doubling regime")
    sp.add_argument("--s", required=True)

    sp = add("bset", "translates y with |(S+y) \\ (S+S)| <= delta |S|")
    sp.add_argument("--s", required=True)
    sp.add_argument("--delta", required=True, help="fraction in [0,1), e.g. 1/4")

    sp = add("janson", "first/second moments of a subset family under a uniform draw")
    sp.add_argument("--family", required=True, help='sets separated by "|", e.g. 1,3|3,5')
    sp.add_argument("--ground", type=int, required=True)
    sp.add_argument("--draw", type=int, required=True)

    sp = add("pairgraph", "forbidden-pair graph on the top half")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--s", required=True)
    sp.add_argument("--excluded", default=None)

    sp = add("bounds", "evaluate a named closed-form bound in log domain")
    sp.add_argument("--name", required=True, choices=("CEthm", "S+S", "S+S2", "parts", "conj"))
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--m", type=int, default=None)
    sp.add_argument("--bigc", type=float, default=None, help="C for CEthm")
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--ell", type=int, default=None)
    sp.add_argument("--c", type=float, default=None)
    sp.add_argument("--delta", type=float, default=None)
    sp.add_argument("--lam", type=float, default=None)
    sp.add_argument("--cap", type=float, default=None, help="N for conj")
    sp.add_argument("--count", type=int, default=None, help="also compare this count to the bound")

    sp = add("constant", "inverted count constant C*(n, m) from an exact count")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--count", type=int, required=True)

    sp = add("inequalities", "binomial-shift or gamma tail-sum inequality check")
    sp.add_argument("--kind", choices=("binom", "gamma"), required=True)
    sp.add_argument("--a", type=int, default=None)
    sp.add_argument("--b", type=int, default=None)
    sp.add_argument("--c", type=int, default=None)
    sp.add_argument("--d", type=int, default=None)
    sp.add_argument("--gamma-b", type=float, default=None)

    sp = add("sample", "uniform random sum-free m-sets by rejection")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--count", type=int, required=True)
    sp.add_argument("--distinct-only", action="store_true")

    sp = add("trend", "scaled low-part statistics across n")
    sp.add_argument("--n-list", required=True, help="e.g. 12,16,20")
    sp.add_argument("--m-rule", default="sqrt", help="sqrt | half | div:K | fixed:M")
    sp.add_argument("--count", type=int, default=2000)

    sp = add("verify", "run the acceptance checks")
    sp.add_argument("--suite", choices=("small", "full"), default="full")

    return parser


def _load_config(path):
    settings = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"bad config line: {line!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in CONFIG_KEYS:
                raise ValueError(f"unknown config key: {key!r}")
            settings[key] = value
    return settings


def _apply_defaults(ns):
    config = _load_config(ns.config) if ns.config else {}
    if ns.format is None:
        ns.format = config.get("format", "records")
    if ns.threads is None:
        ns.threads = int(config.get("threads", 1))
    if ns.budget is None:
        budget = config.get("budget")
        ns.budget = int(budget) if budget is not None else None
    if ns.seed is None:
        ns.seed = int(config.get("seed", 0))
    if ns.cache is None:
        ns.cache = config.get("cache")


def _fingerprint(op: str, params: dict) -> str:
    canon = json.dumps({"schema_version": SCHEMA_VERSION, "op": op, "params": params}, sort_keys=True)
    return hashlib.sha256(canon.encode()).hexdigest()


def _cache_path(cache_dir: str, digest: str) -> str:
    return os.path.join(cache_dir, f"{digest}.json")


def _cache_write(cache_dir: str, digest: str, payload: str):
    os.makedirs(cache_dir, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(payload)
        os.replace(tmp, _cache_path(cache_dir, digest))
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    if ns.command == "verify":
        results = run_all(ns.suite)
        return 0 if all(r.passed for r in results) else 1

    _apply_defaults(ns)
    handler = HANDLERS[ns.command]
    try:
        t0 = time.perf_counter()
        params, result = handler(ns)
        elapsed_ms = round((time.perf_counter() - t0) * 1000, 3)
    except BudgetError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    params = _jsonable(params)
    record = {
        "schema_version": SCHEMA_VERSION,
        "op": ns.command,
        "params": params,
        "result": _jsonable(result),
        "elapsed_ms": elapsed_ms,
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }

    if ns.cache:
        digest = _fingerprint(ns.command, params)
        path = _cache_path(ns.cache, digest)
        if os.path.exists(path):
            with open(path, encoding="utf-8") as fh:
                sys.stdout.write(fh.read())
            return 0
        payload_io = io.StringIO()
        Emitter(ns.format, payload_io).emit_record(record)
        payload = payload_io.getvalue()
        _cache_write(ns.cache, digest, payload)
        sys.stdout.write(payload)
        return 0

    Emitter(ns.format, sys.stdout).emit_record(record)
    return 0


if __name__ == "__main__":
    sys.exit(main())
