"""Command-line interface: ``semirep <command> <input> [options]``.

Inputs are ``.sgt`` files or ``builtin:NAME``.  Reports are deterministic
for a given input and seed; ``--timing`` adds the (non-deterministic) wall
time.  Exit codes: 0 success, 1 input or module error, 2 internal invariant
violation.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from . import __version__
from .catalog import builtin
from .corpus import enumerate_semigroups, rees_sweep
from .errors import FactorizationObstruction, InvariantViolation, SemigroupError
from .involution import enumerate_involutions, inverse_inducing_involution, verify_involution
from .linalg import DEFAULT_EPS, is_preunitary
from .schutz import LEFT, RIGHT, _coordinates, is_inverse_via_reps, jclass_pair, star_representable_all
from .semigroup import (
    SemigroupTable,
    brute_force_is_inverse,
    green_structure,
    is_semisimple_algebra,
    principal_series,
)
from .sgt import SgtFile, dump_sgt, load_sgt

COMMANDS = ("analyze", "is-inverse", "involutions", "rees", "reps", "star-check", "corpus")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="semirep", description="Representation-theoretic analysis of finite semigroups.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", nargs="?", help=".sgt file or builtin:NAME (not used by corpus)")
    p.add_argument("--json", action="store_true", help="emit the JSON report (default: text)")
    p.add_argument("--seed", type=int, default=0, help="seed for the numerical constructions")
    p.add_argument("--eps", type=float, default=DEFAULT_EPS, help="matrix tolerance")
    p.add_argument("--max-order", type=int, default=3, help="corpus: largest semigroup order to enumerate")
    p.add_argument("--workers", type=int, default=1, help="corpus: worker processes")
    p.add_argument("--no-oracle", action="store_true", help="skip brute-force cross-checks")
    p.add_argument("--timing", action="store_true", help="include wall time in the report")
    return p


def load_input(spec: str) -> SgtFile:
    if spec.startswith("builtin:"):
        try:
            return SgtFile(builtin(spec.split(":", 1)[1]))
        except KeyError as err:
            raise SemigroupError(err.args[0]) from None
    return load_sgt(spec)


def _labels(S: SemigroupTable, elems) -> list:
    return [S.label(a) for a in elems]


# --------------------------------------------------------------------------
# commands


def cmd_analyze(src: SgtFile, args) -> dict:
    S = src.table
    green = green_structure(S)
    series = principal_series(S, green)
    oracle = brute_force_is_inverse(S)
    return {
        "order": S.n,
        "zero": None if S.zero is None else S.label(S.zero),
        "idempotents": _labels(S, sorted(green.idempotents)),
        "jclasses": [
            {
                "elements": _labels(S, J),
                "regular": green.regular_j[k],
                "lclasses": [_labels(S, L) for L in green.lclasses if L[0] in J],
                "rclasses": [_labels(S, R) for R in green.rclasses if R[0] in J],
            }
            for k, J in enumerate(green.jclasses)
        ],
        "principal_series": [_labels(S, green.jclasses[k]) for k in series.quotient_jclass],
        "regular": green.is_regular,
        "inverse": oracle.is_inverse,
        "semisimple": is_semisimple_algebra(S),
    }


def cmd_is_inverse(src: SgtFile, args) -> dict:
    S = src.table
    return is_inverse_via_reps(S, args.seed, args.eps, oracle=not args.no_oracle).to_json()


def cmd_involutions(src: SgtFile, args) -> dict:
    S = src.table
    invs = enumerate_involutions(S)
    inducing = inverse_inducing_involution(S, invs)
    out = {
        "count": len(invs),
        "involutions": [_labels(S, f.map) for f in invs],
        "inverse_inducing": None if inducing is None else _labels(S, inducing.map),
    }
    if not args.no_oracle:
        o = brute_force_is_inverse(S)
        agrees = (inducing is None and not o.is_inverse) or (
            inducing is not None and o.inverse_map == inducing.map
        )
        if not agrees:
            raise InvariantViolation("inverse-inducing involution disagrees with the brute-force inverse map")
        out["oracle_agrees"] = agrees
    if src.involution is not None:
        verify_involution(S, src.involution)
        out["declared_is_involution"] = True
    return out


def cmd_rees(src: SgtFile, args) -> dict:
    S = src.table
    green = green_structure(S)
    classes = []
    for k, J in enumerate(green.jclasses):
        entry = {"elements": _labels(S, J), "regular": green.regular_j[k]}
        if green.regular_j[k]:
            c = _coordinates(S, k, green)
            G = c.group
            entry.update({
                "idempotent": S.label(c.e),
                "s": c.s,
                "t": c.t,
                "group": [G.label(g) for g in G.elements],
                "x": _labels(S, c.x),
                "y": _labels(S, c.y),
                "P": [[None if p is None else G.label(p) for p in row] for row in c.P],
                "normalized": c.normalized,
            })
        classes.append(entry)
    return {"jclasses": classes}


def cmd_reps(src: SgtFile, args) -> dict:
    S = src.table
    green = green_structure(S)
    classes = []
    for k, J in enumerate(green.jclasses):
        if not green.regular_j[k]:
            classes.append({"elements": _labels(S, J), "regular": False})
            continue
        _, left, right = jclass_pair(S, k, green, args.seed)
        table = []
        for s in S.elements:
            table.append({
                "element": S.label(s),
                "left": bool(is_preunitary(left.images[s], args.eps)),
                "right": bool(is_preunitary(right.images[s], args.eps)),
            })
        classes.append({
            "elements": _labels(S, J),
            "regular": True,
            "dims": {LEFT: left.dim, RIGHT: right.dim},
            "multiplicative": left.is_multiplicative() and right.is_multiplicative(),
            "preunitary": table,
        })
    return {"jclasses": classes}


def cmd_star_check(src: SgtFile, args) -> dict:
    S = src.table
    if src.involution is None:
        raise SemigroupError("star-check needs an 'involution' line in the input")
    try:
        v = star_representable_all(S, src.involution, args.seed, args.eps)
    except FactorizationObstruction as err:
        verdict = err.verdict.star_representable if err.verdict is not None else None
        raise SemigroupError(
            f"{err} (character-level verdict: {verdict}, signature: {err.signature})"
        ) from err
    return v.to_json()


def _corpus_row(S: SemigroupTable) -> dict:
    green = green_structure(S)
    o = brute_force_is_inverse(S)
    row = {"regular": green.is_regular, "inverse": o.is_inverse, "semisimple": is_semisimple_algebra(S)}
    if green.is_regular:
        row["reps_agree"] = is_inverse_via_reps(S, oracle=False, green=green).is_inverse == o.is_inverse
    return row


def _summarize(rows) -> dict:
    return {
        "count": len(rows),
        "regular": sum(r["regular"] for r in rows),
        "inverse": sum(r["inverse"] for r in rows),
        "semisimple": sum(r["semisimple"] for r in rows),
        "reps_agree": sum(r.get("reps_agree", False) for r in rows),
    }


def cmd_corpus(src, args) -> dict:
    orders = {}
    tables = {n: enumerate_semigroups(n, up_to_iso=True) for n in range(1, args.max_order + 1)}
    rees = [R.table for R in rees_sweep()]
    work = [S for n in sorted(tables) for S in tables[n]] + rees
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            rows = list(pool.map(_corpus_row, work, chunksize=8))
    else:
        rows = [_corpus_row(S) for S in work]
    k = 0
    for n in sorted(tables):
        orders[str(n)] = _summarize(rows[k:k + len(tables[n])])
        k += len(tables[n])
    rees_rows = rows[k:]
    summary = _summarize(rees_rows)
    if summary["reps_agree"] != summary["count"]:
        raise InvariantViolation("representation verdict disagrees with the oracle on the Rees corpus")
    return {"orders_up_to_isomorphism": orders, "rees_sweep": summary}


HANDLERS = {
    "analyze": cmd_analyze,
    "is-inverse": cmd_is_inverse,
    "involutions": cmd_involutions,
    "rees": cmd_rees,
    "reps": cmd_reps,
    "star-check": cmd_star_check,
    "corpus": cmd_corpus,
}


def run(command: str, args) -> dict:
    """Build the report for ``command``."""
    start = time.perf_counter()
    src = None
    if command != "corpus":
        if not args.input:
            raise SemigroupError(f"{command} needs an input file")
        src = load_input(args.input)
    report = {
        "command": command,
        "input": args.input,
        "input_digest": None if src is None else hashlib.sha256(
            dump_sgt(src.table, src.involution).encode()).hexdigest(),
        "seed": args.seed,
        "eps": args.eps,
        "verdicts": HANDLERS[command](src, args),
    }
    if args.timing:
        report["wall_time"] = round(time.perf_counter() - start, 6)
    return report


def _render_text(value, indent: int = 0) -> list:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines += _render_text(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines += _render_text(v, indent + 1)
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")
    return lines


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) or _flat(x) for x in v)


def _scalar(v) -> str:
    if isinstance(v, (list, dict)):
        return json.dumps(v)
    if v is None:
        return "-"
    return str(v).lower() if isinstance(v, bool) else str(v)


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = run(args.command, args)
    except InvariantViolation as err:
        print(f"semirep: internal invariant violated: {err}", file=sys.stderr)
        return 2
    except (SemigroupError, OSError, ValueError) as err:
        print(f"semirep: error: {err}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=False))
    else:
        print("\n".join(_render_text(report)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
