"""Command-line front end: ``fstype {basis,character,relations,verify}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .admissibility import character, enumerate_basis
from .core import HighestWeight
from .relations import generators
from .verifier import report_csv, report_dict, verify_presentation

REPORT_SCHEMA = {
    "type": "object",
    "required": ["ell", "weights", "maxDegree", "degrees", "match"],
    "properties": {
        "ell": {"type": "integer", "minimum": 1},
        "weights": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "maxDegree": {"type": "integer", "minimum": 0},
        "match": {"type": "boolean"},
        "degrees": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["degree", "blocks", "match"],
                "properties": {
                    "degree": {"type": "integer"},
                    "match": {"type": "boolean"},
                    "blocks": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["weight", "numMonomials", "idealRank", "pivots", "standard", "basis", "match"],
                            "properties": {
                                "weight": {"type": "array", "items": {"type": "integer"}},
                                "numMonomials": {"type": "integer"},
                                "idealRank": {"type": "integer"},
                                "pivots": {"type": "array", "items": {"type": "string"}},
                                "standard": {"type": "array", "items": {"type": "string"}},
                                "basis": {"type": "array", "items": {"type": "string"}},
                                "match": {"type": "boolean"},
                            },
                        },
                    },
                },
            },
        },
    },
}


def _weights(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fstype",
        description="Admissible bases and presentations of Feigin-Stoyanovsky type subspaces for C_l^(1).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in [
        ("basis", "list admissible monomials per degree"),
        ("character", "graded dimension of the admissible basis"),
        ("relations", "generators of the relation ideal with provenance"),
        ("verify", "compare standard monomials of the ideal with admissible monomials"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--ell", type=int, required=True, help="rank l >= 1")
        p.add_argument("--weights", type=_weights, required=True, help="k0,k1,...,kl")
        p.add_argument("--max-degree", type=int, required=True, dest="max_degree")
        p.add_argument("--format", choices=["json", "csv", "text"], default="text")
        p.add_argument("--refined", action="store_true", help="character by (degree, weight)")
        p.add_argument("--out", help="write output here instead of stdout")
    return parser


def _validate(parser: argparse.ArgumentParser, args) -> HighestWeight:
    if args.ell < 1:
        parser.error("--ell must be >= 1")
    if len(args.weights) != args.ell + 1:
        parser.error(f"--weights needs {args.ell + 1} entries for ell={args.ell}")
    if any(k < 0 for k in args.weights) or sum(args.weights) < 1:
        parser.error("--weights entries must be >= 0 with positive sum")
    if args.max_degree < 0:
        parser.error("--max-degree must be >= 0")
    return HighestWeight.of(*args.weights)


def _header(hw: HighestWeight, d_max: int) -> dict:
    return {"ell": hw.ell, "weights": list(hw.k), "maxDegree": d_max}


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _basis(hw, d_max, fmt, refined) -> tuple[str, int]:
    basis = enumerate_basis(hw, d_max)
    if fmt == "json":
        doc = _header(hw, d_max)
        doc["degrees"] = [
            {"degree": d, "count": len(ms), "monomials": [str(m) for m in ms]} for d, ms in basis.items()
        ]
        return json.dumps(doc, indent=2) + "\n", 0
    if fmt == "csv":
        rows = [["degree", "weight", "monomial"]]
        rows += [[d, " ".join(map(str, m.weight(hw.ell))), str(m)] for d, ms in basis.items() for m in ms]
        return _csv(rows), 0
    lines = [f"d{d} ({len(ms)}): " + ", ".join(map(str, ms)) for d, ms in basis.items()]
    return "\n".join(lines) + "\n", 0


def _character(hw, d_max, fmt, refined) -> tuple[str, int]:
    series = character(hw, d_max, refined)
    if refined:
        items = [(d, list(w), c) for (d, w), c in series.items()]
        if fmt == "json":
            doc = _header(hw, d_max)
            doc["refined"] = [{"degree": d, "weight": w, "count": c} for d, w, c in items]
            return json.dumps(doc, indent=2) + "\n", 0
        if fmt == "csv":
            return _csv([["degree", "weight", "count"]] + [[d, " ".join(map(str, w)), c] for d, w, c in items]), 0
        return "".join(f"d{d} {tuple(w)}: {c}\n" for d, w, c in items), 0
    if fmt == "json":
        doc = _header(hw, d_max)
        doc["coefficients"] = series
        return json.dumps(doc, indent=2) + "\n", 0
    if fmt == "csv":
        return _csv([["degree", "count"]] + [[d, c] for d, c in enumerate(series)]), 0
    return " + ".join(f"{c}q^{d}" for d, c in enumerate(series) if c) + "\n", 0


def _relations(hw, d_max, fmt, refined) -> tuple[str, int]:
    gs = generators(hw, d_max)
    rows = []
    for g in gs:
        deg, wt = g.poly.grade(hw.ell)
        rows.append((str(g.provenance), deg, list(wt), str(g.poly), str(g.poly.leading_term())))
    if fmt == "json":
        doc = _header(hw, d_max)
        doc["generators"] = [
            {"provenance": p, "degree": d, "weight": w, "poly": s, "leadingTerm": lt} for p, d, w, s, lt in rows
        ]
        return json.dumps(doc, indent=2) + "\n", 0
    if fmt == "csv":
        return _csv(
            [["provenance", "degree", "weight", "poly", "leadingTerm"]]
            + [[p, d, " ".join(map(str, w)), s, lt] for p, d, w, s, lt in rows]
        ), 0
    return gs.to_text(), 0


def _verify(hw, d_max, fmt, refined) -> tuple[str, int]:
    reports = verify_presentation(hw, d_max)
    doc = report_dict(hw, d_max, reports)
    status = 0 if doc["match"] else 1
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n", status
    if fmt == "csv":
        return report_csv(reports), status
    lines = [f"Lambda = ({hw}), level {hw.level}, degrees 0..{d_max}"]
    lines.append(f"{'deg':>3} {'blocks':>6} {'monos':>6} {'rank':>6} {'std':>5} {'basis':>5}  match")
    for r in reports:
        lines.append(
            f"{r.degree:>3} {len(r.blocks):>6} {sum(b.num_monomials for b in r.blocks):>6} "
            f"{sum(b.ideal_rank for b in r.blocks):>6} {r.standard_count:>5} {r.basis_count:>5}  "
            f"{'yes' if r.match else 'NO'}"
        )
        for b in r.blocks:
            if not b.match:
                extra, missing = b.mismatch()
                lines.append(f"    weight {b.weight}: standard only {[str(m) for m in extra]}")
                lines.append(f"    weight {b.weight}: admissible only {[str(m) for m in missing]}")
    lines.append("MATCH" if status == 0 else "MISMATCH")
    return "\n".join(lines) + "\n", status


COMMANDS = {"basis": _basis, "character": _character, "relations": _relations, "verify": _verify}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        hw = _validate(parser, args)
    except SystemExit as exc:
        return int(exc.code or 0)
    text, status = COMMANDS[args.command](hw, args.max_degree, args.format, args.refined)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
