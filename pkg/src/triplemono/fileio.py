"""Arrangement text files and JSON reports.

File format::

    # arrangement: a3
    field rational
    line -1 1 0
    line 1 1 0

Comment lines start with ``#``; ``# arrangement: NAME`` sets the label.  The
header is ``field rational`` or ``field eisenstein``; coefficients use the
tokens of :func:`triplemono.exactfield.parse_element` (``1``, ``-1/2``,
``10w``, ``1-w``).  Export always writes canonical (normalized) line
coefficients, so export(parse(text)) is stable.
"""

from __future__ import annotations

import json
from pathlib import Path

from .arrangement import MAX_LINES, Arrangement
from .errors import ArrangementParseError
from .exactfield import format_element, parse_element
from .monodromy import MonodromyReport, TheoremPrediction, ValidationReport
from .pencil import format_partition, profile

__all__ = ["parse_arrangement", "format_arrangement", "read_arrangement", "report_dict", "report_json"]

FIELDS = ("rational", "eisenstein")


def parse_arrangement(text: str, label: str = "") -> Arrangement:
    field = None
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("arrangement:") and not label:
                label = body.partition(":")[2].strip()
            continue
        tokens = line.split()
        if tokens[0] == "field":
            if field is not None:
                raise ArrangementParseError(f"line {lineno}: duplicate field header")
            if len(tokens) != 2 or tokens[1] not in FIELDS:
                raise ArrangementParseError(f"line {lineno}: expected 'field rational' or 'field eisenstein'")
            field = tokens[1]
            continue
        if tokens[0] != "line":
            raise ArrangementParseError(f"line {lineno}: unknown directive {tokens[0]!r}")
        if field is None:
            raise ArrangementParseError(f"line {lineno}: 'line' before the field header")
        if len(tokens) != 4:
            raise ArrangementParseError(f"line {lineno}: a line needs exactly three coefficients")
        try:
            coeffs = [parse_element(t) for t in tokens[1:]]
        except ValueError as exc:
            raise ArrangementParseError(f"line {lineno}: {exc}") from exc
        if field == "rational" and any(not c.is_rational() for c in coeffs):
            raise ArrangementParseError(f"line {lineno}: w-coefficient in a 'field rational' file")
        if not any(coeffs):
            raise ArrangementParseError(f"line {lineno}: all coefficients are zero")
        lines.append(coeffs)
        if len(lines) > MAX_LINES:
            raise ArrangementParseError(f"more than {MAX_LINES} lines")
    if field is None:
        raise ArrangementParseError("missing 'field' header")
    return Arrangement(lines, label)


def read_arrangement(path) -> Arrangement:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ArrangementParseError(f"cannot read {path}: {exc}") from exc
    a = parse_arrangement(text)
    return a if a.label else Arrangement(a.lines, path.stem)


def format_arrangement(a: Arrangement) -> str:
    rational = all(c.is_rational() for L in a.lines for c in L.coords)
    out = []
    if a.label:
        out.append(f"# arrangement: {a.label}")
    out.append("field " + ("rational" if rational else "eisenstein"))
    for L in a.lines:
        out.append("line " + " ".join(format_element(c) for c in L.coords))
    return "\n".join(out) + "\n"


def report_dict(
    a: Arrangement,
    rep: MonodromyReport,
    pred: TheoremPrediction,
    n_double: int,
    validation: ValidationReport | None = None,
) -> dict:
    p = pred.pencil
    if p is not None:
        prof = profile(p)
        pencil = {
            "found": True,
            "partition": format_partition(p.partition),
            "profile": {"sigma": prof.sigma, "kinds": list(prof.kinds)},
            "sizes": {"T0": len(p.T0), "T1": len(p.T1), "T2": len(p.T2), "T3": len(p.T3)},
        }
    else:
        pencil = {"found": False, "partition": None, "profile": None, "sizes": None}
    return {
        "label": a.label,
        "d": a.d,
        "m": rep.m,
        "lattice": {"t2": n_double, "t3": rep.n_triple},
        "pencil": pencil,
        "monodromy": {
            "s": rep.s,
            "h10_eps": rep.h10_eps,
            "h01_eps": rep.h01_eps,
            "h10_epsbar": rep.h10_epsbar,
            "h01_epsbar": rep.h01_epsbar,
            "b1_F": rep.b1_F,
            "char_poly": {"e1": rep.char_poly[0], "e2": rep.char_poly[1]},
        },
        "theorem": {
            "branch": pred.branch.value,
            "predicted_s": pred.predicted_s,
            "conics": [
                {
                    "points_set": e.points_set,
                    "form": None if e.conic is None else str(e.conic),
                    "smooth": e.smooth,
                }
                for e in pred.conics
            ],
        },
        "checks": [] if validation is None else [{"name": c.name, "pass": c.passed} for c in validation.checks],
    }


def report_json(*args, **kwargs) -> str:
    return json.dumps(report_dict(*args, **kwargs), indent=2, ensure_ascii=False) + "\n"
