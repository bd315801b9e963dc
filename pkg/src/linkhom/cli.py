"""Command-line front end: ``linkhom <command> <input> [options]``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import DEFAULT_CUTOFF, LaurentPoly, MultiRational, TruncatedVSeries
from .braid import BraidParseError, BraidWord, enumerate_moves, parse_braid
from .corpus import CORPUS
from .hecke import homfly, homfly_specialized
from .kauffman import jones
from .khovanov import euler_characteristic, kh_poincare, poincare_to_text
from .qrep import RepContext
from .soergel import kr, kr_jones_series
from .webrt import WebParseError, closed_web_value, colored_jones, parse_web, phi_eval, wrt_eval

__all__ = ["COMMANDS", "RunConfig", "ConfigError", "run", "main", "default_cutoff"]

COMMANDS = ("jones", "homfly", "khovanov", "kr", "wrt", "colored-jones", "web-eval",
            "cross-check", "moves-check")

EXIT_OK, EXIT_PARSE, EXIT_INCONSISTENT = 0, 1, 2


class ConfigError(ValueError):
    """Options that make no sense for the chosen command."""


def default_cutoff() -> int:
    raw = os.environ.get("LINKHOM_CUTOFF")
    if raw is None or not raw.strip():
        return DEFAULT_CUTOFF
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigError(f"LINKHOM_CUTOFF must be an integer, got {raw!r}") from exc


@dataclass
class RunConfig:
    command: str
    input: str = ""
    k: int = 2
    eta: int = -1
    colors: tuple[int, ...] | None = None
    cutoff: int = field(default_factory=default_cutoff)
    output: str = "text"

    def validate(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.k < 1:
            raise ConfigError("--k must be at least 1")
        if self.eta not in (1, -1):
            raise ConfigError("--eta must be 1 or -1")
        if self.cutoff < 0:
            raise ConfigError("--cutoff must be nonnegative")
        if self.output not in ("text", "json"):
            raise ConfigError("output format is text or json")
        if self.colors is not None and self.command != "colored-jones":
            raise ConfigError("--colors only applies to colored-jones")


# -- rendering ------------------------------------------------------------

def _num(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else str(c)


def laurent_json(p: LaurentPoly) -> dict:
    return {"terms": {str(e): _num(c) for e, c in sorted(p.terms.items())}}


def laurent_from_json(obj: dict) -> LaurentPoly:
    return LaurentPoly({int(e): Fraction(c) for e, c in obj["terms"].items()})


def rational_text(r: MultiRational) -> str:
    if r.names == ("v",) and r.is_laurent():
        return str(r.to_laurent())
    return str(r)


def rational_json(r: MultiRational) -> dict:
    if r.names == ("v",) and r.is_laurent():
        return laurent_json(r.to_laurent())
    return {"variables": list(r.names), "numerator": str(r.numerator.as_expr()),
            "denominator": str(r.denominator.as_expr())}


def series_json(s: TruncatedVSeries) -> dict:
    return {"terms": {str(d): _num(c) for d, c in sorted(s.coeffs.items())}, "cutoff": s.cutoff}


def kh_json(poly: dict) -> list:
    return [{"t": h, "q": q, "dim": c} for (h, q), c in sorted(poly.items())]


# -- commands -------------------------------------------------------------

def _braid(cfg: RunConfig) -> BraidWord:
    return parse_braid(cfg.input)


def _cmd_jones(cfg):
    p = jones(_braid(cfg))
    return EXIT_OK, str(p), laurent_json(p)


def _cmd_homfly(cfg):
    r = homfly(_braid(cfg))
    return EXIT_OK, rational_text(r), rational_json(r)


def _cmd_khovanov(cfg):
    poly = kh_poincare(_braid(cfg))
    return EXIT_OK, poincare_to_text(poly), kh_json(poly)


def _cmd_kr(cfg):
    res = kr(_braid(cfg), cfg.cutoff)
    return EXIT_OK, str(res), {"cutoff": res.cutoff, "series": json.loads(res.to_json())}


def _cmd_wrt(cfg):
    r = wrt_eval(_braid(cfg), cfg.k, cfg.eta)
    return EXIT_OK, rational_text(r), rational_json(r)


def _cmd_colored(cfg):
    b = _braid(cfg)
    colors = cfg.colors or tuple([1] * b.component_count())
    r = colored_jones(b, colors)
    return EXIT_OK, rational_text(r), rational_json(r)


def _cmd_web(cfg):
    w = parse_web(cfg.input.replace(";", "\n"))
    ctx = RepContext(cfg.k, cfg.eta)
    if all(x == cfg.k for x in w.labels) and all(x == cfg.k for x in w.codomain()):
        val = closed_web_value(w, ctx)
        return EXIT_OK, str(val), laurent_json(LaurentPoly.coerce(val))
    m = phi_eval(w, ctx)
    entries = [(src, dst, c) for src, col in sorted(m.cols.items()) for dst, c in sorted(col.items())]
    text = "\n".join(f"{list(map(list, src))} -> {list(map(list, dst))}: {c}" for src, dst, c in entries)
    data = [{"from": [list(f) for f in src], "to": [list(f) for f in dst],
             "coeff": laurent_json(LaurentPoly.coerce(c))} for src, dst, c in entries]
    return EXIT_OK, text or "0", {"domain": list(w.labels), "codomain": list(w.codomain()),
                                  "entries": data}


def cross_check(b: BraidWord, cutoff: int) -> tuple[bool, list[tuple[str, str, bool]]]:
    """Run every pipeline that decategorifies to the Jones polynomial on ``b``."""
    ref = jones(b)
    rows = [("jones", str(ref), True)]

    def as_laurent(r: MultiRational):
        return r.to_laurent() if r.is_laurent() else None

    h = as_laurent(homfly_specialized(b, 2))
    rows.append(("homfly at a=v^2", str(h), h == ref))
    w = as_laurent(wrt_eval(b, 2, -1))
    rows.append(("wrt k=2 eta=-1", str(w), w == ref))
    chi = euler_characteristic(kh_poincare(b))
    rows.append(("khovanov euler characteristic", str(chi), chi == ref))
    s = kr_jones_series(kr(b, cutoff))
    rows.append(("kr euler characteristic at a=v^2", repr(s),
                 s.agrees(TruncatedVSeries.from_laurent(ref, s.cutoff))))
    return all(ok for _, _, ok in rows), rows


def _cmd_cross(cfg):
    targets = [parse_braid(t) for t, _ in CORPUS] if cfg.input == "corpus" else [_braid(cfg)]
    lines, data, all_ok = [], [], True
    for b in targets:
        ok, rows = cross_check(b, cfg.cutoff)
        all_ok &= ok
        lines.append(f"{b}: {'agree' if ok else 'MISMATCH'}")
        lines += [f"  {name}: {val}{'' if good else '   <-- differs'}" for name, val, good in rows]
        data.append({"braid": str(b), "agree": ok,
                     "pipelines": [{"name": n, "value": v, "agree": g} for n, v, g in rows]})
    return (EXIT_OK if all_ok else EXIT_INCONSISTENT), "\n".join(lines), data


def invariant_bundle(b: BraidWord, cutoff: int) -> dict:
    return {"jones": jones(b), "homfly": homfly(b), "khovanov": kh_poincare(b),
            "kr": kr(b, cutoff).series}


def moves_check(b: BraidWord, cutoff: int) -> tuple[bool, list[tuple[str, list[str]]]]:
    """Compare the invariants of ``b`` with those of every word one move away."""
    base = invariant_bundle(b, cutoff)
    report = []
    for m in enumerate_moves(b):
        other = invariant_bundle(m, cutoff)
        bad = []
        for name, val in base.items():
            ov = other[name]
            same = val.agrees(ov) if name == "kr" else val == ov
            if not same:
                bad.append(name)
        report.append((str(m), bad))
    return all(not bad for _, bad in report), report


def _cmd_moves(cfg):
    ok, report = moves_check(_braid(cfg), cfg.cutoff)
    lines = [f"{m}: {'invariant' if not bad else 'differs in ' + ', '.join(bad)}" for m, bad in report]
    data = [{"braid": m, "differs": bad} for m, bad in report]
    return (EXIT_OK if ok else EXIT_INCONSISTENT), "\n".join(lines) or "no moves", data


_DISPATCH = {
    "jones": _cmd_jones, "homfly": _cmd_homfly, "khovanov": _cmd_khovanov, "kr": _cmd_kr,
    "wrt": _cmd_wrt, "colored-jones": _cmd_colored, "web-eval": _cmd_web,
    "cross-check": _cmd_cross, "moves-check": _cmd_moves,
}


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one command; returns the exit code and the rendered output."""
    try:
        cfg.validate()
        code, text, data = _DISPATCH[cfg.command](cfg)
    except (BraidParseError, WebParseError, ConfigError) as exc:
        return EXIT_PARSE, f"error: {exc}"
    except ValueError as exc:
        # bad colours, labels outside 0..k and the like are input errors too
        return EXIT_PARSE, f"error: {exc}"
    if cfg.output == "json":
        out = {"command": cfg.command, "input": cfg.input, "result": data}
        if cfg.command in ("kr", "cross-check", "moves-check"):
            out["cutoff"] = cfg.cutoff
        if cfg.command == "cross-check" or cfg.command == "moves-check":
            out["ok"] = code == EXIT_OK
        return code, json.dumps(out, sort_keys=True)
    return code, text


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _colors(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad colour list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="linkhom", description="Link invariants and homologies of braid closures.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", help='braid word "n: i1 i2 ...", a web word (lines separated by ";" '
                                 'or "-" for stdin), or "corpus" for cross-check')
    p.add_argument("--k", type=int, default=2, help="rank for wrt and web-eval (default 2)")
    p.add_argument("--eta", type=int, default=-1, choices=(-1, 1), help="sign choice (default -1)")
    p.add_argument("--colors", type=_colors, default=None, help="colours per component, m1,m2,...")
    p.add_argument("--cutoff", type=int, default=None, help="v-degree cutoff for series")
    p.add_argument("--json", action="store_true", help="emit JSON")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    text = sys.stdin.read() if args.input == "-" else args.input
    try:
        cutoff = args.cutoff if args.cutoff is not None else default_cutoff()
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    cfg = RunConfig(args.command, text, args.k, args.eta, args.colors, cutoff,
                    "json" if args.json else "text")
    code, out = run(cfg)
    print(out, file=sys.stderr if code == EXIT_PARSE else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
