"""Command line front end: one subcommand per operation, JSON on stdout."""

from __future__ import annotations

import argparse
import io
import json
import sys
from contextlib import redirect_stderr
from dataclasses import dataclass, field

from . import census, conway, garside, generator, geodesy, winding
from .render import render_ascii
from .words import BraidWord, WordError, classify, parse_word, render_word, stats

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_INTERNAL = 4

WORD_COMMANDS = ("classify", "stats", "nf", "geodesic", "rset", "conway", "order", "certify", "winding", "render")


@dataclass
class CommandResult:
    status: int
    payload: object = None
    diagnostics: str = ""
    schema: int = SCHEMA_VERSION
    text: str | None = field(default=None, repr=False)

    def render(self) -> str:
        if self.text is not None:
            return self.text
        if isinstance(self.payload, list):
            return "\n".join(json.dumps(p) for p in self.payload)
        return json.dumps(self.payload)


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(f"{self.prog}: {message}")


def _pattern(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad pattern {text!r}") from None
    if any(v not in (-1, 0, 1) for v in vals):
        raise argparse.ArgumentTypeError("pattern entries must be 1, -1 or 0")
    return vals


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-n", "--strands", type=int, required=True)
    common.add_argument("--radius", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--threads", type=int, help="accepted; computation is single-threaded")
    common.add_argument("--ball-cache", help="directory for ball tables (env BRAID_BALL_CACHE)")

    p = _Parser(prog="geobraid", description="Braid words: normal forms, geodesics, invariants.")
    p.add_argument("--version", action="version", version=f"geobraid schema {SCHEMA_VERSION}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in WORD_COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("word", nargs="?", default="-", help="word, or '-' to read one per line from stdin")
        if name == "conway":
            sp.add_argument("--inputs", type=_ints, help="endpoint numbers on top, left to right")
            sp.add_argument("--outputs", type=_ints, help="endpoint numbers at the bottom")
        if name == "order":
            sp.add_argument("--limit", type=int, default=10)
        if name == "winding":
            sp.add_argument("--k", type=int, default=3)
            sp.add_argument("--certificate", help="certificate JSON file to verify instead")

    sp = sub.add_parser("equal", parents=[common])
    sp.add_argument("u")
    sp.add_argument("v")

    sp = sub.add_parser("generate", parents=[common])
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--x", type=_ints, required=True, help="shadow sizes x_1..x_{k+1}")

    sp = sub.add_parser("census", parents=[common])
    sp.add_argument("--kinds", default="gamma_elements,gamma_geodesics")
    sp.add_argument("--csv", action="store_true")

    sp = sub.add_parser("scan", parents=[common])
    sp.add_argument("conjecture", choices=census.SCAN_IDS)
    sp.add_argument("--pattern", type=_pattern, action="append")
    sp.add_argument("--conj-bound", type=int, default=2)
    sp.add_argument("--checkpoint")

    sub.add_parser("ball", parents=[common])
    return p


def _ball(args, radius: int) -> geodesy.BallTable:
    return geodesy.cached_ball(args.strands, radius, args.ball_cache)


def _word_radius(args, w: BraidWord, extra: int = 0) -> int:
    return args.radius if args.radius is not None else len(w) + extra


def _nf_payload(w: BraidWord) -> dict:
    cf = garside.canonical_form(w)
    return {
        "delta_power": cf.delta_power,
        "factors": [[q + 1 for q in a] for a in cf.factors],
        "word": render_word(cf.to_word()),
    }


def _one_word(args, w: BraidWord):
    cmd = args.command
    if cmd == "classify":
        f = classify(w)
        return {
            "positive": f.positive,
            "negative": f.negative,
            "homogeneous": list(f.homogeneous.entries) if f.homogeneous else None,
            "alternating": f.alternating,
            "reduced": f.reduced,
            "degenerate": f.degenerate,
        }
    if cmd == "stats":
        s = stats(w)
        return {"p": s.p, "n": s.n, "exp": s.exp}
    if cmd == "nf":
        return _nf_payload(w)
    if cmd == "geodesic":
        t = _ball(args, _word_radius(args, w))
        ell = geodesy.length(w, t)
        return {"geodesic": ell == len(w), "length": ell}
    if cmd == "rset":
        t = _ball(args, _word_radius(args, w))
        rs = geodesy.r_set(w, t)
        return {
            "rset": [render_word(BraidWord(w.strands, (s,))) for s in rs.sorted()],
            "length": t.word_length(w),
            "dead_end": geodesy.is_dead_end(w, t),
        }
    if cmd == "conway":
        if (args.inputs is None) != (args.outputs is None):
            raise _Usage("give both --inputs and --outputs, or neither")
        if args.inputs is None:
            ordering = conway.standard_ordering(w.strands)
        else:
            ordering = conway.Ordering(args.inputs, args.outputs)
        poly = conway.conway(conway.OrderedDiagram(w, ordering))
        return {
            "coefficients": list(poly.trimmed()),
            "degree": poly.degree,
            "ordering": {"inputs": list(ordering.inputs), "outputs": list(ordering.outputs)},
        }
    if cmd == "order":
        found = list(conway.homogeneous_orderings(w, limit=args.limit))
        return {
            "homogeneous": bool(found),
            "orderings": [{"inputs": list(o.inputs), "outputs": list(o.outputs)} for o in found],
        }
    if cmd == "certify":
        cert = conway.certify_minimal_homogeneous(w)
        if cert is None:
            return {"certified": False, "reason": "word is not homogeneous"}
        return {
            "certified": cert.geodesic,
            "word": render_word(w),
            "pattern": list(cert.pattern.entries),
            "ordering": {"inputs": list(cert.ordering.inputs), "outputs": list(cert.ordering.outputs)},
            "degree": cert.degree,
            "leading_coefficient": cert.leading_coefficient,
        }
    if cmd == "winding":
        cert = winding.regular_certificate(w, args.k)
        tables = None
        if args.k >= 4:
            tables = _ball(args, args.radius if args.radius is not None else len(w))
        report = winding.check_winding(cert, tables)
        return {"report": report.to_dict(), "certificate": cert.to_dict()}
    if cmd == "render":
        return {"text": render_ascii(w)}
    raise _Usage(f"unknown command {cmd}")


def _dispatch(args, stdin) -> CommandResult:
    cmd = args.command
    n = args.strands
    if cmd in WORD_COMMANDS:
        if cmd == "winding" and args.certificate:
            with open(args.certificate) as fh:
                cert = winding.WindingCertificate.from_json(fh.read())
            t = None
            if args.radius is not None:
                t = _ball(args, args.radius)
            report = winding.check_winding(cert, t)
            return CommandResult(EXIT_OK, report.to_dict())
        if args.word == "-":
            lines = [ln.strip() for ln in stdin if ln.strip()]
            payload = [_one_word(args, parse_word(ln, n)) for ln in lines]
            if cmd == "render":
                return CommandResult(EXIT_OK, payload, text="\n\n".join(p["text"] for p in payload))
            return CommandResult(EXIT_OK, payload)
        payload = _one_word(args, parse_word(args.word, n))
        if cmd == "render":
            return CommandResult(EXIT_OK, payload, text=payload["text"])
        return CommandResult(EXIT_OK, payload)
    if cmd == "equal":
        return CommandResult(EXIT_OK, {"equal": garside.equal(parse_word(args.u, n), parse_word(args.v, n))})
    if cmd == "generate":
        spec = generator.GeneratorSpec(n, args.k, args.x, seed=args.seed if args.seed is not None else 0)
        out = generator.construct_W(spec)
        return CommandResult(
            EXIT_OK,
            {
                "word": render_word(out.word),
                "length": len(out.word),
                "routing_lengths": list(out.routing_lengths),
                "certificate": out.certificate.to_dict(),
            },
        )
    radius = args.radius if args.radius is not None else geodesy.DEFAULT_RADIUS.get(n, 4)
    if cmd == "ball":
        t = _ball(args, radius)
        return CommandResult(EXIT_OK, {"strands": n, "radius": radius, "layers": t.layer_sizes})
    if cmd == "census":
        kinds = [k.strip() for k in args.kinds.split(",") if k.strip()]
        series = []
        t = None
        for kind in kinds:
            if kind == "trace":
                series.append(census.trace_growth(n, radius)[0])
                continue
            t = t or _ball(args, radius)
            if kind == "gamma_elements":
                series.append(census.element_growth(n, radius, t))
            elif kind == "gamma_geodesics":
                series.append(census.geodesic_growth(n, radius, t))
            elif kind in ("positive", "alternating", "homogeneous"):
                series.append(census.class_growth(n, radius, kind, t))
            else:
                raise _Usage(f"unknown series kind {kind!r}")
        if args.csv:
            return CommandResult(EXIT_OK, [s.to_dict() for s in series], text=census.series_csv(series).rstrip("\n"))
        return CommandResult(EXIT_OK, {"series": [s.to_dict() for s in series]})
    if cmd == "scan":
        t = _ball(args, radius)
        report = census.conjecture_scan(
            args.conjecture,
            n,
            radius,
            t,
            patterns=args.pattern,
            conj_bound=args.conj_bound,
            checkpoint=args.checkpoint,
        )
        return CommandResult(EXIT_OK, report.to_dict())
    raise _Usage(f"unknown command {cmd}")


def run(argv, stdin=None) -> CommandResult:
    stdin = sys.stdin if stdin is None else stdin
    err = io.StringIO()
    try:
        with redirect_stderr(err):
            args = build_parser().parse_args(argv)
        diag = "--threads is accepted but ignored; runs are single-threaded\n" if args.threads else ""
        result = _dispatch(args, stdin)
        result.diagnostics = diag + result.diagnostics
        return result
    except SystemExit as exc:  # --help / --version
        return CommandResult(exc.code or 0, None, err.getvalue())
    except (_Usage, WordError, argparse.ArgumentTypeError, conway.OrderingError, ValueError) as exc:
        return CommandResult(EXIT_USAGE, {"error": str(exc)}, str(exc))
    except (geodesy.OutOfBall, geodesy.BallBudgetExceeded, conway.StateBudgetExceeded, MemoryError) as exc:
        return CommandResult(EXIT_BUDGET, {"error": str(exc)}, str(exc))
    except (generator.ConstructionError, census.TraceDisagreement, winding.CertificateError, AssertionError) as exc:
        return CommandResult(EXIT_INTERNAL, {"error": str(exc)}, str(exc))


def main(argv=None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    if result.diagnostics:
        sys.stderr.write(result.diagnostics if result.diagnostics.endswith("\n") else result.diagnostics + "\n")
    if result.payload is not None or result.text is not None:
        print(result.render())
    return result.status


if __name__ == "__main__":
    sys.exit(main())
