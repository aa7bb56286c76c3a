"""Command-line front end: ``forcinglab {catalog,classify,poly,search,verify}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path

from . import __version__
from .catalog import UnknownTournament, catalog, catalog_names
from .certificate import Certificate, MalformedCertificate, Rejected, frac_str
from .certify import (
    ClassificationError,
    classify_five_vertex,
    classify_six_vertex,
    table_csv,
    table_json,
    verify,
)
from .hsearch import SearchConfig, certify_search_result, local_search
from .stepton import labelled_threshold
from .sympoly import DOMAIN, builtin_matrices, d_star_poly, find_exceeding, value_table
from .tournament import (
    automorphism_count,
    format_code,
    has_twins,
    is_strongly_connected,
    is_transitive,
)

log = logging.getLogger("forcinglab")

EXIT_OK, EXIT_REJECT, EXIT_USAGE = 0, 1, 2
DEFAULT_SEED = 0


@dataclass
class RunManifest:
    command: str
    arguments: dict
    seed: int | None
    tool_version: str = __version__
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec="seconds"))
    outputs: list[str] = field(default_factory=list)

    def write(self, directory: Path) -> Path:
        path = directory / "manifest.json"
        path.write_text(json.dumps(asdict(self), indent=2) + "\n")
        return path


class CertificateWriter:
    """Single writer for a JSON-lines certificate batch."""

    def __init__(self, directory: Path, manifest: RunManifest, name: str = "certificates.jsonl"):
        directory.mkdir(parents=True, exist_ok=True)
        self.path = directory / name
        self.manifest = manifest
        self._fh = self.path.open("a", encoding="utf-8")
        manifest.outputs.append(str(self.path))

    def write(self, cert: Certificate) -> None:
        d = cert.to_dict()
        d["manifest"] = "manifest.json"
        self._fh.write(json.dumps(d) + "\n")

    def close(self) -> None:
        self._fh.close()


def _properties(t) -> dict:
    return {
        "code": format_code(t),
        "k": t.k,
        "transitive": is_transitive(t),
        "strongly_connected": is_strongly_connected(t),
        "twins": has_twins(t),
        "aut": automorphism_count(t) if t.k <= 16 else None,
    }


def cmd_catalog(args) -> int:
    names = [args.name] if args.name else catalog_names()
    rows = []
    for name in names:
        try:
            t = catalog(name)
        except UnknownTournament:
            print(f"error: unknown tournament {name!r}", file=sys.stderr)
            return EXIT_USAGE
        rows.append({"name": name, **_properties(t)})
    if args.name:
        r = rows[0]
        print(r["code"])
        print(
            f"k={r['k']} transitive={int(r['transitive'])} strongly_connected={int(r['strongly_connected'])} "
            f"twins={int(r['twins'])} aut={r['aut']}"
        )
        return EXIT_OK
    print(f"{'name':8} {'k':>2} {'trans':>5} {'strong':>6} {'twins':>5} {'aut':>4}  code")
    for r in rows:
        print(
            f"{r['name']:8} {r['k']:>2} {int(r['transitive']):>5} {int(r['strongly_connected']):>6} "
            f"{int(r['twins']):>5} {r['aut']:>4}  {r['code']}"
        )
    return EXIT_OK


def _emit(text: str, output: str | None, manifest: RunManifest) -> None:
    if output:
        Path(output).write_text(text)
        manifest.outputs.append(output)
    else:
        sys.stdout.write(text)


def cmd_classify(args) -> int:
    manifest = RunManifest("classify", {"n": args.n, "out": args.out}, None)
    writer = CertificateWriter(Path(args.cert_dir), manifest) if args.cert_dir else None
    try:
        if args.n == 6:
            try:
                rows = classify_six_vertex()
            except ClassificationError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_REJECT
            if args.out == "csv":
                text = table_csv(rows)
            else:
                payload = json.loads(table_json(rows))
                text = json.dumps({"manifest": "manifest.json", "rows": payload}, indent=2) + "\n"
            _emit(text, args.output, manifest)
            if writer:
                for r in rows:
                    for c in r.certificates:
                        writer.write(c)
            mismatched = [r.code for r in rows if not r.matches_reference]
            if mismatched:
                log.warning("rows differing from the reference table: %s", mismatched)
        else:
            entries = classify_five_vertex()
            if args.out == "csv":
                buf = io.StringIO()
                w = csv.writer(buf, lineterminator="\n")
                w.writerow(["code", "name", "status", "reason"])
                for e in entries:
                    w.writerow([e.code, e.name, e.status, e.certificate.reason])
                text = buf.getvalue()
            else:
                text = json.dumps(
                    {
                        "manifest": "manifest.json",
                        "rows": [
                            {"code": e.code, "name": e.name, "status": e.status, "certificate": e.certificate.to_dict()}
                            for e in entries
                        ],
                    },
                    indent=2,
                ) + "\n"
            _emit(text, args.output, manifest)
            if writer:
                for e in entries:
                    writer.write(e.certificate)
    finally:
        if writer:
            writer.close()
            manifest.write(Path(args.cert_dir))
    return EXIT_OK


def cmd_poly(args) -> int:
    matrices = builtin_matrices()
    if args.matrix not in matrices:
        print(f"error: unsupported matrix {args.matrix!r}; choose from {sorted(matrices)}", file=sys.stderr)
        return EXIT_USAGE
    try:
        h = catalog(args.pattern)
    except UnknownTournament:
        print(f"error: unknown tournament {args.pattern!r}", file=sys.stderr)
        return EXIT_USAGE
    p = d_star_poly(h, matrices[args.matrix])
    threshold = labelled_threshold(h.k)
    step = Fraction(args.grid_step)
    grid = int((DOMAIN[1] - DOMAIN[0]) / step)
    x = find_exceeding(p, threshold, grid=grid)
    print(f"d*({args.pattern}, {args.matrix}) = {p}")
    print(f"threshold = {frac_str(threshold)}")
    if x is None:
        print("no grid point exceeds the threshold")
    else:
        print(f"exceeds at x = {frac_str(x)} (~{float(x):.5f}): value {frac_str(p(x))} (~{float(p(x)):.9f})")
    if args.dump:
        with open(args.dump, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["x", "value"])
            for xv, val in value_table(p, points=args.dump_points):
                w.writerow([float(xv), float(val)])
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        h = catalog(args.pattern)
    except UnknownTournament:
        print(f"error: unknown tournament {args.pattern!r}", file=sys.stderr)
        return EXIT_USAGE
    try:
        cfg = SearchConfig(
            h,
            args.size,
            restarts=args.restarts,
            max_plateau_steps=args.plateau,
            seed=args.seed,
            warm_start=not args.no_warm_start,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    result = local_search(cfg)
    print(f"best host ({args.size} vertices): {format_code(result.host)}")
    print(f"copies: {result.copies}  restarts: {len(result.restarts)}  flips: {result.total_flips}")
    manifest = RunManifest(
        "search",
        {"pattern": args.pattern, "size": args.size, "restarts": args.restarts, "plateau": args.plateau},
        args.seed,
    )
    cert = None
    try:
        cert = certify_search_result(h, result.host)
        print(f"certificate: ACCEPT ({cert.dstar.numerator} >= {frac_str(cert.threshold)})")
    except Rejected as exc:
        print(f"certificate: REJECTED ({exc})")
    if args.cert_dir:
        out = Path(args.cert_dir)
        writer = CertificateWriter(out, manifest)
        if cert is not None:
            writer.write(cert)
        writer.close()
        (out / "host.txt").write_text(format_code(result.host) + "\n")
        manifest.outputs.append(str(out / "host.txt"))
        manifest.write(out)
    return EXIT_OK


def _load_certificates(path: Path):
    """Yield (label, certificate-or-error) pairs from a JSON or JSON-lines file."""
    text = path.read_text(encoding="utf-8")
    stripped = text.strip()
    if not stripped:
        return
    try:
        whole = json.loads(stripped)
    except json.JSONDecodeError:
        whole = None
    if isinstance(whole, dict):
        yield "1", whole
        return
    if isinstance(whole, list):
        for i, item in enumerate(whole, 1):
            yield str(i), item
        return
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            yield str(lineno), json.loads(line)
        except json.JSONDecodeError as exc:
            yield str(lineno), MalformedCertificate(f"line {lineno}: {exc}")


def cmd_verify(args) -> int:
    path = Path(args.path)
    if not path.exists():
        print(f"error: no such file {path}", file=sys.stderr)
        return EXIT_USAGE
    total = rejected = 0
    for label, item in _load_certificates(path):
        total += 1
        if isinstance(item, Exception):
            rejected += 1
            print(f"REJECT [{label}] {item}")
            continue
        result = verify(item)
        tag = "ACCEPT" if result.accepted else "REJECT"
        head = f"{item.get('reason', '?')} {item.get('tournament', '?')}" if isinstance(item, dict) else ""
        print(f"{tag} [{label}] {head}")
        if not result.accepted:
            rejected += 1
            print("    " + result.trace[-1])
        elif args.trace:
            for step in result.trace:
                print("    " + step)
    if total == 0:
        print("warning: no certificates found", file=sys.stderr)
    print(f"{total - rejected}/{total} accepted")
    return EXIT_REJECT if rejected else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="forcinglab", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list named tournaments and their properties")
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("classify", help="classify all non-transitive 5- or 6-vertex tournaments")
    p.add_argument("--n", type=int, choices=(5, 6), default=6)
    p.add_argument("--out", choices=("csv", "json"), default="csv")
    p.add_argument("--output", help="write the table here instead of stdout")
    p.add_argument("--cert-dir", help="directory for certificates.jsonl and manifest.json")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("poly", help="print d*(H, M_x) and search for x beating 2^-C(k,2)")
    p.add_argument("pattern")
    p.add_argument("matrix", help="A_x, B_x or C_x")
    p.add_argument("--grid-step", default="1/10000", help="grid spacing over [-1/2, 1/2]")
    p.add_argument("--dump", help="write (x, value) samples as CSV")
    p.add_argument("--dump-points", type=int, default=201)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("search", help="hill-climb for a host with many copies of a pattern")
    p.add_argument("pattern")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--restarts", type=int, default=10)
    p.add_argument("--plateau", type=int, default=50, help="sideways moves allowed per climb")
    p.add_argument("--no-warm-start", action="store_true", help="never start from a Paley tournament")
    p.add_argument("--cert-dir")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="re-check certificates from a JSON or JSON-lines file")
    p.add_argument("path")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
