"""Command-line entry point: ``circuits``, ``atlas`` and ``diagram``.

Ground sets are read as ``{"n": ..., "points": [...]}`` JSON from a path or
from standard input (``-``).  Reports go to standard output as JSON; exact
scalars are strings so that nothing is lost on the way to a consumer.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .circuits import Circuit
from .exposing import Certificate, certify, decide_exposed
from .lattice import GroundSet, GroundSetError, parse_ground_set, to_document
from .powers import SignedPower
from .rays import CircuitRay, MonomialRay, SoncCone
from .verify import default_t_grid, numeric_spotcheck, unexposedness_probe, verify_certificate

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2
PROBE_THRESHOLD = Fraction(1, 10 ** 6)


@dataclass(frozen=True)
class AtlasConfig:
    samples: int = 64
    seed: int = 0
    probe: bool = False
    probe_k_max: int = 20
    jobs: int = 1


# -- serialization ---------------------------------------------------------------

def scalar_to_json(v):
    if isinstance(v, SignedPower):
        return {"sign": v.sign, "base": _q(v.base), "exp": str(v.exponent)}
    return _q(v)


def scalar_from_json(obj):
    if isinstance(obj, dict):
        return SignedPower(int(obj["sign"]), Fraction(obj["base"]), int(obj["exp"]))
    return Fraction(obj)


def _q(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def circuit_record(c: Circuit, reduced: bool) -> dict:
    return {
        "S": [list(a) for a in c.S],
        "beta": list(c.beta),
        "lambda": [_q(l) for l in c.lam],
        "parity": c.parity.value,
        "reduced": reduced,
    }


def ray_record(r) -> dict:
    if isinstance(r, MonomialRay):
        return {"id": r.ident, "kind": "monomial", "point": list(r.point)}
    return {"id": r.ident, "kind": "circuit", "S": [list(a) for a in r.circuit.S],
            "beta": list(r.circuit.beta), "sign": int(r.sign)}


def certificate_record(cert: Certificate) -> dict:
    return {
        "ray": cert.ray.ident,
        "lambda_used": cert.lambda_used,
        "layers": [[list(p) for p in sorted(layer)] for layer in cert.partition.layers],
        "values": [{"point": list(p), "value": scalar_to_json(v)} for p, v in cert.functional.values],
    }


# -- atlas -----------------------------------------------------------------------

@dataclass
class RunReport:
    ground_set: dict
    circuits: list
    lam: int
    rays: list
    decisions: list
    certificates: list
    verdicts: list
    probes: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    timing: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def payload(self) -> dict:
        """The deterministic part of the report (no wall-clock data)."""
        return {
            "ground_set": self.ground_set,
            "circuits": self.circuits,
            "lambda": self.lam,
            "rays": self.rays,
            "decisions": self.decisions,
            "certificates": self.certificates,
            "verdicts": self.verdicts,
            "probes": self.probes,
            "failures": self.failures,
            "ok": self.ok,
        }

    def to_json(self, with_timing: bool = True) -> str:
        doc = self.payload()
        if with_timing:
            doc["timing"] = self.timing
        return json.dumps(doc, indent=2, sort_keys=False)


def _ray_work(args):
    """Certificate, exact verdict and numeric spot-check for one exposed ray."""
    r, A, cone, cfg = args
    cert = certify(r, A, cone)
    verdict = verify_certificate(cert, A, cone)
    samples = numeric_spotcheck(cert, A, cfg.samples, seed=cfg.seed, cone=cone) if cfg.samples > 0 else []
    return cert, verdict, samples


def _probe_work(args):
    gamma, witness, A, cone, k_max = args
    return unexposedness_probe(gamma, witness, A, default_t_grid(k_max), cone)


def _map(fn, items, jobs):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def run_atlas(A: GroundSet, cfg: AtlasConfig = AtlasConfig()) -> RunReport:
    timing = {}
    t0 = time.perf_counter()
    cone = SoncCone.build(A)
    reduced = set(cone.reduced)
    timing["circuits"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    decisions = [decide_exposed(r, A, cone) for r in cone.rays]
    timing["decisions"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    exposed = [d.ray for d in decisions if d.exposed]
    results = _map(_ray_work, [(r, A, cone, cfg) for r in exposed], cfg.jobs)
    timing["certificates"] = time.perf_counter() - t0

    failures, verdicts, certs = [], [], []
    for cert, verdict, samples in results:
        certs.append(certificate_record(cert))
        bad = [c for c in verdict.failures]
        disagree = [s for s in samples if s.disagrees]
        failures += [f"{cert.ray.ident}: {c.kind} on {c.target}: {c.outcome}" for c in bad]
        failures += [f"{cert.ray.ident}: numeric spot-check disagrees on {s.family}" for s in disagree]
        verdicts.append({
            "ray": cert.ray.ident,
            "passed": verdict.passed,
            "checks": len(verdict.checks),
            "failures": [{"target": c.target, "kind": c.kind, "outcome": c.outcome} for c in bad],
            "spotcheck": [{"family": s.family, "exact_ok": s.exact_ok,
                           "min_normalized": float(f"{s.min_normalized:.6g}"), "disagrees": s.disagrees}
                          for s in samples],
        })

    probes = []
    if cfg.probe:
        t0 = time.perf_counter()
        todo = [(d.ray.point, d.witness, A, cone, cfg.probe_k_max) for d in decisions if not d.exposed]
        for res in _map(_probe_work, todo, cfg.jobs):
            ok = res.final_margin <= PROBE_THRESHOLD and res.monotone
            ident = MonomialRay(res.gamma).ident
            if not ok:
                failures.append(f"{ident}: probe margin {float(res.final_margin):.3g}, monotone={res.monotone}")
            probes.append({
                "ray": ident,
                "witness": str(res.witness),
                "t": [_q(t) for t in res.ts],
                "margins": [_q(m) for m in res.margins],
                "final_margin": float(res.final_margin),
                "monotone": res.monotone,
                "ok": ok,
            })
        timing["probes"] = time.perf_counter() - t0

    return RunReport(
        ground_set=to_document(A),
        circuits=[circuit_record(c, c in reduced) for c in cone.circuits],
        lam=cone.Lam,
        rays=[ray_record(r) for r in cone.rays],
        decisions=[{"ray": d.ray.ident, "exposed": d.exposed,
                    "witness": None if d.witness is None else str(d.witness)} for d in decisions],
        certificates=certs,
        verdicts=verdicts,
        probes=probes,
        failures=failures,
        timing={k: round(v, 6) for k, v in timing.items()},
    )


# -- diagram ---------------------------------------------------------------------

def render_svg(A: GroundSet, cone: Optional[SoncCone] = None, cell: int = 40) -> str:
    if A.n != 2:
        raise GroundSetError("diagram requires n=2")
    cone = SoncCone.build(A) if cone is None else cone
    reduced = set(cone.reduced)
    xmax = max(p[0] for p in A.points) + 1
    ymax = max(p[1] for p in A.points) + 1
    w, h = (xmax + 1) * cell, (ymax + 1) * cell

    def xy(p):
        return (p[0] + 0.5) * cell + cell / 2, h - ((p[1] + 0.5) * cell + cell / 2)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:g}" height="{h:g}" viewBox="0 0 {w:g} {h:g}">',
           '<rect width="100%" height="100%" fill="white"/>']
    for i in range(xmax + 1):
        for j in range(ymax + 1):
            x, y = xy((i, j))
            out.append(f'<circle cx="{x:g}" cy="{y:g}" r="1.5" fill="#bbb"/>')
    for c in cone.circuits:
        pts = " ".join(f"{x:g},{y:g}" for x, y in map(xy, c.S))
        cls = "reduced" if c in reduced else "circuit"
        stroke = 'stroke="#c03" stroke-width="2.5"' if c in reduced else 'stroke="#888" stroke-width="1" stroke-dasharray="4 3"'
        out.append(f'<polygon class="{cls}" data-circuit="{c}" points="{pts}" fill="none" {stroke}/>')
    for p in A.points:
        x, y = xy(p)
        even = all(v % 2 == 0 for v in p)
        fill = "black" if even else "white"
        kind = "even" if even else "odd"
        out.append(f'<circle class="{kind}" cx="{x:g}" cy="{y:g}" r="5" fill="{fill}" stroke="black" stroke-width="1.5"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


# -- entry point -----------------------------------------------------------------

def _read(path: str) -> GroundSet:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise GroundSetError(f"cannot read {path}: {exc.strerror}") from None
    return parse_ground_set(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="soncexpose", description="Exposed extreme rays of SONC cones.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("circuits", help="list circuits with barycentric coordinates")
    p.add_argument("input", nargs="?", default="-")

    p = sub.add_parser("atlas", help="decide, certify and verify every extreme ray")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--probe", action="store_true", help="run unexposedness LP probes")
    p.add_argument("--samples", type=int, default=AtlasConfig.samples, help="numeric spot-check samples per family")
    p.add_argument("--seed", type=int, default=AtlasConfig.seed)
    p.add_argument("--jobs", type=int, default=AtlasConfig.jobs, help="worker processes for per-ray work")
    p.add_argument("--no-timing", action="store_true", help="omit the timing field")

    p = sub.add_parser("diagram", help="SVG plot of a planar ground set")
    p.add_argument("input", nargs="?", default="-")
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        A = _read(args.input)
        if args.command == "diagram" and A.n != 2:
            raise GroundSetError("diagram requires n=2")
    except GroundSetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if args.command == "circuits":
        cone = SoncCone.build(A)
        reduced = set(cone.reduced)
        doc = {"ground_set": to_document(A), "lambda": cone.Lam,
               "circuits": [circuit_record(c, c in reduced) for c in cone.circuits]}
        print(json.dumps(doc, indent=2))
        return EXIT_OK

    if args.command == "diagram":
        sys.stdout.write(render_svg(A))
        return EXIT_OK

    cfg = AtlasConfig(samples=args.samples, seed=args.seed, probe=args.probe, jobs=max(1, args.jobs))
    report = run_atlas(A, cfg)
    print(report.to_json(with_timing=not args.no_timing))
    if not report.ok:
        for f in report.failures:
            print(f"verification failure: {f}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
