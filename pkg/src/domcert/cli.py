"""Command-line front end.

Exit codes: 0 true / verified, 1 false / rejected, 2 usage error,
3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import __version__
from .certificates import (
    CertificateError,
    build_det_certificate,
    build_dominance_certificate,
    build_vertex_certificate,
    build_wedge_certificate,
    load_any,
    verify_any,
)
from .cone import ConeError, decompose, dominance_cone, polytope_vertices, sigma, triangulate
from .lr import SupportCapExceeded, tensor_power_support, tensor_product
from .partition import (
    PartitionError,
    first_dominance_violation,
    parse_composition,
    parse_partition,
    scaled_dominance_leq,
)

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class CapError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    rank_cap: int = 8
    weight_cap: int = 64
    support_cap: int = 10**6
    fmt: str = "json"
    deep: bool = False
    jobs: int = 1
    out: str | None = None

    def __post_init__(self):
        if min(self.rank_cap, self.weight_cap, self.support_cap, self.jobs) < 1:
            raise PartitionError("caps and --jobs must be positive")


def _config(ns) -> RunConfig:
    return RunConfig(
        rank_cap=ns.rank_cap,
        weight_cap=ns.weight_cap,
        support_cap=ns.support_cap,
        fmt=ns.format,
        deep=ns.deep,
        jobs=ns.jobs,
        out=ns.out,
    )


def _part(text: str, ns, cfg: RunConfig):
    p = parse_partition(text, ns.rank)
    if p.d > cfg.rank_cap:
        raise CapError(f"rank {p.d} exceeds rank cap {cfg.rank_cap}")
    if p.weight > cfg.weight_cap:
        raise CapError(f"weight {p.weight} exceeds weight cap {cfg.weight_cap}")
    return p


def _emit(cfg: RunConfig, payload, text: str | None = None) -> None:
    if cfg.fmt == "json" or text is None:
        body = json.dumps(payload, sort_keys=True, indent=None if cfg.out is None else 1)
    else:
        body = text
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(body + "\n")
    else:
        print(body)


def cmd_dominance(ns, cfg: RunConfig) -> int:
    a, b = _part(ns.a, ns, cfg), _part(ns.b, ns, cfg)
    if ns.scaled:
        ok = scaled_dominance_leq(a, b)
        why = None if ok else "fails after scaling |b| a vs |a| b"
    else:
        why = first_dominance_violation(a, b)
        ok = why is None
    text = f"{a} ⪯ {b}: {'true' if ok else 'false'}" + ("" if ok else f" ({why})")
    _emit(cfg, {"a": list(a), "b": list(b), "scaled": ns.scaled, "leq": ok, "reason": why}, text)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_tensor(ns, cfg: RunConfig) -> int:
    a = _part(ns.a, ns, cfg)
    if ns.power is not None:
        if ns.b is not None:
            raise PartitionError("give either a second partition or --power, not both")
        sup = tensor_power_support(a, ns.power, multiplicities=not ns.support_only, cap=cfg.support_cap)
    else:
        if ns.b is None:
            raise PartitionError("tensor needs a second partition or --power")
        sup = tensor_product(a, _part(ns.b, ns, cfg))
        if len(sup) > cfg.support_cap:
            raise SupportCapExceeded(cfg.support_cap, len(sup))
    text = "\n".join(f"{p}: {m}" for p, m in ((p, sup.mult(p)) for p in sup))
    _emit(cfg, sup.to_json(), text)
    return EXIT_OK


def cmd_cone_vertices(ns, cfg: RunConfig) -> int:
    a = _part(ns.a, ns, cfg)
    verts = sorted(polytope_vertices(a), reverse=True)
    rows = [[str(x) for x in v] for v in verts]
    payload = {"base": list(a), "vertices": rows}
    if ns.triangulation:
        payload["subcones"] = [sc.to_json() for sc in triangulate(dominance_cone(a))]
    _emit(cfg, payload, "\n".join("(" + ", ".join(r) + ")" for r in rows))
    return EXIT_OK


def cmd_sigma(ns, cfg: RunConfig) -> int:
    a = _part(ns.a, ns, cfg)
    pts = sorted(sigma(a, cap=cfg.support_cap))
    _emit(cfg, [list(p) for p in pts], "\n".join(map(str, pts)))
    return EXIT_OK


def cmd_decompose(ns, cfg: RunConfig) -> int:
    a, b = _part(ns.a, ns, cfg), _part(ns.b, ns, cfg)
    dec = decompose(a, b)
    terms = " + ".join(f"{m}*{L}" for L, m in dec.multipliers) or "0"
    _emit(cfg, dec.to_json(), f"{b} = {dec.remainder} + {terms}")
    return EXIT_OK


def cmd_certify(ns, cfg: RunConfig) -> int:
    kind = ns.kind
    if kind == "wedge":
        if ns.d is None or ns.k is None or ns.m is None:
            raise PartitionError("wedge needs --d, --k and --m")
        if ns.d > cfg.rank_cap:
            raise CapError(f"rank {ns.d} exceeds rank cap {cfg.rank_cap}")
        cert = build_wedge_certificate(ns.d, ns.k, ns.m)
    elif kind == "det":
        cert = build_det_certificate(_part(_need(ns.a, "--a"), ns, cfg))
    elif kind == "vertex":
        cert = build_vertex_certificate(_part(_need(ns.a, "--a"), ns, cfg), parse_composition(_need(ns.L, "--L")))
    else:
        if ns.m is None:
            raise PartitionError("dominance needs --m")
        a, b = _part(_need(ns.a, "--a"), ns, cfg), _part(_need(ns.b, "--b"), ns, cfg)
        cert = build_dominance_certificate(a, b, ns.m, cap=cfg.support_cap)
    _emit(cfg, cert.to_json())
    return EXIT_OK


def _need(value, flag):
    if value is None:
        raise PartitionError(f"missing {flag}")
    return value


def cmd_verify(ns, cfg: RunConfig) -> int:
    try:
        with open(ns.file) as fh:
            data = json.load(fh)
        cert = load_any(data)
    except (OSError, json.JSONDecodeError) as exc:
        raise PartitionError(f"cannot read certificate: {exc}")
    except (KeyError, TypeError, ValueError) as exc:
        _emit(cfg, {"accepted": False, "message": f"malformed certificate: {exc!r}"})
        return EXIT_FALSE
    verdict = verify_any(cert, deep=cfg.deep, cap=cfg.support_cap)
    text = "accepted" if verdict else f"rejected: {verdict.message}"
    _emit(cfg, verdict.to_json(), text)
    return EXIT_OK if verdict else EXIT_FALSE


def cmd_selftest(ns, cfg: RunConfig) -> int:
    from .selftest import run_selftest

    rank = ns.rank if ns.rank is not None else 3
    if rank > cfg.rank_cap:
        raise CapError(f"rank {rank} exceeds rank cap {cfg.rank_cap}")
    if ns.weight > cfg.weight_cap:
        raise CapError(f"weight {ns.weight} exceeds weight cap {cfg.weight_cap}")
    report = run_selftest(rank, ns.weight, jobs=cfg.jobs)
    lines = [
        f"{name}: {s['checked']} checked, {s['failed']} failed" for name, s in sorted(report["suites"].items())
    ]
    _emit(cfg, report, "\n".join(lines))
    return EXIT_OK if report["ok"] else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank", type=int, default=None, help="pad partitions with zeros to this rank")
    common.add_argument("--rank-cap", type=int, default=8)
    common.add_argument("--weight-cap", type=int, default=64)
    common.add_argument("--support-cap", type=int, default=10**6)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--deep", action="store_true", help="re-derive add/blockwise steps by direct search")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--out", metavar="FILE")

    p = argparse.ArgumentParser(prog="domcert", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("dominance", parents=[common], help="compare two partitions in dominance order")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--scaled", action="store_true", help="compare |b| a with |a| b")
    s.set_defaults(func=cmd_dominance)

    s = sub.add_parser("tensor", parents=[common], help="LR product or tensor power")
    s.add_argument("a")
    s.add_argument("b", nargs="?")
    s.add_argument("--power", type=int)
    s.add_argument("--support-only", action="store_true")
    s.set_defaults(func=cmd_tensor)

    s = sub.add_parser("cone-vertices", parents=[common], help="vertices of the dominance polytope P(a)")
    s.add_argument("a")
    s.add_argument("--triangulation", action="store_true")
    s.set_defaults(func=cmd_cone_vertices)

    s = sub.add_parser("sigma", parents=[common], help="remainder set sigma(a)")
    s.add_argument("a")
    s.set_defaults(func=cmd_sigma)

    s = sub.add_parser("decompose", parents=[common], help="split b into sigma(a) + scaled generators")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("certify", parents=[common], help="build a containment certificate")
    s.add_argument("kind", choices=("wedge", "det", "vertex", "dominance"))
    s.add_argument("--a")
    s.add_argument("--b")
    s.add_argument("--L")
    s.add_argument("--d", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--m", type=int)
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("verify", parents=[common], help="verify a certificate JSON file")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("selftest", parents=[common], help="run the invariant grids")
    s.add_argument("--weight", type=int, default=3)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = _config(ns)
        return ns.func(ns, cfg)
    except (SupportCapExceeded, CapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (PartitionError, ConeError, CertificateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
