"""Command-line client for the toolkit.

Every subcommand builds the same request model the HTTP service accepts and
dispatches it either in process (default) or to a running server via
--server URL.  The resolved configuration, defaults and seed included, is
printed before any work so runs are self-describing; errors come back as a
single machine-parsable line on stderr and a nonzero exit status.
"""

from __future__ import annotations

import argparse
import sys

import httpx

from .service import app as service
from .service.schemas import (
    ConstructRequest,
    ConstructResponse,
    DecodeCheckRequest,
    DecodeCheckResponse,
    GvRequest,
    GvResponse,
    GvScanRequest,
    GvScanResponse,
    RatesRequest,
    RatesResponse,
    SimulateRequest,
    SimulateResponse,
    SphereRequest,
    SphereResponse,
    WitnessRequest,
    WitnessResponse,
)


class RemoteError(ValueError):
    pass


def _dispatch(server: str | None, path: str, req, resp_model, handler):
    if not server:
        return handler(req)
    url = server.rstrip("/") + path
    resp = httpx.post(url, json=req.model_dump(), timeout=600.0)
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail")
        except Exception:
            detail = resp.text
        raise RemoteError(f"{url} returned {resp.status_code}: {detail}")
    return resp_model.model_validate(resp.json())


def _print_config(cmd: str, args: argparse.Namespace, fields: list[str]) -> None:
    parts = [f"{f}={getattr(args, f)}" for f in fields]
    parts.append(f"server={args.server or 'local'}")
    print(f"config: {cmd} " + " ".join(parts))


def _cmd_sphere(args) -> int:
    _print_config("sphere", args, ["p", "n", "d", "method"])
    req = SphereRequest(p=args.p, n=args.n, d=args.d, method=args.method)
    resp = _dispatch(
        args.server, "/sphere", req, SphereResponse, service.handle_sphere
    )
    if args.method in ("formula", "all"):
        print(
            "formula: n/a (d >= p/2)" if resp.formula is None else f"formula: {resp.formula}"
        )
    if resp.dp is not None:
        print(f"dp: {resp.dp}")
    if resp.bound is not None:
        print(f"bound: {resp.bound}")
    return 0


def _cmd_gv(args) -> int:
    _print_config("gv", args, ["p", "n", "k1", "k2", "dx", "dz", "tightened"])
    req = GvRequest(
        p=args.p, n=args.n, k1=args.k1, k2=args.k2,
        d_x=args.dx, d_z=args.dz, tightened=args.tightened,
    )
    resp = _dispatch(args.server, "/gv", req, GvResponse, service.handle_gv)
    print(
        f"lhs = {resp.lhs_numerator}/{resp.lhs_denominator} (~{resp.lhs_float:.6f})"
    )
    print(f"exists: {'yes -> ' + resp.code_params if resp.exists else 'no'}")
    return 0


def _cmd_gv_scan(args) -> int:
    _print_config("gv-scan", args, ["p", "n", "dx", "dz", "tightened"])
    req = GvScanRequest(
        p=args.p, n=args.n, d_x=args.dx, d_z=args.dz, tightened=args.tightened
    )
    resp = _dispatch(
        args.server, "/gv-scan", req, GvScanResponse, service.handle_gv_scan
    )
    if not resp.found:
        print("no certified parameters")
        return 0
    b = resp.best
    print(
        f"best: k1={b.k1} k2={b.k2} dimension={resp.dimension} "
        f"lhs={b.lhs_numerator}/{b.lhs_denominator} -> {b.code_params}"
    )
    return 0


def _cmd_rates(args) -> int:
    _print_config("rates", args, ["p", "delta_from", "delta_to", "delta_step", "out"])
    req = RatesRequest(
        p=args.p,
        delta_from=args.delta_from,
        delta_to=args.delta_to,
        delta_step=args.delta_step,
    )
    resp = _dispatch(
        args.server, "/rates", req, RatesResponse, service.handle_rates
    )
    if args.out:
        with open(args.out, "w") as f:
            f.write(resp.csv)
        print(f"wrote {len(resp.points)} points to {args.out}")
    else:
        print(resp.csv, end="")
    return 0


def _cmd_construct(args) -> int:
    _print_config("construct", args, ["p", "n", "t", "out"])
    req = ConstructRequest(p=args.p, n=args.n, t=args.t)
    resp = _dispatch(
        args.server, "/construct", req, ConstructResponse,
        service.handle_construct,
    )
    print(resp.report_text, end="")
    if args.out:
        with open(args.out, "w") as f:
            f.write(resp.stabilizer_text)
        print(f"wrote stabilizer generator to {args.out}")
    return 0


def _cmd_decode_check(args) -> int:
    _print_config("decode-check", args, ["p", "n", "t"])
    req = DecodeCheckRequest(p=args.p, n=args.n, t=args.t)
    resp = _dispatch(
        args.server, "/decode-check", req, DecodeCheckResponse,
        service.handle_decode_check,
    )
    print(resp.message)
    return 0 if resp.all_exact else 1


def _cmd_simulate(args) -> int:
    _print_config(
        "simulate", args, ["p", "n", "t", "alpha", "beta", "trials", "seed", "out"]
    )
    req = SimulateRequest(
        p=args.p, n=args.n, t=args.t, alpha_c=args.alpha, beta_c=args.beta,
        trials=args.trials, seed=args.seed,
    )
    resp = _dispatch(
        args.server, "/simulate", req, SimulateResponse,
        service.handle_simulate,
    )
    print(resp.csv, end="")
    print(f"predicted joint (independent sides): {resp.predicted_joint:.6f}")
    if args.out:
        with open(args.out, "w") as f:
            f.write(resp.csv)
        print(f"wrote results to {args.out}")
    return 0


def _cmd_witness_search(args) -> int:
    _print_config(
        "witness-search", args,
        ["p", "n", "k1", "k2", "dx", "dz", "trials", "seed", "out"],
    )
    req = WitnessRequest(
        p=args.p, n=args.n, k1=args.k1, k2=args.k2, d_x=args.dx, d_z=args.dz,
        trials=args.trials, seed=args.seed,
    )
    resp = _dispatch(
        args.server, "/witness-search", req, WitnessResponse,
        service.handle_witness,
    )
    if not resp.found:
        print(f"no witness in {resp.trials_used} trials")
        return 1
    print(
        f"witness after {resp.trials_used} trial(s): "
        f"d_x={'unbounded' if resp.d_x is None else resp.d_x} "
        f"d_z={'unbounded' if resp.d_z is None else resp.d_z}"
    )
    body = resp.c1_text + "\n" + resp.c2_text
    if args.out:
        with open(args.out, "w") as f:
            f.write(body)
        print(f"wrote c1 and c2 generators to {args.out}")
    else:
        print(body, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leeqec",
        description="Lee-metric CSS code toolkit (thin client; see --server)",
    )
    parser.add_argument(
        "--server",
        default=None,
        help="base URL of a running service; default runs in process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("sphere", help="Lee ball sizes")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-d", type=int, required=True)
    sp.add_argument(
        "--method", choices=["formula", "dp", "bound", "all"], default="all"
    )
    sp.set_defaults(func=_cmd_sphere)

    g = sub.add_parser("gv", help="existence verdict for one parameter set")
    g.add_argument("-p", type=int, required=True)
    g.add_argument("-n", type=int, required=True)
    g.add_argument("--k1", type=int, required=True)
    g.add_argument("--k2", type=int, required=True)
    g.add_argument("--dx", type=int, required=True)
    g.add_argument("--dz", type=int, required=True)
    g.add_argument("--tightened", action="store_true")
    g.set_defaults(func=_cmd_gv)

    gs = sub.add_parser("gv-scan", help="best certified (k1, k2) at fixed distances")
    gs.add_argument("-p", type=int, required=True)
    gs.add_argument("-n", type=int, required=True)
    gs.add_argument("--dx", type=int, required=True)
    gs.add_argument("--dz", type=int, required=True)
    gs.add_argument("--tightened", action="store_true")
    gs.set_defaults(func=_cmd_gv_scan)

    r = sub.add_parser("rates", help="asymptotic rate curves as CSV")
    r.add_argument("-p", type=int, required=True)
    r.add_argument("--from", dest="delta_from", type=float, default=0.0)
    r.add_argument("--to", dest="delta_to", type=float, default=0.5)
    r.add_argument("--step", dest="delta_step", type=float, default=0.01)
    r.add_argument("-o", dest="out", default=None)
    r.set_defaults(func=_cmd_rates)

    c = sub.add_parser("construct", help="designed-distance negacyclic CSS code")
    c.add_argument("-p", type=int, required=True)
    c.add_argument("-n", type=int, required=True)
    c.add_argument("-t", type=int, required=True)
    c.add_argument("-o", dest="out", default=None, help="write stabilizer matrix here")
    c.set_defaults(func=_cmd_construct)

    dc = sub.add_parser("decode-check", help="exhaustive decode of every radius-t error")
    dc.add_argument("-p", type=int, required=True)
    dc.add_argument("-n", type=int, required=True)
    dc.add_argument("-t", type=int, required=True)
    dc.set_defaults(func=_cmd_decode_check)

    s = sub.add_parser("simulate", help="Monte Carlo logical failure rates")
    s.add_argument("-p", type=int, required=True)
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-t", type=int, required=True)
    s.add_argument("--alpha", type=float, required=True)
    s.add_argument("--beta", type=float, required=True)
    s.add_argument("--trials", type=int, default=10000)
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("-o", dest="out", default=None)
    s.set_defaults(func=_cmd_simulate)

    w = sub.add_parser("witness-search", help="random search for a certified code")
    w.add_argument("-p", type=int, required=True)
    w.add_argument("-n", type=int, required=True)
    w.add_argument("--k1", type=int, required=True)
    w.add_argument("--k2", type=int, required=True)
    w.add_argument("--dx", type=int, required=True)
    w.add_argument("--dz", type=int, required=True)
    w.add_argument("--trials", type=int, default=200)
    w.add_argument("--seed", type=int, default=1)
    w.add_argument("-o", dest="out", default=None)
    w.set_defaults(func=_cmd_witness_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except httpx.HTTPError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
