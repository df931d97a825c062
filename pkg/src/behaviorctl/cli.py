"""``behaviorctl``: batch front end for model files.

Exit codes: 0 success, 1 a requested check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from fractions import Fraction

from . import oracle
from .behavior import (
    Behavior,
    SignatureError,
    cardinalities,
    eliminate,
    interconnect,
    is_minimal,
    output_cardinality,
)
from .network import (
    NetworkError,
    desired_interconnection,
    hidden,
    manifest_desired_w,
    manifest_plant_c,
    manifest_plant_w,
    manifest_plant_wc,
    plant_interconnection,
)
from .polymat import rank
from .regularity import (
    block_ln,
    free_control_sufficient,
    is_regular,
    network_pair,
)
from .synthesis import check_implementability, distributed_canonical, local_canonical
from .textfmt import ModelFile, ParseError, load_model, serialize_behavior

log = logging.getLogger("behaviorctl")

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
CHECKS = ("impl", "reg-pc", "reg-cc", "free-c")


class InputError(Exception):
    pass


def resolve(model: ModelFile, name: str) -> Behavior:
    """A behavior by name, or ``NET.plant`` / ``NET.desired`` for a network's
    full interconnections."""
    if name in model.behaviors:
        return model.behaviors[name]
    if "." in name:
        net_name, part = name.rsplit(".", 1)
        if net_name in model.networks:
            net = model.network(net_name)
            builders = {"plant": plant_interconnection, "desired": desired_interconnection}
            if part in builders:
                return builders[part](net)
    raise InputError(f"unknown behavior {name!r}")


def _network(model: ModelFile, name: str | None):
    if name is None:
        if len(model.networks) != 1:
            raise InputError("--network is required when the model has zero or several networks")
        name = next(iter(model.networks))
    if name not in model.networks:
        raise InputError(f"unknown network {name!r}")
    return model.network(name)


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)


def cmd_info(args) -> int:
    model = load_model(args.model)
    B = resolve(model, args.name)
    m, p = cardinalities(B)
    minimal = is_minimal(B)
    if args.json:
        print(json.dumps({
            "command": "info", "name": args.name, "signature": [[g.name, g.dim] for g in B.sig.groups],
            "vars": B.sig.total_dim, "rows": B.R.rows, "p": p, "m": m, "minimal": minimal,
        }))
    else:
        print(f"{args.name}: vars {B.sig.total_dim}, p={p}, m={m}")
        print(f"  signature {B.sig}")
        print(f"  rows {B.R.rows}, minimal {'yes' if minimal else 'no'}")
    return EXIT_OK


def cmd_synth(args) -> int:
    model = load_model(args.model)
    net = _network(model, args.network)
    if args.check:
        res = check_implementability(net)
        if not res.ok:
            print(f"FAIL impl: {res.describe()}", file=sys.stderr)
            return EXIT_FAIL
    parts = []
    for i, sub in enumerate(net.subsystems, start=1):
        parts.append(serialize_behavior(f"C{i}can", local_canonical(sub.plant, sub.desired)))
    parts.append(serialize_behavior("CIcan", distributed_canonical(net)))
    _write("\n".join(parts), args.out)
    if args.out:
        print(f"wrote {len(parts)} controller behaviors to {args.out}")
    return EXIT_OK


def _check_impl(net, cross: dict | None) -> dict:
    res = check_implementability(net)
    v = {"name": "impl", "pass": res.ok, "verdict": res.verdict.value,
         "lower": res.lower, "upper": res.upper, "detail": res.describe()}
    if cross is not None:
        N, Kw, Pw = hidden(net), manifest_desired_w(net), manifest_plant_w(net)
        disagree = []
        for label, a, b, algebraic in (("lower", N, Kw, res.lower), ("upper", Kw, Pw, res.upper)):
            probe = oracle.randomized_inclusion(a, b, cross["samples"])
            if algebraic and not probe.consistent:
                disagree.append(f"{label} inclusion refuted at lam={probe.lam}")
        v["cross_validate"] = {"samples": len(cross["samples"]), "disagreements": disagree}
        if disagree:
            v["pass"] = False
            log.error("internal error: oracle disagrees with exact algebra: %s", "; ".join(disagree))
    return v


def _check_reg_pc(net) -> dict:
    C = distributed_canonical(net)
    Pwc = manifest_plant_wc(net)
    cs = [c for c in net.c_groups() if c in C.sig]
    Cc = eliminate(C, cs)
    p_plant, p_ctrl = output_cardinality(Pwc), output_cardinality(Cc)
    p_joint = output_cardinality(interconnect(Pwc, Cc, cs))
    return {"name": "reg-pc", "pass": p_joint == p_plant + p_ctrl,
            "p_plant_wc": p_plant, "p_controller_c": p_ctrl, "p_interconnection": p_joint}


def _check_reg_cc(net) -> dict:
    pairs = []
    for e in net.edges:
        if not (e.s_dim or e.k_dim):
            continue
        P1, K1, P2, K2 = network_pair(net, e.i, e.j)
        b = block_ln(P1, K1, P2, K2)
        top, bottom, full = rank(b.top), rank(b.bottom), rank(b.full)
        pairs.append({"edge": [e.i, e.j], "rank_top": top, "rank_bottom": bottom,
                      "rank_full": full, "pass": top + bottom == full,
                      "plant_regular": is_regular(P1, P2), "desired_regular": is_regular(K1, K2)})
    return {"name": "reg-cc", "pass": all(p["pass"] for p in pairs), "pairs": pairs}


def _check_free_c(net) -> dict:
    ok = free_control_sufficient(net)
    return {"name": "free-c", "pass": ok, "rows_plant_c": manifest_plant_c(net).R.rows}


def cmd_check(args) -> int:
    model = load_model(args.model)
    net = _network(model, args.network)
    cross = None
    if args.cross_validate:
        rng = random.Random(args.seed)
        pts = set()
        while len(pts) < args.samples:
            pts.add(Fraction(rng.randint(-50, 50), rng.randint(1, 7)))
        cross = {"samples": sorted(pts)}
    verdicts = []
    for what in args.what or CHECKS:
        if what == "impl":
            verdicts.append(_check_impl(net, cross))
        elif what == "reg-pc":
            verdicts.append(_check_reg_pc(net))
        elif what == "reg-cc":
            verdicts.append(_check_reg_cc(net))
        elif what == "free-c":
            verdicts.append(_check_free_c(net))
    if args.json:
        print(json.dumps({"command": "check", "verdicts": verdicts}, indent=2))
    else:
        for v in verdicts:
            line = f"{'PASS' if v['pass'] else 'FAIL'} {v['name']}"
            if "detail" in v:
                line += f": {v['detail']}"
            print(line)
    return EXIT_OK if all(v["pass"] for v in verdicts) else EXIT_FAIL


def cmd_eliminate(args) -> int:
    model = load_model(args.model)
    B = resolve(model, args.name)
    E = eliminate(B, args.keep)
    name = args.rename or args.name.replace(".", "_") + "_" + ("_".join(args.keep) or "none")
    _write(serialize_behavior(name, E), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="behaviorctl", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="signature, cardinalities and minimality of a behavior")
    p.add_argument("--model", required=True)
    p.add_argument("name", help="behavior name, or NET.plant / NET.desired")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("synth", help="write the local and distributed canonical controllers")
    p.add_argument("--model", required=True)
    p.add_argument("--network")
    p.add_argument("--out")
    p.add_argument("--check", action="store_true", help="refuse unless the desired behavior is implementable")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("check", help="implementability and regularity verdicts")
    p.add_argument("--model", required=True)
    p.add_argument("--network")
    p.add_argument("--what", nargs="+", choices=CHECKS)
    p.add_argument("--json", action="store_true")
    p.add_argument("--cross-validate", action="store_true", help="also probe inclusions with exponential trajectories")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=25)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("eliminate", help="project a behavior onto some of its variable groups")
    p.add_argument("--model", required=True)
    p.add_argument("name")
    p.add_argument("--keep", nargs="*", default=[])
    p.add_argument("--out")
    p.add_argument("--as", dest="rename", help="name of the written behavior")
    p.set_defaults(func=cmd_eliminate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (ParseError, InputError, SignatureError, NetworkError, OSError) as exc:
        print(f"behaviorctl: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
