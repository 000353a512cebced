"""Command-line interface: ``downup <command> ...``.

Every command builds a report (command echo, parameters, a list of checks)
and prints it as text or as JSON with sorted keys. Exit status is 0 when all
checks pass, 2 when some check fails and 1 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field

from . import classifier, gwa_orbits as G, qp_modules, qwa_modules
from .errors import DownUpError, ParseError, UnverifiedMap
from .morphisms import check_hom, lemma_map
from .ncalg import check_confluence, downup, qplane, qweyl
from .parsing import parse_element, parse_literal
from .scalars import Rational, Scalar, random_scalar, unify

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2

ALGEBRA_PARAMS = {"downup": ("alpha", "beta", "gamma"), "qplane": ("q",), "qweyl": ("q",)}
WITNESS_KINDS = ("qp-simple", "qp-essential", "qwa-simple", "qwa-essential")


class UsageError(DownUpError):
    pass


@dataclass
class Report:
    command: str
    params: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    error: dict | None = None
    text: list = field(default_factory=list)  # extra lines for text output only

    def add(self, name: str, ok: bool, payload=None) -> None:
        self.checks.append({"name": name, "status": "pass" if ok else "fail", "payload": payload or {}})

    @property
    def exit_status(self) -> int:
        if self.error is not None:
            return self.error["exit_status"]
        return EXIT_OK if all(c["status"] == "pass" for c in self.checks) else EXIT_FAILED

    def as_dict(self) -> dict:
        out = {"command": self.command, "params": self.params, "checks": self.checks,
               "exit_status": self.exit_status}
        if self.error is not None:
            out["error"] = {k: v for k, v in self.error.items() if k != "exit_status"}
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        if self.error is not None:
            return f"{self.error['name']}: {self.error['message']}"
        lines = list(self.text)
        for c in self.checks:
            lines.append(f"[{c['status'].upper()}] {c['name']}")
            for k in sorted(c["payload"]):
                lines.append(f"    {k}: {_flat(c['payload'][k])}")
        return "\n".join(lines)


def _flat(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, ensure_ascii=False)
    return str(v)


# --------------------------------------------------------------------------
# argument helpers


def scalar_arg(text: str):
    """Parse a scalar literal, keeping pure numbers mode-neutral."""
    return parse_literal(text)


def parse_params(text: str, names) -> dict:
    """``"alpha=2,beta=-1,gamma=0"`` -> ordered dict of unified scalars."""
    raw = {}
    for chunk in filter(None, (c.strip() for c in (text or "").split(","))):
        key, sep, val = chunk.partition("=")
        key = key.strip()
        if not sep:
            raise UsageError(f"expected name=value, got {chunk!r}")
        if key not in names:
            raise UsageError(f"unknown parameter {key!r}; expected {', '.join(names)}")
        raw[key] = parse_literal(val)
    missing = [n for n in names if n not in raw]
    if missing:
        raise UsageError(f"missing parameter(s): {', '.join(missing)}")
    return dict(zip(names, unify(*(raw[n] for n in names))))


def _unify_q(q) -> Scalar:
    return q if isinstance(q, Scalar) else Rational(q)


def presentation_for(algebra: str, params: dict):
    if algebra == "downup":
        return downup(params["alpha"], params["beta"], params["gamma"])
    if algebra == "qplane":
        return qplane(params["q"])
    return qweyl(params["q"])


def _echo(params: dict) -> dict:
    return {k: str(v) for k, v in params.items()}


# --------------------------------------------------------------------------
# commands


def cmd_nf(args, rep: Report) -> None:
    params = parse_params(args.params, ALGEBRA_PARAMS[args.algebra])
    rep.params = {"algebra": args.algebra, **_echo(params)}
    pres = presentation_for(args.algebra, params)
    x = parse_element(pres, args.expr)
    printed = str(x)
    back = parse_element(pres, printed)
    rep.text.append(printed)
    rep.add("round_trip", back == x, {"input": args.expr, "normal_form": printed})


def _random_params(algebra: str, mode: str, rng) -> dict:
    names = ALGEBRA_PARAMS[algebra]
    while True:
        vals = [random_scalar(rng, mode, 6) for _ in names]
        if algebra == "downup" or not vals[0].is_zero():
            return dict(zip(names, vals))


def cmd_confluence(args, rep: Report) -> None:
    names = ALGEBRA_PARAMS[args.algebra]
    if args.draws:
        rng = random.Random(args.seed)
        rep.params = {"algebra": args.algebra, "draws": args.draws, "mode": args.mode, "seed": args.seed}
        param_sets = [_random_params(args.algebra, args.mode, rng) for _ in range(args.draws)]
    else:
        params = parse_params(args.params, names)
        rep.params = {"algebra": args.algebra, **_echo(params)}
        param_sets = [params]
    for i, params in enumerate(param_sets):
        res = check_confluence(presentation_for(args.algebra, params))
        rep.add(f"confluence[{i}]", res["confluent"], {"params": _echo(params), **res})


def cmd_hom(args, rep: Report) -> None:
    params = parse_params(args.params, ("alpha", "beta", "r", "s"))
    rep.params = {"case": args.case, **_echo(params)}
    m = lemma_map(args.case, params["alpha"], params["beta"], params["r"], params["s"])
    hc = check_hom(m)
    rep.add("relations_preserved", hc.ok, {
        "map": m.label,
        "images": {g: str(img) for g, img in m.images},
        "residues": {name: str(r) for name, r in hc.residues},
        "certificate": None if hc.certificate is None else str(hc.certificate),
    })


def _basis_range(family: str, n: int):
    if family == "qp":
        return {"V": [("v", k) for k in range(-n, n + 1)],
                "W": [("w", k) for k in range(n + 1)],
                "M": [("v", k) for k in range(-n, n + 1)] + [("m", k) for k in range(n + 1)]}
    return {"V": [("v", k) for k in range(n + 1)],
            "W": [("w", k) for k in range(n + 1)],
            "M": [("v", k) for k in range(n + 1)] + [("w", k) for k in range(n + 1)]}


def cmd_module_check(args, rep: Report) -> None:
    q = _unify_q(scalar_arg(args.q))
    rep.params = {"family": args.family, "q": str(q), "range": args.range}
    mod = qp_modules if args.family == "qp" else qwa_modules
    cls = mod.QPModuleElement if args.family == "qp" else mod.QWAModuleElement
    relation = "a*b - q*b*a" if args.family == "qp" else "a*b - q*b*a - 1"
    for module, symbols in _basis_range(args.family, args.range).items():
        bad = [f"{k}({i})" for k, i in symbols if not mod.relation_residue(cls.basis(module, q, k, i)).is_zero()]
        rep.add(f"relation[{module}]", not bad, {"relation": relation, "symbols": len(symbols), "failures": bad})
    if args.family == "qwa":
        # the two displayed identities on W
        bad1, bad2 = [], []
        for n in range(args.range + 1):
            w = cls.basis("W", q, "w", n)
            if w.act_word("ab") - w.act_word("ba") != cls.basis("W", q, "w", n + 1) * (-1 / q):
                bad1.append(n)
            if w.act_word("ab") - w.act_word("ba") * q != w:
                bad2.append(n)
        rep.add("identity[(ab - ba)w_n = -w_{n+1}/q]", not bad1, {"failures": bad1})
        rep.add("identity[(ab - q ba)w_n = w_n]", not bad2, {"failures": bad2})


def _witness_fn(kind: str):
    family, what = kind.split("-")
    mod = qp_modules if family == "qp" else qwa_modules
    return mod, (mod.simplicity_witness_V if what == "simple" else mod.essentiality_witness_M), \
        ("V" if what == "simple" else "M")


def cmd_witness(args, rep: Report) -> None:
    q = _unify_q(scalar_arg(args.q))
    mod, fn, module = _witness_fn(args.kind)
    rep.params = {"kind": args.kind, "q": str(q)}
    if args.element is not None:
        elements = [mod.parse_element(module, q, args.element)]
    else:
        rng = random.Random(args.seed)
        rep.params.update(random=args.random, seed=args.seed)
        elements = [mod.random_element(module, q, rng) for _ in range(args.random)]
    for i, x in enumerate(elements):
        w = fn(x)
        payload = w.as_dict()
        payload["step_count"] = w.step_count
        rep.add(f"witness[{i}]", payload["sound"], payload)
        if len(elements) == 1:
            rep.text.append(f"operator: {w.operator}")
            rep.text.append(f"result: {w.result}")


def cmd_orbit(args, rep: Report) -> None:
    r, gamma, l0, l1 = unify(*(scalar_arg(t) for t in (args.r, args.gamma, args.lambda0, args.lambda1)))
    p = G.DoubleRootParams.make(r, gamma)
    seq = G.LambdaSequence.double_root(p, l0, l1)
    rep.params = {"r": str(r), "gamma": str(gamma), "lambda0": str(l0), "lambda1": str(l1), "bound": args.bound}
    table = seq.terms(0, args.bound)
    rep.add("lambda_table", True, {"lambda": [[n, str(v)] for n, v in table.items()]})
    if r != 1:
        cf = G.lambda_closed_form(seq)
        bad = [n for n in table if cf.value(n) != table[n]]
        rep.add("closed_form", not bad, {"c1": str(cf.c1), "c2": str(cf.c2),
                                         "lambda_star": str(cf.lam_star), "mismatches": bad})
        order = p.order()
        if order is not None:
            per = G.periodicity_check(seq, order, args.bound)
            rep.add("periodicity_iff_c2_zero", per["periodic"] == per["c2_zero"], per)
    rep.add("kdim_conditions", True, G.kdim_conditions(seq, args.bound))


def cmd_centrality(args, rep: Report) -> None:
    r, gamma = unify(scalar_arg(args.r), scalar_arg(args.gamma))
    p = G.DoubleRootParams.make(r, gamma)
    rep.params = {"r": str(r), "gamma": str(gamma), "power": args.power}
    res = G.wn_centrality(p, args.power)
    rep.add("w_power_central", res["ok"], res)
    rep.add("sigma_identities", all(G.sigma_identities(p).values()), G.sigma_identities(p))
    ab = G.abar_relation_check(p)
    rep.add("quotient_relation", ab["ok"], ab)


def cmd_classify(args, rep: Report) -> None:
    vals = unify(*(scalar_arg(t) for t in (args.alpha, args.beta, args.gamma, args.root_r, args.root_s)))
    rep.params = {k: str(v) for k, v in zip(("alpha", "beta", "gamma", "root_r", "root_s"), vals)}
    rep.params["order_bound"] = args.order_bound
    v = classifier.classify(*vals, order_bound=args.order_bound)
    d = v.as_dict()
    rep.text.append(f"{d['status']}: {d['rationale']}")
    if v.witness is not None:
        rep.text.append(f"witness: {v.witness.label}")
    rep.add("verdict", True, d)
    if v.status is classifier.Status.FAILS:
        if not v.witness.verified:
            raise UnverifiedMap("FAILS verdict without a verified map")
        rep.add("pulled_back_relations_vanish", classifier.pulled_back_relations_vanish(v), {"max_index": 20})
        e2e = classifier.end_to_end_witness(v)
        rep.add("end_to_end_witness", e2e["ok"], e2e)


COMMANDS = {
    "nf": cmd_nf, "confluence": cmd_confluence, "hom": cmd_hom, "module-check": cmd_module_check,
    "witness": cmd_witness, "orbit": cmd_orbit, "centrality": cmd_centrality, "classify": cmd_classify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    ap = argparse.ArgumentParser(prog="downup", description="Exact computations with down-up algebras.")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--seed", type=int, default=0, help="seed for randomized runs (default 0)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", parents=[common], help="normal form of an expression")
    p.add_argument("--algebra", choices=sorted(ALGEBRA_PARAMS), required=True)
    p.add_argument("--params", default="")
    p.add_argument("--expr", required=True)

    p = sub.add_parser("confluence", parents=[common], help="resolve all rewriting ambiguities")
    p.add_argument("--algebra", choices=sorted(ALGEBRA_PARAMS), required=True)
    p.add_argument("--params", default="")
    p.add_argument("--draws", type=int, default=0, help="use this many random parameter sets instead")
    p.add_argument("--mode", choices=("Q", "Q(q)", "Q(zeta)"), default="Q")

    p = sub.add_parser("hom", parents=[common], help="check a map onto B(r) or C(r)")
    p.add_argument("--case", choices=("a", "b"), required=True)
    p.add_argument("--params", required=True, help='e.g. "alpha=3,beta=-2,r=2,s=1"')

    p = sub.add_parser("module-check", parents=[common], help="relations on explicit module bases")
    p.add_argument("family", choices=("qp", "qwa"))
    p.add_argument("--q", required=True)
    p.add_argument("--range", type=int, default=40)

    p = sub.add_parser("witness", parents=[common], help="constructive simplicity/essentiality witness")
    p.add_argument("kind", choices=WITNESS_KINDS)
    p.add_argument("--q", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--element")
    g.add_argument("--random", type=int, help="number of seeded random elements")

    p = sub.add_parser("orbit", parents=[common], help="lambda sequence and orbit conditions")
    p.add_argument("--r", required=True)
    p.add_argument("--gamma", default="0")
    p.add_argument("--lambda0", default="0")
    p.add_argument("--lambda1", required=True)
    p.add_argument("--bound", type=int, default=24)

    p = sub.add_parser("centrality", parents=[common], help="powers of the normal element w")
    p.add_argument("--r", required=True)
    p.add_argument("--gamma", default="0")
    p.add_argument("--power", type=int, required=True)

    p = sub.add_parser("classify", parents=[common], help="decide property (diamond)")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--root-r", required=True)
    p.add_argument("--root-s", required=True)
    p.add_argument("--order-bound", type=int, default=classifier.DEFAULT_ORDER_BOUND)
    return ap


def run(argv=None) -> tuple:
    """Parse ``argv`` and execute; returns ``(report, format)``."""
    args = build_parser().parse_args(argv)
    rep = Report(args.command)
    try:
        COMMANDS[args.command](args, rep)
    except ParseError as exc:
        rep.checks = []
        rep.error = {"name": "ParseError", "message": exc.args[0], "position": exc.pos,
                     "diagnostic": exc.diagnostic(), "exit_status": EXIT_USAGE}
    except UnverifiedMap as exc:
        rep.error = {"name": "UnverifiedMap", "message": str(exc), "exit_status": EXIT_FAILED}
    except DownUpError as exc:
        rep.checks = []
        rep.error = {"name": type(exc).__name__, "message": str(exc), "exit_status": EXIT_USAGE}
    return rep, args.format


def main(argv=None) -> int:
    try:
        rep, fmt = run(argv)
    except SystemExit as exc:  # argparse has already printed usage
        return EXIT_USAGE if exc.code else EXIT_OK
    if fmt == "json":
        print(rep.to_json())
    elif rep.error is not None:
        print(f"{rep.error['name']}: {rep.error.get('diagnostic', rep.error['message'])}", file=sys.stderr)
    else:
        print(rep.to_text())
    return rep.exit_status


if __name__ == "__main__":
    sys.exit(main())
