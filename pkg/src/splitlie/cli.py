"""Command line interface: ``splitlie <command> FILE [--json]``.

Exit codes: 0 every check passed with its hypotheses satisfied, 1 input
error, 2 a theorem check failed although its hypotheses held, 3 some
hypothesis does not hold (reported, not an error).
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import io
from .connections import (
    ROOTS,
    WEIGHTS,
    chain_partition,
    connect_roots,
    connect_weights,
    find_connection,
    is_connection,
)
from .decomposition import (
    OK,
    OUT_OF_HYPOTHESES,
    SPLIT_PAIR,
    THEOREM_FAILURE,
    cartan_part_for_class,
    decompose_algebra,
    decompose_module,
    pair,
    simple_components,
    simplicity_report,
)
from .errors import InputError, SplitLieError, SymmetryViolation, ValidationFailed
from .fixtures import random_module
from .involution import build, violations
from .linalg import Subspace, linear_combination
from .split import is_symmetric, split
from .weight_module import adjoint_module, lv_equals_v, module_center, weight_decompose

EXIT_OK, EXIT_INPUT, EXIT_THEOREM, EXIT_HYPOTHESES = 0, 1, 2, 3


# --------------------------------------------------------------------------
# Payload value types with two renderings
# --------------------------------------------------------------------------

class Func(tuple):
    """A functional: JSON list of rational strings, text ``(a, b)``."""

    def text(self) -> str:
        return "(" + ", ".join(str(x) for x in self) + ")"


class FuncSet(list):
    """A set of functionals, rendered ``{(a), (b)}`` in text."""

    def text(self) -> str:
        return "{" + ", ".join(f.text() for f in self) + "}"


class FuncSeq(FuncSet):
    """An ordered chain of functionals, rendered ``[(a), (b)]``."""

    def text(self) -> str:
        return "[" + ", ".join(f.text() for f in self) + "]"


def funcs(fs) -> FuncSet:
    return FuncSet(Func(f) for f in fs)


@dataclass(frozen=True)
class Span:
    space: Subspace
    names: tuple

    def text(self) -> str:
        if self.space.is_zero():
            return "0"
        vecs = [_combination(v, self.names) for v in self.space.basis]
        return "span{" + ", ".join(vecs) + "}"


def _combination(v, names) -> str:
    terms = []
    for c, name in zip(v, names):
        if not c:
            continue
        t = name if c == 1 else "-" + name if c == -1 else f"{c}*{name}"
        if terms and not t.startswith("-"):
            t = "+" + t
        terms.append(t)
    return "".join(terms) or "0"


def _json_default(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Span):
        return {"dim": x.space.dim, "basis": [[str(c) for c in r] for r in x.space.basis]}
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _jsonable(x):
    if isinstance(x, Func):
        return [str(c) for c in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class Report:
    command: str
    inputs: dict
    hypotheses: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)  # [(claim, passed)]

    @property
    def status(self) -> str:
        if any(not ok for _, ok in self.checks):
            return THEOREM_FAILURE
        if not all(self.hypotheses.values()):
            return OUT_OF_HYPOTHESES
        return OK

    @property
    def exit_code(self) -> int:
        return {OK: EXIT_OK, THEOREM_FAILURE: EXIT_THEOREM, OUT_OF_HYPOTHESES: EXIT_HYPOTHESES}[self.status]

    def payload(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "hypotheses": self.hypotheses,
            "results": self.results,
            "checks": [{"claim": c, "passed": ok} for c, ok in self.checks],
            "status": self.status,
        }

    def add_checks(self, checks, prefix: str = "") -> None:
        self.checks.extend((prefix + c.claim, c.passed) for c in checks)


def render(report: Report, fmt: str = "text") -> str:
    payload = report.payload()
    if fmt == "json":
        return json.dumps(_jsonable(payload), default=_json_default, indent=2, sort_keys=True) + "\n"
    lines = [f"command: {payload['command']}"]
    for path, dig in payload["inputs"].items():
        lines.append(f"input: {path} (sha256 {dig[:16]})")
    if payload["hypotheses"]:
        lines.append("hypotheses:")
        width = max(len(k) for k in payload["hypotheses"])
        for k, v in payload["hypotheses"].items():
            lines.append(f"  {k.ljust(width)}  {'yes' if v else 'NO'}")
    lines.append("results:")
    lines.extend(_text_lines(payload["results"], 1))
    if payload["checks"]:
        lines.append("checks:")
        for c in payload["checks"]:
            lines.append(f"  {'PASS' if c['passed'] else 'FAIL'}  {c['claim']}")
    lines.append(f"status: {payload['status']}")
    return "\n".join(lines) + "\n"


def _scalar_text(v) -> str:
    if hasattr(v, "text"):
        return v.text()
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    return str(v)


def _text_lines(d: dict, depth: int) -> list[str]:
    pad = "  " * depth
    out = []
    for k, v in d.items():
        if hasattr(v, "text"):
            out.append(f"{pad}{k} = {v.text()}")
        elif isinstance(v, dict):
            out.append(f"{pad}{k}:")
            out.extend(_text_lines(v, depth + 1))
        elif isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            out.append(f"{pad}{k}:")
            for item in v:
                sub = _text_lines(item, depth + 2)
                sub[0] = "  " * (depth + 1) + "- " + sub[0].lstrip()
                out.extend(sub)
        elif isinstance(v, list):
            out.append(f"{pad}{k}: [" + ", ".join(_scalar_text(x) for x in v) + "]")
        else:
            out.append(f"{pad}{k}: {_scalar_text(v)}")
    return out


# --------------------------------------------------------------------------
# Commands
# --------------------------------------------------------------------------

def _as_module(kind, obj):
    if kind == io.MODULE:
        return obj
    if kind == io.ALGEBRA:
        return adjoint_module(split(obj))
    return build(obj).module


def _as_split(kind, obj):
    if kind == io.MODULE:
        return obj.split
    if kind == io.ALGEBRA:
        return split(obj)
    return split(obj.ambient)


def _symmetry(S, W=None) -> dict:
    h = {"symmetric roots": S.is_symmetric()}
    if W is not None:
        h["symmetric weights"] = W.is_symmetric()
    return h


def _cmd_validate(kind, obj, report, args):
    r = report.results
    r["kind"] = kind
    if kind == io.INVOLUTION:
        problems = violations(obj)
        r["violations"] = problems
        if problems:
            raise ValidationFailed(problems)
        obj = build(obj).module
        kind = io.MODULE
    S = _as_split(kind, obj)
    L = S.algebra
    r["algebra"] = {"dim": L.dim, "basis": list(L.basis), "cartan": [L.basis[c] for c in L.cartan]}
    r["Lambda"] = funcs(S.root_system)
    report.checks.append(("jacobi", True))
    report.checks.append(("split", True))
    report.hypotheses.update(_symmetry(S))
    if kind == io.MODULE:
        W = weight_decompose(obj)
        r["module"] = {"dim": obj.dim, "basis": list(obj.basis)}
        r["P"] = funcs(W.weight_system)
        report.checks.append(("module-axiom", True))
        report.checks.append(("weight-module", True))
        report.hypotheses["symmetric weights"] = W.is_symmetric()


def _cmd_roots(kind, obj, report, args):
    S = _as_split(kind, obj)
    names = S.algebra.basis
    report.hypotheses.update(_symmetry(S))
    report.results["H"] = Span(S.cartan, names)
    report.results["Lambda"] = funcs(S.root_system)
    report.results["root spaces"] = [
        {"root": Func(f), "space": Span(s, names)} for f, s in S.roots
    ]


def _cmd_weights(kind, obj, report, args):
    M = _as_module(kind, obj)
    W = weight_decompose(M)
    names = M.basis
    report.hypotheses.update(_symmetry(M.split, W))
    report.results["P"] = funcs(W.weight_system)
    report.results["V_0"] = Span(W.zero_space, names)
    report.results["weight spaces"] = [
        {"weight": Func(f), "space": Span(s, names)} for f, s in W.weights
    ]
    report.results["LV=V"] = lv_equals_v(M)
    report.results["Z(V)"] = Span(module_center(M), names)


def _connect(kind, obj, report, args, mode):
    M = _as_module(kind, obj)
    W = weight_decompose(M)
    roots, weights = M.split.root_system, W.weight_system
    report.hypotheses.update(_symmetry(M.split, W))
    if not all(report.hypotheses.values()):
        return
    part = (connect_weights if mode == WEIGHTS else connect_roots)(roots, weights)
    try:
        oracle = chain_partition(roots, weights, mode, args.max_depth)
    except ValueError as exc:
        raise InputError(f"--max-depth {args.max_depth} is too small: {exc}") from None
    report.results["classes"] = [funcs(c) for c in part.classes]
    report.results["oracle max depth"] = args.max_depth if args.max_depth else len(roots) + len(weights)
    witnesses = []
    for c in part.classes:
        for target in c[1:]:
            chain = find_connection(roots, weights, c[0], target, mode)
            witnesses.append({"from": Func(c[0]), "to": Func(target), "chain": FuncSeq(Func(z) for z in chain or ())})
            report.checks.append(
                (f"witness {Func(c[0]).text()}->{Func(target).text()}",
                 chain is not None and is_connection(chain, roots, weights, target, mode))
            )
    report.results["witnesses"] = witnesses
    report.checks.append(("oracle-agreement", oracle.classes == part.classes))


def _cmd_connect_weights(kind, obj, report, args):
    _connect(kind, obj, report, args, WEIGHTS)


def _cmd_connect_roots(kind, obj, report, args):
    _connect(kind, obj, report, args, ROOTS)


def _algebra_results(AD):
    names = AD.split.algebra.basis
    return {
        "ideals": [
            {
                "class": funcs(AD.partition.classes[k]),
                "ideal": Span(p, names),
                "cartan part": Span(cartan_part_for_class(AD.split, AD.partition.classes[k]), names),
            }
            for k, p in AD.pieces
        ],
        "U": Span(AD.complement, names),
        "direct": AD.direct,
    }


def _module_results(MD):
    names = MD.weight_data.module.basis
    return {
        "pieces": [
            {"class": funcs(MD.partition.classes[k]), "submodule": Span(p, names)}
            for k, p in MD.pieces
        ],
        "U": Span(MD.complement, names),
        "direct": MD.direct,
    }


def _cmd_decompose_algebra(kind, obj, report, args):
    if kind == io.ALGEBRA:
        S, weights = split(obj), None
    else:
        M = _as_module(kind, obj)
        S, weights = M.split, weight_decompose(M).weight_system
        report.hypotheses["symmetric weights"] = is_symmetric(weights)
    report.hypotheses.update(_symmetry(S))
    if not all(report.hypotheses.values()):
        return
    AD = decompose_algebra(S, weights)
    report.hypotheses.update(AD.hypotheses)
    report.results.update(_algebra_results(AD))
    report.add_checks(AD.checks)


def _cmd_decompose_module(kind, obj, report, args):
    M = _as_module(kind, obj)
    W = weight_decompose(M)
    report.hypotheses.update(_symmetry(M.split, W))
    if not all(report.hypotheses.values()):
        return
    MD = decompose_module(W)
    report.hypotheses.update(MD.hypotheses)
    report.results.update(_module_results(MD))
    report.add_checks(MD.checks)


def _pairing_results(AD, MD, P):
    out = []
    for j, _ in MD.pieces:
        w = P.witness.get(j)
        out.append({
            "module piece": j,
            "class": funcs(MD.partition.classes[j]),
            "acting ideals": list(P.candidates[j]),
            "ideal": P.map.get(j),
            "witness": None if w is None else {"root": Func(w[0]), "weight": Func(w[1]), "dim": w[2]},
        })
    return out


def _cmd_pair(kind, obj, report, args):
    M = _as_module(kind, obj)
    W = weight_decompose(M)
    report.hypotheses.update(_symmetry(M.split, W))
    if not all(report.hypotheses.values()):
        return
    MD = decompose_module(W)
    AD = decompose_algebra(M.split, W.weight_system)
    P = pair(AD, MD)
    report.hypotheses.update(P.hypotheses)
    report.results["algebra"] = _algebra_results(AD)
    report.results["module"] = _module_results(MD)
    report.results["pairing"] = _pairing_results(AD, MD, P)
    report.add_checks(AD.checks, "algebra: ")
    report.add_checks(MD.checks, "module: ")
    report.add_checks(P.checks, "pairing: ")


def _cmd_simple_components(kind, obj, report, args):
    M = _as_module(kind, obj)
    W = weight_decompose(M)
    report.hypotheses.update(_symmetry(M.split, W))
    if not all(report.hypotheses.values()):
        return
    names = M.basis
    whole = simplicity_report(W)
    SC = simple_components(W)
    report.hypotheses.update(SC.hypotheses)
    r = report.results
    r["verdict"] = whole.verdict
    r["flags"] = dict(whole.flags)
    r["failed flags"] = list(whole.failed)
    if whole.minimal is not None:
        r["minimal submodules"] = [Span(s, names) for s in whole.minimal]
    if whole.verdict == SPLIT_PAIR:
        r["P^W"] = funcs(whole.split_weights[0])
        r["-P^W"] = funcs(whole.split_weights[1])
    r["pieces"] = [
        {
            "class": funcs(SC.module_decomposition.partition.classes[k]),
            "verdict": rep.verdict,
            "failed flags": list(rep.failed),
        }
        for k, rep in SC.piece_reports
    ]
    r["components"] = [Span(c, names) for c in SC.components]
    report.add_checks(whole.checks, "whole: ")
    report.add_checks(SC.checks)


def _cmd_involution_split(kind, obj, report, args):
    if kind != io.INVOLUTION:
        raise SplitLieError("involution-split needs a file with an 'xi' matrix")
    inv = obj
    problems = violations(inv)
    report.results["violations"] = problems
    if problems:
        raise ValidationFailed(problems)
    built = build(inv)
    amb = inv.ambient
    n = amb.dim
    S_amb = split(amb)
    L, S, M = built.algebra, built.split, built.module
    W = weight_decompose(M)
    r = report.results
    r["Sym"] = {"dim": L.dim, "basis": list(L.basis), "cartan": [L.basis[c] for c in L.cartan]}
    r["Skw"] = {"dim": M.dim, "basis": list(M.basis)}
    r["Lambda"] = funcs(S.root_system)
    r["P"] = funcs(W.weight_system)
    r["V_0"] = Span(W.zero_space, M.basis)
    r["algebra"] = io.algebra_to_dict(L)
    r["module"] = {k: v for k, v in io.module_to_dict(M).items() if k != "algebra"}

    report.checks.append(("dim Sym + dim Skw = dim", built.sym.dim + built.skw.dim == n))
    report.checks.append(("Sym & Skw = 0", built.sym.intersect(built.skw).is_zero()))
    report.checks.append(("P = Lambda", set(W.weight_system) == set(S.root_system)))
    lifted_v0 = Subspace.span(
        [linear_combination(v, built.skw.basis, n) for v in W.zero_space.basis], n
    )
    report.checks.append(("V_0 = Skw(H)", lifted_v0 == built.skw.intersect(amb.cartan_subspace)))
    # restricted roots and projected root spaces
    sym_h = built.sym_basis[: len(L.cartan)]
    cartan_idx = amb.cartan

    def restrict(alpha):
        return tuple(sum((h[c] * a for c, a in zip(cartan_idx, alpha)), Fraction(0)) for h in sym_h)

    expected: dict = {}
    for alpha, space in S_amb.roots:
        proj = space.image(inv.sym_projection)
        key = restrict(alpha)
        expected[key] = expected.get(key, Subspace.zero(n)).sum(proj)
    for f, space in S.roots:
        lifted = Subspace.span([linear_combination(v, built.sym_basis, n) for v in space.basis], n)
        report.checks.append((f"L_{Func(f).text()} = Pi_0(root spaces)", lifted == expected.get(f)))

    report.hypotheses.update(_symmetry(S, W))
    if not all(report.hypotheses.values()):
        return
    MD = decompose_module(W)
    AD = decompose_algebra(S, W.weight_system)
    P = pair(AD, MD)
    report.hypotheses.update(P.hypotheses)
    r["ideals"] = _algebra_results(AD)["ideals"]
    r["pieces"] = _module_results(MD)["pieces"]
    r["pairing"] = _pairing_results(AD, MD, P)
    report.add_checks(AD.checks, "algebra: ")
    report.add_checks(MD.checks, "module: ")
    report.add_checks(P.checks, "pairing: ")
    if all(P.hypotheses.values()):
        report.checks.append((
            "matching index sets",
            len(AD.pieces) == len(MD.pieces) and sorted(P.map.values()) == [k for k, _ in AD.pieces],
        ))


COMMANDS = {
    "validate": _cmd_validate,
    "roots": _cmd_roots,
    "weights": _cmd_weights,
    "connect-weights": _cmd_connect_weights,
    "connect-roots": _cmd_connect_roots,
    "decompose-algebra": _cmd_decompose_algebra,
    "decompose-module": _cmd_decompose_module,
    "pair": _cmd_pair,
    "simple-components": _cmd_simple_components,
    "involution-split": _cmd_involution_split,
}


def run(command: str, path: str, args=None) -> Report:
    """Execute one command on one file. Input errors propagate as SplitLieError."""
    if args is None:
        args = argparse.Namespace(max_depth=None)
    report = Report(command, {path: io.digest(path)})
    kind, obj = io.load(path)
    try:
        COMMANDS[command](kind, obj, report, args)
    except SymmetryViolation as exc:
        report.hypotheses["symmetric"] = False
        report.results["error"] = str(exc)
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitlie",
        description="Decompose split Lie algebras and their weight modules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("file")
        p.add_argument("--json", action="store_true", help="emit canonical JSON")
        p.add_argument("--max-depth", type=int, default=None,
                       help="chain length bound for the connection oracle")
    g = sub.add_parser("generate", help="print a random module file")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--max-dim", type=int, default=8)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "generate":
        module = random_module(random.Random(args.seed), args.max_dim)
        sys.stdout.write(io.dumps(io.module_to_dict(module)))
        return EXIT_OK
    try:
        report = run(args.command, args.file, args)
    except SplitLieError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {args.file}: {exc.strerror}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(render(report, "json" if args.json else "text"))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
