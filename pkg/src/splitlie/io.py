"""JSON file formats for algebras, modules and involutions.

Rationals are written as strings ``"p/q"`` or ``"p"``; plain JSON integers
are also accepted on input. Bracket and action keys are ``"i,j"`` strings.
"""
from __future__ import annotations

import hashlib
import json
import os
from fractions import Fraction

from .errors import InputError
from .involution import Involution
from .lie_algebra import LieAlgebra
from .split import split
from .weight_module import ModuleAction

ALGEBRA = "algebra"
MODULE = "module"
INVOLUTION = "involution"


def parse_rational(x, where: str) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float) or not isinstance(x, (int, str)):
        raise InputError(f"{where}: expected a rational string like \"3/4\", got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"{where}: cannot parse {x!r} as a rational") from None


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def _vector(raw, length: int, where: str):
    if not isinstance(raw, list):
        raise InputError(f"{where}: expected a list of {length} rationals")
    if len(raw) != length:
        raise InputError(f"{where}: expected {length} coefficients, got {len(raw)}")
    return [parse_rational(x, f"{where}[{k}]") for k, x in enumerate(raw)]


def _index_pair(key: str, where: str) -> tuple[int, int]:
    try:
        a, b = key.split(",")
        return int(a), int(b)
    except ValueError:
        raise InputError(f"{where}: key {key!r} is not of the form \"i,j\"") from None


def _require(d: dict, key: str, kind, where: str):
    if key not in d:
        raise InputError(f"{where}: missing field {key!r}")
    if not isinstance(d[key], kind):
        raise InputError(f"{where}.{key}: wrong type {type(d[key]).__name__}")
    return d[key]


def algebra_from_dict(d: dict, where: str = "algebra") -> LieAlgebra:
    if not isinstance(d, dict):
        raise InputError(f"{where}: expected an object")
    dim = _require(d, "dim", int, where)
    basis = _require(d, "basis", list, where)
    if len(basis) != dim or not all(isinstance(b, str) for b in basis):
        raise InputError(f"{where}.basis: expected {dim} names")
    raw = _require(d, "brackets", dict, where)
    cartan = _require(d, "cartan", list, where)
    brackets = {}
    for key, vec in raw.items():
        i, j = _index_pair(key, f"{where}.brackets")
        if not (0 <= i < j < dim):
            raise InputError(f"{where}.brackets: key {key!r} needs 0 <= i < j < {dim}")
        brackets[(i, j)] = _vector(vec, dim, f"{where}.brackets[{key!r}]")
    if not cartan or not all(isinstance(c, int) and 0 <= c < dim for c in cartan):
        raise InputError(f"{where}.cartan: expected a nonempty list of basis indices")
    if len(set(cartan)) != len(cartan):
        raise InputError(f"{where}.cartan: indices must be distinct")
    return LieAlgebra(basis, brackets, cartan)


def algebra_to_dict(L: LieAlgebra) -> dict:
    return {
        "dim": L.dim,
        "basis": list(L.basis),
        "brackets": {
            f"{i},{j}": [format_rational(x) for x in v]
            for (i, j), v in sorted(L.nonzero_brackets().items())
        },
        "cartan": list(L.cartan),
    }


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _algebra_ref(ref, base_dir: str, where: str) -> LieAlgebra:
    if isinstance(ref, str):
        path = ref if os.path.isabs(ref) else os.path.join(base_dir, ref)
        return algebra_from_dict(_load_json(path), where=os.path.basename(path))
    return algebra_from_dict(ref, where=where)


def module_from_dict(d: dict, base_dir: str = ".", where: str = "module") -> ModuleAction:
    if not isinstance(d, dict):
        raise InputError(f"{where}: expected an object")
    if "algebra" not in d:
        raise InputError(f"{where}: missing field 'algebra'")
    L = _algebra_ref(d["algebra"], base_dir, f"{where}.algebra")
    dim = _require(d, "dim", int, where)
    basis = _require(d, "basis", list, where)
    if len(basis) != dim or not all(isinstance(b, str) for b in basis):
        raise InputError(f"{where}.basis: expected {dim} names")
    raw = _require(d, "action", dict, where)
    action = {}
    for key, vec in raw.items():
        i, a = _index_pair(key, f"{where}.action")
        if not (0 <= i < L.dim and 0 <= a < dim):
            raise InputError(f"{where}.action: key {key!r} out of range")
        action[(i, a)] = _vector(vec, dim, f"{where}.action[{key!r}]")
    return ModuleAction(split(L), basis, action)


def module_to_dict(M: ModuleAction) -> dict:
    return {
        "algebra": algebra_to_dict(M.algebra),
        "dim": M.dim,
        "basis": list(M.basis),
        "action": {
            f"{i},{a}": [format_rational(x) for x in v]
            for (i, a), v in sorted(M.action_entries().items())
        },
    }


def involution_from_dict(d: dict, base_dir: str = ".", where: str = "involution") -> Involution:
    if not isinstance(d, dict) or "algebra" not in d:
        raise InputError(f"{where}: missing field 'algebra'")
    L = _algebra_ref(d["algebra"], base_dir, f"{where}.algebra")
    rows = _require(d, "xi", list, where)
    if len(rows) != L.dim:
        raise InputError(f"{where}.xi: expected {L.dim} rows")
    matrix = [_vector(r, L.dim, f"{where}.xi[{k}]") for k, r in enumerate(rows)]
    return Involution(L, matrix)


def involution_to_dict(inv: Involution) -> dict:
    return {
        "algebra": algebra_to_dict(inv.ambient),
        "xi": [[format_rational(x) for x in row] for row in inv.matrix],
    }


def detect_kind(d) -> str:
    if isinstance(d, dict):
        if "xi" in d:
            return INVOLUTION
        if "action" in d:
            return MODULE
        if "brackets" in d:
            return ALGEBRA
    raise InputError("cannot tell whether the file holds an algebra, module or involution")


def load(path: str):
    """Parse ``path``; returns ``(kind, object)``."""
    d = _load_json(path)
    kind = detect_kind(d)
    base = os.path.dirname(os.path.abspath(path))
    where = os.path.basename(path)
    if kind == ALGEBRA:
        return kind, algebra_from_dict(d, where)
    if kind == MODULE:
        return kind, module_from_dict(d, base, where)
    return kind, involution_from_dict(d, base, where)


def digest(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def dumps(d) -> str:
    return json.dumps(d, indent=2, sort_keys=True) + "\n"
