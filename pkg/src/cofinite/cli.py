"""Batch command line: one JSON problem document in, one JSON result out.

Exit codes: 0 success (an infinite complement is a successful answer),
2 malformed input, 3 unmet precondition such as S not inside C,
4 two algorithms disagreed.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass

from .affine import (
    AffineSemigroup,
    extreme_rays,
    factorizations,
    gaps_Nn,
    is_C_cofinite,
    is_Nn_cofinite,
    member,
    relative_gaps_detail,
)
from .diophantine import hilbert_basis, minimal_solutions
from .errors import AlgorithmDisagreement, DimensionMismatch, PreconditionError
from .groebner import ideal_complement_groebner
from .ideal import (
    METHODS,
    SemigroupIdeal,
    complement_by_box,
    complement_by_preimage,
    is_ideal_cofinite,
)
from .lattice import ORDER_KINDS, TermOrder

KINDS = {
    "gaps": "relative-gaps",
    "cofinite": "cofinite-check",
    "ideal": "ideal-complement",
    "apery": "apery",
    "hilbert": "hilbert",
    "factorize": "factorize",
}

_INT = re.compile(r"[+-]?\d+")


class MalformedDocument(ValueError):
    pass


def _int(x, where: str) -> int:
    if isinstance(x, bool):
        raise MalformedDocument(f"{where}: expected an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str) and _INT.fullmatch(x.strip()):
        return int(x)
    raise MalformedDocument(f"{where}: expected an integer, got {x!r}")


def _vector(x, where: str) -> tuple:
    if isinstance(x, (int, str)) and not isinstance(x, bool):
        return (_int(x, where),)
    if not isinstance(x, list) or not x:
        raise MalformedDocument(f"{where}: expected a non-empty list of integers")
    return tuple(_int(v, f"{where}[{k}]") for k, v in enumerate(x))


def _vectors(x, where: str) -> list:
    if not isinstance(x, list) or not x:
        raise MalformedDocument(f"{where}: expected a non-empty list of vectors")
    out = [_vector(v, f"{where}[{k}]") for k, v in enumerate(x)]
    if len({len(v) for v in out}) != 1:
        raise DimensionMismatch(f"{where}: vectors of different dimension")
    return out


@dataclass
class ProblemDocument:
    kind: str
    ambient: list | None = None
    sub: list | None = None
    ideal_base: list | None = None
    order: str | None = None
    method: str | None = None
    matrix: list | None = None
    rhs: tuple | None = None
    vector: tuple | None = None

    @classmethod
    def parse(cls, raw) -> "ProblemDocument":
        if not isinstance(raw, dict):
            raise MalformedDocument("document must be a JSON object")
        known = {"kind", "ambient", "sub", "ideal_base", "order", "method", "matrix", "rhs", "vector"}
        extra = set(raw) - known
        if extra:
            raise MalformedDocument(f"unknown fields: {sorted(extra)}")
        kind = raw.get("kind")
        if kind not in KINDS.values():
            raise MalformedDocument(f"kind must be one of {sorted(KINDS.values())}")
        doc = cls(kind=kind)
        for name in ("ambient", "sub", "ideal_base", "matrix"):
            if raw.get(name) is not None:
                setattr(doc, name, _vectors(raw[name], name))
        for name in ("rhs", "vector"):
            if raw.get(name) is not None:
                setattr(doc, name, _vector(raw[name], name))
        order = raw.get("order")
        if order is not None and order not in ORDER_KINDS:
            raise MalformedDocument(f"order must be one of {list(ORDER_KINDS)}")
        doc.order = order
        method = raw.get("method")
        if method is not None and method not in METHODS + ("all",):
            raise MalformedDocument(f"method must be one of {list(METHODS) + ['all']}")
        doc.method = method
        doc._require()
        return doc

    def _require(self):
        need = {
            "relative-gaps": ["ambient"],
            "cofinite-check": ["ambient"],
            "ideal-complement": ["ambient", "ideal_base"],
            "apery": ["ambient"],
            "hilbert": ["matrix"],
            "factorize": ["ambient", "vector"],
        }[self.kind]
        missing = [f for f in need if getattr(self, f) is None]
        if missing:
            raise MalformedDocument(f"{self.kind} needs {', '.join(missing)}")


def _lists(vectors) -> list:
    return [list(v) for v in vectors]


def _ambient_pair(doc: ProblemDocument):
    """(C, S): with no ``sub`` the ambient semigroup is S inside C = N^d."""
    if doc.sub is None:
        d = len(doc.ambient[0])
        unit = [tuple(int(i == k) for i in range(d)) for k in range(d)]
        return AffineSemigroup(unit), AffineSemigroup(doc.ambient)
    return AffineSemigroup(doc.ambient), AffineSemigroup(doc.sub)


def _relative_gaps(doc):
    c, s = _ambient_pair(doc)
    if doc.sub is None:
        if not is_Nn_cofinite(s.generators):
            return {"finite": False, "gaps": None}
        return {"finite": True, "gaps": _lists(gaps_Nn(s.generators))}
    detail = relative_gaps_detail(c, s)
    out = {"finite": detail.cofinite, "gaps": _lists(detail.gaps) if detail.cofinite else None,
           "preimage_generators": _lists(detail.preimage_generators)}
    if detail.cofinite:
        out["preimage_gaps"] = _lists(detail.preimage_gaps)
    return out


def _report(c, s) -> dict:
    r = is_C_cofinite(c, s)
    return {
        "cofinite": r.cofinite,
        "axis_semigroups": [None if a is None else list(a.generators) for a in r.axis_semigroups],
        "mixing": [{"i": i, "j": j, "n": k} for (i, j), k in sorted(r.mixing.items())],
    }


def _cofinite_check(doc):
    if doc.ideal_base is not None:
        ideal = SemigroupIdeal(doc.ambient, doc.ideal_base)
        w = is_ideal_cofinite(ideal)
        return {"cofinite": w.finite, "base": _lists(ideal.base), "multiples": list(w.witnesses)}
    return _report(*_ambient_pair(doc))


def _complement(ideal: SemigroupIdeal, method: str, order) -> dict:
    runners = {
        "box": complement_by_box,
        "preimage": complement_by_preimage,
        "groebner": lambda i: ideal_complement_groebner(i, order),
    }
    names = METHODS if method == "all" else (method,)
    results = {name: runners[name](ideal) for name in names}
    first = results[names[0]]
    for name, r in results.items():
        if (r.finite, r.complement) != (first.finite, first.complement):
            raise AlgorithmDisagreement(f"{names[0]} and {name} disagree on S \\ I")
    return {
        "methods": list(names),
        "finite": first.finite,
        "complement": _lists(first.complement) if first.finite else None,
        "multiples": list(first.witnesses or is_ideal_cofinite(ideal).witnesses),
    }


def _ideal_complement(doc):
    ideal = SemigroupIdeal(doc.ambient, doc.ideal_base)
    out = {"base": _lists(ideal.base)}
    out.update(_complement(ideal, doc.method or "box", TermOrder(doc.order or "grevlex")))
    return out


def _apery(doc):
    s = AffineSemigroup(doc.ambient)
    base = doc.ideal_base if doc.ideal_base is not None else extreme_rays(s)
    res = _complement(SemigroupIdeal(s, base), doc.method or "box", TermOrder(doc.order or "grevlex"))
    return {"with_respect_to": _lists(base), "methods": res["methods"],
            "finite": res["finite"], "apery": res["complement"]}


def _hilbert(doc):
    if doc.rhs is None:
        return {"basis": _lists(hilbert_basis(doc.matrix))}
    return {"minimal_solutions": _lists(minimal_solutions(doc.matrix, doc.rhs))}


def _factorize(doc):
    s = AffineSemigroup(doc.ambient)
    return {"member": member(s, doc.vector), "factorizations": _lists(factorizations(s, doc.vector))}


_DISPATCH = {
    "relative-gaps": _relative_gaps,
    "cofinite-check": _cofinite_check,
    "ideal-complement": _ideal_complement,
    "apery": _apery,
    "hilbert": _hilbert,
    "factorize": _factorize,
}


def run(document, timing: bool = False) -> dict:
    """Solve one problem document (a dict or a ProblemDocument)."""
    doc = document if isinstance(document, ProblemDocument) else ProblemDocument.parse(document)
    start = time.perf_counter()
    result = _DISPATCH[doc.kind](doc)
    out = {"kind": doc.kind, "result": result}
    if timing:
        out["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    return out


def _table(out: dict) -> str:
    lines = [f"kind: {out['kind']}"]
    for key, value in out["result"].items():
        if isinstance(value, list) and value and isinstance(value[0], (list, dict)):
            lines.append(f"{key}: [{len(value)}]")
            for item in value:
                lines.append(f"  {_cell(item)}")
        else:
            lines.append(f"{key}: {_cell(value)}")
    if "timing" in out:
        lines.append(f"seconds: {out['timing']['seconds']}")
    return "\n".join(lines)


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, dict):
        return " ".join(f"{k}={_cell(x)}" for k, x in v.items())
    if isinstance(v, list):
        return "(" + ", ".join(_cell(x) for x in v) + ")"
    return str(v).lower() if isinstance(v, bool) else str(v)


def render(obj, indent: int = 0) -> str:
    """JSON with one vector per line: flat lists stay inline, containers nest."""
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(obj, dict) and any(isinstance(v, (list, dict)) for v in obj.values()):
        items = [f"{inner}{json.dumps(k)}: {render(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(obj, list) and any(isinstance(x, (list, dict)) for x in obj):
        items = [f"{inner}{render(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    return json.dumps(obj, separators=(", ", ": "))


def _emit(out: dict, fmt: str) -> None:
    print(_table(out) if fmt == "table" else render(out))


def _fail(code: int, kind: str, message: str) -> int:
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)
    return code


def _selftest(args) -> int:
    from .selftest import run_selftest

    tallies = run_selftest(args.seed, args.count)
    out = {"kind": "selftest", "result": {
        name: {"instances": t.instances, "finite": t.finite, "problems": t.problems}
        for name, t in tallies.items()
    }}
    _emit(out, args.format)
    return 4 if any(t.problems for t in tallies.values()) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cofinite", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("structured", "table"), default="structured")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in KINDS:
        p = sub.add_parser(name, parents=[common], help=f"{KINDS[name]} problem")
        p.add_argument("--input", metavar="PATH", help="problem document (default: stdin)")
        p.add_argument("--method", choices=METHODS + ("all",), help="override the document's method")
        p.add_argument("--order", choices=ORDER_KINDS, help="term order for the Gröbner route")
        p.add_argument("--timing", action="store_true", help="add wall-clock timing to the output")
    p = sub.add_parser("selftest", parents=[common], help="randomized cross-check of all algorithms")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=20)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "selftest":
        return _selftest(args)
    try:
        text = open(args.input, encoding="utf-8").read() if args.input else sys.stdin.read()
        raw = json.loads(text)
        if isinstance(raw, dict):
            raw.setdefault("kind", KINDS[args.command])
            if raw["kind"] != KINDS[args.command]:
                raise MalformedDocument(f"document kind {raw['kind']!r} does not match '{args.command}'")
            for flag in ("method", "order"):
                if getattr(args, flag):
                    raw[flag] = getattr(args, flag)
        out = run(raw, timing=args.timing)
    except (OSError, json.JSONDecodeError, MalformedDocument, DimensionMismatch) as e:
        return _fail(2, "malformed", str(e))
    except PreconditionError as e:
        return _fail(3, "precondition", str(e))
    except AlgorithmDisagreement as e:
        return _fail(4, "disagreement", str(e))
    _emit(out, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
