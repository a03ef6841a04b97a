"""JSON system files.

Layout::

    {
      "rank": 3,
      "vertices": [{"id": "v0", "moment": [2, 0, -2], "isotropy": [[[0,1,0],[1,0,0],[0,0,1]]]}],
      "congruences": [{"terms": [{"coeff": "1", "vertex": "v0", "twist": [[...]]}],
                       "modulus": [1, -1, 0], "order": 1}],
      "classes": {"sigma": {"v0": "2*x1 - 2*x3"}},
      "group": [[[...]]]
    }

``twist`` and ``group`` are optional.  Coefficients are strings ``"a"`` or
``"a/b"``; class values use the polynomial grammar of
:func:`gkmring.poly.parse_polynomial`.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .errors import GKMError, ParseError, UnknownVariable
from .gkm import CongruenceConstraint, CongruenceSystem, Term, Vertex
from .lattice import WeylElement
from .poly import parse_polynomial


class SystemFileError(GKMError):
    pass


def _matrix(value, where):
    if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
        raise SystemFileError(f"{where}: expected a matrix (list of integer rows)")
    try:
        return WeylElement(tuple(tuple(int(x) for x in row) for row in value))
    except (TypeError, ValueError) as exc:
        raise SystemFileError(f"{where}: {exc}") from None


def _int_list(value, where):
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool)
                                              for x in value):
        raise SystemFileError(f"{where}: expected a list of integers")
    return tuple(value)


def _rational(value, where):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise SystemFileError(f"{where}: expected a rational string such as \"3/2\"")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise SystemFileError(f"{where}: bad rational {value!r}") from None


def _require(doc, key, where):
    if key not in doc:
        raise SystemFileError(f"{where}: missing field {key!r}")
    return doc[key]


def system_from_dict(doc: dict) -> CongruenceSystem:
    if not isinstance(doc, dict):
        raise SystemFileError("top level must be an object")
    rank = _require(doc, "rank", "system")
    if not isinstance(rank, int) or rank < 1:
        raise SystemFileError("rank must be a positive integer")
    vertices = []
    for k, v in enumerate(_require(doc, "vertices", "system")):
        where = f"vertices[{k}]"
        vid = _require(v, "id", where)
        if not isinstance(vid, str):
            raise SystemFileError(f"{where}.id: expected a string")
        moment = _int_list(_require(v, "moment", where), f"{where}.moment")
        iso = tuple(_matrix(m, f"{where}.isotropy[{i}]") for i, m in enumerate(v.get("isotropy", [])))
        vertices.append(Vertex(vid, moment, iso))
    constraints = []
    for k, c in enumerate(doc.get("congruences", [])):
        where = f"congruences[{k}]"
        terms = []
        for i, t in enumerate(_require(c, "terms", where)):
            tw = f"{where}.terms[{i}]"
            twist = _matrix(t["twist"], f"{tw}.twist") if t.get("twist") is not None else None
            vertex = _require(t, "vertex", tw)
            terms.append(Term(_rational(t.get("coeff", "1"), f"{tw}.coeff"), vertex, twist))
        if not terms:
            raise SystemFileError(f"{where}: needs at least one term")
        modulus = _int_list(_require(c, "modulus", where), f"{where}.modulus")
        order = c.get("order", 1)
        if not isinstance(order, int) or order < 0:
            raise SystemFileError(f"{where}.order: expected a nonnegative integer")
        constraints.append(CongruenceConstraint(tuple(terms), modulus, order))
    classes = {}
    for name, values in doc.get("classes", {}).items():
        parsed = {}
        for vid, text in values.items():
            where = f"classes.{name}.{vid}"
            try:
                parsed[vid] = parse_polynomial(str(text), rank)
            except (ParseError, UnknownVariable) as exc:
                raise SystemFileError(f"{where}: {exc}") from None
        classes[name] = parsed
    group = None
    if doc.get("group") is not None:
        group = tuple(_matrix(m, f"group[{i}]") for i, m in enumerate(doc["group"]))
    return CongruenceSystem(rank, vertices, constraints, classes, group)


def loads(text: str) -> CongruenceSystem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SystemFileError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return system_from_dict(doc)


def load(path) -> CongruenceSystem:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SystemFileError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def _rat_str(x: Fraction) -> str:
    return str(Fraction(x))


def _mat(g: WeylElement):
    return [list(row) for row in g.matrix]


def system_to_dict(sys: CongruenceSystem) -> dict:
    doc = {"rank": sys.rank, "vertices": [], "congruences": [], "classes": {}}
    for v in sys.vertices:
        doc["vertices"].append({"id": v.id, "moment": list(v.moment),
                                "isotropy": [_mat(g) for g in v.isotropy]})
    for c in sys.constraints:
        terms = []
        for t in c.terms:
            entry = {"coeff": _rat_str(t.coeff), "vertex": t.vertex}
            if t.twist is not None:
                entry["twist"] = _mat(t.twist)
            terms.append(entry)
        doc["congruences"].append({"terms": terms, "modulus": list(c.modulus), "order": c.order})
    for name, values in sys.named_classes.items():
        tup = sys.make_class(values)
        doc["classes"][name] = {vid: str(p) for vid, p in tup.items()}
    if sys.group is not None:
        doc["group"] = [_mat(g) for g in sys.group]
    return doc


def dumps(sys: CongruenceSystem) -> str:
    return json.dumps(system_to_dict(sys), indent=2) + "\n"


def dump(sys: CongruenceSystem, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(sys))
