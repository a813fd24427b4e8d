"""JSON encodings for the values the command line moves around.

Schemas are fixed key-by-key so serialized output is byte-deterministic:
rational scalars travel as "p/q" strings, Gaussian rationals as
{"re": "p/q", "im": "p/q"} objects, complex numbers as [re, im] pairs of
floats. Readers classify a scalar by that shape, so containers carrying
mixed exact entries widen to the join of the fields they mention.
"""

from __future__ import annotations

import re

from . import scalars
from .diagrams import Letter, PlanarDiagram, TLWord
from .errors import InvalidParameter
from .fiber import TensorMap
from .hopf import HopfPresentation, NCQuadratic, StarStructure, antipode_matrix, star_structure
from .matrices import Matrix
from .multiplicity import MultiplicityFunction
from .scalars import Field
from .unitary import SpectralInvariant

_WIDENING = (Field.RATIONAL, Field.CRATIONAL, Field.COMPLEX)


def _fail(what, obj):
    raise InvalidParameter("%s, got %r" % (what, obj))


def _need(obj, key):
    if not isinstance(obj, dict) or key not in obj:
        _fail("expected an object with key %r" % key, obj)
    return obj[key]


def _count(value, what):
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        _fail("%s must be a nonnegative integer" % what, value)
    return value


def _field_of_json(entry) -> Field:
    if isinstance(entry, bool):
        _fail("unrecognized scalar encoding", entry)
    if isinstance(entry, (str, int)):
        return Field.RATIONAL
    if isinstance(entry, float):
        return Field.COMPLEX
    if isinstance(entry, dict):
        return Field.CRATIONAL
    if isinstance(entry, list):
        return Field.COMPLEX
    _fail("unrecognized scalar encoding", entry)


def _scalar_from(entry):
    return scalars.scalar_from_json(entry, _field_of_json(entry))


def _join(fields) -> Field:
    return _WIDENING[max(_WIDENING.index(f) for f in fields)]


def matrix_to_json(m: Matrix) -> dict:
    return {
        "scalar": m.field.value,
        "rows": m.rows,
        "cols": m.cols,
        "data": [scalars.scalar_to_json(x, m.field) for x in m.data],
    }


def matrix_from_json(obj) -> Matrix:
    try:
        field = Field(_need(obj, "scalar"))
    except ValueError:
        _fail("unknown scalar field", obj.get("scalar"))
    rows = _count(_need(obj, "rows"), "rows")
    cols = _count(_need(obj, "cols"), "cols")
    data = _need(obj, "data")
    if not isinstance(data, list) or len(data) != rows * cols:
        _fail("data must list %d scalars" % (rows * cols), data)
    return Matrix(rows, cols,
                  tuple(scalars.scalar_from_json(x, field) for x in data), field)


def diagram_to_json(d: PlanarDiagram) -> dict:
    return {
        "source": d.source,
        "target": d.target,
        "pairs": [list(p) for p in d.pairs],
        "loops": d.loops,
    }


def diagram_from_json(obj) -> PlanarDiagram:
    source = _count(_need(obj, "source"), "source")
    target = _count(_need(obj, "target"), "target")
    pairs = _need(obj, "pairs")
    if not isinstance(pairs, list) or any(
            not isinstance(p, list) or len(p) != 2 for p in pairs):
        _fail("pairs must be a list of 2-element lists", pairs)
    loops = _count(obj.get("loops", 0), "loops")
    try:
        return PlanarDiagram(source, target,
                             tuple((p[0], p[1]) for p in pairs), loops)
    except ValueError as err:
        raise InvalidParameter(str(err)) from err


def word_to_json(w: TLWord) -> dict:
    return {
        "source": w.source,
        "letters": [[let.op, let.i] for let in w.letters],
    }


def word_from_json(obj) -> TLWord:
    source = _count(_need(obj, "source"), "source")
    letters = _need(obj, "letters")
    if not isinstance(letters, list):
        _fail("letters must be a list", letters)
    out = []
    for item in letters:
        if (not isinstance(item, list) or len(item) != 2
                or not isinstance(item[0], str)):
            _fail("each letter is an [op, index] pair", item)
        out.append(Letter(item[0], _count(item[1], "letter index")))
    return TLWord(source, tuple(out))


def tensor_map_to_json(t: TensorMap) -> dict:
    return {
        "in": t.in_legs,
        "out": t.out_legs,
        "N": t.n,
        "data": [scalars.scalar_to_json(x, t.matrix.field)
                 for x in t.matrix.data],
    }


def tensor_map_from_json(obj) -> TensorMap:
    in_legs = _count(_need(obj, "in"), "in")
    out_legs = _count(_need(obj, "out"), "out")
    n = _count(_need(obj, "N"), "N")
    data = _need(obj, "data")
    want = (n ** out_legs) * (n ** in_legs)
    if not isinstance(data, list) or len(data) != want:
        _fail("data must list %d scalars" % want, data)
    field = _join([_field_of_json(x) for x in data]) if data else Field.RATIONAL
    entries = tuple(scalars.embed(_scalar_from(x), field) for x in data)
    return TensorMap(in_legs, out_legs, n,
                     Matrix(n ** out_legs, n ** in_legs, entries, field))


def multiplicity_to_json(mu: MultiplicityFunction) -> dict:
    return {
        "entries": [
            {"eigenvalue": scalars.scalar_to_json(z, scalars.field_of(z)),
             "sizes": list(sizes)}
            for z, sizes in mu.entries
        ],
    }


def multiplicity_from_json(obj) -> MultiplicityFunction:
    entries = _need(obj, "entries")
    if not isinstance(entries, list):
        _fail("entries must be a list", entries)
    out = []
    for item in entries:
        z = _scalar_from(_need(item, "eigenvalue"))
        sizes = _need(item, "sizes")
        if not isinstance(sizes, list):
            _fail("sizes must be a list of counts", sizes)
        out.append((z, tuple(_count(k, "block count") for k in sizes)))
    try:
        return MultiplicityFunction.of(out)
    except ValueError as err:
        raise InvalidParameter(str(err)) from err


def invariant_to_json(inv: SpectralInvariant) -> dict:
    return {
        "values": [float(h) for h in inv.values],
        "sign": inv.sign,
        "m": inv.m,
    }


def invariant_from_json(obj) -> SpectralInvariant:
    values = _need(obj, "values")
    if not isinstance(values, list) or not all(
            isinstance(h, (int, float)) and not isinstance(h, bool)
            for h in values):
        _fail("values must be a list of reals", values)
    sign = _need(obj, "sign")
    if sign not in (1, -1):
        _fail("sign must be +1 or -1", sign)
    m = _count(_need(obj, "m"), "m")
    return SpectralInvariant(tuple(float(h) for h in values), sign, m)


_PAIR = re.compile(r"\((\d+),(\d+)\)")


def _key_to_str(key) -> str:
    return "(%d,%d)" % key


def _str_to_pairs(text, want: int):
    if not isinstance(text, str):
        _fail("generator keys are strings", text)
    found = _PAIR.findall(text)
    if len(found) != want or _PAIR.sub("", text):
        _fail("expected %d (i,j) groups" % want, text)
    return [(int(i), int(j)) for i, j in found]


def _relation_to_json(rel: NCQuadratic, field: Field) -> dict:
    return {
        "const": scalars.scalar_to_json(scalars.embed(rel.constant, field), field),
        "lin": {_key_to_str(k): scalars.scalar_to_json(scalars.embed(c, field), field)
                for k, c in rel.linear},
        "quad": {_key_to_str(k[0]) + _key_to_str(k[1]):
                 scalars.scalar_to_json(scalars.embed(c, field), field)
                 for k, c in rel.quadratic},
    }


def _relation_from_json(obj, n: int) -> NCQuadratic:
    const = _scalar_from(_need(obj, "const"))
    lin_in = _need(obj, "lin")
    quad_in = _need(obj, "quad")
    if not isinstance(lin_in, dict) or not isinstance(quad_in, dict):
        _fail("lin and quad must be objects", obj)
    lin = {}
    for key, c in lin_in.items():
        (pair,) = _str_to_pairs(key, 1)
        lin[pair] = _scalar_from(c)
    quad = {}
    for key, c in quad_in.items():
        left, right = _str_to_pairs(key, 2)
        quad[(left, right)] = _scalar_from(c)
    fields = ([scalars.field_of(const)]
              + [scalars.field_of(c) for c in lin.values()]
              + [scalars.field_of(c) for c in quad.values()])
    return NCQuadratic.build(n, constant=const, linear=lin, quadratic=quad,
                             field=_join(fields))


def presentation_to_json(p: HopfPresentation) -> dict:
    field = _join([r.field for r in p.relations] + [p.antipode.field])
    out = {
        "n": p.n,
        "relations": [_relation_to_json(r, field) for r in p.relations],
        "antipode": [
            [scalars.scalar_to_json(scalars.embed(p.antipode.at(i, j), field), field)
             for j in range(p.antipode.cols)]
            for i in range(p.antipode.rows)
        ],
    }
    if p.star is not None:
        out["star"] = {"T": [
            [scalars.scalar_to_json(x, p.star.t.field) for x in p.star.t.row(i)]
            for i in range(2)
        ]}
    return out


def _star_from_json(obj) -> StarStructure:
    rows = _need(obj, "T")
    if (not isinstance(rows, list) or len(rows) != 2
            or any(not isinstance(r, list) or len(r) != 2 for r in rows)):
        _fail("star frame T must be 2 x 2", rows)
    t = [[_scalar_from(x) for x in r] for r in rows]
    if not (scalars.is_zero(t[0][0]) and scalars.is_zero(t[1][1])):
        _fail("star frame T must be antidiagonal", rows)
    h = t[0][1]
    low = t[1][0]
    for sign in (1, -1):
        back = star_structure(h, sign) if _real_at_least_one(h) else None
        if back is not None and scalars.is_zero(back.t.at(1, 0) - scalars.embed(
                low, back.t.field)):
            return back
    _fail("star frame T is not [[0,h],[sign/h,0]] with h >= 1", rows)


def _real_at_least_one(h) -> bool:
    z = scalars.to_complex(h)
    return z.imag == 0 and z.real >= 1


def presentation_from_json(obj) -> HopfPresentation:
    n = _count(_need(obj, "n"), "n")
    rel_objs = _need(obj, "relations")
    if not isinstance(rel_objs, list):
        _fail("relations must be a list", rel_objs)
    relations = tuple(_relation_from_json(r, n) for r in rel_objs)
    anti = _need(obj, "antipode")
    if (not isinstance(anti, list) or len(anti) != n * n
            or any(not isinstance(r, list) or len(r) != n * n for r in anti)):
        _fail("antipode must be %d x %d" % (n * n, n * n), anti)
    flat = [_scalar_from(x) for row in anti for x in row]
    field = _join([scalars.field_of(x) for x in flat]) if flat else Field.RATIONAL
    antipode = Matrix(n * n, n * n,
                      tuple(scalars.embed(x, field) for x in flat), field)
    star = _star_from_json(obj["star"]) if "star" in obj else None
    return HopfPresentation(n, relations, antipode, star)
