"""JSON serialization for quivers, representations, morphisms, and
pointed matrices.

Scalars are rendered as "p/q" strings ("p" when the denominator is 1).
Algebra elements are lists of terms {"coeff", "path"}, where "path"
lists arrow names in application order and a trivial path carries its
vertex instead.
"""

from __future__ import annotations

import json
from typing import Any

from .linalg import Mat, QQ, scalar_to_str
from .matsub import PointedMatrix
from .quiver import AlgebraElement, AlgebraPresentation, Quiver, trivial_path
from .reps import Morphism, Representation


class SerializationError(ValueError):
    pass


def matrix_to_json(m: Mat) -> list[list[str]]:
    return [[scalar_to_str(x) for x in row] for row in m.entries]


def matrix_from_json(data, rows: int, cols: int, field=QQ) -> Mat:
    if len(data) != rows or any(len(r) != cols for r in data):
        raise SerializationError(f"matrix data is not {rows}x{cols}")
    return Mat([[field.of(x) for x in row] for row in data], rows, cols)


def element_to_json(el: AlgebraElement) -> list[dict]:
    out = []
    for path, coeff in el.terms.items():
        term: dict[str, Any] = {"coeff": scalar_to_str(coeff), "path": list(path.arrows)}
        if path.is_trivial():
            term["vertex"] = path.source
        out.append(term)
    return out


def element_from_json(presentation: AlgebraPresentation, data) -> AlgebraElement:
    terms = {}
    for term in data:
        coeff = QQ.of(term["coeff"])
        arrows = term.get("path", [])
        if arrows:
            el = presentation.path_element(arrows)
            path = next(iter(el.terms))
        else:
            vertex = term.get("vertex")
            if vertex is None:
                raise SerializationError("trivial-path term needs a vertex")
            path = trivial_path(vertex)
        terms[path] = terms.get(path, QQ.zero) + coeff
    return AlgebraElement(presentation, terms)


def presentation_to_json(pres: AlgebraPresentation) -> dict:
    return {
        "vertices": list(pres.quiver.vertices),
        "arrows": [
            {"name": a.name, "source": a.source, "target": a.target} for a in pres.quiver.arrows
        ],
        "relations": [element_to_json(rel) for rel in pres.relations],
    }


def presentation_from_json(data) -> AlgebraPresentation:
    quiver = Quiver(
        data["vertices"],
        [(a["name"], a["source"], a["target"]) for a in data["arrows"]],
    )
    bare = AlgebraPresentation(quiver, ())
    relations = [element_from_json(bare, rel) for rel in data.get("relations", [])]
    return AlgebraPresentation(quiver, relations)


def representation_to_json(rep: Representation, include_algebra: bool = True) -> dict:
    out: dict[str, Any] = {
        "dims": {v: rep.dim(v) for v in rep.presentation.quiver.vertices},
        "matrices": {name: matrix_to_json(m) for name, m in sorted(rep.matrices.items())},
    }
    if include_algebra:
        out["algebra"] = presentation_to_json(rep.presentation)
    return out


def representation_from_json(data, presentation: AlgebraPresentation | None = None, field=QQ) -> Representation:
    if presentation is None:
        if "algebra" not in data:
            raise SerializationError("representation data lacks an algebra")
        presentation = presentation_from_json(data["algebra"])
    dims = {v: int(d) for v, d in data["dims"].items()}
    matrices = {}
    for a in presentation.quiver.arrows:
        rows, cols = dims.get(a.target, 0), dims.get(a.source, 0)
        raw = data.get("matrices", {}).get(a.name)
        if raw is None:
            continue
        matrices[a.name] = matrix_from_json(raw, rows, cols, field)
    return Representation(presentation, dims, matrices, field)


def morphism_to_json(f: Morphism) -> dict:
    return {
        "source_dims": {v: f.source.dim(v) for v in f.source.presentation.quiver.vertices},
        "target_dims": {v: f.target.dim(v) for v in f.target.presentation.quiver.vertices},
        "blocks": {v: matrix_to_json(m) for v, m in sorted(f.blocks.items())},
    }


def pointed_matrix_to_json(pm: PointedMatrix, include_algebra: bool = True) -> dict:
    out: dict[str, Any] = {
        "entries": [[element_to_json(el) for el in row] for row in pm.entries],
        "pointer": pm.pointer,
    }
    if include_algebra:
        out["algebra"] = presentation_to_json(pm.presentation)
    return out


def pointed_matrix_from_json(data, presentation: AlgebraPresentation | None = None) -> PointedMatrix:
    if presentation is None:
        if "algebra" not in data:
            raise SerializationError("pointed matrix data lacks an algebra")
        presentation = presentation_from_json(data["algebra"])
    entries = tuple(
        tuple(element_from_json(presentation, el) for el in row) for row in data["entries"]
    )
    return PointedMatrix(entries, int(data["pointer"]))


def load_family_file(path: str, field=QQ):
    """Read {"algebra": ..., "members": [...]} and return the members."""
    with open(path) as fh:
        data = json.load(fh)
    if "members" not in data:
        raise SerializationError("family file lacks a members list")
    presentation = presentation_from_json(data["algebra"]) if "algebra" in data else None
    return [representation_from_json(m, presentation, field) for m in data["members"]]
