"""Workspace files: named algebras, groupoids, semigroups, and actions in
one JSON document, with the tasks to run against them.

All integers are residues in [0, p).  Ideal bases are row matrices over
the carrier; action maps are matrices acting on the listed ideal bases.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .actions import InvSgpAction, POAction
from .algebras import Algebra
from .errors import WorkspaceError
from .groupoids import OrderedGroupoid
from .linalg import LinMap, Subspace, express
from .semigroups import InverseSemigroup


@dataclass
class Workspace:
    algebras: dict[str, Algebra] = field(default_factory=dict)
    groupoids: dict[str, OrderedGroupoid] = field(default_factory=dict)
    semigroups: dict[str, InverseSemigroup] = field(default_factory=dict)
    actions: dict[str, POAction] = field(default_factory=dict)
    inv_actions: dict[str, InvSgpAction] = field(default_factory=dict)
    tasks: list[dict[str, Any]] = field(default_factory=list)

    def action(self, name: str) -> POAction:
        try:
            return self.actions[name]
        except KeyError:
            raise WorkspaceError(f"unknown action {name!r}")

    def inv_action(self, name: str) -> InvSgpAction:
        try:
            return self.inv_actions[name]
        except KeyError:
            raise WorkspaceError(f"unknown inverse-semigroup action {name!r}")


# -- serialization ---------------------------------------------------------


def algebra_to_json(alg: Algebra) -> dict:
    return {
        "p": alg.p,
        "dim": alg.dim,
        "structure": [[list(entry) for entry in row] for row in alg.table],
        "unit": list(alg.unit) if alg.unit is not None else None,
    }


def algebra_from_json(doc: dict, name: str) -> Algebra:
    try:
        return Algebra(
            doc["p"], doc["dim"], doc["structure"], unit=doc.get("unit"), name=name
        )
    except KeyError as exc:
        raise WorkspaceError(f"algebra {name!r}: missing field {exc}")


def groupoid_to_json(g: OrderedGroupoid) -> dict:
    nm = g.names
    return {
        "arrows": list(nm),
        "objects": [nm[e] for e in sorted(g.objects)],
        "inv": {nm[a]: nm[g.inv[a]] for a in g.arrows()},
        "comp": sorted(
            [nm[a], nm[b], nm[c]] for (a, b), c in g.comp.items()
        ),
        "order": sorted(
            [nm[a], nm[b]]
            for a in g.arrows()
            for b in g.arrows()
            if a != b and g.leq[a][b]
        ),
    }


def groupoid_from_json(doc: dict, name: str) -> OrderedGroupoid:
    from .errors import InvalidGroupoid

    try:
        return OrderedGroupoid.from_parts(
            doc["arrows"],
            doc["objects"],
            doc["inv"],
            [tuple(t) for t in doc["comp"]],
            [tuple(t) for t in doc["order"]],
        )
    except KeyError as exc:
        raise WorkspaceError(f"groupoid {name!r}: missing field {exc}")
    except (InvalidGroupoid, ValueError, TypeError) as exc:
        raise WorkspaceError(f"groupoid {name!r}: {exc}")


def semigroup_to_json(s: InverseSemigroup) -> dict:
    nm = s.names
    return {
        "elements": list(nm),
        "mult": [[nm[x] for x in row] for row in s.mult],
    }


def semigroup_from_json(doc: dict, name: str) -> InverseSemigroup:
    try:
        names = doc["elements"]
        index = {n: i for i, n in enumerate(names)}
        mult = [[index[x] for x in row] for row in doc["mult"]]
        return InverseSemigroup(names, mult)
    except KeyError as exc:
        raise WorkspaceError(f"semigroup {name!r}: unknown element or field {exc}")


def _maps_to_json(names, ideal_of, map_of) -> dict:
    return {
        "ideals": {names[i]: [list(v) for v in ideal_of[i].basis] for i in range(len(names))},
        "maps": {names[i]: [list(r) for r in map_of[i].matrix] for i in range(len(names))},
    }


def action_to_json(a: POAction, groupoid_name: str, algebra_name: str) -> dict:
    doc = {"groupoid": groupoid_name, "algebra": algebra_name}
    doc.update(_maps_to_json(a.groupoid.names, a.ideal_of, a.map_of))
    return doc


def inv_action_to_json(a: InvSgpAction, semigroup_name: str, algebra_name: str) -> dict:
    doc = {"semigroup": semigroup_name, "algebra": algebra_name}
    doc.update(_maps_to_json(a.semigroup.names, a.ideal_of, a.map_of))
    return doc


def _parse_family(
    doc: dict, names, inv, carrier: Algebra, where: str
) -> tuple[tuple[Subspace, ...], tuple[LinMap, ...]]:
    ideals_doc = doc.get("ideals", {})
    maps_doc = doc.get("maps", {})
    index = {n: i for i, n in enumerate(names)}
    for key in list(ideals_doc) + list(maps_doc):
        if key not in index:
            raise WorkspaceError(f"{where}: unknown arrow {key!r}")
    listed: list[list[list[int]]] = []
    ideals: list[Subspace] = []
    for n in names:
        rows = ideals_doc.get(n)
        if rows is None:
            raise WorkspaceError(f"{where}: missing ideal for {n!r}")
        listed.append([list(r) for r in rows])
        ideals.append(Subspace.span(carrier.dim, rows, carrier.p))
    maps: list[LinMap] = []
    for i, n in enumerate(names):
        matrix = maps_doc.get(n)
        if matrix is None:
            raise WorkspaceError(f"{where}: missing map for {n!r}")
        src = inv(i)
        src_rows = listed[src]
        if len(matrix) != len(src_rows):
            raise WorkspaceError(
                f"{where}: map at {n!r} must have one row per listed basis vector "
                f"of the ideal at {names[src]!r}"
            )
        dst_rows = listed[i]
        p = carrier.p
        listed_images = []
        for row in matrix:
            if len(row) != len(dst_rows):
                raise WorkspaceError(f"{where}: map at {n!r} has a row of wrong width")
            img = [0] * carrier.dim
            for c, dst in zip(row, dst_rows):
                for j, x in enumerate(dst):
                    img[j] = (img[j] + int(c) * int(x)) % p
            listed_images.append(tuple(img))
        images = []
        for v in ideals[src].basis:
            combo = express([tuple(int(x) % p for x in r) for r in src_rows], v, p)
            if combo is None:
                raise WorkspaceError(f"{where}: listed ideal rows at {names[src]!r} do not span")
            img = [0] * carrier.dim
            for c, w in zip(combo, listed_images):
                for j, x in enumerate(w):
                    img[j] = (img[j] + c * x) % p
            images.append(tuple(img))
        try:
            maps.append(LinMap.from_images(ideals[src], ideals[i], images))
        except ValueError:
            raise WorkspaceError(f"{where}: map at {n!r} does not land in its ideal")
    return tuple(ideals), tuple(maps)


def action_from_json(doc: dict, ws: Workspace, name: str) -> POAction:
    try:
        g = ws.groupoids[doc["groupoid"]]
        alg = ws.algebras[doc["algebra"]]
    except KeyError as exc:
        raise WorkspaceError(f"action {name!r}: dangling reference {exc}")
    ideals, maps = _parse_family(
        doc, g.names, lambda i: g.inv[i], alg, f"action {name!r}"
    )
    return POAction(g, alg, ideals, maps, name=name)


def inv_action_from_json(doc: dict, ws: Workspace, name: str) -> InvSgpAction:
    try:
        s = ws.semigroups[doc["semigroup"]]
        alg = ws.algebras[doc["algebra"]]
    except KeyError as exc:
        raise WorkspaceError(f"inverse action {name!r}: dangling reference {exc}")
    s.require_valid()
    ideals, maps = _parse_family(
        doc, s.names, s.inverse, alg, f"inverse action {name!r}"
    )
    return InvSgpAction(s, alg, ideals, maps, name=name)


def load_workspace(path: str | Path) -> Workspace:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise WorkspaceError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}")
    if not isinstance(doc, dict):
        raise WorkspaceError(f"{path}: top level must be an object")
    ws = Workspace()
    for name, sub in sorted(doc.get("algebras", {}).items()):
        ws.algebras[name] = algebra_from_json(sub, name)
    for name, sub in sorted(doc.get("groupoids", {}).items()):
        ws.groupoids[name] = groupoid_from_json(sub, name)
    for name, sub in sorted(doc.get("semigroups", {}).items()):
        ws.semigroups[name] = semigroup_from_json(sub, name)
    for name, sub in sorted(doc.get("actions", {}).items()):
        ws.actions[name] = action_from_json(sub, ws, name)
    for name, sub in sorted(doc.get("inv_actions", {}).items()):
        ws.inv_actions[name] = inv_action_from_json(sub, ws, name)
    tasks = doc.get("tasks", [])
    if not isinstance(tasks, list):
        raise WorkspaceError(f"{path}: tasks must be a list")
    seen = set()
    for t in tasks:
        if "task" not in t:
            raise WorkspaceError(f"{path}: task entry without a 'task' kind")
        tid = t.get("id", t["task"])
        if tid in seen:
            raise WorkspaceError(f"{path}: duplicate task id {tid!r}")
        seen.add(tid)
    ws.tasks = tasks
    return ws


def dump_workspace_doc(doc: dict, path: str | Path) -> None:
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
