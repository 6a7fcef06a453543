"""Scenario files: TOML descriptions of constructions plus check directives.

A scenario names a field backend, builds objects (spaces, maps, groups,
bialgebras, extensions, graded spaces, chains), and lists checks to run
against them.  Identifiers must be defined before use; the check registry
itself lives in checks.py.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Any

import tomli

from .errors import ParseError
from .groups import (
    FiniteGroup,
    cyclic,
    dihedral,
    direct_product,
    quaternion,
    symmetric3,
    trivial_group,
)
from .hopf import (
    BialgebraData,
    dagger_chain,
    function_bialgebra,
    grading_bialgebra,
    group_bialgebra,
    mutate_bialgebra,
    tate_coalgebra,
    window_coalgebra,
)
from .nspace import SUM, BoundedMap, DiagSpace, standard_space
from .scalar import ValuedField, build_extension, parse_norm_value
from .comod import GradedSpace


def _fractions(values) -> list[Fraction]:
    return [Fraction(str(v)) for v in values]


@dataclass
class Scenario:
    name: str
    field: ValuedField
    seed: int
    precision: int | None
    spaces: dict[str, DiagSpace] = dc_field(default_factory=dict)
    maps: dict[str, BoundedMap] = dc_field(default_factory=dict)
    groups: dict[str, FiniteGroup] = dc_field(default_factory=dict)
    bialgebras: dict[str, Any] = dc_field(default_factory=dict)
    extensions: dict[str, Any] = dc_field(default_factory=dict)
    graded: dict[str, GradedSpace] = dc_field(default_factory=dict)
    chains: dict[str, Any] = dc_field(default_factory=dict)
    modules: dict[str, Any] = dc_field(default_factory=dict)
    comodules: dict[str, Any] = dc_field(default_factory=dict)
    tate_reports: dict[str, Any] = dc_field(default_factory=dict)
    checks: list[dict] = dc_field(default_factory=list)

    def resolve(self, table: str, ident: str):
        store = getattr(self, table)
        if ident not in store:
            raise ParseError(f"unknown {table[:-1]} id {ident!r}")
        return store[ident]


def _build_group(scn: Scenario, block: dict) -> FiniteGroup:
    kind = block.get("kind", "table")
    if kind == "cyclic":
        return cyclic(int(block["n"]))
    if kind == "dihedral":
        return dihedral(int(block["n"]))
    if kind == "symmetric3":
        return symmetric3()
    if kind == "quaternion":
        return quaternion()
    if kind == "klein":
        return direct_product(cyclic(2), cyclic(2))
    if kind == "trivial":
        return trivial_group()
    if kind == "product":
        f1, f2 = block["factors"]
        return direct_product(scn.resolve("groups", f1), scn.resolve("groups", f2))
    if kind == "table":
        return FiniteGroup.from_table(block["table"], block.get("elements"), name=block.get("id", "G"))
    raise ParseError(f"unknown group kind {kind!r}")


def _build_bialgebra(scn: Scenario, block: dict):
    kind = block["kind"]
    fld = scn.field
    if kind == "group":
        out = group_bialgebra(scn.resolve("groups", block["group"]), fld)
    elif kind == "functions":
        out = function_bialgebra(scn.resolve("groups", block["group"]), fld)
    elif kind == "grading":
        if "group" in block:
            out = grading_bialgebra(scn.resolve("groups", block["group"]), fld)
        else:
            lo, hi = block["window"]
            out = window_coalgebra(range(int(lo), int(hi) + 1), fld)
    elif kind == "tate":
        report = tate_coalgebra(
            int(block.get("n_vars", 1)),
            int(block["degree_cap"]),
            Fraction(str(block["radius"])),
            fld,
        )
        scn.tate_reports[block["id"]] = report
        out = report.coalgebra
    elif kind == "dagger":
        out = dagger_chain(
            int(block.get("n_vars", 1)),
            int(block["degree_cap"]),
            _fractions(block["schedule"]),
            fld,
        )
    else:
        raise ParseError(f"unknown bialgebra kind {kind!r}")
    fault = block.get("fault")
    if fault:
        if not isinstance(out, BialgebraData):
            raise ParseError("fault injection needs a full bialgebra")
        out = mutate_bialgebra(out, fault)
    return out


def _build_space(scn: Scenario, block: dict) -> DiagSpace:
    fld = scn.field
    flavor = block.get("flavor", "sum")
    if flavor not in (SUM, "max"):
        raise ParseError(f"space flavor must be sum or max, got {flavor!r}")
    weights = [parse_norm_value(fld, w) for w in block["weights"]]
    labels = block.get("labels")
    if labels is None:
        labels = [f"e{i}" for i in range(len(weights))]
    try:
        return DiagSpace(fld, tuple(str(l) for l in labels), tuple(weights), flavor)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _build_graded(scn: Scenario, block: dict) -> GradedSpace:
    degrees = [int(d) for d in block["degrees"]]
    dims = [int(d) for d in block["dims"]]
    summands = tuple(
        standard_space(scn.field, d, SUM, label=f"d{deg}.") for deg, d in zip(degrees, dims)
    )
    return GradedSpace(tuple(degrees), summands)


def load_scenario(path_or_text, name_hint: str = "") -> Scenario:
    if hasattr(path_or_text, "read"):
        text = path_or_text.read()
    elif isinstance(path_or_text, bytes):
        text = path_or_text.decode()
    elif "\n" in str(path_or_text) or "=" in str(path_or_text):
        text = str(path_or_text)
    else:
        with open(path_or_text, "rb") as fh:
            text = fh.read().decode()
    try:
        data = tomli.loads(text)
    except tomli.TOMLDecodeError as exc:
        line, col = getattr(exc, "lineno", None), getattr(exc, "colno", None)
        raise ParseError(f"scenario does not parse: {exc}", line=line, column=col) from exc
    return build_scenario(data, name_hint)


def build_scenario(data: dict, name_hint: str = "") -> Scenario:
    fblock = data.get("field", {})
    backend = fblock.get("backend", "arch")
    if backend not in ("arch", "padic"):
        raise ParseError(f"unknown backend {backend!r}")
    prime = fblock.get("prime")
    try:
        fld = ValuedField(backend, int(prime) if prime is not None else None)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    scn = Scenario(
        name=data.get("name", name_hint or "scenario"),
        field=fld,
        seed=int(data.get("seed", 0)),
        precision=int(data["precision"]) if "precision" in data else None,
    )
    builders = [
        ("group", scn.groups, _build_group),
        ("space", scn.spaces, _build_space),
        ("bialgebra", scn.bialgebras, _build_bialgebra),
        ("graded", scn.graded, _build_graded),
    ]
    for key, store, builder in builders:
        for block in data.get(key, []):
            ident = block.get("id")
            if not ident:
                raise ParseError(f"every [[{key}]] block needs an id")
            if ident in store:
                raise ParseError(f"duplicate {key} id {ident!r}")
            store[ident] = builder(scn, block)
    for block in data.get("extension", []):
        ident = block.get("id")
        if not ident:
            raise ParseError("every [[extension]] block needs an id")
        gens = [_fractions(g) for g in block.get("galois_generators", [])]
        eblock_backend = block.get("backend")
        efld = fld
        if eblock_backend is not None:
            efld = ValuedField(eblock_backend, block.get("prime"))
        scn.extensions[ident] = build_extension(
            efld, [int(c) for c in block["minpoly"]], gens, name=ident
        )
    for block in data.get("map", []):
        ident = block.get("id")
        if not ident:
            raise ParseError("every [[map]] block needs an id")
        dom = scn.resolve("spaces", block["domain"])
        cod = scn.resolve("spaces", block["codomain"])
        rows = [[Fraction(str(x)) for x in row] for row in block["rows"]]
        scn.maps[ident] = BoundedMap.create(dom, cod, rows)
    for block in data.get("chain", []):
        ident = block.get("id")
        if not ident:
            raise ParseError("every [[chain]] block needs an id")
        spaces = [scn.resolve("spaces", sid) for sid in block["spaces"]]
        mats = [
            [[Fraction(str(x)) for x in row] for row in m] for m in block.get("maps", [])
        ]
        if len(mats) != len(spaces) - 1:
            raise ParseError("a chain of n spaces needs n-1 transition matrices")
        from .ind import chain as ind_chain

        maps = [
            BoundedMap.create(spaces[k], spaces[k + 1], mats[k]) for k in range(len(mats))
        ]
        scn.chains[ident] = ind_chain(spaces, maps)
    for block in data.get("module", []):
        ident = block.get("id")
        if not ident:
            raise ParseError("every [[module]] block needs an id")
        bi = scn.resolve("bialgebras", block["algebra"])
        carrier = scn.resolve("spaces", block["carrier"])
        rows = [[Fraction(str(x)) for x in row] for row in block["action"]]
        from .comod import ModuleData
        from .tensor import tensor as _tensor

        action = BoundedMap.create(_tensor(bi.carrier, carrier), carrier, rows)
        scn.modules[ident] = ModuleData(bi.algebra, carrier, action)
    for block in data.get("comodule", []):
        ident = block.get("id")
        if not ident:
            raise ParseError("every [[comodule]] block needs an id")
        obj = scn.resolve("bialgebras", block["coalgebra"])
        co = obj.coalgebra if isinstance(obj, BialgebraData) else obj
        carrier = scn.resolve("spaces", block["carrier"])
        rows = [[Fraction(str(x)) for x in row] for row in block["coaction"]]
        from .comod import ComoduleData
        from .tensor import tensor as _tensor

        coaction = BoundedMap.create(carrier, _tensor(co.carrier, carrier), rows)
        scn.comodules[ident] = ComoduleData(co, carrier, coaction)
    checks = data.get("check", [])
    if not isinstance(checks, list):
        raise ParseError("check blocks must be an array of tables")
    scn.checks = checks
    return scn
