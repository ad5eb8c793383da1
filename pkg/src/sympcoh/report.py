"""Full report generation for one model: text and schema-stable JSON.

`run_compute` drives the whole pipeline: parse, validate, compute every
cohomology table, run the theorem-backed consistency checks, and pack
the results.  Dimensions serialize as integers and every rational as a
"p/q" string, so exactness survives serialization; JSON output is
byte-stable under serialize -> parse -> serialize.

Models whose algebra is neither nilpotent nor asserted completely
solvable get a mandatory caveat: the computed groups then live on the
Lie-algebra side and only bound the manifold-level groups from below.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .cohomology import SymplecticCohomology, de_rham_cohomology
from .errors import InputError
from .exterior import render_form
from .lie import LieAlgebra, build_lie_algebra, check_properties
from .models import FLAG_COMPLETELY_SOLVABLE, FLAG_LATTICE, ModelFile
from .parsing import parse_form, parse_structure_equations, render_structure
from .symplectic import SymplecticStructure, validate_symplectic

__all__ = [
    "Report",
    "run_compute",
    "structure_from_model",
    "CAVEAT_LOWER_BOUND",
    "CAVEAT_LATTICE_UNIMODULAR",
]

SCHEMA = "sympcoh-report/1"

CAVEAT_LOWER_BOUND = "Lie-algebra cohomology; lower bound for manifold groups"
CAVEAT_LATTICE_UNIMODULAR = (
    "lattice asserted but the algebra is not unimodular; no lattice can exist"
)


def _algebra_from_model(model: ModelFile) -> LieAlgebra:
    structure = parse_structure_equations(model.structure, model.dim)
    return build_lie_algebra(structure)


def structure_from_model(model: ModelFile) -> SymplecticStructure:
    """Build the validated symplectic structure a model describes."""
    g = _algebra_from_model(model)
    if model.omega is None:
        raise InputError(f"model {model.name!r} has no omega")
    omega = parse_form(model.omega, g.dim, degree=2)
    return validate_symplectic(g, omega)


@dataclass(frozen=True)
class Report:
    """Computed results for one model, ready to serialize."""

    data: dict[str, Any]

    @property
    def name(self) -> str:
        return self.data["model"]["name"]

    def to_json_dict(self, degree: int | None = None) -> dict[str, Any]:
        if degree is None:
            return self.data
        filtered = dict(self.data)
        for section in ("hrs", "decompositions"):
            if filtered.get(section) is not None:
                filtered[section] = [
                    entry for entry in filtered[section] if entry["degree"] == degree
                ]
        if filtered.get("cohomology") is not None:
            tables = {}
            for key, table in filtered["cohomology"].items():
                tables[key] = (
                    [entry for entry in table if entry["degree"] == degree]
                    if table is not None
                    else None
                )
            filtered["cohomology"] = tables
        return filtered

    def to_json(self, degree: int | None = None) -> str:
        return json.dumps(self.to_json_dict(degree), indent=2) + "\n"

    def to_text(self, degree: int | None = None) -> str:
        d = self.to_json_dict(degree)
        model = d["model"]
        lines = [f"model {model['name']} (dim {model['dim']})"]
        lines.append(f"  structure: {model['structure']}")
        if model["omega"] is not None:
            lines.append(f"  omega:     {model['omega']}")
        if model["flags"]:
            lines.append(f"  flags:     {', '.join(model['flags'])}")
        props = d["properties"]
        lines.append(
            "  properties: "
            + ", ".join(key for key in ("nilpotent", "solvable", "unimodular") if props[key])
        )
        lines.append(f"  betti: {d['betti']}")
        lines.append("  de Rham representatives:")
        for entry in d["cohomology"]["de_rham"]:
            reps = ", ".join(entry["representatives"]) or "-"
            lines.append(f"    H^{entry['degree']} (dim {entry['dim']}): {reps}")
        if d["cohomology"]["d_lambda"] is not None:
            for key, title in (
                ("d_lambda", "H_dLambda dims"),
                ("d_plus_d_lambda", "H_(d+dLambda) dims"),
                ("dd_lambda", "H_(d dLambda) dims"),
                ("primitive_d_plus_d_lambda", "PH_(d+dLambda) dims"),
                ("primitive_d", "PH_d dims"),
            ):
                table = d["cohomology"][key]
                if table:
                    dims = [entry["dim"] for entry in table]
                    lines.append(f"  {title}: {dims}")
        if d.get("hrs") is not None:
            lines.append("  H^(r,s) subgroups (nonzero):")
            for entry in d["hrs"]:
                if entry["dim"]:
                    reps = ", ".join(entry["representatives"]) or "-"
                    lines.append(
                        f"    H^({entry['r']},{entry['s']}) in H^{entry['degree']}"
                        f" (dim {entry['dim']}): {reps}"
                    )
        if d.get("decompositions") is not None:
            lines.append("  decompositions by degree:")
            for entry in d["decompositions"]:
                summands = " + ".join(
                    f"H^({it['r']},{it['s']})[{it['dim']}]" for it in entry["summands"]
                )
                lines.append(
                    f"    degree {entry['degree']}: sum dim {entry['sum_dim']}"
                    f" ({summands}) direct={entry['direct']} full={entry['full']}"
                )
        if d.get("hlc") is not None:
            per = ", ".join(
                f"L^{item['k']}:{'yes' if item['isomorphism'] else 'no'}"
                for item in d["hlc"]["per_degree"]
            )
            lines.append(f"  hard Lefschetz: {d['hlc']['overall']} ({per})")
            lines.append(f"  dd^Lambda-lemma: {d['dd_lambda_lemma']}")
        for entry in d.get("extra_form_checks") or []:
            lines.append(
                f"  form {entry['name']} = {entry['rendered']}: degree {entry['degree']},"
                f" d-closed={entry['d_closed']}, primitive={entry['primitive']},"
                f" class in H^(0,{entry['degree']})={entry['class_in_h0s']}"
            )
        for caveat in d["caveats"]:
            lines.append(f"  caveat: {caveat}")
        return "\n".join(lines) + "\n"


def _cohomology_table(spaces, with_reps: bool = True) -> list[dict[str, Any]]:
    table = []
    for space in spaces:
        entry: dict[str, Any] = {"degree": space.degree, "dim": space.dim}
        if with_reps:
            entry["representatives"] = [render_form(rep) for rep in space.representatives]
        table.append(entry)
    return table


def _dims_table(dims) -> list[dict[str, Any]]:
    return [{"degree": k, "dim": dim} for k, dim in enumerate(dims)]


def run_compute(model: ModelFile) -> Report:
    """Full pipeline: validate the model and compute every table."""
    g = _algebra_from_model(model)
    properties = check_properties(g)
    flags = sorted(model.flags)

    caveats: list[str] = []
    if not properties.nilpotent and FLAG_COMPLETELY_SOLVABLE not in model.flags:
        caveats.append(CAVEAT_LOWER_BOUND)
    if FLAG_LATTICE in model.flags and not properties.unimodular:
        caveats.append(CAVEAT_LATTICE_UNIMODULAR)

    model_echo: dict[str, Any] = {
        "name": model.name,
        "dim": g.dim,
        "structure_input": model.structure,
        "structure": render_structure(g.structure),
        "omega_input": model.omega,
        "omega": None,
        "flags": flags,
        "extra_forms": {
            name: render_form(parse_form(text, g.dim)) for name, text in model.extra_forms
        },
    }
    properties_block = {
        "nilpotent": properties.nilpotent,
        "solvable": properties.solvable,
        "unimodular": properties.unimodular,
        "completely_solvable_asserted": FLAG_COMPLETELY_SOLVABLE in model.flags,
        "lattice_asserted": FLAG_LATTICE in model.flags,
    }

    if model.omega is None:
        de_rham = de_rham_cohomology(g)
        data: dict[str, Any] = {
            "schema": SCHEMA,
            "model": model_echo,
            "properties": properties_block,
            "betti": [space.dim for space in de_rham],
            "cohomology": {
                "de_rham": _cohomology_table(de_rham),
                "d_lambda": None,
                "d_plus_d_lambda": None,
                "dd_lambda": None,
                "primitive_d_plus_d_lambda": None,
                "primitive_d": None,
            },
            "hrs": None,
            "decompositions": None,
            "hlc": None,
            "dd_lambda_lemma": None,
            "extra_form_checks": [],
            "caveats": caveats,
        }
        return Report(data)

    s = structure_from_model(model)
    coh = SymplecticCohomology(s)
    n = s.n

    # Theorem-backed checks: a failure raises InternalInconsistencyError
    # and surfaces as exit code 3 in the CLI.
    coh.h2_decomposition_check()
    coh.intersection_remark_check()
    coh.lr_equals_hr_check()
    coh.hlc_equals_dd_lemma_check()

    model_echo["omega"] = render_form(s.omega)

    hrs_table = []
    for sdeg in range(n + 1):
        for r in range((s.dim - sdeg) // 2 + 1):
            group = coh.hrs_group(r, sdeg)
            hrs_table.append(
                {
                    "r": r,
                    "s": sdeg,
                    "degree": group.degree,
                    "dim": group.dim,
                    "representatives": [render_form(rep) for rep in group.representatives],
                }
            )
    hrs_table.sort(key=lambda entry: (entry["degree"], entry["r"]))

    decomposition_table = []
    for k in range(s.dim + 1):
        verdict = coh.decomposition(k)
        decomposition_table.append(
            {
                "degree": k,
                "summands": [
                    {"r": r, "s": sdeg, "dim": dim}
                    for (r, sdeg), dim in sorted(verdict.summand_dims.items())
                ],
                "sum_dim": verdict.sum_dim,
                "direct": verdict.direct,
                "full": verdict.full,
            }
        )

    hlc = coh.hlc()
    hlc_block = {
        "per_degree": [
            {"k": k, "isomorphism": iso} for k, iso in enumerate(hlc.per_degree)
        ],
        "overall": hlc.overall,
    }

    extra_checks = []
    for name, text in model.extra_forms:
        form = parse_form(text, g.dim)
        d_closed = g.d(form).is_zero()
        primitive = s.lam(form).is_zero()
        in_group = False
        if d_closed and form.degree <= n:
            cls = coh.de_rham[form.degree].class_of(form)
            in_group = coh.hrs_group(0, form.degree).classes.contains(cls)
        extra_checks.append(
            {
                "name": name,
                "rendered": render_form(form),
                "degree": form.degree,
                "d_closed": d_closed,
                "primitive": primitive,
                "class_in_h0s": in_group,
            }
        )

    data = {
        "schema": SCHEMA,
        "model": model_echo,
        "properties": properties_block,
        "betti": list(coh.betti),
        "cohomology": {
            "de_rham": _cohomology_table(coh.de_rham),
            "d_lambda": _dims_table(coh.dlambda_dims),
            "d_plus_d_lambda": _cohomology_table(coh.d_plus_dlambda),
            "dd_lambda": _dims_table(coh.ddlambda_dims),
            "primitive_d_plus_d_lambda": _cohomology_table(
                [coh.primitive_ph_plus(sdeg) for sdeg in range(n + 1)]
            ),
            "primitive_d": [
                {"degree": sdeg, "dim": coh.primitive_ph_d(sdeg)} for sdeg in range(n + 1)
            ],
        },
        "hrs": hrs_table,
        "decompositions": decomposition_table,
        "hlc": hlc_block,
        "dd_lambda_lemma": coh.dd_lemma(),
        "extra_form_checks": extra_checks,
        "caveats": caveats,
    }
    return Report(data)
