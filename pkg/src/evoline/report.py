"""Analysis reports: one dict with every computed fact, plus a text view.

The JSON and text renderings are produced from the same dict, so the two
output modes can never disagree on the analysis itself.
"""

from __future__ import annotations

from .algebra import EvolutionAlgebra
from .automorphisms import DEFAULT_MAX_VERTICES, MonomialMap, automorphism_group
from .errors import NotRegular, SizeLimit
from .structure import NilpotencyReport, decompose, nilpotency_report


def monomial_map_to_dict(field, phi: MonomialMap) -> dict:
    return {
        "permutation": list(phi.sigma),
        "scales": [field.format(s) for s in phi.scales],
    }


def format_monomial_map(field, phi: MonomialMap) -> str:
    parts = []
    for i in range(1, phi.dim + 1):
        scale = phi.scales[i - 1]
        target = f"e{phi.sigma[i - 1]}"
        if scale == field.one:
            parts.append(f"e{i} -> {target}")
        else:
            parts.append(f"e{i} -> {field.format(scale)}*{target}")
    return ", ".join(parts)


def automorphism_section(alg: EvolutionAlgebra, max_vertices: int = DEFAULT_MAX_VERTICES) -> dict:
    """Group listing, or an explicit refusal that names its reason."""
    field = alg.field
    try:
        group = automorphism_group(alg, max_vertices=max_vertices)
    except NotRegular as exc:
        return {"computed": False, "category": NotRegular.category, "reason": str(exc)}
    except SizeLimit as exc:
        return {"computed": False, "category": SizeLimit.category, "reason": str(exc)}
    return {
        "computed": True,
        "order": group.order,
        "elements": [monomial_map_to_dict(field, phi) for phi in group.elements],
    }


def nilpotency_section(report: NilpotencyReport, field) -> dict:
    section = {
        "nilpotent": report.acyclic,
        "acyclic": report.acyclic,
        "triangular_order": list(report.triangular_order) if report.triangular_order else None,
        "right_index": report.right_index,
        "full_index": report.full_index,
        "right_chain_dims": list(report.right_chain.dims),
        "full_chain_dims": list(report.full_chain.dims),
    }
    if report.witness is None:
        section["witness"] = None
    else:
        section["witness"] = {
            "cycle": list(report.witness.cycle),
            "element": [field.format(x) for x in report.witness.element.coords],
            "scaling": field.format(report.witness.scaling),
        }
    return section


def analyze(alg: EvolutionAlgebra, max_vertices: int = DEFAULT_MAX_VERTICES) -> dict:
    """Full analysis of an algebra as a JSON-ready dict."""
    field = alg.field
    graph = alg.attached_graph()
    components = graph.unweighted.weak_components()
    nil_report = nilpotency_report(alg)
    decomposition = decompose(alg)
    annihilator = alg.annihilator()
    return {
        "field": field.tag,
        "dim": alg.dim,
        "matrix": [[field.format(x) for x in row] for row in alg.structural_matrix.rows],
        "determinant": field.format(alg.determinant()),
        "regular": alg.is_regular(),
        "annihilator": {
            "dim": annihilator.dim,
            "basis": [[field.format(x) for x in row] for row in annihilator.basis],
        },
        "graph": {
            "vertices": alg.dim,
            "edges": [
                {"source": i, "target": j, "weight": field.format(w)}
                for (i, j), w in graph.weights.items()
            ],
        },
        "components": [list(c) for c in components],
        "decomposition": {
            "parts": [list(indices) for indices, _ in decomposition.parts],
            "basis_dependent": decomposition.basis_dependent,
        },
        "nilpotency": nilpotency_section(nil_report, field),
        "automorphisms": automorphism_section(alg, max_vertices=max_vertices),
    }


def render_text(report: dict) -> str:
    lines = []
    lines.append(f"field: {report['field']}")
    lines.append(f"dimension: {report['dim']}")
    lines.append("structural matrix:")
    for row in report["matrix"]:
        lines.append("  [" + ", ".join(row) + "]")
    lines.append(f"determinant: {report['determinant']}")
    lines.append(f"regular (E = E^2): {'yes' if report['regular'] else 'no'}")
    ann = report["annihilator"]
    if ann["dim"] == 0:
        lines.append("annihilator: zero")
    else:
        lines.append(f"annihilator: dimension {ann['dim']}")
        for row in ann["basis"]:
            lines.append("  [" + ", ".join(row) + "]")
    edges = report["graph"]["edges"]
    lines.append(f"attached graph: {report['graph']['vertices']} vertices, {len(edges)} edges")
    for edge in edges:
        lines.append(f"  {edge['source']} -> {edge['target']} (weight {edge['weight']})")
    components = report["components"]
    lines.append(
        "weak components: "
        + "; ".join("{" + ", ".join(str(v) for v in comp) + "}" for comp in components)
    )
    dec = report["decomposition"]
    caveat = " (basis-dependent: annihilator is nonzero)" if dec["basis_dependent"] else ""
    lines.append(f"ideal decomposition: {len(dec['parts'])} part(s){caveat}")
    nil = report["nilpotency"]
    lines.append(f"nilpotent: {'yes' if nil['nilpotent'] else 'no'}")
    if nil["nilpotent"]:
        lines.append(f"  right index: {nil['right_index']}")
        lines.append(f"  full index: {nil['full_index']}")
        lines.append("  triangular order: (" + ", ".join(str(v) for v in nil["triangular_order"]) + ")")
    else:
        witness = nil["witness"]
        cycle = " -> ".join(str(v) for v in witness["cycle"] + witness["cycle"][:1])
        lines.append(f"  shortest cycle: {cycle}")
        lines.append(f"  witness scaling: {witness['scaling']}")
    lines.append(f"  right chain dims: {tuple(nil['right_chain_dims'])}")
    lines.append(f"  full chain dims: {tuple(nil['full_chain_dims'])}")
    aut = report["automorphisms"]
    if aut["computed"]:
        lines.append(f"automorphism group: order {aut['order']}")
        for element in aut["elements"]:
            scales = element["scales"]
            perm = element["permutation"]
            rendered = ", ".join(
                f"e{i + 1} -> {scale + '*' if scale != '1' else ''}e{perm[i]}"
                for i, scale in enumerate(scales)
            )
            lines.append(f"  {rendered}")
    else:
        lines.append(f"automorphism group: refused ({aut['category']}): {aut['reason']}")
    return "\n".join(lines) + "\n"
