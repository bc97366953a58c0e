"""Command-line front end.

Commands read algebra documents (JSON) and print either human-readable
text or, with --json, the same facts as structured JSON.  Module errors
exit nonzero after emitting a machine-readable category on stderr.
"""

from __future__ import annotations

import functools
import json
import os
import sys

import click

from .automorphisms import DEFAULT_MAX_VERTICES, automorphism_group, is_isomorphic_regular
from .documents import parse_algebra, parse_ideal, serialize_algebra
from .errors import EvolineError
from .report import analyze, format_monomial_map, monomial_map_to_dict, render_text
from .structure import decompose, nilpotency_report

MAX_N_ENV = "EVOLINE_MAX_N"


def resolve_max_vertices(flag_value=None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(MAX_N_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise EvolineError(f"{MAX_N_ENV} must be an integer, got {env!r}")
    return DEFAULT_MAX_VERTICES


def emit_error(exc: EvolineError):
    payload = {"error": {"category": exc.category, "message": str(exc)}}
    click.echo(json.dumps(payload), err=True)


def module_errors(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except EvolineError as exc:
            emit_error(exc)
            sys.exit(1)

    return wrapper


def load_algebra(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise EvolineError(f"cannot read {path}: {exc}")
    return parse_algebra(text)


def print_json(payload):
    click.echo(json.dumps(payload, indent=2))


@click.group()
def main():
    """Analyze evolution algebras through their attached weighted digraphs."""


@main.command("analyze")
@click.argument("file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="Emit the report as JSON.")
@module_errors
def analyze_command(file, as_json):
    """Full report: regularity, annihilator, graph, nilpotency, automorphisms."""
    alg = load_algebra(file)
    report = analyze(alg, max_vertices=resolve_max_vertices())
    if as_json:
        print_json(report)
    else:
        click.echo(render_text(report), nl=False)


@main.command("graph")
@click.argument("file", type=click.Path())
@click.option("--dot", "dot_path", type=click.Path(), default=None, help="Write DOT text to this path.")
@module_errors
def graph_command(file, dot_path):
    """Export the attached weighted digraph as DOT."""
    alg = load_algebra(file)
    dot = alg.attached_graph().to_dot()
    if dot_path is None:
        click.echo(dot, nl=False)
    else:
        with open(dot_path, "w", encoding="utf-8") as handle:
            handle.write(dot)


@main.command("nilpotency")
@click.argument("file", type=click.Path())
@click.option("--json", "as_json", is_flag=True)
@module_errors
def nilpotency_command(file, as_json):
    """Nilpotency decided four independent ways, with indices and witness."""
    from .report import nilpotency_section

    alg = load_algebra(file)
    report = nilpotency_report(alg)
    section = nilpotency_section(report, alg.field)
    if as_json:
        print_json(section)
        return
    click.echo(f"nilpotent: {'yes' if section['nilpotent'] else 'no'}")
    if section["nilpotent"]:
        click.echo(f"right index: {section['right_index']}")
        click.echo(f"full index: {section['full_index']}")
        click.echo(
            "triangular order: (" + ", ".join(str(v) for v in section["triangular_order"]) + ")"
        )
    else:
        witness = section["witness"]
        click.echo("shortest cycle: " + " -> ".join(str(v) for v in witness["cycle"] + witness["cycle"][:1]))
        click.echo(f"witness scaling: {witness['scaling']}")
    click.echo(f"right chain dims: {tuple(section['right_chain_dims'])}")
    click.echo(f"full chain dims: {tuple(section['full_chain_dims'])}")


@main.command("decompose")
@click.argument("file", type=click.Path())
@click.option("--json", "as_json", is_flag=True)
@module_errors
def decompose_command(file, as_json):
    """Ideal direct summands from the weak components of the graph."""
    alg = load_algebra(file)
    decomposition = decompose(alg)
    if as_json:
        print_json(
            {
                "parts": [list(indices) for indices, _ in decomposition.parts],
                "basis_dependent": decomposition.basis_dependent,
            }
        )
        return
    click.echo(f"parts: {len(decomposition.parts)}")
    for indices, _ in decomposition.parts:
        click.echo("  {" + ", ".join(str(v) for v in indices) + "}")
    if decomposition.basis_dependent:
        click.echo("caveat: annihilator is nonzero, the decomposition depends on the basis")


@main.command("aut")
@click.argument("file", type=click.Path())
@click.option("--json", "as_json", is_flag=True)
@click.option("--max-n", type=int, default=None, help="Permutation search bound (default 12).")
@module_errors
def aut_command(file, as_json, max_n):
    """Enumerate the automorphism group (regular algebras only)."""
    alg = load_algebra(file)
    group = automorphism_group(alg, max_vertices=resolve_max_vertices(max_n))
    field = alg.field
    if as_json:
        print_json(
            {
                "computed": True,
                "order": group.order,
                "elements": [monomial_map_to_dict(field, phi) for phi in group.elements],
            }
        )
        return
    click.echo(f"order {group.order}")
    for phi in group.elements:
        click.echo("  " + format_monomial_map(field, phi))


@main.command("iso")
@click.argument("file_a", type=click.Path())
@click.argument("file_b", type=click.Path())
@click.option("--json", "as_json", is_flag=True)
@module_errors
def iso_command(file_a, file_b, as_json):
    """Search for a monomial isomorphism between two regular algebras."""
    a = load_algebra(file_a)
    b = load_algebra(file_b)
    phi = is_isomorphic_regular(a, b, max_vertices=resolve_max_vertices())
    if as_json:
        if phi is None:
            print_json({"isomorphic": False})
        else:
            print_json({"isomorphic": True, "map": monomial_map_to_dict(a.field, phi)})
        return
    if phi is None:
        click.echo("not isomorphic")
    else:
        click.echo(format_monomial_map(a.field, phi))


@main.command("quotient")
@click.argument("file", type=click.Path())
@click.option("--ideal", "ideal_path", type=click.Path(), required=True,
              help="JSON array of coordinate rows spanning the ideal.")
@click.option("--json", "as_json", is_flag=True)
@module_errors
def quotient_command(file, ideal_path, as_json):
    """Quotient by an ideal; prints the quotient algebra document."""
    alg = load_algebra(file)
    try:
        with open(ideal_path, encoding="utf-8") as handle:
            ideal_text = handle.read()
    except OSError as exc:
        raise EvolineError(f"cannot read {ideal_path}: {exc}")
    ideal = parse_ideal(ideal_text, alg)
    quotient = alg.quotient(ideal)
    if as_json:
        from .documents import algebra_to_document

        print_json(
            {
                "kept_basis_indices": list(quotient.kept),
                "algebra": algebra_to_document(quotient.algebra),
            }
        )
        return
    click.echo("kept basis indices: " + ", ".join(str(i) for i in quotient.kept))
    click.echo(serialize_algebra(quotient.algebra), nl=False)


if __name__ == "__main__":
    main()
