"""Command line: build heaps, run rho and its inverse, toggle, and verify.

JSON goes to stdout, diagnostics to stderr.  Exit status is 0 on success,
1 when a verification fails and 2 on a usage error.
"""

from __future__ import annotations

import json
import os
import sys

import click

from . import verify as checks
from .arquiver import root_str
from .bijection import SplitObject, rho, rho_inverse, rho_xi, split_for_rpp
from .dynkin import DynkinDiagram, DynkinQuiver, positive_roots
from .heap import MinusculeHeap, iso_type
from .rpp import Rpp, promotion, toggle_fibre, value_to_json


def emit(data) -> None:
    click.echo(json.dumps(data, sort_keys=True, separators=(",", ":")))


def _load_json(text: str):
    """Accept inline JSON, a path to a JSON file, or '-' for stdin."""
    if text == "-":
        return json.load(sys.stdin)
    if os.path.exists(text):
        with open(text) as fh:
            return json.load(fh)
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise click.UsageError(f"not JSON and not a file: {text!r} ({err})") from None


def _quiver(type_, orient, quiver_file) -> DynkinQuiver:
    if quiver_file:
        return DynkinQuiver.from_json(_load_json(quiver_file))
    if not type_:
        raise click.UsageError("give --type (with optional --orient) or --quiver")
    return DynkinQuiver.from_orient(DynkinDiagram.parse(type_), orient)


def _heap(type_, orient, quiver_file, m) -> MinusculeHeap:
    if m is None:
        raise click.UsageError("--m is required")
    return MinusculeHeap(_quiver(type_, orient, quiver_file), m)


def _heap_from_rpp(data, type_, orient, quiver_file, m) -> MinusculeHeap:
    if "quiver" in data and "m" in data and not (type_ or quiver_file):
        return MinusculeHeap(DynkinQuiver.from_json(data["quiver"]), int(data["m"]))
    return _heap(type_, orient, quiver_file, m)


def _rpp_json(heap: MinusculeHeap, rpp: Rpp) -> dict:
    out = rpp.to_json()
    out["quiver"] = heap.quiver.to_json()
    out["m"] = heap.m
    if all(isinstance(v, int) for v in rpp.values):
        out["partitions"] = [list(p) for p in rpp.partitions()]
    return out


def _parse_mults(heap, text) -> dict:
    data = _load_json(text) if text else {}
    if not isinstance(data, dict):
        raise click.UsageError("--mults must be a JSON object {dimension vector: multiplicity}")
    return {str(k): int(v) for k, v in data.items()}


def quiver_options(f):
    f = click.option("--quiver", "quiver_file", help="Quiver JSON (inline or file).")(f)
    f = click.option("--orient", help='Orientation such as "1<2>3".')(f)
    f = click.option("--type", "type_", help="Dynkin type such as A5, D4, E6.")(f)
    return f


@click.group()
def main():
    """Minuscule heaps, Jordan-form fillings and their toggles."""


@main.command()
@quiver_options
@click.option("--m", type=int, required=True)
@click.option("--dot", is_flag=True, help="Emit Graphviz DOT instead of JSON.")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON (the default).")
def heap(type_, orient, quiver_file, m, dot, as_json):
    h = _heap(type_, orient, quiver_file, m)
    if dot:
        click.echo(h.dot())
    else:
        data = h.to_json()
        data["quiver"] = h.quiver.to_json()
        data["m"] = m
        emit(data)


@main.command("rho")
@quiver_options
@click.option("--m", type=int, required=True)
@click.option("--mults", required=True, help='JSON object such as {"010":1}.')
def rho_cmd(type_, orient, quiver_file, m, mults):
    h = _heap(type_, orient, quiver_file, m)
    emit(_rpp_json(h, rho(h, None, _parse_mults(h, mults))))


@main.command()
@quiver_options
@click.option("--m", type=int)
@click.option("--rpp", "rpp_text", required=True, help="Filling JSON as printed by rho.")
def inv(type_, orient, quiver_file, m, rpp_text):
    data = _load_json(rpp_text)
    h = _heap_from_rpp(data, type_, orient, quiver_file, m)
    r = Rpp.from_json(h, data)
    mults = rho_inverse(h, None, r)
    emit({"quiver": h.quiver.to_json(), "m": h.m,
          "mults": {h.ids[x]: c for x, c in enumerate(mults) if c}})


@main.command()
@quiver_options
@click.option("--m", type=int)
@click.option("--rpp", "rpp_text", required=True)
@click.option("--times", type=int, default=1, show_default=True)
def promote(type_, orient, quiver_file, m, rpp_text, times):
    data = _load_json(rpp_text)
    h = _heap_from_rpp(data, type_, orient, quiver_file, m)
    r = Rpp.from_json(h, data)
    for _ in range(times):
        r = promotion(r)
    emit(_rpp_json(h, r))


@main.command()
@quiver_options
@click.option("--m", type=int)
@click.option("--rpp", "rpp_text", required=True)
@click.option("--vertex", type=int, required=True, help="Toggle every element of this fibre.")
def toggle(type_, orient, quiver_file, m, rpp_text, vertex):
    data = _load_json(rpp_text)
    h = _heap_from_rpp(data, type_, orient, quiver_file, m)
    if vertex not in h.adjacency:
        raise click.UsageError(f"vertex {vertex} is not in {h.quiver.diagram.name}")
    emit(_rpp_json(h, toggle_fibre(Rpp.from_json(h, data), vertex)))


@main.command()
@quiver_options
@click.option("--m", type=int)
@click.option("--filter", "filt", help="JSON list of heap ids forming an order filter.")
@click.option("--even", help="Multiplicities inside the filter.")
@click.option("--odd", help="Multiplicities outside the filter.")
@click.option("--rpp", "rpp_text", help="Extended filling to split instead.")
def split(type_, orient, quiver_file, m, filt, even, odd, rpp_text):
    """Fill a split object, or recover the split object of an extended filling."""
    if rpp_text:
        data = _load_json(rpp_text)
        h = _heap_from_rpp(data, type_, orient, quiver_file, m)
        s = split_for_rpp(h, Rpp.from_json(h, data))
        emit({"filter": [h.ids[x] for x in h.elements(s.filter)], "even": s.even, "odd": s.odd,
              "window": s.window.s})
        return
    h = _heap(type_, orient, quiver_file, m)
    ids = _load_json(filt) if filt else h.ids
    unknown = set(ids) - set(h.ids)
    if unknown:
        raise click.UsageError(f"unknown heap ids {sorted(unknown)}")
    mask = sum(1 << h.index[x] for x in ids)
    s = SplitObject.from_parts(h, mask, _parse_mults(h, even), _parse_mults(h, odd))
    r = rho_xi(s)
    out = _rpp_json(h, r)
    out["values"] = {h.ids[x]: value_to_json(v) for x, v in enumerate(r.values)}
    emit(out)


@main.command()
@click.option("--type", "type_", required=True)
def roots(type_):
    d = DynkinDiagram.parse(type_)
    emit({"type": d.name, "positive_roots": [root_str(r) for r in positive_roots(d)]})


@main.command("iso-type")
@quiver_options
@click.option("--m", type=int, required=True)
def iso_type_cmd(type_, orient, quiver_file, m):
    h = _heap(type_, orient, quiver_file, m)
    emit({"type": h.quiver.diagram.name, "m": m, "size": h.size, "iso_type": iso_type(h)})


@main.command("verify")
@click.argument("what", type=click.Choice(
    ["axioms", "periodicity", "oracle", "hg", "rsk", "gk", "genfun", "togref"]))
@quiver_options
@click.option("--m", type=int)
@click.option("--N", "N", type=int, help="Bound for [0,N] fillings; omit for extended entries.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--samples", type=int, help="Oracle samples (default ORACLE_SAMPLES or 8).")
@click.option("--prime", type=int, help="Oracle prime (default ORACLE_PRIME or 32003).")
@click.option("--degree", type=int, default=8, show_default=True)
@click.option("--filter", "filt", help="JSON list of heap ids for genfun.")
@click.option("--count", type=int, default=50, show_default=True, help="Sampled cases.")
@click.option("--rows", type=int, default=3, show_default=True)
@click.option("--cols", type=int, default=3, show_default=True)
def verify_cmd(what, type_, orient, quiver_file, m, N, seed, samples, prime, degree, filt, count, rows, cols):
    if what in ("hg", "rsk"):
        report = checks.rectangle_equality(what, rows, cols)
    else:
        h = _heap(type_, orient, quiver_file, m)
        if what == "axioms":
            report = checks.axioms(h)
        elif what == "periodicity":
            mode = "exhaustive" if N is not None else "sampled"
            report = checks.periodicity(h, N, mode, count, seed)
            if N is None:
                report.update({"extended": checks.extended_order(h, count, seed)})
                report["ok"] = report["ok"] and report["extended"]["ok"]
        elif what == "oracle":
            report = checks.oracle(h, count, seed, samples, prime)
        elif what == "gk":
            report = checks.greene_kleitman(h)
        elif what == "genfun":
            mask = None
            if filt:
                ids = _load_json(filt)
                mask = sum(1 << h.index[x] for x in ids)
                if not h.is_filter(mask):
                    raise click.UsageError(f"{ids} is not an order filter")
            report = checks.genfun(h, degree, mask)
        else:
            report = checks.togref(h)
    emit(report)
    if not report["ok"]:
        click.echo(f"verification {what} failed", err=True)
        sys.exit(1)


def run(argv=None) -> int:
    """Entry point that turns errors into exit codes instead of raising."""
    try:
        main.main(args=argv, standalone_mode=False)
    except click.ClickException as err:
        err.show()
        return 2
    except click.exceptions.Abort:
        return 2
    except ValueError as err:
        click.echo(f"error: {err}", err=True)
        return 2
    except SystemExit as err:
        return int(err.code or 0)
    return 0


def entry() -> None:
    sys.exit(run())
