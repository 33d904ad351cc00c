"""Command-line interface: ad-hoc queries, verification campaigns, serving.

Machine-readable results go to stdout, diagnostics to stderr.  Usage errors
exit 2 (click's default); verification mismatches and failed validations
exit 1.
"""

from __future__ import annotations

import json
import random
import sys

import click

from . import harness
from .engine import (
    DEFAULT_SOLVER_CAP,
    KERNEL_BACKEND,
    Player,
    game_numbers,
    outcome,
    solve,
)
from .graphs import GraphError, ParseError, parse_graph_expr, parse_plain
from .resolving import find_pairing_resolving, metric_dimension
from .strategies import (
    CATALOG,
    StrategyError,
    catalog_for,
    strategy_by_name,
    validate_strategy,
)


def _parse(expr: str, plain: bool):
    try:
        if plain:
            text = sys.stdin.read() if expr == "-" else open(expr).read()
            return parse_plain(text)
        return parse_graph_expr(expr)
    except (ParseError, GraphError, OSError) as e:
        raise click.UsageError(str(e)) from e


def _fail(message: str) -> None:
    click.echo(message, err=True)
    sys.exit(1)


@click.group()
@click.option("--seed", type=int, default=None,
              help="Seed for any randomized checks (fixed output).")
def main(seed):
    """Maker-Breaker resolving game laboratory."""
    if seed is not None:
        random.seed(seed)


@main.command("graph")
@click.argument("expr")
@click.option("--plain", is_flag=True,
              help="EXPR is a plain edge-list file ('-' for stdin).")
def graph_cmd(expr, plain):
    """Parse a graph and print its description and metrics."""
    g = _parse(expr, plain)
    diam, maxdeg, connected = g.metrics()
    click.echo(json.dumps({
        "expr": g.pretty(),
        "n": g.n,
        "m": g.m,
        "edges": sorted(g.edges),
        "diameter": diam,
        "maxDegree": maxdeg,
        "connected": connected,
        "corona": list(g.corona_shape) if g.corona_shape else None,
    }, indent=2))


@main.command("dim")
@click.argument("expr")
@click.option("--plain", is_flag=True)
def dim_cmd(expr, plain):
    """Metric dimension with a lexicographically-first witness."""
    g = _parse(expr, plain)
    try:
        dim, witness = metric_dimension(g)
    except GraphError as e:
        raise click.UsageError(str(e)) from e
    click.echo(json.dumps({"dim": dim, "witness": sorted(witness)}))


@main.command("outcome")
@click.argument("expr")
@click.option("--cap", type=int, default=DEFAULT_SOLVER_CAP, show_default=True)
@click.option("--plain", is_flag=True)
def outcome_cmd(expr, plain, cap):
    """Game outcome class: R, S, or N."""
    g = _parse(expr, plain)
    try:
        click.echo(outcome(g, cap=cap).value)
    except GraphError as e:
        raise click.UsageError(str(e)) from e


@main.command("solve")
@click.argument("expr")
@click.option("--first", type=click.Choice(["resolver", "spoiler"]),
              required=True, help="Who moves first.")
@click.option("--cap", type=int, default=DEFAULT_SOLVER_CAP, show_default=True)
@click.option("--plain", is_flag=True)
def solve_cmd(expr, plain, first, cap):
    """Winner and the winner's optimal move count for one game."""
    g = _parse(expr, plain)
    try:
        value = solve(g, Player(first), cap=cap)
    except GraphError as e:
        raise click.UsageError(str(e)) from e
    click.echo(json.dumps({
        "first": first,
        "winner": value.winner.value,
        "winnerMoves": value.winner_moves,
    }))


@main.command("numbers")
@click.argument("expr")
@click.option("--cap", type=int, default=DEFAULT_SOLVER_CAP, show_default=True)
@click.option("--plain", is_flag=True)
def numbers_cmd(expr, plain, cap):
    """All four game invariants (absent entries mean that player loses)."""
    g = _parse(expr, plain)
    try:
        nums = game_numbers(g, cap=cap)
    except GraphError as e:
        raise click.UsageError(str(e)) from e
    click.echo(json.dumps({
        "R_MB": nums.r_mb,
        "R_MB_prime": nums.r_mb_prime,
        "S_MB": nums.s_mb,
        "S_MB_prime": nums.s_mb_prime,
    }))


@main.command("pairing")
@click.argument("expr")
@click.option("-k", "--size", type=int, default=None,
              help="Number of pairs (default: try upward from dim).")
@click.option("--bound", type=int, default=14, show_default=True,
              help="Largest order searched exhaustively.")
@click.option("--plain", is_flag=True)
def pairing_cmd(expr, plain, size, bound):
    """Search for a pairing resolving set (exits 1 if none found)."""
    g = _parse(expr, plain)
    try:
        sizes = [size] if size is not None else range(1, g.n // 2 + 1)
        for k in sizes:
            system = find_pairing_resolving(g, k, bound=bound)
            if system is not None:
                click.echo(json.dumps({"pairs": [list(p) for p in system.pairs]}))
                return
    except GraphError as e:
        raise click.UsageError(str(e)) from e
    _fail("no pairing resolving set found")


@main.command("strategy-validate")
@click.argument("expr")
@click.argument("name", required=False)
@click.option("--first", type=click.Choice(["resolver", "spoiler", "both"]),
              default="both", show_default=True)
@click.option("--cap", type=int, default=18, show_default=True)
@click.option("--list", "list_only", is_flag=True,
              help="List applicable strategies and exit.")
@click.option("--plain", is_flag=True)
def strategy_validate_cmd(expr, plain, name, first, cap, list_only):
    """Exhaustively validate a named strategy (exit 1 unless it wins all)."""
    g = _parse(expr, plain)
    if list_only or name is None:
        click.echo(json.dumps([e.name for e in catalog_for(g)]))
        if name is None and not list_only:
            raise click.UsageError("strategy name required (or use --list)")
        return
    try:
        strategy = strategy_by_name(g, name)
    except StrategyError as e:
        raise click.UsageError(str(e)) from e
    firsts = [Player.RESOLVER, Player.SPOILER] if first == "both" else [Player(first)]
    results = {}
    failed = False
    for f in firsts:
        try:
            res = validate_strategy(g, strategy, f, cap=cap)
        except (GraphError, StrategyError) as e:
            raise click.UsageError(str(e)) from e
        entry = {"winsAll": res.wins_all}
        if res.counterexample is not None:
            entry["counterexample"] = [
                [p.value, v] for p, v in res.counterexample.moves
            ]
            failed = True
        results[f.value] = entry
    click.echo(json.dumps({"strategy": name, "role": strategy.role.value,
                           "games": results}, indent=2))
    if failed:
        sys.exit(1)


@main.command("verify")
@click.argument("theorems", nargs=-1)
@click.option("--format", "fmt", type=click.Choice(["markdown", "csv", "json"]),
              default="markdown", show_default=True)
@click.option("--config", "config_path", type=click.Path(exists=True),
              default=None, help="key=value cap overrides.")
@click.option("--cap", type=int, default=None,
              help="Override the exact-solver cap for this run.")
def verify_cmd(theorems, fmt, config_path, cap):
    """Run verification campaigns (all theorems when none are named).

    Exits 1 if any case mismatches its expected claim.
    """
    try:
        config = harness.load_config(config_path) if config_path else dict(
            harness.DEFAULT_CONFIG)
        if cap is not None:
            config["solver_cap"] = cap
        cases = harness.run_campaign(list(theorems) or None, config=config)
    except harness.HarnessError as e:
        raise click.UsageError(str(e)) from e
    click.echo(harness.report(fmt, cases))
    bad = [c for c in cases if not c.ok]
    if bad:
        for c in bad:
            click.echo(f"MISMATCH {c.theorem} {c.instance}: "
                       f"expected {c.expected}, got {c.got}", err=True)
        sys.exit(1)
    click.echo(f"{len(cases)} cases ok", err=True)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--cap", type=int, default=20, show_default=True,
              help="Largest playable graph order.")
@click.option("--persist", type=click.Path(), default=None,
              help="Directory for session replay files.")
@click.option("--cors", default="*", show_default=True,
              help="Allowed browser origin.")
@click.option("--ui", type=click.Path(), default=None,
              help="Directory of static UI files to serve at /.")
def serve_cmd(host, port, cap, persist, cors, ui):
    """Start the HTTP play service."""
    import uvicorn

    from .api import create_app

    click.echo(f"solver kernel: {KERNEL_BACKEND}", err=True)
    app = create_app(playable_cap=cap, persist_dir=persist,
                     cors_origin=cors, ui_dir=ui)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
