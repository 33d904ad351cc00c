"""Theorem-verification campaigns over the solver, predicates and strategies.

Each theorem in the catalog expands to desk-scale VerificationCases, checked
by one of three methods: the exact solver, exhaustive predicate sweeps, or
strategy validation (opponent-only exhaustive search).  Reports render the
cases as markdown, CSV, or JSON with a stable column order.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass
from itertools import combinations, product
from typing import Callable, Optional

from .engine import OutcomeClass, Player, game_numbers, outcome
from .graphs import Graph, GraphError, corona, generate, parse_graph_expr
from .resolving import is_resolving, is_strictly_locating, metric_dimension
from .strategies import (
    StrategyError,
    cycle_resolver_strategy,
    path_resolver_strategy,
    spoiler_copy_strategy,
    spoiler_p5_strategy,
    validate_strategy,
)


class HarnessError(ValueError):
    """Unknown theorem id or out-of-cap request."""


DEFAULT_CONFIG: dict[str, int] = {
    # largest order solved exactly for outcomes
    "solver_cap": 16,
    # largest order solved exactly when full move counts are needed
    "value_cap": 12,
    # largest order handled by strategy validation
    "validation_cap": 24,
    # campaign tiering: prefer the exact solver up to this order, then
    # switch to strategy validation (auditable per case via `method`)
    "exact_tier_cap": 13,
}


def load_config(path: str) -> dict[str, int]:
    """key=value lines ('#' comments); unknown keys rejected."""
    config = dict(DEFAULT_CONFIG)
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise HarnessError(f"{path}:{lineno}: expected key=value")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in DEFAULT_CONFIG:
                raise HarnessError(f"{path}:{lineno}: unknown key {key!r}")
            try:
                config[key] = int(value.strip())
            except ValueError as e:
                raise HarnessError(f"{path}:{lineno}: bad integer") from e
    return config


@dataclass
class VerificationCase:
    theorem: str
    instance: str
    expected: str
    got: str
    method: str
    millis: float

    @property
    def ok(self) -> bool:
        return self.expected == self.got


def _case(theorem: str, instance: str, expected: str, method: str,
          run: Callable[[], str]) -> VerificationCase:
    t0 = time.perf_counter()
    got = run()
    millis = (time.perf_counter() - t0) * 1000.0
    return VerificationCase(theorem, instance, expected, got, method, round(millis, 1))


def _outcome_str(g: Graph, cap: int) -> str:
    return outcome(g, cap=cap).value


# ---------------------------------------------------------------------------
# theorem campaigns
# ---------------------------------------------------------------------------


def _transversals(ell: int):
    return product(*[(2 * i, 2 * i + 1) for i in range(ell)])  # 0-based blocks


def _verify_transversal_lemma(params, config):
    ells = params.get("ells", (3, 4, 5))
    cases = []
    for ell in ells:
        for family in ("path", "cycle"):
            g = generate(family, 2 * ell)
            name = f"{family}({2 * ell})"

            def run(g=g, ell=ell):
                bad = [
                    w for w in _transversals(ell)
                    if not is_strictly_locating(g, set(w))
                ]
                return "all transversals strictly locating" if not bad else f"fails at {bad[0]}"

            cases.append(_case("transversal-lemma", name,
                               "all transversals strictly locating",
                               "exhaustive-predicate", run))
    # sharpness: the lemma needs ell >= 3; on P4 some transversal fails
    def run_sharp():
        bad = [w for w in _transversals(2) if not is_strictly_locating(generate("path", 4), set(w))]
        return "some transversal fails" if bad else "all transversals strictly locating"

    cases.append(_case("transversal-lemma", "path(4) (sharpness)",
                       "some transversal fails", "exhaustive-predicate", run_sharp))
    return cases


_EQUIVALENCE_CORPUS = (
    "path(2)", "path(3)", "path(4)", "path(5)", "path(6)",
    "cycle(3)", "cycle(4)", "cycle(5)", "cycle(6)", "paw", "complete(4)",
)


def _verify_k1_equivalence(params, config):
    exprs = params.get("hs", _EQUIVALENCE_CORPUS)
    cases = []
    for expr in exprs:
        h = parse_graph_expr(expr)
        cone = corona(generate("k1"), h)

        def run(h=h, cone=cone):
            for size in range(h.n + 1):
                for comb in combinations(range(h.n), size):
                    s_h = set(comb)
                    s_cone = {v + 1 for v in comb}  # copy vertices sit after the cone apex
                    if is_resolving(cone, s_cone) != is_strictly_locating(h, s_h):
                        return f"counterexample S={sorted(s_h)}"
            return "equivalent"

        cases.append(_case("k1-equivalence", expr, "equivalent",
                           "exhaustive-predicate", run))
    return cases


def _resolver_strategy_case(theorem, g, expr, strategy, expected, cap):
    """Wins-all for a Resolver strategy in both games proves outcome R;
    wins-all for a Spoiler strategy in both games proves outcome S."""

    def run():
        for first in (Player.RESOLVER, Player.SPOILER):
            if not validate_strategy(g, strategy, first, cap=cap).wins_all:
                return f"unproven ({strategy.name} loses a line, first={first.value})"
        return "R" if strategy.role is Player.RESOLVER else "S"

    return _case(theorem, expr, expected,
                 f"strategy-validation({strategy.name})", run)


def _verify_paths(params, config):
    g_exprs = params.get("gs", ("path(2)", "path(3)"))
    ks = params.get("ks", (1, 2, 3, 4, 5, 6, 7))
    cases = []
    for g_expr in g_exprs:
        base = parse_graph_expr(g_expr)
        for k in ks:
            g = corona(base, generate("path", k))
            expected = "S" if k == 5 else "R"
            expr = f"corona({g_expr},path({k}))"
            if g.n <= config["exact_tier_cap"]:
                cases.append(_case("paths", expr, expected, "exact-solver",
                                   lambda g=g: _outcome_str(g, config["solver_cap"])))
            else:
                strategy = spoiler_p5_strategy() if k == 5 else path_resolver_strategy(k)
                cases.append(_resolver_strategy_case(
                    "paths", g, expr, strategy, expected, config["validation_cap"]))
    return cases


def _verify_k1_paths(params, config):
    ks = params.get("ks", (2, 3, 4, 5, 6, 7))
    cases = []
    for k in ks:
        g = corona(generate("k1"), generate("path", k))
        expected = "N" if k in (2, 5) else "R"
        cases.append(_case("k1-paths", f"corona(k1,path({k}))", expected,
                           "exact-solver",
                           lambda g=g: _outcome_str(g, config["solver_cap"])))
    return cases


def _verify_cycles(params, config):
    g_exprs = params.get("gs", ("k1", "path(2)"))
    ks = params.get("ks", (3, 4, 5, 6, 7))
    cases = []
    for g_expr in g_exprs:
        base = parse_graph_expr(g_expr)
        for k in ks:
            g = corona(base, generate("cycle", k))
            expected = "S" if k == 3 else "R"
            expr = f"corona({g_expr},cycle({k}))"
            if g.n <= config["exact_tier_cap"]:
                cases.append(_case("cycles", expr, expected, "exact-solver",
                                   lambda g=g: _outcome_str(g, config["solver_cap"])))
            elif k == 3:
                cases.append(_resolver_strategy_case(
                    "cycles", g, expr, spoiler_copy_strategy(g), expected,
                    config["validation_cap"]))
            else:
                cases.append(_resolver_strategy_case(
                    "cycles", g, expr, cycle_resolver_strategy(k), expected,
                    config["validation_cap"]))
    return cases


def _verify_paw(params, config):
    paw = generate("paw")
    cone = corona(generate("k1"), paw)
    return [
        _case("paw", "paw", "R", "exact-solver",
              lambda: _outcome_str(paw, config["solver_cap"])),
        _case("paw", "corona(k1,paw)", "N", "exact-solver",
              lambda: _outcome_str(cone, config["solver_cap"])),
    ]


def _verify_spoiler_copy(params, config):
    h_expr = params.get("h", "cycle(3)")
    g_expr = params.get("g", "path(2)")
    h = parse_graph_expr(h_expr)
    g = corona(parse_graph_expr(g_expr), h)
    expr = f"corona({g_expr},{h_expr})"
    cases = [
        _case("spoiler-copy", h_expr, "N or S", "exact-solver",
              lambda: "N or S" if outcome(h) in (OutcomeClass.N, OutcomeClass.S)
              else outcome(h).value),
        _case("spoiler-copy", expr, "S", "exact-solver",
              lambda: _outcome_str(g, config["solver_cap"])),
        _resolver_strategy_case("spoiler-copy", g, expr,
                                spoiler_copy_strategy(g), "S",
                                config["validation_cap"]),
    ]
    return cases


def _verify_move_count(params, config):
    h = generate("cycle", 4)
    g = corona(generate("path", 2), h)
    nums_h = game_numbers(h)
    cases = [
        _case("move-count", "cycle(4) diameter", "2", "exhaustive-predicate",
              lambda: str(h.diameter())),
        _case("move-count", "R_MB(cycle(4)) = R'_MB(cycle(4))",
              "equal", "exact-solver",
              lambda: "equal" if nums_h.r_mb == nums_h.r_mb_prime is not None
              else f"R_MB={nums_h.r_mb} R'_MB={nums_h.r_mb_prime}"),
    ]

    def run():
        nums = game_numbers(g, cap=config["value_cap"])
        want = 2 * nums_h.r_mb
        if nums.r_mb == nums.r_mb_prime == want:
            return f"both equal {want}"
        return f"R_MB={nums.r_mb} R'_MB={nums.r_mb_prime}"

    cases.append(_case("move-count", "corona(path(2),cycle(4))",
                       f"both equal {2 * nums_h.r_mb}", "exact-solver", run))
    return cases


def _verify_k1_diam2(params, config):
    h = generate("petersen")
    cone = corona(generate("k1"), h)
    cases = [
        _case("k1-diam2", "petersen diameter/degree", "diam 2, max degree 3",
              "exhaustive-predicate",
              lambda: f"diam {h.diameter()}, max degree {h.max_degree()}"),
        _case("k1-diam2", "corona(k1,petersen) outcome", "R", "exact-solver",
              lambda: _outcome_str(cone, config["solver_cap"])),
    ]

    def run():
        nh = game_numbers(h, cap=config["value_cap"])
        nc = game_numbers(cone, cap=max(config["value_cap"], cone.n))
        if nh.r_mb == nc.r_mb and nh.r_mb_prime == nc.r_mb_prime:
            return "R_MB and R'_MB agree"
        return f"H=({nh.r_mb},{nh.r_mb_prime}) cone=({nc.r_mb},{nc.r_mb_prime})"

    cases.append(_case("k1-diam2", "corona(k1,petersen) move counts",
                       "R_MB and R'_MB agree", "exact-solver", run))
    return cases


_INVARIANT_CORPUS = (
    "path(2)", "path(3)", "path(5)", "cycle(3)", "cycle(4)", "cycle(5)",
    "paw", "complete(4)", "corona(k1,path(2))", "corona(k1,path(5))",
    "corona(path(2),cycle(3))", "corona(path(2),cycle(4))",
)


def _verify_invariants(params, config):
    exprs = params.get("instances", _INVARIANT_CORPUS)
    cases = []
    for expr in exprs:
        g = parse_graph_expr(expr)
        if g.n > config["value_cap"]:
            continue

        def run(g=g):
            nums = game_numbers(g, cap=config["value_cap"])
            dim, _ = metric_dimension(g)
            if nums.r_mb is not None and nums.r_mb < dim:
                return f"R_MB={nums.r_mb} < dim={dim}"
            if nums.r_mb is not None and nums.r_mb_prime is not None:
                if nums.r_mb_prime < nums.r_mb:
                    return f"R'_MB={nums.r_mb_prime} < R_MB={nums.r_mb}"
            if nums.s_mb is not None and nums.s_mb_prime is not None:
                if nums.s_mb < nums.s_mb_prime:
                    return f"S_MB={nums.s_mb} < S'_MB={nums.s_mb_prime}"
            outcome(g, cap=config["solver_cap"])  # raises if 2nd player wins both
            return "ok"

        cases.append(_case("invariants", expr,
                           "ok", "exact-solver", run))
    return cases


_SANDWICH_CORPUS = (("path(2)", "cycle(4)"), ("path(2)", "cycle(5)"))


def _verify_sandwich(params, config):
    pairs = params.get("instances", _SANDWICH_CORPUS)
    cases = []
    for g_expr, h_expr in pairs:
        base = parse_graph_expr(g_expr)
        h = parse_graph_expr(h_expr)
        g = corona(base, h)
        expr = f"corona({g_expr},{h_expr})"
        if g.n > config["value_cap"] or h.diameter() > 2:
            continue

        def run(base=base, h=h, g=g):
            if outcome(g, cap=config["solver_cap"]) is not OutcomeClass.R:
                return "not applicable (outcome != R)"
            nh = game_numbers(h, cap=config["value_cap"])
            ng_ = game_numbers(g, cap=config["value_cap"])
            lo = base.n * nh.r_mb
            hi = nh.r_mb + (base.n - 1) * nh.r_mb_prime
            if lo <= ng_.r_mb <= hi:
                return "within bounds"
            return f"{lo} <= {ng_.r_mb} <= {hi} fails"

        cases.append(_case("sandwich", expr, "within bounds", "exact-solver", run))
    return cases


THEOREMS: dict[str, Callable[[dict, dict], list[VerificationCase]]] = {
    "transversal-lemma": _verify_transversal_lemma,
    "k1-equivalence": _verify_k1_equivalence,
    "paths": _verify_paths,
    "k1-paths": _verify_k1_paths,
    "cycles": _verify_cycles,
    "paw": _verify_paw,
    "spoiler-copy": _verify_spoiler_copy,
    "move-count": _verify_move_count,
    "k1-diam2": _verify_k1_diam2,
    "invariants": _verify_invariants,
    "sandwich": _verify_sandwich,
}


def verify(theorem_id: str, params: Optional[dict] = None,
           config: Optional[dict[str, int]] = None) -> list[VerificationCase]:
    """Run one theorem's verification cases."""
    if theorem_id not in THEOREMS:
        raise HarnessError(f"unknown theorem {theorem_id!r}; "
                           f"known: {', '.join(sorted(THEOREMS))}")
    cfg = dict(DEFAULT_CONFIG)
    if config:
        cfg.update(config)
    try:
        return THEOREMS[theorem_id](params or {}, cfg)
    except (GraphError, StrategyError) as e:
        raise HarnessError(str(e)) from e


def run_campaign(theorem_ids: Optional[list[str]] = None,
                 config: Optional[dict[str, int]] = None) -> list[VerificationCase]:
    ids = theorem_ids or list(THEOREMS)
    cases = []
    for tid in ids:
        cases.extend(verify(tid, config=config))
    return cases


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

_COLUMNS = ("theorem", "instance", "expected", "got", "method", "millis")


def report(fmt: str, cases: list[VerificationCase]) -> str:
    """Render cases as markdown, csv, or json (stable column order)."""
    if fmt == "json":
        return json.dumps([asdict(c) for c in cases], indent=2)
    rows = [[str(getattr(c, col)) for col in _COLUMNS] for c in cases]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_COLUMNS)
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| " + " | ".join(_COLUMNS) + " |",
                 "| " + " | ".join("---" for _ in _COLUMNS) + " |"]
        lines += ["| " + " | ".join(row) + " |" for row in rows]
        return "\n".join(lines) + "\n"
    raise HarnessError(f"unknown report format {fmt!r}")
