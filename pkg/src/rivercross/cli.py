"""Command-line interface for rivercross."""

import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, NoReturn, Optional

import click

from . import __version__
from .config import (
    BudgetExceededError,
    RivercrossError,
    RunConfig,
    load_run_config,
)
from .logger import LogLevel, RunLogger
from .status import RunStatus

DEFAULT_MAX_CASES = 1_000_000

BUDGET_OPTIONS = ("max_n", "max_paths", "max_morphisms", "max_bound")


def _common_options(command: Callable[..., Any]) -> Callable[..., Any]:
    """Attach the options shared by every command."""
    options = [
        click.option(
            "--config",
            "config_file",
            type=click.Path(dir_okay=False, path_type=Path),
            help="YAML run-config file; command-line flags override it.",
        ),
        click.option(
            "--log-level",
            default="summary",
            type=click.Choice(["none", "summary", "all"]),
            help="Logging level for progress lines on stderr",
        ),
        click.option(
            "--log-file",
            type=click.Path(dir_okay=False, path_type=Path),
            help="Also append progress lines to this file.",
        ),
        click.option(
            "--max-n", type=int, help="Largest instance size enumerated."
        ),
        click.option(
            "--max-paths",
            type=int,
            help="Most solutions or lifts listed.",
        ),
        click.option(
            "--max-morphisms",
            type=int,
            help="Most morphisms swept by an equivalence check.",
        ),
        click.option(
            "--max-bound", type=int, help="Largest path-length bound L."
        ),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _instance_options(command: Callable[..., Any]) -> Callable[..., Any]:
    """Attach the options naming an instance."""
    options = [
        click.option(
            "--flavor",
            type=click.Choice(["hw", "mc"]),
            help="Jealous husbands (hw) or missionaries and cannibals (mc).",
        ),
        click.option(
            "-n", "n", type=int, help="Number of couples or missionaries."
        ),
        click.option(
            "-b", "b", type=int, help="Boat capacity [default: capacity(n)]"
        ),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _output_option(command: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        "--output",
        "-o",
        type=click.Path(dir_okay=False, path_type=Path),
        help="Write the payload to this file instead of stdout.",
    )(command)


def _logger(common: Dict[str, Any]) -> RunLogger:
    return RunLogger(
        log_file=common.get("log_file"),
        log_level=LogLevel(common.get("log_level", "summary")),
    )


def _resolve(
    command: str, common: Dict[str, Any], overrides: Dict[str, Any]
) -> RunConfig:
    """Merge the run-config file, then flags, into a validated RunConfig."""
    config_file = common.get("config_file")
    config = load_run_config(config_file) if config_file else RunConfig()
    values = dict(overrides, command=command)
    values.update({k: common.get(k) for k in BUDGET_OPTIONS})
    return config.merged(values).validate()


def _finish(log: RunLogger, status: RunStatus, message: str) -> NoReturn:
    """Log the outcome line and exit with the status code."""
    log.status(status, message)
    log.close()
    sys.exit(status.exit_code)


@contextmanager
def _guard(log: RunLogger) -> Iterator[None]:
    """Map exceptions escaping a command body onto run statuses."""
    try:
        yield
    except BudgetExceededError as e:
        _finish(log, RunStatus.BUDGET_EXCEEDED, str(e))
    except (RivercrossError, ValueError) as e:
        _finish(log, RunStatus.INVALID_INPUT, str(e))
    except KeyboardInterrupt:
        log.error("Interrupted by user")
        log.close()
        sys.exit(130)
    except Exception as e:
        _finish(log, RunStatus.FAILED, f"{type(e).__name__}: {e}")


def _emit(log: RunLogger, text: str, output: Optional[Path]) -> None:
    """Write a payload to ``output`` or to stdout."""
    if output is None:
        click.echo(text, nl=False)
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    with open(output, "w", encoding="utf-8") as f:
        f.write(text)
    log.summary(f"WROTE {output}")


def _yes(value: bool) -> str:
    return "true" if value else "false"


# ============================================================================
# Main CLI group
# ============================================================================


@click.group(name="rivercross", invoke_without_command=True)
@click.version_option(version=__version__)
@click.pass_context
def cli(ctx: click.Context) -> None:
    """Rivercross - jealous husbands and missionaries and cannibals.

    Use 'rivercross solve' to count and list optimal solutions.
    Use 'rivercross lift' to lift MC solutions to HW solutions.
    Use 'rivercross catcheck' to check the category equivalence.
    """
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


# ============================================================================
# Solve command
# ============================================================================


@cli.command(name="solve")
@_instance_options
@click.option(
    "--max-len",
    type=int,
    help="Also enumerate every simple solution of at most this many trips.",
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["json", "text"]),
    help="Payload format [default: text]",
)
@click.option(
    "--all",
    "show_all",
    is_flag=True,
    help="List the solutions, not only their length and count.",
)
@click.option("--jobs", type=int, help="Worker threads for enumeration.")
@_output_option
@_common_options
def solve(
    flavor: Optional[str],
    n: Optional[int],
    b: Optional[int],
    max_len: Optional[int],
    output_format: Optional[str],
    show_all: bool,
    jobs: Optional[int],
    output: Optional[Path],
    **common: Any,
) -> None:
    """Find the optimal solutions of an instance.

    Prints the optimal length and the number of optimal solutions. Exits
    with 2 when the final state is unreachable.

    Examples:

        rivercross solve --flavor mc -n 3

        rivercross solve --flavor hw -n 3 --all

        rivercross solve --flavor mc -n 3 --max-len 13 --format json
    """
    log = _logger(common)
    with _guard(log):
        from rivercross.export import dump_json, solutions_document
        from rivercross.graph import build_graph
        from rivercross.model import Flavor
        from rivercross.solver import (
            InfeasibleInstanceError,
            enumerate_solutions,
            shortest_solutions,
        )

        config = _resolve(
            "solve",
            common,
            {
                "flavor": flavor,
                "n": n,
                "b": b,
                "max_len": max_len,
                "output_format": output_format,
                "jobs": jobs,
            },
        )
        if config.output_format == "dot":
            raise ValueError("solve writes json or text; use export for dot")
        as_json = config.output_format == "json"
        kind = Flavor(config.flavor)
        capacity = config.capacity

        log.summary(f"SOLVING {kind.value} n={config.n} b={capacity}")
        graph = build_graph(config.n, capacity, kind, config.budgets)
        log.detail(f"BUILT state graph with {len(graph)} states")
        try:
            result = shortest_solutions(
                graph, config.budgets, materialize=show_all or as_json
            )
        except InfeasibleInstanceError as e:
            if as_json:
                document = solutions_document([], config.n, capacity, kind)
                _emit(log, dump_json(document), output)
            else:
                _emit(log, f"{e}\n", output)
            _finish(log, RunStatus.INFEASIBLE, str(e))

        listed = result.solutions
        if config.max_len is not None:
            log.detail(f"ENUMERATING solutions up to {config.max_len} trips")
            listed = tuple(
                enumerate_solutions(
                    graph, config.max_len, config.budgets, config.jobs
                )
            )

        if as_json:
            if config.max_len is None:
                document = solutions_document(result)
            else:
                document = solutions_document(
                    listed, config.n, capacity, kind
                )
            text = dump_json(document)
        else:
            lines = [f"length={result.length} count={result.count}"]
            if config.max_len is not None:
                lines.append(
                    f"max_len={config.max_len} solutions={len(listed)}"
                )
            if show_all:
                lines.extend(str(s) for s in listed)
            text = "\n".join(lines) + "\n"
        _emit(log, text, output)
        _finish(
            log,
            RunStatus.SOLVED,
            f"{graph.label()}: {result.count} optimal solutions of "
            f"{result.length} trips",
        )


# ============================================================================
# Lift command
# ============================================================================


@cli.command(name="lift")
@click.argument(
    "solution_file",
    metavar="FILE",
    required=True,
    type=click.Path(dir_okay=False, path_type=Path),
)
@click.option(
    "--index",
    default=0,
    show_default=True,
    type=int,
    help="Which solution of the file to lift.",
)
@click.option(
    "--fiber",
    is_flag=True,
    help="Also build every HW solution over the MC solution.",
)
@click.option(
    "--strategy",
    default="eager",
    show_default=True,
    type=click.Choice(["eager", "lazy"]),
    help="Relabel the prefix before every trip, or once at the end.",
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["json", "text"]),
    help="Payload format [default: text]",
)
@_output_option
@_common_options
def lift(
    solution_file: Path,
    index: int,
    fiber: bool,
    strategy: str,
    output_format: Optional[str],
    output: Optional[Path],
    **common: Any,
) -> None:
    """Lift an MC solution to an HW solution.

    FILE is a solutions JSON file of MC flavor, as written by
    'solve --format json'.

    Examples:

        rivercross lift mc_solution.json

        rivercross lift mc_solutions.json --index 2 --fiber
    """
    log = _logger(common)
    with _guard(log):
        from rivercross.export import lift_document, load_solutions
        from rivercross.lift import (
            LiftStrategy,
            enumerate_lifts,
            lift_permutations_in_rotation_subgroup,
            lift_solution,
        )
        from rivercross.model import Flavor

        config = _resolve("lift", common, {"output_format": output_format})
        if config.output_format == "dot":
            raise ValueError("lift writes json or text; use export for dot")

        log.summary(f"LOADING solutions from: {solution_file}")
        document = load_solutions(solution_file)
        if document.flavor is not Flavor.MC:
            raise ValueError("lift needs a file of MC solutions")
        if not 0 <= index < len(document.solutions):
            raise ValueError(
                f"Solution index {index} out of range; the file holds "
                f"{len(document.solutions)}"
            )
        config.budgets.check_n(document.n)
        mc_path = document.solutions[index]

        log.summary(f"LIFTING solution {index} ({mc_path.length} trips)")
        trace = lift_solution(
            mc_path, document.b, strategy=LiftStrategy(strategy)
        )
        lattice = None
        if fiber:
            lattice = enumerate_lifts(
                mc_path, document.b, budgets=config.budgets
            )
            log.detail(f"BUILT fiber with {lattice.count} lifts")

        if config.output_format == "json":
            from rivercross.export import dump_json

            text = dump_json(lift_document(trace, document.b, lattice))
        else:
            rotations = lift_permutations_in_rotation_subgroup(trace)
            lines = [
                f"solution={trace.path}",
                "permutations="
                + ",".join(str(pi) for pi in trace.permutations),
                "cases=" + ",".join(str(label) for label in trace.cases),
                f"rotation_subgroup={_yes(rotations)}",
            ]
            if lattice is not None:
                lines.append(f"fiber={lattice.count}")
                lines.append(
                    "layers=" + ",".join(str(k) for k in lattice.layer_sizes)
                )
                for j, layer in enumerate(lattice.layers):
                    states = "; ".join(str(s) for s in layer)
                    lines.append(f"layer {j}: {states}")
            text = "\n".join(lines) + "\n"
        _emit(log, text, output)
        detail = f", fiber={lattice.count}" if lattice is not None else ""
        _finish(
            log,
            RunStatus.SOLVED,
            f"lifted {mc_path.length} trips{detail}",
        )


# ============================================================================
# Export command
# ============================================================================


@cli.command(name="export")
@_instance_options
@click.option(
    "--component",
    is_flag=True,
    help="Only the states reachable from the initial state.",
)
@click.option(
    "--optimal",
    is_flag=True,
    help="Only the union of the optimal solutions.",
)
@click.option(
    "--fiber",
    "fiber_file",
    type=click.Path(dir_okay=False, path_type=Path),
    help="The fiber over an MC solution read from this file.",
)
@click.option(
    "--index",
    default=0,
    show_default=True,
    type=int,
    help="Which solution of the --fiber file to use.",
)
@click.option(
    "--format",
    "output_format",
    default="dot",
    show_default=True,
    type=click.Choice(["dot", "json"]),
    help="Payload format",
)
@_output_option
@_common_options
def export(
    flavor: Optional[str],
    n: Optional[int],
    b: Optional[int],
    component: bool,
    optimal: bool,
    fiber_file: Optional[Path],
    index: int,
    output_format: str,
    output: Optional[Path],
    **common: Any,
) -> None:
    """Export a state graph, optimal scheme or fiber as DOT or JSON.

    Vertices with the boat on the left bank are filled black.

    Examples:

        rivercross export --flavor mc -n 4 -b 2 --component

        rivercross export --flavor hw -n 3 --optimal -o hw3.dot

        rivercross export --fiber mc_solution.json --format json
    """
    log = _logger(common)
    with _guard(log):
        from rivercross.export import (
            dag_dot,
            dump_json,
            fiber_document,
            fiber_dot,
            load_solutions,
            render,
            solutions_document,
            state_graph_document,
            state_graph_dot,
        )
        from rivercross.graph import build_graph, reachable_component
        from rivercross.lift import enumerate_lifts
        from rivercross.model import Flavor
        from rivercross.solver import (
            InfeasibleInstanceError,
            optimal_subgraph,
            shortest_solutions,
        )

        config = _resolve(
            "export",
            common,
            {"flavor": flavor, "n": n, "b": b, "output_format": output_format},
        )
        if sum([component, optimal, fiber_file is not None]) > 1:
            raise ValueError(
                "Choose at most one of --component, --optimal and --fiber"
            )
        as_json = config.output_format == "json"

        if fiber_file is not None:
            log.summary(f"LOADING solutions from: {fiber_file}")
            document = load_solutions(fiber_file)
            if document.flavor is not Flavor.MC:
                raise ValueError("--fiber needs a file of MC solutions")
            if not 0 <= index < len(document.solutions):
                raise ValueError(f"Solution index {index} out of range")
            lattice = enumerate_lifts(
                document.solutions[index], document.b, budgets=config.budgets
            )
            if as_json:
                text = dump_json(fiber_document(lattice))
            else:
                text = render(fiber_dot(lattice))
            _emit(log, text, output)
            _finish(log, RunStatus.SOLVED, f"fiber of {lattice.count} lifts")

        kind = Flavor(config.flavor)
        graph = build_graph(config.n, config.capacity, kind, config.budgets)
        name = f"{kind.value}_n{config.n}_b{config.capacity}"
        if optimal:
            try:
                if as_json:
                    result = shortest_solutions(graph, config.budgets)
                    text = dump_json(solutions_document(result))
                else:
                    text = render(
                        dag_dot(optimal_subgraph(graph), f"{name}_optimal")
                    )
            except InfeasibleInstanceError as e:
                _finish(log, RunStatus.INFEASIBLE, str(e))
            _emit(log, text, output)
            _finish(log, RunStatus.SOLVED, f"optimal scheme of {name}")

        states = reachable_component(graph) if component else graph.states
        if as_json:
            text = dump_json(state_graph_document(graph, states))
        else:
            suffix = "_component" if component else ""
            text = render(state_graph_dot(graph, states, name + suffix))
        _emit(log, text, output)
        _finish(log, RunStatus.SOLVED, f"{len(states)} states of {name}")


# ============================================================================
# Orbit command
# ============================================================================


@cli.command(name="orbit")
@click.argument("state_text", metavar="STATE", required=True)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["json", "text"]),
    help="Payload format [default: text]",
)
@_output_option
@_common_options
def orbit_command(
    state_text: str,
    output_format: Optional[str],
    output: Optional[Path],
    **common: Any,
) -> None:
    """List the orbit of an HW state under relabelling of couples.

    STATE is an HW state such as "[w3 h1 h2 h3 | w1 w2 : R]". An MC
    state such as "[(1,3)|(2,0):R]" lists the orbit over it.
    """
    log = _logger(common)
    with _guard(log):
        from rivercross.model import McState, parse_state
        from rivercross.symmetry import orbit, section, stabilizer

        config = _resolve("orbit", common, {"output_format": output_format})
        state = parse_state(state_text)
        config.budgets.check_n(state.n)
        if isinstance(state, McState):
            state = section(state)
        found = orbit(state)
        fixing = stabilizer(state)

        if config.output_format == "json":
            from rivercross.export import dump_json

            text = dump_json(
                {
                    "state": str(state),
                    "representative": str(found.representative),
                    "size": found.size,
                    "stabilizer": [str(pi) for pi in fixing],
                    "members": [str(s) for s in found],
                }
            )
        else:
            lines = [
                f"representative={found.representative}",
                f"size={found.size}",
                f"stabilizer={len(fixing)}",
            ]
            lines.extend(str(s) for s in found)
            text = "\n".join(lines) + "\n"
        _emit(log, text, output)
        _finish(log, RunStatus.SOLVED, f"orbit of {found.size} states")


# ============================================================================
# Category check command
# ============================================================================


@cli.command(name="catcheck")
@click.option("-n", "n", type=int, help="Number of couples.")
@click.option(
    "-b", "b", type=int, help="Boat capacity [default: capacity(n)]"
)
@click.option(
    "-L", "bound", type=int, help="Longest morphism checked [default: 6]"
)
@click.option("--seed", type=int, help="Seed for sampled law checks.")
@click.option("--jobs", type=int, help="Worker threads for law checks.")
@click.option(
    "--max-cases",
    default=DEFAULT_MAX_CASES,
    show_default=True,
    type=int,
    help="Pairs or triples checked exhaustively before sampling.",
)
@click.option(
    "--samples",
    type=int,
    help="Seeded cases for checks above max-cases [default: 50000]",
)
@click.option(
    "--assoc-bound",
    type=int,
    help="Longest composite in the associativity checks [default: 4]",
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["json", "text"]),
    help="Payload format [default: text]",
)
@_output_option
@_common_options
def catcheck(
    n: Optional[int],
    b: Optional[int],
    bound: Optional[int],
    seed: Optional[int],
    jobs: Optional[int],
    max_cases: int,
    samples: Optional[int],
    assoc_bound: Optional[int],
    output_format: Optional[str],
    output: Optional[Path],
    **common: Any,
) -> None:
    """Check the HW/MC category equivalence for walks of at most L trips.

    Exits with 0 when every check holds and 2 when one fails.

    Examples:

        rivercross catcheck -n 3 -L 6

        rivercross catcheck -n 2 -L 8 --format json --seed 7
    """
    log = _logger(common)
    with _guard(log):
        from rivercross.category import (
            ASSOCIATIVITY_BOUND,
            BOUND_NOTE,
            DEFAULT_SAMPLES,
            LawReport,
            build_bundle,
            check_agreement,
            check_associativity,
            check_equivalence,
            check_functor_laws,
            check_hom_cardinality,
            check_identity_laws,
            compose_functors,
        )
        from rivercross.export import dump_json, equivalence_document

        config = _resolve(
            "catcheck",
            common,
            {
                "n": n,
                "b": b,
                "bound": bound,
                "seed": seed,
                "jobs": jobs,
                "output_format": output_format,
            },
        )
        if config.output_format == "dot":
            raise ValueError("catcheck writes json or text")
        if max_cases < 1:
            raise ValueError(f"max-cases must be positive, got {max_cases}")
        if samples is None:
            samples = DEFAULT_SAMPLES
        elif samples < 1:
            raise ValueError(f"samples must be positive, got {samples}")
        if assoc_bound is None:
            assoc_bound = ASSOCIATIVITY_BOUND
        elif assoc_bound < 0:
            raise ValueError(
                f"assoc-bound must be non-negative, got {assoc_bound}"
            )

        log.summary(
            f"BUILDING categories n={config.n} b={config.capacity} "
            f"L={config.bound}"
        )
        bundle = build_bundle(
            config.n, config.capacity, config.bound, config.budgets
        )
        log.summary("CHECKING equivalence")
        report = check_equivalence(bundle.equivalence, config.budgets)

        sampled = {
            "seed": config.seed,
            "jobs": config.jobs,
            "samples": samples,
        }
        laws: List[LawReport] = []
        for category in (bundle.hw, bundle.orbits, bundle.mc):
            laws.append(check_identity_laws(category))
        for category in (bundle.hw, bundle.orbits, bundle.mc, bundle.orb):
            laws.append(
                check_associativity(
                    category, max_cases, max_len=assoc_bound, **sampled
                )
            )
        for functor in (
            bundle.quotient,
            bundle.equivalence,
            bundle.hw_to_mc,
            bundle.orbit_to_mc,
        ):
            laws.append(check_functor_laws(functor, max_cases, **sampled))
        laws.append(check_hom_cardinality(bundle.orb))
        laws.append(
            check_agreement(
                compose_functors(bundle.equivalence, bundle.quotient),
                bundle.hw_to_mc,
                bundle.hw,
            )
        )
        for law in laws:
            mode = "exhaustive" if law.exhaustive else "sampled"
            log.detail(
                f"{'HOLDS' if law.holds else 'FAILS'} {law.law} "
                f"{law.subject} ({law.checked} cases, {mode})"
            )

        if config.output_format == "json":
            text = dump_json(equivalence_document(report, laws))
        else:
            lines = [
                f"n={report.n} b={report.b} L={report.bound} "
                f"functor={report.functor}",
                f"full={_yes(report.full)}",
                f"faithful={_yes(report.faithful)}",
                "essentially_surjective="
                + _yes(report.essentially_surjective),
                f"morphisms_checked={report.morphisms_checked}",
            ]
            lines.extend(
                f"counterexample: {c}" for c in report.counterexamples
            )
            for law in laws:
                mode = "exhaustive" if law.exhaustive else "sampled"
                lines.append(
                    f"law {law.law} {law.subject}: holds={_yes(law.holds)} "
                    f"checked={law.checked} {mode}"
                )
                lines.extend(
                    f"  counterexample: {c}" for c in law.counterexamples
                )
            lines.append(f"note: {BOUND_NOTE}")
            text = "\n".join(lines) + "\n"
        _emit(log, text, output)

        verified = report.is_equivalence and all(law.holds for law in laws)
        status = RunStatus.VERIFIED if verified else RunStatus.REFUTED
        _finish(
            log,
            status,
            f"equivalence up to L={config.bound}: {_yes(verified)}",
        )


# ============================================================================
# States and frontier commands
# ============================================================================


@cli.command(name="states")
@click.option(
    "--flavor",
    type=click.Choice(["hw", "mc"]),
    help="Jealous husbands (hw) or missionaries and cannibals (mc).",
)
@click.option("-n", "n", type=int, help="Number of couples or missionaries.")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["json", "text"]),
    help="Payload format [default: text]",
)
@_output_option
@_common_options
def states(
    flavor: Optional[str],
    n: Optional[int],
    output_format: Optional[str],
    output: Optional[Path],
    **common: Any,
) -> None:
    """Enumerate and classify the admissible states of an instance."""
    log = _logger(common)
    with _guard(log):
        from rivercross.model import Flavor, enumerate_states, state_count
        from rivercross.symmetry import orbit_count
        from rivercross.taxonomy import classify_state

        config = _resolve(
            "states",
            common,
            {"flavor": flavor, "n": n, "output_format": output_format},
        )
        if config.output_format == "dot":
            raise ValueError("states writes json or text")
        kind = Flavor(config.flavor)
        found = enumerate_states(config.n, kind, config.budgets)
        closed_form = state_count(config.n, kind)
        orbits: Optional[int] = None
        if kind is Flavor.HW:
            orbits = orbit_count(found)  # type: ignore[arg-type]

        if config.output_format == "json":
            from rivercross.export import dump_json

            document: Dict[str, Any] = {
                "n": config.n,
                "flavor": kind.value,
                "count": len(found),
                "closed_form": closed_form,
                "states": [
                    {"state": str(s), "type": classify_state(s).label(kind)}
                    for s in found
                ],
            }
            if orbits is not None:
                document["orbits"] = orbits
            text = dump_json(document)
        else:
            header = f"count={len(found)} closed_form={closed_form}"
            if orbits is not None:
                header += f" orbits={orbits}"
            lines = [header]
            lines.extend(
                f"{s} {classify_state(s).label(kind)}" for s in found
            )
            text = "\n".join(lines) + "\n"
        _emit(log, text, output)
        _finish(
            log,
            RunStatus.SOLVED,
            f"{len(found)} {kind.value} states for n={config.n}",
        )


@cli.command(name="frontier")
@click.option(
    "--n-min", default=2, show_default=True, type=int, help="Smallest n."
)
@click.option(
    "--n-max", default=8, show_default=True, type=int, help="Largest n."
)
@click.option(
    "--b-max",
    default=5,
    show_default=True,
    type=int,
    help="Largest boat capacity.",
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["json", "text"]),
    help="Payload format [default: text]",
)
@_output_option
@_common_options
def frontier(
    n_min: int,
    n_max: int,
    b_max: int,
    output_format: Optional[str],
    output: Optional[Path],
    **common: Any,
) -> None:
    """Tabulate which (n, b) instances are solvable.

    The least feasible capacity of each n is compared with the capacity
    formula: 2 up to n = 3, 3 for n = 4 and 5, 4 from n = 6 on.
    """
    log = _logger(common)
    with _guard(log):
        from rivercross.graph import feasibility_frontier
        from rivercross.model import capacity

        config = _resolve(
            "frontier", common, {"n": n_min, "output_format": output_format}
        )
        if config.output_format == "dot":
            raise ValueError("frontier writes json or text")
        if n_max < n_min or b_max < 1:
            raise ValueError("Need n-min <= n-max and b-max >= 1")
        config.budgets.check_n(n_max)

        n_values = range(n_min, n_max + 1)
        b_values = range(1, b_max + 1)
        log.summary(f"DECIDING {len(n_values) * len(b_values)} instances")
        table = feasibility_frontier(n_values, b_values, config.budgets)
        least = {
            size: next((k for k in b_values if table[(size, k)]), None)
            for size in n_values
        }

        if config.output_format == "json":
            from rivercross.export import dump_json

            text = dump_json(
                {
                    "feasible": [
                        {"n": size, "b": k, "feasible": table[(size, k)]}
                        for size in n_values
                        for k in b_values
                    ],
                    "least": [
                        {
                            "n": size,
                            "least_b": least[size],
                            "capacity": capacity(size),
                        }
                        for size in n_values
                    ],
                }
            )
        else:
            header = "n  " + " ".join(f"b={k:<2}" for k in b_values)
            lines = [header + " least capacity"]
            for size in n_values:
                cells = " ".join(
                    f"{'yes' if table[(size, k)] else 'no':<4}"
                    for k in b_values
                )
                found = least[size]
                lines.append(
                    f"{size:<2} {cells} {found if found else '-':<5} "
                    f"{capacity(size)}"
                )
            text = "\n".join(line.rstrip() for line in lines) + "\n"
        _emit(log, text, output)
        _finish(
            log,
            RunStatus.SOLVED,
            f"frontier for n={n_min}..{n_max}, b=1..{b_max}",
        )


def main() -> None:
    """Entry point for the CLI."""
    cli(prog_name="rivercross")


if __name__ == "__main__":  # pragma: no cover
    main()
