"""Run immgate from the command line.

Every command prints one JSON document on standard output and reports through
its exit status:

* 0: affirmative, decided or solved
* 1: usage or input error (message on standard error, no payload)
* 2: negative, obstructed, unsatisfiable or no solution within the bound
* 3: open, unknown, unresolved or outside the bundled tables
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Callable, NoReturn, Sequence

from . import __version__
from .algebra import IntMatrix, QuadraticRefinement
from .algebra import arf_invariant, bernoulli, signature
from .bridge import LiftingInstance, compile_to_lifting, extract_quadratic
from .diophantine import (
    NoSolutionWithinBound, QuadSystem, Solution, UnsatisfiableProof, decide, validate
)
from .env import FAIL, INFO, Settings, load_settings, set_verbosity
from .exotic import bp_divisor_expression, bp_order, p_group, theta_assembly
from .homotopy import State, pi_gn
from .obstruction import (
    ManifoldClassData,
    Verdict,
    closed_embedding_obstruction,
    euler_square_problem,
    pontryagin_obstruction,
)
from .ranges import (
    Category,
    Kind,
    ProblemSpec,
    Status,
    chart,
    classify_embedding,
    classify_immersion,
    embedding_stabilization,
    sweep,
)
from .tables import default_table, use_table
from .util import dumps, loads
from .util.error import (
    BudgetExceeded,
    ImmgateError,
    MissingCompositionData,
    NotApplicable,
    OutOfTable,
    SchemaError,
)


SOLVED = 0
ERROR = 1
NEGATIVE = 2
UNKNOWN = 3


class ArgumentParser(argparse.ArgumentParser):
    """An argument parser that fails with status 1 instead of 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        FAIL(message)


class Parser:
    """Command-line parser for immgate."""

    def __init__(self) -> None:
        self.root = ArgumentParser(
            prog="immgate",
            description=(
                "Decidability of immersing and embedding manifolds in Euclidean "
                "space, with the algebra and tables behind the verdicts."
            ),
        )
        self.commands = self.root.add_subparsers(
            dest="command",
            title="commands",
            description=(
                "Classify dimension ranges, reduce quadratic Diophantine systems to "
                "lifting problems and back, test characteristic classes, and query "
                "homotopy groups and groups of homotopy spheres."
            ),
            prog="immgate",
            metavar="(command)",
        )

    def _output(self, command: argparse.ArgumentParser) -> None:
        command.add_argument(
            "-o", "--output",
            type=Path,
            help="Write the JSON document to this file instead of standard output.",
            metavar="PATH",
        )

    def _input(self, command: argparse.ArgumentParser, what: str) -> None:
        command.add_argument(
            "-i", "--input",
            type=Path,
            required=True,
            help=f"A JSON {what} document, or '-' to read standard input.",
            metavar="PATH",
        )

    def options(self) -> None:
        """Add the global options to the parser."""
        self.root.add_argument(
            "--version", action="version", version=f"immgate {__version__}"
        )
        self.root.add_argument(
            "-v", "--verbose",
            action="count",
            default=0,
            help="Print more diagnostics on standard error.  Repeat for debug output.",
        )
        self.root.add_argument(
            "-q", "--quiet",
            action="store_true",
            help="Print nothing on standard error except failures.",
        )
        self.root.add_argument(
            "--budget",
            type=int,
            help=(
                "The largest number of assignments the solver and the modular "
                "filter may examine.  Overrides the config file."
            ),
            metavar="N",
        )
        self.root.add_argument(
            "--workers",
            type=int,
            help="Threads used by the bounded search.  Does not change results.",
            metavar="N",
        )
        self.root.add_argument(
            "--config",
            type=Path,
            help="Read settings from this TOML file instead of ./immgate.toml.",
            metavar="PATH",
        )

    def classify(self) -> None:
        """Add the 'classify' command to the parser."""
        command = self.commands.add_parser(
            "classify",
            help=(
                "Report whether immersion or embedding of m-manifolds in R^n is "
                "always possible, decidable, undecidable or open."
            ),
        )
        command.add_argument("kind", choices=["immersion", "embedding"])
        command.add_argument("--m", type=int, required=True, help="Manifold dimension.")
        command.add_argument("--n", type=int, required=True, help="Target dimension.")
        command.add_argument(
            "--cat",
            choices=["smooth", "pl-flat", "pl"],
            default="smooth",
            help="The category of maps.  Defaults to smooth.",
        )
        command.add_argument(
            "--non-orientable",
            action="store_true",
            help="Classify for non-orientable manifolds.",
        )
        boundary = command.add_mutually_exclusive_group()
        boundary.add_argument(
            "--boundary", action="store_true", help="The manifolds have boundary."
        )
        boundary.add_argument(
            "--closed", action="store_true", help="The manifolds are closed."
        )
        self._output(command)

    def stabilize(self) -> None:
        """Add the 'stabilize' command to the parser."""
        command = self.commands.add_parser(
            "stabilize",
            help=(
                "Print k, m + k and n + k such that M^m immerses in R^n exactly when "
                "M x D^k embeds in R^(n+k)."
            ),
        )
        command.add_argument("--m", type=int, required=True)
        command.add_argument("--n", type=int, required=True)
        self._output(command)

    def reduce(self) -> None:
        """Add the 'reduce' command to the parser."""
        command = self.commands.add_parser(
            "reduce",
            help=(
                "Compile a quadratic system into a lifting problem over a wedge of "
                "c-spheres."
            ),
        )
        command.add_argument("problem", choices=["h10"])
        command.add_argument(
            "--c", type=int, required=True, help="The sphere dimension, even and >= 2."
        )
        self._input(command, "quad-system")
        self._output(command)

    def extract(self) -> None:
        """Add the 'extract' command to the parser."""
        command = self.commands.add_parser(
            "extract",
            help="Recover the quadratic system of a lifting instance.",
        )
        self._input(command, "lifting-instance")
        self._output(command)

    def solve(self) -> None:
        """Add the 'solve' command to the parser."""
        command = self.commands.add_parser(
            "solve",
            help=(
                "Search for an integer solution of a quadratic system with every "
                "|x_i| <= bound, optionally refuting it modulo small integers first."
            ),
        )
        self._input(command, "quad-system")
        command.add_argument("--bound", type=int, required=True, metavar="B")
        command.add_argument(
            "--mod-filter",
            type=int,
            help="Try every modulus 2..M before searching.",
            metavar="M",
        )
        self._output(command)

    def obstruct(self) -> None:
        """Add the 'obstruct' command to the parser."""
        command = self.commands.add_parser(
            "obstruct",
            help="Test Pontryagin classes for a rational obstruction.",
        )
        command.add_argument("test", choices=["immersion", "closed-embedding"])
        self._input(command, "manifold-class-data")
        command.add_argument("--n", type=int, required=True, help="Target dimension.")
        self._output(command)

    def euler_square(self) -> None:
        """Add the 'euler-square' command to the parser."""
        command = self.commands.add_parser(
            "euler-square",
            help="Print the equations e^2 = p_{c/2} for an Euler class in H^(n-m).",
        )
        self._input(command, "manifold-class-data")
        command.add_argument("--n", type=int, required=True, help="Target dimension.")
        self._output(command)

    def homotopy(self) -> None:
        """Add the 'pi-gn', 'pi-sphere' and 'stable-stem' commands to the parser."""
        command = self.commands.add_parser(
            "pi-gn",
            help="Compute pi_k(G_n) for the monoid of self-equivalences of S^(n-1).",
        )
        command.add_argument("--n", type=int, required=True)
        command.add_argument("--k", type=int, required=True)
        self._output(command)

        command = self.commands.add_parser(
            "pi-sphere", help="Look up pi_k(S^n) in the bundled tables."
        )
        command.add_argument("--n", type=int, required=True)
        command.add_argument("--k", type=int, required=True)
        self._output(command)

        command = self.commands.add_parser(
            "stable-stem", help="Look up the stable stem pi_k^s."
        )
        command.add_argument("--k", type=int, required=True)
        self._output(command)

    def spheres(self) -> None:
        """Add the 'theta', 'bp' and 'p-group' commands to the parser."""
        command = self.commands.add_parser(
            "theta",
            help="Assemble the group of homotopy k-spheres from its exact sequence.",
        )
        command.add_argument("--k", type=int, required=True)
        self._output(command)

        command = self.commands.add_parser(
            "bp", help="The order of bP_(k+1)."
        )
        command.add_argument("--k1", type=int, required=True, metavar="K1")
        command.add_argument(
            "--paper-divisor",
            "--divisor",
            dest="divisor",
            choices=["half", "quarter"],
            help=(
                "Also evaluate the closed divisor expression with r = (k+1)/2 or "
                "r = (k+1)/4, for comparison."
            ),
        )
        self._output(command)

        command = self.commands.add_parser(
            "p-group", help="The surgery obstruction group P_k."
        )
        command.add_argument("--k", type=int, required=True)
        self._output(command)

    def algebra(self) -> None:
        """Add the 'bernoulli', 'signature' and 'arf' commands to the parser."""
        command = self.commands.add_parser(
            "bernoulli", help="The Bernoulli number B_r in the topologist's convention."
        )
        command.add_argument("--r", type=int, required=True)
        self._output(command)

        command = self.commands.add_parser(
            "signature", help="The signature of a symmetric integer form."
        )
        self._input(command, "int-form")
        self._output(command)

        command = self.commands.add_parser(
            "arf", help="The Arf invariant of a quadratic refinement."
        )
        self._input(command, "quadratic-refinement")
        self._output(command)

    def sweep(self) -> None:
        """Add the 'sweep' command to the parser."""
        command = self.commands.add_parser(
            "sweep",
            help="Classify every (m, n) pair for a range of target dimensions.",
        )
        command.add_argument(
            "--kind", choices=["immersion", "embedding"], default="immersion"
        )
        command.add_argument(
            "--cat", choices=["smooth", "pl-flat", "pl"], default="smooth"
        )
        command.add_argument("--n-min", type=int, default=4, metavar="A")
        command.add_argument("--n-max", type=int, default=60, metavar="B")
        boundary = command.add_mutually_exclusive_group()
        boundary.add_argument("--boundary", action="store_true")
        boundary.add_argument("--closed", action="store_true")
        form = command.add_mutually_exclusive_group()
        form.add_argument(
            "--csv", action="store_true", help="Write CSV records instead of JSON."
        )
        form.add_argument(
            "--chart", action="store_true", help="Write an m x n status grid as CSV."
        )
        self._output(command)

    def config(self) -> None:
        """Add the 'config' command to the parser."""
        command = self.commands.add_parser(
            "config", help="Print the effective settings as an immgate.toml file."
        )
        self._output(command)

    def __call__(self, argv: Sequence[str] | None = None) -> argparse.Namespace:
        """Run the command-line parser.

        Parameters
        ----------
        argv : Sequence[str] | None, default None
            The arguments to parse.  Defaults to ``sys.argv[1:]``.

        Returns
        -------
        argparse.Namespace
            The parsed command-line arguments.
        """
        # queries
        self.options()

        # commands
        self.classify()
        self.stabilize()
        self.reduce()
        self.extract()
        self.solve()
        self.obstruct()
        self.euler_square()
        self.homotopy()
        self.spheres()
        self.algebra()
        self.sweep()
        self.config()

        return self.root.parse_args(argv)


###################
####    I/O    ####
###################


def _read(path: Path, name: str) -> dict[str, Any]:
    text = sys.stdin.read() if str(path) == "-" else path.read_text(encoding="utf-8")
    return loads(text, name)


def _write(args: argparse.Namespace, text: str) -> None:
    if args.output is None:
        sys.stdout.write(text)
    else:
        args.output.write_text(text, encoding="utf-8")
        INFO(f"wrote {args.output}")


def _emit(args: argparse.Namespace, name: str, payload: dict[str, Any]) -> None:
    _write(args, dumps(name, payload))


def _settings(args: argparse.Namespace) -> Settings:
    settings = load_settings(args.config)
    verbosity = 0 if args.quiet else settings.verbosity + args.verbose
    settings = settings.replace(
        budget=args.budget, workers=args.workers, verbosity=verbosity
    )
    set_verbosity(settings.verbosity)
    use_table(settings.table_path)
    return settings


########################
####    COMMANDS    ####
########################


def _classify(args: argparse.Namespace, settings: Settings) -> int:
    kind = Kind.IMMERSION if args.kind == "immersion" else Kind.EMBEDDING
    spec = ProblemSpec(
        args.m,
        args.n,
        kind,
        Category.from_flag(args.cat),
        orientable=not args.non_orientable,
        with_boundary=args.boundary,
        closed=args.closed,
    )
    if kind is Kind.IMMERSION:
        verdict = classify_immersion(spec)
    else:
        verdict = classify_embedding(spec)
    payload = verdict.to_json()
    payload.update(m=spec.m, n=spec.n, kind=kind.value, category=spec.category.value)
    _emit(args, "range-verdict", payload)
    if verdict.status in (Status.OPEN, Status.OUT_OF_SCOPE):
        return UNKNOWN
    return SOLVED


def _stabilize(args: argparse.Namespace, settings: Settings) -> int:
    _emit(args, "stabilization", embedding_stabilization(args.m, args.n).to_json())
    return SOLVED


def _reduce(args: argparse.Namespace, settings: Settings) -> int:
    system = QuadSystem.from_json(_read(args.input, "quad-system"))
    _emit(args, "lifting-instance", compile_to_lifting(system, args.c).to_json())
    return SOLVED


def _extract(args: argparse.Namespace, settings: Settings) -> int:
    instance = LiftingInstance.from_json(_read(args.input, "lifting-instance"))
    _emit(args, "quad-system", extract_quadratic(instance).to_json())
    return SOLVED


def _solve(args: argparse.Namespace, settings: Settings) -> int:
    system = validate(QuadSystem.from_json(_read(args.input, "quad-system")))
    outcome = decide(
        system,
        args.bound,
        mod_filter=args.mod_filter,
        budget=settings.budget,
        workers=settings.workers,
        modulus_cap=settings.modulus_cap,
    )
    _emit(args, "solve-outcome", outcome.to_json())
    if isinstance(outcome, Solution):
        return SOLVED
    if isinstance(outcome, (NoSolutionWithinBound, UnsatisfiableProof)):
        return NEGATIVE
    return UNKNOWN


def _obstruct(args: argparse.Namespace, settings: Settings) -> int:
    data = ManifoldClassData.from_json(_read(args.input, "manifold-class-data"))
    if args.test == "immersion":
        report = pontryagin_obstruction(data, args.n)
    else:
        report = closed_embedding_obstruction(data, args.n)
    _emit(args, "obstruction-report", report.to_json())
    return NEGATIVE if report.verdict is Verdict.OBSTRUCTED else SOLVED


def _euler_square(args: argparse.Namespace, settings: Settings) -> int:
    data = ManifoldClassData.from_json(_read(args.input, "manifold-class-data"))
    _emit(args, "quad-system", euler_square_problem(data, args.n).to_json())
    return SOLVED


def _pi_gn(args: argparse.Namespace, settings: Settings) -> int:
    result = pi_gn(args.n, args.k)
    _emit(args, "gn-group", result.to_json())
    return SOLVED if result.state is State.RESOLVED else UNKNOWN


def _pi_sphere(args: argparse.Namespace, settings: Settings) -> int:
    entry = default_table().entry(args.n, args.k)
    payload = entry.group.to_json()
    payload.update(n=args.n, k=args.k, generators=list(entry.generator_labels))
    _emit(args, "abelian-group", payload)
    return SOLVED


def _stable_stem(args: argparse.Namespace, settings: Settings) -> int:
    payload = default_table().stable_stem(args.k).to_json()
    payload.update(k=args.k, image_j=default_table().im_j_order(args.k))
    _emit(args, "abelian-group", payload)
    return SOLVED


def _theta(args: argparse.Namespace, settings: Settings) -> int:
    _emit(args, "theta-assembly", theta_assembly(args.k).to_json())
    return SOLVED


def _bp(args: argparse.Namespace, settings: Settings) -> int:
    payload: dict[str, Any] = {"k1": args.k1, "order": bp_order(args.k1)}
    if args.divisor is not None:
        payload["divisor"] = {
            "convention": args.divisor,
            "value": bp_divisor_expression(args.k1, args.divisor),
        }
    _emit(args, "bp-order", payload)
    return SOLVED


def _p_group(args: argparse.Namespace, settings: Settings) -> int:
    payload = p_group(args.k).to_json()
    payload["k"] = args.k
    _emit(args, "abelian-group", payload)
    return SOLVED


def _bernoulli(args: argparse.Namespace, settings: Settings) -> int:
    value = bernoulli(args.r)
    _emit(
        args,
        "bernoulli",
        {
            "r": args.r,
            "numerator": value.numerator,
            "denominator": value.denominator,
            "value": str(value),
        },
    )
    return SOLVED


def _signature(args: argparse.Namespace, settings: Settings) -> int:
    doc = _read(args.input, "int-form")
    try:
        form = IntMatrix.from_rows(doc["matrix"])
    except (KeyError, TypeError) as err:
        raise SchemaError(f"malformed int-form: {err}") from err
    _emit(
        args,
        "signature",
        {
            "rank": form.rows,
            "determinant": form.determinant(),
            "signature": signature(form),
        },
    )
    return SOLVED


def _arf(args: argparse.Namespace, settings: Settings) -> int:
    doc = _read(args.input, "quadratic-refinement")
    try:
        q = QuadraticRefinement(int(doc["genus"]), tuple(int(v) for v in doc["values"]))
    except (KeyError, TypeError) as err:
        raise SchemaError(f"malformed quadratic refinement: {err}") from err
    _emit(args, "arf", {"genus": q.genus, "arf": arf_invariant(q)})
    return SOLVED


def _sweep(args: argparse.Namespace, settings: Settings) -> int:
    frame = sweep(
        args.n_min,
        args.n_max,
        Kind.IMMERSION if args.kind == "immersion" else Kind.EMBEDDING,
        Category.from_flag(args.cat),
        with_boundary=args.boundary,
        closed=args.closed,
    )
    if args.chart:
        _write(args, chart(frame).to_csv())
    elif args.csv:
        _write(args, frame.to_csv(index=False))
    else:
        _emit(
            args,
            "sweep",
            {
                "kind": args.kind,
                "category": args.cat,
                "records": frame.to_dict(orient="records"),
            },
        )
    return SOLVED


def _config(args: argparse.Namespace, settings: Settings) -> int:
    _write(args, settings.to_toml())
    return SOLVED


COMMANDS: dict[str, Callable[[argparse.Namespace, Settings], int]] = {
    "classify": _classify,
    "stabilize": _stabilize,
    "reduce": _reduce,
    "extract": _extract,
    "solve": _solve,
    "obstruct": _obstruct,
    "euler-square": _euler_square,
    "pi-gn": _pi_gn,
    "pi-sphere": _pi_sphere,
    "stable-stem": _stable_stem,
    "theta": _theta,
    "bp": _bp,
    "p-group": _p_group,
    "bernoulli": _bernoulli,
    "signature": _signature,
    "arf": _arf,
    "sweep": _sweep,
    "config": _config,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Run the immgate command-line interface.

    Parameters
    ----------
    argv : Sequence[str] | None, default None
        Command-line arguments, defaulting to ``sys.argv[1:]``.

    Returns
    -------
    int
        The exit status.
    """
    parser = Parser()
    args = parser(argv)
    if args.command is None:
        parser.root.print_help()
        return ERROR

    try:
        settings = _settings(args)
        return COMMANDS[args.command](args, settings)
    except (OutOfTable, MissingCompositionData, BudgetExceeded, NotApplicable) as err:
        _emit(args, "error", {"error": type(err).__name__, "message": str(err)})
        return UNKNOWN
    except (ImmgateError, ValueError, OSError) as err:
        FAIL(f"{type(err).__name__}: {err}")


if __name__ == "__main__":
    sys.exit(main())
