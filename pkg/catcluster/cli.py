"""Command-line driver: every subcommand is a sweep from :mod:`catcluster.catcluster_sweep_factory`."""

import argparse
import logging
import sys
from typing import Any, Dict, Optional, Sequence

from pydantic import ValidationError

from catcluster import exceptions
from catcluster.catcluster_graph_factory import AVAILABLE_GRAPHS
from catcluster.catcluster_model_factory import AVAILABLE_MODELS
from catcluster.catcluster_sweep_factory import AVAILABLE_SWEEPS, CatClusterSweep
from catcluster.sweeps.config import STATE_KINDS
from catcluster.teleport.teleporter import FRAMES, INPUTS, SLICES

CATCLUSTER_ERRORS = tuple(
    value for value in vars(exceptions).values() if isinstance(value, type) and issubclass(value, Exception)
)

# argparse dest -> SweepConfig field
_CONFIG_FIELDS = {
    "alpha_min": "alpha_min",
    "alpha_max": "alpha_max",
    "steps": "steps",
    "alpha": "alpha",
    "graph": "graph",
    "pattern": "pattern",
    "out": "out_path",
    "cutoff": "cutoff",
    "model": "model",
    "penalty": "penalty",
    "input": "input",
    "slice": "slice",
    "frame": "frame",
    "kind": "kind",
    "relative": "relative",
    "long": "long",
    "threads": "threads",
    "quiet": "quiet",
}


def _global_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--threads", type=int, default=1, help="Worker threads for sweep points")
    parent.add_argument(
        "--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="Logging level"
    )
    parent.add_argument("--quiet", action="store_true", help="Disable progress bars")
    parent.add_argument("--out", required=True, help="Output file (output directory for tradeoff)")
    return parent


def _add_sweep_range(parser: argparse.ArgumentParser):
    parser.add_argument("--alpha-min", type=float, default=None, help="Smallest amplitude")
    parser.add_argument("--alpha-max", type=float, default=None, help="Largest amplitude")
    parser.add_argument("--steps", type=int, default=None, help="Number of amplitudes, endpoints included")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catcluster", description="Cat-state cluster construction and teleported-gate simulations."
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")
    parent = _global_flags()

    def command(name: str) -> argparse.ArgumentParser:
        summary = AVAILABLE_SWEEPS[name]
        return commands.add_parser(name, parents=[parent], help=summary, description=summary)

    fidelity = command("fidelity")
    _add_sweep_range(fidelity)
    fidelity.add_argument("--graph", choices=list(AVAILABLE_GRAPHS), default=None, help="Preset graph")
    fidelity.add_argument("--long", action="store_true", help="Write alpha, graph, quantity, value, er rows")

    visibility = command("visibility")
    _add_sweep_range(visibility)
    visibility.add_argument("--graph", choices=list(AVAILABLE_GRAPHS), default=None, help="Preset graph")
    visibility.add_argument("--pattern", required=True, help="Operator pattern such as XZ, ZXZ or ZZXZZ")
    visibility.add_argument("--relative", action="store_true", help="Invert V / V_ideal instead of V")
    visibility.add_argument("--long", action="store_true", help="Write alpha, graph, quantity, value, er rows")

    teleport = command("teleport")
    teleport.add_argument("--alpha", type=float, required=True, help="Logical amplitude")
    teleport.add_argument("--cutoff", type=int, default=None, help="Photon cutoff per detector")
    teleport.add_argument("--input", choices=list(INPUTS), default=None, help="Teleporter input state")
    teleport.add_argument("--slice", choices=list(SLICES), default=None, help="Write one pattern slice only")
    teleport.add_argument("--frame", choices=list(FRAMES), default=None, help="Correction frame for each record")

    tradeoff = command("tradeoff")
    _add_sweep_range(tradeoff)
    tradeoff.add_argument("--cutoff", type=int, default=None, help="Photon cutoff per detector")
    tradeoff.add_argument("--model", choices=list(AVAILABLE_MODELS), default=None, help="Threshold model")
    tradeoff.add_argument(
        "--no-penalty", dest="penalty", action="store_false", default=None, help="Quote the logical amplitude"
    )
    tradeoff.add_argument("--input", choices=list(INPUTS), default=None, help="Teleporter input state")

    dump = command("dump-state")
    dump.add_argument("--alpha", type=float, required=True, help="Logical amplitude")
    dump.add_argument("--kind", choices=list(STATE_KINDS), default=None, help="State to write")
    dump.add_argument("--graph", choices=list(AVAILABLE_GRAPHS), default=None, help="Preset graph for clusters")
    return parser


def config_from_args(args: argparse.Namespace) -> Dict[str, Any]:
    """SweepConfig fields for the flags that were given; unset flags fall back to the SweepConfig defaults."""
    values = vars(args)
    return {field: values[dest] for dest, field in _CONFIG_FIELDS.items() if values.get(dest) is not None}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level), format="%(levelname)s %(name)s: %(message)s")
    logging.debug(f"catcluster {args.command}: {args}")
    try:
        written = CatClusterSweep(args.command, config_from_args(args)).create_sweep().run()
    except ValidationError as exc:
        error = exc.errors()[0]
        field = ".".join(str(part) for part in error.get("loc", ())) or "config"
        print(f"catcluster {args.command}: invalid {field}: {error['msg']}", file=sys.stderr)
        return 2
    except CATCLUSTER_ERRORS as exc:
        message = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"catcluster {args.command}: {type(exc).__name__}: {message}", file=sys.stderr)
        return 2
    for path in written:
        logging.info(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
