"""
Command line interface for channelkit.
"""

import argparse
import os
import sys
from typing import Any, Dict, List, Mapping, Optional, Sequence

from .core.config import ChannelKitConfig
from .core.engine import ChannelKit, Report
from .core.errors import ChannelKitError, UsageError
from .data.workspace import WorkspaceWriter, load_workspace


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with status 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"❌ Error: {message}", file=sys.stderr)
        sys.exit(UsageError.exit_code)


def _caps_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--max-types", type=int, help="Entailment cap on language size (default: 16)")
    parent.add_argument("--max-closure-types", type=int,
                        help="Closure / intent / inverse image cap on language size (default: 8)")
    parent.add_argument("--max-product", type=int, help="Cap on instance tuples in limits (default: 10000)")
    parent.add_argument("--max-iso-nodes", type=int, help="Cap on isomorphism search steps (default: 1000000)")
    parent.add_argument("--format", dest="output_format", choices=["human", "machine"],
                        help="Report format (default: human)")
    parent.add_argument("--out", help="Write derived objects (or the dumped workspace) to this file")
    parent.add_argument("--config", help="Path to configuration JSON file")
    parent.add_argument("--verbose", "-v", action="store_true", default=None, help="Enable verbose output")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="channelkit",
        description="channelkit - information flow over classifications, theories and channels",
    )
    parent = _caps_parent()
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text, parents=[parent])
        sub.add_argument("workspace", help="Path to the workspace JSON document")
        return sub

    command("validate", "Load and validate a workspace")

    sub = command("entail", "Decide whether a theory entails a sequent")
    sub.add_argument("theory")
    sub.add_argument("sequent", help='Sequent literal such as "a b |- c"')

    sub = command("closure", "List every sequent a theory entails")
    sub.add_argument("theory")

    sub = command("colimit", "Colimit of node theories along a system's type maps")
    sub.add_argument("system")
    sub.add_argument("assignments", nargs="*", metavar="NODE=THEORY")

    sub = command("mincover", "Minimal cover of a distributed system")
    sub.add_argument("system")

    sub = command("fuse", "Fuse component logics over a channel's core")
    sub.add_argument("channel")
    sub.add_argument("logics", nargs="*", metavar="[NODE=]LOGIC")
    sub.add_argument("--probe", action="append", default=[], metavar="SEQUENT",
                     help="Check whether the fused theory entails this sequent (repeatable)")

    sub = command("flow", "Does a sequent at one node carry information about another?")
    sub.add_argument("channel")
    sub.add_argument("source_node")
    sub.add_argument("source_sequent")
    sub.add_argument("target_node")
    sub.add_argument("target_sequent")

    sub = command("audit", "Soundness and completeness of a logic")
    sub.add_argument("logic")

    sub = command("laws", "Check the environment laws on the workspace's entities")
    sub.add_argument("--exhaustive", action="store_true",
                     help="Use every sequent of each language instead of the workspace's own")

    command("dump", "Write the workspace back in canonical form")
    return parser


def resolve_config(args: argparse.Namespace, environ: Optional[Mapping[str, str]] = None) -> ChannelKitConfig:
    """Defaults, then --config file, then CHANNELKIT_* variables, then flags."""
    config = ChannelKitConfig()
    if args.config:
        config = ChannelKitConfig.from_json(args.config, base=config)
    config = ChannelKitConfig.from_env(environ, base=config)
    flags: Dict[str, Any] = {
        "max_types": args.max_types,
        "max_closure_types": args.max_closure_types,
        "max_product": args.max_product,
        "max_iso_nodes": args.max_iso_nodes,
        "output_format": args.output_format,
        "out": args.out,
        "enable_logging": args.verbose,
    }
    return config.merged(flags)


def _assignments(pairs: Sequence[str]) -> Dict[str, str]:
    out: Dict[str, str] = {}
    for pair in pairs:
        node, sep, theory = pair.partition("=")
        if not sep or not node or not theory:
            raise UsageError(f"expected NODE=THEORY, got {pair!r}")
        if node in out:
            raise UsageError(f"node {node!r} is assigned twice", node=node)
        out[node] = theory
    return out


def _echo(args: argparse.Namespace) -> List[str]:
    """Command echo for failures that happen before a command runs."""
    skip = {"command", "workspace", "max_types", "max_closure_types", "max_product", "max_iso_nodes",
            "output_format", "out", "config", "verbose"}
    echo = [args.command]
    for key, value in vars(args).items():
        if key in skip or value is None or value is False:
            continue
        if isinstance(value, list):
            echo.extend(str(v) for v in value)
        elif value is True:
            echo.append(f"--{key}")
        else:
            echo.append(str(value))
    return echo


def run(args: argparse.Namespace, config: ChannelKitConfig) -> Optional[Report]:
    """Execute one parsed command; returns None for dump, which prints a document."""
    workspace = load_workspace(args.workspace)
    kit = ChannelKit(workspace, config)
    if config.enable_logging:
        print(f"📂 Loaded {args.workspace}: {workspace.counts()}", file=sys.stderr)
        print(f"⚙️ Configuration: {config.caps()}", file=sys.stderr)

    if args.command == "validate":
        return kit.cmd_validate()
    if args.command == "entail":
        return kit.cmd_entail(args.theory, args.sequent)
    if args.command == "closure":
        return kit.cmd_closure(args.theory)
    if args.command == "colimit":
        return kit.cmd_colimit(args.system, _assignments(args.assignments))
    if args.command == "mincover":
        return kit.cmd_mincover(args.system)
    if args.command == "fuse":
        return kit.cmd_fuse(args.channel, args.logics, args.probe)
    if args.command == "flow":
        return kit.cmd_flow(args.channel, args.source_node, args.source_sequent,
                            args.target_node, args.target_sequent)
    if args.command == "audit":
        return kit.cmd_audit(args.logic)
    if args.command == "laws":
        return kit.cmd_laws(args.exhaustive)
    if args.command == "dump":
        writer = WorkspaceWriter(workspace)
        if config.out:
            writer.to_file(config.out)
            print(f"✅ Workspace saved to '{config.out}'", file=sys.stderr)
        else:
            sys.stdout.write(writer.to_text())
        return None
    raise UsageError(f"unknown command {args.command!r}")


def main(argv: Optional[Sequence[str]] = None, environ: Optional[Mapping[str, str]] = None) -> int:
    """Main CLI function; returns the process exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    environ = os.environ if environ is None else environ

    try:
        config = resolve_config(args, environ)
    except ChannelKitError as e:
        print(f"❌ Error: {e.message}", file=sys.stderr)
        return e.exit_code

    try:
        report = run(args, config)
    except ChannelKitError as e:
        failed = Report.failed(_echo(args), e, config.caps())
        if config.output_format == "machine":
            print(failed.render("machine"))
        else:
            print(f"❌ Error: {e.message}", file=sys.stderr)
            print(failed.render("human"), file=sys.stderr)
        return e.exit_code

    if report is not None:
        print(report.render(config.output_format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
