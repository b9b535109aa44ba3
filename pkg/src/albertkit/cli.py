"""Command-line client for the verification pipelines.

The CLI is a thin layer: it assembles a run configuration from a config
file and flag overrides, executes it either in-process or against a
running HTTP service (--server), prints the JSON report, and exits with
0 on PASS, 1 on FAIL, and 2 on configuration or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import WorkbenchError
from .pipelines import run_command
from .reports import passed, render_report

SERVER_PATHS = {
    "verify-axioms": "/axioms",
    "lemma-trans": "/lemmas/trans",
    "lemma-springer": "/lemmas/springer",
    "lemma-discr": "/lemmas/discr",
    "isotopy": "/isotopy",
}


def _add_run_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="path to a JSON run configuration")
    parser.add_argument("--field", help='ground field: "Q" or "Fp:<p>"')
    parser.add_argument("--trials", type=int, help="trial count override")
    parser.add_argument("--seed", type=int, help="64-bit seed override")
    parser.add_argument("--out", help="write the JSON report to this path")
    parser.add_argument(
        "--server", help="POST the run to a service at this base URL instead"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="albertkit",
        description="Exact verification workbench for cubic Jordan algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-axioms", help="run the full axiom suite")
    _add_run_flags(p)
    p.add_argument(
        "--mutate-seed",
        type=int,
        help="corrupt one sharp structure constant first (fault injection)",
    )

    p = sub.add_parser("lemma", help="run a named verification scenario")
    p.add_argument("which", choices=["trans", "springer", "discr"])
    _add_run_flags(p)

    p = sub.add_parser("isotopy", help="isotope axioms and autotopy checks")
    _add_run_flags(p)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


def load_config(args: argparse.Namespace) -> dict:
    config: dict = {}
    if getattr(args, "config", None):
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                config = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise WorkbenchError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(config, dict):
            raise WorkbenchError("config file must hold a JSON object")
    if getattr(args, "field", None):
        config["field"] = args.field
    if getattr(args, "trials", None) is not None:
        config["trials"] = args.trials
    if getattr(args, "seed", None) is not None:
        config["seed"] = args.seed
    if getattr(args, "mutate_seed", None) is not None:
        config["mutate"] = {"seed": args.mutate_seed}
    return config


def _run_remote(server: str, command: str, config: dict) -> dict:
    import httpx

    url = server.rstrip("/") + SERVER_PATHS[command]
    response = httpx.post(url, json=config, timeout=600.0)
    if response.status_code == 400:
        raise WorkbenchError(response.json().get("detail", "bad configuration"))
    response.raise_for_status()
    return response.json()


def _emit(report: dict, out_path: str | None) -> None:
    text = render_report(report)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    command = args.command if args.command != "lemma" else f"lemma-{args.which}"
    try:
        config = load_config(args)
        if args.server:
            report = _run_remote(args.server, command, config)
        else:
            report = run_command(command, config)
    except WorkbenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.out)
    return 0 if passed(report) else 1


if __name__ == "__main__":
    sys.exit(main())
