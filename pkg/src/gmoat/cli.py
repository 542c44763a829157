"""Command line front end.

One binary, six subcommands::

    gmoat sieve   --norm-max N [--include-axes] [--format csv] [--out FILE]
    gmoat walk    --norm-max N [--cramer-c C] [--format json] [--out FILE]
    gmoat moat    (--norm-max N --step-sq K | --paths FILE)
                  [--reflect-octant | --no-reflect-octant] [--out FILE]
    gmoat density --norm-max N --bands B [--out FILE]
    gmoat bench   --norm-max N [--methods a,b,c] [--cramer-c C] [--out FILE]
    gmoat plot    INPUT [--norm-max N] [--out FILE]

Exit codes are a stable contract: 0 success, 1 usage error, 2 I/O error,
3 malformed input file.  Without --out, reports go to stdout.  An optional
``--config FILE`` reads ``key = value`` lines named after the flags; values
given on the command line win.  Output files are written atomically (temp
file in the target directory, then rename).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path as FsPath

from . import bench, density, moat, sieve, svgplot, walker

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_MALFORMED = 3

_FORMAT_BY_COMMAND = {
    "sieve": "csv",
    "walk": "json",
    "moat": "json",
    "density": "csv",
    "bench": "csv",
    "plot": "svg",
}


class UsageError(Exception):
    pass


class MalformedInput(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


@dataclass
class RunConfig:
    """Merged command-line / config-file options for one invocation."""

    command: str
    norm_max: int | None = None
    cramer_c: Fraction = Fraction(1)
    include_axes: bool = False
    reflect_octant: bool = True
    output_path: str | None = None
    format: str = "csv"
    step_sq: int | None = None
    paths: str | None = None
    bands: int = 2
    methods: tuple[str, ...] = bench.METHODS
    plot_input: str | None = None


def _build_parser() -> _Parser:
    parser = _Parser(prog="gmoat", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", metavar="command")

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--config", help="file of 'key = value' lines mirroring the flags")
        p.add_argument("--out", dest="out", help="output file (default: stdout)")
        p.add_argument("--format", choices=("csv", "json", "svg"), help="output format")
        return p

    p = add("sieve", "enumerate first-octant Gaussian primes as CSV")
    p.add_argument("--norm-max", type=int)
    p.add_argument("--include-axes", action=argparse.BooleanOptionalAction)

    p = add("walk", "partition the primes into paths, as JSON")
    p.add_argument("--norm-max", type=int)
    p.add_argument("--cramer-c", type=_fraction)
    p.add_argument("--include-axes", action=argparse.BooleanOptionalAction)

    p = add("moat", "measure the separation at a step bound, as JSON")
    p.add_argument("--norm-max", type=int)
    p.add_argument("--step-sq", type=int)
    p.add_argument("--paths", help="walk JSON export to analyse instead of --step-sq")
    p.add_argument("--include-axes", action=argparse.BooleanOptionalAction)
    p.add_argument("--reflect-octant", action=argparse.BooleanOptionalAction)

    p = add("density", "annulus density profile, as CSV")
    p.add_argument("--norm-max", type=int)
    p.add_argument("--bands", type=int)

    p = add("bench", "candidate-check counters for the search methods, as CSV")
    p.add_argument("--norm-max", type=int)
    p.add_argument("--cramer-c", type=_fraction)
    p.add_argument("--methods", help="comma list from: " + ",".join(bench.METHODS))

    p = add("plot", "render a sieve/walk/moat report as SVG")
    p.add_argument("input", nargs="?", help="report file to render")
    p.add_argument("--norm-max", type=int)

    return parser


def _load_config_file(path: str) -> dict[str, str]:
    try:
        text = FsPath(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from None
    out: dict[str, str] = {}
    for i, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"config line {i}: expected 'key = value', got {raw!r}")
        out[key.strip()] = value.strip()
    return out


_CONFIG_PARSERS = {
    "norm-max": int,
    "step-sq": int,
    "bands": int,
    "cramer-c": Fraction,
    "include-axes": None,
    "reflect-octant": None,
    "out": str,
    "format": str,
    "paths": str,
    "methods": str,
    "input": str,
}


def _parse_config_value(key: str, raw: str):
    kind = _CONFIG_PARSERS[key]
    if kind is None:
        lowered = raw.lower()
        if lowered in ("true", "1", "yes", "on"):
            return True
        if lowered in ("false", "0", "no", "off"):
            return False
        raise UsageError(f"config key {key}: expected a boolean, got {raw!r}")
    try:
        value = kind(raw)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"config key {key}: bad value {raw!r}") from None
    return value


def _merge(args: argparse.Namespace) -> RunConfig:
    cfg_file: dict[str, str] = {}
    if getattr(args, "config", None):
        cfg_file = _load_config_file(args.config)
        unknown = set(cfg_file) - set(_CONFIG_PARSERS)
        if unknown:
            raise UsageError(f"config file has unknown keys: {', '.join(sorted(unknown))}")

    def pick(dest: str, key: str, default):
        value = getattr(args, dest, None)
        if value is None and key in cfg_file:
            value = _parse_config_value(key, cfg_file[key])
        return default if value is None else value

    methods_raw = pick("methods", "methods", ",".join(bench.METHODS))
    if isinstance(methods_raw, str):
        methods = tuple(m.strip() for m in methods_raw.split(",") if m.strip())
    else:
        methods = tuple(methods_raw)
    return RunConfig(
        command=args.command,
        norm_max=pick("norm_max", "norm-max", None),
        cramer_c=pick("cramer_c", "cramer-c", Fraction(1)),
        include_axes=pick("include_axes", "include-axes", False),
        reflect_octant=pick("reflect_octant", "reflect-octant", True),
        output_path=pick("out", "out", None),
        format=pick("format", "format", _FORMAT_BY_COMMAND[args.command]),
        step_sq=pick("step_sq", "step-sq", None),
        paths=pick("paths", "paths", None),
        bands=pick("bands", "bands", 2),
        methods=methods,
        plot_input=pick("input", "input", None),
    )


def _require_norm_max(cfg: RunConfig) -> int:
    if cfg.norm_max is None:
        raise UsageError("--norm-max is required")
    if cfg.norm_max < 2:
        raise UsageError("norm-max must be >= 2")
    return cfg.norm_max


def _require_format(cfg: RunConfig) -> None:
    expected = _FORMAT_BY_COMMAND[cfg.command]
    if cfg.format != expected:
        raise UsageError(f"{cfg.command} emits {expected} only, not {cfg.format}")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    target = FsPath(out)
    directory = target.parent if str(target.parent) else FsPath(".")
    fd, tmp = tempfile.mkstemp(dir=str(directory), prefix=target.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except OSError:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _read_input(path: str) -> str:
    return FsPath(path).read_text()


def cmd_sieve(cfg: RunConfig) -> int:
    _require_format(cfg)
    prime_set = sieve.sieve_octant(_require_norm_max(cfg), cfg.include_axes)
    _emit(sieve.format_csv(prime_set), cfg.output_path)
    return EXIT_OK


def cmd_walk(cfg: RunConfig) -> int:
    _require_format(cfg)
    if cfg.include_axes:
        raise UsageError("walk requires an interior set; drop --include-axes")
    prime_set = sieve.sieve_octant(_require_norm_max(cfg), include_axes=False)
    paths = walker.walk_all(prime_set, cfg.cramer_c)
    _emit(walker.paths_to_json(paths), cfg.output_path)
    return EXIT_OK


def cmd_moat(cfg: RunConfig) -> int:
    _require_format(cfg)
    if (cfg.step_sq is None) == (cfg.paths is None):
        raise UsageError("moat needs exactly one of --step-sq or --paths")
    if cfg.step_sq is not None:
        if cfg.step_sq < 1:
            raise UsageError("step-sq must be >= 1")
        prime_set = sieve.sieve_octant(_require_norm_max(cfg), cfg.include_axes)
        report = moat.moat_report(
            prime_set, cfg.step_sq, norm_max=prime_set.norm_max,
            reflect_octant=cfg.reflect_octant,
        )
    else:
        try:
            text = _read_input(cfg.paths)
        except OSError as exc:
            raise  # mapped to EXIT_IO by main
        try:
            records = walker.parse_paths_json(text)
        except ValueError as exc:
            raise MalformedInput(f"{cfg.paths}: {exc}") from None
        report = moat.moat_report_from_paths(records, reflect_octant=cfg.reflect_octant)
    _emit(moat.report_to_json(report), cfg.output_path)
    return EXIT_OK


def cmd_density(cfg: RunConfig) -> int:
    _require_format(cfg)
    if cfg.bands < 1:
        raise UsageError("bands must be >= 1")
    prime_set = sieve.sieve_octant(_require_norm_max(cfg), cfg.include_axes)
    profile = density.annulus_density_profile(prime_set, cfg.bands)
    _emit(density.profile_to_csv(profile), cfg.output_path)
    return EXIT_OK


def cmd_bench(cfg: RunConfig) -> int:
    _require_format(cfg)
    unknown = [m for m in cfg.methods if m not in bench.METHODS]
    if unknown or not cfg.methods:
        raise UsageError(f"methods must come from {','.join(bench.METHODS)}")
    norm_max = _require_norm_max(cfg)
    results = [bench.run_bench(m, norm_max, cfg.cramer_c) for m in cfg.methods]
    _emit(bench.results_to_csv(results), cfg.output_path)
    return EXIT_OK


def cmd_plot(cfg: RunConfig) -> int:
    _require_format(cfg)
    if cfg.plot_input is None:
        raise UsageError("plot needs an input report file")
    text = _read_input(cfg.plot_input)
    first_line = text.split("\n", 1)[0]
    try:
        if first_line == sieve.CSV_HEADER:
            points = sieve.parse_csv(text)
            svg = svgplot.render_points(points, cfg.norm_max)
        else:
            try:
                data = json.loads(text)
            except json.JSONDecodeError as exc:
                raise ValueError(f"neither sieve CSV nor JSON: {exc}") from None
            if isinstance(data, list):
                svg = svgplot.render_walk(walker.parse_paths_json(text), cfg.norm_max)
            elif isinstance(data, dict):
                svg = svgplot.render_moat(moat.parse_moat_json(text), cfg.norm_max)
            else:
                raise ValueError("top level: expected a walk array or moat object")
    except ValueError as exc:
        raise MalformedInput(f"{cfg.plot_input}: {exc}") from None
    _emit(svg, cfg.output_path)
    return EXIT_OK


_COMMANDS = {
    "sieve": cmd_sieve,
    "walk": cmd_walk,
    "moat": cmd_moat,
    "density": cmd_density,
    "bench": cmd_bench,
    "plot": cmd_plot,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        cfg = _merge(args)
        return _COMMANDS[args.command](cfg)
    except UsageError as exc:
        print(f"gmoat: error: {exc}", file=sys.stderr)
        print(parser.format_usage().rstrip(), file=sys.stderr)
        return EXIT_USAGE
    except MalformedInput as exc:
        print(f"gmoat: malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except OSError as exc:
        print(f"gmoat: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, OverflowError) as exc:
        print(f"gmoat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
