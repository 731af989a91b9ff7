"""Command-line interface driving the library from sectioned config files.

A config file has up to four sections.  ``[field]`` fixes the coefficient
field, ``[delta]`` describes the delta-sequence to build, ``[points]`` lists
evaluation points one per line, and ``[job]`` holds run options.  Keys are
strict: anything unknown, missing, or malformed is reported with its line
number and exits with status 2; domain failures (a sequence that fails a
condition, an impossible construction) exit with status 1.
"""

from __future__ import annotations

import argparse
import pathlib
import sys
from dataclasses import dataclass, replace
from fractions import Fraction

from .approximants import build_approximates
from .codes import EvalMap, render_value, scan_table, table_csv
from .errors import ConfigError, DomainError
from .genesis import build_type_c, build_type_d, build_type_e, validate_n
from .gf import FieldElement, FieldSpec
from .semigroup import LexValue, QuadValue, RatValue, enumerate_upto, zero_of

__all__ = ["JobConfig", "main", "parse_config", "run"]


_SECTIONS = ("field", "delta", "points", "job")
_KEYS = {
    "field": ("p", "m", "modulus"),
    "delta": ("type", "under", "digits", "radicand", "steps", "choices"),
    "job": ("mode", "limit", "bound", "depth"),
}
_TYPE_KEYS = {
    "N": (),
    "C": (),
    "D": ("digits", "radicand"),
    "E": ("steps", "choices"),
}
COMMANDS = ("validate", "construct", "approximates", "semigroup", "table")


@dataclass(frozen=True)
class JobConfig:
    """A fully parsed configuration, ready to run."""

    spec: FieldSpec
    delta_type: str
    under: tuple[int, ...]
    digits: tuple[int, ...] | None
    radicand: int
    steps: int
    choices: tuple[tuple[int, int], ...] | None
    points: tuple[tuple[FieldElement, FieldElement], ...]
    mode: str
    limit: int | None
    bound: str | None
    depth: int | None
    command: str | None = None


def _split_sections(text: str):
    """Group config lines by section, keeping line numbers for messages."""
    sections: dict[str, list[tuple[int, str]]] = {}
    current: str | None = None
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip()
            if name not in _SECTIONS:
                raise ConfigError(f"unknown section [{name}] at line {no}")
            if name in sections:
                raise ConfigError(f"duplicate section [{name}] at line {no}")
            sections[name] = []
            current = name
            continue
        if current is None:
            raise ConfigError(f"content before any section at line {no}")
        sections[current].append((no, line))
    if "field" not in sections:
        raise ConfigError("missing [field] section")
    if "delta" not in sections:
        raise ConfigError("missing [delta] section")
    return sections


def _key_values(name: str, lines: list[tuple[int, str]]):
    """Parse ``key = value`` lines of one section into an ordered mapping."""
    out: dict[str, tuple[int, str]] = {}
    for no, line in lines:
        key, sep, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not sep or not key:
            raise ConfigError(f"expected 'key = value' at line {no}")
        if key not in _KEYS[name]:
            raise ConfigError(f"unknown key {key!r} in [{name}] at line {no}")
        if key in out:
            raise ConfigError(f"duplicate key {key!r} at line {no}")
        out[key] = (no, value)
    return out


def _int(value: str, key: str, no: int, base: int = 10) -> int:
    try:
        return int(value, base)
    except ValueError:
        raise ConfigError(f"bad integer for {key!r} at line {no}: {value!r}") from None


def _ints(value: str, key: str, no: int) -> tuple[int, ...]:
    parts = value.split()
    if not parts:
        raise ConfigError(f"empty value for {key!r} at line {no}")
    return tuple(_int(part, key, no) for part in parts)


def _choices(value: str, no: int) -> tuple[tuple[int, int], ...]:
    out = []
    for part in value.split(","):
        pair = _ints(part, "choices", no)
        if len(pair) != 2:
            raise ConfigError(f"choices need 'z new' pairs at line {no}")
        out.append((pair[0], pair[1]))
    return tuple(out)


def _field_spec(keys: dict[str, tuple[int, str]]) -> FieldSpec:
    if "p" not in keys:
        raise ConfigError("missing key 'p' in [field]")
    no, value = keys["p"]
    p = _int(value, "p", no)
    m = 1
    if "m" in keys:
        no, value = keys["m"]
        m = _int(value, "m", no)
    modulus = None
    if "modulus" in keys:
        no, value = keys["modulus"]
        modulus = _int(value, "modulus", no, base=0)
    try:
        if modulus is None:
            return FieldSpec(p, m)
        return FieldSpec(p, m, modulus)
    except DomainError as exc:
        raise ConfigError(str(exc)) from None


def _coordinate(token: str, spec: FieldSpec, no: int) -> FieldElement:
    if token == "g" or token.startswith("g^"):
        if spec.m == 1:
            raise ConfigError(
                f"power coordinate {token!r} needs an extension field at line {no}"
            )
        power = 1
        if token != "g":
            tail = token[2:]
            if not tail.isdigit():
                raise ConfigError(f"malformed power coordinate {token!r} at line {no}")
            power = int(tail)
        return spec.element(2) ** power
    value = _int(token, "point", no)
    try:
        return spec.element(value)
    except DomainError as exc:
        raise ConfigError(f"bad coordinate at line {no}: {exc}") from None


def _points(lines: list[tuple[int, str]], spec: FieldSpec):
    out: list[tuple[FieldElement, FieldElement]] = []
    seen = set()
    for no, line in lines:
        tokens = line.split()
        if len(tokens) != 2:
            raise ConfigError(f"points need two coordinates at line {no}")
        point = (_coordinate(tokens[0], spec, no), _coordinate(tokens[1], spec, no))
        if point in seen:
            raise ConfigError(f"duplicate point at line {no}")
        seen.add(point)
        out.append(point)
    return tuple(out)


def parse_config(text: str) -> JobConfig:
    """Parse a config file into a ``JobConfig``; raise ``ConfigError`` on any
    malformed, unknown, or missing entry."""
    sections = _split_sections(text)
    field_keys = _key_values("field", sections["field"])
    delta_keys = _key_values("delta", sections["delta"])
    job_keys = _key_values("job", sections.get("job", []))

    spec = _field_spec(field_keys)
    points = _points(sections.get("points", []), spec)

    if "type" not in delta_keys:
        raise ConfigError("missing key 'type' in [delta]")
    no, delta_type = delta_keys["type"]
    if delta_type not in _TYPE_KEYS:
        raise ConfigError(f"unknown delta type {delta_type!r} at line {no}")
    if "under" not in delta_keys:
        raise ConfigError("missing key 'under' in [delta]")
    no, value = delta_keys["under"]
    under = _ints(value, "under", no)
    for key in ("digits", "radicand", "steps", "choices"):
        if key in delta_keys and key not in _TYPE_KEYS[delta_type]:
            no, _ = delta_keys[key]
            raise ConfigError(
                f"key {key!r} does not apply to type {delta_type} at line {no}"
            )

    digits = None
    if "digits" in delta_keys:
        no, value = delta_keys["digits"]
        digits = _ints(value, "digits", no)
    if delta_type == "D" and digits is None:
        raise ConfigError("type D needs a 'digits' key in [delta]")
    radicand = 3
    if "radicand" in delta_keys:
        no, value = delta_keys["radicand"]
        radicand = _int(value, "radicand", no)
    steps = 0
    if "steps" in delta_keys:
        no, value = delta_keys["steps"]
        steps = _int(value, "steps", no)
    choices = None
    if "choices" in delta_keys:
        no, value = delta_keys["choices"]
        choices = _choices(value, no)

    mode = "jumps"
    if "mode" in job_keys:
        no, mode = job_keys["mode"]
        if mode not in ("jumps", "full"):
            raise ConfigError(f"unknown mode {mode!r} at line {no}")
    limit = None
    if "limit" in job_keys:
        no, value = job_keys["limit"]
        limit = _int(value, "limit", no)
    bound = job_keys.get("bound", (0, None))[1]
    depth = None
    if "depth" in job_keys:
        no, value = job_keys["depth"]
        depth = _int(value, "depth", no)

    return JobConfig(
        spec=spec,
        delta_type=delta_type,
        under=under,
        digits=digits,
        radicand=radicand,
        steps=steps,
        choices=choices,
        points=points,
        mode=mode,
        limit=limit,
        bound=bound,
        depth=depth,
    )


def _build_delta(config: JobConfig):
    if config.delta_type == "N":
        return validate_n(config.under)
    if config.delta_type == "C":
        return build_type_c(config.under)
    if config.delta_type == "D":
        return build_type_d(config.under, config.digits, config.radicand)
    return build_type_e(config.under, config.steps, config.choices)


def _parse_bound(config: JobConfig, delta):
    """Read the [job] bound in the notation of the sequence's value kind."""
    text = config.bound
    if text is None:
        raise ConfigError("semigroup job needs a 'bound' key in [job]")
    tokens = text.split()
    try:
        if config.delta_type == "C":
            if len(tokens) != 2:
                raise ValueError
            return LexValue(int(tokens[0]), int(tokens[1]))
        if config.delta_type == "D":
            if len(tokens) not in (1, 2):
                raise ValueError
            m = int(tokens[1]) if len(tokens) == 2 else 0
            return QuadValue(Fraction(tokens[0]), m, zero_of(delta).tau)
        if len(tokens) != 1:
            raise ValueError
        return RatValue(Fraction(tokens[0]))
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"bad bound {text!r} for type {config.delta_type}") from None


def _run_validate(config: JobConfig) -> str:
    delta = _build_delta(config)
    base = delta.stages[-1] if config.delta_type == "E" else delta
    lines = []
    if config.delta_type == "C":
        rendered = " ".join(f"({x},{y})" for x, y in delta.deltas)
        lines.append(f"valid delta-sequence: {rendered}")
    elif config.delta_type == "D":
        head = " ".join(str(h) for h in delta.head)
        lines.append(f"valid delta-sequence: {head} tau")
        lines.append(f"tau = {delta.tail}")
    else:
        lines.append(
            "valid delta-sequence: " + " ".join(str(v) for v in base.deltas)
        )
    if config.delta_type in ("N", "E"):
        s = base.structure
        lines.append("gcd chain: " + " ".join(str(v) for v in s.d))
        lines.append("quotients: " + " ".join(str(v) for v in s.n))
    return "\n".join(lines) + "\n"


def _run_construct(config: JobConfig) -> str:
    delta = _build_delta(config)
    if config.delta_type == "N":
        body = ",".join(str(v) for v in delta.deltas)
        return "{" + body + "}\n"
    if config.delta_type == "C":
        body = ",".join(f"({x},{y})" for x, y in delta.deltas)
        lines = ["{" + body + "}"]
        w = delta.witness
        lines.append(f"(A,B) = ({w.ab[0]},{w.ab[1]})")
        lines.append(f"(A',B') = ({w.abp[0]},{w.abp[1]})")
        lines.append(f"u = ({w.u[0]},{w.u[1]})")
        return "\n".join(lines) + "\n"
    if config.delta_type == "D":
        head = ",".join(str(h) for h in delta.head)
        lines = ["{" + head + ",tau}", f"tau = {delta.tail}"]
        return "\n".join(lines) + "\n"
    body = ",".join(str(v) for v in delta.generators())
    lines = ["{" + body + ",...}"]
    lines.append(
        "stages: " + " | ".join(" ".join(str(v) for v in s.deltas) for s in delta.stages)
    )
    return "\n".join(lines) + "\n"


def _run_approximates(config: JobConfig) -> str:
    delta = _build_delta(config)
    fam = build_approximates(delta, config.spec, config.depth)
    lines = [f"q_{i} = {poly}" for i, poly in enumerate(fam.polys)]
    lines.append("weights: " + " ".join(render_value(w) for w in fam.weights))
    return "\n".join(lines) + "\n"


def _run_semigroup(config: JobConfig) -> str:
    delta = _build_delta(config)
    bound = _parse_bound(config, delta)
    lines = []
    for value, rep in enumerate_upto(delta, bound):
        exps = " ".join(str(a) for a in rep.exponents)
        lines.append(f"{render_value(value)} : {exps}")
    return "\n".join(lines) + "\n" if lines else ""


def _run_table(config: JobConfig) -> str:
    delta = _build_delta(config)
    fam = build_approximates(delta, config.spec, config.depth)
    ev = EvalMap(config.spec, config.points)
    rows = scan_table(delta, fam, ev, mode=config.mode, limit=config.limit)
    return table_csv(rows)


_RUNNERS = {
    "validate": _run_validate,
    "construct": _run_construct,
    "approximates": _run_approximates,
    "semigroup": _run_semigroup,
    "table": _run_table,
}


def run(config: JobConfig) -> str:
    """Execute the configured command and return its output text."""
    if config.command not in _RUNNERS:
        raise DomainError(f"unknown command: {config.command!r}")
    return _RUNNERS[config.command](config)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltacodes",
        description="Build delta-sequences and evaluation codes from a config file.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "validate": "check the conditions on an integer sequence",
        "construct": "build the configured delta-sequence and print it",
        "approximates": "print the approximate polynomials and their weights",
        "semigroup": "list semigroup members up to the configured bound",
        "table": "emit the code table as CSV",
    }
    for name in COMMANDS:
        cmd = sub.add_parser(name, help=helps[name])
        cmd.add_argument("--config", required=True, help="path to the config file")
        cmd.add_argument("--out", help="write output to this file instead of stdout")
        if name == "table":
            cmd.add_argument(
                "--mode",
                choices=("jumps", "full"),
                help="row selection, overriding the config",
            )
    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        text = pathlib.Path(args.config).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error[parse]: cannot read config: {exc}", file=sys.stderr)
        return 2
    try:
        config = parse_config(text)
        config = replace(config, command=args.command)
        if getattr(args, "mode", None):
            config = replace(config, mode=args.mode)
        output = run(config)
    except ConfigError as exc:
        print(f"error[parse]: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error[domain]: {exc}", file=sys.stderr)
        return 1
    if args.out:
        pathlib.Path(args.out).write_text(output, encoding="utf-8")
    else:
        sys.stdout.write(output)
    if args.command == "table" and config.limit is not None:
        print(f"note: table limited to {config.limit} rows", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
