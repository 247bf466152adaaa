"""Command line interface: JSON jobs in, deterministic JSON reports out.

A job is a single JSON object naming a command and its payload; see
``schema.json`` next to this module.  Reports echo the payload and the
resolved options together with the result and the package version, as
one line of JSON on stdout, byte-identical across repeated runs on the
same input.  Failures print one line of JSON on stderr and exit with 2
for malformed input, 3 for exhausted budgets or enumeration limits, and
4 for violated mathematical preconditions.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from importlib import resources

import jsonschema

from . import __version__
from .divisorial import canonical_module, class_group, is_gorenstein
from .groebner import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    IdealPresentation,
    default_variables,
    format_polynomial,
    grevlex,
    parse_polynomial,
)
from .monoid import (
    EnumerationLimitError,
    NonNormalError,
    monoid_from_cone_rays,
    normalize_presentation,
)
from .multigraded import GradedRingSpec, NotPrimeError, analyze_prime, graded_hull

COMMANDS = (
    "hilbert-basis",
    "canonical",
    "class-group",
    "gorenstein",
    "normalize",
    "graded-hull",
    "analyze-prime",
)

_PAYLOAD_KEYS = {
    "hilbert-basis": {"rays", "generators"},
    "canonical": {"rays", "generators"},
    "class-group": {"rays", "generators"},
    "gorenstein": {"rays", "generators"},
    "normalize": {"generators"},
    "graded-hull": {"vars", "grading", "ideal"},
    "analyze-prime": {"vars", "grading", "prime"},
}

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_MATH = 4


class InputError(ValueError):
    """Malformed job input; the message points at the offending field."""


@dataclass(frozen=True)
class JobSpec:
    command: str
    payload: dict
    options: dict


def _schema() -> dict:
    text = resources.files("monograde").joinpath("schema.json").read_text()
    return json.loads(text)


def _check_vectors(name: str, rows) -> None:
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise InputError("%s[%d]: expected %d entries, got %d" % (name, i, width, len(row)))


def parse_input(text: str, cli_command: str | None = None, overrides: dict | None = None) -> JobSpec:
    """Validate a JSON job against the shipped schema and resolve options.

    Option precedence: command line flags, then the job's "options"
    object, then the MONOGRADE_BUDGET environment variable (budget
    only), then the defaults box=4, trunc=8, budget=%d.
    """ % DEFAULT_BUDGET
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError("input is not valid JSON: %s" % e) from None
    validator = jsonschema.Draft202012Validator(_schema())
    errors = sorted(validator.iter_errors(data), key=lambda e: str(e.json_path))
    if errors:
        err = errors[0]
        raise InputError("%s: %s" % (err.json_path, err.message))
    command = data["command"]
    if cli_command is not None and cli_command != command:
        raise InputError(
            "$.command: job says %r but the command line says %r" % (command, cli_command)
        )
    payload = {k: v for k, v in data.items() if k not in ("command", "options")}
    extra = set(payload) - _PAYLOAD_KEYS[command]
    if extra:
        raise InputError("$.%s: not a field of the %r command" % (sorted(extra)[0], command))
    for key in ("rays", "generators", "grading"):
        if key in payload:
            _check_vectors(key, payload[key])
    if "vars" in payload:
        n = payload["vars"]
        if len(payload["grading"]) != n:
            raise InputError("grading: expected one degree vector per variable (%d)" % n)
        names = default_variables(n)
        polys_key = "ideal" if "ideal" in payload else "prime"
        for i, s in enumerate(payload[polys_key]):
            try:
                parse_polynomial(s, names)
            except ValueError as e:
                raise InputError("%s[%d]: %s" % (polys_key, i, e)) from None
    env_budget = os.environ.get("MONOGRADE_BUDGET")
    options = {"box": 4, "trunc": 8, "budget": DEFAULT_BUDGET, "output": "json"}
    if env_budget is not None:
        try:
            options["budget"] = int(env_budget)
        except ValueError:
            raise InputError("MONOGRADE_BUDGET: expected an integer") from None
    options.update(data.get("options", {}))
    for key, value in (overrides or {}).items():
        if value is not None:
            options[key] = value
    if options["budget"] < 1:
        raise InputError("options.budget: must be positive")
    return JobSpec(command, payload, options)


def _monoid_of(payload: dict):
    if "rays" in payload:
        return monoid_from_cone_rays(payload["rays"])
    return normalize_presentation(payload["generators"])


def _graded_setup(payload: dict, key: str):
    n = payload["vars"]
    spec = GradedRingSpec(tuple(tuple(d) for d in payload["grading"]))
    names = default_variables(n)
    gens = tuple(parse_polynomial(s, names) for s in payload[key])
    return spec, names, IdealPresentation(gens, grevlex(n))


def execute(job: JobSpec) -> dict:
    """Run the job and assemble the full report object."""
    payload, options = job.payload, job.options
    if job.command == "normalize":
        m = normalize_presentation(payload["generators"])
        result = {
            "rank": m.rank,
            "lattice_basis": [list(r) for r in m.lattice_basis.tolist()],
            "normalized_generators": [list(g) for g in m.local_generators],
            "is_normal": m.is_normal,
            "witness": None if m.is_normal else list(m.normality_witness),
        }
    elif job.command == "hilbert-basis":
        m = _monoid_of(payload)
        result = {
            "hilbert_basis": [list(v) for v in m.hilbert_basis()],
            "unit_basis": [list(v) for v in m.unit_basis()],
        }
    elif job.command == "canonical":
        m = _monoid_of(payload)
        can = canonical_module(m)
        gor, _ = is_gorenstein(m)
        result = {
            "h": list(can.ideal.heights),
            "generators": [list(v) for v in can.generators],
            "gorenstein": gor,
        }
    elif job.command == "class-group":
        m = _monoid_of(payload)
        result = {"invariant_factors": list(class_group(m).invariant_factors)}
    elif job.command == "gorenstein":
        m = _monoid_of(payload)
        gor, cert = is_gorenstein(m)
        result = {"gorenstein": gor, "certificate": None if cert is None else list(cert)}
    elif job.command == "graded-hull":
        spec, names, ideal = _graded_setup(payload, "ideal")
        hull = graded_hull(ideal, spec, budget=options["budget"])
        result = {"hull": [format_polynomial(g, names, ideal.order) for g in hull.generators]}
    elif job.command == "analyze-prime":
        spec, names, ideal = _graded_setup(payload, "prime")
        res = analyze_prime(ideal, spec, budget=options["budget"])
        result = {
            "p_star": [format_polynomial(g, names, ideal.order) for g in res.p_star.generators],
            "graded": res.graded,
            "dim_p": res.dim_p,
            "dim_p_star": res.dim_p_star,
            "tau": res.tau,
            "sigma": res.sigma,
        }
    else:
        raise InputError("$.command: unknown command %r" % job.command)
    return {
        "command": job.command,
        "input": payload,
        "options": options,
        "result": result,
        "version": __version__,
    }


def _fail(message: str, code: int) -> int:
    sys.stderr.write(json.dumps({"error": message, "exit": code}) + "\n")
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monograde",
        description="Monoid ring and multigraded ideal computations on JSON jobs.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", help="job file (default: read stdin)")
    parser.add_argument("--box", type=int, help="box bound for enumeration reports")
    parser.add_argument("--trunc", type=int, help="truncation degree for enumeration reports")
    parser.add_argument("--budget", type=int, help="reduction step budget")
    parser.add_argument("--output", choices=["json"], help="output format")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.input is None:
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            return _fail("cannot read %s: %s" % (args.input, e.strerror), EXIT_INPUT)
    overrides = {"box": args.box, "trunc": args.trunc, "budget": args.budget,
                 "output": args.output}
    try:
        job = parse_input(text, args.command, overrides)
    except InputError as e:
        return _fail(str(e), EXIT_INPUT)
    try:
        report = execute(job)
    except (BudgetExceededError, EnumerationLimitError) as e:
        return _fail(str(e), EXIT_BUDGET)
    except (NonNormalError, NotPrimeError, ValueError) as e:
        return _fail(str(e), EXIT_MATH)
    sys.stdout.write(json.dumps(report, separators=(",", ":")) + "\n")
    return EXIT_OK


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
