"""Command-line front end: exact ramification and singularity invariants.

Subcommands
-----------
conductor   Swan/Artin character table of an Eisenstein extension
verify      run one built-in verification suite
milnor      Milnor number of an isolated hypersurface point
mf end      per-period End dimensions of the stabilized residue field
trace       equivariant trace of the identity as class-sum coefficients

Output goes to stdout as JSON (default, one compact line) or TSV.  Every
failure prints a JSON object with an "error" field and exits with a code
specific to the failure kind:

    0  success                       3  PrecisionLoss
    1  verification suite failed     4  bad input (parse / validation)
    2  NotGalois                     5  NotIsolated
    64 usage error
"""

import json
import os
import sys
from fractions import Fraction

import click

from . import group_traces
from . import verify as verify_suites
from .conductors import (GroupModule, artin_conductor, dimtot, swan_conductor,
                         vanishing_cycle_rep_n0)
from .dg_models import mf as mf_ops
from .dvr_arith import DVRPoly, DVRSpec
from .eisenstein_galois import automorphism_group, character_table, extend
from .errors import (DegreeOne, NotEisenstein, NotGalois, NotIsolated,
                     ParseError, PrecisionLoss)
from .finite_field import FqPolyRing, GFq
from .intpoly import parse_poly
from .milnor import Hypersurface, milnor_number

SCHEMA = "ramify/1"

# Usage problems exit with the conventional sysexits code; click's default
# (2) would collide with the NotGalois status.
click.UsageError.exit_code = 64

_FORMAT = click.option("--format", "fmt", type=click.Choice(["json", "tsv"]),
                       default="json", show_default=True,
                       help="Output rendering.")


def _num(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    return x


def _flatten(prefix, value, rows):
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten("%s.%s" % (prefix, k) if prefix else str(k),
                     value[k], rows)
    elif isinstance(value, (list, tuple)):
        for i, v in enumerate(value):
            _flatten("%s.%d" % (prefix, i) if prefix else str(i), v, rows)
    elif value is None:
        rows.append((prefix, ""))
    elif value is True or value is False:
        rows.append((prefix, "true" if value else "false"))
    else:
        rows.append((prefix, str(value)))


def _emit(payload, fmt):
    if fmt == "tsv":
        rows = []
        _flatten("", payload, rows)
        click.echo("\n".join("%s\t%s" % (k, v) for k, v in rows))
    else:
        click.echo(json.dumps(payload, sort_keys=True,
                              separators=(",", ":")))


def _fail(code, name, detail=None):
    payload = {"schema": SCHEMA, "error": name}
    if detail is not None:
        payload["detail"] = str(detail)
    click.echo(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    sys.exit(code)


def _resolve_spec(equal_char, mixed_char, precision):
    if (equal_char is None) == (mixed_char is None):
        raise click.UsageError(
            "give exactly one of --equal-char or --mixed-char")
    cap = os.environ.get("RAMIFY_MAX_PRECISION")
    if cap is not None:
        try:
            cap = int(cap)
        except ValueError:
            _fail(4, "ValidationError",
                  "RAMIFY_MAX_PRECISION must be an integer")
        if precision > cap:
            _fail(4, "ValidationError",
                  "precision %d exceeds RAMIFY_MAX_PRECISION=%d"
                  % (precision, cap))
    try:
        if equal_char is not None:
            return DVRSpec.equal_char(equal_char, precision)
        return DVRSpec.mixed_char(mixed_char, precision)
    except ValueError as exc:
        _fail(4, "ValidationError", exc)


def _base_json(spec):
    if spec.kind == "equal":
        return {"kind": "equal-char", "q": spec.q,
                "precision": spec.precision}
    return {"kind": "mixed-char", "p": spec.p, "precision": spec.precision}


_BASE_OPTIONS = [
    click.option("--equal-char", type=int, default=None, metavar="Q",
                 help="Equal-characteristic base: power series over F_Q."),
    click.option("--mixed-char", type=int, default=None, metavar="P",
                 help="Mixed-characteristic base: P-adic integers."),
    click.option("--precision", type=int, default=10, show_default=True,
                 help="Uniformizer-adic working precision."),
]


def _with_base(fn):
    for opt in reversed(_BASE_OPTIONS):
        fn = opt(fn)
    return fn


@click.group()
def main():
    """Exact Swan/Artin conductors, Milnor numbers, and their finite
    homological models."""


# ---------------------------------------------------------------------------


@main.command()
@_with_base
@click.option("--eisenstein", "expr", required=True, metavar="EXPR",
              help="Monic Eisenstein polynomial in x (and t over an "
                   "equal-characteristic base).")
@click.option("--rep", "reps", multiple=True,
              type=click.Choice(["trivial", "regular", "augmentation"]),
              help="Also report conductors of this representation "
                   "(repeatable).")
@_FORMAT
def conductor(equal_char, mixed_char, precision, expr, reps, fmt):
    """Swan and Artin ramification characters of A[x]/E."""
    spec = _resolve_spec(equal_char, mixed_char, precision)
    try:
        poly = DVRPoly.from_intpoly(spec, parse_poly(expr))
    except (ParseError, ValueError) as exc:
        _fail(4, "ParseError", exc)
    try:
        ext = extend(spec, poly)
    except NotEisenstein as exc:
        _fail(4, "NotEisenstein", exc)
    except DegreeOne as exc:
        _fail(4, "DegreeOne", exc)
    except ValueError as exc:
        _fail(4, "ValidationError", exc)
    try:
        gdata = automorphism_group(ext)
        gdata.require_galois()
        table = character_table(gdata)
    except NotGalois as exc:
        _fail(2, "NotGalois", exc)
    except PrecisionLoss as exc:
        _fail(3, "PrecisionLoss", exc)
    names = ["id" if g == gdata.identity else "g%d" % g
             for g in range(gdata.group.n)]
    payload = {
        "schema": SCHEMA,
        "base": _base_json(spec),
        "eisenstein": expr,
        "ramification_index": ext.e,
        "ar": {names[g]: table.ar[g] for g in range(gdata.group.n)},
        "sw": {names[g]: table.sw[g] for g in range(gdata.group.n)},
    }
    if reps:
        out = []
        for name in reps:
            if name == "trivial":
                module = GroupModule.trivial(gdata.group)
            elif name == "regular":
                module = GroupModule.regular(gdata.group)
            else:
                module = vanishing_cycle_rep_n0(gdata)
            out.append({"rep": name,
                        "artin": _num(artin_conductor(module, gdata)),
                        "swan": _num(swan_conductor(module, gdata)),
                        "dimtot": _num(dimtot(module, gdata))})
        payload["reps"] = out
    _emit(payload, fmt)


# ---------------------------------------------------------------------------


@main.command("verify")
@click.argument("suite", type=click.Choice(sorted(verify_suites.SUITES)))
@click.option("--seed", type=int, default=None,
              help="Seed for the randomized suites.")
@click.option("--cases", type=int, default=None,
              help="Number of randomized cases per family member.")
@_FORMAT
def verify_cmd(suite, seed, cases, fmt):
    """Run one built-in suite; exit 0 iff every case passes."""
    try:
        report = verify_suites.run_suite(suite, seed=seed, cases=cases)
    except PrecisionLoss as exc:
        _fail(3, "PrecisionLoss", exc)
    payload = dict(report)
    payload["schema"] = SCHEMA
    _emit(payload, fmt)
    sys.exit(0 if report["ok"] else 1)


# ---------------------------------------------------------------------------


@main.command("milnor")
@_with_base
@click.option("--poly", "expr", required=True, metavar="EXPR",
              help="Hypersurface equation in x0..x9 (and t).")
@click.option("--max-degree", type=int, default=None,
              help="Truncation-degree cap for the stabilized length.")
@_FORMAT
def milnor_cmd(equal_char, mixed_char, precision, expr, max_degree, fmt):
    """Milnor number as the stabilized Jacobian-quotient length."""
    spec = _resolve_spec(equal_char, mixed_char, precision)
    try:
        hyp = Hypersurface(spec, expr)
    except (ParseError, ValueError) as exc:
        _fail(4, "ParseError", exc)
    kwargs = {}
    if max_degree is not None:
        kwargs["max_degree"] = max_degree
    try:
        res = milnor_number(hyp, **kwargs)
    except NotIsolated as exc:
        _fail(5, "NotIsolated", exc)
    except PrecisionLoss as exc:
        _fail(3, "PrecisionLoss", exc)
    payload = {"schema": SCHEMA, "base": _base_json(spec), "poly": expr}
    payload.update(res.to_json())
    _emit(payload, fmt)


# ---------------------------------------------------------------------------


@main.group("mf")
def mf_group():
    """Matrix-factorization computations."""


@mf_group.command("end")
@click.option("--e", "e", type=int, required=True,
              help="Exponent of the potential x^e.")
@click.option("--field", type=int, required=True, metavar="Q",
              help="Coefficient field F_Q.")
@_FORMAT
def mf_end(e, field, fmt):
    """Per-period End dimensions of the stabilized residue field of x^e."""
    if e < 1:
        _fail(4, "ValidationError", "e must be at least 1")
    try:
        ring = FqPolyRing(GFq(field), var="x")
    except ValueError as exc:
        _fail(4, "ValidationError", exc)
    per = mf_ops.periodic_end_dims(mf_ops.stabilized_residue_field(ring, e))
    _emit({"schema": SCHEMA, "e": e, "field": field,
           "even": per.even, "odd": per.odd}, fmt)


# ---------------------------------------------------------------------------


@main.command("trace")
@click.option("--group", "group_name", required=True, metavar="NAME",
              help="C<n> or S3.")
@click.option("--module", "module_name", required=True,
              type=click.Choice(["trivial", "regular", "sign",
                                 "permutation", "standard"]),
              help="Named representation of the group.")
@_FORMAT
def trace_cmd(group_name, module_name, fmt):
    """Class-sum coefficients of the equivariant trace of the identity."""
    try:
        module = group_traces.named_module(group_name, module_name)
    except ValueError as exc:
        _fail(4, "ValidationError", exc)
    hh = group_traces.trace_via_characters(
        module, group_traces.identity_endo(module))
    _emit({"schema": SCHEMA, "group": group_name.upper(),
           "module": module_name, "dim": module.dim,
           "trace": hh.to_json(),
           "reduced_trace": group_traces.reduced_trace(module).to_json()},
          fmt)


if __name__ == "__main__":
    main()
