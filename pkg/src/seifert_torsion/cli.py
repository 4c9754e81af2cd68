"""Command line front end.

Exit codes: 0 success, 2 parse or validation failure, 3 domain failure
(for example c1 = 0 where a closed form needs c1 != 0), 4 numeric-window
failure.  Exact rationals and potentially large exact integers appear in
JSON output as strings; floating-point values stay JSON numbers.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import warnings
from fractions import Fraction
from pathlib import Path

from .dedekind import (
    adiabatic_eta,
    dedekind_sum_exact,
    dedekind_sum_float,
    validate_dedekind_args,
)
from .errors import (
    DomainError,
    NumericWindowError,
    SeifertError,
    ValidationError,
)
from .homology import first_homology, moduli_description, torsion_h2_order
from .parsing import format_seifert, parse_seifert
from .partition import (
    PartitionInputs,
    m_exponent,
    partition_magnitude,
    phase_factor,
    z_partition_value,
    zbar_component_magnitude,
    zbar_partition_value,
)
from .seifert import SeifertData, chern_number, validate_seifert
from .torsion import (
    isotropy_volume,
    k0_deriv0,
    k0_function,
    scalar_torsion_trivial,
    torsion_prefactor,
    trivial_rep_k0_params,
)
from .zetafunc import hurwitz_zeta, hurwitz_zeta_deriv0, riemann_zeta

_SELFTEST_DATA = ("[0,-1;(2,1),(3,1),(5,1)]", "[1,1]", "[0,2;(3,1),(3,1)]")


def _collect_warnings(sink: list, func, *args, **kwargs):
    """Run func, appending the text of any emitted warnings to sink."""
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        result = func(*args, **kwargs)
    sink.extend(str(w.message) for w in caught)
    return result


def _parse_and_validate(text: str) -> SeifertData:
    return validate_seifert(parse_seifert(text))


def _input_block(d: SeifertData) -> dict:
    return {
        "text": format_seifert(d),
        "genus": d.genus,
        "euler": d.euler,
        "pairs": [[a, b] for a, b in d.pairs],
    }


def _symbolic_torsion(d: SeifertData) -> str:
    return f"(2π)^{2 - 2 * d.genus}/{d.alpha_product}"


def invariant_report(d: SeifertData, gauge_rank: int = 1) -> dict:
    """Full invariant bundle for one datum; requires c1 != 0."""
    warns: list[str] = []
    tr = _collect_warnings(warns, torsion_prefactor, d, gauge_rank)
    h1 = first_homology(d)
    moduli = moduli_description(d, gauge_rank)
    eta = adiabatic_eta(d, gauge_rank)
    return {
        "input": _input_block(d),
        "gauge_rank": gauge_rank,
        "c1": str(chern_number(d)),
        "torsion_order": str(tr.radicand),
        "homology": {
            "rank": h1.rank,
            "invariant_factors": [str(f) for f in h1.invariant_factors],
        },
        "eta0": str(eta),
        "m_x": m_exponent(d, gauge_rank),
        "scalar_torsion": {
            "value": tr.scalar_torsion,
            "symbolic": _symbolic_torsion(d),
        },
        "prefactor": tr.prefactor,
        "volume_coefficient": tr.volume_coefficient,
        "symplectic_volume": {
            "value": tr.symplectic_volume,
            "radicand": str(tr.radicand),
            "exponent": str(Fraction(gauge_rank, 2)),
        },
        "moduli": {
            "component_count": str(moduli.component_count),
            "component_dimension": moduli.component_dimension,
            "torsion_factors": [str(f) for f in moduli.torsion_factors],
        },
        "warnings": warns,
    }


def homology_report(d: SeifertData, gauge_rank: int = 1) -> dict:
    """Homology bundle; meaningful for every valid datum, c1 = 0 included."""
    warns: list[str] = []
    h1 = first_homology(d)
    classes = _collect_warnings(warns, torsion_h2_order, d, gauge_rank)
    c1 = chern_number(d)
    if c1 == 0:
        moduli = None
    else:
        m = moduli_description(d, gauge_rank)
        moduli = {
            "component_count": str(m.component_count),
            "component_dimension": m.component_dimension,
            "torsion_factors": [str(f) for f in m.torsion_factors],
        }
    return {
        "input": _input_block(d),
        "gauge_rank": gauge_rank,
        "c1": str(c1),
        "homology": {
            "rank": h1.rank,
            "invariant_factors": [str(f) for f in h1.invariant_factors],
        },
        "torsion_classes": str(classes),
        "moduli": moduli,
        "warnings": warns,
    }


def torsion_report(d: SeifertData, gauge_rank: int = 1) -> dict:
    """Torsion bundle with the K0'(0) cross-check; requires c1 != 0."""
    warns: list[str] = []
    tr = _collect_warnings(warns, torsion_prefactor, d, gauge_rank)
    deriv = k0_deriv0(d)
    c1 = chern_number(d)
    iso = None
    if c1 > 0:
        iv = isotropy_volume(d)
        iso = {"value": iv.value, "radicand": str(iv.radicand)}
    return {
        "input": _input_block(d),
        "gauge_rank": gauge_rank,
        "c1": str(c1),
        "scalar_torsion": {
            "value": tr.scalar_torsion,
            "symbolic": _symbolic_torsion(d),
        },
        "k0_deriv0": {"numeric": deriv.numeric, "closed_form": deriv.closed_form},
        "prefactor": tr.prefactor,
        "volume_coefficient": tr.volume_coefficient,
        "symplectic_volume": {
            "value": tr.symplectic_volume,
            "radicand": str(tr.radicand),
            "exponent": str(Fraction(gauge_rank, 2)),
        },
        "isotropy_volume": iso,
        "warnings": warns,
    }


def partition_report(
    d: SeifertData,
    gauge_rank: int,
    level: int,
    cs_values: tuple,
    grav_phase=None,
) -> dict:
    inputs = PartitionInputs(
        data=d,
        gauge_rank=gauge_rank,
        level=level,
        cs_values=cs_values,
        grav_phase=grav_phase,
    )
    zbar = zbar_partition_value(inputs)
    pf = phase_factor(d, gauge_rank)
    classes = torsion_h2_order(d, gauge_rank)
    component = zbar_component_magnitude(d, gauge_rank, level)
    report = {
        "input": _input_block(d),
        "gauge_rank": gauge_rank,
        "level": level,
        "m_x": m_exponent(d, gauge_rank),
        "classes": str(classes),
        "phase_factor": {"re": pf.real, "im": pf.imag},
        "component_magnitude": component,
        "magnitude": partition_magnitude(inputs),
        "zbar": {"re": zbar.real, "im": zbar.imag, "abs": abs(zbar)},
        "coherent_bound": component * classes,
    }
    if grav_phase is not None:
        z = z_partition_value(inputs)
        report["z"] = {"re": z.real, "im": z.imag, "abs": abs(z)}
    return report


def dedekind_report(alpha: int, beta: int) -> dict:
    validate_dedekind_args(alpha, beta)
    exact = dedekind_sum_exact(alpha, beta)
    approx = dedekind_sum_float(alpha, beta)
    return {
        "alpha": alpha,
        "beta": beta,
        "exact": str(exact),
        "float": approx,
        "difference": abs(float(exact) - approx),
    }


def zeta_selftest_report() -> dict:
    """Internal consistency checks for the zeta and torsion kernels."""
    checks = []

    def check(name, residual, tolerance):
        checks.append(
            {
                "name": name,
                "residual": residual,
                "tolerance": tolerance,
                "ok": residual < tolerance,
            }
        )

    check("zeta(0) = -1/2", abs(riemann_zeta(0.0) + 0.5), 1e-12)
    check(
        "zeta'(0) = -log(2 pi)/2",
        abs(hurwitz_zeta_deriv0(1.0) + 0.5 * math.log(2.0 * math.pi)),
        1e-12,
    )
    h = 1e-6
    fd = (riemann_zeta(h) - riemann_zeta(-h)) / (2.0 * h)
    check("zeta'(0) finite difference", abs(fd - hurwitz_zeta_deriv0(1.0)), 1e-7)

    res = max(
        abs(hurwitz_zeta(s, 0.5) - (2.0**s - 1.0) * riemann_zeta(s))
        for s in (-2.0, -1.0, -0.5, 0.0, 0.49, 2.0, 3.0)
    )
    check("zeta(s, 1/2) = (2^s - 1) zeta(s)", res, 1e-9)

    res = max(
        abs(hurwitz_zeta(0.0, t) - (0.5 - t)) for t in (0.1, 0.25, 0.5, 0.75, 1.0)
    )
    check("zeta(0, t) = 1/2 - t", res, 1e-10)

    res = max(
        abs(
            (hurwitz_zeta(h, t) - hurwitz_zeta(-h, t)) / (2.0 * h)
            - hurwitz_zeta_deriv0(t)
        )
        for t in (0.2, 0.5, 0.9, 1.0)
    )
    check("d/ds zeta(s, t) at 0 vs log Gamma", res, 1e-7)

    for text in _SELFTEST_DATA:
        d = _parse_and_validate(text)
        params = trivial_rep_k0_params(d)
        check(
            f"K0(0) = 0 for {text}",
            abs(k0_function(params, d.alphas, 0.0)),
            1e-9,
        )
        deriv = k0_deriv0(d)
        check(
            f"K0'(0) numeric vs closed for {text}",
            abs(deriv.numeric - deriv.closed_form),
            1e-6,
        )
        torsion = scalar_torsion_trivial(d)
        check(
            f"exp(-K0'(0)/2) vs scalar torsion for {text}",
            abs(math.exp(-deriv.closed_form / 2.0) - torsion) / torsion,
            1e-12,
        )

    return {"checks": checks, "ok": all(c["ok"] for c in checks)}


def _read_cs_file(path: str) -> tuple:
    """Chern-Simons phases: a JSON array, or whitespace-separated decimals."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read cs file: {exc}") from exc
    stripped = text.strip()
    if not stripped:
        return ()
    if stripped.startswith("["):
        try:
            values = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"cs file is not valid JSON: {exc}") from exc
        if not isinstance(values, list):
            raise ValidationError("cs file JSON must be an array of numbers")
    else:
        values = stripped.split()
    try:
        return tuple(float(v) for v in values)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"cs file holds a non-numeric entry: {exc}") from exc


def _json_block(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False)


def _json_line(report: dict) -> str:
    return json.dumps(report, separators=(",", ":"), ensure_ascii=False)


def _write_pairs(out, pairs):
    width = max(len(k) for k, _ in pairs)
    for key, value in pairs:
        out.write(f"{key:<{width}}  {value}\n")


def _text_invariants(report: dict, out) -> None:
    h = report["homology"]
    m = report["moduli"]
    st = report["scalar_torsion"]
    sv = report["symplectic_volume"]
    _write_pairs(
        out,
        [
            ("input", report["input"]["text"]),
            ("gauge rank", report["gauge_rank"]),
            ("c1", report["c1"]),
            ("torsion order", report["torsion_order"]),
            ("homology", f"rank {h['rank']}, factors [{', '.join(h['invariant_factors'])}]"),
            ("eta0", report["eta0"]),
            ("m_x", report["m_x"]),
            ("scalar torsion", f"{st['value']!r} = {st['symbolic']}"),
            ("prefactor", repr(report["prefactor"])),
            ("volume coefficient", repr(report["volume_coefficient"])),
            ("symplectic volume", f"{sv['value']!r} = {sv['radicand']}^({sv['exponent']})"),
            ("moduli", f"{m['component_count']} component(s) of dimension {m['component_dimension']}"),
            ("warnings", "; ".join(report["warnings"]) or "(none)"),
        ],
    )


def _line_invariants(report: dict) -> str:
    h = report["homology"]
    return (
        f"{report['input']['text']} c1={report['c1']}"
        f" torsion_order={report['torsion_order']}"
        f" rank={h['rank']} factors=[{','.join(h['invariant_factors'])}]"
        f" eta0={report['eta0']} m_x={report['m_x']}"
    )


def _text_homology(report: dict, out) -> None:
    h = report["homology"]
    m = report["moduli"]
    rows = [
        ("input", report["input"]["text"]),
        ("gauge rank", report["gauge_rank"]),
        ("c1", report["c1"]),
        ("homology", f"rank {h['rank']}, factors [{', '.join(h['invariant_factors'])}]"),
        ("torsion classes", report["torsion_classes"]),
    ]
    if m is None:
        rows.append(("moduli", "(undefined: c1 = 0)"))
    else:
        rows.append(
            ("moduli", f"{m['component_count']} component(s) of dimension {m['component_dimension']}")
        )
    rows.append(("warnings", "; ".join(report["warnings"]) or "(none)"))
    _write_pairs(out, rows)


def _line_homology(report: dict) -> str:
    h = report["homology"]
    return (
        f"{report['input']['text']} c1={report['c1']} rank={h['rank']}"
        f" factors=[{','.join(h['invariant_factors'])}]"
        f" torsion_classes={report['torsion_classes']}"
    )


def _text_torsion(report: dict, out) -> None:
    st = report["scalar_torsion"]
    sv = report["symplectic_volume"]
    dv = report["k0_deriv0"]
    iso = report["isotropy_volume"]
    rows = [
        ("input", report["input"]["text"]),
        ("gauge rank", report["gauge_rank"]),
        ("c1", report["c1"]),
        ("scalar torsion", f"{st['value']!r} = {st['symbolic']}"),
        ("K0'(0)", f"numeric {dv['numeric']!r}, closed {dv['closed_form']!r}"),
        ("prefactor", repr(report["prefactor"])),
        ("volume coefficient", repr(report["volume_coefficient"])),
        ("symplectic volume", f"{sv['value']!r} = {sv['radicand']}^({sv['exponent']})"),
        ("isotropy volume", "(undefined: c1 <= 0)" if iso is None else repr(iso["value"])),
        ("warnings", "; ".join(report["warnings"]) or "(none)"),
    ]
    _write_pairs(out, rows)


def _line_torsion(report: dict) -> str:
    return (
        f"{report['input']['text']} c1={report['c1']}"
        f" scalar_torsion={report['scalar_torsion']['value']!r}"
        f" prefactor={report['prefactor']!r}"
        f" volume={report['symplectic_volume']['value']!r}"
    )


def _text_partition(report: dict, out) -> None:
    pf = report["phase_factor"]
    rows = [
        ("input", report["input"]["text"]),
        ("gauge rank", report["gauge_rank"]),
        ("level", report["level"]),
        ("m_x", report["m_x"]),
        ("classes", report["classes"]),
        ("phase factor", f"{pf['re']!r} + {pf['im']!r}i"),
        ("component magnitude", repr(report["component_magnitude"])),
        ("magnitude", repr(report["magnitude"])),
        ("coherent bound", repr(report["coherent_bound"])),
    ]
    if "z" in report:
        rows.append(("z", f"{report['z']['re']!r} + {report['z']['im']!r}i"))
    _write_pairs(out, rows)


_DATA_COMMANDS = {
    "invariants": (invariant_report, _text_invariants, _line_invariants),
    "homology": (homology_report, _text_homology, _line_homology),
    "torsion": (torsion_report, _text_torsion, _line_torsion),
}


def _cmd_data(args, out, err) -> int:
    build, render_block, render_line = _DATA_COMMANDS[args.command]
    if args.data is not None:
        report = build(_parse_and_validate(args.data), args.gauge_rank)
        if args.format == "json":
            out.write(_json_block(report) + "\n")
        else:
            render_block(report, out)
        return 0
    try:
        lines = Path(args.input).read_text().splitlines()
    except OSError as exc:
        err.write(f"error: cannot read input file: {exc}\n")
        return 2
    for line in lines:
        try:
            report = build(_parse_and_validate(line), args.gauge_rank)
        except SeifertError as exc:
            record = {
                "input": line,
                "error": {"type": type(exc).__name__, "message": str(exc)},
            }
            if args.format == "json":
                out.write(_json_line(record) + "\n")
            else:
                out.write(f"{line.strip() or '(empty)'} error: {exc}\n")
            continue
        if args.format == "json":
            out.write(_json_line(report) + "\n")
        else:
            out.write(render_line(report) + "\n")
    return 0


def _cmd_dedekind(args, out, err) -> int:
    report = dedekind_report(args.alpha, args.beta)
    if args.format == "json":
        out.write(_json_block(report) + "\n")
    else:
        out.write(report["exact"] + "\n")
    return 0


def _cmd_partition(args, out, err) -> int:
    d = _parse_and_validate(args.data)
    cs = _read_cs_file(args.cs_file)
    report = partition_report(d, args.gauge_rank, args.level, cs, args.grav_phase)
    if args.format == "json":
        out.write(_json_block(report) + "\n")
    else:
        _text_partition(report, out)
    return 0


def _cmd_selftest(args, out, err) -> int:
    report = zeta_selftest_report()
    if args.format == "json":
        out.write(_json_block(report) + "\n")
    else:
        for c in report["checks"]:
            status = "ok" if c["ok"] else "FAIL"
            out.write(
                f"{c['name']}: residual={c['residual']:.3e}"
                f" tol={c['tolerance']:.0e} {status}\n"
            )
    return 0 if report["ok"] else 4


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seifert-torsion",
        description="Invariants, torsion, and partition magnitudes of "
        "circle-fibered three-manifolds given by Seifert data.",
        epilog="Seifert data grammar: '[g,n;(a1,b1),...,(aM,bM)]'; "
        "'[g,n]' and '[g,n;]' denote an empty fiber list.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_data_command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--data", help="one Seifert datum, e.g. '[0,-1;(2,1),(3,1),(5,1)]'")
        group.add_argument("--input", help="file with one datum per line (batch mode)")
        p.add_argument("--gauge-rank", type=_positive_int, default=1)
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.set_defaults(handler=_cmd_data)
        return p

    add_data_command("invariants", "full invariant bundle (needs c1 != 0)")
    add_data_command("homology", "first homology, torsion classes, moduli")
    add_data_command("torsion", "scalar torsion, prefactor, volumes")

    p = sub.add_parser("dedekind", help="Dedekind sum s(alpha, beta)")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(handler=_cmd_dedekind)

    p = sub.add_parser("partition", help="partition magnitude at level k")
    p.add_argument("--data", required=True)
    p.add_argument("--level", type=_positive_int, default=1)
    p.add_argument("--gauge-rank", type=_positive_int, default=1)
    p.add_argument(
        "--cs-file",
        required=True,
        help="Chern-Simons phases, one per flat-bundle class (JSON array "
        "or whitespace-separated decimals), in character order",
    )
    p.add_argument("--grav-phase", type=float, default=None)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(handler=_cmd_partition)

    p = sub.add_parser("zeta-selftest", help="internal zeta/torsion kernel checks")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(handler=_cmd_selftest)

    return parser


def run(argv=None, out=None, err=None) -> int:
    """Entry point returning an exit code; streams default to stdout/stderr."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args, out, err)
    except ValidationError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return 3
    except NumericWindowError as exc:
        err.write(f"error: {exc}\n")
        return 4


def main() -> None:
    raise SystemExit(run())
