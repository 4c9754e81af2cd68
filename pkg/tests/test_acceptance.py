"""Acceptance gate: nine cross-checked criteria, one pass/fail line each.

Each test prints ``acceptance <n> <name>: PASS/FAIL`` (visible under -s,
or in the captured output of a failing run) and enforces its runtime
budget.  The checks pit independent computational routes against each
other; no expected value below was produced by the code under test
through the same path that is being checked.
"""

from __future__ import annotations

import io
import json
import math
import time
import warnings
from fractions import Fraction
from pathlib import Path

from support import (
    DATA_GENUS1,
    DATA_T24,
    DATA_UNIT,
    FIXTURES,
    dedekind_oracle,
    random_coprime_pair,
    random_seifert,
)

import random

from seifert_torsion import (
    NegativeChernWarning,
    PartitionInputs,
    adiabatic_eta,
    chern_number,
    cli,
    dedekind_sum_exact,
    dedekind_sum_float,
    dedekind_sum_recursive,
    first_homology,
    hurwitz_zeta,
    hurwitz_zeta_deriv0,
    k0_deriv0,
    k0_function,
    moduli_description,
    partition_magnitude,
    phase_factor,
    riemann_zeta,
    scalar_torsion_trivial,
    torsion_h2_order,
    torsion_order_integer,
    torsion_prefactor,
    trivial_rep_k0_params,
    zbar_partition_value,
)

TWO_PI = 2.0 * math.pi
GOLDEN = Path(__file__).parent / "golden"


def _report(name: str, failures: list, elapsed: float, budget: float) -> None:
    if elapsed >= budget:
        failures.append(f"runtime {elapsed:.2f}s exceeds {budget:.0f}s budget")
    status = "PASS" if not failures else "FAIL"
    detail = f"{elapsed:.2f}s" if not failures else "; ".join(failures)
    print(f"acceptance {name}: {status} ({detail})")
    assert not failures, f"{name}: {detail}"


def test_criterion_1_torsion_order_cross_derivation():
    failures = []
    start = time.perf_counter()
    rng = random.Random(101)
    for trial in range(100):
        d = random_seifert(rng, nonzero_chern=True)
        closed = torsion_order_integer(d)
        snf = first_homology(d).torsion_order()
        if snf != closed:
            failures.append(f"trial {trial}: SNF order {snf} != closed {closed}")
            break
        for n in (1, 2, 3):
            if torsion_h2_order(d, n) != closed**n:
                failures.append(f"trial {trial}: rank {n} power law broken")
                break
    _report("1 torsion-order-cross-derivation", failures, time.perf_counter() - start, 5.0)


def test_criterion_2_dedekind_triple_agreement():
    failures = []
    start = time.perf_counter()
    for alpha in range(1, 501):
        for beta in range(1, alpha + 1):
            if math.gcd(alpha, beta) != 1:
                continue
            exact = dedekind_sum_exact(alpha, beta)
            if dedekind_sum_recursive(alpha, beta) != exact:
                failures.append(f"route mismatch at ({alpha}, {beta})")
                break
            if abs(dedekind_sum_float(alpha, beta) - float(exact)) > 1e-9:
                failures.append(f"float drift at ({alpha}, {beta})")
                break
        if failures:
            break
    rng = random.Random(102)
    quarter = Fraction(-1, 4)
    for _ in range(1000):
        a, b = random_coprime_pair(rng, 10**5, 10**5)
        lhs = dedekind_sum_recursive(a, b) + dedekind_sum_recursive(b, a)
        rhs = quarter + Fraction(a**2 + b**2 + 1, 12 * a * b)
        if lhs != rhs:
            failures.append(f"reciprocity broken at ({a}, {b})")
            break
    _report("2 dedekind-triple-agreement", failures, time.perf_counter() - start, 10.0)


def test_criterion_3_torsion_scalar_identity():
    failures = []
    start = time.perf_counter()
    rng = random.Random(103)
    cases = list(FIXTURES)
    while len(cases) < len(FIXTURES) + 50:
        cases.append(random_seifert(rng, max_alpha=30, nonzero_chern=True))
    for d in cases:
        numeric = k0_deriv0(d).numeric
        shipped = scalar_torsion_trivial(d)
        closed = TWO_PI ** (2 - 2 * d.genus) / d.alpha_product
        if abs(math.exp(-numeric / 2.0) - closed) > 1e-6 * closed:
            failures.append(f"exp(-K0'(0)/2) off at {d}")
            break
        if abs(shipped - closed) > 1e-12 * closed:
            failures.append(f"shipped torsion off at {d}")
            break
    if scalar_torsion_trivial(DATA_UNIT) != TWO_PI**2 / 30.0:
        failures.append("closed form for [0,-1;(2,1),(3,1),(5,1)] not (2pi)^2/30")
    _report("3 torsion-scalar-identity", failures, time.perf_counter() - start, 5.0)


def test_criterion_4_zeta_kernel_accuracy():
    failures = []
    start = time.perf_counter()
    if abs(riemann_zeta(0.0) + 0.5) > 1e-10:
        failures.append("zeta(0) != -1/2")
    if abs(hurwitz_zeta_deriv0(1.0) + math.log(TWO_PI) / 2.0) > 1e-8:
        failures.append("zeta'(0) != -ln(2 pi)/2")
    for s in (-2.0, -1.0, -0.5, 0.0, 0.49, 2.0, 3.0):
        lhs = hurwitz_zeta(s, 0.5)
        rhs = (2.0**s - 1.0) * riemann_zeta(s)
        if abs(lhs - rhs) > 1e-9:
            failures.append(f"half-shift identity off at s = {s}")
            break
    for tenths in range(1, 10):
        theta = tenths / 10.0
        if abs(hurwitz_zeta(0.0, theta) - (0.5 - theta)) > 1e-10:
            failures.append(f"zeta(0, {theta}) != 1/2 - theta")
            break
    _report("4 zeta-kernel-accuracy", failures, time.perf_counter() - start, 1.0)


def test_criterion_5_structural_zero():
    failures = []
    start = time.perf_counter()
    rng = random.Random(105)
    for trial in range(20):
        d = random_seifert(rng, nonzero_chern=True)
        value = k0_function(trivial_rep_k0_params(d), d.alphas, 0.0)
        if abs(value) > 1e-9:
            failures.append(f"trial {trial}: K0(0) = {value:.3e}")
            break
    _report("5 structural-zero-k0", failures, time.perf_counter() - start, 5.0)


def test_criterion_6_volume_identities():
    failures = []
    start = time.perf_counter()
    rng = random.Random(106)
    cases = list(FIXTURES)
    while len(cases) < len(FIXTURES) + 50:
        cases.append(random_seifert(rng, nonzero_chern=True))
    for d in cases:
        for n in (1, 2, 3):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", NegativeChernWarning)
                report = torsion_prefactor(d, n)
            order = torsion_order_integer(d)
            if report.radicand**n != order**n:
                failures.append(f"radicand mismatch at {d}, rank {n}")
                break
            if chern_number(d) > 0:
                count = moduli_description(d, n).component_count
            else:
                count = torsion_h2_order(d, n)
            product = count * report.volume_coefficient
            if abs(product - report.symplectic_volume) > 1e-12 * report.symplectic_volume:
                failures.append(f"count * K_X != volume at {d}, rank {n}")
                break
        if failures:
            break
    _report("6 volume-identities", failures, time.perf_counter() - start, 5.0)


def test_criterion_7_magnitude_equality():
    failures = []
    start = time.perf_counter()
    rng = random.Random(107)
    for d in FIXTURES:
        count = torsion_order_integer(d)
        for _ in range(50):
            k = rng.randint(1, 9)
            cs = tuple(rng.uniform(0.0, 2.0) for _ in range(count))
            inputs = PartitionInputs(d, 1, k, cs)
            direct = partition_magnitude(inputs)
            assembled = abs(zbar_partition_value(inputs))
            scale = max(direct, 1e-300)
            if abs(direct - assembled) > 1e-12 * scale:
                failures.append(f"route mismatch at {d}, k = {k}")
                break
        if failures:
            break
    for k in (1, 4):
        coherent = PartitionInputs(DATA_T24, 1, k, (0.0,) * 24)
        bound = float(k) ** -1 * math.sqrt(24.0)
        if abs(partition_magnitude(coherent) - bound) > 1e-12 * bound:
            failures.append(f"coherent input misses bound at k = {k}")
    roots = tuple(TWO_PI * j / 24.0 for j in range(24))
    if partition_magnitude(PartitionInputs(DATA_T24, 1, 1, roots)) > 1e-12:
        failures.append("24th roots of unity do not cancel")
    _report("7 magnitude-equality", failures, time.perf_counter() - start, 5.0)


def test_criterion_8_eta_pipeline():
    failures = []
    start = time.perf_counter()
    oracle = chern_number(DATA_UNIT) / 6
    for alpha, beta in DATA_UNIT.pairs:
        oracle -= 2 * dedekind_oracle(alpha, beta)
    if adiabatic_eta(DATA_UNIT, 1) != oracle:
        failures.append(f"eta0 != brute-force rational {oracle}")
    rng = random.Random(108)
    samples = [DATA_UNIT, DATA_GENUS1, DATA_T24]
    samples += [random_seifert(rng) for _ in range(10)]
    for d in samples:
        if abs(abs(phase_factor(d, 1)) - 1.0) > 1e-15:
            failures.append(f"phase modulus drifts at {d}")
            break
    _report("8 eta-pipeline", failures, time.perf_counter() - start, 5.0)


def test_criterion_9_cli_contract(tmp_path):
    failures = []
    start = time.perf_counter()
    golden_cases = (
        ("unit_invariants.json", ("invariants", "--data", "[0,-1;(2,1),(3,1),(5,1)]")),
        ("t24_torsion.json", ("torsion", "--data", "[0,2;(3,1),(3,1)]")),
        ("genus1_homology.json", ("homology", "--data", "[1,1]")),
    )
    for name, argv in golden_cases:
        out = io.StringIO()
        code = cli.run([*argv, "--format", "json"], out, io.StringIO())
        if code != 0:
            failures.append(f"{name}: exit {code}")
            continue
        expected = json.loads((GOLDEN / name).read_text())
        actual = json.loads(out.getvalue())
        if not _json_close(expected, actual):
            failures.append(f"{name}: output drifted from pinned golden file")

    err = io.StringIO()
    code = cli.run(["invariants", "--data", "[1,0]"], io.StringIO(), err)
    if code != 3:
        failures.append(f"c1 = 0 input returned exit {code}, want 3")

    lines = []
    for i in range(1000):
        if i % 7 == 3:
            lines.append(f"bad line {i}")
        else:
            # c1 = n + 5/6 + beta/5 with integer n and beta in {1,2,3}
            # never vanishes, so every well-formed row must succeed
            lines.append(f"[0,{i % 5 - 2};(2,1),(3,1),(5,{1 + i % 3})]")
    batch = tmp_path / "batch.txt"
    batch.write_text("\n".join(lines) + "\n")
    out = io.StringIO()
    batch_start = time.perf_counter()
    code = cli.run(["invariants", "--input", str(batch), "--format", "json"], out, io.StringIO())
    batch_elapsed = time.perf_counter() - batch_start
    rows = [json.loads(line) for line in out.getvalue().splitlines()]
    if code != 0:
        failures.append(f"batch exit {code}")
    if len(rows) != 1000:
        failures.append(f"batch emitted {len(rows)} rows for 1000 inputs")
    else:
        for i, row in enumerate(rows):
            if (i % 7 == 3) != ("error" in row):
                failures.append(f"batch row {i} lacks correct error isolation")
                break
    if batch_elapsed >= 2.0:
        failures.append(f"batch took {batch_elapsed:.2f}s, budget 2s")
    _report("9 cli-contract", failures, time.perf_counter() - start, 10.0)


def _json_close(expected, actual) -> bool:
    if isinstance(expected, float):
        return isinstance(actual, float) and math.isclose(
            expected, actual, rel_tol=1e-12, abs_tol=1e-15
        )
    if isinstance(expected, dict):
        return (
            isinstance(actual, dict)
            and expected.keys() == actual.keys()
            and all(_json_close(expected[k], actual[k]) for k in expected)
        )
    if isinstance(expected, list):
        return (
            isinstance(actual, list)
            and len(expected) == len(actual)
            and all(_json_close(e, a) for e, a in zip(expected, actual))
        )
    return expected == actual
