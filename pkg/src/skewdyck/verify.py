"""Cross-verification suite: every computational route against every other.

Each check compares two independently computed objects (brute force,
automaton, kernel series, algebraic solver, recurrence, ODE,
asymptotics, vendored golden values) and returns a pass/fail record.
The CLI `verify` subcommand runs them in a fixed order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List

from . import asymptotics, automaton, cubics, golden, holonomic, kernel, paths
from .rings import QT, TPoly
from .series import ZSeries


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _histogram_poly(counter) -> TPoly:
    if not counter:
        return TPoly()
    coeffs = [0] * (max(counter) + 1)
    for j, c in counter.items():
        coeffs[j] = c
    return TPoly(coeffs)


def check_dp_vs_oracle(depth: int = 14) -> CheckResult:
    """Automaton marker polynomials equal brute-force histograms for all
    lengths up to `depth` and all end levels."""
    depth = min(depth, paths.ORACLE_CAP)
    hist = paths.udr_profile(depth)
    for m in range(depth + 1):
        state = automaton.run(m)
        by_level = {}
        for (layer, level), w in state.items():
            by_level[level] = by_level.get(level, TPoly()) + w
        expected = {lvl: _histogram_poly(c) for lvl, c in hist[m].items()}
        if {k: v for k, v in by_level.items() if v} != {k: v for k, v in expected.items() if v}:
            return CheckResult("dp-vs-oracle", False, f"mismatch at length {m}")
    return CheckResult("dp-vs-oracle", True, f"all lengths <= {depth}")


def check_kernel_residual(order: int = 64) -> CheckResult:
    for mode in kernel.GFMode:
        root = kernel.kernel_root(order, mode)
        if not kernel.kernel_residual(root).is_zero():
            return CheckResult("kernel-residual", False, f"nonzero residual in {mode.value} mode")
    return CheckResult("kernel-residual", True, f"both modes, mod z^{order}")


def check_kernel_root_display() -> CheckResult:
    want = golden.utilde_display()
    got = kernel.kernel_root(len(want), kernel.GFMode.UNIVARIATE).utilde.integer_coefficients()
    ok = got == want
    return CheckResult("kernel-root-display", ok, "" if ok else f"got {got}")


def check_series_vs_golden() -> CheckResult:
    want = golden.a128729_terms()
    got = cubics.avoidance_series(len(want)).integer_coefficients()
    if got != want:
        return CheckResult("series-vs-golden", False, f"solver {got[:10]}... vs golden")
    display = golden.level0_display()
    if got[: len(display)] != display:
        return CheckResult("series-vs-golden", False, "display mismatch")
    return CheckResult("series-vs-golden", True, f"{len(want)} terms")


def check_bivariate_vs_golden() -> CheckResult:
    rows = golden.a128728_rows()
    series = cubics.marker_series(len(rows)).integer_coefficients()
    got = [list(c.coeffs) if c.coeffs else [0] for c in series]
    want = [r for r in rows]
    ok = got == want and got[:7] == golden.bivariate_display_rows()
    return CheckResult("bivariate-vs-golden", ok, "" if ok else f"got {got}")


def check_level_gfs(max_level: int = 6, depth: int = 16) -> CheckResult:
    """Kernel-method level series against the automaton, marker-tracked
    and with the pattern forbidden."""
    for k in range(max_level + 1):
        gf = kernel.level_gf(k, depth + 1, kernel.GFMode.BIVARIATE)
        for m in range(depth + 1):
            want = automaton.count(m, k, automaton.Mode.TRACK)
            if gf.coefficient(m) != want:
                return CheckResult("level-gf-vs-dp", False, f"k={k} m={m}")
        forb = kernel.level_gf(k, depth + 1, kernel.GFMode.UNIVARIATE)
        for m in range(depth + 1):
            if forb.coefficient(m) != automaton.count(m, k, automaton.Mode.FORBID):
                return CheckResult("level-gf-vs-dp", False, f"forbid k={k} m={m}")
    return CheckResult("level-gf-vs-dp", True, f"k <= {max_level}, m <= {depth}")


def check_half_length_collapse(order: int = 24) -> CheckResult:
    lvl0 = kernel.level_gf(0, 2 * order, kernel.GFMode.UNIVARIATE).compress_even()
    if not lvl0.agrees_with(cubics.avoidance_series(order)):
        return CheckResult("half-length-collapse", False, "avoidance series mismatch")
    lvl0t = kernel.level_gf(0, 2 * order, kernel.GFMode.BIVARIATE).compress_even()
    if not lvl0t.agrees_with(cubics.marker_series(order)):
        return CheckResult("half-length-collapse", False, "marker series mismatch")
    return CheckResult("half-length-collapse", True, f"both modes, {order} half-length terms")


def check_transformed_cubic(order: int = 30) -> CheckResult:
    s = cubics.avoidance_series(order)
    r = cubics.transformed_cubic().apply(s)
    ok = r.is_zero()
    return CheckResult("transformed-cubic", ok, f"residual mod Z^{order}" if ok else "nonzero residual")


def check_recurrence(n_max: int = 200) -> CheckResult:
    seq = holonomic.extend([1, 1, 2, 6], n_max)
    solver = cubics.avoidance_series(n_max + 1).integer_coefficients()
    if seq != solver:
        first = next(i for i, (a, b) in enumerate(zip(seq, solver)) if a != b)
        return CheckResult("recurrence-vs-solver", False, f"first mismatch at n={first}")
    if any(holonomic.recurrence_residual(seq)):
        return CheckResult("recurrence-vs-solver", False, "nonzero residual")
    return CheckResult("recurrence-vs-solver", True, f"agreement to n={n_max}")


def check_ode(order: int = 30) -> CheckResult:
    r = holonomic.ode_residual(cubics.avoidance_series(order))
    ok = r.is_zero()
    return CheckResult("ode-residual", ok, f"zero mod z^{order - 2}" if ok else "nonzero residual")


def check_boundary_identity(order: int = 20) -> CheckResult:
    for mode in kernel.GFMode:
        if not kernel.check_identity_total(order, mode):
            return CheckResult("boundary-identity", False, f"{mode.value} mode")
    return CheckResult("boundary-identity", True, f"both modes, mod z^{order}")


def check_asymptotics(n_top: int = 1600) -> CheckResult:
    try:
        asymptotics.constants(recheck=True)
    except AssertionError as exc:
        return CheckResult("asymptotics", False, str(exc))
    coeffs = holonomic.extend([1, 1, 2, 6], n_top)
    ratio_1000 = asymptotics.coefficient_ratio(1000, coeffs)
    if not 0.99 <= ratio_1000 <= 1.01:
        return CheckResult("asymptotics", False, f"ratio at n=1000 is {ratio_1000}")
    ns = [n for n in (50, 100, 200, 400, 800, 1600) if n <= n_top]
    devs = [abs(asymptotics.coefficient_ratio(n, coeffs) - 1.0) for n in ns]
    if any(b >= a for a, b in zip(devs, devs[1:])):
        return CheckResult("asymptotics", False, f"deviations not shrinking: {devs}")
    return CheckResult("asymptotics", True, f"ratio(1000)={ratio_1000:.6f}")


CHECKS: List[Callable[[], CheckResult]] = [
    check_dp_vs_oracle,
    check_kernel_residual,
    check_kernel_root_display,
    check_series_vs_golden,
    check_bivariate_vs_golden,
    check_level_gfs,
    check_half_length_collapse,
    check_transformed_cubic,
    check_recurrence,
    check_ode,
    check_boundary_identity,
    check_asymptotics,
]


def run_all(oracle_depth: int = 14) -> List[CheckResult]:
    results = []
    for fn in CHECKS:
        if fn is check_dp_vs_oracle:
            results.append(fn(oracle_depth))
        else:
            results.append(fn())
    return results
