"""Verification suites: every counting formula re-checked against brute force.

Each suite runs a fixed list of named checks at documented desk-scale bounds
and returns a VerifySuiteReport; a suite passes iff all its checks pass.  A
check that raises is reported as a failure, not a crash.  Full-pair censuses
are memoized per process so `verify all` pays for each n only once.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .compositions import Composition, SeaweedType, composition_from_bitmask
from .enumeration import (
    _mask_tables,
    census_c21,
    census_c22,
    census_cnk,
    load_golden,
)
from .formulas import (
    c21,
    c22,
    c_diag1,
    c_diag2,
    c_diag3,
    c_diag3_longform,
    coprime_sum,
    euler_phi,
    gcd_index_2parts,
    gcd_index_3parts,
    identity_audit,
    identity_k2k,
    recursion_check,
    recursion_lhs,
)
from .genfunc import (
    builtin_gfs,
    denominator_power_of_1_minus_2x,
    gf_coefficients,
    gf_coefficients_by_division,
)
from .meander import seaweed_dimension, seaweed_index
from .winding import _wind_homotopy, format_signature, homotopy_index, wind_down

SUITES = ("formulas", "gf", "recursion", "gcd", "winding", "all")

DIAG_CENSUS_MAX_N = 12
LONGFORM_MAX_N = 25
RECURSION_MAX_N = 25
C21_MAX_N = 60
C22_GCD_MAX_N = 40
C22_MEANDER_MAX_N = 14
TOTIENT_SUM_MAX_T = 200
IDENTITY_MAX_N = 30
GF_CLOSED_FORM_ORDER = 30
GF_CROSSCHECK_ORDER = 50
GCD_2PARTS_MAX_N = 40
GCD_3PARTS_MAX_N = 25
WINDING_MAX_N = 10


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    elapsed: float


@dataclass(frozen=True)
class VerifySuiteReport:
    suite: str
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def format(self) -> str:
        lines = []
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"[{mark}] {c.name} ({c.elapsed:.2f}s): {c.detail}")
        status = "passed" if self.passed else "FAILED"
        lines.append(f"suite {self.suite}: {status} "
                     f"({sum(c.passed for c in self.checks)}/{len(self.checks)})")
        return "\n".join(lines)


def _run(checks: list[CheckResult], name: str, fn) -> None:
    start = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as e:  # a broken check is a failed check
        passed, detail = False, f"raised {type(e).__name__}: {e}"
    checks.append(CheckResult(name, passed, detail, time.perf_counter() - start))


_cnk_cache: dict[int, dict[int, int]] = {}


def _cnk(n: int) -> dict[int, int]:
    if n not in _cnk_cache:
        _cnk_cache[n] = census_cnk(n)
    return _cnk_cache[n]


def _mismatches(pairs) -> tuple[bool, str]:
    bad = [f"{label}: expected {want}, got {got}" for label, want, got in pairs
           if want != got]
    if bad:
        return False, f"{len(bad)} mismatch(es); first: {bad[0]}"
    return True, "all equal"


# --- suites -------------------------------------------------------------------


def suite_formulas() -> VerifySuiteReport:
    checks: list[CheckResult] = []

    def diag_check(j, fn, lo):
        def run():
            pairs = [(f"n={n}", fn(n), _cnk(n).get(n - j, 0))
                     for n in range(lo, DIAG_CENSUS_MAX_N + 1)]
            ok, msg = _mismatches(pairs)
            return ok, f"n={lo}..{DIAG_CENSUS_MAX_N} vs full census; {msg}"
        return run

    _run(checks, "diag1 closed form vs census", diag_check(1, c_diag1, 1))
    _run(checks, "diag2 closed form vs census", diag_check(2, c_diag2, 2))
    _run(checks, "diag3 closed form vs census", diag_check(3, c_diag3, 3))

    def longform():
        pairs = [(f"n={n}", c_diag3(n), c_diag3_longform(n))
                 for n in range(3, LONGFORM_MAX_N + 1)]
        ok, msg = _mismatches(pairs)
        return ok, f"n=3..{LONGFORM_MAX_N}; {msg}"

    _run(checks, "diag3 long-form sum vs closed form", longform)

    def c21_brute():
        pairs = []
        for n in range(2, C21_MAX_N + 1):
            brute = census_c21(n)
            for k in range(0, n):
                pairs.append((f"(n={n},k={k})", brute.get(k, 0), c21(n, k)))
        ok, msg = _mismatches(pairs)
        return ok, f"n<=60, all k; {msg}"

    _run(checks, "c21 formula vs gcd brute force", c21_brute)

    def c22_brute():
        pairs = []
        for n in range(2, C22_GCD_MAX_N + 1):
            brute = census_c22(n, oracle="gcd")
            for k in range(0, n):
                pairs.append((f"(n={n},k={k})", brute.get(k, 0), c22(n, k)))
        ok, msg = _mismatches(pairs)
        return ok, f"n<=40, all k; {msg}"

    _run(checks, "c22 formula vs gcd brute force", c22_brute)

    def c22_oracles():
        pairs = [(f"n={n}", census_c22(n, "gcd"), census_c22(n, "meander"))
                 for n in range(2, C22_MEANDER_MAX_N + 1)]
        ok, msg = _mismatches(pairs)
        return ok, f"n<=14; {msg}"

    _run(checks, "c22 gcd oracle vs meander oracle", c22_oracles)

    def totient_sum():
        pairs = [(f"t={t}", t * euler_phi(t), 2 * coprime_sum(t))
                 for t in range(3, TOTIENT_SUM_MAX_T + 1)]
        ok, msg = _mismatches(pairs)
        return ok, f"sum of coprimes below t is t*phi(t)/2, t=3..200; {msg}"

    _run(checks, "coprime-sum totient identity", totient_sum)

    def ident1():
        bad = [n for n in range(1, IDENTITY_MAX_N + 1) if not identity_k2k(n)]
        return not bad, f"sum (n-k)2^k == 2^(n+1)-2n-2 for n=1..30; failures: {bad}"

    _run(checks, "aux identity 1 exact", ident1)

    def ident2():
        rows = identity_audit(IDENTITY_MAX_N)
        first_bad = next((r.n for r in rows if not r.stated_ok), None)
        fitted_ok = all(r.fitted_ok for r in rows)
        expected = first_bad == 2 and fitted_ok
        detail = (
            "stated RHS 4-3*2^n+n*2^n "
            + ("never fails" if first_bad is None else f"first fails at n={first_bad}")
            + f" (n=2: lhs={rows[1].lhs}, stated rhs={rows[1].rhs_stated}); "
            + f"fitted RHS (n-3)*2^n+n+3 matches n=1..30: {fitted_ok}"
        )
        return expected, detail

    _run(checks, "aux identity 2 audit (stated form fails)", ident2)
    return VerifySuiteReport("formulas", tuple(checks))


def suite_gf() -> VerifySuiteReport:
    checks: list[CheckResult] = []
    gfs = builtin_gfs()
    closed = {1: (c_diag1, 1), 2: (c_diag2, 2), 3: (c_diag3, 3)}

    def denoms():
        pairs = [(f"gf{j}", j, denominator_power_of_1_minus_2x(gfs[j]))
                 for j in gfs]
        return _mismatches(pairs)

    _run(checks, "denominators are (1-2x)^j", denoms)

    for j in (1, 2, 3):
        def against_closed(j=j):
            fn, lo = closed[j]
            coeffs = gf_coefficients(gfs[j], GF_CLOSED_FORM_ORDER)
            pairs = [(f"x^{n}", fn(n), coeffs[n])
                     for n in range(lo, GF_CLOSED_FORM_ORDER + 1)]
            pairs += [(f"x^{n}", 0, coeffs[n]) for n in range(0, lo)]
            ok, msg = _mismatches(pairs)
            return ok, f"orders 0..{GF_CLOSED_FORM_ORDER}; {msg}"

        _run(checks, f"diag{j} series vs closed form", against_closed)

    def crosscheck():
        pairs = [(f"gf{j}", gf_coefficients(gfs[j], GF_CROSSCHECK_ORDER),
                  gf_coefficients_by_division(gfs[j], GF_CROSSCHECK_ORDER))
                 for j in gfs]
        ok, msg = _mismatches(pairs)
        return ok, f"recurrence vs long division to order {GF_CROSSCHECK_ORDER}; {msg}"

    _run(checks, "two extraction methods agree", crosscheck)

    def vs_golden():
        golden = load_golden("cnk")
        pairs = []
        for j in (1, 2, 3):
            coeffs = gf_coefficients(gfs[j], 10)
            lo = closed[j][1]
            for n in range(lo, 11):
                pairs.append((f"(j={j},n={n})", golden.cell(n, n - j), coeffs[n]))
        ok, msg = _mismatches(pairs)
        return ok, f"series vs reference table diagonals, n<=10; {msg}"

    _run(checks, "series vs reference table", vs_golden)
    return VerifySuiteReport("gf", tuple(checks))


def suite_recursion() -> VerifySuiteReport:
    checks: list[CheckResult] = []

    def recur():
        bad = [n for n in range(1, RECURSION_MAX_N + 1) if not recursion_check(n)]
        return not bad, f"n=1..{RECURSION_MAX_N}; failures: {bad}"

    _run(checks, "third-diagonal recursion exact", recur)

    def anchor():
        pairs = [("n=1", 226, recursion_lhs(1)), ("n=2", 600, recursion_lhs(2))]
        return _mismatches(pairs)

    _run(checks, "recursion anchor values", anchor)
    return VerifySuiteReport("recursion", tuple(checks))


def suite_gcd() -> VerifySuiteReport:
    checks: list[CheckResult] = []

    def two_parts():
        pairs = []
        for n in range(2, GCD_2PARTS_MAX_N + 1):
            whole = Composition((n,))
            for a in range(1, n):
                st = SeaweedType(Composition((a, n - a)), whole)
                pairs.append((f"{a}|{n - a}/{n}", gcd_index_2parts(a, n - a),
                              seaweed_index(st)))
        ok, msg = _mismatches(pairs)
        return ok, f"a+b<=40 ({len(pairs)} types); {msg}"

    _run(checks, "two parts over one vs meander", two_parts)

    def three_parts():
        pairs = []
        for n in range(3, GCD_3PARTS_MAX_N + 1):
            whole = Composition((n,))
            for a in range(1, n - 1):
                for b in range(1, n - a):
                    c = n - a - b
                    want = gcd_index_3parts(a, b, c)
                    st = SeaweedType(Composition((a, b, c)), whole)
                    pairs.append((f"{a}|{b}|{c}/{n}", want, seaweed_index(st)))
        ok, msg = _mismatches(pairs)
        return ok, f"a+b+c<=25 ({len(pairs)} types); {msg}"

    _run(checks, "three parts over one vs meander", three_parts)

    def two_over_two():
        pairs = []
        for n in range(3, GCD_3PARTS_MAX_N + 1):
            for a in range(1, n):
                b = n - a
                for c in range(1, n):
                    want = gcd_index_3parts(a, b, c)
                    st = SeaweedType(Composition((a, b)),
                                     Composition((c, n - c)))
                    pairs.append((f"{a}|{b}/{c}|{n - c}", want, seaweed_index(st)))
        ok, msg = _mismatches(pairs)
        return ok, f"two parts over two, n<=25 ({len(pairs)} types); {msg}"

    _run(checks, "two parts over two vs meander", two_over_two)
    return VerifySuiteReport("gcd", tuple(checks))


def suite_winding() -> VerifySuiteReport:
    checks: list[CheckResult] = []

    def agreement():
        total = 0
        for n in range(1, WINDING_MAX_N + 1):
            partners, arcs = _mask_tables(n)
            half = 1 << (n - 1)
            parts = [composition_from_bitmask(n, m).parts for m in range(half)]
            for tmask in range(half):
                T = partners[tmask]
                tp = parts[tmask]
                base = arcs[tmask] - n - 1
                for bmask in range(half):
                    B = partners[bmask]
                    vis = 0
                    K = 0
                    for v in range(n):
                        if vis >> v & 1:
                            continue
                        K += 1
                        vis |= 1 << v
                        for lay, oth in ((T, B), (B, T)):
                            cur = v
                            while True:
                                nxt = lay[cur]
                                if nxt == cur:
                                    break
                                bit = 1 << nxt
                                if vis & bit:
                                    break
                                vis |= bit
                                cur = nxt
                                lay, oth = oth, lay
                    graph_index = 2 * K + arcs[bmask] + base
                    comps = _wind_homotopy(tp, parts[bmask])
                    wind_index = (sum(2 * (c // 2) for c in comps)
                                  + sum(c % 2 for c in comps) - 1)
                    if graph_index != wind_index:
                        return False, (
                            f"pair (n={n}, {tmask}, {bmask}): graph {graph_index} "
                            f"!= winding {wind_index}"
                        )
                    total += 1
        return True, f"all {total} pairs with n<=10 agree"

    _run(checks, "winding index equals graph index", agreement)

    def worked_example():
        st = SeaweedType(Composition((15,)), Composition((2, 5, 1, 5, 2)))
        sig, h = wind_down(st)
        pairs = [
            ("signature", "PPC(1)C(5)C(2)", format_signature(sig)),
            ("homotopy", "H(1,5,2)", str(h)),
            ("index", 7, homotopy_index(h)),
        ]
        return _mismatches(pairs)

    _run(checks, "worked 15-vertex example", worked_example)

    def finer_than_index():
        s1 = SeaweedType(Composition((5, 3)), Composition((3, 3, 2)))
        s2 = SeaweedType(Composition((4, 4)), Composition((2, 4, 2)))
        _, h1 = wind_down(s1)
        _, h2 = wind_down(s2)
        pairs = [
            ("h1", "H(1,1)", str(h1)),
            ("h2", "H(2)", str(h2)),
            ("index1", 1, seaweed_index(s1)),
            ("index2", 1, seaweed_index(s2)),
            ("dim1", 27, seaweed_dimension(s1)),
            ("dim2", 27, seaweed_dimension(s2)),
            ("distinct homotopy", True, h1 != h2),
        ]
        return _mismatches(pairs)

    _run(checks, "equal index, distinct homotopy witness", finer_than_index)

    def same_composition():
        for n in range(1, 11):
            for mask in range(1 << (n - 1)):
                p = composition_from_bitmask(n, mask).parts
                if _wind_homotopy(p, p) != p:
                    return False, f"p/p gave {_wind_homotopy(p, p)} for parts {p}"
        return True, "wind(p/p) returns the parts of p, n<=10"

    _run(checks, "same-composition homotopy", same_composition)
    return VerifySuiteReport("winding", tuple(checks))


def suite_all() -> VerifySuiteReport:
    checks: list[CheckResult] = []
    for suite in (suite_formulas, suite_gf, suite_recursion, suite_gcd,
                  suite_winding):
        report = suite()
        for c in report.checks:
            checks.append(CheckResult(f"{report.suite}: {c.name}", c.passed,
                                      c.detail, c.elapsed))
    return VerifySuiteReport("all", tuple(checks))


def run_suite(name: str) -> VerifySuiteReport:
    table = {
        "formulas": suite_formulas,
        "gf": suite_gf,
        "recursion": suite_recursion,
        "gcd": suite_gcd,
        "winding": suite_winding,
        "all": suite_all,
    }
    if name not in table:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return table[name]()
