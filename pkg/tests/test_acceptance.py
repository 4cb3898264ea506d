"""Exit criteria for the library, all checked exactly (tolerance zero).

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary under "acceptance criteria".
"""
import functools
import itertools
import json
import random
import time
from fractions import Fraction

import pytest
import sympy

from booleket.circuit import (
    bell_closed_form,
    bell_state,
    cnot,
    gate_tensor,
    hadamard,
    identity,
    printed_bell_matrix,
)
from booleket.cli import main
from booleket.exactnum import ONE, ZERO, AmplitudeQ2, format_amplitude, parse_amplitude
from booleket.matrix import Matrix
from booleket.polyring import (
    Polynomial,
    boole_poly,
    format_polynomial,
    lagrange_component,
    poly_divmod,
    poly_eval,
    reduce_mod_boole,
)
from booleket.qudit import (
    basis_ket,
    completeness_sum,
    inner_product,
    projector,
    symbolic_ket,
    symbolic_projector,
)

from conftest import ACCEPTANCE_RESULTS, GOLDEN_DIR
from test_cli import GOLDEN_COMMANDS

F = Fraction
x = sympy.Symbol("x")


def criterion(name):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                detail = fn(*args, **kwargs) or ""
            except BaseException as exc:
                ACCEPTANCE_RESULTS[name] = (False, f"{type(exc).__name__}: {exc}")
                raise
            ACCEPTANCE_RESULTS[name] = (True, detail)
        return run
    return wrap


def expand(expr):
    """Displayed factored form -> Polynomial, expanded independently by sympy."""
    coeffs = sympy.Poly(sympy.expand(expr), x).all_coeffs()
    return Polynomial(F(int(c.p), int(c.q)) for c in reversed(coeffs))


def delta(i, j):
    return 1 if i == j else 0


@criterion("1 qubit reproduction")
def test_qubit_reproduction():
    want = [expand(1 - x), expand(x)]
    assert list(symbolic_ket(2).entries) == want
    sp = symbolic_projector(2)
    assert list(sp.diagonal) == want
    assert sp.matrix() == ((want[0], Polynomial()), (Polynomial(), want[1]))
    assert [format_polynomial(p) for p in want] == ["-x + 1", "x"]
    assert list(basis_ket(2, 0)) == [1, 0]
    assert list(basis_ket(2, 1)) == [0, 1]
    return "ket (1-x, x), P = diag(1-x, x), |0> = (1,0), |1> = (0,1)"


@criterion("2 qutrit reproduction")
def test_qutrit_reproduction():
    half = sympy.Rational(1, 2)
    want = [expand(half * (1 - x) * (2 - x)),
            expand(half * 2 * x * (2 - x)),
            expand(half * x * (x - 1))]
    assert list(symbolic_ket(3).entries) == want
    assert list(symbolic_projector(3).diagonal) == want
    for m in range(3):
        assert projector(3, m) == Matrix.diag([delta(m, i) for i in range(3)])
    assert boole_poly(3).poly == expand(x * (x - 1) * (x - 2))
    assert boole_poly(3).poly == Polynomial([0, 2, -3, 1])
    return "ket, P(0..2), boole_poly(3) = x^3 - 3x^2 + 2x"


@criterion("3 qudit d=4 reproduction")
def test_qudit4_reproduction():
    sixth = sympy.Rational(1, 6)
    displayed = [sixth * (1 - x) * (2 - x) * (3 - x),
                 sixth * 3 * x * (2 - x) * (3 - x),
                 sixth * 3 * x * (x - 1) * (3 - x),
                 sixth * x * (x - 1) * (2 - x)]
    entries = symbolic_ket(4).entries
    for k in range(3):
        assert entries[k] == expand(displayed[k])
    # The displayed last row x(x-1)(2-x)/6 equals -1 at x = 3, so it cannot be
    # the basis component.  The general product formula for the last row,
    # (0-x)(1-x)(2-x) / ((-1)^3 3!), fixes the sign.
    assert poly_eval(expand(displayed[3]), 3) == -1
    general_last = (0 - x) * (1 - x) * (2 - x) / (-1) ** 3 / sympy.factorial(3)
    assert entries[3] == expand(general_last) == -expand(displayed[3])
    assert completeness_sum(4) == Matrix.identity(4)
    assert symbolic_projector(4).trace() == Polynomial([1])
    return "rows 1-3 as displayed, row 4 by the general formula; sum P = I_4; Tr P = 1"


@criterion("4 general-d identity sweep (d=1..16, < 5 s)")
def test_general_sweep():
    start = time.perf_counter()
    for d in range(1, 17):
        ls = [lagrange_component(d, k) for k in range(d)]
        total = Polynomial()
        for k, p in enumerate(ls):
            assert p.degree == d - 1
            assert [poly_eval(p, m) for m in range(d)] == [delta(k, m) for m in range(d)]
            assert reduce_mod_boole(p * p, d) == p
            for j in range(k + 1, d):
                assert reduce_mod_boole(p * ls[j], d).is_zero()
            total = total + p
        assert total == Polynomial([1])
        assert completeness_sum(d) == Matrix.identity(d)
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    return f"{elapsed:.2f} s"


@criterion("5 Bell suite")
def test_bell_suite():
    for bx, by in itertools.product((0, 1), repeat=2):
        assert bell_state(bx, by).ket == bell_closed_form(bx, by)
    built = cnot() @ gate_tensor(hadamard(), identity(2))
    assert built == printed_bell_matrix()
    s2 = AmplitudeQ2(b=F(1, 2))
    printed = [[1, 0, 1, 0], [0, 1, 0, 1], [0, 1, 0, -1], [1, 0, -1, 0]]
    assert built == Matrix([[s2 * v for v in row] for row in printed])
    pairs = list(itertools.product((0, 1), repeat=2))
    n = 0
    for s, t in itertools.product(pairs, pairs):
        assert inner_product(bell_state(*s).ket, bell_state(*t).ket) == (ONE if s == t else ZERO)
        n += 1
    assert n == 16
    return "4 circuit = closed form, CNOT(H x I) = displayed matrix, 16 inner products"


@criterion("6 oracle equivalence (d <= 16)")
def test_oracle_equivalence():
    count = 0
    for d in range(1, 17):
        for m in range(d):
            direct = [1 if i == m else 0 for i in range(d)]
            assert list(basis_ket(d, m)) == direct
            count += 1
    return f"{count} kets"


@criterion("7 round trips (1000 amplitudes, 1000 divmod pairs)")
def test_round_trips():
    rng = random.Random(20261019)

    def rational():
        return F(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))

    for _ in range(1000):
        v = AmplitudeQ2(*(rational() if rng.random() < 0.8 else 0 for _ in range(4)))
        assert parse_amplitude(format_amplitude(v)) == v

    for _ in range(1000):
        num = Polynomial(rational() for _ in range(rng.randint(0, 13)))
        den = Polynomial(rational() for _ in range(rng.randint(1, 13)))
        if den.is_zero():
            den = Polynomial([1])
        q, r = poly_divmod(num, den)
        assert q * den + r == num
        assert r.degree < den.degree
    return "exact"


@criterion("8 CLI contract")
def test_cli_contract(capsys):
    assert main(["verify", "--max-d", "16"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1].startswith("overall: PASS")

    for name, argv in GOLDEN_COMMANDS.items():
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        assert capsys.readouterr().out == first
        assert first == (GOLDEN_DIR / name).read_text(encoding="utf-8"), name

    for argv in (["basis", "--d", "3", "--x", "5"],
                 ["projector", "--d", "0", "--x", "0"],
                 ["bell", "--x", "2", "--y", "0"],
                 ["verify", "--max-d", "100000"]):
        assert main(argv) == 2
        captured = capsys.readouterr()
        assert captured.out == "" and captured.err

    assert main(["bell", "--x", "0", "--y", "0", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["entries"] == ["1/2s2", "0", "0", "1/2s2"]
    return f"verify exit 0, {len(GOLDEN_COMMANDS)} golden renderings stable, range errors exit 2"
