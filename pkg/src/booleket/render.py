"""Text, JSON and LaTeX renderings of kets, projectors and reports.

Every renderer returns a string without a trailing newline.  JSON payloads
hold amplitudes and polynomials as exact literals so they parse back to
identical values.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .circuit import BellState, bell_closed_form
from .exactnum import AmplitudeQ2, format_amplitude
from .matrix import Matrix
from .polyring import Polynomial, format_polynomial
from .qudit import Ket, SymbolicKet, SymbolicProjector, Superposition
from .verify import VerifyReport

__all__ = [
    "FORMATS",
    "approx",
    "latex_rational",
    "latex_amplitude",
    "latex_polynomial",
    "render_ket",
    "render_symbolic_ket",
    "render_matrix",
    "render_symbolic_projector",
    "render_bell",
    "render_superposition",
    "render_report",
]

FORMATS = ("text", "json", "latex")


def approx(value: AmplitudeQ2) -> str:
    """Decimal display of an amplitude; never used for comparisons."""
    z = complex(value)
    if z.imag == 0:
        return f"{z.real:.10g}"
    if z.real == 0:
        return f"{z.imag:.10g}i"
    return f"{z.real:.10g}{z.imag:+.10g}i"


def _tuple(items: Iterable[str]) -> str:
    return "(" + ", ".join(items) + ")"


def _dumps(payload) -> str:
    return json.dumps(payload, indent=2)


# -- LaTeX pieces -----------------------------------------------------------

def latex_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def latex_amplitude(v: AmplitudeQ2) -> str:
    out = []
    for coeff, unit in ((v.a, ""), (v.ai, "i"), (v.b, "\\sqrt{2}"), (v.bi, "i\\sqrt{2}")):
        if not coeff:
            continue
        mag = abs(coeff)
        body = latex_rational(mag) if (mag != 1 or not unit) else ""
        term = body + unit
        if coeff < 0:
            out.append("-" + term)
        else:
            out.append(("+" if out else "") + term)
    return "".join(out) or "0"


def latex_polynomial(p: Polynomial) -> str:
    terms = []
    for n in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[n]
        if not c:
            continue
        mag = abs(c)
        var = "" if n == 0 else ("x" if n == 1 else f"x^{{{n}}}")
        body = latex_rational(mag) if (mag != 1 or not var) else ""
        sign = "-" if c < 0 else ("+" if terms else "")
        terms.append(sign + body + var)
    return "".join(terms) or "0"


def _pmatrix(rows: Sequence[Sequence[str]], prefactor: str = "") -> str:
    body = "\\\\\n".join(" & ".join(r) for r in rows)
    return f"{prefactor}\\begin{{pmatrix}}\n{body}\n\\end{{pmatrix}}"


def _sqrt2_factor(values: Sequence[AmplitudeQ2]) -> Optional[list[Fraction]]:
    """Coefficients ``c`` with ``v = c / sqrt2`` when every entry has that form."""
    if not any(v.b for v in values):
        return None
    if any(v.a or v.ai or v.bi for v in values):
        return None
    return [2 * v.b for v in values]


def _factored_row(coeff: int, factors: list[str]) -> str:
    if not factors:
        return str(coeff)
    if coeff == 1 and len(factors) == 1:
        return factors[0].strip("()")
    lead = "" if coeff == 1 else str(coeff)
    return lead + "".join(factors)


def _symbolic_prefactor(den: int) -> str:
    return "" if den == 1 else f"\\frac{{1}}{{{den}}}"


# -- kets -------------------------------------------------------------------

def render_ket(ket: Ket, fmt: str, x: Optional[int] = None, with_approx: bool = False) -> str:
    if fmt == "text":
        out = _tuple(format_amplitude(v) for v in ket)
        if with_approx:
            out += "\n~ " + _tuple(approx(v) for v in ket)
        return out
    if fmt == "json":
        payload = {"d": ket.d, "x": x, "entries": [format_amplitude(v) for v in ket]}
        if with_approx:
            payload["approx"] = [approx(v) for v in ket]
        return _dumps(payload)
    if fmt == "latex":
        return _latex_vector(list(ket), with_approx)
    raise ValueError(f"unknown format {fmt!r}")


def _latex_vector(values: Sequence[AmplitudeQ2], with_approx: bool = False) -> str:
    scaled = _sqrt2_factor(values)
    if scaled is not None:
        out = _pmatrix([[latex_rational(c)] for c in scaled], "\\frac{1}{\\sqrt{2}}")
    else:
        out = _pmatrix([[latex_amplitude(v)] for v in values])
    if with_approx:
        out += "\n% approx: " + _tuple(approx(v) for v in values)
    return out


def render_symbolic_ket(sk: SymbolicKet, fmt: str) -> str:
    if fmt == "text":
        return _tuple(format_polynomial(p) for p in sk.entries)
    if fmt == "json":
        return _dumps({"d": sk.d, "x": None,
                       "entries": [format_polynomial(p) for p in sk.entries]})
    if fmt == "latex":
        den, rows = sk.factored()
        return _pmatrix([[_factored_row(c, f)] for c, f in rows], _symbolic_prefactor(den))
    raise ValueError(f"unknown format {fmt!r}")


# -- matrices ---------------------------------------------------------------

def _text_matrix(m: Matrix) -> str:
    if m.is_diagonal():
        return "diag" + _tuple(format_amplitude(v) for v in m.diagonal())
    return "\n".join("[" + ", ".join(format_amplitude(v) for v in row) + "]" for row in m)


def render_matrix(m: Matrix, fmt: str, d: Optional[int] = None, x: Optional[int] = None,
                  with_approx: bool = False, extra: Optional[dict] = None) -> str:
    if fmt == "text":
        out = _text_matrix(m)
        if with_approx:
            out += "\n~ " + "; ".join(", ".join(approx(v) for v in row) for row in m)
        return out
    if fmt == "json":
        payload = {"d": m.dim if d is None else d, "x": x,
                   "entries": [[format_amplitude(v) for v in row] for row in m]}
        payload.update(extra or {})
        if with_approx:
            payload["approx"] = [[approx(v) for v in row] for row in m]
        return _dumps(payload)
    if fmt == "latex":
        flat = [v for row in m for v in row]
        scaled = _sqrt2_factor(flat)
        if scaled is not None:
            n = m.shape[1]
            cells = [latex_rational(c) for c in scaled]
            out = _pmatrix([cells[i:i + n] for i in range(0, len(cells), n)],
                           "\\frac{1}{\\sqrt{2}}")
        else:
            out = _pmatrix([[latex_amplitude(v) for v in row] for row in m])
        if with_approx:
            out += "\n% approx: " + "; ".join(", ".join(approx(v) for v in row) for row in m)
        return out
    raise ValueError(f"unknown format {fmt!r}")


def render_symbolic_projector(sp: SymbolicProjector, fmt: str) -> str:
    if fmt == "text":
        return "diag" + _tuple(format_polynomial(p) for p in sp.diagonal)
    if fmt == "json":
        return _dumps({"d": sp.d, "x": None,
                       "diagonal": [format_polynomial(p) for p in sp.diagonal],
                       "trace": format_polynomial(sp.trace())})
    if fmt == "latex":
        den, rows = SymbolicKet(sp.d, sp.diagonal).factored()
        cells = [[_factored_row(*rows[i]) if i == j else "0" for j in range(sp.d)]
                 for i in range(sp.d)]
        return _pmatrix(cells, _symbolic_prefactor(den))
    raise ValueError(f"unknown format {fmt!r}")


# -- Bell, superposition, verify --------------------------------------------

def render_bell(state: BellState, fmt: str, with_approx: bool = False) -> str:
    closed = bell_closed_form(state.x, state.y)
    matches = state.ket == closed
    if fmt == "text":
        lines = [
            f"B{state.x}{state.y} ({state.name})",
            "circuit:     " + _tuple(format_amplitude(v) for v in state.ket),
            "closed form: " + _tuple(format_amplitude(v) for v in closed),
            f"matches_closed_form: {str(matches).lower()}",
        ]
        if with_approx:
            lines.append("~ " + _tuple(approx(v) for v in state.ket))
        return "\n".join(lines)
    if fmt == "json":
        payload = {"x": state.x, "y": state.y,
                   "entries": [format_amplitude(v) for v in state.ket],
                   "closed_form": [format_amplitude(v) for v in closed],
                   "matches_closed_form": matches,
                   "name": state.name}
        if with_approx:
            payload["approx"] = [approx(v) for v in state.ket]
        return _dumps(payload)
    if fmt == "latex":
        return f"|B_{{{state.x}{state.y}}}\\rangle = " + _latex_vector(list(state.ket), with_approx)
    raise ValueError(f"unknown format {fmt!r}")


def render_superposition(s: Superposition, fmt: str, with_approx: bool = False) -> str:
    norm = s.norm_sq()
    if fmt == "text":
        lines = ["amplitudes: " + _tuple(format_amplitude(a) for a in s.amplitudes),
                 f"norm_sq: {format_amplitude(norm)}",
                 f"normalized: {str(s.is_normalized()).lower()}"]
        if with_approx:
            lines.append("~ " + _tuple(approx(a) for a in s.amplitudes))
        return "\n".join(lines)
    if fmt == "json":
        payload = {"d": s.d, "amplitudes": [format_amplitude(a) for a in s.amplitudes],
                   "norm_sq": format_amplitude(norm), "normalized": s.is_normalized()}
        if with_approx:
            payload["approx"] = [approx(a) for a in s.amplitudes]
        return _dumps(payload)
    if fmt == "latex":
        terms = []
        for x, a in enumerate(s.amplitudes):
            if a.is_zero():
                continue
            coeff = latex_amplitude(a)
            if not a.is_rational() and sum(1 for c in a.parts() if c) > 1:
                coeff = f"\\left({coeff}\\right)"
            elif a == 1:
                coeff = ""
            elif a == -1:
                coeff = "-"
            sep = "" if not terms or coeff.startswith("-") else "+"
            terms.append(f"{sep}{coeff}|{x}\\rangle")
        out = "".join(terms) or "0"
        out += f"\\quad \\sum_x |a_x|^2 = {latex_amplitude(norm)}"
        return out
    raise ValueError(f"unknown format {fmt!r}")


def render_report(report: VerifyReport, fmt: str) -> str:
    if fmt == "json":
        return _dumps({"d_range": list(report.d_range),
                       "checks": [{"name": c.name, "d": c.d, "passed": c.passed,
                                   "witness": c.witness} for c in report.checks],
                       "overall": report.overall})
    if fmt in ("text", "latex"):
        lines = []
        for c in report.checks:
            where = f"d={c.d}" if c.d is not None else "bell"
            lines.append(f"{'PASS' if c.passed else 'FAIL'} {c.name} [{where}] {c.witness}")
        lo, hi = report.d_range
        n_fail = len(report.failures())
        lines.append(f"overall: {'PASS' if report.overall else 'FAIL'} "
                     f"({len(report.checks) - n_fail}/{len(report.checks)} checks, d={lo}..{hi})")
        return "\n".join(lines)
    raise ValueError(f"unknown format {fmt!r}")

