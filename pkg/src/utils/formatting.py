"""
Canonical, deterministic text for rationals, polynomials and series.
"""
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from src.algebra.polynomial import Monomial, PolyElement
from src.algebra.ring import RingDescriptor

SERIES_VARIABLES = {1: ("x",), 2: ("u", "v"), 3: ("x", "y", "z")}


def format_rational(q) -> str:
    """Always "p/q", lowest terms, sign on the numerator."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _plain_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def monomial_sort_key(mono: Monomial, ring: RingDescriptor) -> Tuple[int, Tuple[int, ...]]:
    """Graded lexicographic: heavier first, then larger exponent vector first."""
    return (-mono.weight(ring), tuple(-e for e in mono.dense(len(ring.variables))))


def format_monomial(mono: Monomial, ring: RingDescriptor) -> str:
    variables = ring.variables

    def power(index: int, exp: int, label: str) -> str:
        return label if exp == 1 else f"{label}^{exp}"

    if ring.factors < 2:
        return "*".join(power(i, e, variables[i].label) for i, e in mono.exponents) or "1"

    scalars: List[str] = []
    slots: Dict[int, List[str]] = {s: [] for s in range(ring.factors)}
    for i, e in mono.exponents:
        gen = variables[i]
        if gen.slot is None:
            scalars.append(power(i, e, gen.name))
        else:
            slots[gen.slot].append(power(i, e, gen.name))
    tensor = "⊗".join("*".join(parts) or "1" for parts in slots.values())
    if all(not parts for parts in slots.values()):
        return "*".join(scalars) or "1"
    return "*".join(scalars + [tensor]) if scalars else tensor


def format_poly(a: PolyElement, exact: bool = False) -> str:
    """Canonical string; `exact` prints every coefficient as p/q."""
    if a.is_zero():
        return "0/1" if exact else "0"
    ring = a.ring
    pieces: List[str] = []
    for mono in sorted(a.terms, key=lambda m: monomial_sort_key(m, ring)):
        coeff = a.terms[mono]
        sign = "-" if coeff < 0 else "+"
        magnitude = abs(coeff)
        text = format_rational(magnitude) if exact else _plain_rational(magnitude)
        if mono.is_one():
            body = text
        elif magnitude == 1 and not exact:
            body = format_monomial(mono, ring)
        else:
            body = f"{text}*{format_monomial(mono, ring)}"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def format_exponent(exponents: Sequence[int]) -> str:
    names = SERIES_VARIABLES.get(len(exponents)) or tuple(f"t{i}" for i in range(len(exponents)))
    parts = []
    for name, e in zip(names, exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def format_series(series, exact: bool = False) -> str:
    """Series as a sum of coefficient*monomial terms in graded order."""
    if series.is_zero():
        return "0"
    terms = []
    for exponents, coeff in series.sorted_items():
        poly = format_poly(coeff, exact)
        mono = format_exponent(exponents)
        if len(coeff) == 1 and not exact:
            if poly == "1":
                terms.append(mono)
                continue
            if poly == "-1":
                terms.append(f"-{mono}")
                continue
            terms.append(f"{poly}*{mono}")
        else:
            terms.append(f"({poly})*{mono}")
    out = terms[0]
    for term in terms[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out
