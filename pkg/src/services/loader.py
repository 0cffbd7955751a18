"""
Descriptor files: laws, Hopf algebras and twist series as JSON documents whose
polynomial entries are written as expressions in generator labels.

Law document:
    {"kind": "law", "name": "...",
     "ring": {"name": "A", "generators": [{"name": "a1", "weight": 1}]},
     "logarithm": ["a1", "a2"]}              coefficients of x^2, x^3, ...
  or "terms": [{"u": 1, "v": 1, "coefficient": "a1"}] for an explicit F.

Hopf document:
    {"kind": "hopf", "name": "...", "cocommutative": true,
     "generators": [{"name": "b1", "weight": 1}],
     "diagonals": {"b1": "b1_L + b1_R"}}

Twist document:
    {"kind": "twist", "coefficients": {"2": "b1", "3": "b2 + b1^2"}}
"""
import json
import logging
import os
from fractions import Fraction
from typing import Any, Dict, List, Optional

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, rationalize, standard_transformations

from src.algebra.errors import AlgebraError, DescriptorError
from src.algebra.polynomial import Monomial, PolyElement
from src.algebra.ring import RATIONALS, Generator, RingDescriptor
from src.fgl.law import LAWS, FormalGroupLaw, from_logarithm_coefficients, law_by_name
from src.hopf.descriptor import INSTANCES, HopfDescriptor
from src.hopfext.extension import CoveringSeries, default_twist_series
from src.series.power_series import Series1, Series2

logger = logging.getLogger(__name__)

TRANSFORMATIONS = standard_transformations + (convert_xor, rationalize)


def _read_document(path: str, kind: str) -> Dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as handle:
            document = json.load(handle)
    except OSError as e:
        raise DescriptorError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise DescriptorError(f"{path} is not valid JSON: {e}") from e
    if not isinstance(document, dict):
        raise DescriptorError(f"{path}: top level must be an object")
    if document.get("kind", kind) != kind:
        raise DescriptorError(f"{path}: expected a {kind} document, got {document.get('kind')!r}")
    return document


def _require(document: Dict[str, Any], key: str, where: str):
    if key not in document:
        raise DescriptorError(f"{where}: missing key {key!r}")
    return document[key]


def _generators(entries: Any, where: str) -> List[Generator]:
    if not isinstance(entries, list):
        raise DescriptorError(f"{where}: generators must be a list")
    gens = []
    for entry in entries:
        try:
            gens.append(Generator(str(entry["name"]), int(entry["weight"])))
        except (KeyError, TypeError, ValueError) as e:
            raise DescriptorError(f"{where}: bad generator entry {entry!r}: {e}") from e
    return gens


def _to_fraction(coeff) -> Fraction:
    if not coeff.is_Rational:
        raise DescriptorError(f"coefficient {coeff} is not rational")
    return Fraction(int(coeff.p), int(coeff.q))


def parse_polynomial(text: Any, ring: RingDescriptor) -> PolyElement:
    """Parse an expression in the ring's generator labels (b1_L, m2, ...) into a PolyElement."""
    if isinstance(text, (int, float)):
        text = str(text)
    if not isinstance(text, str) or not text.strip():
        raise DescriptorError(f"expected an expression string, got {text!r}")
    variables = ring.variables
    symbols = [sympy.Symbol(gen.label) for gen in variables]
    local = {gen.label: symbol for gen, symbol in zip(variables, symbols)}
    try:
        expr = parse_expr(text, local_dict=local, transformations=TRANSFORMATIONS)
    except (SyntaxError, TypeError, sympy.SympifyError) as e:
        raise DescriptorError(f"cannot parse {text!r}: {e}") from e

    unknown = {str(s) for s in expr.free_symbols} - set(local)
    if unknown:
        raise DescriptorError(f"{text!r} uses names outside {ring.name}: {', '.join(sorted(unknown))}")
    if not symbols:
        return PolyElement.constant(ring, _to_fraction(sympy.nsimplify(expr)))
    try:
        poly = sympy.Poly(expr, *symbols)
    except sympy.PolynomialError as e:
        raise DescriptorError(f"{text!r} is not a polynomial: {e}") from e

    terms = {}
    for exponents, coeff in poly.terms():
        mono = Monomial.from_map({i: e for i, e in enumerate(exponents)})
        terms[mono] = _to_fraction(coeff)
    return PolyElement(ring, terms)


def load_law(path: str, order: int) -> FormalGroupLaw:
    """Law from a descriptor file, truncated at `order`."""
    document = _read_document(path, "law")
    name = document.get("name", os.path.splitext(os.path.basename(path))[0])
    ring_doc = document.get("ring", {})
    ring = RingDescriptor.base_ring(
        ring_doc.get("name", "A"), _generators(ring_doc.get("generators", []), path)
    )
    try:
        if "logarithm" in document:
            coefficients = [parse_polynomial(entry, ring) for entry in document["logarithm"]]
            law = from_logarithm_coefficients(ring, order, coefficients, name)
        else:
            coeffs = {}
            for entry in _require(document, "terms", path):
                key = (int(entry.get("u", 0)), int(entry.get("v", 0)))
                coeffs[key] = parse_polynomial(_require(entry, "coefficient", path), ring)
            law = FormalGroupLaw(name, Series2(ring, order, coeffs))
    except (AlgebraError, ValueError) as e:
        raise DescriptorError(f"{path}: {e}") from e
    logger.info(f"Loaded law {name} from {path}")
    return law


def load_hopf(path: str, base: Optional[RingDescriptor] = None) -> HopfDescriptor:
    """Hopf descriptor from a file; diagonals may use the base ring's scalars."""
    document = _read_document(path, "hopf")
    name = document.get("name", os.path.splitext(os.path.basename(path))[0])
    gens = _generators(_require(document, "generators", path), path)
    diagonal_doc = _require(document, "diagonals", path)
    if not isinstance(diagonal_doc, dict):
        raise DescriptorError(f"{path}: diagonals must be an object")
    try:
        carrier = RingDescriptor.hopf_carrier("H", gens, base)
        tensor = carrier.tensor_square
        diagonals = {key: parse_polynomial(text, tensor) for key, text in diagonal_doc.items()}
        hopf = HopfDescriptor(name, carrier, diagonals, bool(document.get("cocommutative", False)))
    except (AlgebraError, ValueError) as e:
        raise DescriptorError(f"{path}: {e}") from e
    logger.info(f"Loaded Hopf descriptor {name} from {path} ({len(gens)} generators)")
    return hopf


def load_twist(path: str, hopf: HopfDescriptor, order: int) -> CoveringSeries:
    """Twist series b from a file; the x coefficient defaults to 1."""
    document = _read_document(path, "twist")
    entries = _require(document, "coefficients", path)
    if not isinstance(entries, dict):
        raise DescriptorError(f"{path}: coefficients must be an object keyed by power")
    carrier = hopf.carrier
    coeffs = {1: PolyElement.one(carrier)}
    try:
        for power, text in entries.items():
            coeffs[int(power)] = parse_polynomial(text, carrier)
        series = Series1(carrier, order, coeffs)
    except (AlgebraError, ValueError) as e:
        raise DescriptorError(f"{path}: {e}") from e
    return CoveringSeries(hopf, series)


def resolve_law(selector: str, order: int) -> FormalGroupLaw:
    """Built-in law name or path to a law file."""
    if selector in LAWS:
        return law_by_name(selector, order)
    if os.path.exists(selector):
        return load_law(selector, order)
    raise DescriptorError(f"unknown law {selector!r}: not one of {', '.join(sorted(LAWS))} and no such file")


def resolve_hopf(selector: str, order: int, base: Optional[RingDescriptor] = None) -> HopfDescriptor:
    """Built-in instance name or path to a Hopf file, over `base` (default Q)."""
    base = base if base is not None else RATIONALS
    if selector in INSTANCES:
        return INSTANCES[selector](order, base)
    if os.path.exists(selector):
        return load_hopf(selector, base)
    raise DescriptorError(f"unknown instance {selector!r}: not one of {', '.join(sorted(INSTANCES))} and no such file")


def resolve_twist(path: Optional[str], hopf: HopfDescriptor, order: int) -> CoveringSeries:
    if path is None:
        return default_twist_series(hopf, order)
    return load_twist(path, hopf, order)
