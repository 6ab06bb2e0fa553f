"""
Descent Census - Polynomial Service
Exact sparse polynomials over the rationals in the fixed variables
u, y, alpha, z, lambda, q.

Every polynomial in the package is an element of the single ring `R`
(a sympy sparse PolyRing over QQ with graded-lex order). Elements are
treated as immutable values.
"""
from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, ring

VARIABLES = ("u", "y", "alpha", "z", "lambda", "q")

R, u, y, alpha, z, lam, q = ring(",".join(VARIABLES), QQ, grlex)

MultiPoly = PolyElement
ZERO_MONOM = (0,) * len(VARIABLES)


class NotDivisibleError(ValueError):
    """Raised when a polynomial division leaves a nonzero remainder."""


def var_index(name: str) -> int:
    """Position of a variable in the fixed universe"""
    try:
        return VARIABLES.index(name)
    except ValueError:
        raise ValueError(f"Unknown variable: {name!r}. Known: {', '.join(VARIABLES)}") from None


def gen(name: str) -> MultiPoly:
    """Generator of the ring for a variable name"""
    return R.gens[var_index(name)]


def to_poly(value) -> MultiPoly:
    """Lift an int, Fraction, QQ element or ring element into the ring"""
    if isinstance(value, PolyElement):
        return value
    if isinstance(value, Fraction):
        return R.ground_new(QQ(value.numerator, value.denominator))
    return R(value)


def rational(numerator: int, denominator: int = 1):
    """Normalized QQ element"""
    return QQ(numerator, denominator)


def poly_arith(a: MultiPoly, b, op: str) -> MultiPoly:
    """
    Exact ring arithmetic.
    op is one of add, sub, mul, pow; for pow, b is the non-negative exponent.
    """
    if op == "add":
        return to_poly(a) + to_poly(b)
    if op == "sub":
        return to_poly(a) - to_poly(b)
    if op == "mul":
        return to_poly(a) * to_poly(b)
    if op == "pow":
        if not isinstance(b, int) or b < 0:
            raise ValueError(f"pow requires a non-negative integer exponent, got {b!r}")
        return to_poly(a) ** b
    raise ValueError(f"Unknown operation: {op!r}")


def substitute(p: MultiPoly, bindings: dict) -> MultiPoly:
    """
    Simultaneous substitution of variables by polynomials or scalars.
    Negative powers are not representable here; see laurent_substitute.
    """
    if not bindings:
        return p
    replacements = {gen(name): to_poly(value) for name, value in bindings.items()}
    return p.compose(replacements)


def exact_divide(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Return q with a = q*b, or raise NotDivisibleError"""
    if not b:
        raise ValueError("Division by the zero polynomial")
    quotient, remainder = a.div(b)
    if remainder:
        raise NotDivisibleError(f"{pretty(a)} is not divisible by {pretty(b)}")
    return quotient


def laurent_substitute(p: MultiPoly, var: str, power: int, clear_var: str, clear_exp: int) -> MultiPoly:
    """
    Substitute var := clear_var**power (power may be negative) and multiply
    by clear_var**clear_exp. The result must be a polynomial.
    """
    i, j = var_index(var), var_index(clear_var)
    terms = {}
    for monom, coeff in p.items():
        exps = list(monom)
        k = exps[i]
        exps[i] = 0
        exps[j] += k * power + clear_exp
        if exps[j] < 0:
            raise ValueError(
                f"clear exponent {clear_exp} too small: {clear_var}^{exps[j]} remains after {var} := {clear_var}^{power}"
            )
        key = tuple(exps)
        terms[key] = terms.get(key, QQ.zero) + coeff
    return R.from_dict({monom: coeff for monom, coeff in terms.items() if coeff})


def reverse(p: MultiPoly, var: str, degree: int) -> MultiPoly:
    """var^degree * p(1/var)"""
    return laurent_substitute(p, var, -1, var, degree)


def power(base, k: int) -> MultiPoly:
    """base**k with 0**0 = 1 (the ring refuses 0**0)"""
    if k < 0:
        raise ValueError(f"power needs k >= 0, got {k}")
    return R.one if k == 0 else to_poly(base) ** k


def degree(p: MultiPoly, var: str) -> int:
    """Degree in one variable; -1 for the zero polynomial"""
    if not p:
        return -1
    i = var_index(var)
    return max(monom[i] for monom in p.keys())


def is_integral(p: MultiPoly) -> bool:
    return all(QQ.denom(c) == 1 for c in p.values())


def ensure_integral(p: MultiPoly, label: str = "polynomial") -> MultiPoly:
    """Assert that all coefficients are integers"""
    if not is_integral(p):
        raise ValueError(f"{label} has non-integer coefficients: {pretty(p)}")
    return p


def constant_value(p: MultiPoly):
    """The QQ value of a constant polynomial"""
    if any(monom != ZERO_MONOM for monom in p.keys()):
        raise ValueError(f"Not a constant: {pretty(p)}")
    return p.get(ZERO_MONOM, QQ.zero)


def evaluate(p: MultiPoly, bindings: dict):
    """Exact rational value of p with every occurring variable bound"""
    return constant_value(substitute(p, bindings))


def exponent_histogram(p: MultiPoly, names: list[str]) -> dict[tuple[int, ...], int]:
    """
    Coefficients of p keyed by the exponents of `names`.
    Fails if p involves other variables or has non-integer coefficients.
    """
    idx = [var_index(name) for name in names]
    histogram = {}
    for monom, coeff in p.items():
        if any(e for i, e in enumerate(monom) if i not in idx):
            raise ValueError(f"Unexpected variables in {pretty(p)}; expected only {names}")
        if QQ.denom(coeff) != 1:
            raise ValueError(f"Non-integer coefficient in {pretty(p)}")
        histogram[tuple(monom[i] for i in idx)] = int(QQ.numer(coeff))
    return histogram


def coefficients(p: MultiPoly, var: str) -> list[int]:
    """Dense integer coefficient list of a univariate polynomial"""
    histogram = exponent_histogram(p, [var])
    if not histogram:
        return []
    dense = [0] * (max(k[0] for k in histogram) + 1)
    for (e,), c in histogram.items():
        dense[e] = c
    return dense


# ============== Serialization ==============

def canonical_terms(p: MultiPoly) -> list[tuple[tuple[int, ...], object]]:
    """Terms in ascending graded-lex order"""
    return sorted(p.items(), key=lambda term: (sum(term[0]), term[0]))


def to_json(p: MultiPoly) -> dict:
    """Polynomial JSON with d omitted when 1"""
    terms = []
    for monom, coeff in canonical_terms(p):
        term = {"e": list(monom), "n": str(int(QQ.numer(coeff)))}
        denominator = int(QQ.denom(coeff))
        if denominator != 1:
            term["d"] = str(denominator)
        terms.append(term)
    return {"vars": list(VARIABLES), "terms": terms}


def from_json(obj: dict) -> MultiPoly:
    if list(obj.get("vars", [])) != list(VARIABLES):
        raise ValueError(f"Variable universe mismatch: {obj.get('vars')}")
    terms = {}
    for term in obj.get("terms", []):
        monom = tuple(int(e) for e in term["e"])
        if len(monom) != len(VARIABLES) or any(e < 0 for e in monom):
            raise ValueError(f"Bad exponent vector: {term['e']}")
        coeff = QQ(int(term["n"]), int(term.get("d", "1")))
        if coeff:
            terms[monom] = terms.get(monom, QQ.zero) + coeff
    return R.from_dict({m: c for m, c in terms.items() if c})


def _format_coeff(coeff) -> str:
    numerator, denominator = int(QQ.numer(coeff)), int(QQ.denom(coeff))
    return str(numerator) if denominator == 1 else f"{numerator}/{denominator}"


def pretty(p: MultiPoly) -> str:
    """Human-readable form with u^a*y^b monomials, graded-lex ascending"""
    if not p:
        return "0"
    parts = []
    for monom, coeff in canonical_terms(p):
        factors = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(VARIABLES, monom)
            if e
        ]
        mono = "*".join(factors)
        if not mono:
            parts.append(_format_coeff(coeff))
        elif coeff == 1:
            parts.append(mono)
        elif coeff == -1:
            parts.append(f"-{mono}")
        else:
            parts.append(f"{_format_coeff(coeff)}*{mono}")
    text = " + ".join(parts)
    return text.replace("+ -", "- ")
