"""The Picard-graded Cox ring of a surface fan over exact rationals.

Polynomials are sparse dicts from exponent tuples (one entry per stored
ray) to nonzero Fractions.  Monomial bases of a graded piece come from the
lattice points of the section polytope and are sorted lexicographically,
so every basis and every printed polynomial is deterministic.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .divisors import TorusDivisor, pic_class, polytope
from .errors import InputError, InternalError
from .fan import _label_key


def multidegree(fan, exps):
    """Picard class of the monomial with the given exponent tuple."""
    return pic_class(fan, TorusDivisor(tuple(exps)))


def monomial_basis(fan, D):
    """Exponent tuples of the monomials spanning the graded piece of class(D).

    Each lattice point m of the section polytope gives the exponent vector
    (<m, u_rho> + a_rho)_rho; the result depends only on the class of D.
    """
    out = []
    for m in polytope(fan, D).points:
        exps = tuple(m[0] * u[0] + m[1] * u[1] + a
                     for u, a in zip(fan.rays, D.coeffs))
        if any(e < 0 for e in exps):
            raise InternalError("polytope point gave a negative exponent")
        out.append(exps)
    out.sort()
    return tuple(out)


class CoxPolynomial:
    """Sparse Cox-ring polynomial with Fraction coefficients."""

    __slots__ = ("fan", "terms")

    def __init__(self, fan, terms=None, expect_class=None):
        self.fan = fan
        clean = {}
        for exps, c in (terms or {}).items():
            c = Fraction(c)
            if not c:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != fan.n:
                raise InputError("exponent tuple length does not match the ray count")
            if any(e < 0 for e in exps):
                raise InputError(f"negative exponent in {exps}")
            clean[exps] = c
        self.terms = clean
        if expect_class is not None:
            got = self.homogeneous_class()
            if got is not None and got != expect_class:
                raise InputError("polynomial is not homogeneous of the declared class")

    @classmethod
    def zero(cls, fan):
        return cls(fan, {})

    @classmethod
    def monomial(cls, fan, exps, coeff=1):
        return cls(fan, {tuple(exps): Fraction(coeff)})

    def is_zero(self):
        return not self.terms

    def is_homogeneous(self):
        try:
            self.homogeneous_class()
        except InputError:
            return False
        return True

    def homogeneous_class(self):
        """Common Picard class of all terms (None for the zero polynomial)."""
        cls = None
        for exps in self.terms:
            c = multidegree(self.fan, exps)
            if cls is None:
                cls = c
            elif c != cls:
                raise InputError("polynomial is not homogeneous")
        return cls

    def _like(self, other):
        if isinstance(other, CoxPolynomial):
            if other.fan is not self.fan and other.fan.rays != self.fan.rays:
                raise InputError("polynomials live in different Cox rings")
            return other
        return None

    def __add__(self, other):
        other = self._like(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return CoxPolynomial(self.fan, terms)

    def __neg__(self):
        return CoxPolynomial(self.fan, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._like(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return CoxPolynomial.zero(self.fan)
        return CoxPolynomial(self.fan, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._like(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return CoxPolynomial(self.fan, terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CoxPolynomial):
            return NotImplemented
        return self.fan.rays == other.fan.rays and self.terms == other.terms

    def shift(self, exps, coeff=1):
        """Multiply by coeff * (monomial with the given exponents)."""
        exps = tuple(exps)
        coeff = Fraction(coeff)
        if not coeff:
            return CoxPolynomial.zero(self.fan)
        return CoxPolynomial(self.fan, {
            tuple(a + b for a, b in zip(e, exps)): c * coeff
            for e, c in self.terms.items()})

    def partial(self, i):
        """Exact partial derivative with respect to variable i."""
        terms = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            de = list(e)
            de[i] -= 1
            terms[tuple(de)] = c * e[i]
        return CoxPolynomial(self.fan, terms)

    def euler_term(self, i):
        """x_i * d/dx_i, which preserves the class of each term."""
        terms = {e: c * e[i] for e, c in self.terms.items() if e[i]}
        return CoxPolynomial(self.fan, terms)

    def sorted_terms(self):
        return [(e, self.terms[e]) for e in sorted(self.terms, reverse=True)]

    def to_text(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = self.fan.monomial_label(e)
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json(self):
        return {"terms": [{"exps": list(e), "coeff": str(c)}
                          for e, c in self.sorted_terms()]}

    def __repr__(self):
        return f"CoxPolynomial({self.to_text()})"


def poly_from_json(fan, obj):
    """Read {'terms': [{'exps': [...], 'coeff': 'p/q'}, ...]}."""
    if not isinstance(obj, dict) or "terms" not in obj:
        raise InputError("polynomial JSON must be an object with a 'terms' list")
    terms = {}
    for t in obj["terms"]:
        if not isinstance(t, dict) or "exps" not in t or "coeff" not in t:
            raise InputError("each term needs 'exps' and 'coeff'")
        exps = t["exps"]
        if not isinstance(exps, list) or not all(isinstance(x, int) for x in exps):
            raise InputError("term 'exps' must be a list of integers")
        try:
            c = Fraction(t["coeff"])
        except (ValueError, ZeroDivisionError, TypeError):
            raise InputError(f"bad coefficient {t['coeff']!r}") from None
        e = tuple(exps)
        terms[e] = terms.get(e, 0) + c
    return CoxPolynomial(fan, terms)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            rest = text[pos:].strip()
            if not rest:
                break
            raise InputError(f"cannot parse polynomial near {rest[:12]!r}")
        pos = m.end()
        if m.group("num"):
            tokens.append(("num", int(m.group("num"))))
        elif m.group("name"):
            tokens.append(("name", m.group("name")))
        elif m.group("op"):
            tokens.append(("op", m.group("op")))
    return tokens


def poly_from_text(fan, text):
    """Parse expressions like 'x1^5*x2^3 + 2*x4 - 1/2*x3^2'.

    Grammar: signed terms joined by + or -; a term is factors joined by *;
    a factor is an integer, a fraction p/q, or a variable with an optional
    ^exponent.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise InputError("empty polynomial expression")
    terms = {}
    i = 0

    def take_factor(i):
        kind, val = tokens[i]
        if kind == "num":
            num = Fraction(val)
            i += 1
            if i < len(tokens) and tokens[i] == ("op", "/"):
                i += 1
                if i >= len(tokens) or tokens[i][0] != "num":
                    raise InputError("expected an integer denominator after '/'")
                if tokens[i][1] == 0:
                    raise InputError("zero denominator")
                num /= tokens[i][1]
                i += 1
            return num, None, i
        if kind == "name":
            pos = fan.position(val)
            exp = 1
            i += 1
            if i < len(tokens) and tokens[i] == ("op", "^"):
                i += 1
                if i >= len(tokens) or tokens[i][0] != "num":
                    raise InputError(f"expected an integer exponent after '{val}^'")
                exp = tokens[i][1]
                i += 1
            return None, (pos, exp), i
        raise InputError(f"unexpected {val!r} in polynomial")

    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= len(tokens):
            raise InputError("dangling sign at the end of the polynomial")
        coeff = Fraction(sign)
        exps = [0] * fan.n
        while True:
            c, var, i = take_factor(i)
            if c is not None:
                coeff *= c
            else:
                exps[var[0]] += var[1]
            if i < len(tokens) and tokens[i] == ("op", "*"):
                i += 1
                continue
            break
        e = tuple(exps)
        s = terms.get(e, 0) + coeff
        if s:
            terms[e] = s
        else:
            terms.pop(e, None)
        if i < len(tokens) and not (tokens[i][0] == "op" and tokens[i][1] in "+-"):
            raise InputError(f"expected '+' or '-' before {tokens[i][1]!r}")
    return CoxPolynomial(fan, terms)


@dataclass(frozen=True)
class EulerWeights:
    """Rational weights phi with sum(phi_rho * u_rho) = 0.

    Such weights give the identity phi(beta) f = sum phi_rho x_rho df/dx_rho
    for f homogeneous of class beta, where phi(beta) = sum phi_rho a_rho is
    independent of the chosen representative (a_rho) of beta.
    """

    fan: object
    phi: tuple

    def constant_of(self, D):
        return sum(p * a for p, a in zip(self.phi, D.coeffs))


def euler_weights(fan, phi):
    """Validate and wrap a weight vector (indexed by the stored ray order)."""
    phi = tuple(Fraction(p) for p in phi)
    if len(phi) != fan.n:
        raise InputError("need one weight per ray")
    sx = sum(p * u[0] for p, u in zip(phi, fan.rays))
    sy = sum(p * u[1] for p, u in zip(phi, fan.rays))
    if sx or sy:
        raise InputError("weights do not satisfy sum(phi * u) = 0")
    return EulerWeights(fan, phi)


def weights_from_labels(fan, mapping):
    """Build Euler weights from {label: weight}; omitted labels get 0."""
    phi = [Fraction(0)] * fan.n
    for lab, w in mapping.items():
        phi[fan.position(lab)] = Fraction(w)
    return euler_weights(fan, phi)


def check_euler(p, w):
    """Exact check of phi(beta) p = sum phi_rho x_rho dp/dx_rho."""
    if p.is_zero():
        return True
    cls = p.homogeneous_class()
    del cls  # homogeneity is what matters; any exponent is a representative
    rep = TorusDivisor(next(iter(sorted(p.terms))))
    c = w.constant_of(rep)
    rhs = CoxPolynomial.zero(p.fan)
    for i in range(p.fan.n):
        if w.phi[i]:
            rhs = rhs + p.euler_term(i).scale(w.phi[i])
    return rhs == p.scale(c)
