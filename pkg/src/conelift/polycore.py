"""Exact multivariate polynomials and rational functions over the rationals.

Polynomials are immutable. Every value stores its terms as a dict from
exponent tuples to nonzero :class:`fractions.Fraction` coefficients; the
sorted term list is derived from the active monomial order on demand, so two
equal polynomials always compare and print identically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence, Union

from .errors import ArityError, UnknownVariable, VarSetMismatch

Scalar = Union[int, Fraction]
Exponent = tuple  # tuple[int, ...]


def _grevlex_key(e):
    return (sum(e), tuple(-a for a in reversed(e)))


def _lex_key(e):
    return e


ORDERS = {"grevlex": _grevlex_key, "lex": _lex_key}
DEFAULT_ORDER = "grevlex"


def order_key(order):
    try:
        return ORDERS[order]
    except KeyError:
        raise ValueError(f"unknown monomial order {order!r}") from None


@dataclass(frozen=True)
class VarSet:
    """Ordered tuple of distinct variable names."""

    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("a VarSet needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for n in names:
            if not isinstance(n, str) or not n:
                raise ValueError(f"bad variable name {n!r}")

    @classmethod
    def of(cls, *names):
        if len(names) == 1 and not isinstance(names[0], str):
            names = tuple(names[0])
        return cls(tuple(names))

    @classmethod
    def indexed(cls, prefix, n):
        """``prefix1, ..., prefixn``."""
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __getitem__(self, i):
        return self.names[i]

    def index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariable(f"unknown variable {name!r}; declared: {', '.join(self.names)}") from None

    def fresh(self, base="z"):
        """A name not already in the set, preferring ``base``."""
        name, i = base, 0
        while name in self.names:
            i += 1
            name = f"{base}_{i}" if i > 1 else f"{base}_"
        return name

    def extend(self, *names):
        return VarSet(self.names + tuple(names))

    def __str__(self):
        return " ".join(self.names)


def _coerce_scalar(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


def _is_scalar(c):
    return isinstance(c, (int, Fraction)) and not isinstance(c, bool)


class Homogeneity(NamedTuple):
    degree: int
    zero: bool = False


class Polynomial:
    """A multivariate polynomial with rational coefficients in canonical form."""

    __slots__ = ("varset", "order", "_terms", "_sorted", "_hash")

    def __init__(self, varset: VarSet, terms: Union[Mapping, Iterable] = (), order: str = DEFAULT_ORDER):
        order_key(order)
        n = len(varset)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc = {}
        for exp, coeff in items:
            exp = tuple(int(a) for a in exp)
            if len(exp) != n:
                raise ArityError(f"exponent {exp} has length {len(exp)}, expected {n}")
            if any(a < 0 for a in exp):
                raise ValueError(f"negative exponent in {exp}")
            acc[exp] = acc.get(exp, 0) + _coerce_scalar(coeff)
        self._init(varset, {e: c for e, c in acc.items() if c}, order)

    def _init(self, varset, terms, order):
        self.varset = varset
        self.order = order
        self._terms = terms
        self._sorted = None
        self._hash = None

    @classmethod
    def _make(cls, varset, terms, order):
        # trusted path: terms already has exact nonzero coefficients
        p = cls.__new__(cls)
        p._init(varset, terms, order)
        return p

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, varset, order=DEFAULT_ORDER):
        return cls._make(varset, {}, order)

    @classmethod
    def const(cls, varset, c, order=DEFAULT_ORDER):
        c = _coerce_scalar(c)
        return cls._make(varset, {(0,) * len(varset): c} if c else {}, order)

    @classmethod
    def var(cls, varset, name, order=DEFAULT_ORDER):
        i = varset.index(name) if isinstance(name, str) else name
        exp = tuple(1 if j == i else 0 for j in range(len(varset)))
        return cls._make(varset, {exp: Fraction(1)}, order)

    @classmethod
    def monomial(cls, varset, exp, coeff=1, order=DEFAULT_ORDER):
        return cls(varset, {tuple(exp): coeff}, order)

    @classmethod
    def gens(cls, varset, order=DEFAULT_ORDER):
        return tuple(cls.var(varset, i, order) for i in range(len(varset)))

    # -- basic accessors ----------------------------------------------
    @property
    def terms(self):
        """Terms as ``(exponent, coefficient)`` pairs, largest monomial first."""
        if self._sorted is None:
            key = ORDERS[self.order]
            self._sorted = tuple(sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True))
        return self._sorted

    def as_dict(self):
        return dict(self._terms)

    def coefficient(self, exp):
        return self._terms.get(tuple(exp), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0,) * len(self.varset), Fraction(0))

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, var):
        i = self._var_index(var)
        return max((e[i] for e in self._terms), default=-1)

    def _var_index(self, var):
        if isinstance(var, int):
            if not 0 <= var < len(self.varset):
                raise UnknownVariable(f"variable index {var} out of range")
            return var
        return self.varset.index(var)

    def leading_term(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0]

    def leading_monomial(self):
        return self.leading_term()[0]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def with_order(self, order):
        if order == self.order:
            return self
        order_key(order)
        return Polynomial._make(self.varset, self._terms, order)

    def monic(self):
        """Scale so the leading coefficient is 1; zero stays zero."""
        if not self._terms:
            return self
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        return Polynomial._make(self.varset, {e: c / lc for e, c in self._terms.items()}, self.order)

    # -- arithmetic ---------------------------------------------------
    def _check(self, other):
        if self.varset != other.varset:
            raise VarSetMismatch(f"variable sets differ: ({self.varset}) vs ({other.varset})")

    def _lift_operand(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if _is_scalar(other):
            return Polynomial.const(self.varset, other, self.order)
        return None

    def __add__(self, other):
        other = self._lift_operand(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._make(self.varset, out, self.order)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._make(self.varset, {e: -c for e, c in self._terms.items()}, self.order)

    def __sub__(self, other):
        other = self._lift_operand(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift_operand(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        c = _coerce_scalar(c)
        if not c:
            return Polynomial.zero(self.varset, self.order)
        return Polynomial._make(self.varset, {e: v * c for e, v in self._terms.items()}, self.order)

    def __mul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                out[e] = s
        return Polynomial._make(self.varset, {e: c for e, c in out.items() if c}, self.order)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.const(self.varset, 1, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_term(self, exp, coeff):
        """Multiply by the single term ``coeff * x^exp``."""
        coeff = _coerce_scalar(coeff)
        if not coeff:
            return Polynomial.zero(self.varset, self.order)
        return Polynomial._make(
            self.varset,
            {tuple(a + b for a, b in zip(e, exp)): c * coeff for e, c in self._terms.items()},
            self.order,
        )

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.varset == other.varset and self._terms == other._terms
        if _is_scalar(other):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.varset, frozenset(self._terms.items())))
        return self._hash

    # -- calculus and evaluation --------------------------------------
    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != len(self.varset):
            raise ArityError(f"point has {len(point)} coordinates, expected {len(self.varset)}")
        pt = [_coerce_scalar(a) for a in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            v = c
            for a, k in zip(pt, e):
                if k:
                    v *= a**k
            total += v
        return total

    def __call__(self, *point):
        return self.evaluate(point)

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Compose: replace the i-th variable by ``images[i]``."""
        if len(images) != len(self.varset):
            raise ArityError(f"{len(images)} images given for {len(self.varset)} variables")
        images = list(images)
        target = None
        for im in images:
            if isinstance(im, Polynomial):
                if target is None:
                    target = im.varset
                elif im.varset != target:
                    raise VarSetMismatch("substitution images must share one variable set")
        if target is None:
            raise ArityError("at least one image must be a Polynomial")
        images = [im if isinstance(im, Polynomial) else Polynomial.const(target, im, self.order) for im in images]
        powers = [[Polynomial.const(target, 1, self.order)] for _ in images]

        def power(i, k):
            cache = powers[i]
            while len(cache) <= k:
                cache.append(cache[-1] * images[i])
            return cache[k]

        out = {}
        for e, c in self._terms.items():
            prod = None
            for i, k in enumerate(e):
                if k:
                    prod = power(i, k) if prod is None else prod * power(i, k)
            if prod is None:
                key = (0,) * len(target)
                out[key] = out.get(key, 0) + c
                continue
            for pe, pc in prod._terms.items():
                out[pe] = out.get(pe, 0) + c * pc
        return Polynomial._make(target, {e: c for e, c in out.items() if c}, self.order)

    def derivative(self, var) -> "Polynomial":
        i = self._var_index(var)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[ne] = c * e[i]
        return Polynomial._make(self.varset, out, self.order)

    def is_homogeneous(self) -> Optional[Homogeneity]:
        """The common total degree of all terms, or ``None`` if there is none.

        The zero polynomial is homogeneous of every degree and is reported as
        ``Homogeneity(0, zero=True)``.
        """
        if not self._terms:
            return Homogeneity(0, True)
        degs = {sum(e) for e in self._terms}
        if len(degs) == 1:
            return Homogeneity(degs.pop())
        return None

    def coefficients_in(self, var):
        """Split as a polynomial in ``var``: ``{k: coeff_k}`` with coeff_k free of ``var``."""
        i = self._var_index(var)
        parts = {}
        for e, c in self._terms.items():
            k = e[i]
            parts.setdefault(k, {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: Polynomial._make(self.varset, t, self.order) for k, t in parts.items()}

    def used_variables(self):
        return tuple(n for i, n in enumerate(self.varset) if any(e[i] for e in self._terms))

    # -- printing -----------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for idx, (e, c) in enumerate(self.terms):
            mono = "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in zip(self.varset.names, e) if k
            )
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if idx == 0:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, vars={self.varset.names})"


def evaluate(p: Polynomial, point: Sequence) -> Fraction:
    return p.evaluate(point)


def substitute(p: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    return p.substitute(images)


def derivative(p: Polynomial, var) -> Polynomial:
    return p.derivative(var)


def is_homogeneous(p: Polynomial) -> Optional[Homogeneity]:
    return p.is_homogeneous()


# -- division -------------------------------------------------------------


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def divmod_poly(p: Polynomial, q: Polynomial):
    """Multivariate division of ``p`` by a single ``q``: returns ``(quot, rem)``."""
    p._check(q)
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    key = ORDERS[p.order]
    q = q.with_order(p.order)
    lm, lc = q.leading_term()
    rest = [(e, c) for e, c in q._terms.items() if e != lm]
    r = dict(p._terms)
    quot, rem = {}, {}
    while r:
        e = max(r, key=key)
        c = r.pop(e)
        if not _divides(lm, e):
            rem[e] = c
            continue
        shift = tuple(a - b for a, b in zip(e, lm))
        t = c / lc
        quot[shift] = quot.get(shift, 0) + t
        for qe, qc in rest:
            ne = tuple(a + b for a, b in zip(qe, shift))
            s = r.get(ne, 0) - t * qc
            if s:
                r[ne] = s
            else:
                r.pop(ne, None)
    return (
        Polynomial._make(p.varset, {e: c for e, c in quot.items() if c}, p.order),
        Polynomial._make(p.varset, rem, p.order),
    )


def exact_quotient(p: Polynomial, q: Polynomial) -> Polynomial:
    quot, rem = divmod_poly(p, q)
    if not rem.is_zero():
        raise ArithmeticError(f"{q} does not divide {p}")
    return quot


def divides(q: Polynomial, p: Polynomial) -> bool:
    return divmod_poly(p, q)[1].is_zero()


# -- gcd --------------------------------------------------------------------


def _main_variable(p, q):
    for i in reversed(range(len(p.varset))):
        if any(e[i] for e in p._terms) or any(e[i] for e in q._terms):
            return i
    return None


def _content(p, v):
    """gcd of the coefficients of ``p`` viewed as a polynomial in variable ``v``."""
    coeffs = sorted(p.coefficients_in(v).values(), key=len)
    g = coeffs[0]
    for c in coeffs[1:]:
        if g.is_constant():
            break
        g = _gcd(g, c)
    return g


def _prem(a, b, v):
    db = b.degree_in(v)
    lb = b.coefficients_in(v)[db]
    n = len(a.varset)
    r = a
    while r and (dr := r.degree_in(v)) >= db:
        lr = r.coefficients_in(v)[dr]
        shift = tuple(dr - db if j == v else 0 for j in range(n))
        r = lb * r - (lr * b).mul_term(shift, 1)
    return r


def _gcd(p, q):
    """gcd of two nonzero polynomials, up to a rational scalar."""
    if p.is_constant() or q.is_constant():
        return Polynomial.const(p.varset, 1, p.order)
    v = _main_variable(p, q)
    dp, dq = p.degree_in(v), q.degree_in(v)
    if dp == 0:
        return _gcd(p, _content(q, v))
    if dq == 0:
        return _gcd(_content(p, v), q)
    cp, cq = _content(p, v), _content(q, v)
    c = _gcd(cp, cq)
    a, b = exact_quotient(p, cp), exact_quotient(q, cq)
    if dp < dq:
        a, b = b, a
    while True:
        r = _prem(a, b, v)
        if r.is_zero():
            g = b
            break
        if r.degree_in(v) == 0:
            g = Polynomial.const(p.varset, 1, p.order)
            break
        a, b = b, exact_quotient(r, _content(r, v))
    return c * g


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor; ``gcd(p, 0)`` is ``p`` made monic."""
    p._check(q)
    if p.is_zero():
        return q.with_order(p.order).monic()
    if q.is_zero():
        return p.monic()
    return _gcd(p, q.with_order(p.order)).monic()


def gcd_list(polys: Iterable[Polynomial]) -> Polynomial:
    polys = list(polys)
    if not polys:
        raise ValueError("gcd of an empty list")
    g = polys[0].monic()
    for p in polys[1:]:
        if g == 1:
            break
        g = gcd(g, p)
    return g


def lcm(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero() or q.is_zero():
        return Polynomial.zero(p.varset, p.order)
    return exact_quotient(p * q, gcd(p, q)).monic()


# -- square roots -------------------------------------------------------------


def _rational_sqrt(c: Fraction) -> Optional[Fraction]:
    if c < 0:
        return None
    n, d = c.numerator, c.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def odd_degree_variables(p: Polynomial):
    """Variables in which ``p`` has odd degree; any such variable rules out a square root."""
    return tuple(name for i, name in enumerate(p.varset) if p._terms and max(e[i] for e in p._terms) % 2)


def square_root(p: Polynomial) -> Optional[Polynomial]:
    """Return ``q`` with ``q*q == p`` (positive leading coefficient), or ``None``."""
    if p.is_zero():
        return p
    if odd_degree_variables(p):
        return None
    key = ORDERS[p.order]
    lm, lc = p.leading_term()
    if any(a % 2 for a in lm):
        return None
    root_c = _rational_sqrt(lc)
    if root_c is None:
        return None
    half_deg = p.degree() // 2
    half_var = [max(e[i] for e in p._terms) // 2 for i in range(len(p.varset))]
    q_lm = tuple(a // 2 for a in lm)
    q = Polynomial._make(p.varset, {q_lm: root_c}, p.order)
    twice_lead = 2 * root_c
    r = p - q * q
    while r:
        e, c = r.leading_term()
        if not _divides(q_lm, e):
            return None
        t = tuple(a - b for a, b in zip(e, q_lm))
        if key(t) >= key(q_lm) or sum(t) > half_deg or any(a > b for a, b in zip(t, half_var)):
            return None
        term = Polynomial._make(p.varset, {t: c / twice_lead}, p.order)
        # (q + term)^2 = q^2 + 2*q*term + term^2
        r = r - 2 * q * term - term * term
        q = q + term
    return q


# -- rational functions --------------------------------------------------------


class RationalFunction:
    """A reduced fraction ``num/den`` with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Optional[Polynomial] = None):
        from .errors import InvalidFraction

        if den is None:
            den = Polynomial.const(num.varset, 1, num.order)
        if isinstance(den, (int, Fraction)):
            den = Polynomial.const(num.varset, den, num.order)
        num._check(den)
        if den.is_zero():
            raise InvalidFraction(f"zero denominator in ({num})/({den})")
        den = den.with_order(num.order)
        if num.is_zero():
            num, den = num, Polynomial.const(num.varset, 1, num.order)
        else:
            g = gcd(num, den)
            if g != 1:
                num, den = exact_quotient(num, g), exact_quotient(den, g)
            lc = den.leading_coefficient()
            if lc != 1:
                num, den = num.scale(1 / lc), den.scale(1 / lc)
        self.num = num
        self.den = den

    @property
    def varset(self):
        return self.num.varset

    @classmethod
    def coerce(cls, x):
        return x if isinstance(x, RationalFunction) else cls(x)

    def is_polynomial(self):
        return self.den == 1

    def is_zero(self):
        return self.num.is_zero()

    def _other(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        if _is_scalar(other):
            return RationalFunction(Polynomial.const(self.varset, other, self.num.order))
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        return RationalFunction(self.num**n, self.den**n)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, point):
        d = self.den.evaluate(point)
        if not d:
            raise ZeroDivisionError("denominator vanishes at the point")
        return self.num.evaluate(point) / d

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"
