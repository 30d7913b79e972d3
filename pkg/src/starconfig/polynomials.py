"""Multivariate polynomials with exact coefficients.

A Ring fixes the coefficient field, the number of variables, the
monomial order, and display names.  Polynomials are immutable: a tuple
of (exponent tuple, coefficient) pairs sorted descending under the
ring's order, with no zero coefficients.  Linear forms and products of
linear forms get thin wrapper types so arrangement code can reason
about factors without expanding anything.
"""

from __future__ import annotations

from collections import Counter

from .errors import DegenerateInputError, UsageError
from .fields import Field
from .orders import GREVLEX, MonomialOrder, mono_mul


def default_names(nvars: int):
    if nvars <= 4:
        return tuple("xyzw"[:nvars])
    return tuple(f"x{i + 1}" for i in range(nvars))


class Ring:
    """Polynomial ring context: field, arity, monomial order, names."""

    __slots__ = ("field", "nvars", "order", "names", "_zero_exps")

    def __init__(self, field: Field, nvars: int, order: MonomialOrder = GREVLEX, names=None):
        if nvars < 1:
            raise UsageError("ring needs at least one variable")
        self.field = field
        self.nvars = nvars
        self.order = order
        self.names = tuple(names) if names is not None else default_names(nvars)
        if len(self.names) != nvars:
            raise UsageError(f"expected {nvars} variable names, got {len(self.names)}")
        self._zero_exps = (0,) * nvars

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and self.field == other.field
            and self.nvars == other.nvars
            and self.order == other.order
            and self.names == other.names
        )

    def __hash__(self):
        return hash((self.field, self.nvars, self.order, self.names))

    def __repr__(self):
        return f"{self.field}[{', '.join(self.names)}] ({self.order})"

    def from_dict(self, coeffs: dict) -> "Polynomial":
        """Build a polynomial from {exponent tuple: coefficient}."""
        key = self.order.key
        terms = []
        for exps, c in coeffs.items():
            if len(exps) != self.nvars:
                raise UsageError(f"exponent arity {len(exps)} in a {self.nvars}-variable ring")
            if c != self.field.zero:
                terms.append((tuple(exps), c))
        terms.sort(key=lambda t: key(t[0]), reverse=True)
        return Polynomial(self, tuple(terms))

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    @property
    def one(self) -> "Polynomial":
        return Polynomial(self, ((self._zero_exps, self.field.one),))

    def constant(self, c) -> "Polynomial":
        c = self.field.from_int(c) if isinstance(c, int) else c
        if c == self.field.zero:
            return self.zero
        return Polynomial(self, ((self._zero_exps, c),))

    def gen(self, i: int) -> "Polynomial":
        if not 0 <= i < self.nvars:
            raise UsageError(f"no variable with index {i}")
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, ((exps, self.field.one),))

    def gens(self):
        return tuple(self.gen(i) for i in range(self.nvars))

    def linear(self, coeffs) -> "Polynomial":
        """The form sum(coeffs[i] * x_i)."""
        coeffs = tuple(coeffs)
        if len(coeffs) != self.nvars:
            raise UsageError(f"expected {self.nvars} coefficients, got {len(coeffs)}")
        d = {}
        for i, c in enumerate(coeffs):
            if c != self.field.zero:
                exps = tuple(1 if j == i else 0 for j in range(self.nvars))
                d[exps] = c
        return self.from_dict(d)

    def with_order(self, order: MonomialOrder) -> "Ring":
        if order == self.order:
            return self
        return Ring(self.field, self.nvars, order, self.names)

    def extended(self, extra: int, prefix: str = "t") -> "Ring":
        """Same ring with `extra` auxiliary variables appended last."""
        if extra < 1:
            raise UsageError("extension needs at least one new variable")
        fresh = []
        taken = set(self.names)
        i = 0
        while len(fresh) < extra:
            name = f"{prefix}{i}"
            if name not in taken:
                fresh.append(name)
            i += 1
        return Ring(self.field, self.nvars + extra, self.order, self.names + tuple(fresh))


class Polynomial:
    """Immutable polynomial: terms sorted descending under ring.order."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms):
        self.ring = ring
        self.terms = terms

    # -- inspection ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def lt(self):
        """Leading (exponents, coefficient) pair."""
        if not self.terms:
            raise UsageError("zero polynomial has no leading term")
        return self.terms[0]

    def lm(self):
        return self.lt()[0]

    def lc(self):
        return self.lt()[1]

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e, _ in self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and sum(self.terms[0][0]) == 0)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        c = self.terms[0][1]
        if c == self.ring.field.one:
            return self
        inv = self.ring.field.inv(c)
        f = self.ring.field
        return Polynomial(self.ring, tuple((e, f.mul(inv, v)) for e, v in self.terms))

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise UsageError("polynomials live in different rings")
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.ring.field
        acc = dict(self.terms)
        for e, c in other.terms:
            s = f.add(acc.get(e, f.zero), c)
            if s == f.zero:
                acc.pop(e, None)
            else:
                acc[e] = s
        return self.ring.from_dict(acc)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, tuple((e, f.neg(c)) for e, c in self.terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.ring.field
        zero = f.zero
        acc: dict = {}
        for ea, ca in self.terms:
            for eb, cb in other.terms:
                e = mono_mul(ea, eb)
                s = f.add(acc.get(e, zero), f.mul(ca, cb))
                if s == zero:
                    acc.pop(e, None)
                else:
                    acc[e] = s
        return self.ring.from_dict(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise UsageError("negative polynomial power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        if c == f.zero:
            return self.ring.zero
        return Polynomial(self.ring, tuple((e, f.mul(c, v)) for e, v in self.terms))

    # -- ring moves ----------------------------------------------------

    def reorder(self, ring: Ring) -> "Polynomial":
        """Same polynomial viewed in a ring that differs only in order."""
        if ring.field != self.ring.field or ring.nvars != self.ring.nvars:
            raise UsageError("reorder target must share field and arity")
        return ring.from_dict(dict(self.terms))

    def extend(self, ring: Ring) -> "Polynomial":
        """View in a ring with extra variables appended after ours."""
        extra = ring.nvars - self.ring.nvars
        if extra < 0 or ring.field != self.ring.field:
            raise UsageError("extension target must add variables over the same field")
        pad = (0,) * extra
        return ring.from_dict({e + pad: c for e, c in self.terms})

    def contract(self, ring: Ring) -> "Polynomial":
        """Drop trailing auxiliary variables; they must not occur."""
        drop = self.ring.nvars - ring.nvars
        if drop < 0 or ring.field != self.ring.field:
            raise UsageError("contraction target must remove trailing variables")
        d = {}
        for e, c in self.terms:
            if any(e[ring.nvars:]):
                raise UsageError("polynomial involves a variable being removed")
            d[e[: ring.nvars]] = c
        return ring.from_dict(d)

    # -- identity ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.ring.constant(other)
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __repr__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        out = []
        for e, c in self.terms:
            factors = []
            for i, p in enumerate(e):
                if p == 1:
                    factors.append(names[i])
                elif p > 1:
                    factors.append(f"{names[i]}^{p}")
            mono = "*".join(factors)
            cs = str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            body = cs if not mono else (mono if cs == "1" else f"{cs}*{mono}")
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append(("- " if neg else "+ ") + body)
        return " ".join(out)


def normalize_linear_form(field: Field, coeffs):
    """Scale so the first nonzero coefficient is 1.

    Raises DegenerateInputError on the zero vector, so every stored
    form is a genuine hyperplane and equality of forms is equality of
    coefficient tuples.
    """
    coeffs = tuple(field.from_int(c) if isinstance(c, int) else c for c in coeffs)
    lead = next((c for c in coeffs if c != field.zero), None)
    if lead is None:
        raise DegenerateInputError("zero vector is not a linear form")
    if lead == field.one:
        return coeffs
    inv = field.inv(lead)
    return tuple(field.mul(inv, c) for c in coeffs)


class LinearForm:
    """A normalized nonzero linear form with an optional 1-based label.

    The label identifies the form inside an arrangement; it never
    participates in equality or hashing.
    """

    __slots__ = ("field", "coeffs", "label")

    def __init__(self, field: Field, coeffs, label=None):
        self.field = field
        self.coeffs = normalize_linear_form(field, coeffs)
        self.label = label

    def poly(self, ring: Ring) -> Polynomial:
        if ring.field != self.field or ring.nvars != len(self.coeffs):
            raise UsageError("ring does not match the form's field and arity")
        return ring.linear(self.coeffs)

    def support(self):
        return tuple(i for i, c in enumerate(self.coeffs) if c != self.field.zero)

    def __eq__(self, other):
        return (
            isinstance(other, LinearForm)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        names = default_names(len(self.coeffs))
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == self.field.zero:
                continue
            parts.append(names[i] if c == self.field.one else f"{c}*{names[i]}")
        body = " + ".join(parts)
        return f"[{self.label}] {body}" if self.label is not None else body


class ProductOfForms:
    """A formal product of linear forms, kept factored.

    Factors are stored sorted by coefficient tuple so two products are
    equal exactly when their factor multisets agree.
    """

    __slots__ = ("field", "factors")

    def __init__(self, field: Field, factors):
        factors = tuple(factors)
        for g in factors:
            if g.field != field:
                raise UsageError("factor field mismatch")
        self.field = field
        self.factors = tuple(sorted(factors, key=lambda g: g.coeffs))

    def degree(self) -> int:
        return len(self.factors)

    def expand(self, ring: Ring) -> Polynomial:
        result = ring.one
        for g in self.factors:
            result = result * g.poly(ring)
        return result

    def divides(self, other: "ProductOfForms") -> bool:
        return product_divides(self, other)

    def labels(self):
        return tuple(g.label for g in self.factors)

    def __eq__(self, other):
        return (
            isinstance(other, ProductOfForms)
            and self.field == other.field
            and self.factors == other.factors
        )

    def __hash__(self):
        return hash((self.field, self.factors))

    def __repr__(self):
        return " * ".join(f"({g!r})" for g in self.factors) if self.factors else "1"


def product_divides(p: ProductOfForms, q: ProductOfForms) -> bool:
    """Multiset inclusion of factors: does p divide q as a product?"""
    if p.field != q.field:
        raise UsageError("products live over different fields")
    need = Counter(g.coeffs for g in p.factors)
    have = Counter(g.coeffs for g in q.factors)
    return all(have[c] >= m for c, m in need.items())
