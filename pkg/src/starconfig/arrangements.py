"""Arrangements of linear forms and the ideals of their a-fold products.

An arrangement is an ordered list of pairwise distinct normalized
linear forms, labelled 1..n.  The ideal generated by all products of a
distinct forms has purely combinatorial primary structure: its minimal
primes are spans of subarrangements, which this module enumerates
directly instead of factoring anything.
"""

from __future__ import annotations

import random
from itertools import combinations

from .errors import DegenerateInputError, GenerationError, UsageError
from .fields import DEFAULT_PRIME, GF, Field, PrimeField, RationalField
from .groebner import Ideal, intersect
from .polynomials import LinearForm, ProductOfForms, Ring


def rref(field: Field, rows):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    m = len(work)
    ncols = len(work[0]) if work else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        pr = next((i for i in range(r, m) if work[i][c] != field.zero), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = field.inv(work[r][c])
        work[r] = [field.mul(inv, v) for v in work[r]]
        for i in range(m):
            if i != r and work[i][c] != field.zero:
                f = work[i][c]
                work[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def matrix_rank(field: Field, rows) -> int:
    return len(rref(field, rows)[1])


def span_contains(field: Field, rows, pivots, vec) -> bool:
    """Is the vector in the row space given in reduced echelon form?"""
    v = list(vec)
    for row, c in zip(rows, pivots):
        if v[c] != field.zero:
            f = v[c]
            v = [field.sub(a, field.mul(f, b)) for a, b in zip(v, row)]
    return all(x == field.zero for x in v)


class LinearPrime:
    """A prime ideal generated by linear forms, stored as an echelon basis.

    The echelon rows are a reduced Groebner basis of the ideal, so
    membership of a linear form is a single back-substitution and the
    height is just the number of rows.
    """

    __slots__ = ("field", "rows", "pivots", "support")

    def __init__(self, field: Field, rows, support=()):
        self.field = field
        self.rows, self.pivots = rref(field, rows)
        self.support = tuple(support)

    @property
    def height(self) -> int:
        return len(self.rows)

    def contains_form(self, form: LinearForm) -> bool:
        return span_contains(self.field, self.rows, self.pivots, form.coeffs)

    def contains_product(self, prod: ProductOfForms) -> bool:
        """Primality in action: a product lies in us iff some factor does."""
        return any(self.contains_form(g) for g in prod.factors)

    def gens_in(self, ring: Ring):
        return tuple(ring.linear(row) for row in self.rows)

    def ideal_in(self, ring: Ring) -> Ideal:
        return Ideal(ring, self.gens_in(ring))

    def contains_span(self, other: "LinearPrime") -> bool:
        return all(
            span_contains(self.field, self.rows, self.pivots, row) for row in other.rows
        )

    def __eq__(self, other):
        return (
            isinstance(other, LinearPrime)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        return f"LinearPrime(height={self.height}, support={list(self.support)})"


class Arrangement:
    """Ordered, pairwise distinct linear forms labelled 1..n."""

    def __init__(self, field: Field, coeff_rows, names=None):
        coeff_rows = [tuple(r) for r in coeff_rows]
        if not coeff_rows:
            raise DegenerateInputError("an arrangement needs at least one form")
        width = len(coeff_rows[0])
        if any(len(r) != width for r in coeff_rows):
            raise UsageError("all forms must have the same number of coefficients")
        self.field = field
        self.nvars = width
        self.forms = tuple(
            LinearForm(field, row, label=i + 1) for i, row in enumerate(coeff_rows)
        )
        seen = {}
        for g in self.forms:
            if g.coeffs in seen:
                raise DegenerateInputError(
                    f"forms {seen[g.coeffs]} and {g.label} are proportional"
                )
            seen[g.coeffs] = g.label
        self.ring = Ring(field, width, names=names)
        self._rank = None
        self._generic = {}
        self._afold = {}
        self._products = {}
        self._minprimes = {}
        self._radical = {}
        self._distance = None

    @property
    def n(self) -> int:
        return len(self.forms)

    @property
    def labels(self):
        return tuple(range(1, self.n + 1))

    def form(self, label: int) -> LinearForm:
        if not 1 <= label <= self.n:
            raise UsageError(f"no form with label {label}")
        return self.forms[label - 1]

    def coeff_rows(self):
        return tuple(g.coeffs for g in self.forms)

    def rank(self) -> int:
        if self._rank is None:
            self._rank = matrix_rank(self.field, self.coeff_rows())
        return self._rank

    def s_generic_witness(self, s: int):
        """None if any s forms are independent, else the labels of a
        dependent s-subset."""
        if s < 1:
            raise UsageError("genericity level must be positive")
        cached = self._generic.get(s)
        if cached is None:
            cached = False
            if s <= self.n:
                for subset in combinations(self.forms, s):
                    if matrix_rank(self.field, [g.coeffs for g in subset]) < s:
                        cached = tuple(g.label for g in subset)
                        break
            self._generic[s] = cached
        return cached if cached else None

    def is_s_generic(self, s: int) -> bool:
        return self.s_generic_witness(s) is None

    def subset_product(self, labels) -> ProductOfForms:
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise UsageError("a subset product takes distinct labels")
        return ProductOfForms(self.field, tuple(self.form(i) for i in labels))

    def _check_a(self, a: int):
        if not 1 <= a <= self.n:
            raise UsageError(f"fold size must lie in 1..{self.n}, got {a}")

    def afold_products(self, a: int):
        """All products of a distinct forms, as factored objects."""
        self._check_a(a)
        cached = self._products.get(a)
        if cached is None:
            cached = tuple(
                self.subset_product(s) for s in combinations(self.labels, a)
            )
            self._products[a] = cached
        return cached

    def afold_ideal(self, a: int) -> Ideal:
        self._check_a(a)
        cached = self._afold.get(a)
        if cached is None:
            gens = tuple(p.expand(self.ring) for p in self.afold_products(a))
            cached = Ideal(self.ring, gens)
            self._afold[a] = cached
        return cached

    def _check_j(self, j: int):
        if not 0 <= j <= self.n - 1:
            raise UsageError(f"codim parameter must lie in 0..{self.n - 1}, got {j}")

    def minimal_linear_primes(self, j: int):
        """Minimal primes over the ideal of (n-j)-fold products.

        A linear prime contains every (n-j)-fold product exactly when
        its span holds at least j+1 of the forms, so the minimal primes
        are the inclusion-minimal spans of subarrangements with support
        at least j+1.  No genericity is assumed.
        """
        self._check_j(j)
        cached = self._minprimes.get(j)
        if cached is not None:
            return cached
        field = self.field
        spans = {}
        max_size = min(self.rank(), j + 1)
        for size in range(1, max_size + 1):
            for subset in combinations(self.forms, size):
                prime = LinearPrime(field, [g.coeffs for g in subset])
                if prime.rows in spans:
                    continue
                support = tuple(g.label for g in self.forms if prime.contains_form(g))
                spans[prime.rows] = LinearPrime(field, prime.rows, support)
        candidates = list(spans.values())
        candidates = [p for p in candidates if len(p.support) >= j + 1]
        minimal = [
            p
            for p in candidates
            if not any(
                q.height < p.height and p.contains_span(q) for q in candidates
            )
        ]
        cached = tuple(sorted(minimal, key=lambda p: (p.height, p.support)))
        self._minprimes[j] = cached
        return cached

    def height_afold(self, j: int) -> int:
        """Height of the ideal of (n-j)-fold products."""
        primes = self.minimal_linear_primes(j)
        return min(p.height for p in primes)

    def combinatorial_radical(self, j: int) -> Ideal:
        """Radical of the (n-j)-fold product ideal as an intersection of
        its minimal primes, computed by elimination."""
        self._check_j(j)
        cached = self._radical.get(j)
        if cached is None:
            primes = self.minimal_linear_primes(j)
            result = primes[0].ideal_in(self.ring)
            for p in primes[1:]:
                result = intersect(result, p.ideal_in(self.ring))
            self._radical[j] = cached = result
        return cached

    def min_distance(self) -> int:
        """n minus the largest number of forms inside a proper subspace
        of the span.  For a k-generic spanning arrangement this equals
        n - k + 1."""
        if self._distance is not None:
            return self._distance
        r = self.rank()
        best = 0
        seen = set()
        for size in range(1, r):
            for subset in combinations(self.forms, size):
                prime = LinearPrime(self.field, [g.coeffs for g in subset])
                if prime.rows in seen:
                    continue
                seen.add(prime.rows)
                support = sum(1 for g in self.forms if prime.contains_form(g))
                best = max(best, support)
        self._distance = self.n - best
        return self._distance

    def delete(self, label: int) -> "Arrangement":
        """Arrangement with one form removed and labels reassigned."""
        self.form(label)
        rows = [g.coeffs for g in self.forms if g.label != label]
        return Arrangement(self.field, rows, names=self.ring.names)

    def __repr__(self):
        return f"Arrangement({self.n} forms in {self.nvars} vars over {self.field})"


def random_generic_arrangement(k: int, n: int, field: Field = None, seed=None) -> Arrangement:
    """Random arrangement of n forms in k variables, any k independent.

    Rejection sampling; raises GenerationError when the field is too
    small to make success plausible or sampling keeps failing.
    """
    if k < 1 or n < k:
        raise UsageError("need 1 <= k <= n")
    if field is None:
        field = GF(DEFAULT_PRIME)
    if isinstance(field, PrimeField) and field.characteristic <= n:
        raise GenerationError(
            f"field GF({field.characteristic}) is too small for {n} distinct forms"
        )
    rng = random.Random(seed)

    def sample_row():
        if isinstance(field, RationalField):
            return tuple(field.from_int(rng.randint(-9, 9)) for _ in range(k))
        p = field.characteristic
        return tuple(field.from_int(rng.randrange(p)) for _ in range(k))

    for _ in range(200):
        rows = []
        for _ in range(n):
            row = sample_row()
            while all(c == field.zero for c in row):
                row = sample_row()
            rows.append(row)
        try:
            arr = Arrangement(field, rows)
        except DegenerateInputError:
            continue
        if arr.is_s_generic(k):
            return arr
    raise GenerationError(
        f"no {k}-generic arrangement of {n} forms over {field} after 200 attempts"
    )
