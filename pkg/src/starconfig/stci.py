"""Explicit generators cutting out a-fold product varieties, and checks.

For an arrangement whose rank-many subsets are all independent, the
ideal of (n-j)-fold products is, up to radical, cut out by j+1
explicit polynomials: for u = 1..j the form times the sum of all
(n-j-1)-fold products of later forms, plus the single tail product of
the last n-j forms.  Certificates carry that combinatorial recipe so
they can be serialized, mutated, and re-verified from scratch.

Verification runs two independent routes.  The Groebner route tests
radical membership of each generator of one ideal in the other.  The
combinatorial route replaces one direction by exact linear reduction
against every minimal prime.  Both must agree; a disagreement is
reported as an internal inconsistency, never resolved silently.

The same sums also witness an arithmetic-rank bound with no
genericity at all: the level sets P_0 = {tail}, P_u = products with
minimum j-u+1, satisfy the classical covering and divisibility
conditions, so j+1 elements always suffice up to radical.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from .arrangements import Arrangement
from .errors import GenericityError, UsageError
from .groebner import Ideal, radical_member, reduce
from .polynomials import Polynomial, ProductOfForms, Ring, product_divides


class StciCertificate:
    """A claimed generating set, stored as a combinatorial recipe.

    blocks is a tuple of (base label, tuple of index subsets); each
    block expands to base form times the sum of the subset products.
    The tail is a single product of forms.  Polynomials are built once
    at construction, in the arrangement's ring.
    """

    __slots__ = ("arrangement", "j", "blocks", "tail_labels", "gens")

    def __init__(self, arrangement: Arrangement, j: int, blocks, tail_labels):
        self.arrangement = arrangement
        self.j = j
        self.blocks = tuple((b, tuple(tuple(i) for i in sets)) for b, sets in blocks)
        self.tail_labels = tuple(tail_labels)
        ring = arrangement.ring
        gens = []
        for base, sets in self.blocks:
            base_poly = arrangement.form(base).poly(ring)
            acc = ring.zero
            for labels in sets:
                term = ring.one
                for i in labels:
                    term = term * arrangement.form(i).poly(ring)
                acc = acc + term
            gens.append(base_poly * acc)
        tail = ring.one
        for i in self.tail_labels:
            tail = tail * arrangement.form(i).poly(ring)
        gens.append(tail)
        self.gens = tuple(gens)

    def gen_names(self):
        names = [f"F{base}" for base, _ in self.blocks]
        names.append("tail")
        return tuple(names)

    def describe(self) -> dict:
        return {
            "j": self.j,
            "count": len(self.gens),
            "blocks": [
                {"base": base, "summands": [list(s) for s in sets]}
                for base, sets in self.blocks
            ],
            "tail": list(self.tail_labels),
            "generators": [str(g) for g in self.gens],
        }

    def __repr__(self):
        return f"StciCertificate(j={self.j}, {len(self.gens)} generators)"


def theorem_generators(arrangement: Arrangement, j: int) -> StciCertificate:
    """The explicit j+1 generators for the (n-j)-fold product radical.

    j = 0 needs nothing and returns the single full product.  For
    j >= 1 the arrangement must have every rank-sized subset
    independent and j can be at most rank - 2.
    """
    n = arrangement.n
    if not 0 <= j <= n - 1:
        raise UsageError(f"codim parameter must lie in 0..{n - 1}, got {j}")
    if j >= 1:
        r = arrangement.rank()
        if j > r - 2:
            raise UsageError(
                f"explicit generators need j <= rank - 2 = {r - 2}, got {j}"
            )
        witness = arrangement.s_generic_witness(r)
        if witness is not None:
            raise GenericityError(
                f"forms {list(witness)} are dependent, so the arrangement "
                f"is not {r}-generic",
                subset=witness,
            )
    blocks = []
    for u in range(1, j + 1):
        sets = tuple(combinations(range(u + 1, n + 1), n - j - 1))
        blocks.append((u, sets))
    return StciCertificate(arrangement, j, tuple(blocks), range(j + 1, n + 1))


CORRUPTION_MODES = ("drop-summand", "swap-form", "truncate-tail")


def corrupt_certificate(cert: StciCertificate, mode: str) -> StciCertificate:
    """A deliberately broken variant, for negative testing.

    drop-summand removes one summand from the first block, swap-form
    rebases the first block on the second form, truncate-tail shortens
    the tail product by one factor.  Each breaks a different check.
    """
    if mode not in CORRUPTION_MODES:
        raise UsageError(f"unknown corruption mode {mode!r}")
    blocks = list(cert.blocks)
    tail = cert.tail_labels
    if mode == "drop-summand":
        if not blocks or len(blocks[0][1]) < 2:
            raise UsageError("drop-summand needs a block with at least two summands")
        base, sets = blocks[0]
        blocks[0] = (base, sets[1:])
    elif mode == "swap-form":
        if not blocks:
            raise UsageError("swap-form needs at least one block")
        base, sets = blocks[0]
        new_base = 2 if base != 2 else 1
        blocks[0] = (new_base, sets)
    else:
        if len(tail) < 2:
            raise UsageError("truncate-tail needs a tail with at least two factors")
        tail = tail[1:]
    return StciCertificate(cert.arrangement, cert.j, tuple(blocks), tail)


@dataclass
class CheckResult:
    name: str
    ok: bool | None
    witness: str | None = None

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "witness": self.witness}


@dataclass
class VerificationReport:
    holds: bool | None
    status: str
    mode: str
    n: int
    a: int
    j: int
    height: int
    generator_count: int
    stci: bool | None
    checks: list = field(default_factory=list)
    wall_time_seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "status": self.status,
            "mode": self.mode,
            "n": self.n,
            "a": self.a,
            "j": self.j,
            "height": self.height,
            "generator_count": self.generator_count,
            "stci": self.stci,
            "checks": [c.to_dict() for c in self.checks],
            "wall_time_seconds": self.wall_time_seconds,
        }


def verify_certificate(
    cert: StciCertificate,
    mode: str = "both",
    power_limit: int = 3,
    budget_seconds: float | None = None,
) -> VerificationReport:
    """Check that the certificate cuts out the a-fold product variety.

    Always checks literal containment of every certificate generator
    in the a-fold ideal.  The groebner route then tests each a-fold
    generator against the certificate radical and (if containment
    failed) certificate generators against the a-fold radical.  The
    combinatorial route instead reduces certificate generators against
    every minimal prime, which is exact, and shares the a-fold-side
    radical tests.  Running both cross-checks the routes against each
    other.  A budget turns remaining work into an inconclusive
    verdict; it never flips a failure already found.
    """
    if mode not in ("groebner", "combinatorial", "both"):
        raise UsageError(f"unknown verification mode {mode!r}")
    t0 = time.monotonic()
    deadline = t0 + budget_seconds if budget_seconds is not None else None
    arr = cert.arrangement
    j = cert.j
    a = arr.n - j
    ring = arr.ring
    afold = arr.afold_ideal(a)
    cert_ideal = Ideal(ring, cert.gens)
    names = cert.gen_names()
    checks: list[CheckResult] = []

    def out_of_time() -> bool:
        return deadline is not None and time.monotonic() > deadline

    def run(name, fn, witness_fn):
        """Run one unit unless the budget is gone; record the outcome."""
        if out_of_time():
            checks.append(CheckResult(name, None, "budget exhausted"))
            return None
        ok = fn()
        checks.append(CheckResult(name, ok, None if ok else witness_fn()))
        return ok

    # literal containment of each generator, any mode
    containment_ok = {}
    for idx, g in enumerate(cert.gens):
        name = f"containment:{names[idx]}"
        containment_ok[idx] = run(
            name,
            lambda g=g: afold.contains(g),
            lambda idx=idx: f"{names[idx]} does not lie in the {a}-fold product ideal",
        )

    groebner_cert_side = {}
    if mode in ("groebner", "both"):
        # certificate generators inside the a-fold radical; containment
        # already implies it, so only retest what failed or was skipped
        for idx, g in enumerate(cert.gens):
            if containment_ok.get(idx):
                groebner_cert_side[idx] = True
                continue
            name = f"radical-membership:{names[idx]}-in-afold"
            groebner_cert_side[idx] = run(
                name,
                lambda g=g: radical_member(g, afold, power_limit),
                lambda idx=idx: f"{names[idx]} is not in the radical of the "
                f"{a}-fold product ideal",
            )
        for prod in arr.afold_products(a):
            label = "l" + "*l".join(str(i) for i in sorted(prod.labels()))
            name = f"radical-membership:{label}-in-certificate"
            run(
                name,
                lambda prod=prod: radical_member(
                    prod.expand(ring), cert_ideal, power_limit
                ),
                lambda label=label: f"{a}-fold product {label} is not in the "
                "radical of the certificate ideal",
            )

    comb_cert_side = {}
    if mode in ("combinatorial", "both"):
        primes = arr.minimal_linear_primes(j)
        for idx, g in enumerate(cert.gens):
            name = f"minimal-primes:{names[idx]}"
            if out_of_time():
                checks.append(CheckResult(name, None, "budget exhausted"))
                comb_cert_side[idx] = None
                continue
            bad = None
            for p in primes:
                if not reduce(g, p.gens_in(ring)).is_zero():
                    bad = p
                    break
            ok = bad is None
            comb_cert_side[idx] = ok
            checks.append(
                CheckResult(
                    name,
                    ok,
                    None
                    if ok
                    else f"{names[idx]} is not in the minimal prime spanned by "
                    f"forms {list(bad.support)}",
                )
            )
        if mode == "combinatorial":
            for prod in arr.afold_products(a):
                label = "l" + "*l".join(str(i) for i in sorted(prod.labels()))
                name = f"radical-membership:{label}-in-certificate"
                run(
                    name,
                    lambda prod=prod: radical_member(
                        prod.expand(ring), cert_ideal, power_limit
                    ),
                    lambda label=label: f"{a}-fold product {label} is not in the "
                    "radical of the certificate ideal",
                )

    if mode == "both":
        # the two routes answered the same question for each generator:
        # membership in the a-fold radical, which is the intersection of
        # the minimal primes; any disagreement is a bug, not a verdict
        for idx in range(len(cert.gens)):
            gside = groebner_cert_side.get(idx)
            cside = comb_cert_side.get(idx)
            if gside is None or cside is None:
                continue
            if gside != cside:
                checks.append(
                    CheckResult(
                        f"cross-check:{names[idx]}",
                        False,
                        f"routes disagree on {names[idx]}: groebner says "
                        f"{gside}, minimal primes say {cside}",
                    )
                )

    failed = any(c.ok is False for c in checks)
    skipped = any(c.ok is None for c in checks)
    if failed:
        holds, status = False, "fails"
    elif skipped:
        holds, status = None, "inconclusive"
    else:
        holds, status = True, "holds"
    height = arr.height_afold(j)
    stci = None
    if holds is not None:
        stci = bool(holds and height == len(cert.gens) == j + 1)
    return VerificationReport(
        holds=holds,
        status=status,
        mode=mode,
        n=arr.n,
        a=a,
        j=j,
        height=height,
        generator_count=len(cert.gens),
        stci=stci,
        checks=checks,
        wall_time_seconds=time.monotonic() - t0,
    )


class SVPartition:
    """Ground set of form products split into ordered levels."""

    __slots__ = ("field", "ground", "parts")

    def __init__(self, field, ground, parts):
        self.field = field
        self.ground = tuple(ground)
        self.parts = tuple(tuple(part) for part in parts)

    def __repr__(self):
        sizes = [len(p) for p in self.parts]
        return f"SVPartition({len(self.ground)} products, levels {sizes})"


def sv_check_partition(partition: SVPartition):
    """Validate the covering and divisibility conditions.

    Returns (ok, witness).  The conditions: the levels partition the
    ground set, level zero is a single product, and any two distinct
    products at one level have their pairwise product divisible by
    something from a strictly earlier level.  An empty partition of an
    empty ground set is vacuously valid.
    """
    ground = set(partition.ground)
    parts = partition.parts
    if not parts and not ground:
        return True, None
    if not parts:
        return False, "ground set is nonempty but there are no levels"
    seen = {}
    for l, part in enumerate(parts):
        if not part:
            return False, f"level {l} is empty"
        for p in part:
            if p in seen:
                return False, (
                    f"product {p!r} appears in levels {seen[p]} and {l}"
                )
            seen[p] = l
    extra = set(seen) - ground
    if extra:
        return False, f"product {next(iter(extra))!r} is not in the ground set"
    missing = ground - set(seen)
    if missing:
        return False, f"product {next(iter(missing))!r} is missing from the levels"
    if len(parts[0]) != 1:
        return False, f"level 0 must hold exactly one product, found {len(parts[0])}"
    for l in range(1, len(parts)):
        for p, q in combinations(parts[l], 2):
            pq = ProductOfForms(partition.field, p.factors + q.factors)
            found = any(
                product_divides(d, pq) for l2 in range(l) for d in parts[l2]
            )
            if not found:
                return False, (
                    f"no earlier product divides ({p!r}) * ({q!r}) at level {l}"
                )
    return True, None


def sv_sums(partition: SVPartition, ring: Ring):
    """The level sums: one polynomial per level, exponents all one.

    When the partition passes the checks, these cut out the same
    variety as the whole ground set, bounding the arithmetic rank by
    the number of levels.
    """
    out = []
    for part in partition.parts:
        acc = ring.zero
        for p in part:
            acc = acc + p.expand(ring)
        out.append(acc)
    return tuple(out)


def sv_ara_partition(arrangement: Arrangement, j: int) -> SVPartition:
    """Level structure on all (n-j)-fold products, by smallest label.

    Level 0 is the tail product of the last n-j forms; level u collects
    the products whose smallest label is j-u+1.  This is valid for any
    arrangement, so j+1 polynomials always suffice up to radical.
    """
    n = arrangement.n
    if not 0 <= j <= n - 1:
        raise UsageError(f"codim parameter must lie in 0..{n - 1}, got {j}")
    ground = arrangement.afold_products(n - j)
    parts = [(arrangement.subset_product(range(j + 1, n + 1)),)]
    for u in range(1, j + 1):
        b = j - u + 1
        part = tuple(
            arrangement.subset_product((b,) + rest)
            for rest in combinations(range(b + 1, n + 1), n - j - 1)
        )
        parts.append(part)
    return SVPartition(arrangement.field, ground, parts)
