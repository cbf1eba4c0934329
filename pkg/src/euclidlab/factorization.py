"""Irreducibles, factorizations and algebraic gcds, by exhaustive search.

An element is irreducible when its only divisors are the identity and
itself.  ``factorizations`` enumerates every multiset of irreducibles
with the given product, so non-unique factorization shows up as a list
with more than one entry.  An algebraic gcd is a common divisor that
every common divisor divides; the report keeps the full common-divisor
set and its maximal elements so absence is explainable.

The survey functions sweep all elements up to a norm bound and record
which classical divisibility properties hold there, each failure backed
by a concrete witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import InvalidInputError
from .monoids import (
    DivisibilityTable,
    Element,
    Monoid,
    common_divisors,
    divisors,
    enumerate_up_to,
    mul,
    try_divide,
)


@dataclass(frozen=True)
class Factorization:
    """A multiset of irreducibles, stored sorted, whose product is element."""

    element: Element
    factors: tuple[Element, ...]

    def verifies(self) -> bool:
        prod = self.element.monoid.identity
        for f in self.factors:
            prod = prod * f
        return prod == self.element


@dataclass(frozen=True)
class GcdReport:
    pair: tuple[Element, Element]
    common: tuple[Element, ...]
    maximal: tuple[Element, ...]
    gcd: Optional[Element]

    @property
    def exists(self) -> bool:
        return self.gcd is not None


@dataclass(frozen=True)
class PropertyFlag:
    """A surveyed property: holds, or fails with recorded witnesses."""

    holds: bool
    witnesses: tuple = ()


@dataclass
class SurveyReport:
    monoid: Monoid
    bound: int
    flags: dict[str, PropertyFlag] = field(default_factory=dict)


# -- witnesses ---------------------------------------------------------------


@dataclass(frozen=True)
class GcdAbsenceWitness:
    pair: tuple[Element, Element]
    maximal: tuple[Element, ...]

    def to_payload(self) -> dict:
        return {
            "kind": "missing_algebraic_gcd",
            "pair": [e.to_payload() for e in self.pair],
            "maximal_common_divisors": [e.to_payload() for e in self.maximal],
        }


@dataclass(frozen=True)
class FactorizationWitness:
    element: Element
    factorizations: tuple[tuple[Element, ...], ...]

    def to_payload(self) -> dict:
        return {
            "kind": "non_unique_factorization",
            "element": self.element.to_payload(),
            "factorizations": [[f.to_payload() for f in fs]
                               for fs in self.factorizations],
        }


@dataclass(frozen=True)
class EuclidLemmaWitness:
    irreducible: Element
    a: Element
    b: Element
    product: Element

    def to_payload(self) -> dict:
        return {
            "kind": "euclid_lemma_failure",
            "irreducible": self.irreducible.to_payload(),
            "a": self.a.to_payload(),
            "b": self.b.to_payload(),
            "product": self.product.to_payload(),
        }


# -- single-element operations ----------------------------------------------


def is_irreducible(x: Element, *, ceiling: int | None = None) -> bool:
    """True when x is not the identity and divides only trivially."""
    if x.is_identity():
        return False
    return len(divisors(x, ceiling=ceiling)) == 2


def factorizations(x: Element, *, ceiling: int | None = None) -> list[Factorization]:
    """Every factorization of x into irreducibles, as sorted multisets.

    The identity factors as the empty product.  Branching walks
    irreducible divisors in nondecreasing norm order and never picks a
    factor below the previous one, so each multiset appears exactly once;
    the result list is itself canonically ordered.
    """
    monoid = x.monoid

    def irreducible_divisors(y: Element) -> list[Element]:
        return [u for u in divisors(y, nontrivial=True, ceiling=ceiling)
                if is_irreducible(u, ceiling=ceiling)]

    memo: dict[tuple[Element, Element | None], tuple[tuple[Element, ...], ...]] = {}

    def descend(y: Element, floor: Element | None) -> tuple[tuple[Element, ...], ...]:
        if y.is_identity():
            return ((),)
        key = (y, floor)
        if key in memo:
            return memo[key]
        out = []
        for p in irreducible_divisors(y):
            if floor is not None and p < floor:
                continue
            rest = try_divide(y, p)
            for tail in descend(rest, p):
                out.append((p,) + tail)
        memo[key] = tuple(out)
        return memo[key]

    return [Factorization(x, fs) for fs in sorted(descend(x, None))]


def algebraic_gcd(a: Element, b: Element, *,
                  ceiling: int | None = None) -> GcdReport:
    """Search for a common divisor that every common divisor divides.

    The report lists all common divisors and the maximal ones under
    divisibility; the gcd is present exactly when there is a single
    maximal common divisor and everything else divides it.
    """
    common = common_divisors(a, b, ceiling=ceiling)
    maximal = [u for u in common
               if not any(v != u and try_divide(v, u) is not None
                          for v in common)]
    gcd_elem = None
    if len(maximal) == 1:
        candidate = maximal[0]
        if all(try_divide(candidate, u) is not None for u in common):
            gcd_elem = candidate
    return GcdReport(pair=(a, b), common=tuple(common),
                     maximal=tuple(maximal), gcd=gcd_elem)


# -- surveys ------------------------------------------------------------------


def euclid_lemma_survey(monoid: Monoid, bound: int, *,
                        ceiling: int | None = None) -> PropertyFlag:
    """Check p | a*b implies p | a or p | b for all irreducibles p and
    elements a, b of norm at most bound.

    Only p, a and b are bounded; the product a*b is tested directly even
    when its norm exceeds the bound.  Reports the first failing triple in
    (p, a, b) order, or holds with no witnesses.
    """
    table = DivisibilityTable(monoid, bound, ceiling=ceiling)
    elems = table.elements
    n = len(elems)
    for pi in range(n):
        if not table.is_irreducible(pi):
            continue
        p = elems[pi]
        coprime = [i for i in range(n) if not table.divides(pi, i)]
        for ai in coprime:
            a = elems[ai]
            for bi in coprime:
                product = a * elems[bi]
                if try_divide(product, p) is not None:
                    witness = EuclidLemmaWitness(
                        irreducible=p, a=a, b=elems[bi], product=product)
                    return PropertyFlag(holds=False, witnesses=(witness,))
    return PropertyFlag(holds=True)


def _gcd_existence_flag(table: DivisibilityTable) -> PropertyFlag:
    """Algebraic gcds for every pair of elements in the table."""
    elems = table.elements
    div_ids = table.divisor_ids
    n = len(elems)
    failures = []
    for ai in range(n):
        for bi in range(ai, n):
            common = div_ids[ai] & div_ids[bi]
            if len(common) <= 2:
                continue  # {identity} or {identity, u}: gcd clearly exists
            maximal = [ui for ui in common
                       if not any(vi != ui and ui in div_ids[vi]
                                  for vi in common)]
            if len(maximal) == 1:
                g = maximal[0]
                if all(ui in div_ids[g] for ui in common):
                    continue
            failures.append(GcdAbsenceWitness(
                pair=(elems[ai], elems[bi]),
                maximal=tuple(elems[ui] for ui in sorted(maximal))))
    return PropertyFlag(holds=not failures, witnesses=tuple(failures))


def _count_factorizations(table: DivisibilityTable) -> list[int]:
    """Number of irreducible multisets with each element as product."""
    n = len(table.elements)
    irreducible = [table.is_irreducible(i) for i in range(n)]
    memo: dict[tuple[int, int], int] = {}

    def count(xi: int, floor: int) -> int:
        if xi == 0:  # the identity: empty product only
            return 1
        key = (xi, floor)
        if key in memo:
            return memo[key]
        total = 0
        for pi in sorted(table.divisor_ids[xi]):
            if pi < floor or not irreducible[pi]:
                continue
            total += count(table.quotient[(xi, pi)], pi)
        memo[key] = total
        return total

    return [count(xi, 0) for xi in range(n)]


def _unique_factorization_flag(table: DivisibilityTable, *,
                               ceiling: int | None = None) -> PropertyFlag:
    counts = _count_factorizations(table)
    failures = []
    for xi, c in enumerate(counts):
        if c > 1:
            x = table.elements[xi]
            all_fs = factorizations(x, ceiling=ceiling)
            failures.append(FactorizationWitness(
                element=x,
                factorizations=tuple(f.factors for f in all_fs)))
    return PropertyFlag(holds=not failures, witnesses=tuple(failures))


def three_property_survey(monoid: Monoid, bound: int, *,
                          ceiling: int | None = None) -> SurveyReport:
    """Survey the three classically equivalent divisibility properties.

    Flags: transitivity of Pythagorean proportionality, existence of
    algebraic gcds for all pairs, and uniqueness of factorization, all
    over elements of norm at most bound; Euclid's lemma rides along as a
    fourth, derived flag.  The report records the flags as found and
    asserts nothing about their agreement.
    """
    from .proportion import transitivity_survey  # deferred: proportion imports us

    table = DivisibilityTable(monoid, bound, ceiling=ceiling)
    trans = transitivity_survey(monoid, bound, ceiling=ceiling)
    report = SurveyReport(monoid=monoid, bound=bound)
    report.flags["pythagorean_transitive"] = trans.flags["pythagorean_transitive"]
    report.flags["algebraic_gcds_exist"] = _gcd_existence_flag(table)
    report.flags["unique_factorization"] = _unique_factorization_flag(
        table, ceiling=ceiling)
    report.flags["euclid_lemma"] = euclid_lemma_survey(
        monoid, bound, ceiling=ceiling)
    return report
