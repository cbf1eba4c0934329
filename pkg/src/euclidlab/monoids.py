"""Commutative cancellative monoids with exact arithmetic.

Three monoids are built in:

* ``Naturals``: the positive integers under multiplication.
* ``Congruence(r, m)``: ``{n >= 1 : n = r (mod m)}`` with 1 adjoined as
  identity.  Requires ``r*r = r (mod m)`` so the set is closed.
* ``Quadratic(d)``: numbers ``a + b*sqrt(d)`` with integer ``a, b >= 0``,
  not both zero, for a square-free radicand ``d >= 2``.

All arithmetic is exact: arbitrary-precision integers throughout, and
order comparisons involving ``sqrt(d)`` are decided by sign analysis and
squaring, never by floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key, lru_cache
from math import isqrt
from typing import Iterator

from .errors import (
    BoundExceededError,
    InvalidInputError,
    MonoidMismatchError,
)

#: Default cap on candidates a single enumeration may inspect.  Override
#: per call via the ``ceiling`` keyword accepted by enumerating operations.
DEFAULT_ENUMERATION_CEILING = 1_000_000


def _require_int(value: object, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInputError(f"{what} must be an integer, got {value!r}")
    return value


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


def _sign_with_radical(x: int, y: int, d: int) -> int:
    """Sign of ``x + y*sqrt(d)`` for integers x, y and square-free d >= 2."""
    if y == 0:
        return _sign(x)
    if x == 0:
        return _sign(y)
    if x > 0 and y > 0:
        return 1
    if x < 0 and y < 0:
        return -1
    # Opposite signs: the comparison survives squaring.
    lhs, rhs = x * x, d * y * y
    if x > 0:  # y < 0: positive iff x > |y|*sqrt(d)
        return _sign(lhs - rhs)
    return _sign(rhs - lhs)  # x < 0, y > 0: positive iff |x| < y*sqrt(d)


def _floor_sqrt(n: int) -> int:
    """floor(sqrt(n)) for n >= 0."""
    return isqrt(n)


def _ceil_sqrt(n: int) -> int:
    """ceil(sqrt(n)) for n >= 0."""
    if n <= 0:
        return 0
    r = isqrt(n - 1)
    return r + 1


@dataclass(frozen=True)
class Element:
    """A monoid element: an immutable parts tuple tagged with its monoid.

    Scalar monoids use one part ``(n,)``; quadratic monoids use two,
    ``(a, b)`` standing for ``a + b*sqrt(d)``.  Build elements through
    ``Monoid.element`` so membership is validated.
    """

    monoid: "Monoid"
    parts: tuple[int, ...]

    @property
    def value(self) -> int:
        """The integer value, for scalar monoids only."""
        if len(self.parts) != 1:
            raise InvalidInputError("value is only defined for scalar monoids")
        return self.parts[0]

    @property
    def pair(self) -> tuple[int, int]:
        """The ``(a, b)`` pair, for quadratic monoids only."""
        if len(self.parts) != 2:
            raise InvalidInputError("pair is only defined for quadratic monoids")
        return self.parts  # type: ignore[return-value]

    def is_identity(self) -> bool:
        return self.parts == self.monoid._identity_parts()

    def __mul__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        if other.monoid != self.monoid:
            raise MonoidMismatchError(
                f"cannot multiply across monoids: {self.monoid.spec_text()!r} "
                f"vs {other.monoid.spec_text()!r}")
        return Element(self.monoid, self.monoid._mul_parts(self.parts, other.parts))

    def _cmp(self, other: "Element") -> int:
        if other.monoid != self.monoid:
            raise MonoidMismatchError(
                f"cannot order across monoids: {self.monoid.spec_text()!r} "
                f"vs {other.monoid.spec_text()!r}")
        c = self.monoid._norm_cmp_parts(self.parts, other.parts)
        if c:
            return c
        return (self.parts > other.parts) - (self.parts < other.parts)

    def __lt__(self, other: "Element") -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._cmp(other) < 0

    def __le__(self, other: "Element") -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._cmp(other) <= 0

    def __gt__(self, other: "Element") -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._cmp(other) > 0

    def __ge__(self, other: "Element") -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._cmp(other) >= 0

    def render(self) -> str:
        """Canonical text form, e.g. ``42`` or ``3+8*sqrt(2)``."""
        return self.monoid._render_parts(self.parts)

    def to_payload(self) -> int | list[int]:
        """Canonical JSON form: an integer, or ``[a, b]`` for quadratic."""
        return self.monoid._parts_payload(self.parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"<{self.render()} in {self.monoid.spec_text()}>"


class Monoid:
    """Descriptor and arithmetic kernel for one monoid.

    Subclasses are frozen dataclasses, so descriptors compare and hash by
    value and can tag elements cheaply.
    """

    # -- public surface ----------------------------------------------------

    def spec_text(self) -> str:
        """The canonical spec string this monoid parses from."""
        raise NotImplementedError

    @property
    def identity(self) -> Element:
        return Element(self, self._identity_parts())

    def contains(self, *parts: int) -> bool:
        """Membership test for raw components.

        Negative components are malformed and raise InvalidInputError;
        well-formed non-members (such as 0, or the pair (0, 0)) return
        False.
        """
        raise NotImplementedError

    def element(self, *parts: int) -> Element:
        """Validated element constructor."""
        if not self.contains(*parts):
            rendered = self._render_parts(tuple(parts))
            raise InvalidInputError(
                f"{rendered} is not a member of {self.spec_text()!r}")
        return Element(self, tuple(parts))

    # -- kernel methods on raw parts ---------------------------------------

    def _identity_parts(self) -> tuple[int, ...]:
        raise NotImplementedError

    def _mul_parts(self, p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
        raise NotImplementedError

    def _try_divide_parts(self, b: tuple[int, ...], a: tuple[int, ...]) -> tuple[int, ...] | None:
        raise NotImplementedError

    def _norm_cmp_parts(self, p: tuple[int, ...], q: tuple[int, ...]) -> int:
        raise NotImplementedError

    def _bound_parts(self, bound: "int | Element") -> tuple[int, ...]:
        """Normalize an integer or element bound to comparable parts."""
        raise NotImplementedError

    def _count_up_to(self, bound: tuple[int, ...], ceiling: int) -> int:
        """Candidate count for the bound; may raise BoundExceededError early."""
        raise NotImplementedError

    def _iter_parts_up_to(self, bound: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        raise NotImplementedError

    def _render_parts(self, p: tuple[int, ...]) -> str:
        raise NotImplementedError

    def _parts_payload(self, p: tuple[int, ...]) -> int | list[int]:
        raise NotImplementedError


@dataclass(frozen=True)
class Naturals(Monoid):
    """Positive integers under multiplication."""

    def spec_text(self) -> str:
        return "nat"

    def contains(self, *parts: int) -> bool:
        if len(parts) != 1:
            raise InvalidInputError("a natural number has one component")
        n = _require_int(parts[0], "component")
        if n < 0:
            raise InvalidInputError(f"component must not be negative, got {n}")
        return n >= 1

    def _identity_parts(self) -> tuple[int, ...]:
        return (1,)

    def _mul_parts(self, p, q):
        return (p[0] * q[0],)

    def _try_divide_parts(self, b, a):
        quot, rem = divmod(b[0], a[0])
        if rem != 0 or quot < 1:
            return None
        return (quot,)

    def _norm_cmp_parts(self, p, q):
        return _sign(p[0] - q[0])

    def _bound_parts(self, bound):
        if isinstance(bound, Element):
            if bound.monoid != self:
                raise MonoidMismatchError("bound element belongs to another monoid")
            return bound.parts
        return (_require_int(bound, "bound"),)

    def _count_up_to(self, bound, ceiling):
        return bound[0]

    def _iter_parts_up_to(self, bound):
        for n in range(1, bound[0] + 1):
            yield (n,)

    def _render_parts(self, p):
        return str(p[0])

    def _parts_payload(self, p):
        return p[0]


@dataclass(frozen=True)
class Congruence(Monoid):
    """``{n >= 1 : n = residue (mod modulus)}`` with 1 adjoined.

    Closure under multiplication needs ``residue**2 = residue (mod
    modulus)``; the constructor rejects descriptors violating that, naming
    a concrete product as witness.
    """

    residue: int
    modulus: int

    def __post_init__(self):
        r = _require_int(self.residue, "residue")
        m = _require_int(self.modulus, "modulus")
        if r < 1:
            raise InvalidInputError(f"residue must be positive, got {r}")
        if m < 1:
            raise InvalidInputError(f"modulus must be positive, got {m}")
        if (r * r - r) % m != 0:
            s = self._least_member()
            raise InvalidInputError(
                f"monoid 'congruence {r} mod {m}' is not multiplicatively "
                f"closed: product {s * s} has residue {(s * s) % m}, "
                f"expected {r % m}")

    def _least_member(self) -> int:
        """Smallest positive integer congruent to the residue."""
        s = self.residue % self.modulus
        return s if s else self.modulus

    def spec_text(self) -> str:
        return f"congruence {self.residue} mod {self.modulus}"

    def contains(self, *parts: int) -> bool:
        if len(parts) != 1:
            raise InvalidInputError("a congruence element has one component")
        n = _require_int(parts[0], "component")
        if n < 0:
            raise InvalidInputError(f"component must not be negative, got {n}")
        if n == 1:
            return True
        return n >= 1 and n % self.modulus == self.residue % self.modulus

    def _identity_parts(self):
        return (1,)

    def _mul_parts(self, p, q):
        return (p[0] * q[0],)

    def _try_divide_parts(self, b, a):
        quot, rem = divmod(b[0], a[0])
        if rem != 0 or quot < 1:
            return None
        if quot != 1 and quot % self.modulus != self.residue % self.modulus:
            return None
        return (quot,)

    def _norm_cmp_parts(self, p, q):
        return _sign(p[0] - q[0])

    def _bound_parts(self, bound):
        if isinstance(bound, Element):
            if bound.monoid != self:
                raise MonoidMismatchError("bound element belongs to another monoid")
            return bound.parts
        return (_require_int(bound, "bound"),)

    def _count_up_to(self, bound, ceiling):
        n = bound[0]
        s = self._least_member()
        in_class = 0 if s > n else (n - s) // self.modulus + 1
        return in_class if s == 1 else in_class + 1

    def _iter_parts_up_to(self, bound):
        n = bound[0]
        s = self._least_member()
        if s != 1:
            yield (1,)
        for k in range(s, n + 1, self.modulus):
            yield (k,)

    def _render_parts(self, p):
        return str(p[0])

    def _parts_payload(self, p):
        return p[0]


def _square_free(n: int) -> bool:
    if n % 4 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Quadratic(Monoid):
    """``a + b*sqrt(d)`` with integers ``a, b >= 0``, not both zero.

    The radicand must be square-free and at least 2, which keeps
    ``sqrt(d)`` irrational; distinct pairs then have distinct values, and
    sign analysis plus squaring decides every comparison exactly.
    """

    radicand: int = 2

    def __post_init__(self):
        d = _require_int(self.radicand, "radicand")
        if d < 2:
            raise InvalidInputError(f"radicand must be at least 2, got {d}")
        if not _square_free(d):
            raise InvalidInputError(f"radicand must be square-free, got {d}")

    def spec_text(self) -> str:
        return f"quadratic {self.radicand}"

    def contains(self, *parts: int) -> bool:
        if len(parts) != 2:
            raise InvalidInputError("a quadratic element has two components")
        a = _require_int(parts[0], "component")
        b = _require_int(parts[1], "component")
        if a < 0 or b < 0:
            raise InvalidInputError(
                f"components must not be negative, got ({a}, {b})")
        return (a, b) != (0, 0)

    def _identity_parts(self):
        return (1, 0)

    def _mul_parts(self, p, q):
        a, b = p
        c, d = q
        r = self.radicand
        return (a * c + r * b * d, a * d + b * c)

    def _try_divide_parts(self, b, a):
        # Solve (c + d*sqrt(r)) * (e + f*sqrt(r)) = x + y*sqrt(r) for e, f.
        x, y = b
        c, d = a
        r = self.radicand
        det = c * c - r * d * d  # nonzero: sqrt(r) is irrational
        e_num = x * c - r * y * d
        f_num = y * c - x * d
        e, e_rem = divmod(e_num, det)
        f, f_rem = divmod(f_num, det)
        if e_rem or f_rem or e < 0 or f < 0 or (e, f) == (0, 0):
            return None
        return (e, f)

    def _norm_cmp_parts(self, p, q):
        return _sign_with_radical(p[0] - q[0], p[1] - q[1], self.radicand)

    def _bound_parts(self, bound):
        if isinstance(bound, Element):
            if bound.monoid != self:
                raise MonoidMismatchError("bound element belongs to another monoid")
            return bound.parts
        return (_require_int(bound, "bound"), 0)

    def _b_max(self, bound: tuple[int, ...]) -> int:
        # Largest b with b*sqrt(r) <= A + B*sqrt(r).
        a_cap, b_cap = bound
        return b_cap + _floor_sqrt(a_cap * a_cap // self.radicand)

    def _a_max(self, bound: tuple[int, ...], b: int) -> int:
        # Largest a >= 0 with a + b*sqrt(r) <= A + B*sqrt(r), or -1.
        a_cap, b_cap = bound
        k = b_cap - b
        if k >= 0:
            return a_cap + _floor_sqrt(self.radicand * k * k)
        return a_cap - _ceil_sqrt(self.radicand * k * k)

    def _count_up_to(self, bound, ceiling):
        total = 0
        for b in range(self._b_max(bound) + 1):
            a_max = self._a_max(bound, b)
            if a_max < 0:
                continue
            total += a_max + 1
            if total > ceiling + 1:
                # Enough to know the ceiling is blown; stop counting.
                return total
        return total - 1  # drop (0, 0)

    def _iter_parts_up_to(self, bound):
        for b in range(self._b_max(bound) + 1):
            a_max = self._a_max(bound, b)
            for a in range(a_max + 1):
                if a or b:
                    yield (a, b)

    def _render_parts(self, p):
        a, b = p
        return f"{a}+{b}*sqrt({self.radicand})"

    def _parts_payload(self, p):
        return list(p)


# ---------------------------------------------------------------------------
# Module-level operations


def contains(monoid: Monoid, *parts: int) -> bool:
    """Membership test; see Monoid.contains for the error contract."""
    return monoid.contains(*parts)


def mul(x: Element, y: Element) -> Element:
    """Product of two elements of the same monoid."""
    return x * y


def try_divide(b: Element, a: Element) -> Element | None:
    """The unique q with ``a * q == b``, or None when b is not a multiple
    of a within the monoid.  Uniqueness comes from cancellativity."""
    if b.monoid != a.monoid:
        raise MonoidMismatchError(
            f"cannot divide across monoids: {b.monoid.spec_text()!r} "
            f"vs {a.monoid.spec_text()!r}")
    parts = b.monoid._try_divide_parts(b.parts, a.parts)
    return None if parts is None else Element(b.monoid, parts)


def _resolve_ceiling(ceiling: int | None) -> int:
    if ceiling is None:
        return DEFAULT_ENUMERATION_CEILING
    c = _require_int(ceiling, "ceiling")
    if c < 1:
        raise InvalidInputError(f"ceiling must be positive, got {c}")
    return c


@lru_cache(maxsize=None)
def _enumerate_cached(monoid: Monoid, bound: tuple[int, ...],
                      ceiling: int) -> tuple[Element, ...]:
    count = monoid._count_up_to(bound, ceiling)
    if count > ceiling:
        raise BoundExceededError(
            f"enumeration up to norm {monoid._render_parts(bound)} needs "
            f"{count} candidates, over the ceiling of {ceiling}",
            candidates=count, ceiling=ceiling)
    parts = list(monoid._iter_parts_up_to(bound))
    parts.sort(key=cmp_to_key(monoid._norm_cmp_parts))
    return tuple(Element(monoid, p) for p in parts)


def enumerate_up_to(monoid: Monoid, bound: int | Element, *,
                    ceiling: int | None = None) -> list[Element]:
    """All elements of norm at most ``bound``, in nondecreasing norm order.

    ``bound`` is an integer or an element of the monoid.  Raises
    BoundExceededError when more than ``ceiling`` candidates would be
    inspected (default DEFAULT_ENUMERATION_CEILING); never returns a
    silently truncated list.
    """
    bound_parts = monoid._bound_parts(bound)
    if monoid._norm_cmp_parts(bound_parts, monoid._identity_parts()) < 0:
        raise InvalidInputError("bound must be at least the identity norm")
    return list(_enumerate_cached(monoid, bound_parts, _resolve_ceiling(ceiling)))


@lru_cache(maxsize=None)
def _divisors_cached(x: Element, ceiling: int) -> tuple[Element, ...]:
    monoid = x.monoid
    out = []
    for u in _enumerate_cached(monoid, x.parts, ceiling):
        if monoid._try_divide_parts(x.parts, u.parts) is not None:
            out.append(u)
    return tuple(out)


def divisors(x: Element, *, nontrivial: bool = False,
             ceiling: int | None = None) -> list[Element]:
    """Every divisor of x within the monoid, in nondecreasing norm order.

    The identity always divides and is included; pass ``nontrivial=True``
    to drop it.  Enumeration inspects all candidates of norm at most
    norm(x), so the ceiling guard applies.
    """
    found = _divisors_cached(x, _resolve_ceiling(ceiling))
    if nontrivial:
        return [u for u in found if not u.is_identity()]
    return list(found)


def common_divisors(a: Element, b: Element, *,
                    ceiling: int | None = None) -> list[Element]:
    """Divisors shared by a and b, in nondecreasing norm order."""
    if a.monoid != b.monoid:
        raise MonoidMismatchError("common divisors need a single monoid")
    monoid = a.monoid
    return [u for u in divisors(a, ceiling=ceiling)
            if monoid._try_divide_parts(b.parts, u.parts) is not None]


# ---------------------------------------------------------------------------
# Shared divisibility table for surveys


class DivisibilityTable:
    """Divisibility structure of all elements up to a norm bound.

    Built by one pairwise product scan: every relation ``u * v == x`` with
    ``norm(x) <= bound`` marks u and v as divisors of x and records the
    quotients.  This is a second, independent route to divisor sets; the
    definitional route is ``divisors`` above, and the test suite checks
    they agree.
    """

    def __init__(self, monoid: Monoid, bound: int | Element, *,
                 ceiling: int | None = None):
        self.monoid = monoid
        self.bound = bound
        self.elements = enumerate_up_to(monoid, bound, ceiling=ceiling)
        self.index = {e.parts: i for i, e in enumerate(self.elements)}
        n = len(self.elements)
        bound_parts = monoid._bound_parts(bound)
        div_sets: list[set[int]] = [set() for _ in range(n)]
        quotient: dict[tuple[int, int], int] = {}
        for ui, u in enumerate(self.elements):
            for vi in range(ui, n):
                p = monoid._mul_parts(u.parts, self.elements[vi].parts)
                if monoid._norm_cmp_parts(p, bound_parts) > 0:
                    break  # products grow with v; later v only get bigger
                pi = self.index[p]
                div_sets[pi].add(ui)
                div_sets[pi].add(vi)
                quotient[(pi, ui)] = vi
                quotient[(pi, vi)] = ui
        self.divisor_ids: list[frozenset[int]] = [frozenset(s) for s in div_sets]
        self.quotient = quotient

    def divides(self, ui: int, xi: int) -> bool:
        return ui in self.divisor_ids[xi]

    def is_irreducible(self, xi: int) -> bool:
        return len(self.divisor_ids[xi]) == 2

    def simplifications(self, ai: int, bi: int) -> frozenset[tuple[int, int]]:
        """All ``(a/x, b/x)`` index pairs over common divisors x of (a, b)."""
        common = self.divisor_ids[ai] & self.divisor_ids[bi]
        quot = self.quotient
        return frozenset((quot[(ai, xi)], quot[(bi, xi)]) for xi in common)
