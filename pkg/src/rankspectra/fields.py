"""Exact arithmetic in towers of finite fields.

A :class:`FieldTower` is a chain F_p < F_{p^a} < F_{p^ab} < ... built by
repeatedly adjoining a root of a monic irreducible polynomial over the
current top level.  Elements of level ``i`` are represented by a canonical
integer encoding: the little-endian digit expansion of the coefficient
vector in the polynomial basis {1, a, a^2, ...} over level ``i-1``,
applied recursively down to integers mod p.  The encoding is a bijection
between level-``i`` elements and ``range(size(i))``; 0 encodes zero and
1 encodes one, and embedding an element into a higher level preserves its
encoding.

All operations are pure functions of the encodings; a tower is immutable
after construction and safe to share between threads.
"""

from __future__ import annotations

import numpy as np

from .errors import InputError, ResourceLimitError, StructuralError

# Constructed fields are capped at 2**31 elements; this is a desk-scale
# library, not a cryptographic one.
MAX_FIELD_SIZE = 2**31

# Multiplication tables are built lazily for levels up to this size.
_MUL_TABLE_LIMIT = 1 << 10


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class FieldTower:
    """A prime field together with a chain of extension steps.

    Level 0 is F_p; level ``i`` is obtained from level ``i-1`` by adjoining
    a root of ``moduli[i]`` (a monic irreducible polynomial over level
    ``i-1``, stored as a little-endian tuple of level-``i-1`` encodings).
    """

    __slots__ = ("p", "moduli", "degrees", "sizes", "_mul_tables", "_signature")

    def __init__(self, p: int, _moduli=(), _degrees=(), _sizes=None):
        if not is_prime(p):
            raise InputError(f"characteristic must be prime, got {p}")
        self.p = p
        self.moduli = tuple(_moduli)
        self.degrees = tuple(_degrees)
        if _sizes is None:
            sizes = [p]
            for d in self.degrees:
                sizes.append(sizes[-1] ** d)
            self.sizes = tuple(sizes)
        else:
            self.sizes = tuple(_sizes)
        self._mul_tables = {}
        self._signature = (self.p, self.moduli)

    # -- construction -------------------------------------------------

    @classmethod
    def prime_field(cls, p: int) -> "FieldTower":
        return cls(p)

    def extend(self, modulus) -> "FieldTower":
        """Return a new tower with one more level, adjoining a root of ``modulus``.

        ``modulus`` is a little-endian coefficient sequence over the current
        top level; it must be monic of degree >= 2 and irreducible.
        """
        modulus = tuple(int(c) for c in modulus)
        degree = len(modulus) - 1
        if degree < 2:
            raise InputError("extension modulus must have degree >= 2")
        top = self.top_level
        size = self.sizes[top]
        if any(not (0 <= c < size) for c in modulus):
            raise InputError("modulus coefficients out of range for the top level")
        if modulus[-1] != 1:
            raise InputError("modulus must be monic")
        if size**degree > MAX_FIELD_SIZE:
            raise InputError(
                f"field of size {size}^{degree} exceeds the {MAX_FIELD_SIZE} element cap"
            )
        factor_deg = self._reducible_factor_degree(modulus, top)
        if factor_deg is not None:
            raise InputError(
                f"modulus is reducible: it has an irreducible factor of degree {factor_deg}"
            )
        return FieldTower(
            self.p,
            self.moduli + (modulus,),
            self.degrees + (degree,),
            self.sizes + (size**degree,),
        )

    @property
    def top_level(self) -> int:
        return len(self.degrees)

    def size(self, level: int = -1) -> int:
        return self.sizes[self._idx(level)]

    def _idx(self, level: int) -> int:
        if level < 0:
            level += self.top_level + 1
        if not (0 <= level <= self.top_level):
            raise InputError(f"no such tower level: {level}")
        return level

    def ext_degree(self, level: int, sublevel: int = 0) -> int:
        """Degree of level over sublevel (product of step degrees)."""
        level, sublevel = self._idx(level), self._idx(sublevel)
        if sublevel > level:
            raise InputError("sublevel must not be above level")
        deg = 1
        for d in self.degrees[sublevel:level]:
            deg *= d
        return deg

    def __eq__(self, other):
        return isinstance(other, FieldTower) and self._signature == other._signature

    def __hash__(self):
        return hash(self._signature)

    def __repr__(self):
        return f"FieldTower(p={self.p}, sizes={list(self.sizes)})"

    # -- digit plumbing ------------------------------------------------

    def _split(self, x: int, level: int):
        """Digits of a level-``level`` element over level ``level-1`` (little-endian)."""
        base = self.sizes[level - 1]
        return [(x // base**i) % base for i in range(self.degrees[level - 1])]

    def _join(self, digits, level: int) -> int:
        base = self.sizes[level - 1]
        x = 0
        for c in reversed(digits):
            x = x * base + c
        return x

    # -- field operations ----------------------------------------------

    def add(self, a: int, b: int, level: int = -1) -> int:
        level = self._idx(level)
        if level == 0:
            return (a + b) % self.p
        da, db = self._split(a, level), self._split(b, level)
        return self._join([self.add(x, y, level - 1) for x, y in zip(da, db)], level)

    def neg(self, a: int, level: int = -1) -> int:
        level = self._idx(level)
        if level == 0:
            return (-a) % self.p
        return self._join([self.neg(x, level - 1) for x in self._split(a, level)], level)

    def sub(self, a: int, b: int, level: int = -1) -> int:
        return self.add(a, self.neg(b, level), level)

    def mul(self, a: int, b: int, level: int = -1) -> int:
        level = self._idx(level)
        table = self._mul_tables.get(level)
        if table is not None:
            return int(table[a, b])
        if level == 0:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        da, db = self._split(a, level), self._split(b, level)
        deg = self.degrees[level - 1]
        prod = [0] * (2 * deg - 1)
        for i, x in enumerate(da):
            if x == 0:
                continue
            for j, y in enumerate(db):
                if y == 0:
                    continue
                prod[i + j] = self.add(prod[i + j], self.mul(x, y, level - 1), level - 1)
        self._reduce_inplace(prod, level)
        return self._join(prod[:deg], level)

    def _reduce_inplace(self, prod, level: int) -> None:
        # x^deg = -(low-order modulus coefficients), applied from the top down
        modulus = self.moduli[level - 1]
        deg = self.degrees[level - 1]
        for i in range(len(prod) - 1, deg - 1, -1):
            c = prod[i]
            if c == 0:
                continue
            prod[i] = 0
            for j in range(deg):
                if modulus[j] == 0:
                    continue
                term = self.mul(c, modulus[j], level - 1)
                prod[i - deg + j] = self.sub(prod[i - deg + j], term, level - 1)

    def pow(self, a: int, e: int, level: int = -1) -> int:
        level = self._idx(level)
        if e < 0:
            a, e = self.inv(a, level), -e
        result = 1 % self.sizes[level]
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base, level)
            base = self.mul(base, base, level)
            e >>= 1
        return result

    def inv(self, a: int, level: int = -1) -> int:
        level = self._idx(level)
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        return self.pow(a, self.sizes[level] - 2, level)

    def div(self, a: int, b: int, level: int = -1) -> int:
        return self.mul(a, self.inv(b, level), level)

    def frobenius(self, a: int, level: int = -1, base_level: int = 0) -> int:
        """x -> x^s for s the size of ``base_level``; fixes that subfield pointwise."""
        level = self._idx(level)
        return self.pow(a, self.sizes[self._idx(base_level)], level)

    # -- coordinate expansion ------------------------------------------

    def coords(self, x: int, level: int = -1, sublevel: int = 0):
        """Coordinates of ``x`` over ``sublevel`` in the tower's polynomial basis.

        Returns a tuple of ``ext_degree(level, sublevel)`` sublevel encodings,
        little-endian; round-trips with :meth:`from_coords`.
        """
        level, sublevel = self._idx(level), self._idx(sublevel)
        if sublevel > level:
            raise InputError("sublevel must not be above level")
        if level == sublevel:
            return (x,)
        out = []
        for digit in self._split(x, level):
            out.extend(self.coords(digit, level - 1, sublevel))
        return tuple(out)

    def from_coords(self, coeffs, level: int = -1, sublevel: int = 0) -> int:
        level, sublevel = self._idx(level), self._idx(sublevel)
        coeffs = list(coeffs)
        if len(coeffs) != self.ext_degree(level, sublevel):
            raise InputError("coordinate vector has the wrong length")
        if level == sublevel:
            return coeffs[0]
        step = self.ext_degree(level - 1, sublevel)
        digits = [
            self.from_coords(coeffs[i * step : (i + 1) * step], level - 1, sublevel)
            for i in range(self.degrees[level - 1])
        ]
        return self._join(digits, level)

    # -- polynomials over a level (for irreducibility work) ------------

    def _poly_trim(self, f):
        while f and f[-1] == 0:
            f.pop()
        return f

    def _poly_mod(self, f, g, level):
        """Remainder of f modulo g (g nonzero), little-endian lists."""
        f = self._poly_trim(list(f))
        g = self._poly_trim(list(g))
        dg = len(g) - 1
        lead_inv = self.inv(g[-1], level)
        while len(f) - 1 >= dg and f:
            c = self.mul(f[-1], lead_inv, level)
            shift = len(f) - 1 - dg
            for j in range(dg + 1):
                f[shift + j] = self.sub(f[shift + j], self.mul(c, g[j], level), level)
            self._poly_trim(f)
        return f

    def _poly_mulmod(self, a, b, mod, level):
        prod = [0] * (len(a) + len(b) - 1) if a and b else []
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y == 0:
                    continue
                prod[i + j] = self.add(prod[i + j], self.mul(x, y, level), level)
        return self._poly_mod(prod, mod, level)

    def _poly_gcd(self, f, g, level):
        f = self._poly_trim(list(f))
        g = self._poly_trim(list(g))
        while g:
            f, g = g, self._poly_mod(f, g, level)
        if f:
            lead_inv = self.inv(f[-1], level)
            f = [self.mul(c, lead_inv, level) for c in f]
        return f

    def _poly_powmod(self, a, e, mod, level):
        result = [1]
        base = self._poly_mod(a, mod, level)
        while e:
            if e & 1:
                result = self._poly_mulmod(result, base, mod, level)
            base = self._poly_mulmod(base, base, mod, level)
            e >>= 1
        return result

    def _reducible_factor_degree(self, f, level):
        """Smallest degree of an irreducible factor witnessing reducibility, else None.

        gcd-based: f (monic, deg d) has a factor of degree i iff
        gcd(f, X^{s^i} - X) != 1; checking i <= d // 2 decides irreducibility.
        """
        d = len(f) - 1
        if d < 1:
            raise InputError("polynomial must have degree >= 1")
        if d == 1:
            return None
        s = self.sizes[level]
        h = self._poly_mod([0, 1], f, level)
        for i in range(1, d // 2 + 1):
            h = self._poly_powmod(h, s, f, level)
            diff = list(h) + [0] * (2 - len(h))
            diff[1] = self.sub(diff[1], 1, level)
            g = self._poly_gcd(f, diff, level)
            if len(g) - 1 > 0:
                return i
        return None

    def is_irreducible(self, f, level: int = -1) -> bool:
        level = self._idx(level)
        f = tuple(f)
        if not f or f[-1] != 1:
            raise InputError("irreducibility test expects a monic polynomial")
        return self._reducible_factor_degree(f, level) is None

    def find_irreducible(self, degree: int, level: int = -1):
        """Encoding-minimal monic irreducible polynomial of ``degree`` over ``level``.

        Candidates are scanned by increasing integer encoding of the
        non-leading coefficient vector, so the result is deterministic.
        """
        level = self._idx(level)
        if degree < 1:
            raise InputError("degree must be >= 1")
        size = self.sizes[level]
        for enc in range(size**degree):
            coeffs = [(enc // size**i) % size for i in range(degree)]
            f = tuple(coeffs) + (1,)
            if self._reducible_factor_degree(f, level) is None:
                return f
        raise StructuralError("no irreducible polynomial found")  # pragma: no cover

    # -- tables ---------------------------------------------------------

    def mul_table(self, level: int = -1) -> np.ndarray:
        """Dense multiplication table for a level (size capped); cached.

        Lower-level tables are built first so that higher tables are cheap.
        Subsequent scalar ``mul`` calls at this level use the table too.
        """
        level = self._idx(level)
        table = self._mul_tables.get(level)
        if table is not None:
            return table
        size = self.sizes[level]
        if size > _MUL_TABLE_LIMIT:
            raise ResourceLimitError(
                f"refusing to build a {size}x{size} multiplication table",
                required=size * size,
                cap=_MUL_TABLE_LIMIT * _MUL_TABLE_LIMIT,
            )
        if level > 0 and self.sizes[level - 1] <= _MUL_TABLE_LIMIT:
            self.mul_table(level - 1)
        table = np.empty((size, size), dtype=np.uint32)
        for a in range(size):
            table[a, 0] = 0
            for b in range(1, size):
                table[a, b] = self.mul(a, b, level)
        self._mul_tables[level] = table
        return table


def prime_field(p: int) -> FieldTower:
    """One-level tower F_p; errors on composite p."""
    return FieldTower.prime_field(p)
