"""Finite fields GF(p^m) backed by log/antilog tables, extension towers
GF(q^m) over GF(q), and polynomial utilities (ordinary and linearized).

Elements are canonical integer indices in [0, q).  The index encodes the
coefficient vector of the element in the polynomial basis {1, b, ..., b^(m-1)}
as base-p (respectively base-q, for towers) digits, lowest power first.  With
that encoding addition is digit-wise and multiplication goes through the
log/antilog tables built from a primitive element.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

MAX_FIELD_ORDER = 1 << 16
ADD_TABLE_LIMIT = 1024  # full q*q add/sub tables are kept below this order


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# generic construction over an arbitrary coefficient field
#
# The same machinery builds GF(p^m) over the integers mod p and GF(q^m) over
# an existing field object: it only needs the base order and add/mul/neg
# callables on base indices.


def _digits(value: int, radix: int, count: int) -> list[int]:
    out = []
    for _ in range(count):
        out.append(value % radix)
        value //= radix
    return out


def _from_digits(digits: Sequence[int], radix: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * radix + d
    return value


class _BaseOps:
    """Coefficient arithmetic used while constructing a field's tables."""

    def __init__(self, order, add, mul, neg):
        self.order = order
        self.add = add
        self.mul = mul
        self.neg = neg

    def sub(self, a, b):
        return self.add(a, self.neg(b))


def _prime_ops(p: int) -> _BaseOps:
    return _BaseOps(p, lambda a, b: (a + b) % p, lambda a, b: (a * b) % p,
                    lambda a: (-a) % p)


def _poly_divmod_digits(num, den, ops: _BaseOps):
    """Divide coefficient lists (lowest first) over the base field."""
    num = list(num)
    dlead = den[-1]
    dl = len(den) - 1
    quot = [0] * max(0, len(num) - dl)
    inv_lead = None
    for g in range(1, ops.order):
        if ops.mul(dlead, g) == 1:
            inv_lead = g
            break
    assert inv_lead is not None
    for i in range(len(num) - 1, dl - 1, -1):
        c = num[i]
        if c == 0:
            continue
        f = ops.mul(c, inv_lead)
        quot[i - dl] = f
        for j in range(dl + 1):
            num[i - dl + j] = ops.sub(num[i - dl + j], ops.mul(f, den[j]))
    while num and num[-1] == 0:
        num.pop()
    return quot, num


def _monic_polys(degree: int, ops: _BaseOps) -> Iterator[list[int]]:
    total = ops.order ** degree
    for idx in range(total):
        yield _digits(idx, ops.order, degree) + [1]


def _is_irreducible(poly: Sequence[int], ops: _BaseOps) -> bool:
    """Trial division against every monic polynomial of lower degree."""
    deg = len(poly) - 1
    if deg < 1 or poly[-1] == 0:
        return False
    if deg == 1:
        return True
    if poly[0] == 0:  # divisible by x
        return False
    for d in range(1, deg // 2 + 1):
        for den in _monic_polys(d, ops):
            _, rem = _poly_divmod_digits(poly, den, ops)
            if not rem:
                return False
    return True


class _RawField:
    """Polynomial-representation arithmetic mod an irreducible modulus,
    used only while searching generators and building tables."""

    def __init__(self, ops: _BaseOps, degree: int, modulus: Sequence[int]):
        self.ops = ops
        self.degree = degree
        self.modulus = list(modulus)
        self.order = ops.order ** degree

    def mul(self, a: int, b: int) -> int:
        if self.degree == 1:
            # modulus x - g: values are plain base elements
            return self.ops.mul(a, b)
        ops = self.ops
        m = self.degree
        da = _digits(a, ops.order, m)
        db = _digits(b, ops.order, m)
        conv = [0] * (2 * m - 1)
        for i, ai in enumerate(da):
            if ai == 0:
                continue
            for j, bj in enumerate(db):
                if bj:
                    conv[i + j] = ops.add(conv[i + j], ops.mul(ai, bj))
        for i in range(2 * m - 2, m - 1, -1):
            c = conv[i]
            if c == 0:
                continue
            conv[i] = 0
            for j in range(m):
                if self.modulus[j]:
                    conv[i - m + j] = ops.sub(conv[i - m + j],
                                              ops.mul(c, self.modulus[j]))
        return _from_digits(conv[:m], ops.order)

    def pow(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result


def _find_generator(raw: _RawField, try_first: int | None = None) -> int | None:
    q = raw.order
    if q == 2:
        return 1
    factors = _prime_factors(q - 1)
    candidates: Iterable[int]
    if try_first is not None:
        candidates = [try_first] + [g for g in range(2, q) if g != try_first]
    else:
        candidates = range(2, q)
    for g in candidates:
        if all(raw.pow(g, (q - 1) // f) != 1 for f in factors):
            return g
    return None


# Default moduli (coefficients lowest first, monic).  Each entry is the
# lexicographically first monic polynomial over GF(p) that is primitive
# (x generates the multiplicative group), i.e. the output of
# _search_default_modulus; pinned here so common fields build instantly.
_DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1),
    (2, 13): (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 14): (1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 15): (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 16): (1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (3, 7): (1, 2, 1, 0, 0, 0, 0, 1),
    (3, 8): (2, 0, 0, 1, 0, 0, 0, 0, 1),
    (5, 2): (2, 1, 1),
    (5, 3): (2, 3, 0, 1),
    (5, 4): (2, 2, 1, 0, 1),
    (5, 5): (2, 4, 0, 0, 0, 1),
    (5, 6): (2, 1, 0, 0, 0, 0, 1),
    (7, 2): (3, 1, 1),
    (7, 3): (2, 3, 0, 1),
    (7, 4): (5, 3, 1, 0, 1),
    (7, 5): (4, 1, 0, 0, 0, 1),
    (11, 2): (7, 1, 1),
    (11, 3): (4, 1, 0, 1),
    (11, 4): (2, 1, 0, 0, 1),
    (13, 2): (2, 1, 1),
    (13, 3): (6, 1, 0, 1),
    (13, 4): (2, 1, 1, 0, 1),
}


def _search_default_modulus(ops: _BaseOps, degree: int) -> list[int]:
    """Lexicographically first monic polynomial (by its low-coefficient index)
    that is irreducible and makes x a generator."""
    for cand in _monic_polys(degree, ops):
        if cand[0] == 0:
            continue
        if not _is_irreducible(cand, ops):
            continue
        raw = _RawField(ops, degree, cand)
        q = raw.order
        factors = _prime_factors(q - 1)
        x_index = ops.order  # digits (0, 1, 0, ...)
        if all(raw.pow(x_index, (q - 1) // f) != 1 for f in factors):
            return cand
    raise ValueError(f"no primitive polynomial of degree {degree} found")


class _FieldOps:
    """Arithmetic shared by FieldContext and ExtensionField.

    Subclass __init__ must call _build(ops, degree, modulus, generator_hint)
    after setting identification attributes.
    """

    order: int
    char: int

    def _build(self, ops: _BaseOps, degree: int, modulus: Sequence[int],
               generator_hint: int | None):
        q = ops.order ** degree
        if q > MAX_FIELD_ORDER:
            raise ValueError(f"field order {q} exceeds table limit {MAX_FIELD_ORDER}")
        raw = _RawField(ops, degree, modulus)
        gen = _find_generator(raw, try_first=generator_hint)
        if gen is None:
            raise ValueError("no generator found; modulus is not irreducible?")
        exp = [0] * max(2 * (q - 1), 2)
        log = [0] * q
        cur = 1
        for i in range(q - 1):
            if cur == 1 and i > 0:
                raise ValueError("generator has order < q-1")
            exp[i] = cur
            exp[i + q - 1] = cur
            log[cur] = i
            cur = raw.mul(cur, gen)
        if cur != 1:
            raise ValueError("generator does not have order q-1")
        if len(set(exp[: q - 1])) != q - 1:
            raise ValueError("modulus is not irreducible over the base field")
        self.order = q
        self.primitive = gen
        self.modulus = tuple(modulus)
        self._qm1 = q - 1
        self._exp = exp
        self._log = log
        self._ops = ops
        self._deg = degree
        neg = [0] * q
        for a in range(q):
            da = _digits(a, ops.order, degree)
            neg[a] = _from_digits([ops.neg(x) for x in da], ops.order)
        self._neg = neg
        if q <= ADD_TABLE_LIMIT:
            add_rows = []
            for a in range(q):
                da = _digits(a, ops.order, degree)
                row = [0] * q
                for b in range(q):
                    db = _digits(b, ops.order, degree)
                    row[b] = _from_digits(
                        [ops.add(x, y) for x, y in zip(da, db)], ops.order)
                add_rows.append(row)
            self._add_table = add_rows
            self._sub_table = [[add_rows[a][neg[b]] for b in range(q)]
                               for a in range(q)]
        else:
            self._add_table = None
            self._sub_table = None

    # -- scalar arithmetic on element indices --------------------------------

    def add(self, a: int, b: int) -> int:
        t = self._add_table
        if t is not None:
            return t[a][b]
        ops = self._ops
        da = _digits(a, ops.order, self._deg)
        db = _digits(b, ops.order, self._deg)
        return _from_digits([ops.add(x, y) for x, y in zip(da, db)], ops.order)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        t = self._sub_table
        if t is not None:
            return t[a][b]
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self._exp[self._qm1 - self._log[a]]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        if a == 0:
            return 0
        return self._exp[self._log[a] - self._log[b] + self._qm1]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 0
        return self._exp[(self._log[a] * e) % self._qm1]

    def antilog(self, i: int) -> int:
        return self._exp[i % self._qm1]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero is undefined")
        return self._log[a]

    # -- element helpers ------------------------------------------------------

    def element(self, value) -> "FieldElement":
        return FieldElement(self, value)

    def elements(self) -> Iterator["FieldElement"]:
        for v in range(self.order):
            yield FieldElement(self, v)

    def validate(self, value) -> int:
        """Coerce an int or FieldElement of this field to a bare index."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("field element belongs to a different context")
            return value.value
        v = int(value)
        if not 0 <= v < self.order:
            raise ValueError(f"value {v} outside [0, {self.order})")
        return v


class FieldContext(_FieldOps):
    """GF(p^m) over the prime field, q = p^m <= 2^16.

    The modulus defaults to a fixed primitive polynomial (so builds are
    reproducible); callers may override it with any irreducible polynomial,
    which is checked by trial division.
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.m = m
        ops = _prime_ops(p)
        hint = None
        if modulus is None:
            if m == 1:
                raw = _RawField(ops, 1, [0, 1])
                g = _find_generator(raw)
                modulus = [(-g) % p, 1]
                hint = g
            else:
                key = (p, m)
                if key in _DEFAULT_MODULI:
                    modulus = list(_DEFAULT_MODULI[key])
                else:
                    modulus = _search_default_modulus(ops, m)
                hint = p  # the element x
        else:
            modulus = [c % p for c in modulus]
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {m}")
            if not _is_irreducible(modulus, ops):
                raise ValueError("modulus is reducible over GF(p)")
            hint = p if m > 1 else None
        self.char = p
        self._build(ops, m, modulus, hint)

    def __repr__(self):
        return f"FieldContext(p={self.p}, m={self.m}, q={self.order})"

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, FieldContext) and self.p == other.p
                and self.m == other.m and self.modulus == other.modulus)

    def __hash__(self):
        return hash(("FieldContext", self.p, self.m, self.modulus))

    def descriptor(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus),
                "primitive": self.primitive}


class ExtensionField(_FieldOps):
    """GF(q^m) built over an existing FieldContext GF(q).

    The base-field coordinates of an element in the basis {1, b, ..., b^(m-1)}
    are exactly its base-q digits, exposed through flatten/unflatten; this is
    the bijection F_q^m <-> GF(q^m) that subspace encoders rely on.
    """

    def __init__(self, base: FieldContext, degree: int,
                 modulus: Sequence[int] | None = None):
        if degree < 1:
            raise ValueError("extension degree must be >= 1")
        self.base = base
        self.degree = degree
        self.char = base.char
        ops = _BaseOps(base.order, base.add, base.mul, base.neg)
        hint = None
        if modulus is None:
            if degree == 1:
                modulus = [base._neg[base.primitive], 1]
                hint = base.primitive
            else:
                modulus = _search_default_modulus(ops, degree)
                hint = base.order
        else:
            modulus = [base.validate(c) for c in modulus]
            if len(modulus) != degree + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {degree}")
            if not _is_irreducible(modulus, ops):
                raise ValueError("modulus is reducible over the base field")
            hint = base.order if degree > 1 else None
        self._build(ops, degree, modulus, hint)

    def flatten(self, value: int) -> tuple[int, ...]:
        """Base-field coordinates of value in the polynomial basis."""
        return tuple(_digits(self.validate(value), self.base.order, self.degree))

    def unflatten(self, coords: Sequence[int]) -> int:
        if len(coords) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates")
        return _from_digits([self.base.validate(c) for c in coords],
                            self.base.order)

    def embed(self, value: int) -> int:
        """Image of a base-field element under GF(q) -> GF(q^m)."""
        return self.base.validate(value)

    def basis(self) -> tuple[int, ...]:
        """The polynomial basis 1, b, ..., b^(degree-1) as element indices."""
        return tuple(self.base.order ** i for i in range(self.degree))

    def __repr__(self):
        return (f"ExtensionField(base=GF({self.base.order}), "
                f"degree={self.degree}, order={self.order})")

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, ExtensionField) and self.base == other.base
                and self.degree == other.degree and self.modulus == other.modulus)

    def __hash__(self):
        return hash(("ExtensionField", self.base, self.degree, self.modulus))


class FieldElement:
    """A field element bound to its context; mixed-context arithmetic is
    rejected.  Bare ints in [0, q) are accepted as the other operand and
    are interpreted as element indices of the same context."""

    __slots__ = ("field", "value")

    def __init__(self, field: _FieldOps, value: int):
        self.field = field
        self.value = field.validate(value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("field element belongs to a different context")
            return other.value
        return self.field.validate(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.order))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF({self.field.order}):{self.value}"


# ---------------------------------------------------------------------------
# polynomials (dense coefficient lists over one field)


def poly_trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def poly_add(field: _FieldOps, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = field.add(out[i], c)
    return poly_trim(out)


def poly_sub(field: _FieldOps, a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = field.sub(out[i], c)
    return poly_trim(out)


def poly_mul(field: _FieldOps, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = field.add(out[i + j], field.mul(ai, bj))
    return poly_trim(out)


def poly_scale(field: _FieldOps, a: Sequence[int], s: int) -> list[int]:
    if s == 0:
        return []
    return poly_trim([field.mul(c, s) for c in a])


def poly_divmod(field: _FieldOps, num: Sequence[int],
                den: Sequence[int]) -> tuple[list[int], list[int]]:
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    num = list(num)
    dl = len(den) - 1
    if len(num) <= dl:
        return [], poly_trim(num)
    inv_lead = field.inv(den[-1])
    quot = [0] * (len(num) - dl)
    for i in range(len(num) - 1, dl - 1, -1):
        c = num[i]
        if c == 0:
            continue
        f = field.mul(c, inv_lead)
        quot[i - dl] = f
        for j in range(dl + 1):
            num[i - dl + j] = field.sub(num[i - dl + j], field.mul(f, den[j]))
    return poly_trim(quot), poly_trim(num)


def poly_eval_at(field: _FieldOps, coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), c)
    return acc


def poly_derivative(field: _FieldOps, coeffs: Sequence[int]) -> list[int]:
    out = []
    for i in range(1, len(coeffs)):
        # i * c_i means c_i added to itself i times (char-aware)
        s = 0
        for _ in range(i % field.char if field.char else i):
            s = field.add(s, coeffs[i])
        out.append(s)
    return poly_trim(out)


class Poly:
    """Dense univariate polynomial over one field; zero is the empty list."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: _FieldOps, coeffs: Iterable = ()):
        self.field = field
        self.coeffs = tuple(poly_trim([field.validate(c) for c in coeffs]))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        v = poly_eval_at(self.field, self.coeffs, self.field.validate(x))
        if isinstance(x, FieldElement):
            return FieldElement(self.field, v)
        return v

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly(self.field, poly_add(self.field, self.coeffs, other.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly(self.field, poly_sub(self.field, self.coeffs, other.coeffs))

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly(self.field, poly_mul(self.field, self.coeffs, other.coeffs))

    def scale(self, s) -> "Poly":
        return Poly(self.field, poly_scale(self.field, self.coeffs,
                                           self.field.validate(s)))

    def _check(self, other: "Poly"):
        if other.field != self.field:
            raise ValueError("polynomials over different contexts")

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.coeffs, self.field.order))

    def __repr__(self):
        return f"Poly(GF({self.field.order}), {list(self.coeffs)})"


def poly_eval(f: Poly, x):
    """Evaluate f at x (Horner)."""
    return f(x)


def lagrange_interpolate(field: _FieldOps, points: Sequence[tuple]) -> Poly:
    """Unique polynomial of degree < len(points) through the given (x, y).

    Raises ValueError on duplicate x coordinates.
    """
    xs = [field.validate(x) for x, _ in points]
    ys = [field.validate(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate x coordinates")
    acc: list[int] = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        num = [1]
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = poly_mul(field, num, [field.neg(xj), 1])
            denom = field.mul(denom, field.sub(xi, xj))
        acc = poly_add(field, acc, poly_scale(field, num, field.div(yi, denom)))
    return Poly(field, acc)


def linearized_eval(ext: ExtensionField, coeffs: Sequence, x) -> int:
    """Evaluate the linearized polynomial sum_i c_i * x^(q^i) in GF(q^m),
    q the base-field order.  F_q-linear in x."""
    xv = ext.validate(x)
    out = 0
    power = xv  # x^(q^0)
    q = ext.base.order
    for c in coeffs:
        cv = ext.validate(c)
        if cv:
            out = ext.add(out, ext.mul(cv, power))
        power = ext.pow(power, q)
    return out
