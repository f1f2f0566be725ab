"""Exact arithmetic in GF(p^m) for odd primes p.

Elements are stored in log form: the int -1 (``ZERO``) is the additive
zero, and e in [0, q-2] stands for gamma^e where gamma is the fixed
primitive element of the context.  Multiplication is exponent addition;
addition goes through a precomputed Zech logarithm table.
"""

from __future__ import annotations

FIELD_SIZE_CAP = 1 << 20

ZERO = -1


class NotPrime(ValueError):
    pass


class EvenCharacteristic(ValueError):
    pass


class FieldTooLarge(ValueError):
    pass


class NotASquareField(ValueError):
    pass


class NotADivisor(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def v_p(x: int, p: int) -> int:
    """Largest v with p^v | x, for x >= 1."""
    if x < 1:
        raise ValueError("v_p requires x >= 1")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def divisor_count(x: int) -> int:
    """Number of positive divisors, by trial division."""
    if x < 1:
        raise ValueError("divisor_count requires x >= 1")
    total = 1
    d = 2
    while d * d <= x:
        if x % d == 0:
            e = 0
            while x % d == 0:
                x //= d
                e += 1
            total *= e + 1
        d += 1
    if x > 1:
        total *= 2
    return total


def prime_factors(x: int) -> list[int]:
    """Sorted distinct prime factors of x >= 1."""
    out = []
    d = 2
    while d * d <= x:
        if x % d == 0:
            out.append(d)
            while x % d == 0:
                x //= d
        d += 1
    if x > 1:
        out.append(x)
    return out


# -- polynomial helpers over GF(p), little-endian coefficient lists --


def _ptrim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(f, g, p):
    # g monic
    f = f[:]
    dg = len(g) - 1
    while len(f) - 1 >= dg and f:
        c = f[-1]
        if c:
            shift = len(f) - 1 - dg
            for i in range(dg + 1):
                f[shift + i] = (f[shift + i] - c * g[i]) % p
        f.pop()
    return _ptrim(f)


def _pgcd(a, b, p):
    a, b = a[:], b[:]
    while b:
        inv = pow(b[-1], p - 2, p)
        bm = [(x * inv) % p for x in b]
        a, b = b, _pmod(a, bm, p)
    return a


def _ppowmod(base, e, mod, p):
    result = [1]
    base = _pmod(base[:], mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        e >>= 1
    return result


def _irreducible(f, p):
    m = len(f) - 1
    x = [0, 1]
    xp = x[:]
    for _ in range(m // 2):
        xp = _ppowmod(xp, p, f, p)
        diff = xp[:]
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(f, _ptrim(diff), p)
        if len(g) > 1:
            return False
    return True


def _poly_order_is(f, p, order):
    """Whether x has multiplicative order exactly `order` mod the monic
    irreducible f (order = p^deg(f) - 1 means x is primitive)."""
    x = [0, 1]
    if _ppowmod(x, order, f, p) != [1]:
        return False
    return all(_ppowmod(x, order // r, f, p) != [1]
               for r in prime_factors(order))


def _conway_poly(p, m):
    """Conway polynomial C_{p,m}, little-endian coefficients.

    Minimal monic primitive polynomial of degree m under the standard
    ordering (coefficients twisted by alternating signs, compared from
    the top degree down), compatible with the Conway polynomials of all
    proper subfields.  Feasible here because fields are capped small.
    """
    q = p ** m
    subs = []
    for d in range(1, m):
        if m % d == 0:
            subs.append((d, _conway_poly_cached(p, d)))
    for packed in range(q):
        # word (b_{m-1}, ..., b_0) read off the packed integer
        word = []
        rest = packed
        for _ in range(m):
            word.append(rest % p)
            rest //= p
        word.reverse()
        coeffs = [0] * m + [1]
        for i in range(m):
            b = word[m - 1 - i]
            coeffs[i] = (b if (m - i) % 2 == 0 else -b) % p
        if not _irreducible(coeffs, p):
            continue
        if not _poly_order_is(coeffs, p, q - 1):
            continue
        ok = True
        for d, g in subs:
            y = _ppowmod([0, 1], (q - 1) // (p ** d - 1), coeffs, p)
            acc: list[int] = []
            for c in reversed(g):  # Horner: acc = acc*y + c
                acc = _pmod(_pmul(acc, y, p), coeffs, p)
                if c:
                    if acc:
                        acc[0] = (acc[0] + c) % p
                        acc = _ptrim(acc)
                    else:
                        acc = [c]
            if acc:
                ok = False
                break
        if ok:
            return coeffs
    raise AssertionError(f"no Conway polynomial found for ({p}, {m})")


_CONWAY_CACHE: dict[tuple[int, int], list[int]] = {}


def _conway_poly_cached(p, m):
    key = (p, m)
    if key not in _CONWAY_CACHE:
        _CONWAY_CACHE[key] = _conway_poly(p, m)
    return _CONWAY_CACHE[key]


class FieldCtx:
    """Immutable GF(p^m) context with exp/log/Zech tables.

    The modulus is the Conway polynomial C_{p,m} and gamma is the class
    of x, which is primitive by construction.  That pins elements to the
    convention of the standard computer-algebra systems, so element
    tables written as powers of gamma are portable; a context is fully
    determined by (p, m).  For m = 1 this makes gamma the smallest
    primitive root mod p.
    """

    __slots__ = ("p", "m", "q", "n", "half", "modulus", "gamma_id",
                 "exp", "log", "zech", "_frob_mult")

    def __init__(self, p: int, m: int = 1):
        if p == 2 or (p > 2 and p % 2 == 0):
            raise EvenCharacteristic("characteristic must be odd")
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        q = p ** m
        if q > FIELD_SIZE_CAP:
            raise FieldTooLarge(f"q = {q} exceeds cap {FIELD_SIZE_CAP}")
        self.p = p
        self.m = m
        self.q = q
        self.n = q - 1          # multiplicative group order
        self.half = (q - 1) // 2  # log of -1
        self.modulus = _conway_poly_cached(p, m)
        self.gamma_id = self._poly_to_id(_pmod([0, 1], self.modulus, p))
        self._build_tables()
        self._frob_mult = p ** (m // 2) if m % 2 == 0 else None

    # ids are packed coefficient vectors: id = sum c_i p^i

    def _id_to_poly(self, i):
        out = []
        for _ in range(self.m):
            out.append(i % self.p)
            i //= self.p
        return _ptrim(out)

    def _poly_to_id(self, f):
        out = 0
        for c in reversed(f):
            out = out * self.p + c
        return out

    def _id_mul(self, a, b):
        f = _pmod(_pmul(self._id_to_poly(a), self._id_to_poly(b), self.p),
                  self.modulus, self.p)
        return self._poly_to_id(f)

    def _id_add(self, a, b):
        out, mult = 0, 1
        for _ in range(self.m):
            out += ((a + b) % self.p) * mult
            a //= self.p
            b //= self.p
            mult *= self.p
        return out

    def _id_pow(self, base, e):
        result = 1
        while e:
            if e & 1:
                result = self._id_mul(result, base)
            base = self._id_mul(base, base)
            e >>= 1
        return result

    def _build_tables(self):
        exp = [0] * self.n
        log = [ZERO] * self.q
        cur = 1
        for e in range(self.n):
            exp[e] = cur
            log[cur] = e
            cur = self._id_mul(cur, self.gamma_id)
        if cur != 1:
            raise AssertionError("gamma does not have order q-1")
        self.exp = exp
        self.log = log
        zech = [ZERO] * self.n
        for e in range(self.n):
            s = self._id_add(exp[e], 1)
            zech[e] = ZERO if s == 0 else log[s]
        self.zech = zech

    # -- element construction / formatting --

    def element(self, e: int) -> int:
        """gamma^e, exponent reduced mod q-1."""
        return e % self.n

    def zero(self) -> int:
        return ZERO

    def one(self) -> int:
        return 0

    def gen(self) -> int:
        return 1 % self.n

    def from_int(self, x: int) -> int:
        """Embed the integer x via the prime subfield (x mod p)."""
        return self.log[x % self.p]

    def from_coeffs(self, coeffs) -> int:
        f = _pmod([c % self.p for c in coeffs], self.modulus, self.p)
        return self.log[self._poly_to_id(f)]

    def to_coeffs(self, a: int) -> list[int]:
        i = 0 if a == ZERO else self.exp[a]
        out = []
        for _ in range(self.m):
            out.append(i % self.p)
            i //= self.p
        return out

    def parse(self, s: str) -> int:
        s = s.strip()
        if s == "0":
            return ZERO
        if s == "1":
            return 0
        if s.startswith("g^"):
            return int(s[2:]) % self.n
        raise ValueError(f"bad element literal {s!r} (want '0' or 'g^e')")

    def fmt(self, a: int) -> str:
        return "0" if a == ZERO else f"g^{a}"

    def elements(self):
        yield ZERO
        yield from range(self.n)

    def nonzero_elements(self):
        return range(self.n)

    # -- arithmetic --

    def mul(self, a: int, b: int) -> int:
        if a < 0 or b < 0:
            return ZERO
        return (a + b) % self.n

    def add(self, a: int, b: int) -> int:
        if a < 0:
            return b
        if b < 0:
            return a
        z = self.zech[(b - a) % self.n]
        return ZERO if z < 0 else (a + z) % self.n

    def neg(self, a: int) -> int:
        if a < 0:
            return ZERO
        return (a + self.half) % self.n

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def inv(self, a: int) -> int:
        if a < 0:
            raise ZeroDivisionError("inverse of zero")
        return (-a) % self.n

    def pow(self, a: int, e: int) -> int:
        if a < 0:
            if e == 0:
                return 0  # empty product
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return ZERO
        return (a * e) % self.n

    def dot(self, xs, ys) -> int:
        acc = ZERO
        for x, y in zip(xs, ys):
            acc = self.add(acc, self.mul(x, y))
        return acc

    def frob(self, a: int) -> int:
        """x -> x^q0 over GF(q0^2); the Hermitian conjugation."""
        if self._frob_mult is None:
            raise NotASquareField("field size is not a square")
        if a < 0:
            return ZERO
        return (a * self._frob_mult) % self.n

    @property
    def base_q(self) -> int:
        """q0 with field size q0^2; only for even extension degree."""
        if self._frob_mult is None:
            raise NotASquareField("field size is not a square")
        return self._frob_mult

    def field_str(self) -> str:
        return f"{self.p}^{self.m}" if self.m > 1 else str(self.p)

    def __repr__(self):
        return f"FieldCtx(GF({self.p}^{self.m}), modulus={self.modulus})"


_CTX_CACHE: dict[tuple[int, int], FieldCtx] = {}


def field_new(p: int, m: int = 1) -> FieldCtx:
    """Context for GF(p^m); cached, since construction is deterministic."""
    key = (p, m)
    if key not in _CTX_CACHE:
        _CTX_CACHE[key] = FieldCtx(p, m)
    return _CTX_CACHE[key]


def field_from_str(s: str) -> FieldCtx:
    """Parse a field spec like '3^4' or '31'."""
    s = s.strip()
    if "^" in s:
        ps, ms = s.split("^", 1)
        return field_new(int(ps), int(ms))
    return field_new(int(s), 1)


def frobenius_q(ctx2: FieldCtx, x: int) -> int:
    return ctx2.frob(x)


def quadratic_character(ctx: FieldCtx, c: int) -> int:
    """+1 for nonzero squares, -1 for non-squares, 0 for zero."""
    if c == ZERO:
        return 0
    return 1 if c % 2 == 0 else -1
