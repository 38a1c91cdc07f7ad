"""Group catalog: a small spec grammar and concrete realizations.

Spec grammar (no whitespace):

    spec    := "cyclic:" NAT
             | "frob:" NAT "^" NAT ":" NAT        q ^ m : k, k | q^m - 1
             | "psl2:" NAT
             | "xsp:" NAT ":" NAT                 extraspecial p^(1+2n), exponent p (p odd)
             | "prod(" spec "," spec ")"
             | "named:" NAME
             | "affine:" NAT "^" NAT ":" MATLIST  translations of F_q^m plus given matrices
    MATLIST := matrices separated by ";", each m*m entries separated by ","
    NAME    := S3 | A4 | C5C4 | C11C5 | C7C6 | E8C7 | G72D | G72Q | A4A4

Realizations:

    cyclic  integers mod n
    frob    permutations of the q^m field elements: translations by the power
            basis plus multiplication by a fixed element of order k
    psl2    permutations of the projective line {0..p-1, inf}: z+1, -1/z, and
            u^2*z for the least primitive root u mod p
    xsp     tuples (a, b, c) in F_p^n x F_p^n x F_p with
            (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a.b')
    affine  permutations of F_q^m: translations plus the given matrices
    prod    pairs acting componentwise

Realized orders are checked against the closed-form prediction at enumeration
time rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import ffield
from .arith import is_prime, multiplicative_order, psl2_order
from .errors import CapExceeded, InvalidParam, SelfCheckFailed, SpecSyntaxError
from .groups import (
    DEFAULT_ELEMENT_CAP,
    GroupRealization,
    direct_product,
)

__all__ = [
    "Cyclic",
    "Frob",
    "Psl2",
    "Xsp",
    "Affine",
    "Prod",
    "Named",
    "GroupSpec",
    "NamedWitness",
    "parse_spec",
    "spec_text",
    "expected_order",
    "realize",
    "named_underlying",
    "named_witnesses",
    "witnesses_for_degree",
    "NAMED_NAMES",
]


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class Frob:
    q: int
    m: int
    k: int  # order of the multiplier; k | q^m - 1


@dataclass(frozen=True)
class Psl2:
    p: int


@dataclass(frozen=True)
class Xsp:
    p: int
    n: int


@dataclass(frozen=True)
class Affine:
    q: int
    m: int
    mats: tuple[tuple[tuple[int, ...], ...], ...]


@dataclass(frozen=True)
class Prod:
    left: "GroupSpec"
    right: "GroupSpec"


@dataclass(frozen=True)
class Named:
    name: str


GroupSpec = Union[Cyclic, Frob, Psl2, Xsp, Affine, Prod, Named]


# ------------------------------------------------------------------- parsing


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, msg: str):
        raise SpecSyntaxError(msg, self.pos)

    def literal(self, lit: str) -> bool:
        if self.text.startswith(lit, self.pos):
            self.pos += len(lit)
            return True
        return False

    def expect(self, lit: str):
        if not self.literal(lit):
            self.fail(f"expected {lit!r}")

    def nat(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail("expected a number")
        return int(self.text[start : self.pos])

    def name(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        if self.pos == start:
            self.fail("expected a name")
        return self.text[start : self.pos]

    def spec(self) -> GroupSpec:
        if self.literal("cyclic:"):
            return _check_cyclic(self.nat())
        if self.literal("frob:"):
            q = self.nat()
            self.expect("^")
            m = self.nat()
            self.expect(":")
            k = self.nat()
            return _check_frob(q, m, k)
        if self.literal("psl2:"):
            return _check_psl2(self.nat())
        if self.literal("xsp:"):
            p = self.nat()
            self.expect(":")
            n = self.nat()
            return _check_xsp(p, n)
        if self.literal("prod("):
            left = self.spec()
            self.expect(",")
            right = self.spec()
            self.expect(")")
            return Prod(left, right)
        if self.literal("named:"):
            name = self.name()
            if name not in _NAMED:
                raise InvalidParam(f"unknown named group {name!r}")
            return Named(name)
        if self.literal("affine:"):
            q = self.nat()
            self.expect("^")
            m = self.nat()
            self.expect(":")
            mats = [self.matrix(q, m)]
            while self.literal(";"):
                mats.append(self.matrix(q, m))
            return _check_affine(q, m, tuple(mats))
        self.fail("expected a group spec")

    def matrix(self, q: int, m: int) -> tuple[tuple[int, ...], ...]:
        """Exactly m*m comma-separated entries, row-major."""
        entries = [self.nat()]
        for _ in range(m * m - 1):
            self.expect(",")
            entries.append(self.nat())
        return tuple(tuple(entries[r * m : (r + 1) * m]) for r in range(m))


def parse_spec(text: str) -> GroupSpec:
    p = _Parser(text)
    spec = p.spec()
    if p.pos != len(text):
        p.fail("trailing input")
    return spec


def _check_cyclic(n: int) -> Cyclic:
    if n < 1:
        raise InvalidParam("cyclic order must be >= 1")
    return Cyclic(n)


def _check_frob(q: int, m: int, k: int) -> Frob:
    if not is_prime(q):
        raise InvalidParam(f"frob base {q} is not prime")
    if m < 1:
        raise InvalidParam("frob exponent must be >= 1")
    if k < 2:
        raise InvalidParam("frob multiplier order must be >= 2")
    if (q**m - 1) % k != 0:
        raise InvalidParam(f"{k} does not divide {q}^{m} - 1 = {q**m - 1}")
    return Frob(q, m, k)


def _check_psl2(p: int) -> Psl2:
    if not is_prime(p):
        raise InvalidParam(f"psl2 parameter {p} is not prime")
    return Psl2(p)


def _check_xsp(p: int, n: int) -> Xsp:
    if not is_prime(p):
        raise InvalidParam(f"xsp parameter {p} is not prime")
    if n < 1:
        raise InvalidParam("xsp rank must be >= 1")
    return Xsp(p, n)


def _check_affine(q, m, mats) -> Affine:
    if not is_prime(q):
        raise InvalidParam(f"affine base {q} is not prime")
    if m < 1:
        raise InvalidParam("affine dimension must be >= 1")
    for mat in mats:
        for row in mat:
            for e in row:
                if not 0 <= e < q:
                    raise InvalidParam(f"matrix entry {e} out of range mod {q}")
        if ffield.mat_det(q, mat) == 0:
            raise InvalidParam(f"matrix {mat} is singular mod {q}")
    return Affine(q, m, mats)


def spec_text(spec: GroupSpec) -> str:
    """Canonical text; parse_spec(spec_text(s)) == s."""
    match spec:
        case Cyclic(n):
            return f"cyclic:{n}"
        case Frob(q, m, k):
            return f"frob:{q}^{m}:{k}"
        case Psl2(p):
            return f"psl2:{p}"
        case Xsp(p, n):
            return f"xsp:{p}:{n}"
        case Affine(q, m, mats):
            body = ";".join(
                ",".join(str(e) for row in mat for e in row) for mat in mats
            )
            return f"affine:{q}^{m}:{body}"
        case Prod(left, right):
            return f"prod({spec_text(left)},{spec_text(right)})"
        case Named(name):
            return f"named:{name}"
    raise TypeError(f"not a GroupSpec: {spec!r}")


# -------------------------------------------------------------- realizations


def _matrix_group(q, m, mats, cap):
    """Closure of the given matrices under multiplication mod q."""
    seen = {ffield.mat_identity(m)}
    frontier = list(seen)
    while frontier:
        new = []
        for a in frontier:
            for g in mats:
                b = ffield.mat_mul(q, a, g)
                if b not in seen:
                    seen.add(b)
                    new.append(b)
                    if len(seen) > cap:
                        raise CapExceeded(
                            f"matrix group over F_{q} exceeded cap {cap}"
                        )
        frontier = new
    return seen


def expected_order(spec: GroupSpec, cap: int = DEFAULT_ELEMENT_CAP) -> int:
    match spec:
        case Cyclic(n):
            return n
        case Frob(q, m, k):
            return q**m * k
        case Psl2(p):
            return psl2_order(p)
        case Xsp(p, n):
            return p ** (2 * n + 1)
        case Affine(q, m, mats):
            pts = q**m
            return pts * len(_matrix_group(q, m, mats, max(1, cap // pts)))
        case Prod(left, right):
            return expected_order(left, cap) * expected_order(right, cap)
        case Named(name):
            return _NAMED[name][1]
    raise TypeError(f"not a GroupSpec: {spec!r}")


def _perm_realization(images_list, descriptor, expected):
    npts = len(images_list[0])
    ident = tuple(range(npts))

    def mul(a, b):
        return tuple(a[x] for x in b)

    def inv(a):
        out = [0] * npts
        for i, x in enumerate(a):
            out[x] = i
        return tuple(out)

    return GroupRealization(
        identity=ident,
        multiply=mul,
        inverse=inv,
        generators=[tuple(p) for p in images_list],
        descriptor=descriptor,
        expected_order=expected,
    )


def _realize_cyclic(spec: Cyclic) -> GroupRealization:
    n = spec.n
    return GroupRealization(
        identity=0,
        multiply=lambda a, b: (a + b) % n,
        inverse=lambda a: (-a) % n,
        generators=[1 % n],
        descriptor=spec_text(spec),
        expected_order=n,
    )


def _realize_frob(spec: Frob) -> GroupRealization:
    ctx = ffield.field_context(spec.q, spec.m)
    npts = ctx.order
    dec = [ffield.element_from_index(ctx, i) for i in range(npts)]
    enc = {e: i for i, e in enumerate(dec)}
    gens = []
    for j in range(spec.m):
        basis = tuple(1 if i == j else 0 for i in range(spec.m))
        gens.append([enc[ffield.f_add(ctx, dec[i], basis)] for i in range(npts)])
    a = ffield.element_of_order(ctx, spec.k)
    gens.append([enc[ffield.f_mul(ctx, a, dec[i])] for i in range(npts)])
    return _perm_realization(gens, spec_text(spec), npts * spec.k)


def _realize_psl2(spec: Psl2) -> GroupRealization:
    p = spec.p
    inf = p  # projective point at infinity
    pts = range(p + 1)
    if p == 2:
        u = 1
    else:
        u = next(v for v in range(2, p) if multiplicative_order(v, p) == p - 1)
    uu = u * u % p

    def s_img(z):
        if z == inf:
            return 0
        if z == 0:
            return inf
        return (-pow(z, p - 2, p)) % p

    t = [inf if z == inf else (z + 1) % p for z in pts]
    s = [s_img(z) for z in pts]
    d = [inf if z == inf else z * uu % p for z in pts]
    return _perm_realization([t, s, d], spec_text(spec), psl2_order(p))


def _realize_xsp(spec: Xsp) -> GroupRealization:
    p, n = spec.p, spec.n

    def mul(x, y):
        dot = sum(x[i] * y[n + i] for i in range(n))
        return tuple(
            (a + b) % p for a, b in zip(x[: 2 * n], y[: 2 * n])
        ) + ((x[2 * n] + y[2 * n] + dot) % p,)

    def inv(x):
        dot = sum(x[i] * x[n + i] for i in range(n))
        return tuple((-a) % p for a in x[: 2 * n]) + ((dot - x[2 * n]) % p,)

    gens = []
    for j in range(2 * n):
        g = [0] * (2 * n + 1)
        g[j] = 1
        gens.append(tuple(g))
    return GroupRealization(
        identity=(0,) * (2 * n + 1),
        multiply=mul,
        inverse=inv,
        generators=gens,
        descriptor=spec_text(spec),
        expected_order=p ** (2 * n + 1),
    )


def _realize_affine(spec: Affine, cap: int) -> GroupRealization:
    q, m = spec.q, spec.m
    npts = q**m

    def dec(i):
        out = []
        for _ in range(m):
            out.append(i % q)
            i //= q
        return tuple(out)

    def enc(v):
        i = 0
        for c in reversed(v):
            i = i * q + c
        return i

    vecs = [dec(i) for i in range(npts)]
    gens = []
    for j in range(m):
        gens.append(
            [enc(tuple((v[i] + (1 if i == j else 0)) % q for i in range(m))) for v in vecs]
        )
    for mat in spec.mats:
        gens.append([enc(ffield.mat_vec(q, mat, v)) for v in vecs])
    return _perm_realization(gens, spec_text(spec), expected_order(spec, cap))


def realize(spec: GroupSpec, cap: int = DEFAULT_ELEMENT_CAP) -> GroupRealization:
    """Build a concrete realization; the order is validated when enumerated."""
    match spec:
        case Cyclic():
            return _realize_cyclic(spec)
        case Frob():
            return _realize_frob(spec)
        case Psl2():
            return _realize_psl2(spec)
        case Xsp():
            return _realize_xsp(spec)
        case Affine():
            return _realize_affine(spec, cap)
        case Prod(left, right):
            return direct_product(realize(left, cap), realize(right, cap))
        case Named(name):
            return _realize_named(name, cap)
    raise TypeError(f"not a GroupSpec: {spec!r}")


# ---------------------------------------------------------------- named table

_D8_MATS = (((0, 2), (1, 0)), ((1, 0), (0, 2)))  # rotation of order 4, reflection
_Q8_MATS = (((0, 2), (1, 0)), ((1, 1), (1, 2)))  # i and j; both squares are -I

# name -> (underlying spec, order, claimed irreducible degree)
_NAMED: dict[str, tuple[GroupSpec, int, int]] = {
    "S3": (Affine(3, 1, (((2,),),)), 6, 2),
    "A4": (Affine(2, 2, (((0, 1), (1, 1)),)), 12, 3),
    "C5C4": (Affine(5, 1, (((2,),),)), 20, 4),
    "C11C5": (Frob(11, 1, 5), 55, 5),
    "C7C6": (Affine(7, 1, (((3,),),)), 42, 6),
    "E8C7": (Frob(2, 3, 7), 56, 7),
    "G72D": (Affine(3, 2, _D8_MATS), 72, 8),
    "G72Q": (Affine(3, 2, _Q8_MATS), 72, 8),
    "A4A4": (Prod(Named("A4"), Named("A4")), 144, 9),
}

NAMED_NAMES = tuple(_NAMED)

# complement order profiles checked when the order-72 witnesses are built
_D8_PROFILE = (1, 2, 2, 2, 2, 2, 4, 4)
_Q8_PROFILE = (1, 2, 4, 4, 4, 4, 4, 4)


def _mat_order_profile(q, m, mats):
    group = _matrix_group(q, m, list(mats), cap=1024)
    ident = ffield.mat_identity(m)
    profile = []
    for a in group:
        k = 1
        b = a
        while b != ident:
            b = ffield.mat_mul(q, b, a)
            k += 1
        profile.append(k)
    return tuple(sorted(profile))


def _check_complement(name: str):
    """The order-72 witnesses carry their complement structure as a claim."""
    mats = _D8_MATS if name == "G72D" else _Q8_MATS
    want = _D8_PROFILE if name == "G72D" else _Q8_PROFILE
    got = _mat_order_profile(3, 2, mats)
    if got != want:
        raise SelfCheckFailed(f"{name}: complement order profile {got} != {want}")
    if name == "G72Q":
        for mat in mats:
            if ffield.mat_det(3, mat) != 1:
                raise SelfCheckFailed(f"{name}: generator {mat} not in SL2(3)")


def _realize_named(name: str, cap: int) -> GroupRealization:
    spec, order, _claim = _NAMED[name]
    if name in ("G72D", "G72Q"):
        _check_complement(name)
    g = realize(spec, cap)
    g.descriptor = f"named:{name}"
    if g.expected_order is not None and g.expected_order != order:
        raise SelfCheckFailed(
            f"named:{name}: catalog order {order} != predicted {g.expected_order}"
        )
    g.expected_order = order
    return g


@dataclass(frozen=True)
class NamedWitness:
    name: str
    spec: GroupSpec
    expected_order: int
    degree_claim: int


def named_underlying(name: str) -> GroupSpec:
    """The construction behind a named entry (e.g. the affine matrices)."""
    if name not in _NAMED:
        raise InvalidParam(f"unknown named group {name!r}")
    return _NAMED[name][0]


def named_witnesses() -> list[NamedWitness]:
    return [
        NamedWitness(name, Named(name), order, claim)
        for name, (_, order, claim) in _NAMED.items()
    ]


def witnesses_for_degree(n: int) -> list[NamedWitness]:
    return [w for w in named_witnesses() if w.degree_claim == n]
