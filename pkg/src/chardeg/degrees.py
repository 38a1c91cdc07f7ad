"""Irreducible character degrees by the modular eigenvector method.

The degree multiset of a finite group is computed from first principles:

  1. conjugacy classes as orbits of conjugation, with lex-least
     representatives, classes sorted by representative (class 0 = identity),
  2. class-algebra structure constants a_{ijk} = #{(x,y) in C_i x C_j :
     xy = z} for fixed z in C_k, one matrix M_i = (a_{ijk})_{jk} per class,
  3. a prime modulus l ≡ 1 (mod exp(G)) with l > |G|, so exp(G)-th roots of
     unity exist mod l and every degree square is recovered exactly from its
     residue,
  4. simultaneous eigenspaces of the commuting M_i over F_l: each common
     eigenvector, normalized to coordinate 1 at the identity class, is the
     vector of central character values w_i = |C_i| chi(g_i) / chi(1),
  5. sum_i w_i w_{i'} / |C_i| = |G| / chi(1)^2 then recovers each degree.

Closed-form multisets for Frobenius groups, extraspecial groups, and direct
products are provided as independent cross-checks of the same quantities.
Eigen-splitting is deterministic: class matrices are consumed in ascending
class index, eigenvalues in ascending residue order, and subspace bases are
kept in reduced row echelon form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from .arith import is_prime
from .errors import (
    CapExceeded,
    InvalidParam,
    NotPerfectSquare,
    OrderNotDividing,
    SelfCheckFailed,
    SumOfSquaresMismatch,
)
from .groups import (
    DEFAULT_ELEMENT_CAP,
    GroupRealization,
    enumerate_elements,
    exponent,
)

__all__ = [
    "ClassData",
    "ClassMatrix",
    "DixonContext",
    "DegreeMultiset",
    "DEFAULT_CLASS_CAP",
    "conjugacy_classes",
    "class_matrix",
    "dixon_modulus",
    "dixon_context",
    "character_degrees",
    "frobenius_degrees_closed_form",
    "extraspecial_degrees_closed_form",
    "product_degrees",
]

DEFAULT_CLASS_CAP = 500


@dataclass(frozen=True)
class ClassData:
    """Conjugacy classes; reps are lex-least members, sorted ascending."""

    reps: tuple
    sizes: tuple[int, ...]
    class_of: dict
    inverse_class: tuple[int, ...]
    members: tuple  # members[i] = tuple of elements of class i

    @property
    def count(self) -> int:
        return len(self.reps)


@dataclass(frozen=True)
class ClassMatrix:
    """Structure constants for one class: entries[j][k] = a_{ijk}."""

    index: int
    entries: np.ndarray = field(compare=False)


@dataclass(frozen=True)
class DixonContext:
    """Modulus and the central character vectors mod that modulus."""

    modulus: int
    omega_vectors: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class DegreeMultiset:
    degrees: tuple[int, ...]
    group_order: int

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))
        mass = sum(d * d for d in self.degrees)
        if mass != self.group_order:
            raise SumOfSquaresMismatch(
                f"sum of degree squares {mass} != group order {self.group_order}"
            )
        if not self.degrees or self.degrees[0] != 1:
            raise SelfCheckFailed("no linear character in degree multiset")
        for d in self.degrees:
            if self.group_order % d != 0:
                raise SelfCheckFailed(f"degree {d} does not divide {self.group_order}")


# ------------------------------------------------------------------- classes


def conjugacy_classes(
    g: GroupRealization, cap: int = DEFAULT_ELEMENT_CAP
) -> ClassData:
    els = enumerate_elements(g, cap)
    gens = list(g.generators)
    gen_invs = [g.inverse(x) for x in gens]
    class_of: dict = {}
    reps = []
    sizes = []
    members = []
    for x in els:
        if x in class_of:
            continue
        idx = len(reps)
        orbit = [x]
        class_of[x] = idx
        pos = 0
        while pos < len(orbit):
            y = orbit[pos]
            pos += 1
            for gi, ginv in zip(gens, gen_invs):
                z = g.multiply(ginv, g.multiply(y, gi))
                if z not in class_of:
                    class_of[z] = idx
                    orbit.append(z)
        reps.append(x)
        sizes.append(len(orbit))
        members.append(tuple(sorted(orbit)))
    inverse_class = tuple(class_of[g.inverse(rep)] for rep in reps)
    cd = ClassData(
        reps=tuple(reps),
        sizes=tuple(sizes),
        class_of=class_of,
        inverse_class=inverse_class,
        members=tuple(members),
    )
    _check_class_data(g, cd, len(els))
    return cd


def _check_class_data(g, cd, order):
    if sum(cd.sizes) != order:
        raise SelfCheckFailed("class sizes do not partition the group")
    if cd.reps[0] != g.identity or cd.sizes[0] != 1:
        raise SelfCheckFailed("class 0 is not the identity singleton")
    for i, j in enumerate(cd.inverse_class):
        if cd.inverse_class[j] != i or cd.sizes[j] != cd.sizes[i]:
            raise SelfCheckFailed("inverse-class map is not a size-preserving involution")


def class_matrix(g: GroupRealization, cd: ClassData, i: int) -> ClassMatrix:
    """a[j][k] = #{(x, y) in C_i x C_j : xy = z_k}; scan x against the z_k."""
    r = cd.count
    a = np.zeros((r, r), dtype=np.int64)
    for x in cd.members[i]:
        xi = g.inverse(x)
        for k, z in enumerate(cd.reps):
            a[cd.class_of[g.multiply(xi, z)], k] += 1
    return ClassMatrix(index=i, entries=a)


def dixon_modulus(g: GroupRealization) -> int:
    """Least prime l ≡ 1 (mod exp(G)) with l > |G|."""
    e = exponent(g)
    order = len(enumerate_elements(g))
    v = e + 1
    while v <= order or not is_prime(v):
        v += e
    return v


# ------------------------------------------------- modular linear algebra


def _rref(a: np.ndarray, l: int):
    """Reduced row echelon form mod l; returns (nonzero rows, pivot columns)."""
    a = a % l
    rows, cols = a.shape
    piv = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = a[r] * pow(int(a[r, c]), l - 2, l) % l
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % l
        piv.append(c)
        r += 1
    return a[: len(piv)], piv


def _kernel(a: np.ndarray, l: int) -> np.ndarray:
    """Rows spanning {x : a @ x = 0 mod l}."""
    n = a.shape[1]
    r, piv = _rref(a, l)
    free = [c for c in range(n) if c not in piv]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for i, c in enumerate(piv):
            basis[row, c] = (-int(r[i, f])) % l
    return basis


def _hessenberg(a: np.ndarray, l: int) -> np.ndarray:
    """Similarity-reduce to upper Hessenberg form mod l."""
    a = a % l
    n = a.shape[0]
    for c in range(n - 2):
        nz = np.nonzero(a[c + 1 :, c])[0]
        if nz.size == 0:
            continue
        p = c + 1 + int(nz[0])
        if p != c + 1:
            a[[c + 1, p]] = a[[p, c + 1]]
            a[:, [c + 1, p]] = a[:, [p, c + 1]]
        inv = pow(int(a[c + 1, c]), l - 2, l)
        for rr in range(c + 2, n):
            f = int(a[rr, c]) * inv % l
            if f:
                a[rr] = (a[rr] - f * a[c + 1]) % l
                a[:, c + 1] = (a[:, c + 1] + f * a[:, rr]) % l
    return a


def _charpoly(h: np.ndarray, l: int) -> np.ndarray:
    """Coefficients of det(xI - H) for upper Hessenberg H, ascending in x."""
    n = h.shape[0]
    polys = [np.array([1], dtype=np.int64)]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        pm = np.zeros(m + 1, dtype=np.int64)
        pm[1:] += prev
        pm[:m] = (pm[:m] - int(h[m - 1, m - 1]) * prev) % l
        prod = 1
        for i in range(1, m):
            prod = prod * int(h[m - i, m - i - 1]) % l
            if prod == 0:
                break
            coef = int(h[m - 1 - i, m - 1]) * prod % l
            if coef:
                pm[: m - i] = (pm[: m - i] - coef * polys[m - 1 - i]) % l
        polys.append(pm % l)
    return polys[n]


def _poly_roots(poly: np.ndarray, l: int) -> list[int]:
    """All roots in F_l, ascending, by evaluating at every residue."""
    xs = np.arange(l, dtype=np.int64)
    vals = np.zeros(l, dtype=np.int64)
    for c in poly[::-1]:
        vals = (vals * xs + int(c)) % l
    return [int(x) for x in np.nonzero(vals == 0)[0]]


# ------------------------------------------------------------ eigen splitting


def _split_common_eigenvectors(matrices, l: int) -> list[np.ndarray]:
    """Common eigenvectors (as rows, unnormalized) of the commuting family.

    matrices: callable i -> ndarray giving M_i on demand; processed in
    ascending i until every invariant subspace is one-dimensional.
    """
    r = matrices(0).shape[0]
    subspaces = [_rref(np.eye(r, dtype=np.int64), l)]
    for i in range(1, r):
        if all(b.shape[0] == 1 for b, _ in subspaces):
            break
        mt = matrices(i).T % l
        done = []
        for b, piv in subspaces:
            if b.shape[0] == 1:
                done.append((b, piv))
                continue
            images = b @ mt % l
            rmat = images[:, piv]  # images = rmat @ b since b[:, piv] = I
            cp = _charpoly(_hessenberg(rmat.copy(), l), l)
            dim = 0
            for lam in _poly_roots(cp, l):
                shifted = (rmat - lam * np.eye(rmat.shape[0], dtype=np.int64)) % l
                coords = _kernel(shifted.T % l, l)
                if coords.shape[0] == 0:
                    raise SelfCheckFailed("eigenvalue with empty eigenspace")
                dim += coords.shape[0]
                done.append(_rref(coords @ b % l, l))
            if dim != b.shape[0]:
                raise SelfCheckFailed("class matrix not diagonalizable mod modulus")
        subspaces = done
    if any(b.shape[0] != 1 for b, _ in subspaces):
        raise SelfCheckFailed("common eigenspaces did not split to dimension one")
    return [b[0] for b, _ in subspaces]


def dixon_context(
    g: GroupRealization,
    cap: int = DEFAULT_ELEMENT_CAP,
    class_cap: int = DEFAULT_CLASS_CAP,
) -> tuple[ClassData, DixonContext]:
    cd = conjugacy_classes(g, cap)
    r = cd.count
    if r > class_cap:
        raise CapExceeded(f"{r} conjugacy classes exceed cap {class_cap}")
    l = dixon_modulus(g)
    cache: dict[int, np.ndarray] = {}

    def mat(i: int) -> np.ndarray:
        if i not in cache:
            cache[i] = class_matrix(g, cd, i).entries % l
        return cache[i]

    vectors = _split_common_eigenvectors(mat, l)
    omegas = []
    for v in vectors:
        if v[0] == 0:
            raise SelfCheckFailed("eigenvector with zero identity coordinate")
        inv = pow(int(v[0]), l - 2, l)
        omegas.append(tuple(int(x) * inv % l for x in v))
    return cd, DixonContext(modulus=l, omega_vectors=tuple(omegas))


def character_degrees(
    g: GroupRealization,
    cap: int = DEFAULT_ELEMENT_CAP,
    class_cap: int = DEFAULT_CLASS_CAP,
) -> DegreeMultiset:
    cd, ctx = dixon_context(g, cap, class_cap)
    l = ctx.modulus
    order = sum(cd.sizes)
    size_invs = [pow(s, l - 2, l) for s in cd.sizes]
    degrees = []
    for w in ctx.omega_vectors:
        t = 0
        for j in range(cd.count):
            t = (t + w[j] * w[cd.inverse_class[j]] * size_invs[j]) % l
        if t == 0:
            raise SelfCheckFailed("vanishing norm for a central character")
        dd = order * pow(t, l - 2, l) % l
        if not 1 <= dd <= order:
            raise NotPerfectSquare(f"degree square {dd} outside [1, {order}]")
        d = isqrt(dd)
        if d * d != dd:
            raise NotPerfectSquare(f"recovered degree square {dd} is not a square")
        degrees.append(d)
    if sum(d * d for d in degrees) != order:
        raise SumOfSquaresMismatch(
            f"degree squares sum to {sum(d * d for d in degrees)}, order is {order}"
        )
    return DegreeMultiset(degrees=tuple(sorted(degrees)), group_order=order)


# -------------------------------------------------------------- closed forms


def frobenius_degrees_closed_form(q: int, m: int, k: int) -> DegreeMultiset:
    """(C_q)^m with a fixed-point-free cyclic C_k on top: k linear characters
    (the complement quotient) and (q^m - 1)/k of degree k (induced from the
    kernel's nontrivial characters, fused in orbits of size k)."""
    if not is_prime(q) or m < 1 or k < 2:
        raise InvalidParam("need prime q, m >= 1, multiplier order k >= 2")
    if (q**m - 1) % k != 0:
        raise OrderNotDividing(f"{k} does not divide {q}^{m} - 1")
    degrees = (1,) * k + (k,) * ((q**m - 1) // k)
    return DegreeMultiset(degrees=degrees, group_order=q**m * k)


def extraspecial_degrees_closed_form(p: int, n: int) -> DegreeMultiset:
    """Order p^(2n+1) with center of size p: p^2n linear characters and p - 1
    faithful ones of degree p^n."""
    if not is_prime(p) or n < 1:
        raise InvalidParam("need prime p and n >= 1")
    degrees = (1,) * p ** (2 * n) + (p**n,) * (p - 1)
    return DegreeMultiset(degrees=degrees, group_order=p ** (2 * n + 1))


def product_degrees(d1: DegreeMultiset, d2: DegreeMultiset) -> DegreeMultiset:
    """Degrees of a direct product: all pairwise products."""
    degrees = tuple(sorted(a * b for a in d1.degrees for b in d2.degrees))
    return DegreeMultiset(degrees=degrees, group_order=d1.group_order * d2.group_order)
