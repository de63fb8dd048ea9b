"""Classical matrix groups over tiny finite fields.

Everything here exists to check predictions by brute force: build the
natural module with its bilinear (and, for even q, quadratic) form, list
the elements of a parabolic's unipotent radical, read off Jordan types by
exact rank computations, and confirm that the predicted Richardson type
dominates everything seen and is attained.

Conventions: the basis is e_1..e_n, an optional middle vector, f_n..f_1;
the Gram matrix is antidiagonal with ones (symplectic: ones then minus
ones), and for even q the quadratic form is the sum of the e_i f_i
coordinate products.  Fields are GF(2), GF(3), GF(5) and GF(4); the last
uses table arithmetic, the rest reduce modulo q.  Jordan types do not
change under field extension, so nothing larger is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

import numpy as np

from .groups import (
    GL, O_EVEN, SO_EVEN, SO_ODD, SP,
    DomainError, GroupSpec, LeviDatum, radical_dim,
)
from .partitions import Dominance, Partition, compare_dominance, dual, partition

SUPPORTED_Q = (2, 3, 4, 5)

_GF4_MUL = np.array(
    [[0, 0, 0, 0],
     [0, 1, 2, 3],
     [0, 2, 3, 1],
     [0, 3, 1, 2]], dtype=np.int64)
_GF4_INV = (0, 1, 3, 2)


class GF:
    """Arithmetic in GF(q) for q in {2, 3, 4, 5} on numpy int arrays."""

    def __init__(self, q: int):
        if q not in SUPPORTED_Q:
            raise DomainError(f"q must be one of {SUPPORTED_Q}")
        self.q = q
        self.char = 2 if q in (2, 4) else q

    # scalar and elementwise ops -------------------------------------
    def add(self, a, b):
        if self.q == 4:
            return a ^ b
        return (a + b) % self.q

    def sub(self, a, b):
        if self.q == 4:
            return a ^ b
        return (a - b) % self.q

    def mul(self, a, b):
        if self.q == 4:
            return _GF4_MUL[a, b]
        return (a * b) % self.q

    def inv(self, a: int) -> int:
        a = int(a)
        if a == 0:
            raise ZeroDivisionError("no inverse of zero")
        if self.q == 4:
            return _GF4_INV[a]
        return pow(a, -1, self.q)

    # matrix ops ------------------------------------------------------
    def eye(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.q == 4:
            prods = _GF4_MUL[a[:, :, None], b[None, :, :]]
            return np.bitwise_xor.reduce(prods, axis=1)
        return (a @ b) % self.q

    def matvec(self, a: np.ndarray, v: np.ndarray) -> np.ndarray:
        if self.q == 4:
            return np.bitwise_xor.reduce(_GF4_MUL[a, v[None, :]], axis=1)
        return (a @ v) % self.q

    def vecmat(self, v: np.ndarray, a: np.ndarray) -> np.ndarray:
        if self.q == 4:
            return np.bitwise_xor.reduce(_GF4_MUL[v[:, None], a], axis=0)
        return (v @ a) % self.q

    def dot(self, u: np.ndarray, v: np.ndarray):
        if self.q == 4:
            return int(np.bitwise_xor.reduce(_GF4_MUL[u, v]))
        return int(u @ v) % self.q

    def rref(self, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form and the pivot columns."""
        r = np.array(a, dtype=np.int64)
        rows, cols = r.shape
        pivots: list[int] = []
        lead = 0
        for c in range(cols):
            pivot_row = None
            for i in range(lead, rows):
                if r[i, c]:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            if pivot_row != lead:
                r[[lead, pivot_row]] = r[[pivot_row, lead]]
            factor = self.inv(r[lead, c])
            r[lead] = self.mul(r[lead], factor)
            for i in range(rows):
                if i != lead and r[i, c]:
                    r[i] = self.sub(r[i], self.mul(r[lead], r[i, c]))
            pivots.append(c)
            lead += 1
            if lead == rows:
                break
        return r, pivots

    def rank(self, a: np.ndarray) -> int:
        if a.size == 0:
            return 0
        _, pivots = self.rref(a)
        return len(pivots)

    def solve_affine(self, a: np.ndarray, b: np.ndarray):
        """Solutions of ``a x = b``: a particular one plus a kernel basis,
        or None when the system is inconsistent."""
        rows, cols = a.shape
        if rows == 0:
            return np.zeros(cols, dtype=np.int64), [
                np.eye(cols, dtype=np.int64)[i] for i in range(cols)]
        aug = np.concatenate([a, b.reshape(rows, 1)], axis=1)
        r, pivots = self.rref(aug)
        if cols in pivots:
            return None
        x0 = np.zeros(cols, dtype=np.int64)
        for row, c in enumerate(pivots):
            x0[c] = r[row, cols]
        free = [c for c in range(cols) if c not in pivots]
        basis = []
        for fcol in free:
            v = np.zeros(cols, dtype=np.int64)
            v[fcol] = 1
            for row, c in enumerate(pivots):
                v[c] = self.sub(0, r[row, fcol])
            basis.append(v)
        return x0, basis

    def kernel_basis(self, a: np.ndarray) -> list[np.ndarray]:
        rows, cols = a.shape
        sol = self.solve_affine(a, np.zeros(rows, dtype=np.int64))
        assert sol is not None
        return sol[1]


@dataclass(frozen=True, eq=False)
class FormSpace:
    """Natural module of a classical group over GF(q) with its forms."""

    family: str
    n: int
    q: int
    field: GF
    dim: int
    gram: np.ndarray | None
    quad_pairs: tuple[tuple[int, int], ...] | None

    def __str__(self):
        return f"{GroupSpec(self.family, self.n)}(F_{self.q})"


def form_space(family: str, n: int, q: int) -> FormSpace:
    """Standard split form space; odd orthogonal needs odd q."""
    field = GF(q)
    g = GroupSpec(family, n)
    N = g.natural_dim
    if family == GL:
        return FormSpace(family, n, q, field, N, None, None)
    if family == SO_ODD and field.char == 2:
        raise DomainError(
            "odd orthogonal spaces degenerate in characteristic two; "
            "use the symplectic group instead")
    minus_one = 1 if field.char == 2 else q - 1
    gram = np.zeros((N, N), dtype=np.int64)
    for i in range(N):
        j = N - 1 - i
        if family == SP and i >= N // 2:
            gram[i, j] = minus_one
        else:
            gram[i, j] = 1
    quad = None
    if family in (SO_EVEN, O_EVEN) and field.char == 2:
        quad = tuple((i, N - 1 - i) for i in range(n))
    return FormSpace(family, n, q, field, N, gram, quad)


def quad_value(fs: FormSpace, v: np.ndarray) -> int:
    """Value of the quadratic form (even q orthogonal spaces only)."""
    if fs.quad_pairs is None:
        raise DomainError("this space carries no quadratic form")
    f = fs.field
    total = 0
    for i, j in fs.quad_pairs:
        total = f.add(total, f.mul(int(v[i]), int(v[j])))
    return int(total)


def bilinear(fs: FormSpace, u: np.ndarray, v: np.ndarray) -> int:
    if fs.gram is None:
        raise DomainError("general linear spaces carry no bilinear form")
    f = fs.field
    return f.dot(u, f.matvec(fs.gram, v))


def preserves_form(fs: FormSpace, g: np.ndarray) -> bool:
    if fs.gram is None:
        return True
    f = fs.field
    if not np.array_equal(f.matmul(f.matmul(g.T, fs.gram), g), fs.gram):
        return False
    if fs.quad_pairs is not None:
        basis_ok = all(
            quad_value(fs, g[:, k]) == quad_value(fs, f.eye(fs.dim)[:, k])
            for k in range(fs.dim))
        if not basis_ok:
            return False
    return True


@dataclass(frozen=True)
class FlagSpec:
    """Subspace dimensions of the natural flag attached to a Levi shape."""

    dims: tuple[int, ...]

    @property
    def factor_dims(self) -> tuple[int, ...]:
        prev = 0
        out = []
        for d in self.dims:
            out.append(d - prev)
            prev = d
        return tuple(out)


def natural_flag(family: str, rank: int, levi: LeviDatum) -> FlagSpec:
    """Flag stabilized by the standard parabolic with the given Levi shape.

    The general linear flag lists the block fronts; the others mirror the
    fronts across a middle factor of dimension twice the classical tail
    rank (plus one in the odd orthogonal case).
    """
    g = GroupSpec(family, rank)
    if levi.ambient_rank != rank:
        raise DomainError(f"Levi datum {levi} does not fit rank {rank}")
    if family == GL and levi.cl_rank:
        raise DomainError("general linear groups have no classical tail")
    N = g.natural_dim
    parts = levi.gl_parts
    cums = []
    total = 0
    for x in parts:
        total += x
        cums.append(total)
    if family == GL:
        return FlagSpec(tuple(cums))
    middle = 2 * levi.cl_rank + (1 if family == SO_ODD else 0)
    dims = list(cums)
    if middle > 0:
        dims.append(total + middle)
    dims += [N - c for c in reversed(cums[:-1])]
    if not dims or dims[-1] != N:
        dims.append(N)
    return FlagSpec(tuple(dims))


def _column_limits(flag: FlagSpec) -> list[int]:
    """For each basis column, the number of rows above its flag block."""
    limits = []
    prev = 0
    for d in flag.dims:
        limits += [prev] * (d - prev)
        prev = d
    return limits


def acts_trivially_on_factors(flag: FlagSpec, g: np.ndarray) -> bool:
    limits = _column_limits(flag)
    N = g.shape[0]
    for k, t in enumerate(limits):
        col = g[:, k].copy()
        col[k] -= 1
        if np.any(col[t:]):
            return False
    return True


def _column_solutions(fs: FormSpace, m: np.ndarray, k: int, t: int):
    """All valid columns k given the filled columns to its left.

    Pairings with earlier columns are linear in the unknown top entries;
    the self pairing (orthogonal spaces only) is the one quadratic filter.
    """
    f = fs.field
    N = fs.dim
    ek = np.zeros(N, dtype=np.int64)
    ek[k] = 1
    if fs.gram is None:
        if t == 0:
            yield ek
            return
        for combo in product(range(fs.q), repeat=t):
            col = ek.copy()
            col[:t] = combo
            yield col
        return
    rows = []
    rhs = []
    for j in range(k):
        w = f.vecmat(m[:, j], fs.gram)
        rows.append(w[:t])
        rhs.append(f.sub(int(fs.gram[j, k]), int(w[k])))
    a = np.array(rows, dtype=np.int64).reshape(len(rows), t)
    b = np.array(rhs, dtype=np.int64)
    sol = f.solve_affine(a, b)
    if sol is None:
        return
    x0, basis = sol
    for combo in product(range(fs.q), repeat=len(basis)):
        x = x0.copy()
        for c, v in zip(combo, basis):
            if c:
                x = f.add(x, f.mul(v, c))
        col = ek.copy()
        col[:t] = x
        if _self_pairing_ok(fs, col, k):
            yield col


def _self_pairing_ok(fs: FormSpace, col: np.ndarray, k: int) -> bool:
    if fs.family == SP:
        return True  # alternating form, automatic
    if fs.quad_pairs is not None:
        return quad_value(fs, col) == 0
    return bilinear(fs, col, col) == int(fs.gram[k, k])


def enumerate_radical(fs: FormSpace, levi: LeviDatum,
                      budget: int = 10 ** 6,
                      sample: int | None = None,
                      seed: int = 0) -> Iterator[np.ndarray]:
    """Elements of the unipotent radical of the standard parabolic.

    Exhaustive mode lists all q^(dim Q) form-preserving matrices acting
    trivially on the natural flag's factors, by backtracking column by
    column; it refuses when that count exceeds ``budget``.  Sampling mode
    draws ``sample`` elements from a seeded generator instead.
    """
    flag = natural_flag(fs.family, fs.n, levi)
    limits = _column_limits(flag)
    dim_q = radical_dim(fs.family, fs.n, levi)
    if sample is None:
        if fs.q ** dim_q > budget:
            raise DomainError(
                f"radical of {fs} for {levi} has {fs.q}^{dim_q} points, over "
                f"the budget of {budget}; pass a sample size instead")
        yield from _exhaustive_radical(fs, limits)
    else:
        yield from _sampled_radical(fs, limits, sample, seed)


def _exhaustive_radical(fs: FormSpace, limits) -> Iterator[np.ndarray]:
    N = fs.dim
    f = fs.field
    m = f.eye(N)

    def fill(k: int) -> Iterator[np.ndarray]:
        if k == N:
            yield m.copy()
            return
        for col in _column_solutions(fs, m, k, limits[k]):
            m[:, k] = col
            yield from fill(k + 1)
        m[:, k] = 0
        m[k, k] = 1

    yield from fill(0)


def _sampled_radical(fs: FormSpace, limits, sample: int, seed: int):
    rng = np.random.default_rng(seed)
    N = fs.dim
    f = fs.field
    produced = 0
    stalls = 0
    while produced < sample:
        m = f.eye(N)
        ok = True
        for k in range(N):
            col = _random_column(fs, m, k, limits[k], rng)
            if col is None:
                ok = False
                break
            m[:, k] = col
        if ok:
            produced += 1
            yield m.copy()
        else:
            stalls += 1
            if stalls > 1000 * (sample + 1):
                raise RuntimeError("sampling stalled; radical constraints too tight")


def _random_column(fs: FormSpace, m: np.ndarray, k: int, t: int, rng):
    f = fs.field
    N = fs.dim
    ek = np.zeros(N, dtype=np.int64)
    ek[k] = 1
    if fs.gram is None:
        col = ek.copy()
        if t:
            col[:t] = rng.integers(0, fs.q, size=t)
        return col
    rows = []
    rhs = []
    for j in range(k):
        w = f.vecmat(m[:, j], fs.gram)
        rows.append(w[:t])
        rhs.append(f.sub(int(fs.gram[j, k]), int(w[k])))
    a = np.array(rows, dtype=np.int64).reshape(len(rows), t)
    sol = f.solve_affine(a, np.array(rhs, dtype=np.int64))
    if sol is None:
        return None
    x0, basis = sol
    for _ in range(64):
        x = x0.copy()
        for v in basis:
            c = int(rng.integers(0, fs.q))
            if c:
                x = f.add(x, f.mul(v, c))
        col = ek.copy()
        col[:t] = x
        if _self_pairing_ok(fs, col, k):
            return col
    return None


def jordan_type(f: GF, g: np.ndarray) -> Partition:
    """Jordan block sizes of a unipotent matrix, by exact kernel dimensions."""
    N = g.shape[0]
    m = f.sub(g, f.eye(N))
    kernel_dims = [0]
    power = m
    while True:
        k = N - f.rank(power)
        if k <= kernel_dims[-1] and k < N:
            raise DomainError("matrix is not unipotent")
        kernel_dims.append(k)
        if k == N:
            break
        if len(kernel_dims) > N + 1:
            raise DomainError("matrix is not unipotent")
        power = f.matmul(power, m)
    jumps = [kernel_dims[i + 1] - kernel_dims[i] for i in range(len(kernel_dims) - 1)]
    return dual(partition(jumps))


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of scanning a radical against a predicted Richardson type."""

    all_le: bool
    attained: bool
    attained_count: int
    total: int
    q: int
    dim_q: int

    @property
    def passed(self) -> bool:
        return self.all_le and self.attained


def verify_richardson(fs: FormSpace, levi: LeviDatum, predicted: Partition,
                      budget: int = 10 ** 6,
                      sample: int | None = None,
                      seed: int = 0) -> VerifyReport:
    """Scan the radical: every Jordan type must be dominated by the
    prediction, and some element must attain it.  A failed report is a
    finding about the prediction, not an error."""
    predicted = partition(predicted)
    f = fs.field
    all_le = True
    attained_count = 0
    total = 0
    for g in enumerate_radical(fs, levi, budget=budget, sample=sample, seed=seed):
        seen = jordan_type(f, g)
        rel = compare_dominance(seen, predicted)
        if rel is Dominance.EQUAL:
            attained_count += 1
        elif rel is not Dominance.LESS:
            all_le = False
        total += 1
    return VerifyReport(
        all_le=all_le,
        attained=attained_count > 0,
        attained_count=attained_count,
        total=total,
        q=fs.q,
        dim_q=radical_dim(fs.family, fs.n, levi),
    )


def verify_at_some_q(family: str, n: int, levi: LeviDatum, predicted: Partition,
                     qs=(2, 3, 4, 5), budget: int = 10 ** 6,
                     seed: int = 0) -> tuple[int, VerifyReport]:
    """Retry harness: a dense orbit may miss rational points at tiny q,
    so walk the supported fields until attainment (or return the last try)."""
    last = None
    for q in qs:
        if family == SO_ODD and q % 2 == 0:
            continue
        fs = form_space(family, n, q)
        report = verify_richardson(fs, levi, predicted, budget=budget, seed=seed)
        last = (q, report)
        if report.passed:
            return last
    if last is None:
        raise DomainError("no admissible field size to try")
    return last


def nonsingular_chain_witness(fs: FormSpace, g: np.ndarray, x: int,
                              attempts: int = 1000, seed: int = 0) -> bool:
    """Search for a Jordan chain of length ``x`` spanning a nondegenerate
    subspace; the pairing of the chain's ends decides nondegeneracy.

    Returns False when no witness appears within the attempt budget, so a
    False is a bounded-search verdict, not a proof of degeneracy.
    """
    f = fs.field
    if fs.gram is None:
        raise DomainError("chain degeneracy needs a bilinear form")
    lam = jordan_type(f, g)
    if x not in lam:
        raise DomainError(f"{x} is not a block size of this element (type {lam})")
    N = fs.dim
    m = f.sub(g, f.eye(N))
    power_lo = f.eye(N)
    for _ in range(x - 1):
        power_lo = f.matmul(power_lo, m)  # (g-1)^(x-1)
    power_hi = f.matmul(power_lo, m)      # (g-1)^x
    kernel = f.kernel_basis(power_hi)
    rng = np.random.default_rng(seed)
    for _ in range(attempts):
        v = np.zeros(N, dtype=np.int64)
        for b in kernel:
            c = int(rng.integers(0, fs.q))
            if c:
                v = f.add(v, f.mul(b, c))
        top = f.matvec(power_lo, v)
        if not np.any(top):
            continue  # chain shorter than x
        if bilinear(fs, top, v) != 0:
            return True
    return False
