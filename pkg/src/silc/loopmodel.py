"""Exact loop-realization of level-zero modules in type A.

Every fundamental representation of sl_{n+1} is minuscule, so the level-zero
module attached to varpi_k is realized on Lambda^k(K^{n+1}) tensor Laurent
polynomials in z, with the loop algebra acting in the obvious way and the
q-grading given by the z-exponent.  Submodules generated by an extremal
vector under the upper (or lower) triangular current algebra are computed by
exact integer span closure inside a truncated tensor product; section spaces
of Richardson varieties are graded intersections of one submodule of each
kind.

Monomial basis: a slot is (subset, z_exp) with subset a sorted tuple encoding
a wedge basis vector; a monomial is a tuple of slots.  All vectors are
homogeneous in (total z-degree, total weight), so the linear algebra runs in
small independent blocks.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from math import gcd

from .rootdata import RootDataError, RootDatum, vec_add
from .weylgroup import FiniteWeylElement, weyl_group


def is_type_a(datum: RootDatum) -> bool:
    a = datum.cartan.entries
    r = datum.rank
    for i in range(r):
        for j in range(r):
            expect = 2 if i == j else (-1 if abs(i - j) == 1 else 0)
            if a[i][j] != expect:
                return False
    return True


def require_type_a(datum: RootDatum):
    if not is_type_a(datum):
        raise RootDataError(
            "graded character computations use the minuscule loop realization "
            "and are implemented for type A root data only"
        )


# ---------------------------------------------------------------------------
# wedge combinatorics
# ---------------------------------------------------------------------------

def subset_weight(subset, rank):
    """Fundamental-weight coordinates of a wedge basis vector."""
    s = set(subset)
    return tuple((1 if i in s else 0) - (1 if i + 1 in s else 0)
                 for i in range(1, rank + 1))


def matrix_unit(a, b, subset):
    """E_{ab} on a wedge subset: returns (sign, new_subset) or None."""
    if a == b:
        return (1, subset) if a in subset else None
    if b not in subset or a in subset:
        return None
    lo, hi = (a, b) if a < b else (b, a)
    crossings = sum(1 for s in subset if lo < s < hi)
    sign = -1 if crossings % 2 else 1
    new = tuple(sorted(set(subset) - {b} | {a}))
    return (sign, new)


def permutation_of(wg, u: FiniteWeylElement):
    """One-line permutation of {1..n+1} realizing u (type A)."""
    n1 = wg.datum.rank + 1
    perm = list(range(1, n1 + 1))
    # u = s_{i1} ... s_{ik}; apply rightmost first to the identity's values
    word = wg.reduced_word_finite(u)
    for i in reversed(word):
        # left-multiplying by s_i swaps the values i and i+1
        perm = [i + 1 if x == i else (i if x == i + 1 else x) for x in perm]
    return perm


# ---------------------------------------------------------------------------
# span closure
# ---------------------------------------------------------------------------

class BlockSpan:
    """Echelonized homogeneous subspace, blocked by (degree, weight)."""

    def __init__(self):
        self.blocks = {}  # (d, wt) -> dict pivot_monomial -> vector(dict)

    @staticmethod
    def _normalize(vec):
        g = 0
        for c in vec.values():
            g = gcd(g, abs(c))
        if g > 1:
            vec = {m: c // g for m, c in vec.items()}
        # fix the sign of the leading coefficient
        lead = max(vec)
        if vec[lead] < 0:
            vec = {m: -c for m, c in vec.items()}
        return vec

    def insert(self, key, vec):
        """Reduce vec against the block; insert if independent. Returns vec or None."""
        block = self.blocks.setdefault(key, {})
        vec = dict(vec)
        while vec:
            lead = max(vec)
            row = block.get(lead)
            if row is None:
                vec = self._normalize(vec)
                block[lead] = vec
                return vec
            a, b = row[lead], vec[lead]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {m: fa * c for m, c in vec.items()}
            for m, c in row.items():
                nc = new.get(m, 0) - fb * c
                if nc:
                    new[m] = nc
                elif m in new:
                    del new[m]
            vec = new
        return None

    def dims(self):
        return {key: len(block) for key, block in self.blocks.items() if block}


def monomial_data(monomial, rank):
    d = 0
    wt = (0,) * rank
    for subset, z in monomial:
        d += z
        wt = vec_add(wt, subset_weight(subset, rank))
    return d, wt


def apply_operator(op, vec, rank, d_ok):
    """Apply a loop-algebra element E_{ab} z^k to a homogeneous vector.

    Acts by the tensor-product rule (sum over slots), shifting the acted
    slot's z-exponent by k.
    """
    _, a, b, k = op
    out = {}
    for monomial, coeff in vec.items():
        for slot_idx, (subset, z) in enumerate(monomial):
            hit = matrix_unit(a, b, subset)
            if hit is None:
                continue
            sign, new_subset = hit
            new_mono = (monomial[:slot_idx] + ((new_subset, z + k),)
                        + monomial[slot_idx + 1:])
            out[new_mono] = out.get(new_mono, 0) + sign * coeff
    out = {m: c for m, c in out.items() if c != 0}
    if not out:
        return None
    lead = next(iter(out))
    d, wt = monomial_data(lead, rank)
    if not d_ok(d):
        return None
    return (d, wt), out


def span_closure(rank, seeds, ops, d_ok):
    """Close the span of the seeds under the operators; returns a BlockSpan."""
    span = BlockSpan()
    work = deque()
    for vec in seeds:
        lead = next(iter(vec))
        d, wt = monomial_data(lead, rank)
        if not d_ok(d):
            continue
        inserted = span.insert((d, wt), vec)
        if inserted is not None:
            work.append(((d, wt), inserted))
    # per-operator caches: slot action table and the fixed (degree, weight)
    # shift, so block keys propagate without re-deriving them per monomial
    eps = [subset_weight((i,), rank) for i in range(1, rank + 2)]
    tables = []
    for op in ops:
        _, a, b, k = op
        shift = tuple(x - y for x, y in zip(eps[a - 1], eps[b - 1]))
        tables.append((a, b, k, shift, {}))
    while work:
        (d, wt), vec = work.popleft()
        for a, b, k, shift, table in tables:
            nd = d + k
            if not d_ok(nd):
                continue
            out = {}
            get_hit = table.get
            for monomial, coeff in vec.items():
                for slot_idx in range(len(monomial)):
                    subset, z = monomial[slot_idx]
                    hit = get_hit(subset, 0)
                    if hit == 0:
                        hit = matrix_unit(a, b, subset)
                        table[subset] = hit
                    if hit is None:
                        continue
                    sign, new_subset = hit
                    new_mono = (monomial[:slot_idx] + ((new_subset, z + k),)
                                + monomial[slot_idx + 1:])
                    nc = out.get(new_mono, 0) + sign * coeff
                    if nc:
                        out[new_mono] = nc
                    elif new_mono in out:
                        del out[new_mono]
            if not out:
                continue
            nkey = (nd, vec_add(wt, shift))
            inserted = span.insert(nkey, out)
            if inserted is not None:
                work.append((nkey, inserted))
    return span


# ---------------------------------------------------------------------------
# current-algebra generator lists
# ---------------------------------------------------------------------------

def raising_ops(rank, k_max):
    """Generators of the Iwahori current algebra (degrees 0 and +1).

    A span that is closed under the simple raising operators E_{i,i+1} z^0
    and the affine generator E_{n+1,1} z^1 is closed under the whole algebra
    they generate (brackets act within any invariant subspace), so these
    suffice for exact span closures.  k_max is accepted for interface
    stability; when it is 0 the degree-raising generator is omitted.
    """
    n1 = rank + 1
    ops = [("E", i, i + 1, 0) for i in range(1, n1)]
    if k_max > 0:
        ops.append(("E", n1, 1, 1))
    return ops


def lowering_ops(rank, k_max):
    """Generators of the opposite Iwahori current algebra (degrees 0 and -1)."""
    n1 = rank + 1
    ops = [("E", i + 1, i, 0) for i in range(1, n1)]
    if k_max > 0:
        ops.append(("E", 1, n1, -1))
    return ops


# ---------------------------------------------------------------------------
# extremal seeds and module characters
# ---------------------------------------------------------------------------

def slot_layout(lam):
    """Slot list for lambda = sum m_i varpi_i: fundamental index per slot."""
    slots = []
    for i, m in enumerate(lam, start=1):
        slots.extend([i] * m)
    return slots


def extremal_monomial(wg, u: FiniteWeylElement, beta, lam):
    """Monomial of the extremal vector of u * t_beta in the tensor model."""
    perm = permutation_of(wg, u)
    slots = []
    for i in slot_layout(lam):
        subset = tuple(sorted(perm[j - 1] for j in range(1, i + 1)))
        slots.append((subset, -beta[i - 1]))
    return tuple(slots)


def global_weyl_blocks(datum: RootDatum, ufin: FiniteWeylElement, lam, d_max):
    """Graded dimensions {(d, wt): dim} of the submodule generated upward
    from the extremal vector of ufin, truncated to z-degrees 0 <= d < d_max.

    This is the normalized character: the extremal vector sits at degree 0.
    """
    require_type_a(datum)
    rank = datum.rank
    if sum(lam) == 0:
        return {(0, (0,) * rank): 1} if d_max > 0 else {}
    wg = weyl_group(datum)
    zero_beta = (0,) * rank
    seed_mono = extremal_monomial(wg, ufin, zero_beta, lam)
    ops = raising_ops(rank, max(0, d_max - 1))
    span = span_closure(rank, [{seed_mono: 1}], ops, lambda d: 0 <= d < d_max)
    return span.dims()


def schubert_blocks(datum: RootDatum, ufin: FiniteWeylElement, beta, lam, d_max):
    """Graded dimensions {(d, wt): dim} of the submodule generated upward from
    the extremal vector of ufin * t_beta, in absolute z-degrees < d_max.

    Unlike a pure q-shift of the finite part, the translation twists each
    weight space by its own degree, so the closure is run from the translated
    seed directly.  Degrees never drop below the seed degree -<beta, lam>.
    """
    require_type_a(datum)
    rank = datum.rank
    d_ext = -sum(b * l for b, l in zip(beta, lam))
    if sum(lam) == 0:
        return {(0, (0,) * rank): 1} if d_max > 0 else {}
    if d_ext >= d_max:
        return {}
    wg = weyl_group(datum)
    seed = extremal_monomial(wg, ufin, tuple(beta), lam)
    ops = raising_ops(rank, max(0, d_max - 1 - d_ext))
    span = span_closure(rank, [{seed: 1}], ops, lambda d: d_ext <= d < d_max)
    return span.dims()


def _decompose(wg, w):
    """(finite part, translation) of an affine element."""
    return w.finite, w.translation


def richardson_blocks(datum: RootDatum, v, w, lam):
    """Graded dimensions {(d, wt): dim} of the intersection of the upward
    module of w*w0 and the downward module of v*w0, in absolute z-degrees.

    The intersection is the full (finite-dimensional) space of the dual of
    the Richardson section module; no truncation is applied.
    """
    require_type_a(datum)
    rank = datum.rank
    if sum(lam) == 0:
        return {(0, (0,) * rank): 1}
    wg = weyl_group(datum)
    w0aff = wg.affine_from_finite(wg.w0)
    xw = wg.compose(w, w0aff)
    xv = wg.compose(v, w0aff)
    uw, bw = _decompose(wg, xw)
    uv, bv = _decompose(wg, xv)
    d_low = -sum(b * l for b, l in zip(bw, lam))
    d_high = -sum(b * l for b, l in zip(bv, lam))
    if d_low > d_high:
        return {}
    k_span = d_high - d_low
    d_ok = lambda d: d_low <= d <= d_high

    seed_up = {extremal_monomial(wg, uw, bw, lam): 1}
    span_up = span_closure(rank, [seed_up], raising_ops(rank, k_span), d_ok)

    seed_down = {extremal_monomial(wg, uv, bv, lam): 1}
    span_down = span_closure(rank, [seed_down], lowering_ops(rank, k_span), d_ok)

    out = {}
    keys = set(span_up.blocks) & set(span_down.blocks)
    for key in keys:
        block_a = span_up.blocks[key]
        block_b = span_down.blocks[key]
        dim_a, dim_b = len(block_a), len(block_b)
        if dim_a == 0 or dim_b == 0:
            continue
        # dim(A ∩ B) = dim A + dim B - dim(A + B)
        stack = BlockSpan()
        stack.blocks[key] = {m: dict(vec) for m, vec in block_a.items()}
        added = 0
        for vec in block_b.values():
            if stack.insert(key, vec) is not None:
                added += 1
        dim = dim_b - added
        if dim > 0:
            out[key] = dim
    return out
