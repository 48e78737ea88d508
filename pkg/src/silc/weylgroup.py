"""Finite and affine Weyl group arithmetic.

An affine element is stored in the normal form (u, beta) for u * t_beta with
u in the finite Weyl group and beta in the coroot lattice.  Multiplication
follows t_beta * u = u * t_{u^{-1} beta}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootdata import (  # noqa: F401
    RootDataError,
    RootDatum,
    mat_identity,
    mat_inv_int,
    mat_mul,
    mat_vec,
    vec_add,
    vec_dot,
    vec_neg,
)


_INV_CACHE: dict = {}


def _cached_inv(mat):
    got = _INV_CACHE.get(mat)
    if got is None:
        got = mat_inv_int(mat)
        _INV_CACHE[mat] = got
    return got


@dataclass(frozen=True)
class FiniteWeylElement:
    """Element of the finite Weyl group.

    root_mat: action on the simple-root basis (columns = images of alpha_j).
    coroot_mat: action on the simple-coroot basis.
    The root matrix is the canonical identity of the element.
    """
    root_mat: tuple
    coroot_mat: tuple

    def __mul__(self, other: "FiniteWeylElement") -> "FiniteWeylElement":
        return FiniteWeylElement(
            mat_mul(self.root_mat, other.root_mat),
            mat_mul(self.coroot_mat, other.coroot_mat),
        )

    def inverse(self) -> "FiniteWeylElement":
        return FiniteWeylElement(_cached_inv(self.root_mat), _cached_inv(self.coroot_mat))

    def act_root(self, coords):
        return mat_vec(self.root_mat, coords)

    def act_coweight(self, beta):
        return mat_vec(self.coroot_mat, beta)

    def act_weight(self, lam):
        # <alpha_i^vee, u lam> = <u^{-1} alpha_i^vee, lam>
        inv = _cached_inv(self.coroot_mat)
        cols = list(zip(*inv))
        return tuple(vec_dot(col, lam) for col in cols)

    def __eq__(self, other):
        return isinstance(other, FiniteWeylElement) and self.root_mat == other.root_mat

    def __hash__(self):
        return hash(self.root_mat)


@dataclass(frozen=True)
class AffineWeylElement:
    finite: FiniteWeylElement
    translation: tuple  # coweight in coroot coordinates

    def key(self):
        """Canonical sort/identity key."""
        return (self.finite.root_mat, self.translation)

    def __eq__(self, other):
        return (
            isinstance(other, AffineWeylElement)
            and self.finite == other.finite
            and self.translation == other.translation
        )

    def __hash__(self):
        return hash((self.finite.root_mat, self.translation))


class WeylGroup:
    """Weyl-group operations bound to one root datum. Immutable, cached."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        r = datum.rank
        ident = mat_identity(r)
        self.id_finite = FiniteWeylElement(ident, ident)
        self.identity = AffineWeylElement(self.id_finite, tuple(0 for _ in range(r)))
        # positive roots as (fw-coords, root-coords, coroot) for the length formula
        self._pos = tuple(
            (datum.root_to_weight(rt.coords), rt.coords, rt.coroot)
            for rt in datum.positive_roots()
        )
        self._len_cache = {}
        self._simple_finite = tuple(self._simple_reflection_finite(i) for i in range(1, r + 1))
        self._s0 = self._build_s0()
        self._w0 = self._build_w0()

    # -- constructors --------------------------------------------------------

    def _simple_reflection_finite(self, i):
        d = self.datum
        r = d.rank
        a = d.cartan.entries
        root_cols = []
        coroot_cols = []
        for j in range(r):
            rc = [int(j == k) for k in range(r)]
            rc[i - 1] -= a[i - 1][j]  # s_i(alpha_j) = alpha_j - a_{ij} alpha_i
            root_cols.append(tuple(rc))
            cc = [int(j == k) for k in range(r)]
            cc[i - 1] -= a[j][i - 1]  # s_i(alpha_j^vee) = alpha_j^vee - a_{ji} alpha_i^vee
            coroot_cols.append(tuple(cc))
        root_mat = tuple(zip(*root_cols))
        coroot_mat = tuple(zip(*coroot_cols))
        return FiniteWeylElement(root_mat, coroot_mat)

    def finite_from_word(self, word) -> FiniteWeylElement:
        out = self.id_finite
        for i in word:
            if not 1 <= i <= self.datum.rank:
                raise RootDataError(f"finite reflection index {i} out of range")
            out = out * self._simple_finite[i - 1]
        return out

    def element(self, word, beta) -> AffineWeylElement:
        return AffineWeylElement(self.finite_from_word(word), tuple(int(b) for b in beta))

    def translation(self, beta) -> AffineWeylElement:
        return AffineWeylElement(self.id_finite, tuple(int(b) for b in beta))

    def reflection_by_root(self, root) -> FiniteWeylElement:
        """s_gamma for a (positive or negative) finite root."""
        d = self.datum
        r = d.rank
        wt = d.root_to_weight(root.coords)
        root_cols = []
        coroot_cols = []
        for j in range(r):
            rc = [int(j == k) for k in range(r)]
            p = root.coroot  # <gamma^vee, alpha_j>
            pj = sum(p[k] * d.cartan.entries[k][j] for k in range(r))
            rc = tuple(rc[k] - pj * root.coords[k] for k in range(r))
            root_cols.append(rc)
            cc = [int(j == k) for k in range(r)]
            cc = tuple(cc[k] - wt[j] * root.coroot[k] for k in range(r))
            coroot_cols.append(cc)
        return FiniteWeylElement(tuple(zip(*root_cols)), tuple(zip(*coroot_cols)))

    def _build_s0(self):
        # s_0 = s_theta * t_{-theta^vee}
        theta = self.datum.theta
        s_theta = self.reflection_by_root(theta)
        return AffineWeylElement(s_theta, vec_neg(theta.coroot))

    def _build_w0(self):
        """Longest finite element, by greedy ascent."""
        w = self.id_finite
        length = 0
        target = len(self.datum.positive_roots())
        while length < target:
            for i in range(1, self.datum.rank + 1):
                cand = self._simple_finite[i - 1] * w
                if self.length_finite(cand) > length:
                    w = cand
                    length += 1
                    break
            else:  # pragma: no cover
                raise RootDataError("failed to reach the longest element")
        return w

    @property
    def w0(self) -> FiniteWeylElement:
        return self._w0

    @property
    def s0(self) -> AffineWeylElement:
        return self._s0

    def simple_affine(self, i) -> AffineWeylElement:
        """s_i as an affine element, i in {0, 1, ..., r}."""
        if i == 0:
            return self._s0
        return AffineWeylElement(self._simple_finite[i - 1], self.identity.translation)

    # -- group law -----------------------------------------------------------

    def compose(self, x: AffineWeylElement, y: AffineWeylElement) -> AffineWeylElement:
        # (u1 t_b1)(u2 t_b2) = u1 u2 t_{u2^{-1} b1 + b2}
        u = x.finite * y.finite
        beta = vec_add(y.finite.inverse().act_coweight(x.translation), y.translation)
        return AffineWeylElement(u, beta)

    def inverse(self, x: AffineWeylElement) -> AffineWeylElement:
        uinv = x.finite.inverse()
        return AffineWeylElement(uinv, vec_neg(x.finite.act_coweight(x.translation)))

    def affine_from_finite(self, u: FiniteWeylElement) -> AffineWeylElement:
        return AffineWeylElement(u, self.identity.translation)

    # -- lengths -------------------------------------------------------------

    def length_finite(self, u: FiniteWeylElement) -> int:
        n = 0
        for _, rc, _ in self._pos:
            img = u.act_root(rc)
            if all(c <= 0 for c in img):
                n += 1
        return n

    def length_affine(self, w: AffineWeylElement) -> int:
        key = w.key()
        got = self._len_cache.get(key)
        if got is not None:
            return got
        n = 0
        u = w.finite
        beta = w.translation
        for fw, rc, _ in self._pos:
            chi = 1 if all(c <= 0 for c in u.act_root(rc)) else 0
            n += abs(vec_dot(beta, fw) + chi)
        self._len_cache[key] = n
        return n

    # -- reduced words and Bruhat order ---------------------------------------

    def left_mul_simple(self, i, w: AffineWeylElement) -> AffineWeylElement:
        return self.compose(self.simple_affine(i), w)

    def right_mul_simple(self, w: AffineWeylElement, i) -> AffineWeylElement:
        return self.compose(w, self.simple_affine(i))

    def first_left_descent(self, w: AffineWeylElement):
        lw = self.length_affine(w)
        for i in range(0, self.datum.rank + 1):
            if self.length_affine(self.left_mul_simple(i, w)) < lw:
                return i
        return None

    def reduced_word(self, w: AffineWeylElement):
        """Greedy reduced word (smallest descent index first)."""
        word = []
        while True:
            i = self.first_left_descent(w)
            if i is None:
                if w != self.identity:  # pragma: no cover
                    raise RootDataError("descent search failed")
                return word
            word.append(i)
            w = self.left_mul_simple(i, w)

    def reduced_word_finite(self, u: FiniteWeylElement):
        return self.reduced_word(self.affine_from_finite(u))

    def from_word(self, word) -> AffineWeylElement:
        out = self.identity
        for i in word:
            out = self.compose(out, self.simple_affine(i))
        return out

    def bruhat_le(self, x: AffineWeylElement, y: AffineWeylElement) -> bool:
        """Affine Bruhat order by the standard descent recursion."""
        while True:
            if x == y:
                return True
            ly = self.length_affine(y)
            if self.length_affine(x) >= ly:
                return False
            if ly == 0:
                return False
            i = self.first_left_descent(y)
            y = self.left_mul_simple(i, y)
            xs = self.left_mul_simple(i, x)
            if self.length_affine(xs) < self.length_affine(x):
                x = xs

    def min_coset_rep(self, w: AffineWeylElement) -> AffineWeylElement:
        """Minimal-length representative of the coset w*W."""
        while True:
            lw = self.length_affine(w)
            for i in range(1, self.datum.rank + 1):
                cand = self.right_mul_simple(w, i)
                if self.length_affine(cand) < lw:
                    w = cand
                    break
            else:
                return w

    # -- serialization ---------------------------------------------------------

    def to_json(self, w: AffineWeylElement) -> dict:
        word = [i for i in self.reduced_word_finite(w.finite)]
        return {"u_word": word, "beta": list(w.translation)}

    def from_json(self, obj) -> AffineWeylElement:
        return self.element(obj["u_word"], obj["beta"])

    def parse(self, text: str) -> AffineWeylElement:
        """Parse the command-line grammar "u_word@beta", e.g. "1,2@0,1" or "e@1"."""
        text = text.strip()
        if "@" in text:
            upart, bpart = text.split("@", 1)
        else:
            upart, bpart = text, ",".join("0" * 0) or ""
        upart = upart.strip()
        if upart in ("e", ""):
            word = []
        else:
            word = [int(t) for t in upart.split(",") if t.strip() != ""]
        if bpart.strip() == "":
            beta = [0] * self.datum.rank
        else:
            beta = [int(t) for t in bpart.split(",")]
        if len(beta) != self.datum.rank:
            raise RootDataError(
                f"translation needs {self.datum.rank} coordinates, got {len(beta)}"
            )
        return self.element(word, beta)

    def format(self, w: AffineWeylElement) -> str:
        word = self.reduced_word_finite(w.finite)
        upart = ",".join(str(i) for i in word) if word else "e"
        bpart = ",".join(str(b) for b in w.translation)
        return f"{upart}@{bpart}"


@lru_cache(maxsize=None)
def weyl_group(datum: RootDatum) -> WeylGroup:
    return WeylGroup(datum)
