"""Semi-infinite Bruhat order, semi-infinite length, covers and intervals.

The order w <=_si v is decided by comparing w*t_beta and v*t_beta in ordinary
affine Bruhat order for deeply antidominant beta; the translation depth is
doubled until two consecutive answers agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .rootdata import RootDatum, vec_add, vec_dot, vec_neg, vec_scale
from .weylgroup import AffineWeylElement, WeylGroup, weyl_group


class StabilizationError(RuntimeError):
    """The deep-translation comparison failed to stabilize below the cap."""


_N_SCHEDULE = (2, 4, 8, 16, 32, 64)


@dataclass(frozen=True)
class AffineRoot:
    """Real affine root gamma + n*delta (gamma a finite root)."""
    root_coords: tuple  # finite part, simple-root basis
    coroot: tuple       # finite coroot of the finite part
    delta_coeff: int

    def is_positive(self):
        if self.delta_coeff != 0:
            return self.delta_coeff > 0
        return all(c >= 0 for c in self.root_coords) and any(self.root_coords)


class SemiInfiniteOrder:
    def __init__(self, wg: WeylGroup):
        self.wg = wg
        self.datum: RootDatum = wg.datum
        self._si_cache = {}

    # -- length --------------------------------------------------------------

    def si_length(self, w: AffineWeylElement) -> int:
        """l(u) + 2<beta, rho> for w = u t_beta (possibly negative)."""
        return self.wg.length_finite(w.finite) + 2 * vec_dot(
            w.translation, self.datum.rho
        )

    # -- order ---------------------------------------------------------------

    def _deep_beta(self, n):
        two_rho_cw = self.datum.two_rho_coweight
        return vec_scale(-n, two_rho_cw)

    def si_le(self, w: AffineWeylElement, v: AffineWeylElement) -> bool:
        """True iff w <=_si v (w deeper than or equal to v)."""
        if w == v:
            return True
        # strict comparability forces a strict si-length increase downward
        if self.si_length(w) <= self.si_length(v):
            return False
        # right translation equivariance: compare w t_{-beta_v} against the
        # purely finite part of v, which keeps the cache small and the deep
        # comparisons shallow
        diff = tuple(a - b for a, b in zip(w.translation, v.translation))
        w = AffineWeylElement(w.finite, diff)
        v = AffineWeylElement(v.finite, (0,) * self.datum.rank)
        key = (w.key(), v.key())
        got = self._si_cache.get(key)
        if got is not None:
            return got
        wg = self.wg
        prev = None
        for n in _N_SCHEDULE:
            t = wg.translation(self._deep_beta(n))
            ans = wg.bruhat_le(wg.compose(w, t), wg.compose(v, t))
            if prev is not None and ans == prev:
                self._si_cache[key] = ans
                return ans
            prev = ans
        raise StabilizationError(
            f"semi-infinite comparison did not stabilize up to N={_N_SCHEDULE[-1]}"
        )

    # -- reflections -----------------------------------------------------------

    def affine_reflection(self, alpha: AffineRoot) -> AffineWeylElement:
        """s_alpha for alpha = gamma + n*delta, as s_gamma * t_{n gamma^vee}."""
        from .rootdata import Root

        gamma = Root(alpha.root_coords, alpha.coroot)
        s_gamma = self.wg.reflection_by_root(gamma)
        return self.wg.compose(
            self.wg.affine_from_finite(s_gamma),
            self.wg.translation(vec_scale(alpha.delta_coeff, alpha.coroot)),
        )

    def positive_affine_roots(self, height_bound: int):
        """Positive real affine roots gamma + n delta with |n| <= height_bound."""
        out = []
        pos = self.datum.positive_roots()
        for rt in pos:
            out.append(AffineRoot(rt.coords, rt.coroot, 0))
        for n in range(1, height_bound + 1):
            for rt in pos:
                out.append(AffineRoot(rt.coords, rt.coroot, n))
                out.append(AffineRoot(vec_neg(rt.coords), vec_neg(rt.coroot), n))
        return out

    def si_covers_below(self, v: AffineWeylElement, height_bound: int = 2):
        """All (alpha, s_alpha v) one step below v in the semi-infinite order.

        Complete only for covering roots with |delta coefficient| <= height_bound.
        """
        if height_bound < 1:
            raise ValueError("height_bound must be >= 1")
        target = self.si_length(v) + 1
        out = []
        seen = set()
        for alpha in self.positive_affine_roots(height_bound):
            x = self.wg.compose(self.affine_reflection(alpha), v)
            if x.key() in seen:
                continue
            if self.si_length(x) == target and self.si_le(x, v):
                seen.add(x.key())
                out.append((alpha, x))
        out.sort(key=lambda pair: pair[1].key())
        return out

    # -- boxes and intervals -----------------------------------------------------

    def box(self, center: AffineWeylElement, radius: int):
        """All u t_beta with |beta_i - center_beta_i| <= radius, any finite part."""
        elements = []
        finite_parts = self.all_finite_elements()
        c = center.translation
        ranges = [range(ci - radius, ci + radius + 1) for ci in c]
        for beta in product(*ranges):
            for u in finite_parts:
                elements.append(AffineWeylElement(u, beta))
        return elements

    def all_finite_elements(self):
        wg = self.wg
        frontier = [wg.id_finite]
        seen = {wg.id_finite}
        while frontier:
            nxt = []
            for u in frontier:
                for i in range(1, self.datum.rank + 1):
                    cand = wg._simple_finite[i - 1] * u
                    if cand not in seen:
                        seen.add(cand)
                        nxt.append(cand)
            frontier = nxt
        return sorted(seen, key=lambda u: u.root_mat)

    def si_interval(self, v: AffineWeylElement, w: AffineWeylElement, radius: int):
        """All u in the radius box around w with v <=_si u <=_si w, sorted.

        Returns [] if v and w are incomparable.
        """
        if not self.si_le(v, w):
            return []
        seen = {}
        for center in (w, v):
            for u in self.box(center, radius):
                if u.key() in seen:
                    continue
                if self.si_le(v, u) and self.si_le(u, w):
                    seen[u.key()] = u
        out = list(seen.values())
        out.sort(key=lambda u: (self.si_length(u), u.key()))
        return out


_ORDERS: dict = {}


def si_order(datum: RootDatum) -> SemiInfiniteOrder:
    got = _ORDERS.get(id(datum))
    if got is None:
        got = SemiInfiniteOrder(weyl_group(datum))
        _ORDERS[id(datum)] = got
    return got
