"""Generalized Reed-Solomon codes: Vandermonde-times-diagonal generator,
encoder, and a bounded-distance errors-and-erasures decoder.

The decoder corrects any pattern of rho errors and mu erasures with
2*rho + mu <= d-1 and reports DecodeFailure otherwise; it never searches
beyond that radius even when a unique nearest codeword exists.  A brute-force
nearest-codeword oracle ships alongside for tests.

Evaluation points are distinct nonzero field elements, which caps the length
at q-1.  Lengths q and q+1 are reached by extending with the zero point
(revealing f(0) = f_0) and the point at infinity (revealing the top
coefficient f_{k-1}); both extensions keep the code MDS.  The core algebraic
machinery (syndromes, erasure locator, Sugiyama key-equation solver, Forney
values) runs on the nonzero-point torso; the at-most-two special positions
are handled by a small error/correct hypothesis split around it, which
preserves the exact 2*rho + mu <= d-1 radius.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Sequence

import numpy as np

from . import kernels
from .errors import DecodeFailure, ScaleLimitError
from .fqlinalg import MaskedVector, MatFq
from .gf import _FieldOps, lagrange_interpolate, poly_eval_at, poly_mul, poly_sub, poly_trim

CODEBOOK_GUARD = 10 ** 5

INFINITY = None  # sentinel for the point at infinity in an eval-point list


class GrsCode:
    """[n, k, d] GRS code over GF(q), n = k + d - 1 <= q + 1."""

    def __init__(self, field: _FieldOps, k: int, d: int,
                 points: Sequence, multipliers: Sequence[int],
                 systematic: bool = False):
        n = k + d - 1
        if k < 1 or d < 1:
            raise ValueError("need k >= 1 and d >= 1")
        pts: list[int | None] = []
        for a in points:
            pts.append(None if a is INFINITY else field.validate(a))
        multipliers = [field.validate(e) for e in multipliers]
        if len(pts) != n or len(multipliers) != n:
            raise ValueError(f"need exactly n = {n} points and multipliers")
        finite = [a for a in pts if a is not None]
        if len(set(finite)) != len(finite):
            raise ValueError("evaluation points must be distinct")
        if pts.count(None) > 1:
            raise ValueError("at most one point at infinity")
        if 0 in multipliers:
            raise ValueError("multipliers must be nonzero")
        if n > field.order + 1:
            raise ValueError(
                f"field too small: length {n} exceeds q + 1 = {field.order + 1}")
        self.field = field
        self.n = n
        self.k = k
        self.d = d
        self.points = tuple(pts)
        self.multipliers = tuple(multipliers)
        self.systematic = systematic
        self._zero_pos = pts.index(0) if 0 in pts else -1
        self._inf_pos = pts.index(None) if None in pts else -1
        self._torso = tuple(i for i in range(n)
                            if i != self._zero_pos and i != self._inf_pos)
        rows = []
        for t in range(k):
            row = []
            for a, e in zip(pts, multipliers):
                if a is None:
                    row.append(e if t == k - 1 else 0)
                else:
                    row.append(field.mul(field.pow(a, t), e))
            rows.append(row)
        G = MatFq(field, rows)
        if systematic:
            G, rank = G.rref()
            assert rank == k  # any k columns of an MDS generator are independent
        self.G = G
        self._g_red, _, self._g_pivots = kernels.rref(G.rows, n, field)
        self._g_red = self._g_red[:k]
        if not self._has_specials():
            # dual multipliers: v_i = 1 / (eta_i * prod_{j != i} (a_i - a_j));
            # rows (v_i * a_i^j), j < d-1, are a parity check for the code
            dual = []
            for i, ai in enumerate(pts):
                prod_term = multipliers[i]
                for j, aj in enumerate(pts):
                    if j != i:
                        prod_term = field.mul(prod_term, field.sub(ai, aj))
                dual.append(field.inv(prod_term))
            self._dual = tuple(dual)
        else:
            self._dual = None
        self._torso_codes: dict[int, GrsCode] = {}
        self._codebook_cache: np.ndarray | None = None

    def _has_specials(self) -> bool:
        return self._zero_pos >= 0 or self._inf_pos >= 0

    # -- encoding -------------------------------------------------------------

    def encode(self, message: Sequence) -> tuple[int, ...]:
        msg = [self.field.validate(x) for x in message]
        if len(msg) != self.k:
            raise ValueError(f"message length must be {self.k}")
        return self.G.mul_vector(msg)

    def evaluate_poly(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        """Codeword of the polynomial with the given k coefficients
        (independent of the systematic flag)."""
        F = self.field
        if len(coeffs) != self.k:
            raise ValueError(f"need {self.k} coefficients")
        out = []
        for a, e in zip(self.points, self.multipliers):
            if a is None:
                out.append(F.mul(e, coeffs[self.k - 1]))
            else:
                out.append(F.mul(e, poly_eval_at(F, list(coeffs), a)))
        return tuple(out)

    def contains(self, vec: Sequence) -> bool:
        v = [self.field.validate(x) for x in vec]
        if len(v) != self.n:
            raise ValueError("vector length mismatch")
        res = kernels.reduce_vector(v, self._g_red, self._g_pivots, self.field)
        return not any(res)

    def message_of(self, codeword: Sequence[int]) -> tuple[int, ...]:
        """Polynomial coefficients of a codeword (inverse of evaluate_poly)."""
        F = self.field
        c = [F.validate(x) for x in codeword]
        finite = [i for i in range(self.n) if self.points[i] is not None]
        if len(finite) >= self.k:
            pts = [(self.points[i], F.div(c[i], self.multipliers[i]))
                   for i in finite[: self.k]]
            f = list(lagrange_interpolate(F, pts).coeffs)
        else:
            # only when d = 1 and the infinity position is needed
            top = F.div(c[self._inf_pos], self.multipliers[self._inf_pos])
            pts = [(self.points[i],
                    F.sub(F.div(c[i], self.multipliers[i]),
                          F.mul(top, F.pow(self.points[i], self.k - 1))))
                   for i in finite]
            f = list(lagrange_interpolate(F, pts).coeffs)
            f += [0] * (self.k - 1 - len(f))
            f.append(top)
        f += [0] * (self.k - len(f))
        return tuple(f)

    def syndromes(self, vec: Sequence[int]) -> list[int]:
        assert self._dual is not None
        F = self.field
        out = [0] * (self.d - 1)
        for i in range(self.n):
            wi = F.mul(vec[i], self._dual[i])
            if wi == 0:
                continue
            x = 1
            ai = self.points[i]
            for j in range(self.d - 1):
                out[j] = F.add(out[j], F.mul(wi, x))
                x = F.mul(x, ai)
        return out

    # -- decoding -------------------------------------------------------------

    def decode_errors_erasures(self, received) -> tuple[int, ...]:
        """Bounded-distance decode of a MaskedVector (or a plain vector).

        Returns the unique codeword within the 2*rho + mu <= d-1 radius or
        raises DecodeFailure.
        """
        if isinstance(received, MaskedVector):
            if received.field != self.field:
                raise ValueError("received vector over a different context")
            r = list(received.entries)
            erased = list(received.masked_coords)
        else:
            r = [self.field.validate(x) for x in received]
            erased = []
        if len(r) != self.n:
            raise ValueError(f"received length must be {self.n}")
        mu = len(erased)
        if mu > self.d - 1:
            raise DecodeFailure(f"{mu} erasures exceed budget d-1 = {self.d - 1}")
        if not self._has_specials():
            return self._decode_core(r, erased)
        return self._decode_extended(r, erased)

    def _decode_extended(self, r: list[int], erased: list[int]) -> tuple[int, ...]:
        """Hypothesis split over the unmasked special positions: each is
        presumed either correct (turning into a coefficient constraint on f)
        or erroneous (dropped).  A candidate is accepted only if the full
        re-encoded word satisfies 2*rho + mu <= d-1, which is unique within
        that radius, so the hypothesis order cannot change the answer."""
        F = self.field
        erased_set = set(erased)
        specials = [p for p in (self._zero_pos, self._inf_pos)
                    if p >= 0 and p not in erased_set]
        torso_mask = [i for i in erased if i in set(self._torso)]
        budget = self.d - 1 - len(erased)
        for presumed_bad in range(len(specials) + 1):
            for bad in combinations(specials, presumed_bad):
                good = [p for p in specials if p not in bad]
                try:
                    coeffs = self._decode_hypothesis(r, torso_mask, good)
                except DecodeFailure:
                    continue
                if coeffs is None:
                    continue
                candidate = self.evaluate_poly(coeffs)
                mismatches = sum(1 for i in range(self.n)
                                 if i not in erased_set and candidate[i] != r[i])
                if 2 * mismatches <= budget:
                    out = list(candidate)
                    return tuple(out)
        raise DecodeFailure("no codeword within the decoding radius")

    def _decode_hypothesis(self, r: list[int], torso_mask: list[int],
                           good: list[int]):
        """Decode the nonzero-point torso under coefficient constraints from
        the specials presumed correct; returns full coefficient tuple."""
        F = self.field
        want_zero = self._zero_pos in good
        want_inf = self._inf_pos in good
        v_zero = (F.div(r[self._zero_pos], self.multipliers[self._zero_pos])
                  if want_zero else None)
        v_inf = (F.div(r[self._inf_pos], self.multipliers[self._inf_pos])
                 if want_inf else None)
        k_red = self.k - (1 if want_zero else 0) - (1 if want_inf else 0)
        if self.k == 1 and want_zero and want_inf:
            # both constrain the single coefficient
            if v_zero != v_inf:
                return None
            return (v_zero,)
        if k_red < 0:
            return None
        n_t = len(self._torso)
        # transformed torso values
        tvals = [0] * n_t
        tmask = []
        masked = set(torso_mask)
        for pos_t, i in enumerate(self._torso):
            if i in masked:
                tmask.append(pos_t)
                continue
            a = self.points[i]
            u = F.div(r[i], self.multipliers[i])
            if want_inf:
                u = F.sub(u, F.mul(v_inf, F.pow(a, self.k - 1)))
            if want_zero:
                u = F.div(F.sub(u, v_zero), a)
            tvals[pos_t] = u
        if k_red == 0:
            mid: tuple[int, ...] = ()
        else:
            torso_code = self._torso_code(k_red)
            decoded = torso_code._decode_core(tvals, tmask)
            mid = torso_code.message_of(decoded)
        coeffs = list(mid) + [0] * (k_red - len(mid))
        if want_zero:
            coeffs = [v_zero] + coeffs
        if want_inf:
            coeffs = coeffs + [0] * (self.k - 1 - len(coeffs)) + [v_inf]
        coeffs += [0] * (self.k - len(coeffs))
        return tuple(coeffs)

    def _torso_code(self, k_red: int) -> "GrsCode":
        code = self._torso_codes.get(k_red)
        if code is None:
            pts = [self.points[i] for i in self._torso]
            d_t = len(pts) - k_red + 1
            code = GrsCode(self.field, k_red, d_t, pts, [1] * len(pts))
            self._torso_codes[k_red] = code
        return code

    def _decode_core(self, r: list[int], erased: list[int]) -> tuple[int, ...]:
        """Syndrome/key-equation decoder; valid only for all-nonzero points."""
        mu = len(erased)
        if mu > self.d - 1:
            raise DecodeFailure(f"{mu} erasures exceed budget d-1 = {self.d - 1}")
        r = list(r)
        for j in erased:
            r[j] = 0
        if self.d == 1:
            return tuple(r)
        F = self.field
        synd = self.syndromes(r)
        # erasure locator Lambda_0(x) = prod (1 - a_j x) over erased positions
        lam0 = [1]
        for j in erased:
            lam0 = poly_mul(F, lam0, [1, F.neg(self.points[j])])
        t_budget = (self.d - 1 - mu) // 2
        modified = poly_trim(poly_mul(F, synd, lam0)[: self.d - 1])
        if t_budget > 0 and modified:
            lam_err, omega = self._solve_key_equation(modified, mu)
            if len(lam_err) - 1 > t_budget:
                raise DecodeFailure("error locator exceeds budget")
        else:
            lam_err, omega = [1], modified
        lam = poly_mul(F, lam0, lam_err)
        positions = [i for i, a in enumerate(self.points)
                     if poly_eval_at(F, lam, F.inv(a)) == 0]
        if len(positions) != len(lam) - 1:
            raise DecodeFailure("error locator has wrong root structure")
        # Forney: error values from the evaluator and the locator derivative
        lam_deriv = self._derivative(lam)
        corrections = 0
        erased_set = set(erased)
        corrected = list(r)
        for i in positions:
            x_inv = F.inv(self.points[i])
            denom = poly_eval_at(F, lam_deriv, x_inv)
            if denom == 0:
                raise DecodeFailure("repeated locator root")
            # Forney with syndromes starting at power 0:
            # E_i = -a_i * Omega(a_i^-1) / Lambda'(a_i^-1), then e_i = E_i / v_i
            weighted_err = F.neg(F.mul(
                self.points[i], F.div(poly_eval_at(F, omega, x_inv), denom)))
            e = F.div(weighted_err, self._dual[i])
            if e != 0 and i not in erased_set:
                corrections += 1
            corrected[i] = F.sub(corrected[i], e)
        if 2 * corrections + mu > self.d - 1:
            raise DecodeFailure("corrections exceed the decoding radius")
        if any(self.syndromes(corrected)):
            raise DecodeFailure("no codeword within the decoding radius")
        return tuple(corrected)

    def _derivative(self, coeffs: list[int]) -> list[int]:
        F = self.field
        out = []
        for i in range(1, len(coeffs)):
            s = 0
            for _ in range(i % F.char):
                s = F.add(s, coeffs[i])
            out.append(s)
        return poly_trim(out)

    def _solve_key_equation(self, modified: list[int], mu: int):
        """Sugiyama EEA on (x^(d-1), modified syndrome); stop when the
        remainder degree drops below (d-1+mu)/2."""
        F = self.field
        r_prev = [0] * (self.d - 1) + [1]
        r_cur = list(modified)
        b_prev, b_cur = [], [1]
        while r_cur and 2 * (len(r_cur) - 1) >= self.d - 1 + mu:
            quot, rem = self._poly_divmod(r_prev, r_cur)
            r_prev, r_cur = r_cur, rem
            b_prev, b_cur = b_cur, poly_sub(F, b_prev, poly_mul(F, quot, b_cur))
        if not b_cur or b_cur[0] == 0:
            raise DecodeFailure("degenerate key equation")
        scale = F.inv(b_cur[0])
        lam_err = [F.mul(c, scale) for c in b_cur]
        omega = [F.mul(c, scale) for c in r_cur]
        return lam_err, omega

    def _poly_divmod(self, num, den):
        F = self.field
        num = list(num)
        dl = len(den) - 1
        if len(num) <= dl:
            return [], poly_trim(num)
        inv_lead = F.inv(den[-1])
        quot = [0] * (len(num) - dl)
        for i in range(len(num) - 1, dl - 1, -1):
            c = num[i]
            if c == 0:
                continue
            f = F.mul(c, inv_lead)
            quot[i - dl] = f
            for j in range(dl + 1):
                num[i - dl + j] = F.sub(num[i - dl + j], F.mul(f, den[j]))
        return poly_trim(quot), poly_trim(num)

    # -- exhaustive helpers ----------------------------------------------------

    def codewords(self):
        """All q^k codewords (guarded)."""
        if self.field.order ** self.k > CODEBOOK_GUARD:
            raise ScaleLimitError("codebook too large to materialize")
        for msg in product(range(self.field.order), repeat=self.k):
            yield self.encode(msg)

    def codeword_matrix(self) -> np.ndarray:
        if self._codebook_cache is None:
            self._codebook_cache = np.array(list(self.codewords()), dtype=np.int32)
        return self._codebook_cache

    def descriptor(self) -> dict:
        return {"q": self.field.order, "n": self.n, "k": self.k, "d": self.d,
                "a": ["inf" if a is None else a for a in self.points],
                "eta": list(self.multipliers), "systematic": self.systematic}

    def __repr__(self):
        return (f"GrsCode([{self.n},{self.k},{self.d}] over "
                f"GF({self.field.order}))")


def build_grs(field: _FieldOps, dimension: int, distance: int, *,
              eval_points: Sequence | None = None,
              multipliers: Sequence | None = None,
              systematic: bool = False) -> GrsCode:
    """Construct the [k+d-1, k, d] GRS code.  Defaults: a_i = alpha^(i-1)
    for the field's primitive alpha and eta_i = 1, so builds are
    reproducible.  Lengths q and q+1 automatically append the zero point
    and the point at infinity.
    """
    n = dimension + distance - 1
    if eval_points is None:
        q = field.order
        if n <= q - 1:
            eval_points = [field.antilog(i) for i in range(n)]
        elif n <= q + 1:
            eval_points = [field.antilog(i) for i in range(q - 1)] + [0]
            if n == q + 1:
                eval_points.append(INFINITY)
        else:
            raise ValueError(
                f"field too small: length {n} exceeds q + 1 = {q + 1}")
    if multipliers is None:
        multipliers = [1] * n
    return GrsCode(field, dimension, distance, eval_points, multipliers,
                   systematic=systematic)


def nearest_codeword(code: GrsCode, received: MaskedVector):
    """Brute-force oracle: scan all codewords for the minimum masked
    Hamming distance.  Returns (codeword, distance, unique)."""
    cbs = code.codeword_matrix()
    rec = np.asarray(received.entries, dtype=np.int32)
    keep = np.asarray([not m for m in received.mask], dtype=bool)
    dists = (cbs[:, keep] != rec[keep]).sum(axis=1)
    best = int(dists.min())
    hits = np.flatnonzero(dists == best)
    return tuple(int(x) for x in cbs[int(hits[0])]), best, len(hits) == 1
