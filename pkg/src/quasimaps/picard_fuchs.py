"""
Picard-Fuchs operators in M_a = H_a + z q_a d/dq_a.

For a preset with weights l_a,i and twist (t1, t2) the two operators are

    P_a = prod_i (M_a - l_a,i) - q_a * prod_k F_a,k

where F_a,k = t1 M1 + t2 M2 + k z for k = 1..t_a (a-twist) and
F_a,k = -t1 M1 - t2 M2 + k z for k = 0..|t_a|-1 (local twist; the sign
(-1)^|t_a| is absorbed since |t_a| is even for the local preset).

An operator is kept in its factored form: a list of summands
(coefficient, q-exponent, [linear factors]).  Factors are applied
right to left, so no commutation of M1 and M2 is assumed.  ``words``
expands everything into ordered monomials for display and for the
literal word-by-word application.
"""

from __future__ import annotations

from .field import embed_rational

__all__ = ["PFOperator", "pf_operators", "apply", "conjugated_apply"]


def _factor(m1=0, m2=0, z=0, c=0):
    return {"M1": m1, "M2": m2, "z": z, "1": c}


class PFOperator:
    def __init__(self, name, order, summands):
        self.name = name
        self.order = order
        self.summands = summands  # (coeff, (e1, e2), [factor dicts])

    def __repr__(self):
        return f"PFOperator({self.name})"

    # expansion -------------------------------------------------------------

    def words(self):
        """Term expansion: {((e1, e2), z power, word): coeff}, words left to right."""
        out = {}
        for coeff, qe, factors in self.summands:
            terms = {((), 0): embed_rational(coeff, self.order) if not hasattr(coeff, "field") else coeff}
            for f in factors:
                new = {}
                for (w, zp), c in terms.items():
                    for key in ("M1", "M2", "z", "1"):
                        fc = f[key]
                        if not fc:
                            continue
                        if key in ("M1", "M2"):
                            k = (w + (int(key[1]),), zp)
                        elif key == "z":
                            k = (w, zp + 1)
                        else:
                            k = (w, zp)
                        new[k] = new.get(k, 0) + c * fc
                terms = new
            for (w, zp), c in terms.items():
                key = (qe, zp, w)
                out[key] = out.get(key, 0) + c
        return {k: v for k, v in sorted(out.items(), key=lambda kv: (kv[0][0], kv[0][1], len(kv[0][2]), kv[0][2])) if v}

    def describe(self):
        parts = []
        for (qe, zp, w), c in self.words().items():
            mono = "".join(f"M{a}" for a in w) or "1"
            q = "" if qe == (0, 0) else f"q1^{qe[0]}q2^{qe[1]}*"
            zz = "" if zp == 0 else f"z^{zp}*"
            parts.append(f"({c}){q}{zz}{mono}")
        return " + ".join(parts)

    # application -------------------------------------------------------------

    def apply(self, F):
        """Apply to a ZSeries, factors right to left."""
        return _apply_factored(self, F, _zs_ops)

    def apply_words(self, F):
        """Apply the expanded words literally, rightmost letter first."""
        cache = {(): F}

        def run(word):
            if word in cache:
                return cache[word]
            inner = run(word[1:])
            out = inner.M(word[0])
            cache[word] = out
            return out

        total = None
        for (qe, zp, w), c in self.words().items():
            t = run(w)
            if zp:
                t = t.times_z(zp)
            t = t * _qmono(qe, F.trunc, self.order) * c if qe != (0, 0) else t * c
            total = t if total is None else total + t
        return total

    def conjugated_apply(self, Lam, R, kmax):
        """Apply with M_a replaced by Lam_a + z D_a to sum_k R[k] z^k.

        Returns the coefficients of z^0..z^kmax as BiSeries.
        """
        A = _Ansatz(list(R[: kmax + 1]), kmax, Lam)
        return _apply_factored(self, A, _ansatz_ops).coeffs

    def leading(self, Lam):
        """The z^0 part of the conjugated operator acting on 1."""
        total = None
        for coeff, qe, factors in self.summands:
            t = None
            for f in factors:
                v = Lam[0] * f["M1"] + Lam[1] * f["M2"] + f["1"] if f["M1"] or f["M2"] else None
                if v is None:
                    v = Lam[0].one_like() * f["1"]
                t = v if t is None else t * v
            if t is None:
                t = Lam[0].one_like()
            t = t * coeff
            if qe != (0, 0):
                t = t * _qmono(qe, Lam[0].trunc, self.order)
            total = t if total is None else total + t
        return total


def _qmono(qe, trunc, order):
    from .series import BiSeries
    return BiSeries.monomial(qe[0], qe[1], trunc, order)


class _ZSOps:
    @staticmethod
    def M(F, a):
        return F.M(a)

    @staticmethod
    def z(F):
        return F.times_z(1)


_zs_ops = _ZSOps()


class _Ansatz:
    """sum_k coeffs[k] z^k with k <= kmax, under M_a -> Lam_a + z D_a."""

    __slots__ = ("coeffs", "kmax", "Lam")

    def __init__(self, coeffs, kmax, Lam):
        zero = Lam[0].zero_like()
        self.coeffs = coeffs + [zero] * (kmax + 1 - len(coeffs))
        self.kmax = kmax
        self.Lam = Lam

    def new(self, coeffs):
        return _Ansatz(coeffs, self.kmax, self.Lam)

    def M(self, a):
        lam = self.Lam[a - 1]
        c = self.coeffs
        out = []
        for k in range(self.kmax + 1):
            v = c[k] * lam if not c[k].is_zero() else c[k]
            if k:
                v = v + c[k - 1].euler(a)
            out.append(v)
        return self.new(out)

    def times_z(self, k=1):
        zero = self.Lam[0].zero_like()
        return self.new([zero] * k + self.coeffs[: self.kmax + 1 - k])

    def __mul__(self, s):
        return self.new([x * s for x in self.coeffs])

    def __add__(self, other):
        return self.new([x + y for x, y in zip(self.coeffs, other.coeffs)])

    @property
    def trunc(self):
        return self.Lam[0].trunc


class _AnsatzOps(_ZSOps):
    pass


_ansatz_ops = _AnsatzOps()


def _apply_linear(f, X):
    """(f_M1 M1 + f_M2 M2 + f_z z + f_1) X."""
    out = None
    for key in ("M1", "M2"):
        c = f[key]
        if c:
            t = X.M(int(key[1])) * c
            out = t if out is None else out + t
    if f["z"]:
        t = X.times_z(1) * f["z"]
        out = t if out is None else out + t
    if f["1"]:
        t = X * f["1"]
        out = t if out is None else out + t
    return out


def _apply_factored(op, X, ops):
    total = None
    for coeff, qe, factors in op.summands:
        t = X
        for f in reversed(factors):
            t = _apply_linear(f, t)
        t = t * coeff
        if qe != (0, 0):
            t = t * _qmono(qe, X.trunc, op.order)
        total = t if total is None else total + t
    return total


def pf_operators(g):
    """The two Picard-Fuchs operators of a geometry preset."""
    ops = []
    t1, t2 = g.twist
    for axis in (1, 2):
        ws = g.weights1 if axis == 1 else g.weights2
        lead = [(_factor(m1=1, c=-w) if axis == 1 else _factor(m2=1, c=-w)) for w in ws]
        ta = g.twist[axis - 1]
        if g.local:
            tail = [_factor(m1=-t1, m2=-t2, z=k) for k in range(abs(ta))]
            sign = (-1) ** abs(ta)
        else:
            tail = [_factor(m1=t1, m2=t2, z=k) for k in range(1, ta + 1)]
            sign = 1
        qe = (1, 0) if axis == 1 else (0, 1)
        summands = [(1, (0, 0), lead), (-sign, qe, tail)]
        ops.append(PFOperator(f"{g.name}:P{axis}", g.order, summands))
    return ops


def apply(op, F):
    return op.apply(F)


def conjugated_apply(op, Lam, R, kmax):
    return op.conjugated_apply(Lam, R, kmax)
