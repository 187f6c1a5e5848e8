"""Sparse Laurent polynomials with integer coefficients.

A polynomial is a mapping from exponent tuples to nonzero integers.  The
ring has ``nvars`` variables; cluster code uses ``2n`` of them, the initial
cluster ``x_0..x_{n-1}`` followed by the coefficients ``y_0..y_{n-1}``.
"""


class LaurentViolation(ArithmeticError):
    pass


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub_exp(a, b):
    return tuple(x - y for x, y in zip(a, b))


class LaurentPoly:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for exp, coeff in (terms or {}).items():
            if coeff:
                clean[tuple(exp)] = coeff
        self.terms = clean
        self._hash = None

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def var(cls, nvars, i):
        exp = [0] * nvars
        exp[i] = 1
        return cls.monomial(exp)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(self.nvars, other)
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"LaurentPoly({self.to_string()})"

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.nvars, out)

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if not self.is_monomial() or abs(next(iter(self.terms.values()))) != 1:
                raise ValueError("negative powers are only defined for unit monomials")
            (exp, c), = self.terms.items()
            return LaurentPoly(self.nvars, {tuple(k * x for x in exp): c ** (-k)})
        out = LaurentPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_monomial(self):
        return len(self.terms) == 1

    def min_exponents(self):
        """Componentwise minimum exponent over all terms."""
        exps = list(self.terms)
        return tuple(min(e[i] for e in exps) for i in range(self.nvars))

    def max_exponents(self):
        exps = list(self.terms)
        return tuple(max(e[i] for e in exps) for i in range(self.nvars))

    def shift(self, exp):
        """Multiply by the monomial with exponent ``exp``."""
        return LaurentPoly(self.nvars, {_add_exp(e, exp): c for e, c in self.terms.items()})

    def exact_div(self, other):
        """Quotient in the Laurent ring; raises LaurentViolation if it does not exist."""
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return LaurentPoly(self.nvars)
        num_shift = self.min_exponents()
        den_shift = other.min_exponents()
        num = {_sub_exp(e, num_shift): c for e, c in self.terms.items()}
        den = {_sub_exp(e, den_shift): c for e, c in other.terms.items()}
        lead_e = max(den)
        lead_c = den[lead_e]
        quot = {}
        rem = dict(num)
        while rem:
            e = max(rem)
            c = rem[e]
            qe = _sub_exp(e, lead_e)
            if any(x < 0 for x in qe) or c % lead_c:
                raise LaurentViolation("division is not exact")
            qc = c // lead_c
            quot[qe] = qc
            for de, dc in den.items():
                t = _add_exp(qe, de)
                v = rem.get(t, 0) - qc * dc
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        q = LaurentPoly(self.nvars, quot)
        return q.shift(_sub_exp(num_shift, den_shift))

    def substitute_ones(self, indices):
        """Set the listed variables to 1."""
        idx = set(indices)
        out = {}
        for e, c in self.terms.items():
            k = tuple(0 if i in idx else x for i, x in enumerate(e))
            out[k] = out.get(k, 0) + c
        return LaurentPoly(self.nvars, out)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def key(self):
        return tuple(self.sorted_terms())

    def to_string(self, names=None):
        if not self.terms:
            return "0"
        if names is None:
            half = self.nvars // 2
            names = [f"x{i + 1}" for i in range(half)] + [f"y{i + 1}" for i in range(self.nvars - half)]
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(n if x == 1 else f"{n}^{x}" for n, x in zip(names, e) if x)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")
