"""Polynomial differential forms on affine n-space and their calculus.

A k-form is stored as a dict from a strictly increasing index tuple I
(the exterior basis element dx_I) to a nonzero Polynomial coefficient.
The total degree of a homogeneous monomial term x^a dx_I is |a| + |I|:
each dx counts one.
"""

from fractions import Fraction

from invforms.errors import StructuralError
from invforms.poly import Polynomial, var_name


def merge_sign(I, J):
    """Sign of sorting the concatenation of I and J, or (0, ()) on overlap."""
    merged = []
    sign = 1
    i = j = 0
    while i < len(I) and j < len(J):
        if I[i] == J[j]:
            return 0, ()
        if I[i] < J[j]:
            merged.append(I[i])
            i += 1
        else:
            # J[j] moves past the remaining elements of I
            if (len(I) - i) % 2:
                sign = -sign
            merged.append(J[j])
            j += 1
    merged.extend(I[i:])
    merged.extend(J[j:])
    return sign, tuple(merged)


class PolyForm:
    __slots__ = ("n", "degree", "components")

    def __init__(self, n, degree, components=None):
        if not 0 <= degree <= n:
            if degree > n:
                components = None  # Lambda^k vanishes above the dimension
            else:
                raise StructuralError(f"bad form degree {degree}")
        self.n = n
        self.degree = degree
        clean = {}
        if components:
            for I, p in components.items():
                I = tuple(I)
                if len(I) != degree or any(
                    I[t] >= I[t + 1] for t in range(len(I) - 1)
                ):
                    raise StructuralError(f"bad index subset {I} for degree {degree}")
                if I and (I[0] < 0 or I[-1] >= n):
                    raise StructuralError(f"index subset {I} out of range")
                if not isinstance(p, Polynomial):
                    p = Polynomial.constant(n, p)
                if not p.is_zero:
                    clean[I] = p
        self.components = clean

    @classmethod
    def zero(cls, n, degree=0):
        return cls(n, degree)

    @classmethod
    def from_poly(cls, p):
        return cls(p.n, 0, {(): p})

    @classmethod
    def dx(cls, n, i):
        return cls(n, 1, {(i,): Polynomial.constant(n, 1)})

    @classmethod
    def monomial_form(cls, n, exps, I, coeff=1):
        return cls(n, len(I), {tuple(I): Polynomial.monomial(n, exps, coeff)})

    @property
    def is_zero(self):
        return not self.components

    def _check(self, other):
        if self.n != other.n:
            raise StructuralError(f"mixed variable counts {self.n} and {other.n}")

    def __add__(self, other):
        self._check(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.degree != other.degree:
            raise StructuralError(
                f"cannot add forms of degrees {self.degree} and {other.degree}"
            )
        comps = dict(self.components)
        for I, p in other.components.items():
            s = comps.get(I, Polynomial.zero(self.n)) + p
            if s.is_zero:
                comps.pop(I, None)
            else:
                comps[I] = s
        return PolyForm(self.n, self.degree, comps)

    def __neg__(self):
        return PolyForm(
            self.n, self.degree, {I: -p for I, p in self.components.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        """Multiply by a Polynomial or rational scalar."""
        if isinstance(scalar, PolyForm):
            raise TypeError("use wedge() for exterior products")
        if not isinstance(scalar, Polynomial):
            scalar = Polynomial.constant(self.n, Fraction(scalar))
        comps = {}
        for I, p in self.components.items():
            q = p * scalar
            if not q.is_zero:
                comps[I] = q
        return PolyForm(self.n, self.degree, comps)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PolyForm):
            return NotImplemented
        if self.is_zero and other.is_zero:
            return self.n == other.n
        return (
            self.n == other.n
            and self.degree == other.degree
            and self.components == other.components
        )

    __hash__ = None

    def wedge(self, other):
        self._check(other)
        k = self.degree + other.degree
        if k > self.n:
            return PolyForm(self.n, min(k, self.n))
        comps = {}
        for I, p in self.components.items():
            for J, q in other.components.items():
                sign, K = merge_sign(I, J)
                if sign == 0:
                    continue
                r = p * q * sign
                s = comps.get(K)
                r = r if s is None else s + r
                if r.is_zero:
                    comps.pop(K, None)
                else:
                    comps[K] = r
        return PolyForm(self.n, k, comps)

    def d(self):
        """Exterior derivative."""
        comps = {}
        for I, p in self.components.items():
            for i in range(self.n):
                dp = p.partial(i)
                if dp.is_zero:
                    continue
                sign, K = merge_sign((i,), I)
                if sign == 0:
                    continue
                r = dp * sign
                s = comps.get(K)
                r = r if s is None else s + r
                if r.is_zero:
                    comps.pop(K, None)
                else:
                    comps[K] = r
        return PolyForm(self.n, self.degree + 1, comps)

    def terms(self):
        """Yield (I, exps, coeff) over all monomial terms, in canonical order."""
        for I in sorted(self.components):
            p = self.components[I]
            for exps in sorted(p.terms):
                yield I, exps, p.terms[exps]

    def total_degrees(self):
        """Set of total degrees |a| + |I| over the monomial terms."""
        return {
            sum(exps) + len(I) for I, exps, _ in self.terms()
        }

    @property
    def is_homogeneous(self):
        return len(self.total_degrees()) <= 1

    def homogeneous_component(self, d):
        """The part of total degree d."""
        comps = {}
        for I, p in self.components.items():
            kept = {e: c for e, c in p.terms.items() if sum(e) + len(I) == d}
            if kept:
                comps[I] = Polynomial(self.n, kept)
        return PolyForm(self.n, self.degree, comps)

    def __str__(self):
        if self.is_zero:
            return "0"
        bits = []
        for I in sorted(self.components):
            p = self.components[I]
            dxs = "∧".join("d" + var_name(self.n, i) for i in I)
            if not I:
                bits.append(str(p))
            elif len(p.terms) == 1:
                text = str(p)
                if text == "1":
                    bits.append(dxs)
                elif text == "-1":
                    bits.append(f"-{dxs}")
                else:
                    bits.append(f"{text}*{dxs}")
            else:
                bits.append(f"({p})*{dxs}")
        out = bits[0]
        for b in bits[1:]:
            out += " - " + b[1:] if b.startswith("-") else " + " + b
        return out

    def __repr__(self):
        return f"PolyForm({self})"


def wedge(a, b):
    """Exterior product with the standard merge-sort sign."""
    return a.wedge(b)


def exterior_derivative(a):
    return a.d()
