"""Sparse multivariate polynomials with exact rational coefficients.

Terms are stored as a dict from exponent tuple (length = number of
variables) to a nonzero Fraction.  Values are treated as immutable
after construction; all operations return new polynomials.
"""

from fractions import Fraction

from invforms.errors import StructuralError

_NAMES = "xyzw"


def var_name(n, i):
    """Display name of variable i (x,y,z,w for n <= 4, x1..xn otherwise)."""
    if n <= 4:
        return _NAMES[i]
    return f"x{i + 1}"


class Polynomial:
    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != n:
                    raise StructuralError(
                        f"exponent vector {exps} has length {len(exps)}, expected {n}"
                    )
                c = Fraction(c)
                if c:
                    clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(0,) * n: c})

    @classmethod
    def monomial(cls, n, exps, coeff=1):
        return cls(n, {tuple(exps): coeff})

    @classmethod
    def variable(cls, n, i):
        exps = [0] * n
        exps[i] = 1
        return cls(n, {tuple(exps): 1})

    @property
    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.n != other.n:
            raise StructuralError(
                f"mixed variable counts {self.n} and {other.n}"
            )

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Polynomial.constant(self.n, other)
        self._check(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, 0) + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return Polynomial(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Polynomial.constant(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            c = Fraction(other)
            if not c:
                return Polynomial(self.n)
            return Polynomial(self.n, {e: c * v for e, v in self.terms.items()})
        self._check(other)
        terms = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(a + b for a, b in zip(ea, eb))
                s = terms.get(key, 0) + ca * cb
                if s:
                    terms[key] = s
                else:
                    terms.pop(key, None)
        return Polynomial(self.n, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if not self.terms:
                return Fraction(other) == 0
            const = self.terms.get((0,) * self.n)
            return len(self.terms) == 1 and const == Fraction(other)
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def partial(self, i):
        """Partial derivative with respect to variable i."""
        terms = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e:
                key = exps[:i] + (e - 1,) + exps[i + 1 :]
                terms[key] = terms.get(key, 0) + c * e
        return Polynomial(self.n, terms)

    def degrees(self):
        """Set of total degrees of the terms."""
        return {sum(e) for e in self.terms}

    @property
    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def total_degree(self):
        """Max total degree, or -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def leading_term(self):
        """(exps, coeff) of the largest term in (degree, exps) order."""
        key = max(self.terms, key=lambda e: (sum(e), e))
        return key, self.terms[key]

    def exact_div(self, other):
        """Exact quotient self/other; raises if the division is not exact."""
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = self
        out = {}
        de, dc = other.leading_term()
        while not rem.is_zero:
            re, rc = rem.leading_term()
            qe = tuple(a - b for a, b in zip(re, de))
            if any(e < 0 for e in qe):
                raise ArithmeticError("inexact polynomial division")
            qc = rc / dc
            out[qe] = out.get(qe, 0) + qc
            rem = rem - Polynomial.monomial(self.n, qe, qc) * other
        return Polynomial(self.n, out)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps in sorted(self.terms):
            c = self.terms[exps]
            mono = "*".join(
                var_name(self.n, i) + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps)
                if e
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            bits.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(bits)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"Polynomial({self})"


def polynomial_matrix_rank(rows):
    """Rank over the rational function field of a matrix of polynomials.

    Fraction-free Bareiss elimination; the divisions by the previous
    pivot are exact, so all arithmetic stays polynomial.
    """
    mat = [list(r) for r in rows]
    if not mat or not mat[0]:
        return 0
    m, ncols = len(mat), len(mat[0])
    rank = 0
    prev = None
    for col in range(ncols):
        piv = None
        for i in range(rank, m):
            if not mat[i][col].is_zero:
                piv = i
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        p = mat[rank][col]
        for i in range(rank + 1, m):
            for j in range(col + 1, ncols):
                num = p * mat[i][j] - mat[i][col] * mat[rank][j]
                mat[i][j] = num if prev is None else num.exact_div(prev)
            mat[i][col] = Polynomial.zero(p.n)
        prev = p
        rank += 1
        if rank == m:
            break
    return rank
