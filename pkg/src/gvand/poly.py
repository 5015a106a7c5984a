"""Sparse multivariate polynomials over the integers or a prime field.

A polynomial stores its terms as a dict from exponent vector (a tuple
of non-negative ints, one slot per ring variable) to a nonzero
coefficient.  The canonical term order is graded lexicographic: total
degree first, ties broken by the exponent vector with earlier variables
weighing more.  Variable order is positional in the ring's variable
tuple, never alphabetical.
"""

from fractions import Fraction

from gvand import kernels
from gvand.errors import (
    MissingAssignmentError,
    NegativeExponentError,
    NoRootError,
    RingMismatchError,
    ZeroPolynomialError,
)
from gvand.rings import ZZ, CoefficientRing


def graded_lex_key(exp):
    return (sum(exp), exp)


class PolyRing:
    """A coefficient ring together with an ordered tuple of variable names."""

    __slots__ = ("coeff_ring", "variables", "_index")

    def __init__(self, coeff_ring: CoefficientRing, variables):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be distinct")
        if not all(isinstance(v, str) and v for v in variables):
            raise ValueError("variable names must be nonempty strings")
        object.__setattr__(self, "coeff_ring", coeff_ring)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(variables)})

    def __setattr__(self, name, value):
        raise AttributeError("PolyRing is immutable")

    @property
    def characteristic(self) -> int:
        return self.coeff_ring.characteristic

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def var_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise RingMismatchError(f"unknown variable {name!r}") from None

    def zero(self) -> "SparsePoly":
        return SparsePoly(self, {})

    def one(self) -> "SparsePoly":
        return self.constant(1)

    def constant(self, c: int) -> "SparsePoly":
        c = self.coeff_ring.normalize(c)
        if c == 0:
            return self.zero()
        return SparsePoly(self, {(0,) * self.nvars: c}, _canonical=True)

    def monomial(self, exponents, coeff: int = 1) -> "SparsePoly":
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != self.nvars:
            raise RingMismatchError("exponent vector length does not match ring")
        if any(e < 0 for e in exponents):
            raise NegativeExponentError(f"negative exponent in {exponents}")
        coeff = self.coeff_ring.normalize(coeff)
        if coeff == 0:
            return self.zero()
        return SparsePoly(self, {exponents: coeff}, _canonical=True)

    def variable(self, name: str) -> "SparsePoly":
        exps = [0] * self.nvars
        exps[self.var_index(name)] = 1
        return self.monomial(exps)

    def from_terms(self, pairs) -> "SparsePoly":
        """Build a polynomial from (exponent vector, coeff) pairs, merging."""
        terms = {}
        for exp, c in pairs:
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.nvars:
                raise RingMismatchError("exponent vector length does not match ring")
            if any(e < 0 for e in exp):
                raise NegativeExponentError(f"negative exponent in {exp}")
            acc = self.coeff_ring.normalize(terms.get(exp, 0) + c)
            if acc:
                terms[exp] = acc
            elif exp in terms:
                del terms[exp]
        return SparsePoly(self, terms, _canonical=True)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.coeff_ring == other.coeff_ring
            and self.variables == other.variables
        )

    def __hash__(self):
        return hash((self.coeff_ring, self.variables))

    def __repr__(self):
        return f"PolyRing({self.coeff_ring}, {list(self.variables)})"


def grid_var(i: int, j: int) -> str:
    """Name of the grid variable in row i, coordinate j (both 1-based)."""
    return f"X_{i}_{j}"


def grid_ring(coeff_ring: CoefficientRing, n_rows: int, n_cols: int) -> PolyRing:
    """Ring in the row-major grid variables X_1_1 .. X_nrows_ncols."""
    names = [grid_var(i, j) for i in range(1, n_rows + 1) for j in range(1, n_cols + 1)]
    return PolyRing(coeff_ring, names)


class SparsePoly:
    __slots__ = ("ring", "_terms")

    def __init__(self, ring: PolyRing, terms, _canonical: bool = False):
        if not _canonical:
            clean = {}
            for exp, c in terms.items():
                c = ring.coeff_ring.normalize(c)
                if c:
                    clean[tuple(exp)] = c
            terms = clean
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("SparsePoly is immutable")

    #### basic structure ####

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def n_terms(self) -> int:
        return len(self._terms)

    def terms(self):
        """Terms as (exponent vector, coeff), leading term first."""
        return sorted(self._terms.items(), key=lambda t: graded_lex_key(t[0]), reverse=True)

    def term_map(self) -> dict:
        """Copy of the raw exponent -> coefficient dict."""
        return dict(self._terms)

    def leading_term(self):
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        exp = max(self._terms, key=graded_lex_key)
        return exp, self._terms[exp]

    def total_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return max(sum(e) for e in self._terms)

    def coefficient(self, exponents) -> int:
        return self._terms.get(tuple(exponents), 0)

    def variables_used(self):
        """Names of variables with a positive exponent somewhere."""
        used = set()
        for exp in self._terms:
            for k, e in enumerate(exp):
                if e:
                    used.add(self.ring.variables[k])
        return used

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(f"rings differ: {self.ring!r} vs {other.ring!r}")

    #### arithmetic ####

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        self._check_ring(other)
        char = self.ring.characteristic
        return SparsePoly(self.ring, kernels.add_terms(self._terms, other._terms, char), _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        char = self.ring.characteristic
        if char:
            return SparsePoly(self.ring, {e: (char - c) % char for e, c in self._terms.items()}, _canonical=True)
        return SparsePoly(self.ring, {e: -c for e, c in self._terms.items()}, _canonical=True)

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        self._check_ring(other)
        char = self.ring.characteristic
        return SparsePoly(self.ring, kernels.mul_terms(self._terms, other._terms, char), _canonical=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    __hash__ = None

    #### calculus and divisibility ####

    def partial_derivative(self, var: str) -> "SparsePoly":
        v = self.ring.var_index(var)
        out = {}
        norm = self.ring.coeff_ring.normalize
        for exp, c in self._terms.items():
            e = exp[v]
            if e == 0:
                continue
            nc = norm(c * e)
            if nc == 0:
                continue
            nexp = exp[:v] + (e - 1,) + exp[v + 1 :]
            out[nexp] = nc
        return SparsePoly(self.ring, out, _canonical=True)

    def exact_divide(self, den: "SparsePoly"):
        """Quotient self / den when den divides exactly, else None."""
        self._check_ring(den)
        if den.is_zero():
            raise ZeroDivisionError("exact_divide by the zero polynomial")
        if self.is_zero():
            return self.ring.zero()
        ring = self.ring
        char = ring.characteristic
        den_exp, den_coeff = den.leading_term()
        rem = dict(self._terms)
        quot = {}
        while rem:
            r_exp = max(rem, key=graded_lex_key)
            r_coeff = rem[r_exp]
            diff = tuple(a - b for a, b in zip(r_exp, den_exp))
            if any(d < 0 for d in diff):
                return None
            q = ring.coeff_ring.divide_exact(r_coeff, den_coeff)
            if q is None:
                return None
            quot[diff] = q
            kernels.addmul_terms(rem, ring.coeff_ring.normalize(-q), diff, den._terms, char)
        return SparsePoly(ring, quot, _canonical=True)

    def monomial_content(self):
        """Componentwise-minimal exponent vector over all terms."""
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no monomial content")
        exps = iter(self._terms)
        mins = list(next(exps))
        for exp in exps:
            for k, e in enumerate(exp):
                if e < mins[k]:
                    mins[k] = e
        return tuple(mins)

    def frobenius_root(self, e: int = 1) -> "SparsePoly":
        """The p^e-th root under the Frobenius, over a prime field.

        Exists iff every exponent is divisible by q = p^e; coefficients
        carry over unchanged since c^q = c on GF(p).
        """
        p = self.ring.characteristic
        if p == 0:
            raise RingMismatchError("frobenius_root needs a prime-field ring")
        if e < 1:
            raise ValueError("root order must be >= 1")
        q = p**e
        out = {}
        for exp, c in self._terms.items():
            if any(x % q for x in exp):
                raise NoRootError(f"exponent vector {exp} is not divisible by {q}")
            out[tuple(x // q for x in exp)] = c
        return SparsePoly(self.ring, out, _canonical=True)

    #### substitution and evaluation ####

    def substitute_monomial_map(self, matrix, target_ring: PolyRing = None) -> "SparsePoly":
        """Apply an integer matrix to every exponent vector.

        ``matrix`` has one row per target variable and one column per
        source variable; a term X^e maps to Z^(matrix . e) with the
        coefficient kept.  Images with a negative exponent raise
        NegativeExponentError.  When no target ring is given, a square
        matrix reuses this ring and otherwise fresh variables Z_1..Z_m
        are introduced.
        """
        matrix = [tuple(int(x) for x in row) for row in matrix]
        k = self.ring.nvars
        if any(len(row) != k for row in matrix):
            raise ValueError("matrix column count must match the variable count")
        m = len(matrix)
        if target_ring is None:
            if m == k:
                target_ring = self.ring
            else:
                target_ring = PolyRing(self.ring.coeff_ring, [f"Z_{i}" for i in range(1, m + 1)])
        else:
            if target_ring.nvars != m:
                raise RingMismatchError("target ring size does not match matrix rows")
            if target_ring.coeff_ring != self.ring.coeff_ring:
                raise RingMismatchError("target ring has a different coefficient ring")
        char = target_ring.characteristic
        out = {}
        for exp, c in self._terms.items():
            img = tuple(sum(row[j] * exp[j] for j in range(k)) for row in matrix)
            if any(x < 0 for x in img):
                raise NegativeExponentError(f"term {exp} maps to negative exponents {img}")
            acc = out.get(img, 0) + c
            if char:
                acc %= char
            if acc:
                out[img] = acc
            elif img in out:
                del out[img]
        return SparsePoly(target_ring, out, _canonical=True)

    def evaluate(self, assignment):
        """Value at a point; keys are variable names.

        Over the integers values may be ints or Fractions.  Over GF(p)
        values are reduced mod p (Fractions via modular inverse of the
        denominator).
        """
        needed = self.variables_used()
        missing = needed - set(assignment)
        if missing:
            raise MissingAssignmentError(f"no value for {sorted(missing)}")
        char = self.ring.characteristic
        point = {}
        for name in needed:
            val = assignment[name]
            if char:
                if isinstance(val, Fraction):
                    val = val.numerator * self.ring.coeff_ring.invert(val.denominator)
                point[name] = val % char
            else:
                point[name] = val
        total = 0
        names = self.ring.variables
        for exp, c in self._terms.items():
            term = c
            for k, e in enumerate(exp):
                if e:
                    term *= point[names[k]] ** e
            total += term
        if char:
            total %= char
        return total

    #### serialization and display ####

    def to_terms_json(self) -> list:
        """Terms as JSON data, leading term first.

        Each entry is {"coeff": "<signed int>", "monomial": {var: exp}}
        with zero exponents omitted and monomial keys in variable order.
        """
        names = self.ring.variables
        out = []
        for exp, c in self.terms():
            mono = {names[k]: e for k, e in enumerate(exp) if e}
            out.append({"coeff": str(c), "monomial": mono})
        return out

    @classmethod
    def from_terms_json(cls, ring: PolyRing, data) -> "SparsePoly":
        pairs = []
        for entry in data:
            coeff = int(entry["coeff"])
            exps = [0] * ring.nvars
            for name, e in entry["monomial"].items():
                exps[ring.var_index(name)] = int(e)
            pairs.append((tuple(exps), coeff))
        return ring.from_terms(pairs)

    def __repr__(self):
        if not self._terms:
            return "0"
        names = self.ring.variables
        parts = []
        for exp, c in self.terms():
            factors = []
            for k, e in enumerate(exp):
                if e == 1:
                    factors.append(names[k])
                elif e:
                    factors.append(f"{names[k]}^{e}")
            body = "*".join(factors)
            if not body:
                chunk = str(c)
            elif c == 1:
                chunk = body
            elif c == -1:
                chunk = f"-{body}"
            else:
                chunk = f"{c}*{body}"
            parts.append(chunk)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")
