"""Sparse multivariate Laurent-free polynomials with integer coefficients."""

from collections import defaultdict


class Polynomial:
    """``{exponent tuple: int}`` with zero coefficients dropped."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms=None, nvars=None):
        clean = {}
        for e, c in (terms or {}).items():
            if c:
                clean[tuple(int(x) for x in e)] = int(c)
        if nvars is None:
            nvars = len(next(iter(clean))) if clean else 0
        self.terms = clean
        self.nvars = nvars

    @classmethod
    def one(cls, nvars):
        return cls({(0,) * nvars: 1}, nvars)

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls({tuple(exponent): coeff}, len(exponent))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        if isinstance(other, dict):
            return self.terms == Polynomial(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = defaultdict(int, self.terms)
        for e, c in other.terms.items():
            out[e] += c
        return Polynomial(out, self.nvars)

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return Polynomial(out, self.nvars)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, exponent):
        return self.terms.get(tuple(exponent), 0)

    def support(self):
        return sorted(self.terms)

    def leading_exponent(self, order):
        return order.max(self.terms)

    def divide_one_minus(self, var):
        """Exact quotient by ``1 - t_var``; raises ``ArithmeticError`` on a remainder.

        ``P / (1 - t)`` along one variable is the running sum of coefficients; it is
        a polynomial iff every running sum closes at zero.
        """
        fibers = defaultdict(dict)
        for e, c in self.terms.items():
            key = e[:var] + e[var + 1:]
            fibers[key][e[var]] = c
        out = {}
        for key, col in fibers.items():
            acc = 0
            for k in range(min(col), max(col) + 1):
                acc += col.get(k, 0)
                if acc and k < max(col):
                    out[key[:var] + (k,) + key[var:]] = acc
            if acc:
                raise ArithmeticError("division by (1 - t) leaves a remainder")
        return Polynomial(out, self.nvars)

    def to_json(self):
        return [{"exponent": list(e), "coefficient": c} for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, items, nvars=None):
        return cls({tuple(it["exponent"]): it["coefficient"] for it in items}, nvars)

    def render(self, var="t", order=None):
        """Text form such as ``1 - t1^6 - t1^3*t2^3``, highest terms last unless ``order`` is given."""
        if not self.terms:
            return "0"
        exps = sorted(self.terms, key=order.key if order else None)
        parts = []
        for e in exps:
            c = self.terms[e]
            mono = "*".join(
                f"{var}{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            mag = abs(c)
            body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Polynomial({self.render()})"


def one_minus_monomial(exponent):
    d = len(exponent)
    return Polynomial({(0,) * d: 1}) - Polynomial.monomial(exponent)
