"""Term orders on N^d.

A :class:`TermOrder` is a value object; :meth:`TermOrder.key` gives a sort key so
that ``sorted(vectors, key=order.key)`` lists vectors in increasing order and
``max(vectors, key=order.key)`` is the order's maximum.
"""

from dataclasses import dataclass
from enum import IntEnum

from .errors import ParseError

KINDS = ("lex", "grlex", "grevlex", "weighted")

_ALIASES = {
    "lex": "lex",
    "grlex": "grlex",
    "deglex": "grlex",
    "graded-lex": "grlex",
    "grevlex": "grevlex",
    "degrevlex": "grevlex",
    "graded-reverse-lex": "grevlex",
    "weighted": "weighted",
}


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class TermOrder:
    """Lex, graded lex, graded reverse lex, or a weight order with a tiebreak.

    ``permutation`` lists coordinates from highest to lowest priority. Weight
    vectors must be nonnegative; a zero-weight coordinate is broken by the
    tiebreak, so the order stays a term order on ``N^d``.
    """

    kind: str = "grlex"
    permutation: tuple = None
    weights: tuple = None
    tiebreak: str = "lex"

    def __post_init__(self):
        kind = _ALIASES.get(self.kind)
        if kind is None:
            raise ParseError(f"unknown term order kind {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        if self.permutation is not None:
            object.__setattr__(self, "permutation", tuple(self.permutation))
        if kind == "weighted":
            if self.weights is None:
                raise ParseError("weighted order needs a weight vector")
            w = tuple(int(x) for x in self.weights)
            if any(x < 0 for x in w):
                raise ParseError("weights must be nonnegative")
            object.__setattr__(self, "weights", w)
            tb = _ALIASES.get(self.tiebreak)
            if tb not in ("lex", "grlex", "grevlex"):
                raise ParseError(f"bad tiebreak {self.tiebreak!r}")
            object.__setattr__(self, "tiebreak", tb)

    @property
    def is_graded(self):
        """True when the total degree is compared first."""
        return self.kind in ("grlex", "grevlex") or (
            self.kind == "weighted"
            and self.weights
            and len(set(self.weights)) == 1
            and self.weights[0] > 0
        )

    def _perm(self, d):
        if self.permutation is None:
            return tuple(range(d))
        if sorted(self.permutation) != list(range(d)):
            raise ParseError(f"permutation {self.permutation} is not a permutation of range({d})")
        return self.permutation

    def _base_key(self, kind, u):
        p = self._perm(len(u))
        v = [u[i] for i in p]
        if kind == "lex":
            return tuple(v)
        if kind == "grlex":
            return (sum(v),) + tuple(v)
        # grevlex: larger total degree wins, then the smaller entry in the
        # lowest-priority differing coordinate wins
        return (sum(v),) + tuple(-x for x in reversed(v))

    def key(self, u):
        if self.kind == "weighted":
            w = sum(a * b for a, b in zip(self.weights, u))
            return (w,) + self._base_key(self.tiebreak, u)
        return self._base_key(self.kind, u)

    def compare(self, u, v):
        ku, kv = self.key(u), self.key(v)
        if ku < kv:
            return Ordering.LESS
        if ku > kv:
            return Ordering.GREATER
        return Ordering.EQUAL

    def max(self, vectors):
        return max(vectors, key=self.key)

    def to_json(self):
        out = {"kind": self.kind}
        if self.permutation is not None:
            out["permutation"] = list(self.permutation)
        if self.kind == "weighted":
            out["weights"] = list(self.weights)
            out["tiebreak"] = self.tiebreak
        return out

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            return cls(kind=obj)
        return cls(
            kind=obj.get("kind", "grlex"),
            permutation=obj.get("permutation"),
            weights=obj.get("weights"),
            tiebreak=obj.get("tiebreak", "lex"),
        )


def compare(order, u, v):
    """Three-way comparison of ``u`` and ``v`` under ``order``."""
    return order.compare(u, v)


LEX = TermOrder("lex")
GRLEX = TermOrder("grlex")
GREVLEX = TermOrder("grevlex")
