"""Row-factorization matrices of pseudo-Frobenius elements and their relations.

Row ``i`` of an RF-matrix of ``f`` is a factorization of ``f + a_i`` with ``-1``
written in position ``i``. Since ``f ∉ S``, no factorization of ``f + a_i`` uses
``a_i``, so every choice of factorizations gives a valid matrix.
"""

from dataclasses import dataclass
from itertools import product

from .core import vadd
from .errors import NotPseudoFrobenius, SumInSemigroup, UncertifiedPF
from .gaps import _verify_pf, pseudo_frobenius
from .groebner import NormalForm, buchberger
from .lattice import det_bareiss
from .orders import GREVLEX
from .toric import Binomial, minimal_generators


@dataclass(frozen=True)
class RFMatrix:
    entries: tuple
    pf_element: tuple

    def validate(self, S):
        n = S.n
        assert len(self.entries) == n
        for i, row in enumerate(self.entries):
            assert len(row) == n and row[i] == -1
            assert all(x >= 0 for j, x in enumerate(row) if j != i)
            total = [0] * S.dimension
            for m, a in zip(row, S.generators):
                for k in range(S.dimension):
                    total[k] += m * a[k]
            assert tuple(total) == tuple(self.pf_element)
        return True

    def row(self, i):
        return self.entries[i]

    def render(self):
        width = max(len(str(x)) for row in self.entries for x in row)
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in row) + "]" for row in self.entries)

    def to_json(self):
        return {"pf": list(self.pf_element), "matrix": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(tuple(r) for r in obj["matrix"]), tuple(obj["pf"]))


def _require_pf(S, f):
    f = tuple(f)
    if not _verify_pf(S, f):
        raise NotPseudoFrobenius(f"{f} is not a pseudo-Frobenius element")
    return f


def row_choices(S, f):
    """For each ``i`` the rows available for position ``i``, in search order."""
    f = _require_pf(S, f)
    out = []
    for i, a in enumerate(S.generators):
        rows = []
        for m in S.factorizations(vadd(f, a)):
            assert m[i] == 0
            rows.append(tuple(-1 if j == i else x for j, x in enumerate(m)))
        out.append(rows)
    return out


def iter_rf_matrices(S, f):
    f = tuple(f)
    for rows in product(*row_choices(S, f)):
        yield RFMatrix(tuple(rows), f)


def count_rf_matrices(S, f):
    total = 1
    for rows in row_choices(S, f):
        total *= len(rows)
    return total


def rf_matrices(S, f, limit=None):
    """All RF-matrices of ``f`` (Cartesian product of row choices, first row varying slowest)."""
    out = []
    for M in iter_rf_matrices(S, f):
        out.append(M)
        if limit is not None and len(out) >= limit:
            break
    return out


def rf_matrix(S, f):
    """The first RF-matrix in search order."""
    return RFMatrix(tuple(rows[0] for rows in row_choices(S, f)), tuple(f))


def rf_determinant(M, S=None):
    det = det_bareiss(M.entries)
    if S is not None and S.group_rank > 1:
        assert det == 0
    return det


@dataclass(frozen=True)
class RFRelation:
    binomial: Binomial
    pf_element: tuple
    i: int
    j: int
    bound: tuple  # f + a_i + a_j
    tight: bool

    @property
    def degree(self):
        return self.binomial.degree

    def to_json(self):
        out = self.binomial.to_json()
        out.update({"pf": list(self.pf_element), "rows": [self.i, self.j], "bound": list(self.bound), "tight": self.tight})
        return out


def _relation(S, M, i, j, order):
    mi, mj = M.entries[i], M.entries[j]
    diff = [x - y for x, y in zip(mi, mj)]
    plus = tuple(max(x, 0) for x in diff)
    minus = tuple(max(-x, 0) for x in diff)
    b = Binomial.from_vectors(S, plus, minus, order)
    bound = vadd(vadd(M.pf_element, S.generators[i]), S.generators[j])
    assert all(x <= y for x, y in zip(b.degree, bound))
    shifted_i = [x + (k in (i, j)) for k, x in enumerate(mi)]
    shifted_j = [x + (k in (i, j)) for k, x in enumerate(mj)]
    disjoint = not any(x and y for x, y in zip(shifted_i, shifted_j))
    if disjoint:
        assert b.degree == bound
    return RFRelation(b, M.pf_element, i, j, bound, b.degree == bound)


def relations_of_matrix(S, M, order=GREVLEX):
    """``{(i, j): RFRelation}`` for ``i < j`` from one RF-matrix."""
    n = S.n
    return {(i, j): _relation(S, M, i, j, order) for i in range(n) for j in range(i + 1, n)}


def rf_relations(S, f, order=GREVLEX, limit=None):
    """RF-relations of ``f`` over all its RF-matrices, deduplicated up to sign."""
    seen = set()
    out = []
    for M in rf_matrices(S, f, limit):
        for rel in relations_of_matrix(S, M, order).values():
            key = rel.binomial.canonical()
            if key not in seen:
                seen.add(key)
                out.append(rel)
    return out


def check_zero_pattern(S, f, g, M=None, N=None):
    """``m_ij = 0`` or ``m'_ji = 0`` for all ``i ≠ j``, over the given or all RF-matrix pairs."""
    f, g = tuple(f), tuple(g)
    if S.contains(vadd(f, g)):
        raise SumInSemigroup(f"{vadd(f, g)} lies in the semigroup")
    firsts = [M] if M is not None else rf_matrices(S, f)
    seconds = [N] if N is not None else rf_matrices(S, g)
    n = S.n
    for A in firsts:
        for B in seconds:
            for i in range(n):
                for j in range(n):
                    if i != j and A.entries[i][j] and B.entries[j][i]:
                        return False
    return True


@dataclass(frozen=True)
class RFGeneration:
    value: bool
    status: str  # "certified", or "NoPF" when there are no pseudo-Frobenius elements
    unreached: tuple  # minimal generators not in the RF-relation ideal
    sufficient: tuple  # (generator, f, i, j) meeting the degree/divisibility condition, else None

    def __bool__(self):
        return self.value


def sufficient_condition(S, g, pf):
    """``(f, i, j)`` with ``deg g = f + a_i + a_j``, ``x_i | x^u`` and ``x_j | x^v`` (either sign)."""
    for f in pf:
        for u, v in ((g.plus, g.minus), (g.minus, g.plus)):
            for i in range(S.n):
                if not u[i]:
                    continue
                for j in range(S.n):
                    if i != j and v[j] and vadd(vadd(f, S.generators[i]), S.generators[j]) == g.degree:
                        return (f, i, j)
    return None


def generated_by_rf(S, order=GREVLEX, matrix_limit=None):
    """Whether ``I_S`` is generated by the RF-relations of all pseudo-Frobenius elements."""
    pf = pseudo_frobenius(S)
    if not pf.certified:
        raise UncertifiedPF("pseudo-Frobenius set is not certified")
    mins = minimal_generators(S, order, check=False)
    if not pf.elements:
        ok = not mins
        return RFGeneration(ok, "NoPF", tuple(mins), ())
    rels = []
    for f in pf.elements:
        rels.extend(r.binomial for r in rf_relations(S, f, order, matrix_limit))
    gb = buchberger([(b.plus, b.minus) for b in rels], order.key, cancel=False)
    nf = NormalForm(gb, order.key)
    missing = tuple(g for g in mins if not nf.contains(g.plus, g.minus))
    suff = tuple((g,) + sc if (sc := sufficient_condition(S, g, pf.elements)) else (g, None) for g in mins)
    return RFGeneration(not missing, "certified", missing, suff)
