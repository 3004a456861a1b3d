"""Gluings ``S = S1 +_d S2``: detection, pseudo-Frobenius elements, RF-matrices.

A split of the generators into ``A1 ⊔ A2`` is a gluing along ``d`` when ``d``
lies in both submonoids and ``G(S1) ∩ G(S2) = dZ``. Generator indices are
0-based throughout.
"""

from dataclasses import dataclass
from itertools import combinations

from .core import AffineSemigroup, vadd
from .errors import (
    ComponentNotRFGenerated,
    InvalidRowChoice,
    TooManyGenerators,
    UncertifiedComponentPF,
)
from .gaps import CERTIFIED, PFSet, pseudo_frobenius
from .lattice import hnf, lattice_intersection
from .rf import RFMatrix, generated_by_rf, rf_matrices
from .toric import Binomial

MAX_GENERATORS = 15


@dataclass(frozen=True)
class GluingDecomposition:
    semigroup: AffineSemigroup
    partition: tuple  # (A1, A2), each a sorted tuple of indices
    glue_element: tuple
    s1: AffineSemigroup
    s2: AffineSemigroup

    def to_json(self):
        return {
            "generators": [list(a) for a in self.semigroup.generators],
            "partition": [list(self.partition[0]), list(self.partition[1])],
            "d": list(self.glue_element),
        }

    @classmethod
    def from_json(cls, obj):
        S = AffineSemigroup(obj["generators"])
        res = verify_gluing(S, obj["partition"], obj["d"])
        if not res.value:
            raise ValueError(f"not a gluing: {res.reason}")
        return res.decomposition


@dataclass(frozen=True)
class GluingCheck:
    value: bool
    reason: str  # "ok" or a failure code
    intersection: tuple = ()
    decomposition: GluingDecomposition = None

    def __bool__(self):
        return self.value


def _canonical(v):
    """Sign convention for a lattice generator: first nonzero coordinate positive."""
    first = next((x for x in v if x), 0)
    return tuple(-x for x in v) if first < 0 else tuple(v)


def verify_gluing(S, partition, d):
    """Check ``d ∈ S1 ∩ S2`` and ``G(S1) ∩ G(S2) = dZ`` for the given split."""
    A1, A2 = (tuple(sorted(int(i) for i in part)) for part in partition)
    if not A1 or not A2:
        return GluingCheck(False, "NonTrivialPartitionRequired")
    if sorted(A1 + A2) != list(range(S.n)):
        return GluingCheck(False, "NotAPartition")
    d = tuple(int(x) for x in d)
    s1, s2 = S.submonoid(A1), S.submonoid(A2)
    inter = tuple(lattice_intersection(list(s1.group_basis), list(s2.group_basis)))
    if not s1.contains(d):
        return GluingCheck(False, "GlueElementNotInS1", inter)
    if not s2.contains(d):
        return GluingCheck(False, "GlueElementNotInS2", inter)
    if len(inter) != 1:
        return GluingCheck(False, "IntersectionNotRankOne", inter)
    if hnf([d]) != list(inter):
        return GluingCheck(False, "IntersectionGeneratorMismatch", inter)
    dec = GluingDecomposition(S, (A1, A2), d, s1, s2)
    return GluingCheck(True, "ok", inter, dec)


def find_gluings(S):
    """Every split (up to swapping the parts) that is a gluing."""
    if S.n > MAX_GENERATORS:
        raise TooManyGenerators(f"{S.n} generators; the search is capped at {MAX_GENERATORS}")
    out = []
    rest = list(range(1, S.n))
    for k in range(0, S.n - 1):
        for extra in combinations(rest, k):
            A1 = (0,) + extra
            A2 = tuple(i for i in range(S.n) if i not in A1)
            s1, s2 = S.submonoid(A1), S.submonoid(A2)
            inter = lattice_intersection(list(s1.group_basis), list(s2.group_basis))
            if len(inter) != 1:
                continue
            d = _canonical(inter[0])
            if any(x < 0 for x in d):
                continue
            res = verify_gluing(S, (A1, A2), d)
            if res.value:
                out.append(res.decomposition)
    return out


def _component_pf(T):
    pf = pseudo_frobenius(T)
    if not pf.certified:
        raise UncertifiedComponentPF(f"PF of {T} is not certified")
    return pf


def pf_of_gluing(dec, check=True):
    """``{f + g + d : f ∈ PF(S1), g ∈ PF(S2)}``, checked against the glued semigroup."""
    p1, p2 = _component_pf(dec.s1), _component_pf(dec.s2)
    out = sorted({vadd(vadd(f, g), dec.glue_element) for f in p1.elements for g in p2.elements})
    assert len(out) == len(p1) * len(p2)
    if check:
        direct = pseudo_frobenius(dec.semigroup)
        if direct.certified:
            assert tuple(out) == direct.elements, (out, direct.elements)
    return PFSet(tuple(out), "Gluing", CERTIFIED)


def _place(dec, part_vec, which):
    idx = dec.partition[which]
    row = [0] * dec.semigroup.n
    for i, x in zip(idx, part_vec):
        row[i] = x
    return row


def _choose(options, choice, what):
    if choice is None:
        choice = 0
    if isinstance(choice, int):
        if not 0 <= choice < len(options):
            raise InvalidRowChoice(f"{what}: index {choice} out of range 0..{len(options) - 1}")
        return options[choice]
    choice = tuple(tuple(r) for r in choice) if choice and isinstance(choice[0], (list, tuple)) else tuple(choice)
    if choice not in options:
        raise InvalidRowChoice(f"{what}: {choice} is not an admissible choice")
    return choice


def rf_of_gluing(dec, f, g, row_choices=None):
    """Block RF-matrix of ``f + g + d``.

    ``row_choices`` may hold ``rf_f``/``rf_g`` (index or matrix entries of an
    RF-matrix of ``f`` in ``S1`` / ``g`` in ``S2``) and ``f_plus_d``/``g_plus_d``
    (index or exponent vector of a factorization of ``f + d`` / ``g + d``).
    """
    choices = dict(row_choices or {})
    f, g, d = tuple(f), tuple(g), dec.glue_element
    Mf = _choose([M.entries for M in rf_matrices(dec.s1, f)], choices.get("rf_f"), "rf_f")
    Mg = _choose([M.entries for M in rf_matrices(dec.s2, g)], choices.get("rf_g"), "rf_g")
    C = _choose(dec.s1.factorizations(vadd(f, d)), choices.get("f_plus_d"), "f_plus_d")
    B = _choose(dec.s2.factorizations(vadd(g, d)), choices.get("g_plus_d"), "g_plus_d")
    A1, A2 = dec.partition
    rows = [None] * dec.semigroup.n
    for r, i in enumerate(A1):
        row = _place(dec, Mf[r], 0)
        for pos, x in zip(A2, B):
            row[pos] = x
        rows[i] = tuple(row)
    for r, i in enumerate(A2):
        row = _place(dec, Mg[r], 1)
        for pos, x in zip(A1, C):
            row[pos] = x
        rows[i] = tuple(row)
    M = RFMatrix(tuple(rows), vadd(vadd(f, g), d))
    M.validate(dec.semigroup)
    return M


def _rows_in_order(T, f):
    """Distinct rows over all RF-matrices of ``f``, first occurrence order."""
    out = {}
    for M in rf_matrices(T, f):
        for row in M.entries:
            out.setdefault(row, None)
    return list(out)


@dataclass(frozen=True)
class Witness:
    f: tuple
    g: tuple
    f_plus_d: tuple
    g_plus_d: tuple
    row_f: tuple
    row_g: tuple
    relation: Binomial  # the glue binomial x^(m - row_f) - y^(m' - row_g)


@dataclass(frozen=True)
class TransferResult:
    value: bool
    reason: str  # "ok" or "NoWitness"
    witnesses: tuple
    glued_generated: bool

    @property
    def witness(self):
        return self.witnesses[0] if self.witnesses else None

    def __bool__(self):
        return self.value


def _witnesses(dec):
    p1, p2 = _component_pf(dec.s1), _component_pf(dec.s2)
    d = dec.glue_element
    for f in p1.elements:
        for g in p2.elements:
            rows_f = _rows_in_order(dec.s1, f)
            rows_g = _rows_in_order(dec.s2, g)
            for m in dec.s1.factorizations(vadd(f, d)):
                for m2 in dec.s2.factorizations(vadd(g, d)):
                    for rf_ in rows_f:
                        u = tuple(x - y for x, y in zip(m, rf_))
                        if any(x < 0 for x in u):
                            continue
                        for rg in rows_g:
                            v = tuple(x - y for x, y in zip(m2, rg))
                            if any(x < 0 for x in v):
                                continue
                            rel = Binomial.from_vectors(
                                dec.semigroup, _place(dec, u, 0), _place(dec, v, 1)
                            )
                            yield Witness(f, g, tuple(m), tuple(m2), rf_, rg, rel)


def rf_generation_transfer(dec, verify=True, all_witnesses=True):
    """Search for the rows making the glued ideal generated by RF-relations.

    The hypothesis: ``f ∈ PF(S1)``, ``g ∈ PF(S2)``, factorizations ``m`` of
    ``f + d`` and ``m'`` of ``g + d``, and rows of RF-matrices of ``f`` and ``g``
    that ``m`` and ``m'`` dominate componentwise. Witnesses are listed in search
    order (PF pairs lex, then factorizations and rows in search order).
    """
    for T in (dec.s1, dec.s2):
        if not generated_by_rf(T).value:
            raise ComponentNotRFGenerated(f"I_S of {T} is not generated by RF-relations")
    S = dec.semigroup
    found = []
    for w in _witnesses(dec):
        found.append(w)
        if not all_witnesses:
            break
    glued = generated_by_rf(S).value if verify else None
    if found and verify:
        assert glued
    return TransferResult(bool(found), "ok" if found else "NoWitness", tuple(found), glued)
