"""Labeled generator registry and operator-level algebra helpers.

Generators are named by the set of tensor legs they couple: "Q12" is
the intermediate Casimir of legs {1,2}, "Q0" the constant -identity,
and non-consecutive leg sets ("Q13", "Q24", "Q14", "Q124", "Q134") are
derived generators built from q-commutators of consecutive ones.  Each
derived generator has an involuted partner ("IQ13", ...) defined by the
same formula with the q-commutator arguments swapped.

The involution itself (q -> q^-1 together with swapping raising and
lowering operators) fixes every consecutive-interval Casimir, so on
labels it only toggles the I prefix of the derived generators, and it
reverses nothing: applying it to a product means applying it factor by
factor in unchanged order.
"""

from __future__ import annotations

from itertools import combinations

from .exactnum import ONE, inverse
from .sparse import SparseOperator
from .uqrep import RepParams, casimir

# q-commutator pairs and subtracted products defining the derived
# generators; the involuted partner swaps the pair, keeps the rest.
DERIVED_DEFS = {
    "Q13": (("Q12", "Q23"), (("Q1", "Q3"), ("Q2", "Q123"))),
    "Q24": (("Q23", "Q34"), (("Q2", "Q4"), ("Q3", "Q234"))),
    "Q124": (("Q34", "Q123"), (("Q12", "Q4"), ("Q3", "Q1234"))),
    "Q14": (("Q123", "Q234"), (("Q1", "Q4"), ("Q23", "Q1234"))),
    "Q134": (("Q234", "Q12"), (("Q1", "Q34"), ("Q2", "Q1234"))),
}

# canonical external ordering of the labels (reports, CLI, DOT)
CANONICAL_ORDER = (
    "Q0",
    "Q1",
    "Q2",
    "Q3",
    "Q4",
    "Q12",
    "Q23",
    "Q34",
    "Q123",
    "Q234",
    "Q1234",
    "Q13",
    "Q24",
    "Q14",
    "Q124",
    "Q134",
    "IQ13",
    "IQ24",
    "IQ14",
    "IQ124",
    "IQ134",
)


def label_of_subset(subset, flipped: bool = False) -> str:
    """Canonical label of a nonempty leg subset; () names Q0."""
    digits = "".join(str(i) for i in sorted(subset))
    return ("IQ" if flipped else "Q") + (digits or "0")


def subset_of_label(label: str) -> tuple[int, ...]:
    body = label[2:] if label.startswith("IQ") else label[1:]
    if body == "0":
        return ()
    return tuple(int(c) for c in body)


def is_flipped(label: str) -> bool:
    return label.startswith("IQ")


def is_consecutive(subset) -> bool:
    """True for leg sets forming one unbroken run (Casimir labels)."""
    s = sorted(subset)
    return bool(s) and s[-1] - s[0] + 1 == len(s)


def involution(label: str) -> str:
    """Image of a labeled generator under q -> q^-1, E <-> F.

    Interval Casimirs and Q0 are fixed; derived generators trade their
    I prefix.
    """
    subset = subset_of_label(label)
    if not subset or is_consecutive(subset):
        return label
    return label_of_subset(subset, flipped=not is_flipped(label))


def involute_monomial(labels) -> tuple[str, ...]:
    """Involution of a product, factor by factor, order preserved."""
    return tuple(involution(x) for x in labels)


def q_commutator(q, a: SparseOperator, b: SparseOperator) -> SparseOperator:
    """[a, b]_q = q a b - q^-1 b a."""
    return (a * b).scale(q) - (b * a).scale(inverse(q))


def commutator(a: SparseOperator, b: SparseOperator) -> SparseOperator:
    return a * b - b * a


def anticommutator(a: SparseOperator, b: SparseOperator) -> SparseOperator:
    return a * b + b * a


class GeneratorRegistry:
    """All labeled generators of one realization, plus a product cache
    for the consecutive/central labels that the relation suites reuse
    heavily (derived-generator products are built on demand and not
    retained)."""

    def __init__(self, params: RepParams, basis, table: dict):
        self.params = params
        self.basis = basis
        self.table = table
        self._products: dict = {}

    def __getitem__(self, label: str) -> SparseOperator:
        try:
            return self.table[label]
        except KeyError:
            raise KeyError(f"no generator {label!r} at legs={self.params.legs}") from None

    def __contains__(self, label: str) -> bool:
        return label in self.table

    def labels(self) -> tuple[str, ...]:
        return tuple(x for x in CANONICAL_ORDER if x in self.table)

    def product(self, la: str, lb: str) -> SparseOperator:
        """self[la] * self[lb], cached for Casimir-label pairs."""
        cacheable = not (is_derived_label(la) or is_derived_label(lb))
        if cacheable and (la, lb) in self._products:
            return self._products[(la, lb)]
        out = self[la] * self[lb]
        if cacheable:
            self._products[(la, lb)] = out
        return out

    def q_commutator_of(self, la: str, lb: str) -> SparseOperator:
        q = self.params.q
        return self.product(la, lb).scale(q) - self.product(lb, la).scale(inverse(q))

    def commutator_of(self, la: str, lb: str) -> SparseOperator:
        return self.product(la, lb) - self.product(lb, la)

    def monomial(self, labels) -> SparseOperator:
        """Ordered product of labeled generators (empty = identity)."""
        out = SparseOperator.identity(self.basis)
        for la in labels:
            out = out * self[la]
        return out


def is_derived_label(label: str) -> bool:
    subset = subset_of_label(label)
    return bool(subset) and not is_consecutive(subset)


def consecutive_subsets(legs: int):
    """All consecutive leg runs as (lo, hi) intervals, by size then lo."""
    return [
        (lo, hi)
        for size in range(1, legs + 1)
        for lo in range(1, legs - size + 2)
        for hi in [lo + size - 1]
    ]


def nonempty_subsets(legs: int):
    items = range(1, legs + 1)
    for r in range(1, legs + 1):
        yield from combinations(items, r)


def build_registry(p: RepParams, basis) -> GeneratorRegistry:
    """Construct every labeled generator available at p.legs.

    Consecutive subsets get their interval Casimir; with three or more
    legs the non-consecutive subsets get their derived generators

        Q^(B) = (1/(q-q^-1)) [Q^(L), Q^(R)]_q  -  products of Casimirs

    per DERIVED_DEFS, together with the involuted partners.
    """
    q = p.q
    s = q - inverse(q)
    table = {"Q0": SparseOperator.identity(basis, -ONE)}
    for lo, hi in consecutive_subsets(p.legs):
        label = label_of_subset(range(lo, hi + 1))
        table[label] = casimir(p, basis, (lo, hi))
    if p.legs >= 3:
        for base, ((left, right), subs) in DERIVED_DEFS.items():
            needed = {left, right, *(x for pair in subs for x in pair)}
            if not needed <= table.keys():
                continue  # requires legs absent at this rank
            correction = SparseOperator.zero(basis)
            for fa, fb in subs:
                correction = correction + table[fa] * table[fb]
            table[base] = q_commutator(q, table[left], table[right]).scale(
                inverse(s)
            ) - correction
            table["I" + base] = q_commutator(q, table[right], table[left]).scale(
                inverse(s)
            ) - correction
    return GeneratorRegistry(p, basis, table)
