"""Relation suites: every algebraic claim about the realization, each
checked in exact arithmetic and returned as RelationReports.

Suites
------
defining       quantum-group relations per leg and per interval, plus
               left-vs-right coproduct assembly (coassociativity)
prop1          commutators of consecutive-interval Casimirs: disjoint or
               nested intervals commute, crossing ones must not, and at
               four legs the crossing pairs form a single 5-cycle
prop2          [Q^(A), involution(Q^(B))] = 0 for nested or disjoint
               leg subsets A, B, over all ordered pairs
aw3            symmetric three-generator relations for every allowable
               triple, with the orientation search for derived
               generators, plus the linearized relation pair
aw3-quadratic  the quadratic (unshifted) relation pair, verify-and-report
master         twenty six-term q-commutator exchange identities
spectra        annihilating polynomials of every interval Casimir on
               every weight block
independence   exact rank of the fifteen non-central generators
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations, product

from .exactnum import ONE, inverse
from .opalgebra import (
    GeneratorRegistry,
    commutator,
    consecutive_subsets,
    involute_monomial,
    involution,
    is_consecutive,
    label_of_subset,
    nonempty_subsets,
    q_commutator,
)
from .reporting import RelationReport, residual_report
from .sparse import SparseOperator, fraction_free_rank
from .spectra import check_annihilating
from .uqrep import RepParams, casimir_unshifted, interval_ops


# -- defining relations ----------------------------------------------


def check_defining_relations(p: RepParams, basis) -> list[RelationReport]:
    """K Kinv = 1, K E = q E K, q K F = F K and the E, F commutator on
    every leg and every consecutive interval.

    The commutator relation applies E after F on only one side, so it
    is checked on columns of weight <= n_max - 1, where the truncation
    is invisible; the other relations are exact everywhere.
    """
    q = p.q
    s_inv = inverse(q - inverse(q))
    iden = SparseOperator.identity(basis)
    out = []
    for lo, hi in consecutive_subsets(p.legs):
        label = label_of_subset(range(lo, hi + 1))
        ops = interval_ops(p, basis, (lo, hi))
        e, f, k, ki = ops["E"], ops["F"], ops["K"], ops["Kinv"]
        pairs = [
            ("KKinv", k * ki - iden, None),
            ("KE", k * e - (e * k).scale(q), None),
            ("KF", (k * f).scale(q) - f * k, None),
            (
                "EF",
                commutator(e, f) - (k * k - ki * ki).scale(s_inv),
                basis.n_max - 1,
            ),
        ]
        for name, resid, max_w in pairs:
            out.append(
                residual_report(
                    id=f"defining/{label}/{name}",
                    kind="defining-relation",
                    inputs={"interval": [lo, hi], "relation": name},
                    residual=resid,
                    max_weight=max_w,
                )
            )
    return out


def check_coassociativity(p: RepParams, basis) -> list[RelationReport]:
    """Left-bracketed vs right-bracketed coproduct assembly agree on
    every interval of three or more legs."""
    out = []
    for lo, hi in consecutive_subsets(p.legs):
        if hi - lo < 2:
            continue
        label = label_of_subset(range(lo, hi + 1))
        left = interval_ops(p, basis, (lo, hi), "left")
        right = interval_ops(p, basis, (lo, hi), "right")
        for name in ("E", "F", "K", "Kinv"):
            out.append(
                residual_report(
                    id=f"defining/coassoc/{label}/{name}",
                    kind="coassociativity",
                    inputs={"interval": [lo, hi], "generator": name},
                    residual=left[name] - right[name],
                )
            )
    return out


# -- commuting pairs ---------------------------------------------------


def _interval_subsets(legs: int) -> list[tuple[int, ...]]:
    return [tuple(range(lo, hi + 1)) for lo, hi in consecutive_subsets(legs)]


def _qualifying(a: tuple, b: tuple) -> bool:
    sa, sb = set(a), set(b)
    return sa.isdisjoint(sb) or sa <= sb or sb <= sa


def check_prop1(reg: GeneratorRegistry) -> list[RelationReport]:
    """Commutators of all pairs of interval Casimirs.

    Disjoint or nested intervals must commute; crossing intervals must
    not (they are the genuinely q-deformed pairs).  A final structural
    report checks the crossing pairs against the computed non-commuting
    set and, at four legs, that they close into a single 5-cycle.
    """
    subsets = _interval_subsets(reg.params.legs)
    out = []
    noncommuting = []
    for a, b in combinations(subsets, 2):
        la, lb = label_of_subset(a), label_of_subset(b)
        qual = _qualifying(a, b)
        resid = commutator(reg[la], reg[lb])
        if not resid.is_zero():
            noncommuting.append((la, lb))
        out.append(
            residual_report(
                id=f"prop1/{la}-{lb}",
                kind="casimir-commutator",
                inputs={"a": la, "b": lb, "qualifying": qual},
                residual=resid,
                expected="zero" if qual else "nonzero",
            )
        )
    crossing = [
        (label_of_subset(a), label_of_subset(b))
        for a, b in combinations(subsets, 2)
        if not _qualifying(a, b)
    ]
    structure_ok = noncommuting == crossing
    cycle_note = None
    if reg.params.legs == 4 and structure_ok:
        structure_ok = _is_single_cycle(noncommuting)
        cycle_note = "crossing pairs close into one 5-cycle" if structure_ok else (
            "crossing pairs do not form a single cycle"
        )
    out.append(
        RelationReport(
            id="prop1/structure",
            kind="noncommuting-structure",
            inputs={"noncommuting": [list(e) for e in noncommuting]},
            status="pass" if structure_ok else "fail",
            residual_summary={
                "nonzero_entries": 0 if structure_ok else 1,
                "sample": None,
                "note": cycle_note,
            },
        )
    )
    return out


def _is_single_cycle(edges) -> bool:
    adj: dict = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    if not adj or any(len(n) != 2 for n in adj.values()):
        return False
    start = next(iter(adj))
    seen = {start}
    prev, cur = None, start
    while True:
        nxt = [x for x in adj[cur] if x != prev]
        prev, cur = cur, nxt[0]
        if cur == start:
            break
        if cur in seen:
            return False
        seen.add(cur)
    return len(seen) == len(adj) == len(edges)


def check_prop2(reg: GeneratorRegistry) -> list[RelationReport]:
    """[Q^(A), involution(Q^(B))] = 0 whenever the leg subsets A, B are
    nested or disjoint, over all ordered pairs of distinct nonempty
    subsets.  Non-qualifying (crossing) pairs are skipped: nothing is
    claimed for them."""
    if reg.params.legs != 4:
        raise ValueError("subset commutation table is a four-leg statement")
    out = []
    for a, b in product(nonempty_subsets(4), repeat=2):
        if a == b or not _qualifying(a, b):
            continue
        la = label_of_subset(a)
        lb = involution(label_of_subset(b))
        resid = commutator(reg[la], reg[lb])
        out.append(
            residual_report(
                id=f"prop2/{la}-{lb}",
                kind="subset-commutator",
                inputs={"a": la, "b": lb},
                residual=resid,
            )
        )
    return out


# -- symmetric cubic relations -----------------------------------------


def enumerate_allowable() -> list[tuple]:
    """The ten canonical allowable triples of pairwise disjoint leg
    subsets: three singletons ascending, or a doubleton between the two
    remaining legs in ascending order."""
    triples = []
    for combo in combinations(range(1, 5), 3):
        triples.append(tuple((i,) for i in combo))
    for pair in combinations(range(1, 5), 2):
        rest = sorted(set(range(1, 5)) - set(pair))
        triples.append(((rest[0],), pair, (rest[1],)))
    return triples


def canonical_rotation(triple) -> tuple | None:
    """Canonical representative of an ordered triple under rotation, or
    None when no rotation is allowable."""
    slots = tuple(tuple(sorted(s)) for s in triple)
    allowed = set(enumerate_allowable())
    for shift in range(3):
        rot = slots[shift:] + slots[:shift]
        if rot in allowed:
            return rot
    return None


def triple_text(triple) -> str:
    def slot(s):
        return str(s[0]) if len(s) == 1 else "{" + ",".join(map(str, s)) + "}"

    return "(" + ",".join(slot(s) for s in triple) + ")"


def _aw3_rotations(triple):
    """The three cyclic relations of a triple, as subset slots."""
    rels = []
    for shift in range(3):
        u, v, w = triple[shift:] + triple[:shift]
        union = lambda *ss: tuple(sorted(set().union(*ss)))
        rels.append(
            {
                "left": (union(u, v), union(v, w)),
                "lone": union(w, u),
                "monomials": ((u, w), (union(u, v, w), v)),
            }
        )
    return rels


def _fermionic_subsets(triple):
    seen = []
    for rel in _aw3_rotations(triple):
        for subset in (*rel["left"], rel["lone"], *rel["monomials"][0], *rel["monomials"][1]):
            if not is_consecutive(subset) and subset not in seen:
                seen.append(subset)
    return seen


def _aw3_residual(reg: GeneratorRegistry, rel, assign, order):
    """Residual of (q-q^-1)^-1 [Q^(uv), Q^(vw)]_q
    - Q^(wu) - I(Q^(u) Q^(w)) - I(Q^(uvw) Q^(v))."""

    def resolve(subset):
        return assign.get(subset, label_of_subset(subset))

    q = reg.params.q
    s = q - inverse(q)
    l1, l2 = (resolve(x) for x in rel["left"])
    lhs = reg.q_commutator_of(l1, l2).scale(inverse(s))
    rhs = reg[resolve(rel["lone"])]
    for mono in rel["monomials"]:
        labels = involute_monomial(tuple(resolve(x) for x in mono))
        if order == "reversed":
            labels = labels[::-1]
        rhs = rhs + reg.monomial(labels)
    return lhs - rhs


def check_aw3_symmetric(
    reg: GeneratorRegistry, triple, probe_reg: GeneratorRegistry = None
) -> list[RelationReport]:
    """The three symmetric relations of one allowable triple.

    Every non-consecutive leg set appearing in the relations may enter
    as the defined generator or its involuted partner.  The all-plain
    assignment with factor order as written is tried first; if any
    relation has a nonzero residual, the other orientation assignments
    (and then reversed monomial order) are searched, and the passing
    combination is recorded.  probe_reg, when given, is a cheaper
    realization (smaller truncation) used to pre-screen assignments;
    the reported residuals always come from reg.
    """
    if reg.params.legs < 3:
        raise ValueError("allowable triples need at least three legs")
    rels = _aw3_rotations(triple)
    fermionic = _fermionic_subsets(triple)
    text = triple_text(triple)

    def assignments():
        for flips in product((False, True), repeat=len(fermionic)):
            yield {
                s: label_of_subset(s, flipped=f)
                for s, f in zip(fermionic, flips)
            }

    def evaluate(registry, assign, order):
        return [_aw3_residual(registry, rel, assign, order) for rel in rels]

    found = None
    for order in ("direct", "reversed"):
        for assign in assignments():
            if probe_reg is not None:
                if not all(r.is_zero() for r in evaluate(probe_reg, assign, order)):
                    continue
            resids = evaluate(reg, assign, order)
            if all(r.is_zero() for r in resids):
                found = (assign, order, resids)
                break
        if found:
            break
    if found is None:
        assign = next(assignments())
        order = "direct"
        resids = evaluate(reg, assign, order)
    else:
        assign, order, resids = found
    reports = []
    for i, resid in enumerate(resids, start=1):
        reports.append(
            residual_report(
                id=f"aw3/{text}/rel{i}",
                kind="symmetric-aw3",
                inputs={
                    "triple": text,
                    "relation": i,
                    "assignment": {label_of_subset(s): a for s, a in assign.items()},
                    "monomial_order": order,
                },
                residual=resid,
            )
        )
    return reports


def check_aw3_linear(reg: GeneratorRegistry, tag: str = "linear") -> list[RelationReport]:
    """Linearized relation pair on the first three legs:

        [[Q12,Q23]_q,Q12]_q = (q-q^-1)^2 (B Q12 + Q23 + Q1 Q123 + Q2 Q3)
        [[Q23,Q12]_q,Q23]_q = (q-q^-1)^2 (B Q23 + Q12 + Q3 Q123 + Q1 Q2)

    with B = Q1 Q3 + Q2 Q123, all in shifted Casimirs."""
    q = reg.params.q
    s2 = (q - inverse(q)) ** 2
    q12, q23 = reg["Q12"], reg["Q23"]
    b = reg.product("Q1", "Q3") + reg.product("Q2", "Q123")
    lines = [
        (
            "line1",
            q_commutator(q, q_commutator(q, q12, q23), q12)
            - (b * q12 + q23 + reg.product("Q1", "Q123") + reg.product("Q2", "Q3")).scale(s2),
        ),
        (
            "line2",
            q_commutator(q, q_commutator(q, q23, q12), q23)
            - (b * q23 + q12 + reg.product("Q3", "Q123") + reg.product("Q1", "Q2")).scale(s2),
        ),
    ]
    return [
        residual_report(
            id=f"aw3/{tag}/{name}",
            kind="linear-aw3",
            inputs={"relation": name, "legs": reg.params.legs},
            residual=resid,
        )
        for name, resid in lines
    ]


def check_aw3_quadratic(reg3: GeneratorRegistry) -> list[RelationReport]:
    """Quadratic relation pair in unshifted Casimirs, as printed:

        [[U12,U23]_q,U12]_q = -2 U12^2 - 2{U12,U23} + B U12 + U23 + D1
        [[U23,U12]_q,U23]_q = -2 U23^2 - 2{U12,U23} + B U23 + U12 + D2

        B  = (q-q^-1)^2 (U1 U3 + U2 U123) + 2 (U1+U2+U3+U123)
        D1 = 2 (U1 U3 + U2 U123) - 2q (U1+U2+U3+U123)/(q+1)^2
             - (q+q^-1)(U1 U123 + U2 U3) + 2q^2/(q+1)^4
        D2 = same with U3 U123 + U1 U2 in the third term

    These lines are verified and reported but never gate a run: when
    the residual is nonzero the report carries a structural diagnosis
    (scalar multiple of the identity, or scalar plus a multiple of the
    lone linear term), pinning down which printed coefficient is off.
    The linearized pair, which is exact, is checked alongside.
    """
    p = reg3.params
    if p.legs != 3:
        raise ValueError("quadratic relation pair is stated on three legs")
    basis = reg3.basis
    q = p.q
    s2 = (q - inverse(q)) ** 2
    t = q + inverse(q)
    u = {
        "U1": casimir_unshifted(p, basis, (1, 1)),
        "U2": casimir_unshifted(p, basis, (2, 2)),
        "U3": casimir_unshifted(p, basis, (3, 3)),
        "U12": casimir_unshifted(p, basis, (1, 2)),
        "U23": casimir_unshifted(p, basis, (2, 3)),
        "U123": casimir_unshifted(p, basis, (1, 3)),
    }
    iden = SparseOperator.identity(basis)
    central_sum = u["U1"] + u["U2"] + u["U3"] + u["U123"]
    gg = u["U1"] * u["U3"] + u["U2"] * u["U123"]
    b = gg.scale(s2) + central_sum.scale(2)
    const = iden.scale(2 * q * q / (q + 1) ** 4)
    d1 = (
        gg.scale(2)
        - central_sum.scale(2 * q / (q + 1) ** 2)
        - (u["U1"] * u["U123"] + u["U2"] * u["U3"]).scale(t)
        + const
    )
    d2 = (
        gg.scale(2)
        - central_sum.scale(2 * q / (q + 1) ** 2)
        - (u["U3"] * u["U123"] + u["U1"] * u["U2"]).scale(t)
        + const
    )
    anti = u["U12"] * u["U23"] + u["U23"] * u["U12"]
    lines = [
        (
            "line1",
            "U23",
            q_commutator(q, q_commutator(q, u["U12"], u["U23"]), u["U12"])
            - (
                (u["U12"] * u["U12"]).scale(-2)
                - anti.scale(2)
                + b * u["U12"]
                + u["U23"]
                + d1
            ),
        ),
        (
            "line2",
            "U12",
            q_commutator(q, q_commutator(q, u["U23"], u["U12"]), u["U23"])
            - (
                (u["U23"] * u["U23"]).scale(-2)
                - anti.scale(2)
                + b * u["U23"]
                + u["U12"]
                + d2
            ),
        ),
    ]
    reports = []
    for name, lone_name, resid in lines:
        note = None
        if not resid.is_zero():
            note = _diagnose_residual(resid, u[lone_name], lone_name)
        reports.append(
            residual_report(
                id=f"aw3-quadratic/{name}",
                kind="quadratic-aw3",
                inputs={"relation": name, "normalization": "unshifted"},
                residual=resid,
                gating=False,
                note=note,
            )
        )
    reports.extend(check_aw3_linear(reg3))
    return reports


def _diagnose_residual(resid, lone, lone_name) -> str:
    """Fit a nonzero residual to c*identity, then to
    c*identity + d*(lone term); say what fits."""
    basis = resid.basis
    c = resid.get(0, 0)
    if resid == SparseOperator.identity(basis, c):
        return f"residual = ({c}) * identity: constant term off by that amount"
    d = None
    for i, j, v in resid.entries():
        if i != j:
            ref = lone.get(i, j)
            if ref:
                d = v / ref
            break
    if d is not None:
        flat = resid - lone.scale(d)
        c = flat.get(0, 0)
        if flat == SparseOperator.identity(basis, c):
            return (
                f"residual = ({c}) * identity + ({d}) * {lone_name}: "
                f"constant and lone-term coefficients off by those amounts"
            )
    return "residual has no scalar/lone-term structure"


# -- master identity ---------------------------------------------------


@dataclass(frozen=True)
class MasterRow:
    table: str
    index: int
    triples: tuple  # ((A,B,C), (alpha,beta,gamma), (X,Y,Z)) as labels


@lru_cache(maxsize=None)
def load_master_rows() -> tuple:
    text = (
        resources.files("awalgebra").joinpath("data/master_tables.json").read_text()
    )
    data = json.loads(text)
    rows = []
    for table in ("table1", "table2"):
        for idx, triples in enumerate(data[table], start=1):
            rows.append(
                MasterRow(
                    table=table,
                    index=idx,
                    triples=tuple(tuple(t) for t in triples),
                )
            )
    return tuple(rows)


def _triple_q_commutator(reg: GeneratorRegistry, a: str, b: str, c: str):
    """[[Q^a, Q^b]_q, Q^c]_q through the registry's product cache."""
    q = reg.params.q
    inner = reg.q_commutator_of(a, b)
    cc = reg[c]
    return (inner * cc).scale(q) - (cc * inner).scale(inverse(q))


def check_master(reg: GeneratorRegistry, row: MasterRow) -> RelationReport:
    """One six-term exchange identity: the three left triples against
    the three index-exchanged right triples."""
    if reg.params.legs != 4:
        raise ValueError("exchange identities are four-leg statements")
    (a, b, c), (al, be, ga), (x, y, z) = row.triples
    lhs_triples = ((a, b, c), (al, be, ga), (x, y, z))
    rhs_triples = ((a, be, z), (x, b, ga), (al, y, c))
    resid = SparseOperator.zero(reg.basis)
    for t in lhs_triples:
        resid = resid + _triple_q_commutator(reg, *t)
    for t in rhs_triples:
        resid = resid - _triple_q_commutator(reg, *t)
    return residual_report(
        id=f"master/{row.table}/row{row.index}",
        kind="exchange-identity",
        inputs={
            "lhs": [list(t) for t in lhs_triples],
            "rhs": [list(t) for t in rhs_triples],
        },
        residual=resid,
    )


def check_master_all(reg: GeneratorRegistry) -> list[RelationReport]:
    return [check_master(reg, row) for row in load_master_rows()]


# -- linear independence ------------------------------------------------


NONCENTRAL_LABELS = (
    "Q12",
    "Q23",
    "Q34",
    "Q123",
    "Q234",
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


def check_independence(reg: GeneratorRegistry) -> RelationReport:
    """Exact rank of the fifteen non-central generators, vectorized.

    The generators are block diagonal with truncation-independent
    blocks, so full rank certified on a leading set of weight blocks is
    full rank outright; blocks are added until the rank reaches 15 or
    the truncation is exhausted.
    """
    if reg.params.legs != 4:
        raise ValueError("the fifteen-generator statement needs four legs")
    if reg.params.n_max < 2:
        raise ValueError("rank check needs n_max >= 2")
    basis = reg.basis
    n = len(basis)
    weights = basis.weights
    rank = 0
    cap = min(2, basis.n_max)
    while True:
        rows = []
        for label in NONCENTRAL_LABELS:
            op = reg[label]
            row = {}
            for j, col in op.cols.items():
                if weights[j] <= cap:
                    for i, v in col.items():
                        row[i * n + j] = v
            rows.append(row)
        rank = fraction_free_rank(rows)
        if rank == len(NONCENTRAL_LABELS) or cap == basis.n_max:
            break
        cap += 1
    ok = rank == len(NONCENTRAL_LABELS)
    return RelationReport(
        id="independence/rank",
        kind="linear-independence",
        inputs={"labels": list(NONCENTRAL_LABELS), "certified_at_weight": cap},
        status="pass" if ok else "fail",
        residual_summary={
            "nonzero_entries": 0 if ok else 1,
            "sample": None,
            "note": f"rank {rank} of {len(NONCENTRAL_LABELS)}",
        },
    )


# -- spectra ------------------------------------------------------------


def check_spectra(reg: GeneratorRegistry) -> list[RelationReport]:
    """Annihilating polynomial of every interval Casimir on every
    weight block."""
    out = []
    for lo, hi in consecutive_subsets(reg.params.legs):
        for w in range(reg.params.n_max + 1):
            out.append(check_annihilating(reg, (lo, hi), w))
    return out
