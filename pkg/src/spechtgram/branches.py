"""Branches, odd branches, their D-equivalence classes and the case classification of those classes."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .hooks import _d_tuple, _is_odd_tuple, is_odd, two_power_r
from .partitions import Partition, _beta, beta_sequence, distance, format_partition, part_tuple


@dataclass(frozen=True)
class Branch:
    """A branch ``mu`` of some lambda together with its hook pair.

    ``receiver_row`` and ``donor_row`` index the canonical (decreasing, one bead per part)
    beta sequence of lambda: the receiver bead grows by ``h2``, the donor bead shrinks by ``h2``.
    """

    mu: Partition
    h1: int
    h2: int
    receiver_row: int
    donor_row: int

    def to_json(self) -> dict:
        return {"mu": format_partition(self.mu), "h1": self.h1, "h2": self.h2}


def _moves(beta: tuple[int, ...]) -> Iterator[tuple[int, int, int]]:
    # (receiver index, donor index, amount) with receiver bead > donor bead
    present = set(beta)
    m = len(beta)
    for j in range(m):
        small = beta[j]
        for gap in range(small):
            if gap in present:
                continue
            t = small - gap
            for i in range(j):
                if beta[i] + t not in present:
                    yield i, j, t


def _branch_list(parts: tuple[int, ...]) -> list[Branch]:
    beta = _beta(parts, len(parts))
    out = []
    for i, j, t in _moves(beta):
        new = list(beta)
        new[i] += t
        new[j] -= t
        mu = Partition(part_tuple(new))
        out.append(Branch(mu, beta[i] - beta[j] + t, t, i, j))
    out.sort(key=lambda br: br.mu.parts, reverse=True)
    return out


def branches(lam: Partition) -> list[Branch]:
    """All mu >= lam (dominance) of the same size at beta-distance 2, reverse-lex by mu."""
    return _branch_list(lam.parts)


def odd_branches(lam: Partition) -> list[Branch]:
    return [br for br in _branch_list(lam.parts) if _is_odd_tuple(br.mu.parts)]


class CaseLabel(str, Enum):
    DIST3 = "DIST3"
    DIST2_H2BIG_ALPHA_OK = "DIST2_H2BIG_ALPHA_OK"
    DIST2_H2BIG_ALPHA_BAD = "DIST2_H2BIG_ALPHA_BAD"
    DIST2_H1SMALL_ALPHA_OK = "DIST2_H1SMALL_ALPHA_OK"
    DIST2_H1SMALL_ALPHA_BAD = "DIST2_H1SMALL_ALPHA_BAD"
    DIST2_MIXED_PAIR = "DIST2_MIXED_PAIR"
    DIST2_MIXED_DESCENDS = "DIST2_MIXED_DESCENDS"
    DIST2_MIXED_GAP2R = "DIST2_MIXED_GAP2R"

    @property
    def expected_size(self) -> int:
        return _EXPECTED_SIZE[self]

    @property
    def descends(self) -> bool:
        """Whether D(mu) is itself an odd branch of D(lambda) for this case."""
        return self in _DESCENDING


_EXPECTED_SIZE = {
    CaseLabel.DIST3: 1,
    CaseLabel.DIST2_H2BIG_ALPHA_OK: 4,
    CaseLabel.DIST2_H2BIG_ALPHA_BAD: 3,
    CaseLabel.DIST2_H1SMALL_ALPHA_OK: 2,
    CaseLabel.DIST2_H1SMALL_ALPHA_BAD: 1,
    CaseLabel.DIST2_MIXED_PAIR: 2,
    CaseLabel.DIST2_MIXED_DESCENDS: 1,
    CaseLabel.DIST2_MIXED_GAP2R: 1,
}

_DESCENDING = frozenset(
    {
        CaseLabel.DIST3,
        CaseLabel.DIST2_H2BIG_ALPHA_BAD,
        CaseLabel.DIST2_H1SMALL_ALPHA_BAD,
        CaseLabel.DIST2_MIXED_DESCENDS,
    }
)


class ClassificationError(RuntimeError):
    """A class violated a structural guarantee the classification relies on."""


@dataclass(frozen=True)
class BranchClass:
    members: tuple[Branch, ...]
    d_image: Partition
    case_label: CaseLabel | None = None
    distinguished: Branch | None = None

    def __len__(self) -> int:
        return len(self.members)

    def to_json(self) -> dict:
        return {
            "d_image": format_partition(self.d_image),
            "case_label": self.case_label.value if self.case_label else None,
            "members": [br.to_json() for br in self.members],
            "distinguished": format_partition(self.distinguished.mu) if self.distinguished else None,
        }


def _group(lam: Partition) -> list[BranchClass]:
    groups: dict[tuple[int, ...], list[Branch]] = {}
    for br in odd_branches(lam):
        groups.setdefault(_d_tuple(br.mu.parts), []).append(br)
    return [BranchClass(tuple(groups[key]), Partition(key)) for key in sorted(groups, reverse=True)]


def equivalence_classes(lam: Partition) -> list[BranchClass]:
    """Odd branches of ``lam`` grouped by D-image; classified when ``lam`` is even."""
    classes = _group(lam)
    if is_odd(lam):
        return classes
    out = []
    for cls in classes:
        label, rep = classify(lam, cls)
        out.append(BranchClass(cls.members, cls.d_image, label, rep))
    return out


def _is_distinguished(beta: tuple[int, ...], br: Branch, q: int) -> bool:
    top = beta[br.receiver_row] + br.h2
    bottom = beta[br.donor_row] - br.h2
    if top - q < 0:
        return False
    present = set(beta)
    present.discard(beta[br.receiver_row])
    present.discard(beta[br.donor_row])
    present.update((top, bottom))
    return top - q not in present


def distinguished_members(lam: Partition, cls: BranchClass) -> list[Branch]:
    q = 1 << two_power_r(lam.n)
    beta = beta_sequence(lam)
    return [br for br in cls.members if _is_distinguished(beta, br, q)]


def classify(lam: Partition, cls: BranchClass) -> tuple[CaseLabel, Branch | None]:
    """Case label of an odd-branch class of an even partition, plus its distinguished representative.

    Distance-3 classes have no distinguished representative and return ``None`` for it.
    """
    if is_odd(lam):
        raise ValueError(f"classification is only defined for even partitions; {lam} is odd")
    if not cls.members:
        raise ValueError("empty class")
    dist = distance(lam, cls.d_image)
    if dist == 3:
        return CaseLabel.DIST3, None
    if dist != 2:
        raise ClassificationError(f"d({lam}, {cls.d_image}) = {dist}, expected 2 or 3")

    q = 1 << two_power_r(lam.n)
    beta = beta_sequence(lam)
    reps = distinguished_members(lam, cls)
    if not reps:
        raise ClassificationError(f"no distinguished representative in class {cls.d_image} of {lam}")
    rep = max(reps, key=lambda br: br.mu.parts)

    b1 = beta[rep.receiver_row]
    b2 = beta[rep.donor_row]
    h1, h2 = rep.h1, rep.h2
    if q in (h1, h2):
        raise ClassificationError(f"hook length {q} in pair of {rep.mu} for {lam}")

    if h2 > q or h1 < q:
        # alpha = beta_rep - q e_1 + q e_2
        top, bottom = b1 + h2, b2 - h2
        rest = set(beta) - {b1, b2}
        a1, a2 = top - q, bottom + q
        alpha_ok = a1 >= 0 and a1 != a2 and a1 not in rest and a2 not in rest
        if h2 > q:
            label = CaseLabel.DIST2_H2BIG_ALPHA_OK if alpha_ok else CaseLabel.DIST2_H2BIG_ALPHA_BAD
        else:
            label = CaseLabel.DIST2_H1SMALL_ALPHA_OK if alpha_ok else CaseLabel.DIST2_H1SMALL_ALPHA_BAD
        return label, rep

    # h1 > q > h2
    if b1 - b2 == q:
        return CaseLabel.DIST2_MIXED_GAP2R, rep
    if b1 - q in set(beta):
        return CaseLabel.DIST2_MIXED_PAIR, rep
    return CaseLabel.DIST2_MIXED_DESCENDS, rep


def class_of(lam: Partition, br: Branch) -> BranchClass:
    for cls in equivalence_classes(lam):
        if any(m.mu == br.mu for m in cls.members):
            return cls
    raise ValueError(f"{br.mu} is not an odd branch of {lam}")


def hook_pair_vs_descended(
    lam: Partition, br: Branch, label: CaseLabel | None = None
) -> tuple[int, int] | None:
    """Predicted hook pair of D(mu) as a branch of D(lambda), for descending cases.

    ``br`` must be the distinguished representative for distance-2 classes. When ``label``
    is given it must agree with the computed classification. Returns ``None`` for
    classes that do not descend.
    """
    cls = class_of(lam, br)
    if label is not None and label != cls.case_label:
        raise ValueError(f"label {label.value} does not match computed {cls.case_label.value}")
    label = cls.case_label
    if not label.descends:
        return None
    if label is not CaseLabel.DIST3 and (cls.distinguished is None or cls.distinguished.mu != br.mu):
        raise ValueError(f"{br.mu} is not the distinguished representative of its class")
    q = 1 << two_power_r(lam.n)
    h1, h2 = br.h1, br.h2
    if label is CaseLabel.DIST3:
        return (h1, h2)
    if label is CaseLabel.DIST2_H2BIG_ALPHA_BAD:
        return (h1 - q, h2 - q)
    if label is CaseLabel.DIST2_H1SMALL_ALPHA_BAD:
        return (q - h2, q - h1)
    beta = beta_sequence(lam)
    b1, b2 = beta[br.receiver_row], beta[br.donor_row]
    if b2 > b1 - q:
        return (h2, h1 - q)
    return (h1 - q, h2)
