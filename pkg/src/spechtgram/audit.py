"""Structural audit of the odd-branch classes of an even partition.

Each check returns human-readable counterexample strings; an empty list means the
partition satisfies every structural guarantee the parity argument uses.
"""

from __future__ import annotations

from .branches import ClassificationError, equivalence_classes, hook_pair_vs_descended, odd_branches
from .determinant import class_is_odd, reduce_square_class
from .hooks import _d_tuple, d_map, is_odd, odd_rank, two_power_r
from .partitions import Partition, distance


def audit_even_partition(lam: Partition) -> list[str]:
    if is_odd(lam):
        raise ValueError(f"{lam} is odd")
    problems: list[str] = []
    q = 1 << two_power_r(lam.n)

    for br in odd_branches(lam):
        image = Partition(_d_tuple(br.mu.parts))
        if distance(lam, image) not in (2, 3):
            problems.append(f"{lam}: d(lam, D({br.mu})) = {distance(lam, image)}")
        if q in (br.h1, br.h2):
            problems.append(f"{lam}: hook pair of {br.mu} contains {q}")

    try:
        classes = equivalence_classes(lam)
    except ClassificationError as exc:
        return problems + [f"{lam}: {exc}"]

    rank = odd_rank(lam)
    image_lam = d_map(lam)
    lower = {b.mu: b for b in odd_branches(image_lam)} if rank > 0 else {}

    for cls in classes:
        label = cls.case_label
        if len(cls) != label.expected_size:
            problems.append(f"{lam}: class D=({cls.d_image}) has size {len(cls)} but label {label.value}")
        if label.value.startswith("DIST2") and cls.distinguished is None:
            problems.append(f"{lam}: class D=({cls.d_image}) lacks a distinguished representative")
        odd, _ = class_is_odd(lam, cls)
        if not label.descends:
            if not odd:
                problems.append(f"{lam}: non-descending class D=({cls.d_image}) is not odd")
            continue
        # descending: D(mu) must be an odd branch of D(lam) with the transported hook pair
        rep = cls.distinguished if cls.distinguished is not None else cls.members[0]
        if rank == 0 or cls.d_image not in lower:
            problems.append(f"{lam}: D({rep.mu}) = ({cls.d_image}) is not an odd branch of D(lam)")
            continue
        target = lower[cls.d_image]
        predicted = hook_pair_vs_descended(lam, rep, label)
        if predicted != (target.h1, target.h2):
            problems.append(
                f"{lam}: {label.value} predicts {predicted} for ({cls.d_image}), actual {(target.h1, target.h2)}"
            )
        lower_odd = reduce_square_class([target.h1], [target.h2]).is_odd
        if odd != lower_odd:
            problems.append(f"{lam}: oddness of class D=({cls.d_image}) differs from its descendant")

    if rank > 0:
        images = {cls.d_image for cls in classes}
        for kappa in lower:
            if kappa not in images:
                problems.append(f"{lam}: odd branch ({kappa}) of D(lam) has no odd preimage")
    return problems
