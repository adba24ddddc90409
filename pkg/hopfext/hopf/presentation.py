"""Generators-and-relations presentations of built algebras."""

from __future__ import annotations

import logging

import numpy as np

from hopfext.hopf.builder import HopfStructure
from hopfext.models.schemas import Presentation, RelationCheck
from hopfext.utils.templates import render_template

logger = logging.getLogger(__name__)


def _word(coords) -> str:
    parts = []
    for k, c in enumerate(np.asarray(coords).tolist()):
        if c:
            parts.append(f"x{k + 1}*" if c == 1 else f"x{k + 1}*^{c}")
    return " ".join(parts) or "1"


def relations(H: HopfStructure) -> list[RelationCheck]:
    """Defining relations on x_k* (basis characters) and t, each checked in H."""
    group = H.group
    rank = group.rank
    one = H.one()
    t = H.t_element()
    xs = [H.character(np.eye(rank, dtype=np.int64)[k]) for k in range(rank)]
    dual = H.t.dual().array
    checks = []
    for k, d in enumerate(group.cyclic_orders):
        checks.append(RelationCheck(relation=f"x{k + 1}*^{d} = 1", holds=H.power(xs[k], d) == one))
    for k in range(rank):
        for m in range(k + 1, rank):
            holds = H.multiply(xs[k], xs[m]) == H.multiply(xs[m], xs[k])
            checks.append(RelationCheck(relation=f"x{k + 1}* x{m + 1}* = x{m + 1}* x{k + 1}*", holds=holds))
    checks.append(RelationCheck(relation=f"t^{H.p} = 1", holds=H.power(t, H.p) == one))
    for k in range(rank):
        image = dual[:, k] % group.orders_array
        holds = H.multiply(t, xs[k]) == H.multiply(H.character(image), t)
        checks.append(RelationCheck(relation=f"t x{k + 1}* t^-1 = {_word(image)}", holds=holds))
    return checks


def presentation(H: HopfStructure) -> Presentation:
    """Generators, checked relations, Δ(t), S and ε of H."""
    group = H.group
    n = group.order
    rank = group.rank
    generators = [f"x{k + 1}*" for k in range(rank)] + ["t"]

    # S(p_b t) = ζ^e p_{t(-b)} t^-1, collected by target
    s_exps = np.zeros(n, dtype=np.int64)
    for b in range(n):
        row = H.basis_index(b, 1)
        target, _ = H.split(int(H.antipode_target[row]))
        s_exps[target] = H.antipode_exp[row]
    antipode = [
        f"S(x{k + 1}*) = {_word([d - 1 if j == k else 0 for j in range(rank)])}"
        for k, d in enumerate(group.cyclic_orders)
    ]
    antipode.append(f"S(t) = u t^{H.p - 1}, u = Σ_a ζ_{H.modulus}^{{s(a)}} p_a, s = {s_exps.tolist()}")
    counit = [f"ε(x{k + 1}*) = 1" for k in range(rank)] + ["ε(t) = 1"]

    result = Presentation(
        label=H.label,
        group=group.descriptor,
        prime=H.p,
        modulus=H.modulus,
        dimension=H.dimension,
        generators=generators,
        relations=relations(H),
        delta_t=(H.twist % H.modulus).tolist(),
        antipode=antipode,
        counit=counit,
    )
    if not result.relations_hold:
        failed = [r.relation for r in result.relations if not r.holds]
        logger.warning(f"{H.label or 'H'}: relations fail: {failed}")
    return result


def presentation_text(H: HopfStructure) -> str:
    data = presentation(H)
    return render_template(
        "presentation",
        "text",
        {
            **data.model_dump(),
            "elements": [",".join(str(c) for c in group_element) for group_element in H.group.elements.tolist()],
        },
    )


__all__ = ["presentation", "presentation_text", "relations"]
