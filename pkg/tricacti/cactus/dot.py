"""DOT export of the cactus map: triangles joined to the coloured vertices they touch."""

from __future__ import annotations

from typing import TYPE_CHECKING

from tricacti.utils import EXPORT_CFG

if TYPE_CHECKING:
    from .triple import FactorTriple

COLORS: tuple[str, str, str] = ("white", "black", "grey")


def export_dot(triple: FactorTriple) -> str:
    """Return DOT text for ``triple``.

    One node per triangle, one node per cycle of each factor, and an edge between a triangle and
    each cycle containing its index. Node order is triangles, then white, black and grey cycles in
    canonical cycle order.
    """
    triangle: dict = EXPORT_CFG.triangle
    vertices: dict = EXPORT_CFG.vertices
    lines: list[str] = [f"graph {EXPORT_CFG.graph_name} {{"]
    lines.extend(
        f'  {triangle["prefix"]}{index} [label="{index}", shape={triangle["shape"]}];'
        for index in range(1, triple.n + 1)
    )
    edges: list[str] = []
    for color, perm in zip(COLORS, (triple.alpha1, triple.alpha2, triple.alpha3)):
        style: dict = vertices[color]
        attrs: str = f'style=filled, fillcolor={style["fillcolor"]}'
        if "fontcolor" in style:
            attrs = f'{attrs}, fontcolor={style["fontcolor"]}'
        for number, cycle in enumerate(perm.cycles(), start=1):
            name: str = f'{style["prefix"]}{number}'
            label: str = " ".join(str(point) for point in cycle)
            lines.append(f'  {name} [label="({label})", {attrs}];')
            edges.extend(f'  {triangle["prefix"]}{point} -- {name};' for point in cycle)
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines)
