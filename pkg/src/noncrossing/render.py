"""Deterministic ASCII diagrams for partitions and trees.

Partitions are drawn as arc diagrams: labelled points on a baseline,
each block a horizontal bar with ticks down to its elements, nested
blocks below enclosing ones.  Trees are drawn root at top, one vertex
per line; solid ``|-`` edges are colour 1, dashed ``:-`` edges colour 0.
"""

from __future__ import annotations

from .partitions import NCLPartition, NCPartition
from .trees import BicolorPlanarTree, PlanarTree


def render_partition(pi: NCPartition | NCLPartition) -> str:
    blocks = pi.blocks
    spans = {blk: (blk[0], blk[-1]) for blk in blocks}

    def sits_under(inner, outer) -> bool:
        if inner == outer:
            return False
        ilo, ihi = spans[inner]
        olo, ohi = spans[outer]
        if olo <= ilo and ihi <= ohi:
            return True
        # a linked block hangs below the block that shares its minimum
        return inner[0] in outer and inner[0] != outer[0]

    heights: dict[tuple, int] = {}

    def height(blk) -> int:
        if blk not in heights:
            heights[blk] = 1 + max(
                (height(b) for b in blocks if sits_under(b, blk)), default=0
            )
        return heights[blk]

    for blk in blocks:
        height(blk)

    col_w = max(3, len(str(pi.n)) + 1)
    width = pi.n * col_w
    top = max(heights.values())
    grid = [[" "] * width for _ in range(top)]

    def col(e: int) -> int:
        return (e - 1) * col_w + 1

    for blk in blocks:
        h = heights[blk]
        row = top - h
        if len(blk) > 1:
            for c in range(col(blk[0]) + 1, col(blk[-1])):
                grid[row][c] = "_"
        for e in blk:
            for r in range(row, top):
                if grid[r][col(e)] == " " or grid[r][col(e)] == "_":
                    grid[r][col(e)] = "|"

    labels = "".join(str(e).center(col_w) for e in range(1, pi.n + 1))
    lines = ["".join(row).rstrip() for row in grid]
    lines.append(labels.rstrip())
    return "\n".join(lines)


def render_tree(tree: PlanarTree | BicolorPlanarTree) -> str:
    lines = ["o"]

    def colored_children(node):
        if isinstance(node, BicolorPlanarTree):
            return list(node.children)
        return [(1, c) for c in node.children]

    def walk(node, prefix: str):
        kids = colored_children(node)
        for i, (colour, child) in enumerate(kids):
            edge = "|-" if colour == 1 else ":-"
            lines.append(prefix + edge + "o")
            last = i == len(kids) - 1
            if last:
                continuation = "  "
            else:
                rest = kids[i + 1 :]
                continuation = "| " if any(c == 1 for c, _ in rest) else ": "
            walk(child, prefix + continuation)

    walk(tree, "")
    return "\n".join(lines)


def render(obj) -> str:
    if isinstance(obj, (NCPartition, NCLPartition)):
        return render_partition(obj)
    if isinstance(obj, (PlanarTree, BicolorPlanarTree)):
        return render_tree(obj)
    raise TypeError(f"cannot render {type(obj).__name__}")
