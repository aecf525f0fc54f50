from noncrossing.partitions import validate_ncl, validate_nc
from noncrossing.render import render, render_partition, render_tree
from noncrossing.trees import BicolorPlanarTree, PlanarTree


def test_render_isolated_points():
    art = render_partition(validate_nc(3, [[1], [2], [3]]))
    lines = art.splitlines()
    assert lines[-1].split() == ["1", "2", "3"]
    # three isolated ticks, no horizontal joins
    assert "_" not in art


def test_render_paper_example_topology():
    pi = validate_ncl(12, [[1, 4, 6, 9], [2, 3], [4, 5], [6, 7, 8], [10, 11], [11, 12]])
    art = render_partition(pi)
    lines = art.splitlines()
    assert lines[-1].split() == [str(i) for i in range(1, 13)]
    # two height levels: exterior blocks above, nested and linked blocks below
    assert len(lines) == 3
    assert "_" in lines[0] and "_" in lines[1]


def test_render_partition_deterministic():
    pi = validate_ncl(6, [[1, 3], [3, 5], [2], [4], [6]])
    assert render_partition(pi) == render_partition(pi)


def test_render_tree_plain():
    chain = PlanarTree((PlanarTree((PlanarTree(),)),))
    art = render_tree(chain)
    assert art.splitlines() == ["o", "|-o", "  |-o"]


def test_render_tree_bicolor_chain():
    leaf = BicolorPlanarTree()
    tree = BicolorPlanarTree(((1, BicolorPlanarTree(((0, leaf),))),))
    art = render_tree(tree)
    assert art.splitlines() == ["o", "|-o", "  :-o"]


def test_render_tree_sibling_edges():
    leaf = BicolorPlanarTree()
    tree = BicolorPlanarTree(((1, leaf), (0, leaf)))
    art = render_tree(tree)
    assert art.splitlines() == ["o", "|-o", ":-o"]


def test_render_dispatch():
    assert render(validate_nc(1, [[1]]))
    assert render(PlanarTree())
