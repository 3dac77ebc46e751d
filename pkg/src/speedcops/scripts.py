"""Fixed cop scripts for invisible play on the generator families."""
from __future__ import annotations

from .graph import Graph, to_mask


def _parts(G: Graph, *names: str) -> list[list[int]]:
    if G.labels is None:
        raise ValueError("graph carries no labels")
    return [[v for v in range(G.n) if G.labels[v] == name] for name in names]


def ia_gap_script(G: Graph) -> list[int]:
    """Invisible active script for a graph from ``gen_ia_gap``.

    Guard B and C and sweep every B-C path with two more cops; then hold C
    and occupy A, hold A and occupy B, hold B and reoccupy C; sweep again.
    """
    A, B, C = _parts(G, "A", "B", "C")
    paths: dict[str, list[int]] = {}
    for v in range(G.n):
        if G.labels[v].startswith("path:"):
            paths.setdefault(G.labels[v], []).append(v)
    bc = to_mask(B + C)

    def sweeps() -> list[int]:
        rows = []
        for inner in paths.values():
            rows.append(bc | 1 << inner[0])
            for a, b in zip(inner, inner[1:]):
                rows.append(bc | 1 << a | 1 << b)
        return rows

    script = [bc] + sweeps()
    script += [to_mask(C + A), to_mask(A + B), bc]
    return script + sweeps()


# Cop positions per row of the reference recontamination script, in slots:
# 0 = clique A, 1 = clique B, 2 = clique C and slots 3.. one per remaining
# vertex in generator order (connectors, C-hub path, A-C paths, B-C paths,
# hub).
RECONTAMINATION_ROWS: tuple[tuple[int, ...], ...] = (
    (0, 6, 36),
    (0, 7, 36),
    (0, 8, 36),
    (0, 12, 15),
    (0, 18, 21),
    (1, 3, 36),
    (1, 4, 36),
    (1, 5, 36),
    (1, 24, 27),
    (1, 30, 33),
    (12, 15, 18, 21, 24, 27, 30, 33),
    (12, 15, 18, 21, 24, 27, 30, 31, 33, 34),
    (12, 15, 18, 21, 24, 25, 27, 28, 31, 34),
    (12, 15, 18, 21, 25, 28, 31, 32, 34, 35),
    (12, 15, 18, 21, 25, 26, 28, 29, 32, 35),
    (12, 13, 15, 16, 18, 21, 26, 29, 32, 35),
    (13, 16, 18, 19, 21, 22, 26, 29, 32, 35),
    (13, 14, 16, 17, 19, 22, 26, 29, 32, 35),
    (14, 17, 19, 20, 22, 23, 26, 29, 32, 35),
    (2, 14, 17, 20, 23, 26, 29, 32, 35),
    (2, 3, 4, 5, 6, 7, 8),
    (2, 3, 4, 5, 6, 7, 8, 36),
    (2, 9, 10, 11, 36),
)

# Contaminated slots expected after each row when cops bound for clean
# vertices settle first (see ``simulate_script``).
RECONTAMINATION_EXPECTED: tuple[tuple[int, ...], ...] = (
    (1, 2, 3, 4, 5, 7, 8, *range(9, 36)),
    (1, 2, 3, 4, 5, 8, *range(9, 36)),
    (1, 2, 3, 4, 5, *range(9, 36)),
    (1, 2, 3, 4, 5, 9, 10, 11, 13, 14, 16, 17, *range(18, 36)),
    (1, 2, 3, 4, 5, 9, 10, 11, 13, 14, 16, 17, 19, 20, 22, 23, *range(24, 36)),
    (2, 4, 5, 9, 10, 11, 13, 14, 16, 17, 19, 20, 22, 23, *range(24, 36)),
    (2, 5, 9, 10, 11, 13, 14, 16, 17, 19, 20, 22, 23, *range(24, 36)),
    (2, 9, 10, 11, 13, 14, 16, 17, 19, 20, 22, 23, *range(24, 36)),
    (2, 9, 10, 11, 13, 14, 16, 17, 19, 20, 22, 23, 25, 26, *range(28, 36)),
    (2, 9, 10, 11, 13, 14, 16, 17, 19, 20, 22, 23, 25, 26, 28, 29, 31, 32, 34, 35),
    (2, 9, 10, 11, 13, 14, 16, 17, 19, 20, 22, 23, 25, 26, 28, 29, 31, 32, 34, 35),
    (2, 9, 10, 11, 13, 14, 16, 17, 19, 20, 22, 23, 25, 26, 28, 29, 32, 35),
    (2, 9, 10, 11, 13, 14, 16, 17, 19, 20, 22, 23, 26, 29, 32, 35),
    (2, 9, 10, 11, 13, 14, 16, 17, 19, 20, 22, 23, 26, 29),
    (2, 9, 10, 11, 13, 14, 16, 17, 19, 20, 22, 23),
    (2, 9, 10, 11, 14, 17, 19, 20, 22, 23),
    (2, 9, 10, 11, 14, 17, 20, 23),
    (2, 9, 10, 11, 20, 23),
    (2, 9, 10, 11),
    (9, 10, 11, 36),
    (9, 10, 11, 36),
    (9, 10, 11),
    (),
)


def recontamination_slots(G: Graph) -> list[int]:
    """Slot masks for a graph from ``gen_recontamination``."""
    if G.labels is None:
        raise ValueError("graph carries no labels")
    slots = [to_mask(p) for p in _parts(G, "clique:A", "clique:B", "clique:C")]
    slots += [1 << v for v in range(G.n) if not G.labels[v].startswith("clique:")]
    return slots


def recontamination_script(G: Graph) -> list[int]:
    """The reference script as vertex masks on the 52-vertex instance."""
    slots = recontamination_slots(G)
    if len(slots) != 37:
        raise ValueError("script needs gen_recontamination(4, 8, 8, 2, 4)")
    return [_slots_to_mask(slots, row) for row in RECONTAMINATION_ROWS]


def _slots_to_mask(slots: list[int], row: tuple[int, ...]) -> int:
    mask = 0
    for i in row:
        mask |= slots[i]
    return mask


def recontamination_expected(G: Graph) -> list[int]:
    slots = recontamination_slots(G)
    return [_slots_to_mask(slots, row) for row in RECONTAMINATION_EXPECTED]
