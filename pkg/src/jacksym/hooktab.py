"""Marked-tableau models of the single-row monomial coefficient.

Two finite families of k-marked Young diagrams carry the same
alpha-polynomial total weight.  In the arrowed family the right member
of each horizontally adjacent marked pair may shoot one arrow, along its
row with weight alpha or down its column with weight one.  In the
labeled family the marks of each row spell a permutation, weighted by
alpha per non-left-to-right-minimum.  A pair of mutually inverse
weight-preserving rewriting procedures exchanges the two families,
processing marks column by column.

Forgetting labels collapses the labeled family onto column-distinct
subsets weighted by a per-row product, and bucketing those subsets by
their rectangle-block skeleton emits the alpha-falling-factorial
expansion of the normalized single-row Kostka value with coefficients
that are nonnegative term by term.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import factorial
from typing import Iterator, NamedTuple

from .combinatorics import lrmin, set_partitions_stream
from .exact import AlphaPoly, FFExpansion
from .partitions import Partition, arm, boxes, check_partition, leg

Box = tuple[int, int]


class InvalidTableau(ValueError):
    """Raised when tableau data violates a family invariant."""


#####################################################################
# the two tableau families
#####################################################################

class Right(NamedTuple):
    """Row arrow; offset counts steps rightward, 0 meaning the box itself."""

    offset: int


class Down(NamedTuple):
    """Column arrow; offset counts steps downward, at least 1."""

    offset: int


class HookTableau(NamedTuple):
    """Column-distinct marks with optional arrows on critical boxes."""

    shape: Partition
    marked: tuple[Box, ...]
    arrows: tuple[tuple[Box, Right | Down], ...]


class PermutedTableau(NamedTuple):
    """Column-distinct marks whose labels spell one permutation per row."""

    shape: Partition
    labels: tuple[tuple[Box, int], ...]


def critical_boxes(marked) -> tuple[Box, ...]:
    """Right members of horizontally adjacent marked pairs, sorted."""
    s = set(marked)
    return tuple(sorted(b for b in s if (b[0], b[1] - 1) in s))


def _check_marks(shape: Partition, marks) -> tuple[Box, ...]:
    out = tuple(sorted((int(i), int(j)) for i, j in marks))
    cols: set[int] = set()
    for i, j in out:
        if not (1 <= i <= len(shape) and 1 <= j <= shape[i - 1]):
            raise InvalidTableau(f"box {(i, j)} outside shape {shape}")
        if j in cols:
            raise InvalidTableau(f"two marks in column {j}")
        cols.add(j)
    return out


def hook_tableau(shape, marked, arrows=()) -> HookTableau:
    """Validating constructor; arrows may be a mapping or pair iterable."""
    shape = check_partition(shape)
    marks = _check_marks(shape, marked)
    bycol = {j: i for i, j in marks}
    for i, j in marks:
        if bycol.get(j + 1, 0) > i:
            raise InvalidTableau(
                f"mark below-right of {(i, j)} in column {j + 1}")
    crits = set(critical_boxes(marks))
    items = sorted(arrows.items() if hasattr(arrows, "items") else arrows)
    seen: set[Box] = set()
    canon = []
    for box, arrow in items:
        box = (int(box[0]), int(box[1]))
        if box not in crits:
            raise InvalidTableau(f"arrow on non-critical box {box}")
        if box in seen:
            raise InvalidTableau(f"two arrows on {box}")
        seen.add(box)
        i, j = box
        if isinstance(arrow, Right):
            if not 0 <= arrow.offset <= arm(shape, i, j):
                raise InvalidTableau(f"row arrow from {box} leaves the shape")
        elif isinstance(arrow, Down):
            if not 1 <= arrow.offset <= leg(shape, i, j):
                raise InvalidTableau(
                    f"column arrow from {box} leaves the shape")
        else:
            raise InvalidTableau(f"unknown arrow {arrow!r}")
        canon.append((box, arrow))
    return HookTableau(shape, marks, tuple(canon))


def permuted_tableau(shape, labels) -> PermutedTableau:
    """Validating constructor; labels may be a mapping or pair iterable."""
    shape = check_partition(shape)
    items = sorted(labels.items() if hasattr(labels, "items") else labels)
    items = [((int(b[0]), int(b[1])), int(lab)) for b, lab in items]
    _check_marks(shape, [b for b, _ in items])
    rows: dict[int, list[tuple[int, int]]] = {}
    for (i, j), lab in items:
        rows.setdefault(i, []).append((j, lab))
    for i, row in rows.items():
        word = [lab for _, lab in sorted(row)]
        if sorted(word) != list(range(1, len(word) + 1)):
            raise InvalidTableau(f"row {i} labels {word} are no permutation")
    return PermutedTableau(shape, tuple(items))


def weight_hook(t: HookTableau) -> AlphaPoly:
    """alpha to the number of row arrows."""
    e = sum(1 for _, a in t.arrows if isinstance(a, Right))
    return AlphaPoly((0,) * e + (1,))


def weight_permuted(t: PermutedTableau) -> AlphaPoly:
    """Product over rows of alpha^(marks in the row - their lrmin)."""
    rows: dict[int, list[tuple[int, int]]] = {}
    for (i, j), lab in t.labels:
        rows.setdefault(i, []).append((j, lab))
    e = 0
    for row in rows.values():
        word = [lab for _, lab in sorted(row)]
        e += len(word) - lrmin(word)
    return AlphaPoly((0,) * e + (1,))


#####################################################################
# enumeration
#####################################################################

def column_distinct_subsets(shape, k: int) -> Iterator[tuple[Box, ...]]:
    """All k-subsets of the boxes using pairwise distinct columns."""
    shape = check_partition(shape)
    for combo in combinations(tuple(boxes(shape)), k):
        if len({j for _, j in combo}) == k:
            yield combo


def hook_tableaux_stream(shape, k: int) -> Iterator[HookTableau]:
    """Every arrowed tableau with k marks, in a fixed order."""
    shape = check_partition(shape)
    for marked in column_distinct_subsets(shape, k):
        bycol = {j: i for i, j in marked}
        if any(bycol.get(j + 1, 0) > i for i, j in marked):
            continue
        crits = critical_boxes(marked)
        menus = []
        for i, j in crits:
            opts: list[Right | Down | None] = [None]
            opts += [Right(o) for o in range(arm(shape, i, j) + 1)]
            opts += [Down(o) for o in range(1, leg(shape, i, j) + 1)]
            menus.append(opts)
        for choice in product(*menus):
            arrows = tuple(
                (b, a) for b, a in zip(crits, choice) if a is not None)
            yield HookTableau(shape, marked, arrows)


def permuted_tableaux_stream(shape, k: int) -> Iterator[PermutedTableau]:
    """Every labeled tableau with k marks, in a fixed order."""
    shape = check_partition(shape)
    for marked in column_distinct_subsets(shape, k):
        rows: dict[int, list[Box]] = {}
        for b in marked:
            rows.setdefault(b[0], []).append(b)
        rowboxes = [sorted(v) for _, v in sorted(rows.items())]
        menus = [tuple(permutations(range(1, len(v) + 1))) for v in rowboxes]
        for words in product(*menus):
            labels: list[tuple[Box, int]] = []
            for boxlist, word in zip(rowboxes, words):
                labels += list(zip(boxlist, word))
            yield PermutedTableau(shape, tuple(sorted(labels)))


#####################################################################
# the rewriting maps
#####################################################################

def _render(shape: Partition, marks: dict, arrows: dict) -> str:
    cells = []
    for i, row_len in enumerate(shape, start=1):
        row = []
        for j in range(1, row_len + 1):
            b = (i, j)
            if b in marks:
                lab = marks[b]
                s = "*" if lab is None else str(lab)
                arrow = arrows.get(b)
                if isinstance(arrow, Right):
                    s += f"^{arrow.offset}"
                elif isinstance(arrow, Down):
                    s += f"_{arrow.offset}"
            else:
                s = "."
            row.append(s)
        cells.append(row)
    width = max((len(s) for row in cells for s in row), default=1)
    return "\n".join(" ".join(s.rjust(width) for s in row) for row in cells)


def format_hook(t: HookTableau) -> str:
    """Grid rendering; arrows appear as ^offset (row) and _offset (column)."""
    return _render(t.shape, {b: None for b in t.marked}, dict(t.arrows))


def format_permuted(t: PermutedTableau) -> str:
    return _render(t.shape, dict(t.labels), {})


def _row_max(marks: dict, i: int) -> int:
    return max((lab for (r, _), lab in marks.items() if r == i and lab),
               default=0)


def psi(t: HookTableau, trace: list | None = None) -> PermutedTableau:
    """Rewrite an arrowed tableau into a labeled one, right to left.

    The rightmost mark starts with label 1.  A mark without an arrow
    stays put and hands the next mark to its left a fresh row maximum.
    An arrowed mark passes its label to its left neighbor, vacates, and
    re-marks a box led to by the arrow: straight down, or into the
    arrow's column, displacing the labels between the two columns of the
    hosting row one marked slot leftward when that column is occupied.
    """
    order = sorted(t.marked, key=lambda b: -b[1])
    marks: dict[Box, int | None] = {b: None for b in t.marked}
    arrows = dict(t.arrows)
    if order:
        marks[order[0]] = 1
    if trace is not None:
        trace.append(("start", _render(t.shape, marks, arrows)))
    for pos, box in enumerate(order):
        i, j = box
        a = marks[box]
        nxt = order[pos + 1] if pos + 1 < len(order) else None
        arrow = arrows.pop(box, None)
        if arrow is None:
            case = "keep"
            if nxt is not None:
                marks[nxt] = _row_max(marks, nxt[0]) + 1
        elif isinstance(arrow, Down):
            case = "down"
            target = (i + arrow.offset, j)
            marks[nxt] = a
            del marks[box]
            marks[target] = _row_max(marks, target[0]) + 1
        else:
            cp = j + arrow.offset
            hit = next(((r, c) for (r, c) in marks if c == cp), None)
            marks[nxt] = a
            del marks[box]
            if hit is None:
                case = "right-empty"
                marks[(i, cp)] = _row_max(marks, i) + 1
            else:
                row = hit[0]
                slots = sorted(c for (r, c) in marks if r == row and j < c <= cp)
                vals = [marks[(row, c)] for c in slots]
                for c in slots:
                    del marks[(row, c)]
                for c, v in zip([j] + slots[:-1], vals):
                    marks[(row, c)] = v
                if row <= i:
                    case = "right-above"
                    marks[(i, cp)] = _row_max(marks, i) + 1
                else:
                    case = "right-below"
                    marks[(row, cp)] = _row_max(marks, row) + 1
        if trace is not None:
            trace.append((case, _render(t.shape, marks, arrows)))
    return permuted_tableau(t.shape, [(b, lab) for b, lab in marks.items()])


def _shift_right(marks: dict, row: int, lo: int, hi: int) -> None:
    # slide labels of marks in columns [lo, hi) one marked slot rightward,
    # the rightmost landing on the freed column hi
    slots = sorted(c for (r, c) in marks if r == row and lo <= c < hi)
    vals = [marks[(row, c)] for c in slots]
    for c in slots:
        del marks[(row, c)]
    for c, v in zip(slots[1:] + [hi], vals):
        marks[(row, c)] = v


def phi(t: PermutedTableau, trace: list | None = None) -> HookTableau:
    """Rewrite a labeled tableau into an arrowed one, left to right.

    The active mark is always the leftmost labeled one.  A row-maximal
    label with nothing marked below-right simply drops off.  Otherwise
    the largest label of the relevant row vacates its box, the column
    right of the active mark takes over the active label together with
    an arrow toward the vacated box, and displaced labels slide one
    marked slot rightward.  Inverse to the right-to-left rewriting.
    """
    marks: dict[Box, int | None] = dict(t.labels)
    arrows: dict[Box, Right | Down] = {}
    if trace is not None:
        trace.append(("start", _render(t.shape, marks, arrows)))
    while True:
        labeled = [(c, r) for (r, c), lab in marks.items() if lab]
        if not labeled:
            break
        j, i = min(labeled)
        box = (i, j)
        a = marks[box]
        hit = next(((r, c) for (r, c) in marks if c == j + 1), None)
        if hit is not None and hit[0] > i:
            row = hit[0]
            top = max(lab for (r, _), lab in marks.items() if r == row and lab)
            if marks[hit] == top:
                case = "down"
                del marks[hit]
                arrows[(i, j + 1)] = Down(row - i)
            else:
                case = "right-below"
                cm = next(c for (r, c), lab in marks.items()
                          if r == row and lab == top)
                del marks[(row, cm)]
                _shift_right(marks, row, j + 1, cm)
                arrows[(i, j + 1)] = Right(cm - (j + 1))
            marks[(i, j + 1)] = a
            marks[box] = None
        else:
            top = _row_max(marks, i)
            if a == top:
                case = "unlabel"
                marks[box] = None
            else:
                cm = next(c for (r, c), lab in marks.items()
                          if r == i and lab == top)
                del marks[(i, cm)]
                if hit is None:
                    case = "right-empty"
                else:
                    case = "right-above"
                    _shift_right(marks, hit[0], j + 1, cm)
                arrows[(i, j + 1)] = Right(cm - (j + 1))
                marks[(i, j + 1)] = a
                marks[box] = None
        if trace is not None:
            trace.append((case, _render(t.shape, marks, arrows)))
    return hook_tableau(t.shape, marks.keys(), arrows)


def sample_tableau() -> HookTableau:
    """Arrowed tableau on (9, 9, 7, 5) with eight marks whose rewriting
    touches most cases; default subject of the command line trace."""
    return hook_tableau(
        (9, 9, 7, 5),
        [(4, 1), (1, 6), (1, 7), (1, 8), (1, 9), (2, 2), (2, 3), (2, 4)],
        {(1, 7): Right(2), (1, 8): Right(1), (1, 9): Down(1),
         (2, 3): Right(4), (2, 4): Down(2)},
    )


#####################################################################
# weighted counts
#####################################################################

def ko_onepart_tableaux(k: int, lam, family: str = "hook") -> AlphaPoly:
    """Total weight of the chosen k-mark family on the diagram."""
    if family == "hook":
        stream: Iterator = hook_tableaux_stream(lam, k)
        weigh = weight_hook
    elif family == "permuted":
        stream = permuted_tableaux_stream(lam, k)
        weigh = weight_permuted
    else:
        raise ValueError("family must be 'hook' or 'permuted'")
    total = AlphaPoly()
    for t in stream:
        total = total + weigh(t)
    return total


@lru_cache(maxsize=None)
def perm_weight_sum(j: int) -> AlphaPoly:
    """Sum of alpha^(j - lrmin) over the permutations of [j]:
    (1 + alpha)(1 + 2 alpha) ... (1 + (j-1) alpha)."""
    out = AlphaPoly((1,))
    for i in range(1, j):
        out = out * AlphaPoly((1, i))
    return out


def ko_onepart_subsets(k: int, lam) -> AlphaPoly:
    """Per-row product formula over column-distinct k-subsets."""
    lam = check_partition(lam)
    total = AlphaPoly()
    for marked in column_distinct_subsets(lam, k):
        counts: dict[int, int] = {}
        for i, _ in marked:
            counts[i] = counts.get(i, 0) + 1
        term = AlphaPoly((1,))
        for c in counts.values():
            term = term * perm_weight_sum(c)
        total = total + term
    return total


#####################################################################
# skeleton expansion in the falling-factorial basis
#####################################################################

def _compositions_colex(k: int, d: int) -> list[tuple[int, ...]]:
    def gen(k: int, d: int):
        if d == 1:
            yield (k,)
            return
        for first in range(k + 1):
            for rest in gen(k - first, d - 1):
                yield (first,) + rest

    if d == 0:
        return [()] if k == 0 else []
    return sorted(gen(k, d), key=lambda b: tuple(reversed(b)))


def ko_onepart_ff(k: int, d: int) -> FFExpansion:
    """Falling-factorial expansion assembled skeleton by skeleton.

    A skeleton of a column-distinct subset keeps, per marked column, the
    width-block index and the hosting row, and per used row the
    height-block index; subsets sharing a skeleton share their weight,
    and are counted by one binomial per block.  Grouping the columns
    into rows (nonempty groups with row block index at most every member
    column block index) and weighting each row group by the distinct
    permutation weight sum of its size yields every coefficient as a
    sum of nonnegative rationals.
    """
    if d < 1:
        raise ValueError("need at least one block")
    out = FFExpansion(d)
    if k == 0:
        out.add_term(0, (0,) * d, (0,) * d, Fraction(1))
        return out
    for b in _compositions_colex(k, d):
        col_labels = [j + 1 for j in range(d) for _ in range(b[j])]
        denom = 1
        for x in b:
            denom *= factorial(x)
        for sp in set_partitions_stream(k):
            groups = [tuple(col_labels[i - 1] for i in block) for block in sp]
            weight = AlphaPoly((1,))
            for g in groups:
                weight = weight * perm_weight_sum(len(g))
            menus = [range(1, min(g) + 1) for g in groups]
            for labeling in product(*menus):
                a = [0] * d
                for lab in labeling:
                    a[lab - 1] += 1
                for e, c in enumerate(weight.coeffs):
                    if c:
                        out.add_term(e, tuple(a), tuple(b), Fraction(c, denom))
    return out
