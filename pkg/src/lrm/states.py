"""State machinery for legality of cyclic window-digit words.

While scanning a digit word left to right, everything the future depends on
is captured by a *state*: the mutual order of the last t-1 cells seen, plus
the set of relation tuples those cells can still have to the first t-1
cells (the head).  A relation value in 0..t-1 counts how many head cells
sit strictly below a tracked cell.  A state whose tuple set contains every
tuple consistent with its mutual order is *complete*; there are (t-1)! of
them and they are closed under the successor rule.

Digit d of window i fixes the rank of the newest cell among the t-1 cells
before it, so consuming one digit inserts a new cell into the tracked
order, re-bands its head relation between the relations of its window
neighbours, and drops the oldest tracked cell.

States here come in two flavours.  Conditioned on a head permutation pi
the state sequence of a word is always well defined.  Unconditioned states
(no pi) are only well defined when every head order yields the same
tracked-cell order; ``initial_state`` and ``state_oracle`` raise otherwise,
and the set-valued variants return every alternative.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Sequence

from .permutations import Perm

RelTuple = tuple[int, ...]

_ORACLE_MAX_CELLS = 10


@dataclass(frozen=True)
class State:
    """Tracked order of the last t-1 cells plus their achievable head relations.

    ``perm`` lists tracked-cell block positions (1 = oldest) from the highest
    charge down.  ``tuples`` holds relation tuples indexed by block position.
    """

    perm: Perm
    tuples: frozenset[RelTuple]

    @property
    def t(self) -> int:
        return len(self.perm) + 1

    def render(self) -> str:
        body = ",".join("(" + ",".join(map(str, tup)) + ")" for tup in sorted(self.tuples))
        return "([" + ",".join(map(str, self.perm)) + "], {" + body + "})"

    def __str__(self) -> str:
        return self.render()


def monotone_tuples(perm: Perm) -> frozenset[RelTuple]:
    """All relation tuples consistent with a tracked-cell order.

    If block position a sits above block position b then a's relation value
    must be >= b's.  Exactly C(2t-2, t-1) tuples qualify.
    """
    t = len(perm) + 1
    out = []
    for tup in itertools.product(range(t), repeat=t - 1):
        ok = True
        for hi_idx in range(t - 1):
            for lo_idx in range(hi_idx + 1, t - 1):
                # perm[hi_idx] is above perm[lo_idx]
                if tup[perm[hi_idx] - 1] < tup[perm[lo_idx] - 1]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(tup)
    return frozenset(out)


def is_complete(state: State) -> bool:
    """True when every monotone-consistent tuple is achievable."""
    t = state.t
    return len(state.tuples) == comb(2 * t - 2, t - 1)


@lru_cache(maxsize=None)
def complete_states(t: int) -> frozenset[State]:
    """The (t-1)! complete states, one per tracked-cell order."""
    if not 2 <= t <= 5:
        raise ValueError(f"complete-state tables are kept enumerable for t in [2, 5], got {t}")
    out = set()
    for perm in itertools.permutations(range(1, t)):
        out.add(State(perm=perm, tuples=monotone_tuples(perm)))
    return frozenset(out)


@lru_cache(maxsize=None)
def successor(state: State, digit: int) -> State:
    """Exact successor state after consuming one digit.

    The new cell enters the window with ``digit`` old cells below it; its
    head relation ranges between the relations of the window cells directly
    below and above it (0 and t-1 when absent).  The oldest cell drops out.
    """
    t = state.t
    if not 0 <= digit < t:
        raise ValueError(f"digit out of range 0..{t - 1}: {digit}")
    insert_at = (t - 1) - digit  # index in the descending window order
    window = list(state.perm[:insert_at]) + [t] + list(state.perm[insert_at:])

    # Neighbours of the new cell in the full window order.
    above = window[insert_at - 1] if insert_at > 0 else None
    below = window[insert_at + 1] if insert_at + 1 < len(window) else None

    new_perm = tuple(lbl - 1 for lbl in window if lbl != 1)

    new_tuples = set()
    for tup in state.tuples:
        lo = tup[below - 1] if below is not None else 0
        hi = tup[above - 1] if above is not None else t - 1
        tail = tup[1:]
        for y in range(lo, hi + 1):
            new_tuples.add(tail + (y,))
    return State(perm=new_perm, tuples=frozenset(new_tuples))


def chain(state: State, digits: Iterable[int]) -> State:
    for d in digits:
        state = successor(state, d)
    return state


def _consistent_orders(
    num_cells: int, digits: Sequence[int], t: int, pi: Perm | None
) -> Iterator[tuple[int, ...]]:
    """All relative orders of cells 0..num_cells-1 matching the digit prefix.

    Yields ascending cell lists (lowest charge first).  Cells are placed in
    index order; cell j >= t-1 must land so that exactly digits[j-t+1] of
    its window predecessors sit below it, which prunes as we go.
    """
    head = list(range(t - 1))

    def place(asc: list[int], j: int) -> Iterator[tuple[int, ...]]:
        if j == num_cells:
            yield tuple(asc)
            return
        if j < t - 1:
            slots = range(len(asc) + 1)
        else:
            want = digits[j - t + 1]
            window = set(range(j - t + 1, j))
            slots = []
            seen_window = 0
            for pos in range(len(asc) + 1):
                if seen_window == want:
                    slots.append(pos)
                if pos < len(asc) and asc[pos] in window:
                    seen_window += 1
        for pos in slots:
            asc.insert(pos, j)
            yield from place(asc, j + 1)
            asc.pop(pos)

    if pi is not None:
        # Seed the head cells directly in the order pi prescribes.
        asc0 = [p - 1 for p in reversed(pi)]
        yield from place(asc0, t - 1)
    else:
        for head_order in itertools.permutations(head):
            yield from place(list(head_order), t - 1)


def _project(asc: tuple[int, ...], num_cells: int, t: int) -> tuple[Perm, RelTuple]:
    tracked = list(range(num_cells - (t - 1), num_cells))
    pos = {cell: rank for rank, cell in enumerate(asc)}
    desc = sorted(tracked, key=lambda c: -pos[c])
    perm = tuple(c - tracked[0] + 1 for c in desc)
    rel = tuple(sum(1 for h in range(t - 1) if pos[h] < pos[c]) for c in tracked)
    return perm, rel


def _oracle_groups(digits: Sequence[int], t: int, pi: Perm | None) -> dict[Perm, set[RelTuple]]:
    num_cells = t - 1 + len(digits)
    if len(digits) < t - 1:
        raise ValueError(f"need at least t-1 = {t - 1} digits, got {len(digits)}")
    if num_cells > _ORACLE_MAX_CELLS:
        raise ValueError(f"oracle enumeration capped at {_ORACLE_MAX_CELLS} cells, got {num_cells}")
    if any(not 0 <= d < t for d in digits):
        raise ValueError(f"digits must lie in 0..{t - 1}: {tuple(digits)}")
    groups: dict[Perm, set[RelTuple]] = {}
    for asc in _consistent_orders(num_cells, digits, t, pi):
        perm, rel = _project(asc, num_cells, t)
        groups.setdefault(perm, set()).add(rel)
    return groups


def state_oracle(digits: Sequence[int], t: int, pi: Perm | None = None) -> State:
    """State after a digit prefix, by exhaustive enumeration of cell orders.

    Independent of the successor rule: every relative order of the cells is
    built directly and projected onto (tracked order, relation set).  With
    no ``pi`` the prefix must pin the tracked order on its own; prefixes
    that leave it open raise, use ``state_oracle_set`` for those.
    """
    groups = _oracle_groups(digits, t, pi)
    if not groups:
        raise ValueError(f"no cell order realizes digits {tuple(digits)}")
    if len(groups) > 1:
        raise ValueError(
            f"digit prefix {tuple(digits)} does not determine the tracked order; "
            "condition on a head permutation"
        )
    ((perm, rels),) = groups.items()
    return State(perm=perm, tuples=frozenset(rels))


def state_oracle_set(digits: Sequence[int], t: int) -> frozenset[State]:
    groups = _oracle_groups(digits, t, None)
    return frozenset(State(perm=p, tuples=frozenset(r)) for p, r in groups.items())


@lru_cache(maxsize=None)
def _initial_cached(digits: tuple[int, ...], t: int, pi: Perm | None) -> State:
    return state_oracle(digits, t, pi)


def initial_state(digits: Sequence[int], t: int, pi: Perm | None = None) -> State:
    """First state of a word, brute-forced over the 2t-2 leading cells."""
    digits = tuple(digits)
    if len(digits) != t - 1:
        raise ValueError(f"initial state needs exactly t-1 = {t - 1} digits, got {len(digits)}")
    return _initial_cached(digits, t, tuple(pi) if pi is not None else None)


@lru_cache(maxsize=None)
def _initial_set_cached(digits: tuple[int, ...], t: int) -> frozenset[State]:
    return state_oracle_set(digits, t)


def initial_states(digits: Sequence[int], t: int) -> frozenset[State]:
    """Every initial state a digit prefix admits, one per tracked order."""
    digits = tuple(digits)
    if len(digits) != t - 1:
        raise ValueError(f"initial states need exactly t-1 = {t - 1} digits, got {len(digits)}")
    return _initial_set_cached(digits, t)


@lru_cache(maxsize=None)
def reachable_states(t: int) -> frozenset[State]:
    """Closure of every initial state under the successor rule."""
    frontier: set[State] = set()
    for prefix in itertools.product(range(t), repeat=t - 1):
        frontier |= initial_states(prefix, t)
    seen = set(frontier)
    while frontier:
        nxt = set()
        for s in frontier:
            for d in range(t):
                s2 = successor(s, d)
                if s2 not in seen:
                    seen.add(s2)
                    nxt.add(s2)
        frontier = nxt
    return frozenset(seen)


def pattern_forces_complete(pattern: Sequence[int], t: int) -> tuple[bool, State | None]:
    """Whether a digit factor always lands in a complete state.

    Runs the pattern from every reachable state.  Returns the landing state
    as well when it is unique.
    """
    pattern = tuple(pattern)
    if len(pattern) < t:
        raise ValueError(f"forcing patterns need length >= t = {t}, got {len(pattern)}")
    if any(not 0 <= d < t for d in pattern):
        raise ValueError(f"pattern digits must lie in 0..{t - 1}: {pattern}")
    landings = set()
    for s in reachable_states(t):
        end = chain(s, pattern)
        if not is_complete(end):
            return False, None
        landings.add(end)
    landing = next(iter(landings)) if len(landings) == 1 else None
    return True, landing


def find_completing_pattern(t: int, max_len: int) -> set[tuple[int, ...]]:
    """All forcing patterns of length t..max_len with growth rate below t."""
    from .census import factor_automaton, spectral_radius

    if t > 4:
        raise ValueError(f"pattern search is kept enumerable for t <= 4, got {t}")
    if max_len > 8:
        raise ValueError(f"pattern search is capped at length 8, got {max_len}")
    found = set()
    for r in range(t, max_len + 1):
        for pattern in itertools.product(range(t), repeat=r):
            forces, _ = pattern_forces_complete(pattern, t)
            if not forces:
                continue
            beta = spectral_radius(factor_automaton(pattern, t).matrix)
            if beta < t:
                found.add(pattern)
    return found


# Merging the tracked tail cells with the head cells -------------------------
#
# At the end of a word the tracked cells are the last t-1 ones.  A relation
# tuple, the tracked order, and a head order pi pin the merged order of all
# 2t-2 cells: a tracked cell with relation value x sits above exactly the x
# lowest head cells, and tracked cells sharing a value keep their mutual
# order.  The merged order yields the t-1 wrap windows that close the cycle.

Token = tuple[str, int]


def merged_ascending(pi: Perm, tail_perm: Perm, rel: RelTuple) -> list[Token]:
    t = len(pi) + 1
    head_asc = [("head", k) for k in reversed(pi)]
    tail_asc = [("tail", j) for j in reversed(tail_perm)]
    out: list[Token] = []
    for band in range(t):
        out.extend(tok for tok in tail_asc if rel[tok[1] - 1] == band)
        if band < t - 1:
            out.append(head_asc[band])
    return out


def wrap_windows(pi: Perm, tail_perm: Perm, rel: RelTuple) -> tuple[tuple[int, ...], tuple[Perm, ...]]:
    """Digits and window permutations of the t-1 cycle-closing windows.

    Window k (1-based) spans tail block positions k..t-1 followed by head
    block positions 1..k; its newest cell is head cell k.
    """
    t = len(pi) + 1
    merged = merged_ascending(pi, tail_perm, rel)
    rank = {tok: r for r, tok in enumerate(merged)}
    digits = []
    perms = []
    for k in range(1, t):
        cells: list[Token] = [("tail", j) for j in range(k, t)] + [("head", m) for m in range(1, k + 1)]
        newest = ("head", k)
        digits.append(sum(1 for c in cells if c != newest and rank[c] < rank[newest]))
        desc = tuple(sorted(range(1, t + 1), key=lambda lbl: -rank[cells[lbl - 1]]))
        perms.append(desc)
    return tuple(digits), tuple(perms)


@lru_cache(maxsize=None)
def achievable_tails(state: State, pi: Perm) -> frozenset[tuple[int, ...]]:
    """Distinct wrap-digit tails a final state admits under a head order."""
    return frozenset(wrap_windows(pi, state.perm, rel)[0] for rel in state.tuples)


@dataclass(frozen=True)
class TailTable:
    """Wrap-digit tail sets of every complete state under every head order."""

    t: int
    tails: dict[tuple[State, Perm], frozenset[tuple[int, ...]]]

    def count(self, state: State, pi: Perm) -> int:
        return len(self.tails[(state, pi)])

    def row_sum(self, state: State) -> int:
        return sum(len(v) for (s, _), v in self.tails.items() if s == state)

    def column_sum(self, pi: Perm) -> int:
        return sum(len(v) for (_, p), v in self.tails.items() if p == pi)


def tail_table(t: int) -> TailTable:
    if not 2 <= t <= 4:
        raise ValueError(f"tail tables are kept enumerable for t in [2, 4], got {t}")
    tails = {}
    for state in complete_states(t):
        for pi in itertools.permutations(range(1, t)):
            tails[(state, pi)] = achievable_tails(state, pi)
    return TailTable(t=t, tails=tails)


def head_permutations(t: int) -> tuple[Perm, ...]:
    """All orders of the t-1 head cells, as rank permutations."""
    return tuple(itertools.permutations(range(1, t)))


__all__ = [
    "State",
    "TailTable",
    "achievable_tails",
    "chain",
    "complete_states",
    "find_completing_pattern",
    "head_permutations",
    "initial_state",
    "initial_states",
    "is_complete",
    "merged_ascending",
    "monotone_tuples",
    "pattern_forces_complete",
    "reachable_states",
    "state_oracle",
    "state_oracle_set",
    "successor",
    "tail_table",
    "wrap_windows",
]
