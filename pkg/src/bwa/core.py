"""Black-white array: an ordered dynamic multiset backed by two flat arrays.

The structure keeps a *white* array of ``2**cap_exp`` slots and a *black*
scratch array of half that length.  Both are cut into segments: the segment
of rank ``i`` spans indices ``[2**i, 2**(i+1) - 1]`` and holds ``2**i``
slots (index 0 of either array is never used).  All live data sits in white
segments; the state variable ``total`` counts the slots of those segments,
and its binary form is the whole configuration: rank ``i`` is active exactly
when bit ``i`` of ``total`` is set.

Inserting therefore behaves like incrementing a binary counter.  A new value
lands in the rank-0 slot when that bit is clear; otherwise it goes to the
black scratch slot and a carry chain of segment merges runs until it reaches
the first inactive rank.  Deletion voids a slot in place; when a segment's
occupancy falls to half, its survivors are demoted one rank down (and merged
back up if the lower rank was taken), which keeps every active segment
strictly more than half full.

Thread-safety: none is provided.  Mutating calls need exclusive access;
read-only calls (search, bounds, extremes, interval, iteration, stats,
validate) may run concurrently with each other when no writer is active.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

import numpy as np


class GrowthPolicy(Enum):
    """What insert does when every slot of every rank is spoken for."""

    GROW = "grow"
    FIXED = "fixed"


class CapacityExceeded(RuntimeError):
    """Insert into a full array under the fixed growth policy."""


@dataclass
class Counters:
    """Cost instrumentation.

    ``comparisons`` counts element-order comparisons only (void checks are
    free); ``moves`` counts slot writes, void padding included.
    """

    comparisons: int = 0
    moves: int = 0
    merges: int = 0
    demotes: int = 0
    grows: int = 0

    def reset(self) -> None:
        self.comparisons = 0
        self.moves = 0
        self.merges = 0
        self.demotes = 0
        self.grows = 0


@dataclass(frozen=True)
class Stats:
    size: int                      # occupied slots
    slot_count: int                # active slots, voids included (== total)
    occupancy: dict[int, float]    # active rank -> occupied fraction
    capacity: int


def merge_comparisons(b, w) -> int:
    """Element comparisons a two-pointer merge of sorted runs performs.

    Ties are drawn from ``b`` first.  Every emitted element costs one
    comparison until one run is exhausted; the surviving tail is copied for
    free, so the count is ``len(b) + len(w)`` minus that tail.
    """
    nb, nw = len(b), len(w)
    if nb == 0 or nw == 0:
        return 0
    if b[-1] <= w[-1]:
        tail = nw - int(np.searchsorted(w, b[-1], side="left"))
    else:
        tail = nb - int(np.searchsorted(b, w[-1], side="right"))
    return nb + nw - tail


class BlackWhiteArray:
    """Ordered multiset over numeric values with amortized-logarithmic ops.

    Slots live in numpy arrays; a boolean mask marks which slots hold a
    value, so voids never occupy a value of the element domain.  Values must
    be totally ordered under the array dtype (``int64`` by default, any
    numeric dtype works).

    ``cap_exp`` is the capacity exponent: the white array holds
    ``2**cap_exp`` slots of which ``2**cap_exp - 1`` are usable.
    """

    _SMALL_MERGE = 64  # segment length at or below which merges run in Python

    def __init__(self, cap_exp: int, policy: GrowthPolicy | str = GrowthPolicy.GROW,
                 dtype=np.int64) -> None:
        if cap_exp < 1:
            raise ValueError("cap_exp must be at least 1 (no segment would exist)")
        self.cap_exp = cap_exp
        self.policy = GrowthPolicy(policy)
        self.dtype = np.dtype(dtype)
        n = 1 << cap_exp
        self._white = np.zeros(n, dtype=self.dtype)
        self._wmask = np.zeros(n, dtype=bool)
        self._black = np.zeros(n >> 1, dtype=self.dtype)
        self._occ = [0] * cap_exp       # occupied-slot count per white rank
        self._total = 0
        self.counters = Counters()

    # -- bookkeeping views ------------------------------------------------

    @property
    def total(self) -> int:
        """Slot count of all active segments, void slots included."""
        return self._total

    @property
    def capacity(self) -> int:
        return 1 << self.cap_exp

    @property
    def occupancy(self) -> tuple[int, ...]:
        """Occupied-slot count per rank (zero on inactive ranks)."""
        return tuple(self._occ)

    def __len__(self) -> int:
        return sum(self._occ)

    def __contains__(self, value) -> bool:
        return self.search(value) is not None

    def __iter__(self) -> Iterator:
        return self.iter_sorted()

    def __repr__(self) -> str:
        return (f"{type(self).__name__}(len={len(self)}, total={self._total}, "
                f"capacity=2**{self.cap_exp})")

    def seg_bounds(self, rank: int) -> tuple[int, int]:
        """First and last slot index of the segment of ``rank``."""
        if not 0 <= rank < self.cap_exp:
            raise ValueError(f"rank {rank} outside [0, {self.cap_exp - 1}]")
        s = 1 << rank
        return s, (s << 1) - 1

    def is_active(self, rank: int) -> bool:
        """Whether the white segment of ``rank`` holds live data."""
        if not 0 <= rank < self.cap_exp:
            raise ValueError(f"rank {rank} outside [0, {self.cap_exp - 1}]")
        return bool((self._total >> rank) & 1)

    def rank_of(self, index: int) -> int:
        """Rank of the segment containing a white-array index."""
        if not 1 <= index < (1 << self.cap_exp):
            raise ValueError(f"index {index} outside [1, {(1 << self.cap_exp) - 1}]")
        return index.bit_length() - 1

    def segment_slots(self, rank: int) -> list:
        """Slot contents of an active segment, ``None`` marking voids."""
        s, t = self.seg_bounds(rank)
        if not self.is_active(rank):
            raise ValueError(f"rank {rank} is not active")
        vals = self._white[s:t + 1].tolist()
        mask = self._wmask[s:t + 1].tolist()
        return [v if o else None for v, o in zip(vals, mask)]

    # -- construction -----------------------------------------------------

    @classmethod
    def from_values(cls, values, cap_exp: Optional[int] = None,
                    policy: GrowthPolicy | str = GrowthPolicy.GROW,
                    dtype=np.int64) -> "BlackWhiteArray":
        """Bulk constructor: the exact state that inserting ``values`` in
        order would reach, built with one sort per active rank.

        The carry-chain dynamics put the first ``2**i`` values (for the
        highest set bit ``i`` of the count) into the rank-``i`` segment, the
        next block into the next set bit's segment, and so on; sorting each
        block directly reproduces that state.  Counters stay at zero.
        """
        arr = np.asarray(values, dtype=dtype)
        n = int(arr.size)
        if cap_exp is None:
            cap_exp = max(1, n.bit_length())
        if n >= 1 << cap_exp:
            raise ValueError(f"{n} values exceed capacity {(1 << cap_exp) - 1}")
        bwa = cls(cap_exp, policy=policy, dtype=dtype)
        offset = 0
        for rank in range(n.bit_length() - 1, -1, -1):
            if not (n >> rank) & 1:
                continue
            size = 1 << rank
            bwa._white[size:size << 1] = np.sort(arr[offset:offset + size])
            bwa._wmask[size:size << 1] = True
            bwa._occ[rank] = size
            offset += size
        bwa._total = n
        return bwa

    # -- mutation ---------------------------------------------------------

    def insert(self, value) -> None:
        """Add one value; duplicates accumulate."""
        total = self._total
        if total == (1 << self.cap_exp) - 1:
            if self.policy is GrowthPolicy.FIXED:
                raise CapacityExceeded(
                    f"all {total} usable slots of a 2**{self.cap_exp}-slot "
                    "structure are in use")
            self._grow()
        ctr = self.counters
        if total & 1 == 0:
            self._white[1] = value
            self._wmask[1] = True
            self._occ[0] = 1
            ctr.moves += 1
        else:
            self._black[1] = value
            ctr.moves += 1
            # binary carry of total+1: merge upward while the next rank is taken
            rank = 0
            bits = total >> 1
            carry = 1
            while bits & 1:
                carry = self._merge(rank, to_black=True, black_n=carry)
                self._occ[rank] = 0
                rank += 1
                bits >>= 1
            n = self._merge(rank, to_black=False, black_n=carry)
            self._occ[rank] = 0
            self._occ[rank + 1] = n
        self._total = total + 1

    def delete(self, value) -> Optional[int]:
        """Void one occurrence; returns the slot index it held, or None."""
        idx = self.search(value)
        if idx is None:
            return None
        self._delete_at(idx)
        return idx

    def extract_min(self):
        """Remove and return the smallest value, or None when empty."""
        return self._extract(largest=False)

    def extract_max(self):
        """Remove and return the largest value, or None when empty."""
        return self._extract(largest=True)

    # -- queries ------------------------------------------------------------

    def search(self, value) -> Optional[int]:
        """White-array index of one occurrence of ``value``, or None.

        Active segments are probed from the highest rank down, which ends
        sooner on average when a value is stored more than once.
        """
        t = self._total
        for rank in range(t.bit_length() - 1, -1, -1):
            if (t >> rank) & 1:
                idx = self._segment_search(value, rank)
                if idx is not None:
                    return idx
        return None

    def minimum(self):
        """Smallest stored value, or None when empty."""
        found = self._extreme_slot(largest=False)
        return None if found is None else found[0]

    def maximum(self):
        """Largest stored value, or None when empty."""
        found = self._extreme_slot(largest=True)
        return None if found is None else found[0]

    def lower_bound(self, value):
        """Smallest stored value strictly greater than ``value``, or None."""
        return self._bound(value, above=True)

    def upper_bound(self, value):
        """Largest stored value strictly smaller than ``value``, or None."""
        return self._bound(value, above=False)

    def interval(self, lo, hi) -> list:
        """All stored values in ``[lo, hi]`` ascending, duplicates included."""
        if lo > hi:
            raise ValueError(f"interval requires lo <= hi, got ({lo}, {hi})")
        runs = []
        t = self._total
        rank = 0
        while t:
            if t & 1:
                left = self._edge(lo, rank, above=True, strict=False)
                if left is not None:
                    right = self._edge(hi, rank, above=False, strict=False)
                    if right is not None and right >= left:
                        seg = self._white[left:right + 1]
                        m = self._wmask[left:right + 1]
                        runs.append(seg.tolist() if m.all() else seg[m].tolist())
            t >>= 1
            rank += 1
        return list(heapq.merge(*runs))

    def iter_sorted(self) -> Iterator:
        """All stored values ascending: a multiway merge of the active
        segments, which are each already sorted."""
        runs = []
        t = self._total
        rank = 0
        while t:
            if t & 1:
                s = 1 << rank
                seg = self._white[s:s << 1]
                m = self._wmask[s:s << 1]
                runs.append(seg.tolist() if m.all() else seg[m].tolist())
            t >>= 1
            rank += 1
        return heapq.merge(*runs)

    def stats(self) -> Stats:
        occupancy = {}
        t = self._total
        rank = 0
        while t:
            if t & 1:
                occupancy[rank] = self._occ[rank] / (1 << rank)
            t >>= 1
            rank += 1
        return Stats(size=sum(self._occ), slot_count=self._total,
                     occupancy=occupancy, capacity=1 << self.cap_exp)

    def validate(self) -> list[str]:
        """Recheck every structural invariant from the raw slots.

        Returns violation messages; an empty list means the state is sound.
        """
        problems = []
        cap = 1 << self.cap_exp
        if self._white.size != cap or self._black.size != cap >> 1:
            problems.append(
                f"array shapes ({self._white.size}, {self._black.size}) do not "
                f"match capacity 2**{self.cap_exp} with black half of white")
        if not 0 <= self._total < cap:
            problems.append(f"total {self._total} outside [0, {cap - 1}]")
        if len(self._occ) != self.cap_exp:
            problems.append("occupancy vector length differs from cap_exp")
        for rank in range(min(self.cap_exp, len(self._occ))):
            s = 1 << rank
            if not (self._total >> rank) & 1:
                if self._occ[rank] != 0:
                    problems.append(
                        f"rank {rank}: inactive but occupancy count is "
                        f"{self._occ[rank]} (total/active mismatch)")
                continue
            m = self._wmask[s:s << 1]
            n = int(m.sum())
            if n != self._occ[rank]:
                problems.append(
                    f"rank {rank}: {n} occupied slots found, "
                    f"{self._occ[rank]} recorded (total/active mismatch)")
            if rank == 0:
                if n != 1:
                    problems.append("rank 0: active but its slot is void")
            elif n << 1 <= s:
                problems.append(
                    f"rank {rank}: occupancy {n}/{s} not above one half")
            if n > 1:
                seg = self._white[s:s << 1]
                vals = seg if n == s else seg[m]
                if not bool((vals[1:] >= vals[:-1]).all()):
                    problems.append(f"rank {rank}: occupied slots not sorted")
        return problems

    def dump(self) -> str:
        """One line per active segment, highest rank first:
        ``rank=<r> [v,...]`` with ``·`` marking void slots."""
        lines = []
        for rank in range(self.cap_exp - 1, -1, -1):
            if not (self._total >> rank) & 1:
                continue
            s = 1 << rank
            vals = self._white[s:s << 1].tolist()
            mask = self._wmask[s:s << 1].tolist()
            cells = ",".join(str(v) if o else "·" for v, o in zip(vals, mask))
            lines.append(f"rank={rank} [{cells}]")
        return "\n".join(lines)

    # -- internals ----------------------------------------------------------

    def _grow(self) -> None:
        n = self._white.size
        self._white = np.concatenate([self._white, np.zeros(n, dtype=self.dtype)])
        self._wmask = np.concatenate([self._wmask, np.zeros(n, dtype=bool)])
        self._black = np.concatenate([self._black, np.zeros(n >> 1, dtype=self.dtype)])
        self._occ.append(0)
        self.cap_exp += 1
        self.counters.grows += 1

    def _merge(self, rank: int, to_black: bool, black_n: int) -> int:
        """Merge the black and white segments of ``rank`` into the rank+1
        segment of the destination array.

        Only occupied slots take part; they land contiguously from the
        destination segment's first index and the white tail is void-padded.
        Black occupied slots always form a prefix of their segment (every
        writer lays them down contiguously), so ``black_n`` fully describes
        the black side and the black array needs no mask.  Returns the
        occupied count written.  Never touches ``total`` or the occupancy
        vector; callers own that bookkeeping.
        """
        ctr = self.counters
        ctr.merges += 1
        s = 1 << rank
        e = s << 1            # source end (exclusive) == destination start

        if rank == 0:
            # single-slot sources; both are occupied in every call path
            b = self._black[1]
            w = self._white[1]
            ctr.comparisons += 1
            if b <= w:
                lo, hi = b, w
            else:
                lo, hi = w, b
            if to_black:
                self._black[2] = lo
                self._black[3] = hi
            else:
                self._white[2] = lo
                self._white[3] = hi
                self._wmask[2] = True
                self._wmask[3] = True
            ctr.moves += 2
            return 2

        dst = self._black if to_black else self._white
        wn = self._occ[rank]
        wseg = self._white[s:e]
        if e - s <= self._SMALL_MERGE:
            b = self._black[s:s + black_n].tolist()
            w = wseg.tolist() if wn == s else wseg[self._wmask[s:e]].tolist()
            nb, nw = black_n, len(w)
            out = []
            i = j = 0
            cmps = 0
            while i < nb and j < nw:
                cmps += 1
                x, y = b[i], w[j]
                if x <= y:
                    out.append(x)
                    i += 1
                else:
                    out.append(y)
                    j += 1
            out += b[i:] if i < nb else w[j:]
            n = len(out)
            dst[e:e + n] = out
            ctr.comparisons += cmps
        else:
            b = self._black[s:s + black_n]
            w = wseg if wn == s else wseg[self._wmask[s:e]]
            ctr.comparisons += merge_comparisons(b, w)
            merged = np.concatenate([b, w])
            merged.sort()
            n = merged.size
            dst[e:e + n] = merged
        if not to_black:
            self._wmask[e:e + n] = True
            self._wmask[e + n:e << 1] = False
        ctr.moves += e        # destination segment length
        return n

    def _demote(self, rank: int) -> None:
        """Move a half-empty segment's survivors one rank down.

        Requires occupancy exactly half, so the survivors fill the lower
        segment completely.  If the lower rank already holds data the
        survivors go to black scratch and a merge puts everything back into
        the white segment of ``rank``; either way occupancy ends above 75%.
        """
        s = 1 << rank
        half = s >> 1
        ctr = self.counters
        ctr.demotes += 1
        vals = self._white[s:s << 1][self._wmask[s:s << 1]]
        if (self._total >> (rank - 1)) & 1:
            self._black[half:s] = vals
            ctr.moves += half
            n = self._merge(rank - 1, to_black=False, black_n=half)
            self._occ[rank] = n
            self._occ[rank - 1] = 0
        else:
            self._white[half:s] = vals
            self._wmask[half:s] = True
            ctr.moves += half
            self._occ[rank - 1] = self._occ[rank]
            self._occ[rank] = 0
        self._total -= half

    def _delete_at(self, idx: int) -> None:
        rank = idx.bit_length() - 1
        self._wmask[idx] = False
        self.counters.moves += 1
        occ = self._occ[rank] - 1
        self._occ[rank] = occ
        if rank == 0:
            self._total -= 1          # sole slot voided: deactivate in place
        elif occ << 1 <= 1 << rank:
            self._demote(rank)

    def _nearest_occupied(self, mid: int, lo: int, hi: int) -> Optional[int]:
        # Closest occupied slot to mid within [lo, hi].  Ties probe above
        # first so that a probe landing on `lo` proves (lo, hi) is all void.
        wmask = self._wmask
        if wmask[mid]:
            return mid
        d = 1
        while True:
            up = mid + d
            down = mid - d
            up_ok = up <= hi
            if up_ok and wmask[up]:
                return up
            down_ok = down >= lo
            if down_ok and wmask[down]:
                return down
            if not (up_ok or down_ok):
                return None
            d += 1

    def _segment_search(self, value, rank: int) -> Optional[int]:
        # Void-aware bisection: one ordering comparison per level, equality
        # checks only on the final one or two candidate slots.
        white = self._white
        wmask = self._wmask
        ctr = self.counters
        s = 1 << rank
        t = (s << 1) - 1
        while t - s > 1:
            p = self._nearest_occupied((s + t) >> 1, s, t)
            if p is None:
                return None
            ctr.comparisons += 1
            if white[p] <= value:
                if p == s:
                    break             # interior all void; only s and t remain
                s = p
            else:
                if p == s:
                    return None       # smallest occupied already too large
                t = p - 1
        if wmask[s]:
            ctr.comparisons += 1
            if white[s] == value:
                return s
        if t != s and wmask[t]:
            ctr.comparisons += 1
            if white[t] == value:
                return t
        return None

    def _edge(self, value, rank: int, above: bool, strict: bool) -> Optional[int]:
        # Boundary bisection over the occupied subsequence of one segment.
        # above: leftmost occupied index whose value is > value (>= when not
        # strict); otherwise rightmost with value < value (<=).
        white = self._white
        ctr = self.counters
        lo = 1 << rank
        hi = (lo << 1) - 1
        best = None
        while lo <= hi:
            p = self._nearest_occupied((lo + hi) >> 1, lo, hi)
            if p is None:
                break
            ctr.comparisons += 1
            x = white[p]
            if above:
                ok = x > value if strict else x >= value
            else:
                ok = x < value if strict else x <= value
            if ok:
                best = p
                if above:
                    hi = p - 1
                else:
                    lo = p + 1
            elif above:
                lo = p + 1
            else:
                hi = p - 1
        return best

    def _bound(self, value, above: bool):
        ctr = self.counters
        best = None
        t = self._total
        rank = 0
        while t:
            if t & 1:
                p = self._edge(value, rank, above=above, strict=True)
                if p is not None:
                    x = self._white[p].item()
                    if best is None:
                        best = x
                    else:
                        ctr.comparisons += 1
                        if (x < best) if above else (x > best):
                            best = x
            t >>= 1
            rank += 1
        return best

    def _extreme_slot(self, largest: bool) -> Optional[tuple]:
        # Per active segment the extreme sits at the occupied slot nearest
        # the segment's top (largest) or bottom; then fold across segments.
        ctr = self.counters
        best = None
        best_idx = None
        t = self._total
        rank = 0
        while t:
            if t & 1:
                s = 1 << rank
                hi = (s << 1) - 1
                p = self._nearest_occupied(hi if largest else s, s, hi)
                if p is not None:
                    x = self._white[p].item()
                    if best is None:
                        best = x
                        best_idx = p
                    else:
                        ctr.comparisons += 1
                        if (x > best) if largest else (x < best):
                            best = x
                            best_idx = p
            t >>= 1
            rank += 1
        return None if best_idx is None else (best, best_idx)

    def _extract(self, largest: bool):
        found = self._extreme_slot(largest)
        if found is None:
            return None
        value, idx = found
        self._delete_at(idx)
        return value
