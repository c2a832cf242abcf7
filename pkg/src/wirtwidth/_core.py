"""Search and enumeration kernels.

This file is written in Cython pure-Python mode.  Built with Cython it
compiles to the extension ``wirtwidth._core`` that shadows this source;
without the extension the very same file runs as the plain-Python
fallback.  ``COMPILED`` reports which lane is active.

The kernels operate on flat integer arrays (see ``gauss.diagram_arrays``)
and implement only the hot loops:

* saturation closure of a colored strand set,
* lexicographic minimal-seed-subset search,
* raw depth-first enumeration of every completed coloring sequence with
  the structural invariant suite checked on each one,
* memoized branch-and-bound minimization of the attached-sequence total,
* the saturate-between-seeds heuristic search.

Witness event logs produced here are always re-verified by the pure
Python replay machinery in ``coloring``; the kernels are never trusted
unilaterally.

State conventions: ``col[s]`` is -1 or a small class id (seed order),
``mc[x]`` flags crossings currently multi-colored, and the running level
equals ``2 * (nseeds - nmc)`` at all times.  Event emission follows the
attached-sequence arithmetic: a seed emits the level after its +2 step,
every newly multi-colored crossing emits the level after its -2 step.
The scan order of saturation moves (ascending strand, lower crossing
first, restart after each applied move) must stay in sync with
``coloring.saturation_moves``.
"""

from __future__ import annotations

from array import array

try:
    import cython
except ImportError:  # pure lane without Cython installed
    from . import _cyshim as cython  # type: ignore[no-redef]

COMPILED: bool = cython.compiled

INF = 1 << 28

# violation bits reported by the oracle's in-loop invariant suite
V_PREFIX = 1
V_BALANCE = 2
V_CONNECT = 4
V_PEAK = 8
V_OVER = 16
V_MCDEPTH = 32


@cython.cclass
class DiagramKernel:
    n: cython.int
    u_prev: cython.int[:]
    u_next: cython.int[:]
    over_: cython.int[:]
    end0: cython.int[:]
    end1: cython.int[:]
    over_start: cython.int[:]
    over_list: cython.int[:]

    col: cython.int[:]
    mc: cython.uchar[:]
    newly: cython.int[:]
    n_newly: cython.int
    ncolored: cython.int
    nseeds: cython.int
    nmc: cython.int
    level: cython.int

    # undo frames, one per colored strand
    u_strand: cython.int[:]
    u_batch: cython.int[:]
    u_seed: cython.uchar[:]
    usp: cython.int

    # oracle bookkeeping
    spos: cython.int[:]
    xpos: cython.int[:]
    pos: cython.int
    arc_lo: cython.int[:]
    arc_hi: cython.int[:]
    violations: cython.int
    min_width: cython.int
    min_seeds: cython.int
    count_opt: cython.longlong
    n_logs: cython.longlong
    use_dedup: cython.bint
    dedup_seen: set

    # branch-and-bound bookkeeping
    memo: dict
    nodes: cython.longlong
    budget: cython.longlong
    aborted: cython.bint

    # heuristic bookkeeping
    hbest: cython.int
    htarget: cython.int
    hnodes: cython.longlong
    hbudget: cython.longlong
    seed_stack: list
    hbest_seeds: list

    # canonical-key scratch
    keybuf_obj: object
    keybuf: cython.uchar[:]
    remap: cython.int[:]

    def __init__(self, n, u_prev, u_next, over, end0, end1, over_start, over_list):
        if n < 1 or n > 250:
            raise ValueError(f"kernel supports 1..250 crossings, got {n}")
        self.n = n
        self.u_prev = u_prev
        self.u_next = u_next
        self.over_ = over
        self.end0 = end0
        self.end1 = end1
        self.over_start = over_start
        self.over_list = over_list

        self.col = array("i", [-1]) * n
        self.mc = bytearray(n)
        self.newly = array("i", [0]) * n
        self.u_strand = array("i", [0]) * n
        self.u_batch = array("i", [0]) * n
        self.u_seed = bytearray(n)
        self.spos = array("i", [0]) * n
        self.xpos = array("i", [0]) * n
        self.arc_lo = array("i", [0]) * n
        self.arc_hi = array("i", [0]) * n
        self.keybuf_obj = bytearray(n)
        self.keybuf = self.keybuf_obj
        self.remap = array("i", [0]) * n

        self.memo = {}
        self.dedup_seen = set()
        self.seed_stack = []
        self.hbest_seeds = []
        self.reset()

    def reset(self):
        i: cython.int
        for i in range(self.n):
            self.col[i] = -1
            self.mc[i] = 0
        self.n_newly = 0
        self.ncolored = 0
        self.nseeds = 0
        self.nmc = 0
        self.level = 0
        self.usp = 0
        self.pos = 0
        self.violations = 0

    # -- elementary state transitions -------------------------------------

    @cython.cfunc
    def _try_mc(self, x: cython.int, batch_start: cython.int) -> None:
        if self.mc[x]:
            return
        a: cython.int = self.u_prev[x]
        b: cython.int = self.u_next[x]
        v: cython.int = self.over_[x]
        if (
            self.col[a] >= 0
            and self.col[b] >= 0
            and self.col[v] >= 0
            and self.col[a] != self.col[b]
        ):
            self.mc[x] = 1
            self.nmc += 1
            # keep the batch ascending by crossing id
            j: cython.int = self.n_newly
            while j > batch_start and self.newly[j - 1] > x:
                self.newly[j] = self.newly[j - 1]
                j -= 1
            self.newly[j] = x
            self.n_newly += 1

    @cython.cfunc
    def _apply(self, q: cython.int, color: cython.int, is_seed: cython.bint) -> cython.int:
        """Color strand q; returns the attached values emitted."""
        emit: cython.int = 0
        if is_seed:
            self.nseeds += 1
            self.level += 2
            emit += self.level
        batch_start: cython.int = self.n_newly
        self.col[q] = color
        self.ncolored += 1
        c0: cython.int = self.end0[q]
        c1: cython.int = self.end1[q]
        self._try_mc(c0, batch_start)
        if c1 != c0:
            self._try_mc(c1, batch_start)
        i: cython.int
        x: cython.int
        for i in range(self.over_start[q], self.over_start[q + 1]):
            x = self.over_list[i]
            if x != c0 and x != c1:
                self._try_mc(x, batch_start)
        for i in range(batch_start, self.n_newly):
            self.level -= 2
            emit += self.level
        self.u_strand[self.usp] = q
        self.u_batch[self.usp] = batch_start
        self.u_seed[self.usp] = 1 if is_seed else 0
        self.usp += 1
        return emit

    @cython.cfunc
    def _undo(self) -> None:
        self.usp -= 1
        q: cython.int = self.u_strand[self.usp]
        batch_start: cython.int = self.u_batch[self.usp]
        i: cython.int
        for i in range(batch_start, self.n_newly):
            self.mc[self.newly[i]] = 0
            self.nmc -= 1
            self.level += 2
        self.n_newly = batch_start
        self.col[q] = -1
        self.ncolored -= 1
        if self.u_seed[self.usp]:
            self.nseeds -= 1
            self.level -= 2

    @cython.cfunc
    def _move_partner(self, q: cython.int, x: cython.int) -> cython.int:
        """The colored strand q would inherit from at crossing x, or -1."""
        a: cython.int = self.u_prev[x]
        b: cython.int = self.u_next[x]
        partner: cython.int = b if q == a else a
        if self.col[partner] < 0:
            return -1
        if self.col[self.over_[x]] < 0:
            return -1
        return partner

    @cython.cfunc
    def _saturate(self) -> cython.int:
        """Apply coloring moves until none is legal; returns emitted values.

        Scan rule mirrors coloring.saturation_moves exactly.
        """
        emit: cython.int = 0
        q: cython.int
        c0: cython.int
        c1: cython.int
        t: cython.int
        p: cython.int
        progress: cython.bint = True
        while progress:
            progress = False
            for q in range(self.n):
                if self.col[q] >= 0:
                    continue
                c0 = self.end0[q]
                c1 = self.end1[q]
                if c1 < c0:
                    t = c0
                    c0 = c1
                    c1 = t
                p = self._move_partner(q, c0)
                if p < 0 and c1 != c0:
                    p = self._move_partner(q, c1)
                if p >= 0:
                    emit += self._apply(q, self.col[p], False)
                    progress = True
                    break
        return emit

    @cython.cfunc
    def _lower_bound(self) -> cython.int:
        # cheapest possible remaining emission: the level walks straight down
        m: cython.int = self.nseeds - self.nmc
        return m * (m - 1)

    @cython.cfunc
    def _canon_key(self) -> bytes:
        """Partition signature: classes renumbered by first strand occurrence."""
        i: cython.int
        nxt: cython.int = 0
        c: cython.int
        r: cython.int
        for i in range(self.n):
            self.remap[i] = -1
        for i in range(self.n):
            c = self.col[i]
            if c < 0:
                self.keybuf[i] = 0
            else:
                r = self.remap[c]
                if r < 0:
                    r = nxt
                    self.remap[c] = r
                    nxt += 1
                self.keybuf[i] = r + 1
        return bytes(self.keybuf_obj)

    # -- minimal seed subsets (mask closure, colors irrelevant) -----------

    @cython.cfunc
    def _mu_dfs(self, remaining: cython.int, last: cython.int) -> cython.bint:
        if self.ncolored == self.n:
            return True
        if remaining == 0:
            return False
        q: cython.int
        mark: cython.int
        for q in range(last + 1, self.n):
            if self.col[q] >= 0:
                continue
            mark = self.usp
            self._apply(q, 0, False)
            self._saturate()
            self.seed_stack.append(q)
            if self._mu_dfs(remaining - 1, q):
                return True
            self.seed_stack.pop()
            while self.usp > mark:
                self._undo()
        return False

    # -- raw oracle enumeration -------------------------------------------

    @cython.cfunc
    def _check_completed(self) -> None:
        n: cython.int = self.n
        if self.nseeds == 1:
            if self.nmc != 0:
                self.violations |= V_BALANCE
            return
        if self.nseeds != self.nmc:
            self.violations |= V_BALANCE
        if self.level != 0:
            self.violations |= V_BALANCE
        # one height peak per color class; heights are minus the positions,
        # so a peak is a local minimum of spos along the class arc
        c: cython.int
        lo: cython.int
        hi: cython.int
        length: cython.int
        i: cython.int
        v: cython.int
        peaks: cython.int
        left_ok: cython.bint
        right_ok: cython.bint
        for c in range(self.nseeds):
            lo = self.arc_lo[c]
            hi = self.arc_hi[c]
            length = (hi - lo + n) % n + 1
            peaks = 0
            for i in range(length):
                v = self.spos[(lo + i) % n]
                left_ok = i == 0 or v < self.spos[(lo + i - 1) % n]
                right_ok = i == length - 1 or v < self.spos[(lo + i + 1) % n]
                if left_ok and right_ok:
                    peaks += 1
            if peaks != 1:
                self.violations |= V_PEAK
        # over-strand above the lower under-strand at single-colored crossings
        x: cython.int
        pa: cython.int
        pb: cython.int
        for x in range(n):
            if not self.mc[x]:
                pa = self.spos[self.u_prev[x]]
                pb = self.spos[self.u_next[x]]
                if pb > pa:
                    pa = pb
                if self.spos[self.over_[x]] >= pa:
                    self.violations |= V_OVER

    @cython.cfunc
    def _ostep(
        self,
        q: cython.int,
        color: cython.int,
        is_seed: cython.bint,
        total: cython.longlong,
    ) -> None:
        n: cython.int = self.n
        if is_seed:
            color = self.nseeds
            self.arc_lo[color] = q
            self.arc_hi[color] = q
        else:
            if q == (self.arc_hi[color] + 1) % n:
                self.arc_hi[color] = q
            elif q == (self.arc_lo[color] + n - 1) % n:
                self.arc_lo[color] = q
            else:
                self.violations |= V_CONNECT
        batch_start: cython.int = self.n_newly
        emit: cython.int = self._apply(q, color, is_seed)
        self.pos += 1
        self.spos[q] = self.pos
        i: cython.int
        x: cython.int
        top: cython.int
        for i in range(batch_start, self.n_newly):
            x = self.newly[i]
            self.pos += 1
            self.xpos[x] = self.pos
            top = self.spos[self.u_prev[x]]
            if self.spos[self.u_next[x]] > top:
                top = self.spos[self.u_next[x]]
            if self.spos[self.over_[x]] > top:
                top = self.spos[self.over_[x]]
            if self.xpos[x] <= top:
                self.violations |= V_MCDEPTH
        if self.level < 0:
            self.violations |= V_PREFIX
        self._odfs(total + emit)
        self.pos -= 1 + (self.n_newly - batch_start)
        self._undo()
        if not is_seed:
            if q == self.arc_hi[color]:
                self.arc_hi[color] = (q + n - 1) % n
            elif q == self.arc_lo[color]:
                self.arc_lo[color] = (q + 1) % n

    @cython.cfunc
    def _odfs(self, total: cython.longlong) -> None:
        if self.ncolored == self.n:
            self.n_logs += 1
            self._check_completed()
            w: cython.int = total
            if w < self.min_width:
                self.min_width = w
                self.count_opt = 1
            elif w == self.min_width:
                self.count_opt += 1
            if self.nseeds < self.min_seeds:
                self.min_seeds = self.nseeds
            return
        if self.use_dedup:
            state = (self._canon_key(), total)
            if state in self.dedup_seen:
                return
            self.dedup_seen.add(state)
        q: cython.int
        c0: cython.int
        c1: cython.int
        t: cython.int
        p: cython.int
        for q in range(self.n):
            if self.col[q] >= 0:
                continue
            c0 = self.end0[q]
            c1 = self.end1[q]
            if c1 < c0:
                t = c0
                c0 = c1
                c1 = t
            p = self._move_partner(q, c0)
            if p >= 0:
                self._ostep(q, self.col[p], False, total)
            if c1 != c0:
                p = self._move_partner(q, c1)
                if p >= 0:
                    self._ostep(q, self.col[p], False, total)
        for q in range(self.n):
            if self.col[q] < 0:
                self._ostep(q, 0, True, total)

    # -- branch-and-bound exact width ---------------------------------------

    @cython.cfunc
    def _edfs(self, threshold: cython.int) -> cython.int:
        """Minimal remaining emission, exact when the result is < threshold;
        any result >= threshold is only a valid lower bound."""
        lb: cython.int = self._lower_bound()
        if lb >= threshold:
            return lb
        if self.ncolored == self.n:
            return 0
        key: bytes = self._canon_key()
        cached = self.memo.get(key)
        packed: cython.int
        v: cython.int
        if cached is not None:
            packed = cached
            v = packed >> 1
            if packed & 1:
                return v
            if v >= threshold:
                return v
        if self.nodes >= self.budget:
            self.aborted = True
            return lb
        self.nodes += 1
        best: cython.int = INF
        q: cython.int
        c0: cython.int
        c1: cython.int
        t: cython.int
        p: cython.int
        emit: cython.int
        cap: cython.int
        r: cython.int
        for q in range(self.n):
            if self.col[q] >= 0:
                continue
            c0 = self.end0[q]
            c1 = self.end1[q]
            if c1 < c0:
                t = c0
                c0 = c1
                c1 = t
            p = self._move_partner(q, c0)
            if p >= 0:
                emit = self._apply(q, self.col[p], False)
                cap = threshold if threshold < best else best
                r = emit + self._edfs(cap - emit)
                self._undo()
                if r < best:
                    best = r
                if self.aborted:
                    return best if best < INF else lb
            if c1 != c0:
                p = self._move_partner(q, c1)
                if p >= 0:
                    emit = self._apply(q, self.col[p], False)
                    cap = threshold if threshold < best else best
                    r = emit + self._edfs(cap - emit)
                    self._undo()
                    if r < best:
                        best = r
                    if self.aborted:
                        return best if best < INF else lb
        for q in range(self.n):
            if self.col[q] >= 0:
                continue
            emit = self._apply(q, self.nseeds, True)
            cap = threshold if threshold < best else best
            r = emit + self._edfs(cap - emit)
            self._undo()
            if r < best:
                best = r
            if self.aborted:
                return best if best < INF else lb
        if best < threshold:
            self.memo[key] = (best << 1) | 1
        else:
            cached = self.memo.get(key)
            if cached is None or (cached >> 1) < best:
                self.memo[key] = best << 1
        return best

    @cython.cfunc
    def _probe(self, want: cython.int) -> cython.bint:
        if want < 0:
            return False
        if self.ncolored == self.n:
            return want == 0
        cached = self.memo.get(self._canon_key())
        if cached is None:
            return False
        packed: cython.int = cached
        if not packed & 1:
            return False
        return (packed >> 1) == want

    def _reconstruct(self):
        """Walk the memo table along one optimal path, in tie-break order:
        coloring moves before seeds, lower strand then lower crossing first."""
        events = []
        n: cython.int = self.n
        q: cython.int
        c0: cython.int
        c1: cython.int
        t: cython.int
        p: cython.int
        emit: cython.int
        rem: cython.int
        while self.ncolored < n:
            cached = self.memo.get(self._canon_key())
            if cached is None or not (cached & 1):
                return None
            rem = cached >> 1
            found = False
            for q in range(n):
                if self.col[q] >= 0:
                    continue
                c0 = self.end0[q]
                c1 = self.end1[q]
                if c1 < c0:
                    t = c0
                    c0 = c1
                    c1 = t
                p = self._move_partner(q, c0)
                if p >= 0:
                    emit = self._apply(q, self.col[p], False)
                    if self._probe(rem - emit):
                        events.append(("M", q, p, c0))
                        found = True
                        break
                    self._undo()
                if c1 != c0:
                    p = self._move_partner(q, c1)
                    if p >= 0:
                        emit = self._apply(q, self.col[p], False)
                        if self._probe(rem - emit):
                            events.append(("M", q, p, c1))
                            found = True
                            break
                        self._undo()
            if not found:
                for q in range(n):
                    if self.col[q] >= 0:
                        continue
                    emit = self._apply(q, self.nseeds, True)
                    if self._probe(rem - emit):
                        events.append(("S", q))
                        found = True
                        break
                    self._undo()
            if not found:
                return None
        return events

    # -- saturate-between-seeds heuristic ---------------------------------

    @cython.cfunc
    def _hdfs(self, depth: cython.int, total: cython.int) -> None:
        if self.ncolored == self.n:
            if total < self.hbest:
                self.hbest = total
                self.hbest_seeds = list(self.seed_stack)
            return
        if depth >= self.htarget:
            return
        q: cython.int
        mark: cython.int
        emit: cython.int
        for q in range(self.n):
            if self.col[q] >= 0:
                continue
            if self.hnodes >= self.hbudget:
                return
            self.hnodes += 1
            mark = self.usp
            emit = self._apply(q, self.nseeds, True)
            emit += self._saturate()
            self.seed_stack.append(q)
            if total + emit + self._lower_bound() < self.hbest:
                self._hdfs(depth + 1, total + emit)
            self.seed_stack.pop()
            while self.usp > mark:
                self._undo()


# ---------------------------------------------------------------------------
# Entry points


def make_kernel(arrays: dict) -> DiagramKernel:
    return DiagramKernel(
        arrays["n"],
        arrays["u_prev"],
        arrays["u_next"],
        arrays["over"],
        arrays["end0"],
        arrays["end1"],
        arrays["over_start"],
        arrays["over_list"],
    )


def closure_strands(kernel: DiagramKernel, seeds) -> list:
    """Strands colored after seeding ``seeds`` up-front and saturating."""
    kernel.reset()
    for q in seeds:
        if kernel.col[q] < 0:
            kernel._apply(q, 0, False)
    kernel._saturate()
    out = [s for s in range(kernel.n) if kernel.col[s] >= 0]
    kernel.reset()
    return out


def min_seed_subset(kernel: DiagramKernel, k_max: cython.int):
    """Smallest seed set (lexicographic-first) whose closure is everything,
    trying sizes 1..k_max; None if no subset of size <= k_max works."""
    k: cython.int
    for k in range(1, k_max + 1):
        kernel.reset()
        kernel.seed_stack = []
        if kernel._mu_dfs(k, -1):
            seeds = list(kernel.seed_stack)
            kernel.reset()
            return seeds
    kernel.reset()
    return None


def oracle_enumerate(kernel: DiagramKernel, dedup: cython.bint = False):
    """Exhaustive enumeration of all completed coloring sequences.

    Returns (min_width, min_seed_count, count_of_optimal_logs,
    logs_enumerated, violation_bits).  With ``dedup`` the repeated
    (partition, accumulated total) states are expanded once; the minima
    stay exact but the log count and the invariant coverage drop to the
    surviving representatives.
    """
    kernel.reset()
    kernel.min_width = INF
    kernel.min_seeds = INF
    kernel.count_opt = 0
    kernel.n_logs = 0
    kernel.use_dedup = dedup
    kernel.dedup_seen = set()
    kernel._odfs(0)
    result = (
        kernel.min_width,
        kernel.min_seeds,
        kernel.count_opt,
        kernel.n_logs,
        kernel.violations,
    )
    kernel.reset()
    kernel.dedup_seen = set()
    return result


def exact_search(kernel: DiagramKernel, budget, init_ub: cython.int):
    """Branch-and-bound below ``init_ub``.

    Returns (status, value, nodes, events): status "exact" carries the
    minimal total and a witness event list; "at_bound" proves the minimum
    is >= init_ub (value is the proven lower bound); "budget" means the
    node budget ran out first.
    """
    kernel.reset()
    kernel.memo = {}
    kernel.nodes = 0
    kernel.budget = budget
    kernel.aborted = False
    r: cython.int = kernel._edfs(init_ub)
    nodes = kernel.nodes
    if kernel.aborted:
        kernel.reset()
        kernel.memo = {}
        return ("budget", None, nodes, None)
    if r >= init_ub:
        kernel.reset()
        kernel.memo = {}
        return ("at_bound", r, nodes, None)
    kernel.reset()
    events = kernel._reconstruct()
    kernel.reset()
    kernel.memo = {}
    return ("exact", r, nodes, events)


def heuristic_search(kernel: DiagramKernel, target_seeds: cython.int, budget):
    """Best ordered seed tuple (saturating between seeds) within budget.

    Returns (total, seeds, nodes); total is INF when no tuple of at most
    target_seeds seeds completed the coloring within the budget.
    """
    kernel.reset()
    kernel.seed_stack = []
    kernel.hbest = INF
    kernel.hbest_seeds = []
    kernel.htarget = target_seeds
    kernel.hnodes = 0
    kernel.hbudget = budget
    kernel._hdfs(0, 0)
    result = (kernel.hbest, list(kernel.hbest_seeds), kernel.hnodes)
    kernel.reset()
    return result
