"""Binary direction words, factor avoidance and period structure.

Words are plain strings over the two letters ``>`` (a forward step) and
``<`` (a backward step); a word of length k describes an orientation of
the path on k edges.  A finite set of forbidden factors A determines the
hereditary language of A-free words, realized here by a deterministic
suffix-window automaton.  On top of that sit the period computations:
which lengths k admit a k-word all of whose powers stay A-free, and the
arithmetic structure (gcd, threshold, finite exception list) of that set
when the language is transitive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import product

from .graphs import OrientedGraph, connected_components

FWD = ">"
BWD = "<"
ALPHABET = FWD + BWD


def is_factor(a: str, b: str) -> bool:
    """True iff a occurs contiguously in b (the empty word is a factor of all)."""
    return a in b


def word_to_path(w: str) -> OrientedGraph:
    """Oriented path on |w|+1 vertices: arc i -> i+1 for '>', reversed for '<'."""
    arcs = set()
    for i, c in enumerate(w):
        if c == FWD:
            arcs.add((i, i + 1))
        elif c == BWD:
            arcs.add((i + 1, i))
        else:
            raise ValueError(f"letter {c!r} is not in the alphabet {ALPHABET!r}")
    return OrientedGraph(len(w) + 1, frozenset(arcs))


def path_to_word(p: OrientedGraph) -> frozenset:
    """The one or two words reading an oriented path from either end.

    Raises ValueError if p is not an orientation of a path.  A single
    vertex gives {""}; palindromic-up-to-reversal paths give one word,
    all others two.
    """
    deg = {v: 0 for v in range(p.n)}
    for u, v in p.arcs:
        deg[u] += 1
        deg[v] += 1
    if len(p.arcs) != p.n - 1 or len(connected_components(p)) != 1 \
            or any(d > 2 for d in deg.values()):
        raise ValueError("not an orientation of a path")
    if p.n == 1:
        return frozenset({""})
    ends = [v for v, d in deg.items() if d == 1]
    nbr = {v: set() for v in range(p.n)}
    for u, v in p.arcs:
        nbr[u].add(v)
        nbr[v].add(u)
    words = set()
    for start in ends:
        seq = [start]
        prev = None
        while len(seq) < p.n:
            nxt = next(w for w in nbr[seq[-1]] if w != prev)
            prev = seq[-1]
            seq.append(nxt)
        words.add("".join(FWD if (a, b) in p.arcs else BWD
                          for a, b in zip(seq, seq[1:])))
    return frozenset(words)


@dataclass(frozen=True)
class FactorSet:
    """Normalized set of nonempty forbidden factors.

    Members containing another member as a factor are dropped (forbidding
    the shorter word already excludes every word containing the longer).
    """

    members: frozenset = frozenset()
    alphabet: str = ALPHABET

    def __post_init__(self):
        for w in self.members:
            if not w:
                raise ValueError("the empty word cannot be a forbidden factor")
            if any(c not in self.alphabet for c in w):
                raise ValueError(f"word {w!r} uses letters outside {self.alphabet!r}")
        minimal = frozenset(
            w for w in self.members
            if not any(v != w and v in w for v in self.members))
        object.__setattr__(self, "members", minimal)

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)


def forbidden_factor_set(F) -> FactorSet:
    """Word encodings (both traversals) of every path-shaped member of F.

    Members whose underlying graph is not a path contribute nothing.  A
    single-vertex member would encode as the empty word and is rejected.
    """
    words = set()
    for h in F:
        try:
            ws = path_to_word(h)
        except ValueError:
            continue
        if "" in ws:
            raise ValueError("a single-vertex member has an empty word encoding")
        words |= ws
    return FactorSet(frozenset(words))


def is_A_free(w: str, A: FactorSet) -> bool:
    return not any(a in w for a in A.members)


def sync_bound(A: FactorSet) -> int:
    """Max member length (1 for an empty set); joining bound of the language.

    Two A-free words overlapping in a middle segment of at least this
    length splice into an A-free word.
    """
    return max((len(a) for a in A.members), default=1)


class FactorAutomaton:
    """Deterministic acceptor of A-free words.

    The state after reading w is the longest suffix of w of length at most
    window = (max factor length) - 1, or w itself while shorter; a word is
    A-free iff its run never dies.  States are exactly the A-free words of
    length <= window (every one is reached by reading itself).
    """

    def __init__(self, factors: FactorSet):
        self.factors = factors
        self.alphabet = factors.alphabet
        self.window = sync_bound(factors) - 1
        states = []
        transitions = {}
        queue = [""]
        seen = {""}
        while queue:
            s = queue.pop(0)
            states.append(s)
            for c in self.alphabet:
                w = s + c
                if any(w.endswith(a) for a in factors.members):
                    transitions[(s, c)] = None
                    continue
                t = w[-self.window:] if self.window else ""
                transitions[(s, c)] = t
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        self.states = tuple(states)
        self.transitions = transitions
        self.root = ""

    def step(self, state, letter):
        return self.transitions.get((state, letter))

    def run(self, word, start=""):
        """Final state after reading word from start, or None if the run dies."""
        s = start
        for c in word:
            s = self.transitions.get((s, c))
            if s is None:
                return None
        return s

    def accepts(self, word: str) -> bool:
        return self.run(word) is not None

    def full_states(self):
        """States of maximal window length; closed walks live here."""
        return tuple(s for s in self.states if len(s) == self.window)

    def reachable_from(self, state):
        seen = {state}
        stack = [state]
        while stack:
            s = stack.pop()
            for c in self.alphabet:
                t = self.transitions.get((s, c))
                if t is not None and t not in seen:
                    seen.add(t)
                    stack.append(t)
        return seen


@lru_cache(maxsize=None)
def automaton(A: FactorSet) -> FactorAutomaton:
    """Shared read-only automaton for A (built once per factor set)."""
    return FactorAutomaton(A)


def has_free_word(A: FactorSet, k: int) -> bool:
    """True iff some k-letter word is A-free."""
    aut = automaton(A)
    layer = {aut.root}
    for _ in range(k):
        layer = {aut.step(s, c) for s in layer for c in aut.alphabet}
        layer.discard(None)
        if not layer:
            return False
    return True


def is_transitive(A: FactorSet) -> bool:
    """Decide whether any two A-free words a, b admit a joint a+d+b.

    Whether a+d+b is A-free depends only on the suffix window of a, and b
    is readable from a state iff its first window-many letters are; both
    windows range over the automaton's states, so the universally
    quantified definition reduces to finitely many reachability queries:
    for every state s and every state p, some state reachable from s must
    read p without dying.
    """
    aut = automaton(A)
    for s in aut.states:
        reach = aut.reachable_from(s)
        for p in aut.states:
            if not any(aut.run(p, start=t) is not None for t in reach):
                return False
    return True


def is_periodic(w: str, A: FactorSet) -> bool:
    """True iff every power of w is A-free.

    Tests w**K for K = ceil(mhat/|w|) + 1 with mhat the max factor length:
    any forbidden factor of the infinite power fits inside that many
    consecutive copies, so the single test decides all powers at once.
    """
    if not w:
        raise ValueError("periodicity is defined for nonempty words only")
    K = -(-sync_bound(A) // len(w)) + 1
    return is_A_free(w * K, A)


# ---------------------------------------------------------------------------
# closed-walk reachability over the full-window states
#
# Boolean matrices are lists of row bitmasks over the full states; the
# de Bruijn-like walk graph has an arc s -> t labelled c when reading c
# from s survives.  A k-word with all powers A-free corresponds exactly
# to a closed k-walk (the word's windows), nonconstant words to closed
# walks using both letters.


def _letter_matrices(aut: FactorAutomaton):
    full = aut.full_states()
    index = {s: i for i, s in enumerate(full)}
    mats = {}
    for c in aut.alphabet:
        rows = [0] * len(full)
        for s in full:
            t = aut.step(s, c)
            if t is not None:
                rows[index[s]] |= 1 << index[t]
        mats[c] = rows
    return full, mats


def _mat_mul(A, B):
    out = []
    for row in A:
        acc = 0
        bits = row
        while bits:
            j = (bits & -bits).bit_length() - 1
            acc |= B[j]
            bits &= bits - 1
        out.append(acc)
    return out


def _mat_or(A, B):
    return [a | b for a, b in zip(A, B)]


def _has_diag(M):
    return any(M[i] >> i & 1 for i in range(len(M)))


class _WalkCalculator:
    """Incremental closed-walk existence for lengths 1..k."""

    def __init__(self, A: FactorSet):
        aut = automaton(A)
        self.full, mats = _letter_matrices(aut)
        self.fmat = mats[FWD]
        self.bmat = mats[BWD]
        self.amat = _mat_or(self.fmat, self.bmat)
        self.k = 0
        self.any_k = None    # walks of length k
        self.fwd_k = None    # walks using only '>'
        self.bwd_k = None    # walks using only '<'
        self.both_k = None   # walks using both letters

    def advance(self):
        if self.k == 0:
            self.any_k = self.amat
            self.fwd_k = self.fmat
            self.bwd_k = self.bmat
            self.both_k = [0] * len(self.full)
        else:
            self.any_k = _mat_mul(self.any_k, self.amat)
            self.both_k = _mat_or(
                _mat_mul(self.both_k, self.amat),
                _mat_or(_mat_mul(self.fwd_k, self.bmat),
                        _mat_mul(self.bwd_k, self.fmat)))
            self.fwd_k = _mat_mul(self.fwd_k, self.fmat)
            self.bwd_k = _mat_mul(self.bwd_k, self.bmat)
        self.k += 1

    def closed(self, nonconstant: bool) -> bool:
        return _has_diag(self.both_k if nonconstant else self.any_k)


def enumerate_periods(A: FactorSet, k_max: int, nonconstant_only: bool = False):
    """Lengths k <= k_max admitting a (nonconstant) k-word with all powers A-free.

    Short lengths (below the automaton window) are checked by direct word
    enumeration; from the window upward a closed-walk reachability pass
    over the full-window states decides each length.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    aut = automaton(A)
    out = set()
    low = min(k_max, max(aut.window - 1, 0))
    for k in range(1, low + 1):
        for letters in product(A.alphabet, repeat=k):
            w = "".join(letters)
            if nonconstant_only and len(set(w)) < 2:
                continue
            if is_periodic(w, A):
                out.add(k)
                break
    walk = _WalkCalculator(A)
    for k in range(1, k_max + 1):
        walk.advance()
        if k > low and walk.closed(nonconstant_only):
            out.add(k)
    return out


def periodic_word(A: FactorSet, k: int, nonconstant: bool = False):
    """A concrete k-word with all powers A-free, or None.

    Searches closed k-walks over the full-window states, tracking which
    letters a walk has used; deterministic (states scanned in order, '>'
    tried before '<').
    """
    if k < 1:
        raise ValueError("period length must be >= 1")
    aut = automaton(A)
    for s0 in aut.full_states():
        # layer maps (state, used-letter bits) -> (prev state, prev bits, letter)
        layers = [{(s0, 0): None}]
        for step in range(k):
            cur = {}
            for state, flags in sorted(layers[step]):
                for bit, c in enumerate(ALPHABET):
                    t = aut.step(state, c)
                    if t is None:
                        continue
                    key = (t, flags | (1 << bit))
                    if key not in cur:
                        cur[key] = (state, flags, c)
            layers.append(cur)
        for state, flags in sorted(layers[k]):
            if state != s0 or (nonconstant and flags != 3):
                continue
            letters = []
            key = (state, flags)
            for step in range(k, 0, -1):
                pstate, pflags, c = layers[step][key]
                letters.append(c)
                key = (pstate, pflags)
            w = "".join(reversed(letters))
            if not is_periodic(w, A):
                raise AssertionError("reconstructed walk is not periodic")
            return w
    return None


# ---------------------------------------------------------------------------
# period structure


@dataclass(frozen=True)
class PeriodStructure:
    """Arithmetic description of the (nonconstant) period set.

    When transitive is set the period set is exactly the positive
    multiples of gcd_r minus the finite exceptions list, every exception
    lying below threshold_t0.  gcd_r == 0 encodes the empty period set.
    When transitive is not set only `observed` (the enumerated sample up
    to verified_to) carries information; no structural claim is made.
    """

    gcd_r: int
    threshold_t0: int
    exceptions: tuple
    transitive: bool
    nonconstant_variant: bool
    observed: tuple = ()
    verified_to: int = 0

    def __post_init__(self):
        if self.transitive:
            for e in self.exceptions:
                if self.gcd_r == 0 or e % self.gcd_r or e >= self.threshold_t0:
                    raise ValueError(
                        f"bad exception {e} for r={self.gcd_r}, t0={self.threshold_t0}")

    def contains(self, k: int) -> bool:
        """Predicted membership of k in the period set (transitive case only)."""
        if not self.transitive:
            raise ValueError("no structural prediction for a non-transitive language")
        return self.gcd_r > 0 and k >= 1 and k % self.gcd_r == 0 \
            and k not in self.exceptions


def _tarjan_sccs(nodes, succ):
    """Strongly connected components (Tarjan, iterative), in discovery order."""
    index = {}
    low = {}
    on_stack = set()
    stack = []
    sccs = []
    counter = [0]
    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(succ(root)))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(comp)
    return sccs


def _structural_gcd(A: FactorSet, nonconstant: bool) -> int:
    """gcd of the period set, from SCC cycle structure of the walk graph.

    Every closed walk lives inside one SCC, and the closed-walk lengths of
    an SCC realize exactly the multiples of its cycle gcd (eventually), so
    the period-set gcd is the gcd over SCCs that contain a cycle; for the
    nonconstant variant only SCCs carrying both letters contribute.
    """
    aut = automaton(A)
    full = aut.full_states()

    def succ(s):
        return [t for c in aut.alphabet
                if (t := aut.step(s, c)) is not None and len(t) == aut.window]

    r = 0
    for comp in _tarjan_sccs(full, succ):
        members = set(comp)
        internal = [(s, t, c) for s in comp for c in aut.alphabet
                    if (t := aut.step(s, c)) is not None and t in members]
        if not internal:
            continue
        if nonconstant and len({c for _, _, c in internal}) < 2:
            continue
        # cycle gcd via BFS levels: every internal arc contributes
        # level(u) + 1 - level(v)
        root = comp[0]
        level = {root: 0}
        queue = [root]
        while queue:
            v = queue.pop(0)
            for c in aut.alphabet:
                t = aut.step(v, c)
                if t in members and t not in level:
                    level[t] = level[v] + 1
                    queue.append(t)
        p = 0
        for s, t, _ in internal:
            p = math.gcd(p, level[s] + 1 - level[t])
        r = math.gcd(r, p)
    return r


def _semigroup_threshold(B, r) -> int:
    """Least T >= 0 with every multiple of r >= T a nonnegative combination of B."""
    lo, hi = min(B), max(B)
    limit = lo * hi // r + hi + r
    reach = bytearray(limit + 1)
    reach[0] = 1
    for s in range(1, limit + 1):
        reach[s] = any(s >= b and reach[s - b] for b in B)
    worst = 0
    for m in range(r, limit + 1 - lo, r):
        if not reach[m]:
            worst = m
    if any(not reach[m] for m in range(worst + r, worst + r + lo, r) if m <= limit):
        raise AssertionError("semigroup window not covered; limit too small")
    return worst + r if worst else 0


def _certified_threshold(A: FactorSet, r: int, nonconstant: bool) -> int:
    """A bound beyond which every multiple of r is certified to be a period.

    Realizes the joining construction: concrete periodic words of lengths
    B (gcd r, each at least the sync bound), shortest connector words
    between consecutive ones found by automaton search, and a numerical
    semigroup threshold for the positive combinations of B.
    """
    aut = automaton(A)
    mhat = sync_bound(A)
    B = []
    g = 0
    periods = enumerate_periods(A, max(4 * mhat + 64, 64), nonconstant)
    hi = max(4 * mhat + 64, 64)
    k = max(mhat, 1)
    while g != r:
        if k > hi:
            hi *= 2
            if hi > 100_000:
                raise RuntimeError("could not realize the period gcd from samples")
            periods = enumerate_periods(A, hi, nonconstant)
        if k in periods and math.gcd(g, k) != g:
            B.append(k)
            g = math.gcd(g, k)
        k += 1
    alphas = [periodic_word(A, b, nonconstant) for b in B]
    if any(a is None for a in alphas):
        raise AssertionError("missing periodic witness for a sampled period")
    # shortest connectors around the cyclic chain alpha_1 ... alpha_j alpha_1
    total_connector = 0
    for i in range(len(alphas)):
        src = aut.run(alphas[i])
        dst_word = alphas[(i + 1) % len(alphas)]
        seen = {src}
        frontier = [(src, 0)]
        found = None
        while frontier:
            state, dist = frontier.pop(0)
            if aut.run(dst_word, start=state) is not None:
                found = dist
                break
            for c in aut.alphabet:
                t = aut.step(state, c)
                if t is not None and t not in seen:
                    seen.add(t)
                    frontier.append((t, dist + 1))
        if found is None:
            raise AssertionError("transitive language without a connector word")
        total_connector += found
    return total_connector + sum(B) + _semigroup_threshold(B, r)


def period_structure(A: FactorSet, nonconstant_only: bool = False,
                     verify_to: int = 300) -> PeriodStructure:
    """Arithmetic structure of the (nonconstant) period set of the A-free words.

    For a transitive language the period set is a cofinite subset of the
    multiples of its gcd; the returned threshold is certified by the
    joining construction and the whole prediction is cross-checked against
    enumeration up to max(threshold + 2 gcd, verify_to).  For a
    non-transitive language only enumerated data is returned.
    """
    trans = is_transitive(A)
    if not trans:
        observed = tuple(sorted(enumerate_periods(A, verify_to, nonconstant_only)))
        return PeriodStructure(
            gcd_r=reduce(math.gcd, observed, 0), threshold_t0=0, exceptions=(),
            transitive=False, nonconstant_variant=nonconstant_only,
            observed=observed, verified_to=verify_to)
    r = _structural_gcd(A, nonconstant_only)
    if r == 0:
        return PeriodStructure(0, 1, (), True, nonconstant_only, (), verify_to)
    t_cert = _certified_threshold(A, r, nonconstant_only)
    bound = max(t_cert + 2 * r, verify_to)
    observed = enumerate_periods(A, bound, nonconstant_only)
    exceptions = tuple(k for k in range(r, bound + 1, r) if k not in observed)
    if any(e >= t_cert for e in exceptions):
        raise AssertionError("certified threshold contradicted by enumeration")
    if any(k % r for k in observed):
        raise AssertionError("observed period off the gcd lattice")
    t0 = exceptions[-1] + r if exceptions else r
    return PeriodStructure(
        gcd_r=r, threshold_t0=t0, exceptions=exceptions, transitive=True,
        nonconstant_variant=nonconstant_only,
        observed=tuple(k for k in sorted(observed) if k <= verify_to),
        verified_to=bound)


# ---------------------------------------------------------------------------
# gcd / cofiniteness bookkeeping for sampled integer sets


@dataclass(frozen=True)
class TailClaim:
    """Declared behaviour of an integer set beyond its sampled range.

    kind "empty": nothing beyond the sample.  kind "multiples": beyond the
    sample the set is exactly the multiples of `modulus`.  kind
    "coinfinite": beyond any bound the set misses infinitely many
    multiples of its gcd.
    """

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind not in ("empty", "multiples", "coinfinite"):
            raise ValueError(f"unknown tail kind {self.kind!r}")
        if (self.kind == "multiples") != (self.modulus is not None):
            raise ValueError("modulus goes with kind 'multiples' only")


def gcd_and_cofiniteness(sample, tail: TailClaim):
    """(gcd r of the whole set, is it cofinite in r Z+?) from sample + tail.

    The gcd of an empty set is 0, in which case the cofiniteness verdict
    is vacuously true.  The declared tail is trusted, never inferred.
    """
    r_sample = reduce(math.gcd, sample, 0)
    if tail.kind == "empty":
        if r_sample == 0:
            return 0, True
        return r_sample, False
    if tail.kind == "multiples":
        r = math.gcd(r_sample, tail.modulus)
        return r, tail.modulus == r
    return r_sample, False
