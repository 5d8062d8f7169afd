use super::{Color, ColorProblem, Stats, TailBlock};

const UNCOLORED: Color = Color::MAX;

/// The witness cache is cleared whenever one of the first
/// `CACHE_RESET_DEPTH` prefix vertices changes color. Counters are therefore
/// identical for any root depth up to this value.
pub const CACHE_RESET_DEPTH: usize = 8;

const CACHE_SLOTS: usize = 32;

// Witnesses kept for settling the prefix tail; one bit each.
type SlotSet = u128;
const SLOTS: usize = SlotSet::BITS as usize;

/// What to do once the head of the prefix is colored.
pub(crate) enum HeadStep {
    /// Enumerate the remaining prefix colorings one by one.
    Descend,
    /// Already settled; move on to the next head coloring.
    Skip,
    Stop,
}

/// Per-block buffers for settling the tail: the maximal color sets each
/// block can remove, each witness's colors on the block's outside
/// neighbors, and per option the witnesses that survive it.
#[derive(Default)]
struct TailScratch {
    head: Option<usize>,
    free: Vec<bool>,
    options: Vec<Vec<u64>>,
    rows: Vec<Vec<(SlotSet, usize)>>,
    choice: Vec<usize>,
    next: Vec<Vec<(SlotSet, usize)>>,
}

/// Mutable search state. Vertices are always colored in index order, so the
/// colored vertices form a prefix `0..v` and every uncolored vertex's mask
/// holds exactly the colors of its colored neighbors.
pub(crate) struct Search<'a> {
    p: &'a ColorProblem,
    color: Vec<Color>,
    // count[u * k + c]: colored earlier neighbors of u with color c
    count: Vec<u16>,
    forbid: Vec<u64>,
    avail: Vec<u64>,
    used: Vec<u8>,
    full: u64,
    // recent successful colorings of vertices t..n, most recent first
    witnesses: Vec<Vec<Color>>,
    // the first witness fitted the previous precoloring, which agrees with
    // the current one below `dirty_from`
    mru_valid: bool,
    dirty_from: usize,
    // generalized witnesses for the tail (a color set per outside vertex),
    // valid for the head coloring as of the last settle call, which agrees
    // with the current one below `head_dirty`
    slots: Vec<Vec<u64>>,
    tail: TailScratch,
    head_dirty: usize,
    check_masks: bool,
    pub stats: Stats,
}

#[inline]
fn low_bits(m: usize) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

impl<'a> Search<'a> {
    pub fn new(p: &'a ColorProblem, check_masks: bool) -> Self {
        let n = p.n();
        Search {
            p,
            color: vec![UNCOLORED; n],
            count: vec![0; n * p.k],
            forbid: vec![0; n],
            avail: vec![0; n + 1],
            used: vec![0; n + 1],
            full: low_bits(p.k),
            witnesses: Vec::with_capacity(CACHE_SLOTS),
            mru_valid: false,
            dirty_from: 0,
            slots: Vec::with_capacity(SLOTS),
            tail: TailScratch::default(),
            head_dirty: 0,
            check_masks,
            stats: Stats::default(),
        }
    }

    #[inline]
    fn assign(&mut self, v: usize, c: Color) {
        self.color[v] = c;
        let k = self.p.k;
        let bit = 1u64 << c;
        for &u in self.p.later_neighbors(v) {
            let u = u as usize;
            self.count[u * k + c as usize] += 1;
            self.forbid[u] |= bit;
        }
    }

    #[inline]
    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = UNCOLORED;
        let k = self.p.k;
        let bit = 1u64 << c;
        for &u in self.p.later_neighbors(v) {
            let u = u as usize;
            let slot = &mut self.count[u * k + c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.forbid[u] &= !bit;
            }
        }
    }

    /// True when some later neighbor of `v` has every color forbidden.
    #[inline]
    fn wipes_out_neighbor(&self, v: usize) -> bool {
        self.p.later_neighbors(v).iter().any(|&u| self.forbid[u as usize] == self.full)
    }

    /// Recomputes every uncolored vertex's mask from scratch and compares.
    fn assert_masks_coherent(&self) {
        for u in 0..self.p.n() {
            if self.color[u] != UNCOLORED {
                continue;
            }
            let expect = self
                .p
                .graph()
                .neighbors(u)
                .iter()
                .filter(|&&w| self.color[w] != UNCOLORED)
                .fold(0u64, |m, &w| m | (1u64 << self.color[w]));
            assert_eq!(self.forbid[u], expect, "forbidden mask of vertex {u} is stale");
        }
    }

    pub fn prefix_colors(&self, len: usize) -> Vec<Color> {
        self.color[..len].to_vec()
    }

    /// Candidate colors for prefix vertex `v` under the canonical rule. The
    /// second vertex of a twin pair never takes a smaller color than the
    /// first (strictly larger when the twins are adjacent).
    #[inline]
    fn prefix_candidates(&self, v: usize) -> u64 {
        let used = self.used[v] as usize;
        let mut mask = !self.forbid[v] & low_bits((used + 1).min(self.p.k));
        if self.p.is_twin_second(v) {
            mask &= !low_bits(self.color[v - 1] as usize);
        }
        mask
    }

    /// Walks the canonical colorings of vertices `0..upto` that start with
    /// `root`, calling `visit` on each; `visit` returns `false` to stop.
    /// Returns `false` when stopped early.
    pub fn enumerate(&mut self, root: &[Color], upto: usize, visit: impl FnMut(&mut Self) -> bool) -> bool {
        self.enumerate_split(root, upto, usize::MAX, |_| HeadStep::Descend, visit)
    }

    /// Like [`Search::enumerate`], but once vertices `0..head` are colored
    /// `at_head` decides whether to descend into the rest.
    pub fn enumerate_split(
        &mut self,
        root: &[Color],
        upto: usize,
        head: usize,
        mut at_head: impl FnMut(&mut Self) -> HeadStep,
        mut visit: impl FnMut(&mut Self) -> bool,
    ) -> bool {
        let r = root.len();
        debug_assert!(r <= upto && upto <= self.p.t);
        self.witnesses.clear();
        self.slots.clear();
        self.mru_valid = false;
        self.dirty_from = 0;
        self.head_dirty = 0;
        self.used[0] = 0;
        for (v, &c) in root.iter().enumerate() {
            self.assign(v, c);
            self.used[v + 1] = self.used[v].max(c + 1);
        }
        let unwind = |s: &mut Self| {
            for v in (0..r).rev() {
                s.unassign(v);
            }
        };
        if r == upto {
            self.stats.precolorings += 1;
            let go_on = visit(self);
            unwind(self);
            return go_on;
        }
        if r == head {
            match at_head(self) {
                HeadStep::Descend => {}
                HeadStep::Skip => {
                    unwind(self);
                    return true;
                }
                HeadStep::Stop => return false,
            }
        }
        let mut v = r;
        self.avail[v] = self.prefix_candidates(v);
        loop {
            let a = self.avail[v];
            if a == 0 {
                if v == r {
                    break;
                }
                v -= 1;
                self.unassign(v);
                continue;
            }
            let c = a.trailing_zeros() as Color;
            self.avail[v] = a & (a - 1);
            self.assign(v, c);
            self.dirty_from = self.dirty_from.min(v);
            self.head_dirty = self.head_dirty.min(v);
            if v < CACHE_RESET_DEPTH {
                self.witnesses.clear();
                self.slots.clear();
                self.mru_valid = false;
            }
            if v + 1 == upto {
                self.stats.precolorings += 1;
                if self.check_masks {
                    self.assert_masks_coherent();
                }
                if !visit(self) {
                    return false;
                }
                self.unassign(v);
                continue;
            }
            self.used[v + 1] = self.used[v].max(c + 1);
            if v + 1 == head {
                match at_head(self) {
                    HeadStep::Descend => {}
                    HeadStep::Skip => {
                        self.unassign(v);
                        continue;
                    }
                    HeadStep::Stop => return false,
                }
            }
            v += 1;
            self.avail[v] = self.prefix_candidates(v);
        }
        unwind(self);
        true
    }

    /// Number of canonical colorings of the tail blocks given the colors
    /// below them, which must all be assigned. Blocks share no edges, so
    /// they interact only through the number of colors in use.
    pub fn tail_count(&self, blocks: &[TailBlock]) -> u64 {
        let k = self.p.k;
        let Some(first) = blocks.first() else { return 1 };
        let mut ways = [0u128; 65];
        ways[self.used[first.first] as usize] = 1;
        for b in blocks {
            let mut next = [0u128; 65];
            for used in 0..=k {
                let w = ways[used];
                if w == 0 {
                    continue;
                }
                let mut firsts = !self.forbid[b.first] & low_bits((used + 1).min(k));
                while firsts != 0 {
                    let c1 = firsts.trailing_zeros() as usize;
                    firsts &= firsts - 1;
                    let u1 = used.max(c1 + 1);
                    if b.len == 1 {
                        next[u1] += w;
                        continue;
                    }
                    let mut second = !self.forbid[b.first + 1] & low_bits((u1 + 1).min(k)) & !low_bits(c1);
                    if b.adjacent {
                        second &= !(1u64 << c1);
                    }
                    // the second color only matters when it is new
                    let fresh = second & !low_bits(u1);
                    next[u1] += w * u128::from((second & low_bits(u1)).count_ones());
                    if fresh != 0 {
                        next[u1 + 1] += w * u128::from(fresh.count_ones());
                    }
                }
            }
            ways = next;
        }
        u64::try_from(ways.iter().sum::<u128>()).expect("tail count fits in 64 bits")
    }

    /// With everything below the tail `blocks` colored, decides whether
    /// every proper coloring of the blocks (canonical or not) extends.
    /// Returns `false` when undecided, in which case some tail coloring may
    /// fail and the caller enumerates them.
    ///
    /// A block acts on the rest only by removing its colors from its
    /// outside neighbors, so only its maximal removable color sets matter.
    /// A choice of sets is covered by a witness that uses none of the
    /// chosen colors next to the corresponding blocks; witnesses are added
    /// until every choice is covered.
    pub fn settle_tail(&mut self, blocks: &[TailBlock]) -> bool {
        let (t, full) = (self.p.t, self.full);
        let head = blocks[0].first;
        let dirty = std::mem::replace(&mut self.head_dirty, head);
        let p = self.p;
        let forbid = &self.forbid;
        self.slots.retain_mut(|w| {
            (dirty..head).all(|v| {
                p.outside_neighbors(v).iter().all(|&u| {
                    let m = &mut w[u as usize - t];
                    *m &= !forbid[u as usize];
                    *m != 0
                })
            })
        });
        let mut sc = std::mem::take(&mut self.tail);
        if sc.head != Some(head) {
            sc.head = Some(head);
            sc.free = free_vertices(p, blocks);
        }
        let m = blocks.len();
        sc.options.resize_with(m, Vec::new);
        sc.rows.resize_with(m, Vec::new);
        sc.choice.resize(m, 0);
        sc.next.resize_with(m, Vec::new);
        for (bi, b) in blocks.iter().enumerate() {
            let outside = p.outside_neighbors(b.first);
            let allowed = !self.forbid[b.first] & full;
            let open = outside.iter().fold(0u64, |acc, &u| acc | !self.forbid[u as usize]) & full;
            maximal_sets(allowed & open, b.len == 2, &mut sc.options[bi]);
            sc.rows[bi].clear();
            for (i, &o) in sc.options[bi].iter().enumerate() {
                let alive = self.slots.iter().enumerate().fold(0, |acc: SlotSet, (j, w)| {
                    let clear = outside.iter().all(|&u| w[u as usize - t] & !o != 0);
                    acc | (SlotSet::from(clear) << j)
                });
                sc.rows[bi].push((alive, i));
            }
        }
        // slots from earlier calls may be evicted, new ones may not
        let mut old = self.slots.len();
        let settled = loop {
            if !sc.find_uncovered(self.slots.len()) {
                break true;
            }
            let Some(w) = self.extend_tail(blocks, &sc) else { break false };
            let w = self.generalize(&w, &sc.free);
            if self.slots.len() == SLOTS {
                if old == 0 {
                    break false;
                }
                self.slots.remove(0);
                for row in &mut sc.rows {
                    for r in row.iter_mut() {
                        r.0 >>= 1;
                    }
                }
                old -= 1;
            }
            let bit: SlotSet = 1 << self.slots.len();
            for (bi, b) in blocks.iter().enumerate() {
                let outside = p.outside_neighbors(b.first);
                for r in sc.rows[bi].iter_mut() {
                    let o = sc.options[bi][r.1];
                    if outside.iter().all(|&u| w[u as usize - t] & !o != 0) {
                        r.0 |= bit;
                    }
                }
            }
            self.slots.push(w);
        };
        self.tail = sc;
        settled
    }

    /// Turns a witness into color sets per outside vertex: its own color,
    /// or for a free vertex every color its fixed neighbors and the head
    /// leave it. Free vertices are pairwise nonadjacent, so any pick from
    /// the sets is proper.
    fn generalize(&self, w: &[Color], free: &[bool]) -> Vec<u64> {
        let t = self.p.t;
        w.iter()
            .enumerate()
            .map(|(i, &c)| {
                if !free[i] {
                    return 1u64 << c;
                }
                let taken = self.p.graph().neighbors(t + i).iter().fold(self.forbid[t + i], |acc, &x| {
                    if x >= t && !free[x - t] {
                        acc | (1u64 << w[x - t])
                    } else {
                        acc
                    }
                });
                !taken & self.full
            })
            .collect()
    }

    /// Colors the tail blocks per `sc.choice` and searches for an
    /// extension.
    fn extend_tail(&mut self, blocks: &[TailBlock], sc: &TailScratch) -> Option<Vec<Color>> {
        let full = self.full;
        for (bi, b) in blocks.iter().enumerate() {
            let o = sc.options[bi][sc.choice[bi]];
            let allowed = !self.forbid[b.first] & full;
            let c1 = if o == 0 { allowed.trailing_zeros() } else { o.trailing_zeros() };
            self.assign(b.first, c1 as Color);
            if b.len == 2 {
                let rest = o & !(1u64 << c1);
                let c2 = if rest != 0 {
                    rest.trailing_zeros()
                } else if b.adjacent {
                    (!self.forbid[b.first + 1] & full).trailing_zeros()
                } else {
                    c1
                };
                self.assign(b.first + 1, c2 as Color);
            }
        }
        // cached witnesses rarely fit: the chosen sets were picked to
        // defeat the slots, which hold the recent ones
        let found = self.search_outside();
        for b in blocks.iter().rev() {
            for v in (b.first..b.first + b.len).rev() {
                self.unassign(v);
            }
        }
        found
    }

    /// With the prefix `0..t` colored, searches for colors on `t..n`.
    /// Leaves `t..n` uncolored on return.
    pub fn extend_rest(&mut self) -> bool {
        let (t, n) = (self.p.t, self.p.n());
        if t == n {
            return true;
        }
        let dirty = std::mem::replace(&mut self.dirty_from, t);
        if self.mru_valid {
            // only masks next to recolored prefix vertices can have changed
            let w = &self.witnesses[0];
            let still = (dirty..t).all(|v| {
                self.p.outside_neighbors(v).iter().all(|&u| self.forbid[u as usize] & (1u64 << w[u as usize - t]) == 0)
            });
            if still {
                self.stats.cache_hits += 1;
                return true;
            }
        }
        let hit = self.witnesses.iter().position(|w| {
            w.iter().enumerate().all(|(i, &c)| self.forbid[t + i] & (1u64 << c) == 0)
        });
        if let Some(i) = hit {
            self.stats.cache_hits += 1;
            if i > 0 {
                let w = self.witnesses.remove(i);
                self.witnesses.insert(0, w);
            }
            self.mru_valid = true;
            return true;
        }
        self.mru_valid = false;
        let Some(witness) = self.search_outside() else { return false };
        if self.witnesses.len() == CACHE_SLOTS {
            self.witnesses.pop();
        }
        self.witnesses.insert(0, witness);
        self.mru_valid = true;
        true
    }

    /// Depth-first search for colors on `t..n` under the current masks.
    /// Leaves `t..n` uncolored.
    fn search_outside(&mut self) -> Option<Vec<Color>> {
        let (t, n) = (self.p.t, self.p.n());
        if t == n {
            return Some(Vec::new());
        }
        if self.forbid[t..n].contains(&self.full) {
            return None;
        }
        let mut v = t;
        self.avail[v] = !self.forbid[v] & self.full;
        loop {
            let a = self.avail[v];
            if a == 0 {
                if v == t {
                    return None;
                }
                v -= 1;
                self.unassign(v);
                continue;
            }
            let c = a.trailing_zeros() as Color;
            self.avail[v] = a & (a - 1);
            self.assign(v, c);
            self.stats.nodes += 1;
            if self.check_masks {
                self.assert_masks_coherent();
            }
            if self.wipes_out_neighbor(v) {
                self.unassign(v);
                continue;
            }
            if v + 1 == n {
                let witness = self.color[t..n].to_vec();
                for w in (t..n).rev() {
                    self.unassign(w);
                }
                return Some(witness);
            }
            v += 1;
            self.avail[v] = !self.forbid[v] & self.full;
        }
    }

    /// Full coloring extending `prefix`, if any.
    pub fn extend_fixed(&mut self, prefix: &[Color]) -> Option<Vec<Color>> {
        let t = self.p.t;
        for (v, &c) in prefix.iter().enumerate() {
            self.assign(v, c);
        }
        self.dirty_from = 0;
        let result = if !self.extend_rest() {
            None
        } else if t == self.p.n() {
            Some(prefix.to_vec())
        } else {
            let mut full = prefix.to_vec();
            full.extend_from_slice(&self.witnesses[0]);
            Some(full)
        };
        for v in (0..t).rev() {
            self.unassign(v);
        }
        result
    }
}

/// Outside vertices next to exactly one tail block, thinned greedily to a
/// pairwise nonadjacent set. A witness may recolor them independently.
fn free_vertices(p: &ColorProblem, blocks: &[TailBlock]) -> Vec<bool> {
    let t = p.t;
    let mut touching = vec![0usize; p.n() - t];
    for b in blocks {
        for &u in p.outside_neighbors(b.first) {
            touching[u as usize - t] += 1;
        }
    }
    let mut free = vec![false; p.n() - t];
    for i in 0..free.len() {
        free[i] = touching[i] == 1 && p.graph().neighbors(t + i).iter().all(|&x| x < t || !free[x - t]);
    }
    free
}

/// The maximal color sets a block can take from `a`, the colors it may
/// use that some outside neighbor still has: single colors for a single
/// vertex, pairs for a twin pair. An empty `a` gives the empty set.
fn maximal_sets(a: u64, pair: bool, out: &mut Vec<u64>) {
    out.clear();
    if a == 0 {
        out.push(0);
        return;
    }
    if !pair || a.count_ones() == 1 {
        let mut rest = a;
        while rest != 0 {
            out.push(rest & rest.wrapping_neg());
            rest &= rest - 1;
        }
        return;
    }
    let mut r1 = a;
    while r1 != 0 {
        let low = r1 & r1.wrapping_neg();
        r1 &= r1 - 1;
        let mut r2 = r1;
        while r2 != 0 {
            out.push(low | (r2 & r2.wrapping_neg()));
            r2 &= r2 - 1;
        }
    }
}

impl TailScratch {
    /// Looks for a choice of one set per block that no witness survives,
    /// leaving it in `choice`.
    fn find_uncovered(&mut self, slots: usize) -> bool {
        let all = if slots == SLOTS { SlotSet::MAX } else { (1 << slots) - 1 };
        self.uncovered_from(0, all)
    }

    fn uncovered_from(&mut self, bi: usize, alive: SlotSet) -> bool {
        if alive == 0 {
            self.choice[bi..].fill(0);
            return true;
        }
        let m = self.options.len();
        if bi + 1 == m {
            return match self.rows[bi].iter().find(|&&(a, _)| alive & a == 0) {
                Some(&(_, i)) => {
                    self.choice[bi] = i;
                    true
                }
                None => false,
            };
        }
        // surviving sets after this block; only the minimal ones matter
        let mut next = std::mem::take(&mut self.next[bi]);
        next.clear();
        next.extend(self.rows[bi].iter().map(|&(a, i)| (alive & a, i)));
        next.sort_unstable_by_key(|&(a, _)| (a.count_ones(), a));
        let mut kept = 0;
        for j in 0..next.len() {
            let (a, _) = next[j];
            if next[..kept].iter().all(|&(b, _)| b & !a != 0) {
                next[kept] = next[j];
                kept += 1;
            }
        }
        next.truncate(kept);
        let mut found = false;
        for &(a, i) in &next {
            self.choice[bi] = i;
            if self.uncovered_from(bi + 1, a) {
                found = true;
                break;
            }
        }
        self.next[bi] = next;
        found
    }
}
