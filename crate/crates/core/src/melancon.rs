//! Melançon's contraction algorithm.
//!
//! Blocks start as single letters. A block that is minimal under the policy
//! contracts into its left neighbor when that neighbor is strictly greater.
//! On a circle this ends with the unique member conjugate; on a line, a
//! leftmost block that is minimal is split off as the next factor instead.
//!
//! Two implementations are provided. [`BlockChain`] works pass by pass with
//! the minimum fixed for the pass and produces the traces. [`conjugate`] and
//! [`factorize`] use a priority queue over a linked list of blocks, in
//! O(|w| log |w|) comparisons.

use std::cell::{Cell, RefCell};
use std::cmp::Ordering;
use std::fmt;
use std::ops::Range;

use serde::Serialize;

use crate::error::Result;
use crate::factorization::{Factorization, Monotonicity};
use crate::fastfactor::ComparisonEngine;
use crate::policy::OrderPolicy;
use crate::word::{not_primitive_error, root_len, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Circular,
    Linear,
}

impl std::str::FromStr for Mode {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "circular" => Ok(Mode::Circular),
            "linear" => Ok(Mode::Linear),
            _ => Err(crate::error::Error::Parse {
                text: s.to_string(),
                reason: "expected circular or linear".into(),
            }),
        }
    }
}

/// Block comparisons over one base string, counted.
struct BlockOrder<'p> {
    base: Vec<Letter>,
    policy: &'p dyn OrderPolicy,
    engine: Option<ComparisonEngine>,
    comparisons: Cell<u64>,
}

impl<'p> BlockOrder<'p> {
    fn new(base: Vec<Letter>, policy: &'p dyn OrderPolicy) -> Self {
        let engine = policy
            .is_lexicographic()
            .then(|| ComparisonEngine::from_letters(&base));
        BlockOrder {
            base,
            policy,
            engine,
            comparisons: Cell::new(0),
        }
    }

    fn compare(&self, a: Range<usize>, b: Range<usize>) -> Ordering {
        self.comparisons.set(self.comparisons.get() + 1);
        self.compare_uncounted(a, b)
    }

    fn compare_uncounted(&self, a: Range<usize>, b: Range<usize>) -> Ordering {
        match &self.engine {
            Some(e) => e.compare(a, b),
            None => self.policy.compare(&self.base[a], &self.base[b]),
        }
    }

    /// Live check of `fg ≻ f ≻ g` for policies that promise it.
    fn check_growth(&self, f: Range<usize>, g: Range<usize>) {
        if cfg!(debug_assertions) && self.policy.nyldon_like() {
            let fg = f.start..f.end + g.len();
            assert_eq!(self.compare_uncounted(f.clone(), g.clone()), Ordering::Greater);
            assert_eq!(self.compare_uncounted(fg, f), Ordering::Greater);
        }
    }

    fn word(&self, alphabet: crate::word::Alphabet, r: Range<usize>) -> Word {
        Word::from_slice_unchecked(alphabet, &self.base[r])
    }
}

fn doubled(w: &Word) -> Vec<Letter> {
    let mut base = w.letters().to_vec();
    base.extend_from_slice(w.letters());
    base
}

/// One step available to a [`BlockChain`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// Split off the leftmost block as the next factor (linear mode).
    Emit,
    /// Contract the block at this index into its left neighbor; index 0 in
    /// circular mode contracts into the last block.
    Contract(usize),
}

/// Blocks of a word in chain order, as words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Snapshot {
    pub emitted: Vec<Word>,
    pub blocks: Vec<Word>,
}

impl fmt::Display for Snapshot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |ws: &[Word]| ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(", ");
        if self.emitted.is_empty() {
            f.write_str(&join(&self.blocks))
        } else {
            write!(f, "[{}] {}", join(&self.emitted), join(&self.blocks))
        }
    }
}

/// The pass-based chain of blocks.
pub struct BlockChain<'p> {
    source: Word,
    order: BlockOrder<'p>,
    blocks: Vec<Range<usize>>,
    emitted: Vec<Range<usize>>,
    mode: Mode,
    contractions: RefCell<Vec<(Range<usize>, Range<usize>)>>,
}

impl<'p> BlockChain<'p> {
    /// One block per letter. Circular chains require a primitive word.
    pub fn new(w: &Word, policy: &'p dyn OrderPolicy, mode: Mode) -> Result<Self> {
        w.require_nonempty()?;
        let base = match mode {
            Mode::Circular => {
                if root_len(w.letters()) != w.len() {
                    return Err(not_primitive_error(w));
                }
                doubled(w)
            }
            Mode::Linear => w.letters().to_vec(),
        };
        Ok(BlockChain {
            source: w.clone(),
            order: BlockOrder::new(base, policy),
            blocks: (0..w.len()).map(|i| i..i + 1).collect(),
            emitted: Vec::new(),
            mode,
            contractions: RefCell::new(Vec::new()),
        })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn blocks(&self) -> Vec<Word> {
        self.blocks.iter().map(|r| self.word(r.clone())).collect()
    }

    pub fn emitted(&self) -> Vec<Word> {
        self.emitted.iter().map(|r| self.word(r.clone())).collect()
    }

    pub fn snapshot(&self) -> Snapshot {
        Snapshot {
            emitted: self.emitted(),
            blocks: self.blocks(),
        }
    }

    pub fn comparisons(&self) -> u64 {
        self.order.comparisons.get()
    }

    pub fn is_done(&self) -> bool {
        match self.mode {
            Mode::Circular => self.blocks.len() == 1,
            Mode::Linear => self.blocks.is_empty(),
        }
    }

    fn word(&self, r: Range<usize>) -> Word {
        self.order.word(self.source.alphabet(), r)
    }

    fn minimum(&self) -> Range<usize> {
        let mut best = self.blocks[0].clone();
        for b in &self.blocks[1..] {
            if self.order.compare(b.clone(), best.clone()) == Ordering::Less {
                best = b.clone();
            }
        }
        best
    }

    fn is(&self, b: &Range<usize>, value: &Range<usize>, ord: Ordering) -> bool {
        self.order.compare(b.clone(), value.clone()) == ord
    }

    /// Every contraction so far as the pair `(f, g)` that became `fg`.
    pub fn contractions(&self) -> Vec<(Word, Word)> {
        self.contractions
            .borrow()
            .iter()
            .map(|(f, g)| (self.word(f.clone()), self.word(g.clone())))
            .collect()
    }

    fn merge(&self, f: &mut Range<usize>, g: Range<usize>) {
        self.order.check_growth(f.clone(), g.clone());
        self.contractions.borrow_mut().push((f.clone(), g.clone()));
        f.end += g.len();
    }

    /// Runs one pass. Returns `false` once the chain is finished.
    pub fn pass(&mut self) -> Result<bool> {
        if self.is_done() {
            return Ok(false);
        }
        let mu = self.minimum();
        let mut rest = std::mem::take(&mut self.blocks).into_iter().peekable();
        let mut out: Vec<Range<usize>> = Vec::new();
        match self.mode {
            Mode::Linear => {
                let head = rest.peek().cloned().unwrap();
                if self.is(&head, &mu, Ordering::Equal) {
                    while let Some(b) = rest.next_if(|b| self.is(b, &mu, Ordering::Equal)) {
                        self.emitted.push(b);
                    }
                    self.blocks = rest.collect();
                    return Ok(true);
                }
                out.push(rest.next().unwrap());
            }
            Mode::Circular => {
                let all: Vec<_> = rest.collect();
                if all.iter().all(|b| self.is(b, &mu, Ordering::Equal)) {
                    return Err(not_primitive_error(&self.source));
                }
                let (head, last) = (all[0].clone(), all[all.len() - 1].clone());
                let mut middle = all[1..all.len() - 1].to_vec();
                if self.is(&head, &mu, Ordering::Equal) && self.is(&head, &last, Ordering::Less) {
                    let mut grown = last;
                    self.merge(&mut grown, head);
                    middle.push(grown);
                } else {
                    middle.insert(0, head);
                    middle.push(last);
                }
                rest = middle.into_iter().peekable();
                out.push(rest.next().unwrap());
            }
        }
        for b in rest {
            let left = out.last_mut().unwrap();
            if self.order.compare(b.clone(), mu.clone()) == Ordering::Equal
                && self.order.compare(b.clone(), left.clone()) == Ordering::Less
            {
                let mut grown = left.clone();
                self.merge(&mut grown, b);
                *out.last_mut().unwrap() = grown;
            } else {
                out.push(b);
            }
        }
        self.blocks = out;
        Ok(true)
    }

    /// Every move allowed by the algorithm in the current state.
    pub fn moves(&self) -> Result<Vec<Move>> {
        if self.is_done() {
            return Ok(Vec::new());
        }
        let mu = self.minimum();
        let k = self.blocks.len();
        let mut moves = Vec::new();
        for i in 0..k {
            let b = &self.blocks[i];
            if !self.is(b, &mu, Ordering::Equal) {
                continue;
            }
            let left = match (i, self.mode) {
                (0, Mode::Linear) => {
                    moves.push(Move::Emit);
                    continue;
                }
                (0, Mode::Circular) => &self.blocks[k - 1],
                _ => &self.blocks[i - 1],
            };
            if self.is(b, left, Ordering::Less) {
                moves.push(Move::Contract(i));
            }
        }
        if moves.is_empty() {
            return Err(not_primitive_error(&self.source));
        }
        Ok(moves)
    }

    /// Applies a move previously returned by [`BlockChain::moves`].
    pub fn apply(&mut self, m: Move) {
        match m {
            Move::Emit => {
                let b = self.blocks.remove(0);
                self.emitted.push(b);
            }
            Move::Contract(0) => {
                let head = self.blocks.remove(0);
                let mut last = self.blocks.pop().unwrap();
                self.merge(&mut last, head);
                self.blocks.push(last);
            }
            Move::Contract(i) => {
                let b = self.blocks.remove(i);
                let mut left = self.blocks[i - 1].clone();
                self.merge(&mut left, b);
                self.blocks[i - 1] = left;
            }
        }
    }

    /// Runs passes to completion.
    pub fn run(&mut self) -> Result<()> {
        while self.pass()? {}
        Ok(())
    }

    /// The single remaining block (circular) or the emitted factors (linear).
    pub fn into_factorization(self) -> Factorization {
        let ranges = match self.mode {
            Mode::Circular => self.blocks,
            Mode::Linear => self.emitted,
        };
        let factors = ranges.into_iter().map(|r| self.order.word(self.source.alphabet(), r)).collect();
        Factorization::new(factors, self.order.policy.id(), Monotonicity::Nondecreasing)
    }
}

/// Pass-by-pass snapshots, starting with the single letters.
pub fn contraction_trace(w: &Word, policy: &dyn OrderPolicy, mode: Mode) -> Result<Vec<Snapshot>> {
    let mut chain = BlockChain::new(w, policy, mode)?;
    let mut trace = vec![chain.snapshot()];
    while chain.pass()? {
        trace.push(chain.snapshot());
    }
    Ok(trace)
}

/// A binary min-heap with an external comparator.
struct Heap<T> {
    items: Vec<T>,
}

impl<T> Heap<T> {
    fn push(&mut self, item: T, less: &impl Fn(&T, &T) -> bool) {
        self.items.push(item);
        let mut i = self.items.len() - 1;
        while i > 0 {
            let parent = (i - 1) / 2;
            if !less(&self.items[i], &self.items[parent]) {
                break;
            }
            self.items.swap(i, parent);
            i = parent;
        }
    }

    fn pop(&mut self, less: &impl Fn(&T, &T) -> bool) -> Option<T> {
        if self.items.is_empty() {
            return None;
        }
        let top = self.items.swap_remove(0);
        let n = self.items.len();
        let mut i = 0;
        loop {
            let (l, r) = (2 * i + 1, 2 * i + 2);
            let mut m = i;
            if l < n && less(&self.items[l], &self.items[m]) {
                m = l;
            }
            if r < n && less(&self.items[r], &self.items[m]) {
                m = r;
            }
            if m == i {
                break;
            }
            self.items.swap(i, m);
            i = m;
        }
        Some(top)
    }
}

#[derive(Clone)]
struct Node {
    block: Range<usize>,
    prev: usize,
    next: usize,
    version: u32,
    alive: bool,
}

#[derive(Clone)]
struct Entry {
    node: usize,
    version: u32,
    block: Range<usize>,
}

/// Linked blocks plus a queue of (block, version) entries.
struct QueueChain<'p> {
    order: BlockOrder<'p>,
    nodes: Vec<Node>,
    heap: Heap<Entry>,
}

impl<'p> QueueChain<'p> {
    fn new(base: Vec<Letter>, len: usize, policy: &'p dyn OrderPolicy) -> Self {
        let nodes = (0..len)
            .map(|i| Node {
                block: i..i + 1,
                prev: (i + len - 1) % len,
                next: (i + 1) % len,
                version: 0,
                alive: true,
            })
            .collect();
        let mut chain = QueueChain {
            order: BlockOrder::new(base, policy),
            nodes,
            heap: Heap { items: Vec::with_capacity(2 * len) },
        };
        for i in 0..len {
            chain.push(i);
        }
        chain
    }

    fn less(&self) -> impl Fn(&Entry, &Entry) -> bool + '_ {
        |a, b| {
            self.order
                .compare(a.block.clone(), b.block.clone())
                .then(a.block.start.cmp(&b.block.start))
                == Ordering::Less
        }
    }

    fn push(&mut self, node: usize) {
        let n = &self.nodes[node];
        let e = Entry {
            node,
            version: n.version,
            block: n.block.clone(),
        };
        let mut heap = std::mem::replace(&mut self.heap, Heap { items: Vec::new() });
        heap.push(e, &self.less());
        self.heap = heap;
    }

    fn pop(&mut self) -> Option<usize> {
        let mut heap = std::mem::replace(&mut self.heap, Heap { items: Vec::new() });
        let mut found = None;
        while let Some(e) = heap.pop(&self.less()) {
            let n = &self.nodes[e.node];
            if n.alive && n.version == e.version {
                found = Some(e.node);
                break;
            }
        }
        self.heap = heap;
        found
    }

    fn cmp(&self, a: usize, b: usize) -> Ordering {
        self.order
            .compare(self.nodes[a].block.clone(), self.nodes[b].block.clone())
    }

    fn unlink(&mut self, x: usize) {
        let (p, q) = (self.nodes[x].prev, self.nodes[x].next);
        self.nodes[p].next = q;
        self.nodes[q].prev = p;
        self.nodes[x].alive = false;
    }

    /// Contracts `x` into its left neighbor.
    fn merge_left(&mut self, x: usize) -> usize {
        let p = self.nodes[x].prev;
        let g = self.nodes[x].block.clone();
        self.order.check_growth(self.nodes[p].block.clone(), g.clone());
        self.nodes[p].block.end += g.len();
        self.nodes[p].version += 1;
        self.unlink(x);
        p
    }
}

/// The unique conjugate of `w` that is a member of the policy's set.
pub fn conjugate(w: &Word, policy: &dyn OrderPolicy) -> Result<Word> {
    Ok(conjugate_counted(w, policy)?.0)
}

/// [`conjugate`] together with the number of block comparisons made.
pub fn conjugate_counted(w: &Word, policy: &dyn OrderPolicy) -> Result<(Word, u64)> {
    w.require_nonempty()?;
    let n = w.len();
    if root_len(w.letters()) != n {
        return Err(not_primitive_error(w));
    }
    let mut chain = QueueChain::new(doubled(w), n, policy);
    let mut live = n;
    while live > 1 {
        let x = chain.pop().expect("live blocks are always queued");
        let p = chain.nodes[x].prev;
        if chain.cmp(p, x) == Ordering::Greater {
            let p = chain.merge_left(x);
            chain.push(p);
            live -= 1;
            continue;
        }
        // Equal left neighbor: find the start of the run of equal blocks and
        // contract the run into the block before it, one block at a time.
        let mut s = x;
        while chain.nodes[s].prev != x && chain.cmp(chain.nodes[s].prev, x) == Ordering::Equal {
            s = chain.nodes[s].prev;
        }
        if chain.nodes[s].prev == x {
            return Err(not_primitive_error(w));
        }
        let q = chain.nodes[s].prev;
        let mut cur = s;
        loop {
            if chain.cmp(q, cur) != Ordering::Greater {
                chain.push(x);
                break;
            }
            let done = cur == x;
            chain.merge_left(cur);
            live -= 1;
            if done {
                break;
            }
            cur = chain.nodes[q].next;
        }
        chain.push(q);
    }
    let last = (0..n).find(|&i| chain.nodes[i].alive).unwrap();
    let word = chain.order.word(w.alphabet(), chain.nodes[last].block.clone());
    Ok((word, chain.order.comparisons.get()))
}

/// The unique nondecreasing factorization of `w` into members of the
/// policy's set.
pub fn factorize(w: &Word, policy: &dyn OrderPolicy) -> Result<Factorization> {
    Ok(factorize_counted(w, policy)?.0)
}

/// [`factorize`] together with the number of block comparisons made.
pub fn factorize_counted(w: &Word, policy: &dyn OrderPolicy) -> Result<(Factorization, u64)> {
    w.require_nonempty()?;
    let n = w.len();
    let mut chain = QueueChain::new(w.letters().to_vec(), n, policy);
    let mut head = 0;
    let mut factors = Vec::new();
    while let Some(x) = chain.pop() {
        if x == head {
            factors.push(chain.order.word(w.alphabet(), chain.nodes[x].block.clone()));
            head = chain.nodes[x].next;
            chain.unlink(x);
            continue;
        }
        // Ties pop leftmost first, so the left neighbor of a minimal block
        // is strictly greater.
        debug_assert_eq!(chain.cmp(chain.nodes[x].prev, x), Ordering::Greater);
        let p = chain.merge_left(x);
        chain.push(p);
    }
    let comparisons = chain.order.comparisons.get();
    Ok((
        Factorization::new(factors, policy.id(), Monotonicity::Nondecreasing),
        comparisons,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::duval_lyndon_factorization;
    use crate::fastfactor::{is_nyldon, nyldon_factorize};
    use crate::oracle::{nyldon_factorization_bruteforce, BruteForce};
    use crate::policy::Policy;
    use crate::word::{conjugates, is_primitive, Alphabet};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn b(s: &str) -> Word {
        Word::parse(s, Alphabet::BINARY).unwrap()
    }

    fn lines(trace: &[Snapshot]) -> Vec<String> {
        trace.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn circular_trace_of_worked_example() {
        let t = contraction_trace(&b("10001011010101"), &Policy::Lex, Mode::Circular).unwrap();
        assert_eq!(
            lines(&t),
            [
                "1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1",
                "1000, 10, 1, 10, 10, 10, 1",
                "1000, 101, 10, 10, 101",
                "1000, 1011010, 101",
                "1011010, 1011000",
                "10110101011000",
            ]
        );
    }

    #[test]
    fn linear_trace_of_worked_example() {
        let t = contraction_trace(&b("10001011010101"), &Policy::Lex, Mode::Linear).unwrap();
        assert_eq!(
            lines(&t)[3..],
            [
                "1000, 1011010, 101",
                "[1000] 1011010, 101",
                "[1000] 1011010101",
                "[1000, 1011010101] ",
            ]
        );
        assert_eq!(contraction_trace(&b("0"), &Policy::Lex, Mode::Circular).unwrap().len(), 1);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&b("10001011010101"), &Policy::Lex).unwrap(), b("10110101011000"));
        assert_eq!(conjugate(&b("100"), &Policy::Lex).unwrap(), b("100"));
        let err = conjugate(&b("1010"), &Policy::Lex).unwrap_err();
        assert_eq!(err.to_string(), "word is periodic (period 10)");
        assert!(BlockChain::new(&b("1010"), &Policy::Lex, Mode::Circular).is_err());
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(
            factorize(&b("10001011010101"), &Policy::Lex).unwrap().to_string(),
            "(1000, 1011010101)"
        );
        assert_eq!(factorize(&b("1"), &Policy::Lex).unwrap().to_string(), "(1)");
    }

    #[test]
    fn matches_oracle_and_passes_on_short_binary_words() {
        for w in Alphabet::BINARY.words_up_to(12) {
            let expected = nyldon_factorization_bruteforce(&w).unwrap();
            assert_eq!(factorize(&w, &Policy::Lex).unwrap(), expected, "{w}");
            let mut chain = BlockChain::new(&w, &Policy::Lex, Mode::Linear).unwrap();
            chain.run().unwrap();
            assert_eq!(chain.into_factorization(), expected, "{w}");
        }
    }

    #[test]
    fn conjugate_is_rotation_invariant() {
        for w in Alphabet::BINARY.words_up_to(12) {
            if !is_primitive(&w).unwrap() {
                assert!(conjugate(&w, &Policy::Lex).is_err());
                continue;
            }
            let c = conjugate(&w, &Policy::Lex).unwrap();
            assert!(is_nyldon(&c).unwrap(), "{w}");
            assert!(conjugates(&w).unwrap().contains(&c));
            let mut chain = BlockChain::new(&w, &Policy::Lex, Mode::Circular).unwrap();
            chain.run().unwrap();
            assert_eq!(chain.blocks(), vec![c.clone()]);
            if w.len() <= 9 {
                for r in conjugates(&w).unwrap() {
                    assert_eq!(conjugate(&r, &Policy::Lex).unwrap(), c);
                }
            }
        }
    }

    #[test]
    fn other_policies_agree_with_their_oracles() {
        for w in Alphabet::TERNARY.words_up_to(6) {
            for p in [Policy::DegLex, Policy::ReverseLex] {
                let expected = BruteForce::new(&p).factorize(&w).unwrap();
                assert_eq!(factorize(&w, &p).unwrap(), expected, "{w} {}", p.id());
            }
            let lyndon = duval_lyndon_factorization(&w).unwrap();
            let revlex = factorize(&w, &Policy::ReverseLex).unwrap();
            assert_eq!(revlex.factors(), lyndon.factors());
        }
    }

    #[test]
    fn random_contraction_order_gives_same_result() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..2000 {
            let len = rng.gen_range(1..=16);
            let letters = (0..len).map(|_| rng.gen_range(0..3)).collect();
            let w = Word::new(Alphabet::TERNARY, letters).unwrap();
            let mut modes = vec![Mode::Linear];
            if is_primitive(&w).unwrap() {
                modes.push(Mode::Circular);
            }
            for mode in modes {
                let mut chain = BlockChain::new(&w, &Policy::Lex, mode).unwrap();
                loop {
                    let moves = chain.moves().unwrap();
                    if moves.is_empty() {
                        break;
                    }
                    chain.apply(moves[rng.gen_range(0..moves.len())]);
                }
                let got = chain.into_factorization();
                match mode {
                    Mode::Linear => assert_eq!(got, nyldon_factorize(&w).unwrap(), "{w}"),
                    Mode::Circular => {
                        assert_eq!(got.factors(), [conjugate(&w, &Policy::Lex).unwrap()], "{w}")
                    }
                }
            }
        }
    }

    #[test]
    fn longest_member_suffix_forms_as_a_block() {
        let oracle = BruteForce::new(&Policy::Lex);
        for w in Alphabet::BINARY.words_up_to(10) {
            let s = oracle.longest_member_suffix(&w).unwrap();
            let trace = contraction_trace(&w, &Policy::Lex, Mode::Linear).unwrap();
            let seen = trace.iter().any(|snap| {
                snap.blocks.last() == Some(&s)
                    || (snap.blocks.is_empty() && snap.emitted.last() == Some(&s))
            });
            assert!(seen, "{w}");
        }
    }

    #[test]
    fn queue_version_stays_n_log_n() {
        let mut rng = StdRng::seed_from_u64(3);
        for len in [100usize, 1000, 10000] {
            let letters = (0..len).map(|_| rng.gen_range(0..2)).collect();
            let w = Word::new(Alphabet::BINARY, letters).unwrap();
            let (_, c) = factorize_counted(&w, &Policy::Lex).unwrap();
            let bound = 4 * len as u64 * (64 - (len as u64).leading_zeros() as u64);
            assert!(c <= bound, "{len}: {c}");
        }
    }
}
