//! Exact minimum hitting set by branch and bound.
//!
//! Every minimum-set question in the crate (local metric bases, traversals,
//! out-solving sets, co-traversals, covers) is phrased as: pick the fewest
//! elements of a universe `0..n` so that every constraint set contains one.
//!
//! The search branches on the live constraint with the fewest remaining
//! candidates (candidate `k` is taken and candidates `0..k` are excluded, so
//! the branches partition the solution space), bounds by a greedy packing of
//! pairwise disjoint constraints, and starts from a greedy cover.
//! The optimum size is found first; the lexicographically smallest optimum is
//! then fixed element by element with feasibility searches, so the witness
//! does not depend on how many workers ran the first phase.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};

pub const DEFAULT_NODE_LIMIT: u64 = 100_000_000;
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(300);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub workers: usize,
    pub node_limit: u64,
    pub timeout: Option<Duration>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: 1,
            node_limit: DEFAULT_NODE_LIMIT,
            timeout: Some(DEFAULT_TIMEOUT),
        }
    }
}

impl SearchOptions {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub root_lower_bound: usize,
    pub greedy_upper_bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    /// Chosen elements, ascending.
    pub members: Vec<usize>,
    pub stats: SearchStats,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub size: usize,
    /// All minimum hitting sets (up to the cap), sorted.
    pub sets: Vec<Vec<usize>>,
    pub truncated: bool,
}

/// A hitting-set instance over the universe `0..elements`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    elements: usize,
    sets: Vec<Vec<usize>>,
}

impl Instance {
    /// Fails with `Infeasible` when a constraint is empty.
    pub fn new(elements: usize, sets: Vec<Vec<usize>>) -> Result<Instance> {
        for (i, s) in sets.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::Infeasible(format!(
                    "constraint {i} has no candidates"
                )));
            }
            if let Some(&bad) = s.iter().find(|&&e| e >= elements) {
                return Err(Error::BadParameter(format!(
                    "element {bad} outside universe"
                )));
            }
        }
        Ok(Instance { elements, sets })
    }

    pub fn elements(&self) -> usize {
        self.elements
    }

    pub fn constraints(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn is_hit_by(&self, members: &[usize]) -> bool {
        self.sets
            .iter()
            .all(|s| s.iter().any(|e| members.contains(e)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Bits(Box<[u64]>);

impl Bits {
    fn zeros(words: usize) -> Bits {
        Bits(vec![0; words].into_boxed_slice())
    }

    fn from_members(words: usize, members: &[usize]) -> Bits {
        let mut b = Bits::zeros(words);
        for &m in members {
            b.set(m);
        }
        b
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn intersects(&self, other: &Bits) -> bool {
        self.0.iter().zip(other.0.iter()).any(|(a, b)| a & b != 0)
    }

    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let bit = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(w * 64 + bit)
                }
            })
        })
    }
}

struct Budget {
    nodes: AtomicU64,
    limit: u64,
    start: Instant,
    deadline: Option<Instant>,
    exceeded: AtomicBool,
}

struct Exceeded;

impl Budget {
    fn new(opts: &SearchOptions) -> Budget {
        let start = Instant::now();
        Budget {
            nodes: AtomicU64::new(0),
            limit: opts.node_limit,
            start,
            deadline: opts.timeout.map(|t| start + t),
            exceeded: AtomicBool::new(false),
        }
    }

    fn tick(&self) -> std::result::Result<(), Exceeded> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let mut over = n > self.limit || self.exceeded.load(Ordering::Relaxed);
        if !over && n.is_multiple_of(1024) {
            over = self.deadline.is_some_and(|d| Instant::now() > d);
        }
        if over {
            self.exceeded.store(true, Ordering::Relaxed);
            Err(Exceeded)
        } else {
            Ok(())
        }
    }

    fn error(&self) -> Error {
        Error::BudgetExceeded {
            nodes: self.nodes.load(Ordering::Relaxed),
            elapsed: self.start.elapsed(),
        }
    }
}

#[derive(Clone, Debug)]
struct State {
    chosen: Bits,
    excluded: Bits,
    count: usize,
}

enum Status {
    Solved,
    Dead,
    Open { branch: Vec<usize>, lower: usize },
}

/// Best solution so far. Searches stop early once the size drops to `stop_at`.
struct Incumbent {
    size: AtomicUsize,
    best: Mutex<Option<Bits>>,
    stop_at: usize,
}

impl Incumbent {
    fn new(bound: usize, stop_at: usize) -> Incumbent {
        Incumbent {
            size: AtomicUsize::new(bound),
            best: Mutex::new(None),
            stop_at,
        }
    }

    fn size(&self) -> usize {
        self.size.load(Ordering::SeqCst)
    }

    fn done(&self) -> bool {
        self.size() <= self.stop_at
    }

    fn offer(&self, st: &State) {
        let mut best = self.best.lock().expect("incumbent lock");
        if st.count < self.size() {
            self.size.store(st.count, Ordering::SeqCst);
            *best = Some(st.chosen.clone());
        }
    }
}

struct Engine<'a> {
    elements: usize,
    words: usize,
    sets: Vec<Bits>,
    budget: &'a Budget,
}

impl<'a> Engine<'a> {
    fn new(inst: &Instance, budget: &'a Budget) -> Engine<'a> {
        let words = inst.elements.div_ceil(64).max(1);
        let mut sets: Vec<Bits> = inst
            .sets
            .iter()
            .map(|s| Bits::from_members(words, s))
            .collect();
        sets.sort();
        sets.dedup();
        // A constraint containing another one is hit whenever the smaller one is.
        let mut keep = vec![true; sets.len()];
        for i in 0..sets.len() {
            for j in 0..sets.len() {
                if i != j && keep[j] && sets[j].is_subset(&sets[i]) {
                    keep[i] = false;
                    break;
                }
            }
        }
        let sets = sets
            .into_iter()
            .zip(keep)
            .filter_map(|(s, k)| k.then_some(s))
            .collect();
        Engine {
            elements: inst.elements,
            words,
            sets,
            budget,
        }
    }

    fn root(&self) -> State {
        State {
            chosen: Bits::zeros(self.words),
            excluded: Bits::zeros(self.words),
            count: 0,
        }
    }

    fn state_with(&self, chosen: &[usize], excluded: &[usize]) -> State {
        State {
            chosen: Bits::from_members(self.words, chosen),
            excluded: Bits::from_members(self.words, excluded),
            count: chosen.len(),
        }
    }

    fn analyze(&self, st: &State) -> Status {
        let mut live: Vec<(u32, usize)> = Vec::new();
        for (idx, s) in self.sets.iter().enumerate() {
            if s.intersects(&st.chosen) {
                continue;
            }
            let pc: u32 =
                s.0.iter()
                    .zip(st.excluded.0.iter())
                    .map(|(a, x)| (a & !x).count_ones())
                    .sum();
            if pc == 0 {
                return Status::Dead;
            }
            live.push((pc, idx));
        }
        if live.is_empty() {
            return Status::Solved;
        }
        live.sort_unstable();
        let mut used = Bits::zeros(self.words);
        let mut lower = 0;
        for &(_, idx) in &live {
            let s = &self.sets[idx];
            let clash = (0..self.words).any(|w| s.0[w] & !st.excluded.0[w] & used.0[w] != 0);
            if !clash {
                for w in 0..self.words {
                    used.0[w] |= s.0[w] & !st.excluded.0[w];
                }
                lower += 1;
            }
        }
        let first = &self.sets[live[0].1];
        let branch = first.ones().filter(|&e| !st.excluded.get(e)).collect();
        Status::Open { branch, lower }
    }

    fn children(&self, st: &State, branch: &[usize]) -> Vec<State> {
        let mut out = Vec::with_capacity(branch.len());
        let mut excluded = st.excluded.clone();
        for &e in branch {
            let mut chosen = st.chosen.clone();
            chosen.set(e);
            out.push(State {
                chosen,
                excluded: excluded.clone(),
                count: st.count + 1,
            });
            excluded.set(e);
        }
        out
    }

    fn dfs(&self, st: &State, inc: &Incumbent) -> std::result::Result<(), Exceeded> {
        if inc.done() {
            return Ok(());
        }
        self.budget.tick()?;
        match self.analyze(st) {
            Status::Dead => Ok(()),
            Status::Solved => {
                inc.offer(st);
                Ok(())
            }
            Status::Open { branch, lower } => {
                if st.count + lower >= inc.size() {
                    return Ok(());
                }
                for child in self.children(st, &branch) {
                    self.dfs(&child, inc)?;
                    if inc.done() || st.count + lower >= inc.size() {
                        break;
                    }
                }
                Ok(())
            }
        }
    }

    /// Searches below `root` for a hitting set smaller than `inc.size()`.
    fn search(&self, root: State, inc: &Incumbent, workers: usize) -> Result<()> {
        let outcome = if workers <= 1 {
            self.dfs(&root, inc)
        } else {
            let frontier = self.frontier(root, inc, workers * 8);
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .map_err(|e| Error::BadParameter(format!("thread pool: {e}")))?;
            pool.install(|| frontier.par_iter().try_for_each(|st| self.dfs(st, inc)))
        };
        outcome.map_err(|_| self.budget.error())
    }

    fn frontier(&self, root: State, inc: &Incumbent, want: usize) -> Vec<State> {
        let mut open = std::collections::VecDeque::from([root]);
        while let Some(st) = open.pop_front() {
            if open.len() >= want {
                open.push_front(st);
                break;
            }
            match self.analyze(&st) {
                Status::Dead => {}
                Status::Solved => inc.offer(&st),
                Status::Open { branch, lower } => {
                    if st.count + lower < inc.size() {
                        open.extend(self.children(&st, &branch));
                    }
                }
            }
        }
        open.into()
    }

    fn greedy(&self) -> State {
        let mut st = self.root();
        loop {
            let unhit: Vec<&Bits> = self
                .sets
                .iter()
                .filter(|s| !s.intersects(&st.chosen))
                .collect();
            if unhit.is_empty() {
                return st;
            }
            let best = (0..self.elements)
                .max_by_key(|&e| {
                    let hits = unhit.iter().filter(|s| s.get(e)).count();
                    (hits, std::cmp::Reverse(e))
                })
                .expect("nonempty universe");
            st.chosen.set(best);
            st.count += 1;
        }
    }

    /// Whether some hitting set of size at most `k` extends `st`.
    fn feasible(&self, st: &State, k: usize, workers: usize) -> Result<bool> {
        if st.count > k {
            return Ok(false);
        }
        let inc = Incumbent::new(k + 1, k);
        self.search(st.clone(), &inc, workers)?;
        Ok(inc.size() <= k)
    }

    fn in_some_unhit(&self, st: &State, e: usize) -> bool {
        self.sets
            .iter()
            .any(|s| s.get(e) && !s.intersects(&st.chosen))
    }

    /// Lexicographically smallest hitting set of size `k` extending `st`, given one exists.
    fn lex_smallest(&self, mut st: State, k: usize, workers: usize) -> Result<State> {
        for e in 0..self.elements {
            if st.chosen.get(e) || st.excluded.get(e) {
                continue;
            }
            if matches!(self.analyze(&st), Status::Solved) {
                break;
            }
            if !self.in_some_unhit(&st, e) {
                st.excluded.set(e);
                continue;
            }
            let mut with = st.clone();
            with.chosen.set(e);
            with.count += 1;
            if self.feasible(&with, k, workers)? {
                st = with;
            } else {
                st.excluded.set(e);
            }
        }
        Ok(st)
    }

    fn enumerate(
        &self,
        st: &State,
        k: usize,
        cap: usize,
        out: &mut Vec<Vec<usize>>,
    ) -> std::result::Result<bool, Exceeded> {
        self.budget.tick()?;
        match self.analyze(st) {
            Status::Dead => Ok(true),
            Status::Solved => {
                if st.count == k {
                    out.push(st.chosen.ones().collect());
                }
                Ok(out.len() <= cap)
            }
            Status::Open { branch, lower } => {
                if st.count + lower > k {
                    return Ok(true);
                }
                for child in self.children(st, &branch) {
                    if !self.enumerate(&child, k, cap, out)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }
}

fn root_bounds(engine: &Engine, root: &State) -> (usize, State) {
    let lower = match engine.analyze(root) {
        Status::Open { lower, .. } => lower,
        _ => 0,
    };
    (lower, engine.greedy())
}

fn optimum_size(engine: &Engine, opts: &SearchOptions) -> Result<(usize, SearchStats)> {
    let root = engine.root();
    let (lower, greedy) = root_bounds(engine, &root);
    let inc = Incumbent::new(greedy.count, lower);
    *inc.best.lock().expect("incumbent lock") = Some(greedy.chosen.clone());
    engine.search(root, &inc, opts.workers)?;
    let stats = SearchStats {
        nodes: 0,
        root_lower_bound: lower,
        greedy_upper_bound: greedy.count,
    };
    Ok((inc.size(), stats))
}

/// Lexicographically smallest minimum hitting set.
pub fn minimum(inst: &Instance, opts: &SearchOptions) -> Result<Solution> {
    minimum_with(inst, &[], &[], opts)
}

/// Lexicographically smallest minimum hitting set that contains every element
/// of `forced` and none of `forbidden`. `Infeasible` if there is none.
pub fn minimum_with(
    inst: &Instance,
    forced: &[usize],
    forbidden: &[usize],
    opts: &SearchOptions,
) -> Result<Solution> {
    let budget = Budget::new(opts);
    let engine = Engine::new(inst, &budget);
    let start = engine.state_with(forced, forbidden);
    if matches!(engine.analyze(&start), Status::Dead) {
        return Err(Error::Infeasible(
            "no hitting set satisfies the restrictions".into(),
        ));
    }
    let (lower, greedy) = root_bounds(&engine, &engine.root());
    let inc = if forced.is_empty() && forbidden.is_empty() {
        let inc = Incumbent::new(greedy.count, lower);
        *inc.best.lock().expect("incumbent lock") = Some(greedy.chosen.clone());
        inc
    } else {
        let stop_at = match engine.analyze(&start) {
            Status::Open { lower, .. } => start.count + lower,
            _ => start.count,
        };
        Incumbent::new(usize::MAX, stop_at)
    };
    engine.search(start.clone(), &inc, opts.workers)?;
    let k = inc.size();
    let best = engine.lex_smallest(start, k, opts.workers)?;
    let members: Vec<usize> = best.chosen.ones().collect();
    debug_assert_eq!(members.len(), k);
    Ok(Solution {
        members,
        stats: SearchStats {
            nodes: budget.nodes.load(Ordering::Relaxed),
            root_lower_bound: lower,
            greedy_upper_bound: greedy.count,
        },
    })
}

/// Size of a minimum hitting set, without fixing a witness.
pub fn minimum_size(inst: &Instance, opts: &SearchOptions) -> Result<(usize, SearchStats)> {
    let budget = Budget::new(opts);
    let engine = Engine::new(inst, &budget);
    let (size, mut stats) = optimum_size(&engine, opts)?;
    stats.nodes = budget.nodes.load(Ordering::Relaxed);
    Ok((size, stats))
}

/// Whether some minimum hitting set contains `element`.
pub fn in_some_minimum(inst: &Instance, element: usize, opts: &SearchOptions) -> Result<bool> {
    let budget = Budget::new(opts);
    let engine = Engine::new(inst, &budget);
    let (k, _) = optimum_size(&engine, opts)?;
    let st = engine.state_with(&[element], &[]);
    engine.feasible(&st, k, opts.workers)
}

/// All minimum hitting sets, sorted; at most `cap` are returned.
pub fn enumerate_minimum(inst: &Instance, cap: usize, opts: &SearchOptions) -> Result<Enumeration> {
    let budget = Budget::new(opts);
    let engine = Engine::new(inst, &budget);
    let (k, _) = optimum_size(&engine, opts)?;
    let mut sets = Vec::new();
    let complete = engine
        .enumerate(&engine.root(), k, cap, &mut sets)
        .map_err(|_| budget.error())?;
    sets.truncate(cap);
    sets.sort();
    Ok(Enumeration {
        size: k,
        sets,
        truncated: !complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(inst: &Instance) -> (usize, Vec<Vec<usize>>) {
        let n = inst.elements();
        for k in 0..=n {
            let mut found = Vec::new();
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != k {
                    continue;
                }
                let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                if inst.is_hit_by(&members) {
                    found.push(members);
                }
            }
            if !found.is_empty() {
                found.sort();
                return (k, found);
            }
        }
        unreachable!("the whole universe always hits")
    }

    #[test]
    fn empty_instance() {
        let inst = Instance::new(3, vec![]).unwrap();
        let sol = minimum(&inst, &SearchOptions::default()).unwrap();
        assert!(sol.members.is_empty());
    }

    #[test]
    fn empty_constraint_is_infeasible() {
        assert!(matches!(
            Instance::new(3, vec![vec![0], vec![]]),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn lexicographic_tie_break() {
        // {0,2} {1,2} {0,1}: every pair is optimal, the smallest is {0,1}.
        let inst = Instance::new(3, vec![vec![0, 2], vec![1, 2], vec![0, 1]]).unwrap();
        let sol = minimum(&inst, &SearchOptions::default()).unwrap();
        assert_eq!(sol.members, vec![0, 1]);
        let all = enumerate_minimum(&inst, 10, &SearchOptions::default()).unwrap();
        assert_eq!(all.sets, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(!all.truncated);
    }

    #[test]
    fn restricted_searches() {
        let inst = Instance::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let opts = SearchOptions::default();
        assert_eq!(
            minimum_with(&inst, &[3], &[], &opts).unwrap().members,
            vec![0, 3]
        );
        assert_eq!(
            minimum_with(&inst, &[], &[0], &opts).unwrap().members,
            vec![1, 2]
        );
        assert!(in_some_minimum(&inst, 3, &opts).unwrap());
        let capped = enumerate_minimum(&inst, 2, &opts).unwrap();
        assert!(capped.truncated);
        assert_eq!(capped.sets.len(), 2);
    }

    #[test]
    fn node_budget() {
        let sets = (0..12)
            .map(|i| vec![i, (i + 1) % 12, (i + 5) % 12])
            .collect();
        let inst = Instance::new(12, sets).unwrap();
        let opts = SearchOptions {
            node_limit: 1,
            ..SearchOptions::default()
        };
        assert!(matches!(
            minimum(&inst, &opts),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    proptest::proptest! {
        #[test]
        fn matches_brute_force(
            n in 1usize..9,
            raw in proptest::collection::vec(proptest::collection::vec(0usize..9, 1..4), 0..10),
            workers in 1usize..4,
        ) {
            let sets: Vec<Vec<usize>> = raw
                .into_iter()
                .map(|s| { let mut s: Vec<usize> = s.into_iter().map(|e| e % n).collect(); s.sort(); s.dedup(); s })
                .collect();
            let inst = Instance::new(n, sets).unwrap();
            let (k, all) = brute_force(&inst);
            let opts = SearchOptions::default().with_workers(workers);
            let sol = minimum(&inst, &opts).unwrap();
            proptest::prop_assert_eq!(sol.members.len(), k);
            proptest::prop_assert_eq!(&sol.members, &all[0]);
            let en = enumerate_minimum(&inst, 1000, &opts).unwrap();
            proptest::prop_assert_eq!(en.sets, all.clone());
            for e in 0..n {
                let expect = all.iter().any(|s| s.contains(&e));
                proptest::prop_assert_eq!(in_some_minimum(&inst, e, &opts).unwrap(), expect);
            }
        }
    }
}
