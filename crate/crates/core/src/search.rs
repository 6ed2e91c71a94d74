//! Exhaustive arrowing search for `(K_{1,n}, K_{1,m}+e)` on complete and pendant hosts.
//!
//! Edges are decided one at a time in lexicographic order. After each decision a
//! propagation pass enforces two monotone avoidance rules:
//!
//! * red degree may not reach `n`; a vertex at red degree `n-1` has all its
//!   undecided edges forced blue;
//! * a vertex whose final blue degree is already guaranteed to be `>= m`
//!   (red degree is capped at `n-1`) must have a red-complete blue neighborhood,
//!   so a blue edge there is a conflict and undecided pairs there are forced red.
//!
//! Undecided edges count as neither color, so any conflict is final for every
//! completion. With symmetry breaking on, the red neighborhood of vertex 0 is
//! restricted to a prefix of each orbit of the stabilizer of vertex 0.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::coloring::{bit, bits, HostSpec, TwoColoring};
use crate::detectors::{is_good_coloring, TargetPair};
use crate::error::SearchError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_budget: Option<u64>,
    pub symmetry_breaking: bool,
    /// Number of top-level branches explored concurrently; 0 is sequential.
    pub parallel_width: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            node_budget: None,
            symmetry_breaking: true,
            parallel_width: 0,
        }
    }
}

impl SearchConfig {
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.node_budget = Some(budget.max(1));
        self
    }

    pub fn with_parallel_width(mut self, width: usize) -> Self {
        self.parallel_width = width;
        self
    }

    pub fn without_symmetry_breaking(mut self) -> Self {
        self.symmetry_breaking = false;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Arrows,
    NotArrows,
    BudgetExhausted,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Arrows => "arrows",
            Verdict::NotArrows => "not_arrows",
            Verdict::BudgetExhausted => "budget_exhausted",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub verdict: Verdict,
    /// A good coloring of the host; present iff the verdict is `NotArrows`.
    pub witness: Option<TwoColoring>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// One arrowing decision taken while computing `r` or `r_*`.
#[derive(Clone, Debug)]
pub struct Probe {
    pub host: HostSpec,
    pub verdict: Verdict,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl Probe {
    fn from_outcome(host: HostSpec, o: &SearchOutcome) -> Self {
        Self {
            host,
            verdict: o.verdict,
            nodes_explored: o.nodes_explored,
            elapsed: o.elapsed,
        }
    }
}

/// `r` together with the evidence that pins it.
#[derive(Clone, Debug)]
pub struct RamseyCertificate {
    pub target: TargetPair,
    pub value: usize,
    /// Good coloring of `K_{value-1}`.
    pub witness: TwoColoring,
    /// Every host decided on the way, in the order they were probed.
    pub probes: Vec<Probe>,
}

/// `r_*` together with the evidence that pins it.
#[derive(Clone, Debug)]
pub struct StarCriticalCertificate {
    pub target: TargetPair,
    pub ramsey: usize,
    pub value: usize,
    /// Good coloring of `K_{r-1} ⊔ K_{1,value-1}` (plain `K_{r-1}` when `value = 1`).
    pub witness: TwoColoring,
    pub probes: Vec<Probe>,
}

struct Problem {
    order: usize,
    nbrs: Vec<u64>,
    degree: Vec<usize>,
    edges: Vec<(u8, u8)>,
    red_cap: usize,
    m: usize,
    /// Next/previous vertex in the same orbit of the stabilizer of vertex 0,
    /// `usize::MAX` when there is none.
    next_in_block: Vec<usize>,
    prev_in_block: Vec<usize>,
    symmetry: bool,
}

impl Problem {
    fn new(host: HostSpec, t: TargetPair, symmetry: bool) -> Self {
        let order = host.order();
        let nbrs: Vec<u64> = (0..order).map(|v| host.neighbors(v)).collect();
        let degree = nbrs.iter().map(|r| r.count_ones() as usize).collect();
        let edges = host
            .edges()
            .into_iter()
            .map(|(u, v)| (u as u8, v as u8))
            .collect();

        // Orbits of vertices other than 0 under automorphisms fixing 0:
        // attached core [1, k), unattached core [max(k,1), n_core), and the pendant.
        let mut next_in_block = vec![usize::MAX; order];
        let mut prev_in_block = vec![usize::MAX; order];
        let n_core = host.n_core();
        let k = host.pendant_k();
        let blocks: Vec<(usize, usize)> = if k == 0 {
            vec![(1, n_core)]
        } else {
            vec![(1, k), (k.max(1), n_core)]
        };
        for (lo, hi) in blocks {
            for j in lo..hi {
                if j + 1 < hi {
                    next_in_block[j] = j + 1;
                }
                if j > lo {
                    prev_in_block[j] = j - 1;
                }
            }
        }

        Self {
            order,
            nbrs,
            degree,
            edges,
            red_cap: t.n() - 1,
            m: t.m(),
            next_in_block,
            prev_in_block,
            symmetry,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Color {
    Red,
    Blue,
}

#[derive(Clone)]
struct State {
    red: Vec<u64>,
    blue: Vec<u64>,
    trail: Vec<(u8, u8)>,
    queue: Vec<(u8, u8)>,
}

struct Conflict;

impl State {
    fn new(order: usize) -> Self {
        Self {
            red: vec![0; order],
            blue: vec![0; order],
            trail: Vec::new(),
            queue: Vec::new(),
        }
    }

    #[inline]
    fn colored(&self, u: usize, v: usize) -> bool {
        (self.red[u] | self.blue[u]) & bit(v) != 0
    }

    fn assign(&mut self, u: usize, v: usize, color: Color) {
        let rows = match color {
            Color::Red => &mut self.red,
            Color::Blue => &mut self.blue,
        };
        rows[u] |= bit(v);
        rows[v] |= bit(u);
        self.trail.push((u as u8, v as u8));
        self.queue.push((u as u8, v as u8));
    }

    #[inline]
    fn force(&mut self, u: usize, v: usize, color: Color) -> Result<(), Conflict> {
        let (same, other) = match color {
            Color::Red => (&self.red, &self.blue),
            Color::Blue => (&self.blue, &self.red),
        };
        if same[u] & bit(v) != 0 {
            Ok(())
        } else if other[u] & bit(v) != 0 {
            Err(Conflict)
        } else {
            self.assign(u, v, color);
            Ok(())
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (u, v) = self.trail.pop().unwrap();
            let (u, v) = (u as usize, v as usize);
            self.red[u] &= !bit(v);
            self.red[v] &= !bit(u);
            self.blue[u] &= !bit(v);
            self.blue[v] &= !bit(u);
        }
        self.queue.clear();
    }

    fn check_vertex(&mut self, p: &Problem, w: usize) -> Result<(), Conflict> {
        let r = self.red[w].count_ones() as usize;
        if r > p.red_cap {
            return Err(Conflict);
        }
        let undecided = p.nbrs[w] & !self.red[w] & !self.blue[w];
        if r == p.red_cap && undecided != 0 {
            for x in bits(undecided) {
                self.force(w, x, Color::Blue)?;
            }
        }
        let max_red = p.red_cap.min(r + undecided.count_ones() as usize);
        let guaranteed_blue = p.degree[w] - max_red;
        if guaranteed_blue >= p.m {
            let nb = self.blue[w];
            for a in bits(nb) {
                if self.blue[a] & nb != 0 {
                    return Err(Conflict);
                }
                let open = nb & p.nbrs[a] & !self.red[a] & !self.blue[a];
                for b in bits(open) {
                    self.force(a, b, Color::Red)?;
                }
            }
        }
        Ok(())
    }

    fn propagate(&mut self, p: &Problem) -> Result<(), Conflict> {
        while let Some((u, v)) = self.queue.pop() {
            let (u, v) = (u as usize, v as usize);
            let is_blue = self.blue[u] & bit(v) != 0;

            if p.symmetry && (u == 0 || v == 0) {
                let j = u.max(v);
                if is_blue {
                    let nx = p.next_in_block[j];
                    if nx != usize::MAX {
                        self.force(0, nx, Color::Blue)?;
                    }
                } else {
                    let pv = p.prev_in_block[j];
                    if pv != usize::MAX {
                        self.force(0, pv, Color::Red)?;
                    }
                }
            }

            self.check_vertex(p, u)?;
            self.check_vertex(p, v)?;
            if is_blue {
                for w in bits(self.blue[u] & self.blue[v]) {
                    self.check_vertex(p, w)?;
                }
            }
        }
        Ok(())
    }

    fn next_open(&self, p: &Problem, from: usize) -> Option<usize> {
        (from..p.edges.len()).find(|&i| {
            let (u, v) = p.edges[i];
            !self.colored(u as usize, v as usize)
        })
    }

    fn to_coloring(&self, host: HostSpec) -> Result<TwoColoring, SearchError> {
        Ok(TwoColoring::from_red_rows(host, self.red.clone())?)
    }
}

/// Shared between workers: node accounting and the stop signal.
struct Control {
    budget: Option<u64>,
    nodes: AtomicU64,
    stop: AtomicBool,
    exhausted: AtomicBool,
}

const FLUSH_EVERY: u64 = 1024;

struct Worker<'a> {
    problem: &'a Problem,
    control: &'a Control,
    local_nodes: u64,
}

enum Found {
    Witness(State),
    Exhausted,
    Stopped,
}

impl Worker<'_> {
    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes >= FLUSH_EVERY {
            self.flush();
        }
        if let Some(b) = self.control.budget {
            if self.control.nodes.load(Ordering::Relaxed) + self.local_nodes > b {
                self.control.exhausted.store(true, Ordering::Relaxed);
                self.control.stop.store(true, Ordering::Relaxed);
            }
        }
        !self.control.stop.load(Ordering::Relaxed)
    }

    fn flush(&mut self) {
        self.control
            .nodes
            .fetch_add(self.local_nodes, Ordering::Relaxed);
        self.local_nodes = 0;
    }

    /// Depth-first search from `state`; on a witness the state is left complete.
    fn dfs(&mut self, state: &mut State, from: usize) -> Found {
        if !self.tick() {
            return Found::Stopped;
        }
        let Some(i) = state.next_open(self.problem, from) else {
            return Found::Witness(state.clone());
        };
        let (u, v) = self.problem.edges[i];
        let (u, v) = (u as usize, v as usize);
        for color in [Color::Red, Color::Blue] {
            let mark = state.trail.len();
            state.assign(u, v, color);
            if state.propagate(self.problem).is_ok() {
                match self.dfs(state, i + 1) {
                    Found::Exhausted => {}
                    other => return other,
                }
            }
            state.undo_to(mark);
        }
        Found::Exhausted
    }

    /// Enumerate consistent partial states after `depth` branching decisions.
    fn split(&mut self, state: &mut State, from: usize, depth: usize, out: &mut Vec<(State, usize)>) {
        let Some(i) = state.next_open(self.problem, from) else {
            out.push((state.clone(), self.problem.edges.len()));
            return;
        };
        if depth == 0 {
            out.push((state.clone(), i));
            return;
        }
        let (u, v) = self.problem.edges[i];
        let (u, v) = (u as usize, v as usize);
        for color in [Color::Red, Color::Blue] {
            let mark = state.trail.len();
            state.assign(u, v, color);
            if state.propagate(self.problem).is_ok() {
                let mut child = state.clone();
                child.trail.clear();
                self.split(&mut child, i + 1, depth - 1, out);
            }
            state.undo_to(mark);
        }
    }
}

fn ceil_log2(w: usize) -> usize {
    if w <= 1 {
        0
    } else {
        (usize::BITS - (w - 1).leading_zeros()) as usize
    }
}

/// Search for a good coloring of `host`: one with no red `K_{1,n}` and no blue `K_{1,m}+e`.
pub fn find_good_coloring(
    host: HostSpec,
    t: TargetPair,
    cfg: &SearchConfig,
) -> Result<SearchOutcome, SearchError> {
    let start = Instant::now();
    let problem = Problem::new(host, t, cfg.symmetry_breaking);
    let control = Control {
        budget: cfg.node_budget,
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        exhausted: AtomicBool::new(false),
    };

    let mut root = State::new(problem.order);
    // n = 1 forces every edge blue before any branching
    let root_ok = (0..problem.order)
        .all(|v| root.check_vertex(&problem, v).is_ok() && root.propagate(&problem).is_ok());

    let found = if !root_ok {
        None
    } else if cfg.parallel_width <= 1 {
        let mut worker = Worker {
            problem: &problem,
            control: &control,
            local_nodes: 0,
        };
        let r = worker.dfs(&mut root, 0);
        worker.flush();
        match r {
            Found::Witness(s) => Some(s),
            _ => None,
        }
    } else {
        run_parallel(&problem, &control, root, cfg.parallel_width)
    };

    let nodes_explored = control.nodes.load(Ordering::Relaxed);
    let (verdict, witness) = match found {
        Some(state) => {
            let c = state.to_coloring(host)?;
            if !is_good_coloring(&c, t) {
                return Err(SearchError::UnsoundWitness {
                    host: host.to_string(),
                });
            }
            (Verdict::NotArrows, Some(c))
        }
        None if control.exhausted.load(Ordering::Relaxed) => (Verdict::BudgetExhausted, None),
        None => (Verdict::Arrows, None),
    };
    Ok(SearchOutcome {
        verdict,
        witness,
        nodes_explored,
        elapsed: start.elapsed(),
    })
}

fn run_parallel(problem: &Problem, control: &Control, mut root: State, width: usize) -> Option<State> {
    let mut subproblems = Vec::new();
    {
        let mut splitter = Worker {
            problem,
            control,
            local_nodes: 0,
        };
        splitter.split(&mut root, 0, ceil_log2(width), &mut subproblems);
        splitter.flush();
    }
    let next = AtomicUsize::new(0);
    let result: Mutex<Option<State>> = Mutex::new(None);
    std::thread::scope(|scope| {
        for _ in 0..width.min(subproblems.len().max(1)) {
            scope.spawn(|| {
                let mut worker = Worker {
                    problem,
                    control,
                    local_nodes: 0,
                };
                loop {
                    if control.stop.load(Ordering::Relaxed) {
                        break;
                    }
                    let idx = next.fetch_add(1, Ordering::Relaxed);
                    let Some((state, from)) = subproblems.get(idx) else {
                        break;
                    };
                    let mut state = state.clone();
                    if let Found::Witness(s) = worker.dfs(&mut state, *from) {
                        let mut slot = result.lock().unwrap();
                        if slot.is_none() {
                            *slot = Some(s);
                        }
                        control.stop.store(true, Ordering::Relaxed);
                        break;
                    }
                }
                worker.flush();
            });
        }
    });
    result.into_inner().unwrap()
}

/// Whether every coloring of `host` contains a red `K_{1,n}` or a blue `K_{1,m}+e`.
pub fn arrows(host: HostSpec, t: TargetPair, cfg: &SearchConfig) -> Result<bool, SearchError> {
    let outcome = find_good_coloring(host, t, cfg)?;
    match outcome.verdict {
        Verdict::Arrows => Ok(true),
        Verdict::NotArrows => Ok(false),
        Verdict::BudgetExhausted => Err(SearchError::BudgetExhausted {
            host: host.to_string(),
            budget: cfg.node_budget.unwrap_or(0),
        }),
    }
}

fn decide(
    host: HostSpec,
    t: TargetPair,
    cfg: &SearchConfig,
    probes: &mut Vec<Probe>,
) -> Result<Option<TwoColoring>, SearchError> {
    let outcome = find_good_coloring(host, t, cfg)?;
    probes.push(Probe::from_outcome(host, &outcome));
    match outcome.verdict {
        Verdict::Arrows => Ok(None),
        Verdict::NotArrows => Ok(outcome.witness),
        Verdict::BudgetExhausted => Err(SearchError::BudgetExhausted {
            host: host.to_string(),
            budget: cfg.node_budget.unwrap_or(0),
        }),
    }
}

/// Smallest `N <= n_max` with `K_N` arrowing `t`, with a good coloring of `K_{N-1}`.
///
/// Arrowing is upward monotone in `N`, so hosts are probed in increasing order
/// and the first arrowing one is the answer.
pub fn ramsey_certificate(
    t: TargetPair,
    n_max: usize,
    cfg: &SearchConfig,
) -> Result<RamseyCertificate, SearchError> {
    if n_max < 2 {
        return Err(SearchError::BadBound(n_max));
    }
    let mut probes = Vec::new();
    let mut last_witness = None;
    for order in 1..=n_max {
        let host = HostSpec::complete(order)?;
        match decide(host, t, cfg, &mut probes)? {
            Some(w) => last_witness = Some(w),
            None => {
                return Ok(RamseyCertificate {
                    target: t,
                    value: order,
                    witness: last_witness.expect("K_1 never arrows"),
                    probes,
                })
            }
        }
    }
    Err(SearchError::NoArrowingWithin { n_max })
}

pub fn compute_ramsey(t: TargetPair, n_max: usize, cfg: &SearchConfig) -> Result<usize, SearchError> {
    ramsey_certificate(t, n_max, cfg).map(|c| c.value)
}

/// Smallest `k` with `K_{r-1} ⊔ K_{1,k}` arrowing `t`, found by bisection on `k`
/// (arrowing is monotone in `k`).
pub fn star_critical_certificate(
    t: TargetPair,
    r: usize,
    cfg: &SearchConfig,
) -> Result<StarCriticalCertificate, SearchError> {
    if r < 2 {
        return Err(SearchError::InconsistentRamsey {
            r,
            reason: "r must be at least 2",
        });
    }
    let core = r - 1;
    let mut probes = Vec::new();
    let Some(base_witness) = decide(HostSpec::complete(core)?, t, cfg, &mut probes)? else {
        return Err(SearchError::InconsistentRamsey {
            r,
            reason: "K_{r-1} already arrows",
        });
    };
    if decide(HostSpec::new(core, core)?, t, cfg, &mut probes)?.is_some() {
        return Err(SearchError::InconsistentRamsey {
            r,
            reason: "K_r does not arrow",
        });
    }

    // arrows(hi) holds, arrows(lo) fails with `witness`
    let (mut lo, mut hi) = (0usize, core);
    let mut witness = base_witness;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        match decide(HostSpec::new(core, mid)?, t, cfg, &mut probes)? {
            Some(w) => {
                lo = mid;
                witness = w;
            }
            None => hi = mid,
        }
    }
    Ok(StarCriticalCertificate {
        target: t,
        ramsey: r,
        value: hi,
        witness,
        probes,
    })
}

pub fn compute_star_critical(t: TargetPair, r: usize, cfg: &SearchConfig) -> Result<usize, SearchError> {
    star_critical_certificate(t, r, cfg).map(|c| c.value)
}
