//! Red/blue edge colorings of complete hosts `K_N` and pendant hosts `K_N ⊔ K_{1,k}`.
//!
//! Vertices are `0..n_core` for the core clique; when `pendant_k > 0` the pendant
//! vertex has index `n_core` and is joined to core vertices `0..pendant_k`.
//! Adjacency is stored as `u64` bit rows, so hosts are limited to 64 vertices.

use std::fmt;

use crate::error::ColoringError;

/// Largest supported host order (core plus pendant).
pub const MAX_VERTICES: usize = 64;

pub type Vertex = usize;

#[inline]
pub(crate) const fn bit(v: Vertex) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate over the set bits of a mask, lowest first.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Symbolic host: `K_{n_core}`, or `K_{n_core} ⊔ K_{1,pendant_k}` when `pendant_k > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HostSpec {
    n_core: usize,
    pendant_k: usize,
}

impl HostSpec {
    pub fn new(n_core: usize, pendant_k: usize) -> Result<Self, ColoringError> {
        if n_core == 0 {
            return Err(ColoringError::EmptyCore);
        }
        if pendant_k > n_core {
            return Err(ColoringError::PendantTooLarge { n_core, pendant_k });
        }
        let order = if pendant_k == 0 { n_core } else { n_core + 1 };
        if order > MAX_VERTICES {
            return Err(ColoringError::HostTooLarge { order });
        }
        Ok(Self { n_core, pendant_k })
    }

    /// The complete host `K_n`.
    pub fn complete(n: usize) -> Result<Self, ColoringError> {
        Self::new(n, 0)
    }

    pub fn n_core(&self) -> usize {
        self.n_core
    }

    pub fn pendant_k(&self) -> usize {
        self.pendant_k
    }

    pub fn has_pendant(&self) -> bool {
        self.pendant_k > 0
    }

    /// Index of the pendant vertex, if there is one.
    pub fn pendant(&self) -> Option<Vertex> {
        self.has_pendant().then_some(self.n_core)
    }

    pub fn order(&self) -> usize {
        if self.has_pendant() {
            self.n_core + 1
        } else {
            self.n_core
        }
    }

    pub fn edge_count(&self) -> usize {
        self.n_core * (self.n_core - 1) / 2 + self.pendant_k
    }

    /// Host neighborhood of `v` as a bit mask.
    pub fn neighbors(&self, v: Vertex) -> u64 {
        debug_assert!(v < self.order());
        let core = low_bits(self.n_core);
        match self.pendant() {
            Some(x) if v == x => low_bits(self.pendant_k),
            Some(x) if v < self.pendant_k => (core & !bit(v)) | bit(x),
            _ => core & !bit(v),
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).count_ones() as usize
    }

    pub fn is_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && v < self.order() && self.neighbors(u) & bit(v) != 0
    }

    /// All host edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.order() {
            for j in bits(self.neighbors(i) & !low_bits(i + 1)) {
                out.push((i, j));
            }
        }
        out
    }
}

impl fmt::Display for HostSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.has_pendant() {
            write!(f, "K_{} ⊔ K_{{1,{}}}", self.n_core, self.pendant_k)
        } else {
            write!(f, "K_{}", self.n_core)
        }
    }
}

/// A red/blue coloring of a host. Only red is stored; every other host edge is blue.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TwoColoring {
    host: HostSpec,
    red: Vec<u64>,
}

impl TwoColoring {
    /// Every host edge blue.
    pub fn all_blue(host: HostSpec) -> Self {
        Self {
            host,
            red: vec![0; host.order()],
        }
    }

    /// Every host edge red.
    pub fn all_red(host: HostSpec) -> Self {
        let red = (0..host.order()).map(|v| host.neighbors(v)).collect();
        Self { host, red }
    }

    /// Build from a list of red edges; anything else in the host is blue.
    pub fn from_red_edges<I>(host: HostSpec, edges: I) -> Result<Self, ColoringError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut c = Self::all_blue(host);
        for (u, v) in edges {
            c.set_red(u, v, true)?;
        }
        Ok(c)
    }

    /// Build from red adjacency rows. Rows must be symmetric and inside the host.
    pub fn from_red_rows(host: HostSpec, red: Vec<u64>) -> Result<Self, ColoringError> {
        if red.len() != host.order() {
            return Err(ColoringError::RowCount {
                expected: host.order(),
                found: red.len(),
            });
        }
        for (u, &row) in red.iter().enumerate() {
            if row & !host.neighbors(u) != 0 {
                let v = (row & !host.neighbors(u)).trailing_zeros() as usize;
                return Err(if u == v {
                    ColoringError::SelfLoop(u)
                } else {
                    ColoringError::NotHostEdge(u.min(v), u.max(v))
                });
            }
            for v in bits(row) {
                if red[v] & bit(u) == 0 {
                    return Err(ColoringError::Asymmetric(u, v));
                }
            }
        }
        Ok(Self { host, red })
    }

    /// Recolor a host edge. `red = false` makes it blue.
    pub fn set_red(&mut self, u: Vertex, v: Vertex, red: bool) -> Result<(), ColoringError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(ColoringError::SelfLoop(u));
        }
        if !self.host.is_edge(u, v) {
            return Err(ColoringError::NotHostEdge(u.min(v), u.max(v)));
        }
        if red {
            self.red[u] |= bit(v);
            self.red[v] |= bit(u);
        } else {
            self.red[u] &= !bit(v);
            self.red[v] &= !bit(u);
        }
        Ok(())
    }

    pub fn host(&self) -> HostSpec {
        self.host
    }

    pub fn order(&self) -> usize {
        self.host.order()
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), ColoringError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(ColoringError::InvalidVertex {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Red neighborhood `Γ_R(v)` as a bit mask (unchecked).
    #[inline]
    pub(crate) fn red_row(&self, v: Vertex) -> u64 {
        self.red[v]
    }

    /// Blue neighborhood `Γ_B(v)` as a bit mask (unchecked).
    #[inline]
    pub(crate) fn blue_row(&self, v: Vertex) -> u64 {
        self.host.neighbors(v) & !self.red[v]
    }

    pub fn red_degree(&self, v: Vertex) -> Result<usize, ColoringError> {
        self.check_vertex(v)?;
        Ok(self.red[v].count_ones() as usize)
    }

    pub fn blue_degree(&self, v: Vertex) -> Result<usize, ColoringError> {
        self.check_vertex(v)?;
        Ok(self.blue_row(v).count_ones() as usize)
    }

    pub fn red_neighborhood(&self, v: Vertex) -> Result<Vec<Vertex>, ColoringError> {
        self.check_vertex(v)?;
        Ok(bits(self.red[v]).collect())
    }

    pub fn blue_neighborhood(&self, v: Vertex) -> Result<Vec<Vertex>, ColoringError> {
        self.check_vertex(v)?;
        Ok(bits(self.blue_row(v)).collect())
    }

    pub fn is_red(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && v < self.order() && self.red[u] & bit(v) != 0
    }

    pub fn is_blue(&self, u: Vertex, v: Vertex) -> bool {
        self.host.is_edge(u, v) && !self.is_red(u, v)
    }

    /// Red edges `(i, j)`, `i < j`, in lexicographic order.
    pub fn red_edges(&self) -> Vec<(Vertex, Vertex)> {
        self.host
            .edges()
            .into_iter()
            .filter(|&(u, v)| self.is_red(u, v))
            .collect()
    }

    pub fn blue_edges(&self) -> Vec<(Vertex, Vertex)> {
        self.host
            .edges()
            .into_iter()
            .filter(|&(u, v)| !self.is_red(u, v))
            .collect()
    }

    /// Induced coloring on `keep`.
    ///
    /// Kept core vertices are relabelled in index order with attached vertices first,
    /// so the result is again in normal form. A kept pendant vertex with no kept
    /// attachment would be isolated, which no host shape represents.
    pub fn restrict(&self, keep: &[Vertex]) -> Result<TwoColoring, ColoringError> {
        let mut mask = 0u64;
        for &v in keep {
            self.check_vertex(v)?;
            mask |= bit(v);
        }
        let pendant = self.host.pendant().filter(|&x| mask & bit(x) != 0);
        let core_kept = mask & low_bits(self.host.n_core);
        let attached = core_kept & low_bits(self.host.pendant_k);
        if core_kept == 0 {
            return Err(ColoringError::UnsupportedRestriction(
                "no core vertex kept".into(),
            ));
        }
        if pendant.is_some() && attached == 0 {
            return Err(ColoringError::UnsupportedRestriction(
                "kept pendant vertex has no kept neighbor".into(),
            ));
        }

        // old index -> new index
        let mut order: Vec<Vertex> = bits(attached).collect();
        order.extend(bits(core_kept & !attached));
        let pendant_k = if pendant.is_some() {
            attached.count_ones() as usize
        } else {
            0
        };
        if let Some(x) = pendant {
            order.push(x);
        }
        let host = HostSpec::new(core_kept.count_ones() as usize, pendant_k)?;
        let mut new_index = vec![usize::MAX; self.order()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let red = order
            .iter()
            .map(|&old| {
                bits(self.red[old] & mask).fold(0u64, |row, w| row | bit(new_index[w]))
            })
            .collect();
        Ok(TwoColoring { host, red })
    }

    /// Keep only the first `k` pendant attachment edges (deleting the rest).
    /// `k = 0` drops the pendant vertex entirely.
    pub fn shrink_pendant(&self, k: usize) -> Result<TwoColoring, ColoringError> {
        if k > self.host.pendant_k {
            return Err(ColoringError::PendantTooLarge {
                n_core: self.host.n_core,
                pendant_k: k,
            });
        }
        let host = HostSpec::new(self.host.n_core, k)?;
        let Some(x) = self.host.pendant() else {
            return Ok(self.clone());
        };
        let mut red: Vec<u64> = self.red[..self.host.n_core]
            .iter()
            .map(|&row| row & !bit(x))
            .collect();
        if k > 0 {
            red.push(self.red[x] & low_bits(k));
            for v in bits(red[x]) {
                red[v] |= bit(x);
            }
        }
        Ok(TwoColoring { host, red })
    }

    /// The same core coloring with a pendant vertex attached to the first
    /// `pendant_k` core vertices; `red_attachments` lists which of those are red.
    pub fn with_pendant(
        &self,
        pendant_k: usize,
        red_attachments: &[Vertex],
    ) -> Result<TwoColoring, ColoringError> {
        if self.host.has_pendant() {
            return Err(ColoringError::UnsupportedRestriction(
                "host already has a pendant vertex".into(),
            ));
        }
        let host = HostSpec::new(self.host.n_core, pendant_k)?;
        let mut out = TwoColoring {
            host,
            red: self.red.clone(),
        };
        if let Some(x) = host.pendant() {
            out.red.push(0);
            for &v in red_attachments {
                out.set_red(x, v, true)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for TwoColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TwoColoring")
            .field("host", &self.host)
            .field("red_edges", &self.red_edges())
            .finish()
    }
}
