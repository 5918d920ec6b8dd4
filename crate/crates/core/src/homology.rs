//! Independence complexes and their reduced simplicial homology over a field.
//!
//! Faces are vertex bitmasks. A [`FaceList`] stores the faces layer by layer,
//! layer `k` holding the faces with `k` vertices (dimension `k - 1`), so the
//! empty face sits alone in layer 0. Ranks of boundary maps are computed one
//! pair of layers at a time and thrown away.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    #[default]
    Gf2,
    /// GF(p) for an odd prime `p < 2^32`.
    Prime(u64),
    Rational,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl Field {
    /// GF(p); `p = 2` gives [`Field::Gf2`].
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^32")));
        }
        Ok(if p == 2 { Field::Gf2 } else { Field::Prime(p) })
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Gf2 => write!(f, "GF(2)"),
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `gf2`, `GF(3)`, `gf(5)`, `7`, `q`, `Q`, `rational`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        if matches!(t.as_str(), "q" | "qq" | "rational" | "rationals") {
            return Ok(Field::Rational);
        }
        let digits = t
            .strip_prefix("gf")
            .unwrap_or(&t)
            .trim_start_matches('(')
            .trim_end_matches(')');
        let p = digits
            .parse::<u64>()
            .map_err(|_| Error::InvalidField(format!("unrecognised field {s:?}")))?;
        Field::prime(p)
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A downward-closed family of faces grouped by size.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FaceList {
    layers: Vec<Vec<u64>>,
}

impl FaceList {
    /// `layers()[k]` lists the faces with `k` vertices in increasing bitmask
    /// order.
    pub fn layers(&self) -> &[Vec<u64>] {
        &self.layers
    }

    /// Faces of dimension `d >= -1`.
    pub fn faces_of_dim(&self, d: isize) -> &[u64] {
        usize::try_from(d + 1)
            .ok()
            .and_then(|k| self.layers.get(k))
            .map_or(&[], Vec::as_slice)
    }

    /// `f_{-1}, f_0, ...`.
    pub fn counts(&self) -> Vec<u64> {
        self.layers.iter().map(|l| l.len() as u64).collect()
    }

    pub fn is_void(&self) -> bool {
        self.layers.is_empty()
    }

    /// The smallest complex containing `facets`. Always contains the empty
    /// face.
    pub fn from_facets(facets: &[u64]) -> Self {
        let mut all: Vec<u64> = vec![0];
        for &f in facets {
            // Enumerate all submasks of f.
            let mut sub = f;
            loop {
                all.push(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        all.sort_unstable();
        all.dedup();
        let top = all.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
        let mut layers = vec![Vec::new(); top + 1];
        for f in all {
            layers[f.count_ones() as usize].push(f);
        }
        FaceList { layers }
    }

    /// Whether every face with `k` vertices is in layer `k` and each
    /// codimension-one subface is present.
    pub fn is_downward_closed(&self) -> bool {
        self.layers.iter().enumerate().all(|(k, layer)| {
            layer.windows(2).all(|w| w[0] < w[1])
                && layer.iter().all(|&f| {
                    f.count_ones() as usize == k
                        && VertexSet::from_bits(f)
                            .iter()
                            .all(|v| self.layers[k - 1].binary_search(&(f & !(1 << v))).is_ok())
                })
        })
    }
}

/// All independent sets of `g`, including the empty set.
pub fn independence_faces(g: &Graph) -> FaceList {
    independence_faces_within(g, g.vertices())
}

/// The independence complex of the induced subgraph on `w`, keeping the
/// original vertex labels.
pub fn independence_faces_within(g: &Graph, w: VertexSet) -> FaceList {
    let mut layers = Vec::new();
    collect_independent_sets(g.adjacency(), w.bits(), &mut layers);
    FaceList { layers }
}

/// Fills `layers` (reusing its allocations) with the independent sets of the
/// graph induced on `within`, sorted within each layer.
pub(crate) fn collect_independent_sets(adj: &[u64], within: u64, layers: &mut Vec<Vec<u64>>) {
    for l in layers.iter_mut() {
        l.clear();
    }
    fn push(layers: &mut Vec<Vec<u64>>, face: u64) {
        let k = face.count_ones() as usize;
        if layers.len() <= k {
            layers.resize_with(k + 1, Vec::new);
        }
        layers[k].push(face);
    }
    // Extend `face` by vertices of `cand`, each above the previous one, so
    // every independent set is produced exactly once.
    fn grow(adj: &[u64], face: u64, mut cand: u64, layers: &mut Vec<Vec<u64>>) {
        push(layers, face);
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            grow(adj, face | 1 << v, cand & !adj[v], layers);
        }
    }
    grow(adj, 0, within, layers);
    while layers.last().is_some_and(Vec::is_empty) {
        layers.pop();
    }
    for l in layers.iter_mut() {
        l.sort_unstable();
    }
}

/// Sparse signed boundary map from faces with `k` vertices to faces with
/// `k - 1` vertices: one row per face, entries `(column, ±1)` with the sign
/// `(-1)^i` for removing the `i`-th smallest vertex.
pub fn boundary_rows(faces: &FaceList, k: usize) -> Vec<Vec<(usize, i8)>> {
    let (Some(upper), Some(lower)) = (faces.layers.get(k), k.checked_sub(1).and_then(|j| faces.layers.get(j)))
    else {
        return Vec::new();
    };
    upper
        .iter()
        .map(|&f| {
            VertexSet::from_bits(f)
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    let col = lower
                        .binary_search(&(f & !(1 << v)))
                        .expect("face list is not downward closed");
                    (col, if i % 2 == 0 { 1 } else { -1 })
                })
                .collect()
        })
        .collect()
}

/// Reusable buffers for repeated homology computations.
#[derive(Default)]
pub(crate) struct Scratch {
    pub(crate) layers: Vec<Vec<u64>>,
    bits: Vec<u64>,
    pivots: Vec<u32>,
    dense: Vec<u64>,
    wide: Vec<i128>,
}

/// `dim H̃_d` for `d = -1, 0, 1, ...` (index 0 is degree -1). The void
/// complex gets an empty vector.
pub fn reduced_homology_dims(faces: &FaceList, field: Field) -> Result<Vec<usize>> {
    let mut scratch = Scratch::default();
    homology_of_layers(&faces.layers, field, &mut scratch)
}

pub(crate) fn homology_of_layers(
    layers: &[Vec<u64>],
    field: Field,
    scratch: &mut Scratch,
) -> Result<Vec<usize>> {
    let top = layers.len();
    // rank[k] is the rank of the map from layer k to layer k - 1.
    let mut rank = vec![0usize; top + 1];
    for k in 1..top {
        rank[k] = boundary_rank(&layers[k], &layers[k - 1], field, scratch)?;
    }
    Ok((0..top).map(|k| layers[k].len() - rank[k] - rank[k + 1]).collect())
}

fn boundary_rank(upper: &[u64], lower: &[u64], field: Field, scratch: &mut Scratch) -> Result<usize> {
    if upper.is_empty() || lower.is_empty() {
        return Ok(0);
    }
    let column = |f: u64, v: u32| -> usize {
        lower
            .binary_search(&(f & !(1u64 << v)))
            .expect("face list is not downward closed")
    };
    match field {
        Field::Gf2 => {
            let words = lower.len().div_ceil(64);
            let bits = &mut scratch.bits;
            bits.clear();
            bits.resize(upper.len() * words, 0);
            for (r, &f) in upper.iter().enumerate() {
                let row = &mut bits[r * words..(r + 1) * words];
                let mut rest = f;
                while rest != 0 {
                    let v = rest.trailing_zeros();
                    rest &= rest - 1;
                    let c = column(f, v);
                    row[c / 64] |= 1 << (c % 64);
                }
            }
            Ok(gf2_rank(bits, words, lower.len(), &mut scratch.pivots))
        }
        Field::Prime(p) => {
            let cols = lower.len();
            let m = &mut scratch.dense;
            m.clear();
            m.resize(upper.len() * cols, 0);
            for (r, &f) in upper.iter().enumerate() {
                let mut rest = f;
                let mut i = 0;
                while rest != 0 {
                    let v = rest.trailing_zeros();
                    rest &= rest - 1;
                    m[r * cols + column(f, v)] = if i % 2 == 0 { 1 } else { p - 1 };
                    i += 1;
                }
            }
            Ok(prime_rank(m, cols, p))
        }
        Field::Rational => {
            let cols = lower.len();
            let m = &mut scratch.wide;
            m.clear();
            m.resize(upper.len() * cols, 0);
            for (r, &f) in upper.iter().enumerate() {
                let mut rest = f;
                let mut i = 0;
                while rest != 0 {
                    let v = rest.trailing_zeros();
                    rest &= rest - 1;
                    m[r * cols + column(f, v)] = if i % 2 == 0 { 1 } else { -1 };
                    i += 1;
                }
            }
            rational_rank(m, cols)
        }
    }
}

/// Rank over GF(2) of the rows packed in `rows` (`words` u64 per row).
/// Each row is reduced against stored pivot rows by its lowest set bit.
pub(crate) fn gf2_rank(rows: &mut [u64], words: usize, cols: usize, pivots: &mut Vec<u32>) -> usize {
    const NONE: u32 = u32::MAX;
    pivots.clear();
    pivots.resize(cols, NONE);
    let nrows = rows.len() / words.max(1);
    let mut rank = 0;
    for r in 0..nrows {
        loop {
            let row = &rows[r * words..(r + 1) * words];
            let Some((w, &word)) = row.iter().enumerate().find(|(_, &x)| x != 0) else {
                break;
            };
            let col = w * 64 + word.trailing_zeros() as usize;
            let p = pivots[col];
            if p == NONE {
                pivots[col] = r as u32;
                rank += 1;
                break;
            }
            let p = p as usize;
            // Pivot rows precede r, so split the slice to borrow both.
            let (head, tail) = rows.split_at_mut(r * words);
            let pivot = &head[p * words..(p + 1) * words];
            for (x, &y) in tail[..words].iter_mut().zip(pivot).skip(w) {
                *x ^= y;
            }
        }
    }
    rank
}

fn prime_rank(m: &mut [u64], cols: usize, p: u64) -> usize {
    let rows = m.len() / cols;
    let inv = |a: u64| {
        // Fermat: a^(p-2).
        let (mut base, mut exp, mut acc) = (a, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r * cols + c] != 0) else {
            continue;
        };
        if piv != rank {
            for j in 0..cols {
                m.swap(piv * cols + j, rank * cols + j);
            }
        }
        let scale = inv(m[rank * cols + c]);
        for j in c..cols {
            m[rank * cols + j] = m[rank * cols + j] * scale % p;
        }
        for r in rank + 1..rows {
            let factor = m[r * cols + c];
            if factor == 0 {
                continue;
            }
            for j in c..cols {
                let sub = factor * m[rank * cols + j] % p;
                m[r * cols + j] = (m[r * cols + j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Exact rank over Q by fraction-free elimination, dividing each updated row
/// by the gcd of its entries.
fn rational_rank(m: &mut [i128], cols: usize) -> Result<usize> {
    const OVERFLOW: Error = Error::Overflow("rational elimination");
    let rows = m.len() / cols;
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r * cols + c] != 0) else {
            continue;
        };
        if piv != rank {
            for j in 0..cols {
                m.swap(piv * cols + j, rank * cols + j);
            }
        }
        let a = m[rank * cols + c];
        for r in rank + 1..rows {
            let b = m[r * cols + c];
            if b == 0 {
                continue;
            }
            let mut g = 0;
            for j in c..cols {
                let x = m[r * cols + j].checked_mul(a).ok_or(OVERFLOW)?;
                let y = m[rank * cols + j].checked_mul(b).ok_or(OVERFLOW)?;
                let v = x.checked_sub(y).ok_or(OVERFLOW)?;
                m[r * cols + j] = v;
                g = gcd(g, v);
            }
            if g > 1 {
                for j in c..cols {
                    m[r * cols + j] /= g;
                }
            }
        }
        rank += 1;
    }
    Ok(rank)
}
