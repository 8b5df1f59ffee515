//! Distance-regularized graphs: local intersection arrays, classification
//! into distance-regular and distance-biregular graphs, and intersection
//! numbers obtained both from the array recurrences and by direct counting.
//!
//! Conventions:
//! - `K1` is distance-regular with the empty array (diameter 0).
//! - For a distance-biregular graph the part listed first (`iota1`, `X′`)
//!   is the one with the larger valency; on a tie, the lexicographically
//!   larger array.
//! - Array entries outside `0..=d` count as zero in the recurrences.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{DistanceTable, Graph};
use crate::spectral::{char_poly, cospectral};

/// Per-layer counts `c_i(x)`, `a_i(x)`, `b_i(x)` for `0 ≤ i ≤ d(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrayRows {
    pub c: Vec<usize>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalArray {
    pub vertex: usize,
    pub eccentricity: usize,
    /// `None` when some layer has vertices with different counts.
    pub rows: Option<ArrayRows>,
}

impl LocalArray {
    pub fn is_regularized(&self) -> bool {
        self.rows.is_some()
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        Err(Error::Empty)
    } else if !g.is_connected() {
        Err(Error::Disconnected)
    } else {
        Ok(())
    }
}

pub fn local_array(g: &Graph, x: usize) -> Result<LocalArray> {
    require_connected(g)?;
    if x >= g.order() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.order() });
    }
    Ok(local_array_with(g, &g.distances(), x))
}

fn local_array_with(g: &Graph, dist: &DistanceTable, x: usize) -> LocalArray {
    let n = g.order();
    let ecc = dist.eccentricity(x).expect("connected");
    let mut rows: Vec<Option<(usize, usize, usize)>> = vec![None; ecc + 1];
    let mut regular = true;
    for y in 0..n {
        let i = dist.get(x, y).unwrap();
        let (mut c, mut a, mut b) = (0, 0, 0);
        for &z in g.neighbors(y) {
            let j = dist.get(x, z).unwrap();
            if j + 1 == i {
                c += 1;
            } else if j == i {
                a += 1;
            } else {
                b += 1;
            }
        }
        match rows[i] {
            None => rows[i] = Some((c, a, b)),
            Some(prev) if prev != (c, a, b) => regular = false,
            Some(_) => {}
        }
    }
    let rows = regular.then(|| {
        let triples: Vec<_> = rows.into_iter().map(Option::unwrap).collect();
        ArrayRows {
            c: triples.iter().map(|t| t.0).collect(),
            a: triples.iter().map(|t| t.1).collect(),
            b: triples.iter().map(|t| t.2).collect(),
        }
    });
    LocalArray { vertex: x, eccentricity: ecc, rows }
}

/// `{b_0, …, b_{d-1}; c_1, …, c_d}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntersectionArray {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl IntersectionArray {
    pub fn new(b: Vec<usize>, c: Vec<usize>) -> Result<Self> {
        if b.len() != c.len() {
            return Err(Error::InvalidArray(format!(
                "{} b-entries but {} c-entries",
                b.len(),
                c.len()
            )));
        }
        Ok(IntersectionArray { b, c })
    }

    fn from_rows(rows: &ArrayRows) -> Self {
        let d = rows.b.len() - 1;
        IntersectionArray { b: rows.b[..d].to_vec(), c: rows.c[1..].to_vec() }
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn valency(&self) -> usize {
        self.b.first().copied().unwrap_or(0)
    }

    /// `b_i`, zero outside `0..d`.
    pub fn b_at(&self, i: isize) -> i64 {
        usize::try_from(i).ok().and_then(|i| self.b.get(i)).map_or(0, |&v| v as i64)
    }

    /// `c_i`, zero outside `1..=d`.
    pub fn c_at(&self, i: isize) -> i64 {
        if i < 1 {
            return 0;
        }
        self.c.get(i as usize - 1).map_or(0, |&v| v as i64)
    }

    /// `a_i = b_0 - b_i - c_i` for `0 ≤ i ≤ d`, zero outside.
    pub fn a_at(&self, i: isize) -> i64 {
        if i < 0 || i as usize > self.diameter() {
            return 0;
        }
        self.valency() as i64 - self.b_at(i) - self.c_at(i)
    }
}

impl std::fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{}; {}}}", join(&self.b), join(&self.c))
    }
}

/// The two arrays of a distance-biregular graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiregularArrays {
    pub iota1: IntersectionArray,
    pub iota2: IntersectionArray,
    /// Valency on `X′`.
    pub k: usize,
    /// Valency on `X″`.
    pub l: usize,
    /// `|X′|`.
    pub p: usize,
    /// `|X″|`.
    pub q: usize,
}

impl BiregularArrays {
    /// `b′_i + c′_i` alternates `k, ℓ, k, …` and `b″_i + c″_i` alternates
    /// `ℓ, k, ℓ, …`.
    pub fn parity_rule_holds(&self) -> bool {
        let rule = |arr: &IntersectionArray, even: usize, odd: usize| {
            (0..=arr.diameter()).all(|i| {
                let want = if i % 2 == 0 { even } else { odd } as i64;
                let sum = arr.b_at(i as isize) + arr.c_at(i as isize);
                // b_d = 0 at the far end, where c_d alone carries the sum
                sum == want
            })
        };
        rule(&self.iota1, self.k, self.l) && rule(&self.iota2, self.l, self.k)
    }

    pub fn edge_counts_agree(&self) -> bool {
        self.k * self.p == self.l * self.q
    }

    /// Equal as an unordered pair of arrays.
    pub fn same_arrays(&self, other: &BiregularArrays) -> bool {
        (self.iota1 == other.iota1 && self.iota2 == other.iota2)
            || (self.iota1 == other.iota2 && self.iota2 == other.iota1)
    }
}

impl Serialize for BiregularArrays {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BiregularArrays", 4)?;
        st.serialize_field("iota1", &self.iota1)?;
        st.serialize_field("iota2", &self.iota2)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("l", &self.l)?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    DistanceRegular(IntersectionArray),
    DistanceBiregular(BiregularArrays),
    /// Distance-regularized but neither of the above. Never produced for a
    /// correct implementation; kept so that reaching it is observable.
    DistanceRegularizedOther,
    NotDistanceRegularized,
}

impl Classification {
    pub fn kind(&self) -> &'static str {
        match self {
            Classification::DistanceRegular(_) => "distance-regular",
            Classification::DistanceBiregular(_) => "distance-biregular",
            Classification::DistanceRegularizedOther => "distance-regularized-other",
            Classification::NotDistanceRegularized => "not-distance-regularized",
        }
    }

    pub fn is_distance_regularized(&self) -> bool {
        matches!(
            self,
            Classification::DistanceRegular(_) | Classification::DistanceBiregular(_)
        )
    }
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Classification", 2)?;
        st.serialize_field("kind", self.kind())?;
        match self {
            Classification::DistanceRegular(a) => st.serialize_field("arrays", a)?,
            Classification::DistanceBiregular(a) => st.serialize_field("arrays", a)?,
            _ => st.serialize_field("arrays", &())?,
        }
        st.end()
    }
}

struct Analysis {
    dist: DistanceTable,
    locals: Vec<LocalArray>,
    classification: Classification,
    /// For biregular graphs: membership of `X′`.
    first_part: Option<Vec<bool>>,
}

fn analyse(g: &Graph) -> Result<Analysis> {
    require_connected(g)?;
    let dist = g.distances();
    let locals: Vec<_> = (0..g.order()).map(|x| local_array_with(g, &dist, x)).collect();
    let mut out = Analysis {
        dist,
        locals,
        classification: Classification::NotDistanceRegularized,
        first_part: None,
    };
    if !out.locals.iter().all(LocalArray::is_regularized) {
        return Ok(out);
    }
    let rows: Vec<&ArrayRows> = out.locals.iter().map(|l| l.rows.as_ref().unwrap()).collect();
    if rows.windows(2).all(|w| w[0] == w[1]) {
        out.classification = Classification::DistanceRegular(IntersectionArray::from_rows(rows[0]));
        return Ok(out);
    }
    let Some(side) = g.bipartition() else {
        out.classification = Classification::DistanceRegularizedOther;
        return Ok(out);
    };
    let pick = |s: bool| (0..g.order()).find(|&x| side[x] == s).map(|x| rows[x]);
    let (Some(r0), Some(r1)) = (pick(false), pick(true)) else {
        out.classification = Classification::DistanceRegularizedOther;
        return Ok(out);
    };
    if (0..g.order()).any(|x| rows[x] != if side[x] { r1 } else { r0 }) {
        out.classification = Classification::DistanceRegularizedOther;
        return Ok(out);
    }
    let a0 = IntersectionArray::from_rows(r0);
    let a1 = IntersectionArray::from_rows(r1);
    // X′ is the part with larger valency, then the larger array
    let first_is_false = (a0.valency(), &a0) > (a1.valency(), &a1);
    let (iota1, iota2) = if first_is_false { (a0, a1) } else { (a1, a0) };
    let first_part: Vec<bool> = side.iter().map(|&s| s != first_is_false).collect();
    let p = first_part.iter().filter(|&&b| b).count();
    let arrays = BiregularArrays {
        k: iota1.valency(),
        l: iota2.valency(),
        p,
        q: g.order() - p,
        iota1,
        iota2,
    };
    if !arrays.parity_rule_holds() || !arrays.edge_counts_agree() {
        return Err(Error::Internal(format!("inconsistent biregular arrays {arrays:?}")));
    }
    if rows.iter().any(|r| r.a.iter().any(|&a| a != 0)) {
        return Err(Error::Internal("bipartite graph with a_i > 0".into()));
    }
    out.classification = Classification::DistanceBiregular(arrays);
    out.first_part = Some(first_part);
    Ok(out)
}

/// Classifies a connected graph by its local intersection arrays.
pub fn classify(g: &Graph) -> Result<Classification> {
    Ok(analyse(g)?.classification)
}

/// Dense tensor `p_ij(k)`; out-of-range reads are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PTensor {
    pub ni: usize,
    pub nj: usize,
    pub nk: usize,
    data: Vec<u64>,
}

impl PTensor {
    fn zeros(ni: usize, nj: usize, nk: usize) -> Self {
        PTensor { ni, nj, nk, data: vec![0; ni * nj * nk] }
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.nj + j) * self.nk + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        if i < self.ni && j < self.nj && k < self.nk {
            self.data[self.idx(i, j, k)]
        } else {
            0
        }
    }

    fn geti(&self, i: isize, j: isize, k: usize) -> i64 {
        if i < 0 || j < 0 {
            0
        } else {
            self.get(i as usize, j as usize, k) as i64
        }
    }

    fn set(&mut self, i: usize, j: usize, k: usize, v: u64) {
        let t = self.idx(i, j, k);
        self.data[t] = v;
    }
}

impl Serialize for PTensor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let nested: Vec<Vec<&[u64]>> = (0..self.ni)
            .map(|i| (0..self.nj).map(|j| &self.data[self.idx(i, j, 0)..self.idx(i, j, 0) + self.nk]).collect())
            .collect();
        nested.serialize(s)
    }
}

fn checked_quotient(num: i64, den: i64, at: (usize, usize, usize)) -> Result<u64> {
    if den <= 0 {
        return Err(Error::InvalidArray(format!("non-positive divisor at p{at:?}")));
    }
    if num % den != 0 {
        return Err(Error::InvalidArray(format!("{num}/{den} is not an integer at p{at:?}")));
    }
    let v = num / den;
    u64::try_from(v).map_err(|_| Error::InvalidArray(format!("negative value {v} at p{at:?}")))
}

fn check_first_row(t: &PTensor) -> Result<()> {
    for j in 0..t.nj {
        for k in 0..t.nk {
            if t.get(0, j, k) != u64::from(j == k) {
                return Err(Error::InvalidArray(format!("p_0{j}({k}) differs from δ")));
            }
        }
    }
    Ok(())
}

/// Intersection numbers of a distance-regular graph from its array:
/// `p_i0(k) = δ_ik`; `p_i1(k)` is `c_{i+1}`, `a_i` or `b_{i-1}` for
/// `k = i+1, i, i-1`; and for `j ≥ 1`
///
/// `c_{j+1} p_{i,j+1}(k) = b_{i-1} p_{i-1,j}(k) + (a_i - a_j) p_ij(k) + c_{i+1} p_{i+1,j}(k) - b_{j-1} p_{i,j-1}(k)`.
pub fn drg_pnums(iota: &IntersectionArray) -> Result<PTensor> {
    let d = iota.diameter();
    for i in 0..=d {
        if iota.a_at(i as isize) < 0 {
            return Err(Error::InvalidArray(format!("a_{i} < 0 in {iota}")));
        }
    }
    let mut t = PTensor::zeros(d + 1, d + 1, d + 1);
    for k in 0..=d {
        for i in 0..=d {
            t.set(i, 0, k, u64::from(i == k));
            if d >= 1 {
                let ii = i as isize;
                let v = if k == i + 1 {
                    iota.c_at(ii + 1)
                } else if k == i {
                    iota.a_at(ii)
                } else if k + 1 == i {
                    iota.b_at(ii - 1)
                } else {
                    0
                };
                t.set(i, 1, k, v as u64);
            }
        }
    }
    for j in 1..d {
        let jj = j as isize;
        for k in 0..=d {
            for i in 0..=d {
                let ii = i as isize;
                let num = t.geti(ii - 1, jj, k) * iota.b_at(ii - 1)
                    + t.geti(ii, jj, k) * (iota.a_at(ii) - iota.a_at(jj))
                    + t.geti(ii + 1, jj, k) * iota.c_at(ii + 1)
                    - t.geti(ii, jj - 1, k) * iota.b_at(jj - 1);
                let v = checked_quotient(num, iota.c_at(jj + 1), (i, j + 1, k))?;
                t.set(i, j + 1, k, v);
            }
        }
    }
    check_first_row(&t)?;
    Ok(t)
}

/// Intersection numbers `p′` (rooted in `X′`) and `p″` (rooted in `X″`) of a
/// distance-biregular graph. Bipartite, so every `a`-term vanishes; the
/// `j`-side of the recurrence uses the array of the part containing `y`,
/// which is the root's own part for even `k` and the other part for odd `k`.
pub fn dbrg_pnums(arrays: &BiregularArrays) -> Result<(PTensor, PTensor)> {
    if !arrays.parity_rule_holds() {
        return Err(Error::InvalidArray("parity sum rule violated".into()));
    }
    let first = one_side(&arrays.iota1, &arrays.iota2)?;
    let second = one_side(&arrays.iota2, &arrays.iota1)?;
    Ok((first, second))
}

fn one_side(own: &IntersectionArray, other: &IntersectionArray) -> Result<PTensor> {
    let dx = own.diameter();
    let dmax = dx.max(other.diameter());
    let mut t = PTensor::zeros(dx + 1, dmax + 1, dx + 1);
    for k in 0..=dx {
        let ys = if k % 2 == 0 { own } else { other };
        let dy = ys.diameter();
        for i in 0..=dx {
            t.set(i, 0, k, u64::from(i == k));
            if dy >= 1 {
                let ii = i as isize;
                let v = if k == i + 1 {
                    own.c_at(ii + 1)
                } else if k + 1 == i {
                    own.b_at(ii - 1)
                } else {
                    0
                };
                t.set(i, 1, k, v as u64);
            }
        }
        for j in 1..dy {
            let jj = j as isize;
            for i in 0..=dx {
                let ii = i as isize;
                let num = t.geti(ii - 1, jj, k) * own.b_at(ii - 1) + t.geti(ii + 1, jj, k) * own.c_at(ii + 1)
                    - t.geti(ii, jj - 1, k) * ys.b_at(jj - 1);
                let v = checked_quotient(num, ys.c_at(jj + 1), (i, j + 1, k))?;
                t.set(i, j + 1, k, v);
            }
        }
    }
    check_first_row(&t)?;
    Ok(t)
}

/// Intersection numbers counted directly as `|Γ_i(x) ∩ Γ_j(y)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CountedPNumbers {
    Regular(PTensor),
    Biregular(PTensor, PTensor),
}

/// Counts `|Γ_i(x) ∩ Γ_j(y)|` over all pairs and checks that it depends
/// only on `d(x, y)` (and the part of `x`).
pub fn count_pnums(g: &Graph) -> Result<CountedPNumbers> {
    let an = analyse(g)?;
    let n = g.order();
    let dist = &an.dist;
    let count_from = |part: &dyn Fn(usize) -> bool, ni: usize, nj: usize| -> Result<PTensor> {
        let mut t = PTensor::zeros(ni, nj, ni);
        let mut seen = vec![false; ni];
        let mut scratch = vec![0u64; ni * nj];
        for x in (0..n).filter(|&x| part(x)) {
            for y in 0..n {
                let k = dist.get(x, y).unwrap();
                scratch.iter_mut().for_each(|v| *v = 0);
                for z in 0..n {
                    let i = dist.get(x, z).unwrap();
                    let j = dist.get(y, z).unwrap();
                    scratch[i * nj + j] += 1;
                }
                for i in 0..ni {
                    for j in 0..nj {
                        let v = scratch[i * nj + j];
                        if !seen[k] {
                            t.set(i, j, k, v);
                        } else if t.get(i, j, k) != v {
                            return Err(Error::Internal(format!(
                                "|Γ_{i}({x}) ∩ Γ_{j}({y})| = {v} breaks constancy at distance {k}"
                            )));
                        }
                    }
                }
                seen[k] = true;
            }
        }
        Ok(t)
    };
    match &an.classification {
        Classification::DistanceRegular(iota) => {
            let d = iota.diameter() + 1;
            Ok(CountedPNumbers::Regular(count_from(&|_| true, d, d)?))
        }
        Classification::DistanceBiregular(arrays) => {
            let first = an.first_part.as_ref().expect("set for biregular graphs");
            let d1 = arrays.iota1.diameter() + 1;
            let d2 = arrays.iota2.diameter() + 1;
            let dm = d1.max(d2);
            Ok(CountedPNumbers::Biregular(
                count_from(&|x| first[x], d1, dm)?,
                count_from(&|x| !first[x], d2, dm)?,
            ))
        }
        other => Err(Error::Precondition(format!(
            "counting intersection numbers needs a distance-regularized graph, got {}",
            other.kind()
        ))),
    }
}

/// Whether the recurrence tensors equal the counted ones, entry for entry.
pub fn recurrence_matches_count(g: &Graph) -> Result<bool> {
    let counted = count_pnums(g)?;
    Ok(match (classify(g)?, counted) {
        (Classification::DistanceRegular(iota), CountedPNumbers::Regular(c)) => drg_pnums(&iota)? == c,
        (Classification::DistanceBiregular(arr), CountedPNumbers::Biregular(c1, c2)) => {
            dbrg_pnums(&arr)? == (c1, c2)
        }
        _ => false,
    })
}

/// A bipartition `X′ ∪ X″` in which every vertex of `X′` has degree `k`
/// and every vertex of `X″` has degree `ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiregularBipartition {
    /// `true` for vertices of `X′`.
    pub first: Vec<bool>,
    pub k: usize,
    pub l: usize,
}

impl SemiregularBipartition {
    pub fn swapped(&self) -> Self {
        SemiregularBipartition {
            first: self.first.iter().map(|b| !b).collect(),
            k: self.l,
            l: self.k,
        }
    }

    pub fn p(&self) -> usize {
        self.first.iter().filter(|&&b| b).count()
    }

    pub fn q(&self) -> usize {
        self.first.len() - self.p()
    }

    fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.order();
        let ok = self.first.len() == n
            && (0..n).all(|x| {
                g.degree(x) == if self.first[x] { self.k } else { self.l }
                    && g.neighbors(x).iter().all(|&y| self.first[y] != self.first[x])
            });
        if ok {
            Ok(())
        } else {
            Err(Error::Precondition("not a semiregular bipartition of the graph".into()))
        }
    }
}

/// Finds a semiregular bipartition with `X′` containing vertex 0.
/// Requires at least one edge and no isolated vertices.
pub fn semiregular_bipartition(g: &Graph) -> Result<SemiregularBipartition> {
    let not = |why: &str| Error::Precondition(format!("not bipartite semiregular: {why}"));
    if g.size() == 0 {
        return Err(not("no edges"));
    }
    if (0..g.order()).any(|x| g.degree(x) == 0) {
        return Err(not("isolated vertex"));
    }
    let side = g.bipartition().ok_or_else(|| not("odd cycle"))?;
    let comps = g.components();
    let k = g.degree(0);
    let l = g.degree(g.neighbors(0)[0]);
    let mut first = vec![false; g.order()];
    for comp in comps {
        let root = comp[0];
        let other = g.neighbors(root)[0];
        let (dr, do_) = (g.degree(root), g.degree(other));
        // orient the component so its root side has degree k
        let root_first = if (dr, do_) == (k, l) {
            true
        } else if (dr, do_) == (l, k) {
            false
        } else {
            return Err(not("components with different degree pairs"));
        };
        for &x in &comp {
            first[x] = (side[x] == side[root]) == root_first;
        }
    }
    let b = SemiregularBipartition { first, k, l };
    b.validate(g)?;
    Ok(b)
}

/// The spectral identities behind the degree-swap relation for cospectral
/// bipartite semiregular graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SemiregularReport {
    pub k: usize,
    pub l: usize,
    pub k_bar: usize,
    pub l_bar: usize,
    /// `n = n̄`.
    pub orders_equal: bool,
    /// `kp = ℓq = |E|` and `k̄p̄ = ℓ̄q̄ = |Ē|` with `|E| = |Ē|`.
    pub edge_identities_hold: bool,
    /// `x² − kℓ` divides both characteristic polynomials (`±√(kℓ)` are eigenvalues).
    pub perron_root_divides: bool,
    /// `kℓ = k̄ℓ̄`.
    pub products_equal: bool,
    pub degrees_differ: bool,
    /// `k = ℓ̄` and `ℓ = k̄`; `None` when the degrees do not differ.
    pub swap_holds: Option<bool>,
}

impl SemiregularReport {
    pub fn all_hold(&self) -> bool {
        self.orders_equal
            && self.edge_identities_hold
            && self.perron_root_divides
            && self.products_equal
            && self.swap_holds != Some(false)
    }
}

pub fn semiregular_spectral_check(g: &Graph, h: &Graph) -> Result<SemiregularReport> {
    let bg = semiregular_bipartition(g)?;
    let bh = semiregular_bipartition(h)?;
    semiregular_spectral_check_with(g, &bg, h, &bh)
}

/// As [`semiregular_spectral_check`], with explicitly chosen bipartitions.
pub fn semiregular_spectral_check_with(
    g: &Graph,
    bg: &SemiregularBipartition,
    h: &Graph,
    bh: &SemiregularBipartition,
) -> Result<SemiregularReport> {
    bg.validate(g)?;
    bh.validate(h)?;
    if !cospectral(g, h) {
        return Err(Error::Precondition("graphs are not cospectral".into()));
    }
    let (k, l, kb, lb) = (bg.k, bg.l, bh.k, bh.l);
    let (m, mb) = (g.size(), h.size());
    let edge_identities_hold =
        k * bg.p() == m && l * bg.q() == m && kb * bh.p() == mb && lb * bh.q() == mb && m == mb;
    let kl = num_bigint::BigInt::from(k * l);
    let klb = num_bigint::BigInt::from(kb * lb);
    let perron_root_divides = char_poly(g).divisible_by_x2_minus(&kl) && char_poly(h).divisible_by_x2_minus(&klb);
    let degrees_differ = k != kb || l != lb;
    Ok(SemiregularReport {
        k,
        l,
        k_bar: kb,
        l_bar: lb,
        orders_equal: g.order() == h.order(),
        edge_identities_hold,
        perron_root_divides,
        products_equal: k * l == kb * lb,
        degrees_differ,
        swap_holds: degrees_differ.then_some(k == lb && l == kb),
    })
}

/// `(cospectral, same arrays)` for two distance-biregular graphs. The two
/// answers coincide for every such pair.
pub fn dbrg_cospectral_iff_arrays(g: &Graph, h: &Graph) -> Result<(bool, bool)> {
    let arrays = |x: &Graph| match classify(x)? {
        Classification::DistanceBiregular(a) => Ok(a),
        other => Err(Error::Precondition(format!("expected distance-biregular, got {}", other.kind()))),
    };
    let (a, b) = (arrays(g)?, arrays(h)?);
    Ok((cospectral(g, h), a.same_arrays(&b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn arr(b: &[usize], c: &[usize]) -> IntersectionArray {
        IntersectionArray::new(b.to_vec(), c.to_vec()).unwrap()
    }

    #[test]
    fn petersen_local_array() {
        let g = petersen();
        for x in 0..10 {
            let la = local_array(&g, x).unwrap();
            let rows = la.rows.unwrap();
            assert_eq!(rows.c, vec![0, 1, 1]);
            assert_eq!(rows.a, vec![0, 0, 2]);
            assert_eq!(rows.b, vec![3, 2, 0]);
        }
    }

    #[test]
    fn cycle_and_path_local_arrays() {
        let la = local_array(&cycle(8).unwrap(), 3).unwrap();
        assert!(la.is_regularized());
        assert_eq!(la.eccentricity, 4);
        let p3 = path(3).unwrap();
        assert!(local_array(&p3, 1).unwrap().is_regularized());
        assert!(local_array(&p3, 0).unwrap().is_regularized());
        let p4 = path(4).unwrap();
        // from the end vertex 0, layer 1 is {1} with b = 1, layer 2 is {2} ... all singletons
        assert!(local_array(&p4, 0).unwrap().is_regularized());
        // from vertex 1, layer 1 is {0, 2} with b-values 0 and 1
        assert!(!local_array(&p4, 1).unwrap().is_regularized());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify(&petersen()).unwrap(),
            Classification::DistanceRegular(arr(&[3, 2], &[1, 1]))
        );
        assert_eq!(
            classify(&cycle(8).unwrap()).unwrap(),
            Classification::DistanceRegular(arr(&[2, 1, 1, 1], &[1, 1, 1, 2]))
        );
        assert_eq!(
            classify(&complete(1).unwrap()).unwrap(),
            Classification::DistanceRegular(arr(&[], &[]))
        );
        assert_eq!(classify(&path(4).unwrap()).unwrap(), Classification::NotDistanceRegularized);
        let Classification::DistanceBiregular(a) = classify(&subdivision(&complete(4).unwrap())).unwrap() else {
            panic!("expected distance-biregular");
        };
        assert_eq!(a.iota1, arr(&[3, 1, 2], &[1, 1, 2]));
        assert_eq!(a.iota2, arr(&[2, 2, 1, 1], &[1, 1, 2, 2]));
        assert_eq!((a.k, a.l, a.p, a.q), (3, 2, 4, 6));
        let Classification::DistanceBiregular(p3) = classify(&path(3).unwrap()).unwrap() else {
            panic!("P3 is distance-biregular");
        };
        assert_eq!(p3.iota1, arr(&[2], &[1]));
        assert_eq!(p3.iota2, arr(&[1, 1], &[1, 1]));
    }

    #[test]
    fn classify_rejects_disconnected() {
        let g = disjoint_union(&cycle(4).unwrap(), &complete(1).unwrap());
        assert_eq!(classify(&g), Err(Error::Disconnected));
        assert_eq!(classify(&Graph::empty(0)), Err(Error::Empty));
    }

    #[test]
    fn petersen_recurrence_values() {
        let t = drg_pnums(&arr(&[3, 2], &[1, 1])).unwrap();
        assert_eq!(t.get(1, 1, 2), 1);
        assert_eq!(t.get(1, 1, 1), 0);
        for i in 0..3 {
            for k in 0..3 {
                assert_eq!(t.get(i, 0, k), u64::from(i == k));
            }
        }
        // valencies: k_2 = p_22(0) = 6
        assert_eq!(t.get(2, 2, 0), 6);
    }

    #[test]
    fn recurrence_equals_counting_on_named_graphs() {
        let graphs = [
            petersen(),
            cycle(8).unwrap(),
            cycle(7).unwrap(),
            complete(5).unwrap(),
            complete_bipartite(2, 3).unwrap(),
            subdivision(&complete(4).unwrap()),
            rook_graph(4, 4).unwrap(),
            shrikhande(),
        ];
        for g in &graphs {
            assert!(recurrence_matches_count(g).unwrap(), "{}", crate::graph::graph6::write_graph6(g));
        }
    }

    #[test]
    fn biregular_base_values() {
        let Classification::DistanceBiregular(a) = classify(&subdivision(&complete(4).unwrap())).unwrap() else {
            unreachable!()
        };
        let (p1, p2) = dbrg_pnums(&a).unwrap();
        assert_eq!(p1.get(1, 1, 2), 1);
        assert_eq!(p2.get(1, 1, 2), 1);
        for j in 0..p2.nj {
            for k in 0..p2.nk {
                assert_eq!(p2.get(0, j, k), u64::from(j == k));
            }
        }
        // two subdivision vertices at distance 2 share exactly one neighbour
        let g = subdivision(&complete(4).unwrap());
        let d = g.distances();
        for x in 4..10 {
            for y in 4..10 {
                if d.get(x, y) == Some(2) {
                    let common = g.neighbors(x).iter().filter(|z| g.adjacent(**z, y)).count();
                    assert_eq!(common, 1);
                }
            }
        }
    }

    #[test]
    fn invalid_arrays_are_rejected() {
        // c_2 = 2 does not divide the p_{i2} numerators
        assert!(drg_pnums(&arr(&[3, 1], &[1, 2])).is_err());
        // a_1 negative
        assert!(drg_pnums(&arr(&[2, 2], &[1, 1])).is_err());
    }

    #[test]
    fn semiregular_swap() {
        let star = complete_bipartite(1, 4).unwrap();
        let b = semiregular_bipartition(&star).unwrap();
        assert_eq!((b.k, b.l), (4, 1));
        let r = semiregular_spectral_check_with(&star, &b, &star, &b.swapped()).unwrap();
        assert_eq!((r.k, r.l, r.k_bar, r.l_bar), (4, 1, 1, 4));
        assert_eq!(r.swap_holds, Some(true));
        assert!(r.all_hold());

        let k23 = complete_bipartite(2, 3).unwrap();
        let r = semiregular_spectral_check(&k23, &k23).unwrap();
        assert_eq!(r.swap_holds, None);
        assert!(r.all_hold());

        assert!(semiregular_spectral_check(&cycle(5).unwrap(), &cycle(5).unwrap()).is_err());
        assert!(semiregular_spectral_check(&k23, &complete_bipartite(1, 5).unwrap()).is_err());
    }

    #[test]
    fn biregular_cospectrality() {
        let s = subdivision(&complete(4).unwrap());
        assert_eq!(dbrg_cospectral_iff_arrays(&s, &s).unwrap(), (true, true));
        let (a, b) = (complete_bipartite(2, 3).unwrap(), complete_bipartite(2, 4).unwrap());
        assert_eq!(dbrg_cospectral_iff_arrays(&a, &b).unwrap(), (false, false));
        let (a, b) = (path(3).unwrap(), complete_bipartite(1, 3).unwrap());
        assert_eq!(dbrg_cospectral_iff_arrays(&a, &b).unwrap(), (false, false));
        assert!(dbrg_cospectral_iff_arrays(&petersen(), &s).is_err());
    }

    #[test]
    fn json_forms() {
        let a = arr(&[3, 2], &[1, 1]);
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"{"b":[3,2],"c":[1,1]}"#);
        let Classification::DistanceBiregular(b) = classify(&path(3).unwrap()).unwrap() else {
            unreachable!()
        };
        assert_eq!(
            serde_json::to_string(&b).unwrap(),
            r#"{"iota1":{"b":[2],"c":[1]},"iota2":{"b":[1,1],"c":[1,1]},"k":2,"l":1}"#
        );
    }
}
