//! Exhaustive verification of the implication suite over small graphs.
//!
//! Builtin enumeration walks every labeled graph on `1..=n_max` vertices.
//! Labeled graphs are bucketed by (characteristic polynomial, colour
//! refinement trace, coherent configuration fingerprint); one
//! representative per bucket enters the pair stage, where every two
//! representatives with the same order and size are compared. Each
//! representative is also compared against the last labeled graph of its
//! bucket, which exercises certificates with nontrivial permutations.
//!
//! Isomorphic graphs always share a bucket, so every isomorphism class is
//! represented. Buckets may also merge non-isomorphic graphs; that only
//! removes redundant pairs from the pair stage.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use rayon::prelude::*;
use serde::Serialize;

use crate::coherent::wl2_refine;
use crate::control::is_controllable;
use crate::drg::{semiregular_bipartition, semiregular_spectral_check, SemiregularReport};
use crate::error::{Error, Result};
use crate::graph::{find_isomorphism, Graph};
use crate::linalg::CharPoly;
use crate::refine::{color_refine, ColorEncoding};
use crate::report::{pair_report, Check, GraphFacts, PairReport, Suite};
use crate::spectral::char_poly;

/// Largest order accepted for builtin enumeration.
pub const MAX_ENUMERATION_ORDER: usize = 7;

#[derive(Clone, Debug)]
pub enum Source {
    Enumerate { n_max: usize },
    Graphs(Vec<Graph>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckTally {
    pub check: Check,
    pub applicable: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub check: String,
    pub graphs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusRow {
    pub n: usize,
    pub graphs: usize,
    pub controllable: usize,
    pub representatives: usize,
    pub controllable_representatives: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InterestingPairs {
    pub cospectral_not_c3: Vec<[String; 2]>,
    pub c2_not_cospectral: Vec<[String; 2]>,
    pub c3_not_isomorphic: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusSummary {
    pub source: String,
    pub suite: Suite,
    pub graphs: usize,
    pub representatives: usize,
    pub pairs_compared: usize,
    pub checks: Vec<CheckTally>,
    pub violations: Vec<Violation>,
    pub controllable_census: Vec<CensusRow>,
    pub interesting_pairs: InterestingPairs,
}

impl CorpusSummary {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn tally(&self, check: Check) -> Option<&CheckTally> {
        self.checks.iter().find(|t| t.check == check)
    }

    pub fn to_human(&self) -> String {
        use std::fmt::Write as _;
        let mut s = String::new();
        let _ = writeln!(s, "source: {}", self.source);
        let _ = writeln!(
            s,
            "graphs: {}  representatives: {}  pairs compared: {}",
            self.graphs, self.representatives, self.pairs_compared
        );
        let _ = writeln!(s, "{:<42} {:>12} {:>10}", "check", "applicable", "violated");
        for t in &self.checks {
            let _ = writeln!(s, "{:<42} {:>12} {:>10}", t.check.name(), t.applicable, t.violations);
        }
        let _ = writeln!(s, "controllable census:");
        let _ = writeln!(s, "  {:>3} {:>10} {:>13} {:>8} {:>13}", "n", "graphs", "controllable", "reps", "ctrl reps");
        for r in &self.controllable_census {
            let _ = writeln!(
                s,
                "  {:>3} {:>10} {:>13} {:>8} {:>13}",
                r.n, r.graphs, r.controllable, r.representatives, r.controllable_representatives
            );
        }
        let ip = &self.interesting_pairs;
        let _ = writeln!(s, "interesting pairs:");
        for (name, list) in [
            ("cospectral, not c3", &ip.cospectral_not_c3),
            ("c2, not cospectral", &ip.c2_not_cospectral),
            ("c3, not isomorphic", &ip.c3_not_isomorphic),
        ] {
            let _ = writeln!(s, "  {name}: {}", list.len());
            for [a, b] in list.iter().take(10) {
                let _ = writeln!(s, "    {a} {b}");
            }
        }
        if self.violations.is_empty() {
            let _ = writeln!(s, "violations: none");
        } else {
            let _ = writeln!(s, "violations: {}", self.violations.len());
            for v in &self.violations {
                let _ = writeln!(s, "  {}: {}", v.check, v.graphs.join(" "));
            }
        }
        s
    }
}

/// Labeled graph number `mask` on `n` vertices; bit `e` selects the `e`-th
/// pair `(u, v)`, `u < v`, in lexicographic order.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut e = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> e & 1 == 1 {
                edges.push((u, v));
            }
            e += 1;
        }
    }
    Graph::new(n, &edges).expect("valid by construction")
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct BucketKey {
    edges: usize,
    poly: CharPoly,
    trace: Vec<Vec<(ColorEncoding, usize)>>,
    /// Hash of the coherent configuration fingerprint; 0 when colour
    /// refinement is already discrete (the trace then fixes the graph up
    /// to isomorphism).
    wl2: u64,
}

fn bucket_key(g: &Graph) -> Result<(BucketKey, bool)> {
    let coloring = color_refine(g);
    let wl2 = if coloring.num_colors() == g.order() {
        0
    } else {
        let mut h = DefaultHasher::new();
        wl2_refine(g)?.canonical_key().hash(&mut h);
        h.finish() | 1
    };
    let key = BucketKey {
        edges: g.size(),
        poly: char_poly(g),
        trace: coloring.trace().to_vec(),
        wl2,
    };
    Ok((key, is_controllable(g)))
}

struct Member {
    graph: Graph,
    /// Another labeled member of the same bucket, if any.
    partner: Option<Graph>,
}

struct Prepared {
    graphs: usize,
    members: Vec<Member>,
    census: Vec<CensusRow>,
}

fn enumerate(n_max: usize) -> Result<Prepared> {
    if n_max == 0 || n_max > MAX_ENUMERATION_ORDER {
        return Err(Error::Precondition(format!(
            "builtin enumeration supports 1 <= n_max <= {MAX_ENUMERATION_ORDER}, got {n_max}"
        )));
    }
    let mut members = Vec::new();
    let mut census = Vec::new();
    let mut total = 0;
    for n in 1..=n_max {
        let count = 1u64 << (n * (n - 1) / 2);
        let keys: Vec<(BucketKey, bool)> =
            (0..count).into_par_iter().map(|m| bucket_key(&labeled_graph(n, m))).collect::<Result<_>>()?;
        let mut buckets: BTreeMap<&BucketKey, (u64, u64)> = BTreeMap::new();
        for (mask, (key, _)) in keys.iter().enumerate() {
            let mask = mask as u64;
            buckets.entry(key).and_modify(|e| e.1 = mask).or_insert((mask, mask));
        }
        let mut reps: Vec<(u64, u64)> = buckets.into_values().collect();
        reps.sort_unstable();
        census.push(CensusRow {
            n,
            graphs: count as usize,
            controllable: keys.iter().filter(|k| k.1).count(),
            representatives: reps.len(),
            controllable_representatives: reps.iter().filter(|r| keys[r.0 as usize].1).count(),
        });
        total += count as usize;
        members.extend(reps.into_iter().map(|(first, last)| Member {
            graph: labeled_graph(n, first),
            partner: (last != first).then(|| labeled_graph(n, last)),
        }));
    }
    Ok(Prepared { graphs: total, members, census })
}

fn from_list(graphs: Vec<Graph>) -> Prepared {
    let mut by_n: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for g in &graphs {
        let e = by_n.entry(g.order()).or_default();
        e.0 += 1;
        e.1 += usize::from(is_controllable(g));
    }
    let census = by_n
        .into_iter()
        .map(|(n, (graphs, controllable))| CensusRow {
            n,
            graphs,
            controllable,
            representatives: graphs,
            controllable_representatives: controllable,
        })
        .collect();
    Prepared {
        graphs: graphs.len(),
        members: graphs.into_iter().map(|graph| Member { graph, partner: None }).collect(),
        census,
    }
}

enum Outcome {
    Pair(Box<PairReport>, Option<bool>),
    Failed(Violation),
}

fn run_pair(a: &GraphFacts, b: &GraphFacts) -> Outcome {
    match pair_report(a, b) {
        Ok(r) => {
            let iso = r.c3.then(|| find_isomorphism(&a.graph, &b.graph).is_some());
            Outcome::Pair(Box::new(r), iso)
        }
        Err(e) => Outcome::Failed(Violation {
            check: "error".into(),
            graphs: vec![a.graph6.clone(), b.graph6.clone()],
            detail: Some(e.to_string()),
        }),
    }
}

/// Runs the implication suite. Work is spread over the current rayon pool;
/// the summary is independent of the number of threads.
pub fn verify_corpus(source: Source, suite: Suite) -> Result<CorpusSummary> {
    let (label, prepared) = match source {
        Source::Enumerate { n_max } => (format!("enumeration n<={n_max}"), enumerate(n_max)?),
        Source::Graphs(list) => (format!("list of {} graphs", list.len()), from_list(list)),
    };
    let mut violations = Vec::new();

    let facts: Vec<std::result::Result<(GraphFacts, Option<GraphFacts>), Violation>> = prepared
        .members
        .into_par_iter()
        .map(|m| {
            let g6 = crate::graph::graph6::write_graph6(&m.graph);
            let fail = |e: Error| Violation { check: "error".into(), graphs: vec![g6.clone()], detail: Some(e.to_string()) };
            let f = GraphFacts::new(m.graph).map_err(&fail)?;
            let p = m.partner.map(GraphFacts::new).transpose().map_err(&fail)?;
            Ok((f, p))
        })
        .collect();
    let mut reps = Vec::new();
    let mut partners = Vec::new();
    for r in facts {
        match r {
            Ok((f, p)) => {
                if let Some(p) = p {
                    partners.push((reps.len(), p));
                }
                reps.push(f);
            }
            Err(v) => violations.push(v),
        }
    }

    // per-graph checks
    let mut tallies: BTreeMap<Check, (usize, usize)> = BTreeMap::new();
    let mut single = |check: Check, f: &GraphFacts, applicable: bool, holds: bool, out: &mut Vec<Violation>| {
        if !suite.includes(check) {
            return;
        }
        let t = tallies.entry(check).or_default();
        if applicable {
            t.0 += 1;
            if !holds {
                t.1 += 1;
                out.push(Violation { check: check.name().into(), graphs: vec![f.graph6.clone()], detail: None });
            }
        }
    };
    for f in reps.iter().chain(partners.iter().map(|p| &p.1)) {
        let other = matches!(f.classification, Some(crate::drg::Classification::DistanceRegularizedOther));
        single(Check::ConnectedImpliesClassified, f, f.connected, !other, &mut violations);
        single(
            Check::RecurrenceEqualsCount,
            f,
            f.recurrence_matches.is_some(),
            f.recurrence_matches == Some(true),
            &mut violations,
        );
    }

    // pair stage
    let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, f) in reps.iter().enumerate() {
        groups.entry((f.graph.order(), f.graph.size())).or_default().push(i);
    }
    let mut jobs: Vec<(&GraphFacts, &GraphFacts)> = Vec::new();
    for idx in groups.values() {
        for (x, &i) in idx.iter().enumerate() {
            for &j in &idx[x + 1..] {
                jobs.push((&reps[i], &reps[j]));
            }
        }
    }
    jobs.extend(partners.iter().map(|(i, p)| (&reps[*i], p)));
    let outcomes: Vec<Outcome> = jobs.par_iter().map(|(a, b)| run_pair(a, b)).collect();

    let pair_checks = [
        Check::C3ImpliesC2,
        Check::C3ImpliesCospectral,
        Check::C2ImpliesWalkEquivalent,
        Check::C2IffFractionalWitness,
        Check::ControllableC2IffIsomorphic,
        Check::RegularizedCospectralIffC3,
    ];
    let mut interesting = InterestingPairs::default();
    for o in &outcomes {
        let (r, iso) = match o {
            Outcome::Pair(r, iso) => (r, iso),
            Outcome::Failed(v) => {
                violations.push(v.clone());
                continue;
            }
        };
        for check in pair_checks.into_iter().filter(|&c| suite.includes(c)) {
            let t = tallies.entry(check).or_default();
            let c = r.check(check);
            if c.applicable {
                t.0 += 1;
                if !c.holds {
                    t.1 += 1;
                    violations.push(Violation {
                        check: check.name().into(),
                        graphs: vec![r.first.clone(), r.second.clone()],
                        detail: None,
                    });
                }
            }
        }
        let pair = [r.first.clone(), r.second.clone()];
        if r.cospectral && !r.c3 {
            interesting.cospectral_not_c3.push(pair.clone());
        }
        if r.c2 && !r.cospectral {
            interesting.c2_not_cospectral.push(pair.clone());
        }
        if *iso == Some(false) {
            interesting.c3_not_isomorphic.push(pair);
        }
    }
    violations.sort();
    interesting.cospectral_not_c3.sort();
    interesting.c2_not_cospectral.sort();
    interesting.c3_not_isomorphic.sort();

    let checks = Check::ALL
        .into_iter()
        .filter(|&c| suite.includes(c))
        .map(|check| {
            let (applicable, violations) = tallies.get(&check).copied().unwrap_or_default();
            CheckTally { check, applicable, violations }
        })
        .collect();

    Ok(CorpusSummary {
        source: label,
        suite,
        graphs: prepared.graphs,
        representatives: reps.len(),
        pairs_compared: jobs.len(),
        checks,
        violations,
        controllable_census: prepared.census,
        interesting_pairs: interesting,
    })
}

/// Every bipartite semiregular graph with parts `X′ = 0..p`, `X″ = p..p+q`,
/// `p + q ≤ n_max`, valencies `k ≥ ℓ ≥ 1` and no isolated vertices, up to
/// isomorphism.
pub fn semiregular_graphs(n_max: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = Vec::new();
    for total in 2..=n_max {
        for p in 1..total {
            let q = total - p;
            for k in 1..=q {
                if (k * p) % q != 0 {
                    continue;
                }
                let l = k * p / q;
                if l < 1 || l > p || l > k {
                    continue;
                }
                let mut rows: Vec<u64> = Vec::new();
                let mut found = Vec::new();
                biadjacency(p, q, k, l, &mut vec![0; q], &mut rows, &mut found);
                for rows in found {
                    let mut edges = Vec::new();
                    for (x, r) in rows.iter().enumerate() {
                        for y in 0..q {
                            if r >> y & 1 == 1 {
                                edges.push((x, p + y));
                            }
                        }
                    }
                    let g = Graph::new(total, &edges).expect("valid");
                    if !out.iter().any(|h| find_isomorphism(h, &g).is_some()) {
                        out.push(g);
                    }
                }
            }
        }
    }
    out
}

fn biadjacency(p: usize, q: usize, k: usize, l: usize, col: &mut Vec<usize>, rows: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if rows.len() == p {
        if col.iter().all(|&c| c == l) {
            out.push(rows.clone());
        }
        return;
    }
    // rows in non-increasing order cut most relabelings of X′
    let bound = rows.last().copied().unwrap_or(u64::MAX);
    for r in (0..1u64 << q).rev() {
        if r > bound || r.count_ones() as usize != k {
            continue;
        }
        if (0..q).any(|y| r >> y & 1 == 1 && col[y] == l) {
            continue;
        }
        for (y, c) in col.iter_mut().enumerate() {
            *c += (r >> y & 1) as usize;
        }
        rows.push(r);
        biadjacency(p, q, k, l, col, rows, out);
        rows.pop();
        for (y, c) in col.iter_mut().enumerate() {
            *c -= (r >> y & 1) as usize;
        }
    }
}

/// Cospectral pairs of non-isomorphic bipartite semiregular graphs (and
/// each graph against itself with its parts swapped), with the spectral
/// identity report for each.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SemiregularScan {
    pub n_max: usize,
    pub graphs: usize,
    pub cospectral_pairs: Vec<([String; 2], SemiregularReport)>,
    /// Pairs in which the default orientations give different degrees.
    pub with_swapped_degrees: usize,
}

pub fn semiregular_scan(n_max: usize) -> Result<SemiregularScan> {
    let graphs = semiregular_graphs(n_max);
    let polys: Vec<CharPoly> = graphs.iter().map(char_poly).collect();
    let mut pairs = Vec::new();
    for i in 0..graphs.len() {
        for j in i + 1..graphs.len() {
            if graphs[i].order() == graphs[j].order() && polys[i] == polys[j] {
                let r = semiregular_spectral_check(&graphs[i], &graphs[j])?;
                let names = [crate::graph::graph6::write_graph6(&graphs[i]), crate::graph::graph6::write_graph6(&graphs[j])];
                pairs.push((names, r));
            }
        }
    }
    for g in &graphs {
        semiregular_bipartition(g)?;
    }
    let with_swapped_degrees = pairs.iter().filter(|p| p.1.degrees_differ).count();
    Ok(SemiregularScan { n_max, graphs: graphs.len(), cospectral_pairs: pairs, with_swapped_degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn labeled_enumeration_order() {
        assert_eq!(labeled_graph(3, 0).size(), 0);
        assert_eq!(labeled_graph(3, 0b001).edges(), vec![(0, 1)]);
        assert_eq!(labeled_graph(3, 0b100).edges(), vec![(1, 2)]);
        assert_eq!(labeled_graph(4, 0b111111).size(), 6);
    }

    #[test]
    fn small_enumeration_is_clean() {
        let s = verify_corpus(Source::Enumerate { n_max: 4 }, Suite::All).unwrap();
        assert!(s.is_clean(), "{:?}", s.violations);
        assert_eq!(s.graphs, 1 + 2 + 8 + 64);
        // 1 + 2 + 4 + 11 isomorphism classes
        assert_eq!(s.representatives, 18);
        assert_eq!(s.controllable_census.iter().map(|r| r.controllable).sum::<usize>(), 1);
    }

    #[test]
    fn listed_pairs_are_interesting() {
        let list = vec![
            complete_bipartite(1, 4).unwrap(),
            disjoint_union(&cycle(4).unwrap(), &complete(1).unwrap()),
            cycle(6).unwrap(),
            disjoint_union(&complete(3).unwrap(), &complete(3).unwrap()),
        ];
        let s = verify_corpus(Source::Graphs(list), Suite::All).unwrap();
        assert!(s.is_clean());
        assert_eq!(s.pairs_compared, 2);
        assert_eq!(s.interesting_pairs.cospectral_not_c3.len(), 1);
        assert_eq!(s.interesting_pairs.c2_not_cospectral.len(), 1);
    }

    #[test]
    fn suites_filter_checks() {
        let s = verify_corpus(Source::Enumerate { n_max: 3 }, Suite::Control).unwrap();
        assert_eq!(s.checks.len(), 1);
        assert_eq!(s.checks[0].check, Check::ControllableC2IffIsomorphic);
    }

    #[test]
    fn semiregular_family() {
        let gs = semiregular_graphs(5);
        assert!(gs.iter().all(|g| semiregular_bipartition(g).is_ok()));
        assert!(gs.iter().any(|g| g == &complete_bipartite(2, 3).unwrap()));
        let scan = semiregular_scan(5).unwrap();
        assert!(scan.cospectral_pairs.iter().all(|p| p.1.all_hold()));
    }
}
