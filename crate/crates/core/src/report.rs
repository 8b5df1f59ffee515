//! Single-graph and pair reports, shared by the command-line tool and the
//! corpus verifier.

use std::fmt::Write as _;

use serde::{Serialize, Serializer};

use crate::coherent::{intersection_equivalent, wl2_refine, CoherentConfiguration};
use crate::control::{controllable_iso, is_controllable, IsoCertificate, Verdict};
use crate::drg::{classify, recurrence_matches_count, Classification};
use crate::error::Result;
use crate::graph::graph6::write_graph6;
use crate::graph::{find_isomorphism, Graph};
use crate::linalg::CharPoly;
use crate::refine::{c2_equivalent, color_refine, fractional_witness, StableColoring};
use crate::spectral::{char_poly, walk_equivalent};

/// Per-graph data computed once and reused across every pair it takes part in.
#[derive(Clone, Debug)]
pub struct GraphFacts {
    pub graph: Graph,
    pub graph6: String,
    pub coloring: StableColoring,
    pub config: CoherentConfiguration,
    pub char_poly: CharPoly,
    pub controllable: bool,
    pub connected: bool,
    /// `None` for disconnected or empty graphs.
    pub classification: Option<Classification>,
    /// `Some` for distance-regularized graphs: recurrence tensors equal the
    /// counted ones. A constancy failure while counting is recorded as `false`.
    pub recurrence_matches: Option<bool>,
}

impl GraphFacts {
    pub fn new(graph: Graph) -> Result<Self> {
        let connected = graph.is_connected();
        let classification = if connected { Some(classify(&graph)?) } else { None };
        let recurrence_matches = match &classification {
            Some(c) if c.is_distance_regularized() => Some(recurrence_matches_count(&graph).unwrap_or(false)),
            _ => None,
        };
        Ok(GraphFacts {
            graph6: write_graph6(&graph),
            coloring: color_refine(&graph),
            config: wl2_refine(&graph)?,
            char_poly: char_poly(&graph),
            controllable: is_controllable(&graph),
            connected,
            classification,
            recurrence_matches,
            graph,
        })
    }

    pub fn is_distance_regularized(&self) -> bool {
        self.classification.as_ref().is_some_and(Classification::is_distance_regularized)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ColorRefineSummary {
    pub class_sizes: Vec<usize>,
    pub rounds: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub connected: bool,
    pub color_refine: ColorRefineSummary,
    pub wl2_rank: usize,
    pub char_poly: CharPoly,
    pub char_poly_text: String,
    pub controllable: bool,
    pub classification: Option<Classification>,
}

impl AnalysisReport {
    pub fn from_facts(f: &GraphFacts) -> Self {
        AnalysisReport {
            graph6: f.graph6.clone(),
            order: f.graph.order(),
            size: f.graph.size(),
            connected: f.connected,
            color_refine: ColorRefineSummary {
                class_sizes: f.coloring.class_sizes(),
                rounds: f.coloring.rounds(),
            },
            wl2_rank: f.config.rank(),
            char_poly: f.char_poly.clone(),
            char_poly_text: f.char_poly.to_string(),
            controllable: f.controllable,
            classification: f.classification.clone(),
        }
    }

    pub fn to_human(&self) -> String {
        let mut s = String::new();
        let cls = match &self.classification {
            None => "n/a (disconnected or empty)".to_string(),
            Some(Classification::DistanceRegular(a)) => format!("distance-regular {a}"),
            Some(Classification::DistanceBiregular(a)) => {
                format!("distance-biregular {} / {} (k={}, l={})", a.iota1, a.iota2, a.k, a.l)
            }
            Some(c) => c.kind().to_string(),
        };
        let rows = [
            ("graph6", self.graph6.clone()),
            ("order", self.order.to_string()),
            ("size", self.size.to_string()),
            ("connected", self.connected.to_string()),
            ("colour classes", format!("{:?}", self.color_refine.class_sizes)),
            ("refinement rounds", self.color_refine.rounds.to_string()),
            ("wl2 rank", self.wl2_rank.to_string()),
            ("char poly", self.char_poly_text.clone()),
            ("controllable", self.controllable.to_string()),
            ("classification", cls),
        ];
        for (k, v) in rows {
            let _ = writeln!(s, "{k:<18} {v}");
        }
        s
    }
}

/// One of the implications checked on every pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    C3ImpliesC2,
    C3ImpliesCospectral,
    C2ImpliesWalkEquivalent,
    C2IffFractionalWitness,
    ControllableC2IffIsomorphic,
    ConnectedImpliesClassified,
    RegularizedCospectralIffC3,
    RecurrenceEqualsCount,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::C3ImpliesC2,
        Check::C3ImpliesCospectral,
        Check::C2ImpliesWalkEquivalent,
        Check::C2IffFractionalWitness,
        Check::ControllableC2IffIsomorphic,
        Check::ConnectedImpliesClassified,
        Check::RegularizedCospectralIffC3,
        Check::RecurrenceEqualsCount,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::C3ImpliesC2 => "c3 => c2",
            Check::C3ImpliesCospectral => "c3 => cospectral",
            Check::C2ImpliesWalkEquivalent => "c2 => walk-equivalent",
            Check::C2IffFractionalWitness => "c2 <=> fractional witness",
            Check::ControllableC2IffIsomorphic => "controllable and c2 <=> isomorphic",
            Check::ConnectedImpliesClassified => "connected => classified",
            Check::RegularizedCospectralIffC3 => "distance-regularized: cospectral <=> c3",
            Check::RecurrenceEqualsCount => "distance-regularized: recurrence = count",
        }
    }

    pub fn suite(self) -> Suite {
        match self {
            Check::C3ImpliesC2
            | Check::C3ImpliesCospectral
            | Check::C2ImpliesWalkEquivalent
            | Check::C2IffFractionalWitness => Suite::Logic,
            Check::ControllableC2IffIsomorphic => Suite::Control,
            Check::ConnectedImpliesClassified
            | Check::RegularizedCospectralIffC3
            | Check::RecurrenceEqualsCount => Suite::Drg,
        }
    }
}

impl Serialize for Check {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Logic,
    Control,
    Drg,
}

impl Suite {
    pub fn includes(self, check: Check) -> bool {
        self == Suite::All || check.suite() == self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub check: Check,
    pub applicable: bool,
    /// `true` whenever the check is not applicable.
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PairReport {
    pub first: String,
    pub second: String,
    pub c2: bool,
    pub c3: bool,
    pub cospectral: bool,
    pub generalized_cospectral: bool,
    pub walk_equivalent: bool,
    pub fractional_witness_found: bool,
    pub iso_verdict: Verdict,
    pub iso_certificate: IsoCertificate,
    pub theorem_consistency: Vec<TheoremCheck>,
}

impl PairReport {
    pub fn violations(&self) -> impl Iterator<Item = Check> + '_ {
        self.theorem_consistency.iter().filter(|c| !c.holds).map(|c| c.check)
    }

    pub fn check(&self, check: Check) -> TheoremCheck {
        *self.theorem_consistency.iter().find(|c| c.check == check).expect("every check is present")
    }

    pub fn to_human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{:<24} {} vs {}", "graphs", self.first, self.second);
        let rows = [
            ("c2", self.c2),
            ("c3", self.c3),
            ("cospectral", self.cospectral),
            ("generalized cospectral", self.generalized_cospectral),
            ("walk-equivalent", self.walk_equivalent),
            ("fractional witness", self.fractional_witness_found),
        ];
        for (k, v) in rows {
            let _ = writeln!(s, "{k:<24} {v}");
        }
        let verdict = serde_json::to_value(self.iso_verdict).expect("plain enum");
        let _ = writeln!(s, "{:<24} {}", "controllable iso", verdict.as_str().unwrap_or_default());
        let _ = writeln!(s, "checks:");
        for c in &self.theorem_consistency {
            let state = match (c.applicable, c.holds) {
                (false, _) => "n/a",
                (true, true) => "ok",
                (true, false) => "VIOLATED",
            };
            let _ = writeln!(s, "  {:<42} {state}", c.check.name());
        }
        s
    }
}

fn both_empty(a: &Graph, b: &Graph) -> bool {
    a.order() == 0 && b.order() == 0
}

/// Compares two graphs and evaluates every implication.
pub fn pair_report(a: &GraphFacts, b: &GraphFacts) -> Result<PairReport> {
    let (ga, gb) = (&a.graph, &b.graph);
    let same_order = ga.order() == gb.order();
    let c2 = c2_equivalent(ga, gb);
    let c3 = same_order && intersection_equivalent(&a.config, &b.config);
    let cospectral = same_order && a.char_poly == b.char_poly;
    let generalized_cospectral = cospectral && char_poly(&ga.complement()) == char_poly(&gb.complement());
    let walk_eq = walk_equivalent(ga, gb);
    let witness = both_empty(ga, gb) || fractional_witness(ga, gb)?.is_some();
    let cert = controllable_iso(ga, gb)?;

    let mut checks = Vec::with_capacity(Check::ALL.len());
    let mut push = |check, applicable: bool, holds: bool| {
        checks.push(TheoremCheck { check, applicable, holds: !applicable || holds });
    };
    push(Check::C3ImpliesC2, c3, c2);
    push(Check::C3ImpliesCospectral, c3, cospectral);
    push(Check::C2ImpliesWalkEquivalent, c2, walk_eq);
    push(Check::C2IffFractionalWitness, true, c2 == witness);

    let controllable = a.controllable && b.controllable;
    let holds = controllable && {
        let certified = cert.verdict == Verdict::Isomorphic;
        // independent search as a cross-check of the certificate
        let oracle = find_isomorphism(ga, gb).is_some();
        c2 == certified && certified == oracle
    };
    push(Check::ControllableC2IffIsomorphic, controllable, holds);

    let not_other = |f: &GraphFacts| {
        !matches!(f.classification, Some(Classification::DistanceRegularizedOther))
    };
    push(
        Check::ConnectedImpliesClassified,
        a.connected || b.connected,
        not_other(a) && not_other(b),
    );
    let both_dr = a.is_distance_regularized() && b.is_distance_regularized();
    push(Check::RegularizedCospectralIffC3, both_dr, cospectral == c3);
    push(
        Check::RecurrenceEqualsCount,
        a.recurrence_matches.is_some() || b.recurrence_matches.is_some(),
        a.recurrence_matches != Some(false) && b.recurrence_matches != Some(false),
    );

    Ok(PairReport {
        first: a.graph6.clone(),
        second: b.graph6.clone(),
        c2,
        c3,
        cospectral,
        generalized_cospectral,
        walk_equivalent: walk_eq,
        fractional_witness_found: witness,
        iso_verdict: cert.verdict,
        iso_certificate: cert,
        theorem_consistency: checks,
    })
}

pub fn analyze(g: &Graph) -> Result<AnalysisReport> {
    Ok(AnalysisReport::from_facts(&GraphFacts::new(g.clone())?))
}

pub fn compare(g: &Graph, h: &Graph) -> Result<PairReport> {
    pair_report(&GraphFacts::new(g.clone())?, &GraphFacts::new(h.clone())?)
}
