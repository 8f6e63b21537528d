//! An explicit shelling of the 3-cut complex of the squared cycle `W_n`.
//!
//! Vertices are ranked by a centre-out order starting at the midpoint `m`
//! (`m, m-1, m+1, m-2, …, 1, 0`). A facet is identified by its complement
//! `{leader, low, high}` where `leader` is the earliest complement vertex in
//! that order and `low < high`. Facets are sorted by `(rank of leader, low,
//! high)`, except that a small displaced class is moved ahead of the other
//! facets with the same leader. The spanning facets of the resulting shelling
//! are described by three closed-form classes, whose sizes add up to
//! `C(n-4, 2) - 9`.

use std::cmp::Ordering;
use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{squared_cycle, Graph};
use crate::homology::{betti, BettiVector, FieldSpec};
use crate::simplicial::{cut_complex, ShellingWitness, SimplicialComplex};
use crate::vertex_set::VertexSet;

/// Smallest `n` the construction covers.
pub const MIN_N: usize = 9;

fn check_n(n: usize) -> Result<()> {
    if n < MIN_N {
        return Err(Error::InvalidParameter(format!("n must be at least {MIN_N}, got {n}")));
    }
    if n > crate::vertex_set::MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    Ok(())
}

/// The centre-out vertex order on `{0, …, n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrder {
    n: usize,
    m: usize,
    sequence: Vec<usize>,
    /// 1-based position of each vertex in `sequence`.
    position: Vec<usize>,
}

impl VertexOrder {
    pub fn new(n: usize) -> Result<Self> {
        check_n(n)?;
        // (n+1)/2 for odd n, n/2 for even n
        let m = n.div_ceil(2);
        let sequence: Vec<usize> = (1..=n as i64)
            .map(|t| {
                let step = t / 2;
                let offset = if t % 2 == 1 { step } else { -step };
                (m as i64 + offset).rem_euclid(n as i64) as usize
            })
            .collect();
        let mut position = vec![0; n];
        for (i, &v) in sequence.iter().enumerate() {
            position[v] = i + 1;
        }
        debug_assert!(position.iter().all(|&p| p > 0), "sequence is not a permutation");
        Ok(VertexOrder { n, m, sequence, position })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The midpoint, which comes first.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    /// 1-based position of `v`.
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn cmp(&self, x: usize, y: usize) -> Ordering {
        self.position[x].cmp(&self.position[y])
    }

    /// Whether `x` comes strictly before `y`.
    pub fn before(&self, x: usize, y: usize) -> bool {
        self.position[x] < self.position[y]
    }
}

/// Complement `{leader, low, high}` of a facet, with `leader` the earliest
/// vertex in the centre-out order and `low < high`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FacetSignature {
    /// 1-based position of `leader`.
    pub rank: usize,
    pub leader: usize,
    pub low: usize,
    pub high: usize,
}

impl FacetSignature {
    pub fn of(order: &VertexOrder, complement: VertexSet) -> Result<Self> {
        if complement.len() != 3 {
            return Err(Error::InvalidParameter(format!("complement {complement} does not have 3 vertices")));
        }
        if let Some(v) = complement.max().filter(|&v| v >= order.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: order.n });
        }
        let leader = complement.iter().min_by_key(|&v| order.position(v)).expect("nonempty");
        let rest = complement.remove(leader).to_vec();
        Ok(FacetSignature { rank: order.position(leader), leader, low: rest[0], high: rest[1] })
    }

    /// `(rank, low, high)`, the key of the undisplaced order.
    pub fn key(&self) -> (usize, usize, usize) {
        (self.rank, self.low, self.high)
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet::from_bits((1 << self.leader) | (1 << self.low) | (1 << self.high))
    }
}

/// Which rule puts a facet in the displaced class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DisplacedClass {
    /// leader `m+1`, pair `{leader-3, leader+1}`
    D1,
    /// leader `m-1`, pair `{leader-1, leader+3}`
    D2,
    /// leader `m+1`, pair `{leader-4, leader-3}`
    D3,
    /// leader in `m-1..=n-6`, pair `{leader+3, leader+4}`
    D4,
}

/// Which rule puts a facet in the closed-form spanning class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SpanningClass {
    S1,
    S2,
    S3,
}

/// Class sizes of the closed-form spanning set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SpanningBreakdown {
    pub s1: usize,
    pub s2: usize,
    pub s3: usize,
    pub total: usize,
}

/// Closed-form class sizes for a given `n`.
pub fn spanning_count_formula(n: usize) -> Result<SpanningBreakdown> {
    check_n(n)?;
    let ni = n as i64;
    let m = VertexOrder::new(n)?.m as i64;
    let s1 = ni - 2 * m + 2;
    let s2 = m * ni - m * m + 3 * m - 5 * ni + 10;
    let s3 = 3 * (ni - 9) + m * ni - m * m - 4 * ni + 16;
    let total = (ni - 4) * (ni - 5) / 2 - 9;
    assert_eq!(s1 + s2 + s3, total, "class sizes do not add up for n = {n}");
    assert_eq!(2 * total, ni * ni - 9 * ni + 2);
    let count = |x: i64| usize::try_from(x).expect("class size is non-negative for n >= 9");
    Ok(SpanningBreakdown { s1: count(s1), s2: count(s2), s3: count(s3), total: count(total) })
}

/// The squared cycle, its 3-cut complex and the vertex order, bundled so the
/// classification routines share one context.
#[derive(Clone, Debug)]
pub struct WnShelling {
    order: VertexOrder,
    graph: Graph,
    complex: SimplicialComplex,
}

impl WnShelling {
    pub fn new(n: usize) -> Result<Self> {
        let order = VertexOrder::new(n)?;
        let graph = squared_cycle(n)?;
        let complex = cut_complex(&graph, 3)?;
        Ok(WnShelling { order, graph, complex })
    }

    pub fn n(&self) -> usize {
        self.order.n
    }

    pub fn vertex_order(&self) -> &VertexOrder {
        &self.order
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Whether `complement` is the complement of a facet, i.e. a 3-set that
    /// induces a disconnected subgraph.
    pub fn is_facet_complement(&self, complement: VertexSet) -> bool {
        complement.len() == 3
            && complement.max().is_some_and(|v| v < self.n())
            && !self.graph.is_connected_within(complement)
    }

    pub fn signature(&self, complement: VertexSet) -> Result<FacetSignature> {
        FacetSignature::of(&self.order, complement)
    }

    fn facet_signature(&self, facet: VertexSet) -> Result<FacetSignature> {
        let n = self.n();
        let complement = facet.complement(n);
        if facet.max().is_some_and(|v| v >= n) || !self.is_facet_complement(complement) {
            return Err(Error::NotAFacet(facet.to_string()));
        }
        self.signature(complement)
    }

    /// Displaced-class rule matched by a signature, if any. Pair vertices are
    /// plain integers; they are asserted to lie in range instead of wrapping.
    pub fn displaced_class_of(&self, sig: &FacetSignature) -> Option<DisplacedClass> {
        let (n, m) = (self.n() as i64, self.order.m as i64);
        let a = sig.leader as i64;
        let pair_is = |x: i64, y: i64| {
            assert!((0..n).contains(&x) && (0..n).contains(&y), "displaced pair {{{x},{y}}} out of range");
            let (x, y) = (x.min(y) as usize, x.max(y) as usize);
            (sig.low, sig.high) == (x, y)
        };
        if a == m + 1 && pair_is(a - 3, a + 1) {
            Some(DisplacedClass::D1)
        } else if a == m - 1 && pair_is(a - 1, a + 3) {
            Some(DisplacedClass::D2)
        } else if a == m + 1 && pair_is(a - 4, a - 3) {
            Some(DisplacedClass::D3)
        } else if (m - 1..=n - 6).contains(&a) && pair_is(a + 3, a + 4) {
            Some(DisplacedClass::D4)
        } else {
            None
        }
    }

    pub fn displaced_class(&self, complement: VertexSet) -> Result<Option<DisplacedClass>> {
        Ok(self.displaced_class_of(&self.signature(complement)?))
    }

    /// Closed-form spanning rule matched by a signature, if any.
    pub fn spanning_class_of(&self, sig: &FacetSignature) -> Option<SpanningClass> {
        let (n, m) = (self.n() as i64, self.order.m as i64);
        if sig.high as i64 != n - 1 {
            return None;
        }
        let a = sig.leader as i64;
        let low = sig.low as i64;
        if a == 3 {
            let excluded = (0..=2 * m - 4).contains(&low) || low == n - 1;
            (!excluded).then_some(SpanningClass::S1)
        } else if (4..=m - 2).contains(&a) {
            let excluded = (a - 4..=a - 2).contains(&low) || (a..=2 * m - a - 1).contains(&low) || low == n - 1;
            (!excluded).then_some(SpanningClass::S2)
        } else if (m - 1..=n - 3).contains(&a) {
            let omega = (2 * m - a).min(a - 4);
            let y = match a.cmp(&(n - 4)) {
                Ordering::Less => n - 1,
                Ordering::Equal => 0,
                Ordering::Greater => 1,
            };
            let in_run = (omega..=a + 3).any(|x| x.rem_euclid(n) == low);
            (!in_run && low != y).then_some(SpanningClass::S3)
        } else {
            None
        }
    }

    pub fn spanning_class(&self, complement: VertexSet) -> Result<Option<SpanningClass>> {
        Ok(self.spanning_class_of(&self.signature(complement)?))
    }

    fn order_key(&self, facet: VertexSet) -> Result<OrderKey> {
        let sig = self.facet_signature(facet)?;
        Ok(OrderKey { sig, displaced: self.displaced_class_of(&sig).is_some() })
    }

    /// Whether `f` strictly precedes `g` in the shelling order. Both must be
    /// facets.
    pub fn precedes(&self, f: VertexSet, g: VertexSet) -> Result<bool> {
        Ok(precedes_key(&self.order_key(f)?, &self.order_key(g)?))
    }

    /// Three-way comparison in the shelling order.
    pub fn cmp_prec(&self, f: VertexSet, g: VertexSet) -> Result<Ordering> {
        Ok(cmp_key(&self.order_key(f)?, &self.order_key(g)?))
    }

    /// All facets, sorted by the shelling order.
    pub fn shelling_order(&self) -> Vec<VertexSet> {
        let mut keyed: Vec<(OrderKey, VertexSet)> =
            self.complex.facets().iter().map(|&f| (self.order_key(f).expect("facet of the complex"), f)).collect();
        keyed.sort_by(|a, b| cmp_key(&a.0, &b.0));
        keyed.into_iter().map(|(_, f)| f).collect()
    }

    /// Facet complements grouped by their spanning class.
    pub fn spanning_class_members(&self) -> HashMap<SpanningClass, Vec<VertexSet>> {
        let n = self.n();
        let tagged: Vec<(SpanningClass, VertexSet)> = self
            .complex
            .facets()
            .par_iter()
            .filter_map(|&f| {
                let c = f.complement(n);
                self.spanning_class(c).expect("facet complement").map(|t| (t, c))
            })
            .collect();
        let mut out: HashMap<SpanningClass, Vec<VertexSet>> = HashMap::new();
        for (t, c) in tagged {
            out.entry(t).or_default().push(c);
        }
        out
    }
}

#[derive(Clone, Copy, Debug)]
struct OrderKey {
    sig: FacetSignature,
    displaced: bool,
}

fn precedes_key(f: &OrderKey, g: &OrderKey) -> bool {
    let (s, t) = (f.sig.rank, g.sig.rank);
    match (f.displaced, g.displaced) {
        (false, false) | (true, true) => f.sig.key() < g.sig.key(),
        (true, false) => s < t,
        (false, true) => s <= t,
    }
}

fn cmp_key(f: &OrderKey, g: &OrderKey) -> Ordering {
    if f.sig == g.sig {
        Ordering::Equal
    } else if precedes_key(f, g) {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Options for [`verify_conjecture`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjectureOptions {
    pub field: FieldSpec,
    pub with_homology: bool,
    /// Homology is skipped for `n` above this bound.
    pub homology_cap: usize,
}

impl Default for ConjectureOptions {
    fn default() -> Self {
        ConjectureOptions { field: FieldSpec::GF2, with_homology: false, homology_cap: 14 }
    }
}

/// Outcome of checking one `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub m: usize,
    pub facet_count: usize,
    pub pure: bool,
    pub dimension: isize,
    pub shelling_valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ShellingWitness>,
    pub spanning_from_order: usize,
    #[serde(rename = "spanning_from_S")]
    pub spanning_from_classes: usize,
    pub spanning_from_formula: usize,
    /// The spanning facets of the order are exactly the classified ones.
    pub spanning_sets_agree: bool,
    /// Class sizes found by enumeration.
    pub breakdown: SpanningBreakdown,
    pub breakdown_matches_formula: bool,
    pub betti: Option<BettiVector>,
    /// Whether the Betti numbers are those of a wedge of `total` spheres of
    /// dimension `n - 4`; absent when homology was not computed.
    pub homology_matches: Option<bool>,
    pub all_pass: bool,
}

/// Checks the shelling, spanning census and (optionally) homology for `n`,
/// using the constructed shelling order.
pub fn verify_conjecture(n: usize, options: &ConjectureOptions) -> Result<ConjectureReport> {
    let context = WnShelling::new(n)?;
    let order = context.shelling_order();
    verify_with(&context, &order, options)
}

/// As [`verify_conjecture`], but checks the given facet order instead.
pub fn verify_conjecture_with_order(
    n: usize,
    order: &[VertexSet],
    options: &ConjectureOptions,
) -> Result<ConjectureReport> {
    let context = WnShelling::new(n)?;
    verify_with(&context, order, options)
}

fn verify_with(context: &WnShelling, order: &[VertexSet], options: &ConjectureOptions) -> Result<ConjectureReport> {
    let n = context.n();
    let complex = context.complex();
    let run_homology = options.with_homology && n <= options.homology_cap;
    let (shelling, homology) = rayon::join(
        || complex.verify_shelling(order),
        || run_homology.then(|| betti(complex, options.field)).transpose(),
    );
    let report = shelling?;
    let betti = homology?;

    let formula = spanning_count_formula(n)?;
    let members = context.spanning_class_members();
    let class_size = |t| members.get(&t).map_or(0, Vec::len);
    let breakdown = SpanningBreakdown {
        s1: class_size(SpanningClass::S1),
        s2: class_size(SpanningClass::S2),
        s3: class_size(SpanningClass::S3),
        total: members.values().map(Vec::len).sum(),
    };

    let (spanning_from_order, spanning_sets_agree) = if report.is_valid() {
        let mut from_order: Vec<VertexSet> = report.spanning_facets()?.iter().map(|f| f.complement(n)).collect();
        let mut from_classes: Vec<VertexSet> = members.values().flatten().copied().collect();
        from_order.sort();
        from_classes.sort();
        (from_order.len(), from_order == from_classes)
    } else {
        (report.spanning_count(), false)
    };

    let dimension = complex.dim().expect("cut complex is not void");
    let pure = complex.is_pure();
    let breakdown_matches_formula = breakdown == formula;
    let homology_matches = betti.as_ref().map(|b| b.is_wedge_of_spheres(n as isize - 4, formula.total));
    let all_pass = pure
        && dimension == n as isize - 4
        && report.is_valid()
        && spanning_from_order == formula.total
        && breakdown.total == formula.total
        && spanning_sets_agree
        && breakdown_matches_formula
        && homology_matches != Some(false);

    Ok(ConjectureReport {
        n,
        m: context.order.m,
        facet_count: complex.facet_count(),
        pure,
        dimension,
        shelling_valid: report.is_valid(),
        witness: report.witness(),
        spanning_from_order,
        spanning_from_classes: breakdown.total,
        spanning_from_formula: formula.total,
        spanning_sets_agree,
        breakdown,
        breakdown_matches_formula,
        betti,
        homology_matches,
        all_pass,
    })
}
