//! Signed Young diagrams, symmetric pair types, and the per-type orbit
//! enumerations.
//!
//! A signed Young diagram is a partition whose rows carry a starting sign;
//! signs alternate along a row. Rows of equal length commute, so the
//! canonical form groups rows by length: for each distinct length we record
//! how many rows start with `+` and how many with `-`. Diagrams of this kind
//! parametrize the nilpotent orbits of the symmetric pairs handled here.

use crate::error::Error;
use crate::partition::Partition;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// One group of equal-length rows: `plus` rows start with `+`, `minus` with `-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RowGroup {
    pub len: u32,
    pub plus: u32,
    pub minus: u32,
}

impl RowGroup {
    /// (#plus boxes, #minus boxes) contributed by this group.
    fn signature(&self) -> (u32, u32) {
        let half = self.len / 2;
        let ceil = self.len - half;
        // a row starting `+` has ceil(len/2) plus boxes; starting `-`, floor.
        (
            self.plus * ceil + self.minus * half,
            self.plus * half + self.minus * ceil,
        )
    }
}

/// Canonical signed Young diagram: groups with strictly decreasing lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct SignedYoungDiagram {
    groups: Vec<RowGroup>,
}

impl SignedYoungDiagram {
    pub fn empty() -> Self {
        SignedYoungDiagram { groups: Vec::new() }
    }

    /// Builds from (length, plus-count, minus-count) triples; merges equal
    /// lengths and sorts.
    pub fn new(groups: impl IntoIterator<Item = (u32, u32, u32)>) -> Self {
        let mut d = SignedYoungDiagram::empty();
        for (len, plus, minus) in groups {
            d.add_rows(len, plus, minus);
        }
        d
    }

    /// Builds from a list of rows (length, starts_with_plus).
    pub fn from_rows(rows: impl IntoIterator<Item = (u32, bool)>) -> Self {
        let mut d = SignedYoungDiagram::empty();
        for (len, plus) in rows {
            if plus {
                d.add_rows(len, 1, 0);
            } else {
                d.add_rows(len, 0, 1);
            }
        }
        d
    }

    pub fn add_rows(&mut self, len: u32, plus: u32, minus: u32) {
        assert!(len > 0, "row length must be positive");
        if plus + minus == 0 {
            return;
        }
        match self.groups.binary_search_by(|g| len.cmp(&g.len)) {
            Ok(i) => {
                self.groups[i].plus += plus;
                self.groups[i].minus += minus;
            }
            Err(i) => self.groups.insert(i, RowGroup { len, plus, minus }),
        }
    }

    pub fn groups(&self) -> &[RowGroup] {
        &self.groups
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    /// Total number of boxes.
    pub fn size(&self) -> u32 {
        self.groups.iter().map(|g| g.len * (g.plus + g.minus)).sum()
    }

    /// (#plus boxes, #minus boxes).
    pub fn signature(&self) -> (u32, u32) {
        let mut p = 0;
        let mut q = 0;
        for g in &self.groups {
            let (gp, gq) = g.signature();
            p += gp;
            q += gq;
        }
        (p, q)
    }

    /// The underlying (unsigned) partition.
    pub fn shape(&self) -> Partition {
        let mut parts = Vec::new();
        for g in &self.groups {
            for _ in 0..(g.plus + g.minus) {
                parts.push(g.len);
            }
        }
        Partition::new(parts)
    }

    /// gcd of row lengths (0 for the empty diagram).
    pub fn gcd_of_lengths(&self) -> u32 {
        self.groups.iter().fold(0, |g, r| crate::partition::gcd(g, r.len))
    }

    pub fn all_lengths_even(&self) -> bool {
        self.groups.iter().all(|g| g.len % 2 == 0)
    }

    /// Swap `+` and `-` in all boxes (flips every row's start sign).
    pub fn sign_swapped(&self) -> SignedYoungDiagram {
        SignedYoungDiagram {
            groups: self
                .groups
                .iter()
                .map(|g| RowGroup { len: g.len, plus: g.minus, minus: g.plus })
                .collect(),
        }
    }

    /// Merge rows of two diagrams.
    pub fn join(&self, other: &SignedYoungDiagram) -> SignedYoungDiagram {
        let mut out = self.clone();
        for g in &other.groups {
            out.add_rows(g.len, g.plus, g.minus);
        }
        out
    }
}

impl fmt::Display for SignedYoungDiagram {
    /// Compact row-by-row text form, e.g. `3+ 1+ 1-`; empty diagram prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.groups.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for g in &self.groups {
            for _ in 0..g.plus {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}+", g.len)?;
                first = false;
            }
            for _ in 0..g.minus {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}-", g.len)?;
                first = false;
            }
        }
        Ok(())
    }
}

impl FromStr for SignedYoungDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(SignedYoungDiagram::empty());
        }
        let mut d = SignedYoungDiagram::empty();
        for tok in s.split_whitespace() {
            let (num, sign) = tok.split_at(tok.len() - 1);
            let len: u32 = num
                .parse()
                .map_err(|_| Error::Parse(format!("bad row token `{tok}`")))?;
            match sign {
                "+" => d.add_rows(len, 1, 0),
                "-" => d.add_rows(len, 0, 1),
                _ => return Err(Error::Parse(format!("bad sign in `{tok}`"))),
            }
        }
        Ok(d)
    }
}

/// Decoration distinguishing the two orbits attached to a very even diagram
/// (all row lengths even), split orthogonal case only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Decoration {
    None,
    I,
    II,
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decoration::None => write!(f, ""),
            Decoration::I => write!(f, "I"),
            Decoration::II => write!(f, "II"),
        }
    }
}

/// A nilpotent orbit label: a signed Young diagram plus an optional I/II
/// decoration.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitLabel {
    pub diagram: SignedYoungDiagram,
    pub decoration: Decoration,
}

impl OrbitLabel {
    pub fn plain(diagram: SignedYoungDiagram) -> Self {
        OrbitLabel { diagram, decoration: Decoration::None }
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.diagram)?;
        if self.decoration != Decoration::None {
            write!(f, " | decor={}", self.decoration)?;
        }
        Ok(())
    }
}

/// The classical symmetric pair families handled by this crate.
///
/// Parameter conventions: `AIII*`/`Glgl` act on a space of dimension p+q;
/// `Bdi(p,q)` on dimension p+q (orthogonal); `Ci(n)` is Sp(2n) with
/// GL(n); `Cii(p,q)` is Sp(2p+2q) with Sp(2p)xSp(2q) (diagram signature
/// (2p,2q)); `Diii(n)` is SO(2n) with GL(n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SymmetricPair {
    AiiiSl { p: u32, q: u32 },
    AiiiPgl { p: u32, q: u32 },
    Bdi { p: u32, q: u32 },
    Ci { n: u32 },
    Cii { p: u32, q: u32 },
    Diii { n: u32 },
    Glgl { p: u32, q: u32 },
}

impl SymmetricPair {
    /// Total number of boxes in a diagram for this pair.
    pub fn diagram_size(&self) -> u32 {
        match *self {
            SymmetricPair::AiiiSl { p, q }
            | SymmetricPair::AiiiPgl { p, q }
            | SymmetricPair::Bdi { p, q }
            | SymmetricPair::Glgl { p, q } => p + q,
            SymmetricPair::Ci { n } | SymmetricPair::Diii { n } => 2 * n,
            SymmetricPair::Cii { p, q } => 2 * (p + q),
        }
    }

    /// Required diagram signature.
    pub fn diagram_signature(&self) -> (u32, u32) {
        match *self {
            SymmetricPair::AiiiSl { p, q }
            | SymmetricPair::AiiiPgl { p, q }
            | SymmetricPair::Bdi { p, q }
            | SymmetricPair::Glgl { p, q } => (p, q),
            SymmetricPair::Ci { n } | SymmetricPair::Diii { n } => (n, n),
            SymmetricPair::Cii { p, q } => (2 * p, 2 * q),
        }
    }

    /// Rank of the little Weyl group (number of restricted-root coordinates).
    pub fn little_weyl_rank(&self) -> u32 {
        match *self {
            SymmetricPair::AiiiSl { p, q }
            | SymmetricPair::AiiiPgl { p, q }
            | SymmetricPair::Cii { p, q }
            | SymmetricPair::Glgl { p, q } => p.min(q),
            SymmetricPair::Bdi { p, q } => p.min(q),
            SymmetricPair::Ci { n } => n,
            SymmetricPair::Diii { n } => n / 2,
        }
    }
}

impl fmt::Display for SymmetricPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SymmetricPair::AiiiSl { p, q } => write!(f, "AIII_SL:{p},{q}"),
            SymmetricPair::AiiiPgl { p, q } => write!(f, "AIII_PGL:{p},{q}"),
            SymmetricPair::Bdi { p, q } => write!(f, "BDI:{p},{q}"),
            SymmetricPair::Ci { n } => write!(f, "CI:{n}"),
            SymmetricPair::Cii { p, q } => write!(f, "CII:{p},{q}"),
            SymmetricPair::Diii { n } => write!(f, "DIII:{n}"),
            SymmetricPair::Glgl { p, q } => write!(f, "GLGL:{p},{q}"),
        }
    }
}

impl FromStr for SymmetricPair {
    type Err = Error;

    /// Parses `TYPE:p,q` or `TYPE:n`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let (ty, args) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected TYPE:params, got `{s}`")))?;
        let nums: Vec<u32> = args
            .split(',')
            .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad integer in `{s}`"))))
            .collect::<Result<_, _>>()?;
        let two = |nums: &[u32]| -> Result<(u32, u32), Error> {
            if nums.len() == 2 {
                Ok((nums[0], nums[1]))
            } else {
                Err(Error::Parse(format!("`{ty}` takes two parameters")))
            }
        };
        let one = |nums: &[u32]| -> Result<u32, Error> {
            if nums.len() == 1 {
                Ok(nums[0])
            } else {
                Err(Error::Parse(format!("`{ty}` takes one parameter")))
            }
        };
        match ty {
            "AIII_SL" => two(&nums).map(|(p, q)| SymmetricPair::AiiiSl { p, q }),
            "AIII_PGL" => two(&nums).map(|(p, q)| SymmetricPair::AiiiPgl { p, q }),
            "BDI" => two(&nums).map(|(p, q)| SymmetricPair::Bdi { p, q }),
            "CI" => one(&nums).map(|n| SymmetricPair::Ci { n }),
            "CII" => two(&nums).map(|(p, q)| SymmetricPair::Cii { p, q }),
            "DIII" => one(&nums).map(|n| SymmetricPair::Diii { n }),
            "GLGL" => two(&nums).map(|(p, q)| SymmetricPair::Glgl { p, q }),
            _ => Err(Error::Parse(format!("unknown pair type `{ty}`"))),
        }
    }
}

/// Per-group sign-split constraint for one pair type.
fn split_allowed(pair: SymmetricPair, len: u32, plus: u32, minus: u32) -> bool {
    let even = len.is_multiple_of(2);
    match pair {
        SymmetricPair::AiiiSl { .. } | SymmetricPair::AiiiPgl { .. } | SymmetricPair::Glgl { .. } => true,
        SymmetricPair::Bdi { .. } => !even || plus == minus,
        SymmetricPair::Ci { .. } => even || plus == minus,
        SymmetricPair::Cii { .. } => {
            if even {
                plus == minus
            } else {
                plus.is_multiple_of(2) && minus.is_multiple_of(2)
            }
        }
        SymmetricPair::Diii { .. } => {
            if even {
                plus.is_multiple_of(2) && minus.is_multiple_of(2)
            } else {
                plus == minus
            }
        }
    }
}

/// Signed diagrams for the pair, without the PGL identification or the very
/// even doubling. Order: reverse-lexicographic on the underlying partition,
/// then lexicographic on the per-length plus-count vectors.
pub(crate) fn enumerate_syd_raw(pair: SymmetricPair) -> Vec<SignedYoungDiagram> {
    let n = pair.diagram_size();
    let target = pair.diagram_signature();
    let mut out = Vec::new();
    for shape in crate::partition::enumerate_partitions(n) {
        let groups = shape.grouped();
        // enumerate per-length plus counts
        let mut splits: Vec<u32> = Vec::with_capacity(groups.len());
        assign(pair, &groups, 0, &mut splits, target, &mut out);
    }
    fn assign(
        pair: SymmetricPair,
        groups: &[(u32, u32)],
        idx: usize,
        splits: &mut Vec<u32>,
        target: (u32, u32),
        out: &mut Vec<SignedYoungDiagram>,
    ) {
        if idx == groups.len() {
            let d = SignedYoungDiagram::new(
                groups
                    .iter()
                    .zip(splits.iter())
                    .map(|(&(len, mult), &plus)| (len, plus, mult - plus)),
            );
            if d.signature() == target {
                out.push(d);
            }
            return;
        }
        let (len, mult) = groups[idx];
        // plus-heavy splits first, so `2+` precedes `2-` in listings
        for plus in (0..=mult).rev() {
            if split_allowed(pair, len, plus, mult - plus) {
                splits.push(plus);
                assign(pair, groups, idx + 1, splits, target, out);
                splits.pop();
            }
        }
    }
    out
}

/// Validity predicate for an orbit label without enumerating the whole
/// orbit set: signature, per-length sign constraints, the PGL canonical
/// representative, and decoration rules.
pub(crate) fn orbit_is_valid(pair: SymmetricPair, orbit: &OrbitLabel) -> bool {
    let d = &orbit.diagram;
    if d.signature() != pair.diagram_signature() {
        return false;
    }
    if !d.groups().iter().all(|g| split_allowed(pair, g.len, g.plus, g.minus)) {
        return false;
    }
    if pgl_identified(pair, d) && d.sign_swapped() < *d {
        return false; // not the canonical representative
    }
    match orbit.decoration {
        Decoration::None => {
            !matches!(pair, SymmetricPair::Bdi { p, q } if p == q)
                || !d.all_lengths_even()
                || d.is_empty()
        }
        Decoration::I | Decoration::II => {
            matches!(pair, SymmetricPair::Bdi { p, q } if p == q)
                && d.all_lengths_even()
                && !d.is_empty()
        }
    }
}

/// Whether a diagram is subject to the global sign-swap identification:
/// the quotient-linear pair with equal ranks has a disconnected fixed-point
/// group whose extra component exchanges the two summands, so every diagram
/// labels the same orbit as its global sign swap.
fn pgl_identified(pair: SymmetricPair, d: &SignedYoungDiagram) -> bool {
    let _ = d;
    matches!(pair, SymmetricPair::AiiiPgl { p, q } if p == q)
}

/// Canonical representative under the PGL p=q sign-swap identification:
/// the lexicographically smaller of the diagram and its swap.
pub(crate) fn pgl_canonical(pair: SymmetricPair, d: SignedYoungDiagram) -> SignedYoungDiagram {
    if pgl_identified(pair, &d) {
        let swapped = d.sign_swapped();
        if swapped < d {
            return swapped;
        }
    }
    d
}

/// All nilpotent orbit labels for the pair, in a deterministic order.
///
/// Degenerate zero-dimensional pairs yield exactly one label, the empty
/// diagram.
pub fn enumerate_syd(pair: SymmetricPair) -> Vec<OrbitLabel> {
    let mut out = Vec::new();
    let very_even_doubles = match pair {
        SymmetricPair::Bdi { p, q } => p == q,
        _ => false,
    };
    for d in enumerate_syd_raw(pair) {
        if pgl_identified(pair, &d) {
            let swapped = d.sign_swapped();
            if swapped < d {
                continue; // emitted at its canonical representative
            }
        }
        if very_even_doubles && d.all_lengths_even() && !d.is_empty() {
            out.push(OrbitLabel { diagram: d.clone(), decoration: Decoration::I });
            out.push(OrbitLabel { diagram: d, decoration: Decoration::II });
        } else {
            out.push(OrbitLabel::plain(d));
        }
    }
    out
}

/// Rows of `a` and `b` merged and re-sorted by length; signature adds
/// componentwise.
pub fn join_diagrams(a: &SignedYoungDiagram, b: &SignedYoungDiagram) -> SignedYoungDiagram {
    a.join(b)
}

/// The wire-format record for a diagram: parallel arrays over distinct
/// lengths plus the optional decoration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramRecord {
    pub lengths: Vec<u32>,
    #[serde(rename = "plusCounts")]
    pub plus_counts: Vec<u32>,
    #[serde(rename = "minusCounts")]
    pub minus_counts: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decoration: Option<String>,
}

impl From<&OrbitLabel> for DiagramRecord {
    fn from(label: &OrbitLabel) -> Self {
        let groups = label.diagram.groups();
        DiagramRecord {
            lengths: groups.iter().map(|g| g.len).collect(),
            plus_counts: groups.iter().map(|g| g.plus).collect(),
            minus_counts: groups.iter().map(|g| g.minus).collect(),
            decoration: match label.decoration {
                Decoration::None => None,
                d => Some(d.to_string()),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn syd(s: &str) -> SignedYoungDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn signature_alternates_along_rows() {
        assert_eq!(syd("3+").signature(), (2, 1));
        assert_eq!(syd("3-").signature(), (1, 2));
        assert_eq!(syd("2+").signature(), (1, 1));
        assert_eq!(syd("1+ 1+ 1-").signature(), (2, 1));
    }

    #[test]
    fn enumerate_bdi_2_1() {
        let labels = enumerate_syd(SymmetricPair::Bdi { p: 2, q: 1 });
        assert_eq!(labels.len(), 2);
        let set: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
        assert!(set.contains(&"3+".to_string()));
        assert!(set.contains(&"1+ 1+ 1-".to_string()));
    }

    #[test]
    fn enumerate_ci_1() {
        let labels = enumerate_syd(SymmetricPair::Ci { n: 1 });
        let set: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
        assert_eq!(set, vec!["2+", "2-", "1+ 1-"]);
    }

    #[test]
    fn enumerate_cii_1_1() {
        let labels = enumerate_syd(SymmetricPair::Cii { p: 1, q: 1 });
        let set: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
        assert_eq!(set, vec!["2+ 2-", "1+ 1+ 1- 1-"]);
    }

    #[test]
    fn zero_size_pairs_have_exactly_the_zero_orbit() {
        for pair in [
            SymmetricPair::Bdi { p: 0, q: 0 },
            SymmetricPair::Ci { n: 0 },
            SymmetricPair::Cii { p: 0, q: 0 },
            SymmetricPair::Diii { n: 0 },
            SymmetricPair::AiiiSl { p: 0, q: 0 },
        ] {
            let labels = enumerate_syd(pair);
            assert_eq!(labels.len(), 1, "{pair}");
            assert!(labels[0].diagram.is_empty());
        }
    }

    #[test]
    fn pgl_equal_rank_identifies_diagrams_under_global_swap() {
        // PGL(2), p=q=1: 2+ and 2- are the same orbit; 1+1- is its own.
        let labels = enumerate_syd(SymmetricPair::AiiiPgl { p: 1, q: 1 });
        assert_eq!(labels.len(), 2);
        // SL(2) does not identify.
        let labels = enumerate_syd(SymmetricPair::AiiiSl { p: 1, q: 1 });
        assert_eq!(labels.len(), 3);
        // PGL(4), p=q=2: 2+1+1- and 2-1+1- merge as well
        let labels = enumerate_syd(SymmetricPair::AiiiPgl { p: 2, q: 2 });
        assert_eq!(labels.len(), 6);
        // unequal ranks: no identification
        let labels = enumerate_syd(SymmetricPair::AiiiPgl { p: 2, q: 1 });
        let sl = enumerate_syd(SymmetricPair::AiiiSl { p: 2, q: 1 });
        assert_eq!(labels.len(), sl.len());
    }

    #[test]
    fn very_even_bdi_diagrams_are_doubled() {
        // SO(4) with p=q=2: partition (2,2) with one +row and one -row is very even.
        let labels = enumerate_syd(SymmetricPair::Bdi { p: 2, q: 2 });
        let decorated: Vec<_> =
            labels.iter().filter(|l| l.decoration != Decoration::None).collect();
        assert_eq!(decorated.len(), 2);
        assert!(decorated.iter().all(|l| l.diagram == syd("2+ 2-")));
    }

    #[test]
    fn join_examples() {
        let a = syd("1+ 1-");
        assert_eq!(a.join(&SignedYoungDiagram::empty()), a);
        assert_eq!(syd("2+ 2-").join(&syd("1+")), syd("2+ 2- 1+"));
        assert_eq!(syd("1+ 1+ 1- 1-").join(&syd("3+")), syd("3+ 1+ 1+ 1- 1-"));
    }

    #[test]
    fn display_and_parse_round_trip() {
        for s in ["0", "3+ 1+ 1-", "2+ 2-", "4+ 4- 2+ 1-"] {
            assert_eq!(syd(s).to_string(), s);
        }
    }

    #[test]
    fn all_emitted_labels_have_the_pair_signature() {
        let pairs = [
            SymmetricPair::Bdi { p: 4, q: 3 },
            SymmetricPair::Ci { n: 3 },
            SymmetricPair::Cii { p: 2, q: 1 },
            SymmetricPair::Diii { n: 3 },
            SymmetricPair::AiiiSl { p: 3, q: 2 },
            SymmetricPair::AiiiPgl { p: 2, q: 2 },
            SymmetricPair::Glgl { p: 2, q: 2 },
        ];
        for pair in pairs {
            for l in enumerate_syd(pair) {
                assert_eq!(l.diagram.signature(), pair.diagram_signature(), "{pair}: {l}");
            }
        }
    }

    #[test]
    fn pair_syntax_round_trip() {
        for s in ["BDI:2,1", "CI:4", "AIII_SL:3,2", "DIII:5", "CII:1,1", "AIII_PGL:2,2", "GLGL:1,1"] {
            let pair: SymmetricPair = s.parse().unwrap();
            assert_eq!(pair.to_string(), s);
        }
        assert!("BDI:1".parse::<SymmetricPair>().is_err());
        assert!("XI:1,2".parse::<SymmetricPair>().is_err());
    }

    proptest! {
        #[test]
        fn join_is_commutative_and_associative(
            rows_a in proptest::collection::vec((1u32..6, any::<bool>()), 0..5),
            rows_b in proptest::collection::vec((1u32..6, any::<bool>()), 0..5),
            rows_c in proptest::collection::vec((1u32..6, any::<bool>()), 0..5),
        ) {
            let a = SignedYoungDiagram::from_rows(rows_a);
            let b = SignedYoungDiagram::from_rows(rows_b);
            let c = SignedYoungDiagram::from_rows(rows_c);
            prop_assert_eq!(a.join(&b), b.join(&a));
            prop_assert_eq!(a.join(&b).join(&c), a.join(&b.join(&c)));
            let (pa, qa) = a.signature();
            let (pb, qb) = b.signature();
            prop_assert_eq!(a.join(&b).signature(), (pa + pb, qa + qb));
        }
    }
}
