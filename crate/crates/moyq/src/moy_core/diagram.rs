use crate::error::{Error, Issue};
use crate::qlaurent::{qbinom, LaurentPoly};

/// One boundary wire of a horizontal cut: a label and a direction.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Wire {
    pub label: u32,
    pub up: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PieceKind {
    /// Upward identity strand.
    IdUp,
    /// Downward identity strand.
    IdDown,
    /// Cup whose strand traverses the minimum left-to-right
    /// (left wire down, right wire up).
    CupLR,
    /// Cup traversed right-to-left (left wire up, right wire down).
    CupRL,
    /// Cap traversed right-to-left (left wire down, right wire up).
    CapRL,
    /// Cap traversed left-to-right (left wire up, right wire down).
    CapLR,
    /// Merge vertex: thin inputs (left, right), thick output.
    Merge,
    /// Split vertex: thick input, thin outputs (left, right).
    Split,
    /// Positive crossing: the strand entering bottom-left passes over.
    CrossPos,
    /// Negative crossing (mirror of the positive one).
    CrossNeg,
}

/// An elementary piece of a slice. `a` is the only label for identities,
/// cups and caps; merge/split carry the two thin labels `(a, b)` with thick
/// label `a + b`; crossings carry the bottom labels `(a, b)` left to right.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Piece {
    pub kind: PieceKind,
    pub a: u32,
    pub b: u32,
    /// Marks the diagram's base point on this piece's reference wire
    /// (first top port, or the bottom-left port of a cap).
    pub marked: bool,
}

impl Piece {
    pub fn new(kind: PieceKind, a: u32, b: u32) -> Piece {
        Piece { kind, a, b, marked: false }
    }

    pub fn id_up(label: u32) -> Piece {
        Piece::new(PieceKind::IdUp, label, 0)
    }

    pub fn id_down(label: u32) -> Piece {
        Piece::new(PieceKind::IdDown, label, 0)
    }

    pub fn marked(mut self) -> Piece {
        self.marked = true;
        self
    }

    pub fn bottom_wires(&self) -> Vec<Wire> {
        use PieceKind::*;
        match self.kind {
            IdUp => vec![Wire { label: self.a, up: true }],
            IdDown => vec![Wire { label: self.a, up: false }],
            CupLR | CupRL => vec![],
            CapRL => vec![Wire { label: self.a, up: false }, Wire { label: self.a, up: true }],
            CapLR => vec![Wire { label: self.a, up: true }, Wire { label: self.a, up: false }],
            Merge => {
                vec![Wire { label: self.a, up: true }, Wire { label: self.b, up: true }]
            }
            Split => vec![Wire { label: self.a + self.b, up: true }],
            CrossPos | CrossNeg => {
                vec![Wire { label: self.a, up: true }, Wire { label: self.b, up: true }]
            }
        }
    }

    pub fn top_wires(&self) -> Vec<Wire> {
        use PieceKind::*;
        match self.kind {
            IdUp => vec![Wire { label: self.a, up: true }],
            IdDown => vec![Wire { label: self.a, up: false }],
            CupLR => vec![Wire { label: self.a, up: false }, Wire { label: self.a, up: true }],
            CupRL => vec![Wire { label: self.a, up: true }, Wire { label: self.a, up: false }],
            CapRL | CapLR => vec![],
            Merge => vec![Wire { label: self.a + self.b, up: true }],
            Split => {
                vec![Wire { label: self.a, up: true }, Wire { label: self.b, up: true }]
            }
            CrossPos | CrossNeg => {
                vec![Wire { label: self.b, up: true }, Wire { label: self.a, up: true }]
            }
        }
    }

    /// Turning contribution of the strand through this piece, in half-units
    /// per unit of label: `+1` for counterclockwise extrema (CupLR, CapRL),
    /// `-1` for clockwise ones, `0` for everything else.
    pub fn turning(&self) -> i64 {
        use PieceKind::*;
        match self.kind {
            CupLR | CapRL => 1,
            CupRL | CapLR => -1,
            _ => 0,
        }
    }

    pub fn is_crossing(&self) -> bool {
        matches!(self.kind, PieceKind::CrossPos | PieceKind::CrossNeg)
    }

    /// Mirror image under a left-right flip of the plane.
    pub fn mirror(&self) -> Piece {
        use PieceKind::*;
        let kind = match self.kind {
            IdUp => IdUp,
            IdDown => IdDown,
            CupLR => CupRL,
            CupRL => CupLR,
            CapRL => CapLR,
            CapLR => CapRL,
            Merge => Merge,
            Split => Split,
            CrossPos => CrossNeg,
            CrossNeg => CrossPos,
        };
        let (a, b) = match kind {
            Merge | Split | CrossPos | CrossNeg => (self.b, self.a),
            _ => (self.a, self.b),
        };
        Piece { kind, a, b, marked: self.marked }
    }
}

/// Per-edge label assignment, indexed by edge id.
pub type EdgeLabeling = Vec<u32>;

/// A validated sliced diagram with its derived structure: interfaces
/// between slices, the edge decomposition (maximal strands between
/// trivalent vertices), and the optional marked point.
#[derive(Clone, Debug)]
pub struct SlicedDiagram {
    slices: Vec<Vec<Piece>>,
    /// `interfaces[s]` is the cut below slice `s`; length `slices + 1`.
    interfaces: Vec<Vec<Wire>>,
    /// Per piece: (offset of its bottom ports in `interfaces[s]`,
    /// offset of its top ports in `interfaces[s+1]`).
    offsets: Vec<Vec<(usize, usize)>>,
    /// Edge id of every interface slot, parallel to `interfaces`.
    edge_of_slot: Vec<Vec<usize>>,
    edge_labels: Vec<u32>,
    /// Marked wire as (interface index, wire index).
    marked: Option<(usize, usize)>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

impl SlicedDiagram {
    /// Build and validate a diagram from its slices. Returns the located
    /// list of structural problems if there are any.
    pub fn new(slices: Vec<Vec<Piece>>) -> Result<SlicedDiagram, Vec<Issue>> {
        let mut issues = Vec::new();
        let mut interfaces: Vec<Vec<Wire>> = Vec::with_capacity(slices.len() + 1);
        let mut offsets: Vec<Vec<(usize, usize)>> = Vec::with_capacity(slices.len());

        // Bottom boundary is whatever slice 0 consumes.
        let bottom: Vec<Wire> = slices
            .first()
            .map(|s| s.iter().flat_map(|p| p.bottom_wires()).collect())
            .unwrap_or_default();
        interfaces.push(bottom);

        for (si, slice) in slices.iter().enumerate() {
            let below = interfaces[si].clone();
            let mut bot_off = 0usize;
            let mut top_off = 0usize;
            let mut above: Vec<Wire> = Vec::new();
            let mut slice_offsets = Vec::with_capacity(slice.len());
            for (pi, piece) in slice.iter().enumerate() {
                slice_offsets.push((bot_off, top_off));
                for w in piece.bottom_wires() {
                    match below.get(bot_off) {
                        Some(&have) if have == w => {}
                        Some(&have) => issues.push(Issue {
                            slice: si,
                            piece: pi,
                            reason: format!(
                                "wire mismatch: piece expects {:?}, interface has {:?}",
                                w, have
                            ),
                        }),
                        None => issues.push(Issue {
                            slice: si,
                            piece: pi,
                            reason: "piece consumes more wires than the interface has".into(),
                        }),
                    }
                    bot_off += 1;
                }
                let tops = piece.top_wires();
                top_off += tops.len();
                above.extend(tops);
            }
            if bot_off < below.len() {
                issues.push(Issue {
                    slice: si,
                    piece: slice.len().saturating_sub(1),
                    reason: format!(
                        "slice consumes {bot_off} wires but the interface below has {}",
                        below.len()
                    ),
                });
            }
            offsets.push(slice_offsets);
            interfaces.push(above);
        }

        // Marked point: at most one, resolved to an interface wire.
        let mut marked = None;
        for (si, slice) in slices.iter().enumerate() {
            for (pi, piece) in slice.iter().enumerate() {
                if !piece.marked {
                    continue;
                }
                let (bot, top) = offsets[si][pi];
                let mark = if piece.top_wires().is_empty() { (si, bot) } else { (si + 1, top) };
                if marked.is_some() {
                    issues.push(Issue {
                        slice: si,
                        piece: pi,
                        reason: "more than one marked point".into(),
                    });
                } else if interfaces[mark.0].get(mark.1).is_none() {
                    issues.push(Issue {
                        slice: si,
                        piece: pi,
                        reason: "marked point on a missing wire".into(),
                    });
                } else {
                    marked = Some(mark);
                }
            }
        }

        if !issues.is_empty() {
            return Err(issues);
        }

        // Edge decomposition: union interface slots through non-vertex pieces.
        let slot_base: Vec<usize> = {
            let mut acc = 0;
            interfaces
                .iter()
                .map(|w| {
                    let b = acc;
                    acc += w.len();
                    b
                })
                .collect()
        };
        let total_slots = slot_base.last().copied().unwrap_or(0)
            + interfaces.last().map(|w| w.len()).unwrap_or(0);
        let mut uf = UnionFind::new(total_slots);
        for (si, slice) in slices.iter().enumerate() {
            for (pi, piece) in slice.iter().enumerate() {
                let (bot, top) = offsets[si][pi];
                let b = |i: usize| slot_base[si] + bot + i;
                let t = |i: usize| slot_base[si + 1] + top + i;
                use PieceKind::*;
                match piece.kind {
                    IdUp | IdDown => uf.union(b(0), t(0)),
                    CupLR | CupRL => uf.union(t(0), t(1)),
                    CapRL | CapLR => uf.union(b(0), b(1)),
                    Merge | Split => {}
                    CrossPos | CrossNeg => {
                        uf.union(b(0), t(1));
                        uf.union(b(1), t(0));
                    }
                }
            }
        }
        let mut edge_ids = vec![usize::MAX; total_slots];
        let mut edge_labels = Vec::new();
        let mut edge_of_slot = Vec::with_capacity(interfaces.len());
        for (ii, wires) in interfaces.iter().enumerate() {
            let mut row = Vec::with_capacity(wires.len());
            for (wi, wire) in wires.iter().enumerate() {
                let root = uf.find(slot_base[ii] + wi);
                if edge_ids[root] == usize::MAX {
                    edge_ids[root] = edge_labels.len();
                    edge_labels.push(wire.label);
                }
                row.push(edge_ids[root]);
            }
            edge_of_slot.push(row);
        }

        Ok(SlicedDiagram { slices, interfaces, offsets, edge_of_slot, edge_labels, marked })
    }

    pub fn slices(&self) -> &[Vec<Piece>] {
        &self.slices
    }

    pub fn interfaces(&self) -> &[Vec<Wire>] {
        &self.interfaces
    }

    pub fn piece_offsets(&self, slice: usize, piece: usize) -> (usize, usize) {
        self.offsets[slice][piece]
    }

    pub fn is_closed(&self) -> bool {
        self.interfaces.first().map_or(true, |w| w.is_empty())
            && self.interfaces.last().map_or(true, |w| w.is_empty())
    }

    pub fn has_crossings(&self) -> bool {
        self.slices.iter().flatten().any(|p| p.is_crossing())
    }

    pub fn n_edges(&self) -> usize {
        self.edge_labels.len()
    }

    pub fn edge_label(&self, edge: usize) -> u32 {
        self.edge_labels[edge]
    }

    pub fn edge_at(&self, interface: usize, wire: usize) -> usize {
        self.edge_of_slot[interface][wire]
    }

    pub fn marked_wire(&self) -> Option<(usize, usize)> {
        self.marked
    }

    pub fn marked_edge(&self) -> Option<usize> {
        self.marked.map(|(i, w)| self.edge_of_slot[i][w])
    }

    /// The labeling `l` of the diagram itself.
    pub fn full_labeling(&self) -> EdgeLabeling {
        self.edge_labels.clone()
    }

    /// Number of link components (wire connectivity through crossings,
    /// identities, cups and caps). Merge/split vertices separate edges, so
    /// this is meaningful for genuine link diagrams.
    pub fn components(&self) -> usize {
        self.n_edges()
    }

    /// All cup/cap extrema as `(edge id, turning sign)`.
    pub fn extrema(&self) -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        for (si, slice) in self.slices.iter().enumerate() {
            for (pi, piece) in slice.iter().enumerate() {
                let t = piece.turning();
                if t == 0 {
                    continue;
                }
                let (bot, top) = self.offsets[si][pi];
                use PieceKind::*;
                let edge = match piece.kind {
                    CupLR | CupRL => self.edge_of_slot[si + 1][top],
                    CapRL | CapLR => self.edge_of_slot[si][bot],
                    _ => unreachable!(),
                };
                out.push((edge, t));
            }
        }
        out
    }

    /// All split vertices as `(left thin edge, right thin edge)`.
    pub fn splits(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (si, slice) in self.slices.iter().enumerate() {
            for (pi, piece) in slice.iter().enumerate() {
                if piece.kind == PieceKind::Split {
                    let (_, top) = self.offsets[si][pi];
                    out.push((self.edge_of_slot[si + 1][top], self.edge_of_slot[si + 1][top + 1]));
                }
            }
        }
        out
    }

    /// Rotational of a flow-conserving labeling, in half-units:
    /// each extremum contributes `turning * label`.
    pub fn rotational_half(&self, lab: &EdgeLabeling) -> i64 {
        self.extrema().iter().map(|&(e, t)| t * lab[e] as i64).sum()
    }

    /// Rotational in whole units; errors if the half-unit total is odd,
    /// which signals a non-closed or inconsistent labeling.
    pub fn rotational(&self, lab: &EdgeLabeling) -> Result<i64, Error> {
        let h = self.rotational_half(lab);
        if h % 2 != 0 {
            return Err(Error::eval(format!("non-integral rotational {h}/2")));
        }
        Ok(h / 2)
    }

    /// Product over split vertices of `[a+b choose b]` in the labeling.
    pub fn binomial_weight(&self, lab: &EdgeLabeling) -> LaurentPoly {
        let mut w = LaurentPoly::one();
        for (l, r) in self.splits() {
            let (a, b) = (lab[l] as i64, lab[r] as i64);
            w = &w * &qbinom(a + b, b);
            if w.is_zero() {
                break;
            }
        }
        w
    }

    /// `u(lab1, lab2) = sum over splits of a2*b1 - a1*b2`, with `a`/`b` the
    /// left/right thin labels of each labeling at the split.
    pub fn u_stat(&self, lab1: &EdgeLabeling, lab2: &EdgeLabeling) -> i64 {
        self.splits()
            .iter()
            .map(|&(l, r)| {
                let (a1, b1) = (lab1[l] as i64, lab1[r] as i64);
                let (a2, b2) = (lab2[l] as i64, lab2[r] as i64);
                a2 * b1 - a1 * b2
            })
            .sum()
    }

    /// Left-right mirror image of the diagram.
    pub fn mirror(&self) -> SlicedDiagram {
        let slices = self
            .slices
            .iter()
            .map(|s| s.iter().rev().map(|p| p.mirror()).collect())
            .collect();
        SlicedDiagram::new(slices).expect("mirror of a valid diagram is valid")
    }

    /// Side-by-side disjoint union (both diagrams must be closed).
    pub fn beside(&self, other: &SlicedDiagram) -> SlicedDiagram {
        assert!(self.is_closed() && other.is_closed());
        let rows = self.slices.len().max(other.slices.len());
        let mut slices = Vec::with_capacity(rows);
        for i in 0..rows {
            let mut row: Vec<Piece> = Vec::new();
            match self.slices.get(i) {
                Some(s) => row.extend(s.iter().copied()),
                None => row.extend(
                    self.interfaces.last().iter().flat_map(|w| w.iter()).map(|w| {
                        if w.up {
                            Piece::id_up(w.label)
                        } else {
                            Piece::id_down(w.label)
                        }
                    }),
                ),
            }
            match other.slices.get(i) {
                Some(s) => row.extend(s.iter().copied()),
                None => row.extend(
                    other.interfaces.last().iter().flat_map(|w| w.iter()).map(|w| {
                        if w.up {
                            Piece::id_up(w.label)
                        } else {
                            Piece::id_down(w.label)
                        }
                    }),
                ),
            }
            slices.push(row);
        }
        SlicedDiagram::new(slices).expect("disjoint union of valid closed diagrams is valid")
    }
}
