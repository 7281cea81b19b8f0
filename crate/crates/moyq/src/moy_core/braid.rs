use crate::error::Error;
use crate::moy_core::{Piece, PieceKind, SlicedDiagram};

fn check_word(word: &[i32], strands: usize) -> Result<(), Error> {
    if strands == 0 {
        return Err(Error::usage("a braid needs at least one strand"));
    }
    for &g in word {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= strands {
            return Err(Error::usage(format!(
                "generator {g} out of range for {strands} strands"
            )));
        }
    }
    Ok(())
}

fn braid_rows(word: &[i32], strands: usize, label: u32, trailing_down: usize) -> Vec<Vec<Piece>> {
    let mut rows = Vec::with_capacity(word.len());
    for &g in word {
        let i = g.unsigned_abs() as usize;
        let kind = if g > 0 { PieceKind::CrossPos } else { PieceKind::CrossNeg };
        let mut row = Vec::with_capacity(strands - 1 + trailing_down);
        for _ in 1..i {
            row.push(Piece::id_up(label));
        }
        row.push(Piece::new(kind, label, label));
        for _ in (i + 1)..strands {
            row.push(Piece::id_up(label));
        }
        for _ in 0..trailing_down {
            row.push(Piece::id_down(label));
        }
        rows.push(row);
    }
    rows
}

/// The right closure of a braid as a closed sliced diagram: every strand is
/// labeled `label`, strand `j` returns down the outside of strands
/// `j+1..strands`. With `mark` set, the base point sits on the bottom of the
/// left-most strand.
pub fn expand_braid(
    word: &[i32],
    strands: usize,
    label: u32,
    mark: bool,
) -> Result<SlicedDiagram, Error> {
    check_word(word, strands)?;
    let mut slices: Vec<Vec<Piece>> = Vec::new();
    // Cups, innermost return for the right-most strand: after slice j the
    // interface is (up x j+1, down x j+1) with returns in reverse order.
    for j in 0..strands {
        let mut row: Vec<Piece> = (0..j).map(|_| Piece::id_up(label)).collect();
        let mut cup = Piece::new(PieceKind::CupRL, label, 0);
        if mark && j == 0 {
            cup = cup.marked();
        }
        row.push(cup);
        row.extend((0..j).map(|_| Piece::id_down(label)));
        slices.push(row);
    }
    slices.extend(braid_rows(word, strands, label, strands));
    for j in (0..strands).rev() {
        let mut row: Vec<Piece> = (0..j).map(|_| Piece::id_up(label)).collect();
        row.push(Piece::new(PieceKind::CapLR, label, 0));
        row.extend((0..j).map(|_| Piece::id_down(label)));
        slices.push(row);
    }
    SlicedDiagram::new(slices).map_err(Error::Invalid)
}

/// The cut-open form of the marked braid closure: strand 1 is left открыт as
/// a single through strand, strands `2..=strands` are closed on the right.
/// The result is a (1,1)-tangle with one bottom and one top wire of label
/// `label`; evaluating it with the bottom/top color fixed to the pure
/// symmetric one is the marked evaluation of the closure.
pub fn open_braid_tangle(
    word: &[i32],
    strands: usize,
    label: u32,
) -> Result<SlicedDiagram, Error> {
    check_word(word, strands)?;
    let mut slices: Vec<Vec<Piece>> = Vec::new();
    for j in 1..strands {
        let mut row: Vec<Piece> = (0..j).map(|_| Piece::id_up(label)).collect();
        row.push(Piece::new(PieceKind::CupRL, label, 0));
        row.extend((0..j - 1).map(|_| Piece::id_down(label)));
        slices.push(row);
    }
    slices.extend(braid_rows(word, strands, label, strands - 1));
    for j in (1..strands).rev() {
        let mut row: Vec<Piece> = (0..j).map(|_| Piece::id_up(label)).collect();
        row.push(Piece::new(PieceKind::CapLR, label, 0));
        row.extend((0..j - 1).map(|_| Piece::id_down(label)));
        slices.push(row);
    }
    if slices.is_empty() {
        // Bare one-strand tangle; a diagram needs at least one piece.
        slices.push(vec![Piece::id_up(label)]);
    }
    SlicedDiagram::new(slices).map_err(Error::Invalid)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_braid_is_marked_circle() {
        let d = expand_braid(&[], 1, 3, true).unwrap();
        assert!(d.is_closed());
        assert_eq!(d.n_edges(), 1);
        assert!(d.marked_edge().is_some());
        assert_eq!(d.rotational(&d.full_labeling()).unwrap(), -3);
    }

    #[test]
    fn trefoil_shape() {
        let d = expand_braid(&[1, 1, 1], 2, 1, false).unwrap();
        assert!(d.is_closed());
        assert!(d.has_crossings());
        // One component: the closure of sigma_1^3 is a knot.
        assert_eq!(d.components(), 1);
        let unlink = expand_braid(&[], 2, 1, false).unwrap();
        assert_eq!(unlink.components(), 2);
    }

    #[test]
    fn word_validation() {
        assert!(expand_braid(&[2], 2, 1, false).is_err());
        assert!(expand_braid(&[0], 2, 1, false).is_err());
        assert!(expand_braid(&[], 0, 1, false).is_err());
    }

    #[test]
    fn open_tangle_boundaries() {
        let t = open_braid_tangle(&[1, 1, 1], 2, 2).unwrap();
        assert!(!t.is_closed());
        assert_eq!(t.interfaces().first().unwrap().len(), 1);
        assert_eq!(t.interfaces().last().unwrap().len(), 1);
        let empty = open_braid_tangle(&[], 1, 2).unwrap();
        assert_eq!(empty.interfaces().first().unwrap().len(), 1);
        assert_eq!(empty.interfaces().last().unwrap().len(), 1);
    }
}
