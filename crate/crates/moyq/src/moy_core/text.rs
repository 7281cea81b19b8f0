//! The `.moy` / `.lnk` text format.
//!
//! `#` starts a comment, each slice is one `slice:` line with pieces
//! comma-separated left to right. Tokens:
//!
//! ```text
//! I^ k    upward identity        Iv k    downward identity
//! U> k    cup, strand left-to-right through the minimum
//! U< k    cup, right-to-left     C< k    cap, right-to-left
//! C> k    cap, left-to-right     M a b   merge (thick = a+b)
//! S a b   split                  X+ a b  positive crossing
//! X- a b  negative crossing
//! ```
//!
//! A trailing `*` on a piece (e.g. `I^ 2*`) puts the base point on that
//! piece's reference wire: its first top wire, or the bottom-left wire of a
//! cap. `M a b c` is also accepted and requires `c = a + b`.

use crate::error::Error;
use crate::moy_core::{Piece, PieceKind, SlicedDiagram};

pub fn parse_diagram(text: &str) -> Result<SlicedDiagram, Error> {
    let mut slices = Vec::new();
    for (lno, raw_line) in text.lines().enumerate() {
        let line = match raw_line.find('#') {
            Some(i) => &raw_line[..i],
            None => raw_line,
        };
        if line.trim().is_empty() {
            continue;
        }
        let err = |col: usize, msg: String| Error::Parse { line: lno + 1, col, msg };
        let Some(rest) = line.trim_start().strip_prefix("slice:") else {
            return Err(err(1, "expected `slice:`".into()));
        };
        let mut pieces = Vec::new();
        for chunk in rest.split(',') {
            let col = chunk.as_ptr() as usize - raw_line.as_ptr() as usize + 1;
            let mut marked = false;
            let mut tokens: Vec<String> = chunk.split_whitespace().map(String::from).collect();
            if let Some(last) = tokens.last_mut() {
                if last == "*" {
                    marked = true;
                    tokens.pop();
                } else if last.ends_with('*') {
                    marked = true;
                    last.truncate(last.len() - 1);
                }
            }
            if tokens.is_empty() {
                return Err(err(col, "empty piece".into()));
            }
            let num = |t: &str| -> Result<u32, Error> {
                t.parse::<u32>().map_err(|_| err(col, format!("bad label `{t}`")))
            };
            let args: Vec<u32> =
                tokens[1..].iter().map(|t| num(t)).collect::<Result<_, _>>()?;
            let arity = |n: usize| -> Result<(), Error> {
                if args.len() == n {
                    Ok(())
                } else {
                    Err(err(col, format!("`{}` takes {n} label(s)", tokens[0])))
                }
            };
            let kind = tokens[0].as_str();
            let mut piece = match kind {
                "I^" => {
                    arity(1)?;
                    Piece::id_up(args[0])
                }
                "Iv" => {
                    arity(1)?;
                    Piece::id_down(args[0])
                }
                "U>" => {
                    arity(1)?;
                    Piece::new(PieceKind::CupLR, args[0], 0)
                }
                "U<" => {
                    arity(1)?;
                    Piece::new(PieceKind::CupRL, args[0], 0)
                }
                "C<" => {
                    arity(1)?;
                    Piece::new(PieceKind::CapRL, args[0], 0)
                }
                "C>" => {
                    arity(1)?;
                    Piece::new(PieceKind::CapLR, args[0], 0)
                }
                "M" | "S" => {
                    if args.len() == 3 && args[2] != args[0] + args[1] {
                        return Err(err(
                            col,
                            format!("flow violation: {} + {} != {}", args[0], args[1], args[2]),
                        ));
                    }
                    if args.len() != 2 && args.len() != 3 {
                        return Err(err(col, format!("`{kind}` takes 2 or 3 labels")));
                    }
                    let k = if kind == "M" { PieceKind::Merge } else { PieceKind::Split };
                    Piece::new(k, args[0], args[1])
                }
                "X+" => {
                    arity(2)?;
                    Piece::new(PieceKind::CrossPos, args[0], args[1])
                }
                "X-" => {
                    arity(2)?;
                    Piece::new(PieceKind::CrossNeg, args[0], args[1])
                }
                other => return Err(err(col, format!("unknown piece `{other}`"))),
            };
            piece.marked = marked;
            pieces.push(piece);
        }
        slices.push(pieces);
    }
    SlicedDiagram::new(slices).map_err(Error::Invalid)
}

pub fn render_diagram(d: &SlicedDiagram) -> String {
    let mut out = String::new();
    for slice in d.slices() {
        out.push_str("slice:");
        for (i, p) in slice.iter().enumerate() {
            out.push_str(if i == 0 { " " } else { ", " });
            use PieceKind::*;
            let body = match p.kind {
                IdUp => format!("I^ {}", p.a),
                IdDown => format!("Iv {}", p.a),
                CupLR => format!("U> {}", p.a),
                CupRL => format!("U< {}", p.a),
                CapRL => format!("C< {}", p.a),
                CapLR => format!("C> {}", p.a),
                Merge => format!("M {} {}", p.a, p.b),
                Split => format!("S {} {}", p.a, p.b),
                CrossPos => format!("X+ {} {}", p.a, p.b),
                CrossNeg => format!("X- {} {}", p.a, p.b),
            };
            out.push_str(&body);
            if p.marked {
                out.push('*');
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_circle() {
        let d = parse_diagram("slice: U> 2\nslice: C< 2").unwrap();
        assert!(d.is_closed());
        assert_eq!(d.n_edges(), 1);
        assert_eq!(d.edge_label(0), 2);
    }

    #[test]
    fn parse_theta() {
        let text = "# theta graph\nslice: U> 2\nslice: Iv 2, S 1 1\nslice: Iv 2, M 1 1\nslice: C< 2\n";
        let d = parse_diagram(text).unwrap();
        assert!(d.is_closed());
        assert_eq!(d.splits().len(), 1);
    }

    #[test]
    fn parse_flow_error() {
        let e = parse_diagram("slice: M 1 2 4").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn parse_marked() {
        let d = parse_diagram("slice: U< 2*\nslice: C> 2").unwrap();
        assert_eq!(d.marked_wire(), Some((1, 0)));
        assert_eq!(d.marked_edge(), Some(0));
    }

    #[test]
    fn roundtrip_identity() {
        let texts = [
            "slice: U> 2\nslice: C< 2\n",
            "slice: U< 1*\nslice: I^ 1, U< 1, Iv 1\nslice: X+ 1 1, Iv 1, Iv 1\nslice: I^ 1, C> 1, Iv 1\nslice: C> 1\n",
            "slice: U> 2, U< 2\nslice: Iv 2, M 2 2, Iv 2\nslice: Iv 2, S 1 3, Iv 2\nslice: Iv 2, M 1 3, Iv 2\nslice: Iv 2, S 2 2, Iv 2\nslice: C< 2, C> 2\n",
        ];
        for t in texts {
            let d = parse_diagram(t).unwrap();
            let rendered = render_diagram(&d);
            let d2 = parse_diagram(&rendered).unwrap();
            assert_eq!(render_diagram(&d2), rendered);
            assert_eq!(d2.slices(), d.slices());
        }
    }

    #[test]
    fn unknown_token_located() {
        let e = parse_diagram("slice: U> 2\nslice: Q 2").unwrap_err();
        match e {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }
}
