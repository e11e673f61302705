//! Line-oriented text format for packings and their inside selections.
//!
//! ```text
//! cyclepack v1
//! order 12
//! hole 0 1 2 3            (zero or more)
//! cycle a b c d e f g h   (one per packed cycle, canonical form)
//! leave u v               (one per leave edge, sorted)
//! inside a b c d e f g h  (optional; aligned with the cycle lines)
//! mode strict             (required iff inside lines are present)
//! ```
//!
//! `parse` checks grammar and label ranges only; structural soundness is
//! the verifier's job. Parsing what `serialize` wrote returns an equal
//! value.

use std::fmt::Write as _;

use thiserror::Error;

use crate::cycle::{Edge, OctCycle, Vertex, CYCLE_LEN};
use crate::edgeset::EdgeSet;
use crate::packing::{A2PCertificate, CertMode, Packing};

/// `Syntax` is a malformed line (unknown directive, wrong token count,
/// non-numeric token, out-of-order section); `Semantic` is a well-formed
/// line whose meaning is invalid (label out of range, duplicate vertex,
/// misaligned selection). Both carry 1-based line numbers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {msg}")]
    Semantic { line: usize, msg: String },
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn semantic(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Semantic {
        line,
        msg: msg.into(),
    }
}

pub fn serialize(p: &Packing, cert: Option<&A2PCertificate>) -> String {
    let mut out = String::from("cyclepack v1\n");
    let _ = writeln!(out, "order {}", p.order);
    for hole in &p.holes {
        out.push_str("hole");
        for v in hole {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    for c in &p.cycles {
        out.push_str("cycle");
        for v in c.vertices() {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    for e in p.leave.to_sorted_vec() {
        let _ = writeln!(out, "leave {} {}", e.u(), e.v());
    }
    if let Some(cert) = cert {
        for c in &cert.insides {
            out.push_str("inside");
            for v in c.vertices() {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "mode {}", cert.mode.name());
    }
    out
}

/// Sections in the order the grammar allows them; a directive may never
/// follow one from a later section.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Section {
    Header,
    Order,
    Hole,
    Cycle,
    Leave,
    Inside,
    Mode,
}

pub fn parse(text: &str) -> Result<(Packing, Option<A2PCertificate>), ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (no, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "empty file; expected `cyclepack v1`"))?;
    if header != "cyclepack v1" {
        return Err(syntax(no, format!("expected `cyclepack v1`, got `{header}`")));
    }

    let mut at = Section::Header;
    let mut order: Option<usize> = None;
    let mut holes: Vec<Vec<Vertex>> = Vec::new();
    let mut cycles: Vec<OctCycle> = Vec::new();
    let mut leave: Option<EdgeSet> = None;
    let mut insides: Vec<OctCycle> = Vec::new();
    let mut mode: Option<CertMode> = None;
    let mut last_line = no;

    for (no, line) in lines {
        last_line = no;
        let mut tokens = line.split_whitespace();
        let directive = tokens.next().expect("blank lines were filtered out");
        let section = match directive {
            "order" => Section::Order,
            "hole" => Section::Hole,
            "cycle" => Section::Cycle,
            "leave" => Section::Leave,
            "inside" => Section::Inside,
            "mode" => Section::Mode,
            other => return Err(syntax(no, format!("unknown directive `{other}`"))),
        };
        if section < at || (section == at && matches!(section, Section::Order | Section::Mode)) {
            return Err(syntax(no, format!("`{directive}` line out of order")));
        }
        if section > Section::Order && order.is_none() {
            return Err(semantic(no, format!("`{directive}` before `order`")));
        }
        at = section;

        let args: Vec<usize> = tokens
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| syntax(no, format!("`{t}` is not a vertex label")))
            })
            .collect::<Result<_, _>>()
            .or_else(|e| {
                if directive == "mode" {
                    Ok(Vec::new()) // handled below from the raw line
                } else {
                    Err(e)
                }
            })?;

        match directive {
            "order" => {
                let [n] = args[..] else {
                    return Err(syntax(no, "expected `order N`"));
                };
                order = Some(n);
                leave = Some(EdgeSet::new(n));
            }
            "hole" => {
                let n = order.expect("checked above");
                if args.is_empty() {
                    return Err(syntax(no, "`hole` needs at least one vertex"));
                }
                check_labels(&args, n, no)?;
                for (i, v) in args.iter().enumerate() {
                    if args[..i].contains(v) {
                        return Err(semantic(no, format!("duplicate vertex {v} in hole")));
                    }
                }
                holes.push(args);
            }
            "cycle" | "inside" => {
                let n = order.expect("checked above");
                if args.len() != CYCLE_LEN {
                    return Err(syntax(
                        no,
                        format!("expected {CYCLE_LEN} vertices, got {}", args.len()),
                    ));
                }
                check_labels(&args, n, no)?;
                let mut raw = [0; CYCLE_LEN];
                raw.copy_from_slice(&args);
                let c = OctCycle::new(raw).map_err(|e| semantic(no, e.to_string()))?;
                if directive == "cycle" {
                    cycles.push(c);
                } else {
                    insides.push(c);
                }
            }
            "leave" => {
                let n = order.expect("checked above");
                let [u, v] = args[..] else {
                    return Err(syntax(no, "expected `leave u v`"));
                };
                check_labels(&args, n, no)?;
                if u == v {
                    return Err(semantic(no, format!("leave edge is a loop at {u}")));
                }
                let set = leave.as_mut().expect("set with order");
                if !set.insert(Edge::new(u, v)) {
                    return Err(semantic(no, format!("duplicate leave edge {u} {v}")));
                }
            }
            "mode" => {
                let rest = line["mode".len()..].trim();
                mode = Some(match rest {
                    "strict" => CertMode::Strict,
                    "relaxed" => CertMode::Relaxed,
                    other => {
                        return Err(syntax(
                            no,
                            format!("expected `mode strict` or `mode relaxed`, got `{other}`"),
                        ))
                    }
                });
            }
            _ => unreachable!("directive was matched to a section"),
        }
    }

    let Some(order) = order else {
        return Err(semantic(last_line, "file has no `order` line"));
    };
    let packing = Packing {
        order,
        cycles,
        leave: leave.expect("set with order"),
        holes,
    };
    let cert = match (insides.is_empty(), mode) {
        (true, None) => None,
        (false, Some(mode)) => {
            if insides.len() != packing.cycles.len() {
                return Err(semantic(
                    last_line,
                    format!(
                        "{} inside lines for {} cycles",
                        insides.len(),
                        packing.cycles.len()
                    ),
                ));
            }
            Some(A2PCertificate { insides, mode })
        }
        (false, None) => return Err(semantic(last_line, "inside lines without a `mode` line")),
        (true, Some(_)) => return Err(semantic(last_line, "`mode` line without inside lines")),
    };
    Ok((packing, cert))
}

fn check_labels(labels: &[usize], order: usize, no: usize) -> Result<(), ParseError> {
    for &v in labels {
        if v >= order {
            return Err(semantic(
                no,
                format!("label {v} out of range for order {order}"),
            ));
        }
    }
    Ok(())
}
