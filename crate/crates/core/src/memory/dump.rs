//! Plain-text memory dumps.
//!
//! A dump is one line per block, `addr par copy func arg`, in decimal,
//! single-space separated. A dump *file* additionally starts with `key=value`
//! header lines: `expr=ADDR` (required) and `freehead=ADDR` (optional).

use std::collections::HashSet;
use std::fmt::Write as _;

use super::{Addr, Machine, Node};
use crate::error::{DumpError, MachineError};
use crate::word::Word;

/// Writes blocks `1..=count`.
pub fn format_dump<W: Word>(m: &Machine<W>, count: usize) -> Result<String, MachineError> {
    if count > m.size() {
        return Err(MachineError::Address {
            addr: count,
            size: m.size(),
        });
    }
    let mut out = String::with_capacity(count * 16);
    for (i, n) in m.mem[..count].iter().enumerate() {
        writeln!(out, "{} {} {} {} {}", i + 1, n.par, n.copy, n.func, n.arg)
            .expect("writing to a String cannot fail");
    }
    Ok(out)
}

/// A set of blocks read from a dump, not yet written into a machine.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Overlay<W: Word = u32> {
    pub blocks: Vec<(Addr<W>, Node<W>)>,
    lines: Vec<usize>,
}

impl<W: Word> Overlay<W> {
    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    /// Highest block address mentioned, 0 when empty.
    pub fn max_addr(&self) -> usize {
        self.blocks.iter().map(|(a, _)| a.index()).max().unwrap_or(0)
    }

    /// Writes the listed blocks into `m`, touching nothing else. Every cell
    /// value must be a valid address or zero for `m`'s size.
    pub fn apply(&self, m: &mut Machine<W>) -> Result<(), DumpError> {
        let size = m.size();
        for ((addr, node), &line) in self.blocks.iter().zip(&self.lines) {
            let cells = [*addr, node.par, node.copy, node.func, node.arg];
            if let Some(bad) = cells.iter().find(|c| c.index() > size) {
                return Err(DumpError::OutOfRange {
                    line,
                    addr: bad.index(),
                });
            }
        }
        for (addr, node) in &self.blocks {
            m.mem[addr.index() - 1] = *node;
        }
        m.resync_free_shadow();
        Ok(())
    }
}

fn parse_word<W: Word>(tok: &str, line: usize) -> Result<W, DumpError> {
    tok.parse::<W>().map_err(|_| DumpError::Malformed {
        line,
        msg: format!("`{tok}` is not an address"),
    })
}

fn parse_block<W: Word>(text: &str, line: usize) -> Result<(Addr<W>, Node<W>), DumpError> {
    let toks: Vec<&str> = text.split_whitespace().collect();
    if toks.len() != 5 {
        return Err(DumpError::Malformed {
            line,
            msg: format!("expected 5 fields, found {}", toks.len()),
        });
    }
    let mut cells = [W::zero(); 5];
    for (cell, tok) in cells.iter_mut().zip(&toks) {
        *cell = parse_word(tok, line)?;
    }
    let addr = Addr(cells[0]);
    if addr.is_null() {
        return Err(DumpError::OutOfRange { line, addr: 0 });
    }
    let node = Node {
        par: Addr(cells[1]),
        copy: Addr(cells[2]),
        func: Addr(cells[3]),
        arg: Addr(cells[4]),
    };
    Ok((addr, node))
}

/// Reads block lines. Blank lines are skipped; line numbers in errors are
/// 1-based positions in `text`.
pub fn parse_dump<W: Word>(text: &str) -> Result<Overlay<W>, DumpError> {
    parse_blocks(text.lines().enumerate().map(|(i, l)| (i + 1, l)))
}

fn parse_blocks<'a, W: Word>(
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<Overlay<W>, DumpError> {
    let mut overlay = Overlay::default();
    let mut seen = HashSet::new();
    for (line, text) in lines {
        if text.trim().is_empty() {
            continue;
        }
        let (addr, node) = parse_block(text, line)?;
        if !seen.insert(addr) {
            return Err(DumpError::Duplicate {
                line,
                addr: addr.index(),
            });
        }
        overlay.blocks.push((addr, node));
        overlay.lines.push(line);
    }
    Ok(overlay)
}

/// A self-contained memory image: registers plus blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DumpFile<W: Word = u32> {
    pub expr: Addr<W>,
    pub freehead: Option<Addr<W>>,
    pub overlay: Overlay<W>,
}

impl<W: Word> DumpFile<W> {
    /// The whole of `m`, headed by both registers.
    pub fn render(m: &Machine<W>) -> String {
        let mut out = format!("expr={}\nfreehead={}\n", m.expr, m.freehead);
        out.push_str(&format_dump(m, m.size()).expect("full dump is in range"));
        out
    }

    pub fn parse(text: &str) -> Result<Self, DumpError> {
        let mut expr = None;
        let mut freehead = None;
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).peekable();
        while let Some(&(line, l)) = lines.peek() {
            let Some((key, value)) = l.split_once('=') else {
                break;
            };
            let value = parse_word::<W>(value.trim(), line)?;
            match key.trim() {
                "expr" => expr = Some(Addr(value)),
                "freehead" => freehead = Some(Addr(value)),
                other => {
                    return Err(DumpError::Malformed {
                        line,
                        msg: format!("unknown header `{other}`"),
                    })
                }
            }
            lines.next();
        }
        let expr = expr.ok_or(DumpError::MissingExpr)?;
        let overlay = parse_blocks(lines)?;
        Ok(DumpFile {
            expr,
            freehead,
            overlay,
        })
    }

    /// Builds a machine from the image.
    ///
    /// The machine has `blocks` blocks, or as many as the highest address in
    /// the image when `None`. If the image lists every block and carries a
    /// `freehead`, the free list is taken as is. Otherwise the expression at
    /// `expr` is validated and every other block is zeroed and linked into a
    /// fresh free list in ascending address order.
    pub fn load(&self, blocks: Option<usize>) -> Result<Machine<W>, LoadError> {
        let size = blocks.unwrap_or_else(|| self.overlay.max_addr().max(self.expr.index()));
        let mut m = Machine::new(size)?;
        self.overlay.apply(&mut m)?;
        if self.expr.index() > size {
            return Err(MachineError::Address {
                addr: self.expr.index(),
                size,
            }
            .into());
        }
        m.expr = self.expr;
        match self.freehead {
            Some(head) if self.overlay.len() == size => {
                if head.index() > size {
                    return Err(MachineError::Address {
                        addr: head.index(),
                        size,
                    }
                    .into());
                }
                m.set_freehead(head);
            }
            _ => {
                let live = if self.expr.is_null() {
                    Vec::new()
                } else {
                    m.validate(self.expr)?;
                    m.subtree_nodes(self.expr)
                };
                m.rebuild_free_list(&live);
            }
        }
        Ok(m)
    }
}

/// Failure turning a dump image into a machine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LoadError {
    #[error(transparent)]
    Dump(#[from] DumpError),
    #[error(transparent)]
    Machine(#[from] MachineError),
    #[error("malformed memory: {0}")]
    Invalid(#[from] crate::error::Diagnostic),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::memory::fixtures;
    use proptest::prelude::*;

    const APPLY_ROWS: &str = "1 0 0 2 0\n2 1 0 3 0\n3 2 0 4 5\n4 3 0 0 1\n5 3 0 0 2\n";

    #[test]
    fn apply_combinator_rows() {
        let m = fixtures::apply_combinator();
        assert_eq!(format_dump(&m, 5).unwrap(), APPLY_ROWS);
    }

    #[test]
    fn zero_block_and_count_bounds() {
        let m = Machine::<u32>::new(3).unwrap();
        assert_eq!(format_dump(&m, 1).unwrap(), "1 0 0 0 0\n");
        assert!(format_dump(&m, 4).is_err());
    }

    #[test]
    fn parse_round_trips_the_figure() {
        let overlay = parse_dump::<u32>(APPLY_ROWS).unwrap();
        assert_eq!(overlay.len(), 5);
        let mut m = Machine::new(8).unwrap();
        overlay.apply(&mut m).unwrap();
        assert_eq!(format_dump(&m, 5).unwrap(), APPLY_ROWS);
        assert_eq!(m.mem[..5], fixtures::apply_combinator().mem[..5]);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_dump::<u32>("").unwrap().is_empty());
        assert!(parse_dump::<u32>("\n  \n").unwrap().is_empty());
        assert!(matches!(
            parse_dump::<u32>("1 0 0"),
            Err(DumpError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse_dump::<u32>("1 0 0 0 0\n1 0 0 0 0"),
            Err(DumpError::Duplicate { line: 2, addr: 1 })
        ));
        assert!(matches!(
            parse_dump::<u32>("1 0 0 0 0\n0 0 0 0 0"),
            Err(DumpError::OutOfRange { line: 2, addr: 0 })
        ));
        assert!(matches!(
            parse_dump::<u32>("1 0 x 0 0"),
            Err(DumpError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse_dump::<u8>("300 0 0 0 0"),
            Err(DumpError::Malformed { line: 1, .. })
        ));
    }

    #[test]
    fn apply_checks_range() {
        let overlay = parse_dump::<u32>("1 0 0 0 0\n4 0 0 0 0\n").unwrap();
        let mut m = Machine::new(3).unwrap();
        assert_eq!(
            overlay.apply(&mut m),
            Err(DumpError::OutOfRange { line: 2, addr: 4 })
        );
        assert_eq!(m, Machine::new(3).unwrap(), "failed apply must not write");
    }

    #[test]
    fn dump_file_round_trip() {
        let mut m = fixtures::apply_combinator();
        m.rebuild_free_list(&m.subtree_nodes(Addr(1)));
        let text = DumpFile::render(&m);
        assert!(text.starts_with("expr=1\nfreehead=6\n1 0 0 2 0\n"));
        let back = DumpFile::<u32>::parse(&text).unwrap().load(None).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn dump_file_without_freehead_rebuilds_list() {
        let text = format!("expr=1\n{APPLY_ROWS}");
        let m = DumpFile::<u32>::parse(&text).unwrap().load(Some(7)).unwrap();
        assert_eq!(m.freehead(), Addr(6));
        assert_eq!(m.free_count().unwrap(), 2);
        assert_eq!(m.expr(), Addr(1));
    }

    #[test]
    fn dump_file_header_errors() {
        assert_eq!(
            DumpFile::<u32>::parse(APPLY_ROWS),
            Err(DumpError::MissingExpr)
        );
        assert!(matches!(
            DumpFile::<u32>::parse("expr=1\nbogus=2\n"),
            Err(DumpError::Malformed { line: 2, .. })
        ));
        let broken = "expr=1\n1 0 0 2 0\n2 0 0 0 1\n";
        assert!(matches!(
            DumpFile::<u32>::parse(broken).unwrap().load(None),
            Err(LoadError::Invalid(_))
        ));
    }

    fn arb_node() -> impl Strategy<Value = Node<u32>> {
        (0u32..50, 0u32..50, 0u32..50, 0u32..50).prop_map(|(par, copy, func, arg)| Node {
            par: Addr(par),
            copy: Addr(copy),
            func: Addr(func),
            arg: Addr(arg),
        })
    }

    proptest! {
        #[test]
        fn format_then_parse_is_identity(nodes in prop::collection::vec(arb_node(), 1..50)) {
            let mut m = Machine::<u32>::new(50).unwrap();
            for (i, n) in nodes.iter().enumerate() {
                m.mem[i] = *n;
            }
            let text = format_dump(&m, nodes.len()).unwrap();
            let overlay = parse_dump::<u32>(&text).unwrap();
            let mut fresh = Machine::<u32>::new(50).unwrap();
            overlay.apply(&mut fresh).unwrap();
            prop_assert_eq!(format_dump(&fresh, nodes.len()).unwrap(), text);
            prop_assert_eq!(&fresh.mem[..nodes.len()], &nodes[..]);
        }
    }
}
