//! Plain-text file formats.
//!
//! Edge list: header `n m`, then `m` lines `u v` (0-indexed). Configuration:
//! header `n t`, then one line of `n` counts. In both, lines starting with
//! `#` and blank lines are ignored. Writers emit LF line endings and the
//! canonical sorted edge order, so read/write round trips are byte-stable.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::extremal::LabeledGraph;
use crate::graph::Graph;
use crate::pebbling::{Configuration, Witness};
use crate::star_partition::StarPartition;

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_numbers<T: std::str::FromStr>(line: usize, text: &str) -> Result<Vec<T>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse()
                .map_err(|_| Error::parse(line, format!("'{tok}' is not a nonnegative integer")))
        })
        .collect()
}

fn header(line: Option<(usize, &str)>, what: &str) -> Result<(usize, u64)> {
    let (no, text) = line.ok_or_else(|| Error::parse(1, format!("missing {what} header")))?;
    match parse_numbers::<u64>(no, text)?.as_slice() {
        [a, b] => Ok((*a as usize, *b)),
        _ => Err(Error::parse(
            no,
            format!("{what} header must be two integers"),
        )),
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").expect("writing to String");
    }
    out
}

pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (n, m) = header(lines.next(), "edge list")?;
    let mut edges = Vec::with_capacity(m as usize);
    for (no, line) in lines.by_ref() {
        match parse_numbers::<usize>(no, line)?.as_slice() {
            [u, v] => edges.push((*u, *v)),
            _ => return Err(Error::parse(no, "edge line must be two vertex indices")),
        }
    }
    if edges.len() as u64 != m {
        return Err(Error::parse(
            1,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edge_list(n, &edges)
}

pub fn write_configuration(c: &Configuration) -> String {
    let counts: Vec<String> = c.counts().iter().map(u32::to_string).collect();
    format!("{} {}\n{}\n", c.len(), c.size(), counts.join(" "))
}

pub fn read_configuration(text: &str) -> Result<Configuration> {
    let mut lines = content_lines(text);
    let (n, t) = header(lines.next(), "configuration")?;
    let mut counts = Vec::with_capacity(n);
    let mut last = 1;
    for (no, line) in lines {
        counts.extend(parse_numbers::<u32>(no, line)?);
        last = no;
    }
    if counts.len() != n {
        return Err(Error::parse(
            last,
            format!("expected {n} counts, found {}", counts.len()),
        ));
    }
    let c = Configuration::new(counts);
    if c.size() != t {
        return Err(Error::parse(
            last,
            format!("header declares {t} pebbles, counts sum to {}", c.size()),
        ));
    }
    Ok(c)
}

pub fn write_witness(w: &Witness) -> String {
    w.moves.iter().map(|m| format!("{m}\n")).collect()
}

/// `role vertex` lines for an extremal graph plus any extra roles.
pub fn write_roles(lg: &LabeledGraph, extra: &[(&str, usize)]) -> String {
    let mut out = String::new();
    for (role, v) in lg.role_lines().into_iter().chain(extra.iter().copied()) {
        writeln!(out, "{role} {v}").expect("writing to String");
    }
    out
}

/// Parse `role vertex` lines back into pairs.
pub fn read_roles(text: &str) -> Result<Vec<(String, usize)>> {
    content_lines(text)
        .map(|(no, line)| {
            let mut parts = line.split_whitespace();
            match (parts.next(), parts.next(), parts.next()) {
                (Some(role), Some(v), None) => v
                    .parse()
                    .map(|v| (role.to_string(), v))
                    .map_err(|_| Error::parse(no, format!("bad vertex '{v}'"))),
                _ => Err(Error::parse(no, "role line must be 'role vertex'")),
            }
        })
        .collect()
}

fn join(vs: &[usize]) -> String {
    vs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// One `center: v members: ...` line per part, then `W: ...`.
pub fn write_partition(p: &StarPartition) -> String {
    let mut out = String::new();
    for part in &p.parts {
        writeln!(
            out,
            "center: {} members: {}",
            part.center,
            join(&part.members)
        )
        .expect("writing to String");
    }
    if p.leftover.is_empty() {
        out.push_str("W:\n");
    } else {
        writeln!(out, "W: {}", join(&p.leftover)).expect("writing to String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, petersen};
    use crate::pebbling::Move;

    #[test]
    fn edge_list_round_trip_is_byte_stable() {
        for g in [petersen(), cycle(7).unwrap()] {
            let text = write_edge_list(&g);
            let back = read_edge_list(&text).unwrap();
            assert_eq!(back, g);
            assert_eq!(write_edge_list(&back), text);
        }
    }

    #[test]
    fn edge_list_comments_and_errors() {
        let g = read_edge_list("# triangle\n3 3\n0 1\n# middle\n1 2\n2 0\n").unwrap();
        assert_eq!(write_edge_list(&g), "3 3\n0 1\n0 2\n1 2\n");
        assert!(read_edge_list("3 2\n0 1\n").is_err());
        assert!(read_edge_list("3 1\n0 x\n").is_err());
        assert!(matches!(
            read_edge_list("3 1\n0 3\n"),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(read_edge_list("").is_err());
    }

    #[test]
    fn configuration_round_trip() {
        let c = Configuration::new(vec![0, 3, 1, 2]);
        let text = write_configuration(&c);
        assert_eq!(text, "4 6\n0 3 1 2\n");
        assert_eq!(read_configuration(&text).unwrap(), c);
        assert!(read_configuration("4 5\n0 3 1 2\n").is_err());
        assert!(read_configuration("3 6\n0 3 1 2\n").is_err());
    }

    #[test]
    fn witness_lines() {
        let w = Witness::new(vec![Move::new(0, 1), Move::new(1, 2)]);
        assert_eq!(write_witness(&w), "0 -> 1\n1 -> 2\n");
    }

    #[test]
    fn roles_round_trip() {
        let lg = crate::extremal::build_general(9).unwrap();
        let text = write_roles(&lg, &[("r", 7)]);
        let roles = read_roles(&text).unwrap();
        assert!(roles.contains(&("x".to_string(), 0)));
        assert!(roles.contains(&("r".to_string(), 7)));
        assert_eq!(roles.iter().filter(|(r, _)| r == "L").count(), 5);
    }

    #[test]
    fn partition_lines() {
        let g = crate::generators::complete(3).unwrap();
        let p = crate::star_partition::build_star_partition(&g).unwrap();
        assert_eq!(write_partition(&p), "center: 0 members: 0 1 2\nW:\n");
    }
}
