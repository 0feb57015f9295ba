//! Textual graph family descriptors such as `cycle:8`, `cyclepow:8:3` or
//! `union:path:3+path:3`.

use std::fmt;
use std::str::FromStr;

use crate::graph::{Graph, GraphError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    PathPower(usize, usize),
    Cycle(usize),
    CyclePower(usize, usize),
    Complete(usize),
    Edgeless(usize),
    Multipartite(Vec<usize>),
    Grid(Vec<usize>),
    Rook(Vec<usize>),
    Petersen,
    Union(Vec<Family>),
}

impl Family {
    pub fn build(&self) -> Result<Graph, GraphError> {
        match self {
            Family::Path(n) => Graph::path(*n),
            Family::PathPower(n, r) => Graph::path(*n)?.power(*r),
            Family::Cycle(n) => Graph::cycle(*n),
            Family::CyclePower(n, r) => Graph::cycle(*n)?.power(*r),
            Family::Complete(n) => Graph::complete(*n),
            Family::Edgeless(n) => Graph::edgeless(*n),
            Family::Multipartite(parts) => Graph::complete_multipartite(parts),
            Family::Grid(sizes) => Graph::grid(sizes),
            Family::Rook(sizes) => Graph::rook(sizes),
            Family::Petersen => Ok(Graph::petersen()),
            Family::Union(parts) => {
                let graphs = parts.iter().map(Family::build).collect::<Result<Vec<_>, _>>()?;
                Graph::disjoint_union(&graphs)
            }
        }
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::PathPower(n, r) => write!(f, "pathpow:{n}:{r}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::CyclePower(n, r) => write!(f, "cyclepow:{n}:{r}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Edgeless(n) => write!(f, "empty:{n}"),
            Family::Multipartite(p) => write!(f, "multipartite:{}", join(p)),
            Family::Grid(p) => write!(f, "grid:{}", join(p)),
            Family::Rook(p) => write!(f, "rook:{}", join(p)),
            Family::Petersen => write!(f, "petersen"),
            Family::Union(parts) => {
                write!(f, "union:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "+")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::BadDescriptor(s.to_string());
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("union:") {
            let parts = rest.split('+').map(str::parse).collect::<Result<Vec<Family>, _>>()?;
            if parts.is_empty() {
                return Err(bad());
            }
            return Ok(Family::Union(parts));
        }
        let mut fields = s.split(':');
        let name = fields.next().ok_or_else(bad)?;
        let args: Vec<&str> = fields.collect();
        let int = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let list = |t: &str| t.split(',').map(int).collect::<Result<Vec<_>, _>>();
        let family = match (name, args.as_slice()) {
            ("path", [n]) => Family::Path(int(n)?),
            ("pathpow", [n, r]) => Family::PathPower(int(n)?, int(r)?),
            ("cycle", [n]) => Family::Cycle(int(n)?),
            ("cyclepow", [n, r]) => Family::CyclePower(int(n)?, int(r)?),
            ("complete", [n]) => Family::Complete(int(n)?),
            ("empty", [n]) => Family::Edgeless(int(n)?),
            ("multipartite", [p]) => Family::Multipartite(list(p)?),
            ("grid", [p]) => Family::Grid(list(p)?),
            ("rook", [p]) => Family::Rook(list(p)?),
            ("petersen", []) => Family::Petersen,
            _ => return Err(bad()),
        };
        Ok(family)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for text in [
            "cycle:8",
            "cyclepow:8:3",
            "path:5",
            "pathpow:7:2",
            "complete:4",
            "empty:3",
            "multipartite:2,3",
            "grid:3,3",
            "rook:2,2,2",
            "petersen",
            "union:path:3+path:3+path:3",
        ] {
            let f: Family = text.parse().unwrap();
            assert_eq!(f.to_string(), text);
            f.build().unwrap();
        }
    }

    #[test]
    fn rejects_malformed() {
        for text in ["", "cycle", "cycle:x", "grid:3,,3", "hexagon:6", "cyclepow:8", "union:"] {
            assert!(text.parse::<Family>().is_err(), "{text}");
        }
        assert_eq!("cycle:2".parse::<Family>().unwrap().build(), Err(GraphError::CycleTooShort(2)));
        assert!("path:0".parse::<Family>().unwrap().build().is_err());
    }

    #[test]
    fn union_descriptor_builds_blocks() {
        let g = "union:path:3+path:3+path:3".parse::<Family>().unwrap().build().unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(g.edge_count(), 6);
    }
}
