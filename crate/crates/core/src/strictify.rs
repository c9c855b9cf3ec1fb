//! Normal forms in the strict semantics on a small fragment: level 2, a host
//! that is a linear chain of points and arrows, at most one `xi` column,
//! terms of dimension at most 2.
//!
//! Evaluation sends a 1-dimensional term to its endpoints with side tags.
//! Strict functoriality and associativity make the interval all that
//! remains, and strict naturality lets the crossing from the `F` side to the
//! `G` side slide to the source end, so the crossing carries no position.
//! Every 2-dimensional term of the fragment strictifies to an identity.

use std::fmt;

use thiserror::Error;

use crate::globe::{Component, Family};
use crate::pasting::{CellRef, Tree};
use crate::term::{MidKind, Node, Series, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrictError {
    #[error("outside the strict fragment: {0}")]
    OutsideFragment(String),
}

fn outside<T>(reason: impl Into<String>) -> Result<T, StrictError> {
    Err(StrictError::OutsideFragment(reason.into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SideTag {
    Plain,
    F,
    G,
}

/// A chain position with the side it was transported to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endpoint {
    pub side: SideTag,
    pub at: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum StrictNf {
    Point(Endpoint),
    /// A 1-cell; it crosses iff it runs from the `F` side to the `G` side.
    Path { from: Endpoint, to: Endpoint },
    /// A 2-cell that strictifies to the identity on a 1-cell.
    Identity(Box<StrictNf>),
}

impl StrictNf {
    pub fn crossing(&self) -> bool {
        match self {
            StrictNf::Path { from, to } => from.side == SideTag::F && to.side == SideTag::G,
            StrictNf::Identity(inner) => inner.crossing(),
            StrictNf::Point(_) => false,
        }
    }

    fn retag(&self, series: Series) -> Result<StrictNf, StrictError> {
        let side = match series {
            Series::F => SideTag::F,
            Series::G => SideTag::G,
        };
        let re = |e: &Endpoint| -> Result<Endpoint, StrictError> {
            if e.side != SideTag::Plain {
                return outside("transport of a transported term");
            }
            Ok(Endpoint { side, at: e.at })
        };
        Ok(match self {
            StrictNf::Point(e) => StrictNf::Point(re(e)?),
            StrictNf::Path { from, to } => StrictNf::Path { from: re(from)?, to: re(to)? },
            StrictNf::Identity(inner) => StrictNf::Identity(Box::new(inner.retag(series)?)),
        })
    }
}

fn show_point(e: &Endpoint) -> String {
    match e.side {
        SideTag::Plain => format!("x{}", e.at),
        SideTag::F => format!("F x{}", e.at),
        SideTag::G => format!("G x{}", e.at),
    }
}

impl fmt::Display for StrictNf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrictNf::Point(e) => f.write_str(&show_point(e)),
            StrictNf::Path { from, to } => {
                let prefix = match (from.side, to.side) {
                    (SideTag::F, SideTag::F) => "F ",
                    (SideTag::G, SideTag::G) => "G ",
                    _ => "",
                };
                write!(f, "[{prefix}x{}..x{}", from.at, to.at)?;
                if self.crossing() {
                    write!(f, ", cross@x{}", from.at)?;
                }
                f.write_str("]")
            }
            StrictNf::Identity(inner) => write!(f, "id({inner})"),
        }
    }
}

/// Positions of the points and arrows of a chain-shaped host.
#[derive(Debug, Clone)]
pub struct Chain {
    component: Component,
    point_pos: Vec<u32>,
    edge_from: Vec<u32>,
}

impl Chain {
    /// Checks the fragment conditions on the host tree.
    pub fn of(host: &Tree) -> Result<Chain, StrictError> {
        if host.ctx().n != 2 {
            return outside(format!("level {} (only level 2 is supported)", host.ctx().n));
        }
        let xis = host.columns().iter().filter(|c| c.family == Family::Xi).count();
        if xis > 1 {
            return outside(format!("{xis} xi columns"));
        }
        let r = host.realization();
        let component = host.component();
        if r.set().max_dim(component).unwrap_or(0) > 1 {
            return outside("host has cells above dimension 1");
        }
        let points = r.set().count(component, 0);
        let edges = r.set().count(component, 1);
        if edges + 1 != points {
            return outside("host is not a linear chain");
        }
        let mut next: Vec<Option<(u32, u32)>> = vec![None; points];
        let mut has_incoming = vec![false; points];
        for e in 0..edges as u32 {
            let cell = CellRef::new(component, 1, e);
            let (s, t) = (r.source(cell).expect("edge").id, r.target(cell).expect("edge").id);
            if next[s as usize].is_some() || has_incoming[t as usize] {
                return outside("host is not a linear chain");
            }
            next[s as usize] = Some((e, t));
            has_incoming[t as usize] = true;
        }
        let start = (0..points).find(|&p| !has_incoming[p]);
        let Some(mut at) = start else {
            return outside("host is not a linear chain");
        };
        let mut point_pos = vec![u32::MAX; points];
        let mut edge_from = vec![u32::MAX; edges];
        let mut i = 0;
        loop {
            point_pos[at] = i;
            match next[at] {
                Some((e, t)) => {
                    edge_from[e as usize] = i;
                    at = t as usize;
                    i += 1;
                }
                None => break,
            }
        }
        if i as usize + 1 != points {
            return outside("host is not connected");
        }
        Ok(Chain { component, point_pos, edge_from })
    }

    pub fn len(&self) -> usize {
        self.point_pos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.point_pos.is_empty()
    }
}

/// Strict normal form of `u`, a term over `host`.
pub fn strict_normalize(u: &Term, host: &Tree) -> Result<StrictNf, StrictError> {
    let chain = Chain::of(host)?;
    eval(u, &chain)
}

/// Equality of strict normal forms.
pub fn strict_equal(u: &Term, v: &Term, host: &Tree) -> Result<bool, StrictError> {
    let chain = Chain::of(host)?;
    Ok(eval(u, &chain)? == eval(v, &chain)?)
}

fn eval(u: &Term, chain: &Chain) -> Result<StrictNf, StrictError> {
    if u.dim() > 2 {
        return outside(format!("term of dimension {}", u.dim()));
    }
    match u.node() {
        Node::Gen(c) => {
            if c.component != chain.component {
                return outside("generator from another component");
            }
            let plain = |at| Endpoint { side: SideTag::Plain, at };
            match c.dim {
                0 => Ok(StrictNf::Point(plain(chain.point_pos[c.id as usize]))),
                1 => {
                    let from = chain.edge_from[c.id as usize];
                    Ok(StrictNf::Path { from: plain(from), to: plain(from + 1) })
                }
                _ => outside("generator above dimension 1"),
            }
        }
        Node::Transport { series, arg } => eval(arg, chain)?.retag(*series),
        Node::Mid { kind, point } => {
            if *kind != MidKind::Xi {
                return outside("alpha/beta cells");
            }
            let StrictNf::Point(e) = eval(point, chain)? else {
                return outside("middle cell on a non-point");
            };
            Ok(StrictNf::Path {
                from: Endpoint { side: SideTag::F, at: e.at },
                to: Endpoint { side: SideTag::G, at: e.at },
            })
        }
        Node::Comp { p, after, before } => {
            let (a, b) = (eval(after, chain)?, eval(before, chain)?);
            match (u.dim(), *p, a, b) {
                (1, 0, StrictNf::Path { from: mid, to }, StrictNf::Path { from, to: mid2 }) => {
                    if mid != mid2 {
                        return outside("composite with mismatched endpoints");
                    }
                    Ok(StrictNf::Path { from, to })
                }
                (2, 1, StrictNf::Identity(x), StrictNf::Identity(y)) => {
                    if x != y {
                        return outside("vertical composite of different identities");
                    }
                    Ok(StrictNf::Identity(x))
                }
                (2, 0, StrictNf::Identity(x), StrictNf::Identity(y)) => match (*x, *y) {
                    (StrictNf::Path { from: mid, to }, StrictNf::Path { from, to: mid2 })
                        if mid == mid2 =>
                    {
                        Ok(StrictNf::Identity(Box::new(StrictNf::Path { from, to })))
                    }
                    _ => outside("horizontal composite with mismatched endpoints"),
                },
                _ => outside("composite outside the fragment"),
            }
        }
        Node::Coh { .. } => {
            let s = eval(&u.source().expect("positive dimension"), chain)?;
            let t = eval(&u.target().expect("positive dimension"), chain)?;
            if s != t {
                return outside(format!("coherence cell between {s} and {t}"));
            }
            if u.dim() != 2 {
                return outside("coherence cell of dimension other than 2");
            }
            Ok(StrictNf::Identity(Box::new(s)))
        }
    }
}
