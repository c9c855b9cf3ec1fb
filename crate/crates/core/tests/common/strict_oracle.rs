//! Strict equality of 1-dimensional terms over a chain by word rewriting.
//!
//! A term flattens to a word of letters in diagrammatic order. The only
//! rule is naturality, `xi(x) ; G(a)  ->  F(a) ; xi(y)`, applied until no
//! redex is left; functoriality and associativity are built into the
//! flattening.

use gwt_core::coherator::enumerate_terms;
use gwt_core::globe::GlobeContext;
use gwt_core::pasting::{CellRef, Tree};
use gwt_core::strictify::strict_equal;
use gwt_core::surface::parse_tree_table;
use gwt_core::term::{MidKind, Node, Series, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    Plain(CellRef),
    F(CellRef),
    G(CellRef),
    Xi(CellRef),
}

fn flatten(u: &Term, tag: Option<Series>, out: &mut Vec<Letter>) -> Option<()> {
    match u.node() {
        Node::Gen(c) if c.dim == 1 => {
            out.push(match tag {
                None => Letter::Plain(*c),
                Some(Series::F) => Letter::F(*c),
                Some(Series::G) => Letter::G(*c),
            });
            Some(())
        }
        Node::Transport { series, arg } if tag.is_none() => flatten(arg, Some(*series), out),
        Node::Mid { kind: MidKind::Xi, point } if tag.is_none() => {
            out.push(Letter::Xi(point.as_gen()?));
            Some(())
        }
        Node::Comp { p: 0, after, before } if u.dim() == 1 => {
            flatten(before, tag, out)?;
            flatten(after, tag, out)
        }
        _ => None,
    }
}

/// Normal word of a 1-dimensional term, or `None` outside the oracle's reach.
pub fn normal_word(u: &Term, host: &Tree) -> Option<Vec<Letter>> {
    let mut w = Vec::new();
    flatten(u, None, &mut w)?;
    let r = host.realization();
    loop {
        let redex = w.windows(2).position(|p| matches!(p, [Letter::Xi(_), Letter::G(_)]));
        let Some(i) = redex else { break };
        let Letter::G(a) = w[i + 1] else { unreachable!() };
        w[i] = Letter::F(a);
        w[i + 1] = Letter::Xi(r.target(a)?);
    }
    Some(w)
}

pub fn chain_hosts() -> Vec<Tree> {
    let ctx = GlobeContext::new(2);
    [
        "[xi]",
        "[f1]",
        "[g1, xi ; g0]",
        "[xi, f1 ; f0]",
        "[f1, f1 ; f0]",
        "[xi, f1, f1 ; f0, f0]",
        "[g1, xi, f1 ; g0, f0]",
        "[g1, g1, xi ; g0, g0]",
        "[two1, two1 ; two0]",
    ]
    .iter()
    .map(|t| parse_tree_table(ctx, t).unwrap())
    .collect()
}

/// Pairs of 1-dimensional terms on which the two deciders disagree.
pub fn disagreements(host: &Tree, max_size: usize) -> Vec<String> {
    let terms: Vec<_> = enumerate_terms(host, max_size, 1, &[])
        .into_iter()
        .filter(|t| t.dim() == 1)
        .collect();
    let words: Vec<_> = terms.iter().map(|t| normal_word(t, host).expect("in reach")).collect();
    let mut bad = Vec::new();
    for (i, u) in terms.iter().enumerate() {
        for (j, v) in terms.iter().enumerate() {
            if u.source() != v.source() || u.target() != v.target() {
                continue;
            }
            let strict = strict_equal(u, v, host).expect("fragment");
            if strict != (words[i] == words[j]) {
                bad.push(format!("{host}: {u} vs {v}"));
            }
        }
    }
    bad
}
