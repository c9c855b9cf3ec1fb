//! Recursive descent over the token stream.

use super::ast::{
    ARef, ArrowBody, Assertion, Decl, DeclKind, DomSpec, MidSpec, ObjKind, ObjSpec, TermExpr,
};
use super::lexer::{tokenize, SourcePos, Tok, Token};
use super::SurfaceError;

pub struct Parser {
    toks: Vec<Token>,
    at: usize,
}

type PResult<T> = Result<T, SurfaceError>;

impl Parser {
    pub fn new(file: &str, text: &str) -> PResult<Parser> {
        Ok(Parser { toks: tokenize(file, text)?, at: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.at + k).min(self.toks.len() - 1)].tok
    }

    fn pos(&self) -> SourcePos {
        self.toks[self.at].pos.clone()
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, what: &str) -> PResult<T> {
        Err(SurfaceError::syntax(self.pos(), format!("expected {what}, found {}", self.peek())))
    }

    fn expect(&mut self, tok: Tok) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(&tok.to_string())
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> PResult<(String, SourcePos)> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                let pos = self.pos();
                self.bump();
                Ok((s, pos))
            }
            _ => self.fail("an identifier"),
        }
    }

    fn keyword(&mut self, word: &str) -> PResult<()> {
        match self.peek() {
            Tok::Ident(s) if s == word => {
                self.bump();
                Ok(())
            }
            _ => self.fail(&format!("`{word}`")),
        }
    }

    fn int(&mut self) -> PResult<u32> {
        match *self.peek() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.fail("an integer"),
        }
    }

    pub fn at_end(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    pub fn file(&mut self) -> PResult<Vec<Decl>> {
        let mut out = Vec::new();
        while !self.at_end() {
            out.push(self.decl()?);
        }
        Ok(out)
    }

    pub fn decl(&mut self) -> PResult<Decl> {
        let pos = self.pos();
        let (word, _) = self.ident()?;
        let kind = match word.as_str() {
            "context" => {
                self.keyword("n")?;
                self.expect(Tok::Eq)?;
                DeclKind::Context { n: self.int()? }
            }
            "tree" => {
                let (name, _) = self.ident()?;
                let cells = if self.eat(&Tok::LParen) {
                    let groups = self.name_groups()?;
                    self.expect(Tok::RParen)?;
                    Some(groups)
                } else {
                    None
                };
                self.expect(Tok::Eq)?;
                let (columns, glues) = self.table()?;
                DeclKind::Tree { name, cells, columns, glues }
            }
            "arrow" => {
                let (name, _) = self.ident()?;
                self.expect(Tok::Colon)?;
                let dom = match self.obj_spec_opt()? {
                    Some(o) => DomSpec::Disc(o),
                    None => {
                        let (name, pos) = self.ident()?;
                        DomSpec::Tree { name, pos }
                    }
                };
                self.expect(Tok::Arrow)?;
                let (cod, _) = self.ident()?;
                self.expect(Tok::Eq)?;
                let body = if *self.peek() == Tok::LBrace {
                    ArrowBody::Assign(self.named_terms()?)
                } else {
                    ArrowBody::Top(self.term()?)
                };
                DeclKind::Arrow { name, dom, cod, body }
            }
            "coh" => {
                let (name, _) = self.ident()?;
                self.expect(Tok::Eq)?;
                self.expect(Tok::LParen)?;
                let f = self.term()?;
                self.expect(Tok::Comma)?;
                let g = self.term()?;
                self.expect(Tok::RParen)?;
                self.keyword("over")?;
                let (over, _) = self.ident()?;
                DeclKind::Coh { name, f, g, over }
            }
            "assert" => {
                let negated = matches!(self.peek(), Tok::Ident(s) if s == "not");
                if negated {
                    self.bump();
                }
                DeclKind::Assert { negated, assertion: self.assertion()? }
            }
            other => {
                return Err(SurfaceError::syntax(
                    pos,
                    format!("expected a declaration, found `{other}`"),
                ))
            }
        };
        Ok(Decl { kind, pos })
    }

    fn name_groups(&mut self) -> PResult<Vec<Vec<String>>> {
        let mut groups = vec![Vec::new()];
        loop {
            match self.peek() {
                Tok::Ident(_) => {
                    let (n, _) = self.ident()?;
                    groups.last_mut().expect("nonempty").push(n);
                    if !self.eat(&Tok::Comma) && !matches!(self.peek(), Tok::Semi | Tok::RParen) {
                        return self.fail("`,`, `;` or `)`");
                    }
                }
                Tok::Semi => {
                    self.bump();
                    groups.push(Vec::new());
                }
                _ => return Ok(groups),
            }
        }
    }

    /// `[ obj, ... ( ; obj, ... )? ]`
    pub fn table(&mut self) -> PResult<(Vec<ObjSpec>, Vec<ObjSpec>)> {
        self.expect(Tok::LBracket)?;
        let columns = self.obj_list()?;
        let glues = if self.eat(&Tok::Semi) { self.obj_list()? } else { Vec::new() };
        self.expect(Tok::RBracket)?;
        Ok((columns, glues))
    }

    fn obj_list(&mut self) -> PResult<Vec<ObjSpec>> {
        let mut out = Vec::new();
        loop {
            match self.obj_spec_opt()? {
                Some(o) => out.push(o),
                None => return self.fail("an object keyword"),
            }
            if !self.eat(&Tok::Comma) {
                return Ok(out);
            }
        }
    }

    fn obj_spec_opt(&mut self) -> PResult<Option<ObjSpec>> {
        let Tok::Ident(word) = self.peek().clone() else {
            return Ok(None);
        };
        let pos = self.pos();
        let Some((kind, index)) = ObjSpec::split_keyword(&word) else {
            return Ok(None);
        };
        match (kind, index) {
            (ObjKind::Xi, _) => {
                self.bump();
                Ok(Some(ObjSpec { kind, index: None, pos }))
            }
            (_, Some(i)) => {
                self.bump();
                Ok(Some(ObjSpec { kind, index: Some(i), pos }))
            }
            (_, None) if *self.peek_at(1) == Tok::LParen => {
                self.bump();
                self.bump();
                let i = self.int()?;
                self.expect(Tok::RParen)?;
                Ok(Some(ObjSpec { kind, index: Some(i), pos }))
            }
            _ => Ok(None),
        }
    }

    fn named_terms(&mut self) -> PResult<Vec<(String, TermExpr)>> {
        self.expect(Tok::LBrace)?;
        let mut out = Vec::new();
        if self.eat(&Tok::RBrace) {
            return Ok(out);
        }
        loop {
            let (name, _) = self.ident()?;
            self.expect(Tok::Colon)?;
            out.push((name, self.term()?));
            if !self.eat(&Tok::Comma) {
                break;
            }
        }
        self.expect(Tok::RBrace)?;
        Ok(out)
    }

    fn braced_ints(&mut self, count: usize) -> PResult<Vec<u32>> {
        self.expect(Tok::LBrace)?;
        let mut out = vec![self.int()?];
        while out.len() < count {
            self.expect(Tok::Comma)?;
            out.push(self.int()?);
        }
        self.expect(Tok::RBrace)?;
        Ok(out)
    }

    fn paren_term(&mut self) -> PResult<TermExpr> {
        self.expect(Tok::LParen)?;
        let t = self.term()?;
        self.expect(Tok::RParen)?;
        Ok(t)
    }

    pub fn term(&mut self) -> PResult<TermExpr> {
        let (word, pos) = self.ident()?;
        let call = matches!(self.peek(), Tok::LParen | Tok::LBrace | Tok::LBracket);
        if !call {
            return Ok(TermExpr::Name { name: word, pos });
        }
        match word.as_str() {
            "gen" => {
                self.expect(Tok::LParen)?;
                let (name, _) = self.ident()?;
                self.expect(Tok::RParen)?;
                Ok(TermExpr::Gen { name, pos })
            }
            "comp" => {
                let mp = self.braced_ints(2)?;
                self.expect(Tok::LParen)?;
                let after = Box::new(self.term()?);
                self.expect(Tok::Comma)?;
                let before = Box::new(self.term()?);
                self.expect(Tok::RParen)?;
                Ok(TermExpr::Comp { m: mp[0], p: mp[1], after, before, pos })
            }
            "F" | "G" => {
                let series = word.chars().next().expect("nonempty");
                Ok(TermExpr::Transport { series, arg: Box::new(self.paren_term()?), pos })
            }
            "xi" => Ok(TermExpr::Mid { kind: MidSpec::Xi, point: Box::new(self.paren_term()?), pos }),
            "alpha" | "beta" => {
                let k = self.braced_ints(1)?[0];
                let kind = if word == "alpha" { MidSpec::Alpha(k) } else { MidSpec::Beta(k) };
                Ok(TermExpr::Mid { kind, point: Box::new(self.paren_term()?), pos })
            }
            "coh" => {
                self.expect(Tok::LBracket)?;
                let (name, _) = self.ident()?;
                self.expect(Tok::RBracket)?;
                Ok(TermExpr::Coh { name, args: self.named_terms()?, pos })
            }
            other => Err(SurfaceError::syntax(pos, format!("unknown term former `{other}`"))),
        }
    }

    fn aref(&mut self) -> PResult<ARef> {
        let (word, pos) = self.ident()?;
        if *self.peek() == Tok::LParen && (word == "src" || word == "tgt") {
            self.bump();
            let inner = Box::new(self.aref()?);
            self.expect(Tok::RParen)?;
            return Ok(if word == "src" { ARef::Src(inner) } else { ARef::Tgt(inner) });
        }
        Ok(ARef::Name { name: word, pos })
    }

    fn two_refs(&mut self) -> PResult<(ARef, ARef)> {
        self.expect(Tok::LParen)?;
        let a = self.aref()?;
        self.expect(Tok::Comma)?;
        let b = self.aref()?;
        self.expect(Tok::RParen)?;
        Ok((a, b))
    }

    fn assertion(&mut self) -> PResult<Assertion> {
        let (word, pos) = self.ident()?;
        Ok(match word.as_str() {
            "parallel" => {
                let (a, b) = self.two_refs()?;
                Assertion::Parallel(a, b)
            }
            "arity_eq" => {
                let (a, b) = self.two_refs()?;
                Assertion::ArityEq(a, b)
            }
            "admissible" => {
                let (a, b) = self.two_refs()?;
                Assertion::Admissible(a, b)
            }
            "strict_eq" => {
                let (a, b) = self.two_refs()?;
                Assertion::StrictEq(a, b)
            }
            "model_eq" => {
                let p = self.braced_ints(1)?[0];
                let (left, right) = self.two_refs()?;
                Assertion::ModelEq { p, left, right }
            }
            "stage" | "dim" => {
                self.expect(Tok::LParen)?;
                let a = self.aref()?;
                self.expect(Tok::RParen)?;
                self.expect(Tok::Eq)?;
                let k = self.int()?;
                if word == "stage" {
                    Assertion::Stage(a, k)
                } else {
                    Assertion::Dim(a, k)
                }
            }
            other => {
                return Err(SurfaceError::syntax(pos, format!("unknown assertion `{other}`")))
            }
        })
    }
}

/// Parses a whole file.
pub fn parse(file: &str, text: &str) -> Result<Vec<Decl>, SurfaceError> {
    Parser::new(file, text)?.file()
}

/// Parses a single term, requiring the input to end after it.
pub fn parse_term(file: &str, text: &str) -> Result<TermExpr, SurfaceError> {
    let mut p = Parser::new(file, text)?;
    let t = p.term()?;
    if !p.at_end() {
        return p.fail("end of input");
    }
    Ok(t)
}

/// Parses a bare table `[ ... ; ... ]`.
pub fn parse_table(file: &str, text: &str) -> Result<(Vec<ObjSpec>, Vec<ObjSpec>), SurfaceError> {
    let mut p = Parser::new(file, text)?;
    let t = p.table()?;
    if !p.at_end() {
        return p.fail("end of input");
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_and_tree() {
        let d = parse("t", "context n=2\ntree T = [ g1, g1, xi ; g0, g0 ]").unwrap();
        assert_eq!(d[0].kind, DeclKind::Context { n: 2 });
        let DeclKind::Tree { columns, glues, cells, .. } = &d[1].kind else { panic!() };
        assert_eq!(columns.len(), 3);
        assert_eq!(glues[0].keyword(), "g0");
        assert!(cells.is_none());
        assert_eq!(d[1].pos.line, 2);
    }

    #[test]
    fn cell_names_and_paren_objects() {
        let d = parse("t", "tree T(x, y; a) = [g(1)]").unwrap();
        let DeclKind::Tree { cells, columns, .. } = &d[0].kind else { panic!() };
        assert_eq!(cells.as_ref().unwrap(), &vec![vec!["x".to_string(), "y".into()], vec!["a".into()]]);
        assert_eq!(columns[0].keyword(), "g1");
    }

    #[test]
    fn coh_decl() {
        let d = parse(
            "t",
            "coh omega = ( comp{1,0}(G(a), xi(x)) , comp{1,0}(xi(y), F(a)) ) over T1",
        )
        .unwrap();
        let DeclKind::Coh { name, over, f, .. } = &d[0].kind else { panic!() };
        assert_eq!((name.as_str(), over.as_str()), ("omega", "T1"));
        assert!(matches!(f, TermExpr::Comp { m: 1, p: 0, .. }));
    }

    #[test]
    fn assertions() {
        let d = parse("t", "assert not parallel(src(F1), H1)\nassert stage(X) = 2").unwrap();
        let DeclKind::Assert { negated, assertion } = &d[0].kind else { panic!() };
        assert!(*negated);
        assert!(matches!(assertion, Assertion::Parallel(ARef::Src(_), ARef::Name { .. })));
        assert!(matches!(&d[1].kind, DeclKind::Assert { assertion: Assertion::Stage(_, 2), .. }));
    }

    #[test]
    fn syntax_errors_have_positions() {
        let e = parse("t", "context n=2\ntree T = [g1 g0]").unwrap_err();
        assert!(matches!(e, SurfaceError::Syntax { .. }));
        assert_eq!((e.pos().line, e.pos().column), (2, 14));
        assert!(parse("t", "frob x").is_err());
    }
}
