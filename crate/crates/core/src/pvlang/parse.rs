//! Parser for PV programs.
//!
//! ```text
//! program := {decl} {proc}
//! decl    := "res" NAME "=" INT ";"
//! proc    := "proc" ":" {action} ";"
//! action  := ("P" | "V") NAME
//! ```
//!
//! Whitespace is insignificant and `#` starts a comment running to the end of
//! the line. An action may be written `Pa` or `P a`.

use std::collections::BTreeMap;

use super::{Action, Op, PvError, PvProgram};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Punct(char),
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, PvError> {
    let mut out = Vec::new();
    for (l, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (line, col) = (l + 1, i + 1);
            if c == '#' {
                break;
            } else if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Spanned {
                    tok: Tok::Ident(chars[start..i].iter().collect()),
                    line,
                    col,
                });
            } else if c.is_ascii_digit() || c == '-' {
                let start = i;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Spanned {
                    tok: Tok::Int(chars[start..i].iter().collect()),
                    line,
                    col,
                });
            } else if matches!(c, '=' | ';' | ':') {
                out.push(Spanned {
                    tok: Tok::Punct(c),
                    line,
                    col,
                });
                i += 1;
            } else {
                return Err(PvError::Syntax {
                    line,
                    col,
                    message: format!("unexpected character {c:?}"),
                });
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map_or(self.end, |t| (t.line, t.col))
    }

    fn error(&self, message: impl Into<String>) -> PvError {
        let (line, col) = self.here();
        PvError::Syntax {
            line,
            col,
            message: message.into(),
        }
    }

    fn punct(&mut self, c: char) -> Result<(), PvError> {
        match self.peek() {
            Some(Spanned { tok: Tok::Punct(p), .. }) if *p == c => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error(format!("expected '{c}'"))),
        }
    }

    fn ident(&mut self, what: &str) -> Result<Spanned, PvError> {
        match self.peek() {
            Some(t @ Spanned { tok: Tok::Ident(_), .. }) => {
                let t = t.clone();
                self.pos += 1;
                Ok(t)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }
}

/// Parses and validates a PV program.
pub fn parse_pv(text: &str) -> Result<PvProgram, PvError> {
    let toks = lex(text)?;
    let lines = text.lines().count().max(1);
    let last_len = text.lines().last().map_or(0, |l| l.chars().count());
    let mut p = Parser {
        toks,
        pos: 0,
        end: (lines, last_len + 1),
    };
    let mut resources: BTreeMap<String, usize> = BTreeMap::new();
    let mut processes: Vec<Vec<Action>> = Vec::new();
    while let Some(t) = p.peek().cloned() {
        let Tok::Ident(kw) = &t.tok else {
            return Err(p.error("expected 'res' or 'proc'"));
        };
        match kw.as_str() {
            "res" => {
                if !processes.is_empty() {
                    return Err(p.error("resources must be declared before the first process"));
                }
                p.pos += 1;
                let name = p.ident("a resource name")?;
                let Tok::Ident(name_str) = name.tok else { unreachable!() };
                p.punct('=')?;
                let (line, col) = p.here();
                let cap = match p.peek().map(|t| t.tok.clone()) {
                    Some(Tok::Int(s)) => {
                        p.pos += 1;
                        s.parse::<usize>().ok().filter(|&c| c > 0).ok_or(PvError::BadCapacity {
                            line,
                            col,
                            text: s.clone(),
                        })?
                    }
                    _ => return Err(p.error("expected a capacity")),
                };
                p.punct(';')?;
                if resources.insert(name_str.clone(), cap).is_some() {
                    return Err(PvError::DuplicateResource {
                        line: name.line,
                        col: name.col,
                        name: name_str,
                    });
                }
            }
            "proc" => {
                let (pline, pcol) = (t.line, t.col);
                p.pos += 1;
                p.punct(':')?;
                let mut actions = Vec::new();
                loop {
                    match p.peek().map(|t| t.tok.clone()) {
                        Some(Tok::Punct(';')) => {
                            p.pos += 1;
                            break;
                        }
                        Some(Tok::Ident(word)) => {
                            let at = p.here();
                            p.pos += 1;
                            let (op, rest) = match word.split_at(1) {
                                ("P", rest) => (Op::P, rest.to_string()),
                                ("V", rest) => (Op::V, rest.to_string()),
                                _ => {
                                    return Err(PvError::Syntax {
                                        line: at.0,
                                        col: at.1,
                                        message: format!("expected an action P<name> or V<name>, found {word:?}"),
                                    })
                                }
                            };
                            let resource = if rest.is_empty() {
                                match p.ident("a resource name")?.tok {
                                    Tok::Ident(n) => n,
                                    _ => unreachable!(),
                                }
                            } else {
                                rest
                            };
                            if !resources.contains_key(&resource) {
                                return Err(PvError::UndeclaredResource {
                                    line: at.0,
                                    col: at.1,
                                    name: resource,
                                });
                            }
                            actions.push(Action {
                                op,
                                resource,
                                line: at.0,
                                col: at.1,
                            });
                        }
                        _ => return Err(p.error("expected an action or ';'")),
                    }
                }
                if actions.is_empty() {
                    return Err(PvError::EmptyProcess { line: pline, col: pcol });
                }
                processes.push(actions);
            }
            _ => return Err(p.error(format!("expected 'res' or 'proc', found {kw:?}"))),
        }
    }
    if processes.is_empty() {
        let (line, col) = p.end;
        return Err(PvError::NoProcesses { line, col });
    }
    let prog = PvProgram { resources, processes };
    prog.check_discipline()?;
    Ok(prog)
}
