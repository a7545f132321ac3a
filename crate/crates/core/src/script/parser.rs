//! Recursive-descent parser. Syntax errors stop the parse; resolution
//! errors (unknown names, bad arguments) are collected per statement.

use crate::catalog::GroupSelector;
use crate::symmetry::Side;

use super::ast::{Animation, ColorRule, FiberAxis, Program, Scalar, Scene, SweepUnit};
use super::lexer::{lex, Tok, Token};
use super::palette::Palette;
use super::{Diagnostic, Diagnostics, Pos};

#[derive(Debug, Clone, PartialEq)]
enum ExprKind {
    Call(String, Vec<Expr>),
    Number(f64),
    Str(String),
    Hex([u8; 3]),
    Ident(String),
}

#[derive(Debug, Clone, PartialEq)]
struct Expr {
    kind: ExprKind,
    pos: Pos,
}

impl Expr {
    fn describe(&self) -> String {
        match &self.kind {
            ExprKind::Call(name, _) => format!("call `{name}(..)`"),
            ExprKind::Number(n) => format!("number {n}"),
            ExprKind::Str(s) => format!("string {s:?}"),
            ExprKind::Hex(_) => "color literal".to_string(),
            ExprKind::Ident(s) => format!("`{s}`"),
        }
    }

    /// Bare identifiers and strings both name things.
    fn name(&self) -> Option<&str> {
        match &self.kind {
            ExprKind::Ident(s) | ExprKind::Str(s) => Some(s),
            _ => None,
        }
    }
}

const KEYS: [&str; 4] = ["group", "color", "animate", "brightness"];

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

type Syntax<T> = Result<T, Diagnostic>;

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Syntax<Pos> {
        let t = self.next();
        if t.tok == want {
            Ok(t.pos)
        } else {
            Err(Diagnostic::new(
                t.pos,
                format!("expected {what}, found {}", t.tok.describe()),
            ))
        }
    }

    fn keyword(&mut self, kw: &str) -> Syntax<Pos> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) if s == kw => Ok(t.pos),
            other => Err(Diagnostic::new(
                t.pos,
                format!("expected `{kw}`, found {}", other.describe()),
            )),
        }
    }

    fn expr(&mut self, depth: usize) -> Syntax<Expr> {
        let t = self.next();
        if depth > 64 {
            return Err(Diagnostic::new(t.pos, "expression nested too deeply"));
        }
        let kind = match t.tok {
            Tok::Number(n) => ExprKind::Number(n),
            Tok::Str(s) => ExprKind::Str(s),
            Tok::Hex(c) => ExprKind::Hex(c),
            Tok::Ident(name) => {
                if self.peek().tok == Tok::LParen {
                    self.next();
                    let mut args = Vec::new();
                    if self.peek().tok != Tok::RParen {
                        loop {
                            args.push(self.expr(depth + 1)?);
                            if self.peek().tok == Tok::Comma {
                                self.next();
                            } else {
                                break;
                            }
                        }
                    }
                    self.expect(Tok::RParen, "`,` or `)`")?;
                    ExprKind::Call(name, args)
                } else {
                    ExprKind::Ident(name)
                }
            }
            other => {
                return Err(Diagnostic::new(
                    t.pos,
                    format!("expected an expression, found {}", other.describe()),
                ))
            }
        };
        Ok(Expr { kind, pos: t.pos })
    }

    fn scene(&mut self, errors: &mut Vec<Diagnostic>) -> Syntax<Scene> {
        self.keyword("scene")?;
        let name_tok = self.next();
        let Tok::Str(name) = name_tok.tok else {
            return Err(Diagnostic::new(
                name_tok.pos,
                format!(
                    "expected scene name string, found {}",
                    name_tok.tok.describe()
                ),
            ));
        };
        self.keyword("duration")?;
        let dur_tok = self.next();
        let Tok::Number(duration) = dur_tok.tok else {
            return Err(Diagnostic::new(
                dur_tok.pos,
                format!(
                    "expected duration in seconds, found {}",
                    dur_tok.tok.describe()
                ),
            ));
        };
        self.keyword("s")?;
        if duration <= 0.0 {
            errors.push(Diagnostic::new(
                dur_tok.pos,
                format!("duration must be positive, got {duration}"),
            ));
        }
        let mut scene = Scene::new(&name, duration);
        self.expect(Tok::LBrace, "`{`")?;
        let mut seen: Vec<&str> = Vec::new();
        loop {
            let t = self.next();
            let key = match t.tok {
                Tok::RBrace => break,
                Tok::Ident(k) => k,
                other => {
                    return Err(Diagnostic::new(
                        t.pos,
                        format!("expected a key or `}}`, found {}", other.describe()),
                    ))
                }
            };
            self.expect(Tok::Eq, "`=`")?;
            let value = self.expr(0)?;
            self.expect(Tok::Semi, "`;`")?;
            let Some(&key) = KEYS.iter().find(|&&k| k == key) else {
                errors.push(Diagnostic::new(
                    t.pos,
                    format!("unknown key `{key}` (expected group, color, animate or brightness)"),
                ));
                continue;
            };
            if seen.contains(&key) {
                errors.push(Diagnostic::new(t.pos, format!("duplicate key `{key}`")));
                continue;
            }
            seen.push(key);
            let resolved = match key {
                "group" => group(&value).map(|g| scene.group = g),
                "color" => color(&value).map(|c| scene.color = c),
                "animate" => animation(&value).map(|a| scene.animate = a),
                _ => scalar(&value).map(|s| scene.brightness = s),
            };
            if let Err(d) = resolved {
                errors.push(d);
            }
        }
        Ok(scene)
    }
}

fn bad(e: &Expr, what: &str) -> Diagnostic {
    Diagnostic::new(e.pos, format!("expected {what}, found {}", e.describe()))
}

fn arity(e: &Expr, name: &str, args: &[Expr], n: usize) -> Result<(), Diagnostic> {
    if args.len() == n {
        Ok(())
    } else {
        Err(Diagnostic::new(
            e.pos,
            format!("`{name}` takes {n} argument(s), got {}", args.len()),
        ))
    }
}

fn number(e: &Expr) -> Result<f64, Diagnostic> {
    match e.kind {
        ExprKind::Number(n) => Ok(n),
        _ => Err(bad(e, "a number")),
    }
}

fn positive(e: &Expr) -> Result<f64, Diagnostic> {
    let n = number(e)?;
    if n > 0.0 {
        Ok(n)
    } else {
        Err(Diagnostic::new(
            e.pos,
            format!("expected a positive number, got {n}"),
        ))
    }
}

fn group(e: &Expr) -> Result<GroupSelector, Diagnostic> {
    let unknown = |what: String| Diagnostic::new(e.pos, format!("unknown group {what}"));
    match &e.kind {
        ExprKind::Ident(s) | ExprKind::Str(s) => {
            GroupSelector::resolve(s, None).ok_or_else(|| unknown(format!("`{s}`")))
        }
        ExprKind::Call(name, args) => {
            arity(e, name, args, 1)?;
            let k = number(&args[0])?;
            let arg = (k.fract() == 0.0 && k.abs() < 1e9).then_some(k as i64);
            GroupSelector::resolve(name, arg).ok_or_else(|| unknown(format!("`{name}({k})`")))
        }
        _ => Err(bad(e, "a group name")),
    }
}

fn palette(e: &Expr) -> Result<Palette, Diagnostic> {
    let ExprKind::Call(name, args) = &e.kind else {
        return Err(bad(e, "`palette(..)`"));
    };
    if name != "palette" {
        return Err(bad(e, "`palette(..)`"));
    }
    arity(e, name, args, 1)?;
    let p = args[0]
        .name()
        .ok_or_else(|| bad(&args[0], "a palette name"))?;
    Palette::by_name(p)
        .ok_or_else(|| Diagnostic::new(args[0].pos, format!("unknown palette `{p}`")))
}

fn color(e: &Expr) -> Result<ColorRule, Diagnostic> {
    match &e.kind {
        ExprKind::Hex(c) => Ok(ColorRule::Solid(*c)),
        ExprKind::Call(name, args) => match name.as_str() {
            "solid" => {
                arity(e, name, args, 1)?;
                match args[0].kind {
                    ExprKind::Hex(c) => Ok(ColorRule::Solid(c)),
                    _ => Err(bad(&args[0], "a color literal like #FFAA00")),
                }
            }
            "orbit" => {
                arity(e, name, args, 1)?;
                Ok(ColorRule::Orbit(palette(&args[0])?))
            }
            "hueshift" => match args.len() {
                1 => Ok(ColorRule::HueShift(
                    Box::new(ColorRule::Solid([255, 0, 0])),
                    scalar(&args[0])?,
                )),
                2 => Ok(ColorRule::HueShift(
                    Box::new(color(&args[0])?),
                    scalar(&args[1])?,
                )),
                n => Err(Diagnostic::new(
                    e.pos,
                    format!("`hueshift` takes 1 or 2 arguments, got {n}"),
                )),
            },
            _ => Err(Diagnostic::new(
                e.pos,
                format!("unknown color function `{name}` (expected solid, orbit or hueshift)"),
            )),
        },
        _ => Err(bad(e, "a color rule")),
    }
}

fn animation(e: &Expr) -> Result<Animation, Diagnostic> {
    match &e.kind {
        ExprKind::Ident(s) if s == "none" => Ok(Animation::None),
        ExprKind::Call(name, args) => match name.as_str() {
            "sweep" => {
                arity(e, name, args, 2)?;
                let unit = match args[0].name() {
                    Some("cells") => SweepUnit::Cells,
                    Some("cubes") => SweepUnit::Cubes,
                    Some("rings") => SweepUnit::Rings,
                    _ => return Err(bad(&args[0], "`cells`, `cubes` or `rings`")),
                };
                Ok(Animation::Sweep {
                    unit,
                    step: positive(&args[1])?,
                })
            }
            "slide" => {
                arity(e, name, args, 2)?;
                let f = &args[0];
                let fib_args = match &f.kind {
                    ExprKind::Call(n, a) if n == "fiber" => a,
                    _ => return Err(bad(f, "`fiber(axis, side)`")),
                };
                arity(f, "fiber", fib_args, 2)?;
                let axis = fib_args[0]
                    .name()
                    .and_then(FiberAxis::parse)
                    .ok_or_else(|| bad(&fib_args[0], "an axis `i`, `j`, `k` or `ijk`"))?;
                let side = match fib_args[1].name() {
                    Some("left") => Side::Left,
                    Some("right") => Side::Right,
                    _ => return Err(bad(&fib_args[1], "`left` or `right`")),
                };
                Ok(Animation::Slide {
                    axis,
                    side,
                    speed: number(&args[1])?,
                })
            }
            "pulse" => {
                arity(e, name, args, 1)?;
                Ok(Animation::Pulse {
                    period: positive(&args[0])?,
                })
            }
            _ => Err(Diagnostic::new(
                e.pos,
                format!("unknown animation `{name}` (expected sweep, slide or pulse)"),
            )),
        },
        _ => Err(bad(e, "an animation")),
    }
}

fn scalar(e: &Expr) -> Result<Scalar, Diagnostic> {
    match &e.kind {
        ExprKind::Number(n) => Ok(Scalar::Number(*n)),
        ExprKind::Ident(s) if s == "signal" => Ok(Scalar::Signal),
        ExprKind::Ident(s) => Err(Diagnostic::new(e.pos, format!("unknown name `{s}`"))),
        ExprKind::Call(name, args) => {
            let make: fn(Vec<Scalar>) -> Scalar = match name.as_str() {
                "mul" => Scalar::Mul,
                "add" => Scalar::Add,
                "min" => Scalar::Min,
                "max" => Scalar::Max,
                _ => {
                    return Err(Diagnostic::new(
                        e.pos,
                        format!("unknown function `{name}` (expected mul, add, min or max)"),
                    ))
                }
            };
            if args.len() < 2 {
                return Err(Diagnostic::new(
                    e.pos,
                    format!("`{name}` takes at least 2 arguments, got {}", args.len()),
                ));
            }
            let xs = args.iter().map(scalar).collect::<Result<_, _>>()?;
            Ok(make(xs))
        }
        _ => Err(bad(e, "a number, `signal` or a call")),
    }
}

pub fn parse(src: &str) -> Result<Program, Diagnostics> {
    let toks = lex(src).map_err(|d| Diagnostics(vec![d]))?;
    let mut p = Parser { toks, at: 0 };
    let mut errors = Vec::new();
    let mut scenes = Vec::new();
    while p.peek().tok != Tok::Eof {
        match p.scene(&mut errors) {
            Ok(s) => scenes.push(s),
            Err(d) => {
                errors.push(d);
                break;
            }
        }
    }
    if scenes.is_empty() && errors.is_empty() {
        errors.push(Diagnostic::new(p.peek().pos, "expected at least one scene"));
    }
    if errors.is_empty() {
        Ok(Program { scenes })
    } else {
        errors.sort_by_key(|d| d.pos);
        Err(Diagnostics(errors))
    }
}
