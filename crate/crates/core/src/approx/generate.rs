use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::products::{product, ProductKind};
use crate::skeleton::classical_strong_pfd;

/// Path `P_n` on `0..n` plus vertex `n` joined to the middle path edge
/// `(i, i + 1)` with `i = (n - 2) / 2`.
pub fn path_with_triangle(n: usize) -> Graph {
    assert!(n >= 2, "a triangle needs a path edge");
    let mut g = Graph::path(n);
    g.add_vertex();
    let i = (n - 2) / 2;
    g.add_edge(i, n);
    g.add_edge(i + 1, n);
    g
}

/// Builds a graph from a small expression language:
///
/// ```text
/// path(n)  cycle(n)  complete(n)  star(n)  path_with_triangle(n) | ptri(n)
/// product(strong | cartesian, [g, ...])  strong(g, ...)  cartesian(g, ...)
/// random(n, p[, seed])     connected G(n, p), resampled until connected
/// random_prime(n[, seed])  connected graph on n vertices that is strong-prime
/// ```
///
/// Random generators without an explicit seed use seed 0; see
/// [`generate_seeded`].
///
/// ```
/// use spfd::approx::generate;
/// let g = generate("strong(path(3), cycle(4))").unwrap();
/// assert_eq!((g.n(), g.m()), (12, 2 * 4 + 3 * 4 + 2 * 2 * 4));
/// ```
pub fn generate(spec: &str) -> Result<Graph> {
    generate_seeded(spec, 0)
}

/// Like [`generate`], with `seed` for random generators that name none.
pub fn generate_seeded(spec: &str, seed: u64) -> Result<Graph> {
    let tokens = tokenize(spec)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        seed,
    };
    let v = p.value()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Spec(format!(
            "trailing input after `{}`",
            p.tokens[p.pos - 1]
        )));
    }
    match v {
        Value::Graph(g) => Ok(g),
        _ => Err(Error::Spec("expression does not describe a graph".into())),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Ident(String),
    Number(String),
    Open,
    Close,
    OpenList,
    CloseList,
    Comma,
}

impl std::fmt::Display for Token {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Token::Ident(s) | Token::Number(s) => f.write_str(s),
            Token::Open => f.write_str("("),
            Token::Close => f.write_str(")"),
            Token::OpenList => f.write_str("["),
            Token::CloseList => f.write_str("]"),
            Token::Comma => f.write_str(","),
        }
    }
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' | ')' | '[' | ']' | ',' => {
                chars.next();
                out.push(match c {
                    '(' => Token::Open,
                    ')' => Token::Close,
                    '[' => Token::OpenList,
                    ']' => Token::CloseList,
                    _ => Token::Comma,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut word = String::new();
                while let Some(&c) = chars
                    .peek()
                    .filter(|c| c.is_ascii_alphanumeric() || **c == '_')
                {
                    word.push(c);
                    chars.next();
                }
                out.push(Token::Ident(word));
            }
            c if c.is_ascii_digit() || c == '.' => {
                let mut num = String::new();
                while let Some(&c) = chars.peek().filter(|c| c.is_ascii_digit() || **c == '.') {
                    num.push(c);
                    chars.next();
                }
                out.push(Token::Number(num));
            }
            other => return Err(Error::Spec(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

enum Value {
    Number(String),
    Word(String),
    Graph(Graph),
    List(Vec<Value>),
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    seed: u64,
}

impl Parser {
    fn next(&mut self) -> Result<Token> {
        let t = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Spec("unexpected end of input".into()))?;
        self.pos += 1;
        Ok(t)
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn value(&mut self) -> Result<Value> {
        match self.next()? {
            Token::Number(n) => Ok(Value::Number(n)),
            Token::OpenList => Ok(Value::List(self.items(Token::CloseList)?)),
            Token::Ident(name) => {
                if self.peek() != Some(&Token::Open) {
                    return Ok(Value::Word(name));
                }
                self.pos += 1;
                let args = self.items(Token::Close)?;
                call(&name, args, self.seed).map(Value::Graph)
            }
            other => Err(Error::Spec(format!("unexpected `{other}`"))),
        }
    }

    fn items(&mut self, close: Token) -> Result<Vec<Value>> {
        let mut out = Vec::new();
        if self.peek() == Some(&close) {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(self.value()?);
            match self.next()? {
                Token::Comma => continue,
                t if t == close => return Ok(out),
                other => {
                    return Err(Error::Spec(format!(
                        "expected `,` or `{close}`, found `{other}`"
                    )))
                }
            }
        }
    }
}

fn call(name: &str, args: Vec<Value>, seed: u64) -> Result<Graph> {
    let arity = |k: usize| {
        if args.len() == k {
            Ok(())
        } else {
            Err(Error::Spec(format!(
                "{name} takes {k} argument(s), got {}",
                args.len()
            )))
        }
    };
    let seed_at = |i: usize| -> Result<u64> {
        match args.get(i) {
            Some(v) if args.len() == i + 1 => Ok(count(v)? as u64),
            None if args.len() == i => Ok(seed),
            _ => Err(Error::Spec(format!(
                "{name} takes {i} or {} arguments",
                i + 1
            ))),
        }
    };
    match name {
        "path" | "cycle" | "complete" | "star" | "path_with_triangle" | "ptri" => {
            arity(1)?;
            let n = count(&args[0])?;
            let min = match name {
                "cycle" => 3,
                "path_with_triangle" | "ptri" | "star" => 2,
                _ => 1,
            };
            if n < min {
                return Err(Error::Spec(format!("{name} needs at least {min} vertices")));
            }
            Ok(match name {
                "path" => Graph::path(n),
                "cycle" => Graph::cycle(n),
                "complete" => Graph::complete(n),
                "star" => Graph::from_edges(n, (1..n).map(|v| (0, v))),
                _ => path_with_triangle(n),
            })
        }
        "product" => {
            arity(2)?;
            let kind = match &args[0] {
                Value::Word(w) => kind(w)?,
                _ => {
                    return Err(Error::Spec(
                        "product kind must be `strong` or `cartesian`".into(),
                    ))
                }
            };
            let Value::List(items) = &args[1] else {
                return Err(Error::Spec("product factors must be a list".into()));
            };
            let factors = items.iter().map(graph).collect::<Result<Vec<_>>>()?;
            build(&factors, kind)
        }
        "strong" | "cartesian" | "cart" => {
            let factors = args.iter().map(graph).collect::<Result<Vec<_>>>()?;
            build(&factors, kind(name)?)
        }
        "random" => {
            let seed = seed_at(2)?;
            let n = count(&args[0])?;
            let p = number(&args[1])?;
            if !(0.0..=1.0).contains(&p) || n == 0 {
                return Err(Error::Spec(
                    "random(n, p, seed) needs n >= 1 and 0 <= p <= 1".into(),
                ));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            random_connected(n, p, &mut rng)
                .ok_or_else(|| Error::Spec(format!("no connected sample for random({n}, {p})")))
        }
        "random_prime" => {
            let seed = seed_at(1)?;
            let n = count(&args[0])?;
            if n < 2 {
                return Err(Error::Spec("random_prime needs at least 2 vertices".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..1000 {
                let p = rng.gen_range(0.2..0.8);
                if let Some(g) = random_connected(n, p, &mut rng) {
                    if classical_strong_pfd(&g)?.is_prime() {
                        return Ok(g);
                    }
                }
            }
            Err(Error::Spec(format!(
                "no prime sample found on {n} vertices"
            )))
        }
        other => Err(Error::Spec(format!("unknown generator `{other}`"))),
    }
}

fn kind(word: &str) -> Result<ProductKind> {
    match word {
        "strong" => Ok(ProductKind::Strong),
        "cartesian" | "cart" => Ok(ProductKind::Cartesian),
        other => Err(Error::Spec(format!("unknown product kind `{other}`"))),
    }
}

fn build(factors: &[Graph], kind: ProductKind) -> Result<Graph> {
    if factors.is_empty() {
        return Err(Error::Spec("a product needs at least one factor".into()));
    }
    Ok(product(factors, kind)?.0)
}

fn graph(v: &Value) -> Result<Graph> {
    match v {
        Value::Graph(g) => Ok(g.clone()),
        _ => Err(Error::Spec("expected a graph".into())),
    }
}

fn count(v: &Value) -> Result<usize> {
    match v {
        Value::Number(s) => s
            .parse()
            .map_err(|_| Error::Spec(format!("`{s}` is not a count"))),
        _ => Err(Error::Spec("expected a number".into())),
    }
}

fn number(v: &Value) -> Result<f64> {
    match v {
        Value::Number(s) => s
            .parse()
            .map_err(|_| Error::Spec(format!("`{s}` is not a number"))),
        _ => Err(Error::Spec("expected a number".into())),
    }
}

fn random_connected(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Option<Graph> {
    for _ in 0..1000 {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        if g.is_connected() {
            return Some(g);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::isomorphic;
    use crate::products::strong_product;

    #[test]
    fn examples() {
        assert!(generate("path(5)").unwrap().same_structure(&Graph::path(5)));
        let grid = generate("product(strong, [path(3), path(3)])").unwrap();
        let want = strong_product(&[Graph::path(3), Graph::path(3)]).unwrap().0;
        assert!(grid.same_structure(&want));
        let t = generate("path_with_triangle(7)").unwrap();
        assert_eq!((t.n(), t.m()), (8, 8));
        assert!(t.has_edge(2, 7) && t.has_edge(3, 7));
        assert!(isomorphic(&generate("ptri(7)").unwrap(), &t).is_some());
    }

    #[test]
    fn random_is_seeded() {
        let a = generate("random(8, 0.3, 5)").unwrap();
        assert_eq!(a, generate("random(8, 0.3, 5)").unwrap());
        assert!(a.is_connected());
        assert_eq!(generate_seeded("random(8, 0.3)", 5).unwrap(), a);
        let p = generate("random_prime(6, 2)").unwrap();
        assert!(classical_strong_pfd(&p).unwrap().is_prime());
    }

    #[test]
    fn malformed() {
        for bad in [
            "",
            "path(",
            "path(3",
            "path(3))",
            "paths(3)",
            "cycle(2)",
            "strong()",
            "random(4, 2, 1)",
            "random(4)",
            "random_prime()",
            "path(x)",
            "path(3) path(3)",
            "product(tensor, [path(2)])",
        ] {
            assert!(matches!(generate(bad), Err(Error::Spec(_))), "{bad}");
        }
    }
}
