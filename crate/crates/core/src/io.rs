//! Text format for algebras with attached representation, corepresentation
//! and deformation blocks.
//!
//! ```text
//! field q            # or: field p 1009
//! dim 2
//! left 0 0 1 1       # e_0 ⊣ e_0 = 1·e_1
//! rep m1
//!   dim 1
//!   l_left 0 0 0 1   # e_0 ⊣ x_0 = x_0
//! end
//! corep n1
//!   dim 1
//!   alpha_l 0 0 0 1  # x_0 · α_l(e_0) = x_0
//! end
//! deformation t1
//!   order 1
//!   theta 1 lambda 0 0 1 1
//! end
//! ```
//! Omitted entries are zero; `#` starts a comment.

use num_bigint::BigInt;

use crate::algebra::{Corepresentation, Gen, Op, Representation, Tensor3, TriasAlgebra};
use crate::deform::{Deformation, TwoCochainTriple};
use crate::error::{Error, Result};
use crate::linalg::{parse_ratio, Field, PrimeField, Rationals};
use crate::uea::Uea;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// `q` or `p:<prime>`, as accepted on the command line.
    pub fn parse_flag(text: &str) -> Result<Self> {
        match text.split_once(':') {
            None if text == "q" => Ok(Self::Rationals),
            Some(("p", p)) => {
                let p: u64 = p.parse().map_err(|_| Error::InvalidField(format!("bad prime `{p}`")))?;
                PrimeField::new(p)?;
                Ok(Self::Prime(p))
            }
            _ => Err(Error::InvalidField(format!("expected `q` or `p:<prime>`, got `{text}`"))),
        }
    }
}

/// Everything a file describes, over a chosen field.
#[derive(Clone, Debug)]
pub struct Document<K: Field> {
    pub algebra: TriasAlgebra<K>,
    pub reps: Vec<(String, Representation<K>)>,
    pub coreps: Vec<(String, Corepresentation<K>)>,
    pub deformations: Vec<(String, Deformation<K>)>,
}

impl<K: Field> Document<K> {
    pub fn rep(&self, name: &str) -> Option<&Representation<K>> {
        self.reps.iter().find(|(n, _)| n == name).map(|(_, r)| r)
    }

    pub fn corep(&self, name: &str) -> Option<&Corepresentation<K>> {
        self.coreps.iter().find(|(n, _)| n == name).map(|(_, r)| r)
    }

    pub fn deformation(&self, name: &str) -> Option<&Deformation<K>> {
        self.deformations.iter().find(|(n, _)| n == name).map(|(_, r)| r)
    }

    /// A named representation: `adjoint`, `zero:<m>` or a block of the file,
    /// checked against the algebra.
    pub fn resolve_rep(&self, name: &str) -> Result<Representation<K>> {
        let alg = &self.algebra;
        let rep = if name == "adjoint" {
            Representation::adjoint(alg)
        } else if let Some(m) = name.strip_prefix("zero:") {
            let m = m.parse().map_err(|_| Error::Validation(format!("bad dimension in `{name}`")))?;
            Representation::zero(alg.field().clone(), alg.dim(), m)
        } else {
            self.rep(name).cloned().ok_or_else(|| Error::Validation(format!("no representation named `{name}`")))?
        };
        if let Some((axiom, slot)) = rep_failures(alg, &rep)?.first() {
            return Err(Error::Validation(format!("representation `{name}` violates axiom ({axiom}) with the module element in slot {slot}")));
        }
        Ok(rep)
    }

    /// A named corepresentation: `trivial`, `ua`, `zero:<m>`, `op:<rep>` or a
    /// block of the file, checked against the algebra.
    pub fn resolve_corep(&self, name: &str) -> Result<Corepresentation<K>> {
        let alg = &self.algebra;
        let corep = if name == "trivial" {
            Corepresentation::trivial(alg.field().clone(), alg.dim())
        } else if name == "ua" {
            Uea::new(alg)?.as_corepresentation()?
        } else if let Some(m) = name.strip_prefix("zero:") {
            let m = m.parse().map_err(|_| Error::Validation(format!("bad dimension in `{name}`")))?;
            Corepresentation::zero(alg.field().clone(), alg.dim(), m)
        } else if let Some(rep) = name.strip_prefix("op:") {
            Corepresentation::opposite(&self.resolve_rep(rep)?)
        } else {
            self.corep(name).cloned().ok_or_else(|| Error::Validation(format!("no corepresentation named `{name}`")))?
        };
        if let Some(r) = corep_failures(alg, &corep)?.first() {
            return Err(Error::Validation(format!("corepresentation `{name}` violates relation ({r})")));
        }
        Ok(corep)
    }
}

/// Distinct `(axiom, slot)` pairs that `rep` violates.
pub fn rep_failures<K: Field>(alg: &TriasAlgebra<K>, rep: &Representation<K>) -> Result<Vec<(usize, usize)>> {
    let mut bad = Vec::new();
    for v in rep.check(alg)? {
        if !bad.contains(&(v.axiom, v.slot)) {
            bad.push((v.axiom, v.slot));
        }
    }
    Ok(bad)
}

/// Distinct relation numbers that `corep` violates.
pub fn corep_failures<K: Field>(alg: &TriasAlgebra<K>, corep: &Corepresentation<K>) -> Result<Vec<usize>> {
    let mut bad = Vec::new();
    for v in corep.check(alg)? {
        if !bad.contains(&v.relation) {
            bad.push(v.relation);
        }
    }
    Ok(bad)
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let body = l.split('#').next().unwrap_or("");
        let words: Vec<&str> = body.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

/// The field named in the header, or `ℚ` when there is none.
pub fn header_field(text: &str) -> Result<FieldSpec> {
    for (line, words) in lines(text) {
        if words[0] == "field" {
            return match words[1..] {
                ["q"] => Ok(FieldSpec::Rationals),
                ["p", p] => {
                    let p: u64 = p.parse().map_err(|_| parse_err(line, format!("bad prime `{p}`")))?;
                    PrimeField::new(p).map_err(|e| parse_err(line, e.to_string()))?;
                    Ok(FieldSpec::Prime(p))
                }
                _ => Err(parse_err(line, "expected `field q` or `field p <prime>`")),
            };
        }
    }
    Ok(FieldSpec::Rationals)
}

enum Block {
    Top,
    Rep { name: String, start: usize, dim: Option<usize>, entries: Vec<(usize, Vec<String>)> },
    Corep { name: String, start: usize, dim: Option<usize>, entries: Vec<(usize, Vec<String>)> },
    Deform { name: String, start: usize, order: Option<usize>, entries: Vec<(usize, Vec<String>)> },
}

struct Reader<'a, K: Field> {
    field: &'a K,
}

impl<K: Field> Reader<'_, K> {
    fn index(&self, line: usize, word: &str, bound: usize) -> Result<usize> {
        let i: usize = word.parse().map_err(|_| parse_err(line, format!("bad index `{word}`")))?;
        if i >= bound {
            return Err(parse_err(line, format!("index {i} out of range (size {bound})")));
        }
        Ok(i)
    }

    fn scalar(&self, line: usize, word: &str) -> Result<K::Elem> {
        let (n, d): (BigInt, BigInt) = parse_ratio(word).ok_or_else(|| parse_err(line, format!("bad coefficient `{word}`")))?;
        self.field.from_ratio(&n, &d).ok_or_else(|| parse_err(line, format!("coefficient `{word}` is undefined in {}", self.field.tag())))
    }

    /// `i j k c` into a tensor of the given shape.
    fn entry(&self, line: usize, args: &[String], t: &mut Tensor3<K::Elem>) -> Result<()> {
        let [i, j, k, c] = args else {
            return Err(parse_err(line, "expected four fields `i j k c`"));
        };
        let [a, b, m] = t.dims();
        let (i, j, k) = (self.index(line, i, a)?, self.index(line, j, b)?, self.index(line, k, m)?);
        let c = self.scalar(line, c)?;
        t.set(i, j, k, c);
        Ok(())
    }
}

fn count(line: usize, words: &[&str], what: &str) -> Result<usize> {
    match words {
        [_, n] => n.parse().map_err(|_| parse_err(line, format!("bad {what} `{n}`"))),
        _ => Err(parse_err(line, format!("expected `{what} <n>`"))),
    }
}

fn op_keyword(word: &str) -> Option<Op> {
    Op::ALL.into_iter().find(|op| op.keyword() == word)
}

/// Parses a document over `field`, ignoring the header's field choice.
pub fn parse_document<K: Field>(text: &str, field: &K) -> Result<Document<K>> {
    let reader = Reader { field };
    let mut dim = None;
    let mut pending_products = Vec::new();
    let mut block = Block::Top;
    let mut raw_reps = Vec::new();
    let mut raw_coreps = Vec::new();
    let mut raw_defs = Vec::new();
    let owned = |w: &[&str]| w.iter().map(|s| s.to_string()).collect::<Vec<_>>();

    for (line, words) in lines(text) {
        let head = words[0];
        match &mut block {
            Block::Top => match head {
                "field" => {}
                "dim" => {
                    if dim.is_some() {
                        return Err(parse_err(line, "duplicate `dim`"));
                    }
                    dim = Some(count(line, &words, "dim")?);
                }
                "rep" | "corep" | "deformation" => {
                    let [_, name] = words[..] else {
                        return Err(parse_err(line, format!("expected `{head} <name>`")));
                    };
                    let name = name.to_string();
                    block = match head {
                        "rep" => Block::Rep { name, start: line, dim: None, entries: Vec::new() },
                        "corep" => Block::Corep { name, start: line, dim: None, entries: Vec::new() },
                        _ => Block::Deform { name, start: line, order: None, entries: Vec::new() },
                    };
                }
                w if op_keyword(w).is_some() => pending_products.push((line, owned(&words))),
                w => return Err(parse_err(line, format!("unknown keyword `{w}`"))),
            },
            Block::Rep { dim: bdim, entries, .. } | Block::Corep { dim: bdim, entries, .. } => match head {
                "dim" => *bdim = Some(count(line, &words, "dim")?),
                "end" => {
                    match std::mem::replace(&mut block, Block::Top) {
                        Block::Rep { name, start, dim, entries } => raw_reps.push((name, start, dim, entries)),
                        Block::Corep { name, start, dim, entries } => raw_coreps.push((name, start, dim, entries)),
                        _ => unreachable!(),
                    };
                }
                _ => entries.push((line, owned(&words))),
            },
            Block::Deform { order, entries, .. } => match head {
                "order" => *order = Some(count(line, &words, "order")?),
                "end" => {
                    if let Block::Deform { name, start, order, entries } = std::mem::replace(&mut block, Block::Top) {
                        raw_defs.push((name, start, order, entries));
                    }
                }
                _ => entries.push((line, owned(&words))),
            },
        }
    }
    match block {
        Block::Top => {}
        Block::Rep { start, .. } | Block::Corep { start, .. } | Block::Deform { start, .. } => {
            return Err(parse_err(start, "block is missing `end`"));
        }
    }
    let d = dim.ok_or_else(|| parse_err(0, "missing `dim`"))?;
    let mut prods = Op::ALL.map(|_| Tensor3::zeros(field, [d, d, d]));
    for (line, words) in pending_products {
        let op = op_keyword(&words[0]).expect("filtered above");
        reader.entry(line, &words[1..], &mut prods[op.index()])?;
    }
    let algebra = TriasAlgebra::new(field.clone(), d, prods)?;

    let mut reps = Vec::new();
    for (name, start, m, entries) in raw_reps {
        let m = m.ok_or_else(|| parse_err(start, format!("rep `{name}` has no `dim`")))?;
        let mut left = Op::ALL.map(|_| Tensor3::zeros(field, [d, m, m]));
        let mut right = Op::ALL.map(|_| Tensor3::zeros(field, [m, d, m]));
        for (line, words) in entries {
            let (side, op) = words[0].split_once('_').ok_or_else(|| parse_err(line, format!("unknown action `{}`", words[0])))?;
            let op = op_keyword(op).ok_or_else(|| parse_err(line, format!("unknown action `{}`", words[0])))?;
            match side {
                "l" => reader.entry(line, &words[1..], &mut left[op.index()])?,
                "r" => reader.entry(line, &words[1..], &mut right[op.index()])?,
                _ => return Err(parse_err(line, format!("unknown action `{}`", words[0]))),
            }
        }
        reps.push((name, Representation::new(field.clone(), d, m, left, right)?));
    }

    let mut coreps = Vec::new();
    for (name, start, m, entries) in raw_coreps {
        let m = m.ok_or_else(|| parse_err(start, format!("corep `{name}` has no `dim`")))?;
        let mut actions = Gen::ALL.map(|_| Tensor3::zeros(field, [m, d, m]));
        for (line, words) in entries {
            let g = Gen::from_keyword(&words[0]).ok_or_else(|| parse_err(line, format!("unknown generator `{}`", words[0])))?;
            reader.entry(line, &words[1..], &mut actions[g.index()])?;
        }
        coreps.push((name, Corepresentation::new(field.clone(), d, m, actions)?));
    }

    let mut deformations = Vec::new();
    for (name, start, order, entries) in raw_defs {
        let n = order.ok_or_else(|| parse_err(start, format!("deformation `{name}` has no `order`")))?;
        let mut thetas = vec![TwoCochainTriple::zeros(field.clone(), d, d); n];
        for (line, words) in entries {
            let ["theta", j, part, rest @ ..] = &words.iter().map(String::as_str).collect::<Vec<_>>()[..] else {
                return Err(parse_err(line, "expected `theta <j> lambda|rho|mu i j k c`"));
            };
            let j: usize = j.parse().map_err(|_| parse_err(line, format!("bad order `{j}`")))?;
            if j == 0 || j > n {
                return Err(parse_err(line, format!("term {j} outside 1..={n}")));
            }
            let op = match *part {
                "lambda" => Op::Left,
                "rho" => Op::Right,
                "mu" => Op::Middle,
                other => return Err(parse_err(line, format!("unknown component `{other}`"))),
            };
            let rest: Vec<String> = rest.iter().map(|s| s.to_string()).collect();
            reader.entry(line, &rest, thetas[j - 1].part_mut(op))?;
        }
        deformations.push((name, Deformation::new(&algebra, thetas)?));
    }

    for names in [reps.iter().map(|r| &r.0).collect::<Vec<_>>(), coreps.iter().map(|r| &r.0).collect(), deformations.iter().map(|r| &r.0).collect()] {
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::Validation(format!("duplicate block name `{n}`")));
            }
        }
    }
    Ok(Document { algebra, reps, coreps, deformations })
}

/// Parses with the header's field.
pub fn parse_rationals(text: &str) -> Result<Document<Rationals>> {
    parse_document(text, &Rationals)
}

/// Serializes an algebra's products in the file format.
pub fn write_algebra<K: Field>(alg: &TriasAlgebra<K>) -> String {
    let f = alg.field();
    let mut out = String::new();
    match f.tag().strip_prefix("p:") {
        Some(p) => out.push_str(&format!("field p {p}\n")),
        None => out.push_str("field q\n"),
    }
    out.push_str(&format!("dim {}\n", alg.dim()));
    for op in Op::ALL {
        let t = alg.product(op);
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                for k in 0..alg.dim() {
                    let v = t.get(i, j, k);
                    if !f.is_zero(v) {
                        out.push_str(&format!("{} {i} {j} {k} {}\n", op.keyword(), f.format(v)));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn roundtrip_and_blocks() {
        let a = fixtures::phi2(Rationals);
        let mut text = write_algebra(&a);
        text.push_str("rep c\n dim 1\n l_left 0 0 0 1\n l_right 0 0 0 1\n l_middle 0 0 0 1\n r_left 0 0 0 1\n r_right 0 0 0 1\n r_middle 0 0 0 1\nend\n");
        text.push_str("corep t\n dim 1\nend\n");
        text.push_str("deformation z\n order 2\n theta 2 mu 1 1 0 1/2\nend\n");
        let doc = parse_rationals(&text).unwrap();
        assert_eq!(doc.algebra, a);
        assert_eq!(doc.rep("c").unwrap(), &fixtures::character(&a, &[1, 0]));
        assert!(doc.corep("t").unwrap().is_zero());
        assert_eq!(doc.deformation("z").unwrap().order(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_rationals("field q\ndim 2\nleft 0 0 2 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        let e = parse_rationals("dim 1\nrep m\n dim 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        let e = parse_rationals("dim 1\nbogus 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_document("dim 1\nleft 0 0 0 1/7\n", &PrimeField::new(7).unwrap()).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn header_and_flag_fields() {
        assert_eq!(header_field("# x\nfield p 1009\ndim 1").unwrap(), FieldSpec::Prime(1009));
        assert_eq!(header_field("dim 1").unwrap(), FieldSpec::Rationals);
        assert!(header_field("field p 1000\n").is_err());
        assert_eq!(FieldSpec::parse_flag("p:7").unwrap(), FieldSpec::Prime(7));
        assert!(FieldSpec::parse_flag("p:8").is_err());
        assert!(FieldSpec::parse_flag("r").is_err());
    }
}
