//! Keys, sparse integer linear combinations and tensors of them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Number, Value};

use crate::error::{Error, Result};
use crate::trees::{BiLeveledTree, Composition, Permutation, PlanarTree, Tree};

/// The four graded families: permutations, planar binary trees, bi-leveled
/// trees and compositions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    S,
    Y,
    M,
    Q,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::S => "S",
            Family::Y => "Y",
            Family::M => "M",
            Family::Q => "Q",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "S" | "s" => Ok(Family::S),
            "Y" | "y" => Ok(Family::Y),
            "M" | "m" => Ok(Family::M),
            "Q" | "q" => Ok(Family::Q),
            other => Err(Error::parse(other, "unknown family, expected S, Y, M or Q")),
        }
    }
}

/// Fundamental (`F`) or monomial (`M`) basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    F,
    M,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::F => "F",
            Basis::M => "M",
        })
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "F" | "f" => Ok(Basis::F),
            "M" | "m" => Ok(Basis::M),
            other => Err(Error::parse(other, "unknown basis, expected F or M")),
        }
    }
}

/// An object of one of the families, used to index basis elements.
///
/// Degree-0 units: the empty permutation (written ``""``), the leaf (written
/// `1`), the adjoined unit of bi-leveled trees (`1`) and the empty
/// composition (`1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Key {
    S(Permutation),
    Y(PlanarTree),
    M(BiLeveledTree),
    Q(Composition),
}

impl Key {
    pub fn parse(family: Family, text: &str) -> Result<Key> {
        let text = text.trim();
        Ok(match family {
            Family::S => Key::S(text.parse()?),
            Family::Y if text == "1" => Key::Y(Tree::Leaf),
            Family::Y => Key::Y(Tree::parse_canonical(text)?),
            Family::M => Key::M(BiLeveledTree::parse_with_unit(text)?),
            Family::Q => Key::Q(text.parse()?),
        })
    }

    pub fn unit(family: Family) -> Key {
        match family {
            Family::S => Key::S(Permutation::default()),
            Family::Y => Key::Y(Tree::Leaf),
            Family::M => Key::M(BiLeveledTree::unit()),
            Family::Q => Key::Q(Composition::default()),
        }
    }

    pub fn family(&self) -> Family {
        match self {
            Key::S(_) => Family::S,
            Key::Y(_) => Family::Y,
            Key::M(_) => Family::M,
            Key::Q(_) => Family::Q,
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Key::S(w) => w.len(),
            Key::Y(t) => t.len(),
            Key::M(b) => b.len(),
            Key::Q(c) => c.weight(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.degree() == 0
    }

    fn family_error(expected: Family, found: &Key) -> Error {
        Error::Family {
            expected: expected.to_string(),
            found: found.family().to_string(),
        }
    }

    pub fn as_s(&self) -> Result<&Permutation> {
        match self {
            Key::S(w) => Ok(w),
            other => Err(Self::family_error(Family::S, other)),
        }
    }

    pub fn as_y(&self) -> Result<&PlanarTree> {
        match self {
            Key::Y(t) => Ok(t),
            other => Err(Self::family_error(Family::Y, other)),
        }
    }

    pub fn as_m(&self) -> Result<&BiLeveledTree> {
        match self {
            Key::M(b) => Ok(b),
            other => Err(Self::family_error(Family::M, other)),
        }
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Key::S(w) => w.fmt(f),
            Key::Y(Tree::Leaf) => f.write_str("1"),
            Key::Y(t) => t.fmt(f),
            Key::M(b) => b.fmt(f),
            Key::Q(c) => c.fmt(f),
        }
    }
}

impl From<Permutation> for Key {
    fn from(w: Permutation) -> Key {
        Key::S(w)
    }
}

impl From<PlanarTree> for Key {
    fn from(t: PlanarTree) -> Key {
        Key::Y(t)
    }
}

impl From<BiLeveledTree> for Key {
    fn from(b: BiLeveledTree) -> Key {
        Key::M(b)
    }
}

impl From<Composition> for Key {
    fn from(c: Composition) -> Key {
        Key::Q(c)
    }
}

fn accumulate<K: Ord>(terms: &mut BTreeMap<K, BigInt>, key: K, coef: BigInt) {
    if coef.is_zero() {
        return;
    }
    let slot = terms.entry(key);
    match slot {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(coef);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += coef;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn coef_to_json(c: &BigInt) -> Value {
    Value::Number(Number::from_str(&c.to_string()).expect("integers are JSON numbers"))
}

fn coef_from_json(v: &Value) -> Result<BigInt> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => {
            return Err(Error::parse(
                v.to_string(),
                "coefficient must be an integer",
            ))
        }
    };
    text.parse()
        .map_err(|_| Error::parse(text.clone(), "coefficient must be an integer"))
}

fn field<'a>(obj: &'a Map<String, Value>, name: &str) -> Result<&'a Value> {
    obj.get(name).ok_or_else(|| {
        Error::parse(
            Value::Object(obj.clone()).to_string(),
            format!("missing field {name:?}"),
        )
    })
}

fn str_field<'a>(obj: &'a Map<String, Value>, name: &str) -> Result<&'a str> {
    field(obj, name)?
        .as_str()
        .ok_or_else(|| Error::parse(name, "expected a string"))
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, coef: &BigInt, body: &str) -> fmt::Result {
    let sign = if coef.is_negative() { "-" } else { "+" };
    match (first, coef.is_negative()) {
        (true, false) => {}
        (true, true) => f.write_str("-")?,
        (false, _) => write!(f, " {sign} ")?,
    }
    let mag = coef.abs();
    if mag.is_one() {
        f.write_str(body)
    } else if body == "1" {
        write!(f, "{mag}")
    } else {
        write!(f, "{mag} {body}")
    }
}

fn basis_symbol(basis: Basis, key: &Key) -> String {
    if key.is_unit() {
        "1".to_string()
    } else {
        format!("{basis}[{key}]")
    }
}

/// A finitely supported integer combination of basis elements of one family
/// in one basis. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCombo {
    family: Family,
    basis: Basis,
    terms: BTreeMap<Key, BigInt>,
}

impl LinearCombo {
    pub fn zero(family: Family, basis: Basis) -> Self {
        LinearCombo {
            family,
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_element(basis: Basis, key: Key) -> Self {
        let mut out = Self::zero(key.family(), basis);
        out.terms.insert(key, BigInt::one());
        out
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Key, BigInt> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Key, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coefficient(&self, key: &Key) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, key: Key, coef: impl Into<BigInt>) -> Result<()> {
        if key.family() != self.family {
            return Err(Key::family_error(self.family, &key));
        }
        self.push(key, coef.into());
        Ok(())
    }

    pub(crate) fn push(&mut self, key: Key, coef: BigInt) {
        debug_assert_eq!(key.family(), self.family);
        accumulate(&mut self.terms, key, coef);
    }

    /// `self + factor · other`.
    pub fn add_scaled(&mut self, other: &LinearCombo, factor: &BigInt) -> Result<()> {
        if (other.family, other.basis) != (self.family, self.basis) {
            return Err(Error::Family {
                expected: format!("{}/{}", self.family, self.basis),
                found: format!("{}/{}", other.family, other.basis),
            });
        }
        for (k, c) in &other.terms {
            accumulate(&mut self.terms, k.clone(), c * factor);
        }
        Ok(())
    }

    pub fn add(&self, other: &LinearCombo) -> Result<LinearCombo> {
        let mut out = self.clone();
        out.add_scaled(other, &BigInt::one())?;
        Ok(out)
    }

    pub fn sub(&self, other: &LinearCombo) -> Result<LinearCombo> {
        let mut out = self.clone();
        out.add_scaled(other, &-BigInt::one())?;
        Ok(out)
    }

    pub fn scale(&self, factor: &BigInt) -> LinearCombo {
        let mut out = Self::zero(self.family, self.basis);
        for (k, c) in &self.terms {
            accumulate(&mut out.terms, k.clone(), c * factor);
        }
        out
    }

    /// Extends `f`, given on basis keys, linearly.
    pub fn linear_map(
        &self,
        family: Family,
        basis: Basis,
        mut f: impl FnMut(&Key) -> Result<LinearCombo>,
    ) -> Result<LinearCombo> {
        let mut out = Self::zero(family, basis);
        for (k, c) in &self.terms {
            out.add_scaled(&f(k)?, c)?;
        }
        Ok(out)
    }

    /// Extends `f`, given on pairs of basis keys, bilinearly.
    pub fn bilinear(
        &self,
        other: &LinearCombo,
        family: Family,
        basis: Basis,
        mut f: impl FnMut(&Key, &Key) -> Result<LinearCombo>,
    ) -> Result<LinearCombo> {
        let mut out = Self::zero(family, basis);
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                out.add_scaled(&f(x, y)?, &(a * b))?;
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let terms: Map<String, Value> = self
            .terms
            .iter()
            .map(|(k, c)| (k.to_string(), coef_to_json(c)))
            .collect();
        let mut obj = Map::new();
        obj.insert("family".into(), Value::String(self.family.to_string()));
        obj.insert("basis".into(), Value::String(self.basis.to_string()));
        obj.insert("terms".into(), Value::Object(terms));
        Value::Object(obj)
    }

    pub fn from_json(value: &Value) -> Result<LinearCombo> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::parse(value.to_string(), "expected a JSON object"))?;
        let family: Family = str_field(obj, "family")?.parse()?;
        let basis: Basis = str_field(obj, "basis")?.parse()?;
        let terms = field(obj, "terms")?
            .as_object()
            .ok_or_else(|| Error::parse("terms", "expected an object of key: coefficient"))?;
        let mut out = Self::zero(family, basis);
        for (k, c) in terms {
            out.push(Key::parse(family, k)?, coef_from_json(c)?);
        }
        Ok(out)
    }
}

impl fmt::Display for LinearCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            write_term(f, i == 0, c, &basis_symbol(self.basis, k))?;
        }
        Ok(())
    }
}

/// A finitely supported integer combination of tensors `x ⊗ y`, with the
/// left and right factors drawn from fixed families and a common basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorCombo {
    left: Family,
    right: Family,
    basis: Basis,
    terms: BTreeMap<(Key, Key), BigInt>,
}

impl TensorCombo {
    pub fn zero(left: Family, right: Family, basis: Basis) -> Self {
        TensorCombo {
            left,
            right,
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn families(&self) -> (Family, Family) {
        (self.left, self.right)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<(Key, Key), BigInt> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Key, Key), &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coefficient(&self, left: &Key, right: &Key) -> BigInt {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn add_term(&mut self, left: Key, right: Key, coef: impl Into<BigInt>) -> Result<()> {
        if left.family() != self.left {
            return Err(Key::family_error(self.left, &left));
        }
        if right.family() != self.right {
            return Err(Key::family_error(self.right, &right));
        }
        self.push(left, right, coef.into());
        Ok(())
    }

    pub(crate) fn push(&mut self, left: Key, right: Key, coef: BigInt) {
        debug_assert_eq!((left.family(), right.family()), (self.left, self.right));
        accumulate(&mut self.terms, (left, right), coef);
    }

    fn check_shape(&self, other: &TensorCombo) -> Result<()> {
        if (self.left, self.right, self.basis) != (other.left, other.right, other.basis) {
            return Err(Error::Family {
                expected: format!("{}⊗{}/{}", self.left, self.right, self.basis),
                found: format!("{}⊗{}/{}", other.left, other.right, other.basis),
            });
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, other: &TensorCombo, factor: &BigInt) -> Result<()> {
        self.check_shape(other)?;
        for (k, c) in &other.terms {
            accumulate(&mut self.terms, k.clone(), c * factor);
        }
        Ok(())
    }

    /// The tensor product of two combinations.
    pub fn tensor(x: &LinearCombo, y: &LinearCombo) -> Result<TensorCombo> {
        if x.basis != y.basis {
            return Err(Error::Family {
                expected: format!("basis {}", x.basis),
                found: format!("basis {}", y.basis),
            });
        }
        let mut out = Self::zero(x.family, y.family, x.basis);
        for (a, c) in &x.terms {
            for (b, d) in &y.terms {
                out.push(a.clone(), b.clone(), c * d);
            }
        }
        Ok(out)
    }

    /// Applies `f ⊗ g`, both given on basis keys.
    pub fn map_factors(
        &self,
        left: (Family, Basis),
        right: (Family, Basis),
        mut f: impl FnMut(&Key) -> Result<LinearCombo>,
        mut g: impl FnMut(&Key) -> Result<LinearCombo>,
    ) -> Result<TensorCombo> {
        if left.1 != right.1 {
            return Err(Error::Family {
                expected: format!("basis {}", left.1),
                found: format!("basis {}", right.1),
            });
        }
        let mut out = Self::zero(left.0, right.0, left.1);
        for ((a, b), c) in &self.terms {
            let fa = f(a)?;
            let gb = g(b)?;
            out.add_scaled(&Self::tensor(&fa, &gb)?, c)?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|((a, b), c)| {
                let mut t = Map::new();
                t.insert("left".into(), Value::String(a.to_string()));
                t.insert("right".into(), Value::String(b.to_string()));
                t.insert("coef".into(), coef_to_json(c));
                Value::Object(t)
            })
            .collect();
        let mut obj = Map::new();
        obj.insert("left_family".into(), Value::String(self.left.to_string()));
        obj.insert("right_family".into(), Value::String(self.right.to_string()));
        obj.insert("basis".into(), Value::String(self.basis.to_string()));
        obj.insert("terms".into(), Value::Array(terms));
        Value::Object(obj)
    }

    pub fn from_json(value: &Value) -> Result<TensorCombo> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::parse(value.to_string(), "expected a JSON object"))?;
        let left: Family = str_field(obj, "left_family")?.parse()?;
        let right: Family = str_field(obj, "right_family")?.parse()?;
        let basis: Basis = str_field(obj, "basis")?.parse()?;
        let terms = field(obj, "terms")?
            .as_array()
            .ok_or_else(|| Error::parse("terms", "expected an array"))?;
        let mut out = Self::zero(left, right, basis);
        for term in terms {
            let t = term
                .as_object()
                .ok_or_else(|| Error::parse(term.to_string(), "expected a term object"))?;
            out.push(
                Key::parse(left, str_field(t, "left")?)?,
                Key::parse(right, str_field(t, "right")?)?,
                coef_from_json(field(t, "coef")?)?,
            );
        }
        Ok(out)
    }
}

impl fmt::Display for TensorCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            let body = format!(
                "{} ⊗ {}",
                basis_symbol(self.basis, a),
                basis_symbol(self.basis, b)
            );
            write_term(f, i == 0, c, &body)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_round_trip() {
        for (family, text) in [
            (Family::S, "3142"),
            (Family::S, ""),
            (Family::Y, "((..).)"),
            (Family::Y, "1"),
            (Family::M, "{{..}.}"),
            (Family::M, "1"),
            (Family::Q, "(2,3)"),
            (Family::Q, "1"),
        ] {
            let key = Key::parse(family, text).unwrap();
            assert_eq!(key.to_string(), text);
            assert_eq!(key.family(), family);
        }
        assert!(Key::parse(Family::S, "1 2").is_err());
        assert!(Key::parse(Family::M, "{..}").is_ok());
        assert!(Key::parse(Family::M, "(..)").is_err());
    }

    #[test]
    fn zero_coefficients_vanish() {
        let k = Key::parse(Family::S, "21").unwrap();
        let mut x = LinearCombo::zero(Family::S, Basis::F);
        x.add_term(k.clone(), 2).unwrap();
        x.add_term(k.clone(), -2).unwrap();
        assert!(x.is_zero());
        assert_eq!(x.to_string(), "0");
        assert!(x.add_term(Key::unit(Family::Y), 1).is_err());
    }

    #[test]
    fn display_and_json() {
        let mut x = LinearCombo::zero(Family::S, Basis::F);
        x.add_term(Key::parse(Family::S, "12").unwrap(), 1).unwrap();
        x.add_term(Key::parse(Family::S, "21").unwrap(), -3)
            .unwrap();
        x.add_term(Key::unit(Family::S), 2).unwrap();
        assert_eq!(x.to_string(), "2 + F[12] - 3 F[21]");
        let json = x.to_json();
        assert_eq!(
            json.to_string(),
            r#"{"family":"S","basis":"F","terms":{"":2,"12":1,"21":-3}}"#
        );
        assert_eq!(LinearCombo::from_json(&json).unwrap(), x);

        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let y = x.scale(&big);
        assert_eq!(LinearCombo::from_json(&y.to_json()).unwrap(), y);

        let t = TensorCombo::tensor(&x, &x).unwrap();
        assert_eq!(t.len(), 9);
        assert_eq!(TensorCombo::from_json(&t.to_json()).unwrap(), t);
    }
}
