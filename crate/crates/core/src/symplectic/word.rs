use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{is_primitive, transvection, Sign, SymplecticError, SymplecticMatrix};

/// A simple closed curve on the fiber, identified by its homology class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Curve {
    /// `a_i`, 1-based.
    A(usize),
    /// `b_i`, 1-based.
    B(usize),
    /// Chain curve `c_i` with class `a_i − a_{i+1}`, 1-based, `i < h`.
    C(usize),
    /// An explicit primitive class in the standard basis.
    Class(Vec<BigInt>),
}

impl Curve {
    pub fn class(&self, h: usize) -> Result<Vec<BigInt>, SymplecticError> {
        if h == 0 {
            return Err(SymplecticError::GenusZero);
        }
        let unit = |k: usize| {
            let mut v = vec![BigInt::zero(); 2 * h];
            v[k] = BigInt::one();
            v
        };
        let out_of_range = || SymplecticError::CurveIndex {
            name: self.to_string(),
            genus: h,
        };
        match *self {
            Curve::A(i) if (1..=h).contains(&i) => Ok(unit(2 * (i - 1))),
            Curve::B(i) if (1..=h).contains(&i) => Ok(unit(2 * i - 1)),
            Curve::C(i) if (1..h).contains(&i) => {
                let mut v = unit(2 * (i - 1));
                v[2 * i] = -BigInt::one();
                Ok(v)
            }
            Curve::Class(ref c) => {
                if c.len() != 2 * h {
                    return Err(SymplecticError::VectorLength {
                        expected: 2 * h,
                        found: c.len(),
                    });
                }
                if !is_primitive(c) {
                    return Err(SymplecticError::NonPrimitive(c.clone()));
                }
                Ok(c.clone())
            }
            _ => Err(out_of_range()),
        }
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Curve::A(i) => write!(f, "a{i}"),
            Curve::B(i) => write!(f, "b{i}"),
            Curve::C(i) => write!(f, "c{i}"),
            Curve::Class(c) => {
                write!(f, "(")?;
                for (k, x) in c.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl FromStr for Curve {
    type Err = SymplecticError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || SymplecticError::UnknownCurve(s.to_string());
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(unknown)?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
            return Err(unknown());
        }
        let index: usize = digits.parse().map_err(|_| unknown())?;
        match kind {
            'a' => Ok(Curve::A(index)),
            'b' => Ok(Curve::B(index)),
            'c' => Ok(Curve::C(index)),
            _ => Err(unknown()),
        }
    }
}

/// Homology class of a named curve (`a1`, `b2`, `c1`, ...) on a genus-`h` fiber.
pub fn named_curve_class(name: &str, h: usize) -> Result<Vec<BigInt>, SymplecticError> {
    name.parse::<Curve>()?.class(h)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwistLetter {
    pub curve: Curve,
    pub inverse: bool,
}

impl TwistLetter {
    pub fn sign(&self) -> Sign {
        if self.inverse {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl fmt::Display for TwistLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.curve)?;
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

impl FromStr for TwistLetter {
    type Err = SymplecticError;

    /// Grammar: `T<curve>` or `T<curve>^-1`, curve one of `a<i>`, `b<i>`, `c<i>`.
    fn from_str(token: &str) -> Result<Self, Self::Err> {
        let syntax = |reason| SymplecticError::Syntax {
            token: token.to_string(),
            reason,
        };
        let body = token
            .strip_prefix('T')
            .ok_or_else(|| syntax("letters start with 'T'"))?;
        let (name, inverse) = match body.split_once('^') {
            None => (body, false),
            Some((name, "-1")) => (name, true),
            Some(_) => return Err(syntax("the only exponent is ^-1")),
        };
        let curve = name
            .parse::<Curve>()
            .map_err(|_| syntax("curve must be a<i>, b<i> or c<i> with i >= 1"))?;
        Ok(TwistLetter { curve, inverse })
    }
}

/// A word in Dehn twists; the leftmost letter acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TwistWord {
    pub letters: Vec<TwistLetter>,
}

impl TwistWord {
    pub fn new(letters: Vec<TwistLetter>) -> Self {
        TwistWord { letters }
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// `M_last ··· M_first`: the matrix of the composite mapping class.
    pub fn evaluate(&self, h: usize) -> Result<SymplecticMatrix, SymplecticError> {
        if h == 0 {
            return Err(SymplecticError::GenusZero);
        }
        self.letters
            .iter()
            .try_fold(SymplecticMatrix::identity(h), |acc, letter| {
                let t = transvection(&letter.curve.class(h)?, letter.sign(), h)?;
                Ok(t.compose(&acc))
            })
    }

    pub fn concat(&self, other: &TwistWord) -> TwistWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        TwistWord { letters }
    }

    pub fn inverse(&self) -> TwistWord {
        TwistWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| TwistLetter {
                    curve: l.curve.clone(),
                    inverse: !l.inverse,
                })
                .collect(),
        }
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for TwistWord {
    type Err = SymplecticError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()
            .map(TwistWord::new)
    }
}
