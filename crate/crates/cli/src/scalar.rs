//! Reading and writing exact scalars, and dispatch on the file's field descriptor.

use std::str::FromStr;

use homent::{Field, Fp, Rational};

pub trait Scalar: Field {
    fn parse(s: &str) -> Option<Self>;

    fn render(&self) -> String {
        self.to_string()
    }
}

impl Scalar for Rational {
    fn parse(s: &str) -> Option<Self> {
        Rational::from_str(s.trim()).ok()
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn parse(s: &str) -> Option<Self> {
        Fp::from_rational(&Rational::parse(s)?)
    }
}

/// The primes accepted in `"prime:p"` descriptors.
pub const PRIMES: &[u64] = &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 65537];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    Rational,
    Prime(u64),
}

impl FieldKind {
    pub fn parse(descriptor: &str) -> Result<Self, String> {
        if descriptor == "rational" {
            return Ok(FieldKind::Rational);
        }
        let p = descriptor.strip_prefix("prime:").and_then(|p| p.parse::<u64>().ok()).ok_or_else(|| format!("unknown field descriptor {descriptor:?}"))?;
        if PRIMES.contains(&p) {
            Ok(FieldKind::Prime(p))
        } else {
            Err(format!("unsupported prime {p}; supported: {PRIMES:?}"))
        }
    }

    pub fn descriptor(self) -> String {
        match self {
            FieldKind::Rational => "rational".into(),
            FieldKind::Prime(p) => format!("prime:{p}"),
        }
    }
}

/// Something to run once the scalar type is fixed.
pub trait WithField {
    type Output;
    fn run<F: Scalar>(self) -> Self::Output;
}

macro_rules! prime_dispatch {
    ($p:expr, $job:expr, [$($q:literal),*]) => {
        match $p {
            $($q => $job.run::<Fp<$q>>(),)*
            _ => unreachable!("descriptor was validated"),
        }
    };
}

pub fn dispatch<J: WithField>(kind: FieldKind, job: J) -> J::Output {
    match kind {
        FieldKind::Rational => job.run::<Rational>(),
        FieldKind::Prime(p) => {
            prime_dispatch!(p, job, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 65537])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_round_trip() {
        for s in ["0", "-3", "7/2", "-1/3"] {
            assert_eq!(Rational::parse(s).unwrap().render(), s);
        }
        assert_eq!(Rational::parse("2/4").unwrap().render(), "1/2");
        assert!(Rational::parse("1.5").is_none());
        assert!(Rational::parse("1/0").is_none());
    }

    #[test]
    fn prime_fields_reduce() {
        assert_eq!(Fp::<7>::parse("10").unwrap().render(), "3");
        assert_eq!(Fp::<7>::parse("1/2").unwrap().render(), "4");
        assert!(Fp::<7>::parse("1/7").is_none());
    }

    #[test]
    fn descriptors() {
        assert_eq!(FieldKind::parse("rational"), Ok(FieldKind::Rational));
        assert_eq!(FieldKind::parse("prime:101"), Ok(FieldKind::Prime(101)));
        assert!(FieldKind::parse("prime:4").is_err());
        assert!(FieldKind::parse("real").is_err());
    }
}
