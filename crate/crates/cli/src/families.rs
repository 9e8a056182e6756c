//! Group family constructors.
//!
//! Each family produces a [`GroupSpec`] — a named list of cycle-notation
//! generators — whose generated group has the textbook order. Families are
//! parsed from whitespace-separated tokens; `direct_product` takes two
//! parenthesized factors.

use realclass_core::arith::is_prime;
use realclass_core::perm::Permutation;
use thiserror::Error;

use crate::corpus::GroupSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("family {family}: expected {expected} integer parameter(s)")]
    BadArity { family: String, expected: usize },
    #[error("family {family}: invalid parameters: {reason}")]
    InvalidParameters { family: String, reason: String },
    #[error("unbalanced parentheses in family expression")]
    UnbalancedParens,
    #[error("trailing tokens after family expression")]
    TrailingTokens,
}

/// A parsed family invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Cyclic(u64),
    /// Parameter is the group order 2n.
    Dihedral(u64),
    /// Parameter is the group order 4n.
    Dicyclic(u64),
    Symmetric(u64),
    Alternating(u64),
    ElementaryAbelian(u64, u32),
    /// C_p ⋊ C_q with faithful action; requires q | p−1.
    Frobenius(u64, u64),
    /// C_m ⋊ C_n with the action x ↦ x^k; requires k^n ≡ 1 (mod m).
    Metacyclic(u64, u64, u64),
    /// Fractional linear group on the projective line over F_p.
    Psl2(u64),
    DirectProduct(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    /// Parses a family expression such as `"dihedral 6"` or
    /// `"direct_product ( cyclic 2 ) ( frobenius 5 4 )"`.
    pub fn parse(text: &str) -> Result<FamilySpec, FamilyError> {
        let spaced = text.replace('(', " ( ").replace(')', " ) ");
        let tokens: Vec<&str> = spaced.split_whitespace().collect();
        let (spec, rest) = Self::parse_tokens(&tokens)?;
        if !rest.is_empty() {
            return Err(FamilyError::TrailingTokens);
        }
        Ok(spec)
    }

    fn parse_tokens<'a>(tokens: &'a [&'a str]) -> Result<(FamilySpec, &'a [&'a str]), FamilyError> {
        let (&name, mut rest) = tokens
            .split_first()
            .ok_or_else(|| FamilyError::UnknownFamily(String::new()))?;
        if name == "direct_product" {
            let left;
            let right;
            rest = expect_token(rest, "(")?;
            (left, rest) = Self::parse_tokens(rest)?;
            rest = expect_token(rest, ")")?;
            rest = expect_token(rest, "(")?;
            (right, rest) = Self::parse_tokens(rest)?;
            rest = expect_token(rest, ")")?;
            return Ok((FamilySpec::DirectProduct(Box::new(left), Box::new(right)), rest));
        }
        let arity = match name {
            "cyclic" | "dihedral" | "dicyclic" | "symmetric" | "alternating" | "psl2" => 1,
            "elementary_abelian" | "frobenius" => 2,
            "metacyclic" => 3,
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        };
        if rest.len() < arity {
            return Err(FamilyError::BadArity {
                family: name.to_string(),
                expected: arity,
            });
        }
        let mut args = Vec::with_capacity(arity);
        for tok in &rest[..arity] {
            let v: u64 = tok.parse().map_err(|_| FamilyError::BadArity {
                family: name.to_string(),
                expected: arity,
            })?;
            args.push(v);
        }
        rest = &rest[arity..];
        let spec = match name {
            "cyclic" => FamilySpec::Cyclic(args[0]),
            "dihedral" => FamilySpec::Dihedral(args[0]),
            "dicyclic" => FamilySpec::Dicyclic(args[0]),
            "symmetric" => FamilySpec::Symmetric(args[0]),
            "alternating" => FamilySpec::Alternating(args[0]),
            "elementary_abelian" => FamilySpec::ElementaryAbelian(args[0], args[1] as u32),
            "frobenius" => FamilySpec::Frobenius(args[0], args[1]),
            "metacyclic" => FamilySpec::Metacyclic(args[0], args[1], args[2]),
            "psl2" => FamilySpec::Psl2(args[0]),
            _ => unreachable!(),
        };
        Ok((spec, rest))
    }

    /// Canonical name used in corpus reports.
    pub fn name(&self) -> String {
        match self {
            FamilySpec::Cyclic(n) => format!("cyclic_{n}"),
            FamilySpec::Dihedral(n) => format!("dihedral_{n}"),
            FamilySpec::Dicyclic(n) => format!("dicyclic_{n}"),
            FamilySpec::Symmetric(n) => format!("symmetric_{n}"),
            FamilySpec::Alternating(n) => format!("alternating_{n}"),
            FamilySpec::ElementaryAbelian(p, k) => format!("elementary_abelian_{p}_{k}"),
            FamilySpec::Frobenius(p, q) => format!("frobenius_{p}_{q}"),
            FamilySpec::Metacyclic(m, n, k) => format!("metacyclic_{m}_{n}_{k}"),
            FamilySpec::Psl2(p) => format!("psl2_{p}"),
            FamilySpec::DirectProduct(a, b) => format!("product_{}__{}", a.name(), b.name()),
        }
    }

    /// The advertised order of the constructed group.
    pub fn expected_order(&self) -> u64 {
        match self {
            FamilySpec::Cyclic(n) => *n,
            FamilySpec::Dihedral(n) | FamilySpec::Dicyclic(n) => *n,
            FamilySpec::Symmetric(n) => factorial(*n),
            FamilySpec::Alternating(n) => factorial(*n) / 2,
            FamilySpec::ElementaryAbelian(p, k) => p.pow(*k),
            FamilySpec::Frobenius(p, q) => p * q,
            FamilySpec::Metacyclic(m, n, _) => m * n,
            FamilySpec::Psl2(p) => p * (p * p - 1) / 2,
            FamilySpec::DirectProduct(a, b) => a.expected_order() * b.expected_order(),
        }
    }

    /// Builds the generator list and wraps it into a [`GroupSpec`].
    pub fn to_group_spec(&self) -> Result<GroupSpec, FamilyError> {
        let (degree, generators) = self.build_generators()?;
        Ok(GroupSpec {
            name: self.name(),
            degree,
            generator_strings: generators.iter().map(|p| p.to_string()).collect(),
            source: format!("family:{}", self.name()),
        })
    }

    fn build_generators(&self) -> Result<(usize, Vec<Permutation>), FamilyError> {
        match self {
            FamilySpec::Cyclic(n) => {
                require(*n >= 1, "cyclic", "n must be at least 1")?;
                let n = *n as usize;
                Ok((n, vec![full_cycle(n)]))
            }
            FamilySpec::Dihedral(order) => dihedral(*order),
            FamilySpec::Dicyclic(order) => dicyclic(*order),
            FamilySpec::Symmetric(n) => {
                require(*n >= 1, "symmetric", "n must be at least 1")?;
                let n = *n as usize;
                if n == 1 {
                    return Ok((1, vec![Permutation::identity(1)]));
                }
                let transposition = from_images((0..n).map(|i| match i {
                    0 => 1,
                    1 => 0,
                    i => i,
                }));
                Ok((n, vec![transposition, full_cycle(n)]))
            }
            FamilySpec::Alternating(n) => {
                require(*n >= 3, "alternating", "n must be at least 3")?;
                let n = *n as usize;
                let three_cycle = from_images((0..n).map(|i| match i {
                    0 => 1,
                    1 => 2,
                    2 => 0,
                    i => i,
                }));
                let big = if n % 2 == 1 {
                    full_cycle(n)
                } else {
                    // (2,3,…,n): fix the first point.
                    from_images((0..n).map(|i| {
                        if i == 0 {
                            0
                        } else if i == n - 1 {
                            1
                        } else {
                            i + 1
                        }
                    }))
                };
                Ok((n, vec![three_cycle, big]))
            }
            FamilySpec::ElementaryAbelian(p, k) => {
                require(is_prime(*p), "elementary_abelian", "p must be prime")?;
                require(*k >= 1, "elementary_abelian", "k must be at least 1")?;
                let p = *p as usize;
                let k = *k as usize;
                let degree = p * k;
                let gens = (0..k)
                    .map(|block| {
                        from_images((0..degree).map(move |i| {
                            if i / p == block {
                                block * p + (i % p + 1) % p
                            } else {
                                i
                            }
                        }))
                    })
                    .collect();
                Ok((degree, gens))
            }
            FamilySpec::Frobenius(p, q) => frobenius(*p, *q),
            FamilySpec::Metacyclic(m, n, k) => metacyclic(*m, *n, *k),
            FamilySpec::Psl2(p) => psl2(*p),
            FamilySpec::DirectProduct(a, b) => {
                let (da, gens_a) = a.build_generators()?;
                let (db, gens_b) = b.build_generators()?;
                let degree = da + db;
                let mut gens = Vec::new();
                for g in gens_a {
                    gens.push(from_images((0..degree).map(|i| {
                        if i < da {
                            g.apply(i as u32) as usize
                        } else {
                            i
                        }
                    })));
                }
                for g in gens_b {
                    gens.push(from_images((0..degree).map(|i| {
                        if i < da {
                            i
                        } else {
                            g.apply((i - da) as u32) as usize + da
                        }
                    })));
                }
                Ok((degree, gens))
            }
        }
    }
}

fn expect_token<'a>(rest: &'a [&'a str], expected: &str) -> Result<&'a [&'a str], FamilyError> {
    match rest.split_first() {
        Some((&tok, tail)) if tok == expected => Ok(tail),
        _ => Err(FamilyError::UnbalancedParens),
    }
}

fn require(cond: bool, family: &str, reason: &str) -> Result<(), FamilyError> {
    if cond {
        Ok(())
    } else {
        Err(FamilyError::InvalidParameters {
            family: family.to_string(),
            reason: reason.to_string(),
        })
    }
}

fn from_images(images: impl Iterator<Item = usize>) -> Permutation {
    Permutation::from_images(images.map(|i| i as u32).collect())
        .expect("constructed image lists are bijections")
}

fn full_cycle(n: usize) -> Permutation {
    from_images((0..n).map(|i| (i + 1) % n))
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn dihedral(order: u64) -> Result<(usize, Vec<Permutation>), FamilyError> {
    require(order >= 2 && order % 2 == 0, "dihedral", "order must be even and at least 2")?;
    let n = (order / 2) as usize;
    match n {
        1 => Ok((2, vec![from_images([1, 0].into_iter())])),
        2 => Ok((4, vec![
            from_images([1, 0, 2, 3].into_iter()),
            from_images([0, 1, 3, 2].into_iter()),
        ])),
        _ => {
            let rotation = full_cycle(n);
            let reflection = from_images((0..n).map(|i| (n - i) % n));
            Ok((n, vec![rotation, reflection]))
        }
    }
}

/// Dicyclic group of order 4n via its right regular representation on the
/// elements a^i b^j (i mod 2n, j mod 2) with b² = a^n and a^b = a⁻¹.
fn dicyclic(order: u64) -> Result<(usize, Vec<Permutation>), FamilyError> {
    require(order >= 4 && order % 4 == 0, "dicyclic", "order must be divisible by 4")?;
    let n = (order / 4) as usize;
    let two_n = 2 * n;
    let index = |i: usize, j: usize| j * two_n + i;
    let multiply = |x: usize, g: (usize, usize)| -> usize {
        let (i, j) = (x % two_n, x / two_n);
        let (gi, gj) = g;
        if j == 0 {
            index((i + gi) % two_n, gj)
        } else if gj == 0 {
            index((i + two_n - gi % two_n) % two_n, 1)
        } else {
            index((i + two_n - gi % two_n + n) % two_n, 0)
        }
    };
    let degree = 4 * n;
    let a = from_images((0..degree).map(|x| multiply(x, (1, 0))));
    let b = from_images((0..degree).map(|x| multiply(x, (0, 1))));
    Ok((degree, vec![a, b]))
}

fn frobenius(p: u64, q: u64) -> Result<(usize, Vec<Permutation>), FamilyError> {
    require(is_prime(p), "frobenius", "p must be prime")?;
    require(q >= 2, "frobenius", "q must be at least 2")?;
    require(
        p > 2 && (p - 1) % q == 0,
        "frobenius",
        "q must divide p-1",
    )?;
    let root = primitive_root(p);
    let action = mod_pow(root, (p - 1) / q, p);
    let degree = p as usize;
    let translation = from_images((0..degree).map(|i| (i + 1) % degree));
    let scaling = from_images((0..degree).map(|i| ((i as u64 * action) % p) as usize));
    Ok((degree, vec![translation, scaling]))
}

/// C_m ⋊ C_n acting on m + n points: the first block carries the faithful
/// affine action, the second a plain n-cycle keeping the complement faithful
/// even when the action has a kernel.
fn metacyclic(m: u64, n: u64, k: u64) -> Result<(usize, Vec<Permutation>), FamilyError> {
    require(m >= 2 && n >= 1, "metacyclic", "m must be at least 2 and n at least 1")?;
    require(k >= 1 && k < m, "metacyclic", "k must satisfy 1 <= k < m")?;
    require(
        mod_pow(k, n, m) == 1,
        "metacyclic",
        "k^n must be congruent to 1 mod m",
    )?;
    let m_us = m as usize;
    let n_us = n as usize;
    let degree = m_us + n_us;
    let a = from_images((0..degree).map(|i| {
        if i < m_us {
            (i + 1) % m_us
        } else {
            i
        }
    }));
    let b = from_images((0..degree).map(|i| {
        if i < m_us {
            ((i as u64 * k) % m) as usize
        } else {
            m_us + (i - m_us + 1) % n_us
        }
    }));
    Ok((degree, vec![a, b]))
}

/// Fractional linear maps on the projective line 0,…,p−1,∞ (∞ at index p):
/// the translation x ↦ x+1 and the inversion x ↦ −1/x.
fn psl2(p: u64) -> Result<(usize, Vec<Permutation>), FamilyError> {
    require(
        matches!(p, 5 | 7 | 11 | 13),
        "psl2",
        "p must be one of 5, 7, 11, 13",
    )?;
    let pu = p as usize;
    let degree = pu + 1;
    let translation = from_images((0..degree).map(|i| {
        if i == pu {
            pu
        } else {
            (i + 1) % pu
        }
    }));
    let inversion = from_images((0..degree).map(|i| {
        if i == pu {
            0
        } else if i == 0 {
            pu
        } else {
            let inv = mod_pow(i as u64, p - 2, p);
            ((p - inv) % p) as usize
        }
    }));
    Ok((degree, vec![translation, inversion]))
}

fn mod_pow(base: u64, exp: u64, modulus: u64) -> u64 {
    let mut result = 1u64;
    let mut base = base % modulus;
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    result
}

fn primitive_root(p: u64) -> u64 {
    let factors = realclass_core::arith::prime_divisors(p - 1);
    (2..p)
        .find(|&r| factors.iter().all(|&f| mod_pow(r, (p - 1) / f, p) != 1))
        .expect("every prime has a primitive root")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_of(text: &str) -> u64 {
        let spec = FamilySpec::parse(text).unwrap();
        let gs = spec.to_group_spec().unwrap();
        gs.build(1_000_000).unwrap().order()
    }

    #[test]
    fn advertised_orders_hold() {
        for (text, order) in [
            ("cyclic 1", 1),
            ("cyclic 12", 12),
            ("dihedral 6", 6),
            ("dihedral 2", 2),
            ("dihedral 4", 4),
            ("dicyclic 8", 8),
            ("dicyclic 12", 12),
            ("symmetric 4", 24),
            ("symmetric 1", 1),
            ("alternating 4", 12),
            ("alternating 5", 60),
            ("elementary_abelian 2 3", 8),
            ("elementary_abelian 3 2", 9),
            ("frobenius 5 4", 20),
            ("frobenius 7 3", 21),
            ("metacyclic 8 2 3", 16),
            ("metacyclic 5 4 2", 20),
            ("psl2 5", 60),
            ("psl2 7", 168),
        ] {
            assert_eq!(order_of(text), order, "family {text}");
            assert_eq!(
                FamilySpec::parse(text).unwrap().expected_order(),
                order,
                "expected_order for {text}"
            );
        }
    }

    #[test]
    fn direct_product_parsing_and_order() {
        let spec = FamilySpec::parse("direct_product ( cyclic 2 ) ( dihedral 6 )").unwrap();
        assert_eq!(spec.expected_order(), 12);
        let gs = spec.to_group_spec().unwrap();
        assert_eq!(gs.build(1_000_000).unwrap().order(), 12);
        let nested =
            FamilySpec::parse("direct_product ( cyclic 2 ) ( direct_product ( cyclic 3 ) ( cyclic 5 ) )")
                .unwrap();
        assert_eq!(nested.expected_order(), 30);
    }

    #[test]
    fn dicyclic_8_is_quaternion() {
        let gs = FamilySpec::parse("dicyclic 8").unwrap().to_group_spec().unwrap();
        let g = gs.build(1_000_000).unwrap();
        assert_eq!(g.order(), 8);
        // One involution only (the quaternion signature).
        let involutions = g.elements().iter().filter(|e| e.order() == 2).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn frobenius_rejects_bad_parameters() {
        assert!(matches!(
            FamilySpec::parse("frobenius 5 3").unwrap().to_group_spec(),
            Err(FamilyError::InvalidParameters { .. })
        ));
        assert!(matches!(
            FamilySpec::parse("frobenius 9 2").unwrap().to_group_spec(),
            Err(FamilyError::InvalidParameters { .. })
        ));
    }

    #[test]
    fn metacyclic_rejects_bad_action() {
        assert!(matches!(
            FamilySpec::parse("metacyclic 8 2 2").unwrap().to_group_spec(),
            Err(FamilyError::InvalidParameters { .. })
        ));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            FamilySpec::parse("heisenberg 3"),
            Err(FamilyError::UnknownFamily(_))
        ));
        assert!(matches!(
            FamilySpec::parse("cyclic"),
            Err(FamilyError::BadArity { .. })
        ));
        assert!(matches!(
            FamilySpec::parse("direct_product ( cyclic 2 ( cyclic 3 )"),
            Err(FamilyError::UnbalancedParens)
        ));
        assert!(matches!(
            FamilySpec::parse("cyclic 3 4"),
            Err(FamilyError::TrailingTokens)
        ));
    }

    #[test]
    fn psl2_13_has_order_1092() {
        let gs = FamilySpec::parse("psl2 13").unwrap().to_group_spec().unwrap();
        assert_eq!(gs.build(1_000_000).unwrap().order(), 1092);
    }
}
