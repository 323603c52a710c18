use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_algebra::QSqrt5;

/// Cartan–Killing type of an irreducible finite root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
    H(usize),
    /// Dihedral type of order `2m`.
    I2(usize),
}

impl CartanType {
    /// Validates a label/rank pair. `dihedral_order` is only read for `I`.
    pub fn new(letter: &str, rank: usize, dihedral_order: Option<usize>) -> Result<Self> {
        let unsupported = || Error::UnsupportedType {
            label: match dihedral_order {
                Some(m) => format!("{letter}{rank}({m})"),
                None => format!("{letter}{rank}"),
            },
        };
        let t = match letter.to_ascii_uppercase().as_str() {
            "A" if rank >= 1 => CartanType::A(rank),
            "B" if rank >= 2 => CartanType::B(rank),
            "C" if rank >= 2 => CartanType::C(rank),
            "D" if rank >= 4 => CartanType::D(rank),
            "E" if (6..=8).contains(&rank) => CartanType::E(rank),
            "F" if rank == 4 => CartanType::F4,
            "G" if rank == 2 => CartanType::G2,
            "H" if rank == 3 || rank == 4 => CartanType::H(rank),
            "I" if rank == 2 => match dihedral_order {
                Some(m) if m >= 2 => CartanType::I2(m),
                _ => return Err(unsupported()),
            },
            _ => return Err(unsupported()),
        };
        Ok(t)
    }

    /// Parses `A3`, `E6`, `I2(5)`, or a product such as `A1xB2`.
    pub fn parse(label: &str) -> Result<Vec<CartanType>> {
        let bad = || Error::UnsupportedType {
            label: label.to_string(),
        };
        let mut out = Vec::new();
        for part in label.split(['x', '*']) {
            let part = part.trim();
            let letter = part.get(..1).ok_or_else(bad)?;
            let rest = &part[1..];
            let (rank_str, order) = match rest.find('(') {
                Some(open) => {
                    let close = rest.rfind(')').ok_or_else(bad)?;
                    let m: usize = rest[open + 1..close].parse().map_err(|_| bad())?;
                    (&rest[..open], Some(m))
                }
                None => (rest, None),
            };
            let rank: usize = rank_str.parse().map_err(|_| bad())?;
            out.push(CartanType::new(letter, rank, order)?);
        }
        if out.is_empty() {
            return Err(bad());
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        match *self {
            CartanType::A(n)
            | CartanType::B(n)
            | CartanType::C(n)
            | CartanType::D(n)
            | CartanType::E(n)
            | CartanType::H(n) => n,
            CartanType::F4 => 4,
            CartanType::G2 | CartanType::I2(_) => 2,
        }
    }

    pub fn letter(&self) -> &'static str {
        match self {
            CartanType::A(_) => "A",
            CartanType::B(_) => "B",
            CartanType::C(_) => "C",
            CartanType::D(_) => "D",
            CartanType::E(_) => "E",
            CartanType::F4 => "F",
            CartanType::G2 => "G",
            CartanType::H(_) => "H",
            CartanType::I2(_) => "I",
        }
    }

    pub fn is_crystallographic(&self) -> bool {
        match self {
            CartanType::H(_) => false,
            CartanType::I2(m) => matches!(m, 2 | 3 | 4 | 6),
            _ => true,
        }
    }

    /// Exponents of the non-crystallographic types, where heights are not
    /// integral and the height-partition rule does not apply.
    pub(crate) fn tabulated_exponents(&self) -> Option<Vec<usize>> {
        match *self {
            CartanType::H(3) => Some(vec![1, 5, 9]),
            CartanType::H(4) => Some(vec![1, 11, 19, 29]),
            CartanType::I2(m) => Some(vec![1, m - 1]),
            _ => None,
        }
    }

    /// Simple roots in standard coordinates, or `None` for the dihedral
    /// types handled combinatorially.
    pub(crate) fn simple_root_coordinates(&self) -> Option<Vec<Vec<QSqrt5>>> {
        let z = |d: usize| vec![QSqrt5::from_integer(0); d];
        let q = QSqrt5::from_integer;
        let half = |n: i64| QSqrt5::from_ratio(n, 2);
        let diff = |d: usize, i: usize, j: usize| {
            let mut v = z(d);
            v[i] = q(1);
            v[j] = q(-1);
            v
        };
        let roots = match *self {
            CartanType::A(n) => (0..n).map(|i| diff(n + 1, i, i + 1)).collect(),
            CartanType::B(n) | CartanType::C(n) | CartanType::D(n) => {
                let mut r: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
                let mut last = z(n);
                match self {
                    CartanType::B(_) => last[n - 1] = q(1),
                    CartanType::C(_) => last[n - 1] = q(2),
                    _ => {
                        last[n - 2] = q(1);
                        last[n - 1] = q(1);
                    }
                }
                r.push(last);
                r
            }
            CartanType::E(n) => {
                let mut r = Vec::new();
                r.push(vec![
                    half(1),
                    half(-1),
                    half(-1),
                    half(-1),
                    half(-1),
                    half(-1),
                    half(-1),
                    half(1),
                ]);
                let mut a2 = z(8);
                a2[0] = q(1);
                a2[1] = q(1);
                r.push(a2);
                // α3..α8 = e_{k} − e_{k−1}
                for k in 1..7 {
                    r.push(diff(8, k, k - 1));
                }
                r.truncate(n);
                r
            }
            CartanType::F4 => vec![
                diff(4, 1, 2),
                diff(4, 2, 3),
                vec![q(0), q(0), q(0), q(1)],
                vec![half(1), half(-1), half(-1), half(-1)],
            ],
            CartanType::G2 => vec![vec![q(1), q(-1), q(0)], vec![q(-2), q(1), q(1)]],
            CartanType::H(n) => {
                let tau = QSqrt5::golden_ratio();
                let tau_inv = tau.inverse().expect("nonzero");
                let mut r = vec![
                    vec![q(2), q(0), q(0)],
                    vec![-tau.clone(), q(1), -tau_inv.clone()],
                    vec![q(0), q(-2), q(0)],
                ];
                if n == 4 {
                    for v in &mut r {
                        v.push(q(0));
                    }
                    r.push(vec![q(0), q(1), tau, tau_inv]);
                }
                r
            }
            CartanType::I2(2) => vec![vec![q(1), q(0)], vec![q(0), q(1)]],
            CartanType::I2(_) => return None,
        };
        Some(roots)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::I2(m) => write!(f, "I2({m})"),
            CartanType::F4 => write!(f, "F4"),
            CartanType::G2 => write!(f, "G2"),
            t => write!(f, "{}{}", t.letter(), t.rank()),
        }
    }
}
