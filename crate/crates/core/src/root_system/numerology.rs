use serde::Serialize;

use super::RootSystem;
use crate::error::{Error, Result};

/// Exponents, Coxeter number and positive-root count of an irreducible
/// system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Numerology {
    pub exponents: Vec<usize>,
    pub coxeter_number: usize,
    pub positive_root_count: usize,
}

impl RootSystem {
    /// For crystallographic types the exponents are the conjugate partition
    /// of the height distribution of the positive roots; the
    /// non-crystallographic types use their tabulated exponents.
    pub fn numerology(&self) -> Result<Numerology> {
        if !self.is_irreducible() {
            return Err(Error::Reducible { op: "numerology" });
        }
        let n = self.rank();
        let np = self.num_positive();
        if !(2 * np).is_multiple_of(n) {
            return Err(Error::Internal(format!("2N = {} not divisible by n = {n}", 2 * np)));
        }
        let h = 2 * np / n;
        let cartan = self.components()[0].cartan;
        let exponents = match cartan.tabulated_exponents() {
            Some(e) if !cartan.is_crystallographic() => e,
            _ => self.height_partition_exponents()?,
        };
        if exponents.iter().sum::<usize>() != np {
            return Err(Error::Internal("exponents do not sum to N".into()));
        }
        Ok(Numerology {
            exponents,
            coxeter_number: h,
            positive_root_count: np,
        })
    }

    fn height_partition_exponents(&self) -> Result<Vec<usize>> {
        let mut counts: Vec<usize> = Vec::new();
        for i in 0..self.num_positive() {
            let h = self
                .height(i)
                .and_then(|h| h.to_integer())
                .and_then(|h| usize::try_from(h).ok())
                .ok_or_else(|| Error::Internal("non-integral root height".into()))?;
            if counts.len() < h {
                counts.resize(h, 0);
            }
            counts[h - 1] += 1;
        }
        // #{exponents >= k} = #{roots of height k}
        let mut exps = Vec::new();
        for k in 0..counts.len() {
            let next = counts.get(k + 1).copied().unwrap_or(0);
            if counts[k] < next {
                return Err(Error::Internal("height distribution not a partition".into()));
            }
            exps.extend(std::iter::repeat_n(k + 1, counts[k] - next));
        }
        exps.sort_unstable();
        Ok(exps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(label: &str) -> Numerology {
        RootSystem::from_label(label).unwrap().numerology().unwrap()
    }

    #[test]
    fn small_types() {
        assert_eq!(num("A2").exponents, vec![1, 2]);
        assert_eq!(num("A2").coxeter_number, 3);
        assert_eq!(num("A3").exponents, vec![1, 2, 3]);
        assert_eq!(num("A3").coxeter_number, 4);
        assert_eq!(num("B2").coxeter_number, 4);
        let g2 = num("G2");
        assert_eq!((g2.positive_root_count, g2.coxeter_number), (6, 6));
        assert_eq!(g2.exponents, vec![1, 5]);
    }

    #[test]
    fn icosahedral() {
        let h3 = num("H3");
        assert_eq!(h3.exponents, vec![1, 5, 9]);
        assert_eq!(h3.coxeter_number, 10);
        assert_eq!(h3.positive_root_count, 15);
    }

    #[test]
    fn reducible_is_refused() {
        let rs = RootSystem::from_label("A1xA1").unwrap();
        assert_eq!(rs.numerology(), Err(Error::Reducible { op: "numerology" }));
    }
}
