//! Topological anomaly of a family of Dirac operators, as bookkeeping data.
//!
//! The class of the fermionic line bundle on the parameter space `T` is the
//! image of the K-theory class of the coupling bundle under the fiber
//! pushforward followed by a map to ordinary cohomology. Which real form of
//! K-theory applies and where the class lands depend only on the fiber
//! dimension modulo 8. Nothing is computed here beyond that lookup.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Reality type of the coupling bundle `E`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reality {
    Complex,
    Real,
    RealPair,
    Quaternionic,
    QuaternionicPair,
}

impl Reality {
    pub fn symbol(self) -> &'static str {
        match self {
            Reality::Complex => "ℂ",
            Reality::Real => "ℝ",
            Reality::RealPair => "ℝ⊕ℝ",
            Reality::Quaternionic => "ℍ",
            Reality::QuaternionicPair => "ℍ⊕ℍ",
        }
    }
}

/// Flavour of K-theory receiving the class of `E`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KTheory {
    K,
    KO,
    KSp,
}

impl KTheory {
    pub fn symbol(self) -> &'static str {
        match self {
            KTheory::K => "K",
            KTheory::KO => "KO",
            KTheory::KSp => "KSp",
        }
    }
}

/// Where the anomaly class ends up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TargetGroup {
    /// `H¹(T;ℤ/2)`, reached directly.
    H1Z2,
    /// `H²(T;ℤ)`.
    H2Z,
    /// `H¹(T;ℤ)` followed by reduction mod 2.
    H1ZThenZ2,
}

impl TargetGroup {
    pub fn symbol(self) -> &'static str {
        match self {
            TargetGroup::H1Z2 => "H¹(T;ℤ/2)",
            TargetGroup::H2Z => "H²(T;ℤ)",
            TargetGroup::H1ZThenZ2 => "H¹(T;ℤ)→H¹(T;ℤ/2)",
        }
    }

    /// Final group in the chain, ignoring intermediate steps.
    pub fn final_group(self) -> &'static str {
        match self {
            TargetGroup::H2Z => "H²(T;ℤ)",
            _ => "H¹(T;ℤ/2)",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnomalyDescriptor {
    pub n: u64,
    pub n_mod_8: u8,
    pub bundle_reality: Reality,
    pub source_theory: KTheory,
    /// Degree of the pushforward target, always `-n`.
    pub pushforward_degree: i64,
    pub target_group: TargetGroup,
    /// The class pushed forward is `[E₁] − [E₂]` rather than `[E]`.
    pub uses_difference_class: bool,
    pub note: Option<&'static str>,
}

impl AnomalyDescriptor {
    pub fn source_group(&self) -> String {
        format!("{}⁰(X)", self.source_theory.symbol())
    }

    pub fn pushforward_group(&self) -> String {
        format!("{}^{{{}}}(T)", self.source_theory.symbol(), self.pushforward_degree)
    }

    /// The chain of groups the class travels through, source first.
    pub fn pipeline(&self) -> Vec<String> {
        let mut steps = vec![self.source_group(), self.pushforward_group()];
        match self.target_group {
            TargetGroup::H1ZThenZ2 => {
                steps.push("H¹(T;ℤ)".into());
                steps.push("H¹(T;ℤ/2)".into());
            }
            t => steps.push(t.symbol().into()),
        }
        steps
    }

    pub fn input_class(&self) -> &'static str {
        if self.uses_difference_class {
            "[E₁]−[E₂]"
        } else {
            "[E]"
        }
    }

    /// Same row with the degree forgotten, for comparing across periods.
    pub fn row(&self) -> (u8, Reality, KTheory, TargetGroup, bool) {
        (self.n_mod_8, self.bundle_reality, self.source_theory, self.target_group, self.uses_difference_class)
    }
}

impl fmt::Display for AnomalyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} E:{} {} ↦ {}",
            self.n,
            self.bundle_reality.symbol(),
            self.input_class(),
            self.pipeline().join(" → ")
        )
    }
}

/// Look up the anomaly pipeline for fibers of dimension `n ≥ 1`.
pub fn anomaly_pipeline(n: u64) -> Result<AnomalyDescriptor> {
    if n == 0 {
        return Err(Error::InvalidInput("fiber dimension must be at least 1".into()));
    }
    use KTheory::*;
    use Reality::*;
    use TargetGroup::*;
    let r = (n % 8) as u8;
    let (reality, theory, target, difference) = match r {
        0 => (Complex, K, H2Z, false),
        1 => (Real, KO, H1Z2, false),
        2 => (RealPair, KO, H2Z, true),
        3 => (Real, KO, H1ZThenZ2, false),
        4 => (Complex, K, H2Z, false),
        5 => (Quaternionic, KSp, H1Z2, false),
        6 => (QuaternionicPair, KSp, H2Z, true),
        _ => (Quaternionic, KSp, H1ZThenZ2, false),
    };
    let note = match r {
        4 => Some("the pfaffian reduces to the determinant of the coupled Dirac operator"),
        2 | 6 => Some("the pushforward is paired with the two chiral spinor bundles"),
        3 | 7 => Some("second map is the exponentiated eta invariant, then reduction mod 2"),
        _ => None,
    };
    let degree = i64::try_from(n).map_err(|_| Error::DimensionOutOfRange(usize::MAX))?;
    Ok(AnomalyDescriptor {
        n,
        n_mod_8: r,
        bundle_reality: reality,
        source_theory: theory,
        pushforward_degree: -degree,
        target_group: target,
        uses_difference_class: difference,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_for_small_dimensions() {
        let d1 = anomaly_pipeline(1).unwrap();
        assert_eq!(d1.pipeline(), ["KO⁰(X)", "KO^{-1}(T)", "H¹(T;ℤ/2)"]);
        let d4 = anomaly_pipeline(4).unwrap();
        assert_eq!(d4.bundle_reality, Reality::Complex);
        assert_eq!(d4.pipeline(), ["K⁰(X)", "K^{-4}(T)", "H²(T;ℤ)"]);
        assert!(d4.note.unwrap().contains("determinant"));
        let d6 = anomaly_pipeline(6).unwrap();
        assert_eq!(d6.bundle_reality.symbol(), "ℍ⊕ℍ");
        assert_eq!(d6.input_class(), "[E₁]−[E₂]");
        assert_eq!(anomaly_pipeline(11).unwrap().pipeline().len(), 4);
        assert!(anomaly_pipeline(0).is_err());
    }

    #[test]
    fn parity_and_period() {
        for n in 1..=64u64 {
            let d = anomaly_pipeline(n).unwrap();
            let odd_target = d.target_group.final_group() == "H¹(T;ℤ/2)";
            assert_eq!(odd_target, n % 2 == 1);
            assert_eq!(d.uses_difference_class, n % 4 == 2);
            let e = anomaly_pipeline(n + 8).unwrap();
            assert_eq!(d.row(), e.row());
            assert_eq!(e.pushforward_degree, d.pushforward_degree - 8);
        }
    }
}
