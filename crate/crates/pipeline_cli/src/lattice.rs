use std::str::FromStr;
use std::sync::OnceLock;

use exactmath::rational::int;
use latticevoa::isometry::{mat_mul, transpose};
use latticevoa::{
    assemble_niemeier, build_isometry, fixed_subalgebra, identify_type, standard_lift, twisted_ground_energy,
    EvenLattice, GlueCode, IsometryName, LatticeError, LatticeLie,
};
use rootdata::SemisimpleTypeWithLevels;

use crate::golden;
use crate::report::{Report, Step};
use crate::PipelineError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeName {
    E6x4,
    D4x6,
}

impl LatticeName {
    pub fn label(self) -> &'static str {
        match self {
            LatticeName::E6x4 => "e6_4",
            LatticeName::D4x6 => "d4_6",
        }
    }

    pub fn code(self) -> GlueCode {
        match self {
            LatticeName::E6x4 => GlueCode::e6_4(),
            LatticeName::D4x6 => GlueCode::d4_6(),
        }
    }

    /// Root system of the lattice as a level-1 type, e.g. `E6,1^4`.
    pub fn level_one_type(self) -> SemisimpleTypeWithLevels {
        SemisimpleTypeWithLevels::new(self.code().components.into_iter().map(|t| (t, int(1))).collect(), 0)
    }

    /// The lattice an isometry is defined on.
    pub fn of_isometry(g: IsometryName) -> Self {
        match g {
            IsometryName::Sigma6 => LatticeName::E6x4,
            IsometryName::Sigma2 | IsometryName::Sigma4 => LatticeName::D4x6,
        }
    }
}

impl FromStr for LatticeName {
    type Err = PipelineError;

    fn from_str(s: &str) -> Result<Self, PipelineError> {
        match s {
            "e6_4" => Ok(LatticeName::E6x4),
            "d4_6" => Ok(LatticeName::D4x6),
            _ => Err(PipelineError::Usage(format!("unknown lattice {s:?}; expected e6_4 or d4_6"))),
        }
    }
}

pub fn parse_isometry(s: &str) -> Result<IsometryName, PipelineError> {
    match s {
        "sigma6" => Ok(IsometryName::Sigma6),
        "sigma2" => Ok(IsometryName::Sigma2),
        "sigma4" => Ok(IsometryName::Sigma4),
        _ => Err(PipelineError::Usage(format!("unknown isometry {s:?}; expected sigma6, sigma2 or sigma4"))),
    }
}

pub fn isometry_label(g: IsometryName) -> &'static str {
    match g {
        IsometryName::Sigma6 => "sigma6",
        IsometryName::Sigma2 => "sigma2",
        IsometryName::Sigma4 => "sigma4",
    }
}

pub struct LatticeSetup {
    pub lattice: EvenLattice,
    pub lie: LatticeLie,
}

/// Lattice and its weight-one Lie algebra, built once per process.
pub fn setup(name: LatticeName) -> Result<&'static LatticeSetup, LatticeError> {
    static E6: OnceLock<Result<LatticeSetup, LatticeError>> = OnceLock::new();
    static D4: OnceLock<Result<LatticeSetup, LatticeError>> = OnceLock::new();
    let cell = match name {
        LatticeName::E6x4 => &E6,
        LatticeName::D4x6 => &D4,
    };
    cell.get_or_init(|| {
        let lattice = assemble_niemeier(&name.code())?;
        let lie = LatticeLie::from_lattice(&lattice)?;
        Ok(LatticeSetup { lattice, lie })
    })
    .as_ref()
    .map_err(Clone::clone)
}

/// Dimension and type of the fixed-point Lie algebra of the standard lift of `g`.
pub fn lattice_fixed_type(g: IsometryName, seed: u64) -> Result<(usize, SemisimpleTypeWithLevels), LatticeError> {
    let s = setup(LatticeName::of_isometry(g))?;
    let iso = build_isometry(g, &s.lattice)?;
    let lifted = standard_lift(&s.lie, &iso.matrix)?;
    let fixed = fixed_subalgebra(&s.lie, &lifted)?;
    Ok((fixed.dim(), identify_type(&s.lie, &fixed, seed)?))
}

/// Checks on one Niemeier lattice and one of its order-3 isometries.
pub fn lattice_report(name: LatticeName, g: IsometryName, seed: u64) -> Result<Report, PipelineError> {
    if LatticeName::of_isometry(g) != name {
        return Err(PipelineError::Usage(format!(
            "{} is defined on {}, not {}",
            isometry_label(g),
            LatticeName::of_isometry(g).label(),
            name.label()
        )));
    }
    let mut r = Report::new(format!("lattice {} {}", name.label(), isometry_label(g)));
    r.conventions.push(phase_convention().into());
    let s = match setup(name) {
        Ok(s) => s,
        Err(e) => {
            r.abort(Step::new("assemble lattice").error(e));
            return Ok(r);
        }
    };
    let facts = match name {
        LatticeName::E6x4 => golden::E6_4,
        LatticeName::D4x6 => golden::D4_6,
    };
    r.push(Step::new("determinant").expect(s.lattice.det(), facts.det));
    r.push(Step::new("glue index").expect(s.lattice.glue_index(), facts.glue_index));
    r.push(Step::new("Lie algebra dimension").unchecked(s.lie.dim()));
    let iso = match build_isometry(g, &s.lattice) {
        Ok(i) => i,
        Err(e) => {
            r.abort(Step::new("build isometry").error(e));
            return Ok(r);
        }
    };
    let order = iso.order().map_or("none".to_string(), |o| o.to_string());
    r.push(Step::new("isometry order").expect(order, 3));
    let m = &iso.basis_matrix;
    let preserved = mat_mul(&mat_mul(&transpose(m), &s.lattice.gram), m) == s.lattice.gram;
    r.push(Step::new("preserves the lattice").expect(preserved, true));
    r.push(Step::new("fixed sublattice rank").unchecked(iso.fixed_rank()));
    match twisted_ground_energy(&iso) {
        Ok(rho) if g == IsometryName::Sigma6 => {
            r.push(Step::new("twisted ground energy").expect(rho.rho, golden::RHO_SIGMA6.parse::<exactmath::Rational>().expect("golden")))
        }
        Ok(rho) => r.push(Step::new("twisted ground energy").unchecked(rho.rho)),
        Err(e) => r.push(Step::new("twisted ground energy").error(e)),
    }
    let lifted = match standard_lift(&s.lie, &iso.matrix) {
        Ok(l) => l,
        Err(e) => {
            r.abort(Step::new("standard lift").error(e));
            return Ok(r);
        }
    };
    let order = lifted.order().map_or("none".to_string(), |o| o.to_string());
    r.push(Step::new("lift order").expect(order, 3));
    let fixed = match fixed_subalgebra(&s.lie, &lifted) {
        Ok(f) => f,
        Err(e) => {
            r.abort(Step::new("fixed subalgebra").error(e));
            return Ok(r);
        }
    };
    let (_, dim, ty) = golden::FIXED_ALGEBRAS
        .iter()
        .find(|(n, ..)| *n == isometry_label(g))
        .expect("every isometry has a golden fixed algebra");
    r.push(Step::new("fixed dimension").expect(fixed.dim(), dim));
    match identify_type(&s.lie, &fixed, seed) {
        Ok(found) => {
            let want: SemisimpleTypeWithLevels = ty.parse().expect("golden type");
            r.push(Step::new("fixed type").input("seed", seed).check(&found, &want, found == want))
        }
        Err(e) => r.push(Step::new("fixed type").input("seed", seed).error(e)),
    }
    Ok(r)
}

pub fn phase_convention() -> &'static str {
    "standard lifts carry signs ±1 from a quadratic form over F2, equal to 1 on the fixed sublattice"
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse() {
        for l in [LatticeName::E6x4, LatticeName::D4x6] {
            assert_eq!(l.label().parse::<LatticeName>().unwrap(), l);
        }
        for g in [IsometryName::Sigma6, IsometryName::Sigma2, IsometryName::Sigma4] {
            assert_eq!(parse_isometry(isometry_label(g)).unwrap(), g);
        }
        assert!(parse_isometry("sigma3").is_err());
    }

    #[test]
    fn mismatched_lattice_is_a_usage_error() {
        assert!(matches!(
            lattice_report(LatticeName::D4x6, IsometryName::Sigma6, 0),
            Err(PipelineError::Usage(_))
        ));
    }

    #[test]
    fn level_one_types() {
        assert_eq!(LatticeName::E6x4.level_one_type().to_string(), "E6,1^4".parse::<SemisimpleTypeWithLevels>().unwrap().to_string());
        assert_eq!(LatticeName::D4x6.level_one_type().dim(), 168);
    }
}
