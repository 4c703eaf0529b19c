//! The finitely many isomorphism types that symmetry and reversing symmetry
//! groups of GL(2,Z) matrices can take.

use std::fmt;

/// Structure tags for S(M) and R(M). The first five arise as centralizer
/// types, the rest as reversing-group types; `C2xCinf` and `CinfxC2` are the
/// same abstract group but are kept apart because they label different cases
/// of the two classifications.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupStructure {
    FullGl2Z,
    C2xC2,
    C4,
    C6,
    C2xCinf,
    D2,
    D4,
    D6,
    DinfxC2,
    CinfSemidirC4,
    CinfxC2,
}

impl GroupStructure {
    /// Stable machine tag used in JSON output.
    pub fn tag(self) -> &'static str {
        match self {
            GroupStructure::FullGl2Z => "FullGl2Z",
            GroupStructure::C2xC2 => "C2xC2",
            GroupStructure::C4 => "C4",
            GroupStructure::C6 => "C6",
            GroupStructure::C2xCinf => "C2xCinf",
            GroupStructure::D2 => "D2",
            GroupStructure::D4 => "D4",
            GroupStructure::D6 => "D6",
            GroupStructure::DinfxC2 => "DinfxC2",
            GroupStructure::CinfSemidirC4 => "CinfSemidirC4",
            GroupStructure::CinfxC2 => "CinfxC2",
        }
    }

    pub fn human(self) -> &'static str {
        match self {
            GroupStructure::FullGl2Z => "GL(2,Z)",
            GroupStructure::C2xC2 => "C2 x C2",
            GroupStructure::C4 => "C4",
            GroupStructure::C6 => "C6",
            GroupStructure::C2xCinf => "C2 x Cinf",
            GroupStructure::D2 => "D2",
            GroupStructure::D4 => "D4",
            GroupStructure::D6 => "D6",
            GroupStructure::DinfxC2 => "Dinf x C2",
            GroupStructure::CinfSemidirC4 => "Cinf x_s C4",
            GroupStructure::CinfxC2 => "Cinf x C2",
        }
    }

    /// The image of this group in PGL(2,Z) = GL(2,Z)/{+-1}, as a short
    /// descriptive name.
    pub fn projective_quotient(self) -> &'static str {
        match self {
            GroupStructure::FullGl2Z => "PGL(2,Z)",
            GroupStructure::C2xC2 => "C2",
            GroupStructure::C4 => "C2",
            GroupStructure::C6 => "C3",
            GroupStructure::C2xCinf => "Cinf",
            GroupStructure::D2 => "C2",
            GroupStructure::D4 => "C2 x C2",
            GroupStructure::D6 => "S3",
            GroupStructure::DinfxC2 => "Dinf",
            GroupStructure::CinfSemidirC4 => "Dinf",
            GroupStructure::CinfxC2 => "Cinf",
        }
    }
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.human())
    }
}
