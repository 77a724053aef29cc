use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Presentation {
    /// Generators `k^{±1}, e, f`.
    Chevalley,
    /// Generators `x^{±1}, y, z`.
    Equitable,
}

impl Presentation {
    pub fn generators(self) -> [GenSymbol; 4] {
        match self {
            Presentation::Chevalley => [GenSymbol::K, GenSymbol::KInv, GenSymbol::E, GenSymbol::F],
            Presentation::Equitable => [GenSymbol::X, GenSymbol::XInv, GenSymbol::Y, GenSymbol::Z],
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Presentation::Chevalley => "chevalley",
            Presentation::Equitable => "equitable",
        })
    }
}

/// A generator of either presentation. The presentation tag is implied by the
/// variant, so a symbol can never disagree with its presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenSymbol {
    K,
    KInv,
    E,
    F,
    X,
    XInv,
    Y,
    Z,
}

impl GenSymbol {
    pub const ALL: [GenSymbol; 8] = [
        GenSymbol::K,
        GenSymbol::KInv,
        GenSymbol::E,
        GenSymbol::F,
        GenSymbol::X,
        GenSymbol::XInv,
        GenSymbol::Y,
        GenSymbol::Z,
    ];

    pub fn presentation(self) -> Presentation {
        match self {
            GenSymbol::K | GenSymbol::KInv | GenSymbol::E | GenSymbol::F => Presentation::Chevalley,
            _ => Presentation::Equitable,
        }
    }

    /// Canonical text name as used by the parser and printer.
    pub fn name(self) -> &'static str {
        match self {
            GenSymbol::K => "k",
            GenSymbol::KInv => "k^-1",
            GenSymbol::E => "e",
            GenSymbol::F => "f",
            GenSymbol::X => "x",
            GenSymbol::XInv => "x^-1",
            GenSymbol::Y => "y",
            GenSymbol::Z => "z",
        }
    }

    /// Looks up a bare atom name (`k`, `e`, `f`, `x`, `y`, `z`).
    pub fn from_atom(name: &str, presentation: Presentation) -> Option<GenSymbol> {
        let g = match name {
            "k" => GenSymbol::K,
            "e" => GenSymbol::E,
            "f" => GenSymbol::F,
            "x" => GenSymbol::X,
            "y" => GenSymbol::Y,
            "z" => GenSymbol::Z,
            _ => return None,
        };
        (g.presentation() == presentation).then_some(g)
    }

    /// Looks up a canonical name, including `k^-1` and `x^-1`.
    pub fn from_name(name: &str) -> Option<GenSymbol> {
        GenSymbol::ALL.into_iter().find(|g| g.name() == name)
    }

    /// `k` and `x` (and their inverses) are the only invertible generators.
    pub fn inverse(self) -> Option<GenSymbol> {
        match self {
            GenSymbol::K => Some(GenSymbol::KInv),
            GenSymbol::KInv => Some(GenSymbol::K),
            GenSymbol::X => Some(GenSymbol::XInv),
            GenSymbol::XInv => Some(GenSymbol::X),
            _ => None,
        }
    }

    pub fn is_invertible(self) -> bool {
        self.inverse().is_some()
    }

    pub fn is_inverse_symbol(self) -> bool {
        matches!(self, GenSymbol::KInv | GenSymbol::XInv)
    }
}

impl fmt::Display for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
