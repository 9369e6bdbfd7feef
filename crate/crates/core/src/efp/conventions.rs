//! Contour orientations and the overall sign of the integral.
//!
//! For a contour around a point `p` and `f` with a pole there,
//! `(1 / 2πi) ∮ f dz` equals `+Res_p f` anticlockwise and `-Res_p f`
//! clockwise. Around the origin the residue of `z^(-r) A(z)`, with `A`
//! analytic, is the coefficient of `z^(r-1)` in `A`.
//!
//! The integrand carries a prefactor `(-1)^s` in front of the `s` contour
//! integrals. Every sign in this module comes from these constants.

/// Direction of one integration contour.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Anticlockwise,
    Clockwise,
}

impl Orientation {
    /// Multiplier turning a residue into the normalised contour integral.
    pub fn sign(self) -> i32 {
        match self {
            Orientation::Anticlockwise => 1,
            Orientation::Clockwise => -1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Orientation::Anticlockwise => Orientation::Clockwise,
            Orientation::Clockwise => Orientation::Anticlockwise,
        }
    }
}

/// Contours around `z = 0` used for the emptiness formation probability.
pub const ORIGIN_CONTOUR: Orientation = Orientation::Anticlockwise;

/// Contours around `z = 1` used for the unit integral.
pub const UNIT_CONTOUR: Orientation = Orientation::Clockwise;

/// Sign in front of the `s`-fold integral.
pub fn prefactor_sign(s: usize) -> i32 {
    if s.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Total sign for `s` contours of the given orientation.
pub fn total_sign(s: usize, orientation: Orientation) -> i32 {
    let per = orientation.sign();
    prefactor_sign(s) * if s.is_multiple_of(2) { 1 } else { per }
}
