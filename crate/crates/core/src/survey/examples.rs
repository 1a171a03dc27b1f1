use serde::Serialize;

use crate::elliptic::{
    c_curve, curves_isomorphic, example1_curve, example2_curve, ProjectivePoint, WeierstrassCurve,
};
use crate::Result;

pub const EXAMPLE1_POINT: &str =
    "51362438166007626829703:-4948233782238353787199293:5697234033382001683";
pub const EXAMPLE2_POINT: &str = "-99184162:21162527913:10648";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExampleCheck {
    pub n: u64,
    pub p: u64,
    pub model: WeierstrassCurve,
    pub point: ProjectivePoint,
    /// `(N/p) = −1`, so `C(N,p)` is defined.
    pub twist_defined: bool,
    pub isomorphic: bool,
    pub on_curve: bool,
    /// No multiple up to the Mazur bound is the identity.
    pub nontorsion: bool,
}

impl ExampleCheck {
    pub fn passed(&self) -> bool {
        self.twist_defined && self.isomorphic && self.on_curve && self.nontorsion
    }
}

/// Checks a printed model and point against the twist `C(N,p)`.
pub fn check_example(
    n: u64,
    p: u64,
    model: WeierstrassCurve,
    point: ProjectivePoint,
) -> ExampleCheck {
    let twist = c_curve(n, p);
    let on_curve = model.on_curve(&point);
    let nontorsion = on_curve && matches!(model.is_torsion(&point), Ok(false));
    ExampleCheck {
        n,
        p,
        twist_defined: twist.is_ok(),
        isomorphic: twist.is_ok_and(|t| curves_isomorphic(&t, &model)),
        on_curve,
        nontorsion,
        model,
        point,
    }
}

/// The two worked examples: a point of infinite order on `C(11,4079)` and
/// on `C(19,5591)`.
pub fn verify_examples() -> Result<Vec<ExampleCheck>> {
    Ok(vec![
        check_example(
            11,
            4079,
            example1_curve(),
            ProjectivePoint::parse(EXAMPLE1_POINT)?,
        ),
        check_example(
            19,
            5591,
            example2_curve(),
            ProjectivePoint::parse(EXAMPLE2_POINT)?,
        ),
    ])
}
