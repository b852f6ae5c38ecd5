//! Reference curves used throughout the tests and examples.

/// A cubic with a triple point at `(1, 1)` whose tropical curve has the
/// collinear vertices `(-2,0)`, `(1,0)`, `(4,0)`.
///
/// The `x³` coefficient is `t²`, so that monomial has height `-2`.
pub const TRIPLE_POINT: &str = "t^-3 x y^3 - (3t^-3 + t^-2) x y^2 + (3t^-3 + 2t^-2 - 2t^-1) x y \
    - (t^-3 + t^-2 - 2t^-1 - 3) x + t^-2 x^2 y^2 - (2t^-2 - t^-1) x^2 y + (t^-2 - t^-1 - 3) x^2 \
    + t^-1 y - (t^-1 + 1) + x^3 + (t^2 - 1)(x - 1)^3";

/// The same curve with a constant `x³` coefficient; the third vertex moves
/// to `(2, 0)`.
pub const TRIPLE_POINT_FLAT_CUBE: &str = "t^-3 x y^3 - (3t^-3 + t^-2) x y^2 + (3t^-3 + 2t^-2 - 2t^-1) x y \
    - (t^-3 + t^-2 - 2t^-1 - 3) x + t^-2 x^2 y^2 - (2t^-2 - t^-1) x^2 y + (t^-2 - t^-1 - 3) x^2 \
    + t^-1 y - (t^-1 + 1) + x^3";

/// Square of a curve through `(1, 1)` with the triangle `(0,0), (2,4),
/// (4,2)` as Newton polygon; a 4-fold point at a trivalent vertex.
pub const SHARP_TRIANGLE: &str = "(1 - 3x y + x y^2 + x^2 y)^2";

/// `(x - 1)(y - 1)²`: a triple point on a curve of lattice width one.
pub const THIN_RECTANGLE: &str = "(x - 1)(y - 1)^2";
