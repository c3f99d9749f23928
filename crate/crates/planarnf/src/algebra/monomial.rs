use std::fmt;

/// Coordinate direction in the plane; doubles as the vector component
/// index of a monomial vector field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    pub fn other(self) -> Axis {
        match self {
            Axis::X => Axis::Y,
            Axis::Y => Axis::X,
        }
    }
}

/// A monomial vector field `x^{exp_x} y^{exp_y} ∂_component`.
///
/// The grade of a monomial of total degree `d` is `d - 1`, so the homogeneous
/// slice of grade `k` consists of monomials of total degree `k + 1`; grade 0
/// is the linear part and brackets add grades.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VecMonomial {
    pub exp_x: u32,
    pub exp_y: u32,
    pub component: Axis,
}

impl VecMonomial {
    pub fn new(exp_x: u32, exp_y: u32, component: Axis) -> Self {
        VecMonomial {
            exp_x,
            exp_y,
            component,
        }
    }

    pub fn degree(&self) -> u32 {
        self.exp_x + self.exp_y
    }

    pub fn grade(&self) -> i64 {
        self.degree() as i64 - 1
    }

    /// All monomials of one grade, components ordered x-first, exponents by
    /// descending `exp_x`.
    pub fn basis_of_grade(grade: i64) -> Vec<VecMonomial> {
        assert!(grade >= -1, "grade below -1 has no monomials");
        let degree = (grade + 1) as u32;
        let mut out = Vec::with_capacity(2 * (degree as usize + 1));
        for component in [Axis::X, Axis::Y] {
            for exp_x in (0..=degree).rev() {
                out.push(VecMonomial::new(exp_x, degree - exp_x, component));
            }
        }
        out
    }
}

impl fmt::Display for VecMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (sym, e) in [("x", self.exp_x), ("y", self.exp_y)] {
            match e {
                0 => {}
                1 => {
                    if wrote {
                        write!(f, " ")?;
                    }
                    write!(f, "{sym}")?;
                    wrote = true;
                }
                _ => {
                    if wrote {
                        write!(f, " ")?;
                    }
                    write!(f, "{sym}^{e}")?;
                    wrote = true;
                }
            }
        }
        if !wrote {
            write!(f, "1")?;
        }
        match self.component {
            Axis::X => write!(f, " dx"),
            Axis::Y => write!(f, " dy"),
        }
    }
}
