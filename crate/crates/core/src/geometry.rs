//! Paths and regions in the s-plane.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::ComplexPoint;

/// A directed line segment from `start` to `end`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub start: ComplexPoint,
    pub end: ComplexPoint,
}

impl Segment {
    pub fn new(start: ComplexPoint, end: ComplexPoint) -> Result<Self> {
        if start == end {
            return Err(Error::Domain(format!("degenerate segment at {start}")));
        }
        Ok(Self { start, end })
    }

    pub fn from_complex(a: Complex64, b: Complex64) -> Result<Self> {
        Self::new(ComplexPoint::from_complex(a)?, ComplexPoint::from_complex(b)?)
    }

    pub fn reversed(&self) -> Self {
        Self {
            start: self.end,
            end: self.start,
        }
    }

    pub fn length(&self) -> f64 {
        (self.end.as_complex() - self.start.as_complex()).norm()
    }

    /// The point a fraction `u` of the way along; exact at u = 0 and u = 1.
    pub fn point_at(&self, u: f64) -> Complex64 {
        let a = self.start.as_complex();
        let b = self.end.as_complex();
        if u == 1.0 {
            b
        } else {
            a + (b - a) * u
        }
    }
}

/// Closed rectangle [σ_min, σ_max] × [t_min, t_max].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rectangle {
    pub sigma_min: f64,
    pub sigma_max: f64,
    pub t_min: f64,
    pub t_max: f64,
}

impl Rectangle {
    /// A rectangle with non-empty interior.
    pub fn new(sigma_min: f64, sigma_max: f64, t_min: f64, t_max: f64) -> Result<Self> {
        let r = Self::closed(sigma_min, sigma_max, t_min, t_max)?;
        if sigma_min == sigma_max || t_min == t_max {
            return Err(Error::Domain(format!(
                "rectangle [{sigma_min},{sigma_max}]x[{t_min},{t_max}] has empty interior"
            )));
        }
        Ok(r)
    }

    /// Like [`Rectangle::new`] but allows zero width or height, for grids
    /// that may collapse to a line or a single point.
    pub fn closed(sigma_min: f64, sigma_max: f64, t_min: f64, t_max: f64) -> Result<Self> {
        let all_finite = [sigma_min, sigma_max, t_min, t_max].iter().all(|x| x.is_finite());
        if !all_finite || sigma_min > sigma_max || t_min > t_max {
            return Err(Error::Domain(format!(
                "malformed rectangle [{sigma_min},{sigma_max}]x[{t_min},{t_max}]"
            )));
        }
        Ok(Self {
            sigma_min,
            sigma_max,
            t_min,
            t_max,
        })
    }

    pub fn corners(&self) -> [Complex64; 4] {
        [
            Complex64::new(self.sigma_min, self.t_min),
            Complex64::new(self.sigma_max, self.t_min),
            Complex64::new(self.sigma_max, self.t_max),
            Complex64::new(self.sigma_min, self.t_max),
        ]
    }

    /// Bottom, right, top, left: the boundary traversed counterclockwise.
    pub fn edges(&self) -> Result<[Segment; 4]> {
        let c = self.corners();
        Ok([
            Segment::from_complex(c[0], c[1])?,
            Segment::from_complex(c[1], c[2])?,
            Segment::from_complex(c[2], c[3])?,
            Segment::from_complex(c[3], c[0])?,
        ])
    }

    pub fn width(&self) -> f64 {
        self.sigma_max - self.sigma_min
    }

    pub fn height(&self) -> f64 {
        self.t_max - self.t_min
    }

    pub fn center(&self) -> Complex64 {
        Complex64::new(0.5 * (self.sigma_min + self.sigma_max), 0.5 * (self.t_min + self.t_max))
    }

    pub fn contains(&self, z: Complex64) -> bool {
        z.re >= self.sigma_min && z.re <= self.sigma_max && z.im >= self.t_min && z.im <= self.t_max
    }

    /// Split by the horizontal line at height `t` into (lower, upper).
    pub fn split_at_t(&self, t: f64) -> Result<(Self, Self)> {
        Ok((
            Self::new(self.sigma_min, self.sigma_max, self.t_min, t)?,
            Self::new(self.sigma_min, self.sigma_max, t, self.t_max)?,
        ))
    }

    /// Split by the vertical line at abscissa `sigma` into (left, right).
    pub fn split_at_sigma(&self, sigma: f64) -> Result<(Self, Self)> {
        Ok((
            Self::new(self.sigma_min, sigma, self.t_min, self.t_max)?,
            Self::new(sigma, self.sigma_max, self.t_min, self.t_max)?,
        ))
    }
}

/// Closed disk |s − center| ≤ radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Disk {
    pub center: ComplexPoint,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: ComplexPoint, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::Domain(format!("disk radius must be positive, got {radius}")));
        }
        Ok(Self { center, radius })
    }

    /// Allows radius 0, where the boundary collapses to the center.
    pub fn closed(center: ComplexPoint, radius: f64) -> Result<Self> {
        if !(radius >= 0.0 && radius.is_finite()) {
            return Err(Error::Domain(format!("disk radius must be non-negative, got {radius}")));
        }
        Ok(Self { center, radius })
    }

    /// Boundary point at angle `theta`.
    pub fn point_at(&self, theta: f64) -> Complex64 {
        self.center.as_complex() + Complex64::from_polar(self.radius, theta)
    }

    /// `n` equally spaced boundary points starting at angle 0.
    pub fn boundary_samples(&self, n: usize) -> Vec<Complex64> {
        (0..n).map(|j| self.point_at(TAU * j as f64 / n as f64)).collect()
    }

    pub fn contains(&self, z: Complex64) -> bool {
        (z - self.center.as_complex()).norm() <= self.radius
    }

    pub fn bounding_box(&self) -> Result<Rectangle> {
        let c = self.center.as_complex();
        Rectangle::new(
            c.re - self.radius,
            c.re + self.radius,
            c.im - self.radius,
            c.im + self.radius,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rectangle_validation() {
        assert!(Rectangle::new(0.0, 1.0, 30.0, 0.0).is_err());
        assert!(Rectangle::new(0.0, 0.0, 0.0, 1.0).is_err());
        assert!(Rectangle::closed(2.0, 2.0, 0.0, 0.0).is_ok());
        assert!(Rectangle::new(0.0, f64::NAN, 0.0, 1.0).is_err());
    }

    #[test]
    fn edges_close_up() {
        let r = Rectangle::new(-1.0, 2.0, 3.0, 5.0).unwrap();
        let e = r.edges().unwrap();
        for j in 0..4 {
            assert_eq!(e[j].end, e[(j + 1) % 4].start);
        }
        assert_eq!(e[0].point_at(1.0), Complex64::new(2.0, 3.0));
    }

    #[test]
    fn segment_and_disk() {
        let a = ComplexPoint::new(0.0, 0.0).unwrap();
        assert!(Segment::new(a, a).is_err());
        let d = Disk::new(a, 2.0).unwrap();
        assert!(Disk::new(a, 0.0).is_err());
        assert!(Disk::closed(a, 0.0).is_ok());
        let pts = d.boundary_samples(8);
        assert!(pts.iter().all(|p| (p.norm() - 2.0).abs() < 1e-15));
        assert!(d.contains(Complex64::new(1.0, 1.0)));
    }
}
