//! Named example spaces shared across the test suites.
//!
//! | name        | ground      | opens                                        |
//! |-------------|-------------|----------------------------------------------|
//! | `SIERP`     | `{0,1}`     | `∅, {0}, X`                                  |
//! | `CONE3`     | `{0,1,2}`   | `∅, {0}, X`                                  |
//! | `PP3`       | `{0,1,2}`   | `∅, {0,1}, X` (point 2 is the extra point)   |
//! | `DOUBLEPT3` | `{0,1,2}`   | `∅, {0}, {1}, {0,1}, X`                      |
//! | `DISC_n`    | `n` points  | every subset                                 |
//! | `INDISC_n`  | `n` points  | `∅, X`                                       |
//! | `LRAY_n`    | `n` points  | initial segments `[0,k)`                     |
//! | `RRAY_n`    | `n` points  | final segments `[k,n)`                       |
//! | `PP_n`      | `n` points  | `∅, {0..n-2}, X`                             |
//! | `T28FIX6`   | `{0..5}`    | disjoint sum of `CONE3` on `{0,1,2}` and the chain `∅,{3},{3,4},{3,4,5}` |

use super::pointset::PointSet;
use super::space::{validate_topology, FiniteSpace};
use crate::error::{Result, TopoError};

/// Names accepted by [`fixture`]; `_n` entries take a size suffix.
pub const FIXTURE_NAMES: &[&str] = &[
    "SIERP", "CONE3", "PP3", "DOUBLEPT3", "T28FIX6", "DISC_n", "INDISC_n", "LRAY_n", "RRAY_n", "PP_n",
];

fn sets(n: usize, families: &[&[usize]]) -> Result<FiniteSpace> {
    let opens: Vec<PointSet> = families
        .iter()
        .map(|f| PointSet::from_points(f.iter().copied()))
        .collect();
    validate_topology(n, &opens)
}

pub fn left_ray(n: usize) -> Result<FiniteSpace> {
    let opens: Vec<_> = (0..=n).map(PointSet::full).collect();
    validate_topology(n, &opens)
}

pub fn right_ray(n: usize) -> Result<FiniteSpace> {
    let full = PointSet::full(n);
    let opens: Vec<_> = (0..=n).map(|k| full - PointSet::full(k)).collect();
    validate_topology(n, &opens)
}

/// `A ∪ {p}` with `A = {0..n-2}` open and `p = n-1`.
pub fn particular_point(n: usize) -> Result<FiniteSpace> {
    if n == 0 {
        return Err(TopoError::BadSize("particular-point space needs a point".into()));
    }
    validate_topology(n, &[PointSet::EMPTY, PointSet::full(n - 1), PointSet::full(n)])
}

/// Disjoint sum; the points of `b` follow those of `a`.
pub fn disjoint_sum(a: &FiniteSpace, b: &FiniteSpace) -> Result<FiniteSpace> {
    let shift = a.n();
    let family = a
        .opens()
        .iter()
        .copied()
        .chain(b.opens().iter().map(|u| PointSet::from_bits(u.bits() << shift)));
    FiniteSpace::generated_by(a.n() + b.n(), family)
}

fn sized(name: &str, prefix: &str) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    let rest = rest.strip_prefix('_').unwrap_or(rest);
    rest.parse().ok()
}

/// Looks up a fixture by name (case-insensitive).
pub fn fixture(name: &str) -> Result<FiniteSpace> {
    let upper = name.to_ascii_uppercase();
    match upper.as_str() {
        "SIERP" => sets(2, &[&[], &[0], &[0, 1]]),
        "CONE3" => sets(3, &[&[], &[0], &[0, 1, 2]]),
        "PP3" => particular_point(3),
        "DOUBLEPT3" => sets(3, &[&[], &[0], &[1], &[0, 1], &[0, 1, 2]]),
        "T28FIX6" => {
            let chain = sets(3, &[&[], &[0], &[0, 1], &[0, 1, 2]])?;
            disjoint_sum(&fixture("CONE3")?, &chain)
        }
        _ => {
            // Longer prefixes first so INDISC is not read as DISC.
            if let Some(n) = sized(&upper, "INDISC") {
                FiniteSpace::indiscrete(n)
            } else if let Some(n) = sized(&upper, "DISC") {
                FiniteSpace::discrete(n)
            } else if let Some(n) = sized(&upper, "LRAY") {
                left_ray(n)
            } else if let Some(n) = sized(&upper, "RRAY") {
                right_ray(n)
            } else if let Some(n) = sized(&upper, "PP") {
                particular_point(n)
            } else {
                Err(TopoError::UnknownFixture(name.to_string()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(points: &[usize]) -> PointSet {
        PointSet::from_points(points.iter().copied())
    }

    #[test]
    fn catalog_entries() {
        assert_eq!(fixture("SIERP").unwrap().opens(), &[ps(&[]), ps(&[0]), ps(&[0, 1])]);
        assert_eq!(
            fixture("DOUBLEPT3").unwrap().opens(),
            &[ps(&[]), ps(&[0]), ps(&[1]), ps(&[0, 1]), ps(&[0, 1, 2])]
        );
        assert_eq!(
            fixture("LRAY4").unwrap().opens(),
            &[ps(&[]), ps(&[0]), ps(&[0, 1]), ps(&[0, 1, 2]), ps(&[0, 1, 2, 3])]
        );
        assert_eq!(
            fixture("RRAY_3").unwrap().opens(),
            &[ps(&[]), ps(&[2]), ps(&[1, 2]), ps(&[0, 1, 2])]
        );
        assert_eq!(fixture("PP3").unwrap().opens(), &[ps(&[]), ps(&[0, 1]), ps(&[0, 1, 2])]);
        assert_eq!(fixture("disc_2").unwrap().opens().len(), 4);
        assert_eq!(fixture("INDISC3").unwrap().opens().len(), 2);
    }

    #[test]
    fn t28_fixture_is_a_disjoint_sum() {
        let s = fixture("T28FIX6").unwrap();
        assert_eq!(s.n(), 6);
        assert_eq!(s.opens().len(), 3 * 4);
        assert_eq!(s.nbhd(1), ps(&[0, 1, 2]));
        assert_eq!(s.nbhd(5), ps(&[3, 4, 5]));
    }

    #[test]
    fn unknown_names_fail() {
        assert_eq!(
            fixture("MOEBIUS"),
            Err(TopoError::UnknownFixture("MOEBIUS".into()))
        );
        assert!(matches!(fixture("DISC_40"), Err(TopoError::GroundTooLarge { .. })));
    }
}
