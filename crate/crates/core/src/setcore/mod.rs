//! Ground sets, finite topologies and the constructions built on them.

mod enumerate;
mod fixtures;
mod homeo;
mod json;
mod pointset;
mod space;

pub use enumerate::{count_topologies, enumerate_topologies, MAX_ENUM_POINTS};
pub use fixtures::{disjoint_sum, fixture, left_ray, particular_point, right_ray, FIXTURE_NAMES};
pub use homeo::{canonical_key, find_homeomorphism, homeomorphisms, is_homogeneous, Homeomorphism};
pub use json::{NamedSpace, SpaceFile};
pub use pointset::{PointSet, Points, Subsets};
pub use space::{
    product, product_point, subspace, validate_topology, FiniteSpace, MAX_POINTS, MAX_PRODUCT_POINTS,
};
pub(crate) use space::check_in_range;
