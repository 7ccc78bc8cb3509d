//! Link structure of point sets over two or three axes: linked components,
//! unique linkage, and the component-based goodness criterion that
//! cross-validates the algebraic rank test.
//!
//! Two points are *linked* when a chain of set points joins them in which
//! every step changes exactly one coordinate and no two consecutive steps
//! change the same coordinate. Linkage is an equivalence relation; its
//! classes are *linked components*. A component is *uniquely linked* when
//! every pair of its points is joined by exactly one such chain.
//!
//! For two axes, a set is good iff every linked component is uniquely
//! linked, and unique linkage reduces to the component's bipartite
//! symbol/point graph being a tree. For three axes the componentwise
//! criterion is only valid on sets with a single component, so
//! [`good_via_links`] refuses multi-component three-axis inputs.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::set::{Point, PointSet};

/// Default cap on exploration steps for link enumeration.
pub const DEFAULT_PATH_BUDGET: usize = 1_000_000;

/// Errors from the link-structure layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinksError {
    /// Link structure is only defined here for 2 or 3 axes.
    UnsupportedArity(usize),
    /// The componentwise criterion is invalid for three-axis sets with more
    /// than one component.
    PreconditionViolated { components: usize },
    /// Link enumeration exceeded its exploration budget.
    ResourceLimit { budget: usize },
    /// A component selector was malformed.
    InvalidComponent(String),
    /// A claimed link path violates the chain conditions.
    InvalidPath(String),
}

impl fmt::Display for LinksError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinksError::UnsupportedArity(n) => {
                write!(f, "link structure is defined for 2 or 3 axes, got {n}")
            }
            LinksError::PreconditionViolated { components } => write!(
                f,
                "three-axis componentwise criterion needs one linked component, found {components}"
            ),
            LinksError::ResourceLimit { budget } => {
                write!(f, "link enumeration exceeded {budget} exploration steps")
            }
            LinksError::InvalidComponent(msg) => write!(f, "invalid component: {msg}"),
            LinksError::InvalidPath(msg) => write!(f, "invalid link path: {msg}"),
        }
    }
}

impl core::error::Error for LinksError {}

/// A validated link: consecutive points differ in exactly one coordinate,
/// the changing coordinate alternates, and all points are distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkPath {
    points: Vec<Point>,
}

impl LinkPath {
    pub fn new(points: Vec<Point>) -> Result<Self, LinksError> {
        if points.is_empty() {
            return Err(LinksError::InvalidPath("path has no points".into()));
        }
        let n = points[0].len();
        if points.iter().any(|p| p.len() != n) {
            return Err(LinksError::InvalidPath("points have mixed arity".into()));
        }
        for a in 0..points.len() {
            for b in a + 1..points.len() {
                if points[a] == points[b] {
                    return Err(LinksError::InvalidPath(format!(
                        "points {a} and {b} repeat"
                    )));
                }
            }
        }
        let mut last_axis: Option<usize> = None;
        for w in points.windows(2) {
            let changed: Vec<usize> = (0..n).filter(|&i| w[0][i] != w[1][i]).collect();
            let &[axis] = changed.as_slice() else {
                return Err(LinksError::InvalidPath(
                    "each step must change exactly one coordinate".into(),
                ));
            };
            if last_axis == Some(axis) {
                return Err(LinksError::InvalidPath(
                    "consecutive steps must change different coordinates".into(),
                ));
            }
            last_axis = Some(axis);
        }
        Ok(LinkPath { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Length of the link, counted in points.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// One linked component: point indices into the owning set, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    point_indices: Vec<usize>,
    uniquely_linked: bool,
}

impl Component {
    /// Indices of the component's points in the owning set.
    pub fn point_indices(&self) -> &[usize] {
        &self.point_indices
    }

    /// Whether every pair of component points is joined by exactly one link.
    pub fn uniquely_linked(&self) -> bool {
        self.uniquely_linked
    }

    pub fn len(&self) -> usize {
        self.point_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// The partition of a set into linked components, ordered by smallest point
/// index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    components: Vec<Component>,
}

impl ComponentPartition {
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Materializes a component's points from the owning set.
    pub fn component_points(&self, s: &PointSet, idx: usize) -> Vec<Point> {
        self.components[idx]
            .point_indices
            .iter()
            .map(|&j| s.point(j).clone())
            .collect()
    }
}

fn require_link_arity(s: &PointSet) -> Result<(), LinksError> {
    match s.axes() {
        2 | 3 => Ok(()),
        n => Err(LinksError::UnsupportedArity(n)),
    }
}

fn differ_in_exactly_one(s: &PointSet, a: usize, b: usize) -> Option<usize> {
    let mut changed = None;
    for i in 0..s.axes() {
        if s.coord_index(a, i) != s.coord_index(b, i) {
            if changed.is_some() {
                return None;
            }
            changed = Some(i);
        }
    }
    changed
}

/// Partitions the set into linked components and labels each with its
/// unique-linkage verdict, using the default exploration budget.
///
/// Component membership uses plain single-coordinate-step connectivity:
/// any such walk compresses to a valid alternating link by merging
/// consecutive same-coordinate steps, so reachability agrees with linkage.
pub fn linked_components(s: &PointSet) -> Result<ComponentPartition, LinksError> {
    linked_components_with_budget(s, DEFAULT_PATH_BUDGET)
}

/// [`linked_components`] with an explicit exploration budget for the
/// three-axis unique-linkage enumeration.
pub fn linked_components_with_budget(
    s: &PointSet,
    budget: usize,
) -> Result<ComponentPartition, LinksError> {
    require_link_arity(s)?;
    let k = s.len();
    let mut parent: Vec<usize> = (0..k).collect();

    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }

    for a in 0..k {
        for b in a + 1..k {
            if differ_in_exactly_one(s, a, b).is_some() {
                let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
    }

    let mut grouped: Vec<Vec<usize>> = vec![Vec::new(); k];
    for j in 0..k {
        let r = root(&mut parent, j);
        grouped[r].push(j);
    }
    let mut components = Vec::new();
    for indices in grouped.into_iter().filter(|g| !g.is_empty()) {
        let uniquely_linked = is_uniquely_linked_with_budget(s, &indices, budget)?;
        components.push(Component {
            point_indices: indices,
            uniquely_linked,
        });
    }
    Ok(ComponentPartition { components })
}

/// Decides unique linkage of one component with the default budget.
///
/// `component` must be one equivalence class as returned by
/// [`linked_components`]. For two axes this is the bipartite tree test; for
/// three axes it is exhaustive link enumeration per point pair.
pub fn is_uniquely_linked(s: &PointSet, component: &[usize]) -> Result<bool, LinksError> {
    is_uniquely_linked_with_budget(s, component, DEFAULT_PATH_BUDGET)
}

/// [`is_uniquely_linked`] with an explicit exploration budget.
pub fn is_uniquely_linked_with_budget(
    s: &PointSet,
    component: &[usize],
    budget: usize,
) -> Result<bool, LinksError> {
    require_link_arity(s)?;
    validate_component(s, component)?;
    match s.axes() {
        2 => {
            // Tree identity: the component's bipartite symbol/point graph is
            // connected, so it is acyclic iff edges = vertices - 1.
            let xs: BTreeSet<usize> = component.iter().map(|&j| s.coord_index(j, 0)).collect();
            let ys: BTreeSet<usize> = component.iter().map(|&j| s.coord_index(j, 1)).collect();
            Ok(component.len() == xs.len() + ys.len() - 1)
        }
        _ => enumerated_unique_linkage(s, component, budget),
    }
}

fn validate_component(s: &PointSet, component: &[usize]) -> Result<(), LinksError> {
    if component.is_empty() {
        return Err(LinksError::InvalidComponent("component is empty".into()));
    }
    let mut seen = BTreeSet::new();
    for &j in component {
        if j >= s.len() {
            return Err(LinksError::InvalidComponent(format!(
                "index {j} out of range"
            )));
        }
        if !seen.insert(j) {
            return Err(LinksError::InvalidComponent(format!(
                "index {j} repeats"
            )));
        }
    }
    Ok(())
}

/// Counts links between every pair of component points by exhaustive
/// alternating-path search and requires exactly one per pair. Valid for two
/// or three axes; it is the defining criterion for three and serves as an
/// independent oracle for the two-axis tree test.
pub fn enumerated_unique_linkage(
    s: &PointSet,
    component: &[usize],
    budget: usize,
) -> Result<bool, LinksError> {
    require_link_arity(s)?;
    validate_component(s, component)?;
    let mut steps = 0usize;
    for (pos_a, &a) in component.iter().enumerate() {
        for &b in component.iter().skip(pos_a + 1) {
            let mut visited = vec![false; s.len()];
            visited[a] = true;
            let mut found = 0usize;
            count_links(
                s, component, a, b, None, &mut visited, &mut found, &mut steps, budget,
            )?;
            if found != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[allow(clippy::too_many_arguments)]
fn count_links(
    s: &PointSet,
    component: &[usize],
    current: usize,
    goal: usize,
    last_axis: Option<usize>,
    visited: &mut [bool],
    found: &mut usize,
    steps: &mut usize,
    budget: usize,
) -> Result<(), LinksError> {
    if *found >= 2 {
        return Ok(());
    }
    for &next in component {
        if visited[next] {
            continue;
        }
        let Some(axis) = differ_in_exactly_one(s, current, next) else {
            continue;
        };
        if last_axis == Some(axis) {
            continue;
        }
        *steps += 1;
        if *steps > budget {
            return Err(LinksError::ResourceLimit { budget });
        }
        if next == goal {
            // A link ends the moment it reaches the goal; distinctness rules
            // out any longer chain through it.
            *found += 1;
            if *found >= 2 {
                return Ok(());
            }
            continue;
        }
        visited[next] = true;
        count_links(
            s,
            component,
            next,
            goal,
            Some(axis),
            visited,
            found,
            steps,
            budget,
        )?;
        visited[next] = false;
    }
    Ok(())
}

/// The componentwise goodness criterion.
///
/// Two axes: good iff every linked component is uniquely linked. Three axes:
/// only valid on sets with exactly one component, where good iff that
/// component is uniquely linked; multi-component three-axis input is
/// refused, since the componentwise criterion is provably wrong there.
pub fn good_via_links(s: &PointSet) -> Result<bool, LinksError> {
    good_via_links_with_budget(s, DEFAULT_PATH_BUDGET)
}

/// [`good_via_links`] with an explicit exploration budget.
pub fn good_via_links_with_budget(s: &PointSet, budget: usize) -> Result<bool, LinksError> {
    require_link_arity(s)?;
    let partition = linked_components_with_budget(s, budget)?;
    match s.axes() {
        2 => Ok(partition.components().iter().all(Component::uniquely_linked)),
        _ => {
            if partition.len() != 1 {
                return Err(LinksError::PreconditionViolated {
                    components: partition.len(),
                });
            }
            Ok(partition.components()[0].uniquely_linked())
        }
    }
}
