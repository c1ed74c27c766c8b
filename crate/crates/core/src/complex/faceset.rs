use std::fmt;

use super::poset::{FaceId, FacePoset};

/// A subset of the faces of a [`FacePoset`].
///
/// Topologically a face set stands for the union of the relative interiors
/// of its members, so it is usually not closed. The `upward_closed` flag is
/// recomputed on every construction and never trusted from the caller.
#[derive(Clone)]
pub struct FaceSet<'a> {
    parent: &'a FacePoset,
    mask: Vec<bool>,
    upward_closed: bool,
}

impl<'a> FaceSet<'a> {
    pub fn new(parent: &'a FacePoset, faces: impl IntoIterator<Item = FaceId>) -> Self {
        let mut mask = vec![false; parent.len()];
        for f in faces {
            mask[f.0] = true;
        }
        Self::from_mask(parent, mask)
    }

    pub fn from_mask(parent: &'a FacePoset, mask: Vec<bool>) -> Self {
        assert_eq!(mask.len(), parent.len(), "mask length must match parent");
        let upward_closed = check_upward_closed(parent, &mask);
        FaceSet {
            parent,
            mask,
            upward_closed,
        }
    }

    pub fn empty(parent: &'a FacePoset) -> Self {
        Self::new(parent, std::iter::empty())
    }

    /// Every non-empty face, i.e. `|X|` itself.
    pub fn all_nonempty(parent: &'a FacePoset) -> Self {
        Self::new(parent, parent.nonempty_faces())
    }

    pub fn parent(&self) -> &'a FacePoset {
        self.parent
    }

    pub fn contains(&self, f: FaceId) -> bool {
        self.mask.get(f.0).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.iter().any(|&m| m)
    }

    pub fn is_upward_closed(&self) -> bool {
        self.upward_closed
    }

    /// Members in increasing id order (hence by dimension).
    pub fn iter(&self) -> impl Iterator<Item = FaceId> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(FaceId(i)))
    }

    pub fn faces(&self) -> Vec<FaceId> {
        self.iter().collect()
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    /// `self ∖ other`.
    pub fn difference(&self, other: &FaceSet<'_>) -> FaceSet<'a> {
        let mask = self
            .mask
            .iter()
            .zip(&other.mask)
            .map(|(&a, &b)| a && !b)
            .collect();
        Self::from_mask(self.parent, mask)
    }

    pub fn union(&self, other: &FaceSet<'_>) -> FaceSet<'a> {
        let mask = self.mask.iter().zip(&other.mask).map(|(&a, &b)| a || b).collect();
        Self::from_mask(self.parent, mask)
    }

    /// True when the set is a subcomplex: closed under taking faces, with the
    /// empty face treated as implicitly present.
    pub fn is_downward_closed(&self) -> bool {
        self.iter()
            .all(|f| self.parent.down(f).iter().all(|&g| g.0 == 0 || self.contains(g)))
    }

    pub fn labels(&self) -> Vec<&str> {
        self.iter().map(|f| self.parent.label(f)).collect()
    }
}

fn check_upward_closed(parent: &FacePoset, mask: &[bool]) -> bool {
    parent
        .faces()
        .filter(|f| mask[f.0])
        .all(|f| parent.up(f).iter().all(|g| mask[g.0]))
}

impl fmt::Debug for FaceSet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FaceSet")
            .field("faces", &self.labels())
            .field("upward_closed", &self.upward_closed)
            .finish()
    }
}

impl PartialEq for FaceSet<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask && (std::ptr::eq(self.parent, other.parent) || self.parent == other.parent)
    }
}
