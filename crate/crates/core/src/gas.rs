//! Generalized approximation spaces `(X, Y, F)` with `F: X -> P(Y)`, and
//! (strong) set-valued morphisms between finite algebras.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::{classify, product_set, Label};
use crate::{Error, FiniteAlgebra, Partition, RelationPairs, Result, Subset, Verdict};

/// A total map from `{0..nX-1}` to subsets of `{0..nY-1}`. Images may be
/// empty unless built with [`SetValuedMap::serial`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SetValuedMap {
    target: usize,
    images: Vec<Subset>,
}

impl SetValuedMap {
    pub fn new(target: usize, images: Vec<Subset>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidOrder {
                n: 0,
                max: crate::MAX_ORDER,
            });
        }
        if let Some(img) = images.iter().find(|s| s.universe() != target) {
            return Err(Error::SizeMismatch {
                expected: target,
                found: img.universe(),
            });
        }
        Ok(Self { target, images })
    }

    /// Like [`new`](Self::new) but rejects empty images.
    pub fn serial(target: usize, images: Vec<Subset>) -> Result<Self> {
        if let Some(element) = images.iter().position(Subset::is_empty) {
            return Err(Error::EmptyImage { element });
        }
        Self::new(target, images)
    }

    /// `x ↦ {x}`
    pub fn identity(n: usize) -> Self {
        Self {
            target: n,
            images: (0..n).map(|x| Subset::singleton(n, x)).collect(),
        }
    }

    pub fn constant(source: usize, image: Subset) -> Self {
        Self {
            target: image.universe(),
            images: vec![image; source],
        }
    }

    /// `x ↦ [x]`
    pub fn from_partition(p: &Partition) -> Self {
        Self {
            target: p.order(),
            images: (0..p.order()).map(|x| p.class_of(x)).collect(),
        }
    }

    pub fn source_order(&self) -> usize {
        self.images.len()
    }

    pub fn target_order(&self) -> usize {
        self.target
    }

    pub fn image(&self, x: usize) -> Subset {
        self.images[x]
    }

    pub fn images(&self) -> &[Subset] {
        &self.images
    }

    fn check_target(&self, a: &Subset) {
        assert_eq!(a.universe(), self.target, "subset is not over the target carrier");
    }

    /// `{ x | F(x) ⊆ A }`. Elements with an empty image are always included.
    pub fn lower(&self, a: &Subset) -> Subset {
        self.check_target(a);
        self.select(|img| img.is_subset(a))
    }

    /// `{ x | F(x) ∩ A ≠ ∅ }`
    pub fn upper(&self, a: &Subset) -> Subset {
        self.check_target(a);
        self.select(|img| img.intersects(a))
    }

    fn select(&self, keep: impl Fn(&Subset) -> bool) -> Subset {
        let mut out = Subset::empty(self.source_order());
        for (x, img) in self.images.iter().enumerate() {
            if keep(img) {
                out.insert(x);
            }
        }
        out
    }

    /// The graph `{ (x, y) | y ∈ F(x) }`.
    pub fn induced_relation(&self) -> RelationPairs {
        RelationPairs::from_successors(self.target, self.images.clone())
    }

    /// Every map from a carrier of `source` elements into subsets of a
    /// `target`-element carrier, in lexicographic order of image bitmasks.
    /// There are `2^(source*target)` of them.
    pub fn enumerate(source: usize, target: usize) -> impl Iterator<Item = SetValuedMap> {
        let per = 1u64 << target;
        let total = per.pow(source as u32);
        (0..total).map(move |mut code| {
            let mut images = vec![Subset::empty(target); source];
            for img in images.iter_mut().rev() {
                *img = Subset::from_bits(target, code % per);
                code /= per;
            }
            SetValuedMap { target, images }
        })
    }
}

/// Which inclusion of `F(x)*F(y)` against `F(x*y)` fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Direction {
    /// `element ∈ F(x)*F(y)` but not in `F(x*y)`.
    ProductNotInImage,
    /// `element ∈ F(x*y)` but not in `F(x)*F(y)`.
    ImageNotInProduct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MorphismWitness {
    pub x: usize,
    pub y: usize,
    pub element: usize,
    pub direction: Direction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MorphismReport {
    pub strong: bool,
    pub verdict: Verdict<MorphismWitness>,
    pub source_labels: BTreeSet<Label>,
    pub target_labels: BTreeSet<Label>,
}

impl MorphismReport {
    pub fn holds(&self) -> bool {
        self.verdict.holds()
    }
}

/// `F(x) * F(y) ⊆ F(x * y)` for all `x, y`; products in the target.
pub fn is_sv_morphism(
    map: &SetValuedMap,
    source: &FiniteAlgebra,
    target: &FiniteAlgebra,
) -> Result<MorphismReport> {
    morphism(map, source, target, false)
}

/// `F(x) * F(y) = F(x * y)` for all `x, y`.
pub fn is_strong_sv_morphism(
    map: &SetValuedMap,
    source: &FiniteAlgebra,
    target: &FiniteAlgebra,
) -> Result<MorphismReport> {
    morphism(map, source, target, true)
}

fn morphism(
    map: &SetValuedMap,
    source: &FiniteAlgebra,
    target: &FiniteAlgebra,
    strong: bool,
) -> Result<MorphismReport> {
    for (expected, found) in [
        (source.order(), map.source_order()),
        (target.order(), map.target_order()),
    ] {
        if expected != found {
            return Err(Error::SizeMismatch { expected, found });
        }
    }
    let n = source.order();
    let mut witness = None;
    'outer: for x in 0..n {
        for y in 0..n {
            let prod = product_set(target, &map.image(x), &map.image(y));
            let img = map.image(source.op(x, y));
            if let Some(element) = (prod - img).first() {
                witness = Some(MorphismWitness {
                    x,
                    y,
                    element,
                    direction: Direction::ProductNotInImage,
                });
                break 'outer;
            }
            if strong {
                if let Some(element) = (img - prod).first() {
                    witness = Some(MorphismWitness {
                        x,
                        y,
                        element,
                        direction: Direction::ImageNotInProduct,
                    });
                    break 'outer;
                }
            }
        }
    }
    Ok(MorphismReport {
        strong,
        verdict: witness.into(),
        source_labels: classify(source),
        target_labels: classify(target),
    })
}
