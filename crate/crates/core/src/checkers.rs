//! Exhaustive decision procedures for the duo family and related structural
//! properties. Every negative verdict carries a witness, chosen as the
//! first violation in ascending index order.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::descriptor::RingDescriptor;
use crate::error::RingError;
use crate::ring::{Elem, FiniteRing};
use crate::set::ElementSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Right,
    Left,
}

/// Named elements exhibiting a violation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub roles: Vec<(String, Elem)>,
    /// The violated condition, instantiated on the witness.
    pub detail: String,
}

impl Witness {
    fn new(roles: &[(&str, Elem)], detail: String) -> Self {
        Witness {
            roles: roles.iter().map(|&(r, e)| (r.to_string(), e)).collect(),
            detail,
        }
    }

    pub fn get(&self, role: &str) -> Option<Elem> {
        self.roles.iter().find(|(r, _)| r == role).map(|&(_, e)| e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateVerdict {
    pub property: String,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub elapsed: Duration,
}

impl PredicateVerdict {
    fn timed(property: impl Into<String>, start: Instant, witness: Option<Witness>) -> Self {
        PredicateVerdict {
            property: property.into(),
            holds: witness.is_none(),
            witness,
            elapsed: start.elapsed(),
        }
    }
}

/// Elements named in violation details.
struct Show<'a>(&'a FiniteRing, Elem);

impl fmt::Display for Show<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.label(self.1))
    }
}

/// Right: `S a ⊆ a S` for every `a`. Left: `a S ⊆ S a`.
pub fn one_sided_normality(ring: &FiniteRing, subset: &ElementSet, side: Side) -> PredicateVerdict {
    normality(ring, subset, side, "normality")
}

fn normality(
    ring: &FiniteRing,
    subset: &ElementSet,
    side: Side,
    property: &str,
) -> PredicateVerdict {
    let start = Instant::now();
    let trivial = subset.iter().all(|b| b == ring.zero());
    if trivial {
        return PredicateVerdict::timed(property, start, None);
    }
    let witness = ring.elements().find_map(|a| {
        let image = ElementSet::from_members(
            ring.order(),
            subset.iter().map(|c| match side {
                Side::Right => ring.mul(a, c),
                Side::Left => ring.mul(c, a),
            }),
        );
        subset.iter().find_map(|b| {
            let p = match side {
                Side::Right => ring.mul(b, a),
                Side::Left => ring.mul(a, b),
            };
            (!image.contains(p)).then(|| {
                let detail = match side {
                    Side::Right => format!(
                        "b*a = {} but a*c != b*a for every c in the set",
                        Show(ring, p)
                    ),
                    Side::Left => format!(
                        "a*b = {} but c*a != a*b for every c in the set",
                        Show(ring, p)
                    ),
                };
                Witness::new(&[("a", a), ("b", b)], detail)
            })
        })
    });
    PredicateVerdict::timed(property, start, witness)
}

/// Both sides, right first.
fn two_sided(ring: &FiniteRing, subset: &ElementSet, property: &str) -> PredicateVerdict {
    let right = normality(ring, subset, Side::Right, property);
    if !right.holds {
        return right;
    }
    let mut left = normality(ring, subset, Side::Left, property);
    left.elapsed += right.elapsed;
    if let Some(w) = &mut left.witness {
        w.roles.push(("side".to_string(), 1));
        w.detail = format!("left: {}", w.detail);
    }
    left
}

pub fn is_right_duo(ring: &FiniteRing) -> PredicateVerdict {
    normality(
        ring,
        &ElementSet::full(ring.order()),
        Side::Right,
        "right-duo",
    )
}
pub fn is_left_duo(ring: &FiniteRing) -> PredicateVerdict {
    normality(
        ring,
        &ElementSet::full(ring.order()),
        Side::Left,
        "left-duo",
    )
}
pub fn is_right_qnil_duo(ring: &FiniteRing) -> PredicateVerdict {
    normality(ring, ring.qnil(), Side::Right, "right-qnil-duo")
}
pub fn is_left_qnil_duo(ring: &FiniteRing) -> PredicateVerdict {
    normality(ring, ring.qnil(), Side::Left, "left-qnil-duo")
}
/// Right and left qnil-duo.
pub fn is_qnil_duo(ring: &FiniteRing) -> PredicateVerdict {
    two_sided(ring, ring.qnil(), "qnil-duo")
}
pub fn is_right_unit_duo(ring: &FiniteRing) -> PredicateVerdict {
    normality(ring, ring.units(), Side::Right, "right-unit-duo")
}
pub fn is_left_unit_duo(ring: &FiniteRing) -> PredicateVerdict {
    normality(ring, ring.units(), Side::Left, "left-unit-duo")
}
pub fn is_right_nilpotent_duo(ring: &FiniteRing) -> PredicateVerdict {
    normality(ring, ring.nilpotents(), Side::Right, "right-nilpotent-duo")
}
pub fn is_left_nilpotent_duo(ring: &FiniteRing) -> PredicateVerdict {
    normality(ring, ring.nilpotents(), Side::Left, "left-nilpotent-duo")
}
pub fn is_right_normal_on_jacobson(ring: &FiniteRing) -> PredicateVerdict {
    normality(
        ring,
        ring.jacobson(),
        Side::Right,
        "right-normal-on-jacobson",
    )
}
pub fn is_left_normal_on_jacobson(ring: &FiniteRing) -> PredicateVerdict {
    normality(ring, ring.jacobson(), Side::Left, "left-normal-on-jacobson")
}

pub fn is_commutative(ring: &FiniteRing) -> PredicateVerdict {
    let start = Instant::now();
    let w = pairs(ring)
        .find(|&(a, b)| !ring.commute(a, b))
        .map(|(a, b)| {
            Witness::new(
                &[("a", a), ("b", b)],
                format!(
                    "a*b = {} != {} = b*a",
                    Show(ring, ring.mul(a, b)),
                    Show(ring, ring.mul(b, a))
                ),
            )
        });
    PredicateVerdict::timed("commutative", start, w)
}

fn pairs(ring: &FiniteRing) -> impl Iterator<Item = (Elem, Elem)> + '_ {
    ring.elements()
        .flat_map(move |a| ring.elements().map(move |b| (a, b)))
}

/// Every idempotent is central.
pub fn is_abelian(ring: &FiniteRing) -> PredicateVerdict {
    let start = Instant::now();
    let w = ring.idempotents().iter().find_map(|e| {
        ring.elements().find(|&r| !ring.commute(e, r)).map(|r| {
            Witness::new(
                &[("e", e), ("r", r)],
                format!(
                    "e*r = {} != {} = r*e",
                    Show(ring, ring.mul(e, r)),
                    Show(ring, ring.mul(r, e))
                ),
            )
        })
    });
    PredicateVerdict::timed("abelian", start, w)
}

/// `ab = 1` implies `ba = 1`.
pub fn is_directly_finite(ring: &FiniteRing) -> PredicateVerdict {
    let start = Instant::now();
    let one = ring.one();
    let w = pairs(ring)
        .find(|&(a, b)| ring.mul(a, b) == one && ring.mul(b, a) != one)
        .map(|(a, b)| {
            Witness::new(
                &[("a", a), ("b", b)],
                format!("a*b = 1 but b*a = {}", Show(ring, ring.mul(b, a))),
            )
        });
    PredicateVerdict::timed("directly-finite", start, w)
}

/// The non-units are closed under addition.
pub fn is_local(ring: &FiniteRing) -> PredicateVerdict {
    let start = Instant::now();
    let non_units = ring.units().complement();
    let w = non_units.iter().find_map(|a| {
        non_units
            .iter()
            .find(|&b| ring.is_unit(ring.add(a, b)))
            .map(|b| {
                Witness::new(
                    &[("a", a), ("b", b)],
                    format!(
                        "a, b are non-units but a+b = {} is a unit",
                        Show(ring, ring.add(a, b))
                    ),
                )
            })
    });
    PredicateVerdict::timed("local", start, w)
}

/// For each `x` some idempotent `e` has `e ∈ Rx` and `1 - e ∈ R(1 - x)`.
pub fn is_exchange(ring: &FiniteRing) -> PredicateVerdict {
    let start = Instant::now();
    let w = ring.elements().find_map(|x| {
        let rx = ring.left_multiples(x);
        let r1x = ring.left_multiples(ring.sub(ring.one(), x));
        let found = ring
            .idempotents()
            .iter()
            .any(|e| rx.contains(e) && r1x.contains(ring.sub(ring.one(), e)));
        (!found).then(|| {
            Witness::new(
                &[("x", x)],
                "no idempotent e with e in Rx and 1-e in R(1-x)".to_string(),
            )
        })
    });
    PredicateVerdict::timed("exchange", start, w)
}

/// Every element is a unit plus an idempotent.
pub fn is_clean(ring: &FiniteRing) -> PredicateVerdict {
    let start = Instant::now();
    let w = ring
        .elements()
        .find(|&x| {
            !ring
                .idempotents()
                .iter()
                .any(|e| ring.is_unit(ring.sub(x, e)))
        })
        .map(|x| {
            Witness::new(
                &[("x", x)],
                "x - e is a non-unit for every idempotent e".to_string(),
            )
        });
    PredicateVerdict::timed("clean", start, w)
}

/// `aR + bR = R` implies `a + by ∈ U` for some `y`.
///
/// `aR + bR = R` iff `1 - ar ∈ bR` for some `r`, and a suitable `y` exists
/// iff `bR` meets `U - a`.
pub fn has_stable_range_one(ring: &FiniteRing) -> PredicateVerdict {
    let start = Instant::now();
    let n = ring.order();
    let right: Vec<ElementSet> = ring.elements().map(|a| ring.right_multiples(a)).collect();
    let w = ring.elements().find_map(|a| {
        let one_minus_ar =
            ElementSet::from_members(n, right[a].iter().map(|x| ring.sub(ring.one(), x)));
        let units_minus_a =
            ElementSet::from_members(n, ring.units().iter().map(|u| ring.sub(u, a)));
        ring.elements().find_map(|b| {
            let comaximal = one_minus_ar.first_common(&right[b]).is_some();
            (comaximal && right[b].first_common(&units_minus_a).is_none()).then(|| {
                Witness::new(
                    &[("a", a), ("b", b)],
                    "aR + bR = R but a + by is a non-unit for every y".to_string(),
                )
            })
        })
    });
    PredicateVerdict::timed("stable-range-one", start, w)
}

/// Every `a` equals `aba` for some `b`.
pub fn is_regular(ring: &FiniteRing) -> PredicateVerdict {
    let start = Instant::now();
    let w = ring
        .elements()
        .find(|&a| !ring.elements().any(|b| ring.mul(ring.mul(a, b), a) == a))
        .map(|a| Witness::new(&[("a", a)], "a*b*a != a for every b".to_string()));
    PredicateVerdict::timed("regular", start, w)
}

/// Every `a` equals `a²b` for some `b`.
pub fn is_strongly_regular(ring: &FiniteRing) -> PredicateVerdict {
    let start = Instant::now();
    let w = ring
        .elements()
        .find(|&a| {
            let a2 = ring.mul(a, a);
            !ring.elements().any(|b| ring.mul(a2, b) == a)
        })
        .map(|a| Witness::new(&[("a", a)], "a*a*b != a for every b".to_string()));
    PredicateVerdict::timed("strongly-regular", start, w)
}

/// `qnil ⊆ C(R)`.
pub fn qnil_is_central(ring: &FiniteRing) -> PredicateVerdict {
    let start = Instant::now();
    let w = ring.qnil().iter().find_map(|q| {
        ring.elements().find(|&r| !ring.commute(q, r)).map(|r| {
            Witness::new(
                &[("q", q), ("r", r)],
                format!(
                    "q*r = {} != {} = r*q",
                    Show(ring, ring.mul(q, r)),
                    Show(ring, ring.mul(r, q))
                ),
            )
        })
    });
    PredicateVerdict::timed("qnil-central", start, w)
}

/// `qnil · qnil = {0}`.
pub fn qnil_square_zero(ring: &FiniteRing) -> PredicateVerdict {
    let start = Instant::now();
    let q = ring.qnil();
    let w = q.iter().find_map(|a| {
        q.iter().find(|&b| ring.mul(a, b) != ring.zero()).map(|b| {
            Witness::new(
                &[("a", a), ("b", b)],
                format!("a*b = {}", Show(ring, ring.mul(a, b))),
            )
        })
    });
    PredicateVerdict::timed("qnil-square-zero", start, w)
}

/// Outcome of the kernel test on a quasinilpotent `A = [[a,b],[c,d]]` of
/// `K_0(R)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelCheck {
    /// `xb = by` and `yc = cx` for all `x ∈ comm(a)`, `y ∈ comm(d)`.
    pub condition: PredicateVerdict,
    /// Whether `a, d ∈ qnil(R)`. Evaluated only when the condition holds.
    pub conclusion: Option<bool>,
    pub blocks: [Elem; 4],
}

pub fn k0_kernel_condition(ring: &FiniteRing, a_elem: Elem) -> Result<KernelCheck, RingError> {
    ring.check_index(a_elem)?;
    match ring.descriptor() {
        RingDescriptor::Ks { .. } => {}
        other => {
            return Err(RingError::Domain(format!(
                "{} is not a K_s ring",
                other.display_name()
            )))
        }
    }
    let base = ring.part(0);
    if base.order() * base.order() * base.order() * base.order() != ring.order() {
        return Err(RingError::Domain("unexpected K_s layout".into()));
    }
    let probe = ring
        .encode(&[base.zero(), base.one(), base.one(), base.zero()])
        .unwrap();
    if ring.mul(probe, probe) != ring.encode(&[base.zero(); 4]).unwrap() {
        return Err(RingError::Domain(
            "kernel condition applies to K_0 only".into(),
        ));
    }
    if !ring.is_qnil(a_elem) {
        return Err(RingError::Domain(format!(
            "{} is not quasinilpotent",
            ring.label(a_elem)
        )));
    }
    let start = Instant::now();
    let m = ring.decode(a_elem);
    let (a, b, c, d) = (m[0], m[1], m[2], m[3]);
    let (ca, cd) = (base.commutant(a), base.commutant(d));
    let w = ca.iter().find_map(|x| {
        cd.iter()
            .find(|&y| base.mul(x, b) != base.mul(b, y) || base.mul(y, c) != base.mul(c, x))
            .map(|y| {
                Witness::new(
                    &[("x", x), ("y", y)],
                    "x*b != b*y or y*c != c*x".to_string(),
                )
            })
    });
    let condition = PredicateVerdict::timed("k0-kernel-condition", start, w);
    let conclusion = condition.holds.then(|| base.is_qnil(a) && base.is_qnil(d));
    Ok(KernelCheck {
        condition,
        conclusion,
        blocks: [a, b, c, d],
    })
}

/// Every named property, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    RightDuo,
    LeftDuo,
    RightQnilDuo,
    LeftQnilDuo,
    QnilDuo,
    RightUnitDuo,
    LeftUnitDuo,
    RightNilpotentDuo,
    LeftNilpotentDuo,
    RightNormalOnJacobson,
    LeftNormalOnJacobson,
    Commutative,
    Abelian,
    DirectlyFinite,
    Local,
    Exchange,
    Clean,
    StableRangeOne,
    Regular,
    StronglyRegular,
    QnilCentral,
    QnilSquareZero,
}

impl Property {
    pub const ALL: [Property; 22] = [
        Property::RightDuo,
        Property::LeftDuo,
        Property::RightQnilDuo,
        Property::LeftQnilDuo,
        Property::QnilDuo,
        Property::RightUnitDuo,
        Property::LeftUnitDuo,
        Property::RightNilpotentDuo,
        Property::LeftNilpotentDuo,
        Property::RightNormalOnJacobson,
        Property::LeftNormalOnJacobson,
        Property::Commutative,
        Property::Abelian,
        Property::DirectlyFinite,
        Property::Local,
        Property::Exchange,
        Property::Clean,
        Property::StableRangeOne,
        Property::Regular,
        Property::StronglyRegular,
        Property::QnilCentral,
        Property::QnilSquareZero,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::RightDuo => "right-duo",
            Property::LeftDuo => "left-duo",
            Property::RightQnilDuo => "right-qnil-duo",
            Property::LeftQnilDuo => "left-qnil-duo",
            Property::QnilDuo => "qnil-duo",
            Property::RightUnitDuo => "right-unit-duo",
            Property::LeftUnitDuo => "left-unit-duo",
            Property::RightNilpotentDuo => "right-nilpotent-duo",
            Property::LeftNilpotentDuo => "left-nilpotent-duo",
            Property::RightNormalOnJacobson => "right-normal-on-jacobson",
            Property::LeftNormalOnJacobson => "left-normal-on-jacobson",
            Property::Commutative => "commutative",
            Property::Abelian => "abelian",
            Property::DirectlyFinite => "directly-finite",
            Property::Local => "local",
            Property::Exchange => "exchange",
            Property::Clean => "clean",
            Property::StableRangeOne => "stable-range-one",
            Property::Regular => "regular",
            Property::StronglyRegular => "strongly-regular",
            Property::QnilCentral => "qnil-central",
            Property::QnilSquareZero => "qnil-square-zero",
        }
    }

    pub fn from_name(name: &str) -> Option<Property> {
        Property::ALL.into_iter().find(|p| p.name() == name)
    }

    pub fn check(self, ring: &FiniteRing) -> PredicateVerdict {
        match self {
            Property::RightDuo => is_right_duo(ring),
            Property::LeftDuo => is_left_duo(ring),
            Property::RightQnilDuo => is_right_qnil_duo(ring),
            Property::LeftQnilDuo => is_left_qnil_duo(ring),
            Property::QnilDuo => is_qnil_duo(ring),
            Property::RightUnitDuo => is_right_unit_duo(ring),
            Property::LeftUnitDuo => is_left_unit_duo(ring),
            Property::RightNilpotentDuo => is_right_nilpotent_duo(ring),
            Property::LeftNilpotentDuo => is_left_nilpotent_duo(ring),
            Property::RightNormalOnJacobson => is_right_normal_on_jacobson(ring),
            Property::LeftNormalOnJacobson => is_left_normal_on_jacobson(ring),
            Property::Commutative => is_commutative(ring),
            Property::Abelian => is_abelian(ring),
            Property::DirectlyFinite => is_directly_finite(ring),
            Property::Local => is_local(ring),
            Property::Exchange => is_exchange(ring),
            Property::Clean => is_clean(ring),
            Property::StableRangeOne => has_stable_range_one(ring),
            Property::Regular => is_regular(ring),
            Property::StronglyRegular => is_strongly_regular(ring),
            Property::QnilCentral => qnil_is_central(ring),
            Property::QnilSquareZero => qnil_square_zero(ring),
        }
    }

    /// Re-evaluates the defining condition on `witness` without the
    /// checker's precomputed images. True iff the violation is reproduced.
    pub fn reverify(self, ring: &FiniteRing, witness: &Witness) -> bool {
        reverify(self, ring, witness).unwrap_or(false)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Unit test by inverse search.
fn raw_unit(ring: &FiniteRing, u: Elem) -> bool {
    ring.elements()
        .any(|v| ring.mul(u, v) == ring.one() && ring.mul(v, u) == ring.one())
}

/// Quasinilpotence straight from the definition, with raw unit tests.
pub fn raw_is_qnil(ring: &FiniteRing, a: Elem) -> bool {
    ring.elements()
        .filter(|&x| ring.commute(a, x))
        .all(|x| raw_unit(ring, ring.one_plus(ring.mul(a, x))))
}

fn raw_is_jacobson(ring: &FiniteRing, a: Elem) -> bool {
    ring.elements()
        .all(|x| raw_unit(ring, ring.one_plus(ring.mul(a, x))))
}

fn raw_is_nilpotent(ring: &FiniteRing, a: Elem) -> bool {
    let mut p = a;
    for _ in 0..ring.order() {
        if p == ring.zero() {
            return true;
        }
        p = ring.mul(p, a);
    }
    p == ring.zero()
}

fn reverify(p: Property, ring: &FiniteRing, w: &Witness) -> Option<bool> {
    let r = ring;
    let g = |role: &str| w.get(role).filter(|&e| e < r.order());
    let idem = |e: Elem| r.mul(e, e) == e;
    let normality = |member: &dyn Fn(Elem) -> bool, side: Side| -> Option<bool> {
        let (a, b) = (g("a")?, g("b")?);
        let target = match side {
            Side::Right => r.mul(b, a),
            Side::Left => r.mul(a, b),
        };
        let reachable = r.elements().any(|c| {
            let prod = match side {
                Side::Right => r.mul(a, c),
                Side::Left => r.mul(c, a),
            };
            prod == target && member(c)
        });
        Some(member(b) && !reachable)
    };
    let side_of = || {
        if w.get("side") == Some(1) {
            Side::Left
        } else {
            Side::Right
        }
    };
    let any = |_: Elem| true;
    let qnil = |e: Elem| raw_is_qnil(r, e);
    let unit = |e: Elem| raw_unit(r, e);
    let nil = |e: Elem| raw_is_nilpotent(r, e);
    let jac = |e: Elem| raw_is_jacobson(r, e);
    Some(match p {
        Property::RightDuo => normality(&any, Side::Right)?,
        Property::LeftDuo => normality(&any, Side::Left)?,
        Property::RightQnilDuo => normality(&qnil, Side::Right)?,
        Property::LeftQnilDuo => normality(&qnil, Side::Left)?,
        Property::QnilDuo => normality(&qnil, side_of())?,
        Property::RightUnitDuo => normality(&unit, Side::Right)?,
        Property::LeftUnitDuo => normality(&unit, Side::Left)?,
        Property::RightNilpotentDuo => normality(&nil, Side::Right)?,
        Property::LeftNilpotentDuo => normality(&nil, Side::Left)?,
        Property::RightNormalOnJacobson => normality(&jac, Side::Right)?,
        Property::LeftNormalOnJacobson => normality(&jac, Side::Left)?,
        Property::Commutative => {
            let (a, b) = (g("a")?, g("b")?);
            r.mul(a, b) != r.mul(b, a)
        }
        Property::Abelian => {
            let (e, x) = (g("e")?, g("r")?);
            idem(e) && r.mul(e, x) != r.mul(x, e)
        }
        Property::DirectlyFinite => {
            let (a, b) = (g("a")?, g("b")?);
            r.mul(a, b) == r.one() && r.mul(b, a) != r.one()
        }
        Property::Local => {
            let (a, b) = (g("a")?, g("b")?);
            !unit(a) && !unit(b) && unit(r.add(a, b))
        }
        Property::Exchange => {
            let x = g("x")?;
            let one_minus_x = r.sub(r.one(), x);
            !r.elements().filter(|&e| idem(e)).any(|e| {
                let f = r.sub(r.one(), e);
                r.elements().any(|s| r.mul(s, x) == e)
                    && r.elements().any(|t| r.mul(t, one_minus_x) == f)
            })
        }
        Property::Clean => {
            let x = g("x")?;
            !r.elements().filter(|&e| idem(e)).any(|e| unit(r.sub(x, e)))
        }
        Property::StableRangeOne => {
            let (a, b) = (g("a")?, g("b")?);
            let comaximal = pairs(r).any(|(u, v)| r.add(r.mul(a, u), r.mul(b, v)) == r.one());
            comaximal && !r.elements().any(|y| unit(r.add(a, r.mul(b, y))))
        }
        Property::Regular => {
            let a = g("a")?;
            !r.elements().any(|b| r.mul(r.mul(a, b), a) == a)
        }
        Property::StronglyRegular => {
            let a = g("a")?;
            !r.elements().any(|b| r.mul(r.mul(a, a), b) == a)
        }
        Property::QnilCentral => {
            let (q, x) = (g("q")?, g("r")?);
            qnil(q) && r.mul(q, x) != r.mul(x, q)
        }
        Property::QnilSquareZero => {
            let (a, b) = (g("a")?, g("b")?);
            qnil(a) && qnil(b) && r.mul(a, b) != r.zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::MatrixFamily;
    use crate::{build, RingDescriptor as D};

    fn m2z2() -> FiniteRing {
        build(&D::matrix(MatrixFamily::Mn, D::zn(2), 2)).unwrap()
    }

    #[test]
    fn xuxu_right_witness() {
        let r = build(&D::XuxuLocal16).unwrap();
        let v = is_right_qnil_duo(&r);
        let w = v.witness.clone().unwrap();
        assert_eq!((w.get("a"), w.get("b")), (Some(8), Some(4)));
        assert!(Property::RightQnilDuo.reverify(&r, &w));
        assert!(is_local(&r).holds);
    }

    #[test]
    fn m2z2_profile() {
        let r = m2z2();
        assert!(!is_right_qnil_duo(&r).holds);
        assert!(!is_left_qnil_duo(&r).holds);
        let ab = is_abelian(&r).witness.unwrap();
        assert_eq!((ab.get("e"), ab.get("r")), (Some(1), Some(2)));
        assert!(is_directly_finite(&r).holds);
        assert!(!is_local(&r).holds);
        assert!(is_exchange(&r).holds && is_clean(&r).holds && has_stable_range_one(&r).holds);
        assert!(is_regular(&r).holds);
        assert_eq!(is_strongly_regular(&r).witness.unwrap().get("a"), Some(2));
        assert!(!qnil_is_central(&r).holds);
    }

    #[test]
    fn residue_rings() {
        let z6 = build(&D::zn(6)).unwrap();
        for p in Property::ALL {
            let expected = !matches!(p, Property::Local);
            assert_eq!(p.check(&z6).holds, expected, "{p}");
        }
        let w = is_local(&z6).witness.unwrap();
        assert_eq!((w.get("a"), w.get("b")), (Some(2), Some(3)));
        let z4 = build(&D::zn(4)).unwrap();
        assert_eq!(is_regular(&z4).witness.unwrap().get("a"), Some(2));
        assert!(is_exchange(&z4).holds && is_clean(&z4).holds && has_stable_range_one(&z4).holds);
    }

    #[test]
    fn property_names_round_trip() {
        for p in Property::ALL {
            assert_eq!(Property::from_name(p.name()), Some(p));
        }
        assert_eq!(Property::from_name("duo-ish"), None);
    }

    #[test]
    fn kernel_condition_domain_errors() {
        let k0 = build(&D::ks(D::zn(2), 0u64)).unwrap();
        let one = k0.one();
        assert!(matches!(
            k0_kernel_condition(&k0, one),
            Err(RingError::Domain(_))
        ));
        let k1 = build(&D::ks(D::zn(2), 1u64)).unwrap();
        assert!(matches!(
            k0_kernel_condition(&k1, 0),
            Err(RingError::Domain(_))
        ));
        let diag = k0.encode(&[0, 0, 0, 0]).unwrap();
        let check = k0_kernel_condition(&k0, diag).unwrap();
        assert!(check.condition.holds);
        assert_eq!(check.conclusion, Some(true));
    }
}
