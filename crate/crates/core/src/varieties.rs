//! Variety membership by checking fully linearized defining identities on
//! basis tuples, and the plus / minus / mutation functors.

use std::fmt;
use std::str::FromStr;

use crate::algebra::Algebra;
use crate::error::{check_len, Error, Result};
use crate::linalg::{is_zero_vector, sub_vectors, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarietyTag {
    Associative,
    Commutative,
    Anticommutative,
    Lie,
    Malcev,
    Jordan,
    RightAlternative,
    MinusOneOne,
    Flexible,
    NoncommutativeJordan,
    Zinbiel,
    MalcevAdmissible,
}

impl VarietyTag {
    pub const ALL: [VarietyTag; 12] = [
        VarietyTag::Associative,
        VarietyTag::Commutative,
        VarietyTag::Anticommutative,
        VarietyTag::Lie,
        VarietyTag::Malcev,
        VarietyTag::Jordan,
        VarietyTag::RightAlternative,
        VarietyTag::MinusOneOne,
        VarietyTag::Flexible,
        VarietyTag::NoncommutativeJordan,
        VarietyTag::Zinbiel,
        VarietyTag::MalcevAdmissible,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            VarietyTag::Associative => "associative",
            VarietyTag::Commutative => "commutative",
            VarietyTag::Anticommutative => "anticommutative",
            VarietyTag::Lie => "lie",
            VarietyTag::Malcev => "malcev",
            VarietyTag::Jordan => "jordan",
            VarietyTag::RightAlternative => "right_alternative",
            VarietyTag::MinusOneOne => "minus_one_one",
            VarietyTag::Flexible => "flexible",
            VarietyTag::NoncommutativeJordan => "noncommutative_jordan",
            VarietyTag::Zinbiel => "zinbiel",
            VarietyTag::MalcevAdmissible => "malcev_admissible",
        }
    }
}

impl fmt::Display for VarietyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for VarietyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VarietyTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown variety tag {s:?}") })
    }
}

/// Outcome of a membership test. `witness` is the first violating basis
/// tuple in lexicographic order, `identity` names the identity it violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyCheck {
    pub tag: VarietyTag,
    pub holds: bool,
    pub identity: Option<&'static str>,
    pub witness: Option<Vec<usize>>,
}

/// `(x, y, z) = (xy)z - x(yz)`.
pub fn associator(a: &Algebra, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vector> {
    check_len(a.dim(), x.len())?;
    check_len(a.dim(), y.len())?;
    check_len(a.dim(), z.len())?;
    Ok(assoc(a, x, y, z))
}

fn assoc(a: &Algebra, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
    sub_vectors(&a.mul(&a.mul(x, y), z), &a.mul(x, &a.mul(y, z)))
}

fn add_all(mut acc: Vector, terms: &[Vector]) -> Vector {
    for t in terms {
        for (a, b) in acc.iter_mut().zip(t) {
            *a += b;
        }
    }
    acc
}

/// Runs `identity` over all basis tuples of length `arity` in lexicographic
/// order and returns the first tuple where it does not vanish.
fn first_violation(a: &Algebra, arity: usize, identity: impl Fn(&[Vector]) -> Vector) -> Option<Vec<usize>> {
    let m = a.dim();
    let basis: Vec<Vector> = (0..m).map(|i| a.basis_vector(i)).collect();
    let mut idx = vec![0usize; arity];
    loop {
        let args: Vec<Vector> = idx.iter().map(|&i| basis[i].clone()).collect();
        if !is_zero_vector(&identity(&args)) {
            return Some(idx);
        }
        // odometer increment, last position fastest
        let mut p = arity;
        loop {
            if p == 0 {
                return None;
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < m {
                break;
            }
            idx[p] = 0;
        }
    }
}

type Identity<'a> = (&'static str, usize, Box<dyn Fn(&[Vector]) -> Vector + 'a>);

fn identities(a: &Algebra, tag: VarietyTag) -> Vec<Identity<'_>> {
    let comm: Identity = ("xy - yx", 2, Box::new(|v| sub_vectors(&a.mul(&v[0], &v[1]), &a.mul(&v[1], &v[0]))));
    // x^2 = 0 linearizes to xy + yx = 0
    let anti: Identity = (
        "xy + yx",
        2,
        Box::new(|v| add_all(a.mul(&v[0], &v[1]), &[a.mul(&v[1], &v[0])])),
    );
    let jacobi: Identity = ("J(x,y,z)", 3, Box::new(|v| a.jacobian_unchecked(&v[0], &v[1], &v[2])));
    // (x,y,y) = 0 linearizes to (x,y,z) + (x,z,y) = 0
    let right_alt: Identity = (
        "(x,y,z) + (x,z,y)",
        3,
        Box::new(|v| add_all(assoc(a, &v[0], &v[1], &v[2]), &[assoc(a, &v[0], &v[2], &v[1])])),
    );
    // (x,y,x) = 0 linearizes to (x,y,z) + (z,y,x) = 0
    let flexible: Identity = (
        "(x,y,z) + (z,y,x)",
        3,
        Box::new(|v| add_all(assoc(a, &v[0], &v[1], &v[2]), &[assoc(a, &v[2], &v[1], &v[0])])),
    );
    // (x^2,y,x) = 0: put x1,x2,x3 in the three x slots in all orders, giving
    // sum over k of (x_i x_j + x_j x_i, y, x_k) with {i,j,k} = {1,2,3}.
    // Tuple order is (x1, x2, x3, y).
    let jordan_lin: Identity = (
        "(x^2,y,x) linearized",
        4,
        Box::new(|v| {
            let y = &v[3];
            let mut acc = vec![Scalar::zero(); a.dim()];
            for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
                let s = add_all(a.mul(&v[i], &v[j]), &[a.mul(&v[j], &v[i])]);
                acc = add_all(acc, &[assoc(a, &s, y, &v[k])]);
            }
            acc
        }),
    );
    // J(x,y,[x,z]) = [J(x,y,z),x] with x -> x, w, tuple order (x, y, z, w):
    // J(x,y,[w,z]) + J(w,y,[x,z]) - [J(x,y,z),w] - [J(w,y,z),x]
    let malcev: Identity = (
        "J(x,y,[x,z]) - [J(x,y,z),x] linearized",
        4,
        Box::new(|v| {
            let (x, y, z, w) = (&v[0], &v[1], &v[2], &v[3]);
            let lhs = add_all(
                a.jacobian_unchecked(x, y, &a.mul(w, z)),
                &[a.jacobian_unchecked(w, y, &a.mul(x, z))],
            );
            let rhs = add_all(
                a.mul(&a.jacobian_unchecked(x, y, z), w),
                &[a.mul(&a.jacobian_unchecked(w, y, z), x)],
            );
            sub_vectors(&lhs, &rhs)
        }),
    );
    match tag {
        VarietyTag::Associative => {
            vec![("(x,y,z)", 3, Box::new(|v: &[Vector]| assoc(a, &v[0], &v[1], &v[2])))]
        }
        VarietyTag::Commutative => vec![comm],
        VarietyTag::Anticommutative => vec![anti],
        VarietyTag::Lie => vec![anti, jacobi],
        VarietyTag::Malcev => vec![anti, malcev],
        VarietyTag::Jordan => vec![comm, jordan_lin],
        VarietyTag::RightAlternative => vec![right_alt],
        VarietyTag::MinusOneOne => vec![
            right_alt,
            (
                "(x,y,z) + (z,x,y) + (y,z,x)",
                3,
                Box::new(|v: &[Vector]| {
                    add_all(
                        assoc(a, &v[0], &v[1], &v[2]),
                        &[assoc(a, &v[2], &v[0], &v[1]), assoc(a, &v[1], &v[2], &v[0])],
                    )
                }),
            ),
        ],
        VarietyTag::Flexible => vec![flexible],
        VarietyTag::NoncommutativeJordan => vec![flexible, jordan_lin],
        VarietyTag::Zinbiel => vec![(
            "(ab)c - a(bc + cb)",
            3,
            Box::new(|v: &[Vector]| {
                let bc = add_all(a.mul(&v[1], &v[2]), &[a.mul(&v[2], &v[1])]);
                sub_vectors(&a.mul(&a.mul(&v[0], &v[1]), &v[2]), &a.mul(&v[0], &bc))
            }),
        )],
        VarietyTag::MalcevAdmissible => unreachable!("handled through the minus algebra"),
    }
}

pub fn satisfies(a: &Algebra, tag: VarietyTag) -> VarietyCheck {
    if tag == VarietyTag::MalcevAdmissible {
        let inner = satisfies(&minus_algebra(a), VarietyTag::Malcev);
        return VarietyCheck { tag, ..inner };
    }
    for (name, arity, identity) in identities(a, tag) {
        if let Some(w) = first_violation(a, arity, identity) {
            return VarietyCheck { tag, holds: false, identity: Some(name), witness: Some(w) };
        }
    }
    VarietyCheck { tag, holds: true, identity: None, witness: None }
}

/// All tags the algebra satisfies, in declaration order.
pub fn detect(a: &Algebra) -> Vec<VarietyTag> {
    VarietyTag::ALL.into_iter().filter(|&t| satisfies(a, t).holds).collect()
}

/// `x o y = (xy + yx) / 2`.
pub fn plus_algebra(a: &Algebra) -> Algebra {
    mutation(a, &Scalar::new(1, 2)).renamed(format!("plus({})", a.name()))
}

/// `[x, y] = xy - yx`.
pub fn minus_algebra(a: &Algebra) -> Algebra {
    let m = a.dim();
    let table = (0..m)
        .map(|i| (0..m).map(|j| sub_vectors(a.product(i, j), a.product(j, i))).collect())
        .collect();
    Algebra::new(format!("minus({})", a.name()), a.labels().to_vec(), table).expect("same shape")
}

/// `x ._l y = l xy + (1 - l) yx`.
pub fn mutation(a: &Algebra, lambda: &Scalar) -> Algebra {
    let m = a.dim();
    let mu = &Scalar::one() - lambda;
    let table = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    a.product(i, j)
                        .iter()
                        .zip(a.product(j, i))
                        .map(|(p, q)| &(lambda * p) + &(&mu * q))
                        .collect()
                })
                .collect()
        })
        .collect();
    Algebra::new(format!("mutation({}, {lambda})", a.name()), a.labels().to_vec(), table).expect("same shape")
}

pub fn opposite(a: &Algebra) -> Algebra {
    mutation(a, &Scalar::zero()).renamed(format!("op({})", a.name()))
}
