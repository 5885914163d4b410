//! Standard permutation realizations of the groups used throughout.
//!
//! Naming follows the group-spec grammar: `dihedral(n)` is the symmetry
//! group of the n-gon and has order `2n`, so `D4` is the dihedral group of
//! order 8.

use crate::error::{GroupError, Result};
use crate::group::{Group, OrderGuard};
use crate::perm::Permutation;

/// Largest prime accepted by the prime-parameterized families.
pub const MAX_PRIME: u64 = 31;

fn perm(images: impl IntoIterator<Item = usize>) -> Permutation {
    Permutation::from_images(images).expect("construction produces bijections")
}

fn check_prime(p: u64) -> Result<usize> {
    if p > MAX_PRIME || !crate::series::is_prime(p as usize) {
        return Err(GroupError::NotPrime(p));
    }
    Ok(p as usize)
}

fn check_positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(GroupError::InvalidArgument(format!("{what} needs n >= 1")))
    } else {
        Ok(())
    }
}

/// Cyclic group of order `n` acting regularly on `n` points.
pub fn cyclic(n: usize, guard: OrderGuard) -> Result<Group> {
    check_positive(n, "cyclic")?;
    guard.check(n)?;
    let gens = if n == 1 {
        Vec::new()
    } else {
        vec![perm((0..n).map(|i| (i + 1) % n))]
    };
    Group::from_generators(format!("C{n}"), n, gens, guard)
}

/// Dihedral group of order `2n`. For `n = 1, 2` the n-gon action is not
/// faithful, so `D1 = C2` on two points and `D2` is the Klein four-group on
/// four points.
pub fn dihedral(n: usize, guard: OrderGuard) -> Result<Group> {
    check_positive(n, "dihedral")?;
    guard.check_product(&[2, n])?;
    let name = format!("D{n}");
    match n {
        1 => Group::from_generators(name, 2, vec![perm([1, 0])], guard),
        2 => Group::from_generators(name, 4, vec![perm([1, 0, 3, 2]), perm([2, 3, 0, 1])], guard),
        _ => {
            let rotation = perm((0..n).map(|i| (i + 1) % n));
            let reflection = perm((0..n).map(|i| (n - i) % n));
            Group::from_generators(name, n, vec![rotation, reflection], guard)
        }
    }
}

pub fn symmetric(n: usize, guard: OrderGuard) -> Result<Group> {
    check_positive(n, "symmetric")?;
    let mut order = 1usize;
    for k in 1..=n {
        order = order
            .checked_mul(k)
            .ok_or(GroupError::OrderGuardExceeded { limit: guard.0 })?;
        guard.check(order)?;
    }
    let name = format!("S{n}");
    let gens = match n {
        1 => Vec::new(),
        2 => vec![perm([1, 0])],
        _ => vec![
            perm((0..n).map(|i| match i {
                0 => 1,
                1 => 0,
                _ => i,
            })),
            perm((0..n).map(|i| (i + 1) % n)),
        ],
    };
    Group::from_generators(name, n, gens, guard)
}

/// Quaternion units.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quat {
    One = 0,
    I = 1,
    J = 2,
    K = 3,
}

/// `(negated, unit)` of the product of two units.
fn unit_mul(u: usize, v: usize) -> (bool, usize) {
    const T: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    T[u][v]
}

/// Elements `±u` are encoded as `4·sign + unit`.
fn quaternion_table() -> Vec<Vec<usize>> {
    (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (neg, w) = unit_mul(x % 4, y % 4);
                    let sign = (x / 4) ^ (y / 4) ^ neg as usize;
                    sign * 4 + w
                })
                .collect()
        })
        .collect()
}

/// Quaternion group of order 8, in its regular representation.
pub fn quaternion8() -> Group {
    Group::from_cayley_table("Q8", &quaternion_table(), &[Quat::I as usize, Quat::J as usize], OrderGuard(8))
        .expect("Q8 fits any guard of 8")
}

/// Id of `±u` in a group built by [`quaternion8`].
pub fn quaternion_id(g: &Group, negated: bool, u: Quat) -> usize {
    let t = quaternion_table();
    let e = 4 * negated as usize + u as usize;
    g.element_of(&perm((0..8).map(|x| t[x][e])))
        .expect("quaternion element lies in Q8")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtraspecialType {
    /// `p^{1+2}_+`: exponent `p` for odd `p`, the dihedral group for `p = 2`.
    Plus,
    /// `p^{1+2}_-`: exponent `p²` for odd `p`, the quaternion group for `p = 2`.
    Minus,
}

/// Nonabelian group of order `p³` with center of order `p`.
///
/// For odd `p` the `+` type is the Heisenberg group acting on `F_p²` by
/// `(x, y) ↦ (x + a, y + b·x + c)`, and the `−` type is the group of maps
/// `x ↦ (1 + p)^k·x + t` on `Z/p²`.
pub fn extraspecial(p: u64, kind: ExtraspecialType, guard: OrderGuard) -> Result<Group> {
    let p = check_prime(p)?;
    guard.check_product(&[p, p, p])?;
    let sign = match kind {
        ExtraspecialType::Plus => '+',
        ExtraspecialType::Minus => '-',
    };
    let name = format!("ES({p},{sign})");
    if p == 2 {
        return Ok(match kind {
            ExtraspecialType::Plus => dihedral(4, guard)?,
            ExtraspecialType::Minus => quaternion8(),
        }
        .with_name(name));
    }
    let n = p * p;
    match kind {
        ExtraspecialType::Plus => {
            let point = |x: usize, y: usize| (x % p) * p + (y % p);
            let shift = perm((0..n).map(|i| point(i / p + 1, i % p)));
            let shear = perm((0..n).map(|i| point(i / p, i % p + i / p)));
            Group::from_generators(name, n, vec![shift, shear], guard)
        }
        ExtraspecialType::Minus => {
            let translate = perm((0..n).map(|x| (x + 1) % n));
            let scale = perm((0..n).map(|x| x * (1 + p) % n));
            Group::from_generators(name, n, vec![translate, scale], guard)
        }
    }
}

/// `G × H` on the disjoint union of the two point sets.
pub fn direct_product(g: &Group, h: &Group, guard: OrderGuard) -> Result<Group> {
    guard.check_product(&[g.order(), h.order()])?;
    let degree = g.degree() + h.degree();
    let gens = g
        .generators()
        .iter()
        .map(|s| s.embed(0, degree))
        .chain(h.generators().iter().map(|s| s.embed(g.degree(), degree)))
        .collect();
    Group::from_generators(format!("{} x {}", g.name(), h.name()), degree, gens, guard)
}

/// Regular wreath product `base wr C_n`: `n` copies of `base` on disjoint
/// blocks, with an `n`-cycle rotating the blocks.
pub fn wreath_cyclic(base: &Group, n: usize, guard: OrderGuard) -> Result<Group> {
    check_positive(n, "wreath")?;
    let mut factors = vec![base.order(); n];
    factors.push(n);
    guard.check_product(&factors)?;
    let d = base.degree();
    let degree = d * n;
    let mut gens: Vec<Permutation> = base.generators().iter().map(|s| s.embed(0, degree)).collect();
    if n > 1 {
        gens.push(perm((0..degree).map(|i| (i + d) % degree)));
    }
    Group::from_generators(format!("wr({},{n})", base.name()), degree, gens, guard)
}

fn primitive_root(p: usize) -> usize {
    (1..p)
        .find(|&r| {
            let mut x = r;
            let mut k = 1;
            while x != 1 {
                x = x * r % p;
                k += 1;
            }
            k == p - 1
        })
        .expect("every prime has a primitive root")
}

/// `AGL(1, p)`: the maps `x ↦ a·x + b` on `F_p`, `a ≠ 0`; order `p(p − 1)`.
pub fn affine_prime(p: u64, guard: OrderGuard) -> Result<Group> {
    let p = check_prime(p)?;
    guard.check_product(&[p, p - 1])?;
    let translate = perm((0..p).map(|x| (x + 1) % p));
    let mut gens = vec![translate];
    if p > 2 {
        let r = primitive_root(p);
        gens.push(perm((0..p).map(|x| x * r % p)));
    }
    Group::from_generators(format!("AGL1({p})"), p, gens, guard)
}

/// Id of the translation `x ↦ x + 1` in [`affine_prime`].
pub fn affine_translation(g: &Group) -> usize {
    let p = g.degree();
    g.element_of(&perm((0..p).map(|x| (x + 1) % p)))
        .expect("translation lies in AGL(1,p)")
}
