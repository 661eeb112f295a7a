use rayon::prelude::*;

use super::{Elem, FiniteRing, RingDescriptor};
use crate::error::{Error, Result};

fn check_cap(what: &'static str, size: u128, cap: usize) -> Result<usize> {
    if size > cap as u128 {
        Err(Error::SizeCap { what, size, cap })
    } else {
        Ok(size as usize)
    }
}

/// Fills a row-major `size x size` table in parallel.
fn table(size: usize, f: impl Fn(usize, usize) -> u32 + Sync) -> Vec<u32> {
    let mut out = vec![0u32; size * size];
    out.par_chunks_mut(size).enumerate().for_each(|(a, row)| {
        for (b, slot) in row.iter_mut().enumerate() {
            *slot = f(a, b);
        }
    });
    out
}

pub fn zmod(n: u32) -> Result<FiniteRing> {
    zmod_capped(n, crate::caps::DEFAULT_SIZE_CAP)
}

pub(crate) fn zmod_capped(n: u32, cap: usize) -> Result<FiniteRing> {
    if n == 0 {
        return Err(Error::Descriptor {
            path: "n".into(),
            reason: "modulus must be at least 1".into(),
        });
    }
    let size = check_cap("Z/n", n as u128, cap)?;
    let m = n as u64;
    let add = table(size, |a, b| ((a as u64 + b as u64) % m) as u32);
    let mul = table(size, |a, b| ((a as u64 * b as u64) % m) as u32);
    FiniteRing::assemble(size, add, mul, 0, 1 % size, RingDescriptor::Zmod { n }, None)
}

/// Writes `base^{digits.len()}` tuples in mixed-radix form, first digit most significant.
struct Digits {
    radix: usize,
    width: usize,
}

impl Digits {
    fn decode(&self, mut index: usize, out: &mut [u32]) {
        for slot in out.iter_mut().rev() {
            *slot = (index % self.radix) as u32;
            index /= self.radix;
        }
    }

    fn encode(&self, digits: impl Iterator<Item = u32>) -> u32 {
        digits.fold(0usize, |acc, d| acc * self.radix + d as usize) as u32
    }

    fn all(&self, size: usize) -> Vec<u32> {
        let mut flat = vec![0u32; size * self.width];
        for (i, chunk) in flat.chunks_mut(self.width.max(1)).enumerate().take(size) {
            self.decode(i, chunk);
        }
        flat
    }
}

fn term_label(base: &FiniteRing, coeff: Elem, i: usize, j: usize, n: usize) -> String {
    let unit = if n <= 9 {
        format!("e{}{}", i + 1, j + 1)
    } else {
        format!("e{},{}", i + 1, j + 1)
    };
    if coeff == base.one() {
        return unit;
    }
    let c = base.label(coeff);
    if c.chars().all(|ch| ch.is_ascii_alphanumeric()) {
        format!("{c}{unit}")
    } else {
        format!("({c}){unit}")
    }
}

/// Checks that `mask` is an `n x n` 0/1 array containing the diagonal and
/// closed under matrix-unit products, reporting the first offending entry.
fn validate_mask(n: usize, mask: &[Vec<u8>]) -> Result<()> {
    let err = |path: String, reason: &str| Err(Error::Descriptor { path, reason: reason.into() });
    if mask.len() != n {
        return err("mask".into(), "mask must have n rows");
    }
    for (i, row) in mask.iter().enumerate() {
        if row.len() != n {
            return err(format!("mask[{i}]"), "mask rows must have n entries");
        }
        for (j, &v) in row.iter().enumerate() {
            if v > 1 {
                return err(format!("mask[{i}][{j}]"), "mask entries must be 0 or 1");
            }
        }
        if row[i] != 1 {
            return err(format!("mask[{i}][{i}]"), "mask must contain the diagonal");
        }
    }
    for i in 0..n {
        for j in 0..n {
            if mask[i][j] == 1 {
                continue;
            }
            if let Some(k) = (0..n).find(|&k| mask[i][k] == 1 && mask[k][j] == 1) {
                return err(
                    format!("mask[{i}][{j}]"),
                    &format!("mask is not multiplicatively closed: positions ({i},{k}) and ({k},{j}) are set"),
                );
            }
        }
    }
    Ok(())
}

/// Subring of `n x n` matrices over `base` supported on the positions set in
/// `mask`. Elements are numbered by the row-major tuple of free entries,
/// first entry most significant.
pub fn pattern_ring(base: &FiniteRing, n: usize, mask: &[Vec<u8>], cap: usize) -> Result<FiniteRing> {
    let descriptor = RingDescriptor::Pattern {
        n,
        base: Box::new(base.descriptor().clone()),
        mask: mask.to_vec(),
    };
    patterned(base, n, mask, cap, descriptor)
}

pub fn matrix_ring(base: &FiniteRing, n: usize, cap: usize) -> Result<FiniteRing> {
    let descriptor = RingDescriptor::Matrix {
        n,
        base: Box::new(base.descriptor().clone()),
    };
    let mask = vec![vec![1u8; n]; n];
    patterned(base, n, &mask, cap, descriptor)
}

fn patterned(
    base: &FiniteRing,
    n: usize,
    mask: &[Vec<u8>],
    cap: usize,
    descriptor: RingDescriptor,
) -> Result<FiniteRing> {
    if n == 0 {
        return Err(Error::Descriptor {
            path: "n".into(),
            reason: "matrix dimension must be at least 1".into(),
        });
    }
    validate_mask(n, mask)?;
    let positions: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| mask[i][j] == 1)
        .collect();
    let width = positions.len();
    let what = "matrix ring";
    let size = (base.size() as u128)
        .checked_pow(width as u32)
        .map_or(Err(Error::SizeCap { what, size: u128::MAX, cap }), |s| check_cap(what, s, cap))?;
    let slot = |i: usize, j: usize| positions.iter().position(|&p| p == (i, j));
    // For each free position (i,j), the pairs of free positions (i,k),(k,j).
    let terms: Vec<Vec<(usize, usize)>> = positions
        .iter()
        .map(|&(i, j)| (0..n).filter_map(|k| Some((slot(i, k)?, slot(k, j)?))).collect())
        .collect();
    let digits = Digits { radix: base.size(), width };
    let decoded = digits.all(size);
    let entry = |x: usize, p: usize| Elem(decoded[x * width + p]);

    let add = table(size, |a, b| {
        digits.encode((0..width).map(|p| base.add(entry(a, p), entry(b, p)).0))
    });
    let mul = table(size, |a, b| {
        digits.encode(terms.iter().map(|ts| {
            ts.iter()
                .fold(base.zero(), |acc, &(pa, pb)| base.add(acc, base.mul(entry(a, pa), entry(b, pb))))
                .0
        }))
    });
    let one = digits.encode(positions.iter().map(|&(i, j)| if i == j { base.one().0 } else { base.zero().0 }));
    let zero = digits.encode(positions.iter().map(|_| base.zero().0));
    let labels = (0..size)
        .map(|x| {
            let parts: Vec<String> = positions
                .iter()
                .enumerate()
                .filter(|&(p, _)| entry(x, p) != base.zero())
                .map(|(p, &(i, j))| term_label(base, entry(x, p), i, j, n))
                .collect();
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join("+")
            }
        })
        .collect();
    FiniteRing::assemble(size, add, mul, zero as usize, one as usize, descriptor, Some(labels))
}

/// Direct product; elements are tuples in lexicographic order of factor indices.
pub fn product_ring(factors: &[FiniteRing], cap: usize) -> Result<FiniteRing> {
    if factors.is_empty() {
        return Err(Error::Descriptor {
            path: "factors".into(),
            reason: "a product needs at least one factor".into(),
        });
    }
    let what = "product ring";
    let size = factors
        .iter()
        .try_fold(1u128, |acc, f| acc.checked_mul(f.size() as u128))
        .map_or(Err(Error::SizeCap { what, size: u128::MAX, cap }), |s| check_cap(what, s, cap))?;
    let width = factors.len();
    let decode = |mut x: usize| {
        let mut out = vec![0u32; width];
        for (slot, f) in out.iter_mut().zip(factors).rev() {
            *slot = (x % f.size()) as u32;
            x /= f.size();
        }
        out
    };
    let encode = |ds: &mut dyn Iterator<Item = u32>| {
        ds.zip(factors).fold(0usize, |acc, (d, f)| acc * f.size() + d as usize) as u32
    };
    let decoded: Vec<Vec<u32>> = (0..size).map(decode).collect();
    let combine = |op: fn(&FiniteRing, Elem, Elem) -> Elem| {
        table(size, |a, b| {
            let mut it = factors
                .iter()
                .enumerate()
                .map(|(k, f)| op(f, Elem(decoded[a][k]), Elem(decoded[b][k])).0);
            encode(&mut it)
        })
    };
    let add = combine(FiniteRing::add);
    let mul = combine(FiniteRing::mul);
    let zero = encode(&mut factors.iter().map(|f| f.zero().0));
    let one = encode(&mut factors.iter().map(|f| f.one().0));
    let labels = decoded
        .iter()
        .map(|ds| {
            let parts: Vec<&str> = ds.iter().zip(factors).map(|(&d, f)| f.label(Elem(d))).collect();
            format!("({})", parts.join(", "))
        })
        .collect();
    let descriptor = RingDescriptor::Product {
        factors: factors.iter().map(|f| f.descriptor().clone()).collect(),
    };
    FiniteRing::assemble(size, add, mul, zero as usize, one as usize, descriptor, Some(labels))
}

/// The corner ring `eRe` together with the position of each of its
/// elements in the ambient ring.
#[derive(Debug, Clone)]
pub struct Corner {
    pub ring: FiniteRing,
    /// `embedding[i]` is the element of the ambient ring that corner
    /// element `i` stands for. Corner elements are numbered in ascending
    /// order of these representatives.
    pub embedding: Vec<Elem>,
}

impl Corner {
    /// Corner element represented by ambient element `x`, if `x = exe`.
    pub fn pull_back(&self, x: Elem) -> Option<Elem> {
        self.embedding.binary_search(&x).ok().map(|i| Elem(i as u32))
    }
}

pub fn corner_ring(ring: &FiniteRing, e: Elem) -> Result<Corner> {
    if e.index() >= ring.size() {
        return Err(Error::OutOfRange { index: e.index(), size: ring.size() });
    }
    if !ring.is_idempotent(e) {
        return Err(Error::NotIdempotent(e.index()));
    }
    let mut members: Vec<Elem> = ring.elements().map(|r| ring.mul(ring.mul(e, r), e)).collect();
    members.sort_unstable();
    members.dedup();
    let size = members.len();
    let pos = |x: Elem| members.binary_search(&x).expect("corner ring is closed") as u32;
    let add = table(size, |a, b| pos(ring.add(members[a], members[b])));
    let mul = table(size, |a, b| pos(ring.mul(members[a], members[b])));
    let labels = members.iter().map(|&x| ring.label(x).to_string()).collect();
    let descriptor = RingDescriptor::Corner {
        base: Box::new(ring.descriptor().clone()),
        idempotent: e.0,
    };
    let corner = FiniteRing::assemble(
        size,
        add,
        mul,
        pos(ring.zero()) as usize,
        pos(e) as usize,
        descriptor,
        Some(labels),
    )?;
    Ok(Corner { ring: corner, embedding: members })
}

/// Same carrier and addition, multiplication reversed.
pub fn opposite_ring(ring: &FiniteRing) -> FiniteRing {
    let n = ring.size();
    let mul = table(n, |a, b| ring.mul_table()[b * n + a]);
    FiniteRing {
        size: n,
        add: ring.add.clone(),
        mul,
        neg: ring.neg.clone(),
        zero: ring.zero,
        one: ring.one,
        descriptor: RingDescriptor::Opposite {
            base: Box::new(ring.descriptor().clone()),
        },
        labels: ring.labels.clone(),
    }
}
