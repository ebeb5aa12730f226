//! Raw `u64` residue kernels for the finite-field searches. Candidates are
//! decoded from an index and filtered here; only survivors become
//! [`Scalar`](crate::exactlin::Scalar)-based values.

/// Writes the base-`p` digits of `index` into `out`, most significant first,
/// so increasing indices walk the tuples in lexicographic order.
pub(crate) fn decode(mut index: u64, p: u64, out: &mut [u64]) {
    for d in out.iter_mut().rev() {
        *d = index % p;
        index /= p;
    }
}

pub(crate) fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// `Σ_k c[i][j][k] b_k` stored as `c[(i*n+j)*n+k]`.
pub(crate) struct Tensor<'a> {
    pub n: usize,
    pub p: u64,
    pub c: &'a [u64],
}

impl Tensor<'_> {
    pub fn basis(&self, i: usize, j: usize) -> &[u64] {
        let s = (i * self.n + j) * self.n;
        &self.c[s..s + self.n]
    }

    /// `x • y` accumulated into `out`.
    pub fn product_into(&self, x: &[u64], y: &[u64], out: &mut [u64]) {
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let s = mul(xi, yj, self.p);
                for (o, &c) in out.iter_mut().zip(self.basis(i, j)) {
                    *o = (*o + mul(s, c, self.p)) % self.p;
                }
            }
        }
    }
}

/// `(x •₁ y) •₂ z` on basis elements, where `y •₁ z` may be a sum of tensors.
pub(crate) fn left_assoc(outer: &[&Tensor], inner: &[&Tensor], i: usize, j: usize, k: usize, out: &mut [u64]) {
    let n = inner[0].n;
    let p = inner[0].p;
    let mut mid = vec![0u64; n];
    for t in inner {
        for (m, &c) in mid.iter_mut().zip(t.basis(i, j)) {
            *m = (*m + c) % p;
        }
    }
    out.iter_mut().for_each(|o| *o = 0);
    for t in outer {
        for (l, &ml) in mid.iter().enumerate() {
            if ml == 0 {
                continue;
            }
            for (o, &c) in out.iter_mut().zip(t.basis(l, k)) {
                *o = (*o + mul(ml, c, p)) % p;
            }
        }
    }
}

/// `x •₂ (y •₁ z)` on basis elements.
pub(crate) fn right_assoc(outer: &[&Tensor], inner: &[&Tensor], i: usize, j: usize, k: usize, out: &mut [u64]) {
    let n = inner[0].n;
    let p = inner[0].p;
    let mut mid = vec![0u64; n];
    for t in inner {
        for (m, &c) in mid.iter_mut().zip(t.basis(j, k)) {
            *m = (*m + c) % p;
        }
    }
    out.iter_mut().for_each(|o| *o = 0);
    for t in outer {
        for (l, &ml) in mid.iter().enumerate() {
            if ml == 0 {
                continue;
            }
            for (o, &c) in out.iter_mut().zip(t.basis(i, l)) {
                *o = (*o + mul(ml, c, p)) % p;
            }
        }
    }
}

/// One identity `(x A y) B z = x C (y D z)`, each side a sum of tensors.
pub(crate) struct Identity<'a> {
    pub outer_left: Vec<&'a Tensor<'a>>,
    pub inner_left: Vec<&'a Tensor<'a>>,
    pub outer_right: Vec<&'a Tensor<'a>>,
    pub inner_right: Vec<&'a Tensor<'a>>,
}

pub(crate) fn identities_hold(ids: &[Identity], n: usize) -> bool {
    let mut l = vec![0u64; n];
    let mut r = vec![0u64; n];
    for id in ids {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    left_assoc(&id.outer_left, &id.inner_left, i, j, k, &mut l);
                    right_assoc(&id.outer_right, &id.inner_right, i, j, k, &mut r);
                    if l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Whether a square row-major matrix over `F_p` is invertible.
pub(crate) fn invertible(entries: &[u64], n: usize, p: u64) -> bool {
    let mut a = entries.to_vec();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
            return false;
        };
        if piv != col {
            for c in 0..n {
                a.swap(piv * n + c, col * n + c);
            }
        }
        let inv = pow(a[col * n + col], p - 2, p);
        for r in col + 1..n {
            let f = mul(a[r * n + col], inv, p);
            if f == 0 {
                continue;
            }
            for c in col..n {
                let sub = mul(f, a[col * n + c], p);
                a[r * n + c] = (a[r * n + c] + p - sub) % p;
            }
        }
    }
    true
}

fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, b, p);
        }
        b = mul(b, b, p);
        e >>= 1;
    }
    acc
}

/// `M v` for row-major `M`.
pub(crate) fn mat_vec(m: &[u64], v: &[u64], p: u64, out: &mut [u64]) {
    let n = v.len();
    for (r, o) in out.iter_mut().enumerate() {
        let mut acc = 0;
        for c in 0..n {
            acc = (acc + mul(m[r * n + c], v[c], p)) % p;
        }
        *o = acc;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_is_lexicographic() {
        let mut d = [0u64; 3];
        decode(5, 2, &mut d);
        assert_eq!(d, [1, 0, 1]);
    }

    #[test]
    fn gl2_f3_has_48_elements() {
        let mut d = [0u64; 4];
        let count = (0..81)
            .filter(|&i| {
                decode(i, 3, &mut d);
                invertible(&d, 2, 3)
            })
            .count();
        assert_eq!(count, 48);
    }
}
