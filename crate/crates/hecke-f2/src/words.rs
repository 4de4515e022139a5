//! Packed bit helpers shared by the series, polynomial and matrix types.
//! Bit `i` lives in word `i / 64` at position `i % 64`.

#[inline]
pub fn nwords(bits: usize) -> usize {
    bits.div_ceil(64)
}

#[inline]
pub fn get(w: &[u64], i: usize) -> bool {
    w.get(i / 64).is_some_and(|x| (x >> (i % 64)) & 1 == 1)
}

#[inline]
pub fn set(w: &mut [u64], i: usize, v: bool) {
    let m = 1u64 << (i % 64);
    if v {
        w[i / 64] |= m;
    } else {
        w[i / 64] &= !m;
    }
}

#[inline]
pub fn flip(w: &mut [u64], i: usize) {
    w[i / 64] ^= 1u64 << (i % 64);
}

/// Clear every bit at index >= `len`.
pub fn mask_tail(w: &mut [u64], len: usize) {
    let full = len / 64;
    let rem = len % 64;
    if full < w.len() {
        if rem != 0 {
            w[full] &= (1u64 << rem) - 1;
            w[full + 1..].iter_mut().for_each(|x| *x = 0);
        } else {
            w[full..].iter_mut().for_each(|x| *x = 0);
        }
    }
}

pub fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

/// `dst ^= src << shift`, dropping whatever falls off the end of `dst`.
pub fn xor_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let ws = shift / 64;
    let bs = shift % 64;
    if ws >= dst.len() {
        return;
    }
    if bs == 0 {
        for (d, s) in dst[ws..].iter_mut().zip(src) {
            *d ^= *s;
        }
    } else {
        let mut carry = 0u64;
        for (k, s) in src.iter().enumerate() {
            let j = ws + k;
            if j >= dst.len() {
                return;
            }
            dst[j] ^= (s << bs) | carry;
            carry = s >> (64 - bs);
        }
        let j = ws + src.len();
        if j < dst.len() {
            dst[j] ^= carry;
        }
    }
}

/// Index of the lowest set bit, if any.
pub fn lowest(w: &[u64]) -> Option<usize> {
    w.iter()
        .enumerate()
        .find(|(_, x)| **x != 0)
        .map(|(k, x)| k * 64 + x.trailing_zeros() as usize)
}

/// Index of the highest set bit, if any.
pub fn highest(w: &[u64]) -> Option<usize> {
    w.iter()
        .enumerate()
        .rev()
        .find(|(_, x)| **x != 0)
        .map(|(k, x)| k * 64 + 63 - x.leading_zeros() as usize)
}

pub fn ones(w: &[u64]) -> impl Iterator<Item = usize> + '_ {
    w.iter().enumerate().flat_map(|(k, &x)| {
        let mut x = x;
        std::iter::from_fn(move || {
            if x == 0 {
                None
            } else {
                let t = x.trailing_zeros() as usize;
                x &= x - 1;
                Some(k * 64 + t)
            }
        })
    })
}

pub fn parity_and(a: &[u64], b: &[u64]) -> bool {
    a.iter()
        .zip(b)
        .fold(0u32, |acc, (x, y)| acc ^ (x & y).count_ones())
        & 1
        == 1
}

pub fn is_zero(w: &[u64]) -> bool {
    w.iter().all(|x| *x == 0)
}

/// Carry-less product of two bit strings, truncated to `len` bits.
pub fn clmul_trunc(a: &[u64], b: &[u64], len: usize) -> Vec<u64> {
    let mut out = vec![0u64; nwords(len)];
    for i in ones(a) {
        if i >= len {
            break;
        }
        xor_shifted(&mut out, b, i);
    }
    mask_tail(&mut out, len);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifted_xor_crosses_words() {
        let mut d = vec![0u64; 3];
        xor_shifted(&mut d, &[1u64 << 63 | 1], 70);
        assert!(get(&d, 70));
        assert!(get(&d, 133));
        assert_eq!(ones(&d).collect::<Vec<_>>(), vec![70, 133]);
    }

    #[test]
    fn tail_mask_and_scans() {
        let mut w = vec![!0u64; 2];
        mask_tail(&mut w, 65);
        assert_eq!(highest(&w), Some(64));
        assert_eq!(lowest(&[0, 4]), Some(66));
    }

    #[test]
    fn clmul_small() {
        // (1 + x)(1 + x) = 1 + x^2
        assert_eq!(clmul_trunc(&[3], &[3], 10), vec![5]);
        assert_eq!(clmul_trunc(&[3], &[3], 2), vec![1]);
    }
}
