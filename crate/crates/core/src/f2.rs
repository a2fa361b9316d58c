//! Bit-packed linear algebra over `F_2`.
//!
//! The resolution engine routinely hits matrices with thousands of rows over
//! `F_2`; packing 64 entries per word makes row operations and products
//! roughly 64x cheaper than the generic dense path. These kernels are
//! internal: `mat` dispatches to them transparently when the field is `F_2`
//! and the matrix is large enough to benefit.

/// Row-major bit matrix; each row occupies `stride` words.
#[derive(Clone)]
pub(crate) struct BitMat {
    pub rows: usize,
    pub cols: usize,
    pub stride: usize,
    pub words: Vec<u64>,
}

impl BitMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(64);
        BitMat {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        }
    }

    pub fn from_entries(rows: usize, cols: usize, entries: &[u64]) -> Self {
        let mut m = BitMat::zeros(rows, cols);
        for r in 0..rows {
            let base = r * m.stride;
            for c in 0..cols {
                if entries[r * cols + c] & 1 == 1 {
                    m.words[base + (c >> 6)] |= 1u64 << (c & 63);
                }
            }
        }
        m
    }

    pub fn to_entries(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.rows * self.cols];
        for r in 0..self.rows {
            let base = r * self.stride;
            for c in 0..self.cols {
                out[r * self.cols + c] = (self.words[base + (c >> 6)] >> (c & 63)) & 1;
            }
        }
        out
    }

    #[inline]
    fn xor_rows(&mut self, dst: usize, src: usize) {
        debug_assert_ne!(dst, src);
        let stride = self.stride;
        let (d, s) = (dst * stride, src * stride);
        if d < s {
            let (head, tail) = self.words.split_at_mut(s);
            for w in 0..stride {
                head[d + w] ^= tail[w];
            }
        } else {
            let (head, tail) = self.words.split_at_mut(d);
            for w in 0..stride {
                tail[w] ^= head[s + w];
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.words.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    /// In-place reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let word = col >> 6;
            let bit = 1u64 << (col & 63);
            let mut pivot_row = None;
            for r in row..self.rows {
                if self.words[r * self.stride + word] & bit != 0 {
                    pivot_row = Some(r);
                    break;
                }
            }
            let Some(pr) = pivot_row else { continue };
            self.swap_rows(row, pr);
            for r in 0..self.rows {
                if r != row && self.words[r * self.stride + word] & bit != 0 {
                    self.xor_rows(r, row);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// `self * other` over `F_2`.
    pub fn mul(&self, other: &BitMat) -> BitMat {
        assert_eq!(self.cols, other.rows);
        let mut out = BitMat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let base = r * self.stride;
            let out_base = r * out.stride;
            for k in 0..self.cols {
                if (self.words[base + (k >> 6)] >> (k & 63)) & 1 == 1 {
                    let src = k * other.stride;
                    for w in 0..other.stride {
                        out.words[out_base + w] ^= other.words[src + w];
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pack_roundtrip() {
        let entries: Vec<u64> = (0..9).map(|i| (i % 2) as u64).collect();
        let m = BitMat::from_entries(3, 3, &entries);
        assert_eq!(m.to_entries(), entries);
    }

    #[test]
    fn rref_rank() {
        // [[1,1],[1,1]] has rank 1 over F_2
        let mut m = BitMat::from_entries(2, 2, &[1, 1, 1, 1]);
        let pivots = m.rref();
        assert_eq!(pivots, vec![0]);
        assert_eq!(m.to_entries(), vec![1, 1, 0, 0]);
    }

    #[test]
    fn mul_matches_definition() {
        let a = BitMat::from_entries(2, 3, &[1, 0, 1, 0, 1, 1]);
        let b = BitMat::from_entries(3, 2, &[1, 1, 1, 0, 0, 1]);
        let c = a.mul(&b);
        // [[1*1+0+1*0, 1*1+0+1*1],[0+1*1+0, 0+0+1*1]] = [[1,0],[1,1]]
        assert_eq!(c.to_entries(), vec![1, 0, 1, 1]);
    }
}
