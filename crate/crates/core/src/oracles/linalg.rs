//! Row-reduced spans over `F_p`.

/// A subspace of `F_p^n` kept in reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Span {
    p: u32,
    n: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

fn inv_mod(a: u32, p: u32) -> u32 {
    (1..p).find(|&x| a * x % p == 1).expect("nonzero residue")
}

impl Span {
    pub fn new(p: u32, n: usize) -> Self {
        Span { p, n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical remainder of `v` modulo the span.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let k = v[c];
            if k != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = (*x + (p - k) * r) % p;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        debug_assert_eq!(v.len(), self.n);
        let p = self.p;
        let mut v = self.reduce(v);
        let Some(c) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let k = inv_mod(v[c], p);
        v.iter_mut().for_each(|x| *x = *x * k % p);
        for row in &mut self.rows {
            let a = row[c];
            if a != 0 {
                for (x, &r) in row.iter_mut().zip(&v) {
                    *x = (*x + (p - a) * r) % p;
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(c);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_is_canonical() {
        let mut s = Span::new(3, 3);
        assert!(s.insert(&[1, 2, 0]));
        assert!(s.insert(&[0, 1, 1]));
        assert!(!s.insert(&[1, 0, 1]));
        assert_eq!(s.dim(), 2);
        let a = s.reduce(&[0, 0, 1]);
        let b = s.reduce(&[1, 2, 1]);
        assert_eq!(a, b);
        assert!(s.contains(&[2, 1, 0]));
    }
}
