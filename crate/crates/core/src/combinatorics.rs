//! Compositions of an integer into positive parts.

/// Iterator over compositions `k_1 + ... + k_n = k` with every `k_j >= 1`,
/// in lexicographic order.
#[derive(Debug, Clone)]
pub struct Compositions {
    parts: Vec<u64>,
    done: bool,
}

impl Compositions {
    pub fn new(k: u64, n: usize) -> Self {
        if n == 0 || k < n as u64 {
            return Compositions {
                parts: Vec::new(),
                done: true,
            };
        }
        let mut parts = vec![1; n];
        parts[n - 1] = k - (n as u64 - 1);
        Compositions { parts, done: false }
    }
}

impl Iterator for Compositions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let current = self.parts.clone();
        let n = self.parts.len();
        // rightmost i < n-1 whose suffix can give up one unit
        let mut suffix = self.parts[n - 1];
        let mut advanced = false;
        for i in (0..n.saturating_sub(1)).rev() {
            let slots = (n - 1 - i) as u64;
            if suffix > slots {
                self.parts[i] += 1;
                let rest = suffix - 1;
                for p in &mut self.parts[i + 1..n - 1] {
                    *p = 1;
                }
                self.parts[n - 1] = rest - (slots - 1);
                advanced = true;
                break;
            }
            suffix += self.parts[i];
        }
        if !advanced {
            self.done = true;
        }
        Some(current)
    }
}

/// Every composition of `k` into `n` positive parts.
pub fn compositions(k: u64, n: usize) -> Compositions {
    Compositions::new(k, n)
}
