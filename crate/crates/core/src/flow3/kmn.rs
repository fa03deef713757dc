//! Modulo-3-orientations of complete bipartite graphs by splitting the larger side.

use crate::multigraph::named::complete_bipartite;

use super::{FlowError, Orientation};

/// Direction bits of K_{2,2}: the 4-cycle 0 → 2 → 1 → 3 → 0.
pub const BASE_K22: [bool; 4] = [true, false, false, true];
/// K_{3,2}: vertex 3 is a source, vertex 4 a sink, every side-A vertex passes flow through.
pub const BASE_K32: [bool; 6] = [false, true, false, true, false, true];
/// K_{2,3}: vertex 0 is a source, vertex 1 a sink.
pub const BASE_K23: [bool; 6] = [true, true, true, false, false, false];
/// K_{3,3}: every edge from side A to side B.
pub const BASE_K33: [bool; 9] = [true; 9];

fn bits(m: usize, n: usize) -> Vec<bool> {
    match (m, n) {
        (2, 2) => BASE_K22.to_vec(),
        (3, 2) => BASE_K32.to_vec(),
        (2, 3) => BASE_K23.to_vec(),
        (3, 3) => BASE_K33.to_vec(),
        _ if m >= n => {
            // split side A into a block of 2 or 3 and the rest
            let a1 = if m - 3 >= 2 { 3 } else { 2 };
            let top = bits(a1, n);
            let rest = bits(m - a1, n);
            let mut out = top;
            out.extend(rest);
            out
        }
        _ => {
            let b1 = if n - 3 >= 2 { 3 } else { 2 };
            let left = bits(m, b1);
            let right = bits(m, n - b1);
            let mut out = Vec::with_capacity(m * n);
            for i in 0..m {
                out.extend_from_slice(&left[i * b1..(i + 1) * b1]);
                out.extend_from_slice(&right[i * (n - b1)..(i + 1) * (n - b1)]);
            }
            out
        }
    }
}

/// Orientation of `complete_bipartite(m, n)` with every excess ≡ 0 (mod 3).
pub fn kmn_mod3_orientation(m: usize, n: usize) -> Result<Orientation, FlowError> {
    if m < 2 || n < 2 {
        return Err(FlowError::TooSmall(m, n));
    }
    Orientation::new(complete_bipartite(m, n), bits(m, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flow3::mod3_orientation;

    #[test]
    fn bases_are_mod3() {
        for (m, n) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
            let o = kmn_mod3_orientation(m, n).unwrap();
            assert!(o.is_mod3(), "K_{m},{n}");
            assert!(mod3_orientation(&complete_bipartite(m, n)).is_some());
        }
        let k33 = kmn_mod3_orientation(3, 3).unwrap();
        assert_eq!(k33.excesses(), vec![3, 3, 3, -3, -3, -3]);
        assert!(kmn_mod3_orientation(2, 2).unwrap().excesses().iter().all(|&x| x == 0));
    }

    #[test]
    fn all_up_to_eight() {
        for m in 2..=8 {
            for n in 2..=8 {
                assert!(kmn_mod3_orientation(m, n).unwrap().is_mod3(), "K_{m},{n}");
            }
        }
    }

    #[test]
    fn rejects_small() {
        assert_eq!(kmn_mod3_orientation(1, 4), Err(FlowError::TooSmall(1, 4)));
    }
}
