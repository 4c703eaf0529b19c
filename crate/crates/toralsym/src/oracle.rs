//! Brute-force reference implementations, independent of the structural
//! machinery, used by property tests and for reproducing derived example
//! values. Exhaustive by construction, no early exits; outputs are sorted
//! canonically and duplicate-free.
//!
//! The scans run in i64 internally, which covers every entry-bounded sweep
//! these oracles exist for (inputs must fit in i64).

use crate::dynamics::TorusPoint;
use crate::mat::{Int, Mat2};
use crate::par::{par_flat_map, seq_flat_map};

fn to_i64(m: &Mat2) -> [i64; 4] {
    m.to_i64s().expect("oracle inputs must have i64-sized entries")
}

fn det(a: &[i64; 4]) -> i64 {
    a[0] * a[3] - a[1] * a[2]
}

fn mul(a: &[i64; 4], b: &[i64; 4]) -> [i64; 4] {
    [
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    ]
}

/// All unimodular matrices with |entries| <= bound, in lexicographic entry
/// order.
pub fn unimodular_matrices(bound: i64) -> Vec<Mat2> {
    let range: Vec<i64> = (-bound..=bound).collect();
    par_flat_map(&range, |&a| {
        let mut out = Vec::new();
        for b in -bound..=bound {
            for c in -bound..=bound {
                for d in -bound..=bound {
                    let m = [a, b, c, d];
                    if det(&m).abs() == 1 {
                        out.push(Mat2::from_i64s(m));
                    }
                }
            }
        }
        out
    })
}

fn centralizer_scan(m: [i64; 4], h: i64, gs: &[i64]) -> Vec<Mat2> {
    let mut out = Vec::new();
    for &a in gs {
        for b in -h..=h {
            for c in -h..=h {
                for d in -h..=h {
                    let g = [a, b, c, d];
                    if det(&g).abs() != 1 {
                        continue;
                    }
                    if mul(&g, &m) == mul(&m, &g) {
                        out.push(Mat2::from_i64s(g));
                    }
                }
            }
        }
    }
    out
}

/// All unimodular G with |entries| <= h and G M = M G.
pub fn brute_centralizer(m: &Mat2, h: i64) -> Vec<Mat2> {
    let mi = to_i64(m);
    let range: Vec<i64> = (-h..=h).collect();
    par_flat_map(&range, |&a| centralizer_scan(mi, h, &[a]))
}

/// Sequential twin of [`brute_centralizer`] for the benchmark comparison.
pub fn brute_centralizer_seq(m: &Mat2, h: i64) -> Vec<Mat2> {
    let mi = to_i64(m);
    let range: Vec<i64> = (-h..=h).collect();
    seq_flat_map(&range, |&a| centralizer_scan(mi, h, &[a]))
}

fn reversor_scan(m: [i64; 4], minv: [i64; 4], h: i64, gs: &[i64]) -> Vec<Mat2> {
    let mut out = Vec::new();
    for &a in gs {
        for b in -h..=h {
            for c in -h..=h {
                for d in -h..=h {
                    let g = [a, b, c, d];
                    if det(&g).abs() != 1 {
                        continue;
                    }
                    // G M G^-1 = M^-1  <=>  G M = M^-1 G
                    if mul(&g, &m) == mul(&minv, &g) {
                        out.push(Mat2::from_i64s(g));
                    }
                }
            }
        }
    }
    out
}

/// All unimodular G with |entries| <= h and G M G^{-1} = M^{-1}.
pub fn brute_reversors(m: &Mat2, h: i64) -> Vec<Mat2> {
    let mi = to_i64(m);
    let minv = to_i64(&m.unimodular_inverse().expect("unimodular oracle input"));
    let range: Vec<i64> = (-h..=h).collect();
    par_flat_map(&range, |&a| reversor_scan(mi, minv, h, &[a]))
}

/// Sequential twin of [`brute_reversors`].
pub fn brute_reversors_seq(m: &Mat2, h: i64) -> Vec<Mat2> {
    let mi = to_i64(m);
    let minv = to_i64(&m.unimodular_inverse().expect("unimodular oracle input"));
    let range: Vec<i64> = (-h..=h).collect();
    seq_flat_map(&range, |&a| reversor_scan(mi, minv, h, &[a]))
}

/// All torus points with denominator <= qmax fixed by M^k, by direct scan.
/// Complete whenever every fixed point has denominator <= qmax (their
/// denominators divide the largest invariant factor of M^k - I).
pub fn brute_fixed_points(m: &Mat2, k: u32, qmax: u32) -> Vec<TorusPoint> {
    let p = m.pow(k as i64).expect("unimodular oracle input");
    let mut out = Vec::new();
    for q in 1..=qmax as i64 {
        for p1 in 0..q {
            for p2 in 0..q {
                let g = gcd3(p1, p2, q);
                if g != 1 {
                    continue;
                }
                let t = TorusPoint::new(
                    &Int::from(p1),
                    &Int::from(q),
                    &Int::from(p2),
                    &Int::from(q),
                );
                if t.fixed_by(&p) {
                    out.push(t);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    gcd(gcd(a, b), c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: [i64; 4]) -> Mat2 {
        Mat2::from_i64s(e)
    }

    #[test]
    fn centralizer_of_involution() {
        let found = brute_centralizer(&m([0, 1, 1, 0]), 1);
        let mut expect = vec![
            Mat2::identity(),
            -&Mat2::identity(),
            m([0, 1, 1, 0]),
            m([0, -1, -1, 0]),
        ];
        expect.sort();
        assert_eq!(found, expect);
    }

    #[test]
    fn centralizer_of_scalar_is_everything() {
        let all = unimodular_matrices(1);
        let found = brute_centralizer(&Mat2::identity(), 1);
        assert_eq!(found, all);
    }

    #[test]
    fn centralizer_of_cat_includes_its_root() {
        // {+-I, +-U, +-U^-1} for U = [[1,1],[1,0]]; U^-1 also has entries <= 1
        let found = brute_centralizer(&m([2, 1, 1, 1]), 1);
        let u = m([1, 1, 1, 0]);
        let uinv = u.unimodular_inverse().unwrap();
        let mut expect = vec![
            Mat2::identity(),
            -&Mat2::identity(),
            u.clone(),
            -&u,
            uinv.clone(),
            -&uinv,
        ];
        expect.sort();
        assert_eq!(found, expect);
    }

    #[test]
    fn reversors_scan_examples() {
        let revs = brute_reversors(&m([2, 1, 1, 1]), 2);
        assert!(revs.contains(&m([1, -1, 0, -1])));
        assert!(revs.contains(&m([0, -1, 1, 0])) || revs.contains(&m([0, 1, -1, 0])));
        let minv = m([2, 1, 1, 1]).unimodular_inverse().unwrap();
        for g in &revs {
            let conj = &(g * &m([2, 1, 1, 1])) * &g.unimodular_inverse().unwrap();
            assert_eq!(conj, minv);
        }

        assert!(brute_reversors(&m([1, 1, 1, 0]), 12).is_empty());

        let all = unimodular_matrices(1);
        assert_eq!(brute_reversors(&Mat2::identity(), 1), all);
    }

    #[test]
    fn seq_and_par_scans_agree() {
        let cat = m([2, 1, 1, 1]);
        assert_eq!(brute_centralizer(&cat, 4), brute_centralizer_seq(&cat, 4));
        assert_eq!(brute_reversors(&cat, 4), brute_reversors_seq(&cat, 4));
    }

    #[test]
    fn fixed_point_scan_examples() {
        let cat = m([2, 1, 1, 1]);
        let pts = brute_fixed_points(&cat, 1, 10);
        assert_eq!(pts, vec![TorusPoint::zero()]);
        let pts = brute_fixed_points(&cat, 2, 10);
        assert_eq!(pts.len(), 5);
        // identity fixes all four points of denominator <= 2
        let pts = brute_fixed_points(&Mat2::identity(), 1, 2);
        assert_eq!(pts.len(), 4);
    }
}
