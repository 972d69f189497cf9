//! The intersection form of an `I_n` fiber and exact linear algebra on it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Degrees of a line bundle on the components `G_1, .., G_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MultiDegree(pub Vec<i64>);

impl MultiDegree {
    pub fn zero(n: usize) -> Self {
        MultiDegree(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        MultiDegree(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> MultiDegree {
        MultiDegree(self.0.iter().map(|a| a * k).collect())
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// `G_i · G_j` for the `n` components of an `I_n` fiber: `-2` on the
/// diagonal, `1` for cyclic neighbours; for `n = 2` the two components
/// meet in two points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InFiberForm {
    matrix: Vec<Vec<i64>>,
}

impl InFiberForm {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "an I_n fiber needs n >= 2 here");
        let mut matrix = vec![vec![0i64; n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = -2;
            row[(i + 1) % n] += 1;
            row[(i + n - 1) % n] += 1;
        }
        InFiberForm { matrix }
    }

    pub fn n(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// Row `i` (one-based) as a multidegree.
    pub fn row(&self, i: usize) -> MultiDegree {
        MultiDegree(self.matrix[i - 1].clone())
    }
}

/// A basis of the rational kernel of the form, by exact elimination.
pub fn form_kernel(n: usize) -> Vec<Vec<BigRational>> {
    let form = InFiberForm::new(n);
    let mut a: Vec<Vec<BigRational>> = form
        .matrix()
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let cols = n;
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[row].clone();
        for (r, other) in a.iter_mut().enumerate() {
            if r != row && !other[col].is_zero() {
                let f = other[col].clone();
                for (x, p) in other.iter_mut().zip(&pivot) {
                    *x -= p * &f;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

/// Row-style Hermite normal form of the integer span of `rows`.
fn hermite_basis(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut basis = Vec::new();
    for col in 0..cols {
        // Fold every remaining row's entry in this column into one pivot by
        // Euclidean row operations.
        loop {
            let nonzero: Vec<usize> = (0..a.len()).filter(|&r| !a[r][col].is_zero()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let p = *nonzero.iter().min_by_key(|&&r| a[r][col].abs()).unwrap();
            let pivot = a[p].clone();
            for &r in &nonzero {
                if r != p {
                    let f = a[r][col].div_floor(&pivot[col]);
                    for (x, q) in a[r].iter_mut().zip(&pivot) {
                        *x -= q * &f;
                    }
                }
            }
        }
        if let Some(p) = (0..a.len()).find(|&r| !a[r][col].is_zero()) {
            let mut pivot = a.remove(p);
            if pivot[col].is_negative() {
                pivot.iter_mut().for_each(|x| *x = -x.clone());
            }
            basis.push((col, pivot));
        }
    }
    basis.into_iter().map(|(_, r)| r).collect()
}

/// Membership of `v` in the integer span of the form's rows, the lattice
/// of multidegrees of restrictions `O_S(D)|_Y` of fiber-supported `D`.
pub fn in_restriction_lattice(v: &MultiDegree) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let basis = hermite_basis(InFiberForm::new(n).matrix());
    let mut rest: Vec<BigInt> = v.0.iter().map(|&x| BigInt::from(x)).collect();
    for row in &basis {
        let col = row.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero");
        let (q, r) = rest[col].div_rem(&row[col]);
        if !r.is_zero() {
            return false;
        }
        for c in 0..n {
            rest[c] -= &row[c] * &q;
        }
    }
    rest.iter().all(Zero::is_zero)
}

/// A term of a divisor on the fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivisorTerm {
    /// `O_Y(x_i)`, a smooth point on `G_i`.
    Point(usize),
    /// `O_Y(G_i) = O_S(G_i)|_Y`.
    Component(usize),
}

/// Multidegree of `O_Y(Σ c D)` for integer coefficients `c`.
pub fn multidegree(n: usize, terms: &[(i64, DivisorTerm)]) -> MultiDegree {
    let form = InFiberForm::new(n);
    terms.iter().fold(MultiDegree::zero(n), |acc, &(c, t)| {
        let d = match t {
            DivisorTerm::Point(i) => MultiDegree::unit(n, i),
            DivisorTerm::Component(i) => form.row(i),
        };
        acc.add(&d.scale(c))
    })
}
