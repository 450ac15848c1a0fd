//! Fixtures shared by the criterion benches.

use nfkit_core::field::MultiIndex;
use nfkit_core::linalg::rat;
use nfkit_core::{EigenSpectrum, PolyVectorField, RatMatrix, Rational, Truncation};

pub fn diag(xs: &[i64]) -> EigenSpectrum {
    EigenSpectrum::rational_diagonal(&xs.iter().map(|&x| rat(x)).collect::<Vec<_>>()).unwrap()
}

/// Dense `rows x cols` integer matrix with a rank drop, for kernel timings.
pub fn kernel_matrix(rows: usize, cols: usize) -> RatMatrix {
    let mut data: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| rat(((i * 7 + j * 13 + i * j) % 11) as i64 - 5))
                .collect()
        })
        .collect();
    if rows > 2 {
        let sum: Vec<Rational> = (0..cols).map(|j| &data[0][j] + &data[1][j]).collect();
        data[rows - 1] = sum;
    }
    RatMatrix::from_rows(data).unwrap()
}

/// Spectra whose invariant monoids have a few to a dozen generators.
pub fn hilbert_spectra() -> Vec<(&'static str, EigenSpectrum)> {
    vec![
        ("3_2_-6", diag(&[3, 2, -6])),
        ("15_10_-6", diag(&[15, 10, -6])),
        ("2_-3_4_-5", diag(&[2, -3, 4, -5])),
        ("5_7_-3_-4", diag(&[5, 7, -3, -4])),
    ]
}

/// Normal form over Jordan blocks with eigenvalues 3, 3, 3, 2, 2, 1 and
/// all admissible quadratic and cubic terms present.
pub fn jordan_normal_form() -> (EigenSpectrum, PolyVectorField) {
    let s = diag(&[3, 3, 3, 2, 2, 1])
        .with_nilpotent(&[(0, 1, rat(1)), (1, 2, rat(1)), (3, 4, rat(1))])
        .unwrap();
    let mi = |v: [u32; 6]| MultiIndex::new(v.to_vec());
    let mut terms = Vec::new();
    for j in 0..3 {
        terms.push((j, mi([0, 0, 0, 1, 0, 1]), rat(1 + j as i64)));
        terms.push((j, mi([0, 0, 0, 0, 1, 1]), rat(2 - j as i64)));
        terms.push((j, mi([0, 0, 0, 0, 0, 3]), rat(3 + j as i64)));
    }
    terms.push((3, mi([0, 0, 0, 0, 0, 2]), rat(5)));
    terms.push((4, mi([0, 0, 0, 0, 0, 2]), rat(-3)));
    let p = PolyVectorField::from_terms(6, Truncation::Infinite, terms).unwrap();
    let f = PolyVectorField::linear(s.nilpotent()).add(&p);
    (s, f)
}
