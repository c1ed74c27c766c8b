use super::{coskeleton_homology, impurity, link_homology, Method, PropertyVerdict, Witness};
use crate::complex::FacePoset;
use crate::homology::Coefficients;

/// Cohen-Macaulay test.
///
/// * `Definition`: pure, and `H̃_i(|lk σ|) = 0` for `i < d − dim σ − 1`
///   for every face including the empty one.
/// * `Coskeleton`: pure, and `H̃_i(|skel^c_k X|) = 0` for `i < d − k − 1`,
///   `k = −1, …, d` (Thm 5.2).
pub fn check_cohen_macaulay(x: &FacePoset, coeff: Coefficients, method: Method) -> PropertyVerdict {
    let failure = impurity(x).or_else(|| match method {
        Method::Coskeleton => coskeleton_failure(x, coeff),
        _ => definition_failure(x, coeff),
    });
    let method = if method == Method::Coskeleton {
        Method::Coskeleton
    } else {
        Method::Definition
    };
    PropertyVerdict::new("cohen_macaulay", &[], coeff, method, failure)
}

fn definition_failure(x: &FacePoset, coeff: Coefficients) -> Option<Witness> {
    let d = x.dim();
    for sigma in x.faces() {
        let top = d - x.dim_of(sigma) - 1;
        let h = link_homology(x, sigma, coeff);
        if let Some(&i) = h.nonzero_degrees().iter().find(|&&i| i < top) {
            return Some(Witness::at_face(
                x,
                sigma,
                Some(i),
                "link homology below top degree",
            ));
        }
    }
    None
}

fn coskeleton_failure(x: &FacePoset, coeff: Coefficients) -> Option<Witness> {
    let d = x.dim();
    for k in -1..=d {
        let h = coskeleton_homology(x, k, coeff);
        if let Some(&i) = h.nonzero_degrees().iter().find(|&&i| i < d - k - 1) {
            return Some(Witness::at_coskeleton(k, i, "co-skeleton homology below d-k-1"));
        }
    }
    None
}
