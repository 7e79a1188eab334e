use super::AssocAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};

/// The radical in characteristic 0 as the kernel of the trace form
/// `(x, y) -> tr(L_x L_y)`.
pub fn radical_via_trace(a: &AssocAlgebra) -> Result<Vec<Vector>> {
    let field = a.field();
    if field.characteristic() != 0 {
        return Err(Error::PositiveCharacteristic);
    }
    let n = a.dim();
    let ops: Vec<Matrix> = (0..n).map(|i| a.left_mult_matrix(&a.basis_element(i))).collect();
    let mut gram = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in i..n {
            let mut t = field.zero();
            for k in 0..n {
                for l in 0..n {
                    let x = ops[i].get(k, l);
                    if x.is_zero() {
                        continue;
                    }
                    let y = ops[j].get(l, k);
                    if !y.is_zero() {
                        t += &(x * y);
                    }
                }
            }
            gram.set(i, j, t.clone());
            gram.set(j, i, t);
        }
    }
    Ok(gram.kernel())
}

#[cfg(test)]
mod tests {
    use super::super::test_algebras::*;
    use super::*;
    use crate::field::FieldSpec;

    #[test]
    fn semisimple_has_zero_radical() {
        assert!(radical_via_trace(&q_times_q()).unwrap().is_empty());
        let m = matrix_algebra(&FieldSpec::Rationals, 2);
        assert!(radical_via_trace(&m).unwrap().is_empty());
    }

    #[test]
    fn dual_numbers_radical() {
        let q = FieldSpec::Rationals;
        let r = radical_via_trace(&dual_numbers(&q)).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0][0].is_zero() && !r[0][1].is_zero());
    }

    #[test]
    fn positive_characteristic_rejected() {
        let f = FieldSpec::Prime(3);
        assert_eq!(radical_via_trace(&dual_numbers(&f)).unwrap_err(), Error::PositiveCharacteristic);
    }
}
