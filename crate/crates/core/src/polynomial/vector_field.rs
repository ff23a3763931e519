use super::Polynomial;
use crate::scalar::ExactField;

/// A polynomial vector field `sum_i a_i d/dx_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorField<C: ExactField> {
    components: Vec<Polynomial<C>>,
}

impl<C: ExactField> VectorField<C> {
    /// Panics if the components do not all live in `components.len()`
    /// variables or if every component is zero.
    pub fn new(components: Vec<Polynomial<C>>) -> Self {
        let n = components.len();
        assert!(n > 0, "a vector field needs at least one component");
        assert!(
            components.iter().all(|a| a.nvars() == n),
            "every component must be a polynomial in {n} variables"
        );
        assert!(components.iter().any(|a| !a.is_zero()), "vector field is identically zero");
        Self { components }
    }

    /// The radial field `sum_i x_i d/dx_i`.
    pub fn radial(n: usize) -> Self {
        Self::new((0..n).map(|i| Polynomial::variable(n, i)).collect())
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial<C>] {
        &self.components
    }

    /// `v(p) = sum_i a_i * dp/dx_i`
    pub fn apply(&self, p: &Polynomial<C>) -> Polynomial<C> {
        assert_eq!(p.nvars(), self.dim(), "dimension mismatch");
        let mut out = Polynomial::zero(self.dim());
        for (i, a) in self.components.iter().enumerate() {
            let d = p.partial_derivative(i);
            if !d.is_zero() {
                out = out + a * &d;
            }
        }
        out
    }

    pub fn translate(&self, point: &[C]) -> Self {
        Self {
            components: self.components.iter().map(|a| a.translate(point)).collect(),
        }
    }

    /// True when every component vanishes at the origin.
    pub fn vanishes_at_origin(&self) -> bool {
        self.components.iter().all(|a| a.constant_term().is_zero())
    }

    /// Largest total degree among the components.
    pub fn max_degree(&self) -> u32 {
        self.components.iter().filter_map(Polynomial::total_degree).max().unwrap_or(0)
    }
}
