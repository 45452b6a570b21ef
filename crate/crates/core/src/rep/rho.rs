use crate::coeff::{QuadExt, Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::zalg::{z_to_tilde, RelationCatalog, ZElement, ZGen, ZMonomial};

use super::matrix::Matrix;
use super::module::{ModuleVector, TensorModule};

/// `rho(z) v = P(u v)` for any representative `u` of `z`; here `u` is the
/// tilde expansion of `z`.
pub fn rho(module: &TensorModule, z: &ZElement, v: &ModuleVector) -> Result<ModuleVector> {
    if !module.is_primitive(v)? {
        return Err(Error::NotPrimitive);
    }
    let uv = module.act_uea(&z_to_tilde(z), v)?;
    module.apply_projector(&uv)
}

/// The five generator matrices of `rho` on a basis of primitive weight
/// vectors, together with the `H` eigenvalue of each basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoMatrices {
    pub weights: Vec<Rational>,
    mats: [Matrix; 5],
}

impl RhoMatrices {
    /// `rho(E(k))` in the basis `basis`, column `j` holding the image of
    /// `basis[j]`. Fails with `NotPrimitive` if some image leaves the span.
    pub fn compute(module: &TensorModule, basis: &[ModuleVector]) -> Result<Self> {
        Self::build(module, basis, false)
    }

    /// Like [`RhoMatrices::compute`], but each image is first cut down to
    /// the weights occurring in `basis`, so images leaving the window count
    /// as zero.
    pub fn compress(module: &TensorModule, basis: &[ModuleVector]) -> Result<Self> {
        Self::build(module, basis, true)
    }

    fn build(module: &TensorModule, basis: &[ModuleVector], cut: bool) -> Result<Self> {
        let ws: Vec<i64> = basis
            .iter()
            .map(|b| module.weight_of(b).expect("weight vector"))
            .collect();
        let weights = ws.iter().map(|&m| Rational::new((2 * m + 1).into(), 2.into())).collect();
        let cols: Vec<Vec<QuadExt>> = basis.iter().map(|b| b.coords().to_vec()).collect();
        let span = Matrix::from_columns(&cols);
        let mut mats = Vec::with_capacity(5);
        for g in ZGen::ALL {
            let mut out = Vec::with_capacity(basis.len());
            for b in basis {
                let mut image = rho(module, &g.into(), b)?;
                if cut && module.weight_of(&image).is_some_and(|w| !ws.contains(&w)) {
                    image = module.zero();
                }
                let coords = span.solve(image.coords()).ok_or(Error::NotPrimitive)?;
                out.push(coords);
            }
            mats.push(Matrix::from_columns(&out));
        }
        Ok(Self {
            weights,
            mats: mats.try_into().expect("five generators"),
        })
    }

    pub fn from_parts(weights: Vec<Rational>, mats: [Matrix; 5]) -> Self {
        Self { weights, mats }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn generator(&self, g: ZGen) -> &Matrix {
        &self.mats[g.index()]
    }

    /// `f(H)` as the diagonal matrix of its values on the basis weights.
    pub fn coeff(&self, f: &RationalFunction) -> Result<Matrix> {
        let values = self
            .weights
            .iter()
            .map(|w| f.eval(w).map(QuadExt::rational))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::diagonal(values))
    }

    pub fn monomial(&self, m: &ZMonomial) -> Matrix {
        m.letters()
            .iter()
            .fold(Matrix::identity(self.dim()), |acc, &g| &acc * self.generator(g))
    }

    pub fn element(&self, z: &ZElement) -> Result<Matrix> {
        let mut out = Matrix::zeros(self.dim(), self.dim());
        for (m, f) in z.iter() {
            out = &out + &(&self.coeff(f)? * &self.monomial(m));
        }
        Ok(out)
    }
}

/// `C[x] (x) V(1)` truncated at `trunc`.
pub fn example_module(trunc: u32) -> TensorModule {
    TensorModule::new(trunc, 1)
}

/// `w1 = 1 (x) v[-1]` and `w2 = 1 (x) v[0] + sqrt2 x (x) v[-1]`, the
/// primitive vectors of `H` eigenvalue `-1/2` and `1/2`.
pub fn example_basis(module: &TensorModule) -> [ModuleVector; 2] {
    let bottom = 2;
    let w1 = module.basis_vector(0, bottom);
    let mut w2 = module.basis_vector(0, 1);
    w2.add_at(module.index(1, bottom), &QuadExt::sqrt2());
    [w1, w2]
}

/// `w3 = 1 (x) v[1] - sqrt2 x (x) v[0] + x^2 (x) v[-1]`, the primitive
/// vector of `H` eigenvalue `3/2`.
pub fn example_top(module: &TensorModule) -> ModuleVector {
    let mut w3 = module.basis_vector(0, 0);
    w3.add_at(module.index(1, 1), &-QuadExt::sqrt2());
    w3.add_at(module.index(2, 2), &QuadExt::one());
    w3
}

/// `rho` on `(w1, w2)` with images cut down to the weights `-1/2, 1/2`.
pub fn example_rho(trunc: u32) -> Result<RhoMatrices> {
    let module = example_module(trunc);
    RhoMatrices::compress(&module, &example_basis(&module))
}

/// `rho` on all primitive vectors `(w1, w2, w3)`.
pub fn example_rho_full(trunc: u32) -> Result<RhoMatrices> {
    let module = example_module(trunc);
    let [w1, w2] = example_basis(&module);
    RhoMatrices::compute(&module, &[w1, w2, example_top(&module)])
}

/// One relation family evaluated on matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepRelationCheck {
    pub label: String,
    /// Difference of the two sides, or why it could not be evaluated.
    pub residual: std::result::Result<Matrix, String>,
}

impl RepRelationCheck {
    pub fn passed(&self) -> bool {
        matches!(&self.residual, Ok(m) if m.is_zero())
    }
}

fn sample_coefficients() -> Vec<RationalFunction> {
    let h = RationalFunction::h;
    vec![1 / (h() - 1), h().pow(2) - 2, (h() + 5) / (h() * (h() - 7))]
}

/// The fourteen relation families of `catalog` with generators replaced by
/// `rho` matrices: `h` commuting with coefficients, the shift rule, and the
/// twelve pair relations.
pub fn check_rep_relations(rho: &RhoMatrices, catalog: &RelationCatalog) -> Vec<RepRelationCheck> {
    let mut out = Vec::new();
    let eval = |f: &dyn Fn() -> Result<Matrix>| f().map_err(|e| e.to_string());

    let cartan = eval(&|| {
        let hbar = rho.generator(ZGen::new(0));
        let mut acc = Matrix::zeros(rho.dim(), rho.dim());
        for f in sample_coefficients() {
            let c = rho.coeff(&f)?;
            acc = &acc + &(&(hbar * &c) - &(&c * hbar));
        }
        Ok(acc)
    });
    out.push(RepRelationCheck {
        label: "E(0) f(H) = f(H) E(0)".into(),
        residual: cartan,
    });

    let shift = eval(&|| {
        let mut acc = Matrix::zeros(rho.dim(), rho.dim());
        for g in ZGen::ALL {
            let x = rho.generator(g);
            for f in sample_coefficients() {
                let lhs = x * &rho.coeff(&f)?;
                let rhs = &rho.coeff(&f.shift(g.root() as i64))? * x;
                acc = &acc + &(&lhs - &rhs);
            }
        }
        Ok(acc)
    });
    out.push(RepRelationCheck {
        label: "E(k) f(H) = f(H + k) E(k)".into(),
        residual: shift,
    });

    for rel in catalog.relations() {
        let residual = eval(&|| {
            let lhs = rho.generator(rel.left.0) * rho.generator(rel.left.1);
            Ok(&lhs - &rho.element(&rel.right)?)
        });
        out.push(RepRelationCheck {
            label: rel.label(),
            residual,
        });
    }
    out
}

/// Dimension of the algebra generated by the `rho` matrices and `rho(H)`.
/// It equals `dim^2` exactly when no proper subspace is invariant.
pub fn generated_algebra_dimension(rho: &RhoMatrices) -> usize {
    let n = rho.dim();
    let flat = |m: &Matrix| m.entries().to_vec();
    let mut gens: Vec<Matrix> = ZGen::ALL.iter().map(|&g| rho.generator(g).clone()).collect();
    gens.push(rho.coeff(&RationalFunction::h()).expect("polynomial"));

    let mut basis = vec![Matrix::identity(n)];
    let mut frontier = basis.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in &gens {
                let p = g * a;
                let mut cols: Vec<Vec<QuadExt>> = basis.iter().map(flat).collect();
                let before = Matrix::from_columns(&cols).rank();
                cols.push(flat(&p));
                if Matrix::from_columns(&cols).rank() > before {
                    basis.push(p.clone());
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    basis.len()
}

pub fn is_irreducible(rho: &RhoMatrices) -> bool {
    generated_algebra_dimension(rho) == rho.dim() * rho.dim()
}
