use crate::coeff::{QuadExt, Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::projector::phi;
use crate::uea::{osp_bracket, Generator, Kind, UeaElement};

use super::matrix::Matrix;

fn q(n: i64, d: i64) -> QuadExt {
    QuadExt::rational(Rational::new(n.into(), d.into()))
}

/// The irreducible osp(1|2)-module `V(lambda)` of dimension `2 lambda + 1`.
///
/// Basis `v_mu`, `mu = lambda, lambda - 1, .., -lambda` (index `lambda -
/// mu`), with `h v_mu = mu v_mu`, `x(-1) v_mu = v_(mu+1)`, `x(1) v_mu =
/// a_mu v_(mu-1)` where `a_lambda = lambda`, `a_mu + a_(mu+1) = mu`. The
/// parity of `v_mu` is `mu mod 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrepData {
    lambda: u32,
    mats: [Matrix; 5],
}

impl IrrepData {
    pub fn new(lambda: u32) -> Self {
        let l = lambda as i64;
        let n = (2 * lambda + 1) as usize;
        let mu = |i: usize| l - i as i64;
        let mut a = vec![0i64; n];
        a[0] = l;
        for i in 1..n {
            a[i] = mu(i) - a[i - 1];
        }
        let mut lower = Matrix::zeros(n, n);
        let mut raise = Matrix::zeros(n, n);
        let mut h = Matrix::zeros(n, n);
        for i in 0..n {
            h.set(i, i, q(mu(i), 1));
            if i > 0 {
                lower.set(i - 1, i, QuadExt::one());
            }
            if i + 1 < n {
                raise.set(i + 1, i, q(a[i], 1));
            }
        }
        let raise2 = (&raise * &raise).scale(&q(-1, 1));
        let lower2 = &lower * &lower;
        Self {
            lambda,
            mats: [lower2, lower, h, raise, raise2],
        }
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn dim(&self) -> usize {
        2 * self.lambda as usize + 1
    }

    pub fn mu(&self, i: usize) -> i64 {
        self.lambda as i64 - i as i64
    }

    pub fn parity(&self, i: usize) -> u8 {
        (self.mu(i).rem_euclid(2)) as u8
    }

    /// Matrix of `x_k` for `k` in `-2..=2`, with `k = 0` meaning `h`.
    pub fn matrix(&self, root: i8) -> &Matrix {
        &self.mats[(root + 2) as usize]
    }
}

/// `C[x]` with `x` odd, truncated at degree `trunc`: `x(1) = d/dx / sqrt2`,
/// `x(-1) = x / sqrt2`, `x(2) = -x(1)^2`, `x(-2) = x(-1)^2`, and
/// `h x^k = (k + 1/2) x^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyModule {
    trunc: u32,
}

impl PolyModule {
    pub fn new(trunc: u32) -> Self {
        Self { trunc }
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    /// `x_k x^d` as `(degree, coefficient)`, `None` when it vanishes.
    pub fn act(&self, root: i8, d: u32) -> Result<Option<(u32, QuadExt)>> {
        let k = d as i64;
        let (target, c) = match root {
            -2 => (k + 2, q(1, 2)),
            -1 => (k + 1, QuadExt::inv_sqrt2()),
            0 => (k, q(2 * k + 1, 2)),
            1 => (k - 1, QuadExt::inv_sqrt2().scale(&Rational::from_integer(k.into()))),
            2 => (k - 2, q(-k * (k - 1), 2)),
            _ => unreachable!("root {root}"),
        };
        if c.is_zero() || target < 0 {
            return Ok(None);
        }
        if target > self.trunc as i64 {
            return Err(Error::TruncationOverflow(self.trunc));
        }
        Ok(Some((target as u32, c)))
    }
}

/// A vector of `C[x] (x) V(lambda)` in the basis `x^k (x) v_mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleVector {
    coords: Vec<QuadExt>,
}

impl ModuleVector {
    pub fn zero(dim: usize) -> Self {
        Self {
            coords: vec![QuadExt::zero(); dim],
        }
    }

    pub fn from_coords(coords: Vec<QuadExt>) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[QuadExt] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &QuadExt {
        &self.coords[i]
    }

    pub fn add_at(&mut self, i: usize, c: &QuadExt) {
        self.coords[i] += c;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(QuadExt::is_zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &QuadExt)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &QuadExt) -> Self {
        Self {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

/// `C[x] (x) V(lambda)` as a module over osp(1|2) x osp(1|2); the diagonal
/// letters act as `a (x) 1 + 1 (x) a`, tilde letters as `a (x) 1 - 1 (x) a`,
/// with the sign `(1 (x) a)(x^k (x) v) = (-1)^(|a| k) x^k (x) a v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorModule {
    poly: PolyModule,
    irrep: IrrepData,
}

impl TensorModule {
    pub fn new(trunc: u32, lambda: u32) -> Self {
        Self {
            poly: PolyModule::new(trunc),
            irrep: IrrepData::new(lambda),
        }
    }

    pub fn poly(&self) -> &PolyModule {
        &self.poly
    }

    pub fn irrep(&self) -> &IrrepData {
        &self.irrep
    }

    pub fn dim(&self) -> usize {
        (self.poly.trunc as usize + 1) * self.irrep.dim()
    }

    pub fn index(&self, degree: u32, i: usize) -> usize {
        degree as usize * self.irrep.dim() + i
    }

    pub fn split(&self, idx: usize) -> (u32, usize) {
        ((idx / self.irrep.dim()) as u32, idx % self.irrep.dim())
    }

    /// `H` eigenvalue of a basis vector, minus one half.
    pub fn weight(&self, idx: usize) -> i64 {
        let (k, i) = self.split(idx);
        k as i64 + self.irrep.mu(i)
    }

    pub fn weight_value(&self, idx: usize) -> Rational {
        Rational::new((2 * self.weight(idx) + 1).into(), 2.into())
    }

    pub fn parity(&self, idx: usize) -> u8 {
        let (k, i) = self.split(idx);
        ((k as u8) + self.irrep.parity(i)) % 2
    }

    pub fn zero(&self) -> ModuleVector {
        ModuleVector::zero(self.dim())
    }

    pub fn basis_vector(&self, degree: u32, i: usize) -> ModuleVector {
        let mut v = self.zero();
        v.add_at(self.index(degree, i), &QuadExt::one());
        v
    }

    /// Basis indices of `H` eigenvalue `m + 1/2` present in the truncation.
    pub fn weight_space(&self, m: i64) -> Vec<usize> {
        (0..self.dim()).filter(|&idx| self.weight(idx) == m).collect()
    }

    /// `H` eigenvalue `m + 1/2` of `v` if it is a weight vector.
    pub fn weight_of(&self, v: &ModuleVector) -> Option<i64> {
        let mut ws = v.support().map(|(i, _)| self.weight(i));
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    fn act_left(&self, root: i8, v: &ModuleVector) -> Result<ModuleVector> {
        let mut out = self.zero();
        for (idx, c) in v.support() {
            let (k, i) = self.split(idx);
            if let Some((d, a)) = self.poly.act(root, k)? {
                out.add_at(self.index(d, i), &(&a * c));
            }
        }
        Ok(out)
    }

    fn act_right(&self, root: i8, v: &ModuleVector) -> ModuleVector {
        let m = self.irrep.matrix(root);
        let odd = root.abs() == 1;
        let mut out = self.zero();
        for (idx, c) in v.support() {
            let (k, i) = self.split(idx);
            let sign = if odd && k % 2 == 1 { q(-1, 1) } else { QuadExt::one() };
            for j in 0..self.irrep.dim() {
                let a = m.get(j, i);
                if !a.is_zero() {
                    out.add_at(self.index(k, j), &(&(a * c) * &sign));
                }
            }
        }
        out
    }

    pub fn act_generator(&self, g: Generator, v: &ModuleVector) -> Result<ModuleVector> {
        let left = self.act_left(g.root(), v)?;
        let right = self.act_right(g.root(), v);
        Ok(match g.kind() {
            Kind::Diagonal => left.add(&right),
            Kind::Tilde => left.sub(&right),
        })
    }

    /// `f(H) v`, evaluating `f` on each eigencomponent.
    pub fn act_coeff(&self, f: &RationalFunction, v: &ModuleVector) -> Result<ModuleVector> {
        let mut out = self.zero();
        for (idx, c) in v.support() {
            let value = f.eval(&self.weight_value(idx))?;
            out.add_at(idx, &c.scale(&value));
        }
        Ok(out)
    }

    pub fn act_uea(&self, e: &UeaElement, v: &ModuleVector) -> Result<ModuleVector> {
        let mut out = self.zero();
        for (m, f) in e.iter() {
            let mut w = v.clone();
            for g in m.letters().into_iter().rev() {
                w = self.act_generator(g, &w)?;
                if w.is_zero() {
                    break;
                }
            }
            out = out.add(&self.act_coeff(f, &w)?);
        }
        Ok(out)
    }

    pub fn is_primitive(&self, v: &ModuleVector) -> Result<bool> {
        Ok(self.act_generator(Generator::x(1), v)?.is_zero()
            && self.act_generator(Generator::x(2), v)?.is_zero())
    }

    /// `P v = sum_n phi_n(H) X(-1)^n X(1)^n v`; the sum is finite since
    /// `X(1)` lowers the weight and the module is bounded below.
    pub fn apply_projector(&self, v: &ModuleVector) -> Result<ModuleVector> {
        let mut out = self.zero();
        let mut raised = v.clone();
        let mut n = 0usize;
        while !raised.is_zero() {
            let mut w = raised.clone();
            for _ in 0..n {
                w = self.act_generator(Generator::x(-1), &w)?;
            }
            out = out.add(&self.act_coeff(&phi(n), &w)?);
            raised = self.act_generator(Generator::x(1), &raised)?;
            n += 1;
        }
        Ok(out)
    }

    /// Basis of the primitive vectors whose `H` eigenvalue is `m + 1/2` for
    /// `m` in `window`, weight by weight, each in reduced echelon form.
    pub fn primitive_vectors(&self, window: impl IntoIterator<Item = i64>) -> Result<Vec<ModuleVector>> {
        let mut out = Vec::new();
        for m in window {
            let needed = m + self.irrep.lambda as i64;
            if needed > self.poly.trunc as i64 {
                return Err(Error::WindowNotClosed {
                    weight: Rational::new((2 * m + 1).into(), 2.into()),
                    needed: needed as u32,
                    trunc: self.poly.trunc,
                });
            }
            let space = self.weight_space(m);
            if space.is_empty() {
                continue;
            }
            let mut cols = Vec::new();
            for &idx in &space {
                let mut b = self.zero();
                b.add_at(idx, &QuadExt::one());
                let mut col = self.act_generator(Generator::x(1), &b)?.coords;
                col.extend(self.act_generator(Generator::x(2), &b)?.coords);
                cols.push(col);
            }
            for k in Matrix::from_columns(&cols).kernel() {
                let mut v = self.zero();
                for (c, &idx) in k.iter().zip(&space) {
                    v.add_at(idx, c);
                }
                out.push(v);
            }
        }
        Ok(out)
    }

    /// Human-readable form such as `1*(x^0 v[-1]) + sqrt2*(x^1 v[0])`, with
    /// `v[mu]` the basis vector of weight `mu` in `V(lambda)`.
    pub fn format_vector(&self, v: &ModuleVector) -> String {
        let parts: Vec<String> = v
            .support()
            .map(|(idx, c)| {
                let (k, i) = self.split(idx);
                format!("({c})*(x^{k} v[{}])", self.irrep.mu(i))
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Whether two lists of vectors span the same subspace.
pub fn same_span(a: &[ModuleVector], b: &[ModuleVector]) -> bool {
    let cols = |vs: &[ModuleVector]| vs.iter().map(|v| v.coords.clone()).collect::<Vec<_>>();
    if a.is_empty() || b.is_empty() {
        return a.iter().all(ModuleVector::is_zero) && b.iter().all(ModuleVector::is_zero);
    }
    let ra = Matrix::from_columns(&cols(a)).rank();
    let rb = Matrix::from_columns(&cols(b)).rank();
    let mut both = cols(a);
    both.extend(cols(b));
    let rab = Matrix::from_columns(&both).rank();
    ra == rb && rb == rab
}

/// Bracket identities `[x_a, x_b] = c x_(a+b)` violated by `act`, applied to
/// each test vector in `probe`. `act(k, v)` is the action of `x_k` (`k = 0`
/// for `h`).
fn bracket_defects(
    probe: &[Vec<QuadExt>],
    act: &dyn Fn(i8, &[QuadExt]) -> Vec<QuadExt>,
) -> Vec<String> {
    let mut out = Vec::new();
    let sub = |a: &[QuadExt], b: &[QuadExt]| -> Vec<QuadExt> { a.iter().zip(b).map(|(x, y)| x - y).collect() };
    let add = |a: &[QuadExt], b: &[QuadExt]| -> Vec<QuadExt> { a.iter().zip(b).map(|(x, y)| x + y).collect() };
    for a in -2..=2i8 {
        for b in -2..=2i8 {
            let odd = a.abs() == 1 && b.abs() == 1;
            for (i, v) in probe.iter().enumerate() {
                let ab = act(a, &act(b, v));
                let ba = act(b, &act(a, v));
                let lhs = if odd { add(&ab, &ba) } else { sub(&ab, &ba) };
                let rhs: Vec<QuadExt> = match osp_bracket(a, b) {
                    Some(c) => act(a + b, v).iter().map(|x| x.scale(&c)).collect(),
                    None => vec![QuadExt::zero(); v.len()],
                };
                if sub(&lhs, &rhs).iter().any(|x| !x.is_zero()) {
                    out.push(format!("[x({a}), x({b})] on probe {i}"));
                }
            }
        }
    }
    out
}

/// Bracket defects of the `V(lambda)` matrices on every basis vector.
pub fn irrep_bracket_defects(irrep: &IrrepData) -> Vec<String> {
    let n = irrep.dim();
    let probe: Vec<Vec<QuadExt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { QuadExt::one() } else { QuadExt::zero() }).collect())
        .collect();
    bracket_defects(&probe, &|k, v| irrep.matrix(k).apply(v))
}

/// Bracket defects of the polynomial action on `x^d` for `d <= trunc - 4`,
/// so that no composite overflows.
pub fn poly_bracket_defects(poly: &PolyModule) -> Vec<String> {
    let n = poly.trunc() as usize + 1;
    let probe: Vec<Vec<QuadExt>> = (0..n.saturating_sub(4))
        .map(|i| (0..n).map(|j| if i == j { QuadExt::one() } else { QuadExt::zero() }).collect())
        .collect();
    bracket_defects(&probe, &|k, v| {
        let mut out = vec![QuadExt::zero(); n];
        for (d, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if let Some((t, a)) = poly.act(k, d as u32).expect("probe stays inside truncation") {
                out[t as usize] += &(&a * c);
            }
        }
        out
    })
}
