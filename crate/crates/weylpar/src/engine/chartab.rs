//! Exact character tables by the class-algebra method: common eigenvectors
//! of the class matrices are found over a prime field F_p (p = 1 mod the
//! group exponent, p large enough to separate degrees), and the character
//! values are then lifted to exact cyclotomic numbers through eigenvalue
//! multiplicities of the power maps.
//!
//! Classes are ordered by (size, minimal representative) and rows by
//! (trivial first, then degree, then canonical value comparison), so tables
//! are reproducible across runs.

use num_integer::Integer;
use num_rational::Ratio;

use super::cyclotomic::Cyc;
use super::{ElementStore, FiniteGroup, Key};
use crate::error::{Error, Result};

/// Class matrices above this many classes are rejected; the splitting
/// algorithm is quartic in the class count.
pub const MAX_CLASSES: usize = 64;

/// An exact character table.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub order: u64,
    /// Exponent of the group: the conductor of every entry.
    pub conductor: u32,
    pub class_reps: Vec<Key>,
    pub class_sizes: Vec<u64>,
    pub degrees: Vec<u64>,
    /// `values[row][class]`; the first row is the trivial character.
    pub values: Vec<Vec<Cyc>>,
}

impl CharacterTable {
    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }

    /// Exact first orthogonality: weighted row inner products equal
    /// `order * delta`.
    pub fn row_orthogonality_holds(&self) -> bool {
        let k = self.class_count();
        for a in 0..k {
            for b in a..k {
                let mut sum = Cyc::zero(self.conductor);
                for l in 0..k {
                    let term = self.values[a][l]
                        .mul(&self.values[b][l].conj())
                        .scale(Ratio::from_integer(self.class_sizes[l] as i64));
                    sum.add_assign(&term);
                }
                let expected = if a == b { self.order as i64 } else { 0 };
                if !sum.is_integer(expected) {
                    return false;
                }
            }
        }
        true
    }

    /// Exact second orthogonality: column inner products equal the
    /// centralizer order on the diagonal and vanish elsewhere.
    pub fn column_orthogonality_holds(&self) -> bool {
        let k = self.class_count();
        for a in 0..k {
            for b in a..k {
                let mut sum = Cyc::zero(self.conductor);
                for row in &self.values {
                    sum.add_assign(&row[a].mul(&row[b].conj()));
                }
                let expected = if a == b {
                    (self.order / self.class_sizes[a]) as i64
                } else {
                    0
                };
                if !sum.is_integer(expected) {
                    return false;
                }
            }
        }
        true
    }

    pub fn degree_squares_sum_to_order(&self) -> bool {
        self.degrees.iter().map(|d| d * d).sum::<u64>() == self.order
    }
}

/// Computes the exact character table of an enumerated group.
pub fn character_table(
    g: &FiniteGroup,
    store: &ElementStore,
    table_bound: u64,
) -> Result<CharacterTable> {
    let n = store.len() as u64;
    if n > table_bound {
        return Err(Error::BoundExceeded {
            needed: n as u128,
            bound: table_bound as u128,
        });
    }
    let class_data = g.conjugacy_classes(store);
    let k = class_data.classes.len();
    if k > MAX_CLASSES {
        return Err(Error::BoundExceeded {
            needed: k as u128,
            bound: MAX_CLASSES as u128,
        });
    }
    let reps: Vec<_> = class_data
        .classes
        .iter()
        .map(|c| g.decode(&c.rep))
        .collect();
    let sizes: Vec<u64> = class_data.classes.iter().map(|c| c.size).collect();

    if n == 1 {
        return Ok(CharacterTable {
            order: 1,
            conductor: 1,
            class_reps: vec![class_data.classes[0].rep],
            class_sizes: vec![1],
            degrees: vec![1],
            values: vec![vec![Cyc::one(1)]],
        });
    }

    // Power maps, element orders, inverse classes, group exponent.
    let orders: Vec<u64> = reps.iter().map(|r| r.order()).collect();
    let exponent: u64 = orders.iter().fold(1, |acc, &d| acc.lcm(&d));
    let class_of_key =
        |key: &Key| class_data.class_of[store.position(key).expect("member")] as usize;
    let mut power_map: Vec<Vec<usize>> = Vec::with_capacity(k);
    for (l, rep) in reps.iter().enumerate() {
        let mut powers = Vec::with_capacity(orders[l] as usize);
        let mut acc = crate::perm::Perm::identity(g.degree());
        for _ in 0..orders[l] {
            powers.push(class_of_key(&g.encode(&acc)));
            acc = acc.compose(rep);
        }
        power_map.push(powers);
    }
    let inverse_class: Vec<usize> = reps
        .iter()
        .map(|r| class_of_key(&g.encode(&r.inverse())))
        .collect();

    // Structure constants a[i][j][l] = #{x in C_i : x^{-1} rep_l in C_j}.
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for pos in 0..store.len() {
        let x = g.decode(&store.key(pos));
        let xinv = x.inverse();
        let i = class_data.class_of[pos] as usize;
        for (l, rep) in reps.iter().enumerate() {
            let y = xinv.compose(rep);
            let j = class_of_key(&g.encode(&y));
            a[i][j][l] += 1;
        }
    }

    // A prime p = 1 (mod exponent) with p > 2 sqrt(n) (separates degrees)
    // and p > k (keeps the characteristic-polynomial recurrence valid).
    let p = choose_prime(exponent, n, k as u64);

    // Split the common eigenspaces of the class matrices over F_p.
    let mut subspaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut row = vec![0u64; k];
            row[i] = 1;
            row
        })
        .collect()];
    for i in 0..k {
        if subspaces.iter().all(|b| b.len() == 1) {
            break;
        }
        let class_matrix: Vec<Vec<u64>> = (0..k)
            .map(|j| (0..k).map(|l| a[i][j][l] % p).collect())
            .collect();
        let mut next = Vec::new();
        for basis in subspaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            next.extend(split_subspace(&class_matrix, &basis, p));
        }
        subspaces = next;
    }
    assert!(
        subspaces.iter().all(|b| b.len() == 1) && subspaces.len() == k,
        "class matrices must split completely"
    );

    // Identity class is first: size 1 and globally minimal key.
    debug_assert_eq!(sizes[0], 1);
    debug_assert!(reps[0].is_identity());

    // Normalize each eigenvector to omega (value 1 at the identity class),
    // recover the degree, then the character values mod p.
    let sizes_mod: Vec<u64> = sizes.iter().map(|&s| s % p).collect();
    let sqrt_n = (1..).take_while(|d| d * d <= n).last().unwrap_or(1);
    let mut chars_mod: Vec<(u64, Vec<u64>)> = Vec::with_capacity(k);
    for basis in &subspaces {
        let v = &basis[0];
        assert_ne!(v[0] % p, 0, "eigenvector vanishes at the identity class");
        let scale = inv_mod(v[0], p);
        let omega: Vec<u64> = v.iter().map(|&x| mul_mod(x, scale, p)).collect();
        // degree^2 = n / sum_l omega_l omega_{l*} / |C_l|
        let mut s = 0u64;
        for l in 0..k {
            let term = mul_mod(omega[l], omega[inverse_class[l]], p);
            s = (s + mul_mod(term, inv_mod(sizes_mod[l], p), p)) % p;
        }
        let dsq = mul_mod(n % p, inv_mod(s, p), p);
        let degree = (1..=sqrt_n)
            .find(|d| mul_mod(d % p, d % p, p) == dsq)
            .expect("degree is determined uniquely below sqrt(|G|)");
        let values: Vec<u64> = (0..k)
            .map(|l| {
                mul_mod(
                    mul_mod(omega[l], degree % p, p),
                    inv_mod(sizes_mod[l], p),
                    p,
                )
            })
            .collect();
        chars_mod.push((degree, values));
    }

    // Lift to exact cyclotomic values through eigenvalue multiplicities.
    let m = exponent as u32;
    let z = primitive_root(p);
    let mut rows: Vec<(u64, Vec<Cyc>)> = Vec::with_capacity(k);
    for (degree, values) in &chars_mod {
        let mut row = Vec::with_capacity(k);
        for l in 0..k {
            let d = orders[l];
            let zeta_d = pow_mod(z, (p - 1) / d, p);
            let zeta_d_inv = inv_mod(zeta_d, p);
            let d_inv = inv_mod(d % p, p);
            let mut value = Cyc::zero(m);
            for j in 0..d {
                let mut acc = 0u64;
                let step = pow_mod(zeta_d_inv, j, p);
                let mut factor = 1u64;
                for t in 0..d {
                    acc = (acc + mul_mod(values[power_map[l][t as usize]], factor, p)) % p;
                    factor = mul_mod(factor, step, p);
                }
                let mult = mul_mod(acc, d_inv, p);
                assert!(
                    mult <= *degree,
                    "eigenvalue multiplicity {mult} exceeds degree {degree}"
                );
                if mult > 0 {
                    value.add_assign(
                        &Cyc::root(m, (j as u32) * (m / d as u32))
                            .scale(Ratio::from_integer(mult as i64)),
                    );
                }
            }
            row.push(value);
        }
        rows.push((*degree, row));
    }

    // Deterministic row order: trivial character first, then by degree and
    // canonical value comparison.
    rows.sort_by(|(da, ra), (db, rb)| {
        let trivial = |d: &u64, r: &Vec<Cyc>| *d == 1 && r.iter().all(|v| v.is_integer(1));
        trivial(db, rb)
            .cmp(&trivial(da, ra))
            .then(da.cmp(db))
            .then_with(|| {
                for (x, y) in ra.iter().zip(rb.iter()) {
                    let c = x.canonical_cmp(y);
                    if c != std::cmp::Ordering::Equal {
                        return c;
                    }
                }
                std::cmp::Ordering::Equal
            })
    });

    let table = CharacterTable {
        order: n,
        conductor: m,
        class_reps: class_data.classes.iter().map(|c| c.rep).collect(),
        class_sizes: sizes,
        degrees: rows.iter().map(|(d, _)| *d).collect(),
        values: rows.into_iter().map(|(_, r)| r).collect(),
    };
    debug_assert!(table.degree_squares_sum_to_order());
    debug_assert!(table.row_orthogonality_holds());
    Ok(table)
}

/// Restriction of `matrix` to the invariant subspace spanned by `basis`
/// (rows in reduced echelon form), split into eigenspace bases.
fn split_subspace(matrix: &[Vec<u64>], basis: &[Vec<u64>], p: u64) -> Vec<Vec<Vec<u64>>> {
    let r = basis.len();
    let k = basis[0].len();
    let (echelon, pivots) = rref(basis.to_vec(), p);

    // Restriction matrix: coords of matrix * b_t in the echelon basis.
    let mut restricted = vec![vec![0u64; r]; r];
    for t in 0..r {
        let image = mat_vec(matrix, &echelon[t], p);
        let coords = coords_in_rref(&echelon, &pivots, &image, p);
        restricted[t] = coords;
    }

    let charpoly = faddeev_charpoly(&restricted, p);
    let mut out = Vec::new();
    for lambda in 0..p {
        if poly_eval(&charpoly, lambda, p) != 0 {
            continue;
        }
        // Left null space of (R - lambda I): vectors y with y R = lambda y.
        let mut shifted: Vec<Vec<u64>> = (0..r)
            .map(|row| {
                (0..r)
                    .map(|col| {
                        let v = restricted[col][row] % p; // transpose
                        if row == col {
                            (v + p - lambda % p) % p
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect();
        let null = null_space(&mut shifted, p);
        let mut eigen_rows = Vec::new();
        for y in null {
            // Back to ambient coordinates.
            let mut ambient = vec![0u64; k];
            for (t, &c) in y.iter().enumerate() {
                for col in 0..k {
                    ambient[col] = (ambient[col] + mul_mod(c, echelon[t][col], p)) % p;
                }
            }
            eigen_rows.push(ambient);
        }
        if !eigen_rows.is_empty() {
            let (reduced, _) = rref(eigen_rows, p);
            out.push(reduced);
        }
    }
    debug_assert_eq!(out.iter().map(|b| b.len()).sum::<usize>(), r);
    out
}

fn mat_vec(matrix: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    matrix
        .iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0u64, |acc, (&m, &x)| (acc + mul_mod(m, x, p)) % p)
        })
        .collect()
}

/// Row-reduced echelon form; returns the nonzero rows and their pivot columns.
fn rref(mut rows: Vec<Vec<u64>>, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = inv_mod(rows[rank][col] % p, p);
        for c in 0..ncols {
            rows[rank][c] = mul_mod(rows[rank][c], inv, p);
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_multiple_of(p) {
                let factor = rows[r][col] % p;
                for c in 0..ncols {
                    let sub = mul_mod(factor, rows[rank][c], p);
                    rows[r][c] = (rows[r][c] + p - sub) % p;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    (rows, pivots)
}

/// Coordinates of `v` in a reduced echelon basis (requires membership).
fn coords_in_rref(echelon: &[Vec<u64>], pivots: &[usize], v: &[u64], p: u64) -> Vec<u64> {
    let coords: Vec<u64> = pivots.iter().map(|&c| v[c] % p).collect();
    #[cfg(debug_assertions)]
    {
        let mut check = v.to_vec();
        for (t, &c) in coords.iter().enumerate() {
            for col in 0..v.len() {
                let sub = mul_mod(c, echelon[t][col], p);
                check[col] = (check[col] + p - sub) % p;
            }
        }
        debug_assert!(
            check.iter().all(|&x| x % p == 0),
            "vector left the subspace"
        );
    }
    coords
}

/// Basis of the null space of `m` (destroys `m`).
fn null_space(m: &mut Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let (echelon, pivots) = rref(std::mem::take(m), p);
    let mut basis = Vec::new();
    let mut pivot_iter = pivots.to_vec();
    pivot_iter.sort_unstable();
    for free in 0..n {
        if pivot_iter.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (row, &pc) in echelon.iter().zip(pivots.iter()) {
            // pivot coordinate = -(entry at the free column)
            v[pc] = (p - row[free] % p) % p;
        }
        basis.push(v);
    }
    basis
}

/// Characteristic polynomial det(xI - R), constant term first. Requires
/// p > dim so the scalar divisions stay invertible.
fn faddeev_charpoly(r_matrix: &[Vec<u64>], p: u64) -> Vec<u64> {
    let r = r_matrix.len();
    let mut coeffs = vec![0u64; r + 1];
    coeffs[r] = 1;
    let mut m: Vec<Vec<u64>> = (0..r)
        .map(|i| {
            let mut row = vec![0u64; r];
            row[i] = 1;
            row
        })
        .collect();
    for step in 1..=r {
        // M <- R * M
        let rm: Vec<Vec<u64>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        (0..r).fold(0u64, |acc, t| {
                            (acc + mul_mod(r_matrix[i][t], m[t][j], p)) % p
                        })
                    })
                    .collect()
            })
            .collect();
        let trace = (0..r).fold(0u64, |acc, i| (acc + rm[i][i]) % p);
        let c = mul_mod(p - trace % p, inv_mod(step as u64 % p, p), p) % p;
        coeffs[r - step] = c;
        m = rm;
        for i in 0..r {
            m[i][i] = (m[i][i] + c) % p;
        }
    }
    coeffs
}

fn poly_eval(coeffs: &[u64], x: u64, p: u64) -> u64 {
    coeffs
        .iter()
        .rev()
        .fold(0u64, |acc, &c| (mul_mod(acc, x, p) + c) % p)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "division by zero mod {p}");
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn choose_prime(exponent: u64, n: u64, k: u64) -> u64 {
    let sqrt2 = (1..).find(|s| s * s >= 4 * n).unwrap(); // ceil(2 sqrt n)
    let floor = sqrt2.max(k).max(2);
    let mut p = exponent + 1;
    loop {
        if p > floor && is_prime(p) {
            return p;
        }
        p += exponent;
    }
}

fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p)
        .find(|&z| factors.iter().all(|&q| pow_mod(z, (p - 1) / q, p) != 1))
        .expect("prime fields have primitive roots")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{parse_group_spec, DEFAULT_ENUM_BOUND, DEFAULT_TABLE_BOUND};

    fn table(spec: &str) -> CharacterTable {
        let g = parse_group_spec(spec).unwrap();
        let store = g.enumerate(DEFAULT_ENUM_BOUND).unwrap();
        character_table(&g, &store, DEFAULT_TABLE_BOUND).unwrap()
    }

    fn assert_valid(t: &CharacterTable) {
        assert!(t.degree_squares_sum_to_order(), "sum of squares");
        assert!(t.row_orthogonality_holds(), "row orthogonality");
        assert!(t.column_orthogonality_holds(), "column orthogonality");
        assert!(
            t.values[0].iter().all(|v| v.is_integer(1)),
            "trivial row first"
        );
        for d in &t.degrees {
            assert_eq!(t.order % d, 0, "degree divides order");
        }
    }

    #[test]
    fn z2_table() {
        let t = table("Z2");
        assert_valid(&t);
        assert_eq!(t.degrees, vec![1, 1]);
        assert!(t.values[1][0].is_integer(1));
        assert!(t.values[1][1].is_integer(-1));
    }

    #[test]
    fn s3_table() {
        let t = table("S3");
        assert_valid(&t);
        assert_eq!(t.degrees, vec![1, 1, 2]);
    }

    #[test]
    fn dihedral8_table() {
        // <(1 2 3 4), (2 4)> is dihedral of order 8.
        let t = table("(1 2 3 4); (2 4)");
        assert_valid(&t);
        assert_eq!(t.order, 8);
        assert_eq!(t.degrees, vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn s4_and_s5_tables() {
        let t = table("S4");
        assert_valid(&t);
        assert_eq!(t.degrees, vec![1, 1, 2, 3, 3]);

        let t = table("S5");
        assert_valid(&t);
        assert_eq!(t.degrees, vec![1, 1, 4, 4, 5, 5, 6]);
    }

    #[test]
    fn cyclic_tables_have_root_entries() {
        let t = table("Z5");
        assert_valid(&t);
        assert_eq!(t.conductor, 5);
        assert_eq!(t.degrees, vec![1; 5]);

        let t = table("Z2^3");
        assert_valid(&t);
        assert_eq!(t.degrees, vec![1; 8]);
    }

    #[test]
    fn weyl_b3_table() {
        let t = table("weyl:B3");
        assert_valid(&t);
        assert_eq!(t.order, 48);
        assert_eq!(t.class_count(), 10);
    }

    #[test]
    fn quaternion_style_generators() {
        // A nonabelian group of order 12 from explicit cycles.
        let t = table("(1 2 3 4 5 6); (2 6)(3 5)");
        assert_valid(&t);
        assert_eq!(t.order, 12);
    }
}
