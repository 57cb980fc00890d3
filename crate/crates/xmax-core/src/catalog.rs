//! Named-group catalog: symmetric, alternating, cyclic, dihedral and
//! generalized quaternion families, PSL(2,q)/PGL(2,q) on the projective
//! line, and direct products written with `×`.
//!
//! Every constructor asserts the declared order of the group it builds.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{direct_product, PermutationGroup};
use crate::perm::Permutation;

/// Small finite field F_q for prime powers q, with table-driven arithmetic.
/// Elements are encoded as 0..q−1, digit vectors over the prime base.
pub(crate) struct SmallField {
    pub q: u64,
    add: Vec<u64>,
    mul: Vec<u64>,
    /// A generator of the multiplicative group.
    pub primitive: u64,
}

impl SmallField {
    pub fn new(q: u64) -> Result<SmallField> {
        let (p, k) = prime_power(q)
            .ok_or_else(|| Error::Parse(format!("{q} is not a prime power")))?;
        // irreducible polynomials (low-degree coefficients, monic implied)
        let poly: &[u64] = match q {
            4 => &[1, 1],
            8 => &[1, 1, 0],
            9 => &[1, 0],
            16 => &[1, 1, 0, 0],
            25 => &[2, 1],
            27 => &[1, 2, 0],
            32 => &[1, 0, 1, 0, 0],
            49 => &[1, 1],
            _ if k == 1 => &[],
            _ => {
                return Err(Error::Parse(format!(
                    "field size {q} not supported (prime powers up to 49)"
                )))
            }
        };
        let digits = |mut x: u64| -> Vec<u64> {
            let mut d = vec![0; k as usize];
            for slot in d.iter_mut() {
                *slot = x % p;
                x /= p;
            }
            d
        };
        let undigits = |d: &[u64]| -> u64 {
            d.iter().rev().fold(0, |acc, &c| acc * p + c)
        };
        let n = q as usize;
        let mut add = vec![0u64; n * n];
        let mut mul = vec![0u64; n * n];
        for a in 0..q {
            for b in 0..q {
                let da = digits(a);
                let db = digits(b);
                let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&sum);
                // polynomial product reduced modulo the defining polynomial
                let mut prod = vec![0u64; 2 * k as usize];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for i in (k as usize..prod.len()).rev() {
                    let c = prod[i];
                    if c == 0 {
                        continue;
                    }
                    prod[i] = 0;
                    for (j, &pc) in poly.iter().enumerate() {
                        let idx = i - k as usize + j;
                        prod[idx] = (prod[idx] + p * p - c * pc % p) % p;
                    }
                }
                mul[(a * q + b) as usize] = undigits(&prod[..k as usize]);
            }
        }
        let mut field = SmallField {
            q,
            add,
            mul,
            primitive: 0,
        };
        field.primitive = (1..q)
            .find(|&x| field.multiplicative_order(x) == q - 1)
            .expect("finite field has a primitive element");
        Ok(field)
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn inv(&self, a: u64) -> u64 {
        (1..self.q)
            .find(|&x| self.mul(a, x) == 1)
            .expect("nonzero element has an inverse")
    }

    fn multiplicative_order(&self, a: u64) -> u64 {
        if a == 0 {
            return 0;
        }
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = crate::classes::prime_factors(q)[0];
    let mut k = 0;
    let mut m = q;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    if m == 1 {
        Some((p, k))
    } else {
        None
    }
}

/// PGL(2,q) acting on the q+1 points of the projective line: the points
/// are x ∈ 0..q (affine) and q (infinity); generators are the Möbius maps
/// x ↦ x+1, x ↦ λx (λ primitive), x ↦ 1/x, i.e. the images of the
/// matrices [[1,1],[0,1]], [[λ,0],[0,1]], [[0,1],[1,0]] modulo scalars.
pub fn pgl2(q: u64, caps: &Caps) -> Result<PermutationGroup> {
    let f = SmallField::new(q)?;
    let degree = (q + 1) as u32;
    let inf = q;
    let translate: Vec<u32> = (0..=q)
        .map(|x| if x == inf { inf } else { f.add(x, 1) } as u32)
        .collect();
    let scale: Vec<u32> = (0..=q)
        .map(|x| if x == inf { inf } else { f.mul(f.primitive, x) } as u32)
        .collect();
    let invert: Vec<u32> = (0..=q)
        .map(|x| {
            let y = if x == inf {
                0
            } else if x == 0 {
                inf
            } else {
                f.inv(x)
            };
            y as u32
        })
        .collect();
    let gens = vec![
        Permutation::from_images(translate)?,
        Permutation::from_images(scale)?,
        Permutation::from_images(invert)?,
    ];
    let g = PermutationGroup::from_generators(gens, degree, Some(format!("PGL(2,{q})")), caps)?;
    let expected = q * (q - 1) * (q + 1);
    if g.order() != expected {
        return Err(Error::TheoremViolation(format!(
            "PGL(2,{q}) built with order {}, expected {expected}",
            g.order()
        )));
    }
    Ok(g)
}

/// PSL(2,q) as the derived subgroup of PGL(2,q), still on q+1 points.
/// For q = 2 the two groups coincide (the determinant is trivial over F₂)
/// while PGL(2,2) is not perfect, so that case is taken directly.
pub fn psl2(q: u64, caps: &Caps) -> Result<PermutationGroup> {
    let pgl = pgl2(q, caps)?;
    if q == 2 {
        return PermutationGroup::from_generators(
            pgl.generators().to_vec(),
            pgl.degree(),
            Some("PSL(2,2)".into()),
            caps,
        );
    }
    let derived = pgl.derived_subgroup()?;
    let g = PermutationGroup::from_generators(
        derived.generators(),
        pgl.degree(),
        Some(format!("PSL(2,{q})")),
        caps,
    )?;
    let gcd = if q.is_multiple_of(2) { 1 } else { 2 };
    let expected = q * (q - 1) * (q + 1) / gcd;
    if g.order() != expected {
        return Err(Error::TheoremViolation(format!(
            "PSL(2,{q}) built with order {}, expected {expected}",
            g.order()
        )));
    }
    Ok(g)
}

fn sym(n: u32, caps: &Caps) -> Result<PermutationGroup> {
    let name = format!("Sym({n})");
    if n <= 1 {
        return PermutationGroup::from_generators(vec![], n.max(1), Some(name), caps);
    }
    let transposition = Permutation::parse("(0 1)", n)?;
    let cycle = Permutation::from_images((1..n).chain(std::iter::once(0)).collect())?;
    PermutationGroup::from_generators(vec![transposition, cycle], n, Some(name), caps)
}

fn alt(n: u32, caps: &Caps) -> Result<PermutationGroup> {
    let name = format!("Alt({n})");
    if n <= 2 {
        return PermutationGroup::from_generators(vec![], n.max(1), Some(name), caps);
    }
    let three_cycle = Permutation::parse("(0 1 2)", n)?;
    let long = if n % 2 == 1 {
        Permutation::from_images((1..n).chain(std::iter::once(0)).collect())?
    } else {
        // (1 2 … n−1), fixing 0
        let mut images: Vec<u32> = (0..n).collect();
        for i in 1..n {
            images[i as usize] = if i + 1 < n { i + 1 } else { 1 };
        }
        Permutation::from_images(images)?
    };
    PermutationGroup::from_generators(vec![three_cycle, long], n, Some(name), caps)
}

fn cyclic(n: u32, caps: &Caps) -> Result<PermutationGroup> {
    let name = format!("Z({n})");
    if n <= 1 {
        return PermutationGroup::from_generators(vec![], 1, Some(name), caps);
    }
    let cycle = Permutation::from_images((1..n).chain(std::iter::once(0)).collect())?;
    PermutationGroup::from_generators(vec![cycle], n, Some(name), caps)
}

/// Dihedral group of order `n` (n even, n ≥ 4).
fn dihedral(n: u32, caps: &Caps) -> Result<PermutationGroup> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::Parse(format!(
            "D(n) requires even order n ≥ 4, got {n}"
        )));
    }
    let name = format!("D({n})");
    let m = n / 2;
    let g = if m == 2 {
        // Klein four group on 4 points
        PermutationGroup::from_generators(
            vec![Permutation::parse("(0 1)", 4)?, Permutation::parse("(2 3)", 4)?],
            4,
            Some(name),
            caps,
        )?
    } else {
        let rotation = Permutation::from_images((1..m).chain(std::iter::once(0)).collect())?;
        let reflection =
            Permutation::from_images((0..m).map(|i| (m - i) % m).collect())?;
        PermutationGroup::from_generators(vec![rotation, reflection], m, Some(name), caps)?
    };
    debug_assert_eq!(g.order(), n as u64);
    Ok(g)
}

/// Generalized quaternion group of order `n` (a power of two, n ≥ 8), in
/// its regular representation: every subgroup contains the central
/// involution, so no smaller faithful action exists.
fn quaternion(n: u32, caps: &Caps) -> Result<PermutationGroup> {
    if n < 8 || !n.is_power_of_two() {
        return Err(Error::Parse(format!(
            "Q(n) requires a power of two n ≥ 8, got {n}"
        )));
    }
    let name = format!("Q({n})");
    let half = n / 2; // order of the cyclic part ⟨a⟩
    let m = half / 2; // b² = a^m
    // elements a^i b^j encoded as i + half·j
    let idx = |i: u32, j: u32| i % half + half * j;
    let mut a_images = vec![0u32; n as usize];
    let mut b_images = vec![0u32; n as usize];
    for i in 0..half {
        // (a^i)·a = a^{i+1};  (a^i b)·a = a^{i−1} b
        a_images[idx(i, 0) as usize] = idx(i + 1, 0);
        a_images[idx(i, 1) as usize] = idx((i + half - 1) % half, 1);
        // (a^i)·b = a^i b;  (a^i b)·b = a^{i+m}
        b_images[idx(i, 0) as usize] = idx(i, 1);
        b_images[idx(i, 1) as usize] = idx(i + m, 0);
    }
    let g = PermutationGroup::from_generators(
        vec![
            Permutation::from_images(a_images)?,
            Permutation::from_images(b_images)?,
        ],
        n,
        Some(name),
        caps,
    )?;
    if g.order() != n as u64 {
        return Err(Error::TheoremViolation(format!(
            "Q({n}) built with order {}",
            g.order()
        )));
    }
    Ok(g)
}

/// One factor of a product name, e.g. `Sym(4)` or `PSL(2,7)`.
fn build_atom(name: &str, caps: &Caps) -> Result<PermutationGroup> {
    let name = name.trim();
    if name == "1" {
        return cyclic(1, caps);
    }
    let (head, args) = match name.find('(') {
        Some(open) => {
            let close = name
                .rfind(')')
                .ok_or_else(|| Error::Parse(format!("unclosed '(' in {name}")))?;
            (&name[..open], &name[open + 1..close])
        }
        None => return Err(Error::UnknownName(name.to_string())),
    };
    let nums: Vec<u64> = args
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad parameter '{t}' in {name}")))
        })
        .collect::<Result<_>>()?;
    let one_arg = || -> Result<u32> {
        if nums.len() == 1 && nums[0] <= u32::MAX as u64 {
            Ok(nums[0] as u32)
        } else {
            Err(Error::Parse(format!("{name} takes one numeric parameter")))
        }
    };
    match head {
        "Sym" | "S" => {
            let n = one_arg()?;
            if n > 12 {
                return Err(Error::Parse(format!("Sym({n}) out of supported range")));
            }
            sym(n, caps)
        }
        "Alt" | "A" => {
            let n = one_arg()?;
            if n > 12 {
                return Err(Error::Parse(format!("Alt({n}) out of supported range")));
            }
            alt(n, caps)
        }
        "Z" | "C" => cyclic(one_arg()?, caps),
        "D" => dihedral(one_arg()?, caps),
        "Q" => quaternion(one_arg()?, caps),
        "PSL" | "PGL" => {
            if nums.len() != 2 || nums[0] != 2 {
                return Err(Error::Parse(format!(
                    "{head}(n,q) supports n = 2 only, got {name}"
                )));
            }
            let q = nums[1];
            if !(2..=13).contains(&q) {
                return Err(Error::Parse(format!("{head}(2,{q}) out of supported range")));
            }
            if head == "PSL" {
                psl2(q, caps)
            } else {
                pgl2(q, caps)
            }
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

/// Splits a product name on `×` (or the ASCII fallback `x` between
/// factors).
pub fn split_product(name: &str) -> Vec<String> {
    name.replace('×', "\u{0}")
        .replace(" x ", "\u{0}")
        .split('\u{0}')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

/// Builds a catalog group by name, e.g. `"Sym(5)"`, `"PSL(2,7)"`,
/// `"Sym(3)×Alt(5)"`. Orders are asserted against the declared values.
pub fn build_group(name: &str, caps: &Caps) -> Result<PermutationGroup> {
    let parts = split_product(name);
    if parts.is_empty() {
        return Err(Error::UnknownName(name.to_string()));
    }
    let mut g = build_atom(&parts[0], caps)?;
    for part in &parts[1..] {
        let h = build_atom(part, caps)?;
        let expected = g.order() * h.order();
        let p = direct_product(&g, &h, caps)?;
        g = p.group;
        if g.order() != expected {
            return Err(Error::TheoremViolation(format!(
                "product {name} built with order {}, expected {expected}",
                g.order()
            )));
        }
    }
    if parts.len() > 1 {
        let display: Vec<String> = parts.to_vec();
        g = PermutationGroup::from_generators(
            g.generators().to_vec(),
            g.degree(),
            Some(display.join("×")),
            caps,
        )?;
    }
    Ok(g)
}

/// Degrees of the factors of a product name (for resolving factor-wise
/// normal-subgroup patterns like `1×Alt(5)`).
pub fn factor_degrees(name: &str, caps: &Caps) -> Result<Vec<(String, u32)>> {
    split_product(name)
        .into_iter()
        .map(|part| build_atom(&part, caps).map(|g| (part, g.degree())))
        .collect()
}

/// Builds the subgroup of `g` (a product built from `group_name`) matching
/// a factor-wise pattern: each slot is either `1` (trivial on that factor)
/// or a catalog name whose permutation action embeds on the factor's
/// points. The result must be a subgroup of `g`; normality is checked by
/// the caller where required.
pub fn resolve_factor_pattern(
    g: &PermutationGroup,
    group_name: &str,
    pattern: &str,
    caps: &Caps,
) -> Result<crate::group::Subgroup> {
    let g_factors = factor_degrees(group_name, caps)?;
    let p_parts = split_product(pattern);
    if g_factors.len() != p_parts.len() {
        return Err(Error::Parse(format!(
            "pattern {pattern} has {} factors, group {group_name} has {}",
            p_parts.len(),
            g_factors.len()
        )));
    }
    let degree = g.degree();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut offset = 0u32;
    for ((_, fdeg), part) in g_factors.iter().zip(&p_parts) {
        if part != "1" && part != "Z(1)" {
            let factor = build_atom(part, caps)?;
            if factor.degree() != *fdeg {
                return Err(Error::Parse(format!(
                    "factor {part} acts on {} points but the slot has {fdeg}",
                    factor.degree()
                )));
            }
            for fg in factor.generators() {
                let mut images: Vec<u32> = (0..degree).collect();
                for (i, &img) in fg.images().iter().enumerate() {
                    images[offset as usize + i] = offset + img;
                }
                gens.push(Permutation::from_images(images)?);
            }
        }
        offset += fdeg;
    }
    if offset != degree {
        return Err(Error::Parse(format!(
            "pattern degrees sum to {offset}, group degree is {degree}"
        )));
    }
    g.subgroup_generated(&gens)
}

/// The default named corpus, ordered by group order.
pub fn default_corpus_names() -> Vec<&'static str> {
    vec![
        "Z(1)",
        "Z(2)",
        "Z(3)",
        "Z(4)",
        "Z(5)",
        "Z(6)",
        "Z(7)",
        "Z(8)",
        "Z(9)",
        "Z(10)",
        "Z(11)",
        "Z(12)",
        "D(8)",
        "D(10)",
        "D(12)",
        "D(14)",
        "D(16)",
        "Q(8)",
        "Q(16)",
        "Sym(3)",
        "Sym(4)",
        "Sym(5)",
        "Sym(6)",
        "Alt(3)",
        "Alt(4)",
        "Alt(5)",
        "Alt(6)",
        "PSL(2,7)",
        "Sym(3)×Alt(5)",
        "Alt(3)×Alt(5)",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn field_arithmetic() {
        let f8 = SmallField::new(8).unwrap();
        // characteristic two: x + x = 0
        for x in 0..8 {
            assert_eq!(f8.add(x, x), 0);
        }
        // multiplicative group is cyclic of order 7
        assert_eq!(f8.multiplicative_order(f8.primitive), 7);
        for x in 1..8 {
            assert_eq!(f8.mul(x, f8.inv(x)), 1);
        }
        let f9 = SmallField::new(9).unwrap();
        assert_eq!(f9.multiplicative_order(f9.primitive), 8);
    }

    #[test]
    fn catalog_orders() {
        for (name, order, degree) in [
            ("Z(1)", 1, 1),
            ("Z(6)", 6, 6),
            ("D(8)", 8, 4),
            ("D(4)", 4, 4),
            ("Q(8)", 8, 8),
            ("Q(16)", 16, 16),
            ("Sym(3)", 6, 3),
            ("Sym(6)", 720, 6),
            ("Alt(6)", 360, 6),
            ("PSL(2,2)", 6, 3),
            ("PSL(2,3)", 12, 4),
            ("PGL(2,3)", 24, 4),
            ("PSL(2,7)", 168, 8),
            ("PGL(2,7)", 336, 8),
            ("PSL(2,8)", 504, 9),
            ("PSL(2,11)", 660, 12),
            ("PSL(2,13)", 1092, 14),
            ("Sym(3)×Alt(5)", 360, 8),
        ] {
            let g = build_group(name, &caps()).unwrap();
            assert_eq!(g.order(), order, "{name}");
            assert_eq!(g.degree(), degree, "{name}");
        }
    }

    #[test]
    fn unknown_names_rejected() {
        assert!(build_group("Borel(7)", &caps()).is_err());
        assert!(build_group("Sym(99)", &caps()).is_err());
        assert!(build_group("PSL(3,3)", &caps()).is_err());
        assert!(build_group("D(7)", &caps()).is_err());
        assert!(build_group("Q(12)", &caps()).is_err());
    }

    #[test]
    fn q8_has_unique_involution() {
        let q8 = build_group("Q(8)", &caps()).unwrap();
        let involutions = q8
            .elements()
            .unwrap()
            .iter()
            .filter(|p| p.order() == 2)
            .count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn factor_pattern_resolution() {
        let caps = caps();
        let g = build_group("Sym(3)×Alt(5)", &caps).unwrap();
        let n = resolve_factor_pattern(&g, "Sym(3)×Alt(5)", "1×Alt(5)", &caps).unwrap();
        assert_eq!(n.order(), 60);
        assert!(n.is_normal().unwrap());
        let m = resolve_factor_pattern(&g, "Sym(3)×Alt(5)", "Alt(3)×1", &caps).unwrap();
        assert_eq!(m.order(), 3);
        assert!(resolve_factor_pattern(&g, "Sym(3)×Alt(5)", "Alt(5)×1", &caps).is_err());
    }

    #[test]
    fn catalog_determinism() {
        // two builds of the same name are isomorphic (indeed identical here)
        let a = build_group("PSL(2,7)", &caps()).unwrap();
        let b = build_group("PSL(2,7)", &caps()).unwrap();
        assert!(crate::iso::are_isomorphic(&a, &b).unwrap().is_some());
    }

    #[test]
    fn alt_generators_even_case() {
        assert_eq!(build_group("Alt(4)", &caps()).unwrap().order(), 12);
        assert_eq!(build_group("Alt(6)", &caps()).unwrap().order(), 360);
    }
}
