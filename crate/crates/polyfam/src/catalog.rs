//! Explicit constructions of the maximal-subgroup candidates at degrees
//! 6–9: the intransitive and imprimitive families, the handful of primitive
//! groups that occur, and the maximal subgroups of the alternating groups.
//!
//! Groups are stored as generator lists; every constructor validates the
//! resulting order by enumeration, so a wrong generator set fails loudly.
//! Maximality itself is NOT checked — it is classical data the certifier
//! relies on.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::perm::{factorial, GroupSpec, Perm, PermError, DEFAULT_CAP};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("{0} does not divide {1}")]
    NotADivisor(usize, usize),
    #[error("unknown catalog name: {0}")]
    UnknownName(String),
    #[error("catalog entry {name}: expected order {expected}, enumerated {got}")]
    OrderMismatch {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("catalog entry {0}: {1}")]
    FlagMismatch(String, &'static str),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Which of the subgroup families an entry belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Intransitive,
    Imprimitive,
    Primitive,
    AlternatingMaximal,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Intransitive => "intransitive",
            Family::Imprimitive => "imprimitive",
            Family::Primitive => "primitive",
            Family::AlternatingMaximal => "alternating-maximal",
        };
        write!(f, "{s}")
    }
}

/// A named, validated subgroup of S_n.
#[derive(Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: GroupSpec,
    pub degree: usize,
    pub expected_order: usize,
    pub family: Family,
}

impl CatalogEntry {
    fn validated(
        name: impl Into<String>,
        group: GroupSpec,
        expected_order: usize,
        family: Family,
    ) -> Result<Self, CatalogError> {
        let name = name.into();
        let degree = group.degree();
        let got = group.order()?;
        if got != expected_order {
            return Err(CatalogError::OrderMismatch {
                name,
                expected: expected_order,
                got,
            });
        }
        match family {
            Family::Intransitive => {
                if group.is_transitive() {
                    return Err(CatalogError::FlagMismatch(name, "expected intransitive"));
                }
            }
            Family::Imprimitive => {
                if !group.is_transitive() || group.is_primitive() {
                    return Err(CatalogError::FlagMismatch(
                        name,
                        "expected transitive imprimitive",
                    ));
                }
            }
            Family::Primitive => {
                if !group.is_primitive() {
                    return Err(CatalogError::FlagMismatch(name, "expected primitive"));
                }
            }
            Family::AlternatingMaximal => {
                if !group.is_even()? {
                    return Err(CatalogError::FlagMismatch(
                        name,
                        "expected a subgroup of the alternating group",
                    ));
                }
            }
        }
        Ok(CatalogEntry {
            name,
            group,
            degree,
            expected_order,
            family,
        })
    }

    /// Index in the full symmetric group of the same degree.
    pub fn index_in_symmetric(&self) -> usize {
        factorial(self.degree) / self.expected_order
    }
}

/// S_j × S_{n−j} acting on {1..j} ⊔ {j+1..n}.
pub fn intransitive(n: usize, j: usize) -> Result<CatalogEntry, CatalogError> {
    assert!(j >= 1 && j < n, "need 1 ≤ j < n");
    let mut gens = Vec::new();
    push_symmetric_gens(&mut gens, n, 0, j);
    push_symmetric_gens(&mut gens, n, j, n - j);
    let group = GroupSpec::new(n, format!("S{j} x S{}", n - j), gens)?;
    CatalogEntry::validated(
        format!("S{j} x S{}", n - j),
        group,
        factorial(j) * factorial(n - j),
        Family::Intransitive,
    )
}

/// Generators of the symmetric group on the window [start, start+len) inside
/// S_n: an adjacent transposition and a full cycle of the window.
fn push_symmetric_gens(gens: &mut Vec<Perm>, n: usize, start: usize, len: usize) {
    if len >= 2 {
        gens.push(Perm::from_cycles(n, &[&[start as u16, start as u16 + 1]]).unwrap());
    }
    if len >= 3 {
        let cyc: Vec<u16> = (start..start + len).map(|x| x as u16).collect();
        gens.push(Perm::from_cycles(n, &[&cyc]).unwrap());
    }
}

/// The wreath product S_j ≀ S_{n/j} with blocks {1..j}, {j+1..2j}, …
pub fn imprimitive(n: usize, j: usize) -> Result<CatalogEntry, CatalogError> {
    if j < 2 || j >= n || !n.is_multiple_of(j) {
        return Err(CatalogError::NotADivisor(j, n));
    }
    let b = n / j;
    let mut gens = Vec::new();
    // S_j on the first block
    push_symmetric_gens(&mut gens, n, 0, j);
    // block swap (block 0 ↔ block 1) and block cycle
    let mut swap: Vec<u16> = (0..n as u16).collect();
    for k in 0..j {
        swap.swap(k, j + k);
    }
    gens.push(Perm::from_images(swap)?);
    if b >= 3 {
        let mut rot: Vec<u16> = vec![0; n];
        for blk in 0..b {
            for k in 0..j {
                rot[blk * j + k] = (((blk + 1) % b) * j + k) as u16;
            }
        }
        gens.push(Perm::from_images(rot)?);
    }
    let order = factorial(j).pow(b as u32) * factorial(b);
    let group = GroupSpec::new(n, format!("S{j} wr S{b}"), gens)?;
    CatalogEntry::validated(format!("S{j} wr S{b}"), group, order, Family::Imprimitive)
}

/// 3×3 matrices over 𝔽₂ as bit-matrix rows; acts on vectors v ∈ {1..7}
/// encoded little-endian (bit k of v = coordinate k).
fn gl3_f2_perm(m: [[u8; 3]; 3]) -> Perm {
    let mut img = vec![0u16; 7];
    for v in 1u16..8 {
        let mut w = 0u16;
        for (r, row) in m.iter().enumerate() {
            let mut bit = 0u16;
            for (c, &entry) in row.iter().enumerate() {
                bit ^= (entry as u16) & (v >> c);
            }
            w |= (bit & 1) << r;
        }
        img[(v - 1) as usize] = w - 1;
    }
    Perm::from_images(img).unwrap()
}

/// Affine map v ↦ Mv + t on 𝔽₂³ = {0..7}.
fn agl3_f2_perm(m: [[u8; 3]; 3], t: [u8; 3]) -> Perm {
    let mut img = vec![0u16; 8];
    for v in 0u16..8 {
        let mut w = 0u16;
        for (r, row) in m.iter().enumerate() {
            let mut bit = t[r] as u16;
            for (c, &entry) in row.iter().enumerate() {
                bit ^= (entry as u16) & (v >> c);
            }
            w |= (bit & 1) << r;
        }
        img[v as usize] = w;
    }
    Perm::from_images(img).unwrap()
}

/// Möbius transformation z ↦ (az+b)/(cz+d) on ℙ¹(𝔽_q), points labeled
/// 0..q−1 = residues and q = ∞.
fn mobius_perm(q: u64, a: u64, b: u64, c: u64, d: u64) -> Perm {
    let inv = |x: u64| -> u64 {
        // q prime; Fermat inverse
        let mut acc = 1u64;
        let mut base = x % q;
        let mut e = q - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % q;
            }
            base = base * base % q;
            e >>= 1;
        }
        acc
    };
    let n = q as usize + 1;
    let mut img = vec![0u16; n];
    for z in 0..q {
        let den = (c * z + d) % q;
        img[z as usize] = if den == 0 {
            q as u16
        } else {
            (((a * z + b) % q) * inv(den) % q) as u16
        };
    }
    img[q as usize] = if c.is_multiple_of(q) {
        q as u16
    } else {
        (a % q * inv(c) % q) as u16
    };
    Perm::from_images(img).unwrap()
}

/// Companion matrix of x³ + x + 1 over 𝔽₂ (order 7) — columns are the images
/// of e₁, e₂, e₃.
const GL3_SINGER: [[u8; 3]; 3] = [[0, 0, 1], [1, 0, 1], [0, 1, 0]];
/// Transvection e₁ ↦ e₁, e₂ ↦ e₁+e₂ (row form: w₀ = v₀ + v₁).
const GL3_TRANSVECTION: [[u8; 3]; 3] = [[1, 1, 0], [0, 1, 0], [0, 0, 1]];

/// The specific primitive groups occurring as maximal subgroups at degrees
/// 6–8. Recognized names: "PGL2(F5)" (degree 6), "PSL2(F5)" (degree 6, the
/// even half of the former), "PSL2(F7)" (degree 7, realized as GL₃(𝔽₂) on the
/// 7 nonzero vectors), "PGL2(F7)" (degree 8, Möbius on ℙ¹(𝔽₇)), "AGL3(2)"
/// (degree 8, affine maps on 𝔽₂³).
pub fn primitive_named(name: &str) -> Result<CatalogEntry, CatalogError> {
    let (group, order) = match name {
        "PGL2(F5)" => {
            // z+1, 1/z, 2z: the scaling has nonsquare determinant, so this
            // reaches past the index-2 even subgroup
            let gens = vec![
                mobius_perm(5, 1, 1, 0, 1),
                mobius_perm(5, 0, 1, 1, 0),
                mobius_perm(5, 2, 0, 0, 1),
            ];
            (GroupSpec::new(6, name, gens)?, 120)
        }
        "PSL2(F5)" => {
            // z+1 and 1/z only: det(−1) is a square mod 5, so this stays even
            let gens = vec![mobius_perm(5, 1, 1, 0, 1), mobius_perm(5, 0, 1, 1, 0)];
            (GroupSpec::new(6, name, gens)?, 60)
        }
        "PSL2(F7)" => {
            let gens = vec![gl3_f2_perm(GL3_SINGER), gl3_f2_perm(GL3_TRANSVECTION)];
            (GroupSpec::new(7, name, gens)?, 168)
        }
        "PGL2(F7)" => {
            let gens = vec![mobius_perm(7, 1, 1, 0, 1), mobius_perm(7, 0, 1, 1, 0)];
            (GroupSpec::new(8, name, gens)?, 336)
        }
        "AGL3(2)" => {
            let gens = vec![
                agl3_f2_perm(GL3_SINGER, [0, 0, 0]),
                agl3_f2_perm(GL3_TRANSVECTION, [0, 0, 0]),
                agl3_f2_perm([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [1, 0, 0]),
            ];
            (GroupSpec::new(8, name, gens)?, 1344)
        }
        other => return Err(CatalogError::UnknownName(other.to_string())),
    };
    CatalogEntry::validated(name, group, order, Family::Primitive)
}

/// The even-permutation half of a catalog group (requires the group to
/// contain odd elements; order halves).
pub fn even_part(
    entry: &CatalogEntry,
    name: impl Into<String>,
) -> Result<CatalogEntry, CatalogError> {
    let els = entry.group.enumerate_elements(DEFAULT_CAP)?;
    let even: Vec<Perm> = els.iter().filter(|p| p.sign() == 1).cloned().collect();
    assert_eq!(
        even.len() * 2,
        els.len(),
        "even_part needs a group with odd elements"
    );
    let name = name.into();
    let group = GroupSpec::from_elements(entry.degree, name.clone(), even)?;
    CatalogEntry::validated(
        name,
        group,
        entry.expected_order / 2,
        Family::AlternatingMaximal,
    )
}

/// The alternating group A_{n−1} fixing the last point, as a subgroup of S_n.
fn point_stabilizer_alternating(n: usize) -> Result<CatalogEntry, CatalogError> {
    let k = n - 1;
    let mut gens = Vec::new();
    if k >= 3 {
        gens.push(Perm::from_cycles(n, &[&[0, 1, 2]]).unwrap());
    }
    if k >= 4 {
        let cyc: Vec<u16> = if k % 2 == 1 {
            (0..k as u16).collect()
        } else {
            (1..k as u16).collect()
        };
        gens.push(Perm::from_cycles(n, &[&cyc]).unwrap());
    }
    let group = GroupSpec::new(n, format!("A{k}"), gens)?;
    CatalogEntry::validated(
        format!("A{k} (point stabilizer)"),
        group,
        factorial(k) / 2,
        Family::AlternatingMaximal,
    )
}

/// The normalizer in A₆ of the Sylow 3-subgroup ⟨(1 2 3), (4 5 6)⟩, found by
/// exhaustive search over the 360 elements (order 36, transitive).
fn sylow3_normalizer_a6() -> Result<CatalogEntry, CatalogError> {
    let p1 = Perm::from_cycles(6, &[&[0, 1, 2]]).unwrap();
    let p2 = Perm::from_cycles(6, &[&[3, 4, 5]]).unwrap();
    let sylow = GroupSpec::new(6, "3x3", vec![p1.clone(), p2.clone()])?;
    let sylow_els = sylow.enumerate_elements(DEFAULT_CAP)?;
    assert_eq!(sylow_els.len(), 9);
    let a6 = GroupSpec::alternating(6);
    let mut normalizer = Vec::new();
    for g in a6.enumerate_elements(DEFAULT_CAP)? {
        if sylow_els
            .iter()
            .all(|x| sylow_els.binary_search(&x.conjugate_by(g)).is_ok())
        {
            normalizer.push(g.clone());
        }
    }
    let group = GroupSpec::from_elements(6, "(3x3):4", normalizer)?;
    CatalogEntry::validated("(3x3):4", group, 36, Family::AlternatingMaximal)
}

/// The maximal subgroups of S_n other than A_n, for 6 ≤ n ≤ 9 (the degrees
/// where per-case certification is required; the point-stabilizer j = 1 case
/// is handled by the generic curve bound and is not listed here).
pub fn symmetric_maximals(n: usize) -> Result<Vec<CatalogEntry>, CatalogError> {
    assert!((6..=9).contains(&n));
    let mut out = Vec::new();
    // intransitive maximals: S_j × S_{n−j} for 2 ≤ j < n/2 (j = n/2 sits
    // inside the wreath product; j = 1 is the family curve itself)
    for j in 2..=(n - 1) / 2 {
        out.push(intransitive(n, j)?);
    }
    for j in 2..n {
        if n.is_multiple_of(j) {
            out.push(imprimitive(n, j)?);
        }
    }
    match n {
        6 => out.push(primitive_named("PGL2(F5)")?),
        7 => out.push(primitive_named("PSL2(F7)")?),
        8 => {
            out.push(primitive_named("PGL2(F7)")?);
            out.push(primitive_named("AGL3(2)")?);
        }
        9 => { /* primitive candidates are covered by the index bound */ }
        _ => unreachable!(),
    }
    Ok(out)
}

/// The maximal subgroups of A_n for 6 ≤ n ≤ 9 that require explicit
/// treatment. For n = 9 only the two small-index entries are constructed;
/// the rest are covered by the generic index-≥84 bound in the certifier.
pub fn alternating_maximals(n: usize) -> Result<Vec<CatalogEntry>, CatalogError> {
    assert!((6..=9).contains(&n));
    let mut out = Vec::new();
    out.push(point_stabilizer_alternating(n)?);
    match n {
        6 => {
            // the second conjugacy class of order-60 subgroups: even Möbius
            // maps on ℙ¹(𝔽₅); its unramified-point counts differ from the
            // point stabilizer's, so both classes are reported
            let exotic = primitive_named("PSL2(F5)")?;
            out.push(CatalogEntry::validated(
                "A5 (exotic, PSL2(F5))",
                exotic.group,
                60,
                Family::AlternatingMaximal,
            )?);
            out.push(sylow3_normalizer_a6()?);
            out.push(even_part(&intransitive(6, 2)?, "S4 = even(S2 x S4)")?);
        }
        7 => {
            let psl = primitive_named("PSL2(F7)")?;
            out.push(CatalogEntry::validated(
                "PSL2(F7)",
                psl.group,
                168,
                Family::AlternatingMaximal,
            )?);
            out.push(even_part(&intransitive(7, 2)?, "S5 = even(S2 x S5)")?);
            out.push(even_part(
                &intransitive(7, 3)?,
                "(A4 x 3):2 = even(S3 x S4)",
            )?);
        }
        8 => {
            let agl = primitive_named("AGL3(2)")?;
            out.push(CatalogEntry::validated(
                "AGL3(2) = 2^3:PSL2(F7)",
                agl.group,
                1344,
                Family::AlternatingMaximal,
            )?);
            out.push(even_part(&intransitive(8, 2)?, "S6 = even(S2 x S6)")?);
            out.push(even_part(
                &imprimitive(8, 4)?,
                "2^4:(S3 x S3) = even(S4 wr S2)",
            )?);
            out.push(even_part(
                &intransitive(8, 3)?,
                "(A5 x 3):2 = even(S3 x S5)",
            )?);
        }
        9 => {
            out.push(even_part(&intransitive(9, 2)?, "S7 = even(S2 x S7)")?);
        }
        _ => unreachable!(),
    }
    Ok(out)
}
