//! Exact permutation arithmetic on small degrees, subgroup enumeration, and
//! the coset machinery behind ramification counting.
//!
//! Everything here targets explicit enumeration at degree n ≤ 10 plus closed
//! forms; there is deliberately no Schreier–Sims or stabilizer-chain
//! machinery. Element lists are capped (default 4·10⁶, enough for |S₁₀|) and
//! operations fail loudly with [`PermError::CapExceeded`] past the cap.
//!
//! Conventions: points are 0-based internally and 1-based in `Display`;
//! `compose(p, q)` applies `q` first, then `p`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

/// Default cap on enumerated element lists: covers |S₁₀| = 3 628 800.
pub const DEFAULT_CAP: usize = 4_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("element enumeration exceeded cap of {0}")]
    CapExceeded(usize),
    #[error("{0} does not divide {1}")]
    NotADivisor(usize, usize),
    #[error("point {0} out of range for degree {1}")]
    PointOutOfRange(usize, usize),
    #[error("images are not a bijection")]
    NotABijection,
    #[error("element list is not closed under composition")]
    NotAGroup,
}

/// A permutation of {0..n-1}, stored as the image vector `img[i] = p(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u16>,
}

impl Perm {
    /// Identity permutation on `n` points.
    pub fn identity(n: usize) -> Self {
        Perm {
            img: (0..n as u16).collect(),
        }
    }

    /// Build from an image vector (0-based); checks bijectivity.
    pub fn from_images(img: Vec<u16>) -> Result<Self, PermError> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &v in &img {
            if (v as usize) >= n || seen[v as usize] {
                return Err(PermError::NotABijection);
            }
            seen[v as usize] = true;
        }
        Ok(Perm { img })
    }

    /// Build from disjoint cycles given in 0-based points.
    pub fn from_cycles(n: usize, cycles: &[&[u16]]) -> Result<Self, PermError> {
        let mut img: Vec<u16> = (0..n as u16).collect();
        for cyc in cycles {
            for k in 0..cyc.len() {
                let from = cyc[k] as usize;
                if from >= n {
                    return Err(PermError::PointOutOfRange(from, n));
                }
                img[from] = cyc[(k + 1) % cyc.len()];
            }
        }
        Perm::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.img
    }

    pub fn apply(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    /// Composition: `(p ∘ q)(i) = p(q(i))` — apply `q` first.
    pub fn compose(&self, q: &Perm) -> Result<Perm, PermError> {
        if self.degree() != q.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), q.degree()));
        }
        Ok(Perm {
            img: q.img.iter().map(|&i| self.img[i as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u16; self.degree()];
        for (i, &v) in self.img.iter().enumerate() {
            img[v as usize] = i as u16;
        }
        Perm { img }
    }

    /// Conjugate `self` by `s`: returns `s ∘ self ∘ s⁻¹`.
    pub fn conjugate_by(&self, s: &Perm) -> Perm {
        let mut img = vec![0u16; self.degree()];
        for i in 0..self.degree() {
            img[s.img[i] as usize] = s.img[self.img[i] as usize];
        }
        Perm { img }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// Multiset of orbit sizes of ⟨self⟩ on the points, sorted descending.
    pub fn cycle_type(&self) -> CycleType {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.img[j] as usize;
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    /// True when the cycle type is exactly one m-part plus fixed points.
    pub fn is_m_cycle(&self, m: usize) -> bool {
        let ct = self.cycle_type();
        ct.parts[0] == m && ct.parts.iter().skip(1).all(|&p| p == 1)
    }

    /// Sign: +1 for even permutations, -1 for odd.
    pub fn sign(&self) -> i32 {
        let ct = self.cycle_type();
        if (self.degree() - ct.parts.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Number of points moved.
    pub fn support_size(&self) -> usize {
        self.img
            .iter()
            .enumerate()
            .filter(|(i, &v)| *i != v as usize)
            .count()
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Perm {
    /// Disjoint-cycle notation with 1-based points; identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.img[start] as usize == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut j = start;
            let mut first = true;
            while !seen[j] {
                seen[j] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", j + 1)?;
                first = false;
                j = self.img[j] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Conjugacy invariant: multiset of cycle lengths (fixed points as 1s),
/// sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CycleType {
    pub parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Order of any permutation with this type: lcm of the parts.
    pub fn order(&self) -> usize {
        self.parts.iter().fold(1, |a, &b| num::integer::lcm(a, b))
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// A subgroup of S_n given by generators, with write-once cached metadata.
pub struct GroupSpec {
    degree: usize,
    name: String,
    gens: Vec<Perm>,
    elements: OnceLock<Result<Vec<Perm>, PermError>>,
    flags: OnceLock<(bool, bool)>, // (transitive, primitive)
}

impl fmt::Debug for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupSpec({} ≤ S_{})", self.name, self.degree)
    }
}

impl GroupSpec {
    pub fn new(degree: usize, name: impl Into<String>, gens: Vec<Perm>) -> Result<Self, PermError> {
        for g in &gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch(g.degree(), degree));
            }
        }
        Ok(GroupSpec {
            degree,
            name: name.into(),
            gens,
            elements: OnceLock::new(),
            flags: OnceLock::new(),
        })
    }

    /// Build a GroupSpec from an explicit element list, selecting a small
    /// generating set greedily (first element outside the running closure is
    /// adjoined). Verifies that the chosen generators regenerate exactly the
    /// given elements.
    pub fn from_elements(
        degree: usize,
        name: impl Into<String>,
        mut elements: Vec<Perm>,
    ) -> Result<Self, PermError> {
        elements.sort_unstable();
        elements.dedup();
        let target: HashSet<&Perm> = elements.iter().collect();
        let mut gens: Vec<Perm> = Vec::new();
        let mut closure: HashSet<Perm> = HashSet::new();
        closure.insert(Perm::identity(degree));
        for p in &elements {
            if closure.contains(p) {
                continue;
            }
            assert!(target.contains(p));
            gens.push(p.clone());
            // regrow the closure with the enlarged generating set
            closure.clear();
            let id = Perm::identity(degree);
            closure.insert(id.clone());
            let mut frontier = vec![id];
            while let Some(q) = frontier.pop() {
                for g in &gens {
                    let r = g.compose(&q)?;
                    if closure.insert(r.clone()) {
                        frontier.push(r);
                    }
                }
            }
        }
        if closure.len() != elements.len() || !closure.iter().all(|p| target.contains(p)) {
            return Err(PermError::NotAGroup);
        }
        let spec = GroupSpec::new(degree, name, gens)?;
        Ok(spec)
    }

    /// The full symmetric group S_n.
    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(n, &[&[0, 1]]).unwrap());
        }
        if n >= 3 {
            let cyc: Vec<u16> = (0..n as u16).collect();
            gens.push(Perm::from_cycles(n, &[&cyc]).unwrap());
        }
        GroupSpec::new(n, format!("S{n}"), gens).unwrap()
    }

    /// The alternating group A_n.
    pub fn alternating(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 3 {
            gens.push(Perm::from_cycles(n, &[&[0, 1, 2]]).unwrap());
        }
        if n >= 4 {
            if n % 2 == 1 {
                let cyc: Vec<u16> = (0..n as u16).collect();
                gens.push(Perm::from_cycles(n, &[&cyc]).unwrap());
            } else {
                let cyc: Vec<u16> = (1..n as u16).collect();
                gens.push(Perm::from_cycles(n, &[&cyc]).unwrap());
            }
        }
        GroupSpec::new(n, format!("A{n}"), gens).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    /// Closure of the generators under composition, sorted lexicographically
    /// on image vectors (deterministic). Cached after the first call.
    pub fn enumerate_elements(&self, cap: usize) -> Result<&[Perm], PermError> {
        let result = self.elements.get_or_init(|| {
            let mut seen: HashSet<Perm> = HashSet::new();
            let id = Perm::identity(self.degree);
            seen.insert(id.clone());
            let mut frontier = vec![id];
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for p in &frontier {
                    for g in &self.gens {
                        let q = g.compose(p).expect("equal degrees");
                        if seen.insert(q.clone()) {
                            if seen.len() > cap {
                                return Err(PermError::CapExceeded(cap));
                            }
                            next.push(q);
                        }
                    }
                }
                frontier = next;
            }
            let mut out: Vec<Perm> = seen.into_iter().collect();
            out.sort_unstable();
            Ok(out)
        });
        match result {
            Ok(v) => Ok(v),
            Err(e) => Err(match e {
                PermError::CapExceeded(c) => PermError::CapExceeded(*c),
                _ => unreachable!(),
            }),
        }
    }

    pub fn order(&self) -> Result<usize, PermError> {
        Ok(self.enumerate_elements(DEFAULT_CAP)?.len())
    }

    pub fn contains(&self, p: &Perm) -> Result<bool, PermError> {
        let els = self.enumerate_elements(DEFAULT_CAP)?;
        Ok(els.binary_search(p).is_ok())
    }

    /// All elements even? (i.e. the group lies inside A_n)
    pub fn is_even(&self) -> Result<bool, PermError> {
        Ok(self
            .enumerate_elements(DEFAULT_CAP)?
            .iter()
            .all(|p| p.sign() == 1))
    }

    /// Transitivity on points, via the orbit of point 0.
    pub fn is_transitive(&self) -> bool {
        self.flags().0
    }

    /// Primitivity: transitive with no nontrivial invariant partition
    /// (minimal-block closure over every seed pair).
    pub fn is_primitive(&self) -> bool {
        self.flags().1
    }

    fn flags(&self) -> (bool, bool) {
        *self.flags.get_or_init(|| {
            let n = self.degree;
            if n == 0 {
                return (true, true);
            }
            // orbit of 0
            let mut orbit = vec![false; n];
            orbit[0] = true;
            let mut stack = vec![0usize];
            while let Some(i) = stack.pop() {
                for g in &self.gens {
                    let j = g.apply(i);
                    if !orbit[j] {
                        orbit[j] = true;
                        stack.push(j);
                    }
                }
            }
            let transitive = orbit.iter().all(|&b| b);
            if !transitive {
                return (false, false);
            }
            // minimal block containing {0, b} for each b; primitive iff all
            // such closures are the full point set (degree prime shortcut
            // not taken: n ≤ 10 everywhere).
            let mut primitive = true;
            for b in 1..n {
                let size = minimal_block_size(&self.gens, n, 0, b);
                if size < n {
                    primitive = false;
                    break;
                }
            }
            (transitive, primitive)
        })
    }
}

/// Size of the minimal block (for a transitive group) containing {a, b}:
/// union-find closure under the generators.
fn minimal_block_size(gens: &[Perm], n: usize, a: usize, b: usize) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    fn union(parent: &mut [usize], x: usize, y: usize) -> bool {
        let (rx, ry) = (find(parent, x), find(parent, y));
        if rx == ry {
            return false;
        }
        parent[rx] = ry;
        true
    }
    union(&mut parent, a, b);
    let mut changed = true;
    while changed {
        changed = false;
        for g in gens {
            for i in 0..n {
                let ri = find(&mut parent, i);
                let gi = g.apply(i);
                let gri = g.apply(ri);
                if union(&mut parent, gi, gri) {
                    changed = true;
                }
            }
        }
    }
    let r0 = find(&mut parent, a);
    (0..n).filter(|&i| find(&mut parent, i) == r0).count()
}

/// Count elements of `g` whose cycle type is exactly one m-part plus fixed
/// points (genuine m-cycles, never order-m elements).
pub fn count_m_cycles(g: &GroupSpec, m: usize) -> Result<usize, PermError> {
    let els = g.enumerate_elements(DEFAULT_CAP)?;
    Ok(els.iter().filter(|p| p.is_m_cycle(m)).count())
}

/// Brute-force unramified-point count: `#{σ ∈ S_n : σγσ⁻¹ ∈ ℰ} / #ℰ`,
/// asserting the divisibility (the set is a union of right ℰ-cosets).
pub fn c1_bruteforce(e: &GroupSpec, gamma: &Perm) -> Result<usize, PermError> {
    let n = e.degree();
    if gamma.degree() != n {
        return Err(PermError::DegreeMismatch(gamma.degree(), n));
    }
    let els = e.enumerate_elements(DEFAULT_CAP)?;
    let set: HashSet<&Perm> = els.iter().collect();
    let mut count = 0usize;
    let mut img: Vec<u16> = (0..n as u16).collect();
    // iterate S_n in lexicographic order without materializing it
    loop {
        let sigma = Perm { img: img.clone() };
        let conj = gamma.conjugate_by(&sigma);
        if set.contains(&conj) {
            count += 1;
        }
        if !next_permutation(&mut img) {
            break;
        }
    }
    assert!(
        count.is_multiple_of(els.len()),
        "Y must be a union of cosets of E (got {} mod {})",
        count,
        els.len()
    );
    Ok(count / els.len())
}

/// Closed-form unramified-point count for an m-cycle inertia generator:
/// `(#m-cycles in ℰ / #ℰ) · m · (n−m)!`.
pub fn c1_closed_form(n: usize, e: &GroupSpec, m: usize) -> Result<usize, PermError> {
    if m > n {
        return Ok(0);
    }
    let cycles = count_m_cycles(e, m)?;
    let order = e.order()?;
    let numer = cycles
        .checked_mul(m)
        .and_then(|v| v.checked_mul(factorial(n - m)))
        .expect("no overflow at desk scale");
    assert!(
        numer % order == 0,
        "closed form must be an integer: {numer}/{order}"
    );
    Ok(numer / order)
}

pub fn factorial(k: usize) -> usize {
    (1..=k).product()
}

/// Lexicographic successor in place; false when wrapped past the last one.
fn next_permutation(img: &mut [u16]) -> bool {
    let n = img.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && img[i - 1] >= img[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while img[j] <= img[i - 1] {
        j -= 1;
    }
    img.swap(i - 1, j);
    img[i..].reverse();
    true
}

/// Orbit data of ⟨γ⟩ acting by right multiplication on right cosets ℰ\S_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetOrbits {
    /// Orbit sizes, sorted descending.
    pub orbit_sizes: Vec<usize>,
    /// The cover degree [S_n : ℰ].
    pub index: usize,
}

impl CosetOrbits {
    /// Number of orbits of size δ.
    pub fn c_delta(&self, delta: usize) -> usize {
        self.orbit_sizes.iter().filter(|&&s| s == delta).count()
    }

    /// Fixed cosets = unramified degree-1 points.
    pub fn c1(&self) -> usize {
        self.c_delta(1)
    }

    /// Δ = Σ (size − 1), the discriminant contribution of this fiber.
    pub fn delta(&self) -> usize {
        self.orbit_sizes.iter().map(|s| s - 1).sum()
    }
}

/// Orbit sizes of ⟨γ⟩ on the right cosets ℰ\S_n by right multiplication.
/// Cosets are tracked by a lexicographically-minimal canonical representative
/// so the computation is deterministic.
pub fn ramification_profile(e: &GroupSpec, gamma: &Perm) -> Result<CosetOrbits, PermError> {
    let n = e.degree();
    if gamma.degree() != n {
        return Err(PermError::DegreeMismatch(gamma.degree(), n));
    }
    let els = e.enumerate_elements(DEFAULT_CAP)?;
    let canon = |sigma: &Perm| -> Perm {
        // minimal image vector among {h ∘ σ : h ∈ ℰ}
        els.iter()
            .map(|h| h.compose(sigma).expect("equal degrees"))
            .min()
            .expect("nonempty group")
    };
    // enumerate all cosets: BFS under right multiplication by S_n generators
    let sn = GroupSpec::symmetric(n);
    let mut ids: HashMap<Perm, usize> = HashMap::new();
    let start = canon(&Perm::identity(n));
    ids.insert(start.clone(), 0);
    let mut reps = vec![start];
    let mut head = 0usize;
    while head < reps.len() {
        let rep = reps[head].clone();
        head += 1;
        for g in sn.generators() {
            let moved = canon(&rep.compose(g).expect("equal degrees"));
            let next_id = ids.len();
            ids.entry(moved.clone()).or_insert_with(|| {
                reps.push(moved.clone());
                next_id
            });
        }
    }
    let index = reps.len();
    let order = els.len();
    assert_eq!(index * order, factorial(n), "coset count times order");
    // γ-action on cosets
    let mut image = vec![usize::MAX; index];
    for (i, rep) in reps.iter().enumerate() {
        let moved = canon(&rep.compose(gamma).expect("equal degrees"));
        image[i] = ids[&moved];
    }
    let mut seen = vec![false; index];
    let mut orbit_sizes = Vec::new();
    for s in 0..index {
        if seen[s] {
            continue;
        }
        let mut len = 0usize;
        let mut j = s;
        while !seen[j] {
            seen[j] = true;
            j = image[j];
            len += 1;
        }
        orbit_sizes.push(len);
    }
    orbit_sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(CosetOrbits { orbit_sizes, index })
}

/// One ℰσD double coset: a representative, the ramification index e_σ, and
/// the residue degree f_σ (the geometric reduction f ≡ 1 is hard-coded; e_σ
/// then equals [σDσ⁻¹ : ℰ ∩ σDσ⁻¹]).
#[derive(Clone, Debug)]
pub struct DoubleCoset {
    pub representative: Perm,
    pub e: usize,
    pub f: usize,
    pub size: usize,
}

/// Partition `ambient` into ℰσD double cosets (representative = lex-minimal
/// member). Requires all three element lists below the cap.
pub fn double_cosets(
    e: &GroupSpec,
    d: &GroupSpec,
    ambient: &GroupSpec,
) -> Result<Vec<DoubleCoset>, PermError> {
    let e_els = e.enumerate_elements(DEFAULT_CAP)?;
    let d_els = d.enumerate_elements(DEFAULT_CAP)?;
    let amb = ambient.enumerate_elements(DEFAULT_CAP)?;
    let e_set: HashSet<&Perm> = e_els.iter().collect();
    let mut assigned: HashSet<Perm> = HashSet::new();
    let mut out = Vec::new();
    for sigma in amb {
        if assigned.contains(sigma) {
            continue;
        }
        // build ℰσD
        let mut class: HashSet<Perm> = HashSet::new();
        for h in e_els {
            let hs = h.compose(sigma)?;
            for k in d_els {
                class.insert(hs.compose(k)?);
            }
        }
        let size = class.len();
        // [σDσ⁻¹ : ℰ ∩ σDσ⁻¹] = |D| / #(σDσ⁻¹ ∩ ℰ)
        let mut inter = 0usize;
        for k in d_els {
            if e_set.contains(&k.conjugate_by(sigma)) {
                inter += 1;
            }
        }
        assert!(d_els.len() % inter == 0);
        let ef = d_els.len() / inter;
        for p in class {
            assigned.insert(p);
        }
        out.push(DoubleCoset {
            representative: sigma.clone(),
            e: ef,
            f: 1,
            size,
        });
    }
    Ok(out)
}

/// The permutation action of S_n on j-subsets of {0..n-1}, in colex order.
/// `induce` maps a degree-n permutation to the induced permutation of the
/// C(n,j) subsets.
pub struct JSubsetAction {
    pub n: usize,
    pub j: usize,
    subsets: Vec<Vec<u16>>,
    ranks: HashMap<Vec<u16>, usize>,
}

/// Binomial coefficient as usize (desk scale).
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (n - i) as u128;
        den *= (i + 1) as u128;
    }
    (num / den) as usize
}

impl JSubsetAction {
    pub fn new(n: usize, j: usize, cap: usize) -> Result<Self, PermError> {
        assert!(j >= 1 && j < n, "need 1 <= j < n");
        let count = binomial(n, j);
        if count > cap {
            return Err(PermError::CapExceeded(cap));
        }
        // colex order: generate all j-subsets sorted by reversed tuple
        let mut subsets: Vec<Vec<u16>> = Vec::with_capacity(count);
        let mut cur: Vec<u16> = (0..j as u16).collect();
        loop {
            subsets.push(cur.clone());
            // next in colex: find smallest i with cur[i]+1 < cur[i+1] (or < n at top)
            let mut i = 0;
            loop {
                let limit = if i + 1 < j { cur[i + 1] } else { n as u16 };
                if cur[i] + 1 < limit {
                    cur[i] += 1;
                    for (k, slot) in cur.iter_mut().enumerate().take(i) {
                        *slot = k as u16;
                    }
                    break;
                }
                i += 1;
                if i == j {
                    break;
                }
            }
            if i == j {
                break;
            }
        }
        assert_eq!(subsets.len(), count);
        let ranks = subsets
            .iter()
            .enumerate()
            .map(|(r, s)| (s.clone(), r))
            .collect();
        Ok(JSubsetAction {
            n,
            j,
            subsets,
            ranks,
        })
    }

    pub fn degree(&self) -> usize {
        self.subsets.len()
    }

    pub fn subset(&self, rank: usize) -> &[u16] {
        &self.subsets[rank]
    }

    /// Induced permutation of the subsets.
    pub fn induce(&self, p: &Perm) -> Result<Perm, PermError> {
        if p.degree() != self.n {
            return Err(PermError::DegreeMismatch(p.degree(), self.n));
        }
        let mut img = vec![0u16; self.subsets.len()];
        for (r, s) in self.subsets.iter().enumerate() {
            let mut t: Vec<u16> = s.iter().map(|&x| p.apply(x as usize) as u16).collect();
            t.sort_unstable();
            img[r] = self.ranks[&t] as u16;
        }
        Perm::from_images(img)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[u16]]) -> Perm {
        Perm::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn compose_involution_is_identity() {
        let t = cyc(3, &[&[0, 1]]);
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn compose_adjacent_transpositions() {
        // (1 2)∘(2 3) applied right-to-left gives the 3-cycle (1 2 3)
        let a = cyc(3, &[&[0, 1]]);
        let b = cyc(3, &[&[1, 2]]);
        let c = a.compose(&b).unwrap();
        assert_eq!(c, cyc(3, &[&[0, 1, 2]]));
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(
            Perm::identity(5).cycle_type(),
            CycleType::new(vec![1, 1, 1, 1, 1])
        );
        let p = cyc(5, &[&[0, 1, 2], &[3, 4]]);
        assert_eq!(p.cycle_type(), CycleType::new(vec![3, 2]));
        assert_eq!(p.cycle_type().order(), 6);
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        assert_eq!(GroupSpec::symmetric(6).order().unwrap(), 720);
        assert_eq!(GroupSpec::alternating(6).order().unwrap(), 360);
        assert_eq!(GroupSpec::alternating(7).order().unwrap(), 2520);
        assert!(GroupSpec::alternating(8).is_even().unwrap());
    }

    #[test]
    fn enumerate_small_cyclic() {
        let g = GroupSpec::new(3, "C2", vec![cyc(3, &[&[0, 1]])]).unwrap();
        assert_eq!(g.order().unwrap(), 2);
    }

    #[test]
    fn cap_exceeded_fails_loudly() {
        let g = GroupSpec::symmetric(8);
        assert_eq!(
            g.enumerate_elements(100).unwrap_err(),
            PermError::CapExceeded(100)
        );
    }

    #[test]
    fn m_cycle_count_s6() {
        // n!/(m(n-m)!) three-cycles in S_6: 720/(3*6) = 40
        let s6 = GroupSpec::symmetric(6);
        assert_eq!(count_m_cycles(&s6, 3).unwrap(), 40);
    }

    #[test]
    fn m_cycle_count_a8_seven_cycles() {
        // C(8,7)*6! = 5760 seven-cycles in A_8
        let a8 = GroupSpec::alternating(8);
        assert_eq!(count_m_cycles(&a8, 7).unwrap(), 5760);
    }

    #[test]
    fn closed_form_zero_beyond_degree() {
        let s5 = GroupSpec::symmetric(5);
        assert_eq!(c1_closed_form(5, &s5, 6).unwrap(), 0);
    }

    #[test]
    fn profile_transposition_in_s3() {
        // ℰ = ⟨(1 2)⟩ ≤ S₃, γ = (1 2 3): one orbit of size 3, Δ = 2
        let e = GroupSpec::new(3, "C2", vec![cyc(3, &[&[0, 1]])]).unwrap();
        let gamma = cyc(3, &[&[0, 1, 2]]);
        let prof = ramification_profile(&e, &gamma).unwrap();
        assert_eq!(prof.orbit_sizes, vec![3]);
        assert_eq!(prof.delta(), 2);
        assert_eq!(prof.index, 3);
    }

    #[test]
    fn profile_alternating_even_cycle() {
        // ℰ = A_n, γ an even cycle: both cosets fixed, Δ = 0
        let a5 = GroupSpec::alternating(5);
        let gamma = cyc(5, &[&[0, 1, 2]]);
        let prof = ramification_profile(&a5, &gamma).unwrap();
        assert_eq!(prof.orbit_sizes, vec![1, 1]);
        assert_eq!(prof.delta(), 0);
    }

    #[test]
    fn c1_three_ways_small() {
        // ℰ = S_2 × S_3 ≤ S_5 (order 12), γ ranging over m-cycles
        let e = GroupSpec::new(
            5,
            "S2xS3",
            vec![
                cyc(5, &[&[0, 1]]),
                cyc(5, &[&[2, 3]]),
                cyc(5, &[&[2, 3, 4]]),
            ],
        )
        .unwrap();
        for m in 2..=5 {
            let mut pts: Vec<u16> = (0..m as u16).collect();
            pts.rotate_left(1); // any m-cycle works; conjugation invariance
            let gamma = cyc(5, &[&(0..m as u16).collect::<Vec<_>>()]);
            let _ = pts;
            let brute = c1_bruteforce(&e, &gamma).unwrap();
            let closed = c1_closed_form(5, &e, m).unwrap();
            let profile = ramification_profile(&e, &gamma).unwrap();
            assert_eq!(brute, closed, "m={m}");
            assert_eq!(brute, profile.c1(), "m={m}");
        }
    }

    #[test]
    fn double_cosets_match_profile() {
        // ℰ = ⟨(1 2)⟩, D = ⟨(1 2 3)⟩ in S₃ → one class with e = 3
        let e = GroupSpec::new(3, "C2", vec![cyc(3, &[&[0, 1]])]).unwrap();
        let d = GroupSpec::new(3, "C3", vec![cyc(3, &[&[0, 1, 2]])]).unwrap();
        let s3 = GroupSpec::symmetric(3);
        let dc = double_cosets(&e, &d, &s3).unwrap();
        assert_eq!(dc.len(), 1);
        assert_eq!(dc[0].e, 3);
        assert_eq!(dc[0].f, 1);
        // trivial case: ℰ = D = S_n → one class, e·f = 1
        let dc2 = double_cosets(&s3, &s3, &s3).unwrap();
        assert_eq!(dc2.len(), 1);
        assert_eq!(dc2[0].e * dc2[0].f, 1);
    }

    #[test]
    fn jsubset_action_transposition() {
        // n=4, j=2: (1 2) fixes {1,2} and {3,4}, moves the other four pairs
        let act = JSubsetAction::new(4, 2, 10_000).unwrap();
        let p = act.induce(&cyc(4, &[&[0, 1]])).unwrap();
        assert_eq!(p.degree(), 6);
        assert_eq!(p.support_size(), 4);
        // homomorphism property on a couple of elements
        let a = cyc(4, &[&[0, 1, 2]]);
        let b = cyc(4, &[&[2, 3]]);
        let lhs = act.induce(&a.compose(&b).unwrap()).unwrap();
        let rhs = act
            .induce(&a)
            .unwrap()
            .compose(&act.induce(&b).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn transposition_moves_2_choose_counts() {
        // induced image of a transposition moves exactly 2*C(n-2, j-1) points
        for (n, j) in [(5, 2), (6, 2), (6, 3), (8, 4)] {
            let act = JSubsetAction::new(n, j, 10_000).unwrap();
            let p = act.induce(&cyc(n, &[&[0, 1]])).unwrap();
            assert_eq!(p.support_size(), 2 * binomial(n - 2, j - 1), "n={n} j={j}");
        }
    }

    #[test]
    fn transitivity_primitivity_flags() {
        let e = GroupSpec::new(
            6,
            "S2xS4",
            vec![
                cyc(6, &[&[0, 1]]),
                cyc(6, &[&[2, 3]]),
                cyc(6, &[&[2, 3, 4, 5]]),
            ],
        )
        .unwrap();
        assert!(!e.is_transitive());
        // S3 wr S2 with blocks {1,2,3},{4,5,6}
        let w = GroupSpec::new(
            6,
            "S3wrS2",
            vec![
                cyc(6, &[&[0, 1]]),
                cyc(6, &[&[0, 1, 2]]),
                cyc(6, &[&[0, 3], &[1, 4], &[2, 5]]),
            ],
        )
        .unwrap();
        assert!(w.is_transitive());
        assert!(!w.is_primitive());
        assert!(GroupSpec::symmetric(5).is_primitive());
        assert!(GroupSpec::alternating(5).is_primitive());
    }

    #[test]
    fn next_permutation_covers_sn() {
        let mut img: Vec<u16> = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut img) {
            count += 1;
        }
        assert_eq!(count, 24);
    }
}
