//! Schroeder–Bernstein on computable sets of naturals.
//!
//! Given `A ⊆ B ⊆ C` and a bijection `f: C → A`, the set `D ⊆ B` is built
//! two ways: as the least `X` with `(B∖A) ∪ f[X] ⊆ X`, and as
//! `⋃ₙ (fⁿ[B] ∖ fⁿ[A])`. The bijection `g: B → A` is `f` on `D` and the
//! identity elsewhere. Everything is evaluated on a window `[0, N]`; when the
//! answer inside the window depends on values outside it the computation
//! fails with [`SbError::WindowUnstable`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use thiserror::Error;

/// Largest accepted verification window.
pub const MAX_WINDOW: i64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SbError {
    #[error("window unstable: {value} lies in the window but its preimage {preimage} does not")]
    WindowUnstable { value: i64, preimage: i64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("window {0} exceeds the limit {MAX_WINDOW}")]
    WindowTooLarge(i64),
}

/// A decidable set of naturals. Negative integers are never members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoSet {
    Naturals,
    Empty,
    Even,
    Odd,
    /// `{x : x ≡ r (mod m)}`
    Residue { m: i64, r: i64 },
    /// `[lo, hi]`
    Range { lo: i64, hi: i64 },
    Finite(BTreeSet<i64>),
    /// `{a·x + b : x ∈ ℕ}`
    AffineImage { a: i64, b: i64 },
    Union(Vec<CoSet>),
}

impl CoSet {
    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        match self {
            CoSet::Naturals => true,
            CoSet::Empty => false,
            CoSet::Even => x % 2 == 0,
            CoSet::Odd => x % 2 == 1,
            CoSet::Residue { m, r } => x.rem_euclid(*m) == r.rem_euclid(*m),
            CoSet::Range { lo, hi } => (*lo..=*hi).contains(&x),
            CoSet::Finite(s) => s.contains(&x),
            CoSet::AffineImage { a, b } => x >= *b && (x - b) % a == 0,
            CoSet::Union(parts) => parts.iter().any(|p| p.contains(x)),
        }
    }

    /// A bound past which membership follows a simple periodic pattern.
    pub fn window_hint(&self) -> i64 {
        match self {
            CoSet::Naturals | CoSet::Empty | CoSet::Even | CoSet::Odd => 2,
            CoSet::Residue { m, r } => m.saturating_add(*r),
            CoSet::Range { hi, .. } => hi.saturating_add(1),
            CoSet::Finite(s) => s.last().map_or(0, |x| x.saturating_add(1)),
            CoSet::AffineImage { a, b } => a.saturating_add(*b),
            CoSet::Union(parts) => parts.iter().map(CoSet::window_hint).max().unwrap_or(0),
        }
    }

    fn parse_atom(src: &str) -> Result<CoSet, String> {
        let mut words = src.split_whitespace();
        let head = words.next().ok_or("empty set description")?;
        let nums: Vec<i64> = words
            .map(|w| w.parse().map_err(|_| format!("`{w}` is not an integer")))
            .collect::<Result<_, _>>()?;
        let want = |n: usize| {
            if nums.len() == n {
                Ok(())
            } else {
                Err(format!("`{head}` takes {n} parameter(s), got {}", nums.len()))
            }
        };
        let set = match head {
            "naturals" => want(0).map(|_| CoSet::Naturals)?,
            "empty" => want(0).map(|_| CoSet::Empty)?,
            "even" => want(0).map(|_| CoSet::Even)?,
            "odd" => want(0).map(|_| CoSet::Odd)?,
            "residue" => {
                want(2)?;
                if nums[0] < 1 {
                    return Err("residue modulus must be positive".into());
                }
                CoSet::Residue { m: nums[0], r: nums[1] }
            }
            "range" => {
                want(2)?;
                CoSet::Range { lo: nums[0], hi: nums[1] }
            }
            "finite" => CoSet::Finite(nums.into_iter().collect()),
            "affine" => {
                want(2)?;
                if nums[0] < 1 || nums[1] < 0 {
                    return Err("affine image needs a ≥ 1 and b ≥ 0".into());
                }
                CoSet::AffineImage { a: nums[0], b: nums[1] }
            }
            other => return Err(format!("unknown set `{other}`")),
        };
        Ok(set)
    }
}

impl fmt::Display for CoSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoSet::Naturals => f.write_str("naturals"),
            CoSet::Empty => f.write_str("empty"),
            CoSet::Even => f.write_str("even"),
            CoSet::Odd => f.write_str("odd"),
            CoSet::Residue { m, r } => write!(f, "residue {m} {r}"),
            CoSet::Range { lo, hi } => write!(f, "range {lo} {hi}"),
            CoSet::Finite(s) => {
                f.write_str("finite")?;
                s.iter().try_for_each(|x| write!(f, " {x}"))
            }
            CoSet::AffineImage { a, b } => write!(f, "affine {a} {b}"),
            CoSet::Union(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" | ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for CoSet {
    type Err = String;

    /// Alternatives separated by `|`, e.g. `even | finite 1`.
    fn from_str(s: &str) -> Result<CoSet, String> {
        let mut parts: Vec<CoSet> = s.split('|').map(CoSet::parse_atom).collect::<Result<_, _>>()?;
        Ok(if parts.len() == 1 { parts.remove(0) } else { CoSet::Union(parts) })
    }
}

/// A computable injection on the integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoInjection {
    /// `x ↦ a·x + b` with `a ≥ 1`
    Affine { a: i64, b: i64 },
}

impl CoInjection {
    pub fn apply(&self, x: i64) -> Option<i64> {
        match *self {
            CoInjection::Affine { a, b } => a.checked_mul(x)?.checked_add(b),
        }
    }

    pub fn inverse_on_range(&self, y: i64) -> Option<i64> {
        match *self {
            CoInjection::Affine { a, b } => {
                let d = y.checked_sub(b)?;
                (d % a == 0).then_some(d / a)
            }
        }
    }
}

impl fmt::Display for CoInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoInjection::Affine { a, b } => write!(f, "affine {a} {b}"),
        }
    }
}

/// A Schroeder–Bernstein instance: `A ⊆ B`, `f` mapping `B` into `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SbInstance {
    pub a: CoSet,
    pub b: CoSet,
    pub f: CoInjection,
    pub window: i64,
}

impl SbInstance {
    /// `A` = even naturals, `B` = `A ∪ {1}`, `f(x) = 2x`.
    pub fn doubling(window: i64) -> SbInstance {
        SbInstance {
            a: CoSet::Even,
            b: CoSet::Union(vec![CoSet::Even, CoSet::Finite([1].into())]),
            f: CoInjection::Affine { a: 2, b: 0 },
            window,
        }
    }

    /// Checks `A ⊆ B` and `f[B] ⊆ A` on the window.
    pub fn validate(&self) -> Result<(), SbError> {
        if self.window < 0 {
            return Err(SbError::Precondition("negative window".into()));
        }
        if self.window > MAX_WINDOW {
            return Err(SbError::WindowTooLarge(self.window));
        }
        for x in 0..=self.window {
            if self.a.contains(x) && !self.b.contains(x) {
                return Err(SbError::Precondition(format!("{x} is in A but not in B")));
            }
            if self.b.contains(x) {
                match self.f.apply(x) {
                    Some(y) if self.a.contains(y) => {}
                    Some(y) => {
                        return Err(SbError::Precondition(format!("f({x}) = {y} is not in A")))
                    }
                    None => return Err(SbError::Precondition(format!("f({x}) overflows"))),
                }
            }
        }
        Ok(())
    }

    /// The preimage under `f` of a window element `y` inside `B`, failing if
    /// it falls outside the window.
    fn preimage_in_b(&self, y: i64) -> Result<Option<i64>, SbError> {
        match self.f.inverse_on_range(y) {
            Some(x) if self.b.contains(x) => {
                if x > self.window {
                    Err(SbError::WindowUnstable { value: y, preimage: x })
                } else {
                    Ok(Some(x))
                }
            }
            _ => Ok(None),
        }
    }

    fn window_range(&self) -> impl Iterator<Item = i64> {
        0..=self.window
    }
}

impl fmt::Display for SbInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "A: {}", self.a)?;
        writeln!(f, "B: {}", self.b)?;
        writeln!(f, "f: {}", self.f)?;
        writeln!(f, "window: {}", self.window)
    }
}

/// Parses the instance format:
///
/// ```text
/// # comment
/// A: even
/// B: even | finite 1
/// f: affine 2 0
/// window: 64
/// ```
pub fn parse_instance(src: &str) -> Result<SbInstance, SbError> {
    let (mut a, mut b, mut f, mut window) = (None, None, None, None);
    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let err = |msg: String| SbError::Parse { line, msg };
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let (key, value) = text
            .split_once(':')
            .ok_or_else(|| err("expected `key: value`".into()))?;
        let value = value.trim();
        let slot_taken = || err(format!("`{}` given twice", key.trim()));
        match key.trim() {
            "A" => {
                if a.replace(value.parse::<CoSet>().map_err(err)?).is_some() {
                    return Err(slot_taken());
                }
            }
            "B" => {
                if b.replace(value.parse::<CoSet>().map_err(err)?).is_some() {
                    return Err(slot_taken());
                }
            }
            "f" => {
                let words: Vec<&str> = value.split_whitespace().collect();
                let inj = match words.as_slice() {
                    ["affine", x, y] => {
                        let p = |w: &str| w.parse::<i64>().map_err(|_| err(format!("`{w}` is not an integer")));
                        let (ca, cb) = (p(x)?, p(y)?);
                        if ca < 1 {
                            return Err(err("affine injection needs a ≥ 1".into()));
                        }
                        CoInjection::Affine { a: ca, b: cb }
                    }
                    _ => return Err(err("expected `affine a b`".into())),
                };
                if f.replace(inj).is_some() {
                    return Err(slot_taken());
                }
            }
            "window" => {
                let n: i64 = value.parse().map_err(|_| err(format!("`{value}` is not an integer")))?;
                if window.replace(n).is_some() {
                    return Err(slot_taken());
                }
            }
            other => return Err(err(format!("unknown key `{other}`"))),
        }
    }
    let missing = |what: &str| SbError::Parse {
        line: src.lines().count(),
        msg: format!("missing `{what}`"),
    };
    Ok(SbInstance {
        a: a.ok_or_else(|| missing("A"))?,
        b: b.ok_or_else(|| missing("B"))?,
        f: f.ok_or_else(|| missing("f"))?,
        window: window.ok_or_else(|| missing("window"))?,
    })
}

/// `D ∩ [0, window]` as the least fixed point of `X ↦ (B∖A) ∪ f[X]`,
/// computed by Kleene iteration from `B∖A`.
pub fn sb_d_lfp(inst: &SbInstance) -> Result<BTreeSet<i64>, SbError> {
    inst.validate()?;
    for y in inst.window_range() {
        inst.preimage_in_b(y)?;
    }
    let base: BTreeSet<i64> = inst
        .window_range()
        .filter(|&x| inst.b.contains(x) && !inst.a.contains(x))
        .collect();
    let mut d = base.clone();
    loop {
        let mut next = base.clone();
        next.extend(
            d.iter()
                .filter_map(|&x| inst.f.apply(x))
                .filter(|&y| y <= inst.window),
        );
        if next == d {
            return Ok(d);
        }
        d = next;
    }
}

/// `⋃_{n ≤ depth} (fⁿ[B] ∖ fⁿ[A]) ∩ [0, window]`, each level computed by
/// pulling window elements back through `f` `n` times.
pub fn sb_d_union(inst: &SbInstance, depth: usize) -> Result<BTreeSet<i64>, SbError> {
    inst.validate()?;
    let mut out = BTreeSet::new();
    for y in inst.window_range() {
        // chain: y, f⁻¹(y), f⁻²(y), … while the preimages exist in B
        let mut cur = y;
        for n in 0..=depth {
            let in_fn_b = inst.b.contains(cur);
            let in_fn_a = inst.a.contains(cur);
            if in_fn_b && !in_fn_a {
                out.insert(y);
                break;
            }
            if n == depth {
                break;
            }
            match inst.preimage_in_b(cur)? {
                // a fixed point of f never leaves fⁿ[A]
                Some(x) if x != cur => cur = x,
                _ => break,
            }
        }
    }
    Ok(out)
}

/// Depth sufficient for [`sb_d_union`] to reach every element of the window.
pub fn sufficient_depth(inst: &SbInstance) -> usize {
    // Each inverse step of an injective map on naturals strictly decreases
    // the value unless it is a fixed point, so `window + 1` steps suffice.
    usize::try_from(inst.window).map_or(0, |w| w + 1)
}

/// `g` on `B ∩ [0, window]`: `f(x)` for `x ∈ D`, `x` otherwise.
pub fn sb_bijection(inst: &SbInstance) -> Result<BTreeMap<i64, i64>, SbError> {
    let d = sb_d_lfp(inst)?;
    Ok(inst
        .window_range()
        .filter(|&x| inst.b.contains(x))
        .map(|x| {
            let y = if d.contains(&x) {
                inst.f.apply(x).expect("validated")
            } else {
                x
            };
            (x, y)
        })
        .collect())
}

/// Checks that `g` is injective and that every element of `A` in the window
/// is hit.
pub fn check_bijection(inst: &SbInstance, g: &BTreeMap<i64, i64>) -> Result<(), String> {
    let mut seen = BTreeMap::new();
    for (&x, &y) in g {
        if !inst.a.contains(y) {
            return Err(format!("g({x}) = {y} is not in A"));
        }
        if let Some(prev) = seen.insert(y, x) {
            return Err(format!("g({prev}) = g({x}) = {y}"));
        }
    }
    for y in inst.window_range().filter(|&y| inst.a.contains(y)) {
        if !seen.contains_key(&y) {
            return Err(format!("{y} ∈ A has no preimage under g"));
        }
    }
    Ok(())
}

/// A random instance with `f(x) = a·x + b` on all naturals, `A = f[ℕ]` and
/// `B` = `A` plus a few extra naturals.
pub fn random_affine_instance<R: Rng + ?Sized>(rng: &mut R) -> SbInstance {
    let a = rng.random_range(2..=4);
    let b = rng.random_range(0..=5);
    let image = CoSet::AffineImage { a, b };
    let extra: BTreeSet<i64> = (0..rng.random_range(1..=4))
        .map(|_| rng.random_range(0..40))
        .collect();
    SbInstance {
        a: image.clone(),
        b: CoSet::Union(vec![image, CoSet::Finite(extra)]),
        f: CoInjection::Affine { a, b },
        window: rng.random_range(64..=128),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn powers_of_two() -> BTreeSet<i64> {
        (0..7).map(|k| 1 << k).collect()
    }

    #[test]
    fn doubling_instance() {
        let inst = SbInstance::doubling(64);
        assert_eq!(sb_d_lfp(&inst).unwrap(), powers_of_two());
        assert_eq!(sb_d_union(&inst, 7).unwrap(), powers_of_two());
        assert_eq!(sb_d_union(&inst, 0).unwrap(), BTreeSet::from([1]));
        let g = sb_bijection(&inst).unwrap();
        assert_eq!((g[&1], g[&2], g[&6]), (2, 4, 6));
        check_bijection(&inst, &g).unwrap();
    }

    #[test]
    fn equal_sets_give_identity() {
        let inst = SbInstance {
            a: CoSet::Even,
            b: CoSet::Even,
            f: CoInjection::Affine { a: 2, b: 0 },
            window: 50,
        };
        assert!(sb_d_lfp(&inst).unwrap().is_empty());
        assert!(sb_bijection(&inst).unwrap().iter().all(|(x, y)| x == y));
        let single = SbInstance {
            a: CoSet::Finite([0].into()),
            b: CoSet::Finite([0].into()),
            f: CoInjection::Affine { a: 1, b: 0 },
            window: 10,
        };
        assert!(sb_d_lfp(&single).unwrap().is_empty());
    }

    #[test]
    fn constructions_agree_on_random_instances() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let inst = random_affine_instance(&mut rng);
            let lfp = sb_d_lfp(&inst).unwrap();
            assert_eq!(lfp, sb_d_union(&inst, sufficient_depth(&inst)).unwrap(), "{inst}");
            check_bijection(&inst, &sb_bijection(&inst).unwrap()).unwrap();
        }
    }

    #[test]
    fn decreasing_maps_violate_the_preconditions() {
        let inst = SbInstance {
            a: CoSet::Range { lo: 0, hi: 20 },
            b: CoSet::Range { lo: 0, hi: 25 },
            f: CoInjection::Affine { a: 1, b: -5 },
            window: 10,
        };
        assert!(matches!(sb_d_lfp(&inst), Err(SbError::Precondition(_))));
        assert!(matches!(sb_d_union(&inst, 3), Err(SbError::Precondition(_))));
    }

    #[test]
    fn preimage_outside_window_is_reported() {
        let inst = SbInstance {
            a: CoSet::Naturals,
            b: CoSet::Naturals,
            f: CoInjection::Affine { a: 1, b: -5 },
            window: 3,
        };
        assert_eq!(
            inst.preimage_in_b(2),
            Err(SbError::WindowUnstable { value: 2, preimage: 7 })
        );
        assert_eq!(SbInstance::doubling(64).preimage_in_b(64), Ok(Some(32)));
        assert_eq!(SbInstance::doubling(64).preimage_in_b(3), Ok(None));
    }

    #[test]
    fn oversized_window_rejected() {
        assert_eq!(
            sb_d_lfp(&SbInstance::doubling(MAX_WINDOW + 1)),
            Err(SbError::WindowTooLarge(MAX_WINDOW + 1))
        );
    }

    #[test]
    fn instance_format_round_trip() {
        let src = "# doubling\nA: even\nB: even | finite 1\nf: affine 2 0\nwindow: 64\n";
        let inst = parse_instance(src).unwrap();
        assert_eq!(inst, SbInstance::doubling(64));
        assert_eq!(parse_instance(&inst.to_string()).unwrap(), inst);
    }

    #[test]
    fn instance_format_errors() {
        let cases = [
            ("A: even\nB: even\nf: affine 2 0\n", "missing"),
            ("A: even\nA: odd\n", "twice"),
            ("A: evens\n", "unknown set"),
            ("B: residue 0 1\n", "modulus"),
            ("f: affine 0 1\n", "a ≥ 1"),
            ("window: x\n", "not an integer"),
            ("nonsense\n", "key: value"),
        ];
        for (src, needle) in cases {
            let e = parse_instance(src).unwrap_err().to_string();
            assert!(e.contains(needle), "{src:?}: {e}");
        }
    }
}
