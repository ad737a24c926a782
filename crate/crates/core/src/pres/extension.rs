//! Presentations of group extensions `1 -> K -> G -> H -> 1`.

use super::{free_reduce, Presentation, Word};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtensionError {
    #[error("malformed extension data: {0}")]
    MalformedData(String),
}

#[derive(Debug, Clone, Default)]
pub struct ExtensionData {
    pub kernel: Presentation,
    pub quotient: Presentation,
    /// Name of the lift of each quotient generator in `G`; defaults to the same name.
    pub lift: BTreeMap<String, String>,
    /// `(h, k) -> ` the kernel word equal to `h~ k h~^-1`.
    pub action: BTreeMap<(String, String), Word>,
    /// Quotient relator index `->` the kernel word equal to its lift.
    pub correction: BTreeMap<usize, Word>,
    /// Missing actions default to the identity when set.
    pub kernel_central: bool,
}

impl ExtensionData {
    /// Central extension with trivial corrections.
    pub fn central(kernel: Presentation, quotient: Presentation) -> Self {
        ExtensionData { kernel, quotient, kernel_central: true, ..Default::default() }
    }

    pub fn lifted_name<'a>(&'a self, h: &'a str) -> &'a str {
        self.lift.get(h).map(String::as_str).unwrap_or(h)
    }
}

pub fn extension_presentation(x: &ExtensionData) -> Result<Presentation, ExtensionError> {
    let bad = |m: String| Err(ExtensionError::MalformedData(m));
    let kernel_gens: BTreeSet<&str> = x.kernel.generators.iter().map(String::as_str).collect();
    let in_kernel = |w: &Word| w.letters.iter().all(|l| kernel_gens.contains(l.gen.as_str()));

    for ((h, k), w) in &x.action {
        if !x.quotient.has_generator(h) || !kernel_gens.contains(k.as_str()) {
            return bad(format!("action given for unknown pair ({h}, {k})"));
        }
        if !in_kernel(w) {
            return bad(format!("action of {h} on {k} leaves the kernel"));
        }
    }
    for (i, w) in &x.correction {
        if *i >= x.quotient.relators.len() {
            return bad(format!("correction for missing quotient relator {i}"));
        }
        if !in_kernel(w) {
            return bad(format!("correction {i} leaves the kernel"));
        }
    }
    for h in x.lift.keys() {
        if !x.quotient.has_generator(h) {
            return bad(format!("lift of unknown quotient generator {h}"));
        }
    }

    let mut generators = x.kernel.generators.clone();
    for h in &x.quotient.generators {
        let name = x.lifted_name(h).to_string();
        if generators.contains(&name) {
            return bad(format!("lifted generator {name} clashes"));
        }
        generators.push(name);
    }

    let lift_word = |w: &Word| -> Word { w.substitute(&|g: &str| x.lift.get(g).map(|n| Word::gen(n.clone()))) };
    let mut relators = x.kernel.relators.clone();
    for (i, r) in x.quotient.relators.iter().enumerate() {
        let corr = x.correction.get(&i).cloned().unwrap_or_default();
        relators.push(free_reduce(&lift_word(r).concat(&corr.inverse())));
    }
    for h in &x.quotient.generators {
        let ht = Word::gen(x.lifted_name(h));
        for k in &x.kernel.generators {
            let value = match x.action.get(&(h.clone(), k.clone())) {
                Some(w) => w.clone(),
                None if x.kernel_central => Word::gen(k.clone()),
                None => return bad(format!("missing action of {h} on {k}")),
            };
            relators.push(free_reduce(&Word::gen(k.clone()).conjugate_by(&ht).concat(&value.inverse())));
        }
    }
    let p = Presentation { generators, relators, extended: x.kernel.extended || x.quotient.extended };
    p.check().map_err(|e| ExtensionError::MalformedData(e.to_string()))?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pres::abelian::abelianize;
    use crate::pres::parse_word;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pres(s: &str) -> Presentation {
        Presentation::parse_text(s).unwrap()
    }

    #[test]
    fn semidirect_example() {
        let mut x = ExtensionData { kernel: pres("gens: A\n"), quotient: pres("gens: u\n"), ..Default::default() };
        x.lift.insert("u".into(), "U".into());
        x.action.insert(("u".into(), "A".into()), parse_word("A^-1").unwrap());
        let p = extension_presentation(&x).unwrap();
        assert_eq!(p.to_text(), "gens: A U\nrel: U A U^-1 A\n");
    }

    #[test]
    fn central_product() {
        let x = ExtensionData::central(pres("gens: C1 C2 C3\n"), pres("gens: a b c\n"));
        let p = extension_presentation(&x).unwrap();
        assert_eq!(p.relators.len(), 9);
        assert_eq!(p.relators[0].to_string(), "a C1 a^-1 C1^-1");
        assert_eq!(abelianize(&p).to_string(), "Z^6");
    }

    #[test]
    fn corrections_apply() {
        let mut x = ExtensionData::central(pres("gens: C\n"), pres("gens: u\nrel: u u\n"));
        x.correction.insert(0, Word::gen("C"));
        let p = extension_presentation(&x).unwrap();
        assert_eq!(p.relators[0].to_string(), "u u C^-1");
        assert_eq!(abelianize(&p).to_string(), "Z");
    }

    #[test]
    fn malformed() {
        let mut x = ExtensionData::central(pres("gens: C\n"), pres("gens: u\n"));
        x.correction.insert(0, Word::gen("C"));
        assert!(extension_presentation(&x).is_err());
        let mut y = ExtensionData::central(pres("gens: C\n"), pres("gens: u\n"));
        y.action.insert(("u".into(), "C".into()), Word::gen("u"));
        assert!(extension_presentation(&y).is_err());
        let mut z = ExtensionData::central(pres("gens: C\n"), pres("gens: u\n"));
        z.kernel_central = false;
        assert!(extension_presentation(&z).is_err());
    }

    fn random_presentation(rng: &mut ChaCha8Rng, prefix: &str) -> Presentation {
        let gens: Vec<String> = (0..rng.gen_range(1..4)).map(|i| format!("{prefix}{i}")).collect();
        let rels = (0..rng.gen_range(0..4))
            .map(|_| {
                let len = rng.gen_range(1..7);
                let pairs: Vec<(String, i8)> = (0..len)
                    .map(|_| (gens[rng.gen_range(0..gens.len())].clone(), if rng.gen_bool(0.5) { 1 } else { -1 }))
                    .collect();
                free_reduce(&Word::from_pairs(&pairs))
            })
            .collect();
        Presentation::new(gens, rels).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 100, rng_seed: proptest::test_runner::RngSeed::Fixed(0x5eed), ..ProptestConfig::default() })]
        #[test]
        fn trivial_extension_splits_abelianization(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let k = random_presentation(&mut rng, "k");
            let h = random_presentation(&mut rng, "h");
            let g = extension_presentation(&ExtensionData::central(k.clone(), h.clone())).unwrap();
            prop_assert_eq!(abelianize(&g), abelianize(&k).direct_sum(&abelianize(&h)));
        }
    }
}
