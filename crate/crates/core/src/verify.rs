//! Seeded verification suites. Each suite checks a family of identities on
//! exhaustive small cases and on random instances, and reports one line per
//! identity. The same `(suite, size, seed, instances)` always gives the same
//! report.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::admissible::{
    adm_dimension, admissible_words, dendriform_left, dendriform_residuals, dendriform_right,
    dendriform_star, m_eval, m_eval_lc, m_prelie, to_m_basis,
};
use crate::algebra::{com_prelie_residual, og_product, prelie_residual, shuffle_residuals};
use crate::error::{Error, Result};
use crate::fliess::compose;
use crate::hopf::{
    coassociativity_residual, coproduct, coproduct_is_graded, eval_tensor, kernel_prelie_coproduct,
    monomials_of_degree, prelie_coproduct, right_prelie_coalgebra_residual,
};
use crate::lincomb::LinComb;
use crate::morphisms::{
    cpl_morphism_residuals, cpl_relation_four, cpl_relation_graft, cpl_relation_unit,
    cpl_rule_two_graft, phi_pl, phi_pl_lc, pl_morphism_residuals, pl_relation, psi_shuffle_pair,
    triangle_residual,
};
use crate::prelie_words::{generator_complement_rank, prelie};
use crate::ptree::{
    census_polynomial, free_eval, kernel_elements, multigraft_lc, pt_counts_by_series,
    rigidity_coproduct_lc, rigidity_derivation_residual, rigidity_symmetry_residual, Census,
    PartitionedTree,
};
use crate::random::{self, PTreeSampler, RTreeSampler, Rng8};
use crate::rtree::{rt_enumerate, rt_of_degree, RootedTree};
use crate::scalar::{rat, Rational};
use crate::series::{series_fh, series_fibonacci_fv};
use crate::words::{words_of_degree, words_of_length, BinaryWord};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Hopf,
    Prelie,
    ComPrelie,
    PTree,
    Morphisms,
    Dendriform,
    Enumeration,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Hopf,
        Suite::Prelie,
        Suite::ComPrelie,
        Suite::PTree,
        Suite::Morphisms,
        Suite::Dendriform,
        Suite::Enumeration,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::Prelie => "prelie",
            Suite::ComPrelie => "comprelie",
            Suite::PTree => "ptree",
            Suite::Morphisms => "morphisms",
            Suite::Dendriform => "dendriform",
            Suite::Enumeration => "enumeration",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite '{s}'")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Config {
    /// Bounds word lengths, tree sizes and degrees (clamped per check).
    pub size: usize,
    pub seed: u64,
    /// Random instances per randomized check.
    pub instances: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            size: 4,
            seed: 0,
            instances: 100,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub identity: String,
    pub instances: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
    pub note: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.instances > 0
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: Suite,
    pub config: Config,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "size": self.config.size,
            "seed": self.config.seed,
            "instances": self.config.instances,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "suite": c.suite.name(),
                "name": c.name,
                "identity": c.identity,
                "instances": c.instances,
                "failures": c.failures,
                "passed": c.passed(),
                "first_failure": c.first_failure,
                "note": c.note,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            write!(
                f,
                "[{status}] {}/{}: {} ({} cases",
                c.suite, c.name, c.identity, c.instances
            )?;
            if c.failures > 0 {
                write!(f, ", {} failed", c.failures)?;
            }
            write!(f, ")")?;
            if let Some(note) = &c.note {
                write!(f, " {note}")?;
            }
            writeln!(f)?;
            if let Some(first) = &c.first_failure {
                writeln!(f, "       first failure: {first}")?;
            }
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        write!(
            f,
            "suite {} (size {}, seed {}): {} ({}/{} checks passed)",
            self.suite,
            self.config.size,
            self.config.seed,
            if self.passed() { "PASS" } else { "FAIL" },
            passed,
            self.checks.len()
        )
    }
}

struct Recorder {
    suite: Suite,
    checks: Vec<Check>,
}

impl Recorder {
    fn open(&mut self, name: &str, identity: &str) -> &mut Check {
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            identity: identity.into(),
            instances: 0,
            failures: 0,
            first_failure: None,
            note: None,
        });
        self.checks.last_mut().expect("just pushed")
    }

    /// Runs `case` on each input, counting failures; errors count as failures.
    fn run<I>(
        &mut self,
        name: &str,
        identity: &str,
        inputs: impl IntoIterator<Item = I>,
        mut case: impl FnMut(&I) -> Result<bool>,
    ) where
        I: fmt::Debug,
    {
        let check = self.open(name, identity);
        for input in inputs {
            check.instances += 1;
            let ok = case(&input).unwrap_or(false);
            if !ok {
                check.failures += 1;
                if check.first_failure.is_none() {
                    check.first_failure = Some(format!("{input:?}"));
                }
            }
        }
    }

    fn note(&mut self, note: String) {
        if let Some(c) = self.checks.last_mut() {
            c.note = Some(note);
        }
    }
}

/// Runs a suite; `All` concatenates every suite.
pub fn run(suite: Suite, config: Config) -> Report {
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    let mut checks = Vec::new();
    for s in suites {
        let mut rec = Recorder {
            suite: s,
            checks: Vec::new(),
        };
        let salt = s as u64 + 1;
        let mut rng = random::rng(
            config
                .seed
                .wrapping_mul(0x9e37_79b9_7f4a_7c15)
                .wrapping_add(salt),
        );
        match s {
            Suite::Hopf => hopf(&mut rec, &config, &mut rng),
            Suite::Prelie => prelie_suite(&mut rec, &config, &mut rng),
            Suite::ComPrelie => comprelie(&mut rec, &config, &mut rng),
            Suite::PTree => ptree(&mut rec, &config, &mut rng),
            Suite::Morphisms => morphisms(&mut rec, &config, &mut rng),
            Suite::Dendriform => dendriform(&mut rec, &config, &mut rng),
            Suite::Enumeration => enumeration(&mut rec, &config),
            Suite::All => unreachable!(),
        }
        checks.extend(rec.checks);
    }
    Report {
        suite,
        config,
        checks,
    }
}

fn words_up_to(len: usize) -> Vec<BinaryWord> {
    (0..=len).flat_map(words_of_length).collect()
}

fn hopf(rec: &mut Recorder, cfg: &Config, rng: &mut Rng8) {
    let len = cfg.size.clamp(1, 4);
    let targets = words_up_to(len);
    let coproducts: Vec<_> = targets.iter().map(|c| (c.clone(), coproduct(c))).collect();
    let pairs: Vec<_> = (0..cfg.instances)
        .map(|_| (random::polynomial(rng, 3, 3), random::polynomial(rng, 3, 3)))
        .collect();
    rec.run(
        "composition-duality",
        "Δ(X_c)(f, g) = X_c(f ∘ g) for all short c",
        pairs,
        |(f, g)| {
            let fg = compose(f, g);
            for (c, delta) in &coproducts {
                if eval_tensor(delta, f, g)? != fg.coeff(c)? {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    );
    rec.run(
        "coassociativity",
        "(Δ ⊗ Id)Δ = (Id ⊗ Δ)Δ on X_c",
        targets.clone(),
        |c| Ok(coassociativity_residual(c).is_zero()),
    );
    rec.run(
        "gradation",
        "Δ preserves the degree n + 1 + #x0",
        targets.clone(),
        |c| Ok(coproduct_is_graded(c)),
    );
    rec.run(
        "prelie-coalgebra",
        "(δ ⊗ Id)δ − (Id ⊗ δ)δ is symmetric in the last two slots",
        targets,
        |c| Ok(right_prelie_coalgebra_residual(c).is_zero()),
    );
    let top = (cfg.size + 6).min(10);
    let fh = series_fh(top);
    rec.run(
        "dim-h",
        "monomial count in degree k equals the coefficient of F_H",
        1..=top,
        |&k| Ok(rat(monomials_of_degree(k).len() as i64) == *fh.coeff(k)),
    );
}

fn prelie_suite(rec: &mut Recorder, cfg: &Config, rng: &mut Rng8) {
    let len = cfg.size.clamp(1, 3);
    let deltas: Vec<_> = words_up_to(2 * len + 1)
        .into_iter()
        .map(|c| (prelie_coproduct(&c), c))
        .collect();
    let pairs: Vec<_> = (0..cfg.instances)
        .map(|_| {
            (
                random::word_lincomb(rng, len, 3),
                random::word_lincomb(rng, len, 3),
            )
        })
        .collect();
    rec.run(
        "coproduct-duality",
        "X_c(u • v) = δ(X_c)(u ⊗ v)",
        pairs,
        |(u, v)| {
            let direct = prelie(u, v);
            let mut dual = LinComb::zero();
            for (delta, c) in &deltas {
                let value: Rational = delta
                    .iter()
                    .map(|((a, b), k)| k * u.coeff(a) * v.coeff(b))
                    .sum();
                dual.add_term(c.clone(), value);
            }
            Ok(direct == dual)
        },
    );
    let triples: Vec<_> = (0..cfg.instances)
        .map(|_| {
            (
                random::word_lincomb(rng, len, 2),
                random::word_lincomb(rng, len, 2),
                random::word_lincomb(rng, len, 2),
            )
        })
        .collect();
    rec.run(
        "prelie-axiom",
        "(x•y)•z − x•(y•z) = (x•z)•y − x•(z•y) on words",
        triples,
        |(x, y, z)| Ok(prelie_residual(x, y, z).is_zero()),
    );
    let top = (cfg.size + 6).min(10);
    rec.run(
        "kernel-delta",
        "ker δ in degree k is spanned by X_{x1^(k−1)}",
        1..=top,
        |&k| {
            let basis = kernel_prelie_coproduct(k)?;
            Ok(basis.len() == 1
                && basis[0].len() == 1
                && basis[0].iter().all(|(w, _)| w.is_x1_power()))
        },
    );
    let fib = series_fibonacci_fv(8);
    rec.run(
        "generators",
        "products span a subspace of codimension 1 in each degree",
        1..=(cfg.size + 4).min(8),
        |&n| Ok(rat(generator_complement_rank(n)? as i64 + 1) == *fib.coeff(n)),
    );
}

fn comprelie(rec: &mut Recorder, cfg: &Config, rng: &mut Rng8) {
    let len = cfg.size.clamp(1, 3);
    let triples: Vec<_> = (0..cfg.instances)
        .map(|_| {
            (
                random::word_lincomb(rng, len, 2),
                random::word_lincomb(rng, len, 2),
                random::word_lincomb(rng, len, 2),
            )
        })
        .collect();
    rec.run(
        "words",
        "(x⧢y)•z = (x•z)⧢y + x⧢(y•z) on words",
        triples,
        |(x, y, z)| Ok(com_prelie_residual(x, y, z).is_zero()),
    );
    let sampler = PTreeSampler::new(cfg.size.clamp(1, 4), 2);
    let one = |t: &PartitionedTree| LinComb::basis(t.clone());
    let triples: Vec<_> = (0..cfg.instances)
        .map(|_| {
            (
                sampler.sample(rng),
                sampler.sample(rng),
                sampler.sample(rng),
            )
        })
        .collect();
    rec.run(
        "ptree",
        "prelie, Com-Prelie and ⧢ axioms on partitioned trees",
        triples,
        |(x, y, z)| {
            let (x, y, z) = (one(x), one(y), one(z));
            let (assoc, comm) = shuffle_residuals(&x, &y, &z);
            Ok(prelie_residual(&x, &y, &z).is_zero()
                && com_prelie_residual(&x, &y, &z).is_zero()
                && assoc.is_zero()
                && comm.is_zero())
        },
    );
    let rsampler = RTreeSampler::new(cfg.size.clamp(1, 3), 3);
    let rone = |t: &RootedTree| LinComb::basis(t.clone());
    let triples: Vec<_> = (0..cfg.instances)
        .map(|_| {
            (
                rsampler.sample(rng),
                rsampler.sample(rng),
                rsampler.sample(rng),
            )
        })
        .collect();
    rec.run(
        "rtree",
        "prelie and ⧢ axioms on rooted trees with the binomial shuffle",
        triples.clone(),
        |(x, y, z)| {
            let (x, y, z) = (rone(x), rone(y), rone(z));
            let (assoc, comm) = shuffle_residuals(&x, &y, &z);
            Ok(prelie_residual(&x, &y, &z).is_zero() && assoc.is_zero() && comm.is_zero())
        },
    );
    let mut exact = 0;
    rec.run(
        "rtree-modulo-kernel",
        "rooted-tree Com-Prelie residual lies in ker φ_PL",
        triples,
        |(x, y, z)| {
            let r = com_prelie_residual(&rone(x), &rone(y), &rone(z));
            if r.is_zero() {
                exact += 1;
            }
            Ok(phi_pl_lc(&r).is_zero())
        },
    );
    let total = cfg.instances;
    rec.note(format!(
        "(residual exactly zero in {exact}/{total}; the unit 1 gives (1⧢1)•1 − 0 − 0 = 1(1))"
    ));
}

fn ptree(rec: &mut Recorder, cfg: &Config, rng: &mut Rng8) {
    let sampler = PTreeSampler::new(cfg.size.clamp(1, 4), 2);
    let small = PTreeSampler::new(cfg.size.clamp(1, 3), 2);
    let one = |t: &PartitionedTree| LinComb::basis(t.clone());
    let cases: Vec<_> = (0..cfg.instances)
        .map(|_| {
            let t = sampler.sample(rng);
            let k = 1 + (rng_index(rng, 3));
            let forest: Vec<_> = (0..k).map(|_| small.sample(rng)).collect();
            (t, forest)
        })
        .collect();
    rec.run(
        "multigraft",
        "t • t1..tk agrees with the symmetric-brace recursion",
        cases.clone(),
        |(t, forest)| {
            let args: Vec<_> = forest.iter().map(one).collect();
            let direct = multigraft_lc(&one(t), &args);
            Ok(direct == og_product(&one(t), &args)
                && direct.mass() == rat(t.vertex_count().pow(forest.len() as u32) as i64))
        },
    );
    let mut census = Census::new(2).expect("d = 2");
    let all: Vec<PartitionedTree> = (1..=cfg.size.clamp(1, 4))
        .flat_map(|n| census.trees(n).expect("n >= 1").to_vec())
        .collect();
    let vertex = |d: u32| Some(one(&PartitionedTree::vertex(d)));
    rec.run(
        "free-eval",
        "evaluation with d ↦ single vertex d is the identity",
        all,
        |t| Ok(free_eval(t, &vertex)? == one(t)),
    );
    let pairs: Vec<_> = (0..cfg.instances)
        .map(|_| (small.sample(rng), small.sample(rng)))
        .collect();
    rec.run(
        "rigidity-symmetry",
        "(δ ⊗ Id)δ(x) is symmetric in the last two slots",
        pairs.clone(),
        |(x, _)| Ok(rigidity_symmetry_residual(&one(x)).is_zero()),
    );
    rec.run(
        "rigidity-derivation",
        "δ(x•y) = x⊗y + Σ (x1•y)⊗x2 + x1⊗(x2•y)",
        pairs,
        |(x, y)| Ok(rigidity_derivation_residual(&one(x), &one(y)).is_zero()),
    );
    let plain = PTreeSampler::new(cfg.size.clamp(1, 3), 1);
    let quads: Vec<_> = (0..cfg.instances)
        .map(|_| {
            [
                plain.sample(rng),
                plain.sample(rng),
                plain.sample(rng),
                plain.sample(rng),
            ]
        })
        .collect();
    rec.run(
        "kernel-elements",
        "δ kills the elements X, Y, Z and T",
        quads,
        |[a, b, c, d]| {
            Ok(rigidity_coproduct_lc(&kernel_elements::x(a, b)).is_zero()
                && rigidity_coproduct_lc(&kernel_elements::y(a, b, c)).is_zero()
                && rigidity_coproduct_lc(&kernel_elements::z(a, b, c, d)).is_zero()
                && rigidity_coproduct_lc(&kernel_elements::t(a, b, c, d)).is_zero())
        },
    );
}

fn rng_index(rng: &mut Rng8, n: usize) -> usize {
    use rand::Rng;
    rng.gen_range(0..n)
}

fn morphisms(rec: &mut Recorder, cfg: &Config, rng: &mut Rng8) {
    let rs = RTreeSampler::new(cfg.size.clamp(1, 3), 3);
    let pairs: Vec<_> = (0..cfg.instances)
        .map(|_| (rs.sample(rng), rs.sample(rng)))
        .collect();
    rec.run(
        "phi-pl-morphism",
        "φ_PL respects • and ⧢",
        pairs,
        |(x, y)| {
            let (p, s) = pl_morphism_residuals(x, y);
            Ok(p.is_zero() && s.is_zero())
        },
    );
    let ps = PTreeSampler::new(cfg.size.clamp(1, 3), 2);
    let pairs: Vec<_> = (0..cfg.instances)
        .map(|_| (ps.sample(rng), ps.sample(rng)))
        .collect();
    rec.run(
        "phi-cpl-morphism",
        "φ_CPL respects • and ⧢",
        pairs.clone(),
        |(x, y)| {
            let (p, s) = cpl_morphism_residuals(x, y)?;
            Ok(p.is_zero() && s.is_zero())
        },
    );
    rec.run(
        "cpl-relations",
        "φ_CPL kills 1•t.., 2•t t'.., 1⧢t − t and the quadratic relation",
        pairs.clone(),
        |(x, y)| {
            let forest = [x.clone(), y.clone()];
            Ok(cpl_relation_graft(1, &forest[..1])?.is_zero()
                && cpl_relation_graft(1, &forest)?.is_zero()
                && cpl_relation_graft(2, &forest)?.is_zero()
                && cpl_relation_unit(x)?.is_zero()
                && cpl_relation_four(x, y)?.is_zero())
        },
    );
    rec.run(
        "cpl-two-graft",
        "φ_CPL(2 • t) = x0 φ_CPL(t)",
        pairs,
        |(x, _)| Ok(cpl_rule_two_graft(x)?.is_zero()),
    );
    let cases: Vec<_> = (0..cfg.instances)
        .map(|_| {
            let n = 1 + rng_index(rng, 3) as u32;
            let i = 1 + rng_index(rng, 3) as u32;
            let j = 1 + rng_index(rng, 3) as u32;
            (n, i, j, rs.forest(rng, 2), rs.forest(rng, 2))
        })
        .collect();
    rec.run(
        "pl-relations",
        "φ_PL kills B_{n+1}(B_i(S)B_j(T)) − B_n(B_{i+1}(S B_j(T))) − B_n(B_{j+1}(B_i(S) T))",
        cases,
        |(n, i, j, s, t)| Ok(pl_relation(*n, *i, *j, s, t).is_zero()),
    );
    let trees: Vec<RootedTree> = (1..=cfg.size.clamp(1, 4))
        .flat_map(|n| rt_enumerate(n, 4))
        .collect();
    rec.run("triangle", "φ_PL = φ_CPL ∘ ψ", trees, |t| {
        Ok(triangle_residual(t)?.is_zero())
    });
    let x: RootedTree = RootedTree::ladder(&[2, 1]).expect("valid ladder");
    rec.run(
        "psi-shuffle",
        "ψ(2(1) ⧢ 2(1)) ≠ ψ(2(1)) ⧢ ψ(2(1))",
        [x],
        |x| {
            let (lhs, rhs) = psi_shuffle_pair(x, x);
            Ok(lhs != rhs)
        },
    );
    let trees: Vec<RootedTree> = (1..=(cfg.size + 3).min(7)).flat_map(rt_of_degree).collect();
    rec.run(
        "phi-pl-grading",
        "φ_PL maps trees of degree n into word degree n",
        trees,
        |t| Ok(phi_pl(t).iter().all(|(w, _)| w.degree() == t.degree())),
    );
}

fn dendriform(rec: &mut Recorder, cfg: &Config, rng: &mut Rng8) {
    let triples: Vec<_> = (0..cfg.instances)
        .map(|_| {
            (
                random::posword(rng, 3, 3),
                random::posword(rng, 2, 3),
                random::posword(rng, 2, 3),
            )
        })
        .collect();
    rec.run(
        "axioms",
        "(x≺y)≺z = x≺(y⋆z), (x≻y)≺z = x≻(y≺z), (x⋆y)≻z = x≻(y≻z)",
        triples.clone(),
        |(x, y, z)| Ok(dendriform_residuals(x, y, z)?.iter().all(LinComb::is_zero)),
    );
    rec.run("zinbiel", "x ≺ y = y ≻ x", triples, |(x, y, _)| {
        Ok(dendriform_left(x, y)? == dendriform_right(y, x)?)
    });
    let pairs: Vec<_> = (0..cfg.instances)
        .map(|_| (random::admissible(rng, 5), random::admissible(rng, 5)))
        .collect();
    rec.run(
        "closure",
        "u ⋆ v stays admissible for admissible u, v",
        pairs,
        |(u, v)| {
            Ok(dendriform_star(u, v)?
                .iter()
                .all(|(w, _)| w.is_admissible()))
        },
    );
    let top = (cfg.size + 3).min(7);
    let pairs: Vec<_> = (0..cfg.instances)
        .map(|_| {
            let u = random::admissible(rng, top - 1);
            let v = random::admissible(rng, top - u.weight());
            (u, v)
        })
        .collect();
    rec.run(
        "m-product",
        "m_u • m_v by the closed formula matches the word product",
        pairs,
        |(u, v)| Ok(m_eval_lc(&m_prelie(u, v)?) == prelie(&m_eval(u), &m_eval(v))),
    );
    let ladders: Vec<_> = (1..=(cfg.size + 4).min(8))
        .flat_map(admissible_words)
        .collect();
    rec.run("m-ladder", "m_w = φ_PL(l(w))", ladders, |w| {
        Ok(m_eval(w) == phi_pl(&RootedTree::ladder(w.letters())?))
    });
    let elements: Vec<_> = (0..cfg.instances)
        .map(|_| {
            let n = 1 + rng_index(rng, top);
            let words = words_of_degree(n).expect("n >= 1");
            let x: LinComb<BinaryWord> = (0..3)
                .map(|_| {
                    (
                        words[rng_index(rng, words.len())].clone(),
                        random::coefficient(rng),
                    )
                })
                .collect();
            (n, x)
        })
        .collect();
    rec.run(
        "m-basis",
        "m_eval ∘ to_m_basis is the identity",
        elements,
        |(n, x)| Ok(m_eval_lc(&to_m_basis(x, *n)?) == *x),
    );
    let fib = series_fibonacci_fv(12);
    rec.run(
        "dimensions",
        "Σ_k binom(n−k, k−1) = p_n and counts admissible words",
        1..=12usize,
        |&n| {
            let mut total = 0u64;
            for k in 1..=n {
                let d = adm_dimension(n, k)?;
                if d as usize != admissible_words(n).iter().filter(|w| w.len() == k).count() {
                    return Ok(false);
                }
                total += d;
            }
            Ok(rat(total as i64) == *fib.coeff(n))
        },
    );
}

fn enumeration(rec: &mut Recorder, cfg: &Config) {
    let nmax = cfg.size.clamp(1, 8);
    for (d, cap) in [(1u32, nmax), (2, nmax.min(5)), (3, nmax.min(4))] {
        let mut census = Census::new(d).expect("d >= 1");
        let (series, _) = pt_counts_by_series(cap, d).expect("valid census");
        let mut counts = Vec::new();
        rec.run(
            &format!("census-d{d}"),
            "canonical generation agrees with the census series",
            1..=cap,
            |&n| {
                let c = census.trees(n)?.len();
                counts.push(c.to_string());
                Ok(series[n - 1] == c.into())
            },
        );
        rec.note(format!("counts {}", counts.join(",")));
    }
    rec.run(
        "census-polynomials",
        "closed forms f_1..f_5 agree with the series",
        1..=4i64,
        |&d| {
            let (series, _) = pt_counts_by_series(5, d as u32)?;
            Ok((1..=5).all(|n| {
                census_polynomial(n, d) == Some(Rational::from_integer(series[n - 1].clone()))
            }))
        },
    );
    let fib = series_fibonacci_fv(10);
    rec.run(
        "dim-v",
        "binary words of degree k number p_k (Fibonacci)",
        1..=10usize,
        |&k| Ok(rat(words_of_degree(k)?.len() as i64) == *fib.coeff(k)),
    );
    let fh = series_fh(10);
    rec.run(
        "dim-h",
        "monomials of degree k match F_H",
        1..=10usize,
        |&k| Ok(rat(monomials_of_degree(k).len() as i64) == *fh.coeff(k) && !fh.coeff(k).is_zero()),
    );
}
