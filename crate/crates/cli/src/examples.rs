//! Reproductions of the published examples, each rendered as a list of
//! claims with the expected value next to the computed one.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::Result;
use clap::ValueEnum;
use ehrlab::exact::format_rational;
use ehrlab::fixtures::{load_nonidp_instance, load_tree, TREE_T, TREE_T_PRIME};
use ehrlab::gt::{face_example_count, verify_counterexample};
use ehrlab::hull::{contains, decompose_as_sum, partition_polytope};
use ehrlab::poset::{
    ehrhart_from_lattice, hook_multiset_shape, hook_multiset_tree, order_polynomial_value,
    poset_from_shape,
};
use ehrlab::reference::{self, Provenance};
use ehrlab::{power_sum_polynomial, IdealLattice, LatticePoint, Poset, UniPolynomial};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExampleId {
    #[value(name = "power-sums", alias = "2.1")]
    PowerSums,
    #[value(name = "claw-face", alias = "2.2")]
    ClawFace,
    #[value(name = "partition-polytope", alias = "3.4")]
    PartitionPolytope,
    #[value(name = "gt-counterexample", alias = "3.6")]
    GtCounterexample,
    #[value(name = "hook-shapes", alias = "4.2")]
    HookShapes,
    #[value(name = "hook-trees", alias = "4.3")]
    HookTrees,
}

impl ExampleId {
    pub fn name(self) -> &'static str {
        match self {
            ExampleId::PowerSums => "power-sums",
            ExampleId::ClawFace => "claw-face",
            ExampleId::PartitionPolytope => "partition-polytope",
            ExampleId::GtCounterexample => "gt-counterexample",
            ExampleId::HookShapes => "hook-shapes",
            ExampleId::HookTrees => "hook-trees",
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Claim {
    pub description: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ExampleReport {
    pub example: String,
    pub pass: bool,
    pub claims: Vec<Claim>,
    pub artifacts: BTreeMap<String, Value>,
}

impl ExampleReport {
    fn new(id: ExampleId) -> Self {
        Self {
            example: id.name().to_string(),
            pass: true,
            claims: Vec::new(),
            artifacts: BTreeMap::new(),
        }
    }

    fn claim(
        &mut self,
        provenance: Provenance,
        description: impl Into<String>,
        expected: impl ToString,
        computed: impl ToString,
    ) {
        let expected = expected.to_string();
        let computed = computed.to_string();
        let pass = expected == computed;
        self.pass &= pass;
        self.claims.push(Claim {
            description: description.into(),
            expected,
            computed,
            pass,
            provenance,
        });
    }

    fn artifact(&mut self, key: &str, value: impl Serialize) -> Result<()> {
        self.artifacts
            .insert(key.to_string(), serde_json::to_value(value)?);
        Ok(())
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "{}: {}\n",
            self.example,
            if self.pass { "PASS" } else { "FAIL" }
        );
        for c in &self.claims {
            let label = match c.provenance {
                Provenance::Published => "published",
                Provenance::Derived => "derived",
                Provenance::Elementary => "elementary",
            };
            out.push_str(&format!(
                "  [{}] {:<10} {}\n      expected {}\n      computed {}\n",
                if c.pass { "ok" } else { "FAIL" },
                label,
                c.description,
                c.expected,
                c.computed
            ));
        }
        for (key, value) in &self.artifacts {
            out.push_str(&format!("  {key}: {value}\n"));
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct ExampleOptions {
    pub ell: Option<u32>,
    pub max_dilate: usize,
    pub fixtures: std::path::PathBuf,
}

pub fn run(id: ExampleId, opts: &ExampleOptions) -> Result<ExampleReport> {
    match id {
        ExampleId::PowerSums => {
            power_sums(opts.ell.unwrap_or(reference::POWER_SUM_NEGATIVE_LENGTH))
        }
        ExampleId::ClawFace => claw_face(opts.ell.unwrap_or(3) as usize, opts.max_dilate),
        ExampleId::PartitionPolytope => partition_points(),
        ExampleId::GtCounterexample => gt_counterexample(&opts.fixtures),
        ExampleId::HookShapes => hook_shapes(),
        ExampleId::HookTrees => hook_trees(&opts.fixtures),
    }
}

fn poly_text(p: &UniPolynomial) -> String {
    p.to_strings().join(",")
}

/// Claws up to this many leaves are also cross-checked through the poset
/// machinery; the ideal lattice has `2^l + 1` elements.
const CLAW_CROSS_CHECK_LIMIT: u32 = 12;

fn power_sums(ell: u32) -> Result<ExampleReport> {
    let mut r = ExampleReport::new(ExampleId::PowerSums);
    let p = power_sum_polynomial(ell);
    let direct: Vec<String> = (0..=5i64)
        .map(|n| {
            (1..=n + 1)
                .map(|j| num_traits::Pow::pow(BigInt::from(j), ell))
                .sum::<BigInt>()
                .to_string()
        })
        .collect();
    let evaluated: Vec<String> = (0..=5).map(|n| p.eval_int(n).to_string()).collect();
    r.claim(
        Provenance::Elementary,
        format!("values at n = 0..5 equal sum_(j=1)^(n+1) j^{ell}"),
        direct.join(","),
        evaluated.join(","),
    );
    let negative = p.negative_coefficients();
    if ell == reference::POWER_SUM_NEGATIVE_LENGTH {
        for (degree, expected) in reference::power_sum_low_coefficients() {
            r.claim(
                Provenance::Published,
                format!("coefficient of n^{degree}"),
                format_rational(&expected),
                format_rational(&p.coeff(degree)),
            );
        }
        let (degree, value) = p.min_coefficient().expect("nonzero polynomial");
        r.claim(
            Provenance::Derived,
            "minimum coefficient",
            format!(
                "{} at degree 1",
                format_rational(&reference::power_sum_low_coefficients()[1].1)
            ),
            format!("{} at degree {degree}", format_rational(&value)),
        );
    }
    if ell < reference::POWER_SUM_NEGATIVE_LENGTH {
        r.claim(
            Provenance::Published,
            "all coefficients are non-negative",
            true,
            negative.is_empty(),
        );
    }
    if ell <= CLAW_CROSS_CHECK_LIMIT {
        let claw = Poset::claw(ell as usize)?;
        let lattice = IdealLattice::new(&claw);
        r.claim(
            Provenance::Derived,
            format!("order polynomial of the claw with {ell} leaves"),
            poly_text(&p),
            poly_text(&ehrhart_from_lattice(&lattice)),
        );
    }
    r.artifact("polynomial", &p)?;
    r.artifact("rendering", p.to_string())?;
    let negative: Vec<(String, String)> = negative
        .iter()
        .map(|(d, c)| (d.to_string(), format_rational(c)))
        .collect();
    r.artifact("negative_coefficients", negative)?;
    Ok(r)
}

fn claw_face(ell: usize, max_dilate: usize) -> Result<ExampleReport> {
    let mut r = ExampleReport::new(ExampleId::ClawFace);
    let ps = power_sum_polynomial(ell as u32);
    let claw = Poset::claw(ell)?;
    let mut face_counts = Vec::new();
    let mut claw_counts = Vec::new();
    for n in 0..=max_dilate {
        face_counts.push(face_example_count(ell, n)?.to_string());
        claw_counts.push(order_polynomial_value(&claw, n).to_string());
    }
    let sums: Vec<String> = (0..=max_dilate as i64)
        .map(|n| ps.eval_int(n).to_string())
        .collect();
    r.claim(
        Provenance::Derived,
        format!("order-preserving maps from the claw with {ell} leaves, dilates 0..{max_dilate}"),
        sums.join(","),
        claw_counts.join(","),
    );
    r.claim(
        Provenance::Derived,
        format!("lattice points of the GT face for {ell} leaves, dilates 0..{max_dilate}"),
        sums.join(","),
        face_counts.join(","),
    );
    let face = ehrlab::GtFace::claw(ell)?;
    if !face.has_shared_region() {
        r.artifact(
            "note",
            "the face has no shared region, so it is not in bijection with the claw",
        )?;
    }
    r.artifact("face", face)?;
    Ok(r)
}

fn partition_points() -> Result<ExampleReport> {
    let mut r = ExampleReport::new(ExampleId::PartitionPolytope);
    let poly = partition_polytope(18, 9)?;
    let mut certificates = BTreeMap::new();
    for coords in reference::nonidp_partition_points() {
        let p = LatticePoint::new(coords);
        let half = p.divided(2);
        let cert = contains(&poly, &half)?;
        r.claim(
            Provenance::Published,
            format!("{p}/2 lies in P(18,9)"),
            "inside",
            verdict(cert.is_inside()),
        );
        r.claim(
            Provenance::Elementary,
            format!("certificate for {p}/2 re-validates"),
            true,
            cert.validate(&poly, &half),
        );
        let d = decompose_as_sum(&p, &poly, 2)?;
        let split = match &d.parts {
            Some(parts) => format!("{} + {}", parts[0], parts[1]),
            None => "none".to_string(),
        };
        r.claim(
            Provenance::Published,
            format!(
                "{p} as a sum of two lattice points of P(18,9) ({} candidates)",
                d.examined
            ),
            "none",
            split,
        );
        certificates.insert(p.to_string(), cert);
    }
    let witness: Vec<LatticePoint> = reference::nonidp_partition_witness()
        .into_iter()
        .map(LatticePoint::new)
        .collect();
    let sum = witness
        .iter()
        .fold(LatticePoint::new(vec![0; 9]), |acc, w| acc.add(w));
    let first = LatticePoint::new(reference::nonidp_partition_points()[0].clone());
    r.claim(
        Provenance::Published,
        "sum of the four witness partitions",
        first.scaled(2),
        sum,
    );
    r.artifact("certificates", certificates)?;
    Ok(r)
}

fn verdict(inside: bool) -> &'static str {
    if inside {
        "inside"
    } else {
        "outside"
    }
}

fn gt_counterexample(fixtures: &Path) -> Result<ExampleReport> {
    let mut r = ExampleReport::new(ExampleId::GtCounterexample);
    let input = load_nonidp_instance(fixtures)?;
    let report = verify_counterexample(&input)?;
    for check in &report.checks {
        let computed = if check.pass {
            "holds".to_string()
        } else {
            check.details.join("; ")
        };
        r.claim(Provenance::Published, check.name.clone(), "holds", computed);
    }
    r.claim(
        Provenance::Published,
        "partition polytope tested for the key row",
        "P(18,9)",
        report
            .partition_polytope
            .map_or("none".to_string(), |(a, b)| format!("P({a},{b})")),
    );
    r.artifact("report", &report)?;
    Ok(r)
}

fn hook_shapes() -> Result<ExampleReport> {
    let mut r = ExampleReport::new(ExampleId::HookShapes);
    let (a, b) = reference::hook_pair_shapes();
    let (pa, pb) = reference::hook_pair_shape_polynomials();
    let (ha, hb) = (hook_multiset_shape(&a), hook_multiset_shape(&b));
    r.claim(
        Provenance::Published,
        "hook multisets agree",
        format!("{:?}", ha.values()),
        format!("{:?}", hb.values()),
    );
    let (va, vb) = reference::HOOK_PAIR_SHAPE_VALUES_AT_ONE;
    let cases = [(&a, &pa, va, &ha), (&b, &pb, vb, &hb)];
    let mut polys = BTreeMap::new();
    for (shape, printed, at_one, hooks) in cases {
        let name = format!("{:?}", shape.parts());
        let lattice = IdealLattice::new(&poset_from_shape(shape)?);
        let e = ehrhart_from_lattice(&lattice);
        r.claim(
            Provenance::Published,
            format!("ehr(1) for shape {name}"),
            at_one,
            e.eval_int(1),
        );
        r.claim(
            Provenance::Published,
            format!("Ehrhart polynomial of shape {name}"),
            poly_text(printed),
            poly_text(&e),
        );
        r.claim(
            Provenance::Derived,
            format!("linear extensions of shape {name} (hook formula)"),
            hooks.hook_formula()?,
            lattice.linear_extensions(),
        );
        polys.insert(name, e);
    }
    r.artifact("polynomials", polys)?;
    Ok(r)
}

fn hook_trees(fixtures: &Path) -> Result<ExampleReport> {
    let mut r = ExampleReport::new(ExampleId::HookTrees);
    let t = load_tree(fixtures, TREE_T)?;
    let tp = load_tree(fixtures, TREE_T_PRIME)?;
    let (pt, ptp) = reference::hook_pair_tree_polynomials();
    let (ht, htp) = (hook_multiset_tree(&t), hook_multiset_tree(&tp));
    r.claim(
        Provenance::Published,
        "hook multisets agree",
        format!("{:?}", ht.values()),
        format!("{:?}", htp.values()),
    );
    let (vt, vtp) = reference::HOOK_PAIR_TREE_VALUES_AT_ONE;
    let cases = [
        (TREE_T, &t, &pt, vt, &ht),
        (TREE_T_PRIME, &tp, &ptp, vtp, &htp),
    ];
    let mut polys = BTreeMap::new();
    for (name, tree, printed, at_one, hooks) in cases {
        let lattice = IdealLattice::new(&tree.to_poset()?);
        let e = ehrhart_from_lattice(&lattice);
        r.claim(
            Provenance::Published,
            format!("Ehrhart polynomial of {name}"),
            poly_text(printed),
            poly_text(&e),
        );
        r.claim(
            Provenance::Derived,
            format!("ehr(1) for {name}"),
            at_one,
            e.eval_int(1),
        );
        r.claim(
            Provenance::Derived,
            format!("linear extensions of {name} (hook formula)"),
            hooks.hook_formula()?,
            lattice.linear_extensions(),
        );
        polys.insert(name.to_string(), e);
    }
    r.artifact("polynomials", polys)?;
    Ok(r)
}
