//! Command parsing and dispatch.
//!
//! A command line is a verb followed by its operands. Polyadic operands are
//! separated by `;` since `+` already joins the terms of a sum.

use itertools::Itertools;
use serde_json::{json, Value};

use super::parser::{lower_basis, parse_basis_list, parse_in, print_canonical};
use super::{Context, DslError, EXIT_OK, EXIT_VERIFY};
use crate::groupring::{Element, GroupRing};
use crate::ngroup::{gidentities, AdiagCyclic, AdiagKey, CyclicKey, DerivedCyclic, NaryGroup, Placement};
use crate::pring::PolyadicRing;
use crate::verify::{self, AxiomReport, CheckConfig, Law};

/// Largest group whose full product table `table` prints without an
/// explicit generator list.
pub const MAX_TABLE_ORDER: usize = 16;

/// Sample counts for checks that cannot run exhaustively.
const RING_SAMPLES: u64 = 1000;
const GROUPRING_SAMPLES: u64 = 500;
const GROUPRING_SUPPORT: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verb {
    Eval,
    Mul,
    Add,
    Aug,
    Quer,
    Identities,
    Table,
    Verify,
    Arity,
}

impl Verb {
    pub const ALL: [(&'static str, Verb); 9] = [
        ("eval", Verb::Eval),
        ("mul", Verb::Mul),
        ("add", Verb::Add),
        ("aug", Verb::Aug),
        ("quer", Verb::Quer),
        ("identities", Verb::Identities),
        ("table", Verb::Table),
        ("verify", Verb::Verify),
        ("arity", Verb::Arity),
    ];
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub verb: Verb,
    pub args: String,
    /// Byte offset of `args` in the original line.
    pub args_offset: usize,
}

/// Splits a line into verb and argument text.
pub fn parse_command(line: &str) -> Result<Command, DslError> {
    let trimmed = line.trim_start();
    let lead = line.len() - trimmed.len();
    let (word, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
    let verb = Verb::ALL.iter().find(|(name, _)| *name == word).map(|&(_, v)| v).ok_or_else(|| DslError::Parse {
        offset: lead,
        expected: Verb::ALL.iter().map(|(n, _)| format!("`{n}`")).collect(),
        found: if word.is_empty() { "end of input".into() } else { format!("`{word}`") },
    })?;
    let args = rest.trim();
    let args_offset = if args.is_empty() { line.len() } else { lead + word.len() + 1 + (rest.len() - rest.trim_start().len()) };
    Ok(Command { verb, args: args.to_string(), args_offset })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub seed: u64,
    pub json: bool,
}

/// Rendered result and exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    pub fn error(e: &DslError, json: bool) -> Self {
        let text = if json { json!({ "error": e.to_string(), "code": e.exit_code() }).to_string() } else { format!("error: {e}") };
        Outcome { text, code: e.exit_code() }
    }
}

/// Runs one command in a context.
pub fn run_command(ctx: &Context, cmd: &Command, opts: &RunOptions) -> Outcome {
    let res = match ctx {
        Context::Adiag(gr) => run_in(gr, cmd, opts),
        Context::Derived(gr) => run_in(gr, cmd, opts),
    };
    match res {
        Ok(r) => {
            let text = if opts.json { r.json.to_string() } else { r.text };
            Outcome { text, code: if r.failed { EXIT_VERIFY } else { EXIT_OK } }
        }
        Err(e) => Outcome::error(&shift(e, cmd.args_offset), opts.json),
    }
}

fn shift(e: DslError, by: usize) -> DslError {
    match e {
        DslError::Parse { offset, expected, found } => DslError::Parse { offset: offset + by, expected, found },
        other => other,
    }
}

/// Groups the CLI knows how to certify as nonderived.
pub trait CliGroup: NaryGroup {
    /// The binary product of two elements when it lies in the group.
    fn binary_in_group(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
}

impl CliGroup for AdiagCyclic {
    /// Products of two antidiagonal matrices are diagonal.
    fn binary_in_group(&self, _: &AdiagKey, _: &AdiagKey) -> Option<AdiagKey> {
        None
    }
}

impl CliGroup for DerivedCyclic {
    fn binary_in_group(&self, a: &CyclicKey, b: &CyclicKey) -> Option<CyclicKey> {
        Some(self.binary_product(a, b))
    }
}

struct Rendered {
    text: String,
    json: Value,
    failed: bool,
}

fn ok(text: String, json: Value) -> Result<Rendered, DslError> {
    Ok(Rendered { text, json, failed: false })
}

fn operands<G: NaryGroup>(gr: &GroupRing<G>, args: &str) -> Result<Vec<Element<G>>, DslError> {
    let mut start = 0;
    args.split(';')
        .map(|a| {
            let r = parse_in(gr, a).map_err(|e| shift(e, start));
            start += a.len() + 1;
            r
        })
        .collect()
}

fn run_in<G: CliGroup>(gr: &GroupRing<G>, cmd: &Command, opts: &RunOptions) -> Result<Rendered, DslError> {
    let element = |x: &Element<G>| {
        let s = print_canonical(gr, x);
        ok(s.clone(), json!({ "result": s }))
    };
    match cmd.verb {
        Verb::Eval => element(&parse_in(gr, &cmd.args)?),
        Verb::Mul => element(&gr.gr_mul(&operands(gr, &cmd.args)?)?),
        Verb::Add => element(&gr.gr_add(&operands(gr, &cmd.args)?)?),
        Verb::Quer => element(&gr.gr_quer(&parse_in(gr, &cmd.args)?)?),
        Verb::Aug => {
            let r = gr.augmentation(&parse_in(gr, &cmd.args)?)?;
            let s = gr.ring().format(&r);
            ok(s.clone(), json!({ "result": s }))
        }
        Verb::Identities => {
            let lines: Vec<String> = match cmd.args.as_str() {
                "" | "group" => gidentities(gr.group()).iter().map(|e| gr.group().format_elem(e)).collect(),
                "ring" => gr.ring().ridentity_search().iter().map(|e| gr.ring().format(e)).collect(),
                "groupring" => gr.gr_trivial_identities()?.iter().map(|e| gr.format(e)).collect(),
                other => {
                    return Err(DslError::Parse {
                        offset: 0,
                        expected: vec!["`group`".into(), "`ring`".into(), "`groupring`".into()],
                        found: format!("`{other}`"),
                    })
                }
            };
            let text = if lines.is_empty() { "none".to_string() } else { lines.join("\n") };
            ok(text, json!({ "identities": lines }))
        }
        Verb::Table => table(gr, &cmd.args),
        Verb::Verify => {
            let reports = verify_target(gr, &cmd.args, opts.seed)?;
            let failed = reports.iter().any(|r| !r.holds());
            let text = reports.iter().map(|r| r.to_string()).join("\n");
            let json = json!({ "reports": reports });
            Ok(Rendered { text, json, failed })
        }
        Verb::Arity => {
            let p = gr.profile();
            ok(p.to_string(), json!({ "profile": p }))
        }
    }
}

fn table<G: NaryGroup>(gr: &GroupRing<G>, args: &str) -> Result<Rendered, DslError> {
    let g = gr.group();
    let gens: Vec<G::Elem> = if args.is_empty() {
        if g.order() > MAX_TABLE_ORDER {
            return Err(DslError::Algebra(crate::error::AlgebraError::BudgetExceeded {
                needed: g.order() as u128,
                budget: MAX_TABLE_ORDER as u128,
            }));
        }
        g.elements()
    } else {
        parse_basis_list(args)?.iter().map(|b| lower_basis(g, b)).collect::<Result<_, _>>()?
    };
    let rows: Vec<Vec<String>> = std::iter::repeat_n(gens.iter(), g.arity())
        .multi_cartesian_product()
        .map(|w| {
            let w: Vec<G::Elem> = w.into_iter().cloned().collect();
            let mut row: Vec<String> = w.iter().map(|x| g.format_elem(x)).collect();
            row.push(g.format_elem(&g.product(&w)));
            row
        })
        .collect();
    let text = rows.iter().map(|r| format!("{} = {}", r[..r.len() - 1].join(" "), r[r.len() - 1])).join("\n");
    ok(text, json!({ "table": rows }))
}

/// Names accepted by `verify`; `all` runs every one except `controls`.
pub const VERIFY_TARGETS: [&str; 15] = [
    "group-assoc",
    "group-quer",
    "group-identities",
    "nonderived",
    "ring-assoc",
    "ring-comm",
    "ring-distrib",
    "ring-zero",
    "gr-add-assoc",
    "gr-add-comm",
    "gr-mul-assoc",
    "gr-distrib",
    "gr-zero",
    "aug-hom",
    "controls",
];

fn named<T>(mut r: AxiomReport<T>, axiom: &str) -> AxiomReport<String> {
    r.axiom = axiom.into();
    r.erase()
}

/// Runs one named check (or `all`).
pub fn verify_target<G: CliGroup>(gr: &GroupRing<G>, target: &str, seed: u64) -> Result<Vec<AxiomReport<String>>, DslError> {
    let target = if target.is_empty() { "all" } else { target };
    if target == "all" {
        let mut out = Vec::new();
        for t in VERIFY_TARGETS.iter().filter(|t| **t != "controls") {
            out.extend(verify_target(gr, t, seed)?);
        }
        return Ok(out);
    }
    let ring_cfg = CheckConfig { seed, samples: RING_SAMPLES, ..CheckConfig::default() };
    let gr_cfg = CheckConfig { seed, samples: GROUPRING_SAMPLES, ..CheckConfig::default() };
    let (g, ring) = (gr.group(), gr.ring());
    let gdom = verify::group_domain(g);
    let gop = verify::group_op(g);
    let rdom = verify::ring_domain(ring);
    let grdom = verify::groupring_domain(gr, GROUPRING_SUPPORT);
    let (gr_add, gr_mul) = (verify::groupring_add(gr), verify::groupring_mul(gr));
    let reports = match target {
        "group-assoc" => vec![named(verify::check_total_associativity(&gop, &gdom, &ring_cfg)?, "total-associativity")],
        "group-quer" => {
            let quer = |x: &G::Elem| g.querelement(x).expect("group elements have querelements");
            vec![named(verify::check_axiom(&gop, &Law::Quer(&quer), &gdom, &ring_cfg)?, "querelement")]
        }
        "group-identities" => gidentities(g)
            .into_iter()
            .map(|e| {
                let name = format!("identity {}", g.format_elem(&e));
                Ok(named(verify::check_axiom(&gop, &Law::Identity(e, Placement::Ends), &gdom, &ring_cfg)?, &name))
            })
            .collect::<Result<_, DslError>>()?,
        "nonderived" => {
            let oracle = |a: &G::Elem, b: &G::Elem| g.binary_in_group(a, b);
            vec![named(verify::check_closure_nonderived(&oracle, &gdom)?, "nonderived")]
        }
        "ring-assoc" => vec![
            named(verify::check_total_associativity(&verify::ring_add(ring), &rdom, &ring_cfg)?, "additive-associativity"),
            named(
                verify::check_total_associativity(&verify::ring_mul(ring), &rdom, &ring_cfg)?,
                "multiplicative-associativity",
            ),
        ],
        "ring-comm" => vec![
            named(
                verify::check_axiom(&verify::ring_add(ring), &Law::Commutativity, &rdom, &ring_cfg)?,
                "additive-commutativity",
            ),
            named(
                verify::check_axiom(&verify::ring_mul(ring), &Law::Commutativity, &rdom, &ring_cfg)?,
                "multiplicative-commutativity",
            ),
        ],
        "ring-distrib" => vec![named(verify::check_ring_distributivity(ring, &ring_cfg)?, "distributivity")],
        "ring-zero" => {
            let z = ring.rzero().ok_or(crate::error::AlgebraError::NoZero)?;
            let r = verify::check_zero_law(&verify::ring_add(ring), &verify::ring_mul(ring), &z, &rdom, &ring_cfg)?;
            vec![named(r, "zero-law")]
        }
        "gr-add-assoc" => vec![named(verify::check_total_associativity(&gr_add, &grdom, &gr_cfg)?, "additive-associativity")],
        "gr-add-comm" => {
            vec![named(verify::check_axiom(&gr_add, &Law::Commutativity, &grdom, &gr_cfg)?, "additive-commutativity")]
        }
        "gr-mul-assoc" => {
            vec![named(verify::check_total_associativity(&gr_mul, &grdom, &gr_cfg)?, "multiplicative-associativity")]
        }
        "gr-distrib" => vec![named(verify::check_distributivity(&gr_add, &gr_mul, &grdom, &gr_cfg)?, "distributivity")],
        "gr-zero" => {
            let z = gr.gr_zero()?;
            vec![named(verify::check_zero_law(&gr_add, &gr_mul, &z, &grdom, &gr_cfg)?, "zero-law")]
        }
        "aug-hom" => augmentation_reports(gr, &grdom, &gr_cfg)?,
        "controls" => controls(seed)?,
        other => {
            return Err(DslError::Parse {
                offset: 0,
                expected: VERIFY_TARGETS.iter().chain(&["all"]).map(|t| format!("`{t}`")).collect(),
                found: format!("`{other}`"),
            })
        }
    };
    Ok(reports)
}

fn augmentation_reports<G: NaryGroup>(
    gr: &GroupRing<G>,
    dom: &verify::Domain<'_, Element<G>>,
    cfg: &CheckConfig,
) -> Result<Vec<AxiomReport<String>>, DslError> {
    let ring = gr.ring();
    let p = gr.profile();
    let aug = |x: &Element<G>| gr.augmentation(x);
    let fmt = |r: &crate::pring::RingScalar| ring.format(r);
    let sum = verify::iterated_ring_op(ring.add_arity(), p.ell_m(), verify::ring_add(ring));
    let prod = verify::iterated_ring_op(ring.mul_arity(), p.ell_n(), verify::ring_mul(ring));
    Ok(vec![
        named(
            verify::check_homomorphism(&verify::groupring_add(gr), &sum, &aug, &fmt, dom, cfg)?,
            "augmentation-additive",
        ),
        named(
            verify::check_homomorphism(&verify::groupring_mul(gr), &prod, &aug, &fmt, dom, cfg)?,
            "augmentation-multiplicative",
        ),
    ])
}

/// The four deliberately broken structures; each must fail.
fn controls(seed: u64) -> Result<Vec<AxiomReport<String>>, DslError> {
    let cfg = CheckConfig { seed, samples: 100, ..CheckConfig::default() };
    let jz = PolyadicRing::jroot(2)?;
    let mod3 = PolyadicRing::jroot(2)?.with_modulus(3)?;
    let adiag = AdiagCyclic::new(3)?;
    Ok(vec![
        verify::controls::skew_associativity(&cfg)?.erase(),
        verify::controls::corrupted_distributivity(&jz, &cfg)?.erase(),
        verify::controls::wrong_zero(&mod3, &cfg)?.erase(),
        verify::controls::identity_as_quer(&adiag, &cfg)?.erase(),
    ])
}
