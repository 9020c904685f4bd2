//! Command-line front end: argument parsing, dispatch and report rendering.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{parse_rational, PrimeField};
use crate::bass_serre::{self, amalgam, hnn};
use crate::coset_trees::{
    build_coset_tree, chain_4_to_3, kernel_at_depth, parse_group_pair, read_chain, refine_index4, IndexChain,
};
use crate::error::{Error, Result};
use crate::matrix2::parse_matrix;
use crate::raag::{self, SimpleGraph};
use crate::report::Report;
use crate::surface::{self, SurfaceParams, DEFAULT_SEED};
use crate::valuation_bt::{self, LatticeVertex};

#[derive(Parser, Debug)]
#[command(name = "treecert", version, about = "Certificates for group actions on trees")]
pub struct Cli {
    /// Emit one JSON record per check followed by a summary record.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Surface-group representation over F_p(x, y).
    #[command(subcommand)]
    Surface(SurfaceCmd),
    /// Bruhat–Tits tree of SL(2, F_p(x)).
    #[command(subcommand)]
    Bt(BtCmd),
    /// Index chains and coset trees of permutation groups.
    #[command(subcommand)]
    Chains(ChainsCmd),
    /// Tree counts for right-angled Artin groups.
    #[command(subcommand)]
    Raag(RaagCmd),
    /// Normal-form certificates on Bass–Serre trees.
    #[command(subcommand)]
    Bassserre(BassSerreCmd),
}

#[derive(Args, Debug)]
pub struct ParamArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub c: Option<String>,
    #[arg(long)]
    pub d: Option<String>,
    #[arg(long)]
    pub delta: Option<String>,
    #[arg(long)]
    pub h: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum SurfaceCmd {
    /// Build A, B, C, D and run every family, discreteness and relation check.
    Verify(ParamArgs),
    /// Leading trace term of a word, optionally with a hyperbolizing substitution.
    Word {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        word: String,
        #[arg(long)]
        hyperbolize: bool,
    },
    /// Randomized check of the diagonal-commutator identity.
    Appendix {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Search for short words mapping to plus or minus the identity.
    Relator {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 8)]
        maxlen: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum BtCmd {
    /// Elliptic or hyperbolic, with translation length.
    Classify {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        matrix: String,
    },
    /// Minimum displacement over the ball around the base vertex.
    Displace {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        matrix: String,
        #[arg(long, default_value_t = 3)]
        radius: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum ChainsCmd {
    /// Refine an index-4 subgroup into steps of index at most 3.
    Refine4 {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        subgroup: PathBuf,
    },
    /// Convert a chain with steps at most 4 into one with steps at most 3.
    Convert {
        #[arg(long)]
        chain: PathBuf,
        /// Use only the first `depth` steps of the input chain.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Coset tree of a chain truncated at `depth`.
    Tree {
        #[arg(long)]
        chain: PathBuf,
        #[arg(long)]
        depth: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum RaagCmd {
    /// Lower and upper bounds on the number of trees.
    Plan {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Odd-cycle obstruction to embedding one RAAG in another.
    Embed {
        #[arg(long)]
        sub: PathBuf,
        #[arg(long = "super")]
        sup: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupChoice {
    /// `⟨s, x, y | [x, y], sxs⁻¹ = y⟩` on three trees.
    F2byz,
    /// The genus-2 surface group on two trees.
    S2,
}

#[derive(Subcommand, Debug)]
pub enum BassSerreCmd {
    /// Exhaustive coverage certificate over reduced words up to `maxlen`.
    Certify {
        #[arg(long, value_enum)]
        group: GroupChoice,
        #[arg(long)]
        maxlen: usize,
    },
    /// Normal form and tree data of a single word.
    Word {
        #[arg(long, value_enum)]
        group: GroupChoice,
        #[arg(long)]
        word: String,
    },
}

/// Every command path with the library operations it exercises.
pub const DISPATCH: &[(&str, &[&str])] = &[
    (
        "surface verify",
        &[
            "standard_params",
            "build_ab",
            "verify_family",
            "discreteness_certificate",
            "shalen_double",
            "surface_relation_check",
            "parse_rational",
        ],
    ),
    ("surface word", &["word_trace_leading", "hyperbolize", "word_eval", "classify"]),
    ("surface appendix", &["appendix_converse_check"]),
    ("surface relator", &["no_short_relator_check"]),
    ("bt classify", &["parse_matrix", "classify", "val"]),
    (
        "bt displace",
        &["min_displacement_on_ball", "ball", "neighbors", "canonicalize", "act", "distance"],
    ),
    ("chains refine4", &["group_order", "coset_action", "refine_index4"]),
    ("chains convert", &["chain_4_to_3", "coset_action"]),
    ("chains tree", &["build_coset_tree", "tree_action", "kernel_at_depth"]),
    (
        "raag plan",
        &[
            "parse_graph",
            "find_odd_closed_path",
            "is_bipartite",
            "induced_odd_cycle",
            "chromatic_number",
            "max_clique",
            "tree_count_plan",
        ],
    ),
    ("raag embed", &["embedding_obstruction"]),
    ("bassserre certify", &["three_tree_certificate", "two_tree_certificate"]),
    (
        "bassserre word",
        &["britton_reduce", "hnn_translation_data", "theta", "phi", "amalgam_reduce", "free_quotient"],
    ),
];

/// Exit status and rendered output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
    pub report: Option<Report>,
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            return Outcome { code, output: e.render().to_string(), report: None };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let output = if cli.json { report.to_json_lines() } else { report.to_text() };
            let code = if report.passed() { EXIT_PASS } else { EXIT_FAIL };
            Outcome { code, output, report: Some(report) }
        }
        Err(e) => Outcome { code: EXIT_USAGE, output: format!("error: {e}\n"), report: None },
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn execute(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Surface(cmd) => surface_cmd(cmd, cli.seed),
        Command::Bt(cmd) => bt_cmd(cmd),
        Command::Chains(cmd) => chains_cmd(cmd),
        Command::Raag(cmd) => raag_cmd(cmd),
        Command::Bassserre(cmd) => bass_serre_cmd(cmd),
    }
}

fn params_from(args: &ParamArgs) -> Result<SurfaceParams> {
    let base = surface::standard_params(args.p)?;
    let field = base.field();
    let pick = |text: &Option<String>, default: &crate::algebra::RationalFunction| match text {
        Some(t) => parse_rational(field, t),
        None => Ok(default.clone()),
    };
    SurfaceParams::new(
        pick(&args.c, &base.c)?,
        pick(&args.d, &base.d)?,
        pick(&args.delta, &base.delta)?,
        pick(&args.h, &base.h)?,
    )
}

fn surface_cmd(cmd: &SurfaceCmd, seed: u64) -> Result<Report> {
    match cmd {
        SurfaceCmd::Verify(args) => {
            let params = params_from(args)?;
            let (a, b) = surface::build_ab(&params)?;
            let q = surface::shalen_double(&a, &b);
            let mut r = Report::new(format!("surface verify --p {}", args.p));
            for (name, m) in [("A", &q.a), ("B", &q.b), ("C", &q.c), ("D", &q.d)] {
                r.check(format!("matrix_{name}"), m.det().is_one(), m.to_string());
            }
            r.absorb("family", surface::verify_family(&params)?);
            r.absorb("discreteness", surface::discreteness_certificate(&a, &b));
            r.absorb("relation", surface::surface_relation_check(&q)?);
            Ok(r)
        }
        SurfaceCmd::Word { p, word, hyperbolize } => {
            let q = surface::standard_quadruple(*p)?;
            let w = amalgam::parse_word(word)?;
            let (l, alpha) = surface::word_trace_leading(&w, &q)?;
            let mut r = Report::new(format!("surface word --p {p} --word {word}"));
            r.counter("top_y_exponent", l as i64);
            r.check("leading_coefficient_nonzero", !alpha.is_zero(), alpha.to_string());
            if let Some(tr) = q.eval(&w)?.trace().as_constant() {
                r.check("y_free_trace", true, valuation_bt::classify_trace(&tr).to_string());
            }
            if *hyperbolize {
                match surface::hyperbolize(&w, &q) {
                    Ok((n, v)) => {
                        r.counter("substitution_exponent", n as i64);
                        r.counter("valuation", v);
                        r.check("hyperbolic_after_substitution", v < 0, format!("y -> x^{n}"));
                    }
                    Err(Error::NotHyperbolizable(bound)) => {
                        r.check("hyperbolic_after_substitution", false, format!("no n <= {bound}"));
                    }
                    Err(e) => return Err(e),
                }
            }
            Ok(r)
        }
        SurfaceCmd::Appendix { p, samples } => surface::appendix_converse_check(*p, *samples, seed),
        SurfaceCmd::Relator { p, maxlen, samples } => {
            let q = surface::standard_quadruple(*p)?;
            surface::no_short_relator_check_with(&q, *maxlen, *samples, seed)
        }
    }
}

fn bt_cmd(cmd: &BtCmd) -> Result<Report> {
    match cmd {
        BtCmd::Classify { p, matrix } => {
            let m = parse_matrix(PrimeField::new(*p)?, matrix)?;
            let class = valuation_bt::classify(&m)?;
            let mut r = Report::new(format!("bt classify --p {p}"));
            r.check("classification", true, class.to_string());
            if let Some(v) = valuation_bt::val(&m.trace()).0 {
                r.counter("trace_valuation", v);
            }
            Ok(r)
        }
        BtCmd::Displace { p, matrix, radius } => {
            let f = PrimeField::new(*p)?;
            let m = parse_matrix(f, matrix)?;
            let class = valuation_bt::classify(&m)?;
            let base = LatticeVertex::base(f);
            let min = valuation_bt::min_displacement_on_ball(&m, &base, *radius)?;
            let mut r = Report::new(format!("bt displace --p {p} --radius {radius}"));
            r.counter("min_displacement", min as i64);
            r.counter("ball_size", valuation_bt::ball(&base, *radius)?.len() as i64);
            let predicted = match class {
                valuation_bt::Classification::Elliptic => 0,
                valuation_bt::Classification::Hyperbolic { translation_length } => translation_length,
            };
            r.counter("predicted", predicted as i64);
            r.check(
                "never_below_translation_length",
                min >= predicted,
                format!("{class}; minimum {min} on the ball"),
            );
            Ok(r)
        }
    }
}

fn chain_report(r: &mut Report, prefix: &str, chain: &IndexChain) {
    let steps: Vec<String> = chain.indices().iter().map(|i| i.to_string()).collect();
    r.check(format!("{prefix}containments"), chain.verify(), format!("steps [{}]", steps.join(", ")));
    for (i, s) in chain.subgroups().iter().enumerate() {
        r.counter(format!("{prefix}order_{i:02}"), s.order() as i64);
    }
}

fn chains_cmd(cmd: &ChainsCmd) -> Result<Report> {
    match cmd {
        ChainsCmd::Refine4 { group, subgroup } => {
            let (g, h) = parse_group_pair(&read(group)?, &read(subgroup)?)?;
            let chain = refine_index4(&g, &h)?;
            let mut r = Report::new("chains refine4");
            r.counter("group_order", g.order() as i64);
            r.counter("subgroup_order", h.order() as i64);
            chain_report(&mut r, "", &chain);
            r.check("steps_at_most_3", chain.max_step() <= 3, "");
            let core = crate::coset_trees::core(&g, &h)?;
            r.check("ends_at_core", *chain.terminal() == core, format!("core order {}", core.order()));
            Ok(r)
        }
        ChainsCmd::Convert { chain, depth } => {
            let mut input = read_chain(chain)?;
            if let Some(d) = depth {
                if *d > input.len() {
                    return Err(Error::DepthExceedsChain { depth: *d, len: input.len() });
                }
                input = IndexChain::new(input.subgroups()[..=*d].to_vec())?;
            }
            let conv = chain_4_to_3(&input)?;
            let mut r = Report::new("chains convert");
            chain_report(&mut r, "input.", &input);
            chain_report(&mut r, "output.", &conv.chain);
            r.check("steps_at_most_3", conv.chain.max_step() <= 3, "");
            let inside = conv.waypoints.iter().zip(input.subgroups()).all(|(k, g)| k.is_subgroup_of(g));
            r.check("waypoints_inside_input", inside, "");
            r.check("terminal_inside_input_terminal", conv.chain.terminal().is_subgroup_of(input.terminal()), "");
            Ok(r)
        }
        ChainsCmd::Tree { chain, depth } => {
            let chain = read_chain(chain)?;
            let tree = build_coset_tree(&chain, *depth)?;
            let mut r = Report::new(format!("chains tree --depth {depth}"));
            for (l, ds) in tree.level_degrees().iter().enumerate() {
                let expected = if l == *depth {
                    usize::from(l > 0)
                } else {
                    chain.indices()[l] + usize::from(l > 0)
                };
                let shown: Vec<String> = ds.iter().map(|d| d.to_string()).collect();
                r.counter(format!("level_{l:02}_nodes"), tree.level_size(l) as i64);
                r.check(
                    format!("level_{l:02}_degree"),
                    ds.as_slice() == [expected],
                    format!("degrees {{{}}}", shown.join(", ")),
                );
            }
            let kernel = kernel_at_depth(&chain, *depth)?;
            r.counter("kernel_order", kernel.order() as i64);
            let core = crate::coset_trees::core(chain.group(), &chain.subgroups()[*depth])?;
            r.check("kernel_is_core", kernel == core, kernel.generators_text());
            Ok(r)
        }
    }
}

fn raag_cmd(cmd: &RaagCmd) -> Result<Report> {
    match cmd {
        RaagCmd::Plan { graph } => {
            let g = SimpleGraph::parse(&read(graph)?)?;
            let plan = raag::tree_count_plan(&g)?;
            let mut r = Report::new("raag plan");
            r.counter("vertices", g.vertex_count() as i64);
            r.counter("edges", g.edge_count() as i64);
            r.counter("lower", plan.lower as i64);
            r.counter("upper", plan.upper as i64);
            r.check(
                "coloring_proper",
                raag::is_proper_coloring(&g, &plan.coloring),
                format!("{:?}", plan.coloring),
            );
            if let Some(c) = &plan.odd_cycle {
                r.check("odd_cycle_induced", raag::is_induced_odd_cycle(&g, c), format!("{c:?}"));
            }
            r.check("bounds_ordered", plan.lower <= plan.upper, "");
            match plan.exact {
                Some(k) => {
                    r.counter("exact", k as i64);
                    r.check("exact", true, format!("exact {k}"));
                }
                None => r.skip("exact", format!("between {} and {}", plan.lower, plan.upper)),
            }
            Ok(r)
        }
        RaagCmd::Embed { sub, sup } => {
            let a = SimpleGraph::parse(&read(sub)?)?;
            let b = SimpleGraph::parse(&read(sup)?)?;
            let verdict = raag::embedding_obstruction(&a, &b);
            let mut r = Report::new("raag embed");
            r.check("verdict", true, verdict.to_string());
            Ok(r)
        }
    }
}

fn bass_serre_cmd(cmd: &BassSerreCmd) -> Result<Report> {
    match cmd {
        BassSerreCmd::Certify { group: GroupChoice::F2byz, maxlen } => bass_serre::three_tree_certificate(*maxlen),
        BassSerreCmd::Certify { group: GroupChoice::S2, maxlen } => bass_serre::two_tree_certificate(*maxlen),
        BassSerreCmd::Word { group: GroupChoice::F2byz, word } => {
            let w = hnn::parse_word(word)?;
            let nf = hnn::britton_reduce(&w);
            let mut r = Report::new(format!("bassserre word --group f2byz --word {word}"));
            r.check("normal_form", true, nf.to_string());
            let cov = bass_serre::ThreeTreeCoverage::of(&w);
            r.check("hnn_tree", true, format!("{:?}", hnn::hnn_translation_data(&w)));
            r.check("theta", true, hnn::theta(&w).to_string());
            r.check("phi", true, hnn::phi(&w).to_string());
            r.check("covered", nf.is_identity() || cov.covered(), "");
            Ok(r)
        }
        BassSerreCmd::Word { group: GroupChoice::S2, word } => {
            let w = amalgam::parse_word(word)?;
            let nf = amalgam::amalgam_reduce(&w);
            let mut r = Report::new(format!("bassserre word --group s2 --word {word}"));
            r.check("normal_form", true, nf.to_string());
            r.counter("syllables", nf.syllable_count() as i64);
            r.counter("amalgam_translation_length", nf.cyclic_length() as i64);
            let fq = amalgam::free_quotient(&w).free_reduce();
            r.check("free_quotient", true, if fq.is_empty() { "1".to_string() } else { fq.to_string() });
            let cov = bass_serre::TwoTreeCoverage::of(&nf);
            r.check("covered", nf.is_identity() || cov.covered(), "");
            Ok(r)
        }
    }
}
