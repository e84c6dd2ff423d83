//! The `homcas` command-line tool.
//!
//! Exit codes: 0 when every checked axiom holds, 1 when a verification
//! fails, 2 on unreadable or invalid input. Human-readable reports go to
//! stderr; stdout carries one JSON record per axiom followed by a summary
//! record, or the emitted structure file when no `-o` is given.

pub mod format;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::json;

use crate::coherence::{enumerate_trees, verify_path_independence};
use crate::error::{Error, Result};
use crate::homalgebra::{
    solve_antipode, twist_algebra, twist_bialgebra, twist_hopf, AntipodeSolution, HomHopfAlgebra,
};
use crate::homgroup::{automorphism_from_exponent, cyclic_group, hom_group};
use crate::homlie::{twist_lie, HomLieAlgebra};
use crate::hommodules::{
    check_fundamental, check_fundamental_unit, coinvariants, functor_f, HomHopfModule,
};
use crate::homspace::HomObject;
use crate::kernel::parse_rational;
use crate::report::{AxiomResult, Report};
use crate::tensoralg::{
    check_hopf_ideal, enveloping_generators, ideal_generated, GeneratorSign, QuotientTensorAlgebra,
    TruncatedTensorHomAlgebra,
};
use crate::{QMatrix, Q};

pub use format::{parse, Kind, Structure, StructureFile, Triple};

#[derive(Debug, Parser)]
#[command(
    name = "homcas",
    version,
    about = "Structure constants and axiom checks for monoidal Hom-structures"
)]
pub struct Cli {
    /// List every axiom in the human report, not only failures.
    #[arg(long, global = true)]
    pub verbose: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the axiom checker for the file's kind.
    Check { file: PathBuf },
    /// Emit the Hom-bialgebra Q[C_n] twisted by g -> g^k.
    GroupAlgebra {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 1)]
        aut_exp: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Twist a classical structure by an automorphism given as a matrix file.
    Twist {
        file: PathBuf,
        #[arg(long)]
        auto: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve for the antipode of a Hom-bialgebra and emit the Hom-Hopf algebra.
    Antipode {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enveloping algebra of a Hom-Lie algebra, truncated at a degree.
    Enveloping {
        file: PathBuf,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Sign::Commutator)]
        sign: Sign,
    },
    /// Check the truncated tensor Hom-algebra on `(k^d, mu)`.
    TensorAlgebra {
        #[arg(long)]
        mu: PathBuf,
        #[arg(long)]
        max_degree: usize,
    },
    /// Enumerate bracketings and optionally verify path independence.
    Coherence {
        #[arg(long)]
        leaves: usize,
        #[arg(long)]
        verify_paths: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check a Hopf module over a Hom-Hopf algebra and the fundamental theorem.
    /// With `--free` the second file is a matrix `nu` and the module is `N ⊗ H`.
    Hopfmod {
        hopf: PathBuf,
        module: PathBuf,
        #[arg(long)]
        free: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Sign {
    /// x⊗y − y⊗x − [x,y]
    Commutator,
    /// [x,y] − x⊗y − y⊗x
    Symmetric,
}

pub fn main() -> i32 {
    let cli = Cli::parse();
    run(&cli)
}

pub fn run(cli: &Cli) -> i32 {
    let mut ctx = Context {
        verbose: cli.verbose,
        start: Instant::now(),
    };
    match ctx.dispatch(&cli.command) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

struct Context {
    verbose: bool,
    start: Instant,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn read_structure(path: &Path) -> Result<Structure> {
    let text = read(path)?;
    let at = |e: Error| Error::InvalidInput(format!("{}: {}", path.display(), format::detail(e)));
    parse(&text).map_err(at)?.decode().map_err(at)
}

/// A square matrix as a JSON array of rows of rational strings.
pub fn read_matrix(path: &Path) -> Result<QMatrix> {
    let text = read(path)?;
    let rows: Vec<Vec<String>> = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidInput(format!("{}: matrix file: {e}", path.display())))?;
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|x| parse_rational(x)).collect())
        .collect::<Result<Vec<Vec<Q>>>>()
        .map_err(|e| Error::InvalidInput(format!("{}: {}", path.display(), format::detail(e))))?;
    let n = parsed.len();
    if parsed.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidInput(format!(
            "{}: matrix must be square",
            path.display()
        )));
    }
    QMatrix::from_rows(parsed)
}

pub fn matrix_file_text(m: &QMatrix) -> String {
    let rows: Vec<Vec<String>> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(crate::kernel::format_rational).collect())
        .collect();
    let mut s = serde_json::to_string(&rows).expect("strings serialize");
    s.push('\n');
    s
}

fn wrong_kind(path: &Path, expected: &str, got: Kind) -> Error {
    Error::InvalidInput(format!(
        "{}: expected {expected}, got kind {got:?}",
        path.display()
    ))
}

impl Context {
    fn dispatch(&mut self, cmd: &Command) -> Result<bool> {
        match cmd {
            Command::Check { file } => {
                let s = read_structure(file)?;
                Ok(self.report(&s.check(), true))
            }
            Command::GroupAlgebra {
                order,
                aut_exp,
                output,
            } => {
                let g = cyclic_group(*order)?;
                let phi = automorphism_from_exponent(&g, *aut_exp)?;
                let h = hom_group(&g, &phi).linearize::<Q>();
                let s = Structure::HomBialgebra(h.bialgebra().clone());
                let name = format!("Q[C{order}] twisted by g -> g^{aut_exp}");
                self.emit(&s, Some(&name), output.as_deref())
            }
            Command::Twist { file, auto, output } => {
                let alpha = read_matrix(auto)?;
                let twisted = match read_structure(file)? {
                    Structure::ClassicalAlgebra(a) => {
                        Structure::HomAlgebra(twist_algebra(&a, &alpha)?)
                    }
                    Structure::ClassicalBialgebra(b) => {
                        Structure::HomBialgebra(twist_bialgebra(&b, &alpha)?)
                    }
                    Structure::ClassicalHopf(b, s) => {
                        Structure::HomHopf(twist_hopf(&b, &s, &alpha)?)
                    }
                    Structure::ClassicalLie(g) => Structure::HomLie(twist_lie(&g, &alpha)?),
                    other => return Err(wrong_kind(file, "a classical structure", other.kind())),
                };
                self.emit(&twisted, None, output.as_deref())
            }
            Command::Antipode { file, output } => {
                let b = match read_structure(file)? {
                    Structure::HomBialgebra(b) => b,
                    Structure::HomHopf(h) => h.bialgebra().clone(),
                    other => return Err(wrong_kind(file, "hom_bialgebra", other.kind())),
                };
                match solve_antipode(&b) {
                    AntipodeSolution::Unique(s) => {
                        let h = HomHopfAlgebra::new(b, s)?;
                        self.emit(&Structure::HomHopf(h), None, output.as_deref())
                    }
                    AntipodeSolution::NoSolution {
                        left_solvable,
                        right_solvable,
                    } => {
                        eprintln!(
                            "no antipode: the system is inconsistent (left alone solvable: {left_solvable}, right alone solvable: {right_solvable})"
                        );
                        Ok(false)
                    }
                    AntipodeSolution::Underdetermined { kernel_dim, .. } => {
                        eprintln!(
                            "antipode is not unique: solution space has dimension {kernel_dim}"
                        );
                        Ok(false)
                    }
                }
            }
            Command::Enveloping {
                file,
                max_degree,
                sign,
            } => {
                let lie = match read_structure(file)? {
                    Structure::HomLie(l) => l,
                    Structure::ClassicalLie(g) => {
                        HomLieAlgebra::new(HomObject::trivial(g.dim()), g.bracket().clone())?
                    }
                    other => return Err(wrong_kind(file, "hom_lie", other.kind())),
                };
                self.enveloping(&lie, *max_degree, *sign)
            }
            Command::TensorAlgebra { mu, max_degree } => {
                let obj = HomObject::new(read_matrix(mu)?)?;
                let t = TruncatedTensorHomAlgebra::build(obj, *max_degree)?;
                let dims = t.component_dims();
                eprintln!("component dimensions: {dims:?}");
                self.record(json!({ "component_dims": dims }));
                Ok(self.report(&t.check(), true))
            }
            Command::Coherence {
                leaves,
                verify_paths,
                seed,
            } => {
                let trees = enumerate_trees(*leaves)?;
                eprintln!("{} trees on {leaves} leaves", trees.len());
                if self.verbose {
                    for t in &trees {
                        eprintln!("  {t}");
                    }
                }
                self.record(json!({ "leaves": leaves, "trees": trees.len() }));
                let report = if *verify_paths {
                    verify_path_independence(*leaves, &mut StdRng::seed_from_u64(*seed))?
                } else {
                    let mut r = Report::new(format!("coherence on {leaves} leaves"));
                    r.push(AxiomResult::pass("tree_count", trees.len()));
                    r
                };
                Ok(self.report(&report, true))
            }
            Command::Hopfmod {
                hopf,
                module,
                free,
                output,
            } => {
                let h = match read_structure(hopf)? {
                    Structure::HomHopf(h) => h,
                    other => return Err(wrong_kind(hopf, "hom_hopf", other.kind())),
                };
                if *free {
                    let n = HomObject::new(read_matrix(module)?)?;
                    let m = functor_f(&n, &h);
                    let mut report = self.hopf_module_report(&m);
                    report.absorb("unit", check_fundamental_unit(&n, &h));
                    if let Some(path) = output {
                        self.write_structure(&Structure::HopfModule(m), None, path)?;
                    }
                    return Ok(self.report(&report, true));
                }
                let m = match read_structure(module)? {
                    Structure::HopfModule(m) => m,
                    other => return Err(wrong_kind(module, "hopf_module", other.kind())),
                };
                if m.hopf() != &h {
                    return Err(Error::InvalidInput(format!(
                        "{}: module is over a different Hom-Hopf algebra than {}",
                        module.display(),
                        hopf.display()
                    )));
                }
                let report = self.hopf_module_report(&m);
                Ok(self.report(&report, true))
            }
        }
    }

    fn hopf_module_report(&mut self, m: &HomHopfModule<Q>) -> Report {
        let mut report = Report::new(format!("Hopf module of dimension {}", m.dim()));
        let axioms = m.check();
        let ok = axioms.passed();
        report.absorb("module", axioms);
        if ok {
            let c = coinvariants(m);
            eprintln!("coinvariants: dimension {}", c.space.dim());
            self.record(json!({ "dim": m.dim(), "coinvariants_dim": c.space.dim() }));
            report.absorb("fundamental", check_fundamental(m));
        }
        report
    }

    fn enveloping(
        &mut self,
        lie: &HomLieAlgebra<Q>,
        max_degree: usize,
        sign: Sign,
    ) -> Result<bool> {
        let lie_report = lie.check();
        if !lie_report.passed() {
            return Ok(self.report(&lie_report, true));
        }
        let t = TruncatedTensorHomAlgebra::build(lie.object().clone(), max_degree)?;
        let sign = match sign {
            Sign::Commutator => GeneratorSign::Commutator,
            Sign::Symmetric => GeneratorSign::Symmetric,
        };
        let gens = enveloping_generators(&t, lie, sign)?;
        let ideal = ideal_generated(&t, &gens)?;
        let mut report = Report::new(format!(
            "enveloping algebra truncated at degree {max_degree}"
        ));
        report.absorb("lie", lie_report);
        report.absorb("hopf_ideal", check_hopf_ideal(&t, &ideal));
        let passed = report.passed();
        if passed {
            let q = QuotientTensorAlgebra::new(t, ideal.clone())?;
            let dims = q.degree_dims();
            eprintln!(
                "{} generators, ideal of dimension {}, quotient degree dimensions {dims:?}",
                gens.len(),
                ideal.dim()
            );
            self.record(
                json!({ "generators": gens.len(), "ideal_dim": ideal.dim(), "degree_dims": dims }),
            );
        }
        Ok(self.report(&report, true) && passed)
    }

    fn record(&self, value: serde_json::Value) {
        let mut out = std::io::stdout().lock();
        let _ = writeln!(out, "{value}");
    }

    /// Prints the report and returns whether it passed.
    fn report(&self, r: &Report, json: bool) -> bool {
        if self.verbose {
            eprint!("{r}");
        } else {
            eprintln!(
                "{}: {}",
                r.subject,
                if r.passed() { "PASS" } else { "FAIL" }
            );
            for f in r.results.iter().filter(|x| !x.passed) {
                let w = f.witness.as_ref().expect("failed results carry a witness");
                eprintln!("  [FAIL] {} at {:?}: {}", f.axiom, w.indices, w.detail);
            }
        }
        if json {
            for res in &r.results {
                self.record(json!({
                    "subject": r.subject,
                    "axiom": res.axiom,
                    "passed": res.passed,
                    "checked": res.checked,
                    "witness": res.witness,
                }));
            }
            self.record(json!({
                "subject": r.subject,
                "verdict": if r.passed() { "pass" } else { "fail" },
                "axioms": r.results.len(),
                "elapsed_ms": self.start.elapsed().as_millis() as u64,
            }));
        }
        r.passed()
    }

    fn write_structure(&self, s: &Structure, name: Option<&str>, path: &Path) -> Result<()> {
        let text = s.encode(name).to_canonical_string();
        fs::write(path, text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
    }

    /// Checks the emitted structure, then writes it to `path` or stdout. The
    /// JSON report records only go to stdout when a path is given.
    fn emit(&self, s: &Structure, name: Option<&str>, path: Option<&Path>) -> Result<bool> {
        let report = s.check();
        match path {
            Some(p) => {
                self.write_structure(s, name, p)?;
                Ok(self.report(&report, true))
            }
            None => {
                let mut out = std::io::stdout().lock();
                let _ = out.write_all(s.encode(name).to_canonical_string().as_bytes());
                Ok(self.report(&report, false))
            }
        }
    }
}
