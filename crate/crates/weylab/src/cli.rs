//! Argument parsing and command dispatch. Exit codes: 0 success, 1 a
//! verification failed, 2 usage or input error.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Parser, Subcommand};
use weylab_core::characters::{
    decompose, exterior_power, freudenthal_multiplicity, symmetric_power, tensor, weyl_character, weyl_dimension,
};
use weylab_core::embed::{ambient_group, form_sign, restrict, FormType};
use weylab_core::levels::{ford_constraints, level_decomposition, levi_structure, Extension, LeviSubset};
use weylab_core::verify::{
    clifford_check, clifford_rows, modular_exclusions, power_rows, rank_one_bound, triple_embedding,
    verify_power_row, RankOneLemma, Status,
};
use weylab_core::{RootSystem, SimpleType, Weight, DEFAULT_CAP};

use crate::format::{
    CharacterOut, DecompositionOut, EmbeddingOut, ErrorOut, FormOut, Format, LevelRow, LevelsOut, OrbitOut,
    PatternOut, Render, ReportOut, RestrictionOut, ScalarOut,
};
use crate::{Error, Fixtures};

#[derive(Debug, Parser)]
#[command(name = "weylab", version, about = "Exact weights, characters and restrictions for simple groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Entry cap for enumerated characters.
    #[arg(long, global = true, env = "WEYLAB_CAP")]
    pub cap: Option<usize>,

    #[arg(long, global = true, value_enum, default_value = "tsv")]
    pub format: Format,

    /// Fixture file replacing the bundled dataset.
    #[arg(long, global = true)]
    pub fixtures: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension of V(λ); positive p reads the fixtures.
    Dim {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        weight: String,
        #[arg(long, default_value_t = 0)]
        p: u64,
    },
    /// Multiplicity of μ in V(λ).
    Mult {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        weight: String,
        #[arg(long)]
        mu: String,
    },
    /// Weyl orbit of a weight.
    Orbit {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        weight: String,
    },
    /// Full character of V(λ).
    Weights {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        weight: String,
    },
    /// Parabolic levels of V(δ).
    Levels {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        weight: String,
        /// `borel` or a comma-separated list of Levi nodes.
        #[arg(long, default_value = "borel")]
        subset: String,
        /// List the highest-weight patterns allowed for `.2`, `.3` or `.S3`.
        #[arg(long)]
        extension: Option<String>,
    },
    /// Invariant form and ambient classical group of V(δ).
    Form {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        weight: String,
        #[arg(long, default_value_t = 0)]
        p: u64,
    },
    /// Restriction of V_G(λ) to X, where G is the classical group on V_X(δ).
    Restrict {
        #[arg(long = "type")]
        ty: String,
        /// δ, the highest weight of the natural module.
        #[arg(long)]
        weight: String,
        /// λ, a weight of the ambient group.
        #[arg(long)]
        lambda: String,
    },
    /// Composition factors of a tensor product of irreducibles.
    Decompose {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, required = true)]
        weight: Vec<String>,
    },
    /// Composition factors of Λ^k or S^k of V(λ).
    Power {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        weight: String,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        symmetric: bool,
    },
    /// Run every table verification.
    VerifyTables,
    /// List the fixture dataset, or look up one row.
    Fixtures {
        #[arg(long = "type")]
        ty: Option<String>,
        #[arg(long)]
        weight: Option<String>,
        #[arg(long)]
        p: Option<u64>,
    },
}

fn system(ty: &str) -> Result<RootSystem, Error> {
    Ok(RootSystem::of(&ty.parse()?))
}

fn weight(rs: &RootSystem, w: &str) -> Result<Weight, Error> {
    Ok(rs.parse_weight(w)?)
}

fn dominant(rs: &RootSystem, w: &str) -> Result<Weight, Error> {
    let w = weight(rs, w)?;
    if !w.is_dominant() {
        return Err(weylab_core::Error::NotDominant(w.to_string()).into());
    }
    Ok(w)
}

fn simple(ty: &str) -> Result<SimpleType, Error> {
    Ok(ty.parse()?)
}

fn report(row: &str, status: Status, checks: &[(String, bool)], note: Option<String>) -> ReportOut {
    ReportOut {
        row: row.to_string(),
        status: status.to_string(),
        checks: checks.iter().cloned().collect(),
        note,
    }
}

fn fail_on_error(row: String, e: weylab_core::Error) -> ReportOut {
    ReportOut {
        row,
        status: Status::Fail.to_string(),
        checks: BTreeMap::new(),
        note: Some(e.to_string()),
    }
}

/// Runs `jobs` on a small worker pool and returns results in input order.
fn parallel<T: Send, R: Send>(jobs: Vec<T>, f: impl Fn(T) -> R + Sync) -> Vec<R> {
    let n = jobs.len();
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(n.max(1));
    let slots: Vec<Mutex<Option<T>>> = jobs.into_iter().map(|j| Mutex::new(Some(j))).collect();
    let out: Vec<Mutex<Option<R>>> = (0..n).map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= n {
                    break;
                }
                let job = slots[i].lock().expect("unpoisoned").take().expect("taken once");
                *out[i].lock().expect("unpoisoned") = Some(f(job));
            });
        }
    });
    out.into_iter()
        .map(|m| m.into_inner().expect("unpoisoned").expect("filled"))
        .collect()
}

/// Every table check in row order: fixture consistency, Clifford rows,
/// modular exclusions, rank-one bounds and the power tables.
pub fn verify_tables(fixtures: &Fixtures, cap: usize) -> Vec<ReportOut> {
    let mut out = vec![report(
        "fixtures: p=0 rows match Weyl dimension",
        Status::Pass,
        &[("self-consistent".into(), true)],
        Some(format!("{} rows", fixtures.rows.len())),
    )];

    for t in clifford_rows() {
        out.push(match clifford_check(&t, &fixtures.dims, cap) {
            Ok(r) => {
                let note = match (&r.note, r.status) {
                    (Some(n), _) => Some(n.clone()),
                    (None, Status::Pass) => Some(format!(
                        "kappa={} dims={}={}",
                        r.kappa,
                        r.factor_dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("+"),
                        r.dim
                    )),
                    _ => r.first_failure().map(|f| format!("first failure: {}", f)),
                };
                report(&r.name, r.status, &r.checks, note)
            }
            Err(e) => fail_on_error(t.name.clone(), e),
        });
    }

    match modular_exclusions(&fixtures.dims) {
        Ok(ex) => {
            for e in ex {
                let ok = e.excluded == (e.p != 0);
                let rel = if e.excluded { "!=" } else { "=" };
                out.push(report(
                    &format!("exclusion: {} p={}", e.label, e.p),
                    if ok { Status::Pass } else { Status::Fail },
                    &[("arithmetic".into(), ok)],
                    Some(format!("{} {} {}", e.lhs, rel, e.rhs)),
                ));
            }
        }
        Err(e) => out.push(fail_on_error("exclusions".into(), e)),
    }

    let samples: [(RankOneLemma, &str); 6] = [
        (RankOneLemma::A3TwoCopies, "0,1,0"),
        (RankOneLemma::A3TwoCopies, "5,0,0"),
        (RankOneLemma::A5ThreeCopies, "1,0,0,0,0"),
        (RankOneLemma::A5ThreeCopies, "0,1,0,0,0"),
        (RankOneLemma::A3Tensor, "1,1,0"),
        (RankOneLemma::A8DoubleTensor, "0,1,0,0,0,0,0,0"),
    ];
    for (lemma, w) in samples {
        let name = format!("rank-one {:?} at {}", lemma, w);
        let lambda: Weight = w.parse().expect("static weight");
        out.push(match rank_one_bound(lemma, &lambda, cap) {
            Ok(b) => report(
                &name,
                if b.holds() { Status::Pass } else { Status::Fail },
                &[("bound".into(), b.holds())],
                Some(format!("computed {} >= claimed {}", b.computed, b.claimed.unwrap_or(1))),
            ),
            Err(e) => fail_on_error(name, e),
        });
    }

    let rows = power_rows();
    let reports = parallel(rows, |row| {
        let name = row.name();
        match verify_power_row(&row, cap) {
            Ok(r) => report(&r.name, r.status, &r.checks, r.note),
            Err(e) => fail_on_error(name, e),
        }
    });
    out.extend(reports);
    out
}

fn levels_out(rs: &RootSystem, delta: &Weight, subset_arg: &str, ext: Option<&str>, cap: usize) -> Result<LevelsOut, Error> {
    let subset = if subset_arg == "borel" {
        LeviSubset::borel()
    } else {
        let nodes: Vec<usize> = subset_arg
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| Error::Usage(format!("bad subset '{}'", subset_arg)))?;
        LeviSubset::new(rs.rank(), &nodes)?
    };
    let ch = weyl_character(rs, delta, cap)?;
    let pl = level_decomposition(rs, delta, &subset, &ch)?;
    let form = form_sign(rs, delta)?;
    let ls = if form == FormType::None {
        None
    } else {
        levi_structure(&pl, form).ok()
    };
    let levels = pl
        .levels
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let tags: Vec<String> = ls
                .iter()
                .flat_map(|s| s.factors.iter())
                .filter(|f| f.level == i)
                .map(|f| f.kind.to_string())
                .collect();
            LevelRow {
                level: i,
                dim: l.dim(),
                distinct: l.weights.len(),
                shapes: l
                    .shapes
                    .iter()
                    .map(|s| s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                    .collect(),
                factor: if tags.is_empty() { "-".into() } else { tags.join("+") },
            }
        })
        .collect();
    let (extension, patterns) = match ext {
        Some(e) => {
            let e: Extension = e.parse()?;
            let ls = ls.ok_or_else(|| Error::Usage(String::from("constraints need a self-dual module")))?;
            let rep = ford_constraints(&ls, e);
            let patterns = rep
                .allowed_patterns
                .into_iter()
                .map(|p| PatternOut {
                    case: p.case,
                    labels: p.labels,
                })
                .collect();
            (Some(e.to_string()), patterns)
        }
        None => (None, Vec::new()),
    };
    Ok(LevelsOut {
        ty: rs.cartan_type().to_string(),
        delta: delta.to_string(),
        subset: subset_arg.to_string(),
        ell: pl.ell,
        levels,
        extension,
        patterns,
    })
}

/// Executes a parsed command. `Ok(true)` means every verification passed.
fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool, Error> {
    let cap = cli.cap.unwrap_or(DEFAULT_CAP);
    let fixtures = || -> Result<Fixtures, Error> {
        match &cli.fixtures {
            Some(p) => Fixtures::load(p),
            None => Ok(Fixtures::bundled()),
        }
    };
    let fmt = cli.format;
    let text = match &cli.command {
        Command::Dim { ty, weight: w, p } => {
            let rs = system(ty)?;
            let lambda = dominant(&rs, w)?;
            let (value, cite) = if *p == 0 {
                (weyl_dimension(&rs, &lambda)?, None)
            } else {
                let fx = fixtures()?;
                let (d, row) = fx.lookup(simple(ty)?, &lambda, *p)?;
                (d.dim, Some(row.cite.clone()))
            };
            ScalarOut {
                ty: ty.clone(),
                weight: lambda.to_string(),
                mu: None,
                p: *p,
                value,
                cite,
            }
            .render(fmt)
        }
        Command::Mult { ty, weight: w, mu } => {
            let rs = system(ty)?;
            let lambda = dominant(&rs, w)?;
            let mu = weight(&rs, mu)?;
            ScalarOut {
                ty: ty.clone(),
                weight: lambda.to_string(),
                mu: Some(mu.to_string()),
                p: 0,
                value: freudenthal_multiplicity(&rs, &lambda, &mu)?,
                cite: None,
            }
            .render(fmt)
        }
        Command::Orbit { ty, weight: w } => {
            let rs = system(ty)?;
            let w = weight(&rs, w)?;
            let orbit = rs.weyl_orbit(&w, cap)?;
            OrbitOut {
                ty: ty.clone(),
                weight: w.to_string(),
                size: orbit.len(),
                orbit: orbit.iter().map(|x| x.to_string()).collect(),
            }
            .render(fmt)
        }
        Command::Weights { ty, weight: w } => {
            let rs = system(ty)?;
            let lambda = dominant(&rs, w)?;
            CharacterOut::new(&lambda, &weyl_character(&rs, &lambda, cap)?).render(fmt)
        }
        Command::Levels {
            ty,
            weight: w,
            subset,
            extension,
        } => {
            let rs = system(ty)?;
            let delta = dominant(&rs, w)?;
            levels_out(&rs, &delta, subset, extension.as_deref(), cap)?.render(fmt)
        }
        Command::Form { ty, weight: w, p } => {
            let rs = system(ty)?;
            let delta = dominant(&rs, w)?;
            let x = simple(ty)?;
            let fx = if *p > 0 { Some(fixtures()?) } else { None };
            let dim = match &fx {
                Some(f) => f.lookup(x, &delta, *p).map(|(d, _)| d.dim).or_else(|e| match e {
                    Error::Core(weylab_core::Error::MissingFixture(_)) if *p != 2 => weyl_dimension(&rs, &delta).map_err(Error::from),
                    other => Err(other),
                })?,
                None => weyl_dimension(&rs, &delta)?,
            };
            let (form, ambient) = match fx.as_ref().and_then(|f| f.form(x, &delta, *p)) {
                Some(form) => (form, ambient_group(dim, form, 0)?),
                None => {
                    let form = form_sign(&rs, &delta)?;
                    (form, ambient_group(dim, form, *p)?)
                }
            };
            FormOut {
                ty: ty.clone(),
                weight: delta.to_string(),
                p: *p,
                dim,
                form: form.to_string(),
                ambient: ambient.to_string(),
            }
            .render(fmt)
        }
        Command::Restrict { ty, weight: w, lambda } => {
            let rs = system(ty)?;
            let delta = dominant(&rs, w)?;
            let spec = triple_embedding(&rs, &delta, None, cap)?;
            let g = RootSystem::new(spec.ambient);
            let lambda = dominant(&g, lambda)?;
            let res = restrict(spec.ambient, &weyl_character(&g, &lambda, cap)?, &spec)?;
            let d = decompose(&rs, &res)?;
            RestrictionOut {
                embedding: EmbeddingOut::new(&spec),
                lambda: lambda.to_string(),
                factors: DecompositionOut::new(&d).factors,
            }
            .render(fmt)
        }
        Command::Decompose { ty, weight: ws } => {
            let rs = system(ty)?;
            let mut acc: Option<weylab_core::characters::Character> = None;
            for w in ws {
                let ch = weyl_character(&rs, &dominant(&rs, w)?, cap)?;
                acc = Some(match acc {
                    None => ch,
                    Some(a) => tensor(&a, &ch, cap)?,
                });
            }
            let ch = acc.expect("at least one weight");
            DecompositionOut::new(&decompose(&rs, &ch)?).render(fmt)
        }
        Command::Power {
            ty,
            weight: w,
            k,
            symmetric,
        } => {
            let rs = system(ty)?;
            let ch = weyl_character(&rs, &dominant(&rs, w)?, cap)?;
            let p = if *symmetric {
                symmetric_power(&ch, *k, cap)?
            } else {
                exterior_power(&ch, *k, cap)?
            };
            DecompositionOut::new(&decompose(&rs, &p)?).render(fmt)
        }
        Command::VerifyTables => {
            let reports = verify_tables(&fixtures()?, cap);
            let ok = reports.iter().all(|r| r.status != "fail");
            out.write_all(reports.render(fmt).as_bytes())
                .map_err(|e| Error::Io(e.to_string()))?;
            return Ok(ok);
        }
        Command::Fixtures { ty, weight: w, p } => {
            let fx = fixtures()?;
            match (ty, w, p) {
                (None, None, None) => fx.rows.clone().render(fmt),
                (Some(ty), Some(w), Some(p)) => {
                    let x = simple(ty)?;
                    let (_, row) = fx.lookup(x, &RootSystem::new(x).parse_weight(w)?, *p)?;
                    vec![row.clone()].render(fmt)
                }
                _ => return Err(Error::Usage(String::from("lookup needs --type, --weight and --p together"))),
            }
        }
    };
    out.write_all(text.as_bytes()).map_err(|e| Error::Io(e.to_string()))?;
    Ok(true)
}

fn write_error(err: &mut dyn Write, kind: &str, message: &str) {
    let e = ErrorOut {
        error: kind.to_string(),
        message: message.to_string(),
    };
    let _ = writeln!(err, "{}", serde_json::to_string(&e).expect("plain data serializes"));
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e);
                    0
                }
                _ => {
                    write_error(err, "usage", e.to_string().lines().next().unwrap_or("invalid arguments"));
                    2
                }
            };
        }
    };
    match execute(&cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            write_error(err, e.kind(), &e.to_string());
            2
        }
    }
}
