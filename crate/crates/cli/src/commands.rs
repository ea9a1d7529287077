use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use subset_currents::approx::{approximate_table, convergence_run, integerize};
use subset_currents::cylinders::io::{
    parse_table, parse_table_lenient, write_table, write_table_decimal,
};
use subset_currents::cylinders::{cylinder_table, distance, RationalCurrent};
use subset_currents::fiber::{
    component_census, component_to_dot, fiber_product, intersection, shnc_margin,
};
use subset_currents::rational::{format_decimal, parse_decimal, parse_rational, qi, Q};
use subset_currents::realize::{decompose, realize, verify_realization, WeightSystem};
use subset_currents::stallings::io::{core_to_dot, parse_subgroup, write_subgroup};
use subset_currents::{Error, Subgroup, Word};

use crate::{Cli, Command};

const MAX_DENOMINATOR: u64 = 1_000_000;
const DECIMAL_DIGITS: usize = 6;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{context}{source}")]
    Lib { context: String, source: Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 2,
            CliError::Lib { source, .. } if source.is_parse_error() => 2,
            CliError::Lib { .. } => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(source: Error) -> Self {
        CliError::Lib {
            context: String::new(),
            source,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn in_file(path: &Path, source: Error) -> CliError {
    CliError::Lib {
        context: format!("{}: ", path.display()),
        source,
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        make_dir(dir)?;
    }
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn make_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    })
}

fn load_subgroup(path: &Path) -> Result<Subgroup> {
    parse_subgroup(&read(path)?).map_err(|e| in_file(path, e))
}

fn check_radius(radius: usize, max: usize) -> Result<()> {
    if radius > max {
        return Err(Error::RadiusTooLarge { radius, max }.into());
    }
    Ok(())
}

fn parse_amount(s: &str) -> Option<Q> {
    parse_rational(s).or_else(|| parse_decimal(s, MAX_DENOMINATOR))
}

/// `COEF:FILE` or `FILE`; the prefix counts as a coefficient only if it parses as one.
fn parse_term(term: &str) -> (Q, PathBuf) {
    if let Some((coef, path)) = term.split_once(':') {
        if let Some(c) = parse_amount(coef) {
            return (c, PathBuf::from(path));
        }
    }
    (qi(1), PathBuf::from(term))
}

pub fn run(cli: &Cli) -> Result<String> {
    let mut out = String::new();
    match &cli.command {
        Command::Rank { subgroup } => {
            let h = load_subgroup(subgroup)?;
            writeln!(out, "reduced_rank = {}", h.reduced_rank()).unwrap();
        }
        Command::Index { subgroup } => {
            let h = load_subgroup(subgroup)?;
            writeln!(out, "index = {}", h.finite_index()).unwrap();
        }
        Command::Member { subgroup, word } => {
            let h = load_subgroup(subgroup)?;
            let w = Word::parse(h.basis(), word)?;
            writeln!(out, "{}", h.contains(&w)).unwrap();
        }
        Command::Intersect {
            left,
            right,
            dot_dir,
        } => intersect(&mut out, left, right, dot_dir.as_deref())?,
        Command::Cylinders {
            terms,
            radius,
            decimal,
            out: dest,
        } => {
            check_radius(*radius, cli.max_radius)?;
            let mut current: Option<RationalCurrent> = None;
            for term in terms {
                let (coef, path) = parse_term(term);
                let h = load_subgroup(&path)?;
                let c = current.get_or_insert_with(|| RationalCurrent::zero(h.basis()));
                c.push(coef, h).map_err(|e| in_file(&path, e))?;
            }
            let table = cylinder_table(&current.expect("at least one term"), *radius)?;
            let text = if *decimal {
                write_table_decimal(&table, DECIMAL_DIGITS)
            } else {
                write_table(&table)
            };
            match dest {
                Some(path) => {
                    write(path, &text)?;
                    writeln!(out, "wrote {} entries to {}", table.len(), path.display()).unwrap();
                }
                None => out.push_str(&text),
            }
        }
        Command::Realize { table, out_dir } => {
            let dir = out_dir.clone().unwrap_or_else(|| cli.output_dir.clone());
            realize_command(&mut out, table, &dir)?;
        }
        Command::Approx {
            table,
            epsilon,
            out: dest,
        } => {
            let tolerance = parse_amount(epsilon).ok_or_else(|| {
                Error::InvalidArgument(format!("cannot read tolerance '{epsilon}'"))
            })?;
            let input = parse_table_lenient(&read(table)?, MAX_DENOMINATOR)
                .map_err(|e| in_file(table, e))?;
            check_radius(input.radius(), cli.max_radius)?;
            let fixed = approximate_table(&input, &tolerance)?;
            let (theta, m) = integerize(&fixed)?;
            let path = dest
                .clone()
                .unwrap_or_else(|| cli.output_dir.join("weights.txt"));
            write(&path, &write_table(&theta.to_table()))?;
            writeln!(out, "M = {m}").unwrap();
            writeln!(out, "max_deviation = {}", distance(&fixed, &input)?).unwrap();
            writeln!(out, "total_weight = {}", theta.total()).unwrap();
            writeln!(out, "wrote {}", path.display()).unwrap();
        }
        Command::Converge {
            radius,
            ns,
            decimal,
            csv,
        } => {
            check_radius(*radius, cli.max_radius)?;
            let run = convergence_run(*radius, ns)?;
            let show = |d: &Q| {
                if *decimal {
                    format_decimal(d, DECIMAL_DIGITS)
                } else {
                    d.to_string()
                }
            };
            let mut table = String::from("n,distance\n");
            writeln!(out, "radius = {radius}").unwrap();
            for (n, d) in &run {
                writeln!(out, "n = {n}  distance = {}", show(d)).unwrap();
                writeln!(table, "{n},{d}").unwrap();
            }
            let path = csv
                .clone()
                .unwrap_or_else(|| cli.output_dir.join("converge.csv"));
            write(&path, &table)?;
            writeln!(out, "wrote {}", path.display()).unwrap();
        }
        Command::Export {
            subgroup,
            out: dest,
            hull,
        } => {
            let h = load_subgroup(subgroup)?;
            let text = core_to_dot(if *hull { h.hull() } else { h.core() });
            match dest {
                Some(path) => {
                    write(path, &text)?;
                    writeln!(out, "wrote {}", path.display()).unwrap();
                }
                None => out.push_str(&text),
            }
        }
    }
    Ok(out)
}

fn intersect(out: &mut String, left: &Path, right: &Path, dot_dir: Option<&Path>) -> Result<()> {
    let h = load_subgroup(left)?;
    let k = load_subgroup(right)?;
    let margin = shnc_margin(&h, &k)?;
    let product = fiber_product(h.hull(), k.hull())?;
    let census = component_census(&product);
    let meet = intersection(&h, &k)?;
    writeln!(out, "N = {}", margin.product).unwrap();
    writeln!(out, "bound = {}", margin.bound).unwrap();
    writeln!(
        out,
        "shnc = {}",
        if margin.holds() { "holds" } else { "violated" }
    )
    .unwrap();
    writeln!(
        out,
        "components = {} (trees {}, cycles {}, positive {})",
        census.total, census.trees, census.cycles, census.positive
    )
    .unwrap();
    writeln!(out, "intersection_reduced_rank = {}", meet.reduced_rank()).unwrap();
    if let Some(dir) = dot_dir {
        make_dir(dir)?;
        for i in 0..product.components.len() {
            write(
                &dir.join(format!("component_{i}.dot")),
                &component_to_dot(&product, i),
            )?;
        }
        writeln!(
            out,
            "wrote {} graphs to {}",
            product.components.len(),
            dir.display()
        )
        .unwrap();
    }
    Ok(())
}

fn realize_command(out: &mut String, table: &Path, dir: &Path) -> Result<()> {
    let parsed = parse_table(&read(table)?).map_err(|e| in_file(table, e))?;
    let theta = WeightSystem::from_table(&parsed)?;
    let quotient = realize(&theta)?;
    let current = decompose(&quotient)?;
    let verified = verify_realization(&theta, &current)?;
    make_dir(dir)?;
    let mut report = String::new();
    writeln!(report, "radius = {}", theta.radius()).unwrap();
    writeln!(report, "vertices = {}", quotient.vertices.len()).unwrap();
    writeln!(report, "edges = {}", quotient.edges.len()).unwrap();
    writeln!(report, "components = {}", current.terms().len()).unwrap();
    writeln!(report, "verified = {verified}").unwrap();
    for (i, (_, h)) in current.terms().iter().enumerate() {
        let name = format!("component_{i}.txt");
        write(&dir.join(&name), &write_subgroup(h))?;
        let gens: Vec<String> = h.generators().iter().map(|w| w.to_string()).collect();
        writeln!(
            report,
            "{name}: reduced_rank = {}, hull_vertices = {}, generators = {}",
            h.reduced_rank(),
            h.hull().num_vertices(),
            gens.join(" ")
        )
        .unwrap();
    }
    write(&dir.join("report.txt"), &report)?;
    write(&dir.join("quotient.dot"), &quotient.to_dot())?;
    out.push_str(&report);
    if !verified {
        return Err(
            Error::InvalidQuotient("decomposition does not reproduce the table".into()).into(),
        );
    }
    Ok(())
}
