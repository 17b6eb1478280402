//! The `msym` command line.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{
    action_ssym, action_ysym, coaction, coaction_monomial, coinvariant_basis, convert,
    coproduct_fund, product_fund, product_msym, Basis, Family, Key, LinearCombo, TensorCombo,
};
use crate::error::{Error, Result};
use crate::posets::{cached_bileveled_order, cached_tamari, cached_weak_order, fiber_interval};
use crate::series::{counts, series_quotient};
use crate::trees::{
    all_bileveled, all_planar, beta, composition_to_bileveled, gamma_left, gamma_right, max_min,
    max_perm, min_min, min_perm, phi, qsym_composition, tau, tau_fiber, Composition, Permutation,
};
use crate::verify::{run_suite, Suite};

#[derive(Parser, Debug)]
#[command(
    name = "msym",
    version,
    about = "Permutations, bi-leveled trees and planar binary trees: maps, orders, bases and Hopf structures"
)]
struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every object of a family in degree n, in canonical order
    Enumerate(FamilyDegree),
    /// Apply a structural map to one object
    Map {
        #[arg(long)]
        op: MapOp,
        #[arg(long, allow_hyphen_values = true)]
        input: String,
    },
    /// List the fiber of tau or beta over a tree, with its interval endpoints
    Fiber {
        #[arg(long)]
        map: FiberMap,
        #[arg(long)]
        input: String,
    },
    /// Multiply two fundamental basis elements (S, Y, or M)
    Product {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Coproduct of a fundamental basis element (S or Y)
    Coproduct {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        input: String,
    },
    /// Act on a bi-leveled tree: a permutation on the left (`--by S`) or a
    /// planar tree on the right (`--by Y`)
    Act {
        #[arg(long)]
        by: Family,
        /// The permutation (--by S) or the bi-leveled tree (--by Y)
        #[arg(long)]
        left: String,
        /// The bi-leveled tree (--by S) or the planar tree (--by Y)
        #[arg(long)]
        right: String,
    },
    /// Coaction of a bi-leveled tree
    Coact {
        #[arg(long)]
        input: String,
        #[arg(long, default_value = "F")]
        basis: Basis,
    },
    /// Rewrite a basis element in the other basis
    Convert {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        input: String,
        #[arg(long, default_value = "F")]
        from: Basis,
        #[arg(long, default_value = "M")]
        to: Basis,
    },
    /// Möbius function between two objects of the same degree
    Mobius {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        lower: String,
        #[arg(long)]
        upper: String,
    },
    /// Hasse diagram of the order on a family in degree n, as DOT
    Hasse(FamilyDegree),
    /// Bi-leveled trees indexing the coinvariants in degree n
    Coinvariants {
        #[arg(long)]
        n: usize,
    },
    /// Hilbert series of a family, optionally divided by another
    Hilbert {
        #[arg(long)]
        family: Family,
        #[arg(long, default_value_t = 6)]
        order: usize,
        /// Divide by the Hilbert series of this family
        #[arg(long)]
        quotient: Option<Family>,
    },
    /// Run a verification suite and print its summary line
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        /// Degree bound; each suite has its own default
        #[arg(long)]
        n_max: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct FamilyDegree {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MapOp {
    /// permutation → planar tree
    Tau,
    /// permutation → bi-leveled tree
    Beta,
    /// bi-leveled tree → planar tree
    Phi,
    /// planar tree → least permutation in its tau-fiber
    Min,
    /// planar tree → greatest permutation in its tau-fiber
    Max,
    /// bi-leveled tree → least permutation in its beta-fiber
    #[value(name = "mm")]
    MinMin,
    /// bi-leveled tree → the section Mm
    #[value(name = "Mm")]
    MaxMin,
    /// bi-leveled tree → greatest permutation in its beta-fiber
    #[value(name = "MM")]
    MaxMax,
    /// planar tree → left comb of the same size
    #[value(name = "gammaL")]
    GammaLeft,
    /// planar tree → right comb of the same size
    #[value(name = "gammaR")]
    GammaRight,
    /// bi-leveled tree → composition
    Qsym,
    /// composition → comb of combs
    Comb,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FiberMap {
    Tau,
    Beta,
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse::<Suite>().map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

/// Largest degree accepted for listing a family.
fn enumeration_limit(family: Family) -> usize {
    match family {
        Family::S => 9,
        Family::Y => 14,
        Family::M => 10,
        Family::Q => 20,
    }
}

/// Largest degree accepted where an order has to be built.
fn poset_limit(family: Family) -> usize {
    match family {
        Family::S => 7,
        Family::Y => 9,
        Family::M => 7,
        Family::Q => 0,
    }
}

fn check_degree(n: usize, limit: usize, what: &str) -> Result<()> {
    if n > limit {
        return Err(Error::Domain(format!(
            "{what} supports n ≤ {limit}, got {n}"
        )));
    }
    Ok(())
}

enum Outcome {
    Ok,
    VerificationFailed,
}

/// Parses `args` (including the program name) and runs the command, writing
/// to `out` and `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::VerificationFailed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn emit(out: &mut dyn Write, value: &Value) -> Result<()> {
    writeln!(out, "{value}").map_err(io_error)
}

fn line(out: &mut dyn Write, text: impl std::fmt::Display) -> Result<()> {
    writeln!(out, "{text}").map_err(io_error)
}

fn io_error(e: std::io::Error) -> Error {
    Error::Domain(format!("cannot write output: {e}"))
}

fn keys_of(family: Family, n: usize) -> Result<Vec<Key>> {
    Ok(match family {
        Family::S => Permutation::all(n).into_iter().map(Key::from).collect(),
        Family::Y => all_planar(n).into_iter().map(Key::from).collect(),
        Family::M => all_bileveled(n)?.into_iter().map(Key::from).collect(),
        Family::Q => Composition::all(n).into_iter().map(Key::from).collect(),
    })
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<Outcome> {
    let json = cli.json;
    match &cli.command {
        Command::Enumerate(FamilyDegree { family, n }) => {
            check_degree(*n, enumeration_limit(*family), "enumerate")?;
            let keys = keys_of(*family, *n)?;
            if json {
                let keys: Vec<String> = keys.iter().map(ToString::to_string).collect();
                emit(
                    out,
                    &json!({"family": family.to_string(), "n": n, "keys": keys}),
                )?;
            } else {
                for k in keys {
                    line(out, k)?;
                }
            }
        }
        Command::Map { op, input } => {
            let output = apply_map(*op, input)?;
            if json {
                emit(
                    out,
                    &json!({"op": op.to_possible_value().map(|v| v.get_name().to_string()), "input": input, "output": output}),
                )?;
            } else {
                line(out, output)?;
            }
        }
        Command::Fiber { map, input } => {
            let (fiber, lo, hi) = match map {
                FiberMap::Tau => {
                    let t = crate::trees::Tree::parse_canonical(input)?;
                    (tau_fiber(&t), min_perm(&t), max_perm(&t))
                }
                FiberMap::Beta => {
                    let b: crate::trees::BiLeveledTree = input.parse()?;
                    check_degree(b.len(), poset_limit(Family::S), "fiber")?;
                    let (lo, hi) = fiber_interval(b.len(), &b)?;
                    let fiber = Permutation::all(b.len())
                        .into_iter()
                        .filter(|w| beta(w) == b)
                        .collect();
                    (fiber, lo, hi)
                }
            };
            if json {
                let fiber: Vec<String> = fiber.iter().map(ToString::to_string).collect();
                emit(
                    out,
                    &json!({"input": input, "fiber": fiber, "interval": [lo.to_string(), hi.to_string()]}),
                )?;
            } else {
                for w in &fiber {
                    line(out, w)?;
                }
                line(out, format!("interval [{lo}, {hi}]"))?;
            }
        }
        Command::Product {
            family,
            left,
            right,
        } => {
            let x = Key::parse(*family, left)?;
            let y = Key::parse(*family, right)?;
            let combo = match (&x, &y) {
                (Key::M(b), Key::M(s)) => product_msym(b, s),
                _ => product_fund(&x, &y)?,
            };
            print_combo(out, json, &combo)?;
        }
        Command::Coproduct { family, input } => {
            let tensor = coproduct_fund(&Key::parse(*family, input)?)?;
            print_tensor(out, json, &tensor)?;
        }
        Command::Act { by, left, right } => {
            let combo = match by {
                Family::S => {
                    let w = Key::parse(Family::S, left)?;
                    let s = Key::parse(Family::M, right)?;
                    action_ssym(w.as_s()?, s.as_m()?)
                }
                Family::Y => {
                    let b = Key::parse(Family::M, left)?;
                    let s = Key::parse(Family::Y, right)?;
                    action_ysym(b.as_m()?, s.as_y()?)?
                }
                other => {
                    return Err(Error::Family {
                        expected: "S or Y".into(),
                        found: other.to_string(),
                    })
                }
            };
            print_combo(out, json, &combo)?;
        }
        Command::Coact { input, basis } => {
            let b = Key::parse(Family::M, input)?;
            let tensor = match basis {
                Basis::F => coaction(b.as_m()?),
                Basis::M => coaction_monomial(b.as_m()?),
            };
            print_tensor(out, json, &tensor)?;
        }
        Command::Convert {
            family,
            input,
            from,
            to,
        } => {
            let key = Key::parse(*family, input)?;
            check_degree(key.degree(), poset_limit(*family), "convert")?;
            let combo = convert(&LinearCombo::basis_element(*from, key), *to)?;
            print_combo(out, json, &combo)?;
        }
        Command::Mobius {
            family,
            lower,
            upper,
        } => {
            let x = Key::parse(*family, lower)?;
            let y = Key::parse(*family, upper)?;
            if x.degree() != y.degree() {
                return Err(Error::Domain(format!("{x} and {y} have different degrees")));
            }
            check_degree(x.degree(), poset_limit(*family), "mobius")?;
            let mu = mobius(&x, &y)?;
            if json {
                emit(out, &json!({"lower": lower, "upper": upper, "mobius": mu}))?;
            } else {
                line(out, mu)?;
            }
        }
        Command::Hasse(FamilyDegree { family, n }) => {
            check_degree(*n, poset_limit(*family), "hasse")?;
            let name = format!("{family}_{n}");
            let (dot, vertices, edges) = match family {
                Family::S => hasse_parts(&cached_weak_order(*n), &name),
                Family::Y => hasse_parts(&cached_tamari(*n), &name),
                Family::M => hasse_parts(&*cached_bileveled_order(*n)?, &name),
                Family::Q => {
                    return Err(Error::Family {
                        expected: "S, Y or M".into(),
                        found: "Q".into(),
                    })
                }
            };
            if json {
                emit(
                    out,
                    &json!({"name": name, "vertices": vertices, "edges": edges}),
                )?;
            } else {
                out.write_all(dot.as_bytes()).map_err(io_error)?;
            }
        }
        Command::Coinvariants { n } => {
            check_degree(*n, enumeration_limit(Family::M), "coinvariants")?;
            let keys: Vec<String> = coinvariant_basis(*n)?
                .iter()
                .map(ToString::to_string)
                .collect();
            if json {
                emit(out, &json!({"n": n, "keys": keys}))?;
            } else {
                for k in keys {
                    line(out, k)?;
                }
            }
        }
        Command::Hilbert {
            family,
            order,
            quotient,
        } => {
            let mut series = counts(*family, *order);
            if let Some(denom) = quotient {
                series = series_quotient(&series, &counts(*denom, *order))?;
            }
            if json {
                emit(out, &series.to_json())?;
            } else {
                line(out, series)?;
            }
        }
        Command::Verify { suite, n_max } => {
            let report = run_suite(*suite, *n_max);
            if json {
                emit(
                    out,
                    &json!({
                        "suite": suite.name(),
                        "n_max": report.n_max,
                        "status": if report.passed() { "pass" } else { "fail" },
                        "counterexample": report.counterexample,
                        "checked": report.checked,
                        "notes": report.notes,
                    }),
                )?;
            } else {
                for note in &report.notes {
                    line(out, format!("# {note}"))?;
                }
                line(out, report.summary_line())?;
            }
            if !report.passed() {
                return Ok(Outcome::VerificationFailed);
            }
        }
    }
    Ok(Outcome::Ok)
}

fn apply_map(op: MapOp, input: &str) -> Result<String> {
    let perm = || input.parse::<Permutation>();
    let planar = || crate::trees::Tree::parse_canonical(input);
    let bileveled = || input.parse::<crate::trees::BiLeveledTree>();
    Ok(match op {
        MapOp::Tau => tau(&perm()?).to_string(),
        MapOp::Beta => beta(&perm()?).to_string(),
        MapOp::Phi => phi(&bileveled()?).to_string(),
        MapOp::Min => min_perm(&planar()?).to_string(),
        MapOp::Max => max_perm(&planar()?).to_string(),
        MapOp::MinMin => min_min(&bileveled()?).to_string(),
        MapOp::MaxMin => max_min(&bileveled()?).to_string(),
        MapOp::MaxMax => {
            let b = bileveled()?;
            check_degree(b.len(), poset_limit(Family::S), "map MM")?;
            fiber_interval(b.len(), &b)?.1.to_string()
        }
        MapOp::GammaLeft => gamma_left(&planar()?).to_string(),
        MapOp::GammaRight => gamma_right(&planar()?).to_string(),
        MapOp::Qsym => qsym_composition(&bileveled()?).to_string(),
        MapOp::Comb => composition_to_bileveled(&input.parse()?).to_string(),
    })
}

fn mobius(x: &Key, y: &Key) -> Result<i64> {
    fn within<K>(p: &crate::posets::FinitePoset<K>, x: &K, y: &K) -> Result<i64>
    where
        K: Clone + Eq + std::hash::Hash + std::fmt::Display,
    {
        let (i, j) = (p.require_index(x)?, p.require_index(y)?);
        Ok(p.mobius_or_zero(i, j))
    }
    if x.is_unit() {
        return Ok(1);
    }
    match (x, y) {
        (Key::S(a), Key::S(b)) => within(&cached_weak_order(a.len()), a, b),
        (Key::Y(a), Key::Y(b)) => within(&cached_tamari(a.len()), a, b),
        (Key::M(a), Key::M(b)) => within(&*cached_bileveled_order(a.len())?, a, b),
        _ => Err(Error::Family {
            expected: "S, Y or M".into(),
            found: x.family().to_string(),
        }),
    }
}

fn hasse_parts<K: std::fmt::Display>(
    p: &crate::posets::FinitePoset<K>,
    name: &str,
) -> (String, Vec<String>, Vec<[String; 2]>) {
    let vertices = p.elements().iter().map(ToString::to_string).collect();
    let edges = p
        .cover_edges()
        .into_iter()
        .map(|(a, b)| [p.element(a).to_string(), p.element(b).to_string()])
        .collect();
    (p.to_dot(name), vertices, edges)
}

fn print_combo(out: &mut dyn Write, json: bool, x: &LinearCombo) -> Result<()> {
    if json {
        emit(out, &x.to_json())
    } else {
        line(out, x)
    }
}

fn print_tensor(out: &mut dyn Write, json: bool, x: &TensorCombo) -> Result<()> {
    if json {
        emit(out, &x.to_json())
    } else {
        line(out, x)
    }
}
