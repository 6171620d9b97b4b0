//! Command-line front end: parse tables, dispatch to the library, render
//! text or JSON reports.
//!
//! Exit codes: 0 when the checked property holds (or a build succeeded),
//! 1 when the property fails (a witness is printed), 2 on usage or input
//! errors.

use std::collections::BTreeSet;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use permsg::congruence::PermutabilityReport;
use permsg::construction::{
    CosetExtensionSpec, GroupNilpotentReport, GroupNullReport, ReesMatrixSpec, Side,
};
use permsg::decomposition::{ClassificationCase, LowerCase, UpperKind};
use permsg::enumeration::{CanonicalMode, CensusConfig};
use permsg::error::Error;
use permsg::group::{FiniteGroup, Subgroup};
use permsg::gset::GSet;
use permsg::partition::Partition;
use permsg::semigroup::FiniteSemigroup;
use permsg::{congruence, construction, decomposition, enumeration, gset, ideals, sgp, verify};

#[derive(Parser)]
#[command(
    name = "permsg",
    version,
    about = "Finite semigroup toolkit: congruence permutability, semilattice decompositions, Rees structure, censuses"
)]
struct Cli {
    /// Emit structured JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Right,
    Left,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Labeled,
    Iso,
    Isoanti,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a Cayley table ('-' reads standard input)
    Check { input: String },
    /// List the full congruence lattice
    Congruences { input: String },
    /// Decide whether all congruences commute pairwise
    Permutable { input: String },
    /// Green's relations R, L, J, H
    Green { input: String },
    /// All two-sided ideals and whether they form a chain
    Ideals { input: String },
    /// The minimum ideal
    Kernel { input: String },
    /// Smallest semilattice congruence and its archimedean components
    Decompose { input: String },
    /// Classify along the permutability pipeline
    Classify { input: String },
    /// Build a Rees matrix semigroup over a group
    Rees {
        /// Group table file
        #[arg(long)]
        group: String,
        /// Number of R-classes
        #[arg(long = "I")]
        i_size: usize,
        /// Number of L-classes
        #[arg(long = "J")]
        j_size: usize,
        /// Sandwich matrix, row-major (J rows of I group element ids)
        #[arg(long = "P", num_args = 1.., value_name = "ENTRY")]
        sandwich: Vec<usize>,
    },
    /// Coordinatize a completely simple semigroup as a Rees matrix semigroup
    ReesDecompose { input: String },
    /// Build the coset null extension of a group
    Construct1 {
        /// Group table file
        #[arg(long)]
        group: String,
        /// Subgroup members, comma separated
        #[arg(long, value_delimiter = ',', value_name = "ID")]
        subgroup: Vec<usize>,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
    },
    /// The monogenic nilpotent semigroup of a given order
    CyclicNilpotent {
        #[arg(long)]
        order: usize,
    },
    /// A group with an absorbing zero adjoined
    GroupZero {
        #[arg(long)]
        group: String,
    },
    /// Orbits, stabilizers and congruence count of a right group action
    Gset {
        /// Group table file
        #[arg(long)]
        group: String,
        /// Action table file (header: point count, group order)
        action: String,
        /// Base point for the stabilizer
        #[arg(long, default_value_t = 0)]
        base: usize,
    },
    /// Check the group-over-null shape: interval condition vs permutability
    Theorem2 { input: String },
    /// Check the group-over-nilpotent shape layer by layer
    Theorem3 { input: String },
    /// Exhaustively enumerate associative tables and run named checks
    Enumerate {
        #[arg(long, required_unless_present = "list_checks")]
        order: Option<usize>,
        #[arg(long, value_enum, default_value_t = ModeArg::Labeled)]
        mode: ModeArg,
        /// Worker threads (0 = default)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Named predicates to verify, comma separated (see --list-checks)
        #[arg(long, value_delimiter = ',', value_name = "NAME")]
        verify: Vec<String>,
        /// List the available predicate names and exit
        #[arg(long)]
        list_checks: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("reading standard input: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("reading {path}: {e}")))
    }
}

fn load_semigroup(path: &str) -> Result<FiniteSemigroup, Error> {
    sgp::parse_auto(&read_input(path)?)
}

fn load_group(path: &str) -> Result<FiniteGroup, Error> {
    FiniteGroup::from_semigroup(load_semigroup(path)?)
}

fn partition_line(p: &Partition) -> String {
    p.as_slice()
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn classes_line(p: &Partition) -> String {
    p.classes()
        .iter()
        .map(|c| {
            format!(
                "{{{}}}",
                c.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn set_line(set: &BTreeSet<usize>) -> String {
    format!(
        "{{{}}}",
        set.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

fn subgroup_json(h: &Subgroup) -> Value {
    json!(h.members().iter().collect::<Vec<_>>())
}

fn permutability_json(report: &PermutabilityReport) -> Value {
    json!({
        "permutable": report.permutable,
        "lattice_size": report.lattice_size,
        "witness": report.witness.as_ref().map(|w| json!({
            "alpha": w.alpha.class_vector(),
            "beta": w.beta.class_vector(),
            "pair": [w.pair.0, w.pair.1],
        })),
    })
}

fn print_permutability(report: &PermutabilityReport, as_json: bool) -> u8 {
    if as_json {
        println!("{}", permutability_json(report));
    } else {
        println!(
            "permutable: {}",
            if report.permutable { "yes" } else { "no" }
        );
        println!("congruences: {}", report.lattice_size);
        if let Some(w) = &report.witness {
            println!("witness alpha: {}", partition_line(w.alpha.partition()));
            println!("witness beta:  {}", partition_line(w.beta.partition()));
            println!(
                "pair ({}, {}) lies in alpha.beta but not in beta.alpha",
                w.pair.0, w.pair.1
            );
        }
    }
    u8::from(!report.permutable)
}

fn side_of(arg: SideArg) -> Side {
    match arg {
        SideArg::Right => Side::Right,
        SideArg::Left => Side::Left,
    }
}

fn emit_semigroup(s: &FiniteSemigroup, as_json: bool) {
    if as_json {
        println!("{}", sgp::format_json(s));
    } else {
        print!("{}", sgp::format_text(s));
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.command {
        Command::Check { input } => {
            let text = read_input(input)?;
            match sgp::parse_auto(&text) {
                Ok(s) => {
                    if cli.json {
                        println!("{}", json!({"associative": true, "order": s.order()}));
                    } else {
                        println!("associative, order {}", s.order());
                    }
                    Ok(0)
                }
                Err(Error::NonAssociative { a, b, c }) => {
                    if cli.json {
                        println!("{}", json!({"associative": false, "witness": [a, b, c]}));
                    } else {
                        println!("not associative: ({a}*{b})*{c} != {a}*({b}*{c})");
                    }
                    Ok(1)
                }
                Err(other) => Err(other),
            }
        }
        Command::Congruences { input } => {
            let s = load_semigroup(input)?;
            let lattice = congruence::all_congruences(&s)?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "count": lattice.len(),
                        "congruences": lattice.iter().map(|c| c.class_vector()).collect::<Vec<_>>(),
                    })
                );
            } else {
                println!("congruences: {}", lattice.len());
                for c in &lattice {
                    println!("{}", partition_line(c.partition()));
                }
            }
            Ok(0)
        }
        Command::Permutable { input } => {
            let s = load_semigroup(input)?;
            let report = congruence::is_permutable(&s)?;
            Ok(print_permutability(&report, cli.json))
        }
        Command::Green { input } => {
            let s = load_semigroup(input)?;
            let g = ideals::green(&s);
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "r": g.r.as_slice(), "l": g.l.as_slice(),
                        "j": g.j.as_slice(), "h": g.h.as_slice(),
                    })
                );
            } else {
                println!("R: {}", classes_line(&g.r));
                println!("L: {}", classes_line(&g.l));
                println!("J: {}", classes_line(&g.j));
                println!("H: {}", classes_line(&g.h));
            }
            Ok(0)
        }
        Command::Ideals { input } => {
            let s = load_semigroup(input)?;
            let collection = ideals::all_ideals(&s);
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "is_chain": collection.is_chain,
                        "ideals": collection.ideals.iter()
                            .map(|i| i.members().iter().collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                    })
                );
            } else {
                println!("ideals: {}", collection.ideals.len());
                for ideal in &collection.ideals {
                    println!("{}", set_line(ideal.members()));
                }
                println!("chain: {}", if collection.is_chain { "yes" } else { "no" });
            }
            Ok(0)
        }
        Command::Kernel { input } => {
            let s = load_semigroup(input)?;
            let k = ideals::kernel(&s);
            if cli.json {
                println!(
                    "{}",
                    json!({"kernel": k.members().iter().collect::<Vec<_>>()})
                );
            } else {
                println!("kernel: {}", set_line(k.members()));
            }
            Ok(0)
        }
        Command::Decompose { input } => {
            let s = load_semigroup(input)?;
            let d = decomposition::putcha_decomposition(&s);
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "congruence": d.congruence.class_vector(),
                        "components": d.components.iter()
                            .map(|c| c.iter().collect::<Vec<_>>()).collect::<Vec<_>>(),
                        "quotient": sgp::RawTable::from_semigroup(&d.quotient),
                        "all_archimedean": d.all_archimedean,
                    })
                );
            } else {
                println!(
                    "semilattice congruence: {}",
                    partition_line(d.congruence.partition())
                );
                println!(
                    "components: {}",
                    d.components
                        .iter()
                        .map(set_line)
                        .collect::<Vec<_>>()
                        .join(" ")
                );
                println!("quotient semilattice:");
                print!("{}", d.quotient);
                println!(
                    "all archimedean: {}",
                    if d.all_archimedean { "yes" } else { "no" }
                );
            }
            Ok(u8::from(!d.all_archimedean))
        }
        Command::Classify { input } => {
            let s = load_semigroup(input)?;
            let report = decomposition::classify(&s)?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "case": classification_json(&report.case),
                        "permutable": report.permutability.permutable,
                        "components": report.components.iter()
                            .map(|c| c.iter().collect::<Vec<_>>()).collect::<Vec<_>>(),
                    })
                );
            } else {
                println!("{}", classification_text(&report.case));
            }
            Ok(0)
        }
        Command::Rees {
            group,
            i_size,
            j_size,
            sandwich,
        } => {
            let g = load_group(group)?;
            if sandwich.len() != i_size * j_size {
                return Err(Error::Shape(format!(
                    "expected {} sandwich entries, found {}",
                    i_size * j_size,
                    sandwich.len()
                )));
            }
            let rows: Vec<Vec<usize>> = sandwich.chunks(*i_size).map(|row| row.to_vec()).collect();
            let spec = ReesMatrixSpec::new(g, *i_size, *j_size, rows)?;
            emit_semigroup(&construction::rees_matrix(&spec), cli.json);
            Ok(0)
        }
        Command::ReesDecompose { input } => {
            let s = load_semigroup(input)?;
            match construction::rees_decompose(&s) {
                Ok(d) => {
                    if cli.json {
                        println!(
                            "{}",
                            json!({
                                "i_size": d.spec.i_size,
                                "j_size": d.spec.j_size,
                                "group": sgp::RawTable::from_semigroup(d.spec.group.carrier()),
                                "sandwich": d.spec.sandwich,
                                "iso": d.iso,
                            })
                        );
                    } else {
                        println!(
                            "I: {}  J: {}  |G|: {}",
                            d.spec.i_size,
                            d.spec.j_size,
                            d.spec.group.order()
                        );
                        println!("group table:");
                        print!("{}", d.spec.group.carrier());
                        println!("sandwich (J rows x I columns):");
                        for row in &d.spec.sandwich {
                            println!(
                                "{}",
                                row.iter()
                                    .map(|x| x.to_string())
                                    .collect::<Vec<_>>()
                                    .join(" ")
                            );
                        }
                        println!(
                            "isomorphism: {}",
                            d.iso
                                .iter()
                                .map(|x| x.to_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        );
                    }
                    Ok(0)
                }
                Err(Error::NotCompletelySimple) => {
                    if cli.json {
                        println!("{}", json!({"completely_simple": false}));
                    } else {
                        println!("not completely simple");
                    }
                    Ok(1)
                }
                Err(other) => Err(other),
            }
        }
        Command::Construct1 {
            group,
            subgroup,
            side,
        } => {
            let g = load_group(group)?;
            let h = g.subgroup(subgroup.iter().copied())?;
            let spec = CosetExtensionSpec {
                group: g,
                subgroup: h,
                side: side_of(*side),
            };
            emit_semigroup(&construction::construct1(&spec), cli.json);
            Ok(0)
        }
        Command::CyclicNilpotent { order } => {
            if *order == 0 {
                return Err(Error::Shape("order must be positive".into()));
            }
            emit_semigroup(&construction::cyclic_nilpotent(*order), cli.json);
            Ok(0)
        }
        Command::GroupZero { group } => {
            let g = load_group(group)?;
            emit_semigroup(&construction::group_with_zero(&g), cli.json);
            Ok(0)
        }
        Command::Gset {
            group,
            action,
            base,
        } => {
            let g = load_group(group)?;
            let table = sgp::parse_action_text(&read_input(action)?)?;
            if table.group_order != g.order() {
                return Err(Error::Shape(format!(
                    "action table is over a group of order {}, file has order {}",
                    table.group_order,
                    g.order()
                )));
            }
            let x = GSet::new(g, table.points, &table.rows)?;
            if *base >= x.points() {
                return Err(Error::Shape(format!("base point {base} out of range")));
            }
            let orbits = x.orbits();
            let stabilizer = x.stabilizer(*base);
            let congruences = gset::all_gset_congruences(&x)?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "points": x.points(),
                        "orbits": orbits.as_slice(),
                        "transitive": x.is_transitive(),
                        "base": base,
                        "stabilizer": subgroup_json(&stabilizer),
                        "congruence_count": congruences.len(),
                    })
                );
            } else {
                println!("points: {}", x.points());
                println!("orbits: {}", classes_line(&orbits));
                println!(
                    "transitive: {}",
                    if x.is_transitive() { "yes" } else { "no" }
                );
                println!("stabilizer of {}: {}", base, set_line(stabilizer.members()));
                println!("congruences: {}", congruences.len());
            }
            Ok(0)
        }
        Command::Theorem2 { input } => {
            let s = load_semigroup(input)?;
            let report = construction::check_group_null_semilattice(&s)?;
            print_group_null(&report, cli.json);
            Ok(u8::from(!report.agrees))
        }
        Command::Theorem3 { input } => {
            let s = load_semigroup(input)?;
            let report = construction::check_group_nilpotent_semilattice(&s)?;
            print_group_nilpotent(&report, cli.json);
            Ok(u8::from(!report.agrees))
        }
        Command::Enumerate {
            order,
            mode,
            jobs,
            verify: checks,
            list_checks,
        } => {
            if *list_checks {
                for p in verify::standard_predicates() {
                    println!("{}: {}", p.name, p.description);
                }
                return Ok(0);
            }
            let order = order.ok_or_else(|| Error::Parse("--order is required".into()))?;
            let mode = match mode {
                ModeArg::Labeled => CanonicalMode::Labeled,
                ModeArg::Iso => CanonicalMode::Iso,
                ModeArg::Isoanti => CanonicalMode::IsoAndAnti,
            };
            let report = enumeration::census_verify(&CensusConfig {
                order,
                mode,
                predicates: checks.clone(),
                jobs: *jobs,
            })?;
            let mut failures = 0usize;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "order": report.order,
                        "total": report.total,
                        "checks": report.outcomes.iter().map(|o| json!({
                            "name": o.name,
                            "checked": o.checked,
                            "failures": o.failures,
                            "counterexamples": o.counterexamples.iter()
                                .map(sgp::RawTable::from_semigroup).collect::<Vec<_>>(),
                        })).collect::<Vec<_>>(),
                    })
                );
                failures = report.outcomes.iter().map(|o| o.failures).sum();
            } else {
                println!("order {}: {} tables", report.order, report.total);
                for outcome in &report.outcomes {
                    println!(
                        "check {}: {} failures / {} checked",
                        outcome.name, outcome.failures, outcome.checked
                    );
                    failures += outcome.failures;
                    for (k, cex) in outcome.counterexamples.iter().enumerate() {
                        println!("# counterexample {} for {}", k + 1, outcome.name);
                        print!("{}", sgp::format_text(cex));
                    }
                }
            }
            Ok(u8::from(failures > 0))
        }
    }
}

fn classification_text(case: &ClassificationCase) -> String {
    match case {
        ClassificationCase::NotPermutable => "NotPermutable".to_string(),
        ClassificationCase::NotPutcha { component } => {
            format!(
                "NotPutcha (non-archimedean component {})",
                set_line(component)
            )
        }
        ClassificationCase::ArchCyclicNilpotent { generator, degree } => {
            format!("ArchCyclicNilpotent (generator {generator}, degree {degree})")
        }
        ClassificationCase::ArchCompletelySimple => "ArchCompletelySimple".to_string(),
        ClassificationCase::TwoComponent {
            upper_kind,
            lower_case,
            upper,
            lower,
        } => {
            let upper_name = match upper_kind {
                UpperKind::Group => "Group",
                UpperKind::CompletelySimpleNonGroup => "CompletelySimpleNonGroup",
            };
            format!(
                "TwoComponent upper={} {} lower={} {}",
                upper_name,
                set_line(upper),
                lower_case_text(lower_case),
                set_line(lower)
            )
        }
    }
}

fn lower_case_text(case: &LowerCase) -> String {
    match case {
        LowerCase::CompletelySimple => "CompletelySimple".to_string(),
        LowerCase::NullRight => "NullRight".to_string(),
        LowerCase::NullLeft => "NullLeft".to_string(),
        LowerCase::NilpotentWithIdentity => "NilpotentWithIdentity".to_string(),
        LowerCase::NontrivialKernelExtension { kernel } => {
            format!("NontrivialKernelExtension kernel={}", set_line(kernel))
        }
        LowerCase::UnresolvedNonGroupUpper => "UnresolvedNonGroupUpper".to_string(),
    }
}

fn classification_json(case: &ClassificationCase) -> Value {
    match case {
        ClassificationCase::NotPermutable => json!({"kind": "NotPermutable"}),
        ClassificationCase::NotPutcha { component } => json!({
            "kind": "NotPutcha",
            "component": component.iter().collect::<Vec<_>>(),
        }),
        ClassificationCase::ArchCyclicNilpotent { generator, degree } => json!({
            "kind": "ArchCyclicNilpotent", "generator": generator, "degree": degree,
        }),
        ClassificationCase::ArchCompletelySimple => json!({"kind": "ArchCompletelySimple"}),
        ClassificationCase::TwoComponent {
            upper_kind,
            lower_case,
            upper,
            lower,
        } => json!({
            "kind": "TwoComponent",
            "upper_kind": match upper_kind {
                UpperKind::Group => "Group",
                UpperKind::CompletelySimpleNonGroup => "CompletelySimpleNonGroup",
            },
            "lower_case": lower_case_text(lower_case),
            "upper": upper.iter().collect::<Vec<_>>(),
            "lower": lower.iter().collect::<Vec<_>>(),
        }),
    }
}

fn print_group_null(report: &GroupNullReport, as_json: bool) {
    if as_json {
        println!(
            "{}",
            json!({
                "side": match report.side { Side::Right => "right", Side::Left => "left" },
                "group": report.group_members,
                "null_part": report.null_part,
                "stabilizer": subgroup_json(&report.stabilizer),
                "condition": report.condition.holds,
                "permutable": report.permutable,
                "agrees": report.agrees,
            })
        );
    } else {
        println!(
            "shape: group over null part, {} identity",
            match report.side {
                Side::Right => "right",
                Side::Left => "left",
            }
        );
        println!(
            "group: {{{}}}",
            report
                .group_members
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        println!(
            "stabilizer (group-local ids): {}",
            set_line(report.stabilizer.members())
        );
        println!(
            "interval condition: {}",
            if report.condition.holds {
                "holds"
            } else {
                "fails"
            }
        );
        if let Some((h, k)) = &report.condition.failing_pair {
            println!(
                "  failing pair: {} vs {}",
                set_line(h.members()),
                set_line(k.members())
            );
        }
        println!(
            "permutable: {}",
            if report.permutable { "yes" } else { "no" }
        );
        println!(
            "agreement: {}",
            if report.agrees {
                "yes"
            } else {
                "NO (unexpected)"
            }
        );
    }
}

fn print_group_nilpotent(report: &GroupNilpotentReport, as_json: bool) {
    if as_json {
        println!(
            "{}",
            json!({
                "group": report.group_members,
                "nilpotent_part": report.nilpotent_part,
                "degree": report.degree,
                "layers": report.layers.iter().map(|l| json!({
                    "index": l.index,
                    "representative": l.representative,
                    "layer": l.layer.iter().collect::<Vec<_>>(),
                    "orbit_covers_layer": l.orbit_covers_layer,
                    "stabilizer": subgroup_json(&l.stabilizer),
                    "interval_commutes": l.interval_commutes,
                })).collect::<Vec<_>>(),
                "verdict": report.verdict,
                "permutable": report.permutable,
                "agrees": report.agrees,
            })
        );
    } else {
        println!("shape: group over nilpotent part, two-sided identity");
        println!("degree: {}", report.degree);
        for layer in &report.layers {
            println!(
                "layer {}: rep {} size {} orbit-cover {} interval {}",
                layer.index,
                layer.representative,
                layer.layer.len(),
                if layer.orbit_covers_layer {
                    "yes"
                } else {
                    "NO"
                },
                if layer.interval_commutes {
                    "commutes"
                } else {
                    "FAILS"
                },
            );
        }
        println!("verdict: {}", if report.verdict { "pass" } else { "fail" });
        println!(
            "permutable: {}",
            if report.permutable { "yes" } else { "no" }
        );
        println!(
            "agreement: {}",
            if report.agrees {
                "yes"
            } else {
                "NO (unexpected)"
            }
        );
    }
}
