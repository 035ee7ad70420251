use std::fmt;
use std::fs;

use clap::Subcommand;
use cubevc_core::construct::{
    boolean_sum_class, classify_maximal, generating_set, generating_set_from_steps,
    majority_anchor_class, majority_anchor_witness, symmetric_function_class,
    symmetric_maximum_extension,
};
use cubevc_core::embed::{embed_by_deficiency, maximum_embeddings};
use cubevc_core::reductions::{face_graph, iterated_reduction, project_drop, split_along, unique_complete_collection};
use cubevc_core::rng::{random_class, SplitMix64};
use cubevc_core::text;
use cubevc_core::vc::{count_k_cubes_in_complement, deficiency};
use cubevc_core::{
    enumerate_maximum_classes, is_maximal, is_maximum, sauer_bound, shift_down,
    shift_to_closed_below, vc_dimension, ConceptClass, CubeCollection, Error,
};
use serde_json::{json, Value};

use crate::Command;

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult = Result<(), CliError>;

fn read_file(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {path}: {e}")))
}

fn load_class(path: &str) -> Result<ConceptClass, CliError> {
    Ok(text::parse_class(&read_file(path)?)?)
}

/// For graph commands: a ".cubes" file is parsed as a collection; anything
/// else is parsed as a class and must be maximum, contributing its unique
/// complete collection.
fn load_collection(path: &str) -> Result<CubeCollection, CliError> {
    let content = read_file(path)?;
    if path.ends_with(".cubes") {
        Ok(text::parse_collection(&content)?)
    } else {
        Ok(unique_complete_collection(&text::parse_class(&content)?)?)
    }
}

fn class_json(class: &ConceptClass) -> Value {
    json!({
        "n": class.n(),
        "vertices": class.vertices().map(|v| v.to_string()).collect::<Vec<_>>(),
    })
}

fn emit(value: Value) {
    println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
}

#[derive(Subcommand)]
pub enum GenFamily {
    /// The two-block majority-anchored VC-d class (even d, n > 2d+2) that
    /// resists embedding below dimension 2d, or its 2d-maximum witness.
    Theorem6 {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u32,
        /// Emit the 2d-maximum witness superclass instead of the class.
        #[arg(long)]
        witness: bool,
    },
    /// All vertices of weight at most d: the canonical maximum class.
    ClosedBelow {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
    },
    /// Symmetric Boolean functions of n variables in the 2^n-cube, or their
    /// maximum extension.
    Symmetric {
        #[arg(long)]
        n: u32,
        /// Emit the maximum VC-(n+1) extension instead of the bare class.
        #[arg(long)]
        extension: bool,
    },
    /// Sums of at most k generating-set elements: a k-maximum class in the
    /// 2^n-cube.
    Boolsum {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Parent-pointer tree file overriding the default nested chain: one
        /// "parent monomial" pair per line, first line `0 <monomial>`.
        #[arg(long)]
        tree: Option<String>,
    },
    /// A seeded random class, for scripted experiments.
    Random {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        cardinality: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

pub fn run(command: &Command, as_json: bool) -> CliResult {
    match command {
        Command::Vcdim { file } => {
            let class = load_class(file)?;
            let vc = vc_dimension(&class);
            if as_json {
                emit(json!({"command": "vcdim", "n": class.n(), "vc": vc, "empty": class.is_empty()}));
            } else {
                println!("{vc}");
                if class.is_empty() {
                    eprintln!("note: empty class; -1 by convention");
                }
            }
            Ok(())
        }
        Command::Sauer { n, d } => {
            let bound = sauer_bound(*n, *d)?;
            if as_json {
                emit(json!({"command": "sauer", "n": n, "d": d, "bound": bound}));
            } else {
                println!("{bound}");
            }
            Ok(())
        }
        Command::Deficiency { file } => {
            let report = deficiency(&load_class(file)?)?;
            if as_json {
                emit(json!({
                    "command": "deficiency",
                    "d": report.d,
                    "sauer": report.sauer,
                    "cardinality": report.cardinality,
                    "deficiency": report.deficiency,
                }));
            } else {
                println!(
                    "d={} sauer={} cardinality={} deficiency={}",
                    report.d, report.sauer, report.cardinality, report.deficiency
                );
            }
            Ok(())
        }
        Command::IsMaximum { file } => {
            let answer = is_maximum(&load_class(file)?)?;
            print_bool("is-maximum", answer, as_json);
            Ok(())
        }
        Command::IsMaximal { file } => {
            let answer = is_maximal(&load_class(file)?)?;
            print_bool("is-maximal", answer, as_json);
            Ok(())
        }
        Command::CountCubes { k, file } => {
            let report = count_k_cubes_in_complement(&load_class(file)?, *k)?;
            if as_json {
                emit(json!({
                    "command": "count-cubes",
                    "k": k,
                    "count": report.count,
                    "bound": report.lower_bound,
                }));
            } else {
                println!("count={} bound={}", report.count, report.lower_bound);
            }
            Ok(())
        }
        Command::Complement { file } => {
            print_class(&load_class(file)?.complement(), as_json);
            Ok(())
        }
        Command::Project { drop, file } => {
            print_class(&project_drop(&load_class(file)?, drop)?, as_json);
            Ok(())
        }
        Command::Reduce { x, file } => {
            let split = split_along(&load_class(file)?, *x)?;
            if as_json {
                emit(json!({
                    "command": "reduce",
                    "coord": split.coord,
                    "image": class_json(&split.image),
                    "reduction": class_json(&split.reduction),
                    "tail": class_json(&split.tail),
                }));
            } else {
                println!("# image");
                print!("{}", text::write_class(&split.image));
                println!("\n# reduction");
                print!("{}", text::write_class(&split.reduction));
                println!("\n# tail");
                print!("{}", text::write_class(&split.tail));
            }
            Ok(())
        }
        Command::Ir { s, file } => {
            let cc = load_collection(file)?;
            let empty = Vec::new();
            let s = s.as_ref().unwrap_or(&empty);
            let graph = iterated_reduction(&cc, s)?;
            if as_json {
                let nodes: Vec<String> = {
                    // reuse the DOT labels for structural output
                    graph
                        .nodes
                        .iter()
                        .map(|&v| cubevc_core::Vertex::new(graph.ambient, v).unwrap().to_string())
                        .collect()
                };
                emit(json!({
                    "command": "ir",
                    "directions": graph.directions,
                    "ambient": graph.ambient,
                    "nodes": nodes,
                    "edges": graph.edges.iter().map(|e| json!({
                        "a": e.a, "b": e.b, "direction": e.direction, "cube": e.cube.to_string(),
                    })).collect::<Vec<_>>(),
                    "component_count": graph.component_count,
                    "is_forest": graph.is_forest,
                    "is_tree": graph.is_tree(),
                }));
            } else {
                print!("{}", graph.to_dot());
            }
            Ok(())
        }
        Command::FaceGraph { file } => {
            let graph = face_graph(&load_collection(file)?);
            if as_json {
                emit(json!({
                    "command": "face-graph",
                    "cubes": graph.cubes.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "faces": graph.faces.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "edges": graph.edges,
                }));
            } else {
                print!("{}", graph.to_dot());
            }
            Ok(())
        }
        Command::Shift { x, file } => {
            let class = load_class(file)?;
            let shifted = match x {
                Some(x) => shift_down(&class, *x)?,
                None => shift_to_closed_below(&class),
            };
            print_class(&shifted, as_json);
            Ok(())
        }
        Command::EnumMax { n, d } => {
            let classes = enumerate_maximum_classes(*n, *d)?;
            print_stream("enum-max", &classes, as_json);
            Ok(())
        }
        Command::Embed { k, budget, file } => {
            let class = load_class(file)?;
            let result = maximum_embeddings(&class, *k, *budget)?;
            if as_json {
                emit(json!({
                    "command": "embed",
                    "target_vc": result.target_vc,
                    "classes": result.classes.iter().map(class_json).collect::<Vec<_>>(),
                    "stats": {
                        "popped": result.stats.popped,
                        "pushed": result.stats.pushed,
                        "pruned": result.stats.pruned,
                    },
                    "truncated": result.truncated,
                    "enlarged": class_json(&result.enlarged),
                }));
            } else {
                for class in &result.classes {
                    println!("{}", text::write_class(class));
                }
                if result.truncated {
                    println!("search budget exhausted; results incomplete");
                }
                println!("{} classes found", result.classes.len());
                println!(
                    "stats: popped={} pushed={} pruned={} enlarged_cardinality={}",
                    result.stats.popped,
                    result.stats.pushed,
                    result.stats.pruned,
                    result.enlarged.cardinality()
                );
            }
            Ok(())
        }
        Command::EmbedDeficiency { file } => {
            let result = embed_by_deficiency(&load_class(file)?)?;
            if as_json {
                emit(json!({
                    "command": "embed-deficiency",
                    "dropped": result.dropped,
                    "vc": result.vc,
                    "superclass": class_json(&result.superclass),
                }));
            } else {
                if result.dropped.is_empty() {
                    println!("# dropped: none (already maximum)");
                } else {
                    let dropped: Vec<String> = result.dropped.iter().map(|c| c.to_string()).collect();
                    println!("# dropped: {}", dropped.join(" "));
                }
                println!("# vc: {}", result.vc);
                print!("{}", text::write_class(&result.superclass));
            }
            Ok(())
        }
        Command::Gen { family } => run_gen(family, as_json),
        Command::ClassifyMaximal { n, d } => {
            let reps = classify_maximal(*n, *d)?;
            print_stream("classify-maximal", &reps, as_json);
            Ok(())
        }
    }
}

fn run_gen(family: &GenFamily, as_json: bool) -> CliResult {
    match family {
        GenFamily::Theorem6 { d, n, witness } => {
            if *witness {
                let class = majority_anchor_witness(*d, *n)?;
                print_class(&class, as_json);
            } else {
                let mc = majority_anchor_class(*d, *n)?;
                if as_json {
                    emit(json!({
                        "command": "gen",
                        "family": "theorem6",
                        "a": mc.a_coords,
                        "b": mc.b_coords,
                        "class": class_json(&mc.class),
                    }));
                } else {
                    println!("# A={}", join(&mc.a_coords));
                    println!("# B={}", join(&mc.b_coords));
                    print!("{}", text::write_class(&mc.class));
                }
            }
            Ok(())
        }
        GenFamily::ClosedBelow { n, d } => {
            print_class(&cubevc_core::closed_below_maximum(*n, *d)?, as_json);
            Ok(())
        }
        GenFamily::Symmetric { n, extension } => {
            let class = if *extension {
                symmetric_maximum_extension(*n)?
            } else {
                symmetric_function_class(*n)?
            };
            print_class(&class, as_json);
            Ok(())
        }
        GenFamily::Boolsum { n, k, tree } => {
            let g = match tree {
                Some(path) => generating_set_from_steps(*n, &parse_tree_file(path)?)?,
                None => generating_set(*n)?,
            };
            print_class(&boolean_sum_class(&g, *k)?, as_json);
            Ok(())
        }
        GenFamily::Random { n, cardinality, seed } => {
            let mut rng = SplitMix64::new(*seed);
            print_class(&random_class(*n, *cardinality, &mut rng)?, as_json);
            Ok(())
        }
    }
}

/// Tree files: one "parent monomial" pair of integers per line; '#' comments
/// and blank lines are skipped. The first entry must have parent 0.
fn parse_tree_file(path: &str) -> Result<Vec<(usize, u32)>, CliError> {
    let content = read_file(path)?;
    let mut steps = Vec::new();
    for (i, raw) in content.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let parse = |s: Option<&str>| -> Result<u64, CliError> {
            s.and_then(|t| t.parse().ok())
                .ok_or_else(|| CliError::Io(format!("{path}:{}: expected \"parent monomial\"", i + 1)))
        };
        let parent = parse(parts.next())? as usize;
        let mono = parse(parts.next())? as u32;
        if parts.next().is_some() {
            return Err(CliError::Io(format!("{path}:{}: trailing fields", i + 1)));
        }
        steps.push((parent, mono));
    }
    Ok(steps)
}

fn join(coords: &[u32]) -> String {
    coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

fn print_bool(command: &str, answer: bool, as_json: bool) {
    if as_json {
        emit(json!({"command": command, "result": answer}));
    } else {
        println!("{answer}");
    }
}

fn print_class(class: &ConceptClass, as_json: bool) {
    if as_json {
        emit(class_json(class));
    } else {
        print!("{}", text::write_class(class));
    }
}

fn print_stream(command: &str, classes: &[ConceptClass], as_json: bool) {
    if as_json {
        emit(json!({
            "command": command,
            "count": classes.len(),
            "classes": classes.iter().map(class_json).collect::<Vec<_>>(),
        }));
    } else {
        print!("{}", text::write_class_stream(classes));
        eprintln!("{} classes", classes.len());
    }
}
