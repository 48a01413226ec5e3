use clap::{Parser, Subcommand, ValueEnum};
use igusa::field::Field;
use igusa::finite_field::nondegeneracy_witness;
use igusa::lattice::{closed_form_h3, h3_invariants, simplicial_decomposition, Convention, SimplicialCone};
use igusa::motivic::motivic_local_zeta;
use igusa::newton::NewtonPolyhedron;
use igusa::oracle::{brute_cone_partition_check, random_cone, seeded_rng, series_coefficients_padic};
use igusa::polynomial::{parse_polynomial, IntPolynomial};
use igusa::zeta::{
    character_zeta, cone_sum_at_prime, local_igusa_zeta, local_igusa_zeta_symbolic, verify_b1_theorem, ReducedZeta,
    ZetaComputation,
};
use num_rational::BigRational;
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "igusa", version, about = "Local zeta functions of polynomials non-degenerate with respect to their Newton polyhedron")]
struct Cli {
    /// Number of variables; the names are x, y, z, w, u, v in that order.
    #[arg(long, global = true, default_value_t = 3)]
    dim: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Facets, faces and candidate poles of the Newton polyhedron.
    Analyze {
        #[arg(short = 'f', long)]
        poly: String,
    },
    /// The local zeta function as a rational function of t = p^(-s).
    Zeta {
        #[arg(short = 'f', long)]
        poly: String,
        #[arg(long, required_unless_present = "symbolic")]
        prime: Option<u64>,
        /// Keep p as a variable P; torus counts that do not cancel become symbols.
        #[arg(long, conflicts_with = "char_order")]
        symbolic: bool,
        /// Twist by the character of this order.
        #[arg(long)]
        char_order: Option<u64>,
        /// Compare the series with a brute-force p-adic count up to t^lmax.
        #[arg(long)]
        lmax: Option<u32>,
    },
    /// Shorthand for `zeta --char-order`.
    CharZeta {
        #[arg(short = 'f', long)]
        poly: String,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        order: u64,
    },
    /// The local motivic zeta function.
    Motivic {
        #[arg(short = 'f', long)]
        poly: String,
        /// Specialize L -> p, T -> t and the class symbols to point counts.
        #[arg(long)]
        specialize: Option<u64>,
    },
    /// Lattice points of a fundamental parallelepiped, e.g. `fundpar 2,4,3 0,1,0 0,0,1`.
    /// Put `--` before vectors that start with a minus sign.
    Fundpar {
        #[arg(required = true)]
        vectors: Vec<String>,
        /// Coefficients in (0, 1] instead of [0, 1).
        #[arg(long)]
        high: bool,
    },
    /// Run the brute-force checks against the main pipeline.
    Verify {
        #[arg(short = 'f', long)]
        poly: String,
        #[arg(long, default_value_t = 3)]
        prime: u64,
        #[arg(long, default_value_t = 3)]
        lmax: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random cones checked for decomposition independence.
        #[arg(long, default_value_t = 5)]
        cones: usize,
    },
}

enum Failure {
    Input(String),
    Verification(String),
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(out)) => {
            emit(&out);
            ExitCode::from(2)
        }
    }
}

// A closed pipe (e.g. `| head`) is not an error worth a panic.
fn emit(out: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{out}");
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let json_out = cli.format == Format::Json;
    let parse = |text: &str| parse_polynomial(text, cli.dim).map_err(input);
    match &cli.command {
        Command::Analyze { poly } => analyze(&parse(poly)?, json_out),
        Command::Zeta { poly, prime, symbolic, char_order, lmax } => {
            let f = parse(poly)?;
            if *symbolic {
                return symbolic_zeta(&f, json_out);
            }
            let p = prime.expect("clap requires --prime without --symbolic");
            match char_order {
                Some(d) => char_zeta(&f, p, *d, *lmax, json_out),
                None => zeta(&f, p, *lmax, json_out),
            }
        }
        Command::CharZeta { poly, prime, order } => char_zeta(&parse(poly)?, *prime, *order, None, json_out),
        Command::Motivic { poly, specialize } => motivic(&parse(poly)?, *specialize, json_out),
        Command::Fundpar { vectors, high } => fundpar(vectors, *high, json_out),
        Command::Verify { poly, prime, lmax, seed, cones } => verify(&parse(poly)?, *prime, *lmax, *seed, *cones, json_out),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn vec_label(v: &[i64]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn analyze(f: &IntPolynomial, json_out: bool) -> Result<String, Failure> {
    let np = NewtonPolyhedron::new(f).map_err(input)?;
    let facets: Vec<Value> = np
        .facets()
        .iter()
        .enumerate()
        .map(|(j, fc)| {
            json!({
                "normal": fc.normal, "m": fc.m, "sigma": fc.sigma,
                "compact": np.face(fc.face).is_compact(), "b1": np.classify_b1(j),
            })
        })
        .collect();
    let faces: Vec<Value> = np
        .faces()
        .iter()
        .map(|fc| {
            json!({
                "label": fc.label(), "vertices": fc.vertices, "rays": fc.rays, "dim": fc.dim,
                "compact": fc.is_compact(), "facets": fc.facets,
            })
        })
        .collect();
    let poles = np.candidate_poles();
    if json_out {
        return Ok(pretty(&json!({
            "polynomial": f.to_string(), "facets": facets, "faces": faces, "candidate_poles": poles,
        })));
    }
    let mut out = format!("f = {f}\n\nfacets\n{:<4}{:<14}{:>4}{:>7}  {:<8}b1\n", "", "normal", "m", "sigma", "compact");
    for (j, fc) in np.facets().iter().enumerate() {
        let roles: Vec<String> = np.classify_b1(j).iter().map(|r| format!("{r:?}")).collect();
        out += &format!(
            "v{j:<3}{:<14}{:>4}{:>7}  {:<8}{}\n",
            vec_label(&fc.normal),
            fc.m,
            fc.sigma,
            if np.face(fc.face).is_compact() { "yes" } else { "no" },
            if roles.is_empty() { "-".to_string() } else { roles.join(", ") }
        );
    }
    out += &format!("\ncompact faces: {}\n", np.compact_faces().count());
    for fc in np.compact_faces() {
        out += &format!("  {}  dim {}\n", fc.label(), fc.dim);
    }
    out += "\ncandidate poles\n";
    for cand in &poles {
        for c in &cand.classes {
            out += &format!(
                "  Re s = -{}  class {}  contributors {:?}  expected order {}  {:?}\n",
                cand.q, c.class, c.contributing_facets, c.expected_order, c.hypotheses
            );
        }
    }
    Ok(out)
}

fn reduced_json<K: Field>(r: &ReducedZeta<K>) -> Value {
    json!({
        "text": r.render(),
        "numerator": r.numerator.coeffs().iter().map(|c| c.render()).collect::<Vec<_>>(),
        "factors": r.factors.iter().map(|fp| json!({
            "poly": fp.poly.to_string(), "multiplicity": fp.multiplicity, "class": fp.class, "partial": fp.partial,
        })).collect::<Vec<_>>(),
        "poles": r.pole_report(),
    })
}

fn face_rows<K: Field>(np: &NewtonPolyhedron, z: &ZetaComputation<K>) -> Vec<Value> {
    z.faces
        .iter()
        .map(|row| {
            json!({
                "face": row.label,
                "restriction": row.restriction.to_string(),
                "count": row.count,
                "L": row.l.reduce().render(),
                "S": row.s.reduce().render(),
                "cone": np.cone_generators(row.face).iter().map(|&j| np.facets()[j].normal.clone()).collect::<Vec<_>>(),
                "pieces": row.pieces.iter().map(|(pc, mult)| json!({
                    "generators": pc.iter().map(|&j| np.facets()[j].normal.clone()).collect::<Vec<_>>(),
                    "multiplicity": mult,
                })).collect::<Vec<_>>(),
            })
        })
        .collect()
}

fn face_table<K: Field>(np: &NewtonPolyhedron, z: &ZetaComputation<K>) -> String {
    let mut out = format!("{:<24}{:<22}{:>6}  {:<26}{:>5}  L_tau | S(Delta_tau)\n", "face", "f_tau", "N", "cone", "mult");
    for row in &z.faces {
        let cone: String =
            np.cone_generators(row.face).iter().map(|&j| vec_label(&np.facets()[j].normal)).collect::<Vec<_>>().join("");
        let mults: Vec<String> = row.pieces.iter().map(|(_, m)| m.to_string()).collect();
        out += &format!(
            "{:<24}{:<22}{:>6}  {:<26}{:>5}  {} | {}\n",
            row.label,
            row.restriction.to_string(),
            row.count.map_or("-".to_string(), |c| c.to_string()),
            cone,
            mults.join(","),
            row.l.reduce().render(),
            row.s.reduce().render()
        );
    }
    out
}

fn poles_text<K: Field>(r: &ReducedZeta<K>) -> String {
    let mut out = String::from("poles\n");
    for c in r.pole_report().classes {
        let state = if c.multiplicity > 0 {
            format!("order {}", c.multiplicity)
        } else if c.survives() {
            format!("partial factors {:?}", c.partial_factors)
        } else {
            "cancelled".to_string()
        };
        out += &format!("  Re s = {}  class {}  atom {}  {state}\n", c.real_part, c.class, c.atom);
    }
    out
}

fn zeta(f: &IntPolynomial, p: u64, lmax: Option<u32>, json_out: bool) -> Result<String, Failure> {
    let np = NewtonPolyhedron::new(f).map_err(input)?;
    let z = local_igusa_zeta(f, p).map_err(input)?;
    let oracle = match lmax {
        Some(l) => {
            let o = series_coefficients_padic(f, p, l).map_err(input)?;
            Some((l, z.reduced.series(l as usize + 1) == o))
        }
        None => None,
    };
    let out = if json_out {
        pretty(&json!({
            "polynomial": f.to_string(), "prime": p, "mode": "concrete",
            "reduced": reduced_json(&z.reduced), "faces": face_rows(&np, &z),
            "oracle": oracle.map(|(l, ok)| json!({"lmax": l, "agrees": ok})),
        }))
    } else {
        let mut s = format!("f = {f}, p = {p}\n\n{}\nZ = {}\n\n{}", face_table(&np, &z), z.reduced.render(), poles_text(&z.reduced));
        if let Some((l, ok)) = oracle {
            s += &format!("\nseries up to t^{l} {} the brute-force count\n", if ok { "matches" } else { "DIFFERS from" });
        }
        s
    };
    match oracle {
        Some((_, false)) => Err(Failure::Verification(out)),
        _ => Ok(out),
    }
}

fn char_zeta(f: &IntPolynomial, p: u64, d: u64, lmax: Option<u32>, json_out: bool) -> Result<String, Failure> {
    let np = NewtonPolyhedron::new(f).map_err(input)?;
    let z = character_zeta(f, p, d).map_err(input)?;
    let oracle = match lmax {
        Some(l) => {
            let o = igusa::oracle::character_series_padic(f, p, d, l).map_err(input)?;
            Some((l, z.reduced.series(l as usize + 1) == o))
        }
        None => None,
    };
    let out = if json_out {
        pretty(&json!({
            "polynomial": f.to_string(), "prime": p, "mode": "character", "character_order": d,
            "reduced": reduced_json(&z.reduced), "faces": face_rows(&np, &z),
            "oracle": oracle.map(|(l, ok)| json!({"lmax": l, "agrees": ok})),
        }))
    } else {
        let mut s = format!(
            "f = {f}, p = {p}, character of order {d} (z{d} = primitive {d}-th root of unity)\n\n{}\nZ = {}\n\n{}",
            face_table(&np, &z),
            z.reduced.render(),
            poles_text(&z.reduced)
        );
        if let Some((l, ok)) = oracle {
            s += &format!("\nseries up to t^{l} {} the brute-force count\n", if ok { "matches" } else { "DIFFERS from" });
        }
        s
    };
    match oracle {
        Some((_, false)) => Err(Failure::Verification(out)),
        _ => Ok(out),
    }
}

fn symbolic_zeta(f: &IntPolynomial, json_out: bool) -> Result<String, Failure> {
    let z = local_igusa_zeta_symbolic(f).map_err(input)?;
    let faces: Vec<Value> = z
        .faces
        .iter()
        .map(|row| {
            json!({
                "face": row.label, "count": row.count.render(&z.names),
                "L": row.l.render(&z.names), "S": row.s.render(&z.names),
            })
        })
        .collect();
    if json_out {
        return Ok(pretty(&json!({
            "polynomial": f.to_string(), "mode": "symbolic", "symbols": z.names[2..].to_vec(),
            "reduced": z.reduced.render(&z.names), "depends_on_symbols": z.depends_on_symbols(), "faces": faces,
        })));
    }
    let mut out = format!("f = {f}, p symbolic (P)\nsymbols: {}\n\n", z.names[2..].join(", "));
    for row in &z.faces {
        out += &format!("{:<24} N = {}\n", row.label, row.count.render(&z.names));
    }
    out += &format!("\nZ = {}\n", z.reduced.render(&z.names));
    if !z.depends_on_symbols() {
        out += "the result does not depend on any count symbol\n";
    }
    Ok(out)
}

fn motivic(f: &IntPolynomial, specialize: Option<u64>, json_out: bool) -> Result<String, Failure> {
    let np = NewtonPolyhedron::new(f).map_err(input)?;
    let m = motivic_local_zeta(f).map_err(input)?;
    let spec = match specialize {
        Some(p) => {
            let vals = m.counted_values(&np, p).map_err(input)?;
            let s = m.specialize(p, &vals).map_err(input)?;
            let padic = local_igusa_zeta(f, p).map_err(input)?.reduced;
            Some((p, s.render(), s == padic))
        }
        None => None,
    };
    if json_out {
        return Ok(pretty(&json!({
            "polynomial": f.to_string(),
            "symbols": m.names[2..].to_vec(),
            "remaining_symbols": m.remaining_symbols(),
            "zeta": m.render(),
            "faces": m.faces.iter().map(|r| json!({
                "face": r.label, "hyperplanes": r.hyperplanes, "class": r.class.render(&m.names),
            })).collect::<Vec<_>>(),
            "nondegenerate_mod": m.checked_primes,
            "specialized": spec.as_ref().map(|(p, s, ok)| json!({"prime": p, "zeta": s, "agrees_with_padic": ok})),
        })));
    }
    let mut out = format!("f = {f}\nsymbols: {}\n\n", m.names[2..].join(", "));
    for r in &m.faces {
        let primed = if r.hyperplanes.is_empty() { "" } else { "'" };
        out += &format!("{:<24} [X{primed}] = {}\n", r.label, r.class.render(&m.names));
    }
    out += &format!("\nZ_mot = {}\n", m.render());
    if let Some((p, s, ok)) = spec {
        out += &format!("\nat p = {p}: {s}\n{}\n", if ok { "equals the p-adic result" } else { "DIFFERS from the p-adic result" });
    }
    Ok(out)
}

fn parse_vector(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Failure::Input(format!("bad vector component {x:?} in {s:?}"))))
        .collect()
}

fn fundpar(vectors: &[String], high: bool, json_out: bool) -> Result<String, Failure> {
    let gens: Vec<Vec<i64>> = vectors.iter().map(|v| parse_vector(v)).collect::<Result<_, _>>()?;
    let cone = SimplicialCone::new(gens.clone()).map_err(input)?;
    let conv = if high { Convention::HalfOpenHigh } else { Convention::HalfOpenLow };
    let pts = cone.enumerate_parallelepiped(conv).map_err(input)?;
    let square3 = gens.len() == 3 && gens.iter().all(|g| g.len() == 3);
    let w = square3.then(|| [0, 1, 2].map(|i| [gens[i][0], gens[i][1], gens[i][2]]));
    let invariants = w.map(|w| h3_invariants(&w)).transpose().map_err(input)?;
    let closed = match (w, high) {
        (Some(w), false) => {
            let mut c: Vec<Vec<i64>> = closed_form_h3(&w).map_err(input)?.into_iter().map(|x| x.0).collect();
            c.sort();
            Some(c == pts.iter().map(|p| p.point.clone()).collect::<Vec<_>>())
        }
        _ => None,
    };
    if json_out {
        return Ok(pretty(&json!({
            "generators": gens,
            "convention": if high { "high" } else { "low" },
            "multiplicity": cone.multiplicity(),
            "points": pts.iter().map(|p| json!({
                "point": p.point, "coefficients": p.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "invariants": invariants,
            "closed_form_agrees": closed,
        })));
    }
    let mut out = format!("mu = {}\n", cone.multiplicity());
    for p in &pts {
        let cs: Vec<String> = p.coeffs.iter().map(|c| c.to_string()).collect();
        out += &format!("  {}  coefficients ({})\n", vec_label(&p.point), cs.join(", "));
    }
    if let Some(inv) = invariants {
        let pr = &inv.profile;
        out += &format!(
            "mu1 = {}, mu2 = {}, mu3 = {}, phi3 = {}, xi = ({}, {}, {})\n",
            pr.mu1, pr.mu2, pr.mu3, pr.phi3, inv.xi1, inv.xi2, inv.xi3
        );
    }
    if let Some(ok) = closed {
        out += &format!("closed form {}\n", if ok { "agrees" } else { "DISAGREES" });
    }
    Ok(out)
}

fn verify(f: &IntPolynomial, p: u64, lmax: u32, seed: u64, cones: usize, json_out: bool) -> Result<String, Failure> {
    let np = NewtonPolyhedron::new(f).map_err(input)?;
    if let Some(w) = nondegeneracy_witness(&np, p).map_err(input)? {
        return Err(Failure::Input(format!("f is degenerate over F_{p} on face {} at {:?}", np.face(w.face).label(), w.point)));
    }
    let mut checks: Vec<(String, bool)> = Vec::new();
    let z = local_igusa_zeta(f, p).map_err(input)?.reduced;
    let oracle = series_coefficients_padic(f, p, lmax).map_err(input)?;
    checks.push((format!("series up to t^{lmax} equals the p-adic count"), z.series(lmax as usize + 1) == oracle));
    let sym = local_igusa_zeta_symbolic(f).map_err(input)?;
    checks.push(("symbolic result specializes".into(), sym.specialize(&np, p).map_err(input)? == z));
    let mot = motivic_local_zeta(f).map_err(input)?;
    let vals = mot.counted_values(&np, p).map_err(input)?;
    checks.push(("motivic result specializes".into(), mot.specialize(p, &vals).map_err(input)? == z));
    let b1 = verify_b1_theorem(f, p).map_err(input)?;
    checks.push((
        format!("B1 criterion and expected orders ({} applicable classes)", b1.applicable().count()),
        b1.all_consistent,
    ));
    let partitions = np.compact_faces().all(|face| {
        let gens: Vec<Vec<i64>> = np.cone_generators(face.id).iter().map(|&j| np.facets()[j].normal.clone()).collect();
        let pieces: Vec<Vec<Vec<i64>>> = np
            .cone_pieces(face.id)
            .iter()
            .map(|pc| pc.iter().map(|&j| np.facets()[j].normal.clone()).collect())
            .collect();
        brute_cone_partition_check(&gens, &pieces, 6)
    });
    checks.push(("face cones are partitioned by their pieces".into(), partitions));
    let mut rng = seeded_rng(seed);
    let mut independent = true;
    for _ in 0..cones {
        let gens = random_cone(&mut rng, 3, 4, 5);
        let mut other = gens.clone();
        other.reverse();
        let ms = |g: &[Vec<i64>]| g.iter().map(|v| v.iter().sum()).collect::<Vec<i64>>();
        let a = cone_sum_at_prime::<BigRational>(&gens, &ms(&gens), &simplicial_decomposition(&gens).map_err(input)?, p)
            .map_err(input)?;
        let b = cone_sum_at_prime::<BigRational>(&other, &ms(&other), &simplicial_decomposition(&other).map_err(input)?, p)
            .map_err(input)?;
        independent &= a.reduce() == b.reduce();
    }
    checks.push((format!("{cones} random cones (seed {seed}) are order independent"), independent));
    let all = checks.iter().all(|c| c.1);
    let out = if json_out {
        pretty(&json!({
            "polynomial": f.to_string(), "prime": p, "lmax": lmax, "seed": seed,
            "checks": checks.iter().map(|(n, ok)| json!({"check": n, "ok": ok})).collect::<Vec<_>>(),
            "ok": all,
        }))
    } else {
        checks.iter().map(|(n, ok)| format!("{} {n}", if *ok { "ok  " } else { "FAIL" })).collect::<Vec<_>>().join("\n")
    };
    if all {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}
