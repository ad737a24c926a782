use crate::{CatalogAction, Cli, Command, Method, PresAction, VerificationFailed};
use anyhow::{bail, Context, Result};
use mcg_core::catalog::{verify_catalog, verify_entry, Catalog, ClaimStatus, EntryReport};
use mcg_core::complex::{
    build_maximal_tree, build_quotient_complex, determinability_closure, enumerate_orbit_simplices,
    g1_symbolic_complex, vertex_orbit_census, ComplexDocument,
};
use mcg_core::diagram::{orbit_equal, CutDiagram};
use mcg_core::pres::abelian::{abelian_consequence_check, abelianize};
use mcg_core::pres::brown::{brown_assembly, BrownData, BrownError};
use mcg_core::pres::rs::reidemeister_schreier_index2;
use mcg_core::pres::todd_coxeter::{todd_coxeter, TcError};
use mcg_core::pres::{parse_relation, parse_word, Presentation};
use mcg_core::surface::is_sporadic;
use serde_json::json;
use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_presentation(path: &Path) -> Result<Presentation> {
    Presentation::parse_any(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split(';').map(str::trim).filter(|w| !w.is_empty())
}

fn emit(json: bool, value: serde_json::Value, text: String) {
    if json {
        println!("{value}");
    } else {
        print!("{text}");
    }
}

pub fn run(cli: &Cli) -> Result<()> {
    let js = cli.json;
    match &cli.command {
        Command::Census { genus, boundary, dim, method, max_candidates } => {
            census(js, *genus, *boundary, *dim, *method, *max_candidates)
        }
        Command::OrbitEq { a, b, ordered } => {
            let d1 = CutDiagram::from_json_str(&read(a)?).with_context(|| format!("in {}", a.display()))?;
            let d2 = CutDiagram::from_json_str(&read(b)?).with_context(|| format!("in {}", b.display()))?;
            let m = orbit_equal(&d1, &d2, *ordered)?;
            let mut text = format!("equivalent: {}\n", m.equivalent);
            if let Some(w) = &m.witness {
                let parts: Vec<String> = w.iter().enumerate().map(|(k, j)| format!("{}->{j}", k + 1)).collect();
                text.push_str(&format!("witness: {}\n", parts.join(" ")));
            }
            emit(js, serde_json::to_value(&m)?, text);
            Ok(())
        }
        Command::Complex { genus, boundary, g1_symbolic, out, max_candidates } => {
            let x = if *g1_symbolic {
                if *genus != 1 {
                    bail!("--g1-symbolic needs --genus 1");
                }
                g1_symbolic_complex(*boundary)?
            } else {
                build_quotient_complex(*genus, *boundary, *max_candidates)?
            };
            let counts = (x.vertices.len(), x.edges.len(), x.triangles.len());
            let doc = ComplexDocument::new(x, vec![], vec![]);
            fs::write(out, serde_json::to_string(&doc)?).with_context(|| format!("cannot write {}", out.display()))?;
            emit(
                js,
                json!({"vertices": counts.0, "edges": counts.1, "triangles": counts.2, "out": out}),
                format!(
                    "vertices: {}\nedges: {}\ntriangles: {}\nwritten: {}\n",
                    counts.0,
                    counts.1,
                    counts.2,
                    out.display()
                ),
            );
            Ok(())
        }
        Command::Tree { input, genus, boundary, out } => tree(js, input, *genus, *boundary, out.as_deref()),
        Command::Pres { action } => pres(js, action),
        Command::Catalog { action } => catalog(js, action),
    }
}

fn census(js: bool, g: u32, n: u32, dim: usize, method: Method, cap: u64) -> Result<()> {
    if dim == 0 {
        bail!("--dim must be at least 1");
    }
    if dim > 1 && method != Method::Enumerate {
        bail!("the closed formula counts single curves only; use --method enumerate for --dim {dim}");
    }
    let formula = match method {
        Method::Enumerate => None,
        _ => Some(vertex_orbit_census(g, n)?),
    };
    let enumerated = match method {
        Method::Formula => None,
        _ => Some(enumerate_orbit_simplices(g, n, dim, cap)?.len() as u64),
    };
    let total = formula.map(|c| c.total).or(enumerated).expect("one method ran");
    let mut text = String::new();
    if let Some(c) = &formula {
        text.push_str(&format!(
            "non-separating, orientable complement: {}\nnon-separating, non-orientable complement: {}\nseparating: {}\nformula: {}\n",
            c.nonsep_orientable_complement, c.nonsep_nonorientable_complement, c.separating, c.total
        ));
    }
    if let Some(e) = enumerated {
        text.push_str(&format!("enumerated: {e}\n"));
    }
    text.push_str(&format!("total: {total}\n"));
    emit(
        js,
        json!({"genus": g, "boundary": n, "dim": dim, "formula": formula, "enumerated": enumerated, "total": total}),
        text,
    );
    if let (Some(c), Some(e)) = (formula, enumerated) {
        if c.total != e {
            return Err(VerificationFailed(format!("formula gives {} orbits, enumeration {e}", c.total)).into());
        }
    }
    Ok(())
}

fn tree(js: bool, input: &Path, g: u32, n: u32, out: Option<&Path>) -> Result<()> {
    let doc: ComplexDocument =
        serde_json::from_str(&read(input)?).with_context(|| format!("in {}", input.display()))?;
    let x = doc.complex();
    x.check()?;
    if x.target.genus != g || x.target.boundary != n {
        bail!("{} holds a complex of {}, not of genus {g} with {n} boundaries", input.display(), x.target);
    }
    let t = build_maximal_tree(&x, g, n)?;
    let det = determinability_closure(&x, &t);
    let (e, tn, dn) = (x.edges.len(), t.len(), det.len());
    let all = dn == e;
    let text = if all {
        format!("tree: {tn}\ndeterminable: ALL (edges={e}, tree={tn})\n")
    } else {
        format!("tree: {tn}\ndeterminable: {dn} of {e} (tree={tn})\n")
    };
    emit(js, json!({"tree": t, "tree_edges": tn, "determinable_edges": dn, "edges": e, "all": all}), text);
    if let Some(path) = out {
        let doc = ComplexDocument::new(x, t, det.into_iter().collect());
        fs::write(path, serde_json::to_string(&doc)?).with_context(|| format!("cannot write {}", path.display()))?;
    }
    if !all && !is_sporadic(g, n) {
        return Err(VerificationFailed(format!("only {dn} of {e} edges are determinable")).into());
    }
    Ok(())
}

fn parse_signs(list: &str) -> Result<BTreeMap<String, i8>> {
    let mut out = BTreeMap::new();
    for part in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, v) = part.split_once('=').with_context(|| format!("bad sign `{part}`, expected NAME=±1"))?;
        let v: i8 = v.trim().trim_start_matches('+').parse().with_context(|| format!("bad sign value in `{part}`"))?;
        out.insert(name.trim().to_string(), v);
    }
    Ok(out)
}

fn pres(js: bool, action: &PresAction) -> Result<()> {
    match action {
        PresAction::Abelianize { file } => {
            let p = read_presentation(file)?;
            let a = abelianize(&p);
            let torsion: Vec<String> = a.torsion.iter().map(|t| t.to_string()).collect();
            emit(js, json!({"free_rank": a.free_rank, "torsion": torsion, "group": a.to_string()}), format!("{a}\n"));
        }
        PresAction::Rs { file, sign } => {
            let p = read_presentation(file)?;
            let r = reidemeister_schreier_index2(&p, &parse_signs(sign)?)?;
            let mut text = String::new();
            for (name, w) in &r.definitions {
                text.push_str(&format!("# {name} = {w}\n"));
            }
            text.push_str(&r.presentation.to_text());
            let defs: BTreeMap<&str, String> = r.definitions.iter().map(|(n, w)| (n.as_str(), w.to_string())).collect();
            emit(js, json!({"presentation": r.presentation.to_json(), "definitions": defs}), text);
        }
        PresAction::Tc { file, subgroup, max_cosets } => {
            let p = read_presentation(file)?;
            let words =
                split_list(subgroup).map(parse_word).collect::<Result<Vec<_>, _>>().map_err(anyhow::Error::msg)?;
            match todd_coxeter(&p, &words, *max_cosets) {
                Ok(k) => emit(js, json!({"index": k}), format!("index: {k}\n")),
                Err(TcError::OutOfBounds(m)) => {
                    emit(js, json!({"index": null, "out_of_bounds": m}), format!("OutOfBounds ({m} cosets)\n"))
                }
                Err(e) => return Err(e.into()),
            }
        }
        PresAction::Consequences { file, words } => {
            let p = read_presentation(file)?;
            let mut rows = Vec::new();
            for item in split_list(words) {
                let ws = parse_relation(item).map_err(anyhow::Error::msg)?;
                for w in &ws {
                    if let Some(g) = w.generators().into_iter().find(|g| !p.has_generator(g)) {
                        bail!("`{g}` is not a generator");
                    }
                }
                rows.push((item.to_string(), abelian_consequence_check(&p, &ws).iter().all(|&b| b)));
            }
            let text: String =
                rows.iter().map(|(w, ok)| format!("{}: {w}\n", if *ok { "holds" } else { "fails" })).collect();
            emit(
                js,
                json!(rows.iter().map(|(w, ok)| json!({"word": w, "holds_in_abelianization": ok})).collect::<Vec<_>>()),
                text,
            );
        }
        PresAction::Assemble { file, reduce } => {
            let d: BrownData = serde_json::from_str(&read(file)?).with_context(|| format!("in {}", file.display()))?;
            match brown_assembly(&d, *reduce) {
                Ok(p) => emit(js, p.to_json(), p.to_text()),
                Err(BrownError::NotDeterminable { partial, stuck }) => {
                    emit(js, json!({"partial": partial.to_json(), "stuck": stuck}), partial.to_text());
                    return Err(VerificationFailed(format!("edges {stuck:?} are not determinable")).into());
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(())
}

fn report_text(r: &EntryReport) -> String {
    let mut s = format!("{}\n", r.id);
    for c in &r.claims {
        s.push_str(&format!("  {:<7} {} [{}]\n", c.status.to_string(), c.claim, c.detail));
    }
    s
}

fn catalog(js: bool, action: &CatalogAction) -> Result<()> {
    let cat = Catalog::default();
    match action {
        CatalogAction::List => {
            let mut text = String::new();
            let mut rows = Vec::new();
            for e in &cat.entries {
                let p = cat.presentation(&e.id)?;
                let (g, n) = e.surface.gn();
                let gn = match (g, n) {
                    (Some(g), Some(n)) => format!("({g},{n})"),
                    _ => "-".into(),
                };
                text.push_str(&format!(
                    "{:<10} {:<7} gens={:<2} rels={:<3} {}\n",
                    e.id,
                    gn,
                    p.generators.len(),
                    p.relators.len(),
                    e.theorem
                ));
                rows.push(json!({"entry-id": e.id, "g": g, "n": n, "generators": p.generators, "relators": p.relators.len(), "theorem": e.theorem}));
            }
            emit(js, json!(rows), text);
        }
        CatalogAction::Verify { entry } => {
            let reports = match entry {
                Some(id) => {
                    cat.get(id)?;
                    vec![verify_entry(id)]
                }
                None => verify_catalog().entries,
            };
            let count = |s| reports.iter().flat_map(|r| &r.claims).filter(|c| c.status == s).count();
            let (pass, fail, unknown) =
                (count(ClaimStatus::Pass), count(ClaimStatus::Fail), count(ClaimStatus::Unknown));
            let mut text: String = reports.iter().map(report_text).collect();
            text.push_str(&format!("pass: {pass}, fail: {fail}, unknown: {unknown}\n"));
            emit(js, json!({"entries": reports, "pass": pass, "fail": fail, "unknown": unknown}), text);
            if fail > 0 {
                return Err(VerificationFailed(format!("{fail} catalog claims failed")).into());
            }
        }
        CatalogAction::Export { dir } => {
            fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
            for e in &cat.entries {
                let path = dir.join(format!("{}.pres", e.id));
                fs::write(&path, cat.export_text(&e.id)?)
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            let index = dir.join("catalog.json");
            fs::write(&index, serde_json::to_string_pretty(&cat.index_json())? + "\n")?;
            emit(
                js,
                json!({"entries": cat.entries.len(), "dir": dir}),
                format!("wrote {} entries to {}\n", cat.entries.len(), dir.display()),
            );
        }
    }
    Ok(())
}
