//! One function per subcommand. Each returns the JSON value to print.

use std::collections::BTreeSet;

use maxplus::{
    cell_dimension, dual_polar, enumerate_minimal_coverings, enumerate_vertices, face,
    hrep_to_vrep, is_extreme_polar, is_minimal_halfspace, is_vertex, padovan, polar_extremes,
    separate, sperner_bound, support_vectors, type_of, vrep_to_hrep, Cone, HalfSpace,
    MinimalityCertificate, PolarCertificate, Residual, Separation, TropVector, TypeVector,
};
use serde_json::{json, Value};

use crate::document::{parse_point, scalars, Document, HalfSpaceDoc, PolarDoc};
use crate::{read_file, Cli, CliError, Command};

type Out = Result<Value, CliError>;

pub fn dispatch(cli: &Cli, read_input: &mut dyn FnMut() -> Result<String, CliError>) -> Out {
    let mut input = || -> Result<Document, CliError> { Document::parse(&read_input()?) };
    match cli.command {
        Command::Padovan { n } => Ok(json!({ "value": padovan(n)?.to_string().parse::<Value>().unwrap() })),
        Command::Sperner { n } => Ok(json!({ "value": sperner_bound(n)?.to_string().parse::<Value>().unwrap() })),
        Command::Vrep2hrep => vrep2hrep(&input()?.to_cone()?),
        Command::Hrep2vrep => {
            let (dim, hs) = input()?.to_halfspaces()?;
            document(Document::from_cone(&hrep_to_vrep(&hs, dim)?.sorted()))
        }
        Command::Reduce => document(Document::from_cone(&input()?.to_cone()?.reduce().sorted())),
        Command::Member => member(cli, input()?),
        Command::Type => type_cmd(&input()?.to_cone()?, &point(cli)?),
        Command::MinimalCheck => minimal_check(&input()?.to_cone()?, &with_halfspaces(cli)?),
        Command::MinimalAtApex => minimal_at_apex(cli, &input()?.to_cone()?, &point(cli)?),
        Command::Vertices => vertices(cli, &input()?.to_cone()?),
        Command::Separate => separate_cmd(cli, &input()?.to_cone()?, &point(cli)?),
        Command::Decompose => document(Document::from_polyhedron(&input()?.to_polyhedron()?.decompose().sorted())),
        Command::Recession => document(Document::from_cone(&input()?.to_polyhedron()?.recession_cone().sorted())),
        Command::PolarExtremes => {
            let c = input()?.to_cone()?;
            document(Document::from_polar(c.dim(), &polar_extremes(&c)?))
        }
        Command::PolarCheck => polar_check(&input()?.to_cone()?, cli),
        Command::Face => face_cmd(&input()?.to_cone()?, &with_halfspaces(cli)?),
    }
}

fn document(d: Document) -> Out {
    serde_json::to_value(d).map_err(|e| CliError::Io(e.to_string()))
}

fn with_document(cli: &Cli) -> Result<Document, CliError> {
    let path = cli
        .with
        .as_ref()
        .ok_or_else(|| CliError::Input("this command needs a second document via --with FILE".into()))?;
    Document::parse(&read_file(path)?)
}

fn point(cli: &Cli) -> Result<TropVector, CliError> {
    match (&cli.point, &cli.with) {
        (Some(text), _) => parse_point(text),
        (None, Some(_)) => with_document(cli)?.to_point(),
        (None, None) => Err(CliError::Input(
            "this command needs a point via --point LIST or --with FILE".into(),
        )),
    }
}

fn with_halfspaces(cli: &Cli) -> Result<Vec<HalfSpace>, CliError> {
    Ok(with_document(cli)?.to_halfspaces()?.1)
}

fn vector(x: &TropVector) -> Value {
    json!(scalars(x))
}

fn one_based(set: &BTreeSet<usize>) -> Value {
    json!(set.iter().map(|k| k + 1).collect::<Vec<_>>())
}

fn type_json(s: &TypeVector) -> Value {
    json!(s.sets().iter().map(one_based).collect::<Vec<_>>())
}

fn halfspace_json(h: &HalfSpace) -> Value {
    json!(HalfSpaceDoc::from_halfspace(h))
}

fn same_dim(cone: &Cone, x: &TropVector) -> Result<(), CliError> {
    if cone.dim() == x.dim() {
        Ok(())
    } else {
        Err(CliError::Input(format!(
            "point has {} entries, the cone has dimension {}",
            x.dim(),
            cone.dim()
        )))
    }
}

fn vrep2hrep(c: &Cone) -> Out {
    document(Document::from_halfspaces(c.dim(), &vrep_to_hrep(c)?))
}

fn member(cli: &Cli, doc: Document) -> Out {
    let x = point(cli)?;
    if let Document::Polyhedron { .. } = doc {
        let p = doc.to_polyhedron()?;
        return Ok(json!({ "member": p.member(&x)? }));
    }
    let c = doc.to_cone()?;
    same_dim(&c, &x)?;
    let projection = c.project(&x)?;
    Ok(json!({ "member": projection == x, "projection": vector(&projection) }))
}

fn type_cmd(c: &Cone, x: &TropVector) -> Out {
    same_dim(c, x)?;
    let s = type_of(x, c)?;
    Ok(json!({
        "type": type_json(&s),
        "cell_dimension": cell_dimension(&s),
        "vertex": cell_dimension(&s) == 1,
        "in_cone": s.sets().iter().all(|sj| !sj.is_empty()),
    }))
}

fn certificate_json(c: &MinimalityCertificate) -> Value {
    match c {
        MinimalityCertificate::Minimal { lhs_links, rhs_links } => json!({
            "kind": "minimal",
            "lhs_links": lhs_links
                .iter()
                .map(|&(i, j, r)| json!({ "lhs": i + 1, "rhs": j + 1, "generator": r + 1 }))
                .collect::<Vec<_>>(),
            "rhs_links": rhs_links
                .iter()
                .map(|&(j, i, r)| json!({ "rhs": j + 1, "lhs": i + 1, "generator": r + 1 }))
                .collect::<Vec<_>>(),
        }),
        MinimalityCertificate::WholeSpace => json!({
            "kind": "whole_space",
            "condition": "the left-hand side is empty, so the half-space is the whole space",
        }),
        MinimalityCertificate::Uncovered { generators } => json!({
            "kind": "uncovered",
            "generators": generators.iter().map(|r| r + 1).collect::<Vec<_>>(),
            "condition": "covering: every generator must appear in S_j(apex) for some right-hand index j",
        }),
        MinimalityCertificate::UnlinkedLhs { index } => json!({
            "kind": "unlinked_lhs",
            "index": index + 1,
            "condition": "condition (i): S_i(apex) must meet S_j(apex) for some right-hand index j",
        }),
        MinimalityCertificate::RedundantRhs { index } => json!({
            "kind": "redundant_rhs",
            "index": index + 1,
            "condition": "condition (ii): some generator in S_i ∩ S_j must avoid every other right-hand S_k",
        }),
    }
}

fn minimal_check(c: &Cone, hs: &[HalfSpace]) -> Out {
    let reports = hs
        .iter()
        .map(|h| {
            let r = is_minimal_halfspace(h, c)?;
            Ok(json!({
                "minimal": r.minimal,
                "halfspace": halfspace_json(h),
                "apex": vector(&r.apex),
                "type": type_json(&r.type_vector),
                "certificate": certificate_json(&r.certificate),
            }))
        })
        .collect::<Result<Vec<Value>, CliError>>()?;
    match <[Value; 1]>::try_from(reports) {
        Ok([single]) => Ok(single),
        Err(many) => Ok(json!({ "results": many })),
    }
}

fn minimal_at_apex(cli: &Cli, c: &Cone, apex: &TropVector) -> Out {
    same_dim(c, apex)?;
    let coverings = enumerate_minimal_coverings(apex, c)?
        .into_iter()
        .map(|j| {
            let h = HalfSpace::from_apex(apex, &j)?;
            let minimal = is_minimal_halfspace(&h, c)?.minimal;
            Ok(json!({ "rhs": one_based(&j), "halfspace": halfspace_json(&h), "minimal": minimal }))
        })
        .collect::<Result<Vec<Value>, CliError>>()?;
    let mut out = json!({
        "apex": vector(apex),
        "type": type_json(&type_of(apex, c)?),
        "coverings": coverings,
    });
    if cli.emit_plot_data {
        out["plot_data"] = json!({
            "apex": vector(&apex.pinned_first()),
            "generators": c.generators().iter().map(|g| vector(&g.pinned_first())).collect::<Vec<_>>(),
        });
    }
    Ok(out)
}

fn vertices(cli: &Cli, c: &Cone) -> Out {
    let vs = enumerate_vertices(c, cli.budget)?;
    let mut out = json!({ "vertices": vs.iter().map(vector).collect::<Vec<_>>() });
    if cli.emit_plot_data {
        out["plot_data"] = json!(vs.iter().map(|v| vector(&v.pinned_first())).collect::<Vec<_>>());
    }
    Ok(out)
}

fn residual_json(r: &Residual) -> Value {
    match r {
        Residual::Top => json!("top"),
        Residual::Value(v) => json!(v.to_string()),
    }
}

fn separate_cmd(cli: &Cli, c: &Cone, y: &TropVector) -> Out {
    same_dim(c, y)?;
    Ok(match separate(y, c, cli.budget)? {
        Separation::Member { coefficients } => json!({
            "member": true,
            "coefficients": coefficients.iter().map(residual_json).collect::<Vec<_>>(),
        }),
        Separation::Separated {
            halfspace,
            apex,
            projection,
        } => json!({
            "member": false,
            "halfspace": halfspace_json(&halfspace),
            "apex": vector(&apex),
            "apex_is_vertex": is_vertex(&apex, c)?,
            "projection": vector(&projection),
        }),
    })
}

fn polar_certificate_json(c: &PolarCertificate) -> Value {
    match c {
        PolarCertificate::TrivialRhs { index } => json!({ "kind": "trivial_rhs", "index": index + 1 }),
        PolarCertificate::Tautology { index } => json!({ "kind": "tautology", "index": index + 1 }),
        PolarCertificate::Supported { index, witnesses } => json!({
            "kind": "supported",
            "index": index + 1,
            "witnesses": witnesses
                .iter()
                .map(|(j, r)| ((j + 1).to_string(), json!(r + 1)))
                .collect::<serde_json::Map<_, _>>(),
        }),
        PolarCertificate::NotStarShaped => json!({
            "kind": "not_star_shaped",
            "condition": "extremes have the form (0, e^j) or (e^i, b) with b_i = -inf, up to scaling",
        }),
        PolarCertificate::Slack { index, slack } => json!({
            "kind": "slack",
            "index": index + 1,
            "slack": slack + 1,
            "condition": "every right-hand coefficient needs a generator tight at that term alone",
        }),
    }
}

fn polar_check(c: &Cone, cli: &Cli) -> Out {
    let (dim, ws) = with_document(cli)?.to_polar()?;
    if dim != c.dim() {
        return Err(CliError::Input(format!(
            "polar vectors have dimension {dim}, the cone {}",
            c.dim()
        )));
    }
    let results = ws
        .iter()
        .map(|w| {
            if !w.is_member(c) {
                return Ok(json!({ "vector": PolarDoc::from_polar(w), "in_polar": false, "extreme": false }));
            }
            let cert = is_extreme_polar(w, c)?;
            let mut out = json!({
                "vector": PolarDoc::from_polar(w),
                "in_polar": true,
                "extreme": cert.is_extreme(),
                "certificate": polar_certificate_json(&cert),
            });
            if cert.is_extreme() {
                let support: BTreeSet<usize> = support_vectors(w, c)?.into_iter().collect();
                out["support"] = one_based(&support);
            }
            Ok(out)
        })
        .collect::<Result<Vec<Value>, CliError>>()?;
    // The polar vectors cut out a cone of their own; report whether it is V.
    let cut_out = dual_polar(&ws, dim)?;
    Ok(json!({ "results": results, "defines_cone": cut_out.projectively_equal(c) }))
}

fn face_cmd(c: &Cone, hs: &[HalfSpace]) -> Out {
    let [h] = hs else {
        return Err(CliError::Input(format!("face takes exactly one half-space, got {}", hs.len())));
    };
    if !h.contains_cone(c) {
        return Err(CliError::Lib(maxplus::Error::Domain(format!("{h} does not contain the cone"))));
    }
    document(Document::from_cone(&face(c, h)?.sorted()))
}
