//! Lattice-point generating functions of rational polyhedra: Brion's
//! identity over vertex cones, a placing triangulation, and Barvinok's signed
//! decomposition into unimodular cones.

mod decompose;
mod triangulate;

pub use decompose::{cone_rgf, decompose_unimodular, SignedUnimodularCone};
pub use triangulate::triangulate;

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{int_to_rat, rat, solve_integer_system, IntVector, RationalPoint};
use crate::polytope::{cone_extreme_rays, Cone, Polyhedron, Polytope};
use crate::rgf::{substitute_monomial, MonomialMap, ShortRGF};

/// Generating function `sum_{a in P, a integral} x^a`; zero for empty `P`.
pub fn polytope_rgf(p: &Polytope) -> ShortRGF {
    if p.is_empty() {
        return ShortRGF::zero(p.dim());
    }
    pointed_rgf(p.hrep(), &p.vertices().vertices, &[])
}

/// Generating function of the lattice points of a pointed polyhedron,
/// possibly unbounded or lower dimensional.
pub fn polyhedron_rgf(ph: &Polyhedron) -> Result<ShortRGF> {
    if !ph.is_pointed() {
        return Err(Error::NonPointedCone);
    }
    let vertices = ph.vertices();
    if vertices.is_empty() {
        return Ok(ShortRGF::zero(ph.dim));
    }
    let rays = ph.recession_rays();
    Ok(pointed_rgf(ph, &vertices, &rays))
}

fn pointed_rgf(ph: &Polyhedron, vertices: &[RationalPoint], rays: &[IntVector]) -> ShortRGF {
    let eqs = ph.implicit_equalities(vertices, rays);
    if eqs.is_empty() {
        let cones = vertex_decomposition(ph, vertices);
        let mut f = ShortRGF::zero(ph.dim);
        f.extend_terms(cones.iter().map(cone_rgf));
        return f.consolidate();
    }

    // integer points of the affine hull: x0 + K nu
    let rows: Vec<IntVector> = eqs.iter().map(|&i| ph.rows[i].0.clone()).collect();
    let rhs: Vec<BigInt> = eqs.iter().map(|&i| ph.rows[i].1.clone()).collect();
    let Some(sol) = solve_integer_system(&rows, &rhs, ph.dim) else {
        return ShortRGF::zero(ph.dim);
    };
    let k = sol.kernel.len();
    let x0 = sol.particular;
    let inner = if k == 0 {
        if ph.contains_int(&x0) {
            ShortRGF::constant(0, rat(1))
        } else {
            ShortRGF::zero(0)
        }
    } else {
        let reduced_rows = ph
            .rows
            .iter()
            .enumerate()
            .filter(|(i, _)| !eqs.contains(i))
            .map(|(_, (c, b))| {
                let ck = IntVector::new(sol.kernel.iter().map(|col| c.dot(col)).collect());
                (ck, b - c.dot(&x0))
            })
            .filter(|(ck, _)| !ck.is_zero())
            .collect();
        polyhedron_rgf(&Polyhedron::new(k, reduced_rows)).expect("preimage of a pointed polyhedron is pointed")
    };
    let map = MonomialMap::new(sol.kernel, ph.dim);
    substitute_monomial(&inner, &map)
        .and_then(|g| g.shift(&x0))
        .expect("injective lattice map has no poles")
        .consolidate()
}

/// Signed unimodular cones whose generating functions sum, by Brion's
/// identity, to that of a full-dimensional pointed polyhedron.
pub fn vertex_decomposition(ph: &Polyhedron, vertices: &[RationalPoint]) -> Vec<SignedUnimodularCone> {
    let d = ph.dim;
    let mut out = Vec::new();
    for v in vertices {
        if d == 0 {
            out.push(SignedUnimodularCone { sign: 1, apex: v.clone(), generators: Vec::new(), closed: Vec::new() });
            continue;
        }
        let tight: Vec<IntVector> = ph.tight_rows(v).into_iter().map(|i| ph.rows[i].0.clone()).collect();
        let gens = cone_extreme_rays(&tight, d);
        let reference = gens.iter().fold(IntVector::zeros(d), |acc, g| acc.add(g));
        let cone = Cone::new(v.clone(), gens);
        for simplex in triangulate(&cone).expect("vertex cones are pointed and full dimensional") {
            out.extend(decompose::decompose_with(&simplex, &reference).expect("simplices are nondegenerate"));
        }
    }
    out
}

/// Vertex cones of `tP` for every `t`: the decomposition of `P` with apexes
/// scaled.
pub fn dilate_decomposition(cones: &[SignedUnimodularCone], t: &BigInt) -> Vec<SignedUnimodularCone> {
    let tr = int_to_rat(t);
    cones
        .iter()
        .map(|c| c.with_apex(c.apex.iter().map(|x| x * &tr).collect()))
        .collect()
}
