//! The E6 root datum: Cartan matrix, roots in simple-root coordinates,
//! Smith normal form of the Cartan matrix, Chevalley structure constants and
//! the diagram automorphism.

mod cartan;
mod roots;
mod snf;
mod structure;

pub use cartan::{build_cartan_e6, CartanMatrix, E6_EDGES};
pub use roots::{generate_root_system, generate_root_system_bounded, Root, RootSystem};
pub use snf::{smith_normal_form, SmithDecomposition};
pub use structure::{dagger_permutation, extraspecial_pair, graph_signs, structure_constants, StructureConstants};

use crate::Case;

pub fn dagger_automorphism(rs: &RootSystem, case: Case) -> Vec<usize> {
    dagger_permutation(rs, case == Case::Twisted)
}

/// TSV listing of the roots: `index`, `coords`, `height`.
pub fn roots_tsv(rs: &RootSystem) -> String {
    let mut out = String::from("index\tcoords\theight\n");
    for r in rs.roots() {
        let coords: Vec<String> = r.coords.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("{}\t{}\t{}\n", r.index, coords.join(","), r.height));
    }
    out
}

/// TSV listing of the structure constants: `a`, `b`, `a+b`, `N`.
pub fn structure_tsv(rs: &RootSystem, nc: &StructureConstants) -> String {
    let mut out = String::from("a\tb\tsum\tN\n");
    for a in 0..rs.len() {
        for b in 0..rs.len() {
            if let (Some(n), Some(c)) = (nc.get(a, b), rs.sum(a, b)) {
                out.push_str(&format!("{a}\t{b}\t{c}\t{n}\n"));
            }
        }
    }
    out
}
