//! The combinatorial automorphism group, flag orbits, and the modified
//! Schläfli symbol.
//!
//! An automorphism is a flag permutation commuting with every adjacency
//! involution; on a valid lattice this is the same thing as an
//! inclusion-preserving bijection of the faces. The group is found by
//! propagation: for each candidate image of the base flag, extend the map
//! along a spanning tree of the flag graph and accept when every adjacency
//! edge is preserved. The action is free, so an element is pinned down by the
//! image of the base flag alone; full permutations are materialized lazily.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::flags::{chains_of_cotype, FlagGraph, FlagId};
use crate::lattice::{FaceId, FaceLattice, Rank};

/// One automorphism, determined by where it sends the base flag.
pub struct Automorphism {
    base_image: FlagId,
    flag_perm: OnceLock<Vec<FlagId>>,
    face_perm: OnceLock<Vec<FaceId>>,
}

impl Automorphism {
    pub fn base_image(&self) -> FlagId {
        self.base_image
    }
}

/// Breadth-first spanning tree of the flag graph rooted at the base flag.
/// `order` lists flags root-first; every non-root flag records the tree edge
/// it was discovered through.
struct SearchTree {
    order: Vec<FlagId>,
    parent: Vec<FlagId>,
    color: Vec<u8>,
}

impl SearchTree {
    fn grow(graph: &FlagGraph, root: FlagId) -> SearchTree {
        let n = graph.flag_count();
        let mut order = Vec::with_capacity(n);
        let mut parent = vec![0 as FlagId; n];
        let mut color = vec![0u8; n];
        let mut seen = vec![false; n];
        seen[root as usize] = true;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let f = order[head];
            head += 1;
            for c in 0..graph.color_count() {
                let g = graph.adjacent_unchecked(f, c);
                if !seen[g as usize] {
                    seen[g as usize] = true;
                    parent[g as usize] = f;
                    color[g as usize] = c as u8;
                    order.push(g);
                }
            }
        }
        SearchTree {
            order,
            parent,
            color,
        }
    }

    /// Adjacency word leading from the root to `flag`, root end first.
    fn word_to(&self, root: FlagId, mut flag: FlagId, out: &mut Vec<u8>) {
        out.clear();
        while flag != root {
            out.push(self.color[flag as usize]);
            flag = self.parent[flag as usize];
        }
        out.reverse();
    }
}

/// The full automorphism group as an explicit element list, sorted by the
/// image of the base flag.
pub struct AutomorphismGroup {
    base_flag: FlagId,
    elements: Vec<Automorphism>,
    by_image: HashMap<FlagId, usize>,
    tree: SearchTree,
}

/// Computes the automorphism group of a flag graph built from a valid
/// lattice.
///
/// Every flag is tried as an image of the base flag; failed propagations are
/// discarded. The element order (ascending base image) is deterministic and
/// independent of any evaluation order.
pub fn automorphism_group(graph: &FlagGraph) -> AutomorphismGroup {
    let base: FlagId = 0;
    let tree = SearchTree::grow(graph, base);
    let n = graph.flag_count();
    let mut image = vec![0 as FlagId; n];
    let mut elements = Vec::new();
    for target in 0..n as FlagId {
        if propagate(graph, &tree, target, &mut image) {
            elements.push(Automorphism {
                base_image: target,
                flag_perm: OnceLock::new(),
                face_perm: OnceLock::new(),
            });
        }
    }
    let by_image = elements
        .iter()
        .enumerate()
        .map(|(i, a)| (a.base_image, i))
        .collect();
    AutomorphismGroup {
        base_flag: base,
        elements,
        by_image,
        tree,
    }
}

/// Extends `base -> target` along the spanning tree and checks that every
/// adjacency edge commutes with the resulting map.
fn propagate(graph: &FlagGraph, tree: &SearchTree, target: FlagId, image: &mut [FlagId]) -> bool {
    image[tree.order[0] as usize] = target;
    for &f in &tree.order[1..] {
        let p = tree.parent[f as usize];
        let c = tree.color[f as usize] as usize;
        image[f as usize] = graph.adjacent_unchecked(image[p as usize], c);
    }
    for f in 0..graph.flag_count() as FlagId {
        for c in 0..graph.color_count() {
            if image[graph.adjacent_unchecked(f, c) as usize]
                != graph.adjacent_unchecked(image[f as usize], c)
            {
                return false;
            }
        }
    }
    true
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn base_flag(&self) -> FlagId {
        self.base_flag
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.elements.len()
    }

    pub fn base_image(&self, element: usize) -> FlagId {
        self.elements[element].base_image
    }

    /// Index of the identity element.
    pub fn identity(&self) -> usize {
        self.by_image[&self.base_flag]
    }

    /// Images of the base flag across the group, ascending: the base flag's
    /// orbit.
    pub fn base_orbit(&self) -> impl Iterator<Item = FlagId> + '_ {
        self.elements.iter().map(|a| a.base_image)
    }

    /// The full flag permutation of an element, materialized on first use.
    pub fn flag_perm(&self, graph: &FlagGraph, element: usize) -> &[FlagId] {
        self.elements[element].flag_perm.get_or_init(|| {
            let mut image = vec![0 as FlagId; graph.flag_count()];
            image[self.tree.order[0] as usize] = self.elements[element].base_image;
            for &f in &self.tree.order[1..] {
                let p = self.tree.parent[f as usize];
                let c = self.tree.color[f as usize] as usize;
                image[f as usize] = graph.adjacent_unchecked(image[p as usize], c);
            }
            image
        })
    }

    /// The induced rank-preserving face bijection of an element.
    pub fn face_perm(&self, graph: &FlagGraph, element: usize) -> &[FaceId] {
        self.elements[element].face_perm.get_or_init(|| {
            let perm = self.flag_perm(graph, element);
            (0..graph.face_count() as FaceId)
                .map(|face| {
                    let image_flag = perm[graph.rep_flag(face) as usize];
                    graph.flag(image_flag)[graph.face_slot(face)]
                })
                .collect()
        })
    }

    /// `element(flag)` without materializing the permutation: follows the
    /// tree word from the base flag.
    pub fn image_of_flag(&self, graph: &FlagGraph, element: usize, flag: FlagId) -> FlagId {
        if let Some(perm) = self.elements[element].flag_perm.get() {
            return perm[flag as usize];
        }
        let mut word = Vec::new();
        self.tree.word_to(self.base_flag, flag, &mut word);
        let mut current = self.elements[element].base_image;
        for &c in &word {
            current = graph.adjacent_unchecked(current, c as usize);
        }
        current
    }

    /// `element(face)` via a representative flag.
    pub fn image_of_face(&self, graph: &FlagGraph, element: usize, face: FaceId) -> FaceId {
        if let Some(perm) = self.elements[element].face_perm.get() {
            return perm[face as usize];
        }
        let image_flag = self.image_of_flag(graph, element, graph.rep_flag(face));
        graph.flag(image_flag)[graph.face_slot(face)]
    }

    /// The element carrying `from` to `to`, if any. Unique by freeness.
    pub fn element_carrying(&self, graph: &FlagGraph, from: FlagId, to: FlagId) -> Option<usize> {
        // gamma(from) = to  iff  gamma(base) = reverse-word(to), where the
        // word spells the tree path base -> from (all colors are involutions).
        let mut word = Vec::new();
        self.tree.word_to(self.base_flag, from, &mut word);
        let mut current = to;
        for &c in word.iter().rev() {
            current = graph.adjacent_unchecked(current, c as usize);
        }
        self.by_image.get(&current).copied()
    }

    /// Order of the product `first * second` (apply `second`, then `first`):
    /// the length of the base flag's cycle, which by freeness is the order of
    /// the element.
    pub fn product_order(&self, graph: &FlagGraph, first: usize, second: usize) -> usize {
        let mut current = self.base_flag;
        let mut steps = 0;
        loop {
            current = self.image_of_flag(graph, first, self.image_of_flag(graph, second, current));
            steps += 1;
            if current == self.base_flag {
                return steps;
            }
        }
    }

    /// Order of the subgroup generated by the given elements: the size of
    /// the base flag's orbit under them (the action is free).
    pub fn closure_order(&self, graph: &FlagGraph, generators: &[usize]) -> usize {
        let perms: Vec<&[FlagId]> = generators
            .iter()
            .map(|&e| self.flag_perm(graph, e))
            .collect();
        let mut seen = vec![false; graph.flag_count()];
        seen[self.base_flag as usize] = true;
        let mut queue = vec![self.base_flag];
        let mut size = 0;
        while let Some(f) = queue.pop() {
            size += 1;
            for perm in &perms {
                let g = perm[f as usize];
                if !seen[g as usize] {
                    seen[g as usize] = true;
                    queue.push(g);
                }
            }
        }
        size
    }
}

/// The modified Schläfli symbol: for each position `i` in `1..=d-1`, the set
/// of polygon sizes occurring among sections between incident `(i+1)`- and
/// `(i-2)`-faces. Equivelar lattices have a single size everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModifiedSchlafli {
    /// `entries[i - 1]` is the sorted set of sizes at position `i`.
    pub entries: Vec<Vec<usize>>,
}

impl ModifiedSchlafli {
    pub fn is_equivelar(&self) -> bool {
        self.entries.iter().all(|e| e.len() == 1)
    }

    /// Sizes at position `i` (1-based, as in the symbol).
    pub fn position(&self, i: Rank) -> &[usize] {
        &self.entries[(i - 1) as usize]
    }
}

impl std::fmt::Display for ModifiedSchlafli {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, entry) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let sizes: Vec<String> = entry.iter().map(|s| s.to_string()).collect();
            write!(f, "{}", sizes.join("|"))?;
        }
        write!(f, "}}")
    }
}

/// Computes the modified Schläfli symbol of a valid lattice of rank >= 2.
pub fn modified_schlafli(lattice: &FaceLattice) -> Result<ModifiedSchlafli> {
    let d = lattice.rank();
    if d < 2 {
        return Err(Error::UnsupportedRank(d, 2));
    }
    let mut entries = Vec::with_capacity((d - 1) as usize);
    for i in 1..d {
        let mut sizes = Vec::new();
        for upper in lattice.rank_faces(i + 1) {
            // Walk three cover steps down to the (i-2)-faces under `upper`.
            let mut lowers: Vec<FaceId> = Vec::new();
            for &m in lattice.below(upper) {
                for &e in lattice.below(m) {
                    for &a in lattice.below(e) {
                        lowers.push(a);
                    }
                }
            }
            lowers.sort_unstable();
            lowers.dedup();
            for lower in lowers {
                let size = lattice
                    .above(lower)
                    .iter()
                    .filter(|&&h| lattice.is_le(h, upper).unwrap_or(false) && h != upper)
                    .count();
                if !sizes.contains(&size) {
                    sizes.push(size);
                }
            }
        }
        sizes.sort_unstable();
        entries.push(sizes);
    }
    Ok(ModifiedSchlafli { entries })
}

/// Orbit analysis of the automorphism group action on flags.
#[derive(Debug, Clone)]
pub struct OrbitReport {
    pub rank: Rank,
    pub flag_count: usize,
    pub group_order: usize,
    /// Number of flag orbits `k`.
    pub orbit_count: usize,
    /// Orbit index per flag; orbit 0 contains the lexicographically least
    /// flag.
    pub orbit_of: Vec<u32>,
    /// For two-orbit lattices, the sorted set `I` of ranks `i` such that
    /// every flag shares its orbit with its i-adjacent flag.
    pub class_ranks: Option<Vec<Rank>>,
    /// `transitivity[i]`: does the group act transitively on the i-faces?
    pub transitivity: Vec<bool>,
    /// Modified Schläfli symbol (empty below rank 2).
    pub symbol: ModifiedSchlafli,
}

impl OrbitReport {
    /// The ranks `0..d` missing from the class set (two-orbit inputs only).
    pub fn missing_ranks(&self) -> Vec<Rank> {
        match &self.class_ranks {
            Some(class) => (0..self.rank).filter(|r| !class.contains(r)).collect(),
            None => Vec::new(),
        }
    }

    pub fn class_label(&self) -> String {
        match &self.class_ranks {
            Some(class) => {
                let items: Vec<String> = class.iter().map(|r| r.to_string()).collect();
                format!("2_{{{}}}", items.join(","))
            }
            None => "-".to_string(),
        }
    }
}

/// Computes orbit structure, per-rank transitivity, class, and symbol.
pub fn orbit_report(
    lattice: &FaceLattice,
    graph: &FlagGraph,
    group: &AutomorphismGroup,
) -> Result<OrbitReport> {
    let n = graph.flag_count();
    let order = group.order();
    if order == 0 || !n.is_multiple_of(order) {
        return Err(Error::Internal(format!(
            "group order {order} does not divide flag count {n}"
        )));
    }

    const UNASSIGNED: u32 = u32::MAX;
    let mut orbit_of = vec![UNASSIGNED; n];
    let mut orbit_count = 0u32;
    let mut word = Vec::new();
    for f in 0..n as FlagId {
        if orbit_of[f as usize] != UNASSIGNED {
            continue;
        }
        let orbit = orbit_count;
        orbit_count += 1;
        group.tree.word_to(group.base_flag, f, &mut word);
        for image in group.base_orbit() {
            let mut current = image;
            for &c in &word {
                current = graph.adjacent_unchecked(current, c as usize);
            }
            if orbit_of[current as usize] != UNASSIGNED && orbit_of[current as usize] != orbit {
                return Err(Error::Internal(
                    "flag orbits do not partition the flag set".into(),
                ));
            }
            orbit_of[current as usize] = orbit;
        }
    }
    let k = orbit_count as usize;
    if k * order != n {
        return Err(Error::Internal(format!(
            "{k} orbits of a free action on {n} flags inconsistent with group order {order}"
        )));
    }

    let class_ranks = if k == 2 {
        let colors = graph.color_count();
        let base_keep: Vec<bool> = (0..colors)
            .map(|c| orbit_of[graph.adjacent_unchecked(0, c) as usize] == orbit_of[0])
            .collect();
        for f in 0..n as FlagId {
            for (c, &keep) in base_keep.iter().enumerate() {
                let same =
                    orbit_of[graph.adjacent_unchecked(f, c) as usize] == orbit_of[f as usize];
                if same != keep {
                    return Err(Error::Internal(format!(
                        "two-orbit class is not flag-independent at rank {c}"
                    )));
                }
            }
        }
        Some(
            base_keep
                .iter()
                .enumerate()
                .filter(|(_, &keep)| keep)
                .map(|(c, _)| c as Rank)
                .collect(),
        )
    } else {
        None
    };

    let d = lattice.rank();
    let mut transitivity = Vec::with_capacity(d.max(0) as usize);
    for r in 0..d {
        let faces = lattice.rank_faces(r);
        let total = faces.len();
        let Some(first) = faces.clone().next() else {
            transitivity.push(true);
            continue;
        };
        let mut seen = std::collections::HashSet::new();
        for element in group.elements() {
            seen.insert(group.image_of_face(graph, element, first));
        }
        transitivity.push(seen.len() == total);
    }

    let symbol = if d >= 2 {
        modified_schlafli(lattice)?
    } else {
        ModifiedSchlafli {
            entries: Vec::new(),
        }
    };

    Ok(OrbitReport {
        rank: d,
        flag_count: n,
        group_order: order,
        orbit_count: k,
        orbit_of,
        class_ranks,
        transitivity,
        symbol,
    })
}

/// Number of group orbits on chains of the given cotype.
pub fn chain_orbit_count(
    lattice: &FaceLattice,
    graph: &FlagGraph,
    group: &AutomorphismGroup,
    omitted: &[Rank],
) -> Result<usize> {
    let chains = chains_of_cotype(lattice, omitted)?;
    let index: HashMap<&[FaceId], usize> = chains
        .iter()
        .enumerate()
        .map(|(i, c)| (c.faces.as_slice(), i))
        .collect();
    let mut assigned = vec![false; chains.len()];
    let mut orbits = 0;
    let mut image = Vec::new();
    for start in 0..chains.len() {
        if assigned[start] {
            continue;
        }
        orbits += 1;
        for element in group.elements() {
            let perm = group.face_perm(graph, element);
            image.clear();
            image.extend(chains[start].faces.iter().map(|&f| perm[f as usize]));
            let &target = index.get(image.as_slice()).ok_or_else(|| {
                Error::Internal("face map does not preserve chain cotype".into())
            })?;
            assigned[target] = true;
        }
    }
    Ok(orbits)
}

/// Checkable consequences of two-orbitness: single-valuedness of the symbol
/// away from the missing ranks, evenness next to them, and the missing ranks
/// being extreme (or the rank-4 fully transitive exception).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub single_valued_ok: bool,
    pub evenness_ok: bool,
    pub missing_rank_ok: bool,
    /// Human-readable descriptions of any violations found.
    pub notes: Vec<String>,
}

impl LemmaReport {
    pub fn all_hold(&self) -> bool {
        self.single_valued_ok && self.evenness_ok && self.missing_rank_ok
    }
}

/// Verifies the two-orbit structure results against a report and symbol.
/// Requires a two-orbit input.
pub fn check_two_orbit_lemmas(
    report: &OrbitReport,
    symbol: &ModifiedSchlafli,
) -> Result<LemmaReport> {
    if report.orbit_count != 2 {
        return Err(Error::NotTwoOrbit {
            orbits: report.orbit_count,
        });
    }
    let d = report.rank;
    let missing = report.missing_ranks();
    let mut notes = Vec::new();

    let mut single_valued_ok = true;
    for &j in &missing {
        for i in 1..d {
            if i == j - 1 || i == j + 2 {
                continue;
            }
            let sizes = symbol.position(i);
            if sizes.len() != 1 {
                single_valued_ok = false;
                notes.push(format!(
                    "symbol position {i} carries {} sizes but rank {j} is the missing rank",
                    sizes.len()
                ));
            }
        }
    }

    let mut evenness_ok = true;
    for &j in &missing {
        for position in [j, j + 1] {
            if position < 1 || position > d - 1 {
                continue;
            }
            for &size in symbol.position(position) {
                if size % 2 != 0 {
                    evenness_ok = false;
                    notes.push(format!(
                        "symbol position {position} has odd size {size} adjacent to missing rank {j}"
                    ));
                }
            }
        }
    }

    let mut missing_rank_ok = !missing.is_empty();
    if missing.is_empty() {
        notes.push("two-orbit input with every adjacent flag in the same orbit".into());
    }
    for &j in &missing {
        if j != 0 && j != d - 1 {
            missing_rank_ok = false;
            notes.push(format!("missing rank {j} is interior (rank {d} lattice)"));
        }
    }
    if missing.len() == 2 && d != 4 {
        missing_rank_ok = false;
        notes.push(format!(
            "two missing ranks are only possible at rank 4, found rank {d}"
        ));
    }
    if missing.len() > 2 {
        missing_rank_ok = false;
        notes.push(format!("{} missing ranks", missing.len()));
    }

    Ok(LemmaReport {
        single_valued_ok,
        evenness_ok,
        missing_rank_ok,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make, CatalogKey};
    use crate::flags::FlagGraph;

    fn analyze(key: CatalogKey) -> (crate::FaceLattice, FlagGraph, AutomorphismGroup, OrbitReport) {
        let l = make(key).unwrap();
        let g = FlagGraph::build(&l).unwrap();
        let gamma = automorphism_group(&g);
        let report = orbit_report(&l, &g, &gamma).unwrap();
        (l, g, gamma, report)
    }

    #[test]
    fn hexagon_group_is_dihedral() {
        let (_, g, gamma, report) = analyze(CatalogKey::Polygon(6));
        assert_eq!(g.flag_count(), 12);
        assert_eq!(gamma.order(), 12);
        assert_eq!(report.orbit_count, 1);
        assert!(report.class_ranks.is_none());
    }

    #[test]
    fn icosidodecahedron_group_order() {
        let (_, g, gamma, report) = analyze(CatalogKey::Icosidodecahedron);
        assert_eq!(g.flag_count(), 240);
        assert_eq!(gamma.order(), 120);
        assert_eq!(report.orbit_count, 2);
        assert_eq!(report.class_ranks, Some(vec![0, 1]));
    }

    #[test]
    fn pentagon_is_one_orbit() {
        let (_, _, _, report) = analyze(CatalogKey::Polygon(5));
        assert_eq!(report.orbit_count, 1);
    }

    #[test]
    fn orbit_zero_contains_the_least_flag() {
        let (_, _, _, report) = analyze(CatalogKey::Cuboctahedron);
        assert_eq!(report.orbit_of[0], 0);
        assert_eq!(report.orbit_count, 2);
        let sizes = [
            report.orbit_of.iter().filter(|&&o| o == 0).count(),
            report.orbit_of.iter().filter(|&&o| o == 1).count(),
        ];
        assert_eq!(sizes, [48, 48]);
    }

    #[test]
    fn free_action_on_flags() {
        let (_, g, gamma, _) = analyze(CatalogKey::Cuboctahedron);
        let identity = gamma.identity();
        for element in gamma.elements() {
            let perm = gamma.flag_perm(&g, element);
            let fixes_any = perm.iter().enumerate().any(|(f, &img)| f as FlagId == img);
            assert_eq!(fixes_any, element == identity);
        }
    }

    #[test]
    fn schlafli_symbols() {
        let cube = make(CatalogKey::Cube(3)).unwrap();
        assert_eq!(
            modified_schlafli(&cube).unwrap().entries,
            vec![vec![4], vec![3]]
        );
        let rhombic = make(CatalogKey::RhombicDodecahedron).unwrap();
        assert_eq!(
            modified_schlafli(&rhombic).unwrap().entries,
            vec![vec![4], vec![3, 4]]
        );
        let segment = make(CatalogKey::Simplex(1)).unwrap();
        assert!(modified_schlafli(&segment).is_err());
    }

    #[test]
    fn symbol_display() {
        let c = make(CatalogKey::Cuboctahedron).unwrap();
        assert_eq!(modified_schlafli(&c).unwrap().to_string(), "{3|4,4}");
    }

    #[test]
    fn chain_orbits_of_the_cuboctahedron() {
        let (l, g, gamma, _) = analyze(CatalogKey::Cuboctahedron);
        // Dropping the 2-face leaves vertex-edge chains: one orbit, since
        // rank 2 is the intransitive rank.
        assert_eq!(chain_orbit_count(&l, &g, &gamma, &[2]).unwrap(), 1);
        assert_eq!(chains_of_cotype(&l, &[2]).unwrap().len(), 48);
        // Dropping a rank inside the class set leaves two orbits.
        assert_eq!(chain_orbit_count(&l, &g, &gamma, &[0]).unwrap(), 2);
        // Only the improper chain survives omitting all proper ranks.
        assert_eq!(chain_orbit_count(&l, &g, &gamma, &[0, 1, 2]).unwrap(), 1);
    }

    #[test]
    fn dual_class_is_the_rank_complement() {
        let (l, _, _, report) = analyze(CatalogKey::Cuboctahedron);
        let dual = l.dual().unwrap();
        let dg = FlagGraph::build(&dual).unwrap();
        let dgamma = automorphism_group(&dg);
        let dreport = orbit_report(&dual, &dg, &dgamma).unwrap();
        assert_eq!(dreport.orbit_count, report.orbit_count);
        let complement: Vec<Rank> = report
            .class_ranks
            .as_ref()
            .unwrap()
            .iter()
            .map(|&i| l.rank() - 1 - i)
            .rev()
            .collect();
        assert_eq!(dreport.class_ranks, Some(complement));
    }

    #[test]
    fn lemma_checks_on_catalog_two_orbit_objects() {
        for key in [
            CatalogKey::Cuboctahedron,
            CatalogKey::Icosidodecahedron,
            CatalogKey::RhombicDodecahedron,
            CatalogKey::RhombicTriacontahedron,
        ] {
            let (_, _, _, report) = analyze(key);
            let lemmas = check_two_orbit_lemmas(&report, &report.symbol).unwrap();
            assert!(lemmas.all_hold(), "{key}: {:?}", lemmas.notes);
        }
    }

    #[test]
    fn lemma_check_requires_two_orbits() {
        let (_, _, _, report) = analyze(CatalogKey::Cube(3));
        assert!(matches!(
            check_two_orbit_lemmas(&report, &report.symbol),
            Err(Error::NotTwoOrbit { orbits: 1 })
        ));
    }

    #[test]
    fn transitivity_vector_of_the_rhombic_dodecahedron() {
        let (_, _, _, report) = analyze(CatalogKey::RhombicDodecahedron);
        // Vertex-intransitive: transitive on edges and 2-faces only.
        assert_eq!(report.transitivity, vec![false, true, true]);
    }
}
