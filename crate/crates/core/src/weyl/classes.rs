use super::group::FiniteCoxeterGroup;

/// Conjugacy classes of an enumerated group. Class `0` is the identity class.
#[derive(Clone, Debug)]
pub struct ConjClassSet {
    /// Group index of each class representative (a minimal-length element).
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub orders: Vec<usize>,
    /// Class index of every group element.
    pub class_of: Vec<u16>,
}

impl ConjClassSet {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn class_of(&self, w: usize) -> usize {
        self.class_of[w] as usize
    }

    /// Class containing the inverses of elements of class `c`.
    pub fn inverse_class(&self, g: &FiniteCoxeterGroup, c: usize) -> usize {
        self.class_of(g.inverse(self.reps[c]))
    }
}

pub fn conjugacy_classes(g: &FiniteCoxeterGroup) -> ConjClassSet {
    let n = g.order();
    let r = g.rank();
    let mut raw = vec![u32::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if raw[start] != u32::MAX {
            continue;
        }
        let id = members.len() as u32;
        raw[start] = id;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            i += 1;
            for s in 0..r {
                let y = g.left_mul(s, g.right_mul(x, s));
                if raw[y] == u32::MAX {
                    raw[y] = id;
                    orbit.push(y);
                }
            }
        }
        members.push(orbit);
    }

    let key = |w: usize| (g.length(w), g.element(w).key());
    let mut info: Vec<(usize, usize, u64, usize)> = members
        .iter()
        .map(|m| {
            let rep = *m.iter().min_by_key(|&&w| key(w)).unwrap();
            let min_key = m.iter().map(|&w| g.element(w).key()).min().unwrap();
            (g.element(rep).order(), m.len(), min_key, rep)
        })
        .collect();
    let mut perm: Vec<usize> = (0..members.len()).collect();
    perm.sort_by_key(|&c| (info[c].0, info[c].1, info[c].2));
    let mut relabel = vec![0u16; members.len()];
    for (new, &old) in perm.iter().enumerate() {
        relabel[old] = new as u16;
    }
    let class_of = raw.iter().map(|&c| relabel[c as usize]).collect();
    let sorted: Vec<_> = perm.iter().map(|&c| info[c]).collect();
    info = sorted;
    ConjClassSet {
        reps: info.iter().map(|x| x.3).collect(),
        sizes: info.iter().map(|x| x.1).collect(),
        orders: info.iter().map(|x| x.0).collect(),
        class_of,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_cartan_e6, generate_root_system};
    use crate::weyl::{group_enumerate, CoxeterSystem, WeylElement};

    #[test]
    fn symmetric_group_s3() {
        let rs = generate_root_system(&build_cartan_e6()).unwrap();
        let cs =
            CoxeterSystem::new(vec![WeylElement::simple_reflection(&rs, 0), WeylElement::simple_reflection(&rs, 2)])
                .unwrap();
        let g = group_enumerate(&cs).unwrap();
        let cl = conjugacy_classes(&g);
        assert_eq!(cl.sizes, vec![1, 3, 2]);
        assert_eq!(cl.orders, vec![1, 2, 3]);
        assert_eq!(cl.reps[0], 0);
        assert_eq!(g.length(cl.reps[1]), 1);
    }

    #[test]
    fn order_two_group() {
        let rs = generate_root_system(&build_cartan_e6()).unwrap();
        let cs = CoxeterSystem::new(vec![WeylElement::simple_reflection(&rs, 0)]).unwrap();
        let cl = conjugacy_classes(&group_enumerate(&cs).unwrap());
        assert_eq!(cl.len(), 2);
    }
}
