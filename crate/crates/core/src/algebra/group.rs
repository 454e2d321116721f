use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::report::{Finding, Report};

/// A finite group given by its Cayley table on dense ids `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<usize>,
    neutral: usize,
    inverse: Vec<usize>,
    abelian: bool,
}

impl FiniteGroup {
    /// Builds a group from a row-major Cayley table, checking every axiom.
    pub fn from_table(names: Vec<String>, rows: &[Vec<usize>]) -> Result<Self> {
        let n = names.len();
        let table = flatten_square(rows, n)?;
        let report = validate_group_table(n, &table);
        if !report.is_clean() {
            return Err(Error::Axioms(report));
        }
        Ok(Self::from_valid_flat(names, table))
    }

    /// Caller guarantees the table is a group table.
    pub(crate) fn from_valid_flat(names: Vec<String>, table: Vec<usize>) -> Self {
        let n = names.len();
        let neutral = (0..n)
            .find(|&e| (0..n).all(|a| table[e * n + a] == a && table[a * n + e] == a))
            .expect("group table without identity");
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| table[a * n + b] == neutral)
                    .expect("group table without inverse")
            })
            .collect();
        let abelian = (0..n).all(|a| (0..n).all(|b| table[a * n + b] == table[b * n + a]));
        FiniteGroup {
            names,
            table,
            neutral,
            inverse,
            abelian,
        }
    }

    fn from_fn(names: Vec<String>, op: impl Fn(usize, usize) -> usize) -> Self {
        let n = names.len();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(op(a, b));
            }
        }
        Self::from_valid_flat(names, table)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// The cyclic group `Z_n` with ids equal to residues.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let names = (0..n).map(|i| i.to_string()).collect();
        Self::from_fn(names, |a, b| (a + b) % n)
    }

    /// Direct product with ids `a * |other| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let m = other.order();
        let names = (0..self.order() * m)
            .map(|i| format!("({},{})", self.name(i / m), other.name(i % m)))
            .collect();
        Self::from_fn(names, |x, y| {
            self.op(x / m, y / m) * m + other.op(x % m, y % m)
        })
    }

    /// Symmetric group on `k` points, elements in lexicographic order of
    /// their one-line notation, named in 1-based cycle notation.
    pub fn symmetric(k: usize) -> Self {
        let perms = permutations(k);
        let names = perms.iter().map(|p| cycle_notation(p)).collect();
        let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        Self::from_fn(names, |a, b| {
            // (a b)(i) = a(b(i))
            let comp: Vec<usize> = (0..k).map(|i| perms[a][perms[b][i]]).collect();
            index(&comp)
        })
    }

    /// Dihedral group of order `2m`: ids `i + m*j` for `r^i s^j`.
    pub fn dihedral(m: usize) -> Self {
        let names = (0..2 * m)
            .map(|x| {
                let (i, j) = (x % m, x / m);
                match (i, j) {
                    (0, 0) => "e".to_string(),
                    (_, 0) => format!("r{i}"),
                    (0, _) => "s".to_string(),
                    _ => format!("r{i}s"),
                }
            })
            .collect();
        Self::from_fn(names, |x, y| {
            let (i, a) = (x % m, x / m);
            let (j, b) = (y % m, y / m);
            let k = if a == 0 { (i + j) % m } else { (i + m - j) % m };
            k + m * ((a + b) % 2)
        })
    }

    /// Quaternion group `Q_8`.
    pub fn quaternion() -> Self {
        // id = unit + 4*sign, unit 0..4 = 1,i,j,k
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (1, 0), (2, 0), (3, 0)],
            [(1, 0), (0, 1), (3, 0), (2, 1)],
            [(2, 0), (3, 1), (0, 1), (1, 0)],
            [(3, 0), (2, 0), (1, 1), (0, 1)],
        ];
        let labels = ["1", "i", "j", "k"];
        let names = (0..8)
            .map(|x| {
                let sign = if x / 4 == 0 { "" } else { "-" };
                format!("{sign}{}", labels[x % 4])
            })
            .collect();
        Self::from_fn(names, |x, y| {
            let (u, s) = UNIT[x % 4][y % 4];
            u + 4 * ((s + x / 4 + y / 4) % 2)
        })
    }

    /// One representative of every isomorphism class of groups of order <= 8.
    pub fn small_groups() -> Vec<(String, FiniteGroup)> {
        let c = FiniteGroup::cyclic;
        vec![
            ("C1".into(), c(1)),
            ("C2".into(), c(2)),
            ("C3".into(), c(3)),
            ("C4".into(), c(4)),
            ("C2xC2".into(), c(2).direct_product(&c(2))),
            ("C5".into(), c(5)),
            ("C6".into(), c(6)),
            ("S3".into(), FiniteGroup::symmetric(3)),
            ("C7".into(), c(7)),
            ("C8".into(), c(8)),
            ("C4xC2".into(), c(4).direct_product(&c(2))),
            ("C2xC2xC2".into(), c(2).direct_product(&c(2)).direct_product(&c(2))),
            ("D4".into(), FiniteGroup::dihedral(4)),
            ("Q8".into(), FiniteGroup::quaternion()),
        ]
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn neutral(&self) -> usize {
        self.neutral
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn id_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order()).map(<[usize]>::to_vec).collect()
    }

    #[cfg(test)]
    pub(crate) fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.neutral {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inverse(a) } else { a };
        (0..k.unsigned_abs()).fold(self.neutral, |acc, _| self.op(acc, base))
    }

    /// Subgroup generated by `gens`, as a sorted id list.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::from([self.neutral]);
        let mut frontier = vec![self.neutral];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.op(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    pub fn is_subgroup(&self, members: &[usize]) -> bool {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        set.contains(&self.neutral)
            && set
                .iter()
                .all(|&a| set.iter().all(|&b| set.contains(&self.op(a, self.inverse(b)))))
    }

    pub fn is_normal_subgroup(&self, members: &[usize]) -> bool {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        self.is_subgroup(members)
            && (0..self.order()).all(|g| {
                set.iter()
                    .all(|&s| set.contains(&self.op(self.op(g, s), self.inverse(g))))
            })
    }

    /// Quotient by a normal subgroup. Returns the quotient group, the
    /// projection, and the cosets (each sorted) indexed by quotient id.
    pub fn quotient(&self, normal: &[usize]) -> Result<(FiniteGroup, Vec<usize>, Vec<Vec<usize>>)> {
        if !self.is_normal_subgroup(normal) {
            return Err(Error::NotNormal);
        }
        let n = self.order();
        let mut projection = vec![usize::MAX; n];
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for a in 0..n {
            if projection[a] != usize::MAX {
                continue;
            }
            let mut coset: Vec<usize> = normal.iter().map(|&s| self.op(s, a)).collect();
            coset.sort_unstable();
            for &x in &coset {
                projection[x] = cosets.len();
            }
            cosets.push(coset);
        }
        let names = cosets
            .iter()
            .map(|c| {
                let inner: Vec<&str> = c.iter().map(|&x| self.name(x)).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        let q = Self::from_fn(names, |x, y| projection[self.op(cosets[x][0], cosets[y][0])]);
        Ok((q, projection, cosets))
    }
}

/// Checks closure, associativity, identity and inverses of a flat table.
pub fn validate_group_table(n: usize, table: &[usize]) -> Report {
    let mut report = Report::new("group");
    let op = |a: usize, b: usize| table[a * n + b];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if op(op(a, b), c) != op(a, op(b, c)) {
                    report.violation(Finding::new(
                        "associativity",
                        vec![a.to_string(), b.to_string(), c.to_string()],
                        format!("(ab)c = {} but a(bc) = {}", op(op(a, b), c), op(a, op(b, c))),
                    ));
                }
            }
        }
    }
    let neutral = (0..n).find(|&e| (0..n).all(|a| op(e, a) == a && op(a, e) == a));
    match neutral {
        None => report.violation(Finding::new("identity", vec![], "no two-sided identity")),
        Some(e) => {
            for a in 0..n {
                if !(0..n).any(|b| op(a, b) == e && op(b, a) == e) {
                    report.violation(Finding::new(
                        "inverse",
                        vec![a.to_string()],
                        "no two-sided inverse",
                    ));
                }
            }
        }
    }
    report
}

pub(crate) fn flatten_square(rows: &[Vec<usize>], n: usize) -> Result<Vec<usize>> {
    flatten_rect(rows, n, n)
}

/// Row-major flattening of an `r × c` table with entries in `0..c`.
pub(crate) fn flatten_rect(rows: &[Vec<usize>], r: usize, c: usize) -> Result<Vec<usize>> {
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(Error::Structural(format!("binary table must be {r}x{c}")));
    }
    let flat: Vec<usize> = rows.iter().flatten().copied().collect();
    if let Some(bad) = flat.iter().find(|&&x| x >= c) {
        return Err(Error::Structural(format!("entry {bad} outside 0..{c}")));
    }
    Ok(flat)
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        "id".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups_are_valid_and_distinct_orders_match() {
        let orders: Vec<usize> = FiniteGroup::small_groups().iter().map(|(_, g)| g.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8]);
        for (name, g) in FiniteGroup::small_groups() {
            assert!(validate_group_table(g.order(), g.flat_table()).is_pass(), "{name}");
        }
    }

    #[test]
    fn symmetric_group_names_and_nonabelian() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.name(0), "id");
        assert!(s3.id_of("(12)").is_some());
        assert!(!s3.is_abelian());
        let t = s3.id_of("(12)").unwrap();
        assert!(s3.is_subgroup(&[0, t]));
        assert!(!s3.is_normal_subgroup(&[0, t]));
    }

    #[test]
    fn quotient_of_z4_by_even() {
        let z4 = FiniteGroup::cyclic(4);
        let (q, proj, cosets) = z4.quotient(&[0, 2]).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(cosets, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(proj, vec![0, 1, 0, 1]);
    }

    #[test]
    fn rejects_non_group_table() {
        let err = FiniteGroup::from_table(vec!["a".into(), "b".into()], &[vec![0, 0], vec![0, 0]]);
        assert!(matches!(err, Err(Error::Axioms(_))));
        let err = FiniteGroup::from_table(vec!["a".into()], &[vec![0, 0]]);
        assert!(matches!(err, Err(Error::Structural(_))));
    }

    #[test]
    fn q8_and_d4_are_not_abelian() {
        assert!(!FiniteGroup::quaternion().is_abelian());
        assert!(!FiniteGroup::dihedral(4).is_abelian());
        let q = FiniteGroup::quaternion();
        // i^2 = -1
        assert_eq!(q.name(q.op(1, 1)), "-1");
    }
}
