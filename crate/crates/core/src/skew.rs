//! Finite skew braces as pairs of Cayley tables.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::brace::{CoStructure, HopfBraceData, HopfCoBraceData};
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebraData, Space};
use crate::report::{AxiomReport, Failure};
use crate::scalars::FieldSpec;
use crate::tensor::LinMap;
use crate::yang_baxter::SetSolution;

/// A group law on `{0, …, n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, identity, inverses and associativity.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup(String::from("empty table")));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidGroup(String::from("table is not an n×n array of indices")));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::InvalidGroup(String::from("no identity element")))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let b = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
            inverse.push(b);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { table, identity, inverse })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverse
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn opposite(&self) -> FiniteGroup {
        let n = self.order();
        let table = (0..n).map(|a| (0..n).map(|b| self.table[b][a]).collect()).collect();
        FiniteGroup { table, identity: self.identity, inverse: self.inverse.clone() }
    }

    /// `(g, h)` at index `g·|H| + h`.
    pub fn direct_product(&self, h: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order(), h.order());
        let mut table = vec![vec![0; n * m]; n * m];
        for a in 0..n * m {
            for b in 0..n * m {
                table[a][b] = self.mul(a / m, b / m) * m + h.mul(a % m, b % m);
            }
        }
        FiniteGroup::new(table).expect("product of groups")
    }

    /// The table after renaming every element `x` to `p[x]`.
    pub fn relabel(&self, p: &[usize]) -> FiniteGroup {
        FiniteGroup {
            table: relabel_table(&self.table, p),
            identity: p[self.identity],
            inverse: {
                let mut inv = vec![0; p.len()];
                for (x, &y) in self.inverse.iter().enumerate() {
                    inv[p[x]] = p[y];
                }
                inv
            },
        }
    }

    /// Identity-fixing permutations preserving the table (identity at 0 only).
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut out = Vec::new();
        for_each_fixing_perm(n, self.identity, |p| {
            if (0..n).all(|a| (0..n).all(|b| p[self.table[a][b]] == self.table[p[a]][p[b]])) {
                out.push(p.to_vec());
            }
        });
        out
    }
}

fn relabel_table(t: &[Vec<usize>], p: &[usize]) -> Vec<Vec<usize>> {
    let n = t.len();
    let mut out = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            out[p[a]][p[b]] = p[t[a][b]];
        }
    }
    out
}

/// Calls `f` on every permutation of `0..n` fixing `fixed`, in lexicographic order.
fn for_each_fixing_perm(n: usize, fixed: usize, mut f: impl FnMut(&[usize])) {
    let mut rest: Vec<usize> = (0..n).filter(|&x| x != fixed).collect();
    let mut p = vec![0; n];
    loop {
        let mut it = rest.iter();
        for (x, slot) in p.iter_mut().enumerate() {
            *slot = if x == fixed { fixed } else { *it.next().expect("n-1 values") };
        }
        f(&p);
        if !next_permutation(&mut rest) {
            break;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn cyclic_group(n: usize) -> FiniteGroup {
    FiniteGroup::new((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()).expect("cyclic group")
}

/// Symmetries of the `m`-gon; `rⁱsʲ` at index `i + m·j`.
pub fn dihedral_group(m: usize) -> FiniteGroup {
    let n = 2 * m;
    let mut table = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let (i, j, k, l) = (a % m, a / m, b % m, b / m);
            let rot = if j == 0 { (i + k) % m } else { (i + m - k) % m };
            table[a][b] = rot + m * ((j + l) % 2);
        }
    }
    FiniteGroup::new(table).expect("dihedral group")
}

/// `±1, ±i, ±j, ±k`; index `4·sign + unit`.
pub fn quaternion_group() -> FiniteGroup {
    // unit products: (sign, unit) of u·v for u, v in 1, i, j, k
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mut table = vec![vec![0; 8]; 8];
    for a in 0..8 {
        for b in 0..8 {
            let (s, u) = UNIT[a % 4][b % 4];
            table[a][b] = 4 * ((s + a / 4 + b / 4) % 2) + u;
        }
    }
    FiniteGroup::new(table).expect("quaternion group")
}

pub fn symmetric_group3() -> FiniteGroup {
    dihedral_group(3)
}

/// One representative per isomorphism type for orders 1 to 8, identity at 0.
pub fn group_catalog(n: usize) -> Result<Vec<(String, FiniteGroup)>> {
    let c = |k: usize| cyclic_group(k);
    let named = |s: &str, g: FiniteGroup| (String::from(s), g);
    Ok(match n {
        1 | 2 | 3 | 5 | 7 => vec![(format!("C{n}"), c(n))],
        4 => vec![named("C4", c(4)), named("C2xC2", c(2).direct_product(&c(2)))],
        6 => vec![named("C6", c(6)), named("S3", dihedral_group(3))],
        8 => vec![
            named("C8", c(8)),
            named("C4xC2", c(4).direct_product(&c(2))),
            named("C2xC2xC2", c(2).direct_product(&c(2)).direct_product(&c(2))),
            named("D4", dihedral_group(4)),
            named("Q8", quaternion_group()),
        ],
        _ => return Err(Error::OrderTooLarge(n)),
    })
}

/// Two group laws on one set with a common identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewBrace {
    pub dot: FiniteGroup,
    pub circ: FiniteGroup,
}

impl SkewBrace {
    pub fn new(dot: FiniteGroup, circ: FiniteGroup) -> Result<Self> {
        if dot.order() != circ.order() {
            return Err(Error::InvalidGroup(String::from("tables of different orders")));
        }
        Ok(SkewBrace { dot, circ })
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        SkewBrace { dot: g.clone(), circ: g.clone() }
    }

    pub fn order(&self) -> usize {
        self.dot.order()
    }

    /// `λ_a(b) = a⁻¹(a∘b)`.
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.dot.mul(self.dot.inv(a), self.circ.mul(a, b))
    }

    pub fn relabel(&self, p: &[usize]) -> SkewBrace {
        SkewBrace { dot: self.dot.relabel(p), circ: self.circ.relabel(p) }
    }
}

/// Shared identity and `a∘(bc) = (a∘b)a⁻¹(a∘c)` on all triples.
pub fn check_skew_brace(sb: &SkewBrace) -> AxiomReport {
    let mut r = AxiomReport::new();
    r.record("shared identity");
    if sb.dot.identity() != sb.circ.identity() {
        r.fail(Failure {
            axiom: String::from("shared identity"),
            input: vec![],
            output: vec![],
            lhs: format!("{}", sb.dot.identity()),
            rhs: format!("{}", sb.circ.identity()),
        });
    }
    let name = "skew brace compatibility";
    r.record(name);
    let (d, c) = (&sb.dot, &sb.circ);
    let n = sb.order();
    for a in 0..n {
        let ai = d.inv(a);
        for b in 0..n {
            let ab = c.mul(a, b);
            for x in 0..n {
                let lhs = c.mul(a, d.mul(b, x));
                let rhs = d.mul(d.mul(ab, ai), c.mul(a, x));
                if lhs != rhs {
                    r.fail(Failure {
                        axiom: String::from(name),
                        input: vec![a, b, x],
                        output: vec![],
                        lhs: format!("{lhs}"),
                        rhs: format!("{rhs}"),
                    });
                }
            }
        }
    }
    r
}

/// `N ⋊ Q` as a skew brace on `N × Q`, index `n·|Q| + q`, where
/// `action[q][n] = q▸n`.
pub fn semidirect_skew_brace(n: &FiniteGroup, q: &FiniteGroup, action: &[Vec<usize>]) -> Result<SkewBrace> {
    let (nn, nq) = (n.order(), q.order());
    if action.len() != nq || action.iter().any(|row| row.len() != nn || row.iter().any(|&x| x >= nn)) {
        return Err(Error::NotAnAction);
    }
    for row in action {
        let mut seen = vec![false; nn];
        for &x in row {
            if core::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAnAction);
            }
        }
        for a in 0..nn {
            for b in 0..nn {
                if row[n.mul(a, b)] != n.mul(row[a], row[b]) {
                    return Err(Error::NotAnAction);
                }
            }
        }
    }
    if (0..nn).any(|a| action[q.identity()][a] != a) {
        return Err(Error::NotAnAction);
    }
    for x in 0..nq {
        for y in 0..nq {
            if (0..nn).any(|a| action[q.mul(x, y)][a] != action[x][action[y][a]]) {
                return Err(Error::NotAnAction);
            }
        }
    }
    let dot = n.direct_product(q);
    let size = nn * nq;
    let mut circ = vec![vec![0; size]; size];
    for a in 0..size {
        for b in 0..size {
            let (x, s, y, t) = (a / nq, a % nq, b / nq, b % nq);
            circ[a][b] = n.mul(x, action[s][y]) * nq + q.mul(s, t);
        }
    }
    SkewBrace::new(dot, FiniteGroup::new(circ)?)
}

/// `C3 ⋊ C2` with `C2` acting by inversion.
pub fn flagship_skew_brace() -> SkewBrace {
    let action = vec![vec![0, 1, 2], vec![0, 2, 1]];
    semidirect_skew_brace(&cyclic_group(3), &cyclic_group(2), &action).expect("inversion is an action")
}

fn element_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("g{i}")).collect()
}

fn require_skew(sb: &SkewBrace) -> Result<()> {
    let r = check_skew_brace(sb);
    if r.passed() {
        Ok(())
    } else {
        Err(Error::SkewBraceInvalid(r))
    }
}

/// Linearizes both laws; the elements form a group-like basis.
pub fn group_algebra_brace(sb: &SkewBrace, field: FieldSpec) -> Result<HopfBraceData> {
    require_skew(sb)?;
    let n = sb.order();
    let labels = element_labels(n);
    let dot = HopfAlgebraData::group_algebra(field, sb.dot.table(), sb.dot.identity(), sb.dot.inverses(), labels.clone())?;
    let circ = HopfAlgebraData::group_algebra(field, sb.circ.table(), sb.circ.identity(), sb.circ.inverses(), labels)?;
    HopfBraceData::from_hopf(&dot, &circ)
}

/// Functions on the set with the two convolution coproducts, built on the
/// basis of point indicators.
pub fn function_algebra_cobrace(sb: &SkewBrace, field: FieldSpec) -> Result<HopfCoBraceData> {
    require_skew(sb)?;
    let n = sb.order();
    let one = field.one();
    let mut mul = LinMap::zero(field, &[n, n], &[n]);
    let mut unit = LinMap::zero(field, &[], &[n]);
    for g in 0..n {
        mul.add(&[g], &[g, g], one.clone())?;
        unit.add(&[g], &[], one.clone())?;
    }
    let co = |g: &FiniteGroup| -> Result<CoStructure> {
        let mut comul = LinMap::zero(field, &[n], &[n, n]);
        let mut counit = LinMap::zero(field, &[n], &[]);
        let mut antipode = LinMap::zero(field, &[n], &[n]);
        for a in 0..n {
            for b in 0..n {
                comul.add(&[a, b], &[g.mul(a, b)], one.clone())?;
            }
            antipode.add(&[g.inv(a)], &[a], one.clone())?;
        }
        counit.add(&[], &[g.identity()], one.clone())?;
        Ok(CoStructure { comul, counit, antipode })
    };
    Ok(HopfCoBraceData {
        space: Space::new(field, element_labels(n))?,
        mul,
        unit,
        dot: co(&sb.dot)?,
        circ: co(&sb.circ)?,
    })
}

/// `r(a, b) = (λ_a(b), λ_a(b)^{-1} ∘ a ∘ b)`, inverses taken in `∘`.
pub fn set_solution_direct(sb: &SkewBrace) -> SetSolution {
    let n = sb.order();
    let c = &sb.circ;
    let mut r = vec![(0, 0); n * n];
    for a in 0..n {
        for b in 0..n {
            let u = sb.lambda(a, b);
            r[a * n + b] = (u, c.mul(c.mul(c.inv(u), a), b));
        }
    }
    SetSolution { n, r }
}

/// Lexicographically least `(dot, circ)` over all identity-fixing relabelings.
pub fn canonical_form(sb: &SkewBrace) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let n = sb.order();
    let mut best: Option<(Vec<Vec<usize>>, Vec<Vec<usize>>)> = None;
    let mut sb0 = sb.clone();
    if sb.dot.identity() != 0 {
        let mut p: Vec<usize> = (0..n).collect();
        p.swap(0, sb.dot.identity());
        sb0 = sb.relabel(&p);
    }
    for_each_fixing_perm(n, 0, |p| {
        let cand = (relabel_table(sb0.dot.table(), p), relabel_table(sb0.circ.table(), p));
        if best.as_ref().map_or(true, |b| cand < *b) {
            best = Some(cand);
        }
    });
    best.expect("at least one permutation")
}

/// A unit of enumeration work: one dot type against one circ type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationJob {
    pub order: usize,
    pub dot: usize,
    pub circ: usize,
}

/// Skew braces found by one job, keyed by their `Aut(dot)`-canonical circ table.
#[derive(Debug, Clone, Default)]
pub struct JobResult {
    pub dot: usize,
    pub found: BTreeMap<Vec<Vec<usize>>, SkewBrace>,
}

pub const MAX_ENUMERATION_ORDER: usize = 8;

pub fn enumeration_jobs(n: usize) -> Result<Vec<EnumerationJob>> {
    if n > MAX_ENUMERATION_ORDER || n == 0 {
        return Err(Error::OrderTooLarge(n));
    }
    let k = group_catalog(n)?.len();
    Ok((0..k).flat_map(|dot| (0..k).map(move |circ| EnumerationJob { order: n, dot, circ })).collect())
}

pub fn run_job(job: &EnumerationJob) -> Result<JobResult> {
    let cat = group_catalog(job.order)?;
    let g = &cat[job.dot].1;
    let h = &cat[job.circ].1;
    let auts = g.automorphisms();
    let n = job.order;
    let mut seen: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
    let mut found = BTreeMap::new();
    for_each_fixing_perm(n, 0, |p| {
        let circ = h.relabel(p);
        if !seen.insert(circ.table().to_vec()) {
            return;
        }
        let sb = SkewBrace { dot: g.clone(), circ };
        if !check_skew_brace(&sb).passed() {
            return;
        }
        let key = auts
            .iter()
            .map(|a| relabel_table(sb.circ.table(), a))
            .min()
            .expect("identity automorphism");
        found.entry(key).or_insert(sb);
    });
    Ok(JobResult { dot: job.dot, found })
}

/// Deterministic merge: catalog order of dot, then canonical circ table.
pub fn merge_results(mut results: Vec<JobResult>) -> Vec<SkewBrace> {
    results.sort_by_key(|r| r.dot);
    let mut per_dot: BTreeMap<usize, BTreeMap<Vec<Vec<usize>>, SkewBrace>> = BTreeMap::new();
    for r in results {
        let slot = per_dot.entry(r.dot).or_default();
        for (k, v) in r.found {
            slot.entry(k).or_insert(v);
        }
    }
    per_dot.into_values().flat_map(|m| m.into_values()).collect()
}

/// All skew braces of order `n ≤ 8` up to isomorphism.
pub fn enumerate_skew_braces(n: usize) -> Result<Vec<SkewBrace>> {
    let results = enumeration_jobs(n)?.iter().map(run_job).collect::<Result<Vec<_>>>()?;
    Ok(merge_results(results))
}

pub const MAX_SLOW_ORDER: usize = 6;

/// Every group table on `0..n` with identity `0`, by backtracking.
pub fn all_group_tables(n: usize) -> Result<Vec<FiniteGroup>> {
    if n == 0 || n > MAX_SLOW_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut t = vec![vec![usize::MAX; n]; n];
    for a in 0..n {
        t[0][a] = a;
        t[a][0] = a;
    }
    let mut out = Vec::new();
    fill(&mut t, n, 1, 1, &mut out);
    Ok(out)
}

fn fill(t: &mut Vec<Vec<usize>>, n: usize, a: usize, b: usize, out: &mut Vec<FiniteGroup>) {
    if a == n {
        if let Ok(g) = FiniteGroup::new(t.clone()) {
            out.push(g);
        }
        return;
    }
    let (na, nb) = if b + 1 == n { (a + 1, 1) } else { (a, b + 1) };
    for x in 0..n {
        if (0..b).any(|j| t[a][j] == x) || (0..a).any(|i| t[i][b] == x) {
            continue;
        }
        t[a][b] = x;
        if partial_associative(t, n) {
            fill(t, n, na, nb, out);
        }
    }
    t[a][b] = usize::MAX;
}

fn partial_associative(t: &[Vec<usize>], n: usize) -> bool {
    for a in 0..n {
        for b in 0..n {
            let ab = t[a][b];
            if ab == usize::MAX {
                continue;
            }
            for c in 0..n {
                let (bc, l) = (t[b][c], t[ab][c]);
                if bc == usize::MAX || l == usize::MAX {
                    continue;
                }
                let r = t[a][bc];
                if r != usize::MAX && r != l {
                    return false;
                }
            }
        }
    }
    true
}

/// Independent path: all pairs of group tables, filtered, deduplicated by
/// [`canonical_form`].
pub fn enumerate_skew_braces_slow(n: usize) -> Result<Vec<(Vec<Vec<usize>>, Vec<Vec<usize>>)>> {
    let groups = all_group_tables(n)?;
    let mut forms = BTreeSet::new();
    for d in &groups {
        for c in &groups {
            let sb = SkewBrace { dot: d.clone(), circ: c.clone() };
            if check_skew_brace(&sb).passed() {
                forms.insert(canonical_form(&sb));
            }
        }
    }
    Ok(forms.into_iter().collect())
}
