//! Generator blocks and the operations that combine them: stabilizer
//! pasting, alignment search, juxtaposition and puncturing.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{BinMatrix, RowSpace};
use crate::pauli::PauliString;

/// An ordered list of equal-length generators together with the pairs of
/// rows that fail to commute.
///
/// A block that detects every error of weight at most two is what the
/// literature calls a 2-error-detecting block `[n, s]_e`; its defect `e` is
/// half the rank of the commutation matrix, i.e. the number of hyperbolic
/// pairs that must be cancelled before the rows generate a stabilizer.
#[derive(Clone, PartialEq, Eq)]
pub struct GeneratorBlock {
    n: usize,
    gens: Vec<PauliString>,
    noncommuting: Vec<(usize, usize)>,
    leading_xz: bool,
}

impl GeneratorBlock {
    pub fn new(gens: Vec<PauliString>) -> Result<Self> {
        let first = gens
            .first()
            .ok_or_else(|| Error::Shape("a block needs at least one generator".into()))?;
        let n = first.len();
        if let Some(bad) = gens.iter().find(|g| g.len() != n) {
            return Err(Error::LengthMismatch {
                left: n,
                right: bad.len(),
            });
        }
        let mut noncommuting = Vec::new();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                if gens[i].anticommutes(&gens[j]) {
                    noncommuting.push((i, j));
                }
            }
        }
        let leading_xz = gens.len() >= 2
            && gens[0] == PauliString::all_x(n)
            && gens[1] == PauliString::all_z(n);
        Ok(GeneratorBlock {
            n,
            gens,
            noncommuting,
            leading_xz,
        })
    }

    /// Parses one generator per string.
    pub fn parse_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let gens = rows
            .iter()
            .map(|r| r.as_ref().parse())
            .collect::<Result<Vec<PauliString>>>()?;
        Self::new(gens)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of generators.
    #[inline]
    pub fn s(&self) -> usize {
        self.gens.len()
    }

    pub fn gens(&self) -> &[PauliString] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<PauliString> {
        self.gens
    }

    /// Every unordered row pair `(i, j)`, `i < j`, that anticommutes.
    pub fn noncommuting_pairs(&self) -> &[(usize, usize)] {
        &self.noncommuting
    }

    /// True iff rows 0 and 1 are X(n) and Z(n).
    pub fn leading_xz(&self) -> bool {
        self.leading_xz
    }

    pub fn is_commuting(&self) -> bool {
        self.noncommuting.is_empty()
    }

    /// The s x s matrix of pairwise symplectic products.
    pub fn commutation_matrix(&self) -> BinMatrix {
        let s = self.s();
        let mut m = BinMatrix::zeros(s, s);
        for &(i, j) in &self.noncommuting {
            m.set(i, j, true);
            m.set(j, i, true);
        }
        m
    }

    /// Number of noncommuting pairs left after the best change of basis:
    /// half the rank of the commutation matrix.
    pub fn defect(&self) -> usize {
        self.commutation_matrix().rank() / 2
    }

    /// The s x 2n matrix whose rows are the generators' (x | z) vectors.
    pub fn symplectic_matrix(&self) -> BinMatrix {
        let rows: Vec<Vec<u64>> = self.gens.iter().map(|g| g.symplectic_bits()).collect();
        BinMatrix::from_packed_rows(2 * self.n, &rows)
    }

    pub fn row_space(&self) -> RowSpace {
        RowSpace::from_matrix(&self.symplectic_matrix())
    }

    pub fn rank(&self) -> usize {
        self.row_space().rank()
    }
}

impl fmt::Debug for GeneratorBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GeneratorBlock[{}, {}]_{} {{", self.n, self.s(), self.defect())?;
        for g in &self.gens {
            write!(f, " {g}")?;
        }
        write!(f, " }}")
    }
}

/// Builds a block from rows, computing its noncommuting pairs.
pub fn make_block(rows: Vec<PauliString>) -> Result<GeneratorBlock> {
    GeneratorBlock::new(rows)
}

/// A commuting, independent set of generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StabilizerCode {
    block: GeneratorBlock,
    pure: bool,
    provenance: String,
}

impl StabilizerCode {
    /// Promotes a block; fails unless every pair commutes and the rank
    /// equals the number of rows. Error detection is not checked here.
    pub fn new(block: GeneratorBlock, pure: bool, provenance: impl Into<String>) -> Result<Self> {
        if let Some(&(i, j)) = block.noncommuting_pairs().first() {
            return Err(Error::NotACode(format!(
                "generators {i} and {j} anticommute ({} noncommuting pairs)",
                block.noncommuting_pairs().len()
            )));
        }
        let rank = block.rank();
        if rank != block.s() {
            return Err(Error::NotACode(format!(
                "{} generators have rank {rank}",
                block.s()
            )));
        }
        Ok(StabilizerCode {
            block,
            pure,
            provenance: provenance.into(),
        })
    }

    pub fn n(&self) -> usize {
        self.block.n()
    }

    pub fn s(&self) -> usize {
        self.block.s()
    }

    /// Number of logical qubits, n - s.
    pub fn k(&self) -> usize {
        self.n() - self.s()
    }

    pub fn pure(&self) -> bool {
        self.pure
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn block(&self) -> &GeneratorBlock {
        &self.block
    }

    pub fn gens(&self) -> &[PauliString] {
        self.block.gens()
    }

    pub fn into_block(self) -> GeneratorBlock {
        self.block
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = provenance.into();
        self
    }
}

/// Lays out the pasted rows: X|I, Z|I, then left row 2+i beside `right[i]`,
/// padding whichever side runs out with identities.
fn layout(left: &GeneratorBlock, right: &[PauliString], right_n: usize) -> GeneratorBlock {
    let (nl, nr) = (left.n(), right_n);
    let s = left.s().max(right.len() + 2);
    let (id_l, id_r) = (PauliString::identity(nl), PauliString::identity(nr));
    let mut rows = Vec::with_capacity(s);
    rows.push(left.gens[0].concat(&id_r));
    rows.push(left.gens[1].concat(&id_r));
    for i in 2..s {
        let a = left.gens.get(i).unwrap_or(&id_l);
        let b = right.get(i - 2).unwrap_or(&id_r);
        rows.push(a.concat(b));
    }
    GeneratorBlock::new(rows).expect("pasted rows share a length")
}

/// Stabilizer pasting `left ▷ right` with the rows in their given order.
///
/// The result has `left.n() + right.n()` qubits and
/// `max(left.s(), right.s() + 2)` rows.
pub fn paste(left: &GeneratorBlock, right: &GeneratorBlock) -> Result<GeneratorBlock> {
    if !left.leading_xz() {
        return Err(Error::MissingLeadingXz);
    }
    Ok(layout(left, right.gens(), right.n()))
}

/// Pasting with a search for the row alignment that cancels as many
/// noncommuting pairs as possible.
///
/// The right rows, padded with identities to fill the left's free rows, are
/// tried in lexicographic permutation order and the first arrangement with
/// the smallest defect wins. If that leaves pairs uncancelled, both sides are
/// also rewritten in symplectic normal form (hyperbolic pairs matched
/// row for row) and that layout is taken if strictly better. The rows
/// restricted to either side still generate that side's original group, so
/// 2-error detection carries over exactly as in plain pasting.
pub fn paste_aligned(left: &GeneratorBlock, right: &GeneratorBlock) -> Result<GeneratorBlock> {
    if !left.leading_xz() {
        return Err(Error::MissingLeadingXz);
    }
    let permuted = best_permutation(left, right);
    if permuted.defect() == 0 {
        return Ok(permuted);
    }
    let rebased = paste_rebased(left, right);
    Ok(if rebased.defect() < permuted.defect() {
        rebased
    } else {
        permuted
    })
}

fn best_permutation(left: &GeneratorBlock, right: &GeneratorBlock) -> GeneratorBlock {
    let nr = right.n();
    let slots = right.s().max(left.s().saturating_sub(2));
    let mut rows = right.gens().to_vec();
    rows.resize(slots, PauliString::identity(nr));
    // identical rows share an id so repeated arrangements are skipped
    let ids: Vec<usize> = (0..slots)
        .map(|i| (0..=i).find(|&j| rows[j] == rows[i]).unwrap())
        .collect();

    let mut perm: Vec<usize> = (0..slots).collect();
    let mut seen = HashSet::new();
    let mut best: Option<(usize, GeneratorBlock)> = None;
    loop {
        let key: Vec<usize> = perm.iter().map(|&i| ids[i]).collect();
        if seen.insert(key) {
            let arranged: Vec<PauliString> = perm.iter().map(|&i| rows[i].clone()).collect();
            let candidate = layout(left, &arranged, nr);
            let e = candidate.defect();
            if best.as_ref().is_none_or(|(b, _)| e < *b) {
                best = Some((e, candidate));
                if e == 0 {
                    break;
                }
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.expect("at least one arrangement").1
}

/// Advances to the next permutation in lexicographic order; returns `false`
/// after the last one.
fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Splits rows into hyperbolic pairs `(u, w)` (u, w anticommute, every other
/// output row commutes with both) and rows commuting with everything.
fn symplectic_normal_form(rows: &[PauliString]) -> (Vec<(PauliString, PauliString)>, Vec<PauliString>) {
    let mut rest: Vec<PauliString> = rows.to_vec();
    let mut pairs = Vec::new();
    let mut isotropic = Vec::new();
    while !rest.is_empty() {
        let u = rest.remove(0);
        let Some(j) = rest.iter().position(|v| u.anticommutes(v)) else {
            isotropic.push(u);
            continue;
        };
        let w = rest.remove(j);
        for v in rest.iter_mut() {
            if v.anticommutes(&w) {
                v.mul_assign(&u);
            }
            if v.anticommutes(&u) {
                v.mul_assign(&w);
            }
        }
        pairs.push((u, w));
    }
    (pairs, isotropic)
}

fn paste_rebased(left: &GeneratorBlock, right: &GeneratorBlock) -> GeneratorBlock {
    let (nl, nr) = (left.n(), right.n());
    let (all_x, all_z) = (&left.gens[0], &left.gens[1]);
    let mut free: Vec<PauliString> = left.gens[2..].to_vec();
    if all_x.anticommutes(all_z) {
        for v in free.iter_mut() {
            if v.anticommutes(all_z) {
                v.mul_assign(all_x);
            }
            if v.anticommutes(all_x) {
                v.mul_assign(all_z);
            }
        }
    }
    let (pairs_l, iso_l) = symplectic_normal_form(&free);
    let (pairs_r, iso_r) = symplectic_normal_form(right.gens());
    let (mut iso_l, mut iso_r) = (iso_l.into_iter(), iso_r.into_iter());
    let (id_l, id_r) = (PauliString::identity(nl), PauliString::identity(nr));

    let matched = pairs_l.len().min(pairs_r.len());
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for ((a, b), (c, d)) in pairs_l.iter().zip(&pairs_r) {
        lhs.extend([a.clone(), b.clone()]);
        rhs.extend([c.clone(), d.clone()]);
    }
    for (a, b) in &pairs_l[matched..] {
        lhs.extend([a.clone(), b.clone()]);
        rhs.push(iso_r.next().unwrap_or_else(|| id_r.clone()));
        rhs.push(iso_r.next().unwrap_or_else(|| id_r.clone()));
    }
    for (c, d) in &pairs_r[matched..] {
        rhs.extend([c.clone(), d.clone()]);
        lhs.push(iso_l.next().unwrap_or_else(|| id_l.clone()));
        lhs.push(iso_l.next().unwrap_or_else(|| id_l.clone()));
    }
    lhs.extend(iso_l);
    rhs.extend(iso_r);
    let len = lhs.len().max(rhs.len());
    lhs.resize(len, id_l);
    rhs.resize(len, id_r.clone());

    let mut rows = vec![all_x.concat(&id_r), all_z.concat(&id_r)];
    rows.extend(lhs.iter().zip(&rhs).map(|(a, b)| a.concat(b)));
    GeneratorBlock::new(rows).expect("rebased rows share a length")
}

/// Folds a chain `b0 ▷ b1 ▷ … ▷ bk` from the right, i.e. `b0 ▷ (b1 ▷ (…))`.
pub fn paste_chain(blocks: &[GeneratorBlock], aligned: bool) -> Result<GeneratorBlock> {
    let (last, init) = blocks
        .split_last()
        .ok_or_else(|| Error::Shape("empty paste chain".into()))?;
    init.iter().rev().try_fold(last.clone(), |acc, left| {
        if aligned {
            paste_aligned(left, &acc)
        } else {
            paste(left, &acc)
        }
    })
}

/// Places blocks with equal row counts side by side and appends tail rows,
/// each tail letter being spread over the whole of the matching block.
pub fn juxtapose(blocks: &[&GeneratorBlock], tails: &[PauliString]) -> Result<GeneratorBlock> {
    let first = blocks
        .first()
        .ok_or_else(|| Error::Shape("nothing to juxtapose".into()))?;
    let s = first.s();
    if let Some(b) = blocks.iter().find(|b| b.s() != s) {
        return Err(Error::Shape(format!(
            "juxtaposed blocks need equal row counts, got {s} and {}",
            b.s()
        )));
    }
    let sizes: Vec<usize> = blocks.iter().map(|b| b.n()).collect();
    let mut rows = Vec::with_capacity(s + tails.len());
    for r in 0..s {
        let mut row = blocks[0].gens[r].clone();
        for b in &blocks[1..] {
            row = row.concat(&b.gens[r]);
        }
        rows.push(row);
    }
    for t in tails {
        if t.len() != blocks.len() {
            return Err(Error::LengthMismatch {
                left: blocks.len(),
                right: t.len(),
            });
        }
        rows.push(t.lift_with_sizes(&sizes));
    }
    GeneratorBlock::new(rows)
}

/// Deletes the listed qubits from every generator, keeping the order of the
/// survivors.
pub fn puncture(block: &GeneratorBlock, coords: &[usize]) -> Result<GeneratorBlock> {
    let n = block.n();
    let mut removed = vec![false; n];
    for &c in coords {
        if c >= n {
            return Err(Error::Puncture(format!("qubit {c} out of range for {n} qubits")));
        }
        if removed[c] {
            return Err(Error::Puncture(format!("qubit {c} listed twice")));
        }
        removed[c] = true;
    }
    let keep: Vec<usize> = (0..n).filter(|&q| !removed[q]).collect();
    if keep.is_empty() {
        return Err(Error::Puncture("every qubit removed".into()));
    }
    GeneratorBlock::new(block.gens.iter().map(|g| g.restrict(&keep)).collect())
}
