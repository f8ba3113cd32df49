//! Phase-free n-qubit Pauli operators in the symplectic (x|z) picture.
//!
//! Qubit `q` carries the letter I, X, Z or Y for (x, z) = (0,0), (1,0),
//! (0,1), (1,1). Qubit 0 is the leftmost character of the text form.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// The three non-identity letters in enumeration order.
    pub const NONTRIVIAL: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (false, true) => Pauli::Z,
            (true, true) => Pauli::Y,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Z => (false, true),
            Pauli::Y => (true, true),
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// An n-qubit Pauli operator modulo phase, stored as packed X and Z masks.
///
/// Bits past `n` in the last word are always zero, so equality and hashing
/// can work on the raw words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    x: Vec<u64>,
    z: Vec<u64>,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        let w = words_for(n);
        PauliString {
            n,
            x: vec![0; w],
            z: vec![0; w],
        }
    }

    /// `letter` on every qubit, e.g. `uniform(8, Pauli::X)` is X(8).
    pub fn uniform(n: usize, letter: Pauli) -> Self {
        let mut p = Self::identity(n);
        let (bx, bz) = letter.bits();
        let full = ones(n);
        if bx {
            p.x.clone_from(&full);
        }
        if bz {
            p.z = full;
        }
        p
    }

    pub fn all_x(n: usize) -> Self {
        Self::uniform(n, Pauli::X)
    }

    pub fn all_z(n: usize) -> Self {
        Self::uniform(n, Pauli::Z)
    }

    pub fn all_y(n: usize) -> Self {
        Self::uniform(n, Pauli::Y)
    }

    /// A weight-one operator carrying `letter` on qubit `q`.
    pub fn single(n: usize, q: usize, letter: Pauli) -> Self {
        let mut p = Self::identity(n);
        p.set(q, letter);
        p
    }

    /// Builds an operator from packed masks. Extra high bits are cleared.
    pub fn from_masks(n: usize, mut x: Vec<u64>, mut z: Vec<u64>) -> Self {
        let w = words_for(n);
        x.resize(w, 0);
        z.resize(w, 0);
        let mut p = PauliString { n, x, z };
        p.clear_tail();
        p
    }

    pub fn from_letters(letters: &[Pauli]) -> Self {
        let mut p = Self::identity(letters.len());
        for (q, &l) in letters.iter().enumerate() {
            p.set(q, l);
        }
        p
    }

    fn clear_tail(&mut self) {
        let rem = self.n % WORD;
        if rem != 0 {
            let mask = (1u64 << rem) - 1;
            if let Some(last) = self.x.last_mut() {
                *last &= mask;
            }
            if let Some(last) = self.z.last_mut() {
                *last &= mask;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn x_words(&self) -> &[u64] {
        &self.x
    }

    pub fn z_words(&self) -> &[u64] {
        &self.z
    }

    #[inline]
    pub fn x_bit(&self, q: usize) -> bool {
        (self.x[q / WORD] >> (q % WORD)) & 1 == 1
    }

    #[inline]
    pub fn z_bit(&self, q: usize) -> bool {
        (self.z[q / WORD] >> (q % WORD)) & 1 == 1
    }

    #[inline]
    pub fn letter(&self, q: usize) -> Pauli {
        assert!(q < self.n, "qubit {q} out of range for {} qubits", self.n);
        Pauli::from_bits(self.x_bit(q), self.z_bit(q))
    }

    pub fn set(&mut self, q: usize, letter: Pauli) {
        assert!(q < self.n, "qubit {q} out of range for {} qubits", self.n);
        let (bx, bz) = letter.bits();
        let (w, b) = (q / WORD, 1u64 << (q % WORD));
        if bx {
            self.x[w] |= b;
        } else {
            self.x[w] &= !b;
        }
        if bz {
            self.z[w] |= b;
        } else {
            self.z[w] &= !b;
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Pauli> + '_ {
        (0..self.n).map(move |q| self.letter(q))
    }

    /// Number of qubits carrying a non-identity letter.
    pub fn weight(&self) -> usize {
        self.x
            .iter()
            .zip(&self.z)
            .map(|(x, z)| (x | z).count_ones() as usize)
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.x.iter().chain(&self.z).all(|&w| w == 0)
    }

    /// Symplectic inner product: `true` when the two operators anticommute.
    ///
    /// Panics if the lengths differ.
    #[inline]
    pub fn anticommutes(&self, other: &PauliString) -> bool {
        assert_eq!(self.n, other.n, "commutation of Paulis with different lengths");
        let mut acc = 0u64;
        for i in 0..self.x.len() {
            acc ^= (self.x[i] & other.z[i]) ^ (self.z[i] & other.x[i]);
        }
        acc.count_ones() % 2 == 1
    }

    #[inline]
    pub fn commutes(&self, other: &PauliString) -> bool {
        !self.anticommutes(other)
    }

    /// Phase-free product (componentwise XOR of the masks).
    ///
    /// Panics if the lengths differ.
    pub fn multiply(&self, other: &PauliString) -> PauliString {
        let mut out = self.clone();
        out.mul_assign(other);
        out
    }

    pub fn mul_assign(&mut self, other: &PauliString) {
        assert_eq!(self.n, other.n, "product of Paulis with different lengths");
        for i in 0..self.x.len() {
            self.x[i] ^= other.x[i];
            self.z[i] ^= other.z[i];
        }
    }

    /// `self` on the first qubits followed by `other`.
    pub fn concat(&self, other: &PauliString) -> PauliString {
        let mut out = PauliString::identity(self.n + other.n);
        copy_bits(&self.x, self.n, &mut out.x, 0);
        copy_bits(&self.z, self.n, &mut out.z, 0);
        copy_bits(&other.x, other.n, &mut out.x, self.n);
        copy_bits(&other.z, other.n, &mut out.z, self.n);
        out
    }

    /// Replaces every qubit by `block` copies of its letter.
    pub fn block_lift(&self, block: usize) -> PauliString {
        assert!(block >= 1, "block size must be positive");
        let sizes = vec![block; self.n];
        self.lift_with_sizes(&sizes)
    }

    /// Like [`block_lift`](Self::block_lift) with a separate size per qubit.
    pub fn lift_with_sizes(&self, sizes: &[usize]) -> PauliString {
        assert_eq!(sizes.len(), self.n, "one block size per qubit");
        let total = sizes.iter().sum();
        let mut out = PauliString::identity(total);
        let mut offset = 0;
        for (q, &size) in sizes.iter().enumerate() {
            let l = self.letter(q);
            if l != Pauli::I {
                for j in offset..offset + size {
                    out.set(j, l);
                }
            }
            offset += size;
        }
        out
    }

    /// Keeps only the listed qubits, in the given order.
    pub fn restrict(&self, keep: &[usize]) -> PauliString {
        let mut out = PauliString::identity(keep.len());
        for (j, &q) in keep.iter().enumerate() {
            out.set(j, self.letter(q));
        }
        out
    }

    /// The 2n-bit symplectic row (x bits then z bits), packed.
    pub fn symplectic_bits(&self) -> Vec<u64> {
        let mut row = vec![0u64; words_for(2 * self.n)];
        copy_bits(&self.x, self.n, &mut row, 0);
        copy_bits(&self.z, self.n, &mut row, self.n);
        row
    }

    pub fn from_symplectic_bits(n: usize, bits: &[u64]) -> PauliString {
        let mut p = PauliString::identity(n);
        for q in 0..n {
            let bx = (bits[q / WORD] >> (q % WORD)) & 1 == 1;
            let qz = q + n;
            let bz = (bits[qz / WORD] >> (qz % WORD)) & 1 == 1;
            p.set(q, Pauli::from_bits(bx, bz));
        }
        p
    }
}

fn ones(n: usize) -> Vec<u64> {
    let mut v = vec![u64::MAX; words_for(n)];
    let rem = n % WORD;
    if rem != 0 {
        if let Some(last) = v.last_mut() {
            *last = (1u64 << rem) - 1;
        }
    }
    v
}

/// Copies `len` bits from `src` into `dst` starting at bit `offset`.
pub(crate) fn copy_bits(src: &[u64], len: usize, dst: &mut [u64], offset: usize) {
    let shift = offset % WORD;
    let base = offset / WORD;
    let nwords = words_for(len);
    for i in 0..nwords {
        let mut w = src[i];
        if i == nwords - 1 && !len.is_multiple_of(WORD) {
            w &= (1u64 << (len % WORD)) - 1;
        }
        dst[base + i] |= w << shift;
        if shift != 0 && w >> (WORD - shift) != 0 {
            dst[base + i + 1] |= w >> (WORD - shift);
        }
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::EmptyPauli);
        }
        let letters = text
            .chars()
            .enumerate()
            .map(|(pos, c)| Pauli::from_char(c).ok_or(Error::InvalidLetter { pos, found: c }))
            .collect::<Result<Vec<_>>>()?;
        Ok(PauliString::from_letters(&letters))
    }
}

/// Parses a row over {I, X, Y, Z}.
pub fn parse_pauli(text: &str) -> Result<PauliString> {
    text.parse()
}

pub fn format_pauli(p: &PauliString) -> String {
    p.to_string()
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.letters().map(Pauli::to_char).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}
