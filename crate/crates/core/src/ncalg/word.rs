use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Ordered list of distinct generator names. The order fixes the monomial
/// order of every polynomial over this set.
#[derive(Clone)]
pub struct GenSet(Arc<GenSetInner>);

struct GenSetInner {
    names: Vec<String>,
    index: HashMap<String, u32>,
}

impl GenSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            let n = n.as_ref();
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidPresentation(format!("invalid generator name `{n}`")));
            }
            if index.insert(n.to_string(), i as u32).is_some() {
                return Err(Error::InvalidPresentation(format!("duplicate generator `{n}`")));
            }
        }
        let names = names.iter().map(|n| n.as_ref().to_string()).collect();
        Ok(GenSet(Arc::new(GenSetInner { names, index })))
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, i: u32) -> &str {
        &self.0.names[i as usize]
    }

    pub fn index_of(&self, name: &str) -> Result<u32> {
        self.0.index.get(name).copied().ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }
}

impl PartialEq for GenSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.names == other.0.names
    }
}

impl Eq for GenSet {}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0.names).finish()
    }
}

/// A monomial of the free algebra: a sequence of generator indices, the empty
/// word being the unit.
///
/// Words are ordered by length first, then lexicographically by generator
/// index from the left.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: u32) -> Self {
        Word(vec![g])
    }

    pub fn from_letters(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Splits off the first letter.
    pub fn split_first(&self) -> Option<(u32, Word)> {
        self.0.split_first().map(|(h, t)| (*h, Word(t.to_vec())))
    }

    /// Splits off the last letter.
    pub fn split_last(&self) -> Option<(Word, u32)> {
        self.0.split_last().map(|(h, t)| (Word(t.to_vec()), *h))
    }

    pub fn render(&self, gens: &GenSet) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0.iter().map(|&g| gens.name(g)).collect::<Vec<_>>().join("*")
    }

    /// All words of exactly `len` letters over `ngens` generators, in
    /// increasing order.
    pub fn all_of_length(ngens: usize, len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            let mut next = Vec::with_capacity(out.len() * ngens);
            for w in &out {
                for g in 0..ngens as u32 {
                    let mut v = w.0.clone();
                    v.push(g);
                    next.push(Word(v));
                }
            }
            out = next;
        }
        out
    }

    /// All words of length at most `max_len`, in increasing order.
    pub fn all_up_to(ngens: usize, max_len: usize) -> Vec<Word> {
        (0..=max_len).flat_map(|l| Self::all_of_length(ngens, l)).collect()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_then_lex_order() {
        let a = Word::from_letters(vec![1]);
        let b = Word::from_letters(vec![0, 0]);
        let c = Word::from_letters(vec![0, 1]);
        assert!(Word::empty() < a);
        assert!(a < b);
        assert!(b < c);
    }

    #[test]
    fn genset_rejects_duplicates() {
        assert!(GenSet::new(&["a", "a"]).is_err());
        assert!(GenSet::new(&["1a"]).is_err());
        let g = GenSet::new(&["x", "y"]).unwrap();
        assert_eq!(g.index_of("y").unwrap(), 1);
        assert!(g.index_of("z").is_err());
    }

    #[test]
    fn enumerates_words_in_order() {
        let ws = Word::all_up_to(2, 2);
        assert_eq!(ws.len(), 7);
        assert!(ws.windows(2).all(|p| p[0] < p[1]));
    }
}
