use super::parser::{parse_identity, Identity};

/// A named built-in identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub text: &'static str,
}

impl CorpusEntry {
    pub fn identity(&self) -> Identity {
        parse_identity(self.text).expect("corpus entries parse")
    }
}

const CORPUS: [CorpusEntry; 17] = [
    // squares hidden in L
    CorpusEntry { name: "sq1", text: "L(n)^2 == L(2n)+2" },
    CorpusEntry { name: "sq2", text: "(8T(n))^2 == 2(L(2n)-2)" },
    CorpusEntry { name: "sq3", text: "C(n)^2 == L(2n+1)-2" },
    CorpusEntry { name: "sq4", text: "E(n)^2 == 2(L(2n+1)+2)" },
    // perfect-square corollaries
    CorpusEntry { name: "p1", text: "4(8T(n)^2+1) == L(n)^2" },
    CorpusEntry { name: "p2", text: "2C(n)^2+8 == E(n)^2" },
    CorpusEntry { name: "p3", text: "4(2B(n)^2-1) == C(n)^2" },
    CorpusEntry { name: "tsq", text: "T(n)^2 - 6T(n)T(n+1) + T(n+1)^2 == 1" },
    CorpusEntry { name: "i9", text: "T(2n+1)B(n-1) == (1+T(2n))B(n) == (C(3n)+C(n+1))/16" },
    CorpusEntry { name: "i10", text: "T(2n)L(n-1) == (1+T(2n-1))L(n) == T(3n-1)+T(n+1)" },
    CorpusEntry { name: "i13", text: "(T(2n)-1)C(n) == T(2n+1)C(n-1) == (B(3n)-B(n+1))/2" },
    CorpusEntry { name: "i14", text: "(T(2n+1)-1)T(n+1) == T(n)T(2n+2) == (L(3n+2)-L(n+2))/32" },
    // relations between the families
    CorpusEntry { name: "rel1", text: "B(n) == T(n+1)-T(n)" },
    CorpusEntry { name: "rel2", text: "E(n) == 4B(n)" },
    CorpusEntry { name: "rel3", text: "C(n) == 2(T(n+1)+T(n))" },
    CorpusEntry { name: "rel4", text: "2C(n) == L(n+1)-L(n)" },
    CorpusEntry { name: "rel5", text: "2E(n) == L(n+1)+L(n)" },
];

/// The built-in catalog; every entry is expected to be proven.
pub fn corpus() -> &'static [CorpusEntry] {
    &CORPUS
}

pub fn find_identity(name: &str) -> Option<CorpusEntry> {
    CORPUS.iter().copied().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::{numeric_sweep, prove};

    #[test]
    fn every_entry_is_proven_and_sweeps_clean() {
        for entry in corpus() {
            let id = entry.identity();
            assert!(prove(&id).unwrap().is_proven(), "{}", entry.name);
            assert_eq!(numeric_sweep(&id, -20..=50), Ok(Ok(())), "{}", entry.name);
        }
    }

    #[test]
    fn names_are_unique() {
        for (i, a) in CORPUS.iter().enumerate() {
            assert!(CORPUS[i + 1..].iter().all(|b| b.name != a.name));
        }
        assert!(find_identity("nope").is_none());
    }
}
