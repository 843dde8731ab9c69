//! The example groups shipped with the tool.

use std::path::Path;

use pgroup_core::{Definition, PcPresentation, PcpBuilder};

use crate::grammar::{parse_presentation, PresentationFile};

pub const NAMES: [&str; 5] = ["exampleA", "exampleB", "exampleC", "exampleD", "exampleE"];

const EMBEDDED: [&str; 5] = [
    include_str!("../../../corpus/exampleA.grp"),
    include_str!("../../../corpus/exampleB.grp"),
    include_str!("../../../corpus/exampleC.grp"),
    include_str!("../../../corpus/exampleD.grp"),
    include_str!("../../../corpus/exampleE.grp"),
];

#[derive(Clone, Debug)]
pub struct Corpus {
    pub a: PresentationFile,
    pub b: PresentationFile,
    pub c: PresentationFile,
    pub d: PresentationFile,
    pub e: PresentationFile,
}

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}:{source}")]
    Parse {
        path: String,
        source: crate::grammar::ParseError,
    },
}

impl Corpus {
    pub fn embedded() -> Self {
        let files: Vec<PresentationFile> = EMBEDDED
            .iter()
            .map(|t| parse_presentation(t).expect("embedded corpus parses"))
            .collect();
        Self::from_files(files)
    }

    /// Reads `exampleA.grp` ... `exampleE.grp` from `dir`.
    pub fn from_dir(dir: &Path) -> Result<Self, CorpusError> {
        let mut files = Vec::new();
        for name in NAMES {
            let path = dir.join(format!("{name}.grp"));
            let shown = path.display().to_string();
            let text = std::fs::read_to_string(&path).map_err(|source| CorpusError::Io {
                path: shown.clone(),
                source,
            })?;
            files.push(parse_presentation(&text).map_err(|source| CorpusError::Parse { path: shown, source })?);
        }
        Ok(Self::from_files(files))
    }

    fn from_files(files: Vec<PresentationFile>) -> Self {
        let mut it = files.into_iter();
        let mut next = || it.next().unwrap();
        Corpus {
            a: next(),
            b: next(),
            c: next(),
            d: next(),
            e: next(),
        }
    }

    pub fn entries(&self) -> [(&'static str, &PresentationFile); 5] {
        [
            (NAMES[0], &self.a),
            (NAMES[1], &self.b),
            (NAMES[2], &self.c),
            (NAMES[3], &self.d),
            (NAMES[4], &self.e),
        ]
    }
}

/// Sylow 2-subgroup of S8 (iterated wreath product of C2), order 2^7.
pub fn w128() -> PcPresentation {
    PcpBuilder::new(2, vec![1, 1, 1, 2, 2, 3, 4])
        .comm(1, 0, &[(5, 1)])
        .comm(2, 0, &[(3, 1)])
        .comm(2, 1, &[(4, 1)])
        .comm(3, 1, &[(5, 1)])
        .comm(4, 0, &[(5, 1)])
        .comm(4, 3, &[(6, 1)])
        .comm(5, 2, &[(6, 1)])
        .define(0, Definition::Generator { of: 0 })
        .define(1, Definition::Generator { of: 1 })
        .define(2, Definition::Generator { of: 2 })
        .define(3, Definition::Commutator { left: 2, right: 0 })
        .define(4, Definition::Commutator { left: 2, right: 1 })
        .define(5, Definition::Commutator { left: 3, right: 1 })
        .define(6, Definition::Commutator { left: 5, right: 2 })
        .build()
        .expect("W is a valid presentation")
}

/// The pc generators of [`w128`] as permutations of eight points, acting
/// on the right.
pub fn w128_permutations() -> Vec<Vec<u32>> {
    vec![
        vec![1, 0, 2, 3, 4, 5, 6, 7],
        vec![2, 3, 0, 1, 4, 5, 6, 7],
        vec![4, 5, 6, 7, 0, 1, 2, 3],
        vec![1, 0, 2, 3, 5, 4, 6, 7],
        vec![2, 3, 0, 1, 6, 7, 4, 5],
        vec![1, 0, 3, 2, 4, 5, 6, 7],
        vec![1, 0, 3, 2, 5, 4, 7, 6],
    ]
}
