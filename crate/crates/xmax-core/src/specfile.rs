//! Group spec text format: a `degree: n` header line, then one generator
//! per line in cycle notation, e.g. `(0 1 2)(3 4)`. Blank lines and `#`
//! comments are ignored.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::perm::Permutation;

pub fn parse_group_spec(text: &str, name: Option<String>, caps: &Caps) -> Result<PermutationGroup> {
    let mut degree: Option<u32> = None;
    let mut gens: Vec<Permutation> = Vec::new();
    for raw in text.lines() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("degree:") {
            let d: u32 = rest
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad degree line: {line}")))?;
            degree = Some(d);
            continue;
        }
        let d = degree.ok_or_else(|| {
            Error::Parse("generator before the `degree: n` header".into())
        })?;
        gens.push(Permutation::parse(line, d)?);
    }
    let d = degree.ok_or_else(|| Error::Parse("missing `degree: n` header".into()))?;
    PermutationGroup::from_generators(gens, d, name, caps)
}

pub fn write_group_spec(g: &PermutationGroup) -> String {
    let mut out = String::new();
    if let Some(name) = g.name() {
        out.push_str(&format!("# {name}\n"));
    }
    out.push_str(&format!("degree: {}\n", g.degree()));
    for gen in g.generators() {
        out.push_str(&format!("{gen}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic() {
        let g = parse_group_spec(
            "# a comment\ndegree: 4\n(0 1 2 3)\n\n(0 1)  # inline comment\n",
            Some("S4".into()),
            &Caps::default(),
        )
        .unwrap();
        assert_eq!(g.order(), 24);
    }

    #[test]
    fn roundtrip_is_isomorphic() {
        let g = crate::catalog::build_group("Alt(5)", &Caps::default()).unwrap();
        let text = write_group_spec(&g);
        let back = parse_group_spec(&text, None, &Caps::default()).unwrap();
        assert_eq!(back.order(), 60);
        assert!(crate::iso::are_isomorphic(&g, &back).unwrap().is_some());
    }

    #[test]
    fn errors() {
        assert!(parse_group_spec("(0 1)\n", None, &Caps::default()).is_err());
        assert!(parse_group_spec("degree: 3\n(0 5)\n", None, &Caps::default()).is_err());
        assert!(parse_group_spec("", None, &Caps::default()).is_err());
    }
}
