//! Plain-text instance files.
//!
//! Line 1 is the header `cpp 1 <n> <family> <seed>` (format tag, format
//! version, vertex count, family name or `custom`, seed or `-`), followed
//! by one line `<i> <j> <w>` per unordered pair in (i,j)-lex order.
//! Decimal integers, single spaces, LF line endings, no trailing blank
//! line. Writing is byte-deterministic.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::instance::{pair_count, pairs, Family, WeightedInstance, MAX_ABS_WEIGHT};

/// Serializes an instance in the native format.
pub fn write_instance_string(inst: &WeightedInstance) -> String {
    let family = inst.family().unwrap_or(Family::Custom);
    let seed = inst.seed().map_or_else(|| "-".to_string(), |s| s.to_string());
    let mut out = String::new();
    writeln!(out, "cpp 1 {} {} {}", inst.n(), family, seed).unwrap();
    for (i, j) in pairs(inst.n()) {
        writeln!(out, "{} {} {}", i, j, inst.weight(i, j)).unwrap();
    }
    out
}

/// Writes an instance to `sink`, returning the byte count.
pub fn write_instance(inst: &WeightedInstance, sink: &mut dyn std::io::Write) -> Result<usize> {
    let s = write_instance_string(inst);
    sink.write_all(s.as_bytes())?;
    Ok(s.len())
}

pub fn write_instance_file(inst: &WeightedInstance, path: &Path) -> Result<usize> {
    let s = write_instance_string(inst);
    fs::write(path, &s)?;
    Ok(s.len())
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Parses the native format. Errors carry the 1-based line number.
pub fn read_instance_str(text: &str) -> Result<WeightedInstance> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));

    let (line_no, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let fields: Vec<&str> = header.split(' ').collect();
    if fields.len() != 5 || fields[0] != "cpp" {
        return Err(parse_err(line_no, "expected header `cpp 1 <n> <family> <seed>`"));
    }
    if fields[1] != "1" {
        return Err(parse_err(line_no, format!("unsupported format version `{}`", fields[1])));
    }
    let n: usize = fields[2]
        .parse()
        .map_err(|_| parse_err(line_no, format!("invalid vertex count `{}`", fields[2])))?;
    if !(1..=crate::instance::MAX_VERTICES).contains(&n) {
        return Err(parse_err(line_no, format!("vertex count {n} out of range")));
    }
    let family = Family::parse(fields[3])
        .ok_or_else(|| parse_err(line_no, format!("unknown family `{}`", fields[3])))?;
    let seed = match fields[4] {
        "-" => None,
        s => Some(
            s.parse::<u64>()
                .map_err(|_| parse_err(line_no, format!("invalid seed `{s}`")))?,
        ),
    };

    let mut weights = Vec::with_capacity(pair_count(n));
    for (i, j) in pairs(n) {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| parse_err(pair_count(n) + 1, format!("missing line for pair {i} {j}")))?;
        let fields: Vec<&str> = line.split(' ').collect();
        if fields.len() != 3 {
            return Err(parse_err(line_no, "expected `<i> <j> <w>`"));
        }
        let pi: usize =
            fields[0].parse().map_err(|_| parse_err(line_no, "invalid vertex index"))?;
        let pj: usize =
            fields[1].parse().map_err(|_| parse_err(line_no, "invalid vertex index"))?;
        if (pi, pj) != (i, j) {
            return Err(parse_err(
                line_no,
                format!("expected pair {i} {j} in lex order, found {pi} {pj}"),
            ));
        }
        let w: i64 = fields[2]
            .parse()
            .map_err(|_| parse_err(line_no, format!("invalid weight `{}`", fields[2])))?;
        if w.abs() > MAX_ABS_WEIGHT {
            return Err(parse_err(line_no, format!("weight {w} exceeds bound")));
        }
        weights.push(w);
    }
    if let Some((line_no, extra)) = lines.find(|(_, l)| !l.is_empty()) {
        return Err(parse_err(line_no, format!("unexpected trailing content `{extra}`")));
    }

    let mut inst = WeightedInstance::from_weights(n, weights)?.with_family(family);
    if let Some(s) = seed {
        inst = inst.with_seed(s);
    }
    Ok(inst)
}

pub fn read_instance(source: &mut dyn std::io::Read) -> Result<WeightedInstance> {
    let mut text = String::new();
    source.read_to_string(&mut text)?;
    read_instance_str(&text)
}

pub fn read_instance_file(path: &Path) -> Result<WeightedInstance> {
    read_instance_str(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::{gen_random, gen_sparse};

    #[test]
    fn header_and_line_layout() {
        let inst = WeightedInstance::from_weights(3, vec![1, -1, 1])
            .unwrap()
            .with_family(Family::Random)
            .with_seed(7);
        let text = write_instance_string(&inst);
        assert_eq!(text, "cpp 1 3 random 7\n0 1 1\n0 2 -1\n1 2 1\n");
    }

    #[test]
    fn custom_family_and_missing_seed() {
        let inst = WeightedInstance::from_weights(3, vec![0, 0, 0]).unwrap();
        let text = write_instance_string(&inst);
        assert!(text.starts_with("cpp 1 3 custom -\n"));
        let back = read_instance_str(&text).unwrap();
        assert_eq!(back.family(), Some(Family::Custom));
        assert_eq!(back.seed(), None);
    }

    #[test]
    fn round_trip_on_random_instances() {
        for seed in 0..100 {
            let inst = if seed % 2 == 0 {
                gen_random(10, seed).unwrap()
            } else {
                gen_sparse(10, seed).unwrap()
            };
            let back = read_instance_str(&write_instance_string(&inst)).unwrap();
            assert_eq!(back, inst);
        }
    }

    #[test]
    fn write_is_byte_deterministic() {
        let inst = gen_random(12, 3).unwrap();
        assert_eq!(write_instance_string(&inst), write_instance_string(&inst));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let assert_line = |text: &str, line: usize| {
            match read_instance_str(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "input: {text:?}"),
                other => panic!("expected parse error for {text:?}, got {other:?}"),
            }
        };
        assert_line("", 1);
        assert_line("mps 1 3 random 7\n", 1);
        assert_line("cpp 2 3 random 7\n", 1);
        assert_line("cpp 1 3 bogus 7\n", 1);
        assert_line("cpp 1 3 random x\n", 1);
        // out-of-order pair on line 3
        assert_line("cpp 1 3 random 7\n0 1 1\n1 2 1\n0 2 1\n", 3);
        // bad weight on line 2
        assert_line("cpp 1 3 random 7\n0 1 one\n0 2 1\n1 2 1\n", 2);
        // truncated
        assert_line("cpp 1 3 random 7\n0 1 1\n", 4);
        // trailing junk
        assert_line("cpp 1 3 random 7\n0 1 1\n0 2 -1\n1 2 1\nextra\n", 5);
    }
}
