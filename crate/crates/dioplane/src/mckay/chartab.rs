//! Character tables: closed-form construction for the cyclic and binary
//! dihedral families, and an embedded, checksummed asset for the three
//! exceptional groups, validated at load against the group itself.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use sha2::{Digest, Sha256};

use crate::exact::{rational, CyclotomicNumber, Rational};

use super::group::{FiniteSubgroupSU2, SubgroupFamily};
use super::McKayError;

const TABLES_TEXT: &str = include_str!("../../data/exceptional_tables.txt");
/// SHA-256 of the embedded asset; checked before parsing.
const TABLES_SHA256: &str = "2d24cfb1735849dab43a21c31f339bea382eb513ae7ff2b45ac05ac6e972ef0c";

/// A validated character table, columns aligned with the group's class
/// order.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    /// Field the values live in.
    pub field_order: u32,
    pub class_sizes: Vec<usize>,
    pub degrees: Vec<u32>,
    /// `values[i][c]` is χᵢ on class c.
    pub values: Vec<Vec<CyclotomicNumber>>,
    /// Row carrying the defining 2-dimensional representation, when that
    /// representation is irreducible (it is not for cyclic groups, nor for
    /// the order-4 binary dihedral degeneration).
    pub defining_row: Option<usize>,
}

impl CharacterTable {
    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn group_order(&self) -> usize {
        self.class_sizes.iter().sum()
    }

    /// Class-weighted inner product `⟨χᵢ, χⱼ⟩ = (1/|G|) Σ |C| χᵢ(c) χ̄ⱼ(c)`.
    pub fn inner_product(&self, i: usize, j: usize) -> Rational {
        let field = self.field_order;
        let mut acc = CyclotomicNumber::zero(field);
        for (c, &size) in self.class_sizes.iter().enumerate() {
            let term = self.values[i][c].mul(&self.values[j][c].conj());
            acc = acc.add(&term.scale(&rational(size as i64, 1)));
        }
        let acc = acc.scale(&rational(1, self.group_order() as i64));
        acc.to_rational()
            .expect("inner products of characters are rational")
    }
}

/// Builds the character table for a group, constructed in closed form for
/// the two infinite families and loaded from the embedded asset for
/// 2T/2O/2I. The result is validated either way; a failure means the table
/// and the group disagree and is reported as a data-integrity error.
pub fn character_table(group: &FiniteSubgroupSU2) -> Result<CharacterTable, McKayError> {
    let table = match group.family {
        SubgroupFamily::Cyclic(n) => cyclic_table(group, n)?,
        SubgroupFamily::BinaryDihedral(n) => binary_dihedral_table(group, n)?,
        _ => exceptional_table(group)?,
    };
    validate_table(group, &table)?;
    Ok(table)
}

fn integrity(msg: impl Into<String>) -> McKayError {
    McKayError::DataIntegrity(msg.into())
}

// ---- cyclic groups -------------------------------------------------------

/// χⱼ(g^a) = ζ_N^{ja}; the table is indexed by the discrete log of each
/// singleton class.
fn cyclic_table(group: &FiniteSubgroupSU2, n: u32) -> Result<CharacterTable, McKayError> {
    let powers = cyclic_powers(group, n)?;
    // powers[c] = a where class c = {g^a}
    let k = n as i64;
    let values: Vec<Vec<CyclotomicNumber>> = (0..k)
        .map(|j| {
            powers
                .iter()
                .map(|&a| CyclotomicNumber::root(n, j * a as i64))
                .collect()
        })
        .collect();
    Ok(CharacterTable {
        field_order: n,
        class_sizes: vec![1; n as usize],
        degrees: vec![1; n as usize],
        values,
        defining_row: None,
    })
}

/// Discrete log of each class representative with respect to the stored
/// generator.
fn cyclic_powers(group: &FiniteSubgroupSU2, n: u32) -> Result<Vec<u32>, McKayError> {
    let g = &group.elements[*group.generators().first().unwrap_or(&0)];
    let mut at = super::quaternion::CyclotomicQuaternion::one(group.field_order);
    let mut power_of_index: HashMap<usize, u32> = HashMap::new();
    for a in 0..n {
        let idx = group
            .index_of(&at)
            .ok_or_else(|| integrity("generator power escaped the group"))?;
        power_of_index.insert(idx, a);
        at = at.mul(g);
    }
    group
        .classes
        .iter()
        .map(|c| {
            power_of_index
                .get(&c.representative)
                .copied()
                .ok_or_else(|| integrity("cyclic class representative has no discrete log"))
        })
        .collect()
}

// ---- binary dihedral groups ----------------------------------------------

enum DihedralClass {
    RPower(u32),
    JEven,
    JOdd,
}

/// Classifies each conjugacy class of BD(4n) as a rotation-power class
/// {r^b, r^{-b}} or one of the two reflection cosets (b even / b odd).
fn dihedral_class_kinds(
    group: &FiniteSubgroupSU2,
    n: u32,
) -> Result<Vec<DihedralClass>, McKayError> {
    let r = &group.elements[group.generators()[0]];
    let j = &group.elements[group.generators()[1]];
    let mut power_of_index: HashMap<usize, u32> = HashMap::new();
    let mut at = super::quaternion::CyclotomicQuaternion::one(group.field_order);
    for b in 0..(2 * n) {
        let idx = group
            .index_of(&at)
            .ok_or_else(|| integrity("rotation power escaped the group"))?;
        power_of_index.insert(idx, b);
        at = at.mul(r);
    }
    group
        .classes
        .iter()
        .map(|c| {
            let rep = &group.elements[c.representative];
            if let Some(&b) = power_of_index.get(&c.representative.clone()) {
                return Ok(DihedralClass::RPower(b.min(2 * n - b)));
            }
            // rep = r^b · j, so rep · j⁻¹ = r^b
            let rb = rep.mul(&j.inverse());
            let idx = group
                .index_of(&rb)
                .ok_or_else(|| integrity("element outside <r> ∪ <r>j"))?;
            let b = power_of_index
                .get(&idx)
                .ok_or_else(|| integrity("reflection coset has no rotation part"))?;
            Ok(if b % 2 == 0 {
                DihedralClass::JEven
            } else {
                DihedralClass::JOdd
            })
        })
        .collect()
}

/// Four degree-1 characters from the abelianization plus n−1 degree-2
/// characters χ_a(r^b) = ζ_{2n}^{ab} + ζ_{2n}^{−ab}.
fn binary_dihedral_table(
    group: &FiniteSubgroupSU2,
    n: u32,
) -> Result<CharacterTable, McKayError> {
    let kinds = dihedral_class_kinds(group, n)?;
    let field = (2 * n as u64).lcm(&4) as u32;
    let class_count = group.classes.len();
    let one = || CyclotomicNumber::one(field);
    let zero = || CyclotomicNumber::zero(field);
    let m1 = || CyclotomicNumber::one(field).neg();
    let i_pos = || CyclotomicNumber::root(field, field as i64 / 4);

    let mut values: Vec<Vec<CyclotomicNumber>> = Vec::new();
    let mut degrees: Vec<u32> = Vec::new();

    values.push(vec![one(); class_count]);
    degrees.push(1);

    // r ↦ 1, j ↦ −1
    values.push(
        kinds
            .iter()
            .map(|k| match k {
                DihedralClass::RPower(_) => one(),
                _ => m1(),
            })
            .collect(),
    );
    degrees.push(1);

    // r ↦ −1; j ↦ ±1 for even n, j ↦ ±i for odd n (since j² = r^n)
    for second in [false, true] {
        let j_val = if n.is_multiple_of(2) {
            if second {
                m1()
            } else {
                one()
            }
        } else if second {
            i_pos().neg()
        } else {
            i_pos()
        };
        values.push(
            kinds
                .iter()
                .map(|k| match k {
                    DihedralClass::RPower(b) => {
                        if b % 2 == 0 {
                            one()
                        } else {
                            m1()
                        }
                    }
                    DihedralClass::JEven => j_val.clone(),
                    DihedralClass::JOdd => j_val.neg(),
                })
                .collect(),
        );
        degrees.push(1);
    }

    let mut defining_row = None;
    for a in 1..n {
        if a == 1 {
            defining_row = Some(values.len());
        }
        values.push(
            kinds
                .iter()
                .map(|k| match k {
                    DihedralClass::RPower(b) => {
                        let e = (a as i64) * (*b as i64) * (field as i64) / (2 * n as i64);
                        CyclotomicNumber::root(field, e).add(&CyclotomicNumber::root(field, -e))
                    }
                    _ => zero(),
                })
                .collect(),
        );
        degrees.push(2);
    }

    Ok(CharacterTable {
        field_order: field,
        class_sizes: group.classes.iter().map(|c| c.size()).collect(),
        degrees,
        values,
        defining_row,
    })
}

// ---- exceptional groups: embedded asset ----------------------------------

struct AssetClass {
    label: String,
    size: usize,
    negate: String,
    trace: CyclotomicNumber,
}

struct AssetGroup {
    field: u32,
    order: usize,
    classes: Vec<AssetClass>,
    irreps: Vec<(u32, Vec<CyclotomicNumber>)>,
}

fn parse_asset() -> Result<HashMap<String, AssetGroup>, McKayError> {
    let digest = Sha256::digest(TABLES_TEXT.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    if hex != TABLES_SHA256 {
        return Err(integrity(format!(
            "character-table asset checksum mismatch: {hex}"
        )));
    }
    let mut groups = HashMap::new();
    let mut current: Option<(String, AssetGroup)> = None;
    let mut version_seen = false;
    for line in TABLES_TEXT.lines() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "version" => {
                if tokens.get(1) != Some(&"1") {
                    return Err(integrity("unsupported asset version"));
                }
                version_seen = true;
            }
            "group" => {
                if let Some((name, g)) = current.take() {
                    groups.insert(name, g);
                }
                // group <name> order <order> field <N>
                if tokens.len() != 6 || tokens[2] != "order" || tokens[4] != "field" {
                    return Err(integrity(format!("malformed group line: {line}")));
                }
                let order = tokens[3].parse().map_err(|_| integrity("bad order"))?;
                let field = tokens[5].parse().map_err(|_| integrity("bad field"))?;
                current = Some((
                    tokens[1].to_string(),
                    AssetGroup {
                        field,
                        order,
                        classes: Vec::new(),
                        irreps: Vec::new(),
                    },
                ));
            }
            "class" => {
                let (_, g) = current
                    .as_mut()
                    .ok_or_else(|| integrity("class line outside a group"))?;
                if tokens.len() != 5 {
                    return Err(integrity(format!("malformed class line: {line}")));
                }
                g.classes.push(AssetClass {
                    label: tokens[1].to_string(),
                    size: tokens[2].parse().map_err(|_| integrity("bad class size"))?,
                    negate: tokens[3].to_string(),
                    trace: CyclotomicNumber::parse(g.field, tokens[4]).map_err(integrity)?,
                });
            }
            "irrep" => {
                let (_, g) = current
                    .as_mut()
                    .ok_or_else(|| integrity("irrep line outside a group"))?;
                if tokens.len() != 2 + g.classes.len() {
                    return Err(integrity(format!("irrep arity mismatch: {line}")));
                }
                let degree = tokens[1].parse().map_err(|_| integrity("bad degree"))?;
                let values = tokens[2..]
                    .iter()
                    .map(|t| CyclotomicNumber::parse(g.field, t))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(integrity)?;
                g.irreps.push((degree, values));
            }
            other => return Err(integrity(format!("unknown asset directive `{other}`"))),
        }
    }
    if let Some((name, g)) = current.take() {
        groups.insert(name, g);
    }
    if !version_seen {
        return Err(integrity("asset missing version line"));
    }
    Ok(groups)
}

/// Matches asset classes to computed classes by (size, trace), resolving
/// ties so that the matching commutes with negation, then reorders the
/// table columns into the group's class order.
fn exceptional_table(group: &FiniteSubgroupSU2) -> Result<CharacterTable, McKayError> {
    let assets = parse_asset()?;
    let name = group.family.to_string();
    let asset = assets
        .get(&name)
        .ok_or_else(|| integrity(format!("no embedded table for {name}")))?;
    if asset.order != group.order() || asset.classes.len() != group.classes.len() {
        return Err(integrity(format!("{name}: order/class-count mismatch")));
    }
    let common = (asset.field as u64).lcm(&(group.field_order as u64)) as u32;
    let computed_traces: Vec<CyclotomicNumber> = group
        .classes
        .iter()
        .map(|c| c.trace.coerce(common).unwrap())
        .collect();
    // negation on computed classes
    let computed_negate: Vec<usize> = group
        .classes
        .iter()
        .map(|c| group.class_of(group.negation(c.representative)))
        .collect();
    let label_index: HashMap<&str, usize> = asset
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.label.as_str(), i))
        .collect();
    let asset_negate: Vec<usize> = asset
        .classes
        .iter()
        .map(|c| {
            label_index
                .get(c.negate.as_str())
                .copied()
                .ok_or_else(|| integrity(format!("unknown negate label {}", c.negate)))
        })
        .collect::<Result<_, _>>()?;

    // backtracking assignment asset-class -> computed-class
    let k = asset.classes.len();
    let computed_sizes: Vec<usize> = group.classes.iter().map(|c| c.size()).collect();
    struct Matcher<'a> {
        asset: &'a AssetGroup,
        common: u32,
        computed_traces: &'a [CyclotomicNumber],
        computed_sizes: &'a [usize],
        computed_negate: &'a [usize],
        asset_negate: &'a [usize],
        assign: Vec<usize>,
        used: Vec<bool>,
    }
    impl Matcher<'_> {
        fn solve(&mut self, i: usize) -> bool {
            if i == self.asset.classes.len() {
                return true;
            }
            if self.assign[i] != usize::MAX {
                return self.solve(i + 1);
            }
            let ac = &self.asset.classes[i];
            let trace = ac.trace.coerce(self.common).unwrap();
            for c in 0..self.computed_traces.len() {
                if self.used[c]
                    || self.computed_sizes[c] != ac.size
                    || self.computed_traces[c] != trace
                {
                    continue;
                }
                // propagate through negation
                let ni = self.asset_negate[i];
                let nc = self.computed_negate[c];
                let prev_ni = self.assign[ni];
                if prev_ni != usize::MAX && prev_ni != nc {
                    continue;
                }
                let set_ni = prev_ni == usize::MAX && ni != i;
                if set_ni && self.used[nc] {
                    continue;
                }
                self.assign[i] = c;
                self.used[c] = true;
                if set_ni {
                    self.assign[ni] = nc;
                    self.used[nc] = true;
                }
                if self.solve(i + 1) {
                    return true;
                }
                self.assign[i] = usize::MAX;
                self.used[c] = false;
                if set_ni {
                    self.assign[ni] = usize::MAX;
                    self.used[nc] = false;
                }
            }
            false
        }
    }
    let mut matcher = Matcher {
        asset,
        common,
        computed_traces: &computed_traces,
        computed_sizes: &computed_sizes,
        computed_negate: &computed_negate,
        asset_negate: &asset_negate,
        assign: vec![usize::MAX; k],
        used: vec![false; k],
    };
    if !matcher.solve(0) {
        return Err(integrity(format!(
            "{name}: no class matching consistent with sizes/traces/negation"
        )));
    }
    let assign = matcher.assign;

    // reorder columns: table[i][computed class] = asset values[i][asset class]
    let mut values: Vec<Vec<CyclotomicNumber>> = Vec::with_capacity(asset.irreps.len());
    for (_, row) in &asset.irreps {
        let mut out = vec![CyclotomicNumber::zero(asset.field); k];
        for (ai, v) in row.iter().enumerate() {
            out[assign[ai]] = v.clone();
        }
        values.push(out);
    }
    let degrees: Vec<u32> = asset.irreps.iter().map(|(d, _)| *d).collect();

    // the defining representation is the degree-2 row matching the traces
    let mut defining_row = None;
    for (i, row) in values.iter().enumerate() {
        if degrees[i] != 2 {
            continue;
        }
        let matches = (0..k).all(|c| {
            row[c].coerce(common).unwrap() == computed_traces[c]
        });
        if matches {
            if defining_row.is_some() {
                return Err(integrity(format!("{name}: two defining-rep rows")));
            }
            defining_row = Some(i);
        }
    }
    if defining_row.is_none() {
        return Err(integrity(format!(
            "{name}: no degree-2 row matches the computed traces"
        )));
    }

    Ok(CharacterTable {
        field_order: asset.field,
        class_sizes: computed_sizes,
        degrees,
        values,
        defining_row,
    })
}

// ---- validation ----------------------------------------------------------

/// Checks every table invariant exactly: counts, degrees, Σdeg² = |G|,
/// triviality of the first row, row and column orthogonality, and a valid
/// decomposition of the defining 2-dimensional character.
pub fn validate_table(
    group: &FiniteSubgroupSU2,
    table: &CharacterTable,
) -> Result<(), McKayError> {
    let k = table.class_count();
    if k != group.classes.len() || table.values.len() != k {
        return Err(integrity("irrep/class count mismatch"));
    }
    if table.group_order() != group.order() {
        return Err(integrity("class sizes do not sum to the group order"));
    }
    let sq: usize = table.degrees.iter().map(|&d| (d as usize) * (d as usize)).sum();
    if sq != group.order() {
        return Err(integrity("sum of squared degrees misses the group order"));
    }
    if !table.values[0]
        .iter()
        .all(|v| *v == CyclotomicNumber::one(table.field_order))
    {
        return Err(integrity("first irreducible is not the trivial one"));
    }
    // identity class: the unique size-1 class with trace 2
    let id_class = group
        .classes
        .iter()
        .position(|c| {
            c.size() == 1
                && c.trace
                    == CyclotomicNumber::from_rational(group.field_order, rational(2, 1))
        })
        .ok_or_else(|| integrity("no identity class"))?;
    for (i, row) in table.values.iter().enumerate() {
        if row[id_class].to_rational() != Some(rational(table.degrees[i] as i64, 1)) {
            return Err(integrity("degree column disagrees with stated degree"));
        }
        if table.degrees[i] == 0 {
            return Err(integrity("zero degree"));
        }
    }
    // row orthogonality
    for i in 0..k {
        for j in i..k {
            let want = if i == j { rational(1, 1) } else { rational(0, 1) };
            let ip = checked_inner_product(table, i, j)?;
            if ip != want {
                return Err(integrity(format!(
                    "row orthogonality fails at ({i},{j}): {ip}"
                )));
            }
        }
    }
    // column orthogonality: Σ_i χᵢ(c) χ̄ᵢ(c') = δ_{cc'} |G| / |C_c|
    for c in 0..k {
        for c2 in c..k {
            let mut acc = CyclotomicNumber::zero(table.field_order);
            for row in &table.values {
                acc = acc.add(&row[c].mul(&row[c2].conj()));
            }
            let got = acc
                .to_rational()
                .ok_or_else(|| integrity("column inner product is irrational"))?;
            let want = if c == c2 {
                rational(group.order() as i64, table.class_sizes[c] as i64)
            } else {
                rational(0, 1)
            };
            if got != want {
                return Err(integrity(format!(
                    "column orthogonality fails at ({c},{c2})"
                )));
            }
        }
    }
    // the defining character decomposes with nonnegative integer
    // multiplicities of total dimension 2
    let common = (table.field_order as u64).lcm(&(group.field_order as u64)) as u32;
    let traces: Vec<CyclotomicNumber> = group
        .classes
        .iter()
        .map(|c| c.trace.coerce(common).unwrap())
        .collect();
    let mut total = Rational::zero();
    for (i, row) in table.values.iter().enumerate() {
        let mut acc = CyclotomicNumber::zero(common);
        for c in 0..k {
            let term = traces[c].mul(&row[c].conj().coerce(common).unwrap());
            acc = acc.add(&term.scale(&rational(table.class_sizes[c] as i64, 1)));
        }
        let mult = acc
            .scale(&rational(1, group.order() as i64))
            .to_rational()
            .ok_or_else(|| integrity("⟨χ_V, χᵢ⟩ is irrational"))?;
        if !mult.is_integer() || mult.is_negative() {
            return Err(integrity("defining character decomposition is not integral"));
        }
        total += mult * rational(table.degrees[i] as i64, 1);
    }
    if total != rational(2, 1) {
        return Err(integrity("defining character does not decompose to dimension 2"));
    }
    // where the defining rep is declared irreducible, its row must equal
    // the traces class by class
    if let Some(r) = table.defining_row {
        for (c, trace) in traces.iter().enumerate() {
            if table.values[r][c].coerce(common).unwrap() != *trace {
                return Err(integrity("defining row disagrees with quaternion traces"));
            }
        }
    }
    Ok(())
}

fn checked_inner_product(
    table: &CharacterTable,
    i: usize,
    j: usize,
) -> Result<Rational, McKayError> {
    let mut acc = CyclotomicNumber::zero(table.field_order);
    for (c, &size) in table.class_sizes.iter().enumerate() {
        let term = table.values[i][c].mul(&table.values[j][c].conj());
        acc = acc.add(&term.scale(&rational(size as i64, 1)));
    }
    acc.scale(&rational(1, table.group_order() as i64))
        .to_rational()
        .ok_or_else(|| integrity("irrational character inner product"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mckay::group::build_group;

    #[test]
    fn cyclic_four_has_minus_one_at_the_second_character() {
        let g = build_group(SubgroupFamily::Cyclic(4)).unwrap();
        let t = character_table(&g).unwrap();
        // χ₂(g) = ζ₄² = −1 on the class of the generator
        let powers = cyclic_powers(&g, 4).unwrap();
        let c = powers.iter().position(|&a| a == 1).unwrap();
        assert_eq!(
            t.values[2][c],
            CyclotomicNumber::from_rational(4, rational(-1, 1))
        );
    }

    #[test]
    fn exceptional_degree_vectors() {
        let t2 = character_table(&build_group(SubgroupFamily::BinaryTetrahedral).unwrap()).unwrap();
        assert_eq!(t2.degrees, vec![1, 1, 1, 2, 2, 2, 3]);
        assert_eq!(
            t2.degrees.iter().map(|&d| (d * d) as usize).sum::<usize>(),
            24
        );
        let ti = character_table(&build_group(SubgroupFamily::BinaryIcosahedral).unwrap()).unwrap();
        assert_eq!(ti.degrees, vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
        assert_eq!(
            ti.degrees.iter().map(|&d| (d * d) as usize).sum::<usize>(),
            120
        );
        let to = character_table(&build_group(SubgroupFamily::BinaryOctahedral).unwrap()).unwrap();
        assert_eq!(to.degrees, vec![1, 1, 2, 2, 2, 3, 3, 4]);
    }

    #[test]
    fn binary_dihedral_tables_validate_for_small_n() {
        for n in 1..=6 {
            let g = build_group(SubgroupFamily::BinaryDihedral(n)).unwrap();
            let t = character_table(&g).unwrap();
            assert_eq!(t.class_count(), n as usize + 3);
            let twos = t.degrees.iter().filter(|&&d| d == 2).count();
            assert_eq!(twos, n as usize - 1);
        }
    }

    #[test]
    fn tables_validate_for_cyclic_groups() {
        for n in 1..=12 {
            let g = build_group(SubgroupFamily::Cyclic(n)).unwrap();
            character_table(&g).unwrap();
        }
    }

    #[test]
    fn corrupted_table_is_rejected() {
        let g = build_group(SubgroupFamily::BinaryTetrahedral).unwrap();
        let mut t = character_table(&g).unwrap();
        t.values[3][2] = CyclotomicNumber::from_rational(t.field_order, rational(7, 1));
        assert!(matches!(
            validate_table(&g, &t),
            Err(McKayError::DataIntegrity(_))
        ));
    }
}
