//! Fixpoint propagation of the consistency rules over the class table.
//!
//! Rule 1 (merged classes relate identically to every third class) lives in
//! the union-find reconciliation. Rule 2 constrains, for every triple of
//! classes pairwise at intersection 1, the pattern of intersections any
//! fourth class can have with the triple: the triple is either a triangle
//! of coordinate sets AB/AC/BC or a star AB/AC/AD, and each form admits a
//! fixed list of multisets.
//!
//! In star form a fourth class forced to the multiset {1,1,0} has its
//! coordinate set pinned by where the 0 sits ({B,C}, {B,D} or {C,D}), so
//! two such classes with the same pattern must merge and ones with
//! different patterns must intersect in exactly one coordinate. The
//! published bound of at most three {1,1,0} patterns counts final classes
//! and follows from this by pigeonhole; counting unmerged classes directly
//! would wrongly reject states whose forced classes still merge.

use std::sync::OnceLock;

use super::table::{Contradiction, SearchState, Value};

#[derive(Debug, Clone, Copy, Default)]
struct Entry {
    /// Per-position supported-value masks if the triple is a triangle.
    tri: Option<[u8; 3]>,
    /// Same for the star form.
    star: Option<[u8; 3]>,
    /// All star-consistent assignments realize the multiset {1,1,0}.
    star_forced_110: bool,
    /// Achievable zero positions of the forced {1,1,0} pattern (bit p set
    /// when the 0 can sit at triple position p).
    star_zero_positions: u8,
}

struct RuleTable {
    entries: Box<[Entry; 512]>,
}

const TRI_ALLOWED: [[u8; 3]; 3] = [[0, 0, 0], [0, 1, 1], [1, 1, 2]];
const STAR_ALLOWED: [[u8; 3]; 5] = [[0, 0, 0], [0, 0, 1], [0, 1, 1], [1, 1, 1], [1, 1, 2]];

fn build_rule_table() -> RuleTable {
    let mut entries = Box::new([Entry::default(); 512]);
    for d1 in 1u8..8 {
        for d2 in 1u8..8 {
            for d3 in 1u8..8 {
                let mut tri_sup = [0u8; 3];
                let mut star_sup = [0u8; 3];
                let mut star_all_110 = true;
                let mut star_any = false;
                let mut zero_pos = 0u8;
                for a1 in 0..3u8 {
                    if d1 >> a1 & 1 == 0 {
                        continue;
                    }
                    for a2 in 0..3u8 {
                        if d2 >> a2 & 1 == 0 {
                            continue;
                        }
                        for a3 in 0..3u8 {
                            if d3 >> a3 & 1 == 0 {
                                continue;
                            }
                            let assignment = [a1, a2, a3];
                            let mut ms = assignment;
                            ms.sort_unstable();
                            if TRI_ALLOWED.contains(&ms) {
                                tri_sup[0] |= 1 << a1;
                                tri_sup[1] |= 1 << a2;
                                tri_sup[2] |= 1 << a3;
                            }
                            if STAR_ALLOWED.contains(&ms) {
                                star_sup[0] |= 1 << a1;
                                star_sup[1] |= 1 << a2;
                                star_sup[2] |= 1 << a3;
                                star_any = true;
                                if ms == [0, 1, 1] {
                                    let zp = assignment.iter().position(|&a| a == 0).unwrap();
                                    zero_pos |= 1 << zp;
                                } else {
                                    star_all_110 = false;
                                }
                            }
                        }
                    }
                }
                let idx = (d1 as usize) << 6 | (d2 as usize) << 3 | d3 as usize;
                entries[idx] = Entry {
                    tri: (tri_sup != [0, 0, 0]).then_some(tri_sup),
                    star: star_any.then_some(star_sup),
                    star_forced_110: star_any && star_all_110,
                    star_zero_positions: if star_any && star_all_110 { zero_pos } else { 0 },
                };
            }
        }
    }
    RuleTable { entries }
}

fn rule_table() -> &'static RuleTable {
    static TABLE: OnceLock<RuleTable> = OnceLock::new();
    TABLE.get_or_init(build_rule_table)
}

/// Apply rule-2 filtering across all pairwise-1 triples once. Returns
/// whether anything changed.
fn rule2_pass(st: &mut SearchState) -> Result<bool, Contradiction> {
    let lut = rule_table();
    let roots = st.roots();
    let k = roots.len();
    let mut changed = false;

    // adjacency over root positions where the value is pinned to 1
    let words = k.div_ceil(64);
    let mut one = vec![0u64; k * words];
    for i in 0..k {
        for j in i + 1..k {
            if st.get(roots[i], roots[j]) == Value::ONE {
                one[i * words + j / 64] |= 1 << (j % 64);
                one[j * words + i / 64] |= 1 << (i % 64);
            }
        }
    }

    for i in 0..k {
        for j in i + 1..k {
            if one[i * words + j / 64] >> (j % 64) & 1 == 0 {
                continue;
            }
            // candidates c > j adjacent to both i and j
            for w in j / 64..words {
                let mut bits = one[i * words + w] & one[j * words + w];
                if w == j / 64 {
                    bits &= u64::MAX.checked_shl(j as u32 % 64 + 1).unwrap_or(0);
                }
                while bits != 0 {
                    let c = w * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    changed |= filter_triple(st, lut, &roots, [i, j, c])?;
                }
            }
        }
    }
    Ok(changed)
}

fn entry_for(st: &SearchState, lut: &RuleTable, members: (usize, usize, usize), re: usize) -> Entry {
    let idx = (st.get(members.0, re) as usize) << 6
        | (st.get(members.1, re) as usize) << 3
        | st.get(members.2, re) as usize;
    lut.entries[idx]
}

fn filter_triple(
    st: &mut SearchState,
    lut: &RuleTable,
    roots: &[usize],
    triple: [usize; 3],
) -> Result<bool, Contradiction> {
    let [i, j, c] = triple;
    let members = (roots[i], roots[j], roots[c]);
    let mut tri_ok = true;
    let mut star_ok = true;
    // forced {1,1,0} classes with a unique zero position
    let mut forced: Vec<(usize, u8)> = Vec::new();
    for (e, &re) in roots.iter().enumerate() {
        if e == i || e == j || e == c {
            continue;
        }
        let entry = entry_for(st, lut, members, re);
        if entry.tri.is_none() {
            tri_ok = false;
        }
        match entry.star {
            None => star_ok = false,
            Some(_) => {
                if entry.star_forced_110 && entry.star_zero_positions.count_ones() == 1 {
                    forced.push((re, entry.star_zero_positions));
                }
            }
        }
        if !tri_ok && !star_ok {
            return Err(Contradiction);
        }
    }
    // two forced classes with the same zero position denote the same
    // coordinate 2-set; if they cannot merge, the star form is impossible
    if star_ok {
        'pairs: for (x, &(rx, px)) in forced.iter().enumerate() {
            for &(ry, py) in &forced[x + 1..] {
                if px == py && st.get(rx, ry) & Value::TWO == 0 {
                    star_ok = false;
                    break 'pairs;
                }
            }
        }
    }
    if !tri_ok && !star_ok {
        return Err(Contradiction);
    }

    let mut changed = false;
    for (e, &re) in roots.iter().enumerate() {
        if e == i || e == j || e == c {
            continue;
        }
        let entry = entry_for(st, lut, members, re);
        let mut sup = [0u8; 3];
        if tri_ok {
            if let Some(t) = entry.tri {
                for p in 0..3 {
                    sup[p] |= t[p];
                }
            }
        }
        if star_ok {
            if let Some(s) = entry.star {
                for p in 0..3 {
                    sup[p] |= s[p];
                }
            }
        }
        changed |= st.restrict(members.0, re, sup[0])?;
        changed |= st.restrict(members.1, re, sup[1])?;
        changed |= st.restrict(members.2, re, sup[2])?;
    }

    // star-only states pin the forced classes against each other
    if !tri_ok && star_ok {
        for (x, &(rx, px)) in forced.iter().enumerate() {
            for &(ry, py) in &forced[x + 1..] {
                let mask = if px == py { Value::TWO } else { Value::ONE };
                changed |= st.restrict(rx, ry, mask)?;
            }
        }
    }
    Ok(changed)
}

/// Run rule 1 and rule 2 to a joint fixpoint.
pub fn propagate(st: &mut SearchState) -> Result<(), Contradiction> {
    loop {
        let merged = st.drain_merges()?;
        let filtered = rule2_pass(st)?;
        // new pins to 2 during filtering require another merge round
        if !merged && !filtered {
            return Ok(());
        }
    }
}
