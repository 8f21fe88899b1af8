//! Named constructors for the benchmark corpus of small groups, and the
//! `C12`/`D8`/`S4`/`A5`/`Q8`/`S3xC2` name grammar shared with the CLI.

use super::{FiniteGroup, GroupError, CAYLEY_CAP};

/// Cyclic group of order `n`.
pub fn cyclic(n: u32) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::Invalid(
            "cyclic group needs positive order".into(),
        ));
    }
    let mut table = vec![0u32; (n as usize).pow(2)];
    for a in 0..n {
        for b in 0..n {
            table[(a * n + b) as usize] = (a + b) % n;
        }
    }
    FiniteGroup::from_cayley_table(&format!("C{n}"), n, table)
}

/// Dihedral group of order `n` (so `D8` is the symmetry group of the
/// square). `n` must be even and at least 2.
pub fn dihedral(n: u32) -> Result<FiniteGroup, GroupError> {
    if n < 2 || n % 2 != 0 {
        return Err(GroupError::Invalid(format!(
            "dihedral order must be even and >= 2, got {n}"
        )));
    }
    let m = n / 2;
    // id = i + j*m encodes r^i s^j
    let encode = |i: u32, j: u32| i + j * m;
    let mut table = vec![0u32; (n as usize).pow(2)];
    for x in 0..n {
        for y in 0..n {
            let (i1, j1) = (x % m, x / m);
            let (i2, j2) = (y % m, y / m);
            let i = if j1 == 0 {
                (i1 + i2) % m
            } else {
                (i1 + m - i2 % m) % m
            };
            table[(x * n + y) as usize] = encode(i, (j1 + j2) % 2);
        }
    }
    FiniteGroup::from_cayley_table(&format!("D{n}"), n, table)
}

/// Symmetric group on `n` points as a permutation group, `n <= 8`.
pub fn symmetric(n: u32) -> Result<FiniteGroup, GroupError> {
    if n == 0 || n > 8 {
        return Err(GroupError::Invalid(format!(
            "symmetric degree out of range: {n}"
        )));
    }
    FiniteGroup::from_permutations(&format!("S{n}"), n as u16, all_permutations(n as u16))
}

/// Alternating group on `n` points, `2 <= n <= 8`.
pub fn alternating(n: u32) -> Result<FiniteGroup, GroupError> {
    if n < 2 || n > 8 {
        return Err(GroupError::Invalid(format!(
            "alternating degree out of range: {n}"
        )));
    }
    let evens = all_permutations(n as u16)
        .into_iter()
        .filter(|p| perm_sign(p) == 1)
        .collect();
    FiniteGroup::from_permutations(&format!("A{n}"), n as u16, evens)
}

/// The quaternion group of order 8. Ids: 0..8 are `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion8() -> Result<FiniteGroup, GroupError> {
    // unit multiplication over {1, i, j, k}: (sign, unit)
    const UNIT: [[(i8, u8); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    let decode = |x: u32| -> (i8, u8) { (if x % 2 == 0 { 1 } else { -1 }, (x / 2) as u8) };
    let encode = |s: i8, u: u8| -> u32 { (u as u32) * 2 + if s == 1 { 0 } else { 1 } };
    let mut table = vec![0u32; 64];
    for a in 0..8u32 {
        for b in 0..8u32 {
            let (sa, ua) = decode(a);
            let (sb, ub) = decode(b);
            let (s, u) = UNIT[ua as usize][ub as usize];
            table[(a * 8 + b) as usize] = encode(sa * sb * s, u);
        }
    }
    FiniteGroup::from_cayley_table("Q8", 8, table)
}

/// Direct product. Small products get a Cayley table; products of two
/// permutation groups that exceed the table cap act on the disjoint union
/// of the two domains.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let label = format!("{}x{}", g.label(), h.label());
    let order = g
        .order()
        .checked_mul(h.order())
        .ok_or_else(|| GroupError::Invalid("product order overflow".into()))?;
    if order < CAYLEY_CAP {
        let hn = h.order();
        let n = order as usize;
        let mut table = vec![0u32; n * n];
        for x in 0..order {
            for y in 0..order {
                let (g1, h1) = (x / hn, x % hn);
                let (g2, h2) = (y / hn, y % hn);
                table[x as usize * n + y as usize] = g.mul(g1, g2) * hn + h.mul(h1, h2);
            }
        }
        return FiniteGroup::from_cayley_table(&label, order, table);
    }
    match (g.permutation(0), h.permutation(0)) {
        (Some(pg), Some(ph)) => {
            let (dg, dh) = (pg.len() as u16, ph.len() as u16);
            let mut elements = Vec::with_capacity(order as usize);
            for a in g.elements() {
                for b in h.elements() {
                    let pa = g.permutation(a).unwrap();
                    let pb = h.permutation(b).unwrap();
                    let mut img: Vec<u16> = Vec::with_capacity((dg + dh) as usize);
                    img.extend_from_slice(pa);
                    img.extend(pb.iter().map(|&i| i + dg));
                    elements.push(img);
                }
            }
            FiniteGroup::from_permutations(&label, dg + dh, elements)
        }
        _ => Err(GroupError::Invalid(format!(
            "product {label} of order {order} needs two permutation operands"
        ))),
    }
}

/// Parse a corpus name: atoms `C<n>`, `D<n>`, `S<n>`, `A<n>`, `Q8`, joined
/// with `x` for direct products, e.g. `"S3xC2"`.
pub fn parse_group_name(name: &str) -> Result<FiniteGroup, GroupError> {
    let unknown = || GroupError::UnknownName {
        name: name.to_string(),
    };
    let mut parts = name.split('x');
    let mut acc = parse_atom(parts.next().ok_or_else(unknown)?, name)?;
    for part in parts {
        let next = parse_atom(part, name)?;
        acc = direct_product(&acc, &next)?;
    }
    Ok(acc)
}

fn parse_atom(atom: &str, whole: &str) -> Result<FiniteGroup, GroupError> {
    let unknown = || GroupError::UnknownName {
        name: whole.to_string(),
    };
    let mut chars = atom.chars();
    let head = chars.next().ok_or_else(unknown)?;
    let n: u32 = chars.as_str().parse().map_err(|_| unknown())?;
    match head {
        'C' => cyclic(n),
        'D' => dihedral(n),
        'S' => symmetric(n),
        'A' => alternating(n),
        'Q' if n == 8 => quaternion8(),
        _ => Err(unknown()),
    }
    .map_err(|e| match e {
        GroupError::Invalid(_) => unknown(),
        other => other,
    })
}

/// The fixed direct-product slice of the corpus.
pub const DIRECT_PRODUCT_NAMES: &[&str] = &[
    "C2xC2", "C2xC4", "C2xC2xC2", "C4xC4", "C2xC6", "C3xC3", "C5xC5", "S3xC2", "S3xC3", "S3xC4",
    "S3xS3", "D8xC2", "D8xC3", "D8xD8", "Q8xC2", "Q8xC3", "Q8xQ8", "A4xC2", "A4xC3", "A4xC4",
    "D10xS3",
];

/// Every corpus group of order at most `max_order`: all cyclic and dihedral
/// groups in range, the symmetric and alternating groups up to degree 5,
/// Q8, and the fixed direct-product list.
pub fn corpus_up_to(max_order: u32) -> Vec<FiniteGroup> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.push(cyclic(n).expect("cyclic corpus"));
    }
    for n in (4..=max_order).step_by(2) {
        out.push(dihedral(n).expect("dihedral corpus"));
    }
    for n in 2..=5u32 {
        let order: u32 = (1..=n).product();
        if order <= max_order {
            out.push(symmetric(n).expect("symmetric corpus"));
        }
    }
    for n in 3..=5u32 {
        let order: u32 = (1..=n).product::<u32>() / 2;
        if order <= max_order {
            out.push(alternating(n).expect("alternating corpus"));
        }
    }
    if max_order >= 8 {
        out.push(quaternion8().expect("quaternion corpus"));
    }
    for name in DIRECT_PRODUCT_NAMES {
        let g = parse_group_name(name).expect("product corpus");
        if g.order() <= max_order {
            out.push(g);
        }
    }
    out
}

/// Image tuple of a permutation given by disjoint cycles over 0-based
/// points; handy for naming specific elements in tests.
pub fn perm_from_cycles(degree: u16, cycles: &[&[u16]]) -> Vec<u16> {
    let mut img: Vec<u16> = (0..degree).collect();
    for cycle in cycles {
        for w in cycle.windows(2) {
            img[w[0] as usize] = w[1];
        }
        if let (Some(&first), Some(&last)) = (cycle.first(), cycle.last()) {
            img[last as usize] = first;
        }
    }
    img
}

fn all_permutations(degree: u16) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut current: Vec<u16> = Vec::with_capacity(degree as usize);
    let mut used = vec![false; degree as usize];
    fn rec(degree: u16, current: &mut Vec<u16>, used: &mut [bool], out: &mut Vec<Vec<u16>>) {
        if current.len() == degree as usize {
            out.push(current.clone());
            return;
        }
        for v in 0..degree {
            if !used[v as usize] {
                used[v as usize] = true;
                current.push(v);
                rec(degree, current, used, out);
                current.pop();
                used[v as usize] = false;
            }
        }
    }
    rec(degree, &mut current, &mut used, &mut out);
    out
}

fn perm_sign(p: &[u16]) -> i8 {
    let mut sign = 1;
    let mut seen = vec![false; p.len()];
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = p[j] as usize;
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}
