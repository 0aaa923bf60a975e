//! Short structural names for subgroup classes, used in printed class tables and
//! G-set literals. Names are unique within a group: repeats get letter suffixes in
//! class order.

use super::{Group, QuotientType, Subgroup, SubgroupClass};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

pub(super) fn assign_names(g: &Group, classes: &mut [SubgroupClass]) {
    let base: Vec<String> = classes.iter().map(|c| describe(g, &c.rep)).collect();
    let mut count: BTreeMap<&str, usize> = BTreeMap::new();
    for b in &base {
        *count.entry(b.as_str()).or_default() += 1;
    }
    let mut used: BTreeMap<&str, usize> = BTreeMap::new();
    for (c, b) in classes.iter_mut().zip(&base) {
        if count[b.as_str()] > 1 {
            let k = used.entry(b.as_str()).or_default();
            c.name = format!("{b}{}", (b'a' + *k as u8) as char);
            *k += 1;
        } else {
            c.name = b.clone();
        }
    }
}

fn describe(g: &Group, h: &Subgroup) -> String {
    let n = h.order();
    if n == 1 {
        return String::from("1");
    }
    let elems = h.elements();
    let orders: Vec<usize> = elems.iter().map(|&e| g.element_order(e)).collect();
    if orders.contains(&n) {
        return format!("C{n}");
    }
    let gens = g.subgroup_generators(h);
    let abelian = gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
    if abelian {
        return abelian_name(&orders, n);
    }
    if n == 6 {
        return String::from("S3");
    }
    if n == 8 && orders.iter().filter(|&&o| o == 2).count() == 1 {
        return String::from("Q8");
    }
    // Dihedral: a cyclic subgroup of index 2 inverted by an outside involution.
    let half = n / 2;
    if let Some(r) = elems.iter().copied().find(|&e| g.element_order(e) == half) {
        let rot = g.closure(&[r]);
        let r_inv = g.inv(r);
        if elems.iter().any(|&s| !rot.contains(s) && g.element_order(s) == 2 && g.conj(s, r) == r_inv) {
            return format!("D{n}");
        }
    }
    if n == 12 && !orders.contains(&6) && orders.iter().filter(|&&o| o == 2).count() == 3 {
        return String::from("A4");
    }
    if n == 24 && orders.iter().filter(|&&o| o == 2).count() == 9 && !orders.iter().any(|&o| o > 4) {
        return String::from("S4");
    }
    // Split extension of a normal cyclic subgroup by a cyclic complement.
    for &a in elems {
        let na = g.element_order(a);
        if na == 1 || na == n {
            continue;
        }
        let nrm = g.closure(&[a]);
        if !g.is_normal_in(&nrm, h) {
            continue;
        }
        let m = n / na;
        let has_complement =
            elems.iter().any(|&b| g.element_order(b) == m && g.closure(&[b]).intersection(&nrm).order() == 1);
        if has_complement && matches!(g.recognize_quotient(&nrm, h), Ok(QuotientType::Cyclic(_))) {
            return format!("C{na}:C{m}");
        }
    }
    format!("H{n}")
}

/// Invariant-factor name such as `C2xC2` or `C2xC4`; `orders` lists every element's order.
fn abelian_name(orders: &[usize], n: usize) -> String {
    // For each prime p, the number of factors with p-exponent at least i is
    // log_p of |{x : x^(p^i) = 1}| / |{x : x^(p^(i-1)) = 1}|.
    let mut primary: Vec<Vec<usize>> = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            let mut exps: Vec<usize> = Vec::new();
            let mut prev = 1usize;
            let mut pi = 1usize;
            loop {
                pi *= p;
                let cnt = orders.iter().filter(|&&o| pi.is_multiple_of(o) && super::is_prime_power_of(o, p)).count();
                if cnt == prev {
                    break;
                }
                let mut ratio = cnt / prev;
                let mut k = 0;
                while ratio > 1 {
                    ratio /= p;
                    k += 1;
                }
                exps.push(k);
                prev = cnt;
            }
            // exps[i] = number of factors with exponent > i; expand into prime powers.
            let mut powers: Vec<usize> = Vec::new();
            for (i, &k) in exps.iter().enumerate() {
                let next = exps.get(i + 1).copied().unwrap_or(0);
                for _ in 0..(k - next) {
                    powers.push(p.pow(i as u32 + 1));
                }
            }
            powers.sort_unstable_by(|a, b| b.cmp(a));
            primary.push(powers);
        }
        p += 1;
    }
    let len = primary.iter().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<usize> = (0..len)
        .map(|i| primary.iter().map(|ps| ps.get(i).copied().unwrap_or(1)).product())
        .collect();
    factors.sort();
    let parts: Vec<String> = factors.iter().map(|f| format!("C{f}")).collect();
    parts.join("x")
}
