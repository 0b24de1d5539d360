//! Isomorphism search by backtracking over images of a generating set.
//!
//! Exponential in the number of generators in the worst case; the generating
//! sets produced by [`generating_set`](super::generating_set) are short enough
//! for every group under the default order cap that we build.

use super::{generating_set, Element, Group, IDENTITY};

/// Returns `φ` with `φ[a·b] = φ[a]·φ[b]`, bijective, if one exists.
pub fn find_isomorphism(a: &Group, b: &Group) -> Option<Vec<Element>> {
    if a.order() != b.order() {
        return None;
    }
    let order_a: Vec<usize> = a.elements().map(|x| a.element_order(x)).collect();
    let order_b: Vec<usize> = b.elements().map(|x| b.element_order(x)).collect();
    let mut sa = order_a.clone();
    let mut sb = order_b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let gens = generating_set(a, &a.whole());
    let mut images = Vec::with_capacity(gens.len());
    search(a, b, &gens, &order_a, &order_b, &mut images)
}

pub fn are_isomorphic(a: &Group, b: &Group) -> bool {
    find_isomorphism(a, b).is_some()
}

fn search(
    a: &Group,
    b: &Group,
    gens: &[Element],
    order_a: &[usize],
    order_b: &[usize],
    images: &mut Vec<Element>,
) -> Option<Vec<Element>> {
    let depth = images.len();
    if depth == gens.len() {
        let map = extend(a, b, gens, images)?;
        let complete = map.iter().all(|&m| m != usize::MAX);
        return (complete && is_isomorphism(a, b, &map)).then_some(map);
    }
    for y in b.elements() {
        if order_b[y] != order_a[gens[depth]] || images.contains(&y) {
            continue;
        }
        images.push(y);
        if extend(a, b, &gens[..=depth], images).is_some() {
            if let Some(found) = search(a, b, gens, order_a, order_b, images) {
                return Some(found);
            }
        }
        images.pop();
    }
    None
}

/// Extends generator images along words; `None` on an inconsistency or a
/// collision. Entries outside `⟨gens⟩` stay `usize::MAX`.
fn extend(a: &Group, b: &Group, gens: &[Element], images: &[Element]) -> Option<Vec<Element>> {
    let mut map = vec![usize::MAX; a.order()];
    let mut used = vec![false; b.order()];
    map[IDENTITY] = IDENTITY;
    used[IDENTITY] = true;
    let mut frontier = vec![IDENTITY];
    while let Some(x) = frontier.pop() {
        for (&g, &h) in gens.iter().zip(images) {
            let xg = a.mul(x, g);
            let img = b.mul(map[x], h);
            if map[xg] == usize::MAX {
                if std::mem::replace(&mut used[img], true) {
                    return None;
                }
                map[xg] = img;
                frontier.push(xg);
            } else if map[xg] != img {
                return None;
            }
        }
    }
    Some(map)
}

fn is_isomorphism(a: &Group, b: &Group, map: &[Element]) -> bool {
    a.elements()
        .all(|x| a.elements().all(|y| map[a.mul(x, y)] == b.mul(map[x], map[y])))
}
