use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite group given by its Cayley table; element 0 need not be the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
}

/// Isomorphism invariants used to tell the catalog types apart.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub abelian: bool,
    /// Element orders, ascending.
    pub orders: Vec<usize>,
    pub center: usize,
}

impl FiniteGroup {
    /// Validates closure, identity, inverses and associativity.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::Consistency("Cayley table is not square over its elements".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::Consistency("no identity element".into()))?;
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == identity) {
                return Err(Error::Consistency(format!("element {a} has no inverse")));
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Consistency("table is not associative".into()));
                    }
                }
            }
        }
        Ok(FiniteGroup { table, identity })
    }

    /// Closes `gens` under `mul`, stopping with an error past `limit` elements.
    /// Returns the group and its elements (identity first).
    pub fn generate<T: Clone + PartialEq>(
        identity: T,
        gens: &[T],
        mul: impl Fn(&T, &T) -> Result<T>,
        limit: usize,
    ) -> Result<(Self, Vec<T>)> {
        let elems = closure(identity, gens, &mul, limit)?;
        let n = elems.len();
        let mut table = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                let p = mul(&elems[a], &elems[b])?;
                table[a][b] = elems
                    .iter()
                    .position(|x| *x == p)
                    .ok_or_else(|| Error::Consistency("closure incomplete".into()))?;
            }
        }
        Ok((FiniteGroup::from_table(table)?, elems))
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.table[x][a];
            k += 1;
        }
        k
    }

    pub fn is_central(&self, a: usize) -> bool {
        (0..self.order()).all(|b| self.table[a][b] == self.table[b][a])
    }

    pub fn center_size(&self) -> usize {
        (0..self.order()).filter(|&a| self.is_central(a)).count()
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let mut orders: Vec<usize> = (0..self.order()).map(|a| self.element_order(a)).collect();
        orders.sort_unstable();
        Fingerprint {
            abelian: self.is_abelian(),
            orders,
            center: self.center_size(),
        }
    }

    fn span(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([self.identity]);
        seen[self.identity] = true;
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.table[x][g];
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// A small generating set, chosen greedily by descending element order.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut candidates: Vec<usize> = (0..self.order()).collect();
        candidates.sort_by_key(|&a| (std::cmp::Reverse(self.element_order(a)), a));
        let mut gens = Vec::new();
        let mut covered = self.span(&gens);
        for a in candidates {
            if !covered[a] {
                gens.push(a);
                covered = self.span(&gens);
            }
        }
        gens
    }

    /// Brute-force isomorphism test: try every order-preserving image of a
    /// generating set, extend along words and check the whole table.
    pub fn is_isomorphic(&self, other: &FiniteGroup) -> bool {
        if self.order() != other.order() || self.fingerprint() != other.fingerprint() {
            return false;
        }
        let gens = self.generating_set();
        let choices: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                (0..other.order())
                    .filter(|&h| other.element_order(h) == self.element_order(g))
                    .collect()
            })
            .collect();
        let mut pick = vec![0usize; gens.len()];
        loop {
            let images: Vec<usize> = pick.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
            if self.extends_to_isomorphism(&gens, &images, other) {
                return true;
            }
            // odometer over the choice lists
            let mut k = 0;
            loop {
                if k == pick.len() {
                    return false;
                }
                pick[k] += 1;
                if pick[k] < choices[k].len() {
                    break;
                }
                pick[k] = 0;
                k += 1;
            }
        }
    }

    fn extends_to_isomorphism(&self, gens: &[usize], images: &[usize], other: &FiniteGroup) -> bool {
        let n = self.order();
        let mut map = vec![usize::MAX; n];
        map[self.identity] = other.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (&g, &h) in gens.iter().zip(images) {
                let (y, fy) = (self.table[x][g], other.table[map[x]][h]);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return false;
                }
            }
        }
        let mut hit = vec![false; n];
        for &v in &map {
            if v == usize::MAX || hit[v] {
                return false;
            }
            hit[v] = true;
        }
        (0..n).all(|a| (0..n).all(|b| map[self.table[a][b]] == other.table[map[a]][map[b]]))
    }
}

fn closure<T: Clone + PartialEq>(identity: T, gens: &[T], mul: &impl Fn(&T, &T) -> Result<T>, limit: usize) -> Result<Vec<T>> {
    let mut elems = vec![identity];
    let mut frontier = 0;
    while frontier < elems.len() {
        let x = elems[frontier].clone();
        frontier += 1;
        for g in gens {
            let y = mul(&x, g)?;
            if !elems.contains(&y) {
                if elems.len() == limit {
                    return Err(Error::GroupOrder(limit + 1));
                }
                elems.push(y);
            }
        }
    }
    Ok(elems)
}

/// Order of the group generated by `gens`, or `limit + 1` once it exceeds `limit`.
pub fn closure_order<T: Clone + PartialEq>(identity: T, gens: &[T], mul: impl Fn(&T, &T) -> Result<T>, limit: usize) -> Result<usize> {
    match closure(identity, gens, &mul, limit) {
        Ok(e) => Ok(e.len()),
        Err(Error::GroupOrder(n)) => Ok(n),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> FiniteGroup {
        FiniteGroup::from_table((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()).unwrap()
    }

    fn klein() -> FiniteGroup {
        FiniteGroup::from_table((0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect()).unwrap()
    }

    #[test]
    fn cyclic_basics() {
        let z4 = cyclic(4);
        assert!(z4.is_abelian());
        assert_eq!(z4.fingerprint().orders, vec![1, 2, 4, 4]);
        assert_eq!(z4.generating_set().len(), 1);
    }

    #[test]
    fn isomorphism_distinguishes() {
        assert!(!cyclic(4).is_isomorphic(&klein()));
        assert!(klein().is_isomorphic(&klein()));
        // Z4 relabelled
        let perm = [2usize, 0, 3, 1];
        let z = cyclic(4);
        let mut t = vec![vec![0; 4]; 4];
        for a in 0..4 {
            for b in 0..4 {
                t[perm[a]][perm[b]] = perm[z.mul(a, b)];
            }
        }
        assert!(FiniteGroup::from_table(t).unwrap().is_isomorphic(&z));
    }

    #[test]
    fn rejects_non_group() {
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
    }

    #[test]
    fn generate_limit() {
        let r = FiniteGroup::generate(0i64, &[1], |a, b| Ok((a + b) % 10), 5);
        assert_eq!(r.unwrap_err(), Error::GroupOrder(6));
        assert_eq!(closure_order(0i64, &[1], |a, b| Ok((a + b) % 10), 64).unwrap(), 10);
    }
}
