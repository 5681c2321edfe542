//! Finite groups given by multiplication tables, with a marked conjugacy
//! class.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupWithClass {
    name: String,
    table: Vec<Vec<u32>>,
    identity: usize,
    inverses: Vec<usize>,
    class: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct GroupFile {
    #[serde(rename = "type")]
    kind: String,
    order: usize,
    table: Vec<Vec<u32>>,
    class: Vec<usize>,
}

pub const PRESETS: [&str; 5] = [
    "a5/5cycle-a",
    "a5/5cycle-b",
    "a5/3cycle",
    "psl27/7a",
    "s3/transpositions",
];

impl FiniteGroupWithClass {
    /// Validates a multiplication table (`table[a][b] = a·b`) and class.
    pub fn new(name: &str, table: Vec<Vec<u32>>, class: Vec<usize>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidArgument("empty group".into()));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x as usize >= n) {
                return Err(Error::InvalidArgument("table is not square".into()));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if std::mem::replace(&mut seen[x as usize], true) {
                    return Err(Error::InvalidArgument("table row repeats an element".into()));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] as usize == a && table[a][e] as usize == a))
            .ok_or_else(|| Error::InvalidArgument("no identity".into()))?;
        let mut inverses = vec![usize::MAX; n];
        for a in 0..n {
            inverses[a] = (0..n)
                .find(|&b| table[a][b] as usize == identity)
                .ok_or_else(|| Error::InvalidArgument("missing inverse".into()))?;
        }
        // full associativity for small tables, a deterministic sample otherwise
        let step = if n <= 200 { 1 } else { n / 97 + 1 };
        for a in (0..n).step_by(step) {
            for b in 0..n {
                for c in (0..n).step_by(step) {
                    let l = table[table[a][b] as usize][c];
                    let r = table[a][table[b][c] as usize];
                    if l != r {
                        return Err(Error::InvalidArgument("table is not associative".into()));
                    }
                }
            }
        }
        let mut class = class;
        class.sort_unstable();
        class.dedup();
        if class.is_empty() || class.iter().any(|&c| c >= n) {
            return Err(Error::InvalidArgument("class must be a nonempty index set".into()));
        }
        let g = FiniteGroupWithClass {
            name: name.to_string(),
            table,
            identity,
            inverses,
            class,
        };
        for &c in &g.class {
            for h in 0..n {
                if g.class.binary_search(&g.conj(h, c)).is_err() {
                    return Err(Error::InvalidArgument(
                        "class is not closed under conjugation".into(),
                    ));
                }
            }
        }
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn class(&self) -> &[usize] {
        &self.class
    }

    pub fn in_class(&self, g: usize) -> bool {
        self.class.binary_search(&g).is_ok()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g·h·g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, a| {
            crate::cyclotomic::lcm(acc as u64, self.element_order(a) as u64) as usize
        })
    }

    /// The same group with the class of inverses marked.
    pub fn inverse_class(&self) -> FiniteGroupWithClass {
        let mut g = self.clone();
        g.class = self.class.iter().map(|&c| self.inv(c)).collect();
        g.class.sort_unstable();
        g.name = format!("{}^-1", self.name);
        g
    }

    pub fn preset(name: &str) -> Result<Self> {
        match name {
            "a5/5cycle-a" => perm_preset(name, &A5_GENS, &[1, 2, 3, 4, 0]),
            "a5/5cycle-b" => perm_preset(name, &A5_GENS, &[2, 3, 4, 0, 1]),
            "a5/3cycle" => perm_preset(name, &A5_GENS, &[1, 2, 0, 3, 4]),
            "s3/transpositions" => perm_preset(name, &[vec![1, 0, 2], vec![0, 2, 1]], &[1, 0, 2]),
            "psl27/7a" => psl27(),
            _ => Err(Error::InvalidArgument(format!("unknown group preset {name}"))),
        }
    }

    pub fn from_json(name: &str, text: &str) -> Result<Self> {
        let f: GroupFile = serde_json::from_str(text)?;
        if f.kind != "group" {
            return Err(Error::Parse("expected a group document".into()));
        }
        if f.order != f.table.len() {
            return Err(Error::Parse("order does not match table".into()));
        }
        Self::new(name, f.table, f.class)
    }

    pub fn to_json(&self) -> String {
        let f = GroupFile {
            kind: "group".into(),
            order: self.order(),
            table: self.table.clone(),
            class: self.class.clone(),
        };
        let mut s = serde_json::to_string(&f).expect("group serializes");
        s.push('\n');
        s
    }
}

const A5_GENS: [[usize; 5]; 2] = [[1, 2, 0, 3, 4], [0, 1, 3, 4, 2]];

/// Closure of generators under composition, breadth first from the identity.
fn closure<T: Ord + Clone>(id: T, gens: &[T], mul: impl Fn(&T, &T) -> T) -> Vec<T> {
    let mut index = BTreeMap::new();
    let mut elems = vec![id.clone()];
    index.insert(id, 0usize);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let p = mul(&elems[i], g);
            if !index.contains_key(&p) {
                index.insert(p.clone(), elems.len());
                queue.push_back(elems.len());
                elems.push(p);
            }
        }
    }
    elems
}

fn table_of<T: Ord + Clone>(elems: &[T], mul: impl Fn(&T, &T) -> T) -> Vec<Vec<u32>> {
    let index: BTreeMap<&T, u32> = elems.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();
    elems
        .iter()
        .map(|a| elems.iter().map(|b| index[&mul(a, b)]).collect())
        .collect()
}

fn class_of(table: &[Vec<u32>], inverses: impl Fn(usize) -> usize, rep: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (0..table.len())
        .map(|g| table[table[g][rep] as usize][inverses(g)] as usize)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn perm_preset<P: AsRef<[usize]>>(name: &str, gens: &[P], rep: &[usize]) -> Result<FiniteGroupWithClass> {
    let n = rep.len();
    let compose = |a: &Vec<usize>, b: &Vec<usize>| -> Vec<usize> { (0..n).map(|i| a[b[i]]).collect() };
    let gens: Vec<Vec<usize>> = gens.iter().map(|g| g.as_ref().to_vec()).collect();
    let elems = closure((0..n).collect::<Vec<_>>(), &gens, compose);
    let table = table_of(&elems, compose);
    let rep_idx = elems.iter().position(|e| e == rep).expect("representative in group");
    let inv = |g: usize| (0..table.len()).find(|&h| table[g][h] == 0).unwrap();
    let class = class_of(&table, inv, rep_idx);
    FiniteGroupWithClass::new(name, table, class)
}

/// PSL(2,7) as 2×2 matrices over F_7 modulo ±1; class of [[1,1],[0,1]].
fn psl27() -> Result<FiniteGroupWithClass> {
    type M = [u8; 4];
    fn canon(m: M) -> M {
        let neg = m.map(|x| (7 - x) % 7);
        m.min(neg)
    }
    let mul = |a: &M, b: &M| -> M {
        canon([
            (a[0] * b[0] + a[1] * b[2]) % 7,
            (a[0] * b[1] + a[1] * b[3]) % 7,
            (a[2] * b[0] + a[3] * b[2]) % 7,
            (a[2] * b[1] + a[3] * b[3]) % 7,
        ])
    };
    let gens = [canon([1, 1, 0, 1]), canon([0, 6, 1, 0])];
    let elems = closure(canon([1, 0, 0, 1]), &gens, mul);
    let table = table_of(&elems, mul);
    let rep = elems.iter().position(|e| *e == canon([1, 1, 0, 1])).unwrap();
    let inv = |g: usize| (0..table.len()).find(|&h| table[g][h] == 0).unwrap();
    let class = class_of(&table, inv, rep);
    FiniteGroupWithClass::new("psl27/7a", table, class)
}
