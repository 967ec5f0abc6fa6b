use std::cmp::Ordering;
use std::fmt;

/// Variable priority of the `Z` block, highest first: `Z4 > Z1 > Z3 > Z2`.
/// Entries are 0-based indices into [`Monomial::z`].
pub const Z_PRIORITY: [usize; 4] = [3, 0, 2, 1];

/// Identifier of the fixed term order, echoed by every serialized result.
pub const ORDER_ID: &str = "grevlex(Z4>Z1>Z3>Z2);q-block:grevlex(q1>q2)";

/// `Z1^a Z2^b Z3^c Z4^d · q1^e q2^f`, with Laurent exponents allowed in `q`.
///
/// `Ord` is the computation order: a block order comparing the `Z` part by
/// graded reverse lexicographic order first and the `q` part second.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub z: [u32; 4],
    pub q: [i32; 2],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        z: [0; 4],
        q: [0; 2],
    };

    pub const fn new(z: [u32; 4], q: [i32; 2]) -> Self {
        Monomial { z, q }
    }

    pub const fn q(a: i32, b: i32) -> Self {
        Monomial { z: [0; 4], q: [a, b] }
    }

    /// `Z_i` for `i` in `1..=4`.
    pub fn z_var(i: usize) -> Self {
        let mut z = [0; 4];
        z[i - 1] = 1;
        Monomial { z, q: [0; 2] }
    }

    pub fn z_degree(&self) -> u32 {
        self.z.iter().sum()
    }

    pub fn q_degree(&self) -> i32 {
        self.q.iter().sum()
    }

    pub fn z_part(&self) -> Monomial {
        Monomial { z: self.z, q: [0; 2] }
    }

    pub fn q_part(&self) -> Monomial {
        Monomial { z: [0; 4], q: self.q }
    }

    pub fn is_z_free(&self) -> bool {
        self.z == [0; 4]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            z: std::array::from_fn(|i| self.z[i] + other.z[i]),
            q: [self.q[0] + other.q[0], self.q[1] + other.q[1]],
        }
    }

    /// `self / other` when it is a polynomial monomial (no negative exponent
    /// in either block relative to `self`).
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut z = [0; 4];
        for i in 0..4 {
            z[i] = self.z[i].checked_sub(other.z[i])?;
        }
        let q = [self.q[0] - other.q[0], self.q[1] - other.q[1]];
        if q[0] < 0 || q[1] < 0 {
            return None;
        }
        Some(Monomial { z, q })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.checked_div(self).is_some()
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            z: std::array::from_fn(|i| self.z[i].max(other.z[i])),
            q: [self.q[0].max(other.q[0]), self.q[1].max(other.q[1])],
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..4).all(|i| self.z[i] == 0 || other.z[i] == 0)
            && (0..2).all(|i| self.q[i] <= 0 || other.q[i] <= 0)
    }

    pub fn cmp_z(&self, other: &Monomial) -> Ordering {
        grevlex(
            Z_PRIORITY.map(|i| self.z[i] as i64),
            Z_PRIORITY.map(|i| other.z[i] as i64),
        )
    }

    pub fn cmp_q(&self, other: &Monomial) -> Ordering {
        grevlex(self.q.map(i64::from), other.q.map(i64::from))
    }

    /// Ordering used for display: `Z` part descending, then `q` part by
    /// increasing total degree (classical terms before their corrections).
    pub fn display_cmp(&self, other: &Monomial) -> Ordering {
        other
            .cmp_z(self)
            .then(self.q_degree().cmp(&other.q_degree()))
            .then(self.q[1].cmp(&other.q[1]))
    }
}

/// Graded reverse lexicographic comparison of exponent vectors listed from the
/// highest variable to the lowest.
fn grevlex<const N: usize>(a: [i64; N], b: [i64; N]) -> Ordering {
    let da: i64 = a.iter().sum();
    let db: i64 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for i in (0..N).rev() {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => continue,
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    })
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_z(other).then_with(|| self.cmp_q(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// `q1^a*q2^b*Z1*Z4^2`; the empty monomial prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        for (name, e) in [("q1", self.q[0]), ("q2", self.q[1])] {
            match e {
                0 => {}
                1 => factors.push(name.to_string()),
                e => factors.push(format!("{name}^{e}")),
            }
        }
        for (i, &e) in self.z.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(format!("Z{}", i + 1)),
                e => factors.push(format!("Z{}^{e}", i + 1)),
            }
        }
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zm(z1: u32, z4: u32) -> Monomial {
        Monomial::new([z1, 0, 0, z4], [0, 0])
    }

    #[test]
    fn z4_outranks_z1() {
        assert!(zm(0, 1) > zm(1, 0));
        assert!(zm(0, 2) > zm(1, 1));
        assert!(zm(1, 1) > zm(2, 0));
        assert!(zm(3, 0) > zm(0, 2));
    }

    #[test]
    fn revlex_breaks_ties_on_the_lowest_variable() {
        // Z2 is the lowest variable: any power of it loses a tie.
        let z1z3 = Monomial::new([1, 0, 1, 0], [0, 0]);
        let z4z2 = Monomial::new([0, 1, 0, 1], [0, 0]);
        assert!(z1z3 > z4z2);
    }

    #[test]
    fn z_block_dominates_q_block() {
        let a = Monomial::new([1, 0, 0, 0], [0, 0]);
        let b = Monomial::new([0, 0, 0, 0], [5, 5]);
        assert!(a > b);
        assert!(Monomial::q(1, 0) > Monomial::q(0, 1));
    }

    #[test]
    fn division_and_lcm() {
        let a = Monomial::new([2, 0, 0, 1], [0, 1]);
        let b = Monomial::new([1, 0, 0, 1], [0, 0]);
        assert_eq!(a.checked_div(&b), Some(Monomial::new([1, 0, 0, 0], [0, 1])));
        assert_eq!(b.checked_div(&a), None);
        assert_eq!(a.lcm(&b), a);
        assert!(!a.is_coprime(&b));
        assert!(zm(2, 0).is_coprime(&zm(0, 2)));
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::ONE.to_string(), "1");
        assert_eq!(Monomial::new([1, 0, 0, 2], [1, -1]).to_string(), "q1*q2^-1*Z1*Z4^2");
    }
}
