use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::DistanceMatrix;

/// A vertex-indexed function `f: V -> N0` with its cached weight.
///
/// Validity as an independent broadcast is checked by [`validate_broadcast`],
/// not enforced on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct Broadcast {
    values: Vec<u32>,
    weight: u64,
}

impl Broadcast {
    pub fn new(values: Vec<u32>) -> Self {
        let weight = values.iter().map(|&v| u64::from(v)).sum();
        Broadcast { values, weight }
    }

    pub fn zeros(n: usize) -> Self {
        Broadcast::new(vec![0; n])
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn get(&self, v: usize) -> u32 {
        self.values[v]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Broadcasting vertices `{x : f(x) > 0}`, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&v| self.values[v] > 0).collect()
    }
}

impl From<Vec<u32>> for Broadcast {
    fn from(values: Vec<u32>) -> Self {
        Broadcast::new(values)
    }
}

impl From<Broadcast> for Vec<u32> {
    fn from(b: Broadcast) -> Self {
        b.values
    }
}

/// Comma- or whitespace-separated values, e.g. `2,0,0,2`.
impl FromStr for Broadcast {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::InvalidParameter(format!("broadcast value '{t}' is not a nonnegative integer")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Broadcast::new)
    }
}

impl fmt::Display for Broadcast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// A failed broadcast condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition")]
pub enum Violation {
    /// `f(x) <= ecc(x)` fails.
    #[serde(rename = "B1")]
    ExceedsEccentricity { vertex: usize, value: u32, ecc: u32 },
    /// `dist(x, y) > max(f(x), f(y))` fails for two broadcasting vertices.
    #[serde(rename = "B2")]
    TooClose { u: usize, v: usize, dist: u32, max_value: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ExceedsEccentricity { vertex, value, ecc } => {
                write!(f, "(B1) f({vertex}) = {value} > ecc({vertex}) = {ecc}")
            }
            Violation::TooClose { u, v, dist, max_value } => {
                write!(f, "(B2) dist({u},{v}) = {dist} is not greater than {max_value}")
            }
        }
    }
}

pub(crate) fn check_broadcast(dm: &DistanceMatrix, ecc: &[u32], values: &[u32]) -> Vec<Violation> {
    let mut out = Vec::new();
    for (x, &fx) in values.iter().enumerate() {
        if fx > ecc[x] {
            out.push(Violation::ExceedsEccentricity { vertex: x, value: fx, ecc: ecc[x] });
        }
    }
    let support: Vec<usize> = (0..values.len()).filter(|&v| values[v] > 0).collect();
    for (i, &u) in support.iter().enumerate() {
        for &v in &support[i + 1..] {
            let max_value = values[u].max(values[v]);
            let dist = dm.get(u, v);
            if dist <= max_value {
                out.push(Violation::TooClose { u, v, dist, max_value });
            }
        }
    }
    out
}

/// All violated broadcast conditions; an empty list means `f` is an
/// independent broadcast on `g`.
pub fn validate_broadcast(g: &Graph, f: &Broadcast) -> Result<Vec<Violation>> {
    if f.len() != g.n() {
        return Err(Error::SizeMismatch { expected: g.n(), got: f.len() });
    }
    let dm = DistanceMatrix::new(g);
    let ecc = dm.eccentricities()?;
    Ok(check_broadcast(&dm, &ecc, f.values()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn p4_end_broadcasts() {
        let g = path(4);
        assert_eq!(validate_broadcast(&g, &Broadcast::new(vec![2, 0, 0, 2])), Ok(vec![]));
        assert_eq!(
            validate_broadcast(&g, &Broadcast::new(vec![3, 0, 0, 3])),
            Ok(vec![Violation::TooClose { u: 0, v: 3, dist: 3, max_value: 3 }])
        );
    }

    #[test]
    fn zero_broadcast_is_valid() {
        let f = Broadcast::zeros(10);
        assert_eq!(f.weight(), 0);
        assert!(f.support().is_empty());
        assert_eq!(validate_broadcast(&petersen(), &f), Ok(vec![]));
    }

    #[test]
    fn eccentricity_violation() {
        let v = validate_broadcast(&star(3), &Broadcast::new(vec![2, 0, 0, 0])).unwrap();
        assert_eq!(v, vec![Violation::ExceedsEccentricity { vertex: 0, value: 2, ecc: 1 }]);
        assert_eq!(v[0].to_string(), "(B1) f(0) = 2 > ecc(0) = 1");
    }

    #[test]
    fn errors() {
        assert_eq!(
            validate_broadcast(&path(3), &Broadcast::zeros(2)),
            Err(Error::SizeMismatch { expected: 3, got: 2 })
        );
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(validate_broadcast(&g, &Broadcast::zeros(3)), Err(Error::Disconnected));
    }

    #[test]
    fn parse_and_display() {
        let f: Broadcast = "2, 0 0,2".parse().unwrap();
        assert_eq!(f.values(), &[2, 0, 0, 2]);
        assert_eq!(f.weight(), 4);
        assert_eq!(f.to_string(), "2,0,0,2");
        assert!("1,-1".parse::<Broadcast>().is_err());
    }
}
