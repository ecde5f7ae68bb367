use serde::{Deserialize, Serialize};

use super::game::{Allocation, Coalition, PowerFunction, TablePower};
use super::stable::ChainPower;
use crate::rational::Exact;
use crate::{Error, Rational, Result};

/// Power function of a game file: the chain-depth power or an explicit table.
#[derive(Debug, Clone)]
pub enum GamePower {
    ChainDepth(ChainPower),
    Table(TablePower),
}

impl PowerFunction for GamePower {
    fn players(&self) -> usize {
        match self {
            GamePower::ChainDepth(p) => p.players(),
            GamePower::Table(p) => p.players(),
        }
    }
    fn power(&self, c: Coalition, x: &Allocation) -> Result<Rational> {
        match self {
            GamePower::ChainDepth(p) => p.power(c, x),
            GamePower::Table(p) => p.power(c, x),
        }
    }
}

/// A finite game: allocations plus a power function, read from or written to
/// `{"n", "allocations", "power": "chain-depth" | {"table": [...]}}`.
#[derive(Debug, Clone)]
pub struct Game {
    pub n: usize,
    pub allocations: Vec<Allocation>,
    pub power: GamePower,
}

#[derive(Serialize, Deserialize)]
struct TableEntry {
    coalition: Coalition,
    point: usize,
    value: Exact,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum PowerJson {
    ChainDepth,
    Table(Vec<TableEntry>),
}

#[derive(Serialize, Deserialize)]
struct RawGame {
    n: usize,
    allocations: Vec<Allocation>,
    power: PowerJson,
}

impl Game {
    pub fn chain_depth(n: usize, allocations: Vec<Allocation>) -> Result<Self> {
        let power = GamePower::ChainDepth(ChainPower::new(n, &allocations)?);
        Ok(Game { n, allocations, power })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawGame = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if raw.n == 0 || raw.n > super::game::MAX_PLAYERS {
            return Err(Error::Domain(format!("unsupported player count {}", raw.n)));
        }
        if let Some(a) = raw.allocations.iter().find(|a| a.players() != raw.n) {
            return Err(Error::DimensionMismatch {
                expected: raw.n,
                found: a.players(),
            });
        }
        match raw.power {
            PowerJson::ChainDepth => Game::chain_depth(raw.n, raw.allocations),
            PowerJson::Table(entries) => {
                let entries = entries.into_iter().map(|e| (e.coalition, e.point, e.value.0)).collect();
                let table = TablePower::new(raw.n, &raw.allocations, entries)?;
                Ok(Game {
                    n: raw.n,
                    allocations: raw.allocations,
                    power: GamePower::Table(table),
                })
            }
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let power = match &self.power {
            GamePower::ChainDepth(_) => PowerJson::ChainDepth,
            GamePower::Table(t) => {
                let mut entries: Vec<_> = t.entries().collect();
                entries.sort();
                PowerJson::Table(
                    entries
                        .into_iter()
                        .map(|(coalition, point, v)| TableEntry {
                            coalition,
                            point,
                            value: Exact(v),
                        })
                        .collect(),
                )
            }
        };
        let raw = RawGame {
            n: self.n,
            allocations: self.allocations.clone(),
            power,
        };
        serde_json::to_value(raw).expect("game serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pillage::build_internally_stable;

    #[test]
    fn table_round_trip() {
        let text = r#"{"n":2,"allocations":[[1,0],["1/2","1/2"]],
            "power":{"table":[{"coalition":[0],"point":1,"value":"1/3"},{"coalition":[],"point":0,"value":0}]}}"#;
        let g = Game::from_json(text).unwrap();
        let x = &g.allocations[1];
        assert_eq!(g.power.power(Coalition::from_players(&[0]).unwrap(), x).unwrap(), Rational::new(1, 3));
        assert!(matches!(g.power.power(Coalition::all(2), x), Err(Error::Undefined(_))));
        let again = Game::from_json(&g.to_json_value().to_string()).unwrap();
        assert_eq!(again.to_json_value(), g.to_json_value());
    }

    #[test]
    fn chain_depth_round_trip() {
        let s = build_internally_stable(4).unwrap();
        let g = Game::chain_depth(4, s.candidate.allocations().to_vec()).unwrap();
        let v = g.to_json_value();
        assert_eq!(v["power"], "chain-depth");
        assert_eq!(Game::from_json(&v.to_string()).unwrap().allocations.len(), 3);
    }

    #[test]
    fn malformed_games() {
        assert!(Game::from_json(r#"{"n":2,"allocations":[[1,1]],"power":"chain-depth"}"#).is_err());
        assert!(Game::from_json(r#"{"n":2,"allocations":[[1,0,0]],"power":"chain-depth"}"#).is_err());
        assert!(Game::from_json("not json").is_err());
    }
}
