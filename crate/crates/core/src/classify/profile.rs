use serde::{Deserialize, Serialize};

/// Flat summary of the class predicates for one group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassProfile {
    pub abelian: bool,
    pub nilpotent: bool,
    pub soluble: bool,
    pub supersoluble: bool,
    pub strongly_supersoluble: bool,
    pub nearly_nilpotent: bool,
    pub p_group_schmidt: bool,
    pub schmidt_group: bool,
    pub u_critical: bool,
    pub ore_dispersive: bool,
    pub dispersive_orderings: Vec<Vec<u64>>,
}

impl ClassProfile {
    /// Boolean field by its serialized name.
    pub fn field(&self, name: &str) -> Option<bool> {
        Some(match name {
            "abelian" => self.abelian,
            "nilpotent" => self.nilpotent,
            "soluble" => self.soluble,
            "supersoluble" => self.supersoluble,
            "strongly_supersoluble" => self.strongly_supersoluble,
            "nearly_nilpotent" => self.nearly_nilpotent,
            "p_group_schmidt" => self.p_group_schmidt,
            "schmidt_group" => self.schmidt_group,
            "u_critical" => self.u_critical,
            "ore_dispersive" => self.ore_dispersive,
            _ => return None,
        })
    }

    /// `nilpotent ⇒ nearly_nilpotent ⇒ strongly_supersoluble ⇒ supersoluble ⇒ soluble`,
    /// returning the first broken link.
    pub fn broken_implication(&self) -> Option<(&'static str, &'static str)> {
        let chain = [
            ("nilpotent", self.nilpotent),
            ("nearly_nilpotent", self.nearly_nilpotent),
            ("strongly_supersoluble", self.strongly_supersoluble),
            ("supersoluble", self.supersoluble),
            ("soluble", self.soluble),
        ];
        chain
            .windows(2)
            .find(|w| w[0].1 && !w[1].1)
            .map(|w| (w[0].0, w[1].0))
    }
}
