//! Canonical text for colours produced by repeated speed-ups.
//!
//! A level-0 colour is a plain integer. A level-`k+1` colour is a bitmask
//! whose bit `j - 1` marks membership of level-`k` colour `j`, so every
//! level is decoded by the same rule. Members print in increasing encoded
//! order, e.g. `{{1},{1,2}}`.

use crate::model::Colour;

/// Members of a set-colour, in increasing order.
pub fn subsets_of(mask: Colour) -> Vec<Colour> {
    (1..=32).filter(|j| mask >> (j - 1) & 1 == 1).collect()
}

/// Brace syntax for a set of plain colours, e.g. `{1,3}`.
pub fn set_label(mask: Colour) -> String {
    let parts: Vec<String> = subsets_of(mask).iter().map(u32::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// Canonical label of a colour at the given speed-up level.
pub fn family_label(level: usize, colour: Colour) -> String {
    if level == 0 {
        return colour.to_string();
    }
    let parts: Vec<String> = subsets_of(colour)
        .into_iter()
        .map(|c| family_label(level - 1, c))
        .collect();
    format!("{{{}}}", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(family_label(0, 7), "7");
        assert_eq!(family_label(1, 0b110), "{2,3}");
        assert_eq!(set_label(0b101), "{1,3}");
        // level-1 colours 1 = {1} and 3 = {1,2}
        assert_eq!(family_label(2, 0b101), "{{1},{1,2}}");
        assert_eq!(family_label(1, 0), "{}");
    }
}
