use crate::error::{invalid, Result};

/// Position of a vertex in a cycle-of-ladders COL(l, r).
///
/// Ladder `i` owns labels `2i(r+1) .. 2(i+1)(r+1)`: band 0 ascends from
/// rung 0 to rung r, band 1 then descends from rung r back to rung 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColCoordinates {
    pub ladder: usize,
    pub band: usize,
    pub rung: usize,
}

impl ColCoordinates {
    pub fn to_label(self, length: usize) -> usize {
        let base = 2 * self.ladder * (length + 1);
        if self.band == 0 {
            base + self.rung
        } else {
            base + 2 * length + 1 - self.rung
        }
    }

    pub fn from_label(label: usize, ladders: usize, length: usize) -> Result<ColCoordinates> {
        let per_ladder = 2 * (length + 1);
        if label >= ladders * per_ladder {
            return Err(invalid(format!("label {label} outside COL({ladders},{length})")));
        }
        let ladder = label / per_ladder;
        let offset = label % per_ladder;
        Ok(if offset <= length {
            ColCoordinates { ladder, band: 0, rung: offset }
        } else {
            ColCoordinates { ladder, band: 1, rung: 2 * length + 1 - offset }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StarRole {
    Central,
    Outer { cycle: usize },
}

/// Position of a vertex in a star of cycle C_k*(m). Central vertex `i` is
/// labeled `i(k+1)`; outer cycle `i` occupies `i(k+1)+1 ..= i(k+1)+k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StarOfCycleCoordinates {
    pub role: StarRole,
    /// Index on the central cycle for central vertices, position on the
    /// outer cycle otherwise.
    pub position: usize,
}

impl StarOfCycleCoordinates {
    pub fn central(index: usize) -> Self {
        StarOfCycleCoordinates { role: StarRole::Central, position: index }
    }

    pub fn outer(cycle: usize, position: usize) -> Self {
        StarOfCycleCoordinates { role: StarRole::Outer { cycle }, position }
    }

    pub fn to_label(self, outer_len: usize) -> usize {
        match self.role {
            StarRole::Central => self.position * (outer_len + 1),
            StarRole::Outer { cycle } => cycle * (outer_len + 1) + 1 + self.position,
        }
    }

    pub fn from_label(label: usize, outer_len: usize, central_len: usize) -> Result<Self> {
        let block = outer_len + 1;
        if label >= central_len * block {
            return Err(invalid(format!(
                "label {label} outside star of cycle C_{outer_len}*({central_len})"
            )));
        }
        let (cycle, offset) = (label / block, label % block);
        Ok(if offset == 0 {
            StarOfCycleCoordinates::central(cycle)
        } else {
            StarOfCycleCoordinates::outer(cycle, offset - 1)
        })
    }
}
