use super::{BallSide, ComponentId, Event, FrontDiagram, FrontError, FrontMove};

impl FrontDiagram {
    /// Commutes the first left cusp to the start of the word.
    pub fn lead_with_left_cusp(&self) -> Result<FrontDiagram, FrontError> {
        let mut front = self.clone();
        let Some(mut p) = front.events().iter().position(|e| matches!(e, Event::LeftCusp(_))) else {
            return Err(FrontError::MoveNotApplicable { mv: FrontMove::Commute, site: 0 });
        };
        while p > 0 {
            front = front.front_move(FrontMove::Commute, p - 1)?;
            p -= 1;
        }
        Ok(front)
    }

    /// Deletes a component; strands of the others keep their order.
    pub fn without_component(&self, c: ComponentId) -> Result<FrontDiagram, FrontError> {
        self.check_component(c)?;
        let t = self.tracing();
        let below = |col: usize, slot: usize| (0..slot).filter(|&s| t.component_at(col, s) == c).count();
        let mut events = Vec::new();
        let mut index = vec![None; self.len()];
        for (p, e) in self.events().iter().enumerate() {
            if t.event_touches(p, c) {
                continue;
            }
            index[p] = Some(events.len());
            events.push(e.with_slot(e.slot() - below(p, e.slot())));
        }
        self.derive(events, |p| index[p])
    }

    /// Legendrian connected sum of component `c` with the one-component
    /// front `other`: the first right cusp of `c` is merged with a left cusp
    /// of `other`. tb adds up plus one; `other` keeps its 1-handle ids.
    pub fn connected_sum(&self, c: ComponentId, other: &FrontDiagram) -> Result<FrontDiagram, FrontError> {
        self.check_component(c)?;
        if other.component_count() != 1 {
            return Err(FrontError::NotAKnot(other.component_count()));
        }
        let mut j = other.clone();
        if !j.events().iter().any(|e| matches!(e, Event::LeftCusp(_))) {
            j = j.front_move(FrontMove::Fish { slot: j.events()[0].slot(), below: false }, 1)?;
        }
        let j = j.lead_with_left_cusp()?;

        // the k-th HpL of a handle pairs with the k-th HpR, so the splice
        // point must not sit inside a pairing span of a handle `other` uses
        let used = j.handles_used();
        let balanced = |f: &FrontDiagram, p: usize| {
            used.iter().all(|&h| {
                let mut bal = 0i64;
                for e in &f.events()[..p] {
                    if let Event::HandlePass { handle, side, .. } = e {
                        if *handle == h {
                            bal += if *side == BallSide::Left { 1 } else { -1 };
                        }
                    }
                }
                bal == 0
            })
        };
        let find = |f: &FrontDiagram| {
            let t = f.tracing();
            (0..f.len()).find(|&p| {
                matches!(f.events()[p], Event::RightCusp(_)) && t.cusp_component(p) == Some(c) && balanced(f, p)
            })
        };
        let mut k = self.clone();
        let p = match find(&k) {
            Some(p) => p,
            None => {
                let t = k.tracing();
                let first = t.first_event(c);
                let slot = k.events()[first].slot();
                k = k.front_move(FrontMove::Fish { slot, below: false }, first + 1)?;
                find(&k).ok_or(FrontError::NoSpliceSite(c))?
            }
        };
        let i = k.events()[p].slot();
        let inserted = j.len() - 1;
        let mut events = k.events()[..p].to_vec();
        events.extend(j.events()[1..].iter().map(|e| e.shifted(i)));
        events.extend_from_slice(&k.events()[p + 1..]);
        k.derive(events, |q| {
            if q < p {
                Some(q)
            } else if q == p {
                None
            } else {
                Some(q - 1 + inserted)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn removing_a_component() {
        let fr: FrontDiagram = "Lc0 Lc2 X1 X1 Rc2 Rc0".parse().unwrap();
        let rest = fr.without_component(ComponentId(0)).unwrap();
        assert_eq!(rest.to_string(), "Lc0 Rc0");
        let fr: FrontDiagram = "Lc0 Rc0 Lc0 Lc2 X1 X1 X1 Rc2 Rc0".parse().unwrap();
        assert_eq!(fr.without_component(ComponentId(0)).unwrap().to_string(), "Lc0 Lc2 X1 X1 X1 Rc2 Rc0");
    }

    #[test]
    fn connected_sum_adds_tb_plus_one() {
        let trefoil: FrontDiagram = "Lc0 Lc2 X1 X1 X1 Rc2 Rc0".parse().unwrap();
        let unknot = FrontDiagram::unknot();
        let c = ComponentId(0);
        let s = trefoil.connected_sum(c, &unknot).unwrap();
        assert_eq!(s.tb(c).unwrap(), 1);
        let s = trefoil.connected_sum(c, &trefoil).unwrap();
        assert_eq!(s.component_count(), 1);
        assert_eq!(s.tb(c).unwrap(), 3);
        let core: FrontDiagram = "HpL0:0 HpR0:0".parse().unwrap();
        let s = unknot.connected_sum(c, &core).unwrap();
        assert_eq!(s.tb(c).unwrap(), 0);
        assert_eq!(s.handle_multiplicity(c, crate::front::OneHandleId(0)).unwrap().abs(), 1);
        let s = core.connected_sum(c, &unknot).unwrap();
        assert_eq!(s.tb(c).unwrap(), 0);
        assert_eq!(core.connected_sum(c, &core), Err(FrontError::NoSpliceSite(c)));
    }

    #[test]
    fn leading_cusp() {
        let fr: FrontDiagram = "HpL0:0 HpL1:0 Lc1 Rc1 HpR0:0 HpR0:0".parse().unwrap();
        let led = fr.lead_with_left_cusp().unwrap();
        assert!(matches!(led.events()[0], Event::LeftCusp(0)));
        let tbs = |f: &FrontDiagram| {
            let mut v: Vec<i64> = f.components().map(|c| f.tb(c).unwrap()).collect();
            v.sort();
            v
        };
        assert_eq!(tbs(&led), tbs(&fr));
    }
}
