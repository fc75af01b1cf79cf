use serde::{Deserialize, Serialize};

use super::DecomposeError;
use crate::front::{ComponentId, FrontDiagram, OneHandleId};
use crate::group::{express_as_conjugates, ConjugateProduct, ConjugateSearch, Word};
use crate::handlebody::{handle_core, ContractibilityCertificate, Contractibility, FramedHandle, Handlebody};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractiblePiece {
    pub x1: Handlebody,
    pub x2: Handlebody,
    /// For each 1-handle generator, its expression through the 2-handle words.
    pub expressions: Vec<ConjugateProduct>,
    pub relators: Vec<Word>,
    pub certificate: ContractibilityCertificate,
}

/// Splits a handlebody whose 1-handle generators are normally generated by
/// its 2-handle words into a contractible piece and the rest.
///
/// Each generator gets a new 2-handle in X1 whose word is the generator
/// itself, i.e. the slid handle read off at the word level. X2 keeps the
/// original handles plus one dual record per new handle.
pub fn contractible_piece(x: &Handlebody, budget: usize) -> Result<ContractiblePiece, DecomposeError> {
    let g = x.one_handles().len();
    let relators: Vec<Word> = (0..x.two_handles().len()).map(|i| x.word(i)).collect::<Result<_, _>>()?;
    if g == 0 {
        let ball = Handlebody::ball();
        let certificate = ball.is_contractible_certificate(budget);
        return Ok(ContractiblePiece { x1: ball, x2: x.clone(), expressions: Vec::new(), relators, certificate });
    }
    let targets: Vec<Word> = (0..g).map(Word::gen).collect();
    let expressions = match express_as_conjugates(&targets, &relators, budget) {
        ConjugateSearch::Found(e) => e,
        ConjugateSearch::Unknown(o) => return Err(DecomposeError::Unknown(o)),
    };

    let mut front = FrontDiagram::default();
    let mut handles = Vec::new();
    for i in 0..g {
        handles.push(FramedHandle::new(format!("s{}", i + 1), ComponentId(front.component_count()), -1));
        front = front.juxtapose(&handle_core(OneHandleId(i)));
    }
    let x1 = Handlebody::new(x.one_handles().to_vec(), front, handles, x.orientation())?;
    let certificate = x1.is_contractible_certificate(budget);
    if certificate.verdict != Contractibility::Yes {
        return Err(DecomposeError::Uncertified(certificate.reason));
    }

    let mut front = x.front().clone();
    let mut duals = Vec::new();
    for i in 0..g {
        duals.push(FramedHandle::new(x.fresh_name(&format!("dual{}_", i + 1)), ComponentId(front.component_count()), -2));
        front = front.juxtapose(&FrontDiagram::unknot());
    }
    let x2 = x.rebuild(front, duals)?;
    Ok(ContractiblePiece { x1, x2, expressions, relators, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Obstruction;
    use crate::handlebody::unknot_handlebody;

    #[test]
    fn no_one_handles_gives_ball() {
        let p = contractible_piece(&unknot_handlebody(0), 100).unwrap();
        assert!(p.x1.is_ball());
        assert_eq!(p.x2, unknot_handlebody(0));
    }

    #[test]
    fn squares_and_cubes() {
        // one 1-handle x; words x^2 and x^3
        let sq = core_power(2);
        let cu = core_power(3);
        let comp = sq.component_count();
        let front = sq.juxtapose(&cu);
        let x = Handlebody::new(
            vec!["x".into()],
            front,
            vec![FramedHandle::new("a", ComponentId(0), -1), FramedHandle::new("b", ComponentId(comp), -1)],
            1,
        )
        .unwrap();
        assert_eq!(x.word(0).unwrap(), Word(vec![1, 1]));
        assert_eq!(x.word(1).unwrap(), Word(vec![1, 1, 1]));
        let p = contractible_piece(&x, 1000).unwrap();
        assert_eq!(p.certificate.verdict, Contractibility::Yes);
        assert_eq!(p.x1.euler_characteristic(), 1);
        assert_eq!(p.x1.word(0).unwrap(), Word::gen(0));
        assert_eq!(p.expressions[0].evaluate(&p.relators).reduced(), Word::gen(0));
        assert_eq!(p.x2.two_handles().len(), 3);
        assert_eq!(p.x2.defect_total(), x.defect_total());
    }

    /// A strand running m times through 1-handle 0.
    fn core_power(m: usize) -> FrontDiagram {
        let mut w: Vec<String> = (0..m).map(|i| format!("HpL{i}:0")).collect();
        w.extend((0..m - 1).map(|i| format!("X{i}")));
        w.extend((0..m).map(|_| "HpR0:0".to_string()));
        w.join(" ").parse().unwrap()
    }

    #[test]
    fn abelian_obstruction_is_named() {
        let front = handle_core(OneHandleId(1));
        let x = Handlebody::new(vec!["x".into(), "y".into()], front, vec![FramedHandle::new("a", ComponentId(0), 0)], 1)
            .unwrap();
        match contractible_piece(&x, 100) {
            Err(DecomposeError::Unknown(Obstruction::Abelianization { target: 0 })) => {}
            other => panic!("unexpected {other:?}"),
        }
    }
}
