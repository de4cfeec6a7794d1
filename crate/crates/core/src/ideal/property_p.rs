use super::{minimal_primes, IdealError, Monomial, MonomialIdeal};

/// Searches for `height(W)` pairwise-coprime squarefree minimal generators.
///
/// Pairwise-coprime monomials form a regular sequence, so a returned list
/// certifies the coprime-lead-term property at the monomial level. The
/// height is taken from the radical, so `W` need not be squarefree.
pub fn property_p_witness(w: &MonomialIdeal) -> Result<Option<Vec<Monomial>>, IdealError> {
    if w.is_zero() || w.is_unit() {
        return Err(IdealError::Argument("property P needs a proper nonzero ideal".into()));
    }
    let radical = MonomialIdeal::new(
        *w.universe(),
        w.generators().iter().map(|g| Monomial::product_of(g.support())),
    )?;
    let height = minimal_primes(&radical)?
        .iter()
        .map(Vec::len)
        .min()
        .expect("proper ideal has a prime");
    let candidates: Vec<&Monomial> = w.generators().iter().filter(|g| g.is_squarefree()).collect();
    let mut chosen: Vec<&Monomial> = Vec::with_capacity(height);
    let found = extend(&candidates, 0, height, &mut chosen);
    let witness = found.then(|| chosen.into_iter().cloned().collect::<Vec<_>>());
    if let Some(ws) = &witness {
        assert!(ws.iter().all(Monomial::is_squarefree));
        assert!(ws
            .iter()
            .enumerate()
            .all(|(i, a)| ws[i + 1..].iter().all(|b| a.is_coprime(b))));
    }
    Ok(witness)
}

fn extend<'a>(cands: &[&'a Monomial], from: usize, want: usize, chosen: &mut Vec<&'a Monomial>) -> bool {
    if chosen.len() == want {
        return true;
    }
    if cands.len() - from < want - chosen.len() {
        return false;
    }
    for k in from..cands.len() {
        let c = cands[k];
        if chosen.iter().all(|d| d.is_coprime(c)) {
            chosen.push(c);
            if extend(cands, k + 1, want, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}
