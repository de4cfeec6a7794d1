use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;
use serde_json::{json, Value};

#[allow(unused_imports)]
use crate::par::prelude::*;
use crate::par::par_iter;

use super::sampling::{random_chain, random_generators, sample_rng};
use super::{guard_vars, run_check, Bounds, Draft, Report, Stop};
use crate::ideal::{
    equals_symbolic_ordinary_upto, mnb_scan, symbolic_member, symbolic_power_bounded, Limits, Monomial,
    MonomialIdeal, TermOrder,
};
use crate::link::{
    alpha_divisor_witness, binomial, certify_odd_product, chain_normal_form, exponent_in_chain_product, lead_term,
    minor_columns, square_divisor_witness, square_equality_conditions, straighten_check, BettiTable, LinkError,
    LinkGenerator, LinkInstance, SquareConditions, WitnessCase,
};

fn params(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn text(inst: &LinkInstance, u: &Monomial) -> String {
    u.display(&inst.universe()).to_string()
}

fn texts<'a, I: IntoIterator<Item = &'a Monomial>>(inst: &LinkInstance, us: I) -> Vec<String> {
    us.into_iter().map(|u| text(inst, u)).collect()
}

fn union_size(ideals: &[&MonomialIdeal]) -> usize {
    ideals.iter().flat_map(|w| w.support()).sorted().dedup().count()
}

/// `ini_a : ini_I` computed generically, compared with the closed-form
/// generator list of `ini_J` in both directions.
pub fn verify_colon_theorem(inst: &LinkInstance, bounds: &Bounds) -> Report {
    let p = params(&[("max_gens", json!(bounds.limits.max_generators))]);
    run_check("colon", inst, p, None, || {
        let (ini_a, ini_i) = (inst.ini_a(), inst.ini_i());
        guard_vars(union_size(&[&ini_a, &ini_i]), bounds)?;
        let colon = ini_a.colon_bounded(&ini_i, bounds.limits)?;
        let mut claimed: Vec<Monomial> = inst.ini_j_generators().into_iter().map(|(_, g)| g).collect();
        claimed.sort();
        claimed.dedup();
        // claimed generators multiply ini_I into ini_a, checked without the colon
        let mut not_in_colon = Vec::new();
        for g in &claimed {
            if !ini_a.colon_contains(&ini_i, g)? {
                not_in_colon.push(g.clone());
            }
        }
        let uncovered: Vec<&Monomial> = colon
            .generators()
            .iter()
            .filter(|c| !claimed.iter().any(|g| g.divides(c)))
            .collect();
        let redundant: Vec<&Monomial> = claimed.iter().filter(|g| !colon.generators().contains(g)).collect();
        let ok = not_in_colon.is_empty() && uncovered.is_empty() && redundant.is_empty();
        let message = if ok {
            format!("colon has exactly the {} closed-form generators", colon.len())
        } else if not_in_colon.is_empty() && uncovered.is_empty() {
            format!(
                "ideals agree but {} closed-form generators are not minimal; colon has {}",
                redundant.len(),
                colon.len()
            )
        } else {
            format!(
                "{} closed-form generators outside the colon, {} colon generators not covered",
                not_in_colon.len(),
                uncovered.len()
            )
        };
        Ok(Draft::new(
            ok,
            message,
            json!({
                "colon_generators": texts(inst, colon.generators()),
                "closed_form_count": claimed.len(),
                "not_in_colon": texts(inst, &not_in_colon),
                "uncovered": texts(inst, uncovered),
                "not_minimal": texts(inst, redundant),
            }),
        ))
    })
}

/// `ini_J^(ℓ) = ini_J^ℓ` for `ℓ ≤ l_max`, and the square-colon criterion for
/// `r ≤ r_max`.
pub fn verify_symbolic_scan(inst: &LinkInstance, bounds: &Bounds) -> Report {
    let p = params(&[
        ("l_max", json!(bounds.l_max)),
        ("r_max", json!(bounds.r_max)),
        ("max_gens", json!(bounds.limits.max_generators)),
    ]);
    run_check("symbolic", inst, p, None, || {
        let w = inst.ini_j();
        guard_vars(w.support().len(), bounds)?;
        let scan = equals_symbolic_ordinary_upto(&w, bounds.l_max, bounds.limits)?;
        let mnb = mnb_scan(&w, bounds.r_max, bounds.limits)?;
        let ok = scan.all_pass() && mnb.is_none();
        let message = match (&scan.first_failure, &mnb) {
            (None, None) => format!(
                "symbolic equals ordinary for l <= {}; square criterion holds for r <= {}",
                bounds.l_max, bounds.r_max
            ),
            (Some((l, _)), _) => format!("symbolic power differs from ordinary power at l = {l}"),
            (None, Some((r, _))) => format!("square criterion fails at r = {r}"),
        };
        Ok(Draft::new(
            ok,
            message,
            json!({
                "l_checked": scan.checked,
                "symbolic_failure": scan.first_failure.as_ref().map(|(l, g)| json!({"l": l, "generator": text(inst, g)})),
                "r_scanned": bounds.r_max,
                "square_failure": mnb.as_ref().map(|(r, h)| json!({"r": r, "generator": text(inst, h)})),
            }),
        ))
    })
}

/// The argument that `ν ∈ N^(2)` while no product `β_A·β_B` is squarefree,
/// because each such product repeats one of `x[m-2,3], x[m-1,3], x[m,3]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ColumnThreeArgument {
    pub nu_in_symbolic_square: bool,
    pub every_pair_repeats_column_three: bool,
}

impl ColumnThreeArgument {
    /// Both halves hold, so `ν ∈ N^(2) \ N^2`.
    pub fn predicts_gap(&self) -> bool {
        self.nu_in_symbolic_square && self.every_pair_repeats_column_three
    }
}

/// Evaluates the argument when `m > 2` and `n > m + 1`.
pub fn column_three_argument(inst: &LinkInstance) -> Result<Option<ColumnThreeArgument>, LinkError> {
    let (m, n) = (inst.m(), inst.n());
    if m <= 2 || n <= m + 1 {
        return Ok(None);
    }
    let n_ideal = inst.n_ideal();
    let nu_in = symbolic_member(&n_ideal, &inst.nu(), 2)?;
    let column: Vec<u32> = (m - 2..=m).map(|i| inst.x(i, 3)).collect();
    let betas = inst
        .admissible_subsets()
        .iter()
        .map(|a| inst.beta(a))
        .collect::<Result<Vec<_>, _>>()?;
    let every = betas.iter().enumerate().all(|(k, ba)| {
        betas[k..]
            .iter()
            .all(|bb| column.iter().any(|&v| ba.exponent(v) > 0 && bb.exponent(v) > 0))
    });
    Ok(Some(ColumnThreeArgument {
        nu_in_symbolic_square: nu_in,
        every_pair_repeats_column_three: every,
    }))
}

/// Brute-force comparison of `N^(2)` with `N^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareVerdict {
    pub equal: bool,
    /// A generator of `N^(2)` outside `N^2`, when they differ.
    pub outside: Option<String>,
    pub conditions: SquareConditions,
    /// Conditions whose truth value matches `equal`.
    pub consistent: Vec<&'static str>,
    pub inconsistent: Vec<&'static str>,
    pub argument: Option<ColumnThreeArgument>,
}

impl SquareVerdict {
    /// The column-three argument, where it applies, must predict a gap
    /// exactly when the brute force finds one.
    pub fn argument_agrees(&self) -> bool {
        self.argument.is_none_or(|a| a.predicts_gap() == !self.equal)
    }
}

fn square_verdict(inst: &LinkInstance, bounds: &Bounds) -> Result<SquareVerdict, Stop> {
    let n_ideal = inst.n_ideal();
    let (equal, outside) = if n_ideal.is_unit() {
        (true, None)
    } else {
        guard_vars(n_ideal.support().len(), bounds)?;
        let sym = symbolic_power_bounded(&n_ideal, 2, bounds.limits)?;
        let sq = n_ideal.power_bounded(2, bounds.limits)?;
        let outside = sym.generators().iter().find(|g| !sq.contains(g)).map(|g| text(inst, g));
        (outside.is_none(), outside)
    };
    let conditions = square_equality_conditions(inst);
    let named = [
        ("m<=2 or m<=n-1", conditions.m_le_n_minus_1),
        ("m<=2 or m<=n+1", conditions.m_le_n_plus_1),
        ("m<=2 or n<=m+1", conditions.n_le_m_plus_1),
    ];
    let consistent = named.iter().filter(|(_, v)| *v == equal).map(|(k, _)| *k).collect();
    let inconsistent = named.iter().filter(|(_, v)| *v != equal).map(|(k, _)| *k).collect();
    Ok(SquareVerdict {
        equal,
        outside,
        conditions,
        consistent,
        inconsistent,
        argument: column_three_argument(inst)?,
    })
}

/// Decides `N^(2) = N^2` by brute force and reports which candidate
/// conditions agree.
pub fn resolve_nontrivial_square(inst: &LinkInstance, bounds: &Bounds) -> Report {
    let p = params(&[("max_gens", json!(bounds.limits.max_generators))]);
    run_check("nontrivial_square", inst, p, None, || {
        let v = square_verdict(inst, bounds)?;
        let relation = if v.equal { "N^(2) = N^2" } else { "N^(2) != N^2" };
        let mut message = format!(
            "{relation}; consistent with [{}]; inconsistent with [{}]",
            v.consistent.join(", "),
            v.inconsistent.join(", ")
        );
        if let Some(a) = v.argument {
            message.push_str(if a.predicts_gap() == !v.equal {
                "; column-three argument agrees"
            } else {
                "; column-three argument DISAGREES"
            });
        }
        Ok(Draft::new(v.argument_agrees(), message, serde_json::to_value(&v).expect("verdict serializes")))
    })
}

/// Counts, degrees, squarefreeness and minimality of the closed-form list.
pub fn verify_counts_and_degrees(inst: &LinkInstance) -> Report {
    run_check("counts", inst, BTreeMap::new(), None, || {
        let (m, n, g) = (inst.m(), inst.n(), inst.g());
        let labelled = inst.ini_j_generators();
        let diag: Vec<&Monomial> = labelled
            .iter()
            .filter(|(l, _)| matches!(l, LinkGenerator::Diagonal(_)))
            .map(|(_, g)| g)
            .collect();
        let nontrivial: Vec<&Monomial> = labelled
            .iter()
            .filter(|(l, _)| matches!(l, LinkGenerator::Nontrivial(_)))
            .map(|(_, g)| g)
            .collect();
        let want_nontrivial = binomial((n - 1) as u64, (m - 1) as u64) as usize;
        let nontrivial_degree = m * (n - m) + 1;
        let mut problems = Vec::new();
        if diag.len() != g as usize || diag.iter().any(|u| u.degree() != m + 1) {
            problems.push(format!("expected {g} diagonal generators of degree {}", m + 1));
        }
        if nontrivial.len() != want_nontrivial || nontrivial.iter().any(|u| u.degree() != nontrivial_degree) {
            problems.push(format!("expected {want_nontrivial} nontrivial generators of degree {nontrivial_degree}"));
        }
        if labelled.iter().any(|(_, u)| !u.is_squarefree()) {
            problems.push("a generator is not squarefree".into());
        }
        let ini_i = inst.ini_i();
        let mut betas_in_ini_i = Vec::new();
        for a in inst.admissible_subsets() {
            let b = inst.beta(&a)?;
            if ini_i.contains(&b) {
                betas_in_ini_i.push(a.to_string());
            }
        }
        if !betas_in_ini_i.is_empty() {
            problems.push(format!("beta lies in ini_I for {}", betas_in_ini_i.join(" ")));
        }
        let alphas = (1..=g).map(|j| inst.alpha(j)).collect::<Result<Vec<_>, _>>()?;
        if !alphas.iter().tuple_combinations().all(|(a, b)| a.is_coprime(b)) {
            problems.push("antidiagonals are not pairwise coprime".into());
        }
        let minimal = inst.ini_j();
        let divisible: Vec<String> = labelled
            .iter()
            .filter(|(_, u)| !minimal.generators().contains(u))
            .map(|(l, _)| l.to_string())
            .collect();
        if !divisible.is_empty() {
            problems.push(format!(
                "list is not an antichain: {} divisible by another generator; minimal ideal has {} generators",
                divisible.join(", "),
                minimal.len()
            ));
        }
        let top = BettiTable::quotient_betti(m, g, g)?;
        if top != want_nontrivial as u64 {
            problems.push(format!("top quotient Betti number {top} != C(n-1,m-1)"));
        }
        let ok = problems.is_empty();
        let message = if ok {
            format!(
                "{g} generators of degree {} and {want_nontrivial} of degree {nontrivial_degree}, squarefree antichain",
                m + 1
            )
        } else {
            problems.join("; ")
        };
        Ok(Draft::new(
            ok,
            message,
            json!({
                "diagonal": diag.len(),
                "nontrivial": nontrivial.len(),
                "minimal_generators": minimal.len(),
                "not_minimal": divisible,
                "top_quotient_betti": top,
            }),
        ))
    })
}

/// The closed Betti table against its golden values and against the degree
/// distribution of the minimal generators of `ini_J`.
pub fn verify_betti(inst: &LinkInstance) -> Report {
    run_check("betti", inst, BTreeMap::new(), None, || {
        let (m, n, g) = (inst.m(), inst.n(), inst.g());
        let table = BettiTable::for_instance(inst)?;
        let mut problems = Vec::new();
        let bs = (1..=g)
            .map(|s| BettiTable::quotient_betti(m, g, s))
            .collect::<Result<Vec<_>, _>>()?;
        if bs[g as usize - 1] != binomial((n - 1) as u64, (m - 1) as u64) {
            problems.push("top quotient Betti number differs from C(n-1,m-1)".to_string());
        }
        if (m, n) == (2, 4) {
            let got: Vec<_> = table.entries().filter(|((i, _), _)| *i > 0).collect();
            let want = vec![((1, 3), 3), ((1, 5), 3), ((2, 6), 11), ((3, 7), 6)];
            if got != want {
                problems.push(format!("golden table mismatch: {got:?}"));
            }
        }
        let mut degrees: BTreeMap<u32, u64> = BTreeMap::new();
        for u in inst.ini_j().generators() {
            *degrees.entry(u.degree()).or_insert(0) += 1;
        }
        let first_row: BTreeMap<u32, u64> = table
            .entries()
            .filter(|((i, _), _)| *i == 1)
            .map(|((_, j), v)| (j, v))
            .collect();
        if first_row != degrees {
            problems.push(format!("first row {first_row:?} != generator degrees {degrees:?}"));
        }
        let ok = problems.is_empty();
        let message = if ok {
            format!("table consistent; first row matches {} minimal generators", table.total(1))
        } else {
            problems.join("; ")
        };
        Ok(Draft::new(
            ok,
            message,
            json!({
                "entries": table.entries().map(|((i, j), v)| json!([i, j, v])).collect::<Vec<_>>(),
                "quotient_betti": bs,
                "generator_degrees": degrees,
            }),
        ))
    })
}

/// The largest term of each linking form is `Y[j,j]·α_j`.
pub fn verify_lead_terms(inst: &LinkInstance, bounds: &Bounds) -> Report {
    let p = params(&[("max_gens", json!(bounds.limits.max_generators))]);
    run_check("leads", inst, p, None, || {
        let factorial: u64 = (1..=inst.m() as u64).product();
        let terms = inst.g() as u64 * inst.r() as u64 * factorial;
        if terms > bounds.limits.max_generators as u64 {
            return Err(Stop::Refused(format!(
                "{terms} terms exceed the limit of {}",
                bounds.limits.max_generators
            )));
        }
        let order = TermOrder::order1(inst.universe());
        let mut wrong = Vec::new();
        for j in 1..=inst.g() {
            let lead = lead_term(inst, &order, j)?;
            if lead != inst.diagonal_generator(j)? {
                wrong.push(json!({"row": j, "lead": text(inst, &lead)}));
            }
        }
        let ok = wrong.is_empty();
        Ok(Draft::new(
            ok,
            format!(
                "{} of {} rows lead with Y[j,j]*alpha[j] over {} minors x {} terms",
                inst.g() as usize - wrong.len(),
                inst.g(),
                minor_columns(inst).len(),
                factorial
            ),
            json!({ "wrong_rows": wrong, "terms_compared": terms }),
        ))
    })
}

fn first_error<T>(results: Vec<Result<T, LinkError>>) -> Result<Vec<T>, LinkError> {
    results.into_iter().collect()
}

/// Exhaustive and seeded checks of the divisibility witnesses and of the
/// chain lemmas.
pub fn verify_witness_suites(inst: &LinkInstance, bounds: &Bounds) -> Report {
    let p = params(&[
        ("r_max", json!(bounds.r_max)),
        ("samples", json!(bounds.samples)),
        ("exhaustive_cap", json!(bounds.exhaustive_cap)),
    ]);
    run_check("witnesses", inst, p, Some(bounds.seed), || witness_body(inst, bounds))
}

fn witness_body(inst: &LinkInstance, bounds: &Bounds) -> Result<Draft, Stop> {
    let limits: Limits = bounds.limits;
    let subsets = inst.admissible_subsets();
    let tuples: Vec<Vec<u32>> = (1..=inst.n()).combinations(inst.m() as usize).collect();
    let refuse = |what: &str, count: usize| {
        Stop::Refused(format!("{what}: {count} inputs exceed the limit of {}", limits.max_generators))
    };

    // every antidiagonal against every subset
    let alpha_inputs = tuples.len() * subsets.len();
    if alpha_inputs > limits.max_generators {
        return Err(refuse("alpha witnesses", alpha_inputs));
    }
    let pairs: Vec<(&Vec<u32>, &crate::link::AdmissibleSubset)> = tuples.iter().cartesian_product(&subsets).collect();
    first_error(par_iter!(&pairs).map(|(ks, a)| alpha_divisor_witness(inst, ks, a)).collect())?;

    // straightening on all pairs
    let pair_count = subsets.len() * subsets.len();
    if pair_count > limits.max_generators {
        return Err(refuse("straightening", pair_count));
    }
    let bad_pairs: Vec<String> = first_error(
        par_iter!(&subsets)
            .map(|a| {
                subsets
                    .iter()
                    .map(|b| Ok((straighten_check(inst, a, b)?, format!("{a} {b}"))))
                    .collect::<Result<Vec<_>, LinkError>>()
            })
            .collect(),
    )?
    .into_iter()
    .flatten()
    .filter(|(ok, _)| !ok)
    .map(|(_, s)| s)
    .collect();
    if !bad_pairs.is_empty() {
        return Ok(Draft::new(false, format!("straightening fails for {}", bad_pairs[0]), json!({"bad_pairs": bad_pairs})));
    }

    // seeded inputs, generated sequentially so the seed fixes them
    let mut rng = sample_rng(bounds.seed);
    let chain_inputs: Vec<Vec<crate::link::AdmissibleSubset>> = (0..bounds.samples)
        .map(|_| {
            let r = rand::Rng::gen_range(&mut rng, 0..=bounds.r_max) as usize;
            random_chain(inst, 2 * r + 1, &mut rng)
        })
        .collect();
    let labels: Vec<LinkGenerator> = inst.ini_j_generators().into_iter().map(|(l, _)| l).collect();
    let product_inputs: Vec<Vec<LinkGenerator>> = (0..bounds.samples)
        .map(|_| {
            let r = rand::Rng::gen_range(&mut rng, 0..=bounds.r_max) as usize;
            random_generators(&labels, 2 * r + 1, &mut rng)
        })
        .collect();

    first_error(par_iter!(&chain_inputs).map(|c| chain_lemmas(inst, c)).collect())?;

    // all multisets of 2r+1 generators when that is small enough
    let multiset_count: u64 = (0..=bounds.r_max as u64)
        .map(|r| binomial(labels.len() as u64 + 2 * r, 2 * r + 1))
        .sum();
    let exhaustive = multiset_count <= bounds.exhaustive_cap as u64;
    let mut all_inputs: Vec<Vec<LinkGenerator>> = Vec::new();
    if exhaustive {
        for r in 0..=bounds.r_max as usize {
            all_inputs.extend(labels.iter().cloned().combinations_with_replacement(2 * r + 1));
        }
    }
    let exhaustive_count = all_inputs.len();
    all_inputs.extend(product_inputs);
    let certs = first_error(par_iter!(&all_inputs).map(|gens| certify_odd_product(inst, gens)).collect())?;
    let mut cases: BTreeMap<String, usize> = BTreeMap::new();
    for c in &certs {
        let name = serde_json::to_value(c.odd_part.case).expect("case serializes");
        *cases.entry(name.as_str().unwrap_or_default().to_string()).or_insert(0) += 1;
    }
    let crossing_example = certs
        .iter()
        .find(|c| c.odd_part.case == WitnessCase::NoDiagonalCrossing)
        .map(|c| serde_json::to_value(&c.odd_part).expect("witness serializes"));

    let reference = reference_crossing(inst)?;
    Ok(Draft::new(
        true,
        format!(
            "{} alpha witnesses, {} straightening pairs, {} chains, {} products ({} exhaustive) verified",
            alpha_inputs,
            pair_count,
            chain_inputs.len(),
            certs.len(),
            exhaustive_count
        ),
        json!({
            "alpha_witnesses": alpha_inputs,
            "straightening_pairs": pair_count,
            "sampled_chains": chain_inputs.len(),
            "exhaustive_products": exhaustive_count,
            "sampled_products": certs.len() - exhaustive_count,
            "cases": cases,
            "crossing_example": crossing_example,
            "reference_crossing": reference,
        }),
    ))
}

/// Chain invariants: normal form, the exponent formula at every cell, and
/// `(∏_k β_{A_{2k}})² | ∏_h β_{A_h}` for an odd-length chain.
fn chain_lemmas(inst: &LinkInstance, chain: &[crate::link::AdmissibleSubset]) -> Result<(), LinkError> {
    let normal = chain_normal_form(chain)?;
    if normal != chain {
        return Err(LinkError::Postcondition("sampled chain is not in normal form".into()));
    }
    let product = chain.iter().try_fold(Monomial::one(), |acc, a| Ok::<_, LinkError>(acc.mul(&inst.beta(a)?)))?;
    for cell in inst.grid_v().iter() {
        let formula = exponent_in_chain_product(inst, chain, cell)?;
        if formula != product.exponent(inst.x(cell.0, cell.1)) {
            return Err(LinkError::Postcondition(format!("exponent formula wrong at {cell:?}")));
        }
    }
    let evens = chain
        .iter()
        .skip(1)
        .step_by(2)
        .try_fold(Monomial::one(), |acc, a| Ok::<_, LinkError>(acc.mul(&inst.beta(a)?)))?;
    if !evens.pow(2).divides(&product) {
        return Err(LinkError::Postcondition("even-position square does not divide the chain product".into()));
    }
    Ok(())
}

/// At `(4,7)`, the chain `{2,4,5} ≤ {2,5,7} ≤ {2,6,7}` exercises the
/// crossing branch; its data is reported for comparison.
fn reference_crossing(inst: &LinkInstance) -> Result<Option<Value>, LinkError> {
    if (inst.m(), inst.n()) != (4, 7) {
        return Ok(None);
    }
    let chain = [inst.subset(&[2, 4, 5])?, inst.subset(&[2, 5, 7])?, inst.subset(&[2, 6, 7])?];
    let w = square_divisor_witness(inst, &[], &chain)?;
    Ok(Some(serde_json::to_value(&w).expect("witness serializes")))
}
