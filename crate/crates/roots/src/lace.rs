//! Real-rootedness and interlacing certificates.

use lace_poly::Poly;
use rayon::prelude::*;

use crate::cert::{Certificate, RootInterval, Verdict};
use crate::error::{Result, RootError};
use crate::isolate::{
    default_width, int_factors, isolate_real, isolate_roots_width, multiplicity_in, refine,
};

/// Certificate for real-rootedness. The zero polynomial is real-rooted.
pub fn is_real_rooted(p: &Poly) -> Certificate {
    let subject = format!("real-rooted: {p}");
    if p.is_zero() {
        let mut c = Certificate::new(subject, Verdict::RealRooted);
        c.push_hypothesis("zero polynomial", true);
        return c;
    }
    match isolate_roots_width(p, Some(&default_width())) {
        Ok(iso) => {
            let mut c = Certificate::new(subject, Verdict::RealRooted);
            c.push_hypothesis("root count equals degree", true);
            c.witnesses = iso.intervals;
            c
        }
        Err(_) => {
            let iso = isolate_real(p);
            let mut c = Certificate::new(subject, Verdict::NotRealRooted);
            c.push_hypothesis(
                format!(
                    "distinct real roots {} < square-free degree {}",
                    iso.intervals.len(),
                    iso.sqfree_degree
                ),
                false,
            );
            c
        }
    }
}

/// Cheap boolean form of [`is_real_rooted`], without witnesses.
pub fn real_rooted(p: &Poly) -> bool {
    if p.is_zero() {
        return true;
    }
    let iso = isolate_real(p);
    iso.intervals.len() == iso.sqfree_degree
}

fn ensure_real_rooted(p: &Poly, name: &str) -> Result<()> {
    if real_rooted(p) {
        Ok(())
    } else {
        Err(RootError::NotRealRooted(format!("{name} = {p}")))
    }
}

/// Does `p` interlace `q`? With roots `α_1 ≥ α_2 ≥ …` of `p` and
/// `β_1 ≥ β_2 ≥ …` of `q` this asks for `… ≤ α_2 ≤ β_2 ≤ α_1 ≤ β_1`, which
/// needs `deg q ∈ {deg p, deg p + 1}`; a larger gap is reported as failure.
/// The zero polynomial interlaces and is interlaced by everything.
pub fn interlaces(p: &Poly, q: &Poly) -> Result<Certificate> {
    ensure_real_rooted(p, "p")?;
    ensure_real_rooted(q, "q")?;
    let subject = format!("({p}) interlaces ({q})");
    if p.is_zero() || q.is_zero() {
        let mut c = Certificate::new(subject, Verdict::Interlaces);
        c.push_hypothesis("zero polynomial", true);
        return Ok(c);
    }
    let (dp, dq) = (p.degree().unwrap(), q.degree().unwrap());
    let degrees_ok = dq == dp || dq == dp + 1;
    if !degrees_ok {
        let mut c = Certificate::new(subject, Verdict::NotInterlaces);
        c.push_hypothesis(format!("degree gap: deg p = {dp}, deg q = {dq}"), false);
        return Ok(c);
    }

    let prod = p * q;
    let iso = isolate_real(&prod);
    let mut iv = iso.intervals;
    refine(&iso.sqfree, &mut iv, None);
    let (fp, fq) = (int_factors(p), int_factors(q));
    // Distinct roots in descending order with their multiplicities in p and q.
    let roots: Vec<(RootInterval, usize, usize)> = iv
        .into_iter()
        .rev()
        .map(|(lo, hi)| {
            let mp = multiplicity_in(&fp, &lo, &hi);
            let mq = multiplicity_in(&fq, &lo, &hi);
            (RootInterval { lo, hi, multiplicity: mp + mq }, mp, mq)
        })
        .collect();
    let expand = |pick: fn(&(RootInterval, usize, usize)) -> usize| -> Vec<usize> {
        roots
            .iter()
            .enumerate()
            .flat_map(|(i, r)| std::iter::repeat(i).take(pick(r)))
            .collect()
    };
    // Rank 0 is the largest root, so "α ≤ β" becomes rank(α) ≥ rank(β).
    let alpha = expand(|r| r.1);
    let beta = expand(|r| r.2);
    let mut ok = true;
    for k in 0..alpha.len() {
        if alpha[k] < beta[k] {
            ok = false;
        }
        if let Some(b) = beta.get(k + 1) {
            if alpha[k] > *b {
                ok = false;
            }
        }
    }

    let mut c = Certificate::new(
        subject,
        if ok { Verdict::Interlaces } else { Verdict::NotInterlaces },
    );
    c.push_hypothesis("degrees compatible", true);
    c.push_hypothesis("root chain alternates", ok);
    let part = |name: &str, poly: &Poly, idx: fn(&(RootInterval, usize, usize)) -> usize| {
        let mut pc = Certificate::new(format!("{name}: {poly}"), Verdict::RealRooted);
        pc.witnesses = roots
            .iter()
            .filter(|r| idx(r) > 0)
            .map(|r| RootInterval { multiplicity: idx(r), ..r.0.clone() })
            .collect();
        pc
    };
    c.parts.push(part("p", p, |r| r.1));
    c.parts.push(part("q", q, |r| r.2));
    c.witnesses = roots.into_iter().map(|r| r.0).collect();
    Ok(c)
}

/// Pairwise interlacing `p_i` interlaces `p_j` for all `i < j`, with
/// nonnegative coefficients throughout. Reports pairs in lexicographic order
/// up to the first failure.
pub fn is_interlacing_sequence(seq: &[Poly]) -> Result<Certificate> {
    for (i, p) in seq.iter().enumerate() {
        ensure_real_rooted(p, &format!("p_{i}"))?;
    }
    let pairs: Vec<(usize, usize)> =
        (0..seq.len()).flat_map(|i| (i + 1..seq.len()).map(move |j| (i, j))).collect();
    let results: Vec<Result<bool>> = pairs
        .par_iter()
        .map(|&(i, j)| interlaces(&seq[i], &seq[j]).map(|c| c.holds()))
        .collect();
    let subject = format!("interlacing sequence of length {}", seq.len());
    let mut cert = Certificate::new(subject, Verdict::InterlacingSequence);
    let nonneg = seq.iter().all(Poly::is_nonnegative);
    cert.push_hypothesis("nonnegative coefficients", nonneg);
    let mut ok = nonneg;
    for (&(i, j), r) in pairs.iter().zip(results) {
        let holds = r?;
        cert.push_hypothesis(format!("p_{i} interlaces p_{j}"), holds);
        if !holds {
            ok = false;
            break;
        }
    }
    if !ok {
        cert.verdict = Verdict::NotInterlacingSequence;
    }
    Ok(cert)
}

/// `q_k = x · sum_{i<k} p_i + sum_{i>=k} p_i`, for `0 <= k <= len`.
pub fn recipe_transform(seq: &[Poly], k: usize) -> Poly {
    assert!(k <= seq.len(), "recipe index {k} out of range");
    let head: Poly = seq[..k].iter().sum();
    let tail: Poly = seq[k..].iter().sum();
    &head.shift(1) + &tail
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_ints(cs)
    }

    #[test]
    fn real_rooted_examples() {
        assert!(is_real_rooted(&Poly::zero()).holds());
        assert!(!is_real_rooted(&p(&[1, 1, 1])).holds());
        let c = is_real_rooted(&p(&[1, 4, 1]));
        assert!(c.holds());
        assert_eq!(c.witnesses.len(), 2);
    }

    #[test]
    fn interlacing_examples() {
        assert!(interlaces(&Poly::zero(), &p(&[1, 4, 1])).unwrap().holds());
        assert!(interlaces(&p(&[1, 4, 1]), &Poly::zero()).unwrap().holds());
        assert!(interlaces(&p(&[1, 1]), &p(&[2, 3, 1])).unwrap().holds());
        assert!(interlaces(&p(&[-1, 1]), &p(&[0, -2, 1])).unwrap().holds());
        assert!(interlaces(&p(&[0, 1]), &p(&[-1, 1])).unwrap().holds());
        // Roots of the right argument must sit on top.
        assert!(!interlaces(&p(&[-1, 1]), &p(&[0, 1])).unwrap().holds());
        assert!(!interlaces(&p(&[1]), &p(&[2, 3, 1])).unwrap().holds());
        assert!(matches!(
            interlaces(&p(&[1, 1, 1]), &p(&[1, 1])),
            Err(RootError::NotRealRooted(_))
        ));
    }

    #[test]
    fn shared_roots() {
        let a = p(&[1, 1]);
        assert!(interlaces(&a, &a).unwrap().holds());
        assert!(interlaces(&a, &(&a * &a)).unwrap().holds());
        // α = (-1, -2), β = (-1, -1): -2 ≤ -1 ≤ -1 ≤ -1.
        assert!(interlaces(&p(&[2, 3, 1]), &(&a * &a)).unwrap().holds());
        assert!(!interlaces(&(&a * &a), &p(&[2, 3, 1])).unwrap().holds());
    }

    #[test]
    fn sequences_and_recipe() {
        assert!(is_interlacing_sequence(&[p(&[0, 1]), p(&[0, 1])]).unwrap().holds());
        let bary2 = [p(&[1, 1]), p(&[0, 2]), p(&[0, 1, 1])];
        assert!(is_interlacing_sequence(&bary2).unwrap().holds());
        let bad = is_interlacing_sequence(&[p(&[0, 1]), p(&[1, 1])]).unwrap();
        assert!(!bad.holds());
        assert_eq!(bad.hypothesis("p_0 interlaces p_1"), Some(false));
        assert!(is_interlacing_sequence(&[p(&[1, 1, 1])]).is_err());
        assert_eq!(recipe_transform(&[p(&[1])], 0), p(&[1]));
        assert_eq!(recipe_transform(&[p(&[1])], 1), p(&[0, 1]));
        assert_eq!(recipe_transform(&[p(&[1]), p(&[1])], 1), p(&[1, 1]));
    }
}
