use num_integer::Integer;

use super::{Presentation, Word};
use crate::error::{Error, Result};

/// Parameters of the torus link `T(μp, μq)`: `μ` parallel copies of the
/// `(p, q)` torus knot, with Bézout coefficients `ps + qr = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusLinkParams {
    pub mu: usize,
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub s: i64,
}

impl TorusLinkParams {
    /// Validates `μ, p, q` and picks the canonical Bézout pair: `s` is the
    /// inverse of `p` modulo `q` in `1..=q`, and `r = (1 − ps)/q`.
    pub fn new(mu: usize, p: i64, q: i64) -> Result<Self> {
        if mu < 1 {
            return Err(Error::InvalidParams("mu must be at least 1".into()));
        }
        if p < 1 || q < 1 {
            return Err(Error::InvalidParams(format!("p, q must be positive (got {p}, {q})")));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        let ext = p.extended_gcd(&q);
        let s = ext.x.rem_euclid(q);
        let s = if s == 0 { q } else { s };
        let r = (1 - p * s) / q;
        Ok(TorusLinkParams { mu, p, q, r, s })
    }

    /// Uses a caller-chosen Bézout pair.
    pub fn with_bezout(mu: usize, p: i64, q: i64, r: i64, s: i64) -> Result<Self> {
        let base = Self::new(mu, p, q)?;
        if p * s + q * r != 1 {
            return Err(Error::InvalidParams(format!("ps + qr = {} ≠ 1", p * s + q * r)));
        }
        Ok(TorusLinkParams { r, s, ..base })
    }
}

fn m_names(count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("m{i}")).collect()
}

fn unit(mu: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; mu];
    v[i] = 1;
    v
}

/// The reduced presentation
/// `⟨m_1, …, m_{μ−1}, x, y | x^p m_i x^{−p} m_i^{−1}, x^p y^{−q}⟩`
/// with generators in exactly that order and abelianization
/// `m_i ↦ e_i`, `x ↦ q·(1,…,1)`, `y ↦ p·(1,…,1)`.
pub fn torus_link_presentation(params: &TorusLinkParams) -> Result<Presentation> {
    let TorusLinkParams { mu, p, q, .. } = TorusLinkParams::new(params.mu, params.p, params.q)?;
    let k = mu - 1;
    let (x, y) = (k, k + 1);
    let mut names = m_names(k);
    names.extend(["x".to_string(), "y".to_string()]);

    let xp = Word::power(x, p);
    let mut rels: Vec<Word> = (0..k)
        .map(|i| Word::commutator(&xp, &Word::generator(i)))
        .collect();
    rels.push(Word::from_syllables([(x, p), (y, -q)]));

    let mut abel: Vec<Vec<i64>> = (0..k).map(|i| unit(mu, i)).collect();
    abel.push(vec![q; mu]);
    abel.push(vec![p; mu]);
    Presentation::new(names, rels, mu, abel)
}

/// The unreduced presentation on `m_1, …, m_μ, x, y, l` with relators
/// `m_μ⋯m_1 (x^r y^s)^{−1}`, `[l, m_i]`, `l x^{−p}` and `x^p y^{−q}`.
pub fn torus_link_presentation_full(params: &TorusLinkParams) -> Result<Presentation> {
    let params = TorusLinkParams::with_bezout(params.mu, params.p, params.q, params.r, params.s)?;
    let TorusLinkParams { mu, p, q, r, s } = params;
    let (x, y, l) = (mu, mu + 1, mu + 2);
    let mut names = m_names(mu);
    names.extend(["x".to_string(), "y".to_string(), "l".to_string()]);

    let ms = Word::from_syllables((0..mu).rev().map(|i| (i, 1)));
    let xrys = Word::from_syllables([(x, r), (y, s)]);
    let mut rels = vec![ms.multiply(&xrys.inverse())];
    rels.extend((0..mu).map(|i| Word::commutator(&Word::generator(l), &Word::generator(i))));
    rels.push(Word::from_syllables([(l, 1), (x, -p)]));
    rels.push(Word::from_syllables([(x, p), (y, -q)]));

    let mut abel: Vec<Vec<i64>> = (0..mu).map(|i| unit(mu, i)).collect();
    abel.push(vec![q; mu]);
    abel.push(vec![p; mu]);
    abel.push(vec![p * q; mu]);
    Presentation::new(names, rels, mu, abel)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bezout_canonical_choice() {
        let t = TorusLinkParams::new(1, 2, 3).unwrap();
        assert_eq!((t.r, t.s), (-1, 2));
        let t = TorusLinkParams::new(2, 1, 1).unwrap();
        assert_eq!((t.r, t.s), (0, 1));
        for (p, q) in [(3, 5), (5, 3), (1, 7), (7, 1), (12, 35)] {
            let t = TorusLinkParams::new(1, p, q).unwrap();
            assert_eq!(p * t.s + q * t.r, 1);
        }
        assert_eq!(TorusLinkParams::new(1, 2, 4).unwrap_err(), Error::NotCoprime { p: 2, q: 4 });
    }

    #[test]
    fn trefoil_reduced() {
        let p = torus_link_presentation(&TorusLinkParams::new(1, 2, 3).unwrap()).unwrap();
        assert_eq!(p.generator_names(), ["x", "y"]);
        assert_eq!(p.format_word(&p.relators()[0]), "x^2*y^-3");
        assert_eq!(p.abelianization(), [vec![3], vec![2]]);
    }

    #[test]
    fn two_component_reduced() {
        let p = torus_link_presentation(&TorusLinkParams::new(2, 2, 3).unwrap()).unwrap();
        assert_eq!(p.generator_names(), ["m1", "x", "y"]);
        let rels: Vec<String> = p.relators().iter().map(|r| p.format_word(r)).collect();
        assert_eq!(rels, ["x^2*m1*x^-2*m1^-1", "x^2*y^-3"]);
    }

    #[test]
    fn three_component_reduced() {
        let p = torus_link_presentation(&TorusLinkParams::new(3, 1, 2).unwrap()).unwrap();
        assert_eq!(p.generator_names(), ["m1", "m2", "x", "y"]);
        let rels: Vec<String> = p.relators().iter().map(|r| p.format_word(r)).collect();
        assert_eq!(rels, ["x*m1*x^-1*m1^-1", "x*m2*x^-1*m2^-1", "x*y^-2"]);
    }

    #[test]
    fn full_presentation() {
        let p = torus_link_presentation_full(&TorusLinkParams::new(1, 2, 3).unwrap()).unwrap();
        let rels: Vec<String> = p.relators().iter().map(|r| p.format_word(r)).collect();
        assert_eq!(rels, ["m1*y^-2*x", "l*m1*l^-1*m1^-1", "l*x^-2", "x^2*y^-3"]);
        let p = torus_link_presentation_full(&TorusLinkParams::new(2, 1, 1).unwrap()).unwrap();
        assert_eq!(p.num_generators(), 5);
        assert_eq!(p.relators().len(), 5);
    }

    #[test]
    fn generator_and_relator_counts() {
        for mu in 1..5 {
            let p = torus_link_presentation(&TorusLinkParams::new(mu, 3, 4).unwrap()).unwrap();
            assert_eq!(p.num_generators(), mu + 1);
            assert_eq!(p.relators().len(), mu);
        }
    }
}
