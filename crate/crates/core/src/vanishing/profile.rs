use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::set::ElementSet;
use crate::structure::{
    center, centralizer_of, classify_abelian, prime_power_base, quotient, SeriesReport,
};
use crate::vanishing::{
    camina_elements, v_series, vanishing_height, vanishing_off_group, Context, VanishingMode,
};

/// Shape of the abelian quotient `G/V(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientShape {
    pub order: usize,
    pub cyclic: bool,
    pub elementary_abelian: Option<u64>,
}

impl QuotientShape {
    pub fn describe(&self) -> String {
        match (self.order, self.cyclic, self.elementary_abelian) {
            (1, _, _) => "trivial".into(),
            (_, _, Some(p)) if self.cyclic => format!("cyclic of prime order {p}"),
            (_, true, _) => "cyclic".into(),
            (_, _, Some(p)) => format!("elementary abelian {p}-group"),
            _ => "other".into(),
        }
    }
}

/// `[G:V_1] = p^(2n)` and `[G':V_2] = p^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesParameters {
    pub p: u64,
    pub n: u32,
    pub m: u32,
}

/// `Z/V_3 = Z(G/V_3)` and `C/V_3 = C_{G/V_3}(G'/V_3)`.
#[derive(Debug, Clone)]
pub struct CentralizerPair {
    pub z: Subgroup,
    pub c: Subgroup,
}

#[derive(Debug, Clone)]
pub struct VanishingProfile {
    pub camina: ElementSet,
    pub v: Subgroup,
    /// The character-theoretic `V(G)`, when a table was available.
    pub v_charwise: Option<Subgroup>,
    pub degenerate: Option<&'static str>,
    pub v_series: SeriesReport,
    pub lower: SeriesReport,
    pub height: usize,
    pub is_camina_group: bool,
    pub is_generalized_camina_group: bool,
    pub is_vz_group: bool,
    pub quotient_shape: Option<QuotientShape>,
    pub parameters: Option<SeriesParameters>,
    pub centralizer: Option<CentralizerPair>,
}

pub(crate) fn log_base(mut n: u64, p: u64) -> Option<u32> {
    let mut e = 0;
    while n > 1 {
        if !n.is_multiple_of(p) {
            return None;
        }
        n /= p;
        e += 1;
    }
    Some(e)
}

pub(crate) fn series_parameters(ctx: &Context, vs: &SeriesReport) -> Option<SeriesParameters> {
    let top = vs.term(1).index() as u64;
    let p = prime_power_base(top)?;
    let twice_n = log_base(top, p)?;
    let m = log_base((ctx.lower.term(2).order() / vs.term(2).order()) as u64, p)?;
    (twice_n % 2 == 0).then_some(SeriesParameters {
        p,
        n: twice_n / 2,
        m,
    })
}

pub(crate) fn centralizer_pair(ctx: &Context, vs: &SeriesReport) -> Result<CentralizerPair> {
    let g = ctx.group;
    let q = quotient(g, vs.term(3))?;
    let z = q.preimage(g, &center(&q.group));
    let c = q.preimage(g, &centralizer_of(&q.group, &q.image(&ctx.derived)));
    Ok(CentralizerPair { z, c })
}

pub fn vanishing_profile(ctx: &Context) -> Result<VanishingProfile> {
    let g = ctx.group;
    let camina = camina_elements(g, &ctx.classes, &ctx.derived)?;
    let classwise = vanishing_off_group(g, &ctx.classes, VanishingMode::Classwise, None)?;
    let v_charwise = match ctx.table {
        Some(t) => {
            let charwise = vanishing_off_group(g, &ctx.classes, VanishingMode::Charwise, Some(t))?;
            if charwise != classwise {
                return Err(Error::OracleMismatch(format!(
                    "V(G) has order {} classwise but {} charwise",
                    classwise.subgroup.order(),
                    charwise.subgroup.order()
                )));
            }
            Some(charwise.subgroup)
        }
        None => None,
    };
    let v = classwise.subgroup;
    let vs = v_series(g, &v);
    let height = vanishing_height(&ctx.lower, &vs);
    let nonabelian = classwise.degenerate.is_none();
    let quotient_shape = if nonabelian {
        let q = quotient(g, &v)?;
        let shape = classify_abelian(&q.group)?;
        Some(QuotientShape {
            order: q.group.order(),
            cyclic: shape.cyclic,
            elementary_abelian: shape.elementary_abelian,
        })
    } else {
        None
    };
    let parameters = if nonabelian && vs.term(2) != ctx.lower.term(2) {
        series_parameters(ctx, &vs)
    } else {
        None
    };
    let centralizer = if nonabelian && vs.term(3) != ctx.lower.term(3) {
        Some(centralizer_pair(ctx, &vs)?)
    } else {
        None
    };
    Ok(VanishingProfile {
        camina,
        is_camina_group: nonabelian && v == ctx.derived,
        is_generalized_camina_group: nonabelian && v == ctx.center.join(g, &ctx.derived),
        is_vz_group: nonabelian && v == ctx.center,
        v,
        v_charwise,
        degenerate: classwise.degenerate,
        v_series: vs,
        lower: ctx.lower.clone(),
        height,
        quotient_shape,
        parameters,
        centralizer,
    })
}
