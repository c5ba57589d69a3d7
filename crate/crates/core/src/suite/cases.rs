//! Case bodies. Each returns an [`Eval`] or a [`Skip`] naming what is
//! missing from the catalog.

use serde_json::json;

use super::{CaseKind, CaseWitness, Ctx, Eval, Instance, Observation, Skip, TheoremCase};
use crate::checkers::{self, Property, Side};
use crate::constructions::{
    build, constant_term, corner_members, corner_ring, from_matrix_entries, matrix_entries,
    t_embedding,
};
use crate::descriptor::{MatrixFamily, RingDescriptor as D};
use crate::ring::{Elem, FiniteRing};
use crate::set::ElementSet;

const SIDES: [Side; 2] = [Side::Right, Side::Left];

fn case(
    id: &'static str,
    paper_ref: &'static str,
    kind: CaseKind,
    run: fn(&Ctx) -> Result<Eval, Skip>,
) -> TheoremCase {
    TheoremCase {
        id,
        paper_ref,
        kind,
        run,
    }
}

pub(super) fn all() -> Vec<TheoremCase> {
    use CaseKind::{Assertion as A, Implication as I, RecordedObservation as R};
    vec![
        case("S2-jacobson-in-qnil", "J(R) ⊆ R^qnil", A, jacobson_in_qnil),
        case(
            "S2-jacobson-ideal",
            "J(R) is a two-sided ideal",
            A,
            jacobson_ideal,
        ),
        case(
            "S2-nilpotent-in-qnil",
            "N(R) ⊆ R^qnil",
            A,
            nilpotent_in_qnil,
        ),
        case(
            "S2-qnil-basics",
            "0 ∈ R^qnil, 1 ∉ R^qnil, R^qnil ∩ U(R) = ∅",
            A,
            qnil_basics,
        ),
        case(
            "EX2.1-jacobson-strictly-smaller",
            "E_1n ∈ M_n(F)^qnil \\ J(M_n(F))",
            A,
            jacobson_strict,
        ),
        case(
            "P2.2.1-power-closure",
            "a^n ∈ R^qnil ⇒ a ∈ R^qnil",
            A,
            power_closure,
        ),
        case(
            "P2.2.2-local-partition",
            "R local ⇒ R = U(R) ⊔ R^qnil",
            I,
            local_partition,
        ),
        case("P2.2.3-swap", "ab ∈ R^qnil ⇔ ba ∈ R^qnil", A, swap),
        case(
            "P2.2.4-conjugation",
            "a ∈ R^qnil, r ∈ U(R) ⇒ r^-1 a r ∈ R^qnil",
            A,
            conjugation,
        ),
        case("P2.2.5-corner", "(eRe)^qnil = eRe ∩ R^qnil", A, corner_qnil),
        case(
            "L2.3.1-upper-triangular",
            "a, c ∈ R^qnil ⇒ [[a,b],[0,c]] ∈ U_2(R)^qnil",
            A,
            upper_triangular,
        ),
        case(
            "L2.3.2-d2-containment",
            "a ∈ R^qnil ⇒ [[a,b],[0,a]] ∈ D_2(R)^qnil",
            A,
            d2_containment,
        ),
        case(
            "L2.3.3-d2-extraction",
            "[[a,b],[0,a]] ∈ D_2(R)^qnil, b ∈ comm²(a) ⇒ a ∈ R^qnil",
            A,
            d2_extraction,
        ),
        case(
            "P2.4-products",
            "(∏ R_i)^qnil = ∏ R_i^qnil",
            A,
            product_rule,
        ),
        case(
            "L2.5.1-dorroh-commutant",
            "(c,d) ∈ comm(a,b) ⇔ c ∈ comm(a)",
            A,
            dorroh_commutant,
        ),
        case(
            "L2.5.2-dorroh-inverse",
            "(a,b)^-1 = (c,d) ⇔ (a+b)(c+d) = 1 = (c+d)(a+b), bd = 1",
            A,
            dorroh_inverse,
        ),
        case(
            "P2.6.1-dorroh-algebra-part",
            "(R,0)^qnil = (R,0) ∩ I(R,S)^qnil",
            A,
            dorroh_algebra_part,
        ),
        case(
            "P2.6.2-dorroh-scalar-part",
            "(0,S) ∩ I(R,S)^qnil ⊆ (0,S)^qnil",
            A,
            dorroh_scalar_part,
        ),
        case(
            "T2.7-dorroh-criterion",
            "(0,i) ∈ I^qnil ⇔ ∀(a,b) ∃(u,v): (i(a+b)+1)(u+v) = (1+ib)v = 1",
            A,
            dorroh_criterion,
        ),
        case(
            "P2.8.1-ttrunc-projection",
            "A ∈ T[R,S]^qnil ⇒ a_i ∈ R^qnil, s ∈ S^qnil",
            A,
            ttrunc_projection,
        ),
        case(
            "P2.8.2-ttrunc-constant-tail",
            "a ∈ R^qnil, s ∈ S^qnil ⇒ (a, s, s, ...) ∈ T[R,S]^qnil",
            A,
            ttrunc_tail,
        ),
        case("L2.9-series-units", "U = ε^-1 U(R)", A, series_units),
        case(
            "P2.10-series-inclusion",
            "ε^-1 R^qnil ⊆ H(R;α)^qnil",
            A,
            series_inclusion,
        ),
        case(
            "P2.10-hurwitz-equality",
            "H(R;α)^qnil = ε^-1 R^qnil",
            R,
            series_equality,
        ),
        case(
            "D3.1-qnil-duo-consistency",
            "qnil-duo ⇔ R^qnil a = a R^qnil ∀a",
            A,
            definition_consistency,
        ),
        case(
            "EX3.3.1-commutative-and-division",
            "commutative or division ⇒ qnil-duo",
            I,
            commutative_or_division,
        ),
        case(
            "EX3.3.2-xuxu-local16",
            "local, R^qnil = {0,2,x,y,...}, not right qnil-duo",
            A,
            xuxu_example,
        ),
        case(
            "L3.4-central-qnil",
            "R^qnil ⊆ C(R) ⇒ qnil-duo",
            I,
            central_qnil,
        ),
        case(
            "L3.4-converse-recorded",
            "converse: qnil-duo rings with non-central R^qnil",
            R,
            central_qnil_converse,
        ),
        case(
            "T3.5-products-forward",
            "each R_i right qnil-duo ⇒ ∏ R_i right qnil-duo",
            I,
            products_forward,
        ),
        case(
            "T3.5-products-converse",
            "∏ R_i right qnil-duo ⇒ each R_i right qnil-duo",
            I,
            products_converse,
        ),
        case(
            "T3.6.1-idempotent-defect",
            "ex - exe, xe - exe ∈ R^qnil",
            A,
            idempotent_defect,
        ),
        case("T3.abelian", "right (left) qnil-duo ⇒ abelian", I, abelian),
        case(
            "T3.6.3-central-idempotent-split",
            "e central: R qnil-duo ⇔ eR, (1-e)R qnil-duo",
            I,
            central_split,
        ),
        case(
            "C3.7-corner",
            "R right (left) qnil-duo ⇒ eRe right (left) qnil-duo",
            I,
            corner_transfer,
        ),
        case(
            "T3.8-directly-finite",
            "right (left) qnil-duo ⇒ directly finite",
            I,
            directly_finite,
        ),
        case(
            "EX3.9-m2z2",
            "M_2(Z_2) directly finite, not abelian, not qnil-duo",
            A,
            m2z2_example,
        ),
        case(
            "EX3.10.1-matrix-not-qnil-duo",
            "M_n(R), U_n(R) neither right nor left qnil-duo",
            A,
            matrix_not_duo,
        ),
        case(
            "EX3.10.2-vn-qnil-duo",
            "R commutative ⇒ V_n(R) qnil-duo",
            A,
            vn_duo,
        ),
        case(
            "T3.11-local-square-zero",
            "R local, (R^qnil)^2 = 0 ⇒ qnil-duo",
            I,
            local_square_zero,
        ),
        case(
            "EX3.12.1-d3-pattern",
            "R^qnil = {a ∈ 2Z_4}, R qnil-duo",
            A,
            d3_pattern,
        ),
        case(
            "EX3.12.1-d3-pattern-square",
            "(R^qnil)^2 = 0",
            R,
            d3_pattern_square,
        ),
        case(
            "EX3.12.2-square-condition-needed",
            "local, (R^qnil)^2 ≠ 0, R^qnil = J(R), not right qnil-duo",
            A,
            square_condition_needed,
        ),
        case(
            "T3.13-d2-over-domain",
            "R domain, D_2(R) qnil-duo ⇒ R qnil-duo",
            I,
            d2_domain,
        ),
        case(
            "T3.14.1-exchange-stable-range",
            "qnil-duo exchange ⇒ stable range 1",
            I,
            exchange_sr1,
        ),
        case(
            "T3.14.2-regular-strongly-regular",
            "qnil-duo regular ⇒ strongly regular",
            I,
            regular_strongly,
        ),
        case(
            "T3.14-stable-range-recorded",
            "stable range 1 on every finite ring",
            R,
            stable_range_recorded,
        ),
        case(
            "T3.16-dorroh-descent",
            "I(R,S) right qnil-duo ⇒ R right qnil-duo",
            I,
            dorroh_descent,
        ),
        case(
            "P3.17-ttrunc-descent",
            "T[R,S] right qnil-duo ⇒ R, S right qnil-duo",
            I,
            ttrunc_descent,
        ),
        case(
            "P3.17-ttrunc-converse",
            "R, S right qnil-duo, S^qnil ⊆ R^qnil ⇒ T[R,S] right qnil-duo",
            I,
            ttrunc_converse,
        ),
        case(
            "T3.18.1-hurwitz-descent",
            "H(R;α) right qnil-duo ⇒ R right qnil-duo",
            I,
            hurwitz_descent,
        ),
        case(
            "T3.18.2-skew-power-descent",
            "R[[x;α]] right qnil-duo ⇒ R right qnil-duo",
            I,
            skew_power_descent,
        ),
        case(
            "L4.1.1-l-units",
            "A ∈ U(L_(s,t)(R)) ⇔ a, d, f ∈ U(R)",
            A,
            l_units,
        ),
        case(
            "L4.1.2-l-diagonal-qnil",
            "a, d, f ∈ R^qnil ⇒ A ∈ L_(s,t)(R)^qnil",
            A,
            l_diagonal_qnil,
        ),
        case(
            "L4.2.1-l0t-corner-entry",
            "A ∈ L_(0,t)(R)^qnil ⇒ a ∈ R^qnil",
            A,
            l0t_entry,
        ),
        case(
            "L4.2.2-ls0-corner-entry",
            "A ∈ L_(s,0)(R)^qnil ⇒ f ∈ R^qnil",
            A,
            ls0_entry,
        ),
        case(
            "L4.2.3-l00-characterization",
            "A ∈ L_(0,0)(R)^qnil ⇔ a, d, f ∈ R^qnil",
            A,
            l00_characterization,
        ),
        case(
            "T4.3-l0t-descent",
            "L_(0,t)(R) right qnil-duo ⇒ R right qnil-duo",
            I,
            l0t_descent,
        ),
        case(
            "EX4.4-L11Z4-not-right-qnil-duo",
            "BA = AC has no solution C ∈ L_(1,1)(Z_4)^qnil",
            A,
            l11_example,
        ),
        case(
            "L4.5.1-h-commutant",
            "AB = BA ⇔ ax = xa, dz = zd, fv = vf",
            A,
            h_commutant,
        ),
        case(
            "L4.5.2-h-inverse",
            "B = A^-1 ⇔ x = a^-1, z = d^-1, v = f^-1",
            A,
            h_inverse,
        ),
        case(
            "L4.5.3-h-qnil",
            "A ∈ H_(s,t)(R)^qnil ⇔ a, d, f ∈ R^qnil",
            A,
            h_qnil,
        ),
        case(
            "T4.6-h-equivalence",
            "R right qnil-duo ⇔ H_(s,t)(R) right qnil-duo",
            I,
            h_equivalence,
        ),
        case(
            "L4.7.1-k0-units",
            "U(K_0(R)) = {A : a, d ∈ U(R)}",
            A,
            k0_units,
        ),
        case(
            "L4.7.2-k0-center",
            "C(K_0(R)) = {aI : a ∈ C(R)}",
            A,
            k0_center,
        ),
        case(
            "P4.8-k0-sufficiency",
            "a, d ∈ R^qnil ⇒ A ∈ K_0(R)^qnil",
            A,
            k0_sufficiency,
        ),
        case(
            "T4.9-k0-kernel-condition",
            "b ∈ Ker(l_x - r_y), c ∈ Ker(l_y - r_x) ⇒ a, d ∈ R^qnil",
            A,
            k0_kernel,
        ),
        case(
            "P4.10.1-k0-local",
            "R local ⇒ (A ∈ K_0(R)^qnil ⇔ a, d ∈ R^qnil)",
            A,
            k0_local,
        ),
        case(
            "P4.10.2-k0-diagonal",
            "diag(a,d) ∈ K_0(R)^qnil ⇔ a, d ∈ R^qnil",
            A,
            k0_diagonal,
        ),
        case(
            "T4.11.1-k0-local-descent",
            "R local, K_0(R) right qnil-duo ⇒ R right qnil-duo",
            I,
            k0_local_descent,
        ),
        case(
            "T4.11.2-k0-domain-descent",
            "R without zero divisors, K_0(R) right qnil-duo ⇒ R right qnil-duo",
            I,
            k0_domain_descent,
        ),
    ]
}

// ---- accumulators ------------------------------------------------------

struct Tally {
    checked: u64,
    witness: Option<CaseWitness>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            witness: None,
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> CaseWitness) {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn finish(self, what: &str) -> Result<Eval, Skip> {
        if self.checked == 0 {
            return Err(Skip(format!("no {what} in the catalog")));
        }
        let ok = self.witness.is_none();
        let detail = format!(
            "{} checks on {what}, {}",
            self.checked,
            if ok {
                "no violations"
            } else {
                "violation found"
            }
        );
        Ok(Eval::Checked {
            ok,
            checked: self.checked,
            witness: self.witness,
            detail,
        })
    }
}

struct Imps(Vec<Instance>);

impl Imps {
    fn new() -> Self {
        Imps(Vec::new())
    }

    fn push(
        &mut self,
        ring: &str,
        side: Option<Side>,
        note: Option<String>,
        hypothesis: bool,
        conclusion: bool,
    ) {
        self.0.push(Instance {
            ring: ring.to_string(),
            side,
            note,
            hypothesis,
            conclusion,
        });
    }

    fn finish(self, what: &str) -> Result<Eval, Skip> {
        if self.0.is_empty() {
            return Err(Skip(format!("no {what} in the catalog")));
        }
        Ok(Eval::Implications {
            instances: self.0,
            witness: None,
        })
    }
}

// ---- structural helpers ------------------------------------------------

fn entries(r: &FiniteRing, a: Elem) -> Vec<Elem> {
    matrix_entries(r, a).expect("matrix-shaped ring").1
}

fn is_field(r: &FiniteRing) -> bool {
    r.units().len() + 1 == r.order()
}

fn no_zero_divisors(r: &FiniteRing) -> bool {
    r.elements().filter(|&a| a != r.zero()).all(|a| {
        r.elements()
            .all(|b| b == r.zero() || r.mul(a, b) != r.zero())
    })
}

/// Componentwise factors of a product-like ring, in coordinate order.
fn factors(r: &FiniteRing) -> Option<Vec<FiniteRing>> {
    match r.descriptor() {
        D::Product { .. } => Some(r.parts().to_vec()),
        D::TTrunc { n, .. } => {
            let mut f = vec![r.part(0).clone(); *n];
            f.push(r.part(1).clone());
            Some(f)
        }
        _ => None,
    }
}

fn resolve_st(r: &FiniteRing) -> Option<(Elem, Elem)> {
    let base = r.part(0);
    match r.descriptor() {
        D::Lst { s, t, .. } | D::Hst { s, t, .. } => {
            Some((base.resolve(s).ok()?, base.resolve(t).ok()?))
        }
        _ => None,
    }
}

fn is_lst(d: &D) -> bool {
    matches!(d, D::Lst { .. })
}

fn is_hst(d: &D) -> bool {
    matches!(d, D::Hst { .. })
}

/// `K_s` rings whose twist is zero.
fn k0_rings(ctx: &Ctx) -> Vec<(&str, &FiniteRing)> {
    ctx.all()
        .filter(|(_, r)| match r.descriptor() {
            D::Ks { s, .. } => r
                .part(0)
                .resolve(s)
                .map(|s| s == r.part(0).zero())
                .unwrap_or(false),
            _ => false,
        })
        .collect()
}

/// `(a, b, c, d)` blocks of a `K_s` element.
fn blocks(r: &FiniteRing, x: Elem) -> (Elem, Elem, Elem, Elem) {
    let c = r.decode(x);
    (c[0], c[1], c[2], c[3])
}

fn dorroh_rings(ctx: &Ctx) -> Vec<(&str, &FiniteRing, usize)> {
    ctx.all()
        .filter_map(|(n, r)| match r.descriptor() {
            D::Dorroh { scalars, .. } => Some((n, r, *scalars)),
            _ => None,
        })
        .collect()
}

fn series_rings(ctx: &Ctx) -> Vec<(&str, &FiniteRing)> {
    ctx.select(|d| matches!(d, D::Hurwitz { .. } | D::SkewPower { .. }))
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Right => "right",
        Side::Left => "left",
    }
}

// ---- quasinilpotent algebra ------------------------------------------

fn jacobson_in_qnil(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ctx.all() {
        for a in r.jacobson().iter() {
            t.check(r.is_qnil(a), || {
                CaseWitness::new(name, r, &[("a", a)], "a ∈ J(R) but not quasinilpotent")
            });
        }
    }
    t.finish("rings")
}

fn jacobson_ideal(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ctx.all() {
        let j = r.jacobson();
        for a in j.iter() {
            for b in j.iter() {
                t.check(j.contains(r.add(a, b)), || {
                    CaseWitness::new(name, r, &[("a", a), ("b", b)], "a + b ∉ J(R)")
                });
            }
            for x in r.elements() {
                let ok = j.contains(r.mul(a, x)) && j.contains(r.mul(x, a));
                t.check(ok, || {
                    CaseWitness::new(name, r, &[("a", a), ("x", x)], "ax or xa ∉ J(R)")
                });
            }
        }
    }
    t.finish("rings")
}

fn nilpotent_in_qnil(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ctx.all() {
        for a in r.nilpotents().iter() {
            t.check(r.is_qnil(a), || {
                CaseWitness::new(name, r, &[("a", a)], "a nilpotent but not quasinilpotent")
            });
        }
    }
    t.finish("rings")
}

fn qnil_basics(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ctx.all() {
        t.check(r.is_qnil(r.zero()), || {
            CaseWitness::new(name, r, &[], "0 ∉ R^qnil")
        });
        t.check(!r.is_qnil(r.one()), || {
            CaseWitness::new(name, r, &[], "1 ∈ R^qnil")
        });
        let common = r.qnil().first_common(r.units());
        t.check(common.is_none(), || {
            CaseWitness::new(name, r, &[("u", common.unwrap())], "unit in R^qnil")
        });
    }
    t.finish("rings")
}

fn jacobson_strict(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ctx.all() {
        let D::Matrix {
            family: MatrixFamily::Mn,
            n,
            ..
        } = r.descriptor()
        else {
            continue;
        };
        let base = r.part(0);
        if !is_field(base) {
            continue;
        }
        let n = *n;
        let mut m = vec![base.zero(); n * n];
        m[n - 1] = base.one();
        let e1n = from_matrix_entries(r, &m).expect("matrix unit");
        t.check(r.jacobson().len() == 1, || {
            CaseWitness::new(name, r, &[], "J(M_n(F)) ≠ 0")
        });
        t.check(r.is_qnil(e1n) && !r.jacobson().contains(e1n), || {
            CaseWitness::new(name, r, &[("E_1n", e1n)], "E_1n not in R^qnil \\ J(R)")
        });
    }
    t.finish("matrix rings over fields")
}

fn power_closure(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ctx.all() {
        for a in r.elements() {
            let in_q = r.is_qnil(a);
            let mut seen = ElementSet::empty(r.order());
            let mut p = a;
            let mut k = 1u64;
            while !seen.contains(p) {
                seen.insert(p);
                t.check(in_q || !r.is_qnil(p), || {
                    CaseWitness::new(
                        name,
                        r,
                        &[("a", a), ("a^k", p)],
                        format!("a^{k} ∈ R^qnil but a ∉ R^qnil"),
                    )
                });
                p = r.mul(p, a);
                k += 1;
            }
        }
    }
    t.finish("rings")
}

fn local_partition(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut imps = Imps::new();
    for (name, r) in ctx.all() {
        let h = ctx.holds(r, Property::Local);
        let c = r.units().is_disjoint(r.qnil()) && r.units().len() + r.qnil().len() == r.order();
        imps.push(name, None, None, h, c);
    }
    imps.finish("rings")
}

fn swap(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ctx.all() {
        for a in r.elements() {
            for b in r.elements() {
                let ok = r.is_qnil(r.mul(a, b)) == r.is_qnil(r.mul(b, a));
                t.check(ok, || {
                    CaseWitness::new(
                        name,
                        r,
                        &[("a", a), ("b", b)],
                        "exactly one of ab, ba is quasinilpotent",
                    )
                });
            }
        }
    }
    t.finish("rings")
}

fn conjugation(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ctx.all() {
        for u in r.units().iter() {
            let inv = r.inverse(u).expect("unit");
            for a in r.qnil().iter() {
                let c = r.mul(r.mul(inv, a), u);
                t.check(r.is_qnil(c), || {
                    CaseWitness::new(name, r, &[("a", a), ("r", u)], "r^-1 a r ∉ R^qnil")
                });
            }
        }
    }
    t.finish("rings")
}

fn corner_qnil(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ctx.all() {
        for e in r.idempotents().iter().filter(|&e| e != r.zero()) {
            let c = match corner_ring(r, e) {
                Ok(c) => c,
                Err(err) => return Err(Skip(format!("corner of {name} failed to build: {err}"))),
            };
            let members = corner_members(&c);
            for (i, &m) in members.iter().enumerate() {
                t.check(c.is_qnil(i) == r.is_qnil(m), || {
                    CaseWitness::new(
                        name,
                        r,
                        &[("e", e), ("x", m)],
                        "membership in (eRe)^qnil and eRe ∩ R^qnil differ",
                    )
                });
            }
        }
    }
    t.finish("rings")
}

fn upper_triangular(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ctx.select(|d| {
        matches!(
            d,
            D::Matrix {
                family: MatrixFamily::Un,
                n: 2,
                ..
            }
        )
    }) {
        let base = r.part(0);
        for x in r.elements() {
            let m = entries(r, x);
            if base.is_qnil(m[0]) && base.is_qnil(m[3]) {
                t.check(r.is_qnil(x), || {
                    CaseWitness::new(name, r, &[("A", x)], "qnil diagonal but A ∉ U_2(R)^qnil")
                });
            }
        }
    }
    t.finish("U_2 rings")
}

fn d2_rings(ctx: &Ctx) -> Vec<(&str, &FiniteRing)> {
    ctx.select(|d| {
        matches!(
            d,
            D::Matrix {
                family: MatrixFamily::Dn,
                n: 2,
                ..
            }
        )
    })
}

fn d2_containment(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in d2_rings(ctx) {
        let base = r.part(0);
        for x in r.elements() {
            if base.is_qnil(entries(r, x)[0]) {
                t.check(r.is_qnil(x), || {
                    CaseWitness::new(name, r, &[("A", x)], "a ∈ R^qnil but A ∉ D_2(R)^qnil")
                });
            }
        }
    }
    t.finish("D_2 rings")
}

fn d2_extraction(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in d2_rings(ctx) {
        let base = r.part(0);
        for x in r.qnil().iter() {
            let m = entries(r, x);
            if base.double_commutant(m[0]).contains(m[1]) {
                t.check(base.is_qnil(m[0]), || {
                    CaseWitness::new(name, r, &[("A", x)], "b ∈ comm²(a) but a ∉ R^qnil")
                });
            }
        }
    }
    t.finish("D_2 rings")
}

fn product_rule(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ctx.all() {
        let Some(fs) = factors(r) else { continue };
        for x in r.elements() {
            let c = r.decode(x);
            let expected = fs.iter().zip(c.iter()).all(|(f, &v)| f.is_qnil(v));
            t.check(r.is_qnil(x) == expected, || {
                CaseWitness::new(
                    name,
                    r,
                    &[("x", x)],
                    "qnil membership differs from the coordinatewise rule",
                )
            });
        }
    }
    t.finish("product rings")
}

// ---- Dorroh extensions ---------------------------------------------------

fn dorroh_commutant(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r, _) in dorroh_rings(ctx) {
        let alg = r.part(0);
        for p in r.elements() {
            let a = r.decode(p)[0];
            for q in r.elements() {
                let c = r.decode(q)[0];
                t.check(r.commute(p, q) == alg.commute(a, c), || {
                    CaseWitness::new(
                        name,
                        r,
                        &[("(a,b)", p), ("(c,d)", q)],
                        "commutation differs from c ∈ comm(a)",
                    )
                });
            }
        }
    }
    t.finish("Dorroh rings")
}

fn dorroh_inverse(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r, n) in dorroh_rings(ctx) {
        let alg = r.part(0);
        let scalar = |k: Elem| alg.times(k as u64, alg.one());
        for p in r.elements() {
            let (a, b) = (r.decode(p)[0], r.decode(p)[1]);
            let ab = alg.add(a, scalar(b));
            for q in r.elements() {
                let (c, d) = (r.decode(q)[0], r.decode(q)[1]);
                let cd = alg.add(c, scalar(d));
                let inverse = r.mul(p, q) == r.one() && r.mul(q, p) == r.one();
                let criterion = alg.mul(ab, cd) == alg.one()
                    && alg.mul(cd, ab) == alg.one()
                    && (b * d) % n == 1 % n;
                t.check(inverse == criterion, || {
                    CaseWitness::new(
                        name,
                        r,
                        &[("(a,b)", p), ("(c,d)", q)],
                        "inverse test and criterion disagree",
                    )
                });
            }
        }
    }
    t.finish("Dorroh rings")
}

fn dorroh_algebra_part(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r, _) in dorroh_rings(ctx) {
        let alg = r.part(0);
        for x in alg.elements() {
            let p = r.encode(&[x, 0]).unwrap();
            t.check(alg.is_qnil(x) == r.is_qnil(p), || {
                CaseWitness::new(
                    name,
                    r,
                    &[("(x,0)", p)],
                    "x ∈ R^qnil differs from (x,0) ∈ I^qnil",
                )
            });
        }
    }
    t.finish("Dorroh rings")
}

fn dorroh_scalar_part(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r, n) in dorroh_rings(ctx) {
        let zn = build(&D::zn(n)).map_err(|e| Skip(e.to_string()))?;
        for s in 0..n {
            let p = r.encode(&[r.part(0).zero(), s]).unwrap();
            if r.is_qnil(p) {
                t.check(zn.is_qnil(s), || {
                    CaseWitness::new(name, r, &[("(0,s)", p)], "(0,s) ∈ I^qnil but s ∉ S^qnil")
                });
            }
        }
    }
    t.finish("Dorroh rings")
}

fn dorroh_criterion(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    let mut nontrivial = 0usize;
    for (name, r, n) in dorroh_rings(ctx) {
        let alg = r.part(0);
        let zn = build(&D::zn(n)).map_err(|e| Skip(e.to_string()))?;
        let scalar = |k: Elem| alg.times(k as u64, alg.one());
        for i in zn.qnil().iter() {
            let p = r.encode(&[alg.zero(), i]).unwrap();
            let criterion = r.commutant(p).iter().all(|q| {
                let (a, b) = (r.decode(q)[0], r.decode(q)[1]);
                let lhs = alg.one_plus(alg.times(i as u64, alg.add(a, scalar(b))));
                r.elements().any(|w| {
                    let (u, v) = (r.decode(w)[0], r.decode(w)[1]);
                    alg.mul(lhs, alg.add(u, scalar(v))) == alg.one()
                        && ((1 + i * b) * v) % n == 1 % n
                })
            });
            if i != 0 {
                nontrivial += 1;
            }
            t.check(r.is_qnil(p) == criterion, || {
                CaseWitness::new(
                    name,
                    r,
                    &[("(0,i)", p)],
                    "qnil membership and solvability disagree",
                )
            });
        }
    }
    let mut eval = t.finish("Dorroh rings")?;
    if let Eval::Checked { detail, .. } = &mut eval {
        detail.push_str(&format!(", {nontrivial} with i ≠ 0"));
    }
    Ok(eval)
}

// ---- T[R,S] truncations ------------------------------------------------

fn ttrunc_rings(ctx: &Ctx) -> Vec<(&str, &FiniteRing)> {
    ctx.select(|d| matches!(d, D::TTrunc { .. }))
}

fn ttrunc_projection(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ttrunc_rings(ctx) {
        let fs = factors(r).unwrap();
        for x in r.qnil().iter() {
            let c = r.decode(x);
            let ok = fs.iter().zip(c.iter()).all(|(f, &v)| f.is_qnil(v));
            t.check(ok, || {
                CaseWitness::new(
                    name,
                    r,
                    &[("A", x)],
                    "a coordinate of A is not quasinilpotent",
                )
            });
        }
    }
    t.finish("T[R,S] truncations")
}

fn ttrunc_tail(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ttrunc_rings(ctx) {
        let Some(iota) = t_embedding(r) else { continue };
        let (rr, ss) = (r.part(0), r.part(1));
        let width = r.coords().len();
        for a in rr.qnil().iter() {
            for s in ss.qnil().iter() {
                let mut c = vec![iota[s]; width];
                c[0] = a;
                c[width - 1] = s;
                let x = r.encode(&c).unwrap();
                t.check(r.is_qnil(x), || {
                    CaseWitness::new(name, r, &[("A", x)], "(a, s, s, ...) ∉ T[R,S]^qnil")
                });
            }
        }
    }
    t.finish("T[R,S] truncations with a known embedding")
}

// ---- series truncations ------------------------------------------------

fn series_units(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in series_rings(ctx) {
        let base = r.part(0);
        for f in r.elements() {
            let a0 = constant_term(r, f).unwrap();
            t.check(r.is_unit(f) == base.is_unit(a0), || {
                CaseWitness::new(name, r, &[("f", f)], "unit status differs from ε(f)")
            });
        }
    }
    t.finish("series truncations")
}

fn series_inclusion(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in series_rings(ctx) {
        let base = r.part(0);
        for f in r.elements() {
            if base.is_qnil(constant_term(r, f).unwrap()) {
                t.check(r.is_qnil(f), || {
                    CaseWitness::new(name, r, &[("f", f)], "ε(f) ∈ R^qnil but f ∉ qnil")
                });
            }
        }
    }
    t.finish("series truncations")
}

fn series_equality(ctx: &Ctx) -> Result<Eval, Skip> {
    let rings = series_rings(ctx);
    if rings.is_empty() {
        return Err(Skip("no series truncations in the catalog".into()));
    }
    let mut equal_all = true;
    let observations = rings
        .into_iter()
        .map(|(name, r)| {
            let base = r.part(0);
            let pre = ElementSet::from_predicate(r.order(), |f| {
                base.is_qnil(constant_term(r, f).unwrap())
            });
            let equal = &pre == r.qnil();
            equal_all &= equal;
            Observation {
                ring: name.to_string(),
                value: json!({ "equal": equal, "qnil": r.qnil().len(), "preimage": pre.len() }),
            }
        })
        .collect();
    let detail = if equal_all {
        "equality observed on every instance"
    } else {
        "equality fails on some instance"
    };
    Ok(Eval::Recorded {
        observations,
        detail: detail.to_string(),
    })
}

// ---- qnil-duo rings ------------------------------------------------------

fn definition_consistency(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ctx.all() {
        let both = ctx.holds(r, Property::QnilDuo);
        t.check(
            both == (ctx.duo(r, Side::Right) && ctx.duo(r, Side::Left)),
            || CaseWitness::new(name, r, &[], "two-sided verdict differs from right ∧ left"),
        );
        if both {
            let q = r.qnil();
            for a in r.elements() {
                let left = ElementSet::from_members(r.order(), q.iter().map(|b| r.mul(b, a)));
                let right = ElementSet::from_members(r.order(), q.iter().map(|b| r.mul(a, b)));
                t.check(left == right, || {
                    CaseWitness::new(name, r, &[("a", a)], "R^qnil a ≠ a R^qnil")
                });
            }
        }
    }
    t.finish("rings")
}

fn commutative_or_division(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut imps = Imps::new();
    for (name, r) in ctx.all() {
        let h = ctx.holds(r, Property::Commutative) || is_field(r);
        imps.push(name, None, None, h, ctx.holds(r, Property::QnilDuo));
    }
    imps.finish("rings")
}

/// `a + 4b + 8c` indexes of `{0, 2, x, y, 2+x, 2+y, 2+x+y, x+y}`.
const XUXU_QNIL: [Elem; 8] = [0, 2, 4, 8, 6, 10, 14, 12];

fn xuxu_example(ctx: &Ctx) -> Result<Eval, Skip> {
    let (name, r) = ctx.find(&D::XuxuLocal16)?;
    let mut t = Tally::new();
    let expected = ElementSet::from_members(16, XUXU_QNIL);
    t.check(r.qnil() == &expected, || {
        CaseWitness::new(name, r, &[], "R^qnil differs from the listed 8 elements")
    });
    t.check(ctx.holds(r, Property::Local), || {
        CaseWitness::new(name, r, &[], "not local")
    });
    let (x, y) = (4, 8);
    t.check(r.mul(x, y) == 2, || {
        CaseWitness::new(name, r, &[("x", x), ("y", y)], "xy ≠ 2")
    });
    t.check(!ctx.holds(r, Property::QnilSquareZero), || {
        CaseWitness::new(name, r, &[], "(R^qnil)^2 = 0")
    });
    let p = 2 + 4;
    t.check(r.nilpotents().contains(p) && r.mul(p, p) != 0, || {
        CaseWitness::new(name, r, &[("2+x", p)], "2+x not nilpotent of index > 2")
    });
    let xy = r.mul(x, y);
    t.check(!r.qnil().iter().any(|c| r.mul(y, c) == xy), || {
        CaseWitness::new(
            name,
            r,
            &[("x", x), ("y", y)],
            "some t ∈ R^qnil has yt = xy",
        )
    });
    let v = checkers::is_right_qnil_duo(r);
    let w = v.witness.clone();
    t.check(
        !v.holds
            && w.as_ref()
                .is_some_and(|w| Property::RightQnilDuo.reverify(r, w)),
        || {
            CaseWitness::new(
                name,
                r,
                &[],
                "right qnil-duo, or the witness does not re-verify",
            )
        },
    );
    let mut eval = t.finish("XuXuLocal16")?;
    if let (
        Eval::Checked {
            witness: slot @ None,
            ..
        },
        Some(w),
    ) = (&mut eval, w)
    {
        *slot = Some(CaseWitness::new(
            name,
            r,
            &[("a", w.get("a").unwrap()), ("b", w.get("b").unwrap())],
            w.detail,
        ));
    }
    Ok(eval)
}

fn central_qnil(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut imps = Imps::new();
    for (name, r) in ctx.all() {
        imps.push(
            name,
            None,
            None,
            ctx.holds(r, Property::QnilCentral),
            ctx.holds(r, Property::QnilDuo),
        );
    }
    imps.finish("rings")
}

fn central_qnil_converse(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut observations = Vec::new();
    for (name, r) in ctx.all() {
        let central = checkers::qnil_is_central(r);
        if central.holds {
            continue;
        }
        for side in SIDES.into_iter().filter(|&s| ctx.duo(r, s)) {
            let w = central.witness.as_ref().unwrap();
            let value = json!({
                "side": side_name(side),
                "q": r.label(w.get("q").unwrap()),
                "r": r.label(w.get("r").unwrap()),
            });
            observations.push(Observation {
                ring: name.to_string(),
                value,
            });
        }
    }
    let detail = format!(
        "{} one-sided qnil-duo instances with non-central R^qnil",
        observations.len()
    );
    Ok(Eval::Recorded {
        observations,
        detail,
    })
}

fn products_forward(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut imps = Imps::new();
    for (name, r) in ctx.all() {
        let Some(fs) = factors(r) else { continue };
        for side in SIDES {
            let h = fs.iter().all(|f| ctx.duo(f, side));
            imps.push(name, Some(side), None, h, ctx.duo(r, side));
        }
    }
    imps.finish("product rings")
}

fn products_converse(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut imps = Imps::new();
    for (name, r) in ctx.all() {
        let Some(fs) = factors(r) else { continue };
        for side in SIDES {
            let c = fs.iter().all(|f| ctx.duo(f, side));
            imps.push(name, Some(side), None, ctx.duo(r, side), c);
        }
    }
    imps.finish("product rings")
}

fn idempotent_defect(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ctx.all() {
        for e in r.idempotents().iter() {
            for x in r.elements() {
                let exe = r.mul(r.mul(e, x), e);
                let left = r.sub(r.mul(e, x), exe);
                let right = r.sub(r.mul(x, e), exe);
                t.check(r.is_qnil(left) && r.is_qnil(right), || {
                    CaseWitness::new(
                        name,
                        r,
                        &[("e", e), ("x", x)],
                        "ex - exe or xe - exe ∉ R^qnil",
                    )
                });
            }
        }
    }
    t.finish("rings")
}

fn abelian(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut imps = Imps::new();
    for (name, r) in ctx.all() {
        for side in SIDES {
            imps.push(
                name,
                Some(side),
                None,
                ctx.duo(r, side),
                ctx.holds(r, Property::Abelian),
            );
        }
    }
    imps.finish("rings")
}

fn central_split(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut imps = Imps::new();
    for (name, r) in ctx.all() {
        let central: Vec<Elem> = r
            .idempotents()
            .iter()
            .filter(|&e| e != r.zero() && e != r.one() && r.center().contains(e))
            .collect();
        for e in central {
            let f = r.sub(r.one(), e);
            let (er, fr) = match (corner_ring(r, e), corner_ring(r, f)) {
                (Ok(a), Ok(b)) => (a, b),
                _ => return Err(Skip(format!("corner of {name} failed to build"))),
            };
            for side in SIDES {
                let whole = ctx.duo(r, side);
                let parts = ctx.duo(&er, side) && ctx.duo(&fr, side);
                let note = format!("e = {}", r.label(e));
                imps.push(
                    name,
                    Some(side),
                    Some(format!("{note}, forward")),
                    whole,
                    parts,
                );
                imps.push(
                    name,
                    Some(side),
                    Some(format!("{note}, converse")),
                    parts,
                    whole,
                );
            }
        }
    }
    imps.finish("rings with nontrivial central idempotents")
}

fn corner_transfer(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut imps = Imps::new();
    for (name, r) in ctx.all() {
        for e in r.idempotents().iter().filter(|&e| e != r.zero()) {
            let c = corner_ring(r, e).map_err(|err| Skip(format!("corner of {name}: {err}")))?;
            for side in SIDES {
                imps.push(
                    name,
                    Some(side),
                    Some(format!("e = {}", r.label(e))),
                    ctx.duo(r, side),
                    ctx.duo(&c, side),
                );
            }
        }
    }
    imps.finish("rings")
}

fn directly_finite(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut imps = Imps::new();
    for (name, r) in ctx.all() {
        for side in SIDES {
            imps.push(
                name,
                Some(side),
                None,
                ctx.duo(r, side),
                ctx.holds(r, Property::DirectlyFinite),
            );
        }
    }
    imps.finish("rings")
}

fn m2z2_example(ctx: &Ctx) -> Result<Eval, Skip> {
    let (name, r) = ctx.find(&D::matrix(MatrixFamily::Mn, D::zn(2), 2))?;
    let mut t = Tally::new();
    t.check(ctx.holds(r, Property::DirectlyFinite), || {
        CaseWitness::new(name, r, &[], "not directly finite")
    });
    let ab = checkers::is_abelian(r);
    t.check(!ab.holds, || CaseWitness::new(name, r, &[], "abelian"));
    t.check(!ctx.duo(r, Side::Right) && !ctx.duo(r, Side::Left), || {
        CaseWitness::new(name, r, &[], "qnil-duo on some side")
    });
    let mut eval = t.finish("M_2(Z_2)")?;
    if let (
        Eval::Checked {
            witness: slot @ None,
            ..
        },
        Some(w),
    ) = (&mut eval, ab.witness)
    {
        *slot = Some(CaseWitness::new(
            name,
            r,
            &[("e", w.get("e").unwrap()), ("r", w.get("r").unwrap())],
            w.detail,
        ));
    }
    Ok(eval)
}

fn matrix_not_duo(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ctx.select(|d| {
        matches!(
            d,
            D::Matrix {
                family: MatrixFamily::Mn | MatrixFamily::Un,
                ..
            }
        )
    }) {
        for side in SIDES {
            let v = match side {
                Side::Right => checkers::is_right_qnil_duo(r),
                Side::Left => checkers::is_left_qnil_duo(r),
            };
            let p = if side == Side::Right {
                Property::RightQnilDuo
            } else {
                Property::LeftQnilDuo
            };
            let ok = !v.holds && v.witness.as_ref().is_some_and(|w| p.reverify(r, w));
            t.check(ok, || {
                CaseWitness::new(
                    name,
                    r,
                    &[],
                    format!("{} qnil-duo, or witness fails", side_name(side)),
                )
            });
        }
    }
    t.finish("M_n or U_n rings")
}

fn vn_duo(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ctx.select(|d| {
        matches!(
            d,
            D::Matrix {
                family: MatrixFamily::Vn,
                ..
            }
        )
    }) {
        if !r.part(0).is_commutative() {
            continue;
        }
        t.check(ctx.holds(r, Property::QnilDuo), || {
            CaseWitness::new(name, r, &[], "V_n(R) not qnil-duo")
        });
    }
    t.finish("V_n rings over commutative bases")
}

fn local_square_zero(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut imps = Imps::new();
    for (name, r) in ctx.all() {
        let h = ctx.holds(r, Property::Local) && ctx.holds(r, Property::QnilSquareZero);
        for side in SIDES {
            imps.push(name, Some(side), None, h, ctx.duo(r, side));
        }
    }
    imps.finish("rings")
}

fn d3_pattern(ctx: &Ctx) -> Result<Eval, Skip> {
    let (name, r) = ctx.find(&D::d3_pattern(D::zn(4)))?;
    let mut t = Tally::new();
    let expected = ElementSet::from_predicate(r.order(), |x| r.decode(x)[0] % 2 == 0);
    t.check(r.qnil() == &expected && expected.len() == 32, || {
        CaseWitness::new(name, r, &[], "R^qnil ≠ {a ∈ 2Z_4}")
    });
    t.check(ctx.holds(r, Property::QnilDuo), || {
        CaseWitness::new(name, r, &[], "not qnil-duo")
    });
    t.finish("D_3 pattern ring")
}

fn d3_pattern_square(ctx: &Ctx) -> Result<Eval, Skip> {
    let (name, r) = ctx.find(&D::d3_pattern(D::zn(4)))?;
    let v = checkers::qnil_square_zero(r);
    let mut value = json!({ "qnil_square_zero": v.holds });
    if let Some(w) = &v.witness {
        let (a, b) = (w.get("a").unwrap(), w.get("b").unwrap());
        value["a"] = json!(r.label(a));
        value["b"] = json!(r.label(b));
        value["ab"] = json!(r.label(r.mul(a, b)));
    }
    let detail = if v.holds {
        "(R^qnil)^2 = 0"
    } else {
        "(R^qnil)^2 ≠ 0"
    };
    Ok(Eval::Recorded {
        observations: vec![Observation {
            ring: name.to_string(),
            value,
        }],
        detail: detail.to_string(),
    })
}

fn square_condition_needed(ctx: &Ctx) -> Result<Eval, Skip> {
    let (name, r) = ctx.find(&D::XuxuLocal16)?;
    let mut t = Tally::new();
    t.check(ctx.holds(r, Property::Local), || {
        CaseWitness::new(name, r, &[], "not local")
    });
    t.check(!ctx.holds(r, Property::QnilSquareZero), || {
        CaseWitness::new(name, r, &[], "(R^qnil)^2 = 0")
    });
    t.check(r.qnil() == r.jacobson(), || {
        CaseWitness::new(name, r, &[], "R^qnil ≠ J(R)")
    });
    t.check(!ctx.duo(r, Side::Right), || {
        CaseWitness::new(name, r, &[], "right qnil-duo")
    });
    t.finish("XuXuLocal16")
}

fn d2_domain(_: &Ctx) -> Result<Eval, Skip> {
    Ok(Eval::Degenerate(
        "every finite domain is a field, where R^qnil = {0} and the conclusion holds trivially"
            .to_string(),
    ))
}

fn exchange_sr1(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut imps = Imps::new();
    for (name, r) in ctx.all() {
        for side in SIDES {
            let h = ctx.duo(r, side) && ctx.holds(r, Property::Exchange);
            imps.push(
                name,
                Some(side),
                None,
                h,
                ctx.holds(r, Property::StableRangeOne),
            );
        }
    }
    imps.finish("rings")
}

fn regular_strongly(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut imps = Imps::new();
    for (name, r) in ctx.all() {
        for side in SIDES {
            let h = ctx.duo(r, side) && ctx.holds(r, Property::Regular);
            imps.push(
                name,
                Some(side),
                None,
                h,
                ctx.holds(r, Property::StronglyRegular),
            );
        }
    }
    imps.finish("rings")
}

fn stable_range_recorded(ctx: &Ctx) -> Result<Eval, Skip> {
    let observations: Vec<Observation> = ctx
        .all()
        .map(|(name, r)| Observation {
            ring: name.to_string(),
            value: json!({ "stable_range_one": ctx.holds(r, Property::StableRangeOne) }),
        })
        .collect();
    let all = observations
        .iter()
        .all(|o| o.value["stable_range_one"] == json!(true));
    let detail = if all {
        "stable range 1 on every ring"
    } else {
        "stable range 1 fails on some ring"
    };
    Ok(Eval::Recorded {
        observations,
        detail: detail.to_string(),
    })
}

fn descent(
    ctx: &Ctx,
    rings: Vec<(&str, &FiniteRing)>,
    what: &str,
    lower: impl Fn(&FiniteRing) -> Vec<FiniteRing>,
) -> Result<Eval, Skip> {
    let mut imps = Imps::new();
    for (name, r) in rings {
        let c = lower(r).iter().all(|b| ctx.duo(b, Side::Right));
        imps.push(name, Some(Side::Right), None, ctx.duo(r, Side::Right), c);
    }
    imps.finish(what)
}

fn dorroh_descent(ctx: &Ctx) -> Result<Eval, Skip> {
    descent(
        ctx,
        ctx.select(|d| matches!(d, D::Dorroh { .. })),
        "Dorroh rings",
        |r| vec![r.part(0).clone()],
    )
}

fn ttrunc_descent(ctx: &Ctx) -> Result<Eval, Skip> {
    descent(ctx, ttrunc_rings(ctx), "T[R,S] truncations", |r| {
        r.parts().to_vec()
    })
}

fn ttrunc_converse(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut imps = Imps::new();
    for (name, r) in ttrunc_rings(ctx) {
        let Some(iota) = t_embedding(r) else { continue };
        let (rr, ss) = (r.part(0), r.part(1));
        let inclusion = ss.qnil().iter().all(|s| rr.is_qnil(iota[s]));
        let h = ctx.duo(rr, Side::Right) && ctx.duo(ss, Side::Right) && inclusion;
        imps.push(name, Some(Side::Right), None, h, ctx.duo(r, Side::Right));
    }
    imps.finish("T[R,S] truncations with a known embedding")
}

fn hurwitz_descent(ctx: &Ctx) -> Result<Eval, Skip> {
    descent(
        ctx,
        ctx.select(|d| matches!(d, D::Hurwitz { .. })),
        "Hurwitz truncations",
        |r| vec![r.part(0).clone()],
    )
}

fn skew_power_descent(ctx: &Ctx) -> Result<Eval, Skip> {
    descent(
        ctx,
        ctx.select(|d| matches!(d, D::SkewPower { .. })),
        "skew power truncations",
        |r| vec![r.part(0).clone()],
    )
}

// ---- matrix subrings -----------------------------------------------------

/// Diagonal `(a, d, f)` of a 3x3 `L`- or `H`-shaped element.
fn diag3(r: &FiniteRing, x: Elem) -> [Elem; 3] {
    let m = entries(r, x);
    [m[0], m[4], m[8]]
}

fn l_units(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ctx.select(is_lst) {
        let base = r.part(0);
        for x in r.elements() {
            let ok = r.is_unit(x) == diag3(r, x).iter().all(|&v| base.is_unit(v));
            t.check(ok, || {
                CaseWitness::new(
                    name,
                    r,
                    &[("A", x)],
                    "unit status differs from the diagonal",
                )
            });
        }
    }
    t.finish("L_(s,t) rings")
}

fn l_diagonal_qnil(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ctx.select(is_lst) {
        let base = r.part(0);
        for x in r.elements() {
            if diag3(r, x).iter().all(|&v| base.is_qnil(v)) {
                t.check(r.is_qnil(x), || {
                    CaseWitness::new(name, r, &[("A", x)], "qnil diagonal but A ∉ qnil")
                });
            }
        }
    }
    t.finish("L_(s,t) rings")
}

fn l_with(ctx: &Ctx, keep: impl Fn(&FiniteRing, Elem, Elem) -> bool) -> Vec<(&str, &FiniteRing)> {
    ctx.select(is_lst)
        .into_iter()
        .filter(|(_, r)| resolve_st(r).is_some_and(|(s, t)| keep(r.part(0), s, t)))
        .collect()
}

fn l0t_entry(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in l_with(ctx, |b, s, _| s == b.zero()) {
        for x in r.qnil().iter() {
            t.check(r.part(0).is_qnil(diag3(r, x)[0]), || {
                CaseWitness::new(name, r, &[("A", x)], "a ∉ R^qnil")
            });
        }
    }
    t.finish("L_(0,t) rings")
}

fn ls0_entry(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in l_with(ctx, |b, _, tt| tt == b.zero()) {
        for x in r.qnil().iter() {
            t.check(r.part(0).is_qnil(diag3(r, x)[2]), || {
                CaseWitness::new(name, r, &[("A", x)], "f ∉ R^qnil")
            });
        }
    }
    t.finish("L_(s,0) rings")
}

fn l00_characterization(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in l_with(ctx, |b, s, tt| s == b.zero() && tt == b.zero()) {
        let base = r.part(0);
        for x in r.elements() {
            let ok = r.is_qnil(x) == diag3(r, x).iter().all(|&v| base.is_qnil(v));
            t.check(ok, || {
                CaseWitness::new(
                    name,
                    r,
                    &[("A", x)],
                    "qnil membership differs from the diagonal",
                )
            });
        }
    }
    t.finish("L_(0,0) rings")
}

fn l0t_descent(ctx: &Ctx) -> Result<Eval, Skip> {
    let rings = l_with(ctx, |b, s, _| s == b.zero());
    descent(ctx, rings, "L_(0,t) rings", |r| vec![r.part(0).clone()])
}

fn l11_example(ctx: &Ctx) -> Result<Eval, Skip> {
    let (name, r) = ctx.find(&D::lst(D::zn(4), 1u64, 1u64))?;
    let a = from_matrix_entries(r, &[0, 0, 0, 1, 2, 1, 0, 0, 3])
        .ok_or_else(|| Skip("A is not in the ring".into()))?;
    let b = from_matrix_entries(r, &[2, 0, 0, 1, 2, 3, 0, 0, 2])
        .ok_or_else(|| Skip("B is not in the ring".into()))?;
    let mut t = Tally::new();
    t.check(r.is_qnil(b), || {
        CaseWitness::new(name, r, &[("B", b)], "B ∉ qnil")
    });
    let ba = r.mul(b, a);
    t.check(entries(r, ba) == [0, 0, 0, 2, 0, 3, 0, 0, 2], || {
        CaseWitness::new(
            name,
            r,
            &[("BA", ba)],
            "BA differs from [[0,0,0],[2,0,3],[0,0,2]]",
        )
    });
    let solutions: Vec<Elem> = r.elements().filter(|&c| r.mul(a, c) == ba).collect();
    t.check(solutions.iter().all(|&c| !r.is_qnil(c)), || {
        CaseWitness::new(name, r, &[("A", a), ("B", b)], "some C ∈ qnil has AC = BA")
    });
    let v = checkers::is_right_qnil_duo(r);
    let reverified = v
        .witness
        .as_ref()
        .is_some_and(|w| Property::RightQnilDuo.reverify(r, w));
    t.check(!v.holds && reverified, || {
        CaseWitness::new(name, r, &[], "right qnil-duo, or witness fails")
    });
    let mut eval = t.finish("L_(1,1)(Z_4)")?;
    if let Eval::Checked {
        witness: slot @ None,
        detail,
        ..
    } = &mut eval
    {
        detail.push_str(&format!(
            ", {} solutions C of AC = BA, none quasinilpotent",
            solutions.len()
        ));
        *slot = Some(CaseWitness::new(
            name,
            r,
            &[("A", a), ("B", b), ("BA", ba)],
            "BA ∈ R^qnil A but BA ∉ A R^qnil",
        ));
    }
    Ok(eval)
}

fn h_commutant(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ctx.select(is_hst) {
        let base = r.part(0);
        let diags: Vec<[Elem; 3]> = r.elements().map(|x| diag3(r, x)).collect();
        for x in r.elements() {
            for y in r.elements() {
                let diag = (0..3).all(|k| base.commute(diags[x][k], diags[y][k]));
                t.check(r.commute(x, y) == diag, || {
                    CaseWitness::new(
                        name,
                        r,
                        &[("A", x), ("B", y)],
                        "commutation differs from the diagonal",
                    )
                });
            }
        }
    }
    t.finish("H_(s,t) rings")
}

fn h_inverse(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ctx.select(is_hst) {
        let base = r.part(0);
        let one = base.one();
        let diags: Vec<[Elem; 3]> = r.elements().map(|x| diag3(r, x)).collect();
        for x in r.elements() {
            for y in r.elements() {
                let inverse = r.mul(x, y) == r.one() && r.mul(y, x) == r.one();
                let diag = (0..3).all(|k| {
                    base.mul(diags[x][k], diags[y][k]) == one
                        && base.mul(diags[y][k], diags[x][k]) == one
                });
                t.check(inverse == diag, || {
                    CaseWitness::new(
                        name,
                        r,
                        &[("A", x), ("B", y)],
                        "inverse test differs from the diagonal",
                    )
                });
            }
        }
    }
    t.finish("H_(s,t) rings")
}

fn h_qnil(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in ctx.select(is_hst) {
        let base = r.part(0);
        for x in r.elements() {
            let ok = r.is_qnil(x) == diag3(r, x).iter().all(|&v| base.is_qnil(v));
            t.check(ok, || {
                CaseWitness::new(
                    name,
                    r,
                    &[("A", x)],
                    "qnil membership differs from the diagonal",
                )
            });
        }
    }
    t.finish("H_(s,t) rings")
}

fn h_equivalence(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut imps = Imps::new();
    for (name, r) in ctx.select(is_hst) {
        let (whole, base) = (ctx.duo(r, Side::Right), ctx.duo(r.part(0), Side::Right));
        imps.push(name, Some(Side::Right), Some("R ⇒ H".into()), base, whole);
        imps.push(name, Some(Side::Right), Some("H ⇒ R".into()), whole, base);
    }
    imps.finish("H_(s,t) rings")
}

fn k0_units(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in k0_rings(ctx) {
        let base = r.part(0);
        for x in r.elements() {
            let (a, _, _, d) = blocks(r, x);
            t.check(r.is_unit(x) == (base.is_unit(a) && base.is_unit(d)), || {
                CaseWitness::new(name, r, &[("A", x)], "unit status differs from a, d ∈ U(R)")
            });
        }
    }
    t.finish("K_0 rings")
}

fn k0_center(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in k0_rings(ctx) {
        let base = r.part(0);
        for x in r.elements() {
            let (a, b, c, d) = blocks(r, x);
            let scalar =
                b == base.zero() && c == base.zero() && a == d && base.center().contains(a);
            t.check(r.center().contains(x) == scalar, || {
                CaseWitness::new(
                    name,
                    r,
                    &[("A", x)],
                    "center membership differs from aI, a ∈ C(R)",
                )
            });
        }
    }
    t.finish("K_0 rings")
}

fn k0_sufficiency(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in k0_rings(ctx) {
        let base = r.part(0);
        for x in r.elements() {
            let (a, _, _, d) = blocks(r, x);
            if base.is_qnil(a) && base.is_qnil(d) {
                t.check(r.is_qnil(x), || {
                    CaseWitness::new(name, r, &[("A", x)], "a, d ∈ R^qnil but A ∉ qnil")
                });
            }
        }
    }
    t.finish("K_0 rings")
}

fn k0_kernel(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    let mut held = 0u64;
    for (name, r) in k0_rings(ctx) {
        for x in r.qnil().iter() {
            let check = checkers::k0_kernel_condition(r, x).map_err(|e| Skip(e.to_string()))?;
            if check.condition.holds {
                held += 1;
                t.check(check.conclusion == Some(true), || {
                    CaseWitness::new(
                        name,
                        r,
                        &[("A", x)],
                        "kernel condition holds but a or d ∉ R^qnil",
                    )
                });
            }
        }
    }
    let mut eval = t.finish("K_0 rings with qnil elements satisfying the kernel condition")?;
    if let Eval::Checked { detail, .. } = &mut eval {
        detail.push_str(&format!(" ({held} quasinilpotent A satisfy the condition)"));
    }
    Ok(eval)
}

fn k0_local(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in k0_rings(ctx) {
        let base = r.part(0);
        if !ctx.holds(base, Property::Local) {
            continue;
        }
        for x in r.elements() {
            let (a, _, _, d) = blocks(r, x);
            t.check(r.is_qnil(x) == (base.is_qnil(a) && base.is_qnil(d)), || {
                CaseWitness::new(
                    name,
                    r,
                    &[("A", x)],
                    "qnil membership differs from a, d ∈ R^qnil",
                )
            });
        }
    }
    t.finish("K_0 rings over local bases")
}

fn k0_diagonal(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut t = Tally::new();
    for (name, r) in k0_rings(ctx) {
        let base = r.part(0);
        let z = base.zero();
        for a in base.elements() {
            for d in base.elements() {
                let x = r.encode(&[a, z, z, d]).unwrap();
                t.check(r.is_qnil(x) == (base.is_qnil(a) && base.is_qnil(d)), || {
                    CaseWitness::new(
                        name,
                        r,
                        &[("A", x)],
                        "diagonal qnil membership differs from a, d ∈ R^qnil",
                    )
                });
            }
        }
    }
    t.finish("K_0 rings")
}

fn k0_local_descent(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut imps = Imps::new();
    for (name, r) in k0_rings(ctx) {
        let base = r.part(0);
        let h = ctx.holds(base, Property::Local) && ctx.duo(r, Side::Right);
        imps.push(name, Some(Side::Right), None, h, ctx.duo(base, Side::Right));
    }
    imps.finish("K_0 rings")
}

fn k0_domain_descent(ctx: &Ctx) -> Result<Eval, Skip> {
    let mut imps = Imps::new();
    for (name, r) in k0_rings(ctx) {
        let base = r.part(0);
        let h = no_zero_divisors(base) && ctx.duo(r, Side::Right);
        imps.push(name, Some(Side::Right), None, h, ctx.duo(base, Side::Right));
    }
    imps.finish("K_0 rings")
}
