use fsdist_core::dist::{biproduct_merge, biproduct_split, from_scalar, to_scalar};
use fsdist_core::line::{
    affine_push, center_of_gravity, convolve, convolve_power, derivative, expectation,
    expectation_as_mu, fn_derivative, homothety, interval, leibniz_residual, primitive, translate,
    AffineMap, Partial,
};
use fsdist_core::pairing::{
    check_frobenius, check_switch, density, eval_at_eta, fn_action, pair, semantics,
};
use fsdist_core::probability::{
    condition, is_independent, is_probability, joint, marginals, normalize, rv_sum, ProbDist,
};
use fsdist_core::quantities::UnitTagged;
use fsdist_core::strength::{
    check_1linear, check_2linear, check_bilinear, check_linear, cotensor_lambda, extend_1lin,
    extend_2lin, extend_bilin, extend_bilin_staged, lambda, t1, t2, tensor, tensor_tilde,
};
use fsdist_core::{Bool, Dist, Error, FiniteSpace, FunTable, Module, Rational, Tagged};

use super::gen::{Gen, GenScalar};

pub type Outcome = Result<(), String>;

pub struct Law {
    pub name: &'static str,
    pub anchor: &'static str,
    pub check: fn(&mut Gen) -> Outcome,
}

macro_rules! expect {
    ($cond:expr, $($input:ident),+ $(,)?) => {
        if !$cond {
            let mut s = String::new();
            $( s.push_str(&format!("{}={:?}; ", stringify!($input), $input)); )+
            return Err(s.trim_end().to_owned());
        }
    };
}

type D<S = Rational> = Dist<u8, S>;
type Line = Dist<Rational>;

fn kernel<S: GenScalar>(g: &mut Gen) -> FunTable<u8, D<S>> {
    let space = g.space().clone();
    FunTable::tabulate(&space, |_| g.dist::<S>())
}

fn map_table(g: &mut Gen) -> FunTable<u8, u8> {
    let space = g.space().clone();
    FunTable::tabulate(&space, |_| g.point())
}

fn look<K: Ord, Y: Clone>(t: &FunTable<K, Y>, x: &K) -> Y {
    t.get(x).cloned().expect("tables cover the space")
}

fn pair_kernel(g: &mut Gen) -> FunTable<(u8, u8), D> {
    let space = g.space().clone();
    let pairs = FiniteSpace::new(
        space
            .elements()
            .iter()
            .flat_map(|x| space.elements().iter().map(move |y| (*x, *y))),
    );
    FunTable::tabulate(&pairs, |_| g.dist())
}

fn nonzero_total(g: &mut Gen) -> D {
    loop {
        let p: D = g.dist();
        if !p.total().is_zero() {
            return p;
        }
    }
}

fn prob(g: &mut Gen) -> ProbDist<u8> {
    normalize(&nonzero_total(g)).expect("nonzero total")
}

fn nested_line(g: &mut Gen) -> Dist<Line> {
    let k = g.index(g.config().max_support) + 1;
    let items: Vec<(Line, Rational)> = (0..k).map(|_| (g.line_dist(), g.coefficient())).collect();
    Dist::from_weights(items)
}

/// The scalar action `r·P`, routed through the tensor with `T(1)`.
fn act<X: Ord + Clone>(r: &Rational, p: &Dist<X>) -> Dist<X> {
    tensor(&from_scalar(r.clone()), p).pushforward(|((), x)| x.clone())
}

// Monad and functor laws, generic in the scalar rig.

fn left_unit<S: GenScalar>(g: &mut Gen) -> Outcome {
    let k = kernel::<S>(g);
    let x = g.point();
    let lhs = Dist::<u8, S>::dirac(x).bind(|y| look(&k, y));
    let rhs = look(&k, &x);
    expect!(lhs == rhs, x, k);
    let flat = Dist::<D<S>, S>::dirac(rhs.clone()).flatten();
    expect!(flat == rhs, x, k);
    Ok(())
}

fn right_unit<S: GenScalar>(g: &mut Gen) -> Outcome {
    let p = g.dist::<S>();
    let back = p.pushforward(|x| Dist::<u8, S>::dirac(*x)).flatten();
    expect!(back == p, p);
    Ok(())
}

fn associativity<S: GenScalar>(g: &mut Gen) -> Outcome {
    let p = g.dist::<S>();
    let k = kernel::<S>(g);
    let h = kernel::<S>(g);
    let lhs = p.bind(|x| look(&k, x)).bind(|y| look(&h, y));
    let rhs = p.bind(|x| look(&k, x).bind(|y| look(&h, y)));
    expect!(lhs == rhs, p, k, h);
    let ppp = Dist::from_weights([(g.nested::<S>(), g.coefficient::<S>()), (g.nested::<S>(), g.coefficient::<S>())]);
    let a = ppp.flatten().flatten();
    let b = ppp.pushforward(|pp| pp.flatten()).flatten();
    expect!(a == b, ppp);
    Ok(())
}

fn functor<S: GenScalar>(g: &mut Gen) -> Outcome {
    let p = g.dist::<S>();
    let f = map_table(g);
    let h = map_table(g);
    expect!(p.pushforward(|x| *x) == p, p);
    let lhs = p.pushforward(|x| look(&f, x)).pushforward(|y| look(&h, y));
    let rhs = p.pushforward(|x| look(&h, &look(&f, x)));
    expect!(lhs == rhs, p, f, h);
    Ok(())
}

fn naturality(g: &mut Gen) -> Outcome {
    let f = map_table(g);
    let x = g.point();
    let pp = g.nested::<Rational>();
    expect!(D::<Rational>::dirac(x).pushforward(|y| look(&f, y)) == D::<Rational>::dirac(look(&f, &x)), x, f);
    let lhs = pp.flatten().pushforward(|y| look(&f, y));
    let rhs = pp.pushforward(|p| p.pushforward(|y| look(&f, y))).flatten();
    expect!(lhs == rhs, pp, f);
    Ok(())
}

fn fubini<S: GenScalar>(g: &mut Gen) -> Outcome {
    let p = g.dist::<S>();
    let q = g.dist::<S>();
    expect!(tensor(&p, &q) == tensor_tilde(&p, &q), p, q);
    Ok(())
}

/// `⊗` against the independently computed product measure.
fn tensor_product_oracle(g: &mut Gen) -> Outcome {
    let p = g.dist::<Rational>();
    let q = g.dist::<Rational>();
    let mut cells = Vec::new();
    for (x, a) in &p {
        for (y, b) in &q {
            cells.push(((*x, *y), a * b));
        }
    }
    let oracle = Dist::from_weights(cells);
    expect!(tensor(&p, &q) == oracle, p, q);
    Ok(())
}

// Strengths and extensions.

fn strength_unit(g: &mut Gen) -> Outcome {
    let (x, y) = (g.point(), g.point());
    let p = g.dist::<Rational>();
    expect!(t2(&x, &D::<Rational>::dirac(y)) == Dist::dirac((x, y)), x, y);
    expect!(t1(&D::<Rational>::dirac(x), &y) == Dist::dirac((x, y)), x, y);
    expect!(t2(&(), &p).pushforward(|((), y)| *y) == p, p);
    expect!(t1(&p, &()).pushforward(|(x, ())| *x) == p, p);
    Ok(())
}

fn pentagon_t2(g: &mut Gen) -> Outcome {
    let x = g.point();
    let qq = g.nested::<Rational>();
    let res = check_2linear(|x: &u8, q: &D| t2(x, q), [(x, qq.clone())]);
    expect!(res.holds(), x, qq);
    Ok(())
}

fn pentagon_t1(g: &mut Gen) -> Outcome {
    let y = g.point();
    let pp = g.nested::<Rational>();
    let res = check_1linear(|p: &D, y: &u8| t1(p, y), [(pp.clone(), y)]);
    expect!(res.holds(), pp, y);
    Ok(())
}

fn extension_2lin(g: &mut Gen) -> Outcome {
    let f = pair_kernel(g);
    let x = g.point();
    let y = g.point();
    let q = g.dist::<Rational>();
    let qq = g.nested::<Rational>();
    let fbar = extend_2lin(|x: &u8, y: &u8| look(&f, &(*x, *y)));
    expect!(fbar(&x, &D::<Rational>::dirac(y)) == look(&f, &(x, y)), x, y, f);
    let oracle = Module::combine(q.iter().map(|(y, w)| (w.clone(), look(&f, &(x, *y)))));
    expect!(fbar(&x, &q) == oracle, x, q, f);
    expect!(check_2linear(&fbar, [(x, qq.clone())]).holds(), x, qq, f);
    Ok(())
}

fn extension_1lin(g: &mut Gen) -> Outcome {
    let f = pair_kernel(g);
    let x = g.point();
    let y = g.point();
    let p = g.dist::<Rational>();
    let pp = g.nested::<Rational>();
    let fbar = extend_1lin(|x: &u8, y: &u8| look(&f, &(*x, *y)));
    expect!(fbar(&D::<Rational>::dirac(x), &y) == look(&f, &(x, y)), x, y, f);
    let oracle = Module::combine(p.iter().map(|(x, w)| (w.clone(), look(&f, &(*x, y)))));
    expect!(fbar(&p, &y) == oracle, p, y, f);
    expect!(check_1linear(&fbar, [(pp.clone(), y)]).holds(), pp, y, f);
    Ok(())
}

fn tensor_bilinear(g: &mut Gen) -> Outcome {
    let pp = g.nested::<Rational>();
    let qq = g.nested::<Rational>();
    let res = check_bilinear(|p: &D, q: &D| tensor(p, q), [(pp.clone(), qq.clone())]);
    expect!(res.holds(), pp, qq);
    Ok(())
}

fn bilinear_extension(g: &mut Gen) -> Outcome {
    let f = pair_kernel(g);
    let (x, y) = (g.point(), g.point());
    let p = g.dist::<Rational>();
    let q = g.dist::<Rational>();
    let pp = g.nested::<Rational>();
    let qq = g.nested::<Rational>();
    let base = |x: &u8, y: &u8| look(&f, &(*x, *y));
    let fbar = extend_bilin(base);
    let staged = extend_bilin_staged(base);
    expect!(fbar(&D::<Rational>::dirac(x), &D::<Rational>::dirac(y)) == look(&f, &(x, y)), x, y, f);
    expect!(fbar(&p, &q) == staged(&p, &q), p, q, f);
    expect!(check_bilinear(&fbar, [(pp.clone(), qq.clone())]).holds(), pp, qq, f);
    Ok(())
}

fn linear_closure(g: &mut Gen) -> Outcome {
    let f = map_table(g);
    let k = kernel::<Rational>(g);
    let c: Rational = g.coefficient();
    let pp = g.nested::<Rational>();
    let push = |p: &D| p.pushforward(|x| look(&f, x));
    let bind = |p: &D| p.bind(|x| look(&k, x));
    let mixed = |p: &D| push(p).plus(&bind(p).scaled(&c));
    expect!(check_linear(push, [pp.clone()]).holds(), pp, f);
    expect!(check_linear(bind, [pp.clone()]).holds(), pp, k);
    expect!(check_linear(mixed, [pp.clone()]).holds(), pp, f, k, c);
    Ok(())
}

fn pairing_bilinear(g: &mut Gen) -> Outcome {
    let pp = g.nested::<Rational>();
    let phi = g.fun_table::<Rational>();
    let tables: Vec<(FunTable<u8, Rational>, Rational)> =
        (0..3).map(|_| (g.fun_table(), g.coefficient())).collect();
    let mix: Dist<FunTable<u8, Rational>> = Dist::from_weights(tables);
    let p = pp.flatten();
    let first = check_linear(|p: &D| pair::<_, _, Rational, _>(p, &phi).expect("total"), [pp.clone()]);
    expect!(first.holds(), pp, phi);
    let space = g.space().clone();
    let pointwise = lambda(&mix, &space).expect("tables cover the space").map_values(|d| d.extend(|v: &Rational| v.clone()));
    let lhs: Rational = pair(&p, &pointwise).expect("total");
    let rhs: Rational = mix.extend(|phi| pair::<_, _, Rational, _>(&p, phi).expect("total"));
    expect!(lhs == rhs, p, mix);
    Ok(())
}

fn tensor_symmetric(g: &mut Gen) -> Outcome {
    let p = g.dist::<Rational>();
    let q = g.dist::<Rational>();
    let swapped = tensor(&p, &q).pushforward(|(x, y)| (*y, *x));
    expect!(tensor(&q, &p) == swapped, p, q);
    Ok(())
}

fn tensor_associative(g: &mut Gen) -> Outcome {
    let p = g.dist::<Rational>();
    let q = g.dist::<Rational>();
    let r = g.dist::<Rational>();
    let left = tensor(&tensor(&p, &q), &r).pushforward(|((x, y), z)| (*x, (*y, *z)));
    expect!(left == tensor(&p, &tensor(&q, &r)), p, q, r);
    let unit = tensor(&D::<Rational>::dirac(0), &p).pushforward(|(_, y)| *y);
    expect!(unit == p, p);
    Ok(())
}

// Totals, pairing and the action of functions.

fn total_of_tensor(g: &mut Gen) -> Outcome {
    let p = g.dist::<Rational>();
    let q = g.dist::<Rational>();
    expect!(tensor(&p, &q).total() == p.total() * q.total(), p, q);
    Ok(())
}

fn total_is_pairing(g: &mut Gen) -> Outcome {
    let p = g.dist::<Rational>();
    expect!(pair(&p, &|_: &u8| Rational::one()) == Ok(p.total()), p);
    let bang = to_scalar(&p.pushforward(|_| ()));
    expect!(bang == p.total(), p);
    Ok(())
}

fn pairing_dirac(g: &mut Gen) -> Outcome {
    let x = g.point();
    let phi = g.fun_table::<Rational>();
    expect!(pair(&D::<Rational>::dirac(x), &phi) == Ok(look(&phi, &x)), x, phi);
    let vector = kernel::<Rational>(g);
    expect!(pair(&D::<Rational>::dirac(x), &vector) == Ok(look(&vector, &x)), x, vector);
    Ok(())
}

fn pairing_extranatural(g: &mut Gen) -> Outcome {
    let p = g.dist::<Rational>();
    let f = map_table(g);
    let phi = g.fun_table::<Rational>();
    let pulled = |x: &u8| look(&phi, &look(&f, x));
    let lhs: Result<Rational, _> = pair(&p.pushforward(|x| look(&f, x)), &phi);
    expect!(lhs == pair(&p, &pulled), p, f, phi);
    Ok(())
}

fn pairing_is_summation(g: &mut Gen) -> Outcome {
    let p = g.dist::<Rational>();
    let phi = g.fun_table::<Rational>();
    let oracle = p.iter().fold(Rational::zero(), |acc, (x, w)| acc + w * &look(&phi, x));
    expect!(pair(&p, &phi) == Ok(oracle), p, phi);
    Ok(())
}

fn linear_equivariance(g: &mut Gen) -> Outcome {
    let r: Rational = g.value();
    let p = g.dist::<Rational>();
    let f = map_table(g);
    let pp = g.nested::<Rational>();
    let line = g.line_dist();
    let step = g.step();
    expect!(act(&r, &p) == p.scale(&r), r, p);
    let push = |p: &D| p.pushforward(|x| look(&f, x));
    expect!(push(&act(&r, &p)) == act(&r, &push(&p)), r, p, f);
    expect!(act(&r, &pp).flatten() == act(&r, &pp.flatten()), r, pp);
    expect!(derivative(&act(&r, &line), &step) == act(&r, &derivative(&line, &step)), r, line, step);
    Ok(())
}

fn switch(g: &mut Gen) -> Outcome {
    let p = g.dist::<Rational>();
    let phi = g.fun_table::<Rational>();
    let psi = g.fun_table::<Rational>();
    let vec_psi = kernel::<Rational>(g);
    expect!(check_switch(&p, &phi, &psi) == Ok(true), p, phi, psi);
    expect!(check_switch(&p, &phi, &vec_psi) == Ok(true), p, phi, vec_psi);
    Ok(())
}

fn action_total(g: &mut Gen) -> Outcome {
    let p = g.dist::<Rational>();
    let phi = g.fun_table::<Rational>();
    let acted = fn_action(&p, &phi).map_err(|e| e.to_string())?;
    expect!(Ok(acted.total()) == pair(&p, &phi), p, phi);
    let oracle = Dist::from_weights(p.iter().map(|(x, w)| (*x, w * &look(&phi, x))));
    expect!(acted == oracle, p, phi);
    Ok(())
}

fn action_unit_assoc(g: &mut Gen) -> Outcome {
    let p = g.dist::<Rational>();
    let phi = g.fun_table::<Rational>();
    let psi = g.fun_table::<Rational>();
    expect!(fn_action(&p, &|_: &u8| Rational::one()) == Ok(p.clone()), p);
    let both = |x: &u8| look(&phi, x) * look(&psi, x);
    let stepwise = fn_action(&p, &phi).and_then(|q| fn_action(&q, &psi));
    expect!(stepwise == fn_action(&p, &both), p, phi, psi);
    Ok(())
}

fn frobenius(g: &mut Gen) -> Outcome {
    let p = g.dist::<Rational>();
    let f = map_table(g);
    let phi = g.fun_table::<Rational>();
    expect!(check_frobenius(|x: &u8| look(&f, x), &p, &phi) == Ok(true), p, f, phi);
    Ok(())
}

fn enough_test_functions(g: &mut Gen) -> Outcome {
    let p = g.dist::<Rational>();
    expect!(eval_at_eta(&semantics(&p)) == p, p);
    Ok(())
}

fn cotensor_strength(g: &mut Gen) -> Outcome {
    let tables: Vec<(FunTable<u8, u8>, Rational)> =
        (0..3).map(|_| (map_table(g), g.coefficient())).collect();
    let mix: Dist<FunTable<u8, u8>> = Dist::from_weights(tables);
    let x = g.point();
    let oracle = Dist::from_weights(mix.iter().map(|(f, w)| (look(f, &x), w.clone())));
    let got = cotensor_lambda(&mix, &x).map_err(|e| e.to_string())?;
    expect!(got == oracle, mix, x);
    let f = map_table(g);
    let space = g.space().clone();
    let eta = lambda(&Dist::<_, Rational>::dirac(f.clone()), &space).map_err(|e| e.to_string())?;
    expect!(eta == f.map_values(|y| Dist::dirac(*y)), f);
    Ok(())
}

fn density_round_trip(g: &mut Gen) -> Outcome {
    let p = g.dist::<Rational>();
    let phi = g.fun_table::<Rational>();
    let q = fn_action(&p, &phi).map_err(|e| e.to_string())?;
    let d = density(&q, &p).map_err(|e| e.to_string())?;
    expect!(fn_action(&p, &d) == Ok(q), p, phi);
    let outside: D = Dist::dirac(g.config().space_size as u8);
    expect!(density(&outside, &p) == Err(Error::NoDensity), p);
    Ok(())
}

// Moments on the line.

fn expectation_mu(g: &mut Gen) -> Outcome {
    let p = g.line_dist();
    expect!(expectation_as_mu(&p) == expectation(&p), p);
    let x = g.line_point();
    expect!(expectation(&Dist::dirac(x.clone())) == x, x);
    Ok(())
}

fn expectation_convolution(g: &mut Gen) -> Outcome {
    let p = g.line_dist();
    let q = g.line_dist();
    let lhs = expectation(&convolve(&p, &q));
    let rhs = expectation(&p) * q.total() + p.total() * expectation(&q);
    expect!(lhs == rhs, p, q);
    Ok(())
}

fn convolution_oracle(g: &mut Gen) -> Outcome {
    let p = g.line_dist();
    let q = g.line_dist();
    let mut cells = Vec::new();
    for (x, a) in &p {
        for (y, b) in &q {
            cells.push((x + y, a * b));
        }
    }
    expect!(convolve(&p, &q) == Dist::from_weights(cells), p, q);
    Ok(())
}

fn homothety_law(g: &mut Gen) -> Outcome {
    let p = g.line_dist();
    let b: Rational = g.value();
    expect!(expectation(&homothety(&p, &b)) == b.clone() * expectation(&p), p, b);
    Ok(())
}

fn translation_laws(g: &mut Gen) -> Outcome {
    let p = g.line_dist();
    let a = g.line_point();
    let moved = translate(&p, &a);
    expect!(moved == convolve(&p, &Dist::dirac(a.clone())), p, a);
    expect!(expectation(&moved) == expectation(&p) + p.total() * a.clone(), p, a);
    Ok(())
}

fn affine_expectation(g: &mut Gen) -> Outcome {
    let raw = g.line_dist();
    let Ok(p) = normalize(&raw) else {
        return Ok(());
    };
    let f = AffineMap::new(g.value(), g.line_point());
    expect!(expectation(&affine_push(&p, &f)) == f.apply(&expectation(&p)), p, f);
    Ok(())
}

fn cg_equivariance(g: &mut Gen) -> Outcome {
    let p = g.line_dist();
    let f = AffineMap::new(g.value(), g.line_point());
    match center_of_gravity(&p) {
        Ok(cg) => expect!(center_of_gravity(&affine_push(&p, &f)) == Ok(f.apply(&cg)), p, f),
        Err(e) => expect!(e == Error::ZeroTotal && p.total().is_zero(), p),
    }
    Ok(())
}

// Probability.

fn conditioning(g: &mut Gen) -> Outcome {
    let p = prob(g);
    let e = g.event();
    let psi = g.fun_table::<Rational>();
    let mass: Rational = pair(&p, &e).map_err(|e| e.to_string())?;
    match condition(&p, &e) {
        Ok(c) => {
            expect!(is_probability(&c), p, e);
            let both = |x: &u8| look(e.table(), x) * look(&psi, x);
            let expected = pair(&p, &both).map_err(|e| e.to_string())? * mass.recip().expect("nonzero");
            expect!(pair(&c, &psi) == Ok(expected), p, e, psi);
        }
        Err(err) => expect!(err == Error::NullEvent && mass.is_zero(), p, e),
    }
    Ok(())
}

fn marginals_of_product(g: &mut Gen) -> Outcome {
    let p = prob(g);
    let q = prob(g);
    let j = joint(&p, &q);
    expect!(is_probability(&j), p, q);
    expect!(marginals(&j) == (p.as_dist().clone(), q.as_dist().clone()), p, q);
    expect!(is_independent(&j), p, q);
    Ok(())
}

fn expectation_of_sum(g: &mut Gen) -> Outcome {
    let k = g.index(g.config().max_support) + 1;
    let cells: Vec<((Rational, Rational), Rational)> =
        (0..k).map(|_| ((g.line_point(), g.line_point()), g.coefficient())).collect();
    let raw = Dist::from_weights(cells);
    let j = normalize(&raw).map(ProbDist::into_dist).unwrap_or(raw);
    let (a, b) = marginals(&j);
    expect!(expectation(&rv_sum(&j)) == expectation(&a) + expectation(&b), j);
    Ok(())
}

fn probability_scaling(g: &mut Gen) -> Outcome {
    let p = prob(g);
    let c: Rational = g.coefficient();
    expect!(is_probability(&p.scale(&c)) == (c == Rational::one()), p, c);
    Ok(())
}

// Difference calculus.

fn derivative_linear(g: &mut Gen) -> Outcome {
    let step = g.step();
    let pp = nested_line(g);
    expect!(check_linear(|p: &Line| derivative(p, &step), [pp.clone()]).holds(), pp, step);
    let (p, q) = (g.line_dist(), g.line_dist());
    let (a, b): (Rational, Rational) = (g.value(), g.value());
    let lhs = derivative(&p.scale(&a).add(&q.scale(&b)), &step);
    let rhs = derivative(&p, &step).scale(&a).add(&derivative(&q, &step).scale(&b));
    expect!(lhs == rhs, p, q, a, b, step);
    Ok(())
}

fn derivative_total(g: &mut Gen) -> Outcome {
    let p = g.line_dist();
    let step = g.step();
    let dp = derivative(&p, &step);
    expect!(dp.total().is_zero(), p, step);
    expect!(expectation(&dp) == p.total(), p, step);
    Ok(())
}

fn derivative_oracle(g: &mut Gen) -> Outcome {
    let p = g.line_dist();
    let step = g.step();
    let d = step.get();
    let cells = p.iter().flat_map(|(x, w)| {
        let q = w.checked_div(d).expect("nonzero step");
        [(x + d, q.clone()), (x.clone(), -q)]
    });
    expect!(derivative(&p, &step) == Dist::from_weights(cells), p, step);
    Ok(())
}

fn translation_invariance(g: &mut Gen) -> Outcome {
    let p = g.line_dist();
    let a = g.line_point();
    let step = g.step();
    let lhs = derivative(&translate(&p, &a), &step);
    expect!(lhs == translate(&derivative(&p, &step), &a), p, a, step);
    Ok(())
}

fn derivative_switch(g: &mut Gen) -> Outcome {
    let p = g.line_dist();
    let phi = g.poly();
    let step = g.step();
    let f = |x: &Rational| phi.eval(x);
    let lhs: Result<Rational, _> = pair(&derivative(&p, &step), &f);
    let rhs = pair(&p, &Partial(fn_derivative(&f, &step)));
    expect!(lhs == rhs, p, phi, step);
    Ok(())
}

fn derivative_convolution(g: &mut Gen) -> Outcome {
    let p = g.line_dist();
    let q = g.line_dist();
    let step = g.step();
    let whole = derivative(&convolve(&p, &q), &step);
    expect!(whole == convolve(&derivative(&p, &step), &q), p, q, step);
    expect!(whole == convolve(&p, &derivative(&q, &step)), p, q, step);
    Ok(())
}

fn primitive_of_derivative(g: &mut Gen) -> Outcome {
    let p = g.line_dist();
    let step = g.step();
    expect!(primitive(&derivative(&p, &step), &step) == Ok(p.clone()), p, step);
    Ok(())
}

/// `Σ c·(δ_{x+kd} − δ_x)`: every coset of `dℤ` carries total zero.
fn balanced(g: &mut Gen, d: &Rational) -> Line {
    let terms = g.index(g.config().max_support) + 1;
    let mut q = Dist::empty();
    for _ in 0..terms {
        let x = g.line_point();
        let k = g.index(7) as i64 - 3;
        let c: Rational = g.coefficient();
        let far = &x + &(Rational::from_integer(k) * d);
        q = q.add(&Dist::dirac(far).sub(&Dist::dirac(x)).scale(&c));
    }
    q
}

fn derivative_of_primitive(g: &mut Gen) -> Outcome {
    let step = g.step();
    let q = balanced(g, step.get());
    let prim = primitive(&q, &step).map_err(|e| format!("{e}: q={q:?}; step={step:?}"))?;
    expect!(derivative(&prim, &step) == q, q, step);
    let x = g.line_point();
    let lone = q.add(&Dist::dirac(x));
    expect!(primitive(&lone, &step) == Err(Error::NoPrimitive), lone, step);
    Ok(())
}

fn interval_laws(g: &mut Gen) -> Outcome {
    let a = g.line_point();
    let n = g.index(13) as i64 - 6;
    let step = g.step();
    let d = step.get().clone();
    let b = &a + &(Rational::from_integer(n) * &d);
    let i = interval(&a, &b, &step).map_err(|e| e.to_string())?;
    expect!(i.total() == &b - &a, a, b, step);
    let ends = Dist::dirac(b.clone()).sub(&Dist::dirac(a.clone()));
    expect!(derivative(&i, &step) == ends, a, b, step);
    let (range, sign) = if n >= 0 {
        (0..n, d.clone())
    } else {
        (n..0, -d.clone())
    };
    let comb = Dist::from_weights(range.map(|k| (&a + &(Rational::from_integer(k) * &d), sign.clone())));
    expect!(i == comb, a, b, step);
    Ok(())
}

/// Totals and expectations of convolution powers of an interval, against
/// the closed forms `(b−a)^k` and `k·(b−a)^{k−1}·E([a,b])`, with
/// `E([a,b]) = (b−a)·((a+b)/2 − d/2)`.
fn interval_power_moments(g: &mut Gen) -> Outcome {
    let a = g.line_point();
    let n = g.index(4) as i64 + 1;
    let step = g.step();
    let d = step.get().clone();
    let b = &a + &(Rational::from_integer(n) * &d);
    let k = g.index(4) as u32 + 1;
    let i = interval(&a, &b, &step).map_err(|e| e.to_string())?;
    let len = &b - &a;
    let half = Rational::new(1, 2);
    let e1 = len.clone() * ((&a + &b) * half.clone() - d.clone() * half);
    let power = convolve_power(&i, k);
    expect!(power.total() == len.pow(k), a, b, step, k);
    let expected = Rational::from_integer(k as i64) * len.pow(k - 1) * e1;
    expect!(expectation(&power) == expected, a, b, step, k);
    Ok(())
}

fn leibniz(g: &mut Gen) -> Outcome {
    let x = g.line_point();
    let c: Rational = g.coefficient();
    let phi = g.poly();
    let step = g.step();
    let d = step.get();
    let p = Dist::dirac(x.clone()).scale(&c);
    let jump = (phi.eval(&(&x + d)) - phi.eval(&x)).checked_div(d).expect("nonzero") * c.clone();
    let closed = Dist::dirac(&x + d).sub(&Dist::dirac(x.clone())).scale(&jump);
    let f = |y: &Rational| phi.eval(y);
    expect!(leibniz_residual(&p, &f, &step) == Ok(closed), x, c, phi, step);
    Ok(())
}

// Structure.

fn unit_determination(g: &mut Gen) -> Outcome {
    let u: Rational = g.coefficient();
    let p = g.dist::<Rational>();
    let q = g.dist::<Rational>();
    let c: Rational = g.value();
    let f = map_table(g);
    let by_unit = |p: &D| UnitTagged::new(u.clone(), p.clone()).expect("nonzero unit").to_pure();
    let at_one = by_unit(&D::<Rational>::dirac(0)).total();
    let rebuilt = |p: &D| UnitTagged::new(at_one.clone(), p.clone()).expect("nonzero unit").to_pure();
    expect!(by_unit(&p) == rebuilt(&p), u, p);
    expect!(by_unit(&p.add(&q)) == by_unit(&p).add(&by_unit(&q)), u, p, q);
    expect!(by_unit(&p.scale(&c)) == by_unit(&p).scale(&c), u, p, c);
    let push = |p: &D| p.pushforward(|x| look(&f, x));
    expect!(by_unit(&push(&p)) == push(&by_unit(&p)), u, p, f);
    let m = UnitTagged::new(u.clone(), p.clone()).expect("nonzero unit");
    let v: Rational = g.coefficient();
    expect!(m.rescale_unit(v.clone()).map(|m| m.to_pure()) == Ok(m.to_pure()), m, v);
    Ok(())
}

fn biproduct(g: &mut Gen) -> Outcome {
    let a = g.dist::<Rational>();
    let b = g.dist::<Rational>();
    let merged = biproduct_merge(&a, &b);
    expect!(biproduct_split(&merged) == (a.clone(), b.clone()), a, b);
    let mixed: Dist<Tagged<u8, u8>> = Dist::from_weights(
        g.dist::<Rational>()
            .iter()
            .map(|(x, w)| (if x % 2 == 0 { Tagged::L(*x) } else { Tagged::R(*x) }, w.clone())),
    );
    let (l, r) = biproduct_split(&mixed);
    expect!(biproduct_merge(&l, &r) == mixed, mixed);
    Ok(())
}

fn additivity(g: &mut Gen) -> Outcome {
    let k = kernel::<Rational>(g);
    let (p, q, r) = (g.dist::<Rational>(), g.dist::<Rational>(), g.dist::<Rational>());
    let lin = |p: &D| p.bind(|x| look(&k, x));
    expect!(lin(&p.add(&q)) == lin(&p).add(&lin(&q)), p, q, k);
    expect!(lin(&D::<Rational>::empty()).is_empty(), k);
    let left = tensor(&p.add(&q), &r);
    expect!(left == tensor(&p, &r).add(&tensor(&q, &r)), p, q, r);
    let right = tensor(&r, &p.add(&q));
    expect!(right == tensor(&r, &p).add(&tensor(&r, &q)), p, q, r);
    expect!(tensor(&D::<Rational>::empty(), &r).is_empty(), r);
    Ok(())
}

macro_rules! laws {
    ($($name:literal, $anchor:literal => $check:expr;)+) => {
        pub static LAWS: &[Law] = &[$(Law { name: $name, anchor: $anchor, check: $check }),+];
    };
}

laws! {
    "monad_left_unit", "μ ∘ ηT = id: binding a point mass applies the kernel" => left_unit::<Rational>;
    "monad_right_unit", "μ ∘ T(η) = id" => right_unit::<Rational>;
    "monad_associativity", "μ ∘ μT = μ ∘ T(μ)" => associativity::<Rational>;
    "functor_laws", "T(id) = id and T(h ∘ f) = T(h) ∘ T(f)" => functor::<Rational>;
    "naturality", "η and μ are natural" => naturality;
    "strength_unit", "t″(x, η(y)) = η(x, y) and the unit constraints of t″, t′" => strength_unit;
    "pentagon_t2", "t″ ∘ (X × μ) = μ ∘ T(t″) ∘ t″" => pentagon_t2;
    "pentagon_t1", "t′ ∘ (μ × Y) = μ ∘ T(t′) ∘ t′" => pentagon_t1;
    "extension_2lin", "a map X × Y → B extends uniquely 2-linearly over X × η" => extension_2lin;
    "extension_1lin", "a map X × Y → B extends uniquely 1-linearly over η × Y" => extension_1lin;
    "fubini", "Fubini's Theorem holds" => fubini::<Rational>;
    "tensor_product_oracle", "P ⊗ Q assigns P(x)·Q(y) to (x, y)" => tensor_product_oracle;
    "tensor_bilinear", "⊗ is bilinear" => tensor_bilinear;
    "bilinear_extension", "bilinear extension through ⊗ agrees with the staged extension" => bilinear_extension;
    "linear_closure", "sums and scalar multiples of linear maps are linear" => linear_closure;
    "pairing_bilinear", "the pairing is linear in the distribution and in the test function" => pairing_bilinear;
    "tensor_symmetric", "⊗ commutes with the symmetry" => tensor_symmetric;
    "tensor_associative", "⊗ is associative and unital" => tensor_associative;
    "total_of_tensor", "tot(P ⊗ Q) = tot(P)·tot(Q)" => total_of_tensor;
    "total_is_pairing", "tot(P) = ⟨P, 1⟩" => total_is_pairing;
    "pairing_dirac", "⟨η(x), φ⟩ = φ(x)" => pairing_dirac;
    "pairing_extranatural", "⟨f_*P, φ⟩ = ⟨P, φ ∘ f⟩" => pairing_extranatural;
    "pairing_summation", "⟨P, φ⟩ = Σ P(x)·φ(x)" => pairing_is_summation;
    "linear_equivariance", "linear maps commute with the scalar action" => linear_equivariance;
    "switch", "⟨P ⊢ φ, ψ⟩ = ⟨P, φ·ψ⟩" => switch;
    "action_total", "tot(P ⊢ φ) = ⟨P, φ⟩" => action_total;
    "action_unit_assoc", "P ⊢ 1 = P and (P ⊢ φ) ⊢ ψ = P ⊢ (φ·ψ)" => action_unit_assoc;
    "frobenius", "f_*(P) ⊢ φ = f_*(P ⊢ f*φ)" => frobenius;
    "enough_test_functions", "evaluating τ(P) at η recovers P" => enough_test_functions;
    "cotensor_strength", "λ evaluates pointwise and sends η(f) to η ∘ f" => cotensor_strength;
    "density_round_trip", "P ⊢ (Q / P) = Q" => density_round_trip;
    "expectation_mu", "E = μ at the one-point space, and E(η(x)) = x" => expectation_mu;
    "expectation_convolution", "E(P ∗ Q) = E(P)·tot(Q) + tot(P)·E(Q)" => expectation_convolution;
    "convolution_oracle", "P ∗ Q assigns Σ P(x)·Q(y) over x + y = z" => convolution_oracle;
    "homothety", "E(h_*P) = h(E(P)) for h(x) = b·x" => homothety_law;
    "translation", "α_*P = P ∗ η(a) and E(α_*P) = E(P) + tot(P)·a" => translation_laws;
    "affine_expectation", "E(f_*P) = f(E(P)) for affine f and total 1" => affine_expectation;
    "cg_equivariance", "cg(f_*P) = f(cg(P)) for affine f" => cg_equivariance;
    "conditioning", "⟨P∣φ, ψ⟩ = ⟨P, φ·ψ⟩ / ⟨P, φ⟩" => conditioning;
    "marginals_of_product", "the marginals of P ⊗ Q are P and Q" => marginals_of_product;
    "expectation_of_sum", "E(X + Y) = E(X) + E(Y) for any joint" => expectation_of_sum;
    "probability_scaling", "scaling by c ≠ 1 leaves the total-one distributions" => probability_scaling;
    "derivative_linear", "differentiation is linear" => derivative_linear;
    "derivative_total", "tot(P′) = 0 and E(P′) = tot(P)" => derivative_total;
    "derivative_oracle", "P′ = Σ P(x)·(δ_{x+d} − δ_x)/d" => derivative_oracle;
    "translation_invariance", "(α_*P)′ = α_*(P′)" => translation_invariance;
    "derivative_switch", "⟨P′, φ⟩ = ⟨P, φ′⟩" => derivative_switch;
    "derivative_convolution", "(P ∗ Q)′ = P′ ∗ Q = P ∗ Q′" => derivative_convolution;
    "primitive_of_derivative", "the primitive of P′ is P" => primitive_of_derivative;
    "derivative_of_primitive", "the derivative of a primitive of Q is Q" => derivative_of_primitive;
    "interval", "[a, b] has total b − a and derivative δ_b − δ_a" => interval_laws;
    "interval_power_moments", "tot([a,b]^{∗k}) = (b−a)^k and E([a,b]^{∗k}) = k·(b−a)^{k−1}·E([a,b])" => interval_power_moments;
    "leibniz_residual", "(P′ ⊢ φ − P ⊢ φ′) − (P ⊢ φ)′ = (φ(x+d) − φ(x))·(δ_{x+d} − δ_x)/d at P = δ_x" => leibniz;
    "unit_determination", "the value at 1 determines the unit isomorphism" => unit_determination;
    "biproduct", "T(A + B) ≅ T(A) × T(B)" => biproduct;
    "additivity", "linear and bilinear maps preserve sums and zero" => additivity;
    "bool_monad_left_unit", "μ ∘ ηT = id over the boolean rig" => left_unit::<Bool>;
    "bool_monad_right_unit", "μ ∘ T(η) = id over the boolean rig" => right_unit::<Bool>;
    "bool_monad_associativity", "μ ∘ μT = μ ∘ T(μ) over the boolean rig" => associativity::<Bool>;
    "bool_functor_laws", "functor laws over the boolean rig" => functor::<Bool>;
    "bool_fubini", "⊗ = ⊗̃ over the boolean rig" => fubini::<Bool>;
}

pub fn law_names() -> Vec<&'static str> {
    LAWS.iter().map(|l| l.name).collect()
}
