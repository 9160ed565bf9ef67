use num_traits::{One, Zero};

use super::{Args, IdentityEntry, Param, Value};
use crate::error::Result;
use crate::exactmath::{
    choose, factorial, gandhi_polynomial, genocchi, rising, seki_polynomial, sign_pow, stirling1,
    stirling2, to_integer, Integer, Rational, UniPoly,
};
use crate::models::combinatorics::LexPermutations;
use crate::models::{
    callan_poly_enum, enum_barred, permutation_weight, tableau_poly, tableau_poly2,
};
use crate::polybern::{
    bhat_closed, callan_poly_closed, negative_index_callan, poly_bernoulli_b, poly_bernoulli_c,
    symmetrized,
};
use crate::recurrences::{bhat_rec, callan_poly_rec, conjecture_rec, tableau_poly_rec};

use Param::{J, K, M, N};

fn int(v: Integer) -> Value {
    Value::Int(v)
}

fn poly(p: UniPoly) -> Value {
    Value::Poly(p)
}

fn rat_of(v: usize) -> Rational {
    Rational::from_integer(Integer::from(v))
}

fn x_plus_one() -> UniPoly {
    UniPoly::from_ints(&[1, 1])
}

fn os_theorem(a: &Args) -> Result<Vec<Value>> {
    let lhs: UniPoly = (0..=a.m)
        .map(|l| {
            callan_poly_closed(a.n + l, a.k).scale_int(&(sign_pow(l) * stirling1(a.m + 1, l + 1)))
        })
        .sum();
    Ok(vec![poly(lhs), poly(UniPoly::zero())])
}

fn os_original(a: &Args) -> Result<Vec<Value>> {
    let mut lhs = Rational::zero();
    for l in 0..=a.m {
        let b = poly_bernoulli_b(a.n + l, a.k);
        for i in 0..=l {
            lhs += Rational::from_integer(sign_pow(i) * stirling1(a.m + 2, i + 1)) * &b;
        }
    }
    Ok(vec![Value::Rat(lhs), Value::Rat(Rational::zero())])
}

fn inner_stirling(a: &Args) -> Result<Vec<Value>> {
    let lhs: Integer = (0..=a.m)
        .map(|l| sign_pow(l) * stirling1(a.m + 1, l + 1) * stirling2(a.n + l + 1, a.j + 1))
        .sum();
    Ok(vec![int(lhs), int(Integer::zero())])
}

fn diag_sum(a: &Args) -> Result<Vec<Value>> {
    let lhs: UniPoly = (0..=a.n)
        .map(|l| callan_poly_closed(l, a.k).scale_int(&stirling1(a.n + 1, l + 1)))
        .sum();
    let inner: UniPoly = (0..=a.k)
        .map(|j| {
            rising(&x_plus_one(), j)
                .scale_int(&(stirling2(a.k + 1, j + 1) * choose(a.n + 1, j + 1)))
        })
        .sum();
    Ok(vec![poly(lhs), poly(inner.scale_int(&factorial(a.n)))])
}

fn lah(a: &Args) -> Result<Vec<Value>> {
    let lhs: Integer = (0..=a.n)
        .map(|l| stirling1(a.n + 1, l + 1) * stirling2(l + 1, a.j + 1))
        .sum();
    let rhs = Rational::from_integer(choose(a.n, a.j) * factorial(a.n + 1))
        / Rational::from_integer(factorial(a.j + 1));
    Ok(vec![
        Value::Rat(Rational::from_integer(lhs)),
        Value::Rat(rhs),
    ])
}

fn faulhaber(a: &Args) -> Result<Vec<Value>> {
    let lhs: Integer = (0..=a.k)
        .map(|j| factorial(j) * stirling2(a.k + 1, j + 1) * choose(a.n, j + 1))
        .sum();
    let rhs = seki_polynomial(a.k).eval(&rat_of(a.n));
    Ok(vec![
        Value::Rat(Rational::from_integer(lhs)),
        Value::Rat(rhs),
    ])
}

fn b_seki(a: &Args) -> Result<Vec<Value>> {
    let lhs: Rational = (0..=a.n)
        .map(|l| Rational::from_integer(stirling1(a.n + 1, l + 1)) * poly_bernoulli_b(l, a.k))
        .sum();
    let rhs = seki_polynomial(a.k).eval(&rat_of(a.n + 1)) * Rational::from_integer(factorial(a.n));
    Ok(vec![Value::Rat(lhs), Value::Rat(rhs)])
}

fn diag_sum_c(a: &Args) -> Result<Vec<Value>> {
    let lhs: Integer = (0..=a.n)
        .map(|l| stirling1(a.n + 1, l + 1) * bhat_closed(l, a.k, 1))
        .sum();
    let rhs = factorial(a.n) * num_traits::pow(Integer::from(a.n + 1), a.k + 1);
    Ok(vec![int(lhs), int(rhs)])
}

fn gandhi_diag(a: &Args) -> Result<Vec<Value>> {
    let mut lhs = Integer::zero();
    for j in 0..=a.n {
        lhs += sign_pow(j) * symmetrized(a.n - j, j, a.k)?;
    }
    let g = to_integer(
        &gandhi_polynomial(a.n).eval(&rat_of(a.k)),
        "Gandhi polynomial value",
    )?;
    let scaled = factorial(a.k) * g;
    if a.n.is_multiple_of(2) {
        Ok(vec![int(lhs), int(sign_pow(a.n / 2) * scaled)])
    } else {
        Ok(vec![int(lhs), int(Integer::zero()), int(scaled)])
    }
}

fn b_alternating(a: &Args) -> Result<Vec<Value>> {
    let lhs: Rational = (0..=a.n)
        .map(|j| Rational::from_integer(sign_pow(j)) * poly_bernoulli_b(a.n - j, j))
        .sum();
    let rhs = if a.n == 0 {
        Rational::one()
    } else {
        Rational::zero()
    };
    Ok(vec![Value::Rat(lhs), Value::Rat(rhs)])
}

fn genocchi_diag(a: &Args) -> Result<Vec<Value>> {
    let lhs: Rational = (0..=a.n)
        .map(|j| Rational::from_integer(sign_pow(j)) * poly_bernoulli_c(a.n - j, j + 1))
        .sum();
    let rhs = -Rational::from_integer(genocchi(a.n + 2)?);
    Ok(vec![Value::Rat(lhs), Value::Rat(rhs)])
}

fn symmetry(a: &Args) -> Result<Vec<Value>> {
    let side = |n, k| Value::Tuple(vec![int(bhat_rec(n, k, a.m)), poly(callan_poly_rec(n, k))]);
    Ok(vec![side(a.n, a.k), side(a.k, a.n)])
}

fn perm_weight(a: &Args) -> Result<Vec<Value>> {
    let mut histogram = vec![0u64; a.n];
    for p in LexPermutations::new(a.n) {
        histogram[permutation_weight(&p)?] += 1;
    }
    let lhs = UniPoly::from_coeffs(
        histogram
            .into_iter()
            .map(|c| Rational::from_integer(Integer::from(c)))
            .collect(),
    );
    Ok(vec![poly(lhs), poly(rising(&x_plus_one(), a.n - 1))])
}

fn model_triple(a: &Args) -> Result<Vec<Value>> {
    let closed = Value::Tuple(vec![
        int(bhat_closed(a.n, a.k, a.m)),
        poly(callan_poly_closed(a.n, a.k)),
        poly(callan_poly_closed(a.n, a.k)),
    ]);
    let recurrence = Value::Tuple(vec![
        int(bhat_rec(a.n, a.k, a.m)),
        poly(callan_poly_rec(a.n, a.k)),
        poly(tableau_poly_rec(a.n, a.k)),
    ]);
    let enumeration = Value::Tuple(vec![
        int(Integer::from(enum_barred(a.n, a.k, a.m).count())),
        poly(callan_poly_enum(a.n, a.k)),
        poly(tableau_poly(a.n, a.k)),
    ]);
    Ok(vec![closed, recurrence, enumeration])
}

fn neg_index(a: &Args) -> Result<Vec<Value>> {
    let rhs = (-seki_polynomial(a.k).reflect()).div_x()?;
    Ok(vec![poly(negative_index_callan(a.k)), poly(rhs)])
}

fn last_lem(a: &Args) -> Result<Vec<Value>> {
    let lhs: Integer = (a.j..=a.k)
        .map(|l| sign_pow(l + a.j) * stirling1(a.k + 2, l + 2) * stirling2(l + 1, a.j + 1))
        .sum();
    let rhs =
        Rational::from_integer(factorial(a.k + 1)) / Rational::from_integer(factorial(a.j + 1));
    Ok(vec![
        Value::Rat(Rational::from_integer(lhs)),
        Value::Rat(rhs),
    ])
}

fn conj_marginal(a: &Args) -> Result<Vec<Value>> {
    let t = conjecture_rec(a.n, a.k);
    let one = Rational::one();
    Ok(vec![
        poly(t.eval_y(&one)),
        poly(t.eval_x(&one)),
        poly(tableau_poly_rec(a.n, a.k)),
    ])
}

fn t_symmetry(a: &Args) -> Result<Vec<Value>> {
    Ok(vec![
        Value::BiPoly(tableau_poly2(a.n, a.k)),
        Value::BiPoly(tableau_poly2(a.k, a.n).swap()),
    ])
}

fn always(_: &Args) -> bool {
    true
}

static REGISTRY: [IdentityEntry; 18] = [
    IdentityEntry {
        name: "OS_THEOREM",
        statement: "sum_{l=0}^{m} (-1)^l st(m+1,l+1) C_{n+l}^k(x) = 0",
        params: &[N, K, M],
        caps: &[],
        domain: "m > k",
        constraint: |a| a.m > a.k,
        sides: os_theorem,
    },
    IdentityEntry {
        name: "OS_ORIGINAL",
        statement: "sum_{0<=i<=l<=m} (-1)^i st(m+2,i+1) B_{n+l}^(-k) = 0",
        params: &[N, K, M],
        caps: &[],
        domain: "m >= k > 0",
        constraint: |a| a.m >= a.k && a.k > 0,
        sides: os_original,
    },
    IdentityEntry {
        name: "INNER_STIRLING",
        statement: "sum_{l=0}^{m} (-1)^l st(m+1,l+1) S(n+l+1,j+1) = 0",
        params: &[N, M, J],
        caps: &[],
        domain: "j < m",
        constraint: |a| a.j < a.m,
        sides: inner_stirling,
    },
    IdentityEntry {
        name: "DIAG_SUM",
        statement: "sum_l st(n+1,l+1) C_l^k(x) = n! sum_j (x+1)^(j) S(k+1,j+1) binom(n+1,j+1)",
        params: &[N, K],
        caps: &[],
        domain: "all n, k",
        constraint: always,
        sides: diag_sum,
    },
    IdentityEntry {
        name: "LAH",
        statement: "sum_l st(n+1,l+1) S(l+1,j+1) = binom(n,j) (n+1)!/(j+1)!",
        params: &[N, J],
        caps: &[],
        domain: "all n, j",
        constraint: always,
        sides: lah,
    },
    IdentityEntry {
        name: "FAULHABER",
        statement: "sum_j j! S(k+1,j+1) binom(n,j+1) = S_k(n)",
        params: &[N, K],
        caps: &[],
        domain: "all n, k",
        constraint: always,
        sides: faulhaber,
    },
    IdentityEntry {
        name: "B_SEKI",
        statement: "sum_l st(n+1,l+1) B_l^(-k) = n! S_k(n+1)",
        params: &[N, K],
        caps: &[],
        domain: "all n, k",
        constraint: always,
        sides: b_seki,
    },
    IdentityEntry {
        name: "DIAG_SUM_C",
        statement: "sum_l st(n+1,l+1) Chat_l^k(1) = n! (n+1)^(k+1)",
        params: &[N, K],
        caps: &[],
        domain: "all n, k",
        constraint: always,
        sides: diag_sum_c,
    },
    IdentityEntry {
        name: "GANDHI_DIAG",
        statement: "sum_j (-1)^j Bsym_{n-j}^(-j)(k) = k! (-1)^(n/2) G_n(k) for even n; 0 = G_n(k) for odd n",
        params: &[N, K],
        caps: &[],
        domain: "all n, k",
        constraint: always,
        sides: gandhi_diag,
    },
    IdentityEntry {
        name: "B_ALTERNATING",
        statement: "sum_j (-1)^j B_{n-j}^(-j) = [n = 0]",
        params: &[N],
        caps: &[],
        domain: "all n",
        constraint: always,
        sides: b_alternating,
    },
    IdentityEntry {
        name: "GENOCCHI_DIAG",
        statement: "sum_j (-1)^j C_{n-j}^(-j-1) = -G_{n+2}",
        params: &[N],
        caps: &[],
        domain: "all n",
        constraint: always,
        sides: genocchi_diag,
    },
    IdentityEntry {
        name: "SYMMETRY",
        statement: "Chat_n^k(m) = Chat_k^n(m) and C_n^k(x) = C_k^n(x)",
        params: &[N, K, M],
        caps: &[],
        domain: "all n, k, m",
        constraint: always,
        sides: symmetry,
    },
    IdentityEntry {
        name: "PERM_WEIGHT",
        statement: "sum_{S_n} x^w(pi) = (x+1)^(n-1) rising",
        params: &[N],
        caps: &[(N, 9)],
        domain: "n >= 1",
        constraint: |a| a.n >= 1,
        sides: perm_weight,
    },
    IdentityEntry {
        name: "MODEL_TRIPLE",
        statement: "closed form = recurrence = enumeration for Chat_n^k(m), C_n^k(x), T_n^k(x)",
        params: &[N, K, M],
        caps: &[(N, 4), (K, 4), (M, 3)],
        domain: "all n, k, m",
        constraint: always,
        sides: model_triple,
    },
    IdentityEntry {
        name: "NEG_INDEX",
        statement: "C_k^{-1}(x) = -S_k(-x)/x",
        params: &[K],
        caps: &[],
        domain: "all k",
        constraint: always,
        sides: neg_index,
    },
    IdentityEntry {
        name: "LAST_LEM",
        statement: "sum_{l=j}^{k} (-1)^(l+j) st(k+2,l+2) S(l+1,j+1) = (k+1)!/(j+1)!",
        params: &[K, J],
        caps: &[],
        domain: "j <= k",
        constraint: |a| a.j <= a.k,
        sides: last_lem,
    },
    IdentityEntry {
        name: "CONJ_MARGINAL",
        statement: "t_n^k(x,1) = t_n^k(1,x) = T_n^k(x)",
        params: &[N, K],
        caps: &[],
        domain: "all n, k",
        constraint: always,
        sides: conj_marginal,
    },
    IdentityEntry {
        name: "T_SYMMETRY",
        statement: "T_n^k(x,y) = T_k^n(y,x)",
        params: &[N, K],
        caps: &[(N, 4), (K, 4)],
        domain: "all n, k",
        constraint: always,
        sides: t_symmetry,
    },
];

/// All registered identities, in a fixed order.
pub fn registry() -> &'static [IdentityEntry] {
    &REGISTRY
}
