use crate::error::{Error, Result};

/// Prime factorization as `(p, exponent)` pairs, increasing `p`.
fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn check(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::invalid("number-theoretic functions need n ≥ 1"))
    } else {
        Ok(())
    }
}

/// Möbius function.
pub fn mobius(n: u64) -> Result<i64> {
    check(n)?;
    let f = factorize(n);
    if f.iter().any(|(_, e)| *e > 1) {
        return Ok(0);
    }
    Ok(if f.len() % 2 == 0 { 1 } else { -1 })
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> Result<u64> {
    check(n)?;
    Ok(factorize(n)
        .iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

/// Divisors in increasing order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    check(n)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// `(μ(n), φ(n), divisors(n))`.
pub fn number_theory(n: u64) -> Result<(i64, u64, Vec<u64>)> {
    Ok((mobius(n)?, euler_phi(n)?, divisors(n)?))
}
