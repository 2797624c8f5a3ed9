#include "qasym/kernel.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <string>
#include <type_traits>
#include <utility>

namespace qasym {

namespace {

Real real_from_q(const mpq_class& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.mp(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real real_from_z(const mpz_class& z, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.mp(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

mpz_class factorial_z(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

std::mutex g_bernoulli_mutex;

// Write-once, append-only; deque keeps references to settled entries valid.
std::deque<mpq_class>& bernoulli_table() {
    static std::deque<mpq_class> table;
    return table;
}

}  // namespace

const mpq_class& bernoulli_number(long n) {
    if (n < 0) throw domain_error("Bernoulli index must be nonnegative");
    if (n > kBernoulliDegreeCap)
        throw domain_error("Bernoulli degree cap (" + std::to_string(kBernoulliDegreeCap) +
                           ") exceeded");
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    auto& tab = bernoulli_table();
    if (tab.empty()) tab.emplace_back(1);
    while (static_cast<long>(tab.size()) <= n) {
        long m = static_cast<long>(tab.size());
        if (m >= 3 && m % 2 == 1) {
            tab.emplace_back(0);
            continue;
        }
        // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
        mpq_class acc(0);
        mpz_class binom;
        for (long j = 0; j < m; ++j) {
            if (tab[j] == 0) continue;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + 1),
                         static_cast<unsigned long>(j));
            acc += mpq_class(binom) * tab[j];
        }
        tab.push_back(mpq_class(-acc / (m + 1)));
    }
    return tab[n];
}

mpq_class bernoulli_poly_exact(long n, const mpq_class& x) {
    if (n < 0) throw domain_error("Bernoulli index must be nonnegative");
    if (n > kBernoulliDegreeCap) throw domain_error("Bernoulli degree cap exceeded");
    // B_n(x) = sum_i C(n,i) B_i x^(n-i), Horner from i = 0.
    mpq_class acc = bernoulli_number(0);
    mpz_class binom;
    for (long i = 1; i <= n; ++i) {
        acc *= x;
        const mpq_class& b = bernoulli_number(i);
        if (b != 0) {
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n),
                         static_cast<unsigned long>(i));
            acc += mpq_class(binom) * b;
        }
    }
    return acc;
}

Real bernoulli_poly(long n, const Real& x, const PrecisionContext& ctx) {
    if (n < 0) throw domain_error("Bernoulli index must be nonnegative");
    if (n > kBernoulliDegreeCap)
        throw domain_error("Bernoulli degree cap (" + std::to_string(kBernoulliDegreeCap) +
                           ") exceeded");
    mpfr_prec_t p = std::max<mpfr_prec_t>(ctx.work_prec(), x.prec());
    // Exact-rational shortcuts at the x values where the expansions rely on
    // structural zeros of B_n.
    if (x.is_zero()) return real_from_q(bernoulli_number(n), p);
    if (x == 1) {
        if (n == 1) return real_from_q(mpq_class(1, 2), p);
        return real_from_q(bernoulli_number(n), p);
    }
    {
        mpq_class half(1, 2);
        if (mpfr_cmp_q(x.mp(), half.get_mpq_t()) == 0) {
            // B_n(1/2) = (2^(1-n) - 1) B_n
            mpq_class two_pow = n >= 1 ? mpq_class(1, mpz_class(1) << (n - 1)) : mpq_class(2);
            return real_from_q((two_pow - 1) * bernoulli_number(n), p);
        }
    }
    Real acc(1, p);
    mpz_class binom;
    for (long i = 1; i <= n; ++i) {
        acc = acc * x;
        const mpq_class& b = bernoulli_number(i);
        if (b != 0) {
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n),
                         static_cast<unsigned long>(i));
            acc += real_from_q(mpq_class(binom) * b, p);
        }
    }
    return acc;
}

Real harmonic(long m, const PrecisionContext& ctx) {
    if (m < 0) throw domain_error("harmonic index must be nonnegative");
    mpfr_prec_t p = ctx.work_prec();
    Real sum(p);
    for (long j = 1; j <= m; ++j) sum += Real(1, p) / j;
    return sum.round_to(ctx.precision_bits());
}

Real gamma(const Real& x, const PrecisionContext& ctx) {
    if (!(x > 0)) throw domain_error("gamma requires x > 0");
    Real xa = x;
    xa.round_to(ctx.work_prec());
    return gamma_mpfr(xa).round_to(ctx.precision_bits());
}

Real polygamma(long m, const Real& x, const PrecisionContext& ctx) {
    if (m < 0) throw domain_error("polygamma order must be nonnegative");
    if (!(x > 0)) throw domain_error("polygamma requires x > 0");
    mpfr_prec_t p = ctx.work_prec();
    Real xa = x;
    xa.round_to(p);
    if (m == 0) return digamma_mpfr(xa).round_to(ctx.precision_bits());
    // psi^(m)(x) = (-1)^(m+1) m! zeta(m+1, x)
    Real v = real_from_z(factorial_z(m), p) * hurwitz_zeta(Real(m + 1, p), xa, ctx);
    if (m % 2 == 0) v = -v;
    return v.round_to(ctx.precision_bits());
}

// ---------------------------------------------------------------------------
// Hurwitz / Riemann zeta
// ---------------------------------------------------------------------------

namespace {

Real mag_of(const Real& v) { return abs(v); }
Real mag_of(const Complex& v) { return abs(v); }

Real pow_of(const Real& base, const Real& e) { return pow(base, e); }
Complex pow_of(const Real& base, const Complex& e) { return pow(base, e); }

Real re_of(const Real& v) { return v; }
Real re_of(const Complex& v) { return v.re; }

long imag_bound(const Real&) { return 0; }
long imag_bound(const Complex& s) {
    Real a = ceil(abs(s.im));
    if (a > 1000000L) throw domain_error("zeta: |Im s| too large");
    return a.to_long();
}

// Euler-Maclaurin: sum_{j<N} (x+j)^(-s) + boundary terms + B_{2k} corrections.
// Caller guarantees s is neither 1 nor a nonpositive integer. N is restarted
// larger if the correction series fails to settle.
template <class S>
S hurwitz_zeta_em(const S& s, const Real& x, const PrecisionContext& ctx) {
    long bits = ctx.precision_bits();
    long n0 = std::max<long>((bits * 35 + 99) / 100, imag_bound(s) + 10);

    // Deeply negative Re s cancels catastrophically against the boundary
    // terms; scale the guard bits with the partial-sum magnitude.
    Real sigma = re_of(s);
    long extra = 32;
    if (sigma < 0) {
        double depth = -sigma.to_double() + 2.0;
        extra += static_cast<long>(depth * (std::log2(static_cast<double>(n0) + 2.0) + 1.0)) + 32;
        if (extra > 8192) throw convergence_error("zeta: Re s too negative for this scheme");
    }
    mpfr_prec_t p = bits + extra;
    Real target = Real::pow2(-static_cast<long>(p) + 4, p);

    for (int attempt = 0; attempt < 3; ++attempt) {
        long n = n0 << attempt;
        S sum(p);
        Real scale(p);  // running magnitude of partial sums, for the stop rule
        for (long j = 0; j < n; ++j) {
            sum += pow_of(x + j, -s);
            scale = max(scale, mag_of(sum));
        }
        Real w = x + n;
        sum += pow_of(w, Real(1, p) - s) / (s - Real(1, p));
        sum += pow_of(w, -s) / Real(2, p);
        scale = max(scale, mag_of(sum));

        S rising = s;                         // (s)_1
        S wpow = pow_of(w, -s - Real(1, p));  // w^(-s-1)
        Real w2 = w * w;
        Real prev_mag(p);
        bool have_prev = false;
        bool converged = false;
        for (long k = 1; 2 * k <= kBernoulliDegreeCap; ++k) {
            mpq_class coef = bernoulli_number(2 * k) / mpq_class(factorial_z(2 * k));
            S term = real_from_q(coef, p) * rising * wpow;
            Real m = mag_of(term);
            if (m.is_zero()) {  // rising factorial hit zero: expansion is exact
                converged = true;
                break;
            }
            if (have_prev && m >= prev_mag) break;  // corrections diverging: need larger N
            sum += term;
            scale = max(scale, mag_of(sum));
            if (m <= scale * target) {
                converged = true;
                break;
            }
            prev_mag = m;
            have_prev = true;
            rising = rising * (s + Real(2 * k - 1, p)) * (s + Real(2 * k, p));
            wpow = wpow / w2;
        }
        if (converged) return sum;
    }
    throw convergence_error("hurwitz zeta: Euler-Maclaurin corrections did not converge");
}

std::mutex g_zeta_memo_mutex;

std::string real_key(const Real& v) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%Ra", v.mp());
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

const Real& half_threshold() {
    static Real h = Real::pow2(-1, 64);
    return h;
}

}  // namespace

Real riemann_zeta_int(long n, const PrecisionContext& ctx) {
    if (n == 1) throw domain_error("zeta pole at s = 1");
    mpfr_prec_t p = ctx.work_prec();
    if (n <= 0) {
        // zeta(-m) = (-1)^m B_{m+1} / (m+1), exact; zero at negative even n.
        long m = -n;
        mpq_class v = bernoulli_number(m + 1) / (m + 1);
        if (m % 2 == 1) v = -v;
        return real_from_q(v, ctx.precision_bits());
    }
    if (n % 2 == 0) {
        // zeta(2k) = (-1)^(k+1) B_2k (2 pi)^2k / (2 (2k)!)
        long k = n / 2;
        Real v = real_from_q(bernoulli_number(n) / mpq_class(2 * factorial_z(n)), p) *
                 pow(2 * Real::pi(p), n);
        if (k % 2 == 0) v = -v;
        return v.round_to(ctx.precision_bits());
    }
    // odd n >= 3: Euler-Maclaurin, memoized per precision
    std::lock_guard<std::mutex> lock(g_zeta_memo_mutex);
    static std::map<std::pair<long, long>, Real> memo;
    auto key = std::make_pair(static_cast<long>(ctx.precision_bits()), n);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Real v = hurwitz_zeta_em(Real(n, p), Real(1, p), ctx).round_to(ctx.precision_bits());
    memo.insert({key, v});
    return v;
}

Real riemann_zeta(const Real& s, const PrecisionContext& ctx) {
    if (s == 1) throw domain_error("zeta pole at s = 1");
    if (s.is_integer()) return riemann_zeta_int(s.to_long(), ctx);
    std::lock_guard<std::mutex> lock(g_zeta_memo_mutex);
    static std::map<std::pair<long, std::string>, Real> memo;
    auto key = std::make_pair(static_cast<long>(ctx.precision_bits()), real_key(s));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    mpfr_prec_t p = ctx.work_prec();
    Real sa = s;
    sa.round_to(p);
    Real v(p);
    if (s > half_threshold()) {
        v = hurwitz_zeta_em(sa, Real(1, p), ctx);
    } else {
        // zeta(s) = 2 (2pi)^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)
        Real pi = Real::pi(p);
        Real zr = hurwitz_zeta_em(Real(1, p) - sa, Real(1, p), ctx);
        v = 2 * pow(2 * pi, sa - 1) * sin(pi * sa / 2) * gamma_mpfr(Real(1, p) - sa) * zr;
    }
    v.round_to(ctx.precision_bits());
    memo.insert({key, v});
    return v;
}

Complex riemann_zeta(const Complex& s, const PrecisionContext& ctx) {
    if (s.is_real()) return Complex(riemann_zeta(s.re, ctx));
    mpfr_prec_t p = ctx.work_prec();
    Complex sa = s;
    sa.round_to(p);
    Complex v(p);
    if (s.re > half_threshold()) {
        v = hurwitz_zeta_em(sa, Real(1, p), ctx);
    } else {
        Real pi = Real::pi(p);
        Complex one_minus = Real(1, p) - sa;
        Complex zr = hurwitz_zeta_em(one_minus, Real(1, p), ctx);
        Complex g = exp(log_gamma(one_minus, ctx));
        v = Real(2, p) * pow(2 * pi, sa - Real(1, p)) * sin(sa * (pi / 2)) * g * zr;
    }
    v.round_to(ctx.precision_bits());
    return v;
}

Real hurwitz_zeta(const Real& s, const Real& x, const PrecisionContext& ctx) {
    if (!(x > 0)) throw domain_error("hurwitz zeta requires x > 0");
    if (s == 1) throw domain_error("zeta pole at s = 1");
    if (s.is_integer() && s < 1) {
        // zeta(-m, x) = -B_{m+1}(x) / (m+1), exact and finite
        long m = -s.to_long();
        Real v = -bernoulli_poly(m + 1, x, ctx) / (m + 1);
        return v.round_to(ctx.precision_bits());
    }
    if (x == 1) return riemann_zeta(s, ctx);
    mpfr_prec_t p = ctx.work_prec();
    Real sa = s, xa = x;
    sa.round_to(p);
    xa.round_to(p);
    return hurwitz_zeta_em(sa, xa, ctx).round_to(ctx.precision_bits());
}

Complex hurwitz_zeta(const Complex& s, const Real& x, const PrecisionContext& ctx) {
    if (s.is_real()) return Complex(hurwitz_zeta(s.re, x, ctx));
    if (!(x > 0)) throw domain_error("hurwitz zeta requires x > 0");
    mpfr_prec_t p = ctx.work_prec();
    Complex sa = s;
    sa.round_to(p);
    Real xa = x;
    xa.round_to(p);
    Complex v = hurwitz_zeta_em(sa, xa, ctx);
    v.round_to(ctx.precision_bits());
    return v;
}

Real hurwitz_zeta_sderiv(long m, const Real& x, const PrecisionContext& ctx) {
    if (m < 1) throw domain_error("zeta s-derivative is implemented at s = 1 - m, m >= 1");
    if (!(x > 0)) throw domain_error("hurwitz zeta requires x > 0");
    // Central differences with one Richardson step at elevated precision:
    // h = 2^(-bits/3), run at bits + 2*(bits/3).
    long bits = ctx.precision_bits();
    long third = bits / 3;
    PrecisionContext up(bits + 2 * third, ctx.max_terms());
    mpfr_prec_t p = up.work_prec();
    Real s0(1 - m, p);
    Real h = Real::pow2(-third, p);
    Real xa = x;
    xa.round_to(p);
    auto central = [&](const Real& step) {
        Real fp = hurwitz_zeta(s0 + step, xa, up);
        Real fm = hurwitz_zeta(s0 - step, xa, up);
        return (fp - fm) / (2 * step);
    };
    Real d1 = central(h);
    Real d2 = central(h / Real(2, p));
    Real v = (4 * d2 - d1) / 3;
    return v.round_to(ctx.precision_bits());
}

// ---------------------------------------------------------------------------
// log Gamma on Re z > 0, via shift + Stirling
// ---------------------------------------------------------------------------

Complex log_gamma(const Complex& z, const PrecisionContext& ctx) {
    if (!(z.re > 0)) throw domain_error("log_gamma requires Re z > 0");
    mpfr_prec_t p = ctx.work_prec(64);
    Complex za = z;
    za.round_to(p);
    // Stirling reaches 2^-p once |w| > ~0.12 p; shift up to there.
    long threshold = (12 * static_cast<long>(p)) / 100 + 10;
    long shift = 0;
    if (za.re < threshold) shift = threshold - floor(za.re).to_long();
    Complex w = za + Real(shift, p);

    Real half = Real::pow2(-1, p);
    Complex acc = (w - half) * log(w) - w + Complex(log(2 * Real::pi(p)) * half);

    Complex winv = Complex(Real(1, p)) / w;
    Complex w2inv = winv * winv;
    Complex wpow = winv;
    Real target = Real::pow2(-static_cast<long>(p) + 4, p);
    Real prev(p);
    bool have_prev = false;
    for (long k = 1; 2 * k <= kBernoulliDegreeCap; ++k) {
        mpq_class coef = bernoulli_number(2 * k) / mpq_class((2 * k) * (2 * k - 1));
        Complex term = real_from_q(coef, p) * wpow;
        Real m = abs(term);
        if (have_prev && m >= prev) break;
        acc += term;
        if (m <= abs(acc) * target) break;
        prev = m;
        have_prev = true;
        wpow = wpow * w2inv;
    }
    for (long j = 0; j < shift; ++j) acc -= log(za + Real(j, p));
    acc.round_to(ctx.precision_bits());
    return acc;
}

Complex gamma(const Complex& z, const PrecisionContext& ctx) {
    if (z.is_real()) return Complex(gamma(z.re, ctx));
    mpfr_prec_t p = ctx.work_prec(64);
    Complex za = z;
    za.round_to(p);
    Complex g = exp(log_gamma(za, ctx));
    g.round_to(ctx.precision_bits());
    return g;
}

// ---------------------------------------------------------------------------
// Polylogarithm, divisor sums
// ---------------------------------------------------------------------------

namespace {

// Direct summation of Li_s(z), |z| < 1 strictly. S and Z are both Real or
// both Complex.
template <class S, class Z>
Z polylog_sum(const S& s, const Z& z, const PrecisionContext& ctx) {
    mpfr_prec_t p = ctx.work_prec();
    Real az = mag_of(z);
    if (!(az < 1)) throw domain_error("polylog requires |z| < 1");
    Z sum(p);
    if (az.is_zero()) return sum;

    Real sigma_neg = max(-re_of(s), Real(0, p));  // polynomial growth exponent
    Real target = Real::pow2(-static_cast<long>(p) + 4, p);
    Z zpow = z;
    long consecutive = 0;
    for (long k = 1; k <= ctx.max_terms(); ++k) {
        Real kk(k, p);
        Z term(p);
        if constexpr (std::is_same_v<S, Complex>) {
            term = zpow * exp(-s * Complex(log(kk)));
        } else {
            term = zpow * pow(kk, -s);
        }
        sum += term;
        Real m = mag_of(term);
        Real scale = max(mag_of(sum), m);
        consecutive = (m <= scale * target) ? consecutive + 1 : 0;
        if (consecutive >= 3) {
            Real ratio = az * pow(Real(k + 1, p) / kk, sigma_neg);
            if (ratio < 1 && m * ratio / (1 - ratio) <= scale * target) return sum;
        }
        zpow = zpow * z;
    }
    throw convergence_error("polylog: term cap " + std::to_string(ctx.max_terms()) + " exceeded");
}

}  // namespace

Real polylog(const Real& s, const Real& z, const PrecisionContext& ctx) {
    return polylog_sum(s, z, ctx).round_to(ctx.precision_bits());
}

Complex polylog(const Complex& s, const Complex& z, const PrecisionContext& ctx) {
    if (s.is_real() && z.is_real()) return Complex(polylog(s.re, z.re, ctx));
    Complex v = polylog_sum(s, z, ctx);
    v.round_to(ctx.precision_bits());
    return v;
}

Real divisor_sigma(const Real& s, unsigned long n, const PrecisionContext& ctx) {
    if (n == 0) throw domain_error("divisor_sigma requires n >= 1");
    mpfr_prec_t p = ctx.work_prec();
    Real sum(p);
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        sum += pow(Real(static_cast<long>(d), p), s);
        unsigned long e = n / d;
        if (e != d) sum += pow(Real(static_cast<long>(e), p), s);
    }
    return sum.round_to(ctx.precision_bits());
}

}  // namespace qasym
