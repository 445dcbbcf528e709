#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hilbtaut {

using Z = mpz_class;
using Q = mpq_class;

// C(n, k) for n >= 0; zero outside 0 <= k <= n.
inline Z binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    Z r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// x(x-1)...(x-h+1)/h! as an integer polynomial in x; zero for h < 0.
inline Z binomial_poly(const Z& x, long h)
{
    if (h < 0)
        return 0;
    Z r;
    mpz_bin_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(h));
    return r;
}

inline Z factorial(long n)
{
    if (n < 0)
        throw std::invalid_argument("factorial of negative integer");
    Z r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline long long factorial_ll(int n)
{
    long long r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline std::string to_string(const Q& q)
{
    return q.get_str();
}

inline std::string to_string(const Z& z)
{
    return z.get_str();
}

// a / b in lowest terms.
inline Q frac(const Z& a, const Z& b)
{
    Q q(a, b);
    q.canonicalize();
    return q;
}

// Throws unless q is an integer.
inline Z require_integer(Q q, const char* what)
{
    q.canonicalize();
    if (q.get_den() != 1)
        throw std::domain_error(std::string(what) + ": non-integral value " + q.get_str());
    return q.get_num();
}

} // namespace hilbtaut
