#include "nichols/cyclotomic.hpp"

namespace nichols {

int gcd_int(int a, int b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_prime(int p)
{
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Ambient make_ambient(int N, int p)
{
    if (N < 1) throw BadParameter("ambient order N must be >= 1");
    if (p != 0 && !is_prime(p)) throw BadParameter("characteristic must be 0 or a prime");
    if (p > 0 && gcd_int(N, p) != 1)
        throw BadParameter("gcd(N, p) must be 1 so that mu_N embeds in characteristic p");
    return Ambient{N, p};
}

static int reduce_exp(long long e, int N)
{
    long long r = e % N;
    if (r < 0) r += N;
    return static_cast<int>(r);
}

RootOfUnity::RootOfUnity(Ambient ambient, long long exp)
    : amb_(ambient), exp_(reduce_exp(exp, ambient.N))
{
}

RootOfUnity mul(const RootOfUnity& a, const RootOfUnity& b)
{
    if (!(a.ambient() == b.ambient())) throw AmbientMismatch();
    return RootOfUnity(a.ambient(), static_cast<long long>(a.exp()) + b.exp());
}

RootOfUnity inv(const RootOfUnity& a)
{
    return RootOfUnity(a.ambient(), -static_cast<long long>(a.exp()));
}

RootOfUnity pow(const RootOfUnity& a, long long k)
{
    return RootOfUnity(a.ambient(), k % a.ambient().N * a.exp());
}

int order_of_exp(int e, int N)
{
    return N / gcd_int(N, e % N);
}

int order(const RootOfUnity& a)
{
    return order_of_exp(a.exp(), a.ambient().N);
}

bool is_primitive(const RootOfUnity& a, int m)
{
    return order(a) == m;
}

bool q_integer_is_zero_exp(long long n, int q_exp, int N, int p)
{
    if (n == 0) return false;
    if (q_exp % N == 0) return p > 0 && n % p == 0;
    // (n)_q (q - 1) = q^n - 1 and q != 1, so (n)_q = 0 iff q^n = 1.
    return (n % N * q_exp) % N == 0;
}

bool q_integer_is_zero(long long n, const RootOfUnity& q)
{
    return q_integer_is_zero_exp(n, q.exp(), q.ambient().N, q.ambient().p);
}

} // namespace nichols
