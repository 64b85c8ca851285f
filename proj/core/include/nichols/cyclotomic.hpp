#pragma once

#include <compare>
#include <cstdint>

#include "nichols/errors.hpp"

namespace nichols {

// Ambient cyclotomic group mu_N inside a field of characteristic p.
// p = 0 is allowed as a generality escape hatch; every shipped fixture
// uses p > 0. If p > 0 then gcd(N, p) = 1, so a primitive N-th root of
// unity exists and the N exponent classes stay distinct in the field.
struct Ambient {
    int N = 1;
    int p = 0;

    bool operator==(const Ambient&) const = default;
};

// Validates N >= 1, p prime or zero, gcd(N, p) = 1. Throws BadParameter.
Ambient make_ambient(int N, int p);

bool is_prime(int p);
int gcd_int(int a, int b);

// An element of mu_N: zeta^exp for one fixed primitive N-th root zeta.
// Exponent-only representation; all arithmetic is integer-exact.
class RootOfUnity {
public:
    RootOfUnity(Ambient ambient, long long exp);

    int exp() const noexcept { return exp_; }
    const Ambient& ambient() const noexcept { return amb_; }

    bool is_one() const noexcept { return exp_ == 0; }

    bool operator==(const RootOfUnity& o) const noexcept
    {
        return amb_ == o.amb_ && exp_ == o.exp_;
    }

private:
    Ambient amb_;
    int exp_; // reduced to [0, N)
};

RootOfUnity mul(const RootOfUnity& a, const RootOfUnity& b); // throws AmbientMismatch
RootOfUnity inv(const RootOfUnity& a);
RootOfUnity pow(const RootOfUnity& a, long long k);

// Smallest n >= 1 with a^n = 1; equals N / gcd(N, exp).
int order(const RootOfUnity& a);

// Membership in G'_m, the primitive m-th roots of unity.
bool is_primitive(const RootOfUnity& a, int m);

// True iff (n)_q = 1 + q + ... + q^{n-1} vanishes in the field:
// for q != 1 iff q^n = 1; for q = 1 iff p > 0 and p | n.
// n = 0 returns false by convention (the criterion only ranges over n >= 1).
bool q_integer_is_zero(long long n, const RootOfUnity& q);

// Exponent-level versions used by the inner loops (same semantics).
int order_of_exp(int e, int N);
bool q_integer_is_zero_exp(long long n, int q_exp, int N, int p);

} // namespace nichols
