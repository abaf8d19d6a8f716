#include "spherefib/numtheory.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace spherefib {

Factorization factorize(i64 n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive, got " + std::to_string(n));
    Factorization f;
    f.n = n;
    i64 m = n;
    while (m % 2 == 0) {
        m /= 2;
        ++f.two_exp;
    }
    for (i64 p = 3; p * p <= m; p += 2) {
        if (m % p) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        f.odd_primes.emplace_back(p, e);
    }
    if (m > 1) f.odd_primes.emplace_back(m, 1);
    return f;
}

std::vector<i64> units(i64 m) {
    if (m <= 0) throw std::invalid_argument("units: modulus must be positive");
    if (m == 1) return {0};
    std::vector<i64> out;
    for (i64 x = 1; x < m; ++x)
        if (std::gcd(x, m) == 1) out.push_back(x);
    return out;
}

namespace {

// x with a*x == 1 (mod m); a must be a unit.
i64 inv_mod(i64 a, i64 m) {
    i64 t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
    while (nr) {
        i64 q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::domain_error("inv_mod: not a unit");
    return ((t % m) + m) % m;
}

}  // namespace

std::set<i64> sqrt_solutions(i64 a, i64 m) {
    if (m <= 0) throw std::invalid_argument("sqrt_solutions: modulus must be positive");
    a = ((a % m) + m) % m;
    if (m == 1) return {0};
    Factorization f = factorize(m);
    std::vector<i64> pps;  // prime powers, pairwise coprime
    if (f.two_exp) pps.push_back(i64(1) << f.two_exp);
    for (auto [p, e] : f.odd_primes) {
        i64 q = 1;
        while (e--) q *= p;
        pps.push_back(q);
    }
    // roots per prime power by direct scan, then CRT product
    std::vector<i64> combined{0};
    i64 mod_so_far = 1;
    for (i64 q : pps) {
        std::vector<i64> roots;
        for (i64 x = 0; x < q; ++x)
            if ((x * x - a) % q == 0) roots.push_back(x);
        if (roots.empty()) return {};
        std::vector<i64> next;
        next.reserve(combined.size() * roots.size());
        i64 inv = inv_mod(mod_so_far % q, q);
        for (i64 c : combined)
            for (i64 r : roots) {
                // c + mod_so_far * t == r (mod q)
                i64 t = ((r - c) % q + q) % q * inv % q;
                next.push_back(c + mod_so_far * t);
            }
        combined = std::move(next);
        mod_so_far *= q;
    }
    return {combined.begin(), combined.end()};
}

i64 count_sqrt1(i64 n) {
    Factorization f = factorize(n);
    int u = f.two_exp <= 1 ? 0 : (f.two_exp == 2 ? 1 : 2);
    return i64(1) << (f.odd_primes.size() + u);
}

bool satisfies_star(i64 n) {
    Factorization f = factorize(n);
    if (f.two_exp > 1) return false;
    for (auto [p, e] : f.odd_primes)
        if (p % 4 != 1) return false;
    return true;
}

int rho(i64 q, i64 n) {
    if (q < 2) throw std::invalid_argument("rho: q must be >= 2");
    return n % q == 0 ? 1 : 0;
}

bool solvable_shifted(i64 n) {
    if (n % 2) throw std::invalid_argument("solvable_shifted: n must be even");
    return !sqrt_solutions(1 + n, 2 * n).empty();
}

std::set<std::vector<i64>> solution_vectors(i64 n, int e) {
    Factorization f = factorize(n);
    int r = f.two_exp;
    bool ok = (e == 0 && r == 0) || (e == 1 && r == 2) || (e == 2 && r >= 3) || (e == 3 && r >= 4);
    if (!ok)
        throw std::invalid_argument("solution_vectors: unsupported (v2(n), e) = (" +
                                    std::to_string(r) + ", " + std::to_string(e) + ")");
    std::set<std::vector<i64>> out;
    for (i64 x : sqrt_solutions(1, n)) {
        std::vector<i64> v;
        if (e > 0) v.push_back(x % (i64(1) << e));
        for (auto [p, _] : f.odd_primes) v.push_back(x % p);
        out.insert(std::move(v));
    }
    return out;
}

}  // namespace spherefib
