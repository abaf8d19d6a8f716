#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace spherefib {

using i64 = std::int64_t;

// n = 2^two_exp * prod(p^e) with odd primes ascending.
struct Factorization {
    i64 n = 1;
    int two_exp = 0;
    std::vector<std::pair<i64, int>> odd_primes;
};

Factorization factorize(i64 n);

// Multiplicative units mod m, ascending. units(1) = {0} (the zero ring convention).
std::vector<i64> units(i64 m);

// All x in [0, m) with x^2 == a (mod m), via CRT over prime powers.
std::set<i64> sqrt_solutions(i64 a, i64 m);

// |{x mod n : x^2 == 1}| = 2^(h+u), h = #odd prime divisors,
// u = 0 (4 !| n), 1 (4||n), 2 (8|n).
i64 count_sqrt1(i64 n);

// n = 2^r * prod p_i^e_i with r <= 1 and every p_i == 1 (mod 4);
// equivalent to solvability of x^2 == -1 (mod n).
bool satisfies_star(i64 n);

// Divisibility indicator: 1 if q | n else 0. Requires q >= 2.
int rho(i64 q, i64 n);

// Whether x^2 == 1+n (mod 2n) is solvable. Requires n even.
// False whenever 8 !| n, true whenever 8||n.
bool solvable_shifted(i64 n);

// Residue vectors of the solutions of x^2 == 1 (mod n): component 0 is
// x mod 2^e (only when e > 0), followed by x mod p_i for each odd prime.
// Valid (v2(n), e) pairs: (0,0), (2,1), (>=3,2), (>=4,3).
std::set<std::vector<i64>> solution_vectors(i64 n, int e);

}  // namespace spherefib
