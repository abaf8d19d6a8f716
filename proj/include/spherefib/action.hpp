#pragma once

#include "spherefib/kgroups.hpp"

namespace spherefib {

// A self-homotopy-equivalence of the Moore space P^{2k}(n): degree unit t on
// the bottom cell, plus (when 4|n) an independent bit for the i.eta.p twist.
struct SelfEquivalence {
    i64 t = 1;
    int eps = 0;
    bool operator==(const SelfEquivalence&) const = default;
};

// Complete parameter list, ascending t then eps:
//   odd n:       t in units(n),  eps = 0
//   2||n:        t in units(2n), eps = 0   (i.eta.p = n*iota is already a t-shift)
//   4|n:         t in units(n) lifted to [1,n), eps in {0,1}
std::vector<SelfEquivalence> equivalence_params(int k, i64 n);

// The order-2 correction exponent for k=3,5 on even n: 1 iff t == 3 (mod 4)
// (the parity of t(t-1)/2). Rejects even t.
int epsilon_k(i64 t, i64 n, int k);

using EpsilonFn = int (*)(i64 t, i64 n, int k);

// The automorphism of K induced by g, determined on generators:
//   k=2,4,6:      theta -> t^2*theta, each named i(xi) -> t*i(xi)
//   k=3,5, 2|n:   theta -> t^2*theta + (epsilon_k+eps)*xi0, named -> named
//                 (xi0 = i(nu5eta8^2) for k=3; i(nu9^3)+i(eta9eps10)+i(sigma9eta16^2) for k=5)
//   k=3,5, odd n: theta -> t^2*theta
// t^2 is squared as an integer before reduction mod theta_order.
// eps_fn exists so tests can swap the epsilon_k definition; default is the real one.
Endo induced_endo(const KGroup& K, const SelfEquivalence& g, EpsilonFn eps_fn = epsilon_k);

// x -> -x (the global sign of the orbit equivalence).
Endo negation_endo(const KGroup& K);

}  // namespace spherefib
