#include "spherefib/action.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "spherefib/numtheory.hpp"

namespace spherefib {

std::vector<SelfEquivalence> equivalence_params(int k, i64 n) {
    if (k < 2 || k > 6) throw std::invalid_argument("equivalence_params: k must be in [2,6]");
    if (n < 2) throw std::invalid_argument("equivalence_params: n must be >= 2");
    std::vector<SelfEquivalence> out;
    if (n % 2 == 1) {
        for (i64 t : units(n)) out.push_back({t, 0});
    } else if (n % 4 != 0) {
        for (i64 t : units(2 * n)) out.push_back({t, 0});
    } else {
        for (i64 t : units(n))
            for (int e : {0, 1}) out.push_back({t, e});
    }
    return out;
}

int epsilon_k(i64 t, i64 n, int k) {
    if (k != 3 && k != 5) throw std::invalid_argument("epsilon_k: k must be 3 or 5");
    if (n % 2) throw std::invalid_argument("epsilon_k: n must be even");
    if (t % 2 == 0) throw std::invalid_argument("epsilon_k: t must be odd");
    return ((t % 4) + 4) % 4 == 3 ? 1 : 0;
}

namespace {

void validate_params(const KGroup& K, const SelfEquivalence& g) {
    i64 mod;
    bool eps_free;
    if (K.n % 2 == 1) {
        mod = K.n;
        eps_free = false;
    } else if (K.n % 4 != 0) {
        mod = 2 * K.n;
        eps_free = false;
    } else {
        mod = K.n;
        eps_free = true;
    }
    if (g.t < (mod == 1 ? 0 : 1) || g.t >= mod || std::gcd(g.t, mod) != 1)
        throw std::invalid_argument("induced_endo: t=" + std::to_string(g.t) +
                                    " is not a unit lift mod " + std::to_string(mod));
    if (g.eps != 0 && g.eps != 1) throw std::invalid_argument("induced_endo: eps must be 0 or 1");
    if (g.eps == 1 && !eps_free)
        throw std::invalid_argument("induced_endo: eps is only free when 4|n");
}

}  // namespace

Endo induced_endo(const KGroup& K, const SelfEquivalence& g, EpsilonFn eps_fn) {
    validate_params(K, g);
    GroupElement theta_img = scale(g.t * g.t, K.theta);
    if ((K.k == 3 || K.k == 5) && K.n % 2 == 0) {
        GroupElement xi0 = K.k == 3 ? K.named[0] : add(add(K.named[0], K.named[2]), K.named[3]);
        theta_img = add(theta_img, scale((eps_fn(g.t, K.n, K.k) + g.eps) % 2, xi0));
    }
    std::vector<GroupElement> named_imgs;
    named_imgs.reserve(K.named.size());
    for (const auto& x : K.named) named_imgs.push_back(scale(g.t, x));

    std::vector<GroupElement> images;
    images.reserve(K.basis_combo.size());
    for (const auto& [tc, ncs] : K.basis_combo) {
        GroupElement im = scale(tc, theta_img);
        for (std::size_t j = 0; j < ncs.size(); ++j)
            if (ncs[j]) im = add(im, scale(ncs[j], named_imgs[j]));
        images.push_back(std::move(im));
    }
    return hom_from_images(K.group, std::move(images));
}

Endo negation_endo(const KGroup& K) {
    std::vector<GroupElement> images;
    images.reserve(K.group->rank());
    for (std::size_t i = 0; i < K.group->rank(); ++i) {
        std::vector<i64> c(K.group->rank(), 0);
        c[i] = -1;
        images.push_back(make_element(K.group, std::move(c)));
    }
    return hom_from_images(K.group, std::move(images));
}

}  // namespace spherefib
