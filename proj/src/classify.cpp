#include "spherefib/classify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <tuple>

#include "spherefib/numtheory.hpp"

namespace spherefib {

namespace {

std::vector<i64> admissible_for(const KGroup& K) {
    const i64 n = K.n;
    std::vector<char> ok(n, 0);
    for (i64 t : units(n)) {
        i64 s = (t * t) % n;
        ok[s] = 1;
        ok[(n - s) % n] = 1;
    }
    const bool halved = (K.k == 3 || K.k == 5 || K.k == 6) && n % 2 == 1;
    std::vector<i64> out;
    for (i64 a = 0; a < K.theta_order; ++a) {
        i64 c = halved ? (2 * a) % n : a % n;
        if (ok[c]) out.push_back(a);
    }
    return out;
}

// theta-coefficients treated as canonical, in preference order
std::vector<i64> canonical_theta_coeffs(const KGroup& K) {
    if (K.n % 2 == 1 && K.k != 2 && K.k != 4) return {(K.n + 1) / 2};
    return {1, (1 + K.n) % K.theta_order};
}

std::string render(const KGroup& K, i64 a, const std::vector<i64>& c, bool unicode) {
    const auto& tab = sphere_table(K.k);
    const bool halved = K.n % 2 == 1 && K.k != 2 && K.k != 4;
    const std::string th = unicode ? "θ" : "theta";
    std::string out;
    if (a == 1)
        out = th;
    else if (halved && a == (K.n + 1) / 2)
        out = "(1/2)" + th;
    else if (a == (1 + K.n) % K.theta_order)
        out = "(1+" + std::to_string(K.n) + ")" + th;
    else
        out = std::to_string(a) + (unicode ? "" : "*") + th;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        out += " + ";
        if (c[i] > 1) out += std::to_string(c[i]) + (unicode ? "·" : "*");
        out += unicode ? ("i∘" + tab[i].unicode_name) : ("i(" + tab[i].name + ")");
    }
    return out;
}

ClassificationResult result_from_partition(const KGroup& K,
                                           const std::vector<std::vector<GroupElement>>& part) {
    ClassificationResult res;
    res.k = K.k;
    res.n = K.n;
    ClosedFormBranch tb = closed_form_branch(K.k, K.n);
    res.branch = tb.label;
    res.closed_form_G = tb.G;
    res.brute_force_G = static_cast<i64>(part.size());
    res.representatives.reserve(part.size());
    for (const auto& block : part)
        res.representatives.emplace_back(block.front(), symbolic_for_orbit(K, block, false));
    return res;
}

}  // namespace

MismatchError::MismatchError(int k_, i64 n_, i64 closed_, i64 brute_,
                             std::vector<std::vector<GroupElement>> partition_)
    : std::runtime_error("cross_validate(k=" + std::to_string(k_) + ", n=" + std::to_string(n_) +
                         "): closed form " + std::to_string(closed_) + " != brute force " +
                         std::to_string(brute_)),
      k(k_),
      n(n_),
      closed(closed_),
      brute(brute_),
      partition(std::move(partition_)) {}

std::vector<i64> admissible_coefficients(int k, i64 n) {
    return admissible_for(build_K(k, n));
}

std::vector<GroupElement> attaching_set(const KGroup& K) {
    const std::vector<i64> adm = admissible_for(K);
    const std::vector<GroupElement> img = image_subgroup(K);
    std::vector<GroupElement> out;
    out.reserve(adm.size() * img.size());
    for (i64 a : adm) {
        GroupElement at = scale(a, K.theta);
        for (const auto& s : img) out.push_back(add(at, s));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<GroupElement> attaching_set(int k, i64 n) {
    return attaching_set(build_K(k, n));
}

std::vector<std::vector<GroupElement>> orbit_partition(const KGroup& K, EpsilonFn eps_fn) {
    std::vector<Endo> gens;
    for (const auto& g : equivalence_params(K.k, K.n)) gens.push_back(induced_endo(K, g, eps_fn));
    gens.push_back(negation_endo(K));
    return orbits(attaching_set(K), gens);
}

ClassificationResult brute_force_classify(int k, i64 n, EpsilonFn eps_fn) {
    KGroup K = build_K(k, n);
    return result_from_partition(K, orbit_partition(K, eps_fn));
}

ClosedFormBranch closed_form_branch(int k, i64 n) {
    if (k < 2 || k > 6) throw std::invalid_argument("closed_form_branch: k must be in [2,6]");
    if (n < 2) throw std::invalid_argument("closed_form_branch: n must be >= 2");
    int r = 0;
    for (i64 m = n; m % 2 == 0; m /= 2) ++r;
    const bool st = satisfies_star(n);
    const i64 r3 = rho(3, n), r5 = rho(5, n), r7 = rho(7, n), r9 = rho(9, n);
    switch (k) {
        case 2:
            if (r == 0) return {"2!|n", 1 + r3};
            if (r == 1) {
                if (r3) return {"2||n,3|n", 4};
                return st ? ClosedFormBranch{"2||n,3!|n,star", 1}
                          : ClosedFormBranch{"2||n,3!|n,!star", 2};
            }
            return {"4|n", 3 * (1 + r3)};
        case 3:
            if (r == 0) return {"2!|n", 1};
            if (r == 1) return st ? ClosedFormBranch{"2||n,star", 1} : ClosedFormBranch{"2||n,!star", 2};
            if (r == 2) return {"4||n", 2};
            return {"8|n", 1};
        case 4: {
            const i64 f5 = 1 + 2 * r5;
            if (r == 0) {
                if (r3) return {"2!|n,3|n", 2 * f5};
                if (!r5) return {"2!|n,3!|n,5!|n", 1};
                return st ? ClosedFormBranch{"2!|n,3!|n,5|n,star", 2}
                          : ClosedFormBranch{"2!|n,3!|n,5|n,!star", 3};
            }
            if (r == 1) {
                if (r3) return {"2||n,3|n", 4 * f5};
                return st ? ClosedFormBranch{"2||n,3!|n,star", f5}
                          : ClosedFormBranch{"2||n,3!|n,!star", 2 * f5};
            }
            const i64 base = (1 + r3) * f5;
            if (r == 2) return {"4||n", 3 * base};
            if (r == 3) return {"8||n", 4 * base};
            return {"16|n", 5 * base};
        }
        case 5:
            if (r == 0) return {"2!|n", 1};
            if (r == 1) return st ? ClosedFormBranch{"2||n,star", 8} : ClosedFormBranch{"2||n,!star", 16};
            if (r == 2) return {"4||n", 16};
            return {"8|n", 8};
        default: {
            const i64 base = (1 + r3 + 3 * r9) * (1 + 3 * r7);
            if (r == 0) {
                if (!r3 && !r7) return {"2!|n,3!|n,7!|n", 1};
                return {"2!|n,3|n-or-7|n", base};
            }
            if (r == 1)
                return st ? ClosedFormBranch{"2||n,star", 2} : ClosedFormBranch{"2||n,!star", 4 * base};
            if (r == 2) return {"4||n", 6 * base};
            return {"8|n", 5 * base};
        }
    }
}

i64 closed_form_G(int k, i64 n) {
    return closed_form_branch(k, n).G;
}

std::string symbolic_for_orbit(const KGroup& K, const std::vector<GroupElement>& orbit,
                               bool unicode) {
    const std::vector<i64> canon = canonical_theta_coeffs(K);
    std::vector<i64> named_ord;
    named_ord.reserve(K.named.size());
    for (const auto& x : K.named) named_ord.push_back(element_order(x));
    const std::size_t rank = K.group->rank();

    bool found = false;
    i64 best_rank = 0, best_a = 0;
    std::vector<i64> best_c, best_crev;
    for (const auto& f : orbit) {
        std::vector<i64> c(K.named.size(), 0);
        while (true) {
            GroupElement rem = f;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (c[i]) rem = add(rem, scale(-c[i], K.named[i]));
            bool pure = true;
            for (std::size_t j = 0; j + 1 < rank; ++j)
                if (rem.coeffs[j] != 0) {
                    pure = false;
                    break;
                }
            if (pure) {
                const i64 a = rem.coeffs[rank - 1];
                i64 rk = static_cast<i64>(canon.size());
                for (std::size_t i = 0; i < canon.size(); ++i)
                    if (canon[i] == a) {
                        rk = static_cast<i64>(i);
                        break;
                    }
                std::vector<i64> crev(c.rbegin(), c.rend());
                if (!found ||
                    std::tie(rk, a, crev) < std::tie(best_rank, best_a, best_crev)) {
                    found = true;
                    best_rank = rk;
                    best_a = a;
                    best_c = c;
                    best_crev = std::move(crev);
                }
            }
            std::size_t i = 0;
            for (; i < c.size(); ++i) {
                if (++c[i] < named_ord[i]) break;
                c[i] = 0;
            }
            if (i == c.size()) break;
        }
    }
    if (!found) throw std::logic_error("symbolic_for_orbit: no decomposition in span of named elements");
    return render(K, best_a, best_c, unicode);
}

std::vector<std::string> representatives_symbolic(const ClassificationResult& res, bool unicode) {
    KGroup K = build_K(res.k, res.n);
    std::vector<Endo> gens;
    for (const auto& g : equivalence_params(K.k, K.n)) gens.push_back(induced_endo(K, g));
    gens.push_back(negation_endo(K));

    std::vector<std::string> out;
    out.reserve(res.representatives.size());
    for (const auto& [rep, ascii] : res.representatives) {
        // saturate the single orbit of rep
        std::set<GroupElement> seen{rep};
        std::vector<GroupElement> queue{rep};
        while (!queue.empty()) {
            GroupElement x = std::move(queue.back());
            queue.pop_back();
            for (const auto& e : gens) {
                GroupElement y = e.apply(x);
                if (seen.insert(y).second) queue.push_back(y);
            }
        }
        std::vector<GroupElement> orbit(seen.begin(), seen.end());
        std::string s = symbolic_for_orbit(K, orbit, unicode);
        if (!unicode && s != ascii)
            throw std::logic_error("representatives_symbolic: rendering drifted from stored form");
        out.push_back(std::move(s));
    }
    return out;
}

ClassificationResult cross_validate(int k, i64 n) {
    KGroup K = build_K(k, n);
    auto part = orbit_partition(K);
    ClosedFormBranch tb = closed_form_branch(k, n);
    if (static_cast<i64>(part.size()) != tb.G)
        throw MismatchError(k, n, tb.G, static_cast<i64>(part.size()), std::move(part));
    return result_from_partition(K, part);
}

}  // namespace spherefib
