#include "spherefib/kgroups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spherefib {

const std::vector<SphereGen>& sphere_table(int k) {
    static const std::vector<SphereGen> t2{{"nu'", "ν′", 4},
                                           {"alpha1_3", "α₁(3)", 3}};
    static const std::vector<SphereGen> t3{{"nu5eta8^2", "ν₅η₈²", 2}};
    static const std::vector<SphereGen> t4{{"sigma'", "σ′", 8},
                                           {"alpha2_7", "α₂(7)", 3},
                                           {"alpha1_7", "α₁(7)", 5}};
    static const std::vector<SphereGen> t5{
        {"nu9^3", "ν₉³", 2},
        {"mu9", "μ₉", 2},
        {"eta9eps10", "η₉ε₁₀", 2},
        {"sigma9eta16^2", "σ₉η₁₆²", 2}};
    static const std::vector<SphereGen> t6{{"zeta_11", "ζ₁₁", 8},
                                           {"alphabar3_11", "ᾱ₃(11)", 9},
                                           {"alpha1_11", "α₁(11)", 7}};
    switch (k) {
        case 2: return t2;
        case 3: return t3;
        case 4: return t4;
        case 5: return t5;
        case 6: return t6;
    }
    throw std::invalid_argument("sphere_table: k must be in [2,6], got " + std::to_string(k));
}

namespace {

int v2(i64 n) {
    int r = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++r;
    }
    return r;
}

struct Layout {
    std::vector<i64> orders;
    i64 theta_order;
    std::vector<i64> theta;
    std::vector<std::vector<i64>> named;
    std::vector<std::pair<i64, std::vector<i64>>> combo;
};

Layout layout_for(int k, i64 n) {
    const i64 g3 = std::gcd<i64>(3, n), g4 = std::gcd<i64>(4, n), g5 = std::gcd<i64>(5, n);
    const i64 g7 = std::gcd<i64>(7, n), g8 = std::gcd<i64>(8, n), g9 = std::gcd<i64>(9, n);
    const int r = v2(n);
    Layout L;
    switch (k) {
        case 2:
            if (r == 0 || r >= 3) {
                L = {{g4, g3, n}, n, {0, 0, 1}, {{1, 0, 0}, {0, 1, 0}},
                     {{0, {1, 0}}, {0, {0, 1}}, {1, {0, 0}}}};
            } else if (r == 1) {
                L = {{g3, 2 * n}, 2 * n, {0, 1}, {{0, n}, {1, 0}},
                     {{0, {0, 1}}, {1, {0, 0}}}};
            } else {  // 4||n: Z_2 generated by (n/2)theta + i(nu')
                L = {{2, g3, 2 * n}, 2 * n, {0, 0, 1}, {{1, 0, 2 * n - n / 2}, {0, 1, 0}},
                     {{n / 2, {1, 0}}, {0, {0, 1}}, {1, {0, 0}}}};
            }
            break;
        case 4:
            if (r == 0 || r >= 4) {
                L = {{g8, g3, g5, n}, n, {0, 0, 0, 1},
                     {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}},
                     {{0, {1, 0, 0}}, {0, {0, 1, 0}}, {0, {0, 0, 1}}, {1, {0, 0, 0}}}};
            } else if (r == 1) {
                L = {{g3, g5, 2 * n}, 2 * n, {0, 0, 1},
                     {{0, 0, n}, {1, 0, 0}, {0, 1, 0}},
                     {{0, {0, 1, 0}}, {0, {0, 0, 1}}, {1, {0, 0, 0}}}};
            } else if (r == 2) {  // Z_2 generated by (n/2)theta + i(sigma')
                L = {{2, g3, g5, 2 * n}, 2 * n, {0, 0, 0, 1},
                     {{1, 0, 0, 2 * n - n / 2}, {0, 1, 0, 0}, {0, 0, 1, 0}},
                     {{n / 2, {1, 0, 0}}, {0, {0, 1, 0}}, {0, {0, 0, 1}}, {1, {0, 0, 0}}}};
            } else {  // 8||n: Z_4 generated by (n/4)theta + i(sigma')
                L = {{4, g3, g5, 2 * n}, 2 * n, {0, 0, 0, 1},
                     {{1, 0, 0, 2 * n - n / 4}, {0, 1, 0, 0}, {0, 0, 1, 0}},
                     {{n / 4, {1, 0, 0}}, {0, {0, 1, 0}}, {0, {0, 0, 1}}, {1, {0, 0, 0}}}};
            }
            break;
        case 3:
            if (r == 0) {
                L = {{n}, n, {1}, {{0}}, {{1, {0}}}};
            } else if (r == 1) {  // cyclic, i(nu5eta8^2) = 2n*theta
                L = {{4 * n}, 4 * n, {1}, {{2 * n}}, {{1, {0}}}};
            } else {
                L = {{2, 2 * n}, 2 * n, {0, 1}, {{1, 0}}, {{0, {1}}, {1, {0}}}};
            }
            break;
        case 5:
            if (r == 0) {
                L = {{n}, n, {1}, {{0}, {0}, {0}, {0}}, {{1, {0, 0, 0, 0}}}};
            } else if (r == 1) {
                // i(sigma9eta16^2) = 2n*theta - i(nu9^3) - i(eta9eps10)
                L = {{2, 2, 2, 4 * n}, 4 * n, {0, 0, 0, 1},
                     {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 1, 2 * n}},
                     {{0, {1, 0, 0, 0}}, {0, {0, 1, 0, 0}}, {0, {0, 0, 1, 0}}, {1, {0, 0, 0, 0}}}};
            } else {
                L = {{2, 2, 2, 2, 2 * n}, 2 * n, {0, 0, 0, 0, 1},
                     {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}},
                     {{0, {1, 0, 0, 0}}, {0, {0, 1, 0, 0}}, {0, {0, 0, 1, 0}}, {0, {0, 0, 0, 1}},
                      {1, {0, 0, 0, 0}}}};
            }
            break;
        case 6:
            if (r == 0) {
                L = {{g9, g7, n}, n, {0, 0, 1}, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}},
                     {{0, {0, 1, 0}}, {0, {0, 0, 1}}, {1, {0, 0, 0}}}};
            } else {
                L = {{g8, g9, g7, 2 * n}, 2 * n, {0, 0, 0, 1},
                     {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}},
                     {{0, {1, 0, 0}}, {0, {0, 1, 0}}, {0, {0, 0, 1}}, {1, {0, 0, 0}}}};
            }
            break;
        default:
            throw std::invalid_argument("build_K: k must be in [2,6], got " + std::to_string(k));
    }
    return L;
}

void check(bool cond, const std::string& what, int k, i64 n) {
    if (!cond)
        throw std::logic_error("build_K(" + std::to_string(k) + ", " + std::to_string(n) +
                               "): consistency check failed: " + what);
}

}  // namespace

KGroup build_K(int k, i64 n) {
    if (k < 2 || k > 6) throw std::invalid_argument("build_K: k must be in [2,6]");
    if (n < 2) throw std::invalid_argument("build_K: n must be >= 2");
    Layout L = layout_for(k, n);
    KGroup K;
    K.k = k;
    K.n = n;
    K.group = make_group(L.orders);
    K.theta = make_element(K.group, L.theta);
    K.theta_order = L.theta_order;
    for (auto& v : L.named) K.named.push_back(make_element(K.group, std::move(v)));
    K.basis_combo = std::move(L.combo);

    const auto& tab = sphere_table(k);
    check(element_order(K.theta) == K.theta_order, "order(theta) != theta_order", k, n);
    for (std::size_t i = 0; i < K.named.size(); ++i)
        check(element_order(K.named[i]) == std::gcd(tab[i].order, n),
              "order(i(" + tab[i].name + ")) != gcd(table order, n)", k, n);

    // printed relations, branch by branch
    const int r = v2(n);
    auto basis = [&](std::size_t i) {
        std::vector<i64> c(K.group->rank(), 0);
        c[i] = 1;
        return make_element(K.group, std::move(c));
    };
    if (k == 2 || k == 4) {
        if (r == 1) check(scale(n, K.theta) == K.named[0], "i(xi) != n*theta", k, n);
        if (r == 2)
            check(add(scale(n / 2, K.theta), K.named[0]) == basis(0),
                  "(n/2)theta + i(xi) is not the twisted Z_2 generator", k, n);
        if (k == 4 && r == 3)
            check(add(scale(n / 4, K.theta), K.named[0]) == basis(0),
                  "(n/4)theta + i(sigma') is not the twisted Z_4 generator", k, n);
    }
    if (k == 3 && r == 1) check(scale(2 * n, K.theta) == K.named[0], "i(nu5eta8^2) != 2n*theta", k, n);
    if (k == 5 && r == 1)
        check(add(add(K.named[0], K.named[2]), K.named[3]) == scale(2 * n, K.theta),
              "i(nu9^3) + i(eta9eps10) + i(sigma9eta16^2) != 2n*theta", k, n);

    // basis_combo reconstructs the basis
    for (std::size_t i = 0; i < K.basis_combo.size(); ++i) {
        GroupElement e = scale(K.basis_combo[i].first, K.theta);
        for (std::size_t j = 0; j < K.named.size(); ++j)
            e = add(e, scale(K.basis_combo[i].second[j], K.named[j]));
        check(e == basis(i), "basis_combo[" + std::to_string(i) + "] mismatch", k, n);
    }

    // exactness: |K| = |image| * |i_*(K)|
    i64 img = 1;
    for (std::size_t i = 0; i < K.named.size(); ++i) img *= std::gcd(tab[i].order, n);
    check(K.group->size() == img * istar_order(k, n), "exactness order identity", k, n);

    return K;
}

std::vector<GroupElement> image_subgroup(const KGroup& K) {
    std::vector<GroupElement> out{zero_element(K.group)};
    std::vector<GroupElement> frontier = out;
    auto known = [&](const GroupElement& x) {
        for (const auto& e : out)
            if (e == x) return true;
        return false;
    };
    while (!frontier.empty()) {
        GroupElement x = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& g : K.named) {
            GroupElement y = add(x, g);
            if (!known(y)) {
                out.push_back(y);
                frontier.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 istar_order(int k, i64 n) {
    return (k == 2 || k == 4 || n % 2) ? n : 2 * n;
}

}  // namespace spherefib
