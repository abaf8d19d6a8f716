#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "spherefib/classify.hpp"
#include "spherefib/numtheory.hpp"

using namespace spherefib;

namespace {

int zero_eps(i64, i64, int) {
    return 0;
}

int v2(i64 n) {
    int r = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++r;
    }
    return r;
}

std::set<std::string> rep_strings(const ClassificationResult& res) {
    std::set<std::string> out;
    for (const auto& [elem, s] : res.representatives) out.insert(s);
    return out;
}

}  // namespace

TEST_CASE("admissible_coefficients examples") {
    CHECK(admissible_coefficients(2, 5) == std::vector<i64>{1, 4});
    CHECK(admissible_coefficients(3, 5) == std::vector<i64>{2, 3});
    CHECK(admissible_coefficients(3, 2) == std::vector<i64>{1, 3, 5, 7});
}

TEST_CASE("admissible coefficients are exactly the criterion residues") {
    for (int k = 2; k <= 6; ++k)
        for (i64 n : {3, 5, 9, 15, 2, 6, 4, 12, 8, 16}) {
            std::set<i64> pm;
            for (i64 t : units(n)) {
                pm.insert(t * t % n);
                pm.insert((n - t * t % n) % n);
            }
            bool halved = (k == 3 || k == 5 || k == 6) && n % 2 == 1;
            auto adm = admissible_coefficients(k, n);
            std::set<i64> got(adm.begin(), adm.end());
            REQUIRE(got.size() == adm.size());
            KGroup K = build_K(k, n);
            for (i64 a = 0; a < K.theta_order; ++a) {
                bool want = pm.count(halved ? (2 * a) % n : a % n) > 0;
                REQUIRE(got.count(a) == static_cast<std::size_t>(want));
            }
        }
}

TEST_CASE("attaching_set examples") {
    KGroup K32 = build_K(3, 2);
    auto t32 = attaching_set(K32);
    REQUIRE(t32.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(t32[i] == scale(2 * static_cast<i64>(i) + 1, K32.theta));

    auto t25 = attaching_set(2, 5);
    REQUIRE(t25.size() == 2);
    CHECK(t25[0].coeffs == std::vector<i64>{0, 0, 1});
    CHECK(t25[1].coeffs == std::vector<i64>{0, 0, 4});

    CHECK(attaching_set(2, 3).size() == 6);
}

TEST_CASE("attaching_set is a sorted set stable under the action") {
    for (auto [k, n] : std::vector<std::pair<int, i64>>{
             {2, 3}, {2, 6}, {2, 12}, {2, 24}, {3, 2}, {3, 8}, {4, 12}, {4, 24},
             {5, 2}, {5, 4}, {6, 4}, {6, 9}, {6, 14}}) {
        KGroup K = build_K(k, n);
        auto T = attaching_set(K);
        REQUIRE(std::is_sorted(T.begin(), T.end()));
        REQUIRE(std::adjacent_find(T.begin(), T.end()) == T.end());
        std::vector<Endo> maps;
        for (const auto& g : equivalence_params(k, n)) maps.push_back(induced_endo(K, g));
        maps.push_back(negation_endo(K));
        for (const auto& e : maps) {
            std::vector<GroupElement> image;
            image.reserve(T.size());
            for (const auto& x : T) image.push_back(e.apply(x));
            std::sort(image.begin(), image.end());
            REQUIRE(image == T);
        }
    }
}

TEST_CASE("brute force orbit counts on small instances") {
    CHECK(brute_force_classify(3, 2).brute_force_G == 1);
    CHECK(brute_force_classify(2, 3).brute_force_G == 2);
    CHECK(brute_force_classify(5, 2).brute_force_G == 8);
}

TEST_CASE("closed_form_G examples") {
    CHECK(closed_form_G(4, 16) == 5);
    CHECK(closed_form_G(6, 2) == 2);
    CHECK(closed_form_G(2, 12) == 6);
    CHECK_THROWS_AS(closed_form_G(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_G(3, 1), std::invalid_argument);
}

TEST_CASE("branch labels dispatch on the 2-adic and divisor structure") {
    CHECK(closed_form_branch(2, 5).label == "2!|n");
    CHECK(closed_form_branch(2, 2).label == "2||n,3!|n,star");
    CHECK(closed_form_branch(2, 14).label == "2||n,3!|n,!star");
    CHECK(closed_form_branch(2, 6).label == "2||n,3|n");
    CHECK(closed_form_branch(2, 12).label == "4|n");
    CHECK(closed_form_branch(3, 8).label == "8|n");
    CHECK(closed_form_branch(3, 4).label == "4||n");
    CHECK(closed_form_branch(4, 5).label == "2!|n,3!|n,5|n,star");
    CHECK(closed_form_branch(4, 35).label == "2!|n,3!|n,5|n,!star");
    CHECK(closed_form_branch(4, 15).label == "2!|n,3|n");
    CHECK(closed_form_branch(4, 24).label == "8||n");
    CHECK(closed_form_branch(4, 16).label == "16|n");
    CHECK(closed_form_branch(5, 10).label == "2||n,star");
    CHECK(closed_form_branch(5, 6).label == "2||n,!star");
    CHECK(closed_form_branch(6, 63).label == "2!|n,3|n-or-7|n");
    CHECK(closed_form_branch(6, 12).label == "4||n");
}

TEST_CASE("closed form depends on n only through its branch invariants") {
    // signature: (capped 2-adic valuation, star, rho3, rho5, rho7, rho9)
    for (int k = 2; k <= 6; ++k) {
        int cap = (k == 4) ? 4 : 3;
        std::map<std::tuple<int, bool, int, int, int, int>, std::pair<i64, std::string>> seen;
        for (i64 n = 2; n <= 400; ++n) {
            auto key = std::make_tuple(std::min(v2(n), cap), satisfies_star(n), rho(3, n),
                                       rho(5, n), rho(7, n), rho(9, n));
            ClosedFormBranch tb = closed_form_branch(k, n);
            REQUIRE(tb.G >= 1);
            auto [it, fresh] = seen.emplace(key, std::make_pair(tb.G, tb.label));
            if (!fresh) {
                REQUIRE(it->second.first == tb.G);
                REQUIRE(it->second.second == tb.label);
            }
        }
    }
}

TEST_CASE("symbolic representatives match the closed-form shapes") {
    CHECK(rep_strings(brute_force_classify(2, 3)) ==
          std::set<std::string>{"theta", "theta + i(alpha1_3)"});
    CHECK(rep_strings(brute_force_classify(3, 5)) == std::set<std::string>{"(1/2)theta"});

    // k=5, n=2: f = theta + i(xi) with xi ranging over the span of S0
    auto r52 = rep_strings(brute_force_classify(5, 2));
    REQUIRE(r52.size() == 8);
    CHECK(r52.count("theta") == 1);
    CHECK(r52.count("theta + i(nu9^3) + i(mu9) + i(eta9eps10)") == 1);
    for (const auto& s : r52) CHECK(s.find("sigma9eta16^2") == std::string::npos);

    // k=5, n=4: same span, doubled by the (1+n)-coefficient family
    auto r54 = rep_strings(brute_force_classify(5, 4));
    REQUIRE(r54.size() == 16);
    CHECK(r54.count("theta") == 1);
    CHECK(r54.count("(1+4)theta") == 1);
    CHECK(r54.count("(1+4)theta + i(nu9^3) + i(mu9) + i(eta9eps10)") == 1);
    std::size_t shifted = 0;
    for (const auto& s : r54)
        if (s.rfind("(1+4)theta", 0) == 0) ++shifted;
    CHECK(shifted == 8);
}

TEST_CASE("representatives_symbolic re-renders the stored decompositions") {
    for (auto [k, n] : std::vector<std::pair<int, i64>>{{2, 12}, {3, 2}, {5, 4}, {6, 9}}) {
        ClassificationResult res = cross_validate(k, n);
        auto ascii = representatives_symbolic(res, false);
        REQUIRE(ascii.size() == res.representatives.size());
        for (std::size_t i = 0; i < ascii.size(); ++i)
            REQUIRE(ascii[i] == res.representatives[i].second);
        auto glyphs = representatives_symbolic(res, true);
        REQUIRE(glyphs.size() == ascii.size());
        for (const auto& s : glyphs) REQUIRE(s.find("θ") != std::string::npos);
    }
}

TEST_CASE("cross_validate agrees on both sides") {
    auto r = cross_validate(4, 24);
    CHECK(r.closed_form_G == 8);
    CHECK(r.brute_force_G == 8);
    CHECK(cross_validate(6, 9).closed_form_G == 5);
    CHECK(cross_validate(2, 2).closed_form_G == 1);
}

TEST_CASE("9 divides 63, so the k=6 count picks up the rho9 term") {
    // (1 + rho3 + 3*rho9) * (1 + 3*rho7) = 5 * 4
    auto r = cross_validate(6, 63);
    CHECK(r.closed_form_G == 20);
    CHECK(r.brute_force_G == 20);
    CHECK(rho(9, 63) == 1);
}

TEST_CASE("orbit partition is a transversal-compatible partition of T") {
    for (auto [k, n] : std::vector<std::pair<int, i64>>{{2, 12}, {3, 6}, {4, 8}, {5, 6}, {6, 4}}) {
        KGroup K = build_K(k, n);
        auto T = attaching_set(K);
        auto part = orbit_partition(K);
        std::vector<GroupElement> flat;
        for (const auto& block : part) {
            REQUIRE(std::is_sorted(block.begin(), block.end()));
            REQUIRE(block.front() == *std::min_element(block.begin(), block.end()));
            flat.insert(flat.end(), block.begin(), block.end());
        }
        std::sort(flat.begin(), flat.end());
        REQUIRE(flat == T);
        ClassificationResult res = brute_force_classify(k, n);
        REQUIRE(res.representatives.size() == static_cast<std::size_t>(res.brute_force_G));
        REQUIRE(res.brute_force_G == static_cast<i64>(part.size()));
        for (std::size_t i = 0; i < part.size(); ++i)
            REQUIRE(res.representatives[i].first == part[i].front());
    }
}

TEST_CASE("the parity definition of epsilon is load-bearing for 2||n") {
    CHECK(brute_force_classify(3, 2).brute_force_G == 1);
    CHECK(brute_force_classify(3, 2, zero_eps).brute_force_G == 2);
    CHECK(brute_force_classify(5, 2).brute_force_G == 8);
    CHECK(brute_force_classify(5, 2, zero_eps).brute_force_G == 16);
}

TEST_CASE("for 4|n the epsilon definition is absorbed by the free eps bit") {
    for (int k : {3, 5})
        for (i64 n : {4, 8, 12, 16, 20, 24}) {
            i64 expect = closed_form_G(k, n);
            CHECK(brute_force_classify(k, n).brute_force_G == expect);
            CHECK(brute_force_classify(k, n, zero_eps).brute_force_G == expect);
        }
}

TEST_CASE("MismatchError carries both counts and the partition") {
    KGroup K = build_K(3, 2);
    auto part = orbit_partition(K);
    MismatchError err(3, 2, 1, 2, part);
    CHECK(std::string(err.what()).find("closed form 1") != std::string::npos);
    CHECK(std::string(err.what()).find("brute force 2") != std::string::npos);
    CHECK(err.partition == part);
    CHECK(err.k == 3);
    CHECK(err.n == 2);
}

TEST_CASE("brute_force_classify is deterministic") {
    auto a = brute_force_classify(6, 12);
    auto b = brute_force_classify(6, 12);
    REQUIRE(a.representatives.size() == b.representatives.size());
    for (std::size_t i = 0; i < a.representatives.size(); ++i) {
        CHECK(a.representatives[i].first == b.representatives[i].first);
        CHECK(a.representatives[i].second == b.representatives[i].second);
    }
}
