#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "spherefib/action.hpp"

namespace spherefib {

// One closed-form case: its label and count.
struct ClosedFormBranch {
    std::string label;
    i64 G;
};

struct ClassificationResult {
    int k = 0;
    i64 n = 0;
    std::string branch;
    i64 closed_form_G = 0;
    i64 brute_force_G = 0;
    // one lex-minimal element per orbit, with its symbolic decomposition (ascii)
    std::vector<std::pair<GroupElement, std::string>> representatives;
};

// Raised by cross_validate when the two counts disagree; carries the orbit
// partition as the diagnostic artifact.
struct MismatchError : std::runtime_error {
    int k;
    i64 n;
    i64 closed;
    i64 brute;
    std::vector<std::vector<GroupElement>> partition;
    MismatchError(int k, i64 n, i64 closed, i64 brute,
                  std::vector<std::vector<GroupElement>> partition);
};

// Residues a in [0, theta_order) whose class mod n satisfies the admissibility
// criterion: 2a == +-tau^2 (mod n) for k=3,5,6 with odd n; a == +-tau^2 otherwise.
std::vector<i64> admissible_coefficients(int k, i64 n);

// T = { a*theta + s : a admissible, s in image_subgroup }, deduplicated, sorted.
std::vector<GroupElement> attaching_set(const KGroup& K);
std::vector<GroupElement> attaching_set(int k, i64 n);

// Orbits of the attaching set under every induced self-equivalence plus negation.
std::vector<std::vector<GroupElement>> orbit_partition(const KGroup& K,
                                                       EpsilonFn eps_fn = epsilon_k);

ClassificationResult brute_force_classify(int k, i64 n, EpsilonFn eps_fn = epsilon_k);

// Closed-form branch dispatch on (2-adic valuation, star, rho indicators).
ClosedFormBranch closed_form_branch(int k, i64 n);
i64 closed_form_G(int k, i64 n);

// Canonical decomposition of one orbit: scans the orbit for the canonical
// form (theta-coefficient 1 or 1+n, or 1/2 in the odd branches for k=3,5,6),
// preferring small coefficients on late table generators.
std::string symbolic_for_orbit(const KGroup& K, const std::vector<GroupElement>& orbit,
                               bool unicode);

// Re-derives the symbolic strings of a finished result (optionally with glyphs).
std::vector<std::string> representatives_symbolic(const ClassificationResult& res,
                                                  bool unicode = false);

// Runs both evaluators, throws MismatchError unless they agree.
ClassificationResult cross_validate(int k, i64 n);

}  // namespace spherefib
