#pragma once

#include <string>

#include "spherefib/abelian.hpp"

namespace spherefib {

// Generator of pi_{4k-2}(S^{2k-1}) with its order in that group.
struct SphereGen {
    std::string name;          // ascii label
    std::string unicode_name;  // glyph form
    i64 order;
};

// Fixed generator tables for k in [2,6]. For k=5 the first three entries
// form the distinguished subset S0.
const std::vector<SphereGen>& sphere_table(int k);

// K = the subgroup of pi_{4k-2}(P^{2k}(n)) where attaching maps live,
// presented on the cyclic basis of `group`. theta is the distinguished
// cyclic lift; named[i] is the inclusion image of sphere_table(k)[i].
// basis_combo[i] expresses basis generator i as
//   theta_coeff * theta + sum_j named_coeff[j] * named[j].
struct KGroup {
    int k = 0;
    i64 n = 0;
    GroupPtr group;
    GroupElement theta;
    i64 theta_order = 0;
    std::vector<GroupElement> named;
    std::vector<std::pair<i64, std::vector<i64>>> basis_combo;
};

// Constructs K for k in [2,6], n >= 2, branch by branch on the 2-adic
// valuation of n; validates every presentation relation on the way out.
KGroup build_K(int k, i64 n);

// Subgroup generated by the named elements (the bottom-sphere image),
// enumerated exhaustively, sorted; always contains 0.
std::vector<GroupElement> image_subgroup(const KGroup& K);

// |i_*(K)|: n for k=2,4 or odd n, else 2n. With |image_subgroup| this
// multiplies out to |K.group| (exactness).
i64 istar_order(int k, i64 n);

}  // namespace spherefib
