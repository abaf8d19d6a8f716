#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace spherefib {

using i64 = std::int64_t;

// Direct sum of cyclic groups Z_{m_1} + ... + Z_{m_r}; order-1 slots allowed.
class AbelianGroup {
public:
    explicit AbelianGroup(std::vector<i64> orders);
    const std::vector<i64>& orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }
    i64 size() const { return size_; }

private:
    std::vector<i64> orders_;
    i64 size_;
};

using GroupPtr = std::shared_ptr<const AbelianGroup>;

// Coefficient vector against the group's cyclic basis, reduced to [0, m_i).
struct GroupElement {
    GroupPtr group;
    std::vector<i64> coeffs;

    bool operator==(const GroupElement& o) const { return coeffs == o.coeffs; }
    bool operator!=(const GroupElement& o) const { return coeffs != o.coeffs; }
    bool operator<(const GroupElement& o) const { return coeffs < o.coeffs; }
};

GroupPtr make_group(std::vector<i64> orders);
GroupElement make_element(GroupPtr g, std::vector<i64> coeffs);  // reduces mod orders
GroupElement zero_element(GroupPtr g);

GroupElement add(const GroupElement& x, const GroupElement& y);
GroupElement scale(i64 c, const GroupElement& x);
i64 element_order(const GroupElement& x);

// Endomorphism given by images of the cyclic basis generators.
class Endo {
public:
    Endo(GroupPtr g, std::vector<GroupElement> images);
    const GroupPtr& group() const { return group_; }
    const std::vector<GroupElement>& images() const { return images_; }
    GroupElement apply(const GroupElement& x) const;

private:
    GroupPtr group_;
    std::vector<GroupElement> images_;
};

// Checked construction: rejects images with m_i * images[i] != 0.
Endo hom_from_images(GroupPtr g, std::vector<GroupElement> images);

// Orbit partition of carrier under the closure of the generator set
// (breadth-first saturation; generators need not include inverses).
// Blocks sorted by their lexicographically minimal element, elements sorted
// within each block. Throws if some generator leaves the carrier.
std::vector<std::vector<GroupElement>> orbits(const std::vector<GroupElement>& carrier,
                                              const std::vector<Endo>& generators);

}  // namespace spherefib
