#include "spherefib/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace spherefib {

AbelianGroup::AbelianGroup(std::vector<i64> orders) : orders_(std::move(orders)) {
    size_ = 1;
    for (i64 m : orders_) {
        if (m <= 0) throw std::invalid_argument("AbelianGroup: cyclic orders must be positive");
        size_ *= m;
    }
}

GroupPtr make_group(std::vector<i64> orders) {
    return std::make_shared<AbelianGroup>(std::move(orders));
}

namespace {

void check_same_group(const GroupElement& x, const GroupElement& y) {
    if (x.group == y.group) return;
    if (x.group && y.group && x.group->orders() == y.group->orders()) return;
    throw std::invalid_argument("group mismatch between elements");
}

i64 mod_reduce(i64 c, i64 m) {
    c %= m;
    return c < 0 ? c + m : c;
}

}  // namespace

GroupElement make_element(GroupPtr g, std::vector<i64> coeffs) {
    if (!g) throw std::invalid_argument("make_element: null group");
    if (coeffs.size() != g->rank())
        throw std::invalid_argument("make_element: coefficient count != group rank");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = mod_reduce(coeffs[i], g->orders()[i]);
    return GroupElement{std::move(g), std::move(coeffs)};
}

GroupElement zero_element(GroupPtr g) {
    if (!g) throw std::invalid_argument("zero_element: null group");
    std::vector<i64> zeros(g->rank(), 0);
    return GroupElement{std::move(g), std::move(zeros)};
}

GroupElement add(const GroupElement& x, const GroupElement& y) {
    check_same_group(x, y);
    GroupElement out = x;
    const auto& ords = x.group->orders();
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = (out.coeffs[i] + y.coeffs[i]) % ords[i];
    return out;
}

GroupElement scale(i64 c, const GroupElement& x) {
    GroupElement out = x;
    const auto& ords = x.group->orders();
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = mod_reduce(mod_reduce(c, ords[i]) * x.coeffs[i], ords[i]);
    return out;
}

i64 element_order(const GroupElement& x) {
    i64 ord = 1;
    const auto& ords = x.group->orders();
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
        i64 ci = ords[i] / std::gcd(ords[i], x.coeffs[i]);
        ord = std::lcm(ord, ci);
    }
    return ord;
}

Endo::Endo(GroupPtr g, std::vector<GroupElement> images)
    : group_(std::move(g)), images_(std::move(images)) {
    if (!group_) throw std::invalid_argument("Endo: null group");
    if (images_.size() != group_->rank())
        throw std::invalid_argument("Endo: need one image per basis generator");
    for (const auto& im : images_)
        if (im.group != group_ && im.group->orders() != group_->orders())
            throw std::invalid_argument("Endo: image from a different group");
}

GroupElement Endo::apply(const GroupElement& x) const {
    if (x.group != group_ && x.group->orders() != group_->orders())
        throw std::invalid_argument("Endo::apply: group mismatch");
    const auto& ords = group_->orders();
    std::vector<i64> acc(ords.size(), 0);
    for (std::size_t i = 0; i < ords.size(); ++i) {
        i64 xi = x.coeffs[i];
        if (!xi) continue;
        const auto& im = images_[i].coeffs;
        for (std::size_t j = 0; j < ords.size(); ++j)
            acc[j] = (acc[j] + xi * im[j]) % ords[j];
    }
    return GroupElement{x.group, std::move(acc)};
}

Endo hom_from_images(GroupPtr g, std::vector<GroupElement> images) {
    Endo e(g, std::move(images));
    const auto& ords = g->orders();
    for (std::size_t i = 0; i < ords.size(); ++i) {
        GroupElement killed = scale(ords[i], e.images()[i]);
        if (element_order(killed) != 1)
            throw std::invalid_argument("hom_from_images: m_i * images[" + std::to_string(i) +
                                        "] != 0, map not well defined");
    }
    return e;
}

std::vector<std::vector<GroupElement>> orbits(const std::vector<GroupElement>& carrier,
                                              const std::vector<Endo>& generators) {
    std::vector<std::vector<GroupElement>> out;
    if (carrier.empty()) return out;
    const GroupPtr& g = carrier.front().group;
    const auto& ords = g->orders();
    std::vector<i64> stride(ords.size(), 1);
    for (std::size_t i = 1; i < ords.size(); ++i) stride[i] = stride[i - 1] * ords[i - 1];
    auto encode = [&](const std::vector<i64>& c) {
        i64 key = 0;
        for (std::size_t i = 0; i < c.size(); ++i) key += c[i] * stride[i];
        return key;
    };

    std::vector<GroupElement> elems = carrier;
    for (const auto& e : elems) check_same_group(e, carrier.front());
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

    std::unordered_map<i64, std::size_t> index;
    index.reserve(elems.size() * 2);
    for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(encode(elems[i].coeffs), i);

    std::vector<char> seen(elems.size(), 0);
    for (std::size_t start = 0; start < elems.size(); ++start) {
        if (seen[start]) continue;
        // elems is sorted, so the BFS root is its block's lex-min representative
        std::vector<std::size_t> block{start};
        seen[start] = 1;
        for (std::size_t qi = 0; qi < block.size(); ++qi) {
            const GroupElement& x = elems[block[qi]];
            for (const Endo& f : generators) {
                GroupElement y = f.apply(x);
                auto it = index.find(encode(y.coeffs));
                if (it == index.end())
                    throw std::domain_error("orbits: carrier not closed under a generator");
                if (!seen[it->second]) {
                    seen[it->second] = 1;
                    block.push_back(it->second);
                }
            }
        }
        std::sort(block.begin(), block.end());
        std::vector<GroupElement> b;
        b.reserve(block.size());
        for (std::size_t i : block) b.push_back(elems[i]);
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace spherefib
