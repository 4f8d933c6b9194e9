#include "nlemb/pairs.hpp"

#include "nlemb/errors.hpp"
#include "nlemb/rng.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace nlemb {

namespace {

// Member index lists per class, ordered by label value.
std::vector<std::vector<Index>> class_members(const LabelVector& labels) {
    std::map<Label, std::vector<Index>> by_label;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        by_label[labels[i]].push_back(static_cast<Index>(i));
    }
    std::vector<std::vector<Index>> out;
    out.reserve(by_label.size());
    for (auto& [label, members] : by_label) {
        out.push_back(std::move(members));
    }
    return out;
}

std::uint64_t pairs_within(std::uint64_t n) { return n * (n - 1) / 2; }

}  // namespace

std::uint64_t count_positive_pairs(const LabelVector& labels) {
    std::uint64_t total = 0;
    for (const auto& members : class_members(labels)) {
        total += pairs_within(members.size());
    }
    return total;
}

std::uint64_t count_negative_pairs(const LabelVector& labels) {
    const std::uint64_t n = labels.size();
    std::uint64_t same = 0;
    for (const auto& members : class_members(labels)) {
        const std::uint64_t c = members.size();
        same += c * c;
    }
    return (n * n - same) / 2;
}

PairSet generate_pairs(const LabelVector& labels, std::size_t budget, double pos_fraction,
                       std::uint64_t seed) {
    if (!(pos_fraction > 0.0 && pos_fraction < 1.0)) {
        throw ValidationError("generate_pairs: pos_fraction must lie in (0, 1)");
    }
    const auto classes = class_members(labels);
    if (classes.size() < 2) {
        throw NoNegativePairs("generate_pairs: need at least 2 classes for dissimilar pairs");
    }

    // Positive side: classes weighted by their distinct-pair count.
    std::vector<std::size_t> pos_class;
    std::vector<std::uint64_t> pos_cum;
    std::uint64_t pos_available = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const std::uint64_t w = pairs_within(classes[c].size());
        if (w > 0) {
            pos_class.push_back(c);
            pos_available += w;
            pos_cum.push_back(pos_available);
        }
    }
    if (pos_available == 0) {
        throw NoPositivePairs("generate_pairs: no class has 2 or more members");
    }

    // Negative side: class pairs weighted by the cross product of their sizes.
    std::vector<std::pair<std::size_t, std::size_t>> neg_class_pairs;
    std::vector<std::uint64_t> neg_cum;
    std::uint64_t neg_available = 0;
    for (std::size_t a = 0; a < classes.size(); ++a) {
        for (std::size_t b = a + 1; b < classes.size(); ++b) {
            neg_class_pairs.emplace_back(a, b);
            neg_available +=
                static_cast<std::uint64_t>(classes[a].size()) * classes[b].size();
            neg_cum.push_back(neg_available);
        }
    }

    const std::uint64_t available = pos_available + neg_available;
    const std::uint64_t total = std::min<std::uint64_t>(budget, available);
    std::uint64_t n_pos = static_cast<std::uint64_t>(
        std::llround(static_cast<double>(total) * pos_fraction));
    n_pos = std::min(n_pos, total);
    const std::uint64_t n_neg = total - n_pos;

    Rng rng(seed);
    PairSet out;
    out.pairs.reserve(total);

    for (std::uint64_t k = 0; k < n_pos; ++k) {
        const std::uint64_t w = rng.index(pos_available);
        const std::size_t slot =
            std::upper_bound(pos_cum.begin(), pos_cum.end(), w) - pos_cum.begin();
        const auto& members = classes[pos_class[slot]];
        const std::size_t a = rng.index(members.size());
        std::size_t b = rng.index(members.size() - 1);
        if (b >= a) {
            ++b;
        }
        out.pairs.push_back({members[a], members[b], +1});
    }
    out.pos_count = n_pos;

    for (std::uint64_t k = 0; k < n_neg; ++k) {
        const std::uint64_t w = rng.index(neg_available);
        const std::size_t slot =
            std::upper_bound(neg_cum.begin(), neg_cum.end(), w) - neg_cum.begin();
        const auto& [ca, cb] = neg_class_pairs[slot];
        const Index i = classes[ca][rng.index(classes[ca].size())];
        const Index j = classes[cb][rng.index(classes[cb].size())];
        out.pairs.push_back({i, j, -1});
    }
    out.neg_count = n_neg;

    return out;
}

}  // namespace nlemb
