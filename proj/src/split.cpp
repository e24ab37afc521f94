#include "tabforge/split.hpp"

#include "tabforge/rng.hpp"

#include <algorithm>
#include <cmath>

namespace tabforge::core {

SplitIndices train_test_split(const IntVector& target, double ratio, std::uint64_t seed,
                              bool stratified) {
    const Index n = target.size();
    if (!(ratio > 0.0 && ratio < 1.0)) {
        fail("DegenerateRatio", "split ratio must lie strictly between 0 and 1");
    }
    if (n < 2) fail("TooFewRows", "need at least 2 rows to split");

    // +1e-9 absorbs binary representation error in ratio * n
    const auto n_train = static_cast<Index>(std::floor(ratio * static_cast<double>(n) + 1e-9));

    SplitIndices out;
    out.seed = seed;
    out.ratio = ratio;
    Rng rng(derive_seed(seed, 1, 0));

    if (!stratified) {
        std::vector<Index> order(static_cast<std::size_t>(n));
        for (Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
        rng.shuffle(order);
        out.train.assign(order.begin(), order.begin() + n_train);
        out.test.assign(order.begin() + n_train, order.end());
    } else {
        std::vector<std::vector<Index>> members(2);
        for (Index i = 0; i < n; ++i) members[static_cast<std::size_t>(target[i])].push_back(i);
        if (members[0].empty() || members[1].empty()) {
            fail("EmptyClass", "stratified split requires both classes present");
        }
        // floor per class, then hand the leftover train slots to the classes
        // with the largest fractional remainder
        std::vector<Index> take(2);
        std::vector<double> remainder(2);
        Index assigned = 0;
        for (int c = 0; c < 2; ++c) {
            const double exact = ratio * static_cast<double>(members[c].size());
            take[c] = static_cast<Index>(std::floor(exact + 1e-9));
            remainder[c] = exact - static_cast<double>(take[c]);
            assigned += take[c];
        }
        for (Index deficit = n_train - assigned; deficit > 0; --deficit) {
            const int c = (remainder[0] >= remainder[1]) ? 0 : 1;
            ++take[c];
            remainder[c] = -1.0;
        }
        for (int c = 0; c < 2; ++c) {
            rng.shuffle(members[c]);
            out.train.insert(out.train.end(), members[c].begin(), members[c].begin() + take[c]);
            out.test.insert(out.test.end(), members[c].begin() + take[c], members[c].end());
        }
    }

    std::sort(out.train.begin(), out.train.end());
    std::sort(out.test.begin(), out.test.end());
    return out;
}

std::pair<Matrix, IntVector> oversample_minority(const Matrix& features, const IntVector& target,
                                                 std::uint64_t seed) {
    const Index n = target.size();
    std::vector<Index> positives, negatives;
    for (Index i = 0; i < n; ++i) {
        (target[i] == 1 ? positives : negatives).push_back(i);
    }
    if (positives.empty() || negatives.empty()) {
        fail("SingleClass", "oversampling needs both classes present");
    }

    const auto& minority = positives.size() < negatives.size() ? positives : negatives;
    const auto extra =
        static_cast<Index>(std::max(positives.size(), negatives.size()) - minority.size());

    Matrix out_features(n + extra, features.cols());
    IntVector out_target(n + extra);
    out_features.topRows(n) = features;
    out_target.head(n) = target;

    Rng rng(derive_seed(seed, 2, 0));
    for (Index k = 0; k < extra; ++k) {
        const Index pick = minority[static_cast<std::size_t>(rng.uniform_index(minority.size()))];
        out_features.row(n + k) = features.row(pick);
        out_target[n + k] = target[pick];
    }
    return {std::move(out_features), std::move(out_target)};
}

} // namespace tabforge::core
