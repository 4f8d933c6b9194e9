#include "nlemb/eval.hpp"

#include "nlemb/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

namespace nlemb {

namespace {

double row_distance(RetrievalDistance kind, std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    switch (kind) {
        case RetrievalDistance::l2_on_embedding:
        case RetrievalDistance::l2_raw:
            for (std::size_t c = 0; c < a.size(); ++c) {
                const double diff = a[c] - b[c];
                sum += diff * diff;
            }
            return sum;
        case RetrievalDistance::l1_raw:
            for (std::size_t c = 0; c < a.size(); ++c) {
                sum += std::abs(a[c] - b[c]);
            }
            return sum;
        case RetrievalDistance::chi2_raw:
            for (std::size_t c = 0; c < a.size(); ++c) {
                const double denom = std::abs(a[c]) + std::abs(b[c]);
                if (denom > 0.0) {
                    const double diff = a[c] - b[c];
                    sum += diff * diff / denom;
                }
            }
            return sum;
    }
    return sum;
}

}  // namespace

EvalReport retrieve(const FeatureMatrix& embedded, const LabelVector& labels,
                    const RetrievalConfig& cfg) {
    const Index n = embedded.rows();
    if (n < 2) {
        throw ValidationError("retrieve: need at least 2 rows");
    }
    if (labels.size() != static_cast<std::size_t>(n)) {
        throw DimensionMismatch("retrieve: labels length " + std::to_string(labels.size()) +
                                " does not match " + std::to_string(n) + " rows");
    }
    if (cfg.k_values.empty()) {
        throw ValidationError("retrieve: no K cutoffs given");
    }
    std::vector<int> ks = cfg.k_values;
    std::sort(ks.begin(), ks.end());
    if (ks.front() < 1 || std::adjacent_find(ks.begin(), ks.end()) != ks.end()) {
        throw ValidationError("retrieve: K cutoffs must be distinct and >= 1");
    }
    if (ks.back() > n - 1) {
        throw KExceedsGallery("retrieve: K = " + std::to_string(ks.back()) +
                              " exceeds gallery size " + std::to_string(n - 1));
    }
    const int k_max = ks.back();

    // class -> per-K sum of precisions, and query counts.
    std::map<Label, std::vector<double>> class_sums;
    std::map<Label, std::size_t> class_queries;
    for (const Label l : labels) {
        class_sums.emplace(l, std::vector<double>(ks.size(), 0.0));
        class_queries.emplace(l, 0);
    }

    std::vector<std::pair<double, Index>> order;
    order.reserve(n - 1);
    for (Index q = 0; q < n; ++q) {
        order.clear();
        const auto query = embedded.row_span(q);
        for (Index g = 0; g < n; ++g) {
            if (g == q) {
                continue;
            }
            order.emplace_back(row_distance(cfg.distance, query, embedded.row_span(g)), g);
        }
        std::partial_sort(order.begin(), order.begin() + k_max, order.end());

        const Label cls = labels[static_cast<std::size_t>(q)];
        int hits = 0;
        std::size_t k_slot = 0;
        auto& sums = class_sums[cls];
        for (int rank = 1; rank <= k_max; ++rank) {
            if (labels[static_cast<std::size_t>(order[rank - 1].second)] == cls) {
                ++hits;
            }
            if (rank == ks[k_slot]) {
                sums[k_slot] += static_cast<double>(hits) / static_cast<double>(rank);
                ++k_slot;
            }
        }
        ++class_queries[cls];
    }

    EvalReport report;
    report.num_queries = static_cast<std::size_t>(n);
    for (std::size_t s = 0; s < ks.size(); ++s) {
        double total = 0.0;
        std::size_t classes = 0;
        for (const auto& [cls, sums] : class_sums) {
            const std::size_t q = class_queries[cls];
            if (q == 0) {
                continue;
            }
            const double prec = sums[s] / static_cast<double>(q);
            report.per_class_precision[ks[s]][cls] = prec;
            total += prec;
            ++classes;
        }
        report.mprec[ks[s]] = total / static_cast<double>(classes);
    }
    return report;
}

EvalReport eval_pipeline(const AnyModel& model, const FeatureMatrix& raw_features,
                         const LabelVector& labels, const RetrievalConfig& cfg) {
    FeatureMatrix embedded;
    embedded.values = embed_all(model, raw_features);
    return retrieve(embedded, labels, cfg);
}

void write_report_csv(const EvalReport& report, const std::string& per_class_path,
                      const std::string& summary_path) {
    std::ofstream per_class(per_class_path, std::ios::trunc);
    if (!per_class) {
        throw IoError("cannot open for writing: " + per_class_path);
    }
    per_class << "k,class,precision\n";
    for (const auto& [k, by_class] : report.per_class_precision) {
        for (const auto& [cls, prec] : by_class) {
            per_class << k << ',' << cls << ',' << prec << '\n';
        }
    }
    if (!per_class) {
        throw IoError("write failed: " + per_class_path);
    }

    std::ofstream summary(summary_path, std::ios::trunc);
    if (!summary) {
        throw IoError("cannot open for writing: " + summary_path);
    }
    summary << "k,mprec\n";
    for (const auto& [k, mprec] : report.mprec) {
        summary << k << ',' << mprec << '\n';
    }
    if (!summary) {
        throw IoError("write failed: " + summary_path);
    }
}

}  // namespace nlemb
