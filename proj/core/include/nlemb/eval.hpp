#pragma once

#include "nlemb/any_model.hpp"
#include "nlemb/types.hpp"

#include <map>
#include <string>
#include <vector>

namespace nlemb {

enum class RetrievalDistance { l2_on_embedding, l1_raw, l2_raw, chi2_raw };

struct RetrievalConfig {
    std::vector<int> k_values = {1, 10, 20, 30};
    RetrievalDistance distance = RetrievalDistance::l2_on_embedding;
};

struct EvalReport {
    // K -> class -> mean precision@K over that class's queries.
    std::map<int, std::map<Label, double>> per_class_precision;
    // K -> unweighted mean over classes.
    std::map<int, double> mprec;
    std::size_t num_queries = 0;
};

/// Leave-one-out category retrieval: every row queries the remaining rows,
/// ranked by ascending distance with ties broken by ascending row index.
/// precision@K counts same-class rows in the top K. Throws KExceedsGallery
/// when any K exceeds N-1.
EvalReport retrieve(const FeatureMatrix& embedded, const LabelVector& labels,
                    const RetrievalConfig& cfg);

/// Embeds every row with the model, then runs retrieve on the embeddings.
EvalReport eval_pipeline(const AnyModel& model, const FeatureMatrix& raw_features,
                         const LabelVector& labels, const RetrievalConfig& cfg);

/// Per-class CSV (k,class,precision) and summary CSV (k,mprec).
void write_report_csv(const EvalReport& report, const std::string& per_class_path,
                      const std::string& summary_path);

}  // namespace nlemb
