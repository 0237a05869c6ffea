#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dimred/decision.hpp"
#include "dimred/frsd.hpp"

namespace dimred {

/**
 * Serialize a report as one JSON object whose keys are exactly the report
 * field names. Weight lists become objects mapping name -> weight, in rank
 * order. Numbers are written at full precision.
 */
std::string report_to_json(const DecisionReport& report);
DecisionReport report_from_json(const std::string& text);

/// rank,feature,weight
void write_weights_csv(std::ostream& out, const FeatureWeights& weights);

/// subset,k,si with 1-based column numbers joined by commas in the subset cell.
void write_subset_scores_csv(std::ostream& out, const std::vector<SubsetScore>& scores);

/// The ten report items as aligned text, numbers to 4 decimals.
std::string format_report_text(const DecisionReport& report);

}  // namespace dimred
