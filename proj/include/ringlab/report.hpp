#ifndef RINGLAB_REPORT_HPP_
#define RINGLAB_REPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "ringlab/claims.hpp"

namespace ringlab {

using Json = nlohmann::ordered_json;

// Classification document: ring header, element summary, every report
// flag with its witness. The text rendering is generated from the same
// document, so both outputs always agree.
Json classify_document(RingAnalysis& a);
std::string classify_text(const Json& doc);

Json claim_report_json(const ClaimReport& rep);
Json verify_document(const std::vector<ClaimReport>& reps,
                     const Catalog& cat);
std::string verify_text(const std::vector<ClaimReport>& reps);
// 0 = clean run, 2 = violations present, 3 = budget skips only.
int verify_exit_code(const std::vector<ClaimReport>& reps);

Json lattice_document(RingAnalysis& a);
std::string lattice_text(const Json& doc);

Json module_document(const std::string& name, const FinModule& M,
                     const Budgets& b);
std::string module_text(const Json& doc);

Json decompositions_document(const FinRing& R, Idx a, DecompKind kind,
                             const std::vector<Decomposition>& ds);
std::string decompositions_text(const Json& doc);

}  // namespace ringlab

#endif  // RINGLAB_REPORT_HPP_
