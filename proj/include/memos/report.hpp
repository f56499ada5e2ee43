#pragma once

#include <iosfwd>
#include <string>

#include "memos/experiments.hpp"

namespace memos {

// CSV schema: family,model,mode,f_max_hz,latency_s,energy_j,ed_js,width,seed,param_hash
// Formatting is fixed so identical reports serialize to identical bytes.
std::string report_csv(const EvalReport& report);
EvalReport parse_report_csv(std::istream& is);
EvalReport load_report_csv(const std::string& path);

// Human rendering in the units of the published tables (MHz, ns, pJ, ns*pJ)
// with a per-width energy ratio column inside each family/model/mode group.
std::string report_text(const EvalReport& report);

// Union of the inputs, stable-sorted by (family, model, mode, width); exact
// duplicate rows collapse to one.
EvalReport merge_reports(const std::vector<EvalReport>& reports);

void write_file(const std::string& path, const std::string& content);  // IoFailure

}  // namespace memos
