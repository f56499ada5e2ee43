#include "memos/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "memos/util.hpp"

namespace memos {

namespace {

std::string fmt_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return buf;
}

std::string fmt_fixed(double v, const char* spec) {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

}  // namespace

std::string report_csv(const EvalReport& report) {
  std::ostringstream os;
  os << "family,model,mode,f_max_hz,latency_s,energy_j,ed_js,width,seed,param_hash\n";
  for (const auto& r : report.rows) {
    os << r.family << ',' << r.model << ',' << r.mode << ',' << fmt_sci(r.f_max_hz) << ','
       << fmt_sci(r.latency_s) << ',' << fmt_sci(r.energy_j) << ',' << fmt_sci(r.ed_js) << ','
       << r.width << ',' << r.seed << ',' << to_hex(r.param_hash) << '\n';
  }
  return os.str();
}

EvalReport parse_report_csv(std::istream& is) {
  EvalReport report;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string body = trim(line);
    if (body.empty()) continue;
    if (lineno == 1 && body.rfind("family,", 0) == 0) continue;  // header
    auto fields = split(body, ',');
    if (fields.size() != 10)
      throw IoFailure("report line " + std::to_string(lineno) + ": expected 10 fields");
    ReportRow r;
    try {
      r.family = fields[0];
      r.model = fields[1];
      r.mode = fields[2];
      r.f_max_hz = std::stod(fields[3]);
      r.latency_s = std::stod(fields[4]);
      r.energy_j = std::stod(fields[5]);
      r.ed_js = std::stod(fields[6]);
      r.width = std::stoi(fields[7]);
      r.seed = std::stoull(fields[8]);
      r.param_hash = std::stoull(fields[9], nullptr, 16);
    } catch (...) {
      throw IoFailure("report line " + std::to_string(lineno) + ": malformed field");
    }
    report.rows.push_back(std::move(r));
  }
  return report;
}

EvalReport load_report_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open report " + path);
  return parse_report_csv(in);
}

std::string report_text(const EvalReport& report) {
  std::ostringstream os;
  os << "family  model             mode     width   f_max[MHz]   latency[ns]   energy[pJ]"
        "   ED[ns*pJ]   xprev   notes\n";
  const ReportRow* prev = nullptr;
  for (const auto& r : report.rows) {
    bool same_group = prev && prev->family == r.family && prev->model == r.model &&
                      prev->mode == r.mode;
    char line[240];
    std::string ratio = same_group && prev->energy_j > 0
                            ? fmt_fixed(r.energy_j / prev->energy_j, "%.2f")
                            : std::string("-");
    std::snprintf(line, sizeof line, "%-7s %-17s %-8s %5d %12s %13s %12s %11s %7s   %s\n",
                  r.family.c_str(), r.model.c_str(), r.mode.c_str(), r.width,
                  fmt_fixed(r.f_max_hz / 1e6, "%.4g").c_str(),
                  fmt_fixed(r.latency_s * 1e9, "%.4g").c_str(),
                  fmt_fixed(r.energy_j * 1e12, "%.4g").c_str(),
                  fmt_fixed(r.ed_js * 1e21, "%.4g").c_str(), ratio.c_str(),
                  r.extension ? "extension" : "");
    os << line;
    prev = &r;
  }
  return os.str();
}

EvalReport merge_reports(const std::vector<EvalReport>& reports) {
  EvalReport merged;
  for (const auto& r : reports)
    merged.rows.insert(merged.rows.end(), r.rows.begin(), r.rows.end());
  std::stable_sort(merged.rows.begin(), merged.rows.end(),
                   [](const ReportRow& a, const ReportRow& b) {
                     return std::tie(a.family, a.model, a.mode, a.width) <
                            std::tie(b.family, b.model, b.mode, b.width);
                   });
  // drop exact duplicates
  std::vector<ReportRow> unique;
  std::string last;
  for (auto& row : merged.rows) {
    std::string key = report_csv(EvalReport{{row}});
    if (key != last) unique.push_back(std::move(row));
    last = std::move(key);
  }
  merged.rows = std::move(unique);
  return merged;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot write " + path);
  out << content;
  if (!out) throw IoFailure("write failed for " + path);
}

}  // namespace memos
