#include "famsw/cli/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "famsw/errors.hpp"
#include "famsw/rational.hpp"

namespace famsw::cli {
namespace {

// "~0.333333333333" for non-integer rational strings, empty otherwise.
std::string approximation(const OJson& v) {
  if (!v.is_string()) return {};
  const std::string s = v.get<std::string>();
  if (s.find('/') == std::string::npos) return {};
  try {
    return "~" + to_decimal(parse_rational(s));
  } catch (const Error&) {
    return {};
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> columns(const JobReport& j, bool params) {
  std::vector<std::string> out;
  for (const Row& r : j.results) {
    for (const auto& [k, v] : (params ? r.params : r.values).items()) {
      if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    }
  }
  return out;
}

std::string cell(const OJson& obj, const std::string& key, bool decimal) {
  if (!obj.contains(key)) return "";
  std::string text = cell_text(obj[key]);
  if (decimal) {
    const std::string a = approximation(obj[key]);
    if (!a.empty()) text += " (" + a + ")";
  }
  return text;
}

std::string job_title(const JobReport& j) {
  std::string t = "job " + std::to_string(j.index) + ": " + j.job.value("cmd", std::string("?"));
  for (const auto& [k, v] : j.job.items()) {
    if (k == "cmd" || k == "sweep") continue;
    t += " " + k + "=" + cell_text(v);
  }
  return t;
}

std::string render_table(const Report& report, const RenderOptions& o) {
  std::ostringstream os;
  for (const JobReport& j : report.jobs) {
    os << "# " << job_title(j) << " [" << j.status << "]";
    if (o.timing) os << " " << std::fixed << std::setprecision(3) << j.seconds << " s";
    os << "\n";
    if (!j.error.empty()) os << "! error: " << j.error << "\n";
    for (const std::string& w : j.warnings) os << "! warning: " << w << "\n";
    if (j.results.empty()) continue;
    const auto pcols = columns(j, true);
    const auto vcols = columns(j, false);
    std::vector<std::string> header(pcols);
    header.insert(header.end(), vcols.begin(), vcols.end());
    std::vector<std::vector<std::string>> rows;
    for (const Row& r : j.results) {
      std::vector<std::string> row;
      for (const auto& c : pcols) row.push_back(cell(r.params, c, false));
      for (const auto& c : vcols) row.push_back(cell(r.values, c, o.decimal));
      rows.push_back(std::move(row));
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      width[c] = header[c].size();
      for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        os << (c ? "  " : "") << cells[c];
        if (c + 1 < cells.size()) os << std::string(width[c] - cells[c].size(), ' ');
      }
      os << "\n";
    };
    line(header);
    for (const auto& row : rows) line(row);
  }
  return os.str();
}

std::string render_csv(const Report& report, const RenderOptions& o) {
  std::ostringstream os;
  bool first = true;
  for (const JobReport& j : report.jobs) {
    if (!first) os << "\n";
    first = false;
    const auto pcols = columns(j, true);
    const auto vcols = columns(j, false);
    os << "job,cmd,status";
    for (const auto& c : pcols) os << "," << csv_escape(c);
    for (const auto& c : vcols) os << "," << csv_escape(c);
    os << "\n";
    const std::string prefix =
        std::to_string(j.index) + "," + csv_escape(j.job.value("cmd", std::string())) + "," + j.status;
    if (j.results.empty()) os << prefix << "\n";
    for (const Row& r : j.results) {
      os << prefix;
      for (const auto& c : pcols) os << "," << csv_escape(cell(r.params, c, false));
      for (const auto& c : vcols) os << "," << csv_escape(cell(r.values, c, o.decimal));
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace

bool Report::ok() const {
  return std::all_of(jobs.begin(), jobs.end(), [](const JobReport& j) { return j.status == "ok"; });
}

Format parse_format(std::string_view s) {
  if (s == "table") return Format::Table;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw Error(ErrorCode::ParseError, "unknown format '" + std::string(s) + "' (table, json, csv)");
}

std::string cell_text(const OJson& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < value.size(); ++i) out += (i ? "; " : "") + cell_text(value[i]);
    return out;
  }
  if (value.is_object()) {
    std::string out;
    for (const auto& [k, v] : value.items()) out += (out.empty() ? "" : "; ") + k + "=" + cell_text(v);
    return out;
  }
  return value.dump();
}

OJson to_json(const Report& report, const RenderOptions& o) {
  OJson out = OJson::object();
  out["version"] = report.version;
  out["jobs"] = OJson::array();
  for (const JobReport& j : report.jobs) {
    OJson jj = OJson::object();
    jj["index"] = j.index;
    jj["job"] = j.job;
    jj["status"] = j.status;
    if (!j.error.empty()) jj["error"] = j.error;
    jj["results"] = OJson::array();
    for (const Row& r : j.results) {
      OJson row = OJson::object();
      row["params"] = r.params;
      row["values"] = r.values;
      if (o.decimal) {
        OJson approx = OJson::object();
        for (const auto& [k, v] : r.values.items()) {
          const std::string a = approximation(v);
          if (!a.empty()) approx[k] = a;
        }
        if (!approx.empty()) row["approx"] = approx;
      }
      jj["results"].push_back(std::move(row));
    }
    jj["warnings"] = j.warnings;
    if (o.timing) jj["seconds"] = j.seconds;
    out["jobs"].push_back(std::move(jj));
  }
  return out;
}

std::string render(const Report& report, const RenderOptions& o) {
  switch (o.format) {
    case Format::Json:
      return to_json(report, o).dump(2) + "\n";
    case Format::Csv:
      return render_csv(report, o);
    case Format::Table:
      break;
  }
  return render_table(report, o);
}

Report parse_report(std::string_view json_text) {
  OJson doc;
  try {
    doc = OJson::parse(json_text);
    Report r;
    r.version = doc.at("version").get<std::string>();
    for (const OJson& jj : doc.at("jobs")) {
      JobReport j;
      j.index = jj.at("index").get<std::size_t>();
      j.job = jj.at("job");
      j.status = jj.at("status").get<std::string>();
      j.error = jj.value("error", std::string());
      for (const OJson& row : jj.at("results")) j.results.push_back({row.at("params"), row.at("values")});
      j.warnings = jj.at("warnings").get<std::vector<std::string>>();
      r.jobs.push_back(std::move(j));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("report: ") + e.what());
  }
}

}  // namespace famsw::cli
