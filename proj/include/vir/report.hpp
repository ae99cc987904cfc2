#pragma once

// Verification reports: ordered records with a status each, rendered as text,
// JSON (schema_version 1) or LaTeX.

#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "vir/exact/format.hpp"

namespace vir {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Skip, Info };

inline std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
    case Status::Info: return "info";
  }
  return "fail";
}

inline Status parse_status(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "skip") return Status::Skip;
  if (s == "info") return Status::Info;
  throw std::invalid_argument("unknown status " + s);
}

struct Record {
  Json fields = Json::object();  // everything except status and timing
  Status status = Status::Info;
  double seconds = 0;
  std::string latex;  // optional LaTeX rendering of the main expression
};

inline Status verdict(bool ok) { return ok ? Status::Pass : Status::Fail; }

struct Report {
  std::string command;
  Json config = Json::object();
  std::vector<Record> records;
  std::vector<std::string> notes;

  /// Skipped and informational records never fail a run.
  bool pass() const {
    for (const auto& r : records)
      if (r.status == Status::Fail) return false;
    return true;
  }
  Record& add(Json fields, Status status, double seconds = 0) {
    records.push_back({std::move(fields), status, seconds, {}});
    return records.back();
  }
};

inline constexpr int kSchemaVersion = 1;

/// [[u_exponent, ["num", "den"]], ...] in descending exponent, u = t^{1/2}.
/// Numerator and denominator are decimal strings so big integers survive.
inline Json laurent_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    out.push_back(Json::array({it->exp, Json::array({it->coef.get_num().get_str(), it->coef.get_den().get_str()})}));
  return out;
}

inline LaurentPoly laurent_from_json(const Json& j) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    const auto& c = t.at(1);
    terms.push_back({t.at(0).get<int>(), make_rat(BigInt(c.at(0).get<std::string>()), BigInt(c.at(1).get<std::string>()))});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

inline Json to_json(const Report& rep, bool timings = false) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = rep.command;
  out["config"] = rep.config;
  out["status"] = rep.pass() ? "pass" : "fail";
  Json recs = Json::array();
  for (const auto& r : rep.records) {
    Json j = r.fields;
    j["status"] = status_name(r.status);
    if (timings) j["seconds"] = r.seconds;
    recs.push_back(std::move(j));
  }
  out["records"] = std::move(recs);
  out["notes"] = rep.notes;
  return out;
}

inline Report report_from_json(const Json& j) {
  if (j.at("schema_version").get<int>() != kSchemaVersion) throw std::invalid_argument("unsupported schema_version");
  Report rep;
  rep.command = j.at("command").get<std::string>();
  rep.config = j.at("config");
  for (const auto& r : j.at("records")) {
    Record rec;
    for (auto it = r.begin(); it != r.end(); ++it) {
      if (it.key() == "status")
        rec.status = parse_status(it.value().get<std::string>());
      else if (it.key() == "seconds")
        rec.seconds = it.value().get<double>();
      else
        rec.fields[it.key()] = it.value();
    }
    rep.records.push_back(std::move(rec));
  }
  for (const auto& n : j.at("notes")) rep.notes.push_back(n.get<std::string>());
  return rep;
}

namespace detail {

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace detail

inline std::string to_text(const Report& rep, bool timings = false) {
  std::ostringstream os;
  os << rep.command << ": " << (rep.pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& r : rep.records) {
    os << "  [" << status_name(r.status) << "]";
    for (auto it = r.fields.begin(); it != r.fields.end(); ++it) {
      const std::string v = detail::scalar_text(it.value());
      // Long values go on their own line so the verdict column stays readable.
      if (v.size() > 60)
        os << "\n      " << it.key() << " = " << v;
      else
        os << " " << it.key() << "=" << v;
    }
    if (timings) os << " (" << std::fixed << std::setprecision(3) << r.seconds << " s)";
    os << "\n";
  }
  for (const auto& n : rep.notes) os << "  note: " << n << "\n";
  return os.str();
}

inline std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#') out += '\\';
    out += c;
  }
  return out;
}

/// Records carrying a LaTeX expression print it alone; the rest become a tabular.
inline std::string to_latex(const Report& rep) {
  std::ostringstream os;
  std::vector<const Record*> rows;
  for (const auto& r : rep.records) {
    if (!r.latex.empty())
      os << r.latex << "\n";
    else
      rows.push_back(&r);
  }
  if (rows.empty()) return os.str();
  std::vector<std::string> keys;
  for (auto it = rows.front()->fields.begin(); it != rows.front()->fields.end(); ++it) keys.push_back(it.key());
  os << "\\begin{tabular}{" << std::string(keys.size() + 1, 'l') << "}\n";
  for (const auto& k : keys) os << latex_escape(k) << " & ";
  os << "status \\\\\n\\hline\n";
  for (const auto* r : rows) {
    for (const auto& k : keys) os << "$" << (r->fields.contains(k) ? detail::scalar_text(r->fields.at(k)) : "") << "$ & ";
    os << status_name(r->status) << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

}  // namespace vir
