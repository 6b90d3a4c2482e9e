#include "utg/report.hpp"

#include <sstream>

namespace utg {

  namespace {

    Json property_json(PropertyResult const& p) {
      Json out;
      out["outcome"] = to_string(p.outcome);
      out["checked"] = p.checked;
      if (p.representative) {
        out["representative"] = to_string(*p.representative);
      }
      if (p.witness) {
        out["witness"] = to_string(*p.witness);
      }
      if (!p.reason.empty()) {
        out["reason"] = p.reason;
      }
      return out;
    }

    bool is_scalar(Json const& j) {
      return !j.is_object() && !j.is_array();
    }

    std::string scalar_text(Json const& j) {
      if (j.is_string()) {
        return j.get<std::string>();
      }
      if (j.is_null()) {
        return "none";
      }
      return j.dump();
    }

    void render(Json const& j, std::string const& indent, std::ostream& out) {
      if (j.is_object()) {
        for (auto const& [key, value] : j.items()) {
          if (is_scalar(value)) {
            out << indent << key << ": " << scalar_text(value) << '\n';
          } else if (value.empty()) {
            out << indent << key << ": " << (value.is_array() ? "[]" : "{}")
                << '\n';
          } else {
            out << indent << key << ":\n";
            render(value, indent + "  ", out);
          }
        }
        return;
      }
      if (j.is_array()) {
        for (auto const& value : j) {
          if (is_scalar(value)) {
            out << indent << "- " << scalar_text(value) << '\n';
          } else {
            out << indent << "-\n";
            render(value, indent + "  ", out);
          }
        }
        return;
      }
      out << indent << scalar_text(j) << '\n';
    }

    void render_suites(Json const& doc, std::ostream& out) {
      out << "kind: " << doc["kind"].get<std::string>() << '\n';
      for (auto const& suite : doc["suites"]) {
        out << "suite " << suite["suite"].get<std::string>() << ": "
            << suite["counts"]["PASS"] << " PASS, " << suite["counts"]["FAIL"]
            << " FAIL, " << suite["counts"]["SKIPPED"] << " SKIPPED, "
            << suite["counts"]["REFUSED"] << " REFUSED (exit "
            << suite["exit_code"] << ")\n";
        for (auto const& row : suite["rows"]) {
          auto group = row["group"].get<std::string>();
          out << "  " << row["status"].get<std::string>() << "  "
              << (group.empty() ? "-" : group) << " (degree "
              << row["degree"] << ")  " << row["check"].get<std::string>()
              << ": expected " << row["expected"].get<std::string>()
              << ", observed " << row["observed"].get<std::string>() << '\n';
          for (auto const& [key, value] : row["details"].items()) {
            out << "      " << key << ": " << value.get<std::string>() << '\n';
          }
        }
      }
      out << "exit_code: " << doc["exit_code"] << '\n';
      if (doc.contains("timing")) {
        out << "timing:\n";
        render(doc["timing"], "  ", out);
      }
    }

  }  // namespace

  Json witness_json(TransversalWitness const& w) {
    Json out;
    out["set"] = to_string(w.set);
    out["partition"] = to_string(w.partition);
    return out;
  }

  Json to_json(GroupReport const& report, bool timing) {
    Json out;
    out["kind"] = "group-report";
    out["group"] = {{"name", report.name},
                    {"degree", report.degree},
                    {"order", to_string(report.order)}};
    Json utp;
    utp["outcome"] = to_string(report.utp);
    if (report.utp_witness) {
      utp["witness"] = witness_json(*report.utp_witness);
    }
    if (!report.utp_reason.empty()) {
      utp["reason"] = report.utp_reason;
    }
    out["utp"] = utp;
    Json verdicts = Json::object();
    if (report.idempotent_generated) {
      verdicts["idempotent_generated"] = to_string(*report.idempotent_generated);
    }
    if (report.regular) {
      verdicts["regular"] = to_string(*report.regular);
    }
    out["verdicts"] = verdicts;
    Json ranks = Json::array();
    for (auto const& rr : report.ranks) {
      Json r;
      r["rank"] = rr.rank;
      r["image_orbits"] = rr.image_orbits;
      r["kernel_orbits"] = rr.kernel_orbits;
      r["representatives"] = rr.representatives;
      if (!rr.reason.empty()) {
        r["reason"] = rr.reason;
      }
      if (rr.idempotent_generated) {
        r["idempotent_generated"] = property_json(*rr.idempotent_generated);
      }
      if (rr.regular) {
        r["regular"] = property_json(*rr.regular);
      }
      ranks.push_back(r);
    }
    out["ranks"] = ranks;
    if (timing) {
      out["timing"] = {{"seconds", report.seconds}};
    }
    return out;
  }

  Json to_json(std::vector<SuiteReport> const& suites, bool timing) {
    Json out;
    out["kind"] = "suite-run";
    Json list = Json::array();
    Json times = Json::array();
    bool failed = false;
    bool refused = false;
    for (auto const& s : suites) {
      Json suite;
      suite["suite"] = s.suite;
      Json counts;
      for (auto st : {RowStatus::pass, RowStatus::fail, RowStatus::skipped,
                      RowStatus::refused}) {
        counts[to_string(st)] = s.count(st);
      }
      suite["counts"] = counts;
      suite["exit_code"] = s.exit_code();
      Json rows = Json::array();
      Json row_times = Json::array();
      for (auto const& row : s.rows) {
        Json r;
        r["group"] = row.group;
        r["degree"] = row.degree;
        r["check"] = row.check;
        r["expected"] = row.expected;
        r["observed"] = row.observed;
        r["status"] = to_string(row.status);
        Json details = Json::object();
        for (auto const& [k, v] : row.details) {
          details[k] = v;
        }
        r["details"] = details;
        rows.push_back(r);
        row_times.push_back(row.seconds);
      }
      suite["rows"] = rows;
      list.push_back(suite);
      times.push_back({{"suite", s.suite},
                       {"seconds", s.seconds},
                       {"rows", row_times}});
      failed = failed || s.exit_code() == 1;
      refused = refused || s.exit_code() == 3;
    }
    out["suites"] = list;
    // A failure outranks a refusal.
    out["exit_code"] = failed ? 1 : refused ? 3 : 0;
    if (timing) {
      out["timing"] = {{"suites", times}};
    }
    return out;
  }

  std::string render_text(Json const& doc) {
    std::ostringstream out;
    if (doc.value("kind", "") == "suite-run") {
      render_suites(doc, out);
    } else {
      render(doc, "", out);
    }
    return out.str();
  }

  std::string format_document(Json const& doc, bool as_json) {
    return as_json ? doc.dump(2) + "\n" : render_text(doc);
  }

}  // namespace utg
