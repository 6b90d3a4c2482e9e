// JSON and text forms of everything the command-line tool prints.
//
// Every JSON document is an object with a "kind" member and validates
// against data/report.schema.json. Wall-clock figures live under a separate
// top-level "timing" member (left out when timing is false), so two runs can
// be compared byte for byte without it. Sets, partitions, maps and
// permutations are written in the notation the parsers read back.
//
// Text output is a rendering of the same document: nested members become
// indented "key: value" lines, and suite reports get one status line per
// row ahead of their details.

#ifndef UTG_REPORT_HPP_
#define UTG_REPORT_HPP_

#include <string>

#include "json.hpp"
#include "utg/reduction.hpp"
#include "utg/utp.hpp"

namespace utg {

  using Json = nlohmann::ordered_json;

  Json to_json(GroupReport const& report, bool timing = true);
  // Several suites in one document, in the order given.
  Json to_json(std::vector<SuiteReport> const& suites, bool timing = true);

  Json witness_json(TransversalWitness const& w);

  std::string render_text(Json const& doc);

  // The document as text: pretty JSON or render_text.
  std::string format_document(Json const& doc, bool as_json);

}  // namespace utg

#endif  // UTG_REPORT_HPP_
