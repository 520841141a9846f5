#include "ufe/export.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

#include "ufe/errors.hpp"

namespace ufe {

using nlohmann::json;

namespace {

json rows_json(const SolutionArray& array) {
  json rows = json::array();
  for (const Row& r : array.rows()) rows.push_back({r[0], r[1], r[2]});
  return rows;
}

json denominator_json(const BigInt& x) {
  if (x.fits_ulong_p()) return static_cast<std::uint64_t>(x.get_ui());
  return x.get_str();
}

Count read_count(const json& value, const std::string& where, bool positive) {
  if (!value.is_number_integer()) throw ParseError(where + ": expected an integer");
  if (value.is_number_unsigned()) {
    Count v = value.get<Count>();
    if (positive && v == 0) throw ParseError(where + ": expected a positive integer");
    return v;
  }
  const auto v = value.get<std::int64_t>();
  if (v < 0 || (positive && v == 0)) {
    throw ParseError(where + ": expected a " + (positive ? "positive" : "nonnegative") +
                     " integer, got " + std::to_string(v));
  }
  return static_cast<Count>(v);
}

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string dot_label(const SolutionArray& array) {
  std::string label;
  const auto& rows = array.rows();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (!label.empty()) label += "\\n";
    label += std::to_string((*it)[0]) + " " + std::to_string((*it)[1]) + " " +
             std::to_string((*it)[2]);
  }
  return label;
}

}  // namespace

std::string array_to_json(const SolutionArray& array) {
  json doc;
  doc["k"] = array.base().k();
  doc["rows"] = rows_json(array);
  return doc.dump();
}

json array_document(const SolutionArray& array) {
  json doc;
  doc["k"] = array.base().k();
  doc["rows"] = rows_json(array);
  doc["n"] = term_count(array);
  json denominators = json::array();
  for (const BigInt& x : solution_from_array(array)) denominators.push_back(denominator_json(x));
  doc["denominators"] = std::move(denominators);
  doc["nontrivial"] = is_nontrivial(array);
  doc["distinct"] = is_distinct(array);
  return doc;
}

SolutionArray array_from_document(const json& doc, std::optional<Count> expected_k,
                                  const std::string& where) {
  if (!doc.is_object()) throw ParseError(where + "/: expected an object");
  if (!doc.contains("k")) throw ParseError(where + "/k: missing");
  if (!doc.contains("rows")) throw ParseError(where + "/rows: missing");

  const Count k = read_count(doc["k"], where + "/k", true);
  if (expected_k && *expected_k != k) {
    throw KMismatchError("document has k = " + std::to_string(k) + ", expected " +
                         std::to_string(*expected_k));
  }
  const Base base = make_base(k);

  const json& rows_doc = doc["rows"];
  if (!rows_doc.is_array() || rows_doc.empty()) {
    throw ParseError(where + "/rows: expected a nonempty list");
  }
  std::vector<Row> rows;
  for (std::size_t b = 0; b < rows_doc.size(); ++b) {
    const std::string row_where = where + "/rows/" + std::to_string(b);
    const json& r = rows_doc[b];
    if (!r.is_array() || r.size() != 3) throw ParseError(row_where + ": expected 3 entries");
    Row row{};
    for (std::size_t a = 0; a < 3; ++a) {
      row[a] = read_count(r[a], row_where + "/" + std::to_string(a), false);
    }
    rows.push_back(row);
  }
  return SolutionArray(base, std::move(rows));
}

SolutionArray array_from_json(std::string_view text, std::optional<Count> expected_k) {
  return array_from_document(parse(text), expected_k);
}

std::vector<SolutionArray> arrays_from_json(std::string_view text,
                                            std::optional<Count> expected_k) {
  const json doc = parse(text);
  std::vector<SolutionArray> out;
  if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      out.push_back(array_from_document(doc[i], expected_k, "/" + std::to_string(i)));
    }
  } else {
    out.push_back(array_from_document(doc, expected_k));
  }
  return out;
}

std::string tree_to_dot(const EnumerationTree& tree) {
  std::ostringstream os;
  os << "digraph \"k=" << tree.base.k() << "\" {\n";
  os << "  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const SolutionArray& node = tree.nodes[i];
    os << "  n" << i << " [label=\"" << dot_label(node) << "\"";
    if (!is_nontrivial(node)) os << ", color=red, fontcolor=red";
    os << "];\n";
  }
  for (const TreeEdge& e : tree.edges) {
    os << "  n" << e.parent << " -> n" << e.child << " [label=\"" << move_number(e.move)
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string tree_to_json(const EnumerationTree& tree) {
  // One node or edge per line keeps large trees diffable.
  std::ostringstream os;
  os << "{\"k\":" << tree.base.k() << ",\n\"nodes\":[";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    os << (i ? ",\n " : "\n ") << array_document(tree.nodes[i]).dump();
  }
  os << "\n],\n\"edges\":[";
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    const TreeEdge& e = tree.edges[i];
    const json edge{{"child", e.child}, {"parent", e.parent}, {"move", move_number(e.move)}};
    os << (i ? ",\n " : "\n ") << edge.dump();
  }
  os << "\n]}\n";
  return os.str();
}

CountTable compute_count_table(std::span<const Count> ks, Count max_n, bool distinct,
                               const EnumerateOptions& options) {
  CountTable table{{ks.begin(), ks.end()}, max_n, distinct, {}};
  std::vector<Base> bases;
  for (Count k : ks) bases.push_back(make_base(k));
  table.values.assign(max_n, std::vector<Count>(ks.size(), 0));
  for (std::size_t i = 0; i < bases.size(); ++i) {
    std::vector<LevelCounts> counts = count_levels(bases[i], max_n, options);
    for (Count n = 1; n <= max_n; ++n) {
      const LevelCounts& c = counts[n - 1];
      table.values[n - 1][i] = distinct ? c.distinct_nontrivial : c.nontrivial;
    }
  }
  return table;
}

std::string render_csv(const CountTable& table) {
  std::ostringstream os;
  os << "n";
  for (Count k : table.ks) os << ",k=" << k;
  os << "\n";
  for (Count n = 1; n <= table.max_n; ++n) {
    os << n;
    for (Count v : table.values[n - 1]) os << "," << v;
    os << "\n";
  }
  return os.str();
}

std::string render_text(const CountTable& table) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"n"};
  for (Count k : table.ks) header.push_back("k=" + std::to_string(k));
  cells.push_back(std::move(header));
  for (Count n = 1; n <= table.max_n; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (Count v : table.values[n - 1]) row.push_back(std::to_string(v));
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << "  ";
      os << std::setw(static_cast<int>(width[c])) << row[c];
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace ufe
