#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ufe/enumerator.hpp"
#include "ufe/solution_array.hpp"

namespace ufe {

/// {"k": k, "rows": [[c0,c1,c2], ...]} with rows bottom-up.
std::string array_to_json(const SolutionArray& array);

/// The array plus derived fields: n, denominators (ascending), nontrivial,
/// distinct. Denominators that do not fit in 64 bits are written as decimal
/// strings.
nlohmann::json array_document(const SolutionArray& array);

/// Reads one array document. "k" and "rows" are required, other keys are
/// ignored. Throws ParseError (with a byte offset or JSON pointer) for
/// malformed input and KMismatchError if `expected_k` is given and differs.
SolutionArray array_from_json(std::string_view text, std::optional<Count> expected_k = {});

/// Same for an already parsed value; `where` prefixes error locations.
SolutionArray array_from_document(const nlohmann::json& doc, std::optional<Count> expected_k,
                                  const std::string& where = "");

/// Accepts a single document or a JSON list of documents.
std::vector<SolutionArray> arrays_from_json(std::string_view text,
                                            std::optional<Count> expected_k = {});

/// Graphviz digraph. Labels show rows top row first; trivial arrays are red;
/// edges go parent -> child and carry the move number.
std::string tree_to_dot(const EnumerationTree& tree);

/// {"k", "nodes": [document...], "edges": [{"child", "parent", "move"}...]}.
std::string tree_to_json(const EnumerationTree& tree);

struct CountTable {
  std::vector<Count> ks;
  Count max_n = 0;
  bool distinct = false;
  /// values[n-1][i] is the count for n and ks[i].
  std::vector<std::vector<Count>> values;
};

/// Nontrivial (or distinct nontrivial) counts for n = 1..max_n and each k.
/// Throws PowerOfTwoError for an invalid k.
CountTable compute_count_table(std::span<const Count> ks, Count max_n, bool distinct,
                               const EnumerateOptions& options = {});

/// Header "n,k=<k1>,k=<k2>,..." then one row per n. No digit grouping.
std::string render_csv(const CountTable& table);

/// Same data, right-aligned columns separated by spaces.
std::string render_text(const CountTable& table);

}  // namespace ufe
