#pragma once
// Certificate documents for the tc commands. Text output is rendered from
// the same ordered JSON document, so both forms carry identical content.

#include <optional>
#include <string>

#include "json.hpp"
#include "tc/closure.hpp"
#include "tc/problem.hpp"

namespace tc {

using Document = nlohmann::ordered_json;

struct Report {
  Document doc;
  int exit_code = 0;  // 0 member/success, 1 non-member
};

struct RunOptions {
  std::optional<int> e_max;
  std::optional<int> degree;
  int threads = 1;
  int max_extension = 4;
};

Report run_check(const Problem& pr, const RunOptions& opts);
Report run_closure(const Problem& pr, const RunOptions& opts);
Report run_decompose(const Problem& pr, const RunOptions& opts);
Report run_info(const Problem& pr, const RunOptions& opts);

std::string render_text(const Document& doc);
std::string render_json(const Document& doc);

}  // namespace tc
