#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vsl/diagram.hpp"
#include "vsl/evaluator.hpp"

namespace vsl::cli {

// Exit codes: 0 success, 1 failed check, 2 parse/validation/usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Formatting helpers, exposed for tests.
std::string eval_text(const InvariantResult& r);
std::string eval_json(const InvariantResult& r);
std::string states_table(const Diagram& d);
std::string states_json(const Diagram& d);

}  // namespace vsl::cli
