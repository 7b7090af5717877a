// Built-in fixture diagrams used by the CLI `examples` subcommand and the
// test suites.

#pragma once

#include <string>
#include <vector>

#include "vsl/diagram.hpp"

namespace vsl {

const std::vector<std::string>& example_names();
Diagram example_diagram(const std::string& name);  // throws Error on unknown name
std::string example_text(const std::string& name);

}  // namespace vsl
