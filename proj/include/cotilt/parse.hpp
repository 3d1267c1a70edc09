// Text formats: algebra files, module expressions, complex files.
#pragma once

#include <string>

#include "cotilt/algebra.hpp"

namespace cotilt {

// Parse an [algebra] file body. Errors carry "line L, column C".
AlgebraPresentation parse_algebra(const std::string& text);
AlgebraPresentation load_algebra(const std::string& path);
std::string format_algebra(const AlgebraPresentation& p);

std::string read_file(const std::string& path);

}  // namespace cotilt
