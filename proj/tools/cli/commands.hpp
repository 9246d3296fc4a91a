#pragma once

#include <iosfwd>
#include <string>

#include "weylgraded/gwa_rings.hpp"

namespace weylgraded::cli {

// Exit codes of the weylgraded tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

// "z*y^2*k[z]", "k[z]".
std::string format_piece(const GradedPiece& piece);

}  // namespace weylgraded::cli
