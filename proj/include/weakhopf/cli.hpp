#pragma once

#include "weakhopf/crossed.hpp"
#include "weakhopf/instances.hpp"
#include "weakhopf/presentation.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace weakhopf::cli {

inline constexpr const char* kVersion = "weakhopf 1.0.0";

/// Exit codes: 0 every entry passed, 1 some entry failed, 2 parse or shape error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// H, S, the algebra, ρ and f with their roles.
Presentation presentation_of(const SmashInstance& s);
/// The instance plus E's matrices, with comodule, extension and (given γ⁻¹) cleaving roles.
Presentation presentation_of(const CrossedProduct& E, const std::optional<LinMap>& gammainv);

/// WEAKHOPF_CORPUS if set, else the bundled directory.
std::string corpus_dir();
/// Every identity of the built-in corpus as JSON.
std::string identities_json();

std::string sha256_hex(const std::string& bytes);

}  // namespace weakhopf::cli
