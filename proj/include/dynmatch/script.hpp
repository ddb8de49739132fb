#pragma once

#include <string>

namespace dynmatch {

struct ScriptResult {
  std::string output;
  bool failed = false;  // any error line or failed check
};

/// Executes a line-oriented command script against a fresh structure.
///
/// Commands: `link u v [w]`, `cut u v`, `card v`, `total`, `matched u v`,
/// `matchedif (u1 v1 s1; ...; uk vk sk) u v`, `check`. Query commands print
/// one line each; mutations print nothing on success. Errors print
/// `error <line#> <code>` and processing continues.
ScriptResult run_script(const std::string& input, bool weighted = false);

}  // namespace dynmatch
