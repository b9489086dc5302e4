#ifndef HOMCALC_COMMANDS_HPP
#define HOMCALC_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

namespace homcalc {

/* Exit codes: 0 success (including Confirmed / Vacuous verdicts),
 * 1 usage / parse / precondition errors, 2 Violation or Inconclusive. */
struct CommandResult {
    int exit_code = 0;
    std::string body;
    std::string diagnostics;
};

/* argv excludes the program name, e.g. {"betti", "--session", "f.hc",
 * "--module", "M", "--steps", "6"}. When session_text is supplied it
 * replaces the --session file contents (the flag may then be omitted). */
CommandResult run_command(const std::vector<std::string>& argv,
                          const std::optional<std::string>& session_text = std::nullopt);

}  // namespace homcalc

#endif
