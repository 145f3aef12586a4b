#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace freelat {

enum class CmdStatus { Ok, Fail, Error };

struct CommandResult {
  int line = 0;
  std::string kind;     // set, let, assert, print
  std::string text;     // trimmed source line
  CmdStatus status = CmdStatus::Error;
  std::string message;  // printed value, failure reason, or error text
  long long micros = 0;
};

struct RunOptions {
  bool with_time = false;  // append per-command timing to the text report
  int max_n = 6;           // largest generator count `set n` accepts
};

// One report line per command; `ok` iff every command succeeded. The
// text and JSON renderings carry the same statuses.
struct RunResult {
  std::string script;
  int n = 0;
  std::vector<CommandResult> commands;
  bool ok = true;

  std::string to_text(bool with_time) const;
  std::string to_json() const;
};

// Executes a batch script. Commands, one per line ('#' starts a
// comment):
//   set n <int>
//   let NAME = <expr>
//   assert [not] leq <e1> <e2> | eq <e1> <e2> | freegen <e1>, ..., <ek>
//          | symmetric <e> | nu <e> | selfdual_closed <e1>, ..., <ek>
//   print tno <expr> | print term <expr>
// Expressions combine the term grammar with defined names, the
// built-ins p(i,j), m(j), s, a, b, a0, aprime, bprime, a_variant,
// b_variant, and the functions dual(e), perm((c ...)..., e),
// sym_join(e), sym_meet(e).
// A failed assertion reports FAIL and execution continues; a malformed
// or inapplicable command reports ERROR and execution continues.
RunResult run_script(std::string_view text, std::string script_name,
                     const RunOptions& options);
RunResult run_script_file(const std::string& path, const RunOptions& options);

}  // namespace freelat
