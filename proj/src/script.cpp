#include "freelat/script.hpp"

#include <cctype>
#include <chrono>
#include <cstring>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "freelat/construct.hpp"
#include "freelat/engine.hpp"
#include "freelat/freegen.hpp"
#include "freelat/symmetry.hpp"
#include "freelat/term.hpp"

namespace freelat {

namespace {

struct ScriptError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------- lexer ----------

struct Token {
  enum Type { Ident, Int, Pipe, Amp, LParen, RParen, Comma, Equals, End };
  Type type = End;
  std::string text;
  long value = 0;
  std::size_t pos = 0;
};

std::vector<Token> lex_line(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      t.type = Token::Ident;
      t.text = std::string(s.substr(i, j - i));
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      long v = 0;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        v = v * 10 + (s[j] - '0');
        if (v > 1'000'000) throw ScriptError("number too large");
        ++j;
      }
      t.type = Token::Int;
      t.value = v;
      t.text = std::string(s.substr(i, j - i));
      i = j;
    } else {
      switch (c) {
        case '|': t.type = Token::Pipe; break;
        case '&': t.type = Token::Amp; break;
        case '(': t.type = Token::LParen; break;
        case ')': t.type = Token::RParen; break;
        case ',': t.type = Token::Comma; break;
        case '=': t.type = Token::Equals; break;
        default:
          throw ScriptError(std::string("unexpected character '") + c + "'");
      }
      t.text = std::string(1, c);
      ++i;
    }
    out.push_back(std::move(t));
  }
  out.push_back(Token{});  // End
  return out;
}

struct TokenStream {
  std::vector<Token> toks;
  std::size_t i = 0;

  const Token& peek() const { return toks[i]; }
  Token take() { return toks[i].type == Token::End ? toks[i] : toks[i++]; }
  bool at_end() const { return toks[i].type == Token::End; }

  bool eat(Token::Type t) {
    if (toks[i].type == t) {
      ++i;
      return true;
    }
    return false;
  }

  void expect(Token::Type t, const char* what) {
    if (!eat(t)) throw ScriptError(std::string("expected ") + what);
  }

  long expect_int(const char* what) {
    if (peek().type != Token::Int)
      throw ScriptError(std::string("expected ") + what);
    return take().value;
  }

  std::string expect_ident(const char* what) {
    if (peek().type != Token::Ident)
      throw ScriptError(std::string("expected ") + what);
    return take().text;
  }
};

// ---------- interpreter ----------

std::optional<int> var_index_of(std::string_view name) {
  if (name == "x") return 0;
  if (name == "y") return 1;
  if (name == "z") return 2;
  if (name.size() >= 2 && name[0] == 'x') {
    int v = 0;
    for (char c : name.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      v = v * 10 + (c - '0');
      if (v > 1'000'000) return std::nullopt;
    }
    return v;
  }
  return std::nullopt;
}

bool is_reserved(std::string_view name) {
  static const char* words[] = {"set",  "let",    "assert", "not",       "print",
                                "n",    "leq",    "eq",     "freegen",   "symmetric",
                                "nu",   "tno",    "term",   "selfdual_closed",
                                "dual", "perm",   "sym_join", "sym_meet",
                                "p",    "m",      "s",      "a",         "b",
                                "a0",   "aprime", "bprime", "a_variant", "b_variant"};
  for (const char* w : words)
    if (name == w) return true;
  return var_index_of(name).has_value();
}

std::string truncated(std::string s, std::size_t limit = 96) {
  if (s.size() > limit) {
    s.resize(limit);
    s += "...";
  }
  return s;
}

struct Interp {
  const RunOptions& opts;
  std::optional<TermStore> store;
  std::optional<Engine> engine;
  std::map<std::string, Term, std::less<>> names;

  TermStore& need_store() {
    if (!store) throw ScriptError("no generator count: put `set n <int>` first");
    return *store;
  }

  Term parse_expr(TokenStream& ts) {
    std::vector<Term> run{parse_meet(ts)};
    while (ts.eat(Token::Pipe)) run.push_back(parse_meet(ts));
    return run.size() == 1 ? run.front() : need_store().join(run);
  }

  Term parse_meet(TokenStream& ts) {
    std::vector<Term> run{parse_primary(ts)};
    while (ts.eat(Token::Amp)) run.push_back(parse_primary(ts));
    return run.size() == 1 ? run.front() : need_store().meet(run);
  }

  Term parse_primary(TokenStream& ts) {
    if (ts.eat(Token::LParen)) {
      Term t = parse_expr(ts);
      ts.expect(Token::RParen, "')'");
      return t;
    }
    if (ts.peek().type != Token::Ident) throw ScriptError("expected a term");
    const std::string name = ts.take().text;

    if (auto v = var_index_of(name)) {
      TermStore& s = need_store();
      if (*v >= s.generator_count())
        throw ScriptError("variable " + name + " out of range for n = " +
                          std::to_string(s.generator_count()));
      return s.var(*v);
    }
    if (name == "dual") return dual(parse_call_arg(ts));
    if (name == "sym_join") return sym_join(parse_call_arg(ts));
    if (name == "sym_meet") return sym_meet(parse_call_arg(ts));
    if (name == "perm") return parse_perm(ts);
    if (name == "p") {
      ts.expect(Token::LParen, "'(' after p");
      const long i = ts.expect_int("generator index");
      ts.expect(Token::Comma, "','");
      const long j = ts.expect_int("depth index");
      ts.expect(Token::RParen, "')'");
      return make_p(need_store(), static_cast<int>(i), static_cast<int>(j));
    }
    if (name == "m") {
      ts.expect(Token::LParen, "'(' after m");
      const long j = ts.expect_int("depth index");
      ts.expect(Token::RParen, "')'");
      return make_m(need_store(), static_cast<int>(j));
    }
    if (name == "s") return make_s(need_store());
    if (name == "a") return make_ab(need_store()).first;
    if (name == "b") return make_ab(need_store()).second;
    if (name == "a_variant") return make_ab_variant(need_store()).first;
    if (name == "b_variant") return make_ab_variant(need_store()).second;
    if (name == "a0") return make_primed(need_store()).a0;
    if (name == "aprime") return make_primed(need_store()).aprime;
    if (name == "bprime") return make_primed(need_store()).bprime;

    if (auto it = names.find(name); it != names.end()) return it->second;
    throw ScriptError("undefined name '" + name + "'");
  }

  Term parse_call_arg(TokenStream& ts) {
    ts.expect(Token::LParen, "'('");
    Term t = parse_expr(ts);
    ts.expect(Token::RParen, "')'");
    return t;
  }

  Term parse_perm(TokenStream& ts) {
    ts.expect(Token::LParen, "'(' after perm");
    std::vector<std::vector<int>> cycles;
    while (ts.peek().type == Token::LParen) {
      ts.take();
      std::vector<int> cyc;
      while (ts.peek().type == Token::Int) cyc.push_back(static_cast<int>(ts.take().value));
      ts.expect(Token::RParen, "')' closing a cycle");
      if (cyc.empty()) throw ScriptError("empty cycle");
      cycles.push_back(std::move(cyc));
    }
    if (cycles.empty()) throw ScriptError("perm needs at least one cycle");
    ts.expect(Token::Comma, "',' after the cycles");
    Term t = parse_expr(ts);
    ts.expect(Token::RParen, "')'");
    return apply_perm(Permutation::from_cycles(need_store().generator_count(), cycles), t);
  }

  std::vector<Term> parse_expr_list(TokenStream& ts) {
    std::vector<Term> out{parse_expr(ts)};
    while (ts.eat(Token::Comma)) out.push_back(parse_expr(ts));
    return out;
  }

  struct Outcome {
    CmdStatus status = CmdStatus::Ok;
    std::string kind;
    std::string message;
  };

  Outcome exec(TokenStream& ts) {
    const std::string head = ts.expect_ident("a command (set, let, assert, print)");
    Outcome out;
    out.kind = head;
    if (head == "set")
      exec_set(ts);
    else if (head == "let")
      exec_let(ts);
    else if (head == "assert")
      exec_assert(ts, out);
    else if (head == "print")
      exec_print(ts, out);
    else
      throw ScriptError("unknown command '" + head + "'");
    if (!ts.at_end()) throw ScriptError("unexpected trailing input");
    return out;
  }

  void exec_set(TokenStream& ts) {
    const std::string what = ts.expect_ident("'n'");
    if (what != "n") throw ScriptError("only `set n <int>` is supported");
    const long k = ts.expect_int("a generator count");
    if (store) throw ScriptError("n is already set");
    if (k < 2) throw ScriptError("n must be at least 2");
    if (k > opts.max_n)
      throw ScriptError("n = " + std::to_string(k) + " exceeds the limit " +
                        std::to_string(opts.max_n) + " (see --max-n)");
    store.emplace(static_cast<int>(k));
    engine.emplace(*store);
  }

  void exec_let(TokenStream& ts) {
    const std::string name = ts.expect_ident("a name");
    if (is_reserved(name)) throw ScriptError("'" + name + "' is reserved");
    if (names.count(name)) throw ScriptError("'" + name + "' is already defined");
    ts.expect(Token::Equals, "'='");
    names.emplace(name, parse_expr(ts));
  }

  void exec_print(TokenStream& ts, Outcome& out) {
    const std::string what = ts.expect_ident("'tno' or 'term'");
    if (what == "tno")
      out.message = std::to_string(tno(parse_expr(ts)));
    else if (what == "term")
      out.message = format_term(parse_expr(ts));
    else
      throw ScriptError("print knows 'tno' and 'term', not '" + what + "'");
  }

  void exec_assert(TokenStream& ts, Outcome& out) {
    bool negate = false;
    if (ts.peek().type == Token::Ident && ts.peek().text == "not") {
      ts.take();
      negate = true;
    }
    const std::string pred = ts.expect_ident("a predicate");
    bool value;
    std::string why_false;

    if (pred == "leq" || pred == "eq") {
      Term e1 = parse_expr(ts);
      ts.eat(Token::Comma);
      Term e2 = parse_expr(ts);
      value = pred == "leq" ? engine_ref().leq(e1, e2) : engine_ref().semantic_eq(e1, e2);
      why_false = pred == "leq" ? "the inequality does not hold" : "the elements differ";
    } else if (pred == "freegen") {
      const auto terms = parse_expr_list(ts);
      const FreegenReport rep = freely_generates(engine_ref(), terms);
      value = rep.verdict;
      if (!rep.collisions.empty()) {
        why_false = "members " + std::to_string(rep.collisions.front().first) + " and " +
                    std::to_string(rep.collisions.front().second) + " are the same element";
      } else if (rep.witness) {
        const bool join_side = rep.witness->side == FreegenReport::Witness::Side::JoinBound;
        why_false = truncated(format_term(rep.witness->element)) +
                    (join_side ? " lies under the join of the others"
                               : " lies over the meet of the others");
      }
    } else if (pred == "symmetric") {
      value = is_symmetric(engine_ref(), parse_expr(ts));
      why_false = "the term is not symmetric";
    } else if (pred == "nu") {
      value = is_nu(parse_expr(ts));
      why_false = "the term is not a near-unanimity term";
    } else if (pred == "selfdual_closed") {
      const auto terms = parse_expr_list(ts);
      value = selfdual_closed(engine_ref(), terms);
      why_false = "some member's dual is outside the set";
    } else {
      throw ScriptError("unknown predicate '" + pred + "'");
    }

    const bool pass = negate ? !value : value;
    if (!pass) {
      out.status = CmdStatus::Fail;
      out.message = negate ? "asserted not to hold, but it does" : why_false;
    }
  }

  Engine& engine_ref() {
    need_store();
    return *engine;
  }
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

const char* status_name(CmdStatus s) {
  switch (s) {
    case CmdStatus::Ok: return "OK";
    case CmdStatus::Fail: return "FAIL";
    default: return "ERROR";
  }
}

}  // namespace

RunResult run_script(std::string_view text, std::string script_name,
                     const RunOptions& options) {
  RunResult result;
  result.script = std::move(script_name);
  Interp interp{options, std::nullopt, std::nullopt, {}};

  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view line =
        text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    CommandResult cr;
    cr.line = lineno;
    cr.text = std::string(line);
    cr.kind = std::string(line.substr(0, line.find_first_of(" \t")));
    const auto t0 = std::chrono::steady_clock::now();
    try {
      TokenStream ts{lex_line(line)};
      const Interp::Outcome o = interp.exec(ts);
      cr.kind = o.kind;
      cr.status = o.status;
      cr.message = o.message;
    } catch (const std::exception& e) {
      cr.status = CmdStatus::Error;
      cr.message = e.what();
    }
    cr.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    if (cr.status != CmdStatus::Ok) result.ok = false;
    result.commands.push_back(std::move(cr));
  }
  result.n = interp.store ? interp.store->generator_count() : 0;
  return result;
}

RunResult run_script_file(const std::string& path, const RunOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read script file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return run_script(buf.str(), path, options);
}

std::string RunResult::to_text(bool with_time) const {
  std::ostringstream out;
  for (const auto& c : commands) {
    out << status_name(c.status);
    for (std::size_t pad = std::strlen(status_name(c.status)); pad < 6; ++pad) out << ' ';
    out << "line " << c.line << ": " << c.text;
    if (!c.message.empty()) out << "  => " << c.message;
    if (with_time) out << "  (" << c.micros << " us)";
    out << '\n';
  }
  out << (ok ? "all commands passed" : "some commands failed") << " (" << commands.size()
      << " commands)\n";
  return out.str();
}

std::string RunResult::to_json() const {
  nlohmann::json j;
  j["script"] = script;
  j["n"] = n;
  j["ok"] = ok;
  j["commands"] = nlohmann::json::array();
  for (const auto& c : commands)
    j["commands"].push_back({{"line", c.line},
                             {"kind", c.kind},
                             {"status", status_name(c.status)},
                             {"message", c.message},
                             {"micros", c.micros}});
  return j.dump(2) + "\n";
}

}  // namespace freelat
