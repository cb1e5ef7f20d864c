// Copyright 2026 The ISV Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isv/cli.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "isv/apportionment.h"
#include "isv/error.h"
#include "isv/fixtures.h"
#include "isv/game.h"
#include "isv/io.h"
#include "isv/isv.h"
#include "isv/large.h"
#include "isv/matching.h"
#include "isv/oracle.h"
#include "isv/sampling.h"
#include "json.hpp"

namespace isv {
namespace {

using Json = nlohmann::ordered_json;

// Shortest decimal that reads back to the same double.
std::string FormatReal(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::vector<std::string> Strings(const RationalVector& v) {
  std::vector<std::string> out;
  for (const Rational& x : v) out.push_back(ToString(x));
  return out;
}
std::vector<std::string> Strings(const std::vector<double>& v) {
  std::vector<std::string> out;
  for (double x : v) out.push_back(FormatReal(x));
  return out;
}
std::vector<std::string> Strings(const IntVector& v) {
  std::vector<std::string> out;
  for (long long x : v) out.push_back(std::to_string(x));
  return out;
}

// One command's result, rendered either as text lines or as a single JSON
// document. Both renderings use the same number strings.
struct Output {
  explicit Output(std::string command) { doc["command"] = std::move(command); }

  void Players(const std::vector<std::string>& values, const std::string& total) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      lines.push_back("player " + std::to_string(i) + " " + values[i]);
    }
    lines.push_back("total " + total);
    doc["players"] = values.size();
    doc["values"] = values;
    doc["total"] = total;
  }

  void Matrix(const std::vector<std::vector<std::string>>& rows) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::string line = "row " + std::to_string(i);
      for (const std::string& x : rows[i]) line += " " + x;
      lines.push_back(line);
    }
    doc["matrix"] = rows;
  }

  std::vector<std::string> lines;
  Json doc;
};

struct Input {
  std::string path;
  std::unique_ptr<std::ifstream> file;
  std::istream* stream = nullptr;
};

// "-" reads standard input.
Input Open(const std::string& path) {
  Input in{path, nullptr, &std::cin};
  if (path == "-") {
    in.path = "<stdin>";
    return in;
  }
  in.file = std::make_unique<std::ifstream>(path);
  if (!*in.file) {
    throw Error(ErrorCode::kInvalidArgument, path + ": cannot open file");
  }
  in.stream = in.file.get();
  return in;
}

Game LoadGame(const std::string& path, int max_players) {
  Input in = Open(path);
  return ParseGame(*in.stream, in.path, max_players);
}

RationalVector ParseVector(const std::string& text) {
  RationalVector out;
  std::stringstream split(text);
  for (std::string item; std::getline(split, item, ',');) {
    out.push_back(ParseRational(item));
  }
  return out;
}

std::string YesNo(bool b) { return b ? "yes" : "no"; }

struct Options {
  std::string format = "human";
  int max_players = kDefaultMaxTablePlayers;

  std::string file;
  std::string vector;
  bool trace = false;

  int n = 0;
  std::string oracle;
  std::string game;
  long long samples = 10000;
  std::uint64_t seed = 0;
  int workers = 1;
  bool exhaustive = false;
  bool matrix = false;
  long long total = 0;
  double alpha = kDefaultAlpha;

  long long seats = 0;
  std::vector<long long> votes;
  std::string members;
  bool run_isv = false;

  std::string kind;
  int objects = 6;
};

Output Shapley(const Options& o) {
  const Game g = LoadGame(o.file, o.max_players);
  Output out("shapley");
  out.Players(Strings(ShapleyExact(g)), ToString(g.grand_value()));
  return out;
}

Output Dividends(const Options& o) {
  const Game g = LoadGame(o.file, o.max_players);
  const std::vector<Rational> d = HarsanyiDividends(g);
  Output out("dividends");
  Json list = Json::array();
  for (std::uint64_t mask = 1; mask < d.size(); ++mask) {
    if (d[mask] == 0) continue;
    const std::string members = Coalition(mask).ToString();
    out.lines.push_back("dividend " + members + " " + ToString(d[mask]));
    list.push_back({{"coalition", members}, {"value", ToString(d[mask])}});
  }
  out.lines.push_back("total " + ToString(g.grand_value()));
  out.doc["players"] = g.num_players();
  out.doc["dividends"] = list;
  out.doc["total"] = ToString(g.grand_value());
  return out;
}

Output Check(const Options& o) {
  const Game g = LoadGame(o.file, o.max_players);
  Output out("check");
  const std::pair<const char*, bool> facts[] = {
      {"convex", IsConvex(g)},
      {"positive", IsPositive(g)},
      {"size-bounded", IsSizeBounded(g)},
  };
  out.doc["players"] = g.num_players();
  for (const auto& [name, value] : facts) {
    out.lines.push_back(std::string(name) + ": " + YesNo(value));
    out.doc[name] = value;
  }
  if (!o.vector.empty()) {
    const bool core = InCore(g, ParseVector(o.vector));
    out.lines.push_back("core: " + YesNo(core));
    out.doc["core"] = core;
  }
  return out;
}

Output Isv(const Options& o) {
  const Game g = LoadGame(o.file, o.max_players);
  IsvOptions opts;
  opts.max_players = o.max_players;
  const IsvResult r = IndivisibleShapley(g, opts);
  Output out("isv");
  std::vector<std::string> trace;
  for (const IsvEvent& e : r.trace) trace.push_back(ToString(e));
  if (o.trace) {
    for (const std::string& t : trace) out.lines.push_back("trace " + t);
  }
  out.Players(Strings(r.payoffs), ToString(g.grand_value()));
  out.doc["trace"] = trace;
  return out;
}

Output Matrix(const Options& o) {
  const Game g = LoadGame(o.file, o.max_players);
  std::vector<std::vector<std::string>> rows;
  for (const RationalVector& row : ShapleyMatrixExact(g)) {
    rows.push_back(Strings(row));
  }
  Output out("matrix");
  out.doc["players"] = g.num_players();
  out.Matrix(rows);
  return out;
}

// The --oracle command or, for local experiments, a game file.
std::unique_ptr<ValueOracle> MakeOracle(const Options& o, int n) {
  if (!o.oracle.empty() == !o.game.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "exactly one of --oracle and --game is required");
  }
  if (!o.game.empty()) {
    const Game g = LoadGame(o.game, o.max_players);
    if (n != 0 && n != g.num_players()) {
      throw Error(ErrorCode::kPlayerCountMismatch,
                  o.game + ": game has " + std::to_string(g.num_players()) +
                      " players, expected " + std::to_string(n));
    }
    return std::make_unique<GameOracle>(g);
  }
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "a positive player count is required with --oracle");
  }
  return std::make_unique<SubprocessOracle>(o.oracle, n);
}

SamplerConfig Config(const Options& o) {
  SamplerConfig c;
  c.samples = o.samples;
  c.seed = o.seed;
  c.workers = o.workers;
  c.exhaustive = o.exhaustive;
  return c;
}

Output Sample(const Options& o) {
  const auto oracle = MakeOracle(o, o.n);
  const SamplerConfig config = Config(o);
  const std::vector<double> sv = SampleShapley(*oracle, config);
  double total = 0.0;
  for (double x : sv) total += x;
  Output out("sample");
  out.Players(Strings(sv), FormatReal(total));
  if (o.matrix) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : SampleShapleyMatrix(*oracle, config)) {
      rows.push_back(Strings(row));
    }
    out.Matrix(rows);
  }
  return out;
}

Output Large(const Options& o) {
  const auto oracle = MakeOracle(o, o.n);
  const IntVector grants = SelectTopK(*oracle, o.total, Config(o), o.alpha);
  Output out("large");
  out.Players(Strings(grants), std::to_string(o.total));
  return out;
}

Output Allocate(const Options& o) {
  Input in = Open(o.file);
  const OwnerList list = ParseOwnerList(*in.stream, in.path);
  const Allocation a = IsvAllocation(list);
  Output out("allocate");
  for (std::size_t j = 0; j < a.assignment.size(); ++j) {
    out.lines.push_back(std::to_string(j) + " -> " +
                        std::to_string(a.assignment[j]));
  }
  out.Players(Strings(a.counts), std::to_string(a.assignment.size()));
  out.doc["assignment"] = a.assignment;
  return out;
}

Output Apportion(const Options& o) {
  Input in = Open(o.file);
  const ApprovalProfile profile = ParseBallots(*in.stream, in.path);
  const IntVector seats = ApportionIsv(profile, o.seats);
  Output out("apportion");
  out.Players(Strings(seats), std::to_string(o.seats));
  out.doc["parties"] = profile.parties;
  return out;
}

Output DhondtCommand(const Options& o) {
  Output out("dhondt");
  out.Players(Strings(Dhondt(o.votes, o.seats)), std::to_string(o.seats));
  return out;
}

Output CoalitionCommand(const Options& o) {
  Input in = Open(o.file);
  const RegionalVotes rv = ParseRegions(*in.stream, in.path);
  const int m = static_cast<int>(rv.parties.size());
  const Coalition members =
      o.members.empty() ? Coalition::Full(m) : ParseMembers(o.members, m);
  const Game g = CoalitionGameFromRegions(rv, members, o.max_players);
  Output out("coalition");
  out.doc["members"] = members.Members();
  if (o.run_isv) {
    const IsvResult r = IndivisibleShapley(g, {false, o.max_players});
    out.Players(Strings(r.payoffs), ToString(g.grand_value()));
    return out;
  }
  // The game itself, in the game file format so it can be piped onward.
  const std::string text = FormatGame(g);
  std::stringstream split(text);
  for (std::string line; std::getline(split, line);) out.lines.push_back(line);
  out.doc["players"] = g.num_players();
  out.doc["game"] = text;
  return out;
}

Output Generate(const Options& o) {
  SplitMix64 rng(o.seed);
  std::string text;
  if (o.kind == "dividend") {
    text = FormatGame(RandomDividendGame(o.n, rng));
  } else if (o.kind == "positive") {
    text = FormatGame(RandomPositiveIntegerGame(o.n, rng));
  } else if (o.kind == "convex") {
    text = FormatGame(RandomConvexIntegerGame(o.n, rng));
  } else if (o.kind == "size-bounded") {
    text = FormatGame(RandomSizeBoundedConvexGame(o.n, rng));
  } else if (o.kind == "fractional") {
    text = FormatGame(RandomFractionalGame(o.n, rng));
  } else if (o.kind == "owners") {
    text = FormatOwnerList(RandomOwnerList(o.n, o.objects, rng));
  } else if (o.kind == "ballots") {
    text = FormatBallots(RandomApprovalProfile(o.n, o.objects, rng));
  } else {
    text = FormatRegions(RandomRegionalVotes(o.n, o.objects, rng));
  }
  Output out("generate");
  std::stringstream split(text);
  for (std::string line; std::getline(split, line);) out.lines.push_back(line);
  out.doc["kind"] = o.kind;
  out.doc["text"] = text;
  return out;
}

void Emit(const Output& result, const std::string& format, std::ostream& out) {
  if (format == "machine") {
    out << result.doc.dump() << "\n";
  } else {
    for (const std::string& line : result.lines) out << line << "\n";
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Options o;
  CLI::App app{"Indivisible Shapley values for coalitional games", "isv"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--max-players", o.max_players,
                 "Largest player count for explicit game tables")
      ->check(CLI::Range(1, 30));

  auto game_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("game", o.file, "Game file, or - for standard input")
        ->required();
    return sub;
  };
  CLI::App* shapley = game_command("shapley", "Exact Shapley values");
  CLI::App* dividends = game_command("dividends", "Harsanyi dividends");
  CLI::App* check = game_command("check", "Structural properties of a game");
  check->add_option("--vector", o.vector,
                    "Comma-separated payoffs to test for core membership");
  CLI::App* isv = game_command("isv", "Indivisible Shapley value");
  isv->add_flag("--trace", o.trace, "Print the algorithm's events");
  CLI::App* matrix = game_command("matrix", "Exact Shapley value matrix");

  auto sampling = [&](CLI::App* sub) {
    sub->add_option("--oracle", o.oracle, "Value oracle command line");
    sub->add_option("--game", o.game, "Use a game file as the oracle");
    sub->add_option("--k", o.samples, "Number of sampled permutations")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Sampling seed");
    sub->add_option("--workers", o.workers, "Worker threads")
        ->check(CLI::Range(1, 256));
    sub->add_flag("--exhaustive", o.exhaustive,
                  "Enumerate every permutation instead of sampling");
  };
  CLI::App* sample = app.add_subcommand("sample", "Sampled Shapley values");
  sample->add_option("n", o.n, "Player count")->required();
  sample->add_flag("--matrix", o.matrix, "Also estimate the Shapley matrix");
  sampling(sample);
  CLI::App* large =
      app.add_subcommand("large", "Sampling-based indivisible Shapley value");
  large->add_option("--n", o.n, "Player count (required with --oracle)");
  large->add_option("--total", o.total, "Units to hand out")->required();
  large->add_option("--alpha", o.alpha, "Synergy weight in [0, 1]");
  sampling(large);

  CLI::App* allocate = app.add_subcommand("allocate", "Allocate owned objects");
  allocate->add_option("owners", o.file, "Owner list file")->required();
  CLI::App* apportion =
      app.add_subcommand("apportion", "Seats from approval ballots");
  apportion->add_option("ballots", o.file, "Ballot file")->required();
  apportion->add_option("--seats", o.seats, "Seats to fill")->required();
  CLI::App* dhondt = app.add_subcommand("dhondt", "D'Hondt seat allocation");
  dhondt->add_option("votes", o.votes, "Vote totals per party")->required();
  dhondt->add_option("--seats", o.seats, "Seats to fill")->required();
  CLI::App* coalition =
      app.add_subcommand("coalition", "Seat game of a party coalition");
  coalition->add_option("regions", o.file, "Regional vote file")->required();
  coalition->add_option("--members", o.members,
                        "Comma-separated member parties (default: all)");
  coalition->add_flag("--isv", o.run_isv,
                      "Print the indivisible Shapley value of the game");
  CLI::App* generate =
      app.add_subcommand("generate", "Write a random fixture file");
  generate->add_option("kind", o.kind, "Fixture kind")
      ->required()
      ->check(CLI::IsMember({"dividend", "positive", "convex", "size-bounded",
                             "fractional", "owners", "ballots", "regions"}));
  generate->add_option("--n", o.n, "Player or party count")
      ->required()
      ->check(CLI::Range(1, 12));
  generate->add_option("--seed", o.seed, "Generator seed");
  generate->add_option("--count", o.objects,
                       "Objects, ballots or regions to draw")
      ->check(CLI::Range(0, 1000));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  const std::pair<CLI::App*, Output (*)(const Options&)> commands[] = {
      {shapley, Shapley},     {dividends, Dividends},
      {check, Check},         {isv, Isv},
      {matrix, Matrix},       {sample, Sample},
      {large, Large},         {allocate, Allocate},
      {apportion, Apportion}, {dhondt, DhondtCommand},
      {coalition, CoalitionCommand}, {generate, Generate},
  };
  try {
    for (const auto& [sub, run] : commands) {
      if (sub->parsed()) {
        Emit(run(o), o.format, out);
        return kExitOk;
      }
    }
  } catch (const Error& e) {
    // Parse errors already name the file and line.
    std::string where;
    if (!o.file.empty() && e.detail().rfind(o.file, 0) != 0 &&
        e.detail().rfind("<stdin>", 0) != 0) {
      where = (o.file == "-" ? std::string("<stdin>") : o.file) + ": ";
    }
    err << "isv: " << where << e.what() << "\n";
    return IsOracleError(e.code()) ? kExitOracle : kExitInvalid;
  } catch (const std::exception& e) {
    err << "isv: internal error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace isv
