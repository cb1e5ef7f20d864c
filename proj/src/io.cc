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

#include "isv/io.h"

#include <charconv>
#include <istream>
#include <set>
#include <sstream>
#include <vector>

#include "isv/error.h"

namespace isv {
namespace {

class LineReader {
 public:
  LineReader(std::istream& in, std::string source)
      : in_(in), source_(std::move(source)) {}

  // Next non-blank, non-comment line split on whitespace.
  bool Next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      tokens.clear();
      std::istringstream split(line);
      for (std::string tok; split >> tok;) tokens.push_back(tok);
      return true;
    }
    return false;
  }

  [[noreturn]] void Fail(ErrorCode code, const std::string& message) const {
    throw Error(code, source_ + ":" + std::to_string(line_) + ": " + message);
  }
  [[noreturn]] void Fail(const std::string& message) const {
    Fail(ErrorCode::kParseError, message);
  }

  // Runs fn, re-raising library errors with the current line attached.
  template <typename Fn>
  auto Located(Fn fn) const {
    try {
      return fn();
    } catch (const Error& e) {
      Fail(e.code(), e.detail());
    }
  }

 private:
  std::istream& in_;
  std::string source_;
  int line_ = 0;
};

long long ParseInt(const LineReader& r, const std::string& text,
                   const char* what) {
  long long value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    r.Fail(std::string("expected ") + what + ", got '" + text + "'");
  }
  return value;
}

int ParseHeader(LineReader& r, const char* keyword,
                std::vector<std::string>& tokens) {
  if (!r.Next(tokens)) r.Fail(std::string("missing '") + keyword + "' line");
  if (tokens[0] != keyword || tokens.size() < 2) {
    r.Fail(std::string("expected '") + keyword + " <count>'");
  }
  const long long n = ParseInt(r, tokens[1], "a count");
  if (n < 1 || n > kMaxOraclePlayers) {
    r.Fail(ErrorCode::kInvalidArgument,
           std::string(keyword) + " count " + tokens[1] + " outside 1..64");
  }
  return static_cast<int>(n);
}

std::vector<std::string> PartyNames(LineReader& r,
                                    std::vector<std::string>& tokens) {
  const int m = ParseHeader(r, "parties", tokens);
  if (static_cast<int>(tokens.size()) != m + 2) {
    r.Fail("expected " + std::to_string(m) + " party names");
  }
  return {tokens.begin() + 2, tokens.end()};
}

std::string JoinNames(const std::vector<std::string>& names) {
  std::string out = "parties " + std::to_string(names.size());
  for (const std::string& name : names) out += " " + name;
  return out + "\n";
}

}  // namespace

Coalition ParseMembers(const std::string& text, int n) {
  Coalition c;
  int last = -1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    int p = -1;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), p);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::kParseError,
                  "malformed player list '" + text + "'");
    }
    if (p < 0 || p >= n) {
      throw Error(ErrorCode::kPlayerOutOfRange,
                  "player " + item + " outside 0.." + std::to_string(n - 1));
    }
    if (p <= last) {
      throw Error(ErrorCode::kParseError,
                  "player list '" + text + "' is not strictly ascending");
    }
    last = p;
    c = c.with(p);
    pos = comma + 1;
  }
  return c;
}

Game ParseGame(std::istream& in, const std::string& source, int max_players) {
  LineReader r(in, source);
  std::vector<std::string> tokens;
  const int n = ParseHeader(r, "players", tokens);
  if (tokens.size() != 2) r.Fail("trailing tokens after the player count");
  if (n > max_players) {
    r.Fail(ErrorCode::kTooManyPlayers,
           std::to_string(n) + " players exceed the full-table cap of " +
               std::to_string(max_players));
  }
  std::vector<std::pair<Coalition, Rational>> entries;
  std::set<Coalition> seen;
  while (r.Next(tokens)) {
    if (tokens.size() != 2) r.Fail("expected '<players> <value>'");
    const Coalition c = r.Located([&] { return ParseMembers(tokens[0], n); });
    if (!seen.insert(c).second) {
      r.Fail(ErrorCode::kDuplicateCoalition,
             "coalition {" + c.ToString() + "} listed twice");
    }
    entries.emplace_back(c, r.Located([&] { return ParseRational(tokens[1]); }));
  }
  return r.Located([&] { return MakeGame(n, entries, max_players); });
}

std::string FormatGame(const Game& game) {
  std::string out = "players " + std::to_string(game.num_players()) + "\n";
  for (std::uint64_t mask = 1; mask < game.table_size(); ++mask) {
    if (game.value(mask) == 0) continue;
    out += Coalition(mask).ToString() + " " + ToString(game.value(mask)) + "\n";
  }
  return out;
}

OwnerList ParseOwnerList(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::vector<std::string> tokens;
  OwnerList list;
  list.num_players = ParseHeader(r, "players", tokens);
  if (tokens.size() != 2) r.Fail("trailing tokens after the player count");
  while (r.Next(tokens)) {
    if (tokens.size() != 1) r.Fail("expected one comma-separated owner list");
    list.owners.push_back(
        r.Located([&] { return ParseMembers(tokens[0], list.num_players); }));
  }
  return list;
}

std::string FormatOwnerList(const OwnerList& list) {
  std::string out = "players " + std::to_string(list.num_players) + "\n";
  for (Coalition c : list.owners) out += c.ToString() + "\n";
  return out;
}

ApprovalProfile ParseBallots(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::vector<std::string> tokens;
  ApprovalProfile profile;
  profile.parties = PartyNames(r, tokens);
  const int m = static_cast<int>(profile.parties.size());
  std::set<Coalition> seen;
  while (r.Next(tokens)) {
    if (tokens.size() != 2) r.Fail("expected '<count> <parties>'");
    Ballot b;
    b.count = ParseInt(r, tokens[0], "a voter count");
    if (b.count < 1) r.Fail(ErrorCode::kInvalidArgument, "count must be positive");
    b.approvals = r.Located([&] { return ParseMembers(tokens[1], m); });
    if (!seen.insert(b.approvals).second) {
      r.Fail(ErrorCode::kDuplicateCoalition,
             "approval set {" + b.approvals.ToString() + "} listed twice");
    }
    profile.ballots.push_back(b);
  }
  if (profile.ballots.empty()) r.Fail(ErrorCode::kNoBallots, "no ballots");
  return profile;
}

std::string FormatBallots(const ApprovalProfile& profile) {
  std::string out = JoinNames(profile.parties);
  for (const Ballot& b : profile.ballots) {
    out += std::to_string(b.count) + " " + b.approvals.ToString() + "\n";
  }
  return out;
}

RegionalVotes ParseRegions(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::vector<std::string> tokens;
  RegionalVotes rv;
  rv.parties = PartyNames(r, tokens);
  const std::size_t m = rv.parties.size();
  while (r.Next(tokens)) {
    if (tokens[0] != "region" || tokens.size() < 2 + m) {
      r.Fail("expected 'region <seats> <" + std::to_string(m) +
             " party totals> [| <outsider totals>]'");
    }
    Region region;
    region.seats = ParseInt(r, tokens[1], "a seat count");
    std::size_t t = 2;
    for (; t < 2 + m; ++t) {
      region.votes.push_back(ParseInt(r, tokens[t], "a vote total"));
    }
    if (t < tokens.size()) {
      if (tokens[t] != "|") r.Fail("expected '|' before outsider totals");
      for (++t; t < tokens.size(); ++t) {
        region.outsiders.push_back(ParseInt(r, tokens[t], "a vote total"));
      }
    }
    if (region.seats < 1) {
      r.Fail(ErrorCode::kInvalidArgument, "seat count must be positive");
    }
    rv.regions.push_back(std::move(region));
  }
  return rv;
}

std::string FormatRegions(const RegionalVotes& rv) {
  std::string out = JoinNames(rv.parties);
  for (const Region& region : rv.regions) {
    out += "region " + std::to_string(region.seats);
    for (long long v : region.votes) out += " " + std::to_string(v);
    if (!region.outsiders.empty()) {
      out += " |";
      for (long long v : region.outsiders) out += " " + std::to_string(v);
    }
    out += "\n";
  }
  return out;
}

}  // namespace isv
