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

#ifndef ISV_IO_H_
#define ISV_IO_H_

#include <iosfwd>
#include <string>

#include "isv/apportionment.h"
#include "isv/game.h"
#include "isv/matching.h"

namespace isv {

// Text formats. Blank lines and lines starting with '#' are skipped. Errors
// carry "<source>:<line>:" context and keep their domain error code.
//
// Game:
//   players <n>
//   <i1>,<i2>,...,<ik> <value>      value is an integer or <num>/<den>
// Coalitions not listed are worth 0; the empty coalition cannot be listed.
Game ParseGame(std::istream& in, const std::string& source = "<input>",
               int max_players = kDefaultMaxTablePlayers);
// Nonzero coalitions in increasing mask order.
std::string FormatGame(const Game& game);

// Owner list:
//   players <n>
//   <i1>,<i2>,...            one line per object
OwnerList ParseOwnerList(std::istream& in,
                         const std::string& source = "<input>");
std::string FormatOwnerList(const OwnerList& list);

// Ballots:
//   parties <m> <name0> ... <name(m-1)>
//   <count> <i1>,<i2>,...    one line per distinct approval set
ApprovalProfile ParseBallots(std::istream& in,
                             const std::string& source = "<input>");
std::string FormatBallots(const ApprovalProfile& profile);

// Regional votes:
//   parties <m> <name0> ... <name(m-1)>
//   region <seats> <v0> ... <v(m-1)> | <outsider1> <outsider2> ...
// The bar and the outsider totals are optional.
RegionalVotes ParseRegions(std::istream& in,
                           const std::string& source = "<input>");
std::string FormatRegions(const RegionalVotes& rv);

// "0,2,5" with strictly ascending indices below n.
Coalition ParseMembers(const std::string& text, int n);

}  // namespace isv

#endif  // ISV_IO_H_
