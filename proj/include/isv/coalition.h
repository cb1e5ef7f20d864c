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

#ifndef ISV_COALITION_H_
#define ISV_COALITION_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace isv {

inline constexpr int kMaxOraclePlayers = 64;

// A set of players 0..63 stored as a bit mask. Members iterate in ascending
// index order.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t bits) : bits_(bits) {}
  Coalition(std::initializer_list<int> members) {
    for (int p : members) bits_ |= std::uint64_t{1} << p;
  }

  static constexpr Coalition Full(int n) {
    return Coalition(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }
  static Coalition FromMembers(const std::vector<int>& members) {
    Coalition c;
    for (int p : members) c.bits_ |= std::uint64_t{1} << p;
    return c;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int player) const {
    return (bits_ >> player) & 1;
  }
  constexpr Coalition with(int player) const {
    return Coalition(bits_ | (std::uint64_t{1} << player));
  }
  constexpr Coalition without(int player) const {
    return Coalition(bits_ & ~(std::uint64_t{1} << player));
  }
  constexpr bool IsSubsetOf(Coalition other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  // Highest member index plus one; 0 for the empty coalition.
  constexpr int Span() const { return 64 - std::countl_zero(bits_); }

  std::vector<int> Members() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  // "0,2,5"; empty string for the empty coalition.
  std::string ToString() const {
    std::string out;
    for (int p : Members()) {
      if (!out.empty()) out += ',';
      out += std::to_string(p);
    }
    return out;
  }

  // Character p is '1' iff player p is a member.
  std::string ToBitString(int n) const {
    std::string out(n, '0');
    for (int p = 0; p < n; ++p) {
      if (contains(p)) out[p] = '1';
    }
    return out;
  }

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition(a.bits_ | b.bits_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition(a.bits_ & b.bits_);
  }
  friend constexpr bool operator==(Coalition a, Coalition b) = default;
  friend constexpr auto operator<=>(Coalition a, Coalition b) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace isv

#endif  // ISV_COALITION_H_
