// Copyright 2026 The tiltfock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tiltfock/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tiltfock {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Partition Partition::with_node_added(int r) const {
  std::vector<int> v = parts_;
  if (r == length() + 1) {
    v.push_back(1);
  } else if (r >= 1 && r <= length() && (r == 1 || parts_[r - 2] > parts_[r - 1])) {
    ++v[r - 1];
  } else {
    throw std::invalid_argument("row " + std::to_string(r) + " has no addable node in " + to_string());
  }
  return Partition(std::move(v));
}

Partition Partition::with_node_removed(int r) const {
  if (r < 1 || r > length() || (r < length() && parts_[r] == parts_[r - 1]))
    throw std::invalid_argument("row " + std::to_string(r) + " has no removable node in " + to_string());
  std::vector<int> v = parts_;
  --v[r - 1];
  return Partition(std::move(v));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < parts_.size(); ++k) os << (k ? "," : "") << parts_[k];
  os << "]";
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw std::invalid_argument("malformed partition: " + text);
  s = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition: " + text);
    }
    if (used != tok.size()) throw std::invalid_argument("malformed partition: " + text);
    if (v <= 0) throw std::invalid_argument("malformed partition: " + text);
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

int mod(long long a, int l) {
  const long long r = a % l;
  return static_cast<int>(r < 0 ? r + l : r);
}

int residue(const Node& node, int l) { return mod(node.col - node.row, l); }

std::vector<Node> all_addable_nodes(const Partition& p) {
  std::vector<Node> out;
  for (int r = 1; r <= p.length() + 1; ++r)
    if (r == 1 || p.row(r - 1) > p.row(r)) out.push_back({r, p.row(r) + 1});
  return out;
}

std::vector<Node> all_removable_nodes(const Partition& p) {
  std::vector<Node> out;
  for (int r = 1; r <= p.length(); ++r)
    if (p.row(r) > p.row(r + 1)) out.push_back({r, p.row(r)});
  return out;
}

std::vector<Node> addable_nodes(const Partition& p, int i, int l) {
  std::vector<Node> out;
  for (const Node& n : all_addable_nodes(p))
    if (residue(n, l) == mod(i, l)) out.push_back(n);
  return out;
}

std::vector<Node> removable_nodes(const Partition& p, int i, int l) {
  std::vector<Node> out;
  for (const Node& n : all_removable_nodes(p))
    if (residue(n, l) == mod(i, l)) out.push_back(n);
  return out;
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("dominance needs partitions of equal size");
  int a = 0;
  int b = 0;
  const int len = std::max(lambda.length(), mu.length());
  for (int r = 1; r <= len; ++r) {
    a += lambda.row(r);
    b += mu.row(r);
    if (a > b) return false;
  }
  return true;
}

bool is_l_regular(const Partition& p, int l) {
  int run = 0;
  for (int r = 1; r <= p.length(); ++r) {
    run = (r > 1 && p.row(r) == p.row(r - 1)) ? run + 1 : 1;
    if (run >= l) return false;
  }
  return true;
}

FWord ladder_word(const Partition& p, int l) {
  if (l < 2) throw std::invalid_argument("level must be at least 2");
  if (!is_l_regular(p, l)) throw std::invalid_argument(p.to_string() + " is not " + std::to_string(l) + "-regular");
  std::map<int, int> ladders;  // ladder index -> number of nodes
  for (int r = 1; r <= p.length(); ++r)
    for (int c = 1; c <= p.row(r); ++c) ++ladders[(l - 1) * (c - 1) + (r - 1)];
  FWord w;
  for (auto it = ladders.rbegin(); it != ladders.rend(); ++it) w.push_back({mod(-it->first, l), it->second});
  return w;
}

std::string word_to_string(const FWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << " ";
    os << "f_" << w[k].residue;
    if (w[k].count != 1) os << "^(" << w[k].count << ")";
  }
  return os.str();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, bool regular_only, int l) {
  if (n < 0) throw std::invalid_argument("partition size must be nonnegative");
  std::vector<Partition> all;
  std::vector<int> cur;
  partitions_rec(n, n, cur, all);
  if (!regular_only) return all;
  std::vector<Partition> out;
  for (auto& p : all)
    if (is_l_regular(p, l)) out.push_back(std::move(p));
  return out;
}

}  // namespace tiltfock
