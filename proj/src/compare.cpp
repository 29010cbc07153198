/*
 * Copyright 2026 The msca Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "msca/synth.hpp"

namespace msca {
namespace {

template <typename T>
void set_difference(const std::set<T>& lhs, const std::set<T>& rhs, std::vector<T>& out) {
  std::ranges::set_difference(lhs, rhs, std::back_inserter(out));
}

// Dense view of an automaton for the isomorphism search.
struct Graph {
  using Edge = std::tuple<Label, Modality, std::size_t>;

  std::vector<StateVec> names;
  std::size_t initial = 0;
  std::vector<bool> final;
  std::vector<std::set<Edge>> out;
  std::vector<std::set<Edge>> in;

  explicit Graph(const Msca& a) {
    // BFS order from the initial state keeps the search local.
    std::map<StateVec, std::size_t> index;
    std::deque<StateVec> todo{a.initial()};
    index.emplace(a.initial(), 0);
    names.push_back(a.initial());
    while (!todo.empty()) {
      auto q = std::move(todo.front());
      todo.pop_front();
      for (const auto& t : a.outgoing(q))
        if (index.emplace(t.target, names.size()).second) {
          names.push_back(t.target);
          todo.push_back(t.target);
        }
    }
    out.resize(names.size());
    in.resize(names.size());
    final.resize(names.size());
    for (std::size_t s = 0; s < names.size(); ++s) final[s] = a.is_final(names[s]);
    for (const auto& t : a.transitions()) {
      auto src = index.find(t.source);
      if (src == index.end()) continue;
      const std::size_t tgt = index.at(t.target);
      out[src->second].insert({t.label, t.modality, tgt});
      in[tgt].insert({t.label, t.modality, src->second});
    }
  }

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& e : out) n += e.size();
    return n;
  }
};

// Colour refinement over both graphs with a shared palette.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine(const Graph& g,
                                                                     const Graph& h) {
  auto initial_colour = [](const Graph& x, std::size_t s) {
    return static_cast<std::size_t>(x.final[s]) * 2 + (s == x.initial ? 1 : 0);
  };
  std::vector<std::size_t> cg(g.names.size()), ch(h.names.size());
  for (std::size_t s = 0; s < cg.size(); ++s) cg[s] = initial_colour(g, s);
  for (std::size_t s = 0; s < ch.size(); ++s) ch[s] = initial_colour(h, s);

  std::size_t classes = 0;
  for (;;) {
    using Sig = std::tuple<std::size_t, std::vector<std::tuple<Label, Modality, std::size_t>>,
                           std::vector<std::tuple<Label, Modality, std::size_t>>>;
    std::map<Sig, std::size_t> palette;
    auto signature = [](const Graph& x, const std::vector<std::size_t>& c, std::size_t s) {
      Sig sig;
      std::get<0>(sig) = c[s];
      for (const auto& [l, m, t] : x.out[s]) std::get<1>(sig).emplace_back(l, m, c[t]);
      for (const auto& [l, m, t] : x.in[s]) std::get<2>(sig).emplace_back(l, m, c[t]);
      std::ranges::sort(std::get<1>(sig));
      std::ranges::sort(std::get<2>(sig));
      return sig;
    };
    std::vector<Sig> sg, sh;
    for (std::size_t s = 0; s < cg.size(); ++s) sg.push_back(signature(g, cg, s));
    for (std::size_t s = 0; s < ch.size(); ++s) sh.push_back(signature(h, ch, s));
    for (const auto& sig : sg) palette.emplace(sig, palette.size());
    for (const auto& sig : sh) palette.emplace(sig, palette.size());
    for (std::size_t s = 0; s < cg.size(); ++s) cg[s] = palette.at(sg[s]);
    for (std::size_t s = 0; s < ch.size(); ++s) ch[s] = palette.at(sh[s]);
    if (palette.size() == classes) break;
    classes = palette.size();
  }
  return {cg, ch};
}

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h, std::vector<std::size_t> cg,
            std::vector<std::size_t> ch)
      : g_(g), h_(h), cg_(std::move(cg)), ch_(std::move(ch)),
        fwd_(g.names.size(), kUnmapped), bwd_(h.names.size(), kUnmapped) {}

  bool run() { return extend(0); }

 private:
  static constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);

  bool consistent(std::size_t s, std::size_t t) const {
    if (cg_[s] != ch_[t] || g_.final[s] != h_.final[t]) return false;
    for (const auto& [l, m, v] : g_.out[s])
      if (fwd_[v] != kUnmapped && !h_.out[t].contains({l, m, fwd_[v]})) return false;
    for (const auto& [l, m, v] : g_.in[s])
      if (fwd_[v] != kUnmapped && !h_.in[t].contains({l, m, fwd_[v]})) return false;
    // Self loops: s maps to t.
    for (const auto& [l, m, v] : g_.out[s])
      if (v == s && !h_.out[t].contains({l, m, t})) return false;
    return true;
  }

  bool extend(std::size_t s) {
    if (s == g_.names.size()) return true;
    for (std::size_t t = 0; t < h_.names.size(); ++t) {
      if (bwd_[t] != kUnmapped || (s == 0) != (t == 0) || !consistent(s, t)) continue;
      fwd_[s] = t;
      bwd_[t] = s;
      if (extend(s + 1)) return true;
      fwd_[s] = kUnmapped;
      bwd_[t] = kUnmapped;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<std::size_t> cg_, ch_;
  std::vector<std::size_t> fwd_, bwd_;
};

}  // namespace

bool Diff::identical() const {
  return !rank_mismatch && !initial_differs && states_only_in_a.empty() &&
         states_only_in_b.empty() && finals_only_in_a.empty() && finals_only_in_b.empty() &&
         transitions_only_in_a.empty() && transitions_only_in_b.empty();
}

bool isomorphic(const Msca& a, const Msca& b) {
  if (a.is_empty() || b.is_empty()) return a.is_empty() && b.is_empty();
  if (a.rank() != b.rank()) return false;
  const Graph g(a), h(b);
  if (g.names.size() != h.names.size() || g.edge_count() != h.edge_count()) return false;
  auto [cg, ch] = refine(g, h);
  auto hist_g = cg, hist_h = ch;
  std::ranges::sort(hist_g);
  std::ranges::sort(hist_h);
  if (hist_g != hist_h) return false;
  return IsoSearch(g, h, std::move(cg), std::move(ch)).run();
}

Diff compare(const Msca& a, const Msca& b) {
  Diff d;
  if (a.rank() != b.rank()) {
    d.rank_mismatch = true;
    return d;
  }
  d.initial_differs = a.initial() != b.initial();
  set_difference(a.states(), b.states(), d.states_only_in_a);
  set_difference(b.states(), a.states(), d.states_only_in_b);
  set_difference(a.finals(), b.finals(), d.finals_only_in_a);
  set_difference(b.finals(), a.finals(), d.finals_only_in_b);
  set_difference(a.transitions(), b.transitions(), d.transitions_only_in_a);
  set_difference(b.transitions(), a.transitions(), d.transitions_only_in_b);
  d.isomorphic = isomorphic(a, b);
  return d;
}

}  // namespace msca
