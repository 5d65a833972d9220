#include "minthint/hints/rank.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace minthint::hints {

std::vector<Hint> rank_hints(std::vector<Hint> hints) {
  std::map<std::pair<int, std::string>, std::size_t> best;
  std::vector<Hint> unique;
  for (auto& h : hints) {
    auto key = std::make_pair(h.line, h.text());
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(std::move(key), unique.size());
      unique.push_back(std::move(h));
    } else if (h.score > unique[it->second].score) {
      unique[it->second] = std::move(h);
    }
  }
  std::stable_sort(unique.begin(), unique.end(), [](const Hint& a, const Hint& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.support != b.support) return a.support > b.support;
    if (a.line != b.line) return a.line < b.line;
    if (a.ordinal != b.ordinal) return a.ordinal < b.ordinal;
    return a.text() < b.text();
  });
  return unique;
}

}  // namespace minthint::hints
