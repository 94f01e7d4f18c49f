#include <algorithm>
#include <string>
#include <unordered_set>

#include "scs/solvers.hpp"

namespace scs {
namespace {

class Explorer {
 public:
  Explorer(const Instance& inst, Algorithm algo, std::size_t budget)
      : inst_(inst), algo_(algo), budget_(budget) {}

  void run() {
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < inst_.size(); ++i) pieces.push_back({inst_[i], {i}});
    visit(pieces);
  }

  Enumeration result() && { return std::move(result_); }

 private:
  static std::string state_key(const std::vector<Piece>& pieces) {
    std::vector<std::string_view> texts;
    for (const auto& p : pieces) texts.emplace_back(p.text);
    std::sort(texts.begin(), texts.end());
    std::string key;
    for (auto t : texts) {
      key += t;
      key += '\n';
    }
    return key;
  }

  void visit(const std::vector<Piece>& pieces) {
    if (pieces.size() == 1) {
      if (finals_.insert(pieces[0].text).second) {
        result_.solutions.push_back(
            assemble_solution(inst_, pieces[0].indices, pieces[0].text, log_));
      }
      return;
    }
    if (!seen_.insert(state_key(pieces)).second) return;
    if (result_.states_visited >= budget_) {
      result_.complete = false;
      return;
    }
    ++result_.states_visited;
    for (const auto& c : admissible_merges(pieces, algo_)) {
      std::vector<Piece> next;
      next.reserve(pieces.size() - 1);
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i == c.right) continue;
        if (i != c.left) {
          next.push_back(pieces[i]);
          continue;
        }
        Piece merged{pieces[c.left].text + pieces[c.right].text.substr(c.overlap),
                     pieces[c.left].indices};
        merged.indices.insert(merged.indices.end(), pieces[c.right].indices.begin(),
                              pieces[c.right].indices.end());
        next.push_back(std::move(merged));
      }
      log_.push_back({pieces[c.left].indices, pieces[c.right].indices, c.overlap});
      visit(next);
      log_.pop_back();
      if (!result_.complete) return;
    }
  }

  const Instance& inst_;
  Algorithm algo_;
  std::size_t budget_;
  std::unordered_set<std::string> seen_;
  std::unordered_set<std::string> finals_;
  std::vector<MergeStep> log_;
  Enumeration result_;
};

}  // namespace

Enumeration enumerate_instantiations(const Instance& inst, Algorithm algo, std::size_t budget) {
  Explorer explorer(inst, algo, budget);
  explorer.run();
  return std::move(explorer).result();
}

}  // namespace scs
