#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "scs/errors.hpp"
#include "scs/instances.hpp"
#include "scs/solvers.hpp"

namespace scs {
namespace {

std::vector<std::size_t> positions(const HamPath& p) {
  std::vector<std::size_t> pos(p.order.size());
  for (std::size_t i = 0; i < p.order.size(); ++i) pos[p.order[i]] = i;
  return pos;
}

std::set<std::pair<std::size_t, std::size_t>> edge_set(std::span<const EdgeRef> edges) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : edges) out.emplace(e.tail, e.head);
  return out;
}

WeightedDigraph random_graph(std::mt19937_64& rng, std::size_t n, Weight max_w) {
  std::vector<Weight> nodes(n), edges(n * n);
  for (auto& w : nodes) w = max_w + rng() % 3;
  for (auto& w : edges) w = rng() % (max_w + 1);
  return WeightedDigraph(nodes, edges);
}

// ---------------------------------------------------------------------------
// Orders

TEST(Order, PoliciesAreDominanceRespecting) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    Instance inst = random_instance(rng(), 5, 5, 2);
    WeightedDigraph g = sigma_graph(inst, inst.alphabet()[0]);
    auto lex = OrderPolicy::lexicographic().order(g);
    ASSERT_EQ(lex.size(), g.size() * g.size());
    ASSERT_TRUE(is_dominance_respecting(g, lex));
    ASSERT_TRUE(std::is_sorted(lex.begin(), lex.end(), [&](const EdgeRef& a, const EdgeRef& b) {
      return g.key(a.tail, a.head) > g.key(b.tail, b.head);
    }));
    auto rnd = OrderPolicy::seeded_random(rng()).order(g);
    ASSERT_TRUE(is_dominance_respecting(g, rnd));
    ASSERT_EQ(edge_set(rnd), edge_set(lex));
  }
}

TEST(Order, SeededRandomIsDeterministic) {
  WeightedDigraph g = overlap_graph(gen_family({Family::fig2}));
  EXPECT_EQ(OrderPolicy::seeded_random(5).order(g), OrderPolicy::seeded_random(5).order(g));
  EXPECT_NE(OrderPolicy::seeded_random(5).order(g), OrderPolicy::seeded_random(6).order(g));
}

TEST(Order, ExplicitValidation) {
  WeightedDigraph g = overlap_graph(Instance::from_strings({"abbb", "bbba"}));
  auto lex = OrderPolicy::lexicographic().order(g);
  std::reverse(lex.begin(), lex.end());
  EXPECT_THROW(OrderPolicy::explicit_order(lex).order(g), std::invalid_argument);
  lex.pop_back();
  EXPECT_THROW(OrderPolicy::explicit_order(lex).order(g), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// PATH

TEST(Path, LowWeightEdgeFirstBuildsLongString) {
  Instance inst = Instance::from_strings({"abbb", "bbba"});
  WeightedDigraph g = overlap_graph(inst);
  std::vector<EdgeRef> order{g.edge(1, 0), g.edge(0, 1), g.edge(0, 0), g.edge(1, 1)};
  PathResult r = path(g, OrderPolicy::explicit_order(order));
  EXPECT_EQ(r.path.order, (std::vector<std::size_t>{1, 0}));
  std::string s = superstring_of_permutation(inst, r.path.order);
  EXPECT_EQ(s, "bbbabbb");
  EXPECT_EQ(path_length(g, r.path), 7);
  ASSERT_EQ(r.trace.rejected.size(), 3u);
  EXPECT_EQ(r.trace.rejected[0].reason, Rejection::cycle);
}

TEST(Path, SingleNode) {
  WeightedDigraph g = overlap_graph(Instance::from_strings({"aba"}));
  PathResult r = path(g, OrderPolicy::lexicographic());
  EXPECT_EQ(r.path.order, std::vector<std::size_t>{0});
  EXPECT_TRUE(r.path.edges(g).empty());
  EXPECT_TRUE(r.trace.included.empty());
  EXPECT_TRUE(r.trace.rejected.empty());
  EXPECT_TRUE(r.trace.bad_back_edges.empty());
  EXPECT_TRUE(r.trace.culprits.empty());
  DiagnosticsReport d = analyze_trace(g, r);
  EXPECT_EQ(d.w_bc, 0u);
  EXPECT_TRUE(d.main2_ok);
}

TEST(Path, Fig2InstanceWithinFourTimesOptimum) {
  WeightedDigraph g = overlap_graph(gen_family({Family::fig2}));
  PathResult r = path(g, OrderPolicy::lexicographic());
  EXPECT_EQ(shortest_hamiltonian_path_length(g), 11);
  EXPECT_LE(path_length(g, r.path), 4 * 11);
}

TEST(Path, MatchesIndependentScan) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    WeightedDigraph g = random_graph(rng, 1 + rng() % 7, 4);
    auto order = OrderPolicy::seeded_random(rng()).order(g);
    PathResult r = path(g, OrderPolicy::explicit_order(order));
    ASSERT_EQ(r.path.order, oracle::path_scan(g.size(), order));
  }
}

TEST(Path, RejectsByDominanceBeforeCycle) {
  // Every edge either enters the path or is rejected, dominated ones as R1.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    WeightedDigraph g = random_graph(rng, 2 + rng() % 6, 3);
    PathResult r = path(g, OrderPolicy::seeded_random(rng()));
    ASSERT_EQ(r.trace.included.size() + r.trace.rejected.size(), g.size() * g.size());
    ASSERT_EQ(r.trace.included.size(), g.size() - 1);
    ASSERT_EQ(edge_set(r.trace.included), edge_set(r.path.edges(g)));
    auto pos = positions(r.path);
    for (const auto& rej : r.trace.rejected) {
      bool used_endpoint = std::any_of(r.trace.included.begin(), r.trace.included.end(), [&](const EdgeRef& e) {
        return e.tail == rej.edge.tail || e.head == rej.edge.head;
      });
      if (rej.reason == Rejection::cycle) {
        ASSERT_LE(pos[rej.edge.head], pos[rej.edge.tail]);
      } else {
        ASSERT_TRUE(used_endpoint);
      }
    }
  }
}

void check_trace_structure(const WeightedDigraph& g, const PathResult& r) {
  const auto& t = r.trace;
  auto pos = positions(r.path);
  std::size_t cycle_rejections = 0;
  for (const auto& rej : t.rejected) cycle_rejections += rej.reason == Rejection::cycle;
  ASSERT_EQ(t.bad_back_edges.size(), cycle_rejections);
  ASSERT_FALSE(t.culprits.empty());
  for (const auto& b : t.bad_back_edges) {
    ASSERT_EQ(b.span.first, pos[b.edge.head]);
    ASSERT_EQ(b.span.last, pos[b.edge.tail]);
  }
  for (const auto& c : t.culprits) {
    for (const auto& b : t.bad_back_edges) {
      ASSERT_FALSE(!(b.span == c.span) && c.span.contains(b.span));
    }
  }
  for (std::size_t i = 1; i < t.culprits.size(); ++i) {
    ASSERT_LT(t.culprits[i - 1].span.last, t.culprits[i].span.first);
  }
  ASSERT_EQ(t.weak_links.size(), t.culprits.size() - 1);
  std::vector<std::size_t> included_at(g.size(), 0);
  for (std::size_t k = 0; k < t.included.size(); ++k) included_at[pos[t.included[k].tail]] = k;
  for (std::size_t i = 0; i < t.weak_links.size(); ++i) {
    const std::size_t from = t.culprits[i].span.last, to = t.culprits[i + 1].span.first;
    const std::size_t p = pos[t.weak_links[i].tail];
    ASSERT_EQ(pos[t.weak_links[i].head], p + 1);
    ASSERT_GE(p, from);
    ASSERT_LT(p, to);
    for (std::size_t q = from; q < to; ++q) ASSERT_LE(included_at[q], included_at[p]);
  }
  ASSERT_EQ(t.blocks.size(), t.culprits.size());
  ASSERT_EQ(t.blocks.front().first, 0u);
  ASSERT_EQ(t.blocks.back().last, g.size() - 1);
  for (std::size_t i = 0; i < t.blocks.size(); ++i) {
    if (i > 0) ASSERT_EQ(t.blocks[i].first, t.blocks[i - 1].last + 1);
    ASSERT_TRUE(t.blocks[i].contains(t.culprits[i].span));
  }
}

TEST(Path, TraceStructureOnRandomInstances) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = random_instance(rng(), 2 + rng() % 7, 6, 2 + rng() % 2);
    if (inst.size() < 2) continue;
    for (Sym p : inst.alphabet()) {
      WeightedDigraph g = sigma_graph(inst, p);
      check_trace_structure(g, path(g, OrderPolicy::seeded_random(rng())));
    }
    WeightedDigraph og = overlap_graph(inst);
    check_trace_structure(og, path(og, OrderPolicy::lexicographic()));
  }
}

TEST(Path, FourApproximationOnAllGraphsOfSmallInstances) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = random_instance(rng(), 1 + rng() % 7, 6, 2 + rng() % 2);
    std::vector<WeightedDigraph> graphs{overlap_graph(inst)};
    for (Sym p : inst.alphabet()) graphs.push_back(sigma_graph(inst, p));
    for (const auto& g : graphs) {
      const Length shp = oracle::shortest_hamiltonian_path(g);
      ASSERT_EQ(shortest_hamiltonian_path_length(g), shp);
      for (int k = 0; k < 5; ++k) {
        PathResult r = path(g, OrderPolicy::seeded_random(rng()));
        ASSERT_LE(path_length(g, r.path), 4 * shp);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// CYC

TEST(Cyc, Examples) {
  WeightedDigraph two = overlap_graph(Instance::from_strings({"ab", "ba"}));
  CycleCover c = cyc(two, OrderPolicy::lexicographic());
  EXPECT_EQ(c.successors(), (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(cover_weight(two, c), 2u);

  WeightedDigraph zero({1, 2, 3}, std::vector<Weight>(9, 0));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(cover_weight(zero, cyc(zero, OrderPolicy::seeded_random(seed))), 0u);
  }

  WeightedDigraph fig2 = overlap_graph(gen_family({Family::fig2}));
  EXPECT_EQ(cover_weight(fig2, cyc(fig2, OrderPolicy::lexicographic())), oracle::max_cycle_cover(fig2));
}

TEST(Cyc, OptimalOnStringGraphs) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = random_instance(rng(), 1 + rng() % 7, 6, 2 + rng() % 2);
    std::vector<WeightedDigraph> graphs{overlap_graph(inst)};
    for (Sym p : inst.alphabet()) graphs.push_back(sigma_graph(inst, p));
    for (const auto& g : graphs) {
      const Weight best = oracle::max_cycle_cover(g);
      for (int k = 0; k < 4; ++k) {
        ASSERT_EQ(cover_weight(g, cyc(g, OrderPolicy::seeded_random(rng()))), best);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// GA and LGA

TEST(Greedy, IntroOutcomes) {
  Instance inst = gen_family({Family::intro, 3});
  Solution good = greedy_scs(inst, tie::prefer([](const MergeCandidate& c) {
    return c.left_piece->indices.back() == 0 && c.right_piece->indices.front() == 1;
  }));
  EXPECT_EQ(good.superstring, "abbbbc");
  EXPECT_EQ(good.length, 6u);
  Solution bad = greedy_scs(inst, tie::prefer([](const MergeCandidate& c) {
    return c.left_piece->indices.back() == 0 && c.right_piece->indices.front() == 2;
  }));
  EXPECT_EQ(bad.superstring, "abbbcbbbb");
  EXPECT_EQ(bad.length, 9u);
}

TEST(Greedy, UniformInstanceScriptedChain) {
  Instance inst = gen_family({Family::uniform25});
  Solution s = greedy_scs(inst, tie::scripted({{3, 2}, {1, 4}, {4, 0}, {2, 1}}));
  EXPECT_EQ(s.superstring, "baabaabaaabaaaab");
  EXPECT_EQ(s.merge_log.front().overlap, 5u);
  EXPECT_EQ(s.per_symbol.at('b'), 5u);
}

TEST(Greedy, ScriptRejectsInadmissibleMerge) {
  Instance inst = gen_family({Family::intro, 3});
  EXPECT_THROW(greedy_scs(inst, tie::scripted({{2, 0}})), std::invalid_argument);
}

TEST(LocallyGreedy, LowerBoundFamilyScripted) {
  Instance inst = gen_family({Family::lga3, 3});
  Solution s = locally_greedy_scs(inst, tie::scripted({{0, 2}, {3, 0}, {2, 1}}));
  EXPECT_EQ(s.superstring, "bbccabbbcbbbb");
  EXPECT_EQ(s.length, 13u);
  EXPECT_THROW(greedy_scs(inst, tie::scripted({{0, 2}, {3, 0}, {2, 1}})), std::invalid_argument);
}

TEST(LocallyGreedy, PairChoosesShortOverlap) {
  Instance inst = Instance::from_strings({"abbb", "bbba"});
  Solution s = locally_greedy_scs(inst, tie::scripted({{1, 0}}));
  EXPECT_EQ(s.superstring, "bbbabbb");
}

TEST(LocallyGreedy, ZeroOverlapPair) {
  Instance inst = Instance::from_strings({"ab", "cd"});
  auto all = enumerate_instantiations(inst, Algorithm::locally_greedy);
  ASSERT_EQ(all.solutions.size(), 2u);
  for (const auto& s : all.solutions) EXPECT_EQ(s.length, 4u);
}

TEST(LocallyGreedy, SelfOverlapIsIgnored) {
  // ov(aaaa,aaaa) = 3 exceeds every cross overlap into aaaa and must not block (baa, aaaa).
  auto cands = admissible_merges(std::vector<Piece>{{"aaaa", {0}}, {"baa", {1}}}, Algorithm::locally_greedy);
  ASSERT_EQ(cands.size(), 2u);
  EXPECT_EQ(cands[1].left, 1u);
  EXPECT_EQ(cands[1].right, 0u);
  EXPECT_EQ(cands[1].overlap, 2u);
}

void check_solution(const Instance& inst, const Solution& s) {
  ASSERT_TRUE(is_permutation_of(s.perm, inst.size()));
  ASSERT_EQ(s.length, s.superstring.size());
  ASSERT_EQ(s.length + s.compression, inst.total_length());
  std::size_t total = 0;
  for (const auto& [p, c] : s.per_symbol) {
    ASSERT_EQ(c, oracle::count(s.superstring, p));
    total += c;
  }
  ASSERT_EQ(total, s.length);
  for (const auto& t : inst.strings()) ASSERT_NE(s.superstring.find(t), std::string::npos);
  ASSERT_EQ(s.merge_log.size() + 1, inst.size());
  std::size_t merged = 0;
  for (const auto& m : s.merge_log) merged += m.overlap;
  ASSERT_EQ(merged, s.compression);
}

TEST(Greedy, SolutionsAreConsistent) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = random_instance(rng(), 1 + rng() % 7, 7, 2 + rng() % 2);
    check_solution(inst, greedy_scs(inst, tie::seeded_random(rng())));
    check_solution(inst, locally_greedy_scs(inst, tie::seeded_random(rng())));
    check_solution(inst, exact_scs(inst));
  }
}

TEST(Greedy, GreedyRunsAreLocallyGreedyRuns) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = random_instance(rng(), 2 + rng() % 5, 5, 2);
    Solution ga = greedy_scs(inst, tie::seeded_random(rng()));
    std::vector<std::pair<std::size_t, std::size_t>> script;
    for (const auto& m : ga.merge_log) script.emplace_back(m.tail(), m.head());
    ASSERT_EQ(locally_greedy_scs(inst, tie::scripted(script)).superstring, ga.superstring);
  }
}

// ---------------------------------------------------------------------------
// Exact oracles

TEST(Exact, Fig2Instance) {
  Solution s = exact_scs(gen_family({Family::fig2}));
  EXPECT_EQ(s.length, 11u);
  EXPECT_EQ(s.compression, 7u);
  EXPECT_EQ(s.superstring, "DABECACBDFA");
}

TEST(Exact, IntroFamily) { EXPECT_EQ(exact_scs(gen_family({Family::intro, 3})).length, 6u); }

TEST(Exact, UniformInstanceSymbolMinimum) {
  Instance inst = gen_family({Family::uniform25});
  SigmaOptimum opt = exact_sigma(inst, 'b');
  EXPECT_EQ(opt.count, 2u);
  std::string witness = "aaaabaabaaaa";
  for (const auto& s : inst.strings()) EXPECT_NE(witness.find(s), std::string::npos);
  EXPECT_EQ(count_occurrences(superstring_of_permutation(inst, opt.perm), 'b'), 2u);
}

TEST(Exact, MatchesPermutationOracles) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = random_instance(rng(), 1 + rng() % 7, 6, 2 + rng() % 2);
    Solution s = exact_scs(inst);
    ASSERT_EQ(s.length, oracle::scs_length(inst.strings()));
    ASSERT_EQ(s.superstring, superstring_of_permutation(inst, s.perm));
    for (Sym p : inst.alphabet()) {
      SigmaOptimum opt = exact_sigma(inst, p);
      ASSERT_EQ(opt.count, oracle::min_sigma(inst.strings(), p));
      ASSERT_EQ(opt.count, oracle::count(superstring_of_permutation(inst, opt.perm), p));
    }
  }
}

TEST(Exact, SymbolMinimumBoundsEverySuperstring) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 150; ++trial) {
    Instance inst = random_instance(rng(), 1 + rng() % 3, 4, 2);
    if (inst.total_length() > 12) continue;
    for (Sym p : inst.alphabet()) {
      ASSERT_EQ(exact_sigma(inst, p).count,
                oracle::min_sigma_any_superstring(inst.strings(), p, inst.alphabet(), inst.total_length()));
    }
  }
}

TEST(Exact, Capacity) {
  std::vector<std::string> many;
  for (int i = 0; i < 21; ++i) {
    std::string s;
    for (int b = 0; b < 5; ++b) s += ((i >> b) & 1) ? 'b' : 'a';
    many.push_back(s + "c");
  }
  Instance inst = Instance::from_strings(many);
  EXPECT_THROW(exact_scs(inst), CapacityError);
  EXPECT_THROW(exact_sigma(inst, 'a'), CapacityError);
}

// ---------------------------------------------------------------------------
// Enumeration

std::set<std::size_t> lengths(const Enumeration& e) {
  std::set<std::size_t> out;
  for (const auto& s : e.solutions) out.insert(s.length);
  return out;
}

TEST(Enumerate, PaperExamples) {
  auto intro = enumerate_instantiations(gen_family({Family::intro, 3}), Algorithm::greedy);
  EXPECT_TRUE(lengths(intro).count(6));
  EXPECT_TRUE(lengths(intro).count(9));
  auto lga = enumerate_instantiations(gen_family({Family::lga3, 3}), Algorithm::locally_greedy);
  EXPECT_EQ(*lengths(lga).rbegin(), 13u);
  auto uni = enumerate_instantiations(gen_family({Family::uniform25}), Algorithm::greedy);
  std::size_t max_b = 0;
  for (const auto& s : uni.solutions) max_b = std::max(max_b, s.per_symbol.at('b'));
  EXPECT_EQ(max_b, 5u);
}

TEST(Enumerate, MatchesUnmemoizedOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = random_instance(rng(), 1 + rng() % 5, 5, 2 + rng() % 2);
    for (auto algo : {Algorithm::greedy, Algorithm::locally_greedy}) {
      auto e = enumerate_instantiations(inst, algo);
      ASSERT_TRUE(e.complete);
      std::set<std::string> got;
      for (const auto& s : e.solutions) {
        ASSERT_TRUE(got.insert(s.superstring).second);
        check_solution(inst, s);
      }
      ASSERT_EQ(got, oracle::all_outcomes(inst.strings(), algo == Algorithm::greedy));
    }
  }
}

TEST(Enumerate, MergeLogsReplay) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    Instance inst = random_instance(rng(), 2 + rng() % 4, 5, 2);
    for (const auto& s : enumerate_instantiations(inst, Algorithm::locally_greedy).solutions) {
      std::vector<std::pair<std::size_t, std::size_t>> script;
      for (const auto& m : s.merge_log) script.emplace_back(m.tail(), m.head());
      Solution again = locally_greedy_scs(inst, tie::scripted(script));
      ASSERT_EQ(again.superstring, s.superstring);
      ASSERT_EQ(again.merge_log, s.merge_log);
    }
  }
}

TEST(Enumerate, BudgetMarksPartialResult) {
  auto e = enumerate_instantiations(gen_family({Family::uniform25}), Algorithm::greedy, 2);
  EXPECT_FALSE(e.complete);
  EXPECT_LE(e.states_visited, 2u);
}

// ---------------------------------------------------------------------------
// LGA as PATH

void check_replays(const Instance& inst, const Solution& s) {
  std::vector<WeightedDigraph> graphs{overlap_graph(inst)};
  for (Sym p : inst.alphabet()) graphs.push_back(sigma_graph(inst, p));
  std::set<std::pair<std::size_t, std::size_t>> merges;
  for (const auto& m : s.merge_log) merges.emplace(m.tail(), m.head());
  for (const auto& g : graphs) {
    auto order = replay_order(g, s.merge_log);
    ASSERT_TRUE(is_dominance_respecting(g, order));
    PathResult r = path(g, OrderPolicy::explicit_order(order));
    ASSERT_EQ(edge_set(r.trace.included), merges);
    ASSERT_EQ(r.path.order, s.perm);
    for (std::size_t k = 0; k < s.merge_log.size(); ++k) {
      ASSERT_EQ(r.trace.included[k].tail, s.merge_log[k].tail());
      ASSERT_EQ(r.trace.included[k].head, s.merge_log[k].head());
    }
  }
}

// True when every merge of the run also beats the self-overlaps of both pieces.
bool beats_self_overlaps(const Instance& inst, const Solution& s) {
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < inst.size(); ++i) pieces.push_back({inst[i], {i}});
  for (const auto& m : s.merge_log) {
    auto find = [&](const std::vector<std::size_t>& idx) {
      return std::find_if(pieces.begin(), pieces.end(), [&](const Piece& p) { return p.indices == idx; });
    };
    auto a = find(m.left), b = find(m.right);
    if (m.overlap < oracle::overlap(a->text, a->text) || m.overlap < oracle::overlap(b->text, b->text)) {
      return false;
    }
    a->text += b->text.substr(m.overlap);
    a->indices.insert(a->indices.end(), m.right.begin(), m.right.end());
    pieces.erase(b);
  }
  return true;
}

TEST(Replay, GreedyRunsArePathRuns) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = random_instance(rng(), 2 + rng() % 5, 6, 2 + rng() % 2);
    if (inst.size() < 2) continue;
    for (const auto& s : enumerate_instantiations(inst, Algorithm::greedy).solutions) check_replays(inst, s);
  }
}

TEST(Replay, SelfRespectingLocallyGreedyRunsArePathRuns) {
  std::mt19937_64 rng(16);
  std::size_t checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = random_instance(rng(), 2 + rng() % 5, 6, 2 + rng() % 2);
    if (inst.size() < 2) continue;
    for (const auto& s : enumerate_instantiations(inst, Algorithm::locally_greedy).solutions) {
      if (!beats_self_overlaps(inst, s)) continue;
      ++checked;
      check_replays(inst, s);
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(Replay, LowerBoundRunIsPathRun) {
  Instance inst = gen_family({Family::lga3, 3});
  check_replays(inst, locally_greedy_scs(inst, tie::scripted({{0, 2}, {3, 0}, {2, 1}})));
}

TEST(Replay, ClosingMergeAgainstLongerReverseOverlapEscapesPath) {
  // Two pieces left: abba.baa and ccbcc.ccbcab. Without self-pairs LGA may
  // join them as 1 -> 0 with overlap 0, but 3 -> 2 (weight 2) strictly
  // dominates 1 -> 2 (weight 1), which strictly dominates 1 -> 0, and no
  // chosen edge or cycle can reject 3 -> 2 first.
  Instance inst = Instance::from_strings({"ccbcc", "baa", "abba", "ccbcab"});
  Solution s = locally_greedy_scs(inst, tie::scripted({{2, 1}, {0, 3}, {1, 0}}));
  EXPECT_EQ(s.superstring, "abbaaccbccbcab");
  EXPECT_FALSE(beats_self_overlaps(inst, s));
  WeightedDigraph g = overlap_graph(inst);
  EXPECT_GT(g.weight(3, 2), g.weight(1, 2));
  EXPECT_GT(g.weight(1, 2), g.weight(1, 0));
  EXPECT_THROW(replay_order(g, s.merge_log), std::invalid_argument);
}

TEST(Replay, MergedOverlapEqualsEndpointOverlap) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 500; ++trial) {
    Instance inst = random_instance(rng(), 2 + rng() % 5, 6, 2);
    Solution s = locally_greedy_scs(inst, tie::seeded_random(rng()));
    for (const auto& m : s.merge_log) ASSERT_EQ(m.overlap, oracle::overlap(inst[m.tail()], inst[m.head()]));
  }
}

TEST(Replay, RejectsBrokenLogs) {
  WeightedDigraph g = overlap_graph(gen_family({Family::intro, 3}));
  std::vector<MergeStep> short_log{{{0}, {1}, 3}};
  EXPECT_THROW(replay_order(g, short_log), std::invalid_argument);
  std::vector<MergeStep> cyclic{{{0}, {1}, 3}, {{1}, {0}, 0}};
  EXPECT_THROW(replay_order(g, cyclic), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Diagnostics

TEST(Diagnostics, LowerBoundFamilyAdversarialPolicy) {
  Instance inst = gen_family({Family::lga3, 3});
  WeightedDigraph g = overlap_graph(inst);
  Solution worst = locally_greedy_scs(inst, tie::scripted({{0, 2}, {3, 0}, {2, 1}}));
  PathResult r = path(g, OrderPolicy::explicit_order(replay_order(g, worst.merge_log)));
  EXPECT_EQ(path_length(g, r.path), 13);
  DiagnosticsReport d = analyze_trace(g, r);
  EXPECT_TRUE(d.laminar_ok);
  EXPECT_TRUE(d.placement_ok);
  EXPECT_TRUE(d.main2_ok);
  EXPECT_EQ(d.shp_length, 7);
  EXPECT_EQ(d.path_length, 13);
}

TEST(Diagnostics, RandomInstancesPass) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = random_instance(rng(), 1 + rng() % 8, 6, 2 + rng() % 2);
    std::vector<WeightedDigraph> graphs{overlap_graph(inst)};
    for (Sym p : inst.alphabet()) graphs.push_back(sigma_graph(inst, p));
    for (const auto& g : graphs) {
      PathResult r = path(g, OrderPolicy::seeded_random(rng()));
      DiagnosticsReport d = analyze_trace(g, r);
      ASSERT_TRUE(d.laminar_ok && d.placement_ok && d.main2_ok);
      ASSERT_EQ(d.main2_ok, static_cast<Length>(d.w_bc) - 2 * d.cm_length <= d.shp_length);
      ASSERT_EQ(d.shp_length, oracle::shortest_hamiltonian_path(g));
    }
  }
}

TEST(Diagnostics, Capacity) {
  WeightedDigraph g(std::vector<Weight>(16, 1), std::vector<Weight>(256, 0));
  PathResult r = path(g, OrderPolicy::lexicographic());
  EXPECT_THROW(analyze_trace(g, r), CapacityError);
}

}  // namespace
}  // namespace scs
