#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfvs/crux.hpp"
#include "dfvs/digraph.hpp"
#include "dfvs/generators.hpp"
#include "dfvs/separators.hpp"
#include "dfvs/structure.hpp"
#include "dfvs/tight_sequence.hpp"

namespace dfvs::testing {

// Pinned corpus seeds. Changing one changes every derived test instance.
inline constexpr std::uint64_t kCorpusSeed = 20220607;
inline constexpr std::uint64_t kChainSeed = 0xC4A1;
inline constexpr std::uint64_t kSequenceSeed = 0x5E0;
inline constexpr std::uint64_t kCruxSeed = 0xC7;
inline constexpr std::uint64_t kArcSeed = 0xA7C;

struct PairInstance {
  Digraph graph;
  Vertex s = 0;
  Vertex t = 0;
  int k = 0;
};

// Random digraph on n vertices plus a random Hamiltonian cycle.
Digraph random_strong(std::size_t n, std::size_t extra_arcs, SplitMix64& rng);

// (d, s, t) with s != t and n in [2, n_max]; t is usually, not always, reachable.
PairInstance sample_pair(SplitMix64& rng, std::size_t n_max, std::size_t m_max, int k_max);

// As sample_pair, but t reachable from s and not an out-neighbour of it, and
// k >= 1; about half the draws are strongly connected.
PairInstance sample_reachable_pair(SplitMix64& rng, std::size_t n_max, std::size_t m_max,
                                   int k_max);

// Strongly connected digraph with a cycle, n in [2, n_max], and (u, v) = (b, a)
// for a random arc (a, b). k holds p.
PairInstance sample_crux(SplitMix64& rng, std::size_t n_max, std::size_t m_max, int p_max);

// Literal set helpers.
VertexList out_neighbourhood(const Digraph& d, const VertexList& x);  // N+(X), sorted
VertexList closed_out_neighbourhood(const Digraph& d, const VertexList& x);  // N+[X]
VertexList reach_avoiding(const Digraph& d, Vertex from, const VertexList& avoid);  // R(from, S)
bool reachable_inside(const Digraph& d, Vertex from, const VertexList& x);  // all of X from `from` in D[X]
std::size_t structure_size(const Digraph& d, const VertexList& x);  // |Q[X]| = |X| + arcs inside

// Empty string when the result of separator_layers(d, s, t, k) is correct:
// ExceedsBudget exactly when it should be, and otherwise the four chain
// properties, the boundary identities and the l+1 gap lemma.
std::string check_chain(const PairInstance& in, const Bounded<SeparatorChain>& result);

// Empty string when the result of tight_separator_sequence is correct,
// including Condition 4 by subset enumeration and the label arrays.
std::string check_tight_sequence(const PairInstance& in,
                                 const Bounded<TightSeparatorSequence>& result);

// Monotonicity implications over every covering boundary pair (i < j) where
// neither boundary is dual- or completely-good. Counts checked pairs.
std::string check_monotonicity(const StructureInstance& q, const TightSeparatorSequence& seq,
                               std::size_t* pairs_checked = nullptr);

// Quadratic references for the two sequence scans.
std::optional<std::size_t> naive_llight_transition(const StructureInstance& q,
                                                   const TightSeparatorSequence& seq);
std::optional<std::size_t> naive_bad_gap(const StructureInstance& q,
                                         const TightSeparatorSequence& seq);

// Component id per vertex from pairwise reachability; equal ids iff mutually reachable.
std::vector<int> brute_force_components(const Digraph& d);

}  // namespace dfvs::testing
