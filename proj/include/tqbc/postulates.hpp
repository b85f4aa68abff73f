#pragma once

// Exhaustive checkers for belief-change postulates at a single belief state.
//
// Belief sets are handled through their model sets: A ∈ K iff mods(K) ⊆ mods(A),
// Cn(K ∪ {A}) has models mods(K) ∩ mods(A), and K1 ∩ K2 has models
// mods(K1) ∪ mods(K2). Sentence variables range over canonical semantic
// representatives, one per world set: revision inputs over nonempty sets,
// contraction inputs over the sets the contraction operator admits.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tqbc/change.hpp"
#include "tqbc/frame.hpp"

namespace tqbc {

enum class PostulateId {
  AgmRevision1, AgmRevision2, AgmRevision3, AgmRevision4,
  AgmRevision5, AgmRevision6, AgmRevision7, AgmRevision8,
  AgmContraction1, AgmContraction2, AgmContraction3, AgmContraction4,
  AgmContraction5, AgmContraction6, AgmContraction7, AgmContraction8,
  HI, LI, EHI, EHIC, LB, UB, VAC,
  DpRevision1, DpRevision2, DpRevision3, DpRevision4,          // C*1-4
  DpRevisionSem1, DpRevisionSem2, DpRevisionSem3, DpRevisionSem4,  // CR*1-4
  DpContraction1, DpContraction2, DpContraction3, DpContraction4,  // C÷1-4
  DpContractionSem1, DpContractionSem2, DpContractionSem3, DpContractionSem4,  // CR÷1-4
  PFI,
};

/// Every postulate, in declaration order.
const std::vector<PostulateId>& all_postulates();

/// "AGM*4", "AGM÷5", "C÷3", "CR*1", "PFI", ...
std::string label(PostulateId p);
/// CLI token: "agm-r4", "agm-c5", "c-c3", "cr-r1", "pfi", ...
std::string token(PostulateId p);
/// Accepts the token or the label.
PostulateId parse_postulate_id(std::string_view text);

/// Whether checking the postulate needs a contraction operator.
bool needs_contraction(PostulateId p);

/// A falsifying instance of a postulate at one belief state.
struct Counterexample {
  PostulateId postulate;
  Tpo state;
  /// Sentence variables in declaration order, e.g. {"A", ...}, {"B", ...}.
  std::vector<std::pair<std::string, WorldSet>> sentences;
  /// Witness worlds, when the failure is about particular worlds.
  std::vector<World> worlds;
  std::string narrative;
};

/// Scans every admissible instantiation of the postulate's sentence variables
/// (first variable outermost, sets by bit encoding) and returns the first
/// failure. Throws OperatorMismatchError for a contraction postulate without `cop`.
std::optional<Counterexample> check_postulate(PostulateId p, const BeliefState& st, const Vocabulary& v,
                                              RevisionOp rop, const std::optional<ContractionOp>& cop = std::nullopt);

/// Checks one instantiation. `inputs` holds one world set per sentence variable.
/// Returns nothing when the instance lies outside the postulate's domain.
std::optional<Counterexample> check_postulate_instance(PostulateId p, const BeliefState& st, const Vocabulary& v,
                                                       RevisionOp rop, const std::optional<ContractionOp>& cop,
                                                       const std::vector<WorldSet>& inputs);

/// Re-runs the instance recorded in `cx`.
std::optional<Counterexample> replay(const Counterexample& cx, const Vocabulary& v, RevisionOp rop,
                                     const std::optional<ContractionOp>& cop = std::nullopt);

/// Number of admissible instantiations check_postulate scans.
std::size_t instance_count(PostulateId p, std::size_t world_count, const std::optional<ContractionOp>& cop);

enum class ChangeKind { Revision, Contraction };

/// CR*i / CR÷i on an explicit (prior, input, posterior) triple. Returns the
/// first failing world pair (x, y).
std::optional<std::pair<World, World>> check_semantic_dp(ChangeKind kind, int i, const Tpo& prior, WorldSet input,
                                                         const Tpo& posterior);

/// C*i / C÷i on an explicit (prior, input, posterior) triple, with follow-up
/// revisions performed by `rop`. Returns the first failing B.
std::optional<WorldSet> check_syntactic_dp(ChangeKind kind, int i, const Tpo& prior, WorldSet input,
                                           const Tpo& posterior, RevisionOp rop);

/// The order <{11}, {10 01}, {00}> over atoms p, q. Throws Error unless
/// [Ψ] = Cn(p∧q), [Ψ*¬p] = Cn(¬p∧q) and [Ψ*(p↔¬q)] = Cn(p↔¬q) hold under
/// every revision operator.
BeliefState triviality_witness(const Vocabulary& v);

/// Clauses (i)-(iii) above for one state and operator.
bool satisfies_triviality_clauses(const BeliefState& st, const Vocabulary& v, RevisionOp rop);

/// VAC: if A is consistent and B ∈ [Ψ*A] then [Ψ] ∩ [Ψ*A] ⊆ [Ψ*B].
std::optional<Counterexample> check_vac(const BeliefState& st, const Vocabulary& v, RevisionOp rop);

}  // namespace tqbc
