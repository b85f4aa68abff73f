#pragma once

// Iterated revision and contraction of belief states held as tpos.
//
// Every operation has a WorldSet overload (the semantic input) and a Sentence
// overload that first takes models over the given vocabulary.

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "tqbc/combinators.hpp"
#include "tqbc/logic.hpp"
#include "tqbc/tpo.hpp"

namespace tqbc {

/// An epistemic state Ψ, represented by its plausibility order ⪯_Ψ.
class BeliefState {
 public:
  explicit BeliefState(Tpo order) : order_(std::move(order)) {}

  const Tpo& order() const { return order_; }
  std::size_t world_count() const { return order_.world_count(); }

  /// mods([Ψ]) = min(⪯_Ψ, W); never empty.
  WorldSet belief_models() const { return order_.bottom(); }

  /// A ∈ [Ψ] for the sentence whose models are `a`.
  bool believes(WorldSet a) const { return belief_models().subset_of(a); }

  friend bool operator==(const BeliefState&, const BeliefState&) = default;

 private:
  Tpo order_;
};

enum class RevisionOp { Natural, Restrained, Lexicographic };

inline constexpr RevisionOp kAllRevisionOps[] = {RevisionOp::Natural, RevisionOp::Restrained, RevisionOp::Lexicographic};

/// "natural", "restrained", "lex".
std::string token(RevisionOp op);
RevisionOp parse_revision_op(std::string_view token);

/// Throws InconsistentInputError when `a` is empty.
BeliefState revise(const BeliefState& st, WorldSet a, RevisionOp op);
BeliefState revise(const BeliefState& st, const Sentence& a, const Vocabulary& v, RevisionOp op);

/// ⪯_{Ψ÷A} = ⪯_Ψ ⊕ ⪯_{Ψ*¬A}. Throws InadmissibleContractionError when `a` is W.
BeliefState contract_via_combi(const BeliefState& st, WorldSet a, RevisionOp rop, const Combinator& c);
BeliefState contract_via_combi(const BeliefState& st, const Sentence& a, const Vocabulary& v, RevisionOp rop,
                               const Combinator& c);

/// Lowest cell min(⪯, ¬A) ∪ min(⪯, W); everything else keeps its prior order.
BeliefState natural_contraction(const BeliefState& st, WorldSet a);
BeliefState natural_contraction(const BeliefState& st, const Sentence& a, const Vocabulary& v);

/// Cell i is the i-th lowest A-worlds together with the i-th lowest ¬A-worlds.
/// Needs both A and ¬A consistent.
BeliefState lexicographic_contraction(const BeliefState& st, WorldSet a);
BeliefState lexicographic_contraction(const BeliefState& st, const Sentence& a, const Vocabulary& v);

/// Lowest cell min(⪯, W) ∪ min(⪯, ¬A); then the remaining ¬A-worlds in their
/// prior order; then the remaining A-worlds in their prior order.
/// Coincides with right_biased_combine(⪯_Ψ, ⪯_{Ψ*_L ¬A}).
BeliefState priority_contraction(const BeliefState& st, WorldSet a);
BeliefState priority_contraction(const BeliefState& st, const Sentence& a, const Vocabulary& v);

/// Every A-world strictly more plausible than every ¬A-world, with A consistent.
bool is_strongly_believed(const BeliefState& st, WorldSet a);
bool is_strongly_believed(const BeliefState& st, const Sentence& a, const Vocabulary& v);

/// A contraction operator: COMBI over a revision operator and combinator, or
/// one of the directly defined operators.
class ContractionOp {
 public:
  struct ViaCombi {
    RevisionOp revision;
    Combinator combinator;
  };
  enum class Direct { Natural, Lexicographic, Priority };

  static ContractionOp via_combi(RevisionOp rop, Combinator c) { return ContractionOp(ViaCombi{rop, std::move(c)}); }
  static ContractionOp natural() { return ContractionOp(Direct::Natural); }
  static ContractionOp lexicographic() { return ContractionOp(Direct::Lexicographic); }
  static ContractionOp priority() { return ContractionOp(Direct::Priority); }

  /// Tokens "natural", "lex", "priority"; "via-combi" needs rop and combinator.
  static ContractionOp parse(std::string_view token, RevisionOp rop, const Combinator& c);

  bool is_via_combi() const { return std::holds_alternative<ViaCombi>(impl_); }
  const ViaCombi* combi() const { return std::get_if<ViaCombi>(&impl_); }

  /// Whether contracting by `a` is defined: a ≠ W, and for lexicographic also a ≠ ∅.
  bool admits(WorldSet a) const;

  BeliefState apply(const BeliefState& st, WorldSet a) const;

  /// e.g. "via-combi(lex, stq)", "natural".
  std::string name() const;

 private:
  explicit ContractionOp(std::variant<ViaCombi, Direct> impl) : impl_(std::move(impl)) {}
  std::variant<ViaCombi, Direct> impl_;
};

}  // namespace tqbc
