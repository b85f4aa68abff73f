#include "tqbc/postulates.hpp"

#include <algorithm>
#include <array>

#include "tqbc/error.hpp"

namespace tqbc {

namespace {

enum class Var { Rev, Con };

struct Info {
  PostulateId id;
  const char* label;
  const char* token;
  std::vector<Var> vars;
};

const std::vector<Info>& table() {
  using P = PostulateId;
  static const std::vector<Info> t = {
      {P::AgmRevision1, "AGM*1", "agm-r1", {Var::Rev}},
      {P::AgmRevision2, "AGM*2", "agm-r2", {Var::Rev}},
      {P::AgmRevision3, "AGM*3", "agm-r3", {Var::Rev}},
      {P::AgmRevision4, "AGM*4", "agm-r4", {Var::Rev}},
      {P::AgmRevision5, "AGM*5", "agm-r5", {Var::Rev}},
      {P::AgmRevision6, "AGM*6", "agm-r6", {Var::Rev}},
      {P::AgmRevision7, "AGM*7", "agm-r7", {Var::Rev, Var::Rev}},
      {P::AgmRevision8, "AGM*8", "agm-r8", {Var::Rev, Var::Rev}},
      {P::AgmContraction1, "AGM÷1", "agm-c1", {Var::Con}},
      {P::AgmContraction2, "AGM÷2", "agm-c2", {Var::Con}},
      {P::AgmContraction3, "AGM÷3", "agm-c3", {Var::Con}},
      {P::AgmContraction4, "AGM÷4", "agm-c4", {Var::Con}},
      {P::AgmContraction5, "AGM÷5", "agm-c5", {Var::Con}},
      {P::AgmContraction6, "AGM÷6", "agm-c6", {Var::Con}},
      {P::AgmContraction7, "AGM÷7", "agm-c7", {Var::Con, Var::Con}},
      {P::AgmContraction8, "AGM÷8", "agm-c8", {Var::Con, Var::Con}},
      {P::HI, "HI", "hi", {Var::Con}},
      {P::LI, "LI", "li", {Var::Rev}},
      {P::EHI, "EHI", "ehi", {Var::Con, Var::Rev}},
      {P::EHIC, "EHIC", "ehic", {Var::Con, Var::Con}},
      {P::LB, "LB", "lb", {Var::Con, Var::Rev}},
      {P::UB, "UB", "ub", {Var::Con, Var::Rev}},
      {P::VAC, "VAC", "vac", {Var::Rev, Var::Rev}},
      {P::DpRevision1, "C*1", "c-r1", {Var::Rev}},
      {P::DpRevision2, "C*2", "c-r2", {Var::Rev}},
      {P::DpRevision3, "C*3", "c-r3", {Var::Rev}},
      {P::DpRevision4, "C*4", "c-r4", {Var::Rev}},
      {P::DpRevisionSem1, "CR*1", "cr-r1", {Var::Rev}},
      {P::DpRevisionSem2, "CR*2", "cr-r2", {Var::Rev}},
      {P::DpRevisionSem3, "CR*3", "cr-r3", {Var::Rev}},
      {P::DpRevisionSem4, "CR*4", "cr-r4", {Var::Rev}},
      {P::DpContraction1, "C÷1", "c-c1", {Var::Con}},
      {P::DpContraction2, "C÷2", "c-c2", {Var::Con}},
      {P::DpContraction3, "C÷3", "c-c3", {Var::Con}},
      {P::DpContraction4, "C÷4", "c-c4", {Var::Con}},
      {P::DpContractionSem1, "CR÷1", "cr-c1", {Var::Con}},
      {P::DpContractionSem2, "CR÷2", "cr-c2", {Var::Con}},
      {P::DpContractionSem3, "CR÷3", "cr-c3", {Var::Con}},
      {P::DpContractionSem4, "CR÷4", "cr-c4", {Var::Con}},
      {P::PFI, "PFI", "pfi", {Var::Con, Var::Con}},
  };
  return t;
}

const Info& info(PostulateId p) { return table().at(static_cast<std::size_t>(p)); }

constexpr std::array<const char*, 2> kVarNames = {"A", "B"};

int dp_index(PostulateId p) {
  const int i = static_cast<int>(p);
  for (PostulateId first : {PostulateId::DpRevision1, PostulateId::DpRevisionSem1, PostulateId::DpContraction1,
                            PostulateId::DpContractionSem1}) {
    const int f = static_cast<int>(first);
    if (i >= f && i < f + 4) return i - f + 1;
  }
  return 0;
}

bool var_admissible(Var kind, WorldSet a, const std::optional<ContractionOp>& cop) {
  if (kind == Var::Rev) return !a.empty();
  return cop->admits(a);
}

/// Domain restrictions beyond per-variable admissibility: every derived input
/// a postulate mentions must itself be a legal operator input.
bool in_domain(PostulateId p, const std::vector<WorldSet>& in, const std::optional<ContractionOp>& cop) {
  const auto& vars = info(p).vars;
  if (in.size() != vars.size()) return false;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (!var_admissible(vars[k], in[k], cop)) return false;
  }
  switch (p) {
    case PostulateId::AgmRevision7:
    case PostulateId::AgmRevision8: return !(in[0] & in[1]).empty();
    case PostulateId::AgmContraction7:
    case PostulateId::AgmContraction8: return cop->admits(in[0] & in[1]);
    case PostulateId::LI: return cop->admits(in[0].complement());
    default: return true;
  }
}

struct Failure {
  std::vector<World> worlds;
  std::string narrative;
};

/// Everything an instance check needs, with belief sets reported as model sets.
class Ctx {
 public:
  Ctx(const BeliefState& st, const Vocabulary& v, RevisionOp rop, const std::optional<ContractionOp>& cop)
      : st_(st), v_(v), frame_(Frame::propositional(v)), rop_(rop), cop_(cop) {}

  const BeliefState& st() const { return st_; }
  const Vocabulary& vocab() const { return v_; }
  RevisionOp rop() const { return rop_; }
  WorldSet K() const { return st_.belief_models(); }

  BeliefState rev(const BeliefState& s, WorldSet a) const { return revise(s, a, rop_); }
  BeliefState con(const BeliefState& s, WorldSet a) const { return cop_->apply(s, a); }
  WorldSet rev_bel(WorldSet a) const { return rev(st_, a).belief_models(); }
  WorldSet con_bel(WorldSet a) const { return con(st_, a).belief_models(); }

  /// Contraction belief with the convention that giving up a tautology changes nothing.
  WorldSet con_bel_or_vacuous(const BeliefState& s, WorldSet a) const {
    if (a.full()) return s.belief_models();
    return con(s, a).belief_models();
  }

  std::string show(WorldSet s) const { return frame_.braced(s); }

 private:
  const BeliefState& st_;
  const Vocabulary& v_;
  Frame frame_;
  RevisionOp rop_;
  const std::optional<ContractionOp>& cop_;
};

std::optional<Failure> fail(std::string text) { return Failure{{}, std::move(text)}; }

std::optional<Failure> check_agm_revision(int i, const Ctx& c, const std::vector<WorldSet>& in) {
  const WorldSet a = in[0];
  const WorldSet r = c.rev_bel(a);
  const WorldSet k = c.K();
  switch (i) {
    case 1:
      // Belief sets are theories of world sets, so closure holds by representation.
      return std::nullopt;
    case 2:
      if (!r.subset_of(a)) return fail("A ∉ [Ψ*A]: mods([Ψ*A]) = " + c.show(r) + " is not inside mods(A) = " + c.show(a));
      return std::nullopt;
    case 3:
      if (!(k & a).subset_of(r)) {
        return fail("[Ψ*A] ⊄ Cn([Ψ] ∪ {A}): mods([Ψ]) ∩ mods(A) = " + c.show(k & a) + " is not inside mods([Ψ*A]) = " +
                    c.show(r));
      }
      return std::nullopt;
    case 4:
      if (!(k & a).empty() && !r.subset_of(k & a)) {
        return fail("¬A ∉ [Ψ] but Cn([Ψ] ∪ {A}) ⊄ [Ψ*A]: mods([Ψ*A]) = " + c.show(r) + " is not inside " +
                    c.show(k & a));
      }
      return std::nullopt;
    case 5:
      if (r.empty()) return fail("A is consistent but [Ψ*A] is inconsistent");
      return std::nullopt;
    case 6: {
      const WorldSet a2 = models(theory_of(a, c.vocab()), c.vocab());
      const WorldSet r2 = c.rev_bel(a2);
      if (r2 != r) {
        return fail("equivalent inputs give different belief sets: " + c.show(r) + " vs " + c.show(r2));
      }
      return std::nullopt;
    }
    case 7: {
      const WorldSet b = in[1];
      const WorldSet rab = c.rev_bel(a & b);
      if (!(r & b).subset_of(rab)) {
        return fail("[Ψ*(A∧B)] ⊄ Cn([Ψ*A] ∪ {B}): mods([Ψ*A]) ∩ mods(B) = " + c.show(r & b) +
                    " is not inside mods([Ψ*(A∧B)]) = " + c.show(rab));
      }
      return std::nullopt;
    }
    case 8: {
      const WorldSet b = in[1];
      const WorldSet rab = c.rev_bel(a & b);
      if (!(r & b).empty() && !rab.subset_of(r & b)) {
        return fail("¬B ∉ [Ψ*A] but Cn([Ψ*A] ∪ {B}) ⊄ [Ψ*(A∧B)]: mods([Ψ*(A∧B)]) = " + c.show(rab) +
                    " is not inside " + c.show(r & b));
      }
      return std::nullopt;
    }
  }
  throw Error("bad AGM revision index");
}

std::optional<Failure> check_agm_contraction(int i, const Ctx& c, const std::vector<WorldSet>& in) {
  const WorldSet a = in[0];
  const WorldSet r = c.con_bel(a);
  const WorldSet k = c.K();
  switch (i) {
    case 1: return std::nullopt;
    case 2:
      if (!k.subset_of(r)) {
        return fail("[Ψ÷A] ⊄ [Ψ]: mods([Ψ]) = " + c.show(k) + " is not inside mods([Ψ÷A]) = " + c.show(r));
      }
      return std::nullopt;
    case 3:
      if (!k.subset_of(a) && r != k) {
        return fail("A ∉ [Ψ] but [Ψ÷A] ≠ [Ψ]: mods([Ψ÷A]) = " + c.show(r) + ", mods([Ψ]) = " + c.show(k));
      }
      return std::nullopt;
    case 4:
      if (r.subset_of(a)) return fail("A is not a tautology but A ∈ [Ψ÷A]: mods([Ψ÷A]) = " + c.show(r));
      return std::nullopt;
    case 5:
      if (k.subset_of(a) && !(r & a).subset_of(k)) {
        return fail("A ∈ [Ψ] but [Ψ] ⊄ Cn([Ψ÷A] ∪ {A}): mods([Ψ÷A]) ∩ mods(A) = " + c.show(r & a) +
                    " is not inside mods([Ψ]) = " + c.show(k));
      }
      return std::nullopt;
    case 6: {
      const WorldSet a2 = models(theory_of(a, c.vocab()), c.vocab());
      const WorldSet r2 = c.con_bel(a2);
      if (r2 != r) return fail("equivalent inputs give different belief sets: " + c.show(r) + " vs " + c.show(r2));
      return std::nullopt;
    }
    case 7: {
      const WorldSet b = in[1];
      const WorldSet rb = c.con_bel(b);
      const WorldSet rab = c.con_bel(a & b);
      if (!rab.subset_of(r | rb)) {
        return fail("[Ψ÷A] ∩ [Ψ÷B] ⊄ [Ψ÷(A∧B)]: mods([Ψ÷(A∧B)]) = " + c.show(rab) + " is not inside " +
                    c.show(r | rb));
      }
      return std::nullopt;
    }
    case 8: {
      const WorldSet rab = c.con_bel(a & in[1]);
      if (!rab.subset_of(a) && !r.subset_of(rab)) {
        return fail("A ∉ [Ψ÷(A∧B)] but [Ψ÷(A∧B)] ⊄ [Ψ÷A]: mods([Ψ÷A]) = " + c.show(r) +
                    " is not inside mods([Ψ÷(A∧B)]) = " + c.show(rab));
      }
      return std::nullopt;
    }
  }
  throw Error("bad AGM contraction index");
}

std::optional<Failure> check_dp(PostulateId p, const Ctx& c, WorldSet a) {
  const int i = dp_index(p);
  const bool contraction = p >= PostulateId::DpContraction1;
  const ChangeKind kind = contraction ? ChangeKind::Contraction : ChangeKind::Revision;
  const Tpo post = contraction ? c.con(c.st(), a).order() : c.rev(c.st(), a).order();
  const bool semantic = (p >= PostulateId::DpRevisionSem1 && p <= PostulateId::DpRevisionSem4) ||
                        p >= PostulateId::DpContractionSem1;
  const char* op = contraction ? "Ψ÷A" : "Ψ*A";
  if (semantic) {
    if (auto xy = check_semantic_dp(kind, i, c.st().order(), a, post)) {
      const auto [x, y] = *xy;
      const Tpo& prior = c.st().order();
      return Failure{{x, y},
                     "prior ranks (" + std::to_string(prior.rank(x).value) + ", " +
                         std::to_string(prior.rank(y).value) + ") but ranks in " + op + " are (" +
                         std::to_string(post.rank(x).value) + ", " + std::to_string(post.rank(y).value) + ")"};
    }
    return std::nullopt;
  }
  if (auto b = check_syntactic_dp(kind, i, c.st().order(), a, post, c.rop())) {
    const WorldSet before = c.rev_bel(*b);
    const WorldSet after = c.rev(BeliefState(post), *b).belief_models();
    return fail("for B = " + c.show(*b) + ": mods([Ψ*B]) = " + c.show(before) + " but mods([(" + op + ")*B]) = " +
                c.show(after));
  }
  return std::nullopt;
}

std::optional<Failure> check_pfi(const Ctx& c, WorldSet a, WorldSet b) {
  const BeliefState first = c.con(c.st(), a);
  const WorldSet ka = first.belief_models();
  if (!ka.subset_of(b)) return std::nullopt;  // B ∉ [Ψ÷A]: nothing required
  const WorldSet k2 = c.con(first, b).belief_models();
  const WorldSet not_a = a.complement();
  const bool in_a = k2.subset_of(b | not_a);  // ¬B → ¬A ∈ [(Ψ÷A)÷B]
  const bool in_c = k2.subset_of(b | a);      // ¬B → A ∈ [(Ψ÷A)÷B]
  auto compare = [&](const char* clause, WorldSet expected) -> std::optional<Failure> {
    if (k2 == expected) return std::nullopt;
    return fail(std::string("clause (") + clause + "): mods([(Ψ÷A)÷B]) = " + c.show(k2) + " but the factored value is " +
                c.show(expected));
  };
  if (in_a) {
    if (auto f = compare("a", ka | c.con_bel_or_vacuous(c.st(), a | b))) return f;
  }
  if (!in_a && !in_c) {
    if (auto f = compare("b", ka | c.con_bel_or_vacuous(c.st(), a | b) | c.con_bel_or_vacuous(c.st(), not_a | b))) {
      return f;
    }
  }
  if (in_c) {
    if (auto f = compare("c", ka | c.con_bel_or_vacuous(c.st(), not_a | b))) return f;
  }
  return std::nullopt;
}

std::optional<Failure> check_instance(PostulateId p, const Ctx& c, const std::vector<WorldSet>& in) {
  const int idx = static_cast<int>(p);
  if (p <= PostulateId::AgmRevision8) return check_agm_revision(idx + 1, c, in);
  if (p <= PostulateId::AgmContraction8) {
    return check_agm_contraction(idx - static_cast<int>(PostulateId::AgmContraction1) + 1, c, in);
  }
  if (dp_index(p) != 0) return check_dp(p, c, in[0]);

  const WorldSet k = c.K();
  switch (p) {
    case PostulateId::HI: {
      const WorldSet a = in[0];
      const WorldSet lhs = c.con_bel(a);
      const WorldSet rhs = k | c.rev_bel(a.complement());
      if (lhs != rhs) {
        return fail("mods([Ψ÷A]) = " + c.show(lhs) + " but mods([Ψ] ∩ [Ψ*¬A]) = " + c.show(rhs));
      }
      return std::nullopt;
    }
    case PostulateId::LI: {
      const WorldSet a = in[0];
      const WorldSet lhs = c.rev_bel(a);
      const WorldSet rhs = c.con_bel(a.complement()) & a;
      if (lhs != rhs) {
        return fail("mods([Ψ*A]) = " + c.show(lhs) + " but mods(Cn([Ψ÷¬A] ∪ {A})) = " + c.show(rhs));
      }
      return std::nullopt;
    }
    case PostulateId::EHI:
    case PostulateId::LB:
    case PostulateId::UB: {
      const WorldSet a = in[0];
      const WorldSet b = in[1];
      const WorldSet lhs = c.rev(c.con(c.st(), a), b).belief_models();
      const WorldSet plain = c.rev_bel(b);
      const WorldSet twice = c.rev(c.rev(c.st(), a.complement()), b).belief_models();
      const std::string detail = ": mods([(Ψ÷A)*B]) = " + c.show(lhs) + ", mods([Ψ*B]) = " + c.show(plain) +
                                 ", mods([(Ψ*¬A)*B]) = " + c.show(twice);
      if (p == PostulateId::EHI && lhs != (plain | twice)) {
        return fail("[(Ψ÷A)*B] ≠ [Ψ*B] ∩ [(Ψ*¬A)*B]" + detail);
      }
      if (p == PostulateId::LB && !lhs.subset_of(plain | twice)) {
        return fail("[Ψ*B] ∩ [(Ψ*¬A)*B] ⊄ [(Ψ÷A)*B]" + detail);
      }
      if (p == PostulateId::UB && !plain.subset_of(lhs) && !twice.subset_of(lhs)) {
        return fail("[(Ψ÷A)*B] ⊄ [Ψ*B] ∪ [(Ψ*¬A)*B]" + detail);
      }
      return std::nullopt;
    }
    case PostulateId::EHIC: {
      const WorldSet a = in[0];
      const WorldSet b = in[1];
      const WorldSet lhs = c.con(c.con(c.st(), a), b).belief_models();
      const WorldSet rhs = k | c.rev_bel(b.complement()) | c.rev_bel(a.complement()) |
                           c.rev(c.rev(c.st(), a.complement()), b.complement()).belief_models();
      if (lhs != rhs) {
        return fail("mods([(Ψ÷A)÷B]) = " + c.show(lhs) + " but mods([Ψ] ∩ [Ψ*¬B] ∩ [Ψ*¬A] ∩ [(Ψ*¬A)*¬B]) = " +
                    c.show(rhs));
      }
      return std::nullopt;
    }
    case PostulateId::VAC: {
      const WorldSet a = in[0];
      const WorldSet b = in[1];
      const WorldSet ra = c.rev_bel(a);
      if (!ra.subset_of(b)) return std::nullopt;
      const WorldSet rb = c.rev_bel(b);
      if (!rb.subset_of(k | ra)) {
        return fail("B ∈ [Ψ*A] but [Ψ] ∩ [Ψ*A] ⊄ [Ψ*B]: mods([Ψ*B]) = " + c.show(rb) + " is not inside " +
                    c.show(k | ra));
      }
      return std::nullopt;
    }
    case PostulateId::PFI: return check_pfi(c, in[0], in[1]);
    default: break;
  }
  throw Error("unhandled postulate " + label(p));
}

void require_operators(PostulateId p, const BeliefState& st, const Vocabulary& v,
                       const std::optional<ContractionOp>& cop) {
  if (needs_contraction(p) && !cop) {
    throw OperatorMismatchError("postulate " + label(p) + " needs a contraction operator");
  }
  if (st.world_count() != v.world_count()) {
    throw Error("belief state has " + std::to_string(st.world_count()) + " worlds but the vocabulary has " +
                std::to_string(v.world_count()));
  }
}

template <typename Visit>
void for_each_assignment(PostulateId p, std::size_t n, const std::optional<ContractionOp>& cop, Visit&& visit) {
  const auto arity = info(p).vars.size();
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::vector<WorldSet> in(arity, WorldSet::none(n));
  // Odometer over bit encodings, first variable outermost.
  std::vector<std::uint64_t> enc(arity, 0);
  while (true) {
    for (std::size_t k = 0; k < arity; ++k) in[k] = WorldSet(n, static_cast<std::uint32_t>(enc[k]));
    if (in_domain(p, in, cop)) {
      if (!visit(in)) return;
    }
    std::size_t k = arity;
    while (k > 0) {
      --k;
      if (++enc[k] < limit) break;
      enc[k] = 0;
      if (k == 0) return;
    }
  }
}

}  // namespace

const std::vector<PostulateId>& all_postulates() {
  static const std::vector<PostulateId> all = [] {
    std::vector<PostulateId> out;
    for (const Info& i : table()) out.push_back(i.id);
    return out;
  }();
  return all;
}

std::string label(PostulateId p) { return info(p).label; }
std::string token(PostulateId p) { return info(p).token; }

PostulateId parse_postulate_id(std::string_view text) {
  for (const Info& i : table()) {
    if (text == i.token || text == i.label) return i.id;
  }
  throw FormatError("unknown postulate '" + std::string(text) + "'");
}

bool needs_contraction(PostulateId p) {
  if (p == PostulateId::LI) return true;
  return std::find(info(p).vars.begin(), info(p).vars.end(), Var::Con) != info(p).vars.end();
}

std::optional<Counterexample> check_postulate_instance(PostulateId p, const BeliefState& st, const Vocabulary& v,
                                                       RevisionOp rop, const std::optional<ContractionOp>& cop,
                                                       const std::vector<WorldSet>& inputs) {
  require_operators(p, st, v, cop);
  if (!in_domain(p, inputs, cop)) return std::nullopt;
  const Ctx ctx(st, v, rop, cop);
  auto f = check_instance(p, ctx, inputs);
  if (!f) return std::nullopt;
  Counterexample cx{p, st.order(), {}, std::move(f->worlds), label(p) + " fails: " + f->narrative};
  for (std::size_t k = 0; k < inputs.size(); ++k) cx.sentences.emplace_back(kVarNames.at(k), inputs[k]);
  return cx;
}

std::optional<Counterexample> check_postulate(PostulateId p, const BeliefState& st, const Vocabulary& v,
                                              RevisionOp rop, const std::optional<ContractionOp>& cop) {
  require_operators(p, st, v, cop);
  std::optional<Counterexample> found;
  for_each_assignment(p, st.world_count(), cop, [&](const std::vector<WorldSet>& in) {
    found = check_postulate_instance(p, st, v, rop, cop, in);
    return !found;
  });
  return found;
}

std::optional<Counterexample> replay(const Counterexample& cx, const Vocabulary& v, RevisionOp rop,
                                     const std::optional<ContractionOp>& cop) {
  std::vector<WorldSet> in;
  for (const auto& [name, ws] : cx.sentences) in.push_back(ws);
  return check_postulate_instance(cx.postulate, BeliefState(cx.state), v, rop, cop, in);
}

std::size_t instance_count(PostulateId p, std::size_t world_count, const std::optional<ContractionOp>& cop) {
  if (needs_contraction(p) && !cop) {
    throw OperatorMismatchError("postulate " + label(p) + " needs a contraction operator");
  }
  std::size_t count = 0;
  for_each_assignment(p, world_count, cop, [&](const std::vector<WorldSet>&) {
    ++count;
    return true;
  });
  return count;
}

std::optional<std::pair<World, World>> check_semantic_dp(ChangeKind kind, int i, const Tpo& prior, WorldSet input,
                                                         const Tpo& posterior) {
  if (i < 1 || i > 4) throw Error("DP postulate index must be 1..4");
  // The contraction family is the revision family applied to ¬A.
  const WorldSet a = kind == ChangeKind::Revision ? input : input.complement();
  const WorldSet first = i == 2 ? a.complement() : a;
  const WorldSet second = i <= 2 ? first : a.complement();
  for (World x : first) {
    for (World y : second) {
      bool ok = true;
      switch (i) {
        case 1:
        case 2: ok = prior.leq(x, y) == posterior.leq(x, y); break;
        case 3: ok = !prior.less(x, y) || posterior.less(x, y); break;
        case 4: ok = !prior.leq(x, y) || posterior.leq(x, y); break;
      }
      if (!ok) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

std::optional<WorldSet> check_syntactic_dp(ChangeKind kind, int i, const Tpo& prior, WorldSet input,
                                           const Tpo& posterior, RevisionOp rop) {
  if (i < 1 || i > 4) throw Error("DP postulate index must be 1..4");
  const WorldSet a = kind == ChangeKind::Revision ? input : input.complement();
  const BeliefState before(prior);
  const BeliefState after(posterior);
  for (const WorldSet& b : all_subsets(prior.world_count(), false)) {
    const WorldSet mb = revise(before, b, rop).belief_models();
    const WorldSet mo = revise(after, b, rop).belief_models();
    bool ok = true;
    switch (i) {
      case 1: ok = !b.subset_of(a) || mo == mb; break;
      case 2: ok = !b.subset_of(a.complement()) || mo == mb; break;
      case 3: ok = !mb.subset_of(a) || mo.subset_of(a); break;
      case 4: ok = !mb.intersects(a) || mo.intersects(a); break;
    }
    if (!ok) return b;
  }
  return std::nullopt;
}

bool satisfies_triviality_clauses(const BeliefState& st, const Vocabulary& v, RevisionOp rop) {
  const WorldSet pq = models(parse_sentence("p & q", v), v);
  const WorldSet not_p = models(parse_sentence("!p", v), v);
  const WorldSet not_p_q = models(parse_sentence("!p & q", v), v);
  const WorldSet xor_pq = models(parse_sentence("p <-> !q", v), v);
  return st.belief_models() == pq && revise(st, not_p, rop).belief_models() == not_p_q &&
         revise(st, xor_pq, rop).belief_models() == xor_pq;
}

BeliefState triviality_witness(const Vocabulary& v) {
  if (v.size() != 2 || !v.index_of("p") || !v.index_of("q")) {
    throw InvalidVocabularyError("the triviality witness needs exactly the atoms p and q");
  }
  const BeliefState st(parse_tpo("11 | 10 01 | 00", Frame::propositional(v)));
  for (RevisionOp rop : kAllRevisionOps) {
    if (!satisfies_triviality_clauses(st, v, rop)) {
      throw Error("triviality witness fails its clauses under " + token(rop) + " revision");
    }
  }
  return st;
}

std::optional<Counterexample> check_vac(const BeliefState& st, const Vocabulary& v, RevisionOp rop) {
  return check_postulate(PostulateId::VAC, st, v, rop);
}

}  // namespace tqbc
