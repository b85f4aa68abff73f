#include "tqbc/harness.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <cstdlib>
#include <random>
#include <set>

#include "tqbc/error.hpp"

namespace tqbc {

namespace {

constexpr std::size_t kListedViolations = 20;
constexpr std::size_t kDefaultWorldCap = 4;

struct TheoremInfo {
  TheoremId id;
  const char* token;
  SizeUnit unit;
  std::size_t default_size;
  const char* title;
};

const std::vector<TheoremInfo>& theorem_table() {
  using T = TheoremId;
  static const std::vector<TheoremInfo> t = {
      {T::Prop1, "prop1", SizeUnit::Atoms, 2, "EHI entails EHIC, and the converse holds given the Levi Identity"},
      {T::Prop2, "prop2", SizeUnit::Atoms, 2, "triviality of EHI on the p,q witness state"},
      {T::Prop3, "prop3", SizeUnit::Worlds, 3, "UB iff SPU+ and LB iff WPU+"},
      {T::Prop4, "prop4", SizeUnit::Worlds, 3,
       "TeamQueue outputs are exactly the basic TRI outputs (and the basic SPU+ WPU+ NO outputs)"},
      {T::Prop5, "prop5", SizeUnit::Worlds, 4, "on variant pairs, basic SPU+ WPU+ outputs satisfy NO and are TeamQueue"},
      {T::Prop6, "prop6", SizeUnit::Worlds, 4, "on variant pairs, SPU iff SPU+ and WPU iff WPU+"},
      {T::Prop7, "prop7", SizeUnit::Atoms, 2, "CR*i transfers to CR÷i through COMBI; semantic and syntactic forms agree"},
      {T::Prop8, "prop8", SizeUnit::Atoms, 2, "COMBI contractions satisfy PFI"},
      {T::Prop9, "prop9", SizeUnit::Worlds, 3, "STQ is the only basic SPU+ PAR combinator; PAR iff SB"},
      {T::Prop10, "prop10", SizeUnit::Atoms, 2, "natural and restrained revision under STQ give natural contraction"},
      {T::LexRecovery, "lex-recovery", SizeUnit::Atoms, 2,
       "lexicographic contraction is STQ over the two lexicographic revisions"},
      {T::PriorityDistinct, "priority-distinct", SizeUnit::Atoms, 2,
       "priority contraction is right-biased over lexicographic revision and differs from its neighbours"},
      {T::Agm, "agm", SizeUnit::Atoms, 2, "AGM postulates for every implemented revision and contraction"},
  };
  return t;
}

const TheoremInfo& theorem_info(TheoremId t) { return theorem_table().at(static_cast<std::size_t>(t)); }

/// Collects failures, keeping only the first few in full.
class Recorder {
 public:
  explicit Recorder(RunReport& r) : r_(r) {}

  void fail(std::string summary, std::optional<Counterexample> cx = std::nullopt) {
    ++r_.violation_count;
    if (r_.violations.size() < kListedViolations) r_.violations.push_back({std::move(summary), std::move(cx)});
  }
  void check(bool ok, const std::function<std::string()>& summary) {
    if (!ok) fail(summary());
  }
  void count(std::size_t n = 1) { r_.instances += n; }
  void note(std::string text) { r_.notes.push_back(std::move(text)); }

 private:
  RunReport& r_;
};

Frame abstract_frame(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return Frame::named(std::move(names));
}

std::string bracket(const Tpo& t, const Frame& f) { return "<" + format_tpo(t, f) + ">"; }

std::string triple_text(const Tpo& t1, const Tpo& t2, const Tpo& c, const Frame& f) {
  return "pair " + bracket(t1, f) + ", " + bracket(t2, f) + " with candidate " + bracket(c, f);
}

std::string verdict(bool b) { return b ? "holds" : "fails"; }

/// Revision operator paired with a contraction operator.
struct OpPair {
  RevisionOp rop;
  ContractionOp cop;
  std::string name() const { return cop.name() + " with " + token(rop) + " revision"; }
};

std::vector<OpPair> combi_pairs() {
  std::vector<OpPair> out;
  for (RevisionOp rop : kAllRevisionOps) {
    for (const Combinator& c : test_family()) out.push_back({rop, ContractionOp::via_combi(rop, c)});
  }
  return out;
}

std::vector<OpPair> all_pairs() {
  std::vector<OpPair> out = combi_pairs();
  for (RevisionOp rop : kAllRevisionOps) {
    for (const ContractionOp& cop : {ContractionOp::natural(), ContractionOp::lexicographic(), ContractionOp::priority()}) {
      out.push_back({rop, cop});
    }
  }
  return out;
}

std::size_t require_worlds(std::size_t n) {
  if (n == 0) throw CapExceededError("world count must be positive");
  const std::size_t cap = world_cap();
  if (n > cap) {
    throw CapExceededError("|W| = " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap) +
                           " (raise TQBC_MAX_WORLDS, up to " + std::to_string(kMaxEnumerationWorlds) + ")");
  }
  return n;
}

std::string pairs_domain(std::size_t n, std::size_t count) {
  return "all " + std::to_string(count) + " x " + std::to_string(count) + " ordered tpo pairs over |W| = " +
         std::to_string(n);
}

// ------------------------------------------------------------ combinator runs

void run_prop3(RunReport& r, std::size_t n) {
  Recorder rec(r);
  const auto tpos = enumerate_tpos(n);
  const Frame f = abstract_frame(n);
  r.domain = pairs_domain(n, tpos.size()) + ", each with all " + std::to_string(tpos.size()) + " candidate outputs";
  for (const Tpo& t1 : tpos) {
    for (const Tpo& t2 : tpos) {
      for (const Tpo& c : tpos) {
        rec.count();
        const bool ub = satisfies(PropertyId::UB, t1, t2, c);
        const bool spu = satisfies(PropertyId::SPUplus, t1, t2, c);
        const bool lb = satisfies(PropertyId::LB, t1, t2, c);
        const bool wpu = satisfies(PropertyId::WPUplus, t1, t2, c);
        rec.check(ub == spu, [&] { return triple_text(t1, t2, c, f) + ": UB " + verdict(ub) + ", SPU+ " + verdict(spu); });
        rec.check(lb == wpu, [&] { return triple_text(t1, t2, c, f) + ": LB " + verdict(lb) + ", WPU+ " + verdict(wpu); });
      }
    }
  }
}

void run_prop4(RunReport& r, std::size_t n) {
  Recorder rec(r);
  const auto tpos = enumerate_tpos(n);
  const Frame f = abstract_frame(n);
  r.domain = pairs_domain(n, tpos.size()) + "; outputs of " + std::to_string(test_family().size()) +
             " TeamQueue combinators checked for HI, SPU+, WPU+, NO, TRI; all " + std::to_string(tpos.size()) +
             " candidates checked for recovery";
  std::size_t recovered = 0;
  for (const Tpo& t1 : tpos) {
    for (const Tpo& t2 : tpos) {
      rec.count();
      for (const Combinator& comb : test_family()) {
        const Tpo out = comb(t1, t2);
        for (PropertyId p : {PropertyId::HI, PropertyId::SPUplus, PropertyId::WPUplus, PropertyId::NO, PropertyId::TRI}) {
          if (auto v = check_property(p, t1, t2, out)) {
            rec.fail(comb.name() + " on " + triple_text(t1, t2, out, f) + ": " + describe(*v, f));
          }
        }
        rec.check(recover_a_sequence(t1, t2, out).has_value(),
                  [&] { return comb.name() + " output not recovered: " + triple_text(t1, t2, out, f); });
      }
      for (const Tpo& c : tpos) {
        const bool basic = satisfies(PropertyId::HI, t1, t2, c);
        const bool is_tq = recover_a_sequence(t1, t2, c).has_value();
        const bool tri = basic && satisfies(PropertyId::TRI, t1, t2, c);
        const bool no = basic && satisfies(PropertyId::SPUplus, t1, t2, c) &&
                        satisfies(PropertyId::WPUplus, t1, t2, c) && satisfies(PropertyId::NO, t1, t2, c);
        recovered += is_tq;
        rec.check(is_tq == tri && is_tq == no, [&] {
          return triple_text(t1, t2, c, f) + ": recovery " + (is_tq ? "succeeds" : "fails") + ", HI+TRI " +
                 verdict(tri) + ", HI+SPU+ +WPU+ +NO " + verdict(no);
        });
      }
    }
  }
  rec.note(std::to_string(recovered) + " of " + std::to_string(tpos.size() * tpos.size() * tpos.size()) +
           " (pair, candidate) triples are TeamQueue outputs");
}

void run_variant_pairs(RunReport& r, std::size_t n, bool prop5) {
  Recorder rec(r);
  const auto tpos = enumerate_tpos(n);
  const Frame f = abstract_frame(n);
  std::size_t pairs = 0;
  std::size_t basic_spu_wpu = 0;
  for (const Tpo& t1 : tpos) {
    for (const Tpo& t2 : tpos) {
      if (!find_variant_set(t1, t2)) continue;
      ++pairs;
      for (const Tpo& c : tpos) {
        rec.count();
        const bool spu_plus = satisfies(PropertyId::SPUplus, t1, t2, c);
        const bool wpu_plus = satisfies(PropertyId::WPUplus, t1, t2, c);
        if (prop5) {
          const bool premise = satisfies(PropertyId::HI, t1, t2, c) && spu_plus && wpu_plus;
          basic_spu_wpu += premise;
          const bool no = satisfies(PropertyId::NO, t1, t2, c);
          const bool is_tq = recover_a_sequence(t1, t2, c).has_value();
          rec.check(!premise || no, [&] { return triple_text(t1, t2, c, f) + ": basic, SPU+ and WPU+ but NO fails"; });
          rec.check(premise == is_tq, [&] {
            return triple_text(t1, t2, c, f) + ": HI+SPU+ +WPU+ " + verdict(premise) + ", recovery " +
                   (is_tq ? "succeeds" : "fails");
          });
        } else {
          const bool spu = satisfies(PropertyId::SPU, t1, t2, c);
          const bool wpu = satisfies(PropertyId::WPU, t1, t2, c);
          rec.check(spu == spu_plus,
                    [&] { return triple_text(t1, t2, c, f) + ": SPU " + verdict(spu) + ", SPU+ " + verdict(spu_plus); });
          rec.check(wpu == wpu_plus,
                    [&] { return triple_text(t1, t2, c, f) + ": WPU " + verdict(wpu) + ", WPU+ " + verdict(wpu_plus); });
        }
      }
    }
  }
  r.domain = "the " + std::to_string(pairs) + " S-variant pairs among " + std::to_string(tpos.size() * tpos.size()) +
             " ordered tpo pairs over |W| = " + std::to_string(n) + ", each with all " + std::to_string(tpos.size()) +
             " candidate outputs";
  if (prop5) rec.note(std::to_string(basic_spu_wpu) + " triples are basic with SPU+ and WPU+");
}

void run_prop9(RunReport& r, std::size_t n) {
  Recorder rec(r);
  const auto tpos = enumerate_tpos(n);
  const Frame f = abstract_frame(n);
  r.domain = pairs_domain(n, tpos.size()) + ", each with all " + std::to_string(tpos.size()) + " candidate outputs";
  for (const Tpo& t1 : tpos) {
    for (const Tpo& t2 : tpos) {
      std::vector<Tpo> winners;
      for (const Tpo& c : tpos) {
        rec.count();
        const bool par = satisfies(PropertyId::PAR, t1, t2, c);
        const bool sb = satisfies(PropertyId::SB, t1, t2, c);
        rec.check(par == sb, [&] { return triple_text(t1, t2, c, f) + ": PAR " + verdict(par) + ", SB " + verdict(sb); });
        if (par && satisfies(PropertyId::HI, t1, t2, c) && satisfies(PropertyId::SPUplus, t1, t2, c)) {
          winners.push_back(c);
        }
      }
      const Tpo stq = stq_combine(t1, t2);
      rec.check(winners.size() == 1 && winners.front() == stq, [&] {
        std::string s = "pair " + bracket(t1, f) + ", " + bracket(t2, f) + ": basic SPU+ PAR candidates are {";
        for (std::size_t i = 0; i < winners.size(); ++i) s += (i ? "; " : "") + bracket(winners[i], f);
        return s + "} but STQ gives " + bracket(stq, f);
      });
    }
  }
}

// -------------------------------------------------------------- operator runs

struct OperatorDomain {
  Vocabulary vocab;
  Frame frame;
  std::vector<Tpo> states;
  std::vector<WorldSet> sets;  // every subset of W by encoding, including ∅ and W
};

OperatorDomain operator_domain(std::size_t atoms) {
  if (atoms == 0 || atoms > kMaxAtoms) throw CapExceededError("atom count must be between 1 and 5");
  Vocabulary v = default_vocabulary(atoms);
  require_worlds(v.world_count());
  Frame f = Frame::propositional(v);
  return {v, f, enumerate_tpos(v.world_count()), all_subsets(v.world_count())};
}

std::string state_text(const Tpo& t, const Frame& f) { return "state " + bracket(t, f); }

void run_prop1(RunReport& r, std::size_t atoms) {
  Recorder rec(r);
  const auto dom = operator_domain(atoms);
  const auto pairs = all_pairs();
  r.domain = std::to_string(pairs.size()) + " (revision, contraction) operator pairs x " +
             std::to_string(dom.states.size()) + " states x admissible (A, B); EHIC at (A, B) against EHI at (A, ¬B)";
  std::size_t li_ops = 0;
  std::size_t ehi_held = 0;
  std::size_t ehic_held = 0;
  for (const OpPair& op : pairs) {
    const std::optional<ContractionOp> cop = op.cop;
    bool li_everywhere = true;
    for (const Tpo& t : dom.states) {
      const BeliefState st(t);
      for (WorldSet a : dom.sets) {
        if (!cop->admits(a)) continue;
        const BeliefState after_a = cop->apply(st, a);
        const bool hi0 = !check_postulate_instance(PostulateId::HI, st, dom.vocab, op.rop, cop, {a});
        for (WorldSet b : dom.sets) {
          if (!cop->admits(b)) continue;
          rec.count();
          const WorldSet not_b = b.complement();
          const bool hi1 = !check_postulate_instance(PostulateId::HI, after_a, dom.vocab, op.rop, cop, {b});
          const bool li1 = !check_postulate_instance(PostulateId::LI, after_a, dom.vocab, op.rop, cop, {not_b});
          const bool ehi = !check_postulate_instance(PostulateId::EHI, st, dom.vocab, op.rop, cop, {a, not_b});
          const bool ehic = !check_postulate_instance(PostulateId::EHIC, st, dom.vocab, op.rop, cop, {a, b});
          li_everywhere = li_everywhere && li1;
          ehi_held += ehi;
          ehic_held += ehic;
          auto where = [&] {
            return op.name() + ", " + state_text(t, dom.frame) + ", A = " + dom.frame.braced(a) +
                   ", B = " + dom.frame.braced(b);
          };
          rec.check(!(hi0 && hi1 && ehi) || ehic, [&] { return where() + ": HI and EHI hold but EHIC fails"; });
          rec.check(!(li1 && ehic) || ehi, [&] { return where() + ": LI and EHIC hold but EHI fails"; });
        }
      }
    }
    li_ops += li_everywhere;
    if (!li_everywhere) rec.note("LI fails somewhere for " + op.name());
  }
  rec.note("LI holds on every checked instance for " + std::to_string(li_ops) + " of " +
           std::to_string(pairs.size()) + " operator pairs (reported, not asserted)");
  rec.note("EHI held on " + std::to_string(ehi_held) + " instances, EHIC on " + std::to_string(ehic_held));
}

void run_prop2(RunReport& r, std::size_t atoms) {
  Recorder rec(r);
  if (atoms != 2) throw CapExceededError("prop2 is stated for exactly two atoms");
  const auto dom = operator_domain(atoms);
  r.vocabulary = dom.vocab;
  const auto pairs = combi_pairs();
  r.domain = "witness <11 | 10 01 | 00> under 3 revision operators; EHI, HI, LB, UB for " +
             std::to_string(pairs.size()) + " COMBI contractions over all " + std::to_string(dom.states.size()) +
             " states; clause (i)-(iii) search over all states";

  std::optional<BeliefState> witness;
  try {
    witness = triviality_witness(dom.vocab);
  } catch (const Error& e) {
    rec.fail(e.what());
    return;
  }
  rec.note("witness " + bracket(witness->order(), dom.frame) + " satisfies clauses (i)-(iii) under natural, "
           "restrained and lex revision");

  for (RevisionOp rop : kAllRevisionOps) {
    std::string found;
    std::size_t n_found = 0;
    for (const Tpo& t : dom.states) {
      if (satisfies_triviality_clauses(BeliefState(t), dom.vocab, rop)) {
        found += (n_found++ ? ", " : "") + bracket(t, dom.frame);
      }
    }
    rec.note("states meeting (i)-(iii) under " + token(rop) + " revision: " + found);
  }

  const WorldSet not_p = models(parse_sentence("!p", dom.vocab), dom.vocab);
  const WorldSet xor_pq = models(parse_sentence("p <-> !q", dom.vocab), dom.vocab);
  for (RevisionOp rop : kAllRevisionOps) {
    rec.count();
    auto first = check_vac(*witness, dom.vocab, rop);
    auto specific = check_postulate_instance(PostulateId::VAC, *witness, dom.vocab, rop, std::nullopt, {not_p, xor_pq});
    if (!first) rec.fail("VAC unexpectedly holds on the witness under " + token(rop) + " revision");
    if (!specific) {
      rec.fail("VAC holds for A = !p, B = p <-> !q on the witness under " + token(rop) + " revision");
    } else if (rop == RevisionOp::Lexicographic) {
      r.exhibits.push_back(*specific);
      if (first) r.exhibits.push_back(*first);
    }
  }

  for (const OpPair& op : pairs) {
    const std::optional<ContractionOp> cop = op.cop;
    rec.count();
    auto ehi = check_postulate(PostulateId::EHI, *witness, dom.vocab, op.rop, cop);
    if (!ehi) {
      rec.fail("EHI holds on the witness for " + op.name());
    } else if (op.cop.combi()->combinator.name() == "stq") {
      r.exhibits.push_back(*ehi);
    }
    for (const Tpo& t : dom.states) {
      const BeliefState st(t);
      for (PostulateId p : {PostulateId::HI, PostulateId::LB, PostulateId::UB}) {
        rec.count(instance_count(p, dom.vocab.world_count(), cop));
        if (auto cx = check_postulate(p, st, dom.vocab, op.rop, cop)) rec.fail(op.name() + ": " + cx->narrative, cx);
      }
    }
  }
}

void run_prop7(RunReport& r, std::size_t atoms) {
  Recorder rec(r);
  const auto dom = operator_domain(atoms);
  r.vocabulary = dom.vocab;
  const auto pairs = combi_pairs();
  r.domain = std::to_string(pairs.size()) + " COMBI contractions x " + std::to_string(dom.states.size()) +
             " states x admissible A for CR÷1-4 transfer and CR÷i/C÷i agreement; 3 revision operators for CR*i/C*i "
             "agreement; every (state, A, posterior tpo) for agreement on arbitrary posteriors";
  for (RevisionOp rop : kAllRevisionOps) {
    for (const Tpo& t : dom.states) {
      const BeliefState st(t);
      for (WorldSet a : dom.sets) {
        if (a.empty()) continue;
        rec.count();
        const Tpo post = revise(st, a, rop).order();
        for (int i = 1; i <= 4; ++i) {
          const bool sem = !check_semantic_dp(ChangeKind::Revision, i, t, a, post);
          const bool syn = !check_syntactic_dp(ChangeKind::Revision, i, t, a, post, rop);
          rec.check(sem && syn, [&] {
            return token(rop) + " revision, " + state_text(t, dom.frame) + ", A = " + dom.frame.braced(a) + ": CR*" +
                   std::to_string(i) + " " + verdict(sem) + ", C*" + std::to_string(i) + " " + verdict(syn);
          });
        }
      }
    }
  }
  for (const OpPair& op : pairs) {
    for (const Tpo& t : dom.states) {
      const BeliefState st(t);
      for (WorldSet a : dom.sets) {
        if (!op.cop.admits(a)) continue;
        rec.count();
        const Tpo revised = revise(st, a.complement(), op.rop).order();
        const Tpo post = op.cop.apply(st, a).order();
        for (int i = 1; i <= 4; ++i) {
          const bool cr_rev = !check_semantic_dp(ChangeKind::Revision, i, t, a.complement(), revised);
          const bool cr_con = !check_semantic_dp(ChangeKind::Contraction, i, t, a, post);
          const bool c_con = !check_syntactic_dp(ChangeKind::Contraction, i, t, a, post, op.rop);
          auto where = [&] { return op.name() + ", " + state_text(t, dom.frame) + ", A = " + dom.frame.braced(a); };
          rec.check(!cr_rev || cr_con, [&] {
            return where() + ": CR*" + std::to_string(i) + " holds for the revision but CR÷" + std::to_string(i) +
                   " fails";
          });
          rec.check(cr_con == c_con, [&] {
            return where() + ": CR÷" + std::to_string(i) + " " + verdict(cr_con) + ", C÷" + std::to_string(i) + " " +
                   verdict(c_con);
          });
        }
      }
    }
  }
  // Agreement must not depend on the posterior coming from a well-behaved operator.
  std::size_t arbitrary = 0;
  for (const Tpo& t : dom.states) {
    for (WorldSet a : dom.sets) {
      for (const Tpo& post : dom.states) {
        for (ChangeKind kind : {ChangeKind::Revision, ChangeKind::Contraction}) {
          if (kind == ChangeKind::Revision ? a.empty() : a.full()) continue;
          ++arbitrary;
          for (int i = 1; i <= 4; ++i) {
            const bool sem = !check_semantic_dp(kind, i, t, a, post);
            const bool syn = !check_syntactic_dp(kind, i, t, a, post, RevisionOp::Natural);
            rec.check(sem == syn, [&] {
              const std::string sym = kind == ChangeKind::Revision ? "*" : "÷";
              return state_text(t, dom.frame) + ", A = " + dom.frame.braced(a) + ", posterior " +
                     bracket(post, dom.frame) + ": CR" + sym + std::to_string(i) + " " + verdict(sem) + ", C" + sym +
                     std::to_string(i) + " " + verdict(syn);
            });
          }
        }
      }
    }
  }
  rec.count(arbitrary);
  rec.note(std::to_string(arbitrary) + " (state, input, arbitrary posterior) triples checked for CR/C agreement");
}

/// Runs a list of postulates over every state for each operator pair.
void sweep_postulates(Recorder& rec, const OperatorDomain& dom, const OpPair* op, RevisionOp rop,
                      const std::vector<PostulateId>& ps) {
  std::optional<ContractionOp> cop;
  if (op) cop = op->cop;
  const std::string name = op ? op->name() : token(rop) + " revision";
  for (PostulateId p : ps) {
    const std::size_t per_state = instance_count(p, dom.vocab.world_count(), cop);
    std::size_t failing_states = 0;
    for (const Tpo& t : dom.states) {
      rec.count(per_state);
      if (auto cx = check_postulate(p, BeliefState(t), dom.vocab, rop, cop)) {
        ++failing_states;
        rec.fail(name + ", " + state_text(t, dom.frame) + ": " + cx->narrative, cx);
      }
    }
    if (failing_states) {
      rec.note(label(p) + " fails on " + std::to_string(failing_states) + " of " + std::to_string(dom.states.size()) +
               " states for " + name);
    }
  }
}

void run_prop8(RunReport& r, std::size_t atoms) {
  Recorder rec(r);
  const auto dom = operator_domain(atoms);
  r.vocabulary = dom.vocab;
  const auto pairs = combi_pairs();
  r.domain = std::to_string(pairs.size()) + " COMBI contractions x " + std::to_string(dom.states.size()) +
             " states x admissible (A, B); all three PFI clauses";
  for (const OpPair& op : pairs) sweep_postulates(rec, dom, &op, op.rop, {PostulateId::PFI});
}

void run_prop10(RunReport& r, std::size_t atoms) {
  Recorder rec(r);
  const auto dom = operator_domain(atoms);
  r.domain = std::to_string(dom.states.size()) + " states x " + std::to_string(dom.sets.size() - 1) +
             " admissible A; COMBI with STQ under natural, restrained and lex revision against natural contraction";
  const Combinator stq = Combinator::stq();
  std::size_t lex_differs = 0;
  std::string lex_example;
  std::array<std::size_t, 3> premise_failures{};
  for (const Tpo& t : dom.states) {
    const BeliefState st(t);
    for (WorldSet a : dom.sets) {
      if (a.full()) continue;
      rec.count();
      const BeliefState nat = natural_contraction(st, a);
      for (RevisionOp rop : {RevisionOp::Natural, RevisionOp::Restrained}) {
        const BeliefState via = contract_via_combi(st, a, rop, stq);
        rec.check(via == nat, [&] {
          return token(rop) + "+STQ, " + state_text(t, dom.frame) + ", A = " + dom.frame.braced(a) + ": got " +
                 bracket(via.order(), dom.frame) + ", natural contraction gives " + bracket(nat.order(), dom.frame);
        });
      }
      const BeliefState lex = contract_via_combi(st, a, RevisionOp::Lexicographic, stq);
      if (lex != nat && lex_differs++ == 0) {
        lex_example = state_text(t, dom.frame) + ", A = " + dom.frame.braced(a) + ": STQ-lex " +
                      bracket(lex.order(), dom.frame) + " vs natural " + bracket(nat.order(), dom.frame);
      }
      // The premise: worlds outside min(⪯, A) keep their strict order.
      if (!a.empty()) {
        for (RevisionOp rop : kAllRevisionOps) {
          const Tpo post = revise(st, a, rop).order();
          const WorldSet rest = t.min(a).complement();
          bool ok = true;
          for (World x : rest) {
            for (World y : rest) ok = ok && (!t.less(x, y) || post.less(x, y));
          }
          premise_failures[static_cast<std::size_t>(rop)] += !ok;
        }
      }
    }
  }
  rec.check(lex_differs > 0, [] { return std::string("STQ-lex contraction never differs from natural contraction"); });
  rec.check(premise_failures[0] == 0 && premise_failures[1] == 0,
            [] { return std::string("natural or restrained revision breaks the strict-order premise"); });
  rec.check(premise_failures[2] > 0, [] { return std::string("lex revision never breaks the strict-order premise"); });
  rec.note("STQ-lex differs from natural contraction on " + std::to_string(lex_differs) + " instances; first: " +
           lex_example);
  rec.note("strict-order premise fails for lex revision on " + std::to_string(premise_failures[2]) + " instances");
}

void run_lex_recovery(RunReport& r, std::size_t atoms) {
  Recorder rec(r);
  const auto dom = operator_domain(atoms);
  r.domain = std::to_string(dom.states.size()) + " states x every A other than F and T";
  for (const Tpo& t : dom.states) {
    const BeliefState st(t);
    for (WorldSet a : dom.sets) {
      if (a.empty() || a.full()) continue;
      rec.count();
      const Tpo recipe = stq_combine(revise(st, a, RevisionOp::Lexicographic).order(),
                                     revise(st, a.complement(), RevisionOp::Lexicographic).order());
      const Tpo direct = lexicographic_contraction(st, a).order();
      rec.check(recipe == direct, [&] {
        return state_text(t, dom.frame) + ", A = " + dom.frame.braced(a) + ": recipe " + bracket(recipe, dom.frame) +
               ", lexicographic contraction " + bracket(direct, dom.frame);
      });
    }
  }
}

void run_priority(RunReport& r, std::size_t atoms) {
  Recorder rec(r);
  const auto dom = operator_domain(atoms);
  r.domain = std::to_string(dom.states.size()) + " states x every A other than T (and other than F where "
             "lexicographic contraction is involved)";
  std::size_t vs_natural = 0, vs_lex = 0, stq_vs_lex = 0, stq_vs_priority = 0;
  std::string first_natural, first_lex;
  for (const Tpo& t : dom.states) {
    const BeliefState st(t);
    for (WorldSet a : dom.sets) {
      if (a.full()) continue;
      rec.count();
      const auto where = [&] { return state_text(t, dom.frame) + ", A = " + dom.frame.braced(a); };
      const Tpo pri = priority_contraction(st, a).order();
      const Tpo recipe = right_biased_combine(t, revise(st, a.complement(), RevisionOp::Lexicographic).order());
      rec.check(pri == recipe, [&] {
        return where() + ": priority contraction " + bracket(pri, dom.frame) + ", right-biased recipe " +
               bracket(recipe, dom.frame);
      });
      if (pri != natural_contraction(st, a).order() && vs_natural++ == 0) first_natural = where();
      const Tpo stq_lex = contract_via_combi(st, a, RevisionOp::Lexicographic, Combinator::stq()).order();
      stq_vs_priority += stq_lex != pri;
      if (a.empty()) continue;
      const Tpo lex = lexicographic_contraction(st, a).order();
      if (pri != lex && vs_lex++ == 0) first_lex = where();
      stq_vs_lex += stq_lex != lex;
    }
  }
  rec.check(vs_natural > 0, [] { return std::string("priority contraction never differs from natural contraction"); });
  rec.check(vs_lex > 0, [] { return std::string("priority contraction never differs from lexicographic contraction"); });
  rec.check(stq_vs_lex > 0, [] { return std::string("STQ-lex contraction never differs from lexicographic contraction"); });
  rec.check(stq_vs_priority > 0, [] { return std::string("STQ-lex contraction never differs from priority contraction"); });
  rec.note("priority differs from natural contraction on " + std::to_string(vs_natural) + " instances; first: " +
           first_natural);
  rec.note("priority differs from lexicographic contraction on " + std::to_string(vs_lex) + " instances; first: " +
           first_lex);
  rec.note("STQ-lex differs from lexicographic on " + std::to_string(stq_vs_lex) + " and from priority on " +
           std::to_string(stq_vs_priority) + " instances");
}

void run_agm(RunReport& r, std::size_t atoms) {
  Recorder rec(r);
  const auto dom = operator_domain(atoms);
  r.vocabulary = dom.vocab;
  const auto pairs = all_pairs();
  r.domain = "AGM*1-8 for 3 revision operators and AGM÷1-8 for " + std::to_string(pairs.size()) +
             " (revision, contraction) pairs, over all " + std::to_string(dom.states.size()) +
             " states and every admissible sentence assignment; HI for every COMBI contraction";
  std::vector<PostulateId> rev, con;
  for (int i = 0; i < 8; ++i) {
    rev.push_back(static_cast<PostulateId>(static_cast<int>(PostulateId::AgmRevision1) + i));
    con.push_back(static_cast<PostulateId>(static_cast<int>(PostulateId::AgmContraction1) + i));
  }
  for (RevisionOp rop : kAllRevisionOps) sweep_postulates(rec, dom, nullptr, rop, rev);
  for (const OpPair& op : pairs) {
    auto ps = con;
    if (op.cop.is_via_combi()) ps.push_back(PostulateId::HI);
    sweep_postulates(rec, dom, &op, op.rop, ps);
  }
}

}  // namespace

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> all = [] {
    std::vector<TheoremId> out;
    for (const auto& i : theorem_table()) out.push_back(i.id);
    return out;
  }();
  return all;
}

std::string token(TheoremId t) { return theorem_info(t).token; }
SizeUnit size_unit(TheoremId t) { return theorem_info(t).unit; }
std::size_t default_size(TheoremId t) { return theorem_info(t).default_size; }
std::string title(TheoremId t) { return theorem_info(t).title; }

TheoremId parse_theorem_id(std::string_view text) {
  if (text == "thm1") return TheoremId::Prop4;
  if (text == "thm2") return TheoremId::Prop9;
  for (const auto& i : theorem_table()) {
    if (text == i.token) return i.id;
  }
  throw FormatError("unknown theorem '" + std::string(text) + "'");
}

std::size_t world_cap() {
  const char* env = std::getenv("TQBC_MAX_WORLDS");
  if (!env || !*env) return kDefaultWorldCap;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0) throw FormatError("TQBC_MAX_WORLDS must be a positive integer");
  return std::min<std::size_t>(v, kMaxEnumerationWorlds);
}

Vocabulary default_vocabulary(std::size_t atoms) {
  static const char* names[] = {"p", "q", "r", "s", "t"};
  if (atoms == 0 || atoms > kMaxAtoms) throw InvalidVocabularyError("atom count must be between 1 and 5");
  return Vocabulary(std::vector<std::string>(names, names + atoms));
}

const std::vector<Combinator>& test_family() {
  static const std::vector<Combinator> family = [] {
    std::vector<Combinator> out{Combinator::stq(), Combinator::right_biased(),
                                Combinator::team_queue(ASequence::parse("12,1"))};
    std::mt19937 rng(20240917u);
    for (int k = 0; k < 20; ++k) {
      std::vector<Queues> cells{Queues::Both};
      const std::size_t len = 1 + rng() % 4;
      while (cells.size() < len) cells.push_back(static_cast<Queues>(1 + rng() % 3));
      out.push_back(Combinator::team_queue(ASequence(std::move(cells))));
    }
    out.push_back(Combinator::team_queue("tq:pair-hash", [](const Tpo& t1, const Tpo& t2) {
      std::uint64_t h = 1469598103934665603ull;
      for (const Tpo* t : {&t1, &t2}) {
        for (const WorldSet& c : t->cells()) h = (h ^ c.bits()) * 1099511628211ull;
        h = (h ^ 0xffu) * 1099511628211ull;
      }
      std::vector<Queues> cells{Queues::Both};
      const std::size_t len = 1 + h % 4;
      h /= 4;
      while (cells.size() < len) {
        cells.push_back(static_cast<Queues>(1 + h % 3));
        h /= 3;
      }
      return ASequence(std::move(cells));
    }));
    return out;
  }();
  return family;
}

RunReport run_theorem(TheoremId t, std::optional<std::size_t> size) {
  RunReport r;
  r.theorem = t;
  r.size = size.value_or(default_size(t));
  const auto start = std::chrono::steady_clock::now();
  if (size_unit(t) == SizeUnit::Worlds) require_worlds(r.size);
  switch (t) {
    case TheoremId::Prop1: run_prop1(r, r.size); break;
    case TheoremId::Prop2: run_prop2(r, r.size); break;
    case TheoremId::Prop3: run_prop3(r, r.size); break;
    case TheoremId::Prop4: run_prop4(r, r.size); break;
    case TheoremId::Prop5: run_variant_pairs(r, r.size, true); break;
    case TheoremId::Prop6: run_variant_pairs(r, r.size, false); break;
    case TheoremId::Prop7: run_prop7(r, r.size); break;
    case TheoremId::Prop8: run_prop8(r, r.size); break;
    case TheoremId::Prop9: run_prop9(r, r.size); break;
    case TheoremId::Prop10: run_prop10(r, r.size); break;
    case TheoremId::LexRecovery: run_lex_recovery(r, r.size); break;
    case TheoremId::PriorityDistinct: run_priority(r, r.size); break;
    case TheoremId::Agm: run_agm(r, r.size); break;
  }
  if (size_unit(t) == SizeUnit::Atoms && !r.vocabulary) r.vocabulary = default_vocabulary(r.size);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace tqbc
