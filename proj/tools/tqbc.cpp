// tqbc: command-line front end for the belief-change kernel.
//
// Exit codes: 0 success, 1 a counterexample or failed verification, 2 usage
// or input error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tqbc/change.hpp"
#include "tqbc/combinators.hpp"
#include "tqbc/error.hpp"
#include "tqbc/harness.hpp"
#include "tqbc/postulates.hpp"
#include "tqbc/report.hpp"

namespace {

using namespace tqbc;

constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kUsage = 2;

/// World naming shared by every subcommand: --worlds for abstract mode, --atoms for propositional mode.
struct Universe {
  std::string worlds;
  std::string atoms;

  void add_options(CLI::App* app) {
    auto* w = app->add_option("--worlds", worlds, "comma-separated world names (abstract mode)");
    auto* a = app->add_option("--atoms", atoms, "comma-separated atom names (propositional mode)");
    w->excludes(a);
  }

  std::optional<Vocabulary> vocabulary() const {
    if (atoms.empty()) return std::nullopt;
    return Vocabulary::parse(atoms);
  }

  Frame frame() const {
    if (!atoms.empty()) return Frame::propositional(Vocabulary::parse(atoms));
    if (!worlds.empty()) return Frame::parse_named(worlds);
    throw FormatError("one of --worlds or --atoms is required");
  }
};

/// An input sentence given either as a formula (--sentence) or as a world set (--models).
struct Input {
  std::string sentence;
  std::string models;

  void add_options(CLI::App* app) {
    auto* s = app->add_option("--sentence", sentence, "input formula (propositional mode)");
    auto* m = app->add_option("--models", models, "input as a set of worlds, e.g. \"x w\"");
    s->excludes(m);
  }

  WorldSet resolve(const Universe& u, const Frame& f) const {
    if (!sentence.empty()) {
      const auto v = u.vocabulary();
      if (!v) throw FormatError("--sentence needs --atoms");
      return tqbc::models(parse_sentence(sentence, *v), *v);
    }
    if (!models.empty()) return f.parse_set(models);
    throw FormatError("one of --sentence or --models is required");
  }
};

int report_found(bool found, bool expect_fail) {
  if (expect_fail) return found ? kOk : kFound;
  return found ? kFound : kOk;
}

int run_demo(const Universe& u, bool json) {
  const Vocabulary v = u.atoms.empty() ? Vocabulary::parse("p,q") : Vocabulary::parse(u.atoms);
  const Frame f = Frame::propositional(v);
  const BeliefState witness = triviality_witness(v);
  const WorldSet not_p = models(parse_sentence("!p", v), v);
  const WorldSet xor_pq = models(parse_sentence("p <-> !q", v), v);
  bool as_expected = true;
  nlohmann::ordered_json out = nlohmann::ordered_json::array();

  if (!json) {
    std::cout << "witness state: " << format_tpo(witness.order(), f) << "\n";
    std::cout << "(i)   mods([Ψ]) = " << f.braced(witness.belief_models()) << ", the models of p & q\n";
  }
  for (RevisionOp rop : kAllRevisionOps) {
    const WorldSet after_not_p = revise(witness, not_p, rop).belief_models();
    const WorldSet after_xor = revise(witness, xor_pq, rop).belief_models();
    const bool clauses = satisfies_triviality_clauses(witness, v, rop);
    as_expected = as_expected && clauses;
    if (!json) {
      std::cout << "\n[" << token(rop) << " revision]\n";
      std::cout << "(ii)  mods([Ψ*!p]) = " << f.braced(after_not_p) << ", the models of !p & q\n";
      std::cout << "(iii) mods([Ψ*(p <-> !q)]) = " << f.braced(after_xor) << ", the models of p <-> !q\n";
      std::cout << "clauses (i)-(iii): " << (clauses ? "hold" : "FAIL") << "\n";
    }
    auto vac = check_postulate_instance(PostulateId::VAC, witness, v, rop, std::nullopt, {not_p, xor_pq});
    const std::optional<ContractionOp> stq_lex = ContractionOp::via_combi(rop, Combinator::stq());
    auto ehi = check_postulate(PostulateId::EHI, witness, v, rop, stq_lex);
    as_expected = as_expected && vac && ehi;
    if (json) {
      if (vac) out.push_back(to_json(*vac, v));
      if (ehi) out.push_back(to_json(*ehi, v));
      continue;
    }
    std::cout << (vac ? render_text(*vac, v) : "VAC unexpectedly holds for A = !p, B = p <-> !q\n");
    std::cout << "contraction " << stq_lex->name() << ":\n";
    std::cout << (ehi ? render_text(*ehi, v) : "EHI unexpectedly holds on the witness\n");
  }
  if (json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "\n" << (as_expected ? "EHI cannot hold on this state: demonstration complete"
                                      : "demonstration FAILED: the witness did not behave as predicted")
              << "\n";
  }
  return as_expected ? kOk : kFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tqbc: iterated revision and contraction over total preorders, with TeamQueue combinators"};
  app.require_subcommand(1);

  // combine
  Universe combine_u;
  std::string left, right, combinator_tok = "stq";
  auto* combine = app.add_subcommand("combine", "combine two tpos with a TeamQueue combinator");
  combine_u.add_options(combine);
  combine->add_option("--left", left, "first tpo, e.g. \"z | w | x y\"")->required();
  combine->add_option("--right", right, "second tpo")->required();
  combine->add_option("--combinator", combinator_tok, "stq, right-biased or tq:<schedule>")->capture_default_str();

  // revise
  Universe revise_u;
  Input revise_in;
  std::string revise_state, revise_op = "natural";
  auto* revise_cmd = app.add_subcommand("revise", "revise a belief state");
  revise_u.add_options(revise_cmd);
  revise_in.add_options(revise_cmd);
  revise_cmd->add_option("--state", revise_state, "prior tpo")->required();
  revise_cmd->add_option("--op", revise_op, "natural, restrained or lex")->capture_default_str();

  // contract
  Universe contract_u;
  Input contract_in;
  std::string contract_state, contract_op = "via-combi", contract_rev = "natural", contract_comb = "stq";
  auto* contract = app.add_subcommand("contract", "contract a belief state");
  contract_u.add_options(contract);
  contract_in.add_options(contract);
  contract->add_option("--state", contract_state, "prior tpo")->required();
  contract->add_option("--op", contract_op, "via-combi, natural, lex or priority")->capture_default_str();
  contract->add_option("--revision", contract_rev, "revision operator for via-combi")->capture_default_str();
  contract->add_option("--combinator", contract_comb, "combinator for via-combi")->capture_default_str();

  // check
  Universe check_u;
  std::string check_state, postulate_tok, property_tok, check_rev = "natural", check_op, check_comb = "stq";
  std::string check_left, check_right, check_combined;
  bool check_json = false, expect_fail = false;
  auto* check = app.add_subcommand("check", "check a postulate on a state, or a property on a combination");
  check_u.add_options(check);
  auto* post_opt = check->add_option("--postulate", postulate_tok, "postulate id, e.g. agm-r4, ehi, cr-c2, pfi");
  auto* prop_opt = check->add_option("--property", property_tok, "combinator property, e.g. tri, spu+");
  post_opt->excludes(prop_opt);
  check->add_option("--state", check_state, "belief state tpo (postulates)");
  check->add_option("--revision", check_rev, "revision operator")->capture_default_str();
  check->add_option("--op", check_op, "contraction operator (via-combi, natural, lex, priority)");
  check->add_option("--combinator", check_comb, "combinator for via-combi or for --property")->capture_default_str();
  check->add_option("--left", check_left, "first tpo (properties)");
  check->add_option("--right", check_right, "second tpo (properties)");
  check->add_option("--combined", check_combined, "candidate combined tpo (properties; default: apply --combinator)");
  check->add_flag("--json", check_json, "print the counterexample as JSON");
  check->add_flag("--expect-fail", expect_fail, "succeed only when a counterexample is found");

  // verify
  std::string theorem_tok;
  std::optional<std::size_t> verify_size;
  bool verify_json = false, timing = false;
  auto* verify = app.add_subcommand("verify", "run an exhaustive theorem check");
  verify->add_option("--theorem", theorem_tok, "prop1..prop10, thm1, thm2, lex-recovery, priority-distinct, agm")
      ->required();
  verify->add_option("--size", verify_size, "world count or atom count, depending on the theorem");
  verify->add_flag("--json", verify_json, "print the report as JSON");
  verify->add_flag("--timing", timing, "include wall time in the report");

  // demo
  Universe demo_u;
  std::string demo_name;
  bool demo_json = false;
  auto* demo = app.add_subcommand("demo", "run a narrated demonstration");
  demo->add_option("name", demo_name, "demonstration name (triviality)")->required();
  demo->add_option("--atoms", demo_u.atoms, "atom names; must be p,q");
  demo->add_flag("--json", demo_json, "print the counterexamples as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*combine) {
      const Frame f = combine_u.frame();
      const Combinator c = Combinator::parse(combinator_tok);
      std::cout << format_tpo(c(parse_tpo(left, f), parse_tpo(right, f)), f) << "\n";
      return kOk;
    }
    if (*revise_cmd) {
      const Frame f = revise_u.frame();
      const BeliefState st(parse_tpo(revise_state, f));
      const WorldSet a = revise_in.resolve(revise_u, f);
      std::cout << format_tpo(revise(st, a, parse_revision_op(revise_op)).order(), f) << "\n";
      return kOk;
    }
    if (*contract) {
      const Frame f = contract_u.frame();
      const BeliefState st(parse_tpo(contract_state, f));
      const WorldSet a = contract_in.resolve(contract_u, f);
      const ContractionOp op =
          ContractionOp::parse(contract_op, parse_revision_op(contract_rev), Combinator::parse(contract_comb));
      if (!op.admits(a)) throw InadmissibleContractionError(op.name() + " is undefined for this input");
      std::cout << format_tpo(op.apply(st, a).order(), f) << "\n";
      return kOk;
    }
    if (*check) {
      if (!property_tok.empty()) {
        const Frame f = check_u.frame();
        if (check_left.empty() || check_right.empty()) throw FormatError("--property needs --left and --right");
        const Tpo t1 = parse_tpo(check_left, f);
        const Tpo t2 = parse_tpo(check_right, f);
        const Tpo c = check_combined.empty() ? Combinator::parse(check_comb)(t1, t2) : parse_tpo(check_combined, f);
        const PropertyId p = parse_property_id(property_tok);
        const auto v = check_property(p, t1, t2, c);
        std::cout << "combined: " << format_tpo(c, f) << "\n";
        std::cout << (v ? describe(*v, f) : label(p) + " holds") << "\n";
        return report_found(v.has_value(), expect_fail);
      }
      if (postulate_tok.empty()) throw FormatError("check needs --postulate or --property");
      const auto vocab = check_u.vocabulary();
      if (!vocab) throw FormatError("--postulate needs --atoms");
      if (check_state.empty()) throw FormatError("--postulate needs --state");
      const Frame f = Frame::propositional(*vocab);
      const PostulateId p = parse_postulate_id(postulate_tok);
      const RevisionOp rop = parse_revision_op(check_rev);
      std::optional<ContractionOp> cop;
      if (!check_op.empty()) cop = ContractionOp::parse(check_op, rop, Combinator::parse(check_comb));
      const auto cx = check_postulate(p, BeliefState(parse_tpo(check_state, f)), *vocab, rop, cop);
      if (check_json) {
        std::cout << (cx ? to_json(*cx, *vocab).dump(2) : std::string("null")) << "\n";
      } else {
        std::cout << (cx ? render_text(*cx, *vocab) : label(p) + " holds\n");
      }
      return report_found(cx.has_value(), expect_fail);
    }
    if (*verify) {
      const RunReport r = run_theorem(parse_theorem_id(theorem_tok), verify_size);
      std::cout << (verify_json ? to_json(r, timing).dump(2) + "\n" : render_text(r, timing));
      return r.pass() ? kOk : kFound;
    }
    if (*demo) {
      if (demo_name != "triviality") throw FormatError("unknown demo '" + demo_name + "' (expected triviality)");
      return run_demo(demo_u, demo_json);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
