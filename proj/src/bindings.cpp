// Python bindings for the tqbc core, exposed as tqbc._core.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tqbc/change.hpp"
#include "tqbc/combinators.hpp"
#include "tqbc/error.hpp"
#include "tqbc/harness.hpp"
#include "tqbc/postulates.hpp"
#include "tqbc/report.hpp"
#include "tqbc/tpo.hpp"

namespace py = pybind11;
using namespace tqbc;

namespace {

// JSON crosses the boundary as text and is decoded by the stdlib json module.
py::object json_to_python(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

ContractionOp make_contraction(const std::string& op, const std::string& revision, const std::string& combinator) {
  return ContractionOp::parse(op, parse_revision_op(revision), Combinator::parse(combinator));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Total preorders, TeamQueue combinators and iterated belief change";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<SyntaxError>(m, "SyntaxError", base);
  py::register_exception<UnknownAtomError>(m, "UnknownAtomError", base);
  py::register_exception<FormatError>(m, "FormatError", base);
  py::register_exception<InvalidVocabularyError>(m, "InvalidVocabularyError", base);
  py::register_exception<InvalidTpoError>(m, "InvalidTpoError", base);
  py::register_exception<InvalidScheduleError>(m, "InvalidScheduleError", base);
  py::register_exception<InconsistentInputError>(m, "InconsistentInputError", base);
  py::register_exception<InadmissibleContractionError>(m, "InadmissibleContractionError", base);
  py::register_exception<CapExceededError>(m, "CapExceededError", base);
  py::register_exception<OperatorMismatchError>(m, "OperatorMismatchError", base);

  py::class_<WorldSet>(m, "WorldSet")
      .def(py::init<std::size_t, std::uint32_t>(), py::arg("universe"), py::arg("bits"))
      .def_property_readonly("universe", &WorldSet::universe)
      .def_property_readonly("bits", &WorldSet::bits)
      .def("complement", &WorldSet::complement)
      .def("subset_of", &WorldSet::subset_of)
      .def("__len__", &WorldSet::count)
      .def("__contains__", [](const WorldSet& s, std::uint32_t w) { return s.contains(World{w}); })
      .def("__iter__",
           [](const WorldSet& s) {
             std::vector<std::uint32_t> out;
             for (World w : s) out.push_back(w.index);
             return py::iter(py::cast(out));
           })
      .def("__or__", [](WorldSet a, WorldSet b) { return a | b; })
      .def("__and__", [](WorldSet a, WorldSet b) { return a & b; })
      .def("__sub__", [](WorldSet a, WorldSet b) { return a - b; })
      .def("__eq__", [](WorldSet a, WorldSet b) { return a == b; })
      .def("__hash__", [](WorldSet s) { return py::hash(py::make_tuple(s.universe(), s.bits())); })
      .def("__repr__", [](WorldSet s) {
        return "WorldSet(" + std::to_string(s.universe()) + ", " + std::to_string(s.bits()) + ")";
      });

  py::class_<Vocabulary>(m, "Vocabulary")
      .def(py::init<std::vector<std::string>>())
      .def_static("parse", &Vocabulary::parse)
      .def_property_readonly("atoms", &Vocabulary::atoms)
      .def_property_readonly("world_count", &Vocabulary::world_count)
      .def("models", [](const Vocabulary& v, const std::string& text) { return models(parse_sentence(text, v), v); },
           "World set of a sentence such as 'p -> q'.")
      .def("theory", [](const Vocabulary& v, WorldSet s) { return to_string(theory_of(s, v), v); },
           "A sentence whose models are exactly the given worlds.");

  py::class_<Frame>(m, "Frame")
      .def_static("named", [](const std::vector<std::string>& names) { return Frame::named(names); })
      .def_static("parse_named", &Frame::parse_named)
      .def_static("propositional", &Frame::propositional)
      .def_property_readonly("names", &Frame::names)
      .def("parse_set", &Frame::parse_set)
      .def("format", &Frame::format)
      .def("__len__", &Frame::size);

  py::class_<Tpo>(m, "Tpo")
      .def(py::init<std::vector<WorldSet>>(), py::arg("cells"))
      .def_static("flat", &Tpo::flat)
      .def_static("from_keys", [](const std::vector<std::uint32_t>& k) { return Tpo::from_keys(k); })
      .def_property_readonly("cells", &Tpo::cells)
      .def_property_readonly("world_count", &Tpo::world_count)
      .def("rank", [](const Tpo& t, std::uint32_t w) { return t.rank(World{w}).value; })
      .def("min", &Tpo::min)
      .def("__eq__", [](const Tpo& a, const Tpo& b) { return a == b; })
      .def("__repr__", [](const Tpo& t) {
        std::string s = "<Tpo";
        for (const WorldSet& c : t.cells()) s += " " + std::to_string(c.bits());
        return s + ">";
      });

  m.def("parse_tpo", &parse_tpo, py::arg("text"), py::arg("frame"));
  m.def("format_tpo", &format_tpo, py::arg("tpo"), py::arg("frame"));
  m.def("enumerate_tpos", [](std::size_t n) { return enumerate_tpos(n); }, py::arg("world_count"));
  m.def("is_s_variant", &is_s_variant);
  m.def("find_variant_set", [](const Tpo& a, const Tpo& b) -> std::optional<WorldSet> {
    if (auto w = find_variant_set(a, b)) return w->set();
    return std::nullopt;
  });

  m.def("combine", [](const Tpo& a, const Tpo& b, const std::string& c) { return Combinator::parse(c)(a, b); },
        py::arg("left"), py::arg("right"), py::arg("combinator") = "stq",
        "Combines two tpos with 'stq', 'right-biased' or 'tq:<schedule>'.");
  m.def("recover_schedule", [](const Tpo& a, const Tpo& b, const Tpo& c) -> std::optional<std::string> {
    if (auto s = recover_a_sequence(a, b, c)) return to_string(*s);
    return std::nullopt;
  });
  m.def("check_property",
        [](const std::string& prop, const Tpo& a, const Tpo& b, const Tpo& c, const Frame& f)
            -> std::optional<std::string> {
          if (auto v = check_property(parse_property_id(prop), a, b, c)) return describe(*v, f);
          return std::nullopt;
        },
        py::arg("property"), py::arg("left"), py::arg("right"), py::arg("combined"), py::arg("frame"),
        "None when the property holds, else a description of the violation.");

  m.def("revise", [](const Tpo& t, WorldSet a, const std::string& op) {
    return revise(BeliefState(t), a, parse_revision_op(op)).order();
  }, py::arg("state"), py::arg("models"), py::arg("op") = "natural");
  m.def("contract",
        [](const Tpo& t, WorldSet a, const std::string& op, const std::string& revision, const std::string& comb) {
          return make_contraction(op, revision, comb).apply(BeliefState(t), a).order();
        },
        py::arg("state"), py::arg("models"), py::arg("op") = "via-combi", py::arg("revision") = "natural",
        py::arg("combinator") = "stq");
  m.def("is_strongly_believed", [](const Tpo& t, WorldSet a) { return is_strongly_believed(BeliefState(t), a); });

  m.def("check_postulate",
        [](const std::string& postulate, const Tpo& t, const Vocabulary& v, const std::string& revision,
           std::optional<std::string> contraction, const std::string& combinator) -> py::object {
          std::optional<ContractionOp> cop;
          if (contraction) cop = make_contraction(*contraction, revision, combinator);
          const auto cx = check_postulate(parse_postulate_id(postulate), BeliefState(t), v,
                                          parse_revision_op(revision), cop);
          if (!cx) return py::none();
          return json_to_python(to_json(*cx, v));
        },
        py::arg("postulate"), py::arg("state"), py::arg("vocabulary"), py::arg("revision") = "natural",
        py::arg("contraction") = py::none(), py::arg("combinator") = "stq",
        "None when the postulate holds at the state, else the first counterexample as a dict.");

  m.def("verify",
        [](const std::string& theorem, std::optional<std::size_t> size) {
          const TheoremId id = parse_theorem_id(theorem);
          const RunReport r = [&] {
            py::gil_scoped_release release;
            return run_theorem(id, size);
          }();
          return json_to_python(to_json(r));
        },
        py::arg("theorem"), py::arg("size") = py::none());
  m.def("theorems", [] {
    std::vector<std::string> out;
    for (TheoremId t : all_theorems()) out.push_back(token(t));
    return out;
  });
}
