#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "burnside/report.hpp"

namespace py = pybind11;

namespace {

using namespace burnside;

// One analyzed group: the group itself, its subgroup lattice and the family
// of Burnside rings, owned together so python sees a single object.
class Session {
 public:
  explicit Session(const std::string& spec, int max_order = 2000)
      : g_(std::make_unique<FiniteGroup>(build_group(spec, max_order))),
        lat_(std::make_unique<SubgroupLattice>(*g_)),
        ring_(std::make_unique<BurnsideRing>(*lat_)) {}

  std::string label() const { return g_->label(); }
  int order() const { return g_->order(); }
  int degree() const { return g_->degree(); }
  int subgroup_count() const { return lat_->count(); }
  int class_count() const { return lat_->class_count(); }

  std::vector<std::string> class_labels() const {
    std::vector<std::string> out;
    for (int c = 0; c < lat_->class_count(); ++c) out.push_back(lat_->class_label(c));
    return out;
  }

  std::vector<std::vector<long>> table_of_marks() const {
    return ring_->table_full().entries;
  }

  std::vector<std::string> p_perfect_classes(const std::string& primes) const {
    std::vector<std::string> out;
    for (int c : lat_->p_perfect_class_ids(normalized(primes)))
      out.push_back(lat_->class_label(c));
    return out;
  }

  // Class label of O^P(H) for each class representative H.
  std::map<std::string, std::string> residuals(const std::string& primes) const {
    const PrimeSet p = normalized(primes);
    std::map<std::string, std::string> out;
    for (int c = 0; c < lat_->class_count(); ++c) {
      const int r = lat_->p_residual(lat_->class_rep(c), p);
      out[lat_->class_label(c)] = lat_->class_label(lat_->class_of(r));
    }
    return out;
  }

  std::vector<std::string> idempotent_marks(const std::string& l_label,
                                            const std::string& primes) const {
    const BurnsideElement e = idempotent(l_label, primes);
    std::vector<std::string> out;
    for (const Rat& m : e.marks()) out.push_back(rat_to_string(m));
    return out;
  }

  std::vector<std::string> idempotent_orbit(const std::string& l_label,
                                            const std::string& primes) const {
    const BurnsideElement e = idempotent(l_label, primes);
    std::vector<std::string> out;
    for (const Rat& m : e.orbit_coeffs()) out.push_back(rat_to_string(m));
    return out;
  }

  bool theorem_a_ok(const std::string& primes) const {
    return verify_theorem_a(*ring_, PrimeSet::parse(primes)).verdict;
  }

  std::string marks_json() const { return build_marks_report(*ring_).to_json_string(); }
  std::string idempotents_json(const std::string& primes) const {
    return build_idempotents_report(*ring_, PrimeSet::parse(primes)).to_json_string();
  }
  std::string theorem_a_json(const std::string& primes) const {
    return build_theorem_a_report(*ring_, PrimeSet::parse(primes)).to_json_string();
  }
  std::string indexing_systems_json(const std::string& primes) const {
    return build_indexing_report(*ring_, PrimeSet::parse(primes)).to_json_string();
  }
  std::string splitting_json(const std::string& primes) const {
    return build_splitting_report(*ring_, PrimeSet::parse(primes)).to_json_string();
  }
  std::string report_json(const std::string& primes) const {
    return build_full_report(*ring_, PrimeSet::parse(primes)).to_json_string();
  }
  std::string norm_json(const std::string& from, const std::string& to,
                        const std::string& primes) const {
    return build_norm_report(*ring_, resolve_pair(*lat_, from, to),
                             PrimeSet::parse(primes))
        .to_json_string();
  }
  std::string report_text(const std::string& primes) const {
    return build_full_report(*ring_, PrimeSet::parse(primes)).to_text();
  }

 private:
  PrimeSet normalized(const std::string& primes) const {
    return PrimeSet::parse(primes).normalized(g_->order());
  }
  BurnsideElement idempotent(const std::string& l_label,
                             const std::string& primes) const {
    auto cid = lat_->class_by_label(l_label);
    if (!cid) throw std::invalid_argument("unknown class label '" + l_label + "'");
    return ring_->dress_idempotent(lat_->full_group_id(), lat_->class_rep(*cid),
                                   normalized(primes));
  }

  std::unique_ptr<FiniteGroup> g_;
  std::unique_ptr<SubgroupLattice> lat_;
  std::unique_ptr<BurnsideRing> ring_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact P-local Burnside ring splittings and norm descent";
  m.attr("__version__") = "0.1.0";

  py::class_<Session>(m, "Session")
      .def(py::init<const std::string&, int>(), py::arg("group"),
           py::arg("max_order") = 2000)
      .def_property_readonly("label", &Session::label)
      .def_property_readonly("order", &Session::order)
      .def_property_readonly("degree", &Session::degree)
      .def("subgroup_count", &Session::subgroup_count)
      .def("class_count", &Session::class_count)
      .def("class_labels", &Session::class_labels)
      .def("table_of_marks", &Session::table_of_marks)
      .def("p_perfect_classes", &Session::p_perfect_classes, py::arg("primes") = "all")
      .def("residuals", &Session::residuals, py::arg("primes") = "all")
      .def("idempotent_marks", &Session::idempotent_marks, py::arg("L"),
           py::arg("primes") = "all")
      .def("idempotent_orbit", &Session::idempotent_orbit, py::arg("L"),
           py::arg("primes") = "all")
      .def("theorem_a_ok", &Session::theorem_a_ok, py::arg("primes") = "all")
      .def("marks_json", &Session::marks_json)
      .def("idempotents_json", &Session::idempotents_json, py::arg("primes") = "all")
      .def("theorem_a_json", &Session::theorem_a_json, py::arg("primes") = "all")
      .def("indexing_systems_json", &Session::indexing_systems_json,
           py::arg("primes") = "all")
      .def("splitting_json", &Session::splitting_json, py::arg("primes") = "all")
      .def("report_json", &Session::report_json, py::arg("primes") = "all")
      .def("norm_json", &Session::norm_json, py::arg("from_gens"), py::arg("to_gens"),
           py::arg("primes") = "all")
      .def("report_text", &Session::report_text, py::arg("primes") = "all");
}
