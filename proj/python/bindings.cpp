#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "fusion_exp/dlp.hpp"
#include "fusion_exp/protocols.hpp"
#include "fusion_exp/reductions.hpp"
#include "fusion_exp/serialize.hpp"
#include "fusion_exp/symbolic.hpp"

namespace py = pybind11;

// Python int <-> mpz_class through hex strings (not subject to the
// int/str digit limit).
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr()) || PyBool_Check(src.ptr())) return false;
    const std::string hex = py::str(py::module_::import("builtins").attr("format")(src, "x"));
    return value.set_str(hex, 16) == 0;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    const std::string hex = v.get_str(16);
    return PyLong_FromString(hex.c_str(), nullptr, 16);
  }
};

// Parameter handles are shared_ptr<const T> in the library; Python holds
// shared_ptr<T> of the same object.
template <typename T>
struct const_shared_caster {
  using Mut = std::shared_ptr<T>;
  PYBIND11_TYPE_CASTER(std::shared_ptr<const T>, make_caster<T>::name);

  bool load(handle src, bool convert) {
    make_caster<Mut> inner;
    if (!inner.load(src, convert)) return false;
    value = cast_op<Mut>(inner);
    return true;
  }

  static handle cast(const std::shared_ptr<const T>& src, return_value_policy,
                     handle parent) {
    return make_caster<Mut>::cast(std::const_pointer_cast<T>(src),
                                  return_value_policy::take_ownership, parent);
  }
};

template <>
struct type_caster<std::shared_ptr<const fexp::FieldParams>>
    : const_shared_caster<fexp::FieldParams> {};
template <>
struct type_caster<std::shared_ptr<const fexp::GroupParams>>
    : const_shared_caster<fexp::GroupParams> {};
}  // namespace pybind11::detail

namespace {

using namespace fexp;

PyObject* g_error = nullptr;

std::vector<Int> residues(const FusionBase& b) {
  std::vector<Int> out;
  for (const auto& c : b.components()) out.push_back(c.residue());
  return out;
}

FusionBase make_base(const GroupParamsPtr& g, const FieldParamsPtr& f,
                     const std::vector<Int>& residues) {
  std::vector<GroupElement> c;
  for (const auto& r : residues) c.emplace_back(g, r);
  return FusionBase(g, f, std::move(c));
}

DlogOracle oracle_for(const std::string& solver, std::uint64_t seed) {
  if (solver == "bruteforce") return make_bruteforce_dlog_oracle();
  if (solver == "bsgs") return make_bsgs_dlog_oracle();
  if (solver == "rho") return make_rho_dlog_oracle(seed);
  throw Error(ErrorCode::kInvalidArgument, "unknown solver " + solver);
}

std::string repr_vec(const char* name, const std::vector<Int>& v) {
  std::string s = std::string(name) + "([";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_decimal(v[i]);
  return s + "])";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fusion exponentiation over G_q^n with exponents in F_{q^n}";
  m.attr("__version__") = "0.1.0";

  g_error = PyErr_NewException("fusion_exp.FusionExpError", PyExc_ValueError, nullptr);
  m.attr("FusionExpError") = py::handle(g_error);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::reinterpret_borrow<py::object>(g_error)(e.what());
      err.attr("code") = error_code_name(e.code());
      if (auto* v = dynamic_cast<const VerifyFailedError*>(&e)) err.attr("index") = v->index();
      PyErr_SetObject(g_error, err.ptr());
    }
  });

  py::class_<Rng>(m, "Rng").def(py::init<std::uint64_t>(), py::arg("seed"));

  // --- field ---------------------------------------------------------------
  py::class_<FieldParams, std::shared_ptr<FieldParams>>(m, "FieldParams")
      .def(py::init([](const Int& q, std::size_t n, std::vector<Int> f_low) {
             return std::const_pointer_cast<FieldParams>(make_field_params(q, n, std::move(f_low)));
           }),
           py::arg("q"), py::arg("n"), py::arg("f_low"))
      .def_property_readonly("q", &FieldParams::q)
      .def_property_readonly("n", &FieldParams::n)
      .def_property_readonly("f_low", &FieldParams::f_low)
      .def_property_readonly("order", &FieldParams::order)
      .def("__eq__", [](const FieldParams& a, const FieldParams& b) { return a == b; })
      .def("to_json", [](const FieldParams& p) { return to_json(p).dump(); })
      .def_static("from_json",
                  [](const std::string& s) { return field_params_from_json(parse_json(s)); });

  m.def("is_irreducible",
        [](const Int& q, const std::vector<Int>& poly) { return is_irreducible(q, poly); },
        py::arg("q"), py::arg("poly"), "poly is little-endian and includes the leading 1");
  m.def("find_irreducible", &find_irreducible, py::arg("q"), py::arg("n"), py::arg("seed"));

  py::class_<FieldElement>(m, "FieldElement")
      .def(py::init<FieldParamsPtr, std::vector<Int>>(), py::arg("field"), py::arg("coeffs"))
      .def_static("zero", &FieldElement::zero)
      .def_static("one", &FieldElement::one)
      .def_static("random", &FieldElement::random)
      .def_property_readonly("field", &FieldElement::params)
      .def_property_readonly("coeffs", &FieldElement::coeffs)
      .def("is_zero", &FieldElement::is_zero)
      .def("inverse", &fe_inv)
      .def("lambda_matrix",
           [](const FieldElement& y) {
             const auto l = lambda_matrix(y);
             std::vector<std::vector<Int>> rows(l.n(), std::vector<Int>(l.n()));
             for (std::size_t i = 0; i < l.n(); ++i)
               for (std::size_t j = 0; j < l.n(); ++j) rows[i][j] = l.at(i, j);
             return rows;
           })
      .def("mixing_report",
           [](const FieldElement& y) {
             const auto r = lambda_mixing_report(y);
             py::dict d;
             d["zero_entry_count"] = r.zero_entry_count;
             d["is_reducible"] = r.is_reducible;
             return d;
           })
      .def("__add__", &fe_add)
      .def("__sub__", &fe_sub)
      .def("__mul__", &fe_mul)
      .def("__neg__", &fe_neg)
      .def("__eq__", [](const FieldElement& a, const FieldElement& b) { return a == b; })
      .def("__repr__", [](const FieldElement& x) { return repr_vec("FieldElement", x.coeffs()); });

  m.def("symbolic_lambda", [](std::size_t n) {
    const auto sym = symbolic_lambda(reference_field(n));
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : sym) {
      rows.emplace_back();
      for (const auto& form : row) rows.back().push_back(format_linear_form(form));
    }
    return rows;
  }, py::arg("n"), "Symbolic lambda matrix for the reference modulus of degree n (1..5)");

  // --- group ---------------------------------------------------------------
  py::class_<GroupParams, std::shared_ptr<GroupParams>>(m, "GroupParams")
      .def(py::init([](const Int& modulus, const Int& q, const Int& g) {
             return std::const_pointer_cast<GroupParams>(make_group_params(modulus, q, g));
           }),
           py::arg("modulus"), py::arg("q"), py::arg("generator"))
      .def_static("generate", &gen_group_params, py::arg("q_bits"), py::arg("seed"))
      .def_property_readonly("modulus", &GroupParams::modulus)
      .def_property_readonly("q", &GroupParams::q)
      .def_property_readonly("generator", &GroupParams::generator)
      .def("to_json", [](const GroupParams& p) { return to_json(p).dump(); });

  py::class_<GroupElement>(m, "GroupElement")
      .def(py::init<GroupParamsPtr, Int>(), py::arg("group"), py::arg("residue"))
      .def_static("identity", &GroupElement::identity)
      .def_static("generator", &GroupElement::generator)
      .def_property_readonly("residue", &GroupElement::residue)
      .def_property_readonly("group", &GroupElement::params)
      .def("is_identity", &GroupElement::is_identity)
      .def("inverse", [](const GroupElement& a) { return g_inv(a); })
      .def("__mul__", [](const GroupElement& a, const GroupElement& b) { return g_mul(a, b); })
      .def("__pow__", [](const GroupElement& a, const Int& e) { return g_pow(a, e); })
      .def("__eq__", [](const GroupElement& a, const GroupElement& b) { return a == b; })
      .def("__repr__",
           [](const GroupElement& a) { return "GroupElement(" + to_decimal(a.residue()) + ")"; });

  // --- fusion --------------------------------------------------------------
  py::class_<FusionBase>(m, "FusionBase")
      .def(py::init(&make_base), py::arg("group"), py::arg("field"), py::arg("residues"))
      .def_static("identity", &FusionBase::identity)
      .def_static("random", &FusionBase::random)
      .def_property_readonly("residues", &residues)
      .def_property_readonly("group", &FusionBase::group)
      .def_property_readonly("field", &FusionBase::field)
      .def("is_identity", [](const FusionBase& a) { return is_identity(a); })
      .def("inverse", &fb_inv)
      .def("__mul__", &fb_mul)
      .def("__pow__", [](const FusionBase& a, const FieldElement& x) { return fusion_pow(a, x); })
      .def("__eq__", [](const FusionBase& a, const FusionBase& b) { return a == b; })
      .def("__repr__", [](const FusionBase& a) { return repr_vec("FusionBase", residues(a)); });

  m.def("fusion_pow", [](const FusionBase& a, const FieldElement& x) { return fusion_pow(a, x); });
  m.def("scalar_embed", &scalar_embed, py::arg("g"), py::arg("x"));
  m.def("unit_embed", &unit_embed, py::arg("g"), py::arg("field"));

  // --- dlp -----------------------------------------------------------------
  m.def("dlog_bruteforce",
        [](const GroupElement& g, const GroupElement& y) { return dlog_bruteforce(g, y); });
  m.def("dlog_bsgs", [](const GroupElement& g, const GroupElement& y) { return dlog_bsgs(g, y); });
  m.def("dlog_pollard_rho",
        [](const GroupElement& g, const GroupElement& y, std::uint64_t seed) {
          return dlog_pollard_rho(g, y, seed);
        },
        py::arg("g"), py::arg("y"), py::arg("seed") = 1);
  m.def("fdlog",
        [](const FusionBase& base, const FusionBase& target, const std::string& solver,
           std::uint64_t seed) {
          if (solver == "exhaustive") return fdlog_bruteforce(base, target);
          return fdlog_solve(base, target, oracle_for(solver, seed));
        },
        py::arg("base"), py::arg("target"), py::arg("solver") = "bsgs", py::arg("seed") = 1);

  // --- reductions ----------------------------------------------------------
  m.def("run_reduction_matrix",
        [](const GroupParamsPtr& g, const FieldParamsPtr& f, std::uint64_t trials,
           std::uint64_t seed) {
          return py::module_::import("json").attr("loads")(
              to_json(run_reduction_matrix(g, f, trials, seed)).dump());
        },
        py::arg("group"), py::arg("field"), py::arg("trials"), py::arg("seed") = 1);

  // --- protocols -----------------------------------------------------------
  py::class_<FusionKeyPair>(m, "FusionKeyPair")
      .def_readonly("secret", &FusionKeyPair::secret)
      .def_readonly("public_key", &FusionKeyPair::public_key);
  m.def("fdh_keygen", &fdh_keygen, py::arg("base"), py::arg("rng"));
  m.def("fdh_shared", &fdh_shared, py::arg("mine"), py::arg("their_public"));

  py::class_<ElGamalCiphertext>(m, "ElGamalCiphertext")
      .def_readonly("c1", &ElGamalCiphertext::c1)
      .def_readonly("c2", &ElGamalCiphertext::c2);
  m.def("felgamal_keygen", &felgamal_keygen, py::arg("base"), py::arg("rng"));
  m.def("felgamal_encrypt", &felgamal_encrypt, py::arg("base"), py::arg("public_key"),
        py::arg("msg"), py::arg("rng"));
  m.def("felgamal_decrypt", &felgamal_decrypt, py::arg("secret"), py::arg("ciphertext"));

  py::class_<VssShare>(m, "VssShare")
      .def(py::init<std::size_t, FieldElement>(), py::arg("index"), py::arg("value"))
      .def_readwrite("index", &VssShare::index)
      .def_readwrite("value", &VssShare::value);
  py::class_<VssDealing>(m, "VssDealing")
      .def_readonly("threshold", &VssDealing::threshold)
      .def_readonly("share_count", &VssDealing::share_count)
      .def_readwrite("shares", &VssDealing::shares)
      .def_readonly("commitments", &VssDealing::commitments);
  m.def("vss_deal", &vss_deal, py::arg("secret"), py::arg("t"), py::arg("m"), py::arg("base"),
        py::arg("rng"));
  m.def("vss_verify", &vss_verify, py::arg("dealing"), py::arg("index"));
  m.def("vss_reconstruct",
        [](const std::vector<VssShare>& shares) { return vss_reconstruct(shares); });
  m.def("vss_reconstruct_verified",
        [](const VssDealing& d, const std::vector<VssShare>& shares) {
          return vss_reconstruct_verified(d, shares);
        });
}
