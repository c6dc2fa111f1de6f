#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lmck/certify.hpp"
#include "lmck/experiments.hpp"
#include "lmck/version.hpp"

namespace py = pybind11;
using namespace lmck;

namespace {

PrimeModulus prime_from_py(const py::int_& q) {
    PyObject* s = PyObject_Str(q.ptr());
    if (!s) throw py::error_already_set();
    return PrimeModulus(BigInt(py::reinterpret_steal<py::str>(s).cast<std::string>()));
}

py::int_ big_to_py(const BigInt& v) {
    const std::string s = v.str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list bigs_to_py(const std::vector<BigInt>& xs) {
    py::list out;
    for (const auto& x : xs) out.append(big_to_py(x));
    return out;
}

Seed seed_from(std::uint64_t master, std::uint64_t stream) { return Seed{master, stream}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "random d-complex homology: samplers, GF(q) ranks, Smith normal form";
    m.attr("__version__") = kToolVersion;
    m.attr("RNG_ALGORITHM") = kRngAlgorithm;

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<ComplexSpec>(m, "ComplexSpec")
        .def(py::init<int, int>(), py::arg("n"), py::arg("d"))
        .def_property_readonly("n", &ComplexSpec::n)
        .def_property_readonly("d", &ComplexSpec::d)
        .def("face_count", &ComplexSpec::face_count)
        .def("row_count", &ComplexSpec::row_count)
        .def("cycle_dim", &ComplexSpec::cycle_dim)
        .def("__repr__", [](const ComplexSpec& s) {
            return "ComplexSpec(n=" + std::to_string(s.n()) + ", d=" + std::to_string(s.d()) + ")";
        });

    py::class_<DComplex>(m, "DComplex")
        .def(py::init<ComplexSpec>(), py::arg("spec"))
        .def(py::init<ComplexSpec, std::vector<FaceId>>(), py::arg("spec"), py::arg("faces"))
        .def_property_readonly("spec", &DComplex::spec)
        .def_property_readonly("faces", &DComplex::faces)
        .def("face_count", &DComplex::face_count)
        .def("contains", &DComplex::contains)
        .def("with_face", &DComplex::with_face)
        .def("__eq__", [](const DComplex& a, const DComplex& b) { return a == b; })
        .def("__repr__", [](const DComplex& y) {
            return "DComplex(n=" + std::to_string(y.spec().n()) +
                   ", d=" + std::to_string(y.spec().d()) +
                   ", faces=" + std::to_string(y.face_count()) + ")";
        });

    m.def("rank_face", &rank_face, py::arg("spec"), py::arg("vertices"));
    m.def("unrank_face", &unrank_face, py::arg("spec"), py::arg("id"));
    m.def(
        "boundary",
        [](const ComplexSpec& spec, const std::vector<Vertex>& face) {
            py::list out;
            for (const auto& f : boundary(spec, face))
                out.append(py::make_tuple(f.sign, f.vertices));
            return out;
        },
        py::arg("spec"), py::arg("face"));

    m.def("union_complexes", &union_complexes);
    m.def(
        "read_complex",
        [](const std::string& text) {
            std::istringstream in(text);
            return read_complex(in);
        },
        py::arg("text"));
    m.def("read_complex_file", &read_complex_file, py::arg("path"));
    m.def(
        "write_complex",
        [](const DComplex& y) { return write_complex_string(y); },
        py::arg("complex"));
    m.def("write_complex_file",
          [](const std::string& path, const DComplex& y) { write_complex_file(path, y); });

    m.def(
        "sample_bernoulli",
        [](const ComplexSpec& spec, double p, std::uint64_t seed, std::uint64_t stream) {
            return sample_bernoulli(spec, p, seed_from(seed, stream));
        },
        py::arg("spec"), py::arg("p"), py::arg("seed"), py::arg("stream") = 0);
    m.def(
        "sample_uniform_m",
        [](const ComplexSpec& spec, std::int64_t mm, std::uint64_t seed, std::uint64_t stream) {
            return sample_uniform_m(spec, mm, seed_from(seed, stream));
        },
        py::arg("spec"), py::arg("m"), py::arg("seed"), py::arg("stream") = 0);
    m.def(
        "sample_ordering",
        [](const ComplexSpec& spec, std::uint64_t seed, std::uint64_t stream) {
            return sample_ordering(spec, seed_from(seed, stream));
        },
        py::arg("spec"), py::arg("seed"), py::arg("stream") = 0);

    m.def(
        "boundary_rank",
        [](const DComplex& y, const py::int_& q) { return boundary_rank(y, prime_from_py(q)); },
        py::arg("complex"), py::arg("q"));
    m.def(
        "betti_mod_q",
        [](const DComplex& y, const py::int_& q) { return betti_mod_q(y, prime_from_py(q)); },
        py::arg("complex"), py::arg("q"));
    m.def(
        "is_zero_mod_q",
        [](const DComplex& y, const py::int_& q) { return is_zero_mod_q(y, prime_from_py(q)); },
        py::arg("complex"), py::arg("q"));
    m.def("is_zero_integer",
          [](const DComplex& y) { return is_zero_integer(y); });
    m.def("cycle_dim", [](const ComplexSpec& spec) { return cycle_dim(spec); });

    m.def(
        "smith_normal_form",
        [](const DComplex& y) { return bigs_to_py(smith_normal_form(y).divisors); },
        py::arg("complex"));
    m.def(
        "torsion_order_bound",
        [](const ComplexSpec& spec) { return big_to_py(torsion_order_bound(spec)); },
        py::arg("spec"));
    m.def(
        "hadamard_column_bound",
        [](const DComplex& y) { return big_to_py(hadamard_column_bound(y)); },
        py::arg("complex"));

    m.def(
        "homology_summary",
        [](const DComplex& y, const std::vector<py::int_>& primes, bool integer) {
            std::vector<PrimeModulus> qs;
            for (const auto& q : primes) qs.push_back(prime_from_py(q));
            SummaryPolicy policy;
            policy.force_consensus = !integer;
            const HomologySummary s = summary(y, qs, policy);
            py::dict out;
            out["cycle_dim"] = s.cycle_dim;
            out["betti_rational"] = s.betti_rational;
            out["betti_method"] = s.betti_exact ? "snf" : "modular-consensus";
            py::dict mod;
            for (const auto& [q, b] : s.betti_mod) mod[big_to_py(q)] = b;
            out["betti_mod"] = mod;
            if (integer) {
                out["divisors"] = bigs_to_py(s.divisors.divisors);
                out["torsion_order"] = big_to_py(s.divisors.torsion_order());
                out["is_zero_integer"] = s.betti_rational == 0 && s.divisors.all_unit();
            }
            return out;
        },
        py::arg("complex"), py::arg("primes") = std::vector<py::int_>{},
        py::arg("integer") = false);

    m.def(
        "reducing_set",
        [](const DComplex& y, const py::int_& q) { return reducing_set(y, prime_from_py(q)); },
        py::arg("complex"), py::arg("q"));

    m.def(
        "run_process",
        [](const ComplexSpec& spec, const std::vector<FaceId>& ordering, const py::int_& q,
           std::optional<std::int64_t> stop_at) {
            const ProcessTrace t = run_process(spec, ordering, prime_from_py(q), stop_at);
            py::dict out;
            out["ordering"] = t.ordering;
            out["indicators"] = t.indicators;
            out["dims"] = t.dims;
            return out;
        },
        py::arg("spec"), py::arg("ordering"), py::arg("q"), py::arg("stop_at") = py::none());

    m.def(
        "mean_reducing_size",
        [](const ComplexSpec& spec, std::int64_t mm, const py::int_& q, std::int64_t trials,
           std::uint64_t seed, std::int64_t sample_faces) {
            const MeanEstimate e =
                mean_reducing_size(spec, mm, prime_from_py(q), trials, Seed{seed, 0}, sample_faces);
            return py::make_tuple(e.mean, e.stderr_);
        },
        py::arg("spec"), py::arg("m"), py::arg("q"), py::arg("trials"), py::arg("seed"),
        py::arg("sample_faces") = 0);

    m.def(
        "estimate_mtilde",
        [](const ComplexSpec& spec, const py::int_& q, std::int64_t trials, std::uint64_t seed,
           std::int64_t sample_faces) {
            const MTildeEstimate e =
                estimate_mtilde(spec, prime_from_py(q), trials, Seed{seed, 0}, sample_faces);
            py::dict out;
            out["q"] = big_to_py(e.q);
            out["mtilde_hat"] = e.estimate;
            out["trials"] = e.trials;
            out["target"] = e.target;
            out["mean_at_estimate"] = e.mean_at_estimate;
            out["stderr_at_estimate"] = e.stderr_at_estimate;
            out["mean_below"] = e.mean_below;
            out["stderr_below"] = e.stderr_below;
            return out;
        },
        py::arg("spec"), py::arg("q"), py::arg("trials"), py::arg("seed"),
        py::arg("sample_faces") = 0);

    m.def(
        "certify_zero",
        [](const ComplexSpec& spec, double p, std::uint64_t seed, std::uint64_t stream) {
            const Certificate c = certify_zero(spec, p, Seed{seed, stream});
            py::dict out;
            out["p"] = c.p;
            out["stream_y1"] = c.stream_y1;
            out["stream_y2"] = c.stream_y2;
            out["faces_y1"] = c.faces_y1;
            out["faces_y2"] = c.faces_y2;
            out["faces_union"] = c.faces_union;
            out["betti_rational_y1"] = c.betti_rational_y1;
            out["torsion_primes_y1"] = bigs_to_py(c.torsion_primes_y1);
            out["torsion_complete"] = c.torsion_complete;
            out["verdict"] = to_string(c.verdict);
            return out;
        },
        py::arg("spec"), py::arg("p"), py::arg("seed"), py::arg("stream") = 0);
}
