// Python bindings for the njump core. Exact integers cross the boundary as
// Python ints (via decimal strings, so arbitrary precision survives) and
// exact rationals as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "njump/fastpath.hpp"
#include "njump/geometry.hpp"
#include "njump/jump.hpp"
#include "njump/parser.hpp"

namespace py = pybind11;
using namespace njump;

namespace {

py::int_ py_int(const Int& v)
{
    PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
    if (!obj)
        throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

Int to_big_int(const py::int_& v)
{
    py::object s = py::reinterpret_steal<py::object>(PyObject_Str(v.ptr()));
    if (!s)
        throw py::error_already_set();
    return Int(s.cast<std::string>());
}

py::object py_fraction(const Rat& v)
{
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py_int(numerator(v)), py_int(denominator(v)));
}

py::tuple py_point(const ExponentVector& p, int dimension)
{
    py::tuple out(dimension);
    for (int i = 0; i < dimension; ++i)
        out[i] = p[i];
    return out;
}

py::list py_points(const std::vector<ExponentVector>& pts, int dimension)
{
    py::list out;
    for (const auto& p : pts)
        out.append(py_point(p, dimension));
    return out;
}

ExponentVector to_point(const py::sequence& seq, int dimension)
{
    if (static_cast<int>(py::len(seq)) != dimension)
        throw py::value_error("exponent must have exactly " + std::to_string(dimension) +
                              " entries");
    ExponentVector p{};
    for (int i = 0; i < dimension; ++i)
        p[i] = seq[i].cast<std::int64_t>();
    return p;
}

py::dict diagram_dict(const NewtonDiagram& d)
{
    py::dict out;
    out["dimension"] = d.dimension;
    out["convenient"] = d.convenient();
    out["vertices"] = py_points(d.vertices, d.dimension);

    py::list edges;
    for (const auto& [a, b] : d.edges)
        edges.append(py::make_tuple(py_point(a, d.dimension), py_point(b, d.dimension)));
    out["edges"] = std::move(edges);

    py::list facets;
    for (const auto& f : d.facets) {
        py::dict jf;
        jf["vertices"] = py_points(f.vertices, d.dimension);
        py::tuple normal(d.dimension);
        for (int i = 0; i < d.dimension; ++i)
            normal[i] = py_int(f.normal[i]);
        jf["normal"] = std::move(normal);
        jf["offset"] = py_int(f.offset);
        facets.append(std::move(jf));
    }
    out["facets"] = std::move(facets);

    py::list intercepts;
    for (int i = 0; i < d.dimension; ++i) {
        if (d.axis_intercepts[i])
            intercepts.append(*d.axis_intercepts[i]);
        else
            intercepts.append(py::none());
    }
    out["axis_intercepts"] = std::move(intercepts);
    return out;
}

py::dict metrics_dict(const GammaMinusMetrics& m)
{
    py::dict out;
    out["V"] = py_fraction(m.volume);
    if (m.dimension == 3) {
        py::list planes;
        for (const auto& a : m.plane_areas)
            planes.append(py_fraction(a));
        out["P"] = std::move(planes);
    }
    py::list w;
    for (int i = 0; i < m.dimension; ++i)
        w.append(m.axis_lengths[i]);
    out["W"] = std::move(w);
    return out;
}

py::dict report_dict(const JumpReport& r, int dimension, bool keep_trace)
{
    py::dict out;
    out["nu"] = py_int(r.nu_before);
    out["lambda_nd"] = py_int(r.lambda_nd);
    out["method"] = to_string(r.method);
    out["realizing"] = py_points(r.realizing_exponents, dimension);
    out["candidates"] = r.candidates_examined;
    if (r.mu)
        out["mu"] = py_int(*r.mu);

    if (r.method == Method::fastpath) {
        py::list trace;
        for (const auto& row : r.fastpath_trace) {
            py::dict jr;
            jr["i0"] = row.i0;
            jr["a"] = py_int(row.a);
            jr["b"] = py_int(row.b);
            jr["c"] = py_int(row.c);
            jr["value"] = py_int(row.value);
            jr["success"] = row.success;
            trace.append(std::move(jr));
        }
        out["trace"] = std::move(trace);
    } else if (keep_trace) {
        py::list trace;
        for (const auto& row : r.candidate_trace) {
            py::dict jr;
            jr["exponent"] = py_point(row.exponent, dimension);
            jr["nu_after"] = py_int(row.nu_after);
            jr["jump"] = py_int(row.jump);
            trace.append(std::move(jr));
        }
        out["trace"] = std::move(trace);
    }
    return out;
}

// Mirrors the CLI engine dispatch, including its error messages.
JumpReport compute_jump(const Support& s, const std::string& engine,
                        const std::optional<Int>& mu, bool keep_trace)
{
    if (engine != "auto" && engine != "bruteforce" && engine != "fastpath")
        throw py::value_error("engine must be 'auto', 'bruteforce' or 'fastpath'");

    const auto d = build_diagram(s);
    if (!d.convenient())
        fail(ErrorKind::not_convenient,
             "the support is not convenient (axis untouched); the jump is undefined");

    if (mu) {
        if (engine == "fastpath")
            fail(ErrorKind::input_mismatch,
                 "mu selects the degenerate entry point, which never uses the fastpath");
        return lambda_nd_degenerate(s, *mu, keep_trace);
    }

    if (engine == "bruteforce")
        return lambda_nd_bruteforce(s, keep_trace);

    auto match = match_one_face_triple(d);
    if (!match) {
        if (engine == "fastpath")
            fail(ErrorKind::input_mismatch,
                 "the fastpath engine requires a one-face support x^p + y^q + z^r "
                 "with pairwise coprime exponents p >= q >= r >= 2");
        return lambda_nd_bruteforce(s, keep_trace);
    }
    JumpReport report = lambda_nd_fastpath(match->triple);
    for (auto& e : report.realizing_exponents)
        e = unpermute(*match, e);
    std::sort(report.realizing_exponents.begin(), report.realizing_exponents.end());
    return report;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Newton numbers of convenient singularities and their "
              "non-degenerate jump under one-monomial deformations";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::internal)
                PyErr_SetString(PyExc_RuntimeError, e.what());
            else
                PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<Support>(m, "Support")
        .def(py::init([](int dimension, const py::sequence& points) {
                 std::vector<ExponentVector> pts;
                 for (const auto& item : points)
                     pts.push_back(to_point(item.cast<py::sequence>(), dimension));
                 return Support(dimension, std::move(pts));
             }),
             py::arg("dimension"), py::arg("points"))
        .def_property_readonly("dimension", &Support::dimension)
        .def_property_readonly(
            "points", [](const Support& s) { return py_points(s.points(), s.dimension()); })
        .def("contains",
             [](const Support& s, const py::sequence& p) {
                 return s.contains(to_point(p, s.dimension()));
             })
        .def("with_point",
             [](const Support& s, const py::sequence& p) {
                 return s.with_point(to_point(p, s.dimension()));
             })
        .def("__len__", &Support::size)
        .def("__eq__", [](const Support& a, const Support& b) { return a == b; })
        .def("__repr__", [](const Support& s) {
            return "Support(" + std::to_string(s.dimension()) + ", '" + to_canonical_string(s) +
                   "')";
        });

    m.def(
        "parse",
        [](const std::string& text, std::optional<int> dimension) {
            return parse_germ(text, dimension);
        },
        py::arg("text"), py::arg("dimension") = py::none(),
        "Parse a polynomial germ in x, y, z into its support.");

    m.def("to_string", &to_canonical_string, py::arg("support"),
          "Canonical coefficient-free text of a support.");

    m.def("is_convenient", &is_convenient, py::arg("support"));

    m.def(
        "diagram", [](const Support& s) { return diagram_dict(build_diagram(s)); },
        py::arg("support"), "Compact faces of the Newton polyhedron, as a dict.");

    m.def(
        "metrics",
        [](const Support& s) { return metrics_dict(gamma_minus_metrics(build_diagram(s))); },
        py::arg("support"),
        "Exact measures of the gamma-minus region: V, plane areas P, axis lengths W.");

    m.def(
        "newton_number", [](const Support& s) { return py_int(newton_number(s)); },
        py::arg("support"));

    m.def(
        "candidates",
        [](const Support& s) {
            return py_points(enumerate_candidates(s).points, s.dimension());
        },
        py::arg("support"), "Lattice points of gamma-minus without the origin, sorted.");

    m.def(
        "jump_of_candidate",
        [](const Support& s, const py::sequence& exponent) {
            auto row = jump_of_candidate(s, to_point(exponent, s.dimension()));
            py::dict out;
            out["exponent"] = py_point(row.exponent, s.dimension());
            out["nu_after"] = py_int(row.nu_after);
            out["jump"] = py_int(row.jump);
            return out;
        },
        py::arg("support"), py::arg("exponent"),
        "Newton number drop caused by adding one monomial.");

    m.def(
        "lambda_nd",
        [](const Support& s, const std::string& engine, const std::optional<py::int_>& mu,
           bool trace) {
            std::optional<Int> mu_int;
            if (mu)
                mu_int = to_big_int(*mu);
            return report_dict(compute_jump(s, engine, mu_int, trace), s.dimension(), trace);
        },
        py::arg("support"), py::arg("engine") = "auto", py::arg("mu") = py::none(),
        py::arg("trace") = false,
        "Least positive Newton-number drop over all one-monomial deformations.");

    m.def(
        "fastpath",
        [](std::int64_t p, std::int64_t q, std::int64_t r) {
            return report_dict(lambda_nd_fastpath({p, q, r}), 3, false);
        },
        py::arg("p"), py::arg("q"), py::arg("r"),
        "Euclid-based jump of x^p + y^q + z^r for pairwise coprime p >= q >= r >= 2.");

    m.def(
        "extended_gcd",
        [](const py::int_& u, const py::int_& v) {
            auto r = extended_gcd(to_big_int(u), to_big_int(v));
            return py::make_tuple(py_int(r.g), py_int(r.x), py_int(r.y));
        },
        py::arg("u"), py::arg("v"),
        "(g, x, y) with g = gcd(u, v) = x*u + y*v and |x| minimal, for u, v >= 1.");

    m.def(
        "base_identity",
        [](std::int64_t p, std::int64_t q, std::int64_t r) {
            auto abc = base_identity({p, q, r});
            return py::make_tuple(py_int(abc[0]), py_int(abc[1]), py_int(abc[2]));
        },
        py::arg("p"), py::arg("q"), py::arg("r"),
        "(a, b, c), all nonzero, with a*qr + b*pr + c*pq = 1.");

    m.def(
        "forced_witness",
        [](std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t i0) -> py::object {
            FastpathTraceRow row;
            auto witness = forced_witness({p, q, r}, i0, &row);
            py::dict out;
            out["i0"] = row.i0;
            out["a"] = py_int(row.a);
            out["b"] = py_int(row.b);
            out["c"] = py_int(row.c);
            out["value"] = py_int(row.value);
            out["success"] = row.success;
            if (!witness)
                return std::move(out);
            out["exponent"] = py::make_tuple(py_int(Int(p) - witness->a), py_int(-witness->b),
                                             py_int(-witness->c));
            return std::move(out);
        },
        py::arg("p"), py::arg("q"), py::arg("r"), py::arg("i0"),
        "Residue row for the jump value i0; carries the witness exponent on success.");

    m.attr("__version__") = "0.1.0";
}
